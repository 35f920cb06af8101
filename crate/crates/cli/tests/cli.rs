use std::io::Write;
use std::process::{Command, Output, Stdio};

fn rimhook(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rimhook"))
        .args(args)
        .env_remove("RIMHOOK_MAX_CELLS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const DOMINO: &str = r#"{"n":4,"m":2,"arcs":[[1,5,1],[2,4,2],[3,7,1],[6,8,2]]}"#;

#[test]
fn count_noncrossing_two_colored() {
    let o = rimhook(&["count", "--family", "noncrossing2", "--n", "4"], "");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "588\n");
}

#[test]
fn count_table_agrees_with_closed_form() {
    let o = rimhook(&["count", "--family", "oscillating", "--m", "3", "--n-max", "3", "--json"], "");
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[3]["count"], "405");
    assert!(rows.iter().all(|r| r["count"] == r["closed_form"]));
}

#[test]
fn verify_is_byte_stable_and_passes() {
    let args = ["verify", "--suite", "all", "--n-max", "3", "--seed", "7", "--json", "--jobs", "2"];
    let a = rimhook(&args, "");
    let b = rimhook(&args, "");
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["calibration"]["placement"], "column_slide");
    assert_eq!(v["calibration"]["phi_composed_with_conjugation"], false);
    assert_eq!(v["calibration"]["domino_example_arcs_by_arm"]["1"], serde_json::json!([[1, 5], [3, 7]]));
    assert!(v.get("timings_ms").is_none());
}

#[test]
fn verify_writes_report_file() {
    let path = std::env::temp_dir().join(format!("rimhook-report-{}.json", std::process::id()));
    let o = rimhook(&["verify", "--suite", "phi", "--m", "3", "--n-max", "2", "--report", path.to_str().unwrap()], "");
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("PASS (9 checks, 0 failed)\n"), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["m"], 3);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn convert_round_trips() {
    let o = rimhook(&["convert", "--from", "matching", "--to", "oscillating"], &format!("{DOMINO}\n"));
    assert!(o.status.success());
    assert_eq!(stdout(&o), "{\"m\":2,\"shapes\":[[],[1,1],[2,2],[3,3],[3,1],[1,1],[2,2],[2],[]]}\n");
    let back = rimhook(&["convert", "--from", "oscillating", "--to", "matching"], &stdout(&o));
    let v: serde_json::Value = serde_json::from_slice(&back.stdout).unwrap();
    assert_eq!(v, serde_json::from_str::<serde_json::Value>(DOMINO).unwrap());

    let walk = rimhook(&["convert", "--from", "matching", "--to", "guywalk"], r#"{"n":2,"m":2,"arcs":[[1,4,1],[2,3,2]]}"#);
    assert_eq!(stdout(&walk), "\"RUDL\"\n");

    let hp = r#"{"m":2,"hooks":[{"content":2,"arm":1},{"content":1,"arm":2}]}"#;
    let pq = rimhook(&["convert", "--from", "hook-permutation", "--to", "tableau-pair"], hp);
    let back = rimhook(&["convert", "--from", "tableau-pair", "--to", "hook-permutation"], &stdout(&pq));
    assert_eq!(
        serde_json::from_slice::<serde_json::Value>(&back.stdout).unwrap(),
        serde_json::from_str::<serde_json::Value>(hp).unwrap()
    );
}

#[test]
fn convert_packing_through_oscillating() {
    let input = r#"{"n":2,"m":2,"arcs":[[1,2,1],[3,4,2]]}"#;
    let p = rimhook(&["convert", "--from", "matching", "--to", "packing"], input);
    assert!(p.status.success(), "{}", String::from_utf8_lossy(&p.stderr));
    let back = rimhook(&["convert", "--from", "packing", "--to", "matching"], &stdout(&p));
    assert_eq!(
        serde_json::from_slice::<serde_json::Value>(&back.stdout).unwrap(),
        serde_json::from_str::<serde_json::Value>(input).unwrap()
    );
}

#[test]
fn convert_reports_line_numbers_and_exit_codes() {
    let o = rimhook(&["convert", "--from", "matching", "--to", "oscillating"], "\n{\"n\":1,\"m\":2,\"arcs\":[[1,2,3]]}\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("line 2: rejected"));

    let o = rimhook(&["convert", "--from", "matching", "--to", "oscillating"], "{not json\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("line 1: malformed JSON"));

    let o = rimhook(&["convert", "--from", "matching", "--to", "tableau-pair"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cell_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_rimhook"))
        .args(["render", "--kind", "partition", "5,4,2,2"])
        .env("RIMHOOK_MAX_CELLS", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap of 10"));
}

#[test]
fn render_partition_and_tableau() {
    let o = rimhook(&["render", "--kind", "partition", "3,1"], "");
    assert_eq!(stdout(&o), "+---+---+---+\n|   |   |   |\n+---+---+---+\n|   |\n+---+\n");
    let t = r#"{"m":2,"shape":[2,2],"hooks":[{"content":1,"cells":[[2,1],[1,1]]},{"content":2,"cells":[[2,2],[1,2]]}]}"#;
    let o = rimhook(&["render", "--kind", "tableau"], t);
    assert_eq!(stdout(&o), "+---+---+\n| 1 | 2 |\n+   +   +\n| 1 | 2 |\n+---+---+\n");
}

#[test]
fn render_matching_and_walk() {
    let o = rimhook(&["render", "--kind", "matching", DOMINO], "");
    assert_eq!(
        stdout(&o),
        "        +---------------+\n+-------|-------+       |\n|   +===|===+   |   +===|===+\n1   2   3   4   5   6   7   8\n"
    );
    let o = rimhook(&["render", "--kind", "walk", "RUDL"], "");
    assert_eq!(stdout(&o), "→↑↓←\n. *\no *\n");
}

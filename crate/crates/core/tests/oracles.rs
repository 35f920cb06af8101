//! Brute-force oracles checked against the fast implementations.

use std::collections::BTreeSet;

use rimhook::enumeration::{count_family, Family};
use rimhook::matchings::{enumerate_matchings, Arc};
use rimhook::oscillating::enumerate_oscillating;
use rimhook::paths::{from_guy_walk, from_packing, to_guy_walk, to_packing, Dir, GuyWalk};
use rimhook::shapes::{partitions_of, removable_rim_hooks};
use rimhook::tableaux::{insert, tableaux_of_shape, uninsert};
use rimhook::{BigCount, ColoredMatching, Content, HookTableau, Partition};

/// Largest `k` such that some `k` arcs of one color pairwise cross (or nest),
/// by trying every subset.
fn brute_stats(mt: &ColoredMatching) -> (usize, usize) {
    let arcs = mt.arcs();
    let (mut cr, mut ne) = (0, 0);
    for mask in 1u32..(1 << arcs.len()) {
        let chosen: Vec<&Arc> = (0..arcs.len()).filter(|b| mask >> b & 1 == 1).map(|b| &arcs[b]).collect();
        if chosen.iter().any(|a| a.color != chosen[0].color) {
            continue;
        }
        let k = chosen.len();
        let pairwise = |rel: &dyn Fn(&Arc, &Arc) -> bool| {
            chosen.iter().enumerate().all(|(x, a)| chosen[x + 1..].iter().all(|b| rel(a, b)))
        };
        // `chosen` is in opener order.
        if pairwise(&|a, b| a.opener < b.opener && b.opener < a.closer && a.closer < b.closer) {
            cr = cr.max(k);
        }
        if pairwise(&|a, b| a.opener < b.opener && b.closer < a.closer) {
            ne = ne.max(k);
        }
    }
    (cr, ne)
}

#[test]
fn crossing_and_nesting_match_subset_oracle() {
    for m in 1..=2 {
        for n in 0..=4 {
            for mt in enumerate_matchings(n, m) {
                assert_eq!((mt.crossing_number(), mt.nesting_number()), brute_stats(&mt), "{mt}");
            }
        }
    }
}

#[test]
fn two_line_style_matching_stats() {
    let mt = ColoredMatching::from_triples(
        7,
        2,
        &[(1, 7, 1), (3, 12, 1), (4, 11, 1), (9, 10, 1), (2, 6, 2), (5, 14, 2), (8, 13, 2)],
    )
    .unwrap();
    let stats = (mt.crossing_number(), mt.nesting_number());
    assert_eq!(stats, brute_stats(&mt));
    assert_eq!(stats, (2, 3));
}

#[test]
fn k_noncrossing_iff_every_color_is() {
    for mt in enumerate_matchings(3, 2) {
        for k in 1..=3 {
            let per_color = (1..=2).all(|c| {
                let arcs: Vec<Arc> = mt.arcs().iter().filter(|a| a.color == c).map(|a| Arc { color: 1, ..*a }).collect();
                let mono = ColoredMatching::new(arcs.len(), 1, relabel(&arcs)).unwrap();
                brute_stats(&mono).0 < k
            });
            assert_eq!(mt.is_k_noncrossing(k), per_color, "{mt} k={k}");
        }
    }
}

/// Renumbers the endpoints of a set of arcs to `1..=2k`, keeping their order.
fn relabel(arcs: &[Arc]) -> Vec<Arc> {
    let mut points: Vec<Content> = arcs.iter().flat_map(|a| [a.opener, a.closer]).collect();
    points.sort_unstable();
    let rank = |v: Content| points.binary_search(&v).unwrap() as Content + 1;
    arcs.iter().map(|a| Arc { opener: rank(a.opener), closer: rank(a.closer), color: a.color }).collect()
}

/// Every tableau `T` with up to three contents and every outer rim hook
/// target: brute-force the preimages of insertion and compare with `uninsert`.
#[test]
fn uninsert_matches_brute_force_preimages() {
    for m in 1..=3 {
        for k in 1..=3usize {
            let contents: Vec<Content> = (1..=k as Content).collect();
            for shape in partitions_of(m * k) {
                for t in tableaux_of_shape(m, &shape, &contents) {
                    for hook in removable_rim_hooks(&shape, m) {
                        let target = shape.without_cells(hook.cells()).unwrap();
                        let mut preimages = Vec::new();
                        for &r in &contents {
                            let rest: Vec<Content> = contents.iter().copied().filter(|&c| c != r).collect();
                            for p in tableaux_of_shape(m, &target, &rest) {
                                for arm in 1..=m {
                                    let h = HookTableau::new(m, arm, r).unwrap();
                                    if insert(&p, &h).as_ref() == Ok(&t) {
                                        preimages.push((p.clone(), h));
                                    }
                                }
                            }
                        }
                        assert_eq!(preimages.len(), 1, "m={m} T=\n{t}target {target}");
                        assert_eq!(uninsert(&t, &target).unwrap(), preimages[0]);
                    }
                }
            }
        }
    }
}

#[test]
fn lifo_is_the_only_noncrossing_pairing() {
    for n in 0..=3 {
        for mt in enumerate_matchings(n, 2).filter(ColoredMatching::is_noncrossing) {
            let w = to_guy_walk(&mt).unwrap();
            let word: Vec<Dir> = w.steps().to_vec();
            let same_word: Vec<ColoredMatching> = enumerate_matchings(n, 2)
                .filter(|other| to_word(other) == word)
                .collect();
            let noncrossing: Vec<_> = same_word.iter().filter(|x| x.is_noncrossing()).collect();
            assert_eq!(noncrossing, vec![&from_guy_walk(&w)]);
        }
    }
}

fn to_word(mt: &ColoredMatching) -> Vec<Dir> {
    let mut word = vec![Dir::R; 2 * mt.n()];
    for a in mt.arcs() {
        let (o, c) = if a.color == 1 { (Dir::R, Dir::L) } else { (Dir::U, Dir::D) };
        word[a.opener as usize - 1] = o;
        word[a.closer as usize - 1] = c;
    }
    word
}

#[test]
fn packings_two_routes() {
    for n in 0..=4 {
        let direct = count_family(Family::Packings, n, 2);
        let images: BTreeSet<_> = enumerate_oscillating(n, 2, Some(2)).map(|o| to_packing(&o).unwrap()).collect();
        assert_eq!(direct, BigCount::from(images.len()), "n={n}");
    }
}

/// Flat steps of `E` are exactly the steps between two shapes whose rows
/// (after conjugation) have equal lengths.
#[test]
fn flat_steps_are_vertical_dominoes() {
    for n in 1..=4 {
        for o in enumerate_oscillating(n, 2, Some(2)) {
            let p = to_packing(&o).unwrap();
            let e = p.e().heights();
            let rows: Vec<Partition> = o.shapes().iter().map(Partition::conjugate).collect();
            for i in 0..2 * n {
                let balanced = |q: &Partition| q.part(1) == q.part(2);
                let flat = e[i] == 0 && e[i + 1] == 0;
                assert_eq!(flat, balanced(&rows[i]) && balanced(&rows[i + 1]), "{o} step {}", i + 1);
            }
            assert_eq!(from_packing(&p).unwrap(), o);
        }
    }
}

#[test]
fn walks_round_trip() {
    for n in 0..=4 {
        for w in rimhook::paths::guy_walks(n) {
            let mt = from_guy_walk(&w);
            assert!(mt.is_noncrossing());
            assert_eq!(to_guy_walk(&mt).unwrap(), w);
        }
    }
    let w: GuyWalk = "RUUDRUURDLDLLUDD".parse().unwrap();
    assert_eq!(to_guy_walk(&from_guy_walk(&w)).unwrap(), w);
}

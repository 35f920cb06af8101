//! Exact counting: closed forms generic over the integer type, counts by
//! exhaustive generation, the Catalan product identity and the joint
//! crossing/nesting distribution.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{FromPrimitive, Num};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matchings::matching_shards;
use crate::oscillating::oscillating_shards;
use crate::paths::{guy_walks, packings};
use crate::shapes::{partitions_of, removable_rim_hooks, Partition};
use crate::BigCount;

fn lift<T: FromPrimitive>(x: usize) -> T {
    T::from_usize(x).expect("value fits the count type")
}

/// `C(n, k)`.
pub fn binomial<T: Num + FromPrimitive + Clone>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(T::one(), |acc, i| acc * lift::<T>(n - i) / lift::<T>(i + 1))
}

/// `C_n = C(2n, n) / (n + 1)`.
pub fn catalan<T: Num + FromPrimitive + Clone>(n: usize) -> T {
    binomial::<T>(2 * n, n) / lift::<T>(n + 1)
}

/// `(2n − 1)!! = 1·3·5⋯(2n − 1)`, the number of perfect matchings on `[2n]`.
pub fn double_factorial_odd<T: Num + FromPrimitive + Clone>(n: usize) -> T {
    (0..n).fold(T::one(), |acc, i| acc * lift::<T>(2 * i + 1))
}

pub fn factorial<T: Num + FromPrimitive + Clone>(n: usize) -> T {
    (1..=n).fold(T::one(), |acc, i| acc * lift::<T>(i))
}

pub fn power<T: Num + FromPrimitive + Clone>(base: usize, exp: usize) -> T {
    (0..exp).fold(T::one(), |acc, _| acc * lift::<T>(base))
}

/// `(2n − 1)!!·mⁿ`.
pub fn colored_matching_count<T: Num + FromPrimitive + Clone>(n: usize, m: usize) -> T {
    double_factorial_odd::<T>(n) * power::<T>(m, n)
}

/// `mⁿ·n!`, the number of `m`-hook permutations of `n` contents.
pub fn hook_permutation_count<T: Num + FromPrimitive + Clone>(m: usize, n: usize) -> T {
    power::<T>(m, n) * factorial::<T>(n)
}

/// `C_n·C_{n+1}`.
pub fn catalan_product<T: Num + FromPrimitive + Clone>(n: usize) -> T {
    catalan::<T>(n) * catalan::<T>(n + 1)
}

/// Number of `m`-rim hook tableaux of shape `shape`, by peeling rim hooks.
pub fn rim_hook_tableau_count<T: Num + FromPrimitive + Clone>(shape: &Partition, m: usize) -> T {
    fn go<T: Num + Clone>(shape: &Partition, m: usize, memo: &mut HashMap<Partition, T>) -> T {
        if shape.is_empty() {
            return T::one();
        }
        if let Some(v) = memo.get(shape) {
            return v.clone();
        }
        let total = removable_rim_hooks(shape, m).into_iter().fold(T::zero(), |acc, h| {
            let inner = shape.without_cells(h.cells()).expect("outer rim hook");
            acc + go(&inner, m, memo)
        });
        memo.insert(shape.clone(), total.clone());
        total
    }
    go(shape, m, &mut HashMap::new())
}

/// `Σ f_m(λ)²` over partitions `λ` of `mn`: the number of pairs of same-shape
/// `m`-rim hook tableaux with `n` contents.
pub fn same_shape_pair_count<T: Num + FromPrimitive + Clone>(m: usize, n: usize) -> T {
    partitions_of(m * n).iter().fold(T::zero(), |acc, shape| {
        let f = rim_hook_tableau_count::<T>(shape, m);
        acc + f.clone() * f
    })
}

/// Both sides of `Σ_{i=0}^{n} C(2n, 2i)·C_i·C_{n−i} = C_n·C_{n+1}`.
pub fn identity_41_sides(n: usize) -> (BigCount, BigCount) {
    let lhs = (0..=n)
        .map(|i| binomial::<BigCount>(2 * n, 2 * i) * catalan::<BigCount>(i) * catalan::<BigCount>(n - i))
        .sum();
    (lhs, catalan_product(n))
}

pub fn verify_identity_41(n: usize) -> bool {
    let (lhs, rhs) = identity_41_sides(n);
    lhs == rhs
}

/// Object families that can be counted by generation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// All `m`-colored matchings on `[2n]`.
    ColoredMatchings,
    /// 2-colored matchings with no two crossing arcs of one color.
    Noncrossing2,
    /// Oscillating `m`-rim hook tableaux of length `2n`.
    Oscillating,
    /// Oscillating domino tableaux whose shapes have at most two columns.
    #[serde(rename = "O2n2")]
    O2n2,
    /// Dyck path packings of length `2n`.
    Packings,
    /// Guy's walks with `2n` steps.
    GuyWalks,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::ColoredMatchings,
        Family::Noncrossing2,
        Family::Oscillating,
        Family::O2n2,
        Family::Packings,
        Family::GuyWalks,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::ColoredMatchings => "colored_matchings",
            Family::Noncrossing2 => "noncrossing2",
            Family::Oscillating => "oscillating",
            Family::O2n2 => "O2n2",
            Family::Packings => "packings",
            Family::GuyWalks => "guy_walks",
        }
    }

    /// Whether `m` is fixed to 2 for this family.
    pub fn is_two_colored(self) -> bool {
        !matches!(self, Family::ColoredMatchings | Family::Oscillating)
    }

    /// The known closed form.
    pub fn closed_form(self, n: usize, m: usize) -> BigCount {
        match self {
            Family::ColoredMatchings | Family::Oscillating => colored_matching_count(n, m),
            _ => catalan_product(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Precondition(format!("unknown family {s:?}")))
    }
}

/// Counts a family by generating every member. `m` is ignored for the
/// two-colored families.
pub fn count_family(family: Family, n: usize, m: usize) -> BigCount {
    let count: usize = match family {
        Family::ColoredMatchings => matching_shards(n, m).into_par_iter().map(Iterator::count).sum(),
        Family::Noncrossing2 => {
            matching_shards(n, 2).into_par_iter().map(|s| s.filter(|mt| mt.is_noncrossing()).count()).sum()
        }
        Family::Oscillating => oscillating_shards(n, m, None, 2).into_par_iter().map(Iterator::count).sum(),
        Family::O2n2 => oscillating_shards(n, 2, Some(2), 2).into_par_iter().map(Iterator::count).sum(),
        Family::Packings => packings(n).count(),
        Family::GuyWalks => guy_walks(n).len(),
    };
    BigCount::from(count)
}

/// Joint distribution of `(cr, ne)` over a set of matchings.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JointDistribution(BTreeMap<(usize, usize), BigCount>);

impl JointDistribution {
    pub fn get(&self, cr: usize, ne: usize) -> BigCount {
        self.0.get(&(cr, ne)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &BigCount)> + '_ {
        self.0.iter().map(|(&k, v)| (k, v))
    }

    pub fn total(&self) -> BigCount {
        self.0.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.iter().all(|(&(cr, ne), v)| self.get(ne, cr) == *v)
    }

    /// Largest statistic value present.
    pub fn max_stat(&self) -> usize {
        self.0.keys().map(|&(a, b)| a.max(b)).max().unwrap_or(0)
    }

    fn merge(mut self, other: JointDistribution) -> JointDistribution {
        for (k, v) in other.0 {
            *self.0.entry(k).or_default() += v;
        }
        self
    }
}

impl fmt::Display for JointDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.max_stat();
        let cells: Vec<Vec<String>> =
            (0..=k).map(|cr| (0..=k).map(|ne| self.get(cr, ne).to_string()).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1).max(2);
        write!(f, "{:>5}", "cr\\ne")?;
        for ne in 0..=k {
            write!(f, " {ne:>width$}")?;
        }
        writeln!(f)?;
        for (cr, row) in cells.iter().enumerate() {
            write!(f, "{cr:>5}")?;
            for c in row {
                write!(f, " {c:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Tabulates `(cr, ne)` over all `m`-colored matchings on `[2n]`.
pub fn joint_distribution(n: usize, m: usize) -> JointDistribution {
    matching_shards(n, m)
        .into_par_iter()
        .map(|shard| {
            let mut table = JointDistribution::default();
            for mt in shard {
                *table.0.entry((mt.crossing_number(), mt.nesting_number())).or_default() += 1u32;
            }
            table
        })
        .reduce(JointDistribution::default, JointDistribution::merge)
}

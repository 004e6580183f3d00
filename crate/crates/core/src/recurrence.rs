//! Exact evaluation of the matching and domination recursions and their
//! closed forms.
//!
//! Sizes grow like `3^n` and fit in `u128` up to the size cap. Counts grow
//! doubly exponentially and are kept as [`BigUint`]. Wherever a recursion has
//! a closed form, both are evaluated at every step and any disagreement is an
//! [`Error::InvariantViolation`].

use num_bigint::BigUint;
use num_traits::{One, Pow};
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest `n` accepted for size evaluation.
pub const DEFAULT_SIZE_CAP: usize = 60;
/// Largest `n` accepted for count evaluation; `tau_14` already has about
/// 1.1 million decimal digits.
pub const DEFAULT_COUNT_CAP: usize = 14;

pub(crate) fn decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn pow3(k: usize) -> u128 {
    3u128.pow(k as u32)
}

fn check_range(n: usize, min: usize, cap: usize, what: &str) -> Result<()> {
    if n < min {
        return Err(Error::invalid(format!("{what} needs n >= {min}, got {n}")));
    }
    if n > cap {
        return Err(Error::ResourceLimit(format!(
            "{what}: n = {n} exceeds the cap of {cap}"
        )));
    }
    Ok(())
}

/// Vertex count of the Apollonian network `A_n`.
pub fn apollonian_vertex_count(n: usize) -> u128 {
    if n == 0 {
        3
    } else {
        (pow3(n) + 5) / 2
    }
}

// Matchings ---------------------------------------------------------------

/// Largest matching of `A_n` covering exactly `k` outmost vertices, for
/// `k = 0..=3`, and the matching number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MatchingSizes {
    pub n: usize,
    pub by_covered: [u128; 4],
    pub matching_number: u128,
}

/// Numbers of maximum matchings of `A_n` within each coverage class of the
/// outmost vertices X, Y, Z.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingCounts {
    pub n: usize,
    /// X, Y, Z all vacant.
    #[serde(serialize_with = "decimal")]
    pub all_vacant: BigUint,
    /// X covered, Y and Z vacant.
    #[serde(serialize_with = "decimal")]
    pub one_covered: BigUint,
    /// X vacant, Y and Z covered.
    #[serde(serialize_with = "decimal")]
    pub two_covered: BigUint,
    /// Maximum matchings with no condition.
    #[serde(serialize_with = "decimal")]
    pub maximum: BigUint,
}

impl MatchingCounts {
    pub fn as_array(&self) -> [&BigUint; 4] {
        [&self.all_vacant, &self.one_covered, &self.two_covered, &self.maximum]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingProfile {
    pub sizes: MatchingSizes,
    pub counts: MatchingCounts,
}

/// All candidates of the four max-recursions, one vector per class.
pub fn matching_size_candidates(b: [u128; 4]) -> [Vec<u128>; 4] {
    let [b0, b1, b2, b3] = b;
    [
        vec![3 * b0, 2 * b0 + b1],
        vec![2 * b0 + b1, 2 * b0 + b2, b0 + 2 * b1],
        vec![2 * b0 + b3, b0 + b1 + b2, 3 * b1, b0 + 2 * b1, 2 * b0 + b2],
        vec![b0 + b1 + b2, b0 + b1 + b3, b0 + 2 * b2, 3 * b1, 2 * b1 + b2],
    ]
}

pub fn matching_size_step(b: [u128; 4]) -> [u128; 4] {
    matching_size_candidates(b).map(|c| c.into_iter().max().expect("non-empty"))
}

/// Closed forms, valid for `n >= 3`.
pub fn matching_sizes_closed(n: usize) -> [u128; 4] {
    let t = pow3(n - 1);
    [(t - 1) / 2, (t + 1) / 2, (t + 3) / 2, (t + 5) / 2]
}

pub fn matching_sizes(n: usize) -> Result<MatchingSizes> {
    check_range(n, 1, DEFAULT_SIZE_CAP, "matching sizes")?;
    let by_covered = match n {
        1 => [0, 1, 1, 2],
        2 => [1, 2, 3, 3],
        _ => {
            let mut b = [4, 5, 6, 7];
            for k in 3..=n {
                if k > 3 {
                    b = matching_size_step(b);
                }
                if b != matching_sizes_closed(k) {
                    return Err(Error::invariant(format!(
                        "matching sizes at n={k}: recursion {b:?} vs closed form {:?}",
                        matching_sizes_closed(k)
                    )));
                }
            }
            b
        }
    };
    Ok(MatchingSizes {
        n,
        by_covered,
        matching_number: *by_covered.iter().max().expect("four entries"),
    })
}

/// Base values at `n = 3`.
pub fn matching_count_base() -> MatchingCounts {
    MatchingCounts {
        n: 3,
        all_vacant: 108u32.into(),
        one_covered: 246u32.into(),
        two_covered: 480u32.into(),
        maximum: 738u32.into(),
    }
}

pub fn matching_count_step(c: &MatchingCounts) -> MatchingCounts {
    let (f, t, p, m) = (&c.all_vacant, &c.one_covered, &c.two_covered, &c.maximum);
    let f2 = f * f;
    MatchingCounts {
        n: c.n + 1,
        all_vacant: 3u32 * t * &f2,
        one_covered: 2u32 * p * &f2 + 4u32 * t * t * f,
        two_covered: m * &f2 + 8u32 * p * t * f + 3u32 * t * t * t,
        maximum: 6u32 * m * t * f + 6u32 * f * p * p + 12u32 * t * t * p,
    }
}

/// Counts for `n = base.n ..= max_n`, iterating from `base`.
pub fn matching_count_table_from(base: MatchingCounts, max_n: usize) -> Result<Vec<MatchingCounts>> {
    check_range(max_n, base.n, DEFAULT_COUNT_CAP, "matching counts")?;
    let mut table = vec![base];
    while table.last().expect("non-empty").n < max_n {
        let next = matching_count_step(table.last().expect("non-empty"));
        table.push(next);
    }
    Ok(table)
}

pub fn matching_count_table(max_n: usize) -> Result<Vec<MatchingCounts>> {
    matching_count_table_from(matching_count_base(), max_n)
}

pub fn matching_counts(n: usize) -> Result<MatchingCounts> {
    Ok(matching_count_table(n)?.pop().expect("non-empty"))
}

pub fn matching_profile(n: usize) -> Result<MatchingProfile> {
    Ok(MatchingProfile {
        sizes: matching_sizes(n)?,
        counts: matching_counts(n)?,
    })
}

// Domination ---------------------------------------------------------------

/// Smallest dominating set of `A_n` containing exactly `k` outmost vertices,
/// for `k = 0..=3`, and the domination number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DominationSizes {
    pub n: usize,
    pub by_included: [u128; 4],
    pub domination_number: u128,
}

/// Numbers of minimum dominating sets of `A_n` and of `A_n` with outmost
/// vertices deleted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationCounts {
    pub n: usize,
    #[serde(serialize_with = "decimal")]
    pub whole: BigUint,
    /// `A_n` minus X, Y, Z.
    #[serde(serialize_with = "decimal")]
    pub minus_three: BigUint,
    /// `A_n` minus X, Y.
    #[serde(serialize_with = "decimal")]
    pub minus_two: BigUint,
    /// `A_n` minus X.
    #[serde(serialize_with = "decimal")]
    pub minus_one: BigUint,
}

impl DominationCounts {
    pub fn as_array(&self) -> [&BigUint; 4] {
        [&self.whole, &self.minus_three, &self.minus_two, &self.minus_one]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationProfile {
    pub sizes: DominationSizes,
    pub counts: DominationCounts,
}

/// All candidates of the four min-recursions, valid for `n >= 3`.
///
/// The first branch of the one-outmost class is `2*g1 + g0 - 1`: two copies
/// contain the chosen outmost vertex or the shared center, the third copy
/// contains neither. `2*g1 - 1` would drop that third copy.
pub fn domination_size_candidates(g: [u128; 4]) -> [Vec<u128>; 4] {
    let [g0, g1, g2, g3] = g;
    [
        vec![3 * g0, 3 * g1 - 2],
        vec![2 * g1 + g0 - 1, 2 * g2 + g1 - 3],
        vec![g2 + 2 * g1 - 2, g3 + 2 * g2 - 4],
        vec![3 * g2 - 3, 3 * g3 - 5],
    ]
}

pub fn domination_size_step(g: [u128; 4]) -> [u128; 4] {
    domination_size_candidates(g).map(|c| c.into_iter().min().expect("non-empty"))
}

/// Closed forms, valid for `n >= 3`.
pub fn domination_sizes_closed(n: usize) -> [u128; 4] {
    let t = pow3(n - 3);
    let p = |k: usize| 1u128 << k;
    [
        (t + 3 * p(n - 2) - 1) / 2,
        (t + p(n - 1) + 1) / 2,
        (t + p(n - 2) + 3) / 2,
        (t + 5) / 2,
    ]
}

pub fn domination_sizes(n: usize) -> Result<DominationSizes> {
    check_range(n, 1, DEFAULT_SIZE_CAP, "domination sizes")?;
    let by_included = match n {
        1 => [1, 1, 2, 3],
        2 => [1, 2, 2, 3],
        _ => {
            let mut g = [3, 3, 3, 3];
            for k in 3..=n {
                if k > 3 {
                    g = domination_size_step(g);
                }
                if g != domination_sizes_closed(k) {
                    return Err(Error::invariant(format!(
                        "domination sizes at n={k}: recursion {g:?} vs closed form {:?}",
                        domination_sizes_closed(k)
                    )));
                }
            }
            g
        }
    };
    Ok(DominationSizes {
        n,
        by_included,
        domination_number: *by_included.iter().min().expect("four entries"),
    })
}

/// Base values at `n = 3`, counting only minimum dominating sets that
/// contain every outmost vertex left in the graph. In `A_3` these are the
/// sets the copies contribute when gluing `A_4`; the unrestricted counts at
/// `n = 3` are larger (11, 1, 3, 6), and from `n = 4` on the two agree.
pub fn domination_count_base() -> DominationCounts {
    DominationCounts {
        n: 3,
        whole: BigUint::one(),
        minus_three: BigUint::one(),
        minus_two: 2u32.into(),
        minus_one: BigUint::one(),
    }
}

pub fn domination_count_step(c: &DominationCounts) -> DominationCounts {
    DominationCounts {
        n: c.n + 1,
        // Every minimum dominating set of A_{n+1} is a union of one anchored
        // set per copy.
        whole: (&c.whole).pow(3u32),
        minus_three: (&c.minus_two).pow(3u32),
        minus_two: &c.minus_one * &c.minus_one * &c.minus_two,
        minus_one: &c.whole * &c.minus_one * &c.minus_one,
    }
}

pub fn domination_counts_from(base: DominationCounts, n: usize) -> Result<DominationCounts> {
    check_range(n, base.n, DEFAULT_COUNT_CAP, "domination counts")?;
    let mut c = base;
    while c.n < n {
        c = domination_count_step(&c);
    }
    Ok(c)
}

pub fn domination_counts(n: usize) -> Result<DominationCounts> {
    domination_counts_from(domination_count_base(), n)
}

pub fn domination_profile(n: usize) -> Result<DominationProfile> {
    Ok(DominationProfile {
        sizes: domination_sizes(n)?,
        counts: domination_counts(n)?,
    })
}

// Hanoi graphs ------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HanoiMatchingCounts {
    pub n: usize,
    /// Maximum matchings of `H_n` minus all three extremes.
    #[serde(serialize_with = "decimal")]
    pub minus_extremes: BigUint,
    /// Maximum matchings of `H_n` minus one extreme.
    #[serde(serialize_with = "decimal")]
    pub minus_one_extreme: BigUint,
    /// Matching number of `H_n` minus all three extremes, `(3^n - 3)/2`.
    pub minus_extremes_size: u128,
    /// Perfect matchings of the extended graph, three times `minus_one_extreme`.
    #[serde(serialize_with = "decimal")]
    pub ext_perfect_matchings: BigUint,
}

/// `2^((3^(n-1) - 1)/2)`.
pub fn hanoi_count_closed(n: usize) -> BigUint {
    BigUint::from(2u32).pow(((pow3(n - 1) - 1) / 2) as u64)
}

pub fn hanoi_matching_counts(n: usize) -> Result<HanoiMatchingCounts> {
    check_range(n, 2, DEFAULT_COUNT_CAP, "Hanoi matching counts")?;
    let mut vacant = BigUint::from(2u32);
    let mut one = BigUint::from(2u32);
    for k in 2..=n {
        if k > 2 {
            let (v3, o2) = ((&vacant).pow(3u32), &one * &one);
            let o3 = &o2 * &one;
            one = o2 * &vacant + &o3;
            vacant = v3 + o3;
        }
        let closed = hanoi_count_closed(k);
        if vacant != closed || one != closed {
            return Err(Error::invariant(format!(
                "Hanoi matching counts at n={k} disagree with 2^((3^(n-1)-1)/2)"
            )));
        }
    }
    Ok(HanoiMatchingCounts {
        n,
        ext_perfect_matchings: 3u32 * &one,
        minus_extremes: vacant,
        minus_one_extreme: one,
        minus_extremes_size: (pow3(n) - 3) / 2,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtHanoiDomination {
    pub n: usize,
    pub domination_number: u128,
    /// Number of minimum dominating sets where known (odd `n`).
    pub mds_count: Option<u32>,
}

pub fn ext_hanoi_domination_number(n: usize) -> Result<ExtHanoiDomination> {
    check_range(n, 1, DEFAULT_SIZE_CAP, "extended Hanoi domination")?;
    let odd = n % 2 == 1;
    Ok(ExtHanoiDomination {
        n,
        domination_number: if odd { (pow3(n) + 1) / 4 } else { (pow3(n) + 3) / 4 },
        mds_count: odd.then_some(4),
    })
}

//! Cross-validation of oracle, recurrence and constructed witnesses.
//!
//! Each check compares at least two independent computations of the same
//! quantity. [`run`] evaluates every check and collects a report; a search
//! that runs out of budget aborts the run with [`Error::ResourceLimit`]
//! rather than being reported as a mismatch.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{apollonian_iterative, apollonian_selfsimilar, ext_hanoi, hanoi, hanoi_extremes, HanoiMethod};
use crate::graph::VertexId;
use crate::growth::{ratio_bounds_hold, z_bounds};
use crate::oracle::{
    count_perfect_matchings, enumerate_min_dominating_sets, max_matching_search, min_domination_search,
    oracle_domination_profile, oracle_matching_profile, OracleConfig,
};
use crate::recurrence::{
    domination_count_base, domination_counts, domination_sizes, ext_hanoi_domination_number, hanoi_matching_counts,
    matching_count_base, matching_count_table_from, matching_sizes, MatchingCounts,
};
use crate::structures::{
    build_apollonian_mds, build_code_class, build_perfect_matching_ext_hanoi, build_pm_hanoi_minus_extremes,
    classify_extreme_types, ExtremeType,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag}  {}: {}\n", c.name, c.detail));
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        out.push_str(&format!("{passed}/{} checks passed\n", self.checks.len()));
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest Apollonian `n` given to exhaustive search (at least 1).
    pub max_oracle_n: usize,
    /// Perturb the matching-count base value, as a negative control.
    pub inject_fault: bool,
    pub oracle: OracleConfig,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_oracle_n: 4,
            inject_fault: false,
            oracle: OracleConfig::default(),
        }
    }
}

struct Runner {
    checks: Vec<Check>,
}

impl Runner {
    fn check(&mut self, name: impl Into<String>, f: impl FnOnce() -> Result<(bool, String)>) -> Result<()> {
        let name = name.into();
        let (passed, detail) = match f() {
            Ok(r) => r,
            Err(e @ Error::ResourceLimit(_)) => return Err(e),
            Err(e) => (false, format!("error: {e}")),
        };
        self.checks.push(Check { name, passed, detail });
        Ok(())
    }
}

fn same<T: PartialEq + std::fmt::Debug>(a: T, b: T) -> (bool, String) {
    let ok = a == b;
    let detail = if ok {
        format!("{a:?}")
    } else {
        format!("{a:?} != {b:?}")
    };
    (ok, detail)
}

fn counts_vec(c: &MatchingCounts) -> Vec<String> {
    c.as_array().iter().map(|x| x.to_string()).collect()
}

pub fn run(opts: &VerifyOptions) -> Result<VerifyReport> {
    let cfg = &opts.oracle;
    let max_n = opts.max_oracle_n.max(1);
    let mut r = Runner { checks: Vec::new() };
    let mut base = matching_count_base();
    if opts.inject_fault {
        base.all_vacant += 1u32;
    }
    let recurrence_counts = matching_count_table_from(base, 13)?;

    // Generators.
    r.check("apollonian constructions agree (n <= 6)", || {
        for n in 0..=6 {
            let (a, b) = (apollonian_iterative(n)?, apollonian_selfsimilar(n)?);
            if a.stats() != b.stats() {
                return Ok((false, format!("stats differ at n={n}")));
            }
        }
        Ok((true, "identical vertex, edge and degree counts".into()))
    })?;
    r.check("hanoi constructions agree (n <= 7)", || {
        for n in 1..=7 {
            if hanoi(n, HanoiMethod::MoveRule)?.edges() != hanoi(n, HanoiMethod::SelfSimilar)?.edges() {
                return Ok((false, format!("edge sets differ at n={n}")));
            }
        }
        Ok((true, "identical edge sets".into()))
    })?;
    r.check("extended hanoi graphs are cubic (n <= 7)", || {
        for n in 1..=7 {
            let g = ext_hanoi(n)?;
            if (0..g.vertex_count()).any(|v| g.adj(v).len() != 3) {
                return Ok((false, format!("non-cubic at n={n}")));
            }
        }
        Ok((true, "every degree is 3".into()))
    })?;

    // Matchings on A_n.
    for n in 1..=max_n.min(3) {
        let oracle = oracle_matching_profile(n, cfg)?;
        r.check(format!("matching sizes n={n}: oracle = recursion"), || {
            let rec = matching_sizes(n)?;
            Ok(same(
                (oracle.sizes.by_covered, oracle.sizes.matching_number),
                (rec.by_covered, rec.matching_number),
            ))
        })?;
        if n == 3 {
            r.check("matching counts n=3: oracle = recursion base", || {
                Ok(same(counts_vec(&oracle.counts), counts_vec(&recurrence_counts[0])))
            })?;
        }
    }
    if max_n >= 4 {
        let a4 = apollonian_iterative(4)?;
        let res = max_matching_search(&a4, &[], cfg)?;
        r.check("matching number n=4: oracle = closed form", || {
            Ok(same(
                res.max_size.map(|s| s as u128),
                Some(matching_sizes(4)?.matching_number),
            ))
        })?;
        r.check("maximum matchings n=4: oracle = recursion", || {
            Ok(same(res.count_at_max.clone(), recurrence_counts[1].maximum.clone()))
        })?;
    }
    r.check("matching recursion = closed form (n <= 60)", || {
        matching_sizes(60)?;
        Ok((true, "all steps agree".into()))
    })?;
    r.check("no perfect matching in A_n (3 <= n <= 60)", || {
        let bad = (3..=60).find(|&n| {
            let v = crate::recurrence::apollonian_vertex_count(n);
            matching_sizes(n).map(|s| 2 * s.matching_number >= v).unwrap_or(true)
        });
        Ok(match bad {
            None => (true, "2 * matching number < V".into()),
            Some(n) => (false, format!("fails at n={n}")),
        })
    })?;

    // Perfect matchings of S+_n and Hanoi subgraphs.
    for n in 1..=max_n.min(3) {
        r.check(format!("perfect matchings of S+_{n}: oracle = formula"), || {
            let oracle = count_perfect_matchings(&ext_hanoi(n)?, cfg)?;
            let formula = if n == 1 {
                BigUint::from(3u32)
            } else {
                hanoi_matching_counts(n)?.ext_perfect_matchings
            };
            Ok(same(oracle, formula))
        })?;
    }
    for n in 2..=max_n.min(3) {
        r.check(format!("hanoi subgraph matchings n={n}: oracle = recursion"), || {
            let h = hanoi(n, HanoiMethod::MoveRule)?;
            let ext = hanoi_extremes(n);
            let minus_all = h.delete_vertices(&ext)?.0;
            let minus_one = h.delete_vertices(&ext[..1])?.0;
            let rec = hanoi_matching_counts(n)?;
            let a = max_matching_search(&minus_all, &[], cfg)?;
            let b = max_matching_search(&minus_one, &[], cfg)?;
            Ok(same(
                (a.max_size.map(|s| s as u128), a.count_at_max, b.count_at_max),
                (Some(rec.minus_extremes_size), rec.minus_extremes, rec.minus_one_extreme),
            ))
        })?;
    }

    // Domination on A_n.
    for n in 1..=max_n.min(4) {
        let oracle = oracle_domination_profile(n, cfg)?;
        r.check(format!("domination sizes n={n}: oracle = recursion"), || {
            let rec = domination_sizes(n)?;
            Ok(same(
                (oracle.profile.sizes.by_included, oracle.profile.sizes.domination_number),
                (rec.by_included, rec.domination_number),
            ))
        })?;
        if n == 3 {
            r.check("anchored domination counts n=3: oracle = recursion base", || {
                Ok(same(oracle.anchored.clone(), domination_count_base()))
            })?;
        }
        if n == 4 {
            r.check("domination counts n=4: oracle = recursion", || {
                Ok(same(oracle.profile.counts.clone(), domination_counts(4)?))
            })?;
        }
    }
    r.check("domination recursion = closed form (n <= 60)", || {
        domination_sizes(60)?;
        Ok((true, "all steps agree".into()))
    })?;

    // Domination on S+_n.
    for n in 1..=max_n.min(3) {
        r.check(format!("domination of S+_{n}: oracle = formula"), || {
            let res = min_domination_search(&ext_hanoi(n)?, &[], cfg)?;
            let f = ext_hanoi_domination_number(n)?;
            let count_ok = f.mds_count.map_or(true, |c| res.count_at_min == BigUint::from(c));
            let (ok, detail) = same(res.min_size.map(|s| s as u128), Some(f.domination_number));
            Ok((ok && count_ok, format!("{detail}, {} sets", res.count_at_min)))
        })?;
    }

    // Witnesses.
    r.check("constructed perfect matchings of S+_n (n <= 7)", || {
        for n in 1..=7 {
            build_perfect_matching_ext_hanoi(n)?;
        }
        Ok((true, "valid".into()))
    })?;
    r.check("constructed matchings of H_n minus extremes (2 <= n <= 7)", || {
        for n in 2..=7 {
            build_pm_hanoi_minus_extremes(n)?;
        }
        Ok((true, "valid".into()))
    })?;
    r.check("constructed Apollonian MDS (4 <= n <= 9)", || {
        for n in 4..=9 {
            build_apollonian_mds(n)?;
        }
        Ok((true, "dominating, of size (3^(n-3)+5)/2".into()))
    })?;
    if max_n >= 4 {
        r.check("constructed Apollonian MDS n=4 = oracle's unique MDS", || {
            let a4 = apollonian_iterative(4)?;
            let sets = enumerate_min_dominating_sets(&a4, &[], 2, cfg)?;
            Ok(same(sets, vec![build_apollonian_mds(4)?]))
        })?;
    }
    r.check("parity classes of S+_n partition and dominate (n = 1, 3, 5)", || {
        for n in [1, 3, 5] {
            let mut all: Vec<VertexId> = Vec::new();
            for k in 1..=4 {
                all.extend(build_code_class(n, k)?);
            }
            all.sort_unstable();
            if all != (0..=3usize.pow(n as u32)).collect::<Vec<_>>() {
                return Ok((false, format!("not a partition at n={n}")));
            }
        }
        Ok((true, "valid".into()))
    })?;
    if max_n >= 3 {
        r.check(
            "parity classes of S+_3 = oracle MDSs, extremes typed D-D-I or C-C-C",
            || {
                let s3 = ext_hanoi(3)?;
                let oracle: BTreeSet<Vec<VertexId>> =
                    enumerate_min_dominating_sets(&s3, &[], 100, cfg)?.into_iter().collect();
                let classes: BTreeSet<Vec<VertexId>> =
                    (1..=4).map(|k| build_code_class(3, k)).collect::<Result<_>>()?;
                let types_ok = oracle.iter().all(|d| {
                    classify_extreme_types(&s3, d).map_or(false, |t| {
                        let ones = t.iter().filter(|&&x| x == ExtremeType::I).count();
                        let cs = t.iter().filter(|&&x| x == ExtremeType::C).count();
                        (ones == 1 && cs == 0) || cs == 3
                    })
                });
                let (ok, detail) = same(oracle, classes);
                Ok((ok && types_ok, detail))
            },
        )?;
    }

    // Growth.
    r.check("ratio bounds hold exactly (3 <= n <= 13)", || {
        let bad: Vec<usize> = ratio_bounds_hold(13)?
            .iter()
            .filter(|c| !c.all())
            .map(|c| c.n)
            .collect();
        Ok((
            bad.is_empty(),
            if bad.is_empty() {
                "all hold".into()
            } else {
                format!("fail at {bad:?}")
            },
        ))
    })?;
    r.check("growth bracket at m=7", || {
        let b = z_bounds(7)?;
        Ok((
            b.gap < 1e-2 && b.contains(0.43017),
            format!("[{:.10}, {:.10}], gap {:.3e}", b.lower, b.upper, b.gap),
        ))
    })?;
    r.check("matching-count ordering (4 <= n <= 13)", || {
        let bad = recurrence_counts
            .iter()
            .filter(|c| c.n >= 4)
            .find(|c| !(c.all_vacant <= c.one_covered && c.one_covered <= c.two_covered && c.two_covered <= c.maximum));
        Ok(match bad {
            None => (true, "varphi <= theta <= phi <= tau".into()),
            Some(c) => (false, format!("fails at n={}", c.n)),
        })
    })?;

    Ok(VerifyReport { checks: r.checks })
}

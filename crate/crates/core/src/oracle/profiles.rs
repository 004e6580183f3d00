//! Oracle counterparts of the recurrence profiles, assembled from
//! constrained searches on `A_n` and its outmost-deleted subgraphs.

use num_bigint::BigUint;
use serde::Serialize;

use super::{
    max_matching_search, min_domination_search, CoverState, DominationConstraint, MatchingConstraint, MemberState,
    OracleConfig, VertexConstraint,
};
use crate::error::{Error, Result};
use crate::generators::apollonian_iterative;
use crate::graph::{Corner, LabeledGraph, VertexRole};
use crate::recurrence::{
    DominationCounts, DominationProfile, DominationSizes, MatchingCounts, MatchingProfile, MatchingSizes,
};

const OUTMOST: [usize; 3] = [0, 1, 2];

fn cover_pattern(covered: usize) -> Vec<MatchingConstraint> {
    OUTMOST
        .iter()
        .map(|&v| {
            // Cover the last `covered` corners: Z, then Y, then X.
            let kind = if v >= 3 - covered {
                CoverState::MustCover
            } else {
                CoverState::MustVacate
            };
            VertexConstraint::new(v, kind)
        })
        .collect()
}

fn size_of(r: Option<usize>, what: &str) -> Result<u128> {
    r.map(|s| s as u128)
        .ok_or_else(|| Error::invariant(format!("no feasible solution for {what}")))
}

/// Profile of `A_n` from exhaustive search. The counted classes are: all
/// outmost vacant; X covered; Y and Z covered; unconstrained.
pub fn oracle_matching_profile(n: usize, cfg: &OracleConfig) -> Result<MatchingProfile> {
    if n == 0 {
        return Err(Error::invalid("matching profile needs n >= 1"));
    }
    let g = apollonian_iterative(n)?;
    let mut by_covered = [0u128; 4];
    for (k, slot) in by_covered.iter_mut().enumerate() {
        let r = max_matching_search(&g, &cover_pattern(k), cfg)?;
        *slot = size_of(r.max_size, &format!("{k} covered outmost vertices"))?;
    }
    let run = |cons: &[MatchingConstraint]| max_matching_search(&g, cons, cfg);
    let with = |x, y, z| [(0, x), (1, y), (2, z)].map(|(v, k)| VertexConstraint::new(v, k));
    use CoverState::{MustCover as C, MustVacate as V};
    let all = run(&[])?;
    let counts = MatchingCounts {
        n,
        all_vacant: run(&with(V, V, V))?.count_at_max,
        one_covered: run(&with(C, V, V))?.count_at_max,
        two_covered: run(&with(V, C, C))?.count_at_max,
        maximum: all.count_at_max,
    };
    Ok(MatchingProfile {
        sizes: MatchingSizes {
            n,
            by_covered,
            matching_number: size_of(all.max_size, "unconstrained matching")?,
        },
        counts,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleDominationProfile {
    /// Sizes per outmost-inclusion class and unrestricted MDS counts.
    pub profile: DominationProfile,
    /// The same counts restricted to sets containing every outmost vertex
    /// still present in the graph.
    pub anchored: DominationCounts,
    /// Domination numbers of `A_n` minus X, Y, Z / minus X, Y / minus X.
    pub deleted_sizes: [u128; 3],
}

fn corner(c: Corner) -> VertexRole {
    VertexRole::Outmost(c)
}

/// Count MDSs of `g`, plainly and with every surviving outmost vertex forced in.
fn count_pair(g: &LabeledGraph, cfg: &OracleConfig) -> Result<(u128, BigUint, BigUint)> {
    let plain = min_domination_search(g, &[], cfg)?;
    let size = size_of(plain.min_size, "domination")?;
    let anchors: Vec<DominationConstraint> = g
        .vertices_with_role(|r| matches!(r, VertexRole::Outmost(_)))
        .into_iter()
        .map(|v| VertexConstraint::new(v, MemberState::MustInclude))
        .collect();
    let anchored = min_domination_search(g, &anchors, cfg)?;
    let anchored_count = if anchored.min_size == plain.min_size {
        anchored.count_at_min
    } else {
        BigUint::default()
    };
    Ok((size, plain.count_at_min, anchored_count))
}

pub fn oracle_domination_profile(n: usize, cfg: &OracleConfig) -> Result<OracleDominationProfile> {
    if n == 0 {
        return Err(Error::invalid("domination profile needs n >= 1"));
    }
    let g = apollonian_iterative(n)?;
    let mut by_included = [0u128; 4];
    for (k, slot) in by_included.iter_mut().enumerate() {
        let cons: Vec<DominationConstraint> = OUTMOST
            .iter()
            .map(|&v| {
                let kind = if v >= 3 - k {
                    MemberState::MustInclude
                } else {
                    MemberState::MustExclude
                };
                VertexConstraint::new(v, kind)
            })
            .collect();
        let r = min_domination_search(&g, &cons, cfg)?;
        *slot = size_of(r.min_size, &format!("{k} included outmost vertices"))?;
    }
    let delete = |corners: &[Corner]| -> Result<LabeledGraph> {
        let ids: Vec<_> = corners
            .iter()
            .map(|&c| g.find_role(corner(c)).expect("outmost vertex present"))
            .collect();
        Ok(g.delete_vertices(&ids)?.0)
    };
    let (whole_size, whole, whole_a) = count_pair(&g, cfg)?;
    let (s3, x, x_a) = count_pair(&delete(&[Corner::X, Corner::Y, Corner::Z])?, cfg)?;
    let (s2, y, y_a) = count_pair(&delete(&[Corner::X, Corner::Y])?, cfg)?;
    let (s1, z, z_a) = count_pair(&delete(&[Corner::X])?, cfg)?;
    Ok(OracleDominationProfile {
        profile: DominationProfile {
            sizes: DominationSizes {
                n,
                by_included,
                domination_number: whole_size,
            },
            counts: DominationCounts {
                n,
                whole,
                minus_three: x,
                minus_two: y,
                minus_one: z,
            },
        },
        anchored: DominationCounts {
            n,
            whole: whole_a,
            minus_three: x_a,
            minus_two: y_a,
            minus_one: z_a,
        },
        deleted_sizes: [s3, s2, s1],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_matching_profiles() {
        let cfg = OracleConfig::default();
        let p1 = oracle_matching_profile(1, &cfg).unwrap();
        assert_eq!(p1.sizes.by_covered, [0, 1, 1, 2]);
        let c1 = p1.counts.as_array().map(|c| u32::try_from(c).unwrap());
        assert_eq!(c1, [1, 1, 1, 3]);
        let p2 = oracle_matching_profile(2, &cfg).unwrap();
        assert_eq!(p2.sizes.by_covered, [1, 2, 3, 3]);
        let c2 = p2.counts.as_array().map(|c| u32::try_from(c).unwrap());
        // 32 maximum matchings in A_2, confirmed by brute force over edge subsets.
        assert_eq!(c2, [3, 4, 3, 32]);
    }

    #[test]
    fn small_domination_profiles() {
        let cfg = OracleConfig::default();
        assert_eq!(
            oracle_domination_profile(2, &cfg).unwrap().profile.sizes.by_included,
            [1, 2, 2, 3]
        );
        let p3 = oracle_domination_profile(3, &cfg).unwrap();
        assert_eq!(p3.profile.sizes.by_included, [3, 3, 3, 3]);
        let plain = p3.profile.counts.as_array().map(|c| u32::try_from(c).unwrap());
        let anchored = p3.anchored.as_array().map(|c| u32::try_from(c).unwrap());
        assert_eq!(plain, [11, 1, 3, 6]);
        assert_eq!(anchored, [1, 1, 2, 1]);
    }
}

//! The exhaustive searches against plain subset enumeration on small random
//! graphs, plus mode independence and constraint monotonicity.

use num_bigint::BigUint;
use proptest::prelude::*;

use fgc_core::oracle::{
    enumerate_maximum_matchings, enumerate_min_dominating_sets, max_matching_search, min_domination_search, CoverState,
    DominationConstraint, MatchingConstraint, MemberState, OracleConfig, VertexConstraint,
};
use fgc_core::{Corner, Edge, Exec, Family, LabeledGraph, VertexRole};

const ROLES: [VertexRole; 4] = [
    VertexRole::Outmost(Corner::X),
    VertexRole::Outmost(Corner::Y),
    VertexRole::Outmost(Corner::Z),
    VertexRole::Center,
];

fn build(vertices: usize, edges: &[Edge]) -> LabeledGraph {
    let roles = (0..vertices)
        .map(|v| ROLES.get(v).copied().unwrap_or(VertexRole::Interior))
        .collect();
    LabeledGraph::new(
        Family::Apollonian,
        0,
        vertices,
        edges.iter().copied(),
        roles,
        vec![0; vertices],
        vec![],
    )
    .unwrap()
}

/// Simple graph on 4..=8 vertices with at most 12 edges.
fn small_graph() -> impl Strategy<Value = (usize, Vec<Edge>)> {
    (4usize..=8).prop_flat_map(|v| {
        let pairs: Vec<Edge> = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len().min(12)).prop_map(move |e| (v, e))
    })
}

fn cover_constraints() -> impl Strategy<Value = Vec<MatchingConstraint>> {
    proptest::collection::vec(
        proptest::option::of(prop_oneof![Just(CoverState::MustCover), Just(CoverState::MustVacate)]),
        4,
    )
    .prop_map(|ks| {
        ks.into_iter()
            .enumerate()
            .filter_map(|(v, k)| k.map(|k| VertexConstraint::new(v, k)))
            .collect()
    })
}

fn member_constraints() -> impl Strategy<Value = Vec<DominationConstraint>> {
    proptest::collection::vec(
        proptest::option::of(prop_oneof![
            Just(MemberState::MustInclude),
            Just(MemberState::MustExclude)
        ]),
        4,
    )
    .prop_map(|ks| {
        ks.into_iter()
            .enumerate()
            .filter_map(|(v, k)| k.map(|k| VertexConstraint::new(v, k)))
            .collect()
    })
}

fn naive_matching(v: usize, edges: &[Edge], cons: &[MatchingConstraint]) -> (Option<usize>, u64) {
    let mut best = None;
    let mut count = 0u64;
    for mask in 0u32..(1 << edges.len()) {
        let mut covered = vec![false; v];
        let mut ok = true;
        for (i, &(a, b)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if covered[a] || covered[b] {
                    ok = false;
                    break;
                }
                covered[a] = true;
                covered[b] = true;
            }
        }
        ok &= cons
            .iter()
            .all(|c| covered[c.vertex] == (c.kind == CoverState::MustCover));
        if !ok {
            continue;
        }
        let size = mask.count_ones() as usize;
        match best {
            Some(b) if size < b => {}
            Some(b) if size == b => count += 1,
            _ => {
                best = Some(size);
                count = 1;
            }
        }
    }
    (best, count)
}

fn naive_domination(v: usize, edges: &[Edge], cons: &[DominationConstraint]) -> (Option<usize>, u64) {
    let mut best = None;
    let mut count = 0u64;
    for mask in 0u32..(1 << v) {
        let inside = |x: usize| mask >> x & 1 == 1;
        if !cons
            .iter()
            .all(|c| inside(c.vertex) == (c.kind == MemberState::MustInclude))
        {
            continue;
        }
        let mut dominated: Vec<bool> = (0..v).map(inside).collect();
        for &(a, b) in edges {
            dominated[a] |= inside(b);
            dominated[b] |= inside(a);
        }
        if !dominated.iter().all(|&d| d) {
            continue;
        }
        let size = mask.count_ones() as usize;
        match best {
            Some(b) if size > b => {}
            Some(b) if size == b => count += 1,
            _ => {
                best = Some(size);
                count = 1;
            }
        }
    }
    (best, count)
}

fn cfg(exec: Exec) -> OracleConfig {
    OracleConfig::default().with_exec(exec)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn matching_search_equals_enumeration((v, edges) in small_graph(), cons in cover_constraints()) {
        let g = build(v, &edges);
        let r = max_matching_search(&g, &cons, &cfg(Exec::Sequential)).unwrap();
        let (size, count) = naive_matching(v, &edges, &cons);
        prop_assert_eq!(r.max_size, size);
        let expected = if size.is_some() { BigUint::from(count) } else { BigUint::from(0u32) };
        prop_assert_eq!(r.count_at_max, expected);
    }

    #[test]
    fn domination_search_equals_enumeration((v, edges) in small_graph(), cons in member_constraints()) {
        let g = build(v, &edges);
        let r = min_domination_search(&g, &cons, &cfg(Exec::Sequential)).unwrap();
        let (size, count) = naive_domination(v, &edges, &cons);
        prop_assert_eq!(r.min_size, size);
        let expected = if size.is_some() { BigUint::from(count) } else { BigUint::from(0u32) };
        prop_assert_eq!(r.count_at_min, expected);
    }

    #[test]
    fn modes_agree((v, edges) in small_graph(), mc in cover_constraints(), dc in member_constraints()) {
        let g = build(v, &edges);
        prop_assert_eq!(
            max_matching_search(&g, &mc, &cfg(Exec::Sequential)).unwrap(),
            max_matching_search(&g, &mc, &cfg(Exec::Parallel)).unwrap()
        );
        prop_assert_eq!(
            min_domination_search(&g, &dc, &cfg(Exec::Sequential)).unwrap(),
            min_domination_search(&g, &dc, &cfg(Exec::Parallel)).unwrap()
        );
        prop_assert_eq!(
            enumerate_maximum_matchings(&g, &mc, 50, &cfg(Exec::Sequential)).unwrap(),
            enumerate_maximum_matchings(&g, &mc, 50, &cfg(Exec::Parallel)).unwrap()
        );
        prop_assert_eq!(
            enumerate_min_dominating_sets(&g, &dc, 50, &cfg(Exec::Sequential)).unwrap(),
            enumerate_min_dominating_sets(&g, &dc, 50, &cfg(Exec::Parallel)).unwrap()
        );
    }

    #[test]
    fn constraints_only_restrict((v, edges) in small_graph(), mc in cover_constraints(), dc in member_constraints()) {
        let g = build(v, &edges);
        let c = cfg(Exec::Sequential);
        let free_m = max_matching_search(&g, &[], &c).unwrap().max_size.unwrap();
        if let Some(s) = max_matching_search(&g, &mc, &c).unwrap().max_size {
            prop_assert!(s <= free_m);
        }
        let free_d = min_domination_search(&g, &[], &c).unwrap().min_size.unwrap();
        if let Some(s) = min_domination_search(&g, &dc, &c).unwrap().min_size {
            prop_assert!(s >= free_d);
        }
    }

    #[test]
    fn enumerated_solutions_are_valid((v, edges) in small_graph(), mc in cover_constraints(), dc in member_constraints()) {
        let g = build(v, &edges);
        let c = cfg(Exec::Sequential);
        let r = max_matching_search(&g, &mc, &c).unwrap();
        for m in enumerate_maximum_matchings(&g, &mc, 20, &c).unwrap() {
            prop_assert!(g.is_matching(&m).unwrap());
            prop_assert_eq!(Some(m.len()), r.max_size);
        }
        let r = min_domination_search(&g, &dc, &c).unwrap();
        for d in enumerate_min_dominating_sets(&g, &dc, 20, &c).unwrap() {
            prop_assert!(g.is_dominating_set(&d).unwrap());
            prop_assert_eq!(Some(d.len()), r.min_size);
        }
    }
}

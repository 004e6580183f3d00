//! Exact minimum-dominating-set search with counting.
//!
//! Iterative deepening on the set size `k`. Each level branches on the
//! undominated vertex with the fewest admissible dominators. Once candidate
//! `c` has been tried at a node, it is forbidden in that node's later
//! branches, so every dominating set is reached along exactly one path and
//! counting is exact. Subtrees are cut when even the best `k` remaining
//! candidates cannot cover what is still undominated.

use num_bigint::BigUint;
use num_traits::Zero;

use super::{resolve, Budget, ConditionedDominationResult, DominationConstraint, MemberState, OracleConfig};
use crate::bitset::BitSet;
use crate::error::Result;
use crate::graph::{LabeledGraph, VertexId};

struct Search<'a> {
    n: usize,
    closed: Vec<BitSet>,
    budget: &'a Budget,
    collect_limit: usize,
}

#[derive(Default)]
struct Found {
    count: BigUint,
    sets: Vec<Vec<VertexId>>,
}

impl Found {
    fn merge(&mut self, other: Found) {
        self.count += other.count;
        self.sets.extend(other.sets);
    }
}

/// A node of the search tree.
#[derive(Clone)]
struct Node {
    dominated: BitSet,
    allowed: BitSet,
    chosen: Vec<VertexId>,
}

impl<'a> Search<'a> {
    fn undominated(&self, dominated: &BitSet) -> BitSet {
        let mut u = BitSet::full(self.n);
        u.difference_with(dominated);
        u
    }

    /// Candidates to branch on, or `None` when the node is a leaf or dead.
    fn branch(&self, node: &Node, picks_left: usize, found: &mut Found) -> Option<Vec<VertexId>> {
        let open = self.undominated(&node.dominated);
        if open.is_empty() {
            found.count += 1u32;
            if found.sets.len() < self.collect_limit {
                let mut s = node.chosen.clone();
                s.sort_unstable();
                found.sets.push(s);
            }
            return None;
        }
        if picks_left == 0 {
            return None;
        }
        let mut pivot: Option<(usize, VertexId)> = None;
        for u in open.iter() {
            let options = self.closed[u].intersection_count(&node.allowed);
            if options == 0 {
                return None;
            }
            if pivot.is_none_or(|(best, _)| options < best) {
                pivot = Some((options, u));
            }
        }
        let mut gains: Vec<usize> = node
            .allowed
            .iter()
            .map(|c| self.closed[c].intersection_count(&open))
            .collect();
        if gains.len() > picks_left {
            gains.select_nth_unstable_by(picks_left - 1, |a, b| b.cmp(a));
            gains.truncate(picks_left);
        }
        if gains.iter().sum::<usize>() < open.count() {
            return None;
        }
        let (_, u) = pivot?;
        Some(self.closed[u].iter().filter(|&c| node.allowed.contains(c)).collect())
    }

    fn children(&self, node: &Node, candidates: &[VertexId]) -> Vec<Node> {
        let mut allowed = node.allowed.clone();
        candidates
            .iter()
            .map(|&c| {
                allowed.remove(c);
                let mut dominated = node.dominated.clone();
                dominated.union_with(&self.closed[c]);
                let mut chosen = node.chosen.clone();
                chosen.push(c);
                Node {
                    dominated,
                    allowed: allowed.clone(),
                    chosen,
                }
            })
            .collect()
    }

    fn run(&self, node: &Node, picks_left: usize, found: &mut Found) -> Result<()> {
        self.budget.tick()?;
        if let Some(cands) = self.branch(node, picks_left, found) {
            for child in self.children(node, &cands) {
                self.run(&child, picks_left - 1, found)?;
            }
        }
        Ok(())
    }
}

fn search(
    g: &LabeledGraph,
    constraints: &[DominationConstraint],
    collect_limit: usize,
    cfg: &OracleConfig,
) -> Result<(Option<usize>, Found)> {
    let state = resolve(g, constraints, MemberState::Free)?;
    let n = g.vertex_count();
    let closed: Vec<BitSet> = (0..n)
        .map(|v| {
            let mut s = BitSet::new(n);
            s.insert(v);
            for &u in g.adj(v) {
                s.insert(u);
            }
            s
        })
        .collect();
    let budget = Budget::new(cfg.budget);
    let s = Search {
        n,
        closed,
        budget: &budget,
        collect_limit,
    };

    let mut root = Node {
        dominated: BitSet::new(n),
        allowed: BitSet::new(n),
        chosen: Vec::new(),
    };
    for (v, st) in state.iter().enumerate() {
        match st {
            MemberState::MustInclude => {
                root.chosen.push(v);
                root.dominated.union_with(&s.closed[v]);
            }
            MemberState::Free => root.allowed.insert(v),
            MemberState::MustExclude => {}
        }
    }
    // Infeasible when some vertex has no admissible dominator at all.
    let mut reachable = root.dominated.clone();
    for c in root.allowed.iter() {
        reachable.union_with(&s.closed[c]);
    }
    if reachable.count() < n {
        return Ok((None, Found::default()));
    }

    let base = root.chosen.len();
    for extra in 0..=root.allowed.count() {
        let mut found = Found::default();
        match s.branch(&root, extra, &mut found) {
            Some(cands) if cfg.exec.is_parallel() => {
                let kids = s.children(&root, &cands);
                let parts = cfg.exec.map(kids, |child| -> Result<Found> {
                    let mut f = Found::default();
                    s.run(&child, extra - 1, &mut f)?;
                    Ok(f)
                });
                for p in parts {
                    found.merge(p?);
                }
            }
            Some(cands) => {
                for child in s.children(&root, &cands) {
                    s.run(&child, extra - 1, &mut found)?;
                }
            }
            None => {}
        }
        budget.tick()?;
        if !found.count.is_zero() {
            // Branches are merged in search order, so truncating first keeps
            // the result independent of the execution mode.
            found.sets.truncate(collect_limit);
            found.sets.sort();
            return Ok((Some(base + extra), found));
        }
    }
    Ok((None, Found::default()))
}

/// Smallest dominating set respecting `constraints`, and how many attain it.
pub fn min_domination_search(
    g: &LabeledGraph,
    constraints: &[DominationConstraint],
    cfg: &OracleConfig,
) -> Result<ConditionedDominationResult> {
    let (min_size, found) = search(g, constraints, 0, cfg)?;
    Ok(ConditionedDominationResult {
        min_size,
        count_at_min: found.count,
    })
}

/// Minimum dominating sets under `constraints` (at most `limit`), each
/// sorted, in lexicographic order.
pub fn enumerate_min_dominating_sets(
    g: &LabeledGraph,
    constraints: &[DominationConstraint],
    limit: usize,
    cfg: &OracleConfig,
) -> Result<Vec<Vec<VertexId>>> {
    Ok(search(g, constraints, limit, cfg)?.1.sets)
}

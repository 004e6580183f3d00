//! Exact maximum-matching search with counting.
//!
//! Vertices are processed along a fixed elimination order. At each vertex the
//! search either leaves it vacant or matches it to a later, still-free
//! neighbor. The only state that matters for the rest of the search is the
//! set of later vertices already matched, so subtrees are memoized on
//! `(position, matched later vertices)`. Each subtree returns its best size
//! and the number of matchings attaining it.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{resolve, Budget, ConditionedMatchingResult, CoverState, MatchingConstraint, OracleConfig};
use crate::bitset::BitSet;
use crate::error::Result;
use crate::graph::{canonical, Edge, LabeledGraph};

type Best = Option<(usize, BigUint)>;

fn absorb(best: &mut Best, size: usize, count: &BigUint) {
    match best {
        Some((s, c)) if *s == size => *c += count,
        Some((s, _)) if *s > size => {}
        _ => *best = Some((size, count.clone())),
    }
}

/// Order vertices so the set of pending (seen but unprocessed) vertices
/// stays small: always take the vertex that adds the fewest new ones.
fn elimination_order(g: &LabeledGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut done = vec![false; n];
    let mut pending = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let pick = (0..n)
            .filter(|&v| !done[v])
            .min_by_key(|&v| {
                let fresh = g.adj(v).iter().filter(|&&u| !done[u] && !pending[u]).count();
                (fresh as isize - pending[v] as isize, !pending[v], v)
            })
            .expect("an unprocessed vertex remains");
        done[pick] = true;
        pending[pick] = false;
        for &u in g.adj(pick) {
            if !done[u] {
                pending[u] = true;
            }
        }
        order.push(pick);
    }
    order
}

struct Solver<'a> {
    order: Vec<usize>,
    /// For each position, the positions of later neighbors.
    later: Vec<Vec<usize>>,
    /// Required state per position.
    req: Vec<CoverState>,
    memo: HashMap<(usize, BitSet), Best>,
    budget: &'a Budget,
}

impl<'a> Solver<'a> {
    fn new(g: &LabeledGraph, req_by_vertex: &[CoverState], budget: &'a Budget) -> Self {
        let order = elimination_order(g);
        let mut pos = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let later = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut l: Vec<usize> = g.adj(v).iter().map(|&u| pos[u]).filter(|&j| j > i).collect();
                l.sort_unstable();
                l
            })
            .collect();
        let req = order.iter().map(|&v| req_by_vertex[v]).collect();
        Solver {
            order,
            later,
            req,
            memo: HashMap::new(),
            budget,
        }
    }

    fn len(&self) -> usize {
        self.order.len()
    }

    /// Successor states of `(i, matched)` with the number of edges each adds.
    fn moves(&self, i: usize, matched: &BitSet) -> Vec<(BitSet, usize, Option<usize>)> {
        let mut out = Vec::new();
        if matched.contains(i) {
            if self.req[i] != CoverState::MustVacate {
                let mut next = matched.clone();
                next.remove(i);
                out.push((next, 0, None));
            }
            return out;
        }
        if self.req[i] != CoverState::MustCover {
            out.push((matched.clone(), 0, None));
        }
        if self.req[i] != CoverState::MustVacate {
            for &j in &self.later[i] {
                if !matched.contains(j) && self.req[j] != CoverState::MustVacate {
                    let mut next = matched.clone();
                    next.insert(j);
                    out.push((next, 1, Some(j)));
                }
            }
        }
        out
    }

    fn solve(&mut self, i: usize, matched: &BitSet) -> Result<Best> {
        if i == self.len() {
            return Ok(Some((0, BigUint::one())));
        }
        let key = (i, matched.clone());
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        self.budget.tick()?;
        let mut best: Best = None;
        for (next, gain, _) in self.moves(i, matched) {
            if let Some((size, count)) = self.solve(i + 1, &next)? {
                absorb(&mut best, size + gain, &count);
            }
        }
        self.memo.insert(key, best.clone());
        Ok(best)
    }

    /// Walk every optimal path below `(i, matched)`, emitting the matchings.
    fn collect(
        &mut self,
        i: usize,
        matched: &BitSet,
        target: usize,
        edges: &mut Vec<Edge>,
        out: &mut Vec<Vec<Edge>>,
        limit: usize,
    ) -> Result<()> {
        if out.len() >= limit {
            return Ok(());
        }
        if i == self.len() {
            let mut m = edges.clone();
            m.sort_unstable();
            out.push(m);
            return Ok(());
        }
        for (next, gain, partner) in self.moves(i, matched) {
            if target < gain {
                continue;
            }
            if let Some((size, _)) = self.solve(i + 1, &next)? {
                if size + gain == target {
                    if let Some(j) = partner {
                        edges.push(canonical(self.order[i], self.order[j]));
                    }
                    self.collect(i + 1, &next, target - gain, edges, out, limit)?;
                    if partner.is_some() {
                        edges.pop();
                    }
                }
            }
        }
        Ok(())
    }
}

fn search_with_states(g: &LabeledGraph, req: &[CoverState], cfg: &OracleConfig) -> Result<ConditionedMatchingResult> {
    let budget = Budget::new(cfg.budget);
    let n = g.vertex_count();
    let root = BitSet::new(n);
    let best = if n == 0 {
        Some((0, BigUint::one()))
    } else if cfg.exec.is_parallel() {
        // Split on the first vertex's choices; each branch gets its own memo.
        let probe = Solver::new(g, req, &budget);
        let branches = probe.moves(0, &root);
        let results = cfg.exec.map(branches, |(next, gain, _)| -> Result<Best> {
            let mut s = Solver::new(g, req, &budget);
            Ok(s.solve(1, &next)?.map(|(size, c)| (size + gain, c)))
        });
        let mut best = None;
        for r in results {
            if let Some((size, c)) = r? {
                absorb(&mut best, size, &c);
            }
        }
        best
    } else {
        Solver::new(g, req, &budget).solve(0, &root)?
    };
    Ok(match best {
        Some((size, count)) => ConditionedMatchingResult {
            max_size: Some(size),
            count_at_max: count,
        },
        None => ConditionedMatchingResult {
            max_size: None,
            count_at_max: BigUint::zero(),
        },
    })
}

/// Largest matching respecting `constraints`, and how many matchings attain it.
pub fn max_matching_search(
    g: &LabeledGraph,
    constraints: &[MatchingConstraint],
    cfg: &OracleConfig,
) -> Result<ConditionedMatchingResult> {
    let req = resolve(g, constraints, CoverState::Free)?;
    search_with_states(g, &req, cfg)
}

/// Number of perfect matchings; zero when the vertex count is odd.
pub fn count_perfect_matchings(g: &LabeledGraph, cfg: &OracleConfig) -> Result<BigUint> {
    if g.vertex_count() % 2 == 1 {
        return Ok(BigUint::zero());
    }
    let req = vec![CoverState::MustCover; g.vertex_count()];
    Ok(search_with_states(g, &req, cfg)?.count_at_max)
}

/// Every maximum matching under `constraints` (at most `limit` of them), each
/// as a sorted edge list, in lexicographic order.
pub fn enumerate_maximum_matchings(
    g: &LabeledGraph,
    constraints: &[MatchingConstraint],
    limit: usize,
    cfg: &OracleConfig,
) -> Result<Vec<Vec<Edge>>> {
    let req = resolve(g, constraints, CoverState::Free)?;
    let budget = Budget::new(cfg.budget);
    let mut solver = Solver::new(g, &req, &budget);
    let root = BitSet::new(g.vertex_count());
    let Some((target, _)) = solver.solve(0, &root)? else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    solver.collect(0, &root, target, &mut Vec::new(), &mut out, limit)?;
    out.sort();
    Ok(out)
}

//! Exhaustive solvers used as ground truth for every recurrence.
//!
//! Both solvers report the optimum and the exact number of optimal
//! solutions, optionally under per-vertex constraints on the distinguished
//! vertices (outmost, center, extreme, special). Work is bounded by a node
//! budget; running out is reported as [`Error::ResourceLimit`], never as a
//! truncated answer.

mod domination;
mod matching;
mod profiles;

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::{LabeledGraph, VertexId, VertexRole};

pub use domination::{enumerate_min_dominating_sets, min_domination_search};
pub use matching::{count_perfect_matchings, enumerate_maximum_matchings, max_matching_search};
pub use profiles::{oracle_domination_profile, oracle_matching_profile, OracleDominationProfile};

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Maximum number of search nodes expanded per query.
    pub budget: u64,
    pub exec: Exec,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            budget: DEFAULT_BUDGET,
            exec: Exec::default(),
        }
    }
}

impl OracleConfig {
    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverState {
    MustCover,
    MustVacate,
    Free,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MemberState {
    MustInclude,
    MustExclude,
    Free,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexConstraint<K> {
    pub vertex: VertexId,
    pub kind: K,
}

pub type MatchingConstraint = VertexConstraint<CoverState>;
pub type DominationConstraint = VertexConstraint<MemberState>;

impl<K> VertexConstraint<K> {
    pub fn new(vertex: VertexId, kind: K) -> Self {
        VertexConstraint { vertex, kind }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionedMatchingResult {
    /// `None` when no matching satisfies the constraints.
    pub max_size: Option<usize>,
    #[serde(serialize_with = "crate::recurrence::decimal")]
    pub count_at_max: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionedDominationResult {
    /// `None` when no dominating set satisfies the constraints.
    pub min_size: Option<usize>,
    #[serde(serialize_with = "crate::recurrence::decimal")]
    pub count_at_min: BigUint,
}

/// Resolve constraints into one state per vertex. Constraints must name
/// distinguished vertices, and a vertex may not carry two different states.
fn resolve<K: Copy + PartialEq>(g: &LabeledGraph, constraints: &[VertexConstraint<K>], free: K) -> Result<Vec<K>> {
    let mut state = vec![free; g.vertex_count()];
    for c in constraints {
        let role = g.role(c.vertex)?;
        if !role.is_distinguished() {
            return Err(Error::invalid(format!(
                "constraint on vertex {} with role {role}; only distinguished vertices may be constrained",
                c.vertex
            )));
        }
        if state[c.vertex] != free && state[c.vertex] != c.kind {
            return Err(Error::invalid(format!(
                "conflicting constraints on vertex {}",
                c.vertex
            )));
        }
        state[c.vertex] = c.kind;
    }
    Ok(state)
}

/// Shared node counter for one query, possibly spread over several threads.
struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
        }
    }

    #[inline]
    fn tick(&self) -> Result<()> {
        if self.used.fetch_add(1, Ordering::Relaxed) >= self.limit {
            return Err(Error::ResourceLimit(format!(
                "search exceeded its budget of {} nodes",
                self.limit
            )));
        }
        Ok(())
    }
}

/// Vertex carrying `role` in `g`, or an input error.
pub fn role_vertex(g: &LabeledGraph, role: VertexRole) -> Result<VertexId> {
    g.find_role(role)
        .ok_or_else(|| Error::invalid(format!("graph has no unique vertex with role {role}")))
}

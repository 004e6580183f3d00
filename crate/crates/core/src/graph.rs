//! Immutable simple graphs with role-tagged vertices.
//!
//! Vertices are dense indices `0..vertex_count`. Edges are stored once, as
//! canonical `(min, max)` pairs in ascending order, which keeps matchings
//! hashable and output deterministic.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::HanoiLabel;

pub type VertexId = usize;

/// Undirected edge in canonical `(min, max)` form.
pub type Edge = (VertexId, VertexId);

pub fn canonical(u: VertexId, v: VertexId) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Apollonian,
    Hanoi,
    ExtHanoi,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Apollonian => "apollonian",
            Family::Hanoi => "hanoi",
            Family::ExtHanoi => "ext-hanoi",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "apollonian" => Ok(Family::Apollonian),
            "hanoi" => Ok(Family::Hanoi),
            "ext-hanoi" => Ok(Family::ExtHanoi),
            other => Err(Error::invalid(format!("unknown family `{other}`"))),
        }
    }
}

/// The three corners of the seed triangle of an Apollonian network.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Corner {
    X,
    Y,
    Z,
}

/// The three all-disks-on-one-peg states of a Hanoi graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Peg {
    A,
    B,
    C,
}

impl Peg {
    pub const ALL: [Peg; 3] = [Peg::A, Peg::B, Peg::C];

    pub fn index(self) -> u8 {
        match self {
            Peg::A => 0,
            Peg::B => 1,
            Peg::C => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexRole {
    Outmost(Corner),
    Center,
    Extreme(Peg),
    Special,
    Interior,
}

impl VertexRole {
    /// Roles that solver constraints may be attached to.
    pub fn is_distinguished(self) -> bool {
        !matches!(self, VertexRole::Interior)
    }
}

impl fmt::Display for VertexRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VertexRole::Outmost(Corner::X) => "outmost-X",
            VertexRole::Outmost(Corner::Y) => "outmost-Y",
            VertexRole::Outmost(Corner::Z) => "outmost-Z",
            VertexRole::Center => "center",
            VertexRole::Extreme(Peg::A) => "extreme-a",
            VertexRole::Extreme(Peg::B) => "extreme-b",
            VertexRole::Extreme(Peg::C) => "extreme-c",
            VertexRole::Special => "special",
            VertexRole::Interior => "interior",
        };
        f.write_str(s)
    }
}

impl FromStr for VertexRole {
    type Err = Error;

    /// Accepts both the long names used in JSON output and the short names
    /// used in constraint patterns (`X`, `O`, `a`, `s`, ...).
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "outmost-X" | "X" => VertexRole::Outmost(Corner::X),
            "outmost-Y" | "Y" => VertexRole::Outmost(Corner::Y),
            "outmost-Z" | "Z" => VertexRole::Outmost(Corner::Z),
            "center" | "O" => VertexRole::Center,
            "extreme-a" | "a" => VertexRole::Extreme(Peg::A),
            "extreme-b" | "b" => VertexRole::Extreme(Peg::B),
            "extreme-c" | "c" => VertexRole::Extreme(Peg::C),
            "special" | "s" => VertexRole::Special,
            "interior" => VertexRole::Interior,
            other => return Err(Error::invalid(format!("unknown vertex role `{other}`"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub num_vertices: usize,
    pub num_edges: usize,
    pub degree_histogram: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    family: Family,
    n: usize,
    adjacency: Vec<Vec<VertexId>>,
    edges: Vec<Edge>,
    roles: Vec<VertexRole>,
    birth: Vec<u32>,
    labels: Vec<Option<HanoiLabel>>,
}

impl LabeledGraph {
    /// Builds and validates a graph. `roles`, `birth` and `labels` must each
    /// have one entry per vertex; `labels` may also be empty.
    pub fn new(
        family: Family,
        n: usize,
        vertex_count: usize,
        edges: impl IntoIterator<Item = Edge>,
        roles: Vec<VertexRole>,
        birth: Vec<u32>,
        labels: Vec<Option<HanoiLabel>>,
    ) -> Result<Self> {
        if roles.len() != vertex_count || birth.len() != vertex_count {
            return Err(Error::invalid("role/birth tables do not match vertex count"));
        }
        let labels = if labels.is_empty() {
            vec![None; vertex_count]
        } else if labels.len() == vertex_count {
            labels
        } else {
            return Err(Error::invalid("label table does not match vertex count"));
        };

        let mut edges: Vec<Edge> = edges.into_iter().map(|(u, v)| canonical(u, v)).collect();
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::invalid(format!("parallel edge {:?}", w[0])));
            }
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            if u == v {
                return Err(Error::invalid(format!("self-loop at {u}")));
            }
            if v >= vertex_count {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count,
                });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(LabeledGraph {
            family,
            n,
            adjacency,
            edges,
            roles,
            birth,
            labels,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Generation parameter (iterations or number of disks).
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn roles(&self) -> &[VertexRole] {
        &self.roles
    }

    pub fn role(&self, v: VertexId) -> Result<VertexRole> {
        self.check_vertex(v)?;
        Ok(self.roles[v])
    }

    pub fn birth_iteration(&self, v: VertexId) -> Result<u32> {
        self.check_vertex(v)?;
        Ok(self.birth[v])
    }

    pub fn births(&self) -> &[u32] {
        &self.birth
    }

    pub fn label(&self, v: VertexId) -> Result<Option<&HanoiLabel>> {
        self.check_vertex(v)?;
        Ok(self.labels[v].as_ref())
    }

    pub fn labels(&self) -> &[Option<HanoiLabel>] {
        &self.labels
    }

    pub fn neighbors(&self, v: VertexId) -> Result<&[VertexId]> {
        self.check_vertex(v)?;
        Ok(&self.adjacency[v])
    }

    /// Unchecked adjacency access for hot loops; panics on a bad id.
    pub(crate) fn adj(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// The unique vertex carrying `role`, if exactly one does.
    pub fn find_role(&self, role: VertexRole) -> Option<VertexId> {
        let mut it = self.roles.iter().enumerate().filter(|(_, r)| **r == role);
        match (it.next(), it.next()) {
            (Some((v, _)), None) => Some(v),
            _ => None,
        }
    }

    pub fn vertices_with_role(&self, pred: impl Fn(VertexRole) -> bool) -> Vec<VertexId> {
        (0..self.vertex_count()).filter(|&v| pred(self.roles[v])).collect()
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count(),
            })
        }
    }

    /// True iff no two edges of `m` share an endpoint. Every edge must be in
    /// the graph; repeating an edge counts as sharing its endpoints.
    pub fn is_matching(&self, m: &[Edge]) -> Result<bool> {
        let mut used = vec![false; self.vertex_count()];
        let mut ok = true;
        for &(u, v) in m {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            if !self.has_edge(u, v) {
                return Err(Error::EdgeNotInGraph(u, v));
            }
            for w in [u, v] {
                if used[w] {
                    ok = false;
                }
                used[w] = true;
            }
        }
        Ok(ok)
    }

    /// True iff every vertex outside `d` has a neighbor in `d`.
    pub fn is_dominating_set(&self, d: &[VertexId]) -> Result<bool> {
        let mut dominated = vec![false; self.vertex_count()];
        for &v in d {
            self.check_vertex(v)?;
            dominated[v] = true;
            for &u in &self.adjacency[v] {
                dominated[u] = true;
            }
        }
        Ok(dominated.into_iter().all(|x| x))
    }

    /// Induced subgraph on `V \ removed`. Survivors are renumbered densely in
    /// their original order; the returned map sends old ids to new ids.
    pub fn delete_vertices(&self, removed: &[VertexId]) -> Result<(LabeledGraph, Vec<Option<VertexId>>)> {
        let mut gone = vec![false; self.vertex_count()];
        for &v in removed {
            self.check_vertex(v)?;
            gone[v] = true;
        }
        let mut map = vec![None; self.vertex_count()];
        let mut next = 0;
        for v in 0..self.vertex_count() {
            if !gone[v] {
                map[v] = Some(next);
                next += 1;
            }
        }
        let keep = |v: usize| !gone[v];
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| keep(u) && keep(v))
            .map(|&(u, v)| (map[u].unwrap(), map[v].unwrap()));
        let pick = |v: &usize| keep(*v);
        let g = LabeledGraph::new(
            self.family,
            self.n,
            next,
            edges,
            (0..self.vertex_count()).filter(pick).map(|v| self.roles[v]).collect(),
            (0..self.vertex_count()).filter(pick).map(|v| self.birth[v]).collect(),
            (0..self.vertex_count())
                .filter(pick)
                .map(|v| self.labels[v].clone())
                .collect(),
        )?;
        Ok((g, map))
    }

    pub fn stats(&self) -> GraphStats {
        let mut degree_histogram = BTreeMap::new();
        for list in &self.adjacency {
            *degree_histogram.entry(list.len()).or_insert(0) += 1;
        }
        GraphStats {
            num_vertices: self.vertex_count(),
            num_edges: self.edge_count(),
            degree_histogram,
        }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &u in &self.adjacency[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == n
    }
}

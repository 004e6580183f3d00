//! Generators for Apollonian networks, Tower of Hanoi graphs and extended
//! Tower of Hanoi graphs.
//!
//! Each family with two known constructions gets both, so the two can be
//! checked against each other:
//!
//! * Apollonian networks by triangle insertion ([`apollonian_iterative`]) and
//!   by gluing three copies at their corners ([`apollonian_selfsimilar`]).
//! * Hanoi graphs from the legal-move predicate ([`HanoiMethod::MoveRule`],
//!   the normative definition) and from three copies joined by bridges
//!   ([`HanoiMethod::SelfSimilar`]).
//!
//! Vertex numbering is fixed. Apollonian corners X, Y, Z are `0, 1, 2` and the
//! center is `3`. Hanoi vertex ids are the ternary value of the label, read
//! with the smallest disk as the most significant digit. The special vertex of
//! an extended Hanoi graph comes last.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{canonical, Corner, Edge, Family, LabeledGraph, Peg, VertexId, VertexRole};

/// Largest `n` the generators accept unless a caller asks for more.
/// `3^16` is about 43 million vertices.
pub const DEFAULT_MAX_N: usize = 16;

/// A Hanoi puzzle state: `digits[i]` is the peg holding the `(i+1)`-th
/// smallest disk.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HanoiLabel {
    digits: Vec<u8>,
}

impl HanoiLabel {
    pub fn new(digits: Vec<u8>) -> Result<Self> {
        if digits.is_empty() || digits.iter().any(|&d| d > 2) {
            return Err(Error::invalid("a Hanoi label is a non-empty string over {0,1,2}"));
        }
        Ok(HanoiLabel { digits })
    }

    /// Label of vertex `id` in `H_n`.
    pub fn from_index(mut id: usize, n: usize) -> Self {
        let mut digits = vec![0u8; n];
        for slot in digits.iter_mut().rev() {
            *slot = (id % 3) as u8;
            id /= 3;
        }
        HanoiLabel { digits }
    }

    pub fn index(&self) -> usize {
        self.digits.iter().fold(0, |acc, &d| acc * 3 + d as usize)
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Number of disks sitting on `peg`.
    pub fn peg_count(&self, peg: u8) -> usize {
        self.digits.iter().filter(|&&d| d == peg).count()
    }
}

impl fmt::Display for HanoiLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for HanoiLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .chars()
            .map(|c| c.to_digit(3).map(|d| d as u8))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::invalid(format!("bad Hanoi label `{s}`")))?;
        HanoiLabel::new(digits)
    }
}

/// Legal single-move relation of the puzzle: the labels differ only at the
/// disk being moved, and every smaller disk sits on the remaining peg.
pub fn hanoi_adjacent(a: &HanoiLabel, b: &HanoiLabel) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut diff = a.digits.iter().zip(&b.digits).enumerate().filter(|(_, (x, y))| x != y);
    let Some((i, (&from, &to))) = diff.next() else {
        return false;
    };
    if diff.next().is_some() {
        return false;
    }
    let spare = 3 - from - to;
    a.digits[..i].iter().all(|&d| d == spare)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// Triangle insertion for Apollonian networks, move rule for Hanoi graphs.
    #[default]
    Iterative,
    SelfSimilar,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "iterative" | "move-rule" => Ok(Method::Iterative),
            "self-similar" => Ok(Method::SelfSimilar),
            other => Err(Error::invalid(format!("unknown construction method `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HanoiMethod {
    MoveRule,
    SelfSimilar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub method: Method,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        FamilySpec {
            family,
            n,
            method: Method::Iterative,
        }
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    pub fn generate(&self) -> Result<LabeledGraph> {
        self.generate_capped(DEFAULT_MAX_N)
    }

    pub fn generate_capped(&self, max_n: usize) -> Result<LabeledGraph> {
        match (self.family, self.method) {
            (Family::Apollonian, Method::Iterative) => apollonian_iterative_capped(self.n, max_n),
            (Family::Apollonian, Method::SelfSimilar) => apollonian_selfsimilar_capped(self.n, max_n),
            (Family::Hanoi, Method::Iterative) => hanoi_capped(self.n, HanoiMethod::MoveRule, max_n),
            (Family::Hanoi, Method::SelfSimilar) => hanoi_capped(self.n, HanoiMethod::SelfSimilar, max_n),
            (Family::ExtHanoi, Method::Iterative) => ext_hanoi_capped(self.n, max_n),
            (Family::ExtHanoi, Method::SelfSimilar) => {
                Err(Error::invalid("extended Hanoi graphs have a single construction"))
            }
        }
    }
}

fn check_cap(n: usize, max_n: usize) -> Result<()> {
    if n > max_n {
        return Err(Error::ResourceLimit(format!(
            "n = {n} exceeds the generation cap of {max_n}"
        )));
    }
    Ok(())
}

fn pow3(n: usize) -> usize {
    3usize.pow(n as u32)
}

fn outmost_roles() -> Vec<VertexRole> {
    vec![
        VertexRole::Outmost(Corner::X),
        VertexRole::Outmost(Corner::Y),
        VertexRole::Outmost(Corner::Z),
    ]
}

pub fn apollonian_iterative(n: usize) -> Result<LabeledGraph> {
    apollonian_iterative_capped(n, DEFAULT_MAX_N)
}

/// Triangle insertion. Every triangle created in the previous round receives
/// a new vertex joined to its three corners, which splits it into three new
/// triangles for the next round. The seed triangle counts as created in
/// round 0.
pub fn apollonian_iterative_capped(n: usize, max_n: usize) -> Result<LabeledGraph> {
    check_cap(n, max_n)?;
    let mut edges: Vec<Edge> = vec![(0, 1), (1, 2), (0, 2)];
    let mut roles = outmost_roles();
    let mut birth = vec![0u32; 3];
    let mut fresh: Vec<[VertexId; 3]> = vec![[0, 1, 2]];
    for t in 1..=n {
        let mut next = Vec::with_capacity(fresh.len() * 3);
        for [a, b, c] in fresh {
            let z = roles.len();
            roles.push(if t == 1 {
                VertexRole::Center
            } else {
                VertexRole::Interior
            });
            birth.push(t as u32);
            edges.extend([(a, z), (b, z), (c, z)]);
            next.extend([[a, b, z], [b, c, z], [c, a, z]]);
        }
        fresh = next;
    }
    LabeledGraph::new(Family::Apollonian, n, roles.len(), edges, roles, birth, vec![])
}

pub fn apollonian_selfsimilar(n: usize) -> Result<LabeledGraph> {
    apollonian_selfsimilar_capped(n, DEFAULT_MAX_N)
}

/// Three copies of `A_k` glued into `A_{k+1}`: each copy's X becomes the new
/// center, and the remaining corners pair up as
/// `Y1 = Z2 -> X`, `Y3 = Z1 -> Y`, `Y2 = Z3 -> Z`. Seeded at `A_1 = K4`.
pub fn apollonian_selfsimilar_capped(n: usize, max_n: usize) -> Result<LabeledGraph> {
    check_cap(n, max_n)?;
    if n == 0 {
        return apollonian_iterative(0);
    }
    const X: usize = 0;
    const Y: usize = 1;
    const Z: usize = 2;
    const O: usize = 3;
    let mut vertex_count = 4;
    let mut edges: BTreeSet<Edge> = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)].into();
    let mut birth: Vec<u32> = vec![0, 0, 0, 1];
    // Where each copy's X, Y, Z land.
    let corner_maps: [[usize; 3]; 3] = [[O, X, Y], [O, Z, X], [O, Y, Z]];
    for _ in 1..n {
        let old_count = vertex_count;
        let interior = old_count - 3;
        let mut next_edges = BTreeSet::new();
        let mut next_birth = vec![0, 0, 0, 1];
        for (copy, corners) in corner_maps.iter().enumerate() {
            let offset = 4 + copy * interior;
            let place = |v: usize| if v < 3 { corners[v] } else { offset + (v - 3) };
            for &(u, v) in &edges {
                next_edges.insert(canonical(place(u), place(v)));
            }
            next_birth.extend(birth[3..].iter().map(|b| b + 1));
        }
        vertex_count = 4 + 3 * interior;
        edges = next_edges;
        birth = next_birth;
    }
    let mut roles = outmost_roles();
    roles.push(VertexRole::Center);
    roles.resize(vertex_count, VertexRole::Interior);
    LabeledGraph::new(Family::Apollonian, n, vertex_count, edges, roles, birth, vec![])
}

pub fn hanoi(n: usize, method: HanoiMethod) -> Result<LabeledGraph> {
    hanoi_capped(n, method, DEFAULT_MAX_N)
}

pub fn hanoi_capped(n: usize, method: HanoiMethod, max_n: usize) -> Result<LabeledGraph> {
    if n == 0 {
        return Err(Error::invalid("Hanoi graphs need at least one disk"));
    }
    check_cap(n, max_n)?;
    let edges = match method {
        HanoiMethod::MoveRule => hanoi_edges_move_rule(n),
        HanoiMethod::SelfSimilar => hanoi_edges_self_similar(n),
    };
    let count = pow3(n);
    let (roles, labels) = hanoi_tables(n);
    LabeledGraph::new(Family::Hanoi, n, count, edges, roles, vec![0; count], labels)
}

/// Vertex ids of the extremes `0^n`, `1^n`, `2^n` of `H_n`.
pub fn hanoi_extremes(n: usize) -> [VertexId; 3] {
    let ones = (pow3(n) - 1) / 2;
    [0, ones, 2 * ones]
}

fn hanoi_tables(n: usize) -> (Vec<VertexRole>, Vec<Option<HanoiLabel>>) {
    let count = pow3(n);
    let mut roles = vec![VertexRole::Interior; count];
    for (peg, id) in Peg::ALL.into_iter().zip(hanoi_extremes(n)) {
        roles[id] = VertexRole::Extreme(peg);
    }
    let labels = (0..count).map(|id| Some(HanoiLabel::from_index(id, n))).collect();
    (roles, labels)
}

fn hanoi_edges_move_rule(n: usize) -> Vec<Edge> {
    let mut edges = Vec::with_capacity(3 * pow3(n) / 2);
    // Place value of the i-th smallest disk's digit.
    let place: Vec<usize> = (0..n).map(|i| pow3(n - 1 - i)).collect();
    for id in 0..pow3(n) {
        let label = HanoiLabel::from_index(id, n);
        let d = label.digits();
        // The smallest disk may always move to either other peg.
        for to in 0..3u8 {
            if to != d[0] {
                let other = id - d[0] as usize * place[0] + to as usize * place[0];
                if id < other {
                    edges.push((id, other));
                }
            }
        }
        // The only other legal move: the top disk of the remaining non-empty
        // peg, which is the first disk not stacked with the smallest one.
        if let Some(i) = (1..n).find(|&i| d[i] != d[0]) {
            let to = 3 - d[i] - d[0];
            let other = id - d[i] as usize * place[i] + to as usize * place[i];
            if id < other {
                edges.push((id, other));
            }
        }
    }
    edges
}

fn hanoi_edges_self_similar(n: usize) -> Vec<Edge> {
    let mut edges: Vec<Edge> = vec![(0, 1), (0, 2), (1, 2)];
    for k in 1..n {
        // Appending the new largest disk's peg `c` maps id x to 3x + c.
        let mut next = Vec::with_capacity(3 * edges.len() + 3);
        for c in 0..3 {
            next.extend(edges.iter().map(|&(u, v)| (3 * u + c, 3 * v + c)));
        }
        // Moving the largest disk between pegs i and j needs every smaller
        // disk on the spare peg: extreme `spare^k` of copies i and j.
        let ext = hanoi_extremes(k);
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let spare = 3 - i - j;
            next.push((3 * ext[spare] + i, 3 * ext[spare] + j));
        }
        edges = next;
    }
    edges
}

pub fn ext_hanoi(n: usize) -> Result<LabeledGraph> {
    ext_hanoi_capped(n, DEFAULT_MAX_N)
}

/// `H_n` plus a special vertex (id `3^n`) joined to the three extremes.
pub fn ext_hanoi_capped(n: usize, max_n: usize) -> Result<LabeledGraph> {
    if n == 0 {
        return Err(Error::invalid("extended Hanoi graphs need at least one disk"));
    }
    check_cap(n, max_n)?;
    let s = pow3(n);
    let mut edges = hanoi_edges_move_rule(n);
    edges.extend(hanoi_extremes(n).map(|e| (e, s)));
    let (mut roles, mut labels) = hanoi_tables(n);
    roles.push(VertexRole::Special);
    labels.push(None);
    LabeledGraph::new(Family::ExtHanoi, n, s + 1, edges, roles, vec![0; s + 1], labels)
}

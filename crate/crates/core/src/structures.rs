//! Explicit witnesses: perfect matchings of extended Hanoi graphs and of
//! Hanoi graphs minus their extremes, the unique minimum dominating set of
//! large Apollonian networks, and the four parity classes that dominate
//! extended Hanoi graphs of odd order.
//!
//! Every constructor validates its output against the definitional checks in
//! [`crate::graph`] before returning it.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{apollonian_iterative, ext_hanoi, hanoi, hanoi_extremes, HanoiLabel, HanoiMethod};
use crate::graph::{canonical, Edge, Family, LabeledGraph, Peg, VertexId, VertexRole};
use crate::recurrence::domination_sizes;

fn pow3(k: usize) -> usize {
    3usize.pow(k as u32)
}

/// Perfect matching of `H_n` with extreme `missing` (peg index) removed,
/// in `H_n` vertex ids.
///
/// `H_{n+1}` is three copies of `H_n` (copy `c` maps `x` to `3x + c`). Every
/// copy drops its own extreme on the same peg; the copy on that peg loses the
/// global extreme, and the other two copies are joined by the bridge between
/// their dropped extremes.
fn hanoi_pm_missing(n: usize, missing: usize) -> Vec<Edge> {
    if n == 1 {
        let rest: Vec<usize> = (0..3).filter(|&p| p != missing).collect();
        return vec![(rest[0], rest[1])];
    }
    let inner = hanoi_pm_missing(n - 1, missing);
    let ext = hanoi_extremes(n - 1)[missing];
    let mut out = Vec::with_capacity(3 * inner.len() + 1);
    for c in 0..3 {
        out.extend(inner.iter().map(|&(u, v)| (3 * u + c, 3 * v + c)));
    }
    let others: Vec<usize> = (0..3).filter(|&c| c != missing).collect();
    out.push((3 * ext + others[0], 3 * ext + others[1]));
    out
}

fn sorted(mut edges: Vec<Edge>) -> Vec<Edge> {
    for e in &mut edges {
        *e = canonical(e.0, e.1);
    }
    edges.sort_unstable();
    edges
}

fn check_perfect(g: &LabeledGraph, m: &[Edge], skip: usize, what: &str) -> Result<()> {
    if !g.is_matching(m)? || 2 * m.len() + skip != g.vertex_count() {
        return Err(Error::invariant(format!(
            "constructed {what} is not a perfect matching"
        )));
    }
    Ok(())
}

/// Perfect matching of `S+_n` with `(3^n + 1)/2` edges: a perfect matching of
/// `H_n` minus extreme `c`, plus the edge between `c` and the special vertex.
pub fn build_perfect_matching_ext_hanoi(n: usize) -> Result<Vec<Edge>> {
    let g = ext_hanoi(n)?;
    let c = hanoi_extremes(n)[Peg::C.index() as usize];
    let mut m = hanoi_pm_missing(n, Peg::C.index() as usize);
    m.push((c, pow3(n)));
    let m = sorted(m);
    check_perfect(&g, &m, 0, "extended Hanoi matching")?;
    Ok(m)
}

/// Perfect matching of `H_n` minus its three extremes, with `(3^n - 3)/2`
/// edges, in `H_n` vertex ids. Each copy contributes a matching of itself
/// minus its extremes, and the three bridges pair up the copy extremes.
pub fn build_pm_hanoi_minus_extremes(n: usize) -> Result<Vec<Edge>> {
    if n < 2 {
        return Err(Error::invalid("needs at least two disks"));
    }
    fn rec(n: usize) -> Vec<Edge> {
        if n == 1 {
            return Vec::new();
        }
        let inner = rec(n - 1);
        let ext = hanoi_extremes(n - 1);
        let mut out = Vec::with_capacity(3 * inner.len() + 3);
        for c in 0..3 {
            out.extend(inner.iter().map(|&(u, v)| (3 * u + c, 3 * v + c)));
        }
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let spare = 3 - i - j;
            out.push((3 * ext[spare] + i, 3 * ext[spare] + j));
        }
        out
    }
    let g = hanoi(n, HanoiMethod::MoveRule)?;
    let m = sorted(rec(n));
    check_perfect(&g, &m, 3, "Hanoi matching")?;
    if m.iter()
        .any(|&(u, v)| hanoi_extremes(n).contains(&u) || hanoi_extremes(n).contains(&v))
    {
        return Err(Error::invariant("constructed Hanoi matching touches an extreme"));
    }
    Ok(m)
}

/// The unique minimum dominating set of `A_n`, `n >= 4`: every vertex born in
/// iteration `n - 3` or earlier, i.e. a copy of `A_{n-3}`.
pub fn build_apollonian_mds(n: usize) -> Result<Vec<VertexId>> {
    if n < 4 {
        return Err(Error::invalid("the minimum dominating set is unique only from n = 4"));
    }
    let g = apollonian_iterative(n)?;
    apollonian_mds_in(&g)
}

/// As [`build_apollonian_mds`], on an already generated `A_n` whose birth
/// tags come from the iterative construction.
pub fn apollonian_mds_in(g: &LabeledGraph) -> Result<Vec<VertexId>> {
    if g.family() != Family::Apollonian || g.n() < 4 {
        return Err(Error::invalid("expected an Apollonian network with n >= 4"));
    }
    let cutoff = (g.n() - 3) as u32;
    let d: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| g.births()[v] <= cutoff).collect();
    let gamma = domination_sizes(g.n())?.domination_number;
    if !g.is_dominating_set(&d)? || d.len() as u128 != gamma {
        return Err(Error::invariant(format!(
            "vertices born by iteration {cutoff} do not form a dominating set of size {gamma}"
        )));
    }
    Ok(d)
}

/// Whether vertex label `l` falls in parity class `k` (1..=3) of `H_n`.
fn in_class(l: &HanoiLabel, k: usize) -> bool {
    let even = |p: u8| l.peg_count(p) % 2 == 0;
    match k {
        1 => even(0) && even(1),
        2 => even(0) && even(2),
        3 => even(1) && even(2),
        _ => !even(0) && !even(1) && !even(2),
    }
}

/// The `k`-th parity class of `S+_n` (n odd, `k` in 1..=4), sorted. Classes
/// 1-3 keep Hanoi states where two given pegs hold an even number of disks;
/// class 4 keeps states where all three counts are odd, plus the special
/// vertex.
pub fn build_code_class(n: usize, k: usize) -> Result<Vec<VertexId>> {
    if n % 2 == 0 {
        return Err(Error::invalid("parity classes dominate only for odd n"));
    }
    if !(1..=4).contains(&k) {
        return Err(Error::invalid(format!("class index must be 1..=4, got {k}")));
    }
    let g = ext_hanoi(n)?;
    let mut set: Vec<VertexId> = (0..pow3(n))
        .filter(|&v| in_class(&HanoiLabel::from_index(v, n), k))
        .collect();
    if k == 4 {
        set.push(pow3(n));
    }
    if set.len() != (pow3(n) + 1) / 4 || !g.is_dominating_set(&set)? {
        return Err(Error::invariant(format!(
            "parity class {k} of S+_{n} is not a dominating set of the expected size"
        )));
    }
    Ok(set)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ExtremeType {
    /// In the dominating set.
    I,
    /// Dominated from inside the Hanoi part.
    D,
    /// Dominated only by the special vertex.
    C,
}

impl fmt::Display for ExtremeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtremeType::I => "I",
            ExtremeType::D => "D",
            ExtremeType::C => "C",
        })
    }
}

/// Types of the extremes a, b, c of `S+_n` relative to dominating set `d`,
/// taking the Hanoi part as the region.
pub fn classify_extreme_types(g: &LabeledGraph, d: &[VertexId]) -> Result<[ExtremeType; 3]> {
    if g.family() != Family::ExtHanoi {
        return Err(Error::invalid("extreme types are defined on extended Hanoi graphs"));
    }
    if !g.is_dominating_set(d)? {
        return Err(Error::invalid("not a dominating set"));
    }
    let in_d = {
        let mut v = vec![false; g.vertex_count()];
        for &x in d {
            v[x] = true;
        }
        v
    };
    let inside = |v: VertexId| g.roles()[v] != VertexRole::Special;
    let mut out = [ExtremeType::C; 3];
    for (slot, peg) in out.iter_mut().zip(Peg::ALL) {
        let e = g
            .find_role(VertexRole::Extreme(peg))
            .ok_or_else(|| Error::invalid("missing extreme vertex"))?;
        *slot = if in_d[e] {
            ExtremeType::I
        } else if g.adj(e).iter().any(|&u| in_d[u] && inside(u)) {
            ExtremeType::D
        } else {
            ExtremeType::C
        };
    }
    Ok(out)
}

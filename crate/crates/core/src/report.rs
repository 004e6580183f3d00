//! Rendering of the matching-count table and the growth-constant brackets
//! as aligned text, CSV and JSON.

use serde::Serialize;

use crate::error::Result;
use crate::growth::GrowthBounds;
use crate::oracle::{oracle_matching_profile, OracleConfig};
use crate::recurrence::{apollonian_vertex_count, matching_counts, MatchingCounts};

/// Columns `n = 1..=5`: vertex count and the four matching counts. The first
/// two columns come from exhaustive search, the rest from the recursion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountTable {
    pub columns: Vec<CountColumn>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountColumn {
    pub n: usize,
    pub vertices: u128,
    pub source: &'static str,
    pub counts: MatchingCounts,
}

pub const COUNT_TABLE_ROWS: [&str; 5] = ["V_n", "varphi_n", "theta_n", "phi_n", "tau_n"];

pub fn count_table(cfg: &OracleConfig) -> Result<CountTable> {
    let mut columns = Vec::with_capacity(5);
    for n in 1..=5 {
        let (source, counts) = if n <= 2 {
            ("oracle", oracle_matching_profile(n, cfg)?.counts)
        } else {
            ("recurrence", matching_counts(n)?)
        };
        columns.push(CountColumn {
            n,
            vertices: apollonian_vertex_count(n),
            source,
            counts,
        });
    }
    Ok(CountTable { columns })
}

impl CountTable {
    /// Cells row by row, row label first; the header row is `n, 1, 2, ...`.
    pub fn rows(&self) -> Vec<Vec<String>> {
        let mut rows = vec![std::iter::once("n".to_string())
            .chain(self.columns.iter().map(|c| c.n.to_string()))
            .collect::<Vec<_>>()];
        for (i, label) in COUNT_TABLE_ROWS.iter().enumerate() {
            let mut row = vec![label.to_string()];
            for c in &self.columns {
                row.push(if i == 0 {
                    c.vertices.to_string()
                } else {
                    c.counts.as_array()[i - 1].to_string()
                });
            }
            rows.push(row);
        }
        rows
    }

    pub fn to_csv(&self) -> String {
        self.rows().iter().map(|r| r.join(",") + "\n").collect()
    }

    pub fn to_text(&self) -> String {
        render_aligned(&self.rows())
    }
}

fn render_aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| rows.iter().filter_map(|r| r.get(j)).map(String::len).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(j, c)| {
                if j == 0 {
                    format!("{c:<w$}", w = widths[j])
                } else {
                    format!("{c:>w$}", w = widths[j])
                }
            })
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub const GROWTH_HEADER: [&str; 5] = ["m", "lower", "upper", "gap", "z_estimate"];

fn growth_rows(bounds: &[GrowthBounds]) -> Vec<Vec<String>> {
    let mut rows = vec![GROWTH_HEADER.iter().map(|s| s.to_string()).collect()];
    for b in bounds {
        rows.push(vec![
            b.m.to_string(),
            format!("{:.10}", b.lower),
            format!("{:.10}", b.upper),
            format!("{:.10}", b.gap),
            format!("{:.10}", b.z_estimate),
        ]);
    }
    rows
}

pub fn growth_csv(bounds: &[GrowthBounds]) -> String {
    growth_rows(bounds).iter().map(|r| r.join(",") + "\n").collect()
}

pub fn growth_text(bounds: &[GrowthBounds]) -> String {
    let mut out = render_aligned(&growth_rows(bounds));
    if let (Some(last), Some(first)) = (bounds.last(), bounds.first()) {
        out.push_str(&format!("q = {:.10}\n", first.q));
        out.push_str(&format!(
            "bracket at m={}: [{:.10}, {:.10}]\n",
            last.m, last.lower, last.upper
        ));
    }
    out
}

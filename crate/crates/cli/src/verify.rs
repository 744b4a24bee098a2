//! Checking a candidate solution against an instance.

use std::fmt;

use dualfvs_core::{Color, Cycle, EdgeColoredGraph, VertexId, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    Valid,
    Minimal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorCheck {
    pub color: Color,
    /// A cycle of `g - S` in this color, if there is one.
    pub witness: Option<Cycle>,
}

impl ColorCheck {
    pub fn acyclic(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub mode: VerifyMode,
    pub colors: Vec<ColorCheck>,
    /// Minimal mode only: a member whose removal keeps the set valid.
    pub redundant: Option<VertexId>,
}

impl VerifyReport {
    pub fn valid(&self) -> bool {
        self.colors.iter().all(ColorCheck::acyclic)
    }

    pub fn passed(&self) -> bool {
        self.valid() && self.redundant.is_none()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.colors {
            match &check.witness {
                None => writeln!(f, "color {}: acyclic", check.color)?,
                Some(cycle) => {
                    let ids: Vec<String> = cycle.vertices.iter().map(ToString::to_string).collect();
                    writeln!(f, "color {}: cycle {}", check.color, ids.join(" "))?
                }
            }
        }
        if self.mode == VerifyMode::Minimal && self.valid() {
            match self.redundant {
                None => writeln!(f, "minimal: yes")?,
                Some(v) => writeln!(f, "minimal: no, still valid without {v}")?,
            }
        }
        writeln!(f, "result: {}", if self.passed() { "pass" } else { "fail" })
    }
}

fn color_checks(g: &EdgeColoredGraph, s: &VertexSet) -> Vec<ColorCheck> {
    let rest = g.delete_vertices(s.iter().copied());
    (1..=g.colors())
        .map(|color| ColorCheck {
            color,
            witness: rest.find_monochromatic_cycle(color).expect("color in range"),
        })
        .collect()
}

pub fn verify_solution(
    g: &EdgeColoredGraph,
    s: &VertexSet,
    mode: VerifyMode,
) -> Result<VerifyReport, dualfvs_core::Error> {
    if let Some(&v) = s.iter().find(|&&v| !g.contains(v)) {
        return Err(dualfvs_core::Error::UnknownVertex(v));
    }
    let colors = color_checks(g, s);
    let mut report = VerifyReport { mode, colors, redundant: None };
    if mode == VerifyMode::Minimal && report.valid() {
        report.redundant = s.iter().copied().find(|&v| {
            let mut smaller = s.clone();
            smaller.remove(&v);
            color_checks(g, &smaller).iter().all(ColorCheck::acyclic)
        });
    }
    Ok(report)
}

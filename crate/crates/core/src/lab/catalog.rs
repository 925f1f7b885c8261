//! Test matrices described by their Jordan blocks, and the verification run
//! over a list of them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::matrix::{self, Matrix};
use crate::algebra::PrimeField;

use super::conjugate::random_conjugate;
use super::finite::{FiniteSection, SplitClass};
use super::verify::{
    verify_chart_cover, verify_reducible_split, verify_sing_prediction, CountReport,
};
use super::LabError;

const DEFAULT_CATALOG: &str = include_str!("../../catalog/default.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSpec {
    pub eigenvalue: i64,
    pub size: usize,
}

/// One matrix over `F_q`, given either as Jordan blocks or as explicit
/// integer entries (reduced mod `q`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub q: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<BlockSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<i64>>>,
}

impl CatalogEntry {
    pub fn label(&self) -> String {
        if let Some(name) = &self.name {
            return name.clone();
        }
        match &self.blocks {
            Some(blocks) => {
                let parts: Vec<String> = blocks
                    .iter()
                    .map(|b| format!("J{}({})", b.size, b.eigenvalue))
                    .collect();
                format!("q={} {}", self.q, parts.join("+"))
            }
            None => format!("q={} explicit matrix", self.q),
        }
    }

    pub fn field(&self) -> Result<PrimeField, LabError> {
        Ok(PrimeField::new(self.q)?)
    }

    pub fn build(&self) -> Result<Matrix<u64>, LabError> {
        let f = self.field()?;
        match (&self.blocks, &self.matrix) {
            (Some(blocks), None) => {
                if blocks.is_empty() || blocks.iter().any(|b| b.size == 0) {
                    return Err(LabError::BadEntry(
                        self.label(),
                        "empty block list or zero-size block".into(),
                    ));
                }
                let parts: Vec<Matrix<u64>> = blocks
                    .iter()
                    .map(|b| matrix::jordan_block(&f, &f.reduce_i64(b.eigenvalue), b.size))
                    .collect();
                Ok(matrix::direct_sum(&f, &parts))
            }
            (None, Some(rows)) => {
                let rows = rows
                    .iter()
                    .map(|r| r.iter().map(|v| f.reduce_i64(*v)).collect())
                    .collect();
                Matrix::from_rows(rows).map_err(LabError::from)
            }
            _ => Err(LabError::BadEntry(
                self.label(),
                "exactly one of \"blocks\" and \"matrix\" is required".into(),
            )),
        }
    }

    /// Jordan data per eigenvalue as dictated by the block list, sorted by
    /// eigenvalue; `None` for explicit matrices.
    pub fn expected_classes(&self) -> Option<Vec<SplitClass>> {
        let blocks = self.blocks.as_ref()?;
        let q = self.q as i64;
        let mut by_value: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for b in blocks {
            by_value
                .entry(b.eigenvalue.rem_euclid(q) as u64)
                .or_default()
                .push(b.size);
        }
        Some(
            by_value
                .into_iter()
                .map(|(eigenvalue, sizes)| SplitClass {
                    eigenvalue,
                    multiplicity: sizes.iter().sum(),
                    r: sizes.len(),
                    s: sizes.iter().filter(|&&k| k > 1).count(),
                })
                .collect(),
        )
    }
}

pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, LabError> {
    let entries: Vec<CatalogEntry> =
        serde_json::from_str(text).map_err(|e| LabError::BadCatalog(e.to_string()))?;
    if entries.is_empty() {
        return Err(LabError::EmptyCatalog);
    }
    Ok(entries)
}

/// The built-in catalog: `n` in {2, 3}, `q` in {3, 5, 7}, every shape
/// `(s, r)` that occurs for irreducible sections at that size, plus
/// reducible matrices of both kinds.
pub fn default_catalog() -> Vec<CatalogEntry> {
    parse_catalog(DEFAULT_CATALOG).expect("built-in catalog is valid")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryOutcome {
    pub label: String,
    pub q: u64,
    pub n: usize,
    pub status: Status,
    pub reason: Option<String>,
    pub report: Option<CountReport>,
    /// Block list versus nullities of the built matrix.
    pub construction_matches: Option<bool>,
    pub chart_cover_agrees: Option<bool>,
    /// `(h_count, sing_count)` unchanged under the seeded conjugations.
    pub conjugation_invariant: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub q_max: Option<u64>,
    pub seed: u64,
    pub conjugates: usize,
    pub charts: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            q_max: None,
            seed: 0,
            conjugates: 2,
            charts: true,
        }
    }
}

fn counts(sec: &FiniteSection) -> (usize, usize) {
    let h = sec.enumerate_h();
    let sing = h.iter().filter(|p| sec.is_singular(p)).count();
    (h.len(), sing)
}

/// Runs every check for one entry. Malformed entries are errors; a
/// characteristic polynomial that does not split, or `q` above the cap, is
/// a skip.
pub fn run_entry(entry: &CatalogEntry, opts: &RunOptions) -> Result<EntryOutcome, LabError> {
    let f = entry.field()?;
    let a = entry.build()?;
    let sec = FiniteSection::new(f, a)?;
    let mut out = EntryOutcome {
        label: entry.label(),
        q: entry.q,
        n: sec.n(),
        status: Status::Pass,
        reason: None,
        report: None,
        construction_matches: None,
        chart_cover_agrees: None,
        conjugation_invariant: None,
    };
    if let Some(cap) = opts.q_max {
        if entry.q > cap {
            out.status = Status::Skipped;
            out.reason = Some(format!("q = {} exceeds --q-max {}", entry.q, cap));
            return Ok(out);
        }
    }
    let classes = match sec.split_classes() {
        Ok(c) => c,
        Err(LabError::DoesNotSplit { q }) => {
            out.status = Status::Skipped;
            out.reason = Some(format!("does not split over F_{q}"));
            return Ok(out);
        }
        Err(e) => return Err(e),
    };
    if let Some(expected) = entry.expected_classes() {
        out.construction_matches = Some(expected == classes);
    }
    let report = if sec.rank_one_eigenvalue().is_some() {
        verify_reducible_split(&sec)?
    } else {
        verify_sing_prediction(&sec)?
    };
    if opts.charts {
        out.chart_cover_agrees = Some(verify_chart_cover(&sec)?);
    }
    if opts.conjugates > 0 {
        let base = (
            report.h_count as usize,
            report.sing_count_enumerated as usize,
        );
        let mut same = true;
        for k in 0..opts.conjugates {
            let b = random_conjugate(&f, sec.matrix(), opts.seed.wrapping_add(k as u64));
            same &= counts(&FiniteSection::new(f, b)?) == base;
        }
        out.conjugation_invariant = Some(same);
    }
    let mut failures = Vec::new();
    if !report.passed {
        failures.push("enumerated counts differ from prediction");
    }
    if out.construction_matches == Some(false) {
        failures.push("Jordan data of the built matrix differs from its block list");
    }
    if out.chart_cover_agrees == Some(false) {
        failures.push("chart singular points differ from global singular points");
    }
    if out.conjugation_invariant == Some(false) {
        failures.push("counts changed under conjugation");
    }
    if !failures.is_empty() {
        out.status = Status::Fail;
        out.reason = Some(failures.join("; "));
    }
    out.report = Some(report);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_catalog_is_broad() {
        let cat = default_catalog();
        assert!(cat.len() >= 20);
        let mut shapes = std::collections::BTreeSet::new();
        for e in &cat {
            for c in e.expected_classes().unwrap() {
                shapes.insert((c.s, c.r));
            }
        }
        for s in [(0, 1), (1, 1), (0, 2), (1, 2), (2, 2)] {
            assert!(shapes.contains(&s), "missing shape {s:?}");
        }
    }

    #[test]
    fn parsing_errors() {
        assert_eq!(parse_catalog("[]"), Err(LabError::EmptyCatalog));
        assert!(matches!(parse_catalog("{"), Err(LabError::BadCatalog(_))));
        let e = &parse_catalog(r#"[{"q":5}]"#).unwrap()[0];
        assert!(matches!(e.build(), Err(LabError::BadEntry(..))));
    }

    #[test]
    fn explicit_non_split_entry_is_skipped() {
        let e = &parse_catalog(r#"[{"q":3,"matrix":[[0,2,0],[1,0,0],[0,0,0]]}]"#).unwrap()[0];
        let out = run_entry(e, &RunOptions::default()).unwrap();
        assert_eq!(out.status, Status::Skipped);
        assert_eq!(out.reason.as_deref(), Some("does not split over F_3"));
    }

    #[test]
    fn block_entry_passes() {
        let e = &parse_catalog(
            r#"[{"q":5,"blocks":[{"eigenvalue":0,"size":2},{"eigenvalue":-4,"size":1}]}]"#,
        )
        .unwrap()[0];
        assert_eq!(e.label(), "q=5 J2(0)+J1(-4)");
        let out = run_entry(e, &RunOptions::default()).unwrap();
        assert_eq!(out.status, Status::Pass, "{out:?}");
        assert_eq!(out.construction_matches, Some(true));
    }
}

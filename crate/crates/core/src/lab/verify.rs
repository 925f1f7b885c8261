//! Enumerated counts checked against the Jordan-data predictions.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::matrix;
use crate::algebra::{Field, PrimeField};
use crate::section::{local_chart_equation, ReducibleKind};

use super::count::count_v;
use super::finite::FiniteSection;
use super::points::{dot, PointPair, ProjPoint};
use super::LabError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeCount {
    pub eigenvalue: u64,
    pub multiplicity: usize,
    pub s: usize,
    pub r: usize,
    pub predicted: u64,
    pub enumerated: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitCheck {
    pub eigenvalue: u64,
    pub kind: ReducibleKind,
    pub d1: u64,
    pub d2: u64,
    pub intersection: u64,
    pub intersection_predicted: u64,
    pub union_equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub q: u64,
    pub n: usize,
    pub h_count: u64,
    pub sing_count_enumerated: u64,
    pub sing_count_predicted: u64,
    pub breakdown: Vec<ShapeCount>,
    pub split_check: Option<SplitCheck>,
    pub passed: bool,
}

/// Singular points against `Σ |V_{s_i,r_i}(F_q)|`. Reducible sections are
/// accepted too: their singular set is `D1 ∩ D2`, which is the shape of the
/// rank-one eigenvalue.
pub fn verify_sing_prediction(sec: &FiniteSection) -> Result<CountReport, LabError> {
    let classes = sec.split_classes()?;
    let h = sec.enumerate_h();
    let sing: Vec<&PointPair> = h.iter().filter(|p| sec.is_singular(p)).collect();
    let mut breakdown = Vec::new();
    for c in &classes {
        breakdown.push(ShapeCount {
            eigenvalue: c.eigenvalue,
            multiplicity: c.multiplicity,
            s: c.s,
            r: c.r,
            predicted: count_v(c.s, c.r, sec.q())?,
            enumerated: sing
                .iter()
                .filter(|p| sec.in_sing_lambda(p, c.eigenvalue))
                .count() as u64,
        });
    }
    let predicted: u64 = breakdown.iter().map(|b| b.predicted).sum();
    let enumerated = sing.len() as u64;
    let passed = predicted == enumerated
        && breakdown.iter().all(|b| b.predicted == b.enumerated)
        && breakdown.iter().map(|b| b.enumerated).sum::<u64>() == enumerated;
    Ok(CountReport {
        q: sec.q(),
        n: sec.n(),
        h_count: h.len() as u64,
        sing_count_enumerated: enumerated,
        sing_count_predicted: predicted,
        breakdown,
        split_check: None,
        passed,
    })
}

/// For `A = λI + a b^t`, compares `H` with `D1 ∪ D2` where
/// `D1 = {a^t x = 0}` and `D2 = {b^t y = 0}` inside `X(F_q)`.
pub fn verify_reducible_split(sec: &FiniteSection) -> Result<CountReport, LabError> {
    let f = sec.field();
    let lambda = sec.rank_one_eigenvalue().ok_or(LabError::NotReducible)?;
    let b = matrix::shift(f, sec.matrix(), &lambda);
    let size = sec.n() + 1;
    let (pi, pj) = (0..size)
        .flat_map(|i| (0..size).map(move |j| (i, j)))
        .find(|&(i, j)| *b.get(i, j) != 0)
        .expect("rank one matrix has a nonzero entry");
    let col: Vec<u64> = (0..size).map(|i| *b.get(i, pj)).collect();
    let inv = f.inv(b.get(pi, pj)).expect("nonzero pivot");
    let row: Vec<u64> = (0..size).map(|j| f.mul(b.get(pi, j), &inv)).collect();
    debug_assert!((0..size).all(|i| (0..size).all(|j| f.mul(&col[i], &row[j]) == *b.get(i, j))));

    let flag = sec.flag_points();
    let in_d1 = |p: &PointPair| dot(f, &col, p.x.coords()) == 0;
    let in_d2 = |p: &PointPair| dot(f, &row, p.y.coords()) == 0;
    let union: Vec<PointPair> = flag
        .iter()
        .filter(|p| in_d1(p) || in_d2(p))
        .cloned()
        .collect();
    let d1 = flag.iter().filter(|p| in_d1(p)).count() as u64;
    let d2 = flag.iter().filter(|p| in_d2(p)).count() as u64;
    let both = flag.iter().filter(|p| in_d1(p) && in_d2(p)).count() as u64;

    let h = sec.enumerate_h();
    let kind = if f.is_zero(&matrix::trace(f, &b)) {
        ReducibleKind::NonDiagonalizable
    } else {
        ReducibleKind::Diagonalizable
    };
    let predicted = match kind {
        ReducibleKind::Diagonalizable => count_v(0, sec.n(), sec.q())?,
        ReducibleKind::NonDiagonalizable => count_v(1, sec.n(), sec.q())?,
    };
    let sing = h.iter().filter(|p| sec.is_singular(p)).count() as u64;
    let union_equal = union == h;
    let passed =
        union_equal && both == predicted && d1 + d2 - both == h.len() as u64 && sing == predicted;
    Ok(CountReport {
        q: sec.q(),
        n: sec.n(),
        h_count: h.len() as u64,
        sing_count_enumerated: sing,
        sing_count_predicted: predicted,
        breakdown: Vec::new(),
        split_check: Some(SplitCheck {
            eigenvalue: lambda,
            kind,
            d1,
            d2,
            intersection: both,
            intersection_predicted: predicted,
            union_equal,
        }),
        passed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartCheck {
    pub i: usize,
    pub j: usize,
    pub chart_singular: u64,
    pub global_singular_in_chart: u64,
    pub agree: bool,
}

/// Singular points of the affine chart equation `P = 0` on `U_ij`, found by
/// evaluating `P` and its gradient on all of `F_q^(2n-1)`.
pub fn chart_singular_points(
    sec: &FiniteSection,
    i: usize,
    j: usize,
) -> Result<Vec<PointPair>, LabError> {
    let f: &PrimeField = sec.field();
    let eq = local_chart_equation(f, sec.matrix(), sec.n(), i, j)?;
    let nvars = eq.poly.nvars();
    let grad: Vec<_> = (0..nvars).map(|k| eq.poly.partial(f, k)).collect();
    let q = sec.q();
    let total = q.pow(nvars as u32);
    let mut out: Vec<PointPair> = (0..total)
        .into_par_iter()
        .filter_map(|mut code| {
            let mut pt = vec![0u64; nvars];
            for slot in (0..nvars).rev() {
                pt[slot] = code % q;
                code /= q;
            }
            if eq.poly.eval(f, &pt) != 0 || grad.iter().any(|g| g.eval(f, &pt) != 0) {
                return None;
            }
            let (x, y) = eq.lift(f, &pt);
            Some(PointPair {
                x: ProjPoint::normalize(f, &x)?,
                y: ProjPoint::normalize(f, &y)?,
            })
        })
        .collect();
    out.sort();
    Ok(out)
}

fn in_chart(p: &PointPair, i: usize, j: usize) -> bool {
    p.x.coords()[i] != 0 && p.y.coords()[j] != 0
}

pub fn verify_chart_consistency(
    sec: &FiniteSection,
    i: usize,
    j: usize,
) -> Result<ChartCheck, LabError> {
    let local = chart_singular_points(sec, i, j)?;
    let global: Vec<PointPair> = sec
        .singular_points()
        .into_iter()
        .filter(|p| in_chart(p, i, j))
        .collect();
    Ok(ChartCheck {
        i,
        j,
        chart_singular: local.len() as u64,
        global_singular_in_chart: global.len() as u64,
        agree: local == global,
    })
}

/// Whether the union over all charts `U_ij` (`i != j`) of chart-level
/// singular points is exactly the global singular set.
pub fn verify_chart_cover(sec: &FiniteSection) -> Result<bool, LabError> {
    let n = sec.n();
    let mut union = Vec::new();
    for i in 0..=n {
        for j in (0..=n).filter(|&j| j != i) {
            union.extend(chart_singular_points(sec, i, j)?);
        }
    }
    union.sort();
    union.dedup();
    Ok(union == sec.singular_points())
}

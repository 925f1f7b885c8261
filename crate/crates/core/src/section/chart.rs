//! Affine equations of `H_[A]` on the charts `U_ij = {x_i != 0, y_j != 0}`.
//!
//! On `U_ij` set `x_i = y_j = 1`. The relation `x^t y = 0` is linear in `y_i`
//! with coefficient `x_i = 1`, so `y_i = -(x_j + Σ_{k != i,j} x_k y_k)`.
//! Substituting into `x^t A y` leaves a polynomial of degree at most 3 in the
//! `2n - 1` coordinates `x_k (k != i)` and `y_k (k != i, j)`.

use serde::{Deserialize, Serialize};

use crate::algebra::matrix::{self, Matrix};
use crate::algebra::Field;

use super::multipoly::MultiPoly;
use super::SectionError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartEquation<E> {
    pub n: usize,
    pub i: usize,
    pub j: usize,
    /// `x<k>` for `k != i`, then `y<k>` for `k != i, j`, in index order.
    pub variables: Vec<String>,
    pub poly: MultiPoly<E>,
}

/// Serialized form: exponent vectors paired with exact coefficient strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartEquationJson {
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub variables: Vec<String>,
    pub degree: Option<u32>,
    pub terms: Vec<(Vec<u32>, String)>,
}

impl<E: Clone> ChartEquation<E> {
    pub fn degree(&self) -> Option<u32> {
        self.poly.total_degree()
    }

    pub fn to_json<F: Field<Elem = E>>(&self, f: &F) -> ChartEquationJson {
        ChartEquationJson {
            n: self.n,
            i: self.i,
            j: self.j,
            variables: self.variables.clone(),
            degree: self.degree(),
            terms: self
                .poly
                .terms()
                .map(|(e, c)| (e.clone(), f.format(c)))
                .collect(),
        }
    }

    /// Full coordinates `(x, y)` of the chart point with the given affine
    /// coordinates.
    pub fn lift<F: Field<Elem = E>>(&self, f: &F, point: &[E]) -> (Vec<E>, Vec<E>) {
        let (x_idx, y_idx) = chart_indices(self.n, self.i, self.j);
        let mut x = vec![f.zero(); self.n + 1];
        let mut y = vec![f.zero(); self.n + 1];
        x[self.i] = f.one();
        y[self.j] = f.one();
        for (slot, &k) in x_idx.iter().enumerate() {
            x[k] = point[slot].clone();
        }
        for (slot, &k) in y_idx.iter().enumerate() {
            y[k] = point[x_idx.len() + slot].clone();
        }
        let mut s = x[self.j].clone();
        for &k in &y_idx {
            s = f.add(&s, &f.mul(&x[k], &y[k]));
        }
        y[self.i] = f.neg(&s);
        (x, y)
    }

    /// Affine coordinates of `(x, y)` if the pair lies in the chart.
    pub fn project<F: Field<Elem = E>>(&self, f: &F, x: &[E], y: &[E]) -> Option<Vec<E>> {
        let xi = f.inv(&x[self.i])?;
        let yj = f.inv(&y[self.j])?;
        let (x_idx, y_idx) = chart_indices(self.n, self.i, self.j);
        let mut out: Vec<E> = x_idx.iter().map(|&k| f.mul(&x[k], &xi)).collect();
        out.extend(y_idx.iter().map(|&k| f.mul(&y[k], &yj)));
        Some(out)
    }
}

fn chart_indices(n: usize, i: usize, j: usize) -> (Vec<usize>, Vec<usize>) {
    let x_idx = (0..=n).filter(|&k| k != i).collect();
    let y_idx = (0..=n).filter(|&k| k != i && k != j).collect();
    (x_idx, y_idx)
}

pub fn local_chart_equation<F: Field>(
    f: &F,
    a: &Matrix<F::Elem>,
    n: usize,
    i: usize,
    j: usize,
) -> Result<ChartEquation<F::Elem>, SectionError> {
    if n < 2 {
        return Err(SectionError::BadN(n));
    }
    if a.rows() != n + 1 || a.cols() != n + 1 {
        return Err(SectionError::DimensionMismatch {
            rows: a.rows(),
            cols: a.cols(),
            n,
        });
    }
    if i == j || i > n || j > n {
        return Err(SectionError::ChartIndices { i, j, n });
    }
    if matrix::is_scalar(f, a) {
        return Err(SectionError::ScalarMatrix);
    }
    let (x_idx, y_idx) = chart_indices(n, i, j);
    let nvars = x_idx.len() + y_idx.len();
    let one = MultiPoly::constant(f, nvars, f.one());

    let mut x = vec![one.clone(); n + 1];
    for (slot, &k) in x_idx.iter().enumerate() {
        x[k] = MultiPoly::var(f, nvars, slot);
    }
    let mut y = vec![one; n + 1];
    for (slot, &k) in y_idx.iter().enumerate() {
        y[k] = MultiPoly::var(f, nvars, x_idx.len() + slot);
    }
    let mut s = x[j].clone();
    for &k in &y_idx {
        s = s.add(f, &x[k].mul(f, &y[k]));
    }
    y[i] = s.neg(f);

    let mut poly = MultiPoly::zero(nvars);
    for (r, xr) in x.iter().enumerate() {
        for (c, yc) in y.iter().enumerate() {
            let entry = a.get(r, c);
            if f.is_zero(entry) {
                continue;
            }
            poly = poly.add(f, &xr.mul(f, yc).scale(f, entry));
        }
    }
    let variables = x_idx
        .iter()
        .map(|k| format!("x{k}"))
        .chain(y_idx.iter().map(|k| format!("y{k}")))
        .collect();
    Ok(ChartEquation {
        n,
        i,
        j,
        variables,
        poly,
    })
}

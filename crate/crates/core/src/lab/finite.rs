//! Brute-force enumeration of `H_[A]` and its singular locus over `F_q`.

use rayon::prelude::*;

use crate::algebra::matrix::{self, Matrix};
use crate::algebra::{Field, PolyRing, PrimeField};

use super::points::{dot, projective_points, PointPair, ProjPoint};
use super::LabError;

/// Default cap on `n`; enumeration cost grows like `q^(2n-1)`.
pub const DEFAULT_MAX_N: usize = 4;

/// Jordan data of one eigenvalue in `F_q`, read off from nullities of
/// `A - λI` and `(A - λI)^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitClass {
    pub eigenvalue: u64,
    pub multiplicity: usize,
    pub r: usize,
    pub s: usize,
}

/// A nonscalar `(n+1) x (n+1)` matrix over `F_q` together with its field.
#[derive(Clone, Debug)]
pub struct FiniteSection {
    f: PrimeField,
    a: Matrix<u64>,
    at: Matrix<u64>,
    n: usize,
}

impl FiniteSection {
    pub fn new(f: PrimeField, a: Matrix<u64>) -> Result<Self, LabError> {
        Self::with_max_n(f, a, DEFAULT_MAX_N)
    }

    pub fn with_max_n(f: PrimeField, a: Matrix<u64>, max_n: usize) -> Result<Self, LabError> {
        if !a.is_square() {
            return Err(LabError::NotSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        let n = a.rows().saturating_sub(1);
        if n < 2 {
            return Err(LabError::BadN(n));
        }
        if n > max_n {
            return Err(LabError::TooLarge { n, max: max_n });
        }
        let a = a.map(|v| v % f.modulus());
        if matrix::is_scalar(&f, &a) {
            return Err(LabError::ScalarMatrix);
        }
        let at = a.transpose();
        Ok(FiniteSection { f, a, at, n })
    }

    pub fn field(&self) -> &PrimeField {
        &self.f
    }

    pub fn matrix(&self) -> &Matrix<u64> {
        &self.a
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.f.modulus()
    }

    /// Pairs `([x], [y])` with `x^t y = 0`, optionally also `x^t A y = 0`.
    fn solve_pairs(&self, with_a: bool) -> Vec<PointPair> {
        let f = &self.f;
        let xs = projective_points(f, self.n);
        let mut out: Vec<PointPair> = xs
            .par_iter()
            .flat_map_iter(|x| {
                let mut rows = vec![x.coords().to_vec()];
                if with_a {
                    rows.push(matrix::mat_vec(f, &self.at, x.coords()));
                }
                let m = Matrix::from_rows(rows).expect("rows have equal length");
                let basis = matrix::kernel_basis(f, &m);
                let mut ys: Vec<PointPair> = projective_points(f, basis.len() - 1)
                    .into_iter()
                    .map(|c| {
                        let mut y = vec![0u64; self.n + 1];
                        for (ck, bk) in c.coords().iter().zip(&basis) {
                            for (yi, bi) in y.iter_mut().zip(bk) {
                                *yi = f.add(yi, &f.mul(ck, bi));
                            }
                        }
                        PointPair {
                            x: x.clone(),
                            y: ProjPoint::normalize(f, &y).expect("independent basis"),
                        }
                    })
                    .collect();
                ys.sort();
                ys.into_iter()
            })
            .collect();
        out.sort();
        out
    }

    /// `X(F_q)`: all pairs with `x^t y = 0`.
    pub fn flag_points(&self) -> Vec<PointPair> {
        self.solve_pairs(false)
    }

    /// `H(F_q)`, sorted by `(x, y)`.
    pub fn enumerate_h(&self) -> Vec<PointPair> {
        self.solve_pairs(true)
    }

    pub fn on_h(&self, p: &PointPair) -> bool {
        let (x, y) = (p.x.coords(), p.y.coords());
        dot(&self.f, x, y) == 0 && dot(&self.f, x, &matrix::mat_vec(&self.f, &self.a, y)) == 0
    }

    /// Whether `(y, x)` and `(Ay, A^t x)` are linearly dependent.
    pub fn is_singular(&self, p: &PointPair) -> bool {
        let (x, y) = (p.x.coords(), p.y.coords());
        let mut r0 = y.to_vec();
        r0.extend_from_slice(x);
        let mut r1 = matrix::mat_vec(&self.f, &self.a, y);
        r1.extend(matrix::mat_vec(&self.f, &self.at, x));
        let m = Matrix::from_rows(vec![r0, r1]).expect("rows have equal length");
        matrix::rank(&self.f, &m) <= 1
    }

    pub fn singular_points(&self) -> Vec<PointPair> {
        self.enumerate_h()
            .into_par_iter()
            .filter(|p| self.is_singular(p))
            .collect()
    }

    /// Points of `Sing_λ`: `x^t (A - λI) = 0` and `(A - λI) y = 0`.
    pub fn in_sing_lambda(&self, p: &PointPair, lambda: u64) -> bool {
        let b = matrix::shift(&self.f, &self.a, &lambda);
        let zero = |v: Vec<u64>| v.iter().all(|c| *c == 0);
        zero(matrix::mat_vec(&self.f, &b, p.y.coords()))
            && zero(matrix::mat_vec(&self.f, &b.transpose(), p.x.coords()))
    }

    /// Eigenvalues with their Jordan data; fails unless the characteristic
    /// polynomial is a product of linear factors over `F_q`.
    pub fn split_classes(&self) -> Result<Vec<SplitClass>, LabError> {
        let f = &self.f;
        let ring = PolyRing::new(*f);
        let mut p = matrix::charpoly(f, &self.a)?;
        let mut classes = Vec::new();
        for lambda in f.roots(&p) {
            let lin = ring.linear(&lambda);
            let mut m = 0;
            loop {
                let (quo, rem) = ring.div_rem(&p, &lin);
                if !rem.is_zero() {
                    break;
                }
                p = quo;
                m += 1;
            }
            let b = matrix::shift(f, &self.a, &lambda);
            let d1 = matrix::nullity(f, &b);
            let d2 = matrix::nullity(f, &matrix::mul(f, &b, &b));
            classes.push(SplitClass {
                eigenvalue: lambda,
                multiplicity: m,
                r: d1,
                s: d2 - d1,
            });
        }
        if p.degree() != Some(0) {
            return Err(LabError::DoesNotSplit { q: self.q() });
        }
        Ok(classes)
    }

    /// The eigenvalue `λ` with `rank(A - λI) = 1`, if there is one.
    pub fn rank_one_eigenvalue(&self) -> Option<u64> {
        let f = &self.f;
        let p = matrix::charpoly(f, &self.a).ok()?;
        f.roots(&p)
            .into_iter()
            .find(|l| matrix::rank(f, &matrix::shift(f, &self.a, l)) == 1)
    }
}

//! Arithmetic in `F[x]/(g)` for squarefree `g`, with dynamic evaluation.
//!
//! `F[x]/(g)` is a product of fields (one per irreducible factor of `g`), so
//! Gaussian elimination works as long as every pivot is a unit. When a
//! nonzero pivot `u` turns out to be a zero divisor, `gcd(g, u)` is a proper
//! factor of `g` and the computation is restarted on both halves.

use super::field::Field;
use super::matrix::Matrix;
use super::poly::{Poly, PolyRing};
use super::AlgebraError;

#[derive(Clone, Debug, PartialEq)]
pub struct QuotientContext<F: Field> {
    ring: PolyRing<F>,
    modulus: Poly<F::Elem>,
}

/// A nontrivial factorisation `g = left * right` discovered while computing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split<E> {
    pub left: Poly<E>,
    pub right: Poly<E>,
}

enum Pivot<E> {
    Zero,
    Unit(Poly<E>),
    ZeroDivisor(Split<E>),
}

impl<F: Field> QuotientContext<F> {
    /// `modulus` is made monic; it must have positive degree and be squarefree.
    pub fn new(field: F, modulus: Poly<F::Elem>) -> Result<Self, AlgebraError> {
        let ring = PolyRing::new(field);
        match modulus.degree() {
            None => return Err(AlgebraError::ZeroPolynomial),
            Some(0) => return Err(AlgebraError::ConstantModulus),
            _ => {}
        }
        if !ring.is_squarefree(&modulus) {
            return Err(AlgebraError::NotSquarefree);
        }
        let modulus = ring.monic(&modulus);
        Ok(QuotientContext { ring, modulus })
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn modulus(&self) -> &Poly<F::Elem> {
        &self.modulus
    }

    pub fn reduce(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.ring.rem(a, &self.modulus)
    }

    /// The class of `x`, i.e. a generic root of the modulus.
    pub fn generator(&self) -> Poly<F::Elem> {
        self.reduce(&self.ring.x())
    }

    pub fn embed(&self, c: &F::Elem) -> Poly<F::Elem> {
        self.ring.constant(c.clone())
    }

    pub fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.ring.add(a, b)
    }

    pub fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.ring.sub(a, b)
    }

    pub fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.reduce(&self.ring.mul(a, b))
    }

    fn classify(&self, u: &Poly<F::Elem>) -> Pivot<F::Elem> {
        if u.is_zero() {
            return Pivot::Zero;
        }
        let (g, s, _) = self.ring.ext_gcd(u, &self.modulus);
        if self.ring.is_constant(&g) {
            // s*u + t*g = 1
            return Pivot::Unit(self.reduce(&s));
        }
        let right = self.ring.div_exact(&self.modulus, &g);
        Pivot::ZeroDivisor(Split { left: g, right })
    }

    pub fn inverse(&self, u: &Poly<F::Elem>) -> Result<Option<Poly<F::Elem>>, Split<F::Elem>> {
        match self.classify(u) {
            Pivot::Zero => Ok(None),
            Pivot::Unit(inv) => Ok(Some(inv)),
            Pivot::ZeroDivisor(s) => Err(s),
        }
    }

    pub fn mat_mul(
        &self,
        a: &Matrix<Poly<F::Elem>>,
        b: &Matrix<Poly<F::Elem>>,
    ) -> Matrix<Poly<F::Elem>> {
        assert_eq!(a.cols(), b.rows(), "matrix shape mismatch");
        Matrix::from_fn(a.rows(), b.cols(), |i, j| {
            let raw = (0..a.cols()).fold(self.ring.zero(), |acc, k| {
                self.ring
                    .add(&acc, &self.ring.mul(a.get(i, k), b.get(k, j)))
            });
            self.reduce(&raw)
        })
    }

    /// Rank over `F[x]/(g)`, valid simultaneously at every root of `g`, or
    /// the split that prevents a uniform answer.
    pub fn rank(&self, m: &Matrix<Poly<F::Elem>>) -> Result<usize, Split<F::Elem>> {
        let mut rows: Vec<Vec<Poly<F::Elem>>> = m
            .to_rows()
            .into_iter()
            .map(|r| r.iter().map(|e| self.reduce(e)).collect())
            .collect();
        let ncols = m.cols();
        let mut rank = 0;
        for col in 0..ncols {
            if rank == rows.len() {
                break;
            }
            let mut pivot = None;
            for i in rank..rows.len() {
                match self.classify(&rows[i][col]) {
                    Pivot::Zero => continue,
                    Pivot::Unit(inv) => {
                        pivot = Some((i, inv));
                        break;
                    }
                    Pivot::ZeroDivisor(split) => return Err(split),
                }
            }
            let Some((p, inv)) = pivot else { continue };
            rows.swap(rank, p);
            let prow: Vec<_> = rows[rank].iter().map(|e| self.mul(e, &inv)).collect();
            for row in rows.iter_mut().skip(rank + 1) {
                let factor = row[col].clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..ncols {
                    row[j] = self.sub(&row[j], &self.mul(&factor, &prow[j]));
                }
            }
            rows[rank] = prow;
            rank += 1;
        }
        Ok(rank)
    }

    /// Full dynamic evaluation of `rank`: returns `(factor, rank)` pairs whose
    /// factors multiply to the modulus, with `rank` constant over the roots of
    /// each factor. `build` recreates the matrix over a refined modulus.
    pub fn rank_by_branch(
        &self,
        build: impl Fn(&QuotientContext<F>) -> Matrix<Poly<F::Elem>>,
    ) -> Vec<(Poly<F::Elem>, usize)> {
        let mut out = Vec::new();
        let mut work = vec![self.clone()];
        while let Some(ctx) = work.pop() {
            match ctx.rank(&build(&ctx)) {
                Ok(r) => out.push((ctx.modulus.clone(), r)),
                Err(split) => work.extend(ctx.refine(&split)),
            }
        }
        out.sort_by(|a, b| self.ring.canonical_cmp(&a.0, &b.0));
        out
    }

    /// The two contexts obtained from a split.
    pub fn refine(&self, split: &Split<F::Elem>) -> [QuotientContext<F>; 2] {
        let mk = |p: &Poly<F::Elem>| QuotientContext {
            ring: self.ring.clone(),
            modulus: self.ring.monic(p),
        };
        [mk(&split.left), mk(&split.right)]
    }
}

//! Jordan data (block counts per eigenvalue) without computing a Jordan basis.
//!
//! For each squarefree factor `g` of the characteristic polynomial, the
//! nullities `d_k = nullity((A - θ)^k)` are computed over `F[x]/(g)` with `θ`
//! the class of `x`. Dynamic evaluation refines `g` whenever its roots do not
//! share the same nullities, so irrational eigenvalues never need to be
//! written down explicitly.

use serde::Serialize;

use super::field::Field;
use super::matrix::{self, Matrix};
use super::poly::{Poly, PolyRing};
use super::quotient::QuotientContext;
use super::AlgebraError;

/// Jordan data shared by every root of `factor`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenClass<E> {
    /// Monic squarefree polynomial whose roots are the eigenvalues of this class.
    pub factor: Poly<E>,
    /// Algebraic multiplicity of each root.
    pub multiplicity: usize,
    /// `d_1, d_2, ..., d_K` with `d_K = multiplicity` the first stable value.
    pub nullities: Vec<usize>,
    /// Jordan block sizes, largest first.
    pub block_sizes: Vec<usize>,
}

impl<E> EigenClass<E> {
    /// Number of Jordan blocks.
    pub fn r(&self) -> usize {
        self.nullities[0]
    }

    /// Number of Jordan blocks of size > 1.
    pub fn s(&self) -> usize {
        self.nullities.get(1).copied().unwrap_or(self.multiplicity) - self.nullities[0]
    }

    pub fn factor_degree(&self) -> usize {
        self.factor.degree().unwrap_or(0)
    }

    /// The Jordan data with the eigenvalue forgotten.
    pub fn signature(&self) -> ClassSignature {
        ClassSignature {
            factor_degree: self.factor_degree(),
            multiplicity: self.multiplicity,
            r: self.r(),
            s: self.s(),
            block_sizes: self.block_sizes.clone(),
        }
    }
}

/// Eigenvalue-free summary of an [`EigenClass`]; invariant under
/// `A -> cA + dI` and under similarity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, serde::Deserialize)]
pub struct ClassSignature {
    pub factor_degree: usize,
    pub multiplicity: usize,
    pub r: usize,
    pub s: usize,
    pub block_sizes: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenStructure<E> {
    pub classes: Vec<EigenClass<E>>,
}

impl<E> EigenStructure<E> {
    /// `sum deg(factor) * multiplicity`, which equals the matrix size.
    pub fn total_multiplicity(&self) -> usize {
        self.classes
            .iter()
            .map(|c| c.factor_degree() * c.multiplicity)
            .sum()
    }

    pub fn signatures(&self) -> Vec<ClassSignature> {
        self.classes.iter().map(EigenClass::signature).collect()
    }
}

/// Block counts from a nullity sequence: the number of blocks of size exactly
/// `k` is `2 d_k - d_{k-1} - d_{k+1}` (with `d_0 = 0`, and `d_k = m` past the
/// end).
pub fn blocks_from_nullities(nullities: &[usize], multiplicity: usize) -> Vec<usize> {
    let d = |k: usize| -> usize {
        if k == 0 {
            0
        } else {
            nullities.get(k - 1).copied().unwrap_or(multiplicity)
        }
    };
    let mut sizes = Vec::new();
    for k in (1..=nullities.len()).rev() {
        let count = 2 * d(k) - d(k - 1) - d(k + 1);
        sizes.extend(std::iter::repeat(k).take(count));
    }
    sizes
}

pub fn distinct_eigenvalues<F: Field>(f: &F, a: &Matrix<F::Elem>) -> Result<bool, AlgebraError> {
    let p = matrix::charpoly(f, a)?;
    Ok(PolyRing::new(f.clone()).is_squarefree(&p))
}

/// Jordan data of a square matrix of size at least 3.
pub fn eigen_structure<F: Field>(
    f: &F,
    a: &Matrix<F::Elem>,
) -> Result<EigenStructure<F::Elem>, AlgebraError> {
    if !a.is_square() {
        return Err(AlgebraError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if a.rows() < 3 {
        return Err(AlgebraError::TooSmall(a.rows()));
    }
    let ring = PolyRing::new(f.clone());
    let p = matrix::charpoly(f, a)?;
    let mut classes = Vec::new();
    for (g, m) in ring.squarefree_decomposition(&p)? {
        for g in split_linear_factors(&ring, &g) {
            if m == 1 {
                // simple roots always carry a single 1x1 block
                classes.push(EigenClass {
                    factor: g,
                    multiplicity: 1,
                    nullities: vec![1],
                    block_sizes: vec![1],
                });
                continue;
            }
            classes.extend(classes_over_factor(f, a, g, m)?);
        }
    }
    classes.sort_by(|x, y| ring.canonical_cmp(&x.factor, &y.factor));
    Ok(EigenStructure { classes })
}

/// `x - c` for each base-field root `c` of `g`, plus the remaining cofactor
/// when it is nonconstant.
fn split_linear_factors<F: Field>(ring: &PolyRing<F>, g: &Poly<F::Elem>) -> Vec<Poly<F::Elem>> {
    let mut rest = g.clone();
    let mut out = Vec::new();
    for c in ring.field().roots(g) {
        let lin = ring.linear(&c);
        rest = ring.div_exact(&rest, &lin);
        out.push(lin);
    }
    if rest.degree().unwrap_or(0) > 0 {
        out.push(ring.monic(&rest));
    }
    out
}

fn classes_over_factor<F: Field>(
    f: &F,
    a: &Matrix<F::Elem>,
    g: Poly<F::Elem>,
    m: usize,
) -> Result<Vec<EigenClass<F::Elem>>, AlgebraError> {
    let mut classes = Vec::new();
    {
        let mut work = vec![QuotientContext::new(f.clone(), g)?];
        while let Some(ctx) = work.pop() {
            match nullity_sequence(&ctx, a, m) {
                Ok(nullities) => {
                    let block_sizes = blocks_from_nullities(&nullities, m);
                    classes.push(EigenClass {
                        factor: ctx.modulus().clone(),
                        multiplicity: m,
                        nullities,
                        block_sizes,
                    });
                }
                Err(split) => work.extend(ctx.refine(&split)),
            }
        }
    }
    Ok(classes)
}

fn nullity_sequence<F: Field>(
    ctx: &QuotientContext<F>,
    a: &Matrix<F::Elem>,
    multiplicity: usize,
) -> Result<Vec<usize>, super::quotient::Split<F::Elem>> {
    let size = a.rows();
    let theta = ctx.generator();
    let shifted = Matrix::from_fn(size, size, |i, j| {
        let e = ctx.embed(a.get(i, j));
        if i == j {
            ctx.sub(&e, &theta)
        } else {
            e
        }
    });
    let mut power = shifted.clone();
    let mut nullities = Vec::new();
    for k in 1..=multiplicity {
        if k > 1 {
            power = ctx.mat_mul(&power, &shifted);
        }
        let d = size - ctx.rank(&power)?;
        nullities.push(d);
        if d == multiplicity {
            break;
        }
    }
    assert_eq!(
        nullities.last().copied(),
        Some(multiplicity),
        "generalized eigenspace dimension differs from algebraic multiplicity"
    );
    Ok(nullities)
}

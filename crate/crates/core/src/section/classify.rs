use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::matrix::{self, Matrix};
use crate::algebra::{
    distinct_eigenvalues, eigen_structure, ClassSignature, EigenStructure, Field,
};

use super::shape::VShape;
use super::SectionError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReducibleKind {
    /// `A ~ λI + diag(1, 0, ..., 0)`; the components meet in `V_{0,n}`.
    Diagonalizable,
    /// `A ~ λI + E_01`; the components meet in `V_{1,n}`.
    NonDiagonalizable,
}

/// Singular locus contributed by one eigenvalue. Roots of the same factor
/// share their Jordan data and each get their own entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingShape {
    pub id: usize,
    /// Degree of the minimal factor over the base field carrying this eigenvalue.
    pub factor_degree: usize,
    pub multiplicity: usize,
    pub block_sizes: Vec<usize>,
    pub shape: VShape,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionReport {
    pub n: usize,
    #[serde(with = "crate::bignum")]
    pub degree: BigInt,
    pub reducible: bool,
    pub kind: Option<ReducibleKind>,
    #[serde(with = "crate::bignum::option")]
    pub component_degree: Option<BigInt>,
    pub component_label: Option<String>,
    pub component_intersection: Option<VShape>,
    pub sing_shapes: Vec<SingShape>,
    pub sing_dim: i64,
    pub smooth: bool,
    pub dual_member: bool,
    pub canonical_flag: bool,
}

impl SectionReport {
    pub fn nonempty_shapes(&self) -> impl Iterator<Item = &SingShape> {
        self.sing_shapes.iter().filter(|s| !s.shape.is_empty())
    }
}

pub fn component_label(n: usize) -> String {
    format!("P(O ⊕ T(-1)) over P^{}", n - 1)
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn validate<F: Field>(f: &F, a: &Matrix<F::Elem>, n: usize) -> Result<(), SectionError> {
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
    if matrix::is_scalar(f, a) {
        return Err(SectionError::ScalarMatrix);
    }
    Ok(())
}

fn square_n<E: Clone>(a: &Matrix<E>) -> Result<usize, SectionError> {
    if !a.is_square() {
        return Err(SectionError::DimensionMismatch {
            rows: a.rows(),
            cols: a.cols(),
            n: a.rows().saturating_sub(1),
        });
    }
    Ok(a.rows().saturating_sub(1))
}

/// A rank-1 translate `A - λI` can only come from a base-field eigenvalue:
/// it has multiplicity at least `n`, and a conjugate would need another `n`.
fn reducible_kind<F: Field>(
    f: &F,
    a: &Matrix<F::Elem>,
    es: &EigenStructure<F::Elem>,
    n: usize,
) -> Option<ReducibleKind> {
    let class = es
        .classes
        .iter()
        .find(|c| c.factor_degree() == 1 && c.r() == n)?;
    let lambda = f.neg(&class.factor.coeffs()[0]);
    let b = matrix::shift(f, a, &lambda);
    Some(if f.is_zero(&matrix::trace(f, &b)) {
        ReducibleKind::NonDiagonalizable
    } else {
        ReducibleKind::Diagonalizable
    })
}

/// `Some(kind)` if `H_[A]` splits into two components.
pub fn is_reducible<F: Field>(
    f: &F,
    a: &Matrix<F::Elem>,
) -> Result<Option<ReducibleKind>, SectionError> {
    let n = square_n(a)?;
    validate(f, a, n)?;
    let es = eigen_structure(f, a)?;
    Ok(reducible_kind(f, a, &es, n))
}

/// Whether the section is singular, i.e. `[A]` lies on the dual variety.
pub fn dual_membership<F: Field>(f: &F, a: &Matrix<F::Elem>) -> Result<bool, SectionError> {
    let n = square_n(a)?;
    validate(f, a, n)?;
    Ok(!distinct_eigenvalues(f, a)?)
}

pub fn classify<F: Field>(
    f: &F,
    a: &Matrix<F::Elem>,
    n: usize,
) -> Result<SectionReport, SectionError> {
    validate(f, a, n)?;
    let es = eigen_structure(f, a)?;
    let degree = binomial(2 * n, n);
    let dual_member = es.classes.iter().any(|c| c.multiplicity > 1);

    if let Some(kind) = reducible_kind(f, a, &es, n) {
        let meet = match kind {
            ReducibleKind::Diagonalizable => VShape::new(0, n)?,
            ReducibleKind::NonDiagonalizable => VShape::new(1, n)?,
        };
        return Ok(SectionReport {
            n,
            component_degree: Some(&degree / 2),
            degree,
            reducible: true,
            kind: Some(kind),
            component_label: Some(component_label(n)),
            component_intersection: Some(meet),
            sing_shapes: Vec::new(),
            sing_dim: meet.dim(),
            smooth: false,
            dual_member,
            canonical_flag: false,
        });
    }

    let mut signatures: Vec<ClassSignature> = es.signatures();
    signatures.sort();
    let mut sing_shapes = Vec::new();
    for sig in &signatures {
        assert!(
            sig.r < n,
            "irreducible section with an eigenvalue of geometric multiplicity {}",
            sig.r
        );
        let shape = VShape::new(sig.s, sig.r)?;
        for _ in 0..sig.factor_degree {
            sing_shapes.push(SingShape {
                id: sing_shapes.len(),
                factor_degree: sig.factor_degree,
                multiplicity: sig.multiplicity,
                block_sizes: sig.block_sizes.clone(),
                shape,
            });
        }
    }
    let sing_dim = sing_shapes
        .iter()
        .map(|s| s.shape.dim())
        .max()
        .unwrap_or(-1);
    assert!(sing_dim <= 2 * n as i64 - 4);
    let smooth = sing_dim < 0;
    debug_assert_eq!(smooth, !dual_member);
    Ok(SectionReport {
        n,
        degree,
        reducible: false,
        kind: None,
        component_degree: None,
        component_label: None,
        component_intersection: None,
        sing_shapes,
        sing_dim,
        smooth,
        dual_member,
        canonical_flag: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix::{diagonal, direct_sum, jordan_block};
    use crate::algebra::Rationals;

    fn q(v: i64) -> num_rational::BigRational {
        Rationals.from_i64(v)
    }

    fn diag(vals: &[i64]) -> Matrix<num_rational::BigRational> {
        diagonal(&Rationals, &vals.iter().map(|&v| q(v)).collect::<Vec<_>>())
    }

    fn j2(n: usize) -> Matrix<num_rational::BigRational> {
        let mut m = matrix::zeros(&Rationals, n + 1, n + 1);
        m.set(0, 1, q(1));
        m
    }

    #[test]
    fn smooth_n2() {
        let r = classify(&Rationals, &diag(&[1, 2, 3]), 2).unwrap();
        assert!(r.smooth && !r.reducible && !r.dual_member && r.canonical_flag);
        assert_eq!(r.degree, BigInt::from(6));
        assert_eq!(r.sing_shapes.len(), 3);
        assert!(r
            .sing_shapes
            .iter()
            .all(|s| s.shape == VShape::new(0, 1).unwrap()));
        assert_eq!(r.sing_dim, -1);
    }

    #[test]
    fn reducible_cases() {
        let r = classify(&Rationals, &diag(&[1, 0, 0]), 2).unwrap();
        assert!(r.reducible);
        assert_eq!(r.kind, Some(ReducibleKind::Diagonalizable));
        assert_eq!(r.component_degree, Some(BigInt::from(3)));
        assert_eq!(r.component_intersection, Some(VShape::new(0, 2).unwrap()));

        for n in 2..5 {
            let r = classify(&Rationals, &j2(n), n).unwrap();
            assert_eq!(r.kind, Some(ReducibleKind::NonDiagonalizable));
            assert_eq!(r.component_intersection, Some(VShape::new(1, n).unwrap()));
            assert_eq!(
                is_reducible(&Rationals, &j2(n)).unwrap(),
                Some(ReducibleKind::NonDiagonalizable)
            );
        }
        assert_eq!(is_reducible(&Rationals, &diag(&[1, 2, 3])).unwrap(), None);
    }

    #[test]
    fn singular_irreducible_n3() {
        let r = classify(&Rationals, &diag(&[0, 0, 1, 2]), 3).unwrap();
        assert!(!r.reducible && !r.smooth);
        let shapes: Vec<_> = r
            .sing_shapes
            .iter()
            .map(|s| (s.shape.s(), s.shape.r()))
            .collect();
        assert_eq!(shapes, vec![(0, 1), (0, 1), (0, 2)]);
        assert_eq!(r.sing_dim, 1);
        assert_eq!(r.nonempty_shapes().count(), 1);
    }

    #[test]
    fn irrational_eigenvalues_expand_per_root() {
        // (x^2 - 2) repeated via two companion blocks plus a distinct eigenvalue
        let f = Rationals;
        let c = crate::algebra::matrix::companion(
            &f,
            &crate::algebra::PolyRing::new(f).from_i64s(&[-2, 0, 1]),
        );
        let a = direct_sum(&f, &[c.clone(), c, jordan_block(&f, &q(5), 1)]);
        let r = classify(&f, &a, 4).unwrap();
        assert_eq!(r.sing_shapes.len(), 3);
        assert_eq!(r.sing_shapes[1].factor_degree, 2);
        assert_eq!(r.sing_shapes[1].shape, VShape::new(0, 2).unwrap());
        assert_eq!(r.sing_shapes[2].shape, VShape::new(0, 2).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        let f = Rationals;
        assert_eq!(
            classify(&f, &diag(&[4, 4, 4]), 2),
            Err(SectionError::ScalarMatrix)
        );
        assert!(matches!(
            classify(&f, &diag(&[1, 2, 3]), 3),
            Err(SectionError::DimensionMismatch { .. })
        ));
        assert_eq!(classify(&f, &diag(&[1, 2]), 1), Err(SectionError::BadN(1)));
        assert_eq!(
            dual_membership(&f, &diag(&[4, 4, 4])),
            Err(SectionError::ScalarMatrix)
        );
        assert!(dual_membership(&f, &j2(2)).unwrap());
        assert!(!dual_membership(&f, &diag(&[1, 2, 3])).unwrap());
    }

    #[test]
    fn report_round_trips_through_json() {
        for (a, n) in [(diag(&[0, 0, 1, 2]), 3), (j2(2), 2)] {
            let r = classify(&Rationals, &a, n).unwrap();
            let s = serde_json::to_string(&r).unwrap();
            assert_eq!(serde_json::from_str::<SectionReport>(&s).unwrap(), r);
        }
    }
}

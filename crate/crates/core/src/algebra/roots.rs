//! Roots lying in the base field, used to split linear factors off the
//! characteristic polynomial. This is not a factorisation into irreducibles:
//! whatever has no base-field root is left intact for dynamic evaluation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{Field, PrimeField, Rationals};
use super::poly::{Poly, PolyRing};

/// Distinct rational roots of a nonzero polynomial, in increasing order.
///
/// After clearing denominators every rational root has the form `k / L` with
/// `L` the leading coefficient, so real roots are isolated with a Sturm
/// sequence until each interval is narrower than `1 / L` and the single
/// remaining candidate is tested exactly.
pub fn rational_roots(p: &Poly<BigRational>) -> Vec<BigRational> {
    let ring = PolyRing::new(Rationals);
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sqf = ring.div_exact(p, &ring.gcd(p, &ring.derivative(p)));
    let sqf = primitive_integer(&sqf);
    let lead = sqf.leading().unwrap().abs();
    let sturm = sturm_sequence(&ring, &sqf);
    let variations = |x: &BigRational| sign_variations(&ring, &sturm, x);

    // Cauchy bound: every root satisfies |r| < 1 + max |a_i / a_n|.
    let an = sqf.leading().unwrap().abs();
    let bound = sqf
        .coeffs()
        .iter()
        .map(|c| c.abs() / &an)
        .fold(BigRational::zero(), |a, b| a.max(b))
        + BigRational::one();

    let width_limit = lead.recip();
    let mut roots = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let count = variations(&lo) - variations(&hi);
        if count == 0 {
            continue;
        }
        if &hi - &lo < width_limit {
            // (lo, hi] holds at most one number of the form k / L.
            let k = (&hi * &lead).floor();
            let cand = k / &lead;
            if cand > lo && ring.eval(&sqf, &cand).is_zero() {
                roots.push(cand);
            }
            continue;
        }
        let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    roots.sort();
    roots
}

fn primitive_integer(p: &Poly<BigRational>) -> Poly<BigRational> {
    let ring = PolyRing::new(Rationals);
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = scaled.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ring.from_coeffs(
        scaled
            .into_iter()
            .map(|c| BigRational::from_integer(c / &g))
            .collect(),
    )
}

fn sturm_sequence(ring: &PolyRing<Rationals>, p: &Poly<BigRational>) -> Vec<Poly<BigRational>> {
    let mut seq = vec![p.clone(), ring.derivative(p)];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = ring.neg(&ring.rem(&seq[n - 2], &seq[n - 1]));
        if r.is_zero() {
            break;
        }
        seq.push(r);
    }
    seq
}

fn sign_variations(ring: &PolyRing<Rationals>, seq: &[Poly<BigRational>], x: &BigRational) -> i64 {
    let mut last = 0i8;
    let mut count = 0;
    for p in seq {
        let v = ring.eval(p, x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Distinct roots in `F_q` of a nonzero polynomial, in increasing residue
/// order. Uses `gcd(p, x^q - x)` followed by Cantor-Zassenhaus splitting with
/// deterministic shifts.
pub fn prime_field_roots(f: &PrimeField, p: &Poly<u64>) -> Vec<u64> {
    let ring = PolyRing::new(*f);
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let q = f.modulus();
    if q <= 3 {
        return (0..q).filter(|x| ring.eval(p, x) == 0).collect();
    }
    let p = ring.monic(p);
    let xq = pow_mod(&ring, &ring.x(), q, &p);
    let linear_part = ring.gcd(&p, &ring.sub(&xq, &ring.x()));
    let mut roots = Vec::new();
    let mut stack = vec![linear_part];
    let mut shift = 0u64;
    while let Some(h) = stack.pop() {
        match h.degree() {
            None | Some(0) => continue,
            Some(1) => {
                roots.push(f.neg(&h.coeffs()[0]));
                continue;
            }
            _ => {}
        }
        // h splits into distinct linear factors; (x + a)^((q-1)/2) - 1
        // separates the roots r with r + a a nonzero square.
        loop {
            let base = ring.from_coeffs(vec![shift % q, 1]);
            shift += 1;
            let t = ring.sub(&pow_mod(&ring, &base, (q - 1) / 2, &h), &ring.one());
            let g = ring.gcd(&h, &t);
            let dg = g.degree().unwrap_or(0);
            if dg > 0 && dg < h.degree().unwrap() {
                let cofactor = ring.div_exact(&h, &g);
                stack.push(g);
                stack.push(cofactor);
                break;
            }
        }
    }
    roots.sort_unstable();
    roots
}

fn pow_mod<F: Field>(
    ring: &PolyRing<F>,
    base: &Poly<F::Elem>,
    mut e: u64,
    m: &Poly<F::Elem>,
) -> Poly<F::Elem> {
    let mut acc = ring.rem(&ring.one(), m);
    let mut b = ring.rem(base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = ring.rem(&ring.mul(&acc, &b), m);
        }
        b = ring.rem(&ring.mul(&b, &b), m);
        e >>= 1;
    }
    acc
}

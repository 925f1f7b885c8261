//! Normal-form arithmetic in the Chow ring of a smooth section.
//!
//! The ring is free on `ζ^i α^j` (`0 <= i <= n-2`, `0 <= j <= n`) together
//! with the exceptional classes `E_0..E_n` in degree `n-1`. Products of basis
//! elements are rewritten with
//!
//! * `α^{n+1} = 0`
//! * `ζ^{n-1} = Σ_{j=1}^{n-1} (-1)^{j-1} C(n+1, j) ζ^{n-1-j} α^j + (-1)^{n-1} Σ_k E_k`
//! * `E_i E_j = (-1)^{n-1} δ_ij ζ^{n-2} α^n`
//! * `E_i α = 0`, `E_i ζ = α^n`
//!
//! and anything above degree `2n-2` vanishes. Every rewrite of `ζ^{n-1}`
//! lowers the ζ-exponent, so the reduction terminates; the table of reduced
//! monomials is built once per ring by increasing ζ-exponent.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ChowError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisElement {
    /// `ζ^i α^j`.
    Mono(u32, u32),
    /// The exceptional class `[E_k]`.
    Exc(u32),
}

impl BasisElement {
    pub fn degree(&self, n: u32) -> u32 {
        match *self {
            BasisElement::Mono(i, j) => i + j,
            BasisElement::Exc(_) => n - 1,
        }
    }

    fn sort_key(&self, n: u32) -> (u32, u8, u32) {
        match *self {
            BasisElement::Mono(i, _) => (self.degree(n), 0, i),
            BasisElement::Exc(k) => (self.degree(n), 1, k),
        }
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BasisElement::Exc(k) => write!(f, "E{k}"),
            BasisElement::Mono(0, 0) => write!(f, "1"),
            BasisElement::Mono(i, j) => {
                let mut parts = Vec::new();
                for (sym, e) in [("z", i), ("a", j)] {
                    match e {
                        0 => {}
                        1 => parts.push(sym.to_string()),
                        _ => parts.push(format!("{sym}^{e}")),
                    }
                }
                write!(f, "{}", parts.join("*"))
            }
        }
    }
}

/// An element of the Chow ring in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowClass {
    n: u32,
    terms: BTreeMap<BasisElement, BigInt>,
}

impl ChowClass {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: BasisElement) -> BigInt {
        self.terms.get(&b).cloned().unwrap_or_default()
    }

    /// Nonzero terms sorted by degree, then basis order (monomials by
    /// increasing ζ-exponent, then `E_0..E_n`).
    pub fn terms(&self) -> Vec<(BasisElement, BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(b, c)| (*b, c.clone())).collect();
        v.sort_by_key(|(b, _)| b.sort_key(self.n));
        v
    }

    /// `Some(d)` if every term has degree `d`; `None` for zero or mixed classes.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|b| b.degree(self.n));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    fn add_term(&mut self, b: BasisElement, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(b).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&b);
        }
    }

    fn add_scaled(&mut self, other: &ChowClass, c: &BigInt) {
        for (b, v) in &other.terms {
            self.add_term(*b, &(v * c));
        }
    }
}

impl fmt::Display for ChowClass {
    /// `c * z^i*a^j + c * Ek + ...`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .into_iter()
            .map(|(b, c)| format!("{c} * {b}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The Chow ring of a smooth section for a fixed `n >= 2`.
#[derive(Clone, Debug)]
pub struct ChowRing {
    n: u32,
    /// `raw[a][b]` is the normal form of `ζ^a α^b` for `a + b <= 2n-2`, `b <= n`.
    raw: Vec<Vec<ChowClass>>,
}

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn sign(e: u32) -> BigInt {
    if e % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

impl ChowRing {
    pub fn new(n: u32) -> Result<Self, ChowError> {
        if n < 2 {
            return Err(ChowError::BadN(n));
        }
        let mut ring = ChowRing { n, raw: Vec::new() };
        let top = 2 * n - 2;
        for a in 0..=top {
            let mut row = Vec::new();
            for b in 0..=(top - a).min(n) {
                let c = ring.reduce_monomial(a, b);
                row.push(c);
            }
            ring.raw.push(row);
        }
        Ok(ring)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn top_degree(&self) -> u32 {
        2 * self.n - 2
    }

    pub fn zero(&self) -> ChowClass {
        ChowClass {
            n: self.n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_basis(&self, b: BasisElement, c: BigInt) -> ChowClass {
        let mut out = self.zero();
        out.add_term(b, &c);
        out
    }

    pub fn integer(&self, c: impl Into<BigInt>) -> ChowClass {
        self.from_basis(BasisElement::Mono(0, 0), c.into())
    }

    pub fn one(&self) -> ChowClass {
        self.integer(1)
    }

    pub fn zeta(&self) -> ChowClass {
        self.monomial(1, 0)
    }

    pub fn alpha(&self) -> ChowClass {
        self.monomial(0, 1)
    }

    pub fn exc(&self, k: u32) -> Result<ChowClass, ChowError> {
        if k > self.n {
            return Err(ChowError::ExcIndex { k, n: self.n });
        }
        Ok(self.from_basis(BasisElement::Exc(k), BigInt::one()))
    }

    /// Normal form of the raw product `ζ^a α^b`.
    pub fn monomial(&self, a: u32, b: u32) -> ChowClass {
        if b > self.n || a + b > self.top_degree() {
            return self.zero();
        }
        self.raw[a as usize][b as usize].clone()
    }

    /// Builds the table entry for `ζ^a α^b`; entries with smaller `a` must
    /// already be present.
    fn reduce_monomial(&self, a: u32, b: u32) -> ChowClass {
        let n = self.n;
        if b > n || a + b > self.top_degree() {
            return self.zero();
        }
        if a <= n - 2 {
            return self.from_basis(BasisElement::Mono(a, b), BigInt::one());
        }
        // ζ^a α^b = ζ^{a-n+1} α^b · ζ^{n-1}
        let mut out = self.zero();
        for j in 1..n {
            let c = sign(j - 1) * binomial(n + 1, j);
            out.add_scaled(&self.monomial(a - j, b + j), &c);
        }
        if b == 0 {
            let eps = sign(n - 1);
            let rest = a - (n - 1);
            for k in 0..=n {
                out.add_scaled(&self.zeta_pow_exc(rest, k), &eps);
            }
        }
        out
    }

    /// `ζ^i · E_k`.
    fn zeta_pow_exc(&self, i: u32, k: u32) -> ChowClass {
        if i == 0 {
            self.from_basis(BasisElement::Exc(k), BigInt::one())
        } else {
            // ζ E_k = α^n
            self.monomial(i - 1, self.n)
        }
    }

    fn basis_product(&self, x: BasisElement, y: BasisElement) -> ChowClass {
        use BasisElement::*;
        match (x, y) {
            (Mono(i1, j1), Mono(i2, j2)) => self.monomial(i1 + i2, j1 + j2),
            (Mono(i, j), Exc(k)) | (Exc(k), Mono(i, j)) => {
                if j > 0 {
                    self.zero()
                } else {
                    self.zeta_pow_exc(i, k)
                }
            }
            (Exc(k), Exc(l)) => {
                if k == l {
                    self.from_basis(Mono(self.n - 2, self.n), sign(self.n - 1))
                } else {
                    self.zero()
                }
            }
        }
    }

    fn check(&self, c: &ChowClass) -> Result<(), ChowError> {
        if c.n != self.n {
            return Err(ChowError::RingMismatch {
                left: self.n,
                right: c.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, a: &ChowClass, b: &ChowClass) -> Result<ChowClass, ChowError> {
        self.check(a)?;
        self.check(b)?;
        let mut out = a.clone();
        out.add_scaled(b, &BigInt::one());
        Ok(out)
    }

    pub fn sub(&self, a: &ChowClass, b: &ChowClass) -> Result<ChowClass, ChowError> {
        self.check(a)?;
        self.check(b)?;
        let mut out = a.clone();
        out.add_scaled(b, &-BigInt::one());
        Ok(out)
    }

    pub fn scale(&self, a: &ChowClass, c: &BigInt) -> ChowClass {
        let mut out = self.zero();
        out.add_scaled(a, c);
        out
    }

    pub fn neg(&self, a: &ChowClass) -> ChowClass {
        self.scale(a, &-BigInt::one())
    }

    pub fn mul(&self, a: &ChowClass, b: &ChowClass) -> Result<ChowClass, ChowError> {
        self.check(a)?;
        self.check(b)?;
        let mut out = self.zero();
        for (x, cx) in &a.terms {
            for (y, cy) in &b.terms {
                out.add_scaled(&self.basis_product(*x, *y), &(cx * cy));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, a: &ChowClass, mut e: u64) -> Result<ChowClass, ChowError> {
        self.check(a)?;
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base)?;
                if base.is_zero() {
                    return Ok(self.zero());
                }
            }
        }
        Ok(acc)
    }

    /// Coefficient of the top generator `ζ^{n-2} α^n`. Zero is accepted (it
    /// is homogeneous of every degree).
    pub fn intersection_number(&self, c: &ChowClass) -> Result<BigInt, ChowError> {
        self.check(c)?;
        let top = self.top_degree();
        if let Some(b) = c.terms.keys().find(|b| b.degree(self.n) != top) {
            return Err(ChowError::NotTopDegree {
                degree: b.degree(self.n),
                top,
            });
        }
        Ok(c.coeff(BasisElement::Mono(self.n - 2, self.n)))
    }

    /// Basis of `A^k`: monomials by increasing ζ-exponent, then `E_0..E_n`
    /// when `k = n-1`.
    pub fn basis(&self, k: u32) -> Result<Vec<BasisElement>, ChowError> {
        let n = self.n;
        if k > self.top_degree() {
            return Err(ChowError::DegreeOutOfRange {
                k,
                top: self.top_degree(),
            });
        }
        let mut out: Vec<BasisElement> = (0..=(n - 2).min(k))
            .filter(|&i| k - i <= n)
            .map(|i| BasisElement::Mono(i, k - i))
            .collect();
        if k == n - 1 {
            out.extend((0..=n).map(BasisElement::Exc));
        }
        Ok(out)
    }

    /// Intersection pairing `A^k x A^{2n-2-k} -> Z` in the chosen bases.
    pub fn pairing_matrix(&self, k: u32) -> Result<Vec<Vec<BigInt>>, ChowError> {
        let left = self.basis(k)?;
        let right = self.basis(self.top_degree().checked_sub(k).ok_or(
            ChowError::DegreeOutOfRange {
                k,
                top: self.top_degree(),
            },
        )?)?;
        left.iter()
            .map(|x| {
                right
                    .iter()
                    .map(|y| self.intersection_number(&self.basis_product(*x, *y)))
                    .collect()
            })
            .collect()
    }

    /// Determinant of [`Self::pairing_matrix`], computed by fraction-free
    /// elimination over the integers.
    pub fn pairing_determinant(&self, k: u32) -> Result<BigInt, ChowError> {
        Ok(integer_determinant(self.pairing_matrix(k)?))
    }
}

fn integer_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let size = m.len();
    if size == 0 {
        return BigInt::one();
    }
    if m.iter().any(|r| r.len() != size) {
        return BigInt::zero();
    }
    let mut sgn = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..size {
        if m[k][k].is_zero() {
            match (k + 1..size).find(|&i| !m[i][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    sgn = -sgn;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    &m[size - 1][size - 1] * sgn
}

//! Dense univariate polynomials over an exact field.

use std::cmp::Ordering;

use super::field::Field;
use super::AlgebraError;

/// Coefficients in ascending degree, trailing zeros stripped. The zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }
}

/// Operations on `F[x]`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<F: Field> {
    field: F,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F) -> Self {
        PolyRing { field }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
        while coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(&self, coeffs: &[i64]) -> Poly<F::Elem> {
        self.from_coeffs(coeffs.iter().map(|&c| self.field.from_i64(c)).collect())
    }

    pub fn zero(&self) -> Poly<F::Elem> {
        Poly { coeffs: Vec::new() }
    }

    pub fn one(&self) -> Poly<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x(&self) -> Poly<F::Elem> {
        self.from_coeffs(vec![self.field.zero(), self.field.one()])
    }

    /// `x - c`.
    pub fn linear(&self, c: &F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(vec![self.field.neg(c), self.field.one()])
    }

    pub fn coeff(&self, p: &Poly<F::Elem>, k: usize) -> F::Elem {
        p.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_constant(&self, p: &Poly<F::Elem>) -> bool {
        p.coeffs.len() <= 1
    }

    pub fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let len = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..len)
            .map(|k| self.field.add(&self.coeff(a, k), &self.coeff(b, k)))
            .collect();
        self.from_coeffs(coeffs)
    }

    pub fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let len = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..len)
            .map(|k| self.field.sub(&self.coeff(a, k), &self.coeff(b, k)))
            .collect();
        self.from_coeffs(coeffs)
    }

    pub fn neg(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        Poly {
            coeffs: a.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        }
    }

    pub fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut out = vec![self.field.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, ai) in a.coeffs.iter().enumerate() {
            if self.field.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                out[i + j] = self.field.add(&out[i + j], &self.field.mul(ai, bj));
            }
        }
        self.from_coeffs(out)
    }

    pub fn scale(&self, a: &Poly<F::Elem>, c: &F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(a.coeffs.iter().map(|x| self.field.mul(x, c)).collect())
    }

    pub fn pow(&self, a: &Poly<F::Elem>, e: u32) -> Poly<F::Elem> {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    pub fn derivative(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        let coeffs = a
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| self.field.mul(&self.field.from_i64(k as i64), c))
            .collect();
        self.from_coeffs(coeffs)
    }

    pub fn eval(&self, a: &Poly<F::Elem>, x: &F::Elem) -> F::Elem {
        a.coeffs.iter().rev().fold(self.field.zero(), |acc, c| {
            self.field.add(&self.field.mul(&acc, x), c)
        })
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> (Poly<F::Elem>, Poly<F::Elem>) {
        let db = b.degree().expect("division by the zero polynomial");
        let lead_inv = self.field.inv(b.leading().unwrap()).unwrap();
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return (self.zero(), a.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = self.field.mul(&rem[k + db], &lead_inv);
            if self.field.is_zero(&c) {
                continue;
            }
            for (i, bi) in b.coeffs.iter().enumerate() {
                rem[k + i] = self.field.sub(&rem[k + i], &self.field.mul(&c, bi));
            }
            quot[k] = c;
        }
        rem.truncate(db);
        (self.from_coeffs(quot), self.from_coeffs(rem))
    }

    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.div_rem(a, b).1
    }

    /// Exact quotient; panics (debug) if the division leaves a remainder.
    pub fn div_exact(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (q, r) = self.div_rem(a, b);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        match a.leading() {
            None => self.zero(),
            Some(l) => self.scale(a, &self.field.inv(l).unwrap()),
        }
    }

    /// Monic gcd (zero only if both inputs are zero).
    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn ext_gcd(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> (Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.div_rem(&r0, &r1);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            let t = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = self.field.inv(&l).unwrap();
                (
                    self.scale(&r0, &li),
                    self.scale(&s0, &li),
                    self.scale(&t0, &li),
                )
            }
        }
    }

    pub fn is_squarefree(&self, p: &Poly<F::Elem>) -> bool {
        !p.is_zero() && self.is_constant(&self.gcd(p, &self.derivative(p)))
    }

    /// `p = lc(p) * prod g_i^i` with `g_i` monic, squarefree, pairwise
    /// coprime, sorted by multiplicity. Only factors with `g_i != 1` are
    /// returned.
    ///
    /// Characteristic zero uses Yun's algorithm. In characteristic `c > 0`
    /// the base field is taken to be the prime field `F_c`, where every
    /// element is its own `c`-th root, so factors whose multiplicity is
    /// divisible by `c` are recovered by deflating `x^c -> x` and recursing.
    pub fn squarefree_decomposition(
        &self,
        p: &Poly<F::Elem>,
    ) -> Result<Vec<(Poly<F::Elem>, usize)>, AlgebraError> {
        let deg = p.degree().ok_or(AlgebraError::ZeroPolynomial)?;
        let p = self.monic(p);
        if deg == 0 {
            return Ok(Vec::new());
        }
        let mut out = match self.field.characteristic() {
            0 => self.yun(&p),
            c => self.squarefree_char_p(&p, c),
        };
        out.sort_by_key(|(_, i)| *i);
        let product = out.iter().fold(self.one(), |acc, (g, i)| {
            self.mul(&acc, &self.pow(g, *i as u32))
        });
        debug_assert_eq!(product, p);
        Ok(out)
    }

    fn yun(&self, p: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, usize)> {
        let mut out = Vec::new();
        let dp = self.derivative(p);
        let a0 = self.gcd(p, &dp);
        let mut b = self.div_exact(p, &a0);
        let mut c = self.div_exact(&dp, &a0);
        let mut d = self.sub(&c, &self.derivative(&b));
        let mut i = 1;
        while !self.is_constant(&b) {
            let a = self.gcd(&b, &d);
            if !self.is_constant(&a) {
                out.push((a.clone(), i));
            }
            b = self.div_exact(&b, &a);
            c = self.div_exact(&d, &a);
            d = self.sub(&c, &self.derivative(&b));
            i += 1;
        }
        out
    }

    fn squarefree_char_p(&self, p: &Poly<F::Elem>, char: u64) -> Vec<(Poly<F::Elem>, usize)> {
        let mut out = Vec::new();
        let mut c = self.gcd(p, &self.derivative(p));
        let mut w = self.div_exact(p, &c);
        let mut i = 1;
        while !self.is_constant(&w) {
            let y = self.gcd(&w, &c);
            let fac = self.div_exact(&w, &y);
            if !self.is_constant(&fac) {
                out.push((self.monic(&fac), i));
            }
            w = y;
            c = self.div_exact(&c, &w);
            i += 1;
        }
        if !self.is_constant(&c) {
            // c is a polynomial in x^char
            let step = char as usize;
            let root = self.from_coeffs(c.coeffs.iter().step_by(step).cloned().collect());
            for (g, m) in self.squarefree_char_p(&root, char) {
                out.push((g, m * step));
            }
        }
        out
    }

    /// Canonical ordering for factors: degree first, then the negated
    /// coefficients from the constant term upward. Linear factors `x - c`
    /// therefore come out in increasing `c`.
    pub fn canonical_cmp(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Ordering {
        let neg = |p: &Poly<F::Elem>| -> Vec<F::Elem> {
            p.coeffs.iter().map(|c| self.field.neg(c)).collect()
        };
        a.coeffs
            .len()
            .cmp(&b.coeffs.len())
            .then_with(|| neg(a).cmp(&neg(b)))
    }

    /// Human-readable form in the variable `var`, highest degree first,
    /// e.g. `x^2 - 2`.
    pub fn format(&self, p: &Poly<F::Elem>, var: &str) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, c) in p.coeffs.iter().enumerate().rev() {
            if self.field.is_zero(c) {
                continue;
            }
            let text = self.field.format(c);
            let (negative, mag) = match text.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, text),
            };
            if s.is_empty() {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                s.push_str(&mag);
            } else if mag == "1" {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{mag}*{mono}"));
            }
        }
        s
    }
}

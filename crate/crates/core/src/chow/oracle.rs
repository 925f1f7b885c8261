//! Intersection numbers computed on `P^n x P^n` instead of on the section.
//!
//! The section and the ambient flag variety are both cut by classes of
//! bidegree (1,1), so `∫_H ζ^a α^b` is the coefficient of `h1^n h2^n` in
//! `(h1 + h2)^(a+2) h1^b`. The product is expanded term by term in
//! `Z[h1, h2] / (h1^(n+1), h2^(n+1))`, without using any closed form.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ChowError;

pub fn bidegree_oracle(n: u32, a: u32, b: u32) -> Result<BigInt, ChowError> {
    if n < 2 {
        return Err(ChowError::BadN(n));
    }
    if a + b != 2 * n - 2 {
        return Err(ChowError::OracleDegree { n, a, b });
    }
    let size = n as usize + 1;
    // coeffs[i][j] is the coefficient of h1^i h2^j
    let mut coeffs = vec![vec![BigInt::zero(); size]; size];
    if (b as usize) < size {
        coeffs[b as usize][0] = BigInt::one();
    }
    for _ in 0..a + 2 {
        let mut next = vec![vec![BigInt::zero(); size]; size];
        for i in 0..size {
            for j in 0..size {
                let c = &coeffs[i][j];
                if c.is_zero() {
                    continue;
                }
                if i + 1 < size {
                    next[i + 1][j] += c;
                }
                if j + 1 < size {
                    next[i][j + 1] += c;
                }
            }
        }
        coeffs = next;
    }
    Ok(coeffs[n as usize][n as usize].clone())
}

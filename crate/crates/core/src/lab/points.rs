use serde::{Deserialize, Serialize};

use crate::algebra::{Field, PrimeField};

/// A point of `P^n(F_q)`, scaled so its first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ProjPoint(Vec<u64>);

impl ProjPoint {
    /// `None` for the zero vector.
    pub fn normalize(f: &PrimeField, v: &[u64]) -> Option<Self> {
        let lead = v.iter().find(|c| **c % f.modulus() != 0)?;
        let inv = f.inv(lead)?;
        Some(ProjPoint(v.iter().map(|c| f.mul(c, &inv)).collect()))
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }
}

/// `([x], [y])` in `P^n x P^n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PointPair {
    pub x: ProjPoint,
    pub y: ProjPoint,
}

/// All points of `P^dim(F_q)` in increasing coordinate order.
pub fn projective_points(f: &PrimeField, dim: usize) -> Vec<ProjPoint> {
    let q = f.modulus();
    let len = dim + 1;
    let mut out = Vec::new();
    // the leading 1 sits at position `lead`; later coordinates are free
    for lead in 0..len {
        let free = len - lead - 1;
        let mut v = vec![0u64; len];
        v[lead] = 1;
        let total = q.pow(free as u32);
        for mut code in 0..total {
            for slot in (lead + 1..len).rev() {
                v[slot] = code % q;
                code /= q;
            }
            out.push(ProjPoint(v.clone()));
        }
    }
    out.sort();
    out
}

pub fn dot(f: &PrimeField, a: &[u64], b: &[u64]) -> u64 {
    a.iter()
        .zip(b)
        .fold(0, |acc, (x, y)| f.add(&acc, &f.mul(x, y)))
}

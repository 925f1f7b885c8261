use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::matrix::{self, Matrix};
use crate::algebra::PrimeField;

/// A uniformly random invertible matrix, by rejection on the determinant.
pub fn random_invertible<R: Rng>(
    f: &PrimeField,
    size: usize,
    rng: &mut R,
) -> (Matrix<u64>, Matrix<u64>) {
    loop {
        let p = Matrix::from_fn(size, size, |_, _| rng.gen_range(0..f.modulus()));
        if let Some(inv) = matrix::inverse(f, &p) {
            return (p, inv);
        }
    }
}

/// `P A P^{-1}` for a `P` determined by `seed`.
pub fn random_conjugate(f: &PrimeField, a: &Matrix<u64>, seed: u64) -> Matrix<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (p, inv) = random_invertible(f, a.rows(), &mut rng);
    matrix::mul(f, &matrix::mul(f, &p, a), &inv)
}

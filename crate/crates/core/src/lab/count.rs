use crate::algebra::PrimeField;

use super::points::projective_points;
use super::LabError;

/// `|V_{s,r}(F_q)|`, counted by listing pairs in `P^{r-1} x P^{r-1}` with
/// `Σ_{s<i<=r} z_i w_i = 0`.
pub fn count_v(s: usize, r: usize, q: u64) -> Result<u64, LabError> {
    if r == 0 || s > r {
        return Err(LabError::BadShape { s, r });
    }
    let f = PrimeField::new_allowing_two(q)?;
    let pts = projective_points(&f, r - 1);
    let mut count = 0;
    for z in &pts {
        for w in &pts {
            let sum = z.coords()[s..]
                .iter()
                .zip(&w.coords()[s..])
                .fold(0, |acc, (a, b)| (acc + a * b) % q);
            if sum == 0 {
                count += 1;
            }
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_shapes() {
        for q in [3, 5, 7] {
            assert_eq!(count_v(1, 1, q).unwrap(), 1);
            assert_eq!(count_v(0, 1, q).unwrap(), 0);
            for r in 1..4u32 {
                let p = (q.pow(r) - 1) / (q - 1);
                assert_eq!(count_v(r as usize, r as usize, q).unwrap(), p * p);
            }
        }
        assert_eq!(count_v(2, 2, 3).unwrap(), 16);
        assert_eq!(count_v(1, 2, 3).unwrap(), 7);
        assert!(count_v(2, 1, 3).is_err());
        assert!(count_v(0, 2, 4).is_err());
    }
}

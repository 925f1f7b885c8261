//! Dense matrices over an exact field.

use super::field::Field;
use super::poly::{Poly, PolyRing};
use super::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::Ragged);
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<T: Clone>(&self, f: impl FnMut(&E) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

pub fn identity<F: Field>(f: &F, size: usize) -> Matrix<F::Elem> {
    Matrix::from_fn(size, size, |i, j| if i == j { f.one() } else { f.zero() })
}

pub fn zeros<F: Field>(f: &F, rows: usize, cols: usize) -> Matrix<F::Elem> {
    Matrix::from_fn(rows, cols, |_, _| f.zero())
}

pub fn diagonal<F: Field>(f: &F, diag: &[F::Elem]) -> Matrix<F::Elem> {
    Matrix::from_fn(diag.len(), diag.len(), |i, j| {
        if i == j {
            diag[i].clone()
        } else {
            f.zero()
        }
    })
}

pub fn mul<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.cols, b.rows, "matrix shape mismatch");
    Matrix::from_fn(a.rows, b.cols, |i, j| {
        (0..a.cols).fold(f.zero(), |acc, k| {
            f.add(&acc, &f.mul(a.get(i, k), b.get(k, j)))
        })
    })
}

pub fn add<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols), "matrix shape mismatch");
    Matrix::from_fn(a.rows, a.cols, |i, j| f.add(a.get(i, j), b.get(i, j)))
}

pub fn scale<F: Field>(f: &F, a: &Matrix<F::Elem>, c: &F::Elem) -> Matrix<F::Elem> {
    a.map(|x| f.mul(x, c))
}

/// `A - c I`.
pub fn shift<F: Field>(f: &F, a: &Matrix<F::Elem>, c: &F::Elem) -> Matrix<F::Elem> {
    let mut out = a.clone();
    for i in 0..a.rows.min(a.cols) {
        out.set(i, i, f.sub(a.get(i, i), c));
    }
    out
}

pub fn pow<F: Field>(f: &F, a: &Matrix<F::Elem>, e: u32) -> Matrix<F::Elem> {
    (0..e).fold(identity(f, a.rows), |acc, _| mul(f, &acc, a))
}

pub fn trace<F: Field>(f: &F, a: &Matrix<F::Elem>) -> F::Elem {
    (0..a.rows.min(a.cols)).fold(f.zero(), |acc, i| f.add(&acc, a.get(i, i)))
}

pub fn mat_vec<F: Field>(f: &F, a: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    (0..a.rows)
        .map(|i| {
            a.row(i)
                .iter()
                .zip(v)
                .fold(f.zero(), |acc, (x, y)| f.add(&acc, &f.mul(x, y)))
        })
        .collect()
}

/// True iff `a` is `c I` for some `c`.
pub fn is_scalar<F: Field>(f: &F, a: &Matrix<F::Elem>) -> bool {
    a.is_square()
        && (0..a.rows).all(|i| {
            (0..a.cols).all(|j| {
                if i == j {
                    a.get(i, j) == a.get(0, 0)
                } else {
                    f.is_zero(a.get(i, j))
                }
            })
        })
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref_in_place<F: Field>(f: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&i| !f.is_zero(m.get(i, col))) else {
            continue;
        };
        m.swap_rows(row, p);
        let inv = f.inv(m.get(row, col)).unwrap();
        for j in col..m.cols {
            let v = f.mul(m.get(row, j), &inv);
            m.set(row, j, v);
        }
        for i in 0..m.rows {
            if i == row || f.is_zero(m.get(i, col)) {
                continue;
            }
            let factor = m.get(i, col).clone();
            for j in col..m.cols {
                let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(row, j)));
                m.set(i, j, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    rref_in_place(f, &mut m.clone()).len()
}

/// Dimension of the right kernel.
pub fn nullity<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    m.cols - rank(f, m)
}

/// Basis of the right kernel `{v : M v = 0}`, one vector per free column.
pub fn kernel_basis<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut r = m.clone();
    let pivots = rref_in_place(f, &mut r);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); m.cols];
            v[fc] = f.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(row, fc));
            }
            v
        })
        .collect()
}

pub fn inverse<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows;
    let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m.get(i, j).clone()
        } else if j - n == i {
            f.one()
        } else {
            f.zero()
        }
    });
    let pivots = rref_in_place(f, &mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(Matrix::from_fn(n, n, |i, j| aug.get(i, n + j).clone()))
}

/// `det(xI - M)` by fraction-free (Bareiss) elimination over `F[x]`. Every
/// division is exact, so no step divides by an integer that could vanish in
/// positive characteristic.
pub fn charpoly<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Result<Poly<F::Elem>, AlgebraError> {
    if !m.is_square() {
        return Err(AlgebraError::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let ring = PolyRing::new(f.clone());
    let n = m.rows;
    if n == 0 {
        return Ok(ring.one());
    }
    let mut a: Vec<Vec<Poly<F::Elem>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = ring.constant(f.neg(m.get(i, j)));
                    if i == j {
                        ring.add(&c, &ring.x())
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    let mut sign_flip = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            // det(xI - M) is monic, so some row below carries a nonzero entry.
            let p = (k + 1..n)
                .find(|&i| !a[i][k].is_zero())
                .expect("singular xI - M");
            a.swap(k, p);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = ring.sub(&ring.mul(&a[k][k], &a[i][j]), &ring.mul(&a[i][k], &a[k][j]));
                a[i][j] = ring.div_exact(&num, &prev);
            }
            a[i][k] = ring.zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    let det = if sign_flip { ring.neg(&det) } else { det };
    debug_assert!(det.leading().is_some_and(|l| f.is_one(l)));
    Ok(det)
}

/// Companion matrix of a monic polynomial (ones on the subdiagonal, negated
/// coefficients in the last column).
pub fn companion<F: Field>(f: &F, p: &Poly<F::Elem>) -> Matrix<F::Elem> {
    let d = p.degree().unwrap_or(0);
    Matrix::from_fn(d, d, |i, j| {
        if j == d - 1 {
            f.neg(&p.coeffs()[i])
        } else if i == j + 1 {
            f.one()
        } else {
            f.zero()
        }
    })
}

/// Block-diagonal sum.
pub fn direct_sum<F: Field>(f: &F, blocks: &[Matrix<F::Elem>]) -> Matrix<F::Elem> {
    let size: usize = blocks.iter().map(|b| b.rows).sum();
    let mut out = zeros(f, size, size);
    let mut off = 0;
    for b in blocks {
        for i in 0..b.rows {
            for j in 0..b.cols {
                out.set(off + i, off + j, b.get(i, j).clone());
            }
        }
        off += b.rows;
    }
    out
}

/// Jordan block `J_size(eigenvalue)` with ones on the superdiagonal.
pub fn jordan_block<F: Field>(f: &F, eigenvalue: &F::Elem, size: usize) -> Matrix<F::Elem> {
    Matrix::from_fn(size, size, |i, j| {
        if i == j {
            eigenvalue.clone()
        } else if j == i + 1 {
            f.one()
        } else {
            f.zero()
        }
    })
}

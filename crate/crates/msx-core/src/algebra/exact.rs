//! Dense square matrices of exact scalars: Kronecker expansion and exact
//! Gaussian elimination for ranks, null dimensions and determinants.

use std::fmt;

use super::mat2::Mat2;
use super::scalar::GaussianScalar;

/// An `n × n` matrix of exact scalars, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMat {
    n: usize,
    data: Vec<GaussianScalar>,
}

impl ExactMat {
    pub fn from_rows(rows: Vec<Vec<GaussianScalar>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix must be square");
            data.extend(row);
        }
        Self { n, data }
    }

    pub fn from_mat2(m: &Mat2) -> Self {
        Self {
            n: 2,
            data: m.entries().to_vec(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![GaussianScalar::zero(); n * n];
        for r in 0..n {
            data[r * n + r] = GaussianScalar::one();
        }
        Self { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> &GaussianScalar {
        &self.data[row * self.n + col]
    }

    pub fn adjoint(&self) -> Self {
        let n = self.n;
        let mut data = vec![GaussianScalar::zero(); n * n];
        for r in 0..n {
            for c in 0..n {
                data[c * n + r] = self.entry(r, c).conj();
            }
        }
        Self { n, data }
    }

    pub fn mul(&self, rhs: &ExactMat) -> ExactMat {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut data = vec![GaussianScalar::zero(); n * n];
        for r in 0..n {
            for c in 0..n {
                let mut acc = GaussianScalar::zero();
                for k in 0..n {
                    acc = &acc + &(self.entry(r, k) * rhs.entry(k, c));
                }
                data[r * n + c] = acc;
            }
        }
        ExactMat { n, data }
    }

    /// Rank over the exact scalar field, by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.data.clone();
        let n = self.n;
        let mut rank = 0;
        for col in 0..n {
            let pivot_row = (rank..n).find(|&r| !m[r * n + col].is_zero());
            let Some(p) = pivot_row else { continue };
            for c in 0..n {
                m.swap(rank * n + c, p * n + c);
            }
            let pivot = m[rank * n + col].clone();
            for r in (rank + 1)..n {
                if m[r * n + col].is_zero() {
                    continue;
                }
                let factor = m[r * n + col].div(&pivot).expect("pivot is nonzero");
                for c in col..n {
                    let sub = &factor * &m[rank * n + c];
                    m[r * n + c] = &m[r * n + c] - &sub;
                }
            }
            rank += 1;
            if rank == n {
                break;
            }
        }
        rank
    }

    /// Dimension of the null space: `n − rank`.
    pub fn null_dim(&self) -> usize {
        self.n - self.rank()
    }

    /// Exact determinant by elimination with row pivoting.
    pub fn det(&self) -> GaussianScalar {
        let mut m = self.data.clone();
        let n = self.n;
        let mut sign_flip = false;
        let mut det = GaussianScalar::one();
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !m[r * n + col].is_zero());
            let Some(p) = pivot_row else {
                return GaussianScalar::zero();
            };
            if p != col {
                for c in 0..n {
                    m.swap(col * n + c, p * n + c);
                }
                sign_flip = !sign_flip;
            }
            let pivot = m[col * n + col].clone();
            det = &det * &pivot;
            for r in (col + 1)..n {
                if m[r * n + col].is_zero() {
                    continue;
                }
                let factor = m[r * n + col].div(&pivot).expect("pivot is nonzero");
                for c in col..n {
                    let sub = &factor * &m[col * n + c];
                    m[r * n + c] = &m[r * n + c] - &sub;
                }
            }
        }
        if sign_flip {
            -&det
        } else {
            det
        }
    }
}

impl fmt::Debug for ExactMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.n {
            write!(f, "[")?;
            for c in 0..self.n {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.entry(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Kronecker product of two 2×2 matrices, expanded to 4×4.
pub fn kron(a: &Mat2, b: &Mat2) -> ExactMat {
    kron_exact(&ExactMat::from_mat2(a), b)
}

fn kron_exact(a: &ExactMat, b: &Mat2) -> ExactMat {
    let na = a.dim();
    let n = na * 2;
    let mut data = vec![GaussianScalar::zero(); n * n];
    for ra in 0..na {
        for ca in 0..na {
            let block = a.entry(ra, ca);
            if block.is_zero() {
                continue;
            }
            for rb in 0..2 {
                for cb in 0..2 {
                    data[(ra * 2 + rb) * n + (ca * 2 + cb)] = block * b.entry(rb, cb);
                }
            }
        }
    }
    ExactMat { n, data }
}

/// Kronecker product of a list of 2×2 factors; `k` factors give `2^k × 2^k`.
pub fn kron_list(factors: &[Mat2]) -> ExactMat {
    assert!(!factors.is_empty(), "kron_list needs at least one factor");
    let mut acc = ExactMat::from_mat2(&factors[0]);
    for f in &factors[1..] {
        acc = kron_exact(&acc, f);
    }
    acc
}

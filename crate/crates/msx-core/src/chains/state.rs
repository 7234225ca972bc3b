//! Superposed tensor states: formal sums of coefficient-weighted Kronecker
//! products of 2×2 factors.

use crate::algebra::{GaussianScalar, Mat2, Rat};
use crate::hilbert::inner_tensor;

use super::ChainError;

/// A formal sum Σ cₜ·(A₁⊗…⊗Aₙ); every term has the same factor count.
/// Zero-coefficient terms are dropped and duplicate factor lists merged on
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateVector {
    terms: Vec<(GaussianScalar, Vec<Mat2>)>,
    factor_count: usize,
}

impl StateVector {
    pub fn new(terms: Vec<(GaussianScalar, Vec<Mat2>)>) -> Result<Self, ChainError> {
        let mut factor_count = 0;
        for (_, factors) in &terms {
            if factors.is_empty() {
                return Err(ChainError::EmptyTerm);
            }
            if factor_count == 0 {
                factor_count = factors.len();
            } else if factors.len() != factor_count {
                return Err(ChainError::NonUniformFactorCount {
                    expected: factor_count,
                    got: factors.len(),
                });
            }
        }
        let mut canonical: Vec<(GaussianScalar, Vec<Mat2>)> = Vec::new();
        for (coeff, factors) in terms {
            match canonical.iter_mut().find(|(_, f)| *f == factors) {
                Some((c, _)) => *c = &*c + &coeff,
                None => canonical.push((coeff, factors)),
            }
        }
        canonical.retain(|(c, _)| !c.is_zero());
        if canonical.is_empty() {
            factor_count = 0;
        }
        Ok(Self {
            terms: canonical,
            factor_count,
        })
    }

    /// A single product state `c·(A₁⊗…⊗Aₙ)`.
    pub fn product(coeff: GaussianScalar, factors: Vec<Mat2>) -> Result<Self, ChainError> {
        Self::new(vec![(coeff, factors)])
    }

    pub fn terms(&self) -> &[(GaussianScalar, Vec<Mat2>)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn factor_count(&self) -> usize {
        self.factor_count
    }

    /// ⟨self|other⟩ over the tensor inner product, expanded bilinearly.
    pub fn inner(&self, other: &StateVector) -> Result<GaussianScalar, ChainError> {
        if !self.is_zero() && !other.is_zero() && self.factor_count != other.factor_count {
            return Err(ChainError::StateFactorMismatch {
                left: self.factor_count,
                right: other.factor_count,
            });
        }
        let mut acc = GaussianScalar::zero();
        for (c, fs) in &self.terms {
            for (d, gs) in &other.terms {
                let overlap = inner_tensor(fs, gs).expect("factor counts verified");
                acc = &acc + &(&(&c.conj() * d) * &overlap);
            }
        }
        Ok(acc)
    }

    /// ⟨ψ|ψ⟩, always a nonnegative rational.
    pub fn norm_sq(&self) -> Rat {
        self.inner(self)
            .expect("factor counts match themselves")
            .to_rational()
            .expect("self inner products are rational")
    }

    /// Separability across a bipartition of the factors: the first `split`
    /// factors against the rest. The state is separable iff its exact
    /// coefficient matrix across the split has rank ≤ 1.
    pub fn is_separable(&self, split: usize) -> Result<bool, ChainError> {
        if self.is_zero() {
            return Ok(true);
        }
        if split == 0 || split >= self.factor_count {
            return Err(ChainError::BadSplit {
                split,
                factors: self.factor_count,
            });
        }
        let left_dim = 4usize.pow(split as u32);
        let right_dim = 4usize.pow((self.factor_count - split) as u32);
        let mut rows = vec![vec![GaussianScalar::zero(); right_dim]; left_dim];
        for (coeff, factors) in &self.terms {
            let left = entry_coefficients(&factors[..split]);
            let right = entry_coefficients(&factors[split..]);
            for (r, lv) in left.iter().enumerate() {
                if lv.is_zero() {
                    continue;
                }
                let scaled = coeff * lv;
                for (c, rv) in right.iter().enumerate() {
                    if rv.is_zero() {
                        continue;
                    }
                    rows[r][c] = &rows[r][c] + &(&scaled * rv);
                }
            }
        }
        Ok(rectangular_rank(rows) <= 1)
    }
}

/// Flatten ⊗factors into its 4^k entry coefficients, entry-major.
fn entry_coefficients(factors: &[Mat2]) -> Vec<GaussianScalar> {
    let mut acc = vec![GaussianScalar::one()];
    for f in factors {
        let mut next = Vec::with_capacity(acc.len() * 4);
        for v in &acc {
            for e in f.entries() {
                next.push(v * e);
            }
        }
        acc = next;
    }
    acc
}

/// Rank of a rectangular exact matrix by row elimination.
fn rectangular_rank(mut rows: Vec<Vec<GaussianScalar>>) -> usize {
    let nrows = rows.len();
    let ncols = if nrows == 0 { 0 } else { rows[0].len() };
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in (rank + 1)..nrows {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].div(&pivot).expect("pivot is nonzero");
            let updates: Vec<GaussianScalar> =
                rows[rank][col..ncols].iter().map(|v| &factor * v).collect();
            for (cell, sub) in rows[r][col..ncols].iter_mut().zip(updates) {
                *cell = &*cell - &sub;
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

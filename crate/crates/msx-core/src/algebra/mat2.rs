//! Exact 2×2 matrices: the universe of heads, phrases and contexts.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::GaussianScalar;

/// A 2×2 matrix of exact scalars.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    e: [GaussianScalar; 4],
}

impl Mat2 {
    pub fn new(
        a11: GaussianScalar,
        a12: GaussianScalar,
        a21: GaussianScalar,
        a22: GaussianScalar,
    ) -> Self {
        Self {
            e: [a11, a12, a21, a22],
        }
    }

    /// Matrix from integer entries `[[a, b], [c, d]]` with an imaginary part
    /// per entry: each pair is `(re, im)`.
    pub fn from_int_pairs(entries: [(i64, i64); 4]) -> Self {
        let [a, b, c, d] = entries;
        Self::new(
            GaussianScalar::from_ints(a.0, a.1),
            GaussianScalar::from_ints(b.0, b.1),
            GaussianScalar::from_ints(c.0, c.1),
            GaussianScalar::from_ints(d.0, d.1),
        )
    }

    pub fn diag(a: GaussianScalar, d: GaussianScalar) -> Self {
        Self::new(a, GaussianScalar::zero(), GaussianScalar::zero(), d)
    }

    pub fn antidiag(b: GaussianScalar, c: GaussianScalar) -> Self {
        Self::new(GaussianScalar::zero(), b, c, GaussianScalar::zero())
    }

    pub fn zero() -> Self {
        Self::diag(GaussianScalar::zero(), GaussianScalar::zero())
    }

    pub fn identity() -> Self {
        Self::diag(GaussianScalar::one(), GaussianScalar::one())
    }

    /// Entry at `(row, col)`, zero-indexed.
    pub fn entry(&self, row: usize, col: usize) -> &GaussianScalar {
        &self.e[row * 2 + col]
    }

    pub fn entries(&self) -> &[GaussianScalar; 4] {
        &self.e
    }

    pub fn det(&self) -> GaussianScalar {
        &(&self.e[0] * &self.e[3]) - &(&self.e[1] * &self.e[2])
    }

    pub fn trace(&self) -> GaussianScalar {
        &self.e[0] + &self.e[3]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::new(
            self.e[0].conj(),
            self.e[2].conj(),
            self.e[1].conj(),
            self.e[3].conj(),
        )
    }

    /// Coefficients `(c0, c1)` of `p(λ) = λ² + c1·λ + c0`,
    /// i.e. `c1 = −tr(M)` and `c0 = det(M)`.
    pub fn char_poly(&self) -> (GaussianScalar, GaussianScalar) {
        (self.det(), -&self.trace())
    }

    pub fn scale(&self, k: &GaussianScalar) -> Self {
        Self {
            e: [
                k * &self.e[0],
                k * &self.e[1],
                k * &self.e[2],
                k * &self.e[3],
            ],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(GaussianScalar::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        self.e[1].is_zero() && self.e[2].is_zero()
    }

    pub fn is_antidiagonal(&self) -> bool {
        self.e[0].is_zero() && self.e[3].is_zero()
    }

    pub fn is_hermitian(&self) -> bool {
        self.adjoint() == *self
    }

    pub fn is_anti_hermitian(&self) -> bool {
        self.adjoint() == -self
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: &Mat2) -> Mat2 {
        let p = |r: usize, c: usize| {
            &(self.entry(r, 0) * rhs.entry(0, c)) + &(self.entry(r, 1) * rhs.entry(1, c))
        };
        Mat2::new(p(0, 0), p(0, 1), p(1, 0), p(1, 1))
    }
}

impl Add for &Mat2 {
    type Output = Mat2;

    fn add(self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            e: [
                &self.e[0] + &rhs.e[0],
                &self.e[1] + &rhs.e[1],
                &self.e[2] + &rhs.e[2],
                &self.e[3] + &rhs.e[3],
            ],
        }
    }
}

impl Sub for &Mat2 {
    type Output = Mat2;

    fn sub(self, rhs: &Mat2) -> Mat2 {
        self + &(-rhs)
    }
}

impl Neg for &Mat2 {
    type Output = Mat2;

    fn neg(self) -> Mat2 {
        Mat2 {
            e: [-&self.e[0], -&self.e[1], -&self.e[2], -&self.e[3]],
        }
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        -&self
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{},{}],[{},{}]]",
            self.e[0], self.e[1], self.e[2], self.e[3]
        )
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

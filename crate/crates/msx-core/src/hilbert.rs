//! The inner-product layer: trace scalar product, orthogonality, Gram-matrix
//! dimension counting, and the Chomsky ↔ Pauli basis changes for H₈ and H_cp.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{frac, ExactMat, GaussianScalar, Mat2, Rat};
use crate::groups::BaseMatrix;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum HilbertError {
    #[error("factor count mismatch: {left} vs {right}")]
    FactorCountMismatch { left: usize, right: usize },
    #[error("cannot change between bases of different arity: {from} vs {to}")]
    ArityMismatch { from: Basis, to: Basis },
    #[error("basis {basis} needs {expected} coordinates, got {got}")]
    CoordLength {
        basis: Basis,
        expected: usize,
        got: usize,
    },
    #[error("unknown basis {0:?} (expected pauli2, chomsky2, pauli4 or chomsky4)")]
    UnknownBasis(String),
}

/// Scalar product ⟨A|B⟩ = tr(A†B).
pub fn inner(a: &Mat2, b: &Mat2) -> GaussianScalar {
    (&a.adjoint() * b).trace()
}

/// Scalar product of two tensor-product vectors, as the product of
/// per-factor scalar products: ⟨A⊗B|C⊗D⟩ = tr(A†C)·tr(B†D).
pub fn inner_tensor(left: &[Mat2], right: &[Mat2]) -> Result<GaussianScalar, HilbertError> {
    if left.len() != right.len() {
        return Err(HilbertError::FactorCountMismatch {
            left: left.len(),
            right: right.len(),
        });
    }
    let mut acc = GaussianScalar::one();
    for (a, b) in left.iter().zip(right) {
        acc = &acc * &inner(a, b);
    }
    Ok(acc)
}

/// ⟨A|A⟩, always a nonnegative rational.
pub fn norm_sq(a: &Mat2) -> Rat {
    inner(a, a)
        .to_rational()
        .expect("self inner products are rational")
}

pub fn is_orthogonal(a: &Mat2, b: &Mat2) -> bool {
    inner(a, b).is_zero()
}

/// The dimension spanned by a set of matrices, as the exact rank of their
/// Gram matrix of pairwise scalar products.
pub fn gram_dimension(set: &[Mat2]) -> usize {
    assert!(!set.is_empty(), "gram_dimension needs a nonempty set");
    let rows = set
        .iter()
        .map(|a| set.iter().map(|b| inner(a, b)).collect())
        .collect();
    ExactMat::from_rows(rows).rank()
}

/// The four coordinate systems of the calculus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Pauli2,
    Chomsky2,
    Pauli4,
    Chomsky4,
}

impl Basis {
    pub fn arity(self) -> usize {
        match self {
            Basis::Pauli2 | Basis::Chomsky2 => 2,
            Basis::Pauli4 | Basis::Chomsky4 => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Basis::Pauli2 => "pauli2",
            Basis::Chomsky2 => "chomsky2",
            Basis::Pauli4 => "pauli4",
            Basis::Chomsky4 => "chomsky4",
        }
    }

    /// The unnormalized basis matrices; each has norm² = 2, so the
    /// orthonormal basis vectors are these divided by √2.
    pub fn matrices(self) -> Vec<Mat2> {
        let bases: &[BaseMatrix] = match self {
            Basis::Pauli2 => &[BaseMatrix::I, BaseMatrix::Z],
            Basis::Chomsky2 => &[BaseMatrix::C1, BaseMatrix::C2],
            Basis::Pauli4 => &[BaseMatrix::I, BaseMatrix::X, BaseMatrix::Y, BaseMatrix::Z],
            Basis::Chomsky4 => &[
                BaseMatrix::C1,
                BaseMatrix::C2,
                BaseMatrix::S1,
                BaseMatrix::S2,
            ],
        };
        bases.iter().map(|b| b.matrix()).collect()
    }

    fn is_chomsky(self) -> bool {
        matches!(self, Basis::Chomsky2 | Basis::Chomsky4)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for Basis {
    type Err = HilbertError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pauli2" => Ok(Basis::Pauli2),
            "chomsky2" => Ok(Basis::Chomsky2),
            "pauli4" => Ok(Basis::Pauli4),
            "chomsky4" => Ok(Basis::Chomsky4),
            other => Err(HilbertError::UnknownBasis(other.to_string())),
        }
    }
}

/// Exact coordinates of a vector in one of the four bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordVector {
    pub basis: Basis,
    pub coords: Vec<GaussianScalar>,
}

impl CoordVector {
    pub fn new(basis: Basis, coords: Vec<GaussianScalar>) -> Result<Self, HilbertError> {
        if coords.len() != basis.arity() {
            return Err(HilbertError::CoordLength {
                basis,
                expected: basis.arity(),
                got: coords.len(),
            });
        }
        Ok(Self { basis, coords })
    }

    /// Reconstruct the matrix Σ cₖ·Mₖ/√2 the coordinates describe.
    pub fn to_matrix(&self) -> Mat2 {
        let inv = GaussianScalar::inv_sqrt2();
        let mut acc = Mat2::zero();
        for (c, m) in self.coords.iter().zip(self.basis.matrices()) {
            acc = &acc + &m.scale(&(c * &inv));
        }
        acc
    }
}

fn half(re: i64, im: i64) -> GaussianScalar {
    GaussianScalar::new(frac(re, 2), frac(im, 2))
}

/// The 2×2 Chomsky→Pauli coordinate change.
pub fn change_matrix2() -> ExactMat {
    ExactMat::from_rows(vec![
        vec![half(1, -1), half(1, 1)],
        vec![half(1, 1), half(1, -1)],
    ])
}

/// The 4×4 Chomsky→Pauli coordinate change.
pub fn change_matrix4() -> ExactMat {
    let zero = GaussianScalar::zero;
    ExactMat::from_rows(vec![
        vec![half(1, -1), half(1, 1), zero(), zero()],
        vec![zero(), zero(), half(1, -1), half(1, 1)],
        vec![zero(), zero(), half(-1, 1), half(1, 1)],
        vec![half(1, 1), half(1, -1), zero(), zero()],
    ])
}

fn apply(m: &ExactMat, coords: &[GaussianScalar]) -> Vec<GaussianScalar> {
    (0..m.dim())
        .map(|r| {
            let mut acc = GaussianScalar::zero();
            for (c, x) in coords.iter().enumerate() {
                acc = &acc + &(m.entry(r, c) * x);
            }
            acc
        })
        .collect()
}

/// Re-express a coordinate vector in another basis of the same arity, via
/// the unitary change matrices. Round trips are exact identities.
pub fn change_basis(v: &CoordVector, to: Basis) -> Result<CoordVector, HilbertError> {
    if v.basis.arity() != to.arity() {
        return Err(HilbertError::ArityMismatch { from: v.basis, to });
    }
    if v.basis == to {
        return Ok(v.clone());
    }
    let u = if v.basis.arity() == 2 {
        change_matrix2()
    } else {
        change_matrix4()
    };
    // U maps Chomsky coordinates to Pauli coordinates; U† inverts it.
    let m = if v.basis.is_chomsky() { u } else { u.adjoint() };
    CoordVector::new(to, apply(&m, &v.coords))
}

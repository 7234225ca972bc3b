//! Eighth roots of unity: the value domain of every label in the calculus.

use std::fmt;

use num_traits::{Signed, Zero};

use super::scalar::{frac, GaussianScalar};
use super::AlgebraError;

/// A phase `e^{i·index·π/4}` with `index ∈ 0..8`. Indices 0, 2, 4, 6 are the
/// quarter phases `1, i, −1, −i` — the only ones that occur as final labels.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PhaseOctant(u8);

impl PhaseOctant {
    pub const ONE: PhaseOctant = PhaseOctant(0);
    pub const I: PhaseOctant = PhaseOctant(2);
    pub const MINUS_ONE: PhaseOctant = PhaseOctant(4);
    pub const MINUS_I: PhaseOctant = PhaseOctant(6);

    pub fn new(index: u8) -> Self {
        PhaseOctant(index % 8)
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn squared(self) -> Self {
        self * self
    }

    pub fn inverse(self) -> Self {
        PhaseOctant((8 - self.0) % 8)
    }

    /// True for the quarter phases `±1, ±i`.
    pub fn is_quarter(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// The phase as an exact scalar; odd octants carry a √2 factor.
    pub fn to_scalar(self) -> GaussianScalar {
        let (re, im) = match self.0 {
            0 => (1, 0),
            1 => (1, 1),
            2 => (0, 1),
            3 => (-1, 1),
            4 => (-1, 0),
            5 => (-1, -1),
            6 => (0, -1),
            7 => (1, -1),
            _ => unreachable!(),
        };
        if self.0.is_multiple_of(2) {
            GaussianScalar::from_ints(re, im)
        } else {
            // e.g. e^{iπ/4} = (1+i)/√2 = (1/2 + i/2)·√2
            GaussianScalar::with_sqrt2_pow(frac(re, 2), frac(im, 2), 1)
        }
    }
}

/// Octant multiplication is index addition mod 8.
impl std::ops::Mul for PhaseOctant {
    type Output = PhaseOctant;

    fn mul(self, rhs: PhaseOctant) -> PhaseOctant {
        PhaseOctant((self.0 + rhs.0) % 8)
    }
}

impl fmt::Display for PhaseOctant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.0 {
            0 => "1",
            1 => "(1+i)/sqrt2",
            2 => "i",
            3 => "(-1+i)/sqrt2",
            4 => "-1",
            5 => "(-1-i)/sqrt2",
            6 => "-i",
            7 => "(1-i)/sqrt2",
            _ => unreachable!(),
        };
        write!(f, "{}", s)
    }
}

impl fmt::Debug for PhaseOctant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// The octant `u` with `z = |z|·u`, when the argument of `z` is a multiple of
/// π/4. Anything else lies outside the calculus and is rejected.
pub fn phase_of(z: &GaussianScalar) -> Result<PhaseOctant, AlgebraError> {
    if z.is_zero() {
        return Err(AlgebraError::ZeroScalar);
    }
    let re = z.re();
    let im = z.im();
    let index = if im.is_zero() {
        if re.is_positive() {
            0
        } else {
            4
        }
    } else if re.is_zero() {
        if im.is_positive() {
            2
        } else {
            6
        }
    } else if re == im {
        if re.is_positive() {
            1
        } else {
            5
        }
    } else if *re == -im.clone() {
        if im.is_positive() {
            3
        } else {
            7
        }
    } else {
        return Err(AlgebraError::NonOctantPhase(Box::new(z.clone())));
    };
    Ok(PhaseOctant(index))
}

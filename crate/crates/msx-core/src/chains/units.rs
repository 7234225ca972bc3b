//! Enumeration and classification of the unit matrices: sums A + B of two
//! distinct group elements with exactly one nonzero eigenvalue.

use std::fmt;

use crate::algebra::{phase_of, GaussianScalar, Mat2, PhaseOctant};
use crate::groups::{gcp_elements, BaseMatrix, GcpElem};
use crate::hilbert::is_orthogonal;
use crate::par;

use super::ChainError;

/// The three classification sets of the 96 units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum UnitSet {
    One,
    Two,
    Three,
}

impl UnitSet {
    pub fn number(self) -> u8 {
        match self {
            UnitSet::One => 1,
            UnitSet::Two => 2,
            UnitSet::Three => 3,
        }
    }
}

impl fmt::Display for UnitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HermitianClass {
    Hermitian,
    AntiHermitian,
    Neither,
}

impl fmt::Display for HermitianClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            HermitianClass::Hermitian => "hermitian",
            HermitianClass::AntiHermitian => "anti-hermitian",
            HermitianClass::Neither => "neither",
        };
        write!(f, "{}", s)
    }
}

/// One admissible context sum A + B with its classification evidence.
#[derive(Debug, Clone)]
pub struct UnitRecord {
    pub a: &'static GcpElem,
    pub b: &'static GcpElem,
    pub sum: Mat2,
    /// The unique nonzero eigenvalue u_c = tr(A + B).
    pub eigenvalue: GaussianScalar,
    pub set: UnitSet,
    /// u_c²/|u_c²| — always one of ±1, ±i.
    pub context_label: PhaseOctant,
    pub hermitian: HermitianClass,
    /// Whether the two summands are orthogonal under the trace product.
    pub orthogonal: bool,
    /// Whether both summands lie inside G₈.
    pub g8_internal: bool,
    pub inner_product: GaussianScalar,
}

impl UnitRecord {
    pub fn pair_label(&self) -> String {
        join_pair(&self.a.token, &self.b.token)
    }
}

/// `I+X`, `I-C1`, `-iC1+iC2`: the second summand's sign folds into the glue.
fn join_pair(a: &str, b: &str) -> String {
    match b.strip_prefix('-') {
        Some(rest) => format!("{a}-{rest}"),
        None => format!("{a}+{b}"),
    }
}

fn in_g8(e: &GcpElem) -> bool {
    e.phase_pow.is_multiple_of(2)
        && matches!(
            e.base,
            BaseMatrix::I | BaseMatrix::Z | BaseMatrix::C1 | BaseMatrix::C2
        )
}

/// Classify an unordered pair of distinct group elements as a unit record,
/// or report that the sum does not have exactly one nonzero eigenvalue.
pub fn classify_pair(a: &'static GcpElem, b: &'static GcpElem) -> Result<UnitRecord, ChainError> {
    let sum = &a.matrix + &b.matrix;
    // One nonzero eigenvalue of a 2×2 means det = 0 with trace ≠ 0, and the
    // eigenvalue itself is the trace.
    let eigenvalue = sum.trace();
    if !sum.det().is_zero() || eigenvalue.is_zero() {
        return Err(ChainError::NotAUnit {
            pair: join_pair(&a.token, &b.token),
        });
    }
    let orthogonal = is_orthogonal(&a.matrix, &b.matrix);
    let hermitian = if sum.is_hermitian() {
        HermitianClass::Hermitian
    } else if sum.is_anti_hermitian() {
        HermitianClass::AntiHermitian
    } else {
        HermitianClass::Neither
    };
    let set = match (orthogonal, hermitian) {
        (true, HermitianClass::Hermitian | HermitianClass::AntiHermitian) => UnitSet::One,
        (true, HermitianClass::Neither) => UnitSet::Two,
        (false, _) => UnitSet::Three,
    };
    let context_label = phase_of(&eigenvalue).expect("nonzero eigenvalue").squared();
    let inner_product = crate::hilbert::inner(&a.matrix, &b.matrix);
    Ok(UnitRecord {
        a,
        b,
        sum,
        eigenvalue,
        set,
        context_label,
        hermitian,
        orthogonal,
        g8_internal: in_g8(a) && in_g8(b),
        inner_product,
    })
}

/// All unordered pairs {A, B} of distinct G_cp elements whose sum is a unit
/// matrix, in canonical token order. There are exactly 96.
pub fn enumerate_units() -> Vec<UnitRecord> {
    let elems = gcp_elements();
    let mut pairs = Vec::new();
    for i in 0..elems.len() {
        for j in (i + 1)..elems.len() {
            pairs.push((&elems[i], &elems[j]));
        }
    }
    par::map_collect(&pairs, |&(a, b)| classify_pair(a, b).ok())
        .into_iter()
        .flatten()
        .collect()
}

/// Sequential twin of [`enumerate_units`], for benchmarking the two paths.
pub fn enumerate_units_seq() -> Vec<UnitRecord> {
    let elems = gcp_elements();
    let mut pairs = Vec::new();
    for i in 0..elems.len() {
        for j in (i + 1)..elems.len() {
            pairs.push((&elems[i], &elems[j]));
        }
    }
    par::map_collect_seq(&pairs, |&(a, b)| classify_pair(a, b).ok())
        .into_iter()
        .flatten()
        .collect()
}

/// Harmonic combinations are exactly those with context label ±1 (Set 1);
/// for them the chain label equals ± the specifier label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Harmonic {
    Harmonic,
    NonHarmonic,
}

pub fn harmonic_class(rec: &UnitRecord) -> Harmonic {
    if rec.context_label == PhaseOctant::ONE || rec.context_label == PhaseOctant::MINUS_ONE {
        Harmonic::Harmonic
    } else {
        Harmonic::NonHarmonic
    }
}

/// The grammatical role taxonomy of Set-1 units.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Taxonomy {
    /// {±I, ±P} with real summands, P a Pauli matrix.
    Predicational,
    /// {±iI, ±iP}: the i-multiples.
    Movement,
    /// Both summands from the ±C₁/±C₂ (or i-scaled) families.
    Head,
}

impl fmt::Display for Taxonomy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Taxonomy::Predicational => "predicational",
            Taxonomy::Movement => "movement",
            Taxonomy::Head => "head",
        };
        write!(f, "{}", s)
    }
}

pub fn context_taxonomy(rec: &UnitRecord) -> Result<Taxonomy, ChainError> {
    if rec.set != UnitSet::One {
        return Err(ChainError::NotSetOne {
            pair: rec.pair_label(),
        });
    }
    let pauli_base = |b: BaseMatrix| {
        matches!(
            b,
            BaseMatrix::I | BaseMatrix::X | BaseMatrix::Y | BaseMatrix::Z
        )
    };
    let chomsky_base = |b: BaseMatrix| matches!(b, BaseMatrix::C1 | BaseMatrix::C2);
    let real = |e: &GcpElem| e.phase_pow.is_multiple_of(2);
    if chomsky_base(rec.a.base) && chomsky_base(rec.b.base) {
        Ok(Taxonomy::Head)
    } else if pauli_base(rec.a.base) && pauli_base(rec.b.base) {
        if real(rec.a) && real(rec.b) {
            Ok(Taxonomy::Predicational)
        } else {
            Ok(Taxonomy::Movement)
        }
    } else {
        unreachable!("Set-1 units pair I with a Pauli matrix or two Chomsky-family elements")
    }
}

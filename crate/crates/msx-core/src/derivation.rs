//! The merge engine: lexical categories, self-merge, first-merge with
//! Jarret-graph selection, elsewhere-merge, labels, the Projection Theorem,
//! Agree and the grammatical-equivalence table.

use std::fmt;

use thiserror::Error;

use crate::algebra::{
    kron_list, phase_of, AlgebraError, ExactMat, GaussianScalar, Mat2, PhaseOctant,
};
use crate::groups::{gcp_lookup, token_or_display, BaseMatrix};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DerivationError {
    #[error("only nouns self-merge; {0} does not")]
    OnlyNounsSelfMerge(LexCategory),
    #[error(
        "selection violation: head {head} does not take a {complement_label}-labelled complement"
    )]
    SelectionViolation {
        head: LexCategory,
        complement_label: PhaseOctant,
    },
    #[error("first-merge complement must be a phrase, not a bare head")]
    NonPhraseComplement,
    #[error("first-merge complement must be a 2\u{d7}2 projection, not a tensor object")]
    TensorComplement,
    #[error("elsewhere-merge arguments must both be phrases, not bare heads")]
    HeadArgument,
    #[error("object has zero determinant and therefore no label")]
    ZeroDeterminant,
    #[error("no Agree: {probe} acting on {goal} does not produce \u{b1}iI")]
    NoAgree { probe: Box<Mat2>, goal: Box<Mat2> },
    #[error("matrix {0} has no postulated grammatical equivalence")]
    UnmappedMatrix(Box<Mat2>),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The four lexical categories.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LexCategory {
    N,
    V,
    A,
    P,
}

impl LexCategory {
    pub const ALL: [LexCategory; 4] = [
        LexCategory::N,
        LexCategory::V,
        LexCategory::A,
        LexCategory::P,
    ];

    /// The head matrix: N = diag(1,−i), V = diag(−1,i), A = diag(1,i),
    /// P = diag(−1,−i).
    pub fn head_matrix(self) -> Mat2 {
        let c1 = BaseMatrix::C1.matrix();
        let c2 = BaseMatrix::C2.matrix();
        match self {
            LexCategory::N => c1,
            LexCategory::V => -c1,
            LexCategory::A => c2,
            LexCategory::P => -c2,
        }
    }

    /// The lexically specified label: N → −1, V → i, A → 1, P → −i. Note this
    /// is not the determinant of the head matrix.
    pub fn lexical_label(self) -> PhaseOctant {
        match self {
            LexCategory::N => PhaseOctant::MINUS_ONE,
            LexCategory::V => PhaseOctant::I,
            LexCategory::A => PhaseOctant::ONE,
            LexCategory::P => PhaseOctant::MINUS_I,
        }
    }

    /// The phrase class this head selects as complement: P and V take NP,
    /// N and A take PP.
    pub fn selects(self) -> PhraseClass {
        match self {
            LexCategory::N | LexCategory::A => PhraseClass::PP,
            LexCategory::V | LexCategory::P => PhraseClass::NP,
        }
    }

    pub fn from_letter(s: &str) -> Option<Self> {
        match s {
            "N" => Some(LexCategory::N),
            "V" => Some(LexCategory::V),
            "A" => Some(LexCategory::A),
            "P" => Some(LexCategory::P),
            _ => None,
        }
    }
}

impl fmt::Display for LexCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LexCategory::N => "N",
            LexCategory::V => "V",
            LexCategory::A => "A",
            LexCategory::P => "P",
        };
        write!(f, "{}", s)
    }
}

/// The four phrase classes, each realized by a pair of twin matrices sharing
/// a determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhraseClass {
    NP,
    VP,
    PP,
    AP,
}

impl PhraseClass {
    pub const ALL: [PhraseClass; 4] = [
        PhraseClass::NP,
        PhraseClass::VP,
        PhraseClass::PP,
        PhraseClass::AP,
    ];

    /// The twin matrices of the class; additive inverses of each other.
    pub fn twins(self) -> (Mat2, Mat2) {
        let first = match self {
            PhraseClass::NP => BaseMatrix::Z.matrix(),
            PhraseClass::VP => BaseMatrix::C2.matrix(),
            PhraseClass::PP => BaseMatrix::C1.matrix(),
            PhraseClass::AP => BaseMatrix::I.matrix(),
        };
        let second = -&first;
        (first, second)
    }

    /// Class label: NP → −1, VP → i, PP → −i, AP → 1.
    pub fn label(self) -> PhaseOctant {
        match self {
            PhraseClass::NP => PhaseOctant::MINUS_ONE,
            PhraseClass::VP => PhaseOctant::I,
            PhraseClass::PP => PhaseOctant::MINUS_I,
            PhraseClass::AP => PhaseOctant::ONE,
        }
    }
}

impl fmt::Display for PhraseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PhraseClass::NP => "NP",
            PhraseClass::VP => "VP",
            PhraseClass::PP => "PP",
            PhraseClass::AP => "AP",
        };
        write!(f, "{}", s)
    }
}

/// Matrix content of a syntactic object: a single 2×2, or a list of Kronecker
/// factors kept unexpanded until something needs the full product.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum SynMatrix {
    Single(Mat2),
    Tensor(Vec<Mat2>),
}

impl SynMatrix {
    pub fn factors(&self) -> Vec<Mat2> {
        match self {
            SynMatrix::Single(m) => vec![m.clone()],
            SynMatrix::Tensor(fs) => fs.clone(),
        }
    }

    pub fn expand(&self) -> ExactMat {
        match self {
            SynMatrix::Single(m) => ExactMat::from_mat2(m),
            SynMatrix::Tensor(fs) => kron_list(fs),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObjectKind {
    Head,
    Phrase,
}

/// Derivation history: the operation tree that produced an object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum History {
    /// A bare lexical head.
    Lexical(LexCategory),
    /// A phrase written directly as a group element (script literals).
    Atom(String),
    SelfMerge(LexCategory),
    FirstMerge {
        head: LexCategory,
        complement: Box<History>,
    },
    ElsewhereMerge {
        specifier: Box<History>,
        target: Box<History>,
    },
}

/// A syntactic object: matrix content, determinant-phase label, head/phrase
/// status and the derivation tree that built it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynObject {
    pub matrix: SynMatrix,
    pub label: PhaseOctant,
    pub kind: ObjectKind,
    pub history: History,
}

impl SynObject {
    /// A bare head from the lexicon.
    pub fn head(cat: LexCategory) -> Self {
        let m = cat.head_matrix();
        let label = phase_of(&m.det()).expect("head determinants are units");
        SynObject {
            matrix: SynMatrix::Single(m),
            label,
            kind: ObjectKind::Head,
            history: History::Lexical(cat),
        }
    }

    /// A phrase given directly as a matrix (e.g. a script literal like `-C1`).
    pub fn phrase(m: Mat2, name: &str) -> Result<Self, DerivationError> {
        let label = label_single(&m)?;
        Ok(SynObject {
            matrix: SynMatrix::Single(m),
            label,
            kind: ObjectKind::Phrase,
            history: History::Atom(name.to_string()),
        })
    }

    fn single(&self) -> Option<&Mat2> {
        match &self.matrix {
            SynMatrix::Single(m) => Some(m),
            SynMatrix::Tensor(_) => None,
        }
    }
}

/// Self-merge starts a derivation; only nouns may do it, and the result is
/// the Pauli Z matrix projected as NP.
pub fn self_merge(cat: LexCategory) -> Result<SynObject, DerivationError> {
    if cat != LexCategory::N {
        return Err(DerivationError::OnlyNounsSelfMerge(cat));
    }
    let head = cat.head_matrix();
    let m = &head * &head;
    let label = label_single(&m)?;
    Ok(SynObject {
        matrix: SynMatrix::Single(m),
        label,
        kind: ObjectKind::Phrase,
        history: History::SelfMerge(cat),
    })
}

/// Jarret-graph selection: a head accepts a complement by its label alone.
/// Exactly four of the sixteen (head, label) combinations are grammatical:
/// P and V take −1 (NP), N and A take −i (PP).
pub fn jarret_check(head: LexCategory, complement_label: PhaseOctant) -> bool {
    complement_label == head.selects().label()
}

/// First merge: the head acts on its complement by matrix multiplication.
/// The result projects the head: its label always equals the head's lexical
/// specification (the Projection Theorem).
pub fn first_merge(
    head: LexCategory,
    complement: &SynObject,
) -> Result<SynObject, DerivationError> {
    if complement.kind != ObjectKind::Phrase {
        return Err(DerivationError::NonPhraseComplement);
    }
    let Some(cm) = complement.single() else {
        return Err(DerivationError::TensorComplement);
    };
    if !jarret_check(head, complement.label) {
        return Err(DerivationError::SelectionViolation {
            head,
            complement_label: complement.label,
        });
    }
    let product = &head.head_matrix() * cm;
    let label = label_single(&product)?;
    assert_eq!(
        label,
        head.lexical_label(),
        "Projection Theorem: {head} merged with a selected complement must project its lexical label"
    );
    Ok(SynObject {
        matrix: SynMatrix::Single(product),
        label,
        kind: ObjectKind::Phrase,
        history: History::FirstMerge {
            head,
            complement: Box::new(complement.history.clone()),
        },
    })
}

/// Elsewhere merge: specifier ⊗ target. Both arguments must be phrases; the
/// factor lists are appended, never eagerly expanded.
pub fn elsewhere_merge(
    specifier: &SynObject,
    target: &SynObject,
) -> Result<SynObject, DerivationError> {
    if specifier.kind != ObjectKind::Phrase || target.kind != ObjectKind::Phrase {
        return Err(DerivationError::HeadArgument);
    }
    let mut factors = specifier.matrix.factors();
    factors.extend(target.matrix.factors());
    let matrix = SynMatrix::Tensor(factors);
    let label = tensor_label(&matrix.factors())?;
    Ok(SynObject {
        matrix,
        label,
        kind: ObjectKind::Phrase,
        history: History::ElsewhereMerge {
            specifier: Box::new(specifier.history.clone()),
            target: Box::new(target.history.clone()),
        },
    })
}

fn label_single(m: &Mat2) -> Result<PhaseOctant, DerivationError> {
    let det = m.det();
    if det.is_zero() {
        return Err(DerivationError::ZeroDeterminant);
    }
    Ok(phase_of(&det)?)
}

/// Tensor label without expansion: det(A₁⊗…⊗Aₖ) = ∏ det(Aᵢ)^(2^(k−1)), so
/// the phase is Σ phase(det Aᵢ)·2^(k−1) on the octant circle. Keeps deeply
/// nested specifiers from forcing a 2^k × 2^k expansion.
fn tensor_label(factors: &[Mat2]) -> Result<PhaseOctant, DerivationError> {
    let mut total: u32 = 0;
    for f in factors {
        let det = f.det();
        if det.is_zero() {
            return Err(DerivationError::ZeroDeterminant);
        }
        total = (total + u32::from(phase_of(&det)?.index())) % 8;
    }
    // exponent 2^(k−1) mod 8; it vanishes from four factors on.
    let exponent = match factors.len() {
        0 => 0,
        k if k >= 4 => 0,
        k => (1u32 << (k - 1)) % 8,
    };
    Ok(PhaseOctant::new(((total * exponent) % 8) as u8))
}

/// The label of an object: the complex phase of its determinant. Factor lists
/// are expanded to the full Kronecker product first; this is the defining
/// route, which [`elsewhere_merge`] reproduces through the product formula.
pub fn label_of(m: &SynMatrix) -> Result<PhaseOctant, DerivationError> {
    match m {
        SynMatrix::Single(mat) => label_single(mat),
        SynMatrix::Tensor(_) => {
            let det = m.expand().det();
            if det.is_zero() {
                return Err(DerivationError::ZeroDeterminant);
            }
            Ok(phase_of(&det)?)
        }
    }
}

/// One row of the Projection-Theorem report.
#[derive(Debug, Clone)]
pub struct ProjectionCase {
    pub head: LexCategory,
    pub twin: Mat2,
    pub twin_token: String,
    pub product: Mat2,
    pub product_token: String,
    pub label: PhaseOctant,
    pub expected: PhaseOctant,
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct ProjectionReport {
    pub cases: Vec<ProjectionCase>,
}

impl ProjectionReport {
    pub fn all_hold(&self) -> bool {
        self.cases.iter().all(|c| c.holds)
    }
}

/// Check the Projection Theorem over all four heads, each merged with both
/// twins of its selected class: eight cases, every product carrying the
/// head's lexical label.
pub fn projection_theorem_check() -> ProjectionReport {
    let mut cases = Vec::with_capacity(8);
    for head in LexCategory::ALL {
        let class = head.selects();
        let (a, b) = class.twins();
        for twin in [a, b] {
            let product = &head.head_matrix() * &twin;
            let label = phase_of(&product.det()).expect("twin products have unit determinants");
            let expected = head.lexical_label();
            cases.push(ProjectionCase {
                head,
                twin_token: token_or_display(&twin),
                twin,
                product_token: token_or_display(&product),
                product,
                label,
                expected,
                holds: label == expected,
            });
        }
    }
    ProjectionReport { cases }
}

fn infl_head() -> Mat2 {
    // −iC₂ = diag(−i, 1)
    BaseMatrix::C2.matrix().scale(&-GaussianScalar::i())
}

/// Agree as long-distance first merge of the Infl head with a Case phrase:
/// probe must be −iC₂ and goal ±C₁, producing the transfer-inert ±iI (which
/// [`twin_unified`] rejects). Any other pairing raises `NoAgree`.
pub fn agree(probe: &Mat2, goal: &Mat2) -> Result<Mat2, DerivationError> {
    let c1 = BaseMatrix::C1.matrix();
    let valid_probe = *probe == infl_head();
    let valid_goal = *goal == c1 || *goal == -&c1;
    let product = probe * goal;
    let i_id = Mat2::identity().scale(&GaussianScalar::i());
    if !valid_probe || !valid_goal || (product != i_id && product != -&i_id) {
        return Err(DerivationError::NoAgree {
            probe: Box::new(probe.clone()),
            goal: Box::new(goal.clone()),
        });
    }
    Ok(product)
}

/// Exploratory Agree: returns the product of any probe and goal together with
/// a flag telling whether it is a valid Agree outcome (±iI).
pub fn agree_permissive(probe: &Mat2, goal: &Mat2) -> (Mat2, bool) {
    let product = probe * goal;
    let i_id = Mat2::identity().scale(&GaussianScalar::i());
    let valid = product == i_id || product == -&i_id;
    (product, valid)
}

/// True when the twin pair {M, −M} shares one characteristic polynomial,
/// which the grammar requires for a category to be operated with. Equivalent
/// to tr(M) = 0.
pub fn twin_unified(m: &Mat2) -> bool {
    m.char_poly() == (-m).char_poly()
}

/// The postulated grammatical equivalences, keyed by sign class.
/// S₁/S₂ classes are absent from the table and stay unmapped.
pub fn grammatical_equivalence(m: &Mat2) -> Result<&'static str, DerivationError> {
    let elem = gcp_lookup(m).ok_or_else(|| DerivationError::UnmappedMatrix(Box::new(m.clone())))?;
    let imaginary = elem.phase_pow % 2 == 1;
    let name = match (elem.base, imaginary) {
        (BaseMatrix::I, false) => "AP",
        (BaseMatrix::I, true) => "Elided[-1]",
        (BaseMatrix::X, false) => "NumP",
        (BaseMatrix::X, true) => "IP",
        (BaseMatrix::Y, false) => "PredP",
        (BaseMatrix::Y, true) => "DegP",
        (BaseMatrix::Z, false) => "NP",
        (BaseMatrix::Z, true) => "Elided[1]",
        (BaseMatrix::C1, false) => "PP",
        (BaseMatrix::C1, true) => "Elided[i]",
        (BaseMatrix::C2, false) => "VP",
        (BaseMatrix::C2, true) => "Elided[-i]",
        (BaseMatrix::S1 | BaseMatrix::S2, _) => {
            return Err(DerivationError::UnmappedMatrix(Box::new(m.clone())))
        }
    };
    Ok(name)
}

//! The finite matrix groups of the calculus: G₄, G₈, the Pauli group and the
//! Chomsky–Pauli group G_cp, with closure, Cayley tables and order profiles.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

use crate::algebra::{GaussianScalar, Mat2};

/// Safety bound for closure generation; any set staying within the calculus
/// closes long before this.
pub const CLOSURE_BOUND: usize = 4096;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("unknown group {0:?} (expected g4, g8, pauli or gcp)")]
    UnknownGroup(String),
    #[error("closure exceeded the safety bound of {CLOSURE_BOUND} elements")]
    ClosureBoundExceeded,
    #[error("set is not a group: {0:?}")]
    NotAGroup(Vec<GroupDefect>),
    #[error("matrix {0} is outside the 32-token alphabet")]
    OutsideAlphabet(Box<Mat2>),
}

/// Why a set of matrices fails to be a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupDefect {
    MissingIdentity,
    NotClosed { left: Box<Mat2>, right: Box<Mat2> },
    MissingInverse { element: Box<Mat2> },
}

/// One of the eight base matrices; every element of G_cp is a quarter-phase
/// multiple of exactly one of these.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BaseMatrix {
    I,
    X,
    Y,
    Z,
    C1,
    C2,
    S1,
    S2,
}

impl BaseMatrix {
    pub const ALL: [BaseMatrix; 8] = [
        BaseMatrix::I,
        BaseMatrix::X,
        BaseMatrix::Y,
        BaseMatrix::Z,
        BaseMatrix::C1,
        BaseMatrix::C2,
        BaseMatrix::S1,
        BaseMatrix::S2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BaseMatrix::I => "I",
            BaseMatrix::X => "X",
            BaseMatrix::Y => "Y",
            BaseMatrix::Z => "Z",
            BaseMatrix::C1 => "C1",
            BaseMatrix::C2 => "C2",
            BaseMatrix::S1 => "S1",
            BaseMatrix::S2 => "S2",
        }
    }

    pub fn matrix(self) -> Mat2 {
        let one = GaussianScalar::one;
        let i = GaussianScalar::i;
        match self {
            BaseMatrix::I => Mat2::diag(one(), one()),
            BaseMatrix::X => Mat2::antidiag(one(), one()),
            BaseMatrix::Y => Mat2::antidiag(-i(), i()),
            BaseMatrix::Z => Mat2::diag(one(), -one()),
            BaseMatrix::C1 => Mat2::diag(one(), -i()),
            BaseMatrix::C2 => Mat2::diag(one(), i()),
            BaseMatrix::S1 => Mat2::antidiag(one(), -i()),
            BaseMatrix::S2 => Mat2::antidiag(one(), i()),
        }
    }
}

/// An element of G_cp: a base matrix times `i^phase_pow`, `phase_pow ∈ 0..4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcpElem {
    pub token: String,
    pub phase_pow: u8,
    pub base: BaseMatrix,
    pub matrix: Mat2,
}

impl GcpElem {
    /// Canonical position in the 32-element ordering: all `+` elements, then
    /// `i·`, then `−`, then `−i·`, bases in `I X Y Z C1 C2 S1 S2` order.
    pub fn ordinal(&self) -> usize {
        self.phase_pow as usize * 8 + self.base as usize
    }
}

fn token_name(phase_pow: u8, base: BaseMatrix) -> String {
    let prefix = match phase_pow {
        0 => "",
        1 => "i",
        2 => "-",
        3 => "-i",
        _ => unreachable!(),
    };
    format!("{}{}", prefix, base.name())
}

fn phase_scalar(phase_pow: u8) -> GaussianScalar {
    match phase_pow {
        0 => GaussianScalar::one(),
        1 => GaussianScalar::i(),
        2 => -GaussianScalar::one(),
        3 => -GaussianScalar::i(),
        _ => unreachable!(),
    }
}

/// The 32 elements of the Chomsky–Pauli group in canonical token order.
pub fn gcp_elements() -> &'static [GcpElem] {
    static ELEMS: OnceLock<Vec<GcpElem>> = OnceLock::new();
    ELEMS.get_or_init(|| {
        let mut out = Vec::with_capacity(32);
        for phase_pow in 0..4u8 {
            for base in BaseMatrix::ALL {
                out.push(GcpElem {
                    token: token_name(phase_pow, base),
                    phase_pow,
                    base,
                    matrix: base.matrix().scale(&phase_scalar(phase_pow)),
                });
            }
        }
        out
    })
}

/// Find the G_cp element equal to `m`, if any.
pub fn gcp_lookup(m: &Mat2) -> Option<&'static GcpElem> {
    gcp_elements().iter().find(|e| e.matrix == *m)
}

/// Token of a G_cp matrix, or its entry display when outside the alphabet.
pub fn token_or_display(m: &Mat2) -> String {
    match gcp_lookup(m) {
        Some(e) => e.token.clone(),
        None => m.to_string(),
    }
}

/// Parse a token like `C1`, `-Z`, `iS2`, `-iI`.
pub fn parse_token(tok: &str) -> Option<&'static GcpElem> {
    gcp_elements().iter().find(|e| e.token == tok)
}

/// The four named groups of the calculus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinGroup {
    G4,
    G8,
    Pauli,
    Gcp,
}

impl BuiltinGroup {
    pub fn name(self) -> &'static str {
        match self {
            BuiltinGroup::G4 => "g4",
            BuiltinGroup::G8 => "g8",
            BuiltinGroup::Pauli => "pauli",
            BuiltinGroup::Gcp => "gcp",
        }
    }

    fn member_tokens(self) -> Vec<&'static str> {
        match self {
            BuiltinGroup::G4 => vec!["I", "Z", "C1", "C2"],
            BuiltinGroup::G8 => vec!["I", "Z", "C1", "C2", "-I", "-Z", "-C1", "-C2"],
            BuiltinGroup::Pauli => vec![
                "I", "X", "Y", "Z", "iI", "iX", "iY", "iZ", "-I", "-X", "-Y", "-Z", "-iI", "-iX",
                "-iY", "-iZ",
            ],
            BuiltinGroup::Gcp => gcp_elements().iter().map(|e| e.token.as_str()).collect(),
        }
    }

    /// A generator set whose closure is exactly this group.
    pub fn generator_tokens(self) -> &'static [&'static str] {
        match self {
            BuiltinGroup::G4 => &["C1"],
            BuiltinGroup::G8 => &["C1", "-I"],
            BuiltinGroup::Pauli => &["X", "Y", "Z"],
            BuiltinGroup::Gcp => &["C1", "S1"],
        }
    }
}

impl FromStr for BuiltinGroup {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "g4" => Ok(BuiltinGroup::G4),
            "g8" => Ok(BuiltinGroup::G8),
            "pauli" => Ok(BuiltinGroup::Pauli),
            "gcp" => Ok(BuiltinGroup::Gcp),
            other => Err(GroupError::UnknownGroup(other.to_string())),
        }
    }
}

impl fmt::Display for BuiltinGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Multiplicative order of each element, as a `order → count` map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderProfile(pub BTreeMap<usize, usize>);

impl OrderProfile {
    /// `{1:1, 2:3, 4:4}` — together with abelianness and order 8 this is a
    /// complete fingerprint of Z₂ × Z₄.
    pub fn is_z2xz4_profile(&self) -> bool {
        let expected: BTreeMap<usize, usize> = [(1, 1), (2, 3), (4, 4)].into_iter().collect();
        self.0 == expected
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }
}

impl fmt::Display for OrderProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (ord, count)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}", ord, count)?;
        }
        write!(f, "}}")
    }
}

/// A named finite set of matrices verified to be a group, with canonical
/// token names and a precomputed Cayley table of element indices.
#[derive(Debug, Clone)]
pub struct GroupTable {
    name: String,
    tokens: Vec<String>,
    elements: Vec<Mat2>,
    cayley: Vec<Vec<usize>>,
}

impl GroupTable {
    /// Verify `elements` is a group under matrix multiplication, order it
    /// canonically and build the Cayley table. Every element must carry one
    /// of the 32 G_cp token names.
    pub fn from_elements(name: &str, elements: Vec<Mat2>) -> Result<Self, GroupError> {
        let defects = group_defects(&elements);
        if !defects.is_empty() {
            return Err(GroupError::NotAGroup(defects));
        }
        let mut named = Vec::with_capacity(elements.len());
        for m in elements {
            let elem =
                gcp_lookup(&m).ok_or_else(|| GroupError::OutsideAlphabet(Box::new(m.clone())))?;
            named.push((elem.ordinal(), elem.token.clone(), m));
        }
        named.sort_by_key(|(ord, _, _)| *ord);
        named.dedup_by(|a, b| a.0 == b.0);
        let tokens: Vec<String> = named.iter().map(|(_, t, _)| t.clone()).collect();
        let elements: Vec<Mat2> = named.into_iter().map(|(_, _, m)| m).collect();
        let n = elements.len();
        let mut cayley = vec![vec![0usize; n]; n];
        for (r, a) in elements.iter().enumerate() {
            for (c, b) in elements.iter().enumerate() {
                let product = a * b;
                cayley[r][c] = elements
                    .iter()
                    .position(|m| *m == product)
                    .expect("closure was verified");
            }
        }
        Ok(Self {
            name: name.to_string(),
            tokens,
            elements,
            cayley,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Mat2] {
        &self.elements
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn contains(&self, m: &Mat2) -> bool {
        self.elements.iter().any(|e| e == m)
    }

    pub fn is_subgroup_of(&self, other: &GroupTable) -> bool {
        self.elements.iter().all(|e| other.contains(e))
    }

    /// Cayley entry: index of `elements[r] · elements[c]`.
    pub fn cayley(&self, r: usize, c: usize) -> usize {
        self.cayley[r][c]
    }

    /// Product by token names.
    pub fn product_token(&self, left: &str, right: &str) -> Option<&str> {
        let r = self.tokens.iter().position(|t| t == left)?;
        let c = self.tokens.iter().position(|t| t == right)?;
        Some(&self.tokens[self.cayley[r][c]])
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|r| (r + 1..n).all(|c| self.cayley[r][c] == self.cayley[c][r]))
    }

    /// Multiplicative order of element `idx` via the Cayley table.
    pub fn element_order(&self, idx: usize) -> usize {
        let identity = self
            .elements
            .iter()
            .position(|m| *m == Mat2::identity())
            .expect("groups contain the identity");
        let mut acc = idx;
        let mut order = 1;
        while acc != identity {
            acc = self.cayley[acc][idx];
            order += 1;
            assert!(order <= self.order(), "element order exceeds group order");
        }
        order
    }

    pub fn order_profile(&self) -> OrderProfile {
        let mut map = BTreeMap::new();
        for idx in 0..self.order() {
            *map.entry(self.element_order(idx)).or_insert(0) += 1;
        }
        OrderProfile(map)
    }

    /// True iff this group is isomorphic to Z₂ × Z₄: abelian of order 8 with
    /// order profile `{1:1, 2:3, 4:4}`, which is unique among the abelian
    /// groups of order 8.
    pub fn matches_z2xz4(&self) -> bool {
        self.order() == 8 && self.is_abelian() && self.order_profile().is_z2xz4_profile()
    }
}

/// Construct one of the four named groups exactly as listed in the calculus.
pub fn builtin_group(which: BuiltinGroup) -> GroupTable {
    let elements = which
        .member_tokens()
        .into_iter()
        .map(|t| {
            parse_token(t)
                .expect("builtin tokens are valid")
                .matrix
                .clone()
        })
        .collect();
    GroupTable::from_elements(which.name(), elements).expect("builtin element sets are groups")
}

/// Closure of a generator set under matrix multiplication. Aborts with an
/// error once the closure passes [`CLOSURE_BOUND`] elements.
pub fn generate(gens: &[Mat2]) -> Result<Vec<Mat2>, GroupError> {
    assert!(!gens.is_empty(), "generator set must be nonempty");
    let mut order: Vec<Mat2> = Vec::new();
    let mut seen: BTreeSet<Mat2> = BTreeSet::new();
    for g in gens {
        if seen.insert(g.clone()) {
            order.push(g.clone());
        }
    }
    // Worklist closure: every element, once reached, multiplies against the
    // whole set (both orders), including elements discovered meanwhile.
    let mut next = 0;
    while next < order.len() {
        let f = order[next].clone();
        next += 1;
        let mut idx = 0;
        while idx < order.len() {
            let g = order[idx].clone();
            idx += 1;
            for p in [&f * &g, &g * &f] {
                if !seen.contains(&p) {
                    if order.len() >= CLOSURE_BOUND {
                        return Err(GroupError::ClosureBoundExceeded);
                    }
                    seen.insert(p.clone());
                    order.push(p);
                }
            }
        }
    }
    Ok(order)
}

/// Diagnose whether a set of matrices forms a group under multiplication.
/// Empty result means it does.
pub fn group_defects(set: &[Mat2]) -> Vec<GroupDefect> {
    let mut defects = Vec::new();
    let identity = Mat2::identity();
    if !set.contains(&identity) {
        defects.push(GroupDefect::MissingIdentity);
    }
    'outer: for a in set {
        for b in set {
            if !set.contains(&(a * b)) {
                defects.push(GroupDefect::NotClosed {
                    left: Box::new(a.clone()),
                    right: Box::new(b.clone()),
                });
                break 'outer;
            }
        }
    }
    for a in set {
        if !set.iter().any(|b| a * b == identity) {
            defects.push(GroupDefect::MissingInverse {
                element: Box::new(a.clone()),
            });
            break;
        }
    }
    defects
}

pub fn is_group(set: &[Mat2]) -> bool {
    group_defects(set).is_empty()
}

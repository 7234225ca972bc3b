//! Chain formation and everything that operates on superposed tensor states:
//! unit-matrix enumeration and classification, compression, rescaled chain
//! labels, separability filtering, interface collapse and r-chain structure.

mod chain;
mod collapse;
mod rchain;
mod state;
mod sweeps;
mod units;

pub use chain::{chain_label, compress, form_chain, ChainMode, ChainSpec, Compressed};
pub use collapse::{
    collapse_distribution, sample_collapse, CollapseDistribution, CollapseOutcome, SplitMix64,
};
pub use rchain::{r_chain_subsets, EigenvectorClass, RChainQuad, RChainReport};
pub use state::StateVector;
pub use sweeps::{
    chain_label_sweep, chain_label_sweep_seq, null_dim_sweep, null_dim_sweep_seq, ChainLabelCase,
};
pub use units::{
    classify_pair, context_taxonomy, enumerate_units, enumerate_units_seq, harmonic_class,
    Harmonic, HermitianClass, Taxonomy, UnitRecord, UnitSet,
};

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ChainError {
    #[error("state terms must have a uniform factor count: expected {expected}, got {got}")]
    NonUniformFactorCount { expected: usize, got: usize },
    #[error("state terms need at least one factor")]
    EmptyTerm,
    #[error("factor counts differ between states: {left} vs {right}")]
    StateFactorMismatch { left: usize, right: usize },
    #[error("split {split} does not bipartition {factors} factors")]
    BadSplit { split: usize, factors: usize },
    #[error("chain contexts must differ")]
    IdenticalContexts,
    #[error("matrix {0} is not a Chomsky-Pauli group element")]
    OutsideGroup(String),
    #[error("{pair} is not a unit: the sum does not have exactly one nonzero eigenvalue")]
    NotAUnit { pair: String },
    #[error("context sum {context} is not compressible")]
    NotCompressible { context: String },
    #[error("malformed chain: {0}")]
    MalformedChain(String),
    #[error("compressed eigenvalue is zero")]
    ZeroEigenvalue,
    #[error("{pair} is not a Set-1 unit")]
    NotSetOne { pair: String },
    #[error("bad distribution: {0}")]
    BadDistribution(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

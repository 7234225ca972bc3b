//! Exact-arithmetic engine for the matrix-syntax calculus.
//!
//! The crate is organized around five layers:
//!
//! * [`algebra`] — Gaussian-rational scalars with √2 factors, 2×2 matrices,
//!   Kronecker expansion, exact rank/determinant, determinant-phase labels.
//! * [`groups`] — the finite matrix groups G₄, G₈, Pauli and G_cp, with
//!   closure generation, Cayley tables and order profiles.
//! * [`derivation`] — the merge engine: self-merge, first-merge under
//!   Jarret-graph selection, elsewhere-merge, labels, Agree and the
//!   grammatical-equivalence table.
//! * [`hilbert`] — the trace inner product, Gram-matrix dimensions and the
//!   Chomsky ↔ Pauli basis changes.
//! * [`chains`] — unit-matrix enumeration and classification, chain
//!   formation, separability, compression, rescaled chain labels, interface
//!   collapse and the r-chain partition.
//!
//! All values are immutable and every operation is a pure function, so the
//! whole API is safe to drive from any number of threads. The exhaustive
//! sweeps used by verification run data-parallel under the `parallel`
//! feature (enabled by default) and fall back to sequential loops without it.
//!
//! ```
//! use msx_core::algebra::PhaseOctant;
//! use msx_core::chains::{chain_label, compress, form_chain, ChainMode, ChainSpec};
//! use msx_core::derivation::{first_merge, self_merge, LexCategory};
//! use msx_core::groups::parse_token;
//!
//! // A noun self-merges into the NP anchor, and a verb projects over it.
//! let np = self_merge(LexCategory::N)?;
//! let vp = first_merge(LexCategory::V, &np)?;
//! assert_eq!(vp.label, PhaseOctant::I);
//!
//! // The displaced nominal superposes two contexts; the chain compresses
//! // to its specifier and the context sum's single nonzero eigenvalue.
//! let m = |tok| parse_token(tok).unwrap().matrix.clone();
//! let spec = ChainSpec::new(m("Z"), m("I"), m("Z"), ChainMode::Additive)?;
//! let chain = form_chain(&spec)?;
//! assert!(chain.is_separable(1)?);
//! let compressed = compress(&chain)?;
//! assert_eq!(compressed.null_dim, 2);
//! let label = chain_label(&compressed.specifier, &compressed.eigenvalue)?;
//! assert_eq!(label, PhaseOctant::MINUS_ONE);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod algebra;
pub mod chains;
pub mod derivation;
pub mod groups;
pub mod hilbert;

mod par;

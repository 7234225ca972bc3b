//! Exhaustive verification sweeps over the unit × specifier grid. These are
//! the data-parallel inner loops of the crate: every case is independent,
//! and results come back in input order under both execution modes.

use crate::algebra::{kron, Mat2, PhaseOctant};
use crate::groups::gcp_elements;
use crate::par;

use super::chain::chain_label;
use super::units::{enumerate_units, UnitRecord, UnitSet};

/// One (specifier, unit) case of the chain-label sweep.
#[derive(Debug, Clone)]
pub struct ChainLabelCase {
    pub specifier: String,
    pub pair: String,
    pub set: UnitSet,
    pub label: PhaseOctant,
    pub specifier_label: PhaseOctant,
    /// label = ±specifier label (index distance 0 or 4).
    pub matches_specifier_up_to_sign: bool,
}

struct LabelCase {
    specifier: Mat2,
    token: String,
    specifier_label: PhaseOctant,
    set: UnitSet,
    pair: String,
    eigenvalue: crate::algebra::GaussianScalar,
}

fn label_cases(units: &[UnitRecord]) -> Vec<LabelCase> {
    let mut cases = Vec::new();
    for unit in units {
        for elem in gcp_elements() {
            let specifier_label =
                crate::algebra::phase_of(&elem.matrix.det()).expect("group dets are units");
            cases.push(LabelCase {
                specifier: elem.matrix.clone(),
                token: elem.token.clone(),
                specifier_label,
                set: unit.set,
                pair: unit.pair_label(),
                eigenvalue: unit.eigenvalue.clone(),
            });
        }
    }
    cases
}

fn eval_label_case(case: &LabelCase) -> ChainLabelCase {
    let label =
        chain_label(&case.specifier, &case.eigenvalue).expect("units have nonzero eigenvalues");
    let diff = (8 + label.index() - case.specifier_label.index()) % 8;
    ChainLabelCase {
        specifier: case.token.clone(),
        pair: case.pair.clone(),
        set: case.set,
        label,
        specifier_label: case.specifier_label,
        matches_specifier_up_to_sign: diff == 0 || diff == 4,
    }
}

/// Rescaled chain labels for all 96 units × 32 specifiers (3072 cases).
pub fn chain_label_sweep() -> Vec<ChainLabelCase> {
    let cases = label_cases(&enumerate_units());
    par::map_collect(&cases, eval_label_case)
}

/// Sequential twin of [`chain_label_sweep`].
pub fn chain_label_sweep_seq() -> Vec<ChainLabelCase> {
    let cases = label_cases(&enumerate_units());
    par::map_collect_seq(&cases, eval_label_case)
}

/// Null dimensions of the expanded α⊗U operator for every (specifier, unit)
/// combination. Compression is justified exactly when these are all 2.
pub fn null_dim_sweep() -> Vec<usize> {
    let cases = null_dim_cases();
    par::map_collect(&cases, |(alpha, u)| kron(alpha, u).null_dim())
}

/// Sequential twin of [`null_dim_sweep`].
pub fn null_dim_sweep_seq() -> Vec<usize> {
    let cases = null_dim_cases();
    par::map_collect_seq(&cases, |(alpha, u)| kron(alpha, u).null_dim())
}

fn null_dim_cases() -> Vec<(Mat2, Mat2)> {
    let units = enumerate_units();
    let mut cases = Vec::with_capacity(96 * 32);
    for unit in &units {
        for elem in gcp_elements() {
            cases.push((elem.matrix.clone(), unit.sum.clone()));
        }
    }
    cases
}

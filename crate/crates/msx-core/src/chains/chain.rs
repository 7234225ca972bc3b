//! Chain formation, compression back to 2×2 data, and the rescaled label.

use crate::algebra::{kron, phase_of, GaussianScalar, Mat2, PhaseOctant};
use crate::groups::{gcp_lookup, token_or_display};

use super::state::StateVector;
use super::ChainError;

/// Whether the two occurrence contexts superpose with a plus or a minus sign
/// (A-chains are additive; the subtractive mode models A′-chains and nothing
/// more).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainMode {
    Additive,
    Subtractive,
}

/// Specifier α plus the two occurrence contexts K and Λ, all group elements.
#[derive(Debug, Clone)]
pub struct ChainSpec {
    pub specifier: Mat2,
    pub context_k: Mat2,
    pub context_l: Mat2,
    pub mode: ChainMode,
}

impl ChainSpec {
    pub fn new(
        specifier: Mat2,
        context_k: Mat2,
        context_l: Mat2,
        mode: ChainMode,
    ) -> Result<Self, ChainError> {
        for m in [&specifier, &context_k, &context_l] {
            if gcp_lookup(m).is_none() {
                return Err(ChainError::OutsideGroup(m.to_string()));
            }
        }
        Ok(Self {
            specifier,
            context_k,
            context_l,
            mode,
        })
    }
}

/// Form the chain (1/√2)·(α̂⊗K̂ ± α̂⊗Λ̂), hats dividing by √2 — the norm of
/// every group element. Coefficients stay exact: each term carries 2^(−3/2).
pub fn form_chain(spec: &ChainSpec) -> Result<StateVector, ChainError> {
    if spec.context_k == spec.context_l {
        return Err(ChainError::IdenticalContexts);
    }
    // 1/√2 · 1/√2 · 1/√2 = (1/4)·√2
    let coeff = &(&GaussianScalar::inv_sqrt2() * &GaussianScalar::inv_sqrt2())
        * &GaussianScalar::inv_sqrt2();
    let second = match spec.mode {
        ChainMode::Additive => coeff.clone(),
        ChainMode::Subtractive => -&coeff,
    };
    StateVector::new(vec![
        (coeff, vec![spec.specifier.clone(), spec.context_k.clone()]),
        (second, vec![spec.specifier.clone(), spec.context_l.clone()]),
    ])
}

/// A chain compressed to 2×2 data: the specifier, the raw context sum U, its
/// unique nonzero eigenvalue, and the null dimension of the expanded α⊗U.
#[derive(Debug, Clone)]
pub struct Compressed {
    pub specifier: Mat2,
    pub context_sum: Mat2,
    pub eigenvalue: GaussianScalar,
    pub null_dim: usize,
}

/// Compress a state of the α⊗U shape. Every term must have two factors and
/// share the specifier; the contexts are summed with their coefficient
/// ratios, recovering K ± Λ for chains built by [`form_chain`]. Fails unless
/// the summed context has exactly one nonzero eigenvalue.
pub fn compress(state: &StateVector) -> Result<Compressed, ChainError> {
    let terms = state.terms();
    if terms.is_empty() {
        return Err(ChainError::MalformedChain(
            "cannot compress the zero state".to_string(),
        ));
    }
    if state.factor_count() != 2 {
        return Err(ChainError::MalformedChain(format!(
            "compression needs two-factor terms, found {}",
            state.factor_count()
        )));
    }
    let specifier = terms[0].1[0].clone();
    if terms.iter().any(|(_, fs)| fs[0] != specifier) {
        return Err(ChainError::MalformedChain(
            "terms do not share a specifier".to_string(),
        ));
    }
    // α ⊗ Σ cᵢKᵢ, with the common prefactor divided out so the context sum
    // is the bare K ± Λ.
    let lead = &terms[0].0;
    let mut context_sum = Mat2::zero();
    for (coeff, factors) in terms {
        let ratio = coeff
            .div(lead)
            .expect("canonical terms have nonzero coefficients");
        context_sum = &context_sum + &factors[1].scale(&ratio);
    }
    let eigenvalue = context_sum.trace();
    if context_sum.is_zero() || !context_sum.det().is_zero() || eigenvalue.is_zero() {
        return Err(ChainError::NotCompressible {
            context: token_or_display(&context_sum),
        });
    }
    let null_dim = kron(&specifier, &context_sum).null_dim();
    Ok(Compressed {
        specifier,
        context_sum,
        eigenvalue,
        null_dim,
    })
}

/// The rescaled chain label: the phase of det(α)·u_c²/|u_c²|, i.e. the
/// specifier label times the squared phase of the compressed eigenvalue.
/// Always lands back in {±1, ±i} for group-element specifiers.
pub fn chain_label(alpha: &Mat2, u_c: &GaussianScalar) -> Result<PhaseOctant, ChainError> {
    if u_c.is_zero() {
        return Err(ChainError::ZeroEigenvalue);
    }
    let det = alpha.det();
    if det.is_zero() {
        return Err(ChainError::ZeroEigenvalue);
    }
    let spec_phase = phase_of(&det)?;
    let context_phase = phase_of(u_c)?;
    Ok(spec_phase * context_phase.squared())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::frac;
    use crate::groups::parse_token;

    fn mat(tok: &str) -> Mat2 {
        parse_token(tok).unwrap().matrix.clone()
    }

    fn spec(alpha: &str, k: &str, l: &str, mode: ChainMode) -> ChainSpec {
        ChainSpec::new(mat(alpha), mat(k), mat(l), mode).unwrap()
    }

    #[test]
    fn chain_shape_and_normalization() {
        let chain = form_chain(&spec("Z", "I", "Z", ChainMode::Additive)).unwrap();
        assert_eq!(chain.terms().len(), 2);
        let (c0, _) = &chain.terms()[0];
        let (c1, _) = &chain.terms()[1];
        assert_eq!(c0, c1);
        // Orthogonal contexts give a unit-norm chain.
        assert_eq!(chain.norm_sq(), frac(1, 1));
    }

    #[test]
    fn subtractive_mode_flips_second_sign() {
        let chain = form_chain(&spec("Z", "iX", "iI", ChainMode::Subtractive)).unwrap();
        let (c0, _) = &chain.terms()[0];
        let (c1, _) = &chain.terms()[1];
        assert_eq!(*c1, -c0);
    }

    #[test]
    fn raising_contexts_flip_sign_with_mode() {
        // The iX/iI context pair of subject raising: additive superposition
        // compresses to eigenvalue 2i (phase i), subtractive to −2i.
        use crate::algebra::phase_of;
        let additive = form_chain(&spec("Z", "iX", "iI", ChainMode::Additive)).unwrap();
        let c = compress(&additive).unwrap();
        assert_eq!(c.eigenvalue, GaussianScalar::from_ints(0, 2));
        assert_eq!(phase_of(&c.eigenvalue).unwrap(), PhaseOctant::I);
        let subtractive = form_chain(&spec("Z", "iX", "iI", ChainMode::Subtractive)).unwrap();
        let c = compress(&subtractive).unwrap();
        assert_eq!(c.eigenvalue, GaussianScalar::from_ints(0, -2));
        assert_eq!(phase_of(&c.eigenvalue).unwrap(), PhaseOctant::MINUS_I);
        // Either way the chain label flips against the specifier: the
        // context label is (±i)² = −1.
        assert_eq!(
            chain_label(&mat("Z"), &GaussianScalar::from_ints(0, 2)).unwrap(),
            PhaseOctant::ONE
        );
        assert_eq!(
            chain_label(&mat("Z"), &GaussianScalar::from_ints(0, -2)).unwrap(),
            PhaseOctant::ONE
        );
    }

    #[test]
    fn identical_contexts_rejected() {
        assert!(matches!(
            form_chain(&spec("Z", "I", "I", ChainMode::Additive)),
            Err(ChainError::IdenticalContexts)
        ));
    }

    #[test]
    fn chain_spec_requires_group_elements() {
        let outside = Mat2::diag(GaussianScalar::from_int(2), GaussianScalar::one());
        assert!(matches!(
            ChainSpec::new(outside, mat("I"), mat("Z"), ChainMode::Additive),
            Err(ChainError::OutsideGroup(_))
        ));
    }

    #[test]
    fn compress_recovers_raw_context_sum() {
        let chain = form_chain(&spec("Z", "I", "Z", ChainMode::Additive)).unwrap();
        let c = compress(&chain).unwrap();
        assert_eq!(c.specifier, mat("Z"));
        assert_eq!(c.context_sum, &mat("I") + &mat("Z"));
        assert_eq!(c.eigenvalue, GaussianScalar::from_int(2));
        assert_eq!(c.null_dim, 2);
    }

    #[test]
    fn compress_imaginary_contexts() {
        let chain = form_chain(&spec("X", "iI", "iZ", ChainMode::Additive)).unwrap();
        let c = compress(&chain).unwrap();
        assert_eq!(c.eigenvalue, GaussianScalar::from_ints(0, 2));
        assert_eq!(c.null_dim, 2);
    }

    #[test]
    fn non_unit_context_is_not_compressible() {
        // I + C₁ has determinant 2(1−i) ≠ 0.
        let chain = form_chain(&spec("Z", "I", "C1", ChainMode::Additive)).unwrap();
        assert!(matches!(
            compress(&chain),
            Err(ChainError::NotCompressible { .. })
        ));
    }

    #[test]
    fn single_term_state_compresses_directly() {
        let state =
            StateVector::product(GaussianScalar::one(), vec![mat("Z"), &mat("I") + &mat("X")])
                .unwrap();
        let c = compress(&state).unwrap();
        assert_eq!(c.eigenvalue, GaussianScalar::from_int(2));
        assert_eq!(c.null_dim, 2);
    }

    #[test]
    fn label_rescaling_examples() {
        // (Z, 2): (−1)·4/4 → −1, the harmonic case.
        assert_eq!(
            chain_label(&mat("Z"), &GaussianScalar::from_int(2)).unwrap(),
            PhaseOctant::MINUS_ONE
        );
        // (Z, 2i): (−1)·(−4)/4 → 1.
        assert_eq!(
            chain_label(&mat("Z"), &GaussianScalar::from_ints(0, 2)).unwrap(),
            PhaseOctant::ONE
        );
        // (C₁, 1+i): (−i)·(2i)/2 → 1.
        assert_eq!(
            chain_label(&mat("C1"), &GaussianScalar::from_ints(1, 1)).unwrap(),
            PhaseOctant::ONE
        );
    }

    #[test]
    fn zero_eigenvalue_is_rejected() {
        assert!(matches!(
            chain_label(&mat("Z"), &GaussianScalar::zero()),
            Err(ChainError::ZeroEigenvalue)
        ));
    }
}

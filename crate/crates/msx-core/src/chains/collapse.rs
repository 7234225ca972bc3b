//! Interface collapse: exact Born-style probabilities and a seeded
//! Monte-Carlo realization.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{GaussianScalar, Mat2, Rat};
use crate::groups::{gcp_lookup, token_or_display};

use super::state::StateVector;
use super::ChainError;

/// One collapse target: the context, its raw squared overlap with the chain,
/// and the renormalized probability.
#[derive(Debug, Clone)]
pub struct CollapseOutcome {
    pub context: Mat2,
    pub context_token: String,
    pub raw: Rat,
    pub renormalized: Rat,
}

#[derive(Debug, Clone)]
pub struct CollapseDistribution {
    pub outcomes: Vec<CollapseOutcome>,
}

impl CollapseDistribution {
    pub fn probabilities(&self) -> Vec<Rat> {
        self.outcomes
            .iter()
            .map(|o| o.renormalized.clone())
            .collect()
    }
}

/// Project a chain onto its occurrence contexts. The raw overlaps
/// |⟨α̂⊗K̂|ψ⟩|² are exact; the renormalized pair always sums to 1. For
/// orthogonal contexts the raw pair is already (1/2, 1/2).
pub fn collapse_distribution(chain: &StateVector) -> Result<CollapseDistribution, ChainError> {
    let terms = chain.terms();
    if terms.is_empty() || terms.len() > 2 || chain.factor_count() != 2 {
        return Err(ChainError::MalformedChain(
            "collapse needs the one- or two-term \u{3b1}\u{2297}K shape".to_string(),
        ));
    }
    let specifier = terms[0].1[0].clone();
    if terms.iter().any(|(_, fs)| fs[0] != specifier) {
        return Err(ChainError::MalformedChain(
            "terms do not share a specifier".to_string(),
        ));
    }
    for (_, fs) in terms {
        for m in fs {
            if gcp_lookup(m).is_none() {
                return Err(ChainError::OutsideGroup(m.to_string()));
            }
        }
    }
    let half = GaussianScalar::new(crate::algebra::frac(1, 2), Rat::zero());
    let mut raws = Vec::with_capacity(terms.len());
    for (_, fs) in terms {
        let context = fs[1].clone();
        // α̂⊗K̂ = (1/2)·α⊗K for group elements (each factor has norm √2).
        let projector =
            StateVector::product(half.clone(), vec![specifier.clone(), context.clone()])
                .expect("two factors");
        let overlap = projector.inner(chain)?;
        raws.push((context, overlap.abs_sq()));
    }
    let total: Rat = raws.iter().map(|(_, r)| r.clone()).sum();
    if total.is_zero() {
        return Err(ChainError::MalformedChain(
            "chain has no overlap with its own contexts".to_string(),
        ));
    }
    let outcomes = raws
        .into_iter()
        .map(|(context, raw)| CollapseOutcome {
            context_token: token_or_display(&context),
            context,
            renormalized: &raw / &total,
            raw,
        })
        .collect();
    Ok(CollapseDistribution { outcomes })
}

/// SplitMix64: a tiny deterministic generator, pinned here so that seeded
/// runs reproduce bit-exactly forever.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

/// Draw `n` outcomes from an exact distribution. Probabilities must be
/// nonnegative and sum to exactly 1. Deterministic for a given seed; the
/// draw comparisons are exact rational arithmetic, so no outcome is ever
/// misassigned by rounding.
pub fn sample_collapse(probabilities: &[Rat], n: u64, seed: u64) -> Result<Vec<u64>, ChainError> {
    if probabilities.is_empty() {
        return Err(ChainError::BadDistribution(
            "no outcomes to sample".to_string(),
        ));
    }
    if probabilities.iter().any(|p| p.is_negative()) {
        return Err(ChainError::BadDistribution(
            "negative probability".to_string(),
        ));
    }
    let total: Rat = probabilities.iter().cloned().sum();
    if !total.is_one() {
        return Err(ChainError::BadDistribution(format!(
            "probabilities sum to {total}, not 1"
        )));
    }
    // A draw x (as the exact rational x/2^64) lands in outcome k when
    // x/2^64 < cum_k, i.e. x·den < num·2^64 = q·den + r. Precomputing (q, r>0)
    // per outcome turns every draw into plain integer comparisons while
    // keeping the boundary decision exact.
    let two_pow_64 = BigInt::one() << 64u32;
    let mut acc = Rat::zero();
    let mut thresholds: Vec<(u128, bool)> = Vec::with_capacity(probabilities.len());
    for p in probabilities {
        acc += p;
        let scaled = acc.numer() * &two_pow_64;
        let q = &scaled / acc.denom();
        let r = &scaled % acc.denom();
        let q = u128::try_from(q.to_biguint().expect("cumulative is nonnegative"))
            .expect("cumulative probabilities stay within [0, 1]");
        thresholds.push((q, !r.is_zero()));
    }
    let mut rng = SplitMix64::new(seed);
    let mut counts = vec![0u64; probabilities.len()];
    for _ in 0..n {
        let x = rng.next_u64() as u128;
        let idx = thresholds
            .iter()
            .position(|&(q, open)| x < q || (x == q && open))
            .unwrap_or(probabilities.len() - 1);
        counts[idx] += 1;
    }
    Ok(counts)
}

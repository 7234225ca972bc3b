//! The r-chain structure: distinct unit sums grouped by their rank-1
//! eigenvector, each group splitting into quads {U, iU, −U, −iU} whose
//! eigenvalues realize λ₀·{1, −1, i, −i} — a representation of Z₄.

use std::collections::BTreeMap;

use crate::algebra::{GaussianScalar, Mat2};

use super::units::enumerate_units;

/// A scalar orbit {U, iU, −U, −iU} of one unit sum. `eigenvalues` follows
/// `members` positionally.
#[derive(Debug, Clone)]
pub struct RChainQuad {
    pub members: Vec<Mat2>,
    pub eigenvalues: Vec<GaussianScalar>,
    /// The orbit's base eigenvalue λ₀ (of the canonical representative).
    pub base_eigenvalue: GaussianScalar,
    /// Whether the eigenvalue multiset is exactly λ₀·{1, i, −1, −i}.
    pub z4_structure: bool,
}

/// All distinct unit sums sharing one projective eigenvector.
#[derive(Debug, Clone)]
pub struct EigenvectorClass {
    /// Canonical generator of the rank-1 column space: (1, x) or (0, 1).
    pub eigenvector: (GaussianScalar, GaussianScalar),
    pub members: Vec<Mat2>,
    pub quads: Vec<RChainQuad>,
}

#[derive(Debug, Clone)]
pub struct RChainReport {
    /// Number of distinct U matrices among the 96 pair sums.
    pub distinct_count: usize,
    pub classes: Vec<EigenvectorClass>,
    /// Structural violations, if any; empty for the calculus.
    pub violations: Vec<String>,
}

impl RChainReport {
    pub fn quad_count(&self) -> usize {
        self.classes.iter().map(|c| c.quads.len()).sum()
    }
}

/// Canonical eigenvector of a rank-1 matrix: the first nonzero column,
/// scaled so its first nonzero component is 1.
fn rank1_eigenvector(m: &Mat2) -> (GaussianScalar, GaussianScalar) {
    let col = if !m.entry(0, 0).is_zero() || !m.entry(1, 0).is_zero() {
        (m.entry(0, 0).clone(), m.entry(1, 0).clone())
    } else {
        (m.entry(0, 1).clone(), m.entry(1, 1).clone())
    };
    if !col.0.is_zero() {
        let inv = GaussianScalar::one().div(&col.0).expect("nonzero");
        (GaussianScalar::one(), &col.1 * &inv)
    } else {
        (GaussianScalar::zero(), GaussianScalar::one())
    }
}

/// Partition the distinct unit sums by eigenvector, then split each class
/// into Z₄ scalar orbits and verify the eigenvalue structure of every orbit.
pub fn r_chain_subsets() -> RChainReport {
    let units = enumerate_units();
    let mut distinct: Vec<Mat2> = Vec::new();
    for u in &units {
        if !distinct.contains(&u.sum) {
            distinct.push(u.sum.clone());
        }
    }
    distinct.sort();
    let distinct_count = distinct.len();

    let mut by_eigenvector: BTreeMap<(GaussianScalar, GaussianScalar), Vec<Mat2>> = BTreeMap::new();
    for m in &distinct {
        by_eigenvector
            .entry(rank1_eigenvector(m))
            .or_default()
            .push(m.clone());
    }

    let mut violations = Vec::new();
    let mut classes = Vec::new();
    for (eigenvector, members) in by_eigenvector {
        // Quads are orbits under scalar multiplication by i; key each member
        // by the smallest matrix in its orbit.
        let i_unit = GaussianScalar::i();
        let mut by_orbit: BTreeMap<Mat2, Vec<Mat2>> = BTreeMap::new();
        for m in &members {
            let orbit = [m.clone(), m.scale(&i_unit), -m, m.scale(&-&i_unit)];
            let key = orbit.iter().min().expect("orbit is nonempty").clone();
            by_orbit.entry(key).or_default().push(m.clone());
        }
        let mut quads = Vec::new();
        for (key, orbit_members) in by_orbit {
            let eigenvalues: Vec<GaussianScalar> =
                orbit_members.iter().map(|m| m.trace()).collect();
            let base_eigenvalue = key.trace();
            let mut expected: Vec<GaussianScalar> = (0..4)
                .map(|k| {
                    let mut v = base_eigenvalue.clone();
                    for _ in 0..k {
                        v = &v * &i_unit;
                    }
                    v
                })
                .collect();
            expected.sort();
            let mut got = eigenvalues.clone();
            got.sort();
            let z4_structure = orbit_members.len() == 4 && got == expected;
            if !z4_structure {
                violations.push(format!(
                    "orbit of {key} has {} members without \u{3bb}\u{2080}\u{b7}{{1,i,\u{2212}1,\u{2212}i}} eigenvalues",
                    orbit_members.len()
                ));
            }
            quads.push(RChainQuad {
                members: orbit_members,
                eigenvalues,
                base_eigenvalue,
                z4_structure,
            });
        }
        classes.push(EigenvectorClass {
            eigenvector,
            members,
            quads,
        });
    }

    // Every distinct sum must land in exactly one quad.
    let total: usize = classes
        .iter()
        .map(|c| c.quads.iter().map(|q| q.members.len()).sum::<usize>())
        .sum();
    if total != distinct_count {
        violations.push(format!(
            "quads cover {total} matrices, expected {distinct_count}"
        ));
    }

    RChainReport {
        distinct_count,
        classes,
        violations,
    }
}

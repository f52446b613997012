//! Structure-constant sweep for the power-sum generators: for every pair of
//! bidegrees the normalized bracket of power sums is again a power sum with
//! an integer coefficient,
//! `B(tau_(j1,k1), tau_(j2,k2)) = (j1 k2 - j2 k1) tau_(j1+j2, k1+k2)`.

use super::BracketStructure;
use crate::algebra::VariableSet;
use crate::rat::Rat;
use crate::symmetry::power_sum_multisym;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct TauPairResult {
    pub left: (usize, usize),
    pub right: (usize, usize),
    pub coefficient: i64,
    pub pass: bool,
    pub residual_terms: usize,
}

#[derive(Debug, Serialize)]
pub struct TauReport {
    pub n: usize,
    pub cap: usize,
    pub pairs: Vec<TauPairResult>,
    pub all_pass: bool,
}

/// Checks the identity exactly for all unordered pairs of bidegrees with
/// `1 <= j + k <= cap`.
pub fn verify_tau_theorem(n: usize, cap: usize) -> TauReport {
    let structure = BracketStructure::diagonal(VariableSet::new(n));
    let mut degrees: Vec<(usize, usize)> = vec![];
    for total in 1..=cap {
        for j in 0..=total {
            degrees.push((j, total - j));
        }
    }
    let mut pairs = vec![];
    for (a, &(j1, k1)) in degrees.iter().enumerate() {
        for &(j2, k2) in &degrees[a..] {
            let lhs = structure.bracket(
                &power_sum_multisym(n, j1, k1),
                &power_sum_multisym(n, j2, k2),
            );
            let coefficient = (j1 * k2) as i64 - (j2 * k1) as i64;
            let rhs = power_sum_multisym(n, j1 + j2, k1 + k2)
                .scale(&Rat::from_int(coefficient));
            let residual = lhs.sub(&rhs);
            pairs.push(TauPairResult {
                left: (j1, k1),
                right: (j2, k2),
                coefficient,
                pass: residual.is_zero(),
                residual_terms: residual.num_terms(),
            });
        }
    }
    let all_pass = pairs.iter().all(|p| p.pass);
    TauReport {
        n,
        cap,
        pairs,
        all_pass,
    }
}

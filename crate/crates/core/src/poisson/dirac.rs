//! The Dirac bracket for the second-class determinant constraint pair.

use super::{BracketStructure, PoissonError};
use crate::algebra::{LaurentPoly, QuotientIdeal};
use crate::rat::Rat;

/// A second-class constraint pair: a holomorphic constraint, its conjugate,
/// and the quotient ideal of the constraint surface. Construction verifies
/// the second-class condition: the bracket of the two constraints must
/// reduce to a nonzero constant modulo the ideal.
#[derive(Clone, Debug)]
pub struct ConstraintPair {
    holo: LaurentPoly,
    anti: LaurentPoly,
    ideal: QuotientIdeal,
    /// `B(holo, anti)` reduced to its constant value.
    pairing: Rat,
}

impl ConstraintPair {
    pub fn new(
        structure: &BracketStructure,
        holo: LaurentPoly,
        anti: LaurentPoly,
        ideal: QuotientIdeal,
    ) -> Result<Self, PoissonError> {
        let reduced = ideal.reduce(&structure.bracket(&holo, &anti));
        if reduced.is_zero() || !reduced.is_monomial() {
            return Err(PoissonError::ConstraintDegenerate);
        }
        let (mono, coef) = reduced.leading().unwrap();
        if !mono.is_unit() {
            return Err(PoissonError::ConstraintDegenerate);
        }
        let pairing = coef.clone();
        Ok(ConstraintPair {
            holo,
            anti,
            ideal,
            pairing,
        })
    }

    pub fn holo(&self) -> &LaurentPoly {
        &self.holo
    }

    pub fn anti(&self) -> &LaurentPoly {
        &self.anti
    }

    pub fn ideal(&self) -> &QuotientIdeal {
        &self.ideal
    }

    /// The constant value of `B(holo, anti)` on the constraint surface.
    pub fn pairing(&self) -> &Rat {
        &self.pairing
    }
}

/// The Dirac bracket
/// `B(f,g) - B(f,ca) B(ch,g) / B(ch,ca) - B(f,ch) B(ca,g) / B(ca,ch)`,
/// with every quotient taken after reduction modulo the constraint ideal
/// (both denominators are then nonzero constants). The result is returned
/// in normal form; it is well defined on the quotient ring because the
/// bracket annihilates the constraints and the correction terms obey the
/// Leibniz rule.
pub fn dirac_bracket(
    f: &LaurentPoly,
    g: &LaurentPoly,
    structure: &BracketStructure,
    constraints: &ConstraintPair,
) -> LaurentPoly {
    let ideal = &constraints.ideal;
    let base = structure.bracket(f, g);
    let f_anti = structure.bracket(f, &constraints.anti);
    let holo_g = structure.bracket(&constraints.holo, g);
    let f_holo = structure.bracket(f, &constraints.holo);
    let anti_g = structure.bracket(&constraints.anti, g);
    // B(ch, ca) reduces to `pairing`, B(ca, ch) to its negative.
    let term2 = ideal
        .reduce(&f_anti.mul(&holo_g))
        .scale(&constraints.pairing.recip());
    let term3 = ideal
        .reduce(&f_holo.mul(&anti_g))
        .scale(&(-constraints.pairing.clone()).recip());
    ideal.reduce(&base.sub(&term2).sub(&term3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{RewriteRule, VariableSet};
    use crate::symmetry::{elementary_multisym, power_sum_multisym};

    fn su_setup(n: usize) -> (BracketStructure, ConstraintPair) {
        let vars = VariableSet::new(n);
        let arity = vars.arity();
        let structure = BracketStructure::diagonal(vars);
        let ideal = QuotientIdeal::new(
            arity,
            vec![
                RewriteRule::BlockProductOne {
                    block: (0..n).collect(),
                },
                RewriteRule::BlockProductOne {
                    block: (n..2 * n).collect(),
                },
            ],
        )
        .unwrap();
        let holo = elementary_multisym(n, n, 0).unwrap();
        let anti = elementary_multisym(n, 0, n).unwrap();
        let pair = ConstraintPair::new(&structure, holo, anti, ideal).unwrap();
        (structure, pair)
    }

    #[test]
    fn constraint_pairing_is_rank() {
        for n in 2..=3 {
            let (_, pair) = su_setup(n);
            assert_eq!(pair.pairing().to_string(), n.to_string());
        }
    }

    #[test]
    fn constraints_are_central() {
        let (structure, pair) = su_setup(2);
        for f in [
            power_sum_multisym(2, 1, 0),
            power_sum_multisym(2, 1, 1),
            power_sum_multisym(2, 0, 2),
        ] {
            let d = dirac_bracket(pair.holo(), &f, &structure, &pair);
            assert!(d.is_zero(), "constraint not central against {f:?}");
            let d2 = dirac_bracket(&f, pair.anti(), &structure, &pair);
            assert!(d2.is_zero());
        }
    }

    #[test]
    fn holomorphic_pair_brackets_to_zero() {
        let (structure, pair) = su_setup(2);
        let s1 = elementary_multisym(2, 1, 0).unwrap();
        let s2 = elementary_multisym(2, 2, 0).unwrap();
        assert!(dirac_bracket(&s1, &s2, &structure, &pair).is_zero());
    }

    #[test]
    fn one_variable_parametrization_oracle() {
        // Reduce the two-variable Dirac bracket of (sigma_1, sigma_1-bar)
        // through z2 = z1^{-1}, zb2 = zb1^{-1} and compare with the direct
        // one-variable bracket of (z + z^{-1}, zb + zb^{-1}): the two routes
        // are proportional with ratio 1/2.
        let (structure, pair) = su_setup(2);
        let s1 = elementary_multisym(2, 1, 0).unwrap();
        let s1b = elementary_multisym(2, 0, 1).unwrap();
        let d = dirac_bracket(&s1, &s1b, &structure, &pair);
        // Substitute the one-variable chart (z, zb).
        let images = vec![
            LaurentPoly::var(2, 0),
            LaurentPoly::var_pow(2, 0, -1),
            LaurentPoly::var(2, 1),
            LaurentPoly::var_pow(2, 1, -1),
        ];
        let d_chart = d.substitute(&images).unwrap();
        let one_var = BracketStructure::diagonal(VariableSet::new(1));
        let zc = LaurentPoly::var(2, 0).add(&LaurentPoly::var_pow(2, 0, -1));
        let zcb = LaurentPoly::var(2, 1).add(&LaurentPoly::var_pow(2, 1, -1));
        let direct = one_var.bracket(&zc, &zcb);
        assert_eq!(d_chart.scale(&Rat::from_int(2)), direct);
    }

    #[test]
    fn dirac_antisymmetry_and_jacobi_mod_ideal() {
        let (structure, pair) = su_setup(2);
        let f = power_sum_multisym(2, 1, 1);
        let g = power_sum_multisym(2, 2, 0);
        let h = power_sum_multisym(2, 0, 1);
        let anti = dirac_bracket(&f, &g, &structure, &pair)
            .add(&dirac_bracket(&g, &f, &structure, &pair));
        assert!(pair.ideal().reduces_to_zero(&anti));
        let cyc = dirac_bracket(&f, &dirac_bracket(&g, &h, &structure, &pair), &structure, &pair)
            .add(&dirac_bracket(
                &g,
                &dirac_bracket(&h, &f, &structure, &pair),
                &structure,
                &pair,
            ))
            .add(&dirac_bracket(
                &h,
                &dirac_bracket(&f, &g, &structure, &pair),
                &structure,
                &pair,
            ));
        assert!(pair.ideal().reduces_to_zero(&cyc));
    }
}

//! Exact division in the Laurent ring.

use super::{AlgebraError, LaurentPoly};
use crate::rat::Rat;

/// Minimal monomial shift that clears every negative exponent of `p`.
fn negative_clearing_shift(p: &LaurentPoly) -> Vec<i32> {
    let mut shift = vec![0i32; p.arity()];
    for (m, _) in p.terms() {
        for (v, &e) in m.0.iter().enumerate() {
            if e < 0 {
                shift[v] = shift[v].max(-e);
            }
        }
    }
    shift
}

/// Exact quotient `num / den`, or an `InexactDivision` error carrying the
/// division remainder as a witness.
///
/// Negative exponents are cleared from numerator and denominator by minimal
/// unit-monomial shifts before ordinary leading-term division runs, and the
/// net shift is restored on the quotient. Divisibility is therefore decided
/// on the cleared polynomial forms: `(z^2 - z^-2)/(z - z^-1)` succeeds while
/// `z1 z2 / z3` reports a remainder.
pub fn exact_divide(num: &LaurentPoly, den: &LaurentPoly) -> Result<LaurentPoly, AlgebraError> {
    assert_eq!(num.arity(), den.arity(), "arity mismatch");
    assert!(!den.is_zero(), "division by the zero polynomial");
    let arity = num.arity();
    if num.is_zero() {
        return Ok(LaurentPoly::zero(arity));
    }

    let shift_n = negative_clearing_shift(num);
    let shift_d = negative_clearing_shift(den);
    let n = num.mul_monomial(&shift_n, &Rat::one());
    let d = den.mul_monomial(&shift_d, &Rat::one());

    let (dm, dc) = d.leading().expect("nonzero divisor");
    let dm = dm.clone();
    let dc = dc.clone();

    let mut rem = n;
    let mut quo = LaurentPoly::zero(arity);
    while let Some((rm, rc)) = rem.leading() {
        let exps: Vec<i32> = rm.0.iter().zip(&dm.0).map(|(&a, &b)| a - b).collect();
        if exps.iter().any(|&e| e < 0) {
            // Leading term not divisible: den cannot divide num exactly.
            return Err(AlgebraError::InexactDivision {
                terms: rem.num_terms(),
                remainder: Box::new(rem),
            });
        }
        let t = LaurentPoly::monomial(exps, rc / &dc);
        rem = rem.sub(&t.mul(&d));
        quo = quo.add(&t);
    }

    // Undo the clearing shifts: quotient picks up shift_d - shift_n.
    let back: Vec<i32> = shift_d
        .iter()
        .zip(&shift_n)
        .map(|(&d, &n)| d - n)
        .collect();
    Ok(quo.mul_monomial(&back, &Rat::one()))
}

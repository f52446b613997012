//! Quotient ideals with confluent monomial normal forms.
//!
//! Two rule shapes are supported, which together cover every coordinate ring
//! in the toolkit:
//!
//! * `BlockProductOne`: the product of a block of variables equals 1
//!   (determinant-one torus constraints). The normal form subtracts the
//!   block-minimum exponent from each block slot, so every monomial class
//!   gets the unique representative whose block minimum is zero.
//! * `PowerToMonomial`: a fixed power of one variable rewrites to a monomial
//!   in other variables (double-cover relations). The normal form reduces
//!   the subject exponent into `0..power` by Euclidean division.
//!
//! Rules are validated for confluence at construction: each variable may be
//! the subject of at most one rule and no rule image may involve a subject
//! variable. Reduction is then a per-monomial rewrite and is idempotent.

use super::{AlgebraError, LaurentPoly};
use crate::rat::Rat;

#[derive(Clone, Debug)]
pub enum RewriteRule {
    /// `prod_{v in block} x_v = 1`.
    BlockProductOne { block: Vec<usize> },
    /// `x_var^power = image` (image given as an exponent vector with a zero
    /// in the `var` slot).
    PowerToMonomial {
        var: usize,
        power: i32,
        image: Vec<i32>,
    },
}

/// A quotient ideal together with its confluent rewrite system.
#[derive(Clone, Debug)]
pub struct QuotientIdeal {
    arity: usize,
    rules: Vec<RewriteRule>,
    relations: Vec<LaurentPoly>,
}

impl QuotientIdeal {
    /// The trivial ideal (reduction is the identity).
    pub fn trivial(arity: usize) -> Self {
        QuotientIdeal {
            arity,
            rules: vec![],
            relations: vec![],
        }
    }

    pub fn new(arity: usize, rules: Vec<RewriteRule>) -> Result<Self, AlgebraError> {
        let mut subjects: Vec<usize> = vec![];
        for r in &rules {
            match r {
                RewriteRule::BlockProductOne { block } => {
                    if block.is_empty() || block.iter().any(|&v| v >= arity) {
                        return Err(AlgebraError::NonConfluentIdeal(
                            "block out of range".into(),
                        ));
                    }
                    subjects.extend(block.iter().copied());
                }
                RewriteRule::PowerToMonomial { var, power, image } => {
                    if *var >= arity || image.len() != arity {
                        return Err(AlgebraError::NonConfluentIdeal(
                            "rule variable out of range".into(),
                        ));
                    }
                    if *power < 2 {
                        return Err(AlgebraError::NonConfluentIdeal(
                            "rewrite power must be at least 2".into(),
                        ));
                    }
                    if image[*var] != 0 {
                        return Err(AlgebraError::NonConfluentIdeal(
                            "rule image may not involve its own subject".into(),
                        ));
                    }
                    subjects.push(*var);
                }
            }
        }
        // No variable may be rewritten by two rules, and no image may touch
        // a subject variable; this makes the combined system confluent.
        let mut sorted = subjects.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != subjects.len() {
            return Err(AlgebraError::NonConfluentIdeal(
                "a variable is the subject of two rules".into(),
            ));
        }
        for r in &rules {
            if let RewriteRule::PowerToMonomial { image, .. } = r {
                for &s in &subjects {
                    if image[s] != 0 {
                        return Err(AlgebraError::NonConfluentIdeal(
                            "a rule image involves a rewritten variable".into(),
                        ));
                    }
                }
            }
        }
        let relations = rules
            .iter()
            .map(|r| match r {
                RewriteRule::BlockProductOne { block } => {
                    let mut exps = vec![0i32; arity];
                    for &v in block {
                        exps[v] = 1;
                    }
                    LaurentPoly::monomial(exps, Rat::one()).sub(&LaurentPoly::one(arity))
                }
                RewriteRule::PowerToMonomial { var, power, image } => {
                    let mut exps = vec![0i32; arity];
                    exps[*var] = *power;
                    LaurentPoly::monomial(exps, Rat::one())
                        .sub(&LaurentPoly::monomial(image.clone(), Rat::one()))
                }
            })
            .collect();
        Ok(QuotientIdeal {
            arity,
            rules,
            relations,
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_trivial(&self) -> bool {
        self.rules.is_empty()
    }

    /// The defining relation polynomials, one per rule.
    pub fn relations(&self) -> &[LaurentPoly] {
        &self.relations
    }

    fn reduce_exps(&self, exps: &mut [i32]) {
        for r in &self.rules {
            match r {
                RewriteRule::BlockProductOne { block } => {
                    let m = block.iter().map(|&v| exps[v]).min().unwrap();
                    if m != 0 {
                        for &v in block {
                            exps[v] -= m;
                        }
                    }
                }
                RewriteRule::PowerToMonomial { var, power, image } => {
                    let e = exps[*var];
                    let q = e.div_euclid(*power);
                    if q != 0 {
                        exps[*var] = e.rem_euclid(*power);
                        for (slot, &im) in image.iter().enumerate() {
                            exps[slot] += q * im;
                        }
                    }
                }
            }
        }
    }

    /// Unique normal form of `p` modulo the ideal.
    pub fn reduce(&self, p: &LaurentPoly) -> LaurentPoly {
        if self.rules.is_empty() {
            return p.clone();
        }
        assert_eq!(p.arity(), self.arity, "arity mismatch");
        let mut out = LaurentPoly::zero(self.arity);
        for (m, c) in p.terms() {
            let mut exps = m.0.clone();
            self.reduce_exps(&mut exps);
            out = out.add(&LaurentPoly::monomial(exps, c.clone()));
        }
        out
    }

    /// True when `p` reduces to the zero normal form.
    pub fn reduces_to_zero(&self, p: &LaurentPoly) -> bool {
        self.reduce(p).is_zero()
    }

    /// Equality test in the quotient ring.
    pub fn equal_mod(&self, a: &LaurentPoly, b: &LaurentPoly) -> bool {
        self.reduces_to_zero(&a.sub(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::exact_divide;

    fn spin_ideal_n2() -> QuotientIdeal {
        // Variables (z1, z2, z, zb1, zb2, zb); z^2 = z1 z2, zb^2 = zb1 zb2.
        QuotientIdeal::new(
            6,
            vec![
                RewriteRule::PowerToMonomial {
                    var: 2,
                    power: 2,
                    image: vec![1, 1, 0, 0, 0, 0],
                },
                RewriteRule::PowerToMonomial {
                    var: 5,
                    power: 2,
                    image: vec![0, 0, 0, 1, 1, 0],
                },
            ],
        )
        .unwrap()
    }

    #[test]
    fn spin_square_rewrites() {
        let ideal = spin_ideal_n2();
        let z_sq = LaurentPoly::var_pow(6, 2, 2);
        let s2 = LaurentPoly::var(6, 0).mul(&LaurentPoly::var(6, 1));
        assert_eq!(ideal.reduce(&z_sq), s2);
        // z itself is already normal.
        let z = LaurentPoly::var(6, 2);
        assert_eq!(ideal.reduce(&z), z);
        // z^-1 normalizes into z-degree 1: z^-1 = z / (z1 z2).
        let zinv = LaurentPoly::var_pow(6, 2, -1);
        let red = ideal.reduce(&zinv);
        assert_eq!(red.coeff(&[-1, -1, 1, 0, 0, 0]).to_string(), "1");
        assert_eq!(red.num_terms(), 1);
    }

    #[test]
    fn determinant_one_block() {
        // Variables (z1, z2, zb1, zb2); sigma_2 = z1 z2 = 1.
        let ideal = QuotientIdeal::new(
            4,
            vec![RewriteRule::BlockProductOne { block: vec![0, 1] }],
        )
        .unwrap();
        let s2 = LaurentPoly::var(4, 0).mul(&LaurentPoly::var(4, 1));
        assert_eq!(ideal.reduce(&s2), LaurentPoly::one(4));
        // Reduction is idempotent.
        let p = LaurentPoly::monomial(vec![3, 1, 0, 0], Rat::one());
        let once = ideal.reduce(&p);
        assert_eq!(ideal.reduce(&once), once);
    }

    #[test]
    fn difference_lies_in_ideal() {
        let ideal = QuotientIdeal::new(
            4,
            vec![RewriteRule::BlockProductOne { block: vec![0, 1] }],
        )
        .unwrap();
        let p = LaurentPoly::monomial(vec![2, 2, 1, 0], Rat::new(3, 2))
            .add(&LaurentPoly::monomial(vec![-1, 2, 0, 0], Rat::one()));
        let diff = p.sub(&ideal.reduce(&p));
        // p - reduce(p) must be divisible by sigma_2 - 1.
        let rel = &ideal.relations()[0];
        let q = exact_divide(&diff, rel).unwrap();
        assert_eq!(q.mul(rel), diff);
    }

    #[test]
    fn nonconfluent_shapes_rejected() {
        // Same subject twice.
        let bad = QuotientIdeal::new(
            2,
            vec![
                RewriteRule::PowerToMonomial {
                    var: 0,
                    power: 2,
                    image: vec![0, 1],
                },
                RewriteRule::PowerToMonomial {
                    var: 0,
                    power: 3,
                    image: vec![0, 2],
                },
            ],
        );
        assert!(matches!(bad, Err(AlgebraError::NonConfluentIdeal(_))));
        // Image touching another rule's subject.
        let bad2 = QuotientIdeal::new(
            3,
            vec![
                RewriteRule::PowerToMonomial {
                    var: 0,
                    power: 2,
                    image: vec![0, 1, 0],
                },
                RewriteRule::PowerToMonomial {
                    var: 1,
                    power: 2,
                    image: vec![1, 0, 1],
                },
            ],
        );
        assert!(matches!(bad2, Err(AlgebraError::NonConfluentIdeal(_))));
    }
}

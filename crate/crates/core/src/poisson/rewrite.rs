//! Expressing invariants as polynomials in a chosen generator system by
//! exact linear solving.

use crate::algebra::{LaurentPoly, Mono, QuotientIdeal};
use crate::linalg::{solve_exact, RatMatrix, RowSpan};
use crate::rat::Rat;
use crate::symmetry::FiniteGroup;
use std::collections::HashMap;

/// A named invariant generator.
#[derive(Clone, Debug)]
pub struct NamedPoly {
    pub name: String,
    pub poly: LaurentPoly,
}

impl NamedPoly {
    pub fn new(name: impl Into<String>, poly: LaurentPoly) -> Self {
        NamedPoly {
            name: name.into(),
            poly,
        }
    }
}

/// A polynomial expression in generator names. `expr` has one slot per
/// generator, with nonnegative exponents.
#[derive(Clone, Debug)]
pub struct GeneratorExpr {
    pub names: Vec<String>,
    pub expr: LaurentPoly,
}

impl GeneratorExpr {
    /// Substitutes the generator definitions back in and reduces.
    pub fn expand(&self, gens: &[NamedPoly], ideal: &QuotientIdeal) -> LaurentPoly {
        assert_eq!(gens.len(), self.names.len());
        let images: Vec<LaurentPoly> = gens.iter().map(|g| g.poly.clone()).collect();
        ideal.reduce(&self.expr.substitute(&images).expect("nonnegative powers"))
    }

    pub fn render(&self) -> String {
        let names = self.names.clone();
        self.expr.render(&|i| names[i].clone())
    }

    /// JSON form: a list of `{coef, monomial: {name: exponent}}` records in
    /// canonical order.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .expr
            .terms()
            .map(|(m, c)| {
                let mono: serde_json::Map<String, serde_json::Value> = m
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e != 0)
                    .map(|(i, &e)| (self.names[i].clone(), serde_json::json!(e)))
                    .collect();
                serde_json::json!({ "coef": c.to_string(), "monomial": mono })
            })
            .collect();
        serde_json::Value::Array(terms)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RewriteError {
    #[error("polynomial is not invariant under the group")]
    NotInvariant,
    #[error("no representation within the degree cap; residual has {terms} term(s)")]
    NoRepresentationWithinCap {
        residual: Box<LaurentPoly>,
        terms: usize,
    },
}

fn monomial_tuples(weights: &[i64], cap: i64) -> Vec<Vec<u32>> {
    fn rec(weights: &[i64], cap: i64, idx: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if idx == weights.len() {
            out.push(cur.clone());
            return;
        }
        let w = weights[idx];
        let mut e = 0u32;
        loop {
            if (e as i64) * w > cap {
                break;
            }
            cur.push(e);
            rec(weights, cap - (e as i64) * w, idx + 1, cur, out);
            cur.pop();
            e += 1;
        }
    }
    let mut out = vec![];
    rec(weights, cap, 0, &mut vec![], &mut out);
    out
}

/// Writes `p` as a polynomial in the named generators, exactly.
///
/// Candidate generator monomials are all products whose expanded total
/// degree stays at or below `degree_cap`. Columns are ordered by (weighted
/// degree, lexicographic exponents) and the solver pivots left to right, so
/// the representation returned is the deterministic one supported on the
/// earliest independent monomials. The result is re-expanded and compared
/// against `p` before being returned.
pub fn rewrite_in_generators(
    p: &LaurentPoly,
    gens: &[NamedPoly],
    degree_cap: i64,
    group: Option<&FiniteGroup>,
    ideal: &QuotientIdeal,
) -> Result<GeneratorExpr, RewriteError> {
    if let Some(g) = group {
        if !g.is_invariant_mod(p, ideal) {
            return Err(RewriteError::NotInvariant);
        }
    }
    let target = ideal.reduce(p);
    let arity = target.arity();

    let reduced_gens: Vec<LaurentPoly> = gens.iter().map(|g| ideal.reduce(&g.poly)).collect();
    let weights: Vec<i64> = reduced_gens
        .iter()
        .map(|g| g.total_degree().max(1))
        .collect();

    let mut tuples = monomial_tuples(&weights, degree_cap);
    tuples.sort_by_key(|t| {
        let w: i64 = t
            .iter()
            .zip(&weights)
            .map(|(&e, &wt)| e as i64 * wt)
            .sum();
        (w, t.clone())
    });

    // In the graded case (trivial ideal, bidegree-homogeneous generators)
    // only monomials matching one of the target's bidegrees can contribute.
    let h = arity / 2;
    let graded = ideal.is_trivial()
        && reduced_gens
            .iter()
            .all(|g| g.bidegree_components(h).len() <= 1);
    if graded {
        let target_bidegs: Vec<(i64, i64)> =
            target.bidegree_components(h).keys().copied().collect();
        let gen_bidegs: Vec<(i64, i64)> = reduced_gens
            .iter()
            .map(|g| {
                g.bidegree_components(h)
                    .keys()
                    .next()
                    .copied()
                    .unwrap_or((0, 0))
            })
            .collect();
        tuples.retain(|t| {
            let bd = t.iter().zip(&gen_bidegs).fold((0i64, 0i64), |acc, (&e, bd)| {
                (acc.0 + e as i64 * bd.0, acc.1 + e as i64 * bd.1)
            });
            target_bidegs.contains(&bd)
        });
    }

    // Expand candidates and index the union of supports.
    let mut support: HashMap<Mono, usize> = HashMap::new();
    let index_of = |m: &Mono, support: &mut HashMap<Mono, usize>| -> usize {
        let next = support.len();
        *support.entry(m.clone()).or_insert(next)
    };
    let mut columns: Vec<LaurentPoly> = vec![];
    for t in &tuples {
        let mut prod = LaurentPoly::one(arity);
        for (g, &e) in reduced_gens.iter().zip(t) {
            for _ in 0..e {
                prod = ideal.reduce(&prod.mul(g));
            }
        }
        for (m, _) in prod.terms() {
            index_of(m, &mut support);
        }
        columns.push(prod);
    }
    for (m, _) in target.terms() {
        index_of(m, &mut support);
    }

    let rows = support.len();
    let mut a = RatMatrix::zeros(rows, columns.len());
    for (c, col) in columns.iter().enumerate() {
        for (m, coef) in col.terms() {
            a.set(support[m], c, coef.clone());
        }
    }
    let mut b = vec![Rat::zero(); rows];
    for (m, coef) in target.terms() {
        b[support[m]] = coef.clone();
    }

    let Some(x) = solve_exact(&a, &b) else {
        // Residual witness: the part of the target outside the span of the
        // candidate expansions.
        let mut span = RowSpan::new();
        for col in &columns {
            let mut v = vec![Rat::zero(); rows];
            for (m, coef) in col.terms() {
                v[support[m]] = coef.clone();
            }
            span.insert(v);
        }
        let reduced = span.residual(b);
        let inv_support: HashMap<usize, Mono> =
            support.iter().map(|(m, &i)| (i, m.clone())).collect();
        let mut residual = LaurentPoly::zero(arity);
        for (i, coef) in reduced.iter().enumerate() {
            if !coef.is_zero() {
                residual = residual.add(&LaurentPoly::monomial(
                    inv_support[&i].0.clone(),
                    coef.clone(),
                ));
            }
        }
        let terms = residual.num_terms();
        return Err(RewriteError::NoRepresentationWithinCap {
            residual: Box::new(residual),
            terms,
        });
    };

    let k = gens.len();
    let mut expr = LaurentPoly::zero(k);
    for (t, coef) in tuples.iter().zip(&x) {
        if coef.is_zero() {
            continue;
        }
        let exps: Vec<i32> = t.iter().map(|&e| e as i32).collect();
        expr = expr.add(&LaurentPoly::monomial(exps, coef.clone()));
    }
    let result = GeneratorExpr {
        names: gens.iter().map(|g| g.name.clone()).collect(),
        expr,
    };
    // Round-trip check: expansion must reproduce the reduced target.
    debug_assert_eq!(result.expand(gens, ideal), target);
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::VariableSet;
    use crate::symmetry::{build_weyl_group, elementary_multisym, power_sum_multisym, Family};

    fn trivial(n: usize) -> QuotientIdeal {
        QuotientIdeal::trivial(VariableSet::new(n).arity())
    }

    fn tau_gens(n: usize, cap: usize) -> Vec<NamedPoly> {
        let mut out = vec![];
        for total in 1..=cap {
            for j in 0..=total {
                out.push(NamedPoly::new(
                    format!("tau_{}_{}", j, total - j),
                    power_sum_multisym(n, j, total - j),
                ));
            }
        }
        out
    }

    #[test]
    fn sigma_11_in_power_sums() {
        let n = 2;
        let gens = tau_gens(n, 2);
        let group = build_weyl_group(Family::A, n).unwrap();
        let p = elementary_multisym(n, 1, 1).unwrap();
        let expr =
            rewrite_in_generators(&p, &gens, 2, Some(&group), &trivial(n)).unwrap();
        // sigma_(1,1) = tau_(1,0) tau_(0,1) - tau_(1,1).
        assert_eq!(expr.expand(&gens, &trivial(n)), p);
        assert_eq!(expr.render(), "tau_0_1*tau_1_0 - tau_1_1");
    }

    #[test]
    fn tau_21_expressible_below_cap() {
        let n = 2;
        let gens = tau_gens(n, 2);
        let group = build_weyl_group(Family::A, n).unwrap();
        let p = power_sum_multisym(n, 2, 1);
        let expr =
            rewrite_in_generators(&p, &gens, 3, Some(&group), &trivial(n)).unwrap();
        assert_eq!(expr.expand(&gens, &trivial(n)), p);
    }

    #[test]
    fn identity_rewrite() {
        let n = 2;
        let gens = vec![NamedPoly::new(
            "sigma_1",
            elementary_multisym(n, 1, 0).unwrap(),
        )];
        let p = elementary_multisym(n, 1, 0).unwrap();
        let expr = rewrite_in_generators(&p, &gens, 4, None, &trivial(n)).unwrap();
        assert_eq!(expr.render(), "sigma_1");
    }

    #[test]
    fn non_invariant_rejected() {
        let n = 2;
        let gens = tau_gens(n, 2);
        let group = build_weyl_group(Family::A, n).unwrap();
        let z1 = LaurentPoly::var(4, 0);
        match rewrite_in_generators(&z1, &gens, 2, Some(&group), &trivial(n)) {
            Err(RewriteError::NotInvariant) => {}
            other => panic!("expected NotInvariant, got {other:?}"),
        }
    }

    #[test]
    fn cap_failure_reports_residual() {
        // sigma_2 cannot be written in sigma_1 alone.
        let n = 2;
        let gens = vec![NamedPoly::new(
            "sigma_1",
            elementary_multisym(n, 1, 0).unwrap(),
        )];
        let p = elementary_multisym(n, 2, 0).unwrap();
        match rewrite_in_generators(&p, &gens, 4, None, &trivial(n)) {
            Err(RewriteError::NoRepresentationWithinCap { terms, .. }) => {
                assert!(terms > 0)
            }
            other => panic!("expected cap failure, got {other:?}"),
        }
    }
}

//! Poisson-generation closure: close a seed list of invariants under
//! products and brackets up to a total-degree cap and compare, bidegree by
//! bidegree, against the full invariant subspace computed by independent
//! orbit-sum basis enumeration.

use super::{dirac_bracket, BracketStructure, ConstraintPair};
use crate::algebra::{LaurentPoly, QuotientIdeal};
use crate::linalg::RowSpan;
use crate::rat::Rat;
use crate::symmetry::FiniteGroup;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// Which bracket drives the closure.
pub enum ClosureBracket<'a> {
    Plain(&'a BracketStructure),
    Dirac(&'a BracketStructure, &'a ConstraintPair),
}

impl ClosureBracket<'_> {
    fn apply(&self, f: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
        match self {
            ClosureBracket::Plain(s) => s.bracket(f, g),
            ClosureBracket::Dirac(s, c) => dirac_bracket(f, g, s, c),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BidegreeDim {
    pub bidegree: (i64, i64),
    pub reached: usize,
    pub full: usize,
}

#[derive(Debug, Serialize)]
pub struct ClosureReport {
    pub degree_cap: i64,
    pub rows: Vec<BidegreeDim>,
    pub full_everywhere: bool,
}

/// Enumerates the normal-form monomials of a given bidegree: nonnegative
/// exponent vectors whose holomorphic block sums to `a` and conjugate block
/// to `b`, kept only when they are their own reduction.
fn normal_monomials(ideal: &QuotientIdeal, h: usize, a: i64, b: i64) -> Vec<Vec<i32>> {
    fn compositions(total: i64, slots: usize) -> Vec<Vec<i32>> {
        if slots == 0 {
            return if total == 0 { vec![vec![]] } else { vec![] };
        }
        let mut out = vec![];
        for first in 0..=total {
            for mut rest in compositions(total - first, slots - 1) {
                let mut v = vec![first as i32];
                v.append(&mut rest);
                out.push(v);
            }
        }
        out
    }
    let arity = ideal.arity();
    let mut out = vec![];
    for za in compositions(a, h) {
        for zb in compositions(b, arity - h) {
            let mut exps = za.clone();
            exps.extend_from_slice(&zb);
            let m = LaurentPoly::monomial(exps.clone(), Rat::one());
            if ideal.reduce(&m) == m {
                out.push(exps);
            }
        }
    }
    out
}

/// Dimension of the invariant subspace in one bidegree: the number of
/// group orbits on the normal-form monomial basis.
fn invariant_dimension(group: &FiniteGroup, monomials: &[Vec<i32>]) -> usize {
    let mut reps: BTreeSet<Vec<i32>> = BTreeSet::new();
    for m in monomials {
        reps.insert(group.orbit_representative(m));
    }
    reps.len()
}

struct BidegreeSpace {
    monomials: Vec<Vec<i32>>,
    index: HashMap<Vec<i32>, usize>,
    span: RowSpan,
    full: usize,
}

/// Closes `seeds` under products and the chosen bracket up to the cap.
/// Elements are reduced to ideal normal form and split into
/// bidegree-homogeneous components (the group action preserves normal-form
/// bidegrees, so components of invariants stay invariant). The report lists
/// reached versus full dimension for every bidegree with `a + b <= cap`.
pub fn poisson_generation_closure(
    seeds: &[LaurentPoly],
    group: &FiniteGroup,
    bracket: ClosureBracket<'_>,
    ideal: &QuotientIdeal,
    degree_cap: i64,
) -> ClosureReport {
    let h = group.vars().holo_count();
    let mut spaces: BTreeMap<(i64, i64), BidegreeSpace> = BTreeMap::new();
    for a in 0..=degree_cap {
        for b in 0..=(degree_cap - a) {
            let monomials = normal_monomials(ideal, h, a, b);
            if monomials.is_empty() {
                continue;
            }
            let full = invariant_dimension(group, &monomials);
            let index = monomials
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, m)| (m, i))
                .collect();
            spaces.insert(
                (a, b),
                BidegreeSpace {
                    monomials,
                    index,
                    span: RowSpan::new(),
                    full,
                },
            );
        }
    }

    // Pool of bidegree-homogeneous invariants discovered so far.
    let mut pool: Vec<((i64, i64), LaurentPoly)> = vec![];
    let absorb = |p: &LaurentPoly,
                      spaces: &mut BTreeMap<(i64, i64), BidegreeSpace>,
                      pool: &mut Vec<((i64, i64), LaurentPoly)>| {
        let reduced = ideal.reduce(p);
        for (bideg, comp) in reduced.bidegree_components(h) {
            let Some(space) = spaces.get_mut(&bideg) else {
                continue;
            };
            let mut v = vec![Rat::zero(); space.monomials.len()];
            let mut in_basis = true;
            for (m, c) in comp.terms() {
                match space.index.get(&m.0) {
                    Some(&i) => v[i] = c.clone(),
                    None => {
                        in_basis = false;
                        break;
                    }
                }
            }
            if in_basis && space.span.insert(v) {
                pool.push((bideg, comp.clone()));
            }
        }
    };

    // The closure is a unital subalgebra: constants are always present.
    absorb(
        &LaurentPoly::one(ideal.arity()),
        &mut spaces,
        &mut pool,
    );
    for s in seeds {
        absorb(s, &mut spaces, &mut pool);
    }

    // Pairwise products and brackets; the pool grows as new directions
    // appear, and every pair is visited once.
    let mut i = 0;
    while i < pool.len() {
        let mut j = 0;
        while j <= i {
            let (da, pa) = pool[i].clone();
            let (db, pb) = pool[j].clone();
            let total = da.0 + da.1 + db.0 + db.1;
            if total <= degree_cap {
                let prod = pa.mul(&pb);
                absorb(&prod, &mut spaces, &mut pool);
                let brk = bracket.apply(&pa, &pb);
                absorb(&brk, &mut spaces, &mut pool);
            }
            j += 1;
        }
        i += 1;
    }

    let rows: Vec<BidegreeDim> = spaces
        .iter()
        .map(|(&bidegree, s)| BidegreeDim {
            bidegree,
            reached: s.span.dim(),
            full: s.full,
        })
        .collect();
    let full_everywhere = rows.iter().all(|r| r.reached == r.full);
    ClosureReport {
        degree_cap,
        rows,
        full_everywhere,
    }
}

/// Convenience: the monomial basis size and invariant dimension per
/// bidegree, without running a closure.
pub fn invariant_dims(
    group: &FiniteGroup,
    ideal: &QuotientIdeal,
    degree_cap: i64,
) -> Vec<((i64, i64), usize)> {
    let h = group.vars().holo_count();
    let mut out = vec![];
    for a in 0..=degree_cap {
        for b in 0..=(degree_cap - a) {
            let monomials = normal_monomials(ideal, h, a, b);
            if !monomials.is_empty() {
                out.push(((a, b), invariant_dimension(group, &monomials)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::VariableSet;
    use crate::symmetry::{build_weyl_group, elementary_multisym, Family};

    #[test]
    fn u2_seeds_reach_full_dimension_at_cap_4() {
        let n = 2;
        let group = build_weyl_group(Family::A, n).unwrap();
        let structure = BracketStructure::diagonal(VariableSet::new(n));
        let ideal = QuotientIdeal::trivial(2 * n);
        let seeds = vec![
            elementary_multisym(n, 1, 0).unwrap(),
            elementary_multisym(n, 2, 0).unwrap(),
            elementary_multisym(n, 0, 1).unwrap(),
            elementary_multisym(n, 0, 2).unwrap(),
        ];
        let report = poisson_generation_closure(
            &seeds,
            &group,
            ClosureBracket::Plain(&structure),
            &ideal,
            4,
        );
        assert!(report.full_everywhere, "{:?}", report.rows);
    }

    #[test]
    fn holomorphic_seeds_alone_miss_sigma2() {
        let n = 2;
        let group = build_weyl_group(Family::A, n).unwrap();
        let structure = BracketStructure::diagonal(VariableSet::new(n));
        let ideal = QuotientIdeal::trivial(2 * n);
        let seeds = vec![
            elementary_multisym(n, 1, 0).unwrap(),
            elementary_multisym(n, 0, 1).unwrap(),
        ];
        let report = poisson_generation_closure(
            &seeds,
            &group,
            ClosureBracket::Plain(&structure),
            &ideal,
            2,
        );
        let row20 = report
            .rows
            .iter()
            .find(|r| r.bidegree == (2, 0))
            .unwrap();
        assert_eq!(row20.full, 2);
        assert_eq!(row20.reached, 1, "sigma_2 must be missing");
    }

    #[test]
    fn trivial_seed_spans_constants_only() {
        let n = 2;
        let group = build_weyl_group(Family::A, n).unwrap();
        let structure = BracketStructure::diagonal(VariableSet::new(n));
        let ideal = QuotientIdeal::trivial(2 * n);
        let seeds = vec![LaurentPoly::one(2 * n)];
        let report = poisson_generation_closure(
            &seeds,
            &group,
            ClosureBracket::Plain(&structure),
            &ideal,
            2,
        );
        for row in &report.rows {
            let expect = usize::from(row.bidegree == (0, 0));
            assert_eq!(row.reached, expect, "bidegree {:?}", row.bidegree);
        }
    }
}

//! Finite groups acting on torus variables through signed monomial
//! substitutions, with orbit sums and invariance tests.

mod multisym;
mod weyl;

pub use multisym::{elementary_multisym, elementary_symmetric, power_sum_multisym};
pub use weyl::{build_weyl_group, deck_transformation, Family};

use crate::algebra::{LaurentPoly, VariableSet};
use crate::rat::Rat;
use std::collections::BTreeSet;
use std::sync::OnceLock;

/// A single signed monomial `sign * prod x_i^{exps[i]}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SignedMono {
    pub negative: bool,
    pub exps: Vec<i32>,
}

impl SignedMono {
    pub fn var(arity: usize, v: usize) -> Self {
        let mut exps = vec![0; arity];
        exps[v] = 1;
        SignedMono {
            negative: false,
            exps,
        }
    }

    pub fn to_poly(&self) -> LaurentPoly {
        let c = if self.negative {
            -Rat::one()
        } else {
            Rat::one()
        };
        LaurentPoly::monomial(self.exps.clone(), c)
    }
}

/// A group element presented by its substitution: one signed monomial image
/// per variable. Images of conjugate variables are always the conjugate
/// mirrors of the holomorphic images, so the substitution commutes with the
/// conjugation pairing by construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroupElement {
    images: Vec<SignedMono>,
}

impl GroupElement {
    pub fn identity(vars: &VariableSet) -> Self {
        let arity = vars.arity();
        GroupElement {
            images: (0..arity).map(|v| SignedMono::var(arity, v)).collect(),
        }
    }

    /// Builds an element from images of the holomorphic variables only.
    /// Each image must be a signed monomial in the holomorphic variables;
    /// the conjugate block is filled in by mirroring.
    pub fn from_holo_images(vars: &VariableSet, holo_images: Vec<SignedMono>) -> Self {
        let h = vars.holo_count();
        let arity = vars.arity();
        assert_eq!(holo_images.len(), h);
        let mut images = Vec::with_capacity(arity);
        for im in &holo_images {
            assert_eq!(im.exps.len(), arity);
            assert!(
                im.exps[h..].iter().all(|&e| e == 0),
                "holomorphic image may not involve conjugate variables"
            );
            images.push(im.clone());
        }
        for im in &holo_images {
            images.push(SignedMono {
                negative: im.negative,
                exps: vars.mirror_exps(&im.exps),
            });
        }
        GroupElement { images }
    }

    pub fn image(&self, v: usize) -> &SignedMono {
        &self.images[v]
    }

    /// Applies the substitution to a polynomial. Substitutions are ring
    /// automorphisms, so this never fails.
    pub fn apply(&self, p: &LaurentPoly) -> LaurentPoly {
        let images: Vec<LaurentPoly> = self.images.iter().map(|m| m.to_poly()).collect();
        p.substitute(&images)
            .expect("monomial images are always invertible")
    }

    /// Applies the substitution to a single signed monomial.
    pub fn apply_mono(&self, m: &SignedMono) -> SignedMono {
        let arity = self.images.len();
        let mut exps = vec![0i32; arity];
        let mut negative = m.negative;
        for (v, &e) in m.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let im = &self.images[v];
            for (slot, &ie) in im.exps.iter().enumerate() {
                exps[slot] += e * ie;
            }
            if im.negative && e.rem_euclid(2) == 1 {
                negative = !negative;
            }
        }
        SignedMono { negative, exps }
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            images: other.images.iter().map(|m| self.apply_mono(m)).collect(),
        }
    }

    /// Numerically transports a point through the substitution: the value of
    /// variable `v` at the image point is the image monomial evaluated at
    /// the original point.
    pub fn apply_point(&self, point: &[num_complex::Complex64]) -> Vec<num_complex::Complex64> {
        self.images
            .iter()
            .map(|m| {
                let mut acc = if m.negative {
                    num_complex::Complex64::new(-1.0, 0.0)
                } else {
                    num_complex::Complex64::new(1.0, 0.0)
                };
                for (v, &e) in m.exps.iter().enumerate() {
                    if e != 0 {
                        acc *= point[v].powi(e);
                    }
                }
                acc
            })
            .collect()
    }
}

/// A finite group of substitutions, presented by generators. The element
/// list is enumerated lazily (breadth-first closure) and memoized behind a
/// once-only guard; all other state is immutable.
#[derive(Debug)]
pub struct FiniteGroup {
    vars: VariableSet,
    generators: Vec<GroupElement>,
    elements: OnceLock<Vec<GroupElement>>,
}

impl FiniteGroup {
    pub fn new(vars: VariableSet, generators: Vec<GroupElement>) -> Self {
        FiniteGroup {
            vars,
            generators,
            elements: OnceLock::new(),
        }
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    /// Full element list (identity included).
    pub fn elements(&self) -> &[GroupElement] {
        self.elements.get_or_init(|| {
            let id = GroupElement::identity(&self.vars);
            let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
            seen.insert(id.clone());
            let mut frontier = vec![id];
            while let Some(g) = frontier.pop() {
                for gen in &self.generators {
                    let next = gen.compose(&g);
                    if seen.insert(next.clone()) {
                        frontier.push(next);
                    }
                }
            }
            seen.into_iter().collect()
        })
    }

    pub fn order(&self) -> usize {
        self.elements().len()
    }

    /// Orbit of a signed monomial: the distinct images under all elements.
    pub fn orbit(&self, m: &SignedMono) -> Vec<SignedMono> {
        let mut orbit: BTreeSet<SignedMono> = BTreeSet::new();
        for g in self.elements() {
            orbit.insert(g.apply_mono(m));
        }
        orbit.into_iter().collect()
    }

    /// Orbit sum: each distinct orbit element once, with coefficient one
    /// (carrying its sign).
    pub fn orbit_sum(&self, m: &SignedMono) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.vars.arity());
        for o in self.orbit(m) {
            out = out.add(&o.to_poly());
        }
        out
    }

    /// True iff `p` is fixed by every generator.
    pub fn is_invariant(&self, p: &LaurentPoly) -> bool {
        self.generators.iter().all(|g| g.apply(p) == *p)
    }

    /// Invariance in a quotient ring: `g.p - p` must reduce to zero.
    pub fn is_invariant_mod(&self, p: &LaurentPoly, ideal: &crate::algebra::QuotientIdeal) -> bool {
        self.generators
            .iter()
            .all(|g| ideal.reduces_to_zero(&g.apply(p).sub(p)))
    }

    /// Canonical representative of the orbit of a (positive) monomial:
    /// the largest image in the term order. Two monomials lie in one orbit
    /// iff their representatives agree.
    pub fn orbit_representative(&self, exps: &[i32]) -> Vec<i32> {
        let m = SignedMono {
            negative: false,
            exps: exps.to_vec(),
        };
        self.orbit(&m)
            .into_iter()
            .map(|o| o.exps)
            .max_by(|a, b| {
                crate::algebra::Mono(b.clone()).cmp(&crate::algebra::Mono(a.clone()))
            })
            .unwrap()
    }
}

//! Torus models of adjoint quotients per group family: variables, torus
//! ideal, Weyl group, bracket structure, and the named generator catalogs;
//! defining relations; the Hilbert map with its Gram-matrix services;
//! stratification; and the rank-one worked example.

mod canoe;
mod disc;
mod hilbert;
mod relations;
mod stratum;

pub use canoe::{
    kappa_eval, kappa_red_rank_one, rank_one_record, real_boundary_su3, su2_candidate,
    CanoeRecord,
};
pub use disc::{discriminant_eval, discriminant_in_coeffs, discriminant_symbolic};
pub use hilbert::{
    poisson_rank_at, psd_membership, torus_point, CandidateValues, HilbertMap, Membership,
    MembershipError,
};
pub use relations::{
    derive_relation, relation_catalog, sp_bracket_identity, sp_chart_identity,
    spin_delta_identities, spind_split_identities, su2_canoe_equivalence,
    u2_real_form_identity, verify_relation, DeriveError, Relation, VerifyOutcome,
};
pub use stratum::{classify_stratum, classify_stratum_exact, StratumDescriptor, StratumError};

use crate::algebra::{LaurentPoly, QuotientIdeal, RewriteRule, VariableSet};
use crate::poisson::{BracketStructure, ConstraintPair, NamedPoly};
use crate::rat::Rat;
use crate::symmetry::{
    build_weyl_group, elementary_multisym, elementary_symmetric, Family, FiniteGroup, SignedMono,
};

/// The group families with distinct adjoint-quotient models. The odd
/// orthogonal quotient coincides with the symplectic one (the two root
/// systems differ only by exchanging long and short roots), so `C` serves
/// both.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
pub enum ModelFamily {
    U,
    Su,
    C,
    D,
    SpinB,
    SpinD,
    G2,
}

impl ModelFamily {
    pub fn parse(s: &str) -> Option<ModelFamily> {
        match s.to_ascii_lowercase().as_str() {
            "u" => Some(ModelFamily::U),
            "su" => Some(ModelFamily::Su),
            "c" | "sp" | "b" | "so-odd" => Some(ModelFamily::C),
            "d" | "so-even" => Some(ModelFamily::D),
            "spinb" | "spin-odd" => Some(ModelFamily::SpinB),
            "spind" | "spin-even" => Some(ModelFamily::SpinD),
            "g2" => Some(ModelFamily::G2),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            ModelFamily::U => "U",
            ModelFamily::Su => "SU",
            ModelFamily::C => "C",
            ModelFamily::D => "D",
            ModelFamily::SpinB => "spinB",
            ModelFamily::SpinD => "spinD",
            ModelFamily::G2 => "G2",
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ModelError {
    #[error("unsupported family/rank: {family:?} at rank {rank}")]
    Unsupported { family: ModelFamily, rank: usize },
    #[error("unknown generator name {0:?}")]
    UnknownGenerator(String),
}

/// `Z_j = z_j + z_j^{-1}`.
pub fn z_plus_inverse(vars: &VariableSet, j: usize) -> LaurentPoly {
    let arity = vars.arity();
    LaurentPoly::var(arity, j).add(&LaurentPoly::var_pow(arity, j, -1))
}

/// The rank-one mixed invariant `z_j / zb_j + zb_j / z_j`.
pub fn sigma_paren(vars: &VariableSet, j: usize) -> LaurentPoly {
    let arity = vars.arity();
    let jc = vars.conj_index(j);
    let mut a = vec![0i32; arity];
    a[j] = 1;
    a[jc] = -1;
    let mut b = vec![0i32; arity];
    b[j] = -1;
    b[jc] = 1;
    LaurentPoly::monomial(a, Rat::one()).add(&LaurentPoly::monomial(b, Rat::one()))
}

/// A group-family instance: variable set, torus ideal, Weyl group, bracket
/// coefficients, and the named generator catalogs (holomorphic fundamental
/// characters, their conjugates, and the mixed invariants).
pub struct TorusModel {
    family: ModelFamily,
    rank: usize,
    vars: VariableSet,
    ideal: QuotientIdeal,
    weyl: FiniteGroup,
    bracket: BracketStructure,
    holo_gens: Vec<NamedPoly>,
    anti_gens: Vec<NamedPoly>,
    mixed_gens: Vec<NamedPoly>,
    sigma_top_invertible: bool,
}

pub(crate) fn mixed_name(r: usize, s: usize) -> String {
    match (r, s) {
        (1, 1) => "sigma".into(),
        (2, 1) => "rho".into(),
        (1, 2) => "rhobar".into(),
        _ => format!("sigma_{r}_{s}"),
    }
}

impl TorusModel {
    pub fn build(family: ModelFamily, rank: usize) -> Result<TorusModel, ModelError> {
        let fail = || ModelError::Unsupported { family, rank };
        match family {
            ModelFamily::U | ModelFamily::Su => {
                let n = rank;
                if n == 0 || (family == ModelFamily::Su && n < 2) {
                    return Err(fail());
                }
                let vars = VariableSet::new(n);
                let arity = vars.arity();
                let weyl = build_weyl_group(Family::A, n).map_err(|_| fail())?;
                let bracket = BracketStructure::diagonal(vars.clone());
                let ideal = if family == ModelFamily::Su {
                    QuotientIdeal::new(
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
                    .expect("disjoint blocks")
                } else {
                    QuotientIdeal::trivial(arity)
                };
                let top = if family == ModelFamily::Su { n - 1 } else { n };
                let holo_gens: Vec<NamedPoly> = (1..=top)
                    .map(|k| {
                        NamedPoly::new(
                            format!("sigma_{k}"),
                            elementary_multisym(n, k, 0).unwrap(),
                        )
                    })
                    .collect();
                let anti_gens = mirror_gens(&vars, &holo_gens);
                let mut mixed_gens = vec![];
                for r in 1..n {
                    for s in 1..=(n - r) {
                        mixed_gens.push(NamedPoly::new(
                            mixed_name(r, s),
                            elementary_multisym(n, r, s).unwrap(),
                        ));
                    }
                }
                Ok(TorusModel {
                    family,
                    rank,
                    vars,
                    ideal,
                    weyl,
                    bracket,
                    holo_gens,
                    anti_gens,
                    mixed_gens,
                    sigma_top_invertible: family == ModelFamily::U,
                })
            }
            ModelFamily::C | ModelFamily::D => {
                let n = rank;
                let min = if family == ModelFamily::D { 2 } else { 1 };
                if n < min {
                    return Err(fail());
                }
                let vars = VariableSet::new(n);
                let arity = vars.arity();
                let wfam = if family == ModelFamily::D {
                    Family::D
                } else {
                    Family::C
                };
                let weyl = build_weyl_group(wfam, n).map_err(|_| fail())?;
                let bracket = BracketStructure::diagonal(vars.clone());
                let ideal = QuotientIdeal::trivial(arity);
                let big_z: Vec<LaurentPoly> =
                    (0..n).map(|j| z_plus_inverse(&vars, j)).collect();
                let top = if family == ModelFamily::D { n - 1 } else { n };
                let mut holo_gens: Vec<NamedPoly> = (1..=top)
                    .map(|k| {
                        NamedPoly::new(format!("sigma_{k}"), elementary_symmetric(&big_z, k))
                    })
                    .collect();
                if family == ModelFamily::D {
                    let all = SignedMono {
                        negative: false,
                        exps: {
                            let mut e = vec![0i32; arity];
                            for slot in e.iter_mut().take(n) {
                                *slot = 1;
                            }
                            e
                        },
                    };
                    let mut flipped = all.clone();
                    flipped.exps[0] = -1;
                    holo_gens.push(NamedPoly::new("sigma_plus", weyl.orbit_sum(&all)));
                    holo_gens.push(NamedPoly::new("sigma_minus", weyl.orbit_sum(&flipped)));
                }
                let anti_gens = mirror_gens(&vars, &holo_gens);
                let sig: Vec<LaurentPoly> = (0..n).map(|j| sigma_paren(&vars, j)).collect();
                let mixed_gens: Vec<NamedPoly> = (1..=n)
                    .map(|k| {
                        NamedPoly::new(format!("sigma_mix_{k}"), elementary_symmetric(&sig, k))
                    })
                    .collect();
                Ok(TorusModel {
                    family,
                    rank,
                    vars,
                    ideal,
                    weyl,
                    bracket,
                    holo_gens,
                    anti_gens,
                    mixed_gens,
                    sigma_top_invertible: false,
                })
            }
            ModelFamily::SpinB | ModelFamily::SpinD => {
                let n = rank;
                let min = if family == ModelFamily::SpinD { 2 } else { 1 };
                if n < min {
                    return Err(fail());
                }
                let vars = VariableSet::with_spin(n);
                let arity = vars.arity();
                let spin = vars.spin_index().unwrap();
                let spin_c = vars.conj_index(spin);
                let wfam = if family == ModelFamily::SpinD {
                    Family::SpinD
                } else {
                    Family::SpinB
                };
                let weyl = build_weyl_group(wfam, n).map_err(|_| fail())?;
                let bracket = BracketStructure::spin(vars.clone());
                let mut image = vec![0i32; arity];
                for slot in image.iter_mut().take(n) {
                    *slot = 1;
                }
                let mut image_c = vec![0i32; arity];
                for j in 0..n {
                    image_c[vars.conj_index(j)] = 1;
                }
                let ideal = QuotientIdeal::new(
                    arity,
                    vec![
                        RewriteRule::PowerToMonomial {
                            var: spin,
                            power: 2,
                            image,
                        },
                        RewriteRule::PowerToMonomial {
                            var: spin_c,
                            power: 2,
                            image: image_c,
                        },
                    ],
                )
                .expect("cover relations are confluent");
                let big_z: Vec<LaurentPoly> =
                    (0..n).map(|j| z_plus_inverse(&vars, j)).collect();
                let top = if family == ModelFamily::SpinD {
                    n.saturating_sub(2)
                } else {
                    n - 1
                };
                let mut holo_gens: Vec<NamedPoly> = (1..=top)
                    .map(|k| {
                        NamedPoly::new(format!("sigma_{k}"), elementary_symmetric(&big_z, k))
                    })
                    .collect();
                let z_seed = SignedMono::var(arity, spin);
                if family == ModelFamily::SpinB {
                    holo_gens.push(NamedPoly::new(
                        "delta",
                        ideal.reduce(&weyl.orbit_sum(&z_seed)),
                    ));
                } else {
                    let mut odd_seed = z_seed.clone();
                    odd_seed.exps[0] = -1;
                    holo_gens.push(NamedPoly::new(
                        "delta_plus",
                        ideal.reduce(&weyl.orbit_sum(&z_seed)),
                    ));
                    holo_gens.push(NamedPoly::new(
                        "delta_minus",
                        ideal.reduce(&weyl.orbit_sum(&odd_seed)),
                    ));
                }
                let anti_gens = mirror_gens(&vars, &holo_gens);
                let sig: Vec<LaurentPoly> = (0..n).map(|j| sigma_paren(&vars, j)).collect();
                let mut mixed_gens: Vec<NamedPoly> = (1..=n)
                    .map(|k| {
                        NamedPoly::new(format!("sigma_mix_{k}"), elementary_symmetric(&sig, k))
                    })
                    .collect();
                let mut cover_seed = vec![0i32; arity];
                cover_seed[spin] = 1;
                cover_seed[spin_c] = -1;
                mixed_gens.push(NamedPoly::new(
                    "sigma_cover",
                    ideal.reduce(&weyl.orbit_sum(&SignedMono {
                        negative: false,
                        exps: cover_seed,
                    })),
                ));
                Ok(TorusModel {
                    family,
                    rank,
                    vars,
                    ideal,
                    weyl,
                    bracket,
                    holo_gens,
                    anti_gens,
                    mixed_gens,
                    sigma_top_invertible: false,
                })
            }
            ModelFamily::G2 => {
                if rank != 2 {
                    return Err(fail());
                }
                let n = 3;
                let vars = VariableSet::new(n);
                let arity = vars.arity();
                let weyl = build_weyl_group(Family::G2, n).map_err(|_| fail())?;
                let bracket = BracketStructure::diagonal(vars.clone());
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
                .expect("disjoint blocks");
                let s1 = elementary_multisym(n, 1, 0).unwrap();
                let s2 = elementary_multisym(n, 2, 0).unwrap();
                let holo_gens = vec![
                    NamedPoly::new("Sigma_1", ideal.reduce(&s1.add(&s2))),
                    NamedPoly::new("Sigma_2", ideal.reduce(&s1.mul(&s2))),
                ];
                let anti_gens = mirror_gens(&vars, &holo_gens);
                // The mixed invariant of bidegree (1,1) and its image under
                // the inversion involution (which coincides with it on the
                // compact torus).
                let sigma = ideal.reduce(&elementary_multisym(n, 1, 1).unwrap());
                let inversion = weyl
                    .generators()
                    .last()
                    .expect("inversion generator present");
                let sigma_inv = ideal.reduce(&inversion.apply(&sigma));
                let mixed_gens = vec![
                    NamedPoly::new("sigma", sigma),
                    NamedPoly::new("sigma_inv", sigma_inv),
                ];
                Ok(TorusModel {
                    family,
                    rank,
                    vars,
                    ideal,
                    weyl,
                    bracket,
                    holo_gens,
                    anti_gens,
                    mixed_gens,
                    sigma_top_invertible: false,
                })
            }
        }
    }

    pub fn family(&self) -> ModelFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn ideal(&self) -> &QuotientIdeal {
        &self.ideal
    }

    pub fn weyl(&self) -> &FiniteGroup {
        &self.weyl
    }

    pub fn bracket_structure(&self) -> &BracketStructure {
        &self.bracket
    }

    pub fn holo_generators(&self) -> &[NamedPoly] {
        &self.holo_gens
    }

    pub fn anti_generators(&self) -> &[NamedPoly] {
        &self.anti_gens
    }

    pub fn mixed_generators(&self) -> &[NamedPoly] {
        &self.mixed_gens
    }

    /// Whether the top holomorphic invariant is tracked as invertible
    /// (nonzero on the whole model).
    pub fn sigma_top_invertible(&self) -> bool {
        self.sigma_top_invertible
    }

    /// Full catalog: holomorphic generators, their conjugates, mixed ones.
    pub fn all_generators(&self) -> Vec<NamedPoly> {
        let mut out = self.holo_gens.clone();
        out.extend(self.anti_gens.iter().cloned());
        out.extend(self.mixed_gens.iter().cloned());
        out
    }

    pub fn generator(&self, name: &str) -> Result<&NamedPoly, ModelError> {
        self.holo_gens
            .iter()
            .chain(&self.anti_gens)
            .chain(&self.mixed_gens)
            .find(|g| g.name == name)
            .ok_or_else(|| ModelError::UnknownGenerator(name.into()))
    }

    /// Invariance test in the model's quotient ring.
    pub fn is_invariant(&self, p: &LaurentPoly) -> bool {
        self.weyl.is_invariant_mod(p, &self.ideal)
    }

    /// The power-sum generator catalog (unitary families only), in degree
    /// order within each total degree.
    pub fn tau_generators(&self) -> Vec<NamedPoly> {
        assert!(matches!(self.family, ModelFamily::U | ModelFamily::Su));
        let n = self.rank;
        let mut out = vec![];
        for total in 1..=n {
            for r in (0..=total).rev() {
                let s = total - r;
                let name = match (r, s) {
                    (x, 0) => format!("tau_{x}"),
                    (0, x) => format!("taubar_{x}"),
                    (1, 1) => "tau".into(),
                    _ => format!("tau_{r}_{s}"),
                };
                out.push(NamedPoly::new(
                    name,
                    crate::symmetry::power_sum_multisym(n, r, s),
                ));
            }
        }
        out
    }

    /// The determinant constraint pair of the special-unitary families
    /// (present on `Su` and `G2` models).
    pub fn constraint_pair(&self) -> Option<ConstraintPair> {
        match self.family {
            ModelFamily::Su | ModelFamily::G2 => {
                let n = self.vars.n_base();
                let holo = elementary_multisym(n, n, 0).unwrap();
                let anti = elementary_multisym(n, 0, n).unwrap();
                ConstraintPair::new(&self.bracket, holo, anti, self.ideal.clone()).ok()
            }
            _ => None,
        }
    }

    /// Machine-readable generator manifest.
    pub fn manifest(&self) -> serde_json::Value {
        let entry = |g: &NamedPoly, kind: &str| {
            serde_json::json!({
                "name": g.name,
                "family": self.family.label(),
                "kind": kind,
                "polynomial": g.poly.to_json(),
            })
        };
        let mut items = vec![];
        for g in &self.holo_gens {
            items.push(entry(g, "holomorphic"));
        }
        for g in &self.anti_gens {
            items.push(entry(g, "antiholomorphic"));
        }
        for g in &self.mixed_gens {
            items.push(entry(g, "mixed"));
        }
        serde_json::json!({
            "family": self.family.label(),
            "rank": self.rank,
            "variables": self.vars.names(),
            "generators": items,
        })
    }
}

fn mirror_gens(vars: &VariableSet, gens: &[NamedPoly]) -> Vec<NamedPoly> {
    gens.iter()
        .map(|g| {
            let name = if let Some(rest) = g.name.strip_prefix("sigma_") {
                format!("sigmabar_{rest}")
            } else if let Some(rest) = g.name.strip_prefix("Sigma_") {
                format!("Sigmabar_{rest}")
            } else if let Some(rest) = g.name.strip_prefix("delta") {
                format!("deltabar{rest}")
            } else {
                format!("{}bar", g.name)
            };
            NamedPoly::new(name, g.poly.conj_mirror(vars))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_counts_match_family_table() {
        let cases = [
            (ModelFamily::U, 2, 2),
            (ModelFamily::U, 3, 3),
            (ModelFamily::Su, 3, 2),
            (ModelFamily::C, 2, 2),
            (ModelFamily::D, 3, 4),
            (ModelFamily::SpinB, 2, 2),
            (ModelFamily::SpinD, 3, 3),
            (ModelFamily::G2, 2, 2),
        ];
        for (family, rank, count) in cases {
            let model = TorusModel::build(family, rank).unwrap();
            assert_eq!(
                model.holo_generators().len(),
                count,
                "{family:?} rank {rank}"
            );
        }
    }

    #[test]
    fn every_holo_generator_is_invariant() {
        for (family, rank) in [
            (ModelFamily::U, 2),
            (ModelFamily::U, 3),
            (ModelFamily::Su, 2),
            (ModelFamily::Su, 3),
            (ModelFamily::C, 2),
            (ModelFamily::C, 3),
            (ModelFamily::D, 3),
            (ModelFamily::D, 4),
            (ModelFamily::SpinB, 2),
            (ModelFamily::SpinB, 3),
            (ModelFamily::SpinD, 3),
            (ModelFamily::SpinD, 4),
            (ModelFamily::G2, 2),
        ] {
            let model = TorusModel::build(family, rank).unwrap();
            for g in model.holo_generators() {
                assert!(
                    model.is_invariant(&g.poly),
                    "{family:?} rank {rank}: {} not invariant",
                    g.name
                );
            }
            // Mixed generators are invariant except for the recorded
            // rank-two exceptional pair, which the inversion interchanges.
            if family != ModelFamily::G2 {
                for g in model.mixed_generators() {
                    assert!(
                        model.is_invariant(&g.poly),
                        "{family:?} rank {rank}: {} not invariant",
                        g.name
                    );
                }
            }
        }
    }

    #[test]
    fn u2_model_example() {
        let model = TorusModel::build(ModelFamily::U, 2).unwrap();
        assert!(model.sigma_top_invertible());
        assert_eq!(model.generator("sigma_2").unwrap().poly.num_terms(), 1);
        let names: Vec<String> = model
            .all_generators()
            .iter()
            .map(|g| g.name.clone())
            .collect();
        assert_eq!(
            names,
            ["sigma_1", "sigma_2", "sigmabar_1", "sigmabar_2", "sigma"]
        );
    }

    #[test]
    fn su3_model_example() {
        let model = TorusModel::build(ModelFamily::Su, 3).unwrap();
        assert_eq!(model.holo_generators().len(), 2);
        assert!(!model.ideal().is_trivial());
        let pair = model.constraint_pair().unwrap();
        assert_eq!(pair.pairing().to_string(), "3");
        // sigma_3 reduces to 1.
        let s3 = elementary_multisym(3, 3, 0).unwrap();
        assert_eq!(model.ideal().reduce(&s3), LaurentPoly::one(6));
    }

    #[test]
    fn c2_fundamental_generators() {
        let model = TorusModel::build(ModelFamily::C, 2).unwrap();
        let s1 = &model.generator("sigma_1").unwrap().poly;
        // sigma_1(Z) = Z_1 + Z_2 = z1 + z1^-1 + z2 + z2^-1.
        assert_eq!(s1.num_terms(), 4);
        let s2 = &model.generator("sigma_2").unwrap().poly;
        assert_eq!(
            *s2,
            z_plus_inverse(model.vars(), 0).mul(&z_plus_inverse(model.vars(), 1))
        );
    }

    #[test]
    fn d3_sigma_plus_matches_display() {
        let model = TorusModel::build(ModelFamily::D, 3).unwrap();
        let plus = &model.generator("sigma_plus").unwrap().poly;
        // z1 z2 z3 + z1/(z2 z3) + z2/(z3 z1) + z3/(z1 z2).
        assert_eq!(plus.num_terms(), 4);
        assert_eq!(plus.coeff(&[1, 1, 1, 0, 0, 0]).to_string(), "1");
        assert_eq!(plus.coeff(&[1, -1, -1, 0, 0, 0]).to_string(), "1");
        assert_eq!(plus.coeff(&[-1, 1, -1, 0, 0, 0]).to_string(), "1");
        assert_eq!(plus.coeff(&[-1, -1, 1, 0, 0, 0]).to_string(), "1");
        let minus = &model.generator("sigma_minus").unwrap().poly;
        assert_eq!(minus.num_terms(), 4);
        assert_eq!(minus.coeff(&[-1, -1, -1, 0, 0, 0]).to_string(), "1");
        // Product of all Z_j splits as the sum of the two halves.
        let z_all = z_plus_inverse(model.vars(), 0)
            .mul(&z_plus_inverse(model.vars(), 1))
            .mul(&z_plus_inverse(model.vars(), 2));
        assert_eq!(plus.add(minus), z_all);
    }

    #[test]
    fn spin2_delta_matches_display() {
        // delta = z + z/z1 + z/z2 + z^{-1} with z^{-1} = z/(z1 z2).
        let model = TorusModel::build(ModelFamily::SpinB, 2).unwrap();
        let delta = &model.generator("delta").unwrap().poly;
        assert_eq!(delta.num_terms(), 4);
        assert_eq!(delta.coeff(&[0, 0, 1, 0, 0, 0]).to_string(), "1");
        assert_eq!(delta.coeff(&[-1, 0, 1, 0, 0, 0]).to_string(), "1");
        assert_eq!(delta.coeff(&[0, -1, 1, 0, 0, 0]).to_string(), "1");
        assert_eq!(delta.coeff(&[-1, -1, 1, 0, 0, 0]).to_string(), "1");
    }

    #[test]
    fn g2_model_generators() {
        let model = TorusModel::build(ModelFamily::G2, 2).unwrap();
        assert_eq!(model.weyl().order(), 12);
        for g in model.holo_generators() {
            assert!(model.is_invariant(&g.poly), "{}", g.name);
        }
        // The inversion interchanges the recorded mixed pair.
        let sigma = &model.generator("sigma").unwrap().poly;
        let sigma_inv = &model.generator("sigma_inv").unwrap().poly;
        let inversion = model.weyl().generators().last().unwrap();
        let image = model.ideal().reduce(&inversion.apply(sigma));
        assert_eq!(&image, sigma_inv);
        assert_ne!(sigma, sigma_inv);
    }
}

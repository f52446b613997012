//! The Hilbert map of power-sum invariants with its Jacobian Gram matrix,
//! semialgebraic membership through positive semidefiniteness, and the
//! Poisson rank at quotient points.

use super::{ModelFamily, TorusModel};
use crate::algebra::{LaurentPoly, VariableSet};
use crate::numeric::{hermitian_defect, hermitian_eigenvalues, numeric_rank, to_cmatrix, CMatrix};
use crate::poisson::{dirac_bracket, rewrite_in_generators, NamedPoly};
use crate::rat::Rat;
use crate::symmetry::power_sum_multisym;
use num_complex::Complex64;
use std::collections::BTreeMap;

/// An ordered list of invariant generators serving as coordinates on the
/// quotient, with evaluation, Jacobian, and Gram-matrix services.
pub struct HilbertMap {
    vars: VariableSet,
    components: Vec<NamedPoly>,
}

impl HilbertMap {
    /// The power-sum Hilbert map at rank `n`: components ordered by total
    /// degree, plain degree descending inside each total degree.
    pub fn power_sums(n: usize) -> Self {
        let vars = VariableSet::new(n);
        let mut components = vec![];
        for total in 1..=n {
            for r in (0..=total).rev() {
                let s = total - r;
                components.push(NamedPoly::new(
                    format!("tau_{r}_{s}"),
                    power_sum_multisym(n, r, s),
                ));
            }
        }
        HilbertMap { vars, components }
    }

    /// The rank-2 map in the block order and normalization under which the
    /// Gram matrix takes its classical printed form: plain degree-1 and
    /// half the degree-2 power sum, the conjugate pair, then the mixed
    /// power sum.
    pub fn rank2_display() -> Self {
        let n = 2;
        let vars = VariableSet::new(n);
        let half = Rat::new(1, 2);
        let components = vec![
            NamedPoly::new("tau_1", power_sum_multisym(n, 1, 0)),
            NamedPoly::new("tau_2/2", power_sum_multisym(n, 2, 0).scale(&half)),
            NamedPoly::new("taubar_1", power_sum_multisym(n, 0, 1)),
            NamedPoly::new("taubar_2/2", power_sum_multisym(n, 0, 2).scale(&half)),
            NamedPoly::new("tau", power_sum_multisym(n, 1, 1)),
        ];
        HilbertMap { vars, components }
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[NamedPoly] {
        &self.components
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    /// The `d x 2n` Jacobian of exact partial derivatives.
    pub fn jacobian(&self) -> Vec<Vec<LaurentPoly>> {
        let arity = self.vars.arity();
        self.components
            .iter()
            .map(|c| (0..arity).map(|v| c.poly.partial_derivative(v)).collect())
            .collect()
    }

    /// The symbolic Gram matrix `G_ab = sum_v dPhi_a/dx_v bar(dPhi_b/dx_v)`
    /// where `bar` is the conjugation mirror. On torus points (conjugate
    /// slots set to complex conjugates) this matrix is hermitian.
    pub fn gram_symbolic(&self) -> Vec<Vec<LaurentPoly>> {
        let jac = self.jacobian();
        let d = self.dim();
        let arity = self.vars.arity();
        let mut out = vec![vec![LaurentPoly::zero(arity); d]; d];
        for a in 0..d {
            for b in 0..d {
                let mut acc = LaurentPoly::zero(arity);
                for v in 0..arity {
                    acc = acc.add(&jac[a][v].mul(&jac[b][v].conj_mirror(&self.vars)));
                }
                out[a][b] = acc;
            }
        }
        out
    }

    /// Numeric Gram matrix at a torus point given by its plain coordinate
    /// values; conjugate slots are filled with complex conjugates.
    pub fn gram_at(&self, point: &[Complex64]) -> Result<CMatrix, crate::algebra::AlgebraError> {
        let full = torus_point(&self.vars, point);
        let sym = self.gram_symbolic();
        let d = self.dim();
        let mut data = Vec::with_capacity(d * d);
        for row in &sym {
            for entry in row {
                data.push(entry.evaluate(&full)?);
            }
        }
        Ok(to_cmatrix(d, d, &data))
    }

    /// The antisymmetric matrix of pairwise brackets among the components,
    /// symbolically; on determinant-one models the Dirac bracket is used.
    pub fn bracket_matrix_symbolic(&self, model: &TorusModel) -> Vec<Vec<LaurentPoly>> {
        let d = self.dim();
        let arity = self.vars.arity();
        let constraint = model.constraint_pair();
        let structure = model.bracket_structure();
        let mut out = vec![vec![LaurentPoly::zero(arity); d]; d];
        for a in 0..d {
            for b in (a + 1)..d {
                let value = match &constraint {
                    Some(pair) => dirac_bracket(
                        &self.components[a].poly,
                        &self.components[b].poly,
                        structure,
                        pair,
                    ),
                    None => model
                        .ideal()
                        .reduce(&structure.bracket(&self.components[a].poly, &self.components[b].poly)),
                };
                out[a][b] = value.clone();
                out[b][a] = value.neg();
            }
        }
        out
    }
}

/// Extends plain coordinate values to the full variable set with complex
/// conjugates in the mirror slots.
pub fn torus_point(vars: &VariableSet, point: &[Complex64]) -> Vec<Complex64> {
    let h = vars.holo_count();
    assert_eq!(point.len(), h, "one value per holomorphic coordinate");
    let mut full = vec![Complex64::new(0.0, 0.0); vars.arity()];
    for (i, &z) in point.iter().enumerate() {
        full[i] = z;
        full[vars.conj_index(i)] = z.conj();
    }
    full
}

/// Candidate invariant values for membership testing: one complex value
/// per power-sum bidegree, conjugate-consistent.
#[derive(Clone, Debug)]
pub struct CandidateValues {
    n: usize,
    values: BTreeMap<(usize, usize), Complex64>,
}

#[derive(Debug, thiserror::Error)]
pub enum MembershipError {
    #[error("missing value for bidegree ({0}, {1})")]
    Missing(usize, usize),
    #[error("values are not conjugate-consistent at bidegree ({0}, {1})")]
    ConjugateMismatch(usize, usize),
    #[error("candidate violates a defining relation: {tag} residual {residual:.3e}")]
    RelationViolation { tag: String, residual: f64 },
    #[error("candidate lies on the excluded locus: |sigma_n| below threshold")]
    TopInvariantVanishes,
}

impl CandidateValues {
    pub fn new(n: usize) -> Self {
        CandidateValues {
            n,
            values: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, r: usize, s: usize, v: Complex64) -> &mut Self {
        self.values.insert((r, s), v);
        // Maintain conjugate symmetry when the mirror is absent.
        self.values.entry((s, r)).or_insert(v.conj());
        self
    }

    /// Builds the candidate carried by an actual torus point.
    pub fn from_torus_point(n: usize, point: &[Complex64]) -> Self {
        let mut c = CandidateValues::new(n);
        for total in 1..=n {
            for r in 0..=total {
                let s = total - r;
                let mut acc = Complex64::new(0.0, 0.0);
                for z in point.iter().take(n) {
                    acc += z.powi(r as i32) * z.conj().powi(s as i32);
                }
                c.values.insert((r, s), acc);
            }
        }
        c
    }

    pub fn get(&self, r: usize, s: usize) -> Result<Complex64, MembershipError> {
        self.values
            .get(&(r, s))
            .copied()
            .ok_or(MembershipError::Missing(r, s))
    }

    fn validate(&self) -> Result<(), MembershipError> {
        for total in 1..=self.n {
            for r in 0..=total {
                let s = total - r;
                let a = self.get(r, s)?;
                let b = self.get(s, r)?;
                let scale = 1.0 + a.norm().max(b.norm());
                if (a.conj() - b).norm() > 1e-9 * scale {
                    return Err(MembershipError::ConjugateMismatch(r, s));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, serde::Serialize)]
pub struct Membership {
    pub member: bool,
    pub min_eigenvalue: f64,
    pub matrix_scale: f64,
    pub relation_residuals: Vec<(String, f64)>,
}

/// Decides membership of a candidate in the semialgebraic image of the
/// quotient: the candidate must satisfy the model's defining relations to
/// tolerance, and the Gram matrix assembled from its invariant values must
/// be positive semidefinite up to the relative eigenvalue floor
/// `1e-9 * |M|`.
pub fn psd_membership(
    model: &TorusModel,
    candidate: &CandidateValues,
    tolerance: f64,
) -> Result<Membership, MembershipError> {
    assert!(matches!(
        model.family(),
        ModelFamily::U | ModelFamily::Su
    ));
    let n = model.rank();
    candidate.validate()?;

    // Generator values (elementary invariants) derived from the power-sum
    // values via cached exact rewrites.
    let hilbert = HilbertMap::power_sums(n);
    let tau_named = hilbert.components();
    let ideal = model.ideal();
    let mut gen_values: BTreeMap<String, Complex64> = BTreeMap::new();
    let all_gens = model.all_generators();
    for g in &all_gens {
        let expr = rewrite_in_generators(
            &g.poly,
            tau_named,
            g.poly.total_degree().max(1),
            None,
            ideal,
        )
        .expect("elementary invariants rewrite in power sums");
        let mut acc = Complex64::new(0.0, 0.0);
        for (mono, coef) in expr.expr.terms() {
            let mut t = Complex64::new(coef.to_f64(), 0.0);
            for (slot, &e) in mono.0.iter().enumerate() {
                if e != 0 {
                    let name = &expr.names[slot];
                    let (r, s) = parse_tau_name(name);
                    t *= candidate.get(r, s)?.powi(e);
                }
            }
            acc += t;
        }
        gen_values.insert(g.name.clone(), acc);
    }
    if model.family() == ModelFamily::U {
        let top = gen_values[&format!("sigma_{n}")];
        if top.norm() < 1e-12 {
            return Err(MembershipError::TopInvariantVanishes);
        }
    }

    // Relation check first.
    let mut residuals = vec![];
    for rel in super::relation_catalog(model) {
        let eval = |p: &LaurentPoly| -> Complex64 {
            let mut acc = Complex64::new(0.0, 0.0);
            for (mono, coef) in p.terms() {
                let mut t = Complex64::new(coef.to_f64(), 0.0);
                for (slot, &e) in mono.0.iter().enumerate() {
                    if e != 0 {
                        t *= gen_values[&rel.names[slot]].powi(e);
                    }
                }
                acc += t;
            }
            acc
        };
        let left = eval(&rel.left);
        let right = eval(&rel.right);
        let scale = 1.0 + left.norm().max(right.norm());
        let residual = (left - right).norm() / scale;
        if residual > tolerance {
            return Err(MembershipError::RelationViolation {
                tag: rel.tag.clone(),
                residual,
            });
        }
        residuals.push((rel.tag.clone(), residual));
    }

    // Gram matrix entries as polynomials in the power-sum names, evaluated
    // at the candidate.
    let gram = hilbert.gram_symbolic();
    let d = hilbert.dim();
    let mut data = Vec::with_capacity(d * d);
    for row in &gram {
        for entry in row {
            let expr = rewrite_in_generators(
                entry,
                tau_named,
                entry.total_degree().max(1),
                None,
                ideal,
            )
            .expect("Gram entries are invariant");
            let mut acc = Complex64::new(0.0, 0.0);
            for (mono, coef) in expr.expr.terms() {
                let mut t = Complex64::new(coef.to_f64(), 0.0);
                for (slot, &e) in mono.0.iter().enumerate() {
                    if e != 0 {
                        let (r, s) = parse_tau_name(&expr.names[slot]);
                        t *= candidate.get(r, s)?.powi(e);
                    }
                }
                acc += t;
            }
            data.push(acc);
        }
    }
    let m = to_cmatrix(d, d, &data);
    debug_assert!(hermitian_defect(&m) < 1e-8);
    let eigs = hermitian_eigenvalues(&m);
    let min_eig = eigs.first().copied().unwrap_or(0.0);
    let scale = eigs.iter().fold(1.0f64, |a, &e| a.max(e.abs()));
    Ok(Membership {
        member: min_eig >= -1e-9 * scale,
        min_eigenvalue: min_eig,
        matrix_scale: scale,
        relation_residuals: residuals,
    })
}

fn parse_tau_name(name: &str) -> (usize, usize) {
    let rest = name.strip_prefix("tau_").expect("power-sum name");
    let mut parts = rest.split('_');
    let r = parts.next().unwrap().parse().unwrap();
    let s = parts.next().unwrap().parse().unwrap();
    (r, s)
}

/// Numeric rank of the bracket matrix among the Hilbert-map components at
/// a torus point. Determinant-one models use the Dirac bracket; ranks are
/// always even.
pub fn poisson_rank_at(
    model: &TorusModel,
    point: &[Complex64],
) -> Result<usize, crate::algebra::AlgebraError> {
    let n = model.rank();
    let hilbert = HilbertMap::power_sums(n);
    let sym = hilbert.bracket_matrix_symbolic(model);
    let full = torus_point(hilbert.vars(), point);
    let d = hilbert.dim();
    let mut data = Vec::with_capacity(d * d);
    for row in &sym {
        for entry in row {
            data.push(entry.evaluate(&full)?);
        }
    }
    let m = to_cmatrix(d, d, &data);
    let rank = numeric_rank(&m, 1e-8, 1e-9);
    debug_assert!(rank % 2 == 0, "bracket matrix rank must be even");
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::ModelFamily;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn gram_is_hermitian_and_psd_on_torus() {
        let h = HilbertMap::power_sums(2);
        let pts = [
            vec![c(1.0, 0.5), c(-0.3, 0.9)],
            vec![c(0.4, 0.0), c(0.4, 0.0)],
            vec![c(2.0, -1.0), c(0.1, 0.2)],
        ];
        for p in &pts {
            let m = h.gram_at(p).unwrap();
            assert!(hermitian_defect(&m) < 1e-10);
            let eigs = hermitian_eigenvalues(&m);
            let scale = eigs.iter().fold(1.0f64, |a, &e| a.max(e.abs()));
            assert!(eigs[0] >= -1e-9 * scale, "min eig {}", eigs[0]);
        }
    }

    #[test]
    fn torus_image_is_member() {
        let model = TorusModel::build(ModelFamily::U, 2).unwrap();
        let point = [c(1.2, 0.3), c(-0.5, 0.8)];
        let cand = CandidateValues::from_torus_point(2, &point);
        let result = psd_membership(&model, &cand, 1e-7).unwrap();
        assert!(result.member, "min eig {}", result.min_eigenvalue);
    }

    #[test]
    fn mixed_violation_detected() {
        // Flip the sign of the mixed invariant on a genuine torus image so
        // that the defining relation fails.
        let model = TorusModel::build(ModelFamily::U, 2).unwrap();
        let point = [c(1.2, 0.3), c(-0.5, 0.8)];
        let mut cand = CandidateValues::from_torus_point(2, &point);
        let tau11 = cand.get(1, 1).unwrap();
        cand.set(1, 1, tau11 + c(7.0, 0.0));
        match psd_membership(&model, &cand, 1e-7) {
            Err(MembershipError::RelationViolation { .. }) => {}
            other => panic!("expected relation violation, got {other:?}"),
        }
    }

    #[test]
    fn u_rank_counts_distinct_coordinates() {
        let model = TorusModel::build(ModelFamily::U, 2).unwrap();
        let generic = [c(1.0, 0.4), c(-0.7, 0.2)];
        assert_eq!(poisson_rank_at(&model, &generic).unwrap(), 4);
        let diagonal = [c(1.0, 0.4), c(1.0, 0.4)];
        assert_eq!(poisson_rank_at(&model, &diagonal).unwrap(), 2);
    }
}

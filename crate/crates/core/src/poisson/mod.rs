//! The normalized Poisson biderivation on torus coordinate rings, its Dirac
//! correction on determinant-one constraint surfaces, rewriting of
//! invariants in generator systems, and Poisson-generation closure.
//!
//! Brackets are stored in the normalization that absorbs the imaginary
//! factor of the underlying symplectic structure, so every structure
//! constant is rational and `B(z, zb) = c z zb` on conjugate pairs.

mod closure;
mod dirac;
mod rewrite;
mod tau;

pub use closure::{
    invariant_dims, poisson_generation_closure, BidegreeDim, ClosureBracket, ClosureReport,
};
pub use dirac::{dirac_bracket, ConstraintPair};
pub use rewrite::{rewrite_in_generators, GeneratorExpr, NamedPoly, RewriteError};
pub use tau::{verify_tau_theorem, TauPairResult, TauReport};

use crate::algebra::{LaurentPoly, VariableSet};
use crate::rat::Rat;
use serde::Serialize;

#[derive(Debug, thiserror::Error)]
pub enum PoissonError {
    #[error("constraint bracket reduces to zero; the pair is not second class")]
    ConstraintDegenerate,
}

/// The bracket as an antisymmetric biderivation, determined by its values
/// on (holomorphic, antiholomorphic) variable pairs: `B(x_h, x_a) = c x_h x_a`.
/// Pairs of two holomorphic or two antiholomorphic variables bracket to
/// zero. In logarithmic coordinates this is a constant bivector, so the
/// Jacobi identity holds for every coefficient choice.
#[derive(Clone, Debug)]
pub struct BracketStructure {
    vars: VariableSet,
    /// (holomorphic index, antiholomorphic index, coefficient).
    pairs: Vec<(usize, usize, Rat)>,
}

impl BracketStructure {
    /// Coefficient 1 on every conjugate pair: the structure of the plain
    /// product torus.
    pub fn diagonal(vars: VariableSet) -> Self {
        let h = vars.holo_count();
        let pairs = (0..h)
            .map(|v| (v, vars.conj_index(v), Rat::one()))
            .collect();
        BracketStructure { vars, pairs }
    }

    /// The double-cover structure: coefficient 2 on base-coordinate pairs,
    /// 1 on the cover pair, and cross terms of coefficient 1 between each
    /// base coordinate and the conjugate cover coordinate (both ways).
    pub fn spin(vars: VariableSet) -> Self {
        let n = vars.n_base();
        let z = vars.spin_index().expect("cover coordinate required");
        let zb = vars.conj_index(z);
        let mut pairs = Vec::new();
        for j in 0..n {
            pairs.push((j, vars.conj_index(j), Rat::from_int(2)));
            pairs.push((j, zb, Rat::one()));
            pairs.push((z, vars.conj_index(j), Rat::one()));
        }
        pairs.push((z, zb, Rat::one()));
        BracketStructure { vars, pairs }
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn pairs(&self) -> &[(usize, usize, Rat)] {
        &self.pairs
    }

    /// The normalized bracket `B(f, g)`, extended from the pair table as an
    /// antisymmetric biderivation:
    /// `sum_pairs c x_h x_a (df/dx_h dg/dx_a - df/dx_a dg/dx_h)`.
    pub fn bracket(&self, f: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
        let arity = self.vars.arity();
        assert_eq!(f.arity(), arity);
        assert_eq!(g.arity(), arity);
        let mut out = LaurentPoly::zero(arity);
        for (h, a, c) in &self.pairs {
            let fh = f.partial_derivative(*h);
            let fa = f.partial_derivative(*a);
            if fh.is_zero() && fa.is_zero() {
                continue;
            }
            let gh = g.partial_derivative(*h);
            let ga = g.partial_derivative(*a);
            let mix = fh.mul(&ga).sub(&fa.mul(&gh));
            if mix.is_zero() {
                continue;
            }
            let mut exps = vec![0i32; arity];
            exps[*h] = 1;
            exps[*a] = 1;
            out = out.add(&mix.mul_monomial(&exps, c));
        }
        out
    }
}

/// One trial of the Jacobi audit.
#[derive(Debug, Serialize)]
pub struct JacobiTrial {
    pub residual_terms: usize,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct JacobiReport {
    pub trials: usize,
    pub failures: usize,
}

/// Checks `B(f, B(g,h)) + B(g, B(h,f)) + B(h, B(f,g)) = 0` exactly on the
/// given triples.
pub fn jacobi_check(
    structure: &BracketStructure,
    triples: &[(LaurentPoly, LaurentPoly, LaurentPoly)],
) -> JacobiReport {
    let mut failures = 0;
    for (f, g, h) in triples {
        let cyc = structure
            .bracket(f, &structure.bracket(g, h))
            .add(&structure.bracket(g, &structure.bracket(h, f)))
            .add(&structure.bracket(h, &structure.bracket(f, g)));
        if !cyc.is_zero() {
            failures += 1;
        }
    }
    JacobiReport {
        trials: triples.len(),
        failures,
    }
}

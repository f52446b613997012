//! Exact multivariate Laurent-polynomial arithmetic over conjugate variable
//! pairs.
//!
//! A `LaurentPoly` is a finite map from signed integer exponent vectors to
//! exact rational coefficients, kept in a canonical graded-lexicographic
//! term order with no stored zero coefficients. A `VariableSet` names the
//! variables and records the conjugation pairing between the holomorphic
//! block and the antiholomorphic block.

mod divide;
mod ideal;

pub use divide::exact_divide;
pub use ideal::{QuotientIdeal, RewriteRule};

use crate::rat::Rat;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Largest exponent magnitude the toolkit accepts. All constructions in the
/// supported examples stay far below this; exceeding it indicates runaway
/// input rather than a legitimate computation.
pub const MAX_EXP: i32 = 64;

#[derive(Debug, thiserror::Error)]
pub enum AlgebraError {
    #[error("variable {var} raised to a negative power has a non-monomial image")]
    NonInvertibleImage { var: usize },
    #[error("negative-exponent variable {var} evaluates to ~0 at the given point")]
    PoleAtPoint { var: usize },
    #[error("inexact division, remainder has {terms} term(s)")]
    InexactDivision {
        remainder: Box<LaurentPoly>,
        terms: usize,
    },
    #[error("quotient ideal rules are not of a supported confluent shape: {0}")]
    NonConfluentIdeal(String),
}

/// Exponent vector of a single monomial. Ordered graded-lexicographically:
/// larger total degree first, ties broken by the leftmost differing slot
/// (larger exponent first). This makes `BTreeMap` iteration canonical and
/// keeps serialized golden files stable.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mono(pub Vec<i32>);

impl Mono {
    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        other
            .total_degree()
            .cmp(&self.total_degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

fn check_exp(e: i32) -> i32 {
    assert!(
        e.abs() <= MAX_EXP,
        "exponent {e} exceeds the supported range ±{MAX_EXP}"
    );
    e
}

/// The ordered variable alphabet: `n_base` torus coordinates, an optional
/// extra coordinate for double covers, and the conjugate copy of each. The
/// conjugation pairing is the fixed-point-free involution swapping the two
/// blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariableSet {
    n_base: usize,
    spin: bool,
}

impl VariableSet {
    pub fn new(n_base: usize) -> Self {
        VariableSet {
            n_base,
            spin: false,
        }
    }

    pub fn with_spin(n_base: usize) -> Self {
        VariableSet { n_base, spin: true }
    }

    pub fn n_base(&self) -> usize {
        self.n_base
    }

    pub fn has_spin(&self) -> bool {
        self.spin
    }

    /// Number of holomorphic variables (base coordinates plus the cover
    /// coordinate when present).
    pub fn holo_count(&self) -> usize {
        self.n_base + usize::from(self.spin)
    }

    /// Total number of variables, conjugates included.
    pub fn arity(&self) -> usize {
        2 * self.holo_count()
    }

    /// Index of the cover coordinate, when the set has one.
    pub fn spin_index(&self) -> Option<usize> {
        self.spin.then_some(self.n_base)
    }

    pub fn is_holomorphic(&self, i: usize) -> bool {
        i < self.holo_count()
    }

    /// The conjugation involution on variable indices.
    pub fn conj_index(&self, i: usize) -> usize {
        let h = self.holo_count();
        assert!(i < 2 * h);
        if i < h {
            i + h
        } else {
            i - h
        }
    }

    pub fn name(&self, i: usize) -> String {
        let h = self.holo_count();
        let (bar, j) = if i < h { ("", i) } else { ("b", i - h) };
        if self.spin && j == self.n_base {
            format!("z{bar}")
        } else {
            format!("z{bar}{}", j + 1)
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        (0..self.arity()).find(|&i| self.name(i) == name)
    }

    pub fn names(&self) -> Vec<String> {
        (0..self.arity()).map(|i| self.name(i)).collect()
    }

    /// Mirrors an exponent vector through the conjugation pairing.
    pub fn mirror_exps(&self, exps: &[i32]) -> Vec<i32> {
        (0..exps.len())
            .map(|i| exps[self.conj_index(i)])
            .collect()
    }
}

/// A multivariate Laurent polynomial with exact rational coefficients.
///
/// Invariants: no zero coefficients are stored, terms iterate in the fixed
/// graded-lex order, and every exponent stays within `±MAX_EXP`.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    arity: usize,
    terms: BTreeMap<Mono, Rat>,
}

impl LaurentPoly {
    pub fn zero(arity: usize) -> Self {
        LaurentPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Rat) -> Self {
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert(Mono(vec![0; arity]), c);
        }
        p
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rat::one())
    }

    pub fn int(arity: usize, n: i64) -> Self {
        Self::constant(arity, Rat::from_int(n))
    }

    /// The monomial `c * prod_i x_i^{exps[i]}`.
    pub fn monomial(exps: Vec<i32>, c: Rat) -> Self {
        for &e in &exps {
            check_exp(e);
        }
        let arity = exps.len();
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert(Mono(exps), c);
        }
        p
    }

    /// The single variable `x_v`.
    pub fn var(arity: usize, v: usize) -> Self {
        assert!(v < arity);
        let mut exps = vec![0; arity];
        exps[v] = 1;
        Self::monomial(exps, Rat::one())
    }

    /// `x_v^e` (negative `e` allowed).
    pub fn var_pow(arity: usize, v: usize, e: i32) -> Self {
        assert!(v < arity);
        let mut exps = vec![0; arity];
        exps[v] = check_exp(e);
        Self::monomial(exps, Rat::one())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    /// Leading term in the canonical order.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next()
    }

    pub fn coeff(&self, exps: &[i32]) -> Rat {
        self.terms
            .get(&Mono(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rat {
        self.coeff(&vec![0; self.arity])
    }

    /// True when the polynomial is a single term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Largest total degree over the support (0 for the zero polynomial).
    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Degree in a single variable: (min, max) exponent over the support.
    pub fn degree_range(&self, v: usize) -> (i32, i32) {
        let mut lo = 0;
        let mut hi = 0;
        for m in self.terms.keys() {
            lo = lo.min(m.0[v]);
            hi = hi.max(m.0[v]);
        }
        (lo, hi)
    }

    fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        for &e in &m.0 {
            check_exp(e);
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = &*o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        LaurentPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut out = Self::zero(self.arity);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let exps: Vec<i32> = ma
                    .0
                    .iter()
                    .zip(&mb.0)
                    .map(|(&a, &b)| check_exp(a.checked_add(b).expect("exponent overflow")))
                    .collect();
                out.add_term(Mono(exps), ca * cb);
            }
        }
        out
    }

    /// Multiplies by a single monomial (unit shift).
    pub fn mul_monomial(&self, exps: &[i32], c: &Rat) -> Self {
        self.mul(&LaurentPoly::monomial(exps.to_vec(), c.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.arity);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Formal partial derivative with the Laurent rule
    /// `d(x^k)/dx = k x^{k-1}` for every integer `k`.
    pub fn partial_derivative(&self, v: usize) -> Self {
        assert!(v < self.arity, "variable {v} out of range");
        let mut out = Self::zero(self.arity);
        for (m, c) in &self.terms {
            let k = m.0[v];
            if k == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[v] = k - 1;
            out.add_term(Mono(exps), c * &Rat::from_int(k as i64));
        }
        out
    }

    /// Composes the polynomial with per-variable images. A variable carrying
    /// a negative exponent must map to an invertible (single-term) image.
    pub fn substitute(&self, images: &[LaurentPoly]) -> Result<LaurentPoly, AlgebraError> {
        assert_eq!(images.len(), self.arity, "one image per variable required");
        let target = images
            .first()
            .map(|p| p.arity)
            .unwrap_or(0);
        for im in images {
            assert_eq!(im.arity, target, "images must share an arity");
        }
        let mut out = LaurentPoly::zero(target);
        for (m, c) in &self.terms {
            let mut acc = LaurentPoly::constant(target, c.clone());
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let factor = if e > 0 {
                    images[v].pow(e as u32)
                } else {
                    let (im_m, im_c) = images[v]
                        .leading()
                        .filter(|_| images[v].is_monomial())
                        .ok_or(AlgebraError::NonInvertibleImage { var: v })?;
                    let inv_exps: Vec<i32> = im_m.0.iter().map(|&x| check_exp(-x)).collect();
                    LaurentPoly::monomial(inv_exps, im_c.recip()).pow((-e) as u32)
                };
                acc = acc.mul(&factor);
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// Mirrors through the conjugation pairing of `vars` (the bar
    /// involution: swaps each variable with its conjugate partner).
    pub fn conj_mirror(&self, vars: &VariableSet) -> Self {
        assert_eq!(self.arity, vars.arity());
        LaurentPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Mono(vars.mirror_exps(&m.0)), c.clone()))
                .collect(),
        }
    }

    /// Numerical evaluation at a complex point, term by term in canonical
    /// order. Conjugate consistency of the point is the caller's business.
    pub fn evaluate(&self, point: &[Complex64]) -> Result<Complex64, AlgebraError> {
        assert_eq!(point.len(), self.arity, "one value per variable required");
        const POLE_TOL: f64 = 1e-300;
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = Complex64::new(c.to_f64(), 0.0);
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if e < 0 && point[v].norm() < POLE_TOL {
                    return Err(AlgebraError::PoleAtPoint { var: v });
                }
                t *= point[v].powi(e);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Splits into bidegree-homogeneous components, where the bidegree of a
    /// monomial is (total holomorphic degree, total antiholomorphic degree)
    /// with the first `h` slots holomorphic.
    pub fn bidegree_components(&self, h: usize) -> BTreeMap<(i64, i64), LaurentPoly> {
        let mut out: BTreeMap<(i64, i64), LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let a: i64 = m.0[..h].iter().map(|&e| e as i64).sum();
            let b: i64 = m.0[h..].iter().map(|&e| e as i64).sum();
            out.entry((a, b))
                .or_insert_with(|| LaurentPoly::zero(self.arity))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// Canonical JSON form: ordered array of `{"exp": [...], "coef": "p/q"}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    serde_json::json!({ "exp": m.0, "coef": c.to_string() })
                })
                .collect(),
        )
    }

    pub fn from_json(v: &serde_json::Value, arity: usize) -> Result<Self, String> {
        let arr = v.as_array().ok_or("expected a JSON array of terms")?;
        let mut p = LaurentPoly::zero(arity);
        for t in arr {
            let exps: Vec<i32> = serde_json::from_value(t["exp"].clone())
                .map_err(|e| format!("bad exponent vector: {e}"))?;
            if exps.len() != arity {
                return Err(format!("exponent arity {} != {}", exps.len(), arity));
            }
            let c: Rat = t["coef"]
                .as_str()
                .ok_or("coef must be a string")?
                .parse()?;
            p.add_term(Mono(exps), c);
        }
        Ok(p)
    }

    /// Human-readable rendering with the given variable namer.
    pub fn render(&self, name: &dyn Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        name(v)
                    } else {
                        format!("{}^{}", name(v), e)
                    }
                })
                .collect();
            if vars.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(&vars.join("*"));
            }
        }
        out
    }

    pub fn render_with(&self, vars: &VariableSet) -> String {
        self.render(&|i| vars.name(i))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&|i| format!("x{i}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(arity: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var(arity, i)
    }

    #[test]
    fn like_terms_merge_and_cancel() {
        let z1 = v(2, 0);
        let sum = z1.add(&z1);
        assert_eq!(sum.coeff(&[1, 0]).to_string(), "2");
        assert!(z1.sub(&z1).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let z1 = v(2, 0);
        let z2 = v(2, 1);
        let p = z1.add(&z2).mul(&z1.sub(&z2));
        let expected = z1.pow(2).sub(&z2.pow(2));
        assert_eq!(p, expected);
    }

    #[test]
    fn laurent_power_rule() {
        // d(z^2 zb)/dz = 2 z zb, with vars (z, zb).
        let p = LaurentPoly::monomial(vec![2, 1], Rat::one());
        let d = p.partial_derivative(0);
        assert_eq!(d.coeff(&[1, 1]).to_string(), "2");
        // d(z^-1)/dz = -z^-2.
        let q = LaurentPoly::monomial(vec![-1, 0], Rat::one());
        assert_eq!(q.partial_derivative(0).coeff(&[-2, 0]).to_string(), "-1");
        // d(z1 z2)/dz1 = z2.
        let s2 = v(2, 0).mul(&v(2, 1));
        assert_eq!(s2.partial_derivative(0), v(2, 1));
    }

    #[test]
    fn substitution_torus_relation() {
        // p = z1 z2, z2 -> z1^{-1} gives 1.
        let p = v(2, 0).mul(&v(2, 1));
        let images = vec![
            LaurentPoly::var(1, 0),
            LaurentPoly::var_pow(1, 0, -1),
        ];
        let q = p.substitute(&images).unwrap();
        assert_eq!(q, LaurentPoly::one(1));
    }

    #[test]
    fn substitution_identity() {
        let zc = LaurentPoly::var_pow(1, 0, -1).add(&v(1, 0));
        let q = zc.substitute(&[LaurentPoly::var(1, 0)]).unwrap();
        assert_eq!(q, zc);
    }

    #[test]
    fn substitution_rejects_noninvertible_negative_image() {
        let p = LaurentPoly::var_pow(1, 0, -1);
        let image = v(1, 0).add(&LaurentPoly::one(1));
        match p.substitute(&[image]) {
            Err(AlgebraError::NonInvertibleImage { var: 0 }) => {}
            other => panic!("expected NonInvertibleImage, got {other:?}"),
        }
    }

    #[test]
    fn diagonal_merge_matches_curve_parametrization() {
        // sigma_1 = z1+z2+z3 under z1,z2 -> z, z3 -> z^{-2} gives 2z + z^-2.
        let s1 = v(3, 0).add(&v(3, 1)).add(&v(3, 2));
        let images = vec![
            LaurentPoly::var(1, 0),
            LaurentPoly::var(1, 0),
            LaurentPoly::var_pow(1, 0, -2),
        ];
        let q = s1.substitute(&images).unwrap();
        let expected = LaurentPoly::var(1, 0)
            .scale(&Rat::from_int(2))
            .add(&LaurentPoly::var_pow(1, 0, -2));
        assert_eq!(q, expected);
    }

    #[test]
    fn evaluation_elementary_symmetric() {
        let s1 = v(2, 0).add(&v(2, 1));
        let s2 = v(2, 0).mul(&v(2, 1));
        let pt = [Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0)];
        assert!((s1.evaluate(&pt).unwrap().re - 3.0).abs() < 1e-12);
        assert!((s2.evaluate(&pt).unwrap().re - 2.0).abs() < 1e-12);
    }

    #[test]
    fn evaluation_pole_detected() {
        let p = LaurentPoly::var_pow(1, 0, -1);
        match p.evaluate(&[Complex64::new(0.0, 0.0)]) {
            Err(AlgebraError::PoleAtPoint { var: 0 }) => {}
            other => panic!("expected PoleAtPoint, got {other:?}"),
        }
    }

    #[test]
    fn canonical_order_is_graded_lex() {
        // z1^2 (deg 2) before z1 (deg 1) before constant.
        let p = LaurentPoly::one(2)
            .add(&v(2, 0))
            .add(&v(2, 0).pow(2));
        let degrees: Vec<i64> = p.terms().map(|(m, _)| m.total_degree()).collect();
        assert_eq!(degrees, vec![2, 1, 0]);
    }

    #[test]
    fn variable_set_pairing() {
        let vs = VariableSet::with_spin(2);
        assert_eq!(vs.arity(), 6);
        assert_eq!(vs.names(), ["z1", "z2", "z", "zb1", "zb2", "zb"]);
        for i in 0..vs.arity() {
            let j = vs.conj_index(i);
            assert_ne!(i, j);
            assert_eq!(vs.conj_index(j), i);
        }
    }

    #[test]
    fn conj_mirror_swaps_blocks() {
        let vs = VariableSet::new(2); // z1 z2 zb1 zb2
        let p = LaurentPoly::monomial(vec![2, 0, 0, 1], Rat::one());
        let q = p.conj_mirror(&vs);
        assert_eq!(q.coeff(&[0, 1, 2, 0]).to_string(), "1");
    }

    #[test]
    fn json_roundtrip_canonical() {
        let p = v(2, 0)
            .pow(2)
            .sub(&v(2, 1).scale(&Rat::new(1, 3)));
        let j = p.to_json();
        let q = LaurentPoly::from_json(&j, 2).unwrap();
        assert_eq!(p, q);
        assert_eq!(serde_json::to_string(&j).unwrap(), serde_json::to_string(&q.to_json()).unwrap());
    }
}

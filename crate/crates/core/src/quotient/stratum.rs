//! Stratification by root multiplicities: clustering polynomial roots from
//! quotient coordinates, exactly when the input is rational and numerically
//! otherwise.

use crate::rat::Rat;
use num_complex::Complex64;
use serde::Serialize;

/// A stratum of the adjoint quotient, described by the multiplicity
/// partition of the characteristic roots. `complex_dim` is the number of
/// parts (the dimension of the stratum in the unitary chart; the
/// determinant-one quotient is one lower). `closure` lists the coarser
/// partitions whose strata lie in this stratum's closure.
#[derive(Debug, Clone, Serialize)]
pub struct StratumDescriptor {
    pub partition: Vec<usize>,
    pub complex_dim: usize,
    pub closure: Vec<Vec<usize>>,
    pub roots: Vec<(f64, f64)>,
    pub ambiguous: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum StratumError {
    #[error("the top coefficient invariant vanishes; point is off the model")]
    TopInvariantZero,
    #[error("root clustering did not converge")]
    NoConvergence,
}

/// All partitions obtainable by merging parts of `partition` (the strata
/// in the closure), coarsest included, the partition itself excluded.
fn coarsenings(partition: &[usize]) -> Vec<Vec<usize>> {
    fn set_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
        if items.is_empty() {
            return vec![vec![]];
        }
        let first = items[0];
        let rest = set_partitions(&items[1..]);
        let mut out = vec![];
        for p in rest {
            // first joins an existing block or starts its own.
            for i in 0..p.len() {
                let mut q = p.clone();
                q[i].push(first);
                out.push(q);
            }
            let mut q = p.clone();
            q.push(vec![first]);
            out.push(q);
        }
        out
    }
    let mut out: Vec<Vec<usize>> = vec![];
    for blocks in set_partitions(partition) {
        let mut merged: Vec<usize> = blocks.iter().map(|b| b.iter().sum()).collect();
        merged.sort_unstable_by(|a, b| b.cmp(a));
        if merged != partition && !out.contains(&merged) {
            out.push(merged);
        }
    }
    out.sort();
    out.dedup();
    out
}

fn descriptor(mut clusters: Vec<(Complex64, usize)>, ambiguous: bool) -> StratumDescriptor {
    clusters.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.re.partial_cmp(&b.0.re).unwrap()));
    let partition: Vec<usize> = clusters.iter().map(|c| c.1).collect();
    StratumDescriptor {
        complex_dim: partition.len(),
        closure: coarsenings(&partition),
        roots: clusters.iter().map(|c| (c.0.re, c.0.im)).collect(),
        partition,
        ambiguous,
    }
}

/// Monic characteristic coefficients from the elementary invariant values:
/// `w^n - s_1 w^{n-1} + ... + (-1)^n s_n`, descending degree.
fn monic_coeffs(sigmas: &[Complex64]) -> Vec<Complex64> {
    let n = sigmas.len();
    let mut c = vec![Complex64::new(1.0, 0.0)];
    for (k, s) in sigmas.iter().enumerate() {
        let sign = if (k + 1) % 2 == 1 { -1.0 } else { 1.0 };
        c.push(sign * s);
    }
    debug_assert_eq!(c.len(), n + 1);
    c
}

fn eval_poly(c: &[Complex64], w: Complex64) -> Complex64 {
    c.iter().fold(Complex64::new(0.0, 0.0), |acc, &k| acc * w + k)
}

fn derivative(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    (0..n).map(|k| c[k] * (n - k) as f64).collect()
}

/// Simultaneous root iteration on a monic polynomial. Converges fast for
/// separated roots; multiple roots converge to a cluster whose diameter
/// reflects the coefficient noise, which the validation step then
/// collapses.
fn all_roots(c: &[Complex64]) -> Result<Vec<Complex64>, StratumError> {
    let n = c.len() - 1;
    if n == 0 {
        return Ok(vec![]);
    }
    // Cauchy-style radius bound.
    let radius = 1.0
        + c.iter()
            .skip(1)
            .map(|k| k.norm())
            .fold(0.0f64, f64::max);
    let mut roots: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            Complex64::from_polar(0.5 * radius.max(1.0), angle)
        })
        .collect();
    for _ in 0..400 {
        let mut shift = 0.0f64;
        for i in 0..n {
            let num = eval_poly(c, roots[i]);
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    den *= roots[i] - roots[j];
                }
            }
            if den.norm() < 1e-280 {
                // Perturb coincident iterates.
                roots[i] += Complex64::new(1e-8, 1e-8);
                shift = f64::MAX;
                continue;
            }
            let delta = num / den;
            roots[i] -= delta;
            shift = shift.max(delta.norm());
        }
        if shift < 1e-14 * radius {
            break;
        }
    }
    let residual_scale: f64 = c.iter().map(|k| k.norm()).sum::<f64>() * radius.powi(n as i32);
    for &r in &roots {
        if eval_poly(c, r).norm() > 1e-6 * residual_scale.max(1.0) {
            return Err(StratumError::NoConvergence);
        }
    }
    Ok(roots)
}

/// Validates a multiplicity-`m` hypothesis for a cluster around `center`:
/// refines the center as a simple root of the (m-1)-th derivative and
/// requires the lower derivatives to vanish there relative to the
/// coefficient scale.
fn validate_multiplicity(c: &[Complex64], center: Complex64, m: usize) -> Option<Complex64> {
    let mut derivs = vec![c.to_vec()];
    for _ in 0..m {
        derivs.push(derivative(derivs.last().unwrap()));
    }
    // Newton on P^(m-1), simple root there.
    let mut w = center;
    for _ in 0..60 {
        let f = eval_poly(&derivs[m - 1], w);
        let df = eval_poly(&derivs[m], w);
        if df.norm() < 1e-250 {
            return None;
        }
        let step = f / df;
        w -= step;
        if step.norm() < 1e-15 * (1.0 + w.norm()) {
            break;
        }
    }
    // Residual scales: magnitude of the i-th derivative's coefficients at |w|.
    for (i, d) in derivs.iter().enumerate().take(m) {
        let scale: f64 = d
            .iter()
            .enumerate()
            .map(|(k, coef)| coef.norm() * (1.0 + w.norm()).powi((d.len() - 1 - k) as i32))
            .sum();
        if eval_poly(d, w).norm() > 1e-9 * scale.max(1.0) {
            return None;
        }
        let _ = i;
    }
    Some(w)
}

/// Classifies a quotient point by the multiplicity partition of the roots
/// of its characteristic polynomial.
///
/// Roots are estimated simultaneously, grouped by an exploratory gap
/// threshold, and every multi-root group is confirmed by derivative
/// refinement; groups that fail confirmation fall back to the strict merge
/// rule (gap below `1e-6 (1 + max|root|)`), with gaps within a factor ten
/// of that threshold flagged as ambiguous rather than silently resolved.
pub fn classify_stratum(sigmas: &[Complex64]) -> Result<StratumDescriptor, StratumError> {
    let c = monic_coeffs(sigmas);
    let roots = all_roots(&c)?;
    let max_norm = roots.iter().map(|r| r.norm()).fold(0.0f64, f64::max);
    let explore = 1e-3 * (1.0 + max_norm);
    let strict = 1e-6 * (1.0 + max_norm);

    // Union-find clustering at the exploratory threshold.
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if (roots[i] - roots[j]).norm() <= explore {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }

    let mut clusters: Vec<(Complex64, usize)> = vec![];
    let mut ambiguous = false;
    for (_, members) in groups {
        let m = members.len();
        if m == 1 {
            clusters.push((roots[members[0]], 1));
            continue;
        }
        let mean = members.iter().map(|&i| roots[i]).sum::<Complex64>() / m as f64;
        if let Some(center) = validate_multiplicity(&c, mean, m) {
            clusters.push((center, m));
            continue;
        }
        // Fall back to the strict pairwise rule inside the group.
        let mut sub: Vec<Vec<usize>> = vec![];
        for &i in &members {
            let mut placed = false;
            for s in sub.iter_mut() {
                if s.iter().any(|&j| (roots[i] - roots[j]).norm() <= strict) {
                    s.push(i);
                    placed = true;
                    break;
                }
            }
            if !placed {
                sub.push(vec![i]);
            }
        }
        for s in &sub {
            let center = s.iter().map(|&i| roots[i]).sum::<Complex64>() / s.len() as f64;
            clusters.push((center, s.len()));
        }
        // Near-threshold gaps are reported, not silently resolved.
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                let gap = (roots[i] - roots[j]).norm();
                if gap > strict / 10.0 && gap < strict * 10.0 {
                    ambiguous = true;
                }
            }
        }
    }
    Ok(descriptor(clusters, ambiguous))
}

/// Exact classification for rational invariant values: the square-free
/// chain of the characteristic polynomial over the rationals gives the
/// multiplicity partition with no numerical tolerance at all.
pub fn classify_stratum_exact(sigmas: &[Rat]) -> StratumDescriptor {
    let n = sigmas.len();
    // Coefficients ascending for the exact routine.
    let mut coeffs: Vec<Rat> = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    for (k, s) in sigmas.iter().enumerate() {
        let sign = if (k + 1) % 2 == 1 {
            -Rat::one()
        } else {
            Rat::one()
        };
        coeffs[n - (k + 1)] = sign * s.clone();
    }
    let p = UniPoly::new(coeffs);
    let mut parts: Vec<usize> = vec![];
    let mut roots: Vec<Complex64> = vec![];
    // Yun-style square-free decomposition: factors of multiplicity m.
    let dp = p.derivative();
    let mut a = p.gcd(&dp);
    let mut b = p.divide_exact(&a);
    let mut m = 1usize;
    while b.degree() > 0 {
        let c = b.gcd(&a);
        let factor = b.divide_exact(&c); // product of roots with multiplicity m
        if factor.degree() > 0 {
            let fc: Vec<Complex64> = factor
                .coeffs_descending()
                .iter()
                .map(|r| Complex64::new(r.to_f64(), 0.0))
                .collect();
            if let Ok(rs) = all_roots(&fc) {
                for r in rs {
                    parts.push(m);
                    roots.push(r);
                }
            }
        }
        a = a.divide_exact(&c);
        b = c;
        m += 1;
    }
    let clusters: Vec<(Complex64, usize)> =
        roots.into_iter().zip(parts.iter().copied()).collect();
    descriptor(clusters, false)
}

/// Dense univariate polynomial over the rationals, ascending coefficients,
/// used only for the exact square-free chain.
struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Rat::from_int(k as i64))
                .collect(),
        )
    }

    fn monic(&self) -> UniPoly {
        let lead = self.coeffs.last().expect("nonzero").clone();
        UniPoly::new(self.coeffs.iter().map(|c| c / &lead).collect())
    }

    fn rem(&self, other: &UniPoly) -> UniPoly {
        let mut r = self.coeffs.clone();
        let d = other.degree();
        let lead = other.coeffs.last().unwrap().clone();
        while r.len() > d {
            let k = r.len() - 1;
            let f = &r[k] / &lead;
            if !f.is_zero() {
                for i in 0..=d {
                    let idx = k - d + i;
                    let delta = &f * &other.coeffs[i];
                    r[idx] = &r[idx] - &delta;
                }
            }
            r.pop();
        }
        UniPoly::new(r)
    }

    fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = UniPoly::new(self.coeffs.clone());
        let mut b = UniPoly::new(other.coeffs.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    fn divide_exact(&self, other: &UniPoly) -> UniPoly {
        let mut r = self.coeffs.clone();
        let d = other.degree();
        let lead = other.coeffs.last().unwrap().clone();
        let mut q = vec![Rat::zero(); self.coeffs.len().saturating_sub(d)];
        while r.len() > d {
            let k = r.len() - 1;
            let f = &r[k] / &lead;
            q[k - d] = f.clone();
            for i in 0..=d {
                let idx = k - d + i;
                let delta = &f * &other.coeffs[i];
                r[idx] = &r[idx] - &delta;
            }
            r.pop();
        }
        debug_assert!(UniPoly::new(r).is_zero(), "division must be exact");
        UniPoly::new(q)
    }

    fn coeffs_descending(&self) -> Vec<Rat> {
        let mut c = self.coeffs.clone();
        c.reverse();
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn distinct_roots_are_top_stratum() {
        // Roots 1, 2, 4: sigma = (7, 14, 8).
        let d = classify_stratum(&[c(7.0, 0.0), c(14.0, 0.0), c(8.0, 0.0)]).unwrap();
        assert_eq!(d.partition, vec![1, 1, 1]);
        assert_eq!(d.complex_dim, 3);
        assert!(!d.ambiguous);
    }

    #[test]
    fn double_root_detected() {
        // Roots {1, 1, 2}: sigma = (4, 5, 2).
        let d = classify_stratum(&[c(4.0, 0.0), c(5.0, 0.0), c(2.0, 0.0)]).unwrap();
        assert_eq!(d.partition, vec![2, 1]);
        assert_eq!(d.closure, vec![vec![3]]);
    }

    #[test]
    fn triple_root_detected() {
        // (w-1)^3: sigma = (3, 3, 1).
        let d = classify_stratum(&[c(3.0, 0.0), c(3.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert_eq!(d.partition, vec![3]);
        assert_eq!(d.complex_dim, 1);
    }

    #[test]
    fn complex_central_points() {
        // Roots all equal to a primitive cube root of unity.
        let eta = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        let sig = [3.0 * eta, 3.0 * eta * eta, Complex64::new(1.0, 0.0)];
        let d = classify_stratum(&sig).unwrap();
        assert_eq!(d.partition, vec![3]);
    }

    #[test]
    fn exact_classification_round_trip() {
        // Partitions of n <= 5 with well-separated rational roots.
        let root_pool = [2i64, -3, 5, 7, -11];
        for n in 1..=5usize {
            for partition in partitions(n) {
                // Expand prod (w - r_i)^{m_i} exactly.
                let mut poly = UniPoly::new(vec![Rat::one()]);
                for (i, &m) in partition.iter().enumerate() {
                    for _ in 0..m {
                        let r = Rat::from_int(root_pool[i]);
                        let factor = UniPoly::new(vec![-r, Rat::one()]);
                        poly = multiply(&poly, &factor);
                    }
                }
                // Read off the invariant values with alternating signs.
                let coeffs = poly.coeffs_descending();
                let sigmas: Vec<Rat> = coeffs
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(k, c)| {
                        if k % 2 == 1 {
                            -c.clone()
                        } else {
                            c.clone()
                        }
                    })
                    .collect();
                let d = classify_stratum_exact(&sigmas);
                let mut expect = partition.clone();
                expect.sort_unstable_by(|a, b| b.cmp(a));
                assert_eq!(d.partition, expect, "n={n} partition {partition:?}");
            }
        }
    }

    fn multiply(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let mut out = vec![Rat::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                let delta = x * y;
                out[i + j] = &out[i + j] + &delta;
            }
        }
        UniPoly::new(out)
    }

    fn partitions(n: usize) -> Vec<Vec<usize>> {
        fn rec(n: usize, max: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = vec![];
            for first in (1..=n.min(max)).rev() {
                for mut rest in rec(n - first, first) {
                    let mut v = vec![first];
                    v.append(&mut rest);
                    out.push(v);
                }
            }
            out
        }
        rec(n, n)
    }

    #[test]
    fn coarsening_lattice() {
        let c = coarsenings(&[2, 1, 1]);
        assert!(c.contains(&vec![4]));
        assert!(c.contains(&vec![3, 1]));
        assert!(c.contains(&vec![2, 2]));
        assert!(!c.contains(&vec![2, 1, 1]));
    }
}

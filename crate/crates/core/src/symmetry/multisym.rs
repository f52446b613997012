//! The classical multisymmetric generator families on conjugate variable
//! pairs.

use super::{build_weyl_group, Family, SignedMono};
use crate::algebra::{LaurentPoly, VariableSet};
use crate::rat::Rat;

#[derive(Debug, thiserror::Error)]
#[error("index pair ({r},{s}) out of range for n = {n}")]
pub struct IndexOutOfRange {
    pub n: usize,
    pub r: usize,
    pub s: usize,
}

/// Elementary bisymmetric generator of bidegree `(r, s)`: the orbit sum,
/// under the simultaneous permutation action, of a square-free monomial in
/// `r` plain and `s` conjugate variables on disjoint index sets
/// (`z_1 .. z_r zb_{r+1} .. zb_{r+s}`). Equivalently the polarization of the
/// elementary symmetric polynomial `e_{r+s}`; with `s = 0` it is `e_r`
/// itself.
pub fn elementary_multisym(
    n: usize,
    r: usize,
    s: usize,
) -> Result<LaurentPoly, IndexOutOfRange> {
    if r + s < 1 || r + s > n {
        return Err(IndexOutOfRange { n, r, s });
    }
    let group = build_weyl_group(Family::A, n).expect("rank validated");
    let arity = group.vars().arity();
    let mut exps = vec![0i32; arity];
    for e in exps.iter_mut().take(r) {
        *e = 1;
    }
    for j in 0..s {
        exps[n + r + j] = 1;
    }
    Ok(group.orbit_sum(&SignedMono {
        negative: false,
        exps,
    }))
}

/// Bisymmetric power sum `sum_j z_j^r zb_j^s`.
pub fn power_sum_multisym(n: usize, r: usize, s: usize) -> LaurentPoly {
    assert!(r + s >= 1, "power sum needs a positive total degree");
    let vars = VariableSet::new(n);
    let arity = vars.arity();
    let mut out = LaurentPoly::zero(arity);
    for j in 0..n {
        let mut exps = vec![0i32; arity];
        exps[j] = r as i32;
        exps[n + j] = s as i32;
        out = out.add(&LaurentPoly::monomial(exps, Rat::one()));
    }
    out
}

/// Elementary symmetric polynomial `e_m` in an arbitrary list of
/// polynomials (all of one arity).
pub fn elementary_symmetric(items: &[LaurentPoly], m: usize) -> LaurentPoly {
    assert!(!items.is_empty());
    let arity = items[0].arity();
    if m == 0 {
        return LaurentPoly::one(arity);
    }
    if m > items.len() {
        return LaurentPoly::zero(arity);
    }
    // Prefix recursion e_d(x1..xk) = e_d(x1..x{k-1}) + x_k e_{d-1}(x1..x{k-1}),
    // updated in place from the top degree down.
    let mut e: Vec<LaurentPoly> = vec![LaurentPoly::one(arity)];
    e.resize(m + 1, LaurentPoly::zero(arity));
    for item in items {
        for d in (1..=m).rev() {
            let t = item.mul(&e[d - 1]);
            e[d] = e[d].add(&t);
        }
    }
    e.swap_remove(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct subset-sum construction of the elementary symmetric
    /// polynomial, independent of the orbit machinery.
    fn elementary_by_subsets(n: usize, m: usize) -> LaurentPoly {
        let arity = 2 * n;
        let mut out = LaurentPoly::zero(arity);
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != m {
                continue;
            }
            let mut exps = vec![0i32; arity];
            for j in 0..n {
                if mask & (1 << j) != 0 {
                    exps[j] = 1;
                }
            }
            out = out.add(&LaurentPoly::monomial(exps, Rat::one()));
        }
        out
    }

    #[test]
    fn sigma_11_n2() {
        let s = elementary_multisym(2, 1, 1).unwrap();
        assert_eq!(s.num_terms(), 2);
        assert_eq!(s.coeff(&[1, 0, 0, 1]).to_string(), "1");
        assert_eq!(s.coeff(&[0, 1, 1, 0]).to_string(), "1");
    }

    #[test]
    fn rho_n3_has_three_terms() {
        // rho = z1 zb2 z3 + z2 zb3 z1 + z3 zb1 z2.
        let rho = elementary_multisym(3, 2, 1).unwrap();
        assert_eq!(rho.num_terms(), 3);
        assert_eq!(rho.coeff(&[1, 0, 1, 0, 1, 0]).to_string(), "1");
        assert_eq!(rho.coeff(&[1, 1, 0, 0, 0, 1]).to_string(), "1");
        assert_eq!(rho.coeff(&[0, 1, 1, 1, 0, 0]).to_string(), "1");
    }

    #[test]
    fn pure_holomorphic_specializes_to_elementary_symmetric() {
        for n in 1..=4 {
            for m in 1..=n {
                let a = elementary_multisym(n, m, 0).unwrap();
                let b = elementary_by_subsets(n, m);
                assert_eq!(a, b, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn power_sums() {
        let t = power_sum_multisym(2, 1, 1);
        assert_eq!(t.num_terms(), 2);
        assert_eq!(t.coeff(&[1, 0, 1, 0]).to_string(), "1");
        // tau_(1,0) equals sigma_(1,0).
        assert_eq!(
            power_sum_multisym(3, 1, 0),
            elementary_multisym(3, 1, 0).unwrap()
        );
        // Single variable: tau_(2,0) = z1^2.
        assert_eq!(
            power_sum_multisym(1, 2, 0),
            LaurentPoly::var_pow(2, 0, 2)
        );
    }

    #[test]
    fn index_range_enforced() {
        assert!(elementary_multisym(2, 2, 1).is_err());
        assert!(elementary_multisym(2, 0, 0).is_err());
    }

    #[test]
    fn newton_identity_links_the_two_families() {
        // tau_m - sigma_1 tau_{m-1} + ... + (-1)^m m sigma_m = 0.
        for n in 1..=4 {
            for m in 1..=n {
                let mut acc = power_sum_multisym(n, m, 0);
                for i in 1..m {
                    let sign = if i % 2 == 0 { Rat::one() } else { -Rat::one() };
                    let term = elementary_multisym(n, i, 0)
                        .unwrap()
                        .mul(&power_sum_multisym(n, m - i, 0))
                        .scale(&sign);
                    acc = acc.add(&term);
                }
                let sign = if m % 2 == 0 { Rat::one() } else { -Rat::one() };
                let last = elementary_multisym(n, m, 0)
                    .unwrap()
                    .scale(&(sign * Rat::from_int(m as i64)));
                acc = acc.add(&last);
                assert!(acc.is_zero(), "Newton identity failed at n={n} m={m}");
            }
        }
    }

    #[test]
    fn elementary_symmetric_of_list() {
        // e_2(x, y, z) over three single variables.
        let x = LaurentPoly::var(3, 0);
        let y = LaurentPoly::var(3, 1);
        let z = LaurentPoly::var(3, 2);
        let e2 = elementary_symmetric(&[x.clone(), y.clone(), z.clone()], 2);
        let expected = x.mul(&y).add(&x.mul(&z)).add(&y.mul(&z));
        assert_eq!(e2, expected);
        let e0 = elementary_symmetric(&[x.clone()], 0);
        assert_eq!(e0, LaurentPoly::one(3));
        assert!(elementary_symmetric(&[x], 2).is_zero());
    }
}

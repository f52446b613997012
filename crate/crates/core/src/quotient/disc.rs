//! Discriminants of univariate polynomials through the Sylvester resultant,
//! symbolically over coefficient variables and numerically.

use crate::algebra::{exact_divide, LaurentPoly};
use crate::rat::Rat;
use num_complex::Complex64;

/// Determinant of a square matrix of polynomials by cofactor expansion
/// along the first column. Sizes stay small (degree <= 5), so exact
/// expansion is fine.
fn poly_det(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let size = m.len();
    let arity = m[0][0].arity();
    if size == 1 {
        return m[0][0].clone();
    }
    let mut acc = LaurentPoly::zero(arity);
    for row in 0..size {
        if m[row][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPoly>> = (0..size)
            .filter(|&r| r != row)
            .map(|r| m[r][1..].to_vec())
            .collect();
        let mut term = m[row][0].mul(&poly_det(&minor));
        if row % 2 == 1 {
            term = term.neg();
        }
        acc = acc.add(&term);
    }
    acc
}

/// Sylvester matrix of `p` (degree n) and `q` (degree m), entries drawn
/// from the provided coefficient polynomials in descending degree order.
fn sylvester(p: &[LaurentPoly], q: &[LaurentPoly]) -> Vec<Vec<LaurentPoly>> {
    let n = p.len() - 1;
    let m = q.len() - 1;
    let size = n + m;
    let arity = p[0].arity();
    let mut rows = vec![vec![LaurentPoly::zero(arity); size]; size];
    for i in 0..m {
        for (j, c) in p.iter().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..n {
        for (j, c) in q.iter().enumerate() {
            rows[m + i][i + j] = c.clone();
        }
    }
    rows
}

/// The discriminant of `a_0 w^n + a_1 w^{n-1} + ... + a_n` as an exact
/// polynomial in the coefficient variables `a_0..a_n` (arity n+1):
/// `(-1)^{n(n-1)/2} Res(P, P') / a_0`.
pub fn discriminant_symbolic(n: usize) -> LaurentPoly {
    assert!(n >= 2, "discriminant needs degree at least 2");
    let arity = n + 1;
    let p: Vec<LaurentPoly> = (0..=n).map(|k| LaurentPoly::var(arity, k)).collect();
    let dp: Vec<LaurentPoly> = (0..n)
        .map(|k| p[k].scale(&Rat::from_int((n - k) as i64)))
        .collect();
    let res = poly_det(&sylvester(&p, &dp));
    let quo = exact_divide(&res, &p[0]).expect("a_0 divides the resultant");
    if (n * (n - 1) / 2) % 2 == 1 {
        quo.neg()
    } else {
        quo
    }
}

/// Numeric discriminant of the polynomial with the given coefficients in
/// descending degree order. The leading coefficient must be nonzero.
pub fn discriminant_eval(coeffs: &[Complex64]) -> Complex64 {
    let n = coeffs.len() - 1;
    assert!(n >= 2, "discriminant needs degree at least 2");
    assert!(
        coeffs[0].norm() > 0.0,
        "degenerate leading coefficient"
    );
    let dp: Vec<Complex64> = (0..n)
        .map(|k| coeffs[k] * (n - k) as f64)
        .collect();
    let size = 2 * n - 1;
    let mut m = nalgebra::DMatrix::<nalgebra::Complex<f64>>::zeros(size, size);
    for i in 0..n - 1 {
        for (j, c) in coeffs.iter().enumerate() {
            m[(i, i + j)] = nalgebra::Complex::new(c.re, c.im);
        }
    }
    for i in 0..n {
        for (j, c) in dp.iter().enumerate() {
            m[(n - 1 + i, i + j)] = nalgebra::Complex::new(c.re, c.im);
        }
    }
    let det = m.lu().determinant();
    let res = Complex64::new(det.re, det.im);
    let sign = if (n * (n - 1) / 2) % 2 == 1 { -1.0 } else { 1.0 };
    sign * res / coeffs[0]
}

/// The discriminant of the characteristic-style polynomial
/// `w^n - s_1 w^{n-1} + s_2 w^{n-2} - ... + (-1)^n s_n`, as a polynomial in
/// name variables `s_1..s_n` (arity `target_arity`, slots `slots[k]` for
/// `s_{k+1}`).
pub fn discriminant_in_coeffs(n: usize, target_arity: usize, slots: &[usize]) -> LaurentPoly {
    assert_eq!(slots.len(), n);
    let d = discriminant_symbolic(n);
    let mut images = Vec::with_capacity(n + 1);
    images.push(LaurentPoly::one(target_arity)); // a_0 = 1
    for (k, &slot) in slots.iter().enumerate() {
        let sign = if (k + 1) % 2 == 1 {
            -Rat::one()
        } else {
            Rat::one()
        };
        images.push(LaurentPoly::var(target_arity, slot).scale(&sign));
    }
    d.substitute(&images).expect("nonnegative powers only")
}

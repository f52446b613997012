use adq_core::quotient::{TorusModel, ModelFamily};
use adq_core::poisson::invariant_dims;
use adq_core::algebra::QuotientIdeal;
use adq_core::{LaurentPoly, Rat};

fn main() {
    let model = TorusModel::build(ModelFamily::U, 3).unwrap();
    let dims = invariant_dims(model.weyl(), &QuotientIdeal::trivial(6), 4);
    for ((a, b), d) in dims {
        if a + b == 4 { println!("bidegree ({a},{b}): dim {d}"); }
    }
    // Values of the eight candidate generator monomials at several points,
    // to find a linear relation if one exists.
    let g = |n: &str| model.generator(n).unwrap().poly.clone();
    let monos: Vec<(&str, LaurentPoly)> = vec![
        ("s1^2 sb1^2", g("sigma_1").pow(2).mul(&g("sigmabar_1").pow(2))),
        ("s1^2 sb2", g("sigma_1").pow(2).mul(&g("sigmabar_2"))),
        ("s2 sb1^2", g("sigma_2").mul(&g("sigmabar_1").pow(2))),
        ("s2 sb2", g("sigma_2").mul(&g("sigmabar_2"))),
        ("s1 sb1 sg", g("sigma_1").mul(&g("sigmabar_1")).mul(&g("sigma"))),
        ("sg^2", g("sigma").pow(2)),
        ("rho sb1", g("rho").mul(&g("sigmabar_1"))),
        ("rhobar s1", g("rhobar").mul(&g("sigma_1"))),
    ];
    // Exact rank over Q via RowSpan on coefficient vectors.
    use std::collections::BTreeMap;
    let mut support: BTreeMap<Vec<i32>, usize> = BTreeMap::new();
    for (_, p) in &monos {
        for (m, _) in p.terms() { let l = support.len(); support.entry(m.0.clone()).or_insert(l); }
    }
    let cols = support.len();
    let vecs: Vec<Vec<Rat>> = monos.iter().map(|(_, p)| {
        let mut v = vec![Rat::zero(); cols];
        for (m, c) in p.terms() { v[support[&m.0]] = c.clone(); }
        v
    }).collect();
    // naive rank
    let mut rank = 0; let mut basis: Vec<Vec<Rat>> = vec![];
    for v in &vecs {
        let mut w = v.clone();
        for b in &basis {
            let pivot = b.iter().position(|x| !x.is_zero()).unwrap();
            if !w[pivot].is_zero() {
                let f = w[pivot].clone();
                let piv = b[pivot].clone();
                for (x, y) in w.iter_mut().zip(b.iter()) { *x = &*x - &(&(&f / &piv) * y); }
            }
        }
        if w.iter().any(|x| !x.is_zero()) { basis.push(w); rank += 1; }
    }
    println!("monomial count 8, rank {rank}");
}

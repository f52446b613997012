//! Exact rational linear algebra: row reduction and deterministic solving
//! for the rewrite and closure machinery.

use crate::rat::Rat;

/// A dense matrix over the rationals, row major.
#[derive(Clone, Debug)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// An incremental row-reduced span over Q. Rows are kept in reduced echelon
/// form keyed by pivot column; insertion order does not affect the resulting
/// span.
#[derive(Clone, Debug, Default)]
pub struct RowSpan {
    /// (pivot column, row) with the pivot entry normalized to 1.
    rows: Vec<(usize, Vec<Rat>)>,
}

impl RowSpan {
    pub fn new() -> Self {
        RowSpan::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the span; returns the residual.
    pub fn residual(&self, mut v: Vec<Rat>) -> Vec<Rat> {
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let f = v[*pivot].clone();
                for (x, r) in v.iter_mut().zip(row.iter()) {
                    *x -= &f * r;
                }
            }
        }
        v
    }

    /// Inserts a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, v: Vec<Rat>) -> bool {
        let mut res = self.residual(v);
        let Some(pivot) = res.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = res[pivot].clone();
        for x in res.iter_mut() {
            *x = &*x / &lead;
        }
        // Back-substitute into existing rows to keep reduced form.
        for (_, row) in self.rows.iter_mut() {
            if !row[pivot].is_zero() {
                let f = row[pivot].clone();
                for (x, r) in row.iter_mut().zip(res.iter()) {
                    *x -= &f * r;
                }
            }
        }
        self.rows.push((pivot, res));
        self.rows.sort_by_key(|(p, _)| *p);
        true
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.residual(v.to_vec()).iter().all(|x| x.is_zero())
    }
}

/// Solves `A x = b` exactly. Pivoting scans columns left to right, so the
/// particular solution returned is supported on the lexicographically
/// earliest independent column set, with free variables set to zero; the
/// outcome is deterministic for a fixed column order.
pub fn solve_exact(a: &RatMatrix, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(a.rows, b.len());
    let mut m = RatMatrix::zeros(a.rows, a.cols + 1);
    for r in 0..a.rows {
        for c in 0..a.cols {
            m.set(r, c, a.at(r, c).clone());
        }
        m.set(r, a.cols, b[r].clone());
    }
    let mut pivots: Vec<(usize, usize)> = vec![]; // (row, col)
    let mut rank = 0usize;
    for col in 0..a.cols {
        let Some(pr) = (rank..a.rows).find(|&r| !m.at(r, col).is_zero()) else {
            continue;
        };
        m.swap_rows(rank, pr);
        let inv = m.at(rank, col).recip();
        for c in col..=a.cols {
            let v = m.at(rank, c) * &inv;
            m.set(rank, c, v);
        }
        for r in 0..a.rows {
            if r != rank && !m.at(r, col).is_zero() {
                let f = m.at(r, col).clone();
                for c in col..=a.cols {
                    let v = m.at(r, c) - &(&f * m.at(rank, c));
                    m.set(r, c, v);
                }
            }
        }
        pivots.push((rank, col));
        rank += 1;
        if rank == a.rows {
            break;
        }
    }
    // Consistency: no nonzero rhs in a zero row.
    for r in rank..a.rows {
        if !m.at(r, a.cols).is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); a.cols];
    for (r, c) in pivots {
        x[c] = m.at(r, a.cols).clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn solve_simple_system() {
        // x + y = 3, x - y = 1 -> (2, 1).
        let mut a = RatMatrix::zeros(2, 2);
        a.set(0, 0, r(1, 1));
        a.set(0, 1, r(1, 1));
        a.set(1, 0, r(1, 1));
        a.set(1, 1, r(-1, 1));
        let x = solve_exact(&a, &[r(3, 1), r(1, 1)]).unwrap();
        assert_eq!(x, vec![r(2, 1), r(1, 1)]);
    }

    #[test]
    fn inconsistent_system_rejected() {
        let mut a = RatMatrix::zeros(2, 1);
        a.set(0, 0, r(1, 1));
        a.set(1, 0, r(2, 1));
        assert!(solve_exact(&a, &[r(1, 1), r(3, 1)]).is_none());
    }

    #[test]
    fn underdetermined_prefers_early_columns() {
        // x + y = 1 has solution (1, 0) with the left-to-right pivot rule.
        let mut a = RatMatrix::zeros(1, 2);
        a.set(0, 0, r(1, 1));
        a.set(0, 1, r(1, 1));
        let x = solve_exact(&a, &[r(1, 1)]).unwrap();
        assert_eq!(x, vec![r(1, 1), r(0, 1)]);
    }

    #[test]
    fn row_span_dimension() {
        let mut span = RowSpan::new();
        assert!(span.insert(vec![r(1, 1), r(2, 1), r(0, 1)]));
        assert!(span.insert(vec![r(0, 1), r(1, 1), r(1, 1)]));
        // Dependent vector.
        assert!(!span.insert(vec![r(1, 1), r(3, 1), r(1, 1)]));
        assert_eq!(span.dim(), 2);
        assert!(span.contains(&[r(2, 1), r(5, 1), r(1, 1)]));
        assert!(!span.contains(&[r(0, 1), r(0, 1), r(1, 1)]));
    }
}

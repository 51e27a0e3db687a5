//! Small exact linear algebra over the rationals: rank and nullspace by
//! Gaussian elimination. Crate-internal; used for classifying fiber maps.

#![allow(clippy::needless_range_loop)]

use crate::exactalg::Rational;

/// Reduces a copy of the matrix to row echelon form; returns (echelon rows,
/// pivot column per used row).
fn echelon(rows: &[Vec<Rational>], ncols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.resize(ncols, Rational::zero());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..ncols {
        let Some(pr) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pr);
        let inv = m[row][col].recip().expect("nonzero pivot");
        for c in col..ncols {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..ncols {
                    let delta = &factor * &m[row][c];
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    (m, pivots)
}

pub(crate) fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    echelon(rows, ncols).1.len()
}

/// A basis of the right nullspace of the matrix.
pub(crate) fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let (m, pivots) = echelon(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rational::zero(); ncols];
            v[fc] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[r][fc];
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(vals: &[i64]) -> Vec<Rational> {
        vals.iter().map(|&v| Rational::from_int(v)).collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let m = vec![row(&[1, 2, 3]), row(&[2, 4, 6]), row(&[0, 1, 1])];
        assert_eq!(rank(&m, 3), 2);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 1);
        for r in &m {
            let dot = r
                .iter()
                .zip(&ns[0])
                .fold(Rational::zero(), |acc, (a, b)| acc + a * b);
            assert!(dot.is_zero());
        }
        let full = vec![row(&[1, 0, 0]), row(&[0, 1, 0]), row(&[0, 0, 1])];
        assert_eq!(rank(&full, 3), 3);
        assert!(nullspace(&full, 3).is_empty());
    }
}

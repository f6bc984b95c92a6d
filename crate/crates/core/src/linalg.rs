//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use crate::Rational;

/// Row-reduces `rows` in place and returns the rank.
#[allow(clippy::needless_range_loop)]
fn eliminate(rows: &mut [Vec<Rational>]) -> (usize, Rational) {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut sign_det = Rational::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            rows.swap(pivot, rank);
            sign_det = -sign_det;
        }
        let p = rows[rank][col].clone();
        sign_det *= &p;
        for r in rank + 1..nrows {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &p;
            for c in col..ncols {
                let delta = &factor * &rows[rank][c];
                rows[r][c] -= delta;
            }
        }
        rank += 1;
    }
    (rank, sign_det)
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut work = rows.to_vec();
    eliminate(&mut work).0
}

/// Determinant of a square matrix.
pub fn determinant(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    debug_assert!(rows.iter().all(|r| r.len() == n));
    if n == 0 {
        return Rational::one();
    }
    let mut work = rows.to_vec();
    let (rank, det) = eliminate(&mut work);
    if rank < n {
        Rational::zero()
    } else {
        det
    }
}

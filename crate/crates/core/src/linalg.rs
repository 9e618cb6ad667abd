//! Exact Gauss–Jordan elimination over the rationals.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Coeff;

/// Reduces `rows` in place to reduced row echelon form and returns the
/// pivot columns.
fn rref(rows: &mut [Vec<Coeff>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of the matrix with the given rows.
pub fn rank(rows: &[Vec<Coeff>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Unique solution of `A c = b`, where `a` lists the rows of `A`.
///
/// Fails with [`Error::Inconsistent`] when no solution exists and with
/// [`Error::InvalidArgument`] when the solution is not unique.
pub fn solve(a: &[Vec<Coeff>], b: &[Coeff]) -> Result<Vec<Coeff>> {
    let ncols = a.first().map_or(0, Vec::len);
    if a.len() != b.len() {
        return Err(Error::InvalidArgument("row count mismatch".into()));
    }
    let mut aug: Vec<Vec<Coeff>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return Err(Error::Inconsistent);
    }
    if pivots.len() < ncols {
        return Err(Error::InvalidArgument("underdetermined system".into()));
    }
    Ok(aug.into_iter().take(ncols).map(|mut r| r.pop().unwrap()).collect())
}

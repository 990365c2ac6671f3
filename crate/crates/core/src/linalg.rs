//! Dense Gaussian elimination over a field.

use crate::coeff::Field;

/// Reduces `rows` to row echelon form in place; returns the pivot columns.
pub(crate) fn echelon<F: Field>(rows: &mut [Vec<F>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for x in rows[r][c..].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for k in c..ncols {
                    row[k] -= factor.clone() * pivot[k].clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Some solution of `A x = b` given as rows of the augmented matrix `[A | b]`.
pub(crate) fn solve_augmented<F: Field>(mut rows: Vec<Vec<F>>, nvars: usize) -> Option<Vec<F>> {
    let pivots = echelon(&mut rows);
    if pivots.last() == Some(&nvars) {
        return None;
    }
    let mut x = vec![F::zero(); nvars];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rows[r][nvars].clone();
    }
    Some(x)
}

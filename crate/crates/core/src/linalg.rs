//! Exact coordinates with respect to a linearly independent family.

use num_traits::Zero;

use crate::weight::{Weight, Q};

/// Coefficients c with Σ c_i basis_i = x, or None if x is outside the span.
/// The basis must be linearly independent.
pub fn coordinates(basis: &[Weight], x: &Weight) -> Option<Vec<Q>> {
    let rows = x.len();
    let cols = basis.len();
    // augmented matrix, one row per coordinate
    let mut a: Vec<Vec<Q>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Q> = basis.iter().map(|b| b.coord(r)).collect();
            row.push(x.coord(r));
            row
        })
        .collect();
    let mut pivots = Vec::with_capacity(cols);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v *= inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c];
                for k in c..=cols {
                    let t = a[r][k] * f;
                    a[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut out = vec![Q::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        out[c] = a[i][cols];
    }
    Some(out)
}

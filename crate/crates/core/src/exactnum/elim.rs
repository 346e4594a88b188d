//! Fraction-free (Bareiss-style) elimination over the integers.
//!
//! Rows are integerized first (row scaling preserves row space and kernel),
//! then reduced with exact divisions by the previous pivot. In the
//! Gauss-Jordan variant every pivot ends up equal to the same integer `d`, so
//! the reduced row echelon form is `rows / d`.

use num_bigint::BigInt;
use num_traits::Zero;

pub(crate) struct Reduced {
    /// Reduced rows scaled by `scale`; only the first `pivots.len()` are nonzero.
    pub rows: Vec<Vec<BigInt>>,
    /// Pivot column of each nonzero row, strictly increasing.
    pub pivots: Vec<usize>,
    /// Common value of every pivot entry (Gauss-Jordan) or the last pivot
    /// (forward elimination, where it is the leading minor up to sign).
    pub scale: BigInt,
    pub odd_swaps: bool,
}

/// Full fraction-free Gauss-Jordan reduction.
pub(crate) fn gauss_jordan(mut rows: Vec<Vec<BigInt>>, cols: usize) -> Reduced {
    reduce(&mut rows, cols, true)
}

/// Forward elimination only; enough for rank and determinant.
pub(crate) fn forward(mut rows: Vec<Vec<BigInt>>, cols: usize) -> Reduced {
    reduce(&mut rows, cols, false)
}

fn reduce(rows: &mut Vec<Vec<BigInt>>, cols: usize, jordan: bool) -> Reduced {
    let m = rows.len();
    let mut prev = BigInt::from(1);
    let mut pivots = Vec::new();
    let mut swaps = 0usize;
    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        let Some(found) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        if found != r {
            rows.swap(found, r);
            swaps += 1;
        }
        let pivot_row = std::mem::take(&mut rows[r]);
        let p = pivot_row[c].clone();
        let start = if jordan { 0 } else { r + 1 };
        for (i, row) in rows.iter_mut().enumerate().skip(start) {
            if i == r {
                continue;
            }
            let factor = row[c].clone();
            if factor.is_zero() {
                if !jordan && prev == p {
                    continue;
                }
                for entry in row.iter_mut().skip(if jordan { 0 } else { c + 1 }) {
                    if !entry.is_zero() {
                        let t = &p * &*entry;
                        *entry = exact_div(t, &prev);
                    }
                }
            } else {
                for (j, entry) in row.iter_mut().enumerate() {
                    if !jordan && j < c {
                        continue;
                    }
                    let a = &pivot_row[j];
                    if entry.is_zero() && a.is_zero() {
                        continue;
                    }
                    let t = &p * &*entry - &factor * a;
                    *entry = exact_div(t, &prev);
                }
            }
        }
        rows[r] = pivot_row;
        prev = p;
        pivots.push(c);
        r += 1;
    }
    Reduced {
        rows: std::mem::take(rows),
        pivots,
        scale: prev,
        odd_swaps: swaps % 2 == 1,
    }
}

fn exact_div(value: BigInt, by: &BigInt) -> BigInt {
    if by == &BigInt::from(1) {
        return value;
    }
    value / by
}

//! Hermite and Smith normal forms over `Z`.

use num_traits::{Signed, Zero};

use super::IntMatrix;
use crate::num::{floor_div, Int};

/// Row-style Hermite normal form.
///
/// Returns `(h, u)` with `u` unimodular and `u * m = h`. The form is row
/// echelon: each nonzero row starts with a positive pivot strictly to the
/// right of the previous row's pivot, entries above a pivot lie in
/// `[0, pivot)`, and zero rows sit at the bottom.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let mut r = 0;
    for c in 0..m.cols() {
        if r == m.rows() {
            break;
        }
        // Euclid on column c among rows r.. until a single nonzero entry is left.
        loop {
            let pivot = (r..h.rows())
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&a, &b| h[(a, c)].abs().cmp(&h[(b, c)].abs()));
            let Some(p) = pivot else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..h.rows() {
                if !h[(i, c)].is_zero() {
                    let q = floor_div(&h[(i, c)], &h[(r, c)]);
                    let nq = -q;
                    h.add_row_multiple(i, r, &nq);
                    u.add_row_multiple(i, r, &nq);
                    if !h[(i, c)].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = floor_div(&h[(i, c)], &h[(r, c)]);
            if !q.is_zero() {
                let nq = -q;
                h.add_row_multiple(i, r, &nq);
                u.add_row_multiple(i, r, &nq);
            }
        }
        r += 1;
    }
    (h, u)
}

/// Elementary divisors `d_1 | d_2 | ... | d_k`, `k = min(rows, cols)`, all
/// nonnegative (zeros trail).
pub fn snf(m: &IntMatrix) -> Vec<Int> {
    let mut a = m.clone();
    let k = m.rows().min(m.cols());
    let mut diag = Vec::with_capacity(k);
    for t in 0..k {
        // Smallest nonzero entry in the trailing block becomes the pivot.
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..a.rows() {
                for j in t..a.cols() {
                    if !a[(i, j)].is_zero()
                        && best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                diag.extend(std::iter::repeat_n(Int::zero(), k - t));
                return diag;
            };
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            let mut clean = true;
            for i in t + 1..a.rows() {
                if !a[(i, t)].is_zero() {
                    let q = -floor_div(&a[(i, t)], &a[(t, t)]);
                    a.add_row_multiple(i, t, &q);
                    clean &= a[(i, t)].is_zero();
                }
            }
            for j in t + 1..a.cols() {
                if !a[(t, j)].is_zero() {
                    let q = -floor_div(&a[(t, j)], &a[(t, t)]);
                    a.add_col_multiple(j, t, &q);
                    clean &= a[(t, j)].is_zero();
                }
            }
            if !clean {
                continue;
            }
            // Divisibility: pivot must divide every remaining entry.
            let bad = (t + 1..a.rows())
                .find(|&i| (t + 1..a.cols()).any(|j| !(&a[(i, j)] % &a[(t, t)]).is_zero()));
            match bad {
                Some(i) => {
                    let one = Int::from(1);
                    a.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        diag.push(a[(t, t)].abs());
    }
    diag
}

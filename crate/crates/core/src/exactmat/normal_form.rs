//! Hermite and Smith normal forms over the integers.
//!
//! Both routines only use elementary unimodular row/column operations, so the
//! returned transforms are unimodular by construction.

use num_integer::Integer;
use num_traits::{One, Signed};

use super::Matrix;

fn row_axpy<T: Integer + Clone>(m: &mut Matrix<T>, target: usize, source: usize, q: &T) {
    // row[target] -= q * row[source]
    for j in 0..m.cols() {
        let v = m[(target, j)].clone() - q.clone() * m[(source, j)].clone();
        m[(target, j)] = v;
    }
}

fn col_axpy<T: Integer + Clone>(m: &mut Matrix<T>, target: usize, source: usize, q: &T) {
    for i in 0..m.rows() {
        let v = m[(i, target)].clone() - q.clone() * m[(i, source)].clone();
        m[(i, target)] = v;
    }
}

fn negate_row<T: Integer + Signed + Clone>(m: &mut Matrix<T>, i: usize) {
    for x in m.row_mut(i) {
        *x = -x.clone();
    }
}

fn swap_cols<T>(m: &mut Matrix<T>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows() {
        let row = m.row_mut(i);
        row.swap(a, b);
    }
}

/// Row-style Hermite normal form: returns `(H, U)` with `U` unimodular and
/// `H = U * A` in echelon form, each pivot positive and every other entry in
/// a pivot column reduced into `[0, pivot)`. Zero rows come last.
pub fn hermite_normal_form<T>(a: &Matrix<T>) -> (Matrix<T>, Matrix<T>)
where
    T: Integer + Signed + Clone,
{
    let mut h = a.clone();
    let mut u = Matrix::identity(a.rows());
    let rows = a.rows();
    let mut r = 0;
    for c in 0..a.cols() {
        if r == rows {
            break;
        }
        loop {
            // smallest nonzero entry at or below row r moves to the pivot
            let best = (r..rows)
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&i, &j| h[(i, c)].abs().cmp(&h[(j, c)].abs()));
            let Some(best) = best else { break };
            h.swap_rows(best, r);
            u.swap_rows(best, r);
            let mut done = true;
            for i in r + 1..rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = h[(i, c)].div_floor(&h[(r, c)]);
                row_axpy(&mut h, i, r, &q);
                row_axpy(&mut u, i, r, &q);
                if !h[(i, c)].is_zero() {
                    done = false;
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
            negate_row(&mut h, r);
            negate_row(&mut u, r);
        }
        for i in 0..r {
            let q = h[(i, c)].div_floor(&h[(r, c)]);
            if !q.is_zero() {
                row_axpy(&mut h, i, r, &q);
                row_axpy(&mut u, i, r, &q);
            }
        }
        r += 1;
    }
    (h, u)
}

/// Smith normal form: returns `(S, U, V)` with `U`, `V` unimodular,
/// `S = U * A * V` diagonal, nonnegative, and each diagonal entry dividing
/// the next.
pub fn smith_normal_form<T>(a: &Matrix<T>) -> (Matrix<T>, Matrix<T>, Matrix<T>)
where
    T: Integer + Signed + Clone,
{
    let (rows, cols) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = Matrix::identity(rows);
    let mut v = Matrix::identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if s[(i, j)].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| s[(i, j)].abs() < s[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return finish_smith(s, u, v);
            };
            s.swap_rows(bi, t);
            u.swap_rows(bi, t);
            swap_cols(&mut s, bj, t);
            swap_cols(&mut v, bj, t);

            let mut clean = true;
            for i in t + 1..rows {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = s[(i, t)].div_floor(&s[(t, t)]);
                row_axpy(&mut s, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                clean &= s[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = s[(t, j)].div_floor(&s[(t, t)]);
                col_axpy(&mut s, j, t, &q);
                col_axpy(&mut v, j, t, &q);
                clean &= s[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into row t and retry
            let pivot = s[(t, t)].clone();
            let offending = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !s[(i, j)].is_multiple_of(&pivot)));
            match offending {
                Some(i) => {
                    let minus_one = -T::one();
                    row_axpy(&mut s, t, i, &minus_one);
                    row_axpy(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            negate_row(&mut s, t);
            negate_row(&mut u, t);
        }
    }
    finish_smith(s, u, v)
}

fn finish_smith<T: Integer + Signed + Clone>(
    mut s: Matrix<T>,
    mut u: Matrix<T>,
    v: Matrix<T>,
) -> (Matrix<T>, Matrix<T>, Matrix<T>) {
    for t in 0..s.rows().min(s.cols()) {
        if s[(t, t)].is_negative() {
            negate_row(&mut s, t);
            negate_row(&mut u, t);
        }
    }
    (s, u, v)
}

/// Nonzero diagonal entries of a Smith form.
pub fn invariant_factors<T: Integer + Signed + Clone>(a: &Matrix<T>) -> Vec<T> {
    let (s, _, _) = smith_normal_form(a);
    (0..s.rows().min(s.cols()))
        .map(|i| s[(i, i)].clone())
        .filter(|x| !x.is_zero())
        .collect()
}

/// The lattice spanned by the rows of `a` equals the integer points of its
/// real span.
pub fn is_saturated<T: Integer + Signed + Clone>(a: &Matrix<T>) -> bool {
    invariant_factors(a).iter().all(One::is_one)
}

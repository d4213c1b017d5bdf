use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, Num, One, Signed, ToPrimitive, Zero};

use super::Matrix;

/// Scalars that support fraction-free elimination. The checked operations
/// let fixed-width integers report overflow instead of wrapping.
pub trait ExactScalar:
    Clone + PartialEq + Zero + One + CheckedMul + CheckedSub + CheckedDiv
{
}

impl<T> ExactScalar for T where
    T: Clone + PartialEq + Zero + One + CheckedMul + CheckedSub + CheckedDiv
{
}

/// Scalars forming a field, for Gauss-Jordan reduction.
pub trait Field: Clone + PartialEq + Num + Neg<Output = Self> {}

impl<T> Field for T where T: Clone + PartialEq + Num + Neg<Output = T> {}

/// Fraction-free (Bareiss) forward elimination in place.
///
/// Returns the rank and the number of row swaps, or `None` if an
/// intermediate value overflowed the scalar type. After a successful run the
/// matrix is in echelon form and every stored entry is a minor of the input.
fn bareiss<T: ExactScalar>(a: &mut Matrix<T>) -> Option<(usize, usize)> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut prev = T::one();
    let mut rank = 0;
    let mut swaps = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap_rows(p, rank);
            swaps += 1;
        }
        let pivot = a[(rank, c)].clone();
        for i in rank + 1..rows {
            let lead = a[(i, c)].clone();
            for j in c + 1..cols {
                let left = pivot.checked_mul(&a[(i, j)])?;
                let value = if lead.is_zero() {
                    left
                } else {
                    left.checked_sub(&lead.checked_mul(&a[(rank, j)])?)?
                };
                a[(i, j)] = value.checked_div(&prev)?;
            }
            a[(i, c)] = T::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Some((rank, swaps))
}

/// Rank by fraction-free elimination, `None` on overflow.
pub fn checked_rank<T: ExactScalar>(m: &Matrix<T>) -> Option<usize> {
    let mut a = m.clone();
    bareiss(&mut a).map(|(rank, _)| rank)
}

/// Determinant of a square matrix by fraction-free elimination, `None` on
/// overflow.
pub fn checked_determinant<T: ExactScalar + Neg<Output = T>>(m: &Matrix<T>) -> Option<T> {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return Some(T::one());
    }
    let mut a = m.clone();
    let (rank, swaps) = bareiss(&mut a)?;
    if rank < n {
        return Some(T::zero());
    }
    let det = a[(n - 1, n - 1)].clone();
    Some(if swaps % 2 == 1 { -det } else { det })
}

pub fn determinant(m: &Matrix<BigInt>) -> BigInt {
    checked_determinant(m).expect("BigInt arithmetic does not overflow")
}

fn to_i128(m: &Matrix<i64>) -> Matrix<i128> {
    m.map(|&x| i128::from(x))
}

/// Rank of a small integer matrix: 128-bit elimination first, arbitrary
/// precision if that overflows.
pub fn small_rank(m: &Matrix<i64>) -> usize {
    match checked_rank(&to_i128(m)) {
        Some(r) => r,
        None => checked_rank(&m.map(|&x| BigInt::from(x))).expect("no overflow in BigInt"),
    }
}

/// Exact rank of an integer matrix.
pub fn integer_rank(m: &Matrix<BigInt>) -> usize {
    let small: Option<Vec<i64>> = m.as_slice().iter().map(ToPrimitive::to_i64).collect();
    match small {
        Some(data) => small_rank(&Matrix::from_vec(m.rows(), m.cols(), data)),
        None => checked_rank(m).expect("no overflow in BigInt"),
    }
}

/// Multiplies each row by the lcm of its denominators. Row scaling by a
/// nonzero constant leaves rank and nullspace unchanged.
pub fn clear_denominators(m: &Matrix<BigRational>) -> Matrix<BigInt> {
    let mut data = Vec::with_capacity(m.rows() * m.cols());
    for row in m.iter_rows() {
        data.extend(primitive_integer_vector(row));
    }
    Matrix::from_vec(m.rows(), m.cols(), data)
}

/// Scales a rational vector to an integer vector with coprime entries and
/// the same direction. The zero vector maps to zeros.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// Exact rank of a rational matrix.
pub fn rank(m: &Matrix<BigRational>) -> usize {
    integer_rank(&clear_denominators(m))
}

/// Reduced row echelon form by Gauss-Jordan elimination. Returns the reduced
/// matrix (zero rows last) and the pivot column of each nonzero row.
pub fn rref<T: Field>(m: &Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = T::one() / a[(r, c)].clone();
        for j in c..cols {
            let v = a[(r, j)].clone() * inv.clone();
            a[(r, j)] = v;
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let factor = a[(i, c)].clone();
            for j in c..cols {
                let v = a[(i, j)].clone() - factor.clone() * a[(r, j)].clone();
                a[(i, j)] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Basis of `{v : M v = 0}`, returned as the rows of a reduced echelon
/// matrix (leading entries equal to one).
pub fn nullspace_basis<T: Field>(m: &Matrix<T>) -> Vec<Vec<T>> {
    let cols = m.cols();
    let (r, pivots) = rref(m);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&j| !is_pivot[j]) {
        let mut v = vec![T::zero(); cols];
        v[free] = T::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r[(row, free)].clone();
        }
        basis.push(v);
    }
    if basis.is_empty() {
        return basis;
    }
    let (reduced, pivots) = rref(&Matrix::from_rows(basis));
    reduced.iter_rows().take(pivots.len()).map(<[T]>::to_vec).collect()
}

/// Nullspace of a rational matrix. Rows are cleared of denominators first,
/// which keeps the elimination on smaller numbers.
pub fn rational_nullspace(m: &Matrix<BigRational>) -> Vec<Vec<BigRational>> {
    let ints = clear_denominators(m);
    nullspace_basis(&ints.map(|x| BigRational::from_integer(x.clone())))
}

/// Answers "what is the nullity of `F` with some rows deleted?" for a fixed
/// matrix `F` and many different deleted row sets.
///
/// With `K` a basis of the left kernel of `F`, the vectors `v` with
/// `F_S v = 0` (rows `S` kept, rows `G` deleted) are those whose image `Fv`
/// is supported on `G`, so
/// `nullity(F_S) = nullity(F) + |G| - rank(K[:, G])`.
/// Each query is a rank computation on a `dim ker F^T` by `|G|` matrix.
#[derive(Clone, Debug)]
pub struct RowComplement {
    rows: usize,
    cols: usize,
    nullity: usize,
    kernel: Matrix<BigInt>,
    small: Option<Matrix<i64>>,
}

impl RowComplement {
    pub fn new(full: &Matrix<BigRational>) -> Self {
        let left = rational_nullspace(&full.transpose());
        let k = left.len();
        let mut data = Vec::with_capacity(k * full.rows());
        for v in &left {
            data.extend(primitive_integer_vector(v));
        }
        let kernel = Matrix::from_vec(k, full.rows(), data);
        let small = kernel
            .as_slice()
            .iter()
            .map(ToPrimitive::to_i64)
            .collect::<Option<Vec<_>>>()
            .map(|d| Matrix::from_vec(k, full.rows(), d));
        let rank = full.rows() - k;
        Self {
            rows: full.rows(),
            cols: full.cols(),
            nullity: full.cols() - rank,
            kernel,
            small,
        }
    }

    pub fn full_rows(&self) -> usize {
        self.rows
    }

    pub fn full_cols(&self) -> usize {
        self.cols
    }

    /// Integer basis of the left kernel of the full matrix.
    pub fn left_kernel(&self) -> &Matrix<BigInt> {
        &self.kernel
    }

    /// Nullity of the full matrix after deleting the (distinct) `removed`
    /// rows.
    pub fn nullity_without(&self, removed: &[usize]) -> usize {
        debug_assert!(removed.iter().all(|&i| i < self.rows));
        if removed.is_empty() {
            return self.nullity;
        }
        let rank = match &self.small {
            Some(k) => small_rank(&k.select_cols(removed)),
            None => integer_rank(&self.kernel.select_cols(removed)),
        };
        self.nullity + removed.len() - rank
    }

    /// Rank of the full matrix after deleting the `removed` rows.
    pub fn rank_without(&self, removed: &[usize]) -> usize {
        self.cols - self.nullity_without(removed)
    }
}

/// `|det|` equals one.
pub fn is_unimodular(m: &Matrix<BigInt>) -> bool {
    m.rows() == m.cols() && determinant(m).abs().is_one()
}

pub(crate) fn bigint_matrix(m: &Matrix<i64>) -> Matrix<BigInt> {
    m.map(|&x| BigInt::from(x))
}

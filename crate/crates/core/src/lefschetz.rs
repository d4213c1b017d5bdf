//! Failure of the weak Lefschetz property from degree `d - 1` to `d`.
//!
//! Two independent tests: the rank of multiplication by
//! `l = x0 + ... + xn` on `R/I`, and linear dependence of the generators
//! after restricting to the hyperplane `x_n = -(x0 + ... + x_{n-1})`. For
//! monomial ideals the sum of the variables is a Lefschetz element whenever
//! one exists, so no random linear forms are needed.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::exactmat::{small_rank, Matrix, RowComplement};
use crate::monomials::{binomial, simplex_points, ExponentVector, MonomialIdeal, Simplex};
use crate::{RationalMatrix, SmallIntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WlpVerdict {
    pub fails_wlp: bool,
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub map_rank: usize,
    pub kernel_dim: usize,
}

impl WlpVerdict {
    fn from_rank(domain_dim: usize, codomain_dim: usize, map_rank: usize) -> Self {
        Self {
            fails_wlp: map_rank < domain_dim.min(codomain_dim),
            domain_dim,
            codomain_dim,
            map_rank,
            kernel_dim: domain_dim - map_rank,
        }
    }
}

/// 0/1 matrix of `x0 + ... + xn` from all degree `d - 1` monomials (columns)
/// to the listed degree `d` monomials (rows).
fn multiplication_rows(n: usize, d: u32, rows: &[ExponentVector]) -> SmallIntMatrix {
    let domain = simplex_points(n, d - 1).points;
    let row_of: HashMap<&ExponentVector, usize> =
        rows.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut m = Matrix::zeros(rows.len(), domain.len());
    for (j, mono) in domain.iter().enumerate() {
        for var in 0..=n {
            let mut e = mono.exponents().to_vec();
            e[var] += 1;
            if let Some(&i) = row_of.get(&ExponentVector::new(e)) {
                m[(i, j)] = 1;
            }
        }
    }
    m
}

/// Matrix of `x l: [R/I]_{d-1} -> [R/I]_d` in monomial bases. Columns are the
/// degree `d - 1` monomials, rows the degree `d` monomials outside `I`, both
/// in monomial order.
pub fn multiplication_matrix(ideal: &MonomialIdeal) -> Result<RationalMatrix> {
    ideal.require_artinian()?;
    let rows = ideal.inverse_system_points().points;
    Ok(multiplication_rows(ideal.n(), ideal.d(), &rows)
        .map(|&x| BigRational::from_integer(x.into())))
}

/// Whether `I` fails the WLP in degree `d - 1`, by direct rank of the
/// multiplication matrix.
pub fn fails_wlp_dminus1(ideal: &MonomialIdeal) -> Result<WlpVerdict> {
    ideal.require_artinian()?;
    ideal.require_within_bound()?;
    let rows = ideal.inverse_system_points().points;
    let m = multiplication_rows(ideal.n(), ideal.d(), &rows);
    Ok(WlpVerdict::from_rank(m.cols(), m.rows(), small_rank(&m)))
}

/// Coefficients of the restriction of `x^a` to `x_n = -(x0 + ... + x_{n-1})`
/// in the degree `d` monomial basis of `x0..x_{n-1}`.
fn restricted_row(a: &ExponentVector, target: &HashMap<ExponentVector, usize>, width: usize) -> Vec<i64> {
    let n = a.num_vars() - 1;
    let e = a.exponents();
    let c = e[n];
    let sign: i64 = if c.is_multiple_of(2) { 1 } else { -1 };
    let mut row = vec![0i64; width];
    for k in simplex_points(n - 1, c).points {
        // multinomial(c; k) as a product of binomials
        let mut coeff: u64 = 1;
        let mut left = u64::from(c);
        for &ki in k.exponents() {
            coeff *= binomial(left, u64::from(ki));
            left -= u64::from(ki);
        }
        let mono: Vec<u32> = (0..n).map(|i| e[i] + k.exponents()[i]).collect();
        let col = target[&ExponentVector::new(mono)];
        row[col] += sign * i64::try_from(coeff).expect("multinomial fits in i64");
    }
    row
}

fn restricted_basis(n: usize, d: u32) -> HashMap<ExponentVector, usize> {
    simplex_points(n - 1, d).points.into_iter().enumerate().map(|(i, p)| (p, i)).collect()
}

/// `r x C(n+d-1, n-1)` matrix of the generators restricted to the hyperplane.
pub fn restricted_matrix(ideal: &MonomialIdeal) -> SmallIntMatrix {
    let target = restricted_basis(ideal.n(), ideal.d());
    let width = target.len();
    Matrix::from_vec(
        ideal.num_generators(),
        width,
        ideal
            .generators()
            .iter()
            .flat_map(|g| restricted_row(g, &target, width))
            .collect(),
    )
}

/// Whether the generators become linearly dependent on the hyperplane
/// `x0 + ... + xn = 0`.
pub fn restricted_dependence(ideal: &MonomialIdeal) -> Result<bool> {
    ideal.require_artinian()?;
    ideal.require_within_bound()?;
    let m = restricted_matrix(ideal);
    Ok(small_rank(&m) < ideal.num_generators())
}

/// Both WLP routes precomputed for one `(n, d)`, answering queries about
/// generator sets given as sorted point indices of a [`Simplex`].
///
/// The multiplication route keeps the full `C(n+d, n) x C(n+d-1, n)` matrix
/// of `x l` on `R` and deletes the generator rows through a
/// [`RowComplement`]; the restriction route keeps one restricted row per
/// monomial.
#[derive(Clone, Debug)]
pub struct LefschetzContext {
    domain_dim: usize,
    total: usize,
    full: RowComplement,
    restricted: Vec<Vec<i64>>,
    restricted_width: usize,
}

impl LefschetzContext {
    pub fn new(simplex: &Simplex) -> Self {
        let (n, d) = (simplex.n, simplex.d);
        let full = multiplication_rows(n, d, simplex.points());
        let domain_dim = full.cols();
        let full = RowComplement::new(&full.map(|&x| BigRational::from_integer(x.into())));
        let target = restricted_basis(n, d);
        let width = target.len();
        let restricted = simplex.points().iter().map(|p| restricted_row(p, &target, width)).collect();
        Self { domain_dim, total: simplex.len(), full, restricted, restricted_width: width }
    }

    /// WLP verdict for the ideal generated by the given simplex points.
    pub fn verdict(&self, generators: &[usize]) -> WlpVerdict {
        let kernel = self.full.nullity_without(generators);
        WlpVerdict::from_rank(self.domain_dim, self.total - generators.len(), self.domain_dim - kernel)
    }

    /// Rank of the restricted generator matrix.
    pub fn restricted_rank(&self, generators: &[usize]) -> usize {
        let mut data = Vec::with_capacity(generators.len() * self.restricted_width);
        for &g in generators {
            data.extend_from_slice(&self.restricted[g]);
        }
        small_rank(&Matrix::from_vec(generators.len(), self.restricted_width, data))
    }

    pub fn restricted_dependence(&self, generators: &[usize]) -> bool {
        self.restricted_rank(generators) < generators.len()
    }
}

/// Every entry is 0 or 1 and each column has at most `n + 1` ones.
pub fn is_zero_one_with_bounded_columns(m: &RationalMatrix, n: usize) -> bool {
    (0..m.cols()).all(|j| {
        let mut ones = 0;
        for i in 0..m.rows() {
            let x = &m[(i, j)];
            if x.is_one() {
                ones += 1;
            } else if !x.is_zero() {
                return false;
            }
        }
        ones <= n + 1
    })
}

//! Hypersurfaces of degree `d - 1` through the inverse-system points `A_I`,
//! and the two minimality tests.
//!
//! Points of `d * Delta_n` lie on `t0 + ... + tn = d`, so they are projected
//! to `Z^n` by dropping the last coordinate, and "degree `d - 1`
//! hypersurface" means a polynomial of total degree at most `d - 1` in
//! `t0, ..., t_{n-1}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmat::{rank, rational_nullspace, Matrix, RowComplement};
use crate::lefschetz::fails_wlp_dminus1;
use crate::monomials::{monomials_up_to, ExponentVector, LatticePointSet, MonomialIdeal, Simplex};
use crate::{Rational, RationalMatrix};

fn monomial_value(point: &[u32], mono: &ExponentVector) -> BigInt {
    point
        .iter()
        .zip(mono.exponents())
        .fold(BigInt::one(), |acc, (&p, &e)| acc * BigInt::from(p).pow(e))
}

/// One row per point (last coordinate dropped), one column per monomial of
/// degree at most `deg_bound` in `n` variables.
pub fn evaluation_matrix(points: &LatticePointSet, deg_bound: u32) -> RationalMatrix {
    let columns = monomials_up_to(points.n, deg_bound);
    let mut data = Vec::with_capacity(points.len() * columns.len());
    for p in &points.points {
        let projected = &p.exponents()[..points.n];
        data.extend(columns.iter().map(|m| BigRational::from_integer(monomial_value(projected, m))));
    }
    Matrix::from_vec(points.len(), columns.len(), data)
}

/// Polynomials of degree at most `d - 1` vanishing on `A_I`.
#[derive(Clone, Debug, PartialEq)]
pub struct HypersurfaceSpace {
    pub n: usize,
    pub d: u32,
    /// Column monomials in `t0..t_{n-1}`.
    pub monomials: Vec<ExponentVector>,
    /// Coefficient vectors, rows of a reduced echelon matrix.
    pub basis: Vec<Vec<Rational>>,
}

impl HypersurfaceSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Value of basis element `k` at a lattice point of `d * Delta_n`.
    pub fn evaluate(&self, k: usize, point: &ExponentVector) -> Rational {
        let projected = &point.exponents()[..self.n];
        self.monomials
            .iter()
            .zip(&self.basis[k])
            .filter(|(_, c)| !c.is_zero())
            .fold(Rational::zero(), |acc, (m, c)| {
                acc + c * BigRational::from_integer(monomial_value(projected, m))
            })
    }

    /// Human-readable polynomial of basis element `k` in `t0..t_{n-1}`.
    pub fn render(&self, k: usize) -> String {
        let mut out = String::new();
        for (m, c) in self.monomials.iter().zip(&self.basis[k]) {
            if c.is_zero() {
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            let mut term = format!("({c})");
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => term.push_str(&format!("*t{i}")),
                    _ => term.push_str(&format!("*t{i}^{e}")),
                }
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Nullspace of the evaluation matrix of `A_I` in degree `d - 1`.
pub fn hypersurface_space(ideal: &MonomialIdeal) -> Result<HypersurfaceSpace> {
    ideal.require_artinian()?;
    let points = ideal.inverse_system_points();
    let e = evaluation_matrix(&points, ideal.d() - 1);
    Ok(HypersurfaceSpace {
        n: ideal.n(),
        d: ideal.d(),
        monomials: monomials_up_to(ideal.n(), ideal.d() - 1),
        basis: rational_nullspace(&e),
    })
}

/// Dimension of the hypersurface space, by rank alone.
pub fn hypersurface_dim(ideal: &MonomialIdeal) -> Result<usize> {
    ideal.require_artinian()?;
    let e = evaluation_matrix(&ideal.inverse_system_points(), ideal.d() - 1);
    Ok(e.cols() - rank(&e))
}

/// Some hypersurface of degree `d - 1` contains `A_I`.
pub fn is_togliatti(ideal: &MonomialIdeal) -> Result<bool> {
    ideal.require_within_bound()?;
    Ok(hypersurface_dim(ideal)? > 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MinimalityRoute {
    Removal,
    Prop33,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityVerdict {
    pub minimal: bool,
    pub route: MinimalityRoute,
    /// Removable generators (removal route) or non-vertex points some
    /// hypersurface through `A_I` also passes through (hypersurface route).
    pub witnesses: Vec<ExponentVector>,
}

impl MinimalityVerdict {
    fn new(route: MinimalityRoute, witnesses: Vec<ExponentVector>) -> Self {
        Self { minimal: witnesses.is_empty(), route, witnesses }
    }
}

/// Minimality by dropping each non-pure-power generator and re-testing the
/// WLP on what is left. Dropping a pure power leaves a non-artinian ideal,
/// which is never a Togliatti system.
pub fn is_minimal_removal(ideal: &MonomialIdeal) -> Result<MinimalityVerdict> {
    if !is_togliatti(ideal)? {
        return Err(Error::NotTogliatti);
    }
    let mut witnesses = Vec::new();
    for (i, g) in ideal.generators().iter().enumerate() {
        if g.pure_power_var().is_some() {
            continue;
        }
        if fails_wlp_dminus1(&ideal.without(i))?.fails_wlp {
            witnesses.push(g.clone());
        }
    }
    Ok(MinimalityVerdict::new(MinimalityRoute::Removal, witnesses))
}

/// Minimality by the hypersurface criterion: no hypersurface through `A_I`
/// may pass through a non-vertex point of `d * Delta_n` outside `A_I`.
pub fn is_minimal_prop33(ideal: &MonomialIdeal) -> Result<MinimalityVerdict> {
    ideal.require_within_bound()?;
    let space = hypersurface_space(ideal)?;
    if space.dim() == 0 {
        return Err(Error::NotTogliatti);
    }
    let mut witnesses = Vec::new();
    for g in ideal.generators() {
        if g.pure_power_var().is_some() {
            continue;
        }
        // {F in K : F(g) = 0} has dimension dim K - rank(values at g)
        let hits_nonzero = (0..space.dim()).any(|k| !space.evaluate(k, g).is_zero());
        let vanishing_dim = space.dim() - usize::from(hits_nonzero);
        if vanishing_dim > 0 {
            witnesses.push(g.clone());
        }
    }
    Ok(MinimalityVerdict::new(MinimalityRoute::Prop33, witnesses))
}

/// Hypersurface dimensions for every generator set of one `(n, d)`, through
/// a [`RowComplement`] of the evaluation matrix of the whole simplex.
#[derive(Clone, Debug)]
pub struct LatticeContext {
    full: RowComplement,
}

impl LatticeContext {
    pub fn new(simplex: &Simplex) -> Self {
        let all = LatticePointSet { n: simplex.n, d: simplex.d, points: simplex.points().to_vec() };
        Self { full: RowComplement::new(&evaluation_matrix(&all, simplex.d - 1)) }
    }

    /// Dimension of the degree `d - 1` hypersurfaces through every simplex
    /// point except the given generators.
    pub fn hypersurface_dim(&self, generators: &[usize]) -> usize {
        self.full.nullity_without(generators)
    }

    /// Non-vertex generators `p` such that some hypersurface through `A_I`
    /// also passes through `p`, i.e. the evaluation matrix of `A_I + {p}`
    /// still has a kernel.
    pub fn prop33_witnesses(&self, simplex: &Simplex, generators: &[usize]) -> Vec<usize> {
        let mut rest = Vec::with_capacity(generators.len());
        generators
            .iter()
            .copied()
            .filter(|&g| !simplex.is_vertex(g))
            .filter(|&g| {
                rest.clear();
                rest.extend(generators.iter().copied().filter(|&h| h != g));
                self.full.nullity_without(&rest) > 0
            })
            .collect()
    }
}

//! Face-by-face smoothness test for the toric variety of a lattice point set.
//!
//! For a face `G` of `P = conv(A)` two things are checked:
//!
//! * lattice: the affine lattice generated by `A ∩ G` contains every integer
//!   point of its real affine span;
//! * semigroup: the semigroup generated by `A` in `Z^{n+1} / L`, where `L`
//!   is the group generated by `A ∩ G`, is free of rank `dim P - dim G`.
//!
//! `Z^{n+1} / L` is the semigroup of `A` localized at `G` and then divided
//! by its units, so it is the semigroup of the tangent cone of `P` at `G`.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::hull::{affine_dim, polytope_faces, Face};
use crate::error::{Error, Result};
use crate::exactmat::{bigint_matrix, is_saturated, small_rank, smith_normal_form, Matrix};
use crate::monomials::{ExponentVector, LatticePointSet, MonomialIdeal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceCondition {
    Semigroup,
    Lattice,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceFailure {
    pub face: Face,
    pub condition: FaceCondition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothnessVerdict {
    pub smooth: bool,
    pub failures: Vec<FaceFailure>,
}

fn points_i64(points: &[ExponentVector]) -> Vec<Vec<i64>> {
    points.iter().map(ExponentVector::as_i64).collect()
}

/// The integer points of the real affine span of the face are exactly the
/// affine lattice generated by the points of `A` on it.
pub fn face_lattice_condition(_a: &LatticePointSet, face: &Face) -> bool {
    let pts = points_i64(&face.points);
    if pts.len() <= 1 {
        return true;
    }
    let base = &pts[0];
    let cols = base.len();
    let mut data = Vec::with_capacity((pts.len() - 1) * cols);
    for p in &pts[1..] {
        data.extend(p.iter().zip(base).map(|(x, y)| x - y));
    }
    is_saturated(&bigint_matrix(&Matrix::from_vec(pts.len() - 1, cols, data)))
}

/// Classes of `Z^{n+1} / L` for `L` spanned by the rows of `b`: with
/// `S = U b V` the Smith form, `x` maps to `y = x V` reduced modulo the
/// invariant factors, dropping coordinates where the factor is one.
struct Quotient {
    v: Vec<Vec<i64>>,
    moduli: Vec<i64>,
}

impl Quotient {
    fn new(b: &Matrix<i64>) -> Self {
        let (s, _, v) = smith_normal_form(&bigint_matrix(b));
        let cols = b.cols();
        let moduli = (0..cols)
            .map(|i| {
                let s_ii = if i < s.rows() { s[(i, i)].clone() } else { BigInt::zero() };
                s_ii.to_i64().expect("invariant factor fits in i64")
            })
            .collect();
        let v = (0..cols)
            .map(|i| (0..cols).map(|j| v[(i, j)].to_i64().expect("unimodular transform fits in i64")).collect())
            .collect();
        Self { v, moduli }
    }

    fn key(&self, x: &[i64]) -> Vec<i64> {
        let mut out = Vec::with_capacity(x.len());
        for (j, &m) in self.moduli.iter().enumerate() {
            if m == 1 {
                continue;
            }
            let y: i64 = x.iter().zip(&self.v).map(|(xi, row)| xi * row[j]).sum();
            out.push(if m == 0 { y } else { y.rem_euclid(m) });
        }
        out
    }
}

/// Membership search in the semigroup generated by `gens`, graded by the
/// facet functionals through the face.
struct Search<'a> {
    quotient: &'a Quotient,
    functionals: &'a [Vec<i64>],
    gens: &'a [Vec<i64>],
    gen_values: Vec<Vec<i64>>,
    memo: HashMap<Vec<i64>, bool>,
}

impl Search<'_> {
    fn values(&self, x: &[i64]) -> Vec<i64> {
        self.functionals.iter().map(|w| w.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }

    fn contains(&mut self, x: &[i64]) -> bool {
        let vals = self.values(x);
        if vals.iter().any(|&v| v < 0) {
            return false;
        }
        let key = self.quotient.key(x);
        if vals.iter().all(|&v| v == 0) {
            return key.iter().all(|&c| c == 0);
        }
        if let Some(&known) = self.memo.get(&key) {
            return known;
        }
        let mut found = false;
        for g in 0..self.gens.len() {
            if vals.iter().zip(&self.gen_values[g]).any(|(a, b)| a < b) {
                continue;
            }
            let rest: Vec<i64> = x.iter().zip(&self.gens[g]).map(|(a, b)| a - b).collect();
            if self.contains(&rest) {
                found = true;
                break;
            }
        }
        self.memo.insert(key, found);
        found
    }
}

/// The image of `A` in `Z^{n+1} / L` generates a free commutative semigroup
/// of rank `dim P - dim face`.
pub fn face_semigroup_condition(a: &LatticePointSet, face: &Face) -> Result<bool> {
    if !face_lattice_condition(a, face) {
        return Err(Error::LatticeConditionUnmet);
    }
    let all = points_i64(&a.points);
    let refs: Vec<&[i64]> = all.iter().map(Vec::as_slice).collect();
    let m = affine_dim(&refs) - face.dim;
    let cols = all[0].len();
    let on_face = points_i64(&face.points);
    let b = Matrix::from_vec(on_face.len(), cols, on_face.concat());
    let lattice_rank = small_rank(&b);
    let quotient = Quotient::new(&b);

    // one lift per nonzero class among the points off the face
    let mut gens: Vec<Vec<i64>> = Vec::new();
    let mut seen = HashSet::new();
    for (i, p) in all.iter().enumerate() {
        if face.indices.binary_search(&i).is_ok() {
            continue;
        }
        if seen.insert(quotient.key(p)) {
            gens.push(p.clone());
        }
    }
    let mut search = Search {
        quotient: &quotient,
        functionals: &face.facet_functionals,
        gens: &gens,
        gen_values: Vec::new(),
        memo: HashMap::new(),
    };
    search.gen_values = gens.iter().map(|g| search.values(g)).collect();

    let mut irreducible = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let reducible = (0..gens.len()).any(|j| {
            if j == i || search.gen_values[i].iter().zip(&search.gen_values[j]).any(|(a, b)| a < b) {
                return false;
            }
            let rest: Vec<i64> = g.iter().zip(&gens[j]).map(|(a, b)| a - b).collect();
            !search.values(&rest).iter().all(|&v| v == 0) && search.contains(&rest)
        });
        if !reducible {
            irreducible.push(g.clone());
        }
    }
    if irreducible.len() != m {
        return Ok(false);
    }
    let mut rows = irreducible;
    rows.extend(on_face);
    let stacked = Matrix::from_vec(rows.len(), cols, rows.concat());
    Ok(small_rank(&stacked) == m + lattice_rank)
}

/// Smoothness of the toric variety of the inverse-system points of `I`.
pub fn is_smooth(ideal: &MonomialIdeal) -> Result<SmoothnessVerdict> {
    ideal.require_artinian()?;
    is_smooth_points(&ideal.inverse_system_points())
}

/// Smoothness of the toric variety of an arbitrary nonempty point set.
pub fn is_smooth_points(a: &LatticePointSet) -> Result<SmoothnessVerdict> {
    let mut failures = Vec::new();
    for face in polytope_faces(a)? {
        let condition = if !face_lattice_condition(a, &face) {
            Some(FaceCondition::Lattice)
        } else if !face_semigroup_condition(a, &face)? {
            Some(FaceCondition::Semigroup)
        } else {
            None
        };
        if let Some(condition) = condition {
            failures.push(FaceFailure { face, condition });
        }
    }
    Ok(SmoothnessVerdict { smooth: failures.is_empty(), failures })
}

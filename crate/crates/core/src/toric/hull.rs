//! Exact convex hulls of lattice point sets and their face lattices.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmat::{primitive_integer_vector, rational_nullspace, small_rank, Matrix};
use crate::monomials::{ExponentVector, LatticePointSet};

/// A nonempty face of `conv(A)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub dim: usize,
    /// Points of `A` on the face, in monomial order.
    pub points: Vec<ExponentVector>,
    /// Indices of those points in `A`.
    #[serde(skip)]
    pub indices: Vec<usize>,
    /// Integer linear functionals on `Z^{n+1}`, one per facet containing the
    /// face. Each is zero on its facet and positive on the rest of `A`.
    #[serde(skip)]
    pub facet_functionals: Vec<Vec<i64>>,
    /// Sum of the facet functionals: a supporting hyperplane that is zero
    /// exactly on the face. Absent for the whole polytope.
    pub support: Option<Vec<i64>>,
}

/// Facet of the projected hull: `normal . x <= offset`, with equality on
/// the listed points.
#[derive(Clone, Debug)]
struct Facet {
    normal: Vec<i64>,
    offset: i64,
    points: Vec<usize>,
}

impl Facet {
    fn side(&self, x: &[i64]) -> i64 {
        dot(&self.normal, x) - self.offset
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn differences(points: &[&[i64]]) -> Matrix<i64> {
    let base = points[0];
    let cols = base.len();
    let mut data = Vec::with_capacity(points.len().saturating_sub(1) * cols);
    for p in &points[1..] {
        data.extend(p.iter().zip(base).map(|(x, y)| x - y));
    }
    Matrix::from_vec(points.len() - 1, cols, data)
}

/// Dimension of the affine hull of a nonempty point list.
pub fn affine_dim(points: &[&[i64]]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    small_rank(&differences(points))
}

/// Primitive normal of the hyperplane through points spanning an affine
/// hyperplane of `Q^k`.
fn hyperplane_normal(points: &[&[i64]]) -> Vec<i64> {
    let diffs = differences(points).map(|&x| BigRational::from_integer(x.into()));
    let null = rational_nullspace(&diffs);
    debug_assert_eq!(null.len(), 1);
    primitive_integer_vector(&null[0])
        .iter()
        .map(|x| x.to_i64().expect("hull normal fits in i64"))
        .collect()
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j, mut out) = (0, 0, Vec::new());
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Facets of the hull of `pts` (already full-dimensional in `Q^k`, k >= 2)
/// by incremental insertion.
fn facets_full_dim(pts: &[Vec<i64>], k: usize) -> Vec<Facet> {
    // initial simplex, chosen greedily in input order
    let mut simplex = vec![0usize];
    for i in 1..pts.len() {
        if simplex.len() == k + 1 {
            break;
        }
        let mut trial: Vec<&[i64]> = simplex.iter().map(|&j| pts[j].as_slice()).collect();
        trial.push(&pts[i]);
        if affine_dim(&trial) == simplex.len() {
            simplex.push(i);
        }
    }
    debug_assert_eq!(simplex.len(), k + 1);
    // centroid times (k + 1), strictly inside every later hull
    let mut centroid = vec![0i64; k];
    for &i in &simplex {
        for (c, x) in centroid.iter_mut().zip(&pts[i]) {
            *c += x;
        }
    }
    let scale = (k + 1) as i64;
    let make = |points: &[usize], processed: &[usize]| -> Facet {
        let refs: Vec<&[i64]> = points.iter().map(|&i| pts[i].as_slice()).collect();
        let mut normal = hyperplane_normal(&refs);
        let mut offset = dot(&normal, refs[0]);
        if dot(&normal, &centroid) - scale * offset > 0 {
            normal.iter_mut().for_each(|x| *x = -*x);
            offset = -offset;
        }
        let mut on: Vec<usize> =
            processed.iter().copied().filter(|&i| dot(&normal, &pts[i]) == offset).collect();
        on.sort_unstable();
        Facet { normal, offset, points: on }
    };

    let mut processed = simplex.clone();
    let mut facets: Vec<Facet> = (0..=k)
        .map(|skip| {
            let pts_on: Vec<usize> =
                simplex.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &i)| i).collect();
            make(&pts_on, &processed)
        })
        .collect();

    for p in 0..pts.len() {
        if simplex.contains(&p) {
            continue;
        }
        let x = &pts[p];
        let (visible, hidden): (Vec<Facet>, Vec<Facet>) =
            facets.into_iter().partition(|f| f.side(x) > 0);
        processed.push(p);
        if visible.is_empty() {
            facets = hidden;
            for f in &mut facets {
                if f.side(x) == 0 {
                    f.points.push(p);
                    f.points.sort_unstable();
                }
            }
            continue;
        }
        let mut next = hidden;
        for f in &mut next {
            if f.side(x) == 0 {
                f.points.push(p);
                f.points.sort_unstable();
            }
        }
        let existing = next.len();
        for v in &visible {
            for h in 0..existing {
                let ridge = intersect(&v.points, &next[h].points);
                if ridge.is_empty() {
                    continue;
                }
                let refs: Vec<&[i64]> = ridge.iter().map(|&i| pts[i].as_slice()).collect();
                if affine_dim(&refs) + 2 != k {
                    continue;
                }
                let mut span = ridge;
                span.push(p);
                let facet = make(&span, &processed);
                if !next.iter().any(|g| g.normal == facet.normal && g.offset == facet.offset) {
                    next.push(facet);
                }
            }
        }
        facets = next;
    }
    facets
}

/// Every nonempty face of `conv(A)`, including `conv(A)` itself, sorted by
/// dimension and then by point list.
pub fn polytope_faces(a: &LatticePointSet) -> Result<Vec<Face>> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let raw: Vec<Vec<i64>> = a.points.iter().map(ExponentVector::as_i64).collect();
    let refs: Vec<&[i64]> = raw.iter().map(Vec::as_slice).collect();
    let dim = affine_dim(&refs);

    let mut facets = Vec::new();
    if dim > 0 {
        // project onto coordinates in which the differences keep full rank
        let diffs = differences(&refs);
        let mut coords = Vec::new();
        for c in 0..diffs.cols() {
            let mut trial = coords.clone();
            trial.push(c);
            if small_rank(&diffs.select_cols(&trial)) == trial.len() {
                coords = trial;
            }
            if coords.len() == dim {
                break;
            }
        }
        let projected: Vec<Vec<i64>> =
            raw.iter().map(|p| coords.iter().map(|&c| p[c]).collect()).collect();
        facets = if dim == 1 {
            let key = |i: usize| projected[i][0];
            let lo = (0..raw.len()).min_by_key(|&i| key(i)).unwrap();
            let hi = (0..raw.len()).max_by_key(|&i| key(i)).unwrap();
            vec![
                Facet { normal: vec![-1], offset: -key(lo), points: vec![lo] },
                Facet { normal: vec![1], offset: key(hi), points: vec![hi] },
            ]
        } else {
            facets_full_dim(&projected, dim)
        };
        // lift each facet to a homogeneous functional on Z^{n+1}: on the
        // hyperplane sum(x) = d it equals d * (offset - normal . x)
        let d = i64::from(a.d);
        for f in &mut facets {
            let mut w = vec![f.offset; raw[0].len()];
            for (&c, &nc) in coords.iter().zip(&f.normal) {
                w[c] -= d * nc;
            }
            let g = w.iter().fold(0i64, |acc, &x| num_integer::gcd(acc, x));
            f.normal = w.into_iter().map(|x| x / g).collect();
        }
    }

    let mut sets: BTreeSet<Vec<usize>> = facets.iter().map(|f| f.points.clone()).collect();
    let mut frontier: Vec<Vec<usize>> = sets.iter().cloned().collect();
    while let Some(s) = frontier.pop() {
        for f in &facets {
            let t = intersect(&s, &f.points);
            if !t.is_empty() && sets.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    sets.insert((0..raw.len()).collect());

    let mut faces: Vec<Face> = sets
        .into_iter()
        .map(|indices| {
            let on: Vec<&[i64]> = indices.iter().map(|&i| refs[i]).collect();
            let facet_functionals: Vec<Vec<i64>> = facets
                .iter()
                .filter(|f| intersect(&f.points, &indices).len() == indices.len())
                .map(|f| f.normal.clone())
                .collect();
            let support = (!facet_functionals.is_empty()).then(|| {
                let mut s = vec![0i64; raw[0].len()];
                for w in &facet_functionals {
                    s.iter_mut().zip(w).for_each(|(a, b)| *a += b);
                }
                s
            });
            Face {
                dim: affine_dim(&on),
                points: indices.iter().map(|&i| a.points[i].clone()).collect(),
                indices,
                facet_functionals,
                support,
            }
        })
        .collect();
    faces.sort_by(|x, y| x.dim.cmp(&y.dim).then_with(|| x.points.cmp(&y.points)));
    Ok(faces)
}

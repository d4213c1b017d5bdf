//! Monomials, degree-`d` monomial ideals, and lattice points of the dilated
//! simplex.
//!
//! Exponent vectors are ordered lexicographically with the larger exponent of
//! `x0` first, so `x0^3 < x0^2*x1 < x1^3` in this crate's order. Every
//! set-valued result is sorted in that order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponents of `x0, ..., xn`. Doubles as a lattice point of `Z^{n+1}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    /// `d * e_i` in `n + 1` variables.
    pub fn pure_power(n: usize, d: u32, i: usize) -> Self {
        let mut e = vec![0; n + 1];
        e[i] = d;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Index of the variable if this is a pure power `x_i^k`, `k > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut nonzero = self.0.iter().enumerate().filter(|(_, &e)| e > 0);
        match (nonzero.next(), nonzero.next()) {
            (Some((i, _)), None) => Some(i),
            _ => None,
        }
    }

    /// Relabels variables: exponent of `x_i` becomes the exponent of
    /// `x_{perm[i]}`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = vec![0; self.0.len()];
        for (i, &e) in self.0.iter().enumerate() {
            out[perm[i]] = e;
        }
        Self(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self` divides `other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn as_i64(&self) -> Vec<i64> {
        self.0.iter().map(|&e| i64::from(e)).collect()
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sorted, duplicate-free set of degree-`d` lattice points in `n + 1`
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePointSet {
    pub n: usize,
    pub d: u32,
    pub points: Vec<ExponentVector>,
}

impl LatticePointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Artinian-or-not monomial ideal generated by distinct monomials of one
/// degree `d >= 2` in `x0, ..., xn`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    n: usize,
    d: u32,
    generators: Vec<ExponentVector>,
}

impl MonomialIdeal {
    pub fn new(n: usize, d: u32, generators: Vec<ExponentVector>) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidParameters(format!("degree d = {d} must be at least 2")));
        }
        if n < 1 {
            return Err(Error::InvalidParameters("need at least two variables".into()));
        }
        let mut generators = generators;
        for g in &generators {
            if g.num_vars() != n + 1 {
                return Err(Error::InvalidParameters(format!(
                    "monomial {g} has {} exponents, expected {}",
                    g.num_vars(),
                    n + 1
                )));
            }
            if g.degree() != d {
                return Err(Error::Degree { monomial: g.to_string(), degree: g.degree(), expected: d });
            }
        }
        generators.sort();
        generators.dedup();
        Ok(Self { n, d, generators })
    }

    /// Parses the comma-separated monomial list, e.g. `x0^3, x1^3, x0*x1*x2`.
    pub fn parse(text: &str, n: usize, d: u32) -> Result<Self> {
        let monomials = parse_monomial_list(text, n)?;
        Self::new(n, d, monomials)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    /// Number of generators. Distinct monomials of one degree always form a
    /// minimal generating set.
    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// First variable whose pure power `x_i^d` is missing from the generators.
    pub fn missing_pure_power(&self) -> Option<usize> {
        (0..=self.n).find(|&i| {
            self.generators
                .binary_search(&ExponentVector::pure_power(self.n, self.d, i))
                .is_err()
        })
    }

    pub fn is_artinian(&self) -> bool {
        self.missing_pure_power().is_none()
    }

    pub fn require_artinian(&self) -> Result<()> {
        match self.missing_pure_power() {
            Some(i) => Err(Error::NotArtinian(i)),
            None => Ok(()),
        }
    }

    /// Fails when the generator count exceeds `C(n+d-1, n-1)`.
    pub fn require_within_bound(&self) -> Result<()> {
        let bound = generator_bound(self.n, self.d);
        if self.generators.len() as u64 > bound {
            return Err(Error::BoundExceeded { generators: self.generators.len(), bound });
        }
        Ok(())
    }

    pub fn contains_generator(&self, m: &ExponentVector) -> bool {
        self.generators.binary_search(m).is_ok()
    }

    /// Degree-`d` monomials outside the ideal: the exponents of the inverse
    /// system in degree `d`.
    pub fn inverse_system_points(&self) -> LatticePointSet {
        let points = simplex_points(self.n, self.d)
            .points
            .into_iter()
            .filter(|p| !self.contains_generator(p))
            .collect();
        LatticePointSet { n: self.n, d: self.d, points }
    }

    /// Same ideal with one generator removed.
    pub fn without(&self, index: usize) -> Self {
        let mut generators = self.generators.clone();
        generators.remove(index);
        Self { n: self.n, d: self.d, generators }
    }

    /// Same ideal with an extra generator (of degree `d`).
    pub fn with(&self, m: ExponentVector) -> Result<Self> {
        let mut generators = self.generators.clone();
        generators.push(m);
        Self::new(self.n, self.d, generators)
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut generators: Vec<_> = self.generators.iter().map(|g| g.permuted(perm)).collect();
        generators.sort();
        Self { n: self.n, d: self.d, generators }
    }

    /// Least generator list, in this crate's monomial order, over all
    /// permutations of the variables.
    pub fn canonical_form(&self) -> Self {
        permutations(self.n + 1)
            .iter()
            .map(|p| self.permuted(p))
            .min_by(|a, b| a.generators.cmp(&b.generators))
            .expect("at least the identity permutation")
    }

    /// Canonical text form, accepted back by [`MonomialIdeal::parse`].
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self}) [n={}, d={}]", self.n, self.d)
    }
}

/// Every degree-`d` exponent vector in `n + 1` variables; `C(n+d, n)` points.
pub fn simplex_points(n: usize, d: u32) -> LatticePointSet {
    fn fill(rest: u32, slot: usize, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if slot + 1 == cur.len() {
            cur[slot] = rest;
            out.push(ExponentVector(cur.clone()));
            return;
        }
        for e in (0..=rest).rev() {
            cur[slot] = e;
            fill(rest - e, slot + 1, cur, out);
        }
    }
    let mut points = Vec::new();
    fill(d, 0, &mut vec![0; n + 1], &mut points);
    LatticePointSet { n, d, points }
}

/// Exponent vectors of degree at most `bound` in `vars` variables, ordered
/// by degree and then by this crate's monomial order.
pub fn monomials_up_to(vars: usize, bound: u32) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    if vars == 0 {
        out.push(ExponentVector(Vec::new()));
        return out;
    }
    for k in 0..=bound {
        out.extend(simplex_points(vars - 1, k).points);
    }
    out
}

/// The `n + 1` vertices `d * e_i` of the dilated simplex.
pub fn vertices(n: usize, d: u32) -> LatticePointSet {
    let mut points: Vec<_> = (0..=n).map(|i| ExponentVector::pure_power(n, d, i)).collect();
    points.sort();
    LatticePointSet { n, d, points }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        0
    } else {
        num_integer::binomial(n, k)
    }
}

/// Upper bound `C(n+d-1, n-1)` on the number of generators of a Togliatti
/// system.
pub fn generator_bound(n: usize, d: u32) -> u64 {
    binomial(n as u64 + u64::from(d) - 1, n as u64 - 1)
}

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..k).collect();
    let mut out = vec![current.clone()];
    loop {
        let Some(i) = (1..k).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

/// Index of the lattice points of `d * Delta_n`, with precomputed variable
/// permutations acting on point indices. Used by the hot loops, which work
/// with sorted index lists instead of [`MonomialIdeal`] values.
#[derive(Clone, Debug)]
pub struct Simplex {
    pub n: usize,
    pub d: u32,
    points: Vec<ExponentVector>,
    lookup: HashMap<ExponentVector, usize>,
    pure_powers: Vec<usize>,
    perm_maps: Vec<Vec<usize>>,
}

impl Simplex {
    pub fn new(n: usize, d: u32) -> Self {
        let points = simplex_points(n, d).points;
        let lookup: HashMap<_, _> =
            points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let pure_powers = (0..=n)
            .map(|i| lookup[&ExponentVector::pure_power(n, d, i)])
            .collect();
        let perm_maps = permutations(n + 1)
            .iter()
            .map(|perm| points.iter().map(|p| lookup[&p.permuted(perm)]).collect())
            .collect();
        Self { n, d, points, lookup, pure_powers, perm_maps }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ExponentVector] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &ExponentVector {
        &self.points[i]
    }

    pub fn index_of(&self, p: &ExponentVector) -> Option<usize> {
        self.lookup.get(p).copied()
    }

    /// Indices of the pure powers, in variable order.
    pub fn pure_powers(&self) -> &[usize] {
        &self.pure_powers
    }

    pub fn is_vertex(&self, i: usize) -> bool {
        self.pure_powers.contains(&i)
    }

    /// Sorted point indices of the generators of `ideal`.
    pub fn indices(&self, ideal: &MonomialIdeal) -> Vec<usize> {
        assert_eq!((ideal.n(), ideal.d()), (self.n, self.d));
        let mut idx: Vec<usize> = ideal.generators().iter().map(|g| self.lookup[g]).collect();
        idx.sort_unstable();
        idx
    }

    pub fn ideal(&self, indices: &[usize]) -> MonomialIdeal {
        let mut generators: Vec<_> = indices.iter().map(|&i| self.points[i].clone()).collect();
        generators.sort();
        MonomialIdeal { n: self.n, d: self.d, generators }
    }

    /// Sorted index list of the canonical form. Since points are indexed in
    /// monomial order, comparing sorted index lists compares generator lists.
    pub fn canonical_indices(&self, indices: &[usize]) -> Vec<usize> {
        let mut best: Option<Vec<usize>> = None;
        let mut buf = Vec::with_capacity(indices.len());
        for map in &self.perm_maps {
            buf.clear();
            buf.extend(indices.iter().map(|&i| map[i]));
            buf.sort_unstable();
            if best.as_ref().is_none_or(|b| buf < *b) {
                best = Some(buf.clone());
            }
        }
        best.unwrap_or_default()
    }

    pub fn permutation_maps(&self) -> &[Vec<usize>] {
        &self.perm_maps
    }
}

fn parse_monomial_list(text: &str, n: usize) -> Result<Vec<ExponentVector>> {
    let mut p = Parser { bytes: text.as_bytes(), pos: 0, n };
    let mut out = vec![p.monomial()?];
    loop {
        p.skip_ws();
        if p.pos == p.bytes.len() {
            return Ok(out);
        }
        p.expect(b',')?;
        out.push(p.monomial()?);
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    n: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { position: self.pos, message: message.into() })
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(format!("expected '{}'", c as char))
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a decimal number");
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        digits.parse().or_else(|_| self.error("number too large"))
    }

    fn monomial(&mut self) -> Result<ExponentVector> {
        let mut exps = vec![0u32; self.n + 1];
        loop {
            self.expect(b'x')?;
            let index = self.number()?;
            if index > self.n {
                return Err(Error::Index { index, n: self.n });
            }
            let mut exponent = 1usize;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                exponent = self.number()?;
                if exponent == 0 {
                    return self.error("exponent must be at least 1");
                }
            }
            let exponent = u32::try_from(exponent).or_else(|_| self.error("exponent too large"))?;
            exps[index] = exps[index]
                .checked_add(exponent)
                .map_or_else(|| self.error("exponent too large"), Ok)?;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok(ExponentVector(exps));
            }
        }
    }
}

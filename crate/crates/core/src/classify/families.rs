//! Ideals listed by the classification theorems, generated at a given
//! `(n, d)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::fixtures::Fixtures;
use crate::error::{Error, Result};
use crate::monomials::{simplex_points, ExponentVector, MonomialIdeal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    /// Minimal systems with `2n + 1` generators.
    T36,
    /// Smooth minimal systems with `2n + 2` generators.
    T37,
    /// Minimal systems with 7 generators in 3 variables, `d >= 10`.
    Main1,
    /// Smooth minimal systems with `2n + 3` generators.
    Main2,
    /// A non-smooth minimal system with 9 generators in 4 variables.
    Rem1,
    /// Sporadic 7-generator systems for `6 <= d <= 9`.
    Rem2,
}

impl Theorem {
    pub const ALL: [Theorem; 6] =
        [Theorem::T36, Theorem::T37, Theorem::Main1, Theorem::Main2, Theorem::Rem1, Theorem::Rem2];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::T36 => "T36",
            Theorem::T37 => "T37",
            Theorem::Main1 => "MAIN1",
            Theorem::Main2 => "MAIN2",
            Theorem::Rem1 => "REM1",
            Theorem::Rem2 => "REM2",
        }
    }

    /// Number of generators of the systems the theorem lists.
    pub fn mu(self, n: usize) -> usize {
        match self {
            Theorem::T36 => 2 * n + 1,
            Theorem::T37 => 2 * n + 2,
            Theorem::Main1 | Theorem::Rem2 => 7,
            Theorem::Main2 | Theorem::Rem1 => 2 * n + 3,
        }
    }

    /// The theorem only lists smooth systems.
    pub fn smooth_only(self) -> bool {
        matches!(self, Theorem::T37 | Theorem::Main2)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameters(format!("unknown theorem {s}")))
    }
}

impl Serialize for Theorem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Theorem and item label, e.g. `MAIN1` item `4:A[3]`. Serializes as
/// `MAIN1(4:A[3])`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyId {
    pub theorem: Theorem,
    pub item: String,
}

impl FamilyId {
    fn new(theorem: Theorem, item: impl Into<String>) -> Self {
        Self { theorem, item: item.into() }
    }
}

impl Serialize for FamilyId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.theorem, self.item)
    }
}

fn ev(e: &[u32]) -> ExponentVector {
    ExponentVector::new(e.to_vec())
}

fn pure_powers(n: usize, d: u32) -> Vec<ExponentVector> {
    (0..=n).map(|i| ExponentVector::pure_power(n, d, i)).collect()
}

/// Pure powers plus `m * q` for each `q`.
fn with_multiples(n: usize, d: u32, m: &ExponentVector, qs: &[ExponentVector]) -> Result<MonomialIdeal> {
    let mut gens = pure_powers(n, d);
    gens.extend(qs.iter().map(|q| m.mul(q)));
    MonomialIdeal::new(n, d, gens)
}

/// `M(k)` (all exponents at most `k - 1`) or `M^0(k)` (all exponents at
/// least one), in three variables.
pub fn m_set(k: u32, interior: bool) -> Vec<ExponentVector> {
    simplex_points(2, k)
        .points
        .into_iter()
        .filter(|m| {
            let e = m.exponents();
            if interior {
                e.iter().all(|&x| x >= 1)
            } else {
                e.iter().all(|&x| x < k)
            }
        })
        .collect()
}

fn parse_fixed(text: &str, n: usize, d: u32) -> MonomialIdeal {
    MonomialIdeal::parse(text, n, d).expect("well-formed literal")
}

fn unsupported(theorem: Theorem, n: usize, d: u32, why: &str) -> Error {
    Error::UnsupportedParameters(format!("{theorem} at n = {n}, d = {d}: {why}"))
}

fn main_families(theorem: Theorem, n: usize, d: u32, fixtures: &Fixtures) -> Result<Vec<(FamilyId, MonomialIdeal)>> {
    let interior = theorem == Theorem::Main2;
    let quadrics_1 = [ev(&[2, 0, 0]), ev(&[0, 2, 0]), ev(&[1, 0, 1]), ev(&[0, 1, 1])];
    let quadrics_2 = [ev(&[2, 0, 0]), ev(&[0, 2, 0]), ev(&[1, 1, 0]), ev(&[0, 0, 2])];
    let cubics = [ev(&[3, 0, 0]), ev(&[0, 3, 0]), ev(&[0, 0, 3]), ev(&[1, 1, 1])];
    let labels: [&str; 3] = if interior { ["i", "ii", "iii"] } else { ["1", "2", "3"] };
    let mut out = Vec::new();
    for (label, k, qs) in [
        (labels[0], d - 2, &quadrics_1[..]),
        (labels[1], d - 2, &quadrics_2[..]),
        (labels[2], d - 3, &cubics[..]),
    ] {
        for m in m_set(k, interior) {
            out.push((FamilyId::new(theorem, format!("{label}[{m}]")), with_multiples(n, d, &m, qs)?));
        }
    }
    if !interior {
        for (label, name, shift, set) in [
            ("4", "A", 3, &fixtures.set_a),
            ("5", "B", 4, &fixtures.set_b),
            ("6", "C", 5, &fixtures.set_c),
        ] {
            let m = ExponentVector::pure_power(2, d - shift, 0);
            for (i, j) in set.iter().enumerate() {
                let item = format!("{label}:{name}[{}]", i + 1);
                out.push((FamilyId::new(theorem, item), with_multiples(n, d, &m, j)?));
            }
        }
    }
    Ok(out)
}

/// Every ideal a theorem lists at `(n, d)`, with its label, before
/// canonicalization (so permutation-equivalent duplicates may remain).
pub fn family_members(theorem: Theorem, n: usize, d: u32, fixtures: &Fixtures) -> Result<Vec<(FamilyId, MonomialIdeal)>> {
    let mut out = Vec::new();
    match theorem {
        Theorem::T36 => {
            if n < 2 || d < 4 {
                return Err(unsupported(theorem, n, d, "needs n >= 2 and d >= 4"));
            }
            let mut gens: Vec<_> = (1..=n).map(|i| ExponentVector::pure_power(n, d, i)).collect();
            let m = ExponentVector::pure_power(n, d - 1, 0);
            gens.extend((0..=n).map(|j| m.mul(&ExponentVector::pure_power(n, 1, j))));
            out.push((FamilyId::new(theorem, "i"), MonomialIdeal::new(n, d, gens)?));
            if (n, d) == (2, 5) {
                out.push((FamilyId::new(theorem, "ii"), parse_fixed("x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^2*x2^2", 2, 5)));
            }
            if (n, d) == (2, 4) {
                out.push((FamilyId::new(theorem, "iii"), parse_fixed("x0^4,x1^4,x2^4,x0*x1*x2^2,x0^2*x1^2", 2, 4)));
            }
        }
        Theorem::T37 => {
            if n < 2 || d < 4 {
                return Err(unsupported(theorem, n, d, "needs n >= 2 and d >= 4"));
            }
            let linear: Vec<_> = (0..=n).map(|j| ExponentVector::pure_power(n, 1, j)).collect();
            for m in simplex_points(n, d - 1).points {
                let e = m.exponents();
                if e.windows(2).all(|w| w[0] >= w[1]) && e[2] > 0 {
                    out.push((FamilyId::new(theorem, format!("i[{m}]")), with_multiples(n, d, &m, &linear)?));
                }
            }
            let listed: &[&str] = match (n, d) {
                (2, 5) => &[
                    "x0^5,x1^5,x2^5,x0^3*x1*x2,x0^2*x1^2*x2,x0*x1^3*x2",
                    "x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^3*x2,x0*x1*x2^3",
                    "x0^5,x1^5,x2^5,x0^2*x1^2*x2,x0^2*x1*x2^2,x0*x1^2*x2^2",
                ],
                (2, 7) => &[
                    "x0^7,x1^7,x2^7,x0^3*x1^3*x2,x0^3*x1*x2^3,x0*x1^3*x2^3",
                    "x0^7,x1^7,x2^7,x0^5*x1*x2,x0*x1^5*x2,x0*x1*x2^5",
                    "x0^7,x1^7,x2^7,x0*x1*x2^5,x0^3*x1^3*x2,x0^2*x1^2*x2^3",
                    "x0^7,x1^7,x2^7,x0^4*x1*x2^2,x0^2*x1^4*x2,x0*x1^2*x2^4",
                ],
                _ => &[],
            };
            let item = if d == 5 { "ii" } else { "iii" };
            for (i, text) in listed.iter().enumerate() {
                out.push((FamilyId::new(theorem, format!("{item}[{}]", i + 1)), parse_fixed(text, n, d)));
            }
        }
        Theorem::Main1 => {
            if n != 2 || d < 6 {
                return Err(unsupported(theorem, n, d, "needs n = 2 and d >= 6"));
            }
            out = main_families(theorem, n, d, fixtures)?;
        }
        Theorem::Main2 => {
            if n < 2 || d < 6 {
                return Err(unsupported(theorem, n, d, "needs n >= 2 and d >= 6"));
            }
            // for n >= 3 the theorem asserts there are none
            if n == 2 {
                out = main_families(theorem, n, d, fixtures)?;
            }
        }
        Theorem::Rem1 => {
            if n != 3 || d < 10 {
                return Err(unsupported(theorem, n, d, "needs n = 3 and d >= 10"));
            }
            let m = ExponentVector::pure_power(3, d - 2, 0);
            let qs = [ev(&[1, 1, 0, 0]), ev(&[0, 0, 1, 1]), ev(&[0, 2, 0, 0]), ev(&[0, 0, 2, 0]), ev(&[0, 0, 0, 2])];
            out.push((FamilyId::new(theorem, "rem1"), with_multiples(n, d, &m, &qs)?));
        }
        Theorem::Rem2 => {
            let list = fixtures
                .rem2
                .get(&d)
                .filter(|_| n == 2)
                .ok_or_else(|| unsupported(theorem, n, d, "lists exist for n = 2, 6 <= d <= 9"))?;
            for (i, ideal) in list.iter().enumerate() {
                out.push((FamilyId::new(theorem, format!("d{d}[{}]", i + 1)), ideal.clone()));
            }
        }
    }
    Ok(out)
}

/// Canonical forms of the ideals a theorem lists at `(n, d)`, sorted and
/// duplicate-free.
pub fn theorem_families(theorem: Theorem, d: u32, n: usize, fixtures: &Fixtures) -> Result<Vec<MonomialIdeal>> {
    Ok(family_index(&[theorem], n, d, fixtures)?.into_keys().collect())
}

/// Canonical ideal to its first label, over the given theorems. Theorems
/// unsupported at `(n, d)` are skipped when more than one is given.
pub fn family_index(
    theorems: &[Theorem],
    n: usize,
    d: u32,
    fixtures: &Fixtures,
) -> Result<BTreeMap<MonomialIdeal, FamilyId>> {
    let mut index = BTreeMap::new();
    for &t in theorems {
        let members = match family_members(t, n, d, fixtures) {
            Ok(m) => m,
            Err(Error::UnsupportedParameters(_)) if theorems.len() > 1 => continue,
            Err(e) => return Err(e),
        };
        for (id, ideal) in members {
            index.entry(ideal.canonical_form()).or_insert(id);
        }
    }
    Ok(index)
}

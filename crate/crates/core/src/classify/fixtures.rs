//! Transcribed classification data: the sporadic `mu = 7` systems for
//! `6 <= d <= 9`, the sets `A`, `B`, `C`, and the labeled smoothness verdicts.
//!
//! Format: one entry per line, `#` starts a comment line, blank lines are
//! ignored. Comment lines starting with `# repair:` document a deviation from
//! the printed text and are surfaced in diff reports.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Error, Result};
use crate::monomials::{ExponentVector, MonomialIdeal};

const REM2: [(u32, &str, &str); 4] = [
    (6, "rem2_d6.txt", include_str!("../../fixtures/rem2_d6.txt")),
    (7, "rem2_d7.txt", include_str!("../../fixtures/rem2_d7.txt")),
    (8, "rem2_d8.txt", include_str!("../../fixtures/rem2_d8.txt")),
    (9, "rem2_d9.txt", include_str!("../../fixtures/rem2_d9.txt")),
];
const SETS: [(&str, u32, &str); 3] = [
    ("setA.txt", 3, include_str!("../../fixtures/setA.txt")),
    ("setB.txt", 4, include_str!("../../fixtures/setB.txt")),
    ("setC.txt", 5, include_str!("../../fixtures/setC.txt")),
];
const LABELED: (&str, &str) = ("labeled_verdicts.txt", include_str!("../../fixtures/labeled_verdicts.txt"));

/// A reference smoothness verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledVerdict {
    pub label: String,
    pub ideal: MonomialIdeal,
    pub smooth: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixtures {
    /// Sporadic ideals by degree.
    pub rem2: BTreeMap<u32, Vec<MonomialIdeal>>,
    /// Sets `A`, `B`, `C`: four monomials of degree 3, 4, 5 in `x0, x1, x2`.
    pub set_a: Vec<Vec<ExponentVector>>,
    pub set_b: Vec<Vec<ExponentVector>>,
    pub set_c: Vec<Vec<ExponentVector>>,
    pub labeled: Vec<LabeledVerdict>,
    /// `file: note` for every documented repair.
    pub repairs: Vec<String>,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn repairs_in(file: &str, text: &str) -> Vec<String> {
    text.lines()
        .filter_map(|l| l.trim().strip_prefix("# repair:"))
        .map(|note| format!("{file}: {}", note.trim()))
        .collect()
}

fn fixture_error(file: &str, line: usize, e: impl std::fmt::Display) -> Error {
    Error::Fixture { file: file.to_string(), message: format!("line {line}: {e}") }
}

/// Parses a file of ideals, one per line.
pub fn parse_ideal_lines(file: &str, text: &str, n: usize, d: u32) -> Result<Vec<MonomialIdeal>> {
    content_lines(text)
        .map(|(i, l)| MonomialIdeal::parse(l, n, d).map_err(|e| fixture_error(file, i, e)))
        .collect()
}

fn parse_set(file: &str, text: &str, degree: u32) -> Result<Vec<Vec<ExponentVector>>> {
    let ideals = parse_ideal_lines(file, text, 2, degree)?;
    for (k, j) in ideals.iter().enumerate() {
        if j.num_generators() != 4 {
            return Err(fixture_error(file, k + 1, "expected four distinct monomials"));
        }
    }
    Ok(ideals.into_iter().map(|j| j.generators().to_vec()).collect())
}

fn parse_labeled(file: &str, text: &str) -> Result<Vec<LabeledVerdict>> {
    content_lines(text)
        .map(|(i, l)| {
            let fields: Vec<&str> = l.split_whitespace().collect();
            let [label, n, d, verdict, ideal] = fields[..] else {
                return Err(fixture_error(file, i, "expected: label n d verdict ideal"));
            };
            let n: usize = n.parse().map_err(|e| fixture_error(file, i, e))?;
            let d: u32 = d.parse().map_err(|e| fixture_error(file, i, e))?;
            let smooth = match verdict {
                "smooth" => true,
                "nonsmooth" => false,
                other => return Err(fixture_error(file, i, format!("unknown verdict {other}"))),
            };
            let ideal = MonomialIdeal::parse(ideal, n, d).map_err(|e| fixture_error(file, i, e))?;
            Ok(LabeledVerdict { label: label.to_string(), ideal, smooth })
        })
        .collect()
}

impl Fixtures {
    /// The fixtures compiled into the library.
    pub fn bundled() -> Self {
        Self::from_texts(|name| Ok(Self::bundled_text(name).to_string()))
            .expect("bundled fixtures parse")
    }

    fn bundled_text(name: &str) -> &'static str {
        REM2.iter()
            .map(|(_, f, t)| (*f, *t))
            .chain(SETS.iter().map(|(f, _, t)| (*f, *t)))
            .chain([LABELED])
            .find(|(f, _)| *f == name)
            .map(|(_, t)| t)
            .expect("known fixture name")
    }

    /// Fixtures read from a directory holding files with the bundled names.
    pub fn from_dir(dir: &Path) -> Result<Self> {
        Self::from_texts(|name| {
            std::fs::read_to_string(dir.join(name))
                .map_err(|e| Error::Fixture { file: name.to_string(), message: e.to_string() })
        })
    }

    fn from_texts(read: impl Fn(&str) -> Result<String>) -> Result<Self> {
        let mut repairs = Vec::new();
        let mut rem2 = BTreeMap::new();
        for (d, file, _) in REM2 {
            let text = read(file)?;
            repairs.extend(repairs_in(file, &text));
            rem2.insert(d, parse_ideal_lines(file, &text, 2, d)?);
        }
        let mut sets = Vec::new();
        for (file, degree, _) in SETS {
            let text = read(file)?;
            repairs.extend(repairs_in(file, &text));
            sets.push(parse_set(file, &text, degree)?);
        }
        let text = read(LABELED.0)?;
        repairs.extend(repairs_in(LABELED.0, &text));
        let labeled = parse_labeled(LABELED.0, &text)?;
        let set_c = sets.pop().unwrap();
        let set_b = sets.pop().unwrap();
        let set_a = sets.pop().unwrap();
        Ok(Self { rem2, set_a, set_b, set_c, labeled, repairs })
    }
}

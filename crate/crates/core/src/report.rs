//! Full verdict for a single ideal.

use serde::{Serialize, Serializer};

use crate::classify::{family_index, FamilyId, Fixtures, Theorem};
use crate::error::Result;
use crate::lattice::{hypersurface_dim, is_minimal_prop33, is_minimal_removal};
use crate::lefschetz::{fails_wlp_dminus1, restricted_dependence};
use crate::monomials::{ExponentVector, MonomialIdeal};
use crate::toric::is_smooth;

/// Smoothness verdict, or `"skipped"` when it was not requested.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmoothField {
    Value(bool),
    Skipped,
}

impl Serialize for SmoothField {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            SmoothField::Value(b) => s.serialize_bool(*b),
            SmoothField::Skipped => s.serialize_str("skipped"),
        }
    }
}

/// Matched theorem item, or `"unlisted"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedFamily(pub Option<FamilyId>);

impl Serialize for MatchedFamily {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match &self.0 {
            Some(id) => s.collect_str(id),
            None => s.serialize_str("unlisted"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    /// Generators whose removal leaves a Togliatti system.
    pub removal: Vec<ExponentVector>,
    /// Non-vertex generators some hypersurface through `A_I` passes through.
    pub hypersurface: Vec<ExponentVector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckReport {
    pub ideal: MonomialIdeal,
    pub canonical: MonomialIdeal,
    pub n: usize,
    pub d: u32,
    pub r: usize,
    pub artinian: bool,
    pub togliatti: bool,
    pub restricted_dependence: bool,
    pub wlp_kernel_dim: usize,
    pub hypersurface_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal_removal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal_prop33: Option<bool>,
    pub smooth: SmoothField,
    pub matched_family: MatchedFamily,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Witnesses>,
}

/// Runs every check on `ideal`. Fails on non-artinian ideals and ideals
/// with more generators than a Togliatti system can have.
pub fn check_ideal(ideal: &MonomialIdeal, with_smooth: bool, fixtures: &Fixtures) -> Result<CheckReport> {
    ideal.require_artinian()?;
    ideal.require_within_bound()?;
    let wlp = fails_wlp_dminus1(ideal)?;
    let dim = hypersurface_dim(ideal)?;
    let togliatti = dim > 0;
    let (minimal_removal, minimal_prop33, witnesses) = if togliatti {
        let removal = is_minimal_removal(ideal)?;
        let prop33 = is_minimal_prop33(ideal)?;
        (
            Some(removal.minimal),
            Some(prop33.minimal),
            Some(Witnesses { removal: removal.witnesses, hypersurface: prop33.witnesses }),
        )
    } else {
        (None, None, None)
    };
    let smooth = if with_smooth { SmoothField::Value(is_smooth(ideal)?.smooth) } else { SmoothField::Skipped };
    let canonical = ideal.canonical_form();
    let matched = family_index(&Theorem::ALL, ideal.n(), ideal.d(), fixtures)?.get(&canonical).cloned();
    Ok(CheckReport {
        ideal: ideal.clone(),
        canonical,
        n: ideal.n(),
        d: ideal.d(),
        r: ideal.num_generators(),
        artinian: true,
        togliatti,
        restricted_dependence: restricted_dependence(ideal)?,
        wlp_kernel_dim: wlp.kernel_dim,
        hypersurface_dim: dim,
        minimal_removal,
        minimal_prop33,
        smooth,
        matched_family: MatchedFamily(matched),
        witnesses,
    })
}

//! Exhaustive search for minimal monomial Togliatti systems with a fixed
//! number of generators, up to permutation of the variables.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::families::{family_index, FamilyId, Theorem};
use super::fixtures::Fixtures;
use crate::error::{Error, Result};
use crate::lattice::LatticeContext;
use crate::lefschetz::LefschetzContext;
use crate::monomials::{binomial, generator_bound, MonomialIdeal, Simplex};
use crate::toric::is_smooth;

/// Default cap on the number of candidate generator sets.
pub const DEFAULT_CEILING: u128 = 5_000_000;

/// Precomputed Togliatti and minimality tests for one `(n, d)`, on sorted
/// index lists of a [`Simplex`].
#[derive(Clone, Debug)]
pub struct Checker {
    pub simplex: Simplex,
    pub lefschetz: LefschetzContext,
    pub lattice: LatticeContext,
}

impl Checker {
    pub fn new(n: usize, d: u32) -> Self {
        let simplex = Simplex::new(n, d);
        let lefschetz = LefschetzContext::new(&simplex);
        let lattice = LatticeContext::new(&simplex);
        Self { simplex, lefschetz, lattice }
    }

    /// Hypersurface route.
    pub fn is_togliatti(&self, generators: &[usize]) -> bool {
        self.lattice.hypersurface_dim(generators) > 0
    }

    /// Non-vertex generators whose removal leaves a Togliatti system, by the
    /// multiplication-map route.
    pub fn removal_witnesses(&self, generators: &[usize]) -> Vec<usize> {
        let mut rest = Vec::with_capacity(generators.len());
        generators
            .iter()
            .copied()
            .filter(|&g| !self.simplex.is_vertex(g))
            .filter(|&g| {
                rest.clear();
                rest.extend(generators.iter().copied().filter(|&h| h != g));
                self.lefschetz.verdict(&rest).fails_wlp
            })
            .collect()
    }

    pub fn is_minimal_togliatti(&self, generators: &[usize]) -> bool {
        self.is_togliatti(generators) && self.removal_witnesses(generators).is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    /// Worker threads; 0 uses the global pool.
    pub jobs: usize,
    pub ceiling: u128,
    /// Compute the smoothness flag of each result.
    pub with_smooth: bool,
    /// Keep only smooth results (implies `with_smooth`).
    pub smooth_only: bool,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        Self { jobs: 0, ceiling: DEFAULT_CEILING, with_smooth: false, smooth_only: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoundIdeal {
    pub ideal: MonomialIdeal,
    /// First theorem item listing the ideal at this `(n, d)`, if any.
    pub family: Option<FamilyId>,
    pub smooth: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationResult {
    pub n: usize,
    pub d: u32,
    pub mu: usize,
    pub candidates: u128,
    pub found: Vec<FoundIdeal>,
}

impl ClassificationResult {
    pub fn ideals(&self) -> Vec<MonomialIdeal> {
        self.found.iter().map(|f| f.ideal.clone()).collect()
    }
}

/// Number of generator sets made of the pure powers and `mu - n - 1` other
/// degree-`d` monomials.
pub fn candidate_count(n: usize, d: u32, mu: usize) -> u128 {
    let total = binomial(n as u64 + u64::from(d), n as u64);
    let free = total - (n as u64 + 1);
    match mu.checked_sub(n + 1) {
        Some(k) => binomial_u128(u128::from(free), k as u128),
        None => 0,
    }
}

fn binomial_u128(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Checks `2n + 1 <= mu <= C(n+d-1, n-1)`. The lower bound is known for
/// `d >= 4`; for cubics only `mu >= n + 2` is required, since the Togliatti
/// cubic has `2n` generators.
pub fn require_mu_in_bounds(n: usize, d: u32, mu: usize) -> Result<()> {
    let low = if d >= 4 { 2 * n as u64 + 1 } else { n as u64 + 2 };
    let high = generator_bound(n, d);
    if (mu as u64) < low || mu as u64 > high {
        return Err(Error::BoundViolation { mu, low, high });
    }
    Ok(())
}

/// Calls `f` on every `k`-subset of `pool` whose smallest element is
/// `pool[first]`, in lexicographic order.
fn for_each_with_first(pool: &[usize], first: usize, k: usize, mut f: impl FnMut(&[usize])) {
    let mut chosen = vec![first];
    fn rec(pool: &[usize], start: usize, k: usize, chosen: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if chosen.len() == k {
            let idx: Vec<usize> = chosen.iter().map(|&i| pool[i]).collect();
            f(&idx);
            return;
        }
        let need = k - chosen.len();
        for i in start..=pool.len() - need {
            chosen.push(i);
            rec(pool, i + 1, k, chosen, f);
            chosen.pop();
        }
    }
    rec(pool, first + 1, k, &mut chosen, &mut f);
}

/// Canonical index lists of all minimal Togliatti systems among the
/// candidates.
fn search(checker: &Checker, mu: usize) -> BTreeSet<Vec<usize>> {
    let s = &checker.simplex;
    let pool: Vec<usize> = (0..s.len()).filter(|&i| !s.is_vertex(i)).collect();
    let k = mu - s.n - 1;
    let firsts: Vec<usize> = (0..pool.len().saturating_sub(k - 1)).collect();
    firsts
        .into_par_iter()
        .map(|first| {
            let mut local = BTreeSet::new();
            let mut gens = Vec::with_capacity(mu);
            for_each_with_first(&pool, first, k, |chosen| {
                gens.clear();
                gens.extend_from_slice(s.pure_powers());
                gens.extend_from_slice(chosen);
                gens.sort_unstable();
                if checker.is_minimal_togliatti(&gens) {
                    local.insert(s.canonical_indices(&gens));
                }
            });
            local
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        })
}

fn in_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs == 0 {
        return f();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
        .install(f)
}

/// All minimal monomial Togliatti systems in `n + 1` variables of degree `d`
/// with `mu` generators, one canonical representative per permutation
/// class, sorted.
pub fn enumerate_minimal(n: usize, d: u32, mu: usize, options: &EnumerateOptions) -> Result<ClassificationResult> {
    precheck(n, d, mu, options.ceiling)?;
    enumerate_with(&Checker::new(n, d), mu, options, &Fixtures::bundled())
}

/// Parameter, bound and ceiling checks, done before any precomputation.
/// Returns the candidate count.
pub fn precheck(n: usize, d: u32, mu: usize, ceiling: u128) -> Result<u128> {
    if n < 1 || d < 2 {
        return Err(Error::InvalidParameters(format!("need n >= 1 and d >= 2, got n = {n}, d = {d}")));
    }
    require_mu_in_bounds(n, d, mu)?;
    let candidates = candidate_count(n, d, mu);
    if candidates > ceiling {
        return Err(Error::TooLarge { candidates, ceiling });
    }
    Ok(candidates)
}

/// [`enumerate_minimal`] with a prebuilt checker and explicit fixtures.
pub fn enumerate_with(
    checker: &Checker,
    mu: usize,
    options: &EnumerateOptions,
    fixtures: &Fixtures,
) -> Result<ClassificationResult> {
    let (n, d) = (checker.simplex.n, checker.simplex.d);
    let candidates = precheck(n, d, mu, options.ceiling)?;
    let with_smooth = options.with_smooth || options.smooth_only;
    let (canonical, smooth) = in_pool(options.jobs, || {
        let canonical: Vec<MonomialIdeal> =
            search(checker, mu).iter().map(|idx| checker.simplex.ideal(idx)).collect();
        let smooth: Option<Vec<bool>> = with_smooth.then(|| {
            canonical
                .par_iter()
                .map(|i| is_smooth(i).map(|v| v.smooth).unwrap_or(false))
                .collect()
        });
        (canonical, smooth)
    });
    let index = family_index(&Theorem::ALL, n, d, fixtures)?;
    let mut found: Vec<FoundIdeal> = canonical
        .into_iter()
        .enumerate()
        .map(|(i, ideal)| FoundIdeal {
            family: index.get(&ideal).cloned(),
            smooth: smooth.as_ref().map(|s| s[i]),
            ideal,
        })
        .collect();
    if options.smooth_only {
        found.retain(|f| f.smooth == Some(true));
    }
    found.sort_by(|a, b| a.ideal.cmp(&b.ideal));
    Ok(ClassificationResult { n, d, mu, candidates, found })
}

//! Acceptance suite: one line per criterion, non-zero exit on any failure.
//!
//! Expected sets are rebuilt here from the theorem statements instead of
//! being taken from the library's family generators, except where a
//! criterion is phrased as agreement with those generators.

use std::collections::{BTreeSet, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use togliatti::classify::{
    enumerate_minimal, theorem_families, Checker, ClassificationResult, EnumerateOptions,
    Fixtures, Theorem,
};
use togliatti::lattice::{hypersurface_dim, hypersurface_space, is_minimal_prop33, is_minimal_removal, is_togliatti};
use togliatti::lefschetz::{fails_wlp_dminus1, restricted_dependence};
use togliatti::monomials::{generator_bound, permutations, simplex_points};
use togliatti::toric::is_smooth;
use togliatti::{ExponentVector, MonomialIdeal, Rational};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ev(e: &[u32]) -> ExponentVector {
    ExponentVector::new(e.to_vec())
}

fn pure_powers(n: usize, d: u32) -> Vec<ExponentVector> {
    (0..=n).map(|i| ExponentVector::pure_power(n, d, i)).collect()
}

fn ideal(n: usize, d: u32, extra: Vec<ExponentVector>) -> MonomialIdeal {
    let mut gens = pure_powers(n, d);
    gens.extend(extra);
    MonomialIdeal::new(n, d, gens).unwrap()
}

fn parse(text: &str, n: usize, d: u32) -> MonomialIdeal {
    MonomialIdeal::parse(text, n, d).unwrap()
}

fn canonical_set(ideals: impl IntoIterator<Item = MonomialIdeal>) -> BTreeSet<MonomialIdeal> {
    ideals.into_iter().map(|i| i.canonical_form()).collect()
}

fn found_set(r: &ClassificationResult) -> BTreeSet<MonomialIdeal> {
    r.ideals().into_iter().collect()
}

fn describe_diff(found: &BTreeSet<MonomialIdeal>, expected: &BTreeSet<MonomialIdeal>) -> String {
    let extra: Vec<String> = found.difference(expected).map(ToString::to_string).collect();
    let missing: Vec<String> = expected.difference(found).map(ToString::to_string).collect();
    format!("extra {:?}, missing {:?}", extra, missing)
}

/// `x0^{d-1}(x0..xn) + (x1^d..xn^d)`.
fn lower_bound_item_i(n: usize, d: u32) -> MonomialIdeal {
    let mut gens: Vec<ExponentVector> = (1..=n).map(|i| ExponentVector::pure_power(n, d, i)).collect();
    for j in 0..=n {
        let mut e = vec![0; n + 1];
        e[0] = d - 1;
        e[j] += 1;
        gens.push(ExponentVector::new(e));
    }
    MonomialIdeal::new(n, d, gens).unwrap()
}

fn criterion_1(_: &mut Shared) -> Outcome {
    let opts = EnumerateOptions { with_smooth: true, ..Default::default() };
    let r = enumerate_minimal(2, 3, 4, &opts).map_err(|e| e.to_string())?;
    let expected = canonical_set([parse("x0^3,x1^3,x2^3,x0*x1*x2", 2, 3)]);
    ensure(found_set(&r) == expected, || describe_diff(&found_set(&r), &expected))?;
    ensure(r.found[0].smooth == Some(true), || "Togliatti cubic not smooth".into())?;
    Ok(format!("{} candidates, 1 minimal smooth system", r.candidates))
}

/// `Q` with `x4 = 3 - (x0 + x1 + x2 + x3)`, as coefficients on monomials of
/// degree at most two in `x0..x3`.
fn dehomogenized_q() -> HashMap<Vec<u32>, i64> {
    // linear forms: x_i = [constant, c0, c1, c2, c3]
    let var = |i: usize| -> [i64; 5] {
        let mut v = [0; 5];
        if i < 4 {
            v[i + 1] = 1;
        } else {
            v = [3, -1, -1, -1, -1];
        }
        v
    };
    let mut q: HashMap<Vec<u32>, i64> = HashMap::new();
    let mut add_product = |c: i64, a: [i64; 5], b: [i64; 5]| {
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                let mut e = vec![0u32; 4];
                if i > 0 {
                    e[i - 1] += 1;
                }
                if j > 0 {
                    e[j - 1] += 1;
                }
                *q.entry(e).or_insert(0) += c * ai * bj;
            }
        }
    };
    for i in 0..5 {
        add_product(2, var(i), var(i));
    }
    add_product(9, var(0), var(1));
    add_product(9, var(2), var(3));
    for i in 0..5 {
        for j in i + 1..5 {
            add_product(-5, var(i), var(j));
        }
    }
    q.retain(|_, c| *c != 0);
    q
}

fn criterion_2(_: &mut Shared) -> Outcome {
    let i = parse(
        "x0^3,x0^2*x1,x0*x1^2,x1^3,x2^3,x2^2*x3,x2*x3^2,x3^3,x4^3,x0*x2*x4,x0*x3*x4,x1*x2*x4,x1*x3*x4",
        4,
        3,
    );
    let a = i.inverse_system_points();
    ensure(a.len() == 22, || format!("|A_I| = {}", a.len()))?;
    // Q itself vanishes on A_I
    for p in &a.points {
        let x: Vec<i64> = p.as_i64();
        let mut v = 2 * x.iter().map(|t| t * t).sum::<i64>() + 9 * (x[0] * x[1] + x[2] * x[3]);
        for s in 0..5 {
            for t in s + 1..5 {
                v -= 5 * x[s] * x[t];
            }
        }
        ensure(v == 0, || format!("Q({p}) = {v}"))?;
    }
    let space = hypersurface_space(&i).map_err(|e| e.to_string())?;
    ensure(space.dim() == 1, || format!("hypersurface space has dimension {}", space.dim()))?;
    let q = dehomogenized_q();
    let basis = &space.basis[0];
    let mut ratio: Option<Rational> = None;
    for (m, c) in space.monomials.iter().zip(basis) {
        let qc = Rational::from_integer(q.get(m.exponents()).copied().unwrap_or(0).into());
        if qc.is_zero() || c.is_zero() {
            ensure(qc.is_zero() && c.is_zero(), || format!("support differs at {m:?}"))?;
            continue;
        }
        let r = c / &qc;
        match &ratio {
            None => ratio = Some(r),
            Some(prev) => ensure(*prev == r, || format!("not proportional at {m:?}"))?,
        }
    }
    ensure(ratio.as_ref().is_some_and(|r| !r.is_zero()), || "zero generator".into())?;
    let prop33 = is_minimal_prop33(&i).map_err(|e| e.to_string())?;
    ensure(prop33.minimal, || format!("not minimal, witnesses {:?}", prop33.witnesses))?;
    ensure(is_smooth(&i).map_err(|e| e.to_string())?.smooth, || "not smooth".into())?;
    Ok(format!("|A| = 22, kernel spanned by {} * Q", ratio.unwrap().abs()))
}

fn criterion_3(_: &mut Shared) -> Outcome {
    let mut lines = Vec::new();
    for (n, d) in [(2, 4), (2, 5), (2, 6), (3, 4)] {
        let opts = EnumerateOptions { with_smooth: true, ..Default::default() };
        let r = enumerate_minimal(n, d, 2 * n + 1, &opts).map_err(|e| e.to_string())?;
        let item_i = lower_bound_item_i(n, d).canonical_form();
        let mut expected = vec![(item_i, true)];
        if (n, d) == (2, 5) {
            expected.push((parse("x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^2*x2^2", 2, 5).canonical_form(), true));
        }
        if (n, d) == (2, 4) {
            expected.push((parse("x0^4,x1^4,x2^4,x0*x1*x2^2,x0^2*x1^2", 2, 4).canonical_form(), false));
        }
        let want: BTreeSet<_> = expected.iter().map(|(i, _)| i.clone()).collect();
        ensure(found_set(&r) == want, || format!("(n,d) = ({n},{d}): {}", describe_diff(&found_set(&r), &want)))?;
        for (i, smooth) in &expected {
            let f = r.found.iter().find(|f| &f.ideal == i).unwrap();
            ensure(f.smooth == Some(*smooth), || format!("smooth flag of {i} is {:?}", f.smooth))?;
        }
        lines.push(format!("({n},{d}): {}", r.found.len()));
    }
    Ok(lines.join(", "))
}

/// Rank of a rational matrix by plain Gaussian elimination.
fn rational_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        for r in rank + 1..rows.len() {
            if rows[r][c].is_zero() {
                continue;
            }
            let f = &rows[r][c] / &rows[rank][c];
            let (top, bottom) = rows.split_at_mut(r);
            for (x, p) in bottom[0][c..].iter_mut().zip(&top[rank][c..]) {
                *x -= &f * p;
            }
        }
        rank += 1;
    }
    rank
}

/// Dimension of the degree `< d` polynomials in `(a, b)` vanishing on the
/// points `(a, b, c)`.
fn plane_hypersurfaces(d: u32, points: &[[i64; 3]]) -> usize {
    let monomials: Vec<(u32, u32)> = (0..d).flat_map(|i| (0..d - i).map(move |j| (i, j))).collect();
    let rows = points
        .iter()
        .map(|p| monomials.iter().map(|&(i, j)| Rational::from_integer((p[0].pow(i) * p[1].pow(j)).into())).collect())
        .collect();
    monomials.len() - rational_rank(rows)
}

/// Whether the semigroup generated by `gens` (in a pointed cone) is free
/// of rank two.
fn free_plane_semigroup(gens: &[[i64; 2]], w: [i64; 2]) -> bool {
    let deg = |x: [i64; 2]| w[0] * x[0] + w[1] * x[1];
    let mut memo: HashMap<[i64; 2], bool> = HashMap::new();
    fn member(x: [i64; 2], gens: &[[i64; 2]], deg: &dyn Fn([i64; 2]) -> i64, memo: &mut HashMap<[i64; 2], bool>) -> bool {
        if x == [0, 0] {
            return true;
        }
        if deg(x) <= 0 {
            return false;
        }
        if let Some(&m) = memo.get(&x) {
            return m;
        }
        let m = gens.iter().any(|g| member([x[0] - g[0], x[1] - g[1]], gens, deg, memo));
        memo.insert(x, m);
        m
    }
    let irreducible: Vec<[i64; 2]> = gens
        .iter()
        .filter(|&&x| !gens.iter().any(|&g| g != x && member([x[0] - g[0], x[1] - g[1]], gens, &deg, &mut memo)))
        .copied()
        .collect();
    irreducible.len() == 2 && (irreducible[0][0] * irreducible[1][1] - irreducible[0][1] * irreducible[1][0]).abs() == 1
}

fn cross(o: [i64; 2], a: [i64; 2], b: [i64; 2]) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Strict convex hull in counter-clockwise order (monotone chain).
fn plane_hull(mut pts: Vec<[i64; 2]>) -> Vec<[i64; 2]> {
    pts.sort_unstable();
    pts.dedup();
    let mut hull: Vec<[i64; 2]> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        for &p in &pts {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
        if pass == 0 {
            pts.reverse();
        }
    }
    hull
}

/// (Togliatti, minimal, smooth) for an ideal in three variables, computed
/// from scratch: ranks of evaluation matrices, and freeness of the
/// semigroup at every vertex chart of the toric surface.
fn plane_oracle(i: &MonomialIdeal) -> (bool, bool, bool) {
    let d = i.d();
    let to3 = |e: &ExponentVector| -> [i64; 3] {
        let v = e.as_i64();
        [v[0], v[1], v[2]]
    };
    let gens: Vec<[i64; 3]> = i.generators().iter().map(to3).collect();
    let all: Vec<[i64; 3]> =
        (0..=d as i64).flat_map(|a| (0..=d as i64 - a).map(move |b| [a, b, d as i64 - a - b])).collect();
    let a: Vec<[i64; 3]> = all.iter().filter(|p| !gens.contains(p)).copied().collect();
    let togliatti = plane_hypersurfaces(d, &a) > 0;
    let minimal = togliatti
        && gens.iter().filter(|g| g.iter().all(|&x| x < d as i64)).all(|g| {
            let mut b = a.clone();
            b.push(*g);
            plane_hypersurfaces(d, &b) == 0
        });
    let flat: Vec<[i64; 2]> = a.iter().map(|p| [p[0], p[1]]).collect();
    let hull = plane_hull(flat.clone());
    let smooth = (0..hull.len()).all(|k| {
        let v = hull[k];
        let prev = hull[(k + hull.len() - 1) % hull.len()];
        let next = hull[(k + 1) % hull.len()];
        let (e1, e2) = ([next[0] - v[0], next[1] - v[1]], [prev[0] - v[0], prev[1] - v[1]]);
        // inward normals of the two edges at v; their sum is positive on
        // the cone
        let w = [-e1[1] + e2[1], e1[0] - e2[0]];
        let diffs: Vec<[i64; 2]> = flat.iter().filter(|&&p| p != v).map(|p| [p[0] - v[0], p[1] - v[1]]).collect();
        free_plane_semigroup(&diffs, w)
    });
    (togliatti, minimal, smooth)
}

fn criterion_4(_: &mut Shared) -> Outcome {
    // the oracle itself reproduces known verdicts
    let known = [
        ("x0^3,x1^3,x2^3,x0*x1*x2", 3, (true, true, true)),
        ("x0^4,x1^4,x2^4,x0*x1*x2^2,x0^2*x1^2", 4, (true, true, false)),
        ("x0^5,x1^5,x2^5,x0^3*x1^2,x0^2*x1^3,x0^2*x1^2*x2", 5, (true, true, false)),
        ("x0^4,x1^4,x2^4,x0^2*x1*x2", 4, (false, false, true)),
    ];
    for (text, d, verdict) in known {
        ensure(plane_oracle(&parse(text, 2, d)) == verdict, || format!("plane oracle wrong on {text}"))?;
    }
    let mut lines = Vec::new();
    for d in [5u32, 7] {
        let n = 2;
        let opts = EnumerateOptions { smooth_only: true, ..Default::default() };
        let r = enumerate_minimal(n, d, 2 * n + 2, &opts).map_err(|e| e.to_string())?;
        let mut expected = Vec::new();
        // item (i): m = x0^a x1^b x2^c, a >= b >= c > 0, a + b + c = d - 1
        for a in 0..d {
            for b in 0..=a {
                let c = (d - 1) as i64 - (a + b) as i64;
                if c < 1 || c as u32 > b {
                    continue;
                }
                let m = [a, b, c as u32];
                let extra = (0..3)
                    .map(|j| {
                        let mut e = m.to_vec();
                        e[j] += 1;
                        ExponentVector::new(e)
                    })
                    .collect();
                expected.push(ideal(n, d, extra));
            }
        }
        let listed: &[&str] = if d == 5 {
            &[
                "x0^5,x1^5,x2^5,x0^3*x1*x2,x0^2*x1^2*x2,x0*x1^3*x2",
                "x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^3*x2,x0*x1*x2^3",
                "x0^5,x1^5,x2^5,x0^2*x1^2*x2,x0^2*x1*x2^2,x0*x1^2*x2^2",
            ]
        } else {
            &[
                "x0^7,x1^7,x2^7,x0^3*x1^3*x2,x0^3*x1*x2^3,x0*x1^3*x2^3",
                "x0^7,x1^7,x2^7,x0^5*x1*x2,x0*x1^5*x2,x0*x1*x2^5",
                "x0^7,x1^7,x2^7,x0*x1*x2^5,x0^3*x1^3*x2,x0^2*x1^2*x2^3",
                "x0^7,x1^7,x2^7,x0^4*x1*x2^2,x0^2*x1^4*x2,x0*x1^2*x2^4",
            ]
        };
        expected.extend(listed.iter().map(|t| parse(t, n, d)));
        let want = canonical_set(expected);
        let found = found_set(&r);
        let missing: Vec<String> = want.difference(&found).map(ToString::to_string).collect();
        ensure(missing.is_empty(), || format!("d = {d}: missing {missing:?}"))?;
        // anything beyond the list must be a smooth minimal system by the
        // plane oracle below
        let extras: Vec<&MonomialIdeal> = found.difference(&want).collect();
        for e in &extras {
            ensure(plane_oracle(e) == (true, true, true), || format!("d = {d}: unconfirmed extra {e}"))?;
        }
        let shown: Vec<String> = extras.iter().map(ToString::to_string).collect();
        lines.push(format!("d={d}: {} smooth, beyond the list {:?}", r.found.len(), shown));
    }
    Ok(lines.join(", "))
}

#[derive(Default)]
struct Shared {
    main1_d10: Option<ClassificationResult>,
    touched: Vec<(usize, u32, usize)>,
}

fn criterion_5(shared: &mut Shared) -> Outcome {
    let opts = EnumerateOptions { jobs: 1, ..Default::default() };
    let r = enumerate_minimal(2, 10, 7, &opts).map_err(|e| e.to_string())?;
    let f = Fixtures::bundled();
    let want: BTreeSet<_> = theorem_families(Theorem::Main1, 10, 2, &f).map_err(|e| e.to_string())?.into_iter().collect();
    ensure(r.candidates == 595_665, || format!("{} candidates", r.candidates))?;
    ensure(found_set(&r) == want, || describe_diff(&found_set(&r), &want))?;
    let msg = format!("{} candidates, {} classes = families (1)-(6)", r.candidates, r.found.len());
    shared.main1_d10 = Some(r);
    Ok(msg)
}

fn criterion_6(shared: &mut Shared) -> Outcome {
    let r = shared.main1_d10.as_ref().ok_or("criterion 5 produced no result")?;
    let smooth: BTreeSet<MonomialIdeal> = r
        .found
        .iter()
        .filter(|f| is_smooth(&f.ideal).map(|v| v.smooth).unwrap_or(false))
        .map(|f| f.ideal.clone())
        .collect();
    // families (1)-(3) with m having every exponent at least one
    let mut expected = Vec::new();
    let quads1 = [ev(&[2, 0, 0]), ev(&[0, 2, 0]), ev(&[1, 0, 1]), ev(&[0, 1, 1])];
    let quads2 = [ev(&[2, 0, 0]), ev(&[0, 2, 0]), ev(&[1, 1, 0]), ev(&[0, 0, 2])];
    let cubics = [ev(&[3, 0, 0]), ev(&[0, 3, 0]), ev(&[0, 0, 3]), ev(&[1, 1, 1])];
    for (k, qs) in [(8u32, &quads1), (8, &quads2), (7, &cubics)] {
        for a in 1..k {
            for b in 1..k - a {
                let m = ev(&[a, b, k - a - b]);
                expected.push(ideal(2, 10, qs.iter().map(|q| m.mul(q)).collect()));
            }
        }
    }
    let want = canonical_set(expected);
    let missing: Vec<String> = want.difference(&smooth).map(ToString::to_string).collect();
    ensure(missing.is_empty(), || format!("missing {missing:?}"))?;
    let mut beyond = Vec::new();
    for e in smooth.difference(&want) {
        ensure(plane_oracle(e) == (true, true, true), || format!("unconfirmed extra {e}"))?;
        let family = r.found.iter().find(|f| &f.ideal == e).and_then(|f| f.family.clone());
        beyond.push(family.map_or_else(|| "unlabeled".to_string(), |id| id.to_string()));
    }
    Ok(format!(
        "{} smooth of {}, {} listed, beyond the list {} confirmed smooth: {}",
        smooth.len(),
        r.found.len(),
        want.len(),
        beyond.len(),
        beyond.join(" ")
    ))
}

fn criterion_7(_: &mut Shared) -> Outcome {
    let f = Fixtures::bundled();
    let mut lines = Vec::new();
    for d in 6..=9u32 {
        let r = enumerate_minimal(2, d, 7, &EnumerateOptions::default()).map_err(|e| e.to_string())?;
        let mut want: BTreeSet<MonomialIdeal> =
            theorem_families(Theorem::Main1, d, 2, &f).map_err(|e| e.to_string())?.into_iter().collect();
        want.extend(canonical_set(f.rem2[&d].iter().cloned()));
        let found = found_set(&r);
        let missing: Vec<String> = want.difference(&found).map(ToString::to_string).collect();
        ensure(missing.is_empty(), || format!("d = {d}: missing {missing:?}"))?;
        let extras: Vec<&MonomialIdeal> = found.difference(&want).collect();
        for e in &extras {
            let (togliatti, minimal, _) = plane_oracle(e);
            ensure(togliatti && minimal, || format!("d = {d}: unconfirmed extra {e}"))?;
        }
        let shown: Vec<String> = extras.iter().map(ToString::to_string).collect();
        lines.push(format!(
            "d={d}: {} found, {} listed sporadic, beyond the list {:?}",
            r.found.len(),
            f.rem2[&d].len(),
            shown
        ));
    }
    for repair in &f.repairs {
        lines.push(format!("repair {repair}"));
    }
    Ok(lines.join(", "))
}

fn criterion_8(_: &mut Shared) -> Outcome {
    let d = 10;
    let m = ExponentVector::pure_power(3, d - 2, 0);
    let qs = [ev(&[1, 1, 0, 0]), ev(&[0, 0, 1, 1]), ev(&[0, 2, 0, 0]), ev(&[0, 0, 2, 0]), ev(&[0, 0, 0, 2])];
    let i = ideal(3, d, qs.iter().map(|q| m.mul(q)).collect());
    ensure(i.num_generators() == 9, || "mu != 9".into())?;
    ensure(is_togliatti(&i).map_err(|e| e.to_string())?, || "not Togliatti".into())?;
    ensure(is_minimal_removal(&i).map_err(|e| e.to_string())?.minimal, || "not minimal (removal)".into())?;
    ensure(is_minimal_prop33(&i).map_err(|e| e.to_string())?.minimal, || "not minimal (hypersurface)".into())?;
    let v = is_smooth(&i).map_err(|e| e.to_string())?;
    ensure(!v.smooth, || "smooth".into())?;
    Ok(format!("minimal, non-smooth ({} failing faces)", v.failures.len()))
}

/// Per-candidate verdicts: (fails WLP, WLP kernel, restricted dependence,
/// hypersurface dim, minimal).
type Verdict = (bool, usize, bool, usize, bool);

#[derive(Default)]
struct Audit {
    checked: u64,
    violations: Vec<String>,
}

impl Audit {
    fn fail(&mut self, msg: String) {
        if self.violations.len() < 20 {
            self.violations.push(msg);
        }
    }
}

fn candidate_verdict(checker: &Checker, gens: &[usize], audit: &mut Audit) -> Verdict {
    let wlp = checker.lefschetz.verdict(gens);
    let restricted = checker.lefschetz.restricted_dependence(gens);
    let hd = checker.lattice.hypersurface_dim(gens);
    let togliatti = hd > 0;
    if wlp.fails_wlp != togliatti || restricted != togliatti {
        audit.fail(format!("(a) routes disagree on {}", checker.simplex.ideal(gens)));
    }
    if wlp.kernel_dim != hd {
        audit.fail(format!("(b) kernel {} vs hypersurfaces {hd} on {}", wlp.kernel_dim, checker.simplex.ideal(gens)));
    }
    let mut minimal = false;
    if togliatti {
        let removal = checker.removal_witnesses(gens);
        let prop33 = checker.lattice.prop33_witnesses(&checker.simplex, gens);
        if removal != prop33 {
            audit.fail(format!("(c) minimality witnesses differ on {}", checker.simplex.ideal(gens)));
        }
        minimal = removal.is_empty();
        let (n, d) = (checker.simplex.n, checker.simplex.d);
        if minimal && d >= 4 && gens.len() < 2 * n + 1 {
            audit.fail(format!("(f) minimal system with {} generators", gens.len()));
        }
    }
    audit.checked += 1;
    (wlp.fails_wlp, wlp.kernel_dim, restricted, hd, minimal)
}

/// Every candidate of an enumeration, with orbit-wise equivariance.
fn audit_candidates(n: usize, d: u32, mu: usize, audit: &mut Audit) {
    let checker = Checker::new(n, d);
    let s = &checker.simplex;
    let pool: Vec<usize> = (0..s.len()).filter(|&i| !s.is_vertex(i)).collect();
    let k = mu - n - 1;
    let mut by_orbit: HashMap<Vec<usize>, Verdict> = HashMap::new();
    let mut chosen: Vec<usize> = (0..k).collect();
    loop {
        let mut gens: Vec<usize> = s.pure_powers().to_vec();
        gens.extend(chosen.iter().map(|&i| pool[i]));
        gens.sort_unstable();
        let v = candidate_verdict(&checker, &gens, audit);
        let key = s.canonical_indices(&gens);
        if let Some(prev) = by_orbit.insert(key, v) {
            if prev != v {
                audit.fail(format!("(e) verdict not permutation invariant on {}", s.ideal(&gens)));
            }
        }
        // next k-subset in lexicographic order
        let Some(i) = (0..k).rev().find(|&i| chosen[i] < pool.len() - k + i) else { break };
        chosen[i] += 1;
        for j in i + 1..k {
            chosen[j] = chosen[j - 1] + 1;
        }
    }
}

fn random_instance(rng: &mut ChaCha8Rng, n: usize, d: u32) -> MonomialIdeal {
    let others: Vec<ExponentVector> =
        simplex_points(n, d).points.into_iter().filter(|p| p.pure_power_var().is_none()).collect();
    let bound = generator_bound(n, d) as usize;
    let extra = rng.gen_range(1..=bound - (n + 1));
    ideal(n, d, others.choose_multiple(rng, extra).cloned().collect())
}

fn direct_verdict(i: &MonomialIdeal) -> (bool, usize, bool, usize, Option<(bool, bool)>) {
    let wlp = fails_wlp_dminus1(i).unwrap();
    let hd = hypersurface_dim(i).unwrap();
    let minimal = (hd > 0).then(|| (is_minimal_removal(i).unwrap().minimal, is_minimal_prop33(i).unwrap().minimal));
    (wlp.fails_wlp, wlp.kernel_dim, restricted_dependence(i).unwrap(), hd, minimal)
}

fn criterion_9(shared: &mut Shared) -> Outcome {
    let mut audit = Audit::default();
    for &(n, d, mu) in &shared.touched {
        audit_candidates(n, d, mu, &mut audit);
    }
    let exhaustive = audit.checked;

    // random artinian instances within the bound, by the direct routes
    let mut rng = ChaCha8Rng::seed_from_u64(0x0070_6170_6572);
    let shapes = [(2usize, 8u32), (3, 4), (3, 5), (4, 3)];
    let mut random = 0;
    for &(n, d) in &shapes {
        let perms = permutations(n + 1);
        for _ in 0..2500 {
            let i = random_instance(&mut rng, n, d);
            let v = direct_verdict(&i);
            let togliatti = v.3 > 0;
            if v.0 != togliatti || v.2 != togliatti {
                audit.fail(format!("(a) routes disagree on {i:?}"));
            }
            if v.1 != v.3 {
                audit.fail(format!("(b) kernel {} vs hypersurfaces {} on {i:?}", v.1, v.3));
            }
            if let Some((removal, prop33)) = v.4 {
                if removal != prop33 {
                    audit.fail(format!("(c) minimality routes disagree on {i:?}"));
                }
                if removal && d >= 4 && i.num_generators() < 2 * n + 1 {
                    audit.fail(format!("(f) minimal system with {} generators", i.num_generators()));
                }
            }
            let p = perms.choose(&mut rng).unwrap();
            if direct_verdict(&i.permuted(p)) != v {
                audit.fail(format!("(e) verdict changes under {p:?} on {i:?}"));
            }
            random += 1;
        }
    }

    // chains of generator additions: hypersurface and kernel dimensions
    // never drop
    let mut chains = 0;
    for &(n, d) in shapes.iter().cycle().take(1000) {
        let checker = Checker::new(n, d);
        let s = &checker.simplex;
        let mut pool: Vec<usize> = (0..s.len()).filter(|&i| !s.is_vertex(i)).collect();
        pool.shuffle(&mut rng);
        let bound = generator_bound(n, d) as usize;
        let mut gens: Vec<usize> = s.pure_powers().to_vec();
        let mut last = (0usize, 0usize);
        for &g in pool.iter().take(bound - (n + 1)) {
            gens.push(g);
            gens.sort_unstable();
            let now = (checker.lattice.hypersurface_dim(&gens), checker.lefschetz.verdict(&gens).kernel_dim);
            if now.0 < last.0 || now.1 < last.1 {
                audit.fail(format!("(d) dimension dropped after adding {} to {}", s.point(g), s.ideal(&gens)));
            }
            last = now;
        }
        chains += 1;
    }

    // smoothness is permutation invariant on the labeled instances
    let f = Fixtures::bundled();
    for l in &f.labeled {
        let v = is_smooth(&l.ideal).unwrap().smooth;
        if v != l.smooth {
            audit.fail(format!("labeled verdict {} disagrees", l.label));
        }
        let perms = permutations(l.ideal.n() + 1);
        for p in perms.choose_multiple(&mut rng, 3) {
            if is_smooth(&l.ideal.permuted(p)).unwrap().smooth != v {
                audit.fail(format!("(e) smoothness of {} changes under {p:?}", l.label));
            }
        }
    }

    if audit.violations.is_empty() {
        Ok(format!(
            "{exhaustive} enumerated candidates, {random} random instances, {chains} chains, {} labeled verdicts: 0 violations",
            f.labeled.len()
        ))
    } else {
        Err(audit.violations.join("; "))
    }
}

type Criterion = fn(&mut Shared) -> Outcome;

fn main() -> ExitCode {
    let criteria: [(u32, &str, u64, Criterion); 9] = [
        (1, "Togliatti cubic is the unique minimal system at (2,3), mu=4", 1, criterion_1),
        (2, "five-variable cubic system: 22 points, one quadric, minimal, smooth", 5, criterion_2),
        (3, "mu = 2n+1 classification and smoothness labels", 60, criterion_3),
        (4, "smooth mu = 2n+2 at (2,5), (2,7): listed items found, extras independently confirmed", 120, criterion_4),
        (5, "mu = 7, d = 10 enumeration equals families (1)-(6)", 1800, criterion_5),
        (6, "smooth subset at d = 10: families (i)-(iii) found, extras independently confirmed", 600, criterion_6),
        (7, "mu = 7, d = 6..9: families and sporadic lists found, extras independently confirmed", 600, criterion_7),
        (8, "n = 3, d = 10, mu = 9 system is minimal and not smooth", 60, criterion_8),
        (9, "property suite", 900, criterion_9),
    ];
    let mut shared = Shared {
        touched: vec![
            (2, 3, 4),
            (2, 4, 5),
            (2, 5, 5),
            (2, 6, 5),
            (3, 4, 7),
            (2, 5, 6),
            (2, 7, 6),
            (2, 6, 7),
            (2, 7, 7),
            (2, 8, 7),
            (2, 9, 7),
            (2, 10, 7),
        ],
        ..Default::default()
    };
    let only: Option<u32> = std::env::var("ACCEPTANCE_ONLY").ok().and_then(|v| v.parse().ok());
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        if only.is_some_and(|o| o != id && !(o == 6 && id == 5)) {
            continue;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| run(&mut shared)))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit);
        let outcome = match outcome {
            Ok(msg) if elapsed > limit => Err(format!("{msg}; over the {}s budget", limit.as_secs())),
            other => other,
        };
        let (status, detail) = match &outcome {
            Ok(msg) => ("PASS", msg.as_str()),
            Err(msg) => ("FAIL", msg.as_str()),
        };
        println!("criterion {id} {status} [{:.2}s] {name}: {detail}", elapsed.as_secs_f64());
        failed += usize::from(outcome.is_err());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}

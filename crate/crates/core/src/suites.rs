//! Named verification suites. Each run is deterministic in
//! `(suite, n, seed, samples, bound)` and produces a [`SuiteReport`] whose
//! checks are sorted by name.

use std::fmt::Display;
use std::time::Instant;

use itertools::Itertools;
use num_traits::Zero;
use serde::Serialize;

use crate::brackets::{
    classify_stability, fit_linear_map_with_diagnostics, git_point, Configuration, GitPoint, Stability,
};
use crate::cremona::{cremona_inv, project_from_frame_point, standard_frame, xi_basis};
use crate::exactnum::{ProjectivePoint, Rational, RationalMatrix};
use crate::forms::{monomials, HomogeneousForm};
use crate::omega::{
    binomial, catalan, config_of_point, frame_automorphism, incidence_matrix, jacobian_rank, omega_basis,
    omega_basis_generic, phi_omega, random_span_point, BaseW,
};
use crate::sampling::{Sampler, DEFAULT_BOUND};
use crate::trees::{central_candidates, contract, enumerate_trees, enumerate_two_vertex, ContractionResult};
use crate::veronese::{rnc_through, ParamCurve};
use crate::Error;

pub const SUITES: [&str; 17] = [
    "dimensions",
    "incidence-rank",
    "basis-agreement",
    "base-locus",
    "span-contraction",
    "fiber-contraction",
    "fiber-separation",
    "equivariance",
    "jacobian-rank",
    "segre-cubic",
    "cremona-line",
    "cremona-fiber",
    "xi-dim",
    "tree-counts",
    "tree-central",
    "stability-oracle",
    "rho-bridge",
];

#[derive(Clone, Copy, Debug)]
pub struct SuiteParams {
    pub n: usize,
    pub seed: u64,
    pub samples: usize,
    pub bound: i64,
}

impl SuiteParams {
    pub fn new(n: usize, seed: u64, samples: usize) -> Self {
        Self {
            n,
            seed,
            samples,
            bound: DEFAULT_BOUND,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub property: String,
    pub n: usize,
    pub seed: u64,
    pub samples: usize,
    pub bound: i64,
    pub status: Status,
    pub checks: Vec<Check>,
    pub witnesses: Vec<String>,
    /// Informational lines that do not affect the status.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub log: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Default)]
struct Recorder {
    checks: Vec<Check>,
    log: Vec<String>,
}

impl Recorder {
    fn equal<T: PartialEq + Display>(&mut self, name: &str, expected: T, actual: T) {
        let passed = expected == actual;
        self.checks.push(Check {
            name: name.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            passed,
            witness: None,
        });
    }

    /// A property checked on `total` samples; `failures` holds witnesses.
    fn all(&mut self, name: &str, total: usize, failures: Vec<String>) {
        self.checks.push(Check {
            name: name.into(),
            expected: format!("{total}/{total}"),
            actual: format!("{}/{total}", total - failures.len()),
            passed: failures.is_empty(),
            witness: failures.into_iter().next(),
        });
    }

    fn note(&mut self, line: impl Into<String>) {
        self.log.push(line.into());
    }
}

fn describe(suite: &str) -> &'static str {
    match suite {
        "dimensions" => "basis size = C(2n-1,n) - C(2n-1,n-2) = (2n)!/((n+1)! n!)",
        "incidence-rank" => "the incidence matrix of (n-2)-subsets in n-subsets has full row rank",
        "basis-agreement" => "incidence kernel and dense derivative conditions span the same forms",
        "base-locus" => "every basis form vanishes on the spans of n-1 points of W",
        "span-contraction" => "the span of n points of W and the complementary span map to one point",
        "fiber-contraction" => "the normal curve through W and x is contracted to phi(x)",
        "fiber-separation" => "points off each other's curves through W have distinct images",
        "equivariance" => "relabelling W acts on the image by a fixed invertible matrix",
        "jacobian-rank" => "the image has dimension 2n-3",
        "segre-cubic" => "for n = 3 the image is a cubic hypersurface of P^4",
        "cremona-line" => "the inversion is an involution mapping lines through u to normal curves",
        "cremona-fiber" => "curves through W invert to lines through u",
        "xi-dim" => "the degree n-1 system on P^{2n-3} has Catalan dimension and separates points",
        "tree-counts" => "two-vertex stable trees and balanced splits are counted correctly",
        "tree-central" => "every small stable tree has a central vertex or a unique balanced edge",
        "stability-oracle" => "unstable configurations are exactly those with vanishing invariants",
        "rho-bridge" => "phi agrees with the bracket invariants of the configuration up to a fixed matrix",
        _ => "",
    }
}

/// Runs one suite. `timing` records wall time in the report.
pub fn verify_suite(name: &str, params: SuiteParams, timing: bool) -> Result<SuiteReport, Error> {
    if !SUITES.contains(&name) {
        return Err(Error::UnknownSuite(name.into()));
    }
    if params.bound < 1 {
        return Err(Error::InvalidArgument(format!("bound must be positive, got {}", params.bound)));
    }
    let start = Instant::now();
    let mut s = Sampler::with_bound(params.seed, params.bound);
    let mut r = Recorder::default();
    let n = params.n;
    let m = params.samples;
    match name {
        "dimensions" => dimensions(&mut r, n)?,
        "incidence-rank" => incidence_rank(&mut r, n)?,
        "basis-agreement" => basis_agreement(&mut r, n)?,
        "base-locus" => base_locus(&mut r, &mut s, n, m)?,
        "span-contraction" => span_contraction(&mut r, &mut s, n, m)?,
        "fiber-contraction" => fiber_contraction(&mut r, &mut s, n, m)?,
        "fiber-separation" => fiber_separation(&mut r, &mut s, n, m)?,
        "equivariance" => equivariance(&mut r, &mut s, n, m)?,
        "jacobian-rank" => jacobian(&mut r, &mut s, n, m)?,
        "segre-cubic" => segre_cubic(&mut r, &mut s, n, m)?,
        "cremona-line" => cremona_line(&mut r, &mut s, n, m)?,
        "cremona-fiber" => cremona_fiber(&mut r, &mut s, n, m)?,
        "xi-dim" => xi_dim(&mut r, &mut s, n, m)?,
        "tree-counts" => tree_counts(&mut r, n)?,
        "tree-central" => tree_central(&mut r, n)?,
        "stability-oracle" => stability_oracle(&mut r, n)?,
        "rho-bridge" => rho_bridge(&mut r, &mut s, n, m)?,
        _ => unreachable!("suite names are checked above"),
    }
    let mut checks = r.checks;
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let witnesses: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_else(|| c.actual.clone())))
        .collect();
    Ok(SuiteReport {
        suite: name.into(),
        property: describe(name).into(),
        n,
        seed: params.seed,
        samples: m,
        bound: params.bound,
        status: if witnesses.is_empty() { Status::Pass } else { Status::Fail },
        checks,
        witnesses,
        log: r.log,
        elapsed_ms: timing.then(|| u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX)),
    })
}

fn require(cond: bool, what: impl FnOnce() -> String) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidArgument(what()))
    }
}

fn require_omega_n(n: usize) -> Result<(), Error> {
    require(n >= 2, || format!("this suite needs n >= 2, got {n}"))
}

fn generic_point(s: &mut Sampler, n: usize) -> Result<ProjectivePoint, Error> {
    s.distinct_coordinate_point(2 * n - 1)
}

/// The curve through `W` and `x` for a fresh generic `x`.
fn fiber_curve(s: &mut Sampler, n: usize) -> Result<(ProjectivePoint, ParamCurve), Error> {
    let x = generic_point(s, n)?;
    let mut pts = BaseW::new(n).points;
    pts.push(x.clone());
    Ok((x, rnc_through(&pts)?))
}

/// A point of the curve off the base locus.
fn curve_sample(s: &mut Sampler, n: usize, curve: &ParamCurve) -> Result<ProjectivePoint, Error> {
    s.until(|s| curve.curve_eval(&s.point(2)).ok(), |y| {
        y.as_ref().is_some_and(|y| phi_omega(n, y).is_ok())
    })
    .map(|y| y.expect("accepted sample"))
}

fn dimensions(r: &mut Recorder, n: usize) -> Result<(), Error> {
    require_omega_n(n)?;
    let nn = n as u64;
    let basis = omega_basis(n)?.dimension() as u128;
    let counted = binomial(2 * nn - 1, nn) - binomial(2 * nn - 1, nn - 2);
    let hook = catalan(nn);
    r.note(format!(
        "C({},{}) - C({},{}) = {} - {} = {counted}; (2n)!/((n+1)! n!) = {hook}; basis size = {basis}",
        2 * n - 1,
        n,
        2 * n - 1,
        n - 2,
        binomial(2 * nn - 1, nn),
        binomial(2 * nn - 1, nn - 2)
    ));
    r.equal("basis-size-vs-count", counted, basis);
    r.equal("count-vs-hook", hook, counted);
    Ok(())
}

fn incidence_rank(r: &mut Recorder, n: usize) -> Result<(), Error> {
    require_omega_n(n)?;
    let m = incidence_matrix(n)?;
    r.equal("rows", binomial(2 * n as u64 - 1, n as u64 - 2), m.rows() as u128);
    r.equal("rank", m.rows(), m.rank());
    Ok(())
}

fn basis_agreement(r: &mut Recorder, n: usize) -> Result<(), Error> {
    require_omega_n(n)?;
    let generic = omega_basis_generic(n)?;
    let sys = omega_basis(n)?;
    r.equal("dimension", sys.dimension(), generic.dimension());
    r.equal("same-span", true, sys.system.same_span(&generic));
    r.equal("constraints-hold", true, sys.system.satisfies_constraints()?);
    Ok(())
}

fn base_locus(r: &mut Recorder, s: &mut Sampler, n: usize, m: usize) -> Result<(), Error> {
    require_omega_n(n)?;
    let w = BaseW::new(n).points;
    let sys = omega_basis(n)?;
    let mut failures = Vec::new();
    for _ in 0..m {
        let subset = s.subset(2 * n, n - 1);
        let span: Vec<_> = subset.iter().map(|&i| w[i].clone()).collect();
        let y = random_span_point(s, &span);
        if !sys.system.evaluate(&y)?.iter().all(Zero::is_zero) {
            failures.push(format!("{y} on the span of {subset:?}"));
        }
    }
    r.all("forms-vanish-on-secant-spans", m, failures);
    Ok(())
}

fn span_contraction(r: &mut Recorder, s: &mut Sampler, n: usize, m: usize) -> Result<(), Error> {
    require_omega_n(n)?;
    let w = BaseW::new(n).points;
    let mut failures = Vec::new();
    for _ in 0..m {
        let subset = s.subset(2 * n, n);
        let (inside, outside): (Vec<_>, Vec<_>) = (0..2 * n).partition(|i| subset.contains(i));
        let pick = |idx: &[usize]| idx.iter().map(|&i| w[i].clone()).collect::<Vec<_>>();
        let y = random_span_point(s, &pick(&inside));
        let y2 = random_span_point(s, &pick(&inside));
        let z = random_span_point(s, &pick(&outside));
        let images = [phi_omega(n, &y), phi_omega(n, &y2), phi_omega(n, &z)];
        let ok = match &images {
            [Ok(a), Ok(b), Ok(c)] => a == b && a == c,
            _ => false,
        };
        if !ok {
            failures.push(format!("span {inside:?}: y={y}, y'={y2}, z={z}"));
        }
    }
    r.all("span-and-complement-share-image", m, failures);
    Ok(())
}

const CURVE_POINTS: usize = 8;

fn fiber_contraction(r: &mut Recorder, s: &mut Sampler, n: usize, m: usize) -> Result<(), Error> {
    require_omega_n(n)?;
    let mut constant = Vec::new();
    let mut fibers: Vec<(ProjectivePoint, ParamCurve, ProjectivePoint)> = Vec::new();
    for _ in 0..m {
        let (x, curve) = fiber_curve(s, n)?;
        let image = phi_omega(n, &x)?;
        for _ in 0..CURVE_POINTS {
            let y = curve_sample(s, n, &curve)?;
            if phi_omega(n, &y)? != image {
                constant.push(format!("x={x}, y={y}"));
            }
        }
        fibers.push((x, curve, image));
    }
    r.all("image-constant-on-curve", m * CURVE_POINTS, constant);
    let mut separated = 0;
    let mut clashes = Vec::new();
    for (a, b) in fibers.iter().tuple_combinations() {
        if a.1.contains(&b.0) {
            continue;
        }
        separated += 1;
        if a.2 == b.2 {
            clashes.push(format!("x={}, x'={}", a.0, b.0));
        }
    }
    r.all("separated-curves-have-distinct-images", separated, clashes);
    Ok(())
}

fn fiber_separation(r: &mut Recorder, s: &mut Sampler, n: usize, m: usize) -> Result<(), Error> {
    require_omega_n(n)?;
    let mut failures = Vec::new();
    for _ in 0..m {
        let (x, curve) = fiber_curve(s, n)?;
        let x2 = s.until(|s| generic_point(s, n).ok(), |y| {
            y.as_ref().is_some_and(|y| curve.parameter_of_point(y).is_none())
        })?
        .expect("accepted sample");
        if phi_omega(n, &x)? == phi_omega(n, &x2)? {
            failures.push(format!("x={x}, x'={x2}"));
        }
    }
    r.all("off-curve-points-separated", m, failures);
    Ok(())
}

/// The identity-free permutations tried by the equivariance suite.
fn test_permutations(s: &mut Sampler, n: usize) -> Vec<Vec<usize>> {
    let len = 2 * n;
    let mut swap_front: Vec<usize> = (0..len).collect();
    swap_front.swap(0, 1);
    let mut swap_back: Vec<usize> = (0..len).collect();
    swap_back.swap(len - 2, len - 1);
    let cycle: Vec<usize> = (0..len).map(|i| (i + 1) % len).collect();
    vec![swap_front, swap_back, cycle, s.permutation(len)]
}

/// Fits a matrix from `D^2` pairs and validates it on `held_out` fresh pairs.
fn fit_and_validate(
    r: &mut Recorder,
    s: &mut Sampler,
    label: &str,
    dim: usize,
    held_out: usize,
    mut pair: impl FnMut(&mut Sampler) -> Result<(ProjectivePoint, ProjectivePoint), Error>,
) -> Result<Option<RationalMatrix>, Error> {
    let train = (0..dim * dim).map(|_| pair(s)).collect::<Result<Vec<_>, _>>()?;
    let fit = fit_linear_map_with_diagnostics(&train);
    r.equal(&format!("{label}-solution-dim"), 1, fit.solution_dim);
    r.equal(&format!("{label}-invertible"), true, fit.matrix.is_some());
    let Some(l) = fit.matrix else { return Ok(None) };
    let mut failures = Vec::new();
    for _ in 0..held_out {
        let (src, tgt) = pair(s)?;
        if src.transform(&l)? != tgt {
            failures.push(format!("{src} -> {tgt}"));
        }
    }
    r.all(&format!("{label}-held-out"), held_out, failures);
    Ok(Some(l))
}

fn equivariance(r: &mut Recorder, s: &mut Sampler, n: usize, m: usize) -> Result<(), Error> {
    require_omega_n(n)?;
    let dim = omega_basis(n)?.dimension();
    for (k, sigma) in test_permutations(s, n).into_iter().enumerate() {
        let a = frame_automorphism(n, &sigma)?;
        r.note(format!("sigma{k} = {sigma:?}"));
        fit_and_validate(r, s, &format!("sigma{k}"), dim, m.max(10), |s| {
            let x = s.until(|s| generic_point(s, n).ok(), |x| {
                x.as_ref()
                    .is_some_and(|x| x.transform(&a).is_ok_and(|y| phi_omega(n, &y).is_ok()))
            })?
            .expect("accepted sample");
            Ok((phi_omega(n, &x)?, phi_omega(n, &x.transform(&a)?)?))
        })?;
    }
    Ok(())
}

fn jacobian(r: &mut Recorder, s: &mut Sampler, n: usize, m: usize) -> Result<(), Error> {
    require_omega_n(n)?;
    let mut failures = Vec::new();
    for _ in 0..m {
        let x = generic_point(s, n)?;
        let rank = jacobian_rank(n, &x)?;
        if rank != 2 * n - 2 {
            failures.push(format!("rank {rank} at {x}"));
        }
    }
    r.note(format!("expected image dimension 2n-3 = {}", 2 * n - 3));
    r.all("image-dimension", m, failures);
    Ok(())
}

const SEGRE_TRAIN: usize = 50;

fn segre_image(s: &mut Sampler) -> Result<ProjectivePoint, Error> {
    phi_omega(3, &generic_point(s, 3)?)
}

/// Monomials evaluated at fresh image points, one row per point.
fn image_rows(s: &mut Sampler, monos: &[crate::forms::Monomial]) -> Result<Vec<Vec<Rational>>, Error> {
    (0..SEGRE_TRAIN)
        .map(|_| {
            let y = segre_image(s)?;
            Ok(monos.iter().map(|c| c.eval(y.coords())).collect())
        })
        .collect()
}

fn segre_cubic(r: &mut Recorder, s: &mut Sampler, n: usize, m: usize) -> Result<(), Error> {
    require(n == 3, || format!("the cubic fit is defined for n = 3, got {n}"))?;
    let cubics = monomials(5, 3);
    let rows = image_rows(s, &cubics)?;
    let kernel = RationalMatrix::from_rows(cubics.len(), rows)?.kernel_basis();
    r.equal("cubics-through-image", 1, kernel.len());
    let Some(v) = kernel.first() else { return Ok(()) };
    let cubic = HomogeneousForm::from_coefficients(5, 3, &cubics, v);
    r.note(format!("cubic has {} terms", cubic.terms().len()));
    let fresh = m.max(20);
    let mut failures = Vec::new();
    for _ in 0..fresh {
        let y = segre_image(s)?;
        if !cubic.evaluate(&y)?.is_zero() {
            failures.push(y.to_string());
        }
    }
    r.all("cubic-vanishes-on-fresh-images", fresh, failures);
    let quadrics = monomials(5, 2);
    let rows = image_rows(s, &quadrics)?;
    r.equal(
        "quadrics-through-image",
        0,
        RationalMatrix::from_rows(quadrics.len(), rows)?.kernel_basis().len(),
    );
    Ok(())
}

fn torus_point(s: &mut Sampler, len: usize) -> Result<ProjectivePoint, Error> {
    s.until(|s| s.point(len), |p| p.coords().iter().all(|v| !v.is_zero()))
}

fn cremona_line(r: &mut Recorder, s: &mut Sampler, n: usize, m: usize) -> Result<(), Error> {
    require_omega_n(n)?;
    let len = 2 * n - 1;
    r.note(format!("working in P^{}", len - 1));
    let mut failures = Vec::new();
    for _ in 0..m {
        let x = torus_point(s, len)?;
        if cremona_inv(&cremona_inv(&x)?)? != x {
            failures.push(x.to_string());
        }
    }
    r.all("involution", m, failures);

    let lines = m.clamp(1, 5);
    let mut failures = Vec::new();
    for _ in 0..lines {
        let v = s.distinct_coordinate_point(len)?;
        let on_line = |s: &mut Sampler| -> Result<ProjectivePoint, Error> {
            s.until(
                |s| {
                    let l = s.rational();
                    let c: Vec<Rational> = v.coords().iter().map(|x| x * &l + Rational::from_integer(1.into())).collect();
                    ProjectivePoint::new(c).ok().and_then(|p| cremona_inv(&p).ok())
                },
                |p| p.as_ref().is_some_and(|p| *p != ProjectivePoint::unit(len)),
            )
            .map(|p| p.expect("accepted sample"))
        };
        let mut pts = standard_frame(len);
        pts.push(on_line(s)?);
        let curve = match rnc_through(&pts) {
            Ok(c) => c,
            Err(e) => {
                failures.push(format!("direction {v}: {e}"));
                continue;
            }
        };
        for _ in 0..CURVE_POINTS {
            let y = on_line(s)?;
            if !curve.contains(&y) {
                failures.push(format!("direction {v}: {y} off the curve"));
            }
        }
    }
    r.all("line-through-unit-to-normal-curve", lines * CURVE_POINTS, failures);
    Ok(())
}

fn cremona_fiber(r: &mut Recorder, s: &mut Sampler, n: usize, m: usize) -> Result<(), Error> {
    require_omega_n(n)?;
    let len = 2 * n - 1;
    let centers = len + 1;
    let mut collinear = Vec::new();
    let mut constant_for = vec![true; centers];
    for _ in 0..m {
        let (x, curve) = fiber_curve(s, n)?;
        let cx = cremona_inv(&x)?;
        let mut rows = vec![ProjectivePoint::unit(len).into_coords(), cx.clone().into_coords()];
        let mut images = Vec::new();
        for _ in 0..CURVE_POINTS {
            let y = s
                .until(|s| curve.curve_eval(&s.point(2)).ok(), |y| {
                    y.as_ref().is_some_and(|y| {
                        y.coords().iter().all(|v| !v.is_zero()) && *y != ProjectivePoint::unit(len)
                    })
                })?
                .expect("accepted sample");
            let image = cremona_inv(&y)?;
            rows.push(image.coords().to_vec());
            images.push(image);
        }
        let rank = RationalMatrix::from_rows(len, rows)?.rank();
        if rank != 2 {
            collinear.push(format!("x={x}: span of u, Cr(x) and images has rank {rank}"));
        }
        for (k, ok) in constant_for.iter_mut().enumerate() {
            let reference = project_from_frame_point(&cx, k).ok();
            *ok &= reference.is_some()
                && images
                    .iter()
                    .all(|y| project_from_frame_point(y, k).ok() == reference);
        }
    }
    r.all("inverted-curve-is-line-through-unit", m, collinear);
    let name = |k: usize| if k == len { "u".to_string() } else { format!("e{k}") };
    for (k, ok) in constant_for.iter().enumerate() {
        r.note(format!("center {}: projection constant on fibers = {ok}", name(k)));
    }
    let valid: Vec<String> = (0..centers).filter(|&k| constant_for[k]).map(name).collect();
    r.equal("centers-constant-on-fibers", "[u]".to_string(), format!("[{}]", valid.join(",")));
    Ok(())
}

fn xi_dim(r: &mut Recorder, s: &mut Sampler, n: usize, m: usize) -> Result<(), Error> {
    require_omega_n(n)?;
    let xi = xi_basis(n)?;
    r.equal("dimension-vs-catalan", catalan(n as u64), xi.dimension() as u128);
    r.equal("dimension-vs-omega", omega_basis(n)?.dimension(), xi.dimension());
    let len = 2 * n - 2;
    let mut failures = Vec::new();
    for _ in 0..m {
        let y = s.distinct_coordinate_point(len)?;
        let y2 = s.until(|s| s.distinct_coordinate_point(len).ok(), |v| v.as_ref().is_some_and(|v| *v != y))?
            .expect("accepted sample");
        let (a, b) = (crate::cremona::phi_xi(n, &y)?, crate::cremona::phi_xi(n, &y2)?);
        if a == b {
            failures.push(format!("{y} and {y2} share image {a}"));
        }
    }
    r.all("distinct-points-distinct-images", m, failures);
    Ok(())
}

fn tree_counts(r: &mut Recorder, n: usize) -> Result<(), Error> {
    require(n >= 4, || format!("two-vertex stable trees need n >= 4, got {n}"))?;
    let two = enumerate_two_vertex(n);
    r.equal("two-vertex", (1u128 << (n - 1)) - n as u128 - 1, two.len() as u128);
    let balanced = two
        .iter()
        .filter(|t| matches!(contract(t), ContractionResult::NoCentral { .. }))
        .count();
    let expected = if n.is_multiple_of(2) { binomial(n as u64, n as u64 / 2) / 2 } else { 0 };
    r.equal("balanced-no-central", expected, balanced as u128);
    if n <= 7 {
        for k in 1..=4 {
            r.note(format!("{k}-vertex stable trees: {}", enumerate_trees(n, k)?.len()));
        }
    }
    Ok(())
}

fn tree_central(r: &mut Recorder, n: usize) -> Result<(), Error> {
    require((3..=7).contains(&n), || format!("tree enumeration covers 3 <= n <= 7, got {n}"))?;
    let mut total = 0;
    let (mut unique, mut dichotomy, mut classes_ok, mut stability) = (vec![], vec![], vec![], vec![]);
    for k in 1..=4 {
        for t in enumerate_trees(n, k)? {
            total += 1;
            let text = serde_json::to_string(&t).expect("tree serializes");
            let candidates = central_candidates(&t);
            if candidates.len() > 1 {
                unique.push(text.clone());
            }
            let result = contract(&t);
            match &result {
                ContractionResult::Central { vertex, classes } => {
                    if candidates != [*vertex] {
                        dichotomy.push(text.clone());
                    }
                    let mut all = classes.concat();
                    all.sort_unstable();
                    if all != (1..=n).collect::<Vec<_>>() || classes.len() != t.weight(*vertex) + t.degree(*vertex) {
                        classes_ok.push(text.clone());
                    }
                }
                ContractionResult::NoCentral { .. } => {
                    let balanced = t
                        .edges()
                        .iter()
                        .filter(|&&[a, b]| 2 * t.branch_labels(a, b).len() == n)
                        .count();
                    if !candidates.is_empty() || !n.is_multiple_of(2) || balanced != 1 {
                        dichotomy.push(text.clone());
                    }
                }
            }
            if n.is_multiple_of(2) {
                let mut pairs = vec![(0, 0); n];
                let groups = match &result {
                    ContractionResult::Central { classes, .. } => classes.clone(),
                    ContractionResult::NoCentral { halves } => halves.to_vec(),
                };
                for (pos, group) in groups.iter().enumerate() {
                    for &l in group {
                        pairs[l - 1] = (1, pos as i64);
                    }
                }
                let c = Configuration::from_i64(&pairs)?;
                let largest = result.class_sizes().into_iter().max().unwrap_or(0);
                let expected = match (2 * largest).cmp(&n) {
                    std::cmp::Ordering::Less => Stability::Stable,
                    std::cmp::Ordering::Equal => Stability::StrictlySemistable,
                    std::cmp::Ordering::Greater => Stability::Unstable,
                };
                if classify_stability(n / 2, &c)? != expected || expected == Stability::Unstable {
                    stability.push(text);
                }
            }
        }
    }
    r.note(format!("{total} stable trees with at most 4 vertices"));
    r.all("central-vertex-unique", total, unique);
    r.all("central-or-balanced-edge", total, dichotomy);
    r.all("collision-classes-partition-labels", total, classes_ok);
    if n.is_multiple_of(2) {
        r.all("contraction-is-semistable", total, stability);
    }
    Ok(())
}

/// All set partitions of `0..len`, as block indices per element in
/// restricted-growth form.
fn set_partitions(len: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, blocks: usize, len: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for b in 0..=blocks {
            prefix.push(b);
            rec(prefix, blocks.max(b + 1), len, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), 0, len, &mut out);
    out
}

fn stability_oracle(r: &mut Recorder, n: usize) -> Result<(), Error> {
    require((1..=5).contains(&n), || format!("exhaustive profiles cover 1 <= n <= 5, got {n}"))?;
    let partitions = set_partitions(2 * n);
    let mut disagreements = Vec::new();
    let mut balanced = Vec::new();
    let mut balanced_total = 0;
    for blocks in &partitions {
        let pairs: Vec<(i64, i64)> = blocks.iter().map(|&b| (1, b as i64)).collect();
        let c = Configuration::from_i64(&pairs)?;
        let class = classify_stability(n, &c)?;
        let zero = git_point(n, &c)? == GitPoint::ZeroVector;
        if (class == Stability::Unstable) != zero {
            disagreements.push(format!("profile {blocks:?}: {class:?}, zero vector {zero}"));
        }
        let mut sizes = c.multiplicities();
        sizes.sort_unstable();
        if sizes == [n, n] {
            balanced_total += 1;
            if class != Stability::StrictlySemistable || zero {
                balanced.push(format!("profile {blocks:?}"));
            }
        }
    }
    r.note(format!("{} labelled profiles of {} points", partitions.len(), 2 * n));
    r.all("unstable-iff-zero-vector", partitions.len(), disagreements);
    r.all("balanced-profile-strictly-semistable", balanced_total, balanced);
    Ok(())
}

fn rho_bridge(r: &mut Recorder, s: &mut Sampler, n: usize, m: usize) -> Result<(), Error> {
    require_omega_n(n)?;
    let dim = omega_basis(n)?.dimension();
    let fitted = fit_and_validate(r, s, "rho", dim, m.max(10), |s| {
        let x = generic_point(s, n)?;
        let g = match git_point(n, &config_of_point(n, &x)?)? {
            GitPoint::Point(p) => p,
            GitPoint::ZeroVector => return Err(Error::DegenerateConfiguration(format!("{x}"))),
        };
        Ok((g, phi_omega(n, &x)?))
    })?;
    if let Some(l) = fitted {
        if dim <= 5 {
            let rows: Vec<String> = l
                .row_vectors()
                .iter()
                .map(|row| format!("[{}]", row.iter().map(|v| v.to_string()).join(",")))
                .collect();
            r.note(format!("fitted matrix [{}]", rows.join(",")));
        }
    }
    Ok(())
}

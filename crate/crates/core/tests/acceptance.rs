//! Acceptance gate: one line per criterion, nonzero exit on any failure.
//! Every check is exact; the seeds are fixed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use forgetful::brackets::noncrossing_matchings;
use forgetful::omega::omega_basis;
use forgetful::suites::{verify_suite, SuiteParams, SuiteReport};

const SEED: u64 = 20240607;

struct Outcome {
    ok: bool,
    detail: String,
}

fn suite(name: &str, n: usize, samples: usize) -> Result<SuiteReport, String> {
    verify_suite(name, SuiteParams::new(n, SEED + n as u64, samples), false)
        .map_err(|e| format!("{name} n={n}: {e}"))
}

/// Runs suites and demands every one passes.
fn all_pass(runs: &[(&str, usize, usize)]) -> Result<Vec<SuiteReport>, String> {
    let mut reports = Vec::new();
    for &(name, n, samples) in runs {
        let report = suite(name, n, samples)?;
        if !report.passed() {
            return Err(format!("{name} n={n}: {}", report.witnesses.join("; ")));
        }
        reports.push(report);
    }
    Ok(reports)
}

fn actual(report: &SuiteReport, check: &str) -> Result<String, String> {
    report
        .checks
        .iter()
        .find(|c| c.name == check)
        .map(|c| c.actual.clone())
        .ok_or_else(|| format!("{}: no check {check}", report.suite))
}

fn expect(report: &SuiteReport, check: &str, value: &str) -> Result<(), String> {
    let got = actual(report, check)?;
    if got == value {
        Ok(())
    } else {
        Err(format!("{} n={} {check}: expected {value}, got {got}", report.suite, report.n))
    }
}

fn dimensions() -> Result<String, String> {
    let mut seen = Vec::new();
    for (n, value) in [(2, 2), (3, 5), (4, 14), (5, 42), (6, 132)] {
        let report = &all_pass(&[("dimensions", n, 0)])?[0];
        expect(report, "basis-size-vs-count", &value.to_string())?;
        expect(report, "count-vs-hook", &value.to_string())?;
        seen.push(value.to_string());
    }
    Ok(format!("basis sizes {}", seen.join(",")))
}

fn incidence() -> Result<String, String> {
    let mut ranks = Vec::new();
    for (n, rank) in [(2, 1), (3, 5), (4, 21), (5, 84)] {
        let report = &all_pass(&[("incidence-rank", n, 0)])?[0];
        expect(report, "rank", &rank.to_string())?;
        ranks.push(rank.to_string());
    }
    Ok(format!("ranks {}", ranks.join(",")))
}

fn basis_agreement() -> Result<String, String> {
    all_pass(&[("basis-agreement", 2, 0), ("basis-agreement", 3, 0), ("basis-agreement", 4, 0)])?;
    Ok("n=2,3,4 same span".into())
}

fn base_locus() -> Result<String, String> {
    for report in all_pass(&[("base-locus", 3, 100), ("base-locus", 4, 100)])? {
        expect(&report, "forms-vanish-on-secant-spans", "100/100")?;
    }
    Ok("n=3,4: 100/100 points each".into())
}

fn span_contraction() -> Result<String, String> {
    for report in all_pass(&[("span-contraction", 3, 20), ("span-contraction", 4, 20)])? {
        expect(&report, "span-and-complement-share-image", "20/20")?;
    }
    Ok("n=3,4: 20/20 triples each".into())
}

fn fiber_contraction() -> Result<String, String> {
    let mut separated = Vec::new();
    for n in [2, 3, 4] {
        let reports = all_pass(&[("fiber-contraction", n, 10), ("fiber-separation", n, 10)])?;
        expect(&reports[0], "image-constant-on-curve", "80/80")?;
        let pairs = actual(&reports[0], "separated-curves-have-distinct-images")?;
        if pairs == "0/0" {
            return Err(format!("n={n}: no fiber-separated pair of curves"));
        }
        separated.push(pairs);
    }
    Ok(format!("10 curves x 8 points, separated pairs {}", separated.join(",")))
}

fn image_dimension() -> Result<String, String> {
    for n in [2, 3, 4] {
        let report = &all_pass(&[("jacobian-rank", n, 5)])?[0];
        expect(report, "image-dimension", "5/5")?;
    }
    Ok("dimension 2n-3 at 5 points for n=2,3,4".into())
}

fn segre() -> Result<String, String> {
    let report = &all_pass(&[("segre-cubic", 3, 20)])?[0];
    expect(report, "cubics-through-image", "1")?;
    expect(report, "cubic-vanishes-on-fresh-images", "20/20")?;
    Ok("one cubic through 50 images, vanishing on 20 fresh".into())
}

fn rho_bridge() -> Result<String, String> {
    for n in [2, 3] {
        let report = &all_pass(&[("rho-bridge", n, 10)])?[0];
        expect(report, "rho-solution-dim", "1")?;
        expect(report, "rho-held-out", "10/10")?;
        let dim = omega_basis(n).map_err(|e| e.to_string())?.dimension();
        if dim != noncrossing_matchings(n).len() {
            return Err(format!("n={n}: dimensions differ"));
        }
    }
    Ok("unique invertible L for n=2,3, 10/10 held out".into())
}

fn cremona() -> Result<String, String> {
    for n in [2, 3, 4] {
        let reports = all_pass(&[("cremona-line", n, 50), ("cremona-fiber", n, 5)])?;
        expect(&reports[0], "involution", "50/50")?;
        expect(&reports[0], "line-through-unit-to-normal-curve", "40/40")?;
        expect(&reports[1], "inverted-curve-is-line-through-unit", "5/5")?;
    }
    Ok("involution 50/50, d=2,4,6 curves, 5 fibers collinear through u for n=2,3,4".into())
}

fn xi() -> Result<String, String> {
    for n in 2..=5 {
        let samples = if n == 3 { 20 } else { 3 };
        let report = &all_pass(&[("xi-dim", n, samples)])?[0];
        let catalan = [2, 5, 14, 42][n - 2].to_string();
        expect(report, "dimension-vs-catalan", &catalan)?;
        if n == 3 {
            expect(report, "distinct-points-distinct-images", "20/20")?;
        }
    }
    Ok("dimensions 2,5,14,42; 20/20 pairs separated at n=3".into())
}

fn trees() -> Result<String, String> {
    for (n, count) in [(4, "3"), (5, "10"), (6, "25")] {
        let report = &all_pass(&[("tree-counts", n, 0)])?[0];
        expect(report, "two-vertex", count)?;
        if n == 6 {
            expect(report, "balanced-no-central", "10")?;
        }
    }
    for n in 3..=7 {
        all_pass(&[("tree-central", n, 0)])?;
    }
    Ok("3/10/25 two-vertex trees, 10 balanced, dichotomy for n<=7".into())
}

fn stability() -> Result<String, String> {
    for n in [2, 3, 4] {
        let report = &all_pass(&[("stability-oracle", n, 0)])?[0];
        let balanced = actual(report, "balanced-profile-strictly-semistable")?;
        if balanced.starts_with("0/") {
            return Err(format!("n={n}: no (n,n) profile exercised"));
        }
    }
    Ok("all profiles of 4, 6, 8 points".into())
}

type Criterion = (&'static str, Duration, fn() -> Result<String, String>);

fn main() -> ExitCode {
    let minute = Duration::from_secs(60);
    let criteria: [Criterion; 13] = [
        ("dimension identities", minute, dimensions),
        ("incidence rank", minute, incidence),
        ("basis agreement", 2 * minute, basis_agreement),
        ("base locus", 5 * minute, base_locus),
        ("span contraction", 5 * minute, span_contraction),
        ("fiber contraction", 5 * minute, fiber_contraction),
        ("image dimension", 5 * minute, image_dimension),
        ("segre cubic", 5 * minute, segre),
        ("rho bridge", 5 * minute, rho_bridge),
        ("cremona properties", 5 * minute, cremona),
        ("xi system", 5 * minute, xi),
        ("tree combinatorics", 5 * minute, trees),
        ("stability oracle", 5 * minute, stability),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let outcome = match result {
            Ok(detail) if elapsed <= *limit => Outcome { ok: true, detail },
            Ok(detail) => Outcome {
                ok: false,
                detail: format!("{detail}; exceeded {}s", limit.as_secs()),
            },
            Err(detail) => Outcome { ok: false, detail },
        };
        failed += usize::from(!outcome.ok);
        println!(
            "[{}] {:>2} {name} ({:.2}s): {}",
            if outcome.ok { "PASS" } else { "FAIL" },
            i + 1,
            elapsed.as_secs_f64(),
            outcome.detail
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use forgetful::brackets::{classify_stability, git_point, Configuration, GitPoint};
use forgetful::cremona::{cremona_inv, phi_xi, xi_basis};
use forgetful::exactnum::{format_rational, parse_rational_list, ProjectivePoint};
use forgetful::forms::FormJson;
use forgetful::omega::{binomial, catalan, config_of_point, omega_basis, phi_omega};
use forgetful::sampling::DEFAULT_BOUND;
use forgetful::suites::{verify_suite, SuiteParams, SUITES};
use forgetful::trees::{contract, enumerate_two_vertex, ContractionResult, LabeledTree, StableTree};
use forgetful::veronese::{rnc_through, CurveJson};
use forgetful::Error;

/// Exact constructions for forgetful linear systems, normal curves, Cremona
/// inversions, stable trees and bracket invariants.
#[derive(Parser)]
#[command(name = "forgetful", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Basis size of the degree-n system against both counting formulas.
    Dim {
        #[arg(long)]
        n: usize,
    },
    /// Canonical basis of the degree-n system on P^{2n-2} as JSON.
    OmegaBasis {
        #[arg(long)]
        n: usize,
    },
    /// Canonical basis of the degree-(n-1) system on P^{2n-3} as JSON.
    XiBasis {
        #[arg(long)]
        n: usize,
    },
    /// Image of a point of P^{2n-2}.
    Phi {
        #[arg(long)]
        n: usize,
        /// Comma-separated rationals, e.g. 1,2,3 or 1/2,-3,4.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Image of a point of P^{2n-3} under the degree-(n-1) system.
    PhiXi {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// The normal curve through d+3 points of P^d.
    Rnc {
        /// Points separated by semicolons, coordinates by commas.
        #[arg(long, allow_hyphen_values = true)]
        points: String,
    },
    /// Cremona inversion of a point.
    Cremona {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Configuration of 2n points of P^1 attached to a point of P^{2n-2}.
    Config {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Bracket invariants and stability of a configuration.
    GitPoint {
        #[arg(long)]
        n: usize,
        /// Points s,t separated by semicolons, e.g. "1,1;1,2;1,3;1,0".
        #[arg(long, allow_hyphen_values = true)]
        config: String,
    },
    /// Stable trees.
    Tree {
        #[command(subcommand)]
        command: TreeCommand,
    },
    /// Run a verification suite and print its JSON report.
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        #[arg(long)]
        n: usize,
        #[arg(long, env = "MF_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        samples: usize,
        /// Bound on numerators and denominators of random rationals.
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: i64,
        /// Include wall time in the report (breaks byte-for-byte determinism).
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Subcommand)]
enum TreeCommand {
    /// Contract a stable tree read from a JSON file.
    Contract {
        #[arg(long)]
        tree: std::path::PathBuf,
    },
    /// All two-vertex stable trees with n markings.
    Enum2 {
        #[arg(long)]
        n: usize,
    },
}

enum Outcome {
    Ok,
    VerificationFailed,
}

fn parse_point(text: &str) -> Result<ProjectivePoint, Error> {
    ProjectivePoint::new(parse_rational_list(text)?)
}

fn parse_points(text: &str) -> Result<Vec<ProjectivePoint>, Error> {
    text.split(';').map(|p| parse_point(p.trim())).collect()
}

fn plain(p: &ProjectivePoint) -> String {
    p.canonical().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn rationals(p: &ProjectivePoint) -> Value {
    json!(p.coords().iter().map(format_rational).collect::<Vec<_>>())
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("json values serialize"));
}

fn check_n(n: usize) -> Result<(), Error> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n must be at least 2, got {n}")));
    }
    Ok(())
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Dim { n } => {
            check_n(n)?;
            let nn = n as u64;
            let (r, s) = (binomial(2 * nn - 1, nn), binomial(2 * nn - 1, nn - 2));
            let basis = omega_basis(n)?.dimension() as u128;
            let hook = catalan(nn);
            let pass = basis == r - s && r - s == hook;
            print_json(&json!({
                "n": n,
                "basis_size": basis,
                "count": { "r": r, "s": s, "difference": r - s },
                "hook": hook,
                "status": if pass { "pass" } else { "fail" },
            }));
            eprintln!("{r} - {s} = {} = {}!/({}!*{}!) = {hook}; basis size {basis}", r - s, 2 * n, n + 1, n);
            return Ok(if pass { Outcome::Ok } else { Outcome::VerificationFailed });
        }
        Command::OmegaBasis { n } => {
            check_n(n)?;
            let sys = omega_basis(n)?;
            let forms: Vec<FormJson> = sys.basis().iter().map(FormJson::from).collect();
            print_json(&json!({ "n": n, "dimension": sys.dimension(), "basis": serde_json::to_value(forms).expect("forms serialize") }));
        }
        Command::XiBasis { n } => {
            check_n(n)?;
            let sys = xi_basis(n)?;
            let forms: Vec<FormJson> = sys.system.basis.iter().map(FormJson::from).collect();
            print_json(&json!({ "n": n, "dimension": sys.dimension(), "basis": serde_json::to_value(forms).expect("forms serialize") }));
        }
        Command::Phi { n, point } => {
            check_n(n)?;
            println!("{}", plain(&phi_omega(n, &parse_point(&point)?)?));
        }
        Command::PhiXi { n, point } => {
            check_n(n)?;
            println!("{}", plain(&phi_xi(n, &parse_point(&point)?)?));
        }
        Command::Rnc { points } => {
            let curve = rnc_through(&parse_points(&points)?)?;
            print_json(&serde_json::to_value(CurveJson::from(&curve)).expect("curve serializes"));
        }
        Command::Cremona { point } => {
            println!("{}", plain(&cremona_inv(&parse_point(&point)?)?));
        }
        Command::Config { n, point } => {
            let c = config_of_point(n, &parse_point(&point)?)?;
            print_json(&json!(c.to_json()));
        }
        Command::GitPoint { n, config } => {
            let c = Configuration::new(parse_points(&config)?)?;
            let stability = classify_stability(n, &c)?;
            let point = match git_point(n, &c)? {
                GitPoint::Point(p) => rationals(&p),
                GitPoint::ZeroVector => Value::Null,
            };
            print_json(&json!({
                "n": n,
                "point": point,
                "zero_vector": point.is_null(),
                "stability": serde_json::to_value(stability).expect("stability serializes"),
            }));
        }
        Command::Tree { command: TreeCommand::Contract { tree } } => {
            let text = std::fs::read_to_string(&tree)
                .map_err(|e| Error::InvalidArgument(format!("{}: {e}", tree.display())))?;
            let t = StableTree::new(LabeledTree::from_json(&text)?)?;
            print_json(&serde_json::to_value(contract(&t)).expect("contraction serializes"));
        }
        Command::Tree { command: TreeCommand::Enum2 { n } } => {
            if n < 4 {
                return Err(Error::InvalidArgument(format!("two-vertex stable trees need n >= 4, got {n}")));
            }
            let trees = enumerate_two_vertex(n);
            let mut profiles: BTreeMap<String, usize> = BTreeMap::new();
            let mut balanced = 0;
            for t in &trees {
                let mut w = [t.weight(0), t.weight(1)];
                w.sort_unstable();
                *profiles.entry(format!("{}+{}", w[0], w[1])).or_default() += 1;
                balanced += usize::from(matches!(contract(t), ContractionResult::NoCentral { .. }));
            }
            print_json(&json!({
                "n": n,
                "count": trees.len(),
                "no_central": balanced,
                "profiles": profiles,
                "trees": serde_json::to_value(&trees).expect("trees serialize"),
            }));
        }
        Command::Verify { suite, n, seed, samples, bound, timing } => {
            let report = verify_suite(&suite, SuiteParams { n, seed, samples, bound }, timing)?;
            print_json(&serde_json::to_value(&report).expect("report serializes"));
            eprintln!(
                "{suite} n={n} seed={seed}: {} ({} checks)",
                if report.passed() { "pass" } else { "FAIL" },
                report.checks.len()
            );
            for c in report.failed_checks() {
                eprintln!("  {}: expected {}, got {}", c.name, c.expected, c.actual);
            }
            if !report.passed() {
                return Ok(Outcome::VerificationFailed);
            }
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_degenerate_input() { 3 } else { 2 })
        }
    }
}

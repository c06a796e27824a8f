use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use bei::algebra::{initial_ideal, PolyRing, TermOrder};
use bei::formulas::{generalized_bei, predict, predicted_hilbert};
use bei::graph::{complete_multipartite, cut_sets, PartiteSpec, SimpleGraph, CUT_SET_MAX_VERTICES};
use bei::monomial::hilbert_series;
use bei::verify::{enumerate_specs, sweep, verify, Status, VerifyOptions, GROEBNER_MAX_VARS};
use bei::{Error, DEFAULT_PRIME};

#[derive(Parser)]
#[command(
    name = "bei",
    version,
    about = "Invariants of generalized binomial edge ideals of complete multipartite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write JSON here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form invariants.
    Predict(SpecArgs),
    /// Compute invariants exactly and compare them with the prediction.
    Verify(VerifyArgs),
    /// Verify every spec with m ≤ max-m and n ≤ max-n.
    Sweep(SweepArgs),
    /// Vertex sets with the cut point property of a graph read from JSON.
    Cutsets {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = CUT_SET_MAX_VERTICES)]
        max_vertices: usize,
    },
    /// Predicted against computed Hilbert series.
    Hilbert(VerifyArgs),
    /// Reduced Gröbner basis and initial ideal.
    Groebner(VerifyArgs),
}

#[derive(Args)]
struct SpecArgs {
    #[arg(long)]
    m: usize,
    /// Comma-separated part sizes; reordered ascending if needed.
    #[arg(long, value_delimiter = ',', required = true)]
    parts: Vec<usize>,
    /// Report the characteristic-zero interval for cd.
    #[arg(long)]
    char_zero: bool,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, env = "BEI_PRIME", default_value_t = DEFAULT_PRIME)]
    prime: u32,
    #[arg(long, default_value = "lex-row-major")]
    order: TermOrder,
    #[arg(long, default_value_t = GROEBNER_MAX_VARS)]
    groebner_max_vars: usize,
    #[arg(long, default_value_t = bei::monomial::HOCHSTER_MAX_VARS)]
    hochster_max_vars: usize,
    /// Also compute depth and regularity under the other lex order.
    #[arg(long)]
    cross_check: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[command(flatten)]
    oracle: OracleArgs,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    max_m: usize,
    #[arg(long)]
    max_n: usize,
    #[command(flatten)]
    oracle: OracleArgs,
    #[arg(long)]
    char_zero: bool,
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSpec(_) | Error::InvalidGraph(_) | Error::NotPrime(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Internal(e.to_string()),
        }
    }
}

fn spec_of(args: &SpecArgs) -> Result<PartiteSpec, Failure> {
    let (spec, reordered) = PartiteSpec::sorted(args.m, args.parts.clone())?;
    if reordered {
        eprintln!("warning: parts reordered to {:?}", spec.parts());
    }
    Ok(spec)
}

fn options(o: &OracleArgs, char_zero: bool) -> Result<VerifyOptions, Failure> {
    bei::algebra::Fp::new(o.prime)?;
    Ok(VerifyOptions {
        prime: o.prime,
        order: o.order,
        groebner_max_vars: o.groebner_max_vars,
        hochster_max_vars: o.hochster_max_vars,
        cross_check_order: o.cross_check,
        char_zero,
        ..VerifyOptions::default()
    })
}

fn gb_cap(spec: &PartiteSpec, cap: usize) -> Result<(), Failure> {
    let size = spec.m() * spec.n();
    if size > cap {
        return Err(Failure::Usage(format!(
            "mn = {size} exceeds --groebner-max-vars {cap}"
        )));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(Value, bool), Failure> {
    match &cli.command {
        Command::Predict(args) => {
            let spec = spec_of(args)?;
            Ok((json!(predict(&spec, args.char_zero)), false))
        }
        Command::Verify(args) => {
            let spec = spec_of(&args.spec)?;
            let report = verify(&spec, &options(&args.oracle, args.spec.char_zero)?)?;
            Ok((json!(report), report.has_mismatch()))
        }
        Command::Sweep(args) => {
            let specs = enumerate_specs(args.max_m, args.max_n);
            let result = sweep(&specs, &options(&args.oracle, args.char_zero)?)?;
            let names = |r: &bei::verify::InvariantReport, s: Status| -> Vec<String> {
                r.invariants
                    .iter()
                    .filter(|i| i.status == s)
                    .map(|i| i.name.clone())
                    .collect()
            };
            let rows: Vec<Value> = result
                .reports
                .iter()
                .map(|r| {
                    json!({
                        "spec": r.spec,
                        "mismatch": names(r, Status::Mismatch),
                        "skipped": names(r, Status::Skipped),
                    })
                })
                .collect();
            let bad = result.summary.mismatch > 0;
            Ok((json!({ "summary": result.summary, "specs": rows }), bad))
        }
        Command::Cutsets {
            graph,
            max_vertices,
        } => {
            let text = fs::read_to_string(graph)
                .map_err(|e| Failure::Usage(format!("{}: {e}", graph.display())))?;
            let g = SimpleGraph::from_json(&text)?;
            Ok((json!(cut_sets(&g, *max_vertices)?), false))
        }
        Command::Hilbert(args) => {
            let spec = spec_of(&args.spec)?;
            gb_cap(&spec, args.oracle.groebner_max_vars)?;
            let predicted = predicted_hilbert(&spec);
            let mut j =
                generalized_bei(spec.m(), &complete_multipartite(&spec), args.oracle.prime)?;
            let ring = *j.ring();
            let computed =
                hilbert_series(&initial_ideal(&ring, j.groebner_basis(args.oracle.order)?));
            let agree = predicted == computed;
            Ok((
                json!({
                    "predicted": predicted,
                    "computed": computed,
                    "predictedText": predicted.to_string(),
                    "computedText": computed.to_string(),
                    "match": agree,
                }),
                !agree,
            ))
        }
        Command::Groebner(args) => {
            let spec = spec_of(&args.spec)?;
            gb_cap(&spec, args.oracle.groebner_max_vars)?;
            let mut j =
                generalized_bei(spec.m(), &complete_multipartite(&spec), args.oracle.prime)?;
            let ring = *j.ring();
            let pr = PolyRing::new(ring, args.oracle.order);
            let gb = j.groebner_basis(args.oracle.order)?.to_vec();
            let ini = initial_ideal(&ring, &gb);
            let leads: Vec<String> = gb
                .iter()
                .map(|f| pr.format(&pr.monomial(f.leading_monomial().expect("nonzero"))))
                .collect();
            Ok((
                json!({
                    "order": args.oracle.order.name(),
                    "prime": args.oracle.prime,
                    "generators": j.generators().iter().map(|f| pr.format(f)).collect::<Vec<_>>(),
                    "basis": gb.iter().map(|f| pr.format(f)).collect::<Vec<_>>(),
                    "initialTerms": leads,
                    "squarefree": ini.is_squarefree(),
                }),
                false,
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (value, mismatch) = match run(&cli) {
        Ok(out) => out,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            return ExitCode::from(3);
        }
    };
    let text = serde_json::to_string_pretty(&value).expect("JSON values serialize") + "\n";
    match &cli.output {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(3);
            }
        }
        None => print!("{text}"),
    }
    if mismatch {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

mod commands;
mod input;
mod render;
mod tables;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cherednik_core::exec::with_jobs;
use cherednik_core::Exec;

use crate::commands::Output;
use crate::input::{resolve, RawInput, UsageError};
use crate::render::TextStyle;
use crate::verify::{Bounds, Suite};

/// Finite-dimensional modules and Dirac cohomology of infinitesimal Cherednik
/// algebras of GL_n, in exact rational arithmetic.
#[derive(Parser, Debug)]
#[command(name = "cherednik", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// ξ ↦ Ξ, g, w and the h-basis coefficients of P.
    Transform(Common),
    /// Λ̃ membership, ν and the weights of L(λ).
    Classify(Common),
    /// Full pipeline: L(λ), L(λ)⊗S, Dirac cohomology, guaranteed classes.
    Dirac(Common),
    /// μ+ρ, P(μ+ρ) and m_μ grids (n = 2), flat lists otherwise.
    Tables(Common),
    /// Run self-check suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct Common {
    /// Rank n.
    #[arg(long)]
    n: Option<usize>,
    /// Coefficients ξ_0, ξ_1, … as comma-separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    xi: Option<String>,
    /// Coefficients w_0, w_1, … of w.
    #[arg(long, allow_hyphen_values = true)]
    w: Option<String>,
    /// Coefficients of P in the complete homogeneous basis h_0, h_1, ….
    #[arg(long = "P-h", allow_hyphen_values = true)]
    p_h: Option<String>,
    /// Highest weight λ in plain coordinates.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Highest weight given as λ+ρ.
    #[arg(long = "lambda-plus-rho", allow_hyphen_values = true)]
    lambda_plus_rho: Option<String>,
    /// Re-run from a JSON document previously emitted with --json.
    #[arg(long)]
    input: Option<String>,
    /// Emit a single JSON document.
    #[arg(long)]
    json: bool,
    /// Render terminating fractions as decimals in text output.
    #[arg(long)]
    decimal: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: Suite,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    max_deg: Option<usize>,
    /// Worker threads for the sweeps.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    json: bool,
}

impl Common {
    fn raw(&self) -> RawInput {
        RawInput {
            n: self.n,
            xi: self.xi.clone(),
            w: self.w.clone(),
            p_h: self.p_h.clone(),
            lambda: self.lambda.clone(),
            lambda_plus_rho: self.lambda_plus_rho.clone(),
            input: self.input.clone(),
        }
    }
}

fn emit(out: Output, json: bool) -> ExitCode {
    if json {
        println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
    } else if out.code == 0 {
        print!("{}", out.text);
    } else {
        eprint!("{}", out.text);
    }
    ExitCode::from(out.code as u8)
}

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    let exec = Exec::default();
    let (common, need_lambda) = match &cli.command {
        Command::Verify(v) => {
            let bounds = Bounds { max_n: v.max_n, max_deg: v.max_deg };
            let (json, text, passed) = with_jobs(v.jobs, || verify::run(v.suite, &bounds, exec));
            if v.json {
                println!("{}", serde_json::to_string_pretty(&json).expect("serializable"));
            } else {
                print!("{text}");
            }
            return Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        Command::Transform(c) => (c, false),
        Command::Classify(c) | Command::Dirac(c) | Command::Tables(c) => (c, true),
    };
    let job = resolve(&common.raw(), need_lambda)?;
    let style = TextStyle { decimal: common.decimal };
    let out = match &cli.command {
        Command::Transform(_) => commands::transform(&job, &style)?,
        Command::Classify(_) => commands::classify(&job, &style),
        Command::Dirac(_) => commands::dirac(&job, &style, exec),
        Command::Tables(_) => tables::tables(&job, &style, exec),
        Command::Verify(_) => unreachable!(),
    };
    Ok(emit(out, common.json))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

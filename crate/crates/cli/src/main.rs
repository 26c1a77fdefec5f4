use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use upos::decider::{decide_ultimate_positivity, Budgets, Outcome};
use upos::degeneracy::plan_decomposition;
use upos::harness::{falsify, lrs_from_json, lrs_to_json, reduce_pos_to_lrs, verdict_to_json, PolyInstance};
use upos::lrs::closed_form;

#[derive(Parser)]
#[command(name = "upos", version, about = "Decide ultimate positivity of simple rational linear recurrences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    budgets: BudgetArgs,
    /// Compact JSON output (the default)
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Indented JSON output
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, global = true, default_value_t = 128)]
    precision_bits: u32,
    #[arg(long, global = true, default_value_t = 20)]
    masser_cap: u32,
    #[arg(long, global = true, default_value_t = 24)]
    bnb_depth: u32,
    #[arg(long, global = true, default_value_t = 64)]
    torsion_denominator_max: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Decide; exit 0 = UP, 1 = NOT_UP, 2 = INCONCLUSIVE, 3 = error
    Decide { file: PathBuf },
    /// List indices n <= horizon with u_n < 0
    Falsify {
        file: PathBuf,
        #[arg(long)]
        horizon: u64,
    },
    /// Encode a polynomial instance as an LRS
    Generate {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Dump the minimal recurrence, characteristic roots and closed form
    Roots { file: PathBuf },
}

fn read(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    let pretty = cli.pretty;
    let budgets = Budgets {
        precision_bits: cli.budgets.precision_bits,
        masser_cap: cli.budgets.masser_cap,
        bnb_depth: cli.budgets.bnb_depth,
        torsion_denominator_max: cli.budgets.torsion_denominator_max,
    };
    let emit = |v: &serde_json::Value| {
        let s = if pretty { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) };
        println!("{}", s.expect("json values serialize"));
    };
    match &cli.command {
        Command::Decide { file } => {
            let u = lrs_from_json(&read(file)?).map_err(|e| e.to_string())?;
            let v = decide_ultimate_positivity(&u, &budgets).map_err(|e| e.to_string())?;
            println!("{}", verdict_to_json(&v, pretty));
            Ok(ExitCode::from(match v.outcome {
                Outcome::UltimatelyPositive => 0,
                Outcome::NotUltimatelyPositive => 1,
                Outcome::Inconclusive => 2,
            }))
        }
        Command::Falsify { file, horizon } => {
            if *horizon == 0 {
                return Err("horizon must be at least 1".into());
            }
            let u = lrs_from_json(&read(file)?).map_err(|e| e.to_string())?;
            let neg = falsify(&u, *horizon);
            emit(&serde_json::json!({ "horizon": horizon, "negative": neg }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate { poly, out } => {
            let f = PolyInstance::from_json(&read(poly)?).map_err(|e| e.to_string())?;
            let u = reduce_pos_to_lrs(&f).map_err(|e| e.to_string())?;
            fs::write(out, lrs_to_json(&u, pretty) + "\n").map_err(|e| format!("{}: {e}", out.display()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Roots { file } => {
            let u = lrs_from_json(&read(file)?).map_err(|e| e.to_string())?.minimize();
            let mut report = serde_json::json!({
                "recurrence": u.display_coeffs(),
                "initial": u.display_initial(),
                "characteristic_polynomial": u.char_poly().to_string(),
                "simple": u.is_simple(),
            });
            if u.is_simple() {
                let cf = closed_form(&u).map_err(|e| e.to_string())?;
                let roots: Vec<_> = cf.terms.iter().map(|(r, _)| r.clone()).collect();
                let plan = plan_decomposition(&roots).map_err(|e| e.to_string())?;
                let mut terms = Vec::new();
                for (r, c) in &cf.terms {
                    let m = r.abs2().map_err(|e| e.to_string())?;
                    terms.push(serde_json::json!({
                        "root": r.describe(),
                        "modulus_squared": m.describe(),
                        "coefficient": c.describe(),
                    }));
                }
                report["closed_form"] = serde_json::Value::Array(terms);
                report["M"] = plan.m.into();
            }
            emit(&report);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    // usage errors share the error exit code; 2 means INCONCLUSIVE here
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use solvcohom::{run, Command, Instance, Options};

/// Exact twisted de Rham and Dolbeault cohomology of solvmanifolds.
#[derive(Parser)]
#[command(name = "solvcohom", version)]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// Instance file (JSON).
    instance: PathBuf,
    /// Also write the machine-readable result to this path; `-` for stdout.
    #[arg(long, value_name = "OUT")]
    json: Option<PathBuf>,
    /// Print cocycle representatives of every cohomology class.
    #[arg(long)]
    representatives: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let outcome = Instance::load(&args.instance)
        .and_then(|inst| run(args.command, &inst, Options { representatives: args.representatives }));
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let doc = serde_json::to_string_pretty(&outcome.json).expect("report serializes") + "\n";
    match args.json.as_deref() {
        Some(p) if p.as_os_str() == "-" => print!("{doc}"),
        Some(p) => {
            print!("{}", outcome.human);
            if let Err(e) = std::fs::write(p, doc) {
                eprintln!("error: cannot write {}: {e}", p.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{}", outcome.human),
    }
    ExitCode::from(outcome.exit_code)
}

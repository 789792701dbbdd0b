use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use orthokit_harness::gen::Bounds;
use orthokit_harness::scene::{self, SceneError};
use orthokit_harness::{run_suite, Backend, RunConfig, SUITES};

#[derive(Parser)]
#[command(name = "orthokit", version, about = "Orthologic triangles: theorem suites and scene figures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a theorem suite on seeded random instances.
    Check {
        suite: String,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = BackendArg::Exact)]
        backend: BackendArg,
        /// Relative tolerance of the float backend.
        #[arg(long)]
        tol: Option<f64>,
        /// Write the JSON report to this file.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Report `wall_ms` as null so reports are byte-stable.
        #[arg(long)]
        no_timing: bool,
        /// Largest sampled numerator.
        #[arg(long, default_value_t = 100)]
        max_num: i64,
        /// Largest sampled denominator.
        #[arg(long, default_value_t = 10)]
        max_den: i64,
    },
    /// Evaluate or render a scene file.
    Scene {
        #[command(subcommand)]
        command: SceneCommand,
    },
    /// List the registered suites.
    ListSuites,
}

#[derive(Subcommand)]
enum SceneCommand {
    /// Render the declared objects as SVG.
    Render {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Print the answers to the queries.
    Eval {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Exact,
    Float,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match cli.command {
        Command::ListSuites => {
            for s in SUITES {
                println!("{:<28}{:>6}  {}", s.id, s.default_trials, s.claim);
            }
            ExitCode::SUCCESS
        }
        Command::Check {
            suite,
            trials,
            seed,
            backend,
            tol,
            json,
            no_timing,
            max_num,
            max_den,
        } => {
            let backend = match (backend, tol) {
                (BackendArg::Exact, Some(_)) => return usage("the exact backend takes no --tol"),
                (BackendArg::Exact, None) => Backend::Exact,
                (BackendArg::Float, tol) => Backend::Float {
                    tol: tol.unwrap_or(orthokit::kernel::DEFAULT_TOL),
                },
            };
            if max_num < 1 || max_den < 1 {
                return usage("--max-num and --max-den must be positive");
            }
            let config = RunConfig {
                trials,
                seed,
                backend,
                bounds: Bounds {
                    num: max_num,
                    den: max_den,
                },
                timing: !no_timing,
            };
            let report = match run_suite(&suite, &config) {
                Ok(r) => r,
                Err(e) => return usage(&e.to_string()),
            };
            println!(
                "{}: {}/{} passed ({} backend, seed {})",
                report.suite, report.passes, report.trials, report.backend, report.seed
            );
            for f in &report.failures {
                println!("  trial {} failed: {:?}", f.index, f.residuals);
            }
            if let Some(path) = json {
                if let Err(e) = std::fs::write(&path, report.to_json()) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Scene { command } => run_scene(command),
    }
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn run_scene(command: SceneCommand) -> ExitCode {
    let file = match &command {
        SceneCommand::Render { file, .. } | SceneCommand::Eval { file, .. } => file,
    };
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => return usage(&format!("cannot read {}: {e}", file.display())),
    };
    let doc = match scene::parse_scene(&text) {
        Ok(d) => d,
        Err(e) => return usage(&format!("{}: {e}", file.display())),
    };
    let result = match &command {
        SceneCommand::Render { output, .. } => scene::render_svg(&doc).and_then(|svg| {
            std::fs::write(output, svg).map_err(|e| SceneError::Io(e.to_string()))
        }),
        SceneCommand::Eval { json, .. } => scene::evaluate(&doc).map(|answers| {
            if *json {
                print!("{}", scene::answers_json(&answers));
            } else {
                for a in &answers {
                    println!("{a}");
                }
            }
        }),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(SceneError::Io(e)) => usage(&e),
        Err(e) => {
            eprintln!("error: {}: {e}", file.display());
            ExitCode::from(1)
        }
    }
}

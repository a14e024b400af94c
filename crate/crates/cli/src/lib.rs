//! Command-line front end.
//!
//! Diagnostics go to standard error as
//! `<SEVERITY> <CODE> <file>:<line>:<col> <message>`, sorted by (file,
//! line, column, code); artifacts go to standard output or `-o` files, so
//! the tool composes in pipelines. No configuration files or environment
//! variables are read.
//!
//! Exit codes: 0 success, 1 model errors, 2 usage or configuration
//! errors, 3 simulation runtime errors.

pub mod registry;

use clap::{Args, Parser, Subcommand};
use kernel::{sort_diagnostics, Diagnostic, Severity, Workbench};
use registry::registry_help;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MODEL_ERRORS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SIMULATION: i32 = 3;

#[derive(Parser)]
#[command(
    name = "maa",
    about = "Workbench for composed component-and-connector models: architecture, behavior, and type languages checked and simulated together",
    after_help = registry_help(),
    version
)]
struct Invocation {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ModelPath {
    /// Model root directory; repeat for an ordered modelpath.
    #[arg(long = "modelpath", required = true)]
    modelpath: Vec<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Load all models and run every context condition.
    Check {
        #[command(flatten)]
        modelpath: ModelPath,
        /// Also verify that this component exists.
        #[arg(long)]
        main: Option<String>,
    },
    /// Execute a scenario against a checked architecture.
    Simulate {
        #[command(flatten)]
        modelpath: ModelPath,
        /// Qualified name of the component to instantiate.
        #[arg(long)]
        main: String,
        /// Scenario CSV: header row of input port names, one row per tick.
        #[arg(long)]
        scenario: PathBuf,
        /// Number of ticks to run.
        #[arg(long)]
        ticks: usize,
        /// Write the trace CSV here instead of standard output.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Repeat the scenario's final row when ticks outnumber rows.
        #[arg(long)]
        repeat_last: bool,
    },
    /// Emit an architecture diagram in Graphviz DOT form.
    Graph {
        #[command(flatten)]
        modelpath: ModelPath,
        /// Qualified name of the component to diagram.
        #[arg(long)]
        main: String,
        /// Output file (standard output when omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Emit the machine-readable IR of every loaded model.
    Ir {
        #[command(flatten)]
        modelpath: ModelPath,
        /// Output file (standard output when omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let invocation = match Invocation::try_parse_from(args) {
        Ok(i) => i,
        Err(e) => {
            // clap renders --help/--version itself with exit 0.
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match invocation.command {
        Command::Check { modelpath, main } => check(&modelpath.modelpath, main.as_deref()),
        Command::Simulate { modelpath, main, scenario, ticks, trace, repeat_last } => {
            simulate(&modelpath.modelpath, &main, &scenario, ticks, trace.as_deref(), repeat_last)
        }
        Command::Graph { modelpath, main, out } => graph(&modelpath.modelpath, &main, out.as_deref()),
        Command::Ir { modelpath, out } => ir(&modelpath.modelpath, out.as_deref()),
    }
}

/// Load the modelpath and run the full pipeline, reporting diagnostics.
/// Returns the workbench and whether errors were found.
fn load_and_check(modelpath: &[PathBuf]) -> Result<(Workbench, bool), i32> {
    for dir in modelpath {
        if !dir.is_dir() {
            eprintln!("error: modelpath entry `{}` is not a directory", dir.display());
            return Err(EXIT_USAGE);
        }
    }
    let mut wb = Workbench::new();
    if let Err(e) = family_maa::register_family(&mut wb) {
        eprintln!("error: {e}");
        return Err(EXIT_USAGE);
    }
    let load = kernel::load_models(&mut wb, modelpath);
    let mut diags = wb.run_pipeline(load);
    sort_diagnostics(&mut diags);
    report(&diags);
    let failed = diags.iter().any(|d| d.severity == Severity::Error);
    Ok((wb, failed))
}

fn report(diags: &[Diagnostic]) {
    let mut err = std::io::stderr().lock();
    for d in diags {
        let _ = writeln!(err, "{d}");
    }
}

fn check(modelpath: &[PathBuf], main: Option<&str>) -> i32 {
    let (wb, failed) = match load_and_check(modelpath) {
        Ok(x) => x,
        Err(code) => return code,
    };
    if failed {
        return EXIT_MODEL_ERRORS;
    }
    if let Some(main) = main {
        if family_maa::component_view(&wb, main).is_none() {
            eprintln!("error: `{main}` is not a component in the modelpath");
            return EXIT_USAGE;
        }
    }
    EXIT_OK
}

fn simulate(
    modelpath: &[PathBuf],
    main: &str,
    scenario_path: &std::path::Path,
    ticks: usize,
    trace_out: Option<&std::path::Path>,
    repeat_last: bool,
) -> i32 {
    let (wb, failed) = match load_and_check(modelpath) {
        Ok(x) => x,
        Err(code) => return code,
    };
    if failed {
        return EXIT_MODEL_ERRORS;
    }
    if family_maa::component_view(&wb, main).is_none() {
        eprintln!("error: `{main}` is not a component in the modelpath");
        return EXIT_USAGE;
    }
    let tree = match simulator::instantiate(&wb, main) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{}", e.to_diagnostic());
            return EXIT_SIMULATION;
        }
    };
    let scenario = match simulator::load_scenario(scenario_path, &tree, repeat_last) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{}", e.to_diagnostic());
            return EXIT_SIMULATION;
        }
    };
    let outcome = simulator::run(&tree, &scenario, ticks, None);
    if write_artifact(trace_out, &outcome.trace.to_csv()).is_err() {
        return EXIT_USAGE;
    }
    match outcome.error {
        Some(e) => {
            eprintln!("{}", e.to_diagnostic());
            EXIT_SIMULATION
        }
        None => EXIT_OK,
    }
}

fn graph(modelpath: &[PathBuf], main: &str, out: Option<&std::path::Path>) -> i32 {
    let (wb, failed) = match load_and_check(modelpath) {
        Ok(x) => x,
        Err(code) => return code,
    };
    if failed {
        return EXIT_MODEL_ERRORS;
    }
    match artifacts::emit_dot(&wb, main) {
        Ok(dot) => {
            if write_artifact(out, &dot).is_err() {
                return EXIT_USAGE;
            }
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {}", e.0);
            EXIT_USAGE
        }
    }
}

fn ir(modelpath: &[PathBuf], out: Option<&std::path::Path>) -> i32 {
    let (wb, failed) = match load_and_check(modelpath) {
        Ok(x) => x,
        Err(code) => return code,
    };
    if failed {
        return EXIT_MODEL_ERRORS;
    }
    match artifacts::emit_ir(&wb) {
        Ok(doc) => {
            if write_artifact(out, &doc.text).is_err() {
                return EXIT_USAGE;
            }
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {}", e.0);
            EXIT_USAGE
        }
    }
}

fn write_artifact(out: Option<&std::path::Path>, content: &str) -> Result<(), ()> {
    match out {
        Some(path) => std::fs::write(path, content).map_err(|e| {
            eprintln!("error: cannot write `{}`: {e}", path.display());
        }),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

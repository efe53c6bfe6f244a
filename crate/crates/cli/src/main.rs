use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use coxeter_core::harness::{
    cmd_atilde_verify, cmd_classify, cmd_cover, cmd_growth, cmd_preproj, write_report, ElementSelector,
    ExperimentConfig, Format, Report,
};
use coxeter_core::preprojective::DEFAULT_MU_MAX;
use coxeter_core::roots::depth::DEFAULT_DEPTH;
use coxeter_core::roots::length::DEFAULT_RADIUS;
use coxeter_core::Result;

/// Exact experiments on Coxeter systems with cyclic graphs.
#[derive(Parser, Debug)]
#[command(name = "coxeter", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Finite, affine or indefinite.
    Classify(Common),
    /// Decide every positive root against every Coxeter element.
    Cover(Common),
    /// Sphere sizes of W and root counts per depth.
    Growth(Common),
    /// Enumerate P(c) for one element, optionally deciding one root.
    Preproj {
        #[command(flatten)]
        common: Common,
        /// std:i,k | orient:bits | word:1,2,3
        #[arg(long)]
        element: String,
        /// Comma-separated coordinates; irrational ones as c0:c1:...
        #[arg(long, allow_hyphen_values = true)]
        root: Option<String>,
    },
    /// Check the closed forms for type Ã.
    AtildeVerify(Common),
}

#[derive(Args, Debug)]
struct Common {
    /// JSON system document.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_DEPTH)]
    depth: u32,
    #[arg(long, default_value_t = DEFAULT_MU_MAX)]
    mu_max: usize,
    #[arg(long, default_value_t = DEFAULT_RADIUS)]
    radius: u32,
    /// json or csv
    #[arg(long, default_value = "json")]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Seed for sampled re-checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl Common {
    fn config(&self) -> ExperimentConfig {
        ExperimentConfig {
            input: self.input.clone(),
            depth_bound: self.depth,
            mu_max: self.mu_max,
            radius: self.radius,
            format: self.format,
            seed: self.seed,
        }
    }

    fn emit(&self, report: &dyn Report) -> Result<()> {
        write_report(report, self.format, self.output.as_deref())
    }
}

/// Runs a command; `Ok(code)` is the exit status after a report was written.
fn run(command: Command) -> Result<u8> {
    match command {
        Command::Classify(c) => {
            c.emit(&cmd_classify(&c.config())?)?;
            Ok(0)
        }
        Command::Cover(c) => {
            let report = cmd_cover(&c.config())?;
            c.emit(&report)?;
            if report.consistent == Some(false) {
                eprintln!("theorem contradiction: {}", report.consistency_note);
                return Ok(4);
            }
            Ok(0)
        }
        Command::Growth(c) => {
            let report = cmd_growth(&c.config())?;
            c.emit(&report)?;
            if report.truncated() {
                eprintln!("resource guard hit: report is partial");
                return Ok(3);
            }
            Ok(0)
        }
        Command::Preproj { common, element, root } => {
            let selector: ElementSelector = element.parse()?;
            common.emit(&cmd_preproj(&common.config(), &selector, root.as_deref())?)?;
            Ok(0)
        }
        Command::AtildeVerify(c) => {
            c.emit(&cmd_atilde_verify(&c.config())?)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

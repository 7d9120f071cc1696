//! Command-line front end: read a job document, dispatch to the library,
//! write the report. Exit codes: 0 completed, 1 input error,
//! 2 unsupported equation class.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use polysolve::job::{self, Command as JobCommand, DemoName, JobConfig};
use polysolve::report;

#[derive(Parser)]
#[command(
    name = "polysolve",
    version,
    about = "Exact polynomial solutions of P y'' + Q y' - R y = 0"
)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Args)]
struct Common {
    /// Job document (defaults to standard input)
    #[arg(long)]
    job: Option<PathBuf>,
    /// Write the report here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Classify the origin and report indicial exponents
    Classify {
        #[command(flatten)]
        common: Common,
    },
    /// Solve for a degree-m polynomial candidate on every branch
    Solve {
        #[command(flatten)]
        common: Common,
        /// Target polynomial degree
        #[arg(long)]
        m: Option<usize>,
    },
    /// Extract condition polynomials in the unknown t and locate roots
    Conditions {
        #[command(flatten)]
        common: Common,
        /// Target polynomial degree
        #[arg(long)]
        m: Option<usize>,
    },
    /// Scan all degrees up to a bound
    Scan {
        #[command(flatten)]
        common: Common,
        /// Largest degree to try
        #[arg(long = "m-max")]
        m_max: Option<usize>,
    },
    /// Detect two-term-recurrence structure and closed forms
    Scheffe {
        #[command(flatten)]
        common: Common,
    },
    /// Run a built-in case study (no job file needed)
    Demo {
        #[command(flatten)]
        common: Common,
        /// One of: heun, dirac, invsqrt, cauchy_euler, hermite
        #[arg(long)]
        demo: Option<String>,
        /// Degree override for the case study
        #[arg(long)]
        m: Option<usize>,
        /// Degree-bound override for the case study
        #[arg(long = "m-max")]
        m_max: Option<usize>,
    },
}

fn read_job(common: &Common) -> Result<Vec<u8>, String> {
    match &common.job {
        Some(path) => {
            std::fs::read(path).map_err(|e| format!("cannot read job file {}: {e}", path.display()))
        }
        None => {
            let mut buf = Vec::new();
            std::io::stdin()
                .read_to_end(&mut buf)
                .map_err(|e| format!("cannot read job from stdin: {e}"))?;
            Ok(buf)
        }
    }
}

fn build_config(cli: &CliCommand) -> Result<JobConfig, String> {
    let (command, common) = match cli {
        CliCommand::Classify { common } => (JobCommand::Classify, common),
        CliCommand::Solve { common, .. } => (JobCommand::Solve, common),
        CliCommand::Conditions { common, .. } => (JobCommand::Conditions, common),
        CliCommand::Scan { common, .. } => (JobCommand::Scan, common),
        CliCommand::Scheffe { common } => (JobCommand::Scheffe, common),
        CliCommand::Demo { common, .. } => (JobCommand::Demo, common),
    };

    // demo runs without a job document; everything else reads one
    let mut config = if matches!(cli, CliCommand::Demo { .. }) && common.job.is_none() {
        JobConfig {
            format_version: job::FORMAT_VERSION,
            command,
            spec: None,
            m: None,
            m_max: None,
            s: None,
            demo: None,
        }
    } else {
        let bytes = read_job(common)?;
        job::parse_job_with_command(&bytes, command).map_err(|e| e.to_string())?
    };

    match cli {
        CliCommand::Solve { m, .. } | CliCommand::Conditions { m, .. } => {
            if m.is_some() {
                config.m = *m;
            }
            if config.m.is_none() {
                return Err("missing degree: pass --m or set `m` in the job".into());
            }
        }
        CliCommand::Scan { m_max, .. } => {
            if m_max.is_some() {
                config.m_max = *m_max;
            }
            if config.m_max.is_none() {
                return Err("missing bound: pass --m-max or set `m_max` in the job".into());
            }
        }
        CliCommand::Demo { demo, m, m_max, .. } => {
            if let Some(name) = demo {
                config.demo = Some(DemoName::from_name(name).map_err(|e| e.to_string())?);
            }
            if config.demo.is_none() {
                return Err("missing demo name: pass --demo or set [demo] name in the job".into());
            }
            if m.is_some() {
                config.m = *m;
            }
            if m_max.is_some() {
                config.m_max = *m_max;
            }
        }
        _ => {}
    }
    Ok(config)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = match &cli.command {
        CliCommand::Classify { common }
        | CliCommand::Solve { common, .. }
        | CliCommand::Conditions { common, .. }
        | CliCommand::Scan { common, .. }
        | CliCommand::Scheffe { common }
        | CliCommand::Demo { common, .. } => common,
    };
    let config = match build_config(&cli.command) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("polysolve: {msg}");
            return ExitCode::from(1);
        }
    };
    let output = report::run(&config);
    match &common.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &output.report) {
                eprintln!("polysolve: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{}", output.report),
    }
    ExitCode::from(output.exit_code as u8)
}

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ctl_bounds::bounds::{certify_upper, GroupRegistry, PropagatorRegistry, DEFAULT_MAX_J};
use ctl_bounds::configuration::ConfigFile;
use ctl_bounds::report::{self, Format};
use ctl_bounds::spectral::{word_dilatation, DEFAULT_MAX_ITERS, DEFAULT_TOL};
use ctl_bounds::Result;

/// Certified bounds on asymptotic translation lengths on the curve graph.
///
/// Exit codes: 0 success, 1 other failure, 2 validation, 3 empty certificate,
/// 4 spectral precondition, 5 proviso violation.
#[derive(Parser)]
#[command(name = "ctl-bounds", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lower bound 1/w for a group.
    Lower {
        /// torelli, purebraid or pmod.
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 0)]
        genus: u32,
        #[arg(long, default_value_t = 0)]
        punctures: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Upper bound 2/j for the word in a configuration file.
    Certify {
        config: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_J)]
        max_j: usize,
        /// boolean or exact.
        #[arg(long, default_value = "boolean")]
        mode: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Include per-iteration supports.
        #[arg(long)]
        trace: bool,
    },
    /// Dilatation of the word in a configuration file.
    Dilatation {
        config: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_MAX_ITERS)]
        max_iters: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Bounds over a parameter range of a family, as CSV.
    Sweep {
        /// torelli or purebraid.
        #[arg(long)]
        family: String,
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        /// Output file; standard output when absent.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Allow parameters above the default cap.
        #[arg(long)]
        force: bool,
    },
    /// Write a generated family to a configuration file.
    Family {
        /// torelli or purebraid.
        #[arg(long)]
        group: String,
        /// Genus for torelli, punctures for purebraid.
        #[arg(long)]
        param: u32,
        /// Output file; standard output when absent.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

fn emit(text: &str) -> Result<()> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Lower {
            group,
            genus,
            punctures,
            format,
        } => {
            let rec = GroupRegistry::global().get(&group)?.lower_bound(genus, punctures)?;
            emit(&report::render_lower(&rec, format)?)
        }
        Command::Certify {
            config,
            max_j,
            mode,
            format,
            trace,
        } => {
            let propagator = PropagatorRegistry::global().get(&mode)?;
            let inst = ConfigFile::load(&config)?.into_instance()?;
            let cert = certify_upper(&inst, max_j, propagator)?;
            emit(&report::render_certificate(&cert, format, trace)?)
        }
        Command::Dilatation {
            config,
            tol,
            max_iters,
            format,
        } => {
            let inst = ConfigFile::load(&config)?.into_instance()?;
            let r = word_dilatation(&inst.config, &inst.word, tol, max_iters)?;
            emit(&report::render_spectral(&r, format)?)
        }
        Command::Sweep {
            family,
            from,
            to,
            csv,
            tol,
            force,
        } => {
            let rows = report::sweep(&family, from, to, tol, force)?;
            match csv {
                Some(path) => report::write_csv(&rows, BufWriter::new(File::create(path)?)),
                None => report::write_csv(&rows, io::stdout().lock()),
            }
        }
        Command::Family { group, param, out } => {
            let inst = GroupRegistry::global()
                .get(&group)?
                .family(param)
                .ok_or_else(|| {
                    ctl_bounds::Error::Precondition(format!("group `{group}` has no explicit family"))
                })??;
            let file = ConfigFile::from_instance(&inst);
            match out {
                Some(path) => file.save(path),
                None => emit(&file.to_json()?),
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

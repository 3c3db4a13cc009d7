//! Command implementations behind the `e8ising` binary.
//!
//! Exit codes: 0 success, 1 computational or I/O failure (including a failed
//! verification), 2 usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use e8ising::coxplane::{coxeter_projection, emit_csv, emit_svg, PlaneError, SvgStyle};
use e8ising::format::sig12;
use e8ising::ising::{
    parse_grid, pseudo_critical_scan, ratio_sweep, Boundary, ChainError, ChainParams, MemoryBudget,
    DEFAULT_LEVELS,
};
use e8ising::lie::{LieError, RootSystem};
use e8ising::spectra::{
    e8_masses_from_nodes, pf_eigenvector, verify_mass_correspondence, zamolodchikov_ratios,
    SpectraError, CLOSED_FORMS, TABLE_DECIMALS,
};
use e8ising::{Error, SimpleTypeId};

#[derive(Parser)]
#[command(name = "e8ising", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare Coxeter-plane radii with Perron-Frobenius masses, one JSON report per type.
    Verify {
        /// Comma-separated types, e.g. `A2,D4,E8`.
        #[arg(long, value_delimiter = ',', required = true)]
        types: Vec<String>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Project a root system onto its Coxeter plane.
    Project {
        #[arg(long = "type")]
        type_id: String,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Sweep the transverse field of the Ising chain and tabulate the two lowest gaps.
    Chain {
        /// Number of sites.
        #[arg(long)]
        n: usize,
        /// Overall coupling K.
        #[arg(long, default_value_t = 1.0)]
        k: f64,
        #[arg(long, default_value_t = 0.0)]
        gz: f64,
        /// Transverse-field grid `start:stop:step` or a single value.
        #[arg(long)]
        gx: String,
        #[arg(long, default_value = "periodic")]
        boundary: String,
        #[arg(long, default_value_t = DEFAULT_LEVELS)]
        levels: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Also report the grid point minimizing the even-parity gap (needs gz = 0).
        #[arg(long)]
        scan_critical: bool,
    },
    /// Print the closed-form E8 masses next to the Perron-Frobenius eigenvector.
    Masses,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let usage = matches!(
            e,
            Error::Lie(LieError::InvalidRank { .. } | LieError::UnknownType(_))
                | Error::Spectra(SpectraError::ExcludedType(_))
                | Error::Plane(PlaneError::RankTooSmall(_))
                | Error::Chain(
                    ChainError::InvalidParams(_)
                        | ChainError::MemoryBudget { .. }
                        | ChainError::InvalidLevels { .. }
                        | ChainError::SectorUnavailable(_)
                        | ChainError::EmptyGrid
                )
        );
        if usage {
            Failure::Usage(e.to_string())
        } else {
            Failure::Compute(e.to_string())
        }
    }
}

impl From<LieError> for Failure {
    fn from(e: LieError) -> Self {
        Error::from(e).into()
    }
}

impl From<ChainError> for Failure {
    fn from(e: ChainError) -> Self {
        Error::from(e).into()
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents)
        .map_err(|e| Failure::Compute(format!("cannot write {}: {e}", path.display())))
}

fn verify(out: &mut dyn Write, types: &[String], tol: f64) -> Result<bool, Failure> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Failure::Usage(format!("tolerance {tol} must be positive")));
    }
    let ids = types
        .iter()
        .map(|t| t.parse())
        .collect::<Result<Vec<SimpleTypeId>, _>>()?;
    if let Some(id) = ids.iter().find(|id| id.rank() < 2) {
        return Err(Error::from(SpectraError::ExcludedType(id.to_string())).into());
    }
    let mut all_pass = true;
    for &id in &ids {
        let report = verify_mass_correspondence(id, tol)?;
        writeln!(out, "{}", report.to_json()).map_err(stdout_error)?;
        all_pass &= report.pass;
    }
    Ok(all_pass)
}

fn project(
    out: &mut dyn Write,
    type_id: &str,
    svg: Option<&Path>,
    csv: Option<&Path>,
) -> Result<(), Failure> {
    let p = coxeter_projection(type_id.parse::<SimpleTypeId>()?)?;
    if let Some(path) = svg {
        write_file(path, &emit_svg(&p.points, &SvgStyle::default()))?;
    }
    if let Some(path) = csv {
        write_file(path, &emit_csv(&p.points))?;
    }
    writeln!(
        out,
        "{} points on {} circles ({} orbits)",
        p.points.len(),
        p.circle_count(),
        p.orbit_count()
    )
    .map_err(stdout_error)
}

#[allow(clippy::too_many_arguments)]
fn chain(
    out: &mut dyn Write,
    n: usize,
    k: f64,
    gz: f64,
    gx: &str,
    boundary: &str,
    levels: usize,
    csv: Option<&Path>,
    json: Option<&Path>,
    scan_critical: bool,
) -> Result<(), Failure> {
    let grid = parse_grid(gx)?;
    let boundary: Boundary = boundary.parse()?;
    let first = *grid.first().ok_or(ChainError::EmptyGrid)?;
    let base = ChainParams::new(n, k, first, gz, boundary)?;
    if let Some(&bad) = grid.iter().find(|g| **g < 0.0) {
        return Err(ChainError::InvalidParams(format!(
            "transverse field gx = {bad} must be non-negative"
        ))
        .into());
    }
    if scan_critical && gz != 0.0 {
        return Err(Failure::Usage("--scan-critical needs --gz 0".into()));
    }
    let budget = MemoryBudget::from_env()?;
    budget.check(n)?;

    let table = ratio_sweep(&base, &grid, levels, &budget)?;
    if let Some(path) = csv {
        write_file(path, &table.to_csv())?;
    }
    if let Some(path) = json {
        write_file(path, &table.to_json())?;
    }
    write!(out, "{}", table.to_csv()).map_err(stdout_error)?;
    if scan_critical {
        let scan = pseudo_critical_scan(n, k, &grid, boundary, &budget)?;
        writeln!(out, "gx* = {}", sig12(scan.gx_star)).map_err(stdout_error)?;
    }
    Ok(())
}

fn masses() -> Result<String, Failure> {
    let rs = RootSystem::new("E8".parse()?)?;
    let pf = pf_eigenvector(rs.cartan(), rs.coxeter_number()).map_err(Error::from)?;
    let from_pf = e8_masses_from_nodes(&pf.vector);
    let closed = zamolodchikov_ratios();

    let mut table = String::from("mass,closed_form,value,printed,perron_frobenius\n");
    for i in 0..8 {
        let printed = if i == 0 {
            "1".to_string()
        } else {
            format!("{:.3}", TABLE_DECIMALS[i - 1])
        };
        writeln!(
            table,
            "m{},{},{},{},{}",
            i + 1,
            CLOSED_FORMS[i],
            sig12(closed[i]),
            printed,
            sig12(from_pf[i])
        )
        .unwrap();
    }
    let deviation = closed
        .iter()
        .zip(&from_pf)
        .map(|(a, b)| ((a - b) / a).abs())
        .fold(0.0, f64::max);
    writeln!(
        table,
        "# Perron-Frobenius eigenvalue {} (h = {})",
        sig12(pf.eigenvalue),
        rs.coxeter_number()
    )
    .unwrap();
    writeln!(table, "# max relative deviation {}", sig12(deviation)).unwrap();
    Ok(table)
}

fn stdout_error(e: std::io::Error) -> Failure {
    Failure::Compute(format!("cannot write output: {e}"))
}

fn dispatch(out: &mut dyn Write, cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Verify { types, tol } => verify(out, &types, tol),
        Command::Project { type_id, svg, csv } => {
            project(out, &type_id, svg.as_deref(), csv.as_deref()).map(|_| true)
        }
        Command::Chain {
            n,
            k,
            gz,
            gx,
            boundary,
            levels,
            csv,
            json,
            scan_critical,
        } => chain(
            out,
            n,
            k,
            gz,
            &gx,
            &boundary,
            levels,
            csv.as_deref(),
            json.as_deref(),
            scan_critical,
        )
        .map(|_| true),
        Command::Masses => {
            let table = masses()?;
            out.write_all(table.as_bytes()).map_err(stdout_error)?;
            Ok(true)
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return e.exit_code() as u8;
        }
    };
    let (code, msg) = match dispatch(out, cli) {
        Ok(true) => return 0,
        Ok(false) => return 1,
        Err(Failure::Usage(msg)) => (2, msg),
        Err(Failure::Compute(msg)) => (1, msg),
    };
    let _ = writeln!(err, "error: {msg}");
    code
}

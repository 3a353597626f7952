//! Argument parsing and subcommand dispatch.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use dense_coding::densecoding::{
    capacity_closed, critical_temperature, refine_crossing, sign_change_intervals, DEFAULT_T_HI,
    DEFAULT_T_LO, SCAN_RESOLUTION,
};
use dense_coding::spinmodels::{ModelKind, ModelParams};

use crate::error::CliError;
use crate::figures::figure;
use crate::format::{format_sig, to_csv, to_json};
use crate::sweep::{evaluate_point, run_sweep, Axis, Output, Param, SweepSpec};

#[derive(Debug, Parser)]
#[command(name = "densecoding", version, about = "Dense coding capacity of thermal two-qubit spin models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a single parameter point.
    Point(PointArgs),
    /// Evaluate a one- or two-dimensional parameter grid.
    Sweep(SweepArgs),
    /// Find the temperature where chi drops through 1.
    CriticalTemp(CriticalArgs),
    /// Write the data grid and gnuplot script for figure N.
    Figure(FigureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    Xxz,
    Dm,
}

impl From<ModelArg> for ModelKind {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Xxz => ModelKind::Xxz,
            ModelArg::Dm => ModelKind::Dm,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct ModelFlags {
    #[arg(long, value_enum)]
    model: ModelArg,
    #[arg(long = "j", allow_negative_numbers = true)]
    j: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    delta: Option<f64>,
    #[arg(long = "d", allow_negative_numbers = true)]
    d: Option<f64>,
}

impl ModelFlags {
    fn kind(&self) -> ModelKind {
        self.model.into()
    }

    /// Fixed values given on the command line, checked against the model.
    fn fixed(&self, t: Option<f64>) -> Result<BTreeMap<Param, f64>, CliError> {
        let kind = self.kind();
        let (own, foreign) = match kind {
            ModelKind::Xxz => ((Param::Delta, self.delta), (Param::D, self.d)),
            ModelKind::Dm => ((Param::D, self.d), (Param::Delta, self.delta)),
        };
        if foreign.1.is_some() {
            return Err(CliError::Usage(format!(
                "--{} does not apply to the {} model",
                foreign.0.name().to_lowercase(),
                kind
            )));
        }
        Ok([(Param::J, self.j), own, (Param::T, t)]
            .into_iter()
            .filter_map(|(p, v)| v.map(|v| (p, v)))
            .collect())
    }

    fn params(&self, t: f64) -> Result<ModelParams, CliError> {
        let fixed = self.fixed(Some(t))?;
        for param in Param::required_by(self.kind()) {
            if !fixed.contains_key(&param) {
                return Err(CliError::Usage(format!("missing --{}", param.name().to_lowercase())));
            }
        }
        let anisotropy = match self.kind() {
            ModelKind::Xxz => fixed[&Param::Delta],
            ModelKind::Dm => fixed[&Param::D],
        };
        Ok(ModelParams {
            kind: self.kind(),
            j: fixed[&Param::J],
            anisotropy,
            t,
        })
    }
}

#[derive(Debug, Args)]
struct PointArgs {
    #[command(flatten)]
    model: ModelFlags,
    #[arg(long = "t", allow_negative_numbers = true)]
    t: f64,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    model: ModelFlags,
    #[arg(long = "t", allow_negative_numbers = true)]
    t: Option<f64>,
    /// NAME:START:STOP:STEPS, given once or twice; the first is outermost.
    #[arg(long = "axis", required = true)]
    axes: Vec<String>,
    /// Comma-separated subset of chi,entropy,concurrence,valid.
    #[arg(long, value_delimiter = ',')]
    outputs: Vec<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Debug, Args)]
struct CriticalArgs {
    #[command(flatten)]
    model: ModelFlags,
    #[arg(long = "t-lo", default_value_t = DEFAULT_T_LO, allow_negative_numbers = true)]
    t_lo: f64,
    #[arg(long = "t-hi", default_value_t = DEFAULT_T_HI, allow_negative_numbers = true)]
    t_hi: f64,
    /// List every sign change of chi - 1 in the bracket.
    #[arg(long)]
    all: bool,
}

#[derive(Debug, Args)]
struct FigureArgs {
    /// Figure number, 1 to 6.
    n: u8,
    #[arg(long = "out-dir", default_value = ".")]
    out_dir: PathBuf,
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return e.exit_code();
        }
    };
    let result = match cli.command {
        Command::Point(a) => cmd_point(&a, out),
        Command::Sweep(a) => cmd_sweep(&a, out),
        Command::CriticalTemp(a) => cmd_critical_temp(&a, out),
        Command::Figure(a) => cmd_figure(&a, out),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|source| CliError::Io {
        path: "<stdout>".into(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn render(records: &[crate::sweep::SweepRecord], format: Format) -> String {
    match format {
        Format::Csv => to_csv(records),
        Format::Json => to_json(records),
    }
}

fn cmd_point(args: &PointArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let params = args.model.params(args.t)?;
    // Rejects J = 0 and T <= 0 before any output is produced.
    capacity_closed(&params)?;
    let record = evaluate_point(&params, &Output::all())?;
    emit(out, &render(&[record], args.format))
}

fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let axes = args.axes.iter().map(|a| a.parse()).collect::<Result<Vec<Axis>, _>>()?;
    let outputs = if args.outputs.is_empty() {
        Output::all()
    } else {
        args.outputs.iter().map(|o| o.trim().parse()).collect::<Result<_, _>>()?
    };
    let spec = SweepSpec {
        model: args.model.kind(),
        fixed: args.model.fixed(args.t)?,
        axes,
        outputs,
    };
    let text = render(&run_sweep(&spec)?, args.format);
    match &args.out {
        Some(path) => write_file(path, &text),
        None => emit(out, &text),
    }
}

fn cmd_critical_temp(args: &CriticalArgs, out: &mut dyn Write) -> Result<(), CliError> {
    // The temperature slot is unused by the search; any valid value will do.
    let params = args.model.params(1.0)?;
    if !args.all {
        let line = match critical_temperature(&params, args.t_lo, args.t_hi)? {
            Some(t) => format_sig(t),
            None => "none".into(),
        };
        return emit(out, &format!("{line}\n"));
    }
    let intervals = sign_change_intervals(&params, args.t_lo, args.t_hi, SCAN_RESOLUTION)?;
    if intervals.is_empty() {
        return emit(out, "none\n");
    }
    let mut text = String::from("t_lo,t_hi,t_critical\n");
    for (a, b) in intervals {
        let root = refine_crossing(&params, a, b)?;
        text.push_str(&format!("{},{},{}\n", format_sig(a), format_sig(b), format_sig(root)));
    }
    emit(out, &text)
}

fn cmd_figure(args: &FigureArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let fig = figure(args.n)
        .ok_or_else(|| CliError::Usage(format!("no figure {}; choose 1 to 6", args.n)))?;
    fs::create_dir_all(&args.out_dir).map_err(|source| CliError::Io {
        path: args.out_dir.display().to_string(),
        source,
    })?;
    let csv_path = args.out_dir.join(fig.csv_name());
    let script_path = args.out_dir.join(fig.script_name());
    write_file(&csv_path, &to_csv(&fig.records()?))?;
    write_file(&script_path, &fig.script())?;
    emit(
        out,
        &format!("{}\n{}\n", csv_path.display(), script_path.display()),
    )
}

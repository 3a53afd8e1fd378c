//! Command-line front end. States come in as coordinate or matrix JSON; results
//! go out as JSON, CSV or SVG on stdout or to `--output`.
//!
//! Exit codes: 0 success, 2 state inadmissible, 1 any error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::clifford::{full_basis, verify_algebra, BasisMode, CliffordBasis};
use crate::coords::{alt_expand, alt_project, decode, encode, DensityMatrix, StateCoords};
use crate::domains::{
    figure_data, sample_domain, tunnel_membership_with, validate, Figure, FigureOptions, SampleOptions, TunnelOptions,
    DOMAIN_TOL,
};
use crate::error::{Error, Result};
use crate::invariants::invariants_of_coords;
use crate::linalg::ComplexMatrix;
use crate::spectra::{closed_form_spectrum, numeric_spectrum, Spectrum};
use crate::symmetry::{conjugate_state, orthogonal_from_generator, rotate_coords, spin_lift, RotationGenerator};
use crate::tensor::AntisymTensor;

/// Relative output paths are resolved against this directory when it is set.
pub const OUT_DIR_VAR: &str = "CLIFFORD_BLOCH_OUT_DIR";

#[derive(Parser, Debug)]
#[command(
    name = "clifford-bloch",
    version,
    about = "Clifford-algebra coordinates, spectra and positivity domains of m-qubit states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a basis and check its algebra.
    Basis(BasisArgs),
    /// Coordinates JSON to matrix JSON.
    Encode(StateArgs),
    /// Matrix JSON to coordinates JSON.
    Decode(DecodeArgs),
    /// Invariants of a coordinate set.
    Invariants(StateArgs),
    /// Closed-form and/or eigensolver spectrum.
    Spectrum(SpectrumArgs),
    /// Admissibility verdict for any state.
    Validate(ValidateArgs),
    /// Monte-Carlo classification of random tensors.
    Sample(SampleArgs),
    /// Figure datasets.
    Figure(FigureArgs),
    /// Apply a rotation generator to coordinates.
    Rotate(RotateArgs),
    /// Verdicts for a file, the tunnel grid, or random samples.
    Domain(DomainArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Standard,
    Extended,
}

impl From<ModeArg> for BasisMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Standard => BasisMode::Standard,
            ModeArg::Extended => BasisMode::Extended,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Svg,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Write here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BasisArgs {
    #[arg(long)]
    m: usize,
    #[arg(long, value_enum, default_value = "standard")]
    mode: ModeArg,
    /// Include every element matrix.
    #[arg(long)]
    dump: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct StateArgs {
    #[arg(long)]
    input: PathBuf,
    /// Expected m; checked against the input.
    #[arg(long)]
    m: Option<usize>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct DecodeArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_enum, default_value = "standard")]
    mode: ModeArg,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
#[group(id = "which", multiple = false)]
struct SpectrumArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, group = "which")]
    closed_form: bool,
    #[arg(long, group = "which")]
    oracle: bool,
    #[arg(long, group = "which")]
    both: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct ValidateArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = DOMAIN_TOL)]
    tol: f64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct SampleArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1.2)]
    half_width: f64,
    #[arg(long, default_value_t = DOMAIN_TOL)]
    tol: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct FigureArgs {
    /// fig1, fig2 or fig3.
    which: String,
    #[arg(long, default_value_t = 101)]
    resolution: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    #[arg(long)]
    paper_cube: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct RotateArgs {
    #[arg(long)]
    input: PathBuf,
    /// Rotation plane as `i,j` (1-based).
    #[arg(long, value_delimiter = ',', requires = "angle", conflicts_with = "generator")]
    plane: Option<Vec<usize>>,
    #[arg(long, allow_hyphen_values = true)]
    angle: Option<f64>,
    /// Grade-2 tensor JSON holding the generator.
    #[arg(long)]
    generator: Option<PathBuf>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
#[group(id = "source", required = true, multiple = false)]
struct DomainArgs {
    #[arg(long, group = "source")]
    input: Option<PathBuf>,
    /// Tunnel-family grid over [-1, 1]^3.
    #[arg(long, group = "source")]
    grid: bool,
    #[arg(long, group = "source")]
    samples: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 21)]
    resolution: usize,
    #[arg(long)]
    paper_cube: bool,
    #[arg(long, default_value_t = DOMAIN_TOL)]
    tol: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    #[command(flatten)]
    out: OutputArgs,
}

enum Outcome {
    Done,
    Inadmissible,
}

/// Runs with process stdout/stderr; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let text = e.to_string();
            let _ = writeln!(err, "{}", text.lines().next().unwrap_or("usage error"));
            return 1;
        }
    };
    match execute(cli.command, out) {
        Ok(Outcome::Done) => 0,
        Ok(Outcome::Inadmissible) => 2,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<Outcome> {
    match command {
        Command::Basis(a) => basis_cmd(a, out),
        Command::Encode(a) => {
            let coords = read_coords(&a.input, a.m)?;
            let basis = full_basis(coords.m(), coords.mode())?;
            let rho = encode_any(&coords, &basis)?;
            emit(&a.out, out, &to_json(rho.matrix())?)?;
            Ok(Outcome::Done)
        }
        Command::Decode(a) => {
            let rho = read_matrix(&a.input, a.m)?;
            let basis = full_basis(rho.m(), a.mode.into())?;
            let coords = match basis.mode() {
                BasisMode::Standard => decode(&rho, &basis)?,
                BasisMode::Extended => alt_project(&rho, &basis)?.coords,
            };
            emit(&a.out, out, &to_json(&coords)?)?;
            Ok(Outcome::Done)
        }
        Command::Invariants(a) => {
            let coords = read_coords(&a.input, a.m)?;
            emit(&a.out, out, &to_json(&invariants_of_coords(&coords)?)?)?;
            Ok(Outcome::Done)
        }
        Command::Spectrum(a) => spectrum_cmd(a, out),
        Command::Validate(a) => {
            let (coords, rho) = read_state(&a.input, a.m)?;
            validate_cmd(&coords, &rho, a.tol, &a.out, out)
        }
        Command::Sample(a) => {
            let options = SampleOptions {
                half_width: a.half_width,
                tol: a.tol,
            };
            let text = sample_text(a.m, a.k, a.samples, a.seed, options, a.format)?;
            emit(&a.out, out, &text)?;
            Ok(Outcome::Done)
        }
        Command::Figure(a) => {
            let which: Figure = a.which.parse()?;
            let data = figure_data(
                which,
                a.resolution,
                FigureOptions {
                    paper_cube: a.paper_cube,
                },
            )?;
            let text = match a.format {
                FormatArg::Csv => data.to_csv(),
                FormatArg::Json => to_json(&data)?,
                FormatArg::Svg => data.to_svg(),
            };
            emit(&a.out, out, &text)?;
            Ok(Outcome::Done)
        }
        Command::Rotate(a) => rotate_cmd(a, out),
        Command::Domain(a) => domain_cmd(a, out),
    }
}

fn basis_cmd(a: BasisArgs, out: &mut dyn Write) -> Result<Outcome> {
    let basis = full_basis(a.m, a.mode.into())?;
    let report = match basis.certificate() {
        Some(r) => r.clone(),
        None => verify_algebra(&basis),
    };
    let mut value = json!({
        "m": a.m,
        "mode": basis.mode(),
        "dim": basis.dim(),
        "report": report,
    });
    if a.dump {
        let elements: Vec<_> = basis
            .elements()
            .iter()
            .map(|(idx, e)| json!({ "idx": idx.indices(), "matrix": e }))
            .collect();
        value["gammas"] = serde_json::to_value(basis.gammas())?;
        value["chirality"] = serde_json::to_value(basis.chirality())?;
        value["elements"] = serde_json::Value::Array(elements);
    }
    emit(&a.out, out, &to_json(&value)?)?;
    if report.max_residual() > 1e-10 {
        return Err(Error::Invalid(format!("algebra residual {:e}", report.max_residual())));
    }
    Ok(Outcome::Done)
}

fn spectrum_cmd(a: SpectrumArgs, out: &mut dyn Write) -> Result<Outcome> {
    let (coords, rho) = read_state(&a.input, a.m)?;
    let want_closed = !a.oracle;
    let want_oracle = !a.closed_form;
    let closed = if want_closed {
        let standard = standard_coords(&coords, &rho)?;
        match closed_form_spectrum(&standard)? {
            Some(s) => Some(s),
            None if a.closed_form => {
                return Err(Error::KindMismatch(
                    "no closed form: coordinates are not a pure vector or 2-tensor configuration".into(),
                ))
            }
            None => None,
        }
    } else {
        None
    };
    let oracle = if want_oracle {
        Some(numeric_spectrum(&rho)?)
    } else {
        None
    };
    let max_diff = match (&closed, &oracle) {
        (Some(c), Some(o)) => Some(c.max_abs_diff(o)),
        _ => None,
    };
    #[derive(Serialize)]
    struct Report {
        m: usize,
        closed_form: Option<Spectrum>,
        oracle: Option<Spectrum>,
        max_diff: Option<f64>,
    }
    let report = Report {
        m: rho.m(),
        closed_form: closed,
        oracle,
        max_diff,
    };
    emit(&a.out, out, &to_json(&report)?)?;
    Ok(Outcome::Done)
}

fn validate_cmd(
    coords: &StateCoords,
    rho: &DensityMatrix,
    tol: f64,
    dest: &OutputArgs,
    out: &mut dyn Write,
) -> Result<Outcome> {
    let basis = full_basis(coords.m(), coords.mode())?;
    let validation = validate(coords, &basis, tol)?;
    let oracle_min = numeric_spectrum(rho)?.min();
    let value = json!({
        "route": validation.route,
        "verdict": validation.verdict,
        "oracle_min_eigenvalue": oracle_min,
    });
    emit(dest, out, &to_json(&value)?)?;
    Ok(if validation.verdict.admissible {
        Outcome::Done
    } else {
        Outcome::Inadmissible
    })
}

fn sample_text(m: usize, k: usize, n: usize, seed: u64, options: SampleOptions, format: FormatArg) -> Result<String> {
    let samples = sample_domain(m, k, n, seed, options)?;
    match format {
        FormatArg::Csv => {
            let mut s = String::from("index,closed_form_admissible,on_boundary,margin,oracle_min_eigenvalue,oracle_admissible,coefficients\n");
            for x in &samples {
                let coeffs: Vec<String> = x.tensor.to_vec().iter().map(f64::to_string).collect();
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{}",
                    x.index,
                    u8::from(x.closed_form.admissible),
                    u8::from(x.closed_form.boundary),
                    x.closed_form.margin,
                    x.oracle_min_eigenvalue,
                    u8::from(x.oracle_admissible),
                    coeffs.join(";")
                );
            }
            Ok(s)
        }
        FormatArg::Json => {
            let admissible = samples.iter().filter(|x| x.closed_form.admissible).count();
            let disagreements = samples.iter().filter(|x| !x.agrees()).count();
            let fraction = if n == 0 { 0.0 } else { admissible as f64 / n as f64 };
            to_json(&json!({
                "m": m,
                "k": k,
                "n": n,
                "seed": seed,
                "half_width": options.half_width,
                "admissible_fraction": fraction,
                "disagreements": disagreements,
                "samples": samples,
            }))
        }
        FormatArg::Svg => Err(Error::Invalid("sample output supports csv or json".into())),
    }
}

fn rotate_cmd(a: RotateArgs, out: &mut dyn Write) -> Result<Outcome> {
    let coords = read_coords(&a.input, None)?;
    let side = coords.side();
    let generator = match (&a.plane, a.angle, &a.generator) {
        (Some(p), Some(angle), None) if p.len() == 2 => RotationGenerator::plane(side, p[0], p[1], angle)?,
        (None, None, Some(path)) => {
            let alpha: AntisymTensor = serde_json::from_str(&read_text(path)?)?;
            RotationGenerator::new(alpha)?
        }
        _ => {
            return Err(Error::Invalid(
                "give either --plane i,j with --angle, or --generator".into(),
            ))
        }
    };
    if generator.side() != side {
        return Err(Error::DimensionMismatch {
            expected: side,
            found: generator.side(),
        });
    }
    let l = orthogonal_from_generator(&generator);
    let rotated = rotate_coords(&coords, &l)?;
    let basis = full_basis(coords.m(), coords.mode())?;
    let u = spin_lift(&generator, &basis)?;
    let lhs = encode_any(&rotated, &basis)?;
    let rhs = conjugate_state(&encode_any(&coords, &basis)?, &u)?;
    let residual = lhs.matrix().max_abs_diff(rhs.matrix());
    let rows: Vec<Vec<f64>> = (0..l.dim())
        .map(|i| (0..l.dim()).map(|j| l.matrix()[(i, j)]).collect())
        .collect();
    let value = json!({
        "coords": rotated,
        "orthogonal": rows,
        "compatibility_residual": residual,
    });
    emit(&a.out, out, &to_json(&value)?)?;
    Ok(Outcome::Done)
}

fn domain_cmd(a: DomainArgs, out: &mut dyn Write) -> Result<Outcome> {
    if let Some(path) = &a.input {
        let (coords, rho) = read_state(path, a.m)?;
        return validate_cmd(&coords, &rho, a.tol, &a.out, out);
    }
    if let Some(n) = a.samples {
        let m = a.m.ok_or_else(|| Error::Invalid("--samples needs --m".into()))?;
        let options = SampleOptions {
            tol: a.tol,
            ..SampleOptions::default()
        };
        emit(&a.out, out, &sample_text(m, a.k, n, a.seed, options, a.format)?)?;
        return Ok(Outcome::Done);
    }
    if a.resolution < 2 {
        return Err(Error::BadResolution(a.resolution));
    }
    let options = TunnelOptions {
        paper_cube: a.paper_cube,
    };
    let step = (a.resolution - 1) as f64;
    let coord = |i: usize| -1.0 + 2.0 * i as f64 / step;
    let mut rows = Vec::with_capacity(a.resolution.pow(3));
    for i in 0..a.resolution {
        for j in 0..a.resolution {
            for k in 0..a.resolution {
                let (x, y, z) = (coord(i), coord(j), coord(k));
                rows.push((x, y, z, tunnel_membership_with(x, y, z, options, a.tol)));
            }
        }
    }
    let text = match a.format {
        FormatArg::Csv => {
            let mut s = String::from("x,y,z,admissible,on_boundary\n");
            for (x, y, z, v) in &rows {
                let _ = writeln!(s, "{x},{y},{z},{},{}", u8::from(v.admissible), u8::from(v.boundary));
            }
            s
        }
        FormatArg::Json => {
            let points: Vec<_> = rows
                .iter()
                .map(|(x, y, z, v)| json!({"x": x, "y": y, "z": z, "admissible": v.admissible, "on_boundary": v.boundary}))
                .collect();
            to_json(&points)?
        }
        FormatArg::Svg => return Err(Error::Invalid("grid output supports csv or json".into())),
    };
    emit(&a.out, out, &text)?;
    Ok(Outcome::Done)
}

fn encode_any(coords: &StateCoords, basis: &CliffordBasis) -> Result<DensityMatrix> {
    match coords.mode() {
        BasisMode::Standard => encode(coords, basis),
        BasisMode::Extended => alt_expand(coords, basis),
    }
}

/// Standard-mode coordinates for closed-form routing.
fn standard_coords(coords: &StateCoords, rho: &DensityMatrix) -> Result<StateCoords> {
    match coords.mode() {
        BasisMode::Standard => Ok(coords.clone()),
        BasisMode::Extended => decode(rho, &full_basis(rho.m(), BasisMode::Standard)?),
    }
}

fn read_text(path: &Path) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

fn check_m(expected: Option<usize>, found: usize) -> Result<()> {
    match expected {
        Some(m) if m != found => Err(Error::DimensionMismatch { expected: m, found }),
        _ => Ok(()),
    }
}

fn read_coords(path: &Path, m: Option<usize>) -> Result<StateCoords> {
    let coords: StateCoords = serde_json::from_str(&read_text(path)?)?;
    check_m(m, coords.m())?;
    Ok(coords)
}

fn read_matrix(path: &Path, m: Option<usize>) -> Result<DensityMatrix> {
    let matrix: ComplexMatrix = serde_json::from_str(&read_text(path)?)?;
    let rho = DensityMatrix::from_matrix(matrix)?;
    check_m(m, rho.m())?;
    Ok(rho)
}

/// Coordinates JSON or matrix JSON (recognized by its `dim` field); returns both views.
fn read_state(path: &Path, m: Option<usize>) -> Result<(StateCoords, DensityMatrix)> {
    let value: serde_json::Value = serde_json::from_str(&read_text(path)?)?;
    if value.get("dim").is_some() {
        let rho = DensityMatrix::from_matrix(serde_json::from_value(value)?)?;
        check_m(m, rho.m())?;
        let coords = decode(&rho, &full_basis(rho.m(), BasisMode::Standard)?)?;
        Ok((coords, rho))
    } else {
        let coords: StateCoords = serde_json::from_value(value)?;
        check_m(m, coords.m())?;
        let rho = encode_any(&coords, &full_basis(coords.m(), coords.mode())?)?;
        Ok((coords, rho))
    }
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn emit(dest: &OutputArgs, out: &mut dyn Write, text: &str) -> Result<()> {
    match &dest.output {
        Some(path) => {
            let path = match std::env::var_os(OUT_DIR_VAR) {
                Some(dir) if path.is_relative() => Path::new(&dir).join(path),
                _ => path.clone(),
            };
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent)?;
            }
            std::fs::write(path, text)?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

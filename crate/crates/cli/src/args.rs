//! Command-line surface: clap definitions and the complex-number parser.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use surfinv::numerics::Tolerance;

#[derive(Parser, Debug)]
#[command(
    name = "surfinv",
    version,
    about = "Biholomorphic invariants of hyperbolic Riemann surfaces",
    long_about = "Numerical invariants of hyperbolic Riemann surfaces: squeezing \
functions, Kobayashi and Caratheodory Fridman functions, injectivity radii, \
quotient invariants, and a Fuchsian-group orbit engine."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate the invariants at explicit points
    Eval(EvalArgs),
    /// Sample the invariants over a log-spaced radial grid
    Grid(GridArgs),
    /// Emit the three-curve annulus chart (CSV and SVG)
    Figure(FigureArgs),
    /// Run the numerical verification suites
    Verify(VerifyArgs),
    /// Run the orbit engine on a group definition file
    Fuchsian(FuchsianArgs),
}

/// Domain selection, shared by eval and grid. Exactly one of the three
/// must be given.
#[derive(clap::Args, Debug)]
pub struct DomainArgs {
    /// Inner radius of the annulus { r < |z| < 1 }
    #[arg(long)]
    pub r: Option<f64>,

    /// Punctures of a punctured disk: comma-separated complex numbers
    /// (e.g. "0" or "0,0.5,-0.2+0.1i")
    #[arg(long, value_delimiter = ',')]
    pub punctures: Option<Vec<String>>,

    /// Path to a JSON group definition file (see the fuchsian subcommand)
    #[arg(long)]
    pub group: Option<PathBuf>,
}

/// Tolerance overrides, shared by every command that computes.
#[derive(clap::Args, Debug, Clone, Copy)]
pub struct TolArgs {
    /// Truncation threshold for infinite products
    #[arg(long)]
    pub eps_product: Option<f64>,

    /// Comparison tolerance for verification and exactness checks
    #[arg(long)]
    pub eps_compare: Option<f64>,

    /// Orbit search depth (maximum reduced word length)
    #[arg(long)]
    pub depth: Option<usize>,
}

impl TolArgs {
    /// Default tolerances with the given overrides applied.
    pub fn resolve(&self) -> Tolerance {
        let mut tol = Tolerance::default();
        if let Some(e) = self.eps_product {
            tol.eps_product = e;
        }
        if let Some(e) = self.eps_compare {
            tol.eps_compare = e;
        }
        if let Some(d) = self.depth {
            tol.orbit_depth = d;
        }
        tol
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(clap::Args, Debug)]
pub struct EvalArgs {
    #[command(flatten)]
    pub domain: DomainArgs,

    /// Points to evaluate at: comma-separated complex numbers
    /// ("0.1,0.2+0.3i"); for --group these are base points in the
    /// covering model
    #[arg(long, value_delimiter = ',', required = true)]
    pub points: Vec<String>,

    /// Output format (svg requires a radial grid; use grid or figure)
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,

    /// Output file (stdout when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,

    #[command(flatten)]
    pub tol: TolArgs,
}

#[derive(clap::Args, Debug)]
pub struct GridArgs {
    #[command(flatten)]
    pub domain: DomainArgs,

    /// Number of grid points
    #[arg(long, default_value_t = 200)]
    pub n: usize,

    /// Output format
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,

    /// Output file (stdout when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,

    #[command(flatten)]
    pub tol: TolArgs,
}

#[derive(clap::Args, Debug)]
pub struct FigureArgs {
    /// Inner radius of the annulus
    #[arg(long, default_value_t = 0.01)]
    pub r: f64,

    /// Number of grid points
    #[arg(long, default_value_t = 400)]
    pub n: usize,

    /// Output stem: writes <stem>.csv and <stem>.svg
    #[arg(long, default_value = "figure")]
    pub out: PathBuf,

    #[command(flatten)]
    pub tol: TolArgs,
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    /// Run a single suite: chain, crossrep, engine, limits, argmin, quotient
    #[arg(long)]
    pub suite: Option<String>,

    #[command(flatten)]
    pub tol: TolArgs,
}

#[derive(clap::Args, Debug)]
pub struct FuchsianArgs {
    /// Path to a JSON group definition file
    #[arg(long, required = true)]
    pub group: PathBuf,

    /// Base points in the covering model, comma-separated complex numbers
    #[arg(long, value_delimiter = ',', required = true)]
    pub points: Vec<String>,

    /// Structured output instead of the text report (csv or json)
    #[arg(long, value_enum)]
    pub format: Option<Format>,

    /// Output file (stdout when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,

    #[command(flatten)]
    pub tol: TolArgs,
}

/// Parse one complex number. Accepted forms: `1.5`, `-2e-3`, `0.2+0.3i`,
/// `1e-3-0.5i`, `0.3i`, `i`, `-i`.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t = s.trim();
    if t.is_empty() {
        return Err("empty number".into());
    }
    if let Ok(x) = t.parse::<f64>() {
        return Ok(Complex64::new(x, 0.0));
    }
    let Some(body) = t.strip_suffix('i') else {
        return Err(format!(
            "cannot parse '{s}' as a complex number (examples: 1.5, 0.2+0.3i, -0.4i)"
        ));
    };
    // split "a±b" at the last sign that is not an exponent sign and not leading
    let bytes = body.as_bytes();
    let mut split = None;
    for k in (1..bytes.len()).rev() {
        if matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
            split = Some(k);
            break;
        }
    }
    let imag_of = |txt: &str| -> Result<f64, String> {
        match txt {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => txt
                .parse::<f64>()
                .map_err(|_| format!("bad imaginary part in '{s}'")),
        }
    };
    if let Some(k) = split {
        let re: f64 = body[..k]
            .parse()
            .map_err(|_| format!("bad real part in '{s}'"))?;
        let im = imag_of(&body[k..])?;
        Ok(Complex64::new(re, im))
    } else {
        Ok(Complex64::new(0.0, imag_of(body)?))
    }
}

/// Parse a comma-separated point list that clap has already split.
pub fn parse_points(raw: &[String]) -> Result<Vec<Complex64>, String> {
    if raw.is_empty() {
        return Err("empty point list".into());
    }
    raw.iter().map(|s| parse_complex(s)).collect()
}

//! Command implementations and the exit-code contract.
//!
//! Exit codes: 0 success, 1 usage (bad flags, malformed input, invalid
//! domain construction), 2 numerical failure (evaluation errors on every
//! requested point, a failed verification suite), 3 I/O.

use std::fmt;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use surfinv::domains::{Annulus, PuncturedDisk};
use surfinv::fuchsian::{FridmanValue, FuchsianGroup};
use surfinv::hyperbolic::Model;
use surfinv::numerics::Tolerance;

use crate::args::{
    self, Cli, Command, DomainArgs, EvalArgs, FigureArgs, Format, FuchsianArgs, GridArgs,
    VerifyArgs,
};
use crate::emit::{self, Record};
use crate::groupfile;
use crate::verify;

#[derive(Debug)]
pub enum CmdError {
    Usage(String),
    Numerical(String),
    Io(String),
}

impl CmdError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CmdError::Usage(_) => 1,
            CmdError::Numerical(_) => 2,
            CmdError::Io(_) => 3,
        }
    }
}

impl fmt::Display for CmdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CmdError::Usage(m) | CmdError::Numerical(m) | CmdError::Io(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CmdError {}

pub fn dispatch(cli: Cli) -> Result<(), CmdError> {
    match cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Grid(a) => cmd_grid(a),
        Command::Figure(a) => cmd_figure(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Fuchsian(a) => cmd_fuchsian(a),
    }
}

fn usage(e: impl fmt::Display) -> CmdError {
    CmdError::Usage(e.to_string())
}

fn resolve_tolerance(t: &args::TolArgs) -> Result<Tolerance, CmdError> {
    let tol = t.resolve();
    tol.validate().map_err(usage)?;
    Ok(tol)
}

enum ResolvedDomain {
    Annulus(Annulus),
    Punctured(PuncturedDisk),
    Group(FuchsianGroup),
}

fn resolve_domain(d: &DomainArgs) -> Result<ResolvedDomain, CmdError> {
    let picks = d.r.is_some() as u8 + d.punctures.is_some() as u8 + d.group.is_some() as u8;
    if picks != 1 {
        return Err(usage(
            "exactly one domain is required: --r <radius>, --punctures <list>, or --group <file>",
        ));
    }
    if let Some(r) = d.r {
        Ok(ResolvedDomain::Annulus(Annulus::new(r).map_err(usage)?))
    } else if let Some(raw) = &d.punctures {
        let punctures = args::parse_points(raw).map_err(CmdError::Usage)?;
        Ok(ResolvedDomain::Punctured(
            PuncturedDisk::new(punctures).map_err(usage)?,
        ))
    } else {
        let path = d.group.as_ref().expect("one pick is set");
        Ok(ResolvedDomain::Group(groupfile::load(path)?))
    }
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<(), CmdError> {
    match out {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(p) => write_file(p, content),
    }
}

fn write_file(path: &Path, content: &str) -> Result<(), CmdError> {
    std::fs::write(path, content)
        .map_err(|e| CmdError::Io(format!("cannot write {}: {e}", path.display())))
}

fn model_name(m: Model) -> &'static str {
    match m {
        Model::Disk => "disk",
        Model::HalfPlane => "halfplane",
    }
}

/// Print engine warnings for a single evaluated point.
fn engine_warnings(z: Complex64, v: &FridmanValue, depth: usize) {
    if !v.search.exact {
        eprintln!(
            "surfinv: warning: value at {z} is an upper bound only; \
             the depth-{depth} search did not certify the orbit minimum"
        );
    }
    if v.search.discreteness_suspect() {
        eprintln!(
            "surfinv: warning: minimal displacement {:.3e} at {z} is below 1e-8; \
             the group may fail to act properly discontinuously",
            v.search.min_displacement
        );
    }
}

// ---------------------------------------------------------------------------

fn cmd_eval(a: EvalArgs) -> Result<(), CmdError> {
    if a.format == Format::Svg {
        return Err(usage(
            "svg output needs a radial grid; use the grid or figure command",
        ));
    }
    let tol = resolve_tolerance(&a.tol)?;
    let points = args::parse_points(&a.points).map_err(CmdError::Usage)?;
    let domain = resolve_domain(&a.domain)?;
    let mut records = Vec::new();
    let mut failed = 0usize;
    for z in points {
        let result = match &domain {
            ResolvedDomain::Annulus(an) => an.sample(z, &tol).map(Record::from),
            ResolvedDomain::Punctured(pd) => pd.sample(z).map(Record::from),
            ResolvedDomain::Group(g) => g.fridman_k(z, &tol).map(|v| {
                engine_warnings(z, &v, tol.orbit_depth);
                Record::fridman_only(z, v.value)
            }),
        };
        match result {
            Ok(rec) => records.push(rec),
            Err(e) => {
                failed += 1;
                eprintln!("surfinv: point {z}: {e}");
            }
        }
    }
    if records.is_empty() {
        return Err(CmdError::Numerical(format!(
            "all {failed} points failed to evaluate"
        )));
    }
    let text = match a.format {
        Format::Csv => emit::csv(&records),
        Format::Json => emit::json(&records),
        Format::Svg => unreachable!("rejected above"),
    };
    write_output(&a.out, &text)
}

fn cmd_grid(a: GridArgs) -> Result<(), CmdError> {
    if a.n < 1 {
        return Err(usage("--n must be at least 1"));
    }
    let tol = resolve_tolerance(&a.tol)?;
    let domain = resolve_domain(&a.domain)?;
    let mut records = Vec::new();
    let mut failed = 0usize;
    let radii = match &domain {
        ResolvedDomain::Annulus(an) => {
            verify::log_grid(an.r() * (1.0 + 1e-6), 1.0 - 1e-6, a.n)
        }
        ResolvedDomain::Punctured(_) => verify::log_grid(1e-6, 1.0 - 1e-6, a.n),
        ResolvedDomain::Group(_) => {
            return Err(usage(
                "grid sampling needs a bounded domain (--r or --punctures); \
                 use eval with explicit points for a group",
            ));
        }
    };
    for x in radii {
        let z = Complex64::new(x, 0.0);
        let result = match &domain {
            ResolvedDomain::Annulus(an) => an.sample(z, &tol).map(Record::from),
            ResolvedDomain::Punctured(pd) => pd.sample(z).map(Record::from),
            ResolvedDomain::Group(_) => unreachable!("rejected above"),
        };
        match result {
            Ok(rec) => records.push(rec),
            Err(e) => {
                failed += 1;
                eprintln!("surfinv: grid point {x:.6e}: {e}");
            }
        }
    }
    if records.is_empty() {
        return Err(CmdError::Numerical(format!(
            "all {failed} grid points failed to evaluate"
        )));
    }
    let text = match a.format {
        Format::Csv => emit::csv(&records),
        Format::Json => emit::json(&records),
        Format::Svg => {
            let rows: Option<Vec<(f64, f64, f64, f64)>> = records
                .iter()
                .map(|r| Some((r.z.norm(), r.s?, r.hc?, r.hk?)))
                .collect();
            let rows = rows.ok_or_else(|| {
                usage("svg needs all three curves; this domain leaves some undefined")
            })?;
            let label = match &domain {
                ResolvedDomain::Annulus(an) => an.r(),
                _ => {
                    return Err(usage(
                        "svg output is defined for the annulus grid; use --format csv or json",
                    ))
                }
            };
            emit::figure_svg(&rows, label)
        }
    };
    write_output(&a.out, &text)
}

fn cmd_figure(a: FigureArgs) -> Result<(), CmdError> {
    if a.n < 2 {
        return Err(usage("--n must be at least 2"));
    }
    let tol = resolve_tolerance(&a.tol)?;
    let an = Annulus::new(a.r).map_err(usage)?;
    let mut rows = Vec::with_capacity(a.n);
    for x in verify::log_grid(an.r() * (1.0 + 1e-6), 1.0 - 1e-6, a.n) {
        let z = Complex64::new(x, 0.0);
        let s = an
            .sample(z, &tol)
            .map_err(|e| CmdError::Numerical(format!("at |z| = {x:.6e}: {e}")))?;
        rows.push((x, s.s, s.hc, s.hk.expect("annulus samples carry hk")));
    }
    let csv_path = a.out.with_extension("csv");
    let svg_path = a.out.with_extension("svg");
    write_file(&csv_path, &emit::figure_csv(&rows))?;
    write_file(&svg_path, &emit::figure_svg(&rows, a.r))?;
    eprintln!(
        "surfinv: wrote {} and {}",
        csv_path.display(),
        svg_path.display()
    );
    Ok(())
}

fn cmd_verify(a: VerifyArgs) -> Result<(), CmdError> {
    let tol = resolve_tolerance(&a.tol)?;
    let outcomes = verify::run(&tol, a.suite.as_deref())?;
    let mut failed = Vec::new();
    for o in &outcomes {
        println!(
            "{:<10} max-error {:<12} (eps {:.1e})  {}  — {}",
            o.name,
            format!("{:.3e}", o.max_error),
            o.threshold,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        if !o.pass {
            failed.push(o.name);
        }
    }
    println!(
        "{}/{} suites passed",
        outcomes.len() - failed.len(),
        outcomes.len()
    );
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CmdError::Numerical(format!(
            "verification failed: {}",
            failed.join(", ")
        )))
    }
}

fn cmd_fuchsian(a: FuchsianArgs) -> Result<(), CmdError> {
    if a.format == Some(Format::Svg) {
        return Err(usage(
            "svg output needs a radial grid; use the grid or figure command",
        ));
    }
    let tol = resolve_tolerance(&a.tol)?;
    let group = groupfile::load(&a.group)?;
    let points = args::parse_points(&a.points).map_err(CmdError::Usage)?;
    let mut evaluated: Vec<(Complex64, FridmanValue)> = Vec::new();
    let mut failed = 0usize;
    for z in points {
        match group.fridman_k(z, &tol) {
            Ok(v) => {
                engine_warnings(z, &v, tol.orbit_depth);
                evaluated.push((z, v));
            }
            Err(e) => {
                failed += 1;
                eprintln!("surfinv: point {z}: {e}");
            }
        }
    }
    if evaluated.is_empty() {
        return Err(CmdError::Numerical(format!(
            "all {failed} points failed to evaluate"
        )));
    }
    let text = match a.format {
        None => {
            let mut out = format!(
                "group {} — model {}, {} generator(s), search depth {}\n",
                group.label().unwrap_or("(unlabeled)"),
                model_name(group.model()),
                group.generators().len(),
                tol.orbit_depth
            );
            for (z, v) in &evaluated {
                out.push_str(&format!(
                    "z = {z}\n  fridman_k        = {}\n  min_displacement = {}\n  \
                     witness          = {}\n  exact            = {} (explored {} elements)\n",
                    emit::num(v.value),
                    emit::num(v.search.min_displacement),
                    v.search.witness,
                    v.search.exact,
                    v.search.explored
                ));
            }
            out
        }
        Some(Format::Csv) => {
            let records: Vec<Record> = evaluated
                .iter()
                .map(|(z, v)| Record::fridman_only(*z, v.value))
                .collect();
            emit::csv(&records)
        }
        Some(Format::Json) => {
            let mut out = String::from("[\n");
            for (i, (z, v)) in evaluated.iter().enumerate() {
                out.push_str(&format!(
                    "  {{\"z_re\": {}, \"z_im\": {}, \"fridman_k\": {}, \
                     \"min_displacement\": {}, \"witness\": \"{}\", \"exact\": {}, \
                     \"explored\": {}, \"discreteness_suspect\": {}}}{}\n",
                    emit::num(z.re),
                    emit::num(z.im),
                    emit::num(v.value),
                    emit::num(v.search.min_displacement),
                    v.search.witness,
                    v.search.exact,
                    v.search.explored,
                    v.search.discreteness_suspect(),
                    if i + 1 < evaluated.len() { "," } else { "" }
                ));
            }
            out.push_str("]\n");
            out
        }
        Some(Format::Svg) => unreachable!("rejected above"),
    };
    write_output(&a.out, &text)
}

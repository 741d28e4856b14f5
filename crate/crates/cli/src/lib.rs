//! `surfinv` — command-line front end for the invariants library.
//!
//! Subcommands: `eval` (explicit points), `grid` (radial sampling),
//! `figure` (the three-curve annulus chart, CSV + SVG), `verify`
//! (numerical property suites), `fuchsian` (orbit engine on a group file).
//!
//! Exit codes: 0 success, 1 usage, 2 numerical failure, 3 I/O.

use clap::Parser;

pub mod args;
pub mod commands;
pub mod emit;
pub mod groupfile;
pub mod verify;

/// Parse `argv` and run the requested command, returning the process exit
/// code. Kept out of `main` so integration tests can drive the full stack
/// in-process.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // --help/--version are successful exits; anything else is usage
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match commands::dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("surfinv: {e}");
            e.exit_code()
        }
    }
}

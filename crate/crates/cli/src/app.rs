//! Command-line front end. Exit codes: 0 all checks pass, 1 a check failed,
//! 2 usage or parse error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use cymcm_core::Formulas;

use crate::manifest::{BaseSpec, Manifest};
use crate::query::{self, JInput, QueryError};
use crate::runner::run_manifest;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "cymcm",
    version,
    about = "Exact checks for K3 surfaces and Calabi-Yau threefolds with complex multiplication"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every check of a manifest.
    Run {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run the bundled manifest of published values.
    Reproduce {
        #[arg(long)]
        json: bool,
    },
    /// Compute a single value.
    #[command(subcommand)]
    Query(QueryKind),
}

#[derive(Debug, Args)]
pub struct PointsArgs {
    /// Degree of the cyclic cover.
    #[arg(long)]
    pub m: i64,
    /// Branch points: `8x1` or `0:1,1:2,inf:1`.
    #[arg(long, allow_hyphen_values = true)]
    pub points: String,
}

#[derive(Debug, Args)]
pub struct BaseArgs {
    /// `plane`, `k3` or `ruled`.
    #[arg(long, default_value = "plane")]
    pub base: String,
    /// Degree of the ruled surface.
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, default_value_t = 0)]
    pub blowups: u32,
}

#[derive(Debug, Subcommand)]
pub enum QueryKind {
    /// Genus of a cyclic cover of the line.
    Genus(PointsArgs),
    /// Eigenspace dimensions of the holomorphic differentials.
    Eigen(PointsArgs),
    /// Fermat-cover criterion for complex multiplication.
    Cm(PointsArgs),
    /// j-invariant of an elliptic curve.
    J {
        #[arg(long, allow_hyphen_values = true, requires = "b", conflicts_with_all = ["legendre", "roots", "quartic_e"])]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "a")]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["roots", "quartic_e"])]
        legendre: Option<String>,
        /// Three comma-separated roots.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "quartic_e")]
        roots: Option<String>,
        #[arg(long)]
        quartic_e: bool,
    },
    /// Borcea-Voisin Hodge numbers.
    Bv {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Comma-separated genera of the fixed curves.
        #[arg(long, default_value = "")]
        genera: String,
    },
    /// Euler number and b2 from Noether's formula.
    Noether {
        #[arg(long, allow_hyphen_values = true)]
        k2: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        chi: i64,
    },
    /// Arithmetic genus of a divisor class by adjunction.
    Adjunction {
        #[command(flatten)]
        base: BaseArgs,
        /// Comma-separated coefficients.
        #[arg(long, allow_hyphen_values = true)]
        class: String,
    },
    /// Ledger and Hodge numbers of the order three quotient.
    Z3 {
        #[arg(long, allow_hyphen_values = true)]
        d2: i64,
        #[arg(long, allow_hyphen_values = true)]
        exceptional: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 18)]
        resolution: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        h11_curve: i64,
    },
}

fn query(kind: &QueryKind, formulas: &Formulas) -> Result<String, QueryError> {
    match kind {
        QueryKind::Genus(p) => query::genus_of(p.m, &p.points),
        QueryKind::Eigen(p) => query::eigen_of(p.m, &p.points),
        QueryKind::Cm(p) => query::cm_of(p.m, &p.points),
        QueryKind::J {
            a,
            b,
            legendre,
            roots,
            quartic_e,
        } => {
            let input = match (a, b, legendre, roots) {
                (Some(a), Some(b), _, _) => JInput::Weierstrass(a, b),
                (_, _, Some(l), _) => JInput::Legendre(l),
                (_, _, _, Some(r)) => JInput::Roots(r),
                _ if *quartic_e => JInput::QuarticE,
                _ => {
                    return Err(QueryError(
                        "give `--a`/`--b`, `--legendre`, `--roots` or `--quartic-e`".into(),
                    ))
                }
            };
            query::j_of(input, formulas)
        }
        QueryKind::Bv { n, genera } => query::bv_of(*n, genera, formulas),
        QueryKind::Noether { k2, chi } => Ok(query::noether_of(*k2, *chi, formulas)),
        QueryKind::Adjunction { base, class } => {
            let spec = BaseSpec {
                kind: base.base.clone(),
                n: base.n,
                blowups: base.blowups,
            };
            if !matches!(
                (spec.kind.as_str(), spec.n),
                ("ruled", Some(_)) | ("plane" | "k3", None)
            ) {
                return Err(QueryError(
                    "base must be `plane`, `k3`, or `ruled` with `--n`".into(),
                ));
            }
            query::adjunction_of(&spec, class)
        }
        QueryKind::Z3 {
            d2,
            exceptional,
            resolution,
            h11_curve,
        } => query::z3_of(*d2, *exceptional, *resolution, *h11_curve, formulas),
    }
}

fn run_text(
    text: &str,
    source: &str,
    json: bool,
    sections: bool,
    formulas: &Formulas,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let manifest = match Manifest::parse(text) {
        Ok(m) => m,
        Err(e) => {
            let _ = writeln!(err, "error: {source}: {e}");
            return EXIT_USAGE;
        }
    };
    let report = run_manifest(&manifest, formulas);
    let rendered = if json {
        report.to_json() + "\n"
    } else if sections {
        report.render_sections()
    } else {
        report.render_lines()
    };
    let _ = out.write_all(rendered.as_bytes());
    report.exit_code()
}

/// Parses arguments and runs the command with the given formula constants.
pub fn main_with<I, T>(
    args: I,
    formulas: &Formulas,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match &cli.command {
        Command::Run { file, json } => match std::fs::read_to_string(file) {
            Ok(text) => run_text(
                &text,
                &file.display().to_string(),
                *json,
                false,
                formulas,
                out,
                err,
            ),
            Err(e) => {
                let _ = writeln!(err, "error: {}: {e}", file.display());
                EXIT_USAGE
            }
        },
        Command::Reproduce { json } => match crate::bundled_manifest_text() {
            Ok(text) => run_text(&text, "paper.toml", *json, true, formulas, out, err),
            Err(e) => {
                let _ = writeln!(err, "error: paper.toml: {e}");
                EXIT_USAGE
            }
        },
        Command::Query(kind) => match query(kind, formulas) {
            Ok(v) => {
                let _ = writeln!(out, "{v}");
                EXIT_OK
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_USAGE
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("cymcm").chain(args.iter().copied());
        let code = main_with(argv, &Formulas::STANDARD, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn queries() {
        assert_eq!(
            run(&["query", "bv", "--n", "1", "--genera", "9"]).1,
            "h11=7 h21=55\n"
        );
        assert_eq!(run(&["query", "j", "--a", "-15", "--b", "22"]).1, "54000\n");
        assert_eq!(
            run(&["query", "genus", "--m", "6", "--points", "6x1"]).1,
            "10\n"
        );
        assert_eq!(run(&["query", "j", "--legendre", "3+2*sqrt 2"]).1, "8000\n");
        assert_eq!(
            run(&["query", "noether", "--k2", "-4"]).1,
            "euler=16 b2=14\n"
        );
        assert_eq!(
            run(&[
                "query",
                "adjunction",
                "--base",
                "ruled",
                "--n",
                "2",
                "--class",
                "4,8"
            ])
            .1,
            "9\n"
        );
        assert_eq!(
            run(&["query", "z3", "--d2", "-2", "--exceptional", "4"]).0,
            0
        );
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(&["query", "j"]).0, 2);
        assert_eq!(run(&["query", "j", "--a", "1"]).0, 2);
        assert_eq!(run(&["query", "genus", "--m", "4", "--points", "8q1"]).0, 2);
        assert_eq!(
            run(&["query", "adjunction", "--base", "ruled", "--class", "1,0"]).0,
            2
        );
        assert_eq!(run(&["frobnicate"]).0, 2);
        assert_eq!(run(&["run", "/nonexistent/manifest.toml"]).0, 2);
        assert_eq!(run(&["--help"]).0, 0);
    }
}

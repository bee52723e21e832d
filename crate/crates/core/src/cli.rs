//! Command-line front end: argument parsing and dispatch.
//!
//! Negative knot parameters: `p <= -2` names the mirror image of the knot
//! with parameter `|p| - 1` (`(2, 2p+1)` is `(2, -(2(|p|-1)+1))`), so the
//! computation runs at `|p| - 1` and `t -> t^-1` is applied to the output.
//! `p = 0` and `p = -1` are unknots and are rejected.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::aideal::{peripheral_element, AIdealGenerator};
use crate::error::{Error, Result};
use crate::jones::{kappa_table, to_colored_jones};
use crate::knot_module::{pi_element, TorusKnotParam};
use crate::oracle::{braid_bracket, colored_bracket_with, naive_state_sum, BraidWord, Chirality, FROZEN_CHIRALITY};
use crate::torus_skein::TorusSkein;
use crate::verify::{parse_p_range, run_verify, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "torus-skein", version, about = "Exact skein computations for the (2,2p+1) torus knots")]
pub struct Cli {
    /// Output format; JSON is the machine-readable contract.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct KnotArg {
    /// Knot parameter: the (2,2p+1) torus knot. p <= -2 is the mirror image
    /// of |p|-1 (outputs with t -> t^-1); 0 and -1 are rejected.
    #[arg(long, allow_negative_numbers = true)]
    pub p: i64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiply torus skeins left to right. Each factor is a curve "p,q" (write
    /// "(p,q)" when p is negative) or a JSON element
    /// {"terms": [[p, q, poly]], "scalar": poly}.
    TsMul {
        #[arg(required = true)]
        factors: Vec<String>,
    },
    /// Image of a boundary skein in the knot-complement skein module
    /// (the sum of the given curves or JSON elements).
    Pi {
        #[command(flatten)]
        knot: KnotArg,
        /// Use the peripheral element that the map kills.
        #[arg(long)]
        peripheral: bool,
        /// Curves "p,q" / "(p,q)" or JSON torus skeins, summed.
        terms: Vec<String>,
    },
    /// The A-ideal generator: peripheral element, quantum-plane polynomial and
    /// its two factors.
    Aideal {
        #[command(flatten)]
        knot: KnotArg,
    },
    /// Colored Kauffman brackets kappa_0 ..= kappa_N (0-framed).
    Kappa {
        #[command(flatten)]
        knot: KnotArg,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Emit colored Jones polynomials (t -> i t) instead.
        #[arg(long)]
        jones: bool,
    },
    /// Independent Temperley-Lieb evaluation. Either the 0-framed S_n-colored
    /// bracket of a torus knot (--p, --n; the cable may use at most
    /// MAX_TL_STRANDS = 8 strands, i.e. n <= 4) or the blackboard bracket of a
    /// braid closure (--braid, --strands; --naive sums all 2^c states and is
    /// limited to 14 crossings).
    Oracle {
        #[arg(long, allow_negative_numbers = true, required_unless_present = "braid", conflicts_with = "braid")]
        p: Option<i64>,
        #[arg(long, requires = "p")]
        n: Option<u32>,
        #[arg(long, value_enum)]
        chirality: Option<ChiralityArg>,
        #[arg(long, allow_hyphen_values = true)]
        braid: Option<String>,
        #[arg(long, requires = "braid")]
        strands: Option<usize>,
        #[arg(long, requires = "braid")]
        naive: bool,
    },
    /// Run a property suite: chebyshev-identities, product-to-sum, embedding,
    /// thm31, prop44, lemma51, prop52, recursion-vs-oracle, oracle-selfcheck, all.
    Verify {
        suite: String,
        /// Inclusive range such as 1..3.
        #[arg(long, default_value = "1..3")]
        p_range: String,
        /// Seed for the randomized suites.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ChiralityArg {
    Positive,
    Negative,
}

impl From<ChiralityArg> for Chirality {
    fn from(c: ChiralityArg) -> Self {
        match c {
            ChiralityArg::Positive => Chirality::Positive,
            ChiralityArg::Negative => Chirality::Negative,
        }
    }
}

/// A knot parameter after the negative-p rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResolvedKnot {
    pub param: TorusKnotParam,
    pub mirrored: bool,
}

pub fn resolve_p(p: i64) -> Result<ResolvedKnot> {
    match p {
        p if p >= 1 => Ok(ResolvedKnot {
            param: TorusKnotParam::new(p)?,
            mirrored: false,
        }),
        p if p <= -2 => Ok(ResolvedKnot {
            param: TorusKnotParam::new(-p - 1)?,
            mirrored: true,
        }),
        p => Err(Error::InvalidParameter(p)),
    }
}

fn parse_skein(s: &str) -> Result<TorusSkein> {
    let bad = || Error::InvalidInput(format!("expected a curve \"p,q\" or a JSON torus skein, got {s:?}"));
    if s.trim_start().starts_with('{') {
        return serde_json::from_str(s).map_err(|_| bad());
    }
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    let (a, b) = inner.split_once(',').ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    Ok(TorusSkein::basis(a, b))
}

fn emit<T: Serialize>(out: &mut dyn Write, format: Format, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    let s = match format {
        Format::Json => serde_json::to_string(value).expect("values serialize"),
        Format::Text => text(),
    };
    writeln!(out, "{s}").expect("stdout is writable");
    Ok(())
}

fn mirror_note(k: ResolvedKnot, p: i64) -> String {
    if k.mirrored {
        format!(
            "# p = {p}: mirror image of p = {}, t -> t^-1 applied\n",
            k.param.get()
        )
    } else {
        String::new()
    }
}

/// Runs a parsed command, writing to `out`; returns the exit status.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let fmt = cli.format;
    match &cli.command {
        Command::TsMul { factors } => {
            let mut acc: Option<TorusSkein> = None;
            for f in factors {
                let s = parse_skein(f)?;
                acc = Some(match acc {
                    None => s,
                    Some(a) => &a * &s,
                });
            }
            let prod = acc.unwrap_or_default();
            emit(out, fmt, &prod, || prod.to_string())?;
        }
        Command::Pi { knot, peripheral, terms } => {
            let k = resolve_p(knot.p)?;
            let mut s = TorusSkein::zero();
            if *peripheral {
                s = peripheral_element(k.param);
            }
            for term in terms {
                s = &s + &parse_skein(term)?;
            }
            let mut img = pi_element(&s, k.param)?;
            if k.mirrored {
                img = img.invert_t();
            }
            emit(out, fmt, &img, || format!("{}pi({s}) = {img}", mirror_note(k, knot.p)))?;
        }
        Command::Aideal { knot } => {
            let k = resolve_p(knot.p)?;
            let mut g = AIdealGenerator::new(k.param)?;
            if k.mirrored {
                g = AIdealGenerator {
                    p: knot.p,
                    peripheral: g.peripheral.invert_t(),
                    polynomial: g.polynomial.invert_t(),
                    factored_parts: (g.factored_parts.0.invert_t(), g.factored_parts.1.invert_t()),
                };
            }
            emit(out, fmt, &g, || {
                let rel = if k.mirrored { "l m = t^-2 m l" } else { "l m = t^2 m l" };
                format!(
                    "{}peripheral element: {}\npolynomial ({rel}): {}\nfactored: ({}) * ({})",
                    mirror_note(k, knot.p),
                    g.peripheral,
                    g.polynomial,
                    g.factored_parts.0,
                    g.factored_parts.1
                )
            })?;
        }
        Command::Kappa { knot, max_n, jones } => {
            let k = resolve_p(knot.p)?;
            let mut table = kappa_table(k.param, *max_n)?;
            if k.mirrored {
                table = table.mirrored();
            }
            let note = format!(
                "{}# 0-framed colored brackets, crossing convention {:?}\n",
                mirror_note(k, knot.p),
                FROZEN_CHIRALITY
            );
            if *jones {
                let js = to_colored_jones(&table);
                emit(out, fmt, &js, || {
                    let lines: Vec<String> = js.iter().enumerate().map(|(n, j)| format!("J_{n} = {j}")).collect();
                    format!("{note}{}", lines.join("\n"))
                })?;
            } else {
                emit(out, fmt, &table.values, || {
                    let lines: Vec<String> = table
                        .values
                        .iter()
                        .enumerate()
                        .map(|(n, v)| format!("kappa_{n} = {v}"))
                        .collect();
                    format!("{note}{}", lines.join("\n"))
                })?;
            }
        }
        Command::Oracle {
            p,
            n,
            chirality,
            braid,
            strands,
            naive,
        } => {
            if let Some(b) = braid {
                let w = match strands {
                    Some(k) => BraidWord::parse(*k, b)?,
                    None => BraidWord::parse_minimal(b)?,
                };
                let v = if *naive { naive_state_sum(&w)? } else { braid_bracket(&w)? };
                emit(out, fmt, &v, || format!("<closure of {w}> (blackboard framing) = {v}"))?;
            } else {
                let p = p.expect("clap enforces --p without --braid");
                let k = resolve_p(p)?;
                let n = n.unwrap_or(1);
                let c: Chirality = chirality.map(Into::into).unwrap_or(FROZEN_CHIRALITY);
                let mut v = colored_bracket_with(k.param, n, c)?;
                if k.mirrored {
                    v = v.invert_t();
                }
                emit(out, fmt, &v, || {
                    format!("{}kappa_{n} (framing 0, chirality {c:?}) = {v}", mirror_note(k, p))
                })?;
            }
        }
        Command::Verify { suite, p_range, seed } => {
            let suite: Suite = suite.parse()?;
            let range = parse_p_range(p_range)?;
            let reports = run_verify(suite, range, *seed)?;
            let ok = reports.iter().all(|r| r.passed());
            emit(out, fmt, &reports, || {
                reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n")
            })?;
            return Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED });
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs; errors go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                let _ = write!(err, "{e}");
            } else {
                let _ = write!(out, "{e}");
            }
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

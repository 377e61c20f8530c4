//! The `surface-braid` command line.
//!
//! ```text
//! surface-braid eval   --genus G EXPR              print the action table
//! surface-braid act    --genus G --word W EXPR     apply EXPR to a word
//! surface-braid eq     --genus G EXPR EXPR         compare two expressions
//! surface-braid verify [--suite S]... [--max-genus N] [--max-rs N]
//!                      [--max-braid-len L] [--seed S]
//! ```
//!
//! Every command takes `--format text|structured`; structured output is
//! JSON (one object, or JSON lines for `verify`). Exit status: 0 success or
//! equal, 1 not equal or a failed check, 2 usage, parse or evaluation error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::checks::{run_suite, Fault, Suite, SuiteConfig};
use crate::endo::Automorphism;
use crate::error::{Error, Result};
use crate::expr::{evaluate_any, parse_expression};
use crate::word::Word;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FaultArg {
    CorruptBeta1,
}

#[derive(Debug, Parser)]
#[command(
    name = "surface-braid",
    version,
    about = "Mapping classes of one-boundary surfaces as free group automorphisms"
)]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the images of the generators under EXPR.
    Eval {
        #[arg(long)]
        genus: usize,
        expr: String,
    },
    /// Apply EXPR to a word such as `x1 y1^-1`.
    Act {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        word: String,
        expr: String,
    },
    /// Decide whether two expressions give the same map.
    Eq {
        #[arg(long)]
        genus: usize,
        left: String,
        right: String,
    },
    /// Run the verification suite.
    Verify {
        /// Restrict to these families (repeatable); default all.
        #[arg(long = "suite")]
        suites: Vec<Suite>,
        #[arg(long, default_value_t = 6)]
        max_genus: usize,
        #[arg(long, default_value_t = 6)]
        max_rs: usize,
        #[arg(long, default_value_t = 6)]
        max_braid_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
}

fn table_json(auto: &Automorphism) -> serde_json::Value {
    let images: serde_json::Map<String, serde_json::Value> = auto
        .alphabet()
        .generators()
        .map(|g| {
            (
                g.to_string(),
                json!(auto.endo().image(g).expect("own generator").to_string()),
            )
        })
        .collect();
    json!({ "alphabet": auto.alphabet().to_string(), "images": images })
}

fn evaluate_text(text: &str, genus: usize) -> Result<Automorphism> {
    evaluate_any(&parse_expression(text)?, genus)
}

fn cmd_eval(expr: &str, genus: usize, format: Format, out: &mut dyn Write) -> Result<i32> {
    let auto = evaluate_text(expr, genus)?;
    let _ = match format {
        Format::Text => write!(out, "{}", auto.endo()),
        Format::Structured => writeln!(out, "{}", table_json(&auto)),
    };
    Ok(EXIT_OK)
}

fn cmd_act(
    expr: &str,
    word: &str,
    genus: usize,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32> {
    let auto = evaluate_text(expr, genus)?;
    let word = Word::parse(word)?;
    if !auto.alphabet().contains_word(&word) {
        return Err(Error::RankMismatch(format!(
            "word `{word}` is outside the {}",
            auto.alphabet()
        )));
    }
    let image = auto.apply(&word)?;
    let _ = match format {
        Format::Text => writeln!(out, "{image}"),
        Format::Structured => writeln!(
            out,
            "{}",
            json!({ "word": word.to_string(), "image": image.to_string() })
        ),
    };
    Ok(EXIT_OK)
}

fn cmd_eq(
    left: &str,
    right: &str,
    genus: usize,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32> {
    let (f, h) = (evaluate_text(left, genus)?, evaluate_text(right, genus)?);
    let differences = if f.alphabet() == h.alphabet() {
        f.endo().differences(h.endo())
    } else {
        Vec::new()
    };
    let equal = f.alphabet() == h.alphabet() && differences.is_empty();
    let _ = match format {
        Format::Text if equal => writeln!(out, "equal"),
        Format::Text if f.alphabet() != h.alphabet() => {
            writeln!(
                out,
                "not equal\nalphabets differ: {} vs {}",
                f.alphabet(),
                h.alphabet()
            )
        }
        Format::Text => {
            let names: Vec<String> = differences
                .iter()
                .map(|d| d.generator.to_string())
                .collect();
            writeln!(
                out,
                "not equal\nfirst difference: {}\ndiffering generators: {}",
                differences[0],
                names.join(", ")
            )
        }
        Format::Structured => {
            let diffs: Vec<_> = differences
                .iter()
                .map(|d| json!({ "generator": d.generator.to_string(), "left": d.left.to_string(), "right": d.right.to_string() }))
                .collect();
            writeln!(out, "{}", json!({ "equal": equal, "differences": diffs }))
        }
    };
    Ok(if equal { EXIT_OK } else { EXIT_FAILED })
}

fn cmd_verify(config: &SuiteConfig, format: Format, out: &mut dyn Write) -> i32 {
    let report = run_suite(config);
    let _ = match format {
        Format::Text => write!(out, "{}", report.to_text()),
        Format::Structured => write!(out, "{}", report.to_json_lines()),
    };
    if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    let outcome = match cli.command {
        Command::Eval { genus, expr } => cmd_eval(&expr, genus, cli.format, out),
        Command::Act { genus, word, expr } => cmd_act(&expr, &word, genus, cli.format, out),
        Command::Eq { genus, left, right } => cmd_eq(&left, &right, genus, cli.format, out),
        Command::Verify {
            suites,
            max_genus,
            max_rs,
            max_braid_len,
            seed,
            inject_fault,
        } => {
            let mut config = SuiteConfig {
                max_genus,
                max_rs,
                max_braid_len,
                seed,
                ..SuiteConfig::default()
            };
            if !suites.is_empty() {
                config.suites = suites;
                config.suites.sort();
                config.suites.dedup();
            }
            config.fault = inject_fault.map(|FaultArg::CorruptBeta1| Fault::CorruptBeta1);
            Ok(cmd_verify(&config, cli.format, out))
        }
    };
    outcome.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_USAGE
    })
}

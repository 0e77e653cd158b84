//! `tightcount r1 r2 r3 [--json] [--verify] [--list-chern] [--max-enum N]`
//!
//! With no coefficients on the command line, one triple per line is read
//! from standard input (blank lines and `#` comments are skipped).
//!
//! Exit codes: 0 success, 1 malformed input, 2 out of scope (`e0 < 0`),
//! 3 enumeration limit exceeded. In batch mode the largest code seen wins.

use std::ffi::OsString;
use std::io::{BufRead, Write};

use clap::error::ErrorKind;
use clap::Parser;

use crate::counting::{analyze, Options, DEFAULT_MAX_ENUM};
use crate::error::{Error, Result};
use crate::report::render;
use crate::seifert::SeifertTriple;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 1;
pub const EXIT_OUT_OF_SCOPE: i32 = 2;
pub const EXIT_ENUMERATION_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "tightcount", version, about = "Count tight contact structures on M(r1, r2, r3) with e0 >= 0")]
struct Args {
    /// Surgery coefficients `p/q` or `p`. Omit all three to read triples from stdin.
    #[arg(value_name = "R", num_args = 0..=3)]
    coeffs: Vec<String>,

    /// Emit one JSON object per triple.
    #[arg(long)]
    json: bool,

    /// Also run the sign-configuration and Chern-class enumerations.
    #[arg(long)]
    verify: bool,

    /// List the distinct Chern vectors.
    #[arg(long)]
    list_chern: bool,

    /// Largest enumeration attempted before giving up with exit code 3.
    #[arg(long, value_name = "N", default_value_t = DEFAULT_MAX_ENUM,
          value_parser = clap::value_parser!(u64).range(1..))]
    max_enum: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliConfig {
    /// `None` selects batch mode.
    pub triple: Option<SeifertTriple>,
    pub json: bool,
    pub verify: bool,
    pub list_chern: bool,
    pub max_enum: u64,
}

impl CliConfig {
    pub fn options(&self) -> Options {
        Options { verify: self.verify, list_chern: self.list_chern, max_enum: self.max_enum }
    }
}

fn config_from(args: Args) -> Result<CliConfig> {
    let triple = match args.coeffs.as_slice() {
        [] => None,
        [r1, r2, r3] => Some(SeifertTriple::new(r1.parse()?, r2.parse()?, r3.parse()?)?),
        other => return Err(Error::Parse { input: other.join(" ") }),
    };
    Ok(CliConfig {
        triple,
        json: args.json,
        verify: args.verify,
        list_chern: args.list_chern,
        max_enum: args.max_enum,
    })
}

/// Negative rationals such as `-1/2` look like short flags to clap. Move
/// every flag (and the value of `--max-enum`) to the front and put the
/// coefficients after a `--` separator.
fn protect_negative_coefficients(args: Vec<OsString>) -> Vec<OsString> {
    let is_flag = |a: &OsString| {
        a.to_str()
            .and_then(|s| s.strip_prefix('-'))
            .is_some_and(|rest| !rest.starts_with(|c: char| c.is_ascii_digit()))
    };
    let mut iter = args.into_iter();
    let mut flags: Vec<OsString> = iter.next().into_iter().collect();
    let mut positionals = Vec::new();
    while let Some(a) = iter.next() {
        if a == "--" {
            positionals.extend(iter.by_ref());
        } else if a == "--max-enum" {
            flags.push(a);
            flags.extend(iter.next());
        } else if is_flag(&a) {
            flags.push(a);
        } else {
            positionals.push(a);
        }
    }
    flags.push("--".into());
    flags.extend(positionals);
    flags
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args = protect_negative_coefficients(args.into_iter().map(Into::into).collect());
    let parsed = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    EXIT_MALFORMED
                }
            };
        }
    };
    let config = match config_from(parsed) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return e.exit_code();
        }
    };
    match &config.triple {
        Some(t) => emit(t, &config, stdout, stderr),
        None => run_batch(&config, stdin, stdout, stderr),
    }
}

fn emit(t: &SeifertTriple, config: &CliConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match analyze(t, &config.options()) {
        Ok(report) => {
            if stdout.write_all(render(&report, config.json).as_bytes()).is_err() {
                return EXIT_MALFORMED;
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {t}: {e}");
            e.exit_code()
        }
    }
}

fn run_batch(config: &CliConfig, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let mut worst = EXIT_OK;
    let mut emitted = false;
    for (lineno, line) in stdin.lines().enumerate() {
        let line = match line {
            Ok(l) => l,
            Err(e) => {
                let _ = writeln!(stderr, "error: reading stdin: {e}");
                return EXIT_MALFORMED.max(worst);
            }
        };
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let code = match body.parse::<SeifertTriple>() {
            Ok(t) => {
                // Blank line between text tables; JSON is one object per line.
                if emitted && !config.json {
                    let _ = writeln!(stdout);
                }
                emitted = true;
                emit(&t, config, stdout, stderr)
            }
            Err(e) => {
                let _ = writeln!(stderr, "error: line {}: {e}", lineno + 1);
                e.exit_code()
            }
        };
        worst = worst.max(code);
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    fn invoke(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("tightcount").chain(args.iter().copied());
        let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn negative_coefficients_are_positional() {
        let (code, out, _) = invoke(&["5/3", "1/2", "-1/3", "--json"], "");
        assert_eq!(code, 0);
        assert!(out.contains(r#""normalized":["2/3","2/3","1/2"]"#), "{out}");

        let (code, _, err) = invoke(&["-1/2", "1/2", "1/2", "--verify"], "");
        assert_eq!(code, EXIT_OUT_OF_SCOPE, "{err}");

        let (code, out, _) = invoke(&["--max-enum", "100", "-1/2", "3/2", "1/2", "--json"], "");
        assert_eq!(code, 0);
        assert!(out.contains(r#""e0":0"#), "{out}");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(invoke(&["1/2", "1/2", "1"], "").0, EXIT_MALFORMED);
        assert_eq!(invoke(&["1/2", "1/2", "x"], "").0, EXIT_MALFORMED);
        assert_eq!(invoke(&["1/2", "1/2"], "").0, EXIT_MALFORMED);
        assert_eq!(invoke(&["1/2", "1/2", "1/2", "--bogus"], "").0, EXIT_MALFORMED);
        assert_eq!(invoke(&["1/2", "1/2", "1/2", "--max-enum", "0"], "").0, EXIT_MALFORMED);
        assert_eq!(invoke(&["1/10", "1/10", "1/10", "--verify", "--max-enum", "999"], "").0, EXIT_ENUMERATION_CAP);
        assert_eq!(invoke(&["1/10", "1/10", "1/10", "--verify", "--max-enum", "1000"], "").0, EXIT_OK);
        assert_eq!(invoke(&["--help"], "").0, EXIT_OK);
    }

    #[test]
    fn text_output_without_verify() {
        let (code, out, _) = invoke(&["1/2", "1/2", "1/2"], "");
        assert_eq!(code, 0);
        assert!(out.contains("T            7"));
        assert!(!out.contains("agree"));
    }

    #[test]
    fn batch_mode_reads_stdin() {
        let input = "1/2 1/2 1/2\n# comment\n\n3/2 1/2 1/2  # trailing\n";
        let (code, out, _) = invoke(&["--json", "--verify"], input);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].contains(r#""t_formula":7"#));
        assert!(lines[1].contains(r#""t_formula":8"#));

        let (code, out, err) = invoke(&["--json"], "1/2 1/2 1/2\n-1/2 1/2 1/2\nnope\n");
        assert_eq!(code, EXIT_OUT_OF_SCOPE);
        assert_eq!(out.lines().count(), 1);
        assert!(err.contains("line 3"));
    }

    #[test]
    fn list_chern_is_sorted() {
        let (code, out, _) = invoke(&["1/2", "1/2", "1/2", "--list-chern", "--json"], "");
        assert_eq!(code, 0);
        assert!(out.contains(r#""chern_vectors":[[-2,-2],[-2,0],[0,-2],[0,0],[0,2],[2,0],[2,2]]"#), "{out}");
    }
}

//! The `wiring` command line.
//!
//! Exit codes: 0 success (and, for `check`, `tame` and `verify`, the
//! property holds); 1 the property fails or a search came up empty; 2 input
//! error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::builder::{
    combine_words, domain_file_stem, enumerate_arrow_sp, represent, CombineInputs,
};
use crate::error::Error;
use crate::limits::Limits;
use crate::order::{Domain, Label};
use crate::render::{render, Format, RenderOptions};
use crate::report::AnalysisReport;
use crate::tameness::{is_tame, straighten};
use crate::verify::{verify_classical, verify_tame_theorem};
use crate::word::{Arrangement, ArrangementWord, TrackOrder};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "wiring",
    version,
    about = "Wiring-diagram words, their flag domains, and Condorcet classifiers"
)]
pub struct Cli {
    /// Lift the desk-scale size guards.
    #[arg(long, global = true)]
    unsafe_limits: bool,
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Emit::Text)]
    emit: Emit,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct WordArgs {
    /// Word tokens such as `s1 s2 s1`; may also be given as one quoted argument.
    word: Vec<String>,
    /// Number of lines.
    #[arg(long)]
    n: Option<usize>,
    /// Left boundary column, top first (default 1..n).
    #[arg(long)]
    left: Option<String>,
}

impl WordArgs {
    fn arrangement(&self) -> Result<Arrangement, Error> {
        let n = self
            .n
            .ok_or_else(|| Error::Input("--n is required with a word".into()))?;
        let word = ArrangementWord::parse(&self.word.join(" "), n)?;
        match &self.left {
            Some(l) => Arrangement::new(word, TrackOrder::parse(l)?),
            None => Ok(Arrangement::with_identity(word)),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the sorted domain of a word.
    Domain {
        #[command(flatten)]
        word: WordArgs,
        /// Also print the chamber-set ideal, grouped by cardinality.
        #[arg(long)]
        ideal: bool,
    },
    /// Classify a word's domain or a domain file.
    Check {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long)]
        domain: Option<PathBuf>,
    },
    /// Tameness verdict with witnesses.
    Tame {
        #[command(flatten)]
        word: WordArgs,
        /// Print a straightened word with the same domain.
        #[arg(long)]
        straighten: bool,
    },
    /// Find a word for a maximal Arrow's single-peaked domain.
    Represent {
        #[arg(long)]
        domain: PathBuf,
    },
    /// Glue two blocks on n-1 tracks into one word on n tracks.
    Combine {
        #[arg(long, allow_hyphen_values = true)]
        wa: String,
        #[arg(long, allow_hyphen_values = true)]
        wb: String,
        #[arg(long)]
        t: Label,
        #[arg(long)]
        tprime: Label,
        /// Line count of the combined arrangement.
        #[arg(long)]
        n: usize,
        /// Left column of the first block (default 1..n without tprime).
        #[arg(long)]
        left_a: Option<String>,
        /// Left column of the second block (default derived from the first).
        #[arg(long)]
        left_b: Option<String>,
    },
    /// Enumerate maximal Arrow's single-peaked domains into domain files.
    Enumerate {
        #[arg(long, required = true)]
        arrow_sp: bool,
        #[arg(long)]
        n: usize,
        /// Output directory (default ./arrow-sp-n<N>).
        #[arg(long)]
        seed_dir: Option<PathBuf>,
    },
    /// Run an exhaustive verification harness.
    Verify {
        #[arg(
            long,
            conflicts_with = "classical",
            required_unless_present = "classical"
        )]
        tame_theorem: bool,
        #[arg(long)]
        classical: bool,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Draw a wiring diagram.
    Render {
        #[command(flatten)]
        word: WordArgs,
        /// Defaults to svg when --output ends in .svg, ascii otherwise.
        #[arg(long, value_enum)]
        format: Option<RenderFormat>,
        #[arg(long, default_value_t = 30)]
        track_gap: u32,
        #[arg(long, default_value_t = 30)]
        event_gap: u32,
        #[arg(long)]
        no_chamber_labels: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderFormat {
    Ascii,
    Svg,
}

fn read_domain(path: &Path) -> Result<Domain, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    Domain::parse(&text)
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Search(_) => EXIT_FAILS,
                _ => EXIT_INPUT,
            }
        }
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Error> {
    out.write_all(text.as_bytes())
        .map_err(|e| Error::Input(format!("cannot write output: {e}")))
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    let limits = if cli.unsafe_limits {
        Limits::unbounded()
    } else {
        Limits::default()
    };
    let as_json = cli.emit == Emit::Json;
    match &cli.command {
        Command::Domain { word, ideal } => {
            let arr = word.arrangement()?;
            let chambers = arr.chamber_sets();
            if as_json {
                #[derive(Serialize)]
                struct DomainOut {
                    word: String,
                    left: String,
                    domain: Vec<String>,
                    chamber_sets: Vec<String>,
                }
                write_out(
                    out,
                    &json(&DomainOut {
                        word: arr.word().to_string(),
                        left: arr.left().to_string(),
                        domain: chambers.domain().to_lines(),
                        chamber_sets: chambers.set_strings(),
                    }),
                )?;
            } else {
                write_out(out, &chambers.domain().to_file_string())?;
                if *ideal {
                    write_out(out, &chambers.dump())?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Check { word, domain } => {
            let report = match (domain, word.word.is_empty() && word.n.is_none()) {
                (Some(_), false) => {
                    return Err(Error::Input(
                        "give either a word or --domain, not both".into(),
                    ))
                }
                (Some(path), true) => AnalysisReport::for_domain(&read_domain(path)?, &limits)?,
                (None, _) => AnalysisReport::for_arrangement(&word.arrangement()?, &limits)?,
            };
            write_out(
                out,
                &if as_json {
                    report.to_json() + "\n"
                } else {
                    report.to_text()
                },
            )?;
            Ok(if report.condorcet {
                EXIT_OK
            } else {
                EXIT_FAILS
            })
        }
        Command::Tame {
            word,
            straighten: st,
        } => {
            let arr = word.arrangement()?;
            let verdict = is_tame(&arr);
            let straightened = if *st && verdict.tame {
                Some(straighten(&arr)?.word().to_string())
            } else {
                None
            };
            if as_json {
                #[derive(Serialize)]
                struct TameOut<'a> {
                    word: String,
                    #[serde(flatten)]
                    verdict: &'a crate::tameness::TamenessVerdict,
                    straightened: Option<String>,
                }
                write_out(
                    out,
                    &json(&TameOut {
                        word: arr.word().to_string(),
                        verdict: &verdict,
                        straightened,
                    }),
                )?;
            } else {
                let mut text = format!("tame: {}\n", if verdict.tame { "yes" } else { "no" });
                for w in &verdict.witnesses {
                    let levels: Vec<String> = w.levels.iter().map(|l| l.to_string()).collect();
                    let above: Vec<&str> = w
                        .lines_above
                        .iter()
                        .map(|s| if s.is_empty() { "∅" } else { s.as_str() })
                        .collect();
                    text += &format!(
                        "pair {} {} crosses at levels {} below lines {}\n",
                        w.pair.0,
                        w.pair.1,
                        levels.join(","),
                        above.join(",")
                    );
                }
                if let Some(s) = straightened {
                    text += &format!("straightened: {s}\n");
                }
                write_out(out, &text)?;
            }
            Ok(if verdict.tame { EXIT_OK } else { EXIT_FAILS })
        }
        Command::Represent { domain } => {
            let d = read_domain(domain)?;
            let rep = represent(&d, &limits)?;
            let arr = &rep.arrangement;
            if as_json {
                #[derive(Serialize)]
                struct RepOut {
                    word: String,
                    left: String,
                    path: crate::builder::RepresentPath,
                }
                write_out(
                    out,
                    &json(&RepOut {
                        word: arr.word().to_string(),
                        left: arr.left().to_string(),
                        path: rep.path,
                    }),
                )?;
            } else {
                write_out(out, &format!("{}\n{}\n", arr.word(), arr.left()))?;
                let _ = writeln!(err, "path: {:?}", rep.path);
            }
            Ok(EXIT_OK)
        }
        Command::Combine {
            wa,
            wb,
            t,
            tprime,
            n,
            left_a,
            left_b,
        } => {
            if *n < 2 {
                return Err(Error::Input(
                    "combined line count must be at least 2".into(),
                ));
            }
            let left_a = match left_a {
                Some(l) => TrackOrder::parse(l)?,
                None => TrackOrder::new((1..=*n as Label).filter(|a| a != tprime).collect())?,
            };
            let w_a = ArrangementWord::parse(wa, n - 1)?;
            let w_b = ArrangementWord::parse(wb, n - 1)?;
            let left_b = match left_b {
                Some(l) => TrackOrder::parse(l)?,
                None => CombineInputs::expected_left_b(&w_a, &left_a, *tprime)?,
            };
            let arr = combine_words(&CombineInputs {
                w_a,
                left_a,
                w_b,
                left_b,
                t: *t,
                t_prime: *tprime,
            })?;
            if as_json {
                #[derive(Serialize)]
                struct CombOut {
                    word: String,
                    left: String,
                    domain: Vec<String>,
                }
                write_out(
                    out,
                    &json(&CombOut {
                        word: arr.word().to_string(),
                        left: arr.left().to_string(),
                        domain: arr.domain().to_lines(),
                    }),
                )?;
            } else {
                write_out(out, &format!("{}\n{}\n", arr.word(), arr.left()))?;
            }
            Ok(EXIT_OK)
        }
        Command::Enumerate { n, seed_dir, .. } => {
            let domains = enumerate_arrow_sp(*n, &limits)?;
            let dir = seed_dir
                .clone()
                .unwrap_or_else(|| PathBuf::from(format!("arrow-sp-n{n}")));
            fs::create_dir_all(&dir)
                .map_err(|e| Error::Input(format!("cannot create {}: {e}", dir.display())))?;
            let mut files = Vec::new();
            for d in &domains {
                let path = dir.join(format!("{}.txt", domain_file_stem(d)));
                fs::write(&path, d.to_file_string())
                    .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))?;
                files.push(path.display().to_string());
            }
            if as_json {
                #[derive(Serialize)]
                struct EnumOut {
                    n: usize,
                    count: usize,
                    files: Vec<String>,
                    domains: Vec<Vec<String>>,
                }
                write_out(
                    out,
                    &json(&EnumOut {
                        n: *n,
                        count: domains.len(),
                        files,
                        domains: domains.iter().map(Domain::to_lines).collect(),
                    }),
                )?;
            } else {
                let mut text = String::new();
                for f in files {
                    text += &f;
                    text.push('\n');
                }
                write_out(out, &text)?;
                let _ = writeln!(
                    err,
                    "{} domains written to {}",
                    domains.len(),
                    dir.display()
                );
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            tame_theorem,
            n,
            max_len,
            workers,
            ..
        } => {
            if *tame_theorem {
                let report = verify_tame_theorem(*n, *max_len, &limits, *workers)?;
                if as_json {
                    write_out(out, &json(&report))?;
                } else {
                    let mut text = format!(
                        "tame-theorem n={} max_len={}\nwords_checked: {}\nagreements: {}\ntame_words: {}\ncounterexamples: {}\n",
                        report.n,
                        report.max_len,
                        report.words_checked,
                        report.agreements,
                        report.tame_words,
                        report.counterexamples.len()
                    );
                    for c in &report.counterexamples {
                        text += &format!(
                            "  {} tame={} condorcet={} peak_pit={}\n",
                            c.word, c.tame, c.condorcet, c.peak_pit
                        );
                    }
                    write_out(out, &text)?;
                }
                Ok(if report.is_clean() {
                    EXIT_OK
                } else {
                    EXIT_FAILS
                })
            } else {
                let report = verify_classical(*n, &limits, *workers)?;
                if as_json {
                    write_out(out, &json(&report))?;
                } else {
                    let mut text = format!(
                        "classical n={}\nclassical_words: {}\ncounterexamples: {}\n",
                        report.n,
                        report.classical_words.len(),
                        report.counterexamples.len()
                    );
                    for c in &report.counterexamples {
                        text += &format!("  {c:?}\n");
                    }
                    write_out(out, &text)?;
                }
                Ok(if report.is_clean() {
                    EXIT_OK
                } else {
                    EXIT_FAILS
                })
            }
        }
        Command::Render {
            word,
            format,
            track_gap,
            event_gap,
            no_chamber_labels,
            output,
        } => {
            if *track_gap == 0 || *event_gap == 0 {
                return Err(Error::Input("gaps must be positive".into()));
            }
            let arr = word.arrangement()?;
            let opt = RenderOptions {
                format: match format {
                    Some(RenderFormat::Ascii) => Format::Ascii,
                    Some(RenderFormat::Svg) => Format::Svg,
                    None if output
                        .as_ref()
                        .is_some_and(|p| p.extension().is_some_and(|e| e == "svg")) =>
                    {
                        Format::Svg
                    }
                    None => Format::Ascii,
                },
                track_gap: *track_gap,
                event_gap: *event_gap,
                show_chamber_labels: !no_chamber_labels,
            };
            let text = render(&arr, &opt);
            match output {
                Some(path) => fs::write(path, text)
                    .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))?,
                None => write_out(out, &text)?,
            }
            Ok(EXIT_OK)
        }
    }
}

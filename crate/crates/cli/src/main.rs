//! `partpat`: count pattern-avoiding set partitions and fillings, classify
//! patterns, and run the bijections.

mod bijection;
mod cache;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use partpat::enumeration::{classify, count_table, witness};
use partpat::fillings::{count_fillings, ferrers_equiv_upto, stack_equiv_upto, FillMode, Matrix01, Shape, ShapeKind};
use partpat::seqcore::{format_symbols, parse_symbols};
use serde_json::json;

#[derive(Parser)]
#[command(name = "partpat", version, about = "Pattern avoidance in set partitions")]
struct Cli {
    /// Worker threads; defaults to the number of CPUs. Results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Neither read nor write the count cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Number of partitions of [n] avoiding a pattern.
    Count {
        pattern: String,
        /// A single n, or a range `a..b` (inclusive).
        #[arg(long, default_value = "0..10")]
        n: String,
        /// Split each count by number of blocks.
        #[arg(long)]
        by_blocks: bool,
    },
    /// Group all patterns of one size by their counts.
    Classify {
        size: usize,
        /// Largest n compared.
        #[arg(long, default_value_t = 11)]
        horizon: usize,
    },
    /// Least n at which two patterns have different counts. Exit 1 if none.
    Witness {
        a: String,
        b: String,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
    /// 0-1 fillings of Ferrers shapes and stack polyominoes.
    Fillings {
        #[command(subcommand)]
        cmd: FillCmd,
    },
    /// Apply one of the bijections to an input and check the round trip.
    Bijection(bijection::BijectionArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Ferrers,
    Stack,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Semi,
    Sparse,
}

#[derive(Args)]
struct MatrixArg {
    /// The avoided matrix as a sequence: column j has its 1 in row s_j.
    #[arg(long)]
    avoid: String,
    /// Number of rows of the avoided matrix.
    #[arg(long)]
    k: u8,
}

#[derive(Subcommand)]
enum FillCmd {
    /// Fillings of one shape avoiding a matrix.
    Count {
        /// Column heights, e.g. 2,4,4,4,4,4.
        #[arg(long)]
        shape: String,
        #[command(flatten)]
        m: MatrixArg,
        #[arg(long, value_enum, default_value_t = Kind::Ferrers)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Mode::Semi)]
        mode: Mode,
    },
    /// Compare two matrices on every small shape. Exit 1 if some shape differs.
    Equiv {
        #[command(flatten)]
        m: MatrixArg,
        /// The second matrix, with the same row count.
        #[arg(long)]
        other: String,
        #[arg(long, default_value_t = 5)]
        max_columns: usize,
        #[arg(long, default_value_t = 4)]
        max_rows: u8,
        #[arg(long, value_enum, default_value_t = Kind::Ferrers)]
        kind: Kind,
    },
}

/// What went wrong, and which exit code it maps to.
pub enum Failure {
    /// Answer is "no": exit 1.
    Negative(String),
    Lib(partpat::Error),
    Usage(String),
}

impl From<partpat::Error> for Failure {
    fn from(e: partpat::Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<String, Failure>;

fn parse_range(text: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Usage(format!("bad n or range `{text}`"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(text)?, num(text)?),
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn load_cache(enabled: bool) -> Option<(std::path::PathBuf, cache::CacheFile)> {
    if !enabled {
        return None;
    }
    let path = cache::default_path()?;
    match cache::load(&path) {
        Ok(c) => Some((path, c)),
        Err(e) => {
            eprintln!("partpat: ignoring cache: {e}");
            None
        }
    }
}

fn cmd_count(cli: &Cli, pattern: &str, n: &str, by_blocks: bool) -> Outcome {
    let pat = parse_symbols(pattern)?;
    let pat = partpat::Partition::new(pat)?.into_vec();
    let (lo, hi) = parse_range(n)?;
    let mut cache = load_cache(!cli.no_cache);
    let hit = cache.as_ref().and_then(|(_, c)| {
        let counts = c.counts(&pat, hi)?.to_vec();
        let blocks = if by_blocks { Some(c.by_blocks(&pat, hi)?.to_vec()) } else { None };
        Some((counts, blocks))
    });
    let (counts, blocks) = match hit {
        Some(h) => h,
        None => {
            let t = count_table(&pat, hi, by_blocks)?;
            if let Some((path, c)) = cache.as_mut() {
                c.store(&pat, &t.counts, t.by_blocks.as_deref());
                if let Err(e) = cache::save(path, c) {
                    eprintln!("partpat: cache not written: {e}");
                }
            }
            (t.counts, t.by_blocks)
        }
    };
    let blocks: Option<Vec<Vec<u64>>> =
        blocks.map(|b| b.into_iter().enumerate().map(|(n, r)| r[..=n].to_vec()).collect());
    let name = format_symbols(&pat);
    Ok(match cli.format {
        Format::Json => {
            let rows: Vec<_> = (lo..=hi)
                .map(|n| match &blocks {
                    Some(b) => json!({"n": n, "count": counts[n], "by_blocks": b[n]}),
                    None => json!({"n": n, "count": counts[n]}),
                })
                .collect();
            json!({"pattern": name, "rows": rows}).to_string()
        }
        Format::Csv => {
            let mut out = String::from(if blocks.is_some() { "n,blocks,count" } else { "n,count" });
            for n in lo..=hi {
                match &blocks {
                    Some(b) => {
                        for (m, v) in b[n].iter().enumerate() {
                            out.push_str(&format!("\n{n},{m},{v}"));
                        }
                    }
                    None => out.push_str(&format!("\n{n},{}", counts[n])),
                }
            }
            out
        }
        Format::Text if lo == hi && blocks.is_none() => counts[lo].to_string(),
        Format::Text => (lo..=hi)
            .map(|n| match &blocks {
                Some(b) => format!("{n}: {} {:?}", counts[n], b[n]),
                None => format!("{n}: {}", counts[n]),
            })
            .collect::<Vec<_>>()
            .join("\n"),
    })
}

fn cmd_classify(cli: &Cli, size: usize, horizon: usize) -> Outcome {
    let r = classify(size, horizon)?;
    let members = |c: &partpat::enumeration::PatternClass| -> Vec<String> {
        c.members.iter().map(|p| p.to_string()).collect()
    };
    Ok(match cli.format {
        Format::Json => {
            let rows: Vec<_> =
                r.classes.iter().map(|c| json!({"members": members(c), "counts": c.counts})).collect();
            json!({"size": size, "horizon": horizon, "classes": r.classes.len(), "rows": rows}).to_string()
        }
        Format::Csv => {
            let mut out = format!("classes,{}\nmembers,counts", r.classes.len());
            for c in &r.classes {
                let counts: Vec<String> = c.counts.iter().map(u64::to_string).collect();
                out.push_str(&format!("\n{},{}", members(c).join(" "), counts.join(" ")));
            }
            out
        }
        Format::Text => {
            let n = r.classes.len();
            let mut out = format!("{n} class{}", if n == 1 { "" } else { "es" });
            for c in &r.classes {
                let counts: Vec<String> = c.counts.iter().map(u64::to_string).collect();
                out.push_str(&format!("\n{}: {}", members(c).join(", "), counts.join(", ")));
            }
            out
        }
    })
}

fn cmd_witness(cli: &Cli, a: &str, b: &str, max_n: usize) -> Outcome {
    let pa = partpat::Partition::new(parse_symbols(a)?)?;
    let pb = partpat::Partition::new(parse_symbols(b)?)?;
    let w = witness(&pa, &pb, max_n)?;
    let text = match cli.format {
        Format::Json => json!({"a": pa.to_string(), "b": pb.to_string(), "max_n": max_n, "witness": w}).to_string(),
        Format::Csv => format!("a,b,max_n,witness\n{pa},{pb},{max_n},{}", w.map_or(String::new(), |n| n.to_string())),
        Format::Text => w.map_or_else(|| format!("none up to {max_n}"), |n| n.to_string()),
    };
    match w {
        Some(_) => Ok(text),
        None => Err(Failure::Negative(text)),
    }
}

fn matrix(seq: &str, k: u8) -> Result<Matrix01, Failure> {
    Ok(Matrix01::of_sequence(&parse_symbols(seq)?, k)?)
}

fn cmd_fillings(cli: &Cli, cmd: &FillCmd) -> Outcome {
    match cmd {
        FillCmd::Count { shape, m, kind, mode } => {
            let kind = match kind {
                Kind::Ferrers => ShapeKind::Ferrers,
                Kind::Stack => ShapeKind::Stack,
            };
            let mode = match mode {
                Mode::Semi => FillMode::SemiStandard,
                Mode::Sparse => FillMode::Sparse,
            };
            let s = Shape::parse(shape, kind)?;
            let n = count_fillings(&s, &matrix(&m.avoid, m.k)?, mode)?;
            Ok(match cli.format {
                Format::Json => json!({"shape": s.heights(), "avoid": m.avoid, "k": m.k, "count": n}).to_string(),
                Format::Csv => format!("shape,avoid,k,count\n{shape},{},{},{n}", m.avoid, m.k),
                Format::Text => n.to_string(),
            })
        }
        FillCmd::Equiv { m, other, max_columns, max_rows, kind } => {
            let a = matrix(&m.avoid, m.k)?;
            let b = matrix(other, m.k)?;
            let r = match kind {
                Kind::Ferrers => ferrers_equiv_upto(&a, &b, *max_columns, *max_rows)?,
                Kind::Stack => stack_equiv_upto(&a, &b, *max_columns, *max_rows)?,
            };
            let v = r.violation.as_ref();
            let text = match cli.format {
                Format::Json => json!({
                    "shapes_checked": r.shapes_checked,
                    "equivalent": v.is_none(),
                    "violation": v.map(|(s, x, y)| json!({"shape": s.heights(), "counts": [x, y]})),
                })
                .to_string(),
                Format::Csv => match v {
                    None => format!("shapes_checked,equivalent\n{},true", r.shapes_checked),
                    Some((s, x, y)) => format!(
                        "shapes_checked,equivalent,shape,count_a,count_b\n{},false,{},{x},{y}",
                        r.shapes_checked,
                        format_heights(s.heights())
                    ),
                },
                Format::Text => match v {
                    None => format!("equivalent on {} shapes", r.shapes_checked),
                    Some((s, x, y)) => format!("differ on shape {}: {x} vs {y}", format_heights(s.heights())),
                },
            };
            match v {
                None => Ok(text),
                Some(_) => Err(Failure::Negative(text)),
            }
        }
    }
}

fn format_heights(h: &[u8]) -> String {
    h.iter().map(u8::to_string).collect::<Vec<_>>().join(" ")
}

fn run(cli: &Cli) -> Outcome {
    match &cli.cmd {
        Cmd::Count { pattern, n, by_blocks } => cmd_count(cli, pattern, n, *by_blocks),
        Cmd::Classify { size, horizon } => cmd_classify(cli, *size, *horizon),
        Cmd::Witness { a, b, max_n } => cmd_witness(cli, a, b, *max_n),
        Cmd::Fillings { cmd } => cmd_fillings(cli, cmd),
        Cmd::Bijection(args) => bijection::run(args, cli.format == Format::Json),
    }
}

fn exit_code(f: &Failure) -> u8 {
    match f {
        Failure::Negative(_) => 1,
        Failure::Usage(_) => 2,
        Failure::Lib(partpat::Error::Overflow(_)) => 3,
        Failure::Lib(_) => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("partpat: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Negative(text) => println!("{text}"),
                Failure::Usage(msg) => eprintln!("partpat: {msg}"),
                Failure::Lib(e) => eprintln!("partpat: {e}"),
            }
            ExitCode::from(exit_code(&f))
        }
    }
}

//! `subshift` — generate construction windows, compute complexity profiles,
//! analyse windows, verify attached bounds and run codec round-trips.
//!
//! Exit codes: 0 success, 1 bound violation or round-trip mismatch,
//! 2 invalid input, 3 resource or budget exhausted.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use subshift::analysis::{analyze_window, realize, verify_spec};
use subshift::codec::{decode, encode};
use subshift::constructions::{ConstructionKind, ConstructionSpec, Extent};
use subshift::sturmian::mechanical_window;
use subshift::{ComplexityProfile, Error, FactorIndex, SequenceWindow};

#[derive(Parser)]
#[command(name = "subshift", version, about = "Factor complexity of symbolic sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Text,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Window file
    #[arg(long)]
    window: Option<PathBuf>,
    /// Construction spec file
    #[arg(long)]
    spec: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Write the windows a spec realises (`F`, or `F.1`, `F.2`, … for several).
    Generate {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: Option<u64>,
    },
    /// Complexity profile as `n,c_n,diff` CSV.
    Complexity {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: Option<u64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Periodicity, first-difference and entropy report for one window.
    Analyze {
        #[arg(long)]
        window: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        #[arg(long)]
        report: PathBuf,
    },
    /// Check a construction's bounds; margin tables go to stdout.
    Verify {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: Option<u64>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Encode bits over a Sturmian source and decode them back.
    Roundtrip {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        bits: String,
        /// Also write the encoded word as a window file with base 0.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Outcome {
    Ok,
    Failed(String),
}

fn with_path<T>(path: &Path, r: Result<T, Error>) -> Result<T, Error> {
    r.map_err(|e| match e {
        Error::Io(io) => Error::InvalidArgument(format!("{}: {io}", path.display())),
        e => e,
    })
}

fn write(path: &Path, text: &str) -> Result<(), Error> {
    with_path(path, fs::write(path, text).map_err(Error::from))
}

fn read_spec(path: &Path) -> Result<ConstructionSpec, Error> {
    with_path(path, ConstructionSpec::read(path))
}

fn read_window(path: &Path) -> Result<SequenceWindow, Error> {
    with_path(path, SequenceWindow::read(path))
}

fn write_window(w: &SequenceWindow, path: &Path) -> Result<(), Error> {
    with_path(path, w.write(path))
}

fn numbered(path: &Path, i: usize) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(format!(".{i}"));
    PathBuf::from(s)
}

fn run(cmd: Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Generate { spec, out, n_max } => {
            let r = realize(&read_spec(&spec)?, n_max.map(|n| n as usize))?;
            if let [w] = r.windows.as_slice() {
                write_window(w, &out)?;
            } else {
                for (i, w) in r.windows.iter().enumerate() {
                    write_window(w, &numbered(&out, i + 1))?;
                }
            }
        }
        Command::Complexity { input, n_max, out } => {
            let n_max = n_max.map(|n| n as usize);
            let profile = match (input.window, input.spec) {
                (Some(w), _) => {
                    let w = read_window(&w)?;
                    let n = n_max.ok_or_else(|| Error::InvalidArgument("--n-max is required with --window".into()))?;
                    ComplexityProfile::from_index(&FactorIndex::build(&w, n)?, n)?
                }
                (None, Some(s)) => realize(&read_spec(&s)?, n_max)?.profile,
                (None, None) => unreachable!("clap enforces one input"),
            };
            write(&out, &profile.to_csv())?;
        }
        Command::Analyze { window, n_max, report } => {
            let a = analyze_window(&read_window(&window)?, n_max as usize)?;
            write(&report, &a.to_text())?;
        }
        Command::Verify { spec, n_max, format } => {
            let v = verify_spec(&read_spec(&spec)?, n_max.map(|n| n as usize))?;
            print!(
                "{}",
                match format {
                    Format::Csv => v.to_csv(),
                    Format::Text => v.to_text(),
                }
            );
            if !v.passed() {
                let failed: Vec<_> = v.reports.iter().filter(|r| !r.passed).map(|r| r.check.as_str()).collect();
                let structural: Vec<_> = v.realization.structural.iter().filter(|(_, ok)| !ok).map(|(s, _)| s.as_str()).collect();
                return Ok(Outcome::Failed(format!("failed: {}", [failed, structural].concat().join("; "))));
            }
        }
        Command::Roundtrip { spec, bits, out } => {
            let spec = read_spec(&spec)?;
            if spec.kind != ConstructionKind::SturmianUnion {
                return Err(Error::InvalidArgument(format!("roundtrip needs a sturmian source spec, got {}", spec.kind)));
            }
            let bits = bits
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(Error::InvalidArgument(format!("bits must be 0/1, got {c:?}"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            let (lo, hi) = match spec.extent {
                None => (-5000, 5000),
                Some(Extent::Range(lo, hi)) => (lo, hi),
                Some(Extent::Count(c)) => (-(c as i64) / 2, c as i64 - c as i64 / 2),
            };
            let params = spec.mechanical()?;
            let source = mechanical_window(&params[0], lo, hi)?;
            let word = encode(&source, &bits)?;
            if let Some(out) = out {
                write_window(&SequenceWindow::new(source.alphabet().clone(), 0, word.to_vec(), None)?, &out)?;
            }
            match decode(&word, source.alphabet(), bits.len()) {
                Ok(back) if back == bits => println!("ok: {} bits, encoded length {}", bits.len(), word.len()),
                Ok(back) => {
                    let s: String = back.iter().map(|&b| if b { '1' } else { '0' }).collect();
                    return Ok(Outcome::Failed(format!("mismatch: decoded {s}")));
                }
                Err(e) => return Ok(Outcome::Failed(format!("decode failed: {e}"))),
            }
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed(msg)) => {
            eprintln!("subshift: {msg}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("subshift: {e}");
            ExitCode::from(if e.is_resource() { 3 } else { 2 })
        }
    }
}

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use cbwt::locator::{default_rate, locate};
use cbwt::oracle::{brute_index, ORACLE_LIMIT};
use cbwt::{attach_samples, build_collection, extend_with_text, serial, CbwtIndex, SampleStore, TextCollection};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "cbwt", version, about = "Cartesian tree matching index over circular texts")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Index every line of INPUT as one circular text.
    Build {
        input: PathBuf,
        output: PathBuf,
        #[arg(long)]
        sample_rate: Option<usize>,
        /// Treat each byte of a line as one symbol.
        #[arg(long)]
        chars: bool,
    },
    /// Print the number of matching conjugates.
    Count {
        index: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        pattern: String,
        #[arg(long)]
        chars: bool,
    },
    /// Print `text:offset` for each matching conjugate.
    Locate {
        index: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        pattern: String,
        #[arg(long)]
        chars: bool,
    },
    /// Add one text to an existing index file.
    Add {
        index: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        text: String,
        #[arg(long)]
        chars: bool,
    },
    /// Compare an index file with a brute-force rebuild of SOURCE.
    Verify {
        index: PathBuf,
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        chars: bool,
    },
}

/// Failure with the process exit code it maps to.
struct Failure {
    code: u8,
    err: anyhow::Error,
}

const MISMATCH: u8 = 1;
const PARSE: u8 = 2;
const IO: u8 = 3;
const LIMIT: u8 = 4;

fn fail(code: u8, err: anyhow::Error) -> Failure {
    Failure { code, err }
}

fn parse_tokens(line: &str, chars: bool, line_no: usize) -> Result<Vec<u32>, Failure> {
    if chars {
        return Ok(line.bytes().map(u32::from).collect());
    }
    let mut out = Vec::new();
    let mut col = 0;
    for piece in line.split(|c: char| c.is_whitespace()) {
        if !piece.is_empty() {
            let v: u32 = piece
                .parse()
                .ok()
                .filter(|&v: &u32| v <= i32::MAX as u32)
                .ok_or_else(|| fail(PARSE, anyhow!("line {line_no}, column {}: bad token {piece:?}", col + 1)))?;
            out.push(v);
        }
        col += piece.chars().count() + 1;
    }
    Ok(out)
}

fn read_texts(path: &Path, chars: bool) -> Result<Vec<Vec<u32>>, Failure> {
    let src = fs::read_to_string(path).with_context(|| format!("reading {}", path.display())).map_err(|e| fail(IO, e))?;
    let mut texts = Vec::new();
    for (k, line) in src.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        texts.push(parse_tokens(line, chars, k + 1)?);
    }
    if texts.is_empty() {
        return Err(fail(PARSE, anyhow!("no texts in {}", path.display())));
    }
    Ok(texts)
}

fn load(path: &Path) -> Result<(CbwtIndex, SampleStore), Failure> {
    let src = fs::read_to_string(path).with_context(|| format!("reading {}", path.display())).map_err(|e| fail(IO, e))?;
    serial::from_str(&src).with_context(|| format!("loading {}", path.display())).map_err(|e| fail(PARSE, e))
}

fn save(path: &Path, index: &CbwtIndex, store: &SampleStore) -> Result<(), Failure> {
    fs::write(path, serial::to_string(index, store))
        .with_context(|| format!("writing {}", path.display()))
        .map_err(|e| fail(IO, e))
}

fn lib_err(e: cbwt::Error) -> Failure {
    fail(PARSE, e.into())
}

fn verify(index: &CbwtIndex, store: &SampleStore, texts: Vec<Vec<u32>>) -> Result<(), Failure> {
    let n: usize = texts.iter().map(Vec::len).sum();
    if n > ORACLE_LIMIT {
        return Err(fail(LIMIT, anyhow!("n={n} too large for oracle verification (limit {ORACLE_LIMIT})")));
    }
    let mut meta: Vec<(usize, usize)> = index.texts().iter().map(|t| (t.id, t.len)).collect();
    meta.sort_unstable();
    let expected: Vec<(usize, usize)> = texts.iter().enumerate().map(|(k, t)| (k + 1, t.len())).collect();
    if meta != expected {
        return Err(fail(MISMATCH, anyhow!("text ids or lengths differ from the source")));
    }
    let tc = TextCollection::new(texts).map_err(lib_err)?;
    let brute = brute_index(&tc).map_err(lib_err)?;
    let lcp: Vec<String> = brute.lcp.iter().map(usize::to_string).collect();
    let columns: [(&str, Vec<String>, Vec<String>); 3] = [
        ("FT", brute.ft.iter().map(|s| s.to_string()).collect(), index.ft().iter().map(|s| s.to_string()).collect()),
        ("LT", brute.lt.iter().map(|s| s.to_string()).collect(), index.lt().iter().map(|s| s.to_string()).collect()),
        ("LCP", lcp, index.lcp().iter().map(usize::to_string).collect()),
    ];
    for (name, want, got) in columns {
        if let Some(i) = (0..want.len()).find(|&i| want[i] != got[i]) {
            return Err(fail(
                MISMATCH,
                anyhow!("{name} differs at position {}: expected {}, found {}", i + 1, want[i], got[i]),
            ));
        }
    }
    for (row, start) in store.samples() {
        if brute.ca[row - 1] != start {
            return Err(fail(
                MISMATCH,
                anyhow!("sample at row {row} differs: expected {}, found {start}", brute.ca[row - 1]),
            ));
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Command::Build { input, output, sample_rate, chars } => {
            let texts = read_texts(&input, chars)?;
            let index = build_collection(&texts).map_err(lib_err)?;
            let rate = sample_rate.unwrap_or_else(|| default_rate(index.n()));
            let store = attach_samples(&index, rate).map_err(lib_err)?;
            save(&output, &index, &store)?;
            println!("indexed d={} n={}", index.d(), index.n());
        }
        Command::Count { index, pattern, chars } => {
            let (index, _) = load(&index)?;
            let p = parse_tokens(&pattern, chars, 1)?;
            println!("{}", index.count(&p).map_err(lib_err)?);
        }
        Command::Locate { index, pattern, chars } => {
            let (index, store) = load(&index)?;
            let p = parse_tokens(&pattern, chars, 1)?;
            for (text, off) in locate(&index, &store, &p).map_err(lib_err)? {
                println!("{text}:{off}");
            }
        }
        Command::Add { index: path, text, chars } => {
            let (mut index, store) = load(&path)?;
            let t = parse_tokens(&text, chars, 1)?;
            if t.is_empty() {
                return Err(fail(PARSE, anyhow!("empty text")));
            }
            extend_with_text(&mut index, &t).map_err(lib_err)?;
            let store = attach_samples(&index, store.rate()).map_err(lib_err)?;
            save(&path, &index, &store)?;
            println!("indexed d={} n={}", index.d(), index.n());
        }
        Command::Verify { index, source, chars } => {
            let (index, store) = load(&index)?;
            let texts = read_texts(&source, chars)?;
            verify(&index, &store, texts)?;
            println!("ok");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.err);
            ExitCode::from(f.code)
        }
    }
}

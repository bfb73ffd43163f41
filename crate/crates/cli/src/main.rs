use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use perigraph::corpus::{ingest_corpus, word_tokens, CorpusConfig, CorpusMode};
use perigraph::estimators::{condition_diagnostics, markov_order, vocab_proxy_at};
use perigraph::experiments::{
    analyze_corpus, emit_report, run_markov_consistency, run_sandwich, ExperimentConfig, Report,
    ReportFormat, Source, DEFAULT_SEEDS,
};
use perigraph::processes::{read_sequence, write_pairs, write_sequence};
use perigraph::{
    binarize_santa_fe, gen_markov, gen_santa_fe, neg_log_lk, CodeLengthOracle, Conditions,
    MarkovSpec, OracleKind, SantaFeParams, VERSION,
};

#[derive(Parser)]
#[command(
    name = "perigraph",
    version,
    about = "Facts-versus-words power laws on simulated and real text"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw a sequence from a source and write it as a sequence file or pair list
    Simulate(SimulateArgs),
    /// Run the estimators on one sequence file
    Analyze(AnalyzeArgs),
    /// Estimate the four exponents of the facts/redundancy/MI/words chain
    Sandwich(ExperimentArgs),
    /// Markov order estimates along a dyadic grid
    Consistency(ExperimentArgs),
    /// Heaps/Zipf statistics and block mutual information of a text file
    Corpus(CorpusArgs),
}

#[derive(Args, Clone)]
struct SourceArgs {
    /// santa-fe, iid (uniform over --alphabet symbols) or binary-chain
    #[arg(long, default_value = "santa-fe")]
    source: String,
    /// Zipf exponent of the Santa Fe fact indices
    #[arg(long, default_value_t = 2.0)]
    alpha: f64,
    /// Seed of the fixed fact sequence
    #[arg(long, default_value_t = 1)]
    fact_seed: u64,
    /// Alphabet size of the iid source
    #[arg(long, default_value_t = 2)]
    alphabet: u32,
    /// Probability of repeating the previous symbol in the binary chain
    #[arg(long, default_value_t = 0.9)]
    stay: f64,
}

impl SourceArgs {
    fn build(&self) -> Result<Source> {
        Ok(match self.source.as_str() {
            "santa-fe" => Source::santa_fe(self.alpha, self.fact_seed)?,
            "iid" => {
                if self.alphabet < 2 {
                    bail!("--alphabet must be at least 2");
                }
                let d = self.alphabet as usize;
                Source::markov(MarkovSpec::iid(vec![1.0 / d as f64; d])?)
            }
            "binary-chain" => Source::markov(MarkovSpec::binary_symmetric(self.stay)?),
            other => bail!("unknown source {other:?} (expected santa-fe, iid or binary-chain)"),
        })
    }
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Number of source units (pairs for santa-fe, symbols otherwise)
    #[arg(short = 'n', long, default_value_t = 1 << 16)]
    length: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write santa-fe output as "k<TAB>bit" lines instead of the ternary encoding
    #[arg(long)]
    pairs: bool,
    /// Output file; standard output when absent
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Sequence file: a "D=<int>" header line followed by one byte per symbol
    input: PathBuf,
    #[arg(long, default_value = "lz78")]
    oracle: OracleKind,
    /// Smallest block length of the condition diagnostics
    #[arg(long, default_value_t = 8)]
    grid_min_log2: u32,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, default_value_t = DEFAULT_SEEDS)]
    seeds: usize,
    #[arg(long, default_value_t = 0)]
    seed_base: u64,
    #[arg(long, default_value_t = 10)]
    grid_min_log2: u32,
    #[arg(long, default_value_t = 16)]
    grid_max_log2: u32,
    #[arg(long, default_value = "lz78")]
    oracle: OracleKind,
    /// table or summary
    #[arg(long, default_value = "summary")]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl ExperimentArgs {
    fn config(&self) -> Result<ExperimentConfig> {
        Ok(ExperimentConfig::dyadic(
            self.grid_min_log2,
            self.grid_max_log2,
            self.seeds,
            self.seed_base,
            self.oracle,
        )?)
    }
}

#[derive(Args)]
struct CorpusArgs {
    /// Text file
    input: PathBuf,
    /// Symbolization of the stream used for mutual information: bytes, chars or word-tokens
    #[arg(long, default_value = "chars")]
    mode: CorpusMode,
    /// Use at most this many symbols
    #[arg(long)]
    max_symbols: Option<usize>,
    /// Declared alphabet size, at least the observed one
    #[arg(long)]
    alphabet: Option<u32>,
    #[arg(long, default_value_t = 10)]
    grid_min_log2: u32,
    #[arg(long, default_value = "lz78")]
    oracle: OracleKind,
    #[arg(long, default_value = "summary")]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn output(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn simulate(args: &SimulateArgs) -> Result<()> {
    let mut out = output(args.out.as_ref())?;
    match args.source.build()? {
        Source::SantaFe { .. } => {
            let params = SantaFeParams::new(args.source.alpha, args.seed, args.source.fact_seed)?;
            let pairs = gen_santa_fe(params, args.length)?;
            if args.pairs {
                write_pairs(&mut out, &pairs)?;
            } else {
                write_sequence(&mut out, &binarize_santa_fe(&pairs))?;
            }
        }
        Source::Markov(spec) => {
            if args.pairs {
                bail!("--pairs needs the santa-fe source");
            }
            write_sequence(&mut out, &gen_markov(&spec, args.length, args.seed)?)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn analyze(args: &AnalyzeArgs) -> Result<()> {
    let file =
        File::open(&args.input).with_context(|| format!("cannot read {}", args.input.display()))?;
    let x = read_sequence(BufReader::new(file))?;
    if x.is_empty() {
        bail!("{} holds no symbols", args.input.display());
    }
    let code_len: f64 = args.oracle.code_len(&x);
    let order = markov_order::<f64, _>(&x, &args.oracle);
    let ml: f64 = neg_log_lk(&x, order)?;

    let mut out = output(args.out.as_ref())?;
    writeln!(out, "tool=perigraph")?;
    writeln!(out, "version={VERSION}")?;
    writeln!(out, "input={}", args.input.display())?;
    writeln!(out, "length={}", x.len())?;
    writeln!(out, "alphabet_size={}", x.alphabet_size())?;
    writeln!(out, "oracle={}", args.oracle)?;
    writeln!(out, "code_len={code_len:.6}")?;
    writeln!(out, "bits_per_symbol={:.6}", code_len / x.len() as f64)?;
    writeln!(out, "markov_order={order}")?;
    writeln!(out, "neg_log_lk_at_order={ml:.6}")?;
    writeln!(out, "vocab={}", vocab_proxy_at(&x, order))?;

    let grid: Vec<usize> = (args.grid_min_log2..usize::BITS)
        .map(|j| 1usize << j)
        .take_while(|&n| 2 * n <= x.len())
        .collect();
    if grid.is_empty() {
        writeln!(out, "conditions=NA")?;
    } else {
        let report: Conditions =
            condition_diagnostics(std::slice::from_ref(&x), &grid, &args.oracle)?;
        for line in report.to_kv_block().lines() {
            writeln!(out, "conditions.{line}")?;
        }
    }
    out.flush()?;
    Ok(())
}

fn sandwich(args: &ExperimentArgs) -> Result<()> {
    let source = args.source.build()?;
    let facts = source.has_facts();
    let report = run_sandwich(&source, &args.config()?, facts)?;
    let mut out = output(args.out.as_ref())?;
    emit_report(&mut out, Report::Sandwich(&report), args.format)?;
    out.flush()?;
    Ok(())
}

fn consistency(args: &ExperimentArgs) -> Result<()> {
    let report = run_markov_consistency(&args.source.build()?, &args.config()?)?;
    let mut out = output(args.out.as_ref())?;
    emit_report(&mut out, Report::Consistency(&report), args.format)?;
    out.flush()?;
    Ok(())
}

fn corpus(args: &CorpusArgs) -> Result<()> {
    let config = CorpusConfig {
        max_symbols: args.max_symbols,
        declared_alphabet: args.alphabet,
        ..CorpusConfig::new(&args.input, args.mode)
    };
    let corpus = ingest_corpus(&config)?;
    let tokens = match args.mode {
        CorpusMode::WordTokens => corpus.tokens.clone(),
        _ => {
            let raw = std::fs::read(&args.input)?;
            word_tokens(&String::from_utf8_lossy(&raw))
        }
    };
    let mut report = analyze_corpus(&corpus.seq, &tokens, args.grid_min_log2, &args.oracle)?;
    report.config = vec![
        ("input".into(), args.input.display().to_string()),
        ("mode".into(), args.mode.as_str().into()),
        (
            "max_symbols".into(),
            args.max_symbols.map_or("none".into(), |m| m.to_string()),
        ),
        ("grid_min_log2".into(), args.grid_min_log2.to_string()),
    ];
    let mut out = output(args.out.as_ref())?;
    emit_report(&mut out, Report::Corpus(&report), args.format)?;
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            eprintln!("perigraph: {}", first.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    let result = match &cli.command {
        Command::Simulate(a) => simulate(a),
        Command::Analyze(a) => analyze(a),
        Command::Sandwich(a) => sandwich(a),
        Command::Consistency(a) => consistency(a),
        Command::Corpus(a) => corpus(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("perigraph: {}", format!("{e:#}").replace('\n', " "));
            ExitCode::FAILURE
        }
    }
}

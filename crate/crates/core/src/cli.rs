//! The `slt` command line front end.
//!
//! Each subcommand loads its inputs, makes one library call and serializes
//! the result. Exit codes: 0 success, 1 usage error, 2 data error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cleaning::{self, CleanConfig, CleanSummary, LanguageProfile};
use crate::corpus::{self, load_corpus, load_segments, SegmentFile};
use crate::error::Error;
use crate::frameplan::{self, ClipEntry, PadSpec, WindowSpec};
use crate::itn;
use crate::metrics::{self, ReducedSide, Smoothing, StopList};
use crate::normalize::{AbbrevTable, NormConfig, Normalizer};
use crate::stats;

pub const STOPLIST_ENV: &str = "SLT_STOPLIST";

#[derive(Debug, Parser)]
#[command(
    name = "slt",
    version,
    about = "Corpus cleaning, normalization and evaluation for sign language translation"
)]
struct Cli {
    /// Print machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Drop or edit noisy subtitle lines in a JSONL corpus.
    Clean(CleanArgs),
    /// Normalize text in a JSONL corpus or a segment file.
    Normalize(NormalizeArgs),
    /// Vocabulary, singleton and duration statistics.
    Stats(StatsArgs),
    /// Corpus BLEU.
    Bleu(BleuArgs),
    /// BLEU after removing stop words.
    ReducedBleu(ReducedBleuArgs),
    /// Pick the checkpoint with the best reduced BLEU.
    Select(SelectArgs),
    /// Restore display formatting (digits, capitals, final period).
    Itn(ItnArgs),
    /// Feature-extraction window and padding plans.
    Plan(PlanArgs),
}

#[derive(Debug, Args)]
struct CleanArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: PathBuf,
    /// Write one outcome per input utterance as JSONL.
    #[arg(long)]
    report: Option<PathBuf>,
    /// JSON cleaning config.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct NormalizeArgs {
    #[arg(long)]
    input: PathBuf,
    /// Defaults to stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Treat the input as plain text, one segment per line.
    #[arg(long)]
    segments: bool,
    /// Abbreviation table (TSV) replacing the bundled one.
    #[arg(long)]
    abbrev: Option<PathBuf>,
    #[arg(long)]
    no_abbrev: bool,
    #[arg(long)]
    no_dates: bool,
    #[arg(long)]
    no_numbers: bool,
    #[arg(long)]
    no_punct: bool,
    #[arg(long)]
    no_lowercase: bool,
}

#[derive(Debug, Args)]
struct StatsArgs {
    #[arg(long)]
    input: PathBuf,
    /// A second (for example cleaned) corpus to compare against.
    #[arg(long)]
    compare: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SmoothingArg {
    None,
    Exp,
}

impl From<SmoothingArg> for Smoothing {
    fn from(s: SmoothingArg) -> Self {
        match s {
            SmoothingArg::None => Smoothing::None,
            SmoothingArg::Exp => Smoothing::Exp,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SideArg {
    Both,
    Hyp,
}

#[derive(Debug, Args)]
struct BleuArgs {
    #[arg(long)]
    hyp: PathBuf,
    #[arg(long = "ref")]
    reference: PathBuf,
    #[arg(long, value_enum, default_value = "none")]
    smoothing: SmoothingArg,
}

#[derive(Debug, Args)]
struct ReducedBleuArgs {
    #[command(flatten)]
    bleu: BleuArgs,
    /// Stop list, one word per line. Falls back to $SLT_STOPLIST, then the
    /// bundled German list.
    #[arg(long)]
    stoplist: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "both")]
    reduced_side: SideArg,
}

#[derive(Debug, Args)]
struct SelectArgs {
    #[arg(long = "ref")]
    reference: PathBuf,
    /// NAME=PATH; repeat for each checkpoint.
    #[arg(long = "candidate", required = true)]
    candidates: Vec<String>,
    #[arg(long)]
    stoplist: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "none")]
    smoothing: SmoothingArg,
}

#[derive(Debug, Args)]
struct ItnArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Only contract number words; no capitalization or punctuation.
    #[arg(long)]
    numbers_only: bool,
}

#[derive(Debug, Args)]
struct PlanArgs {
    /// JSONL lines of {"id", "frame_count", "width", "height"}.
    #[arg(long, conflicts_with = "frames")]
    manifest: Option<PathBuf>,
    /// Plan a single clip of this many frames.
    #[arg(long)]
    frames: Option<usize>,
    #[arg(long, default_value_t = 224, requires = "frames")]
    width: u32,
    #[arg(long, default_value_t = 224, requires = "frames")]
    height: u32,
    #[arg(long, default_value_t = 64)]
    window: usize,
    #[arg(long, default_value_t = 8)]
    stride: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Data(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Config(msg) => Failure::Usage(msg),
            other => Failure::Data(other),
        }
    }
}

type CmdResult = Result<(), Failure>;

/// Runs the CLI against the process stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI with explicit output streams and returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    1
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Clean(a) => cmd_clean(a, cli.json, out),
        Command::Normalize(a) => cmd_normalize(a, out),
        Command::Stats(a) => cmd_stats(a, cli.json, out),
        Command::Bleu(a) => cmd_bleu(a, cli.json, out),
        Command::ReducedBleu(a) => cmd_reduced_bleu(a, cli.json, out),
        Command::Select(a) => cmd_select(a, cli.json, out),
        Command::Itn(a) => cmd_itn(a, out),
        Command::Plan(a) => cmd_plan(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Data(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn io_fail(path: &Path) -> impl FnOnce(std::io::Error) -> Failure + '_ {
    move |e| Failure::Data(Error::io(path, e))
}

fn emit(out: &mut dyn Write, text: &str) -> CmdResult {
    out.write_all(text.as_bytes()).map_err(io_fail(Path::new("<stdout>")))
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> CmdResult {
    let mut line = serde_json::to_string(value).expect("results serialize to JSON");
    line.push('\n');
    emit(out, &line)
}

fn write_or_emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> CmdResult {
    match path {
        Some(p) => fs::write(p, text).map_err(io_fail(p)),
        None => emit(out, text),
    }
}

fn load_stoplist(explicit: Option<&Path>) -> Result<StopList, Error> {
    if let Some(p) = explicit {
        return StopList::load(p);
    }
    match std::env::var_os(STOPLIST_ENV) {
        Some(p) if !p.is_empty() => StopList::load(PathBuf::from(p)),
        _ => Ok(StopList::default()),
    }
}

fn cmd_clean(a: &CleanArgs, json: bool, out: &mut dyn Write) -> CmdResult {
    let cfg = match &a.config {
        Some(p) => CleanConfig::load(p)?,
        None => CleanConfig::default(),
    };
    let corpus = load_corpus(&a.input)?;
    let (cleaned, outcomes) = cleaning::clean_corpus(&corpus, &cfg, &LanguageProfile::defaults());
    corpus::write_corpus(&cleaned, &a.output)?;
    if let Some(report) = &a.report {
        fs::write(report, cleaning::report_jsonl(&outcomes)).map_err(io_fail(report))?;
    }
    let summary = CleanSummary::of(&outcomes);
    if json {
        emit_json(out, &summary)
    } else {
        emit(
            out,
            &format!(
                "{} utterances: {} kept, {} edited, {} dropped\n",
                outcomes.len(),
                summary.kept,
                summary.edited,
                summary.dropped
            ),
        )
    }
}

fn cmd_normalize(a: &NormalizeArgs, out: &mut dyn Write) -> CmdResult {
    let table = match &a.abbrev {
        Some(p) => AbbrevTable::load(p)?,
        None => AbbrevTable::default(),
    };
    let config = NormConfig {
        expand_abbrev: !a.no_abbrev,
        expand_dates: !a.no_dates,
        expand_numbers: !a.no_numbers,
        strip_punct: !a.no_punct,
        lowercase: !a.no_lowercase,
    };
    let normalizer = Normalizer::new(table, config);
    let text = if a.segments {
        load_segments(&a.input)?.map(|s| normalizer.normalize(s)).to_text()
    } else {
        normalizer.normalize_corpus(&load_corpus(&a.input)?).to_jsonl_string()
    };
    write_or_emit(a.output.as_deref(), &text, out)
}

#[derive(Serialize)]
struct StatsReport {
    raw: stats::CorpusStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    clean: Option<stats::CorpusStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    comparison: Option<stats::StatsComparison>,
}

fn cmd_stats(a: &StatsArgs, json: bool, out: &mut dyn Write) -> CmdResult {
    let raw = stats::vocab_stats(&load_corpus(&a.input)?);
    let clean = match &a.compare {
        Some(p) => Some(stats::vocab_stats(&load_corpus(p)?)),
        None => None,
    };
    let comparison = clean.as_ref().map(|c| stats::compare_stats(&raw, c));
    if json {
        if clean.is_none() {
            return emit_json(out, &raw);
        }
        return emit_json(out, &StatsReport { raw, clean, comparison });
    }
    let mut text = raw.to_table();
    if let (Some(clean), Some(cmp)) = (clean, comparison) {
        text.push_str("\ncompared corpus:\n");
        text.push_str(&clean.to_table());
        text.push('\n');
        text.push_str(&cmp.to_table());
    }
    emit(out, &text)
}

fn load_pair(hyp: &Path, reference: &Path) -> Result<(SegmentFile, SegmentFile), Error> {
    Ok((load_segments(hyp)?, load_segments(reference)?))
}

fn print_score(score: &metrics::BleuScore, json: bool, out: &mut dyn Write) -> CmdResult {
    if json {
        emit_json(out, score)
    } else {
        emit(out, &format!("{}\n", score.summary()))
    }
}

fn cmd_bleu(a: &BleuArgs, json: bool, out: &mut dyn Write) -> CmdResult {
    let (h, r) = load_pair(&a.hyp, &a.reference)?;
    let score = metrics::bleu(&h, &r, a.smoothing.into())?;
    print_score(&score, json, out)
}

fn cmd_reduced_bleu(a: &ReducedBleuArgs, json: bool, out: &mut dyn Write) -> CmdResult {
    let stops = load_stoplist(a.stoplist.as_deref())?;
    let (h, r) = load_pair(&a.bleu.hyp, &a.bleu.reference)?;
    let side = match a.reduced_side {
        SideArg::Both => ReducedSide::Both,
        SideArg::Hyp => ReducedSide::Hyp,
    };
    let score = metrics::reduced_bleu_with_side(&h, &r, &stops, a.bleu.smoothing.into(), side)?;
    print_score(&score, json, out)
}

fn cmd_select(a: &SelectArgs, json: bool, out: &mut dyn Write) -> CmdResult {
    let stops = load_stoplist(a.stoplist.as_deref())?;
    let refs = load_segments(&a.reference)?;
    let mut candidates = Vec::with_capacity(a.candidates.len());
    for spec in &a.candidates {
        let (name, path) = spec
            .split_once('=')
            .filter(|(n, p)| !n.is_empty() && !p.is_empty())
            .ok_or_else(|| Failure::Usage(format!("--candidate expects NAME=PATH, got '{spec}'")))?;
        candidates.push((name.to_owned(), load_segments(path)?));
    }
    let report = metrics::select_checkpoint(&candidates, &refs, &stops, a.smoothing.into())?;
    if json {
        emit_json(out, &report)
    } else {
        emit(out, &report.to_table())
    }
}

fn cmd_itn(a: &ItnArgs, out: &mut dyn Write) -> CmdResult {
    let segments = load_segments(&a.input)?;
    let restored = if a.numbers_only {
        segments.map(itn::contract_numbers_de)
    } else {
        segments.map(itn::restore_display)
    };
    write_or_emit(a.output.as_deref(), &restored.to_text(), out)
}

fn cmd_plan(a: &PlanArgs, out: &mut dyn Write) -> CmdResult {
    let windows = WindowSpec::new(a.window, a.stride)?;
    let pad = PadSpec::default();
    let entries = match (&a.manifest, a.frames) {
        (Some(path), _) => frameplan::parse_manifest(&corpus::read_utf8(path)?)?,
        (None, Some(frames)) => vec![ClipEntry {
            id: "clip".into(),
            frame_count: frames,
            width: a.width,
            height: a.height,
        }],
        (None, None) => return Err(Failure::Usage("plan needs --manifest or --frames".into())),
    };
    let mut text = String::new();
    for entry in &entries {
        let plan = frameplan::plan_clip(entry, &pad, &windows).map_err(|e| match e {
            Error::Config(msg) => Failure::Data(Error::Config(format!("clip '{}': {msg}", entry.id))),
            other => Failure::Data(other),
        })?;
        text.push_str(&serde_json::to_string(&plan).expect("plans serialize"));
        text.push('\n');
    }
    write_or_emit(a.output.as_deref(), &text, out)
}

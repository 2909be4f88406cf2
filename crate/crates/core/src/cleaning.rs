//! Sentence-level noise filtering for subtitle corpora.
//!
//! Broadcast subtitles carry lines that are not translations of the
//! signing: agency status messages, `#`-prefixed annotations, French or
//! English lines, and `* sound descriptions *`. Sound spans are stripped;
//! the other three drop the whole utterance.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::corpus::{read_utf8, Corpus, Utterance};
use crate::error::{Error, Result};
use crate::metrics::StopList;
use crate::normalize::{collapse_whitespace, is_punct_or_symbol};

const FUNCTION_WORDS_EN: &str = include_str!("../data/function_words_en.txt");
const FUNCTION_WORDS_FR: &str = include_str!("../data/function_words_fr.txt");

/// Status lines inserted by the subtitling agency.
pub const DEFAULT_STATUS_PATTERNS: [&str; 3] = [
    "1:1-Untertitelung.",
    "Livepassagen können Fehler enthalten.",
    "Mit Live-Untertiteln von SWISS TXT",
];

pub const DEFAULT_FOREIGN_THRESHOLD: f64 = 0.3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CleanRule {
    ForeignSentence,
    HashtagStart,
    StatusMessage,
    AsteriskSound,
    /// Implied by `AsteriskSound`: nothing was left after stripping.
    EmptyAfterStrip,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RuleAction {
    DropUtterance,
    StripSpan,
}

impl CleanRule {
    pub fn action(self) -> RuleAction {
        match self {
            CleanRule::AsteriskSound => RuleAction::StripSpan,
            _ => RuleAction::DropUtterance,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Kept,
    Dropped,
    Edited,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleHit {
    pub rule: CleanRule,
    pub span: String,
}

/// What happened to one input utterance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CleanOutcome {
    pub id: String,
    pub verdict: Verdict,
    pub hits: Vec<RuleHit>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Language {
    De,
    Fr,
    En,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanguageProfile {
    pub language: Language,
    pub function_words: BTreeSet<String>,
}

impl LanguageProfile {
    pub fn new<I, S>(language: Language, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let function_words: BTreeSet<String> = words
            .into_iter()
            .map(|w| w.as_ref().trim().to_lowercase())
            .filter(|w| !w.is_empty())
            .collect();
        if function_words.is_empty() {
            return Err(Error::Config(format!("empty function-word set for {language:?}")));
        }
        Ok(LanguageProfile {
            language,
            function_words,
        })
    }

    /// German profile: the bundled stop list.
    pub fn german() -> Self {
        Self::new(Language::De, StopList::default().iter()).expect("bundled list is nonempty")
    }

    pub fn french() -> Self {
        Self::new(Language::Fr, FUNCTION_WORDS_FR.lines()).expect("bundled list is nonempty")
    }

    pub fn english() -> Self {
        Self::new(Language::En, FUNCTION_WORDS_EN.lines()).expect("bundled list is nonempty")
    }

    /// German, French and English.
    pub fn defaults() -> Vec<Self> {
        vec![Self::german(), Self::french(), Self::english()]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LanguageGuess {
    pub language: Language,
    pub scores: Vec<(Language, f64)>,
}

impl LanguageGuess {
    pub fn score(&self, language: Language) -> f64 {
        self.scores
            .iter()
            .find(|(l, _)| *l == language)
            .map_or(0.0, |(_, s)| *s)
    }
}

fn word_tokens(text: &str) -> Vec<String> {
    text.split_whitespace()
        .map(|t| t.trim_matches(is_punct_or_symbol).to_lowercase())
        .filter(|t| !t.is_empty())
        .collect()
}

/// Scores each profile by the share of tokens that are its function words
/// and returns the best. Ties, including the all-zero case, go to German.
pub fn detect_language(text: &str, profiles: &[LanguageProfile]) -> LanguageGuess {
    let tokens = word_tokens(text);
    let scores: Vec<(Language, f64)> = profiles
        .iter()
        .map(|p| {
            let hits = tokens.iter().filter(|t| p.function_words.contains(t.as_str())).count();
            let score = if tokens.is_empty() {
                0.0
            } else {
                hits as f64 / tokens.len() as f64
            };
            (p.language, score)
        })
        .collect();
    let mut best = (
        Language::De,
        scores.iter().find(|(l, _)| *l == Language::De).map_or(0.0, |s| s.1),
    );
    for &(lang, score) in &scores {
        if lang != Language::De && score > best.1 {
            best = (lang, score);
        }
    }
    LanguageGuess {
        language: best.0,
        scores,
    }
}

/// True when the trimmed text is one of `patterns`, or starts with one and
/// continues with nothing but punctuation and whitespace.
pub fn match_status_message(text: &str, patterns: &[String]) -> bool {
    status_match(text, patterns).is_some()
}

fn status_match<'p>(text: &str, patterns: &'p [String]) -> Option<&'p str> {
    let text = text.trim();
    patterns.iter().map(|p| p.trim()).filter(|p| !p.is_empty()).find(|p| {
        text.strip_prefix(p)
            .is_some_and(|rest| rest.chars().all(|c| c.is_whitespace() || is_punct_or_symbol(c)))
    })
}

/// Byte ranges of `*...*` pairs, non-greedy; an unpaired `*` is ignored.
pub fn asterisk_spans(text: &str) -> Vec<(usize, usize)> {
    let mut spans = Vec::new();
    let mut from = 0;
    while let Some(open) = text[from..].find('*').map(|i| from + i) {
        let Some(close) = text[open + 1..].find('*').map(|i| open + 1 + i) else {
            break;
        };
        spans.push((open, close + 1));
        from = close + 1;
    }
    spans
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct RuleSwitches {
    pub foreign_sentence: bool,
    pub hashtag_start: bool,
    pub status_message: bool,
    pub asterisk_sound: bool,
}

impl Default for RuleSwitches {
    fn default() -> Self {
        RuleSwitches {
            foreign_sentence: true,
            hashtag_start: true,
            status_message: true,
            asterisk_sound: true,
        }
    }
}

/// Cleaning configuration, loadable from JSON:
///
/// ```json
/// {"status_patterns": ["1:1-Untertitelung."], "foreign_threshold": 0.3,
///  "rules": {"foreign_sentence": false}}
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct CleanConfig {
    pub status_patterns: Vec<String>,
    pub foreign_threshold: f64,
    pub rules: RuleSwitches,
}

impl Default for CleanConfig {
    fn default() -> Self {
        CleanConfig {
            status_patterns: DEFAULT_STATUS_PATTERNS.iter().map(|s| s.to_string()).collect(),
            foreign_threshold: DEFAULT_FOREIGN_THRESHOLD,
            rules: RuleSwitches::default(),
        }
    }
}

impl CleanConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: CleanConfig =
            serde_json::from_str(text).map_err(|e| Error::Config(format!("cleaning config: {e}")))?;
        if !(0.0..=1.0).contains(&cfg.foreign_threshold) {
            return Err(Error::Config(format!(
                "foreign_threshold must be within [0, 1], got {}",
                cfg.foreign_threshold
            )));
        }
        Ok(cfg)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&read_utf8(path.as_ref())?)
    }

    /// Enabled rules in application order: the strip rule first, then the
    /// drop rules.
    pub fn rules(&self) -> Vec<CleanRule> {
        let r = &self.rules;
        [
            (r.asterisk_sound, CleanRule::AsteriskSound),
            (r.hashtag_start, CleanRule::HashtagStart),
            (r.status_message, CleanRule::StatusMessage),
            (r.foreign_sentence, CleanRule::ForeignSentence),
        ]
        .into_iter()
        .filter_map(|(on, rule)| on.then_some(rule))
        .collect()
    }
}

/// Applies the configured rules to one utterance. Returns the surviving
/// utterance, if any, and the outcome record.
pub fn clean_utterance(
    utt: &Utterance,
    cfg: &CleanConfig,
    profiles: &[LanguageProfile],
) -> (Option<Utterance>, CleanOutcome) {
    let rules = cfg.rules();
    let mut hits = Vec::new();
    let mut text = utt.text.clone();

    if rules.contains(&CleanRule::AsteriskSound) {
        let spans = asterisk_spans(&text);
        if !spans.is_empty() {
            let mut kept = String::with_capacity(text.len());
            let mut last = 0;
            for &(start, end) in &spans {
                hits.push(RuleHit {
                    rule: CleanRule::AsteriskSound,
                    span: text[start..end].to_owned(),
                });
                kept.push_str(&text[last..start]);
                kept.push(' ');
                last = end;
            }
            kept.push_str(&text[last..]);
            text = collapse_whitespace(&kept);
            if text.is_empty() {
                hits.push(RuleHit {
                    rule: CleanRule::EmptyAfterStrip,
                    span: String::new(),
                });
            }
        }
    }

    if !text.is_empty() {
        for rule in &rules {
            let span = match rule {
                CleanRule::HashtagStart => text
                    .trim_start()
                    .starts_with('#')
                    .then(|| text.split_whitespace().next().unwrap_or_default().to_owned()),
                CleanRule::StatusMessage => status_match(&text, &cfg.status_patterns).map(str::to_owned),
                CleanRule::ForeignSentence => {
                    let guess = detect_language(&text, profiles);
                    let score = guess.score(guess.language);
                    (guess.language != Language::De && score >= cfg.foreign_threshold)
                        .then(|| format!("{:?} {:.2}", guess.language, score).to_uppercase())
                }
                CleanRule::AsteriskSound | CleanRule::EmptyAfterStrip => None,
            };
            if let Some(span) = span {
                hits.push(RuleHit { rule: *rule, span });
            }
        }
    }

    let verdict = if hits.iter().any(|h| h.rule.action() == RuleAction::DropUtterance) {
        Verdict::Dropped
    } else if !hits.is_empty() {
        Verdict::Edited
    } else {
        Verdict::Kept
    };
    let survivor = match verdict {
        Verdict::Dropped => None,
        Verdict::Edited => Some(Utterance { text, ..utt.clone() }),
        Verdict::Kept => Some(utt.clone()),
    };
    let outcome = CleanOutcome {
        id: utt.id.clone(),
        verdict,
        hits,
    };
    (survivor, outcome)
}

/// Cleans every utterance. The output corpus holds the kept and edited
/// utterances in input order; there is one outcome per input utterance.
pub fn clean_corpus(corpus: &Corpus, cfg: &CleanConfig, profiles: &[LanguageProfile]) -> (Corpus, Vec<CleanOutcome>) {
    let mut kept = Vec::with_capacity(corpus.len());
    let mut outcomes = Vec::with_capacity(corpus.len());
    for utt in corpus {
        let (survivor, outcome) = clean_utterance(utt, cfg, profiles);
        kept.extend(survivor);
        outcomes.push(outcome);
    }
    let cleaned = Corpus::new(kept).expect("a subsequence of a valid corpus is valid");
    (cleaned, outcomes)
}

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
struct ReportLine<'a> {
    schema_version: u32,
    #[serde(flatten)]
    outcome: &'a CleanOutcome,
}

/// JSONL clean report, one outcome per line.
pub fn report_jsonl(outcomes: &[CleanOutcome]) -> String {
    let mut out = String::new();
    for outcome in outcomes {
        let line = ReportLine {
            schema_version: REPORT_SCHEMA_VERSION,
            outcome,
        };
        out.push_str(&serde_json::to_string(&line).expect("outcomes serialize"));
        out.push('\n');
    }
    out
}

/// Counts of each verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct CleanSummary {
    pub kept: usize,
    pub edited: usize,
    pub dropped: usize,
}

impl CleanSummary {
    pub fn of(outcomes: &[CleanOutcome]) -> Self {
        let mut s = CleanSummary::default();
        for o in outcomes {
            match o.verdict {
                Verdict::Kept => s.kept += 1,
                Verdict::Edited => s.edited += 1,
                Verdict::Dropped => s.dropped += 1,
            }
        }
        s
    }
}

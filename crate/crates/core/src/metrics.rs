//! Corpus BLEU, stop-word-reduced BLEU and checkpoint selection.
//!
//! BLEU here is the classic corpus-level definition: clipped n-gram matches
//! and n-gram totals are summed over all segments for orders 1 to 4, the
//! modified precisions are combined by geometric mean and multiplied by the
//! brevity penalty `exp(1 - r/c)` when the hypothesis corpus is shorter than
//! the reference corpus. Tokenization is whitespace splitting; inputs are
//! expected to be normalized already.
//!
//! Reduced BLEU deletes stop and function words before scoring. With
//! very low scores, standard BLEU rewards systems that emit many function
//! words; reduced BLEU only credits content words.

use std::collections::{BTreeSet, HashMap};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::corpus::{read_utf8, SegmentFile};
use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 4;

const DEFAULT_STOPWORDS: &str = include_str!("../data/stopwords_de.txt");

/// Lowercase, deduplicated stop/function word blacklist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StopList {
    words: BTreeSet<String>,
}

impl StopList {
    /// Builds a list from raw entries. Entries are trimmed and lowercased;
    /// entries containing an apostrophe also contribute their
    /// apostrophe-free form, which is what normalized text contains.
    pub fn new<I, S>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut words = BTreeSet::new();
        for entry in entries {
            let word = entry.as_ref().trim().to_lowercase();
            if word.is_empty() {
                continue;
            }
            if word.chars().any(char::is_whitespace) {
                return Err(Error::Config(format!("stop word '{word}' contains whitespace")));
            }
            let bare: String = word.chars().filter(|&c| c != '\'' && c != '\u{2019}').collect();
            if bare != word && !bare.is_empty() {
                words.insert(bare);
            }
            words.insert(word);
        }
        Ok(StopList { words })
    }

    /// One word per line.
    pub fn from_text(text: &str) -> Result<Self> {
        Self::new(text.lines())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_text(&read_utf8(path.as_ref())?)
    }

    /// The raw bundled German list, one entry per line, repeats included.
    pub fn default_source() -> &'static str {
        DEFAULT_STOPWORDS
    }

    pub fn contains(&self, token: &str) -> bool {
        self.words.contains(token) || self.words.contains(token.to_lowercase().as_str())
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.words.iter().map(String::as_str)
    }
}

impl Default for StopList {
    fn default() -> Self {
        Self::from_text(DEFAULT_STOPWORDS).expect("bundled stop list is valid")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Smoothing {
    /// A zero precision makes the score zero.
    #[default]
    None,
    /// The k-th order with zero matches gets precision `1 / (2^k * total)`.
    Exp,
}

/// Which side of the evaluation stop words are removed from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReducedSide {
    /// Hypotheses and references.
    #[default]
    Both,
    /// Hypotheses only.
    Hyp,
}

/// A corpus-level BLEU result on the 0–100 scale.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BleuScore {
    pub score: f64,
    pub precisions: [f64; MAX_ORDER],
    #[serde(rename = "bp")]
    pub brevity_penalty: f64,
    pub hyp_len: usize,
    pub ref_len: usize,
    pub matches: [usize; MAX_ORDER],
    pub totals: [usize; MAX_ORDER],
}

impl BleuScore {
    /// `BLEU = 0.78 (p 12.5/1.2/0.0/0.0, BP 0.912, hyp 4021 / ref 4400)`
    pub fn summary(&self) -> String {
        format!(
            "BLEU = {:.2} (p {}, BP {:.3}, hyp {} / ref {})",
            self.score,
            self.precisions
                .iter()
                .map(|p| format!("{:.1}", p * 100.0))
                .collect::<Vec<_>>()
                .join("/"),
            self.brevity_penalty,
            self.hyp_len,
            self.ref_len
        )
    }
}

fn ngram_counts<'t, 'a>(tokens: &'t [&'a str], n: usize) -> HashMap<&'t [&'a str], usize> {
    let mut counts = HashMap::new();
    if tokens.len() >= n {
        for gram in tokens.windows(n) {
            *counts.entry(gram).or_insert(0) += 1;
        }
    }
    counts
}

/// Sufficient statistics of one segment pair.
fn segment_stats(
    hyp: &str,
    reference: &str,
    matches: &mut [usize; MAX_ORDER],
    totals: &mut [usize; MAX_ORDER],
) -> (usize, usize) {
    let h: Vec<&str> = hyp.split_whitespace().collect();
    let r: Vec<&str> = reference.split_whitespace().collect();
    for n in 1..=MAX_ORDER {
        let ref_counts = ngram_counts(&r, n);
        let hyp_counts = ngram_counts(&h, n);
        matches[n - 1] += hyp_counts
            .iter()
            .map(|(gram, &c)| c.min(ref_counts.get(gram).copied().unwrap_or(0)))
            .sum::<usize>();
        totals[n - 1] += h.len().saturating_sub(n - 1);
    }
    (h.len(), r.len())
}

/// Combines summed statistics into a score.
pub fn bleu_from_stats(
    matches: [usize; MAX_ORDER],
    totals: [usize; MAX_ORDER],
    hyp_len: usize,
    ref_len: usize,
    smoothing: Smoothing,
) -> BleuScore {
    let mut precisions = [0.0; MAX_ORDER];
    let mut zero_orders = 0i32;
    for n in 0..MAX_ORDER {
        precisions[n] = if totals[n] == 0 {
            0.0
        } else if matches[n] > 0 {
            matches[n] as f64 / totals[n] as f64
        } else {
            match smoothing {
                Smoothing::None => 0.0,
                Smoothing::Exp => {
                    zero_orders += 1;
                    1.0 / (2f64.powi(zero_orders) * totals[n] as f64)
                }
            }
        };
    }
    // an empty hypothesis corpus gets BP 0 rather than exp(-inf) noise
    let brevity_penalty = if hyp_len == 0 {
        0.0
    } else if hyp_len >= ref_len {
        1.0
    } else {
        (1.0 - ref_len as f64 / hyp_len as f64).exp()
    };
    let score = if precisions.iter().any(|&p| p <= 0.0) {
        0.0
    } else {
        let log_mean = precisions.iter().map(|p| p.ln()).sum::<f64>() / MAX_ORDER as f64;
        100.0 * brevity_penalty * log_mean.exp()
    };
    BleuScore {
        score,
        precisions,
        brevity_penalty,
        hyp_len,
        ref_len,
        matches,
        totals,
    }
}

fn check_alignment(hyps: &SegmentFile, refs: &SegmentFile) -> Result<()> {
    if hyps.len() != refs.len() {
        return Err(Error::LengthMismatch {
            hyp: hyps.len(),
            reference: refs.len(),
        });
    }
    if refs.is_empty() {
        return Err(Error::EmptyReference);
    }
    Ok(())
}

/// Corpus BLEU of `hyps` against the segment-aligned `refs`.
///
/// ```
/// use slt_core::metrics::{bleu, Smoothing};
/// use slt_core::SegmentFile;
/// let hyp = SegmentFile::from_iter(["a b c d"]);
/// let reference = SegmentFile::from_iter(["a b c d e"]);
/// let s = bleu(&hyp, &reference, Smoothing::None).unwrap();
/// assert!((s.score - 100.0 * (-0.25f64).exp()).abs() < 1e-9);
/// ```
pub fn bleu(hyps: &SegmentFile, refs: &SegmentFile, smoothing: Smoothing) -> Result<BleuScore> {
    check_alignment(hyps, refs)?;
    let mut matches = [0; MAX_ORDER];
    let mut totals = [0; MAX_ORDER];
    let (mut hyp_len, mut ref_len) = (0, 0);
    for (h, r) in hyps.iter().zip(refs.iter()) {
        let (hl, rl) = segment_stats(h, r, &mut matches, &mut totals);
        hyp_len += hl;
        ref_len += rl;
    }
    Ok(bleu_from_stats(matches, totals, hyp_len, ref_len, smoothing))
}

/// Deletes tokens whose lowercase form is in `stops`.
pub fn remove_stopwords(segment: &str, stops: &StopList) -> String {
    segment
        .split_whitespace()
        .filter(|t| !stops.contains(t))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn remove_stopwords_all(segments: &SegmentFile, stops: &StopList) -> SegmentFile {
    segments.map(|s| remove_stopwords(s, stops))
}

/// BLEU after deleting stop words from both sides.
pub fn reduced_bleu(
    hyps: &SegmentFile,
    refs: &SegmentFile,
    stops: &StopList,
    smoothing: Smoothing,
) -> Result<BleuScore> {
    reduced_bleu_with_side(hyps, refs, stops, smoothing, ReducedSide::Both)
}

pub fn reduced_bleu_with_side(
    hyps: &SegmentFile,
    refs: &SegmentFile,
    stops: &StopList,
    smoothing: Smoothing,
    side: ReducedSide,
) -> Result<BleuScore> {
    check_alignment(hyps, refs)?;
    let hyps = remove_stopwords_all(hyps, stops);
    match side {
        ReducedSide::Both => bleu(&hyps, &remove_stopwords_all(refs, stops), smoothing),
        ReducedSide::Hyp => bleu(&hyps, refs, smoothing),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StopwordCount {
    pub count: usize,
    pub fraction: f64,
}

/// Number and share of tokens across `hyps` that are stop words.
pub fn count_stopwords(hyps: &SegmentFile, stops: &StopList) -> StopwordCount {
    let (mut count, mut total) = (0usize, 0usize);
    for token in hyps.iter().flat_map(str::split_whitespace) {
        total += 1;
        if stops.contains(token) {
            count += 1;
        }
    }
    StopwordCount {
        count,
        fraction: if total == 0 { 0.0 } else { count as f64 / total as f64 },
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateReport {
    pub name: String,
    pub bleu: BleuScore,
    pub reduced_bleu: BleuScore,
    pub stopword_count: usize,
    pub stopword_fraction: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelectionReport {
    pub candidates: Vec<CandidateReport>,
    pub winner: String,
}

impl SelectionReport {
    pub fn winner_report(&self) -> &CandidateReport {
        self.candidates
            .iter()
            .find(|c| c.name == self.winner)
            .expect("winner is one of the candidates")
    }

    pub fn to_table(&self) -> String {
        let width = self.candidates.iter().map(|c| c.name.len()).max().unwrap_or(0).max(9);
        let mut out = format!(
            "{:<width$}  {:>8}  {:>8}  {:>10}  {:>7}\n",
            "candidate", "RedBLEU", "BLEU", "stopwords", "share"
        );
        for c in &self.candidates {
            let mark = if c.name == self.winner { " *" } else { "" };
            out.push_str(&format!(
                "{:<width$}  {:>8.2}  {:>8.2}  {:>10}  {:>6.1}%{mark}\n",
                c.name,
                c.reduced_bleu.score,
                c.bleu.score,
                c.stopword_count,
                c.stopword_fraction * 100.0
            ));
        }
        out.push_str(&format!("winner: {}\n", self.winner));
        out
    }
}

/// Scores every candidate and picks the highest reduced BLEU. Ties go to
/// the candidate with fewer stop words, then to the smaller name.
pub fn select_checkpoint(
    candidates: &[(String, SegmentFile)],
    refs: &SegmentFile,
    stops: &StopList,
    smoothing: Smoothing,
) -> Result<SelectionReport> {
    if candidates.is_empty() {
        return Err(Error::NoCandidates);
    }
    let mut reports = Vec::with_capacity(candidates.len());
    for (name, hyps) in candidates {
        if hyps.len() != refs.len() {
            return Err(Error::CandidateMismatch {
                name: name.clone(),
                hyp: hyps.len(),
                reference: refs.len(),
            });
        }
        let stop = count_stopwords(hyps, stops);
        reports.push(CandidateReport {
            name: name.clone(),
            bleu: bleu(hyps, refs, smoothing)?,
            reduced_bleu: reduced_bleu(hyps, refs, stops, smoothing)?,
            stopword_count: stop.count,
            stopword_fraction: stop.fraction,
        });
    }
    let winner = reports
        .iter()
        .min_by(|a, b| {
            b.reduced_bleu
                .score
                .total_cmp(&a.reduced_bleu.score)
                .then(a.stopword_count.cmp(&b.stopword_count))
                .then_with(|| a.name.cmp(&b.name))
        })
        .expect("at least one candidate")
        .name
        .clone();
    Ok(SelectionReport {
        candidates: reports,
        winner,
    })
}

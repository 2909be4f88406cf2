//! Vocabulary, singleton and duration statistics per corpus source.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::corpus::{Corpus, Source, Utterance};

/// Counts for one slice of a corpus.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct SliceStats {
    pub utterances: usize,
    /// Distinct `video` ids; utterances without one are not counted.
    pub videos: usize,
    /// Sum of `duration_s` over utterances that carry one, in hours.
    pub hours: f64,
    pub tokens: usize,
    pub vocabulary: usize,
    /// Types that occur exactly once.
    pub singletons: usize,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct CorpusStats {
    pub per_source: BTreeMap<Source, SliceStats>,
    pub total: SliceStats,
}

fn slice_stats<'a>(utterances: impl Iterator<Item = &'a Utterance>) -> SliceStats {
    let mut freq: HashMap<&str, usize> = HashMap::new();
    let mut videos: HashSet<&str> = HashSet::new();
    let mut stats = SliceStats::default();
    let mut seconds = 0.0;
    for utt in utterances {
        stats.utterances += 1;
        if let Some(v) = &utt.video {
            videos.insert(v);
        }
        seconds += utt.duration_s.unwrap_or(0.0);
        for token in utt.text.split_whitespace() {
            stats.tokens += 1;
            *freq.entry(token).or_insert(0) += 1;
        }
    }
    stats.videos = videos.len();
    stats.hours = seconds / 3600.0;
    stats.vocabulary = freq.len();
    stats.singletons = freq.values().filter(|&&c| c == 1).count();
    stats
}

/// Whitespace-token statistics for every source present in the corpus and
/// for the corpus as a whole. The total is computed on the union, so types
/// shared between sources are counted once.
pub fn vocab_stats(corpus: &Corpus) -> CorpusStats {
    let per_source = Source::ALL
        .into_iter()
        .filter(|s| corpus.iter().any(|u| u.source == *s))
        .map(|s| (s, slice_stats(corpus.iter().filter(|u| u.source == s))))
        .collect();
    CorpusStats {
        per_source,
        total: slice_stats(corpus.iter()),
    }
}

impl CorpusStats {
    fn columns(&self) -> Vec<(String, SliceStats)> {
        self.per_source
            .iter()
            .map(|(s, st)| (s.to_string(), *st))
            .chain(std::iter::once(("Total".to_owned(), self.total)))
            .collect()
    }

    /// Plain-text table with sources as columns; hours to one decimal.
    pub fn to_table(&self) -> String {
        let cols = self.columns();
        let mut out = format!("{:<12}", "");
        for (name, _) in &cols {
            let _ = write!(out, "{name:>10}");
        }
        out.push('\n');
        let rows: [(&str, fn(&SliceStats) -> String); 6] = [
            ("Videos", |s| s.videos.to_string()),
            ("Hours", |s| format!("{:.1}", s.hours)),
            ("Utterances", |s| s.utterances.to_string()),
            ("Tokens", |s| s.tokens.to_string()),
            ("Vocabulary", |s| s.vocabulary.to_string()),
            ("Singletons", |s| s.singletons.to_string()),
        ];
        for (label, cell) in rows {
            let _ = write!(out, "{label:<12}");
            for (_, st) in &cols {
                let _ = write!(out, "{:>10}", cell(st));
            }
            out.push('\n');
        }
        out
    }
}

/// Change of one field in one slice between two corpus versions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldDelta {
    pub slice: String,
    pub field: String,
    pub raw: f64,
    pub clean: f64,
    pub delta: f64,
    /// `None` when the raw value is zero.
    pub percent: Option<f64>,
    /// The value went up instead of down.
    pub increased: bool,
}

impl FieldDelta {
    pub fn new(slice: &str, field: &str, raw: f64, clean: f64) -> Self {
        let delta = clean - raw;
        FieldDelta {
            slice: slice.to_owned(),
            field: field.to_owned(),
            raw,
            clean,
            delta,
            percent: (raw != 0.0).then(|| delta / raw * 100.0),
            increased: delta > 0.0,
        }
    }

    /// `-11943 (-34.3%)`
    pub fn describe(&self) -> String {
        let delta = if self.field == "hours" {
            format!("{:+.1}", self.delta)
        } else {
            format!("{:+}", self.delta.round() as i64)
        };
        let delta = if self.delta == 0.0 {
            delta.replace('+', "")
        } else {
            delta
        };
        match self.percent {
            Some(p) if self.delta == 0.0 => format!("{delta} ({:.1}%)", p.abs()),
            Some(p) => format!("{delta} ({p:+.1}%)"),
            None => format!("{delta} (n/a)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct StatsComparison {
    pub rows: Vec<FieldDelta>,
}

impl StatsComparison {
    pub fn get(&self, slice: &str, field: &str) -> Option<&FieldDelta> {
        self.rows.iter().find(|r| r.slice == slice && r.field == field)
    }

    pub fn to_table(&self) -> String {
        let mut out = format!(
            "{:<8} {:<12} {:>10} {:>10}  {}\n",
            "slice", "field", "raw", "clean", "change"
        );
        for r in &self.rows {
            let fmt = |v: f64| {
                if r.field == "hours" {
                    format!("{v:.1}")
                } else {
                    format!("{}", v.round() as i64)
                }
            };
            let flag = if r.increased { "  (increase)" } else { "" };
            let _ = writeln!(
                out,
                "{:<8} {:<12} {:>10} {:>10}  {}{flag}",
                r.slice,
                r.field,
                fmt(r.raw),
                fmt(r.clean),
                r.describe()
            );
        }
        out
    }
}

fn slice_fields(s: &SliceStats) -> [(&'static str, f64); 6] {
    [
        ("videos", s.videos as f64),
        ("hours", s.hours),
        ("utterances", s.utterances as f64),
        ("tokens", s.tokens as f64),
        ("vocabulary", s.vocabulary as f64),
        ("singletons", s.singletons as f64),
    ]
}

/// Absolute and relative change per field, for every slice present in
/// either input plus the total.
pub fn compare_stats(raw: &CorpusStats, clean: &CorpusStats) -> StatsComparison {
    let mut slices: Vec<Source> = raw.per_source.keys().chain(clean.per_source.keys()).copied().collect();
    slices.sort();
    slices.dedup();
    let mut rows = Vec::new();
    let empty = SliceStats::default();
    let mut push = |name: &str, a: &SliceStats, b: &SliceStats| {
        for ((field, x), (_, y)) in slice_fields(a).into_iter().zip(slice_fields(b)) {
            rows.push(FieldDelta::new(name, field, x, y));
        }
    };
    for s in slices {
        push(
            s.as_str(),
            raw.per_source.get(&s).unwrap_or(&empty),
            clean.per_source.get(&s).unwrap_or(&empty),
        );
    }
    push("Total", &raw.total, &clean.total);
    StatsComparison { rows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn corpus(items: &[(&str, Source)]) -> Corpus {
        Corpus::new(
            items
                .iter()
                .enumerate()
                .map(|(i, (t, s))| Utterance::new(format!("u{i}"), *t).with_source(*s))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn counts_types_and_singletons() {
        let st = vocab_stats(&corpus(&[("a b a", Source::Other), ("c", Source::Other)]));
        assert_eq!(st.total.vocabulary, 3);
        assert_eq!(st.total.singletons, 2);
        assert_eq!(st.total.tokens, 4);
    }

    #[test]
    fn empty_corpus_is_all_zero() {
        let st = vocab_stats(&Corpus::default());
        assert_eq!(st.total, SliceStats::default());
        assert!(st.per_source.is_empty());
    }

    #[test]
    fn total_is_computed_on_the_union() {
        let st = vocab_stats(&corpus(&[("x", Source::Srf), ("x", Source::Fn)]));
        assert_eq!(st.per_source[&Source::Srf].vocabulary, 1);
        assert_eq!(st.per_source[&Source::Fn].vocabulary, 1);
        assert_eq!(st.total.vocabulary, 1);
        assert_eq!(st.total.singletons, 0);
    }

    #[test]
    fn hours_and_videos() {
        let c = Corpus::new(vec![
            Utterance::new("a", "x")
                .with_duration(1800.0)
                .with_video("v1")
                .with_source(Source::Srf),
            Utterance::new("b", "y")
                .with_duration(1800.0)
                .with_video("v1")
                .with_source(Source::Srf),
            Utterance::new("c", "z").with_video("v2").with_source(Source::Fn),
            Utterance::new("d", "w"),
        ])
        .unwrap();
        let st = vocab_stats(&c);
        assert_eq!(st.total.hours, 1.0);
        assert_eq!(st.total.videos, 2);
        assert_eq!(st.per_source[&Source::Srf].videos, 1);
        assert!(st.to_table().contains("Hours"));
        assert!(st.to_table().contains("1.0"));
    }

    #[test]
    fn comparison_arithmetic() {
        let d = FieldDelta::new("Total", "vocabulary", 34783.0, 22840.0);
        assert_eq!(d.delta, -11943.0);
        assert!((d.percent.unwrap() + 34.335).abs() < 1e-3);
        assert_eq!(d.describe(), "-11943 (-34.3%)");
        assert!(!d.increased);
        let d = FieldDelta::new("Total", "vocabulary", 10.0, 12.0);
        assert_eq!(d.describe(), "+2 (+20.0%)");
        assert!(d.increased);
        assert_eq!(FieldDelta::new("T", "vocabulary", 0.0, 3.0).percent, None);
    }

    #[test]
    fn identical_inputs_have_zero_deltas() {
        let st = vocab_stats(&corpus(&[("a b", Source::Srf), ("b c", Source::Lex)]));
        let cmp = compare_stats(&st, &st);
        assert!(cmp.rows.iter().all(|r| r.delta == 0.0 && !r.increased));
        assert_eq!(cmp.get("Total", "vocabulary").unwrap().describe(), "0 (0.0%)");
        assert!(cmp.to_table().contains("LEX"));
    }

    proptest! {
        #[test]
        fn singletons_are_types_minus_repeated_types(texts in proptest::collection::vec("[a-e ]{0,12}", 0..10)) {
            let items: Vec<(&str, Source)> = texts.iter().map(|t| (t.as_str(), Source::Other)).collect();
            let st = vocab_stats(&corpus(&items));
            let mut freq: HashMap<&str, usize> = HashMap::new();
            for t in texts.iter().flat_map(|t| t.split_whitespace()) {
                *freq.entry(t).or_default() += 1;
            }
            let repeated = freq.values().filter(|&&c| c >= 2).count();
            prop_assert_eq!(st.total.singletons, st.total.vocabulary - repeated);
            prop_assert!(st.total.singletons <= st.total.vocabulary);
        }

        #[test]
        fn merging_never_adds_singletons(a in proptest::collection::vec("[a-f ]{0,10}", 0..6), b in proptest::collection::vec("[a-f ]{0,10}", 0..6)) {
            let items: Vec<(&str, Source)> = a.iter().map(|t| (t.as_str(), Source::Srf))
                .chain(b.iter().map(|t| (t.as_str(), Source::Fn))).collect();
            let st = vocab_stats(&corpus(&items));
            let parts: usize = st.per_source.values().map(|s| s.singletons).sum();
            let vocab_parts: usize = st.per_source.values().map(|s| s.vocabulary).sum();
            prop_assert!(st.total.singletons <= parts);
            prop_assert!(st.total.vocabulary <= vocab_parts);
        }
    }
}

//! Corpus data model and line-oriented I/O.
//!
//! Corpora are JSON Lines files, one utterance per line:
//!
//! ```text
//! {"id":"srf-0001","text":"Mit Live-Untertiteln von SWISS TXT","source":"SRF","duration_s":2.4}
//! ```
//!
//! Hypothesis and reference files are plain UTF-8 text with one segment per
//! line. Empty lines are segments too.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Where an utterance came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub enum Source {
    #[serde(rename = "SRF", alias = "srf")]
    Srf,
    #[serde(rename = "FN", alias = "fn")]
    Fn,
    #[serde(rename = "LEX", alias = "lex")]
    Lex,
    #[default]
    #[serde(rename = "OTHER", alias = "other")]
    Other,
}

impl Source {
    pub const ALL: [Source; 4] = [Source::Srf, Source::Fn, Source::Lex, Source::Other];

    pub fn as_str(self) -> &'static str {
        match self {
            Source::Srf => "SRF",
            Source::Fn => "FN",
            Source::Lex => "LEX",
            Source::Other => "OTHER",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One subtitle segment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Utterance {
    pub id: String,
    pub text: String,
    #[serde(default)]
    pub source: Source,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duration_s: Option<f64>,
    /// Identifier of the video the segment was cut from, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub video: Option<String>,
}

impl Utterance {
    pub fn new(id: impl Into<String>, text: impl Into<String>) -> Self {
        Utterance {
            id: id.into(),
            text: text.into(),
            source: Source::Other,
            duration_s: None,
            video: None,
        }
    }

    pub fn with_source(mut self, source: Source) -> Self {
        self.source = source;
        self
    }

    pub fn with_duration(mut self, seconds: f64) -> Self {
        self.duration_s = Some(seconds);
        self
    }

    pub fn with_video(mut self, video: impl Into<String>) -> Self {
        self.video = Some(video.into());
        self
    }
}

/// An ordered collection of utterances with unique ids.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Corpus {
    utterances: Vec<Utterance>,
}

impl Corpus {
    /// Builds a corpus, checking the id and duration invariants. Line numbers
    /// in errors are 1-based positions in `utterances`.
    pub fn new(utterances: Vec<Utterance>) -> Result<Self> {
        let mut seen: HashMap<&str, usize> = HashMap::with_capacity(utterances.len());
        for (idx, utt) in utterances.iter().enumerate() {
            validate(utt, idx + 1)?;
            if let Some(first) = seen.insert(utt.id.as_str(), idx + 1) {
                return Err(Error::DuplicateId {
                    id: utt.id.clone(),
                    first,
                    second: idx + 1,
                });
            }
        }
        Ok(Corpus { utterances })
    }

    pub fn utterances(&self) -> &[Utterance] {
        &self.utterances
    }

    pub fn into_utterances(self) -> Vec<Utterance> {
        self.utterances
    }

    pub fn len(&self) -> usize {
        self.utterances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.utterances.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Utterance> {
        self.utterances.iter()
    }

    /// Sub-corpus of the utterances tagged with `source`, in order.
    pub fn filter_source(&self, source: Source) -> Corpus {
        Corpus {
            utterances: self.utterances.iter().filter(|u| u.source == source).cloned().collect(),
        }
    }

    /// Returns a copy with every text passed through `f`.
    pub fn map_text(&self, mut f: impl FnMut(&str) -> String) -> Corpus {
        Corpus {
            utterances: self
                .utterances
                .iter()
                .map(|u| Utterance {
                    text: f(&u.text),
                    ..u.clone()
                })
                .collect(),
        }
    }

    /// Serializes as JSON Lines, one utterance per line, LF terminated.
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for utt in &self.utterances {
            serde_json::to_writer(&mut out, utt)?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn to_jsonl_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_jsonl(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("serde_json emits UTF-8")
    }
}

impl<'a> IntoIterator for &'a Corpus {
    type Item = &'a Utterance;
    type IntoIter = std::slice::Iter<'a, Utterance>;

    fn into_iter(self) -> Self::IntoIter {
        self.utterances.iter()
    }
}

fn validate(utt: &Utterance, line: usize) -> Result<()> {
    if utt.id.is_empty() {
        return Err(Error::MalformedLine {
            line,
            message: "empty id".into(),
        });
    }
    if let Some(d) = utt.duration_s {
        if !(d >= 0.0) || !d.is_finite() {
            return Err(Error::MalformedLine {
                line,
                message: format!("duration_s must be a finite non-negative number, got {d}"),
            });
        }
    }
    Ok(())
}

/// Parses JSON Lines text. Whitespace-only lines are skipped; line numbers
/// in errors refer to physical lines.
pub fn parse_corpus(text: &str) -> Result<Corpus> {
    let mut utterances = Vec::new();
    let mut seen: HashMap<String, usize> = HashMap::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let utt: Utterance = serde_json::from_str(line).map_err(|e| Error::MalformedLine {
            line: lineno,
            message: e.to_string(),
        })?;
        validate(&utt, lineno)?;
        if let Some(first) = seen.insert(utt.id.clone(), lineno) {
            return Err(Error::DuplicateId {
                id: utt.id,
                first,
                second: lineno,
            });
        }
        utterances.push(utt);
    }
    Ok(Corpus { utterances })
}

pub fn load_corpus(path: impl AsRef<Path>) -> Result<Corpus> {
    let text = read_utf8(path.as_ref())?;
    parse_corpus(&text)
}

pub fn write_corpus(corpus: &Corpus, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, corpus.to_jsonl_string()).map_err(|e| Error::io(path, e))
}

/// A segment-aligned text file: hypotheses or references.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SegmentFile {
    pub lines: Vec<String>,
}

impl SegmentFile {
    pub fn new(lines: Vec<String>) -> Self {
        SegmentFile { lines }
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.lines.iter().map(String::as_str)
    }

    pub fn map(&self, f: impl FnMut(&str) -> String) -> SegmentFile {
        SegmentFile {
            lines: self.iter().map(f).collect(),
        }
    }

    /// Renders with LF terminators, one per segment.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.lines.iter().map(|l| l.len() + 1).sum());
        for line in &self.lines {
            out.push_str(line);
            out.push('\n');
        }
        out
    }
}

impl<S: Into<String>> FromIterator<S> for SegmentFile {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        SegmentFile {
            lines: iter.into_iter().map(Into::into).collect(),
        }
    }
}

/// Splits on LF or CRLF; a final terminator is optional.
pub fn parse_segments(text: &str) -> SegmentFile {
    SegmentFile {
        lines: text.lines().map(str::to_owned).collect(),
    }
}

pub fn load_segments(path: impl AsRef<Path>) -> Result<SegmentFile> {
    Ok(parse_segments(&read_utf8(path.as_ref())?))
}

pub fn write_segments(segments: &SegmentFile, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, segments.to_text()).map_err(|e| Error::io(path, e))
}

pub(crate) fn read_utf8(path: &Path) -> Result<String> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    String::from_utf8(bytes).map_err(|e| Error::InvalidUtf8 {
        path: path.to_path_buf(),
        offset: e.utf8_error().valid_up_to(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_in_file_order() {
        let corpus =
            parse_corpus("{\"id\":\"a\",\"text\":\"hallo\"}\n{\"id\":\"b\",\"text\":\"welt\",\"duration_s\":2.0}\n")
                .unwrap();
        let ids: Vec<_> = corpus.iter().map(|u| u.id.as_str()).collect();
        assert_eq!(ids, ["a", "b"]);
        assert_eq!(corpus.utterances()[0].source, Source::Other);
        assert_eq!(corpus.utterances()[1].duration_s, Some(2.0));
    }

    #[test]
    fn empty_file_is_empty_corpus() {
        assert!(parse_corpus("").unwrap().is_empty());
    }

    #[test]
    fn duplicate_id_names_both_lines() {
        let err = parse_corpus("{\"id\":\"a\",\"text\":\"x\"}\n{\"id\":\"a\",\"text\":\"y\"}\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("duplicate id 'a'"), "{msg}");
        assert!(msg.contains("lines 1 and 2"), "{msg}");
    }

    #[test]
    fn malformed_json_names_line() {
        let err = parse_corpus("{\"id\":\"a\",\"text\":\"x\"}\n{not json}\n").unwrap_err();
        assert!(matches!(err, Error::MalformedLine { line: 2, .. }), "{err}");
        let err = parse_corpus("{\"id\":\"a\"}\n").unwrap_err();
        assert!(matches!(err, Error::MalformedLine { line: 1, .. }), "{err}");
    }

    #[test]
    fn rejects_negative_duration_and_empty_id() {
        assert!(parse_corpus("{\"id\":\"a\",\"text\":\"x\",\"duration_s\":-1}").is_err());
        assert!(parse_corpus("{\"id\":\"\",\"text\":\"x\"}").is_err());
    }

    #[test]
    fn unknown_fields_ignored_and_source_parsed() {
        let c = parse_corpus("{\"id\":\"a\",\"text\":\"x\",\"source\":\"FN\",\"speaker\":3}").unwrap();
        assert_eq!(c.utterances()[0].source, Source::Fn);
    }

    #[test]
    fn invalid_utf8_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.txt");
        fs::write(&path, b"ok\n\xff\xfe\n").unwrap();
        assert!(matches!(
            load_segments(&path),
            Err(Error::InvalidUtf8 { offset: 3, .. })
        ));
        assert!(matches!(load_corpus(&path), Err(Error::InvalidUtf8 { .. })));
    }

    #[test]
    fn segments_are_verbatim() {
        assert_eq!(parse_segments("a b\nc d\n").lines, ["a b", "c d"]);
        assert!(parse_segments("").is_empty());
        assert_eq!(parse_segments("x\n\ny").lines, ["x", "", "y"]);
        assert_eq!(parse_segments("x\r\n y \r\n").lines, ["x", " y "]);
    }

    #[test]
    fn corpus_round_trip_through_file() {
        let corpus = Corpus::new(vec![
            Utterance::new("a", "tab\there \"quoted\"")
                .with_source(Source::Srf)
                .with_duration(1.25),
            Utterance::new("b", "ümlaut ß")
                .with_source(Source::Lex)
                .with_video("v1"),
        ])
        .unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        write_corpus(&corpus, &path).unwrap();
        assert_eq!(load_corpus(&path).unwrap(), corpus);
    }

    proptest! {
        #[test]
        fn segment_round_trip(lines in proptest::collection::vec("[^\n\r]{0,12}", 0..8)) {
            let seg = SegmentFile::new(lines.clone());
            prop_assert_eq!(parse_segments(&seg.to_text()).lines, lines);
        }
    }
}

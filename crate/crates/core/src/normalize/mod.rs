//! German text normalization.
//!
//! Stages run in a fixed order: abbreviations, dates, numbers, punctuation
//! and symbol removal, lowercasing, whitespace collapse. Each stage can be
//! switched off through [`NormConfig`].

mod german;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use unicode_general_category::{get_general_category, GeneralCategory};

use crate::error::{Error, Result};

pub use german::{
    days_in_month, is_leap_year, is_valid_date, spell_date_de, spell_digits_de, spell_number_de, spell_ordinal_de,
    spell_year_de, MAX_SPELLABLE,
};
pub(crate) use german::{SMALL, TENS, UNIT_STEMS};

const DEFAULT_ABBREVIATIONS: &str = include_str!("../../data/abbreviations_de.tsv");

/// Abbreviation → expansion pairs, matched longest key first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbbrevTable {
    // sorted by descending key length, then key
    entries: Vec<(String, String)>,
}

impl AbbrevTable {
    pub fn new(entries: impl IntoIterator<Item = (String, String)>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (key, value) in entries {
            if key.is_empty() || value.trim().is_empty() {
                return Err(Error::Config(format!("empty abbreviation entry '{key}'")));
            }
            // A key made of lowercase letters could match normalized output,
            // and re-normalizing would expand it again.
            if key.chars().all(|c| c.is_lowercase() || c.is_whitespace()) {
                return Err(Error::Config(format!(
                    "abbreviation '{key}' needs an uppercase letter, digit or punctuation"
                )));
            }
            if !seen.insert(key.clone()) {
                return Err(Error::Config(format!("duplicate abbreviation '{key}'")));
            }
            out.push((key, value));
        }
        out.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(&b.0)));
        Ok(AbbrevTable { entries: out })
    }

    pub fn empty() -> Self {
        AbbrevTable { entries: Vec::new() }
    }

    /// Parses a two-column TSV file. Blank lines and `#` comments are skipped.
    pub fn from_tsv(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('\t').ok_or_else(|| {
                Error::Config(format!(
                    "abbreviation table line {}: expected two tab-separated columns",
                    idx + 1
                ))
            })?;
            entries.push((key.to_owned(), value.trim().to_owned()));
        }
        Self::new(entries)
    }

    pub fn load(path: impl AsRef<std::path::Path>) -> Result<Self> {
        Self::from_tsv(&crate::corpus::read_utf8(path.as_ref())?)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    /// Replaces every abbreviation that stands at a word boundary.
    pub fn expand(&self, text: &str) -> String {
        if self.entries.is_empty() {
            return text.to_owned();
        }
        let mut out = String::with_capacity(text.len());
        let mut pos = 0;
        let mut prev: Option<char> = None;
        while pos < text.len() {
            let rest = &text[pos..];
            let hit = self.entries.iter().find(|(key, _)| {
                rest.starts_with(key.as_str()) && at_boundary(prev, key, rest[key.len()..].chars().next())
            });
            match hit {
                Some((key, value)) => {
                    let next = rest[key.len()..].chars().next();
                    push_separated(&mut out, value, next);
                    pos += key.len();
                    prev = key.chars().next_back();
                }
                None => {
                    let c = rest.chars().next().expect("pos is inside text");
                    out.push(c);
                    pos += c.len_utf8();
                    prev = Some(c);
                }
            }
        }
        out
    }
}

impl Default for AbbrevTable {
    /// The bundled German subtitle abbreviations.
    fn default() -> Self {
        Self::from_tsv(DEFAULT_ABBREVIATIONS).expect("bundled abbreviation table is valid")
    }
}

/// Appends `words`, adding a space on either side where it would otherwise
/// fuse with a neighbouring letter or digit.
fn push_separated(out: &mut String, words: &str, next: Option<char>) {
    if out.chars().next_back().is_some_and(char::is_alphanumeric) {
        out.push(' ');
    }
    out.push_str(words);
    if next.is_some_and(char::is_alphanumeric) {
        out.push(' ');
    }
}

// Alphanumeric key edges must not touch other alphanumerics.
fn at_boundary(prev: Option<char>, key: &str, next: Option<char>) -> bool {
    let first = key.chars().next().expect("keys are nonempty");
    let last = key.chars().next_back().expect("keys are nonempty");
    let left_ok = !first.is_alphanumeric() || !prev.is_some_and(char::is_alphanumeric);
    let right_ok = !last.is_alphanumeric() || !next.is_some_and(char::is_alphanumeric);
    left_ok && right_ok
}

/// Which normalization stages run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct NormConfig {
    pub expand_abbrev: bool,
    pub expand_dates: bool,
    pub expand_numbers: bool,
    pub strip_punct: bool,
    pub lowercase: bool,
}

impl NormConfig {
    /// Every stage on.
    pub const FULL: NormConfig = NormConfig {
        expand_abbrev: true,
        expand_dates: true,
        expand_numbers: true,
        strip_punct: true,
        lowercase: true,
    };
}

impl Default for NormConfig {
    fn default() -> Self {
        Self::FULL
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum NumericKind {
    Integer,
    Decimal,
    Date,
}

/// A digit construct found by [`find_numeric_spans`]. `start..end` is a
/// byte range into the scanned text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NumericSpan {
    pub start: usize,
    pub end: usize,
    pub text: String,
    pub kind: NumericKind,
}

fn is_digit_at(bytes: &[u8], i: usize) -> bool {
    bytes.get(i).is_some_and(u8::is_ascii_digit)
}

fn digit_run(bytes: &[u8], i: usize) -> usize {
    bytes[i..].iter().take_while(|b| b.is_ascii_digit()).count()
}

/// Byte length of a thousands separator at `i`: `.`, thin space or narrow
/// no-break space.
fn separator_len(text: &str, i: usize) -> Option<usize> {
    let c = text.get(i..)?.chars().next()?;
    matches!(c, '.' | '\u{2009}' | '\u{202F}').then(|| c.len_utf8())
}

fn match_date(text: &str, start: usize) -> Option<(usize, u32, u32, u32)> {
    let b = text.as_bytes();
    let d = digit_run(b, start);
    if !(1..=2).contains(&d) || b.get(start + d) != Some(&b'.') {
        return None;
    }
    let m_start = start + d + 1;
    let m = digit_run(b, m_start);
    if !(1..=2).contains(&m) || b.get(m_start + m) != Some(&b'.') {
        return None;
    }
    let y_start = m_start + m + 1;
    if digit_run(b, y_start) != 4 {
        return None;
    }
    let end = y_start + 4;
    let day = text[start..start + d].parse().ok()?;
    let month = text[m_start..m_start + m].parse().ok()?;
    let year = text[y_start..end].parse().ok()?;
    is_valid_date(day, month, year).then_some((end, day, month, year))
}

fn match_number(text: &str, start: usize) -> (usize, NumericKind) {
    let b = text.as_bytes();
    let run = digit_run(b, start);
    let mut end = start + run;
    if run <= 3 {
        while let Some(sep) = separator_len(text, end) {
            let group = end + sep;
            if digit_run(b, group) == 3 {
                end = group + 3;
            } else {
                break;
            }
        }
    }
    if b.get(end) == Some(&b',') && is_digit_at(b, end + 1) {
        let frac = digit_run(b, end + 1);
        return (end + 1 + frac, NumericKind::Decimal);
    }
    (end, NumericKind::Integer)
}

/// Finds dates (`D.M.YYYY`, `DD.MM.YYYY`), decimals with a comma fraction
/// and integers (optionally grouped by `.` or thin spaces), left to right
/// and non-overlapping. Dates are tried first; a date-shaped string that is
/// not a real calendar date is scanned as numbers instead.
pub fn find_numeric_spans(text: &str) -> Vec<NumericSpan> {
    let b = text.as_bytes();
    let mut spans = Vec::new();
    let mut i = 0;
    while i < b.len() {
        if !b[i].is_ascii_digit() {
            i += 1;
            continue;
        }
        let (end, kind) = match match_date(text, i) {
            Some((end, ..)) => (end, NumericKind::Date),
            None => match_number(text, i),
        };
        spans.push(NumericSpan {
            start: i,
            end,
            text: text[i..end].to_owned(),
            kind,
        });
        i = end;
    }
    spans
}

fn spell_integer_text(span: &str) -> String {
    let digits: String = span.chars().filter(char::is_ascii_digit).collect();
    spell_digits_de(&digits)
}

fn spell_decimal_text(span: &str) -> String {
    let (int, frac) = span.split_once(',').expect("decimal spans contain a comma");
    let mut out = spell_integer_text(int);
    out.push_str(" komma");
    for d in frac.bytes() {
        out.push(' ');
        out.push_str(SMALL[(d - b'0') as usize]);
    }
    out
}

fn replace_spans(text: &str, mut f: impl FnMut(&NumericSpan) -> Option<String>) -> String {
    let mut out = String::with_capacity(text.len() * 2);
    let mut last = 0;
    for span in find_numeric_spans(text) {
        if let Some(words) = f(&span) {
            out.push_str(&text[last..span.start]);
            push_separated(&mut out, &words, text[span.end..].chars().next());
            last = span.end;
        }
    }
    out.push_str(&text[last..]);
    out
}

/// Spells every calendar date as `<ordinal day> <month> <year>`.
pub fn expand_dates(text: &str) -> String {
    replace_spans(text, |span| {
        (span.kind == NumericKind::Date).then(|| {
            let (end, day, month, year) = match_date(&span.text, 0).expect("scanner validated the date");
            debug_assert_eq!(end, span.text.len());
            spell_date_de(day, month, year).expect("scanner validated the date")
        })
    })
}

/// Spells integers and decimals. Dates still present (date expansion
/// switched off) are spelled component by component.
pub fn expand_numbers(text: &str) -> String {
    replace_spans(text, |span| {
        Some(match span.kind {
            NumericKind::Integer => spell_integer_text(&span.text),
            NumericKind::Decimal => spell_decimal_text(&span.text),
            NumericKind::Date => span
                .text
                .split('.')
                .map(spell_integer_text)
                .collect::<Vec<_>>()
                .join(" "),
        })
    })
}

fn is_apostrophe(c: char) -> bool {
    matches!(c, '\'' | '\u{2019}' | '\u{2018}' | '\u{02BC}' | '`' | '\u{00B4}')
}

/// Unicode punctuation (P*) or symbol (S*).
pub fn is_punct_or_symbol(c: char) -> bool {
    use GeneralCategory::*;
    matches!(
        get_general_category(c),
        ConnectorPunctuation
            | DashPunctuation
            | OpenPunctuation
            | ClosePunctuation
            | InitialPunctuation
            | FinalPunctuation
            | OtherPunctuation
            | MathSymbol
            | CurrencySymbol
            | ModifierSymbol
            | OtherSymbol
    )
}

/// Deletes apostrophes (`geht's` → `gehts`) and turns every other
/// punctuation or symbol character into a space.
pub fn strip_punctuation(text: &str) -> String {
    text.chars()
        .filter(|&c| !is_apostrophe(c))
        .map(|c| if is_punct_or_symbol(c) { ' ' } else { c })
        .collect()
}

/// Lowercases; letters without a lowercase mapping (`ℍ`, mathematical
/// capitals) become spaces.
pub fn lowercase(text: &str) -> String {
    text.to_lowercase()
        .chars()
        .map(|c| if c.is_uppercase() { ' ' } else { c })
        .collect()
}

pub fn collapse_whitespace(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Runs the enabled stages over `text`.
///
/// ```
/// use slt_core::normalize::{normalize_text, AbbrevTable, NormConfig};
/// let table = AbbrevTable::default();
/// assert_eq!(normalize_text("Er zahlt 42 Franken.", &table, &NormConfig::FULL), "er zahlt zweiundvierzig franken");
/// assert_eq!(normalize_text("Mrd.", &table, &NormConfig::FULL), "milliarden");
/// ```
pub fn normalize_text(text: &str, table: &AbbrevTable, cfg: &NormConfig) -> String {
    let mut s = if cfg.expand_abbrev {
        table.expand(text)
    } else {
        text.to_owned()
    };
    if cfg.expand_dates {
        s = expand_dates(&s);
    }
    if cfg.expand_numbers {
        s = expand_numbers(&s);
    }
    if cfg.strip_punct {
        s = strip_punctuation(&s);
    }
    if cfg.lowercase {
        s = lowercase(&s);
    }
    collapse_whitespace(&s)
}

/// Reusable normalizer bundling a table and a config.
#[derive(Debug, Clone, Default)]
pub struct Normalizer {
    pub table: AbbrevTable,
    pub config: NormConfig,
}

impl Normalizer {
    pub fn new(table: AbbrevTable, config: NormConfig) -> Self {
        Normalizer { table, config }
    }

    pub fn normalize(&self, text: &str) -> String {
        normalize_text(text, &self.table, &self.config)
    }

    pub fn normalize_corpus(&self, corpus: &crate::Corpus) -> crate::Corpus {
        corpus.map_text(|t| self.normalize(t))
    }
}

#[cfg(test)]
mod tests;

//! Rule-based inverse text normalization for German model output.
//!
//! This approximates a commercial display-formatting service with three
//! rules: number words become digits, the segment and every sentence start
//! are capitalized, and a final period is added. Nouns are not recased.

use crate::normalize::{SMALL, TENS, UNIT_STEMS};

/// Word for a trailing 1 that the parser accepts in a given position.
#[derive(Clone, Copy, PartialEq, Eq)]
enum One {
    Final,
    Stem,
    Feminine,
}

fn is_one(word: &str, one: One) -> bool {
    match one {
        One::Final => word == "eins",
        One::Stem => word == "ein",
        One::Feminine => word == "eine" || word == "ein",
    }
}

fn tens_value(word: &str) -> Option<u64> {
    (2..10).find(|&t| TENS[t] == word).map(|t| t as u64 * 10)
}

fn below_hundred(word: &str, one: One) -> Option<u64> {
    if is_one(word, one) {
        return Some(1);
    }
    if let Some(n) = (2..20).find(|&n| SMALL[n] == word) {
        return Some(n as u64);
    }
    if let Some(t) = tens_value(word) {
        return Some(t);
    }
    let (unit, tens) = word.split_once("und")?;
    let u = (1..10).find(|&u| UNIT_STEMS[u] == unit)?;
    Some(u as u64 + tens_value(tens)?)
}

fn below_thousand(word: &str, one: One) -> Option<u64> {
    let (hundreds, rest) = match word.find("hundert") {
        Some(pos) => {
            let stem = &word[..pos];
            let h = if stem.is_empty() {
                1
            } else {
                (1..10).find(|&d| UNIT_STEMS[d] == stem)? as u64
            };
            (h * 100, &word[pos + "hundert".len()..])
        }
        None => (0, word),
    };
    if rest.is_empty() {
        return (hundreds > 0).then_some(hundreds);
    }
    Some(hundreds + below_hundred(rest, one)?)
}

fn below_million(word: &str) -> Option<u64> {
    match word.find("tausend") {
        Some(pos) => {
            let head = &word[..pos];
            let tail = &word[pos + "tausend".len()..];
            let k = if head.is_empty() {
                1
            } else {
                below_thousand(head, One::Stem)?
            };
            let rest = if tail.is_empty() {
                0
            } else {
                below_thousand(tail, One::Final)?
            };
            Some(k * 1000 + rest)
        }
        None => below_thousand(word, One::Final),
    }
}

/// Parsing key for a token: Swiss spelling `ss` is read as `ß`.
fn key(token: &str) -> String {
    token.replace("ss", "ß")
}

const SCALES: [(&str, &str, u64); 2] = [
    ("milliarde", "milliarden", 1_000_000_000),
    ("million", "millionen", 1_000_000),
];

/// Longest number parse starting at `start`; returns the digit string and
/// the index after the last consumed token.
fn parse_number(tokens: &[String], start: usize) -> Option<(String, usize)> {
    let mut idx = start;
    let mut total = 0u64;
    let mut consumed_any = false;
    for (singular, plural, value) in SCALES {
        let Some(scale_word) = tokens.get(idx + 1) else { break };
        if scale_word != singular && scale_word != plural {
            continue;
        }
        let Some(k) = below_thousand(&tokens[idx], One::Feminine) else {
            continue;
        };
        if (k == 1) != (scale_word == singular) {
            continue;
        }
        total += k * value;
        idx += 2;
        consumed_any = true;
    }
    if let Some(word) = tokens.get(idx) {
        if !consumed_any && word == "null" {
            total = 0;
            idx += 1;
            consumed_any = true;
        } else if let Some(v) = below_million(word) {
            total += v;
            idx += 1;
            consumed_any = true;
        }
    }
    if !consumed_any {
        return None;
    }
    let mut digits = total.to_string();
    // decimal fraction: "komma" followed by single digit words
    if tokens.get(idx).is_some_and(|t| t == "komma") {
        let frac: Vec<usize> = tokens[idx + 1..]
            .iter()
            .map_while(|t| (0..10).find(|&d| SMALL[d] == t))
            .collect();
        if !frac.is_empty() {
            digits.push(',');
            digits.extend(frac.iter().map(|&d| char::from(b'0' + d as u8)));
            idx += 1 + frac.len();
        }
    }
    Some((digits, idx))
}

/// Replaces maximal runs of German number words with digits.
///
/// ```
/// use slt_core::itn::contract_numbers_de;
/// assert_eq!(contract_numbers_de("eintausendeins gäste"), "1001 gäste");
/// assert_eq!(contract_numbers_de("ein hund und eine katze"), "ein hund und eine katze");
/// ```
pub fn contract_numbers_de(text: &str) -> String {
    let raw: Vec<&str> = text.split_whitespace().collect();
    let keys: Vec<String> = raw.iter().map(|t| key(t)).collect();
    let mut out: Vec<String> = Vec::with_capacity(raw.len());
    let mut i = 0;
    while i < raw.len() {
        match parse_number(&keys, i) {
            Some((digits, end)) => {
                out.push(digits);
                i = end;
            }
            None => {
                out.push(raw[i].to_owned());
                i += 1;
            }
        }
    }
    out.join(" ")
}

fn is_sentence_end(c: char) -> bool {
    matches!(c, '.' | '!' | '?')
}

/// Contracts numbers, capitalizes sentence starts and ensures terminal
/// punctuation.
///
/// ```
/// use slt_core::itn::restore_display;
/// assert_eq!(restore_display("das kostet zweiundvierzig franken"), "Das kostet 42 franken.");
/// ```
pub fn restore_display(text: &str) -> String {
    let contracted = contract_numbers_de(text);
    if contracted.is_empty() {
        return contracted;
    }
    let mut out = String::with_capacity(contracted.len() + 1);
    let mut at_start = true;
    let mut prev: Option<char> = None;
    for c in contracted.chars() {
        if prev.is_some_and(is_sentence_end) && c == ' ' {
            at_start = true;
        }
        if at_start && c.is_alphabetic() {
            out.extend(c.to_uppercase());
            at_start = false;
        } else {
            if !c.is_whitespace() {
                at_start = false;
            }
            out.push(c);
        }
        prev = Some(c);
    }
    if !out.ends_with(is_sentence_end) {
        out.push('.');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normalize::spell_number_de;
    use proptest::prelude::*;

    #[test]
    fn contracts_examples() {
        assert_eq!(contract_numbers_de("zweiundvierzig"), "42");
        assert_eq!(contract_numbers_de("hallo welt"), "hallo welt");
        assert_eq!(contract_numbers_de("eintausendeins gäste"), "1001 gäste");
        assert_eq!(contract_numbers_de("null"), "0");
        assert_eq!(contract_numbers_de("eins"), "1");
        assert_eq!(contract_numbers_de("drei komma fünf prozent"), "3,5 prozent");
        assert_eq!(contract_numbers_de("komma fünf"), "komma 5");
        assert_eq!(contract_numbers_de("dreissig"), "30");
        assert_eq!(contract_numbers_de("zwei drei"), "2 3");
        assert_eq!(contract_numbers_de("hundert"), "100");
    }

    #[test]
    fn articles_are_left_alone() {
        assert_eq!(contract_numbers_de("ein"), "ein");
        assert_eq!(contract_numbers_de("eine"), "eine");
        assert_eq!(contract_numbers_de("eine frau und ein mann"), "eine frau und ein mann");
    }

    #[test]
    fn multiword_scales() {
        assert_eq!(contract_numbers_de("eine million"), "1000000");
        assert_eq!(contract_numbers_de("zwei millionen eins"), "2000001");
        assert_eq!(contract_numbers_de("fünf milliarden franken"), "5000000000 franken");
        assert_eq!(contract_numbers_de("zwei million"), "2 million");
        assert_eq!(contract_numbers_de("eine millionen"), "eine millionen");
    }

    #[test]
    fn malformed_runs_stay_words() {
        for w in [
            "zweiund",
            "undzwanzig",
            "hunderthundert",
            "tausendtausend",
            "einszwanzig",
        ] {
            assert_eq!(contract_numbers_de(w), w);
        }
    }

    #[test]
    fn scale_round_trip() {
        for n in [
            1_000_000u64,
            1_234_567,
            101_000_000,
            999_999_999_999,
            1_000_000_001,
            20_000_000_300,
        ] {
            assert_eq!(contract_numbers_de(&spell_number_de(n).unwrap()), n.to_string());
        }
    }

    #[test]
    fn display_examples() {
        assert_eq!(
            restore_display("das kostet zweiundvierzig franken"),
            "Das kostet 42 franken."
        );
        assert_eq!(restore_display(""), "");
        assert_eq!(restore_display("hallo"), "Hallo.");
        assert_eq!(restore_display("gut. und du"), "Gut. Und du.");
        assert_eq!(restore_display("wirklich?"), "Wirklich?");
        assert_eq!(restore_display("zwei hunde"), "2 hunde.");
    }

    proptest! {
        #[test]
        fn display_is_idempotent(words in proptest::collection::vec(
            prop_oneof![
                Just("ein".to_string()), Just("eine".to_string()), Just("million".to_string()),
                Just("komma".to_string()), Just("und".to_string()), Just("gut.".to_string()),
                (0u64..2_000_000).prop_map(|n| spell_number_de(n).unwrap()),
                "[a-zäöüß]{1,7}",
            ], 0..8)) {
            let once = restore_display(&words.join(" "));
            prop_assert_eq!(restore_display(&once), once);
        }

        #[test]
        fn non_number_tokens_preserved(words in proptest::collection::vec("[b-df-hj-np-tv-z]{1,6}", 0..8), n in 0u64..100_000) {
            // vowel-free filler can never be a number word
            let mut text = words.clone();
            text.insert(words.len() / 2, spell_number_de(n).unwrap());
            let out = contract_numbers_de(&text.join(" "));
            let mut expected = words.clone();
            expected.insert(words.len() / 2, n.to_string());
            prop_assert_eq!(out, expected.join(" "));
        }
    }
}

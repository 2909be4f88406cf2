//! German cardinal, ordinal and date spelling.
//!
//! Cardinals below one million are written as one compound word
//! (`zweitausendzweiundzwanzig`). Millions and milliards are separate,
//! inflected words: `eine million`, `zwei millionen dreihunderttausend`.

use crate::error::{Error, Result};

/// Largest value [`spell_number_de`] accepts.
pub const MAX_SPELLABLE: u64 = 999_999_999_999;

/// Compound-initial unit forms, indexed by value (`ein` for 1).
pub(crate) const UNIT_STEMS: [&str; 10] = [
    "", "ein", "zwei", "drei", "vier", "fünf", "sechs", "sieben", "acht", "neun",
];

/// Standalone words for 0..20.
pub(crate) const SMALL: [&str; 20] = [
    "null",
    "eins",
    "zwei",
    "drei",
    "vier",
    "fünf",
    "sechs",
    "sieben",
    "acht",
    "neun",
    "zehn",
    "elf",
    "zwölf",
    "dreizehn",
    "vierzehn",
    "fünfzehn",
    "sechzehn",
    "siebzehn",
    "achtzehn",
    "neunzehn",
];

pub(crate) const TENS: [&str; 10] = [
    "", "", "zwanzig", "dreißig", "vierzig", "fünfzig", "sechzig", "siebzig", "achtzig", "neunzig",
];

pub(crate) const MONTHS: [&str; 12] = [
    "januar",
    "februar",
    "märz",
    "april",
    "mai",
    "juni",
    "juli",
    "august",
    "september",
    "oktober",
    "november",
    "dezember",
];

/// How a trailing 1 is realized at the end of a compound.
#[derive(Clone, Copy, PartialEq, Eq)]
enum One {
    /// `eins`: a number that ends the word.
    Final,
    /// `ein`: a multiplier in front of `tausend`.
    Stem,
    /// `eine`: a multiplier in front of a feminine scale word.
    Feminine,
}

fn below_hundred(n: u64, one: One, out: &mut String) {
    debug_assert!((1..100).contains(&n));
    match n {
        1 => out.push_str(match one {
            One::Final => "eins",
            One::Stem => "ein",
            One::Feminine => "eine",
        }),
        2..=19 => out.push_str(SMALL[n as usize]),
        _ => {
            let (tens, units) = (n / 10, n % 10);
            if units > 0 {
                out.push_str(UNIT_STEMS[units as usize]);
                out.push_str("und");
            }
            out.push_str(TENS[tens as usize]);
        }
    }
}

fn below_thousand(n: u64, one: One, out: &mut String) {
    debug_assert!((1..1000).contains(&n));
    let (hundreds, rest) = (n / 100, n % 100);
    if hundreds > 0 {
        out.push_str(UNIT_STEMS[hundreds as usize]);
        out.push_str("hundert");
    }
    if rest > 0 {
        below_hundred(rest, one, out);
    }
}

fn below_million(n: u64, out: &mut String) {
    debug_assert!((1..1_000_000).contains(&n));
    let (thousands, rest) = (n / 1000, n % 1000);
    if thousands > 0 {
        below_thousand(thousands, One::Stem, out);
        out.push_str("tausend");
    }
    if rest > 0 {
        below_thousand(rest, One::Final, out);
    }
}

fn scale(count: u64, singular: &str, plural: &str, out: &mut String) {
    if !out.is_empty() {
        out.push(' ');
    }
    below_thousand(count, One::Feminine, out);
    out.push(' ');
    out.push_str(if count == 1 { singular } else { plural });
}

/// Spells `n` as a German cardinal.
///
/// ```
/// use slt_core::normalize::spell_number_de;
/// assert_eq!(spell_number_de(42).unwrap(), "zweiundvierzig");
/// assert_eq!(spell_number_de(1001).unwrap(), "eintausendeins");
/// assert_eq!(spell_number_de(2_000_001).unwrap(), "zwei millionen eins");
/// ```
pub fn spell_number_de(n: u64) -> Result<String> {
    if n > MAX_SPELLABLE {
        return Err(Error::NumberOutOfRange {
            value: n,
            max: MAX_SPELLABLE,
        });
    }
    if n == 0 {
        return Ok(SMALL[0].to_owned());
    }
    let mut out = String::new();
    let milliards = n / 1_000_000_000;
    let millions = n / 1_000_000 % 1000;
    let rest = n % 1_000_000;
    if milliards > 0 {
        scale(milliards, "milliarde", "milliarden", &mut out);
    }
    if millions > 0 {
        scale(millions, "million", "millionen", &mut out);
    }
    if rest > 0 {
        if !out.is_empty() {
            out.push(' ');
        }
        below_million(rest, &mut out);
    }
    Ok(out)
}

/// Spells a digit string of any length. Values in range go through
/// [`spell_number_de`]; longer strings are spelled in three-digit groups.
pub fn spell_digits_de(digits: &str) -> String {
    debug_assert!(digits.bytes().all(|b| b.is_ascii_digit()));
    let trimmed = digits.trim_start_matches('0');
    if trimmed.len() <= 12 {
        let n: u64 = trimmed.parse().unwrap_or(0);
        if let Ok(s) = spell_number_de(n) {
            return s;
        }
    }
    let head = trimmed.len() % 3;
    let mut groups = Vec::new();
    if head > 0 {
        groups.push(&trimmed[..head]);
    }
    groups.extend(
        trimmed.as_bytes()[head..]
            .chunks(3)
            .map(|c| std::str::from_utf8(c).expect("ascii digits")),
    );
    groups
        .iter()
        .map(|g| spell_number_de(g.parse().expect("at most three digits")).expect("below 1000"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Masculine nominative ordinal (`erster`, `dritter`, `zwanzigster`).
pub fn spell_ordinal_de(n: u64) -> Result<String> {
    let irregular = match n {
        1 => Some("erster"),
        3 => Some("dritter"),
        7 => Some("siebter"),
        8 => Some("achter"),
        _ => None,
    };
    if let Some(word) = irregular {
        return Ok(word.to_owned());
    }
    let mut word = spell_number_de(n)?;
    // compounds ending in 1/3/7/8 below 20 take the irregular stem too
    let last = n % 100;
    if n > 100 && matches!(last, 1 | 3 | 7 | 8) {
        let stem_len = match last {
            1 => "eins".len(),
            3 => "drei".len(),
            7 => "sieben".len(),
            _ => "acht".len(),
        };
        word.truncate(word.len() - stem_len);
        word.push_str(spell_ordinal_de(last)?.as_str());
        return Ok(word);
    }
    word.push_str(if n % 100 < 20 && n % 100 != 0 { "ter" } else { "ster" });
    Ok(word)
}

pub fn is_leap_year(year: u32) -> bool {
    (year % 4 == 0 && year % 100 != 0) || year % 400 == 0
}

pub fn days_in_month(month: u32, year: u32) -> Option<u32> {
    Some(match month {
        1 | 3 | 5 | 7 | 8 | 10 | 12 => 31,
        4 | 6 | 9 | 11 => 30,
        2 if is_leap_year(year) => 29,
        2 => 28,
        _ => return None,
    })
}

pub fn is_valid_date(day: u32, month: u32, year: u32) -> bool {
    day >= 1 && days_in_month(month, year).is_some_and(|max| day <= max)
}

/// Years 1100–1999 are read in hundreds (`neunzehnhundertachtzig`), all
/// others as plain cardinals.
pub fn spell_year_de(year: u32) -> String {
    if (1100..2000).contains(&year) {
        let mut out = String::new();
        below_hundred(u64::from(year / 100), One::Final, &mut out);
        out.push_str("hundert");
        if year % 100 > 0 {
            below_hundred(u64::from(year % 100), One::Final, &mut out);
        }
        out
    } else {
        spell_number_de(u64::from(year)).expect("u32 is within the spellable range")
    }
}

/// `<ordinal day> <month> <year>`, all lowercase.
///
/// ```
/// use slt_core::normalize::spell_date_de;
/// assert_eq!(spell_date_de(3, 10, 2022).unwrap(), "dritter oktober zweitausendzweiundzwanzig");
/// assert!(spell_date_de(29, 2, 2021).is_err());
/// ```
pub fn spell_date_de(day: u32, month: u32, year: u32) -> Result<String> {
    if !is_valid_date(day, month, year) {
        return Err(Error::InvalidDate { day, month, year });
    }
    Ok(format!(
        "{} {} {}",
        spell_ordinal_de(u64::from(day))?,
        MONTHS[month as usize - 1],
        spell_year_de(year)
    ))
}

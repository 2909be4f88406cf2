use std::collections::HashSet;

use proptest::prelude::*;

use super::*;

// Typed independently from a German grammar table; not generated from the
// speller's own word lists.
const REFERENCE_0_TO_100: [&str; 101] = [
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
    "zwanzig",
    "einundzwanzig",
    "zweiundzwanzig",
    "dreiundzwanzig",
    "vierundzwanzig",
    "fünfundzwanzig",
    "sechsundzwanzig",
    "siebenundzwanzig",
    "achtundzwanzig",
    "neunundzwanzig",
    "dreißig",
    "einunddreißig",
    "zweiunddreißig",
    "dreiunddreißig",
    "vierunddreißig",
    "fünfunddreißig",
    "sechsunddreißig",
    "siebenunddreißig",
    "achtunddreißig",
    "neununddreißig",
    "vierzig",
    "einundvierzig",
    "zweiundvierzig",
    "dreiundvierzig",
    "vierundvierzig",
    "fünfundvierzig",
    "sechsundvierzig",
    "siebenundvierzig",
    "achtundvierzig",
    "neunundvierzig",
    "fünfzig",
    "einundfünfzig",
    "zweiundfünfzig",
    "dreiundfünfzig",
    "vierundfünfzig",
    "fünfundfünfzig",
    "sechsundfünfzig",
    "siebenundfünfzig",
    "achtundfünfzig",
    "neunundfünfzig",
    "sechzig",
    "einundsechzig",
    "zweiundsechzig",
    "dreiundsechzig",
    "vierundsechzig",
    "fünfundsechzig",
    "sechsundsechzig",
    "siebenundsechzig",
    "achtundsechzig",
    "neunundsechzig",
    "siebzig",
    "einundsiebzig",
    "zweiundsiebzig",
    "dreiundsiebzig",
    "vierundsiebzig",
    "fünfundsiebzig",
    "sechsundsiebzig",
    "siebenundsiebzig",
    "achtundsiebzig",
    "neunundsiebzig",
    "achtzig",
    "einundachtzig",
    "zweiundachtzig",
    "dreiundachtzig",
    "vierundachtzig",
    "fünfundachtzig",
    "sechsundachtzig",
    "siebenundachtzig",
    "achtundachtzig",
    "neunundachtzig",
    "neunzig",
    "einundneunzig",
    "zweiundneunzig",
    "dreiundneunzig",
    "vierundneunzig",
    "fünfundneunzig",
    "sechsundneunzig",
    "siebenundneunzig",
    "achtundneunzig",
    "neunundneunzig",
    "einhundert",
];

#[test]
fn cardinals_match_reference_table() {
    for (n, word) in REFERENCE_0_TO_100.iter().enumerate() {
        assert_eq!(spell_number_de(n as u64).unwrap(), *word, "n = {n}");
    }
}

#[test]
fn composed_cardinals() {
    // hand-composed: hundreds stem + remainder, thousands stem + "tausend"
    let cases: &[(u64, &str)] = &[
        (101, "einhunderteins"),
        (111, "einhundertelf"),
        (999, "neunhundertneunundneunzig"),
        (1000, "eintausend"),
        (1001, "eintausendeins"),
        (2022, "zweitausendzweiundzwanzig"),
        (21_000, "einundzwanzigtausend"),
        (101_000, "einhunderteintausend"),
        (999_999, "neunhundertneunundneunzigtausendneunhundertneunundneunzig"),
        (1_000_000, "eine million"),
        (2_000_001, "zwei millionen eins"),
        (
            1_234_567,
            "eine million zweihundertvierunddreißigtausendfünfhundertsiebenundsechzig",
        ),
        (101_000_000, "einhunderteine millionen"),
        (1_000_000_000, "eine milliarde"),
        (
            999_999_999_999,
            "neunhundertneunundneunzig milliarden neunhundertneunundneunzig millionen \
             neunhundertneunundneunzigtausendneunhundertneunundneunzig",
        ),
    ];
    for &(n, word) in cases {
        assert_eq!(spell_number_de(n).unwrap(), word, "n = {n}");
    }
}

#[test]
fn out_of_range_number_is_an_error() {
    assert!(matches!(
        spell_number_de(MAX_SPELLABLE + 1),
        Err(Error::NumberOutOfRange { .. })
    ));
}

#[test]
fn spelling_is_injective_below_100k() {
    let mut seen = HashSet::new();
    for n in 0..100_000u64 {
        assert!(seen.insert(spell_number_de(n).unwrap()), "collision at {n}");
    }
}

#[test]
fn long_digit_strings_spell_groupwise() {
    assert_eq!(spell_digits_de("0042"), "zweiundvierzig");
    assert_eq!(spell_digits_de("000"), "null");
    assert_eq!(spell_digits_de("1000000000000"), "eins null null null null");
}

#[test]
fn dates() {
    assert_eq!(spell_date_de(1, 1, 2000).unwrap(), "erster januar zweitausend");
    assert_eq!(
        spell_date_de(3, 10, 2022).unwrap(),
        "dritter oktober zweitausendzweiundzwanzig"
    );
    assert_eq!(
        spell_date_de(31, 12, 1999).unwrap(),
        "einunddreißigster dezember neunzehnhundertneunundneunzig"
    );
    assert_eq!(spell_date_de(7, 3, 1100).unwrap(), "siebter märz elfhundert");
    assert_eq!(
        spell_date_de(20, 5, 1099).unwrap(),
        "zwanzigster mai eintausendneunundneunzig"
    );
    assert_eq!(
        spell_date_de(29, 2, 2024).unwrap(),
        "neunundzwanzigster februar zweitausendvierundzwanzig"
    );
    assert!(spell_date_de(29, 2, 2021).is_err());
    assert!(spell_date_de(29, 2, 1900).is_err());
    assert!(spell_date_de(29, 2, 2000).is_ok());
    assert!(spell_date_de(31, 4, 2022).is_err());
    assert!(spell_date_de(0, 1, 2022).is_err());
    assert!(spell_date_de(1, 13, 2022).is_err());
}

#[test]
fn ordinals() {
    let expected = [
        "erster",
        "zweiter",
        "dritter",
        "vierter",
        "fünfter",
        "sechster",
        "siebter",
        "achter",
        "neunter",
        "zehnter",
        "elfter",
        "zwölfter",
        "dreizehnter",
        "vierzehnter",
        "fünfzehnter",
        "sechzehnter",
        "siebzehnter",
        "achtzehnter",
        "neunzehnter",
        "zwanzigster",
        "einundzwanzigster",
    ];
    for (i, word) in expected.iter().enumerate() {
        assert_eq!(spell_ordinal_de(i as u64 + 1).unwrap(), *word);
    }
    assert_eq!(spell_ordinal_de(101).unwrap(), "einhunderterster");
    assert_eq!(spell_ordinal_de(100).unwrap(), "einhundertster");
}

fn kinds(text: &str) -> Vec<(String, NumericKind)> {
    find_numeric_spans(text).into_iter().map(|s| (s.text, s.kind)).collect()
}

#[test]
fn numeric_spans() {
    use NumericKind::*;
    assert_eq!(
        kinds("am 3.10.2022 kamen 1.000 gäste"),
        [("3.10.2022".into(), Date), ("1.000".into(), Integer)]
    );
    assert!(kinds("abc").is_empty());
    assert_eq!(kinds("3,5 prozent"), [("3,5".into(), Decimal)]);
    assert_eq!(kinds("03.10.2022"), [("03.10.2022".into(), Date)]);
    assert_eq!(
        kinds("1\u{2009}000\u{202F}000"),
        [("1\u{2009}000\u{202F}000".into(), Integer)]
    );
    assert_eq!(kinds("1.000,25"), [("1.000,25".into(), Decimal)]);
    // not a calendar date: scanned as numbers
    assert_eq!(
        kinds("32.13.2022"),
        [("32".into(), Integer), ("13".into(), Integer), ("2022".into(), Integer)]
    );
    // a grouping needs exactly three digits
    assert_eq!(kinds("1.0005"), [("1".into(), Integer), ("0005".into(), Integer)]);
    assert_eq!(kinds("1234.567"), [("1234".into(), Integer), ("567".into(), Integer)]);
    assert_eq!(kinds("im Jahr 2022."), [("2022".into(), Integer)]);
}

#[test]
fn spans_are_ordered_and_disjoint() {
    let text = "1.1.2000, 2,5 und 10.000 oder 7 am 29.2.2021";
    let spans = find_numeric_spans(text);
    for w in spans.windows(2) {
        assert!(w[0].end <= w[1].start);
    }
    for s in &spans {
        assert_eq!(&text[s.start..s.end], s.text);
    }
}

fn full(text: &str) -> String {
    normalize_text(text, &AbbrevTable::default(), &NormConfig::FULL)
}

#[test]
fn pipeline_examples() {
    assert_eq!(full("Mrd."), "milliarden");
    assert_eq!(full("Hallo, Welt!"), "hallo welt");
    assert_eq!(full("Er zahlt 42 Franken."), "er zahlt zweiundvierzig franken");
    assert_eq!(full("3,5 %"), "drei komma fünf prozent");
    assert_eq!(
        full("Am 3.10.2022 kamen 1.000 Gäste."),
        "am dritter oktober zweitausendzweiundzwanzig kamen eintausend gäste"
    );
    assert_eq!(full("Wie geht's?"), "wie gehts");
    assert_eq!(full("z.B. 5 Mrd. CHF"), "zum beispiel fünf milliarden franken");
    assert_eq!(full("Live-Untertitel"), "live untertitel");
    assert_eq!(full("ÄRGER über Straßen"), "ärger über straßen");
    assert_eq!(full("  "), "");
}

#[test]
fn abbreviations_respect_word_boundaries() {
    let t = AbbrevTable::default();
    assert_eq!(collapse_whitespace(&t.expand("Nr. 5")), "Nummer 5");
    assert_eq!(collapse_whitespace(&t.expand("Chr.")), "Chr.");
    assert_eq!(collapse_whitespace(&t.expand("CHFX")), "CHFX");
    assert_eq!(collapse_whitespace(&t.expand("42%")), "42 Prozent");
    // longest key wins
    assert_eq!(collapse_whitespace(&t.expand("z. B. heute")), "zum Beispiel heute");
}

#[test]
fn stages_can_be_disabled() {
    let t = AbbrevTable::default();
    let cfg = NormConfig {
        expand_numbers: false,
        ..NormConfig::FULL
    };
    assert_eq!(
        normalize_text("Am 1.1.2000 um 5", &t, &cfg),
        "am erster januar zweitausend um 5"
    );
    let cfg = NormConfig {
        expand_dates: false,
        ..NormConfig::FULL
    };
    assert_eq!(normalize_text("1.1.2000", &t, &cfg), "eins eins zweitausend");
    let cfg = NormConfig {
        lowercase: false,
        strip_punct: false,
        expand_abbrev: false,
        ..NormConfig::FULL
    };
    assert_eq!(normalize_text("Mrd.  42!", &t, &cfg), "Mrd. zweiundvierzig!");
}

#[test]
fn bundled_table_keys_cannot_survive_normalization() {
    let table = AbbrevTable::default();
    assert!(table.len() >= 30);
    assert_eq!(table.get("Mrd."), Some("Milliarden"));
    for (key, _) in table.iter() {
        assert!(
            key.chars()
                .any(|c| c.is_uppercase() || c.is_ascii_digit() || is_punct_or_symbol(c)),
            "key {key:?} could re-match normalized text"
        );
    }
}

#[test]
fn tsv_errors() {
    assert!(AbbrevTable::from_tsv("no tab here").is_err());
    assert!(AbbrevTable::from_tsv("a.\tx\na.\ty").is_err());
    assert!(AbbrevTable::from_tsv("a.\t ").is_err());
    assert!(AbbrevTable::from_tsv("usw\tund so weiter").is_err());
    assert!(AbbrevTable::from_tsv("USW\tund so weiter").is_ok());
    assert_eq!(AbbrevTable::from_tsv("# c\n\nx.\tex\n").unwrap().len(), 1);
}

#[test]
fn odd_uppercase_letters_are_removed() {
    assert_eq!(full("ℍallo 𝐀"), "allo");
}

fn noisy_text() -> impl Strategy<Value = String> {
    let pieces = prop_oneof![
        Just("Mrd.".to_string()),
        Just("z.B.".to_string()),
        Just("%".to_string()),
        Just("geht's".to_string()),
        Just("3.10.2022".to_string()),
        Just("1.000".to_string()),
        Just("3,5".to_string()),
        "[0-9]{1,15}",
        "[A-Za-zÄÖÜäöüß]{1,8}",
        "[ .,;:!?'\"()\\-/€$°*#]{1,3}",
        "\\PC{1,4}",
    ];
    proptest::collection::vec(pieces, 0..10).prop_map(|v| v.join(""))
}

proptest! {
    #[test]
    fn output_is_clean_and_idempotent(text in noisy_text()) {
        let once = full(&text);
        prop_assert!(!once.chars().any(|c| c.is_ascii_digit()), "{once:?}");
        prop_assert!(!once.chars().any(char::is_uppercase), "{once:?}");
        prop_assert!(!once.chars().any(is_punct_or_symbol), "{once:?}");
        prop_assert!(!once.contains("  "));
        prop_assert_eq!(full(&once), once);
    }

    #[test]
    fn case_and_punct_never_grow_vocabulary(lines in proptest::collection::vec("[A-Za-zä.,!' ]{0,20}", 0..12)) {
        let vocab = |ls: &[String]| ls.iter().flat_map(|l| l.split_whitespace().map(str::to_owned)).collect::<HashSet<_>>().len();
        let lowered: Vec<String> = lines.iter().map(|l| lowercase(l)).collect();
        prop_assert!(vocab(&lowered) <= vocab(&lines));
        // token-wise punctuation strip (the same many-to-one map applied per token)
        let stripped: Vec<String> = lines.iter().map(|l| {
            l.split_whitespace().map(|t| strip_punctuation(t).replace(' ', "")).collect::<Vec<_>>().join(" ")
        }).collect();
        prop_assert!(vocab(&stripped) <= vocab(&lines));
    }
}

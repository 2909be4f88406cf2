//! Vocabulary statistics before and after cleaning and normalization.

use slt_core::cleaning::{clean_corpus, CleanConfig, LanguageProfile};
use slt_core::normalize::Normalizer;
use slt_core::stats::{compare_stats, vocab_stats};
use slt_core::{Corpus, Source, Utterance};

fn main() -> slt_core::Result<()> {
    let lines = [
        ("s1", Source::Srf, "v1", 1320.0, "Guten Abend."),
        ("s2", Source::Srf, "v1", 960.0, "1:1-Untertitelung."),
        ("s3", Source::Srf, "v1", 2400.0, "Heute: 3 Unfälle auf der A1."),
        ("s4", Source::Srf, "v2", 1800.0, "*Musik*"),
        ("f1", Source::Fn, "v3", 2100.0, "Guten Abend!"),
        ("f2", Source::Fn, "v3", 3000.0, "Die Preise steigen um 3 Prozent."),
        ("f3", Source::Fn, "v3", 900.0, "#Wirtschaft"),
        ("l1", Source::Lex, "v4", 5.0, "Hund"),
        ("l2", Source::Lex, "v5", 4.0, "Katze"),
    ];
    let raw = Corpus::new(
        lines
            .iter()
            .map(|(id, src, video, secs, text)| {
                Utterance::new(*id, *text)
                    .with_source(*src)
                    .with_video(*video)
                    .with_duration(*secs)
            })
            .collect(),
    )?;

    let (cleaned, _) = clean_corpus(&raw, &CleanConfig::default(), &LanguageProfile::defaults());
    let cleaned = Normalizer::default().normalize_corpus(&cleaned);

    let before = vocab_stats(&raw);
    let after = vocab_stats(&cleaned);
    println!("raw\n{}", before.to_table());
    println!("cleaned and normalized\n{}", after.to_table());
    print!("{}", compare_stats(&before, &after).to_table());
    Ok(())
}

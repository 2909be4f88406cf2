//! Filters a small subtitle corpus and prints what happened to each line.

use slt_core::cleaning::{clean_corpus, report_jsonl, CleanConfig, CleanSummary, LanguageProfile};
use slt_core::{Corpus, Source, Utterance};

fn main() -> slt_core::Result<()> {
    let corpus = Corpus::new(vec![
        Utterance::new("srf-001", "Guten Abend, meine Damen und Herren.").with_source(Source::Srf),
        Utterance::new("srf-002", "1:1-Untertitelung.").with_source(Source::Srf),
        Utterance::new("srf-003", "#Tagesschau").with_source(Source::Srf),
        Utterance::new("srf-004", "*Musik* Das Wetter wird morgen sonnig.").with_source(Source::Srf),
        Utterance::new("fn-001", "Thank you and have a nice evening.").with_source(Source::Fn),
        Utterance::new("fn-002", "*Applaus*").with_source(Source::Fn),
    ])?;

    let (cleaned, outcomes) = clean_corpus(&corpus, &CleanConfig::default(), &LanguageProfile::defaults());

    print!("{}", report_jsonl(&outcomes));
    let summary = CleanSummary::of(&outcomes);
    println!(
        "\nkept {}, edited {}, dropped {}",
        summary.kept, summary.edited, summary.dropped
    );
    println!("\nsurviving corpus:");
    print!("{}", cleaned.to_jsonl_string());
    Ok(())
}

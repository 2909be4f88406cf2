//! Standard BLEU next to BLEU with stop words removed.

use slt_core::metrics::{
    bleu, count_stopwords, reduced_bleu, reduced_bleu_with_side, ReducedSide, Smoothing, StopList,
};
use slt_core::SegmentFile;

fn main() -> slt_core::Result<()> {
    let refs: SegmentFile = [
        "morgen scheint im süden die sonne",
        "der zug nach bern fällt heute aus",
        "die polizei sucht einen zeugen",
    ]
    .into_iter()
    .collect();
    let hyps: SegmentFile = [
        "morgen ist es im süden sonnig",
        "der zug nach zürich fährt heute nicht",
        "die polizei sucht zeugen",
    ]
    .into_iter()
    .collect();

    let stops = StopList::default();
    println!("stop list: {} entries", stops.len());
    let share = count_stopwords(&hyps, &stops);
    println!(
        "hypothesis stop words: {} ({:.1}%)",
        share.count,
        share.fraction * 100.0
    );

    for smoothing in [Smoothing::None, Smoothing::Exp] {
        println!("\nsmoothing {smoothing:?}");
        println!("  standard:        {}", bleu(&hyps, &refs, smoothing)?.summary());
        println!(
            "  reduced:         {}",
            reduced_bleu(&hyps, &refs, &stops, smoothing)?.summary()
        );
        let hyp_only = reduced_bleu_with_side(&hyps, &refs, &stops, smoothing, ReducedSide::Hyp)?;
        println!("  reduced hyp-only: {}", hyp_only.summary());
    }
    Ok(())
}

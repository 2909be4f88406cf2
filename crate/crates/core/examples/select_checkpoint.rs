//! Picks a checkpoint by reduced BLEU where standard BLEU would disagree.

use slt_core::metrics::{select_checkpoint, Smoothing, StopList};
use slt_core::SegmentFile;

fn main() -> slt_core::Result<()> {
    let refs: SegmentFile = [
        "der hund und die katze sind in dem garten",
        "ich sehe den zug und die bahn am see",
    ]
    .into_iter()
    .collect();
    // Learned the function words, not the content.
    let step_4000: SegmentFile = [
        "der fisch und die maus sind in dem haus",
        "ich sehe den berg und die sonne am fluss",
    ]
    .into_iter()
    .collect();
    // Gets the content, drops the glue.
    let step_9000: SegmentFile = ["hund katze garten", "sehe zug bahn see"].into_iter().collect();

    let candidates = vec![("step-4000".to_owned(), step_4000), ("step-9000".to_owned(), step_9000)];
    let report = select_checkpoint(&candidates, &refs, &StopList::default(), Smoothing::Exp)?;
    print!("{}", report.to_table());
    Ok(())
}

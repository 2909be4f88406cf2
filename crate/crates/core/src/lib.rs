//! Text-side tooling for sign language translation corpora.
//!
//! The crate covers the stages that sit around a sign-to-text model:
//!
//! - [`corpus`]: JSON Lines corpora and plain-text segment files.
//! - [`cleaning`]: drop subtitle noise (agency status lines, hashtag
//!   annotations, foreign-language lines) and strip `* sound *` spans.
//! - [`normalize`]: German text normalization (abbreviations, dates,
//!   numbers, punctuation, case).
//! - [`stats`]: vocabulary, singleton and duration accounting.
//! - [`metrics`]: corpus BLEU, stop-word-reduced BLEU and checkpoint
//!   selection.
//! - [`itn`]: rule-based restoration of display formatting.
//! - [`frameplan`]: window and padding geometry for video feature
//!   extractors.
//! - [`cli`]: the `slt` command line front end.
//!
//! Runnable walkthroughs for each stage live in `examples/`.

pub mod cleaning;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod frameplan;
pub mod itn;
pub mod metrics;
pub mod normalize;
pub mod stats;

pub use corpus::{Corpus, SegmentFile, Source, Utterance};
pub use error::{Error, Result};

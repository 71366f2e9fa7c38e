//! Generalised arrangements of pseudolines, encoded as wiring-diagram words,
//! and the domains of linear orders they induce.
//!
//! A word is a sequence of crossing levels. Sweeping it from a left boundary
//! column yields chamber sets, whose maximal chains (flags) are read off as
//! linear orders. The resulting domain can then be classified: Condorcet,
//! peak-pit, Arrow's single-peaked, maximal width, maximal Condorcet.
//!
//! ```
//! use wiring_domains::{ArrangementWord, Arrangement};
//!
//! let word = ArrangementWord::parse("s1 s2 s1", 3).unwrap();
//! let arr = Arrangement::with_identity(word);
//! let domain = arr.domain();
//! assert_eq!(domain.to_lines(), vec!["123", "213", "231", "321"]);
//! ```

pub mod analysis;
pub mod builder;
pub mod chamber;
pub mod cli;
mod error;
pub mod limits;
pub mod order;
pub mod render;
pub mod report;
pub mod tameness;
pub mod verify;
pub mod word;

pub use analysis::{NeverCondition, TripleWitness, Verdict};
pub use chamber::{ChamberIdeal, Flag};
pub use error::{Error, Result};
pub use limits::Limits;
pub use order::{Domain, Label, LinearOrder};
pub use tameness::{TameWitness, TamenessRule, TamenessVerdict};
pub use word::{Arrangement, ArrangementWord, CrossingEvent, TrackOrder};

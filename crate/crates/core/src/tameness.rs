//! Tameness: every pair of lines that crosses more than once does so always
//! at the same level.
//!
//! The level of a crossing is compared as the set of lines passing above the
//! crossing point. Two crossings on the same track but with different lines
//! above them are at different levels: some third line separates them, and
//! on that line triple they sit on different tracks. Equivalently, a word is
//! tame iff each of its three-line sub-arrangements is tame on track indices.
//! The bare track-index comparison is available as [`TamenessRule::TrackIndex`].

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::chamber::set_string;
use crate::error::{Error, Result};
use crate::order::Label;
use crate::word::Arrangement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TamenessRule {
    /// Same set of lines above every crossing of the pair.
    #[default]
    LinesAbove,
    /// Same track index (letter value) for every crossing of the pair.
    TrackIndex,
}

/// A pair crossing at more than one level.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TameWitness {
    pub pair: (Label, Label),
    /// Letter values of the pair's crossings.
    pub levels: BTreeSet<usize>,
    /// Distinct sets of lines above the pair's crossings, as label strings.
    pub lines_above: BTreeSet<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TamenessVerdict {
    pub tame: bool,
    /// All offending pairs, ordered by pair.
    pub witnesses: Vec<TameWitness>,
}

pub fn is_tame(arr: &Arrangement) -> TamenessVerdict {
    is_tame_with(arr, TamenessRule::default())
}

/// Letter values and lines-above sets seen for one pair.
type PairLevels = (BTreeSet<usize>, BTreeSet<BTreeSet<Label>>);

pub fn is_tame_with(arr: &Arrangement, rule: TamenessRule) -> TamenessVerdict {
    let mut by_pair: BTreeMap<(Label, Label), PairLevels> = BTreeMap::new();
    let mut col = arr.left().lines().to_vec();
    for &level in arr.word().letters() {
        let (a, b) = (col[level - 1], col[level]);
        let above: BTreeSet<Label> = col[..level - 1].iter().copied().collect();
        let entry = by_pair.entry((a.min(b), a.max(b))).or_default();
        entry.0.insert(level);
        entry.1.insert(above);
        col.swap(level - 1, level);
    }
    let witnesses: Vec<TameWitness> = by_pair
        .into_iter()
        .filter(|(_, (levels, above))| match rule {
            TamenessRule::LinesAbove => above.len() > 1,
            TamenessRule::TrackIndex => levels.len() > 1,
        })
        .map(|(pair, (levels, above))| TameWitness {
            pair,
            levels,
            lines_above: above.iter().map(set_string).collect(),
        })
        .collect();
    TamenessVerdict {
        tame: witnesses.is_empty(),
        witnesses,
    }
}

/// Greedily removes pairs of crossings of the same two lines while the
/// domain stays the same.
///
/// Candidates `(i, j)` are tried in lexicographic order of word positions;
/// after each accepted deletion the scan restarts. The result admits no
/// further deletion, so straightening it again returns it unchanged.
pub fn straighten(arr: &Arrangement) -> Result<Arrangement> {
    let verdict = is_tame(arr);
    if !verdict.tame {
        let w = &verdict.witnesses[0];
        return Err(Error::input(format!(
            "word is not tame: lines {} and {} cross below different line sets {:?}",
            w.pair.0, w.pair.1, w.lines_above
        )));
    }
    let target = arr.domain();
    let mut current = arr.clone();
    'restart: loop {
        let events = current.crossings();
        for i in 0..events.len() {
            for j in i + 1..events.len() {
                if events[i].pair != events[j].pair {
                    continue;
                }
                let candidate = Arrangement::new(
                    current.word().without_positions(i, j),
                    current.left().clone(),
                )?;
                if candidate.domain() == target {
                    current = candidate;
                    continue 'restart;
                }
            }
        }
        return Ok(current);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::ArrangementWord;

    fn arr(letters: &[usize], n: usize) -> Arrangement {
        Arrangement::with_identity(ArrangementWord::new(n, letters.to_vec()).unwrap())
    }

    #[test]
    fn untame_three_lines() {
        let v = is_tame(&arr(&[1, 2, 1, 2], 3));
        assert!(!v.tame);
        assert_eq!(v.witnesses.len(), 1);
        assert_eq!(v.witnesses[0].pair, (1, 2));
        assert_eq!(v.witnesses[0].levels, [1, 2].into());
        assert_eq!(
            v.witnesses[0].lines_above,
            ["".to_string(), "3".to_string()].into()
        );
        assert!(!is_tame_with(&arr(&[1, 2, 1, 2], 3), TamenessRule::TrackIndex).tame);
    }

    #[test]
    fn tame_examples() {
        assert!(is_tame(&arr(&[1, 2, 1, 3, 1, 2, 1], 4)).tame);
        assert!(is_tame(&arr(&[1, 1], 3)).tame);
        assert!(is_tame(&arr(&[], 1)).tame);
    }

    #[test]
    fn same_track_different_lines_above() {
        // lines 2 and 3 cross twice on track 2, below line 1 and then below line 4
        let a = arr(&[2, 1, 2, 3, 2, 1, 2], 4);
        assert!(is_tame_with(&a, TamenessRule::TrackIndex).tame);
        let v = is_tame(&a);
        assert!(!v.tame);
        assert_eq!(v.witnesses[0].pair, (2, 3));
        assert_eq!(v.witnesses[0].levels, [2].into());
        assert_eq!(
            v.witnesses[0].lines_above,
            ["1".to_string(), "4".to_string()].into()
        );
    }

    #[test]
    fn reports_every_offending_pair() {
        let v = is_tame(&arr(&[1, 2, 1, 2, 1, 2], 3));
        assert_eq!(v.witnesses.len(), 3, "{v:?}");
    }

    #[test]
    fn straighten_quadruple() {
        let out = straighten(&arr(&[1, 1, 1, 1], 2)).unwrap();
        assert_eq!(out.word().letters(), &[1, 1]);
        assert_eq!(out.domain().to_lines(), ["12", "21"]);
    }

    #[test]
    fn straighten_keeps_needed_crossings() {
        let a = arr(&[1, 2, 1], 3);
        assert_eq!(straighten(&a).unwrap(), a);
        let a = arr(&[1, 2, 1, 3, 1, 2, 1], 4);
        assert_eq!(straighten(&a).unwrap(), a);
    }

    #[test]
    fn straighten_rejects_untame() {
        assert!(straighten(&arr(&[1, 2, 1, 2], 3)).is_err());
    }
}

//! Wiring-diagram words and their sweeps.
//!
//! Track 1 is the top track. Letter `ℓ` swaps the lines on tracks `ℓ` and
//! `ℓ + 1`; that crossing is said to happen at level `ℓ`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::chamber::ChamberIdeal;
use crate::error::{Error, Result};
use crate::order::{join_labels, Domain, Label, LinearOrder};

/// A sequence of crossing levels over `n` tracks.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArrangementWord {
    n: usize,
    letters: Vec<usize>,
}

impl ArrangementWord {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        if n < 1 {
            return Err(Error::input("line count must be at least 1"));
        }
        if let Some(&bad) = letters.iter().find(|&&l| l < 1 || l >= n) {
            return Err(out_of_range(bad, n));
        }
        Ok(ArrangementWord { n, letters })
    }

    /// Parses whitespace-separated tokens `s<k>` or `<k>`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::input("line count must be at least 1"));
        }
        let letters = text
            .split_whitespace()
            .map(|tok| {
                let digits = tok.strip_prefix('s').unwrap_or(tok);
                let level: usize = digits
                    .parse()
                    .map_err(|_| Error::input(format!("token {tok:?} is not a level")))?;
                if level < 1 || level >= n {
                    return Err(out_of_range(level, n));
                }
                Ok(level)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ArrangementWord { n, letters })
    }

    pub fn empty(n: usize) -> Result<Self> {
        ArrangementWord::new(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The word with letters `i` and `j` removed.
    pub(crate) fn without_positions(&self, i: usize, j: usize) -> ArrangementWord {
        let letters = self
            .letters
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i && k != j)
            .map(|(_, &l)| l)
            .collect();
        ArrangementWord { n: self.n, letters }
    }

    /// Lexicographically least word in the commutation class, where letters
    /// `a`, `b` commute when `|a - b| >= 2`.
    pub fn canonical(&self) -> ArrangementWord {
        let mut rest = self.letters.clone();
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            // a letter can move to the front iff it commutes with everything before it
            let mut best: Option<usize> = None;
            for k in 0..rest.len() {
                let free = rest[..k].iter().all(|&p| p.abs_diff(rest[k]) >= 2);
                if free && best.is_none_or(|b| rest[k] < rest[b]) {
                    best = Some(k);
                }
            }
            let k = best.expect("the first letter is always free");
            out.push(rest.remove(k));
        }
        ArrangementWord {
            n: self.n,
            letters: out,
        }
    }

    /// Concatenation of words on the same track count.
    pub fn concat(&self, other: &ArrangementWord) -> Result<ArrangementWord> {
        if self.n != other.n {
            return Err(Error::input(format!(
                "cannot concatenate words on {} and {} tracks",
                self.n, other.n
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(ArrangementWord { n: self.n, letters })
    }
}

fn out_of_range(level: usize, n: usize) -> Error {
    if n < 2 {
        Error::input(format!(
            "level {level} out of range: a single line has no crossings"
        ))
    } else {
        Error::input(format!("level {level} out of range [1,{}]", n - 1))
    }
}

impl fmt::Display for ArrangementWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{l}")?;
        }
        Ok(())
    }
}

impl Serialize for ArrangementWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The lines met by a vertical line, top track first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TrackOrder(Vec<Label>);

impl TrackOrder {
    pub fn new(order: Vec<Label>) -> Result<Self> {
        if order.is_empty() {
            return Err(Error::input("a track order needs at least one line"));
        }
        if order.iter().collect::<BTreeSet<_>>().len() != order.len() {
            return Err(Error::input(format!(
                "track order {} repeats a line",
                join_labels(&order)
            )));
        }
        Ok(TrackOrder(order))
    }

    /// `(1, 2, …, n)`.
    pub fn identity(n: usize) -> TrackOrder {
        TrackOrder((1..=n as Label).collect())
    }

    /// Same text forms as [`LinearOrder::parse`].
    pub fn parse(text: &str) -> Result<Self> {
        Ok(TrackOrder(LinearOrder::parse(text)?.ranking().to_vec()))
    }

    pub fn lines(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Swaps tracks `level` and `level + 1` (1-based).
    pub fn swapped(&self, level: usize) -> TrackOrder {
        let mut v = self.0.clone();
        v.swap(level - 1, level);
        TrackOrder(v)
    }

    /// The column read top to bottom as a preference order.
    pub fn to_order(&self) -> LinearOrder {
        LinearOrder::from_vec_unchecked(self.0.clone())
    }

    pub fn label_set(&self) -> BTreeSet<Label> {
        self.0.iter().copied().collect()
    }
}

impl From<&LinearOrder> for TrackOrder {
    fn from(o: &LinearOrder) -> Self {
        TrackOrder(o.ranking().to_vec())
    }
}

impl fmt::Display for TrackOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_labels(&self.0))
    }
}

impl Serialize for TrackOrder {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// One crossing of the sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CrossingEvent {
    /// 1-based position in the word.
    pub index: usize,
    pub level: usize,
    /// The lines on tracks `level` and `level + 1` just before the crossing,
    /// smaller label first.
    pub pair: (Label, Label),
}

/// A word together with the column its lines enter from the left.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrangement {
    word: ArrangementWord,
    left: TrackOrder,
}

impl Arrangement {
    pub fn new(word: ArrangementWord, left: TrackOrder) -> Result<Self> {
        if word.n() != left.len() {
            return Err(Error::input(format!(
                "left order {left} has {} lines but the word is on {} tracks",
                left.len(),
                word.n()
            )));
        }
        Ok(Arrangement { word, left })
    }

    /// Left boundary `(1, 2, …, n)`.
    pub fn with_identity(word: ArrangementWord) -> Self {
        let left = TrackOrder::identity(word.n());
        Arrangement { word, left }
    }

    pub fn word(&self) -> &ArrangementWord {
        &self.word
    }

    pub fn left(&self) -> &TrackOrder {
        &self.left
    }

    pub fn n(&self) -> usize {
        self.word.n()
    }

    /// Every column of the sweep: `left`, then one column after each letter.
    pub fn sweep(&self) -> Vec<TrackOrder> {
        let mut cols = Vec::with_capacity(self.word.len() + 1);
        cols.push(self.left.clone());
        for &l in self.word.letters() {
            let next = cols.last().unwrap().swapped(l);
            cols.push(next);
        }
        cols
    }

    pub fn right(&self) -> TrackOrder {
        let mut col = self.left.0.clone();
        for &l in self.word.letters() {
            col.swap(l - 1, l);
        }
        TrackOrder(col)
    }

    pub fn crossings(&self) -> Vec<CrossingEvent> {
        let mut col = self.left.0.clone();
        let mut events = Vec::with_capacity(self.word.len());
        for (k, &l) in self.word.letters().iter().enumerate() {
            let (a, b) = (col[l - 1], col[l]);
            events.push(CrossingEvent {
                index: k + 1,
                level: l,
                pair: (a.min(b), a.max(b)),
            });
            col.swap(l - 1, l);
        }
        events
    }

    /// Crossing levels per unordered pair, in sweep order. Pairs that never
    /// cross are absent.
    pub fn levels_by_pair(&self) -> BTreeMap<(Label, Label), Vec<usize>> {
        let mut map: BTreeMap<(Label, Label), Vec<usize>> = BTreeMap::new();
        for ev in self.crossings() {
            map.entry(ev.pair).or_default().push(ev.level);
        }
        map
    }

    /// Every pair of lines crosses exactly once.
    pub fn is_classical(&self) -> bool {
        let n = self.n();
        if self.word.len() != n * (n - 1) / 2 {
            return false;
        }
        let by_pair = self.levels_by_pair();
        by_pair.len() == n * (n - 1) / 2 && by_pair.values().all(|v| v.len() == 1)
    }

    pub fn chamber_sets(&self) -> ChamberIdeal {
        ChamberIdeal::from_sweep(&self.sweep())
    }

    pub fn domain(&self) -> Domain {
        self.chamber_sets().domain()
    }
}

impl ArrangementWord {
    /// Whether the word is classical when swept from `(1, …, n)`.
    pub fn is_classical(&self) -> bool {
        Arrangement::with_identity(self.clone()).is_classical()
    }
}

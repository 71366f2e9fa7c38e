//! Exhaustive verification harnesses.
//!
//! Words are enumerated by length and then lexicographically. Work fans out
//! over a rayon pool; counterexamples are sorted before reporting, so the
//! report is independent of scheduling.

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{has_maximal_width, is_condorcet, is_maximal_condorcet, is_peak_pit};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::tameness::is_tame;
use crate::word::{Arrangement, ArrangementWord};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TameCounterexample {
    pub word: ArrangementWord,
    pub tame: bool,
    pub condorcet: bool,
    pub peak_pit: bool,
}

/// Outcome of checking tame ⟺ Condorcet (and tame ⟹ peak-pit) over all words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub max_len: usize,
    pub words_checked: u64,
    pub agreements: u64,
    pub tame_words: u64,
    pub counterexamples: Vec<TameCounterexample>,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ClassicalCounterexample {
    pub word: ArrangementWord,
    pub condorcet: bool,
    pub peak_pit: bool,
    pub maximal_width: bool,
    pub maximal_condorcet: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassicalReport {
    pub n: usize,
    pub classical_words: Vec<ArrangementWord>,
    pub counterexamples: Vec<ClassicalCounterexample>,
}

impl ClassicalReport {
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// The `index`-th word of length `len` over levels `1..n`, most significant letter first.
fn nth_word(n: usize, len: usize, mut index: u64) -> ArrangementWord {
    let base = (n - 1) as u64;
    let mut letters = vec![0; len];
    for slot in letters.iter_mut().rev() {
        *slot = (index % base) as usize + 1;
        index /= base;
    }
    ArrangementWord::new(n, letters).expect("letters in range")
}

fn words_of_len(n: usize, len: usize) -> u64 {
    if n < 2 {
        return u64::from(len == 0);
    }
    ((n - 1) as u64).pow(len as u32)
}

fn pool(workers: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        b = b.num_threads(w.max(1));
    }
    b.build()
        .map_err(|e| Error::input(format!("cannot start worker pool: {e}")))
}

fn check_tame_word(word: ArrangementWord) -> (bool, Option<TameCounterexample>) {
    let arr = Arrangement::with_identity(word);
    let tame = is_tame(&arr).tame;
    let domain = arr.domain();
    let condorcet = is_condorcet(&domain).holds();
    let peak_pit = is_peak_pit(&domain).holds();
    let bad = tame != condorcet || (tame && !peak_pit);
    let cx = bad.then(|| TameCounterexample {
        word: arr.word().clone(),
        tame,
        condorcet,
        peak_pit,
    });
    (tame, cx)
}

/// Compares tameness with the Condorcet property for every word on `n` lines
/// of length at most `max_len`, swept from `(1, …, n)`.
pub fn verify_tame_theorem(
    n: usize,
    max_len: usize,
    limits: &Limits,
    workers: Option<usize>,
) -> Result<VerificationReport> {
    if n < 1 {
        return Err(Error::input("line count must be at least 1"));
    }
    Limits::check("tame-theorem line count", n, limits.verify_n)?;
    Limits::check("tame-theorem word length", max_len, limits.verify_len)?;
    let pool = pool(workers)?;
    let mut report = VerificationReport {
        n,
        max_len,
        words_checked: 0,
        agreements: 0,
        tame_words: 0,
        counterexamples: Vec::new(),
    };
    for len in 0..=max_len {
        let count = words_of_len(n, len);
        let (tame, mut bad) = pool.install(|| {
            (0..count)
                .into_par_iter()
                .map(|i| check_tame_word(nth_word(n, len, i)))
                .map(|(t, cx)| (u64::from(t), cx.into_iter().collect::<Vec<_>>()))
                .reduce(
                    || (0, Vec::new()),
                    |(ta, mut a), (tb, b)| {
                        a.extend(b);
                        (ta + tb, a)
                    },
                )
        });
        bad.sort();
        report.words_checked += count;
        report.tame_words += tame;
        report.counterexamples.extend(bad);
    }
    report.agreements = report.words_checked - report.counterexamples.len() as u64;
    Ok(report)
}

fn check_classical_word(word: &ArrangementWord) -> Option<ClassicalCounterexample> {
    let domain = Arrangement::with_identity(word.clone()).domain();
    let condorcet = is_condorcet(&domain).holds();
    let peak_pit = is_peak_pit(&domain).holds();
    let maximal_width = has_maximal_width(&domain);
    let maximal_condorcet = condorcet
        && is_maximal_condorcet(&domain, &Limits::unbounded())
            .map(|v| v.holds())
            .unwrap_or(false);
    (!(condorcet && peak_pit && maximal_width && maximal_condorcet)).then(|| {
        ClassicalCounterexample {
            word: word.clone(),
            condorcet,
            peak_pit,
            maximal_width,
            maximal_condorcet,
        }
    })
}

/// Checks that every classical arrangement on `n` lines has a peak-pit
/// maximal Condorcet domain of maximal width.
pub fn verify_classical(
    n: usize,
    limits: &Limits,
    workers: Option<usize>,
) -> Result<ClassicalReport> {
    if n < 1 {
        return Err(Error::input("line count must be at least 1"));
    }
    Limits::check("classical line count", n, limits.verify_n)?;
    let len = n * (n - 1) / 2;
    let pool = pool(workers)?;
    let mut classical: Vec<ArrangementWord> = pool.install(|| {
        (0..words_of_len(n, len))
            .into_par_iter()
            .map(|i| nth_word(n, len, i))
            .filter(ArrangementWord::is_classical)
            .collect()
    });
    classical.sort();
    let mut counterexamples: Vec<ClassicalCounterexample> = pool.install(|| {
        classical
            .par_iter()
            .filter_map(check_classical_word)
            .collect()
    });
    counterexamples.sort();
    Ok(ClassicalReport {
        n,
        classical_words: classical,
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_order() {
        let words: Vec<String> = (0..4).map(|i| nth_word(3, 2, i).to_string()).collect();
        assert_eq!(words, ["s1 s1", "s1 s2", "s2 s1", "s2 s2"]);
        assert_eq!(words_of_len(1, 0), 1);
        assert_eq!(words_of_len(1, 3), 0);
    }

    #[test]
    fn empty_word_only() {
        let r = verify_tame_theorem(3, 0, &Limits::default(), Some(1)).unwrap();
        assert_eq!(r.words_checked, 1);
        assert_eq!(r.agreements, 1);
        let r = verify_tame_theorem(1, 5, &Limits::default(), Some(1)).unwrap();
        assert_eq!(r.words_checked, 1);
    }

    #[test]
    fn three_lines_up_to_four() {
        let r = verify_tame_theorem(3, 4, &Limits::default(), None).unwrap();
        assert_eq!(r.words_checked, 31);
        assert!(r.is_clean(), "{:?}", r.counterexamples);
        assert_eq!(
            r.agreements + r.counterexamples.len() as u64,
            r.words_checked
        );
    }

    #[test]
    fn guards() {
        assert!(verify_tame_theorem(5, 2, &Limits::default(), None).is_err());
        assert!(verify_tame_theorem(3, 9, &Limits::default(), None).is_err());
        assert!(verify_classical(5, &Limits::default(), None).is_err());
    }

    #[test]
    fn classical_counts() {
        let l = Limits::default();
        let r = verify_classical(2, &l, None).unwrap();
        assert_eq!(r.classical_words.len(), 1);
        let r = verify_classical(3, &l, None).unwrap();
        let words: Vec<String> = r.classical_words.iter().map(|w| w.to_string()).collect();
        assert_eq!(words, ["s1 s2 s1", "s2 s1 s2"]);
        assert!(r.is_clean());
        let r = verify_classical(1, &l, None).unwrap();
        assert_eq!(r.classical_words.len(), 1);
        assert!(r.is_clean());
    }
}

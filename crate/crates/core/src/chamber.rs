//! Chamber sets, the ideal they form, and its flags.
//!
//! The chamber below track `k` of a sweep column is labelled by the set of
//! the `k` lines above it, so every column contributes the full chain of its
//! top-`k` prefixes. Flags are all maximal chains of the resulting ideal.

use std::collections::{BTreeMap, BTreeSet};

use crate::order::{join_labels, Domain, Label, LinearOrder};
use crate::word::TrackOrder;

type Mask = u64;

/// Distinct chamber sets graded by cardinality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberIdeal {
    /// Sorted label universe; bit `i` of a mask stands for `alphabet[i]`.
    alphabet: Vec<Label>,
    grades: Vec<BTreeSet<Mask>>,
}

/// A maximal chain `∅ = F_0 ⊂ … ⊂ F_n` of chamber sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flag {
    chain: Vec<BTreeSet<Label>>,
}

impl Flag {
    pub fn chain(&self) -> &[BTreeSet<Label>] {
        &self.chain
    }

    /// The order listing elements as they join the chain.
    pub fn to_order(&self) -> LinearOrder {
        let ranking = self
            .chain
            .windows(2)
            .map(|w| *w[1].difference(&w[0]).next().expect("chain grows by one"))
            .collect();
        LinearOrder::from_vec_unchecked(ranking)
    }
}

impl ChamberIdeal {
    /// Collects the top-`k` prefix sets of every column, `k = 0..=n`.
    pub fn from_sweep(columns: &[TrackOrder]) -> ChamberIdeal {
        let first = columns.first().expect("a sweep has at least one column");
        let mut alphabet = first.lines().to_vec();
        alphabet.sort_unstable();
        assert!(alphabet.len() <= Mask::BITS as usize, "at most 64 lines");
        let bit: BTreeMap<Label, usize> =
            alphabet.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let n = alphabet.len();
        let mut grades = vec![BTreeSet::new(); n + 1];
        for col in columns {
            let mut m: Mask = 0;
            grades[0].insert(0);
            for (k, a) in col.lines().iter().enumerate() {
                m |= 1 << bit[a];
                grades[k + 1].insert(m);
            }
        }
        ChamberIdeal { alphabet, grades }
    }

    /// Line count.
    pub fn n(&self) -> usize {
        self.alphabet.len()
    }

    pub fn alphabet(&self) -> &[Label] {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.grades.iter().map(BTreeSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn decode(&self, m: Mask) -> BTreeSet<Label> {
        (0..self.alphabet.len())
            .filter(|i| m >> i & 1 == 1)
            .map(|i| self.alphabet[i])
            .collect()
    }

    fn encode(&self, set: &BTreeSet<Label>) -> Option<Mask> {
        set.iter().try_fold(0, |m, a| {
            self.alphabet.binary_search(a).ok().map(|i| m | 1 << i)
        })
    }

    pub fn contains(&self, set: &BTreeSet<Label>) -> bool {
        self.encode(set)
            .is_some_and(|m| self.grades.get(set.len()).is_some_and(|g| g.contains(&m)))
    }

    /// All members, by cardinality then by sorted-member order.
    pub fn sets(&self) -> Vec<BTreeSet<Label>> {
        self.grades
            .iter()
            .flat_map(|g| {
                let mut v: Vec<_> = g.iter().map(|&m| self.decode(m)).collect();
                v.sort();
                v
            })
            .collect()
    }

    /// Members of cardinality `k`.
    pub fn grade(&self, k: usize) -> Vec<BTreeSet<Label>> {
        let mut v: Vec<_> = self.grades[k].iter().map(|&m| self.decode(m)).collect();
        v.sort();
        v
    }

    /// Members as label strings (`""`, `"1"`, `"12"`, …), graded.
    pub fn set_strings(&self) -> Vec<String> {
        self.sets().iter().map(set_string).collect()
    }

    /// Diagnostic dump: one set per line, grouped by cardinality, `∅` for the empty set.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for k in 0..self.grades.len() {
            out.push_str(&format!("# {k}\n"));
            for s in self.grade(k) {
                if s.is_empty() {
                    out.push_str("∅\n");
                } else {
                    out.push_str(&set_string(&s));
                    out.push('\n');
                }
            }
        }
        out
    }

    /// Adjacency from each grade-`k` member to its grade-`k+1` supersets.
    fn up_links(&self) -> Vec<BTreeMap<Mask, Vec<Mask>>> {
        (0..self.alphabet.len())
            .map(|k| {
                self.grades[k]
                    .iter()
                    .map(|&lo| {
                        let ups = self.grades[k + 1]
                            .iter()
                            .copied()
                            .filter(|&hi| hi & lo == lo)
                            .collect();
                        (lo, ups)
                    })
                    .collect()
            })
            .collect()
    }

    /// Visits the mask chain of every flag.
    fn for_each_chain(&self, mut visit: impl FnMut(&[Mask])) {
        let links = self.up_links();
        let n = self.alphabet.len();
        let mut chain: Vec<Mask> = vec![0];
        // explicit stack of (grade, next candidate index)
        let mut cursor: Vec<usize> = vec![0];
        if n == 0 {
            visit(&chain);
            return;
        }
        while let Some(pos) = cursor.last_mut() {
            let k = chain.len() - 1;
            if k == n {
                visit(&chain);
                chain.pop();
                cursor.pop();
                continue;
            }
            let ups = &links[k][chain.last().unwrap()];
            if *pos < ups.len() {
                let next = ups[*pos];
                *pos += 1;
                chain.push(next);
                cursor.push(0);
            } else {
                chain.pop();
                cursor.pop();
            }
        }
    }

    pub fn flags(&self) -> Vec<Flag> {
        let mut out = Vec::new();
        self.for_each_chain(|c| {
            out.push(Flag {
                chain: c.iter().map(|&m| self.decode(m)).collect(),
            })
        });
        out
    }

    /// The orders corresponding to all flags.
    pub fn domain(&self) -> Domain {
        let mut orders = BTreeSet::new();
        self.for_each_chain(|c| {
            let ranking = c
                .windows(2)
                .map(|w| self.alphabet[(w[1] ^ w[0]).trailing_zeros() as usize])
                .collect();
            orders.insert(LinearOrder::from_vec_unchecked(ranking));
        });
        Domain::from_parts_unchecked(self.alphabet.iter().copied().collect(), orders)
    }
}

/// Sorted members joined in the order file convention.
pub fn set_string(set: &BTreeSet<Label>) -> String {
    join_labels(&set.iter().copied().collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{Arrangement, ArrangementWord};

    fn ideal(letters: &[usize], n: usize) -> ChamberIdeal {
        Arrangement::with_identity(ArrangementWord::new(n, letters.to_vec()).unwrap())
            .chamber_sets()
    }

    #[test]
    fn three_line_chambers() {
        let i = ideal(&[1, 2, 1], 3);
        assert_eq!(i.set_strings(), ["", "1", "2", "3", "12", "23", "123"]);
        assert_eq!(i.flags().len(), 4);
        assert!(i.contains(&[2, 3].into()));
        assert!(!i.contains(&[1, 3].into()));
    }

    #[test]
    fn empty_word_is_a_chain() {
        let i = ideal(&[], 3);
        assert_eq!(i.set_strings(), ["", "1", "12", "123"]);
        let f = i.flags();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].to_order().to_string(), "123");
    }

    #[test]
    fn four_line_double_crossing() {
        let i = ideal(&[1, 2, 1, 3, 1, 2, 1], 4);
        assert_eq!(
            i.set_strings(),
            ["", "1", "2", "3", "4", "12", "23", "24", "123", "234", "1234"]
        );
        assert_eq!(i.flags().len(), 8);
    }

    #[test]
    fn single_line() {
        let i = ideal(&[], 1);
        assert_eq!(i.domain().to_lines(), ["1"]);
    }

    #[test]
    fn dump_groups_by_grade() {
        let d = ideal(&[1], 2).dump();
        assert_eq!(d, "# 0\n∅\n# 1\n1\n2\n# 2\n12\n");
    }

    #[test]
    fn flags_and_domain_agree() {
        let i = ideal(&[1, 2, 1, 2], 3);
        let from_flags: BTreeSet<_> = i.flags().iter().map(Flag::to_order).collect();
        assert_eq!(&from_flags, i.domain().orders());
        assert_eq!(from_flags.len(), 6);
    }
}

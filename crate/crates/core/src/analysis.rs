//! Classifiers for domains of linear orders.
//!
//! Everything is decided triple by triple. For a triple `T` the restricted
//! orders occupy some of the nine (alternative, position) slots; each free
//! slot is a never-condition. A domain is Condorcet when every triple has a
//! free slot, peak-pit when every triple has a free top or bottom slot, and
//! Arrow's single-peaked when every triple has a free bottom slot.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::order::{Domain, Label, LinearOrder};

/// Position inside a triple restriction.
pub const TOP: u8 = 1;
pub const MIDDLE: u8 = 2;
pub const BOTTOM: u8 = 3;

/// `alternative` never occupies `position` within `triple`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct NeverCondition {
    pub triple: [Label; 3],
    pub alternative: Label,
    pub position: u8,
}

impl std::fmt::Display for NeverCondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [a, b, c] = self.triple;
        write!(f, "{}N{{{a},{b},{c}}}{}", self.alternative, self.position)
    }
}

/// A triple violating a property, with the domain's restriction to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleWitness {
    pub triple: [Label; 3],
    pub orders: Vec<LinearOrder>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

/// Domain orders as position tables over a sorted alphabet.
struct Indexed {
    alphabet: Vec<Label>,
    /// `rank[o][i]` is the 0-based rank of `alphabet[i]` in order `o`.
    rank: Vec<Vec<usize>>,
}

impl Indexed {
    fn new(d: &Domain) -> Self {
        let alphabet: Vec<Label> = d.alternatives().iter().copied().collect();
        let rank = d
            .orders()
            .iter()
            .map(|o| rank_table(&alphabet, o))
            .collect();
        Indexed { alphabet, rank }
    }

    fn triples(&self) -> impl Iterator<Item = [usize; 3]> + '_ {
        (0..self.alphabet.len())
            .tuple_combinations()
            .map(|(a, b, c)| [a, b, c])
    }

    fn labels(&self, t: [usize; 3]) -> [Label; 3] {
        t.map(|i| self.alphabet[i])
    }
}

fn rank_table(alphabet: &[Label], o: &LinearOrder) -> Vec<usize> {
    let mut r = vec![0; alphabet.len()];
    for (pos, a) in o.ranking().iter().enumerate() {
        let i = alphabet.binary_search(a).expect("order over the alphabet");
        r[i] = pos;
    }
    r
}

/// Slot bit for member `m` (0..3) of a triple at position `p` (0..3).
fn slot(m: usize, p: usize) -> u16 {
    1 << (3 * m + p)
}

const ALL_SLOTS: u16 = 0b111_111_111;

/// Occupied slots of one order on triple `t`.
fn order_slots(rank: &[usize], t: [usize; 3]) -> u16 {
    let mut members = [0usize, 1, 2];
    members.sort_by_key(|&m| rank[t[m]]);
    members
        .iter()
        .enumerate()
        .fold(0, |acc, (p, &m)| acc | slot(m, p))
}

fn occupied(ix: &Indexed, t: [usize; 3]) -> u16 {
    ix.rank.iter().fold(0, |acc, r| acc | order_slots(r, t))
}

fn conditions_from(labels: [Label; 3], occ: u16) -> Vec<NeverCondition> {
    let mut out = Vec::new();
    for p in 0..3 {
        for m in 0..3 {
            if occ & slot(m, p) == 0 {
                out.push(NeverCondition {
                    triple: labels,
                    alternative: labels[m],
                    position: p as u8 + 1,
                });
            }
        }
    }
    out
}

fn sorted_triple(d: &Domain, triple: [Label; 3]) -> Result<[Label; 3]> {
    let mut t = triple;
    t.sort_unstable();
    if t[0] == t[1] || t[1] == t[2] {
        return Err(Error::input(format!("{triple:?} is not a 3-element set")));
    }
    if let Some(a) = t.iter().find(|a| !d.alternatives().contains(a)) {
        return Err(Error::input(format!(
            "alternative {a} is not in the domain"
        )));
    }
    Ok(t)
}

/// All never-conditions the domain satisfies on `triple`, ordered by position then alternative.
pub fn never_conditions(d: &Domain, triple: [Label; 3]) -> Result<Vec<NeverCondition>> {
    let t = sorted_triple(d, triple)?;
    let ix = Indexed::new(d);
    let idx = t.map(|a| ix.alphabet.binary_search(&a).unwrap());
    Ok(conditions_from(t, occupied(&ix, idx)))
}

/// Never-conditions for every triple.
pub fn all_never_conditions(d: &Domain) -> BTreeMap<[Label; 3], Vec<NeverCondition>> {
    let ix = Indexed::new(d);
    ix.triples()
        .map(|t| {
            let labels = ix.labels(t);
            (labels, conditions_from(labels, occupied(&ix, t)))
        })
        .collect()
}

/// Checks that each triple has a free slot in `wanted`.
fn triple_property(d: &Domain, wanted: u16) -> Verdict<TripleWitness> {
    let ix = Indexed::new(d);
    for t in ix.triples() {
        let free = !occupied(&ix, t) & ALL_SLOTS;
        if free & wanted == 0 {
            let labels = ix.labels(t);
            let keep: BTreeSet<Label> = labels.into_iter().collect();
            let orders: BTreeSet<LinearOrder> =
                d.orders().iter().map(|o| o.restrict(&keep)).collect();
            return Verdict::Fails(TripleWitness {
                triple: labels,
                orders: orders.into_iter().collect(),
            });
        }
    }
    Verdict::Holds
}

fn position_mask(positions: &[u8]) -> u16 {
    positions
        .iter()
        .flat_map(|&p| (0..3).map(move |m| slot(m, p as usize - 1)))
        .fold(0, |a, b| a | b)
}

/// Every triple satisfies some never-condition.
pub fn is_condorcet(d: &Domain) -> Verdict<TripleWitness> {
    triple_property(d, ALL_SLOTS)
}

/// Every triple satisfies a never-top or never-bottom condition.
pub fn is_peak_pit(d: &Domain) -> Verdict<TripleWitness> {
    triple_property(d, position_mask(&[TOP, BOTTOM]))
}

/// Every triple satisfies a never-bottom condition.
pub fn is_arrow_sp(d: &Domain) -> Verdict<TripleWitness> {
    triple_property(d, position_mask(&[BOTTOM]))
}

/// Independent check: searches all 3-voter profiles for a majority cycle.
///
/// Returns the first offending profile (orders in domain order, repetition
/// allowed), or `None` when every profile has an acyclic majority relation.
pub fn majority_cycle_profile(d: &Domain, limits: &Limits) -> Result<Option<[LinearOrder; 3]>> {
    if d.len() > limits.oracle_domain {
        return Err(Error::Guard {
            what: "profile oracle domain size",
            detail: format!(
                "{} > {}; use the never-condition test instead",
                d.len(),
                limits.oracle_domain
            ),
        });
    }
    let orders: Vec<&LinearOrder> = d.orders().iter().collect();
    let alts: Vec<Label> = d.alternatives().iter().copied().collect();
    let positions: Vec<BTreeMap<Label, usize>> = orders
        .iter()
        .map(|o| {
            o.ranking()
                .iter()
                .enumerate()
                .map(|(p, &a)| (a, p))
                .collect()
        })
        .collect();
    for profile in (0..orders.len()).combinations_with_replacement(3) {
        let voters = profile.iter().map(|&v| &positions[v]).collect::<Vec<_>>();
        let beats = |x: Label, y: Label| voters.iter().filter(|v| v[&x] < v[&y]).count() >= 2;
        for (&a, &b, &c) in alts.iter().tuple_combinations() {
            let forward = beats(a, b) && beats(b, c) && beats(c, a);
            let backward = beats(b, a) && beats(c, b) && beats(a, c);
            if forward || backward {
                return Ok(Some([0, 1, 2].map(|v| orders[profile[v]].clone())));
            }
        }
    }
    Ok(None)
}

/// `true` iff no 3-voter profile over the domain has a majority cycle.
pub fn condorcet_profile_oracle(d: &Domain, limits: &Limits) -> Result<bool> {
    Ok(majority_cycle_profile(d, limits)?.is_none())
}

/// Some order and its complete reversal both belong to the domain.
pub fn has_maximal_width(d: &Domain) -> bool {
    d.orders().iter().any(|o| d.contains(&o.reversed()))
}

/// No order outside the domain can be added while staying Condorcet.
///
/// On failure the witness is the lexicographically first admissible extension.
pub fn is_maximal_condorcet(d: &Domain, limits: &Limits) -> Result<Verdict<LinearOrder>> {
    Limits::check(
        "maximality test alternative count",
        d.n(),
        limits.maximality_n,
    )?;
    if let Verdict::Fails(w) = is_condorcet(d) {
        return Err(Error::input(format!(
            "domain is not Condorcet (triple {:?}), maximality is undefined",
            w.triple
        )));
    }
    let ix = Indexed::new(d);
    let triples: Vec<[usize; 3]> = ix.triples().collect();
    let occ: Vec<u16> = triples.iter().map(|&t| occupied(&ix, t)).collect();
    for perm in ix.alphabet.iter().copied().permutations(ix.alphabet.len()) {
        let candidate = LinearOrder::from_vec_unchecked(perm);
        if d.contains(&candidate) {
            continue;
        }
        let rank = rank_table(&ix.alphabet, &candidate);
        let still_condorcet = triples
            .iter()
            .zip(&occ)
            .all(|(&t, &o)| (o | order_slots(&rank, t)) != ALL_SLOTS);
        if still_condorcet {
            return Ok(Verdict::Fails(candidate));
        }
    }
    Ok(Verdict::Holds)
}

/// Alternatives ranked last by some order.
pub fn terminals(d: &Domain) -> BTreeSet<Label> {
    d.orders().iter().filter_map(LinearOrder::bottom).collect()
}

/// Orders whose top and bottom are distinct terminals.
pub fn extremal_orders(d: &Domain) -> BTreeSet<LinearOrder> {
    let term = terminals(d);
    d.orders()
        .iter()
        .filter(|o| {
            let (top, bottom) = (o.top().unwrap(), o.bottom().unwrap());
            top != bottom && term.contains(&top) && term.contains(&bottom)
        })
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dom(orders: &[&str]) -> Domain {
        Domain::from_strs(orders.iter().copied()).unwrap()
    }

    fn d31() -> Domain {
        dom(&["123", "213", "231", "321"])
    }

    fn d42() -> Domain {
        dom(&[
            "1234", "2134", "2314", "3214", "2341", "3241", "2431", "4231",
        ])
    }

    #[test]
    fn restrictions_of_d42() {
        assert_eq!(d42().restrict(&[1, 2, 3].into()).unwrap(), d31());
        assert_eq!(
            d42().restrict(&[2, 3, 4].into()).unwrap(),
            dom(&["234", "324", "243", "423"])
        );
    }

    #[test]
    fn never_conditions_examples() {
        let nc = never_conditions(&d31(), [1, 2, 3]).unwrap();
        assert!(nc.contains(&NeverCondition {
            triple: [1, 2, 3],
            alternative: 2,
            position: BOTTOM
        }));
        // i=1, j=2, k=3 in {ijk, jik, kij, kji}
        let nc = never_conditions(&dom(&["123", "213", "312", "321"]), [3, 1, 2]).unwrap();
        assert_eq!(
            nc,
            vec![NeverCondition {
                triple: [1, 2, 3],
                alternative: 3,
                position: MIDDLE
            }]
        );
        assert_eq!(
            never_conditions(&dom(&["213"]), [1, 2, 3]).unwrap().len(),
            6
        );
        assert!(never_conditions(&d31(), [1, 1, 2]).is_err());
        assert!(never_conditions(&d31(), [1, 2, 4]).is_err());
    }

    #[test]
    fn condorcet_verdicts() {
        assert!(is_condorcet(&d31()).holds());
        assert!(is_condorcet(&d42()).holds());
        let six = dom(&["123", "213", "231", "321", "312", "132"]);
        let v = is_condorcet(&six);
        assert_eq!(v.witness().unwrap().triple, [1, 2, 3]);
        assert_eq!(v.witness().unwrap().orders.len(), 6);
    }

    #[test]
    fn profile_oracle() {
        let l = Limits::default();
        assert!(condorcet_profile_oracle(&d31(), &l).unwrap());
        assert!(condorcet_profile_oracle(&dom(&["123"]), &l).unwrap());
        let bad = dom(&["123", "213", "231", "321", "312", "132"]);
        let p = majority_cycle_profile(&bad, &l).unwrap().unwrap();
        let names: BTreeSet<String> = p.iter().map(|o| o.to_string()).collect();
        assert!(
            names == ["123", "231", "312"].map(String::from).into()
                || names == ["132", "213", "321"].map(String::from).into()
        );
        let tight = Limits {
            oracle_domain: 3,
            ..Limits::default()
        };
        assert!(matches!(
            condorcet_profile_oracle(&d31(), &tight),
            Err(Error::Guard { .. })
        ));
    }

    #[test]
    fn peak_pit_and_arrow() {
        assert!(is_peak_pit(&d42()).holds());
        assert!(!is_peak_pit(&dom(&["123", "213", "312", "321"])).holds());
        assert!(!is_peak_pit(&dom(&["123", "132", "213", "231", "312", "321"])).holds());
        assert!(is_arrow_sp(&d42()).holds());
        assert!(is_arrow_sp(&d31()).holds());
        let v = is_arrow_sp(&dom(&["123", "321", "213", "312"]));
        assert_eq!(v.witness().unwrap().triple, [1, 2, 3]);
        assert!(is_condorcet(&dom(&["123", "321", "213", "312"])).holds());
    }

    #[test]
    fn maximal_width() {
        assert!(has_maximal_width(&d31()));
        assert!(!has_maximal_width(&d42()));
        assert!(!has_maximal_width(&dom(&["12"])));
        assert!(has_maximal_width(&dom(&["1"])));
    }

    #[test]
    fn maximality() {
        let l = Limits::default();
        assert!(is_maximal_condorcet(&d42(), &l).unwrap().holds());
        assert!(is_maximal_condorcet(&d31(), &l).unwrap().holds());
        let v = is_maximal_condorcet(&dom(&["123"]), &l).unwrap();
        assert_eq!(v.witness().unwrap().to_string(), "132");
        let six = dom(&["123", "213", "231", "321", "312", "132"]);
        assert!(is_maximal_condorcet(&six, &l).is_err());
        let tight = Limits {
            maximality_n: 3,
            ..Limits::default()
        };
        assert!(is_maximal_condorcet(&d42(), &tight).is_err());
    }

    #[test]
    fn terminals_and_extremals() {
        assert_eq!(terminals(&d42()), [1, 4].into());
        let ext: Vec<String> = extremal_orders(&d42())
            .iter()
            .map(|o| o.to_string())
            .collect();
        assert_eq!(ext, ["1234", "4231"]);
        assert_eq!(terminals(&d31()), [1, 3].into());
        let ext: Vec<String> = extremal_orders(&d31())
            .iter()
            .map(|o| o.to_string())
            .collect();
        assert_eq!(ext, ["123", "321"]);
        assert_eq!(terminals(&dom(&["123"])), [3].into());
        assert!(extremal_orders(&dom(&["123"])).is_empty());
    }
}

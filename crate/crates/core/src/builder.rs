//! Representing maximal Arrow's single-peaked domains by generalised
//! arrangements.
//!
//! A maximal Arrow's single-peaked domain `D` has two terminals `t`, `t'`.
//! Dropping `t'` and dropping `t` give two smaller domains of the same kind
//! that share their restriction to the remaining alternatives. Their words
//! are glued with a single crossing on the bottom level: the first block
//! runs with `t'` parked on the bottom track, then `t'` and `t` swap, then
//! the second block runs with `t` parked on the bottom track.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use itertools::Itertools;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::analysis::{extremal_orders, is_arrow_sp, is_condorcet, is_maximal_condorcet};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::order::{Domain, Label, LinearOrder};
use crate::tameness::is_tame;
use crate::word::{Arrangement, ArrangementWord, TrackOrder};

/// Two sub-arrangements on `n - 1` tracks to be glued into one on `n` tracks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombineInputs {
    /// Realizes the domain without `t_prime`; its right column must end with `t`.
    pub w_a: ArrangementWord,
    pub left_a: TrackOrder,
    /// Realizes the domain without `t`.
    pub w_b: ArrangementWord,
    /// Must equal the right column of `w_a` with `t` replaced by `t_prime`.
    pub left_b: TrackOrder,
    pub t: Label,
    pub t_prime: Label,
}

impl CombineInputs {
    /// The left boundary `w_b` has to start from, given `w_a`.
    pub fn expected_left_b(
        w_a: &ArrangementWord,
        left_a: &TrackOrder,
        t_prime: Label,
    ) -> Result<TrackOrder> {
        let right_a = Arrangement::new(w_a.clone(), left_a.clone())?.right();
        let mut v = right_a.lines().to_vec();
        *v.last_mut().unwrap() = t_prime;
        TrackOrder::new(v)
    }
}

/// Glues `w_a · s_{n-1} · w_b`, swept from `left_a` extended by `t_prime` at the bottom.
pub fn combine_words(inp: &CombineInputs) -> Result<Arrangement> {
    let m = inp.w_a.n();
    if inp.w_b.n() != m {
        return Err(Error::input(format!(
            "blocks are on {} and {} tracks",
            m,
            inp.w_b.n()
        )));
    }
    if inp.t == inp.t_prime {
        return Err(Error::input("the two terminals must differ"));
    }
    let block_a = Arrangement::new(inp.w_a.clone(), inp.left_a.clone())?;
    if inp.left_a.lines().contains(&inp.t_prime) {
        return Err(Error::input(format!(
            "left boundary {} of the first block already contains {}",
            inp.left_a, inp.t_prime
        )));
    }
    let right_a = block_a.right();
    if right_a.lines().last() != Some(&inp.t) {
        return Err(Error::input(format!(
            "first block ends in column {right_a}; expected {} on the bottom track",
            inp.t
        )));
    }
    let expected = CombineInputs::expected_left_b(&inp.w_a, &inp.left_a, inp.t_prime)?;
    if inp.left_b != expected {
        return Err(Error::input(format!(
            "second block starts from {}, expected {expected}",
            inp.left_b
        )));
    }
    let n = m + 1;
    let mut left = inp.left_a.lines().to_vec();
    left.push(inp.t_prime);
    let mut letters = inp.w_a.letters().to_vec();
    letters.push(n - 1);
    letters.extend_from_slice(inp.w_b.letters());
    Arrangement::new(ArrangementWord::new(n, letters)?, TrackOrder::new(left)?)
}

/// Orders of `d_a` with `t_prime` appended, together with orders of `d_b` with `t` appended.
pub fn combine_domains(d_a: &Domain, d_b: &Domain, t: Label, t_prime: Label) -> Result<Domain> {
    let alts_a = d_a.alternatives();
    let alts_b = d_b.alternatives();
    if !alts_a.contains(&t) || alts_a.contains(&t_prime) {
        return Err(Error::input(format!(
            "first domain must contain {t} and not {t_prime}"
        )));
    }
    if !alts_b.contains(&t_prime) || alts_b.contains(&t) {
        return Err(Error::input(format!(
            "second domain must contain {t_prime} and not {t}"
        )));
    }
    let common: BTreeSet<Label> = alts_a.iter().copied().filter(|&a| a != t).collect();
    let common_b: BTreeSet<Label> = alts_b.iter().copied().filter(|&a| a != t_prime).collect();
    if common != common_b {
        return Err(Error::input("the domains differ outside the two terminals"));
    }
    if !common.is_empty() {
        let ea = d_a.restrict(&common)?;
        let eb = d_b.restrict(&common)?;
        if ea != eb {
            let odd = ea
                .orders()
                .symmetric_difference(eb.orders())
                .next()
                .expect("restrictions differ");
            return Err(Error::input(format!(
                "restrictions to the common alternatives differ, e.g. at {odd}"
            )));
        }
    }
    let mut orders = BTreeSet::new();
    for v in d_a.orders() {
        orders.insert(v.with_bottom(t_prime)?);
    }
    for u in d_b.orders() {
        orders.insert(u.with_bottom(t)?);
    }
    Domain::new(orders)
}

/// How [`represent`] found its word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RepresentPath {
    Recursive,
    Search,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub arrangement: Arrangement,
    pub path: RepresentPath,
}

/// Finds a tame word whose domain is `d`, a maximal Arrow's single-peaked domain.
///
/// The word is swept from the extremal order with the smaller-sorting top
/// terminal. The recursive gluing is tried first; if its boundaries fail to
/// line up, a bounded breadth-first search takes over.
pub fn represent(d: &Domain, limits: &Limits) -> Result<Representation> {
    Limits::check("represent alternative count", d.n(), limits.represent_n)?;
    if let Some(w) = is_arrow_sp(d).witness() {
        return Err(Error::input(format!(
            "domain is not Arrow's single-peaked (triple {:?})",
            w.triple
        )));
    }
    if let Some(ext) = is_maximal_condorcet(d, &Limits::unbounded())?.witness() {
        return Err(Error::input(format!(
            "domain is not maximal: {ext} can be added"
        )));
    }
    let left = match d.n() {
        1 | 2 => d.orders().iter().next().unwrap().clone(),
        _ => extremal_orders(d)
            .into_iter()
            .next()
            .ok_or_else(|| Error::input("domain has no extremal order"))?,
    };
    let left = TrackOrder::from(&left);
    if let Some(word) = glue(d, &left) {
        let arrangement = Arrangement::new(word, left)?;
        check_representation(d, &arrangement)?;
        return Ok(Representation {
            arrangement,
            path: RepresentPath::Recursive,
        });
    }
    let cap = d.n() * (d.n() - 1);
    match search(d, &left, cap, SEARCH_STATE_BUDGET)? {
        Some(word) => {
            let arrangement = Arrangement::new(word, left)?;
            check_representation(d, &arrangement)?;
            Ok(Representation {
                arrangement,
                path: RepresentPath::Search,
            })
        }
        None => Err(Error::Search(format!(
            "no tame word of length <= {cap} from {left} realizes the domain"
        ))),
    }
}

fn check_representation(d: &Domain, arr: &Arrangement) -> Result<()> {
    if !is_tame(arr).tame || arr.domain() != *d {
        return Err(Error::Search(format!(
            "internal: word {} from {} does not realize the domain",
            arr.word(),
            arr.left()
        )));
    }
    Ok(())
}

/// Recursive gluing from a fixed left column; `None` when boundaries don't line up.
fn glue(d: &Domain, left: &TrackOrder) -> Option<ArrangementWord> {
    let n = left.len();
    match n {
        1 => return (d.len() == 1).then(|| ArrangementWord::empty(1).unwrap()),
        2 => {
            return match d.len() {
                2 => Some(ArrangementWord::new(2, vec![1]).unwrap()),
                _ if d.contains(&left.to_order()) => Some(ArrangementWord::empty(2).unwrap()),
                _ => None,
            }
        }
        _ => {}
    }
    let lines = left.lines();
    let (t, t_prime) = (lines[0], lines[n - 1]);
    let left_a = TrackOrder::new(lines[..n - 1].to_vec()).ok()?;
    let d_a = d.without(t_prime).ok()?;
    let w_a = glue(&d_a, &left_a)?;
    let left_b = CombineInputs::expected_left_b(&w_a, &left_a, t_prime).ok()?;
    let d_b = d.without(t).ok()?;
    let w_b = glue(&d_b, &left_b)?;
    let inputs = CombineInputs {
        w_a,
        left_a,
        w_b,
        left_b,
        t,
        t_prime,
    };
    let combined = combine_words(&inputs).ok()?;
    (combined.domain() == *d).then(|| combined.word().clone())
}

/// Distinct search states kept before giving up.
pub const SEARCH_STATE_BUDGET: usize = 2_000_000;

/// Breadth-first search over tame words from `left` whose every column is an
/// order of `d`, shortest first.
///
/// Two prefixes are merged when they agree on the current column, the
/// chamber sets seen so far, and the set of lines above each pair's
/// crossings; their futures are then interchangeable.
pub fn search(
    d: &Domain,
    left: &TrackOrder,
    max_len: usize,
    state_budget: usize,
) -> Result<Option<ArrangementWord>> {
    let n = left.len();
    if !d.contains(&left.to_order()) {
        return Ok(None);
    }
    let alphabet: Vec<Label> = d.alternatives().iter().copied().collect();
    let bit = |a: Label| 1u64 << alphabet.binary_search(&a).unwrap();
    let prefixes = |col: &[Label]| -> Vec<u64> {
        col.iter()
            .scan(0u64, |m, &a| {
                *m |= bit(a);
                Some(*m)
            })
            .collect()
    };
    let target_ideal: BTreeSet<u64> = d
        .orders()
        .iter()
        .flat_map(|o| prefixes(o.ranking()))
        .collect();

    #[derive(Clone, PartialEq, Eq, Hash)]
    struct State {
        column: Vec<Label>,
        ideal: BTreeSet<u64>,
        pair_above: BTreeMap<(Label, Label), u64>,
    }
    let start = State {
        column: left.lines().to_vec(),
        ideal: prefixes(left.lines()).into_iter().collect(),
        pair_above: BTreeMap::new(),
    };
    let mut seen: HashSet<State> = HashSet::new();
    seen.insert(start.clone());
    let mut queue: VecDeque<(State, Vec<usize>)> = VecDeque::new();
    queue.push_back((start, Vec::new()));
    while let Some((state, letters)) = queue.pop_front() {
        if state.ideal == target_ideal {
            let word = ArrangementWord::new(n, letters.clone())?;
            let arr = Arrangement::new(word.clone(), left.clone())?;
            if arr.domain() == *d {
                return Ok(Some(word));
            }
        }
        if letters.len() == max_len {
            continue;
        }
        for level in 1..n {
            let mut column = state.column.clone();
            column.swap(level - 1, level);
            if !d.contains(&LinearOrder::from_vec_unchecked(column.clone())) {
                continue;
            }
            let (a, b) = (column[level - 1], column[level]);
            let pair = (a.min(b), a.max(b));
            let above = column[..level - 1].iter().fold(0u64, |m, &x| m | bit(x));
            if state.pair_above.get(&pair).is_some_and(|&m| m != above) {
                continue;
            }
            let mut next = state.clone();
            next.pair_above.insert(pair, above);
            next.ideal.extend(prefixes(&column));
            next.column = column;
            if seen.contains(&next) {
                continue;
            }
            if seen.len() >= state_budget {
                return Err(Error::Search(format!(
                    "state budget of {state_budget} exhausted"
                )));
            }
            seen.insert(next.clone());
            let mut word = letters.clone();
            word.push(level);
            queue.push_back((next, word));
        }
    }
    Ok(None)
}

/// Every maximal Arrow's single-peaked domain on `1..=n`, sorted.
///
/// Each assignment of a never-bottom alternative to every triple selects the
/// orders obeying all assignments; the maximal Condorcet selections are kept.
pub fn enumerate_arrow_sp(n: usize, limits: &Limits) -> Result<Vec<Domain>> {
    Limits::check("enumeration alternative count", n, limits.enumerate_n)?;
    if n == 0 {
        return Err(Error::input("need at least one alternative"));
    }
    let perms: Vec<Vec<Label>> = (1..=n as Label).permutations(n).collect();
    let words = perms.len().div_ceil(64);
    let triples: Vec<[Label; 3]> = (1..=n as Label)
        .tuple_combinations()
        .map(|(a, b, c)| [a, b, c])
        .collect();
    // bottom[t][c]: orders whose restriction to triple t ends with member c
    let mut bottom = vec![[vec![0u64; words], vec![0u64; words], vec![0u64; words]]; triples.len()];
    for (p, perm) in perms.iter().enumerate() {
        for (ti, tri) in triples.iter().enumerate() {
            let last = perm.iter().rev().find(|a| tri.contains(a)).unwrap();
            let c = tri.iter().position(|a| a == last).unwrap();
            bottom[ti][c][p / 64] |= 1 << (p % 64);
        }
    }
    let mut full = vec![u64::MAX; words];
    if !perms.len().is_multiple_of(64) {
        *full.last_mut().unwrap() = (1u64 << (perms.len() % 64)) - 1;
    }
    let mut selections: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut choice = vec![0usize; triples.len()];
    loop {
        let mut sel = full.clone();
        for (ti, &c) in choice.iter().enumerate() {
            for (s, b) in sel.iter_mut().zip(&bottom[ti][c]) {
                *s &= !b;
            }
        }
        if sel.iter().any(|&w| w != 0) {
            selections.insert(sel);
        }
        // odometer over 3^|triples|
        let mut i = 0;
        while i < choice.len() && choice[i] == 2 {
            choice[i] = 0;
            i += 1;
        }
        if i == choice.len() {
            break;
        }
        choice[i] += 1;
    }
    let mut out = BTreeSet::new();
    for sel in selections {
        let orders = (0..perms.len())
            .filter(|p| sel[p / 64] >> (p % 64) & 1 == 1)
            .map(|p| LinearOrder::from_vec_unchecked(perms[p].clone()));
        let d = Domain::new(orders)?;
        if is_condorcet(&d).holds()
            && is_arrow_sp(&d).holds()
            && is_maximal_condorcet(&d, &Limits::unbounded())?.holds()
        {
            out.insert(d);
        }
    }
    Ok(out.into_iter().collect())
}

/// Stable file stem for a domain: a hash of its sorted order list.
pub fn domain_file_stem(d: &Domain) -> String {
    let digest = Sha256::digest(d.to_file_string().as_bytes());
    format!("n{}-{}", d.n(), &hex::encode(digest)[..16])
}

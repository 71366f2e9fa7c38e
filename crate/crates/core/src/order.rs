//! Linear orders, domains, and the domain file format.
//!
//! An order is written most-preferred first. When every label is a single
//! digit the order is a digit string (`2314`), otherwise comma-separated
//! integers (`2,3,1,14`). Domain files hold one order per line.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A line label, equivalently an alternative.
pub type Label = u32;

/// A ranking of alternatives, position 0 is the most preferred.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearOrder(Vec<Label>);

impl LinearOrder {
    pub fn new(ranking: Vec<Label>) -> Result<Self> {
        let distinct: BTreeSet<_> = ranking.iter().collect();
        if distinct.len() != ranking.len() {
            return Err(Error::input(format!(
                "order {} repeats an alternative",
                join_labels(&ranking)
            )));
        }
        Ok(LinearOrder(ranking))
    }

    pub(crate) fn from_vec_unchecked(ranking: Vec<Label>) -> Self {
        debug_assert_eq!(ranking.iter().collect::<BTreeSet<_>>().len(), ranking.len());
        LinearOrder(ranking)
    }

    /// Parses a digit string or a comma-separated list.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::input("empty order"));
        }
        let ranking = if text.contains(',') {
            text.split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<Label>().map_err(|_| {
                        Error::input(format!("bad alternative {tok:?} in order {text:?}"))
                    })
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10).ok_or_else(|| {
                        Error::input(format!("bad character {c:?} in order {text:?}"))
                    })
                })
                .collect::<Result<Vec<_>>>()?
        };
        LinearOrder::new(ranking)
    }

    pub fn ranking(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn top(&self) -> Option<Label> {
        self.0.first().copied()
    }

    pub fn bottom(&self) -> Option<Label> {
        self.0.last().copied()
    }

    pub fn reversed(&self) -> LinearOrder {
        LinearOrder(self.0.iter().rev().copied().collect())
    }

    /// Keeps only alternatives in `keep`, preserving their relative ranking.
    pub fn restrict(&self, keep: &BTreeSet<Label>) -> LinearOrder {
        LinearOrder(
            self.0
                .iter()
                .copied()
                .filter(|a| keep.contains(a))
                .collect(),
        )
    }

    /// Appends `alt` at the bottom.
    pub fn with_bottom(&self, alt: Label) -> Result<LinearOrder> {
        let mut v = self.0.clone();
        v.push(alt);
        LinearOrder::new(v)
    }

    pub fn relabel(&self, f: impl Fn(Label) -> Label) -> LinearOrder {
        LinearOrder(self.0.iter().map(|&a| f(a)).collect())
    }

    pub fn alternatives(&self) -> BTreeSet<Label> {
        self.0.iter().copied().collect()
    }
}

impl fmt::Display for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_labels(&self.0))
    }
}

impl Serialize for LinearOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Writes labels as a digit string when they are all single digits, as CSV otherwise.
pub fn join_labels(labels: &[Label]) -> String {
    if labels.iter().all(|&a| a <= 9) {
        labels
            .iter()
            .map(|a| char::from_digit(*a, 10).unwrap())
            .collect()
    } else {
        labels
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// A set of linear orders over one common alternative set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Domain {
    alternatives: BTreeSet<Label>,
    orders: BTreeSet<LinearOrder>,
}

impl Domain {
    /// Builds a domain; duplicates collapse. Fails on an empty order list or
    /// when the orders disagree on the alternative set.
    pub fn new(orders: impl IntoIterator<Item = LinearOrder>) -> Result<Self> {
        let orders: BTreeSet<LinearOrder> = orders.into_iter().collect();
        let first = orders
            .iter()
            .next()
            .ok_or_else(|| Error::input("a domain needs at least one order"))?;
        let alternatives = first.alternatives();
        if let Some(bad) = orders.iter().find(|o| o.alternatives() != alternatives) {
            return Err(Error::input(format!(
                "order {bad} ranges over a different alternative set than {first}"
            )));
        }
        Ok(Domain {
            alternatives,
            orders,
        })
    }

    pub(crate) fn from_parts_unchecked(
        alternatives: BTreeSet<Label>,
        orders: BTreeSet<LinearOrder>,
    ) -> Self {
        Domain {
            alternatives,
            orders,
        }
    }

    /// Parses a domain file: one order per line, blank lines and `#` comments skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let orders = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(LinearOrder::parse)
            .collect::<Result<Vec<_>>>()?;
        Domain::new(orders)
    }

    /// Parses orders from a whitespace- or comma-free list such as `"123 213"`.
    pub fn from_strs<'a>(orders: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        Domain::new(
            orders
                .into_iter()
                .map(LinearOrder::parse)
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn alternatives(&self) -> &BTreeSet<Label> {
        &self.alternatives
    }

    pub fn orders(&self) -> &BTreeSet<LinearOrder> {
        &self.orders
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn n(&self) -> usize {
        self.alternatives.len()
    }

    pub fn contains(&self, order: &LinearOrder) -> bool {
        self.orders.contains(order)
    }

    /// Projects every order onto `keep`, collapsing duplicates.
    pub fn restrict(&self, keep: &BTreeSet<Label>) -> Result<Domain> {
        if keep.is_empty() {
            return Err(Error::input("cannot restrict to an empty alternative set"));
        }
        if let Some(a) = keep.iter().find(|a| !self.alternatives.contains(a)) {
            return Err(Error::input(format!(
                "alternative {a} is not in the domain"
            )));
        }
        Ok(Domain {
            alternatives: keep.clone(),
            orders: self.orders.iter().map(|o| o.restrict(keep)).collect(),
        })
    }

    /// Restriction to every alternative except `drop`.
    pub fn without(&self, drop: Label) -> Result<Domain> {
        let keep: BTreeSet<Label> = self
            .alternatives
            .iter()
            .copied()
            .filter(|&a| a != drop)
            .collect();
        self.restrict(&keep)
    }

    /// Applies a label bijection to every order.
    pub fn relabel(&self, f: impl Fn(Label) -> Label) -> Domain {
        Domain {
            alternatives: self.alternatives.iter().map(|&a| f(a)).collect(),
            orders: self.orders.iter().map(|o| o.relabel(&f)).collect(),
        }
    }

    pub fn with_order(&self, order: LinearOrder) -> Result<Domain> {
        let mut orders = self.orders.clone();
        orders.insert(order);
        Domain::new(orders)
    }

    /// Sorted lines of the domain file format.
    pub fn to_lines(&self) -> Vec<String> {
        self.orders.iter().map(|o| o.to_string()).collect()
    }

    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        for line in self.to_lines() {
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

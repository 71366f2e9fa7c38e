//! The analysis report bundling every classifier verdict for one input.

use serde::Serialize;

use crate::analysis::{
    all_never_conditions, extremal_orders, has_maximal_width, is_arrow_sp, is_condorcet,
    is_maximal_condorcet, is_peak_pit, terminals, TripleWitness, Verdict,
};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::order::{join_labels, Domain, Label, LinearOrder};
use crate::tameness::{is_tame, TameWitness};
use crate::word::Arrangement;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionEntry {
    pub alternative: Label,
    pub position: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleConditions {
    pub triple: String,
    pub conditions: Vec<ConditionEntry>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub tame: Vec<TameWitness>,
    pub condorcet: Option<TripleWitness>,
    pub peak_pit: Option<TripleWitness>,
    pub arrow_sp: Option<TripleWitness>,
    /// An order that can be added while staying Condorcet.
    pub maximal_condorcet: Option<LinearOrder>,
}

/// Field names and order are part of the output format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub word: Option<String>,
    pub left: Option<String>,
    pub n: usize,
    pub tame: Option<bool>,
    pub condorcet: bool,
    pub peak_pit: bool,
    pub arrow_sp: bool,
    pub maximal_width: bool,
    /// `None` when the alternative count exceeds the maximality guard.
    pub maximal_condorcet: Option<bool>,
    pub domain: Vec<String>,
    pub chamber_sets: Option<Vec<String>>,
    pub never_conditions: Vec<TripleConditions>,
    pub terminals: Vec<Label>,
    pub extremal_orders: Vec<String>,
    pub witnesses: Witnesses,
}

impl AnalysisReport {
    pub fn for_arrangement(arr: &Arrangement, limits: &Limits) -> Result<Self> {
        let ideal = arr.chamber_sets();
        let domain = ideal.domain();
        let mut report = AnalysisReport::for_domain(&domain, limits)?;
        let tame = is_tame(arr);
        report.word = Some(arr.word().to_string());
        report.left = Some(arr.left().to_string());
        report.tame = Some(tame.tame);
        report.witnesses.tame = tame.witnesses;
        report.chamber_sets = Some(ideal.set_strings());
        Ok(report)
    }

    pub fn for_domain(domain: &Domain, limits: &Limits) -> Result<Self> {
        let condorcet = is_condorcet(domain);
        let peak_pit = is_peak_pit(domain);
        let arrow_sp = is_arrow_sp(domain);
        let maximal = if !condorcet.holds() {
            Some(Verdict::Fails(None))
        } else {
            match is_maximal_condorcet(domain, limits) {
                Ok(Verdict::Holds) => Some(Verdict::Holds),
                Ok(Verdict::Fails(ext)) => Some(Verdict::Fails(Some(ext))),
                Err(Error::Guard { .. }) => None,
                Err(e) => return Err(e),
            }
        };
        let never_conditions = all_never_conditions(domain)
            .into_iter()
            .map(|(triple, conds)| TripleConditions {
                triple: join_labels(&triple),
                conditions: conds
                    .into_iter()
                    .map(|c| ConditionEntry {
                        alternative: c.alternative,
                        position: c.position,
                    })
                    .collect(),
            })
            .collect();
        Ok(AnalysisReport {
            word: None,
            left: None,
            n: domain.n(),
            tame: None,
            condorcet: condorcet.holds(),
            peak_pit: peak_pit.holds(),
            arrow_sp: arrow_sp.holds(),
            maximal_width: has_maximal_width(domain),
            maximal_condorcet: maximal.as_ref().map(Verdict::holds),
            domain: domain.to_lines(),
            chamber_sets: None,
            never_conditions,
            terminals: terminals(domain).into_iter().collect(),
            extremal_orders: extremal_orders(domain)
                .iter()
                .map(|o| o.to_string())
                .collect(),
            witnesses: Witnesses {
                tame: Vec::new(),
                condorcet: condorcet.witness().cloned(),
                peak_pit: peak_pit.witness().cloned(),
                arrow_sp: arrow_sp.witness().cloned(),
                maximal_condorcet: maximal.and_then(|v| v.witness().cloned().flatten()),
            },
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable `key: value` summary.
    pub fn to_text(&self) -> String {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let mut out = String::new();
        if let Some(w) = &self.word {
            out += &format!("word: {w}\n");
        }
        if let Some(l) = &self.left {
            out += &format!("left: {l}\n");
        }
        out += &format!("n: {}\n", self.n);
        if let Some(t) = self.tame {
            out += &format!("tame: {}\n", yn(t));
        }
        out += &format!("condorcet: {}\n", yn(self.condorcet));
        out += &format!("peak_pit: {}\n", yn(self.peak_pit));
        out += &format!("arrow_sp: {}\n", yn(self.arrow_sp));
        out += &format!("maximal_width: {}\n", yn(self.maximal_width));
        out += &format!(
            "maximal_condorcet: {}\n",
            self.maximal_condorcet.map_or("skipped (guard)", yn)
        );
        out += &format!(
            "domain ({}): {}\n",
            self.domain.len(),
            self.domain.join(" ")
        );
        if let Some(cs) = &self.chamber_sets {
            let shown: Vec<&str> = cs
                .iter()
                .map(|s| if s.is_empty() { "∅" } else { s.as_str() })
                .collect();
            out += &format!("chamber_sets ({}): {}\n", cs.len(), shown.join(" "));
        }
        let terminals: Vec<String> = self.terminals.iter().map(|t| t.to_string()).collect();
        out += &format!("terminals: {}\n", terminals.join(" "));
        out += &format!("extremal_orders: {}\n", self.extremal_orders.join(" "));
        for t in &self.never_conditions {
            let conds: Vec<String> = t
                .conditions
                .iter()
                .map(|c| format!("{}N{}", c.alternative, c.position))
                .collect();
            out += &format!("never {}: {}\n", t.triple, conds.join(" "));
        }
        for w in &self.witnesses.tame {
            out += &format!(
                "untame pair {}{} at levels {} below lines {}\n",
                w.pair.0,
                w.pair.1,
                w.levels
                    .iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                w.lines_above
                    .iter()
                    .map(|s| if s.is_empty() { "∅" } else { s.as_str() })
                    .collect::<Vec<_>>()
                    .join(",")
            );
        }
        let triple_line = |name: &str, w: &Option<TripleWitness>| {
            w.as_ref().map(|w| {
                let orders: Vec<String> = w.orders.iter().map(|o| o.to_string()).collect();
                format!(
                    "{name} fails on {}: {}\n",
                    join_labels(&w.triple),
                    orders.join(" ")
                )
            })
        };
        out += &triple_line("condorcet", &self.witnesses.condorcet).unwrap_or_default();
        out += &triple_line("peak_pit", &self.witnesses.peak_pit).unwrap_or_default();
        out += &triple_line("arrow_sp", &self.witnesses.arrow_sp).unwrap_or_default();
        if let Some(ext) = &self.witnesses.maximal_condorcet {
            out += &format!("maximal_condorcet fails: {ext} can be added\n");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::ArrangementWord;

    #[test]
    fn report_fields_for_untame_word() {
        let arr = Arrangement::with_identity(ArrangementWord::parse("s1 s2 s1 s2", 3).unwrap());
        let r = AnalysisReport::for_arrangement(&arr, &Limits::default()).unwrap();
        assert_eq!(r.tame, Some(false));
        assert!(!r.condorcet);
        assert_eq!(r.maximal_condorcet, Some(false));
        assert!(r.witnesses.condorcet.is_some());
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        for key in [
            "word",
            "n",
            "tame",
            "condorcet",
            "peak_pit",
            "arrow_sp",
            "maximal_width",
            "maximal_condorcet",
            "domain",
            "chamber_sets",
            "never_conditions",
            "terminals",
            "extremal_orders",
            "witnesses",
        ] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
    }

    #[test]
    fn guard_skips_maximality() {
        let d = Domain::from_strs(["123456789"]).unwrap();
        let r = AnalysisReport::for_domain(&d, &Limits::default()).unwrap();
        assert_eq!(r.maximal_condorcet, None);
        assert!(r.to_text().contains("skipped"));
    }
}

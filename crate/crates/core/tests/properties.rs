use std::collections::BTreeSet;

use proptest::prelude::*;
use wiring_domains::analysis::{
    condorcet_profile_oracle, is_condorcet, is_peak_pit, never_conditions,
};
use wiring_domains::tameness::{is_tame, is_tame_with, straighten};
use wiring_domains::{
    Arrangement, ArrangementWord, Domain, Limits, LinearOrder, TamenessRule, TrackOrder,
};

fn word_strategy(max_n: usize, max_len: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    (2..=max_n).prop_flat_map(move |n| (Just(n), prop::collection::vec(1..n, 0..=max_len)))
}

fn arrangement_strategy(max_n: usize, max_len: usize) -> impl Strategy<Value = Arrangement> {
    word_strategy(max_n, max_len).prop_flat_map(|(n, letters)| {
        let perm = Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle();
        perm.prop_map(move |left| {
            Arrangement::new(
                ArrangementWord::new(n, letters.clone()).unwrap(),
                TrackOrder::new(left).unwrap(),
            )
            .unwrap()
        })
    })
}

fn domain_strategy(max_n: u32) -> impl Strategy<Value = Domain> {
    (3..=max_n).prop_flat_map(|n| {
        let order = Just((1..=n).collect::<Vec<_>>()).prop_shuffle();
        prop::collection::vec(order, 1..8).prop_map(|orders| {
            Domain::new(orders.into_iter().map(|o| LinearOrder::new(o).unwrap())).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn sweep_columns_are_adjacent_permutations(a in arrangement_strategy(6, 14)) {
        let cols = a.sweep();
        prop_assert_eq!(cols.len(), a.word().len() + 1);
        for (k, pair) in cols.windows(2).enumerate() {
            let level = a.word().letters()[k];
            prop_assert_eq!(&pair[0].swapped(level), &pair[1]);
            prop_assert_eq!(pair[1].label_set(), a.left().label_set());
        }
    }

    #[test]
    fn crossings_replay_the_sweep(a in arrangement_strategy(6, 14)) {
        let cols = a.sweep();
        for ev in a.crossings() {
            let before = &cols[ev.index - 1];
            let (x, y) = (before.lines()[ev.level - 1], before.lines()[ev.level]);
            prop_assert_eq!(ev.pair, (x.min(y), x.max(y)));
        }
    }

    #[test]
    fn domain_orders_are_flags_of_the_ideal(a in arrangement_strategy(5, 12)) {
        let ideal = a.chamber_sets();
        let d = a.domain();
        prop_assert_eq!(ideal.flags().len(), d.len());
        for col in a.sweep() {
            prop_assert!(d.contains(&col.to_order()));
        }
        for o in d.orders() {
            let r = o.ranking();
            for k in 0..=r.len() {
                prop_assert!(ideal.contains(&r[..k].iter().copied().collect()));
            }
        }
    }

    #[test]
    fn canonical_form_preserves_domain_and_tameness(a in arrangement_strategy(5, 12)) {
        let c = Arrangement::new(a.word().canonical(), a.left().clone()).unwrap();
        prop_assert_eq!(c.domain(), a.domain());
        prop_assert_eq!(is_tame(&c).tame, is_tame(&a).tame);
        prop_assert_eq!(c.right(), a.right());
        prop_assert_eq!(c.word().canonical(), c.word().clone());
    }

    #[test]
    fn tame_means_every_line_triple_is_tame(a in arrangement_strategy(5, 12)) {
        // restrict the sweep to each triple and compare track indices there
        let labels: Vec<u32> = a.left().lines().to_vec();
        let mut all_triples_tame = true;
        for i in 0..labels.len() {
            for j in i + 1..labels.len() {
                for k in j + 1..labels.len() {
                    let keep: BTreeSet<u32> = [labels[i], labels[j], labels[k]].into();
                    let cols: Vec<Vec<u32>> = a.sweep().iter()
                        .map(|c| c.lines().iter().copied().filter(|x| keep.contains(x)).collect())
                        .collect();
                    let letters: Vec<usize> = cols.windows(2)
                        .filter(|w| w[0] != w[1])
                        .map(|w| (0..2).find(|&t| w[0][t] != w[1][t]).unwrap() + 1)
                        .collect();
                    let sub = Arrangement::new(
                        ArrangementWord::new(3, letters).unwrap(),
                        TrackOrder::new(cols[0].clone()).unwrap(),
                    ).unwrap();
                    all_triples_tame &= is_tame_with(&sub, TamenessRule::TrackIndex).tame;
                }
            }
        }
        prop_assert_eq!(is_tame(&a).tame, all_triples_tame);
    }

    #[test]
    fn tame_iff_condorcet(a in arrangement_strategy(6, 12)) {
        let d = a.domain();
        let tame = is_tame(&a).tame;
        prop_assert_eq!(tame, is_condorcet(&d).holds());
        if tame {
            prop_assert!(is_peak_pit(&d).holds());
        }
    }

    #[test]
    fn straighten_keeps_domain_and_shrinks(a in arrangement_strategy(5, 12)) {
        prop_assume!(is_tame(&a).tame);
        let s = straighten(&a).unwrap();
        prop_assert_eq!(s.domain(), a.domain());
        prop_assert!(s.word().len() <= a.word().len());
        prop_assert_eq!(s.right(), a.right());
        prop_assert!(is_tame(&s).tame);
        prop_assert_eq!(straighten(&s).unwrap(), s);
    }

    #[test]
    fn relabel_commutes_with_domain(a in arrangement_strategy(5, 10), shift in 1u32..20) {
        let moved = TrackOrder::new(a.left().lines().iter().map(|x| x + shift).collect()).unwrap();
        let b = Arrangement::new(a.word().clone(), moved).unwrap();
        prop_assert_eq!(b.domain(), a.domain().relabel(|x| x + shift));
    }

    #[test]
    fn restriction_is_functorial(d in domain_strategy(6), seed in any::<u64>()) {
        let alts: Vec<u32> = d.alternatives().iter().copied().collect();
        let mid: BTreeSet<u32> = alts.iter().copied().enumerate()
            .filter(|(i, _)| *i < 3 || seed >> i & 1 == 1).map(|(_, x)| x).collect();
        let small: BTreeSet<u32> = mid.iter().copied().take(3).collect();
        prop_assert_eq!(d.restrict(&mid).unwrap().restrict(&small).unwrap(), d.restrict(&small).unwrap());
    }

    #[test]
    fn never_conditions_match_profile_oracle(d in domain_strategy(5)) {
        let never = is_condorcet(&d).holds();
        prop_assert_eq!(never, condorcet_profile_oracle(&d, &Limits::default()).unwrap());
        for o in d.orders() {
            let r = o.ranking();
            let triple = [r[0], r[1], r[2]];
            let mut sorted = triple;
            sorted.sort_unstable();
            let conds = never_conditions(&d, sorted).unwrap();
            for c in conds {
                let pos = o.restrict(&sorted.into()).ranking().iter().position(|&x| x == c.alternative).unwrap();
                prop_assert_ne!(pos + 1, usize::from(c.position));
            }
        }
    }

    #[test]
    fn word_text_round_trips((n, letters) in word_strategy(9, 20)) {
        let w = ArrangementWord::new(n, letters).unwrap();
        prop_assert_eq!(ArrangementWord::parse(&w.to_string(), n).unwrap(), w);
    }

    #[test]
    fn domain_text_round_trips(d in domain_strategy(7)) {
        prop_assert_eq!(Domain::parse(&d.to_file_string()).unwrap(), d);
    }
}

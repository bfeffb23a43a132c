#![allow(dead_code)]

use omv_sat::cnf::{Clause, ClauseSet, Literal};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

/// Random clause set with `n` in `1..=max_n`, `m` in `1..=max_m`, clause
/// width in `1..=min(n, max_width)`, distinct variables per clause and
/// random signs.
pub fn random_instance<R: Rng>(rng: &mut R, max_n: usize, max_m: usize, max_width: usize) -> ClauseSet {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(1..=max_m);
    let vars: Vec<usize> = (1..=n).collect();
    let clauses = (0..m)
        .map(|_| {
            let width = rng.gen_range(1..=n.min(max_width));
            let lits = vars
                .choose_multiple(rng, width)
                .map(|&v| Literal::new(v, rng.gen_bool(0.5)))
                .collect();
            Clause::new(lits).unwrap()
        })
        .collect();
    ClauseSet::new(n, clauses).unwrap()
}

fn clause_strategy(n: usize) -> impl Strategy<Value = Vec<(usize, bool)>> {
    proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), 1..=n)
        .prop_shuffle()
        .prop_flat_map(|vars| {
            let len = vars.len();
            (Just(vars), proptest::collection::vec(any::<bool>(), len))
        })
        .prop_map(|(vars, signs)| vars.into_iter().zip(signs).collect())
}

pub fn instance_strategy(max_n: usize, max_m: usize) -> impl Strategy<Value = ClauseSet> {
    (1..=max_n)
        .prop_flat_map(move |n| (Just(n), proptest::collection::vec(clause_strategy(n), 1..=max_m)))
        .prop_map(|(n, clauses)| {
            let clauses = clauses
                .into_iter()
                .map(|c| Clause::new(c.into_iter().map(|(v, neg)| Literal::new(v, neg)).collect()).unwrap())
                .collect();
            ClauseSet::new(n, clauses).unwrap()
        })
}

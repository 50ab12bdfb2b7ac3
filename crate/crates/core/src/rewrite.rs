//! Free-word rewriting for presentations whose relations all have a
//! two-letter left-hand side.
//!
//! This is the reduction engine behind `normalize`, and it doubles as an
//! oracle for the closed-form multiplication in [`crate::suq2`] and
//! [`crate::disk`]: the two must agree on every product.

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

use crate::scalar::QScalar;

/// A linear combination of free words.
pub type WordSum<L> = BTreeMap<Vec<L>, QScalar>;

#[derive(Clone, Debug)]
pub struct Rule<L> {
    pub lhs: [L; 2],
    pub rhs: Vec<(QScalar, Vec<L>)>,
}

/// Which redex to contract when a word has several.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    /// Uniformly random redex from a seeded generator.
    Random(u64),
}

#[derive(Clone, Debug)]
pub struct RewriteSystem<L> {
    rules: Vec<Rule<L>>,
}

impl<L: Copy + Ord> RewriteSystem<L> {
    pub fn new(rules: Vec<Rule<L>>) -> Self {
        RewriteSystem { rules }
    }

    pub fn rules(&self) -> &[Rule<L>] {
        &self.rules
    }

    fn rule_at(&self, word: &[L], pos: usize) -> Option<&Rule<L>> {
        self.rules
            .iter()
            .find(|r| word[pos] == r.lhs[0] && word[pos + 1] == r.lhs[1])
    }

    fn redexes(&self, word: &[L]) -> Vec<usize> {
        (0..word.len().saturating_sub(1))
            .filter(|&p| self.rule_at(word, p).is_some())
            .collect()
    }

    pub fn is_irreducible(&self, word: &[L]) -> bool {
        self.redexes(word).is_empty()
    }

    /// One rewriting step at `pos`.
    pub fn rewrite_at(&self, word: &[L], pos: usize) -> Option<Vec<(QScalar, Vec<L>)>> {
        let rule = self.rule_at(word, pos)?;
        Some(
            rule.rhs
                .iter()
                .map(|(c, rep)| {
                    let mut w = Vec::with_capacity(word.len() + rep.len());
                    w.extend_from_slice(&word[..pos]);
                    w.extend_from_slice(rep);
                    w.extend_from_slice(&word[pos + 2..]);
                    (c.clone(), w)
                })
                .collect(),
        )
    }

    /// Reduces `coeff · word` to a combination of irreducible words.
    pub fn reduce(&self, coeff: QScalar, word: Vec<L>, strategy: Strategy) -> WordSum<L> {
        self.reduce_sum(std::iter::once((coeff, word)), strategy)
    }

    pub fn reduce_sum<I>(&self, input: I, strategy: Strategy) -> WordSum<L>
    where
        I: IntoIterator<Item = (QScalar, Vec<L>)>,
    {
        let mut rng = match strategy {
            Strategy::Random(seed) => Some(StdRng::seed_from_u64(seed)),
            _ => None,
        };
        let mut out: WordSum<L> = BTreeMap::new();
        let mut stack: Vec<(QScalar, Vec<L>)> = input.into_iter().collect();
        while let Some((c, w)) = stack.pop() {
            if c.is_zero() {
                continue;
            }
            let redexes = self.redexes(&w);
            let pos = match (strategy, redexes.as_slice()) {
                (_, []) => {
                    accumulate(&mut out, w, &c);
                    continue;
                }
                (Strategy::Leftmost, r) => r[0],
                (Strategy::Rightmost, r) => r[r.len() - 1],
                (Strategy::Random(_), r) => {
                    let rng = rng.as_mut().expect("seeded for random strategy");
                    r[rng.random_range(0..r.len())]
                }
            };
            for (f, nw) in self.rewrite_at(&w, pos).expect("redex has a rule") {
                stack.push((&c * &f, nw));
            }
        }
        out
    }

    /// Words `xyz` where both `xy` and `yz` are left-hand sides; these are
    /// the only places local confluence can fail.
    pub fn critical_overlaps(&self) -> Vec<Vec<L>> {
        let mut out = Vec::new();
        for r1 in &self.rules {
            for r2 in &self.rules {
                if r1.lhs[1] == r2.lhs[0] {
                    out.push(vec![r1.lhs[0], r1.lhs[1], r2.lhs[1]]);
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Checks that both one-step reducts of each critical overlap reduce to
    /// the same irreducible combination. Returns the failing overlaps.
    pub fn non_joinable_overlaps(&self) -> Vec<Vec<L>> {
        self.critical_overlaps()
            .into_iter()
            .filter(|w| {
                let left = self.rewrite_at(w, 0).expect("overlap starts with redex");
                let right = self.rewrite_at(w, 1).expect("overlap ends with redex");
                self.reduce_sum(left, Strategy::Leftmost)
                    != self.reduce_sum(right, Strategy::Leftmost)
            })
            .collect()
    }
}

fn accumulate<L: Ord>(out: &mut WordSum<L>, w: Vec<L>, c: &QScalar) {
    use std::collections::btree_map::Entry;
    match out.entry(w) {
        Entry::Vacant(v) => {
            v.insert(c.clone());
        }
        Entry::Occupied(mut o) => {
            let s = &*o.get() + c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

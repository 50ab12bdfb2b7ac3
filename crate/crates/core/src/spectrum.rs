//! Bounded search for the commutator spectrum of `C[D̄_q/T_n]`.
//!
//! The commutator spectrum of an algebra is the set of `ω ≠ 0` for which
//! some nonzero `a, b` satisfy `ab = ω·ba`. Inside the disk subalgebras it is
//! realized on monomials and consists of powers of `q`, so the search runs
//! over ordered pairs of basis monomials of bounded degree and records
//! exponents `m` with `ab = q^m·ba`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::disk::{disk_tn_member, proportionality, q_commutation_exponent, DiskElement, DiskMonomial};
use crate::error::{Error, Result};
use crate::torus::TorusOrder;

pub type Witness = (DiskMonomial, DiskMonomial);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    pub n: TorusOrder,
    pub degree_bound: u32,
    pub exponents: BTreeSet<i64>,
    /// Least witness pair (in monomial order) for each exponent.
    pub witnesses: BTreeMap<i64, Witness>,
    /// Pairs proportional by a scalar that is not a power of `q`. Expected to
    /// stay empty.
    pub flagged: Vec<Witness>,
}

impl SpectrumReport {
    pub fn min_positive(&self) -> Option<i64> {
        self.exponents.iter().copied().find(|&m| m > 0)
    }

    /// The gcd of all recorded exponents; the found part of the spectrum is
    /// contained in `q^{gℤ}`.
    pub fn exponent_gcd(&self) -> u64 {
        self.exponents
            .iter()
            .fold(0u64, |g, &m| num_integer::gcd(g, m.unsigned_abs()))
    }

    pub fn is_closed_under_negation(&self) -> bool {
        self.exponents.iter().all(|m| self.exponents.contains(&-m))
    }
}

impl fmt::Display for SpectrumReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={} D={}", self.n, self.degree_bound)?;
        for (m, (a, b)) in &self.witnesses {
            writeln!(f, "exponent {m}: {a} , {b}")?;
        }
        match self.min_positive() {
            Some(m) => writeln!(f, "min_positive={m}"),
            None => writeln!(f, "min_positive=none"),
        }
    }
}

/// Basis monomials of `C[D̄_q/T_n]` with `J + |K| ≤ degree_bound`, in
/// monomial order.
pub fn tn_monomials(n: TorusOrder, degree_bound: u32) -> Vec<DiskMonomial> {
    let d = degree_bound as i64;
    let mut out: Vec<DiskMonomial> = (0..=d)
        .flat_map(|j| (-(d - j)..=(d - j)).map(move |k| DiskMonomial::new(j as u32, k)))
        .filter(|m| disk_tn_member(m, n))
        .collect();
    out.sort();
    out
}

enum PairOutcome {
    Exponent(i64),
    Flagged,
    None,
}

fn classify(a: &DiskMonomial, b: &DiskMonomial) -> PairOutcome {
    let ea = DiskElement::basis(*a);
    let eb = DiskElement::basis(*b);
    match q_commutation_exponent(&ea, &eb) {
        Ok(Some(m)) => PairOutcome::Exponent(m),
        _ => {
            if proportionality(&(&ea * &eb), &(&eb * &ea)).is_some() {
                PairOutcome::Flagged
            } else {
                PairOutcome::None
            }
        }
    }
}

/// Searches all ordered monomial pairs of degree at most `degree_bound`.
pub fn commutator_spectrum_search(n: TorusOrder, degree_bound: u32) -> Result<SpectrumReport> {
    if degree_bound < 1 {
        return Err(Error::Precondition("degree bound must be at least 1".into()));
    }
    let monos = tn_monomials(n, degree_bound);
    let results: Vec<(usize, usize, PairOutcome)> = (0..monos.len())
        .into_par_iter()
        .flat_map_iter(|ia| {
            let monos = &monos;
            (0..monos.len()).map(move |ib| (ia, ib, classify(&monos[ia], &monos[ib])))
        })
        .collect();

    let mut report = SpectrumReport {
        n,
        degree_bound,
        exponents: BTreeSet::new(),
        witnesses: BTreeMap::new(),
        flagged: Vec::new(),
    };
    // `results` is in (ia, ib) order, so the first witness seen is least.
    for (ia, ib, outcome) in results {
        let pair = (monos[ia], monos[ib]);
        match outcome {
            PairOutcome::Exponent(m) => {
                report.exponents.insert(m);
                report.witnesses.entry(m).or_insert(pair);
            }
            PairOutcome::Flagged => report.flagged.push(pair),
            PairOutcome::None => {}
        }
    }
    Ok(report)
}

/// Runs the search on a dedicated pool of `threads` workers. The report does
/// not depend on the thread count.
pub fn commutator_spectrum_search_with_threads(
    n: TorusOrder,
    degree_bound: u32,
    threads: usize,
) -> Result<SpectrumReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::Validation(format!("cannot start thread pool: {e}")))?;
    pool.install(|| commutator_spectrum_search(n, degree_bound))
}

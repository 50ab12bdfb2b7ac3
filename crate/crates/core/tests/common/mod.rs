#![allow(dead_code)]

use proptest::prelude::*;
use qspaces_core::disk::{DiskElement, DiskLetter, DiskMonomial};
use qspaces_core::suq2::{SuElement, SuLetter, SuMonomial};
use qspaces_core::{GaussianRational, QScalar};
use rand::rngs::StdRng;
use rand::RngExt;

pub fn gauss(re: i64, im: i64) -> GaussianRational {
    &GaussianRational::from_integer(re) + &(&GaussianRational::from_integer(im) * &GaussianRational::imaginary_unit())
}

pub fn arb_gauss() -> impl Strategy<Value = GaussianRational> {
    (-3i64..=3, -2i64..=2, 1i64..=3).prop_map(|(re, im, den)| {
        &gauss(re, im) * &GaussianRational::ratio(1, den)
    })
}

pub fn arb_qscalar() -> impl Strategy<Value = QScalar> {
    prop::collection::vec((arb_gauss(), -3i64..=3), 0..4).prop_map(QScalar::from_terms)
}

pub fn arb_nonzero_qscalar() -> impl Strategy<Value = QScalar> {
    arb_qscalar().prop_filter("nonzero", |s| !s.is_zero())
}

pub fn arb_su_monomial() -> impl Strategy<Value = SuMonomial> {
    (-3i64..=3, 0u32..=2, 0u32..=2).prop_map(|(i, j, k)| SuMonomial::new(i, j, k))
}

pub fn arb_su_element() -> impl Strategy<Value = SuElement> {
    prop::collection::vec((arb_nonzero_qscalar(), arb_su_monomial()), 1..4)
        .prop_map(SuElement::from_terms)
}

pub fn arb_disk_monomial() -> impl Strategy<Value = DiskMonomial> {
    (0u32..=4, -3i64..=3).prop_map(|(j, k)| DiskMonomial::new(j, k))
}

pub fn arb_disk_element() -> impl Strategy<Value = DiskElement> {
    prop::collection::vec((arb_nonzero_qscalar(), arb_disk_monomial()), 1..4)
        .prop_map(DiskElement::from_terms)
}

pub fn arb_su_word() -> impl Strategy<Value = Vec<SuLetter>> {
    prop::collection::vec(prop::sample::select(SuLetter::ALL.to_vec()), 0..=10)
}

pub fn arb_disk_word() -> impl Strategy<Value = Vec<DiskLetter>> {
    prop::collection::vec(prop::sample::select(DiskLetter::ALL.to_vec()), 0..=10)
}

// Seeded generators for the fixed-count loops of the acceptance suite.

pub fn rand_qscalar(rng: &mut StdRng) -> QScalar {
    let terms = rng.random_range(1..=3);
    let s = QScalar::from_terms((0..terms).map(|_| {
        let c = &gauss(rng.random_range(-3..=3), rng.random_range(-2..=2))
            * &GaussianRational::ratio(1, rng.random_range(1..=3));
        (c, rng.random_range(-3i64..=3))
    }));
    if s.is_zero() {
        QScalar::one()
    } else {
        s
    }
}

pub fn rand_su_monomial(rng: &mut StdRng, max_i: i64, max_jk: u32) -> SuMonomial {
    SuMonomial::new(
        rng.random_range(-max_i..=max_i),
        rng.random_range(0..=max_jk),
        rng.random_range(0..=max_jk),
    )
}

pub fn rand_su_element(rng: &mut StdRng, max_terms: usize) -> SuElement {
    let n = rng.random_range(1..=max_terms);
    let e = SuElement::from_terms((0..n).map(|_| (rand_qscalar(rng), rand_su_monomial(rng, 3, 2))));
    if e.is_zero() {
        SuElement::one()
    } else {
        e
    }
}

pub fn rand_su_word(rng: &mut StdRng, max_len: usize) -> Vec<SuLetter> {
    let len = rng.random_range(0..=max_len);
    (0..len)
        .map(|_| SuLetter::ALL[rng.random_range(0..4)])
        .collect()
}

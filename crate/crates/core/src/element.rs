//! Finite `QScalar`-linear combinations of normal-form basis monomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::QScalar;

/// A normal-form basis of a *-algebra over the Laurent ring in `q`.
///
/// Products and adjoints of basis monomials are expressed back in the basis,
/// which is all [`Element`] needs for its arithmetic.
pub trait Basis: Clone + Ord + fmt::Display {
    fn one() -> Self;

    fn is_one(&self) -> bool;

    /// Product of two basis monomials, as `(coefficient, monomial)` pairs.
    fn mul_basis(&self, rhs: &Self) -> Vec<(QScalar, Self)>;

    /// Adjoint of a basis monomial. For both presentations in this crate it
    /// is a single monomial up to a power of `q`.
    fn star_basis(&self) -> (QScalar, Self);
}

/// A canonical linear combination; zero is the empty map.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element<B: Basis> {
    terms: BTreeMap<B, QScalar>,
}

impl<B: Basis> Default for Element<B> {
    fn default() -> Self {
        Element {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Basis> Element<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(B::one())
    }

    pub fn basis(b: B) -> Self {
        Self::term(QScalar::one(), b)
    }

    pub fn term(c: QScalar, b: B) -> Self {
        let mut out = Self::zero();
        out.add_term(b, &c);
        out
    }

    pub fn scalar(c: QScalar) -> Self {
        Self::term(c, B::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (QScalar, B)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (c, b) in terms {
            out.add_term(b, &c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, b: B, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(b) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let sum = &*o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&B, &QScalar)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn coefficient(&self, b: &B) -> QScalar {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<(&B, &QScalar)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        let mut out = Self::zero();
        for (b, x) in &self.terms {
            out.add_term(b.clone(), &(x * c));
        }
        out
    }

    /// Antilinear anti-automorphism extending the basis adjoint.
    pub fn star(&self) -> Self {
        let mut out = Self::zero();
        for (b, c) in &self.terms {
            let (factor, sb) = b.star_basis();
            out.add_term(sb, &(&c.conj() * &factor));
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }

    /// Keeps only the terms whose monomial satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&B) -> bool) -> Self {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b))
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }
}

impl<B: Basis> Add for &Element<B> {
    type Output = Element<B>;
    fn add(self, rhs: &Element<B>) -> Element<B> {
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.add_term(b.clone(), c);
        }
        out
    }
}

impl<B: Basis> Sub for &Element<B> {
    type Output = Element<B>;
    fn sub(self, rhs: &Element<B>) -> Element<B> {
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.add_term(b.clone(), &-c);
        }
        out
    }
}

impl<B: Basis> Neg for &Element<B> {
    type Output = Element<B>;
    fn neg(self) -> Element<B> {
        Element {
            terms: self.terms.iter().map(|(b, c)| (b.clone(), -c)).collect(),
        }
    }
}

impl<B: Basis> Mul for &Element<B> {
    type Output = Element<B>;
    fn mul(self, rhs: &Element<B>) -> Element<B> {
        let mut out = Element::zero();
        for (b1, c1) in &self.terms {
            for (b2, c2) in &rhs.terms {
                let c = c1 * c2;
                for (f, b) in b1.mul_basis(b2) {
                    out.add_term(b, &(&c * &f));
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<B: Basis> $tr for Element<B> {
            type Output = Element<B>;
            fn $m(self, rhs: Element<B>) -> Element<B> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<B: Basis> Neg for Element<B> {
    type Output = Element<B>;
    fn neg(self) -> Element<B> {
        -&self
    }
}

impl<B: Basis> fmt::Display for Element<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (b, c)) in self.terms.iter().enumerate() {
            let (negative, body) = format_term(b, c);
            match (idx, negative) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

/// Splits a term into a sign and an unsigned printed body so sums read
/// `a - b` rather than `a + -b`.
fn format_term<B: Basis>(b: &B, c: &QScalar) -> (bool, String) {
    let negative = c.leading_negative();
    let c = if negative { -c } else { c.clone() };
    let coeff = if c.is_single_term() {
        c.to_string()
    } else {
        format!("({c})")
    };
    let body = match (b.is_one(), c.is_one()) {
        (true, _) => coeff,
        (false, true) => b.to_string(),
        (false, false) => format!("{coeff} {b}"),
    };
    (negative, body)
}

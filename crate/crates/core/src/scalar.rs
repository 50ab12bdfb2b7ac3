//! Exact coefficients: Gaussian rationals and Laurent polynomials in the
//! formal deformation parameter `q`.
//!
//! `q` is treated as a real indeterminate, so conjugation acts on the
//! Gaussian-rational coefficients and leaves every power of `q` fixed.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An element `re + im·i` of ℚ(i).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_integer(n: i64) -> Self {
        GaussianRational::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    /// `num/den` as a real Gaussian rational. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        GaussianRational::new(
            BigRational::new(num.into(), den.into()),
            BigRational::zero(),
        )
    }

    pub fn imaginary_unit() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn zero() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GaussianRational::from_integer(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(GaussianRational::new(
            &self.re / &norm,
            -(&self.im / &norm),
        ))
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    /// True when the printed form starts with a minus sign, so a sum printer
    /// can emit ` - ` instead of ` + -`.
    fn is_negative_leading(&self) -> bool {
        if self.re.is_zero() {
            self.im.is_negative()
        } else {
            self.im.is_zero() && self.re.is_negative()
        }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |f: &mut fmt::Formatter<'_>, im: &BigRational| -> fmt::Result {
            if im.is_one() {
                write!(f, "i")
            } else if (-im.clone()).is_one() {
                write!(f, "-i")
            } else {
                fmt_rational(im, f)?;
                write!(f, "*i")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => fmt_rational(&self.re, f),
            (true, false) => imag(f, &self.im),
            (false, false) => {
                write!(f, "(")?;
                fmt_rational(&self.re, f)?;
                if self.im.is_negative() {
                    write!(f, " - ")?;
                    imag(f, &-self.im.clone())?;
                } else {
                    write!(f, " + ")?;
                    imag(f, &self.im)?;
                }
                write!(f, ")")
            }
        }
    }
}

/// A Laurent polynomial `Σ c_e q^e` with Gaussian-rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// scalars.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QScalar {
    terms: BTreeMap<BigInt, GaussianRational>,
}

impl QScalar {
    pub fn zero() -> Self {
        QScalar::default()
    }

    pub fn one() -> Self {
        QScalar::monomial(GaussianRational::one(), BigInt::zero())
    }

    /// `q^e`.
    pub fn q_pow(e: impl Into<BigInt>) -> Self {
        QScalar::monomial(GaussianRational::one(), e.into())
    }

    pub fn monomial(c: GaussianRational, e: impl Into<BigInt>) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e.into(), c);
        }
        QScalar { terms }
    }

    pub fn constant(c: GaussianRational) -> Self {
        QScalar::monomial(c, BigInt::zero())
    }

    pub fn from_integer(n: i64) -> Self {
        QScalar::constant(GaussianRational::from_integer(n))
    }

    pub fn imaginary_unit() -> Self {
        QScalar::constant(GaussianRational::imaginary_unit())
    }

    /// Builds a scalar from `(coefficient, exponent)` pairs, merging repeats.
    pub fn from_terms<I, E>(terms: I) -> Self
    where
        I: IntoIterator<Item = (GaussianRational, E)>,
        E: Into<BigInt>,
    {
        let mut out = QScalar::zero();
        for (c, e) in terms {
            out.add_term(e.into(), &c);
        }
        out
    }

    fn add_term(&mut self, e: BigInt, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
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

    pub fn is_one(&self) -> bool {
        self.as_q_power().is_some_and(|e| e.is_zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<&BigInt> {
        self.terms.keys().next()
    }

    pub fn max_exponent(&self) -> Option<&BigInt> {
        self.terms.keys().next_back()
    }

    /// Coefficient of `q^e` (zero if absent).
    pub fn coefficient(&self, e: &BigInt) -> GaussianRational {
        self.terms.get(e).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// Multiplies by `q^shift`.
    pub fn shift(&self, shift: &BigInt) -> Self {
        QScalar {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + shift, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return QScalar::zero();
        }
        QScalar {
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Conjugates every coefficient; powers of `q` are fixed.
    pub fn conj(&self) -> Self {
        QScalar {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.conj())).collect(),
        }
    }

    /// Evaluates at a numeric `q0 ∈ (0, 1)`.
    pub fn eval(&self, q0: f64) -> Result<Complex64> {
        if !(q0 > 0.0 && q0 < 1.0) {
            return Err(Error::Domain(format!("q0 = {q0} is outside (0, 1)")));
        }
        Ok(self.eval_unchecked(q0))
    }

    pub(crate) fn eval_unchecked(&self, q0: f64) -> Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                let p = match e.to_i32() {
                    Some(e) => q0.powi(e),
                    None => q0.powf(e.to_f64().unwrap_or(f64::INFINITY)),
                };
                c.to_complex() * p
            })
            .sum()
    }

    /// Returns `m` when the scalar is exactly `q^m`.
    pub fn as_q_power(&self) -> Option<BigInt> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        c.is_one().then(|| e.clone())
    }

    /// Like [`QScalar::as_q_power`] but narrowed to `i64`.
    pub fn as_small_q_power(&self) -> Option<i64> {
        self.as_q_power().and_then(|e| e.to_i64())
    }

    /// Exact quotient `self / divisor` in the Laurent ring, if it exists.
    pub fn checked_div(&self, divisor: &QScalar) -> Option<QScalar> {
        let (d_lo, d_hi) = (divisor.min_exponent()?.clone(), divisor.max_exponent()?.clone());
        let lead_inv = divisor.terms[&d_hi].inv()?;
        let mut rem = self.clone();
        let mut quot = QScalar::zero();
        // Long division from the top degree down; the remainder must vanish
        // before its degree span drops below the divisor's.
        while let Some(r_hi) = rem.max_exponent().cloned() {
            let r_lo = rem.min_exponent().cloned()?;
            if &r_hi - &r_lo < &d_hi - &d_lo {
                return None;
            }
            let c = &rem.terms[&r_hi] * &lead_inv;
            let shift = &r_hi - &d_hi;
            let step = divisor.shift(&shift).scale(&c);
            rem = &rem - &step;
            quot.add_term(shift, &c);
        }
        Some(quot)
    }
}

impl Add for &QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Add for QScalar {
    type Output = QScalar;
    fn add(self, rhs: QScalar) -> QScalar {
        &self + &rhs
    }
}

impl AddAssign<&QScalar> for QScalar {
    fn add_assign(&mut self, rhs: &QScalar) {
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c);
        }
    }
}

impl Sub for &QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), &-c);
        }
        out
    }
}

impl Sub for QScalar {
    type Output = QScalar;
    fn sub(self, rhs: QScalar) -> QScalar {
        &self - &rhs
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        -&self
    }
}

impl Mul for &QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        let mut out = QScalar::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for QScalar {
    type Output = QScalar;
    fn mul(self, rhs: QScalar) -> QScalar {
        &self * &rhs
    }
}

impl From<GaussianRational> for QScalar {
    fn from(c: GaussianRational) -> Self {
        QScalar::constant(c)
    }
}

fn fmt_q_term(
    f: &mut fmt::Formatter<'_>,
    c: &GaussianRational,
    e: &BigInt,
) -> fmt::Result {
    let qpart = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
        if e.is_one() {
            write!(f, "q")
        } else {
            write!(f, "q^{e}")
        }
    };
    if e.is_zero() {
        return write!(f, "{c}");
    }
    if c.is_one() {
        qpart(f)
    } else if (-c).is_one() {
        write!(f, "-")?;
        qpart(f)
    } else {
        write!(f, "{c}*")?;
        qpart(f)
    }
}

impl QScalar {
    /// True when printing starts with `-`, used by sum printers.
    pub(crate) fn leading_negative(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .values()
                .next()
                .is_some_and(GaussianRational::is_negative_leading)
    }

    /// True when the printed form is a single factor (no top-level `+`/`-`
    /// between terms), so it can be juxtaposed without parentheses.
    pub(crate) fn is_single_term(&self) -> bool {
        self.terms.len() <= 1
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Descending powers of q read most naturally.
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            if idx == 0 {
                fmt_q_term(f, c, e)?;
            } else if c.is_negative_leading() {
                write!(f, " - ")?;
                fmt_q_term(f, &-c, e)?;
            } else {
                write!(f, " + ")?;
                fmt_q_term(f, c, e)?;
            }
        }
        Ok(())
    }
}

/// Coefficients of `∏ (1 − q^e·X)` over the given exponents, indexed by the
/// power of `X`.
pub(crate) fn linear_factor_product<I: IntoIterator<Item = i64>>(exponents: I) -> Vec<QScalar> {
    let mut poly = vec![QScalar::one()];
    for e in exponents {
        let factor = -QScalar::q_pow(e);
        let mut next = poly.clone();
        next.push(QScalar::zero());
        for (s, c) in poly.iter().enumerate() {
            next[s + 1] += &(c * &factor);
        }
        poly = next;
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i64) -> QScalar {
        QScalar::q_pow(e)
    }

    fn gr(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(
            BigRational::from_integer(re.into()),
            BigRational::from_integer(im.into()),
        )
    }

    #[test]
    fn addition_cancels() {
        let a = &q(1) + &q(-1);
        assert_eq!(&a + &-q(-1), q(1));
        assert_eq!(&QScalar::zero() + &q(5), q(5));
        let half = QScalar::monomial(GaussianRational::ratio(1, 2), 2);
        assert_eq!(&half + &half, q(2));
    }

    #[test]
    fn multiplication_adds_exponents() {
        assert_eq!(&q(1) * &q(1), q(2));
        assert_eq!(&q(1) * &q(-1), QScalar::one());
        let a = QScalar::monomial(gr(1, 1), 1);
        let b = QScalar::constant(gr(1, -1));
        assert_eq!(&a * &b, QScalar::monomial(gr(2, 0), 1));
    }

    #[test]
    fn conjugation_fixes_q() {
        let iq = QScalar::monomial(gr(0, 1), 1);
        assert_eq!(iq.conj(), QScalar::monomial(gr(0, -1), 1));
        assert_eq!(q(3).conj(), q(3));
        let a = &QScalar::constant(gr(2, 1)) + &QScalar::monomial(gr(0, 1), -1);
        let b = &QScalar::constant(gr(2, -1)) + &QScalar::monomial(gr(0, -1), -1);
        assert_eq!(a.conj(), b);
    }

    #[test]
    fn evaluation() {
        assert!((q(2).eval(0.5).unwrap().re - 0.25).abs() < 1e-15);
        let a = &QScalar::one() - &q(2);
        assert!((a.eval(0.5).unwrap().re - 0.75).abs() < 1e-15);
        assert_eq!(QScalar::zero().eval(0.3).unwrap(), Complex64::new(0.0, 0.0));
        assert!(q(1).eval(1.0).is_err());
        assert!(q(1).eval(0.0).is_err());
        assert!(q(1).eval(-0.5).is_err());
    }

    #[test]
    fn pure_powers() {
        assert_eq!(q(3).as_small_q_power(), Some(3));
        assert_eq!(QScalar::monomial(gr(2, 0), 3).as_q_power(), None);
        assert_eq!(QScalar::one().as_small_q_power(), Some(0));
        assert_eq!((&q(1) + &q(2)).as_q_power(), None);
        assert_eq!(QScalar::zero().as_q_power(), None);
    }

    #[test]
    fn exact_division() {
        let one_minus_q2 = &QScalar::one() - &q(2);
        let one_plus_q = &QScalar::one() + &q(1);
        let one_minus_q = &QScalar::one() - &q(1);
        assert_eq!(one_minus_q2.checked_div(&one_plus_q), Some(one_minus_q.clone()));
        assert_eq!(q(5).checked_div(&q(3)), Some(q(2)));
        assert_eq!(QScalar::one().checked_div(&one_minus_q), None);
        assert_eq!(QScalar::zero().checked_div(&one_minus_q), Some(QScalar::zero()));
        assert_eq!(q(1).checked_div(&QScalar::zero()), None);
    }

    #[test]
    fn linear_factors() {
        // (1 - qX)(1 - q^2 X) = 1 - (q + q^2) X + q^3 X^2
        let p = linear_factor_product([1, 2]);
        assert_eq!(p.len(), 3);
        assert_eq!(p[0], QScalar::one());
        assert_eq!(p[1], -(&q(1) + &q(2)));
        assert_eq!(p[2], q(3));
        assert_eq!(linear_factor_product([]), vec![QScalar::one()]);
    }

    #[test]
    fn display() {
        let s = &(&QScalar::one() - &q(2)) + &QScalar::monomial(GaussianRational::ratio(3, 2), -1);
        assert_eq!(s.to_string(), "-q^2 + 1 + 3/2*q^-1");
        assert_eq!(QScalar::monomial(gr(1, -2), 1).to_string(), "(1 - 2*i)*q");
        assert_eq!(QScalar::monomial(gr(0, -1), 0).to_string(), "-i");
    }
}

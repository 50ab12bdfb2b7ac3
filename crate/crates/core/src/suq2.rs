//! The *-algebra `C[SU_q(2)]` in the normal basis `α^(i) γ^j γ*^k`.
//!
//! Relations, with `α^(i) = α^i` for `i ≥ 0` and `(α*)^(-i)` for `i < 0`:
//!
//! ```text
//! αγ = qγα,   αγ* = qγ*α,   γγ* = γ*γ,
//! α*α + γ*γ = 1 = αα* + q²γ*γ
//! ```
//!
//! Multiplication of normal monomials is done in closed form; the free-word
//! [`RewriteSystem`] reaches the same normal forms one relation at a time and
//! is kept as an independent route.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::element::{Basis, Element};
use crate::rewrite::{RewriteSystem, Rule, Strategy};
use crate::scalar::{linear_factor_product, QScalar};
use crate::torus::TorusOrder;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuLetter {
    Alpha,
    AlphaStar,
    Gamma,
    GammaStar,
}

impl SuLetter {
    pub const ALL: [SuLetter; 4] = [
        SuLetter::Alpha,
        SuLetter::AlphaStar,
        SuLetter::Gamma,
        SuLetter::GammaStar,
    ];

    pub fn star(self) -> SuLetter {
        match self {
            SuLetter::Alpha => SuLetter::AlphaStar,
            SuLetter::AlphaStar => SuLetter::Alpha,
            SuLetter::Gamma => SuLetter::GammaStar,
            SuLetter::GammaStar => SuLetter::Gamma,
        }
    }

    pub fn monomial(self) -> SuMonomial {
        match self {
            SuLetter::Alpha => SuMonomial::new(1, 0, 0),
            SuLetter::AlphaStar => SuMonomial::new(-1, 0, 0),
            SuLetter::Gamma => SuMonomial::new(0, 1, 0),
            SuLetter::GammaStar => SuMonomial::new(0, 0, 1),
        }
    }
}

impl fmt::Display for SuLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SuLetter::Alpha => "a",
            SuLetter::AlphaStar => "a*",
            SuLetter::Gamma => "g",
            SuLetter::GammaStar => "g*",
        })
    }
}

/// `α^(i) γ^j γ*^k`. Ordered lexicographically by `(i, j, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuMonomial {
    pub i: i64,
    pub j: u32,
    pub k: u32,
}

impl SuMonomial {
    pub const fn new(i: i64, j: u32, k: u32) -> Self {
        SuMonomial { i, j, k }
    }

    /// Weight under the diagonal torus, `i + j − k`.
    pub fn torus_weight(&self) -> i64 {
        self.i + self.j as i64 - self.k as i64
    }

    /// The letters of the normal word, α-part first.
    pub fn word(&self) -> Vec<SuLetter> {
        let a = if self.i >= 0 {
            SuLetter::Alpha
        } else {
            SuLetter::AlphaStar
        };
        let mut w = vec![a; self.i.unsigned_abs() as usize];
        w.extend(std::iter::repeat_n(SuLetter::Gamma, self.j as usize));
        w.extend(std::iter::repeat_n(SuLetter::GammaStar, self.k as usize));
        w
    }

    /// Inverse of [`SuMonomial::word`]; `None` if the word is not in normal
    /// shape.
    pub fn from_normal_word(word: &[SuLetter]) -> Option<Self> {
        let alphas = word
            .iter()
            .take_while(|l| matches!(l, SuLetter::Alpha | SuLetter::AlphaStar))
            .count();
        let (head, rest) = word.split_at(alphas);
        let i = match head.first() {
            None => 0,
            Some(&l) if head.iter().all(|&x| x == l) => {
                if l == SuLetter::Alpha {
                    alphas as i64
                } else {
                    -(alphas as i64)
                }
            }
            Some(_) => return None,
        };
        let j = rest.iter().take_while(|&&l| l == SuLetter::Gamma).count();
        let k = rest[j..]
            .iter()
            .take_while(|&&l| l == SuLetter::GammaStar)
            .count();
        (j + k == rest.len()).then_some(SuMonomial::new(i, j as u32, k as u32))
    }
}

/// `α^(a) · α^(b)` as `α^(e) · p(γγ*)`, with `p` given by its coefficients.
fn alpha_product(a: i64, b: i64) -> (i64, Vec<QScalar>) {
    if a.signum() * b.signum() >= 0 {
        return (a + b, vec![QScalar::one()]);
    }
    if a > 0 {
        // α^a α*^m with m = -b; α^m α*^m = ∏_{t=1..m} (1 − q^{2t} c).
        let m = -b;
        if a >= m {
            (a - m, linear_factor_product((1..=m).map(|t| 2 * t)))
        } else {
            // p(c) α*^r = α*^r p(q^{2r} c)
            let r = m - a;
            let p = linear_factor_product((1..=a).map(|t| 2 * t));
            (-r, rescale(p, 2 * r))
        }
    } else {
        // α*^m α^b with m = -a; α*^m α^m = ∏_{t=0..m-1} (1 − q^{-2t} c).
        let m = -a;
        if m >= b {
            (-(m - b), linear_factor_product((0..b).map(|t| -2 * t)))
        } else {
            // p(c) α^r = α^r p(q^{-2r} c)
            let r = b - m;
            let p = linear_factor_product((0..m).map(|t| -2 * t));
            (r, rescale(p, -2 * r))
        }
    }
}

/// `p(X) ↦ p(q^step X)`.
pub(crate) fn rescale(p: Vec<QScalar>, step: i64) -> Vec<QScalar> {
    p.into_iter()
        .enumerate()
        .map(|(s, c)| c.shift(&(step * s as i64).into()))
        .collect()
}

impl Basis for SuMonomial {
    fn one() -> Self {
        SuMonomial::new(0, 0, 0)
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn mul_basis(&self, rhs: &Self) -> Vec<(QScalar, Self)> {
        // γ^j γ*^k past α^(i'): each γ-letter contributes q^{-i'}.
        let pass = -((self.j + self.k) as i64) * rhs.i;
        let (i, poly) = alpha_product(self.i, rhs.i);
        poly.into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(s, c)| {
                let s = s as u32;
                (
                    c.shift(&pass.into()),
                    SuMonomial::new(i, self.j + rhs.j + s, self.k + rhs.k + s),
                )
            })
            .collect()
    }

    fn star_basis(&self) -> (QScalar, Self) {
        // (α^(i) γ^j γ*^k)* = γ^k γ*^j α^(-i) = q^{(j+k) i} α^(-i) γ^k γ*^j
        (
            QScalar::q_pow((self.j + self.k) as i64 * self.i),
            SuMonomial::new(-self.i, self.k, self.j),
        )
    }
}

fn power(f: &mut fmt::Formatter<'_>, sym: &str, e: u64) -> fmt::Result {
    if e == 1 {
        write!(f, "{sym}")
    } else {
        write!(f, "{sym}^{e}")
    }
}

impl fmt::Display for SuMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
            if !std::mem::replace(&mut first, false) {
                write!(f, " ")?;
            }
            Ok(())
        };
        if self.i != 0 {
            sep(f)?;
            power(f, if self.i > 0 { "a" } else { "a*" }, self.i.unsigned_abs())?;
        }
        if self.j != 0 {
            sep(f)?;
            power(f, "g", self.j as u64)?;
        }
        if self.k != 0 {
            sep(f)?;
            power(f, "g*", self.k as u64)?;
        }
        Ok(())
    }
}

pub type SuElement = Element<SuMonomial>;

pub fn generator(l: SuLetter) -> SuElement {
    SuElement::basis(l.monomial())
}

pub fn alpha() -> SuElement {
    generator(SuLetter::Alpha)
}

pub fn alpha_star() -> SuElement {
    generator(SuLetter::AlphaStar)
}

pub fn gamma() -> SuElement {
    generator(SuLetter::Gamma)
}

pub fn gamma_star() -> SuElement {
    generator(SuLetter::GammaStar)
}

/// The oriented relations:
///
/// ```text
/// γα → q⁻¹αγ    γ*α → q⁻¹αγ*    γα* → qα*γ    γ*α* → qα*γ*
/// γ*γ → γγ*     αα* → 1 − q²γγ*  α*α → 1 − γγ*
/// ```
pub fn rewrite_system() -> &'static RewriteSystem<SuLetter> {
    static SYSTEM: OnceLock<RewriteSystem<SuLetter>> = OnceLock::new();
    SYSTEM.get_or_init(|| {
        use SuLetter::*;
        let q = QScalar::q_pow;
        let one = QScalar::one;
        RewriteSystem::new(vec![
            Rule { lhs: [Gamma, Alpha], rhs: vec![(q(-1), vec![Alpha, Gamma])] },
            Rule { lhs: [GammaStar, Alpha], rhs: vec![(q(-1), vec![Alpha, GammaStar])] },
            Rule { lhs: [Gamma, AlphaStar], rhs: vec![(q(1), vec![AlphaStar, Gamma])] },
            Rule { lhs: [GammaStar, AlphaStar], rhs: vec![(q(1), vec![AlphaStar, GammaStar])] },
            Rule { lhs: [GammaStar, Gamma], rhs: vec![(one(), vec![Gamma, GammaStar])] },
            Rule {
                lhs: [Alpha, AlphaStar],
                rhs: vec![(one(), vec![]), (-q(2), vec![Gamma, GammaStar])],
            },
            Rule {
                lhs: [AlphaStar, Alpha],
                rhs: vec![(one(), vec![]), (-one(), vec![Gamma, GammaStar])],
            },
        ])
    })
}

/// Normal form of `coeff · word`, reducing leftmost redexes first.
pub fn normalize(coeff: QScalar, word: &[SuLetter]) -> SuElement {
    normalize_with(coeff, word, Strategy::Leftmost)
}

pub fn normalize_with(coeff: QScalar, word: &[SuLetter], strategy: Strategy) -> SuElement {
    let reduced = rewrite_system().reduce(coeff, word.to_vec(), strategy);
    SuElement::from_terms(reduced.into_iter().map(|(w, c)| {
        let m = SuMonomial::from_normal_word(&w).expect("irreducible words are normal");
        (c, m)
    }))
}

/// Splits `a` into its components in the `α`-degree grading.
pub fn alpha_degree_decompose(a: &SuElement) -> BTreeMap<i64, SuElement> {
    let mut out: BTreeMap<i64, SuElement> = BTreeMap::new();
    for (m, c) in a.terms() {
        out.entry(m.i).or_default().add_term(*m, c);
    }
    out
}

pub fn torus_weight(m: &SuMonomial) -> i64 {
    m.torus_weight()
}

/// Membership in `C[SU_q(2)/T_n]`: every monomial has weight in `nℤ`.
pub fn tn_member(a: &SuElement, n: TorusOrder) -> bool {
    a.monomials().all(|m| n.contains(m.torus_weight()))
}

/// `u^e` in the commutative Laurent ring `C[u, u⁻¹]` with `u* = u⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitaryPower(pub i64);

impl Basis for UnitaryPower {
    fn one() -> Self {
        UnitaryPower(0)
    }

    fn is_one(&self) -> bool {
        self.0 == 0
    }

    fn mul_basis(&self, rhs: &Self) -> Vec<(QScalar, Self)> {
        vec![(QScalar::one(), UnitaryPower(self.0 + rhs.0))]
    }

    fn star_basis(&self) -> (QScalar, Self) {
        (QScalar::one(), UnitaryPower(-self.0))
    }
}

impl fmt::Display for UnitaryPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "1"),
            1 => write!(f, "u"),
            e => write!(f, "u^{e}"),
        }
    }
}

pub type UnitaryLaurent = Element<UnitaryPower>;

/// The quotient by the ideal generated by `γ`: `γ, γ* ↦ 0`, `α ↦ u`,
/// `α* ↦ u⁻¹`.
pub fn quotient_by_gamma(a: &SuElement) -> UnitaryLaurent {
    UnitaryLaurent::from_terms(
        a.terms()
            .filter(|(m, _)| m.j == 0 && m.k == 0)
            .map(|(m, c)| (c.clone(), UnitaryPower(m.i))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational;

    fn q(e: i64) -> QScalar {
        QScalar::q_pow(e)
    }

    fn mono(i: i64, j: u32, k: u32) -> SuElement {
        SuElement::basis(SuMonomial::new(i, j, k))
    }

    use SuLetter::*;

    #[test]
    fn single_rule_reductions() {
        assert_eq!(normalize(QScalar::one(), &[Gamma, Alpha]), mono(1, 1, 0).scale(&q(-1)));
        assert_eq!(
            normalize(QScalar::one(), &[AlphaStar, Alpha]),
            &SuElement::one() - &mono(0, 1, 1)
        );
        assert_eq!(normalize(QScalar::one(), &[]), SuElement::one());
        assert!(normalize(QScalar::zero(), &[Alpha]).is_zero());
    }

    #[test]
    fn overlap_alpha_alphastar_alpha() {
        // Both contraction orders of αα*α give α − αγγ*.
        let expected = &alpha() - &mono(1, 1, 1);
        for s in [Strategy::Leftmost, Strategy::Rightmost] {
            assert_eq!(normalize_with(QScalar::one(), &[Alpha, AlphaStar, Alpha], s), expected);
        }
        assert!(rewrite_system().non_joinable_overlaps().is_empty());
    }

    #[test]
    fn closed_form_products() {
        assert_eq!(&alpha() * &gamma(), mono(1, 1, 0));
        assert_eq!(&gamma() * &alpha(), mono(1, 1, 0).scale(&q(-1)));
        // α²·α*³ = (1 − q²c)(1 − q⁴c) α*: cross-check against the rewriter.
        let lhs = &alpha().pow(2) * &alpha_star().pow(3);
        let word = [Alpha, Alpha, AlphaStar, AlphaStar, AlphaStar];
        assert_eq!(lhs, normalize(QScalar::one(), &word));
    }

    #[test]
    fn star_examples() {
        assert_eq!((&alpha() * &gamma()).star(), mono(-1, 0, 1).scale(&q(1)));
        assert_eq!(SuElement::one().star(), SuElement::one());
        let ig = gamma().scale(&QScalar::imaginary_unit());
        let expected = gamma_star().scale(&QScalar::constant(-&GaussianRational::imaginary_unit()));
        assert_eq!(ig.star(), expected);
    }

    #[test]
    fn unitality_relations() {
        let lhs1 = &(&alpha_star() * &alpha()) + &(&gamma_star() * &gamma());
        assert_eq!(lhs1, SuElement::one());
        let lhs2 = &(&alpha() * &alpha_star()) + &(&gamma_star() * &gamma()).scale(&q(2));
        assert_eq!(lhs2, SuElement::one());
    }

    #[test]
    fn grading() {
        let a = &mono(1, 1, 0) + &mono(-1, 0, 1);
        let parts = alpha_degree_decompose(&a);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&1], mono(1, 1, 0));
        assert_eq!(parts[&-1], mono(-1, 0, 1));
        let c = alpha_degree_decompose(&mono(0, 1, 1));
        assert_eq!(c.keys().copied().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn torus_weights_and_membership() {
        assert_eq!(SuMonomial::new(1, 2, 0).torus_weight(), 3);
        assert_eq!(SuMonomial::new(0, 1, 1).torus_weight(), 0);
        assert_eq!(SuMonomial::new(-1, 3, 1).torus_weight(), 1);
        assert!(!tn_member(&gamma(), TorusOrder::Infinite));
        assert!(tn_member(&mono(-1, 1, 0), TorusOrder::Infinite));
        for n in [1, 2, 5] {
            assert!(tn_member(&mono(0, 1, 1), TorusOrder::Finite(n)));
        }
        assert!(tn_member(&mono(0, 1, 1), TorusOrder::Infinite));
    }

    #[test]
    fn gamma_quotient() {
        let a = &alpha().pow(2) + &mono(0, 1, 1);
        assert_eq!(quotient_by_gamma(&a), UnitaryLaurent::basis(UnitaryPower(2)));
        assert!(quotient_by_gamma(&gamma()).is_zero());
        assert_eq!(quotient_by_gamma(&(&alpha_star() * &alpha())), UnitaryLaurent::one());
    }

    #[test]
    fn normal_word_round_trip() {
        for m in [SuMonomial::new(-3, 1, 2), SuMonomial::new(2, 0, 0), SuMonomial::new(0, 0, 0)] {
            assert_eq!(SuMonomial::from_normal_word(&m.word()), Some(m));
        }
        assert_eq!(SuMonomial::from_normal_word(&[Gamma, Alpha]), None);
        assert_eq!(SuMonomial::from_normal_word(&[Alpha, AlphaStar]), None);
    }

    #[test]
    fn display() {
        let e = &(&mono(1, 1, 0).scale(&q(-1)) - &mono(-2, 0, 3)) + &SuElement::one();
        assert_eq!(e.to_string(), "-a*^2 g*^3 + 1 + q^-1 a g");
    }
}

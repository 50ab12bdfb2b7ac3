//! The quantum disk `C[D̄_q] = C[SU_q(2)]/⟨γ − γ*⟩` and the quotient map
//! `F_q`.
//!
//! Generators `y = F_q(γ)` and `z = F_q(α)*`, relations
//!
//! ```text
//! yz = qzy,   y = y*,   zz* + y² = 1 = z*z + q²y²
//! ```
//!
//! Normal basis `y^J z^K`, where a negative `K` stands for `z*^(-K)`. Since
//! `F_q(α) = z*`, the α-exponent `i` of a monomial upstairs lands on
//! `K = -i` downstairs.

use std::fmt;
use std::sync::OnceLock;

use crate::element::{Basis, Element};
use crate::error::{Error, Result};
use crate::rewrite::{RewriteSystem, Rule, Strategy};
use crate::scalar::{linear_factor_product, QScalar};
use crate::suq2::{rescale, SuElement, SuMonomial};
use crate::torus::TorusOrder;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiskLetter {
    Y,
    Z,
    ZStar,
}

impl DiskLetter {
    pub const ALL: [DiskLetter; 3] = [DiskLetter::Y, DiskLetter::Z, DiskLetter::ZStar];

    pub fn monomial(self) -> DiskMonomial {
        match self {
            DiskLetter::Y => DiskMonomial::new(1, 0),
            DiskLetter::Z => DiskMonomial::new(0, 1),
            DiskLetter::ZStar => DiskMonomial::new(0, -1),
        }
    }
}

impl fmt::Display for DiskLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiskLetter::Y => "y",
            DiskLetter::Z => "z",
            DiskLetter::ZStar => "z*",
        })
    }
}

/// `y^J z^K` (or `y^J z*^(-K)` when `K < 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiskMonomial {
    pub y_exp: u32,
    pub z_exp: i64,
}

/// Which half of the quantum plane a monomial lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZSide {
    Z,
    ZStar,
}

impl DiskMonomial {
    pub const fn new(y_exp: u32, z_exp: i64) -> Self {
        DiskMonomial { y_exp, z_exp }
    }

    /// `J + |K|`.
    pub fn degree(&self) -> u64 {
        self.y_exp as u64 + self.z_exp.unsigned_abs()
    }

    pub fn word(&self) -> Vec<DiskLetter> {
        let z = if self.z_exp >= 0 {
            DiskLetter::Z
        } else {
            DiskLetter::ZStar
        };
        let mut w = vec![DiskLetter::Y; self.y_exp as usize];
        w.extend(std::iter::repeat_n(z, self.z_exp.unsigned_abs() as usize));
        w
    }

    pub fn from_normal_word(word: &[DiskLetter]) -> Option<Self> {
        let j = word.iter().take_while(|&&l| l == DiskLetter::Y).count();
        let rest = &word[j..];
        let k = match rest.first() {
            None => 0,
            Some(&l) if l != DiskLetter::Y && rest.iter().all(|&x| x == l) => {
                if l == DiskLetter::Z {
                    rest.len() as i64
                } else {
                    -(rest.len() as i64)
                }
            }
            Some(_) => return None,
        };
        Some(DiskMonomial::new(j as u32, k))
    }

    /// Monomials without `z`-part are compatible with both sides.
    pub fn compatible_with(&self, side: ZSide) -> bool {
        match side {
            ZSide::Z => self.z_exp >= 0,
            ZSide::ZStar => self.z_exp <= 0,
        }
    }
}

/// `z^(a) · z^(b)` as `p(y²) · z^(e)`, coefficients of `p` listed by power of
/// `y²`.
fn z_product(a: i64, b: i64) -> (i64, Vec<QScalar>) {
    if a.signum() * b.signum() >= 0 {
        return (a + b, vec![QScalar::one()]);
    }
    if a > 0 {
        // z^m z*^m = ∏_{t=0..m-1} (1 − q^{-2t} y²)
        let m = -b;
        if a >= m {
            // z^r p(u) = p(q^{-2r} u) z^r
            let r = a - m;
            let p = linear_factor_product((0..m).map(|t| -2 * t));
            (r, rescale(p, -2 * r))
        } else {
            (-(m - a), linear_factor_product((0..a).map(|t| -2 * t)))
        }
    } else {
        // z*^m z^m = ∏_{t=1..m} (1 − q^{2t} y²)
        let m = -a;
        if m >= b {
            // z*^r p(u) = p(q^{2r} u) z*^r
            let r = m - b;
            let p = linear_factor_product((1..=b).map(|t| 2 * t));
            (-r, rescale(p, 2 * r))
        } else {
            (b - m, linear_factor_product((1..=m).map(|t| 2 * t)))
        }
    }
}

impl Basis for DiskMonomial {
    fn one() -> Self {
        DiskMonomial::new(0, 0)
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn mul_basis(&self, rhs: &Self) -> Vec<(QScalar, Self)> {
        // z^(K) y^(J') = q^{-K J'} y^(J') z^(K)
        let pass = -self.z_exp * rhs.y_exp as i64;
        let (k, poly) = z_product(self.z_exp, rhs.z_exp);
        let base = self.y_exp + rhs.y_exp;
        poly.into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(s, c)| {
                (
                    c.shift(&pass.into()),
                    DiskMonomial::new(base + 2 * s as u32, k),
                )
            })
            .collect()
    }

    fn star_basis(&self) -> (QScalar, Self) {
        // (y^J z^K)* = z^(-K) y^J = q^{K J} y^J z^(-K)
        (
            QScalar::q_pow(self.z_exp * self.y_exp as i64),
            DiskMonomial::new(self.y_exp, -self.z_exp),
        )
    }
}

impl fmt::Display for DiskMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let pow = |f: &mut fmt::Formatter<'_>, s: &str, e: u64| {
            if e == 1 {
                write!(f, "{s}")
            } else {
                write!(f, "{s}^{e}")
            }
        };
        if self.y_exp > 0 {
            pow(f, "y", self.y_exp as u64)?;
            if self.z_exp != 0 {
                write!(f, " ")?;
            }
        }
        if self.z_exp != 0 {
            let s = if self.z_exp > 0 { "z" } else { "z*" };
            pow(f, s, self.z_exp.unsigned_abs())?;
        }
        Ok(())
    }
}

pub type DiskElement = Element<DiskMonomial>;

pub fn y() -> DiskElement {
    DiskElement::basis(DiskLetter::Y.monomial())
}

pub fn z() -> DiskElement {
    DiskElement::basis(DiskLetter::Z.monomial())
}

pub fn z_star() -> DiskElement {
    DiskElement::basis(DiskLetter::ZStar.monomial())
}

/// ```text
/// zy → q⁻¹yz    z*y → qyz*    zz* → 1 − y²    z*z → 1 − q²y²
/// ```
pub fn rewrite_system() -> &'static RewriteSystem<DiskLetter> {
    static SYSTEM: OnceLock<RewriteSystem<DiskLetter>> = OnceLock::new();
    SYSTEM.get_or_init(|| {
        use DiskLetter::*;
        let q = QScalar::q_pow;
        let one = QScalar::one;
        RewriteSystem::new(vec![
            Rule { lhs: [Z, Y], rhs: vec![(q(-1), vec![Y, Z])] },
            Rule { lhs: [ZStar, Y], rhs: vec![(q(1), vec![Y, ZStar])] },
            Rule { lhs: [Z, ZStar], rhs: vec![(one(), vec![]), (-one(), vec![Y, Y])] },
            Rule { lhs: [ZStar, Z], rhs: vec![(one(), vec![]), (-q(2), vec![Y, Y])] },
        ])
    })
}

pub fn disk_normalize(coeff: QScalar, word: &[DiskLetter]) -> DiskElement {
    disk_normalize_with(coeff, word, Strategy::Leftmost)
}

pub fn disk_normalize_with(coeff: QScalar, word: &[DiskLetter], strategy: Strategy) -> DiskElement {
    let reduced = rewrite_system().reduce(coeff, word.to_vec(), strategy);
    DiskElement::from_terms(reduced.into_iter().map(|(w, c)| {
        let m = DiskMonomial::from_normal_word(&w).expect("irreducible words are normal");
        (c, m)
    }))
}

/// Image of a normal monomial: `F_q(α^(i) γ^j γ*^k) = q^{iJ} y^J z^(-i)`
/// with `J = j + k`.
pub fn f_q_monomial(m: &SuMonomial) -> (QScalar, DiskMonomial) {
    let big_j = m.j + m.k;
    (
        QScalar::q_pow(m.i * big_j as i64),
        DiskMonomial::new(big_j, -m.i),
    )
}

/// The quotient map `F_q : C[SU_q(2)] → C[D̄_q]`.
pub fn f_q(a: &SuElement) -> DiskElement {
    DiskElement::from_terms(a.terms().map(|(m, c)| {
        let (f, d) = f_q_monomial(m);
        (c * &f, d)
    }))
}

/// Membership of `y^J z^K` in `F_q(C[SU_q(2)/T_n])`.
///
/// The preimages are `α^(-K) γ^j γ*^k` with `j + k = J`, of torus weight
/// `-K + t` for `t = j − k ∈ {−J, −J+2, …, J}`; one of them must have weight
/// in `nℤ`.
pub fn disk_tn_member(m: &DiskMonomial, n: TorusOrder) -> bool {
    let big_j = m.y_exp as i64;
    (0..=big_j).any(|k| n.congruent(big_j - 2 * k, m.z_exp))
}

pub fn disk_element_tn_member(a: &DiskElement, n: TorusOrder) -> bool {
    a.monomials().all(|m| disk_tn_member(m, n))
}

/// The `m` with `ab = q^m · ba` exactly, if one exists.
pub fn q_commutation_exponent(a: &DiskElement, b: &DiskElement) -> Result<Option<i64>> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Precondition(
            "q-commutation needs nonzero operands".into(),
        ));
    }
    let ab = a * b;
    let ba = b * a;
    let Some((lead, ba_c)) = ba.leading() else {
        return Ok(None);
    };
    let ab_c = ab.coefficient(lead);
    let (Some(hi), Some(lo)) = (ab_c.min_exponent(), ba_c.min_exponent()) else {
        return Ok(None);
    };
    let m = hi - lo;
    if ba.scale(&QScalar::q_pow(m.clone())) != ab {
        return Ok(None);
    }
    Ok(num_traits::ToPrimitive::to_i64(&m))
}

/// Quantum-plane exponent for `(y^j z^k)(y^j' z^k') = q^e (y^j' z^k')(y^j z^k)`:
/// `e = jk' − j'k` on the `z` side, negated on the `z*` side.
pub fn monomial_exponent(side: ZSide, j: i64, k: i64, j2: i64, k2: i64) -> i64 {
    let e = j * k2 - j2 * k;
    match side {
        ZSide::Z => e,
        ZSide::ZStar => -e,
    }
}

/// [`monomial_exponent`] on a pair of disk monomials. Pairs that mix `z`
/// and `z*` are refused: their products are not monomials.
pub fn monomial_pair_exponent(a: &DiskMonomial, b: &DiskMonomial) -> Result<i64> {
    let side = if a.z_exp > 0 || b.z_exp > 0 {
        ZSide::Z
    } else {
        ZSide::ZStar
    };
    if !(a.compatible_with(side) && b.compatible_with(side)) {
        return Err(Error::Precondition(format!(
            "{a} and {b} mix z and z*; use q_commutation_exponent"
        )));
    }
    let (k, k2) = (a.z_exp.abs(), b.z_exp.abs());
    Ok(monomial_exponent(
        side,
        a.y_exp as i64,
        k,
        b.y_exp as i64,
        k2,
    ))
}

/// The scalar `ω` with `lhs = ω · rhs`, when the two are proportional over
/// the Laurent ring.
pub fn proportionality(lhs: &DiskElement, rhs: &DiskElement) -> Option<QScalar> {
    let (lead, rc) = rhs.leading()?;
    let omega = lhs.coefficient(lead).checked_div(rc)?;
    (rhs.scale(&omega) == *lhs).then_some(omega)
}

fn product_by_rewriting(a: &DiskElement, b: &DiskElement) -> DiskElement {
    let words = a.terms().flat_map(|(m1, c1)| {
        b.terms().map(move |(m2, c2)| {
            let mut w = m1.word();
            w.extend(m2.word());
            (c1 * c2, w)
        })
    });
    let reduced = rewrite_system().reduce_sum(words, Strategy::Rightmost);
    DiskElement::from_terms(reduced.into_iter().map(|(w, c)| {
        (c, DiskMonomial::from_normal_word(&w).expect("irreducible words are normal"))
    }))
}

/// Independent check of `ab = ω·ba`: both products are formed by free-word
/// rewriting and `ω` is found by exact Laurent division, so any
/// proportionality constant is detected, not only pure powers of `q`.
pub fn brute_force_commutation_oracle(a: &DiskElement, b: &DiskElement) -> Option<QScalar> {
    if a.is_zero() || b.is_zero() {
        return None;
    }
    let ab = product_by_rewriting(a, b);
    let ba = product_by_rewriting(b, a);
    proportionality(&ab, &ba)
}

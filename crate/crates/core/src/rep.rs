//! The standard representation `ρ_q` on `ℓ²(ℤ₊)`, truncated to
//! `span{e_0, …, e_{N−1}}` at a numeric `q0 ∈ (0, 1)`:
//!
//! ```text
//! ρ(α) e_n = √(1 − q0^{2n}) e_{n−1},    ρ(γ) e_n = −q0^n e_n
//! ```
//!
//! The matrix of a single normal monomial is the exact compression of the
//! infinite operator. Products of truncated matrices are not: `α*` pushes
//! `e_{N−1}` out of the window, so comparisons involving products skip the
//! last few columns (see [`edge_margin`]).

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::disk::{f_q, DiskElement, DiskMonomial};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::spectrum::tn_monomials;
use crate::suq2::{alpha_degree_decompose, quotient_by_gamma, SuElement, SuMonomial};
use crate::torus::TorusOrder;

pub type CMatrix = DMatrix<Complex64>;

pub const RELATION_TOLERANCE: f64 = 1e-12;
pub const HOMOMORPHISM_TOLERANCE: f64 = 1e-10;
pub const RANK_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Debug)]
pub struct TruncatedRep {
    dim: usize,
    q0: f64,
    alpha: CMatrix,
    alpha_star: CMatrix,
    gamma: CMatrix,
}

impl TruncatedRep {
    pub fn new(dim: usize, q0: f64) -> Result<Self> {
        if !(q0 > 0.0 && q0 < 1.0) {
            return Err(Error::Domain(format!("q0 = {q0} is outside (0, 1)")));
        }
        if dim == 0 {
            return Err(Error::Validation("truncation dimension must be positive".into()));
        }
        let mut alpha = CMatrix::zeros(dim, dim);
        for n in 1..dim {
            alpha[(n - 1, n)] = Complex64::new((1.0 - q0.powi(2 * n as i32)).sqrt(), 0.0);
        }
        let gamma = CMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
            dim,
            (0..dim).map(|n| Complex64::new(-q0.powi(n as i32), 0.0)),
        ));
        Ok(TruncatedRep {
            dim,
            q0,
            alpha_star: alpha.adjoint(),
            alpha,
            gamma,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn q0(&self) -> f64 {
        self.q0
    }

    pub fn alpha(&self) -> &CMatrix {
        &self.alpha
    }

    pub fn alpha_star(&self) -> &CMatrix {
        &self.alpha_star
    }

    /// `ρ(γ) = ρ(γ*)`: the γ-matrix is real diagonal.
    pub fn gamma(&self) -> &CMatrix {
        &self.gamma
    }

    fn power(&self, base: &CMatrix, e: u64) -> CMatrix {
        let mut out = CMatrix::identity(self.dim, self.dim);
        for _ in 0..e {
            out = &out * base;
        }
        out
    }

    pub fn monomial_matrix(&self, m: &SuMonomial) -> CMatrix {
        let shift = if m.i >= 0 {
            self.power(&self.alpha, m.i as u64)
        } else {
            self.power(&self.alpha_star, m.i.unsigned_abs())
        };
        shift * self.power(&self.gamma, (m.j + m.k) as u64)
    }

    /// `y ↦ ρ(γ)`, `z ↦ ρ(α*)`, `z* ↦ ρ(α)`.
    pub fn disk_monomial_matrix(&self, m: &DiskMonomial) -> CMatrix {
        let z = if m.z_exp >= 0 {
            self.power(&self.alpha_star, m.z_exp as u64)
        } else {
            self.power(&self.alpha, m.z_exp.unsigned_abs())
        };
        self.power(&self.gamma, m.y_exp as u64) * z
    }
}

fn eval_element<B, F>(a: &Element<B>, rep: &TruncatedRep, mat: F) -> CMatrix
where
    B: crate::element::Basis,
    F: Fn(&B) -> CMatrix,
{
    let mut out = CMatrix::zeros(rep.dim, rep.dim);
    for (m, c) in a.terms() {
        out += mat(m) * c.eval_unchecked(rep.q0);
    }
    out
}

pub fn rep_matrix(a: &SuElement, rep: &TruncatedRep) -> CMatrix {
    eval_element(a, rep, |m| rep.monomial_matrix(m))
}

pub fn disk_rep_matrix(a: &DiskElement, rep: &TruncatedRep) -> CMatrix {
    eval_element(a, rep, |m| rep.disk_monomial_matrix(m))
}

/// Largest number of `α*` letters in any monomial of `a`: the matrix of `a`
/// can carry `e_n` up to `e_{n+d}`.
pub fn edge_margin(a: &SuElement) -> usize {
    a.monomials()
        .map(|m| if m.i < 0 { m.i.unsigned_abs() as usize } else { 0 })
        .max()
        .unwrap_or(0)
}

/// Max entry modulus over columns `0..cols`.
pub fn max_abs_on_columns(m: &CMatrix, cols: usize) -> f64 {
    let cols = cols.min(m.ncols());
    (0..cols)
        .flat_map(|c| m.column(c).iter().map(|x| x.norm()).collect::<Vec<_>>())
        .fold(0.0, f64::max)
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationResidual {
    pub relation: &'static str,
    pub residual: f64,
}

/// Residuals of the defining relations evaluated on raw generator matrices,
/// restricted to `e_0, …, e_{N−2}`.
pub fn relation_residuals(rep: &TruncatedRep) -> Result<Vec<RelationResidual>> {
    if rep.dim < 3 {
        return Err(Error::Precondition("relation check needs N >= 3".into()));
    }
    let (a, s, g) = (&rep.alpha, &rep.alpha_star, &rep.gamma);
    // ρ(γ*) is the adjoint of the γ-matrix, which is the γ-matrix itself.
    let gs = g.adjoint();
    let id = CMatrix::identity(rep.dim, rep.dim);
    let q = Complex64::new(rep.q0, 0.0);
    let checks: [(&'static str, CMatrix); 5] = [
        ("a g - q g a", a * g - g * a * q),
        ("a g* - q g* a", a * &gs - &gs * a * q),
        ("g g* - g* g", g * &gs - &gs * g),
        ("a* a + g* g - 1", s * a + &gs * g - &id),
        ("a a* + q^2 g* g - 1", a * s + &gs * g * (q * q) - &id),
    ];
    Ok(checks
        .into_iter()
        .map(|(relation, m)| RelationResidual {
            relation,
            residual: max_abs_on_columns(&m, rep.dim - 1),
        })
        .collect())
}

pub fn max_relation_residual(rep: &TruncatedRep) -> Result<f64> {
    Ok(relation_residuals(rep)?
        .iter()
        .map(|r| r.residual)
        .fold(0.0, f64::max))
}

/// `|(αα* + q²γ*γ − 1)(e_{N−1})|`, which truncation sets to `1 − q0^{2N}`.
pub fn top_edge_residual(rep: &TruncatedRep) -> f64 {
    let (a, s, g) = (&rep.alpha, &rep.alpha_star, &rep.gamma);
    let q2 = Complex64::new(rep.q0 * rep.q0, 0.0);
    let m = a * s + g.adjoint() * g * q2 - CMatrix::identity(rep.dim, rep.dim);
    m[(rep.dim - 1, rep.dim - 1)].norm()
}

/// Whether the γ-matrix is diagonal with entries exactly `−q0^n`.
pub fn gamma_spectrum_exact(rep: &TruncatedRep) -> bool {
    let g = &rep.gamma;
    (0..rep.dim).all(|r| {
        (0..rep.dim).all(|c| {
            let expected = if r == c { -rep.q0.powi(r as i32) } else { 0.0 };
            g[(r, c)] == Complex64::new(expected, 0.0)
        })
    })
}

/// The `i` with `ρ(a)` supported on entries `(n − i, n)`, for `a` in a
/// single component of the α-grading. `None` when the matrix vanishes.
pub fn shift_degree(a: &SuElement, rep: &TruncatedRep) -> Result<Option<i64>> {
    if alpha_degree_decompose(a).len() > 1 {
        return Err(Error::Precondition(
            "shift degree needs an element of a single alpha-degree".into(),
        ));
    }
    let m = rep_matrix(a, rep);
    let mut found: Option<i64> = None;
    for r in 0..rep.dim {
        for c in 0..rep.dim {
            if m[(r, c)].norm() == 0.0 {
                continue;
            }
            let d = c as i64 - r as i64;
            match found {
                None => found = Some(d),
                Some(f) if f == d => {}
                Some(_) => return Ok(None),
            }
        }
    }
    Ok(found)
}

/// `a ∈ ker ρ_q`, decided exactly: the kernel is the ideal generated by
/// `γ − γ*`, which is also the kernel of `F_q`.
pub fn kernel_membership(a: &SuElement) -> bool {
    f_q(a).is_zero()
}

/// Numeric shadow of [`kernel_membership`]: `ρ(a)` vanishes on
/// `e_0, …, e_{N−1−d}` within `tol`, `d` the maximal α-degree magnitude.
pub fn kernel_vanishes_numerically(a: &SuElement, rep: &TruncatedRep, tol: f64) -> bool {
    let d = a.monomials().map(|m| m.i.unsigned_abs() as usize).max().unwrap_or(0);
    let cols = rep.dim.saturating_sub(d);
    max_abs_on_columns(&rep_matrix(a, rep), cols) < tol
}

/// Linear independence of the matrices of all disk monomials with
/// `J + |K| ≤ degree_bound` (numerical rank with relative tolerance
/// [`RANK_TOLERANCE`]).
pub fn faithfulness_rank(degree_bound: u32, rep: &TruncatedRep) -> Result<bool> {
    let needed = 2 * degree_bound as usize + 4;
    if rep.dim < needed {
        return Err(Error::Precondition(format!(
            "faithfulness check at degree {degree_bound} needs N >= {needed}, got {}",
            rep.dim
        )));
    }
    let monos = tn_monomials(TorusOrder::Finite(1), degree_bound);
    let n2 = rep.dim * rep.dim;
    let mut family = CMatrix::zeros(n2, monos.len());
    for (col, m) in monos.iter().enumerate() {
        let mat = rep.disk_monomial_matrix(m);
        family.column_mut(col).copy_from_slice(mat.as_slice());
    }
    let sv = family.svd(false, false).singular_values;
    let max = sv.iter().copied().fold(0.0, f64::max);
    if max == 0.0 {
        return Ok(false);
    }
    let rank = sv.iter().filter(|&&s| s > RANK_TOLERANCE * max).count();
    Ok(rank == monos.len())
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompactIdealReport {
    /// `ρ(α*γ)` has nonzero entries only on `(n+1, n)`.
    pub weighted_shift: bool,
    pub weights: Vec<f64>,
    pub weights_nonzero: bool,
    pub weights_distinct: bool,
    /// `α*γ ∈ C[SU_q(2)/T_n]`.
    pub generator_in_subalgebra: bool,
    /// Images of `C[SU_q(2)/T_n]` monomials under `γ ↦ 0` commute and the
    /// quotient map is multiplicative on them.
    pub quotient_abelian: bool,
}

impl CompactIdealReport {
    pub fn passed(&self) -> bool {
        self.weighted_shift
            && self.weights_nonzero
            && self.weights_distinct
            && self.generator_in_subalgebra
            && self.quotient_abelian
    }
}

/// Finite-dimensional checks behind the statement that `ρ_q` restricted to
/// `C[SU_q(2)/T_n]` has compact ideal part and abelian quotient.
pub fn compact_ideal_check(n: TorusOrder, rep: &TruncatedRep) -> CompactIdealReport {
    let a_star_g = SuElement::basis(SuMonomial::new(-1, 1, 0));
    let m = rep_matrix(&a_star_g, rep);
    let weighted_shift = (0..rep.dim).all(|r| {
        (0..rep.dim).all(|c| r == c + 1 || m[(r, c)].norm() == 0.0)
    });
    // The last column is cut off by truncation.
    let weights: Vec<f64> = (0..rep.dim.saturating_sub(1)).map(|c| m[(c + 1, c)].re).collect();
    let weights_nonzero = weights.iter().all(|&w| w != 0.0);
    let mut sorted = weights.clone();
    sorted.sort_by(f64::total_cmp);
    let weights_distinct = sorted.windows(2).all(|w| w[0] != w[1]);

    let small: Vec<SuElement> = (-3..=3i64)
        .flat_map(|i| (0..=2u32).flat_map(move |j| (0..=2u32).map(move |k| SuMonomial::new(i, j, k))))
        .filter(|mono| n.contains(mono.torus_weight()))
        .map(SuElement::basis)
        .collect();
    let quotient_abelian = small.iter().all(|x| {
        small.iter().all(|y| {
            let (qx, qy) = (quotient_by_gamma(x), quotient_by_gamma(y));
            &qx * &qy == &qy * &qx && quotient_by_gamma(&(x * y)) == &qx * &qy
        })
    });

    CompactIdealReport {
        weighted_shift,
        weights,
        weights_nonzero,
        weights_distinct,
        generator_in_subalgebra: n.contains(SuMonomial::new(-1, 1, 0).torus_weight()),
        quotient_abelian,
    }
}

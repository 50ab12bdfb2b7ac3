//! Root-system data for quantized homogeneous spaces `G/K`.
//!
//! Cartan matrices follow `a_ij = 2(α_i, α_j)/(α_i, α_i)`, so the
//! symmetrizers `d_i = (α_i, α_i)/2` make `diag(d)·A` symmetric. The bilinear
//! form is normalized so short roots have `(α, α) = 2`, giving
//! `d_i ∈ {1, 2, 3}` and `q_i = q^{d_i}`. Under that normalization the
//! fundamental weights pair with simple roots as `(ω_j, α_i) = d_i δ_ij`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::torus::TorusOrder;

pub type CartanMatrix = Vec<Vec<i64>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    pub label: String,
    pub cartan: CartanMatrix,
    pub d: Vec<u32>,
}

impl RootDatum {
    /// Parses labels such as `A3`, `G2` or `A1xB2` (block-diagonal product).
    pub fn from_type(label: &str) -> Result<Self> {
        let parts: Vec<&str> = label
            .split(['x', '×', '*'])
            .map(str::trim)
            .collect();
        let mut blocks = Vec::new();
        for p in &parts {
            blocks.push(simple_cartan(p)?);
        }
        let cartan = block_diagonal(&blocks);
        let d = symmetrizers(&cartan)?;
        Ok(RootDatum {
            label: parts.join("x"),
            cartan,
            d,
        })
    }

    pub fn from_cartan(cartan: CartanMatrix) -> Result<Self> {
        let d = symmetrizers(&cartan)?;
        Ok(RootDatum {
            label: "custom".into(),
            cartan,
            d,
        })
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn is_symmetrized(&self) -> bool {
        let r = self.rank();
        (0..r).all(|i| {
            (0..r).all(|j| self.d[i] as i64 * self.cartan[i][j] == self.d[j] as i64 * self.cartan[j][i])
        })
    }
}

fn simple_cartan(label: &str) -> Result<CartanMatrix> {
    let bad = || Error::Validation(format!("unknown root system type '{label}'"));
    let mut chars = label.chars();
    let series = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
    let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
    let chain = |r: usize| -> CartanMatrix {
        let mut m = vec![vec![0i64; r]; r];
        for i in 0..r {
            m[i][i] = 2;
            if i + 1 < r {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
        }
        m
    };
    let m = match (series, rank) {
        ('A', r) if r >= 1 => chain(r),
        ('B', r) if r >= 2 => {
            let mut m = chain(r);
            m[r - 1][r - 2] = -2;
            m
        }
        ('C', r) if r >= 2 => {
            let mut m = chain(r);
            m[r - 2][r - 1] = -2;
            m
        }
        ('D', r) if r >= 4 => {
            let mut m = chain(r);
            m[r - 2][r - 1] = 0;
            m[r - 1][r - 2] = 0;
            m[r - 3][r - 1] = -1;
            m[r - 1][r - 3] = -1;
            m
        }
        ('E', r) if (6..=8).contains(&r) => {
            // Bourbaki labelling: chain 1-3-4-…-r, node 2 attached to 4.
            let mut m = vec![vec![0i64; r]; r];
            let mut link = |a: usize, b: usize| {
                m[a - 1][b - 1] = -1;
                m[b - 1][a - 1] = -1;
            };
            link(1, 3);
            link(2, 4);
            for a in 3..r {
                link(a, a + 1);
            }
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 2;
            }
            m
        }
        ('F', 4) => vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, 0],
            vec![0, -2, 2, -1],
            vec![0, 0, -1, 2],
        ],
        ('G', 2) => vec![vec![2, -3], vec![-1, 2]],
        _ => return Err(bad()),
    };
    Ok(m)
}

fn block_diagonal(blocks: &[CartanMatrix]) -> CartanMatrix {
    let r: usize = blocks.iter().map(Vec::len).sum();
    let mut m = vec![vec![0i64; r]; r];
    let mut off = 0;
    for b in blocks {
        for (i, row) in b.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                m[off + i][off + j] = x;
            }
        }
        off += b.len();
    }
    m
}

/// Minimal positive integers `d` with `diag(d)·A` symmetric, normalized per
/// connected component so the short roots get `d_i = 1`.
///
/// Rejects matrices that are not Cartan matrices of a finite-type
/// (product of simple) root system.
pub fn symmetrizers(cartan: &CartanMatrix) -> Result<Vec<u32>> {
    let r = cartan.len();
    let invalid = |msg: String| Err(Error::Validation(format!("invalid Cartan matrix: {msg}")));
    if r == 0 {
        return invalid("empty".into());
    }
    if cartan.iter().any(|row| row.len() != r) {
        return invalid("not square".into());
    }
    for i in 0..r {
        if cartan[i][i] != 2 {
            return invalid(format!("diagonal entry {} is not 2", i + 1));
        }
        for j in 0..r {
            if i != j {
                if cartan[i][j] > 0 {
                    return invalid(format!("positive off-diagonal entry at ({}, {})", i + 1, j + 1));
                }
                if (cartan[i][j] == 0) != (cartan[j][i] == 0) {
                    return invalid(format!("zero pattern not symmetric at ({}, {})", i + 1, j + 1));
                }
            }
        }
    }

    // d_i a_ij = d_j a_ji, propagated over each connected component.
    let mut d: Vec<Option<Rational64>> = vec![None; r];
    let mut out = vec![0u32; r];
    for root in 0..r {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some(Rational64::from_integer(1));
        let mut component = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].expect("visited");
            for j in 0..r {
                if i == j || cartan[i][j] == 0 {
                    continue;
                }
                let dj = di * Rational64::new(cartan[i][j], cartan[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        component.push(j);
                        queue.push_back(j);
                    }
                    Some(existing) if existing != dj => {
                        return invalid("not symmetrizable".into());
                    }
                    Some(_) => {}
                }
            }
        }
        let lcm = component
            .iter()
            .fold(1i64, |acc, &i| acc.lcm(d[i].expect("visited").denom()));
        let ints: Vec<i64> = component
            .iter()
            .map(|&i| (d[i].expect("visited") * lcm).to_integer())
            .collect();
        let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        for (&i, &x) in component.iter().zip(&ints) {
            let v = x / g;
            if !(1..=3).contains(&v) {
                return invalid(format!("root length ratio {v} is not of finite type"));
            }
            out[i] = v as u32;
        }
    }

    if !positive_definite(cartan, &out) {
        return invalid("symmetrized form is not positive definite".into());
    }
    Ok(out)
}

/// Sylvester's criterion on `diag(d)·A` via fraction-free elimination: the
/// k-th pivot equals the k-th leading principal minor.
fn positive_definite(cartan: &CartanMatrix, d: &[u32]) -> bool {
    let r = cartan.len();
    let mut m: Vec<Vec<i128>> = (0..r)
        .map(|i| (0..r).map(|j| d[i] as i128 * cartan[i][j] as i128).collect())
        .collect();
    let mut prev = 1i128;
    for k in 0..r {
        if m[k][k] <= 0 {
            return false;
        }
        for i in k + 1..r {
            for j in k + 1..r {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    true
}

/// A Poisson-Lie subgroup `K^{S,L}`: a set `S` of simple roots and a
/// subgroup `L` of `P(S^c) = ℤ{ω_i : α_i ∉ S}` given by generators.
///
/// Indices are 0-based. Generator coordinates run over `S^c` in increasing
/// index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupData {
    pub s: BTreeSet<usize>,
    pub l_generators: Vec<Vec<i64>>,
}

impl SubgroupData {
    pub fn new(s: BTreeSet<usize>, l_generators: Vec<Vec<i64>>, datum: &RootDatum) -> Result<Self> {
        let r = datum.rank();
        if let Some(&bad) = s.iter().find(|&&i| i >= r) {
            return Err(Error::Validation(format!(
                "simple root index {} out of range 1..={r}",
                bad + 1
            )));
        }
        if s.len() == r {
            return Err(Error::Validation(
                "K must be a proper subgroup: S cannot contain every simple root".into(),
            ));
        }
        let width = r - s.len();
        if let Some(g) = l_generators.iter().find(|g| g.len() != width) {
            return Err(Error::Validation(format!(
                "lattice generator {g:?} has {} coordinates, expected {width} (one per simple root outside S)",
                g.len()
            )));
        }
        Ok(SubgroupData { s, l_generators })
    }

    /// `L = P(S^c)`, i.e. generated by every `ω_i` with `i ∉ S`.
    pub fn full_lattice(s: BTreeSet<usize>, datum: &RootDatum) -> Result<Self> {
        let width = datum.rank().saturating_sub(s.len());
        let gens = (0..width)
            .map(|a| (0..width).map(|b| i64::from(a == b)).collect())
            .collect();
        SubgroupData::new(s, gens, datum)
    }

    /// Indices outside `S`, increasing.
    pub fn complement(&self, datum: &RootDatum) -> Vec<usize> {
        (0..datum.rank()).filter(|i| !self.s.contains(i)).collect()
    }

    fn coordinate(&self, datum: &RootDatum, i: usize) -> Result<usize> {
        self.complement(datum)
            .iter()
            .position(|&x| x == i)
            .ok_or_else(|| Error::Domain(format!("simple root {} lies in S", i + 1)))
    }
}

/// `(μ, α_i) = d_i · μ_i` for `μ = Σ μ_j ω_j` over `S^c`.
pub fn pairing_with_simple_root(
    mu: &[i64],
    i: usize,
    subgroup: &SubgroupData,
    datum: &RootDatum,
) -> Result<i64> {
    let pos = subgroup.coordinate(datum, i)?;
    let coeff = mu.get(pos).copied().ok_or_else(|| {
        Error::Validation(format!("weight {mu:?} has no coordinate for root {}", i + 1))
    })?;
    Ok(datum.d[i] as i64 * coeff)
}

/// The positive generator `n_i` of `{(μ, α_i) : μ ∈ L} ⊆ ℤ`, with `∞` for
/// the zero subgroup.
pub fn n_i(subgroup: &SubgroupData, datum: &RootDatum, i: usize) -> Result<TorusOrder> {
    let mut g = 0i64;
    for mu in &subgroup.l_generators {
        g = g.gcd(&pairing_with_simple_root(mu, i, subgroup, datum)?);
    }
    Ok(TorusOrder::from_generator(g.unsigned_abs()))
}

/// Minimal positive exponent of the commutator spectrum of
/// `C[D̄_q/T_n]` in base `q`: 1 for odd `n`, 2 for even `n` or `∞`.
pub fn disk_min_exponent(n: TorusOrder) -> u64 {
    if n.is_odd() {
        1
    } else {
        2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpaceInvariant {
    /// `n_i` for each `i ∉ S` (0-based).
    pub n: BTreeMap<usize, TorusOrder>,
    /// `d_i · c_i`: the minimal positive spectrum exponent, in base `q`, of
    /// the image of the 2-cell representation attached to `s_i`.
    pub local_exponents: BTreeMap<usize, u64>,
    pub m: u64,
}

impl fmt::Display for HomSpaceInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "i\tn_i\td_i*c_i")?;
        for (i, n) in &self.n {
            writeln!(f, "{}\t{}\t{}", i + 1, n, self.local_exponents[i])?;
        }
        writeln!(f, "m={}", self.m)
    }
}

/// The exponent `m` such that `q^m` is the largest element below 1 of the
/// commutator spectrum of any 2-cell representation image of `C[X_q]`.
pub fn invariant_exponent(subgroup: &SubgroupData, datum: &RootDatum) -> Result<HomSpaceInvariant> {
    let comp = subgroup.complement(datum);
    if comp.is_empty() {
        return Err(Error::Validation("K must be a proper subgroup".into()));
    }
    let mut n = BTreeMap::new();
    let mut local_exponents = BTreeMap::new();
    for &i in &comp {
        let ni = n_i(subgroup, datum, i)?;
        n.insert(i, ni);
        local_exponents.insert(i, datum.d[i] as u64 * disk_min_exponent(ni));
    }
    let m = *local_exponents.values().min().expect("complement is nonempty");
    Ok(HomSpaceInvariant { n, local_exponents, m })
}

/// Whether `π_{w,t}` is a 2-cell representation: exactly when `w` is a
/// simple reflection `s_i` with `i ∉ S`.
pub fn is_two_cell(
    w_length: u32,
    i: Option<usize>,
    subgroup: &SubgroupData,
    datum: &RootDatum,
) -> Result<bool> {
    match (w_length, i) {
        (1, None) => Err(Error::Precondition(
            "a simple reflection needs its root index".into(),
        )),
        (1, Some(i)) => Ok(i < datum.rank() && !subgroup.s.contains(&i)),
        _ => Ok(false),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Isomorphic,
    NonIsomorphic,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Isomorphic => "isomorphic",
            Verdict::NonIsomorphic => "non-isomorphic",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DistinguishReport {
    pub verdict: Verdict,
    pub m: u64,
    pub p_power: f64,
    pub q_power: f64,
    pub reason: String,
}

impl fmt::Display for DistinguishReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict={}", self.verdict)?;
        writeln!(f, "m={}", self.m)?;
        writeln!(f, "p^m={}", self.p_power)?;
        writeln!(f, "q^m={}", self.q_power)?;
        writeln!(f, "reason={}", self.reason)
    }
}

/// Decides `C[X_p] ≅ C[X_q]` for `p, q ∈ (0, 1]`. Parameters above 1 must be
/// folded with `q ↦ q⁻¹` by the caller.
pub fn distinguish(p: f64, q: f64, subgroup: &SubgroupData, datum: &RootDatum) -> Result<DistinguishReport> {
    for (name, v) in [("p", p), ("q", q)] {
        if !(v > 0.0 && v <= 1.0) {
            return Err(Error::Domain(format!(
                "{name} = {v} is outside (0, 1]; replace it by its inverse first"
            )));
        }
    }
    let inv = invariant_exponent(subgroup, datum)?;
    let m = inv.m;
    let (p_power, q_power) = (p.powi(m as i32), q.powi(m as i32));
    let (verdict, reason) = if p == q {
        (Verdict::Isomorphic, "identical parameters".to_string())
    } else if p == 1.0 || q == 1.0 {
        (
            Verdict::NonIsomorphic,
            "exactly one algebra is commutative (parameter 1)".to_string(),
        )
    } else {
        (
            Verdict::NonIsomorphic,
            format!("largest commutator-spectrum value below 1 differs: p^{m} != q^{m}"),
        )
    };
    Ok(DistinguishReport {
        verdict,
        m,
        p_power,
        q_power,
        reason,
    })
}

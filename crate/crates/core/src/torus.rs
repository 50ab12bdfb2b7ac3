//! The index `n ∈ {1, 2, …} ∪ {∞}` of the torus subgroup `T_n`.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// `T_n` for finite `n` is generated by the `n`-th roots of unity; `T_∞` is
/// the whole diagonal torus. Membership of torus weights uses `nℤ`, with
/// `∞ℤ = {0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TorusOrder {
    Finite(u64),
    Infinite,
}

impl TorusOrder {
    pub fn finite(n: u64) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::Validation("torus order must be at least 1".into()));
        }
        Ok(TorusOrder::Finite(n))
    }

    /// The positive generator of a subgroup `gℤ ⊆ ℤ`, with `g = 0` mapping
    /// to `∞`.
    pub fn from_generator(g: u64) -> Self {
        if g == 0 {
            TorusOrder::Infinite
        } else {
            TorusOrder::Finite(g)
        }
    }

    /// Whether `weight ∈ nℤ`.
    pub fn contains(self, weight: i64) -> bool {
        match self {
            TorusOrder::Finite(n) => weight.rem_euclid(n as i64) == 0,
            TorusOrder::Infinite => weight == 0,
        }
    }

    /// Whether `a ≡ b (mod n)`; equality when `n = ∞`.
    pub fn congruent(self, a: i64, b: i64) -> bool {
        self.contains(a - b)
    }

    /// Odd finite orders; `∞` counts as even.
    pub fn is_odd(self) -> bool {
        matches!(self, TorusOrder::Finite(n) if n % 2 == 1)
    }
}

impl fmt::Display for TorusOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorusOrder::Finite(n) => write!(f, "{n}"),
            TorusOrder::Infinite => write!(f, "inf"),
        }
    }
}

impl FromStr for TorusOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "inf" | "infinity" | "∞" | "oo" => Ok(TorusOrder::Infinite),
            t => {
                let n: u64 = t
                    .parse()
                    .map_err(|_| Error::Validation(format!("invalid torus order '{t}'")))?;
                TorusOrder::finite(n)
            }
        }
    }
}

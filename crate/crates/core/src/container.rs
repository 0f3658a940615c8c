//! Containers `C(x, y) = { μ(x, yz) : z in Z_m }`.
//!
//! `{ yz mod m }` is exactly the set of multiples of `gcd(m, y)`, so a container
//! is named canonically by `x` and that divisor. Set equality of containers is
//! then structural equality.

use serde::{Deserialize, Serialize};

use crate::mumap::MuMap;
use crate::zmod::{gcd_nonzero, Modulus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Container {
    pub x: u64,
    /// A positive divisor of `m`; members are `μ(x, w)` with `d | w`.
    pub d: u64,
}

impl Container {
    /// `C(x, y)`. `y = 0` gives `d = m`, the singleton `{ μ(x, 0) }`.
    pub fn new(m: Modulus, x: u64, y: u64) -> Self {
        Container {
            x: x % m.get(),
            d: gcd_nonzero(y % m.get(), m.get()),
        }
    }

    /// The maximal container `C(x, 1)`.
    pub fn maximal(m: Modulus, x: u64) -> Self {
        Container {
            x: x % m.get(),
            d: 1,
        }
    }

    /// `|C(x, y)| = m / gcd(m, y)`.
    pub fn order(self, m: Modulus) -> u64 {
        m.get() / self.d
    }

    pub fn contains(self, mu: MuMap) -> bool {
        mu.x == self.x && mu.y.is_multiple_of(self.d)
    }

    /// `self ⊆ other`: same `x` and `other.d | self.d`.
    pub fn is_subset_of(self, other: Container) -> bool {
        self.x == other.x && self.d.is_multiple_of(other.d)
    }

    pub fn is_maximal(self) -> bool {
        self.d == 1
    }

    /// Members sorted by `y`.
    pub fn enumerate(self, m: Modulus) -> Vec<MuMap> {
        (0..self.order(m))
            .map(|t| MuMap {
                x: self.x,
                y: t * self.d,
            })
            .collect()
    }
}

impl std::fmt::Display for Container {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "C({}; {})", self.x, self.d)
    }
}

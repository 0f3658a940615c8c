//! Mu-maps: the self-maps `a^i b^j -> a^(x i k^j - y k_j)` that contain every
//! right and left commutation map and are closed under composition.
//!
//! Maps act on the right, so `f.then(h)` means "apply `f`, then `h`".

use serde::{Deserialize, Serialize};

use crate::group::{GroupElement, Presentation};
use crate::zmod::Modulus;

/// The mu-map `μ(x, y)`, stored as its reduced pair.
///
/// Two pairs name the same function iff they are equal, so derived equality
/// is function equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MuMap {
    pub x: u64,
    pub y: u64,
}

/// Which commutation semigroup: right maps `[x, g]` or left maps `[g, x]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Right,
    Left,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Right, Side::Left];

    pub fn as_str(self) -> &'static str {
        match self {
            Side::Right => "right",
            Side::Left => "left",
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl MuMap {
    pub fn new(m: Modulus, x: u64, y: u64) -> Self {
        MuMap {
            x: x % m.get(),
            y: y % m.get(),
        }
    }

    /// `(a^i b^j) μ(x, y) = a^N` with `N = x i k^j - y k_j`.
    pub fn apply(self, p: &Presentation, g: GroupElement) -> GroupElement {
        let m = p.modulus();
        let scaled = m.mul(m.mul(self.x, g.i), p.k_pow(g.j));
        let shift = m.mul(self.y, p.k_sub(g.j));
        GroupElement {
            i: m.sub(scaled, shift),
            j: 0,
        }
    }

    /// `μ(x1, y1) ∘ μ(x2, y2) = μ(x1 x2, y1 x2)`: apply `self` first, then `next`.
    #[inline]
    pub fn then(self, m: Modulus, next: MuMap) -> MuMap {
        MuMap {
            x: m.mul(self.x, next.x),
            y: m.mul(self.y, next.x),
        }
    }
}

/// Composition as a free function; `first` acts before `second`.
pub fn compose(m: Modulus, first: MuMap, second: MuMap) -> MuMap {
    first.then(m, second)
}

/// `ρ(a^r b^s) = μ(k_s, r k^s)`.
pub fn rho_of(p: &Presentation, g: GroupElement) -> MuMap {
    let m = p.modulus();
    MuMap {
        x: p.k_sub(g.j),
        y: m.mul(g.i, p.k_pow(g.j)),
    }
}

/// `λ(a^r b^s) = μ(-k_s, -r k^s)`.
pub fn lambda_of(p: &Presentation, g: GroupElement) -> MuMap {
    let m = p.modulus();
    let rho = rho_of(p, g);
    MuMap {
        x: m.neg(rho.x),
        y: m.neg(rho.y),
    }
}

pub fn commutation_map(p: &Presentation, side: Side, g: GroupElement) -> MuMap {
    match side {
        Side::Right => rho_of(p, g),
        Side::Left => lambda_of(p, g),
    }
}

//! Presentations `G(m, n, k) = <a, b ; a^m = 1, b^n = 1, b^-1 a b = a^k>` and
//! arithmetic on their elements in the normal form `a^i b^j`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::zmod::{gcd_nonzero, mod_inverse, mult_order, Modulus};

/// A presentation `G(m, n, k)` with `n = ind_m(k)`.
///
/// Built through [`Presentation::validate`] it is guaranteed to present a
/// non-abelian group with trivial centre. [`Presentation::unvalidated`] skips
/// the centre and abelian checks so that near-misses can be studied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    m: Modulus,
    k: u64,
    n: u64,
    k_inv: u64,
    /// `k^j mod m` for `j in 0..=n`.
    k_pow: Vec<u64>,
    /// `k_j = k^j - 1 mod m` for `j in 0..=n`.
    k_sub: Vec<u64>,
    /// `(k^-1)^j mod m` for `j in 0..n`.
    k_inv_pow: Vec<u64>,
}

/// The element `a^i b^j` with `0 <= i < m`, `0 <= j < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupElement {
    pub i: u64,
    pub j: u64,
}

impl Presentation {
    /// Checks `(m, k)` and builds `G(m, ind_m(k), k)`.
    pub fn validate(m: u64, k: u64) -> Result<Self> {
        let p = Self::unvalidated(m, k)?;
        if p.k == 1 {
            return Err(Error::Abelian { m });
        }
        let k_minus_1 = p.k - 1;
        let g = gcd_nonzero(k_minus_1, m);
        if g != 1 {
            return Err(Error::NonTrivialCentre { m, k_minus_1, g });
        }
        debug_assert!(m % 2 == 1);
        debug_assert!(p.n > 1);
        Ok(p)
    }

    /// Builds `G(m, ind_m(k), k)` requiring only that `k` is a unit modulo `m`.
    pub fn unvalidated(m: u64, k: u64) -> Result<Self> {
        let modulus = Modulus::new(m)?;
        if k >= m {
            return Err(Error::KOutOfRange { m, k });
        }
        let g = gcd_nonzero(k, m);
        if g != 1 {
            return Err(Error::NotCoprimeK { m, k, g });
        }
        let n = mult_order(k, modulus)?;
        let k_inv = mod_inverse(k, modulus)?;
        let k_pow: Vec<u64> = std::iter::successors(Some(1 % m), |&p| Some(modulus.mul(p, k)))
            .take(n as usize + 1)
            .collect();
        let k_sub = k_pow.iter().map(|&p| modulus.sub(p, 1)).collect();
        let k_inv_pow = std::iter::successors(Some(1 % m), |&p| Some(modulus.mul(p, k_inv)))
            .take(n as usize)
            .collect();
        Ok(Presentation {
            m: modulus,
            k,
            n,
            k_inv,
            k_pow,
            k_sub,
            k_inv_pow,
        })
    }

    pub fn modulus(&self) -> Modulus {
        self.m
    }

    pub fn m(&self) -> u64 {
        self.m.get()
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn k_inverse(&self) -> u64 {
        self.k_inv
    }

    /// Group order `m * n`.
    pub fn order(&self) -> u64 {
        self.m() * self.n
    }

    /// `k^j mod m`; `j` is reduced modulo `n`.
    #[inline]
    pub fn k_pow(&self, j: u64) -> u64 {
        self.k_pow[(j % self.n) as usize]
    }

    /// `k_t = k^t - 1 mod m` for `0 <= t <= n`.
    #[inline]
    pub fn k_sub(&self, t: u64) -> u64 {
        self.k_sub[t as usize]
    }

    pub fn k_sub_table(&self) -> &[u64] {
        &self.k_sub
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { i: 0, j: 0 }
    }

    pub fn a(&self) -> GroupElement {
        GroupElement {
            i: 1 % self.m(),
            j: 0,
        }
    }

    pub fn b(&self) -> GroupElement {
        GroupElement {
            i: 0,
            j: 1 % self.n,
        }
    }

    /// `a^i b^j` with both exponents reduced.
    pub fn element(&self, i: u64, j: u64) -> GroupElement {
        GroupElement {
            i: i % self.m(),
            j: j % self.n,
        }
    }

    pub fn contains(&self, g: GroupElement) -> bool {
        g.i < self.m() && g.j < self.n
    }

    /// All elements in row-major `(i, j)` order, matching [`Presentation::index_of`].
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.m()).flat_map(move |i| (0..self.n).map(move |j| GroupElement { i, j }))
    }

    #[inline]
    pub fn index_of(&self, g: GroupElement) -> usize {
        (g.i * self.n + g.j) as usize
    }

    #[inline]
    pub fn element_at(&self, index: usize) -> GroupElement {
        let index = index as u64;
        GroupElement {
            i: index / self.n,
            j: index % self.n,
        }
    }

    /// `(a^i b^j)(a^r b^s) = a^(i + r k^-j) b^(j + s)`, from `b a b^-1 = a^(k^-1)`.
    #[inline]
    pub fn multiply(&self, g: GroupElement, h: GroupElement) -> GroupElement {
        let twist = self.m.mul(h.i, self.k_inv_pow[g.j as usize]);
        GroupElement {
            i: self.m.add(g.i, twist),
            j: (g.j + h.j) % self.n,
        }
    }

    /// `(a^i b^j)^-1 = a^(-i k^j) b^(-j)`.
    #[inline]
    pub fn inverse(&self, g: GroupElement) -> GroupElement {
        GroupElement {
            i: self.m.neg(self.m.mul(g.i, self.k_pow[g.j as usize])),
            j: (self.n - g.j) % self.n,
        }
    }

    pub fn pow(&self, g: GroupElement, e: u64) -> GroupElement {
        (0..e).fold(self.identity(), |acc, _| self.multiply(acc, g))
    }

    /// `[g, h]` from the closed form `a^N`, `N = i k^j k_s - r k^s k_j`.
    pub fn commutator_formula(&self, g: GroupElement, h: GroupElement) -> GroupElement {
        let m = self.m;
        let left = m.mul(m.mul(g.i, self.k_pow(g.j)), self.k_sub(h.j));
        let right = m.mul(m.mul(h.i, self.k_pow(h.j)), self.k_sub(g.j));
        GroupElement {
            i: m.sub(left, right),
            j: 0,
        }
    }

    /// `[g, h] = g^-1 h^-1 g h` by four normal-form multiplications.
    pub fn commutator_direct(&self, g: GroupElement, h: GroupElement) -> GroupElement {
        let gh_inv = self.multiply(self.inverse(g), self.inverse(h));
        self.multiply(self.multiply(gh_inv, g), h)
    }

    /// Brute-force centre: every element commuting with both generators.
    pub fn centre(&self) -> Vec<GroupElement> {
        let (a, b) = (self.a(), self.b());
        self.elements()
            .filter(|&g| self.multiply(g, a) == self.multiply(a, g))
            .filter(|&g| self.multiply(g, b) == self.multiply(b, g))
            .collect()
    }
}

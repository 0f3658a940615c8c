//! Exact arithmetic in the ring of residues modulo `m`.
//!
//! Residues are plain `u64` values kept fully reduced into `[0, m)`. Products
//! go through 128-bit intermediates so any modulus that fits in a machine word
//! is safe.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A modulus `m >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
        Ok(Modulus(m))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// Reduces any signed integer into `[0, m)`.
    #[inline]
    pub fn reduce(self, v: i128) -> u64 {
        v.rem_euclid(self.0 as i128) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        match a.checked_add(b) {
            Some(s) => s % self.0,
            None => ((a as u128 + b as u128) % self.0 as u128) as u64,
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        let (a, b) = (a % self.0, b % self.0);
        if a >= b {
            a - b
        } else {
            self.0 - (b - a)
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        self.sub(0, a)
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        match a.checked_mul(b) {
            Some(p) => p % self.0,
            None => ((a as u128 * b as u128) % self.0 as u128) as u64,
        }
    }

    pub fn pow(self, base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.0;
        let mut b = base % self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            exp >>= 1;
        }
        acc
    }

    /// All residues `0..m`.
    pub fn residues(self) -> std::ops::Range<u64> {
        0..self.0
    }
}

impl std::fmt::Display for Modulus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Greatest common divisor; `gcd(a, 0) = a`. Rejects `gcd(0, 0)`.
pub fn gcd(a: u64, b: u64) -> Result<u64> {
    if a == 0 && b == 0 {
        return Err(Error::GcdOfZeros);
    }
    Ok(gcd_nonzero(a, b))
}

// Callers guarantee at least one argument is non-zero (typically `b = m >= 2`).
#[inline]
pub(crate) fn gcd_nonzero(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn is_unit(r: u64, m: Modulus) -> bool {
    gcd_nonzero(r % m.get(), m.get()) == 1
}

/// The inverse of `r` modulo `m`, via the extended Euclidean algorithm.
pub fn mod_inverse(r: u64, m: Modulus) -> Result<u64> {
    let r = r % m.get();
    let (mut old_r, mut cur_r) = (r as i128, m.get() as i128);
    let (mut old_s, mut cur_s) = (1i128, 0i128);
    while cur_r != 0 {
        let q = old_r / cur_r;
        (old_r, cur_r) = (cur_r, old_r - q * cur_r);
        (old_s, cur_s) = (cur_s, old_s - q * cur_s);
    }
    if old_r != 1 {
        return Err(Error::NonUnit { r, m: m.get() });
    }
    Ok(m.reduce(old_s))
}

/// Multiplicative order of the unit `k`: the least `d >= 1` with `k^d = 1 (mod m)`.
///
/// Computed by repeated multiplication, so it costs `O(d)` steps.
pub fn mult_order(k: u64, m: Modulus) -> Result<u64> {
    let k = k % m.get();
    if !is_unit(k, m) {
        return Err(Error::NonUnit { r: k, m: m.get() });
    }
    let mut d = 1;
    let mut p = k;
    while p != 1 {
        p = m.mul(p, k);
        d += 1;
    }
    Ok(d)
}

//! Parameter scans over `G(m, n, k)` and empirical checks of the completeness
//! theorems for prime `m`, prime-square `m` and prime `n`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::Presentation;
use crate::mumap::Side;
use crate::sigma::{analyze_side, closure, enumerate_elements, left_base, right_base, BaseSet};
use crate::zmod::is_unit;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub m: u64,
    pub k: u64,
    pub n: u64,
    pub side: Side,
    pub non_basic_reps: Vec<u64>,
    pub complete: bool,
    pub order: u64,
}

/// A modulus with at least one non-basic orbit, with its factorization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlaggedModulus {
    pub m: u64,
    /// `(prime, exponent)` pairs, ascending.
    pub factorization: Vec<(u64, u32)>,
}

pub fn is_prime(v: u64) -> bool {
    if v < 2 {
        return false;
    }
    (2..)
        .take_while(|d| d * d <= v)
        .all(|d| !v.is_multiple_of(d))
}

pub fn primes_up_to(limit: u64) -> impl Iterator<Item = u64> {
    (2..=limit).filter(|&v| is_prime(v))
}

/// Trial-division factorization.
pub fn factorize(mut v: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= v {
        let mut e = 0;
        while v.is_multiple_of(d) {
            v /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if v > 1 {
        out.push((v, 1));
    }
    out
}

/// Every valid presentation with `m` in `[m_lo, m_hi]`, ascending by `(m, k)`.
pub fn valid_presentations(m_lo: u64, m_hi: u64) -> impl Iterator<Item = Presentation> {
    (m_lo.max(2)..=m_hi).flat_map(|m| (2..m).filter_map(move |k| Presentation::validate(m, k).ok()))
}

fn scan_one(p: &Presentation, side: Side) -> ScanRecord {
    let a = analyze_side(p, side);
    let non_basic_reps = a.non_basic_representatives();
    ScanRecord {
        m: p.m(),
        k: p.k(),
        n: p.n(),
        side,
        complete: non_basic_reps.is_empty(),
        non_basic_reps,
        order: a.total_order,
    }
}

/// Analyzes both sides of every valid `(m, k)` with `m_lo <= m <= m_hi`.
///
/// Output is sorted by `(m, k, side)` and does not depend on `jobs`.
pub fn scan(m_lo: u64, m_hi: u64, jobs: usize) -> Vec<ScanRecord> {
    let units: Vec<(Presentation, Side)> = valid_presentations(m_lo, m_hi)
        .flat_map(|p| Side::BOTH.map(|s| (p.clone(), s)))
        .collect();
    let mut records: Vec<ScanRecord> = if jobs <= 1 {
        units.iter().map(|(p, s)| scan_one(p, *s)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("failed to build scan worker pool");
        pool.install(|| units.par_iter().map(|(p, s)| scan_one(p, *s)).collect())
    };
    records.sort_by_key(|r| (r.m, r.k, r.side));
    records
}

/// Distinct moduli with a non-basic record, ascending.
pub fn flagged_moduli(records: &[ScanRecord]) -> Vec<FlaggedModulus> {
    let mut ms: Vec<u64> = records
        .iter()
        .filter(|r| !r.complete)
        .map(|r| r.m)
        .collect();
    ms.dedup();
    ms.into_iter()
        .map(|m| FlaggedModulus {
            m,
            factorization: factorize(m),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub m: u64,
    pub k: u64,
    pub detail: String,
}

/// Outcome of checking one theorem over a range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub check: String,
    pub cases: u64,
    pub violations: Vec<Violation>,
}

impl TheoremReport {
    fn new(check: &str) -> Self {
        TheoremReport {
            check: check.to_string(),
            cases: 0,
            violations: Vec::new(),
        }
    }

    fn flag(&mut self, p: &Presentation, detail: String) {
        self.violations.push(Violation {
            m: p.m(),
            k: p.k(),
            detail,
        });
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Prime `m`: both sides complete, and
/// `|R*| = |L*|  <=>  R* = L*  <=>  P(G) = Λ(G)  <=>  |P(G)| = |Λ(G)|`.
pub fn verify_prime_m(p_max: u64) -> TheoremReport {
    let mut report = TheoremReport::new("prime-m");
    for prime in primes_up_to(p_max) {
        for p in valid_presentations(prime, prime) {
            report.cases += 1;
            let right = analyze_side(&p, Side::Right);
            let left = analyze_side(&p, Side::Left);
            for a in [&right, &left] {
                if !a.complete {
                    report.flag(&p, "semigroup is not complete".into());
                }
                if a.total_order != p.m() * a.closure.len() as u64 {
                    report.flag(&p, format!("order {} != m |S*|", a.total_order));
                }
            }
            let closure_sizes_equal = right.closure.len() == left.closure.len();
            let closures_equal = right.closure.elements() == left.closure.elements();
            let semigroups_equal = enumerate_elements(&right) == enumerate_elements(&left);
            let orders_equal = right.total_order == left.total_order;
            let chain = [
                closure_sizes_equal,
                closures_equal,
                semigroups_equal,
                orders_equal,
            ];
            if chain.iter().any(|&c| c != chain[0]) {
                report.flag(&p, format!("equivalence chain broken: {chain:?}"));
            }
        }
    }
    report
}

/// `N(S)` is either `{0}` or every multiple of `p` in `Z_(p^2)`.
fn non_unit_dichotomy(base: &BaseSet, prime: u64) -> bool {
    let m = base.modulus();
    let non_units: Vec<u64> = base
        .elements()
        .iter()
        .copied()
        .filter(|&r| !is_unit(r, m))
        .collect();
    let multiples: Vec<u64> = (0..prime).map(|a| a * prime).collect();
    non_units == [0] || non_units == multiples
}

/// `m = p^2`: both sides complete, and `N(R)` (likewise `N(L)`) is `{0}` or
/// `{0, p, ..., (p - 1)p}`.
pub fn verify_prime_square_m(p_max: u64) -> TheoremReport {
    let mut report = TheoremReport::new("prime-square-m");
    for prime in primes_up_to(p_max) {
        let m = prime * prime;
        for p in valid_presentations(m, m) {
            report.cases += 1;
            for side in Side::BOTH {
                let a = analyze_side(&p, side);
                if !a.complete {
                    report.flag(&p, format!("{side} semigroup is not complete"));
                }
                if !non_unit_dichotomy(&a.base, prime) {
                    report.flag(&p, format!("{side} base non-units fail the dichotomy"));
                }
            }
        }
    }
    report
}

/// Prime `n`: every non-zero element of `R*` and `L*` is a unit, and both
/// sides are complete.
pub fn verify_prime_n(m_max: u64) -> TheoremReport {
    let mut report = TheoremReport::new("prime-n");
    for p in valid_presentations(3, m_max).filter(|p| is_prime(p.n())) {
        report.cases += 1;
        for base in [right_base(&p), left_base(&p)] {
            let c = closure(&base);
            if c.non_units() != [0] {
                report.flag(&p, format!("non-zero non-units {:?}", &c.non_units()[1..]));
            }
        }
        for side in Side::BOTH {
            if !analyze_side(&p, side).complete {
                report.flag(&p, format!("{side} semigroup is not complete"));
            }
        }
    }
    report
}

/// Least `s` with `1 < s <= n` and `prime | k_s`.
pub fn minimal_prime_index(p: &Presentation, prime: u64) -> Result<u64> {
    if prime < 2 || !p.m().is_multiple_of(prime) {
        return Err(Error::NotADivisor { p: prime, m: p.m() });
    }
    Ok((2..=p.n())
        .find(|&s| p.k_sub(s).is_multiple_of(prime))
        .expect("k_n = 0 is divisible by every divisor of m"))
}

/// For every valid `(m, k)` with `m <= m_max` and every prime `p | m`: with
/// `s` minimal, `p | k_t <=> s | t` for `1 < t <= n`, and `s | n`.
pub fn verify_minimal_prime_index(m_max: u64) -> TheoremReport {
    let mut report = TheoremReport::new("lemma-6-4");
    for p in valid_presentations(3, m_max) {
        for (prime, _) in factorize(p.m()) {
            report.cases += 1;
            let s = minimal_prime_index(&p, prime).expect("prime factor divides m");
            if p.n() % s != 0 {
                report.flag(&p, format!("p = {prime}: s = {s} does not divide n"));
            }
            for t in 2..=p.n() {
                if (p.k_sub(t) % prime == 0) != (t % s == 0) {
                    report.flag(
                        &p,
                        format!("p = {prime}, s = {s}: t = {t} breaks the equivalence"),
                    );
                }
            }
        }
    }
    report
}

//! The semigroup `Σ_G(S)` generated by `{ μ(s, z) : s in S, z in Z_m }`.
//!
//! For a base `S` (contains 0 and some unit) the semigroup splits into
//! disjoint x-families, one per `x` in the multiplicative closure `S*`. The
//! x-family is a union of containers `C(x, y)` over `y` in
//! `Y(x) = { s* z : s in S, s* in S*, s s* = x }`, and it is the whole
//! maximal container `C(x, 1)` exactly when the orbit `x I(S*)` meets `S`.
//!
//! With `S = R = { k_j }` this is the right commutation semigroup; with
//! `S = L = -R` it is the left one.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::container::Container;
use crate::error::{Error, Result};
use crate::group::Presentation;
use crate::mumap::{MuMap, Side};
use crate::zmod::{gcd_nonzero, is_unit, Modulus};

/// A base: a subset of `Z_m` containing 0 and at least one unit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseSet {
    m: Modulus,
    elements: BTreeSet<u64>,
}

impl BaseSet {
    pub fn new(m: Modulus, residues: impl IntoIterator<Item = u64>) -> Result<Self> {
        let elements: BTreeSet<u64> = residues.into_iter().collect();
        if let Some(&r) = elements.iter().find(|&&r| r >= m.get()) {
            return Err(Error::ResidueOutOfRange { r, m: m.get() });
        }
        if !elements.contains(&0) {
            return Err(Error::BaseMissingZero);
        }
        if !elements.iter().any(|&r| is_unit(r, m)) {
            return Err(Error::BaseWithoutUnit { m: m.get() });
        }
        Ok(BaseSet { m, elements })
    }

    pub fn modulus(&self) -> Modulus {
        self.m
    }

    pub fn contains(&self, r: u64) -> bool {
        self.elements.contains(&r)
    }

    pub fn elements(&self) -> &BTreeSet<u64> {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `I(S)`.
    pub fn units(&self) -> impl Iterator<Item = u64> + '_ {
        self.elements
            .iter()
            .copied()
            .filter(|&r| is_unit(r, self.m))
    }
}

/// `R = { k_j : 0 <= j < n }`.
pub fn right_base(p: &Presentation) -> BaseSet {
    BaseSet::new(p.modulus(), right_residues(p)).expect("trivial centre makes k - 1 a unit in R")
}

/// `L = { -k_j : 0 <= j < n }`.
pub fn left_base(p: &Presentation) -> BaseSet {
    let m = p.modulus();
    BaseSet::new(m, right_residues(p).map(|r| m.neg(r)))
        .expect("trivial centre makes 1 - k a unit in L")
}

pub fn base_for(p: &Presentation, side: Side) -> BaseSet {
    match side {
        Side::Right => right_base(p),
        Side::Left => left_base(p),
    }
}

/// The residues `k_j` for `0 <= j < n`, with repetitions, for any presentation.
pub fn right_residues(p: &Presentation) -> impl Iterator<Item = u64> + '_ {
    (0..p.n()).map(move |j| p.k_sub(j))
}

/// `S*`, split into units `I(S*)` and non-units `N(S*)`. All lists ascend.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedSet {
    m: Modulus,
    elements: Vec<u64>,
    units: Vec<u64>,
    non_units: Vec<u64>,
    #[serde(skip)]
    member: Vec<bool>,
}

impl ClosedSet {
    pub fn modulus(&self) -> Modulus {
        self.m
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn units(&self) -> &[u64] {
        &self.units
    }

    pub fn non_units(&self) -> &[u64] {
        &self.non_units
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, r: u64) -> bool {
        self.member.get(r as usize).copied().unwrap_or(false)
    }
}

/// The multiplicative closure `S*` of `S` in `Z_m`.
pub fn closure(base: &BaseSet) -> ClosedSet {
    let m = base.modulus();
    let gens: Vec<u64> = base.elements().iter().copied().collect();
    let mut member = vec![false; m.get() as usize];
    let mut work = Vec::with_capacity(gens.len());
    for &s in &gens {
        if !member[s as usize] {
            member[s as usize] = true;
            work.push(s);
        }
    }
    while let Some(a) = work.pop() {
        for &s in &gens {
            let c = m.mul(a, s);
            if !member[c as usize] {
                member[c as usize] = true;
                work.push(c);
            }
        }
    }
    let elements: Vec<u64> = m.residues().filter(|&r| member[r as usize]).collect();
    let (units, non_units) = elements.iter().partition(|&&r| is_unit(r, m));
    ClosedSet {
        m,
        elements,
        units,
        non_units,
        member,
    }
}

/// `orb(x, S*) = { x u : u in I(S*) }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    /// The least element of the orbit.
    pub representative: u64,
    pub elements: Vec<u64>,
    /// Whether the orbit meets the base.
    pub basic: bool,
}

/// Partition of `S*` into orbits under `I(S*)`, ascending by representative.
pub fn orbits(base: &BaseSet, closed: &ClosedSet) -> Vec<Orbit> {
    orbit_partition(closed, |orbit| orbit.iter().any(|&r| base.contains(r)))
}

// Orbits through a unit always meet I(S) (the units form a group), and so do
// orbits through an element of S. Only the rest need the intersection test.
fn orbits_pruned(base: &BaseSet, closed: &ClosedSet) -> Vec<Orbit> {
    let m = closed.modulus();
    let pruned = orbit_partition(closed, |orbit| {
        let rep = orbit[0];
        if is_unit(rep, m) || base.contains(rep) {
            return true;
        }
        orbit.iter().any(|&r| base.contains(r))
    });
    debug_assert_eq!(pruned, orbits(base, closed));
    pruned
}

fn orbit_partition(closed: &ClosedSet, basic: impl Fn(&[u64]) -> bool) -> Vec<Orbit> {
    let m = closed.modulus();
    let mut assigned = vec![false; m.get() as usize];
    let mut out = Vec::new();
    for &x in closed.elements() {
        if assigned[x as usize] {
            continue;
        }
        let mut elements: Vec<u64> = closed.units().iter().map(|&u| m.mul(x, u)).collect();
        elements.sort_unstable();
        elements.dedup();
        for &e in &elements {
            assigned[e as usize] = true;
        }
        out.push(Orbit {
            representative: x,
            basic: basic(&elements),
            elements,
        });
    }
    out
}

/// The x-family `F(x, S)`, described by the divisors `gcd(m, s*)` that
/// generate `Y(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Family {
    pub x: u64,
    /// Divisibility-minimal divisors `d`; `Y(x)` is the set of residues
    /// divisible by at least one of them.
    pub generators_d: Vec<u64>,
    /// `|Y(x)|`, which is also the number of maps in the family's union.
    pub y_set_size: u64,
    /// `C(x, 1)` belongs to the family.
    pub complete: bool,
    /// The ⊆-maximal containers of the family, one per generator divisor.
    pub maximal_containers: Vec<Container>,
}

impl Family {
    fn from_divisors(m: Modulus, x: u64, mut divisors: Vec<u64>) -> Self {
        divisors.sort_unstable();
        divisors.dedup();
        let mut minimal: Vec<u64> = Vec::new();
        for d in divisors {
            if !minimal.iter().any(|&e| d % e == 0) {
                minimal.push(d);
            }
        }
        let complete = minimal == [1];
        let y_set_size = if complete {
            m.get()
        } else {
            m.residues()
                .filter(|&w| minimal.iter().any(|&d| w % d == 0))
                .count() as u64
        };
        let maximal_containers = minimal.iter().map(|&d| Container { x, d }).collect();
        Family {
            x,
            generators_d: minimal,
            y_set_size,
            complete,
            maximal_containers,
        }
    }

    /// Whether `μ(x', y)` lies in the family's union.
    pub fn contains(&self, mu: MuMap) -> bool {
        mu.x == self.x && self.generators_d.iter().any(|&d| mu.y.is_multiple_of(d))
    }

    pub fn members(&self, m: Modulus) -> impl Iterator<Item = MuMap> + '_ {
        m.residues()
            .map(move |y| MuMap { x: self.x, y })
            .filter(move |&mu| self.contains(mu))
    }
}

/// `F(x, S)` for a single `x in S*`, solving `s s* = x` by scanning `S*`.
pub fn family(base: &BaseSet, closed: &ClosedSet, x: u64) -> Result<Family> {
    if !closed.contains(x) {
        return Err(Error::XNotInClosure { x });
    }
    let m = closed.modulus();
    let mut divisors = Vec::new();
    if base.contains(x) {
        divisors.push(1);
    }
    for &s in base.elements() {
        for &star in closed.elements() {
            if m.mul(s, star) == x {
                divisors.push(gcd_nonzero(star, m.get()));
            }
        }
    }
    Ok(Family::from_divisors(m, x, divisors))
}

// All families in one pass over S x S*.
fn all_families(base: &BaseSet, closed: &ClosedSet) -> Vec<Family> {
    let m = closed.modulus();
    let mut divisors: Vec<Vec<u64>> = vec![Vec::new(); m.get() as usize];
    for &s in base.elements() {
        divisors[s as usize].push(1);
        for &star in closed.elements() {
            let x = m.mul(s, star) as usize;
            let d = gcd_nonzero(star, m.get());
            if !divisors[x].contains(&d) {
                divisors[x].push(d);
            }
        }
    }
    closed
        .elements()
        .iter()
        .map(|&x| Family::from_divisors(m, x, std::mem::take(&mut divisors[x as usize])))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationInfo {
    pub m: u64,
    pub n: u64,
    pub k: u64,
}

impl From<&Presentation> for PresentationInfo {
    fn from(p: &Presentation) -> Self {
        PresentationInfo {
            m: p.m(),
            n: p.n(),
            k: p.k(),
        }
    }
}

/// Full decomposition of `Σ_G(S)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaAnalysis {
    pub presentation: PresentationInfo,
    pub base: BaseSet,
    pub closure: ClosedSet,
    pub orbits: Vec<Orbit>,
    /// One family per element of `S*`, ascending by `x`.
    pub families: Vec<Family>,
    pub total_order: u64,
    pub complete: bool,
}

impl SigmaAnalysis {
    pub fn modulus(&self) -> Modulus {
        self.closure.modulus()
    }

    /// Representatives of the orbits that miss the base.
    pub fn non_basic_representatives(&self) -> Vec<u64> {
        self.orbits
            .iter()
            .filter(|o| !o.basic)
            .map(|o| o.representative)
            .collect()
    }

    pub fn family(&self, x: u64) -> Option<&Family> {
        self.families
            .binary_search_by_key(&x, |f| f.x)
            .ok()
            .map(|i| &self.families[i])
    }

    pub fn contains(&self, mu: MuMap) -> bool {
        self.family(mu.x).is_some_and(|f| f.contains(mu))
    }
}

pub fn analyze(p: &Presentation, base: &BaseSet) -> Result<SigmaAnalysis> {
    if base.modulus() != p.modulus() {
        return Err(Error::ModulusMismatch {
            base: base.modulus().get(),
            presentation: p.m(),
        });
    }
    let closed = closure(base);
    let orbits = orbits_pruned(base, &closed);
    let families = all_families(base, &closed);
    let complete = orbits.iter().all(|o| o.basic);
    let total_order = families.iter().map(|f| f.y_set_size).sum();

    if cfg!(debug_assertions) {
        for f in &families {
            let orbit = orbits
                .iter()
                .find(|o| o.elements.binary_search(&f.x).is_ok())
                .expect("orbits cover S*");
            debug_assert_eq!(orbit.basic, f.complete, "x = {}", f.x);
        }
        if complete {
            debug_assert_eq!(total_order, p.m() * closed.len() as u64);
        }
    }

    Ok(SigmaAnalysis {
        presentation: p.into(),
        base: base.clone(),
        closure: closed,
        orbits,
        families,
        total_order,
        complete,
    })
}

/// `P(G)` for [`Side::Right`], `Λ(G)` for [`Side::Left`].
pub fn analyze_side(p: &Presentation, side: Side) -> SigmaAnalysis {
    analyze(p, &base_for(p, side)).expect("side bases share the presentation's modulus")
}

/// Every map of `Σ_G(S)`, sorted by `(x, y)`.
pub fn enumerate_elements(analysis: &SigmaAnalysis) -> Vec<MuMap> {
    let m = analysis.modulus();
    analysis
        .families
        .iter()
        .flat_map(|f| f.members(m))
        .collect()
}

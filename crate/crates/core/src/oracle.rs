//! Brute-force constructions of the commutation semigroups, used to check the
//! container engine in [`crate::sigma`].
//!
//! Two independent routes:
//! * [`pair_closure`] closes a set of mu-map pairs under the composition law.
//! * [`table_closure`] builds every commutation map as an explicit function
//!   table from [`Presentation::commutator_direct`] and closes those tables
//!   under pointwise composition. It knows nothing about mu-maps.

use std::collections::HashSet;
use std::hash::Hash;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rustc_hash::FxHashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupElement, Presentation};
use crate::mumap::{commutation_map, MuMap, Side};
use crate::sigma::{analyze, base_for, enumerate_elements, BaseSet};
use crate::zmod::{mod_inverse, Modulus};

pub const DEFAULT_TABLE_CAP: u64 = 4000;

/// Least set containing `generators` and closed under `compose`.
///
/// Generators already produced by earlier ones are dropped. A new generator is
/// composed onto every existing element once; elements discovered after that
/// are composed with every generator so far. The result is in discovery order.
pub fn semigroup_closure<T, I, F>(generators: I, compose: F) -> Vec<T>
where
    T: Eq + Hash + Clone,
    I: IntoIterator<Item = T>,
    F: Fn(&T, &T) -> T,
{
    let mut seen: FxHashSet<T> = FxHashSet::default();
    let mut elements: Vec<T> = Vec::new();
    let mut effective: Vec<T> = Vec::new();
    for g in generators {
        if seen.contains(&g) {
            continue;
        }
        let closed = elements.len();
        seen.insert(g.clone());
        elements.push(g.clone());
        for index in 0..closed {
            let c = compose(&elements[index], &g);
            if seen.insert(c.clone()) {
                elements.push(c);
            }
        }
        effective.push(g);
        let mut cursor = closed;
        while cursor < elements.len() {
            let a = elements[cursor].clone();
            cursor += 1;
            for e in &effective {
                let c = compose(&a, e);
                if seen.insert(c.clone()) {
                    elements.push(c);
                }
            }
        }
    }
    elements
}

/// Closure of mu-maps under `μ(x1, y1) ∘ μ(x2, y2) = μ(x1 x2, y1 x2)`.
pub fn pair_closure(m: Modulus, generators: impl IntoIterator<Item = MuMap>) -> HashSet<MuMap> {
    semigroup_closure(generators, |a, b| a.then(m, *b))
        .into_iter()
        .collect()
}

/// `{ ρ(g) }` or `{ λ(g) }` over all of `G`, as pairs.
pub fn side_generators(p: &Presentation, side: Side) -> Vec<MuMap> {
    p.elements().map(|g| commutation_map(p, side, g)).collect()
}

/// `Γ_μ(S) = { μ(s, z) : s in S, z in Z_m }`.
pub fn base_generators(base: &BaseSet) -> Vec<MuMap> {
    let m = base.modulus();
    base.elements()
        .iter()
        .flat_map(|&s| m.residues().map(move |z| MuMap { x: s, y: z }))
        .collect()
}

/// A self-map of `G`: `entries[index_of(g)]` is the index of the image of `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionTable {
    pub entries: Vec<u32>,
}

impl Hash for FunctionTable {
    /// Hashes the length and at most 128 sampled entries; equal tables still
    /// hash equally, and tables are long enough that full hashing dominates.
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        let len = self.entries.len();
        let stride = (len / 64).max(1);
        let sample = self
            .entries
            .iter()
            .take(64)
            .chain(self.entries.iter().step_by(stride));
        let mixed = sample.fold(len as u64, |acc, &e| {
            (acc.rotate_left(5) ^ e as u64).wrapping_mul(0x517c_c1b7_2722_0a95)
        });
        state.write_u64(mixed);
    }
}

impl FunctionTable {
    /// Apply `self`, then `next`.
    pub fn then(&self, next: &FunctionTable) -> FunctionTable {
        FunctionTable {
            entries: self
                .entries
                .iter()
                .map(|&e| next.entries[e as usize])
                .collect(),
        }
    }

    pub fn image(&self, p: &Presentation, g: GroupElement) -> GroupElement {
        p.element_at(self.entries[p.index_of(g)] as usize)
    }
}

fn check_cap(p: &Presentation, cap: u64) -> Result<()> {
    if p.order() > cap {
        return Err(Error::CapExceeded {
            order: p.order(),
            cap,
        });
    }
    Ok(())
}

/// The table of `x -> [x, g]` (right) or `x -> [g, x]` (left).
pub fn commutation_table(p: &Presentation, side: Side, g: GroupElement) -> FunctionTable {
    let entries = p
        .elements()
        .map(|x| {
            let c = match side {
                Side::Right => p.commutator_direct(x, g),
                Side::Left => p.commutator_direct(g, x),
            };
            p.index_of(c) as u32
        })
        .collect();
    FunctionTable { entries }
}

/// Group arithmetic on `(i, j)` pairs with the `k^-j` twists tabulated.
struct Arithmetic {
    m: u32,
    n: u32,
    /// `twist[j * m + r] = r k^-j mod m`.
    twist: Vec<u32>,
    /// Inverse of the element at each row-major index.
    inverse: Vec<(u32, u32)>,
}

/// `a + b mod m` for `a, b < m`, without a branch: when the sum is below `m`
/// the wrapped difference is larger.
#[inline]
fn add_below(a: u32, b: u32, m: u32) -> u32 {
    (a + b).min((a + b).wrapping_sub(m))
}

impl Arithmetic {
    fn new(p: &Presentation) -> Self {
        let (m, n) = (p.m() as u32, p.n() as u32);
        let mut twist = Vec::with_capacity((m * n) as usize);
        for j in 0..n {
            let conjugator = p.pow(p.b(), j as u64);
            let step = p
                .multiply(p.multiply(conjugator, p.a()), p.inverse(conjugator))
                .i as u32;
            let mut acc = 0u32;
            for _ in 0..m {
                twist.push(acc);
                acc = add_below(acc, step, m);
            }
        }
        let inverse = p
            .elements()
            .map(|g| {
                let h = p.inverse(g);
                (h.i as u32, h.j as u32)
            })
            .collect();
        Arithmetic {
            m,
            n,
            twist,
            inverse,
        }
    }

    #[inline]
    fn index(&self, (i, j): (u32, u32)) -> u32 {
        i * self.n + j
    }

    /// The right commutation table `x -> [x, g]`.
    ///
    /// With `g` fixed, the `j` parts of `x^-1 g^-1`, `x g` and their product
    /// depend only on `j(x)`, so they are tabulated per column and each entry
    /// costs three twisted additions.
    fn right_table(&self, (gi, gj): (u32, u32)) -> FunctionTable {
        let (m, n) = (self.m, self.n);
        let (hi, hj) = self.inverse[self.index((gi, gj)) as usize];
        let add_n = |a: u32, b: u32| add_below(a, b, n);
        // per column: (shift for x^-1 g^-1, shift for x g, twist row of the product, j of the result)
        let columns: Vec<(u32, u32, &[u32], u32)> = (0..n)
            .map(|xj| {
                let ij = add_n(n - xj, 0);
                let vj = add_n(ij, hj);
                let uj = add_n(xj, gj);
                (
                    self.twist[(ij * m + hi) as usize],
                    self.twist[(xj * m + gi) as usize],
                    &self.twist[(vj * m) as usize..((vj + 1) * m) as usize],
                    add_n(vj, uj),
                )
            })
            .collect();
        let mut entries = vec![0u32; (m * n) as usize];
        for ((xi, row), inverse_row) in (0..m)
            .zip(entries.chunks_exact_mut(n as usize))
            .zip(self.inverse.chunks_exact(n as usize))
        {
            for ((e, &(ii, _)), &(left_shift, right_shift, twist_row, result_j)) in
                row.iter_mut().zip(inverse_row).zip(&columns)
            {
                let v = add_below(ii, left_shift, m);
                let u = add_below(xi, right_shift, m);
                *e = add_below(v, twist_row[u as usize], m) * n + result_j;
            }
        }
        FunctionTable { entries }
    }
}

/// Every commutation table of one side, in row-major order of `g`.
pub fn commutation_tables(p: &Presentation, side: Side) -> Vec<FunctionTable> {
    let arithmetic = Arithmetic::new(p);
    let mut tables = Vec::with_capacity(p.order() as usize);
    for gi in 0..arithmetic.m {
        for gj in 0..arithmetic.n {
            let mut t = arithmetic.right_table((gi, gj));
            if side == Side::Left {
                // [g, x] = [x, g]^-1
                for e in &mut t.entries {
                    *e = arithmetic.index(arithmetic.inverse[*e as usize]);
                }
            }
            tables.push(t);
        }
    }
    tables
}

const FINGERPRINT_PRIME: u64 = (1 << 61) - 1;

/// Folds a product of two values below `2^61` to below `2^62`, preserving it
/// modulo `2^61 - 1`.
#[inline]
fn fold(product: u128) -> u128 {
    (product as u64 & FINGERPRINT_PRIME) as u128 + (product >> 61)
}

fn reduce(v: u128) -> u64 {
    (v % FINGERPRINT_PRIME as u128) as u64
}

/// Two independent linear fingerprints `Σ_x r_x h(f(x))` modulo `2^61 - 1`.
/// Equal tables always agree; two distinct tables collide with probability
/// below `2^-120`.
struct Fingerprint {
    /// `r_x` for each domain point, per lane.
    weights: Vec<[u64; 2]>,
    /// `h(v)` for each point of the image set, per lane.
    values: Vec<[u64; 2]>,
}

impl Fingerprint {
    fn new(domain: usize, image: usize) -> Self {
        let mut rng = StdRng::seed_from_u64(0x6d65_7461_6379_636c);
        let mut draw = |len: usize| -> Vec<[u64; 2]> {
            (0..len)
                .map(|_| {
                    [
                        rng.gen_range(0..FINGERPRINT_PRIME),
                        rng.gen_range(0..FINGERPRINT_PRIME),
                    ]
                })
                .collect()
        };
        let weights = draw(domain);
        let values = draw(image);
        Fingerprint { weights, values }
    }

    /// Non-empty fibres of `g`, given by image positions, as
    /// `(image position, weight per lane)`. `totals` is scratch space of
    /// length `|V|` and is left zeroed.
    fn fibre_weights(
        &self,
        g: impl Iterator<Item = u32>,
        totals: &mut [(u32, [u128; 2])],
    ) -> Vec<(u32, [u64; 2])> {
        for (x, v) in g.enumerate() {
            let (hits, sums) = &mut totals[v as usize];
            *hits += 1;
            sums[0] += self.weights[x][0] as u128;
            sums[1] += self.weights[x][1] as u128;
        }
        let mut out = Vec::new();
        for (v, (hits, sums)) in totals.iter_mut().enumerate() {
            if *hits > 0 {
                out.push((v as u32, [reduce(sums[0]), reduce(sums[1])]));
                *hits = 0;
                *sums = [0, 0];
            }
        }
        out
    }

    /// Fingerprint of `x -> u(g(x))` from the fibre weights of `g`.
    fn of_composite(&self, fibres: &[(u32, [u64; 2])], u: &[u32]) -> (u64, u64) {
        // folded terms are below 2^62, so the sums cannot overflow
        let (mut s0, mut s1) = (0u128, 0u128);
        for &(v, [w0, w1]) in fibres {
            let [h0, h1] = self.values[u[v as usize] as usize];
            s0 += fold(w0 as u128 * h0 as u128);
            s1 += fold(w1 as u128 * h1 as u128);
        }
        (reduce(s0), reduce(s1))
    }
}

/// `P(G)` or `Λ(G)` as a set of explicit function tables.
///
/// Every generator maps `G` into the union `V` of their images, so each
/// element is `u ∘ g` for a generator `g` and some `u` in the closure of the
/// generators restricted to `V` (or the identity). That closure lives on `|V|`
/// points; candidates `u ∘ g` are deduplicated by fingerprint and only new
/// ones are expanded to full tables. A generator already produced as some
/// `u0 ∘ b` contributes nothing new and is skipped.
pub fn table_closure(p: &Presentation, side: Side, cap: u64) -> Result<HashSet<FunctionTable>> {
    check_cap(p, cap)?;
    let generators = commutation_tables(p, side);
    let size = p.order() as usize;

    // image points and their positions in V
    let mut position = vec![u32::MAX; size];
    for t in &generators {
        for &e in &t.entries {
            position[e as usize] = 0;
        }
    }
    let image: Vec<u32> = (0..size as u32)
        .filter(|&e| position[e as usize] == 0)
        .collect();
    for (at, &e) in image.iter().enumerate() {
        position[e as usize] = at as u32;
    }

    // generators as maps on V, by position, with their fibre weights
    let fingerprint = Fingerprint::new(size, image.len());
    let mut scratch = vec![(0u32, [0u128; 2]); image.len()];
    let mut on_image = Vec::with_capacity(generators.len());
    let mut fibres = Vec::with_capacity(generators.len());
    let mut generators = generators;
    for t in &mut generators {
        for e in &mut t.entries {
            *e = position[*e as usize];
        }
        on_image.push(
            image
                .iter()
                .map(|&v| t.entries[v as usize])
                .collect::<Vec<u32>>(),
        );
        fibres.push(fingerprint.fibre_weights(t.entries.iter().copied(), &mut scratch));
    }
    let mut restricted = semigroup_closure(on_image, |a: &Vec<u32>, b: &Vec<u32>| {
        a.iter().map(|&v| b[v as usize]).collect()
    });
    restricted.push((0..image.len() as u32).collect());

    let mut seen: FxHashSet<(u64, u64)> = FxHashSet::default();
    let mut tables = HashSet::new();
    // u followed by the position-to-element map
    let landing: Vec<Vec<u32>> = restricted
        .iter()
        .map(|u| u.iter().map(|&v| image[v as usize]).collect())
        .collect();
    let identity = restricted.len() - 1;
    for (g, g_fibres) in generators.iter().zip(&fibres) {
        // if g = u0 ∘ b was already produced, every u ∘ g = (u ∘ u0) ∘ b was too
        if seen.contains(&fingerprint.of_composite(g_fibres, &restricted[identity])) {
            continue;
        }
        for (u, land) in restricted.iter().zip(&landing) {
            if seen.insert(fingerprint.of_composite(g_fibres, u)) {
                let entries = g.entries.iter().map(|&v| land[v as usize]).collect();
                tables.insert(FunctionTable { entries });
            }
        }
    }
    Ok(tables)
}

/// Per column `j`: the image exponent at `i = 0` and its increment in `i`.
/// For fixed `j` the exponent of `μ(a^i b^j)` is affine in `i`, so each
/// column of the table is an arithmetic progression.
fn progression(p: &Presentation, mu: MuMap) -> (Vec<u32>, Vec<u32>) {
    (0..p.n())
        .map(|j| {
            let start = mu.apply(p, p.element(0, j)).i;
            let next = mu.apply(p, p.element(1, j)).i;
            (start as u32, p.modulus().sub(next, start) as u32)
        })
        .unzip()
}

/// Pair-to-table translation: evaluate a mu-map at every element.
pub fn table_of(p: &Presentation, mu: MuMap) -> FunctionTable {
    let (m, n) = (p.m() as u32, p.n() as u32);
    let (mut value, step) = progression(p, mu);
    let mut entries = vec![0u32; (m * n) as usize];
    for row in entries.chunks_exact_mut(n as usize) {
        for ((e, v), &s) in row.iter_mut().zip(value.iter_mut()).zip(&step) {
            *e = *v * n;
            *v = add_below(*v, s, m);
        }
    }
    FunctionTable { entries }
}

/// `table == table_of(p, mu)`, without building the table.
pub fn table_matches(p: &Presentation, mu: MuMap, table: &FunctionTable) -> bool {
    let (m, n) = (p.m() as u32, p.n() as u32);
    if table.entries.len() != (m * n) as usize {
        return false;
    }
    let (mut value, step) = progression(p, mu);
    table.entries.chunks_exact(n as usize).all(|row| {
        row.iter()
            .zip(value.iter_mut())
            .zip(&step)
            .all(|((&e, v), &s)| {
                let hit = e == *v * n;
                *v = add_below(*v, s, m);
                hit
            })
    })
}

/// Whether `tables` is exactly the translation of `maps`. Each table is
/// decoded, looked up and compared in place; with equal sizes, that makes
/// translation a bijection.
pub fn tables_match_maps(
    p: &Presentation,
    tables: &HashSet<FunctionTable>,
    maps: &HashSet<MuMap>,
) -> bool {
    tables.len() == maps.len()
        && tables.iter().all(|t| {
            decode_table(p, t).is_some_and(|mu| maps.contains(&mu) && table_matches(p, mu, t))
        })
}

/// Reads a pair back off a table whose images lie in `<a>`, by probing at
/// `a` (image `a^x`) and `b` (image `a^(-y k_1)`).
pub fn decode_table(p: &Presentation, table: &FunctionTable) -> Option<MuMap> {
    let m = p.modulus();
    let at_a = table.image(p, p.a());
    let at_b = table.image(p, p.b());
    if at_a.j != 0 || at_b.j != 0 {
        return None;
    }
    let k1_inv = mod_inverse(p.k_sub(1), m).ok()?;
    Some(MuMap {
        x: at_a.i,
        y: m.mul(m.neg(at_b.i), k1_inv),
    })
}

/// Where the oracle generators come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generators {
    /// Commutation maps of every group element.
    Side(Side),
    /// `Γ_μ(S)` for an explicit base.
    Base(BaseSet),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableStatus {
    Checked,
    CapExceeded,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub map: MuMap,
    pub in_engine: bool,
    pub in_pair_closure: bool,
    pub in_table_closure: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferentialReport {
    pub engine_order: u64,
    pub pair_order: u64,
    pub table_order: Option<u64>,
    pub table_status: TableStatus,
    pub agree: bool,
    pub witness: Option<Witness>,
}

/// Compares the container engine against [`pair_closure`] and, for the
/// commutation semigroups under the cap, against [`table_closure`].
pub fn differential_check(
    p: &Presentation,
    generators: &Generators,
    cap: u64,
) -> Result<DifferentialReport> {
    let m = p.modulus();
    let (base, pair_gens, side) = match generators {
        Generators::Side(side) => (base_for(p, *side), side_generators(p, *side), Some(*side)),
        Generators::Base(base) => (base.clone(), base_generators(base), None),
    };
    let analysis = analyze(p, &base)?;
    let engine: Vec<MuMap> = enumerate_elements(&analysis);
    let engine_set: HashSet<MuMap> = engine.iter().copied().collect();
    let pair = pair_closure(m, pair_gens);

    let mut witness = first_difference(&engine_set, &pair).map(|map| Witness {
        map,
        in_engine: engine_set.contains(&map),
        in_pair_closure: pair.contains(&map),
        in_table_closure: None,
    });

    let (table_status, table_order) = match side {
        None => (TableStatus::NotApplicable, None),
        Some(side) => match table_closure(p, side, cap) {
            Err(Error::CapExceeded { .. }) => (TableStatus::CapExceeded, None),
            Err(e) => return Err(e),
            Ok(tables) => {
                if witness.is_none() {
                    witness =
                        table_difference(p, &engine, &tables).map(|(map, in_table)| Witness {
                            map,
                            in_engine: engine_set.contains(&map),
                            in_pair_closure: pair.contains(&map),
                            in_table_closure: Some(in_table),
                        });
                }
                (TableStatus::Checked, Some(tables.len() as u64))
            }
        },
    };

    Ok(DifferentialReport {
        engine_order: analysis.total_order,
        pair_order: pair.len() as u64,
        table_order,
        table_status,
        agree: witness.is_none()
            && analysis.total_order == engine.len() as u64
            && table_order.is_none_or(|t| t == engine.len() as u64),
        witness,
    })
}

fn first_difference(a: &HashSet<MuMap>, b: &HashSet<MuMap>) -> Option<MuMap> {
    a.symmetric_difference(b).min().copied()
}

fn table_difference(
    p: &Presentation,
    engine: &[MuMap],
    tables: &HashSet<FunctionTable>,
) -> Option<(MuMap, bool)> {
    if tables_match_maps(p, tables, &engine.iter().copied().collect()) {
        return None;
    }
    let mut translated = HashSet::with_capacity(engine.len());
    for &mu in engine {
        let t = table_of(p, mu);
        if !tables.contains(&t) {
            return Some((mu, false));
        }
        translated.insert(t);
    }
    tables
        .iter()
        .filter(|t| !translated.contains(*t))
        .filter_map(|t| decode_table(p, t))
        .min()
        .map(|mu| (mu, true))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_cyclic_generator() {
        // x -> 2x on Z_7 generates {2, 4, 1}
        let c = semigroup_closure([2u64], |a, b| a * b % 7);
        let set: HashSet<u64> = c.into_iter().collect();
        assert_eq!(set, HashSet::from([1, 2, 4]));
    }

    #[test]
    fn redundant_generators_are_skipped() {
        let c = semigroup_closure([2u64, 4, 1, 3], |a, b| a * b % 7);
        assert_eq!(c.len(), 6);
    }

    #[test]
    fn s3_orders() {
        let p = Presentation::validate(3, 2).unwrap();
        let m = p.modulus();
        assert_eq!(pair_closure(m, side_generators(&p, Side::Right)).len(), 6);
        assert_eq!(pair_closure(m, side_generators(&p, Side::Left)).len(), 9);
        assert_eq!(
            table_closure(&p, Side::Right, DEFAULT_TABLE_CAP)
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            table_closure(&p, Side::Left, DEFAULT_TABLE_CAP)
                .unwrap()
                .len(),
            9
        );
    }

    #[test]
    fn mersenne_reduction() {
        let big = FINGERPRINT_PRIME - 1;
        for (a, b) in [
            (big, big),
            (big, 2),
            (1 << 60, 1 << 60),
            (12345, 67890),
            (0, big),
        ] {
            let want = (a as u128 * b as u128 % FINGERPRINT_PRIME as u128) as u64;
            assert_eq!(reduce(fold(a as u128 * b as u128)), want);
        }
    }

    #[test]
    fn factored_closure_matches_worklist() {
        for (m, k) in [(3, 2), (7, 6), (5, 3), (9, 2), (21, 5), (63, 2)] {
            let p = Presentation::validate(m, k).unwrap();
            for side in Side::BOTH {
                let worklist: HashSet<FunctionTable> =
                    semigroup_closure(commutation_tables(&p, side), |a, b| a.then(b))
                        .into_iter()
                        .collect();
                assert_eq!(
                    table_closure(&p, side, DEFAULT_TABLE_CAP).unwrap(),
                    worklist,
                    "G({m},{k}) {side}"
                );
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let p = Presentation::validate(63, 2).unwrap();
        assert!(matches!(
            table_closure(&p, Side::Right, 100),
            Err(Error::CapExceeded {
                order: 378,
                cap: 100
            })
        ));
    }

    #[test]
    fn tabulated_commutators_match_direct() {
        for (m, k) in [(3, 2), (7, 6), (21, 5), (63, 2)] {
            let p = Presentation::validate(m, k).unwrap();
            for side in Side::BOTH {
                let direct: Vec<FunctionTable> = p
                    .elements()
                    .map(|g| commutation_table(&p, side, g))
                    .collect();
                assert_eq!(commutation_tables(&p, side), direct, "G({m},{k}) {side}");
            }
        }
    }

    #[test]
    fn translation_matches_pointwise_evaluation() {
        for (m, k) in [(3, 2), (21, 5), (63, 2)] {
            let p = Presentation::validate(m, k).unwrap();
            let modulus = p.modulus();
            for (x, y) in [(0, 0), (1, 0), (0, 1), (2, 5), (m - 1, m - 1)] {
                let mu = MuMap::new(modulus, x, y);
                let pointwise: Vec<u32> = p
                    .elements()
                    .map(|g| p.index_of(mu.apply(&p, g)) as u32)
                    .collect();
                assert_eq!(table_of(&p, mu).entries, pointwise);
            }
        }
    }

    #[test]
    fn streaming_match_agrees_with_translation() {
        let p = Presentation::validate(21, 5).unwrap();
        let m = p.modulus();
        let maps: HashSet<MuMap> = [(1, 0), (4, 7), (0, 3)]
            .map(|(x, y)| MuMap::new(m, x, y))
            .into();
        let tables: HashSet<FunctionTable> = maps.iter().map(|&mu| table_of(&p, mu)).collect();
        assert!(tables_match_maps(&p, &tables, &maps));
        let mut fewer = maps.clone();
        fewer.remove(&MuMap::new(m, 0, 3));
        assert!(!tables_match_maps(&p, &tables, &fewer));
        let mut swapped = maps.clone();
        swapped.remove(&MuMap::new(m, 4, 7));
        swapped.insert(MuMap::new(m, 4, 8));
        assert!(!tables_match_maps(&p, &tables, &swapped));
        let mut corrupted = table_of(&p, MuMap::new(m, 4, 7));
        corrupted.entries[5] = 0;
        assert!(!table_matches(&p, MuMap::new(m, 4, 7), &corrupted));
    }

    #[test]
    fn decode_inverts_translation() {
        let p = Presentation::validate(21, 5).unwrap();
        let m = p.modulus();
        for x in m.residues() {
            for y in m.residues() {
                let mu = MuMap { x, y };
                assert_eq!(decode_table(&p, &table_of(&p, mu)), Some(mu));
            }
        }
    }
}

//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use metacyclic::container::Container;
use metacyclic::oracle::{
    pair_closure, side_generators, table_closure, tables_match_maps, DEFAULT_TABLE_CAP,
};
use metacyclic::sigma::{analyze, analyze_side, enumerate_elements, BaseSet};
use metacyclic::survey::{
    flagged_moduli, scan, verify_minimal_prime_index, verify_prime_m, verify_prime_n,
    verify_prime_square_m, TheoremReport,
};
use metacyclic::zmod::is_unit;
use metacyclic::{Modulus, MuMap, Presentation, Side};

struct Outcome {
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, got: T, want: T) {
        if got != want {
            self.failures
                .push(format!("{label}: got {got:?}, want {want:?}"));
        }
    }

    fn within(&mut self, label: &str, elapsed: Duration, budget: Duration) {
        self.check(elapsed < budget, || {
            format!("{label}: took {elapsed:?}, budget {budget:?}")
        });
    }
}

type Criterion = (&'static str, fn(&mut Outcome));

fn pres(m: u64, k: u64) -> Presentation {
    Presentation::validate(m, k).expect("fixture presentation is valid")
}

fn maps(pairs: &[(u64, u64)]) -> Vec<MuMap> {
    pairs.iter().map(|&(x, y)| MuMap { x, y }).collect()
}

fn criterion_1(out: &mut Outcome) {
    let p = pres(3, 2);
    // warm the allocator so the timing reflects the computation
    let _ = analyze_side(&p, Side::Right);
    let start = Instant::now();
    let right = analyze_side(&p, Side::Right);
    let left = analyze_side(&p, Side::Left);
    let right_maps = enumerate_elements(&right);
    let left_maps = enumerate_elements(&left);
    let elapsed = start.elapsed();

    out.eq("|P(S3)|", right.total_order, 6);
    out.eq("|Λ(S3)|", left.total_order, 9);
    out.eq(
        "P(S3) maps",
        right_maps,
        maps(&[(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]),
    );
    out.eq(
        "Λ(S3) maps",
        left_maps,
        maps(&[
            (0, 0),
            (0, 1),
            (0, 2),
            (1, 0),
            (1, 1),
            (1, 2),
            (2, 0),
            (2, 1),
            (2, 2),
        ]),
    );
    out.within("runtime", elapsed, Duration::from_millis(1));
}

fn criterion_2(out: &mut Outcome) {
    let p = pres(63, 2);
    let start = Instant::now();
    let a = analyze_side(&p, Side::Right);
    let elapsed = start.elapsed();

    let r: Vec<u64> = a.base.elements().iter().copied().collect();
    out.eq("R", r, vec![0, 1, 3, 7, 15, 31]);
    out.eq("|R*|", a.closure.len(), 30);
    out.eq(
        "non-basic representatives",
        a.non_basic_representatives(),
        vec![9, 21, 42],
    );
    let size = |x: u64| a.family(x).map(|f| f.y_set_size);
    out.eq("|∪F(9)|", size(9), Some(21));
    out.eq("|∪F(21)|", size(21), Some(27));
    out.eq("|∪F(42)|", size(42), Some(21));
    out.eq("|P(G)|", a.total_order, 1770);
    out.within("runtime", elapsed, Duration::from_millis(100));
}

fn criterion_3(out: &mut Outcome) {
    let p = pres(7, 6);
    let right = analyze_side(&p, Side::Right);
    let left = analyze_side(&p, Side::Left);
    out.eq("|P|", right.total_order, 49);
    out.eq("|Λ|", left.total_order, 28);
    out.eq("R*", right.closure.elements().to_vec(), (0..7).collect());
    out.eq("L*", left.closure.elements().to_vec(), vec![0, 1, 2, 4]);
}

fn criterion_4(out: &mut Outcome) {
    let p = pres(5, 3);
    let s = BaseSet::new(p.modulus(), [0, 4]).unwrap();
    let a = analyze(&p, &s).unwrap();
    out.eq("S*", a.closure.elements().to_vec(), vec![0, 1, 4]);
    out.check(a.complete, || "Σ(S) not complete".into());
    out.eq("|Σ(S)|", a.total_order, 15);
    out.eq("|P|", analyze_side(&p, Side::Right).total_order, 25);
    out.eq("|Λ|", analyze_side(&p, Side::Left).total_order, 25);
}

fn criterion_5(out: &mut Outcome) {
    let start = Instant::now();
    let records = scan(3, 125, 1);
    let elapsed = start.elapsed();
    let flagged: Vec<u64> = flagged_moduli(&records).iter().map(|f| f.m).collect();
    out.eq("flagged m", flagged.clone(), vec![63, 75, 81, 99, 117, 125]);
    out.check(flagged.iter().all(|&m| m >= 63), || {
        format!("non-basic orbits below 63: {flagged:?}")
    });
    out.within("runtime", elapsed, Duration::from_secs(60));
}

fn criterion_6(out: &mut Outcome) {
    let g = pres(315, 272);
    out.eq("G(315,·,272) n", g.n(), 12);
    let right = analyze_side(&g, Side::Right);
    let left = analyze_side(&g, Side::Left);
    out.check(right.complete, || {
        format!(
            "G(315,12,272): R-orbits {:?} non-basic",
            right.non_basic_representatives()
        )
    });
    let orb_225_non_basic = left
        .orbits
        .iter()
        .any(|o| !o.basic && o.elements.contains(&225));
    out.check(orb_225_non_basic, || {
        format!(
            "G(315,12,272): 225 in L* = {}, non-basic L reps {:?}",
            left.closure.contains(225),
            left.non_basic_representatives()
        )
    });

    let h = pres(135, 62);
    out.eq("G(135,·,62) n", h.n(), 12);
    let right = analyze_side(&h, Side::Right);
    let left = analyze_side(&h, Side::Left);
    out.check(left.complete, || {
        format!(
            "G(135,12,62): L-orbits {:?} non-basic",
            left.non_basic_representatives()
        )
    });
    let orb_130_non_basic = right
        .orbits
        .iter()
        .any(|o| !o.basic && o.elements.contains(&130));
    out.check(orb_130_non_basic, || {
        format!(
            "G(135,12,62): 130 in R* = {}, non-basic R reps {:?}",
            right.closure.contains(130),
            right.non_basic_representatives()
        )
    });
}

fn criterion_7(out: &mut Outcome) {
    let mut groups = 0;
    let mut table_checked = 0;
    for m in 3..=100 {
        for k in 2..m {
            let Ok(p) = Presentation::validate(m, k) else {
                continue;
            };
            groups += 1;
            for side in Side::BOTH {
                let engine: HashSet<MuMap> = enumerate_elements(&analyze_side(&p, side))
                    .into_iter()
                    .collect();
                let pair = pair_closure(p.modulus(), side_generators(&p, side));
                out.check(engine == pair, || {
                    format!("G({m},{},{k}) {side}: engine != pair closure", p.n())
                });
                if p.order() <= DEFAULT_TABLE_CAP {
                    table_checked += 1;
                    let tables = table_closure(&p, side, DEFAULT_TABLE_CAP).unwrap();
                    out.check(tables_match_maps(&p, &tables, &engine), || {
                        format!("G({m},{},{k}) {side}: engine != table closure", p.n())
                    });
                }
            }
        }
    }
    out.check(groups > 0 && table_checked > 0, || {
        "no groups checked".into()
    });
    println!("    ({groups} presentations, {table_checked} side/table comparisons)");
}

fn report(out: &mut Outcome, r: TheoremReport) {
    out.check(r.cases > 0, || format!("{}: no cases", r.check));
    out.check(r.passed(), || {
        format!(
            "{}: {} violations, first {:?}",
            r.check,
            r.violations.len(),
            r.violations.first()
        )
    });
}

fn criterion_8(out: &mut Outcome) {
    report(out, verify_prime_m(97));
    report(out, verify_prime_square_m(11));
    report(out, verify_prime_n(200));
    report(out, verify_minimal_prime_index(200));
}

/// `{ y z mod m : z }` as a membership vector, by direct multiplication.
fn multiples_by_definition(m: u64, y: u64) -> Vec<bool> {
    let mut v = vec![false; m as usize];
    for z in 0..m {
        v[(y * z % m) as usize] = true;
    }
    v
}

fn criterion_9(out: &mut Outcome) {
    for mv in 2..=200u64 {
        let m = Modulus::new(mv).unwrap();
        let sets: Vec<Vec<bool>> = (0..mv).map(|y| multiples_by_definition(mv, y)).collect();
        for y1 in 0..mv {
            let c1 = Container::new(m, 0, y1);
            let size = sets[y1 as usize].iter().filter(|&&b| b).count() as u64;
            out.check(
                c1.order(m) == size && size == mv / metacyclic::zmod::gcd(mv, y1).unwrap(),
                || format!("m={mv} y={y1}: order {} vs {size}", c1.order(m)),
            );
            out.check((c1 == Container::maximal(m, 0)) == is_unit(y1, m), || {
                format!("m={mv} y={y1}: maximality vs unit")
            });
            for u in (0..mv).filter(|&u| is_unit(u, m)) {
                let cu = Container::new(m, 0, y1 * u % mv);
                out.check(cu == c1, || {
                    format!("m={mv} y={y1} u={u}: unit multiple changed container")
                });
            }
            for y2 in 0..mv {
                let c2 = Container::new(m, 0, y2);
                let by_divisor = c1.is_subset_of(c2);
                // Lemma form: y1 = y2 z for some z
                let by_equation = sets[y2 as usize][y1 as usize];
                let by_members = (0..mv)
                    .filter(|&w| sets[y1 as usize][w as usize])
                    .all(|w| sets[y2 as usize][w as usize]);
                let by_enumeration = c1.enumerate(m).iter().all(|&mu| c2.contains(mu));
                out.check(
                    by_divisor == by_equation
                        && by_equation == by_members
                        && by_members == by_enumeration,
                    || format!("m={mv} y1={y1} y2={y2}: subset tests disagree"),
                );
            }
        }
        // distinct x never share members; equal x always share μ(x, 0)
        let xs: Vec<u64> = (0..mv).step_by(((mv / 16).max(1)) as usize).collect();
        for &x1 in &xs {
            for &x2 in &xs {
                let (a, b) = (Container::maximal(m, x1), Container::new(m, x2, 0));
                let shared = a.enumerate(m).iter().any(|&mu| b.contains(mu));
                out.check(shared == (x1 == x2), || {
                    format!("m={mv} x1={x1} x2={x2}: disjointness")
                });
            }
        }
        if !out.failures.is_empty() {
            break;
        }
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 S3 orders and explicit maps", criterion_1),
        ("2 G(63,6,2) worked example", criterion_2),
        ("3 pq-group G(7,2,6)", criterion_3),
        ("4 Σ over G(5,4,3) with S = {0,4}", criterion_4),
        ("5 computer search m in [3,125]", criterion_5),
        ("6 G(315,12,272) / G(135,12,62) orbit pair", criterion_6),
        (
            "7 engine = pair closure = table closure, m <= 100",
            criterion_7,
        ),
        ("8 theorem suites", criterion_8),
        ("9 container calculus, m <= 200", criterion_9),
    ];
    // numeric arguments select criteria; libtest flags such as --nocapture are ignored
    let selected: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut failed = 0;
    let mut ran = 0;
    for (index, (name, run)) in criteria.into_iter().enumerate() {
        if !selected.is_empty() && !selected.contains(&(index + 1)) {
            continue;
        }
        ran += 1;
        let mut out = Outcome::new();
        let start = Instant::now();
        run(&mut out);
        let elapsed = start.elapsed();
        if out.failures.is_empty() {
            println!("[PASS] criterion {name} ({elapsed:.2?})");
        } else {
            failed += 1;
            println!("[FAIL] criterion {name} ({elapsed:.2?})");
            for f in out.failures.iter().take(10) {
                println!("       {f}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", ran - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

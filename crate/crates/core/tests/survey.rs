use metacyclic::oracle::{pair_closure, side_generators};
use metacyclic::survey::{
    factorize, flagged_moduli, scan, valid_presentations, verify_minimal_prime_index,
    verify_prime_m, verify_prime_n, verify_prime_square_m,
};
use metacyclic::Presentation;

#[test]
fn scan_orders_match_pair_closure() {
    let records = scan(3, 40, 1);
    assert_eq!(records.len(), 2 * valid_presentations(3, 40).count());
    for r in &records {
        let p = Presentation::validate(r.m, r.k).unwrap();
        assert_eq!(r.n, p.n());
        assert_eq!(
            r.order,
            pair_closure(p.modulus(), side_generators(&p, r.side)).len() as u64
        );
        assert_eq!(r.complete, r.non_basic_reps.is_empty());
    }
}

#[test]
fn scan_is_deterministic_across_jobs() {
    let serial = scan(60, 120, 1);
    assert_eq!(serial, scan(60, 120, 2));
    assert_eq!(serial, scan(60, 120, 4));
    assert_eq!(serial, scan(60, 120, 1));
    let keys: Vec<_> = serial.iter().map(|r| (r.m, r.k, r.side)).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn flagged_moduli_carry_factorizations() {
    let flagged = flagged_moduli(&scan(60, 70, 1));
    assert_eq!(flagged.iter().map(|f| f.m).collect::<Vec<_>>(), [63]);
    assert_eq!(flagged[0].factorization, [(3, 2), (7, 1)]);
    for v in 2..2000u64 {
        let product: u64 = factorize(v).iter().map(|&(q, e)| q.pow(e)).product();
        assert_eq!(product, v);
    }
}

#[test]
fn theorems_hold_on_small_ranges() {
    for report in [
        verify_prime_m(31),
        verify_prime_square_m(7),
        verify_prime_n(100),
        verify_minimal_prime_index(100),
    ] {
        assert!(report.cases > 0, "{}", report.check);
        assert!(report.passed(), "{}: {:?}", report.check, report.violations);
    }
}

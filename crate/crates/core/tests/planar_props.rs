use trit_codes::planar::{differential_spectrum, differential_spectrum_partial, known_pn_family};
use trit_codes::FieldContext;

fn ctx(m: u32) -> FieldContext {
    FieldContext::with_default_modulus(m).unwrap()
}

#[test]
fn planar_exponents_are_even_and_stable_under_frobenius() {
    for m in 2..=5u32 {
        let f = ctx(m);
        let n = f.n() as u64;
        let q = f.size() as u64;
        let mut pn = vec![false; n as usize];
        for r in 1..n {
            let s = differential_spectrum(&f, r);
            assert_eq!(s.mass(), q * (q - 1), "m={m} r={r}");
            pn[r as usize] = s.is_pn();
            if s.is_pn() {
                assert_eq!(r % 2, 0, "m={m} r={r}");
            }
        }
        for r in 1..n {
            assert_eq!(pn[r as usize], pn[(r * 3 % n) as usize], "m={m} r={r}");
        }
    }
}

#[test]
fn known_families_are_planar() {
    for m in 2..=6u32 {
        let f = ctx(m);
        let n = f.n() as u64;
        let mut hits = 0;
        for r in 1..n {
            if let Some(fam) = known_pn_family(m, r) {
                hits += 1;
                assert!(differential_spectrum(&f, r).is_pn(), "m={m} r={r} {fam:?}");
            }
        }
        assert!(hits >= 1, "m={m}");
    }
}

#[test]
fn partial_spectra_merge_to_full() {
    let f = ctx(4);
    for r in [2u64, 10, 14, 40, 41] {
        let full = differential_spectrum(&f, r);
        let mut a = differential_spectrum_partial(&f, r, 0..30);
        let b = differential_spectrum_partial(&f, r, 30..81);
        a.merge(&b);
        assert_eq!(a, full, "r={r}");
    }
}

/// Each nonzero a gives q pairs (a, b); the counts over b sum to q.
#[test]
fn histogram_counts_pairs() {
    for m in 2..=4u32 {
        let f = ctx(m);
        let q = f.size() as u64;
        for r in 1..f.n() as u64 {
            let s = differential_spectrum(&f, r);
            assert_eq!(s.histogram.values().sum::<u64>(), q * (q - 1));
            assert_eq!(s.max_count, *s.histogram.keys().max().unwrap());
        }
    }
}

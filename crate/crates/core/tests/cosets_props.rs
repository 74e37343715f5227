use num_integer::Integer;
use proptest::prelude::*;

use trit_codes::cosets::{all_cosets, coset, coset_leader, cosets_disjoint, lemma_zero_check};

#[test]
fn cosets_partition_the_residues() {
    for p in [2u64, 3, 5] {
        for m in 1..=6u32 {
            let modulus = p.pow(m) - 1;
            if modulus > 20_000 {
                continue;
            }
            let mut seen = vec![0u32; modulus as usize];
            let mut prev = None;
            for c in all_cosets(p, m) {
                assert!(prev < Some(c.leader()));
                prev = Some(c.leader());
                assert_eq!(m as usize % c.len(), 0, "p={p} m={m} leader={}", c.leader());
                assert_eq!(c.members()[0], c.leader());
                for &x in c.members() {
                    seen[x as usize] += 1;
                    assert_eq!(coset(p, m, x), c);
                }
            }
            assert!(seen.iter().all(|&k| k == 1), "p={p} m={m}");
        }
    }
}

/// gcd(e, p^m - 1) = 2 forces a full-size coset when p is odd.
#[test]
fn gcd_two_implies_full_coset() {
    for (p, max_m) in [(3u64, 7u32), (5, 4)] {
        for m in 2..=max_m {
            let n = p.pow(m) - 1;
            for e in 1..n {
                if e.gcd(&n) == 2 {
                    assert_eq!(coset(p, m, e).len(), m as usize, "p={p} m={m} e={e}");
                }
            }
        }
    }
    for m in 2..=7u32 {
        let n = 3u64.pow(m) - 1;
        for e in 1..n {
            assert_eq!(
                lemma_zero_check(m, e).unwrap(),
                e.gcd(&n) == 2,
                "m={m} e={e}"
            );
        }
    }
}

proptest! {
    #[test]
    fn coset_closed_under_times_three(m in 2u32..=10, j in any::<u64>()) {
        let n = 3u64.pow(m) - 1;
        let c = coset(3, m, j);
        prop_assert!(c.contains(j));
        prop_assert!(c.contains(j % n * 3 % n));
        prop_assert_eq!(c.modulus(), n);
        prop_assert_eq!(coset_leader(m, j), *c.members().iter().min().unwrap());
        prop_assert!(c.members().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn disjointness_is_symmetric(m in 2u32..=8, a in any::<u64>(), b in any::<u64>()) {
        let n = 3u64.pow(m) - 1;
        let same = coset_leader(m, a) == coset_leader(m, b);
        prop_assert_eq!(cosets_disjoint(m, a, b), !same);
        prop_assert_eq!(cosets_disjoint(m, b, a), !same);
        prop_assert!(!cosets_disjoint(m, a, a % n * 9 % n));
    }
}

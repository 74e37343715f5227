use proptest::prelude::*;

use trit_codes::corpus::{eval_expression, Claim, CORPUS};
use trit_codes::poly3::{
    factorize, frobenius_probe, gcd, has_root_in_gf3m, is_irreducible, F3Poly, Trit,
};
use trit_codes::FieldContext;

fn poly_strategy(max_len: usize) -> impl Strategy<Value = F3Poly> {
    prop::collection::vec(0i64..3, 1..max_len).prop_map(|c| F3Poly::from_ints(&c))
}

/// Products of small random factors, so repeated factors show up.
fn structured_strategy() -> impl Strategy<Value = F3Poly> {
    prop::collection::vec((poly_strategy(5), 1u64..4), 1..4).prop_map(|parts| {
        parts
            .into_iter()
            .filter(|(p, _)| !p.is_zero())
            .fold(F3Poly::one(), |acc, (p, k)| &acc * &p.pow(k))
    })
}

proptest! {
    #[test]
    fn factorization_reconstructs(f in prop_oneof![poly_strategy(40), structured_strategy()]) {
        prop_assume!(!f.is_zero());
        let fact = factorize(&f).unwrap();
        prop_assert_eq!(fact.expand(), f);
        for (p, k) in &fact.factors {
            prop_assert!(p.is_monic());
            prop_assert!(*k >= 1);
            prop_assert!(is_irreducible(p).unwrap());
        }
    }

    #[test]
    fn probe_matches_factors(f in prop_oneof![poly_strategy(30), structured_strategy()], i in 1u32..=6) {
        prop_assume!(!f.is_zero());
        let expected = factorize(&f)
            .unwrap()
            .factors
            .iter()
            .filter(|(p, _)| (i as usize).is_multiple_of(p.degree().unwrap()))
            .fold(F3Poly::one(), |acc, (p, _)| &acc * p);
        prop_assert_eq!(frobenius_probe(&f, i).unwrap(), expected);
    }

    #[test]
    fn gcd_properties(f in poly_strategy(20), g in poly_strategy(20)) {
        prop_assume!(!f.is_zero() || !g.is_zero());
        let d = gcd(&f, &g).unwrap();
        prop_assert_eq!(&d, &gcd(&g, &f).unwrap());
        prop_assert!(d.divides(&f) && d.divides(&g));
        if !g.is_zero() {
            prop_assert_eq!(&d, &gcd(&g, &f.rem(&g).unwrap()).unwrap());
        }
        let h = &f * &g;
        if !h.is_zero() {
            prop_assert!(gcd(&h, &f).unwrap().divides(&h));
        }
    }

    #[test]
    fn display_parses_back(f in poly_strategy(30)) {
        prop_assert_eq!(f.to_string().parse::<F3Poly>().unwrap(), f.clone());
        prop_assert_eq!(eval_expression(&f.to_string()).unwrap(), f.clone());
        prop_assert_eq!(f.to_csv().parse::<F3Poly>().unwrap(), f);
    }

    #[test]
    fn division_identity(f in poly_strategy(30), g in poly_strategy(10)) {
        prop_assume!(!g.is_zero());
        let (q, r) = f.divmod(&g).unwrap();
        prop_assert_eq!(&(&q * &g) + &r, f);
        prop_assert!(r.is_zero() || r.degree() < g.degree());
    }
}

/// Monic polynomials of degree `d`, all of them.
fn monic_of_degree(d: usize) -> impl Iterator<Item = F3Poly> {
    (0..3usize.pow(d as u32)).map(move |low| {
        let mut c: Vec<Trit> = (0..d)
            .map(|i| Trit::new((low / 3usize.pow(i as u32) % 3) as i64))
            .collect();
        c.push(Trit::ONE);
        F3Poly::new(c)
    })
}

#[test]
fn product_of_irreducibles_is_field_polynomial() {
    for n in 1..=3usize {
        let mut product = F3Poly::one();
        for d in (1..=n).filter(|d| n % d == 0) {
            for p in monic_of_degree(d) {
                let no_root = (0..3).all(|x| p.eval(Trit::new(x)).value() != 0);
                let irr = d == 1 || no_root;
                assert_eq!(is_irreducible(&p).unwrap(), irr, "{p}");
                if irr {
                    product = &product * &p;
                }
            }
        }
        let want = &F3Poly::monomial(3usize.pow(n as u32), Trit::ONE) - &F3Poly::x();
        assert_eq!(product, want, "n={n}");
    }
}

#[test]
fn irreducible_counts_match_necklace_formula() {
    // Monic irreducibles of degree d over GF(3): 3, 3, 8, 18, 48.
    for (d, want) in [(1, 3), (2, 3), (3, 8), (4, 18), (5, 48)] {
        let got = monic_of_degree(d)
            .filter(|p| is_irreducible(p).unwrap())
            .count();
        assert_eq!(got, want, "degree {d}");
    }
}

#[test]
fn root_test_matches_field_evaluation() {
    let mut polys: Vec<F3Poly> = Vec::new();
    for entry in CORPUS {
        match entry.claim {
            Claim::Gcd { f, .. } | Claim::Factors { f, .. } | Claim::Irreducible { f } => {
                polys.push(eval_expression(f).unwrap())
            }
            Claim::Identity { lhs, .. } => polys.push(eval_expression(lhs).unwrap()),
        }
    }
    polys.sort_by_key(|p| p.to_csv());
    polys.dedup();
    for m in 1..=6u32 {
        let ctx = (m >= 2).then(|| FieldContext::with_default_modulus(m).unwrap());
        for f in &polys {
            let exhaustive = match &ctx {
                Some(c) => c.elements().any(|x| c.eval_poly(f, x).is_zero()),
                None => (0..3).any(|x| f.eval(Trit::new(x)).is_zero()),
            };
            assert_eq!(has_root_in_gf3m(f, m).unwrap(), exhaustive, "{f} m={m}");
        }
    }
}

#[test]
fn edge_cases() {
    assert!(factorize(&F3Poly::zero()).is_err());
    assert!(gcd(&F3Poly::zero(), &F3Poly::zero()).is_err());
    assert!(is_irreducible(&F3Poly::one()).is_err());
    let f = factorize(&F3Poly::from_ints(&[2])).unwrap();
    assert!(f.factors.is_empty());
    assert_eq!(f.to_string(), "2");
    assert_eq!(
        factorize(&"x^9".parse().unwrap()).unwrap().to_string(),
        "(x)^9"
    );
    assert_eq!(
        factorize(&"2x^3+2".parse().unwrap()).unwrap().to_string(),
        "2 (x+1)^3"
    );
    for bad in ["", "x^", "3y", "x^2+", "1,,2"] {
        assert!(bad.parse::<F3Poly>().is_err(), "{bad:?}");
    }
}

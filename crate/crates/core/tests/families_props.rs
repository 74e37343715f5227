use std::sync::Arc;

use num_integer::Integer;

use trit_codes::codes::{generator_polynomial, AnalyzeOptions, CodeSpec, Sequential};
use trit_codes::cosets::coset;
use trit_codes::families::{catalog_at, survey, verify_claim, ClaimOptions, ClaimStatus, FamilyId};
use trit_codes::planar::known_pn_family;
use trit_codes::{Error, FieldContext};

fn ctx(m: u32) -> Arc<FieldContext> {
    Arc::new(FieldContext::with_default_modulus(m).unwrap())
}

fn assert_pass(fam: FamilyId, m: u32) {
    let rep = verify_claim(fam, ctx(m), &ClaimOptions::default(), &Sequential).unwrap();
    assert_eq!(
        rep.status,
        ClaimStatus::Pass,
        "{} m={m}: {:?}",
        fam.tag(),
        rep.checks
    );
    assert!(rep.checks.iter().all(|c| c.ok));
    assert_eq!((rep.report.n, rep.report.k), (rep.claimed.0, rep.claimed.1));
    assert_eq!(rep.report.d_exact, Some(rep.claimed.2));
}

#[test]
fn catalog_claims_hold_at_small_degrees() {
    for m in 2..=6u32 {
        for s in [false, true] {
            for fam in catalog_at(m, s) {
                assert_pass(fam, m);
            }
        }
    }
    assert_pass(FamilyId::D5NonApn(3), 7);
}

#[test]
fn exponents_reduce_and_record_leaders() {
    for m in 2..=8u32 {
        let n = 3u64.pow(m) - 1;
        for fam in FamilyId::FIXED {
            let Ok(x) = fam.exponent_of(m) else { continue };
            assert!(x.e < n);
            assert_eq!(x.leader, coset(3, m, x.e).leader());
            if let Some(eq) = x.equivalent {
                assert_eq!(coset(3, m, eq).leader(), x.leader, "{} m={m}", fam.tag());
            }
        }
    }
}

#[test]
fn congruence_instances_hold_for_planar_halves() {
    for m in [3u32, 5] {
        let n = 3u64.pow(m) - 1;
        let mut tried = 0;
        for r in (2..n).step_by(2) {
            if r.gcd(&n) != 2 || known_pn_family(m, r / 2).is_none() {
                continue;
            }
            for tau in 0..m {
                assert_pass(FamilyId::D5OddCongruence { r, tau }, m);
                tried += 1;
            }
        }
        assert!(tried > 0, "m={m}");
    }
}

#[test]
fn the_two_codes_at_374_differ() {
    let a = FamilyId::BPlusR(10);
    let b = FamilyId::D5EvenPN(10);
    assert_eq!(a.exponent_of(6).unwrap().e, 374);
    assert_eq!(b.exponent_of(6).unwrap().e, 374);
    let ga = generator_polynomial(&CodeSpec::new(ctx(6), 374, false).unwrap()).unwrap();
    let gb = generator_polynomial(&CodeSpec::new(ctx(6), 374, true).unwrap()).unwrap();
    assert_ne!(ga, gb);
    assert_eq!(gb.degree(), Some(ga.degree().unwrap() + 1));
    assert_pass(a, 6);
    assert_pass(b, 6);
}

#[test]
fn tags_round_trip_over_catalogs() {
    for m in 2..=9u32 {
        for s in [false, true] {
            for fam in catalog_at(m, s) {
                assert_eq!(fam.tag().parse::<FamilyId>().unwrap(), fam);
            }
        }
    }
}

#[test]
fn inapplicable_degrees_are_rejected() {
    for m in 2..=9u32 {
        for fam in FamilyId::FIXED {
            let applicable = fam.check_applicable(m).is_ok();
            match verify_claim(fam, ctx(m), &ClaimOptions::default(), &Sequential) {
                Err(Error::NotApplicable { .. }) => assert!(!applicable, "{} m={m}", fam.tag()),
                _ => assert!(applicable, "{} m={m}", fam.tag()),
            }
            if m > 6 {
                break;
            }
        }
    }
}

#[test]
fn survey_contents() {
    let opts = AnalyzeOptions::default();
    let hits = survey(ctx(3), true, &opts, false, &Sequential).unwrap();
    let es: Vec<u64> = hits.iter().map(|h| h.e).collect();
    assert_eq!(es, [4, 8]);
    assert!(hits.iter().all(|h| h.report.d_exact == Some(5)));
    assert!(hits[1].families.contains(&"D5-odd-list-3".to_string()));

    let hits = survey(ctx(5), false, &opts, false, &Sequential).unwrap();
    assert!(hits
        .iter()
        .all(|h| h.report.optimal && h.report.d_exact == Some(4)));
    for fam in catalog_at(5, false) {
        let leader = fam.exponent_of(5).unwrap().leader;
        let hit = hits.iter().find(|h| h.e == leader).unwrap();
        assert!(hit.families.contains(&fam.tag()), "{}", fam.tag());
    }

    match survey(ctx(9), true, &opts, false, &Sequential) {
        Err(Error::BudgetExceeded { needed, budget }) => assert!(needed > budget),
        other => panic!("{other:?}"),
    }
}

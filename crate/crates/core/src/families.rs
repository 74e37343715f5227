//! Catalog of exponent families with proven parameters, claim
//! verification and exponent surveys.
//!
//! Families with `d = 4` concern `C(1,e)`; the `D5` families concern
//! `C(1,e,s)` with `d = 5`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_integer::Integer;

use crate::codes::{
    analyze, distance_bound, weight_cost, AnalyzeOptions, CodeReport, CodeSpec, SearchDriver,
    SearchOutcome,
};
use crate::conditions::{check_conditions, cross_validate, CaseFamily};
use crate::cosets::{all_cosets, coset, cosets_disjoint, lemma_zero_check};
use crate::error::Error;
use crate::field::FieldContext;
use crate::planar::{differential_spectrum, known_pn_family};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// `e = 2(3^(m-1) - 1)`; m odd, `3 ∤ m`.
    OP160,
    /// `e = (3^m-1)/2 - r` for `r` in {2, 5}.
    AMinusR(u64),
    /// `e = (3^m-1)/2 + r` for `r` in {7, 10}.
    BPlusR(u64),
    /// `e = r(3^(m-1) - 1)` for `r = 5`.
    CTimesR(u64),
    /// `e` in {16, 20}.
    SmallE(u64),
    /// `C(1,e,s)`, m even, `e = (3^m-1)/2 + r` with `x^r` a known planar
    /// monomial.
    D5EvenPN(u64),
    /// `C(1,2,s)`, m even.
    D5E2,
    /// `C(1,e,s)`, m odd, `e` even with `e r = 2·3^τ (mod 3^m-1)`.
    D5OddCongruence { r: u64, tau: u32 },
    /// `C(1,e,s)`, m odd, one of five explicit exponents.
    D5OddList(u8),
    /// `C(1,e,s)`, `e = (3^m + 2·3^t - 1)/20`, `m, t ≡ 3 (mod 4)`.
    D5NonApn(u32),
}

/// An exponent reduced mod `3^m - 1`, with its coset leader.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Exponent {
    pub e: u64,
    pub leader: u64,
    /// Another representative the family is often written with.
    pub equivalent: Option<u64>,
}

fn group_order(m: u32) -> u64 {
    3u64.pow(m) - 1
}

fn require(cond: bool, fam: FamilyId, reason: &str) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(Error::not_applicable(fam, reason))
    }
}

impl FamilyId {
    /// Every family with fixed parameters, followed by the five list
    /// variants.
    pub const FIXED: [FamilyId; 14] = [
        FamilyId::OP160,
        FamilyId::AMinusR(2),
        FamilyId::AMinusR(5),
        FamilyId::BPlusR(7),
        FamilyId::BPlusR(10),
        FamilyId::CTimesR(5),
        FamilyId::SmallE(16),
        FamilyId::SmallE(20),
        FamilyId::D5E2,
        FamilyId::D5OddList(1),
        FamilyId::D5OddList(2),
        FamilyId::D5OddList(3),
        FamilyId::D5OddList(4),
        FamilyId::D5OddList(5),
    ];

    pub fn tag(&self) -> String {
        self.to_string()
    }

    pub fn with_s_check(&self) -> bool {
        matches!(
            self,
            FamilyId::D5EvenPN(_)
                | FamilyId::D5E2
                | FamilyId::D5OddCongruence { .. }
                | FamilyId::D5OddList(_)
                | FamilyId::D5NonApn(_)
        )
    }

    pub fn claimed_d(&self) -> u64 {
        if self.with_s_check() {
            5
        } else {
            4
        }
    }

    /// The reduced equation family behind a distance-four claim.
    pub fn case_family(&self) -> Option<(CaseFamily, u64)> {
        match *self {
            FamilyId::OP160 => Some((CaseFamily::OpenProblem, 2)),
            FamilyId::AMinusR(r) => Some((CaseFamily::AMinusR, r)),
            FamilyId::BPlusR(r) => Some((CaseFamily::BPlusR, r)),
            FamilyId::CTimesR(r) => Some((CaseFamily::CTwoR, r)),
            FamilyId::SmallE(e) => Some((CaseFamily::SmallE, e)),
            _ => None,
        }
    }

    /// Checks the congruences on `m` that the family's claim assumes.
    pub fn check_applicable(&self, m: u32) -> Result<(), Error> {
        let f = *self;
        if !(2..=crate::field::MAX_DEGREE).contains(&m) {
            return Err(Error::UnsupportedDegree {
                m,
                max: crate::field::MAX_DEGREE,
            });
        }
        match f {
            FamilyId::OP160 | FamilyId::CTimesR(_) | FamilyId::SmallE(16) => {
                require(m % 2 == 1, f, "m must be odd")?;
                require(!m.is_multiple_of(3), f, "m must not be divisible by 3")
            }
            FamilyId::AMinusR(2) | FamilyId::BPlusR(10) => {
                require(m % 4 == 2, f, "m must be 2 mod 4")
            }
            FamilyId::AMinusR(_) | FamilyId::BPlusR(_) | FamilyId::SmallE(_) => {
                require(m % 2 == 1, f, "m must be odd")
            }
            FamilyId::D5E2 => require(m.is_multiple_of(2), f, "m must be even"),
            FamilyId::D5EvenPN(r) => {
                require(m.is_multiple_of(2), f, "m must be even")?;
                require(
                    known_pn_family(m, r).is_some(),
                    f,
                    "x^r must be a known planar monomial at this m",
                )
            }
            FamilyId::D5OddCongruence { r, tau } => {
                require(m % 2 == 1, f, "m must be odd")?;
                require(r % 2 == 0, f, "r must be even")?;
                require(tau < m, f, "tau must be below m")?;
                require(r.gcd(&group_order(m)) == 2, f, "gcd(r, 3^m-1) must be 2")
            }
            FamilyId::D5OddList(v) => {
                require(m % 2 == 1, f, "m must be odd")?;
                require((1..=5).contains(&v), f, "variant must be 1..5")?;
                if v == 5 {
                    require(m % 4 == 3, f, "m must be 3 mod 4")?;
                }
                Ok(())
            }
            FamilyId::D5NonApn(t) => {
                require(m % 4 == 3, f, "m must be 3 mod 4")?;
                require(t % 4 == 3, f, "t must be 3 mod 4")
            }
        }
    }

    /// The family's exponent at degree `m`.
    pub fn exponent_of(&self, m: u32) -> Result<Exponent, Error> {
        self.check_applicable(m)?;
        let n = group_order(m);
        let s = n / 2;
        let pow = |k: u32| 3u64.pow(k);
        let mut equivalent = None;
        let raw = match *self {
            FamilyId::OP160 => CaseFamily::OpenProblem.exponent(2, m),
            FamilyId::AMinusR(r) => CaseFamily::AMinusR.exponent(r, m),
            FamilyId::BPlusR(r) => CaseFamily::BPlusR.exponent(r, m),
            FamilyId::CTimesR(r) => {
                equivalent = Some((n - 2 * r % n) % n);
                CaseFamily::CTwoR.exponent(r, m)
            }
            FamilyId::SmallE(e) => e,
            FamilyId::D5EvenPN(r) => s + r,
            FamilyId::D5E2 => 2,
            FamilyId::D5OddCongruence { r, tau } => {
                let sols = solve_congruence_e(m, r, tau)?;
                *even_solutions(&sols)
                    .first()
                    .ok_or(Error::Internal("no even solution"))?
            }
            FamilyId::D5OddList(v) => {
                let m4 = m % 4;
                let half = |base: u64| if m4 == 1 { base + s } else { base };
                match v {
                    1 => (pow(m) + 1) / 4 + s,
                    2 => half((pow(m + 1) - 1) / 8),
                    3 => pow(m.div_ceil(2)) - 1,
                    4 => half((pow(m.div_ceil(2)) - 1) / 2),
                    _ => (pow((m + 1) / 4) - 1) * (pow(m.div_ceil(2)) + 1),
                }
            }
            FamilyId::D5NonApn(t) => {
                let num = 3u128.pow(m) + 2 * 3u128.pow(t) - 1;
                if !num.is_multiple_of(20) {
                    return Err(Error::not_applicable(
                        self,
                        "3^m + 2·3^t - 1 not divisible by 20",
                    ));
                }
                (num / 20 % n as u128) as u64
            }
        };
        let e = raw % n;
        Ok(Exponent {
            e,
            leader: coset(3, m, e).leader(),
            equivalent,
        })
    }

    /// The multiplier `r` and the power `τ` with `e r = 2·3^τ` for the
    /// odd-m families, with `τ` found by search.
    pub fn congruence_pair(&self, m: u32) -> Result<Option<(u64, Option<u32>)>, Error> {
        let r = match *self {
            FamilyId::D5OddCongruence { r, tau } => return Ok(Some((r, Some(tau)))),
            FamilyId::D5NonApn(_) => 20,
            FamilyId::D5OddList(v) => match v {
                1 => 4,
                2 => 8,
                3 => {
                    let h = if m % 4 == 1 {
                        m.div_ceil(2)
                    } else {
                        (m - 1) / 2
                    };
                    3u64.pow(h) + 1
                }
                4 => 2 * (3u64.pow(m.div_ceil(2)) + 1),
                _ => {
                    let h = if m % 8 == 3 {
                        (m + 1) / 4
                    } else {
                        (3 * m - 1) / 4
                    };
                    3u64.pow(h) + 1
                }
            },
            _ => return Ok(None),
        };
        let e = self.exponent_of(m)?.e;
        Ok(Some((r, find_tau(m, e, r))))
    }
}

/// Whether `e r = 2·3^τ (mod 3^m - 1)`.
pub fn congruence_holds(m: u32, e: u64, r: u64, tau: u32) -> bool {
    let n = group_order(m) as u128;
    e as u128 * r as u128 % n == 2 * 3u128.pow(tau) % n
}

/// Smallest `τ < m` with `e r = 2·3^τ (mod 3^m - 1)`.
pub fn find_tau(m: u32, e: u64, r: u64) -> Option<u32> {
    (0..m).find(|&tau| congruence_holds(m, e, r, tau))
}

/// Both solutions of `e r = 2·3^τ (mod 3^m - 1)`, ascending.
pub fn solve_congruence_e(m: u32, r: u64, tau: u32) -> Result<Vec<u64>, Error> {
    let n = group_order(m);
    let g = r.gcd(&n);
    if g != 2 {
        return Err(Error::GcdNotTwo { r, gcd: g });
    }
    let s = n / 2;
    // e (r/2) = 3^τ (mod s), and r/2 is invertible mod s.
    let inv = mod_inverse((r / 2) % s, s).ok_or(Error::Internal("r/2 not invertible"))?;
    let t = 3u128.pow(tau) % s as u128;
    let e0 = (t * inv as u128 % s as u128) as u64;
    let mut out = vec![e0, e0 + s];
    out.sort_unstable();
    Ok(out)
}

/// The even members of a solution list.
pub fn even_solutions(sols: &[u64]) -> Vec<u64> {
    sols.iter().copied().filter(|e| e % 2 == 0).collect()
}

fn mod_inverse(a: u64, modulus: u64) -> Option<u64> {
    if modulus == 1 {
        return Some(0);
    }
    let egcd = (a as i128).extended_gcd(&(modulus as i128));
    (egcd.gcd == 1).then(|| egcd.x.rem_euclid(modulus as i128) as u64)
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyId::OP160 => write!(f, "OP160"),
            FamilyId::AMinusR(r) => write!(f, "A-r{r}"),
            FamilyId::BPlusR(r) => write!(f, "B-r{r}"),
            FamilyId::CTimesR(r) => write!(f, "C-r{r}"),
            FamilyId::SmallE(e) => write!(f, "E{e}"),
            FamilyId::D5EvenPN(r) => write!(f, "D5-even-PN-r{r}"),
            FamilyId::D5E2 => write!(f, "D5-e2"),
            FamilyId::D5OddCongruence { r, tau } => write!(f, "D5-odd-r{r}-tau{tau}"),
            FamilyId::D5OddList(v) => write!(f, "D5-odd-list-{v}"),
            FamilyId::D5NonApn(t) => write!(f, "D5-nonAPN-t{t}"),
        }
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilyId, Error> {
        let unknown = || Error::UnknownFamily(s.to_string());
        let num = |t: &str| t.parse::<u64>().map_err(|_| unknown());
        let fam = if s == "OP160" {
            FamilyId::OP160
        } else if s == "D5-e2" {
            FamilyId::D5E2
        } else if let Some(r) = s.strip_prefix("D5-even-PN-r") {
            FamilyId::D5EvenPN(num(r)?)
        } else if let Some(v) = s.strip_prefix("D5-odd-list-") {
            let v = num(v)?;
            if !(1..=5).contains(&v) {
                return Err(unknown());
            }
            FamilyId::D5OddList(v as u8)
        } else if let Some(rest) = s.strip_prefix("D5-odd-r") {
            let (r, tau) = rest.split_once("-tau").ok_or_else(unknown)?;
            FamilyId::D5OddCongruence {
                r: num(r)?,
                tau: num(tau)? as u32,
            }
        } else if let Some(t) = s.strip_prefix("D5-nonAPN-t") {
            FamilyId::D5NonApn(num(t)? as u32)
        } else if let Some(r) = s.strip_prefix("A-r") {
            FamilyId::AMinusR(num(r)?)
        } else if let Some(r) = s.strip_prefix("B-r") {
            FamilyId::BPlusR(num(r)?)
        } else if let Some(r) = s.strip_prefix("C-r") {
            FamilyId::CTimesR(num(r)?)
        } else if let Some(e) = s.strip_prefix('E') {
            FamilyId::SmallE(num(e)?)
        } else {
            return Err(unknown());
        };
        let proven = match fam {
            FamilyId::AMinusR(r) => matches!(r, 2 | 5),
            FamilyId::BPlusR(r) => matches!(r, 7 | 10),
            FamilyId::CTimesR(r) => r == 5,
            FamilyId::SmallE(e) => matches!(e, 16 | 20),
            _ => true,
        };
        if proven {
            Ok(fam)
        } else {
            Err(unknown())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClaimStatus {
    Pass,
    Fail(Vec<String>),
    /// Side conditions hold but the weight search did not fit the budget.
    PredictedUnverified(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideCheck {
    pub name: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimReport {
    pub family: FamilyId,
    pub exponent: Exponent,
    /// `(n, k, d)` as claimed.
    pub claimed: (u64, u64, u64),
    pub checks: Vec<SideCheck>,
    pub report: CodeReport,
    pub status: ClaimStatus,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct ClaimOptions {
    pub analyze: AnalyzeOptions,
    /// Run planarity sweeps even when they exceed the budget.
    pub force: bool,
}

fn planar_check(ctx: &FieldContext, r: u64, opts: &ClaimOptions) -> Result<bool, Error> {
    let q = ctx.size() as u128;
    let needed = q * q;
    if needed > opts.analyze.budget && !opts.force {
        return Err(Error::BudgetExceeded {
            needed,
            budget: opts.analyze.budget,
        });
    }
    let spec = differential_spectrum(ctx, r);
    if spec.is_pn() && r % 2 == 1 {
        return Err(Error::Internal("planar monomial with odd exponent"));
    }
    Ok(spec.is_pn())
}

/// Builds the family's code at `ctx.m()`, checks its side conditions and
/// compares the analyzed parameters with the claim.
pub fn verify_claim(
    fam: FamilyId,
    ctx: Arc<FieldContext>,
    opts: &ClaimOptions,
    driver: &dyn SearchDriver,
) -> Result<ClaimReport, Error> {
    let m = ctx.m();
    let exponent = fam.exponent_of(m)?;
    let e = exponent.e;
    let n = ctx.n() as u64;
    let with_s = fam.with_s_check();
    let claimed_k = n - 2 * m as u64 - with_s as u64;
    let claimed = (n, claimed_k, fam.claimed_d());
    let mut checks = Vec::new();
    let mut push = |name: String, ok: bool| checks.push(SideCheck { name, ok });

    push("|C_e| = m".into(), lemma_zero_check(m, e)?);
    push("C_1 and C_e disjoint".into(), cosets_disjoint(m, 1, e));
    if let Some((family, r)) = fam.case_family() {
        push("conditions C1-C3".into(), check_conditions(&ctx, e).all());
        push(
            "symbolic route agrees".into(),
            cross_validate(&ctx, family, r)?,
        );
    }
    match fam {
        FamilyId::D5EvenPN(r) => push(format!("x^{r} planar"), planar_check(&ctx, r, opts)?),
        FamilyId::D5E2 => push("x^2 planar".into(), planar_check(&ctx, 2, opts)?),
        _ => {}
    }
    if let Some((r, tau)) = fam.congruence_pair(m)? {
        push(format!("gcd({r}, 3^m-1) = 2"), r.gcd(&n) == 2);
        push("e even".into(), e % 2 == 0);
        match tau {
            Some(t) => push(
                format!("e·{r} = 2·3^{t} mod 3^m-1"),
                congruence_holds(m, e, r, t),
            ),
            None => push(format!("e·{r} = 2·3^τ mod 3^m-1 for some τ"), false),
        }
        if r % 2 == 0 {
            push(
                format!("x^{} planar", r / 2),
                planar_check(&ctx, r / 2, opts)?,
            );
        }
    }

    let spec = CodeSpec::new(ctx.clone(), e, with_s)?;
    let report = analyze(&spec, &opts.analyze, driver)?;
    let mut reasons: Vec<String> = checks
        .iter()
        .filter(|c| !c.ok)
        .map(|c| format!("side condition failed: {}", c.name))
        .collect();
    if (report.n, report.k) != (claimed.0, claimed.1) {
        reasons.push(format!(
            "dimension mismatch: got [{}, {}], claimed [{}, {}]",
            report.n, report.k, claimed.0, claimed.1
        ));
    }
    let over_budget = report.searches.iter().any(|s| {
        matches!(
            s.outcome,
            SearchOutcome::OverBudget | SearchOutcome::Skipped
        )
    }) && report.d_exact.is_none();
    let status = match report.d_exact {
        Some(d) if d != claimed.2 => {
            reasons.push(format!("minimum distance {d}, claimed {}", claimed.2));
            ClaimStatus::Fail(reasons)
        }
        Some(_) if !report.optimal => {
            reasons.push("not optimal for its length and dimension".into());
            ClaimStatus::Fail(reasons)
        }
        Some(_) if reasons.is_empty() => ClaimStatus::Pass,
        None if over_budget && reasons.is_empty() => ClaimStatus::PredictedUnverified(format!(
            "weight search for {} needs more than the budget of {} cells",
            spec.label(),
            opts.analyze.budget
        )),
        None => {
            reasons.push("minimum distance undetermined".into());
            ClaimStatus::Fail(reasons)
        }
        Some(_) => ClaimStatus::Fail(reasons),
    };
    Ok(ClaimReport {
        family: fam,
        exponent,
        claimed,
        checks,
        report,
        status,
    })
}

/// Catalog families that apply at `m` with the given code type, including
/// the planar-monomial and `t` parameters worth enumerating.
pub fn catalog_at(m: u32, with_s_check: bool) -> Vec<FamilyId> {
    let mut fams: Vec<FamilyId> = FamilyId::FIXED.to_vec();
    for h in 1..=m {
        fams.push(FamilyId::D5EvenPN(3u64.pow(h) + 1));
        if h % 2 == 1 {
            fams.push(FamilyId::D5EvenPN(3u64.pow(h).div_ceil(2)));
        }
    }
    fams.push(FamilyId::D5EvenPN(2));
    for t in (3..=m).step_by(4) {
        fams.push(FamilyId::D5NonApn(t));
    }
    fams.sort();
    fams.dedup();
    fams.retain(|f| f.with_s_check() == with_s_check && f.exponent_of(m).is_ok());
    fams
}

/// `(r, τ)` pairs with `r` even, `x^(r/2)` a known planar monomial and
/// `e r = 2·3^τ`, for odd `m`.
pub fn congruence_witnesses(m: u32, e: u64) -> Vec<(u64, u32)> {
    let n = group_order(m);
    let s = n / 2;
    if m.is_multiple_of(2) || e % 2 == 1 || e.gcd(&n) != 2 {
        return Vec::new();
    }
    let Some(inv) = mod_inverse((e / 2) % s, s) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for tau in 0..m {
        let r0 = (3u128.pow(tau) % s as u128 * inv as u128 % s as u128) as u64;
        for r in [r0, r0 + s] {
            if r % 2 == 0 && r.gcd(&n) == 2 && known_pn_family(m, r / 2).is_some() {
                out.push((r, tau));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyHit {
    /// Coset leader.
    pub e: u64,
    pub report: CodeReport,
    pub families: Vec<String>,
}

/// Even coset leaders `e` with `|C_e| = m`, ascending.
pub fn survey_candidates(m: u32) -> Vec<u64> {
    all_cosets(3, m)
        .into_iter()
        .filter(|c| c.leader() % 2 == 0 && c.len() == m as usize)
        .map(|c| c.leader())
        .collect()
}

/// Worst-case search cells for a survey: every candidate searched up to the
/// bound (capped at weight four).
pub fn survey_cost(m: u32, with_s_check: bool) -> u128 {
    let n = group_order(m);
    let k = n - 2 * m as u64 - with_s_check as u64;
    let top = distance_bound(n, k).applied.min(4) as usize;
    let per: u128 = (1..=top).map(|w| weight_cost(n, w)).sum();
    per * survey_candidates(m).len() as u128
}

/// Analyzes every candidate exponent and returns the optimal ones, tagged
/// with the catalog families whose exponent falls in the same coset.
pub fn survey(
    ctx: Arc<FieldContext>,
    with_s_check: bool,
    opts: &AnalyzeOptions,
    force: bool,
    driver: &dyn SearchDriver,
) -> Result<Vec<SurveyHit>, Error> {
    let m = ctx.m();
    let needed = survey_cost(m, with_s_check);
    if needed > opts.budget && !force {
        return Err(Error::BudgetExceeded {
            needed,
            budget: opts.budget,
        });
    }
    let catalog: Vec<(u64, FamilyId)> = catalog_at(m, with_s_check)
        .into_iter()
        .filter_map(|f| f.exponent_of(m).ok().map(|x| (x.leader, f)))
        .collect();
    let mut run = *opts;
    run.certificate_w_max = run.certificate_w_max.min(4);
    if force {
        run.budget = u128::MAX;
    }
    let mut hits = Vec::new();
    for e in survey_candidates(m) {
        let spec = CodeSpec::new(ctx.clone(), e, with_s_check)?;
        let report = analyze(&spec, &run, driver)?;
        if !report.optimal {
            continue;
        }
        let mut families: Vec<String> = catalog
            .iter()
            .filter(|(leader, _)| *leader == e)
            .map(|(_, f)| f.tag())
            .collect();
        if with_s_check {
            for (r, tau) in congruence_witnesses(m, e) {
                families.push(FamilyId::D5OddCongruence { r, tau }.tag());
            }
        }
        hits.push(SurveyHit {
            e,
            report,
            families,
        });
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_examples() {
        assert_eq!(FamilyId::D5OddList(1).exponent_of(5).unwrap().e, 182);
        assert_eq!(FamilyId::D5NonApn(3).exponent_of(7).unwrap().e, 112);
        assert_eq!(FamilyId::D5OddList(2).exponent_of(3).unwrap().e, 10);
        assert_eq!(FamilyId::D5OddList(3).exponent_of(3).unwrap().e, 8);
        assert_eq!(FamilyId::D5OddList(4).exponent_of(5).unwrap().e, 134);
        assert_eq!(FamilyId::OP160.exponent_of(5).unwrap().e, 160);
        assert_eq!(FamilyId::AMinusR(5).exponent_of(5).unwrap().e, 116);
        assert_eq!(FamilyId::AMinusR(2).exponent_of(6).unwrap().e, 362);
        assert_eq!(FamilyId::BPlusR(7).exponent_of(5).unwrap().e, 128);
        assert_eq!(FamilyId::BPlusR(10).exponent_of(6).unwrap().e, 374);
        let c = FamilyId::CTimesR(5).exponent_of(5).unwrap();
        assert_eq!((c.e, c.equivalent), (158, Some(232)));
        assert_eq!(coset(3, 5, 232).leader(), c.leader);
        assert_eq!(FamilyId::D5EvenPN(2).exponent_of(4).unwrap().e, 42);
        assert_eq!(FamilyId::D5EvenPN(10).exponent_of(6).unwrap().e, 374);
    }

    #[test]
    fn applicability() {
        match FamilyId::OP160.exponent_of(6) {
            Err(Error::NotApplicable { reason, .. }) => assert_eq!(reason, "m must be odd"),
            other => panic!("{other:?}"),
        }
        assert!(FamilyId::OP160.exponent_of(9).is_err());
        assert!(FamilyId::D5EvenPN(4).exponent_of(4).is_err());
        assert!(FamilyId::D5OddList(5).exponent_of(5).is_err());
    }

    #[test]
    fn congruence_examples() {
        assert!(solve_congruence_e(7, 20, 3).unwrap().contains(&112));
        assert!(solve_congruence_e(5, 4, 0).unwrap().contains(&182));
        assert_eq!(
            solve_congruence_e(5, 3, 0).unwrap_err(),
            Error::GcdNotTwo { r: 3, gcd: 1 }
        );
        assert_eq!(even_solutions(&solve_congruence_e(5, 4, 0).unwrap()), [182]);
    }

    #[test]
    fn tags_round_trip() {
        for tag in [
            "OP160",
            "A-r2",
            "B-r10",
            "C-r5",
            "E16",
            "D5-even-PN-r2",
            "D5-e2",
            "D5-odd-r20-tau3",
            "D5-odd-list-1",
            "D5-nonAPN-t3",
        ] {
            assert_eq!(tag.parse::<FamilyId>().unwrap().tag(), tag);
        }
        for bad in ["A-r3", "E17", "D5-odd-list-6", "X", "C-r", "D5-odd-r4"] {
            assert!(bad.parse::<FamilyId>().is_err(), "{bad}");
        }
    }

    #[test]
    fn list_variants_have_witnesses() {
        for (v, m) in [(1, 5), (2, 3), (3, 3), (4, 5), (2, 5), (5, 3), (5, 7)] {
            let (r, tau) = FamilyId::D5OddList(v).congruence_pair(m).unwrap().unwrap();
            assert!(tau.is_some(), "variant {v} m {m} r {r}");
        }
    }
}

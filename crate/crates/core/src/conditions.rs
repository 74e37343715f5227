//! Conditions for `C(1,e)` to reach minimum distance four.
//!
//! With `e` not in the coset of 1 and `|C_e| = m`, the code `C(1,e)` has
//! parameters `[3^m-1, 3^m-1-2m, 4]` iff
//!
//! * C1: `e` is even,
//! * C2: `(x+1)^e + x^e + 1 = 0` has the single solution `x = 1`,
//! * C3: `(x+1)^e - x^e - 1 = 0` has the single solution `x = 0`.
//!
//! Two routes decide C2/C3. [`check_conditions`] sweeps the whole field.
//! The symbolic route rewrites each equation, per choice of quadratic
//! characters `(η(x), η(x+1))`, into a polynomial over GF(3) whose
//! factorization tells where its roots live. [`cross_validate`] checks that
//! the two routes produce identical solution sets.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::field::{FieldContext, FieldElement};
use crate::poly3::{factorize, F3Poly, Factorization, Trit};

/// Outcome of the exhaustive sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionVerdict {
    pub e: u64,
    pub m: u32,
    pub c1: bool,
    /// All roots of `(x+1)^e + x^e + 1`, ascending by representative.
    pub c2_solutions: Vec<FieldElement>,
    /// All roots of `(x+1)^e - x^e - 1`, ascending by representative.
    pub c3_solutions: Vec<FieldElement>,
}

impl ConditionVerdict {
    pub fn c2_count(&self) -> usize {
        self.c2_solutions.len()
    }

    pub fn c3_count(&self) -> usize {
        self.c3_solutions.len()
    }

    pub fn c2(&self) -> bool {
        self.c2_solutions == [FieldElement::ONE]
    }

    pub fn c3(&self) -> bool {
        self.c3_solutions == [FieldElement::ZERO]
    }

    pub fn all(&self) -> bool {
        self.c1 && self.c2() && self.c3()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    C2,
    C3,
}

impl Variant {
    /// Value of the original left-hand side at `x` for exponent `e`.
    fn evaluate(self, ctx: &FieldContext, e: u64, x: FieldElement) -> FieldElement {
        let a = ctx.pow_u(ctx.add(x, FieldElement::ONE), e);
        let b = ctx.pow_u(x, e);
        match self {
            Variant::C2 => ctx.add(ctx.add(a, b), FieldElement::ONE),
            Variant::C3 => ctx.sub(ctx.sub(a, b), FieldElement::ONE),
        }
    }
}

/// Exhaustive evaluation of C1, C2 and C3 over GF(3^m).
pub fn check_conditions(ctx: &FieldContext, e: u64) -> ConditionVerdict {
    let e = e % ctx.n() as u64;
    let mut c2 = Vec::new();
    let mut c3 = Vec::new();
    for x in ctx.elements() {
        let a = ctx.pow_u(ctx.add(x, FieldElement::ONE), e);
        let b = ctx.pow_u(x, e);
        let t = ctx.add(a, b);
        if ctx.add(t, FieldElement::ONE).is_zero() {
            c2.push(x);
        }
        let u = ctx.sub(a, b);
        if ctx.sub(u, FieldElement::ONE).is_zero() {
            c3.push(x);
        }
    }
    ConditionVerdict {
        e,
        m: ctx.m(),
        c1: e.is_multiple_of(2),
        c2_solutions: c2,
        c3_solutions: c3,
    }
}

/// Exponent shapes with a hand-derived reduction.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseFamily {
    /// `e = (3^m-1)/2 - r`.
    AMinusR,
    /// `e = (3^m-1)/2 + r`.
    BPlusR,
    /// `e = r (3^(m-1) - 1)`, so `3e = -2r`.
    CTwoR,
    /// `e = 2 (3^(m-1) - 1)`; the `CTwoR` shape at `r = 2`.
    OpenProblem,
    /// A fixed small `e` (the `r` slot carries `e`).
    SmallE,
}

impl CaseFamily {
    /// The exponent this family denotes at degree `m`, reduced mod `3^m - 1`.
    pub fn exponent(self, r: u64, m: u32) -> u64 {
        let n = 3u64.pow(m) - 1;
        let s = n / 2;
        let base = 3u64.pow(m - 1) - 1;
        match self {
            CaseFamily::AMinusR => (s + n - r % n) % n,
            CaseFamily::BPlusR => (s + r) % n,
            CaseFamily::CTwoR => ((r % n) as u128 * base as u128 % n as u128) as u64,
            CaseFamily::OpenProblem => 2 * base % n,
            CaseFamily::SmallE => r % n,
        }
    }

    fn has_sign_split(self) -> bool {
        matches!(self, CaseFamily::AMinusR | CaseFamily::BPlusR)
    }
}

/// One reduced equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseSplit {
    pub family: CaseFamily,
    pub r: u64,
    /// `(η(x), η(x+1))` for the families that split on characters.
    pub signs: Option<(i8, i8)>,
    pub variant: Variant,
    pub polynomial: F3Poly,
    /// Factor divided out of the raw equation (small-e only); its roots are
    /// still solutions.
    pub removed: F3Poly,
}

/// The four character assignments, in the order (1,1), (1,-1), (-1,1), (-1,-1).
pub const SIGN_PAIRS: [(i8, i8); 4] = [(1, 1), (1, -1), (-1, 1), (-1, -1)];

fn signed(v: i8) -> Trit {
    Trit::new(v as i64)
}

fn x_plus_one() -> F3Poly {
    F3Poly::from_ints(&[1, 1])
}

/// Reduced polynomial for one family, sign pair and condition.
///
/// `signs` is ignored for the families without a character split.
pub fn case_polynomial(
    family: CaseFamily,
    r: u64,
    signs: (i8, i8),
    variant: Variant,
) -> Result<F3Poly, Error> {
    Ok(case_split(family, r, Some(signs), variant)?.polynomial)
}

pub fn case_split(
    family: CaseFamily,
    r: u64,
    signs: Option<(i8, i8)>,
    variant: Variant,
) -> Result<CaseSplit, Error> {
    if r == 0 {
        return Err(Error::UnsupportedFamilyVariant("r must be positive"));
    }
    let x = F3Poly::x();
    let x1 = x_plus_one();
    let mut removed = F3Poly::one();
    let (signs, polynomial) = if family.has_sign_split() {
        let (sx, sx1) = signs.ok_or(Error::UnsupportedFamilyVariant("sign pair required"))?;
        if !matches!(sx, 1 | -1) || !matches!(sx1, 1 | -1) {
            return Err(Error::UnsupportedFamilyVariant("signs must be +1 or -1"));
        }
        let xr = x.pow(r);
        let x1r = x1.pow(r);
        let p = match (family, variant) {
            (CaseFamily::AMinusR, Variant::C2) => {
                &(&(&x1r * &xr) + &xr.scale(signed(sx1))) + &x1r.scale(signed(sx))
            }
            (CaseFamily::AMinusR, Variant::C3) => {
                &(&(&x1r * &xr) + &x1r.scale(signed(sx))) - &xr.scale(signed(sx1))
            }
            (_, Variant::C2) => &(&x1r.scale(signed(sx1)) + &xr.scale(signed(sx))) + &F3Poly::one(),
            (_, Variant::C3) => &(&x1r.scale(signed(sx1)) - &xr.scale(signed(sx))) - &F3Poly::one(),
        };
        (Some((sx, sx1)), p)
    } else {
        let p = match family {
            CaseFamily::CTwoR | CaseFamily::OpenProblem => {
                let r2 = if family == CaseFamily::OpenProblem {
                    4
                } else {
                    2 * r
                };
                let a = x1.pow(r2);
                let b = x.pow(r2);
                let ab = &a * &b;
                match variant {
                    Variant::C2 => &(&ab + &a) + &b,
                    Variant::C3 => &(&ab + &a) - &b,
                }
            }
            _ => {
                let a = x1.pow(r);
                let b = x.pow(r);
                let raw = match variant {
                    Variant::C2 => &(&a + &b) + &F3Poly::one(),
                    Variant::C3 => &(&a - &b) - &F3Poly::one(),
                };
                let root_factor = match variant {
                    Variant::C2 => F3Poly::from_ints(&[-1, 1]),
                    Variant::C3 => F3Poly::x(),
                };
                let mut q = raw;
                while !q.is_zero() && root_factor.divides(&q) {
                    q = q.div_exact(&root_factor)?;
                    removed = &removed * &root_factor;
                }
                q
            }
        };
        (None, p)
    };
    Ok(CaseSplit {
        family,
        r,
        signs,
        variant,
        polynomial,
        removed,
    })
}

/// All reduced equations of one family for one condition.
pub fn case_splits(family: CaseFamily, r: u64, variant: Variant) -> Result<Vec<CaseSplit>, Error> {
    if family.has_sign_split() {
        SIGN_PAIRS
            .iter()
            .map(|&sp| case_split(family, r, Some(sp), variant))
            .collect()
    } else {
        Ok(vec![case_split(family, r, None, variant)?])
    }
}

/// Factor-level summary of one reduced equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseReport {
    pub case: CaseSplit,
    /// `None` when the reduced polynomial vanishes identically, i.e. every
    /// `x` with the assumed characters solves the equation.
    pub factorization: Option<Factorization>,
    /// Distinct degrees of the irreducible factors.
    pub factor_degrees: Vec<usize>,
    /// Roots found in a field must still be checked against `signs` there.
    pub needs_sign_check: bool,
}

impl CaseReport {
    /// Whether some irreducible factor has a root in GF(3^m). Roots of the
    /// removed factor are not counted here.
    pub fn has_roots_in(&self, m: u32) -> bool {
        match &self.factorization {
            None => true,
            Some(_) => self
                .factor_degrees
                .iter()
                .any(|&d| (m as usize).is_multiple_of(d)),
        }
    }
}

/// Factorizes every reduced equation of a family, C2 cases first.
pub fn symbolic_condition_analysis(family: CaseFamily, r: u64) -> Result<Vec<CaseReport>, Error> {
    let mut out = Vec::new();
    for variant in [Variant::C2, Variant::C3] {
        for case in case_splits(family, r, variant)? {
            let factorization = if case.polynomial.is_zero() {
                None
            } else {
                Some(factorize(&case.polynomial)?)
            };
            let mut factor_degrees: Vec<usize> = factorization
                .as_ref()
                .map(|f| f.degrees())
                .unwrap_or_default();
            factor_degrees.sort_unstable();
            factor_degrees.dedup();
            out.push(CaseReport {
                needs_sign_check: case.signs.is_some(),
                case,
                factorization,
                factor_degrees,
            });
        }
    }
    Ok(out)
}

/// Elements of the subfield GF(3^d), zero first.
fn subfield(ctx: &FieldContext, d: u32) -> Vec<FieldElement> {
    let n = ctx.n() as u64;
    let order = 3u64.pow(d) - 1;
    let step = n / order;
    let mut out = vec![FieldElement::ZERO];
    out.extend((0..order).map(|k| ctx.alpha_pow(k * step)));
    out
}

fn roots_in_field(
    ctx: &FieldContext,
    p: &F3Poly,
    out: &mut Vec<FieldElement>,
) -> Result<(), Error> {
    if p.is_zero() {
        out.extend(ctx.elements());
        return Ok(());
    }
    if p.degree() == Some(0) {
        return Ok(());
    }
    let m = ctx.m();
    for (factor, _) in factorize(p)?.factors {
        let d = factor.degree().unwrap_or(0) as u32;
        if d == 0 || !m.is_multiple_of(d) {
            continue;
        }
        out.extend(
            subfield(ctx, d)
                .into_iter()
                .filter(|&x| ctx.eval_poly(&factor, x).is_zero()),
        );
    }
    Ok(())
}

/// C2 and C3 solution sets assembled from the reduced equations.
///
/// `x = 0` and `x = -1` are excluded by every reduction and are evaluated
/// directly on the original equation. Other candidates are roots of the
/// case polynomials located in GF(3^m) via subfields, kept only if their
/// characters match the assumed signs.
pub fn predicted_solutions(
    ctx: &FieldContext,
    family: CaseFamily,
    r: u64,
) -> Result<(Vec<FieldElement>, Vec<FieldElement>), Error> {
    let n = ctx.n() as u64;
    let e = family.exponent(r, ctx.m());
    if e == 0 {
        return Err(Error::DegenerateExponent { e, n });
    }
    let boundary = [FieldElement::ZERO, FieldElement::MINUS_ONE];
    let mut result = [Vec::new(), Vec::new()];
    for (slot, variant) in [Variant::C2, Variant::C3].into_iter().enumerate() {
        let sols = &mut result[slot];
        sols.extend(
            boundary
                .iter()
                .copied()
                .filter(|&x| variant.evaluate(ctx, e, x).is_zero()),
        );
        for case in case_splits(family, r, variant)? {
            let mut cands = Vec::new();
            roots_in_field(ctx, &case.polynomial, &mut cands)?;
            let mut extra = Vec::new();
            roots_in_field(ctx, &case.removed, &mut extra)?;
            let sign_ok = |x: FieldElement| match case.signs {
                None => true,
                Some((sx, sx1)) => {
                    ctx.quadratic_character(x) == sx
                        && ctx.quadratic_character(ctx.add(x, FieldElement::ONE)) == sx1
                }
            };
            sols.extend(
                cands
                    .into_iter()
                    .filter(|x| !boundary.contains(x) && sign_ok(*x))
                    .chain(extra.into_iter().filter(|x| !boundary.contains(x))),
            );
        }
        sols.sort_unstable();
        sols.dedup();
    }
    let [c2, c3] = result;
    Ok((c2, c3))
}

/// Whether the exhaustive sweep and the symbolic route agree on C1, C2 and
/// C3 for the family's exponent at this field.
pub fn cross_validate(ctx: &FieldContext, family: CaseFamily, r: u64) -> Result<bool, Error> {
    let (c2, c3) = predicted_solutions(ctx, family, r)?;
    let e = family.exponent(r, ctx.m());
    let verdict = check_conditions(ctx, e);
    Ok(verdict.c2_solutions == c2
        && verdict.c3_solutions == c3
        && verdict.c1 == e.is_multiple_of(2))
}

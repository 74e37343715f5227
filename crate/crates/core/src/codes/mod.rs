//! The cyclic codes `C(1,e)` and `C(1,e,s)` of length `n = 3^m - 1`.
//!
//! `C(1,e)` has generator `m_α(x) m_{α^e}(x)`; `C(1,e,s)` multiplies in
//! `x + 1 = m_{α^s}(x)` as well, where `s = n / 2`.

mod bounds;
mod search;

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

pub use bounds::{ball_volume, rgss_max_d, rgss_upper_bound, sphere_packing_max_d};
pub use search::{
    partition_count, verify_certificate, weight_cost, weight_w_codeword_exists, Certificate,
    SearchDriver, SearchKernel, Sequential, MAX_WEIGHT,
};

use crate::cosets::coset;
use crate::error::Error;
use crate::field::{FieldContext, FieldElement};
use crate::poly3::{F3Poly, Trit};

/// Default cap on search cells per weight.
pub const DEFAULT_BUDGET: u128 = 250_000_000;

/// Weight-5 searches run by default only up to this length.
pub const W5_MAX_N: u64 = 242;

/// Which code to build.
#[derive(Clone, Debug)]
pub struct CodeSpec {
    ctx: Arc<FieldContext>,
    e: u64,
    with_s_check: bool,
    forced: bool,
}

impl CodeSpec {
    /// `C(1,e)` or `C(1,e,s)`. Fails if `e` lies in the coset of 1.
    pub fn new(ctx: Arc<FieldContext>, e: u64, with_s_check: bool) -> Result<CodeSpec, Error> {
        let e = e % ctx.n() as u64;
        if coset(3, ctx.m(), 1).contains(e) {
            return Err(Error::CosetCollision { e });
        }
        Ok(CodeSpec {
            ctx,
            e,
            with_s_check,
            forced: false,
        })
    }

    /// Like [`CodeSpec::new`] but accepts any `e`; the generator becomes the
    /// least common multiple of the minimal polynomials involved.
    pub fn forced(ctx: Arc<FieldContext>, e: u64, with_s_check: bool) -> CodeSpec {
        let e = e % ctx.n() as u64;
        CodeSpec {
            ctx,
            e,
            with_s_check,
            forced: true,
        }
    }

    pub fn field(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn field_arc(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn m(&self) -> u32 {
        self.ctx.m()
    }

    pub fn n(&self) -> u64 {
        self.ctx.n() as u64
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn with_s_check(&self) -> bool {
        self.with_s_check
    }

    pub fn is_forced(&self) -> bool {
        self.forced
    }

    /// True when `e` is in the coset of 1 or `|C_e| != m`, in which case the
    /// usual dimension formula does not apply.
    pub fn outside_hypotheses(&self) -> bool {
        let m = self.m();
        coset(3, m, 1).contains(self.e) || coset(3, m, self.e).len() != m as usize
    }

    /// Exponents `j` with `c(α^j) = 0` for every codeword `c`: `1`, `e`,
    /// and `s` for the subcode.
    pub fn zero_exponents(&self) -> Vec<u64> {
        let mut z = vec![1, self.e];
        if self.with_s_check {
            z.push(self.ctx.s() as u64);
        }
        z
    }

    /// `C(1,e)` or `C(1,e,s)` with the numbers filled in.
    pub fn label(&self) -> String {
        let mut out = String::new();
        if self.with_s_check {
            let _ = write!(out, "C(1,{},{})", self.e, self.ctx.s());
        } else {
            let _ = write!(out, "C(1,{})", self.e);
        }
        out
    }
}

/// Minimal polynomial of `α^i` over GF(3), built as the product of
/// `x - α^j` over the cyclotomic coset of `i`.
pub fn minimal_polynomial(ctx: &FieldContext, i: u64) -> Result<F3Poly, Error> {
    let c = coset(3, ctx.m(), i % ctx.n() as u64);
    // Ascending coefficients over GF(3^m).
    let mut acc = vec![FieldElement::ONE];
    for &j in c.members() {
        let root = ctx.alpha_pow(j);
        let mut next = vec![FieldElement::ZERO; acc.len() + 1];
        for (k, &a) in acc.iter().enumerate() {
            next[k + 1] = ctx.add(next[k + 1], a);
            next[k] = ctx.sub(next[k], ctx.mul(root, a));
        }
        acc = next;
    }
    let coeffs = acc
        .into_iter()
        .map(|a| a.as_trit())
        .collect::<Option<Vec<Trit>>>()
        .ok_or(Error::Internal("minimal polynomial left the base field"))?;
    Ok(F3Poly::new(coeffs))
}

/// Generator polynomial of the code. For a forced spec with overlapping
/// cosets each distinct minimal polynomial appears once.
pub fn generator_polynomial(spec: &CodeSpec) -> Result<F3Poly, Error> {
    let ctx = spec.field();
    let m = ctx.m();
    if !spec.forced && coset(3, m, 1).contains(spec.e) {
        return Err(Error::CosetCollision { e: spec.e });
    }
    let mut leaders: Vec<u64> = spec
        .zero_exponents()
        .into_iter()
        .map(|j| coset(3, m, j).leader())
        .collect();
    if spec.forced {
        leaders.sort_unstable();
        leaders.dedup();
    }
    let mut g = F3Poly::one();
    for j in leaders {
        g = &g * &minimal_polynomial(ctx, j)?;
    }
    Ok(g)
}

/// What happened to the search at one weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A word of this weight exists.
    Found(Certificate),
    /// Exhausted without finding a word.
    Absent,
    /// Not run: cost above budget.
    OverBudget,
    /// Not run: weight 5 on a long code without `force_w5`.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSearch {
    pub w: usize,
    pub cost: u128,
    pub outcome: SearchOutcome,
}

/// Which bound produced `d_upper` before any search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundSummary {
    pub sphere_packing: u64,
    pub rgss: u64,
    /// `min(sphere_packing, rgss)`.
    pub applied: u64,
}

impl BoundSummary {
    pub fn name(&self) -> &'static str {
        if self.rgss < self.sphere_packing {
            "rgss"
        } else {
            "sphere-packing"
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeReport {
    pub label: String,
    pub m: u32,
    pub e: u64,
    pub with_s_check: bool,
    pub modulus: F3Poly,
    pub n: u64,
    pub k: u64,
    pub generator: F3Poly,
    pub d_lower: u64,
    pub d_upper: u64,
    pub d_exact: Option<u64>,
    pub bound: BoundSummary,
    /// `d_exact` equals the bound-derived maximum for `(n, k)`.
    pub optimal: bool,
    pub certificates: Vec<Certificate>,
    pub searches: Vec<WeightSearch>,
    pub outside_hypotheses: bool,
}

impl CodeReport {
    /// `[n, k, d]`, or `[n, k]` when `d` is undetermined.
    pub fn parameters(&self) -> String {
        let mut out = String::new();
        match self.d_exact {
            Some(d) => {
                let _ = write!(out, "[{}, {}, {}]", self.n, self.k, d);
            }
            None => {
                let _ = write!(out, "[{}, {}]", self.n, self.k);
            }
        }
        out
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub w_max: usize,
    pub budget: u128,
    /// After `d` is pinned by bounds, look for a word of that weight.
    pub certificate: bool,
    /// Heaviest weight the certificate search runs at.
    pub certificate_w_max: usize,
    pub force_w5: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> AnalyzeOptions {
        AnalyzeOptions {
            w_max: MAX_WEIGHT,
            budget: DEFAULT_BUDGET,
            certificate: true,
            certificate_w_max: MAX_WEIGHT,
            force_w5: false,
        }
    }
}

impl AnalyzeOptions {
    fn runnable(&self, n: u64, w: usize) -> Option<SearchOutcome> {
        if w == 5 && n > W5_MAX_N && !self.force_w5 {
            Some(SearchOutcome::Skipped)
        } else if weight_cost(n, w) > self.budget {
            Some(SearchOutcome::OverBudget)
        } else {
            None
        }
    }
}

/// Bound-derived maximum distance for an `[n, k]` ternary code.
pub fn distance_bound(n: u64, k: u64) -> BoundSummary {
    let sp = sphere_packing_max_d(n, k);
    let rg = rgss_max_d(n, k, sp);
    BoundSummary {
        sphere_packing: sp,
        rgss: rg,
        applied: sp.min(rg),
    }
}

/// Determines `n`, `k` and as much of `d` as bounds and searches allow.
pub fn analyze(
    spec: &CodeSpec,
    opts: &AnalyzeOptions,
    driver: &dyn SearchDriver,
) -> Result<CodeReport, Error> {
    let generator = generator_polynomial(spec)?;
    let n = spec.n();
    let deg = generator.degree().unwrap_or(0) as u64;
    let k = n - deg;
    let bound = distance_bound(n, k);
    let mut d_lower = 1;
    let mut d_upper = bound.applied;
    let mut d_exact = None;
    let mut searches = Vec::new();
    let mut certificates = Vec::new();

    let top = opts.w_max.min(MAX_WEIGHT) as u64;
    for w in 1..bound.applied.min(top + 1) {
        let w = w as usize;
        let cost = weight_cost(n, w);
        if let Some(outcome) = opts.runnable(n, w) {
            searches.push(WeightSearch { w, cost, outcome });
            break;
        }
        match weight_w_codeword_exists(spec, w, driver)? {
            Some(cert) => {
                d_lower = w as u64;
                d_upper = w as u64;
                d_exact = Some(w as u64);
                certificates.push(cert.clone());
                searches.push(WeightSearch {
                    w,
                    cost,
                    outcome: SearchOutcome::Found(cert),
                });
                break;
            }
            None => {
                d_lower = w as u64 + 1;
                searches.push(WeightSearch {
                    w,
                    cost,
                    outcome: SearchOutcome::Absent,
                });
            }
        }
    }
    if d_exact.is_none() && d_lower == d_upper {
        d_exact = Some(d_upper);
        let w = d_upper as usize;
        if opts.certificate && (1..=opts.certificate_w_max.min(MAX_WEIGHT)).contains(&w) {
            let cost = weight_cost(n, w);
            match opts.runnable(n, w) {
                Some(outcome) => searches.push(WeightSearch { w, cost, outcome }),
                None => match weight_w_codeword_exists(spec, w, driver)? {
                    Some(cert) => {
                        certificates.push(cert.clone());
                        searches.push(WeightSearch {
                            w,
                            cost,
                            outcome: SearchOutcome::Found(cert),
                        });
                    }
                    None => return Err(Error::Internal("no codeword at the bound distance")),
                },
            }
        }
    }
    for cert in &certificates {
        if !generator.divides(&cert.to_polynomial()) {
            return Err(Error::Internal(
                "certificate is not a multiple of the generator",
            ));
        }
    }
    Ok(CodeReport {
        label: spec.label(),
        m: spec.m(),
        e: spec.e(),
        with_s_check: spec.with_s_check(),
        modulus: spec.field().modulus().clone(),
        n,
        k,
        generator,
        d_lower,
        d_upper,
        optimal: d_exact == Some(bound.applied),
        d_exact,
        bound,
        certificates,
        searches,
        outside_hypotheses: spec.outside_hypotheses(),
    })
}

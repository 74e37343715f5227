//! Differential spectra of power maps `x -> x^r` over GF(3^m).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use num_integer::Integer;

use crate::field::{FieldContext, FieldElement};

/// Counts of `|{x : (x+a)^r - x^r = b}|` over all pairs with `a != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentialSpectrum {
    pub exponent: u64,
    pub m: u32,
    /// Largest solution count over all `(a, b)`.
    pub max_count: u32,
    /// Solution count -> number of `(a, b)` pairs with that count.
    pub histogram: BTreeMap<u32, u64>,
}

impl DifferentialSpectrum {
    pub fn is_pn(&self) -> bool {
        self.max_count == 1
    }

    pub fn is_apn(&self) -> bool {
        self.max_count == 2
    }

    /// Sum of count times frequency. Equals `3^m (3^m - 1)` for a full sweep.
    pub fn mass(&self) -> u64 {
        self.histogram.iter().map(|(&c, &f)| c as u64 * f).sum()
    }

    /// Combines spectra computed over disjoint ranges of `a`.
    pub fn merge(&mut self, other: &DifferentialSpectrum) {
        for (&c, &f) in &other.histogram {
            *self.histogram.entry(c).or_insert(0) += f;
        }
        self.max_count = self.max_count.max(other.max_count);
    }
}

/// Spectrum restricted to the nonzero `a` with representatives in `a_reps`.
pub fn differential_spectrum_partial(
    ctx: &FieldContext,
    r: u64,
    a_reps: Range<u32>,
) -> DifferentialSpectrum {
    let q = ctx.size();
    let fx: Vec<FieldElement> = ctx.elements().map(|x| ctx.pow_u(x, r)).collect();
    let mut counts = vec![0u32; q as usize];
    let mut histogram = BTreeMap::new();
    let mut max_count = 0;
    for a_rep in a_reps.start.max(1)..a_reps.end.min(q) {
        let a = FieldElement::from_rep_unchecked(a_rep);
        counts.iter_mut().for_each(|c| *c = 0);
        for x in ctx.elements() {
            let b = ctx.sub(fx[ctx.add(x, a).rep() as usize], fx[x.rep() as usize]);
            counts[b.rep() as usize] += 1;
        }
        for &c in &counts {
            *histogram.entry(c).or_insert(0u64) += 1;
            max_count = max_count.max(c);
        }
    }
    DifferentialSpectrum {
        exponent: r,
        m: ctx.m(),
        max_count,
        histogram,
    }
}

/// Exhaustive differential spectrum of `x^r`.
pub fn differential_spectrum(ctx: &FieldContext, r: u64) -> DifferentialSpectrum {
    differential_spectrum_partial(ctx, r, 1..ctx.size())
}

pub fn is_pn(ctx: &FieldContext, r: u64) -> bool {
    differential_spectrum(ctx, r).is_pn()
}

pub fn is_apn(ctx: &FieldContext, r: u64) -> bool {
    differential_spectrum(ctx, r).is_apn()
}

/// Planar monomial families recognized from the exponent alone.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PnFamily {
    /// `x^2`.
    Square,
    /// `x^(3^h+1)` with `m / gcd(m, h)` odd.
    KasamiType { h: u32 },
    /// `x^((3^h+1)/2)` with `gcd(m, h) = 1` and `h` odd.
    CoulterMatthews { h: u32 },
}

/// Matches `r` modulo `3^m - 1` against the known planar monomials, trying
/// `h = 1..=2m`.
pub fn known_pn_family(m: u32, r: u64) -> Option<PnFamily> {
    let n = 3u64.pow(m) - 1;
    let r = r % n;
    if r == 2 {
        return Some(PnFamily::Square);
    }
    for h in 1..=2 * m {
        let k = 3u64.pow(h) + 1;
        if k % n == r && (m / m.gcd(&h)) % 2 == 1 {
            return Some(PnFamily::KasamiType { h });
        }
    }
    for h in (1..=2 * m).step_by(2) {
        let k = 3u64.pow(h).div_ceil(2);
        if k % n == r && m.gcd(&h) == 1 {
            return Some(PnFamily::CoulterMatthews { h });
        }
    }
    None
}

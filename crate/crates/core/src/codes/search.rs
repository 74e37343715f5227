//! Normalized search for low-weight codewords.
//!
//! A weight-`w` codeword is a choice of distinct nonzero `x_1..x_w` and
//! signs `c_i` with `sum c_i x_i^j = 0` for every zero exponent `j`. The
//! code is cyclic, so one may take `x_1 = 1`, and negating the word gives
//! `c_1 = 1`. The positions `x_2 < ... < x_(w-1)` are enumerated, `x_w` is
//! solved from the exponent-1 equation, and the remaining equations are
//! checked. Work is split by the index of `x_2` so that a [`SearchDriver`]
//! can spread it over threads.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::field::{planes_add, planes_neg, FieldContext, FieldElement};
use crate::poly3::{F3Poly, Trit};

use super::CodeSpec;

/// Largest weight the search supports.
pub const MAX_WEIGHT: usize = 5;

/// A codeword given by its support: coordinate `positions[i]` carries
/// `coeffs[i]`. Coordinate `j` corresponds to the element `α^j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub positions: Vec<u32>,
    pub coeffs: Vec<Trit>,
}

impl Certificate {
    pub fn weight(&self) -> usize {
        self.positions.len()
    }

    /// The codeword as a polynomial `sum c_i x^(p_i)`.
    pub fn to_polynomial(&self) -> F3Poly {
        let top = self.positions.iter().copied().max().unwrap_or(0) as usize;
        let mut coeffs = vec![Trit::ZERO; top + 1];
        for (&p, &c) in self.positions.iter().zip(&self.coeffs) {
            coeffs[p as usize] = coeffs[p as usize] + c;
        }
        F3Poly::new(coeffs)
    }
}

/// Runs independent search partitions and reports the hit from the lowest
/// partition index, so results do not depend on scheduling.
pub trait SearchDriver: Sync {
    fn first_hit(
        &self,
        parts: usize,
        task: &(dyn Fn(usize) -> Option<Certificate> + Sync),
    ) -> Option<Certificate>;
}

/// Runs partitions in index order on the calling thread.
#[derive(Copy, Clone, Debug, Default)]
pub struct Sequential;

impl SearchDriver for Sequential {
    fn first_hit(
        &self,
        parts: usize,
        task: &(dyn Fn(usize) -> Option<Certificate> + Sync),
    ) -> Option<Certificate> {
        (0..parts).find_map(task)
    }
}

/// Upper bound on cells visited for weight `w`: `n^(w-2) 2^(w-1)`.
pub fn weight_cost(n: u64, w: usize) -> u128 {
    let free = w.saturating_sub(2) as u32;
    (n as u128).pow(free) << w.saturating_sub(1)
}

/// Number of partitions the search for weight `w` is split into.
pub fn partition_count(n: u64, w: usize) -> usize {
    if w >= 3 {
        (n - 1) as usize
    } else {
        1
    }
}

/// Precomputed bit-plane tables for one code.
pub struct SearchKernel<'a> {
    ctx: &'a FieldContext,
    n: u32,
    s: u32,
    with_s: bool,
    /// Planes of `α^i`.
    p1: Vec<u32>,
    /// Planes of `α^(i e)`.
    pe: Vec<u32>,
}

const SIGNS: [i8; 2] = [1, -1];

#[inline]
fn signed_planes(c: i8, p: u32) -> u32 {
    if c == 1 {
        p
    } else {
        planes_neg(p)
    }
}

impl<'a> SearchKernel<'a> {
    pub fn new(spec: &'a CodeSpec) -> SearchKernel<'a> {
        let ctx = spec.field();
        let n = ctx.n();
        let e = spec.e();
        let p1 = (0..n as u64)
            .map(|i| ctx.planes_of(ctx.alpha_pow(i)))
            .collect();
        let pe = (0..n as u64)
            .map(|i| ctx.planes_of(ctx.alpha_pow(i * e)))
            .collect();
        SearchKernel {
            ctx,
            n,
            s: ctx.s(),
            with_s: spec.with_s_check(),
            p1,
            pe,
        }
    }

    /// Searches one partition for a weight-`w` word.
    pub fn search_partition(&self, w: usize, part: usize) -> Option<Certificate> {
        let one = self.p1[0];
        let mut chosen = [(0u32, 0i8); MAX_WEIGHT];
        match w {
            0 | 1 => None,
            2 => self.leaf(w, one, one, 1, &chosen[..0]),
            _ => {
                let i2 = part as u32 + 1;
                for &c2 in &SIGNS {
                    chosen[0] = (i2, c2);
                    let s1 = planes_add(one, signed_planes(c2, self.p1[i2 as usize]));
                    let se = planes_add(one, signed_planes(c2, self.pe[i2 as usize]));
                    let eta = 1 + c2 as i32 * eta_of(i2);
                    if let Some(c) = self.descend(w, 1, i2 + 1, s1, se, eta, &mut chosen) {
                        return Some(c);
                    }
                }
                None
            }
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn descend(
        &self,
        w: usize,
        depth: usize,
        start: u32,
        s1: u32,
        se: u32,
        eta: i32,
        chosen: &mut [(u32, i8); MAX_WEIGHT],
    ) -> Option<Certificate> {
        if depth == w - 2 {
            return self.leaf(w, s1, se, eta, &chosen[..depth]);
        }
        for i in start..self.n {
            for &c in &SIGNS {
                chosen[depth] = (i, c);
                let s1n = planes_add(s1, signed_planes(c, self.p1[i as usize]));
                let sen = planes_add(se, signed_planes(c, self.pe[i as usize]));
                let etan = eta + c as i32 * eta_of(i);
                if let Some(cert) = self.descend(w, depth + 1, i + 1, s1n, sen, etan, chosen) {
                    return Some(cert);
                }
            }
        }
        None
    }

    /// Solves `c_w x_w = -s1` for both signs and checks the rest.
    #[inline]
    fn leaf(
        &self,
        w: usize,
        s1: u32,
        se: u32,
        eta: i32,
        chosen: &[(u32, i8)],
    ) -> Option<Certificate> {
        if s1 == 0 {
            return None;
        }
        let l = self.ctx.log(self.ctx.element_of_planes(s1))?;
        for &cw in &SIGNS {
            // cw = 1 gives x_w = -s1; cw = -1 gives x_w = s1.
            let lw = if cw == 1 { (l + self.s) % self.n } else { l };
            let target = self.pe[lw as usize];
            let ok = if cw == 1 {
                se == planes_neg(target)
            } else {
                se == target
            };
            if !ok || lw == 0 || chosen.iter().any(|&(i, _)| i == lw) {
                continue;
            }
            if self.with_s && (eta + cw as i32 * eta_of(lw)).rem_euclid(3) != 0 {
                continue;
            }
            let mut positions = Vec::with_capacity(w);
            let mut coeffs = Vec::with_capacity(w);
            positions.push(0);
            coeffs.push(Trit::ONE);
            for &(i, c) in chosen {
                positions.push(i);
                coeffs.push(Trit::new(c as i64));
            }
            positions.push(lw);
            coeffs.push(Trit::new(cw as i64));
            return Some(Certificate { positions, coeffs });
        }
        None
    }
}

#[inline]
fn eta_of(log: u32) -> i32 {
    if log.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Checks a certificate against the zero set `{1, e}` (and `s`) using plain
/// field powers, independently of the search tables.
pub fn verify_certificate(spec: &CodeSpec, cert: &Certificate) -> bool {
    let ctx = spec.field();
    let n = ctx.n();
    if cert.positions.is_empty() || cert.positions.len() != cert.coeffs.len() {
        return false;
    }
    let mut seen = cert.positions.clone();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != cert.positions.len() || seen.iter().any(|&p| p >= n) {
        return false;
    }
    if cert.coeffs.iter().any(|c| c.is_zero()) {
        return false;
    }
    let alpha = ctx.alpha();
    spec.zero_exponents().iter().all(|&j| {
        let mut acc = FieldElement::ZERO;
        for (&p, &c) in cert.positions.iter().zip(&cert.coeffs) {
            let x = match ctx.pow(alpha, p as i64) {
                Ok(x) => x,
                Err(_) => return false,
            };
            let xj = match ctx.pow(x, j as i64) {
                Ok(v) => v,
                Err(_) => return false,
            };
            acc = ctx.add(acc, ctx.scale(c, xj));
        }
        acc.is_zero()
    })
}

/// Looks for a codeword of weight exactly `w`. Any certificate returned has
/// been re-verified.
pub fn weight_w_codeword_exists(
    spec: &CodeSpec,
    w: usize,
    driver: &dyn SearchDriver,
) -> Result<Option<Certificate>, Error> {
    if w == 0 || w > MAX_WEIGHT {
        return Err(Error::UnsupportedWeight { w });
    }
    let kernel = SearchKernel::new(spec);
    let parts = partition_count(spec.field().n() as u64, w);
    let found = driver.first_hit(parts, &|part| kernel.search_partition(w, part));
    match found {
        Some(cert) if !verify_certificate(spec, &cert) => {
            Err(Error::Internal("search produced an invalid certificate"))
        }
        other => Ok(other),
    }
}

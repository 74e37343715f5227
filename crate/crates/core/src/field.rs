//! Arithmetic in GF(3^m) relative to a primitive defining polynomial.
//!
//! An element is stored as the base-3 integer whose digits are its
//! coefficients in the polynomial basis `1, α, ..., α^(m-1)`, so `0` is the
//! zero element, `1` is one and `2` is minus one. Multiplication and powers
//! go through full exp/log tables. Addition converts to a two-bit-plane
//! form (one mask for digits equal to 1, one for digits equal to 2) and adds
//! all digits at once with bitwise operations.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::poly3::{is_irreducible, F3Poly, Trit};

/// Largest supported extension degree. Keeps the tables at or below
/// 3^13 entries each.
pub const MAX_DEGREE: u32 = 13;

const PLANE_SHIFT: u32 = 16;
const LO_MASK: u32 = (1 << PLANE_SHIFT) - 1;
const NO_LOG: u32 = u32::MAX;

/// Element of GF(3^m); meaningful only together with its [`FieldContext`].
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);
    pub const MINUS_ONE: FieldElement = FieldElement(2);

    /// Packed base-3 coefficient vector.
    pub const fn rep(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub(crate) const fn from_rep_unchecked(rep: u32) -> FieldElement {
        FieldElement(rep)
    }

    /// The element as a GF(3) scalar, when it lies in the prime field.
    pub fn as_trit(self) -> Option<Trit> {
        (self.0 < 3).then(|| Trit::new(self.0 as i64))
    }
}

impl From<Trit> for FieldElement {
    fn from(t: Trit) -> FieldElement {
        FieldElement(t.value() as u32)
    }
}

/// Packed bit-plane form: digits equal to 1 in the low half, digits equal
/// to 2 in the high half.
#[inline]
pub(crate) fn planes_add(a: u32, b: u32) -> u32 {
    let (a1, a2) = (a & LO_MASK, a >> PLANE_SHIFT);
    let (b1, b2) = (b & LO_MASK, b >> PLANE_SHIFT);
    let t = (a1 | b2) ^ (a2 | b1);
    let c1 = (a2 | b2) ^ t;
    let c2 = (a1 | b1) ^ t;
    c1 | (c2 << PLANE_SHIFT)
}

#[inline]
pub(crate) fn planes_neg(a: u32) -> u32 {
    (a >> PLANE_SHIFT) | ((a & LO_MASK) << PLANE_SHIFT)
}

/// GF(3^m) together with its tables. Immutable once built.
#[derive(Clone, Debug)]
pub struct FieldContext {
    m: u32,
    modulus: F3Poly,
    size: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    planes: Vec<u32>,
    plane_value: Vec<u32>,
}

/// The defining polynomial used unless one is supplied. Degrees 3 to 7 are
/// pinned, since generator polynomials depend on the choice of α; other
/// degrees take the first primitive polynomial in base-3 order of the lower
/// coefficients.
pub fn default_modulus(m: u32) -> Result<F3Poly, Error> {
    let known = match m {
        3 => Some("x^3+2x+1"),
        4 => Some("x^4+2x^3+2"),
        5 => Some("x^5+2x+1"),
        6 => Some("x^6+2x^4+x^2+2x+2"),
        7 => Some("x^7+2x^2+1"),
        _ => None,
    };
    if let Some(s) = known {
        return s.parse();
    }
    if !(2..=MAX_DEGREE).contains(&m) {
        return Err(Error::UnsupportedDegree { m, max: MAX_DEGREE });
    }
    let top = 3u64.pow(m);
    for t in 1..top {
        let mut coeffs = Vec::with_capacity(m as usize + 1);
        let mut v = t;
        for _ in 0..m {
            coeffs.push(Trit::new((v % 3) as i64));
            v /= 3;
        }
        coeffs.push(Trit::ONE);
        let cand = F3Poly::new(coeffs);
        if cand.coeff(0).is_zero() || !is_irreducible(&cand)? {
            continue;
        }
        if primitive_root_order(m, &cand) == top as u32 - 1 {
            return Ok(cand);
        }
    }
    Err(Error::Internal("no primitive polynomial found"))
}

/// Multiplicative order of `x` modulo an irreducible `modulus` of degree m.
fn primitive_root_order(m: u32, modulus: &F3Poly) -> u32 {
    let (planes, plane_value) = plane_tables(m);
    let size = 3u32.pow(m);
    let step = AlphaStep::new(m, modulus, &planes);
    let mut cur = 1u32;
    for k in 1..size {
        cur = step.apply(cur, &planes, &plane_value);
        if cur == 1 {
            return k;
        }
    }
    0
}

fn plane_tables(m: u32) -> (Vec<u32>, Vec<u32>) {
    let size = 3usize.pow(m);
    let mut planes = vec![0u32; size];
    for (rep, slot) in planes.iter_mut().enumerate() {
        let mut v = rep;
        let mut lo = 0u32;
        let mut hi = 0u32;
        for i in 0..m {
            match v % 3 {
                1 => lo |= 1 << i,
                2 => hi |= 1 << i,
                _ => {}
            }
            v /= 3;
        }
        *slot = lo | (hi << PLANE_SHIFT);
    }
    let mut plane_value = vec![0u32; 1usize << m];
    for (mask, slot) in plane_value.iter_mut().enumerate() {
        *slot = (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| 3u32.pow(i))
            .sum();
    }
    (planes, plane_value)
}

/// Multiplication by α on packed representatives.
struct AlphaStep {
    size: u32,
    /// Planes of `-d * (modulus - x^m)` for d = 1, 2.
    fold: [u32; 3],
}

impl AlphaStep {
    fn new(m: u32, modulus: &F3Poly, planes: &[u32]) -> AlphaStep {
        let size = 3u32.pow(m);
        let mut fold = [0u32; 3];
        for d in 1..3u32 {
            let rep: u32 = (0..m as usize)
                .map(|i| {
                    let c = -(modulus.coeff(i) * Trit::new(d as i64));
                    c.value() as u32 * 3u32.pow(i as u32)
                })
                .sum();
            fold[d as usize] = planes[rep as usize];
        }
        AlphaStep { size, fold }
    }

    fn apply(&self, rep: u32, planes: &[u32], plane_value: &[u32]) -> u32 {
        let shifted = rep * 3;
        let top = shifted / self.size;
        let low = shifted % self.size;
        if top == 0 {
            return low;
        }
        from_planes(
            planes_add(planes[low as usize], self.fold[top as usize]),
            plane_value,
        )
    }
}

#[inline]
fn from_planes(p: u32, plane_value: &[u32]) -> u32 {
    plane_value[(p & LO_MASK) as usize] + 2 * plane_value[(p >> PLANE_SHIFT) as usize]
}

impl FieldContext {
    /// Builds GF(3^m) = GF(3)[x]/(modulus) and checks that `x` generates
    /// the multiplicative group.
    pub fn new(m: u32, modulus: F3Poly) -> Result<FieldContext, Error> {
        if !(2..=MAX_DEGREE).contains(&m) {
            return Err(Error::UnsupportedDegree { m, max: MAX_DEGREE });
        }
        if modulus.degree() != Some(m as usize) {
            return Err(Error::DegreeMismatch {
                expected: m,
                found: modulus.degree(),
            });
        }
        if !modulus.is_monic() {
            return Err(Error::NotMonic);
        }
        if !is_irreducible(&modulus)? {
            return Err(Error::NotIrreducible);
        }
        let size = 3u32.pow(m);
        let n = size - 1;
        let (planes, plane_value) = plane_tables(m);
        let step = AlphaStep::new(m, &modulus, &planes);
        let mut exp = vec![0u32; n as usize];
        let mut log = vec![NO_LOG; size as usize];
        let mut cur = 1u32;
        for k in 0..n {
            if k > 0 && cur == 1 {
                return Err(Error::NotPrimitive {
                    order: k,
                    expected: n,
                });
            }
            exp[k as usize] = cur;
            log[cur as usize] = k;
            cur = step.apply(cur, &planes, &plane_value);
        }
        if cur != 1 {
            return Err(Error::Internal("α^n != 1 for an irreducible modulus"));
        }
        Ok(FieldContext {
            m,
            modulus,
            size,
            exp,
            log,
            planes,
            plane_value,
        })
    }

    /// GF(3^m) with [`default_modulus`].
    pub fn with_default_modulus(m: u32) -> Result<FieldContext, Error> {
        FieldContext::new(m, default_modulus(m)?)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> &F3Poly {
        &self.modulus
    }

    /// Number of field elements, 3^m.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// Order of the multiplicative group, 3^m - 1.
    pub fn n(&self) -> u32 {
        self.size - 1
    }

    /// (3^m - 1) / 2.
    pub fn s(&self) -> u32 {
        (self.size - 1) / 2
    }

    pub fn element(&self, rep: u32) -> Result<FieldElement, Error> {
        if rep < self.size {
            Ok(FieldElement(rep))
        } else {
            Err(Error::InvalidArgument("representative out of range"))
        }
    }

    /// All elements, zero first, in representative order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.size).map(FieldElement)
    }

    pub fn alpha(&self) -> FieldElement {
        self.alpha_pow(1)
    }

    /// α^k for any `k`.
    pub fn alpha_pow(&self, k: u64) -> FieldElement {
        FieldElement(self.exp[(k % self.n() as u64) as usize])
    }

    /// Discrete logarithm to base α; `None` for zero.
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        match self.log[a.0 as usize] {
            NO_LOG => None,
            l => Some(l),
        }
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = planes_add(self.planes[a.0 as usize], self.planes[b.0 as usize]);
        FieldElement(from_planes(p, &self.plane_value))
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = planes_neg(self.planes[a.0 as usize]);
        FieldElement(from_planes(p, &self.plane_value))
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn scale(&self, c: Trit, a: FieldElement) -> FieldElement {
        match c.value() {
            0 => FieldElement::ZERO,
            1 => a,
            _ => self.neg(a),
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let n = self.n();
        let k = self.log[a.0 as usize] + self.log[b.0 as usize];
        FieldElement(self.exp[(if k >= n { k - n } else { k }) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        let l = self.log(a)?;
        Some(FieldElement(self.exp[((self.n() - l) % self.n()) as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Option<FieldElement> {
        Some(self.mul(a, self.inv(b)?))
    }

    /// `a^k` for a nonnegative exponent, with `0^0 = 1`.
    #[inline]
    pub fn pow_u(&self, a: FieldElement, k: u64) -> FieldElement {
        match self.log(a) {
            None if k == 0 => FieldElement::ONE,
            None => FieldElement::ZERO,
            Some(l) => {
                let n = self.n() as u64;
                FieldElement(self.exp[((l as u64 * (k % n)) % n) as usize])
            }
        }
    }

    /// `a^k` for any integer exponent.
    pub fn pow(&self, a: FieldElement, k: i64) -> Result<FieldElement, Error> {
        match self.log(a) {
            None if k > 0 => Ok(FieldElement::ZERO),
            None if k == 0 => Ok(FieldElement::ONE),
            None => Err(Error::ZeroToNonpositivePower),
            Some(l) => {
                let n = self.n() as i64;
                let e = (l as i64 * k.rem_euclid(n)).rem_euclid(n);
                Ok(FieldElement(self.exp[e as usize]))
            }
        }
    }

    /// η(a): 0 for zero, +1 for nonzero squares, -1 for nonsquares.
    #[inline]
    pub fn quadratic_character(&self, a: FieldElement) -> i8 {
        match self.log(a) {
            None => 0,
            Some(l) if l % 2 == 0 => 1,
            Some(_) => -1,
        }
    }

    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow_u(a, 3)
    }

    /// Reduces a GF(3) polynomial modulo the defining polynomial, i.e.
    /// evaluates it at α.
    pub fn from_poly(&self, p: &F3Poly) -> FieldElement {
        self.eval_poly(p, self.alpha())
    }

    /// Polynomial-basis coordinates of `a`.
    pub fn to_poly(&self, a: FieldElement) -> F3Poly {
        let mut v = a.0;
        let mut coeffs = Vec::with_capacity(self.m as usize);
        for _ in 0..self.m {
            coeffs.push(Trit::new((v % 3) as i64));
            v /= 3;
        }
        F3Poly::new(coeffs)
    }

    /// Horner evaluation of a GF(3) polynomial at a field element.
    pub fn eval_poly(&self, p: &F3Poly, x: FieldElement) -> FieldElement {
        p.coeffs().iter().rev().fold(FieldElement::ZERO, |acc, &c| {
            self.add(self.mul(acc, x), FieldElement::from(c))
        })
    }

    #[inline]
    pub(crate) fn planes_of(&self, a: FieldElement) -> u32 {
        self.planes[a.0 as usize]
    }

    #[inline]
    pub(crate) fn element_of_planes(&self, p: u32) -> FieldElement {
        FieldElement(from_planes(p, &self.plane_value))
    }
}

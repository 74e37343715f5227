//! Dense univariate polynomials over GF(3).
//!
//! Coefficients are stored in ascending order with no trailing zeros, so the
//! zero polynomial is the empty vector. Everything here is exact; the degrees
//! involved (at most a few thousand for `x^n - 1`) make schoolbook arithmetic
//! sufficient.
//!
//! Factorization runs the usual three stages: squarefree decomposition
//! (with a cube-root step when the derivative vanishes), distinct-degree
//! splitting by Frobenius probes, and equal-degree splitting with a
//! deterministic sweep of candidate polynomials instead of random ones.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use crate::error::Error;

/// An element of GF(3). `2` doubles as `-1`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct Trit(u8);

impl Trit {
    pub const ZERO: Trit = Trit(0);
    pub const ONE: Trit = Trit(1);
    pub const TWO: Trit = Trit(2);
    /// Same element as [`Trit::TWO`].
    pub const MINUS_ONE: Trit = Trit(2);

    /// Reduces any integer into GF(3).
    pub const fn new(v: i64) -> Trit {
        Trit(v.rem_euclid(3) as u8)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// `+1`, `-1` or `0` as a signed integer.
    pub const fn signed(self) -> i8 {
        match self.0 {
            0 => 0,
            1 => 1,
            _ => -1,
        }
    }

    /// Multiplicative inverse; every nonzero trit is its own inverse.
    pub fn inv(self) -> Option<Trit> {
        if self.0 == 0 {
            None
        } else {
            Some(self)
        }
    }
}

impl Add for Trit {
    type Output = Trit;
    fn add(self, rhs: Trit) -> Trit {
        Trit((self.0 + rhs.0) % 3)
    }
}

impl Sub for Trit {
    type Output = Trit;
    fn sub(self, rhs: Trit) -> Trit {
        Trit((self.0 + 3 - rhs.0) % 3)
    }
}

impl Mul for Trit {
    type Output = Trit;
    fn mul(self, rhs: Trit) -> Trit {
        Trit((self.0 * rhs.0) % 3)
    }
}

impl Neg for Trit {
    type Output = Trit;
    fn neg(self) -> Trit {
        Trit((3 - self.0) % 3)
    }
}

impl fmt::Display for Trit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A polynomial over GF(3), ascending coefficients, normalized.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct F3Poly {
    coeffs: Vec<Trit>,
}

impl F3Poly {
    pub fn zero() -> F3Poly {
        F3Poly { coeffs: Vec::new() }
    }

    pub fn one() -> F3Poly {
        F3Poly::constant(Trit::ONE)
    }

    /// The polynomial `x`.
    pub fn x() -> F3Poly {
        F3Poly::monomial(1, Trit::ONE)
    }

    pub fn constant(c: Trit) -> F3Poly {
        F3Poly::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(k: usize, c: Trit) -> F3Poly {
        let mut coeffs = vec![Trit::ZERO; k + 1];
        coeffs[k] = c;
        F3Poly::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<Trit>) -> F3Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        F3Poly { coeffs }
    }

    /// Builds from ascending integer coefficients, reducing each mod 3.
    pub fn from_ints(coeffs: &[i64]) -> F3Poly {
        F3Poly::new(coeffs.iter().map(|&c| Trit::new(c)).collect())
    }

    /// `x^k - 1`.
    pub fn x_pow_minus_one(k: usize) -> F3Poly {
        let mut p = F3Poly::monomial(k, Trit::ONE);
        p = &p - &F3Poly::one();
        p
    }

    pub fn coeffs(&self) -> &[Trit] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Trit {
        self.coeffs.get(i).copied().unwrap_or(Trit::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Trit::ONE
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Trit {
        self.coeffs.last().copied().unwrap_or(Trit::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Trit::ONE
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, c: Trit) -> F3Poly {
        F3Poly::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Splits off the leading coefficient: `self = unit * monic`.
    /// The zero polynomial maps to `(0, 0)`.
    pub fn monic_parts(&self) -> (Trit, F3Poly) {
        let lead = self.leading();
        match lead.inv() {
            Some(inv) => (lead, self.scale(inv)),
            None => (Trit::ZERO, F3Poly::zero()),
        }
    }

    pub fn monic(&self) -> F3Poly {
        self.monic_parts().1
    }

    pub fn eval(&self, x: Trit) -> Trit {
        self.coeffs
            .iter()
            .rev()
            .fold(Trit::ZERO, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> F3Poly {
        F3Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * Trit::new(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, mut k: u64) -> F3Poly {
        let mut base = self.clone();
        let mut acc = F3Poly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Long division: `self = divisor * q + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &F3Poly) -> Result<(F3Poly, F3Poly), Error> {
        let dd = divisor.degree().ok_or(Error::DivisionByZeroPoly)?;
        let lead_inv = divisor
            .leading()
            .inv()
            .expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((F3Poly::zero(), self.clone()));
        }
        let mut quot = vec![Trit::ZERO; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i] * lead_inv;
            if c.is_zero() {
                continue;
            }
            quot[i - dd] = c;
            for (j, &g) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = rem[i - dd + j] - c * g;
            }
        }
        rem.truncate(dd);
        Ok((F3Poly::new(quot), F3Poly::new(rem)))
    }

    pub fn rem(&self, divisor: &F3Poly) -> Result<F3Poly, Error> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &F3Poly) -> Result<F3Poly, Error> {
        let (q, r) = self.divmod(divisor)?;
        if !r.is_zero() {
            return Err(Error::NotDivisible);
        }
        Ok(q)
    }

    pub fn divides(&self, other: &F3Poly) -> bool {
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// `(self * other) mod modulus`.
    pub fn mul_mod(&self, other: &F3Poly, modulus: &F3Poly) -> F3Poly {
        (self * other).rem(modulus).expect("nonzero modulus")
    }

    /// `self^k mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, mut k: u64, modulus: &F3Poly) -> Result<F3Poly, Error> {
        let mut base = self.rem(modulus)?;
        let mut acc = F3Poly::one().rem(modulus)?;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_mod(&base, modulus);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_mod(&base, modulus);
            }
        }
        Ok(acc)
    }

    /// `self^3 mod modulus`, the Frobenius map on `GF(3)[x]/(modulus)`.
    pub fn cube_mod(&self, modulus: &F3Poly) -> F3Poly {
        let sq = self.mul_mod(self, modulus);
        sq.mul_mod(self, modulus)
    }

    /// For `self` in `GF(3)[x^3]`, returns `h` with `h^3 = self`.
    pub fn cube_root(&self) -> Option<F3Poly> {
        if self
            .coeffs
            .iter()
            .enumerate()
            .any(|(i, c)| i % 3 != 0 && !c.is_zero())
        {
            return None;
        }
        Some(F3Poly::new(
            self.coeffs.iter().step_by(3).copied().collect(),
        ))
    }

    /// Sort key used for canonical factor ordering: degree, then ascending
    /// coefficient vector.
    fn canonical_cmp(&self, other: &F3Poly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }

    /// Ascending comma-separated form, `c0,c1,...,cd`.
    pub fn to_csv(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push((b'0' + c.value()) as char);
        }
        s
    }
}

impl fmt::Display for F3Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (k, c.value()) {
                (0, v) => write!(f, "{v}")?,
                (1, 1) => f.write_str("x")?,
                (1, v) => write!(f, "{v}x")?,
                (k, 1) => write!(f, "x^{k}")?,
                (k, v) => write!(f, "{v}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for F3Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F3Poly({self})")
    }
}

impl FromStr for F3Poly {
    type Err = Error;

    /// Accepts descending term sums such as `x^10+2x^9-x+1`, `x^{10}` or
    /// `2*x^3`, and the ascending CSV form `c0,c1,...,cd`. Like terms are
    /// summed and integer coefficients reduced mod 3.
    fn from_str(s: &str) -> Result<F3Poly, Error> {
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '\u{2212}' { '-' } else { c })
            .collect();
        if cleaned.is_empty() {
            return Err(Error::parse(s, "empty input"));
        }
        if cleaned.contains(',') {
            return parse_csv(&cleaned).ok_or_else(|| Error::parse(s, "bad CSV coefficient"));
        }
        parse_terms(&cleaned).map_err(|why| Error::parse(s, why))
    }
}

fn parse_csv(s: &str) -> Option<F3Poly> {
    let mut coeffs = Vec::new();
    for part in s.split(',') {
        let v: i64 = part.parse().ok()?;
        coeffs.push(Trit::new(v));
    }
    Some(F3Poly::new(coeffs))
}

fn parse_terms(s: &str) -> Result<F3Poly, &'static str> {
    let bytes = s.as_bytes();
    let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = 1i64;
        let mut saw_sign = false;
        while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            saw_sign = true;
            i += 1;
        }
        if saw_sign && i >= bytes.len() {
            return Err("dangling sign");
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coef: Option<i64> = if i > start {
            Some(
                s[start..i]
                    .parse()
                    .map_err(|_| "coefficient out of range")?,
            )
        } else {
            None
        };
        if i < bytes.len() && bytes[i] == b'*' {
            if coef.is_none() {
                return Err("'*' without coefficient");
            }
            i += 1;
        }
        let mut power = 0usize;
        let has_x = i < bytes.len() && bytes[i] == b'x';
        if has_x {
            i += 1;
            power = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let braced = i < bytes.len() && bytes[i] == b'{';
                if braced {
                    i += 1;
                }
                let ps = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if ps == i {
                    return Err("missing exponent");
                }
                power = s[ps..i].parse().map_err(|_| "exponent out of range")?;
                if braced {
                    if i >= bytes.len() || bytes[i] != b'}' {
                        return Err("unclosed brace");
                    }
                    i += 1;
                }
            }
        }
        if coef.is_none() && !has_x {
            return Err("empty term");
        }
        if i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
            return Err("unexpected character");
        }
        *acc.entry(power).or_insert(0) += sign * coef.unwrap_or(1);
    }
    let top = acc.keys().next_back().copied().unwrap_or(0);
    let mut coeffs = vec![Trit::ZERO; top + 1];
    for (k, v) in acc {
        coeffs[k] = Trit::new(v);
    }
    Ok(F3Poly::new(coeffs))
}

impl Add for &F3Poly {
    type Output = F3Poly;
    fn add(self, rhs: &F3Poly) -> F3Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        F3Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &F3Poly {
    type Output = F3Poly;
    fn sub(self, rhs: &F3Poly) -> F3Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        F3Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &F3Poly {
    type Output = F3Poly;
    fn neg(self) -> F3Poly {
        F3Poly::new(self.coeffs.iter().map(|&c| -c).collect())
    }
}

impl Mul for &F3Poly {
    type Output = F3Poly;
    fn mul(self, rhs: &F3Poly) -> F3Poly {
        if self.is_zero() || rhs.is_zero() {
            return F3Poly::zero();
        }
        let mut out = vec![0u8; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a.0 * b.0) % 3;
            }
        }
        F3Poly::new(out.into_iter().map(Trit).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for F3Poly {
            type Output = F3Poly;
            fn $method(self, rhs: F3Poly) -> F3Poly {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// Monic greatest common divisor; `gcd(f, 0) = monic(f)`.
pub fn gcd(f: &F3Poly, g: &F3Poly) -> Result<F3Poly, Error> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::BothZero);
    }
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let r = a.rem(&b)?;
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// `gcd(f, x^(3^i) - x)`, computed from `x^(3^i) mod f` by `i` cubings.
///
/// The result is the product of the distinct monic irreducible factors of
/// `f` whose degree divides `i`.
pub fn frobenius_probe(f: &F3Poly, i: u32) -> Result<F3Poly, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPoly);
    }
    if i == 0 {
        return Err(Error::InvalidArgument("probe degree must be at least 1"));
    }
    if f.degree() == Some(0) {
        return Ok(F3Poly::one());
    }
    let mut h = F3Poly::x().rem(f)?;
    for _ in 0..i {
        h = h.cube_mod(f);
    }
    gcd(f, &(&h - &F3Poly::x()))
}

/// Irreducibility by Frobenius probes: a polynomial of degree `d` is
/// irreducible iff it has no factor of degree at most `d/2`.
pub fn is_irreducible(f: &F3Poly) -> Result<bool, Error> {
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::ConstantPoly),
    };
    for i in 1..=(d / 2) as u32 {
        if !frobenius_probe(f, i)?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `f` has a root in GF(3^m): some irreducible factor of `f` has
/// degree dividing `m`, i.e. `gcd(f, x^(3^m) - x) != 1`.
pub fn has_root_in_gf3m(f: &F3Poly, m: u32) -> Result<bool, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPoly);
    }
    if m == 0 {
        return Err(Error::InvalidArgument(
            "extension degree must be at least 1",
        ));
    }
    Ok(!frobenius_probe(f, m)?.is_one())
}

/// A polynomial written as a unit times powers of monic irreducibles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Trit,
    /// Sorted by degree, then ascending coefficient vector.
    pub factors: Vec<(F3Poly, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self) -> F3Poly {
        self.factors
            .iter()
            .fold(F3Poly::constant(self.unit), |acc, (p, k)| {
                &acc * &p.pow(*k as u64)
            })
    }

    /// Factor degrees with multiplicity, in canonical order.
    pub fn degrees(&self) -> Vec<usize> {
        self.factors
            .iter()
            .flat_map(|(p, k)| core::iter::repeat_n(p.degree().unwrap_or(0), *k as usize))
            .collect()
    }

    pub fn contains(&self, factor: &F3Poly) -> Option<u32> {
        self.factors
            .iter()
            .find(|(p, _)| p == factor)
            .map(|(_, k)| *k)
    }
}

impl fmt::Display for Factorization {
    /// `(x+2)^2 (x^3+x^2+x+2)`, prefixed by `2 ` when the unit is 2.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "{}", self.unit);
        }
        let mut first = true;
        if self.unit == Trit::TWO {
            f.write_str("2")?;
            first = false;
        }
        for (p, k) in &self.factors {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "({p})")?;
            if *k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

/// Canonical factorization over GF(3).
pub fn factorize(f: &F3Poly) -> Result<Factorization, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPoly);
    }
    let (unit, monic) = f.monic_parts();
    let mut found: Vec<(F3Poly, u32)> = Vec::new();
    for (part, mult) in squarefree_decomposition(&monic)? {
        for (block, d) in distinct_degree(&part)? {
            for irr in equal_degree(&block, d)? {
                match found.iter_mut().find(|(p, _)| *p == irr) {
                    Some(entry) => entry.1 += mult,
                    None => found.push((irr, mult)),
                }
            }
        }
    }
    found.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    Ok(Factorization {
        unit,
        factors: found,
    })
}

/// Yun-style squarefree decomposition adapted to characteristic 3.
/// Returns squarefree monic parts with their multiplicities.
fn squarefree_decomposition(f: &F3Poly) -> Result<Vec<(F3Poly, u32)>, Error> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    let fp = f.derivative();
    if fp.is_zero() {
        let root = f
            .cube_root()
            .ok_or(Error::Internal("vanishing derivative outside GF(3)[x^3]"))?;
        for (g, k) in squarefree_decomposition(&root)? {
            out.push((g, k * 3));
        }
        return Ok(out);
    }
    let mut c = gcd(f, &fp)?;
    let mut w = f.div_exact(&c)?;
    let mut i = 1u32;
    while !w.is_one() {
        let y = gcd(&w, &c)?;
        let fac = w.div_exact(&y)?;
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.div_exact(&w)?;
        i += 1;
    }
    if !c.is_one() {
        let root = c
            .cube_root()
            .ok_or(Error::Internal("residual part is not a cube"))?;
        for (g, k) in squarefree_decomposition(&root)? {
            out.push((g, k * 3));
        }
    }
    Ok(out)
}

/// Splits a squarefree monic polynomial into blocks whose irreducible
/// factors all share one degree.
fn distinct_degree(f: &F3Poly) -> Result<Vec<(F3Poly, usize)>, Error> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = F3Poly::x().rem(&rest)?;
    let mut d = 1usize;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.cube_mod(&rest);
        let g = gcd(&rest, &(&h - &F3Poly::x()))?;
        if !g.is_one() {
            rest = rest.div_exact(&g)?;
            h = h.rem(&rest)?;
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree() {
        if deg > 0 {
            out.push((rest, deg));
        }
    }
    Ok(out)
}

/// Candidate polynomial number `t` (base-3 digits as ascending coefficients).
fn sweep_candidate(mut t: u64) -> F3Poly {
    let mut coeffs = Vec::new();
    while t > 0 {
        coeffs.push(Trit((t % 3) as u8));
        t /= 3;
    }
    F3Poly::new(coeffs)
}

/// Equal-degree splitting of a squarefree monic `f` whose irreducible
/// factors all have degree `d`.
fn equal_degree(f: &F3Poly, d: usize) -> Result<Vec<F3Poly>, Error> {
    let deg = f.degree().unwrap_or(0);
    if deg == 0 {
        return Ok(Vec::new());
    }
    if deg == d {
        return Ok(vec![f.clone()]);
    }
    let one = F3Poly::one();
    // a^((3^d - 1)/2) = prod_{i<d} a^(3^i)
    for t in 3u64.. {
        let a = sweep_candidate(t);
        if a.degree().unwrap_or(0) >= deg {
            break;
        }
        let mut split = gcd(f, &a)?;
        if split.is_one() || split.degree() == Some(deg) {
            let mut pw = a.rem(f)?;
            let mut acc = F3Poly::one();
            for _ in 0..d {
                acc = acc.mul_mod(&pw, f);
                pw = pw.cube_mod(f);
            }
            split = gcd(f, &(&acc - &one))?;
        }
        let sd = split.degree().unwrap_or(0);
        if sd > 0 && sd < deg {
            let other = f.div_exact(&split)?;
            let mut out = equal_degree(&split, d)?;
            out.extend(equal_degree(&other, d)?);
            return Ok(out);
        }
    }
    Err(Error::Internal(
        "equal-degree sweep exhausted without a split",
    ))
}

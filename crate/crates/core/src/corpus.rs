//! Factorizations, gcds and expansions behind the distance-four families,
//! replayable against this crate's polynomial arithmetic.
//!
//! Polynomials are written as expressions accepted by [`eval_expression`],
//! with `-` for the coefficient 2 where that reads more naturally.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::poly3::{factorize, frobenius_probe, is_irreducible, F3Poly, Trit};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Claim {
    /// Both sides expand to the same polynomial.
    Identity {
        lhs: &'static str,
        rhs: &'static str,
    },
    /// `gcd(f, x^(3^probe) - x)` equals `expected` up to a unit.
    Gcd {
        f: &'static str,
        probe: u32,
        expected: &'static str,
    },
    /// `f` is a unit times the listed powers of irreducibles.
    Factors {
        f: &'static str,
        factors: &'static [(&'static str, u32)],
    },
    Irreducible {
        f: &'static str,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    /// Which exponent and condition the claim belongs to.
    pub context: &'static str,
    pub claim: Claim,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusResult {
    pub context: &'static str,
    pub statement: String,
    pub ok: bool,
    /// What was computed.
    pub detail: String,
}

const OP_C2: &str = "x^8+x^7+x^5+x^3+x+1";
const OP_C3: &str = "x^8+x^7+x^5+x^4+x^3+x+1";
const A5_11: &str = "x^10-x^9+x^8+x^7-x^6-x^4+x^3+x^2-x+1";
const A5_1M: &str = "x^10-x^9+x^8+x^7-x^6+x^5-x^4+x^3+x^2-x+1";
const B7_11: &str = "2x^7+x^6+2x^4+2x^3+x+2";
const B10_M1: &str = "x^9+x-1";
const C5_C2: &str = "x^20+x^19+x^11+x^9+x+1";
const C5_C3: &str = "x^20+x^19+x^11+x^10+x^9+x+1";
const E16_C2: &str = "x^12-x^9-x^8-x^7-x^5-x^4-x^3+1";
const E16_C3: &str = "x^14-x^12-x^11+x^9+x^8+x^6+x^5-x^3-x^2+1";
const E20_C2: &str = "x^18+x^16-x^15+x^13-x^12+x^10+x^8-x^6+x^5-x^3+x^2+1";
const E20_C3: &str = "x^18-x^17+x^10-x^9+x^8-x+1";
const INTRO: &str = "x^8+x^7-x^6+x^4-x^3+x^2-1";

const fn gcd(
    context: &'static str,
    f: &'static str,
    probe: u32,
    expected: &'static str,
) -> CorpusEntry {
    CorpusEntry {
        context,
        claim: Claim::Gcd { f, probe, expected },
    }
}

const fn ident(context: &'static str, lhs: &'static str, rhs: &'static str) -> CorpusEntry {
    CorpusEntry {
        context,
        claim: Claim::Identity { lhs, rhs },
    }
}

const fn factors(
    context: &'static str,
    f: &'static str,
    factors: &'static [(&'static str, u32)],
) -> CorpusEntry {
    CorpusEntry {
        context,
        claim: Claim::Factors { f, factors },
    }
}

const fn irreducible(context: &'static str, f: &'static str) -> CorpusEntry {
    CorpusEntry {
        context,
        claim: Claim::Irreducible { f },
    }
}

pub const CORPUS: &[CorpusEntry] = &[
    gcd("degree-pattern example", INTRO, 3, "1"),
    gcd("degree-pattern example", INTRO, 4, "x^2+x-1"),
    // e = 2(3^(m-1) - 1)
    ident("e=2(3^(m-1)-1), C2", "(x+1)^4x^4+(x+1)^4+x^4", OP_C2),
    gcd("e=2(3^(m-1)-1), C2", OP_C2, 1, "x-1"),
    gcd("e=2(3^(m-1)-1), C2", OP_C2, 2, "x-1"),
    gcd("e=2(3^(m-1)-1), C2", OP_C2, 3, "x^7-x^6-x^5+x^2+x-1"),
    factors(
        "e=2(3^(m-1)-1), C2",
        OP_C2,
        &[("x-1", 2), ("x^3+x^2+x+2", 1), ("x^3+2x^2+2x+2", 1)],
    ),
    ident("e=2(3^(m-1)-1), C3", "(x+1)^4x^4+(x+1)^4-x^4", OP_C3),
    gcd("e=2(3^(m-1)-1), C3", OP_C3, 1, "1"),
    gcd("e=2(3^(m-1)-1), C3", OP_C3, 2, "x^2+1"),
    gcd("e=2(3^(m-1)-1), C3", OP_C3, 3, "x^6+x^5-x^4-x^2+x+1"),
    factors(
        "e=2(3^(m-1)-1), C3",
        OP_C3,
        &[("x^2+1", 1), ("x^3+2x+2", 1), ("x^3+x^2+2", 1)],
    ),
    // e = s - 2, m = 2 mod 4
    ident("e=s-2, C2 (1,1)", "x^4-x^3-x+1", "(x-1)^4"),
    gcd("e=s-2, C2 (1,-1)", "x^4-x^3+x^2-x+1", 2, "1"),
    irreducible("e=s-2, C2 (1,-1)", "x^4-x^3+x^2-x+1"),
    irreducible("e=s-2, C2 (-1,1)", "x^4-x^3+x^2+x-1"),
    irreducible("e=s-2, C2 (-1,-1)", "x^4-x^3-x^2+x-1"),
    // e = s - 5, m odd
    gcd("e=s-5, C2 (1,1)", A5_11, 1, "1"),
    gcd("e=s-5, C2 (1,1)", A5_11, 2, "1"),
    gcd("e=s-5, C2 (1,1)", A5_11, 3, "1"),
    gcd("e=s-5, C2 (1,1)", A5_11, 4, "1"),
    gcd("e=s-5, C2 (1,1)", A5_11, 5, "1"),
    irreducible("e=s-5, C2 (1,1)", A5_11),
    gcd("e=s-5, C2 (1,-1)", A5_1M, 1, "x-1"),
    gcd("e=s-5, C2 (1,-1)", A5_1M, 2, "x^7-x^6+x^5-x^4+x^3-x^2+x-1"),
    gcd("e=s-5, C2 (1,-1)", A5_1M, 3, "x-1"),
    factors(
        "e=s-5, C2 (1,-1)",
        A5_1M,
        &[("x-1", 4), ("x^2+1", 1), ("x^2+x+2", 1), ("x^2+2x+2", 1)],
    ),
    irreducible(
        "e=s-5, C2 (-1,1)",
        "x^10-x^9+x^8+x^7-x^6+x^5+x^4-x^3-x^2+x-1",
    ),
    irreducible(
        "e=s-5, C2 (-1,-1)",
        "x^10-x^9+x^8+x^7-x^6-x^5+x^4-x^3-x^2+x-1",
    ),
    // e = s + 7, m odd
    gcd("e=s+7, C2 (1,1)", B7_11, 2, "(x+1)(x^2+1)"),
    factors(
        "e=s+7, C2 (1,1)",
        B7_11,
        &[("x+1", 1), ("x^2+1", 1), ("x^4+x^3+x^2+x+1", 1)],
    ),
    factors(
        "e=s+7, C2 (1,-1)",
        "2x^6+x^4+x^3+2x",
        &[("x", 1), ("x+1", 1), ("x-1", 4)],
    ),
    factors(
        "e=s+7, C2 (-1,1)",
        "x^6+2x^4+2x^3+x+2",
        &[("x^2+x+2", 1), ("x^4+2x^3+x^2+1", 1)],
    ),
    factors(
        "e=s+7, C2 (-1,-1)",
        "x^7+2x^6+x^4+x^3+2x",
        &[("x", 1), ("x^2+2x+2", 1), ("x^4+x^2+2x+1", 1)],
    ),
    // e = s + 10, m = 2 mod 4
    ident("e=s+10, C2 (1,1)", "2x^10+x^9+x+2", "2(x-1)^10"),
    gcd("e=s+10, C2 (1,-1)", "x^8+1", 1, "1"),
    gcd("e=s+10, C2 (1,-1)", "x^8+1", 2, "1"),
    gcd("e=s+10, C2 (1,-1)", "x^8+1", 3, "1"),
    factors(
        "e=s+10, C2 (1,-1)",
        "x^8+1",
        &[("x^4+x^2+2", 1), ("x^4+2x^2+2", 1)],
    ),
    gcd("e=s+10, C2 (-1,1)", B10_M1, 1, "x+1"),
    gcd("e=s+10, C2 (-1,1)", B10_M1, 2, "x+1"),
    gcd("e=s+10, C2 (-1,1)", B10_M1, 3, "x+1"),
    factors(
        "e=s+10, C2 (-1,1)",
        B10_M1,
        &[("x+1", 1), ("x^4+x^3+x^2+1", 1), ("x^4+x^3+2x^2+2x+2", 1)],
    ),
    factors(
        "e=s+10, C2 (-1,-1)",
        "x^10+2x^9+2x",
        &[
            ("x", 1),
            ("x+1", 1),
            ("x^4+x^2+x+1", 1),
            ("x^4+x^3+x^2+2x+2", 1),
        ],
    ),
    // e = 5(3^(m-1) - 1)
    ident("e=5(3^(m-1)-1), C2", "(x+1)^10x^10+(x+1)^10+x^10", C5_C2),
    gcd("e=5(3^(m-1)-1), C2", C5_C2, 1, "x-1"),
    gcd("e=5(3^(m-1)-1), C2", C5_C2, 3, "x^7-x^6-x^5+x^2+x-1"),
    gcd("e=5(3^(m-1)-1), C2", C5_C2, 5, "x-1"),
    factors(
        "e=5(3^(m-1)-1), C2",
        C5_C2,
        &[
            ("x-1", 2),
            ("x^3+x^2+x+2", 1),
            ("x^3+2x^2+2x+2", 1),
            ("x^6+x^5+2x^3+x^2+2x+1", 1),
            ("x^6+2x^5+x^4+2x^3+x+1", 1),
        ],
    ),
    gcd("e=5(3^(m-1)-1), C3", C5_C3, 1, "1"),
    gcd("e=5(3^(m-1)-1), C3", C5_C3, 2, "1"),
    gcd("e=5(3^(m-1)-1), C3", C5_C3, 3, "x^6+x^5-x^4-x^2+x+1"),
    gcd(
        "e=5(3^(m-1)-1), C3",
        C5_C3,
        4,
        "x^8-x^7+x^6+x^5+x^4+x^3+x^2-x+1",
    ),
    factors(
        "e=5(3^(m-1)-1), C3",
        C5_C3,
        &[
            ("x^3+2x+2", 1),
            ("x^3+x^2+2", 1),
            ("x^4+x^3+x^2+2x+2", 1),
            ("x^4+x^3+2x^2+2x+2", 1),
            ("x^6+x^5+x^4+x^3+x^2+x+1", 1),
        ],
    ),
    // e = 16
    ident(
        "e=16, C2",
        "(x+1)^16+x^16+1",
        "-(x-1)^4(x^12-x^9-x^8-x^7-x^5-x^4-x^3+1)",
    ),
    gcd("e=16, C2", E16_C2, 1, "1"),
    gcd("e=16, C2", E16_C2, 2, "x^6+x^4+x^2+1"),
    gcd("e=16, C2", E16_C2, 3, "x^6-x^4-x^3-x^2+1"),
    factors(
        "e=16, C2",
        E16_C2,
        &[
            ("x^2+1", 1),
            ("x^2+x+2", 1),
            ("x^2+2x+2", 1),
            ("x^3+x^2+x+2", 1),
            ("x^3+2x^2+2x+2", 1),
        ],
    ),
    ident(
        "e=16, C3",
        "(x+1)^16-x^16-1",
        "x(x^14-x^12-x^11+x^9+x^8+x^6+x^5-x^3-x^2+1)",
    ),
    gcd("e=16, C3", E16_C3, 1, "1"),
    gcd("e=16, C3", E16_C3, 2, "1"),
    gcd("e=16, C3", E16_C3, 3, "x^6+x^5-x^4-x^2+x+1"),
    factors(
        "e=16, C3",
        E16_C3,
        &[
            ("x^3+2x+2", 1),
            ("x^3+x^2+2", 1),
            ("x^8+2x^7+x^6+2x^4+x^2+2x+1", 1),
        ],
    ),
    // e = 20
    ident(
        "e=20, C2",
        "(x+1)^20+x^20+1",
        "2(x-1)^2(x^18+x^16-x^15+x^13-x^12+x^10+x^8-x^6+x^5-x^3+x^2+1)",
    ),
    gcd("e=20, C2", E20_C2, 2, "1"),
    gcd("e=20, C2", E20_C2, 4, "1"),
    gcd("e=20, C2", E20_C2, 6, E20_C2),
    ident(
        "e=20, C3",
        "(x+1)^20-x^20-1",
        "2x(x^18-x^17+x^10-x^9+x^8-x+1)",
    ),
    gcd("e=20, C3", E20_C3, 2, "x^2+1"),
    gcd("e=20, C3", E20_C3, 4, "x^6+x^5-x^4-x^3-x^2+x+1"),
    gcd("e=20, C3", E20_C3, 3, "1"),
    gcd("e=20, C3", E20_C3, 5, "1"),
];

/// Evaluates `+`, `-`, `*`, `^`, parentheses and juxtaposition over GF(3)[x],
/// e.g. `(x+1)^4x^4-2(x-1)^2`.
pub fn eval_expression(input: &str) -> Result<F3Poly, Error> {
    let chars: Vec<char> = input
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .collect();
    if chars.is_empty() {
        return Err(Error::parse(input, "empty input"));
    }
    let mut p = ExprParser { s: &chars, i: 0 };
    let v = p.expr().map_err(|why| Error::parse(input, why))?;
    if p.i != chars.len() {
        return Err(Error::parse(input, "unexpected character"));
    }
    Ok(v)
}

struct ExprParser<'a> {
    s: &'a [char],
    i: usize,
}

impl ExprParser<'_> {
    fn peek(&self) -> Option<char> {
        self.s.get(self.i).copied()
    }

    fn expr(&mut self) -> Result<F3Poly, &'static str> {
        let mut acc = F3Poly::zero();
        let mut sign = Trit::ONE;
        if let Some(c @ ('+' | '-')) = self.peek() {
            self.i += 1;
            if c == '-' {
                sign = Trit::TWO;
            }
        }
        loop {
            let t = self.term()?;
            acc = &acc + &t.scale(sign);
            match self.peek() {
                Some('+') => sign = Trit::ONE,
                Some('-') => sign = Trit::TWO,
                _ => return Ok(acc),
            }
            self.i += 1;
        }
    }

    fn term(&mut self) -> Result<F3Poly, &'static str> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.i += 1;
                }
                Some('(' | 'x' | '0'..='9') => {}
                _ => return Ok(acc),
            }
            acc = &acc * &self.power()?;
        }
    }

    fn power(&mut self) -> Result<F3Poly, &'static str> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.i += 1;
        let braced = self.peek() == Some('{');
        if braced {
            self.i += 1;
        }
        let k = self.integer().ok_or("missing exponent")?;
        if braced {
            if self.peek() != Some('}') {
                return Err("unclosed brace");
            }
            self.i += 1;
        }
        Ok(base.pow(k))
    }

    fn atom(&mut self) -> Result<F3Poly, &'static str> {
        match self.peek() {
            Some('x') => {
                self.i += 1;
                Ok(F3Poly::x())
            }
            Some('(') => {
                self.i += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err("unclosed parenthesis");
                }
                self.i += 1;
                Ok(v)
            }
            Some('0'..='9') => {
                let k = self.integer().ok_or("integer too large")?;
                Ok(F3Poly::constant(Trit::new((k % 3) as i64)))
            }
            _ => Err("expected x, a number or a parenthesis"),
        }
    }

    fn integer(&mut self) -> Option<u64> {
        let start = self.i;
        while matches!(self.peek(), Some('0'..='9')) {
            self.i += 1;
        }
        if start == self.i {
            return None;
        }
        self.s[start..self.i]
            .iter()
            .collect::<String>()
            .parse()
            .ok()
    }
}

fn poly(s: &str) -> Result<F3Poly, Error> {
    eval_expression(s)
}

/// Checks one claim.
pub fn check(entry: &CorpusEntry) -> Result<CorpusResult, Error> {
    let (statement, ok, detail) = match entry.claim {
        Claim::Identity { lhs, rhs } => {
            let (l, r) = (poly(lhs)?, poly(rhs)?);
            (format!("{lhs} = {rhs}"), l == r, format!("{l} vs {r}"))
        }
        Claim::Gcd { f, probe, expected } => {
            let got = frobenius_probe(&poly(f)?, probe)?;
            let want = poly(expected)?.monic();
            (
                format!("gcd({f}, x^(3^{probe})-x) = {expected}"),
                got == want,
                format!("{got}"),
            )
        }
        Claim::Factors { f, factors: list } => {
            let fp = poly(f)?;
            let mut product = F3Poly::one();
            let mut all_irreducible = true;
            let mut claimed = Vec::new();
            for &(p, k) in list {
                let q = poly(p)?.monic();
                all_irreducible &= is_irreducible(&q)?;
                product = &product * &q.pow(k as u64);
                claimed.push((q, k));
            }
            let fact = factorize(&fp)?;
            claimed.sort_by(|a, b| (a.0.degree(), a.0.coeffs()).cmp(&(b.0.degree(), b.0.coeffs())));
            let matches = fact.factors == claimed;
            (
                format!("{f} has irreducible factors {}", render(list)),
                all_irreducible && product == fp.monic() && matches,
                format!("{fact}"),
            )
        }
        Claim::Irreducible { f } => {
            let irr = is_irreducible(&poly(f)?)?;
            (
                format!("{f} is irreducible"),
                irr,
                if irr {
                    "irreducible".into()
                } else {
                    format!("{}", factorize(&poly(f)?)?)
                },
            )
        }
    };
    Ok(CorpusResult {
        context: entry.context,
        statement,
        ok,
        detail,
    })
}

fn render(list: &[(&str, u32)]) -> String {
    let mut out = String::new();
    for &(p, k) in list {
        out.push('(');
        out.push_str(p);
        out.push(')');
        if k > 1 {
            out.push_str(&format!("^{k}"));
        }
    }
    out
}

/// Checks every claim in [`CORPUS`].
pub fn replay() -> Result<Vec<CorpusResult>, Error> {
    CORPUS.iter().map(check).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expressions() {
        let p = |s: &str| s.parse::<F3Poly>().unwrap();
        assert_eq!(eval_expression("(x+1)^2").unwrap(), p("x^2+2x+1"));
        assert_eq!(eval_expression("2(x-1)^2x").unwrap(), p("2x^3+2x^2+2x"));
        assert_eq!(eval_expression("-x^{3}*x+4").unwrap(), p("2x^4+1"));
        assert_eq!(eval_expression("x^10-x^9+1").unwrap(), p("x^10+2x^9+1"));
        assert!(eval_expression("(x+1").is_err());
        assert!(eval_expression("x^").is_err());
        assert!(eval_expression("").is_err());
    }
}

use alloc::string::{String, ToString};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("operation needs a nonzero polynomial")]
    ZeroPoly,
    #[error("operation needs a polynomial of degree at least 1")]
    ConstantPoly,
    #[error("polynomial division left a remainder")]
    NotDivisible,
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: &'static str },
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),

    #[error("extension degree {m} outside the supported range 2..={max}")]
    UnsupportedDegree { m: u32, max: u32 },
    #[error("defining polynomial has degree {found:?}, expected {expected}")]
    DegreeMismatch { expected: u32, found: Option<usize> },
    #[error("defining polynomial is not monic")]
    NotMonic,
    #[error("defining polynomial is not irreducible over GF(3)")]
    NotIrreducible,
    #[error("defining polynomial is irreducible but its root has order {order}, not {expected}")]
    NotPrimitive { order: u32, expected: u32 },
    #[error("zero raised to a non-positive power")]
    ZeroToNonpositivePower,

    #[error("unsupported family/variant combination: {0}")]
    UnsupportedFamilyVariant(&'static str),
    #[error("exponent {e} is congruent to 0 modulo {n}")]
    DegenerateExponent { e: u64, n: u64 },

    #[error("e = {e} lies in the cyclotomic coset of 1")]
    CosetCollision { e: u64 },
    #[error("weight {w} is not supported (maximum 5)")]
    UnsupportedWeight { w: usize },

    #[error("family {family} is not applicable: {reason}")]
    NotApplicable { family: String, reason: String },
    #[error("gcd(r, 3^m-1) = {gcd} for r = {r}, expected 2")]
    GcdNotTwo { r: u64, gcd: u64 },
    #[error("search needs {needed} cells, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("unknown family tag {0:?}")]
    UnknownFamily(String),

    #[error("internal consistency failure: {0}")]
    Internal(&'static str),
}

impl Error {
    pub(crate) fn parse(input: &str, reason: &'static str) -> Error {
        Error::Parse {
            input: input.to_string(),
            reason,
        }
    }

    pub(crate) fn not_applicable(family: impl ToString, reason: impl ToString) -> Error {
        Error::NotApplicable {
            family: family.to_string(),
            reason: reason.to_string(),
        }
    }
}

use crate::kernel::Nat;

/// Crate-wide error type. Search code treats most variants as recoverable
/// "this cell has no solution" signals; `Overflow` is always recoverable so
/// that range scans can log and skip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("arithmetic overflow (128-bit)")]
    Overflow,
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime (or outside the 64-bit primality range)")]
    NotPrime(Nat),
    #[error("assumed gcd(p, y) must be 1 or p, got {0}")]
    BadGcdHypothesis(Nat),
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("no solution completes the given values")]
    NoSolution,
    #[error("divisibility precondition failed in inverse map")]
    NotDivisible,
    #[error("candidate failed end-to-end verification")]
    Unverified,
    #[error("discriminant is negative or not a perfect square")]
    NonSquareDiscriminant,
    #[error("root parity failure: mb and sqrt(D) differ mod 2")]
    RootParity,
    #[error("not a Pythagorean triple")]
    NotPythagorean,
    #[error("not a primitive triple")]
    NotPrimitive,
}

pub type Result<T> = std::result::Result<T, Error>;

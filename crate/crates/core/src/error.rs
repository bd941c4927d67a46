use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p must be an odd prime (got {0})")]
    NotOddPrime(u64),
    #[error("m must be a positive integer")]
    ZeroExponent,
    #[error("f must be a power of two with f >= 2 (got {0})")]
    FNotPowerOfTwo(u64),
    #[error("f = {f} does not divide p - 1 = {p_minus_one}")]
    FDoesNotDivide { f: u64, p_minus_one: u64 },
    #[error("e = {e} does not divide p - 1 = {p_minus_one}")]
    EDoesNotDivide { e: u64, p_minus_one: u64 },
    #[error("exactly one of f and e must be given")]
    AmbiguousDecomposition,
    #[error("g = {g} is not an odd common primitive root modulo {p}^{m}")]
    NotPrimitiveRoot { g: u64, p: u64, m: u32 },
    #[error("period 2*{p}^{m} is too large")]
    PeriodTooLarge { p: u64, m: u32 },
    #[error("level j = {j} is outside 1..={m}")]
    LevelOutOfRange { j: u32, m: u32 },
    #[error("the doubled embedding only applies to classes modulo p^j")]
    UnsupportedScaling,
    #[error("{a} is not a unit modulo {modulus}")]
    NotAUnit { a: u64, modulus: u64 },
    #[error("{x} is not a power of {g} modulo {modulus}")]
    NoDiscreteLog { g: u64, x: u64, modulus: u64 },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("extension degree {0} exceeds 64; use the gcd-only path")]
    FieldTooLarge(u64),
    #[error("modulus of degree {0} is not irreducible")]
    NotIrreducible(usize),
    #[error("sequence period {got} does not match the field context period {expected}")]
    PeriodMismatch { got: usize, expected: usize },
    #[error("binary sequence data is malformed: {0}")]
    MalformedSequence(String),
    #[error("Berlekamp-Massey gave {bm} but the gcd route gave {gcd}")]
    MethodDisagreement { bm: usize, gcd: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

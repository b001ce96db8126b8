//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while building fields, codes, or reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("q = {0} is not prime")]
    NonPrimeQ(u64),
    #[error("field order {q}^{m} - 1 exceeds the 2^31 table budget")]
    FieldTooLarge { q: u64, m: u32 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("modulus is reducible over GF({q})")]
    ReducibleModulus { q: u32 },
    #[error("modulus is irreducible but x is not primitive and fallback search is disabled")]
    NonPrimitiveModulusWithoutFallback,
    #[error("division by zero field element")]
    DivisionByZero,
    #[error("residue {value} out of range 0..{bound}")]
    OutOfRange { value: u64, bound: u64 },
    #[error("q = {q} divides n = {n}; cyclotomic cosets undefined")]
    QDividesN { q: u32, n: u32 },
    #[error("{v} is not coprime to {n}")]
    NotCoprime { v: u64, n: u64 },
    #[error("m = {0} must be odd")]
    EvenM(u32),
    #[error("weight classes must be distinct, got ({0}, {0})")]
    SameClass(u8),
    #[error("weight class {0} out of range 0..=3")]
    ClassOutOfRange(u8),
    #[error("pair ({0}, {1}) is outside the four analyzed families")]
    UnsupportedPair(u8, u8),
    #[error("polynomial division by zero")]
    DivisionByZeroPoly,
    #[error("cannot parse polynomial: {0}")]
    PolyParse(String),
    #[error("set is empty")]
    EmptySet,
    #[error("set is all of Z_n; no proper run exists")]
    FullSet,
    #[error("m = {m} is not in the residue class required for family ({i1}, {i2})")]
    WrongResidueClass { i1: u8, i2: u8, m: u32 },
    #[error("window containment fails: residue {missing} not in the multiplied set")]
    ContainmentViolated { missing: u32 },
    #[error("m = {m} is outside the stated range of the bound for family ({i1}, {i2})")]
    OutOfTheoremRange { i1: u8, i2: u8, m: u32 },
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("defining set is not closed under multiplication by q: {witness} maps outside")]
    NotCosetClosed { witness: u32 },
    #[error("field mismatch: expected GF({expected_q}^{expected_m})")]
    FieldMismatch { expected_q: u32, expected_m: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;

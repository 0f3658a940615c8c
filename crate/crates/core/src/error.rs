use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    #[error("{r} is not a unit modulo {m}")]
    NonUnit { r: u64, m: u64 },
    #[error("k = {k} is out of range for m = {m}")]
    KOutOfRange { m: u64, k: u64 },
    #[error("gcd(m, k) = gcd({m}, {k}) = {g} != 1")]
    NotCoprimeK { m: u64, k: u64, g: u64 },
    #[error("gcd(m, k - 1) = gcd({m}, {k_minus_1}) = {g} != 1, so the centre is non-trivial")]
    NonTrivialCentre { m: u64, k_minus_1: u64, g: u64 },
    #[error("k = 1 (mod {m}) presents an abelian group")]
    Abelian { m: u64 },
    #[error("base residue {r} is not reduced modulo {m}")]
    ResidueOutOfRange { r: u64, m: u64 },
    #[error("base does not contain 0")]
    BaseMissingZero,
    #[error("base contains no unit modulo {m}")]
    BaseWithoutUnit { m: u64 },
    #[error("base is over modulus {base} but the presentation has modulus {presentation}")]
    ModulusMismatch { base: u64, presentation: u64 },
    #[error("{x} is not in the multiplicative closure of the base")]
    XNotInClosure { x: u64 },
    #[error("{p} does not divide m = {m}")]
    NotADivisor { p: u64, m: u64 },
    #[error("group order {order} exceeds the table oracle cap {cap}")]
    CapExceeded { order: u64, cap: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

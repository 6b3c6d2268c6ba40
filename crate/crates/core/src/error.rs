use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{what} exceeds the limit {limit}")]
    TooLarge { what: String, limit: u64 },
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("degree {d} must be smaller than q = {q}")]
    DegreeTooLarge { d: u32, q: u32 },
    #[error("linear system is underdetermined")]
    Underdetermined,
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("non-integral solution at beta[{i},{j}]")]
    NonIntegralSolution { i: usize, j: usize },
    #[error("negative Betti number at beta[{i},{j}]")]
    NegativeBetti { i: usize, j: usize },
    #[error("non-integral spectrum entry A[w={w}, r={r}]")]
    NonIntegralSpectrum { w: usize, r: usize },
    #[error("negative spectrum entry A[w={w}, r={r}]")]
    NegativeSpectrum { w: usize, r: usize },
    #[error("cycle inventory is missing a cycle contained in the queried set")]
    IncompleteInventory,
    #[error("Boij-Soderberg identities fail at elongation {ell}: residuals {residuals:?}")]
    BsViolation { ell: usize, residuals: Vec<String> },
    #[error("phi profile needs elongation {0}")]
    MissingElongation(usize),
    #[error("missing phi column {0}")]
    MissingColumn(usize),
    #[error("spectrum table has no row {0}")]
    MissingRow(usize),
    #[error("the zero form does not define a conic")]
    ZeroForm,
    #[error("no embedded tables for q = {0}")]
    NoFixtures(u32),
    #[error("unsupported field size q = {0}")]
    UnsupportedQ(u32),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

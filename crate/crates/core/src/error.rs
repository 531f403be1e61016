use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("defining polynomial is reducible over GF({p})")]
    ReduciblePolynomial { p: u64 },
    #[error("no primitive polynomial of degree {degree} over GF({p}) could be selected")]
    NonPrimitivePolynomialWhenDefaultRequested { p: u64, degree: usize },
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("field order {p}^{degree} is out of range")]
    FieldTooLarge { p: u64, degree: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("the zero element has no multiplicative order")]
    ZeroElement,
    #[error("subfield of degree {sub} is not contained in an extension of degree {ext}")]
    IncompatibleSubfield { sub: usize, ext: usize },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("gcd({a}, {b}) != 1")]
    NotCoprime { a: u64, b: u64 },
    #[error("r = {r} does not divide q - 1 = {}", q - 1)]
    RNotDividingQMinus1 { q: u64, r: u64 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree {got} over GF(q) does not equal ord_(rn)(q) = {expected}")]
    WrongExtensionDegree { expected: usize, got: usize },
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("enumeration of {needed} messages exceeds the budget of {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("inconsistent input: {0}")]
    InconsistentInput(String),
    #[error("distance {0} is not even")]
    OddDistance(u64),
    #[error("check polynomial does not divide x^n - lambda")]
    NotADivisor,
    #[error("t = {t} must satisfy gcd(t, n) = 1 and t = 1 (mod r)")]
    BadT { t: u64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no representation {0}")]
    NoRepresentation(String),
    #[error("order condition fails: {0}")]
    OrderConditionFails(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
}

impl Error {
    pub(crate) fn budget(needed: impl ToString, budget: u64) -> Self {
        Error::BudgetExceeded { needed: needed.to_string(), budget }
    }
}

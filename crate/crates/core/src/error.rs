use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The Gröbner engine ran out of its pair or term allowance. This is a
    /// resource outcome, never a mathematical verdict.
    #[error("resource budget exceeded: {what} (limit {limit})")]
    BudgetExceeded { what: &'static str, limit: usize },

    #[error("{0} is not a prime below 2^31")]
    InvalidField(u64),

    #[error("coefficient {value} has a denominator divisible by {p}")]
    DenominatorVanishes { value: String, p: u64 },

    #[error("variable count mismatch: expected {expected}, found {found}")]
    VariableCountMismatch { expected: usize, found: usize },

    #[error("component mismatch: expected {expected}, found {found}")]
    ComponentMismatch { expected: usize, found: usize },

    #[error("polynomials live in different rings")]
    RingMismatch,

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),

    #[error("monomial order mismatch")]
    OrderMismatch,

    #[error("operation requires {0}")]
    Unsupported(String),

    #[error("characteristic {p} divides the group order {order}")]
    CharacteristicDividesOrder { p: u64, order: usize },

    #[error("group action is not closed: {0}")]
    NotAGroup(String),

    #[error("operation requires positive characteristic")]
    ZeroCharacteristic,

    #[error("{q} is not a power of the characteristic {p}")]
    NotAPowerOfCharacteristic { q: u64, p: u64 },

    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("the candidate is not a cocycle")]
    NotACocycle,

    #[error("not finite: {0}")]
    NotFinite(String),

    #[error("finiteness witness fails in degree {degree}: {witness} is not in the span")]
    FinitenessWitness { degree: u32, witness: String },

    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
}

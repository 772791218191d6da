//! Error cases surfaced by the library.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The Coxeter matrix is not of finite type.
    NotFinite(String),
    /// Finite type whose Cartan entries lie outside `ℚ(√5)`, i.e. `I2(m)`
    /// with `m ∉ {2,3,4,5,6}`.
    UnsupportedField(String),
    /// The matrix is not a valid Coxeter matrix.
    InvalidMatrix(String),
    /// Elements or cosets from different systems were mixed.
    SystemMismatch,
    /// `x` was expected to be a minimal-length coset representative.
    NotMinimalRep,
    /// The word is not a Coxeter element (each generator exactly once).
    NotCoxeterElement(String),
    /// The projection pair does not define an order congruence.
    InvalidProjections(String),
    /// `σ↑(x,t)` is undefined because `x ≡ xt`.
    Contracted,
    /// The three facial order characterizations disagree; an internal bug.
    CharacterizationMismatch(String),
    /// Projection fibers disagree with the class keying; an internal bug.
    FiberMismatch(String),
    /// The operation needs a type-A system with standard labeling.
    NotTypeA,
    /// Unknown generator name, malformed coset literal, or similar.
    Parse(String),
    /// Serialized document has the wrong schema version or shape.
    Schema(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotFinite(why) => write!(f, "NotFinite: {why}"),
            Error::UnsupportedField(why) => write!(f, "UnsupportedField: {why}"),
            Error::InvalidMatrix(why) => write!(f, "InvalidMatrix: {why}"),
            Error::SystemMismatch => write!(f, "SystemMismatch: elements belong to different systems"),
            Error::NotMinimalRep => write!(f, "NotMinimalRep: x has a right descent in I"),
            Error::NotCoxeterElement(why) => write!(f, "NotCoxeterElement: {why}"),
            Error::InvalidProjections(why) => write!(f, "InvalidProjections: {why}"),
            Error::Contracted => write!(f, "Contracted: x ≡ xt, so the transported generator is undefined"),
            Error::CharacterizationMismatch(why) => write!(f, "CharacterizationMismatch: {why}"),
            Error::FiberMismatch(why) => write!(f, "FiberMismatch: {why}"),
            Error::NotTypeA => write!(f, "NotTypeA: operation requires a standard type-A system"),
            Error::Parse(why) => write!(f, "ParseError: {why}"),
            Error::Schema(why) => write!(f, "SchemaError: {why}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

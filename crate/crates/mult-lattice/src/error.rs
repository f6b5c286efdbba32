//! Crate-wide error type.
//!
//! Errors are reserved for *malformed input* (bad posets, non-closed sets,
//! violated preconditions). A predicate that legitimately evaluates to
//! "false" returns a failing [`crate::verdict::Verdict`] instead, so that
//! theorem audits can distinguish "the hypothesis does not hold" from
//! "the check failed".

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element name `{0}`")]
    DuplicateLabel(String),

    #[error("unknown element name `{0}`")]
    UnknownLabel(String),

    #[error("not a poset: `{a}` and `{b}` lie on a cycle")]
    NotAPoset { a: String, b: String },

    #[error("not a lattice: `{a}` and `{b}` have no unique {bound}")]
    NotALattice {
        a: String,
        b: String,
        /// "join" or "meet".
        bound: &'static str,
    },

    #[error("lattice has no bottom/top element")]
    NoBounds,

    #[error("lattice too large: {n} elements (maximum {max})")]
    TooManyElements { n: usize, max: usize },

    #[error("multiplication table size {got} does not match {expected} elements")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("multiplication table not symmetric at ({a}, {b})")]
    NotSymmetric { a: String, b: String },

    #[error("multiplication table entry out of range at ({a}, {b})")]
    EntryOutOfRange { a: String, b: String },

    #[error("multiplicatively closed set must contain 1")]
    MissingOne,

    #[error("multiplicatively closed set must not contain 0")]
    ContainsZero,

    #[error("set not multiplicatively closed: `{a}` * `{b}` = `{product}` is not a member")]
    NotClosed {
        a: String,
        b: String,
        product: String,
    },

    #[error("family must contain the top element 1")]
    MissingTop,

    #[error("S is not contained where required: `{element}` is missing")]
    SNotContained { element: String },

    #[error("Pr(L) is not contained in the family: `{element}` is missing")]
    PrNotContained { element: String },

    #[error("host is not an r-lattice")]
    NotRLattice,

    #[error("unsupported multiplication class: need {need}")]
    UnsupportedClass { need: &'static str },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("bad modulus {0}: need n >= 2")]
    BadModulus(u64),

    #[error("unknown builtin lattice `{0}`")]
    UnknownName(String),

    #[error("residue set not multiplicatively closed: {a} * {b} = {product} (mod {n}) is not a member")]
    RingSNotClosed { a: u64, b: u64, product: u64, n: u64 },

    #[error("enumeration limit exceeded ({detail}); enable sampling mode")]
    LimitExceeded { detail: String },

    #[error("lattice has {n} elements; exhaustive search needs <= {max} or an explicit budget")]
    BudgetRequired { n: usize, max: usize },

    #[error("no multiplication section in input (add `mult:` lines or `mult-default: meet`)")]
    MissingMult,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

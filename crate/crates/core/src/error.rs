//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised while evaluating expressions or grounding actions.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("value {value} outside domain {domain} for `{context}`")]
    RangeViolation {
        context: String,
        value: String,
        domain: String,
    },

    #[error("type mismatch in `{context}`: expected {expected}, got {got}")]
    TypeMismatch {
        context: String,
        expected: String,
        got: String,
    },

    #[error("arithmetic overflow in `{0}`")]
    Overflow(String),

    #[error("`{0}` is not an array")]
    NotAnArray(String),

    #[error("array index {index} out of bounds for `{array}` (length {len})")]
    IndexOutOfBounds {
        array: String,
        index: i64,
        len: usize,
    },

    #[error("unknown domain `{0}`")]
    UnknownDomain(String),

    #[error("enum literal `{0}` not declared in any domain in scope")]
    UnknownLiteral(String),
}

/// Errors raised while instantiating or expanding parameterized objects.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ExpandError {
    #[error(transparent)]
    Eval(#[from] EvalError),

    #[error("missing binding for parameter `{0}`")]
    MissingParam(String),

    #[error("binding {value} for parameter `{param}` outside its domain")]
    OutOfDomain { param: String, value: String },

    #[error("state space exceeds cap of {0} configurations")]
    StateExplosion(usize),

    #[error("broadcast/collect range {lo}..{hi} is empty in vector `{vector}`")]
    EmptyRange { vector: String, lo: i64, hi: i64 },

    #[error("vector `{0}` mixes BC and CO entries")]
    MixedVector(String),

    #[error("vector `{0}` has more than one CO entry")]
    MultipleCollect(String),

    #[error("vector `{vector}`: hole `{hole}` appears in more than one entry")]
    DuplicateHole { vector: String, hole: String },

    #[error("vector `{vector}`: unknown hole `{hole}`")]
    UnknownHole { vector: String, hole: String },

    #[error("vector `{vector}`: cannot infer a domain for free variable `{var}`")]
    UnresolvedVar { vector: String, var: String },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("hole `{hole}` of net `{net}` is not filled")]
    UnfilledHole { net: String, hole: String },

    #[error("no root net in model (every pNet is used as a filler)")]
    NoRootNet,
}

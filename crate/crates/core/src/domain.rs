//! Finite data domains and the values they contain.
//!
//! Every domain is finite and non-empty: a bounded integer range, an
//! enumeration of named literals, or the booleans. Variables, parameters and
//! action arguments all draw their values from these domains.

use std::fmt;

use crate::error::EvalError;

/// A finite, non-empty data domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DataDomain {
    /// Bounded integer range `lo..hi`, inclusive on both ends.
    Range { lo: i64, hi: i64 },
    /// Enumeration of named literals, in declaration order.
    Enum { literals: Vec<String> },
    /// The booleans.
    Bool,
}

impl DataDomain {
    pub fn range(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "range domain requires lo <= hi, got {lo}..{hi}");
        DataDomain::Range { lo, hi }
    }

    pub fn enumeration<I: IntoIterator<Item = S>, S: Into<String>>(literals: I) -> Self {
        let literals: Vec<String> = literals.into_iter().map(Into::into).collect();
        assert!(!literals.is_empty(), "enum domain must be non-empty");
        DataDomain::Enum { literals }
    }

    pub fn size(&self) -> usize {
        match self {
            DataDomain::Range { lo, hi } => (hi - lo + 1) as usize,
            DataDomain::Enum { literals } => literals.len(),
            DataDomain::Bool => 2,
        }
    }

    /// All values of the domain, in canonical order.
    pub fn values(&self) -> Vec<Value> {
        match self {
            DataDomain::Range { lo, hi } => (*lo..=*hi).map(Value::Int).collect(),
            DataDomain::Enum { literals } => {
                literals.iter().map(|l| Value::Lit(l.clone())).collect()
            }
            DataDomain::Bool => vec![Value::Bool(false), Value::Bool(true)],
        }
    }

    /// The default initial value: the first value of the domain.
    pub fn first(&self) -> Value {
        match self {
            DataDomain::Range { lo, .. } => Value::Int(*lo),
            DataDomain::Enum { literals } => Value::Lit(literals[0].clone()),
            DataDomain::Bool => Value::Bool(false),
        }
    }

    pub fn contains(&self, v: &Value) -> bool {
        match (self, v) {
            (DataDomain::Range { lo, hi }, Value::Int(n)) => lo <= n && n <= hi,
            (DataDomain::Enum { literals }, Value::Lit(l)) => literals.iter().any(|x| x == l),
            (DataDomain::Bool, Value::Bool(_)) => true,
            _ => false,
        }
    }

    /// Checks membership, reporting `context` in the error.
    pub fn check(&self, v: &Value, context: &str) -> Result<(), EvalError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(EvalError::RangeViolation {
                context: context.to_string(),
                value: v.to_string(),
                domain: self.to_string(),
            })
        }
    }
}

impl fmt::Display for DataDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DataDomain::Range { lo, hi } => write!(f, "{lo}..{hi}"),
            DataDomain::Enum { literals } => write!(f, "{{{}}}", literals.join(", ")),
            DataDomain::Bool => write!(f, "bool"),
        }
    }
}

/// A ground value: an integer, a boolean, or an enum literal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    Int(i64),
    Bool(bool),
    Lit(String),
}

impl Value {
    pub fn as_int(&self, context: &str) -> Result<i64, EvalError> {
        match self {
            Value::Int(n) => Ok(*n),
            other => Err(EvalError::TypeMismatch {
                context: context.to_string(),
                expected: "integer".to_string(),
                got: other.to_string(),
            }),
        }
    }

    pub fn as_bool(&self, context: &str) -> Result<bool, EvalError> {
        match self {
            Value::Bool(b) => Ok(*b),
            other => Err(EvalError::TypeMismatch {
                context: context.to_string(),
                expected: "boolean".to_string(),
                got: other.to_string(),
            }),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(n) => write!(f, "{n}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Lit(l) => write!(f, "{l}"),
        }
    }
}

/// A named domain declaration at model level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainDecl {
    pub name: String,
    pub domain: DataDomain,
}

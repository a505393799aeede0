//! The finite-data expression language: guards, action arguments, and
//! assignment right-hand sides.
//!
//! Arithmetic is evaluated exactly over machine integers; conformance to a
//! bounded domain is enforced wherever a result is bound to a domain — an
//! assignment target, an array index, or an expected result domain supplied
//! by the caller. Leaving the domain is a hard [`EvalError::RangeViolation`],
//! not a wrap-around.

use std::collections::BTreeMap;
use std::fmt;

use crate::domain::{DataDomain, Value};
use crate::error::EvalError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// Reference to a declared variable, parameter, or input binder.
    Var(String),
    Int(i64),
    Bool(bool),
    /// Enum literal.
    Lit(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Eq(Box<Expr>, Box<Expr>),
    Ne(Box<Expr>, Box<Expr>),
    Lt(Box<Expr>, Box<Expr>),
    Le(Box<Expr>, Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    Not(Box<Expr>),
    /// Array cell read `arr[idx]`.
    Index(String, Box<Expr>),
}

impl Expr {
    pub fn var(name: &str) -> Expr {
        Expr::Var(name.to_string())
    }

    pub fn lit(name: &str) -> Expr {
        Expr::Lit(name.to_string())
    }

    pub fn index(array: &str, idx: Expr) -> Expr {
        Expr::Index(array.to_string(), Box::new(idx))
    }

    pub fn add(a: Expr, b: Expr) -> Expr {
        Expr::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: Expr, b: Expr) -> Expr {
        Expr::Sub(Box::new(a), Box::new(b))
    }

    pub fn eq(a: Expr, b: Expr) -> Expr {
        Expr::Eq(Box::new(a), Box::new(b))
    }

    pub fn ne(a: Expr, b: Expr) -> Expr {
        Expr::Ne(Box::new(a), Box::new(b))
    }

    pub fn lt(a: Expr, b: Expr) -> Expr {
        Expr::Lt(Box::new(a), Box::new(b))
    }

    pub fn le(a: Expr, b: Expr) -> Expr {
        Expr::Le(Box::new(a), Box::new(b))
    }

    pub fn and(a: Expr, b: Expr) -> Expr {
        Expr::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Expr, b: Expr) -> Expr {
        Expr::Or(Box::new(a), Box::new(b))
    }

    pub fn not(a: Expr) -> Expr {
        Expr::Not(Box::new(a))
    }

    /// Free variable names, in first-occurrence order.
    pub fn free_vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Var(n) => {
                if !out.iter().any(|x| x == n) {
                    out.push(n.clone());
                }
            }
            Expr::Int(_) | Expr::Bool(_) | Expr::Lit(_) => {}
            Expr::Add(a, b)
            | Expr::Sub(a, b)
            | Expr::Eq(a, b)
            | Expr::Ne(a, b)
            | Expr::Lt(a, b)
            | Expr::Le(a, b)
            | Expr::And(a, b)
            | Expr::Or(a, b) => {
                a.free_vars(out);
                b.free_vars(out);
            }
            Expr::Not(a) => a.free_vars(out),
            Expr::Index(arr, idx) => {
                if !out.iter().any(|x| x == arr) {
                    out.push(arr.clone());
                }
                idx.free_vars(out);
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn prec(e: &Expr) -> u8 {
            match e {
                Expr::Or(..) => 1,
                Expr::And(..) => 2,
                Expr::Eq(..) | Expr::Ne(..) | Expr::Lt(..) | Expr::Le(..) => 3,
                Expr::Add(..) | Expr::Sub(..) => 4,
                _ => 5,
            }
        }
        fn show(e: &Expr, parent: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let p = prec(e);
            let paren = p < parent;
            if paren {
                write!(f, "(")?;
            }
            match e {
                Expr::Var(n) | Expr::Lit(n) => write!(f, "{n}")?,
                Expr::Int(n) => write!(f, "{n}")?,
                Expr::Bool(b) => write!(f, "{b}")?,
                Expr::Add(a, b) => {
                    show(a, p, f)?;
                    write!(f, " + ")?;
                    show(b, p + 1, f)?;
                }
                Expr::Sub(a, b) => {
                    show(a, p, f)?;
                    write!(f, " - ")?;
                    show(b, p + 1, f)?;
                }
                Expr::Eq(a, b) => {
                    show(a, p + 1, f)?;
                    write!(f, " = ")?;
                    show(b, p + 1, f)?;
                }
                Expr::Ne(a, b) => {
                    show(a, p + 1, f)?;
                    write!(f, " != ")?;
                    show(b, p + 1, f)?;
                }
                Expr::Lt(a, b) => {
                    show(a, p + 1, f)?;
                    write!(f, " < ")?;
                    show(b, p + 1, f)?;
                }
                Expr::Le(a, b) => {
                    show(a, p + 1, f)?;
                    write!(f, " <= ")?;
                    show(b, p + 1, f)?;
                }
                Expr::And(a, b) => {
                    show(a, p, f)?;
                    write!(f, " and ")?;
                    show(b, p + 1, f)?;
                }
                Expr::Or(a, b) => {
                    show(a, p, f)?;
                    write!(f, " or ")?;
                    show(b, p + 1, f)?;
                }
                Expr::Not(a) => {
                    write!(f, "not ")?;
                    show(a, 6, f)?;
                }
                Expr::Index(arr, idx) => {
                    write!(f, "{arr}[")?;
                    show(idx, 0, f)?;
                    write!(f, "]")?;
                }
            }
            if paren {
                write!(f, ")")?;
            }
            Ok(())
        }
        show(self, 0, f)
    }
}

/// A slot in a valuation: a scalar value or an array of values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Binding {
    Scalar(Value),
    Array(Vec<Value>),
}

/// A total valuation of names to bindings.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Env {
    bindings: BTreeMap<String, Binding>,
}

impl Env {
    pub fn new() -> Self {
        Env::default()
    }

    pub fn set(&mut self, name: &str, v: Value) {
        self.bindings.insert(name.to_string(), Binding::Scalar(v));
    }

    pub fn set_array(&mut self, name: &str, vs: Vec<Value>) {
        self.bindings.insert(name.to_string(), Binding::Array(vs));
    }

    pub fn get(&self, name: &str) -> Option<&Binding> {
        self.bindings.get(name)
    }

    pub fn scalar(&self, name: &str) -> Result<&Value, EvalError> {
        match self.bindings.get(name) {
            Some(Binding::Scalar(v)) => Ok(v),
            Some(Binding::Array(_)) => Err(EvalError::TypeMismatch {
                context: name.to_string(),
                expected: "scalar".to_string(),
                got: "array".to_string(),
            }),
            None => Err(EvalError::UnboundVariable(name.to_string())),
        }
    }

    pub fn array(&self, name: &str) -> Result<&Vec<Value>, EvalError> {
        match self.bindings.get(name) {
            Some(Binding::Array(vs)) => Ok(vs),
            Some(Binding::Scalar(_)) => Err(EvalError::NotAnArray(name.to_string())),
            None => Err(EvalError::UnboundVariable(name.to_string())),
        }
    }

    pub fn array_mut(&mut self, name: &str) -> Result<&mut Vec<Value>, EvalError> {
        match self.bindings.get_mut(name) {
            Some(Binding::Array(vs)) => Ok(vs),
            Some(Binding::Scalar(_)) => Err(EvalError::NotAnArray(name.to_string())),
            None => Err(EvalError::UnboundVariable(name.to_string())),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Binding)> {
        self.bindings.iter()
    }
}

/// Evaluates `e` under `env`; if `expected` is given, the result must lie in
/// that domain.
pub fn eval_expr(e: &Expr, env: &Env, expected: Option<&DataDomain>) -> Result<Value, EvalError> {
    let v = eval(e, env)?;
    if let Some(dom) = expected {
        dom.check(&v, &e.to_string())?;
    }
    Ok(v)
}

/// Evaluates an expression that must yield a boolean (a guard).
pub fn eval_bool(e: &Expr, env: &Env) -> Result<bool, EvalError> {
    eval(e, env)?.as_bool(&e.to_string())
}

/// Evaluates an expression that must yield an integer.
pub fn eval_int(e: &Expr, env: &Env) -> Result<i64, EvalError> {
    eval(e, env)?.as_int(&e.to_string())
}

fn eval(e: &Expr, env: &Env) -> Result<Value, EvalError> {
    match e {
        Expr::Var(n) => env.scalar(n).cloned(),
        Expr::Int(n) => Ok(Value::Int(*n)),
        Expr::Bool(b) => Ok(Value::Bool(*b)),
        Expr::Lit(l) => Ok(Value::Lit(l.clone())),
        Expr::Add(a, b) => arith(e, env, a, b, |x, y| x.checked_add(y)),
        Expr::Sub(a, b) => arith(e, env, a, b, |x, y| x.checked_sub(y)),
        Expr::Eq(a, b) => Ok(Value::Bool(eval(a, env)? == eval(b, env)?)),
        Expr::Ne(a, b) => Ok(Value::Bool(eval(a, env)? != eval(b, env)?)),
        Expr::Lt(a, b) => cmp(e, env, a, b, |x, y| x < y),
        Expr::Le(a, b) => cmp(e, env, a, b, |x, y| x <= y),
        Expr::And(a, b) => {
            let ctx = e.to_string();
            Ok(Value::Bool(
                eval(a, env)?.as_bool(&ctx)? && eval(b, env)?.as_bool(&ctx)?,
            ))
        }
        Expr::Or(a, b) => {
            let ctx = e.to_string();
            Ok(Value::Bool(
                eval(a, env)?.as_bool(&ctx)? || eval(b, env)?.as_bool(&ctx)?,
            ))
        }
        Expr::Not(a) => Ok(Value::Bool(!eval(a, env)?.as_bool(&e.to_string())?)),
        Expr::Index(arr, idx) => {
            let cells = env.array(arr)?;
            let i = eval(idx, env)?.as_int(&e.to_string())?;
            if i < 0 || i as usize >= cells.len() {
                return Err(EvalError::IndexOutOfBounds {
                    array: arr.clone(),
                    index: i,
                    len: cells.len(),
                });
            }
            Ok(cells[i as usize].clone())
        }
    }
}

fn arith(
    whole: &Expr,
    env: &Env,
    a: &Expr,
    b: &Expr,
    op: fn(i64, i64) -> Option<i64>,
) -> Result<Value, EvalError> {
    let ctx = whole.to_string();
    let x = eval(a, env)?.as_int(&ctx)?;
    let y = eval(b, env)?.as_int(&ctx)?;
    op(x, y)
        .map(Value::Int)
        .ok_or_else(|| EvalError::Overflow(ctx))
}

fn cmp(
    whole: &Expr,
    env: &Env,
    a: &Expr,
    b: &Expr,
    op: fn(i64, i64) -> bool,
) -> Result<Value, EvalError> {
    let ctx = whole.to_string();
    let x = eval(a, env)?.as_int(&ctx)?;
    let y = eval(b, env)?.as_int(&ctx)?;
    Ok(Value::Bool(op(x, y)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env(pairs: &[(&str, Value)]) -> Env {
        let mut e = Env::new();
        for (n, v) in pairs {
            e.set(n, v.clone());
        }
        e
    }

    #[test]
    fn arithmetic_identity() {
        // (x+1) = 2 under {x:1}
        let e = Expr::eq(Expr::add(Expr::var("x"), Expr::Int(1)), Expr::Int(2));
        let v = eval_expr(&e, &env(&[("x", Value::Int(1))]), None).unwrap();
        assert_eq!(v, Value::Bool(true));
    }

    #[test]
    fn negation() {
        let e = Expr::not(Expr::var("b"));
        let v = eval_expr(&e, &env(&[("b", Value::Bool(false))]), None).unwrap();
        assert_eq!(v, Value::Bool(true));
    }

    #[test]
    fn range_exit_is_an_error() {
        // x+1 with x : 0..2 errors exactly at x=2; oracle: exhaustive sweep.
        let dom = DataDomain::range(0, 2);
        let e = Expr::add(Expr::var("x"), Expr::Int(1));
        for x in 0..=2 {
            let r = eval_expr(&e, &env(&[("x", Value::Int(x))]), Some(&dom));
            if x == 2 {
                assert!(matches!(r, Err(EvalError::RangeViolation { .. })), "x={x}");
            } else {
                assert_eq!(r.unwrap(), Value::Int(x + 1), "x={x}");
            }
        }
    }

    #[test]
    fn unbound_variable() {
        let e = Expr::var("missing");
        assert_eq!(
            eval_expr(&e, &Env::new(), None),
            Err(EvalError::UnboundVariable("missing".into()))
        );
    }

    #[test]
    fn array_read() {
        let mut en = Env::new();
        en.set_array("a", vec![Value::Int(7), Value::Int(9)]);
        en.set("k", Value::Int(1));
        let e = Expr::index("a", Expr::var("k"));
        assert_eq!(eval_expr(&e, &en, None).unwrap(), Value::Int(9));
        let bad = Expr::index("a", Expr::Int(2));
        assert!(matches!(
            eval_expr(&bad, &en, None),
            Err(EvalError::IndexOutOfBounds { .. })
        ));
    }

    #[test]
    fn eval_is_deterministic() {
        let e = Expr::or(
            Expr::lt(Expr::var("x"), Expr::Int(3)),
            Expr::eq(Expr::var("y"), Expr::lit("D1")),
        );
        let en = env(&[("x", Value::Int(5)), ("y", Value::Lit("D1".into()))]);
        let first = eval_expr(&e, &en, None).unwrap();
        for _ in 0..10 {
            assert_eq!(eval_expr(&e, &en, None).unwrap(), first);
        }
    }
}

//! Parameterized labelled transition systems: control states, typed
//! variables, and guarded, assigning transitions.

use crate::action::Action;
use crate::domain::{DataDomain, DomainDecl, Value};
use crate::error::EvalError;
use crate::expr::{eval_int, Env, Expr};

/// Reference to a domain at a declaration site. Range bounds and array
/// lengths may mention pLTS parameters; they resolve to a concrete
/// [`DataDomain`] once the parameters are bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DomainRef {
    Bool,
    Named(String),
    Range(Expr, Expr),
}

impl DomainRef {
    pub fn range_lit(lo: i64, hi: i64) -> Self {
        DomainRef::Range(Expr::Int(lo), Expr::Int(hi))
    }

    pub fn named(name: &str) -> Self {
        DomainRef::Named(name.to_string())
    }

    /// Resolves to a concrete domain under `env` (parameter bindings) and the
    /// model-level domain declarations.
    pub fn resolve(&self, domains: &[DomainDecl], env: &Env) -> Result<DataDomain, EvalError> {
        match self {
            DomainRef::Bool => Ok(DataDomain::Bool),
            DomainRef::Named(n) => domains
                .iter()
                .find(|d| &d.name == n)
                .map(|d| d.domain.clone())
                .ok_or_else(|| EvalError::UnknownDomain(n.clone())),
            DomainRef::Range(lo, hi) => {
                let lo = eval_int(lo, env)?;
                let hi = eval_int(hi, env)?;
                if lo > hi {
                    return Err(EvalError::RangeViolation {
                        context: format!("{self:?}"),
                        value: format!("{lo}..{hi}"),
                        domain: "non-empty range".to_string(),
                    });
                }
                Ok(DataDomain::range(lo, hi))
            }
        }
    }
}

/// A variable holds a scalar or a fixed-size array; the array length may
/// mention pLTS parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VarType {
    Scalar(DomainRef),
    Array { elem: DomainRef, len: Expr },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarDecl {
    pub name: String,
    pub ty: VarType,
    /// Initial value; arrays initialize every cell to it. Defaults to the
    /// first value of the domain.
    pub init: Option<Expr>,
}

/// Assignment targets: a scalar variable or one array cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LValue {
    Var(String),
    Cell { array: String, index: Expr },
}

/// One assignment in a transition. `Spread` assigns a whole index range of
/// an array, `all j: lo..hi . arr[j] := e(j)`; an empty range is a no-op.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Assign {
    Set { target: LValue, value: Expr },
    Spread {
        array: String,
        index_var: String,
        lo: Expr,
        hi: Expr,
        value: Expr,
    },
}

/// A transition `from --action[any inputs][when guard][do assigns]--> to`.
///
/// Input binders introduce fresh variables ranging over their domains
/// (the action's input variables); all right-hand sides are evaluated in the
/// pre-state, then targets are written simultaneously.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transition {
    pub from: String,
    pub to: String,
    pub inputs: Vec<(String, DomainRef)>,
    pub action: Action,
    pub guard: Option<Expr>,
    pub assigns: Vec<Assign>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PLts {
    pub name: String,
    pub params: Vec<(String, DomainRef)>,
    pub vars: Vec<VarDecl>,
    pub states: Vec<String>,
    pub initial: String,
    pub transitions: Vec<Transition>,
}

impl PLts {
    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.states.iter().position(|s| s == name)
    }

    /// Structural well-formedness: endpoints declared, assignment targets
    /// declared, free variables of guards/actions/assigns declared.
    pub fn validate(&self, domains: &[DomainDecl]) -> Result<(), String> {
        if self.state_index(&self.initial).is_none() {
            return Err(format!(
                "pLTS `{}`: initial state `{}` not declared",
                self.name, self.initial
            ));
        }
        let enum_literals: Vec<&String> = domains
            .iter()
            .filter_map(|d| match &d.domain {
                DataDomain::Enum { literals } => Some(literals.iter()),
                _ => None,
            })
            .flatten()
            .collect();
        for t in &self.transitions {
            for endpoint in [&t.from, &t.to] {
                if self.state_index(endpoint).is_none() {
                    return Err(format!(
                        "pLTS `{}`: state `{endpoint}` not declared",
                        self.name
                    ));
                }
            }
            let declared = |n: &String| {
                self.params.iter().any(|(p, _)| p == n)
                    || self.vars.iter().any(|v| &v.name == n)
                    || t.inputs.iter().any(|(i, _)| i == n)
                    || enum_literals.iter().any(|l| *l == n)
            };
            let mut fv = Vec::new();
            t.action.free_vars(&mut fv);
            if let Some(g) = &t.guard {
                g.free_vars(&mut fv);
            }
            for a in &t.assigns {
                match a {
                    Assign::Set { target, value } => {
                        match target {
                            LValue::Var(n) | LValue::Cell { array: n, .. } => {
                                if !self.vars.iter().any(|v| &v.name == n) {
                                    return Err(format!(
                                        "pLTS `{}`: assignment to undeclared `{n}`",
                                        self.name
                                    ));
                                }
                            }
                        }
                        if let LValue::Cell { index, .. } = target {
                            index.free_vars(&mut fv);
                        }
                        value.free_vars(&mut fv);
                    }
                    Assign::Spread {
                        array,
                        index_var,
                        lo,
                        hi,
                        value,
                    } => {
                        if !self.vars.iter().any(|v| &v.name == array) {
                            return Err(format!(
                                "pLTS `{}`: spread over undeclared `{array}`",
                                self.name
                            ));
                        }
                        lo.free_vars(&mut fv);
                        hi.free_vars(&mut fv);
                        let mut inner = Vec::new();
                        value.free_vars(&mut inner);
                        fv.extend(inner.into_iter().filter(|n| n != index_var));
                    }
                }
            }
            for n in fv {
                if !declared(&n) {
                    return Err(format!(
                        "pLTS `{}`: free variable `{n}` in transition `{} -> {}` not declared",
                        self.name, t.from, t.to
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Resolves a range given by two integer expressions; may be empty.
pub fn resolve_range(lo: &Expr, hi: &Expr, env: &Env) -> Result<(i64, i64), EvalError> {
    Ok((eval_int(lo, env)?, eval_int(hi, env)?))
}

/// Enumerates all valuations of `binders` in lexicographic order, invoking
/// `f` with the environment extended by each valuation.
pub fn for_each_valuation<F>(
    base: &Env,
    binders: &[(String, DataDomain)],
    f: &mut F,
) -> Result<(), EvalError>
where
    F: FnMut(&Env) -> Result<(), EvalError>,
{
    fn rec<F>(env: &mut Env, binders: &[(String, DataDomain)], f: &mut F) -> Result<(), EvalError>
    where
        F: FnMut(&Env) -> Result<(), EvalError>,
    {
        match binders.split_first() {
            None => f(env),
            Some(((name, dom), rest)) => {
                for v in dom.values() {
                    env.set(name, v.clone());
                    rec(env, rest, f)?;
                }
                Ok(())
            }
        }
    }
    let mut env = base.clone();
    rec(&mut env, binders, f)
}

/// Enumerates valuations, collecting results.
pub fn valuations(binders: &[(String, DataDomain)]) -> Vec<Vec<(String, Value)>> {
    let mut out = vec![Vec::new()];
    for (name, dom) in binders {
        let mut next = Vec::new();
        for prefix in &out {
            for v in dom.values() {
                let mut row = prefix.clone();
                row.push((name.clone(), v.clone()));
                next.push(row);
            }
        }
        out = next;
    }
    out
}

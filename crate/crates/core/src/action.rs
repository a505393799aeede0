//! Parameterized actions and their ground (fully instantiated) labels.
//!
//! A ground label is canonical text: direction glyph, optional
//! `Family[index].` target, label name, then the parenthesized argument
//! values with no whitespace, e.g. `!Participant[1].Q_Suggest(D1)`. The
//! internal action renders as the bare label `i`.

use std::fmt;

use crate::domain::Value;
use crate::error::EvalError;
use crate::expr::{eval_expr, Env, Expr};

pub const INTERNAL_LABEL: &str = "i";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Emission, rendered `!`.
    Emit,
    /// Reception, rendered `?`.
    Receive,
    /// Visible action without a direction glyph (e.g. a vector's global
    /// action).
    Plain,
    /// The internal action `i`; carries no target and no arguments.
    Tau,
}

impl Direction {
    pub fn glyph(self) -> &'static str {
        match self {
            Direction::Emit => "!",
            Direction::Receive => "?",
            Direction::Plain | Direction::Tau => "",
        }
    }
}

/// Optional destination decoration `Family[index].` on an action term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Target {
    pub family: String,
    pub index: Option<Expr>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Action {
    pub direction: Direction,
    pub target: Option<Target>,
    pub label: String,
    pub args: Vec<Expr>,
}

impl Action {
    pub fn tau() -> Self {
        Action {
            direction: Direction::Tau,
            target: None,
            label: String::new(),
            args: Vec::new(),
        }
    }

    pub fn new(direction: Direction, label: &str, args: Vec<Expr>) -> Self {
        Action {
            direction,
            target: None,
            label: label.to_string(),
            args,
        }
    }

    pub fn plain(label: &str, args: Vec<Expr>) -> Self {
        Action::new(Direction::Plain, label, args)
    }

    pub fn emit(label: &str, args: Vec<Expr>) -> Self {
        Action::new(Direction::Emit, label, args)
    }

    pub fn receive(label: &str, args: Vec<Expr>) -> Self {
        Action::new(Direction::Receive, label, args)
    }

    pub fn with_target(mut self, family: &str, index: Option<Expr>) -> Self {
        self.target = Some(Target {
            family: family.to_string(),
            index,
        });
        self
    }

    pub fn is_tau(&self) -> bool {
        self.direction == Direction::Tau
    }

    /// Free variable names of the action's index and argument expressions.
    pub fn free_vars(&self, out: &mut Vec<String>) {
        if let Some(t) = &self.target {
            if let Some(ix) = &t.index {
                ix.free_vars(out);
            }
        }
        for a in &self.args {
            a.free_vars(out);
        }
    }

    /// Grounds the action under `env`, producing its canonical label.
    pub fn ground(&self, env: &Env) -> Result<String, EvalError> {
        if self.is_tau() {
            return Ok(INTERNAL_LABEL.to_string());
        }
        let mut s = String::new();
        s.push_str(self.direction.glyph());
        if let Some(t) = &self.target {
            s.push_str(&t.family);
            if let Some(ix) = &t.index {
                let v = eval_expr(ix, env, None)?;
                s.push('[');
                s.push_str(&v.to_string());
                s.push(']');
            }
            s.push('.');
        }
        s.push_str(&self.label);
        s.push('(');
        for (k, a) in self.args.iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            let v = eval_expr(a, env, None)?;
            s.push_str(&v.to_string());
        }
        s.push(')');
        Ok(s)
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_tau() {
            return write!(f, "{INTERNAL_LABEL}");
        }
        write!(f, "{}", self.direction.glyph())?;
        if let Some(t) = &self.target {
            write!(f, "{}", t.family)?;
            if let Some(ix) = &t.index {
                write!(f, "[{ix}]")?;
            }
            write!(f, ".")?;
        }
        write!(f, "{}(", self.label)?;
        for (k, a) in self.args.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// A parsed ground label, used for pattern matching and round-tripping.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroundLabel {
    pub direction: Direction,
    /// `Family[index].` decoration; index absent for unindexed families.
    pub target: Option<(String, Option<Value>)>,
    pub name: String,
    pub args: Vec<Value>,
}

impl GroundLabel {
    pub fn tau() -> Self {
        GroundLabel {
            direction: Direction::Tau,
            target: None,
            name: String::new(),
            args: Vec::new(),
        }
    }

    pub fn is_tau(&self) -> bool {
        self.direction == Direction::Tau
    }
}

impl fmt::Display for GroundLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_tau() {
            return write!(f, "{INTERNAL_LABEL}");
        }
        write!(f, "{}", self.direction.glyph())?;
        if let Some((fam, ix)) = &self.target {
            write!(f, "{fam}")?;
            if let Some(v) = ix {
                write!(f, "[{v}]")?;
            }
            write!(f, ".")?;
        }
        write!(f, "{}(", self.name)?;
        for (k, v) in self.args.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Parses a canonical ground label back into its structure.
///
/// `parse_ground_label` and [`GroundLabel`]'s `Display` are inverses on
/// canonical labels.
pub fn parse_ground_label(s: &str) -> Result<GroundLabel, String> {
    if s == INTERNAL_LABEL {
        return Ok(GroundLabel::tau());
    }
    let mut rest = s;
    let direction = if let Some(r) = rest.strip_prefix('!') {
        rest = r;
        Direction::Emit
    } else if let Some(r) = rest.strip_prefix('?') {
        rest = r;
        Direction::Receive
    } else {
        Direction::Plain
    };
    let open = rest
        .find('(')
        .ok_or_else(|| format!("label `{s}`: missing `(`"))?;
    if !rest.ends_with(')') {
        return Err(format!("label `{s}`: missing trailing `)`"));
    }
    let head = &rest[..open];
    let args_text = &rest[open + 1..rest.len() - 1];

    let (target, name) = match head.rfind('.') {
        Some(dot) => {
            let t = &head[..dot];
            let name = head[dot + 1..].to_string();
            let target = if let Some(br) = t.find('[') {
                if !t.ends_with(']') {
                    return Err(format!("label `{s}`: malformed target index"));
                }
                let fam = t[..br].to_string();
                let ix = parse_value(&t[br + 1..t.len() - 1])?;
                Some((fam, Some(ix)))
            } else {
                Some((t.to_string(), None))
            };
            (target, name)
        }
        None => (None, head.to_string()),
    };
    if name.is_empty() {
        return Err(format!("label `{s}`: empty name"));
    }
    let args = if args_text.is_empty() {
        Vec::new()
    } else {
        args_text
            .split(',')
            .map(parse_value)
            .collect::<Result<Vec<_>, _>>()?
    };
    Ok(GroundLabel {
        direction,
        target,
        name,
        args,
    })
}

fn parse_value(s: &str) -> Result<Value, String> {
    if s.is_empty() {
        return Err("empty value".to_string());
    }
    if s == "true" {
        return Ok(Value::Bool(true));
    }
    if s == "false" {
        return Ok(Value::Bool(false));
    }
    if s.chars().next().map_or(false, |c| c.is_ascii_digit() || c == '-') {
        return s
            .parse::<i64>()
            .map(Value::Int)
            .map_err(|_| format!("bad integer `{s}`"));
    }
    Ok(Value::Lit(s.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::Value;

    #[test]
    fn ground_plain_receive() {
        let a = Action::receive("Q_Cancel", vec![]);
        assert_eq!(a.ground(&Env::new()).unwrap(), "?Q_Cancel()");
    }

    #[test]
    fn ground_with_target_and_args() {
        let a = Action::emit("Q_Suggest", vec![Expr::var("d")])
            .with_target("Participant", Some(Expr::var("i")));
        let mut env = Env::new();
        env.set("i", Value::Int(1));
        env.set("d", Value::Lit("D1".into()));
        assert_eq!(a.ground(&env).unwrap(), "!Participant[1].Q_Suggest(D1)");
    }

    #[test]
    fn ground_tau() {
        assert_eq!(Action::tau().ground(&Env::new()).unwrap(), "i");
    }

    #[test]
    fn ground_unbound_var() {
        let a = Action::emit("A", vec![Expr::var("x")]);
        assert!(matches!(
            a.ground(&Env::new()),
            Err(EvalError::UnboundVariable(_))
        ));
    }

    #[test]
    fn label_round_trip() {
        for s in [
            "i",
            "?Q_Cancel()",
            "!Participant[1].Q_Suggest(D1)",
            "R_Suggest(2,true)",
            "?services[0].Q_suggest(date)",
            "!service.R_suggest(val)",
            "T_CollateResults(false)",
            "WaitN(3)",
        ] {
            let g = parse_ground_label(s).unwrap();
            assert_eq!(g.to_string(), s);
        }
    }

    #[test]
    fn malformed_labels_rejected() {
        for s in ["", "Q_Suggest", "Q(", "()", "!("] {
            assert!(parse_ground_label(s).is_err(), "{s:?}");
        }
    }
}

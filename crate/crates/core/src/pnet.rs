//! Parameterized networks: holes with index domains, sorts as action
//! patterns, and synchronisation vectors including the broadcast (BC) and
//! collect (CO) operators.

use crate::action::{Action, Direction, GroundLabel};
use crate::domain::{DataDomain, DomainDecl, Value};
use crate::error::EvalError;
use crate::expr::{Env, Expr};
use crate::plts::DomainRef;

/// One argument position of an action pattern: a wildcard, a typed domain
/// (sort patterns), or a fixed value (property patterns).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArgPattern {
    Any,
    Domain(DomainRef),
    Value(Value),
}

/// A pattern over ground labels. `args: None` (a bare name) matches any
/// argument list; otherwise arity and each position must match. A pattern
/// without a direction matches any direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionPattern {
    pub direction: Option<Direction>,
    pub name: String,
    pub args: Option<Vec<ArgPattern>>,
}

impl ActionPattern {
    pub fn bare(name: &str) -> Self {
        ActionPattern {
            direction: None,
            name: name.to_string(),
            args: None,
        }
    }

    pub fn new(name: &str, args: Vec<ArgPattern>) -> Self {
        ActionPattern {
            direction: None,
            name: name.to_string(),
            args: Some(args),
        }
    }

    pub fn free_vars(&self, out: &mut Vec<String>) {
        if let Some(args) = &self.args {
            for a in args {
                if let ArgPattern::Domain(DomainRef::Range(lo, hi)) = a {
                    lo.free_vars(out);
                    hi.free_vars(out);
                }
            }
        }
    }
}

/// An [`ActionPattern`] with domains resolved to concrete value sets, ready
/// to match ground labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundPattern {
    pub direction: Option<Direction>,
    pub name: String,
    pub args: Option<Vec<GroundArg>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroundArg {
    Any,
    Domain(DataDomain),
    Value(Value),
}

impl ActionPattern {
    pub fn ground(
        &self,
        domains: &[DomainDecl],
        env: &Env,
    ) -> Result<GroundPattern, EvalError> {
        let args = match &self.args {
            None => None,
            Some(args) => {
                let mut out = Vec::with_capacity(args.len());
                for a in args {
                    out.push(match a {
                        ArgPattern::Any => GroundArg::Any,
                        ArgPattern::Domain(d) => GroundArg::Domain(d.resolve(domains, env)?),
                        ArgPattern::Value(v) => GroundArg::Value(v.clone()),
                    });
                }
                Some(out)
            }
        };
        Ok(GroundPattern {
            direction: self.direction,
            name: self.name.clone(),
            args,
        })
    }
}

impl GroundPattern {
    pub fn matches(&self, label: &GroundLabel) -> bool {
        if label.is_tau() {
            return false;
        }
        if let Some(d) = self.direction {
            if d != label.direction {
                return false;
            }
        }
        if self.name != label.name {
            return false;
        }
        match &self.args {
            None => true,
            Some(pats) => {
                pats.len() == label.args.len()
                    && pats.iter().zip(&label.args).all(|(p, v)| match p {
                        GroundArg::Any => true,
                        GroundArg::Domain(d) => d.contains(v),
                        GroundArg::Value(w) => w == v,
                    })
            }
        }
    }
}

/// True if any pattern in the set matches the label.
pub fn sort_matches(patterns: &[GroundPattern], label: &GroundLabel) -> bool {
    patterns.iter().any(|p| p.matches(label))
}

/// A hole (process slot). An indexed hole `part[k: lo..hi]` stands for a
/// family of slots; the index variable name is kept for printing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hole {
    pub name: String,
    pub index: Option<HoleIndex>,
    /// The hole's sort: the action patterns fillers may exhibit.
    pub sort: Vec<ActionPattern>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoleIndex {
    pub var: String,
    pub lo: Expr,
    pub hi: Expr,
}

/// One entry of a synchronisation vector. Holes without an entry idle (`*`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VectorEntry {
    /// One participating slot: an unindexed hole, or member `index` of a
    /// family.
    Single {
        hole: String,
        index: Option<Expr>,
        action: Action,
    },
    /// BC: every member of the family in `lo..hi` fires `action` (with the
    /// bound variable substituted) in the same synchronized step.
    Broadcast {
        hole: String,
        var: String,
        lo: Expr,
        hi: Expr,
        action: Action,
    },
    /// CO: exactly one member of the family fires; expands to one ground
    /// vector per index, the rest of the family idling.
    Collect {
        hole: String,
        var: String,
        lo: Expr,
        hi: Expr,
        action: Action,
    },
    /// Explicit idle marker, written `hole.*`.
    Idle { hole: String },
}

impl VectorEntry {
    pub fn hole(&self) -> &str {
        match self {
            VectorEntry::Single { hole, .. }
            | VectorEntry::Broadcast { hole, .. }
            | VectorEntry::Collect { hole, .. }
            | VectorEntry::Idle { hole } => hole,
        }
    }
}

/// A parameterized synchronisation vector: at most one entry per hole; free
/// variables of the global action must be bound by entry actions, BC/CO
/// binders, explicit `any` binders, or pNet parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyncVector {
    pub global: Action,
    /// Explicit domains for free message variables; variables not listed
    /// here have their domains inferred from hole sorts.
    pub binders: Vec<(String, DomainRef)>,
    pub entries: Vec<VectorEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PNet {
    pub name: String,
    pub params: Vec<(String, DomainRef)>,
    /// The net's global sort `pA_G`.
    pub global_sort: Vec<ActionPattern>,
    /// The observed sort: global actions outside it are hidden to `i` in the
    /// net's exported behaviour. `None` observes everything.
    pub observed: Option<Vec<ActionPattern>>,
    pub holes: Vec<Hole>,
    pub vectors: Vec<SyncVector>,
}

impl PNet {
    pub fn hole(&self, name: &str) -> Option<&Hole> {
        self.holes.iter().find(|h| h.name == name)
    }

    /// Structural validation: entries reference declared holes, at most one
    /// entry per hole, BC/CO not mixed in one vector, and at most one CO.
    pub fn validate(&self) -> Result<(), String> {
        for v in &self.vectors {
            let mut seen: Vec<&str> = Vec::new();
            let mut bc = 0usize;
            let mut co = 0usize;
            for e in &v.entries {
                let h = e.hole();
                if self.hole(h).is_none() {
                    return Err(format!(
                        "pNet `{}`: vector `{}` references unknown hole `{h}`",
                        self.name, v.global
                    ));
                }
                if seen.contains(&h) {
                    return Err(format!(
                        "pNet `{}`: vector `{}` has two entries for hole `{h}`",
                        self.name, v.global
                    ));
                }
                seen.push(h);
                match e {
                    VectorEntry::Broadcast { .. } => bc += 1,
                    VectorEntry::Collect { .. } => co += 1,
                    _ => {}
                }
            }
            if bc > 0 && co > 0 {
                return Err(format!(
                    "pNet `{}`: vector `{}` mixes BC and CO entries",
                    self.name, v.global
                ));
            }
            if co > 1 {
                return Err(format!(
                    "pNet `{}`: vector `{}` has more than one CO entry",
                    self.name, v.global
                ));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::parse_ground_label;

    #[test]
    fn pattern_matching() {
        let decls = [DomainDecl {
            name: "Data".into(),
            domain: DataDomain::enumeration(["D1", "D2"]),
        }];
        let env = Env::new();

        let typed = ActionPattern::new("Q_Suggest", vec![ArgPattern::Domain(DomainRef::named("Data"))])
            .ground(&decls, &env)
            .unwrap();
        assert!(typed.matches(&parse_ground_label("Q_Suggest(D1)").unwrap()));
        assert!(!typed.matches(&parse_ground_label("Q_Suggest(D3)").unwrap()));
        assert!(!typed.matches(&parse_ground_label("Q_Suggest(D1,D2)").unwrap()));

        let bare = ActionPattern::bare("Error").ground(&decls, &env).unwrap();
        assert!(bare.matches(&parse_ground_label("Error()").unwrap()));
        assert!(bare.matches(&parse_ground_label("!Error()").unwrap()));
        assert!(!bare.matches(&parse_ground_label("Errors()").unwrap()));

        let wild = ActionPattern::new(
            "R_Suggest",
            vec![ArgPattern::Any, ArgPattern::Value(Value::Bool(true))],
        )
        .ground(&decls, &env)
        .unwrap();
        assert!(wild.matches(&parse_ground_label("R_Suggest(2,true)").unwrap()));
        assert!(!wild.matches(&parse_ground_label("R_Suggest(2,false)").unwrap()));

        // tau never matches a named pattern
        assert!(!bare.matches(&GroundLabel::tau()));
    }
}

//! Parameterized networks of synchronised labelled transition systems.
//!
//! The crate builds, instantiates, composes, minimizes, and checks networks
//! of parameterized LTSs with group-communication synchronisation vectors
//! (broadcast and collect operators). It ships a textual model language, a
//! library of reusable behavioural components (bounded FIFO request queues,
//! group-of-futures proxies, serve-loop bodies) and a complete
//! meeting-scheduler example system, plus Aldebaran (AUT) and DOT export.

pub mod action;
pub mod aut;
pub mod check;
pub mod domain;
pub mod dsl;
pub mod error;
pub mod expand;
pub mod expr;
pub mod grouplib;
pub mod lts;
pub mod model;
pub mod plts;
pub mod pnet;
pub mod product;
pub mod reduce;

pub use action::{parse_ground_label, Action, Direction, GroundLabel, INTERNAL_LABEL};
pub use domain::{DataDomain, DomainDecl, Value};
pub use error::{EvalError, ExpandError};
pub use expr::{eval_expr, Env, Expr};
pub use lts::Lts;
pub use model::{Fill, ModelFile};
pub use plts::{Assign, DomainRef, LValue, PLts, Transition, VarDecl, VarType};
pub use pnet::{ActionPattern, ArgPattern, GroundPattern, Hole, PNet, SyncVector, VectorEntry};

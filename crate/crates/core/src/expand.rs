//! Instantiation of parameterized objects into ground ones: pLTS to LTS
//! under a parameter valuation, synchronisation vectors (including BC/CO)
//! to ground vector sets, and indexed holes to flat slot lists.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::action::Action;
use crate::domain::{DataDomain, Value};
use crate::error::{EvalError, ExpandError};
use crate::expr::{eval_bool, eval_expr, eval_int, Binding, Env, Expr};
use crate::lts::{Lts, LtsBuilder};
use crate::model::ModelFile;
use crate::plts::{
    resolve_range, valuations, Assign, DomainRef, LValue, PLts, VarType,
};
use crate::pnet::{ActionPattern, GroundPattern, Hole, PNet, SyncVector, VectorEntry};

/// Default cap on reachable configurations per instantiation or product.
pub const DEFAULT_STATE_CAP: usize = 10_000_000;

/// A total assignment of concrete values to parameters.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Instantiation {
    bindings: BTreeMap<String, Value>,
}

impl Instantiation {
    pub fn new() -> Self {
        Instantiation::default()
    }

    pub fn bind(mut self, name: &str, v: Value) -> Self {
        self.bindings.insert(name.to_string(), v);
        self
    }

    pub fn bind_int(self, name: &str, v: i64) -> Self {
        self.bind(name, Value::Int(v))
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.bindings.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Value)> {
        self.bindings.iter()
    }

    /// Parses `name=value,...`; values are integers, booleans, or literals.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut inst = Instantiation::new();
        for part in text.split(',').filter(|p| !p.trim().is_empty()) {
            let (name, value) = part
                .split_once('=')
                .ok_or_else(|| format!("bad binding `{part}`, expected name=value"))?;
            let value = value.trim();
            let v = if value == "true" {
                Value::Bool(true)
            } else if value == "false" {
                Value::Bool(false)
            } else if let Ok(n) = value.parse::<i64>() {
                Value::Int(n)
            } else {
                Value::Lit(value.to_string())
            };
            inst.bindings.insert(name.trim().to_string(), v);
        }
        Ok(inst)
    }
}

impl fmt::Display for Instantiation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in &self.bindings {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{k}={v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Builds the parameter environment for an object's declared parameters.
pub fn param_env(
    model: &ModelFile,
    params: &[(String, DomainRef)],
    inst: &Instantiation,
) -> Result<Env, ExpandError> {
    let mut env = Env::new();
    for (name, domref) in params {
        let v = inst
            .get(name)
            .ok_or_else(|| ExpandError::MissingParam(name.clone()))?;
        let dom = domref.resolve(&model.domains, &env)?;
        if !dom.contains(v) {
            return Err(ExpandError::OutOfDomain {
                param: name.clone(),
                value: v.to_string(),
            });
        }
        env.set(name, v.clone());
    }
    Ok(env)
}

/// One slot of an instantiated hole family.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HoleSlot {
    pub hole: String,
    pub index: Option<i64>,
}

impl fmt::Display for HoleSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "{}[{i}]", self.hole),
            None => write!(f, "{}", self.hole),
        }
    }
}

/// Flattens a net's holes into slots, in declaration order with ascending
/// indices.
pub fn expand_holes(
    model: &ModelFile,
    net: &PNet,
    inst: &Instantiation,
) -> Result<Vec<HoleSlot>, ExpandError> {
    let env = param_env(model, &net.params, inst)?;
    let mut slots = Vec::new();
    for h in &net.holes {
        match &h.index {
            None => slots.push(HoleSlot {
                hole: h.name.clone(),
                index: None,
            }),
            Some(ix) => {
                let (lo, hi) = resolve_range(&ix.lo, &ix.hi, &env)?;
                for i in lo..=hi {
                    slots.push(HoleSlot {
                        hole: h.name.clone(),
                        index: Some(i),
                    });
                }
            }
        }
    }
    Ok(slots)
}

/// A ground synchronisation vector over an instantiated slot list: the
/// exhibited global label plus one ground label or idle per slot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundVector {
    pub global: String,
    pub cells: Vec<Option<String>>,
}

impl GroundVector {
    /// Renders in display style: `<global, cell, ...>` with `*` for idle
    /// slots; a plain zero-argument global shows as the bare label.
    pub fn render(&self) -> String {
        let mut head = self.global.clone();
        if head.ends_with("()")
            && head
                .chars()
                .next()
                .map_or(false, |c| c.is_alphanumeric() || c == '_')
        {
            head.truncate(head.len() - 2);
        }
        let mut s = format!("<{head}");
        for c in &self.cells {
            s.push_str(", ");
            s.push_str(c.as_deref().unwrap_or("*"));
        }
        s.push('>');
        s
    }
}

/// Expands every vector of `net` under `inst` into ground vectors over the
/// net's instantiated slots. BC entries produce one synchronized cell per
/// family member in one vector; CO entries produce one vector per member.
pub fn expand_vectors(
    model: &ModelFile,
    net: &PNet,
    inst: &Instantiation,
) -> Result<Vec<GroundVector>, ExpandError> {
    let slots = expand_holes(model, net, inst)?;
    let mut out = Vec::new();
    for v in &net.vectors {
        expand_vector_into(model, net, v, inst, &slots, &mut out)?;
    }
    Ok(out)
}

/// Expands a single vector; exposed for the expansion oracle tests.
pub fn expand_vector(
    model: &ModelFile,
    net: &PNet,
    vector: &SyncVector,
    inst: &Instantiation,
) -> Result<Vec<GroundVector>, ExpandError> {
    let slots = expand_holes(model, net, inst)?;
    let mut out = Vec::new();
    expand_vector_into(model, net, vector, inst, &slots, &mut out)?;
    Ok(out)
}

fn expand_vector_into(
    model: &ModelFile,
    net: &PNet,
    v: &SyncVector,
    inst: &Instantiation,
    slots: &[HoleSlot],
    out: &mut Vec<GroundVector>,
) -> Result<(), ExpandError> {
    let params = param_env(model, &net.params, inst)?;
    let vector_name = v.global.to_string();

    // Classify entries and find the CO entry, if any.
    let mut collect: Option<(&str, &str, &Expr, &Expr, &Action)> = None;
    for e in &v.entries {
        match e {
            VectorEntry::Collect {
                hole,
                var,
                lo,
                hi,
                action,
            } => {
                if collect.is_some() {
                    return Err(ExpandError::MultipleCollect(vector_name));
                }
                collect = Some((hole, var, lo, hi, action));
            }
            VectorEntry::Broadcast { .. } if collect.is_some() => {
                return Err(ExpandError::MixedVector(vector_name));
            }
            _ => {}
        }
    }
    if collect.is_some()
        && v.entries
            .iter()
            .any(|e| matches!(e, VectorEntry::Broadcast { .. }))
    {
        return Err(ExpandError::MixedVector(vector_name));
    }

    // Free message variables: everything mentioned by the global or entry
    // actions that is not a parameter and not BC/CO-bound.
    let mut mentioned = Vec::new();
    v.global.free_vars(&mut mentioned);
    for e in &v.entries {
        match e {
            VectorEntry::Single { index, action, .. } => {
                if let Some(ix) = index {
                    ix.free_vars(&mut mentioned);
                }
                action.free_vars(&mut mentioned);
            }
            VectorEntry::Broadcast { var, action, .. }
            | VectorEntry::Collect { var, action, .. } => {
                let mut inner = Vec::new();
                action.free_vars(&mut inner);
                mentioned.extend(inner.into_iter().filter(|n| n != var));
            }
            VectorEntry::Idle { .. } => {}
        }
    }
    if let Some((_, var, _, _, _)) = collect {
        mentioned.retain(|n| n != var);
    }
    let mut free: Vec<String> = Vec::new();
    for n in mentioned {
        if params.get(&n).is_none() && !free.contains(&n) {
            free.push(n);
        }
    }

    // Domains: explicit binders first, then inference from hole sorts and
    // the net's global sort.
    let mut binder_doms: Vec<(String, DataDomain)> = Vec::new();
    for name in &free {
        let dom = if let Some((_, dr)) = v.binders.iter().find(|(b, _)| b == name) {
            dr.resolve(&model.domains, &params)?
        } else {
            infer_var_domain(model, net, v, name, &params)?.ok_or_else(|| {
                ExpandError::UnresolvedVar {
                    vector: vector_name.clone(),
                    var: name.clone(),
                }
            })?
        };
        binder_doms.push((name.clone(), dom));
    }

    let slot_pos = |hole: &str, index: Option<i64>| -> Result<usize, ExpandError> {
        slots
            .iter()
            .position(|s| s.hole == hole && s.index == index)
            .ok_or_else(|| ExpandError::UnknownHole {
                vector: vector_name.clone(),
                hole: match index {
                    Some(i) => format!("{hole}[{i}]"),
                    None => hole.to_string(),
                },
            })
    };

    for valuation in valuations(&binder_doms) {
        let mut env = params.clone();
        for (n, val) in &valuation {
            env.set(n, val.clone());
        }
        match collect {
            None => {
                let mut cells: Vec<Option<String>> = vec![None; slots.len()];
                for e in &v.entries {
                    match e {
                        VectorEntry::Single {
                            hole,
                            index,
                            action,
                        } => {
                            let ix = index
                                .as_ref()
                                .map(|x| eval_int(x, &env))
                                .transpose()
                                .map_err(ExpandError::Eval)?;
                            let pos = slot_pos(hole, ix)?;
                            cells[pos] = Some(action.ground(&env)?);
                        }
                        VectorEntry::Broadcast {
                            hole,
                            var,
                            lo,
                            hi,
                            action,
                        } => {
                            let (lo, hi) = resolve_range(lo, hi, &env)?;
                            if lo > hi {
                                return Err(ExpandError::EmptyRange {
                                    vector: vector_name.clone(),
                                    lo,
                                    hi,
                                });
                            }
                            let mut member_env = env.clone();
                            for i in lo..=hi {
                                member_env.set(var, Value::Int(i));
                                let pos = slot_pos(hole, Some(i))?;
                                cells[pos] = Some(action.ground(&member_env)?);
                            }
                        }
                        VectorEntry::Collect { .. } => unreachable!(),
                        VectorEntry::Idle { .. } => {}
                    }
                }
                out.push(GroundVector {
                    global: v.global.ground(&env)?,
                    cells,
                });
            }
            Some((hole, var, lo, hi, action)) => {
                let (lo, hi) = resolve_range(lo, hi, &env)?;
                if lo > hi {
                    return Err(ExpandError::EmptyRange {
                        vector: vector_name.clone(),
                        lo,
                        hi,
                    });
                }
                for i in lo..=hi {
                    let mut co_env = env.clone();
                    co_env.set(var, Value::Int(i));
                    let mut cells: Vec<Option<String>> = vec![None; slots.len()];
                    let pos = slot_pos(hole, Some(i))?;
                    cells[pos] = Some(action.ground(&co_env)?);
                    for e in &v.entries {
                        if let VectorEntry::Single {
                            hole,
                            index,
                            action,
                        } = e
                        {
                            let ix = index
                                .as_ref()
                                .map(|x| eval_int(x, &co_env))
                                .transpose()
                                .map_err(ExpandError::Eval)?;
                            let pos = slot_pos(hole, ix)?;
                            cells[pos] = Some(action.ground(&co_env)?);
                        }
                    }
                    out.push(GroundVector {
                        global: v.global.ground(&co_env)?,
                        cells,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Infers the domain of a free vector variable from the sort patterns of the
/// holes its entries touch, or from the net's global sort.
fn infer_var_domain(
    model: &ModelFile,
    net: &PNet,
    v: &SyncVector,
    var: &str,
    params: &Env,
) -> Result<Option<DataDomain>, ExpandError> {
    let mut try_patterns =
        |action: &Action, sort: &[ActionPattern]| -> Result<Option<DataDomain>, ExpandError> {
            for p in sort {
                if p.name != action.label {
                    continue;
                }
                let Some(pargs) = &p.args else { continue };
                if pargs.len() != action.args.len() {
                    continue;
                }
                for (k, a) in action.args.iter().enumerate() {
                    if let Expr::Var(n) = a {
                        if n == var {
                            if let crate::pnet::ArgPattern::Domain(dr) = &pargs[k] {
                                return Ok(Some(dr.resolve(&model.domains, params)?));
                            }
                        }
                    }
                }
            }
            Ok(None)
        };

    for e in &v.entries {
        let (hole, action) = match e {
            VectorEntry::Single { hole, action, .. }
            | VectorEntry::Broadcast { hole, action, .. }
            | VectorEntry::Collect { hole, action, .. } => (hole, action),
            VectorEntry::Idle { .. } => continue,
        };
        if let Some(h) = net.hole(hole) {
            if let Some(dom) = try_patterns(action, &h.sort)? {
                return Ok(Some(dom));
            }
        }
    }
    try_patterns(&v.global, &net.global_sort)
}

/// Grounds a pattern list under an instantiation.
pub fn ground_patterns(
    model: &ModelFile,
    params: &[(String, DomainRef)],
    patterns: &[ActionPattern],
    inst: &Instantiation,
) -> Result<Vec<GroundPattern>, ExpandError> {
    let env = param_env(model, params, inst)?;
    let mut out = Vec::with_capacity(patterns.len());
    for p in patterns {
        out.push(p.ground(&model.domains, &env)?);
    }
    Ok(out)
}

struct ResolvedVar {
    name: String,
    kind: ResolvedKind,
    init: Binding,
}

enum ResolvedKind {
    Scalar(DataDomain),
    Array { elem: DataDomain, len: usize },
}

fn resolve_vars(model: &ModelFile, p: &PLts, params: &Env) -> Result<Vec<ResolvedVar>, ExpandError> {
    let mut out = Vec::new();
    for v in &p.vars {
        let (kind, init) = match &v.ty {
            VarType::Scalar(dr) => {
                let dom = dr.resolve(&model.domains, params)?;
                let init = match &v.init {
                    Some(e) => {
                        let val = eval_expr(e, params, Some(&dom))?;
                        Binding::Scalar(val)
                    }
                    None => Binding::Scalar(dom.first()),
                };
                (ResolvedKind::Scalar(dom), init)
            }
            VarType::Array { elem, len } => {
                let dom = elem.resolve(&model.domains, params)?;
                let n = eval_int(len, params)?;
                if n < 0 {
                    return Err(ExpandError::Eval(EvalError::RangeViolation {
                        context: format!("array length of `{}`", v.name),
                        value: n.to_string(),
                        domain: "0..".to_string(),
                    }));
                }
                let cell = match &v.init {
                    Some(e) => eval_expr(e, params, Some(&dom))?,
                    None => dom.first(),
                };
                (
                    ResolvedKind::Array {
                        elem: dom,
                        len: n as usize,
                    },
                    Binding::Array(vec![cell; n as usize]),
                )
            }
        };
        out.push(ResolvedVar {
            name: v.name.clone(),
            kind,
            init,
        });
    }
    Ok(out)
}

fn apply_assigns(
    assigns: &[Assign],
    pre: &Env,
    vars: &[ResolvedVar],
) -> Result<Vec<(String, Binding)>, EvalError> {
    let mut writes: Vec<(String, Binding)> = Vec::new();
    let find = |name: &str| vars.iter().find(|v| v.name == name);
    // All right-hand sides read the pre-state; writes land on a copy.
    let mut staged: BTreeMap<String, Binding> = BTreeMap::new();
    let mut stage = |name: &str, env: &Env| {
        if !staged.contains_key(name) {
            staged.insert(name.to_string(), env.get(name).unwrap().clone());
        }
    };
    for a in assigns {
        match a {
            Assign::Set { target, value } => match target {
                LValue::Var(name) => {
                    let rv = find(name).ok_or_else(|| EvalError::UnboundVariable(name.clone()))?;
                    let dom = match &rv.kind {
                        ResolvedKind::Scalar(d) => d,
                        ResolvedKind::Array { .. } => {
                            return Err(EvalError::TypeMismatch {
                                context: name.clone(),
                                expected: "scalar target".to_string(),
                                got: "array".to_string(),
                            })
                        }
                    };
                    let val = eval_expr(value, pre, Some(dom))?;
                    staged.insert(name.clone(), Binding::Scalar(val));
                }
                LValue::Cell { array, index } => {
                    let rv = find(array).ok_or_else(|| EvalError::UnboundVariable(array.clone()))?;
                    let (elem, len) = match &rv.kind {
                        ResolvedKind::Array { elem, len } => (elem, *len),
                        ResolvedKind::Scalar(_) => return Err(EvalError::NotAnArray(array.clone())),
                    };
                    let i = eval_int(index, pre)?;
                    if i < 0 || i as usize >= len {
                        return Err(EvalError::IndexOutOfBounds {
                            array: array.clone(),
                            index: i,
                            len,
                        });
                    }
                    let val = eval_expr(value, pre, Some(elem))?;
                    stage(array, pre);
                    if let Some(Binding::Array(cells)) = staged.get_mut(array) {
                        cells[i as usize] = val;
                    }
                }
            },
            Assign::Spread {
                array,
                index_var,
                lo,
                hi,
                value,
            } => {
                let rv = find(array).ok_or_else(|| EvalError::UnboundVariable(array.clone()))?;
                let (elem, len) = match &rv.kind {
                    ResolvedKind::Array { elem, len } => (elem, *len),
                    ResolvedKind::Scalar(_) => return Err(EvalError::NotAnArray(array.clone())),
                };
                let lo = eval_int(lo, pre)?;
                let hi = eval_int(hi, pre)?;
                stage(array, pre);
                let mut env = pre.clone();
                for j in lo..=hi {
                    if j < 0 || j as usize >= len {
                        return Err(EvalError::IndexOutOfBounds {
                            array: array.clone(),
                            index: j,
                            len,
                        });
                    }
                    env.set(index_var, Value::Int(j));
                    let val = eval_expr(value, &env, Some(elem))?;
                    if let Some(Binding::Array(cells)) = staged.get_mut(array) {
                        cells[j as usize] = val;
                    }
                }
            }
        }
    }
    for (k, v) in staged {
        writes.push((k, v));
    }
    Ok(writes)
}

/// Instantiates a pLTS under a total parameter valuation: the reachable
/// (control state, variable valuation) configurations become LTS states,
/// numbered in BFS discovery order with the initial configuration at 0.
pub fn instantiate_plts(
    model: &ModelFile,
    p: &PLts,
    inst: &Instantiation,
    cap: usize,
) -> Result<Lts, ExpandError> {
    let params = param_env(model, &p.params, inst)?;
    let vars = resolve_vars(model, p, &params)?;

    let init_ctrl = p
        .state_index(&p.initial)
        .ok_or_else(|| ExpandError::UnknownName(p.initial.clone()))? as u32;

    // Pre-resolve input binder domains per transition and group by source.
    let mut by_ctrl: Vec<Vec<(usize, Vec<(String, DataDomain)>)>> = vec![Vec::new(); p.states.len()];
    for (ti, t) in p.transitions.iter().enumerate() {
        let from = p.state_index(&t.from).unwrap();
        let mut binders = Vec::new();
        for (n, dr) in &t.inputs {
            binders.push((n.clone(), dr.resolve(&model.domains, &params)?));
        }
        by_ctrl[from].push((ti, binders));
    }

    let initial_vals: Vec<Binding> = vars.iter().map(|v| v.init.clone()).collect();

    let mut builder = LtsBuilder::new();
    let mut index: HashMap<(u32, Vec<Binding>), u32> = HashMap::new();
    let mut queue: VecDeque<(u32, Vec<Binding>)> = VecDeque::new();
    let mut emitted: HashSet<(u32, u32, u32)> = HashSet::new();

    let key0 = (init_ctrl, initial_vals);
    index.insert(key0.clone(), 0);
    queue.push_back(key0);
    builder.ensure_states(1);

    while let Some((ctrl, vals)) = queue.pop_front() {
        let src = index[&(ctrl, vals.clone())];
        let mut env = params.clone();
        for (v, b) in vars.iter().zip(&vals) {
            match b {
                Binding::Scalar(val) => env.set(&v.name, val.clone()),
                Binding::Array(cells) => env.set_array(&v.name, cells.clone()),
            }
        }
        for (ti, binders) in &by_ctrl[ctrl as usize] {
            let t = &p.transitions[*ti];
            for valuation in valuations(binders) {
                let mut tenv = env.clone();
                for (n, val) in &valuation {
                    tenv.set(n, val.clone());
                }
                if let Some(g) = &t.guard {
                    if !eval_bool(g, &tenv).map_err(ExpandError::Eval)? {
                        continue;
                    }
                }
                let label = t.action.ground(&tenv).map_err(ExpandError::Eval)?;
                let writes = apply_assigns(&t.assigns, &tenv, &vars).map_err(ExpandError::Eval)?;
                let mut next_vals = vals.clone();
                for (name, binding) in writes {
                    let pos = vars.iter().position(|v| v.name == name).unwrap();
                    next_vals[pos] = binding;
                }
                let next_ctrl = p.state_index(&t.to).unwrap() as u32;
                let key = (next_ctrl, next_vals);
                let dst = match index.get(&key) {
                    Some(&d) => d,
                    None => {
                        let d = index.len() as u32;
                        if index.len() >= cap {
                            return Err(ExpandError::StateExplosion(cap));
                        }
                        index.insert(key.clone(), d);
                        queue.push_back(key);
                        d
                    }
                };
                let lid = builder.intern(&label);
                if emitted.insert((src, lid, dst)) {
                    builder.push_id(src, lid, dst);
                }
            }
        }
    }
    builder.ensure_states(index.len() as u32);
    Ok(builder.finish())
}

/// The set of ground labels an instantiated pLTS can ever exhibit, by the
/// syntactic over-approximation: every transition's action evaluated under
/// all valuations of the variables it mentions.
pub fn sort_of(
    model: &ModelFile,
    p: &PLts,
    inst: &Instantiation,
) -> Result<BTreeSet<String>, ExpandError> {
    let params = param_env(model, &p.params, inst)?;
    let vars = resolve_vars(model, p, &params)?;
    let mut out = BTreeSet::new();
    for t in &p.transitions {
        let mut mentioned = Vec::new();
        t.action.free_vars(&mut mentioned);

        // Split mentions into scalar binders and whole arrays.
        let mut scalar_binders: Vec<(String, DataDomain)> = Vec::new();
        let mut array_mentions: Vec<(String, DataDomain, usize)> = Vec::new();
        for name in mentioned {
            if params.get(&name).is_some() {
                continue;
            }
            if let Some(v) = vars.iter().find(|v| v.name == name) {
                match &v.kind {
                    ResolvedKind::Scalar(d) => scalar_binders.push((name, d.clone())),
                    ResolvedKind::Array { elem, len } => {
                        array_mentions.push((name, elem.clone(), *len))
                    }
                }
            } else if let Some((_, dr)) = t.inputs.iter().find(|(n, _)| n == &name) {
                scalar_binders.push((name, dr.resolve(&model.domains, &params)?));
            } else {
                return Err(ExpandError::Eval(EvalError::UnboundVariable(name)));
            }
        }

        // Enumerate array contents cell-wise via synthetic scalar binders.
        let mut all_binders = scalar_binders;
        let array_plans: Vec<(String, usize, usize)> = array_mentions
            .iter()
            .map(|(name, elem, len)| {
                let start = all_binders.len();
                for k in 0..*len {
                    all_binders.push((format!("{name}#{k}"), elem.clone()));
                }
                (name.clone(), start, *len)
            })
            .collect();

        for valuation in valuations(&all_binders) {
            let mut env = params.clone();
            for (n, val) in &valuation {
                if !n.contains('#') {
                    env.set(n, val.clone());
                }
            }
            for (name, start, len) in &array_plans {
                let cells: Vec<Value> = (0..*len)
                    .map(|k| valuation[start + k].1.clone())
                    .collect();
                env.set_array(name, cells);
            }
            out.insert(t.action.ground(&env).map_err(ExpandError::Eval)?);
        }
    }
    Ok(out)
}

/// Grounds a hole's declared sort.
pub fn ground_hole_sort(
    model: &ModelFile,
    net: &PNet,
    hole: &Hole,
    inst: &Instantiation,
) -> Result<Vec<GroundPattern>, ExpandError> {
    ground_patterns(model, &net.params, &hole.sort, inst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::Action;
    use crate::domain::DataDomain;
    use crate::plts::{Transition, VarDecl};

    fn tiny_plts() -> PLts {
        // 1 control state, var n: 0..1 = 0, self-loop a() when n=0 do n:=1.
        PLts {
            name: "T".into(),
            params: vec![],
            vars: vec![VarDecl {
                name: "n".into(),
                ty: VarType::Scalar(DomainRef::range_lit(0, 1)),
                init: None,
            }],
            states: vec!["s".into()],
            initial: "s".into(),
            transitions: vec![Transition {
                from: "s".into(),
                to: "s".into(),
                inputs: vec![],
                action: Action::plain("a", vec![]),
                guard: Some(Expr::eq(Expr::var("n"), Expr::Int(0))),
                assigns: vec![Assign::Set {
                    target: LValue::Var("n".into()),
                    value: Expr::Int(1),
                }],
            }],
        }
    }

    #[test]
    fn tiny_instantiation() {
        let model = ModelFile::default();
        let lts = instantiate_plts(&model, &tiny_plts(), &Instantiation::new(), 1000).unwrap();
        assert_eq!(lts.num_states, 2);
        assert_eq!(lts.num_transitions(), 1);
        assert_eq!(lts.transitions[0], (0, 0, 1));
        assert_eq!(lts.label(0), "a()");
    }

    #[test]
    fn sort_of_single_transition() {
        let model = ModelFile::default();
        let mut p = tiny_plts();
        p.transitions[0].action = Action::receive("Q_Cancel", vec![]);
        let s = sort_of(&model, &p, &Instantiation::new()).unwrap();
        assert_eq!(s.into_iter().collect::<Vec<_>>(), vec!["?Q_Cancel()"]);
    }

    #[test]
    fn sort_of_empty_plts() {
        let model = ModelFile::default();
        let mut p = tiny_plts();
        p.transitions.clear();
        let s = sort_of(&model, &p, &Instantiation::new()).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn state_cap_enforced() {
        let model = ModelFile::default();
        let mut p = tiny_plts();
        p.vars[0].ty = VarType::Scalar(DomainRef::range_lit(0, 100));
        p.transitions[0].guard = Some(Expr::le(Expr::var("n"), Expr::Int(99)));
        p.transitions[0].assigns = vec![Assign::Set {
            target: LValue::Var("n".into()),
            value: Expr::add(Expr::var("n"), Expr::Int(1)),
        }];
        let r = instantiate_plts(&model, &p, &Instantiation::new(), 10);
        assert!(matches!(r, Err(ExpandError::StateExplosion(10))));
    }
}

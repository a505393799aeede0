//! Ground finite labelled transition systems.
//!
//! States are dense 0-based integers with the initial state at 0. Labels are
//! interned strings; the internal action is the label `i`.

use std::collections::HashMap;

use crate::action::INTERNAL_LABEL;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lts {
    pub num_states: u32,
    /// Interned label strings; transition labels index into this table.
    pub labels: Vec<String>,
    /// `(src, label id, dst)` triples.
    pub transitions: Vec<(u32, u32, u32)>,
}

impl Lts {
    /// The empty-behaviour LTS: one state, no transitions.
    pub fn empty() -> Self {
        Lts {
            num_states: 1,
            labels: Vec::new(),
            transitions: Vec::new(),
        }
    }

    pub fn num_transitions(&self) -> usize {
        self.transitions.len()
    }

    pub fn label(&self, id: u32) -> &str {
        &self.labels[id as usize]
    }

    pub fn label_id(&self, label: &str) -> Option<u32> {
        self.labels.iter().position(|l| l == label).map(|i| i as u32)
    }

    pub fn tau_id(&self) -> Option<u32> {
        self.label_id(INTERNAL_LABEL)
    }

    /// The set of distinct labels appearing on transitions.
    pub fn used_labels(&self) -> Vec<&str> {
        let mut seen = vec![false; self.labels.len()];
        for &(_, l, _) in &self.transitions {
            seen[l as usize] = true;
        }
        self.labels
            .iter()
            .enumerate()
            .filter(|(i, _)| seen[*i])
            .map(|(_, l)| l.as_str())
            .collect()
    }

    /// Outgoing adjacency: for each state, indices into `transitions`.
    pub fn outgoing(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.num_states as usize];
        for (k, &(s, _, _)) in self.transitions.iter().enumerate() {
            out[s as usize].push(k as u32);
        }
        out
    }

    /// Checks the structural invariants: endpoints and label ids in range.
    pub fn validate(&self) -> Result<(), String> {
        if self.num_states == 0 {
            return Err("LTS must have at least one state".to_string());
        }
        for &(s, l, d) in &self.transitions {
            if s >= self.num_states || d >= self.num_states {
                return Err(format!("transition ({s},{l},{d}) out of state range"));
            }
            if l as usize >= self.labels.len() {
                return Err(format!("transition ({s},{l},{d}) has bad label id"));
            }
        }
        Ok(())
    }
}

/// Incremental LTS builder interning labels and states.
#[derive(Debug, Default)]
pub struct LtsBuilder {
    labels: Vec<String>,
    label_ids: HashMap<String, u32>,
    transitions: Vec<(u32, u32, u32)>,
    num_states: u32,
}

impl LtsBuilder {
    pub fn new() -> Self {
        LtsBuilder::default()
    }

    pub fn intern(&mut self, label: &str) -> u32 {
        if let Some(&id) = self.label_ids.get(label) {
            return id;
        }
        let id = self.labels.len() as u32;
        self.labels.push(label.to_string());
        self.label_ids.insert(label.to_string(), id);
        id
    }

    pub fn ensure_states(&mut self, n: u32) {
        self.num_states = self.num_states.max(n);
    }

    pub fn push(&mut self, src: u32, label: &str, dst: u32) {
        let l = self.intern(label);
        self.transitions.push((src, l, dst));
        self.ensure_states(src.max(dst) + 1);
    }

    pub fn push_id(&mut self, src: u32, label_id: u32, dst: u32) {
        self.transitions.push((src, label_id, dst));
        self.ensure_states(src.max(dst) + 1);
    }

    pub fn finish(self) -> Lts {
        Lts {
            num_states: self.num_states.max(1),
            labels: self.labels,
            transitions: self.transitions,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_behaviour() {
        let l = Lts::empty();
        assert_eq!(l.num_states, 1);
        assert_eq!(l.num_transitions(), 0);
        l.validate().unwrap();
    }

    #[test]
    fn builder_interns() {
        let mut b = LtsBuilder::new();
        b.push(0, "a()", 1);
        b.push(1, "a()", 0);
        b.push(0, "b()", 0);
        let l = b.finish();
        assert_eq!(l.labels.len(), 2);
        assert_eq!(l.num_states, 2);
        l.validate().unwrap();
    }
}

//! Weights in epsilon-coordinates and formal characters.
//!
//! An `sl_{n+1}` weight is a class modulo the all-ones vector; the stored
//! representative is normalized so its minimum coordinate is 0, which makes
//! character comparison plain equality of maps.

use serde::Serialize;
use std::collections::BTreeMap;

/// A normalized weight: integer epsilon-coordinates with minimum 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    /// Normalize arbitrary epsilon-coordinates.
    pub fn from_raw(mut coords: Vec<i64>) -> Weight {
        let min = coords.iter().copied().min().unwrap_or(0);
        for c in coords.iter_mut() {
            *c -= min;
        }
        Weight { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// `w(weight)`: permute coordinates by `eps_b -> eps_{w(b)}`.
    pub fn permuted(&self, w: &crate::weyl::Permutation) -> Weight {
        let mut out = vec![0i64; self.coords.len()];
        for (b, &c) in self.coords.iter().enumerate() {
            out[w.apply(b + 1) - 1] = c;
        }
        Weight::from_raw(out)
    }
}

/// `omega_i` of `sl_{n+1}` in raw epsilon-coordinates.
pub fn fundamental_weight_raw(n: usize, i: usize) -> Vec<i64> {
    let mut coords = vec![0i64; n + 1];
    for c in coords.iter_mut().take(i) {
        *c = 1;
    }
    coords
}

/// `alpha_{k,j} = eps_k - eps_{j+1}` in raw coordinates.
pub fn root_raw(n: usize, root: (usize, usize)) -> Vec<i64> {
    let (k, j) = root;
    let mut coords = vec![0i64; n + 1];
    coords[k - 1] += 1;
    coords[j] -= 1;
    coords
}

/// A formal sum of weights with positive multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Character {
    terms: BTreeMap<Weight, u64>,
}

impl Character {
    pub fn new() -> Character {
        Character::default()
    }

    pub fn add(&mut self, w: Weight) {
        *self.terms.entry(w).or_insert(0) += 1;
    }

    pub fn add_with_multiplicity(&mut self, w: Weight, mult: u64) {
        if mult > 0 {
            *self.terms.entry(w).or_insert(0) += mult;
        }
    }

    pub fn terms(&self) -> &BTreeMap<Weight, u64> {
        &self.terms
    }

    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn from_weights(it: impl IntoIterator<Item = Weight>) -> Character {
        let mut ch = Character::new();
        for w in it {
            ch.add(w);
        }
        ch
    }

    /// Canonical JSON: `[{"weight": [...], "mult": k}, ...]` sorted
    /// lexicographically by weight. This is the comparison format shared
    /// across modules.
    pub fn to_json(&self) -> serde_json::Value {
        let list: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(w, &m)| serde_json::json!({"weight": w.coords(), "mult": m}))
            .collect();
        serde_json::Value::Array(list)
    }
}

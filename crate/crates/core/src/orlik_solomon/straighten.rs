use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::arrangement::{IndexSet, Matroid};

/// Integer combination of nbc monomials.
pub(crate) type Expansion = BTreeMap<IndexSet, i64>;

/// Sign of the permutation that sorts the concatenation `a ++ b`, for
/// disjoint sorted sets: `a_A * a_B = sign * a_{A u B}`.
pub(crate) fn merge_sign(a: &IndexSet, b: &IndexSet) -> i64 {
    let inversions: usize = a.iter().map(|x| b.iter().filter(|&y| y < x).count()).sum();
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Rewrites monomials `a_S` in the nbc basis of the Orlik-Solomon algebra.
///
/// Results are memoized; the cache is shared between threads.
pub struct Straightener {
    matroid: Matroid,
    pairs: Vec<(IndexSet, IndexSet)>,
    cache: Mutex<HashMap<IndexSet, Arc<Expansion>>>,
}

impl Straightener {
    pub fn new(matroid: &Matroid) -> Self {
        Straightener {
            pairs: matroid.broken_circuit_pairs(),
            matroid: matroid.clone(),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub(crate) fn expand(&self, s: &IndexSet) -> Arc<Expansion> {
        if let Some(hit) = self.cache.lock().expect("cache lock").get(s) {
            return hit.clone();
        }
        let out = Arc::new(self.compute(s));
        self.cache.lock().expect("cache lock").insert(s.clone(), out.clone());
        out
    }

    fn compute(&self, s: &IndexSet) -> Expansion {
        let mut out = Expansion::new();
        if !self.matroid.is_affine_independent(s.mask()) {
            return out;
        }
        let Some((bc, circuit)) = self.pairs.iter().find(|(bc, _)| bc.is_subset(s)) else {
            out.insert(s.clone(), 1);
            return out;
        };
        let rest = s.difference(bc);
        let outer = merge_sign(bc, &rest);
        // a_{C - c_1} = sum_{k >= 2} (-1)^k a_{C - c_k}
        for k in 2..=circuit.len() {
            let part = circuit.without_position(k);
            if part.iter().any(|x| rest.contains(x)) {
                continue;
            }
            let sign = if k % 2 == 0 { 1 } else { -1 } * outer * merge_sign(&part, &rest);
            for (key, c) in self.expand(&part.union(&rest)).iter() {
                *out.entry(key.clone()).or_insert(0) += sign * c;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }
}

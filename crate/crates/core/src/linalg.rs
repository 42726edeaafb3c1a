//! Exact rank of sparse rational vectors.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::rational::Rational;

pub type SparseVec = BTreeMap<usize, Rational>;

/// Incremental echelon basis keyed by leading index.
#[derive(Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v`; returns true if it was independent of the vectors seen so far.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        v.retain(|_, c| !c.is_zero());
        loop {
            let Some((&lead, lc)) = v.iter().next() else {
                return false;
            };
            let Some(p) = self.pivots.get(&lead) else {
                self.pivots.insert(lead, v);
                return true;
            };
            let factor = lc / &p[&lead];
            for (k, c) in p {
                let entry = v.entry(*k).or_insert_with(Rational::zero);
                *entry -= &factor * c;
                if entry.is_zero() {
                    v.remove(k);
                }
            }
        }
    }
}

pub fn rank<I: IntoIterator<Item = SparseVec>>(vectors: I) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

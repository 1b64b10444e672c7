//! Bitset view of a graph with isolated vertices stripped. Shared by the
//! exact searches; vertex `i` of the view is `original[i]` in the graph.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub(crate) const WORD: usize = 64;

pub(crate) struct Compact {
    pub adj: Vec<u64>,
    pub original: Vec<usize>,
}

impl Compact {
    pub fn new(g: &Graph, what: &'static str, budget: usize) -> Result<Compact> {
        let original: Vec<usize> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
        let limit = budget.min(WORD);
        if original.len() > limit {
            return Err(Error::InstanceTooLarge {
                what,
                size: original.len(),
                budget: limit,
            });
        }
        let mut index = vec![usize::MAX; g.n()];
        for (i, &v) in original.iter().enumerate() {
            index[v] = i;
        }
        let adj = original
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .iter()
                    .fold(0u64, |acc, &w| acc | 1 << index[w])
            })
            .collect();
        Ok(Compact { adj, original })
    }

    pub fn k(&self) -> usize {
        self.original.len()
    }

    pub fn all(&self) -> u64 {
        full(self.k())
    }

    /// Drops vertices with no neighbor inside `alive`.
    pub fn normalize(&self, alive: u64) -> u64 {
        let mut out = alive;
        for v in ones(alive) {
            if self.adj[v] & alive == 0 {
                out &= !(1 << v);
            }
        }
        out
    }

    /// Size of a greedy maximal matching inside `alive`; a lower bound on the
    /// vertex cover number of the induced subgraph.
    pub fn greedy_matching(&self, alive: u64) -> u32 {
        let mut free = alive;
        let mut size = 0;
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= !(1 << v);
            let nb = self.adj[v] & free;
            if nb != 0 {
                free &= !(1 << nb.trailing_zeros());
                size += 1;
            }
        }
        size
    }

    pub fn to_original(&self, mask: u64) -> impl Iterator<Item = usize> + '_ {
        ones(mask).map(|i| self.original[i])
    }
}

pub(crate) fn full(k: usize) -> u64 {
    if k >= WORD {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

pub(crate) fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

//! Shared test helpers: isomorphism-class enumeration of small graphs and
//! literal enumeration of edge-deletion traces.

#![allow(dead_code)]

use std::collections::HashSet;

use vclab_core::Graph;

/// Adjacency as bitmasks, one per vertex.
fn masks(g: &Graph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect()
}

/// Splits every cell by the number of neighbors in each cell until stable.
/// Splits are ordered by the neighbor-count signature, so the result only
/// depends on the graph up to relabeling.
fn refine(adj: &[u32], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let cell_masks: Vec<u32> = cells
            .iter()
            .map(|c| c.iter().fold(0u32, |acc, &v| acc | 1 << v))
            .collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = cell_masks
                        .iter()
                        .map(|m| (adj[v] & m).count_ones())
                        .collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

/// Upper-triangle adjacency bits with vertices in `order`.
fn code(adj: &[u32], order: &[usize]) -> u64 {
    let mut c = 0u64;
    let mut bit = 0;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if adj[order[i]] >> order[j] & 1 == 1 {
                c |= 1 << bit;
            }
            bit += 1;
        }
    }
    c
}

fn search(adj: &[u32], cells: Vec<Vec<usize>>, best: &mut Option<(u64, Vec<usize>)>) {
    let cells = refine(adj, cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let c = code(adj, &order);
            if best.as_ref().is_none_or(|(b, _)| c < *b) {
                *best = Some((c, order));
            }
        }
        Some(t) => {
            for &v in &cells[t] {
                let mut branch = cells.clone();
                let rest: Vec<usize> = cells[t].iter().copied().filter(|&x| x != v).collect();
                branch.splice(t..=t, [vec![v], rest]);
                search(adj, branch, best);
            }
        }
    }
}

/// Canonical code of `g` (at most 11 vertices): equal for isomorphic
/// graphs, distinct otherwise.
pub fn canonical_code(g: &Graph) -> u64 {
    assert!(g.n() <= 11);
    let adj = masks(g);
    let mut best = None;
    search(&adj, vec![g.vertices().collect()], &mut best);
    best.map_or(0, |(c, _)| c)
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices, by extending every class on `n - 1` vertices with a new vertex
/// in all possible ways.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for subset in 0u32..1 << (k - 1) {
                let extra = (0..k - 1)
                    .filter(|&i| subset >> i & 1 == 1)
                    .map(|i| (i, k - 1));
                let h = g.add_isolated(1).with_edges(extra).unwrap();
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

/// Calls `f` with the output size of every complete edge-deletion run
/// (each ordered sequence of legal edge choices).
pub fn for_each_ed_trace<F: FnMut(usize)>(g: &Graph, mut f: F) {
    fn go<F: FnMut(usize)>(adj: &[u32], alive: u32, taken: usize, f: &mut F) {
        let mut any = false;
        for u in 0..adj.len() {
            if alive >> u & 1 == 0 {
                continue;
            }
            let mut nb = adj[u] & alive & !((1u32 << (u + 1)) - 1);
            while nb != 0 {
                let v = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                any = true;
                go(adj, alive & !(1 << u) & !(1 << v), taken + 2, f);
            }
        }
        if !any {
            f(taken);
        }
    }
    assert!(g.n() <= 31);
    let adj = masks(g);
    go(&adj, (1u32 << g.n()) - 1, 0, &mut f);
}

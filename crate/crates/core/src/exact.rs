//! Exact ground truth: minimum vertex cover (two independent engines),
//! minimum maximal matching, and bipartite maximum matching.
//!
//! Isolated vertices are stripped before solving and never appear in
//! covers; the vertex budget applies to the remaining vertices.

use std::collections::VecDeque;

use rustc_hash::FxHashMap;

use crate::bits::{ones, Compact};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Size limits for the exact oracles. Exceeding one is an error, never a
/// silent slowdown. Vertex limits above 64 are clamped to 64.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_vertices: 64,
            max_edges: 64,
        }
    }
}

impl Budget {
    pub fn with_edges(max_edges: usize) -> Budget {
        Budget {
            max_edges,
            ..Budget::default()
        }
    }

    fn check_edges(&self, g: &Graph, what: &'static str) -> Result<()> {
        if g.m() > self.max_edges {
            return Err(Error::InstanceTooLarge {
                what,
                size: g.m(),
                budget: self.max_edges,
            });
        }
        Ok(())
    }
}

/// Largest vertex count (after stripping isolated vertices) accepted by
/// [`mvc_by_enumeration`].
pub const ENUMERATION_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub size: usize,
    pub cover: VertexSet,
}

pub fn mvc(g: &Graph) -> Result<usize> {
    mvc_with(g, &Budget::default()).map(|c| c.size)
}

/// Minimum vertex cover with a witness, by branch and bound.
pub fn mvc_with(g: &Graph, budget: &Budget) -> Result<Cover> {
    mvc_by_branch_and_bound(g, budget)
}

/// Subset enumeration, in increasing mask order; the witness is the
/// numerically smallest minimum cover of the compacted graph.
pub fn mvc_by_enumeration(g: &Graph) -> Result<Cover> {
    let c = Compact::new(g, "mvc (enumeration)", ENUMERATION_LIMIT)?;
    let k = c.k();
    let mut best = (u32::MAX, 0u64);
    for mask in 0u64..1 << k {
        let size = mask.count_ones();
        if size >= best.0 {
            continue;
        }
        let covers = ones(!mask & c.all()).all(|v| c.adj[v] & !mask == 0);
        if covers {
            best = (size, mask);
        }
    }
    Ok(Cover {
        size: best.0 as usize,
        cover: c.to_original(best.1).collect(),
    })
}

/// Branch and bound on a maximum-degree vertex ("in cover" first, then
/// "all neighbors in cover"), with degree-0/degree-1 reductions and a greedy
/// maximal-matching lower bound.
pub fn mvc_by_branch_and_bound(g: &Graph, budget: &Budget) -> Result<Cover> {
    let c = Compact::new(g, "mvc", budget.max_vertices)?;
    let mut search = VcSearch {
        c: &c,
        best: c.k() as u32,
        best_set: c.all(),
    };
    search.run(c.all(), 0, 0);
    Ok(Cover {
        size: search.best as usize,
        cover: c.to_original(search.best_set).collect(),
    })
}

struct VcSearch<'a> {
    c: &'a Compact,
    best: u32,
    best_set: u64,
}

impl VcSearch<'_> {
    fn run(&mut self, alive: u64, mut chosen: u64, mut count: u32) {
        let adj = &self.c.adj;
        let mut alive = self.c.normalize(alive);
        // degree-1 rule: a leaf's neighbor can always be taken
        'reduce: loop {
            for v in ones(alive) {
                let nb = adj[v] & alive;
                if nb.count_ones() == 1 {
                    chosen |= nb;
                    count += 1;
                    alive = self.c.normalize(alive & !nb);
                    continue 'reduce;
                }
            }
            break;
        }
        if alive == 0 {
            if count < self.best {
                self.best = count;
                self.best_set = chosen;
            }
            return;
        }
        if count + self.c.greedy_matching(alive) >= self.best {
            return;
        }
        let v = ones(alive)
            .max_by_key(|&v| ((adj[v] & alive).count_ones(), std::cmp::Reverse(v)))
            .unwrap();
        let bit = 1u64 << v;
        self.run(alive & !bit, chosen | bit, count + 1);
        let nb = adj[v] & alive;
        self.run(alive & !nb & !bit, chosen | nb, count + nb.count_ones());
    }
}

/// `mvc(g) <= k`, for positive `k`.
pub fn vc_decision(g: &Graph, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    Ok(mvc(g)? <= k)
}

/// `mvc(g) >= mvc(h)`.
pub fn vc_geq(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(mvc(g)? >= mvc(h)?)
}

/// A set of pairwise vertex-disjoint edges of some graph, each stored as
/// `(u, v)` with `u < v`, sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Matching {
    edges: Vec<(Vertex, Vertex)>,
}

impl Matching {
    pub fn new(g: &Graph, edges: &[(Vertex, Vertex)]) -> Result<Matching> {
        let mut seen = VertexSet::new();
        let mut out = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if !g.has_edge(u, v) {
                return Err(Error::InvalidArgument(format!(
                    "{{{u}, {v}}} is not an edge"
                )));
            }
            if !seen.insert(u) || !seen.insert(v) {
                return Err(Error::InvalidArgument(format!(
                    "edge {{{u}, {v}}} shares an endpoint with another matching edge"
                )));
            }
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        Ok(Matching { edges: out })
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn endpoints(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    /// No edge of `g` has both endpoints unmatched.
    pub fn is_maximal(&self, g: &Graph) -> bool {
        let covered = self.endpoints();
        g.edges()
            .all(|(u, v)| covered.contains(u) || covered.contains(v))
    }
}

/// Greedy maximal matching taking edges in lexicographic order.
pub fn greedy_matching(g: &Graph) -> Matching {
    let mut used = vec![false; g.n()];
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            edges.push((u, v));
        }
    }
    Matching { edges }
}

/// Calls `f` on every inclusion-maximal matching of `g`, each exactly once.
pub fn for_each_maximal_matching<F: FnMut(&Matching)>(g: &Graph, mut f: F) {
    let edges: Vec<_> = g.edges().collect();
    let mut used = vec![false; g.n()];
    let mut current = Vec::new();
    enumerate_matchings(&edges, 0, &mut used, &mut current, &mut f);
}

fn enumerate_matchings<F: FnMut(&Matching)>(
    edges: &[(Vertex, Vertex)],
    i: usize,
    used: &mut Vec<bool>,
    current: &mut Vec<(Vertex, Vertex)>,
    f: &mut F,
) {
    if i == edges.len() {
        let maximal = edges.iter().all(|&(u, v)| used[u] || used[v]);
        if maximal {
            f(&Matching {
                edges: current.clone(),
            });
        }
        return;
    }
    let (u, v) = edges[i];
    if !used[u] && !used[v] {
        used[u] = true;
        used[v] = true;
        current.push((u, v));
        enumerate_matchings(edges, i + 1, used, current, f);
        current.pop();
        used[u] = false;
        used[v] = false;
    }
    enumerate_matchings(edges, i + 1, used, current, f);
}

/// Minimum maximal matching by exhaustive enumeration. Intended for small
/// graphs; subject to the edge budget.
pub fn min_maximal_matching_by_enumeration(g: &Graph, budget: &Budget) -> Result<Matching> {
    budget.check_edges(g, "minimum maximal matching (enumeration)")?;
    let mut best: Option<Matching> = None;
    for_each_maximal_matching(g, |mm| {
        if best.as_ref().is_none_or(|b| mm.len() < b.len()) {
            best = Some(mm.clone());
        }
    });
    Ok(best.unwrap_or_default())
}

pub fn min_maximal_matching(g: &Graph) -> Result<usize> {
    min_maximal_matching_with(g, &Budget::default()).map(|m| m.len())
}

/// Minimum maximal matching by memoized branch and bound, with a witness.
///
/// Search state: matched vertices, plus vertices committed to stay
/// unmatched (whose neighbors must then all be matched).
pub fn min_maximal_matching_with(g: &Graph, budget: &Budget) -> Result<Matching> {
    budget.check_edges(g, "minimum maximal matching")?;
    let c = Compact::new(g, "minimum maximal matching", budget.max_vertices)?;
    let mut search = MmSearch {
        c: &c,
        memo: FxHashMap::default(),
    };
    let start = search.normalize(0, 0);
    let total = search.solve(start, INF);
    debug_assert!(total < INF);

    // walk an optimal branch
    let mut edges = Vec::new();
    let mut state = start;
    let mut remaining = total;
    while remaining > 0 {
        let (child, pair) = search
            .options(state)
            .into_iter()
            .find(|&(child, pair)| {
                let cost = u32::from(pair.is_some());
                cost <= remaining && cost + search.solve(child, remaining - cost + 1) == remaining
            })
            .expect("optimal branch exists");
        if let Some((x, y)) = pair {
            edges.push((c.original[x], c.original[y]));
            remaining -= 1;
        }
        state = child;
    }
    Matching::new(g, &edges)
}

const INF: u32 = u32::MAX / 4;

#[derive(Clone, Copy)]
struct Bound {
    value: u32,
    exact: bool,
}

type MmState = (u64, u64);

struct MmSearch<'a> {
    c: &'a Compact,
    memo: FxHashMap<MmState, Bound>,
}

impl MmSearch<'_> {
    /// `gone`: matched vertices and vertices with nothing left to decide.
    /// `pending`: committed-unmatched vertices with a live neighbor.
    fn normalize(&self, mut gone: u64, mut pending: u64) -> MmState {
        let all = self.c.all();
        loop {
            let live = all & !gone;
            let mut changed = false;
            for v in ones(live) {
                if self.c.adj[v] & live == 0 {
                    gone |= 1 << v;
                    pending &= !(1 << v);
                    changed = true;
                }
            }
            if !changed {
                return (gone, pending);
            }
        }
    }

    /// Children of a state, each with the pair it matches (`None` for the
    /// branch that commits a vertex to stay unmatched).
    fn options(&self, (gone, pending): MmState) -> Vec<(MmState, Option<(usize, usize)>)> {
        let adj = &self.c.adj;
        let free = self.c.all() & !gone & !pending;
        let must = ones(pending).fold(0, |acc, p| acc | adj[p]) & free;
        let mut out = Vec::new();
        if must != 0 {
            let x = ones(must)
                .min_by_key(|&x| (adj[x] & free).count_ones())
                .unwrap();
            for y in ones(adj[x] & free) {
                out.push((
                    self.normalize(gone | 1 << x | 1 << y, pending),
                    Some((x, y)),
                ));
            }
            return out;
        }
        let Some(u) = ones(free)
            .filter(|&u| adj[u] & free != 0)
            .min_by_key(|&u| (adj[u] & free).count_ones())
        else {
            return out;
        };
        for y in ones(adj[u] & free) {
            out.push((
                self.normalize(gone | 1 << u | 1 << y, pending),
                Some((u, y)),
            ));
        }
        out.push((self.normalize(gone, pending | 1 << u), None));
        out
    }

    /// Fail-soft bounded search: the result is exact when below `limit`,
    /// otherwise a lower bound that is at least `limit`.
    fn solve(&mut self, state: MmState, limit: u32) -> u32 {
        let (gone, pending) = state;
        let adj = &self.c.adj;
        let free = self.c.all() & !gone & !pending;
        let must = ones(pending).fold(0, |acc, p| acc | adj[p]) & free;
        if must == 0 && ones(free).all(|u| adj[u] & free == 0) {
            return 0;
        }
        if ones(must).any(|x| adj[x] & free == 0) {
            return INF;
        }
        if let Some(b) = self.memo.get(&state) {
            if b.exact || b.value >= limit {
                return b.value;
            }
        }
        let lb = (must.count_ones() + self.c.greedy_matching(free & !must)).div_ceil(2);
        if lb >= limit {
            self.store(state, lb, false);
            return lb;
        }
        let mut result = INF;
        for (child, pair) in self.options(state) {
            let cost = u32::from(pair.is_some());
            let cap = limit.min(result);
            if cost >= cap {
                result = result.min(cost);
                continue;
            }
            let v = cost + self.solve(child, cap - cost);
            result = result.min(v);
            if result <= lb {
                break;
            }
        }
        self.store(state, result, result < limit);
        result
    }

    fn store(&mut self, state: MmState, value: u32, exact: bool) {
        let entry = self.memo.entry(state).or_insert(Bound { value, exact });
        if !entry.exact && (exact || value > entry.value) {
            *entry = Bound { value, exact };
        }
    }
}

/// A maximum matching of a bipartite graph, as `(a, b)` pairs with `a` on
/// the designated side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteMatching {
    pub pairs: Vec<(Vertex, Vertex)>,
}

impl BipartiteMatching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Maximum matching size of a bipartite graph with parts `side_a` and its
/// complement. By König's theorem this equals `mvc(g)`.
pub fn max_bipartite_matching(g: &Graph, side_a: &VertexSet) -> Result<usize> {
    bipartite_matching(g, side_a).map(|m| m.len())
}

/// Hopcroft–Karp.
pub fn bipartite_matching(g: &Graph, side_a: &VertexSet) -> Result<BipartiteMatching> {
    check_bipartition(g, side_a)?;
    let n = g.n();
    let left: Vec<Vertex> = side_a.iter().collect();
    let mut mate = vec![usize::MAX; n];
    let mut dist = vec![usize::MAX; n];
    loop {
        // BFS layers from free left vertices
        let mut queue = VecDeque::new();
        for &a in &left {
            if mate[a] == usize::MAX {
                dist[a] = 0;
                queue.push_back(a);
            } else {
                dist[a] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(a) = queue.pop_front() {
            for &b in g.neighbors(a) {
                match mate[b] {
                    usize::MAX => found = true,
                    a2 if dist[a2] == usize::MAX => {
                        dist[a2] = dist[a] + 1;
                        queue.push_back(a2);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        let mut grew = false;
        for &a in &left {
            if mate[a] == usize::MAX && augment(g, a, &mut mate, &mut dist) {
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    let pairs = left
        .iter()
        .filter(|&&a| mate[a] != usize::MAX)
        .map(|&a| (a, mate[a]))
        .collect();
    Ok(BipartiteMatching { pairs })
}

fn augment(g: &Graph, a: Vertex, mate: &mut [usize], dist: &mut [usize]) -> bool {
    for &b in g.neighbors(a) {
        let next = mate[b];
        let ok = next == usize::MAX
            || (dist[next] == dist[a].wrapping_add(1) && augment(g, next, mate, dist));
        if ok {
            mate[a] = b;
            mate[b] = a;
            return true;
        }
    }
    dist[a] = usize::MAX;
    false
}

/// Minimum vertex cover of a bipartite graph built from a maximum matching
/// (König): with `Z` the vertices reachable from free `A`-vertices along
/// alternating paths, the cover is `(A \ Z) ∪ (B ∩ Z)`.
pub fn konig_cover(g: &Graph, side_a: &VertexSet) -> Result<Cover> {
    let matching = bipartite_matching(g, side_a)?;
    let mut mate = vec![usize::MAX; g.n()];
    for &(a, b) in &matching.pairs {
        mate[a] = b;
        mate[b] = a;
    }
    let mut reached = vec![false; g.n()];
    let mut queue: VecDeque<Vertex> = side_a.iter().filter(|&a| mate[a] == usize::MAX).collect();
    for &a in &queue {
        reached[a] = true;
    }
    while let Some(a) = queue.pop_front() {
        for &b in g.neighbors(a) {
            if !reached[b] && mate[a] != b {
                reached[b] = true;
                let a2 = mate[b];
                if a2 != usize::MAX && !reached[a2] {
                    reached[a2] = true;
                    queue.push_back(a2);
                }
            }
        }
    }
    let cover: VertexSet = g
        .vertices()
        .filter(|&v| g.degree(v) > 0 && (side_a.contains(v) != reached[v]))
        .collect();
    debug_assert_eq!(cover.len(), matching.len());
    Ok(Cover {
        size: cover.len(),
        cover,
    })
}

fn check_bipartition(g: &Graph, side_a: &VertexSet) -> Result<()> {
    if let Some(v) = side_a.max().filter(|&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    match g
        .edges()
        .find(|&(u, v)| side_a.contains(u) == side_a.contains(v))
    {
        Some((u, v)) => Err(Error::NotBipartite(u, v)),
        None => Ok(()),
    }
}

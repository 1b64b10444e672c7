//! The edge deletion (ED) and maximum-degree greedy (MDG) heuristics.
//!
//! Single runs resolve the nondeterministic choice with a [`Policy`];
//! [`min_ed`] and [`min_mdg`] search every choice sequence exactly.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;

use crate::bits::{ones, Compact};
use crate::error::{Error, Result};
use crate::exact::Budget;
use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Ed,
    Mdg,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Ed => "ed",
            Algorithm::Mdg => "mdg",
        })
    }
}

/// How a run resolves each nondeterministic choice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Policy {
    /// Lexicographically smallest edge (ED) or smallest-id maximum-degree
    /// vertex (MDG).
    First,
    /// Uniform among the legal choices, from a seeded ChaCha8 stream.
    Random(u64),
    /// Marker for "all choice sequences"; not runnable, see [`min_ed`] and
    /// [`min_mdg`].
    Exhaustive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Choice {
    Edge(Vertex, Vertex),
    Vertex(Vertex),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeuristicTrace {
    pub algorithm: Algorithm,
    pub choices: Vec<Choice>,
    pub cover: VertexSet,
}

impl HeuristicTrace {
    pub fn size(&self) -> usize {
        self.cover.len()
    }
}

enum Chooser {
    First,
    Random(Box<ChaCha8Rng>),
}

impl Chooser {
    fn new(policy: Policy) -> Result<Chooser> {
        match policy {
            Policy::First => Ok(Chooser::First),
            Policy::Random(seed) => Ok(Chooser::Random(Box::new(ChaCha8Rng::seed_from_u64(seed)))),
            Policy::Exhaustive => Err(Error::InvalidArgument(
                "the exhaustive policy has no single run; use min_ed/min_mdg".into(),
            )),
        }
    }

    /// `options` is non-empty and in canonical order.
    fn pick<T: Copy>(&mut self, options: &[T]) -> T {
        match self {
            Chooser::First => options[0],
            Chooser::Random(rng) => *options.choose(rng.as_mut()).unwrap(),
        }
    }
}

pub fn run(g: &Graph, algorithm: Algorithm, policy: Policy) -> Result<HeuristicTrace> {
    match algorithm {
        Algorithm::Ed => run_ed(g, policy),
        Algorithm::Mdg => run_mdg(g, policy),
    }
}

pub fn run_ed(g: &Graph, policy: Policy) -> Result<HeuristicTrace> {
    let mut chooser = Chooser::new(policy)?;
    let mut alive = vec![true; g.n()];
    let mut choices = Vec::new();
    let mut cover = VertexSet::new();
    loop {
        let available: Vec<(Vertex, Vertex)> =
            g.edges().filter(|&(u, v)| alive[u] && alive[v]).collect();
        if available.is_empty() {
            break;
        }
        let (u, v) = chooser.pick(&available);
        alive[u] = false;
        alive[v] = false;
        cover.insert(u);
        cover.insert(v);
        choices.push(Choice::Edge(u, v));
    }
    Ok(HeuristicTrace {
        algorithm: Algorithm::Ed,
        choices,
        cover,
    })
}

pub fn run_mdg(g: &Graph, policy: Policy) -> Result<HeuristicTrace> {
    let mut chooser = Chooser::new(policy)?;
    let mut state = Residual::new(g);
    let mut choices = Vec::new();
    let mut cover = VertexSet::new();
    while let Some(tied) = state.max_degree_vertices() {
        let v = chooser.pick(&tied);
        state.delete(g, v);
        cover.insert(v);
        choices.push(Choice::Vertex(v));
    }
    Ok(HeuristicTrace {
        algorithm: Algorithm::Mdg,
        choices,
        cover,
    })
}

struct Residual {
    alive: Vec<bool>,
    degree: Vec<usize>,
    edges: usize,
}

impl Residual {
    fn new(g: &Graph) -> Residual {
        Residual {
            alive: vec![true; g.n()],
            degree: g.vertices().map(|v| g.degree(v)).collect(),
            edges: g.m(),
        }
    }

    /// Maximum-degree vertices in id order, or `None` once no edge is left.
    fn max_degree_vertices(&self) -> Option<Vec<Vertex>> {
        if self.edges == 0 {
            return None;
        }
        let top = (0..self.alive.len())
            .filter(|&v| self.alive[v])
            .map(|v| self.degree[v])
            .max()?;
        Some(
            (0..self.alive.len())
                .filter(|&v| self.alive[v] && self.degree[v] == top)
                .collect(),
        )
    }

    fn delete(&mut self, g: &Graph, v: Vertex) {
        self.alive[v] = false;
        for &w in g.neighbors(v) {
            if self.alive[w] {
                self.degree[w] -= 1;
                self.edges -= 1;
            }
        }
        self.degree[v] = 0;
    }
}

/// Replays an explicit ED choice sequence, rejecting it unless every chosen
/// edge is present in the residual graph and the run ends with no edge left.
pub fn replay_ed(g: &Graph, edges: &[(Vertex, Vertex)]) -> Result<HeuristicTrace> {
    let mut alive = vec![true; g.n()];
    let mut cover = VertexSet::new();
    let mut choices = Vec::with_capacity(edges.len());
    for &(u, v) in edges {
        if !g.has_edge(u, v) || !alive[u] || !alive[v] {
            return Err(Error::IllegalTrace(format!(
                "edge {{{u}, {v}}} is not in the residual graph"
            )));
        }
        alive[u] = false;
        alive[v] = false;
        cover.insert(u);
        cover.insert(v);
        choices.push(Choice::Edge(u.min(v), u.max(v)));
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| alive[u] && alive[v]) {
        return Err(Error::IllegalTrace(format!(
            "edge {{{u}, {v}}} left uncovered"
        )));
    }
    Ok(HeuristicTrace {
        algorithm: Algorithm::Ed,
        choices,
        cover,
    })
}

/// Replays an explicit MDG choice sequence, rejecting it unless every
/// vertex has maximum degree at its turn and the run ends with no edge left.
pub fn replay_mdg(g: &Graph, vertices: &[Vertex]) -> Result<HeuristicTrace> {
    let mut state = Residual::new(g);
    let mut cover = VertexSet::new();
    let mut choices = Vec::with_capacity(vertices.len());
    for &v in vertices {
        let legal = state
            .max_degree_vertices()
            .is_some_and(|tied| tied.binary_search(&v).is_ok());
        if !legal {
            return Err(Error::IllegalTrace(format!(
                "vertex {v} is not of maximum degree at its turn"
            )));
        }
        state.delete(g, v);
        cover.insert(v);
        choices.push(Choice::Vertex(v));
    }
    if state.edges > 0 {
        return Err(Error::IllegalTrace(format!(
            "{} edges left uncovered",
            state.edges
        )));
    }
    Ok(HeuristicTrace {
        algorithm: Algorithm::Mdg,
        choices,
        cover,
    })
}

/// Checks every structural invariant of a trace against `g`.
pub fn validate_trace(g: &Graph, trace: &HeuristicTrace) -> Result<()> {
    let replayed = match trace.algorithm {
        Algorithm::Ed => {
            let edges: Vec<_> = trace
                .choices
                .iter()
                .map(|c| match *c {
                    Choice::Edge(u, v) => Ok((u, v)),
                    Choice::Vertex(v) => {
                        Err(Error::IllegalTrace(format!("vertex {v} in ED trace")))
                    }
                })
                .collect::<Result<_>>()?;
            replay_ed(g, &edges)?
        }
        Algorithm::Mdg => {
            let vertices: Vec<_> = trace
                .choices
                .iter()
                .map(|c| match *c {
                    Choice::Vertex(v) => Ok(v),
                    Choice::Edge(u, v) => Err(Error::IllegalTrace(format!(
                        "edge {{{u}, {v}}} in MDG trace"
                    ))),
                })
                .collect::<Result<_>>()?;
            replay_mdg(g, &vertices)?
        }
    };
    if replayed.cover != trace.cover {
        return Err(Error::IllegalTrace(
            "cover does not match the choices".into(),
        ));
    }
    Ok(())
}

pub fn min_ed(g: &Graph) -> Result<usize> {
    min_ed_with(g, &Budget::default()).map(|t| t.size())
}

/// Minimum ED output over all choice sequences, with a trace attaining it.
pub fn min_ed_with(g: &Graph, budget: &Budget) -> Result<HeuristicTrace> {
    let c = Compact::new(g, "min-ed", budget.max_vertices)?;
    let mut search = Search::new(&c, Algorithm::Ed);
    let path = search.optimal_path();
    let edges: Vec<_> = path
        .iter()
        .map(|step| {
            let v: Vec<_> = c.to_original(*step).collect();
            (v[0], v[1])
        })
        .collect();
    replay_ed(g, &edges)
}

pub fn min_mdg(g: &Graph) -> Result<usize> {
    min_mdg_with(g, &Budget::default()).map(|t| t.size())
}

/// Minimum MDG output over all choice sequences, with a trace attaining it.
pub fn min_mdg_with(g: &Graph, budget: &Budget) -> Result<HeuristicTrace> {
    let c = Compact::new(g, "min-mdg", budget.max_vertices)?;
    let mut search = Search::new(&c, Algorithm::Mdg);
    let path = search.optimal_path();
    let vertices: Vec<_> = path
        .iter()
        .map(|step| c.to_original(*step).next().unwrap())
        .collect();
    replay_mdg(g, &vertices)
}

const INF: u32 = u32::MAX / 4;

#[derive(Clone, Copy)]
struct Bound {
    value: u32,
    exact: bool,
}

/// Memoized search over residual vertex sets (isolated vertices dropped).
/// Values count choices: edges for ED, vertices for MDG.
struct Search<'a> {
    c: &'a Compact,
    algorithm: Algorithm,
    memo: FxHashMap<u64, Bound>,
}

impl<'a> Search<'a> {
    fn new(c: &'a Compact, algorithm: Algorithm) -> Self {
        Search {
            c,
            algorithm,
            memo: FxHashMap::default(),
        }
    }

    /// `(removed vertices, child state)` for each legal choice, deduplicated
    /// on the child state.
    fn children(&self, alive: u64) -> Vec<(u64, u64)> {
        let adj = &self.c.adj;
        let mut out: Vec<(u64, u64)> = match self.algorithm {
            Algorithm::Ed => ones(alive)
                .flat_map(|u| {
                    ones(adj[u] & alive & !((2u64 << u) - 1)).map(move |v| 1u64 << u | 1 << v)
                })
                .map(|pair| (pair, self.c.normalize(alive & !pair)))
                .collect(),
            Algorithm::Mdg => {
                let top = ones(alive)
                    .map(|v| (adj[v] & alive).count_ones())
                    .max()
                    .unwrap_or(0);
                ones(alive)
                    .filter(|&v| (adj[v] & alive).count_ones() == top)
                    .map(|v| (1u64 << v, self.c.normalize(alive & !(1 << v))))
                    .collect()
            }
        };
        out.sort_by_key(|&(_, child)| child);
        out.dedup_by_key(|&mut (_, child)| child);
        out
    }

    fn lower_bound(&self, alive: u64) -> u32 {
        let matching = self.c.greedy_matching(alive);
        match self.algorithm {
            // the chosen edges' endpoints cover the residual graph
            Algorithm::Ed => matching.div_ceil(2),
            Algorithm::Mdg => matching,
        }
    }

    /// Exact when the result is below `limit`; otherwise a lower bound that
    /// is at least `limit`.
    fn solve(&mut self, alive: u64, limit: u32) -> u32 {
        if alive == 0 {
            return 0;
        }
        if let Some(b) = self.memo.get(&alive) {
            if b.exact || b.value >= limit {
                return b.value;
            }
        }
        let lb = self.lower_bound(alive).max(1);
        if lb >= limit {
            self.store(alive, lb, false);
            return lb;
        }
        let mut result = INF;
        for (_, child) in self.children(alive) {
            let cap = limit.min(result);
            if cap <= 1 {
                result = result.min(1);
                break;
            }
            let v = 1 + self.solve(child, cap - 1);
            result = result.min(v);
            if result <= lb {
                break;
            }
        }
        self.store(alive, result, result < limit);
        result
    }

    fn store(&mut self, alive: u64, value: u32, exact: bool) {
        let entry = self.memo.entry(alive).or_insert(Bound { value, exact });
        if !entry.exact && (exact || value > entry.value) {
            *entry = Bound { value, exact };
        }
    }

    /// Choices (as compact-vertex masks) along one optimal sequence.
    fn optimal_path(&mut self) -> Vec<u64> {
        let mut alive = self.c.normalize(self.c.all());
        let mut remaining = self.solve(alive, INF);
        let mut path = Vec::new();
        while remaining > 0 {
            let (removed, child) = self
                .children(alive)
                .into_iter()
                .find(|&(_, child)| 1 + self.solve(child, remaining) == remaining)
                .expect("optimal branch exists");
            path.push(removed);
            alive = child;
            remaining -= 1;
        }
        path
    }
}

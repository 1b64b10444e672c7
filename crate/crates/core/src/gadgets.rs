//! Staged-partition bipartite gadget on which MDG is forced to take the
//! whole large side `V` before touching `Ṽ`.
//!
//! Vertex ids: `V = u_1..u_{n1}, w_1..w_mu, z_1..z_{n2}` occupy
//! `0..n1+mu+n2` in that order, followed by `Ṽ = ũ_1..ũ_{n1}, w̃_1..w̃_mu`.
//! The `V` vertices in id order are the alpha order. Stage `s` (block size
//! `s = delta+3, delta+4, ...`) hands consecutive alphas pairwise-disjoint
//! blocks of `s` vertices from `W̃`.

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GadgetSpec {
    pub n1: usize,
    pub n2: usize,
    pub delta: usize,
    pub mu: usize,
}

impl GadgetSpec {
    /// Spec with `mu` set to [`min_mu`].
    pub fn with_min_mu(n1: usize, n2: usize, delta: usize) -> GadgetSpec {
        GadgetSpec {
            n1,
            n2,
            delta,
            mu: min_mu(n1, n2, delta),
        }
    }

    pub fn v_len(&self) -> usize {
        self.n1 + self.mu + self.n2
    }

    pub fn vtilde_len(&self) -> usize {
        self.n1 + self.mu
    }

    /// `mu (ln mu - 2 ln(delta + 2) - 1) >= n1 + n2`, see [`log_condition`].
    pub fn satisfies_log_condition(&self) -> bool {
        log_condition(self.n1 + self.n2, self.delta, self.mu)
    }
}

/// `mu (ln mu - 2 ln(delta + 2) - 1) >= rhs`, evaluated conservatively: the
/// floating-point value is pushed down by a margin well above the rounding
/// error of each term, so a borderline `mu` is rejected rather than
/// accepted.
pub fn log_condition(rhs: usize, delta: usize, mu: usize) -> bool {
    if mu == 0 {
        return false;
    }
    let mu_f = mu as f64;
    let ln_mu = mu_f.ln();
    let two_ln = 2.0 * ((delta + 2) as f64).ln();
    let value = mu_f * (ln_mu - two_ln - 1.0);
    let margin = 16.0 * f64::EPSILON * mu_f * (ln_mu.abs() + two_ln.abs() + 1.0);
    value - margin >= rhs as f64
}

/// Floor-sum supply check: `sum_{s=delta+3}^{mu-1} floor(mu/s) >= n1 + mu + n2`,
/// i.e. the stages can serve every alpha.
pub fn gadget_feasible(spec: &GadgetSpec) -> bool {
    stage_supply(spec.delta, spec.mu) >= spec.v_len() as u128
}

fn stage_supply(delta: usize, mu: usize) -> u128 {
    (delta + 3..mu).map(|s| (mu / s) as u128).sum()
}

/// Smallest `mu >= 2` satisfying the logarithmic condition. The result is
/// also feasible for the floor-sum check; should that ever fail the scan
/// continues until both hold.
pub fn min_mu(n1: usize, n2: usize, delta: usize) -> usize {
    let mut mu = 2;
    loop {
        if log_condition(n1 + n2, delta, mu) {
            let spec = GadgetSpec { n1, n2, delta, mu };
            if gadget_feasible(&spec) {
                return mu;
            }
        }
        mu += 1;
    }
}

/// One stage of the construction: block size and, per served alpha, the
/// `W̃` vertex ids it was joined to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage {
    pub size: usize,
    pub blocks: Vec<(usize, Vec<Vertex>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetLayout {
    pub spec: GadgetSpec,
    /// Ids of `u_1..u_{n1}, w_1..w_mu, z_1..z_{n2}`; also the alpha order.
    pub v_part: Vec<Vertex>,
    /// Ids of `ũ_1..ũ_{n1}, w̃_1..w̃_mu`.
    pub vtilde_part: Vec<Vertex>,
    pub stages: Vec<Stage>,
}

impl GadgetLayout {
    fn new(spec: GadgetSpec) -> GadgetLayout {
        let nv = spec.v_len();
        GadgetLayout {
            spec,
            v_part: (0..nv).collect(),
            vtilde_part: (nv..nv + spec.vtilde_len()).collect(),
            stages: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.v_part.len() + self.vtilde_part.len()
    }

    pub fn u(&self, i: usize) -> Vertex {
        self.v_part[i]
    }

    pub fn w(&self, j: usize) -> Vertex {
        self.v_part[self.spec.n1 + j]
    }

    pub fn z(&self, k: usize) -> Vertex {
        self.v_part[self.spec.n1 + self.spec.mu + k]
    }

    pub fn u_tilde(&self, i: usize) -> Vertex {
        self.vtilde_part[i]
    }

    pub fn w_tilde(&self, j: usize) -> Vertex {
        self.vtilde_part[self.spec.n1 + j]
    }

    pub fn alpha(&self, i: usize) -> Vertex {
        self.v_part[i]
    }

    pub fn is_v(&self, v: Vertex) -> bool {
        v < self.v_part.len()
    }

    pub fn v_set(&self) -> VertexSet {
        self.v_part.iter().copied().collect()
    }

    pub fn vtilde_set(&self) -> VertexSet {
        self.vtilde_part.iter().copied().collect()
    }

    /// Stage index in which alpha `i` received its block.
    pub fn stage_of_alpha(&self) -> Vec<usize> {
        let mut out = vec![usize::MAX; self.v_part.len()];
        for (t, stage) in self.stages.iter().enumerate() {
            for (a, _) in &stage.blocks {
                out[*a] = t;
            }
        }
        out
    }
}

/// Builds the gadget for a feasible spec.
///
/// `W̃` is kept in a rotating queue. Each stage deals consecutive queue
/// elements into blocks of the stage size; a block holding the matching
/// partner of its own target alpha swaps that element with the first
/// leftover (or, without leftovers, with the first element of another
/// block). The used prefix then rotates to the back of the queue.
pub fn lemma4_graph(spec: &GadgetSpec) -> Result<(Graph, GadgetLayout)> {
    if spec.delta == 0 || spec.mu == 0 {
        return Err(Error::Gadget(format!(
            "delta and mu must be positive: {spec:?}"
        )));
    }
    if !gadget_feasible(spec) {
        return Err(Error::Gadget(format!(
            "infeasible spec {spec:?}: stage supply {} < {}",
            stage_supply(spec.delta, spec.mu),
            spec.v_len()
        )));
    }
    let mut layout = GadgetLayout::new(*spec);
    let mut edges = Vec::new();
    for i in 0..spec.n1 {
        edges.push((layout.u(i), layout.u_tilde(i)));
    }
    for j in 0..spec.mu {
        edges.push((layout.w(j), layout.w_tilde(j)));
    }

    // queue of W̃ indices (0-based j for w̃_j)
    let mut queue: VecDeque<usize> = (0..spec.mu).collect();
    let mut next_alpha = 0;
    let total = spec.v_len();
    let mut size = spec.delta + 3;
    while next_alpha < total {
        if size >= spec.mu {
            return Err(Error::Gadget(format!(
                "W̃ supply exhausted with {} alphas unserved",
                total - next_alpha
            )));
        }
        let capacity = spec.mu / size;
        let served = capacity.min(total - next_alpha);
        let mut deal: Vec<usize> = queue.iter().copied().collect();
        for b in 0..served {
            let alpha = next_alpha + b;
            // only w_j is adjacent to a W̃ vertex before its own stage
            let Some(j) = alpha.checked_sub(spec.n1).filter(|&j| j < spec.mu) else {
                continue;
            };
            let block = b * size..(b + 1) * size;
            if let Some(pos) = deal[block.clone()].iter().position(|&x| x == j) {
                let partner = if served * size < spec.mu {
                    served * size
                } else if b + 1 < served {
                    (b + 1) * size
                } else {
                    0
                };
                deal.swap(block.start + pos, partner);
            }
        }
        let mut stage = Stage {
            size,
            blocks: Vec::with_capacity(served),
        };
        for b in 0..served {
            let alpha = next_alpha + b;
            let block: Vec<Vertex> = deal[b * size..(b + 1) * size]
                .iter()
                .map(|&j| layout.w_tilde(j))
                .collect();
            for &x in &block {
                edges.push((layout.alpha(alpha), x));
            }
            stage.blocks.push((alpha, block));
        }
        deal.rotate_left(served * size);
        queue = deal.into();
        layout.stages.push(stage);
        next_alpha += served;
        size += 1;
    }
    let g = Graph::new(layout.n(), &edges)?;
    debug_assert_eq!(g.m(), edges.len(), "a block repeated an existing edge");
    Ok((g, layout))
}

/// Structural checks: `V` and `Ṽ` partition the vertices and are both
/// independent, the `u–ũ` and `w–w̃` matchings are present, and every `ũ`
/// has degree 1.
pub fn verify_structure(g: &Graph, layout: &GadgetLayout) -> bool {
    let spec = &layout.spec;
    g.n() == layout.n()
        && g.edges().all(|(a, b)| layout.is_v(a) != layout.is_v(b))
        && (0..spec.n1).all(|i| g.has_edge(layout.u(i), layout.u_tilde(i)))
        && (0..spec.mu).all(|j| g.has_edge(layout.w(j), layout.w_tilde(j)))
        && (0..spec.n1).all(|i| g.degree(layout.u_tilde(i)) == 1)
}

/// Checks that deleting any `V`-subset (leaving some of `V`) keeps
/// `max_V deg > max_Ṽ deg + delta`: analytically for every "drop all
/// alphas after stage t" deletion, where the `Ṽ` degree is also held to
/// `1 + (t + 1)`, and on `samples` seeded random deletions.
pub fn verify_property4(
    g: &Graph,
    layout: &GadgetLayout,
    samples: usize,
    seed: u64,
) -> Result<bool> {
    check_forcing(g, layout, layout.spec.delta, true, samples, seed)
}

/// The same deletion checks with margin 0: `max_V deg > max_Ṽ deg`. This
/// is what forces MDG to exhaust `V` first, and is the form that survives
/// extra edges inside `Ṽ` or inside `V`.
pub fn verify_v_first(g: &Graph, layout: &GadgetLayout, samples: usize, seed: u64) -> Result<bool> {
    check_forcing(g, layout, 0, false, samples, seed)
}

fn check_forcing(
    g: &Graph,
    layout: &GadgetLayout,
    margin: usize,
    stage_bound: bool,
    samples: usize,
    seed: u64,
) -> Result<bool> {
    if g.n() != layout.n() {
        return Err(Error::InvalidArgument(format!(
            "layout describes {} vertices, graph has {}",
            layout.n(),
            g.n()
        )));
    }
    let nv = layout.v_part.len();
    let stage_of = layout.stage_of_alpha();
    for t in 0..layout.stages.len() {
        let removed: Vec<bool> = (0..g.n())
            .map(|v| layout.is_v(v) && stage_of[v] > t)
            .collect();
        let (max_v, max_vt) = side_degrees(g, layout, &removed);
        if max_v <= max_vt + margin {
            return Ok(false);
        }
        if stage_bound && max_vt > 1 + (t + 1) {
            return Ok(false);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let keep_p: f64 = rng.gen();
        let mut removed: Vec<bool> = (0..g.n())
            .map(|v| layout.is_v(v) && !rng.gen_bool(keep_p))
            .collect();
        if nv > 0 && removed[..nv].iter().all(|&r| r) {
            removed[rng.gen_range(0..nv)] = false;
        }
        let (max_v, max_vt) = side_degrees(g, layout, &removed);
        if max_v <= max_vt + margin {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(max over surviving V, max over Ṽ)` of degrees in the induced subgraph.
fn side_degrees(g: &Graph, layout: &GadgetLayout, removed: &[bool]) -> (usize, usize) {
    let deg = |v: Vertex| g.neighbors(v).iter().filter(|&&w| !removed[w]).count();
    let max_v = layout
        .v_part
        .iter()
        .filter(|&&v| !removed[v])
        .map(|&v| deg(v))
        .max()
        .unwrap_or(0);
    let max_vt = layout
        .vtilde_part
        .iter()
        .map(|&v| deg(v))
        .max()
        .unwrap_or(0);
    (max_v, max_vt)
}

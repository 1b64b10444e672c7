//! Polynomial-time constructions that turn vertex-cover comparisons into
//! recognition questions for ED and MDG. None of them call an exact solver;
//! the size identities they are built for are checked by the tests.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::gadgets::{self, GadgetSpec};
use crate::graph::{Graph, Vertex};
use crate::ratio::Ratio;

/// What an output vertex stands for. Indices are 0-based here and printed
/// 1-based by `Display`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    /// Slot `slot` (0..4) of the component replacing `source`.
    Component {
        source: Vertex,
        slot: u8,
    },
    /// A vertex carried over unchanged.
    Original(Vertex),
    /// Vertex `index` on side `u` (lower endpoint) or `v` of the gadget for
    /// edge number `edge` (lexicographic edge order).
    EdgeGadget {
        edge: usize,
        upper: bool,
        index: usize,
    },
    /// Vertex `source` of copy `copy` placed on the left side.
    Left {
        copy: usize,
        source: Vertex,
    },
    LeftPad(usize),
    Right {
        copy: usize,
        source: Vertex,
    },
    RightPad(usize),
    /// Pendant path `R_i - a_i - b_i` or slot vertex `a_i` with leaf `b_i`.
    A(usize),
    B(usize),
    U(usize),
    /// `ũ_i`, carrying vertex `source` of copy `copy`.
    UTilde {
        index: usize,
        copy: usize,
        source: Vertex,
    },
    W(usize),
    WTilde(usize),
    /// `z_k`, optionally carrying a vertex of one of the copies.
    Z {
        index: usize,
        copy: Option<(usize, Vertex)>,
    },
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::Component { source, slot } => write!(f, "comp:{}:{}", source + 1, slot + 1),
            Role::Original(v) => write!(f, "orig:{}", v + 1),
            Role::EdgeGadget { edge, upper, index } => {
                write!(
                    f,
                    "edge:{}:{}:{}",
                    edge + 1,
                    if upper { "v" } else { "u" },
                    index + 1
                )
            }
            Role::Left { copy, source } => write!(f, "L:{}:{}", copy + 1, source + 1),
            Role::LeftPad(i) => write!(f, "L:pad:{}", i + 1),
            Role::Right { copy, source } => write!(f, "R:{}:{}", copy + 1, source + 1),
            Role::RightPad(i) => write!(f, "R:pad:{}", i + 1),
            Role::A(i) => write!(f, "a:{}", i + 1),
            Role::B(i) => write!(f, "b:{}", i + 1),
            Role::U(i) => write!(f, "u:{}", i + 1),
            Role::UTilde {
                index,
                copy,
                source,
            } => {
                write!(f, "ut:{}:{}:{}", index + 1, copy + 1, source + 1)
            }
            Role::W(j) => write!(f, "w:{}", j + 1),
            Role::WTilde(j) => write!(f, "wt:{}", j + 1),
            Role::Z { index, copy: None } => write!(f, "z:{}", index + 1),
            Role::Z {
                index,
                copy: Some((c, v)),
            } => write!(f, "z:{}:{}:{}", index + 1, c + 1, v + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionArtifacts {
    pub output: Graph,
    /// `roles[v]` describes output vertex `v`.
    pub roles: Vec<Role>,
    pub constants: BTreeMap<&'static str, u64>,
}

impl ReductionArtifacts {
    pub fn constant(&self, name: &str) -> Option<u64> {
        self.constants.get(name).copied()
    }

    pub fn vertices_where<F: Fn(&Role) -> bool>(&self, pred: F) -> Vec<Vertex> {
        (0..self.roles.len())
            .filter(|&v| pred(&self.roles[v]))
            .collect()
    }

    /// Trailing comment lines for the text format: roles, then constants.
    pub fn trailer(&self) -> Vec<String> {
        let roles = self
            .roles
            .iter()
            .enumerate()
            .map(|(v, r)| format!("role {} {}", v + 1, r));
        let consts = self.constants.iter().map(|(k, v)| format!("const {k} {v}"));
        roles.chain(consts).collect()
    }
}

/// Replaces each vertex by a 4-vertex component (edges `v1v2`, `v3v4`,
/// `v1v3`) and each edge by all 16 edges between the two components.
/// Vertex `4v + i` is slot `i` of `v`.
pub fn g_ed(g: &Graph) -> ReductionArtifacts {
    let mut edges = Vec::with_capacity(3 * g.n() + 16 * g.m());
    for v in g.vertices() {
        let b = 4 * v;
        edges.extend([(b, b + 1), (b + 2, b + 3), (b, b + 2)]);
    }
    for (a, b) in g.edges() {
        for i in 0..4 {
            for j in 0..4 {
                edges.push((4 * a + i, 4 * b + j));
            }
        }
    }
    let roles = (0..4 * g.n())
        .map(|x| Role::Component {
            source: x / 4,
            slot: (x % 4) as u8,
        })
        .collect();
    ReductionArtifacts {
        output: Graph::new(4 * g.n(), &edges).expect("ids in range"),
        roles,
        constants: BTreeMap::new(),
    }
}

/// Replaces each edge `{u, v}` by a `K_{Δ+1,Δ+1}` on fresh vertices
/// `u_1.., v_1..`, attached through `u–u_1` and `v–v_1`. The original
/// edges are dropped.
pub fn g_mdg(g: &Graph) -> ReductionArtifacts {
    let width = g.max_deg() + 1;
    let n_out = g.n() + 2 * g.m() * width;
    let mut roles: Vec<Role> = g.vertices().map(Role::Original).collect();
    roles.reserve(n_out - g.n());
    let mut edges = Vec::with_capacity(g.m() * (width * width + 2));
    for (e, (a, b)) in g.edges().enumerate() {
        let base = g.n() + 2 * e * width;
        let us = base..base + width;
        let vs = base + width..base + 2 * width;
        for index in 0..width {
            roles.push(Role::EdgeGadget {
                edge: e,
                upper: false,
                index,
            });
        }
        for index in 0..width {
            roles.push(Role::EdgeGadget {
                edge: e,
                upper: true,
                index,
            });
        }
        for x in us.clone() {
            for y in vs.clone() {
                edges.push((x, y));
            }
        }
        edges.push((a, us.start));
        edges.push((b, vs.start));
    }
    ReductionArtifacts {
        output: Graph::new(n_out, &edges).expect("ids in range"),
        roles,
        constants: BTreeMap::new(),
    }
}

/// Pads the smaller graph with isolated vertices so both have the same
/// vertex count.
pub fn pad_to_equal(h1: &Graph, h2: &Graph) -> (Graph, Graph) {
    let n = h1.n().max(h2.n());
    (h1.add_isolated(n - h1.n()), h2.add_isolated(n - h2.n()))
}

/// Layout: `L` (`ell` copies of `h2`, then padding), `R` (`m` copies of
/// `h1`, then padding), `a_1..a_{kℓ}`, `b_1..b_{kℓ}`. `L` is joined to `R`,
/// and `R_i – a_i – b_i` are pendant paths.
///
/// Requires `1 <= r < 2` and `|V(h1)| = |V(h2)|` (see [`pad_to_equal`]).
pub fn build_hat_h(h1: &Graph, h2: &Graph, r: Ratio) -> Result<ReductionArtifacts> {
    if r >= Ratio::TWO {
        return Err(Error::InvalidRatio(format!("{r} is outside [1, 2)")));
    }
    if h1.n() != h2.n() {
        return Err(Error::Precondition(format!(
            "vertex counts differ: {} vs {}",
            h1.n(),
            h2.n()
        )));
    }
    let ell = r.ell() as usize;
    let m = r.m() as usize;
    let n = h1.n();
    let k = ell * n + m * n;
    let size_l = k * (2 * m - ell);
    let size_r = k * ell;
    let pad_l = size_l
        .checked_sub(ell * n)
        .expect("k(2m - ell) >= ell |V(H2)| whenever ell < 2m");
    let pad_r = size_r.checked_sub(m * n).expect("k ell >= m |V(H1)|");

    let left = h2.copies(ell).add_isolated(pad_l);
    let right = h1.copies(m).add_isolated(pad_r);
    let core = left.join(&right);
    let a0 = size_l + size_r;
    let b0 = a0 + size_r;
    let pendants = (0..size_r).flat_map(|i| [(size_l + i, a0 + i), (a0 + i, b0 + i)]);
    let output = core.add_isolated(2 * size_r).with_edges(pendants)?;

    let mut roles = Vec::with_capacity(output.n());
    roles.extend((0..ell * n).map(|x| Role::Left {
        copy: x / n.max(1),
        source: x % n.max(1),
    }));
    roles.extend((0..pad_l).map(Role::LeftPad));
    roles.extend((0..m * n).map(|x| Role::Right {
        copy: x / n.max(1),
        source: x % n.max(1),
    }));
    roles.extend((0..pad_r).map(Role::RightPad));
    roles.extend((0..size_r).map(Role::A));
    roles.extend((0..size_r).map(Role::B));

    let constants = BTreeMap::from([
        ("k", k as u64),
        ("ell", ell as u64),
        ("m", m as u64),
        ("sizeL", size_l as u64),
        ("sizeR", size_r as u64),
    ]);
    Ok(ReductionArtifacts {
        output,
        roles,
        constants,
    })
}

/// `L = {a_1..a_j} ∪ V(H2)` with `H2 = g_mdg(g2)`, `R = g1`, `L` joined to
/// `R`, plus pendant edges `a_i b_i`. Before building, `g1` or `H2` is padded
/// with isolated vertices so `|V(H2)| = |V(g1)| + |E(g2)|(Δ(g2)+1)`.
///
/// Layout: `a_1..a_j`, `V(H2)` (then its padding), `V(g1)` (then its
/// padding), `b_1..b_j`.
pub fn build_hat_g(g1: &Graph, g2: &Graph) -> Result<ReductionArtifacts> {
    let h2_art = g_mdg(g2);
    let mut h2 = h2_art.output;
    let n_h2 = h2.n();
    let target = g1.n() + g2.m() * (g2.max_deg() + 1);
    let (pad_g1, pad_h2) = if n_h2 > target {
        (n_h2 - target, 0)
    } else {
        (0, target - n_h2)
    };
    h2 = h2.add_isolated(pad_h2);
    let r = g1.add_isolated(pad_g1);
    debug_assert_eq!(h2.n(), r.n() + g2.m() * (g2.max_deg() + 1));

    let j = r.n() + h2.max_deg() + 1;
    let q = h2.n() + j;
    let left = Graph::empty(j).disjoint_union(&h2);
    let core = left.join(&r);
    let b0 = left.n() + r.n();
    let output = core
        .add_isolated(j)
        .with_edges((0..j).map(|i| (i, b0 + i)))?;

    let mut roles = Vec::with_capacity(output.n());
    roles.extend((0..j).map(Role::A));
    roles.extend((0..n_h2).map(|v| Role::Left { copy: 0, source: v }));
    roles.extend((0..pad_h2).map(Role::LeftPad));
    roles.extend(g1.vertices().map(|v| Role::Right { copy: 0, source: v }));
    roles.extend((0..pad_g1).map(Role::RightPad));
    roles.extend((0..j).map(Role::B));

    Ok(ReductionArtifacts {
        output,
        roles,
        constants: BTreeMap::from([("j", j as u64), ("q", q as u64)]),
    })
}

/// Upper bound on candidates examined by [`solve_padding`].
pub const PADDING_SEARCH_LIMIT: u64 = 1_000_000_000;

/// Smallest `mu` with an integer `n2` solving `m n2 + k = (ell - m)(n1 + mu)`,
/// `n2 >= n2_floor`, and `(n1, n2, delta, mu)` a feasible gadget spec that
/// meets the logarithmic condition. Returns `(n2, mu)`.
pub fn solve_padding(
    r: Ratio,
    n1: usize,
    k: u64,
    delta: usize,
    n2_floor: usize,
) -> Result<(usize, usize)> {
    if r.is_one() {
        return Err(Error::Precondition(format!("ratio {r} must exceed 1")));
    }
    let ell = i128::from(r.ell());
    let m = i128::from(r.m());
    let d = ell - m;
    // d * mu ≡ k - d * n1 (mod m); d is invertible because gcd(d, m) = gcd(ell, m) = 1
    let inv = d.extended_gcd(&m).x.mod_floor(&m);
    let residue = (inv * (i128::from(k) - d * n1 as i128)).mod_floor(&m);
    let mut mu = residue;
    while mu < 2 {
        mu += m;
    }
    for _ in 0..PADDING_SEARCH_LIMIT {
        let rhs = d * (n1 as i128 + mu) - i128::from(k);
        if rhs >= m * n2_floor as i128 {
            debug_assert_eq!(rhs % m, 0);
            let n2 = (rhs / m) as usize;
            let spec = GadgetSpec {
                n1,
                n2,
                delta,
                mu: mu as usize,
            };
            if spec.satisfies_log_condition() && gadgets::gadget_feasible(&spec) {
                return Ok((n2, mu as usize));
            }
        }
        mu += m;
    }
    Err(Error::Precondition(format!(
        "no padding found within {PADDING_SEARCH_LIMIT} candidates"
    )))
}

/// The staged gadget with `n1 = ell |V(H2)|` (`H2 = g_mdg(g2)`),
/// `delta = Δ(H2) + 1` and `(n2, mu)` from [`solve_padding`], extended by
/// `ell` copies of `H2` on the `ũ` vertices and `m` copies of `g1` on the
/// first `z` vertices, both in block order.
pub fn build_hat_g_r(g1: &Graph, g2: &Graph, r: Ratio) -> Result<ReductionArtifacts> {
    if r.is_one() {
        return Err(Error::Precondition(format!("ratio {r} must exceed 1")));
    }
    let ell = r.ell() as usize;
    let m = r.m() as usize;
    let h2 = g_mdg(g2).output;
    let nh = h2.n();
    let n1 = ell * nh;
    let delta = h2.max_deg() + 1;
    let k = (m * ell * g2.m() * (g2.max_deg() + 1)) as u64;
    let (n2, mu) = solve_padding(r, n1, k, delta, m * g1.n())?;
    let spec = GadgetSpec { n1, n2, delta, mu };
    let (gadget, layout) = gadgets::lemma4_graph(&spec)?;

    let mut extra = Vec::with_capacity(ell * h2.m() + m * g1.m());
    for c in 0..ell {
        for (a, b) in h2.edges() {
            extra.push((layout.u_tilde(c * nh + a), layout.u_tilde(c * nh + b)));
        }
    }
    let n_g1 = g1.n();
    for c in 0..m {
        for (a, b) in g1.edges() {
            extra.push((layout.z(c * n_g1 + a), layout.z(c * n_g1 + b)));
        }
    }
    let output = gadget.with_edges(extra)?;

    let mut roles = Vec::with_capacity(output.n());
    roles.extend((0..n1).map(Role::U));
    roles.extend((0..mu).map(Role::W));
    roles.extend((0..n2).map(|index| Role::Z {
        index,
        copy: (index < m * n_g1).then(|| (index / n_g1, index % n_g1)),
    }));
    roles.extend((0..n1).map(|index| Role::UTilde {
        index,
        copy: index / nh,
        source: index % nh,
    }));
    roles.extend((0..mu).map(Role::WTilde));

    let constants = BTreeMap::from([
        ("p", m as u64),
        ("q", (n1 + mu) as u64),
        ("n1", n1 as u64),
        ("n2", n2 as u64),
        ("delta", delta as u64),
        ("mu", mu as u64),
    ]);
    Ok(ReductionArtifacts {
        output,
        roles,
        constants,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{mvc, mvc_by_enumeration};
    use crate::generate::{complete, path, random_graphs};

    fn distinct_roles(art: &ReductionArtifacts) {
        assert_eq!(art.roles.len(), art.output.n());
        let tags: std::collections::HashSet<String> =
            art.roles.iter().map(|r| r.to_string()).collect();
        assert_eq!(tags.len(), art.roles.len());
    }

    #[test]
    fn g_ed_sizes() {
        for g in random_graphs(11, 40, 7, 12) {
            let h = g_ed(&g);
            assert_eq!(h.output.n(), 4 * g.n());
            assert_eq!(h.output.m(), 3 * g.n() + 16 * g.m());
            distinct_roles(&h);
        }
        assert_eq!(g_ed(&Graph::empty(0)).output, Graph::empty(0));
    }

    #[test]
    fn g_ed_examples() {
        let k1 = g_ed(&complete(1)).output;
        assert_eq!((k1.n(), k1.m()), (4, 3));
        assert_eq!(mvc(&k1).unwrap(), 2);
        let k2 = g_ed(&complete(2)).output;
        assert_eq!((k2.n(), k2.m()), (8, 22));
        assert_eq!(mvc_by_enumeration(&k2).unwrap().size, 6);
    }

    #[test]
    fn g_mdg_sizes() {
        for g in random_graphs(12, 40, 7, 10) {
            let h = g_mdg(&g);
            let w = g.max_deg() + 1;
            assert_eq!(h.output.n(), g.n() + 2 * g.m() * w);
            assert_eq!(h.output.m(), g.m() * (w * w + 2));
            distinct_roles(&h);
            for (a, b) in g.edges() {
                assert!(!h.output.has_edge(a, b));
            }
        }
    }

    #[test]
    fn g_mdg_examples() {
        let k2 = g_mdg(&complete(2)).output;
        assert_eq!((k2.n(), k2.m()), (6, 6));
        assert_eq!(mvc(&k2).unwrap(), 3);
        let p3 = g_mdg(&path(3)).output;
        assert_eq!(p3.n(), 15);
        assert_eq!(mvc(&p3).unwrap(), 7);
        let e = Graph::empty(3);
        assert_eq!(g_mdg(&e).output, e);
    }

    #[test]
    fn hat_h_shape() {
        let h = g_ed(&complete(1)).output;
        let art = build_hat_h(&h, &h, Ratio::ONE).unwrap();
        assert_eq!(art.output.n(), 32);
        assert_eq!(art.constant("k"), Some(8));
        assert_eq!(art.constant("sizeL"), Some(8));
        assert_eq!(art.constant("sizeR"), Some(8));
        distinct_roles(&art);

        let art = build_hat_h(&h, &h, Ratio::new(3, 2).unwrap()).unwrap();
        assert_eq!(art.constant("k"), Some(20));
        assert_eq!(art.constant("sizeL"), Some(20));
        assert_eq!(art.constant("sizeR"), Some(60));
        assert_eq!(art.output.n(), 200);
        distinct_roles(&art);

        let g = &art.output;
        let left = art.vertices_where(|r| matches!(r, Role::Left { .. } | Role::LeftPad(_)));
        let right = art.vertices_where(|r| matches!(r, Role::Right { .. } | Role::RightPad(_)));
        for &a in &left {
            for &b in &right {
                assert!(g.has_edge(a, b));
            }
        }
        for v in art.vertices_where(|r| matches!(r, Role::A(_))) {
            assert_eq!(g.degree(v), 2);
        }
        for v in art.vertices_where(|r| matches!(r, Role::B(_))) {
            assert_eq!(g.degree(v), 1);
        }
    }

    #[test]
    fn hat_h_preconditions() {
        let h = g_ed(&complete(1)).output;
        let bigger = h.add_isolated(1);
        assert!(matches!(
            build_hat_h(&h, &bigger, Ratio::ONE),
            Err(Error::Precondition(_))
        ));
        assert!(build_hat_h(&h, &h, Ratio::TWO).is_err());
        assert!(build_hat_h(&h, &h, Ratio::new(5, 2).unwrap()).is_err());
        let (a, b) = pad_to_equal(&h, &bigger);
        assert!(build_hat_h(&a, &b, Ratio::ONE).is_ok());
    }

    #[test]
    fn hat_g_examples() {
        let k1 = complete(1);
        let art = build_hat_g(&k1, &k1).unwrap();
        assert_eq!(art.output.n(), 6);
        assert_eq!((art.constant("j"), art.constant("q")), (Some(2), Some(3)));

        let k2 = complete(2);
        let art = build_hat_g(&k2, &k2).unwrap();
        assert_eq!(art.output.n(), 26);
        assert_eq!((art.constant("j"), art.constant("q")), (Some(8), Some(14)));
        assert_eq!(
            art.vertices_where(|r| matches!(r, Role::RightPad(_))).len(),
            2
        );
        distinct_roles(&art);

        let art = build_hat_g(&Graph::empty(4), &k2).unwrap();
        assert_eq!(art.output.n(), 26);
        assert_eq!(art.constant("q"), Some(14));

        // H2 is the smaller side here
        let art = build_hat_g(&Graph::empty(9), &k2).unwrap();
        assert_eq!(
            art.vertices_where(|r| matches!(r, Role::LeftPad(_))).len(),
            5
        );
        distinct_roles(&art);
    }

    #[test]
    fn hat_g_degree_gap() {
        for (g1, g2) in [
            (complete(2), complete(2)),
            (path(3), complete(3)),
            (Graph::empty(7), path(2)),
        ] {
            let art = build_hat_g(&g1, &g2).unwrap();
            let g = &art.output;
            let right = art.vertices_where(|r| matches!(r, Role::Right { .. } | Role::RightPad(_)));
            let others: Vec<_> = g.vertices().filter(|v| !right.contains(v)).collect();
            let min_r = right.iter().map(|&v| g.degree(v)).min().unwrap();
            let max_o = others.iter().map(|&v| g.degree(v)).max().unwrap();
            assert!(min_r > max_o);
            // the gap survives deleting R: L keeps at most |R| - 1 fewer R-neighbors
            let j = art.constant("j").unwrap() as usize;
            let h2 = g_mdg(&g2).output;
            let n_h2 = others.len() - 2 * j;
            assert!(j + n_h2 > h2.max_deg() + 1 + right.len() - 1);
        }
    }

    #[test]
    fn solve_padding_examples() {
        assert_eq!(solve_padding(Ratio::TWO, 2, 0, 1, 1).unwrap(), (73, 71));
        let (n2, mu) = solve_padding(Ratio::TWO, 0, 0, 1, 0).unwrap();
        assert_eq!(n2, mu);
        assert!(solve_padding(Ratio::ONE, 2, 0, 1, 1).is_err());
    }

    /// Independent oracle: scan every mu from 1 upward.
    fn naive_padding(r: Ratio, n1: usize, k: u64, delta: usize, floor: usize) -> (usize, usize) {
        let (ell, m) = (r.ell() as i128, r.m() as i128);
        for mu in 1i128.. {
            let rhs = (ell - m) * (n1 as i128 + mu) - k as i128;
            if rhs < 0 || rhs % m != 0 || rhs / m < floor as i128 {
                continue;
            }
            let n2 = (rhs / m) as usize;
            let mu_u = mu as usize;
            let total = (n1 + n2) as f64;
            let x = mu as f64;
            if x * (x.ln() - 2.0 * ((delta + 2) as f64).ln() - 1.0) >= total
                && gadgets::gadget_feasible(&GadgetSpec {
                    n1,
                    n2,
                    delta,
                    mu: mu_u,
                })
            {
                return (n2, mu_u);
            }
        }
        unreachable!()
    }

    #[test]
    fn solve_padding_matches_scan() {
        for (l, m) in [(2, 1), (3, 2), (5, 3), (7, 4), (3, 1)] {
            let r = Ratio::new(l, m).unwrap();
            for (n1, k, delta, floor) in [(2, 0, 1, 1), (8, 12, 3, 4), (6, 5, 2, 0), (12, 48, 4, 9)]
            {
                let got = solve_padding(r, n1, k, delta, floor).unwrap();
                assert_eq!(
                    got,
                    naive_padding(r, n1, k, delta, floor),
                    "r={r} n1={n1} k={k}"
                );
                let (n2, mu) = got;
                assert_eq!(
                    m as u128 * n2 as u128 + k as u128,
                    (l - m) as u128 * (n1 + mu) as u128
                );
            }
        }
    }

    #[test]
    fn hat_g_r_reference_instance() {
        let k1 = complete(1);
        let art = build_hat_g_r(&k1, &k1, Ratio::TWO).unwrap();
        assert_eq!(art.output.n(), 219);
        assert_eq!(art.constant("p"), Some(1));
        assert_eq!(art.constant("q"), Some(73));
        assert_eq!(art.constant("n1"), Some(2));
        assert_eq!(art.constant("n2"), Some(73));
        assert_eq!(art.constant("mu"), Some(71));
        assert_eq!(art.constant("delta"), Some(1));
        distinct_roles(&art);
        assert!(build_hat_g_r(&k1, &k1, Ratio::ONE).is_err());
    }

    #[test]
    fn hat_g_r_overlays_copies() {
        let g1 = path(2);
        let g2 = complete(2);
        let r = Ratio::new(3, 2).unwrap();
        let art = build_hat_g_r(&g1, &g2, r).unwrap();
        let h2 = g_mdg(&g2).output;
        let n1 = art.constant("n1").unwrap() as usize;
        let n2 = art.constant("n2").unwrap() as usize;
        let mu = art.constant("mu").unwrap() as usize;
        assert_eq!(n1, 3 * h2.n());
        assert!(n2 >= 2 * g1.n());
        // m n2 + m ell |E(G2)| (Δ2 + 1) = (ell - m)(n1 + mu) with m = 2, ell = 3
        assert_eq!(2 * n2 + 2 * 3 * 2, n1 + mu);
        let spec = GadgetSpec {
            n1,
            n2,
            delta: h2.max_deg() + 1,
            mu,
        };
        let (bare, _) = gadgets::lemma4_graph(&spec).unwrap();
        assert_eq!(art.output.m(), bare.m() + 3 * h2.m() + 2 * g1.m());
        distinct_roles(&art);
    }
}

//! Verification suites behind `vclab verify`. Each check compares the value
//! a construction claims with what an exact oracle measures.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use clap::ValueEnum;

use vclab_core::exact::{
    self, greedy_matching, konig_cover, max_bipartite_matching, min_maximal_matching,
    min_maximal_matching_with, mvc_by_branch_and_bound, mvc_by_enumeration, mvc_with,
};
use vclab_core::gadgets::{self, GadgetSpec};
use vclab_core::generate::{all_labeled_graphs, complete, random_graphs};
use vclab_core::heuristics::{min_ed_with, min_mdg_with, replay_ed, run_mdg};
use vclab_core::reductions::{build_hat_g, build_hat_g_r, build_hat_h, g_ed, g_mdg};
use vclab_core::{Budget, Graph, Policy, Ratio, Role, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Eq1,
    Eq4,
    Thm1,
    Thm3r1,
    Thm3r2,
    Lemma4,
    Oracles,
    All,
}

impl Suite {
    const PARTS: [Suite; 7] = [
        Suite::Oracles,
        Suite::Eq1,
        Suite::Eq4,
        Suite::Thm1,
        Suite::Thm3r1,
        Suite::Thm3r2,
        Suite::Lemma4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Eq1 => "eq1",
            Suite::Eq4 => "eq4",
            Suite::Thm1 => "thm1",
            Suite::Thm3r1 => "thm3r1",
            Suite::Thm3r2 => "thm3r2",
            Suite::Lemma4 => "lemma4",
            Suite::Oracles => "oracles",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub checks: Vec<CheckResult>,
    /// Checks not started because the time budget ran out.
    pub skipped: usize,
}

impl Report {
    pub fn incomplete(&self) -> bool {
        self.skipped > 0
    }

    pub fn passed(&self) -> bool {
        !self.incomplete() && self.checks.iter().all(|c| c.passed)
    }

    pub fn summary(&self) -> String {
        let ok = self.checks.iter().filter(|c| c.passed).count();
        let mut s = format!(
            "suite {}: {ok}/{} checks passed",
            self.suite.name(),
            self.checks.len()
        );
        if self.incomplete() {
            write!(
                s,
                ", {} not run (budget exhausted, report incomplete)",
                self.skipped
            )
            .unwrap();
        }
        s
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(s, "{tag} {}: {}", c.name, c.detail).unwrap();
        }
        writeln!(s, "{}", self.summary()).unwrap();
        s
    }
}

struct Runner {
    deadline: Instant,
    seed: u64,
    checks: Vec<CheckResult>,
    skipped: usize,
}

type Outcome = Result<String, String>;

impl Runner {
    fn check(&mut self, name: impl Into<String>, f: impl FnOnce() -> Outcome) {
        if Instant::now() >= self.deadline {
            self.skipped += 1;
            return;
        }
        let (passed, detail) = match f() {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.checks.push(CheckResult {
            name: name.into(),
            passed,
            detail,
        });
    }
}

fn lib<T>(r: vclab_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn verdict(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn wide() -> Budget {
    Budget::with_edges(usize::MAX)
}

/// Runs `suite`. The budget is checked before each check; a check already
/// running is never interrupted.
pub fn run_verify(suite: Suite, budget: Duration, seed: u64) -> Report {
    let mut runner = Runner {
        deadline: Instant::now() + budget,
        seed,
        checks: Vec::new(),
        skipped: 0,
    };
    let parts: &[Suite] = if suite == Suite::All {
        &Suite::PARTS
    } else {
        std::slice::from_ref(&suite)
    };
    for part in parts {
        match part {
            Suite::Eq1 => eq1(&mut runner),
            Suite::Eq4 => eq4(&mut runner),
            Suite::Thm1 => thm1(&mut runner),
            Suite::Thm3r1 => thm3r1(&mut runner),
            Suite::Thm3r2 => thm3r2(&mut runner),
            Suite::Lemma4 => lemma4(&mut runner),
            Suite::Oracles => oracles(&mut runner),
            Suite::All => unreachable!(),
        }
    }
    Report {
        suite,
        checks: runner.checks,
        skipped: runner.skipped,
    }
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g
        .edges()
        .map(|(u, v)| format!("{}-{}", u + 1, v + 1))
        .collect();
    format!("n={} [{}]", g.n(), edges.join(" "))
}

fn eq1(r: &mut Runner) {
    for g in (0..=4).flat_map(all_labeled_graphs) {
        r.check(format!("eq1 {}", describe(&g)), || {
            let h = g_ed(&g).output;
            let claimed = 2 * (lib(exact::mvc(&g))? + g.n());
            let mvc_h = lib(mvc_with(&h, &wide()))?.size;
            let ed = lib(min_ed_with(&h, &wide()))?.size();
            verdict(
                claimed == mvc_h && ed == mvc_h,
                format!("mvc(H) claimed {claimed}, oracle {mvc_h}; min-ed(H) {ed}"),
            )
        });
    }
}

fn eq4(r: &mut Runner) {
    for g in (0..=4).flat_map(all_labeled_graphs).filter(|g| g.m() <= 3) {
        r.check(format!("eq4 {}", describe(&g)), || {
            let h = g_mdg(&g).output;
            let claimed = lib(exact::mvc(&g))? + g.m() * (g.max_deg() + 1);
            let mvc_h = lib(mvc_with(&h, &wide()))?.size;
            let mdg = lib(min_mdg_with(&h, &wide()))?.size();
            verdict(
                claimed == mvc_h && mdg == mvc_h,
                format!("mvc(H) claimed {claimed}, oracle {mvc_h}; min-mdg(H) {mdg}"),
            )
        });
    }
}

fn thm1(r: &mut Runner) {
    let h = g_ed(&complete(1)).output;
    r.check("thm1 r=1/1 mvc", || {
        let art = lib(build_hat_h(&h, &h, Ratio::ONE))?;
        let got = lib(mvc_by_branch_and_bound(&art.output, &wide()))?.size;
        verdict(got == 18, format!("claimed 18, oracle {got}"))
    });
    r.check("thm1 r=1/1 min-ed", || {
        let art = lib(build_hat_h(&h, &h, Ratio::ONE))?;
        let got = 2 * lib(min_maximal_matching_with(&art.output, &wide()))?.len();
        verdict(
            got == 18,
            format!("claimed 18, oracle 2*min-maximal-matching = {got}"),
        )
    });

    let ratio = Ratio::new(3, 2).expect("valid ratio");
    let art = match build_hat_h(&h, &h, ratio) {
        Ok(a) => a,
        Err(e) => {
            r.check("thm1 r=3/2 construction", || Err(e.to_string()));
            return;
        }
    };
    let g = &art.output;
    let k = art.constant("k").unwrap_or(0) as usize;
    let m = ratio.m() as usize;
    // mvc(g_ed(K1)) = 2 for both H1 and H2
    let eq3 = m * 2 + 2 * k * m;
    let eq2_num = ratio.ell() as usize * eq3;
    let eq2 = eq2_num / m;
    let left = art.vertices_where(|x| matches!(x, Role::Left { .. } | Role::LeftPad(_)));
    let right = art.vertices_where(|x| matches!(x, Role::Right { .. } | Role::RightPad(_)));
    let pend_a = art.vertices_where(|x| matches!(x, Role::A(_)));

    r.check("thm1 r=3/2 explicit cover", || {
        let mut cover: VertexSet = left.iter().chain(&pend_a).copied().collect();
        for (v, role) in art.roles.iter().enumerate() {
            if let Role::Right { source: 0 | 2, .. } = role {
                cover.insert(v);
            }
        }
        let valid = lib(g.is_vertex_cover(&cover))?;
        verdict(
            valid && cover.len() == eq3,
            format!(
                "claimed {eq3}, cover of size {} (valid: {valid})",
                cover.len()
            ),
        )
    });
    r.check("thm1 r=3/2 explicit ED trace", || {
        let mut trace: Vec<(usize, usize)> =
            right.iter().zip(&pend_a).map(|(&x, &a)| (x, a)).collect();
        let mut slots = std::collections::BTreeMap::new();
        for (v, role) in art.roles.iter().enumerate() {
            if let Role::Left { copy, source } = role {
                slots.entry(*copy).or_insert([0; 4])[*source] = v;
            }
        }
        trace.extend(slots.values().map(|s| (s[0], s[2])));
        let t = lib(replay_ed(g, &trace))?;
        verdict(
            t.size() == eq2 && eq2 * m == eq2_num,
            format!(
                "claimed {eq2} = {ratio} * {eq3}, trace of size {}",
                t.size()
            ),
        )
    });
    r.check("thm1 r=3/2 mvc lower bound", || {
        // L is joined to R, so a cover contains one of them entirely
        let mut bound = usize::MAX;
        for side in [&left, &right] {
            let doomed: VertexSet = side.iter().copied().collect();
            let rest = lib(g.delete_vertices(&doomed))?;
            bound = bound.min(side.len() + greedy_matching(&rest.graph).len());
        }
        verdict(
            bound >= eq3,
            format!("claimed {eq3}, matching lower bound {bound}"),
        )
    });
}

fn thm3r1(r: &mut Runner) {
    let k1 = complete(1);
    let k2 = complete(2);
    let cases = [
        ("K1/K1", k1.clone(), k1, (3, 3)),
        ("K2/K2", k2.clone(), k2.clone(), (15, 15)),
        ("4K1/K2", Graph::empty(4), k2, (14, 15)),
    ];
    for (name, g1, g2, expected) in cases {
        r.check(format!("thm3r1 {name}"), || {
            let art = lib(build_hat_g(&g1, &g2))?;
            let q = art.constant("q").unwrap_or(0) as usize;
            let claimed = (lib(exact::mvc(&g1))? + q, lib(exact::mvc(&g2))? + q);
            let oracle = (
                lib(mvc_with(&art.output, &wide()))?.size,
                lib(min_mdg_with(&art.output, &wide()))?.size(),
            );
            verdict(
                claimed == oracle && oracle == expected,
                format!(
                    "(mvc, min-mdg) claimed {claimed:?}, oracle {oracle:?}, member {}",
                    oracle.0 == oracle.1
                ),
            )
        });
    }
}

fn thm3r2(r: &mut Runner) {
    let k1 = complete(1);
    let art = match build_hat_g_r(&k1, &k1, Ratio::TWO) {
        Ok(a) => a,
        Err(e) => {
            r.check("thm3r2 construction", || Err(e.to_string()));
            return;
        }
    };
    let c = |name| art.constant(name).unwrap_or(0) as usize;
    let spec = GadgetSpec {
        n1: c("n1"),
        n2: c("n2"),
        delta: c("delta"),
        mu: c("mu"),
    };
    let (p, q) = (c("p"), c("q"));
    let g = &art.output;
    let layout = match gadgets::lemma4_graph(&spec) {
        Ok((_, layout)) => layout,
        Err(e) => {
            r.check("thm3r2 layout", || Err(e.to_string()));
            return;
        }
    };
    // mvc(K1) = 0, so both identities reduce to q
    let claimed_mvc = p * exact::mvc(&k1).unwrap_or(0) + q;
    r.check("thm3r2 mvc", || {
        let side = layout.vtilde_set();
        let matching = lib(max_bipartite_matching(g, &side))?;
        let cover = lib(konig_cover(g, &side))?.size;
        verdict(
            matching == claimed_mvc && cover == claimed_mvc,
            format!(
                "claimed {claimed_mvc}, matching {matching}, konig cover {cover} ({} vertices)",
                g.n()
            ),
        )
    });
    let seed = r.seed;
    r.check("thm3r2 MDG runs", || {
        let claimed = 2 * claimed_mvc;
        for s in 0..100 {
            let t = lib(run_mdg(g, Policy::Random(seed.wrapping_add(s))))?;
            if t.size() != claimed {
                return Err(format!("claimed {claimed}, run {s} gave {}", t.size()));
            }
        }
        Ok(format!("claimed {claimed}, 100 seeded runs all {claimed}"))
    });
    r.check("thm3r2 forcing", || {
        let p4 = lib(gadgets::verify_property4(g, &layout, 1000, seed))?;
        let vf = lib(gadgets::verify_v_first(g, &layout, 1000, seed ^ 1))?;
        verdict(
            p4 && vf,
            format!("property4 {p4}, V-first {vf} (1000 samples each)"),
        )
    });
}

fn lemma4(r: &mut Runner) {
    let specs = [
        GadgetSpec::with_min_mu(1, 1, 1),
        GadgetSpec::with_min_mu(2, 73, 1),
        GadgetSpec::with_min_mu(4, 6, 2),
        GadgetSpec::with_min_mu(10, 3, 3),
        GadgetSpec {
            n1: 3,
            n2: 5,
            delta: 1,
            mu: 40,
        },
    ];
    let seed = r.seed;
    for spec in specs {
        let name = format!(
            "lemma4 n1={} n2={} delta={} mu={}",
            spec.n1, spec.n2, spec.delta, spec.mu
        );
        r.check(name, || {
            if !gadgets::gadget_feasible(&spec) {
                return Err("floor-sum supply too small".into());
            }
            let (g, layout) = lib(gadgets::lemma4_graph(&spec))?;
            if !gadgets::verify_structure(&g, &layout) {
                return Err("structural properties fail".into());
            }
            let opt = lib(konig_cover(&g, &layout.vtilde_set()))?.size;
            let forcing = lib(gadgets::verify_property4(&g, &layout, 200, seed))?;
            let mut sizes = Vec::new();
            for s in 0..10 {
                sizes.push(lib(run_mdg(&g, Policy::Random(seed.wrapping_add(s))))?.size());
            }
            let claimed = (spec.v_len(), spec.vtilde_len());
            let ok = opt == claimed.1 && forcing && sizes.iter().all(|&x| x == claimed.0);
            let ratio = Ratio::new(claimed.0 as i64, claimed.1 as i64).map_err(|e| e.to_string())?;
            verdict(
                ok,
                format!(
                    "MDG ratio claimed {ratio}; konig mvc {opt}, MDG sizes {}..{}, property4 {forcing}",
                    sizes.iter().min().unwrap(),
                    sizes.iter().max().unwrap()
                ),
            )
        });
    }
}

fn oracles(r: &mut Runner) {
    let seed = r.seed;
    r.check("oracles min-ed = 2 * min-maximal-matching", || {
        let graphs = random_graphs(seed, 200, 12, 12);
        for g in &graphs {
            let ed = lib(min_ed_with(g, &wide()))?.size();
            let mm = lib(min_maximal_matching(g))?;
            if ed != 2 * mm {
                return Err(format!("{}: min-ed {ed}, 2*mmm {}", describe(g), 2 * mm));
            }
        }
        Ok(format!("{} random graphs agree", graphs.len()))
    });
    r.check("oracles enumeration = branch-and-bound", || {
        let mut graphs: Vec<Graph> = all_labeled_graphs(4).collect();
        graphs.extend(random_graphs(seed.wrapping_add(1), 300, 16, 40));
        for g in &graphs {
            let a = lib(mvc_by_enumeration(g))?.size;
            let b = lib(mvc_by_branch_and_bound(g, &wide()))?.size;
            if a != b {
                return Err(format!(
                    "{}: enumeration {a}, branch-and-bound {b}",
                    describe(g)
                ));
            }
        }
        Ok(format!("{} graphs agree", graphs.len()))
    });
}

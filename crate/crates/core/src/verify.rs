//! Reproduces the published claims about the example graphs and families.
//!
//! Each criterion runs to completion and reports what it measured, so a
//! failure names the first claim that did not hold. Random inputs come from
//! fixed seeds and every run is identical.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::colouring::{count_colourings, is_proper, partition_of, Colouring, DEFAULT_ENUMERATION_CAP};
use crate::error::Error;
use crate::exact::{chromatic_number, clique_number, minimum_colouring};
use crate::families::{self, apply_op_2k2, find_op2k2_candidates, Op2K2Case, Op2K2Input};
use crate::frozen::{
    build_not_kempe_class_certificate, certificate_against_minimum, is_frozen, is_kempe_frozen,
    is_kempe_frozen_clique_partition,
};
use crate::graph::Graph;
use crate::hereditary::{is_h_free, is_isomorphic, named_graph, small_graph_census};
use crate::kempe::{kempe_chain, kempe_class_of, kempe_classes, kempe_swap, DEFAULT_STATE_CAP};

/// Seed for the random cographs of criterion 8.
pub const COGRAPH_SEED: u64 = 0x6b65_6d70_6501;
/// Seed for the property cases of criterion 10.
pub const PROPERTY_SEED: u64 = 0x6b65_6d70_650a;
/// Number of random cographs checked.
pub const COGRAPH_COUNT: usize = 200;
/// Number of random graph-colouring pairs in the property suite; each pair
/// exercises five properties.
pub const PROPERTY_GRAPHS: usize = 2_500;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(serialize_with = "as_millis")]
    pub elapsed: Duration,
    #[serde(serialize_with = "opt_as_millis")]
    pub budget: Option<Duration>,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u128(d.as_millis())
}

fn opt_as_millis<S: serde::Serializer>(d: &Option<Duration>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match d {
        Some(d) => s.serialize_some(&d.as_millis()),
        None => s.serialize_none(),
    }
}

impl CriterionResult {
    pub fn within_budget(&self) -> bool {
        self.budget.is_none_or(|b| self.elapsed <= b)
    }
}

type Outcome = std::result::Result<String, String>;

fn lib(e: Error) -> String {
    e.to_string()
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> std::result::Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

struct Criterion {
    id: u8,
    title: &'static str,
    budget: Option<Duration>,
    run: fn(bool) -> Outcome,
}

const CRITERIA: [Criterion; 10] = [
    Criterion {
        id: 1,
        title: "prism: 12 colourings in two Kempe classes of size 6",
        budget: Some(Duration::from_secs(1)),
        run: prism,
    },
    Criterion {
        id: 2,
        title: "14-vertex triangle-free graph with a Kempe-frozen 3-colouring",
        budget: Some(Duration::from_secs(60)),
        run: triangle_free_graph,
    },
    Criterion {
        id: 3,
        title: "15-vertex C4-free graph with Hamiltonian-path class pairs",
        budget: Some(Duration::from_secs(5)),
        run: c4_free_graph,
    },
    Criterion {
        id: 4,
        title: "D_q: 2K2-free, chi = omega, psi Kempe frozen",
        budget: Some(Duration::from_secs(60)),
        run: d_family,
    },
    Criterion {
        id: 5,
        title: "Y_r: 2K2-free, chi = omega = 2r, zeta Kempe frozen",
        budget: Some(Duration::from_secs(30)),
        run: y_family,
    },
    Criterion {
        id: 6,
        title: "H_k: C4-free with k-colourings not one Kempe class",
        budget: Some(Duration::from_secs(30)),
        run: h_family,
    },
    Criterion {
        id: 7,
        title: "2K2-free operation on D_2",
        budget: Some(Duration::from_secs(60)),
        run: operation_on_d2,
    },
    Criterion {
        id: 8,
        title: "random P4-free graphs are Kempe connected",
        budget: Some(Duration::from_secs(300)),
        run: cographs,
    },
    Criterion {
        id: 9,
        title: "census of graphs on 5 vertices",
        budget: Some(Duration::from_secs(10)),
        run: census,
    },
    Criterion {
        id: 10,
        title: "seeded property suite",
        budget: None,
        run: properties,
    },
];

/// Runs one criterion by id (1 to 10).
pub fn run_criterion(id: u8, fast: bool) -> Option<CriterionResult> {
    let c = CRITERIA.iter().find(|c| c.id == id)?;
    let start = Instant::now();
    let outcome = (c.run)(fast);
    let elapsed = start.elapsed();
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Some(CriterionResult {
        id: c.id,
        title: c.title,
        passed,
        detail,
        elapsed,
        budget: c.budget,
    })
}

/// Runs every criterion in order. `fast` skips the `Y_3` checks beyond
/// validating `zeta` and all `q = 4` checks.
pub fn run_all(fast: bool) -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .map(|c| run_criterion(c.id, fast).expect("criterion ids are listed"))
        .collect()
}

fn prism(_fast: bool) -> Outcome {
    let (g, left, right) = families::gen_prism();
    expect_eq("3-colourings", count_colourings(&g, 3, DEFAULT_ENUMERATION_CAP).map_err(lib)?, 12)?;
    let report = kempe_classes(&g, 3, DEFAULT_STATE_CAP).map_err(lib)?;
    let sizes: Vec<_> = report.classes.iter().map(|c| c.size).collect();
    expect_eq("class sizes", sizes, vec![6, 6])?;
    let li = report.class_index_of(&g, &left).map_err(lib)?;
    let ri = report.class_index_of(&g, &right).map_err(lib)?;
    ensure!(li.is_some() && ri.is_some() && li != ri, "left and right share a class");
    Ok("12 colourings, classes of size 6 and 6, left and right separated".into())
}

fn triangle_free_graph(_fast: bool) -> Outcome {
    let (g, left, right) = families::gen_fig1();
    expect_eq("vertices", g.n(), 14)?;
    ensure!(is_h_free(&g, &Graph::complete(3)).map_err(lib)?, "graph has a triangle");
    expect_eq("chi", chromatic_number(&g).map_err(lib)?, 3)?;
    ensure!(is_proper(&g, &left).map_err(lib)?, "left colouring is not proper");
    ensure!(is_proper(&g, &right).map_err(lib)?, "right colouring is not proper");
    ensure!(is_kempe_frozen(&g, &left).map_err(lib)?, "left colouring is not Kempe frozen");
    ensure!(partition_of(&left) != partition_of(&right), "left and right share a partition");
    let report = kempe_classes(&g, 3, DEFAULT_STATE_CAP).map_err(lib)?;
    ensure!(report.class_count() >= 2, "only {} Kempe class", report.class_count());
    Ok(format!(
        "{} 3-colourings in {} Kempe classes",
        report.total_colourings,
        report.class_count()
    ))
}

fn c4_free_graph(_fast: bool) -> Outcome {
    let (g, left, right) = families::gen_fig2();
    expect_eq("vertices", g.n(), 15)?;
    ensure!(is_h_free(&g, &Graph::cycle(4).map_err(lib)?).map_err(lib)?, "graph has an induced C4");
    expect_eq("chi", chromatic_number(&g).map_err(lib)?, 3)?;
    ensure!(is_proper(&g, &left).map_err(lib)?, "left colouring is not proper");
    let classes = crate::colouring::colour_classes(&left);
    for a in 0..3 {
        for b in a + 1..3 {
            let mut s = classes[a].clone();
            s.union_with(&classes[b]);
            let h = g.induced_subgraph(&s).map_err(lib)?;
            let pair = (a + 1, b + 1);
            expect_eq(&format!("vertices in classes {pair:?}"), h.n(), 10)?;
            expect_eq(&format!("edges in classes {pair:?}"), h.edge_count(), 9)?;
            ensure!(h.max_degree() <= 2, "classes {pair:?} have a vertex of degree > 2");
            ensure!(h.is_connected(), "classes {pair:?} are disconnected");
        }
    }
    build_not_kempe_class_certificate(&g, &left, &right).map_err(lib)?;
    Ok("every class pair is a Hamiltonian path on 10 vertices; certificate valid".into())
}

fn d_family(fast: bool) -> Outcome {
    let two_k2 = named_graph("2K2").map_err(lib)?;
    let qs: &[(usize, usize)] = if fast { &[(2, 4), (3, 6)] } else { &[(2, 4), (3, 6), (4, 7)] };
    let mut done = Vec::new();
    for &(q, chi_want) in qs {
        let (g, psi) = families::gen_dq(q).map_err(lib)?;
        let name = format!("D_{q}");
        expect_eq(&format!("{name} vertices"), g.n(), 4 * q + 2)?;
        ensure!(is_h_free(&g, &two_k2).map_err(lib)?, "{name} has an induced 2K2");
        expect_eq(&format!("{name} chi"), chromatic_number(&g).map_err(lib)?, chi_want)?;
        expect_eq(&format!("{name} omega"), clique_number(&g).map_err(lib)?, chi_want)?;
        expect_eq(&format!("{name} psi colours"), psi.k(), 2 * q + 1)?;
        ensure!(is_proper(&g, &psi).map_err(lib)?, "{name}: psi is not proper");
        ensure!(is_frozen(&g, &psi).map_err(lib)?, "{name}: psi is not frozen");
        ensure!(is_kempe_frozen(&g, &psi).map_err(lib)?, "{name}: psi is not Kempe frozen");
        certificate_against_minimum(&g, &psi).map_err(lib)?;
        done.push(format!("q={q} chi={chi_want}"));
        if q == 2 {
            let report = kempe_classes(&g, 5, DEFAULT_STATE_CAP).map_err(lib)?;
            ensure!(report.class_count() >= 2, "D_2 has one Kempe class at k = 5");
            done.push(format!(
                "D_2 at k=5: {} colourings, {} classes",
                report.total_colourings,
                report.class_count()
            ));
        }
    }
    if fast {
        done.push("q=4 skipped".into());
    }
    Ok(done.join("; "))
}

fn y_family(fast: bool) -> Outcome {
    let two_k2 = named_graph("2K2").map_err(lib)?;
    let mut done = Vec::new();
    for r in [2usize, 3] {
        let (g, zeta) = families::gen_yr(r).map_err(lib)?;
        let name = format!("Y_{r}");
        expect_eq(&format!("{name} vertices"), g.n(), 6 * r)?;
        expect_eq(&format!("{name} zeta colours"), zeta.k(), 3 * r)?;
        ensure!(is_proper(&g, &zeta).map_err(lib)?, "{name}: zeta is not proper");
        ensure!(is_kempe_frozen(&g, &zeta).map_err(lib)?, "{name}: zeta is not Kempe frozen");
        if fast && r == 3 {
            done.push("r=3 zeta only".into());
            continue;
        }
        ensure!(is_h_free(&g, &two_k2).map_err(lib)?, "{name} has an induced 2K2");
        expect_eq(&format!("{name} chi"), chromatic_number(&g).map_err(lib)?, 2 * r)?;
        expect_eq(&format!("{name} omega"), clique_number(&g).map_err(lib)?, 2 * r)?;
        let min = families::yr_figure_minimum_colouring(r).expect("figures exist for r = 2, 3");
        expect_eq(&format!("{name} drawn colouring colours"), min.k(), 2 * r)?;
        build_not_kempe_class_certificate(&g, &zeta, &min.with_k(3 * r).map_err(lib)?).map_err(lib)?;
        done.push(format!("r={r} chi={}", 2 * r));
    }
    let (y1, _) = families::gen_yr(1).map_err(lib)?;
    ensure!(
        is_isomorphic(&y1.complement(), &families::gen_prism().0),
        "complement of Y_1 is not the prism"
    );
    done.push("complement of Y_1 is the prism".into());
    Ok(done.join("; "))
}

fn h_family(_fast: bool) -> Outcome {
    let c4 = Graph::cycle(4).map_err(lib)?;
    for k in [4usize, 5] {
        let (g, left, right) = families::gen_hk(k).map_err(lib)?;
        ensure!(is_h_free(&g, &c4).map_err(lib)?, "H_{k} has an induced C4");
        expect_eq(&format!("H_{k} chi"), chromatic_number(&g).map_err(lib)?, k)?;
        build_not_kempe_class_certificate(&g, &left, &right).map_err(lib)?;
    }
    Ok("H_4 and H_5 C4-free with chi = k and valid certificates".into())
}

fn operation_on_d2(_fast: bool) -> Outcome {
    let two_k2 = named_graph("2K2").map_err(lib)?;
    let (g, psi) = families::gen_dq(2).map_err(lib)?;
    let beta = minimum_colouring(&g).map_err(lib)?;
    expect_eq("chi(D_2)", beta.k(), 4)?;
    let candidates = find_op2k2_candidates(&g, &beta, &psi).map_err(lib)?;
    ensure!(!candidates.is_empty(), "no candidates on D_2");
    let mut applied = Vec::new();
    for case in [Op2K2Case::DistinctColours, Op2K2Case::ColourClass] {
        let Some(cand) = candidates.iter().find(|c| c.case == case && c.preserves_2k2_free()) else {
            continue;
        };
        let out = apply_op_2k2(&Op2K2Input {
            g: g.clone(),
            beta: beta.clone(),
            gamma: psi.clone(),
            x: cand.x,
            y: cand.y,
        })
        .map_err(lib)?;
        let at = format!("{case:?} at ({}, {})", cand.x, cand.y);
        expect_eq(&format!("{at}: chi"), chromatic_number(&out.graph).map_err(lib)?, 5)?;
        ensure!(is_h_free(&out.graph, &two_k2).map_err(lib)?, "{at}: result has an induced 2K2");
        expect_eq(&format!("{at}: gamma' colours"), out.gamma_prime.k(), 6)?;
        ensure!(
            is_kempe_frozen(&out.graph, &out.gamma_prime).map_err(lib)?,
            "{at}: gamma' is not Kempe frozen"
        );
        ensure!(is_proper(&out.graph, &out.beta_prime).map_err(lib)?, "{at}: beta' is not proper");
        applied.push(at);
    }
    ensure!(!applied.is_empty(), "no candidate preserves 2K2-freeness");
    Ok(format!("{} candidates; applied {}", candidates.len(), applied.join(", ")))
}

/// A random cograph on `n` vertices built from a random union/join tree.
pub fn random_cograph(rng: &mut impl Rng, n: usize) -> Graph {
    if n == 1 {
        return Graph::edgeless(1);
    }
    let a = rng.gen_range(1..n);
    let (l, r) = (random_cograph(rng, a), random_cograph(rng, n - a));
    if rng.gen_bool(0.5) {
        l.disjoint_union(&r)
    } else {
        l.join(&r)
    }
}

fn cographs(_fast: bool) -> Outcome {
    let p4 = Graph::path(4);
    let mut rng = ChaCha8Rng::seed_from_u64(COGRAPH_SEED);
    let mut runs = 0;
    for i in 0..COGRAPH_COUNT {
        let n = rng.gen_range(1..=8);
        let g = random_cograph(&mut rng, n);
        ensure!(is_h_free(&g, &p4).map_err(lib)?, "cograph {i} has an induced P4");
        let chi = chromatic_number(&g).map_err(lib)?;
        for k in chi..=chi + 2 {
            let report = kempe_classes(&g, k, DEFAULT_STATE_CAP).map_err(lib)?;
            ensure!(
                report.class_count() == 1,
                "cograph {i} (n = {n}, edges {:?}) has {} classes at k = {k}",
                g.edges().collect::<Vec<_>>(),
                report.class_count()
            );
            runs += 1;
        }
    }
    Ok(format!("{COGRAPH_COUNT} cographs, {runs} values of k, one class each"))
}

fn census(_fast: bool) -> Outcome {
    let r = small_graph_census(5).map_err(lib)?;
    expect_eq(
        "(total, group1, group2, group3)",
        (r.total_classes, r.group1, r.group2, r.group3),
        (34, 20, 13, 1),
    )?;
    ensure!(
        is_isomorphic(&r.group3_members[0], &Graph::cycle(5).map_err(lib)?),
        "group-3 member is not C5"
    );
    Ok("34 = 20 + 13 + 1; the lone graph in group 3 is C5".into())
}

/// A uniformly random proper colouring built vertex by vertex in random
/// order, or `None` if the greedy choice gets stuck.
fn random_proper(rng: &mut impl Rng, g: &Graph, k: usize) -> Option<Colouring> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    let mut colours = vec![usize::MAX; g.n()];
    for &v in &order {
        let free: Vec<usize> = (0..k)
            .filter(|&c| g.neighbours(v).iter().all(|u| colours[u] != c))
            .collect();
        colours[v] = *free.choose(rng)?;
    }
    Colouring::new(k, colours).ok()
}

fn random_graph(rng: &mut impl Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.15..0.85);
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, &edges).expect("generated edges are simple")
}

fn swap_properties(rng: &mut impl Rng, g: &Graph, c: &Colouring) -> Outcome {
    let v = rng.gen_range(0..g.n());
    let a = c.colour(v);
    let b = (a + rng.gen_range(1..c.k())) % c.k();
    let swapped = kempe_swap(g, c, v, a, b).map_err(lib)?;
    ensure!(is_proper(g, &swapped).map_err(lib)?, "swap broke properness");
    let back = kempe_swap(g, &swapped, v, a, b).map_err(lib)?;
    ensure!(&back == c, "swapping twice did not restore the colouring");

    let pair: Vec<usize> = (0..g.n()).filter(|&w| c.colour(w) == a || c.colour(w) == b).collect();
    let chains: Vec<_> = pair
        .iter()
        .map(|&w| kempe_chain(g, c, w, a, b))
        .collect::<std::result::Result<_, _>>()
        .map_err(lib)?;
    for (i, ci) in chains.iter().enumerate() {
        ensure!(ci.contains(pair[i]), "chain misses its own vertex");
        ensure!(g.is_connected_within(ci), "chain is disconnected");
        for cj in &chains[i + 1..] {
            ensure!(ci == cj || ci.is_disjoint(cj), "two chains overlap");
            if ci != cj {
                let joined = ci.iter().any(|x| g.neighbours(x).iter().any(|y| cj.contains(y)));
                ensure!(!joined, "an edge joins two chains");
            }
        }
    }
    Ok(String::new())
}

fn frozen_properties(g: &Graph, c: &Colouring) -> Outcome {
    let kf = is_kempe_frozen(g, c).map_err(lib)?;
    if kf {
        ensure!(is_frozen(g, c).map_err(lib)?, "Kempe frozen but not frozen");
    }
    let p = partition_of(c);
    let dual = p.len() == c.k() && is_kempe_frozen_clique_partition(&g.complement(), &p).map_err(lib)?;
    ensure!(kf == dual, "complement duality fails (colouring {kf}, partition {dual})");
    Ok(String::new())
}

fn properties(_fast: bool) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(PROPERTY_SEED);
    let mut cases = 0usize;
    let mut kempe_frozen_seen = 0usize;
    let mut i = 0;
    while i < PROPERTY_GRAPHS {
        let g = random_graph(&mut rng, 8);
        let k = rng.gen_range(2..=5);
        let Some(c) = random_proper(&mut rng, &g, k) else {
            continue;
        };
        swap_properties(&mut rng, &g, &c).map_err(|e| format!("case {i}: {e}"))?;
        frozen_properties(&g, &c).map_err(|e| format!("case {i}: {e}"))?;
        if is_kempe_frozen(&g, &c).map_err(lib)? {
            kempe_frozen_seen += 1;
        }
        cases += 5;
        i += 1;
    }

    let prism = families::gen_prism();
    let fig1 = families::gen_fig1();
    let d2 = families::gen_dq(2).map_err(lib)?;
    for (name, g, start) in [("prism", &prism.0, &prism.1), ("fig1", &fig1.0, &fig1.1), ("D_2", &d2.0, &d2.1)] {
        ensure!(is_kempe_frozen(g, start).map_err(lib)?, "{name}: start is not Kempe frozen");
        let class = kempe_class_of(g, start, DEFAULT_STATE_CAP).map_err(lib)?;
        let want = partition_of(start);
        for c in &class {
            ensure!(partition_of(c) == want, "{name}: a swap changed the partition");
            frozen_properties(g, c).map_err(|e| format!("{name}: {e}"))?;
        }
        let factorial: usize = (1..=start.k()).product();
        expect_eq(&format!("{name} class size"), class.len(), factorial)?;
        cases += class.len();
    }
    ensure!(cases >= 10_000, "only {cases} cases");
    Ok(format!(
        "{cases} cases, {kempe_frozen_seen} random Kempe-frozen colourings, zero violations"
    ))
}

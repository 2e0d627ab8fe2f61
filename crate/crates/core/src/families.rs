//! Generators for the named graphs and colourings: the triangular prism, the
//! 14-vertex triangle-free graph, the 15-vertex C4-free graph, the dense
//! 2K2-free families `D_q` and `Y_r`, the joins `H_k`, and the vertex-pair
//! operation that raises the number of colours of a Kempe-frozen colouring
//! while keeping the graph 2K2-free.
//!
//! `D_q` and `Y_r` are built from their complements: a Hamiltonian cycle with
//! chords, complemented. Vertices are numbered in cycle order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::colouring::{colour_classes, require_proper, Colouring};
use crate::error::{Error, Result};
use crate::frozen::is_kempe_frozen;
use crate::graph::Graph;

fn one_based(k: usize, colours: &[usize]) -> Colouring {
    Colouring::from_one_based(k, colours).expect("embedded colouring is well formed")
}

/// The triangular prism on triangles `0,1,2` and `3,4,5` with matching
/// `0-3, 1-4, 2-5`, plus the two 3-colourings of the classic drawing. The
/// colourings induce different partitions.
pub fn gen_prism() -> (Graph, Colouring, Colouring) {
    let g = Graph::from_edges(
        6,
        &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    )
    .expect("prism edges are valid");
    (g, one_based(3, &[1, 3, 2, 2, 1, 3]), one_based(3, &[3, 2, 1, 2, 1, 3]))
}

const FIG1_EDGES: [(usize, usize); 26] = [
    (2, 0), (0, 1), (1, 3), (3, 2), (0, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 1),
    (2, 9), (9, 10), (10, 11), (11, 12), (12, 13), (13, 3), (6, 11), (0, 10), (5, 2),
    (12, 9), (10, 13), (7, 4), (5, 8), (10, 8), (1, 12), (7, 13),
];
const FIG1_LEFT: [usize; 14] = [2, 1, 1, 3, 3, 2, 3, 1, 3, 2, 1, 2, 3, 2];
const FIG1_RIGHT: [usize; 14] = [2, 1, 1, 3, 1, 3, 1, 3, 2, 2, 1, 2, 3, 2];

/// A triangle-free graph on 14 vertices with a Kempe-frozen 3-colouring
/// (left) and a 3-colouring with a different partition (right).
pub fn gen_fig1() -> (Graph, Colouring, Colouring) {
    let g = Graph::from_edges(14, &FIG1_EDGES).expect("embedded edges are valid");
    (g, one_based(3, &FIG1_LEFT), one_based(3, &FIG1_RIGHT))
}

const FIG2_EDGES: [(usize, usize); 27] = [
    (4, 5), (5, 3), (3, 6), (6, 2), (2, 7), (7, 1), (1, 8), (8, 0), (0, 9), (9, 14),
    (13, 9), (13, 7), (7, 12), (12, 5), (5, 11), (11, 8), (8, 10), (10, 6), (0, 14),
    (14, 2), (2, 12), (12, 4), (4, 11), (11, 1), (1, 10), (10, 3), (3, 13),
];
const FIG2_LEFT: [usize; 15] = [1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3];
const FIG2_RIGHT: [usize; 15] = [3, 1, 1, 1, 1, 2, 2, 2, 2, 1, 3, 3, 3, 3, 2];

/// A C4-free graph on 15 vertices. In the left colouring (classes of size 5)
/// every two classes induce a Hamiltonian path.
pub fn gen_fig2() -> (Graph, Colouring, Colouring) {
    let g = Graph::from_edges(15, &FIG2_EDGES).expect("embedded edges are valid");
    (g, one_based(3, &FIG2_LEFT), one_based(3, &FIG2_RIGHT))
}

/// Index of `u_i` in `D_q`.
pub fn dq_u(i: usize) -> usize {
    i
}

/// Index of `v_{ij}` (1-based `i`, `j`) in `D_q`.
pub fn dq_v(q: usize, i: usize, j: usize) -> usize {
    q + 2 + 3 * (i - 1) + (j - 1)
}

/// The complement of `D_q`: a Hamiltonian cycle on `4q + 2` vertices with
/// chords `u_i v_{i2}` and `v_{i1} v_{i3}`.
pub fn dq_complement(q: usize) -> Result<Graph> {
    if q < 2 {
        return Err(Error::input(format!("D_q needs q >= 2, got {q}")));
    }
    let n = 4 * q + 2;
    let cycle = (0..n).map(|i| (i, (i + 1) % n));
    let chords = (1..=q).flat_map(|i| [(dq_u(i), dq_v(q, i, 2)), (dq_v(q, i, 1), dq_v(q, i, 3))]);
    Ok(Graph::from_edge_iter(n, cycle.chain(chords)))
}

/// `D_q` with its Kempe-frozen `(2q+1)`-colouring `psi`.
pub fn gen_dq(q: usize) -> Result<(Graph, Colouring)> {
    let g = dq_complement(q)?.complement();
    let mut classes: Vec<[usize; 2]> = (1..=q).map(|i| [dq_u(i), dq_v(q, i, 2)]).collect();
    classes.push([dq_u(q + 1), dq_v(q, 1, 1)]);
    classes.extend((1..q).map(|i| [dq_v(q, i, 3), dq_v(q, i + 1, 1)]));
    classes.push([dq_v(q, q, 3), dq_u(0)]);
    Ok((g, colouring_from_pairs(4 * q + 2, &classes)))
}

fn colouring_from_pairs(n: usize, classes: &[[usize; 2]]) -> Colouring {
    let mut colours = vec![usize::MAX; n];
    for (c, pair) in classes.iter().enumerate() {
        for &v in pair {
            debug_assert_eq!(colours[v], usize::MAX);
            colours[v] = c;
        }
    }
    Colouring::new(classes.len(), colours).expect("pairs cover every vertex")
}

/// Index of `v_{ij}` (1-based) in `Y_r`.
pub fn yr_v(i: usize, j: usize) -> usize {
    3 * (i - 1) + (j - 1)
}

/// The complement of `Y_r`: a Hamiltonian cycle on `6r` vertices with chords
/// `v_{i1} v_{i3}` closing `2r` triangles and chords `v_{i2} v_{i+r,2}`
/// pairing opposite middle vertices.
pub fn yr_complement(r: usize) -> Result<Graph> {
    if r < 1 {
        return Err(Error::input("Y_r needs r >= 1"));
    }
    let n = 6 * r;
    let cycle = (0..n).map(|i| (i, (i + 1) % n));
    let triangles = (1..=2 * r).map(|i| (yr_v(i, 1), yr_v(i, 3)));
    let pairing = (1..=r).map(|i| (yr_v(i, 2), yr_v(i + r, 2)));
    Ok(Graph::from_edge_iter(n, cycle.chain(triangles).chain(pairing)))
}

/// `Y_r` with its Kempe-frozen `3r`-colouring `zeta`.
pub fn gen_yr(r: usize) -> Result<(Graph, Colouring)> {
    let g = yr_complement(r)?.complement();
    let mut classes: Vec<[usize; 2]> = (1..=r).map(|i| [yr_v(i, 2), yr_v(i + r, 2)]).collect();
    classes.extend((1..=2 * r).map(|i| [yr_v(i, 3), yr_v(i % (2 * r) + 1, 1)]));
    Ok((g, colouring_from_pairs(6 * r, &classes)))
}

/// Reads a colouring drawn around the cycle of a figure, where figure
/// position `p` is vertex `(p + offset) mod n`.
fn from_figure(k: usize, offset: usize, labels: &[usize]) -> Colouring {
    let n = labels.len();
    let mut colours = vec![0; n];
    for (p, &c) in labels.iter().enumerate() {
        colours[(p + offset) % n] = c;
    }
    one_based(k, &colours)
}

// Clique partitions of the complements drawn on the left of the D_2, D_3,
// Y_2 and Y_3 figures, listed by figure position.
const D2_FIGURE_MIN: [usize; 10] = [2, 2, 2, 1, 1, 1, 4, 4, 3, 3];
const D3_FIGURE_MIN: [usize; 14] = [3, 3, 2, 2, 2, 1, 1, 1, 6, 5, 5, 4, 4, 3];
const Y2_FIGURE_MIN: [usize; 12] = [3, 3, 2, 2, 2, 1, 1, 1, 4, 4, 4, 3];
const Y3_FIGURE_MIN: [usize; 18] = [4, 4, 3, 3, 3, 2, 2, 2, 1, 1, 1, 6, 6, 6, 5, 5, 5, 4];

/// The minimum colouring of `D_q` drawn in the figures (q = 2 or 3).
pub fn dq_figure_minimum_colouring(q: usize) -> Option<Colouring> {
    match q {
        2 => Some(from_figure(4, 4, &D2_FIGURE_MIN)),
        3 => Some(from_figure(6, 6, &D3_FIGURE_MIN)),
        _ => None,
    }
}

/// The minimum colouring of `Y_r` drawn in the figures (r = 2 or 3).
pub fn yr_figure_minimum_colouring(r: usize) -> Option<Colouring> {
    match r {
        2 => Some(from_figure(4, 1, &Y2_FIGURE_MIN)),
        3 => Some(from_figure(6, 1, &Y3_FIGURE_MIN)),
        _ => None,
    }
}

/// `H_k`: the 15-vertex C4-free graph joined with `K_{k-3}`, with both of its
/// 3-colourings extended by one fresh colour per clique vertex.
pub fn gen_hk(k: usize) -> Result<(Graph, Colouring, Colouring)> {
    if k < 3 {
        return Err(Error::input(format!("H_k needs k >= 3, got {k}")));
    }
    let (base, left, right) = gen_fig2();
    let g = base.join(&Graph::complete(k - 3));
    let extend = |c: &Colouring| {
        let mut colours = c.to_vec();
        colours.extend(3..k);
        Colouring::new(k, colours).expect("extension stays within k colours")
    };
    Ok((g, extend(&left), extend(&right)))
}

/// A named family member, as accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Prism,
    Fig1,
    Fig2,
    Dq(usize),
    Yr(usize),
    Hk(usize),
}

impl FamilySpec {
    pub fn new(name: &str, param: Option<usize>) -> Result<Self> {
        let need = |what: &str| {
            param.ok_or_else(|| Error::input(format!("family {name} needs --param {what}")))
        };
        let spec = match name {
            "prism" => FamilySpec::Prism,
            "fig1" => FamilySpec::Fig1,
            "fig2" => FamilySpec::Fig2,
            "d_q" | "dq" => FamilySpec::Dq(need("q")?),
            "y_r" | "yr" => FamilySpec::Yr(need("r")?),
            "h_k" | "hk" => FamilySpec::Hk(need("k")?),
            other => return Err(Error::input(format!("unknown family {other:?}"))),
        };
        if matches!(spec, FamilySpec::Prism | FamilySpec::Fig1 | FamilySpec::Fig2) && param.is_some() {
            return Err(Error::input(format!("family {name} takes no parameter")));
        }
        Ok(spec)
    }

    /// The graph with its named colourings.
    pub fn generate(&self) -> Result<FamilyInstance> {
        let (graph, colourings) = match *self {
            FamilySpec::Prism => {
                let (g, l, r) = gen_prism();
                (g, vec![("left".into(), l), ("right".into(), r)])
            }
            FamilySpec::Fig1 => {
                let (g, l, r) = gen_fig1();
                (g, vec![("left".into(), l), ("right".into(), r)])
            }
            FamilySpec::Fig2 => {
                let (g, l, r) = gen_fig2();
                (g, vec![("left".into(), l), ("right".into(), r)])
            }
            FamilySpec::Dq(q) => {
                let (g, psi) = gen_dq(q)?;
                let mut cols = vec![("psi".to_string(), psi)];
                if let Some(m) = dq_figure_minimum_colouring(q) {
                    cols.push(("minimum".into(), m));
                }
                (g, cols)
            }
            FamilySpec::Yr(r) => {
                let (g, zeta) = gen_yr(r)?;
                let mut cols = vec![("zeta".to_string(), zeta)];
                if let Some(m) = yr_figure_minimum_colouring(r) {
                    cols.push(("minimum".into(), m));
                }
                (g, cols)
            }
            FamilySpec::Hk(k) => {
                let (g, l, r) = gen_hk(k)?;
                (g, vec![("left".into(), l), ("right".into(), r)])
            }
        };
        Ok(FamilyInstance {
            name: self.to_string(),
            graph,
            colourings,
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Prism => write!(f, "prism"),
            FamilySpec::Fig1 => write!(f, "fig1"),
            FamilySpec::Fig2 => write!(f, "fig2"),
            FamilySpec::Dq(q) => write!(f, "d_{q}"),
            FamilySpec::Yr(r) => write!(f, "y_{r}"),
            FamilySpec::Hk(k) => write!(f, "h_{k}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `prism`, `fig1`, `fig2`, `d_2`, `y_3`, `h_4`, ...
    fn from_str(s: &str) -> Result<Self> {
        match s.rsplit_once('_') {
            Some((name, p)) if p.chars().all(|c| c.is_ascii_digit()) && !p.is_empty() => {
                let param = p.parse().map_err(|_| Error::input(format!("bad parameter in {s:?}")))?;
                let base = match name {
                    "d" => "d_q",
                    "y" => "y_r",
                    "h" => "h_k",
                    _ => return Err(Error::input(format!("unknown family {s:?}"))),
                };
                FamilySpec::new(base, Some(param))
            }
            _ => FamilySpec::new(s, None),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub name: String,
    pub graph: Graph,
    pub colourings: Vec<(String, Colouring)>,
}

impl FamilyInstance {
    pub fn colouring(&self, name: &str) -> Option<&Colouring> {
        self.colourings.iter().find(|(n, _)| n == name).map(|(_, c)| c)
    }
}

/// Which hypothesis of the operation a pair `(x, y)` satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Op2K2Case {
    /// `gamma(x) != gamma(y)`.
    DistinctColours,
    /// `{x, y}` is a whole colour class of `gamma`.
    ColourClass,
}

/// Inputs to the operation: a graph with a `k`-colouring `beta`, a
/// Kempe-frozen `(k+1)`-colouring `gamma`, and a nonadjacent pair `x, y`.
#[derive(Clone, Debug)]
pub struct Op2K2Input {
    pub g: Graph,
    pub beta: Colouring,
    pub gamma: Colouring,
    pub x: usize,
    pub y: usize,
}

fn check_colourings(g: &Graph, beta: &Colouring, gamma: &Colouring) -> Result<()> {
    require_proper(g, beta)?;
    require_proper(g, gamma)?;
    if gamma.k() != beta.k() + 1 {
        return Err(Error::input(format!(
            "gamma must use one colour more than beta (got {} and {})",
            gamma.k(),
            beta.k()
        )));
    }
    if !is_kempe_frozen(g, gamma)? {
        return Err(Error::input("gamma is not Kempe frozen"));
    }
    Ok(())
}

fn classify(g: &Graph, beta: &Colouring, gamma: &Colouring, x: usize, y: usize) -> Option<Op2K2Case> {
    if x == y || g.has_edge(x, y) || beta.colour(x) == beta.colour(y) {
        return None;
    }
    if gamma.colour(x) != gamma.colour(y) {
        return Some(Op2K2Case::DistinctColours);
    }
    let class = &colour_classes(gamma)[gamma.colour(x)];
    (class.len() == 2).then_some(Op2K2Case::ColourClass)
}

impl Op2K2Input {
    /// Validates every hypothesis and reports the applicable case.
    pub fn case(&self) -> Result<Op2K2Case> {
        let n = self.g.n();
        if self.x >= n || self.y >= n {
            return Err(Error::input(format!("x = {} or y = {} is not a vertex", self.x, self.y)));
        }
        if self.x == self.y {
            return Err(Error::input("x and y must differ"));
        }
        if self.g.has_edge(self.x, self.y) {
            return Err(Error::input(format!("x = {} and y = {} are adjacent", self.x, self.y)));
        }
        check_colourings(&self.g, &self.beta, &self.gamma)?;
        if self.beta.colour(self.x) == self.beta.colour(self.y) {
            return Err(Error::input("beta gives x and y the same colour"));
        }
        classify(&self.g, &self.beta, &self.gamma, self.x, self.y).ok_or_else(|| {
            Error::input("gamma gives x and y the same colour but {x, y} is not a whole colour class")
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Op2K2Output {
    pub graph: Graph,
    /// `beta` plus the new colour class `{u, v}`.
    pub beta_prime: Colouring,
    /// Kempe-frozen colouring with one colour more than `gamma`.
    pub gamma_prime: Colouring,
    pub u: usize,
    pub v: usize,
    pub case: Op2K2Case,
}

/// Adds vertices `u = n` and `v = n + 1` with edges `vx`, `xy`, `yu`, and
/// joins `u` and `v` to every vertex other than `x` and `y`. In the
/// complement this subdivides the edge `xy` into the path `x, u, v, y`.
pub fn apply_op_2k2(input: &Op2K2Input) -> Result<Op2K2Output> {
    let case = input.case()?;
    let Op2K2Input { g, beta, gamma, x, y } = input;
    let (x, y) = (*x, *y);
    let n = g.n();
    let (u, v) = (n, n + 1);
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend([(v, x), (x, y), (y, u)]);
    for w in (0..n).filter(|&w| w != x && w != y) {
        edges.push((u, w));
        edges.push((v, w));
    }
    let graph = Graph::from_edges(n + 2, &edges)?;

    let k = beta.k();
    let mut b = beta.to_vec();
    b.extend([k, k]);
    let beta_prime = Colouring::new(k + 1, b)?;

    let fresh = gamma.k();
    let mut c = gamma.to_vec();
    match case {
        Op2K2Case::DistinctColours => c.extend([fresh, fresh]),
        Op2K2Case::ColourClass => {
            c[x] = fresh;
            c.extend([fresh, gamma.colour(y)]);
        }
    }
    let gamma_prime = Colouring::new(fresh + 1, c)?;

    Ok(Op2K2Output {
        graph,
        beta_prime,
        gamma_prime,
        u,
        v,
        case,
    })
}

/// A pair satisfying the operation's hypotheses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Op2K2Candidate {
    pub x: usize,
    pub y: usize,
    pub case: Op2K2Case,
    /// No edge `rs` of `g` is anticomplete to `{x, y}`.
    pub no_anticomplete_edge: bool,
}

impl Op2K2Candidate {
    /// Whether applying the operation to a 2K2-free graph is known to keep it
    /// 2K2-free: always in the colour-class case, and in the distinct-colours
    /// case exactly when no edge is anticomplete to `{x, y}`.
    pub fn preserves_2k2_free(&self) -> bool {
        self.case == Op2K2Case::ColourClass || self.no_anticomplete_edge
    }
}

/// Every nonadjacent pair `x < y` on which the operation applies.
pub fn find_op2k2_candidates(g: &Graph, beta: &Colouring, gamma: &Colouring) -> Result<Vec<Op2K2Candidate>> {
    check_colourings(g, beta, gamma)?;
    let n = g.n();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if let Some(case) = classify(g, beta, gamma, x, y) {
                let mut far = g.vertices();
                far.difference_with(&g.closed_neighbourhood(x));
                far.difference_with(&g.closed_neighbourhood(y));
                let no_anticomplete_edge = far.iter().all(|r| g.neighbours(r).is_disjoint(&far));
                out.push(Op2K2Candidate {
                    x,
                    y,
                    case,
                    no_anticomplete_edge,
                });
            }
        }
    }
    Ok(out)
}

//! Induced-subgraph search, a catalogue of small named graphs, and a census of
//! all graphs on a handful of vertices up to isomorphism.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::gen_prism;
use crate::graph::Graph;

/// Largest pattern accepted by [`contains_induced`].
pub const MAX_PATTERN_VERTICES: usize = 8;
/// Largest host accepted by [`contains_induced`].
pub const MAX_HOST_VERTICES: usize = 64;
/// Largest vertex count accepted by [`small_graph_census`].
pub const MAX_CENSUS_VERTICES: usize = 6;

struct Embedder<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<usize>,
    image: Vec<usize>,
    used: Vec<bool>,
}

impl Embedder<'_> {
    fn extend(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let w = self.order[pos];
        let (hn, gn) = (self.h.n(), self.g.n());
        let need_deg = self.h.degree(w);
        let need_codeg = hn - 1 - need_deg;
        for cand in 0..gn {
            if self.used[cand]
                || self.g.degree(cand) < need_deg
                || gn - 1 - self.g.degree(cand) < need_codeg
            {
                continue;
            }
            let consistent = self.order[..pos]
                .iter()
                .all(|&p| self.h.has_edge(w, p) == self.g.has_edge(cand, self.image[p]));
            if !consistent {
                continue;
            }
            self.image[w] = cand;
            self.used[cand] = true;
            if self.extend(pos + 1) {
                return true;
            }
            self.used[cand] = false;
        }
        false
    }
}

/// An injective map from `h` into `g` under which `h` is an induced subgraph,
/// if one exists. No size caps.
pub fn find_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.n() > g.n() {
        return None;
    }
    let mut order: Vec<usize> = (0..h.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    let mut e = Embedder {
        g,
        h,
        order,
        image: vec![usize::MAX; h.n()],
        used: vec![false; g.n()],
    };
    e.extend(0).then_some(e.image)
}

/// Whether `g` has an induced subgraph isomorphic to `h`.
pub fn contains_induced(g: &Graph, h: &Graph) -> Result<bool> {
    if h.n() > MAX_PATTERN_VERTICES {
        return Err(Error::Resource {
            what: "induced-subgraph pattern size",
            cap: MAX_PATTERN_VERTICES,
            reached: h.n(),
        });
    }
    if g.n() > MAX_HOST_VERTICES {
        return Err(Error::Resource {
            what: "induced-subgraph host size",
            cap: MAX_HOST_VERTICES,
            reached: g.n(),
        });
    }
    Ok(find_induced(g, h).is_some())
}

/// Whether `g` is `h`-free.
pub fn is_h_free(g: &Graph, h: &Graph) -> Result<bool> {
    contains_induced(g, h).map(|found| !found)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.edge_count() == h.edge_count() && find_induced(g, h).is_some()
}

/// Small graphs by name: `P1..P8`, `C3..C8`, `K1..K8`, `2K2`, `3K1`, `P3+P1`,
/// `prism`, and `triangle` for `K3`.
pub fn named_graph(name: &str) -> Result<Graph> {
    let unknown = || Error::input(format!("unknown graph name {name:?}"));
    let sized = |rest: &str, lo: usize| -> Result<usize> {
        let n: usize = rest.parse().map_err(|_| unknown())?;
        if (lo..=8).contains(&n) {
            Ok(n)
        } else {
            Err(unknown())
        }
    };
    match name {
        "2K2" => return Ok(Graph::complete(2).disjoint_union(&Graph::complete(2))),
        "3K1" => return Ok(Graph::edgeless(3)),
        "P3+P1" => return Ok(Graph::path(3).disjoint_union(&Graph::edgeless(1))),
        "prism" => return Ok(gen_prism().0),
        "triangle" => return Ok(Graph::complete(3)),
        _ => {}
    }
    let mut chars = name.chars();
    match chars.next() {
        Some('P') => Ok(Graph::path(sized(chars.as_str(), 1)?)),
        Some('C') => Graph::cycle(sized(chars.as_str(), 3)?),
        Some('K') => Ok(Graph::complete(sized(chars.as_str(), 1)?)),
        _ => Err(unknown()),
    }
}

/// Whether `h` is isomorphic to an induced subgraph of `P4`.
pub fn is_induced_subgraph_of_p4(h: &Graph) -> bool {
    h.n() <= 4 && find_induced(&Graph::path(4), h).is_some()
}

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![usize::MAX; n]; n];
    let mut next = 0;
    for u in 0..n {
        for v in u + 1..n {
            idx[u][v] = next;
            idx[v][u] = next;
            next += 1;
        }
    }
    idx
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..left.len() {
            let x = left.remove(i);
            prefix.push(x);
            go(prefix, left, out);
            prefix.pop();
            left.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

fn graph_of_mask(n: usize, mask: u32) -> Graph {
    let idx = pair_index(n);
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| mask & (1 << idx[u][v]) != 0);
    Graph::from_edge_iter(n, edges)
}

#[cfg(test)]
/// Edge-bitmask encoding of a graph on at most [`MAX_CENSUS_VERTICES`]
/// vertices; pair `(u, v)` with `u < v` maps to its lexicographic index.
fn mask_of(g: &Graph) -> u32 {
    let idx = pair_index(g.n());
    g.edges().fold(0, |m, (u, v)| m | 1 << idx[u][v])
}

/// Minimum edge-bitmask over all vertex permutations; equal for exactly the
/// isomorphic graphs.
pub fn canonical_form(g: &Graph) -> Result<u32> {
    if g.n() > MAX_CENSUS_VERTICES {
        return Err(Error::Resource {
            what: "canonical form vertex count",
            cap: MAX_CENSUS_VERTICES,
            reached: g.n(),
        });
    }
    let n = g.n();
    let idx = pair_index(n);
    let edges: Vec<_> = g.edges().collect();
    Ok(permutations(n)
        .iter()
        .map(|p| edges.iter().fold(0u32, |m, &(u, v)| m | 1 << idx[p[u]][p[v]]))
        .min()
        .unwrap_or(0))
}

/// Isomorphism classes of graphs on `n` vertices, split by whether they
/// contain a triangle (group 1), else an independent set of size 3 (group 2),
/// else neither (group 3).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub n: usize,
    #[serde(rename = "total")]
    pub total_classes: usize,
    pub group1: usize,
    pub group2: usize,
    pub group3: usize,
    /// One representative per group-3 class.
    pub group3_members: Vec<Graph>,
}

/// Enumerates all `2^(n(n-1)/2)` labelled graphs and buckets them by
/// canonical form. Each new class is expanded into its full orbit under the
/// `n!` permutations so no labelled graph is canonicalised twice.
pub fn small_graph_census(n: usize) -> Result<CensusReport> {
    if n == 0 {
        return Err(Error::input("census needs at least one vertex"));
    }
    if n > MAX_CENSUS_VERTICES {
        return Err(Error::Resource {
            what: "census vertex count",
            cap: MAX_CENSUS_VERTICES,
            reached: n,
        });
    }
    let pairs = n * (n - 1) / 2;
    let idx = pair_index(n);
    let perms = permutations(n);
    let all_pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = vec![false; 1usize << pairs];
    let triangle = Graph::complete(3);
    let independent = Graph::edgeless(3);
    let mut report = CensusReport {
        n,
        total_classes: 0,
        group1: 0,
        group2: 0,
        group3: 0,
        group3_members: Vec::new(),
    };
    for mask in 0..(1u32 << pairs) {
        if seen[mask as usize] {
            continue;
        }
        let mut canon = mask;
        for p in &perms {
            let image = all_pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .fold(0u32, |m, (_, &(u, v))| m | 1 << idx[p[u]][p[v]]);
            seen[image as usize] = true;
            canon = canon.min(image);
        }
        let g = graph_of_mask(n, canon);
        report.total_classes += 1;
        if find_induced(&g, &triangle).is_some() {
            report.group1 += 1;
        } else if find_induced(&g, &independent).is_some() {
            report.group2 += 1;
        } else {
            report.group3 += 1;
            report.group3_members.push(g);
        }
    }
    Ok(report)
}

//! Kempe chains and swaps, Kempe equivalence, and the partition of all
//! k-colourings of a graph into Kempe classes.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::bits::VertexSet;
use crate::colouring::{enumerate_colourings, require_proper, Colouring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::union_find::UnionFind;

/// Default cap on visited states for searches over the Kempe graph.
pub const DEFAULT_STATE_CAP: usize = 10_000_000;

fn check_chain_args(g: &Graph, c: &Colouring, v: usize, a: usize, b: usize) -> Result<()> {
    require_proper(g, c)?;
    if a == b || a >= c.k() || b >= c.k() {
        return Err(Error::input(format!(
            "colour pair ({a}, {b}) must be two distinct colours below k = {}",
            c.k()
        )));
    }
    if v >= g.n() {
        return Err(Error::input(format!("vertex {v} is not in the graph")));
    }
    if c.colour(v) != a && c.colour(v) != b {
        return Err(Error::input(format!(
            "vertex {v} has colour {}, not {a} or {b}",
            c.colour(v)
        )));
    }
    Ok(())
}

fn pair_union(raw: &[u8], a: usize, b: usize) -> VertexSet {
    VertexSet::from_iter_in(
        raw.len(),
        raw.iter()
            .enumerate()
            .filter(|(_, &c)| c as usize == a || c as usize == b)
            .map(|(v, _)| v),
    )
}

/// The component containing `v` of the subgraph induced by colours `a` and `b`.
pub fn kempe_chain(g: &Graph, c: &Colouring, v: usize, a: usize, b: usize) -> Result<VertexSet> {
    check_chain_args(g, c, v, a, b)?;
    Ok(g.component_within(v, &pair_union(c.raw(), a, b)))
}

fn swap_on(raw: &mut [u8], chain: &VertexSet, a: u8, b: u8) {
    for v in chain {
        raw[v] = if raw[v] == a { b } else { a };
    }
}

/// Exchanges colours `a` and `b` on the Kempe chain through `v`.
pub fn kempe_swap(g: &Graph, c: &Colouring, v: usize, a: usize, b: usize) -> Result<Colouring> {
    let chain = kempe_chain(g, c, v, a, b)?;
    let mut raw = c.raw().to_vec();
    swap_on(&mut raw, &chain, a as u8, b as u8);
    Ok(Colouring::from_raw(c.k(), raw))
}

/// Calls `visit` once per (colour pair, chain) with the swapped assignment.
/// Pairs are visited in order `(0,1), (0,2), ...`, chains by smallest vertex.
fn for_each_swap(g: &Graph, raw: &[u8], k: usize, mut visit: impl FnMut(&[u8])) {
    let mut classes = vec![VertexSet::empty(raw.len()); k];
    for (v, &c) in raw.iter().enumerate() {
        classes[c as usize].insert(v);
    }
    let mut scratch = raw.to_vec();
    for a in 0..k {
        for b in a + 1..k {
            if classes[a].is_empty() && classes[b].is_empty() {
                continue;
            }
            let mut union = classes[a].clone();
            union.union_with(&classes[b]);
            for chain in g.components_within(&union) {
                swap_on(&mut scratch, &chain, a as u8, b as u8);
                visit(&scratch);
                swap_on(&mut scratch, &chain, a as u8, b as u8);
            }
        }
    }
}

/// All distinct colourings one Kempe swap away from `c`, sorted.
pub fn kempe_neighbours(g: &Graph, c: &Colouring) -> Result<Vec<Colouring>> {
    require_proper(g, c)?;
    let mut out = Vec::new();
    for_each_swap(g, c.raw(), c.k(), |raw| {
        if raw != c.raw() {
            out.push(raw.to_vec());
        }
    });
    out.sort_unstable();
    out.dedup();
    Ok(out.into_iter().map(|raw| Colouring::from_raw(c.k(), raw)).collect())
}

/// The Kempe class of `start`, in breadth-first order.
pub fn kempe_class_of(g: &Graph, start: &Colouring, cap: usize) -> Result<Vec<Colouring>> {
    require_proper(g, start)?;
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut order = Vec::new();
    bfs(g, start, cap, &mut seen, |raw| {
        order.push(raw.to_vec());
        false
    })?;
    Ok(order
        .into_iter()
        .map(|raw| Colouring::from_raw(start.k(), raw))
        .collect())
}

/// Breadth-first search over the Kempe graph. Stops early when `visit`
/// returns true; returns whether that happened.
fn bfs(
    g: &Graph,
    start: &Colouring,
    cap: usize,
    seen: &mut HashSet<Vec<u8>>,
    mut visit: impl FnMut(&[u8]) -> bool,
) -> Result<bool> {
    let k = start.k();
    let mut queue = VecDeque::new();
    seen.insert(start.raw().to_vec());
    queue.push_back(start.raw().to_vec());
    while let Some(cur) = queue.pop_front() {
        if visit(&cur) {
            return Ok(true);
        }
        let mut overflow = false;
        for_each_swap(g, &cur, k, |next| {
            if !overflow && !seen.contains(next) {
                if seen.len() >= cap {
                    overflow = true;
                    return;
                }
                seen.insert(next.to_vec());
                queue.push_back(next.to_vec());
            }
        });
        if overflow {
            return Err(Error::Resource {
                what: "kempe graph search",
                cap,
                reached: seen.len() + 1,
            });
        }
    }
    Ok(false)
}

/// Whether `c2` is reachable from `c1` by Kempe swaps.
///
/// A resource error means the answer is unknown; it is never reported as
/// `false`.
pub fn are_kempe_equivalent(g: &Graph, c1: &Colouring, c2: &Colouring, cap: usize) -> Result<bool> {
    require_proper(g, c1)?;
    require_proper(g, c2)?;
    if c1.k() != c2.k() {
        return Err(Error::input(format!(
            "colourings use different k ({} and {})",
            c1.k(),
            c2.k()
        )));
    }
    let target = c2.raw();
    let mut seen = HashSet::new();
    bfs(g, c1, cap, &mut seen, |raw| raw == target)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KempeClass {
    pub size: usize,
    /// The lexicographically least colouring in the class.
    pub representative: Colouring,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KempeClassReport {
    pub k: usize,
    pub total_colourings: usize,
    pub classes: Vec<KempeClass>,
    pub cap_hit: bool,
}

impl KempeClassReport {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Index of the class containing `c`, if the report holds every
    /// colouring. Recomputes the class of `c` by search.
    pub fn class_index_of(&self, g: &Graph, c: &Colouring) -> Result<Option<usize>> {
        let members = kempe_class_of(g, c, self.total_colourings.max(1))?;
        let least = members.iter().min().expect("class contains its start");
        Ok(self.classes.iter().position(|cls| &cls.representative == least))
    }
}

/// Partitions all proper `k`-colourings of `g` into Kempe classes.
///
/// Colourings are enumerated lexicographically into one flat buffer, each
/// single-swap neighbour is located by binary search, and classes are merged
/// with a union-find. Classes are reported in order of their least member.
pub fn kempe_classes(g: &Graph, k: usize, cap: usize) -> Result<KempeClassReport> {
    let n = g.n();
    let mut arena: Vec<u8> = Vec::new();
    let mut it = enumerate_colourings(g, k, cap)?;
    let mut cap_hit = false;
    while let Some(r) = it.next_raw() {
        match r {
            Ok(raw) => arena.extend_from_slice(raw),
            Err(Error::Resource { .. }) => {
                cap_hit = true;
                break;
            }
            Err(e) => return Err(e),
        }
    }
    let total = it.produced();
    let get = |i: usize| &arena[i * n..i * n + n];
    let bits = (usize::BITS - (k - 1).leading_zeros()).max(1);
    let packed = n * bits as usize <= 64;
    let pack = |raw: &[u8]| raw.iter().fold(0u64, |key, &c| key << bits | c as u64);
    // Short colourings pack into a u64 and are found by hashing; longer ones
    // by binary search over the lexicographically sorted arena.
    let hashed: HashMap<u64, usize> = if packed {
        (0..total).map(|i| (pack(get(i)), i)).collect()
    } else {
        HashMap::new()
    };
    let index_of = |raw: &[u8]| -> Option<usize> {
        if packed {
            return hashed.get(&pack(raw)).copied();
        }
        let (mut lo, mut hi) = (0, total);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match get(mid).cmp(raw) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    };

    let mut uf = UnionFind::new(total);
    for i in 0..total {
        for_each_swap(g, get(i), k, |next| {
            if let Some(j) = index_of(next) {
                uf.union(i, j);
            } else {
                debug_assert!(cap_hit, "a proper colouring is missing from the enumeration");
            }
        });
    }

    let mut slot = vec![usize::MAX; total];
    let mut classes: Vec<KempeClass> = Vec::new();
    for i in 0..total {
        let root = uf.find(i);
        if slot[root] == usize::MAX {
            slot[root] = classes.len();
            classes.push(KempeClass {
                size: 0,
                representative: Colouring::from_raw(k, get(i).to_vec()),
            });
        }
        classes[slot[root]].size += 1;
    }

    let report = KempeClassReport {
        k,
        total_colourings: total,
        classes,
        cap_hit,
    };
    if cap_hit {
        Err(Error::PartialClasses {
            cap,
            partial: Box::new(report),
        })
    } else {
        Ok(report)
    }
}

/// Whether all proper `k`-colourings form a single Kempe class.
pub fn is_kempe_connected_at(g: &Graph, k: usize, cap: usize) -> Result<bool> {
    kempe_classes(g, k, cap).map(|r| r.class_count() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::{is_proper, partition_of, DEFAULT_ENUMERATION_CAP};
    use crate::exact::minimum_colouring;
    use crate::families;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    /// Naive Kempe classes: adjacency lists, DFS chains, BFS closure, over
    /// colourings found by filtering all k^n assignments.
    fn oracle_classes(g: &Graph, k: usize) -> Vec<usize> {
        let n = g.n();
        let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbours(v).to_vec()).collect();
        let proper = |c: &[usize]| (0..n).all(|v| adj[v].iter().all(|&u| c[u] != c[v]));
        let mut all = BTreeSet::new();
        for mut code in 0..k.pow(n as u32) {
            let c: Vec<usize> = (0..n)
                .map(|_| {
                    let x = code % k;
                    code /= k;
                    x
                })
                .collect();
            if proper(&c) {
                all.insert(c);
            }
        }
        let swaps = |c: &Vec<usize>| {
            let mut out = Vec::new();
            for v in 0..n {
                for b in 0..k {
                    let a = c[v];
                    if a == b {
                        continue;
                    }
                    let mut chain = vec![v];
                    let mut stack = vec![v];
                    while let Some(x) = stack.pop() {
                        for &y in &adj[x] {
                            if (c[y] == a || c[y] == b) && !chain.contains(&y) {
                                chain.push(y);
                                stack.push(y);
                            }
                        }
                    }
                    let mut d = c.clone();
                    for &x in &chain {
                        d[x] = if c[x] == a { b } else { a };
                    }
                    out.push(d);
                }
            }
            out
        };
        let mut remaining = all;
        let mut sizes = Vec::new();
        while let Some(start) = remaining.iter().next().cloned() {
            remaining.remove(&start);
            let mut stack = vec![start];
            let mut size = 1;
            while let Some(c) = stack.pop() {
                for d in swaps(&c) {
                    if remaining.remove(&d) {
                        size += 1;
                        stack.push(d);
                    }
                }
            }
            sizes.push(size);
        }
        sizes
    }

    fn c(k: usize, one_based: &[usize]) -> Colouring {
        Colouring::from_one_based(k, one_based).unwrap()
    }

    #[test]
    fn chain_examples() {
        // Vertex 2 of P3 + P1 coloured 1 with no neighbour coloured 3.
        let g = crate::hereditary::named_graph("P3+P1").unwrap();
        let col = c(3, &[1, 2, 1, 2]);
        assert_eq!(kempe_chain(&g, &col, 3, 1, 0).unwrap().to_vec(), vec![3]);
        assert_eq!(kempe_chain(&g, &col, 0, 0, 2).unwrap().to_vec(), vec![0]);

        let p4 = Graph::path(4);
        let col = c(2, &[1, 2, 1, 2]);
        assert_eq!(kempe_chain(&p4, &col, 0, 0, 1).unwrap().to_vec(), vec![0, 1, 2, 3]);

        let (prism, left, _) = families::gen_prism();
        for v in 0..6 {
            for b in 0..3 {
                let a = left.colour(v);
                if a == b {
                    continue;
                }
                let chain = kempe_chain(&prism, &left, v, a, b).unwrap();
                let union = pair_union(left.raw(), a, b);
                assert_eq!(prism.connected_components().len(), 1);
                assert_eq!(prism.components_within(&union).len(), 1);
                assert_eq!(chain, union);
                assert_eq!(chain.len(), 4);
            }
        }
    }

    #[test]
    fn chain_argument_errors() {
        let p4 = Graph::path(4);
        let col = c(3, &[1, 2, 1, 2]);
        assert!(kempe_chain(&p4, &col, 0, 1, 2).is_err()); // vertex 0 has colour 0
        assert!(kempe_chain(&p4, &col, 0, 0, 0).is_err());
        assert!(kempe_chain(&p4, &col, 0, 0, 3).is_err());
        assert!(kempe_chain(&p4, &col, 9, 0, 1).is_err());
        assert!(kempe_chain(&p4, &c(3, &[1, 1, 2, 3]), 0, 0, 1).is_err());
    }

    #[test]
    fn swap_examples() {
        let p4 = Graph::path(4);
        let col = c(3, &[1, 2, 1, 2]);
        let once = kempe_swap(&p4, &col, 1, 1, 2).unwrap();
        assert_eq!(kempe_swap(&p4, &once, 1, 1, 2).unwrap(), col);

        // A singleton chain is a single-vertex recolouring.
        let col = c(3, &[1, 2, 1, 2]);
        let single = kempe_swap(&p4, &col, 0, 0, 2).unwrap();
        assert_eq!(single.to_one_based(), vec![3, 2, 1, 2]);

        let (prism, left, _) = families::gen_prism();
        let swapped = kempe_swap(&prism, &left, 0, 0, 1).unwrap();
        for v in 0..6 {
            let expect = match left.colour(v) {
                0 => 1,
                1 => 0,
                other => other,
            };
            assert_eq!(swapped.colour(v), expect);
        }
        assert_eq!(partition_of(&swapped), partition_of(&left));
    }

    #[test]
    fn neighbour_examples() {
        for k in 2..=5 {
            let g = Graph::complete(k);
            let col = Colouring::new(k, (0..k).collect()).unwrap();
            assert_eq!(kempe_neighbours(&g, &col).unwrap().len(), k * (k - 1) / 2);
        }
        let (prism, left, _) = families::gen_prism();
        assert_eq!(kempe_neighbours(&prism, &left).unwrap().len(), 3);

        let g = Graph::edgeless(2);
        let col = c(2, &[1, 1]);
        let ns = kempe_neighbours(&g, &col).unwrap();
        assert_eq!(ns, vec![c(2, &[1, 2]), c(2, &[2, 1])]);
    }

    #[test]
    fn equivalence_examples() {
        let (prism, left, right) = families::gen_prism();
        assert!(!are_kempe_equivalent(&prism, &left, &right, DEFAULT_STATE_CAP).unwrap());
        assert!(are_kempe_equivalent(&prism, &left, &left, DEFAULT_STATE_CAP).unwrap());
        let (fig1, l1, r1) = families::gen_fig1();
        assert!(!are_kempe_equivalent(&fig1, &l1, &r1, DEFAULT_STATE_CAP).unwrap());
        assert!(are_kempe_equivalent(&prism, &left, &left.with_k(4).unwrap(), 10).is_err());
    }

    #[test]
    fn equivalence_cap_is_unknown_not_false() {
        let g = Graph::edgeless(4);
        let a = c(3, &[1, 1, 1, 1]);
        let b = c(3, &[3, 3, 3, 3]);
        assert!(are_kempe_equivalent(&g, &a, &b, 100).unwrap());
        let err = are_kempe_equivalent(&g, &a, &b, 5).unwrap_err();
        assert!(err.is_resource());
    }

    #[test]
    fn classes_of_long_colourings() {
        // Too long to pack into a u64 key.
        let g = Graph::path(40).disjoint_union(&Graph::path(30));
        let report = kempe_classes(&g, 2, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(report.total_colourings, 4);
        assert_eq!(report.class_count(), 1);
        let g = Graph::complete(2).join(&Graph::edgeless(34));
        let report = kempe_classes(&g, 3, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(report.total_colourings, 6);
        assert_eq!(report.class_count(), 1);
    }

    #[test]
    fn class_examples() {
        let (prism, left, right) = families::gen_prism();
        let report = kempe_classes(&prism, 3, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(report.total_colourings, 12);
        assert_eq!(report.classes.iter().map(|c| c.size).collect::<Vec<_>>(), vec![6, 6]);
        assert_eq!(oracle_classes(&prism, 3), vec![6, 6]);
        let li = report.class_index_of(&prism, &left).unwrap();
        let ri = report.class_index_of(&prism, &right).unwrap();
        assert!(li.is_some() && ri.is_some() && li != ri);
        assert!(!is_kempe_connected_at(&prism, 3, DEFAULT_ENUMERATION_CAP).unwrap());

        let p4 = kempe_classes(&Graph::path(4), 2, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!((p4.class_count(), p4.total_colourings), (1, 2));

        let (fig1, _, _) = families::gen_fig1();
        assert!(kempe_classes(&fig1, 3, DEFAULT_ENUMERATION_CAP).unwrap().class_count() >= 2);

        let (d2, _) = families::gen_dq(2).unwrap();
        assert!(!is_kempe_connected_at(&d2, 5, DEFAULT_ENUMERATION_CAP).unwrap());

        let empty = kempe_classes(&Graph::complete(4), 3, 10).unwrap();
        assert_eq!((empty.total_colourings, empty.class_count()), (0, 0));
    }

    #[test]
    fn class_cap_reports_partial() {
        let (prism, _, _) = families::gen_prism();
        match kempe_classes(&prism, 3, 5) {
            Err(Error::PartialClasses { cap: 5, partial }) => {
                assert!(partial.cap_hit);
                assert_eq!(partial.total_colourings, 5);
            }
            other => panic!("expected partial report, got {other:?}"),
        }
    }

    #[test]
    fn classes_match_oracle_on_small_graphs() {
        let graphs = [
            Graph::path(5),
            Graph::cycle(5).unwrap(),
            Graph::cycle(6).unwrap(),
            crate::hereditary::named_graph("2K2").unwrap(),
            Graph::complete(3).disjoint_union(&Graph::path(3)),
        ];
        for g in &graphs {
            for k in 2..=4 {
                let mut mine: Vec<usize> = kempe_classes(g, k, DEFAULT_ENUMERATION_CAP)
                    .unwrap()
                    .classes
                    .iter()
                    .map(|c| c.size)
                    .collect();
                let mut oracle = oracle_classes(g, k);
                mine.sort_unstable();
                oracle.sort_unstable();
                assert_eq!(mine, oracle, "graph {g:?}, k = {k}");
            }
        }
    }

    fn random_colouring(g: &Graph, extra: usize, pick: usize) -> Colouring {
        let k = minimum_colouring(g).unwrap().k() + extra;
        let all: Vec<Colouring> = enumerate_colourings(g, k, 100_000)
            .unwrap()
            .collect::<Result<_>>()
            .unwrap();
        all[pick % all.len()].clone()
    }

    proptest! {
        #[test]
        fn swaps_are_proper_involutions(
            g in crate::graph::tests::arb_graph(8),
            extra in 0usize..2,
            pick in any::<usize>(),
        ) {
            let col = random_colouring(&g, extra, pick);
            for v in 0..g.n() {
                for b in 0..col.k() {
                    let a = col.colour(v);
                    if a == b { continue; }
                    let s = kempe_swap(&g, &col, v, a, b).unwrap();
                    prop_assert!(is_proper(&g, &s).unwrap());
                    prop_assert_eq!(kempe_swap(&g, &s, v, a, b).unwrap(), col.clone());
                }
            }
        }

        #[test]
        fn chains_partition_pair_unions(
            g in crate::graph::tests::arb_graph(8),
            pick in any::<usize>(),
        ) {
            let col = random_colouring(&g, 1, pick);
            for a in 0..col.k() {
                for b in a + 1..col.k() {
                    let union = pair_union(col.raw(), a, b);
                    let mut cover = VertexSet::empty(g.n());
                    for v in &union {
                        let chain = kempe_chain(&g, &col, v, a, b).unwrap();
                        prop_assert!(chain.is_subset(&union));
                        prop_assert!(chain.contains(v));
                        cover.union_with(&chain);
                    }
                    prop_assert_eq!(cover, union);
                }
            }
        }

        #[test]
        fn neighbour_relation_is_symmetric(
            g in crate::graph::tests::arb_graph(7),
            pick in any::<usize>(),
        ) {
            let col = random_colouring(&g, 1, pick);
            for nb in kempe_neighbours(&g, &col).unwrap() {
                prop_assert!(kempe_neighbours(&g, &nb).unwrap().contains(&col));
            }
        }
    }
}

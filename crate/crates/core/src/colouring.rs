//! Labelled colourings, properness, exhaustive enumeration of all proper
//! k-colourings, and label-erased partitions.
//!
//! Colours are `0..k` internally. Serialized colourings use `1..=k`.

use serde::{Deserialize, Serialize};

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on the number of colourings an enumeration may yield.
pub const DEFAULT_ENUMERATION_CAP: usize = 10_000_000;

/// Largest supported number of colours.
pub const MAX_COLOURS: usize = u8::MAX as usize;

/// An assignment of colours `0..k` to vertices `0..n`.
///
/// Properness is not part of the type: improper assignments are representable
/// so they can be reported. See [`is_proper`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ColouringRepr", into = "ColouringRepr")]
pub struct Colouring {
    k: usize,
    colours: Vec<u8>,
}

#[derive(Serialize, Deserialize)]
struct ColouringRepr {
    k: usize,
    colours: Vec<usize>,
}

impl TryFrom<ColouringRepr> for Colouring {
    type Error = Error;

    fn try_from(r: ColouringRepr) -> Result<Self> {
        Colouring::from_one_based(r.k, &r.colours)
    }
}

impl From<Colouring> for ColouringRepr {
    fn from(c: Colouring) -> Self {
        ColouringRepr {
            k: c.k,
            colours: c.colours.iter().map(|&x| x as usize + 1).collect(),
        }
    }
}

impl Colouring {
    /// Builds a colouring from 0-based colours.
    pub fn new(k: usize, colours: Vec<usize>) -> Result<Self> {
        if k > MAX_COLOURS {
            return Err(Error::input(format!("at most {MAX_COLOURS} colours are supported, got {k}")));
        }
        if let Some((v, &c)) = colours.iter().enumerate().find(|(_, &c)| c >= k) {
            return Err(Error::input(format!("vertex {v} has colour {c}, outside 0..{k}")));
        }
        Ok(Colouring {
            k,
            colours: colours.into_iter().map(|c| c as u8).collect(),
        })
    }

    /// Builds a colouring from 1-based colours, as drawn in figures.
    pub fn from_one_based(k: usize, colours: &[usize]) -> Result<Self> {
        if let Some(v) = colours.iter().position(|&c| c == 0) {
            return Err(Error::input(format!("vertex {v} has colour 0; colours are 1-based")));
        }
        Self::new(k, colours.iter().map(|&c| c - 1).collect())
    }

    pub(crate) fn from_raw(k: usize, colours: Vec<u8>) -> Self {
        debug_assert!(colours.iter().all(|&c| (c as usize) < k));
        Colouring { k, colours }
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of coloured vertices.
    #[inline]
    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    #[inline]
    pub fn colour(&self, v: usize) -> usize {
        self.colours[v] as usize
    }

    #[inline]
    pub fn raw(&self) -> &[u8] {
        &self.colours
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.colours.iter().map(|&c| c as usize).collect()
    }

    /// 1-based colours, as rendered in output.
    pub fn to_one_based(&self) -> Vec<usize> {
        self.colours.iter().map(|&c| c as usize + 1).collect()
    }

    /// Same assignment viewed as a colouring with `k` available colours.
    pub fn with_k(&self, k: usize) -> Result<Self> {
        Self::new(k, self.to_vec())
    }

    /// Applies a permutation of colour labels: colour `c` becomes `perm[c]`.
    pub fn permute_colours(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.k {
            return Err(Error::input("colour permutation must have length k"));
        }
        Self::new(self.k, self.colours.iter().map(|&c| perm[c as usize]).collect())
    }

    /// Number of colours that actually occur.
    pub fn colours_used(&self) -> usize {
        let mut seen = [false; MAX_COLOURS + 1];
        for &c in &self.colours {
            seen[c as usize] = true;
        }
        seen.iter().filter(|&&s| s).count()
    }

    fn check_len(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::input(format!(
                "colouring has {} entries but the graph has {} vertices",
                self.len(),
                g.n()
            )));
        }
        Ok(())
    }
}

/// Whether every edge of `g` has differently coloured ends.
pub fn is_proper(g: &Graph, c: &Colouring) -> Result<bool> {
    c.check_len(g)?;
    Ok(g.edges().all(|(u, v)| c.colours[u] != c.colours[v]))
}

/// Errors unless `c` fits `g` and is proper.
pub(crate) fn require_proper(g: &Graph, c: &Colouring) -> Result<()> {
    if !is_proper(g, c)? {
        let (u, v) = g
            .edges()
            .find(|&(u, v)| c.colours[u] == c.colours[v])
            .expect("an improper colouring has a monochromatic edge");
        return Err(Error::input(format!(
            "colouring is not proper: edge ({u}, {v}) is monochromatic"
        )));
    }
    Ok(())
}

/// Colour classes indexed by colour; some may be empty.
pub fn colour_classes(c: &Colouring) -> Vec<VertexSet> {
    let mut classes = vec![VertexSet::empty(c.len()); c.k];
    for (v, &col) in c.colours.iter().enumerate() {
        classes[col as usize].insert(v);
    }
    classes
}

/// A colouring with its labels erased: the nonempty colour classes, each
/// sorted, ordered by smallest member.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    classes: Vec<Vec<usize>>,
}

impl Partition {
    /// Canonicalises `classes`, which must be nonempty, disjoint and cover
    /// `0..n`.
    pub fn from_classes(n: usize, classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = VertexSet::empty(n);
        let mut classes: Vec<Vec<usize>> = classes
            .into_iter()
            .map(|mut class| {
                class.sort_unstable();
                class
            })
            .collect();
        for class in &classes {
            if class.is_empty() {
                return Err(Error::input("partition classes must be nonempty"));
            }
            for &v in class {
                if v >= n || seen.contains(v) {
                    return Err(Error::input(format!(
                        "vertex {v} is out of range or appears twice in the partition"
                    )));
                }
                seen.insert(v);
            }
        }
        if seen.len() != n {
            return Err(Error::input("partition does not cover every vertex"));
        }
        classes.sort_unstable_by_key(|class| class[0]);
        Ok(Partition { classes })
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    pub fn class_sets(&self) -> Vec<VertexSet> {
        let n = self.vertex_count();
        self.classes
            .iter()
            .map(|class| VertexSet::from_iter_in(n, class.iter().copied()))
            .collect()
    }

    /// The colouring that gives class `i` colour `i`.
    pub fn to_colouring(&self) -> Result<Colouring> {
        let mut colours = vec![0; self.vertex_count()];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                colours[v] = i;
            }
        }
        Colouring::new(self.classes.len(), colours)
    }
}

pub fn partition_of(c: &Colouring) -> Partition {
    // Classes come out in order of first occurrence, i.e. by smallest member.
    let mut slot = vec![usize::MAX; c.k];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (v, &col) in c.colours.iter().enumerate() {
        let col = col as usize;
        if slot[col] == usize::MAX {
            slot[col] = classes.len();
            classes.push(Vec::new());
        }
        classes[slot[col]].push(v);
    }
    Partition { classes }
}

/// Lexicographic enumeration of the proper `k`-colourings of a graph.
///
/// Vertices are coloured in order `0..n`, each taking the smallest colour not
/// used by an earlier neighbour. After `cap` colourings the iterator yields a
/// single resource error if another colouring exists, then stops.
pub struct Colourings<'g> {
    k: usize,
    cap: usize,
    earlier: Vec<Vec<usize>>,
    current: Vec<u8>,
    produced: usize,
    started: bool,
    done: bool,
    _graph: std::marker::PhantomData<&'g Graph>,
}

pub fn enumerate_colourings(g: &Graph, k: usize, cap: usize) -> Result<Colourings<'_>> {
    if k == 0 || k > MAX_COLOURS {
        return Err(Error::input(format!("k must be in 1..={MAX_COLOURS}, got {k}")));
    }
    if cap == 0 {
        return Err(Error::input("enumeration cap must be at least 1"));
    }
    let earlier = (0..g.n())
        .map(|v| g.neighbours(v).iter().take_while(|&u| u < v).collect())
        .collect();
    Ok(Colourings {
        k,
        cap,
        earlier,
        current: vec![0; g.n()],
        produced: 0,
        started: false,
        done: false,
        _graph: std::marker::PhantomData,
    })
}

impl Colourings<'_> {
    fn conflicts(&self, v: usize, c: u8) -> bool {
        self.earlier[v].iter().any(|&u| self.current[u] == c)
    }

    /// Moves to the next proper assignment; false when exhausted.
    fn advance(&mut self) -> bool {
        let n = self.current.len();
        let k = self.k as u8;
        if n == 0 {
            let first = !self.started;
            self.started = true;
            return first;
        }
        let (mut i, mut c) = if self.started {
            (n - 1, self.current[n - 1] as usize + 1)
        } else {
            self.started = true;
            (0, 0)
        };
        loop {
            let mut col = c;
            while col < k as usize && self.conflicts(i, col as u8) {
                col += 1;
            }
            if col < k as usize {
                self.current[i] = col as u8;
                if i + 1 == n {
                    return true;
                }
                i += 1;
                c = 0;
            } else {
                if i == 0 {
                    return false;
                }
                i -= 1;
                c = self.current[i] as usize + 1;
            }
        }
    }

    /// Like `next`, but exposes the raw assignment without allocating.
    pub(crate) fn next_raw(&mut self) -> Option<Result<&[u8]>> {
        if self.done {
            return None;
        }
        if !self.advance() {
            self.done = true;
            return None;
        }
        if self.produced == self.cap {
            self.done = true;
            return Some(Err(Error::Resource {
                what: "colouring enumeration",
                cap: self.cap,
                reached: self.cap + 1,
            }));
        }
        self.produced += 1;
        Some(Ok(&self.current))
    }

    /// Colourings yielded so far.
    pub fn produced(&self) -> usize {
        self.produced
    }
}

impl Iterator for Colourings<'_> {
    type Item = Result<Colouring>;

    fn next(&mut self) -> Option<Self::Item> {
        let k = self.k;
        self.next_raw()
            .map(|r| r.map(|raw| Colouring::from_raw(k, raw.to_vec())))
    }
}

/// Number of proper `k`-colourings, or a resource error past `cap`.
pub fn count_colourings(g: &Graph, k: usize, cap: usize) -> Result<usize> {
    let mut it = enumerate_colourings(g, k, cap)?;
    while let Some(r) = it.next_raw() {
        r?;
    }
    Ok(it.produced())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Filters all k^n assignments by properness.
    fn brute_count(g: &Graph, k: usize) -> usize {
        let n = g.n();
        (0..k.pow(n as u32))
            .filter(|&code| {
                let mut code = code;
                let col: Vec<usize> = (0..n)
                    .map(|_| {
                        let c = code % k;
                        code /= k;
                        c
                    })
                    .collect();
                g.edges().all(|(u, v)| col[u] != col[v])
            })
            .count()
    }

    fn all(g: &Graph, k: usize) -> Vec<Colouring> {
        enumerate_colourings(g, k, DEFAULT_ENUMERATION_CAP)
            .unwrap()
            .collect::<Result<_>>()
            .unwrap()
    }

    #[test]
    fn properness_examples() {
        let (prism, left, right) = families::gen_prism();
        assert!(is_proper(&prism, &left).unwrap());
        assert!(is_proper(&prism, &right).unwrap());
        let mono = Colouring::new(2, vec![0, 0]).unwrap();
        assert!(!is_proper(&Graph::complete(2), &mono).unwrap());
        assert!(is_proper(&Graph::complete(3), &mono).is_err());
        let (d2, psi) = families::gen_dq(2).unwrap();
        assert!(is_proper(&d2, &psi).unwrap());
    }

    #[test]
    fn rejects_out_of_range_colours() {
        assert!(Colouring::new(2, vec![0, 2]).is_err());
        assert!(Colouring::from_one_based(2, &[0, 1]).is_err());
        assert!(Colouring::new(300, vec![0]).is_err());
    }

    #[test]
    fn json_uses_one_based_colours() {
        let c = Colouring::new(3, vec![0, 2, 1]).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"{"k":3,"colours":[1,3,2]}"#);
        let back: Colouring = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<Colouring>(r#"{"k":2,"colours":[1,3]}"#).is_err());
    }

    #[test]
    fn class_examples() {
        let (_, psi) = families::gen_dq(2).unwrap();
        let classes = colour_classes(&psi);
        assert_eq!(classes.len(), 5);
        assert!(classes.iter().all(|c| c.len() == 2));

        let (_, zeta) = families::gen_yr(2).unwrap();
        let classes = colour_classes(&zeta);
        assert_eq!(classes.len(), 6);
        assert!(classes.iter().all(|c| c.len() == 2));

        let mono = Colouring::new(3, vec![0, 0, 0]).unwrap();
        let classes = colour_classes(&mono);
        assert_eq!(classes.iter().map(VertexSet::len).collect::<Vec<_>>(), vec![3, 0, 0]);
    }

    #[test]
    fn partition_examples() {
        let c = Colouring::new(3, vec![0, 1, 2, 0]).unwrap();
        let d = c.permute_colours(&[2, 0, 1]).unwrap();
        assert_ne!(c, d);
        assert_eq!(partition_of(&c), partition_of(&d));
        assert_eq!(partition_of(&c).classes(), &[vec![0, 3], vec![1], vec![2]]);

        let (_, l, r) = families::gen_prism();
        assert_ne!(partition_of(&l), partition_of(&r));
        let (_, l, r) = families::gen_fig1();
        assert_ne!(partition_of(&l), partition_of(&r));
    }

    #[test]
    fn partition_from_classes_validates() {
        let p = Partition::from_classes(4, vec![vec![3, 1], vec![2, 0]]).unwrap();
        assert_eq!(p.classes(), &[vec![0, 2], vec![1, 3]]);
        assert_eq!(p.to_colouring().unwrap().to_vec(), vec![0, 1, 0, 1]);
        assert!(Partition::from_classes(3, vec![vec![0, 1]]).is_err());
        assert!(Partition::from_classes(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::from_classes(2, vec![vec![0, 1], vec![]]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let (prism, _, _) = families::gen_prism();
        assert_eq!(brute_count(&prism, 3), 12);
        assert_eq!(all(&prism, 3).len(), 12);
        assert_eq!(all(&Graph::complete(3), 3).len(), 6);
        assert_eq!(all(&Graph::cycle(4).unwrap(), 2).len(), 2);
        assert_eq!(all(&Graph::complete(4), 3).len(), 0);
        assert_eq!(all(&Graph::edgeless(0), 2).len(), 1);
    }

    #[test]
    fn enumeration_is_lexicographic_and_capped() {
        let g = Graph::path(4);
        let cols = all(&g, 3);
        assert!(cols.windows(2).all(|w| w[0].raw() < w[1].raw()));
        assert_eq!(cols.len(), brute_count(&g, 3));

        let mut it = enumerate_colourings(&g, 3, 5).unwrap();
        let got: Vec<_> = it.by_ref().collect();
        assert_eq!(got.len(), 6);
        assert!(got[..5].iter().all(Result::is_ok));
        assert!(matches!(got[5], Err(Error::Resource { cap: 5, reached: 6, .. })));
        assert!(it.next().is_none());
        assert_eq!(count_colourings(&g, 3, 24).unwrap(), 24);
        assert!(count_colourings(&g, 3, 23).is_err());
    }

    #[test]
    fn surjective_colourings_over_k_factorial_count_partitions() {
        let (prism, _, _) = families::gen_prism();
        let surjective: Vec<_> = all(&prism, 3)
            .into_iter()
            .filter(|c| c.colours_used() == 3)
            .collect();
        let partitions: std::collections::BTreeSet<_> = surjective.iter().map(partition_of).collect();
        assert_eq!(surjective.len() / 6, partitions.len());
        assert_eq!(partitions.len(), 2);
    }

    #[test]
    fn counts_invariant_under_relabelling() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let (prism, _, _) = families::gen_prism();
        let graphs = [prism, Graph::path(6), Graph::cycle(7).unwrap(), crate::hereditary::named_graph("P3+P1").unwrap()];
        for g in &graphs {
            for k in 2..=4 {
                let base = count_colourings(g, k, DEFAULT_ENUMERATION_CAP).unwrap();
                for _ in 0..5 {
                    let mut perm: Vec<usize> = (0..g.n()).collect();
                    perm.shuffle(&mut rng);
                    let h = g.relabel(&perm).unwrap();
                    assert_eq!(count_colourings(&h, k, DEFAULT_ENUMERATION_CAP).unwrap(), base);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn enumeration_is_proper_and_complete(g in crate::graph::tests::arb_graph(6), k in 1usize..=3) {
            let cols = all(&g, k);
            for c in &cols {
                prop_assert!(is_proper(&g, c).unwrap());
            }
            prop_assert_eq!(cols.len(), brute_count(&g, k));
        }

        #[test]
        fn partition_ignores_labels(
            raw in proptest::collection::vec(0usize..5, 1..12),
            perm in Just((0..5).collect::<Vec<usize>>()).prop_shuffle(),
        ) {
            let c = Colouring::new(5, raw).unwrap();
            let d = c.permute_colours(&perm).unwrap();
            prop_assert_eq!(partition_of(&c), partition_of(&d));
        }
    }
}

//! Exact chromatic and clique numbers by complete search.
//!
//! Both searches are exponential in the worst case and are guarded by a
//! vertex-count cap (default [`DEFAULT_EXACT_CAP`]).

use crate::bits::VertexSet;
use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_EXACT_CAP: usize = 64;

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::input("exact search needs at least one vertex"));
    }
    if g.n() > cap {
        return Err(Error::Resource {
            what: "exact search vertex count",
            cap,
            reached: g.n(),
        });
    }
    Ok(())
}

/// Vertices by descending degree, ties broken by index.
pub fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

fn greedy(g: &Graph, order: &[usize]) -> Vec<usize> {
    let mut colour = vec![usize::MAX; g.n()];
    for &v in order {
        let used: Vec<usize> = g.neighbours(v).iter().map(|u| colour[u]).collect();
        colour[v] = (0..).find(|c| !used.contains(c)).unwrap();
    }
    colour
}

struct ColourSearch<'g> {
    g: &'g Graph,
    order: &'g [usize],
    k: usize,
    colour: Vec<usize>,
}

impl ColourSearch<'_> {
    fn extend(&mut self, pos: usize, used: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let v = self.order[pos];
        let mut blocked = vec![false; self.k];
        for u in self.g.neighbours(v) {
            if self.colour[u] != usize::MAX {
                blocked[self.colour[u]] = true;
            }
        }
        // Colours above `used` are interchangeable; trying one of them suffices.
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if blocked[c] {
                continue;
            }
            self.colour[v] = c;
            if self.extend(pos + 1, used.max(c + 1)) {
                return true;
            }
        }
        self.colour[v] = usize::MAX;
        false
    }
}

/// A proper `k`-colouring of `g`, if one exists.
pub fn find_colouring(g: &Graph, k: usize) -> Option<Colouring> {
    if k == 0 {
        return (g.n() == 0).then(|| Colouring::new(0, vec![]).unwrap());
    }
    let order = degree_order(g);
    let mut search = ColourSearch {
        g,
        order: &order,
        k,
        colour: vec![usize::MAX; g.n()],
    };
    search
        .extend(0, 0)
        .then(|| Colouring::new(k, search.colour).expect("search stays within k colours"))
}

/// A colouring with exactly `chromatic_number(g)` colours.
pub fn minimum_colouring(g: &Graph) -> Result<Colouring> {
    minimum_colouring_capped(g, DEFAULT_EXACT_CAP)
}

pub fn minimum_colouring_capped(g: &Graph, cap: usize) -> Result<Colouring> {
    check_cap(g, cap)?;
    let order = degree_order(g);
    let upper = greedy(g, &order);
    let upper_k = upper.iter().max().map_or(0, |m| m + 1);
    let lower_k = clique_number_capped(g, cap)?;
    if lower_k == upper_k {
        return Colouring::new(upper_k, upper);
    }
    for k in lower_k..upper_k {
        if let Some(c) = find_colouring(g, k) {
            return Ok(c);
        }
    }
    Colouring::new(upper_k, upper)
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_capped(g, DEFAULT_EXACT_CAP)
}

pub fn chromatic_number_capped(g: &Graph, cap: usize) -> Result<usize> {
    minimum_colouring_capped(g, cap).map(|c| c.k())
}

fn expand(g: &Graph, current: &mut Vec<usize>, mut candidates: VertexSet, best: &mut Vec<usize>) {
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    while let Some(v) = candidates.first() {
        if current.len() + candidates.len() <= best.len() {
            return;
        }
        candidates.remove(v);
        current.push(v);
        expand(g, current, candidates.intersection(g.neighbours(v)), best);
        current.pop();
    }
    if current.len() > best.len() {
        *best = current.clone();
    }
}

/// A maximum clique, found by branch and bound.
pub fn maximum_clique(g: &Graph) -> Result<VertexSet> {
    maximum_clique_capped(g, DEFAULT_EXACT_CAP)
}

pub fn maximum_clique_capped(g: &Graph, cap: usize) -> Result<VertexSet> {
    check_cap(g, cap)?;
    let mut best = Vec::new();
    expand(g, &mut Vec::new(), g.vertices(), &mut best);
    Ok(VertexSet::from_iter_in(g.n(), best))
}

pub fn clique_number(g: &Graph) -> Result<usize> {
    clique_number_capped(g, DEFAULT_EXACT_CAP)
}

pub fn clique_number_capped(g: &Graph, cap: usize) -> Result<usize> {
    maximum_clique_capped(g, cap).map(|c| c.len())
}

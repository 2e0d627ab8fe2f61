//! JSON graph files and DOT export.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::families::FamilyInstance;
use crate::graph::Graph;

/// A graph plus optional named colourings:
/// `{"n": 6, "edges": [[0, 1], ...], "colourings": {"left": {"k": 3, "colours": [...]}}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphFileRepr", into = "GraphFileRepr")]
pub struct GraphFile {
    pub graph: Graph,
    pub colourings: BTreeMap<String, Colouring>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFileRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    colourings: BTreeMap<String, Colouring>,
}

impl TryFrom<GraphFileRepr> for GraphFile {
    type Error = Error;

    fn try_from(r: GraphFileRepr) -> Result<Self> {
        if r.n == 0 {
            return Err(Error::input("a graph needs at least one vertex"));
        }
        let edges: Vec<_> = r.edges.iter().map(|&[u, v]| (u, v)).collect();
        let graph = Graph::from_edges(r.n, &edges)?;
        if let Some((name, c)) = r.colourings.iter().find(|(_, c)| c.len() != r.n) {
            return Err(Error::input(format!(
                "colouring {name:?} has {} entries for {} vertices",
                c.len(),
                r.n
            )));
        }
        Ok(GraphFile {
            graph,
            colourings: r.colourings,
        })
    }
}

impl From<GraphFile> for GraphFileRepr {
    fn from(f: GraphFile) -> Self {
        GraphFileRepr {
            n: f.graph.n(),
            edges: f.graph.edges().map(|(u, v)| [u, v]).collect(),
            colourings: f.colourings,
        }
    }
}

impl From<FamilyInstance> for GraphFile {
    fn from(inst: FamilyInstance) -> Self {
        GraphFile {
            graph: inst.graph,
            colourings: inst.colourings.into_iter().collect(),
        }
    }
}

impl GraphFile {
    pub fn new(graph: Graph) -> Self {
        GraphFile {
            graph,
            colourings: BTreeMap::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::input(format!("bad graph file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph files always serialize")
    }
}

pub fn parse_colouring(text: &str) -> Result<Colouring> {
    serde_json::from_str(text).map_err(|e| Error::input(format!("bad colouring: {e}")))
}

/// Undirected DOT. With a colouring, each vertex is labelled by its 1-based
/// colour.
pub fn to_dot(g: &Graph, colouring: Option<&Colouring>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match colouring {
            Some(c) => writeln!(out, "  {v} [label=\"{v}:{}\"];", c.colour(v) + 1),
            None => writeln!(out, "  {v};"),
        }
        .unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

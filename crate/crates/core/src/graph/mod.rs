//! Multigraphs with an observable edge order.
//!
//! Edge `i` is always the `i`-th edge given at construction or parse time.
//! Every sign in the chain complexes built on top of a graph is derived from
//! this order, so operations that rebuild a graph keep the relative order of
//! surviving edges.

mod catalog;
mod state;

pub use catalog::{catalog, fixed_permutations, standard_suite, PERMUTATION_SEED};
pub use state::{
    components, enumerate_states, state_table, EdgeSet, States, SubgraphState, UnionFind,
    DEFAULT_EDGE_CAP, HARD_EDGE_CAP,
};

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    name: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reduction {
    Delete,
    Contract,
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for (i, &(a, b)) in edges.iter().enumerate() {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::Validation(format!(
                    "edge {i} ({a},{b}) has an endpoint outside 0..{vertex_count}"
                )));
            }
        }
        Ok(Self {
            vertex_count,
            edges,
            name: None,
        })
    }

    /// Graph with `vertex_count` vertices and no edges.
    pub fn empty(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            edges: Vec::new(),
            name: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|&(a, b)| a == b)
    }

    /// Number of edge ends at `v`; a loop counts twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn reduce(&self, edge: usize, mode: Reduction) -> Multigraph {
        let (a, b) = self.edges[edge];
        let survivors = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != edge)
            .map(|(_, &e)| e);
        if mode == Reduction::Delete || a == b {
            return Multigraph {
                vertex_count: self.vertex_count,
                edges: survivors.collect(),
                name: None,
            };
        }
        // Merge the larger endpoint into the smaller one and close the gap.
        let (keep, gone) = (a.min(b), a.max(b));
        let remap = |v: usize| match v.cmp(&gone) {
            std::cmp::Ordering::Less => v,
            std::cmp::Ordering::Equal => keep,
            std::cmp::Ordering::Greater => v - 1,
        };
        Multigraph {
            vertex_count: self.vertex_count - 1,
            edges: survivors.map(|(u, v)| (remap(u), remap(v))).collect(),
            name: None,
        }
    }

    /// Same graph with edges listed in the order `order[0], order[1], ...`.
    pub fn permute_edges(&self, order: &[usize]) -> Multigraph {
        assert_eq!(order.len(), self.edges.len(), "permutation length mismatch");
        Multigraph {
            vertex_count: self.vertex_count,
            edges: order.iter().map(|&i| self.edges[i]).collect(),
            name: self.name.clone(),
        }
    }

    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let shift = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)));
        Multigraph {
            vertex_count: self.vertex_count + other.vertex_count,
            edges,
            name: None,
        }
    }

    pub fn with_isolated_vertex(&self) -> Multigraph {
        Multigraph {
            vertex_count: self.vertex_count + 1,
            edges: self.edges.clone(),
            name: None,
        }
    }

    /// Parses the line-oriented text format:
    ///
    /// ```text
    /// # comment
    /// vertices 3
    /// edge 0 1
    /// edge 1 2
    /// ```
    pub fn parse(source: &str) -> Result<Self> {
        let mut vertex_count: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in source.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let mut words = line.split_whitespace();
            match words.next() {
                Some("vertices") => {
                    if vertex_count.is_some() {
                        return Err(err("duplicate `vertices` header".into()));
                    }
                    let n = parse_index(words.next(), "vertex count").map_err(err)?;
                    if words.next().is_some() {
                        return Err(err("trailing tokens after vertex count".into()));
                    }
                    vertex_count = Some(n);
                }
                Some("edge") => {
                    let n = vertex_count
                        .ok_or_else(|| err("`edge` before `vertices` header".into()))?;
                    let a = parse_index(words.next(), "endpoint").map_err(err)?;
                    let b = parse_index(words.next(), "endpoint").map_err(err)?;
                    if words.next().is_some() {
                        return Err(err("trailing tokens after edge endpoints".into()));
                    }
                    if a >= n || b >= n {
                        return Err(err(format!(
                            "endpoint out of range: edge {a} {b} with {n} vertices"
                        )));
                    }
                    edges.push((a, b));
                }
                Some(other) => return Err(err(format!("unrecognized directive `{other}`"))),
                None => unreachable!("blank lines are skipped"),
            }
        }
        let vertex_count = vertex_count.ok_or(Error::Parse {
            line: source.lines().count().max(1),
            message: "missing `vertices` header".into(),
        })?;
        Ok(Self {
            vertex_count,
            edges,
            name: None,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str(&format!("# {name}\n"));
        }
        out.push_str(&format!("vertices {}\n", self.vertex_count));
        for &(a, b) in &self.edges {
            out.push_str(&format!("edge {a} {b}\n"));
        }
        out
    }
}

fn parse_index(token: Option<&str>, what: &str) -> std::result::Result<usize, String> {
    let token = token.ok_or_else(|| format!("missing {what}"))?;
    token
        .parse::<usize>()
        .map_err(|_| format!("invalid {what} `{token}`"))
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(name) => write!(f, "{name}")?,
            None => write!(f, "graph")?,
        }
        write!(f, " (V={}, E={})", self.vertex_count, self.edges.len())
    }
}

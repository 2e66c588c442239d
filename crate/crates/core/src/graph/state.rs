use rayon::prelude::*;

use super::Multigraph;
use crate::error::{Error, Result};

/// Enumeration cap used when `GPC_MAX_EDGES` is unset.
pub const DEFAULT_EDGE_CAP: usize = 24;
/// Edge subsets are `u64` bit sets; one bit is kept free for the end marker.
pub const HARD_EDGE_CAP: usize = 63;

/// The effective enumeration cap: `GPC_MAX_EDGES` if set and parseable,
/// clamped to [`HARD_EDGE_CAP`].
pub fn edge_cap() -> usize {
    std::env::var("GPC_MAX_EDGES")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .unwrap_or(DEFAULT_EDGE_CAP)
        .min(HARD_EDGE_CAP)
}

pub(crate) fn check_cap(g: &Multigraph) -> Result<()> {
    let cap = edge_cap();
    if g.edge_count() > cap {
        return Err(Error::Capacity {
            edges: g.edge_count(),
            cap,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EdgeSet(pub u64);

impl EdgeSet {
    pub fn contains(self, edge: usize) -> bool {
        self.0 >> edge & 1 == 1
    }

    pub fn with(self, edge: usize) -> EdgeSet {
        EdgeSet(self.0 | 1 << edge)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Number of members strictly below `edge`.
    pub fn count_below(self, edge: usize) -> usize {
        (self.0 & ((1u64 << edge) - 1)).count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }
}

#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn find(&mut self, mut node: usize) -> usize {
        let mut root = node;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[node] != root {
            let next = self.parent[node];
            self.parent[node] = root;
            node = next;
        }
        root
    }

    /// Returns `true` if two distinct classes were merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.rank[a] < self.rank[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        if self.rank[a] == self.rank[b] {
            self.rank[a] += 1;
        }
        true
    }

    /// Class ids numbered 0.. in order of first appearance.
    pub fn canonical_labels(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut root_label = vec![usize::MAX; n];
        let mut labels = Vec::with_capacity(n);
        let mut next = 0;
        for v in 0..n {
            let r = self.find(v);
            if root_label[r] == usize::MAX {
                root_label[r] = next;
                next += 1;
            }
            labels.push(root_label[r]);
        }
        (labels, next)
    }
}

/// A spanning subgraph together with its connected components.
///
/// Component ids are canonical: they are numbered in order of the smallest
/// vertex they contain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphState {
    pub edge_set: EdgeSet,
    pub component_of: Vec<usize>,
    pub component_count: usize,
    pub edge_count: usize,
}

pub fn components(g: &Multigraph, edge_set: EdgeSet) -> SubgraphState {
    let mut uf = UnionFind::new(g.vertex_count());
    for e in edge_set.iter().take_while(|&e| e < g.edge_count()) {
        let (a, b) = g.edge(e);
        uf.union(a, b);
    }
    let (component_of, component_count) = uf.canonical_labels();
    SubgraphState {
        edge_set,
        component_of,
        component_count,
        edge_count: edge_set.len(),
    }
}

/// Iterator over all `2^e(G)` subgraph states in increasing bit-set order.
pub struct States<'g> {
    graph: &'g Multigraph,
    next: u64,
    end: u64,
}

impl<'g> Iterator for States<'g> {
    type Item = SubgraphState;

    fn next(&mut self) -> Option<SubgraphState> {
        if self.next >= self.end {
            return None;
        }
        let s = components(self.graph, EdgeSet(self.next));
        self.next += 1;
        Some(s)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

pub fn enumerate_states(g: &Multigraph) -> Result<States<'_>> {
    check_cap(g)?;
    Ok(States {
        graph: g,
        next: 0,
        end: 1u64 << g.edge_count(),
    })
}

/// All states materialized, indexed by their bit set. Computed in parallel
/// over disjoint index ranges; the result does not depend on thread count.
pub fn state_table(g: &Multigraph) -> Result<Vec<SubgraphState>> {
    check_cap(g)?;
    let end = 1u64 << g.edge_count();
    Ok((0..end)
        .into_par_iter()
        .map(|bits| components(g, EdgeSet(bits)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;

    #[test]
    fn single_edge_components() {
        let e1 = catalog("path:1").unwrap();
        assert_eq!(components(&e1, EdgeSet(0)).component_count, 2);
        assert_eq!(components(&e1, EdgeSet(1)).component_count, 1);
    }

    #[test]
    fn loop_keeps_one_component() {
        let l1 = catalog("loop").unwrap();
        let s = components(&l1, EdgeSet(1));
        assert_eq!(s.component_count, 1);
        assert_eq!(s.edge_count, 1);
    }

    #[test]
    fn enumeration_counts() {
        let e1 = catalog("path:1").unwrap();
        assert_eq!(enumerate_states(&e1).unwrap().count(), 2);
        let k3 = catalog("complete:3").unwrap();
        assert_eq!(enumerate_states(&k3).unwrap().count(), 8);
        let p2 = catalog("path:2").unwrap();
        let cs: Vec<usize> = enumerate_states(&p2)
            .unwrap()
            .map(|s| s.component_count)
            .collect();
        assert_eq!(cs, vec![3, 2, 2, 1]);
    }

    #[test]
    fn canonical_component_ids() {
        let p2 = catalog("path:2").unwrap();
        // only edge 1 = (1,2): components {0}, {1,2}
        let s = components(&p2, EdgeSet(0b10));
        assert_eq!(s.component_of, vec![0, 1, 1]);
    }

    #[test]
    fn capacity_error() {
        let edges = vec![(0, 1); 30];
        let g = Multigraph::new(2, edges).unwrap();
        assert!(matches!(
            enumerate_states(&g),
            Err(Error::Capacity { edges: 30, .. })
        ));
    }

    #[test]
    fn state_table_matches_iterator() {
        let k4 = catalog("complete:4").unwrap();
        let table = state_table(&k4).unwrap();
        let iter: Vec<_> = enumerate_states(&k4).unwrap().collect();
        assert_eq!(table, iter);
    }

    #[test]
    fn edge_set_helpers() {
        let s = EdgeSet(0b1011);
        assert_eq!(s.len(), 3);
        assert_eq!(s.count_below(3), 2);
        assert_eq!(s.count_below(0), 0);
        assert!(s.contains(3) && !s.contains(2));
        assert_eq!(s.with(2), EdgeSet(0b1111));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 1, 3]);
    }
}

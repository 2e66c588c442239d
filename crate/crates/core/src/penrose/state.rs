//! Resolving matching edges and tracing the loops of a state.

use std::fmt;

use rayon::prelude::*;

use super::matched::MatchedCubicGraph;
use crate::error::{Error, Result};
use crate::graph::UnionFind;

pub const MAX_SITES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Resolution {
    Parallel,
    Crossed,
    Node0,
    Node1,
}

impl Resolution {
    pub const ALL: [Resolution; 4] = [
        Resolution::Parallel,
        Resolution::Crossed,
        Resolution::Node0,
        Resolution::Node1,
    ];

    pub fn is_nodal(self) -> bool {
        matches!(self, Resolution::Node0 | Resolution::Node1)
    }

    /// Base-4 digit used for state indices.
    pub fn digit(self) -> usize {
        self as usize
    }

    pub fn from_digit(d: usize) -> Self {
        Self::ALL[d]
    }

    /// Parallel ↔ Crossed, Node0 ↔ Node1: the effect of swapping the legs at
    /// one end of the site.
    pub fn mirrored(self) -> Self {
        match self {
            Resolution::Parallel => Resolution::Crossed,
            Resolution::Crossed => Resolution::Parallel,
            Resolution::Node0 => Resolution::Node1,
            Resolution::Node1 => Resolution::Node0,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Resolution::Parallel => 'P',
            Resolution::Crossed => 'C',
            Resolution::Node0 => '0',
            Resolution::Node1 => '1',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PKState {
    pub resolutions: Vec<Resolution>,
    pub loop_count: usize,
    pub component_count: usize,
    /// Component of each leg half-edge, numbered by smallest half-edge;
    /// `usize::MAX` on matching half-edges.
    pub component_of: Vec<usize>,
}

impl PKState {
    pub fn nodal_count(&self) -> usize {
        self.resolutions.iter().filter(|r| r.is_nodal()).count()
    }

    pub fn node0_count(&self) -> usize {
        self.resolutions.iter().filter(|&&r| r == Resolution::Node0).count()
    }

    pub fn node1_count(&self) -> usize {
        self.resolutions.iter().filter(|&&r| r == Resolution::Node1).count()
    }
}

impl fmt::Display for PKState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.resolutions.iter().map(|r| r.symbol()).collect();
        f.write_str(&s)
    }
}

pub(crate) fn check_sites(g: &MatchedCubicGraph) -> Result<()> {
    let m = g.sites().len();
    if m > MAX_SITES {
        return Err(Error::Capacity {
            edges: m,
            cap: MAX_SITES,
        });
    }
    Ok(())
}

/// Digits of a labeled-state index, site 0 least significant.
pub fn resolutions_of(index: usize, sites: usize) -> Vec<Resolution> {
    (0..sites)
        .map(|k| Resolution::from_digit(index >> (2 * k) & 3))
        .collect()
}

pub fn state_index(resolutions: &[Resolution]) -> usize {
    resolutions
        .iter()
        .enumerate()
        .map(|(k, r)| r.digit() << (2 * k))
        .sum()
}

/// Partner of each leg across its site under `res`.
fn site_partners(g: &MatchedCubicGraph, res: &[Resolution]) -> Vec<usize> {
    let mut partner = vec![usize::MAX; g.halfedge_count()];
    for (site, &r) in g.sites().iter().zip(res) {
        let ([u1, u2], [v1, v2]) = (site.u_legs, site.v_legs);
        let pairs = match r {
            Resolution::Parallel => [(u1, v1), (u2, v2)],
            _ => [(u1, v2), (u2, v1)],
        };
        for (a, b) in pairs {
            partner[a] = b;
            partner[b] = a;
        }
    }
    partner
}

/// Loops are found by walking legs, alternating between a free edge and a
/// site connection; components then merge the loops through each nodal site.
pub fn trace_components(g: &MatchedCubicGraph, res: &[Resolution]) -> PKState {
    assert_eq!(res.len(), g.sites().len(), "one resolution per matching edge");
    let h = g.halfedge_count();
    let partner = site_partners(g, res);
    let mut loop_of = vec![usize::MAX; h];
    let mut loop_count = 0;
    for start in 0..h {
        if partner[start] == usize::MAX || loop_of[start] != usize::MAX {
            continue;
        }
        let mut cur = start;
        loop {
            loop_of[cur] = loop_count;
            let across = g.mate(cur);
            loop_of[across] = loop_count;
            cur = partner[across];
            if cur == start {
                break;
            }
        }
        loop_count += 1;
    }
    let mut uf = UnionFind::new(loop_count);
    for (site, &r) in g.sites().iter().zip(res) {
        if r.is_nodal() {
            let [u1, u2] = site.u_legs;
            uf.union(loop_of[u1], loop_of[u2]);
        }
    }
    let mut root_label = vec![usize::MAX; loop_count];
    let mut component_of = vec![usize::MAX; h];
    let mut component_count = 0;
    for (hh, &l) in loop_of.iter().enumerate() {
        if l == usize::MAX {
            continue;
        }
        let r = uf.find(l);
        if root_label[r] == usize::MAX {
            root_label[r] = component_count;
            component_count += 1;
        }
        component_of[hh] = root_label[r];
    }
    PKState {
        resolutions: res.to_vec(),
        loop_count,
        component_count,
        component_of,
    }
}

/// All `4^{|M|}` labeled states, indexed by [`state_index`].
pub fn pk_state_table(g: &MatchedCubicGraph) -> Result<Vec<PKState>> {
    check_sites(g)?;
    let m = g.sites().len();
    Ok((0..1usize << (2 * m))
        .into_par_iter()
        .map(|i| trace_components(g, &resolutions_of(i, m)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::penrose::matched::matched_catalog;
    use Resolution::*;

    #[test]
    fn theta_traces() {
        let g = matched_catalog("theta").unwrap();
        let c = |r| trace_components(&g, &[r]);
        assert_eq!((c(Parallel).loop_count, c(Parallel).component_count), (2, 2));
        assert_eq!((c(Crossed).loop_count, c(Crossed).component_count), (1, 1));
        let n0 = c(Node0);
        assert_eq!((n0.component_count, n0.nodal_count()), (1, 1));
    }

    #[test]
    fn nodal_label_does_not_matter() {
        let g = matched_catalog("k4").unwrap();
        for i in 0..16 {
            let res = resolutions_of(i, 2);
            let flipped: Vec<_> = res
                .iter()
                .map(|&r| match r {
                    Node0 => Node1,
                    Node1 => Node0,
                    r => r,
                })
                .collect();
            assert_eq!(trace_components(&g, &res), PKState {
                resolutions: res.clone(),
                ..trace_components(&g, &flipped)
            });
        }
    }

    #[test]
    fn nodes_join_loops() {
        // two thetas side by side never share a loop
        let g = matched_catalog("theta-pair").unwrap();
        assert_eq!(trace_components(&g, &[Parallel, Parallel]).component_count, 4);
        assert_eq!(trace_components(&g, &[Node1, Parallel]).component_count, 3);
    }

    #[test]
    fn index_round_trip() {
        for i in 0..64 {
            assert_eq!(state_index(&resolutions_of(i, 3)), i);
        }
    }

    #[test]
    fn site_cap() {
        let big = (0..21).fold(matched_catalog("theta").unwrap(), |acc, _| {
            acc.disjoint_union(&matched_catalog("theta").unwrap())
        });
        assert!(matches!(pk_state_table(&big), Err(Error::Capacity { edges: 22, cap: 20 })));
    }
}

//! The cube of spanning subgraphs, with the component bookkeeping needed by
//! every edge-adding partial differential.

use crate::error::Result;
use crate::graph::{state_table, EdgeSet, Multigraph, SubgraphState};

pub(crate) struct Cube<'g> {
    pub graph: &'g Multigraph,
    pub states: Vec<SubgraphState>,
    /// Smallest vertex of each component, indexed by canonical component id.
    reps: Vec<Vec<usize>>,
}

/// Effect of adding edge `e` to state `s` on component ids.
pub(crate) struct EdgeAddition {
    pub target: usize,
    /// Canonical id in the target state of each component of the source.
    pub new_of: Vec<usize>,
    /// Source components joined by the edge, if it joins two.
    pub joined: Option<(usize, usize)>,
}

impl<'g> Cube<'g> {
    pub fn new(graph: &'g Multigraph) -> Result<Self> {
        let states = state_table(graph)?;
        let reps = states
            .iter()
            .map(|s| {
                let mut reps = vec![usize::MAX; s.component_count];
                for (v, &c) in s.component_of.iter().enumerate() {
                    if reps[c] == usize::MAX {
                        reps[c] = v;
                    }
                }
                reps
            })
            .collect();
        Ok(Self {
            graph,
            states,
            reps,
        })
    }

    pub fn add_edge(&self, s: usize, e: usize) -> EdgeAddition {
        let source = &self.states[s];
        debug_assert!(!source.edge_set.contains(e));
        let target = s | 1 << e;
        let after = &self.states[target];
        let new_of = self.reps[s].iter().map(|&v| after.component_of[v]).collect();
        let (u, v) = self.graph.edge(e);
        let (a, b) = (source.component_of[u], source.component_of[v]);
        EdgeAddition {
            target,
            new_of,
            joined: (a != b).then_some((a.min(b), a.max(b))),
        }
    }

    /// `(−1)^{#edges of s preceding e}`.
    pub fn edge_sign(&self, s: usize, e: usize) -> i64 {
        if EdgeSet(s as u64).count_below(e) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Image of an `x`-label mask under `∂_e` in `Z[x]/(x²)`; `None` when two
/// `x`-labeled components are joined.
pub(crate) fn merge_x_mask(mask: usize, add: &EdgeAddition) -> Option<usize> {
    if let Some((a, b)) = add.joined {
        if mask >> a & 1 == 1 && mask >> b & 1 == 1 {
            return None;
        }
    }
    let mut out = 0;
    for (c, &n) in add.new_of.iter().enumerate() {
        if mask >> c & 1 == 1 {
            out |= 1 << n;
        }
    }
    Some(out)
}

/// Human-readable state description: edge bits in edge order.
pub(crate) fn edge_string(bits: usize, m: usize) -> String {
    (0..m)
        .map(|e| if bits >> e & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Component labels, component 0 first.
pub(crate) fn x_label_string(mask: usize, c: usize) -> String {
    (0..c)
        .map(|i| if mask >> i & 1 == 1 { 'x' } else { '1' })
        .collect()
}

/// Packs the bits of `mask` that lie in `within` into consecutive low bits.
pub(crate) fn compress(mask: usize, within: usize) -> usize {
    let mut out = 0;
    let mut k = 0;
    let mut w = within;
    while w != 0 {
        let low = w & w.wrapping_neg();
        if mask & low != 0 {
            out |= 1 << k;
        }
        k += 1;
        w &= w - 1;
    }
    out
}

pub(crate) fn expand(packed: usize, within: usize) -> usize {
    let mut out = 0;
    let mut k = 0;
    let mut w = within;
    while w != 0 {
        let low = w & w.wrapping_neg();
        if packed >> k & 1 == 1 {
            out |= low;
        }
        k += 1;
        w &= w - 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pack_bits() {
        assert_eq!(compress(0b1010, 0b1110), 0b101);
        assert_eq!(expand(0b101, 0b1110), 0b1010);
        for within in [0b0usize, 0b1011, 0b111000] {
            for packed in 0..1usize << (within as u64).count_ones() {
                assert_eq!(compress(expand(packed, within), within), packed);
            }
        }
    }
}

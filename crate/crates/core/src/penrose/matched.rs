//! Cubic graphs with a perfect matching, stored by half-edges.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{catalog, Multigraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct MatchedGraphJson {
    halfedges: usize,
    vertices: Vec<Vec<usize>>,
    edges: Vec<Vec<usize>>,
    matching: Vec<usize>,
}

/// One matching edge seen from its two ends. `u` is the vertex of the edge's
/// first half-edge; the legs at each end are the two other half-edges of that
/// vertex, in the vertex's listed order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Site {
    pub edge: usize,
    pub u: usize,
    pub v: usize,
    pub u_legs: [usize; 2],
    pub v_legs: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchedCubicGraph {
    halfedge_count: usize,
    vertices: Vec<[usize; 3]>,
    edges: Vec<[usize; 2]>,
    matching: Vec<usize>,
    vertex_of: Vec<usize>,
    edge_of: Vec<usize>,
    sites: Vec<Site>,
    name: Option<String>,
}

impl MatchedCubicGraph {
    /// Validates the half-edge incidence structure and the matching.
    pub fn new(
        halfedge_count: usize,
        vertices: Vec<Vec<usize>>,
        edges: Vec<Vec<usize>>,
        matching: Vec<usize>,
    ) -> Result<Self> {
        let invalid = |msg: String| Err(Error::Validation(msg));
        let mut vertex_of = vec![usize::MAX; halfedge_count];
        let mut edge_of = vec![usize::MAX; halfedge_count];
        let mut fixed_vertices = Vec::with_capacity(vertices.len());
        for (v, hs) in vertices.iter().enumerate() {
            if hs.len() != 3 {
                return invalid(format!("vertex {v} has degree {}, expected 3", hs.len()));
            }
            for &h in hs {
                if h >= halfedge_count {
                    return invalid(format!("vertex {v} lists half-edge {h}, only {halfedge_count} exist"));
                }
                if vertex_of[h] != usize::MAX {
                    return invalid(format!("half-edge {h} is listed at vertices {} and {v}", vertex_of[h]));
                }
                vertex_of[h] = v;
            }
            fixed_vertices.push([hs[0], hs[1], hs[2]]);
        }
        let mut fixed_edges = Vec::with_capacity(edges.len());
        for (e, hs) in edges.iter().enumerate() {
            if hs.len() != 2 {
                return invalid(format!("edge {e} has {} half-edges, expected 2", hs.len()));
            }
            for &h in hs {
                if h >= halfedge_count {
                    return invalid(format!("edge {e} lists half-edge {h}, only {halfedge_count} exist"));
                }
                if edge_of[h] != usize::MAX {
                    return invalid(format!("half-edge {h} belongs to edges {} and {e}", edge_of[h]));
                }
                edge_of[h] = e;
            }
            fixed_edges.push([hs[0], hs[1]]);
        }
        for h in 0..halfedge_count {
            if vertex_of[h] == usize::MAX {
                return invalid(format!("half-edge {h} is dangling: no vertex"));
            }
            if edge_of[h] == usize::MAX {
                return invalid(format!("half-edge {h} is dangling: no edge"));
            }
        }
        let mut covered = vec![usize::MAX; vertices.len()];
        let mut sites = Vec::with_capacity(matching.len());
        for &e in &matching {
            let Some(&[hu, hv]) = fixed_edges.get(e) else {
                return invalid(format!("matching lists edge {e}, only {} exist", fixed_edges.len()));
            };
            let (u, v) = (vertex_of[hu], vertex_of[hv]);
            if u == v {
                return invalid(format!("matching edge {e} is a loop at vertex {u}"));
            }
            for w in [u, v] {
                if covered[w] != usize::MAX {
                    return invalid(format!("vertex {w} is covered by matching edges {} and {e}", covered[w]));
                }
                covered[w] = e;
            }
            let legs = |w: usize, h: usize| {
                let mut it = fixed_vertices[w].iter().copied().filter(|&x| x != h);
                [it.next().unwrap(), it.next().unwrap()]
            };
            sites.push(Site {
                edge: e,
                u,
                v,
                u_legs: legs(u, hu),
                v_legs: legs(v, hv),
            });
        }
        if let Some(w) = covered.iter().position(|&c| c == usize::MAX) {
            return invalid(format!("vertex {w} is not covered by the matching"));
        }
        Ok(Self {
            halfedge_count,
            vertices: fixed_vertices,
            edges: fixed_edges,
            matching,
            vertex_of,
            edge_of,
            sites,
            name: None,
        })
    }

    pub fn parse_json(source: &str) -> Result<Self> {
        let raw: MatchedGraphJson = serde_json::from_str(source).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        Self::new(raw.halfedges, raw.vertices, raw.edges, raw.matching)
    }

    pub fn to_json(&self) -> String {
        let raw = MatchedGraphJson {
            halfedges: self.halfedge_count,
            vertices: self.vertices.iter().map(|v| v.to_vec()).collect(),
            edges: self.edges.iter().map(|e| e.to_vec()).collect(),
            matching: self.matching.clone(),
        };
        serde_json::to_string(&raw).expect("plain data serializes")
    }

    /// Edge `i` of `g` becomes half-edges `2i` (at its first endpoint) and
    /// `2i + 1`; each vertex lists its half-edges in edge order.
    pub fn from_multigraph(g: &Multigraph, matching: &[usize]) -> Result<Self> {
        let mut vertices = vec![Vec::new(); g.vertex_count()];
        for (i, &(a, b)) in g.edges().iter().enumerate() {
            vertices[a].push(2 * i);
            vertices[b].push(2 * i + 1);
        }
        let edges = (0..g.edge_count()).map(|i| vec![2 * i, 2 * i + 1]).collect();
        Self::new(2 * g.edge_count(), vertices, edges, matching.to_vec())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn halfedge_count(&self) -> usize {
        self.halfedge_count
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[[usize; 3]] {
        &self.vertices
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn matching(&self) -> &[usize] {
        &self.matching
    }

    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    pub fn vertex_of(&self, h: usize) -> usize {
        self.vertex_of[h]
    }

    pub fn edge_of(&self, h: usize) -> usize {
        self.edge_of[h]
    }

    pub fn is_matching_edge(&self, e: usize) -> bool {
        self.matching.contains(&e)
    }

    /// Edges outside the matching, ascending.
    pub fn free_edges(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| !self.is_matching_edge(e)).collect()
    }

    /// The half-edge paired with `h` by its edge.
    pub fn mate(&self, h: usize) -> usize {
        let [a, b] = self.edges[self.edge_of[h]];
        if a == h {
            b
        } else {
            a
        }
    }

    /// Exchanges the two legs at one end of matching edge `site`
    /// (`at_v = false` for the `u` end).
    pub fn swap_legs(&self, site: usize, at_v: bool) -> Self {
        let s = self.sites[site];
        let (w, [a, b]) = if at_v { (s.v, s.v_legs) } else { (s.u, s.u_legs) };
        let mut vertices: Vec<Vec<usize>> = self.vertices.iter().map(|v| v.to_vec()).collect();
        for h in vertices[w].iter_mut() {
            if *h == a {
                *h = b;
            } else if *h == b {
                *h = a;
            }
        }
        let edges = self.edges.iter().map(|e| e.to_vec()).collect();
        let mut out = Self::new(self.halfedge_count, vertices, edges, self.matching.clone())
            .expect("leg swap preserves validity");
        out.name = self.name.clone();
        out
    }

    /// Disjoint union; the matching of `other` follows that of `self`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let (dh, de) = (self.halfedge_count, self.edges.len());
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.to_vec())
            .chain(other.vertices.iter().map(|v| v.iter().map(|h| h + dh).collect()))
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|e| e.to_vec())
            .chain(other.edges.iter().map(|e| e.iter().map(|h| h + dh).collect()))
            .collect();
        let matching = self
            .matching
            .iter()
            .copied()
            .chain(other.matching.iter().map(|e| e + de))
            .collect();
        Self::new(dh + other.halfedge_count, vertices, edges, matching).expect("union of valid graphs")
    }
}

/// Replaces every vertex of `g` by a cycle through one new vertex per incident
/// edge (a digon for degree 2); the original edges, in order, form the matching.
pub fn blowup(g: &Multigraph) -> Result<MatchedCubicGraph> {
    if g.has_loop() {
        return Err(Error::Validation("blow-up needs a loopless graph".into()));
    }
    let mut port = vec![(0, 0); g.edge_count()];
    let mut ports_at: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    let mut next = 0;
    for (v, ports) in ports_at.iter_mut().enumerate() {
        for (i, &(a, b)) in g.edges().iter().enumerate() {
            if a == v {
                port[i].0 = next + ports.len();
                ports.push(i);
            } else if b == v {
                port[i].1 = next + ports.len();
                ports.push(i);
            }
        }
        if ports.len() < 2 {
            return Err(Error::Validation(format!(
                "blow-up needs every vertex of degree ≥ 2; vertex {v} has degree {}",
                ports.len()
            )));
        }
        next += ports.len();
    }
    let mut edges: Vec<(usize, usize)> = port.clone();
    let mut base = 0;
    for ports in &ports_at {
        let d = ports.len();
        for k in 0..d {
            edges.push((base + k, base + (k + 1) % d));
        }
        base += d;
    }
    let multi = Multigraph::new(next, edges)?;
    MatchedCubicGraph::from_multigraph(&multi, &(0..g.edge_count()).collect::<Vec<_>>())
}

/// Named matched graphs: `theta`, `k4`, `theta-pair`, and `blowup:<graph>`
/// for any loopless entry of the graph catalog.
pub fn matched_catalog(spec: &str) -> Result<MatchedCubicGraph> {
    let g = match spec {
        "theta" => MatchedCubicGraph::from_multigraph(&catalog("theta")?, &[0])?,
        // edges of K4 in catalog order: 01 02 03 12 13 23
        "k4" => MatchedCubicGraph::from_multigraph(&catalog("complete:4")?, &[0, 5])?,
        "theta-pair" => {
            let t = matched_catalog("theta")?;
            t.disjoint_union(&t)
        }
        _ => match spec.strip_prefix("blowup:") {
            Some(inner) => blowup(&catalog(inner)?)?,
            None => return Err(Error::UnknownCatalog(spec.to_string())),
        },
    };
    Ok(g.with_name(spec))
}

pub fn matched_suite() -> Vec<MatchedCubicGraph> {
    ["theta", "k4", "theta-pair", "blowup:complete:3"]
        .iter()
        .map(|s| matched_catalog(s).expect("built-in matched spec"))
        .collect()
}

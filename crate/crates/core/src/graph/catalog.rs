//! Named graphs: `path:k`, `cycle:k`, `complete:k`, `theta`, `loop`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Multigraph;
use crate::error::{Error, Result};

/// Seed behind [`fixed_permutations`]; changing it changes which edge orders
/// the invariance checks exercise.
pub const PERMUTATION_SEED: u64 = 0x00c0_10de;

pub fn catalog(spec: &str) -> Result<Multigraph> {
    let unknown = || Error::UnknownCatalog(spec.to_string());
    let (kind, arg) = match spec.split_once(':') {
        Some((kind, arg)) => (kind, Some(arg.parse::<usize>().map_err(|_| unknown())?)),
        None => (spec, None),
    };
    let g = match (kind, arg) {
        ("path", Some(k)) => {
            Multigraph::new(k + 1, (0..k).map(|i| (i, i + 1)).collect())?
        }
        ("cycle", Some(k)) if k >= 1 => {
            Multigraph::new(k, (0..k).map(|i| (i, (i + 1) % k)).collect())?
        }
        ("complete", Some(k)) => {
            let mut edges = Vec::new();
            for a in 0..k {
                for b in a + 1..k {
                    edges.push((a, b));
                }
            }
            Multigraph::new(k, edges)?
        }
        ("theta", None) => Multigraph::new(2, vec![(0, 1); 3])?,
        ("loop", None) => Multigraph::new(1, vec![(0, 0)])?,
        _ => return Err(unknown()),
    };
    Ok(g.with_name(spec))
}

/// Catalog entries with at most `max_edges` edges: paths, cycles (including
/// the one-vertex loop and the two-vertex digon), complete graphs up to K4,
/// the theta graph and the single loop.
pub fn standard_suite(max_edges: usize) -> Vec<Multigraph> {
    let mut specs: Vec<String> = Vec::new();
    specs.extend((0..=6).map(|k| format!("path:{k}")));
    specs.extend((1..=6).map(|k| format!("cycle:{k}")));
    specs.extend((1..=4).map(|k| format!("complete:{k}")));
    specs.push("theta".into());
    specs.push("loop".into());
    specs
        .iter()
        .map(|s| catalog(s).expect("built-in catalog spec"))
        .filter(|g| g.edge_count() <= max_edges)
        .collect()
}

/// `count` edge orders of `0..m` drawn from a ChaCha8 stream seeded with
/// [`PERMUTATION_SEED`]; the same arguments always give the same orders.
pub fn fixed_permutations(m: usize, count: usize) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(PERMUTATION_SEED);
    (0..count)
        .map(|_| {
            let mut order: Vec<usize> = (0..m).collect();
            order.shuffle(&mut rng);
            order
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graphs() {
        let e1 = catalog("path:1").unwrap();
        assert_eq!((e1.vertex_count(), e1.edges()), (2, &[(0, 1)][..]));

        let k3 = catalog("complete:3").unwrap();
        assert_eq!(k3.edges(), &[(0, 1), (0, 2), (1, 2)]);

        let theta = catalog("theta").unwrap();
        assert_eq!(theta.vertex_count(), 2);
        assert_eq!(theta.edge_count(), 3);

        let c4 = catalog("cycle:4").unwrap();
        assert_eq!(c4.edges(), &[(0, 1), (1, 2), (2, 3), (3, 0)]);

        assert_eq!(catalog("cycle:1").unwrap().edges(), &[(0, 0)]);
        assert_eq!(catalog("path:1").unwrap().name(), Some("path:1"));
    }

    #[test]
    fn unknown_specs() {
        for bad in ["wheel:4", "path", "path:x", "theta:2", "cycle:0", ""] {
            assert!(
                matches!(catalog(bad), Err(Error::UnknownCatalog(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn suite_respects_edge_bound() {
        let suite = standard_suite(6);
        assert!(suite.iter().all(|g| g.edge_count() <= 6));
        assert!(suite.iter().any(|g| g.name() == Some("complete:4")));
        assert!(suite.iter().any(|g| g.name() == Some("loop")));
        assert!(standard_suite(3).iter().all(|g| g.edge_count() <= 3));
    }

    #[test]
    fn permutations_are_reproducible() {
        let a = fixed_permutations(6, 5);
        assert_eq!(a, fixed_permutations(6, 5));
        for p in &a {
            let mut sorted = p.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, (0..6).collect::<Vec<_>>());
        }
    }
}

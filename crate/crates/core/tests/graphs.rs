use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use proptest::prelude::*;

use chromahom::chain::{homology, one_plus, MultiPoly};
use chromahom::chromatic::{build_chromatic_complex, chromatic_poly_dc, chromatic_state_sum, LAMBDA, Q};
use chromahom::coloring::monochromatic_histogram;
use chromahom::dichromatic::{
    build_dichromatic_complex, dichromatic_poly, impropriety_polys_from_dichromatic, signed_dichromatic, ALPHA, V,
};
use chromahom::graph::{components, EdgeSet, Multigraph, Reduction};

fn multigraph(max_v: usize, max_e: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_v).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_e).prop_map(move |edges| Multigraph::new(n, edges).unwrap())
    })
}

fn bfs_components(g: &Multigraph, s: EdgeSet) -> usize {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for e in s.iter() {
        let (a, b) = g.edge(e);
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut count = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    count
}

fn groups_of(h: &chromahom::chain::HomologySummary) -> BTreeMap<(Vec<u32>, usize), (usize, Vec<BigInt>)> {
    h.nonzero_groups().map(|(k, g)| (k.clone(), (g.betti, g.torsion.clone()))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn union_find_matches_bfs(g in multigraph(7, 9), bits in any::<u64>()) {
        let s = EdgeSet(bits & ((1u64 << g.edge_count()) - 1));
        prop_assert_eq!(components(&g, s).component_count, bfs_components(&g, s));
    }

    #[test]
    fn deletion_contraction_recurrences(g in multigraph(5, 6), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.edge_count() > 0);
        let e = pick.index(g.edge_count());
        let (del, con) = (g.reduce(e, Reduction::Delete), g.reduce(e, Reduction::Contract));
        let v = MultiPoly::var(V);
        let z = dichromatic_poly(&g).unwrap();
        let rec = &dichromatic_poly(&del).unwrap() + &(&v * &dichromatic_poly(&con).unwrap());
        prop_assert_eq!(z, rec);
        let (a, b) = g.edge(e);
        if a != b {
            let rec = &chromatic_state_sum(&del).unwrap() - &chromatic_state_sum(&con).unwrap();
            prop_assert_eq!(chromatic_state_sum(&g).unwrap(), rec);
        }
    }

    #[test]
    fn state_sum_matches_deletion_contraction(g in multigraph(5, 7)) {
        prop_assert_eq!(chromatic_state_sum(&g).unwrap(), chromatic_poly_dc(&g));
    }

    #[test]
    fn homology_invariant_under_edge_order(g in multigraph(4, 5), seed in any::<u64>()) {
        let m = g.edge_count();
        let mut order: Vec<usize> = (0..m).collect();
        let mut s = seed;
        for i in (1..m).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.permute_edges(&order);
        prop_assert_eq!(chromatic_poly_dc(&g), chromatic_poly_dc(&h));
        prop_assert_eq!(signed_dichromatic(&g).unwrap(), signed_dichromatic(&h).unwrap());
        let c = |x: &Multigraph| homology(&build_chromatic_complex(x).unwrap()).unwrap();
        let d = |x: &Multigraph| homology(&build_dichromatic_complex(x).unwrap()).unwrap();
        prop_assert_eq!(c(&g), c(&h));
        prop_assert_eq!(d(&g), d(&h));
    }

    /// An extra isolated vertex tensors the homology with Z[x]/(x²):
    /// H^{i,j}(G ⊔ pt) = H^{i,j}(G) ⊕ H^{i,j−1}(G), torsion included.
    #[test]
    fn isolated_vertex_tensors_with_algebra(g in multigraph(4, 5)) {
        let h = homology(&build_chromatic_complex(&g).unwrap()).unwrap();
        let hp = homology(&build_chromatic_complex(&g.with_isolated_vertex()).unwrap()).unwrap();
        let mut expected: BTreeMap<(Vec<u32>, usize), (usize, Vec<BigInt>)> = BTreeMap::new();
        for ((grading, deg), grp) in h.nonzero_groups() {
            for shift in [0, 1] {
                let entry = expected.entry((vec![grading[0] + shift], *deg)).or_default();
                entry.0 += grp.betti;
                entry.1.extend(grp.torsion.iter().cloned());
                entry.1.sort();
            }
        }
        let mut actual = groups_of(&hp);
        for v in actual.values_mut() {
            v.1.sort();
        }
        prop_assert_eq!(actual, expected);
        prop_assert_eq!(hp.euler_polynomial(&[Q]), &h.euler_polynomial(&[Q]) * &one_plus(Q));
    }

    #[test]
    fn disjoint_union_multiplies(g in multigraph(3, 3), h in multigraph(3, 3)) {
        let u = g.disjoint_union(&h);
        prop_assert_eq!(chromatic_poly_dc(&u), &chromatic_poly_dc(&g) * &chromatic_poly_dc(&h));
        prop_assert_eq!(dichromatic_poly(&u).unwrap(), &dichromatic_poly(&g).unwrap() * &dichromatic_poly(&h).unwrap());
    }

    /// Z(v = α−1, λ = n) = Σ_σ Π_e (1 + (α−1)[σ(a) = σ(b)]) = Σ_σ α^{#improper}.
    #[test]
    fn alpha_expansion_matches_product_form(g in multigraph(5, 6), n in 1u64..=3) {
        let levels = impropriety_polys_from_dichromatic(&g).unwrap();
        let hist = monochromatic_histogram(&g, n).unwrap();
        let alpha = MultiPoly::var(ALPHA);
        let mut from_hist = MultiPoly::zero(&[ALPHA]);
        let mut from_levels = MultiPoly::zero(&[ALPHA]);
        for (i, (&count, level)) in hist.iter().zip(&levels).enumerate() {
            from_hist = &from_hist + &alpha.pow(i as u32).scale(&BigInt::from(count));
            let at_n = level.eval_integer(&[(LAMBDA, n as i64)]).unwrap();
            from_levels = &from_levels + &alpha.pow(i as u32).scale(&at_n);
        }
        prop_assert_eq!(from_hist, from_levels);
    }
}

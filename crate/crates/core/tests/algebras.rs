use num_bigint::BigInt;
use proptest::prelude::*;

use chromahom::chain::homology;
use chromahom::chromatic::{chromatic_poly_dc, LAMBDA};
use chromahom::color::{build_color_complex, color_homology, ColorAlgebra};
use chromahom::graph::catalog;
use chromahom::penrose::{
    blowup, build_pk_complex, matched_catalog, matched_suite, pk_coloring_oracle, pk_polynomial, MatchedCubicGraph,
};
use chromahom::graph::Multigraph;

type Table = Vec<Vec<Option<usize>>>;

/// Every symmetric partial table on `n` colors (entries: a color or zero).
fn symmetric_tables(n: usize) -> Vec<Table> {
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let options = n + 1;
    let total = options.pow(cells.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut t = vec![vec![None; n]; n];
            for &(i, j) in &cells {
                let v = code % options;
                code /= options;
                let entry = (v < n).then_some(v);
                t[i][j] = entry;
                t[j][i] = entry;
            }
            t
        })
        .collect()
}

fn mul(t: &Table, a: Option<usize>, b: Option<usize>) -> Option<usize> {
    t[a?][b?]
}

fn brute_associative(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| mul(t, mul(t, Some(a), Some(b)), Some(c)) == mul(t, Some(a), mul(t, Some(b), Some(c))))))
}

#[test]
fn validation_agrees_with_brute_force_and_complexes_are_sound() {
    let graphs = ["path:1", "path:2", "complete:3", "theta", "loop"].map(|s| catalog(s).unwrap());
    let mut valid = 0;
    for n in 1..=3 {
        for t in symmetric_tables(n) {
            let ok = brute_associative(&t);
            let parsed = ColorAlgebra::from_table(format!("t{n}"), t);
            assert_eq!(parsed.is_ok(), ok);
            let Ok(a) = parsed else { continue };
            valid += 1;
            for g in &graphs {
                // color_homology verifies d∘d = 0 on build and χ = C_G(n).
                let h = color_homology(g, &a).unwrap();
                let c = chromatic_poly_dc(g).eval_integer(&[(LAMBDA, n as i64)]).unwrap();
                assert_eq!(BigInt::from(h.euler), c);
            }
        }
    }
    assert!(valid > 20, "only {valid} valid tables");
}

#[test]
fn rejects_non_commutative_tables() {
    let t = vec![vec![Some(0), Some(0)], vec![Some(1), Some(1)]];
    let err = ColorAlgebra::from_table("left", t).unwrap_err().to_string();
    assert!(err.contains("commutative"), "{err}");
}

fn algebra() -> impl Strategy<Value = ColorAlgebra> {
    prop_oneof![
        (1usize..=4).prop_map(|n| ColorAlgebra::orthogonal(n).unwrap()),
        (1usize..=4).prop_map(|n| ColorAlgebra::cyclic(n).unwrap()),
        Just(ColorAlgebra::klein4()),
        Just(ColorAlgebra::group_ring(&[2, 2]).unwrap()),
        // max-semilattice under a shuffled order
        Just(()).prop_perturb(|_, mut rng| {
            let n = 2 + (rng.next_u32() % 3) as usize;
            let mut rank: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                rank.swap(i, rng.next_u32() as usize % (i + 1));
            }
            let t = (0..n).map(|i| (0..n).map(|j| Some(if rank[i] >= rank[j] { i } else { j })).collect()).collect();
            ColorAlgebra::from_table("semilattice", t).unwrap()
        }),
    ]
}

fn small_graph() -> impl Strategy<Value = Multigraph> {
    (1usize..=3).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..=4).prop_map(move |e| Multigraph::new(n, e).unwrap())
    })
}

/// Loopless with minimum degree 2, as blow-ups require: a cycle plus chords.
fn cycle_plus_chords() -> impl Strategy<Value = Multigraph> {
    (2usize..=3).prop_flat_map(|n| {
        prop::collection::vec((0..n, 1..n), 0..=2).prop_map(move |chords| {
            let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            edges.extend(chords.into_iter().map(|(a, d)| (a, (a + d) % n)));
            Multigraph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn color_complexes_square_to_zero(g in small_graph(), a in algebra()) {
        let cc = build_color_complex(&g, &a).unwrap();
        prop_assert!(cc.complex.verify_d_squared().is_ok());
        let chi = homology(&cc.complex).unwrap().total_euler();
        let c = chromatic_poly_dc(&g).eval_integer(&[(LAMBDA, a.size() as i64)]).unwrap();
        prop_assert_eq!(BigInt::from(chi), c);
        if !a.has_zero_products() {
            prop_assert_eq!(cc.dropped_terms, 0);
        }
    }

    #[test]
    fn blowups_count_colorings(g in cycle_plus_chords(), n in 2u64..=3) {
        let m = blowup(&g).unwrap();
        prop_assert_eq!(
            pk_polynomial(&m).unwrap().eval_integer(&[(LAMBDA, n as i64)]).unwrap(),
            BigInt::from(pk_coloring_oracle(&m, n).unwrap())
        );
    }
}

fn reorder(g: &MatchedCubicGraph, order: &[usize]) -> MatchedCubicGraph {
    let mut position = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        position[old] = new;
    }
    MatchedCubicGraph::new(
        g.halfedge_count(),
        g.vertices().iter().map(|v| v.to_vec()).collect(),
        order.iter().map(|&e| g.edges()[e].to_vec()).collect(),
        g.matching().iter().map(|&e| position[e]).collect(),
    )
    .unwrap()
}

#[test]
fn pk_invariant_under_edge_reordering() {
    for g in matched_suite() {
        let pk = pk_polynomial(&g).unwrap();
        let h = homology(&build_pk_complex(&g).unwrap()).unwrap();
        let m = g.edge_count();
        for order in [(0..m).rev().collect::<Vec<_>>(), (1..m).chain([0]).collect()] {
            let r = reorder(&g, &order);
            assert_eq!(pk_polynomial(&r).unwrap(), pk);
            assert_eq!(homology(&build_pk_complex(&r).unwrap()).unwrap(), h);
        }
    }
}

#[test]
fn pk_multiplies_over_disjoint_union() {
    let theta = matched_catalog("theta").unwrap();
    let k4 = matched_catalog("k4").unwrap();
    let u = theta.disjoint_union(&k4);
    assert_eq!(pk_polynomial(&u).unwrap(), &pk_polynomial(&theta).unwrap() * &pk_polynomial(&k4).unwrap());
}

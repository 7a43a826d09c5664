mod common;

use num_bigint::BigInt;
use pineapple::spectra::{
    char_poly, interlacing_check, isolate_roots, quotient_matrix, trace_power,
};
use pineapple::{
    canonical_code, coalesce, decode_graph6, disjoint_union, encode_graph6, isomorphic,
    FactoredPoly, Graph, IntPolynomial,
};
use proptest::prelude::*;

use common::colour_refinement;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn nonempty_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("at least one vertex", |g| g.order() > 0)
}

fn polynomial() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-50i64..=50, 0..8).prop_map(|c| IntPolynomial::from_i64s(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn trace_identities(g in graph(10)) {
        let c = g.counts();
        prop_assert_eq!(trace_power(&g, 2), BigInt::from(2 * c.edges));
        prop_assert_eq!(trace_power(&g, 3), BigInt::from(6 * c.triangles));
        let p = char_poly(&g);
        let n = g.order();
        if n >= 2 {
            prop_assert_eq!(p.coeff(n - 1), BigInt::from(0));
            prop_assert_eq!(p.coeff(n - 2), -BigInt::from(c.edges));
        }
        if n >= 3 {
            prop_assert_eq!(p.coeff(n - 3), -BigInt::from(2 * c.triangles));
        }
    }

    #[test]
    fn union_multiplies_char_polys(g in graph(8), h in graph(8)) {
        let u = disjoint_union(&g, &h).unwrap();
        prop_assert_eq!(char_poly(&u), &char_poly(&g) * &char_poly(&h));
    }

    #[test]
    fn char_poly_is_a_class_invariant(g in graph(10), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(char_poly(&g), char_poly(&h));
        prop_assert_eq!(canonical_code(&g), canonical_code(&h));
    }

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let code = encode_graph6(&g).unwrap();
        prop_assert_eq!(decode_graph6(&code).unwrap(), g);
    }

    #[test]
    fn polynomial_text_round_trip(p in polynomial()) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<IntPolynomial>().unwrap(), p);
    }

    #[test]
    fn factored_text_round_trip(
        factors in prop::collection::vec((polynomial(), 1u32..4), 1..4)
    ) {
        let fp = FactoredPoly::new(factors);
        let back: FactoredPoly = fp.to_string().parse().unwrap();
        prop_assert_eq!(back.expand(), fp.expand());
    }

    #[test]
    fn coalescence_is_symmetric(
        g in nonempty_graph(6), h in nonempty_graph(6), u in 0usize..6, v in 0usize..6
    ) {
        let (u, v) = (u % g.order(), v % h.order());
        let a = coalesce(&g, u, &h, v).unwrap();
        let b = coalesce(&h, v, &g, u).unwrap();
        prop_assert!(isomorphic(&a, &b));
        prop_assert_eq!(a.edge_count(), g.edge_count() + h.edge_count());
    }

    #[test]
    fn isolation_accounts_for_every_root(g in graph(12)) {
        let p = char_poly(&g);
        let iso = isolate_roots(&p).unwrap();
        prop_assert_eq!(iso.total_multiplicity(), g.order());
        for w in iso.intervals.windows(2) {
            prop_assert!(w[0].hi <= w[1].lo);
        }
    }

    #[test]
    fn induced_subgraphs_interlace(g in nonempty_graph(10), mask in any::<u32>()) {
        let subset: Vec<usize> = (0..g.order()).filter(|&v| mask >> v & 1 == 1).collect();
        prop_assert!(interlacing_check(&g, &subset).unwrap());
    }

    #[test]
    fn equitable_quotients_divide(g in graph(10)) {
        let cells = colour_refinement(&g);
        let q = quotient_matrix(&g, &cells).unwrap();
        let p = char_poly(&g);
        let (quot, rem) = p.div_rem(&q.char_poly).unwrap();
        prop_assert!(rem.is_zero());
        prop_assert_eq!(quot, q.cofactor);
    }
}

//! Randomized checks of the structural identities on small graphs.

use chroma_core::complex::{build_complex_with, nontruncated_h_vector, nontruncated_h_vector_direct};
use chroma_core::cuts::{w_polynomial_with, CutRule};
use chroma_core::graph::{
    chromatic_polynomial, count_acyclic_orientations, count_colorings, encode_graph6, parse_graph6,
};
use chroma_core::ideal::{contains_by_divisibility, contains_monomial, decode_monomial, encode_coloring, Monomial};
use chroma_core::poly_lab::w_transform;
use chroma_core::{Coloring, Config, Graph, VertexSet};
use num_bigint::BigInt;
use proptest::prelude::*;

fn graph(dmin: usize, dmax: usize) -> impl Strategy<Value = Graph> {
    (dmin..=dmax).prop_flat_map(|d| {
        let pairs: Vec<(usize, usize)> =
            (1..=d).flat_map(|i| (i + 1..=d).map(move |j| (i, j))).collect();
        let n = pairs.len();
        prop::collection::vec(any::<bool>(), n).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e);
            Graph::new(d, edges).unwrap()
        })
    })
}

fn permutation(d: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=d).collect::<Vec<_>>()).prop_shuffle()
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

// A random multichain: nested sets drawn by adding vertices in a random order.
fn monomial(d: usize) -> impl Strategy<Value = Monomial> {
    (permutation(d), prop::collection::vec((0..=d, 1u32..=2), 0..4)).prop_map(move |(order, picks)| {
        let factors = picks.into_iter().map(|(k, e)| (VertexSet::from_vertices(order[..k].iter().copied()), e));
        Monomial::new(d, factors).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn w_polynomial_is_transform_of_chi(g in graph(1, 6)) {
        let w = w_polynomial_with(&g, CutRule::Standard, &Config::default()).unwrap();
        let expected = w_transform(&chromatic_polynomial(&g), g.d() + 1).unwrap();
        prop_assert_eq!(w.as_poly(), &expected);
    }

    #[test]
    fn sequential_and_parallel_agree(g in graph(3, 6)) {
        let par = w_polynomial_with(&g, CutRule::Standard, &Config::default()).unwrap();
        let seq = w_polynomial_with(&g, CutRule::Standard, &Config::sequential()).unwrap();
        prop_assert_eq!(par, seq);
        let a = build_complex_with(&g, &Config::default()).unwrap();
        let b = build_complex_with(&g, &Config::sequential()).unwrap();
        prop_assert_eq!(a.facets(), b.facets());
    }

    #[test]
    fn relabelling_preserves_invariants((g, sigma) in graph(3, 6).prop_flat_map(|g| { let d = g.d(); (Just(g), permutation(d)) })) {
        let h = g.relabel(&sigma).unwrap();
        prop_assert_eq!(chromatic_polynomial(&g), chromatic_polynomial(&h));
        let cfg = Config::default();
        prop_assert_eq!(build_complex_with(&g, &cfg).unwrap().h_vector(), build_complex_with(&h, &cfg).unwrap().h_vector());
    }

    #[test]
    fn graph6_round_trip(g in graph(1, 9)) {
        prop_assert_eq!(parse_graph6(&encode_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn chi_counts_colorings(g in graph(1, 5), n in 0u64..4) {
        prop_assert_eq!(chromatic_polynomial(&g).eval_i64(n as i64), count_colorings(&g, n).unwrap());
    }

    #[test]
    fn complex_counts(g in graph(3, 6)) {
        let c = build_complex_with(&g, &Config::default()).unwrap();
        prop_assert_eq!(c.facets().len(), g.edge_count() * (1..g.d()).product::<usize>());
        if g.edge_count() > 0 {
            let h = c.h_vector();
            let ao = count_acyclic_orientations(&g).count;
            prop_assert_eq!(&h.0[g.d() - 2], &(ao - 1));
            let total: BigInt = h.0.iter().sum();
            prop_assert_eq!(total, BigInt::from(c.facets().len()));
        }
    }

    #[test]
    fn nontruncated_h_vector_matches_direct_build(g in graph(3, 5)) {
        prop_assert_eq!(nontruncated_h_vector(&g).unwrap(), nontruncated_h_vector_direct(&g).unwrap());
        let total: BigInt = nontruncated_h_vector(&g).unwrap().0.iter().sum();
        prop_assert_eq!(total, factorial(g.d()) + BigInt::from(g.edge_count()) * factorial(g.d() - 1));
    }

    #[test]
    fn membership_paths_agree((g, m) in graph(3, 6).prop_flat_map(|g| { let d = g.d(); (Just(g), monomial(d)) })) {
        prop_assert_eq!(contains_monomial(&g, &m).unwrap(), contains_by_divisibility(&g, &m).unwrap());
    }

    #[test]
    fn codec_round_trip((g, colors, extra) in graph(2, 6).prop_flat_map(|g| {
        let d = g.d();
        (Just(g), prop::collection::vec(1u32..=4, d), 0u32..3)
    })) {
        let palette = colors.iter().copied().max().unwrap() + extra;
        let c = Coloring::new(palette, colors).unwrap();
        prop_assume!(c.is_proper(&g));
        let m = encode_coloring(&g, &c).unwrap();
        prop_assert_eq!(m.degree(), palette as usize - 1);
        prop_assert!(contains_monomial(&g, &m).unwrap());
        prop_assert_eq!(decode_monomial(&g, &m).unwrap(), c);
    }
}

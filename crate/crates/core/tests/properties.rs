use proptest::prelude::*;

use dihedrants::analysis::triple_equivalent;
use dihedrants::constructions::{bicayley, cayley, BiCayleyTriple, CayleySet};
use dihedrants::graphs::are_isomorphic;
use dihedrants::groups::{enumerate_automorphisms, Elem, FcGroup};
use dihedrants::parse::GraphSpec;
use dihedrants::perms::Permutation;

fn any_group() -> impl Strategy<Value = FcGroup> {
    prop_oneof![
        (3u32..=12).prop_map(|n| FcGroup::dihedral(n).unwrap()),
        (1u32..=4).prop_map(|m| FcGroup::mcl(m).unwrap()),
        (2u32..=12).prop_map(FcGroup::Cyclic),
        (2u32..=8).prop_map(FcGroup::CyclicByTwo),
    ]
}

fn group_and_elems(k: usize) -> impl Strategy<Value = (FcGroup, Vec<Elem>)> {
    any_group().prop_flat_map(move |g| {
        let n = g.order();
        (Just(g), proptest::collection::vec(0..n, k))
            .prop_map(|(g, idx)| (g, idx.into_iter().map(|i| g.element(i)).collect()))
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

/// Inverse-closed sets grown from random seeds, with a random `S` containing `1`.
fn dihedral_triple() -> impl Strategy<Value = BiCayleyTriple> {
    (3u32..=9).prop_flat_map(|n| {
        let g = FcGroup::dihedral(n).unwrap();
        let m = g.order();
        (
            Just(g),
            proptest::collection::vec(1..m, 1..3),
            proptest::collection::vec(1..m, 1..3),
            proptest::collection::vec(0..m, 0..2),
        )
            .prop_map(|(g, r, l, s)| {
                let close = |v: Vec<usize>| {
                    let mut out: Vec<Elem> = v
                        .into_iter()
                        .flat_map(|i| [g.element(i), g.inv(g.element(i))])
                        .collect();
                    out.sort();
                    out.dedup();
                    out
                };
                let mut s: Vec<Elem> = s.into_iter().map(|i| g.element(i)).collect();
                s.push(g.identity());
                BiCayleyTriple::new(g, &close(r), &close(l), &s).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_axioms((g, e) in group_and_elems(3)) {
        let (x, y, z) = (e[0], e[1], e[2]);
        prop_assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
        prop_assert_eq!(g.mul(x, g.identity()), x);
        prop_assert_eq!(g.mul(g.identity(), x), x);
        prop_assert_eq!(g.mul(x, g.inv(x)), g.identity());
        prop_assert_eq!(g.pow(x, g.elem_order(x) as i64), g.identity());
        prop_assert_eq!(g.element(g.index(x)), x);
        prop_assert_eq!(g.parse_elem(&g.format_elem(x)).unwrap(), x);
    }

    #[test]
    fn automorphisms_are_homomorphisms((g, e) in group_and_elems(2), pick in any::<prop::sample::Index>()) {
        let auts = enumerate_automorphisms(&g).unwrap();
        let alpha = pick.get(&auts);
        prop_assert_eq!(alpha.apply(g.mul(e[0], e[1])), g.mul(alpha.apply(e[0]), alpha.apply(e[1])));
    }

    #[test]
    fn permutation_composition(p in permutation(9), q in permutation(9), r in permutation(9)) {
        prop_assert_eq!(p.then(&q).then(&r), p.then(&q.then(&r)));
        prop_assert!(p.then(&p.inverse()).is_identity());
        for x in 0..9 {
            prop_assert_eq!(p.then(&q).apply(x), q.apply(p.apply(x)));
        }
        prop_assert!(p.pow(p.order() as i64).is_identity());
        prop_assert_eq!(p.conjugate_by(&q), q.inverse().then(&p).then(&q));
    }

    #[test]
    fn cayley_connected_iff_generating((g, e) in group_and_elems(3)) {
        let mut set: Vec<Elem> = e.iter().flat_map(|&x| [x, g.inv(x)]).filter(|&x| x != g.identity()).collect();
        set.sort();
        set.dedup();
        prop_assume!(!set.is_empty());
        let cs = CayleySet::new(g, &set).unwrap();
        prop_assert_eq!(cayley(&cs).is_connected(), g.generates(&set));
    }

    #[test]
    fn equivalent_triples_give_isomorphic_graphs(t in dihedral_triple(), pick in any::<prop::sample::Index>(), swap in any::<bool>()) {
        let g = t.group;
        let auts = enumerate_automorphisms(&g).unwrap();
        let alpha = pick.get(&auts);
        let image = t.map(|x| alpha.apply(x));
        let image = if swap { image.swapped() } else { image };
        prop_assert!(triple_equivalent(&t, &image).unwrap().is_some());
        prop_assert!(are_isomorphic(&bicayley(&t), &bicayley(&image)).unwrap().is_some());
    }

    #[test]
    fn bicayley_graphs_are_regular_on_each_side(t in dihedral_triple()) {
        let gr = bicayley(&t);
        let half = t.group.order() as u32;
        for v in 0..half {
            prop_assert_eq!(gr.degree(v), t.r().len() + t.s().len());
            prop_assert_eq!(gr.degree(half + v), t.l().len() + t.s().len());
        }
    }

    #[test]
    fn spec_round_trip(t in dihedral_triple()) {
        let spec = GraphSpec::BiCayley(t.clone());
        let back: GraphSpec = spec.to_string().parse().unwrap();
        prop_assert_eq!(back, spec);
    }
}

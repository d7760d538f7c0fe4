//! Property tests for the algebraic laws: canonical-form invariance,
//! bialgebra axioms on randomly chosen oriented classes, sequence-algebra
//! laws, and norm monotonicity.

use hopfflow::graph::canon::{automorphism_count, canonical_form};
use hopfflow::graph::enumerate::{enumerate_graphs, orientations, EnumerationOptions};
use hopfflow::graph::{
    CombinatorialGraph, DecoratedGraph, Decoration, FlagId, FlagLabel, Orient, VertexId,
};
use hopfflow::hopf::{Family, HopfElement};
use hopfflow::seq::{SeqProduct, SummationOp, TruncatedSequence};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

#[derive(Clone, Debug)]
struct RandomGraph {
    dg: DecoratedGraph,
}

/// Random decorated graph: a list of edges between `n` vertices, a list
/// of tails, random orientations and labels. Valid by construction.
fn random_graph_strategy() -> impl Strategy<Value = RandomGraph> {
    let labels = prop_oneof![Just(None), Just(Some("x")), Just(Some("y"))];
    (1usize..4)
        .prop_flat_map(move |n| {
            let edge = (0..n, 0..n, labels.clone(), labels.clone(), any::<bool>());
            let tail = (0..n, labels.clone(), any::<bool>());
            (
                Just(n),
                prop::collection::vec(edge, 0..4),
                prop::collection::vec(tail, 0..3),
            )
        })
        .prop_map(|(n, edges, tails)| {
            let mut g = CombinatorialGraph::empty();
            let mut d = Decoration::empty();
            let vid = |i: usize| VertexId(format!("v{i}"));
            for i in 0..n {
                g.extend_vertex(vid(i), &[]);
            }
            for (k, (a, b, la, lb, flip)) in edges.into_iter().enumerate() {
                let fa = FlagId(format!("e{k}.0"));
                let fb = FlagId(format!("e{k}.1"));
                g.extend_vertex(vid(a), std::slice::from_ref(&fa));
                g.extend_vertex(vid(b), std::slice::from_ref(&fb));
                g.join(&fa, &fb);
                let (oa, ob) = if flip {
                    (Orient::In, Orient::Out)
                } else {
                    (Orient::Out, Orient::In)
                };
                d.flag_labels.insert(
                    fa,
                    FlagLabel {
                        orient: Some(oa),
                        label: la.map(str::to_owned),
                    },
                );
                d.flag_labels.insert(
                    fb,
                    FlagLabel {
                        orient: Some(ob),
                        label: lb.map(str::to_owned),
                    },
                );
            }
            for (k, (a, l, orient_in)) in tails.into_iter().enumerate() {
                let t = FlagId(format!("t{k}"));
                g.extend_vertex(vid(a), std::slice::from_ref(&t));
                d.flag_labels.insert(
                    t,
                    FlagLabel {
                        orient: Some(if orient_in { Orient::In } else { Orient::Out }),
                        label: l.map(str::to_owned),
                    },
                );
            }
            // drop vertices that stayed isolated
            let keep: std::collections::BTreeSet<VertexId> = g
                .flags()
                .map(|f| g.boundary_of(f).clone())
                .collect();
            let dg = DecoratedGraph::new(g, d).restrict(&keep);
            RandomGraph { dg }
        })
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..20, 1i64..9)
        .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn exact_seq(len: usize) -> impl Strategy<Value = TruncatedSequence> {
    prop::collection::vec(rational(), len..=len).prop_map(TruncatedSequence::exact)
}

proptest! {
    #[test]
    fn canonical_form_is_relabeling_invariant(rg in random_graph_strategy(), prefix in "[a-z]{1,4}") {
        let dg = rg.dg;
        prop_assert!(dg.validate().is_empty());
        let renamed = dg.prefixed(&format!("{prefix}."));
        prop_assert_eq!(canonical_form(&dg), canonical_form(&renamed));
        prop_assert_eq!(automorphism_count(&dg), automorphism_count(&renamed));
    }

    #[test]
    fn union_canonical_form_commutes(a in random_graph_strategy(), b in random_graph_strategy()) {
        let ab = hopfflow::graph::disjoint_union(&a.dg, &b.dg);
        let ba = hopfflow::graph::disjoint_union(&b.dg, &a.dg);
        prop_assert_eq!(canonical_form(&ab), canonical_form(&ba));
    }

    #[test]
    fn coproduct_laws_on_random_oriented_classes(class in 0usize..64, orientation in 0usize..16) {
        // pick a tail-free class with ≤ 3 edges and one of its orientations
        let classes = enumerate_graphs(&EnumerationOptions::new(3)).unwrap();
        let g = classes[class % classes.len()].clone();
        let oriented = orientations(&g);
        let dg = oriented[orientation % oriented.len()].clone();
        let fam = Family::all_oriented();
        let x = HopfElement::basis(fam.clone(), &dg).unwrap();
        // counit laws
        let d = x.coproduct().unwrap();
        prop_assert_eq!(d.counit_left().unwrap(), x.clone());
        prop_assert_eq!(d.counit_right().unwrap(), x.clone());
        // coassociativity
        prop_assert_eq!(d.coproduct_left().unwrap(), d.coproduct_right().unwrap());
    }

    #[test]
    fn coproduct_is_multiplicative_on_random_pairs(ca in 0usize..32, oa in 0usize..8, cb in 0usize..32, ob in 0usize..8) {
        let classes = enumerate_graphs(&EnumerationOptions::new(2)).unwrap();
        let ga = classes[ca % classes.len()].clone();
        let gb = classes[cb % classes.len()].clone();
        let da = orientations(&ga);
        let db = orientations(&gb);
        let fam = Family::all_oriented();
        let x = HopfElement::basis(fam.clone(), &da[oa % da.len()]).unwrap();
        let y = HopfElement::basis(fam, &db[ob % db.len()]).unwrap();
        let lhs = x.product(&y).unwrap().coproduct().unwrap();
        let rhs = x.coproduct().unwrap().product(&y.coproduct().unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sequence_products_commute_and_associate(
        f in exact_seq(9),
        g in exact_seq(9),
        h in exact_seq(9),
    ) {
        for mode in [SeqProduct::Pointwise, SeqProduct::MaxConv, SeqProduct::Cauchy] {
            prop_assert_eq!(f.product(&g, mode).unwrap(), g.product(&f, mode).unwrap());
            prop_assert_eq!(
                f.product(&g, mode).unwrap().product(&h, mode).unwrap(),
                f.product(&g.product(&h, mode).unwrap(), mode).unwrap()
            );
        }
    }

    #[test]
    fn summation_is_an_algebra_isomorphism(f in exact_seq(9), g in exact_seq(9)) {
        prop_assert_eq!(
            f.product(&g, SeqProduct::MaxConv).unwrap().partial_sum(),
            f.partial_sum().product(&g.partial_sum(), SeqProduct::Pointwise).unwrap()
        );
    }

    #[test]
    fn summation_rota_baxter_weight_minus_one(f in exact_seq(8), g in exact_seq(8)) {
        let report = hopfflow::seq::summation_rb_report(&f, &g, SummationOp::Inclusive, -1).unwrap();
        prop_assert!(report.passed());
    }

    #[test]
    fn levin_norm_is_monotone(pairs in prop::collection::vec((0i64..30, 0i64..10), 1..10)) {
        use hopfflow::seq::norm::levin_norm;
        let f = TruncatedSequence::exact(
            pairs.iter().map(|(a, _)| BigRational::from_integer(BigInt::from(*a))),
        );
        let g = TruncatedSequence::exact(
            pairs.iter().map(|(a, b)| BigRational::from_integer(BigInt::from(a + b))),
        );
        prop_assert!(levin_norm(&f).unwrap() <= levin_norm(&g).unwrap());
    }

    #[test]
    fn wick_moments_are_permutation_invariant(indices in prop::collection::vec(0usize..2, 0..7), rot in 0usize..6) {
        use hopfflow::feynman::{series::wick_sum, Model};
        use hopfflow::ratio::int;
        let model = Model::new(
            vec!["a".into(), "b".into()],
            vec![vec![int(2), int(1)], vec![int(1), int(3)]],
            vec![],
        ).unwrap();
        let mut rotated = indices.clone();
        if !rotated.is_empty() {
            let k = rot % rotated.len();
            rotated.rotate_left(k);
        }
        prop_assert_eq!(wick_sum(&indices, &model), wick_sum(&rotated, &model));
        let mut sorted = indices.clone();
        sorted.sort_unstable();
        prop_assert_eq!(wick_sum(&indices, &model), wick_sum(&sorted, &model));
    }
}

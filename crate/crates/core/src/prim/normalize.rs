//! Localized normal form of a flowchart.
//!
//! Every edge whose two endpoint vertices carry the same operator `c`
//! (respectively `b`) is contracted: the child's ordered inputs are
//! spliced into the parent's input list at the child's position. The
//! contractions are confluent — flattening nested composition and
//! bracketing lists — so the result is a unique representative, and
//! evaluation is unchanged because composition and juxtaposition are
//! associative.

use super::{Flowchart, OpKind, PrimError};
use crate::graph::Orient;

pub fn normalize(chart: &Flowchart) -> Result<Flowchart, PrimError> {
    let mut chart = chart.clone().validated()?;
    loop {
        let orient = chart.derive_orientation()?;
        let target = chart.graph.edges().into_iter().find_map(|(f, p)| {
            // in-half sits at the parent (closer to the root)
            let (in_half, out_half) = if orient[&f] == Orient::In { (f, p) } else { (p, f) };
            let parent = chart.graph.boundary_of(&in_half).clone();
            let child = chart.graph.boundary_of(&out_half).clone();
            let op = chart.ops[&parent];
            (op == chart.ops[&child] && op != OpKind::Recurse)
                .then_some((in_half, out_half, parent, child))
        });
        let Some((in_half, out_half, parent, child)) = target else {
            break;
        };
        let child_inputs = chart.input_order.remove(&child).expect("validated chart");
        for f in &child_inputs {
            chart.graph.rehome_flag(f, parent.clone());
        }
        let order = chart.input_order.get_mut(&parent).expect("validated chart");
        let pos = order
            .iter()
            .position(|x| *x == in_half)
            .expect("in-half is a parent input");
        order.splice(pos..=pos, child_inputs);
        chart.graph.remove_flag(&in_half);
        chart.graph.remove_flag(&out_half);
        chart.graph.remove_vertex(&child);
        chart.ops.remove(&child);
        chart.arity.remove(&in_half);
        chart.arity.remove(&out_half);
    }
    chart.validated()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prim::charts::*;
    use crate::prim::eval::{compose_programs, evaluate, Budget};
    use crate::prim::BasicFunction;

    fn eval(chart: &Flowchart, args: &[u64]) -> Vec<u64> {
        evaluate(chart, args, &mut Budget::default()).unwrap()
    }

    #[test]
    fn iterated_compositions_reach_the_same_normal_form() {
        let s = successor_chart;
        // one three-input corolla vs the two bracketings
        let all_at_once = compose_programs(&[s(), s(), s()]).unwrap();
        let left = compose_programs(&[compose_programs(&[s(), s()]).unwrap(), s()]).unwrap();
        let right = compose_programs(&[s(), compose_programs(&[s(), s()]).unwrap()]).unwrap();
        let keys: Vec<_> = [&all_at_once, &left, &right]
            .iter()
            .map(|c| normalize(c).unwrap().canonical_form().unwrap())
            .collect();
        assert_eq!(keys[0], keys[1]);
        assert_eq!(keys[0], keys[2]);
        // as decorated trees they differ before localization
        assert_ne!(
            left.canonical_form().unwrap(),
            right.canonical_form().unwrap()
        );
        for chart in [&all_at_once, &left, &right] {
            assert_eq!(eval(chart, &[1]), vec![4]);
            assert_eq!(eval(&normalize(chart).unwrap(), &[1]), vec![4]);
        }
    }

    #[test]
    fn normalize_is_idempotent() {
        let chart = compose_programs(&[
            successor_chart(),
            compose_programs(&[successor_chart(), successor_chart()]).unwrap(),
        ])
        .unwrap();
        let once = normalize(&chart).unwrap();
        let twice = normalize(&once).unwrap();
        assert_eq!(
            once.canonical_form().unwrap(),
            twice.canonical_form().unwrap()
        );
    }

    #[test]
    fn chart_without_matching_pairs_is_unchanged() {
        let add = addition_chart(); // r over c: nothing to contract
        let n = normalize(&add).unwrap();
        assert_eq!(add.canonical_form().unwrap(), n.canonical_form().unwrap());
    }

    #[test]
    fn normalization_preserves_evaluation_on_a_grid() {
        let mult = multiplication_chart();
        let n = normalize(&mult).unwrap();
        for x in 1..=6 {
            for k in 1..=6 {
                assert_eq!(eval(&mult, &[x, k]), eval(&n, &[x, k]));
            }
        }
    }

    #[test]
    fn nested_brackets_flatten() {
        use crate::graph::{CombinatorialGraph, FlagId, VertexId};
        // outer b(pr¹₁, inner), inner = b(pr¹₁, pr¹₁): x ↦ (x, x, x)
        let pr = || BasicFunction::Proj { i: 1, n: 1 };
        let outer = VertexId::from("o");
        let inner = VertexId::from("i");
        let mut graph = CombinatorialGraph::empty();
        graph.extend_vertex(outer.clone(), &["o.a", "o.b", "o.out"].map(FlagId::from));
        graph.extend_vertex(inner.clone(), &["i.a", "i.b", "i.out"].map(FlagId::from));
        graph.join(&"o.b".into(), &"i.out".into());
        let chart = Flowchart {
            graph,
            roots: vec!["o.out".into()],
            input_order: [
                (outer.clone(), vec!["o.a".into(), "o.b".into()]),
                (inner.clone(), vec!["i.a".into(), "i.b".into()]),
            ]
            .into_iter()
            .collect(),
            arity: [
                (FlagId::from("o.a"), (1, 1)),
                (FlagId::from("o.b"), (1, 2)),
                (FlagId::from("o.out"), (1, 3)),
                (FlagId::from("i.a"), (1, 1)),
                (FlagId::from("i.b"), (1, 1)),
                (FlagId::from("i.out"), (1, 2)),
            ]
            .into_iter()
            .collect(),
            ops: [(outer, OpKind::Bracket), (inner, OpKind::Bracket)]
                .into_iter()
                .collect(),
            basics: [
                (FlagId::from("o.a"), pr()),
                (FlagId::from("i.a"), pr()),
                (FlagId::from("i.b"), pr()),
            ]
            .into_iter()
            .collect(),
        }
        .validated()
        .unwrap();
        let flat = normalize(&chart).unwrap();
        assert_eq!(flat.graph.vertex_count(), 1);
        for x in 1..=5 {
            assert_eq!(eval(&chart, &[x]), vec![x, x, x]);
            assert_eq!(eval(&flat, &[x]), vec![x, x, x]);
        }
    }
}

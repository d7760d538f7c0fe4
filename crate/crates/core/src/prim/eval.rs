//! Evaluation of flowcharts and grafting composition.
//!
//! A vertex computes from its ordered inputs: a `c` vertex feeds the
//! argument tuple through its inputs left to right, a `b` vertex applies
//! every input to the same tuple and concatenates, and an `r` vertex with
//! inputs f₁, f₂ computes g with g(x, 1) = f₁(x) and
//! g(x, k+1) = f₂(x, g(x, k)). Arguments live in ℤ⁺; a step budget
//! guards evaluation, so malformed inputs fail instead of spinning.

use super::{Arity, BasicFunction, Flowchart, OpKind, PrimError};
use crate::graph::{FlagId, Orient, VertexId};
use std::collections::BTreeMap;
use std::sync::Arc;

pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug)]
pub struct Budget {
    steps_left: u64,
}

impl Budget {
    pub fn new(steps: u64) -> Self {
        Budget { steps_left: steps }
    }

    fn charge(&mut self) -> Result<(), PrimError> {
        if self.steps_left == 0 {
            return Err(PrimError::StepBudgetExceeded);
        }
        self.steps_left -= 1;
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_STEP_BUDGET)
    }
}

/// A function usable as a flowchart input: a basic function, a finite
/// table, or a native callable.
#[derive(Clone)]
#[allow(clippy::type_complexity)]
pub enum InputFn {
    Basic(BasicFunction),
    Table {
        arity: u32,
        coarity: u32,
        map: BTreeMap<Vec<u64>, Vec<u64>>,
    },
    Native {
        arity: u32,
        coarity: u32,
        f: Arc<dyn Fn(&[u64]) -> Result<Vec<u64>, PrimError> + Send + Sync>,
    },
}

impl std::fmt::Debug for InputFn {
    fn fmt(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
        match self {
            InputFn::Basic(b) => write!(f, "Basic({})", b.describe()),
            InputFn::Table { arity, coarity, map } => {
                write!(f, "Table({arity}→{coarity}, {} rows)", map.len())
            }
            InputFn::Native { arity, coarity, .. } => write!(f, "Native({arity}→{coarity})"),
        }
    }
}

impl InputFn {
    pub fn arity(&self) -> Arity {
        match self {
            InputFn::Basic(b) => (b.arity(), b.coarity()),
            InputFn::Table { arity, coarity, .. } | InputFn::Native { arity, coarity, .. } => {
                (*arity, *coarity)
            }
        }
    }

    pub fn call(&self, args: &[u64], budget: &mut Budget) -> Result<Vec<u64>, PrimError> {
        budget.charge()?;
        if args.len() != self.arity().0 as usize {
            return Err(PrimError::ArityMismatch(format!(
                "{self:?} applied to {} arguments",
                args.len()
            )));
        }
        if args.contains(&0) {
            return Err(PrimError::ValueOutOfRange);
        }
        let out = match self {
            InputFn::Basic(BasicFunction::Succ) => {
                vec![args[0].checked_add(1).ok_or(PrimError::ValueOutOfRange)?]
            }
            InputFn::Basic(BasicFunction::Proj { i, .. }) => vec![args[*i as usize - 1]],
            InputFn::Basic(BasicFunction::Const { k, .. }) => vec![*k],
            InputFn::Table { map, .. } => map
                .get(args)
                .cloned()
                .ok_or_else(|| PrimError::TableMiss(args.to_vec()))?,
            InputFn::Native { f, .. } => f(args)?,
        };
        if out.len() != self.arity().1 as usize || out.contains(&0) {
            return Err(PrimError::ValueOutOfRange);
        }
        Ok(out)
    }
}

/// An open flowchart applied to a family of input functions; call it on
/// argument tuples of the chart's total arity.
pub struct AppliedProgram {
    chart: Flowchart,
    inputs: BTreeMap<FlagId, InputFn>,
    orient: BTreeMap<FlagId, Orient>,
}

enum Source {
    Tail(FlagId),
    Child(VertexId),
}

impl AppliedProgram {
    pub fn arity(&self) -> Arity {
        self.chart.total_arity().expect("validated chart")
    }

    pub fn call(&self, args: &[u64], budget: &mut Budget) -> Result<Vec<u64>, PrimError> {
        if args.contains(&0) {
            return Err(PrimError::ValueOutOfRange);
        }
        let (total_a, _) = self.arity();
        if args.len() != total_a as usize {
            return Err(PrimError::ArityMismatch(format!(
                "chart of arity {total_a} applied to {} arguments",
                args.len()
            )));
        }
        // components consume consecutive argument blocks in root order
        let mut out = Vec::new();
        let mut offset = 0usize;
        for root in &self.chart.roots {
            let (a, _) = self.chart.arity[root];
            let block = &args[offset..offset + a as usize];
            offset += a as usize;
            let root_vertex = self.chart.graph.boundary_of(root).clone();
            out.extend(self.eval_vertex(&root_vertex, block, budget)?);
        }
        Ok(out)
    }

    fn source_of(&self, f: &FlagId) -> Source {
        let p = self.chart.graph.partner(f);
        if p == f {
            Source::Tail(f.clone())
        } else {
            Source::Child(self.chart.graph.boundary_of(p).clone())
        }
    }

    fn apply_source(
        &self,
        src: &Source,
        args: &[u64],
        budget: &mut Budget,
    ) -> Result<Vec<u64>, PrimError> {
        match src {
            Source::Tail(t) => self.inputs[t].call(args, budget),
            Source::Child(w) => self.eval_vertex(w, args, budget),
        }
    }

    fn eval_vertex(&self, v: &VertexId, args: &[u64], budget: &mut Budget) -> Result<Vec<u64>, PrimError> {
        budget.charge()?;
        let order = &self.chart.input_order[v];
        let sources: Vec<Source> = order.iter().map(|f| self.source_of(f)).collect();
        match self.chart.ops[v] {
            OpKind::Compose => {
                let mut y = args.to_vec();
                for src in &sources {
                    y = self.apply_source(src, &y, budget)?;
                }
                Ok(y)
            }
            OpKind::Bracket => {
                let mut y = Vec::new();
                for src in &sources {
                    y.extend(self.apply_source(src, args, budget)?);
                }
                Ok(y)
            }
            OpKind::Recurse => {
                let (a, _c) = self.chart.arity[&order[0]];
                let x = &args[..a as usize];
                let k = args[a as usize];
                let mut acc = self.apply_source(&sources[0], x, budget)?;
                for _ in 2..=k {
                    let mut step_args = x.to_vec();
                    step_args.extend_from_slice(&acc);
                    acc = self.apply_source(&sources[1], &step_args, budget)?;
                }
                Ok(acc)
            }
        }
    }

    /// The derived orientation used for this program.
    pub fn orientation(&self) -> &BTreeMap<FlagId, Orient> {
        &self.orient
    }
}

/// Bind input functions onto the global inputs of an open flowchart.
pub fn op_apply(
    chart: &Flowchart,
    inputs: &BTreeMap<FlagId, InputFn>,
) -> Result<AppliedProgram, PrimError> {
    let chart = chart.clone().validated()?;
    let orient = chart.derive_orientation()?;
    for t in chart.global_inputs()? {
        let f = inputs.get(&t).ok_or_else(|| PrimError::MissingInput(t.clone()))?;
        if f.arity() != chart.arity[&t] {
            return Err(PrimError::ArityMismatch(format!(
                "input {t} expects {:?} but was given {:?}",
                chart.arity[&t],
                f.arity()
            )));
        }
    }
    Ok(AppliedProgram {
        inputs: inputs.clone(),
        chart,
        orient,
    })
}

/// Evaluate a closed flowchart (all global inputs decorated with basic
/// functions) on an argument tuple.
pub fn evaluate(chart: &Flowchart, args: &[u64], budget: &mut Budget) -> Result<Vec<u64>, PrimError> {
    let mut inputs = BTreeMap::new();
    for t in chart.global_inputs()? {
        let b = chart
            .basics
            .get(&t)
            .ok_or_else(|| PrimError::OpenInput(t.clone()))?;
        inputs.insert(t, InputFn::Basic(b.clone()));
    }
    op_apply(chart, &inputs)?.call(args, budget)
}

/// Graft a fresh composition corolla onto the roots of the parts:
/// `compose_programs([t1, .., tr])` evaluates as the function of `tr`
/// after … after `t1`. Part i must be connected with coarity equal to
/// the arity of part i+1.
pub fn compose_programs(parts: &[Flowchart]) -> Result<Flowchart, PrimError> {
    if parts.is_empty() {
        return Err(PrimError::ComposeMismatch("no parts".into()));
    }
    let mut relabeled = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        let p = p.clone().validated()?;
        if p.roots.len() != 1 {
            return Err(PrimError::NotConnected);
        }
        relabeled.push(p.prefixed(&format!("p{i}.")));
    }
    for w in relabeled.windows(2) {
        let (_, c_prev) = w[0].arity[&w[0].roots[0]];
        let (a_next, _) = w[1].arity[&w[1].roots[0]];
        if c_prev != a_next {
            return Err(PrimError::ComposeMismatch(format!(
                "coarity {c_prev} feeding arity {a_next}"
            )));
        }
    }
    let mut graph = relabeled[0].graph.clone();
    let mut arity = relabeled[0].arity.clone();
    let mut ops = relabeled[0].ops.clone();
    let mut input_order = relabeled[0].input_order.clone();
    let mut basics = relabeled[0].basics.clone();
    for p in &relabeled[1..] {
        graph.merge_disjoint(&p.graph);
        arity.extend(p.arity.clone());
        ops.extend(p.ops.clone());
        input_order.extend(p.input_order.clone());
        basics.extend(p.basics.clone());
    }
    let hub = VertexId::from("comp");
    let mut hub_inputs = Vec::new();
    for (i, p) in relabeled.iter().enumerate() {
        let pin = FlagId(format!("comp.in{i}"));
        graph.extend_vertex(hub.clone(), std::slice::from_ref(&pin));
        graph.join(&pin, &p.roots[0]);
        arity.insert(pin.clone(), p.arity[&p.roots[0]]);
        hub_inputs.push(pin);
    }
    let out = FlagId::from("comp.out");
    graph.extend_vertex(hub.clone(), std::slice::from_ref(&out));
    let first = &relabeled[0];
    let last = &relabeled[relabeled.len() - 1];
    arity.insert(
        out.clone(),
        (first.arity[&first.roots[0]].0, last.arity[&last.roots[0]].1),
    );
    ops.insert(hub.clone(), OpKind::Compose);
    input_order.insert(hub, hub_inputs);
    Flowchart {
        graph,
        roots: vec![out],
        input_order,
        arity,
        ops,
        basics,
    }
    .validated()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prim::charts::*;

    fn eval(chart: &Flowchart, args: &[u64]) -> Vec<u64> {
        evaluate(chart, args, &mut Budget::default()).unwrap()
    }

    #[test]
    fn successor_chart_wraps_successor() {
        assert_eq!(eval(&successor_chart(), &[7]), vec![8]);
    }

    #[test]
    fn composition_corolla_composes() {
        let chart = chain_of_basics(&[BasicFunction::Succ, BasicFunction::Succ]);
        assert_eq!(eval(&chart, &[3]), vec![5]);
    }

    #[test]
    fn bracket_corolla_duplicates() {
        // b-corolla on (pr¹₁, pr¹₁): x ↦ (x, x)
        let v = VertexId::from("v");
        let graph = crate::graph::CombinatorialGraph::new(
            ["i0", "i1", "o"].map(FlagId::from),
            [v.clone()],
            [
                ("i0".into(), v.clone()),
                ("i1".into(), v.clone()),
                ("o".into(), v.clone()),
            ],
            [
                ("i0".into(), "i0".into()),
                ("i1".into(), "i1".into()),
                ("o".into(), "o".into()),
            ],
        );
        let chart = Flowchart {
            graph,
            roots: vec!["o".into()],
            input_order: [(v.clone(), vec!["i0".into(), "i1".into()])]
                .into_iter()
                .collect(),
            arity: [
                (FlagId::from("i0"), (1, 1)),
                (FlagId::from("i1"), (1, 1)),
                (FlagId::from("o"), (1, 2)),
            ]
            .into_iter()
            .collect(),
            ops: [(v, OpKind::Bracket)].into_iter().collect(),
            basics: [
                (FlagId::from("i0"), BasicFunction::Proj { i: 1, n: 1 }),
                (FlagId::from("i1"), BasicFunction::Proj { i: 1, n: 1 }),
            ]
            .into_iter()
            .collect(),
        }
        .validated()
        .unwrap();
        assert_eq!(eval(&chart, &[4]), vec![4, 4]);
    }

    #[test]
    fn recursion_corolla_unfolds() {
        // r on (f₁ = pr¹₁, f₂(x, y) = y + 1) gives g(x, k) = x + k − 1
        let v = VertexId::from("v");
        let graph = crate::graph::CombinatorialGraph::new(
            ["i0", "i1", "o"].map(FlagId::from),
            [v.clone()],
            [
                ("i0".into(), v.clone()),
                ("i1".into(), v.clone()),
                ("o".into(), v.clone()),
            ],
            [
                ("i0".into(), "i0".into()),
                ("i1".into(), "i1".into()),
                ("o".into(), "o".into()),
            ],
        );
        let chart = Flowchart {
            graph,
            roots: vec!["o".into()],
            input_order: [(v.clone(), vec!["i0".into(), "i1".into()])]
                .into_iter()
                .collect(),
            arity: [
                (FlagId::from("i0"), (1, 1)),
                (FlagId::from("i1"), (2, 1)),
                (FlagId::from("o"), (2, 1)),
            ]
            .into_iter()
            .collect(),
            ops: [(v, OpKind::Recurse)].into_iter().collect(),
            basics: BTreeMap::new(),
        };
        let inputs: BTreeMap<FlagId, InputFn> = [
            (
                FlagId::from("i0"),
                InputFn::Basic(BasicFunction::Proj { i: 1, n: 1 }),
            ),
            (
                FlagId::from("i1"),
                InputFn::Native {
                    arity: 2,
                    coarity: 1,
                    f: Arc::new(|args| Ok(vec![args[1] + 1])),
                },
            ),
        ]
        .into_iter()
        .collect();
        let prog = op_apply(&chart, &inputs).unwrap();
        assert_eq!(prog.call(&[4, 3], &mut Budget::default()).unwrap(), vec![6]);
        for x in 1..=5 {
            for k in 1..=5 {
                assert_eq!(
                    prog.call(&[x, k], &mut Budget::default()).unwrap(),
                    vec![x + k - 1]
                );
            }
        }
    }

    #[test]
    fn addition_chart_computes_shifted_sum() {
        let add = addition_chart();
        assert_eq!(eval(&add, &[4, 3]), vec![6]);
        for x in 1..=5 {
            for k in 1..=5 {
                assert_eq!(eval(&add, &[x, k]), vec![x + k - 1]);
            }
        }
    }

    #[test]
    fn multiplication_chart_matches_direct_arithmetic() {
        let mult = multiplication_chart();
        // direct oracle: m(x, 1) = x; m(x, k+1) = add(x, m(x, k)) = x + m(x,k) − 1
        let oracle = |x: u64, k: u64| {
            let mut acc = x;
            for _ in 2..=k {
                acc = x + acc - 1;
            }
            acc
        };
        for x in 1..=6 {
            for k in 1..=6 {
                assert_eq!(eval(&mult, &[x, k]), vec![oracle(x, k)]);
                assert_eq!(oracle(x, k), k * (x - 1) + 1);
            }
        }
    }

    #[test]
    fn compose_programs_matches_function_composition() {
        let c = compose_programs(&[successor_chart(), successor_chart()]).unwrap();
        assert_eq!(eval(&c, &[3]), vec![5]);
        // single part: wrapped in a unary composition corolla, same values
        let single = compose_programs(&[successor_chart()]).unwrap();
        assert_eq!(eval(&single, &[3]), vec![4]);
        assert_eq!(single.graph.vertex_count(), 2);
    }

    #[test]
    fn compose_rejects_chain_mismatch() {
        let double = chain_of_basics(&[BasicFunction::Proj { i: 1, n: 2 }]);
        let err = compose_programs(&[successor_chart(), double]).unwrap_err();
        assert!(matches!(err, PrimError::ComposeMismatch(_)));
    }

    #[test]
    fn zero_argument_is_rejected() {
        let err = evaluate(&successor_chart(), &[0], &mut Budget::default()).unwrap_err();
        assert!(matches!(err, PrimError::ValueOutOfRange));
    }

    #[test]
    fn budget_is_enforced() {
        let add = addition_chart();
        let err = evaluate(&add, &[2, 1000], &mut Budget::new(10)).unwrap_err();
        assert!(matches!(err, PrimError::StepBudgetExceeded));
    }

    #[test]
    fn open_chart_refuses_evaluate() {
        let mut open = successor_chart();
        open.basics.clear();
        let err = evaluate(&open, &[1], &mut Budget::default()).unwrap_err();
        assert!(matches!(err, PrimError::OpenInput(_)));
    }
}

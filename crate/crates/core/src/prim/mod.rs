//! Flowcharts computing primitive recursive functions.
//!
//! A flowchart is a decorated forest: every component is a tree with one
//! marked root tail (the global output) and at least one further tail
//! (global inputs); every vertex has at least two flags and carries an
//! operator — composition `c`, bracketing `b`, or recursion `r`. Each
//! flag carries an arity/coarity pair, equal on the two halves of every
//! edge; each vertex totally orders its input flags. Global input tails
//! may be decorated with basic functions (successor, projections,
//! constants), in which case the chart is closed and evaluates to a
//! concrete function on positive integers.
//!
//! The orientation is derived from the roots: information flows from the
//! input tails towards the root of each component.

pub mod eval;
pub mod normalize;
pub mod pointed;

use crate::graph::canon::{canonical_form, CanonicalForm};
use crate::graph::{
    CombinatorialGraph, Decoration, DecoratedGraph, FlagId, FlagLabel, GraphError, Orient, VertexId,
};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, thiserror::Error)]
pub enum PrimError {
    #[error("invalid flowchart: {}", .0.join("; "))]
    Invalid(Vec<String>),
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),
    #[error("global input {0} is undecorated; the chart is open")]
    OpenInput(FlagId),
    #[error("no input function supplied for global input {0}")]
    MissingInput(FlagId),
    #[error("value outside the positive integers")]
    ValueOutOfRange,
    #[error("evaluation step budget exceeded")]
    StepBudgetExceeded,
    #[error("function table has no entry for {0:?}")]
    TableMiss(Vec<u64>),
    #[error("composition chain mismatch: {0}")]
    ComposeMismatch(String),
    #[error("operation requires a connected flowchart")]
    NotConnected,
    #[error("not a group law: {0}")]
    BadGroupLaw(String),
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),
    #[error("flowchart parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OpKind {
    #[serde(rename = "c")]
    Compose,
    #[serde(rename = "b")]
    Bracket,
    #[serde(rename = "r")]
    Recurse,
}

impl OpKind {
    fn letter(self) -> &'static str {
        match self {
            OpKind::Compose => "c",
            OpKind::Bracket => "b",
            OpKind::Recurse => "r",
        }
    }
}

/// Basic functions: coarity is always 1 and values stay in ℤ⁺ = {1, 2, …}.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BasicFunction {
    /// x ↦ x + 1.
    Succ,
    /// (x_1, .., x_n) ↦ x_i, 1-based.
    Proj { i: u32, n: u32 },
    /// (x_1, .., x_n) ↦ k with k ≥ 1.
    Const { k: u64, n: u32 },
}

impl BasicFunction {
    pub fn arity(&self) -> u32 {
        match self {
            BasicFunction::Succ => 1,
            BasicFunction::Proj { n, .. } | BasicFunction::Const { n, .. } => *n,
        }
    }

    pub fn coarity(&self) -> u32 {
        1
    }

    pub fn describe(&self) -> String {
        match self {
            BasicFunction::Succ => "succ".to_owned(),
            BasicFunction::Proj { i, n } => format!("proj{i}of{n}"),
            BasicFunction::Const { k, n } => format!("const{k}n{n}"),
        }
    }

    fn well_formed(&self) -> bool {
        match self {
            BasicFunction::Succ => true,
            BasicFunction::Proj { i, n } => *i >= 1 && i <= n,
            BasicFunction::Const { k, n: _ } => *k >= 1,
        }
    }
}

pub type Arity = (u32, u32);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flowchart {
    pub graph: CombinatorialGraph,
    /// One root tail per component, in component order.
    pub roots: Vec<FlagId>,
    /// Ordered input flags of each vertex.
    pub input_order: BTreeMap<VertexId, Vec<FlagId>>,
    pub arity: BTreeMap<FlagId, Arity>,
    pub ops: BTreeMap<VertexId, OpKind>,
    /// Basic-function decorations on global input tails; absent entries
    /// leave the chart open at that input.
    pub basics: BTreeMap<FlagId, BasicFunction>,
}

impl Flowchart {
    /// The derived orientation: each root tail points out, every other
    /// tail in, and every edge is oriented towards the root of its
    /// component. Requires a structurally valid forest with one root per
    /// component.
    pub fn derive_orientation(&self) -> Result<BTreeMap<FlagId, Orient>, PrimError> {
        let mut orient: BTreeMap<FlagId, Orient> = BTreeMap::new();
        let mut seen_vertices: BTreeSet<VertexId> = BTreeSet::new();
        for root in &self.roots {
            if !self.graph.has_flag(root) || !self.graph.is_tail(root) {
                return Err(PrimError::Invalid(vec![format!(
                    "root {root} is not a tail of the chart"
                )]));
            }
            orient.insert(root.clone(), Orient::Out);
            let mut queue = vec![self.graph.boundary_of(root).clone()];
            while let Some(v) = queue.pop() {
                if !seen_vertices.insert(v.clone()) {
                    continue;
                }
                for f in self.graph.flags_at(&v) {
                    if orient.contains_key(&f) {
                        continue;
                    }
                    let p = self.graph.partner(&f).clone();
                    if p == f {
                        orient.insert(f, Orient::In);
                    } else {
                        // the far endpoint is one step further from the root
                        orient.insert(f, Orient::In);
                        orient.insert(p.clone(), Orient::Out);
                        queue.push(self.graph.boundary_of(&p).clone());
                    }
                }
            }
        }
        if seen_vertices.len() != self.graph.vertex_count() {
            return Err(PrimError::Invalid(vec![
                "some component has no root".to_owned()
            ]));
        }
        Ok(orient)
    }

    pub fn out_flag_of(&self, v: &VertexId) -> Result<FlagId, PrimError> {
        let orient = self.derive_orientation()?;
        self.graph
            .flags_at(v)
            .into_iter()
            .find(|f| orient[f] == Orient::Out)
            .ok_or_else(|| PrimError::Invalid(vec![format!("vertex {v} has no output flag")]))
    }

    /// Global input tails in the derived orientation, sorted.
    pub fn global_inputs(&self) -> Result<Vec<FlagId>, PrimError> {
        let orient = self.derive_orientation()?;
        Ok(self
            .graph
            .tails()
            .into_iter()
            .filter(|t| orient[t] == Orient::In)
            .collect())
    }

    /// Arity/coarity of the whole chart: component root arities summed in
    /// component order.
    pub fn total_arity(&self) -> Result<Arity, PrimError> {
        let mut a = 0;
        let mut c = 0;
        for root in &self.roots {
            let (ra, rc) = self
                .arity
                .get(root)
                .ok_or_else(|| PrimError::Invalid(vec![format!("no arity on root {root}")]))?;
            a += ra;
            c += rc;
        }
        Ok((a, c))
    }

    pub fn is_closed(&self) -> bool {
        match self.global_inputs() {
            Ok(inputs) => inputs.iter().all(|t| self.basics.contains_key(t)),
            Err(_) => false,
        }
    }

    /// Itemized violations of the flowchart invariants.
    pub fn validate(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .graph
            .validate()
            .iter()
            .map(|v| v.to_string())
            .collect();
        if !out.is_empty() {
            return out;
        }
        let classify = self.graph.classify();
        if !classify.is_forest() {
            out.push("underlying graph is not a forest".to_owned());
        }
        for v in self.graph.vertices() {
            if self.graph.valence(v) < 2 {
                out.push(format!("vertex {v} has fewer than two flags"));
            }
            if !self.ops.contains_key(v) {
                out.push(format!("vertex {v} has no operator"));
            }
        }
        if self.roots.len() != classify.components.len() {
            out.push(format!(
                "{} roots for {} components",
                self.roots.len(),
                classify.components.len()
            ));
        }
        for root in &self.roots {
            if !self.graph.has_flag(root) || !self.graph.is_tail(root) {
                out.push(format!("root {root} is not a tail"));
            }
        }
        let root_comps: BTreeSet<usize> = self
            .roots
            .iter()
            .filter(|r| self.graph.has_flag(r))
            .map(|r| {
                classify
                    .components
                    .iter()
                    .position(|c| c.vertices.contains(self.graph.boundary_of(r)))
                    .unwrap()
            })
            .collect();
        if root_comps.len() != self.roots.len() {
            out.push("two roots share a component".to_owned());
        }
        for f in self.graph.flags() {
            if !self.arity.contains_key(f) {
                out.push(format!("flag {f} has no arity/coarity"));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for (f, p) in self.graph.edges() {
            if self.arity[&f] != self.arity[&p] {
                out.push(format!("edge halves {f}, {p} carry different arities"));
            }
        }
        let orient = match self.derive_orientation() {
            Ok(o) => o,
            Err(e) => {
                out.push(e.to_string());
                return out;
            }
        };
        for root in &self.roots {
            let comp = classify
                .components
                .iter()
                .find(|c| c.vertices.contains(self.graph.boundary_of(root)))
                .unwrap();
            let has_input = self.graph.tails().iter().any(|t| {
                t != root && comp.vertices.contains(self.graph.boundary_of(t)) && orient[t] == Orient::In
            });
            if !has_input {
                out.push(format!(
                    "component of root {root} has no global input"
                ));
            }
        }
        // per-vertex operator compatibility
        for v in self.graph.vertices() {
            let ins: Vec<FlagId> = self
                .graph
                .flags_at(v)
                .into_iter()
                .filter(|f| orient[f] == Orient::In)
                .collect();
            let ordered = match self.input_order.get(v) {
                Some(o) => o.clone(),
                None => {
                    out.push(format!("vertex {v} has no input order"));
                    continue;
                }
            };
            let as_set: BTreeSet<&FlagId> = ordered.iter().collect();
            if as_set.len() != ordered.len() || as_set != ins.iter().collect() {
                out.push(format!(
                    "input order of vertex {v} is not a permutation of its input flags"
                ));
                continue;
            }
            let out_flag = self
                .graph
                .flags_at(v)
                .into_iter()
                .find(|f| orient[f] == Orient::Out)
                .expect("every vertex has an out flag in a rooted forest");
            let in_ar: Vec<Arity> = ordered.iter().map(|f| self.arity[f]).collect();
            let out_ar = self.arity[&out_flag];
            match self.ops[v] {
                OpKind::Compose => {
                    for w in in_ar.windows(2) {
                        if w[0].1 != w[1].0 {
                            out.push(format!(
                                "composition chain broken at vertex {v}: {:?} then {:?}",
                                w[0], w[1]
                            ));
                        }
                    }
                    let expected = (in_ar[0].0, in_ar[in_ar.len() - 1].1);
                    if out_ar != expected {
                        out.push(format!(
                            "composition output of {v} is {out_ar:?}, expected {expected:?}"
                        ));
                    }
                }
                OpKind::Bracket => {
                    let a = in_ar[0].0;
                    if in_ar.iter().any(|x| x.0 != a) {
                        out.push(format!("bracket inputs of {v} have unequal arities"));
                    }
                    let expected = (a, in_ar.iter().map(|x| x.1).sum());
                    if out_ar != expected {
                        out.push(format!(
                            "bracket output of {v} is {out_ar:?}, expected {expected:?}"
                        ));
                    }
                }
                OpKind::Recurse => {
                    if in_ar.len() != 2 {
                        out.push(format!(
                            "recursion vertex {v} has {} inputs, needs exactly two",
                            in_ar.len()
                        ));
                        continue;
                    }
                    let (a, c) = in_ar[0];
                    if in_ar[1] != (a + c, c) {
                        out.push(format!(
                            "second recursion input of {v} is {:?}, expected {:?}",
                            in_ar[1],
                            (a + c, c)
                        ));
                    }
                    if out_ar != (a + 1, c) {
                        out.push(format!(
                            "recursion output of {v} is {out_ar:?}, expected {:?}",
                            (a + 1, c)
                        ));
                    }
                }
            }
        }
        // basics sit on global inputs with matching arity
        for (t, b) in &self.basics {
            if !self.graph.has_flag(t) || !self.graph.is_tail(t) || orient.get(t) != Some(&Orient::In)
            {
                out.push(format!("basic function on {t}, which is not a global input"));
                continue;
            }
            if !b.well_formed() {
                out.push(format!("malformed basic function {}", b.describe()));
            }
            if self.arity[t] != (b.arity(), b.coarity()) {
                out.push(format!(
                    "basic {} does not match arity {:?} of input {t}",
                    b.describe(),
                    self.arity[t]
                ));
            }
        }
        out
    }

    pub fn validated(self) -> Result<Self, PrimError> {
        let report = self.validate();
        if report.is_empty() {
            Ok(self)
        } else {
            Err(PrimError::Invalid(report))
        }
    }

    /// The flowchart as a decorated graph: orientation derived from the
    /// roots, vertex labels the operator letters, flag labels encoding
    /// arity, input position, and basic decoration. Component order is
    /// deliberately not encoded; it has no evaluation meaning.
    pub fn to_decorated_graph(&self) -> Result<DecoratedGraph, PrimError> {
        let orient = self.derive_orientation()?;
        let mut decoration = Decoration::empty();
        for f in self.graph.flags() {
            let (a, c) = self.arity[f];
            let mut tag = format!("{a}:{c}");
            if orient[f] == Orient::In {
                if let Some(pos) = self
                    .input_order
                    .get(self.graph.boundary_of(f))
                    .and_then(|ord| ord.iter().position(|x| x == f))
                {
                    tag.push_str(&format!("|p{pos}"));
                }
            }
            if let Some(b) = self.basics.get(f) {
                tag.push_str(&format!("|{}", b.describe()));
            }
            decoration.flag_labels.insert(
                f.clone(),
                FlagLabel {
                    orient: Some(orient[f]),
                    label: Some(tag),
                },
            );
        }
        for (v, op) in &self.ops {
            decoration
                .vertex_labels
                .insert(v.clone(), op.letter().to_owned());
        }
        Ok(DecoratedGraph::new(self.graph.clone(), decoration))
    }

    /// Canonical form of the flowchart as a decorated graph; equal for
    /// isomorphic charts regardless of identifier names.
    pub fn canonical_form(&self) -> Result<CanonicalForm, PrimError> {
        Ok(canonical_form(&self.to_decorated_graph()?))
    }

    pub fn prefixed(&self, prefix: &str) -> Flowchart {
        let pf = |f: &FlagId| FlagId(format!("{prefix}{f}"));
        let pv = |v: &VertexId| VertexId(format!("{prefix}{v}"));
        Flowchart {
            graph: self.graph.prefixed(prefix),
            roots: self.roots.iter().map(pf).collect(),
            input_order: self
                .input_order
                .iter()
                .map(|(v, ord)| (pv(v), ord.iter().map(pf).collect()))
                .collect(),
            arity: self.arity.iter().map(|(f, a)| (pf(f), *a)).collect(),
            ops: self.ops.iter().map(|(v, o)| (pv(v), *o)).collect(),
            basics: self
                .basics
                .iter()
                .map(|(f, b)| (pf(f), b.clone()))
                .collect(),
        }
    }

    pub fn from_json(s: &str) -> Result<Self, PrimError> {
        let raw: ChartJson = serde_json::from_str(s)?;
        let graph = CombinatorialGraph::new(raw.flags, raw.vertices, raw.boundary, raw.involution);
        let mut roots = Vec::new();
        for key in &raw.component_order {
            let tail = raw
                .roots
                .get(key)
                .ok_or_else(|| PrimError::Invalid(vec![format!("component {key} has no root")]))?;
            roots.push(tail.clone());
        }
        let basics = raw
            .basics
            .into_iter()
            .map(|(f, b)| Ok((f, b.into_basic()?)))
            .collect::<Result<_, PrimError>>()?;
        Flowchart {
            graph,
            roots,
            input_order: raw.input_order,
            arity: raw.arity.into_iter().map(|(f, a)| (f, (a[0], a[1]))).collect(),
            ops: raw.ops,
            basics,
        }
        .validated()
    }

    pub fn to_json(&self) -> String {
        // components keyed by their least vertex
        let classify = self.graph.classify();
        let mut roots = BTreeMap::new();
        let mut component_order = Vec::new();
        for root in &self.roots {
            let comp = classify
                .components
                .iter()
                .find(|c| c.vertices.contains(self.graph.boundary_of(root)))
                .expect("validated chart");
            let key = comp.vertices.iter().next().unwrap().0.clone();
            component_order.push(key.clone());
            roots.insert(key, root.clone());
        }
        let raw = ChartJson {
            flags: self.graph.flags().cloned().collect(),
            vertices: self.graph.vertices().cloned().collect(),
            boundary: self
                .graph
                .flags()
                .map(|f| (f.clone(), self.graph.boundary_of(f).clone()))
                .collect(),
            involution: self
                .graph
                .flags()
                .map(|f| (f.clone(), self.graph.partner(f).clone()))
                .collect(),
            roots,
            input_order: self.input_order.clone(),
            component_order,
            arity: self.arity.iter().map(|(f, (a, c))| (f.clone(), vec![*a, *c])).collect(),
            ops: self.ops.clone(),
            basics: self
                .basics
                .iter()
                .map(|(f, b)| (f.clone(), BasicJson::from_basic(b)))
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("chart serialization cannot fail")
    }
}

#[derive(Serialize, Deserialize)]
struct ChartJson {
    flags: Vec<FlagId>,
    vertices: Vec<VertexId>,
    boundary: BTreeMap<FlagId, VertexId>,
    involution: BTreeMap<FlagId, FlagId>,
    roots: BTreeMap<String, FlagId>,
    input_order: BTreeMap<VertexId, Vec<FlagId>>,
    component_order: Vec<String>,
    arity: BTreeMap<FlagId, Vec<u32>>,
    ops: BTreeMap<VertexId, OpKind>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    basics: BTreeMap<FlagId, BasicJson>,
}

#[derive(Serialize, Deserialize)]
struct BasicJson {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    i: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<u64>,
}

impl BasicJson {
    fn from_basic(b: &BasicFunction) -> Self {
        match b {
            BasicFunction::Succ => BasicJson {
                kind: "succ".into(),
                i: None,
                n: None,
                k: None,
            },
            BasicFunction::Proj { i, n } => BasicJson {
                kind: "proj".into(),
                i: Some(*i),
                n: Some(*n),
                k: None,
            },
            BasicFunction::Const { k, n } => BasicJson {
                kind: "const".into(),
                i: None,
                n: Some(*n),
                k: Some(*k),
            },
        }
    }

    fn into_basic(self) -> Result<BasicFunction, PrimError> {
        let missing = |what: &str| PrimError::Invalid(vec![format!("basic lacks field {what}")]);
        match self.kind.as_str() {
            "succ" => Ok(BasicFunction::Succ),
            "proj" => Ok(BasicFunction::Proj {
                i: self.i.ok_or_else(|| missing("i"))?,
                n: self.n.ok_or_else(|| missing("n"))?,
            }),
            "const" => Ok(BasicFunction::Const {
                k: self.k.ok_or_else(|| missing("k"))?,
                n: self.n.ok_or_else(|| missing("n"))?,
            }),
            other => Err(PrimError::Invalid(vec![format!(
                "unknown basic kind {other:?}"
            )])),
        }
    }
}

/// Chart builders used across tests and the CLI examples.
pub mod charts {
    use super::*;

    /// One `c` vertex with the given basic functions chained in order.
    pub fn chain_of_basics(basics: &[BasicFunction]) -> Flowchart {
        let mut flags = Vec::new();
        let mut boundary = Vec::new();
        let mut involution = Vec::new();
        let mut arity = BTreeMap::new();
        let mut order = Vec::new();
        let mut basics_map = BTreeMap::new();
        let v = VertexId::from("v");
        for (i, b) in basics.iter().enumerate() {
            let t = FlagId(format!("in{i}"));
            flags.push(t.clone());
            boundary.push((t.clone(), v.clone()));
            involution.push((t.clone(), t.clone()));
            arity.insert(t.clone(), (b.arity(), b.coarity()));
            basics_map.insert(t.clone(), b.clone());
            order.push(t);
        }
        let out = FlagId::from("out");
        flags.push(out.clone());
        boundary.push((out.clone(), v.clone()));
        involution.push((out.clone(), out.clone()));
        arity.insert(
            out.clone(),
            (basics[0].arity(), basics[basics.len() - 1].coarity()),
        );
        Flowchart {
            graph: CombinatorialGraph::new(flags, [v.clone()], boundary, involution),
            roots: vec![out],
            input_order: [(v.clone(), order)].into_iter().collect(),
            arity,
            ops: [(v, OpKind::Compose)].into_iter().collect(),
            basics: basics_map,
        }
        .validated()
        .expect("stock chart is valid")
    }

    /// Single chart wrapping the successor function.
    pub fn successor_chart() -> Flowchart {
        chain_of_basics(&[BasicFunction::Succ])
    }

    /// Addition-style chart: g(x, k) = x + k − 1, built from one
    /// recursion vertex with f₁ = pr¹₁ and f₂ = succ ∘ pr²₂.
    pub fn addition_chart() -> Flowchart {
        let v_r = VertexId::from("r");
        let v_c = VertexId::from("f2");
        let flags: Vec<FlagId> = ["base", "step", "croot", "pr", "sc", "out"]
            .map(FlagId::from)
            .to_vec();
        let graph = CombinatorialGraph::new(
            flags,
            [v_r.clone(), v_c.clone()],
            [
                ("base".into(), v_r.clone()),
                ("step".into(), v_r.clone()),
                ("out".into(), v_r.clone()),
                ("croot".into(), v_c.clone()),
                ("pr".into(), v_c.clone()),
                ("sc".into(), v_c.clone()),
            ],
            [
                ("base".into(), "base".into()),
                ("step".into(), "croot".into()),
                ("croot".into(), "step".into()),
                ("pr".into(), "pr".into()),
                ("sc".into(), "sc".into()),
                ("out".into(), "out".into()),
            ],
        );
        Flowchart {
            graph,
            roots: vec!["out".into()],
            input_order: [
                (v_r.clone(), vec!["base".into(), "step".into()]),
                (v_c.clone(), vec!["pr".into(), "sc".into()]),
            ]
            .into_iter()
            .collect(),
            arity: [
                (FlagId::from("base"), (1, 1)),
                (FlagId::from("step"), (2, 1)),
                (FlagId::from("croot"), (2, 1)),
                (FlagId::from("pr"), (2, 1)),
                (FlagId::from("sc"), (1, 1)),
                (FlagId::from("out"), (2, 1)),
            ]
            .into_iter()
            .collect(),
            ops: [(v_r, OpKind::Recurse), (v_c, OpKind::Compose)]
                .into_iter()
                .collect(),
            basics: [
                (FlagId::from("base"), BasicFunction::Proj { i: 1, n: 1 }),
                (FlagId::from("pr"), BasicFunction::Proj { i: 2, n: 2 }),
                (FlagId::from("sc"), BasicFunction::Succ),
            ]
            .into_iter()
            .collect(),
        }
        .validated()
        .expect("stock chart is valid")
    }

    /// Multiplication-style chart: m(x, k) = k(x − 1) + 1, one recursion
    /// vertex over the addition chart.
    pub fn multiplication_chart() -> Flowchart {
        let add = addition_chart().prefixed("add.");
        let v_r = VertexId::from("m");
        let mut graph = add.graph.clone();
        let base: FlagId = "m.base".into();
        let step: FlagId = "m.step".into();
        let out: FlagId = "m.out".into();
        graph.extend_vertex(
            v_r.clone(),
            &[base.clone(), step.clone(), out.clone()],
        );
        graph.join(&step, &add.roots[0]);
        let mut arity = add.arity.clone();
        arity.insert(base.clone(), (1, 1));
        arity.insert(step.clone(), (2, 1));
        arity.insert(out.clone(), (2, 1));
        let mut ops = add.ops.clone();
        ops.insert(v_r.clone(), OpKind::Recurse);
        let mut input_order = add.input_order.clone();
        input_order.insert(v_r, vec![base.clone(), step]);
        let mut basics = add.basics.clone();
        basics.insert(base, BasicFunction::Proj { i: 1, n: 1 });
        Flowchart {
            graph,
            roots: vec![out],
            input_order,
            arity,
            ops,
            basics,
        }
        .validated()
        .expect("stock chart is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::charts::*;
    use super::*;

    #[test]
    fn successor_chart_is_valid_and_closed() {
        let chart = successor_chart();
        assert!(chart.validate().is_empty());
        assert!(chart.is_closed());
        assert_eq!(chart.total_arity().unwrap(), (1, 1));
    }

    #[test]
    fn compose_corolla_with_two_unary_inputs_is_valid() {
        let chart = chain_of_basics(&[BasicFunction::Succ, BasicFunction::Succ]);
        assert!(chart.validate().is_empty());
    }

    #[test]
    fn recursion_vertex_needs_exactly_two_inputs() {
        let mut chart = addition_chart();
        // graft a third input tail onto the recursion vertex
        let extra: FlagId = "extra".into();
        chart
            .graph
            .extend_vertex(VertexId::from("r"), std::slice::from_ref(&extra));
        chart.arity.insert(extra.clone(), (1, 1));
        chart.input_order.get_mut(&VertexId::from("r")).unwrap().push(extra);
        let report = chart.validate();
        assert!(report.iter().any(|m| m.contains("needs exactly two")), "{report:?}");
    }

    #[test]
    fn bracket_arity_mismatch_is_reported() {
        // b-corolla with inputs (1,1) and (2,1)
        let v = VertexId::from("v");
        let graph = CombinatorialGraph::new(
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
                (FlagId::from("o"), (1, 2)),
            ]
            .into_iter()
            .collect(),
            ops: [(v, OpKind::Bracket)].into_iter().collect(),
            basics: BTreeMap::new(),
        };
        let report = chart.validate();
        assert!(report.iter().any(|m| m.contains("unequal arities")), "{report:?}");
    }

    #[test]
    fn addition_chart_validates() {
        assert!(addition_chart().validate().is_empty());
        assert!(multiplication_chart().validate().is_empty());
    }

    #[test]
    fn orientation_points_at_the_root() {
        let chart = addition_chart();
        let orient = chart.derive_orientation().unwrap();
        assert_eq!(orient[&FlagId::from("out")], Orient::Out);
        assert_eq!(orient[&FlagId::from("base")], Orient::In);
        assert_eq!(orient[&FlagId::from("croot")], Orient::Out); // leaves the c vertex
        assert_eq!(orient[&FlagId::from("step")], Orient::In);
    }

    #[test]
    fn json_round_trip() {
        for chart in [successor_chart(), addition_chart(), multiplication_chart()] {
            let s = chart.to_json();
            let back = Flowchart::from_json(&s).unwrap();
            assert_eq!(chart, back);
            assert_eq!(s, back.to_json());
        }
    }

    #[test]
    fn canonical_form_ignores_identifiers() {
        let chart = addition_chart();
        let renamed = chart.prefixed("x.");
        assert_eq!(
            chart.canonical_form().unwrap(),
            renamed.canonical_form().unwrap()
        );
        assert_ne!(
            chart.canonical_form().unwrap(),
            successor_chart().canonical_form().unwrap()
        );
    }
}

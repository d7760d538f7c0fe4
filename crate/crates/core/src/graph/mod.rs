//! Combinatorial graphs with decorations.
//!
//! A combinatorial graph is two finite sets — flags (half-edges) and
//! vertices — together with a boundary map sending each flag to its
//! vertex and an involution on flags. Orbits of size two are edges,
//! fixed points are tails. The boundary map is surjective (no isolated
//! vertices); the empty graph is allowed.
//!
//! Identifiers are opaque strings; all semantics is carried by the
//! boundary map, the involution, and the decoration labels, so any
//! relabeling of identifiers yields an isomorphic graph.

pub mod canon;
pub mod cut;
pub mod enumerate;
pub mod orient;
pub mod samples;

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FlagId(pub String);

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub String);

impl From<&str> for FlagId {
    fn from(s: &str) -> Self {
        FlagId(s.to_owned())
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId(s.to_owned())
    }
}

impl fmt::Display for FlagId {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Orientation of a single flag: `In` points towards its vertex,
/// `Out` away from it. The two halves of an edge must carry different
/// values, so an edge runs from the vertex of its `Out` half to the
/// vertex of its `In` half.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orient {
    In,
    Out,
}

impl Orient {
    pub fn flip(self) -> Orient {
        match self {
            Orient::In => Orient::Out,
            Orient::Out => Orient::In,
        }
    }
}

/// Label attached to one flag: an optional orientation and an optional
/// auxiliary label from the caller's alphabet.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FlagLabel {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orient: Option<Orient>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl FlagLabel {
    pub fn oriented(o: Orient) -> Self {
        FlagLabel {
            orient: Some(o),
            label: None,
        }
    }

    pub fn with_label(o: Orient, label: &str) -> Self {
        FlagLabel {
            orient: Some(o),
            label: Some(label.to_owned()),
        }
    }
}

/// Flag and vertex labels for one graph. Missing entries mean
/// "unlabeled"; validation only constrains the labels that are present.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decoration {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub flag_labels: BTreeMap<FlagId, FlagLabel>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub vertex_labels: BTreeMap<VertexId, String>,
}

impl Decoration {
    pub fn empty() -> Self {
        Decoration::default()
    }

    pub fn flag_label(&self, f: &FlagId) -> FlagLabel {
        self.flag_labels.get(f).cloned().unwrap_or_default()
    }

    pub fn orient_of(&self, f: &FlagId) -> Option<Orient> {
        self.flag_labels.get(f).and_then(|l| l.orient)
    }

    pub fn vertex_label(&self, v: &VertexId) -> Option<&str> {
        self.vertex_labels.get(v).map(|s| s.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorialGraph {
    flags: BTreeSet<FlagId>,
    vertices: BTreeSet<VertexId>,
    boundary: BTreeMap<FlagId, VertexId>,
    involution: BTreeMap<FlagId, FlagId>,
}

/// One invariant violation found by [`CombinatorialGraph::validate`] or
/// [`DecoratedGraph::validate`]; reported, never thrown mid-check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    BoundaryMissing { flag: FlagId },
    BoundaryUnknownVertex { flag: FlagId, vertex: VertexId },
    InvolutionMissing { flag: FlagId },
    InvolutionUnknownFlag { flag: FlagId, image: FlagId },
    InvolutionNotSelfInverse { flag: FlagId },
    IsolatedVertex { vertex: VertexId },
    LabelUnknownFlag { flag: FlagId },
    LabelUnknownVertex { vertex: VertexId },
    EdgeOrientationClash { flag: FlagId, partner: FlagId },
    OrientationMissing { flag: FlagId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            Violation::BoundaryMissing { flag } => write!(f, "flag {flag} has no boundary vertex"),
            Violation::BoundaryUnknownVertex { flag, vertex } => {
                write!(f, "flag {flag} is bounded to unknown vertex {vertex}")
            }
            Violation::InvolutionMissing { flag } => {
                write!(f, "flag {flag} has no involution image")
            }
            Violation::InvolutionUnknownFlag { flag, image } => {
                write!(f, "involution sends {flag} to unknown flag {image}")
            }
            Violation::InvolutionNotSelfInverse { flag } => {
                write!(f, "involution is not self-inverse at flag {flag}")
            }
            Violation::IsolatedVertex { vertex } => {
                write!(f, "vertex {vertex} is incident to no flag")
            }
            Violation::LabelUnknownFlag { flag } => {
                write!(f, "label on unknown flag {flag}")
            }
            Violation::LabelUnknownVertex { vertex } => {
                write!(f, "label on unknown vertex {vertex}")
            }
            Violation::EdgeOrientationClash { flag, partner } => {
                write!(f, "edge halves {flag}, {partner} carry equal orientations")
            }
            Violation::OrientationMissing { flag } => {
                write!(f, "flag {flag} lacks an orientation")
            }
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum GraphError {
    #[error("invalid graph: {}", crate::graph::join_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("flag {0} lacks an orientation")]
    MissingOrientation(FlagId),
    #[error("invalid cut: {0}")]
    InvalidCut(String),
    #[error("isomorphism-class cap exceeded: more than {cap} classes")]
    EnumerationCap { cap: usize },
    #[error("graph parse error: {0}")]
    Parse(#[from] serde_json::Error),
}

pub(crate) fn join_violations(vs: &[Violation]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

impl CombinatorialGraph {
    /// Assemble a graph from raw parts without validating. Call
    /// [`validate`](Self::validate) or use [`validated`](Self::validated)
    /// when the parts come from outside.
    pub fn new(
        flags: impl IntoIterator<Item = FlagId>,
        vertices: impl IntoIterator<Item = VertexId>,
        boundary: impl IntoIterator<Item = (FlagId, VertexId)>,
        involution: impl IntoIterator<Item = (FlagId, FlagId)>,
    ) -> Self {
        CombinatorialGraph {
            flags: flags.into_iter().collect(),
            vertices: vertices.into_iter().collect(),
            boundary: boundary.into_iter().collect(),
            involution: involution.into_iter().collect(),
        }
    }

    pub fn empty() -> Self {
        CombinatorialGraph {
            flags: BTreeSet::new(),
            vertices: BTreeSet::new(),
            boundary: BTreeMap::new(),
            involution: BTreeMap::new(),
        }
    }

    pub fn validated(
        flags: impl IntoIterator<Item = FlagId>,
        vertices: impl IntoIterator<Item = VertexId>,
        boundary: impl IntoIterator<Item = (FlagId, VertexId)>,
        involution: impl IntoIterator<Item = (FlagId, FlagId)>,
    ) -> Result<Self, GraphError> {
        let g = Self::new(flags, vertices, boundary, involution);
        let report = g.validate();
        if report.is_empty() {
            Ok(g)
        } else {
            Err(GraphError::Invalid(report))
        }
    }

    /// Check every structural invariant, collecting all violations.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for f in &self.flags {
            match self.boundary.get(f) {
                None => out.push(Violation::BoundaryMissing { flag: f.clone() }),
                Some(v) if !self.vertices.contains(v) => out.push(Violation::BoundaryUnknownVertex {
                    flag: f.clone(),
                    vertex: v.clone(),
                }),
                _ => {}
            }
            match self.involution.get(f) {
                None => out.push(Violation::InvolutionMissing { flag: f.clone() }),
                Some(img) if !self.flags.contains(img) => out.push(Violation::InvolutionUnknownFlag {
                    flag: f.clone(),
                    image: img.clone(),
                }),
                Some(img) => {
                    if self.involution.get(img) != Some(f) {
                        out.push(Violation::InvolutionNotSelfInverse { flag: f.clone() });
                    }
                }
            }
        }
        let covered: BTreeSet<&VertexId> = self.boundary.values().collect();
        for v in &self.vertices {
            if !covered.contains(v) {
                out.push(Violation::IsolatedVertex { vertex: v.clone() });
            }
        }
        out
    }

    pub fn flags(&self) -> impl Iterator<Item = &FlagId> {
        self.flags.iter()
    }

    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> {
        self.vertices.iter()
    }

    pub fn flag_count(&self) -> usize {
        self.flags.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn has_flag(&self, f: &FlagId) -> bool {
        self.flags.contains(f)
    }

    pub fn has_vertex(&self, v: &VertexId) -> bool {
        self.vertices.contains(v)
    }

    pub fn boundary_of(&self, f: &FlagId) -> &VertexId {
        &self.boundary[f]
    }

    pub fn partner(&self, f: &FlagId) -> &FlagId {
        &self.involution[f]
    }

    pub fn is_tail(&self, f: &FlagId) -> bool {
        self.partner(f) == f
    }

    /// Edges as pairs `(f, partner(f))` with `f < partner(f)`.
    pub fn edges(&self) -> Vec<(FlagId, FlagId)> {
        self.flags
            .iter()
            .filter_map(|f| {
                let p = self.partner(f);
                (f < p).then(|| (f.clone(), p.clone()))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.flags.iter().filter(|f| !self.is_tail(f)).count() / 2
    }

    pub fn tails(&self) -> Vec<FlagId> {
        self.flags.iter().filter(|f| self.is_tail(f)).cloned().collect()
    }

    pub fn flags_at(&self, v: &VertexId) -> Vec<FlagId> {
        self.flags
            .iter()
            .filter(|f| self.boundary_of(f) == v)
            .cloned()
            .collect()
    }

    pub fn valence(&self, v: &VertexId) -> usize {
        self.flags.iter().filter(|f| self.boundary_of(f) == v).count()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.flags.is_empty()
    }

    /// |vertices| − |edges|.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64
    }

    /// Connected components of the geometric realization: vertices joined
    /// through edges (tails join nothing). Deterministic order by least
    /// vertex id.
    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let mut remaining: BTreeSet<VertexId> = self.vertices.clone();
        let mut adj: BTreeMap<&VertexId, Vec<&VertexId>> = BTreeMap::new();
        for (f, p) in self.involution.iter() {
            if f != p {
                let (u, w) = (&self.boundary[f], &self.boundary[p]);
                adj.entry(u).or_default().push(w);
            }
        }
        let mut out = Vec::new();
        while let Some(seed) = remaining.iter().next().cloned() {
            let mut comp = BTreeSet::new();
            let mut stack = vec![seed];
            while let Some(v) = stack.pop() {
                if !remaining.remove(&v) {
                    continue;
                }
                if let Some(ns) = adj.get(&v) {
                    stack.extend(ns.iter().map(|n| (*n).clone()));
                }
                comp.insert(v);
            }
            out.push(comp);
        }
        out
    }

    pub fn classify(&self) -> Classification {
        let comps = self.components();
        let mut infos = Vec::with_capacity(comps.len());
        for comp in comps {
            let edge_count = self
                .flags
                .iter()
                .filter(|f| {
                    let p = self.partner(f);
                    *f < p && comp.contains(self.boundary_of(f))
                })
                .count();
            let is_tree = edge_count + 1 == comp.len();
            let is_corolla = comp.len() == 1 && edge_count == 0;
            infos.push(ComponentInfo {
                vertices: comp,
                edge_count,
                is_tree,
                is_corolla,
            });
        }
        Classification { components: infos }
    }

    /// Restriction to a vertex subset: keeps every flag incident to the
    /// subset; edges leaving the subset are severed into tails (each
    /// remaining half becomes an involution fixed point).
    pub fn restrict(&self, keep: &BTreeSet<VertexId>) -> CombinatorialGraph {
        let flags: BTreeSet<FlagId> = self
            .flags
            .iter()
            .filter(|f| keep.contains(self.boundary_of(f)))
            .cloned()
            .collect();
        let involution = flags
            .iter()
            .map(|f| {
                let p = self.partner(f);
                let img = if flags.contains(p) { p.clone() } else { f.clone() };
                (f.clone(), img)
            })
            .collect();
        CombinatorialGraph {
            boundary: flags
                .iter()
                .map(|f| (f.clone(), self.boundary[f].clone()))
                .collect(),
            involution,
            flags,
            vertices: keep.clone(),
        }
    }

    /// Add a vertex carrying the listed fresh tails.
    pub fn extend_vertex(&mut self, v: VertexId, tails: &[FlagId]) {
        self.vertices.insert(v.clone());
        for t in tails {
            self.flags.insert(t.clone());
            self.boundary.insert(t.clone(), v.clone());
            self.involution.insert(t.clone(), t.clone());
        }
    }

    /// Join two existing tails into an edge.
    pub fn join(&mut self, a: &FlagId, b: &FlagId) {
        debug_assert!(self.is_tail(a) && self.is_tail(b));
        self.involution.insert(a.clone(), b.clone());
        self.involution.insert(b.clone(), a.clone());
    }

    pub(crate) fn remove_flag(&mut self, f: &FlagId) {
        self.flags.remove(f);
        self.boundary.remove(f);
        self.involution.remove(f);
    }

    pub(crate) fn remove_vertex(&mut self, v: &VertexId) {
        self.vertices.remove(v);
    }

    /// Reassign the boundary of a flag.
    pub(crate) fn rehome_flag(&mut self, f: &FlagId, v: VertexId) {
        self.boundary.insert(f.clone(), v);
    }

    /// Merge another graph whose identifiers are disjoint from this one.
    pub(crate) fn merge_disjoint(&mut self, other: &CombinatorialGraph) {
        self.flags.extend(other.flags.iter().cloned());
        self.vertices.extend(other.vertices.iter().cloned());
        self.boundary
            .extend(other.boundary.iter().map(|(f, v)| (f.clone(), v.clone())));
        self.involution
            .extend(other.involution.iter().map(|(f, g)| (f.clone(), g.clone())));
    }

    /// Copy with every identifier prefixed; isomorphic to the input.
    pub fn prefixed(&self, prefix: &str) -> CombinatorialGraph {
        let pf = |f: &FlagId| FlagId(format!("{prefix}{f}"));
        let pv = |v: &VertexId| VertexId(format!("{prefix}{v}"));
        CombinatorialGraph {
            flags: self.flags.iter().map(pf).collect(),
            vertices: self.vertices.iter().map(pv).collect(),
            boundary: self.boundary.iter().map(|(f, v)| (pf(f), pv(v))).collect(),
            involution: self.involution.iter().map(|(f, g)| (pf(f), pf(g))).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentInfo {
    pub vertices: BTreeSet<VertexId>,
    pub edge_count: usize,
    pub is_tree: bool,
    pub is_corolla: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub components: Vec<ComponentInfo>,
}

impl Classification {
    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.components[0].is_tree
    }

    pub fn is_forest(&self) -> bool {
        self.components.iter().all(|c| c.is_tree)
    }

    pub fn is_corolla(&self) -> bool {
        self.is_connected() && self.components[0].is_corolla
    }
}

/// A graph together with its decoration — the unit of serialization and
/// the carrier of isomorphism classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecoratedGraph {
    pub graph: CombinatorialGraph,
    pub decoration: Decoration,
}

impl DecoratedGraph {
    pub fn new(graph: CombinatorialGraph, decoration: Decoration) -> Self {
        DecoratedGraph { graph, decoration }
    }

    pub fn bare(graph: CombinatorialGraph) -> Self {
        DecoratedGraph {
            graph,
            decoration: Decoration::empty(),
        }
    }

    pub fn empty() -> Self {
        Self::bare(CombinatorialGraph::empty())
    }

    /// Structural invariants plus decoration invariants: labels attach to
    /// existing flags/vertices, and when both halves of an edge carry an
    /// orientation the two values differ.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.graph.validate();
        for f in self.decoration.flag_labels.keys() {
            if !self.graph.has_flag(f) {
                out.push(Violation::LabelUnknownFlag { flag: f.clone() });
            }
        }
        for v in self.decoration.vertex_labels.keys() {
            if !self.graph.has_vertex(v) {
                out.push(Violation::LabelUnknownVertex { vertex: v.clone() });
            }
        }
        if out.is_empty() {
            for (f, p) in self.graph.involution.iter() {
                if f < p {
                    if let (Some(a), Some(b)) =
                        (self.decoration.orient_of(f), self.decoration.orient_of(p))
                    {
                        if a == b {
                            out.push(Violation::EdgeOrientationClash {
                                flag: f.clone(),
                                partner: p.clone(),
                            });
                        }
                    }
                }
            }
        }
        out
    }

    pub fn validated(self) -> Result<Self, GraphError> {
        let report = self.validate();
        if report.is_empty() {
            Ok(self)
        } else {
            Err(GraphError::Invalid(report))
        }
    }

    /// True when every flag carries an orientation and edge halves clash
    /// nowhere.
    pub fn is_fully_oriented(&self) -> bool {
        self.graph
            .flags()
            .all(|f| self.decoration.orient_of(f).is_some())
            && self.validate().is_empty()
    }

    /// Flags whose orientation is missing.
    pub fn unoriented_flags(&self) -> Vec<FlagId> {
        self.graph
            .flags()
            .filter(|f| self.decoration.orient_of(f).is_none())
            .cloned()
            .collect()
    }

    pub fn prefixed(&self, prefix: &str) -> DecoratedGraph {
        let pf = |f: &FlagId| FlagId(format!("{prefix}{f}"));
        let pv = |v: &VertexId| VertexId(format!("{prefix}{v}"));
        DecoratedGraph {
            graph: self.graph.prefixed(prefix),
            decoration: Decoration {
                flag_labels: self
                    .decoration
                    .flag_labels
                    .iter()
                    .map(|(f, l)| (pf(f), l.clone()))
                    .collect(),
                vertex_labels: self
                    .decoration
                    .vertex_labels
                    .iter()
                    .map(|(v, l)| (pv(v), l.clone()))
                    .collect(),
            },
        }
    }

    /// Restriction of graph and labels to a vertex subset (see
    /// [`CombinatorialGraph::restrict`]); severed halves keep their labels.
    pub fn restrict(&self, keep: &BTreeSet<VertexId>) -> DecoratedGraph {
        let graph = self.graph.restrict(keep);
        let decoration = Decoration {
            flag_labels: self
                .decoration
                .flag_labels
                .iter()
                .filter(|(f, _)| graph.has_flag(f))
                .map(|(f, l)| (f.clone(), l.clone()))
                .collect(),
            vertex_labels: self
                .decoration
                .vertex_labels
                .iter()
                .filter(|(v, _)| keep.contains(v))
                .map(|(v, l)| (v.clone(), l.clone()))
                .collect(),
        };
        DecoratedGraph { graph, decoration }
    }

    /// Components as decorated subgraphs, in deterministic order.
    pub fn component_graphs(&self) -> Vec<DecoratedGraph> {
        self.graph
            .components()
            .into_iter()
            .map(|comp| self.restrict(&comp))
            .collect()
    }
}

/// Disjoint union with disjointly relabeled identifiers; the canonical
/// form of the result does not depend on argument order.
pub fn disjoint_union(a: &DecoratedGraph, b: &DecoratedGraph) -> DecoratedGraph {
    let a = a.prefixed("a.");
    let b = b.prefixed("b.");
    let mut flags = a.graph.flags;
    flags.extend(b.graph.flags);
    let mut vertices = a.graph.vertices;
    vertices.extend(b.graph.vertices);
    let mut boundary = a.graph.boundary;
    boundary.extend(b.graph.boundary);
    let mut involution = a.graph.involution;
    involution.extend(b.graph.involution);
    let mut flag_labels = a.decoration.flag_labels;
    flag_labels.extend(b.decoration.flag_labels);
    let mut vertex_labels = a.decoration.vertex_labels;
    vertex_labels.extend(b.decoration.vertex_labels);
    DecoratedGraph {
        graph: CombinatorialGraph {
            flags,
            vertices,
            boundary,
            involution,
        },
        decoration: Decoration {
            flag_labels,
            vertex_labels,
        },
    }
}

/// Disjoint union of a list; empty list gives the empty graph.
pub fn disjoint_union_all(parts: &[DecoratedGraph]) -> DecoratedGraph {
    let mut acc = DecoratedGraph::empty();
    for p in parts {
        acc = disjoint_union(&acc, p);
    }
    acc
}

// --- JSON file format ---------------------------------------------------
//
// {"flags": [..], "vertices": [..], "boundary": {flag: vertex},
//  "involution": {flag: flag}, "flag_labels": {flag: {"orient": "in"|"out",
//  "label": str?}}, "vertex_labels": {vertex: str}}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    flags: Vec<FlagId>,
    vertices: Vec<VertexId>,
    boundary: BTreeMap<FlagId, VertexId>,
    involution: BTreeMap<FlagId, FlagId>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    flag_labels: BTreeMap<FlagId, FlagLabel>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    vertex_labels: BTreeMap<VertexId, String>,
}

impl Serialize for DecoratedGraph {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        GraphJson {
            flags: self.graph.flags.iter().cloned().collect(),
            vertices: self.graph.vertices.iter().cloned().collect(),
            boundary: self.graph.boundary.clone(),
            involution: self.graph.involution.clone(),
            flag_labels: self.decoration.flag_labels.clone(),
            vertex_labels: self.decoration.vertex_labels.clone(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for DecoratedGraph {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let raw = GraphJson::deserialize(de)?;
        Ok(DecoratedGraph {
            graph: CombinatorialGraph {
                flags: raw.flags.into_iter().collect(),
                vertices: raw.vertices.into_iter().collect(),
                boundary: raw.boundary,
                involution: raw.involution,
            },
            decoration: Decoration {
                flag_labels: raw.flag_labels,
                vertex_labels: raw.vertex_labels,
            },
        })
    }
}

impl DecoratedGraph {
    pub fn from_json(s: &str) -> Result<Self, GraphError> {
        let dg: DecoratedGraph = serde_json::from_str(s)?;
        dg.validated()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serialization cannot fail")
    }
}

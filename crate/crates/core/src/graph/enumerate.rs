//! Enumeration of isomorphism classes of tail-free graphs.
//!
//! For each edge count e ≤ max_edges, every multiset of vertex valences
//! summing to 2e is realized as a block of flags per vertex, all perfect
//! matchings of the flags are formed, and the results are deduplicated by
//! canonical form. Every class with each vertex incident to at least one
//! flag appears exactly once; the result order is the canonical byte
//! order, so it is deterministic.

use super::canon::{canonical_form, CanonicalForm};
use super::{CombinatorialGraph, DecoratedGraph, FlagId, GraphError, VertexId};
use std::collections::{BTreeMap, BTreeSet};

pub const DEFAULT_CLASS_CAP: usize = 1_000_000;

#[derive(Clone, Debug)]
pub struct EnumerationOptions {
    pub max_edges: usize,
    /// When present, keep only graphs whose every vertex valence lies in
    /// the set; the empty graph is excluded (a valence-constrained graph
    /// is one that has such vertices).
    pub allowed_valences: Option<BTreeSet<usize>>,
    /// Hard cap on the number of classes produced.
    pub class_cap: usize,
}

impl EnumerationOptions {
    pub fn new(max_edges: usize) -> Self {
        EnumerationOptions {
            max_edges,
            allowed_valences: None,
            class_cap: DEFAULT_CLASS_CAP,
        }
    }

    pub fn with_valences(mut self, valences: impl IntoIterator<Item = usize>) -> Self {
        self.allowed_valences = Some(valences.into_iter().collect());
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.class_cap = cap;
        self
    }
}

/// One representative per isomorphism class of tail-free graphs with at
/// most `max_edges` edges, in canonical order.
pub fn enumerate_graphs(opts: &EnumerationOptions) -> Result<Vec<CombinatorialGraph>, GraphError> {
    let mut classes: BTreeMap<CanonicalForm, CombinatorialGraph> = BTreeMap::new();
    if opts.allowed_valences.is_none() {
        classes.insert(
            canonical_form(&DecoratedGraph::empty()),
            CombinatorialGraph::empty(),
        );
    }
    for edges in 1..=opts.max_edges {
        let flag_total = 2 * edges;
        for profile in partitions(flag_total) {
            if let Some(allowed) = &opts.allowed_valences {
                if !profile.iter().all(|v| allowed.contains(v)) {
                    continue;
                }
            }
            let template = profile_template(&profile);
            let flag_ids: Vec<FlagId> = template.flags().cloned().collect();
            for matching in perfect_matchings(flag_ids.len()) {
                let mut g = template.clone();
                for (i, j) in matching {
                    let (a, b) = (flag_ids[i].clone(), flag_ids[j].clone());
                    g.involution.insert(a.clone(), b.clone());
                    g.involution.insert(b, a);
                }
                let key = canonical_form(&DecoratedGraph::bare(g.clone()));
                classes.entry(key).or_insert(g);
                if classes.len() > opts.class_cap {
                    return Err(GraphError::EnumerationCap { cap: opts.class_cap });
                }
            }
        }
    }
    Ok(classes.into_values().collect())
}

/// Graph skeleton with the valence profile realized as flags per vertex
/// and identity involution (to be overwritten by a matching).
fn profile_template(profile: &[usize]) -> CombinatorialGraph {
    let mut flags = Vec::new();
    let mut vertices = Vec::new();
    let mut boundary = Vec::new();
    for (vi, val) in profile.iter().enumerate() {
        let v = VertexId(format!("v{vi}"));
        vertices.push(v.clone());
        for k in 0..*val {
            let f = FlagId(format!("v{vi}.f{k}"));
            boundary.push((f.clone(), v.clone()));
            flags.push(f);
        }
    }
    let involution = flags.iter().map(|f| (f.clone(), f.clone()));
    CombinatorialGraph::new(flags.clone(), vertices, boundary, involution)
}

/// Partitions of n into weakly decreasing parts ≥ 1.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Perfect matchings of {0, .., n−1} as index pairs; n must be even.
fn perfect_matchings(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(pool: &mut Vec<usize>, current: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if pool.is_empty() {
            out.push(current.clone());
            return;
        }
        let first = pool.remove(0);
        for k in 0..pool.len() {
            let mate = pool.remove(k);
            current.push((first, mate));
            go(pool, current, out);
            current.pop();
            pool.insert(k, mate);
        }
        pool.insert(0, first);
    }
    assert!(n.is_multiple_of(2));
    let mut pool: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    go(&mut pool, &mut Vec::new(), &mut out);
    out
}

/// All inequivalent full orientations of a graph: every flag receives
/// in/out, edge halves opposite, deduplicated by canonical form.
pub fn orientations(g: &CombinatorialGraph) -> Vec<DecoratedGraph> {
    use super::{Decoration, FlagLabel, Orient};
    let edges = g.edges();
    let tails = g.tails();
    let slots = edges.len() + tails.len();
    let mut seen: BTreeMap<CanonicalForm, DecoratedGraph> = BTreeMap::new();
    for mask in 0u64..(1u64 << slots) {
        let mut d = Decoration::empty();
        for (i, (f, p)) in edges.iter().enumerate() {
            let (of, op) = if mask >> i & 1 == 0 {
                (Orient::Out, Orient::In)
            } else {
                (Orient::In, Orient::Out)
            };
            d.flag_labels.insert(f.clone(), FlagLabel::oriented(of));
            d.flag_labels.insert(p.clone(), FlagLabel::oriented(op));
        }
        for (i, t) in tails.iter().enumerate() {
            let o = if mask >> (edges.len() + i) & 1 == 0 {
                Orient::In
            } else {
                Orient::Out
            };
            d.flag_labels.insert(t.clone(), FlagLabel::oriented(o));
        }
        let dg = DecoratedGraph::new(g.clone(), d);
        seen.entry(canonical_form(&dg)).or_insert(dg);
    }
    seen.into_values().collect()
}

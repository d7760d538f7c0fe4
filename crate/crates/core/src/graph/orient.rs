//! Orientation analysis: directedness, height functions, oriented wheels.
//!
//! An oriented edge runs from the vertex of its `Out` half to the vertex
//! of its `In` half. A graph is directed when each component admits a
//! height function strictly decreasing along every edge; for finite
//! graphs this is acyclicity of the edge relation, with an oriented loop
//! counting as a cycle of length one.

use super::{DecoratedGraph, FlagId, GraphError, Orient, VertexId};
use std::collections::{BTreeMap, BTreeSet};

/// Directed edges `(source, target)` of a fully oriented graph, one entry
/// per edge (loops give `(v, v)`).
pub fn directed_edges(dg: &DecoratedGraph) -> Result<Vec<(VertexId, VertexId)>, GraphError> {
    let mut out = Vec::new();
    for f in dg.graph.flags() {
        let p = dg.graph.partner(f);
        if f >= p {
            continue;
        }
        let of = dg
            .decoration
            .orient_of(f)
            .ok_or_else(|| GraphError::MissingOrientation(f.clone()))?;
        let _ = dg
            .decoration
            .orient_of(p)
            .ok_or_else(|| GraphError::MissingOrientation(p.clone()))?;
        let (src, tgt) = match of {
            Orient::Out => (dg.graph.boundary_of(f), dg.graph.boundary_of(p)),
            Orient::In => (dg.graph.boundary_of(p), dg.graph.boundary_of(f)),
        };
        out.push((src.clone(), tgt.clone()));
    }
    Ok(out)
}

fn check_all_oriented(dg: &DecoratedGraph) -> Result<(), GraphError> {
    if let Some(f) = dg.unoriented_flags().first() {
        return Err(GraphError::MissingOrientation(f.clone()));
    }
    Ok(())
}

/// Height witness: when the orientation relation is acyclic, returns for
/// every vertex the length of the longest directed path starting there,
/// so each edge strictly decreases the height. Returns `None` when an
/// oriented wheel (including a loop) exists.
pub fn directed_heights(dg: &DecoratedGraph) -> Result<Option<BTreeMap<VertexId, u64>>, GraphError> {
    check_all_oriented(dg)?;
    let edges = directed_edges(dg)?;
    let mut succ: BTreeMap<&VertexId, Vec<&VertexId>> = BTreeMap::new();
    for (u, v) in &edges {
        if u == v {
            return Ok(None); // oriented loop
        }
        succ.entry(u).or_default().push(v);
    }
    // longest path by DFS with cycle detection
    let mut state: BTreeMap<&VertexId, u8> = BTreeMap::new(); // 1 = open, 2 = done
    let mut height: BTreeMap<VertexId, u64> = BTreeMap::new();
    fn visit<'a>(
        v: &'a VertexId,
        succ: &BTreeMap<&'a VertexId, Vec<&'a VertexId>>,
        state: &mut BTreeMap<&'a VertexId, u8>,
        height: &mut BTreeMap<VertexId, u64>,
    ) -> Option<u64> {
        match state.get(v) {
            Some(1) => return None, // back edge: cycle
            Some(2) => return Some(height[v]),
            _ => {}
        }
        state.insert(v, 1);
        let mut h = 0;
        if let Some(ns) = succ.get(v) {
            for n in ns {
                h = h.max(1 + visit(n, succ, state, height)?);
            }
        }
        state.insert(v, 2);
        height.insert(v.clone(), h);
        Some(h)
    }
    for v in dg.graph.vertices() {
        if visit(v, &succ, &mut state, &mut height).is_none() {
            return Ok(None);
        }
    }
    Ok(Some(height))
}

pub fn is_directed(dg: &DecoratedGraph) -> Result<bool, GraphError> {
    Ok(directed_heights(dg)?.is_some())
}

/// Vertex sets of nontrivial strongly connected components of the edge
/// relation (two or more vertices). Any directed cycle stays inside one
/// of these, and every vertex pair inside one lies on a chain of
/// overlapping directed cycles, so "every oriented wheel lies in one part
/// of a partition" is exactly "every nontrivial component lies in one
/// part". Oriented loops at a single vertex never constrain a partition.
pub fn nontrivial_strong_components(
    dg: &DecoratedGraph,
) -> Result<Vec<BTreeSet<VertexId>>, GraphError> {
    check_all_oriented(dg)?;
    let edges = directed_edges(dg)?;
    let verts: Vec<&VertexId> = dg.graph.vertices().collect();
    let index_of: BTreeMap<&VertexId, usize> = verts.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); verts.len()];
    for (u, v) in &edges {
        if u != v {
            succ[index_of[u]].push(index_of[v]);
        }
    }
    // Tarjan, iterative
    let n = verts.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next_index = 0usize;
    let mut comps: Vec<Vec<usize>> = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn strongconnect(
        v: usize,
        succ: &[Vec<usize>],
        index: &mut [usize],
        low: &mut [usize],
        on_stack: &mut [bool],
        stack: &mut Vec<usize>,
        next_index: &mut usize,
        comps: &mut Vec<Vec<usize>>,
    ) {
        index[v] = *next_index;
        low[v] = *next_index;
        *next_index += 1;
        stack.push(v);
        on_stack[v] = true;
        for &w in &succ[v] {
            if index[w] == usize::MAX {
                strongconnect(w, succ, index, low, on_stack, stack, next_index, comps);
                low[v] = low[v].min(low[w]);
            } else if on_stack[w] {
                low[v] = low[v].min(index[w]);
            }
        }
        if low[v] == index[v] {
            let mut comp = Vec::new();
            loop {
                let w = stack.pop().unwrap();
                on_stack[w] = false;
                comp.push(w);
                if w == v {
                    break;
                }
            }
            comps.push(comp);
        }
    }
    for v in 0..n {
        if index[v] == usize::MAX {
            strongconnect(
                v,
                &succ,
                &mut index,
                &mut low,
                &mut on_stack,
                &mut stack,
                &mut next_index,
                &mut comps,
            );
        }
    }
    Ok(comps
        .into_iter()
        .filter(|c| c.len() >= 2)
        .map(|c| c.into_iter().map(|i| verts[i].clone()).collect())
        .collect())
}

/// Global input tails (oriented `In`) in sorted order.
pub fn global_inputs(dg: &DecoratedGraph) -> Vec<FlagId> {
    dg.graph
        .tails()
        .into_iter()
        .filter(|t| dg.decoration.orient_of(t) == Some(Orient::In))
        .collect()
}

/// Global output tails (oriented `Out`) in sorted order.
pub fn global_outputs(dg: &DecoratedGraph) -> Vec<FlagId> {
    dg.graph
        .tails()
        .into_iter()
        .filter(|t| dg.decoration.orient_of(t) == Some(Orient::Out))
        .collect()
}

//! Cuts of oriented graphs and the severing construction.
//!
//! A proper cut is a bipartition of the vertices into non-empty upper and
//! lower parts such that every oriented wheel stays within one part and
//! every crossing edge is oriented from upper to lower ("information
//! flows down"). Every graph additionally has two improper cuts, with
//! all vertices in the lower respectively upper part.
//!
//! Severing along a cut keeps all flags on each side; a crossing edge
//! contributes its upper half to the upper part as a new output tail and
//! its lower half to the lower part as a new input tail, so the disjoint
//! union of the parts has the same flags as the original graph. Labels
//! are preserved throughout.

use super::orient::{directed_edges, nontrivial_strong_components};
use super::{DecoratedGraph, GraphError, VertexId};
use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CutKind {
    Proper,
    /// Upper part empty: the cut producing `∅ ⊗ τ`.
    UpperImproper,
    /// Lower part empty: the cut producing `τ ⊗ ∅`.
    LowerImproper,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cut {
    pub upper: BTreeSet<VertexId>,
    pub lower: BTreeSet<VertexId>,
    pub kind: CutKind,
}

impl Cut {
    pub fn is_proper(&self) -> bool {
        self.kind == CutKind::Proper
    }
}

/// Checks the cut conditions for a given bipartition; `Ok` carries the
/// classification.
pub fn validate_cut(
    dg: &DecoratedGraph,
    upper: &BTreeSet<VertexId>,
    lower: &BTreeSet<VertexId>,
) -> Result<CutKind, GraphError> {
    for v in upper.iter().chain(lower.iter()) {
        if !dg.graph.has_vertex(v) {
            return Err(GraphError::InvalidCut(format!("unknown vertex {v}")));
        }
    }
    if upper.intersection(lower).next().is_some() {
        return Err(GraphError::InvalidCut("parts overlap".into()));
    }
    if upper.len() + lower.len() != dg.graph.vertex_count() {
        return Err(GraphError::InvalidCut("parts do not cover the vertex set".into()));
    }
    if upper.is_empty() && lower.is_empty() {
        // only possible for the empty graph; call it the upper improper cut
        return Ok(CutKind::UpperImproper);
    }
    if upper.is_empty() {
        return Ok(CutKind::UpperImproper);
    }
    if lower.is_empty() {
        return Ok(CutKind::LowerImproper);
    }
    for comp in nontrivial_strong_components(dg)? {
        let in_upper = comp.iter().filter(|v| upper.contains(v)).count();
        if in_upper != 0 && in_upper != comp.len() {
            return Err(GraphError::InvalidCut(
                "an oriented wheel is split between the parts".into(),
            ));
        }
    }
    for (src, tgt) in directed_edges(dg)? {
        if lower.contains(&src) && upper.contains(&tgt) {
            return Err(GraphError::InvalidCut(format!(
                "edge {src} → {tgt} runs from lower to upper"
            )));
        }
    }
    Ok(CutKind::Proper)
}

/// All cuts of an oriented graph: every admissible proper bipartition
/// plus the two improper cuts, in deterministic order (improper cuts
/// first, then by subset).
pub fn enumerate_cuts(dg: &DecoratedGraph) -> Result<Vec<Cut>, GraphError> {
    let verts: Vec<VertexId> = dg.graph.vertices().cloned().collect();
    let all: BTreeSet<VertexId> = verts.iter().cloned().collect();
    if verts.is_empty() {
        // the two improper cuts coincide as partitions of the empty set;
        // the empty graph has exactly one cut
        return Ok(vec![Cut {
            upper: BTreeSet::new(),
            lower: BTreeSet::new(),
            kind: CutKind::UpperImproper,
        }]);
    }
    let mut cuts = vec![
        Cut {
            upper: BTreeSet::new(),
            lower: all.clone(),
            kind: CutKind::UpperImproper,
        },
        Cut {
            upper: all.clone(),
            lower: BTreeSet::new(),
            kind: CutKind::LowerImproper,
        },
    ];
    let comps = nontrivial_strong_components(dg)?;
    let edges = directed_edges(dg)?;
    let n = verts.len();
    for mask in 1u64..((1u64 << n) - 1) {
        let upper: BTreeSet<VertexId> = verts
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, v)| v.clone())
            .collect();
        if comps.iter().any(|c| {
            let k = c.iter().filter(|v| upper.contains(v)).count();
            k != 0 && k != c.len()
        }) {
            continue;
        }
        if edges
            .iter()
            .any(|(src, tgt)| !upper.contains(src) && upper.contains(tgt))
        {
            continue;
        }
        let lower: BTreeSet<VertexId> = all.difference(&upper).cloned().collect();
        cuts.push(Cut {
            upper,
            lower,
            kind: CutKind::Proper,
        });
    }
    Ok(cuts)
}

/// Sever a graph along a cut into its upper and lower parts.
pub fn apply_cut(
    dg: &DecoratedGraph,
    cut: &Cut,
) -> Result<(DecoratedGraph, DecoratedGraph), GraphError> {
    let kind = validate_cut(dg, &cut.upper, &cut.lower)?;
    if kind != cut.kind {
        return Err(GraphError::InvalidCut(format!(
            "cut kind mismatch: stated {:?}, actual {:?}",
            cut.kind, kind
        )));
    }
    Ok((dg.restrict(&cut.upper), dg.restrict(&cut.lower)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canon::canonical_form;
    use crate::graph::orient::{global_inputs, global_outputs};
    use crate::graph::{disjoint_union, samples};

    #[test]
    fn corolla_has_only_improper_cuts() {
        let cuts = enumerate_cuts(&samples::oriented_corolla(2)).unwrap();
        assert_eq!(cuts.len(), 2);
        assert!(cuts.iter().all(|c| !c.is_proper()));
    }

    #[test]
    fn empty_graph_has_one_cut() {
        let cuts = enumerate_cuts(&crate::graph::DecoratedGraph::empty()).unwrap();
        assert_eq!(cuts.len(), 1);
    }

    #[test]
    fn directed_path_has_two_proper_cuts() {
        let proper = enumerate_cuts(&samples::directed_path3())
            .unwrap()
            .into_iter()
            .filter(|c| c.is_proper())
            .count();
        assert_eq!(proper, 2);
    }

    #[test]
    fn path_oriented_into_the_middle_has_three_proper_cuts() {
        let proper = enumerate_cuts(&samples::path3_to_middle())
            .unwrap()
            .into_iter()
            .filter(|c| c.is_proper())
            .count();
        assert_eq!(proper, 3);
    }

    #[test]
    fn chain_has_three_cuts() {
        let dg = samples::directed_chain_bare();
        let cuts = enumerate_cuts(&dg).unwrap();
        assert_eq!(cuts.len(), 3);
        let proper: Vec<&Cut> = cuts.iter().filter(|c| c.is_proper()).collect();
        assert_eq!(proper.len(), 1);
        assert_eq!(proper[0].upper, [VertexId::from("u")].into_iter().collect());
    }

    #[test]
    fn two_cycle_has_only_improper_cuts() {
        let cuts = enumerate_cuts(&samples::oriented_two_cycle()).unwrap();
        assert_eq!(cuts.len(), 2);
    }

    #[test]
    fn improper_upper_cut_gives_empty_and_whole() {
        let dg = samples::directed_chain_bare();
        let cuts = enumerate_cuts(&dg).unwrap();
        let upper_improper = cuts.iter().find(|c| c.kind == CutKind::UpperImproper).unwrap();
        let (top, bottom) = apply_cut(&dg, upper_improper).unwrap();
        assert!(top.graph.is_empty());
        assert_eq!(canonical_form(&bottom), canonical_form(&dg));
    }

    #[test]
    fn chain_cut_gives_two_corollas_with_severed_tails() {
        let dg = samples::directed_chain_bare();
        let cuts = enumerate_cuts(&dg).unwrap();
        let proper = cuts.iter().find(|c| c.is_proper()).unwrap();
        let (top, bottom) = apply_cut(&dg, proper).unwrap();
        assert!(top.graph.classify().is_corolla());
        assert!(bottom.graph.classify().is_corolla());
        assert_eq!(global_outputs(&top).len(), 1);
        assert_eq!(global_inputs(&bottom).len(), 1);
        // flags preserved overall, one edge severed
        let union = disjoint_union(&top, &bottom);
        assert_eq!(union.graph.flag_count(), dg.graph.flag_count());
        assert_eq!(union.graph.edge_count(), dg.graph.edge_count() - 1);
    }

    #[test]
    fn path3_cut_after_two_vertices() {
        let dg = samples::directed_path3();
        let upper: BTreeSet<VertexId> = ["u", "v"].map(VertexId::from).into_iter().collect();
        let lower: BTreeSet<VertexId> = ["w"].map(VertexId::from).into_iter().collect();
        assert_eq!(validate_cut(&dg, &upper, &lower).unwrap(), CutKind::Proper);
        let cut = Cut {
            upper,
            lower,
            kind: CutKind::Proper,
        };
        let (top, bottom) = apply_cut(&dg, &cut).unwrap();
        assert_eq!(top.graph.vertex_count(), 2);
        assert_eq!(top.graph.edge_count(), 1);
        assert_eq!(global_outputs(&top).len(), 1);
        assert!(bottom.graph.classify().is_corolla());
        assert_eq!(global_inputs(&bottom).len(), 1);
    }

    #[test]
    fn reversed_chain_cut_is_rejected() {
        let dg = samples::directed_chain_bare();
        let upper: BTreeSet<VertexId> = ["w"].map(VertexId::from).into_iter().collect();
        let lower: BTreeSet<VertexId> = ["u"].map(VertexId::from).into_iter().collect();
        assert!(validate_cut(&dg, &upper, &lower).is_err());
    }

    #[test]
    fn cuts_never_run_lower_to_upper_when_directed() {
        for dg in [samples::directed_path3(), samples::directed_chain_io()] {
            for cut in enumerate_cuts(&dg).unwrap() {
                for (src, tgt) in crate::graph::orient::directed_edges(&dg).unwrap() {
                    assert!(!(cut.lower.contains(&src) && cut.upper.contains(&tgt)));
                }
            }
        }
    }

    #[test]
    fn flag_count_is_preserved_by_every_cut() {
        for dg in [
            samples::directed_path3(),
            samples::directed_chain_io(),
            samples::oriented_two_cycle(),
        ] {
            let crossing = |cut: &Cut| {
                crate::graph::orient::directed_edges(&dg)
                    .unwrap()
                    .iter()
                    .filter(|(s, t)| cut.upper.contains(s) && cut.lower.contains(t))
                    .count()
            };
            for cut in enumerate_cuts(&dg).unwrap() {
                let (top, bottom) = apply_cut(&dg, &cut).unwrap();
                let union = disjoint_union(&top, &bottom);
                assert_eq!(union.graph.flag_count(), dg.graph.flag_count());
                assert_eq!(union.graph.edge_count(), dg.graph.edge_count() - crossing(&cut));
            }
        }
    }
}

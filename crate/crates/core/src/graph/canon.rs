//! Canonical forms and automorphism counting for decorated graphs.
//!
//! Two decorated graphs get equal canonical byte strings iff they are
//! isomorphic: there are bijections on vertices and flags commuting with
//! the boundary map, the involution, and every label.
//!
//! The encoding of a graph under a fixed vertex numbering lists vertex
//! labels in order, then the sorted multiset of edge records, then the
//! sorted multiset of tail records. Flags have no identity beyond their
//! labels and incidences, so records at matching positions are freely
//! interchangeable and the numbering determines the class. The canonical
//! form is the minimum encoding over all numberings consistent with an
//! iterated label-aware partition refinement of the vertices; refinement
//! only prunes, the search inside refinement classes is exhaustive.
//! Intended scale is small graphs (roughly ≤ 10 flags), where exhaustive
//! search is cheap and obviously correct.

use super::{DecoratedGraph, FlagId, Orient, VertexId};
use std::collections::BTreeMap;
use std::fmt;

/// Canonical byte string of an isomorphism class.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Short stable hex fingerprint for display purposes.
    pub fn fingerprint(&self) -> String {
        // FNV-1a, enough to tell desk-scale classes apart in output
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in &self.0 {
            h ^= *b as u64;
            h = h.wrapping_mul(0x1000_0000_01b3);
        }
        format!("{h:016x}")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.fingerprint())
    }
}

type LabelCode = (u8, Option<String>);

fn label_code(dg: &DecoratedGraph, f: &FlagId) -> LabelCode {
    let l = dg.decoration.flag_label(f);
    let o = match l.orient {
        None => 0u8,
        Some(Orient::In) => 1,
        Some(Orient::Out) => 2,
    };
    (o, l.label)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Encoding {
    vertex_labels: Vec<Option<String>>,
    edges: Vec<(usize, usize, LabelCode, LabelCode)>,
    tails: Vec<(usize, LabelCode)>,
}

impl Encoding {
    fn to_bytes(&self) -> Vec<u8> {
        fn push_str(out: &mut Vec<u8>, s: &Option<String>) {
            match s {
                None => out.push(0),
                Some(s) => {
                    out.push(1);
                    out.extend_from_slice(&(s.len() as u32).to_be_bytes());
                    out.extend_from_slice(s.as_bytes());
                }
            }
        }
        fn push_code(out: &mut Vec<u8>, c: &LabelCode) {
            out.push(c.0);
            push_str(out, &c.1);
        }
        let mut out = Vec::new();
        out.extend_from_slice(&(self.vertex_labels.len() as u32).to_be_bytes());
        for l in &self.vertex_labels {
            push_str(&mut out, l);
        }
        out.extend_from_slice(&(self.edges.len() as u32).to_be_bytes());
        for (a, b, ca, cb) in &self.edges {
            out.extend_from_slice(&(*a as u32).to_be_bytes());
            out.extend_from_slice(&(*b as u32).to_be_bytes());
            push_code(&mut out, ca);
            push_code(&mut out, cb);
        }
        out.extend_from_slice(&(self.tails.len() as u32).to_be_bytes());
        for (a, c) in &self.tails {
            out.extend_from_slice(&(*a as u32).to_be_bytes());
            push_code(&mut out, c);
        }
        out
    }
}

fn encode(dg: &DecoratedGraph, number: &BTreeMap<&VertexId, usize>) -> Encoding {
    let mut vertex_labels = vec![None; number.len()];
    for (v, i) in number {
        vertex_labels[*i] = dg.decoration.vertex_label(v).map(str::to_owned);
    }
    let mut edges = Vec::new();
    let mut tails = Vec::new();
    for f in dg.graph.flags() {
        let p = dg.graph.partner(f);
        if p == f {
            tails.push((number[dg.graph.boundary_of(f)], label_code(dg, f)));
        } else if f < p {
            let (a, b) = (number[dg.graph.boundary_of(f)], number[dg.graph.boundary_of(p)]);
            let (ca, cb) = (label_code(dg, f), label_code(dg, p));
            let rec = if (a, &ca) <= (b, &cb) {
                (a, b, ca, cb)
            } else {
                (b, a, cb, ca)
            };
            edges.push(rec);
        }
    }
    edges.sort();
    tails.sort();
    Encoding {
        vertex_labels,
        edges,
        tails,
    }
}

// --- vertex partition refinement -----------------------------------------

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
enum PartnerKind {
    Tail,
    Loop(LabelCode),
    Edge(LabelCode, usize),
}

fn refine_classes(dg: &DecoratedGraph) -> Vec<Vec<&VertexId>> {
    let verts: Vec<&VertexId> = dg.graph.vertices().collect();
    if verts.is_empty() {
        return Vec::new();
    }
    let mut rank: BTreeMap<&VertexId, usize> = verts.iter().map(|v| (*v, 0)).collect();
    let mut class_count = 1usize;
    loop {
        #[allow(clippy::type_complexity)]
        let mut keys: BTreeMap<&VertexId, (usize, Option<String>, Vec<(LabelCode, PartnerKind)>)> =
            BTreeMap::new();
        for v in &verts {
            let mut local: Vec<(LabelCode, PartnerKind)> = dg
                .graph
                .flags_at(v)
                .iter()
                .map(|f| {
                    let p = dg.graph.partner(f);
                    let kind = if p == f {
                        PartnerKind::Tail
                    } else if dg.graph.boundary_of(p) == *v {
                        PartnerKind::Loop(label_code(dg, p))
                    } else {
                        PartnerKind::Edge(label_code(dg, p), rank[dg.graph.boundary_of(p)])
                    };
                    (label_code(dg, f), kind)
                })
                .collect();
            local.sort();
            keys.insert(
                v,
                (
                    rank[v],
                    dg.decoration.vertex_label(v).map(str::to_owned),
                    local,
                ),
            );
        }
        let mut sorted: Vec<_> = keys.values().cloned().collect();
        sorted.sort();
        sorted.dedup();
        let new_rank: BTreeMap<&VertexId, usize> = verts
            .iter()
            .map(|v| (*v, sorted.binary_search(&keys[*v]).unwrap()))
            .collect();
        let new_count = sorted.len();
        let stable = new_count == class_count && new_rank == rank;
        rank = new_rank;
        class_count = new_count;
        if stable || class_count == verts.len() {
            break;
        }
    }
    let mut classes: BTreeMap<usize, Vec<&VertexId>> = BTreeMap::new();
    for v in verts {
        classes.entry(rank[v]).or_default().push(v);
    }
    classes.into_values().collect()
}

/// Enumerate numberings consistent with the class order (vertices of
/// class k are numbered before class k+1; all permutations within each
/// class), calling `visit` on each.
fn for_each_numbering<'g>(
    classes: &[Vec<&'g VertexId>],
    visit: &mut impl FnMut(&BTreeMap<&'g VertexId, usize>),
) {
    fn permute<'g>(
        classes: &[Vec<&'g VertexId>],
        idx: usize,
        offset: usize,
        current: &mut BTreeMap<&'g VertexId, usize>,
        visit: &mut impl FnMut(&BTreeMap<&'g VertexId, usize>),
    ) {
        if idx == classes.len() {
            visit(current);
            return;
        }
        let class = &classes[idx];
        let mut order: Vec<&VertexId> = class.clone();
        heap_permutations(&mut order, &mut |perm| {
            for (i, v) in perm.iter().enumerate() {
                current.insert(v, offset + i);
            }
            permute(classes, idx + 1, offset + perm.len(), current, visit);
        });
    }
    let mut current = BTreeMap::new();
    permute(classes, 0, 0, &mut current, visit);
}

fn heap_permutations<'g>(items: &mut Vec<&'g VertexId>, visit: &mut impl FnMut(&[&'g VertexId])) {
    fn go<'g>(k: usize, items: &mut Vec<&'g VertexId>, visit: &mut impl FnMut(&[&'g VertexId])) {
        if k <= 1 {
            visit(items);
            return;
        }
        for i in 0..k {
            go(k - 1, items, visit);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    let n = items.len();
    go(n, items, visit);
}

/// Number of decoration-preserving flag bijections extending the identity
/// on vertices: identical parallel edges permute freely, identical tails
/// at one vertex permute freely, and a loop whose halves carry equal
/// labels swaps its halves.
fn vertex_fixing_automorphisms(dg: &DecoratedGraph) -> u128 {
    let mut tails: BTreeMap<(&VertexId, LabelCode), u128> = BTreeMap::new();
    #[allow(clippy::type_complexity)]
    let mut edges: BTreeMap<((&VertexId, LabelCode), (&VertexId, LabelCode)), u128> =
        BTreeMap::new();
    let mut loops: BTreeMap<(&VertexId, LabelCode, LabelCode), (u128, bool)> = BTreeMap::new();
    for f in dg.graph.flags() {
        let p = dg.graph.partner(f);
        let (vf, cf) = (dg.graph.boundary_of(f), label_code(dg, f));
        if p == f {
            *tails.entry((vf, cf)).or_insert(0) += 1;
        } else if f < p {
            let (vp, cp) = (dg.graph.boundary_of(p), label_code(dg, p));
            if vf == vp {
                let (lo, hi) = if cf <= cp { (cf, cp) } else { (cp, cf) };
                let symmetric = lo == hi;
                let e = loops.entry((vf, lo, hi)).or_insert((0, symmetric));
                e.0 += 1;
            } else {
                let (a, b) = if (vf, &cf) <= (vp, &cp) {
                    ((vf, cf), (vp, cp))
                } else {
                    ((vp, cp), (vf, cf))
                };
                *edges.entry((a, b)).or_insert(0) += 1;
            }
        }
    }
    fn factorial(n: u128) -> u128 {
        (1..=n).product::<u128>().max(1)
    }
    let mut count: u128 = 1;
    for m in tails.values() {
        count *= factorial(*m);
    }
    for m in edges.values() {
        count *= factorial(*m);
    }
    for (m, symmetric) in loops.values() {
        count *= factorial(*m);
        if *symmetric {
            count *= 1u128 << *m;
        }
    }
    count
}

fn canonicalize(dg: &DecoratedGraph) -> (CanonicalForm, u128) {
    if dg.graph.vertex_count() == 0 {
        return (
            CanonicalForm(
                Encoding {
                    vertex_labels: vec![],
                    edges: vec![],
                    tails: vec![],
                }
                .to_bytes(),
            ),
            1,
        );
    }
    let classes = refine_classes(dg);
    let mut best: Option<Encoding> = None;
    let mut ties: u128 = 0;
    for_each_numbering(&classes, &mut |number| {
        let enc = encode(dg, number);
        match &best {
            None => {
                best = Some(enc);
                ties = 1;
            }
            Some(b) => {
                if enc < *b {
                    best = Some(enc);
                    ties = 1;
                } else if enc == *b {
                    ties += 1;
                }
            }
        }
    });
    let best = best.expect("non-empty graph has at least one numbering");
    (
        CanonicalForm(best.to_bytes()),
        ties * vertex_fixing_automorphisms(dg),
    )
}

/// Canonical byte string of the decorated-graph isomorphism class.
pub fn canonical_form(dg: &DecoratedGraph) -> CanonicalForm {
    canonicalize(dg).0
}

/// Order of the group of decoration-preserving automorphisms.
///
/// Factored as (vertex permutations extendable to automorphisms) ×
/// (flag bijections fixing every vertex); the first factor is the number
/// of numberings attaining the canonical encoding.
pub fn automorphism_count(dg: &DecoratedGraph) -> u128 {
    canonicalize(dg).1
}

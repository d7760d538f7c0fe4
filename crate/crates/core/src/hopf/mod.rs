//! The bialgebra of decorated graphs and its antipode.
//!
//! The underlying module is the rational span of isomorphism classes of
//! oriented decorated graphs from an admissible family; the product is
//! disjoint union (unit: the empty graph), the coproduct sums over cuts,
//!
//! Δ[τ] = Σ_C [upper part] ⊗ [lower part],
//!
//! and the counit reads off the coefficient of the empty class. With the
//! flag-count grading (or a weighted grading on labels) the bialgebra is
//! connected and graded, so the antipode exists and is computed by the
//! standard recursion S(x) = −x − Σ S(x′)·x″ over the reduced coproduct.

pub mod category;

use crate::graph::canon::{canonical_form, CanonicalForm};
use crate::graph::cut::{apply_cut, enumerate_cuts};
use crate::graph::{disjoint_union, DecoratedGraph, GraphError};
use crate::ratio;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, thiserror::Error)]
pub enum HopfError {
    #[error("elements belong to different admissible families: {0} vs {1}")]
    FamilyMismatch(String, String),
    #[error("graph is outside the admissible family {0}")]
    NotInFamily(String),
    #[error("element has a nonzero empty-graph component; not in the counit kernel")]
    NotReduced,
    #[error("element degree {found} exceeds the stated bound {bound}")]
    DegreeOverflow { found: u32, bound: u32 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// An admissible family of decorated graphs: a name plus a membership
/// predicate, asserted on every graph entering an element and on every
/// cut part produced by the coproduct. Families compare by name.
#[derive(Clone)]
pub struct Family {
    name: String,
    member: Arc<dyn Fn(&DecoratedGraph) -> bool + Send + Sync>,
}

impl Family {
    pub fn new(
        name: &str,
        member: impl Fn(&DecoratedGraph) -> bool + Send + Sync + 'static,
    ) -> Self {
        Family {
            name: name.to_owned(),
            member: Arc::new(member),
        }
    }

    /// All fully oriented decorated graphs. Closed under components,
    /// disjoint unions, and cut parts.
    pub fn all_oriented() -> Self {
        Family::new("oriented", |dg| {
            dg.is_fully_oriented() && dg.validate().is_empty()
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn contains(&self, dg: &DecoratedGraph) -> bool {
        (self.member)(dg)
    }
}

impl PartialEq for Family {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "Family({})", self.name)
    }
}

/// Finite rational combination of isomorphism classes of decorated
/// graphs; disconnected representatives encode products of connected
/// classes, the empty graph is the unit.
#[derive(Clone)]
pub struct HopfElement {
    family: Family,
    terms: BTreeMap<CanonicalForm, (DecoratedGraph, BigRational)>,
}

impl fmt::Debug for HopfElement {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "HopfElement[{}; {} terms]", self.family.name, self.terms.len())
    }
}

impl PartialEq for HopfElement {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family
            && self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(other.terms.iter())
                .all(|((ka, (_, ca)), (kb, (_, cb)))| ka == kb && ca == cb)
    }
}

impl HopfElement {
    pub fn zero(family: Family) -> Self {
        HopfElement {
            family,
            terms: BTreeMap::new(),
        }
    }

    /// The unit: the class of the empty graph with coefficient one.
    pub fn unit(family: Family) -> Self {
        Self::basis(family, &DecoratedGraph::empty()).expect("empty graph is in every family")
    }

    /// A single basis class with coefficient one.
    pub fn basis(family: Family, dg: &DecoratedGraph) -> Result<Self, HopfError> {
        let mut el = Self::zero(family);
        el.add_graph(dg, BigRational::one())?;
        Ok(el)
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn add_graph(&mut self, dg: &DecoratedGraph, coeff: BigRational) -> Result<(), HopfError> {
        if !dg.graph.is_empty() && !self.family.contains(dg) {
            return Err(HopfError::NotInFamily(self.family.name.clone()));
        }
        let key = canonical_form(dg);
        let entry = self
            .terms
            .entry(key)
            .or_insert_with(|| (dg.clone(), BigRational::zero()));
        entry.1 += coeff;
        if entry.1.is_zero() {
            let key = canonical_form(dg);
            self.terms.remove(&key);
        }
        Ok(())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CanonicalForm, &DecoratedGraph, &BigRational)> {
        self.terms.iter().map(|(k, (g, c))| (k, g, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &CanonicalForm) -> BigRational {
        self.terms
            .get(key)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &HopfElement) -> Result<HopfElement, HopfError> {
        self.check_family(other)?;
        let mut out = self.clone();
        for (g, c) in other.terms.values() {
            out.add_graph(g, c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigRational) -> HopfElement {
        if k.is_zero() {
            return HopfElement::zero(self.family.clone());
        }
        let mut out = self.clone();
        for (_, c) in out.terms.values_mut() {
            *c *= k;
        }
        out
    }

    pub fn sub(&self, other: &HopfElement) -> Result<HopfElement, HopfError> {
        self.add(&other.scale(&-BigRational::one()))
    }

    fn check_family(&self, other: &HopfElement) -> Result<(), HopfError> {
        if self.family != other.family {
            return Err(HopfError::FamilyMismatch(
                self.family.name.clone(),
                other.family.name.clone(),
            ));
        }
        Ok(())
    }

    /// Bilinear extension of disjoint union; commutative with unit the
    /// empty class.
    pub fn product(&self, other: &HopfElement) -> Result<HopfElement, HopfError> {
        self.check_family(other)?;
        let mut out = HopfElement::zero(self.family.clone());
        for (ga, ca) in self.terms.values() {
            for (gb, cb) in other.terms.values() {
                out.add_graph(&disjoint_union(ga, gb), ca * cb)?;
            }
        }
        Ok(out)
    }

    /// Coefficient of the empty class.
    pub fn counit(&self) -> BigRational {
        self.coefficient(&canonical_form(&DecoratedGraph::empty()))
    }

    /// Cut coproduct, extended linearly.
    pub fn coproduct(&self) -> Result<TensorElement, HopfError> {
        let mut out = TensorElement::zero(self.family.clone());
        for (g, c) in self.terms.values() {
            for cut in enumerate_cuts(g)? {
                let (upper, lower) = apply_cut(g, &cut)?;
                if !upper.graph.is_empty() && !self.family.contains(&upper) {
                    return Err(HopfError::NotInFamily(self.family.name.clone()));
                }
                if !lower.graph.is_empty() && !self.family.contains(&lower) {
                    return Err(HopfError::NotInFamily(self.family.name.clone()));
                }
                out.add_pair(&upper, &lower, c.clone());
            }
        }
        Ok(out)
    }

    /// Δx − x⊗1 − 1⊗x; requires x in the counit kernel. Every term has
    /// strictly positive degree on both sides.
    pub fn reduced_coproduct(&self) -> Result<TensorElement, HopfError> {
        if !self.counit().is_zero() {
            return Err(HopfError::NotReduced);
        }
        let empty = DecoratedGraph::empty();
        let mut out = self.coproduct()?;
        for (g, c) in self.terms.values() {
            out.add_pair(g, &empty, -c.clone());
            out.add_pair(&empty, g, -c.clone());
        }
        Ok(out)
    }

    /// Largest grading degree in the support.
    pub fn degree(&self, grading: &Grading) -> u32 {
        self.terms
            .values()
            .map(|(g, _)| grading.degree(g))
            .max()
            .unwrap_or(0)
    }

    /// Antipode via the graded recursion, memoized per class. The bound
    /// is a guard: elements supported above it are rejected.
    pub fn antipode(&self, degree_bound: u32) -> Result<HopfElement, HopfError> {
        let grading = Grading::FlagCount;
        let found = self.degree(&grading);
        if found > degree_bound {
            return Err(HopfError::DegreeOverflow {
                found,
                bound: degree_bound,
            });
        }
        let mut memo: BTreeMap<CanonicalForm, HopfElement> = BTreeMap::new();
        let mut out = HopfElement::zero(self.family.clone());
        for (key, (g, c)) in &self.terms {
            let s = self.antipode_of_class(key, g, &mut memo)?;
            out = out.add(&s.scale(c))?;
        }
        Ok(out)
    }

    fn antipode_of_class(
        &self,
        key: &CanonicalForm,
        g: &DecoratedGraph,
        memo: &mut BTreeMap<CanonicalForm, HopfElement>,
    ) -> Result<HopfElement, HopfError> {
        if let Some(hit) = memo.get(key) {
            return Ok(hit.clone());
        }
        let family = self.family.clone();
        if g.graph.is_empty() {
            let unit = HopfElement::unit(family);
            memo.insert(key.clone(), unit.clone());
            return Ok(unit);
        }
        // S[τ] = −[τ] − Σ_{proper cuts} S[upper]·[lower]
        let mut acc = HopfElement::basis(family.clone(), g)?.scale(&-BigRational::one());
        for cut in enumerate_cuts(g)? {
            if !cut.is_proper() {
                continue;
            }
            let (upper, lower) = apply_cut(g, &cut)?;
            let upper_key = canonical_form(&upper);
            let s_upper = self.antipode_of_class(&upper_key, &upper, memo)?;
            let term = s_upper.product(&HopfElement::basis(family.clone(), &lower)?)?;
            acc = acc.sub(&term)?;
        }
        memo.insert(key.clone(), acc.clone());
        Ok(acc)
    }
}

/// Grading of basis classes: flag count, or label weights — each flag
/// contributes its label weight plus one, each vertex its label weight.
#[derive(Clone, Debug)]
pub enum Grading {
    FlagCount,
    Weighted {
        flag_label_weights: BTreeMap<Option<String>, u32>,
        vertex_label_weights: BTreeMap<Option<String>, u32>,
    },
}

impl Grading {
    pub fn degree(&self, dg: &DecoratedGraph) -> u32 {
        match self {
            Grading::FlagCount => dg.graph.flag_count() as u32,
            Grading::Weighted {
                flag_label_weights,
                vertex_label_weights,
            } => {
                let flags: u32 = dg
                    .graph
                    .flags()
                    .map(|f| {
                        let l = dg.decoration.flag_label(f).label;
                        flag_label_weights.get(&l).copied().unwrap_or(0) + 1
                    })
                    .sum();
                let verts: u32 = dg
                    .graph
                    .vertices()
                    .map(|v| {
                        let l = dg.decoration.vertex_label(v).map(str::to_owned);
                        vertex_label_weights.get(&l).copied().unwrap_or(0)
                    })
                    .sum();
                flags + verts
            }
        }
    }
}

/// Element of the two-fold tensor square, keyed by canonical forms of
/// each factor.
#[derive(Clone)]
pub struct TensorElement {
    family: Family,
    terms: BTreeMap<(CanonicalForm, CanonicalForm), (DecoratedGraph, DecoratedGraph, BigRational)>,
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "TensorElement[{}; {} terms]", self.family.name, self.terms.len())
    }
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family
            && self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(other.terms.iter())
                .all(|((ka, (_, _, ca)), (kb, (_, _, cb)))| ka == kb && ca == cb)
    }
}

impl TensorElement {
    pub fn zero(family: Family) -> Self {
        TensorElement {
            family,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_pair(&mut self, left: &DecoratedGraph, right: &DecoratedGraph, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let key = (canonical_form(left), canonical_form(right));
        let entry = self
            .terms
            .entry(key.clone())
            .or_insert_with(|| (left.clone(), right.clone(), BigRational::zero()));
        entry.2 += coeff;
        if entry.2.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(
        &self,
    ) -> impl Iterator<Item = (&CanonicalForm, &CanonicalForm, &DecoratedGraph, &DecoratedGraph, &BigRational)>
    {
        self.terms.iter().map(|((ka, kb), (ga, gb, c))| (ka, kb, ga, gb, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, left: &CanonicalForm, right: &CanonicalForm) -> BigRational {
        self.terms
            .get(&(left.clone(), right.clone()))
            .map(|(_, _, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (ga, gb, c) in other.terms.values() {
            out.add_pair(ga, gb, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigRational) -> TensorElement {
        if k.is_zero() {
            return TensorElement::zero(self.family.clone());
        }
        let mut out = self.clone();
        for (_, _, c) in out.terms.values_mut() {
            *c *= k;
        }
        out
    }

    /// Componentwise product (x⊗y)(u⊗v) = xu ⊗ yv, extended bilinearly.
    pub fn product(&self, other: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero(self.family.clone());
        for (ga, gb, c) in self.terms.values() {
            for (ha, hb, d) in other.terms.values() {
                out.add_pair(&disjoint_union(ga, ha), &disjoint_union(gb, hb), c * d);
            }
        }
        out
    }

    /// Collapse to an element by multiplying the factors.
    pub fn multiply_out(&self) -> Result<HopfElement, HopfError> {
        let mut out = HopfElement::zero(self.family.clone());
        for (ga, gb, c) in self.terms.values() {
            out.add_graph(&disjoint_union(ga, gb), c.clone())?;
        }
        Ok(out)
    }

    /// Contract the left factor with the counit: (ε⊗id).
    pub fn counit_left(&self) -> Result<HopfElement, HopfError> {
        let mut out = HopfElement::zero(self.family.clone());
        for (ga, gb, c) in self.terms.values() {
            if ga.graph.is_empty() {
                out.add_graph(gb, c.clone())?;
            }
        }
        Ok(out)
    }

    /// Contract the right factor with the counit: (id⊗ε).
    pub fn counit_right(&self) -> Result<HopfElement, HopfError> {
        let mut out = HopfElement::zero(self.family.clone());
        for (ga, gb, c) in self.terms.values() {
            if gb.graph.is_empty() {
                out.add_graph(ga, c.clone())?;
            }
        }
        Ok(out)
    }

    /// Apply Δ to the left factor: (Δ⊗id).
    pub fn coproduct_left(&self) -> Result<TensorCube, HopfError> {
        let mut out = TensorCube::zero();
        for (ga, gb, c) in self.terms.values() {
            for cut in enumerate_cuts(ga)? {
                let (u, l) = apply_cut(ga, &cut)?;
                out.add_triple(&u, &l, gb, c.clone());
            }
        }
        Ok(out)
    }

    /// Apply Δ to the right factor: (id⊗Δ).
    pub fn coproduct_right(&self) -> Result<TensorCube, HopfError> {
        let mut out = TensorCube::zero();
        for (ga, gb, c) in self.terms.values() {
            for cut in enumerate_cuts(gb)? {
                let (u, l) = apply_cut(gb, &cut)?;
                out.add_triple(ga, &u, &l, c.clone());
            }
        }
        Ok(out)
    }
}

/// Element of the three-fold tensor power, used for coassociativity
/// checks; coefficients on canonical key triples.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorCube {
    terms: BTreeMap<(CanonicalForm, CanonicalForm, CanonicalForm), BigRational>,
}

impl TensorCube {
    pub fn zero() -> Self {
        TensorCube {
            terms: BTreeMap::new(),
        }
    }

    pub fn add_triple(
        &mut self,
        a: &DecoratedGraph,
        b: &DecoratedGraph,
        c: &DecoratedGraph,
        coeff: BigRational,
    ) {
        if coeff.is_zero() {
            return;
        }
        let key = (canonical_form(a), canonical_form(b), canonical_form(c));
        let entry = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }
}

/// m(S⊗id)Δ(x) — equals (unit)·ε(x) when S is the antipode.
pub fn antipode_convolution_left(x: &HopfElement, degree_bound: u32) -> Result<HopfElement, HopfError> {
    let mut out = HopfElement::zero(x.family().clone());
    for (_, _, ga, gb, c) in x.coproduct()?.terms() {
        let s = HopfElement::basis(x.family().clone(), ga)?.antipode(degree_bound)?;
        let rhs = HopfElement::basis(x.family().clone(), gb)?;
        out = out.add(&s.product(&rhs)?.scale(c))?;
    }
    Ok(out)
}

/// m(id⊗S)Δ(x).
pub fn antipode_convolution_right(x: &HopfElement, degree_bound: u32) -> Result<HopfElement, HopfError> {
    let mut out = HopfElement::zero(x.family().clone());
    for (_, _, ga, gb, c) in x.coproduct()?.terms() {
        let lhs = HopfElement::basis(x.family().clone(), ga)?;
        let s = HopfElement::basis(x.family().clone(), gb)?.antipode(degree_bound)?;
        out = out.add(&lhs.product(&s)?.scale(c))?;
    }
    Ok(out)
}

/// JSON form of an element: array of {"coeff": "p/q", "graph": one graph
/// object or an array of component graphs (a product)}.
pub fn element_to_json(el: &HopfElement) -> String {
    #[derive(serde::Serialize)]
    struct Term {
        coeff: String,
        graph: serde_json::Value,
    }
    let items: Vec<Term> = el
        .terms()
        .map(|(_, g, c)| {
            let comps = g.component_graphs();
            let graph = if comps.len() == 1 {
                serde_json::to_value(&comps[0]).unwrap()
            } else {
                serde_json::to_value(&comps).unwrap()
            };
            Term {
                coeff: ratio::format(c),
                graph,
            }
        })
        .collect();
    serde_json::to_string_pretty(&items).expect("element serialization cannot fail")
}

pub fn element_from_json(family: Family, s: &str) -> Result<HopfElement, HopfError> {
    #[derive(serde::Deserialize)]
    struct Term {
        coeff: String,
        graph: serde_json::Value,
    }
    let items: Vec<Term> =
        serde_json::from_str(s).map_err(GraphError::Parse)?;
    let mut out = HopfElement::zero(family);
    for t in items {
        let graph = if t.graph.is_array() {
            let parts: Vec<DecoratedGraph> =
                serde_json::from_value(t.graph).map_err(GraphError::Parse)?;
            crate::graph::disjoint_union_all(&parts)
        } else {
            serde_json::from_value(t.graph).map_err(GraphError::Parse)?
        };
        let coeff = ratio::parse(&t.coeff)
            .map_err(|e| GraphError::Parse(serde::de::Error::custom(e.to_string())))?;
        out.add_graph(&graph, coeff)?;
    }
    Ok(out)
}

//! Partial self-maps on finite carriers, their pointed totalization, and
//! the shift-permutation reduction to bijections.
//!
//! A partial map φ on X extends to a total pointed map f on X ∪ {*} by
//! sending everything outside the definition domain (and * itself) to *.
//! Given an abelian group law on X ∪ {*} with neutral element *, the
//! shift map f̃(x, y) = (x + f(y), y) is a permutation of (X ∪ {*})²,
//! inverted by (x, y) ↦ (x − f(y), y). Its fixed points are exactly the
//! pairs whose column satisfies f(y) = *; the report records the full
//! observed fixed-point set rather than presuming it is a single point.

use super::PrimError;
use std::collections::{BTreeMap, BTreeSet};

pub const BASEPOINT: &str = "*";

/// Partial self-map on a finite carrier X (the basepoint is not in X);
/// the definition domain is the key set of the table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialSelfMap {
    pub carrier: BTreeSet<String>,
    pub table: BTreeMap<String, String>,
}

impl PartialSelfMap {
    pub fn new(
        carrier: impl IntoIterator<Item = String>,
        table: impl IntoIterator<Item = (String, String)>,
    ) -> Result<Self, PrimError> {
        let carrier: BTreeSet<String> = carrier.into_iter().collect();
        let table: BTreeMap<String, String> = table.into_iter().collect();
        if carrier.contains(BASEPOINT) {
            return Err(PrimError::CarrierMismatch(format!(
                "the carrier may not contain the basepoint symbol {BASEPOINT:?}"
            )));
        }
        for (k, v) in &table {
            if !carrier.contains(k) || !carrier.contains(v) {
                return Err(PrimError::CarrierMismatch(format!(
                    "table entry {k} → {v} leaves the carrier"
                )));
            }
        }
        Ok(PartialSelfMap { carrier, table })
    }

    pub fn domain(&self) -> BTreeSet<String> {
        self.table.keys().cloned().collect()
    }
}

/// Total self-map of X ∪ {*} fixing the basepoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedSelfMap {
    /// Carrier including the basepoint.
    pub carrier: BTreeSet<String>,
    pub table: BTreeMap<String, String>,
}

impl PointedSelfMap {
    /// Definition domain of the underlying partial map: the non-basepoint
    /// elements not sent to the basepoint.
    pub fn partial_domain(&self) -> BTreeSet<String> {
        self.table
            .iter()
            .filter(|(k, v)| *k != BASEPOINT && *v != BASEPOINT)
            .map(|(k, _)| k.clone())
            .collect()
    }

    pub fn apply(&self, x: &str) -> &str {
        &self.table[x]
    }
}

/// Extend a partial map to a total pointed map: f = φ on the definition
/// domain, f = * elsewhere, f(*) = *.
pub fn totalize(phi: &PartialSelfMap) -> PointedSelfMap {
    let mut carrier = phi.carrier.clone();
    carrier.insert(BASEPOINT.to_owned());
    let table = carrier
        .iter()
        .map(|x| {
            let y = phi
                .table
                .get(x)
                .cloned()
                .unwrap_or_else(|| BASEPOINT.to_owned());
            (x.clone(), y)
        })
        .collect();
    PointedSelfMap { carrier, table }
}

/// Finite abelian group law with a designated zero element.
#[derive(Clone, Debug)]
pub struct GroupLaw {
    pub elements: BTreeSet<String>,
    pub zero: String,
    add: BTreeMap<(String, String), String>,
    neg: BTreeMap<String, String>,
}

impl GroupLaw {
    pub fn new(
        elements: impl IntoIterator<Item = String>,
        zero: &str,
        add: impl IntoIterator<Item = ((String, String), String)>,
    ) -> Result<Self, PrimError> {
        let elements: BTreeSet<String> = elements.into_iter().collect();
        let add: BTreeMap<(String, String), String> = add.into_iter().collect();
        if !elements.contains(zero) {
            return Err(PrimError::BadGroupLaw("zero not in the carrier".into()));
        }
        for a in &elements {
            for b in &elements {
                let s = add
                    .get(&(a.clone(), b.clone()))
                    .ok_or_else(|| PrimError::BadGroupLaw(format!("{a} + {b} undefined")))?;
                if !elements.contains(s) {
                    return Err(PrimError::BadGroupLaw(format!("{a} + {b} leaves the carrier")));
                }
                if add[&(a.clone(), b.clone())] != add[&(b.clone(), a.clone())] {
                    return Err(PrimError::BadGroupLaw(format!("{a} + {b} not commutative")));
                }
            }
        }
        for a in &elements {
            if add[&(zero.to_owned(), a.clone())] != *a {
                return Err(PrimError::BadGroupLaw(format!("{zero} is not neutral on {a}")));
            }
        }
        for a in &elements {
            for b in &elements {
                for c in &elements {
                    let ab_c = &add[&(add[&(a.clone(), b.clone())].clone(), c.clone())];
                    let a_bc = &add[&(a.clone(), add[&(b.clone(), c.clone())].clone())];
                    if ab_c != a_bc {
                        return Err(PrimError::BadGroupLaw(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut neg = BTreeMap::new();
        for a in &elements {
            let inv = elements
                .iter()
                .find(|b| add[&(a.clone(), (*b).clone())] == *zero)
                .ok_or_else(|| PrimError::BadGroupLaw(format!("{a} has no inverse")))?;
            neg.insert(a.clone(), inv.clone());
        }
        Ok(GroupLaw {
            elements,
            zero: zero.to_owned(),
            add,
            neg,
        })
    }

    /// ℤ/n with zero named "*" and the nonzero residues "1", .., "n−1".
    pub fn pointed_cyclic(n: u64) -> GroupLaw {
        let name = |k: u64| {
            if k == 0 {
                BASEPOINT.to_owned()
            } else {
                k.to_string()
            }
        };
        let elements: Vec<String> = (0..n).map(name).collect();
        let add = (0..n).flat_map(|a| {
            let name = &name;
            (0..n).map(move |b| ((name(a), name(b)), name((a + b) % n)))
        });
        GroupLaw::new(elements, BASEPOINT, add).expect("cyclic law is a group")
    }

    pub fn add(&self, a: &str, b: &str) -> &str {
        &self.add[&(a.to_owned(), b.to_owned())]
    }

    pub fn sub(&self, a: &str, b: &str) -> &str {
        self.add(a, &self.neg[b])
    }
}

pub type Pair = (String, String);

/// Result of the shift-permutation construction.
#[derive(Clone, Debug)]
pub struct ShiftPermutation {
    /// f̃(x, y) = (x + f(y), y) on (X ∪ {*})².
    pub forward: BTreeMap<Pair, Pair>,
    /// (x, y) ↦ (x − f(y), y).
    pub inverse: BTreeMap<Pair, Pair>,
    /// (X ∪ {*}) × (D(φ) ∪ {*}) — where the shift is computable from φ.
    pub computable_domain: BTreeSet<Pair>,
    pub fixed_points: BTreeSet<Pair>,
    pub fixed_points_in_domain: BTreeSet<Pair>,
    /// Whether the complement of the computable domain consists of fixed
    /// points only.
    pub complement_all_fixed: bool,
    /// Whether (*, *) is the only fixed point inside the computable
    /// domain. Observed false whenever X is non-empty: the whole column
    /// y = * is fixed because f(*) = * is the group zero.
    pub unique_fixed_point_in_domain: bool,
}

/// Build the shift permutation of a total pointed map with respect to a
/// group law on its carrier (zero must be the basepoint).
pub fn bijectivize(f: &PointedSelfMap, law: &GroupLaw) -> Result<ShiftPermutation, PrimError> {
    if law.elements != f.carrier {
        return Err(PrimError::CarrierMismatch(
            "group law carrier differs from the map carrier".into(),
        ));
    }
    if law.zero != BASEPOINT {
        return Err(PrimError::BadGroupLaw("zero must be the basepoint".into()));
    }
    let mut forward = BTreeMap::new();
    let mut inverse = BTreeMap::new();
    for x in &f.carrier {
        for y in &f.carrier {
            let fy = f.apply(y);
            forward.insert(
                (x.clone(), y.clone()),
                (law.add(x, fy).to_owned(), y.clone()),
            );
            inverse.insert(
                (x.clone(), y.clone()),
                (law.sub(x, fy).to_owned(), y.clone()),
            );
        }
    }
    let images: BTreeSet<&Pair> = forward.values().collect();
    debug_assert_eq!(images.len(), forward.len(), "shift map is a bijection");
    let domain: BTreeSet<Pair> = {
        let mut cols = f.partial_domain();
        cols.insert(BASEPOINT.to_owned());
        f.carrier
            .iter()
            .flat_map(|x| cols.iter().map(move |y| (x.clone(), y.clone())))
            .collect()
    };
    let fixed_points: BTreeSet<Pair> = forward
        .iter()
        .filter(|(k, v)| k == v)
        .map(|(k, _)| k.clone())
        .collect();
    let fixed_in_domain: BTreeSet<Pair> = fixed_points.intersection(&domain).cloned().collect();
    let complement_all_fixed = forward
        .keys()
        .filter(|p| !domain.contains(*p))
        .all(|p| fixed_points.contains(p));
    let star_pair = (BASEPOINT.to_owned(), BASEPOINT.to_owned());
    Ok(ShiftPermutation {
        unique_fixed_point_in_domain: fixed_in_domain.len() == 1
            && fixed_in_domain.contains(&star_pair),
        complement_all_fixed,
        fixed_points_in_domain: fixed_in_domain,
        fixed_points,
        computable_domain: domain,
        forward,
        inverse,
    })
}

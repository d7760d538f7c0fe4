//! The composition bialgebra of a finite category.
//!
//! On the symmetric algebra generated by the morphisms, the diagonal
//! Δ(f) = Σ_{g∘h = f} h ⊗ g is coassociative: both iterates enumerate
//! the triple decompositions of f.

use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error)]
pub enum CategoryError {
    #[error("unknown object {0:?}")]
    UnknownObject(String),
    #[error("unknown morphism {0:?}")]
    UnknownMorphism(String),
    #[error("composition {g} ∘ {h} is {problem}")]
    BadComposition { g: String, h: String, problem: String },
    #[error("missing identity on object {0:?}")]
    MissingIdentity(String),
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(String, String, String),
    #[error("identity law fails for {0}")]
    BrokenIdentity(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// A finite category with an explicit composition table, validated on
/// construction.
#[derive(Clone, Debug)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: BTreeMap<String, Morphism>,
    /// (g, h) ↦ g∘h for every composable pair (target of h = source of g).
    compose: BTreeMap<(String, String), String>,
    identities: BTreeMap<String, String>,
}

impl FiniteCategory {
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        compose: BTreeMap<(String, String), String>,
        identities: BTreeMap<String, String>,
    ) -> Result<Self, CategoryError> {
        let cat = FiniteCategory {
            objects,
            morphisms: morphisms.into_iter().map(|m| (m.name.clone(), m)).collect(),
            compose,
            identities,
        };
        cat.validate()?;
        Ok(cat)
    }

    fn validate(&self) -> Result<(), CategoryError> {
        for m in self.morphisms.values() {
            for obj in [&m.source, &m.target] {
                if !self.objects.contains(obj) {
                    return Err(CategoryError::UnknownObject(obj.clone()));
                }
            }
        }
        for obj in &self.objects {
            let id = self
                .identities
                .get(obj)
                .ok_or_else(|| CategoryError::MissingIdentity(obj.clone()))?;
            let m = self
                .morphisms
                .get(id)
                .ok_or_else(|| CategoryError::UnknownMorphism(id.clone()))?;
            if m.source != *obj || m.target != *obj {
                return Err(CategoryError::BrokenIdentity(id.clone()));
            }
        }
        // composition total on composable pairs, typed, and nowhere else
        for g in self.morphisms.values() {
            for h in self.morphisms.values() {
                let key = (g.name.clone(), h.name.clone());
                match self.compose.get(&key) {
                    Some(gh) if h.target == g.source => {
                        let m = self
                            .morphisms
                            .get(gh)
                            .ok_or_else(|| CategoryError::UnknownMorphism(gh.clone()))?;
                        if m.source != h.source || m.target != g.target {
                            return Err(CategoryError::BadComposition {
                                g: g.name.clone(),
                                h: h.name.clone(),
                                problem: format!("typed {} → {}", m.source, m.target),
                            });
                        }
                    }
                    Some(_) => {
                        return Err(CategoryError::BadComposition {
                            g: g.name.clone(),
                            h: h.name.clone(),
                            problem: "defined on a non-composable pair".into(),
                        })
                    }
                    None if h.target == g.source => {
                        return Err(CategoryError::BadComposition {
                            g: g.name.clone(),
                            h: h.name.clone(),
                            problem: "undefined".into(),
                        })
                    }
                    None => {}
                }
            }
        }
        for m in self.morphisms.values() {
            let id_t = &self.identities[&m.target];
            let id_s = &self.identities[&m.source];
            if self.compose[&(id_t.clone(), m.name.clone())] != m.name
                || self.compose[&(m.name.clone(), id_s.clone())] != m.name
            {
                return Err(CategoryError::BrokenIdentity(m.name.clone()));
            }
        }
        for f in self.morphisms.values() {
            for g in self.morphisms.values() {
                if g.target != f.source {
                    continue;
                }
                for h in self.morphisms.values() {
                    if h.target != g.source {
                        continue;
                    }
                    let fg = &self.compose[&(f.name.clone(), g.name.clone())];
                    let gh = &self.compose[&(g.name.clone(), h.name.clone())];
                    if self.compose[&(fg.clone(), h.name.clone())]
                        != self.compose[&(f.name.clone(), gh.clone())]
                    {
                        return Err(CategoryError::NotAssociative(
                            f.name.clone(),
                            g.name.clone(),
                            h.name.clone(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn morphisms(&self) -> impl Iterator<Item = &Morphism> {
        self.morphisms.values()
    }

    pub fn morphism(&self, name: &str) -> Result<&Morphism, CategoryError> {
        self.morphisms
            .get(name)
            .ok_or_else(|| CategoryError::UnknownMorphism(name.to_owned()))
    }

    pub fn compose(&self, g: &str, h: &str) -> Option<&String> {
        self.compose.get(&(g.to_owned(), h.to_owned()))
    }

    /// The poset category 0 → 1 → … → n−1 with all composites.
    pub fn poset_chain(n: usize) -> FiniteCategory {
        let objects: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let mut morphisms = Vec::new();
        let mut identities = BTreeMap::new();
        for i in 0..n {
            for j in i..n {
                let name = format!("{i}to{j}");
                morphisms.push(Morphism {
                    name: name.clone(),
                    source: i.to_string(),
                    target: j.to_string(),
                });
                if i == j {
                    identities.insert(i.to_string(), name);
                }
            }
        }
        let mut compose = BTreeMap::new();
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    compose.insert(
                        (format!("{j}to{k}"), format!("{i}to{j}")),
                        format!("{i}to{k}"),
                    );
                }
            }
        }
        FiniteCategory::new(objects, morphisms, compose, identities).expect("poset chain is a category")
    }

    /// Two objects X, Y; one extra endomorphism e of X with e∘e = id_X.
    pub fn with_involutive_endomorphism() -> FiniteCategory {
        let objects = vec!["X".to_owned(), "Y".to_owned()];
        let morphisms = vec![
            Morphism {
                name: "idX".into(),
                source: "X".into(),
                target: "X".into(),
            },
            Morphism {
                name: "idY".into(),
                source: "Y".into(),
                target: "Y".into(),
            },
            Morphism {
                name: "e".into(),
                source: "X".into(),
                target: "X".into(),
            },
        ];
        let mut compose = BTreeMap::new();
        let table = [
            ("idX", "idX", "idX"),
            ("idX", "e", "e"),
            ("e", "idX", "e"),
            ("e", "e", "idX"),
            ("idY", "idY", "idY"),
        ];
        for (g, h, gh) in table {
            compose.insert((g.to_owned(), h.to_owned()), gh.to_owned());
        }
        let identities = [("X", "idX"), ("Y", "idY")]
            .map(|(o, i)| (o.to_owned(), i.to_owned()))
            .into_iter()
            .collect();
        FiniteCategory::new(objects, morphisms, compose, identities)
            .expect("two-object category with involution is a category")
    }
}

/// Tensor square of the morphism span: coefficients on name pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct MorphismTensor {
    pub terms: BTreeMap<(String, String), BigRational>,
}

/// Tensor cube, for coassociativity checks.
#[derive(Clone, Debug, PartialEq)]
pub struct MorphismTensorCube {
    pub terms: BTreeMap<(String, String, String), BigRational>,
}

fn bump<K: Ord>(map: &mut BTreeMap<K, BigRational>, key: K) {
    use num_traits::One;
    let e = map.entry(key).or_insert_with(BigRational::zero);
    *e += BigRational::one();
}

/// Δ(f) = Σ_{g∘h = f} h ⊗ g over all composable factorizations,
/// identity factorizations included.
pub fn category_coproduct(cat: &FiniteCategory, f: &str) -> Result<MorphismTensor, CategoryError> {
    cat.morphism(f)?;
    let mut terms = BTreeMap::new();
    for g in cat.morphisms() {
        for h in cat.morphisms() {
            if cat.compose(&g.name, &h.name).map(String::as_str) == Some(f) {
                bump(&mut terms, (h.name.clone(), g.name.clone()));
            }
        }
    }
    Ok(MorphismTensor { terms })
}

/// (Δ⊗id)Δ(f) expanded to name triples.
pub fn coproduct_then_left(cat: &FiniteCategory, f: &str) -> Result<MorphismTensorCube, CategoryError> {
    let mut terms = BTreeMap::new();
    for ((h, g), c) in category_coproduct(cat, f)?.terms {
        let inner = category_coproduct(cat, &h)?;
        for ((l, k), d) in inner.terms {
            let e = terms.entry((l, k, g.clone())).or_insert_with(BigRational::zero);
            *e += &c * &d;
        }
    }
    Ok(MorphismTensorCube { terms })
}

/// (id⊗Δ)Δ(f) expanded to name triples.
pub fn coproduct_then_right(cat: &FiniteCategory, f: &str) -> Result<MorphismTensorCube, CategoryError> {
    let mut terms = BTreeMap::new();
    for ((h, g), c) in category_coproduct(cat, f)?.terms {
        let inner = category_coproduct(cat, &g)?;
        for ((e2, d2), d) in inner.terms {
            let e = terms
                .entry((h.clone(), e2, d2))
                .or_insert_with(BigRational::zero);
            *e += &c * &d;
        }
    }
    Ok(MorphismTensorCube { terms })
}

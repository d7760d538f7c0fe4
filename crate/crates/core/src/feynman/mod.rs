//! The finite-dimensional Gaussian toy model.
//!
//! A model is a finite color set A, an invertible symmetric rational
//! metric g over A, and a family of symmetric coupling tensors C indexed
//! by sorted color multisets. The partition function of the model is a
//! formal series in the coupling symbols and a formal Laurent parameter
//! λ; couplings carry weight equal to their rank and every operation
//! truncates by total coupling weight.
//!
//! Metric entries are evaluated numerically (exact rationals); coupling
//! symbols stay formal so that series identities can be compared
//! coefficient by coefficient. [`FormalSeries::evaluate`] substitutes the
//! model's coupling values when a plain rational is wanted.

pub mod quadrature;
pub mod series;

use crate::ratio;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Debug, thiserror::Error)]
pub enum FeynmanError {
    #[error("metric is not square")]
    MetricNotSquare,
    #[error("metric is not symmetric")]
    MetricNotSymmetric,
    #[error("metric is singular")]
    MetricSingular,
    #[error("metric is not positive definite")]
    MetricNotPositiveDefinite,
    #[error("unknown color {0:?}")]
    UnknownColor(String),
    #[error("no coupling of rank {rank} (vertex of valence {rank} has no tensor)")]
    MissingCoupling { rank: usize },
    #[error("quadrature supports at most two colors, model has {0}")]
    TooManyColors(usize),
    #[error("graph error: {0}")]
    Graph(#[from] crate::graph::GraphError),
    #[error("model parse error: {0}")]
    Parse(String),
}

/// Symbol of one coupling tensor entry: the sorted multiset of color
/// indices. Rank = number of indices = coupling weight.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CouplingSym(Vec<usize>);

impl CouplingSym {
    pub fn new(mut colors: Vec<usize>) -> Self {
        colors.sort_unstable();
        CouplingSym(colors)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn colors(&self) -> &[usize] {
        &self.0
    }
}

/// One series monomial: coupling symbols with exponents, and a power of
/// λ (negative powers allowed).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial {
    pub couplings: BTreeMap<CouplingSym, u32>,
    pub lambda: i64,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn coupling(sym: CouplingSym) -> Self {
        Monomial {
            couplings: [(sym, 1)].into_iter().collect(),
            lambda: 0,
        }
    }

    pub fn lambda_power(k: i64) -> Self {
        Monomial {
            couplings: BTreeMap::new(),
            lambda: k,
        }
    }

    /// Total coupling weight: Σ rank·exponent.
    pub fn weight(&self) -> u32 {
        self.couplings
            .iter()
            .map(|(s, e)| s.rank() as u32 * e)
            .sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let mut couplings = self.couplings.clone();
        for (s, e) in &other.couplings {
            *couplings.entry(s.clone()).or_insert(0) += e;
        }
        Monomial {
            couplings,
            lambda: self.lambda + other.lambda,
        }
    }
}

/// Formal series in coupling symbols and λ, truncated by total coupling
/// weight. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalSeries {
    terms: BTreeMap<Monomial, BigRational>,
    weight_cap: u32,
}

impl fmt::Debug for FormalSeries {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(
            f,
            "FormalSeries(cap {}; {} terms)",
            self.weight_cap,
            self.terms.len()
        )
    }
}

impl FormalSeries {
    pub fn zero(weight_cap: u32) -> Self {
        FormalSeries {
            terms: BTreeMap::new(),
            weight_cap,
        }
    }

    pub fn one(weight_cap: u32) -> Self {
        Self::from_term(Monomial::one(), BigRational::one(), weight_cap)
    }

    pub fn from_term(m: Monomial, c: BigRational, weight_cap: u32) -> Self {
        let mut s = Self::zero(weight_cap);
        s.add_term(m, c);
        s
    }

    pub fn weight_cap(&self) -> u32 {
        self.weight_cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Smallest coupling weight present, or `None` for the zero series.
    pub fn min_weight(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::weight).min()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() || m.weight() > self.weight_cap {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &FormalSeries) -> FormalSeries {
        let mut out = FormalSeries::zero(self.weight_cap.min(other.weight_cap));
        for (m, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FormalSeries) -> FormalSeries {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, k: &BigRational) -> FormalSeries {
        let mut out = FormalSeries::zero(self.weight_cap);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &FormalSeries) -> FormalSeries {
        let mut out = FormalSeries::zero(self.weight_cap.min(other.weight_cap));
        for (ma, ca) in &self.terms {
            if ma.weight() > out.weight_cap {
                continue;
            }
            for (mb, cb) in &other.terms {
                let m = ma.times(mb);
                if m.weight() <= out.weight_cap {
                    out.add_term(m, ca * cb);
                }
            }
        }
        out
    }

    pub fn lambda_shift(&self, k: i64) -> FormalSeries {
        let mut out = FormalSeries::zero(self.weight_cap);
        for (m, c) in &self.terms {
            let mut m = m.clone();
            m.lambda += k;
            out.add_term(m, c.clone());
        }
        out
    }

    /// Substitute λ = 1 (collapse the λ grading).
    pub fn at_lambda_one(&self) -> FormalSeries {
        let mut out = FormalSeries::zero(self.weight_cap);
        for (m, c) in &self.terms {
            let mut m = m.clone();
            m.lambda = 0;
            out.add_term(m, c.clone());
        }
        out
    }

    /// exp of a series with no weight-0 part.
    pub fn exp(&self) -> FormalSeries {
        assert!(
            self.min_weight().is_none_or(|w| w >= 1),
            "exp needs a series with positive minimal weight"
        );
        let mut out = FormalSeries::one(self.weight_cap);
        let mut power = FormalSeries::one(self.weight_cap);
        let mut factorial = BigRational::one();
        for n in 1..=self.weight_cap as i64 {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            factorial *= ratio::int(n);
            out = out.add(&power.scale(&factorial.recip()));
        }
        out
    }

    /// log of a series of the form 1 + (positive-weight part).
    pub fn log(&self) -> FormalSeries {
        let one = FormalSeries::one(self.weight_cap);
        let y = self.sub(&one);
        assert!(
            self.coefficient(&Monomial::one()) == BigRational::one()
                && y.min_weight().is_none_or(|w| w >= 1),
            "log needs a series of the form 1 + higher order"
        );
        let mut out = FormalSeries::zero(self.weight_cap);
        let mut power = FormalSeries::one(self.weight_cap);
        for n in 1..=self.weight_cap as i64 {
            power = power.mul(&y);
            if power.is_zero() {
                break;
            }
            let sign = if n % 2 == 1 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            out = out.add(&power.scale(&(sign / ratio::int(n))));
        }
        out
    }

    /// Formal derivative with respect to one coupling symbol.
    pub fn d_coupling(&self, sym: &CouplingSym) -> FormalSeries {
        let mut out = FormalSeries::zero(self.weight_cap);
        for (m, c) in &self.terms {
            if let Some(e) = m.couplings.get(sym) {
                let mut m2 = m.clone();
                if *e == 1 {
                    m2.couplings.remove(sym);
                } else {
                    m2.couplings.insert(sym.clone(), e - 1);
                }
                out.add_term(m2, c * ratio::int(*e as i64));
            }
        }
        out
    }

    /// Substitute the model's coupling values and a value for λ.
    pub fn evaluate(
        &self,
        model: &Model,
        lambda: &BigRational,
    ) -> Result<BigRational, FeynmanError> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (sym, e) in &m.couplings {
                let base = model
                    .coupling(sym)
                    .ok_or(FeynmanError::MissingCoupling { rank: sym.rank() })?;
                for _ in 0..*e {
                    v *= &base;
                }
            }
            if m.lambda >= 0 {
                for _ in 0..m.lambda {
                    v *= lambda;
                }
            } else {
                for _ in 0..(-m.lambda) {
                    v /= lambda;
                }
            }
            total += v;
        }
        Ok(total)
    }
}

/// Polynomial in the field coordinates φ^a with [`FormalSeries`]
/// coefficients; keys are sorted color multisets.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldPolynomial {
    pub terms: BTreeMap<Vec<usize>, FormalSeries>,
}

impl FieldPolynomial {
    pub fn new() -> Self {
        FieldPolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, mut phi: Vec<usize>, coeff: FormalSeries) {
        phi.sort_unstable();
        let cap = coeff.weight_cap();
        let entry = self
            .terms
            .entry(phi)
            .or_insert_with(|| FormalSeries::zero(cap));
        *entry = entry.add(&coeff);
        self.terms.retain(|_, s| !s.is_zero());
    }

    /// ∂/∂φ^a.
    pub fn partial(&self, a: usize) -> FieldPolynomial {
        let mut out = FieldPolynomial::new();
        for (phi, coeff) in &self.terms {
            let mult = phi.iter().filter(|&&x| x == a).count();
            if mult == 0 {
                continue;
            }
            let mut reduced = phi.clone();
            let pos = reduced.iter().position(|&x| x == a).unwrap();
            reduced.remove(pos);
            out.add_term(reduced, coeff.scale(&ratio::int(mult as i64)));
        }
        out
    }

    /// Substitute a series for every φ^a.
    pub fn eval(&self, phi: &[FormalSeries], cap: u32) -> FormalSeries {
        let mut out = FormalSeries::zero(cap);
        for (key, coeff) in &self.terms {
            let mut term = coeff.clone();
            for &a in key {
                term = term.mul(&phi[a]);
            }
            out = out.add(&term);
        }
        out
    }
}

impl Default for FieldPolynomial {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Clone, Debug)]
pub struct Model {
    colors: Vec<String>,
    metric: Vec<Vec<BigRational>>,
    metric_inv: Vec<Vec<BigRational>>,
    couplings: BTreeMap<CouplingSym, BigRational>,
}

impl Model {
    pub fn new(
        colors: Vec<String>,
        metric: Vec<Vec<BigRational>>,
        couplings: impl IntoIterator<Item = (Vec<usize>, BigRational)>,
    ) -> Result<Self, FeynmanError> {
        let n = colors.len();
        if metric.len() != n || metric.iter().any(|row| row.len() != n) {
            return Err(FeynmanError::MetricNotSquare);
        }
        #[allow(clippy::needless_range_loop)]
        for i in 0..n {
            for j in 0..i {
                if metric[i][j] != metric[j][i] {
                    return Err(FeynmanError::MetricNotSymmetric);
                }
            }
        }
        let metric_inv = invert(&metric).ok_or(FeynmanError::MetricSingular)?;
        let couplings = couplings
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (CouplingSym::new(k), v))
            .collect();
        Ok(Model {
            colors,
            metric,
            metric_inv,
            couplings,
        })
    }

    pub fn color_count(&self) -> usize {
        self.colors.len()
    }

    pub fn colors(&self) -> &[String] {
        &self.colors
    }

    pub fn metric(&self, a: usize, b: usize) -> &BigRational {
        &self.metric[a][b]
    }

    /// Entry of the inverse metric g^{ab}.
    pub fn metric_inv(&self, a: usize, b: usize) -> &BigRational {
        &self.metric_inv[a][b]
    }

    pub fn coupling(&self, sym: &CouplingSym) -> Option<BigRational> {
        self.couplings.get(sym).cloned()
    }

    pub fn coupling_supported(&self, sym: &CouplingSym) -> bool {
        self.couplings.contains_key(sym)
    }

    pub fn couplings(&self) -> impl Iterator<Item = (&CouplingSym, &BigRational)> {
        self.couplings.iter()
    }

    /// Ranks that carry at least one nonzero coupling entry.
    pub fn supported_ranks(&self) -> BTreeSet<usize> {
        self.couplings.keys().map(CouplingSym::rank).collect()
    }

    pub fn max_rank(&self) -> usize {
        self.supported_ranks().into_iter().max().unwrap_or(0)
    }

    /// Exact positive-definiteness of g via leading principal minors.
    pub fn metric_positive_definite(&self) -> bool {
        let n = self.colors.len();
        (1..=n).all(|k| {
            let minor: Vec<Vec<BigRational>> = self.metric[..k]
                .iter()
                .map(|row| row[..k].to_vec())
                .collect();
            determinant(&minor).is_positive()
        })
    }

    pub fn color_index(&self, name: &str) -> Result<usize, FeynmanError> {
        self.colors
            .iter()
            .position(|c| c == name)
            .ok_or_else(|| FeynmanError::UnknownColor(name.to_owned()))
    }

    pub fn from_json(s: &str) -> Result<Self, FeynmanError> {
        let raw: ModelJson =
            serde_json::from_str(s).map_err(|e| FeynmanError::Parse(e.to_string()))?;
        let metric = raw
            .g
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| ratio::parse(s))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| FeynmanError::Parse(e.to_string()))?;
        let mut couplings = Vec::new();
        let color_index = |name: &str| {
            raw.colors
                .iter()
                .position(|c| c == name)
                .ok_or_else(|| FeynmanError::UnknownColor(name.to_owned()))
        };
        for (key, val) in &raw.c {
            let idx: Vec<usize> = key
                .split(',')
                .map(|n| color_index(n.trim()))
                .collect::<Result<_, _>>()?;
            if idx.is_empty() {
                return Err(FeynmanError::Parse(format!("empty coupling key {key:?}")));
            }
            couplings.push((
                idx,
                ratio::parse(val).map_err(|e| FeynmanError::Parse(e.to_string()))?,
            ));
        }
        Model::new(raw.colors, metric, couplings)
    }

    pub fn to_json(&self) -> String {
        let raw = ModelJson {
            colors: self.colors.clone(),
            g: self
                .metric
                .iter()
                .map(|row| row.iter().map(ratio::format).collect())
                .collect(),
            c: self
                .couplings
                .iter()
                .map(|(sym, v)| {
                    let key = sym
                        .colors()
                        .iter()
                        .map(|&i| self.colors[i].clone())
                        .collect::<Vec<_>>()
                        .join(",");
                    (key, ratio::format(v))
                })
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("model serialization cannot fail")
    }
}

#[derive(Serialize, Deserialize)]
struct ModelJson {
    colors: Vec<String>,
    g: Vec<Vec<String>>,
    #[serde(rename = "C")]
    c: BTreeMap<String, String>,
}

fn determinant(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero());
        let Some(p) = pivot else {
            return BigRational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        det *= a[col][col].clone();
        let inv = a[col][col].recip();
        for r in col + 1..n {
            let factor = &a[r][col] * &inv;
            #[allow(clippy::needless_range_loop)]
            for c in col..n {
                let sub = &factor * &a[col][c];
                a[r][c] -= sub;
            }
        }
    }
    det
}

fn invert(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(pivot, col);
        inv.swap(pivot, col);
        let scale = a[col][col].recip();
        for c in 0..n {
            a[col][c] *= &scale;
            inv[col][c] *= &scale;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            #[allow(clippy::needless_range_loop)]
            for c in 0..n {
                let s = &factor * &a[col][c];
                a[r][c] -= s;
                let s = &factor * &inv[col][c];
                inv[r][c] -= s;
            }
        }
    }
    Some(inv)
}

/// n! as an exact rational.
pub(crate) fn factorial(n: u64) -> BigRational {
    let mut v = BigInt::one();
    for k in 2..=n {
        v *= BigInt::from(k);
    }
    BigRational::from_integer(v)
}

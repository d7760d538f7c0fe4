//! Sequence algebras and their summation operators.
//!
//! Finite truncations f₁..f_N of infinite sequences carry three
//! commutative products: pointwise (unit all-ones), max-convolution
//! (f*g)_n = Σ_{max(p,q)=n} f_p g_q (unit (1,0,0,…)), and Cauchy
//! convolution (f×g)_n = Σ_{p+q=n} f_p g_q, which is non-unital because
//! indices start at 1. Partial summation S(f)_N = Σ_{n≤N} f_n is an
//! isomorphism (S,*) → (S,•) and, as a map of (S,*) into itself, a
//! Rota–Baxter operator of weight −1 in the sign convention
//! R(f)R(g) = R(R(f)g + fR(g) + θfg) — the same weight as an idempotent
//! polar projection, which the summation report makes checkable here.

pub mod fit;
pub mod gamma;
pub mod norm;
pub mod timing;

use crate::ratio;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, thiserror::Error)]
pub enum SeqError {
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("mode mismatch: exact vs float")]
    ModeMismatch,
    #[error("negative entry at index {0}")]
    NegativeEntry(usize),
    #[error("sequence too short: need at least {need} entries, have {have}")]
    TooShort { need: usize, have: usize },
    #[error("graph has an oriented wheel; running time undefined")]
    NotDirected,
    #[error("no cost supplied for vertex {0}")]
    MissingCost(crate::graph::VertexId),
    #[error("negative cost on vertex {0}")]
    NegativeCost(crate::graph::VertexId),
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
    #[error("sequence parse error: {0}")]
    Parse(String),
}

/// Product choice for sequence multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqProduct {
    Pointwise,
    MaxConv,
    Cauchy,
}

/// A finite truncation f₁..f_N, exact or floating.
#[derive(Clone, Debug, PartialEq)]
pub enum TruncatedSequence {
    Exact(Vec<BigRational>),
    Float(Vec<f64>),
}

impl TruncatedSequence {
    pub fn exact(entries: impl IntoIterator<Item = BigRational>) -> Self {
        TruncatedSequence::Exact(entries.into_iter().collect())
    }

    pub fn float(entries: impl IntoIterator<Item = f64>) -> Self {
        TruncatedSequence::Float(entries.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        match self {
            TruncatedSequence::Exact(v) => v.len(),
            TruncatedSequence::Float(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn check_compatible(&self, other: &Self) -> Result<(), SeqError> {
        if self.len() != other.len() {
            return Err(SeqError::LengthMismatch(self.len(), other.len()));
        }
        match (self, other) {
            (TruncatedSequence::Exact(_), TruncatedSequence::Exact(_))
            | (TruncatedSequence::Float(_), TruncatedSequence::Float(_)) => Ok(()),
            _ => Err(SeqError::ModeMismatch),
        }
    }

    /// Entrywise combination of two same-mode sequences under fold over
    /// index pairs selected by `select`: out_n = Σ_{select(p,q) = n} f_p·g_q.
    fn convolve_by(
        &self,
        other: &Self,
        select: impl Fn(usize, usize) -> Option<usize>,
    ) -> Result<Self, SeqError> {
        self.check_compatible(other)?;
        let n = self.len();
        match (self, other) {
            (TruncatedSequence::Exact(a), TruncatedSequence::Exact(b)) => {
                let mut out = vec![BigRational::zero(); n];
                for (p, ap) in a.iter().enumerate() {
                    for (q, bq) in b.iter().enumerate() {
                        if let Some(t) = select(p + 1, q + 1) {
                            if t >= 1 && t <= n {
                                out[t - 1] += ap * bq;
                            }
                        }
                    }
                }
                Ok(TruncatedSequence::Exact(out))
            }
            (TruncatedSequence::Float(a), TruncatedSequence::Float(b)) => {
                let mut out = vec![0.0; n];
                for (p, ap) in a.iter().enumerate() {
                    for (q, bq) in b.iter().enumerate() {
                        if let Some(t) = select(p + 1, q + 1) {
                            if t >= 1 && t <= n {
                                out[t - 1] += ap * bq;
                            }
                        }
                    }
                }
                Ok(TruncatedSequence::Float(out))
            }
            _ => unreachable!("checked compatible"),
        }
    }

    pub fn product(&self, other: &Self, mode: SeqProduct) -> Result<Self, SeqError> {
        match mode {
            SeqProduct::Pointwise => self.convolve_by(other, |p, q| (p == q).then_some(p)),
            SeqProduct::MaxConv => self.convolve_by(other, |p, q| Some(p.max(q))),
            SeqProduct::Cauchy => self.convolve_by(other, |p, q| Some(p + q)),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeqError> {
        self.check_compatible(other)?;
        Ok(match (self, other) {
            (TruncatedSequence::Exact(a), TruncatedSequence::Exact(b)) => {
                TruncatedSequence::Exact(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            (TruncatedSequence::Float(a), TruncatedSequence::Float(b)) => {
                TruncatedSequence::Float(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            _ => unreachable!("checked compatible"),
        })
    }

    pub fn scale_int(&self, k: i64) -> Self {
        match self {
            TruncatedSequence::Exact(a) => {
                TruncatedSequence::Exact(a.iter().map(|x| x * ratio::int(k)).collect())
            }
            TruncatedSequence::Float(a) => {
                TruncatedSequence::Float(a.iter().map(|x| x * k as f64).collect())
            }
        }
    }

    /// Partial summation S(f)_N = Σ_{n≤N} f_n; same length.
    pub fn partial_sum(&self) -> Self {
        match self {
            TruncatedSequence::Exact(a) => {
                let mut acc = BigRational::zero();
                TruncatedSequence::Exact(
                    a.iter()
                        .map(|x| {
                            acc += x;
                            acc.clone()
                        })
                        .collect(),
                )
            }
            TruncatedSequence::Float(a) => {
                let mut acc = 0.0;
                TruncatedSequence::Float(
                    a.iter()
                        .map(|x| {
                            acc += x;
                            acc
                        })
                        .collect(),
                )
            }
        }
    }

    /// Shifted summation S′(f)_N = Σ_{n≤N+1} f_n. The last index needs an
    /// entry beyond the truncation, so the output is one shorter than the
    /// input.
    pub fn prime_sum(&self) -> Self {
        let s = self.partial_sum();
        match s {
            TruncatedSequence::Exact(v) => TruncatedSequence::Exact(v[1..].to_vec()),
            TruncatedSequence::Float(v) => TruncatedSequence::Float(v[1..].to_vec()),
        }
    }

    pub fn truncate(&self, len: usize) -> Self {
        match self {
            TruncatedSequence::Exact(v) => TruncatedSequence::Exact(v[..len.min(v.len())].to_vec()),
            TruncatedSequence::Float(v) => TruncatedSequence::Float(v[..len.min(v.len())].to_vec()),
        }
    }

    /// Unit of the pointwise product: (1, 1, …).
    pub fn ones_exact(n: usize) -> Self {
        TruncatedSequence::Exact(vec![num_traits::One::one(); n])
    }

    /// Unit of the max-convolution product: (1, 0, 0, …).
    pub fn maxconv_unit_exact(n: usize) -> Self {
        let mut v = vec![BigRational::zero(); n];
        if n > 0 {
            v[0] = num_traits::One::one();
        }
        TruncatedSequence::Exact(v)
    }

    /// Delta at position k (1-based).
    pub fn delta_exact(n: usize, k: usize) -> Self {
        let mut v = vec![BigRational::zero(); n];
        if (1..=n).contains(&k) {
            v[k - 1] = num_traits::One::one();
        }
        TruncatedSequence::Exact(v)
    }
}

/// Per-index report of the Rota–Baxter identity
/// R(f)·R(g) = R(R(f)·g + f·R(g) + θ·f·g) for a summation operator on the
/// max-convolution algebra, compared on the indices where both sides are
/// fully determined by the truncations.
#[derive(Clone, Debug)]
pub struct SummationRbReport {
    pub theta: i64,
    pub lhs: TruncatedSequence,
    pub rhs: TruncatedSequence,
    pub compared_indices: usize,
    pub mismatches: Vec<usize>,
}

impl SummationRbReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SummationOp {
    /// S(f)_N = Σ_{n≤N}.
    Inclusive,
    /// S′(f)_N = Σ_{n≤N+1}, output one shorter.
    Shifted,
}

pub fn summation_rb_report(
    f: &TruncatedSequence,
    g: &TruncatedSequence,
    op: SummationOp,
    theta: i64,
) -> Result<SummationRbReport, SeqError> {
    let sum = |x: &TruncatedSequence| match op {
        SummationOp::Inclusive => x.partial_sum(),
        SummationOp::Shifted => x.prime_sum(),
    };
    let sf = sum(f);
    let sg = sum(g);
    let m = sf.len(); // one less than input length for the shifted variant
    let (ft, gt) = (f.truncate(m), g.truncate(m));
    let lhs = sf.product(&sg, SeqProduct::MaxConv)?;
    let inner = sf
        .product(&gt, SeqProduct::MaxConv)?
        .add(&ft.product(&sg, SeqProduct::MaxConv)?)?
        .add(&ft.product(&gt, SeqProduct::MaxConv)?.scale_int(theta))?;
    let rhs = sum(&inner);
    let cmp = rhs.len();
    let lhs = lhs.truncate(cmp);
    let mismatches = match (&lhs, &rhs) {
        (TruncatedSequence::Exact(a), TruncatedSequence::Exact(b)) => a
            .iter()
            .zip(b)
            .enumerate()
            .filter(|(_, (x, y))| x != y)
            .map(|(i, _)| i + 1)
            .collect(),
        (TruncatedSequence::Float(a), TruncatedSequence::Float(b)) => a
            .iter()
            .zip(b)
            .enumerate()
            .filter(|(_, (x, y))| (*x - *y).abs() > 1e-9)
            .map(|(i, _)| i + 1)
            .collect(),
        _ => return Err(SeqError::ModeMismatch),
    };
    Ok(SummationRbReport {
        theta,
        lhs,
        rhs,
        compared_indices: cmp,
        mismatches,
    })
}

// --- JSON file format -----------------------------------------------------

#[derive(Serialize, Deserialize)]
struct SeqJson {
    mode: String,
    entries: Vec<serde_json::Value>,
}

impl TruncatedSequence {
    pub fn from_json(s: &str) -> Result<Self, SeqError> {
        let raw: SeqJson = serde_json::from_str(s).map_err(|e| SeqError::Parse(e.to_string()))?;
        match raw.mode.as_str() {
            "exact" => {
                let entries = raw
                    .entries
                    .iter()
                    .map(|v| {
                        v.as_str()
                            .ok_or_else(|| SeqError::Parse("exact entries must be strings".into()))
                            .and_then(|s| {
                                ratio::parse(s).map_err(|e| SeqError::Parse(e.to_string()))
                            })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(TruncatedSequence::Exact(entries))
            }
            "float" => {
                let entries = raw
                    .entries
                    .iter()
                    .map(|v| {
                        v.as_f64()
                            .ok_or_else(|| SeqError::Parse("float entries must be numbers".into()))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(TruncatedSequence::Float(entries))
            }
            other => Err(SeqError::Parse(format!("unknown mode {other:?}"))),
        }
    }

    pub fn to_json(&self) -> String {
        let raw = match self {
            TruncatedSequence::Exact(v) => SeqJson {
                mode: "exact".into(),
                entries: v
                    .iter()
                    .map(|x| serde_json::Value::String(ratio::format(x)))
                    .collect(),
            },
            TruncatedSequence::Float(v) => SeqJson {
                mode: "float".into(),
                entries: v
                    .iter()
                    .map(|x| serde_json::json!(x))
                    .collect(),
            },
        };
        serde_json::to_string_pretty(&raw).expect("sequence serialization cannot fail")
    }
}

impl fmt::Display for TruncatedSequence {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            TruncatedSequence::Exact(v) => {
                let parts: Vec<String> = v.iter().map(ratio::format).collect();
                write!(f, "({})", parts.join(", "))
            }
            TruncatedSequence::Float(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(", "))
            }
        }
    }
}

//! The Γ(1+∂t) singular-part transform on polynomials in t.
//!
//! The operator coefficients come from Γ(1+x) = exp(−γx + Σ_{k≥2}
//! (−1)^k ζ(k) x^k / k), kept symbolic: γ and the ζ(k) are opaque
//! constants of a polynomial ring over the rationals, so identities like
//! Γ(1+∂t)(t + γ) = t hold exactly whatever the constants' values.

use crate::ratio;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Opaque transcendental constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ConstSym {
    EulerGamma,
    Zeta(u32),
}

impl fmt::Display for ConstSym {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            ConstSym::EulerGamma => write!(f, "gamma"),
            ConstSym::Zeta(k) => write!(f, "zeta{k}"),
        }
    }
}

type SymMonomial = BTreeMap<ConstSym, u32>;

/// Polynomial in the opaque constants with rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct SymExpr {
    terms: BTreeMap<SymMonomial, BigRational>,
}

impl SymExpr {
    pub fn zero() -> Self {
        SymExpr {
            terms: BTreeMap::new(),
        }
    }

    pub fn rational(q: BigRational) -> Self {
        let mut s = Self::zero();
        s.add_term(SymMonomial::new(), q);
        s
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn sym(c: ConstSym) -> Self {
        let mut s = Self::zero();
        s.add_term([(c, 1)].into_iter().collect(), BigRational::one());
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: SymMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(BigRational::zero);
        *e += c;
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn add(&self, other: &SymExpr) -> SymExpr {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> SymExpr {
        let mut out = SymExpr::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigRational) -> SymExpr {
        let mut out = SymExpr::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &SymExpr) -> SymExpr {
        let mut out = SymExpr::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut m = ma.clone();
                for (s, e) in mb {
                    *m.entry(*s).or_insert(0) += e;
                }
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    /// Substitute numeric values for the constants.
    pub fn eval_f64(&self, gamma: f64, zeta: impl Fn(u32) -> f64) -> f64 {
        let mut total = 0.0;
        for (m, c) in &self.terms {
            let mut v = crate::feynman::quadrature::rational_to_f64(c);
            for (s, e) in m {
                let base = match s {
                    ConstSym::EulerGamma => gamma,
                    ConstSym::Zeta(k) => zeta(*k),
                };
                v *= base.powi(*e as i32);
            }
            total += v;
        }
        total
    }
}

impl fmt::Display for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", ratio::format(c))?;
            for (s, e) in m {
                if *e == 1 {
                    write!(f, "*{s}")?;
                } else {
                    write!(f, "*{s}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Taylor coefficients of Γ(1+x) up to the given order, symbolic in γ
/// and ζ(k): exponentiate log Γ(1+x) = −γx + Σ_{k≥2} (−1)^k ζ(k) x^k/k.
pub fn gamma_taylor(order: usize) -> Vec<SymExpr> {
    let mut log_series = vec![SymExpr::zero(); order + 1];
    if order >= 1 {
        log_series[1] = SymExpr::sym(ConstSym::EulerGamma).neg();
    }
    #[allow(clippy::needless_range_loop)]
    for k in 2..=order {
        let sign = if k % 2 == 0 {
            BigRational::one()
        } else {
            -BigRational::one()
        };
        log_series[k] =
            SymExpr::sym(ConstSym::Zeta(k as u32)).scale(&(sign / ratio::int(k as i64)));
    }
    // exp of a series with zero constant term
    let mut out = vec![SymExpr::zero(); order + 1];
    out[0] = SymExpr::one();
    let mut power = out.clone(); // log_series^0
    let mut factorial = BigRational::one();
    for n in 1..=order {
        // power ← power · log_series, truncated
        let mut next = vec![SymExpr::zero(); order + 1];
        for (i, a) in power.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in log_series.iter().enumerate() {
                if i + j <= order && !b.is_zero() {
                    next[i + j] = next[i + j].add(&a.mul(b));
                }
            }
        }
        power = next;
        factorial *= ratio::int(n as i64);
        let inv = factorial.recip();
        for (o, p) in out.iter_mut().zip(&power) {
            *o = o.add(&p.scale(&inv));
        }
    }
    out
}

/// Polynomial in the formal variable t with symbolic-constant
/// coefficients; index = degree.
#[derive(Clone, PartialEq, Debug)]
pub struct SymPoly {
    pub coeffs: Vec<SymExpr>,
}

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly { coeffs: Vec::new() }
    }

    pub fn from_rationals(cs: &[BigRational]) -> Self {
        SymPoly {
            coeffs: cs.iter().map(|c| SymExpr::rational(c.clone())).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .unwrap_or(0)
    }

    pub fn derivative(&self) -> SymPoly {
        if self.coeffs.len() <= 1 {
            return SymPoly::zero();
        }
        SymPoly {
            coeffs: self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&ratio::int(i as i64 + 1)))
                .collect(),
        }
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &SymPoly, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(SymExpr::zero);
        SymPoly {
            coeffs: (0..n).map(|i| get(self, i).add(&get(other, i))).collect(),
        }
    }

    pub fn scale_expr(&self, k: &SymExpr) -> SymPoly {
        SymPoly {
            coeffs: self.coeffs.iter().map(|c| c.mul(k)).collect(),
        }
    }

    fn trimmed(mut self) -> SymPoly {
        while self.coeffs.last().is_some_and(SymExpr::is_zero) {
            self.coeffs.pop();
        }
        self
    }
}

/// Q(t) = Γ(1+∂t) P(t) = Σ_j c_j P^{(j)}(t), truncated at `order` (which
/// must be at least deg P; derivatives beyond deg P vanish anyway).
pub fn gamma_transform(p: &SymPoly, order: usize) -> SymPoly {
    let coeffs = gamma_taylor(order.max(p.degree()));
    let mut out = SymPoly::zero();
    let mut derivative = p.clone();
    for c in coeffs {
        if derivative.coeffs.is_empty() {
            break;
        }
        out = out.add(&derivative.scale_expr(&c));
        derivative = derivative.derivative();
    }
    out.trimmed()
}

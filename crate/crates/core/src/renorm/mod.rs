//! Minimal-subtraction target algebras.
//!
//! A minimal-subtraction algebra splits as a linear direct sum of a polar
//! subalgebra and a regular subalgebra containing the unit, with an
//! idempotent projection π onto the polar part and an augmentation on the
//! regular part. Two truncated Laurent instances are provided: the
//! standard one (poles = strictly negative powers, augmentation =
//! constant coefficient) and the complementary cut-off flavored one
//! (polar part = series vanishing at 0, regular part = polynomials in
//! 1/z, augmentation = evaluation at a fixed z₀).
//!
//! Truncation caps are hard limits: any product that would push a
//! nonzero coefficient outside the caps is an error, never a silent
//! drop.

pub mod birkhoff;

use crate::ratio;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, thiserror::Error)]
pub enum RenormError {
    #[error("exponent {exponent} outside the truncation caps [{lo}, {hi}]")]
    TruncationOverflow { exponent: i64, lo: i64, hi: i64 },
    #[error("value is not in the regular subalgebra; augmentation undefined")]
    NotRegular,
    #[error("no value stored for a basis class of degree {0}")]
    MissingValue(u32),
    #[error("map does not send the unit to the algebra unit")]
    NotUnital,
    #[error("element degree {found} exceeds the bound {bound}")]
    DegreeOverflow { found: u32, bound: u32 },
    #[error(transparent)]
    Hopf(#[from] crate::hopf::HopfError),
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
    #[error("character file parse error: {0}")]
    Parse(String),
}

/// Commutative algebra with a polar/regular splitting.
pub trait MsAlgebra: Clone {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, RenormError>;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, RenormError>;
    fn scale(&self, a: &Self::Elem, k: &BigRational) -> Self::Elem;
    /// The idempotent projection π onto the polar part.
    fn polar_project(&self, a: &Self::Elem) -> Self::Elem;
    /// Augmentation ε on the regular subalgebra.
    fn augment(&self, a: &Self::Elem) -> Result<BigRational, RenormError>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, RenormError> {
        self.add(a, &self.neg(b))
    }

    fn regular_project(&self, a: &Self::Elem) -> Self::Elem {
        let p = self.polar_project(a);
        self.sub(a, &p).expect("projection never overflows")
    }

    fn is_polar(&self, a: &Self::Elem) -> bool {
        self.polar_project(a) == *a
    }

    fn is_regular(&self, a: &Self::Elem) -> bool {
        self.polar_project(a) == self.zero()
    }
}

/// Truncated Laurent series with exact rational coefficients; exponents
/// confined to [−pole_cap, regular_cap].
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    coeffs: BTreeMap<i64, BigRational>,
}

impl LaurentSeries {
    pub fn zero() -> Self {
        LaurentSeries {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i64, c: BigRational) -> Self {
        let mut s = Self::zero();
        s.set(exp, c);
        s
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigRational)>) -> Self {
        let mut s = Self::zero();
        for (e, c) in terms {
            let cur = s.coeff(e) + c;
            s.set(e, cur);
        }
        s
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    fn set(&mut self, exp: i64, c: BigRational) {
        if c.is_zero() {
            self.coeffs.remove(&exp);
        } else {
            self.coeffs.insert(exp, c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{}", ratio::format(c))?,
                1 => write!(f, "{}*z", ratio::format(c))?,
                _ => write!(f, "{}*z^{}", ratio::format(c), e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Standard minimal subtraction: polar part = strictly negative powers,
/// augmentation = constant coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentAlgebra {
    pub pole_cap: i64,
    pub regular_cap: i64,
}

impl LaurentAlgebra {
    pub fn new(pole_cap: i64, regular_cap: i64) -> Self {
        assert!(pole_cap >= 0 && regular_cap >= 0);
        LaurentAlgebra {
            pole_cap,
            regular_cap,
        }
    }

    fn check(&self, s: LaurentSeries) -> Result<LaurentSeries, RenormError> {
        for (e, _) in s.terms() {
            if *e < -self.pole_cap || *e > self.regular_cap {
                return Err(RenormError::TruncationOverflow {
                    exponent: *e,
                    lo: -self.pole_cap,
                    hi: self.regular_cap,
                });
            }
        }
        Ok(s)
    }
}

fn laurent_add(a: &LaurentSeries, b: &LaurentSeries) -> LaurentSeries {
    let mut out = a.clone();
    for (e, c) in b.terms() {
        let cur = out.coeff(*e) + c;
        out.set(*e, cur);
    }
    out
}

fn laurent_mul(a: &LaurentSeries, b: &LaurentSeries) -> LaurentSeries {
    let mut out = LaurentSeries::zero();
    for (ea, ca) in a.terms() {
        for (eb, cb) in b.terms() {
            let e = ea + eb;
            let cur = out.coeff(e) + ca * cb;
            out.set(e, cur);
        }
    }
    out
}

impl MsAlgebra for LaurentAlgebra {
    type Elem = LaurentSeries;

    fn zero(&self) -> LaurentSeries {
        LaurentSeries::zero()
    }

    fn one(&self) -> LaurentSeries {
        LaurentSeries::constant(num_traits::One::one())
    }

    fn add(&self, a: &LaurentSeries, b: &LaurentSeries) -> Result<LaurentSeries, RenormError> {
        self.check(laurent_add(a, b))
    }

    fn neg(&self, a: &LaurentSeries) -> LaurentSeries {
        let mut out = LaurentSeries::zero();
        for (e, c) in a.terms() {
            out.set(*e, -c.clone());
        }
        out
    }

    fn mul(&self, a: &LaurentSeries, b: &LaurentSeries) -> Result<LaurentSeries, RenormError> {
        self.check(laurent_mul(a, b))
    }

    fn scale(&self, a: &LaurentSeries, k: &BigRational) -> LaurentSeries {
        let mut out = LaurentSeries::zero();
        for (e, c) in a.terms() {
            out.set(*e, c * k);
        }
        out
    }

    fn polar_project(&self, a: &LaurentSeries) -> LaurentSeries {
        let mut out = LaurentSeries::zero();
        for (e, c) in a.terms() {
            if *e < 0 {
                out.set(*e, c.clone());
            }
        }
        out
    }

    fn augment(&self, a: &LaurentSeries) -> Result<BigRational, RenormError> {
        if !self.is_regular(a) {
            return Err(RenormError::NotRegular);
        }
        Ok(a.coeff(0))
    }
}

/// The complementary splitting of the same series space: polar part =
/// series vanishing at 0 (strictly positive powers), regular part =
/// polynomials in 1/z including constants, augmentation = evaluation at
/// a fixed rational z₀ ≠ 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutoffLaurentAlgebra {
    pub pole_cap: i64,
    pub regular_cap: i64,
    pub z0: BigRational,
}

impl CutoffLaurentAlgebra {
    pub fn new(pole_cap: i64, regular_cap: i64, z0: BigRational) -> Self {
        assert!(!z0.is_zero(), "evaluation point must be nonzero");
        CutoffLaurentAlgebra {
            pole_cap,
            regular_cap,
            z0,
        }
    }

    fn base(&self) -> LaurentAlgebra {
        LaurentAlgebra::new(self.pole_cap, self.regular_cap)
    }
}

impl MsAlgebra for CutoffLaurentAlgebra {
    type Elem = LaurentSeries;

    fn zero(&self) -> LaurentSeries {
        LaurentSeries::zero()
    }

    fn one(&self) -> LaurentSeries {
        LaurentSeries::constant(num_traits::One::one())
    }

    fn add(&self, a: &LaurentSeries, b: &LaurentSeries) -> Result<LaurentSeries, RenormError> {
        self.base().add(a, b)
    }

    fn neg(&self, a: &LaurentSeries) -> LaurentSeries {
        self.base().neg(a)
    }

    fn mul(&self, a: &LaurentSeries, b: &LaurentSeries) -> Result<LaurentSeries, RenormError> {
        self.base().mul(a, b)
    }

    fn scale(&self, a: &LaurentSeries, k: &BigRational) -> LaurentSeries {
        self.base().scale(a, k)
    }

    fn polar_project(&self, a: &LaurentSeries) -> LaurentSeries {
        let mut out = LaurentSeries::zero();
        for (e, c) in a.terms() {
            if *e > 0 {
                out.set(*e, c.clone());
            }
        }
        out
    }

    fn augment(&self, a: &LaurentSeries) -> Result<BigRational, RenormError> {
        if !self.is_regular(a) {
            return Err(RenormError::NotRegular);
        }
        let mut total = BigRational::zero();
        for (e, c) in a.terms() {
            // e ≤ 0: evaluate c·z₀^e
            let mut v = c.clone();
            for _ in 0..(-e) {
                v /= &self.z0;
            }
            total += v;
        }
        Ok(total)
    }
}

/// Laurent value as a JSON map {"exponent": "p/q"}.
pub fn laurent_to_json(s: &LaurentSeries) -> BTreeMap<String, String> {
    s.terms()
        .map(|(e, c)| (e.to_string(), ratio::format(c)))
        .collect()
}

pub fn laurent_from_json(map: &BTreeMap<String, String>) -> Result<LaurentSeries, RenormError> {
    let mut out = LaurentSeries::zero();
    for (e, c) in map {
        let exp: i64 = e
            .parse()
            .map_err(|_| RenormError::Parse(format!("bad exponent {e:?}")))?;
        let coeff = ratio::parse(c).map_err(|err| RenormError::Parse(err.to_string()))?;
        let cur = out.coeff(exp) + coeff;
        out.set(exp, cur);
    }
    Ok(out)
}

//! Sparse bivariate polynomials in `(x, y)` with exact rational or float
//! coefficients, m-degree grading and the ∗-order on exponent pairs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exponent pair / Chebyshev index `(k1, k2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MIndex {
    pub k1: u32,
    pub k2: u32,
}

impl MIndex {
    pub fn new(k1: u32, k2: u32) -> Self {
        MIndex { k1, k2 }
    }

    /// `2k1 + 3k2`.
    pub fn mdegree(&self) -> u32 {
        2 * self.k1 + 3 * self.k2
    }

    /// All indices of m-degree exactly `n`, in ∗-order.
    pub fn of_mdegree(n: u32) -> Vec<MIndex> {
        let mut v: Vec<MIndex> = (0..=n / 3)
            .filter(|k2| (n - 3 * k2) % 2 == 0)
            .map(|k2| MIndex::new((n - 3 * k2) / 2, k2))
            .collect();
        v.sort_by(star_cmp);
        v
    }

    /// All indices of m-degree at most `n`, in ∗-order.
    pub fn up_to(n: u32) -> Vec<MIndex> {
        (0..=n).flat_map(MIndex::of_mdegree).collect()
    }

    /// All indices `⪯ self` in ∗-order, ending with `self`.
    pub fn predecessors(&self) -> Vec<MIndex> {
        MIndex::up_to(self.mdegree()).into_iter().filter(|m| star_cmp(m, self) != Ordering::Greater).collect()
    }
}

impl fmt::Display for MIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k1, self.k2)
    }
}

/// ∗-order: graded by m-degree, then larger `k1` first within a grade.
pub fn star_cmp(a: &MIndex, b: &MIndex) -> Ordering {
    a.mdegree().cmp(&b.mdegree()).then(b.k1.cmp(&a.k1))
}

/// Coefficient ring for [`Poly`].
pub trait Coeff:
    Clone + PartialEq + fmt::Debug + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self> + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;
    fn to_f64(&self) -> f64;
}

impl Coeff for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Coeff for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Sparse polynomial `Σ c_{ij} x^i y^j` with no stored zero coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<C: Coeff> {
    terms: BTreeMap<(u32, u32), C>,
}

pub type RatPoly = Poly<BigRational>;
pub type FloatPoly = Poly<f64>;

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Poly { terms: BTreeMap::new() }
    }
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn monomial(i: u32, j: u32, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, C::one())
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, C::one())
    }

    /// Build from `(i, j, c)` triples with integer coefficients.
    pub fn from_int_terms(ts: &[(u32, u32, i64)]) -> Self {
        let mut p = Self::zero();
        for &(i, j, c) in ts {
            p.add_term(i, j, C::from_i64(c));
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: C) {
        let slot = self.terms.entry((i, j)).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> C {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (MIndex, &C)> {
        self.terms.iter().map(|(&(i, j), c)| (MIndex::new(i, j), c))
    }

    /// Terms sorted in ∗-order.
    pub fn terms_star_order(&self) -> Vec<(MIndex, C)> {
        let mut v: Vec<(MIndex, C)> = self.iter().map(|(m, c)| (m, c.clone())).collect();
        v.sort_by(|a, b| star_cmp(&a.0, &b.0));
        v
    }

    /// Largest term in ∗-order.
    pub fn leading(&self) -> Option<(MIndex, C)> {
        self.terms_star_order().pop()
    }

    pub fn mdegree(&self) -> Option<u32> {
        self.iter().map(|(m, _)| m.mdegree()).max()
    }

    pub fn scale(&self, s: &C) -> Self {
        let mut p = Self::zero();
        for (&(i, j), c) in self.terms.iter() {
            p.add_term(i, j, c.clone() * s.clone());
        }
        p
    }

    pub fn dx(&self) -> Self {
        let mut p = Self::zero();
        for (&(i, j), c) in self.terms.iter() {
            if i > 0 {
                p.add_term(i - 1, j, c.clone() * C::from_i64(i as i64));
            }
        }
        p
    }

    pub fn dy(&self) -> Self {
        let mut p = Self::zero();
        for (&(i, j), c) in self.terms.iter() {
            if j > 0 {
                p.add_term(i, j - 1, c.clone() * C::from_i64(j as i64));
            }
        }
        p
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.terms.iter().map(|(&(i, j), c)| c.to_f64() * x.powi(i as i32) * y.powi(j as i32)).sum()
    }

    pub fn to_float(&self) -> FloatPoly {
        let mut p = FloatPoly::zero();
        for (&(i, j), c) in self.terms.iter() {
            p.add_term(i, j, c.to_f64());
        }
        p
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|c| c.to_f64().abs()).fold(0.0, f64::max)
    }
}

impl FloatPoly {
    /// Fast evaluation with cached coefficients.
    pub fn eval_fast(&self, x: f64, y: f64) -> f64 {
        self.terms.iter().map(|(&(i, j), c)| c * x.powi(i as i32) * y.powi(j as i32)).sum()
    }
}

impl RatPoly {
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn has_positive_leading(&self) -> bool {
        self.leading().map(|(_, c)| c.is_positive()).unwrap_or(false)
    }
}

impl<'a, C: Coeff> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn add(self, o: &Poly<C>) -> Poly<C> {
        let mut p = self.clone();
        for (&(i, j), c) in o.terms.iter() {
            p.add_term(i, j, c.clone());
        }
        p
    }
}

impl<'a, C: Coeff> Sub<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn sub(self, o: &Poly<C>) -> Poly<C> {
        let mut p = self.clone();
        for (&(i, j), c) in o.terms.iter() {
            p.add_term(i, j, -c.clone());
        }
        p
    }
}

impl<'a, C: Coeff> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn mul(self, o: &Poly<C>) -> Poly<C> {
        let mut p = Poly::zero();
        for (&(i, j), a) in self.terms.iter() {
            for (&(k, l), b) in o.terms.iter() {
                p.add_term(i + k, j + l, a.clone() * b.clone());
            }
        }
        p
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.scale(&-C::one())
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ts = self.terms_star_order();
        if ts.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = ts
            .iter()
            .rev()
            .map(|(m, c)| {
                let mono = match (m.k1, m.k2) {
                    (0, 0) => String::new(),
                    (i, 0) => format!("x^{i}"),
                    (0, j) => format!("y^{j}"),
                    (i, j) => format!("x^{i}*y^{j}"),
                };
                if mono.is_empty() {
                    format!("{c:?}")
                } else {
                    format!("({c:?})*{mono}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

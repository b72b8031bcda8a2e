//! Exponentials `φ_k` and the four generalized trigonometric families
//! CC, SC, CS, SS on homogeneous coordinates.

use crate::coords::{apply_group_index, GroupElem, HexIndex, TriplePoint, G2};
use num_complex::Complex64;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TrigFamily {
    CC,
    SC,
    CS,
    SS,
}

impl TrigFamily {
    pub const ALL: [TrigFamily; 4] = [TrigFamily::CC, TrigFamily::SC, TrigFamily::CS, TrigFamily::SS];

    /// Sign picked up under `k ↦ kg`: `F_{kg} = χ(g) F_k`, and likewise in `t`.
    pub fn character(self, g: &GroupElem) -> i8 {
        match self {
            TrigFamily::CC => 1,
            TrigFamily::SC => g.eps(),
            TrigFamily::CS => g.eps() * g.parity,
            TrigFamily::SS => g.parity,
        }
    }

    /// Power of `-i` in the normalization of the orbit sum.
    fn phase(self) -> u32 {
        match self {
            TrigFamily::CC => 0,
            TrigFamily::SC | TrigFamily::CS => 1,
            TrigFamily::SS => 2,
        }
    }

    fn from_sines(sin_a: bool, sin_b: bool) -> TrigFamily {
        match (sin_a, sin_b) {
            (false, false) => TrigFamily::CC,
            (true, false) => TrigFamily::SC,
            (false, true) => TrigFamily::CS,
            (true, true) => TrigFamily::SS,
        }
    }

    fn sines(self) -> (bool, bool) {
        match self {
            TrigFamily::CC => (false, false),
            TrigFamily::SC => (true, false),
            TrigFamily::CS => (false, true),
            TrigFamily::SS => (true, true),
        }
    }

    /// Family whose character is the product of the two characters.
    pub fn product_family(self, other: TrigFamily) -> TrigFamily {
        let (a1, b1) = self.sines();
        let (a2, b2) = other.sines();
        TrigFamily::from_sines(a1 ^ a2, b1 ^ b2)
    }

    /// True when `F_k ≡ 0` because of the index alone.
    pub fn index_vanishes(self, k: &HexIndex) -> bool {
        let (sin_a, sin_b) = self.sines();
        (sin_b && k.has_zero()) || (sin_a && k.has_equal())
    }

    pub fn name(self) -> &'static str {
        match self {
            TrigFamily::CC => "CC",
            TrigFamily::SC => "SC",
            TrigFamily::CS => "CS",
            TrigFamily::SS => "SS",
        }
    }
}

impl fmt::Display for TrigFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TrigFamily {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "cc" => Ok(TrigFamily::CC),
            "sc" => Ok(TrigFamily::SC),
            "cs" => Ok(TrigFamily::CS),
            "ss" => Ok(TrigFamily::SS),
            _ => Err(format!("unknown family '{s}'")),
        }
    }
}

/// `exp(2πi k·t / 3)`.
pub fn phi(k: &HexIndex, t: &TriplePoint) -> Complex64 {
    let dot = k.k1 as f64 * t.t1 + k.k2 as f64 * t.t2 + k.k3 as f64 * t.t3;
    Complex64::from_polar(1.0, 2.0 * PI * dot / 3.0)
}

struct Terms {
    a: f64,
    b: f64,
    d: [f64; 3],
    m: [f64; 3],
}

// Index vectors of the linear forms d_i and the coordinates m_i.
const D_GRAD: [[f64; 3]; 3] = [[1.0, 0.0, -1.0], [-1.0, 1.0, 0.0], [0.0, -1.0, 1.0]];
const M_IDX: [usize; 3] = [1, 2, 0];

fn terms(k: &HexIndex, t: &TriplePoint) -> Terms {
    Terms {
        a: PI * (k.k1 - k.k3) as f64 / 3.0,
        b: PI * k.k2 as f64,
        d: [t.t1 - t.t3, t.t2 - t.t1, t.t3 - t.t2],
        m: [t.t2, t.t3, t.t1],
    }
}

fn trig(sine: bool, x: f64) -> f64 {
    if sine {
        x.sin()
    } else {
        x.cos()
    }
}

fn trig_prime(sine: bool, x: f64) -> f64 {
    if sine {
        x.cos()
    } else {
        -x.sin()
    }
}

/// Three-term closed form of the family at `t`.
pub fn eval(family: TrigFamily, k: &HexIndex, t: &TriplePoint) -> f64 {
    if family.index_vanishes(k) {
        return 0.0;
    }
    let (sa, sb) = family.sines();
    let tm = terms(k, t);
    let mut s = 0.0;
    for i in 0..3 {
        s += trig(sa, tm.a * tm.d[i]) * trig(sb, tm.b * tm.m[i]);
    }
    s / 3.0
}

/// Gradient of the closed form with `t1, t2, t3` treated as independent variables.
pub fn gradient(family: TrigFamily, k: &HexIndex, t: &TriplePoint) -> [f64; 3] {
    let mut g = [0.0; 3];
    if family.index_vanishes(k) {
        return g;
    }
    let (sa, sb) = family.sines();
    let tm = terms(k, t);
    for i in 0..3 {
        let (xa, xb) = (tm.a * tm.d[i], tm.b * tm.m[i]);
        let da = trig_prime(sa, xa) * tm.a * trig(sb, xb);
        for (gj, dj) in g.iter_mut().zip(D_GRAD[i].iter()) {
            *gj += da * dj;
        }
        g[M_IDX[i]] += trig(sa, xa) * trig_prime(sb, xb) * tm.b;
    }
    for gj in g.iter_mut() {
        *gj /= 3.0;
    }
    g
}

/// Derivative along an in-plane direction given in homogeneous coordinates.
pub fn directional_derivative(family: TrigFamily, k: &HexIndex, t: &TriplePoint, dir: [f64; 3]) -> f64 {
    let g = gradient(family, k, t);
    g[0] * dir[0] + g[1] * dir[1] + g[2] * dir[2]
}

/// `(2π²/9)[(k1−k2)² + (k2−k3)² + (k3−k1)²]`.
pub fn laplace_eigenvalue(k: &HexIndex) -> f64 {
    let s = (k.k1 - k.k2).pow(2) + (k.k2 - k.k3).pow(2) + (k.k3 - k.k1).pow(2);
    2.0 * PI * PI / 9.0 * s as f64
}

/// Edges of the fundamental triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Edge {
    /// `t3 = −1`
    B1,
    /// `t2 = 0`
    B2,
    /// `t1 = t2`
    B3,
}

impl Edge {
    /// Exterior unit normal (unit length in Cartesian coordinates).
    pub fn normal(self) -> [f64; 3] {
        let h = 3f64.sqrt() / 2.0;
        match self {
            Edge::B1 => [0.5, 0.5, -1.0],
            Edge::B2 => [0.5, -1.0, 0.5],
            Edge::B3 => [-h, h, 0.0],
        }
    }

    pub fn contains(self, t: &TriplePoint) -> bool {
        let e = crate::coords::TRIANGLE_TOL;
        match self {
            Edge::B1 => (t.t3 + 1.0).abs() <= e,
            Edge::B2 => t.t2.abs() <= e,
            Edge::B3 => (t.t1 - t.t2).abs() <= e,
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum GentrigError {
    #[error("point ({0}, {1}, {2}) is not on edge {3:?}")]
    NotOnEdge(f64, f64, f64, Edge),
}

/// Exterior normal derivative of the family on one edge of the triangle.
pub fn boundary_normal_derivative(
    family: TrigFamily,
    k: &HexIndex,
    t: &TriplePoint,
    edge: Edge,
) -> Result<f64, GentrigError> {
    if !edge.contains(t) {
        return Err(GentrigError::NotOnEdge(t.t1, t.t2, t.t3, edge));
    }
    Ok(directional_derivative(family, k, t, edge.normal()))
}

/// Exact test for the lattice point `j/n` lying on a line where every member
/// of the family vanishes (equal coordinates for SC, zero or unit coordinates for CS).
pub fn vanishes_on_lattice(family: TrigFamily, j: &HexIndex, n: i64) -> bool {
    let (sa, sb) = family.sines();
    let on_cs_line = j.has_zero() || j.as_array().iter().any(|c| c.abs() == n);
    (sa && j.has_equal()) || (sb && on_cs_line)
}

/// One term `coeff · F_index` of a product expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductTerm {
    pub family: TrigFamily,
    pub index: HexIndex,
    pub coeff: Ratio<i64>,
}

/// Linearization of `F^a_j · F^b_k` as twelve terms `±(1/12) F^c_{j+kρ}`, `ρ ∈ G2`.
pub fn product_expand(fa: TrigFamily, j: &HexIndex, fb: TrigFamily, k: &HexIndex) -> Vec<ProductTerm> {
    let fc = fa.product_family(fb);
    let e = fa.phase() + fb.phase() - fc.phase();
    let front: i64 = if e % 4 == 0 { 1 } else { -1 };
    G2.iter()
        .map(|rho| {
            let c = front * fb.character(rho) as i64;
            ProductTerm { family: fc, index: j.add(&apply_group_index(rho, k)), coeff: Ratio::new(c, 12) }
        })
        .collect()
}

pub fn eval_expansion(terms: &[ProductTerm], t: &TriplePoint) -> f64 {
    terms
        .iter()
        .map(|p| (*p.coeff.numer() as f64 / *p.coeff.denom() as f64) * eval(p.family, &p.index, t))
        .sum()
}

/// Representative of `k` in the chamber `0 ≤ k2 ≤ k1` with `F_k = sign · F_rep`,
/// or `None` when `F_k` vanishes identically.
pub fn canonicalize(family: TrigFamily, k: &HexIndex) -> Option<(i8, HexIndex)> {
    if family.index_vanishes(k) {
        return None;
    }
    for g in G2.iter() {
        let kg = apply_group_index(g, k);
        if 0 <= kg.k2 && kg.k2 <= kg.k1 {
            // F_{kg} = χ(g) F_k
            return Some((family.character(g), kg));
        }
    }
    unreachable!("every orbit meets the chamber")
}

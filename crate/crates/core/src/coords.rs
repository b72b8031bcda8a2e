//! Homogeneous coordinates on the plane `t1 + t2 + t3 = 0`, the 12-element
//! group G2 acting on them, and the fundamental 30-60-90 triangle.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// Tolerance for closed-boundary membership of the fundamental triangle.
pub const TRIANGLE_TOL: f64 = 1e-12;

/// A point `(t1, t2, t3)` with zero coordinate sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriplePoint {
    pub t1: f64,
    pub t2: f64,
    pub t3: f64,
}

impl TriplePoint {
    pub fn as_array(&self) -> [f64; 3] {
        [self.t1, self.t2, self.t3]
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        TriplePoint { t1: a[0], t2: a[1], t3: a[2] }
    }

    pub fn sum(&self) -> f64 {
        self.t1 + self.t2 + self.t3
    }

    pub fn scale(&self, s: f64) -> Self {
        TriplePoint { t1: self.t1 * s, t2: self.t2 * s, t3: self.t3 * s }
    }

    pub fn add(&self, o: &TriplePoint) -> Self {
        TriplePoint { t1: self.t1 + o.t1, t2: self.t2 + o.t2, t3: self.t3 + o.t3 }
    }

    /// Cartesian coordinates, inverse of [`cart_to_homog`].
    pub fn to_cart(&self) -> (f64, f64) {
        let s3 = 3f64.sqrt();
        ((self.t1 - self.t3) / s3, self.t2)
    }
}

/// Point with `t3` fixed by the zero-sum constraint.
pub fn make_point(t1: f64, t2: f64) -> TriplePoint {
    TriplePoint { t1, t2, t3: -t1 - t2 }
}

/// `t = E x` with rows of `E` equal to `(√3/2, -1/2)`, `(0, 1)`, `(-√3/2, -1/2)`.
pub fn cart_to_homog(x1: f64, x2: f64) -> TriplePoint {
    let h = 3f64.sqrt() / 2.0;
    TriplePoint { t1: h * x1 - 0.5 * x2, t2: x2, t3: -h * x1 - 0.5 * x2 }
}

/// Integer triple with zero sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HexIndex {
    pub k1: i64,
    pub k2: i64,
    pub k3: i64,
}

impl HexIndex {
    /// Panics if the components do not sum to zero.
    pub fn new(k1: i64, k2: i64, k3: i64) -> Self {
        assert_eq!(k1 + k2 + k3, 0, "index components must sum to zero");
        HexIndex { k1, k2, k3 }
    }

    pub fn from_pair(k1: i64, k2: i64) -> Self {
        HexIndex { k1, k2, k3: -k1 - k2 }
    }

    pub fn as_array(&self) -> [i64; 3] {
        [self.k1, self.k2, self.k3]
    }

    pub fn from_array(a: [i64; 3]) -> Self {
        HexIndex::new(a[0], a[1], a[2])
    }

    /// True when all components are congruent mod 3, i.e. the index lies in ℍ.
    pub fn is_congruent(&self) -> bool {
        (self.k1 - self.k2).rem_euclid(3) == 0 && (self.k2 - self.k3).rem_euclid(3) == 0
    }

    pub fn add(&self, o: &HexIndex) -> HexIndex {
        HexIndex { k1: self.k1 + o.k1, k2: self.k2 + o.k2, k3: self.k3 + o.k3 }
    }

    pub fn neg(&self) -> HexIndex {
        HexIndex { k1: -self.k1, k2: -self.k2, k3: -self.k3 }
    }

    pub fn has_zero(&self) -> bool {
        self.k1 == 0 || self.k2 == 0 || self.k3 == 0
    }

    pub fn has_equal(&self) -> bool {
        self.k1 == self.k2 || self.k2 == self.k3 || self.k1 == self.k3
    }

    /// `self / n` as a float point.
    pub fn to_point(&self, n: i64) -> TriplePoint {
        let d = n as f64;
        TriplePoint { t1: self.k1 as f64 / d, t2: self.k2 as f64 / d, t3: self.k3 as f64 / d }
    }
}

impl fmt::Display for HexIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.k1, self.k2, self.k3)
    }
}

/// `k ↦ (k3−k2, k1−k3, k2−k1)`.
pub fn hat(k: &HexIndex) -> HexIndex {
    HexIndex { k1: k.k3 - k.k2, k2: k.k1 - k.k3, k3: k.k2 - k.k1 }
}

/// Element of G2 acting on the right: `(t g)_i = sign * t_{perm[i]}`.
///
/// `label_neg` records whether the element is written `-σ` with `σ ∈ 𝒜₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupElem {
    pub sign: i8,
    pub perm: [usize; 3],
    pub parity: i8,
    pub label_neg: bool,
    pub name: &'static str,
}

const ID: [usize; 3] = [0, 1, 2];
const S1: [usize; 3] = [0, 2, 1];
const S2: [usize; 3] = [1, 0, 2];
const S3: [usize; 3] = [2, 1, 0];
const S12: [usize; 3] = [2, 0, 1];
const S21: [usize; 3] = [1, 2, 0];

const fn elem(sign: i8, perm: [usize; 3], parity: i8, label_neg: bool, name: &'static str) -> GroupElem {
    GroupElem { sign, perm, parity, label_neg, name }
}

/// 𝒜₂ first (identity, σ1, σ2, σ3, σ1σ2, σ2σ1), then the negations in the same order.
pub const G2: [GroupElem; 12] = [
    elem(1, ID, 1, false, "1"),
    elem(-1, S1, -1, false, "s1"),
    elem(-1, S2, -1, false, "s2"),
    elem(-1, S3, -1, false, "s3"),
    elem(1, S12, 1, false, "s1s2"),
    elem(1, S21, 1, false, "s2s1"),
    elem(-1, ID, 1, true, "-1"),
    elem(1, S1, -1, true, "-s1"),
    elem(1, S2, -1, true, "-s2"),
    elem(1, S3, -1, true, "-s3"),
    elem(-1, S12, 1, true, "-s1s2"),
    elem(-1, S21, 1, true, "-s2s1"),
];

/// Elements of 𝒜₂*: identity, the two rotations, and `-σ1, -σ2, -σ3`.
pub fn a2_star() -> [GroupElem; 6] {
    [G2[0], G2[7], G2[8], G2[9], G2[4], G2[5]]
}

pub fn a2() -> [GroupElem; 6] {
    [G2[0], G2[1], G2[2], G2[3], G2[4], G2[5]]
}

impl GroupElem {
    pub fn identity() -> GroupElem {
        G2[0]
    }

    pub fn apply_f(&self, t: [f64; 3]) -> [f64; 3] {
        let s = self.sign as f64;
        [s * t[self.perm[0]], s * t[self.perm[1]], s * t[self.perm[2]]]
    }

    pub fn apply_i(&self, k: [i64; 3]) -> [i64; 3] {
        let s = self.sign as i64;
        [s * k[self.perm[0]], s * k[self.perm[1]], s * k[self.perm[2]]]
    }

    /// The element `h` with `t h = (t self) other`.
    pub fn compose(&self, other: &GroupElem) -> GroupElem {
        let sign = self.sign * other.sign;
        let perm = [self.perm[other.perm[0]], self.perm[other.perm[1]], self.perm[other.perm[2]]];
        *G2.iter()
            .find(|g| g.sign == sign && g.perm == perm)
            .expect("G2 is closed under composition")
    }

    pub fn inverse(&self) -> GroupElem {
        *G2.iter().find(|g| self.compose(g) == G2[0]).expect("every element has an inverse")
    }

    /// Value of the one-dimensional character attached to a family:
    /// `±` label for SC, parity for SS, their product for CS.
    pub fn eps(&self) -> i8 {
        if self.label_neg {
            -1
        } else {
            1
        }
    }
}

pub fn apply_group(g: &GroupElem, t: &TriplePoint) -> TriplePoint {
    TriplePoint::from_array(g.apply_f(t.as_array()))
}

pub fn apply_group_index(g: &GroupElem, k: &HexIndex) -> HexIndex {
    HexIndex::from_array(g.apply_i(k.as_array()))
}

/// `{kσ : σ ∈ G2}`, deduplicated.
pub fn orbit(k: &HexIndex) -> BTreeSet<HexIndex> {
    G2.iter().map(|g| apply_group_index(g, k)).collect()
}

/// `0 ≤ t2 ≤ t1 ≤ −t3 ≤ 1`, inclusive up to [`TRIANGLE_TOL`].
pub fn in_fundamental_triangle(t: &TriplePoint) -> bool {
    let e = TRIANGLE_TOL;
    t.t2 >= -e && t.t1 - t.t2 >= -e && -t.t3 - t.t1 >= -e && 1.0 + t.t3 >= -e
}

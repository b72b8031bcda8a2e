//! Index sets on the hexagonal lattice, node classification for the triangle,
//! dimension counts and the discrete cubature / inner products.

use crate::coords::{hat, orbit, HexIndex, TriplePoint};
use crate::gentrig::TrigFamily;
use num_traits::Zero;
use serde::Serialize;
use std::ops::{Add, Mul};

/// `(ℍ_n, ℍ_n^†)`: congruent indices in the closed hexagon of radius `n`, and
/// integer triples whose hat lies in it.
pub fn enum_h(n: i64) -> (Vec<HexIndex>, Vec<HexIndex>) {
    let mut h = Vec::new();
    let mut hd = Vec::new();
    for k1 in -2 * n..=2 * n {
        for k2 in -2 * n..=2 * n {
            let k = HexIndex::from_pair(k1, k2);
            if k.as_array().iter().all(|c| c.abs() <= n) && k.is_congruent() {
                h.push(k);
            }
            if hat(&k).as_array().iter().all(|c| c.abs() <= n) {
                hd.push(k);
            }
        }
    }
    (h, hd)
}

/// Cubature weight `c_j` of a point of ℍ_n: 1 inside, 1/2 on edges, 1/3 at vertices.
pub fn hex_weight(j: &HexIndex, n: i64) -> f64 {
    let a = j.as_array();
    let on_boundary = a.iter().filter(|c| c.abs() == n).count();
    match on_boundary {
        0 => 1.0,
        _ if a.contains(&0) && n > 0 => 1.0 / 3.0,
        _ => 0.5,
    }
}

/// `(1/n²) Σ_{j∈ℍ_n} c_j f(j/n)`, summed in enumeration order.
pub fn hex_cubature<T, F>(f: F, n: i64) -> T
where
    T: Zero + Add<Output = T> + Mul<f64, Output = T>,
    F: Fn(&TriplePoint) -> T,
{
    let (h, _) = enum_h(n);
    let mut s = T::zero();
    for j in h.iter() {
        s = s + f(&j.to_point(n)) * hex_weight(j, n);
    }
    s * (1.0 / (n * n) as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NodeClass {
    Interior,
    Vertex30,
    Vertex60,
    Vertex90,
    Edge,
}

impl NodeClass {
    pub fn omega(self) -> i64 {
        match self {
            NodeClass::Interior => 12,
            NodeClass::Vertex30 => 1,
            NodeClass::Vertex60 => 2,
            NodeClass::Vertex90 => 3,
            NodeClass::Edge => 6,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassifiedNode {
    pub j: HexIndex,
    pub class: NodeClass,
    pub omega: i64,
}

pub fn classify(j: &HexIndex, n: i64) -> NodeClass {
    let (j1, j2, j3) = (j.k1, j.k2, j.k3);
    if 0 < j2 && j2 < j1 && j1 < -j3 && -j3 < n {
        NodeClass::Interior
    } else if j1 == 0 && j2 == 0 {
        NodeClass::Vertex30
    } else if j1 == n && j2 == 0 {
        NodeClass::Vertex60
    } else if 2 * j1 == n && 2 * j2 == n {
        NodeClass::Vertex90
    } else {
        NodeClass::Edge
    }
}

/// ϒ_n: congruent `j` with `0 ≤ j2 ≤ j1 ≤ −j3 ≤ n`, ordered lexicographically in `j`.
pub fn enum_upsilon(n: i64) -> Vec<ClassifiedNode> {
    let mut out = Vec::new();
    for j1 in 0..=n {
        for j2 in 0..=j1 {
            let j = HexIndex::from_pair(j1, j2);
            if -j.k3 <= n && j.is_congruent() {
                let class = classify(&j, n);
                out.push(ClassifiedNode { j, class, omega: class.omega() });
            }
        }
    }
    out
}

/// Interior part ϒ°_n.
pub fn enum_upsilon_interior(n: i64) -> Vec<ClassifiedNode> {
    enum_upsilon(n).into_iter().filter(|c| c.class == NodeClass::Interior).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaSet {
    pub family: TrigFamily,
    pub n: i64,
    pub members: Vec<HexIndex>,
}

/// Membership in Γ_n for the family, from the inequality chain
/// `0 ≤ k2 ≤ k1 ≤ k3 + n` with the family's strict places.
pub fn in_gamma(family: TrigFamily, k: &HexIndex, n: i64) -> bool {
    let (lo, mid, hi) = (k.k2, k.k1, k.k3 + n);
    let chain = |a: i64, b: i64, strict: bool| if strict { a < b } else { a <= b };
    let (s0, s1, s2) = match family {
        TrigFamily::CC => (false, false, false),
        TrigFamily::SC => (false, true, true),
        TrigFamily::CS => (true, false, false),
        TrigFamily::SS => (true, true, true),
    };
    chain(0, lo, s0) && chain(lo, mid, s1) && chain(mid, hi, s2)
}

pub fn enum_gamma(family: TrigFamily, n: i64) -> GammaSet {
    let mut members = Vec::new();
    if n >= 0 {
        for k1 in 0..=n {
            for k2 in 0..=k1 {
                let k = HexIndex::from_pair(k1, k2);
                if in_gamma(family, &k, n) {
                    members.push(k);
                }
            }
        }
    }
    GammaSet { family, n, members }
}

/// Number of `(k1,k2) ≥ 0` with `2k1 + 3k2 ≤ n`; zero for negative `n`.
pub fn dim_pi_star(n: i64) -> i64 {
    if n < 0 {
        return 0;
    }
    let q3 = n / 3;
    let q2 = n / 2;
    let twice = (3 * q3 - 2 * n) * (q3 + 1) - 2 * (q2 - n - 1) * (q2 + 1);
    debug_assert_eq!(twice % 2, 0);
    twice / 2
}

/// `(1/n²) Σ_{ϒ_n} ω_j f(j/n) g(j/n)` for real-valued functions.
pub fn triangle_discrete_inner<F, G>(f: F, g: G, n: i64) -> f64
where
    F: Fn(&TriplePoint) -> f64,
    G: Fn(&TriplePoint) -> f64,
{
    let mut s = 0.0;
    for node in enum_upsilon(n) {
        let t = node.j.to_point(n);
        s += node.omega as f64 * f(&t) * g(&t);
    }
    s / (n * n) as f64
}

/// `1/ω^{(n)}_{k̂}`: the discrete squared norm of a family member with index `k ∈ Γ_n`,
/// where `ω^{(n)}_{k̂} = c_{k̂} |kG2|` with `c` the hexagon weight.
pub fn discrete_norm(k: &HexIndex, n: i64) -> f64 {
    1.0 / (hex_weight(&hat(k), n) * orbit(k).len() as f64)
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn hex_weight_is_orbit_invariant(n in 1i64..12, u in 0.0f64..1.0, v in 0.0f64..1.0) {
            let k1 = (-n as f64 + u * (2 * n) as f64).round() as i64;
            // k2 and k3 = −k1 − k2 both within [−n, n]
            let (lo, hi) = ((-n).max(-n - k1), n.min(n - k1));
            let k2 = lo + (v * (hi - lo) as f64).round() as i64;
            let k = HexIndex::from_pair(k1, k2);
            let w = hex_weight(&k, n);
            for g in orbit(&k) {
                prop_assert_eq!(hex_weight(&g, n), w);
            }
        }

        #[test]
        fn hex_cubature_of_one(n in 1i64..15) {
            let s: f64 = hex_cubature(|_| 1.0, n);
            prop_assert!((s - 1.0).abs() < 1e-12, "{}", s);
        }

        #[test]
        fn gamma_sizes_bounded_by_dimension(n in 1i64..20) {
            for fam in TrigFamily::ALL {
                prop_assert!(enum_gamma(fam, n).members.len() as i64 <= dim_pi_star(n));
            }
        }
    }
}

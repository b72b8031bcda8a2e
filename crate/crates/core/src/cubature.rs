//! Gauss, Gauss–Lobatto and Gauss–Radau cubature on Δ* in m-degree, built
//! from the triangular lattice `j/N`, plus the polynomial ideals whose
//! varieties are the node sets.

use crate::chebyshev::{cheb_poly_kind, xy_map, ChebKind, Half, WeightParams, SS_BASE, X_INDEX, Y_INDEX};
use crate::coords::HexIndex;
use crate::gentrig::{eval, vanishes_on_lattice, TrigFamily};
use crate::lattice::{enum_upsilon, NodeClass};
use crate::poly::{rat, MIndex, RatPoly};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum CubatureError {
    #[error("unknown rule kind {0:?}; expected gauss, lobatto, radau1 or radau2")]
    UnknownKind(String),
    #[error("rule order must be at least 1, got {0}")]
    BadOrder(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RuleKind {
    Gauss,
    Lobatto,
    Radau1,
    Radau2,
}

impl RuleKind {
    pub const ALL: [RuleKind; 4] = [RuleKind::Gauss, RuleKind::Lobatto, RuleKind::Radau1, RuleKind::Radau2];

    pub fn name(self) -> &'static str {
        match self {
            RuleKind::Gauss => "gauss",
            RuleKind::Lobatto => "lobatto",
            RuleKind::Radau1 => "radau1",
            RuleKind::Radau2 => "radau2",
        }
    }

    /// Chebyshev kind whose weight the rule integrates.
    pub fn cheb_kind(self) -> ChebKind {
        let (alpha, beta) = match self {
            RuleKind::Gauss => (Half::Plus, Half::Plus),
            RuleKind::Lobatto => (Half::Minus, Half::Minus),
            RuleKind::Radau1 => (Half::Plus, Half::Minus),
            RuleKind::Radau2 => (Half::Minus, Half::Plus),
        };
        ChebKind { alpha, beta }
    }

    /// Lattice size `N` used for a rule of order `n`.
    pub fn lattice_size(self, n: i64) -> i64 {
        match self {
            RuleKind::Gauss => n + 5,
            RuleKind::Lobatto => n,
            RuleKind::Radau1 => n + 2,
            RuleKind::Radau2 => n + 3,
        }
    }
}

impl fmt::Display for RuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleKind {
    type Err = CubatureError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "gauss" => Ok(RuleKind::Gauss),
            "lobatto" => Ok(RuleKind::Lobatto),
            "radau1" => Ok(RuleKind::Radau1),
            "radau2" => Ok(RuleKind::Radau2),
            _ => Err(CubatureError::UnknownKind(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Node {
    pub j: HexIndex,
    pub x: f64,
    pub y: f64,
    pub weight: f64,
}

/// Nodes and positive weights, exact on `Π*_{2n−1}` for the normalized `w_{α,β}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CubatureRule {
    pub kind: RuleKind,
    pub n: i64,
    pub lattice_size: i64,
    pub exact_mdegree: i64,
    pub weight_params: WeightParams,
    pub nodes: Vec<Node>,
}

impl CubatureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn points(&self) -> Vec<(f64, f64)> {
        self.nodes.iter().map(|p| (p.x, p.y)).collect()
    }

    pub fn weights(&self) -> Vec<f64> {
        self.nodes.iter().map(|p| p.weight).collect()
    }

    /// `Σ w_i f(node_i)` in node order.
    pub fn integrate<F: Fn(f64, f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().map(|p| p.weight * f(p.x, p.y)).sum()
    }

    /// `{"kind","n","alpha","beta","nodes":[[x,y],…],"weights":[…],"exact_mdegree"}`
    /// with every float at 17 significant digits.
    pub fn to_json(&self) -> String {
        let pts: Vec<String> = self.nodes.iter().map(|p| format!("[{}, {}]", fmt17(p.x), fmt17(p.y))).collect();
        let ws: Vec<String> = self.nodes.iter().map(|p| fmt17(p.weight)).collect();
        format!(
            "{{\n  \"kind\": \"{}\",\n  \"n\": {},\n  \"alpha\": {},\n  \"beta\": {},\n  \"nodes\": [{}],\n  \"weights\": [{}],\n  \"exact_mdegree\": {}\n}}\n",
            self.kind,
            self.n,
            self.weight_params.alpha,
            self.weight_params.beta,
            pts.join(", "),
            ws.join(", "),
            self.exact_mdegree
        )
    }

    /// `x,y,weight` rows.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("x,y,weight\n");
        for p in &self.nodes {
            s.push_str(&format!("{},{},{}\n", fmt17(p.x), fmt17(p.y), fmt17(p.weight)));
        }
        s
    }
}

/// Seventeen significant digits, valid as a JSON number.
pub fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

fn build(kind: RuleKind, n: i64) -> Result<CubatureRule, CubatureError> {
    if n < 1 {
        return Err(CubatureError::BadOrder(n));
    }
    let big = kind.lattice_size(n);
    let nf = big as f64;
    let mut nodes = Vec::new();
    for c in enum_upsilon(big) {
        let t = c.j.to_point(big);
        let weight = match kind {
            RuleKind::Gauss => {
                if c.class != NodeClass::Interior {
                    continue;
                }
                let s = eval(TrigFamily::SS, &SS_BASE, &t);
                144.0 * s * s / (nf * nf)
            }
            RuleKind::Lobatto => c.omega as f64 / (nf * nf),
            RuleKind::Radau1 => {
                if vanishes_on_lattice(TrigFamily::SC, &c.j, big) {
                    continue;
                }
                let s = eval(TrigFamily::SC, &X_INDEX, &t);
                6.0 * c.omega as f64 * s * s / (nf * nf)
            }
            RuleKind::Radau2 => {
                if vanishes_on_lattice(TrigFamily::CS, &c.j, big) {
                    continue;
                }
                let s = eval(TrigFamily::CS, &Y_INDEX, &t);
                6.0 * c.omega as f64 * s * s / (nf * nf)
            }
        };
        let (x, y) = xy_map(&t);
        nodes.push(Node { j: c.j, x, y, weight });
    }
    Ok(CubatureRule {
        kind,
        n,
        lattice_size: big,
        exact_mdegree: 2 * n - 1,
        weight_params: kind.cheb_kind().params(),
        nodes,
    })
}

pub fn rule(kind: RuleKind, n: i64) -> Result<CubatureRule, CubatureError> {
    build(kind, n)
}

pub fn gauss_rule(n: i64) -> Result<CubatureRule, CubatureError> {
    build(RuleKind::Gauss, n)
}

pub fn lobatto_rule(n: i64) -> Result<CubatureRule, CubatureError> {
    build(RuleKind::Lobatto, n)
}

/// The rules for `w_{1/2,−1/2}` (lattice `n+2`) and `w_{−1/2,1/2}` (lattice `n+3`).
pub fn radau_rules(n: i64) -> Result<(CubatureRule, CubatureRule), CubatureError> {
    Ok((build(RuleKind::Radau1, n)?, build(RuleKind::Radau2, n)?))
}

/// `α*`: the index of `F_{(k1−1, k2, k3+1)}` for `k` the trigonometric index of `α`, with its sign.
pub fn star_partner(kind: ChebKind, a: &MIndex) -> Option<(i8, MIndex)> {
    let k = kind.trig_index(a.k1 as i64, a.k2 as i64);
    kind.from_trig(&HexIndex::new(k.k1 - 1, k.k2, k.k3 + 1))
}

/// Generators of the ideal whose variety is the node set of `kind` at order `n`.
pub fn ideal_generators(kind: RuleKind, n: i64) -> Vec<(MIndex, RatPoly)> {
    let ck = kind.cheb_kind();
    match kind {
        RuleKind::Gauss | RuleKind::Radau1 => {
            MIndex::of_mdegree(n as u32).into_iter().map(|a| (a, cheb_poly_kind(ck, &a))).collect()
        }
        RuleKind::Lobatto | RuleKind::Radau2 => MIndex::of_mdegree((n + 1) as u32)
            .into_iter()
            .map(|a| {
                let p = cheb_poly_kind(ck, &a);
                let g = match star_partner(ck, &a) {
                    Some((s, b)) => &p - &cheb_poly_kind(ck, &b).scale(&rat(s as i64, 1)),
                    None => p,
                };
                (a, g)
            })
            .collect(),
    }
}

/// Largest `|p|` over the images `xy_map(j/m)` of a fine lattice, as a scale for Δ*.
pub fn sup_on_deltoid(p: &RatPoly) -> f64 {
    let f = p.to_float();
    let m = 60;
    let mut best = 0f64;
    for c in enum_upsilon(m) {
        let (x, y) = xy_map(&c.j.to_point(m));
        best = best.max(f.eval_fast(x, y).abs());
    }
    for (x, y) in [(1.0, 1.0), (-0.5, 1.0), (-1.0 / 3.0, -1.0 / 3.0)] {
        best = best.max(f.eval_fast(x, y).abs());
    }
    best
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VarietyReport {
    pub kind: RuleKind,
    pub n: i64,
    pub nodes: usize,
    pub generators: usize,
    /// `max |g(node)| / sup_Δ* |g|` over generators and nodes.
    pub max_relative_residual: f64,
    /// Smallest `max_node |P|` over lower-degree basis polynomials; must stay away from zero.
    pub control_min: f64,
}

pub fn variety_check(kind: RuleKind, n: i64) -> Result<VarietyReport, CubatureError> {
    let r = build(kind, n)?;
    let gens = ideal_generators(kind, n);
    let mut worst = 0f64;
    for (_, g) in &gens {
        let scale = sup_on_deltoid(g);
        let f = g.to_float();
        for p in &r.nodes {
            worst = worst.max(f.eval_fast(p.x, p.y).abs() / scale);
        }
    }
    let ck = kind.cheb_kind();
    let mut control = f64::INFINITY;
    for a in MIndex::up_to((n - 1).max(0) as u32) {
        let f = cheb_poly_kind(ck, &a).to_float();
        let m = r.nodes.iter().map(|p| f.eval_fast(p.x, p.y).abs()).fold(0.0, f64::max);
        control = control.min(m);
    }
    Ok(VarietyReport { kind, n, nodes: r.len(), generators: gens.len(), max_relative_residual: worst, control_min: control })
}

/// `T_{3,0}` and `T_{0,2}` as printed in closed form.
pub fn t30_printed() -> RatPoly {
    RatPoly::from_int_terms(&[(3, 0, 36), (1, 1, -18), (1, 0, -9), (0, 1, -6), (0, 0, -2)])
}

pub fn t02_printed() -> RatPoly {
    RatPoly::from_int_terms(&[(0, 2, 6), (0, 1, 10), (3, 0, -72), (1, 1, 36), (1, 0, 18), (0, 0, 3)])
}

/// The three common zeros of `T_{3,0}` and `T_{0,2}` in Δ*, closed form.
pub fn lobatto_common_zeros() -> [(f64, f64); 3] {
    let s7 = 7f64.sqrt();
    let r = 2f64.sqrt() / (s7 + 1.0);
    let phi = (3.0 * 2f64.sqrt() / (2.0 * s7 + 1.0)).acos() / 3.0;
    let y = -1.0 / (s7 + 1.0);
    let pt = |mu: f64| (r * (2.0 * std::f64::consts::PI * mu / 3.0 + phi).cos(), y);
    [pt(0.0), pt(1.0), pt(2.0)]
}

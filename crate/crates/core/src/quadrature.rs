//! Reference integration against `w_{α,β}` on Δ*, carried out on the
//! fundamental triangle in `(t1, t2)`.
//!
//! The triangle is cut into six pieces `(vertex, edge midpoint, centroid)`,
//! each collapsed onto the unit square with the vertex at `u = 0` and the
//! triangle edge at `v = 0`. On every piece the pulled-back weight
//! `|SC_{1,0,-1}|^p |CS_{1,1,-2}|^q` (with `p = 2α+1`, `q = 2β+1`) factors as
//! `u^a v^b R(u, v)` with `R` smooth and positive, so a tensor Gauss–Jacobi rule
//! absorbs the edge and vertex singularities, including the isolated zero of
//! `sin(πt1)` at `(1, 0)`.

use crate::chebyshev::{cs_factor, deltoid_f, sc_factor, xy_map, ChebKind, WeightParams};
use crate::gentrig::TrigFamily;
use crate::coords::{make_point, TriplePoint};
use gauss_quad::GaussJacobi;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum QuadratureError {
    #[error("weight exponents ({0}, {1}) are not integrable at the 30° vertex")]
    NotIntegrable(f64, f64),
    #[error("no convergence up to order {order}: last value {value}, last change {delta}")]
    NotConverged { order: usize, value: f64, delta: f64 },
    #[error("integrand is not finite at ({0}, {1})")]
    NonFinite(f64, f64),
}

const BASE_ORDER: usize = 16;
const DEFAULT_CAP: usize = 256;
pub const REL_TOL: f64 = 1e-12;

/// Largest per-direction order tried; `G2CUB_QUAD_CAP` overrides the default 256.
pub fn order_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("G2CUB_QUAD_CAP")
            .ok()
            .and_then(|s| s.parse::<usize>().ok())
            .map(|c| c.max(BASE_ORDER))
            .unwrap_or(DEFAULT_CAP)
    })
}

/// Product-form `|SC_{1,0,-1}(t)|`.
pub fn sc_abs(t1: f64, t2: f64) -> f64 {
    let s = |a: f64| (PI * a / 3.0).sin();
    4.0 / 3.0 * (s(t1 - t2) * s(t1 + 2.0 * t2) * s(2.0 * t1 + t2)).abs()
}

/// Product-form `|CS_{1,1,-2}(t)|`.
pub fn cs_abs(t1: f64, t2: f64) -> f64 {
    let s = |a: f64| (PI * a).sin();
    4.0 / 3.0 * (s(t1) * s(t2) * s(t1 + t2)).abs()
}

/// `sin(πa/c)/a`, continuous at `a = 0`.
fn sinc(a: f64, c: f64) -> f64 {
    if a.abs() < 1e-300 {
        PI / c
    } else {
        (PI * a / c).sin() / a
    }
}

/// The six sine factors `|sin(π(a·t1 + b·t2)/c)|` of `|SC|` (first three) and `|CS|`.
const FACTORS: [(f64, f64, f64); 6] = [
    (1.0, -1.0, 3.0),
    (1.0, 2.0, 3.0),
    (2.0, 1.0, 3.0),
    (1.0, 0.0, 1.0),
    (0.0, 1.0, 1.0),
    (1.0, 1.0, 1.0),
];

const CENTROID: (f64, f64) = (0.5, 1.0 / 6.0);

/// Sub-triangle `(vertex, edge midpoint, centroid)`, parametrized by
/// `t = V + u·((M − V) + v·(C − M))` on the unit square.
#[derive(Debug, Clone, Copy)]
struct Piece {
    vertex: (f64, f64),
    mid: (f64, f64),
}

const PIECES: [Piece; 6] = [
    Piece { vertex: (0.0, 0.0), mid: (0.5, 0.0) },
    Piece { vertex: (0.0, 0.0), mid: (0.25, 0.25) },
    Piece { vertex: (1.0, 0.0), mid: (0.5, 0.0) },
    Piece { vertex: (1.0, 0.0), mid: (0.75, 0.25) },
    Piece { vertex: (0.5, 0.5), mid: (0.75, 0.25) },
    Piece { vertex: (0.5, 0.5), mid: (0.25, 0.25) },
];

fn lin(f: (f64, f64, f64), t: (f64, f64)) -> f64 {
    f.0 * t.0 + f.1 * t.1
}

impl Piece {
    fn e1(&self) -> (f64, f64) {
        (self.mid.0 - self.vertex.0, self.mid.1 - self.vertex.1)
    }

    fn e2(&self) -> (f64, f64) {
        (CENTROID.0 - self.mid.0, CENTROID.1 - self.mid.1)
    }

    fn point(&self, u: f64, v: f64) -> (f64, f64) {
        let (a, b) = (self.e1(), self.e2());
        (self.vertex.0 + u * (a.0 + v * b.0), self.vertex.1 + u * (a.1 + v * b.1))
    }

    /// Whether factor `i` vanishes at the vertex, and whether along the whole `v = 0` edge.
    fn zeros(&self, i: usize) -> (bool, bool) {
        let f = FACTORS[i];
        let s = lin(f, self.vertex) / f.2;
        let at_vertex = (s - s.round()).abs() < 1e-12;
        (at_vertex, at_vertex && lin(f, self.e1()).abs() < 1e-12)
    }

    /// Exponents of `u` and `v` in the pulled-back weight `|SC|^p |CS|^q dt`.
    fn exponents(&self, p: f64, q: f64) -> (f64, f64) {
        let (mut eu, mut ev) = (1.0, 0.0);
        for i in 0..6 {
            let e = if i < 3 { p } else { q };
            let (at_vertex, on_edge) = self.zeros(i);
            if at_vertex {
                eu += e;
            }
            if on_edge {
                ev += e;
            }
        }
        (eu, ev)
    }

    /// Smooth positive remainder of the weight after `u^{eu} v^{ev}` is divided out.
    fn remainder(&self, u: f64, v: f64, p: f64, q: f64) -> f64 {
        let (a, b) = (self.e1(), self.e2());
        let t = self.point(u, v);
        let mut r = (4.0 / 3.0f64).powf(p + q) * (a.0 * b.1 - a.1 * b.0).abs();
        for (i, &f) in FACTORS.iter().enumerate() {
            let e = if i < 3 { p } else { q };
            if e == 0.0 {
                continue;
            }
            let s = match self.zeros(i) {
                (true, true) => (sinc(u * v * lin(f, b), f.2) * lin(f, b)).abs(),
                (true, false) => {
                    let l = lin(f, a) + v * lin(f, b);
                    (sinc(u * l, f.2) * l).abs()
                }
                _ => (PI * lin(f, t) / f.2).sin().abs(),
            };
            r *= s.powf(e);
        }
        r
    }
}

/// Nodes and weights of `∫_△ f(t) |SC|^p |CS|^q dt1 dt2` rescaled to unit total mass.
#[derive(Debug)]
pub struct Grid {
    pub order: usize,
    pub points: Vec<TriplePoint>,
    pub xy: Vec<(f64, f64)>,
    pub weights: Vec<f64>,
    /// Unnormalized total, `∫_△ |SC|^p |CS|^q dt1 dt2`.
    pub raw_total: f64,
}

/// Gauss–Jacobi rule for `x^a (1 − x)^b` on `[0, 1]`.
fn jacobi01(order: usize, a: f64, b: f64) -> Vec<(f64, f64)> {
    let rule = GaussJacobi::new(order, b, a).expect("exponents checked by caller");
    let scale = 2f64.powf(a + b + 1.0);
    rule.as_node_weight_pairs().iter().map(|&(x, w)| ((1.0 + x) / 2.0, w / scale)).collect()
}

impl Grid {
    fn build(order: usize, p: f64, q: f64) -> Grid {
        let n = PIECES.len() * order * order;
        let mut points = Vec::with_capacity(n);
        let mut xy = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for piece in PIECES.iter() {
            let (eu, ev) = piece.exponents(p, q);
            let ur = jacobi01(order, eu, 0.0);
            let vr = jacobi01(order, ev, 0.0);
            for &(u, wu) in ur.iter() {
                for &(v, wv) in vr.iter() {
                    let (t1, t2) = piece.point(u, v);
                    let t = make_point(t1, t2);
                    xy.push(xy_map(&t));
                    points.push(t);
                    weights.push(wu * wv * piece.remainder(u, v, p, q));
                }
            }
        }
        let raw_total: f64 = weights.iter().sum();
        for w in weights.iter_mut() {
            *w /= raw_total;
        }
        Grid { order, points, xy, weights, raw_total }
    }
}

/// Normalized measure `c_{α,β} w_{α,β}(x, y) dx dy` with cached grids.
#[derive(Debug)]
pub struct Measure {
    params: WeightParams,
    p: f64,
    q: f64,
    levels: Vec<OnceLock<Grid>>,
}

impl Measure {
    /// Shared instance for the given exponents.
    pub fn get(params: &WeightParams) -> Result<Arc<Measure>, QuadratureError> {
        static CACHE: OnceLock<Mutex<HashMap<(u64, u64), Arc<Measure>>>> = OnceLock::new();
        let key = (params.alpha.to_bits(), params.beta.to_bits());
        let mut cache = CACHE.get_or_init(|| Mutex::new(HashMap::new())).lock().unwrap_or_else(|e| e.into_inner());
        if let Some(m) = cache.get(&key) {
            return Ok(m.clone());
        }
        let m = Arc::new(Measure::new(params)?);
        cache.insert(key, m.clone());
        Ok(m)
    }

    pub fn new(params: &WeightParams) -> Result<Measure, QuadratureError> {
        let p = 2.0 * params.alpha + 1.0;
        let q = 2.0 * params.beta + 1.0;
        if !(3.0 * p + 3.0 * q + 1.0 > -1.0 && p > -1.0 && q > -1.0) {
            return Err(QuadratureError::NotIntegrable(params.alpha, params.beta));
        }
        let mut levels = Vec::new();
        let mut order = BASE_ORDER;
        while order <= order_cap() {
            levels.push(OnceLock::new());
            order *= 2;
        }
        Ok(Measure { params: *params, p, q, levels })
    }

    pub fn params(&self) -> WeightParams {
        self.params
    }

    pub fn level_count(&self) -> usize {
        self.levels.len()
    }

    pub fn grid(&self, level: usize) -> &Grid {
        self.levels[level].get_or_init(|| Grid::build(BASE_ORDER << level, self.p, self.q))
    }

    /// `∫ f dμ` with `f` given on the triangle, refined until two successive orders agree.
    pub fn integrate_t<F>(&self, f: F) -> Result<f64, QuadratureError>
    where
        F: Fn(&TriplePoint, f64, f64) -> f64,
    {
        let mut prev: Option<f64> = None;
        let mut delta = f64::INFINITY;
        let mut value = 0.0;
        for level in 0..self.levels.len() {
            let g = self.grid(level);
            let mut s = 0.0;
            let mut sa = 0.0;
            for ((t, &(x, y)), &w) in g.points.iter().zip(g.xy.iter()).zip(g.weights.iter()) {
                let v = f(t, x, y);
                if !v.is_finite() {
                    return Err(QuadratureError::NonFinite(x, y));
                }
                s += w * v;
                sa += w * v.abs();
            }
            value = s;
            if let Some(pv) = prev {
                delta = (s - pv).abs();
                if delta <= REL_TOL * s.abs().max(sa) {
                    return Ok(s);
                }
            }
            prev = Some(s);
        }
        Err(QuadratureError::NotConverged { order: BASE_ORDER << (self.levels.len() - 1), value, delta })
    }

    /// `∫ f(x, y) dμ`.
    pub fn integrate<F: Fn(f64, f64) -> f64>(&self, f: F) -> Result<f64, QuadratureError> {
        self.integrate_t(|_, x, y| f(x, y))
    }
}

/// `⟨f, g⟩_{α,β}` under the normalized weight.
pub fn continuous_inner<F, G>(params: &WeightParams, f: F, g: G) -> Result<f64, QuadratureError>
where
    F: Fn(f64, f64) -> f64,
    G: Fn(f64, f64) -> f64,
{
    Measure::get(params)?.integrate(|x, y| f(x, y) * g(x, y))
}

/// Squared denominator of the quotient form of a Chebyshev kind, as a function of `(x, y)`.
pub fn base_square(kind: ChebKind, x: f64, y: f64) -> f64 {
    match kind.family() {
        TrigFamily::CC => 1.0,
        TrigFamily::SC => sc_factor(x, y) / 3.0,
        TrigFamily::CS => cs_factor(x, y),
        TrigFamily::SS => 3.0 * deltoid_f(x, y),
    }
}

/// `4 ∫_△ |F_base(t)|² dt`, the trigonometric norm of the kind's denominator.
pub fn trig_mass(kind: ChebKind) -> Result<f64, QuadratureError> {
    reference_integral(&ChebKind::ALL[0].params(), |x, y| base_square(kind, x, y))
}

/// `⟨f, g⟩` in the trigonometric normalization `4 ∫_△ f g |F_base|² dt`,
/// evaluated as `trig_mass` times `continuous_inner` under `w_{α,β}`.
pub fn pullback_inner<F, G>(kind: ChebKind, f: F, g: G) -> Result<f64, QuadratureError>
where
    F: Fn(f64, f64) -> f64,
    G: Fn(f64, f64) -> f64,
{
    Ok(trig_mass(kind)? * continuous_inner(&kind.params(), f, g)?)
}

/// `∫ f dμ_{α,β}` under the normalized weight.
pub fn reference_integral<F: Fn(f64, f64) -> f64>(params: &WeightParams, f: F) -> Result<f64, QuadratureError> {
    Measure::get(params)?.integrate(f)
}

//! Browser bindings: cubature nodes on the deltoid, Chebyshev heat maps and
//! trigonometric fields on the triangle. Grids come back as flat row-major
//! `Float64Array`s with `NaN` outside the region.

use g2cub::chebyshev::{cheb_poly_kind, deltoid_f, xy_map, ChebKind};
use g2cub::coords::{cart_to_homog, make_point, HexIndex};
use g2cub::cubature::{rule, RuleKind};
use g2cub::gentrig::{eval, TrigFamily};
use g2cub::poly::MIndex;
use wasm_bindgen::prelude::*;

/// Bounding box `[x0, x1, y0, y1]` of the deltoid region, from a dense boundary trace.
pub fn deltoid_box() -> [f64; 4] {
    let b = boundary(2000);
    let mut bx = [f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY];
    for p in b.chunks(2) {
        bx = [bx[0].min(p[0]), bx[1].max(p[0]), bx[2].min(p[1]), bx[3].max(p[1])];
    }
    bx
}

/// Bounding box in Cartesian coordinates of the fundamental triangle.
pub fn triangle_box() -> [f64; 4] {
    let corners = [make_point(0.0, 0.0), make_point(1.0, 0.0), make_point(0.5, 0.5)].map(|t| t.to_cart());
    let xs = corners.map(|c| c.0);
    let ys = corners.map(|c| c.1);
    let lo = |v: [f64; 3]| v.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = |v: [f64; 3]| v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    [lo(xs), hi(xs), lo(ys), hi(ys)]
}

/// `[x, y, weight]` per node.
pub fn nodes(kind: &str, n: i32) -> Result<Vec<f64>, String> {
    let kind: RuleKind = kind.parse().map_err(|e: g2cub::cubature::CubatureError| e.to_string())?;
    let r = rule(kind, n as i64).map_err(|e| e.to_string())?;
    Ok(r.nodes.iter().flat_map(|p| [p.x, p.y, p.weight]).collect())
}

/// `[x, y]` pairs tracing the boundary of the deltoid, as images of the triangle edges.
pub fn boundary(samples: u32) -> Vec<f64> {
    let s = samples.max(2) as f64;
    let corners = [(0.0, 0.0), (1.0, 0.0), (0.5, 0.5), (0.0, 0.0)];
    let mut out = Vec::new();
    for w in corners.windows(2) {
        let ((a1, a2), (b1, b2)) = (w[0], w[1]);
        for i in 0..samples.max(2) {
            let u = i as f64 / s;
            let (x, y) = xy_map(&make_point(a1 + u * (b1 - a1), a2 + u * (b2 - a2)));
            out.extend([x, y]);
        }
    }
    out
}

fn grid<F: Fn(f64, f64) -> f64>(bx: [f64; 4], width: u32, height: u32, f: F) -> Vec<f64> {
    let (w, h) = (width.max(2), height.max(2));
    let mut out = Vec::with_capacity((w * h) as usize);
    for r in 0..h {
        // first row is the top of the picture
        let y = bx[3] - (bx[3] - bx[2]) * r as f64 / (h - 1) as f64;
        for c in 0..w {
            let x = bx[0] + (bx[1] - bx[0]) * c as f64 / (w - 1) as f64;
            out.push(f(x, y));
        }
    }
    out
}

/// `P^{α,β}_{k1,k2}` sampled over [`deltoid_box`] for half-integer `α, β`.
pub fn cheb_heatmap(alpha: f64, beta: f64, k1: u32, k2: u32, width: u32, height: u32) -> Result<Vec<f64>, String> {
    let kind = ChebKind::from_params(alpha, beta).ok_or_else(|| format!("({alpha}, {beta}) must be ±1/2 each"))?;
    if 2 * k1 + 3 * k2 > 40 {
        return Err("m-degree above 40 is not offered here".into());
    }
    let p = cheb_poly_kind(kind, &MIndex::new(k1, k2)).to_float();
    Ok(grid(deltoid_box(), width, height, |x, y| if deltoid_f(x, y) >= 0.0 { p.eval_fast(x, y) } else { f64::NAN }))
}

/// A generalized trigonometric function sampled over [`triangle_box`].
pub fn trig_field(family: &str, k1: i32, k2: i32, width: u32, height: u32) -> Result<Vec<f64>, String> {
    let fam: TrigFamily = family.parse()?;
    let k = HexIndex::from_pair(k1 as i64, k2 as i64);
    Ok(grid(triangle_box(), width, height, |x1, x2| {
        let t = cart_to_homog(x1, x2);
        let inside = t.t2 >= -1e-12 && t.t1 >= t.t2 - 1e-12 && t.t3 >= -1.0 - 1e-12;
        if inside {
            eval(fam, &k, &t)
        } else {
            f64::NAN
        }
    }))
}

#[wasm_bindgen(js_name = ruleNodes)]
pub fn rule_nodes_js(kind: &str, n: i32) -> Result<Vec<f64>, JsError> {
    nodes(kind, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = deltoidBoundary)]
pub fn deltoid_boundary_js(samples: u32) -> Vec<f64> {
    boundary(samples)
}

#[wasm_bindgen(js_name = deltoidBox)]
pub fn deltoid_box_js() -> Vec<f64> {
    deltoid_box().to_vec()
}

#[wasm_bindgen(js_name = triangleBox)]
pub fn triangle_box_js() -> Vec<f64> {
    triangle_box().to_vec()
}

#[wasm_bindgen(js_name = chebHeatmap)]
pub fn cheb_heatmap_js(alpha: f64, beta: f64, k1: u32, k2: u32, width: u32, height: u32) -> Result<Vec<f64>, JsError> {
    cheb_heatmap(alpha, beta, k1, k2, width, height).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = trigField)]
pub fn trig_field_js(family: &str, k1: i32, k2: i32, width: u32, height: u32) -> Result<Vec<f64>, JsError> {
    trig_field(family, k1, k2, width, height).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_triples() {
        let v = nodes("gauss", 6).unwrap();
        assert_eq!(v.len(), 15);
        let total: f64 = v.chunks(3).map(|c| c[2]).sum();
        assert!((total - 1.0).abs() < 1e-13);
        let bx = deltoid_box();
        for c in v.chunks(3) {
            assert!(c[0] >= bx[0] && c[0] <= bx[1] && c[1] >= bx[2] && c[1] <= bx[3]);
        }
        assert!(nodes("radau1", 0).is_err());
        assert!(nodes("midpoint", 3).is_err());
    }

    #[test]
    fn box_examples() {
        let bx = deltoid_box();
        assert!((bx[1] - 1.0).abs() < 1e-12 && (bx[3] - 1.0).abs() < 1e-12);
        assert!(bx[0] < -0.5 + 1e-9 && bx[2] < -1.0 / 3.0 + 1e-9);
    }

    #[test]
    fn boundary_hits_corners() {
        let b = boundary(30);
        assert_eq!(b.len(), 180);
        assert_eq!((b[0], b[1]), (1.0, 1.0));
        assert!(b.chunks(2).all(|p| deltoid_f(p[0], p[1]).abs() < 1e-12));
    }

    #[test]
    fn heatmap_masks_outside() {
        let g = cheb_heatmap(-0.5, -0.5, 2, 0, 31, 27).unwrap();
        assert_eq!(g.len(), 31 * 27);
        assert!(g.iter().any(|v| v.is_nan()));
        // top-right corner is the cusp (1, 1), where 6x² − 2x − 2y − 1 = 1
        assert!((g[30] - 1.0).abs() < 1e-12);
        assert!(cheb_heatmap(0.3, 0.5, 1, 0, 4, 4).is_err());
    }

    #[test]
    fn trig_field_values() {
        let g = trig_field("cc", 0, 0, 16, 16).unwrap();
        assert!(g.iter().filter(|v| !v.is_nan()).all(|&v| (v - 1.0).abs() < 1e-12));
        assert!(g.iter().filter(|v| !v.is_nan()).count() > 40);
        let s = trig_field("ss", 2, 1, 20, 20).unwrap();
        assert!(s.iter().filter(|v| !v.is_nan()).all(|v| v.abs() <= 1.0 + 1e-12));
        assert!(trig_field("xx", 1, 0, 4, 4).is_err());
    }
}

//! The operator `L_{α,β} = −A11 ∂x² − 2A12 ∂x∂y − A22 ∂y² + B1 ∂x + B2 ∂y`
//! and its polynomial eigenfunctions.

use crate::chebyshev::WeightParams;
use crate::poly::{star_cmp, Coeff, FloatPoly, MIndex, Poly};
use crate::quadrature::{continuous_inner, Measure, QuadratureError, REL_TOL};
use nalgebra::{DMatrix, SymmetricEigen};
use std::cmp::Ordering;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SturmError {
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
    #[error("Gram matrix condition estimate {0:.3e} exceeds 1e12")]
    IllConditioned(f64),
    #[error("Gram matrix did not settle up to quadrature order {0}")]
    GramNotSettled(usize),
}

pub const CONDITION_LIMIT: f64 = 1e12;

/// Polynomial coefficients of `L_{α,β}`.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorCoeffs<C: Coeff> {
    pub a11: Poly<C>,
    pub a12: Poly<C>,
    pub a22: Poly<C>,
    pub b1: Poly<C>,
    pub b2: Poly<C>,
}

impl<C: Coeff> OperatorCoeffs<C> {
    pub fn new(alpha: C, beta: C) -> Self {
        let i = |v: i64| C::from_i64(v);
        let a11 = Poly::from_int_terms(&[(2, 0, -6), (0, 1, 1), (1, 0, 3), (0, 0, 2)]);
        let a12 = Poly::from_int_terms(&[(1, 1, -9), (2, 0, 18), (0, 1, -6), (0, 0, -3)]);
        let a22 = Poly::from_int_terms(&[(0, 2, -18), (3, 0, 108), (1, 1, -54), (1, 0, -27), (0, 1, -9)]);
        let mut b1 = Poly::zero();
        b1.add_term(1, 0, i(21) + i(12) * alpha.clone() + i(18) * beta.clone());
        b1.add_term(0, 0, i(6) * alpha.clone() + i(3));
        let mut b2 = Poly::zero();
        b2.add_term(1, 0, i(18) + i(36) * alpha.clone());
        b2.add_term(0, 1, i(45) + i(36) * beta.clone() + i(18) * alpha);
        b2.add_term(0, 0, i(18) * beta + i(9));
        OperatorCoeffs { a11, a12, a22, b1, b2 }
    }

    /// `det [[A11, A12], [A12, A22]]`.
    pub fn det_lambda(&self) -> Poly<C> {
        &(&self.a11 * &self.a22) - &(&self.a12 * &self.a12)
    }

    pub fn apply(&self, q: &Poly<C>) -> Poly<C> {
        let qx = q.dx();
        let qy = q.dy();
        let two = C::from_i64(2);
        let mut r = -&(&self.a11 * &qx.dx());
        r = &r - &(&self.a12 * &qx.dy()).scale(&two);
        r = &r - &(&self.a22 * &qy.dy());
        r = &r + &(&self.b1 * &qx);
        &r + &(&self.b2 * &qy)
    }
}

/// `L_{α,β} q` in floating point.
pub fn apply_l(p: &WeightParams, q: &FloatPoly) -> FloatPoly {
    OperatorCoeffs::new(p.alpha, p.beta).apply(q)
}

/// Shift set of the monomial image, as `(μ, ν)` with exponent `(j − 2μ + 3ν, k + μ − 2ν)`.
pub const IMAGE_SHIFTS: [(i64, i64); 9] = [(0, 0), (0, 1), (1, 0), (1, 1), (2, 1), (3, 2), (4, 2), (4, 3), (5, 3)];

/// One term of `L x^j y^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct ImageTerm<C> {
    pub shift: (i64, i64),
    pub exponent: (i64, i64),
    pub coeff: C,
}

/// Nine-term expansion of `L_{α,β} x^j y^k`; terms with negative exponents carry zero coefficients.
pub fn monomial_image<C: Coeff>(alpha: C, beta: C, j: u32, k: u32) -> Vec<ImageTerm<C>> {
    let i = |v: i64| C::from_i64(v);
    let (jj, kk) = (j as i64, k as i64);
    let (ji, ki) = (i(jj), i(kk));
    let coeff = |s: (i64, i64)| -> C {
        match s {
            (0, 0) => {
                i(6 * (jj * jj + 3 * kk * kk + 3 * jj * kk))
                    + i(3) * (i(5) + i(4) * alpha.clone() + i(6) * beta.clone()) * ji.clone()
                    + i(3) * (i(9) + i(6) * alpha.clone() + i(12) * beta.clone()) * ki.clone()
            }
            (0, 1) => i(-108 * kk * (kk - 1)),
            (1, 0) => i(-jj * (jj - 1)),
            (1, 1) => i(18) * ki.clone() * (i(3 * kk - 2 - 2 * jj) + i(2) * alpha.clone()),
            (2, 1) => i(3) * ji.clone() * (i(-jj + 2 + 4 * kk) + i(2) * alpha.clone()),
            (3, 2) => i(9) * ki.clone() * (ki.clone() + i(2) * beta.clone()),
            (4, 2) => i(-2 * jj * (jj - 1)),
            (4, 3) => i(27 * kk * (kk - 1)),
            _ => i(6 * jj * kk),
        }
    };
    IMAGE_SHIFTS
        .iter()
        .map(|&(mu, nu)| ImageTerm { shift: (mu, nu), exponent: (jj - 2 * mu + 3 * nu, kk + mu - 2 * nu), coeff: coeff((mu, nu)) })
        .collect()
}

/// Sum of a monomial image as a polynomial.
pub fn image_poly<C: Coeff>(terms: &[ImageTerm<C>]) -> Poly<C> {
    let mut p = Poly::zero();
    for t in terms {
        if t.coeff.is_zero() {
            continue;
        }
        assert!(t.exponent.0 >= 0 && t.exponent.1 >= 0, "nonzero coefficient at negative exponent");
        p.add_term(t.exponent.0 as u32, t.exponent.1 as u32, t.coeff.clone());
    }
    p
}

/// `λ_k = (3/2)|k|(|k| + 5 + 4α + 6β) + (9/2) k2 (k2 + 1 + 2β)`.
pub fn eigenvalue_exact<C: Coeff>(alpha: C, beta: C, k: &MIndex) -> C {
    let i = |v: i64| C::from_i64(v);
    let m = k.mdegree() as i64;
    let k2 = k.k2 as i64;
    // twice the value, to stay in the integers until the end
    let twice = i(3 * m) * (i(m + 5) + i(4) * alpha + i(6) * beta.clone()) + i(9 * k2) * (i(k2 + 1) + i(2) * beta);
    let half = C::one() / i(2);
    twice * half
}

pub fn eigenvalue(p: &WeightParams, k: &MIndex) -> f64 {
    let m = k.mdegree() as f64;
    let k2 = k.k2 as f64;
    1.5 * m * (m + 5.0 + 4.0 * p.alpha + 6.0 * p.beta) + 4.5 * k2 * (k2 + 1.0 + 2.0 * p.beta)
}

/// Exponents `(k1 − 2p + 3q, k2 + p − 2q)` of the set Γ⁺ attached to `k`, restricted to `ℕ²`, with `(p, q)`.
pub fn gamma_plus(k: &MIndex) -> Vec<(MIndex, i64, i64)> {
    let (m, n) = (k.k1 as i64, k.k2 as i64);
    let mut out = Vec::new();
    for p in 0..=(2 * m + 3 * n) {
        for q in 0..=((p + n) / 2) {
            let (j1, j2) = (m - 2 * p + 3 * q, n + p - 2 * q);
            if j1 >= 0 && j2 >= 0 {
                out.push((MIndex::new(j1 as u32, j2 as u32), p, q));
            }
        }
    }
    out
}

/// Orthogonal polynomial with leading term `x^{k1} y^{k2}` and its eigen-data.
#[derive(Debug, Clone)]
pub struct JacobiPoly {
    pub poly: FloatPoly,
    pub eigenvalue: f64,
    /// `max |L P − λ P| / max |λ P|` over coefficients.
    pub residual: f64,
    pub condition: f64,
    pub quadrature_order: usize,
}

fn basis_for(k: &MIndex) -> Vec<MIndex> {
    MIndex::up_to(k.mdegree()).into_iter().filter(|m| star_cmp(m, k) != Ordering::Greater).collect()
}

fn gram_at(values: &[Vec<f64>], weights: &[f64]) -> DMatrix<f64> {
    let n = values.len();
    DMatrix::from_fn(n, n, |i, j| values[i].iter().zip(values[j].iter()).zip(weights).map(|((a, b), w)| a * b * w).sum())
}

fn monomial_values(basis: &[MIndex], xy: &[(f64, f64)]) -> Vec<Vec<f64>> {
    basis.iter().map(|b| xy.iter().map(|&(x, y)| x.powi(b.k1 as i32) * y.powi(b.k2 as i32)).collect()).collect()
}

/// Gram–Schmidt of the ∗-ordered monomials `⪯ k` under `⟨·,·⟩_{w_{α,β}}`.
pub fn jacobi_poly(p: &WeightParams, k: &MIndex) -> Result<JacobiPoly, SturmError> {
    let measure = Measure::get(p)?;
    let basis = basis_for(k);
    let nb = basis.len();

    // smallest grid on which every Gram entry agrees with the next one
    let mut settled = None;
    let mut prev: Option<DMatrix<f64>> = None;
    for level in 0..measure.level_count() {
        let g = measure.grid(level);
        let gram = gram_at(&monomial_values(&basis, &g.xy), &g.weights);
        if let Some(pg) = prev.as_ref() {
            let ok = (0..nb).all(|i| {
                (0..nb).all(|j| {
                    let scale = (gram[(i, i)] * gram[(j, j)]).sqrt();
                    (gram[(i, j)] - pg[(i, j)]).abs() <= REL_TOL * scale
                })
            });
            if ok {
                settled = Some((level, gram));
                break;
            }
        }
        prev = Some(gram);
    }
    let (level, gram) = settled.ok_or(SturmError::GramNotSettled(measure.grid(measure.level_count() - 1).order))?;

    let d = DMatrix::from_fn(nb, nb, |i, j| gram[(i, j)] / (gram[(i, i)] * gram[(j, j)]).sqrt());
    let ev = SymmetricEigen::new(d).eigenvalues;
    let (lo, hi) = ev.iter().fold((f64::INFINITY, 0f64), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    let condition = if lo > 0.0 { hi / lo } else { f64::INFINITY };
    if condition > CONDITION_LIMIT {
        return Err(SturmError::IllConditioned(condition));
    }

    // Orthogonalize on grid values, carrying monomial coefficients along.
    let grid = measure.grid(level);
    let w = &grid.weights;
    let vals = monomial_values(&basis, &grid.xy);
    let dot = |a: &[f64], b: &[f64]| -> f64 { a.iter().zip(b).zip(w).map(|((x, y), w)| x * y * w).sum() };
    let mut qv: Vec<Vec<f64>> = Vec::with_capacity(nb);
    let mut qc: Vec<Vec<f64>> = Vec::with_capacity(nb);
    let mut qn: Vec<f64> = Vec::with_capacity(nb);
    for (m, row) in vals.iter().enumerate() {
        let mut v = row.clone();
        let mut c = vec![0.0; nb];
        c[m] = 1.0;
        for _pass in 0..2 {
            for i in 0..qv.len() {
                let r = dot(&qv[i], &v) / qn[i];
                for (a, b) in v.iter_mut().zip(qv[i].iter()) {
                    *a -= r * b;
                }
                for (a, b) in c.iter_mut().zip(qc[i].iter()) {
                    *a -= r * b;
                }
            }
        }
        qn.push(dot(&v, &v));
        qv.push(v);
        qc.push(c);
    }

    let mut poly = FloatPoly::zero();
    for (b, c) in basis.iter().zip(qc[nb - 1].iter()) {
        poly.add_term(b.k1, b.k2, *c);
    }
    let lambda = eigenvalue(p, k);
    let lp = apply_l(p, &poly);
    let diff = &lp - &poly.scale(&lambda);
    let denom = poly.scale(&lambda).max_abs();
    let residual = if denom > 0.0 { diff.max_abs() / denom } else { diff.max_abs() };
    Ok(JacobiPoly { poly, eigenvalue: lambda, residual, condition, quadrature_order: grid.order })
}

/// Polynomial JSON with float coefficients: `{"alpha","beta","k","terms":[{"i","j","coeff"}]}`.
pub fn float_poly_json(p: &WeightParams, k: &MIndex, q: &FloatPoly) -> String {
    let terms: Vec<String> = q
        .terms_star_order()
        .iter()
        .map(|(m, c)| format!("{{\"i\": {}, \"j\": {}, \"coeff\": {c:.16e}}}", m.k1, m.k2))
        .collect();
    format!(
        "{{\"alpha\": {}, \"beta\": {}, \"k\": [{}, {}], \"terms\": [{}]}}",
        p.alpha,
        p.beta,
        k.k1,
        k.k2,
        terms.join(", ")
    )
}

/// `(⟨L f, g⟩, ⟨f, L g⟩)` under the normalized weight.
pub fn selfadjointness_check(p: &WeightParams, f: &FloatPoly, g: &FloatPoly) -> Result<(f64, f64), SturmError> {
    let lf = apply_l(p, f);
    let lg = apply_l(p, g);
    let lhs = continuous_inner(p, |x, y| lf.eval_fast(x, y), |x, y| g.eval_fast(x, y))?;
    let rhs = continuous_inner(p, |x, y| f.eval_fast(x, y), |x, y| lg.eval_fast(x, y))?;
    Ok((lhs, rhs))
}

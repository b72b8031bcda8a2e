//! Property suites behind `g2cub verify`: each check reduces to one number
//! compared against a bound, printed as a single line.

use crate::chebyshev::{
    cheb_poly_kind, deltoid_poly, jacobian, sc_factor, cs_factor, xy_map, ChebKind, WeightParams, SS_BASE, X_INDEX,
    Y_INDEX,
};
use crate::coords::{make_point, HexIndex, TriplePoint};
use crate::cubature::{
    lobatto_common_zeros, rule, t02_printed, t30_printed, variety_check, CubatureError, RuleKind,
};
use crate::gentrig::{eval, TrigFamily};
use crate::lattice::{dim_pi_star, discrete_norm, enum_gamma, triangle_discrete_inner};
use crate::poly::{rat, MIndex, Poly, RatPoly};
use crate::quadrature::{pullback_inner, reference_integral, QuadratureError};
use crate::sturm::{eigenvalue_exact, jacobi_poly, OperatorCoeffs, SturmError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
    #[error(transparent)]
    Sturm(#[from] SturmError),
    #[error(transparent)]
    Cubature(#[from] CubatureError),
    #[error("unknown suite {0:?}; expected orthogonality, cubature, eigen, identities or variety")]
    UnknownSuite(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Orthogonality,
    Cubature,
    Eigen,
    Identities,
    Variety,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Orthogonality, Suite::Cubature, Suite::Eigen, Suite::Identities, Suite::Variety];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Orthogonality => "orthogonality",
            Suite::Cubature => "cubature",
            Suite::Eigen => "eigen",
            Suite::Identities => "identities",
            Suite::Variety => "variety",
        }
    }

    /// Size parameter used when none is given.
    pub fn default_n(self) -> i64 {
        match self {
            Suite::Orthogonality | Suite::Eigen => 12,
            Suite::Cubature | Suite::Variety => 10,
            Suite::Identities => 100,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s.to_ascii_lowercase()).ok_or_else(|| VerifyError::UnknownSuite(s.into()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    /// passes when `value <= tolerance`
    AtMost,
    /// passes when `value > tolerance` (controls that must not vanish)
    AtLeast,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    pub bound: Bound,
}

impl Check {
    pub fn at_most(name: impl Into<String>, value: f64, tolerance: f64) -> Check {
        Check { name: name.into(), value, tolerance, bound: Bound::AtMost }
    }

    pub fn at_least(name: impl Into<String>, value: f64, tolerance: f64) -> Check {
        Check { name: name.into(), value, tolerance, bound: Bound::AtLeast }
    }

    pub fn passed(&self) -> bool {
        match self.bound {
            Bound::AtMost => self.value <= self.tolerance,
            Bound::AtLeast => self.value > self.tolerance,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (key, op) = match self.bound {
            Bound::AtMost => ("max_error", "<="),
            Bound::AtLeast => ("min_value", ">"),
        };
        write!(
            f,
            "{} {key}={:.3e} {op} {:.1e} {}",
            self.name,
            self.value,
            self.tolerance,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub suite: Suite,
    pub n: i64,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    /// Replaces every upper-bound tolerance.
    pub fn override_tolerance(&mut self, tol: f64) {
        for c in self.checks.iter_mut().filter(|c| c.bound == Bound::AtMost) {
            c.tolerance = tol;
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{}/{c}", self.suite)?;
        }
        Ok(())
    }
}

pub fn run_suite(suite: Suite, n: Option<i64>, tol: Option<f64>) -> Result<Report, VerifyError> {
    let n = n.unwrap_or(suite.default_n());
    let checks = match suite {
        Suite::Orthogonality => orthogonality(n)?,
        Suite::Cubature => cubature(n)?,
        Suite::Eigen => eigen(n)?,
        Suite::Identities => identities(n as usize)?,
        Suite::Variety => variety(n)?,
    };
    let mut r = Report { suite, n, checks };
    if let Some(t) = tol {
        r.override_tolerance(t);
    }
    Ok(r)
}

/// Uniform random point strictly inside the fundamental triangle.
pub fn interior_point<R: Rng>(r: &mut R) -> TriplePoint {
    loop {
        let t2: f64 = r.gen_range(0.0..0.5);
        let t1: f64 = r.gen_range(0.0..1.0);
        if t2 < t1 && t1 < 1.0 - t2 {
            return make_point(t1, t2);
        }
    }
}

fn family_label(f: TrigFamily) -> String {
    f.name().to_ascii_lowercase()
}

fn orthogonality(n: i64) -> Result<Vec<Check>, VerifyError> {
    let mut out = Vec::new();
    for f in TrigFamily::ALL {
        let mut worst = 0f64;
        for m in 1..=n {
            let g = enum_gamma(f, m).members;
            for j in g.iter() {
                for k in g.iter() {
                    let v = triangle_discrete_inner(|t| eval(f, j, t), |t| eval(f, k, t), m);
                    let want = if j == k { discrete_norm(k, m) } else { 0.0 };
                    worst = worst.max((v - want).abs());
                }
            }
        }
        out.push(Check::at_most(format!("discrete-{}", family_label(f)), worst, 1e-12));
    }
    let deg = n.clamp(0, 10) as u32;
    for kind in ChebKind::ALL {
        let ks = MIndex::up_to(deg);
        let polys: Vec<_> = ks.iter().map(|k| cheb_poly_kind(kind, k).to_float()).collect();
        let mut worst = 0f64;
        for (i, a) in polys.iter().enumerate() {
            for (j, b) in polys.iter().enumerate().skip(i) {
                let v = pullback_inner(kind, |x, y| a.eval_fast(x, y), |x, y| b.eval_fast(x, y))?;
                let want = if i == j { kind.orthogonality_constant(&ks[i]) } else { 0.0 };
                worst = worst.max((v - want).abs());
            }
        }
        out.push(Check::at_most(format!("continuous-{}", family_label(kind.family())), worst, 1e-9));
    }
    Ok(out)
}

/// Worst relative error per rule over `2..=n_max`, and the sharpness control.
pub fn cubature_errors(kind: RuleKind, n_max: i64) -> Result<(f64, f64), VerifyError> {
    let mut refs: HashMap<MIndex, f64> = HashMap::new();
    let mut worst = 0f64;
    let mut sharp = f64::INFINITY;
    for n in 2..=n_max {
        let r = rule(kind, n)?;
        let mut err = |m: &MIndex| -> Result<f64, VerifyError> {
            let f = |x: f64, y: f64| x.powi(m.k1 as i32) * y.powi(m.k2 as i32);
            let want = match refs.get(m) {
                Some(v) => *v,
                None => {
                    let v = reference_integral(&r.weight_params, f)?;
                    refs.insert(*m, v);
                    v
                }
            };
            Ok((r.integrate(f) - want).abs() / (1.0 + want.abs()))
        };
        for m in MIndex::up_to((2 * n - 1) as u32) {
            worst = worst.max(err(&m)?);
        }
        let mut above = 0f64;
        for m in MIndex::of_mdegree((2 * n) as u32) {
            above = above.max(err(&m)?);
        }
        sharp = sharp.min(above);
    }
    Ok((worst, sharp))
}

fn cubature(n: i64) -> Result<Vec<Check>, VerifyError> {
    let mut out = Vec::new();
    for kind in RuleKind::ALL {
        let (worst, sharp) = cubature_errors(kind, n.max(2))?;
        out.push(Check::at_most(format!("exactness-{kind}"), worst, 1e-9));
        out.push(Check::at_least(format!("sharpness-{kind}"), sharp, 1e-6));
    }
    Ok(out)
}

/// Largest coefficient of `L P − λ P` over the four half-integer families, computed exactly.
pub fn exact_eigen_defect(kind: ChebKind, max_degree: u32) -> f64 {
    let (a, b) = kind.rational_params();
    let ops = OperatorCoeffs::new(a.clone(), b.clone());
    let mut worst = 0f64;
    for k in MIndex::up_to(max_degree) {
        let p = cheb_poly_kind(kind, &k);
        let lam = eigenvalue_exact(a.clone(), b.clone(), &k);
        let d = &ops.apply(&p) - &p.scale(&lam);
        if !d.is_zero() {
            worst = worst.max(d.to_float().max_abs().max(f64::MIN_POSITIVE));
        }
    }
    worst
}

/// General exponents exercised by the eigen suite.
pub const GENERAL_PARAMS: [(f64, f64); 3] = [(0.0, 0.0), (0.3, 1.2), (-0.4, 0.7)];

/// Largest deviation of `P_{1,0}`, `P_{0,1}` from their closed forms.
pub fn closed_form_error(p: &WeightParams) -> Result<f64, VerifyError> {
    let (a, b) = (p.alpha, p.beta);
    let mut p10 = Poly::zero();
    p10.add_term(1, 0, 1.0);
    p10.add_term(0, 0, (1.0 + 2.0 * a) / (7.0 + 4.0 * a + 6.0 * b));
    let d = 4.0 + a + 3.0 * b;
    let mut p01 = Poly::zero();
    p01.add_term(0, 1, 1.0);
    p01.add_term(1, 0, 3.0 * (1.0 + 2.0 * a) / d);
    p01.add_term(0, 0, (5.0 + 5.0 * a + 11.0 * b + 2.0 * a * b + 6.0 * b * b + 4.0 * a * a) / (d * (5.0 + 2.0 * a + 4.0 * b)));
    let e10 = (&jacobi_poly(p, &MIndex::new(1, 0))?.poly - &p10).max_abs();
    let e01 = (&jacobi_poly(p, &MIndex::new(0, 1))?.poly - &p01).max_abs();
    Ok(e10.max(e01))
}

fn eigen(n: i64) -> Result<Vec<Check>, VerifyError> {
    let mut out = Vec::new();
    let deg = n.max(0) as u32;
    for kind in ChebKind::ALL {
        out.push(Check::at_most(format!("exact-{}", family_label(kind.family())), exact_eigen_defect(kind, deg), 0.0));
    }
    for (a, b) in GENERAL_PARAMS {
        let p = WeightParams::new(a, b).expect("valid exponents");
        let mut worst = 0f64;
        for k in MIndex::up_to(deg.min(8)) {
            worst = worst.max(jacobi_poly(&p, &k)?.residual);
        }
        out.push(Check::at_most(format!("residual({a},{b})"), worst, 1e-8));
        out.push(Check::at_most(format!("closed-form({a},{b})"), closed_form_error(&p)?, 1e-10));
    }
    Ok(out)
}

/// Pointwise residuals of the trigonometric product identities at `count` seeded points.
pub fn pointwise_identities(count: usize) -> Vec<(&'static str, f64)> {
    let mut r = ChaCha8Rng::seed_from_u64(0x6a2);
    let (mut wt, mut wt1, mut wt2, mut wt3, mut sq, mut jac) = (0f64, 0f64, 0f64, 0f64, 0f64, 0f64);
    let i30 = HexIndex::new(3, 0, -3);
    for _ in 0..count {
        let t = interior_point(&mut r);
        let cc = |k: &HexIndex| eval(TrigFamily::CC, k, &t);
        let sc = eval(TrigFamily::SC, &X_INDEX, &t);
        let cs = eval(TrigFamily::CS, &Y_INDEX, &t);
        let ss = eval(TrigFamily::SS, &SS_BASE, &t);
        let (c10, c11, c30) = (cc(&X_INDEX), cc(&Y_INDEX), cc(&i30));
        wt = wt.max((3.0 * sc * cs - ss).abs());
        wt1 = wt1.max((sc * sc - ((1.0 + 2.0 * c11) / 3.0 - c10 * c10)).abs());
        wt2 = wt2.max((cs * cs + c11 * c11 - (1.0 + 2.0 * c30) / 3.0).abs());
        let rhs3 = c30 / 36.0 + c10 / 4.0 + c11 / 6.0 + 1.0 / 18.0 + c11 * c10 / 2.0;
        wt3 = wt3.max((c10.powi(3) - rhs3).abs());
        let (x, y) = xy_map(&t);
        sq = sq.max((sc * sc - sc_factor(x, y) / 3.0).abs()).max((cs * cs - cs_factor(x, y)).abs());
        let want = 4.0 * PI * PI / 3.0 * sc * cs;
        jac = jac.max((jacobian(&t) - want).abs());
    }
    vec![("wt", wt), ("wt1", wt1), ("wt2", wt2), ("wt3", wt3), ("squares", sq), ("jacobian", jac)]
}

/// `(det Λ − 9F, F₁A₁₁ + F₂A₁₂ + 6(5x+1)F, F₁A₁₂ + F₂A₂₂ + 18(2x+3y+1)F)` as exact polynomials.
pub fn boundary_operator_defects() -> [RatPoly; 3] {
    let ops = OperatorCoeffs::new(rat(0, 1), rat(0, 1));
    let f = deltoid_poly();
    let (f1, f2) = (f.dx(), f.dy());
    let det = &ops.det_lambda() - &f.scale(&rat(9, 1));
    let fa1 = &(&(&f1 * &ops.a11) + &(&f2 * &ops.a12)) - &(&RatPoly::from_int_terms(&[(1, 0, -30), (0, 0, -6)]) * &f);
    let m2 = RatPoly::from_int_terms(&[(1, 0, -36), (0, 1, -54), (0, 0, -18)]);
    let fa2 = &(&(&f1 * &ops.a12) + &(&f2 * &ops.a22)) - &(&m2 * &f);
    [det, fa1, fa2]
}

fn exact_defect(p: &RatPoly) -> f64 {
    if p.is_zero() {
        0.0
    } else {
        p.to_float().max_abs().max(f64::MIN_POSITIVE)
    }
}

fn identities(count: usize) -> Result<Vec<Check>, VerifyError> {
    let mut out: Vec<Check> = pointwise_identities(count.max(1))
        .into_iter()
        .map(|(name, v)| Check::at_most(name, v, 1e-12))
        .collect();
    let [det, fa1, fa2] = boundary_operator_defects();
    out.push(Check::at_most("det-lambda=9F", exact_defect(&det), 0.0));
    out.push(Check::at_most("boundary-fa1", exact_defect(&fa1), 0.0));
    out.push(Check::at_most("boundary-fa2", exact_defect(&fa2), 0.0));
    Ok(out)
}

fn variety(n: i64) -> Result<Vec<Check>, VerifyError> {
    let mut out = Vec::new();
    for kind in RuleKind::ALL {
        let (mut worst, mut control) = (0f64, f64::INFINITY);
        for m in 1..=n.max(1) {
            let rep = variety_check(kind, m)?;
            worst = worst.max(rep.max_relative_residual);
            if m >= 2 {
                control = control.min(rep.control_min);
            }
        }
        out.push(Check::at_most(format!("variety-{kind}"), worst, 1e-10));
        if control.is_finite() {
            out.push(Check::at_least(format!("control-{kind}"), control, 1e-3));
        }
    }
    let mut miscount = 0f64;
    for m in 1..=n.max(1) {
        miscount = miscount.max((rule(RuleKind::Gauss, m)?.len() as i64 - dim_pi_star(m - 1)).abs() as f64);
    }
    out.push(Check::at_most("gauss-node-count", miscount, 0.0));
    out.push(Check::at_most("common-zeros-t30-t02", common_zero_distance(), 1e-12));
    Ok(out)
}

/// Distance from the closed-form common zeros of `T_{3,0}`, `T_{0,2}` to the roots found by
/// eliminating `y` (`2T_{3,0} + T_{0,2} = 6y² − 2y − 1`) and solving the cubic in `x`
/// through companion-matrix eigenvalues; includes the residuals of both polynomials.
pub fn common_zero_distance() -> f64 {
    let y = (1.0 - 7f64.sqrt()) / 6.0;
    let (a, b, c) = (36.0, -(18.0 * y + 9.0), -(6.0 * y + 2.0));
    let m = nalgebra::Matrix3::new(0.0, 0.0, -c / a, 1.0, 0.0, -b / a, 0.0, 1.0, 0.0);
    let roots: Vec<f64> = m.complex_eigenvalues().iter().filter(|z| z.im.abs() < 1e-9).map(|z| z.re).collect();
    if roots.len() != 3 {
        return f64::INFINITY;
    }
    let (t30, t02) = (t30_printed().to_float(), t02_printed().to_float());
    let mut worst = 0f64;
    for (x, yy) in lobatto_common_zeros() {
        let d = roots.iter().map(|r| (r - x).abs()).fold(f64::INFINITY, f64::min);
        worst = worst.max(d).max((yy - y).abs());
        worst = worst.max(t30.eval_fast(x, yy).abs()).max(t02.eval_fast(x, yy).abs());
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_parse() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("spectral".parse::<Suite>().is_err());
    }

    #[test]
    fn check_lines() {
        let c = Check::at_most("demo", 2e-13, 1e-12);
        assert!(c.passed());
        assert_eq!(c.to_string(), "demo max_error=2.000e-13 <= 1.0e-12 PASS");
        assert!(!Check::at_least("ctl", 1e-8, 1e-6).passed());
    }

    #[test]
    fn small_suites_pass() {
        for s in [Suite::Identities, Suite::Eigen, Suite::Variety] {
            let r = run_suite(s, Some(4), None).unwrap();
            assert!(r.passed(), "{r}");
        }
        let r = run_suite(Suite::Orthogonality, Some(5), None).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn impossible_tolerance_fails() {
        let r = run_suite(Suite::Orthogonality, Some(4), Some(1e-30)).unwrap();
        assert!(!r.passed());
        assert_eq!(r.checks.len(), 8);
    }

    #[test]
    fn cubature_suite_small() {
        let r = run_suite(Suite::Cubature, Some(4), None).unwrap();
        assert!(r.passed(), "{r}");
    }
}

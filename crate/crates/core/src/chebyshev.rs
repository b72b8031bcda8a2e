//! Change of variables `(x, y) = (CC_{1,0,-1}, CC_{1,1,-2})`, the deltoid
//! region Δ*, weights `w_{α,β}` and the four families of generalized
//! Chebyshev polynomials with exact rational coefficients.

use crate::coords::{HexIndex, TriplePoint};
use crate::gentrig::{canonicalize, eval, gradient, TrigFamily};
use crate::poly::{rat, star_cmp, MIndex, RatPoly};
use num_rational::BigRational;
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;
use std::sync::{Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ChebError {
    #[error("parameters ({0}, {1}) are not one of the four half-integer cases")]
    NotHalfInteger(f64, f64),
    #[error("parameters must exceed -1, got ({0}, {1})")]
    BadParams(f64, f64),
    #[error("point ({0}, {1}) lies outside the deltoid region")]
    OutsideDomain(f64, f64),
}

/// Weight exponents `(α, β)`, each `> -1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WeightParams {
    pub alpha: f64,
    pub beta: f64,
}

impl WeightParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self, ChebError> {
        if !(alpha > -1.0 && beta > -1.0 && alpha.is_finite() && beta.is_finite()) {
            return Err(ChebError::BadParams(alpha, beta));
        }
        Ok(WeightParams { alpha, beta })
    }

    pub fn half_kind(&self) -> Option<ChebKind> {
        ChebKind::from_params(self.alpha, self.beta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Half {
    Minus,
    Plus,
}

impl Half {
    pub fn value(self) -> f64 {
        match self {
            Half::Minus => -0.5,
            Half::Plus => 0.5,
        }
    }

    pub fn rational(self) -> BigRational {
        match self {
            Half::Minus => rat(-1, 2),
            Half::Plus => rat(1, 2),
        }
    }

    fn from_f64(v: f64) -> Option<Half> {
        if v == -0.5 {
            Some(Half::Minus)
        } else if v == 0.5 {
            Some(Half::Plus)
        } else {
            None
        }
    }
}

/// One of the four Chebyshev families `P^{±1/2, ±1/2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChebKind {
    pub alpha: Half,
    pub beta: Half,
}

impl ChebKind {
    pub const ALL: [ChebKind; 4] = [
        ChebKind { alpha: Half::Minus, beta: Half::Minus },
        ChebKind { alpha: Half::Plus, beta: Half::Minus },
        ChebKind { alpha: Half::Minus, beta: Half::Plus },
        ChebKind { alpha: Half::Plus, beta: Half::Plus },
    ];

    pub fn from_params(alpha: f64, beta: f64) -> Option<ChebKind> {
        Some(ChebKind { alpha: Half::from_f64(alpha)?, beta: Half::from_f64(beta)? })
    }

    pub fn params(&self) -> WeightParams {
        WeightParams { alpha: self.alpha.value(), beta: self.beta.value() }
    }

    pub fn rational_params(&self) -> (BigRational, BigRational) {
        (self.alpha.rational(), self.beta.rational())
    }

    pub fn family(&self) -> TrigFamily {
        match (self.alpha, self.beta) {
            (Half::Minus, Half::Minus) => TrigFamily::CC,
            (Half::Plus, Half::Minus) => TrigFamily::SC,
            (Half::Minus, Half::Plus) => TrigFamily::CS,
            (Half::Plus, Half::Plus) => TrigFamily::SS,
        }
    }

    /// Offsets of the trigonometric index: `P_a ↔ F_{(a1+a2+s1, a2+s2, ·)}`.
    fn shift(&self) -> (i64, i64) {
        match self.family() {
            TrigFamily::CC => (0, 0),
            TrigFamily::SC => (1, 0),
            TrigFamily::CS => (1, 1),
            TrigFamily::SS => (2, 1),
        }
    }

    /// Trigonometric index of `P_{a1,a2}`, for any integers `a1, a2`.
    pub fn trig_index(&self, a1: i64, a2: i64) -> HexIndex {
        let (s1, s2) = self.shift();
        HexIndex::from_pair(a1 + a2 + s1, a2 + s2)
    }

    /// `P_{a1,a2}` for arbitrary integer indices as `sign · P_rep`, or `None` when it vanishes.
    pub fn resolve(&self, a1: i64, a2: i64) -> Option<(i8, MIndex)> {
        self.from_trig(&self.trig_index(a1, a2))
    }

    /// `F_k / F_base` as `sign · P_rep` for any trigonometric index `k`.
    pub fn from_trig(&self, k: &HexIndex) -> Option<(i8, MIndex)> {
        let (s1, s2) = self.shift();
        let (sign, c) = canonicalize(self.family(), k)?;
        let r1 = c.k1 - c.k2 - (s1 - s2);
        let r2 = c.k2 - s2;
        assert!(r1 >= 0 && r2 >= 0, "canonical index outside the family chamber");
        Some((sign, MIndex::new(r1 as u32, r2 as u32)))
    }

    /// Squared norm `⟨P_k, P_k⟩` under the normalized weight.
    pub fn orthogonality_constant(&self, k: &MIndex) -> f64 {
        match (self.alpha, self.beta) {
            (Half::Minus, Half::Minus) => {
                if k.k1 == 0 && k.k2 == 0 {
                    1.0
                } else if k.k1 * k.k2 == 0 {
                    1.0 / 6.0
                } else {
                    1.0 / 12.0
                }
            }
            (Half::Plus, Half::Minus) => {
                if k.k2 == 0 {
                    1.0 / 6.0
                } else {
                    1.0 / 12.0
                }
            }
            (Half::Minus, Half::Plus) => {
                if k.k1 == 0 {
                    1.0 / 6.0
                } else {
                    1.0 / 12.0
                }
            }
            (Half::Plus, Half::Plus) => 1.0 / 12.0,
        }
    }

    /// `c_{α,β}` normalizing `w_{α,β}` to unit mass on Δ*.
    pub fn normalization_constant(&self) -> f64 {
        match (self.alpha, self.beta) {
            (Half::Minus, Half::Minus) => 4.0,
            (Half::Plus, Half::Plus) => 243.0 / PI.powi(4),
            _ => 18.0 / (PI * PI),
        }
    }

    pub fn label(&self) -> String {
        let h = |v: Half| if v == Half::Minus { "-1/2" } else { "1/2" };
        format!("({},{})", h(self.alpha), h(self.beta))
    }
}

impl fmt::Display for ChebKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

pub const X_INDEX: HexIndex = HexIndex { k1: 1, k2: 0, k3: -1 };
pub const Y_INDEX: HexIndex = HexIndex { k1: 1, k2: 1, k3: -2 };
pub const SS_BASE: HexIndex = HexIndex { k1: 2, k2: 1, k3: -3 };

/// `(CC_{1,0,-1}(t), CC_{1,1,-2}(t))`.
pub fn xy_map(t: &TriplePoint) -> (f64, f64) {
    (eval(TrigFamily::CC, &X_INDEX, t), eval(TrigFamily::CC, &Y_INDEX, t))
}

/// `1 + 2y − 3x²`, equal to `3 SC_{1,0,-1}²`.
pub fn sc_factor(x: f64, y: f64) -> f64 {
    1.0 + 2.0 * y - 3.0 * x * x
}

/// `24x³ − y² − 12xy − 6x − 4y − 1`, equal to `CS_{1,1,-2}²`.
pub fn cs_factor(x: f64, y: f64) -> f64 {
    24.0 * x * x * x - y * y - 12.0 * x * y - 6.0 * x - 4.0 * y - 1.0
}

/// Product of the two boundary factors; nonnegative exactly on Δ*.
pub fn deltoid_f(x: f64, y: f64) -> f64 {
    sc_factor(x, y) * cs_factor(x, y)
}

pub fn sc_factor_poly() -> RatPoly {
    RatPoly::from_int_terms(&[(0, 0, 1), (0, 1, 2), (2, 0, -3)])
}

pub fn cs_factor_poly() -> RatPoly {
    RatPoly::from_int_terms(&[(3, 0, 24), (0, 2, -1), (1, 1, -12), (1, 0, -6), (0, 1, -4), (0, 0, -1)])
}

pub fn deltoid_poly() -> RatPoly {
    &sc_factor_poly() * &cs_factor_poly()
}

/// `w_{α,β}(x, y)` including the `(4π²)^{α+β} / 3^{2α+β}` prefactor.
pub fn weight_w(p: &WeightParams, x: f64, y: f64) -> Result<f64, ChebError> {
    let a = sc_factor(x, y);
    let b = cs_factor(x, y);
    let bad = |v: f64, e: f64| v < -1e-14 || (v <= 0.0 && e < 0.0);
    if bad(a, p.alpha) || bad(b, p.beta) {
        return Err(ChebError::OutsideDomain(x, y));
    }
    let pre = (4.0 * PI * PI).powf(p.alpha + p.beta) / 3f64.powf(2.0 * p.alpha + p.beta);
    Ok(pre * a.max(0.0).powf(p.alpha) * b.max(0.0).powf(p.beta))
}

/// Determinant of `∂(x, y)/∂(t1, t2)` with `t3 = −t1 − t2`.
pub fn jacobian(t: &TriplePoint) -> f64 {
    let gx = gradient(TrigFamily::CC, &X_INDEX, t);
    let gy = gradient(TrigFamily::CC, &Y_INDEX, t);
    let (x1, x2) = (gx[0] - gx[2], gx[1] - gx[2]);
    let (y1, y2) = (gy[0] - gy[2], gy[1] - gy[2]);
    x1 * y2 - x2 * y1
}

fn seeds(kind: ChebKind) -> [RatPoly; 3] {
    let f = RatPoly::from_int_terms;
    match (kind.alpha, kind.beta) {
        (Half::Minus, Half::Minus) => [f(&[(0, 0, 1)]), f(&[(1, 0, 1)]), f(&[(0, 1, 1)])],
        (Half::Plus, Half::Minus) => [f(&[(0, 0, 1)]), f(&[(1, 0, 6), (0, 0, 2)]), f(&[(1, 0, 6), (0, 1, 3), (0, 0, 1)])],
        (Half::Minus, Half::Plus) => [f(&[(0, 0, 1)]), f(&[(1, 0, 3)]), f(&[(0, 1, 6), (0, 0, 2)])],
        (Half::Plus, Half::Plus) => [f(&[(0, 0, 1)]), f(&[(1, 0, 6), (0, 0, 1)]), f(&[(1, 0, 6), (0, 1, 6), (0, 0, 2)])],
    }
}

/// Index shifts produced by multiplying with `6x` and with `6y`.
pub const X_SHIFTS: [(i64, i64); 6] = [(1, 0), (-1, 0), (-1, 1), (1, -1), (2, -1), (-2, 1)];
pub const Y_SHIFTS: [(i64, i64); 6] = [(0, 1), (0, -1), (3, -2), (-3, 2), (-3, 1), (3, -1)];

/// How m-degrees above the seeds are filled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Resolved three-term recursions up to m-degree 6, then Algorithm 1.
    Algorithm1,
    /// Resolved three-term recursions at every m-degree.
    Recursion,
}

/// Triangular table of `P_k` filled in ∗-order.
#[derive(Debug, Clone)]
pub struct ChebTable {
    kind: ChebKind,
    strategy: Strategy,
    polys: HashMap<MIndex, RatPoly>,
    through: i64,
}

impl ChebTable {
    pub fn new(kind: ChebKind, strategy: Strategy) -> Self {
        let [p00, p10, p01] = seeds(kind);
        let mut polys = HashMap::new();
        polys.insert(MIndex::new(0, 0), p00);
        polys.insert(MIndex::new(1, 0), p10);
        polys.insert(MIndex::new(0, 1), p01);
        ChebTable { kind, strategy, polys, through: 3 }
    }

    pub fn kind(&self) -> ChebKind {
        self.kind
    }

    pub fn get(&mut self, k: &MIndex) -> &RatPoly {
        self.ensure(k.mdegree());
        &self.polys[k]
    }

    pub fn ensure(&mut self, n: u32) {
        while self.through < n as i64 {
            let m = (self.through + 1) as u32;
            if m <= 6 || self.strategy == Strategy::Recursion {
                for k in MIndex::of_mdegree(m) {
                    let p = self.by_recursion(&k);
                    self.polys.insert(k, p);
                }
            } else {
                self.algorithm1(m);
            }
            self.through = m as i64;
        }
    }

    fn p(&self, a1: i64, a2: i64) -> &RatPoly {
        assert!(a1 >= 0 && a2 >= 0, "negative index ({a1},{a2}) in Algorithm 1");
        self.polys
            .get(&MIndex::new(a1 as u32, a2 as u32))
            .unwrap_or_else(|| panic!("P({a1},{a2}) requested before it was built"))
    }

    /// `mult · P_base = Σ_s P_{base+s}` solved for the ∗-largest resolved term.
    fn by_recursion(&self, target: &MIndex) -> RatPoly {
        let (base, mult, shifts) = if target.k1 >= 1 {
            (MIndex::new(target.k1 - 1, target.k2), RatPoly::monomial(1, 0, rat(6, 1)), X_SHIFTS)
        } else {
            (MIndex::new(0, target.k2 - 1), RatPoly::monomial(0, 1, rat(6, 1)), Y_SHIFTS)
        };
        let mut rhs = &mult * &self.polys[&base];
        let mut c = 0i64;
        for (d1, d2) in shifts {
            if let Some((s, m)) = self.kind.resolve(base.k1 as i64 + d1, base.k2 as i64 + d2) {
                if m == *target {
                    c += s as i64;
                } else {
                    assert_eq!(star_cmp(&m, target), Ordering::Less, "recursion reaches ahead of {target}");
                    rhs = &rhs - &self.polys[&m].scale(&rat(s as i64, 1));
                }
            }
        }
        assert_ne!(c, 0, "target {target} drops out of its recursion");
        rhs.scale(&rat(1, c))
    }

    fn algorithm1(&mut self, n: u32) {
        let n = n as i64;
        let x6 = RatPoly::monomial(1, 0, rat(6, 1));
        let y6 = RatPoly::monomial(0, 1, rat(6, 1));
        let alpha_minus = self.kind.alpha == Half::Minus;
        let beta_minus = self.kind.beta == Half::Minus;

        if n % 2 == 0 {
            let m = n / 2;
            let cb = rat(if beta_minus { 2 } else { 1 }, 1);
            let mut p = &x6 * self.p(m - 1, 0);
            p = &p - &self.p(m - 2, 1).scale(&cb);
            p = &p - self.p(m - 2, 0);
            p = &p - &self.p(m - 3, 1).scale(&cb);
            self.insert(m, 0, p);
        }

        let mut k2 = 2 - n % 2;
        while k2 <= n / 3 - 2 {
            let k1 = (n - 3 * k2) / 2;
            let mut p = &x6 * self.p(k1 - 1, k2);
            for (a, b) in [(k1 + 1, k2 - 1), (k1 - 2, k2 + 1), (k1, k2 - 1), (k1 - 3, k2 + 1), (k1 - 2, k2)] {
                p = &p - self.p(a, b);
            }
            self.insert(k1, k2, p);
            k2 += 2;
        }

        match n % 3 {
            0 => {
                let m = n / 3;
                let mut p = &y6 * self.p(0, m - 1);
                for (a, b) in [(3, m - 3), (3, m - 2), (0, m - 2)] {
                    p = &p - self.p(a, b);
                }
                if alpha_minus {
                    p = &(&p - self.p(3, m - 3)) - self.p(3, m - 2);
                } else {
                    p = &(&p + self.p(1, m - 2)) + self.p(1, m - 1);
                }
                self.insert(0, m, p);
            }
            1 => {
                let m = (n - 1) / 3;
                let mut p = &x6 * self.p(1, m - 1);
                for (a, b) in [(3, m - 2), (0, m), (2, m - 2), (0, m - 1)] {
                    p = &p - self.p(a, b);
                }
                if alpha_minus {
                    p = &p - self.p(1, m - 1);
                }
                self.insert(2, m - 1, p);
            }
            _ => {
                let m = (n - 2) / 3;
                let lead = if alpha_minus {
                    RatPoly::monomial(1, 0, rat(3, 1))
                } else {
                    RatPoly::from_int_terms(&[(1, 0, 6), (0, 0, 1)])
                };
                let mut p = &lead * self.p(0, m);
                p = &(&p - self.p(2, m - 1)) - self.p(1, m - 1);
                self.insert(1, m, p);
            }
        }
    }

    fn insert(&mut self, a1: i64, a2: i64, p: RatPoly) {
        self.polys.insert(MIndex::new(a1 as u32, a2 as u32), p);
    }
}

fn tables() -> &'static Mutex<HashMap<ChebKind, ChebTable>> {
    static T: OnceLock<Mutex<HashMap<ChebKind, ChebTable>>> = OnceLock::new();
    T.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `P^{α,β}_k` with exact rational coefficients, for `α, β ∈ {±1/2}`.
pub fn cheb_poly(p: &WeightParams, k: &MIndex) -> Result<RatPoly, ChebError> {
    let kind = p.half_kind().ok_or(ChebError::NotHalfInteger(p.alpha, p.beta))?;
    Ok(cheb_poly_kind(kind, k))
}

pub fn cheb_poly_kind(kind: ChebKind, k: &MIndex) -> RatPoly {
    let mut guard = tables().lock().unwrap_or_else(|e| e.into_inner());
    let table = guard.entry(kind).or_insert_with(|| ChebTable::new(kind, Strategy::Algorithm1));
    table.get(k).clone()
}

/// `{"alpha","beta","k":[k1,k2],"terms":[{"i","j","num","den"}]}` with terms in ascending ∗-order.
pub fn poly_json(alpha: f64, beta: f64, k: &MIndex, p: &RatPoly) -> String {
    let terms: Vec<String> = p
        .terms_star_order()
        .iter()
        .map(|(m, c)| format!("{{\"i\": {}, \"j\": {}, \"num\": {}, \"den\": {}}}", m.k1, m.k2, c.numer(), c.denom()))
        .collect();
    format!(
        "{{\"alpha\": {alpha}, \"beta\": {beta}, \"k\": [{}, {}], \"terms\": [{}]}}",
        k.k1,
        k.k2,
        terms.join(", ")
    )
}

/// Quotient form of `P_k` at `t`; falls back to the polynomial near zeros of the denominator.
pub fn cheb_eval_trig(kind: ChebKind, k: &MIndex, t: &TriplePoint) -> f64 {
    let fam = kind.family();
    let num = eval(fam, &kind.trig_index(k.k1 as i64, k.k2 as i64), t);
    if fam == TrigFamily::CC {
        return num;
    }
    let den = eval(fam, &kind.trig_index(0, 0), t);
    if den.abs() < 1e-8 {
        let (x, y) = xy_map(t);
        return cheb_poly_kind(kind, k).to_float().eval_fast(x, y);
    }
    num / den
}


#[cfg(test)]
mod props {
    use super::*;
    use crate::coords::make_point;
    use proptest::prelude::*;

    const KINDS: [ChebKind; 4] = [
        ChebKind { alpha: Half::Minus, beta: Half::Minus },
        ChebKind { alpha: Half::Plus, beta: Half::Minus },
        ChebKind { alpha: Half::Minus, beta: Half::Plus },
        ChebKind { alpha: Half::Plus, beta: Half::Plus },
    ];

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn quotient_matches_polynomial(kind in 0usize..4, a1 in 0u32..5, a2 in 0u32..3,
                                       t1 in 0.01f64..0.99, s in 0.01f64..0.99) {
            let kind = KINDS[kind];
            // interior of the triangle: t2 < t1 < 1 − t2
            let t2 = s * t1.min(1.0 - t1);
            let t = make_point(t1, t2);
            let fam = kind.family();
            let num = eval(fam, &kind.trig_index(a1 as i64, a2 as i64), &t);
            let den = eval(fam, &kind.trig_index(0, 0), &t);
            let (x, y) = xy_map(&t);
            let p = cheb_poly_kind(kind, &MIndex::new(a1, a2)).to_float().eval(x, y);
            prop_assert!((p * den - num).abs() < 1e-10 * (1.0 + num.abs()), "{} vs {}", p * den, num);
        }
    }
}

//! Growth constant of the number of maximum matchings of Apollonian
//! networks, `lim ln(tau_n) / V_n`, bracketed from exact counts.
//!
//! With `phi, theta, tau` the counts from [`crate::recurrence`], the bracket
//! at level `m` is
//!
//! ```text
//! lower(m) = (2 ln phi_m + ln p_m) / 3^m,   p_m = 3 theta_m / phi_m
//! upper(m) = (2 ln tau_m + ln q)    / 3^m
//! ```
//!
//! where `q` is a fixed rational built from the ratio bounds checked in
//! [`ratio_bounds_hold`]. Ratios stay exact until final rendering.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::recurrence::{apollonian_vertex_count, matching_count_table, MatchingCounts, DEFAULT_COUNT_CAP};

/// Relative agreement required between the two logarithm methods.
pub const LN_TOLERANCE: f64 = 1e-10;

/// `ln N` from the bit length and the leading 64 bits.
pub fn ln_by_bits(n: &BigUint) -> Result<f64> {
    if n.is_zero() {
        return Err(Error::invalid("logarithm of zero"));
    }
    let bits = n.bits();
    if bits <= 64 {
        return Ok(n.to_u64().expect("fits in 64 bits").to_f64().expect("finite").ln());
    }
    let shift = bits - 64;
    let top = (n >> shift).to_u64().expect("64 leading bits");
    Ok((top as f64).ln() + shift as f64 * std::f64::consts::LN_2)
}

/// `ln N` by repeated integer square roots: `ln N = 2^j ln floor(N^(1/2^j))`,
/// stopping once the root fits in 64 bits. Nested floor square roots are
/// exact, so the only error is the final truncation, below `2^-32`
/// relative.
pub fn ln_by_roots(n: &BigUint) -> Result<f64> {
    if n.is_zero() {
        return Err(Error::invalid("logarithm of zero"));
    }
    let mut r = n.clone();
    let mut scale = 1.0f64;
    while r.bits() > 64 {
        r = r.sqrt();
        scale *= 2.0;
    }
    Ok(scale * (r.to_u64().expect("fits in 64 bits") as f64).ln())
}

/// Natural logarithm of a big integer, cross-checked by both methods.
pub fn ln_big(n: &BigUint) -> Result<f64> {
    let a = ln_by_bits(n)?;
    let b = ln_by_roots(n)?;
    let scale = a.abs().max(b.abs()).max(1.0);
    if (a - b).abs() / scale > LN_TOLERANCE {
        return Err(Error::invariant(format!("logarithm methods disagree: {a} vs {b}")));
    }
    Ok(a)
}

fn ln_ratio(r: &BigRational) -> Result<f64> {
    let num = r.numer().to_biguint().ok_or_else(|| Error::invalid("negative ratio"))?;
    let den = r.denom().to_biguint().ok_or_else(|| Error::invalid("negative ratio"))?;
    Ok(ln_big(&num)? - ln_big(&den)?)
}

fn ratio(a: &BigUint, b: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(a.clone()), BigInt::from(b.clone()))
}

fn small(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn rational_string<S: serde::Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthRatios {
    pub n: usize,
    /// All-vacant over one-covered.
    #[serde(serialize_with = "rational_string")]
    pub alpha: BigRational,
    /// One-covered over two-covered.
    #[serde(serialize_with = "rational_string")]
    pub eta: BigRational,
    /// Maximum over two-covered.
    #[serde(serialize_with = "rational_string")]
    pub lambda: BigRational,
    /// `3 / alpha`.
    #[serde(serialize_with = "rational_string")]
    pub p: BigRational,
}

pub fn ratios_of(c: &MatchingCounts) -> GrowthRatios {
    let alpha = ratio(&c.all_vacant, &c.one_covered);
    GrowthRatios {
        n: c.n,
        p: small(3, 1) / &alpha,
        eta: ratio(&c.one_covered, &c.two_covered),
        lambda: ratio(&c.maximum, &c.two_covered),
        alpha,
    }
}

pub fn growth_ratios(n: usize) -> Result<GrowthRatios> {
    let table = matching_count_table(n)?;
    Ok(ratios_of(table.last().expect("non-empty")))
}

/// Upper bound on `eta_n` for `n >= 3`.
pub fn eta_bound() -> BigRational {
    small(2, 3)
}

/// Lower bound on `lambda_n` for `n >= 3`.
pub fn lambda_bound() -> BigRational {
    small(12, 11)
}

/// `6 (a e^2 / l^2 + a e / l^3 + 2 e^2 / l^3)` for given ratios.
fn q_expression(a: &BigRational, e: &BigRational, l: &BigRational) -> BigRational {
    let l2 = l * l;
    let l3 = &l2 * l;
    let e2 = e * e;
    small(6, 1) * (a * &e2 / &l2 + a * e / &l3 + small(2, 1) * &e2 / &l3)
}

/// The constant `q`, evaluated at `alpha_3 = 108/246` and the ratio bounds.
pub fn q_constant() -> BigRational {
    q_expression(&small(108, 246), &eta_bound(), &lambda_bound())
}

/// Ratio inequalities at level `n` that the bracket relies on:
/// `alpha_{n+1} <= 3/4 alpha_n`, `eta_n <= 2/3`, `lambda_n >= 12/11`, and
/// `q` dominating the same expression in the actual ratios.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RatioChecks {
    pub n: usize,
    pub alpha_contracts: bool,
    pub eta_bounded: bool,
    pub lambda_bounded: bool,
    pub q_dominates: bool,
}

impl RatioChecks {
    pub fn all(&self) -> bool {
        self.alpha_contracts && self.eta_bounded && self.lambda_bounded && self.q_dominates
    }
}

/// Checks for `n = 3..=max_n`, by exact big-integer cross-multiplication.
pub fn ratio_bounds_hold(max_n: usize) -> Result<Vec<RatioChecks>> {
    let table = matching_count_table(max_n + 1)?;
    let q = q_constant();
    Ok(table
        .windows(2)
        .map(|w| {
            let (c, next) = (&w[0], &w[1]);
            // alpha_{n+1} <= 3/4 alpha_n  <=>  4 f' t <= 3 f t'
            let alpha_contracts = 4u32 * &next.all_vacant * &c.one_covered <= 3u32 * &c.all_vacant * &next.one_covered;
            // eta <= 2/3  <=>  3 t <= 2 p;  lambda >= 12/11  <=>  11 m >= 12 p
            let eta_bounded = 3u32 * &c.one_covered <= 2u32 * &c.two_covered;
            let lambda_bounded = 11u32 * &c.maximum >= 12u32 * &c.two_covered;
            let r = ratios_of(c);
            let q_dominates = q >= q_expression(&r.alpha, &r.eta, &r.lambda);
            RatioChecks {
                n: c.n,
                alpha_contracts,
                eta_bounded,
                lambda_bounded,
                q_dominates,
            }
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthBounds {
    pub m: usize,
    pub lower: f64,
    pub upper: f64,
    pub gap: f64,
    /// `ln tau_m / V_m`.
    pub z_estimate: f64,
    pub q: f64,
}

impl GrowthBounds {
    pub fn contains(&self, z: f64) -> bool {
        self.lower <= z && z <= self.upper
    }

    /// Whether the bracket meets the half-open interval `[lo, hi)`, e.g. the
    /// reals whose decimal expansion starts with a given truncated prefix.
    pub fn meets(&self, lo: f64, hi: f64) -> bool {
        self.lower < hi && lo <= self.upper
    }
}

fn bounds_of(c: &MatchingCounts, ln_q: f64, q: f64) -> Result<GrowthBounds> {
    let m = c.n;
    let scale = 3f64.powi(m as i32);
    let ln_p = ln_big(&(3u32 * &c.one_covered))? - ln_big(&c.all_vacant)?;
    let ln_tau = ln_big(&c.maximum)?;
    let lower = (2.0 * ln_big(&c.all_vacant)? + ln_p) / scale;
    let upper = (2.0 * ln_tau + ln_q) / scale;
    if !(lower.is_finite() && upper.is_finite()) {
        return Err(Error::invariant(format!("non-finite bounds at m={m}")));
    }
    Ok(GrowthBounds {
        m,
        lower,
        upper,
        gap: upper - lower,
        z_estimate: ln_tau / apollonian_vertex_count(m) as f64,
        q,
    })
}

/// Brackets for `m = 3..=max_m`.
pub fn z_bounds_table(max_m: usize) -> Result<Vec<GrowthBounds>> {
    if max_m < 3 {
        return Err(Error::invalid("bounds need m >= 3"));
    }
    let q = q_constant();
    let ln_q = ln_ratio(&q)?;
    let qf = to_f64(&q);
    matching_count_table(max_m)?
        .iter()
        .map(|c| bounds_of(c, ln_q, qf))
        .collect()
}

pub fn z_bounds(m: usize) -> Result<GrowthBounds> {
    Ok(z_bounds_table(m)?.pop().expect("non-empty"))
}

/// `ln tau_n / V_n`.
pub fn z_estimate(n: usize) -> Result<f64> {
    let tau = &matching_count_table(n)?.last().expect("non-empty").maximum.clone();
    Ok(ln_big(tau)? / apollonian_vertex_count(n) as f64)
}

/// `2 ln tau_n / 3^n`, the form whose limit the bracket encloses.
pub fn z_limit_form(n: usize) -> Result<f64> {
    let tau = &matching_count_table(n)?.last().expect("non-empty").maximum.clone();
    Ok(2.0 * ln_big(tau)? / 3f64.powi(n as i32))
}

/// Largest `m` the bracket can be computed for.
pub const MAX_M: usize = DEFAULT_COUNT_CAP;

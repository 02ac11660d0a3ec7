//! Entropy, the Gilbert-Varshamov rate, and the counting ingredients behind
//! the existence of good DT codes at rate 1/2.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Bisection tolerance used for `H_q^{-1}(1/2)` unless told otherwise.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

fn check_q(q: u32) -> Result<()> {
    if q < 2 {
        Err(Error::InvalidArgument(format!(
            "alphabet size must be >= 2, got {q}"
        )))
    } else {
        Ok(())
    }
}

/// q-ary entropy `H_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x)`, with `0 log 0 = 0`.
pub fn entropy(q: u32, x: f64) -> Result<f64> {
    check_q(q)?;
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::InvalidArgument(format!(
            "entropy argument {x} outside [0, 1]"
        )));
    }
    let ln_q = (q as f64).ln();
    let xlogx = |v: f64| if v == 0.0 { 0.0 } else { v * v.ln() };
    Ok((x * ((q - 1) as f64).ln() - xlogx(x) - xlogx(1.0 - x)) / ln_q)
}

/// The `delta` in `(0, 1 - 1/q)` with `H_q(delta) = 1/2`, by bisection down to an interval of width `tol`.
pub fn entropy_inverse_half(q: u32, tol: f64) -> Result<f64> {
    check_q(q)?;
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    // H_q is strictly increasing from 0 to 1 on [0, 1 - 1/q].
    let mut lo = 0.0;
    let mut hi = 1.0 - 1.0 / q as f64;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if entropy(q, mid)? < 0.5 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Asymptotic Gilbert-Varshamov rate `1 - H_q(delta)` for `delta` in `[0, 1 - 1/q]`.
pub fn gv_rate(q: u32, delta: f64) -> Result<f64> {
    check_q(q)?;
    let max = 1.0 - 1.0 / q as f64;
    if !(0.0..=max).contains(&delta) {
        return Err(Error::InvalidArgument(format!(
            "relative distance {delta} outside [0, {max}]"
        )));
    }
    Ok(1.0 - entropy(q, delta)?)
}

/// Number of generator tuples `(t, a, b)`, i.e. `q^(2n-1)`, exactly.
pub fn dt_code_count(q: u32, n: usize) -> Result<BigUint> {
    check_q(q)?;
    if n == 0 {
        return Err(Error::InvalidArgument("block size must be positive".into()));
    }
    let exp = u32::try_from(2 * n - 1).map_err(|_| Error::Overflow("code count exponent"))?;
    Ok(BigUint::from(q).pow(exp))
}

/// Number of vectors in `F_q^len` of weight strictly less than `d`.
pub fn ball_size(q: u32, len: usize, d: usize) -> BigUint {
    let mut total = BigUint::zero();
    let mut binom = BigUint::one();
    let q1 = BigUint::from(q.saturating_sub(1));
    let mut pow = BigUint::one();
    for i in 0..d.min(len + 1) {
        total += &binom * &pow;
        binom = binom * BigUint::from(len - i) / BigUint::from(i + 1);
        pow *= &q1;
    }
    total
}

/// `log_q` of a big integer, via `f64`.
fn log_q(q: u32, x: &BigUint) -> f64 {
    // scale huge values down first so they stay finite in f64
    let bits = x.bits();
    if bits > 1000 {
        let shift = bits - 900;
        let top = (x >> shift).to_f64().unwrap_or(f64::INFINITY);
        (top.ln() + shift as f64 * std::f64::consts::LN_2) / (q as f64).ln()
    } else {
        x.to_f64().unwrap_or(f64::INFINITY).ln() / (q as f64).ln()
    }
}

fn big_decimal<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_str_radix(10))
}

/// One comparison of an exact ball size with its entropy bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BallCheck {
    pub len: usize,
    pub d: usize,
    #[serde(serialize_with = "big_decimal")]
    pub ball_size: BigUint,
    /// `log_q` of the exact count.
    pub log_ball: f64,
    /// `len * H_q(d / len)`, the exponent of the bound.
    pub log_bound: f64,
    pub holds: bool,
}

/// Compares `ball_size(q, len, d)` with `q^(len * H_q(d/len))`.
pub fn ball_bound_check(q: u32, len: usize, d: usize) -> Result<BallCheck> {
    check_q(q)?;
    if len == 0 {
        return Err(Error::InvalidArgument("length must be positive".into()));
    }
    let delta = d as f64 / len as f64;
    if delta > 1.0 - 1.0 / q as f64 {
        return Err(Error::InvalidArgument(format!(
            "d/len = {delta} exceeds 1 - 1/q; the entropy bound does not apply"
        )));
    }
    let ball = ball_size(q, len, d);
    let log_ball = log_q(q, &ball);
    let log_bound = len as f64 * entropy(q, delta)?;
    // The ball counts weights < d <= delta * len, so the classical bound applies strictly.
    let holds = log_ball <= log_bound;
    Ok(BallCheck {
        len,
        d,
        ball_size: ball,
        log_ball,
        log_bound,
        holds,
    })
}

/// Whether `q^(2n-1) > q^n * V_n` where `V_n` counts the vectors of length
/// `2n` and weight below `floor(2n delta)`.
pub fn counting_inequality(q: u32, n: usize, delta: f64) -> Result<bool> {
    let omega = dt_code_count(q, n)?;
    let d = (2.0 * n as f64 * delta).floor() as usize;
    let rhs = BigUint::from(q).pow(n as u32) * ball_size(q, 2 * n, d);
    Ok(omega > rhs)
}

/// Threshold report for the counting inequality.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CountingThreshold {
    pub q: u32,
    pub delta: f64,
    /// Smallest `n0` such that the inequality holds for every `n0 <= n <= horizon`.
    pub n0: Option<usize>,
    pub horizon: usize,
}

/// Finds the block size from which `q^(2n-1) > q^n V_n` holds, checked up to `horizon`.
pub fn counting_threshold(q: u32, delta: f64, horizon: usize) -> Result<CountingThreshold> {
    check_q(q)?;
    if delta.is_nan() || delta <= 0.0 || entropy(q, delta.min(1.0))? >= 0.5 {
        return Err(Error::InvalidArgument(format!(
            "need 0 < delta with H_q(delta) < 1/2, got delta = {delta}"
        )));
    }
    let mut n0 = None;
    for n in 1..=horizon {
        if counting_inequality(q, n, delta)? {
            n0.get_or_insert(n);
        } else {
            n0 = None;
        }
    }
    Ok(CountingThreshold {
        q,
        delta,
        n0,
        horizon,
    })
}

/// Everything the `bounds` command reports for one alphabet size.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub q: u32,
    pub delta_gv_half: f64,
    /// `(x, H_q(x))` samples on a uniform grid of `[0, 1]`.
    pub entropy_curve: Vec<(f64, f64)>,
    pub ball_checks: Vec<BallCheck>,
    pub counting: Option<CountingThreshold>,
}

impl BoundReport {
    /// Builds the report: `samples + 1` curve points, ball checks for lengths
    /// `1..=max_len` and every admissible `d >= 1`, and the counting threshold
    /// for `delta` when given.
    pub fn build(
        q: u32,
        samples: usize,
        max_len: usize,
        delta: Option<f64>,
        horizon: usize,
    ) -> Result<Self> {
        let delta_gv_half = entropy_inverse_half(q, DEFAULT_TOLERANCE)?;
        let entropy_curve = (0..=samples)
            .map(|i| {
                let x = if samples == 0 {
                    0.0
                } else {
                    i as f64 / samples as f64
                };
                entropy(q, x).map(|h| (x, h))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut ball_checks = Vec::new();
        for len in 1..=max_len {
            let dmax = (len as f64 * (1.0 - 1.0 / q as f64)).floor() as usize;
            for d in 1..=dmax {
                ball_checks.push(ball_bound_check(q, len, d)?);
            }
        }
        let counting = delta
            .map(|dl| counting_threshold(q, dl, horizon))
            .transpose()?;
        Ok(BoundReport {
            q,
            delta_gv_half,
            entropy_curve,
            ball_checks,
            counting,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const QS: [u32; 5] = [2, 3, 4, 5, 7];

    #[test]
    fn entropy_examples() {
        assert!((entropy(2, 0.5).unwrap() - 1.0).abs() < 1e-15);
        for q in QS {
            assert_eq!(entropy(q, 0.0).unwrap(), 0.0);
        }
        assert!((entropy(4, 0.75).unwrap() - 1.0).abs() < 1e-15);
        assert!(entropy(2, -0.1).is_err());
        assert!(entropy(2, 1.1).is_err());
        assert!(entropy(1, 0.5).is_err());
        // H_q(1) = log_q(q-1)
        assert!((entropy(5, 1.0).unwrap() - (4f64).ln() / (5f64).ln()).abs() < 1e-15);
    }

    #[test]
    fn inverse_half() {
        let d2 = entropy_inverse_half(2, 1e-9).unwrap();
        assert!((d2 - 0.11003).abs() < 1e-5, "{d2}");
        for q in QS {
            let d = entropy_inverse_half(q, DEFAULT_TOLERANCE).unwrap();
            assert!((entropy(q, d).unwrap() - 0.5).abs() < 1e-8);
            assert!(d > 0.0 && d < 1.0 - 1.0 / q as f64);
            assert!((gv_rate(q, d).unwrap() - 0.5).abs() < 1e-8);
        }
        assert!(entropy_inverse_half(2, 0.0).is_err());
    }

    #[test]
    fn gv_examples() {
        assert_eq!(gv_rate(2, 0.0).unwrap(), 1.0);
        assert!(gv_rate(2, 0.5).unwrap().abs() < 1e-15);
        let d = entropy_inverse_half(4, DEFAULT_TOLERANCE).unwrap();
        assert!((gv_rate(4, d).unwrap() - 0.5).abs() < 1e-8);
        assert!(gv_rate(2, 0.6).is_err());
        assert!(gv_rate(3, -0.01).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(dt_code_count(2, 2).unwrap(), BigUint::from(8u32));
        assert_eq!(dt_code_count(3, 3).unwrap(), BigUint::from(243u32));
        assert_eq!(dt_code_count(2, 1).unwrap(), BigUint::from(2u32));
        // beyond 64 bits
        assert_eq!(dt_code_count(7, 20).unwrap(), BigUint::from(7u32).pow(39));
        assert!(dt_code_count(2, 0).is_err());
    }

    #[test]
    fn ball_examples() {
        assert_eq!(ball_size(2, 4, 2), BigUint::from(5u32));
        assert_eq!(ball_size(3, 3, 2), BigUint::from(7u32));
        assert_eq!(ball_size(2, 4, 0), BigUint::zero());
        assert_eq!(ball_size(2, 4, 5), BigUint::from(16u32));
        assert_eq!(ball_size(3, 3, 4), BigUint::from(27u32));
        // (2, 20, 4), delta = 0.2: direct summation vs the entropy evaluation
        let direct: u64 = (0..4u64)
            .map(|i| (0..i).fold(1u64, |c, j| c * (20 - j) / (j + 1)))
            .sum();
        assert_eq!(direct, 1 + 20 + 190 + 1140);
        let check = ball_bound_check(2, 20, 4).unwrap();
        assert_eq!(check.ball_size, BigUint::from(direct));
        assert!((check.log_bound - 20.0 * entropy(2, 0.2).unwrap()).abs() < 1e-12);
        assert!(check.holds);
        assert!(ball_bound_check(2, 4, 3).is_err());
    }

    #[test]
    fn counting_threshold_exists_below_half_entropy() {
        let report = counting_threshold(2, 0.05, 200).unwrap();
        let n0 = report.n0.expect("inequality should hold eventually");
        assert!(n0 == 1 || !counting_inequality(2, n0 - 1, 0.05).unwrap());
        for n in n0..=200 {
            assert!(counting_inequality(2, n, 0.05).unwrap());
        }
        assert!(counting_threshold(2, 0.2, 10).is_err());
    }
}

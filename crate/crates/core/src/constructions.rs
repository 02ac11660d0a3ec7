//! Explicit families of Toeplitz generators.
//!
//! * Self-dual generators over prime fields with `q = 1 (mod 4)`, built from a
//!   square root `w` of `-1` and the nilpotent shift matrices `E_i`.
//! * Quadratic-residue generators over `F_4`, where the upper tail marks the
//!   residues mod `p` and the lower tail the non-residues.
//! * The five worked `F_4` examples with their reference vectors.
//!
//! The reference example vectors do not follow the residue rule for every
//! prime (the lower tails differ for p = 3, 5, 7, 11 and the upper tail for
//! p = 7), so both are exposed separately.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{FMatrix, ToeplitzGen};
use crate::error::{Error, Result};
use crate::galois::{is_prime, FieldElement, FieldSpec};

/// `w` in the canonical `F_4` encoding.
pub const F4_W: FieldElement = FieldElement(2);

/// `E_i = E_1^i`: ones on the `i`-th superdiagonal.
pub fn shift_nilpotent(field: FieldSpec, n: usize, i: usize) -> Result<FMatrix> {
    if i == 0 || i >= n {
        return Err(Error::InvalidArgument(format!(
            "shift index must satisfy 1 <= i <= n-1, got i={i}, n={n}"
        )));
    }
    let mut m = FMatrix::zeros(field, n, n);
    for r in 0..n - i {
        m.set(r, r + i, FieldElement::ONE);
    }
    Ok(m)
}

/// Which self-dual family to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SelfDualVariant {
    /// `A = w E_i + w E_{n-i}^T`.
    Circulant(usize),
    /// `A = w E_i - w E_{n-i}^T`.
    Negacirculant(usize),
    /// `A = w I`.
    Scalar,
}

impl fmt::Display for SelfDualVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SelfDualVariant::Circulant(i) => write!(f, "circulant:{i}"),
            SelfDualVariant::Negacirculant(i) => write!(f, "negacirculant:{i}"),
            SelfDualVariant::Scalar => f.write_str("scalar"),
        }
    }
}

/// Generator with `A A^T = -I`, using the smallest square root `w` of `-1`.
pub fn self_dual_generator(
    field: FieldSpec,
    n: usize,
    variant: SelfDualVariant,
) -> Result<ToeplitzGen> {
    let w = field.sqrt_minus_one()?;
    if n == 0 {
        return Err(Error::InvalidArgument("block size must be positive".into()));
    }
    let zero = FieldElement::ZERO;
    let mut a = vec![zero; n - 1];
    let mut b = vec![zero; n - 1];
    let mut t = zero;
    match variant {
        SelfDualVariant::Scalar => t = w,
        SelfDualVariant::Circulant(i) | SelfDualVariant::Negacirculant(i) => {
            if i == 0 || i >= n {
                return Err(Error::InvalidArgument(format!(
                    "shift index must satisfy 1 <= i <= n-1, got i={i}, n={n}"
                )));
            }
            // w E_i puts w at a_i; E_{n-i}^T has ones on the (n-i)-th subdiagonal, i.e. b_{n-i}.
            a[i - 1] = w;
            b[n - i - 1] = match variant {
                SelfDualVariant::Circulant(_) => w,
                _ => field.neg(w),
            };
        }
    }
    ToeplitzGen::new(field, t, a, b)
}

/// Parameters of a quadratic-residue generator over `F_4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QRSpec {
    pub p: u64,
    pub t: FieldElement,
}

impl QRSpec {
    /// The usual choice `t = w`.
    pub fn new(p: u64) -> Self {
        QRSpec { p, t: F4_W }
    }
}

fn mod_pow(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * base as u128 % m as u128) as u64;
        }
        base = (base as u128 * base as u128 % m as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Euler's criterion for `1 <= i < p`, `p` an odd prime.
pub fn is_quadratic_residue(i: u64, p: u64) -> bool {
    mod_pow(i, (p - 1) / 2, p) == 1
}

/// Residue-indicator generator: `a_i = 1` iff `i` is a residue mod `p`, `b_i = 1` iff it is not.
pub fn qr_generator(qr: QRSpec) -> Result<ToeplitzGen> {
    let p = qr.p;
    if p == 2 {
        return Err(Error::InvalidArgument(
            "p = 2 has no residue structure; use the worked example generator".into(),
        ));
    }
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not a prime")));
    }
    let field = FieldSpec::F4;
    let residue: Vec<bool> = (1..p).map(|i| is_quadratic_residue(i, p)).collect();
    let one = FieldElement::ONE;
    let zero = FieldElement::ZERO;
    let a = residue
        .iter()
        .map(|&r| if r { one } else { zero })
        .collect();
    let b = residue
        .iter()
        .map(|&r| if r { zero } else { one })
        .collect();
    ToeplitzGen::new(field, qr.t, a, b)
}

/// Primes with a worked example.
pub const EXAMPLE_PRIMES: [u64; 5] = [2, 3, 5, 7, 11];

/// The worked example for `p`, with its claimed `[N, k, d]`.
pub fn worked_example_generator(p: u64) -> Result<ToeplitzGen> {
    let (a, b): (&[u32], &[u32]) = match p {
        2 => (&[1], &[1]),
        3 => (&[1, 0], &[1, 0]),
        5 => (&[1, 0, 0, 1], &[1, 0, 1, 1]),
        7 => (&[0, 0, 1, 0, 1, 1], &[1, 1, 0, 1, 1, 1]),
        11 => (
            &[1, 0, 1, 1, 1, 0, 0, 0, 1, 0],
            &[1, 0, 0, 1, 0, 1, 1, 1, 1, 1],
        ),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "no worked example for p = {p} (available: 2, 3, 5, 7, 11)"
            )))
        }
    };
    ToeplitzGen::from_values(FieldSpec::F4, F4_W.0 as u32, a, b)
}

/// Claimed parameters `[N, k, d]` of the worked examples.
pub fn example_parameters(p: u64) -> Option<(usize, usize, usize)> {
    match p {
        2 => Some((4, 2, 3)),
        3 => Some((6, 3, 3)),
        5 => Some((10, 5, 4)),
        7 => Some((14, 7, 5)),
        11 => Some((22, 11, 7)),
        _ => None,
    }
}

impl FromStr for SelfDualVariant {
    type Err = Error;

    /// Accepts `scalar`, `circulant:<i>` and `negacirculant:<i>`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, idx) = match s.split_once(':') {
            Some((n, i)) => (n, Some(i)),
            None => (s, None),
        };
        let index = || -> Result<usize> {
            idx.ok_or_else(|| {
                Error::Parse(format!("variant {name} needs an index, e.g. {name}:1"))
            })?
            .parse()
            .map_err(|_| Error::Parse(format!("bad variant index in {s:?}")))
        };
        match name {
            "scalar" => Ok(SelfDualVariant::Scalar),
            "circulant" => Ok(SelfDualVariant::Circulant(index()?)),
            "negacirculant" => Ok(SelfDualVariant::Negacirculant(index()?)),
            _ => Err(Error::Parse(format!("unknown variant {s:?}"))),
        }
    }
}

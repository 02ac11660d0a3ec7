//! Arithmetic in the small finite fields used throughout the crate.
//!
//! Two families are supported: prime fields `F_p` for every prime below
//! [`PRIME_LIMIT`], and the quartic field `F_4 = F_2[w]/(w^2 + w + 1)`.
//!
//! Elements are always carried in their canonical integer encoding
//! `0..q`. For prime fields the encoding is the residue itself. For `F_4`
//! the encoding is fixed as
//!
//! | encoding | element | text  |
//! |----------|---------|-------|
//! | 0        | 0       | `0`   |
//! | 1        | 1       | `1`   |
//! | 2        | w       | `w`   |
//! | 3        | w^2     | `w^2` |
//!
//! so that bit 1 is the coefficient of `w` and bit 0 the constant term;
//! addition in `F_4` is then a plain XOR. Orderings of field elements
//! anywhere in the crate follow the encoding order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exclusive upper bound on the prime fields we accept. Encodings must fit in a `u8`.
pub const PRIME_LIMIT: u32 = 256;

/// Multiplication table of `F_4` in the canonical encoding.
const F4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
const F4_INV: [u8; 4] = [0, 1, 3, 2];
const F4_NAMES: [&str; 4] = ["0", "1", "w", "w^2"];

/// A field element in canonical encoding. Meaningful only together with a [`FieldSpec`].
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct FieldElement(pub u8);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn value(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// The binary field operations exposed by [`FieldSpec::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Description of a supported finite field `F_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    q: u8,
    p: u8,
    degree: u8,
}

impl FieldSpec {
    /// `F_4`.
    pub const F4: FieldSpec = FieldSpec {
        q: 4,
        p: 2,
        degree: 2,
    };

    pub fn new(q: u32) -> Result<Self> {
        if q == 4 {
            return Ok(Self::F4);
        }
        if q < PRIME_LIMIT && is_prime(q as u64) {
            return Ok(FieldSpec {
                q: q as u8,
                p: q as u8,
                degree: 1,
            });
        }
        Err(Error::UnsupportedField(q))
    }

    /// Cardinality `q`.
    #[inline]
    pub fn q(&self) -> u32 {
        self.q as u32
    }

    /// Characteristic `p`.
    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p as u32
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree as u32
    }

    #[inline]
    pub fn is_prime_field(&self) -> bool {
        self.degree == 1
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    /// Nonzero elements in canonical order.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.q).map(FieldElement)
    }

    /// Validates a raw encoding.
    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if value < self.q() {
            Ok(FieldElement(value as u8))
        } else {
            Err(Error::InvalidElement { value, q: self.q() })
        }
    }

    #[inline]
    pub fn contains(&self, x: FieldElement) -> bool {
        x.0 < self.q
    }

    fn check(&self, x: FieldElement) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::InvalidElement {
                value: x.0 as u32,
                q: self.q(),
            })
        }
    }

    /// Checked arithmetic on two encodings.
    pub fn arith(&self, op: ArithOp, x: FieldElement, y: FieldElement) -> Result<FieldElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(match op {
            ArithOp::Add => self.add(x, y),
            ArithOp::Sub => self.sub(x, y),
            ArithOp::Mul => self.mul(x, y),
            ArithOp::Div => {
                if y.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                self.mul(x, self.inv_unchecked(y))
            }
        })
    }

    // The unchecked operations below assume valid encodings.

    #[inline]
    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if self.degree == 2 {
            FieldElement(x.0 ^ y.0)
        } else {
            let s = x.0 as u16 + y.0 as u16;
            let q = self.q as u16;
            FieldElement(if s >= q { s - q } else { s } as u8)
        }
    }

    #[inline]
    pub fn neg(&self, x: FieldElement) -> FieldElement {
        if self.degree == 2 || x.0 == 0 {
            x
        } else {
            FieldElement(self.q - x.0)
        }
    }

    #[inline]
    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if self.degree == 2 {
            FieldElement(F4_MUL[x.0 as usize][y.0 as usize])
        } else {
            FieldElement(((x.0 as u16 * y.0 as u16) % self.q as u16) as u8)
        }
    }

    /// Multiplicative inverse.
    pub fn inv(&self, x: FieldElement) -> Result<FieldElement> {
        self.check(x)?;
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.inv_unchecked(x))
    }

    fn inv_unchecked(&self, x: FieldElement) -> FieldElement {
        if self.degree == 2 {
            FieldElement(F4_INV[x.0 as usize])
        } else {
            // Fermat: x^(p-2)
            self.pow(x, self.q as u64 - 2)
        }
    }

    pub fn pow(&self, x: FieldElement, mut e: u64) -> FieldElement {
        let mut base = x;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The smallest `s` (by encoding) with `s^2 = -1`. Only prime fields with `q = 1 mod 4` qualify.
    pub fn sqrt_minus_one(&self) -> Result<FieldElement> {
        if !self.is_prime_field() || self.q % 4 != 1 {
            return Err(Error::NoSqrtMinusOne(self.q()));
        }
        let minus_one = self.neg(FieldElement::ONE);
        self.elements()
            .find(|&s| self.mul(s, s) == minus_one)
            .ok_or(Error::NoSqrtMinusOne(self.q()))
    }

    /// Text form of an element: the integer for prime fields, `0,1,w,w^2` for `F_4`.
    pub fn format(&self, x: FieldElement) -> String {
        if self.degree == 2 {
            F4_NAMES[x.0 as usize].to_string()
        } else {
            x.0.to_string()
        }
    }

    /// Exact inverse of [`FieldSpec::format`].
    pub fn parse(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        if self.degree == 2 {
            return F4_NAMES
                .iter()
                .position(|&name| name == s)
                .map(|i| FieldElement(i as u8))
                .ok_or_else(|| Error::Parse(format!("not an F_4 element: {s:?}")));
        }
        let value: u32 = s
            .parse()
            .map_err(|_| Error::Parse(format!("not an F_{} element: {s:?}", self.q)))?;
        self.element(value)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q)
    }
}

/// Trial-division primality test; the inputs here are tiny.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

//! Dense vectors and matrices over a [`FieldSpec`], plus Toeplitz generators.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::galois::{FieldElement, FieldSpec};

/// A row vector over a field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector {
    field: FieldSpec,
    entries: Vec<FieldElement>,
}

impl FVector {
    pub fn new(field: FieldSpec, entries: Vec<FieldElement>) -> Result<Self> {
        if let Some(bad) = entries.iter().find(|x| !field.contains(**x)) {
            return Err(Error::InvalidElement {
                value: bad.0 as u32,
                q: field.q(),
            });
        }
        Ok(FVector { field, entries })
    }

    /// Builds a vector from raw encodings.
    pub fn from_values(field: FieldSpec, values: &[u32]) -> Result<Self> {
        let entries = values
            .iter()
            .map(|&v| field.element(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(FVector { field, entries })
    }

    pub fn zeros(field: FieldSpec, len: usize) -> Self {
        FVector {
            field,
            entries: vec![FieldElement::ZERO; len],
        }
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    #[inline]
    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize) -> FieldElement {
        self.entries[i]
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    /// Concatenation `(self | other)`.
    pub fn concat(&self, other: &FVector) -> Result<FVector> {
        same_field(self.field, other.field)?;
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(FVector {
            field: self.field,
            entries,
        })
    }

    /// Row vector times matrix.
    pub fn mul_matrix(&self, m: &FMatrix) -> Result<FVector> {
        same_field(self.field, m.field)?;
        if self.len() != m.rows {
            return Err(Error::DimensionMismatch {
                op: "vector-matrix product",
                left: (1, self.len()),
                right: (m.rows, m.cols),
            });
        }
        let f = self.field;
        let mut out = vec![FieldElement::ZERO; m.cols];
        for (i, &c) in self.entries.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(m.row(i)) {
                *o = f.add(*o, f.mul(c, x));
            }
        }
        Ok(FVector {
            field: f,
            entries: out,
        })
    }

    /// Text form: comma-separated element names.
    pub fn to_text(&self) -> String {
        join_elements(self.field, &self.entries)
    }

    /// Parses the comma-separated text form; the empty string is the empty vector.
    pub fn parse(field: FieldSpec, s: &str) -> Result<FVector> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(FVector {
                field,
                entries: Vec::new(),
            });
        }
        let entries = s
            .split(',')
            .map(|tok| field.parse(tok))
            .collect::<Result<Vec<_>>>()?;
        Ok(FVector { field, entries })
    }
}

fn join_elements(field: FieldSpec, xs: &[FieldElement]) -> String {
    xs.iter()
        .map(|&x| field.format(x))
        .collect::<Vec<_>>()
        .join(",")
}

fn same_field(a: FieldSpec, b: FieldSpec) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::FieldMismatch(a.q(), b.q()))
    }
}

/// A dense row-major matrix over a field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl FMatrix {
    pub fn new(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        data: Vec<FieldElement>,
    ) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        if let Some(bad) = data.iter().find(|x| !field.contains(**x)) {
            return Err(Error::InvalidElement {
                value: bad.0 as u32,
                q: field.q(),
            });
        }
        Ok(FMatrix {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from nested raw encodings.
    pub fn from_rows(field: FieldSpec, rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidArgument("ragged rows".into()));
        }
        let data = rows
            .iter()
            .flatten()
            .map(|&v| field.element(v))
            .collect::<Result<Vec<_>>>()?;
        FMatrix::new(field, rows.len(), cols, data)
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        FMatrix {
            field,
            rows,
            cols,
            data: vec![FieldElement::ZERO; rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = FMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: FieldElement) {
        self.data[i * self.cols + j] = x;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vector(&self, i: usize) -> FVector {
        FVector {
            field: self.field,
            entries: self.row(i).to_vec(),
        }
    }

    pub fn mul(&self, other: &FMatrix) -> Result<FMatrix> {
        same_field(self.field, other.field)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "matrix product",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let f = self.field;
        let mut out = FMatrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let c = self.get(i, k);
                if c.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(c, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> FMatrix {
        let mut out = FMatrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn add(&self, other: &FMatrix) -> Result<FMatrix> {
        same_field(self.field, other.field)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                op: "matrix sum",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&x, &y)| f.add(x, y))
            .collect();
        Ok(FMatrix { data, ..*self })
    }

    pub fn scale(&self, c: FieldElement) -> FMatrix {
        let f = self.field;
        FMatrix {
            data: self.data.iter().map(|&x| f.mul(c, x)).collect(),
            ..*self
        }
    }

    pub fn negate(&self) -> FMatrix {
        let f = self.field;
        FMatrix {
            data: self.data.iter().map(|&x| f.neg(x)).collect(),
            ..*self
        }
    }

    /// Horizontal concatenation `(self | other)`.
    pub fn hconcat(&self, other: &FMatrix) -> Result<FMatrix> {
        same_field(self.field, other.field)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                op: "horizontal concatenation",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut data = Vec::with_capacity(self.rows * (self.cols + other.cols));
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Ok(FMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        })
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// True iff every row and column has exactly one nonzero entry.
    pub fn is_monomial(&self) -> bool {
        let nz =
            |it: &mut dyn Iterator<Item = FieldElement>| it.filter(|x| !x.is_zero()).count() == 1;
        self.is_square()
            && (0..self.rows).all(|i| nz(&mut self.row(i).iter().copied()))
            && (0..self.cols).all(|j| nz(&mut (0..self.rows).map(|i| self.get(i, j))))
    }
}

impl fmt::Display for FMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{}", join_elements(self.field, self.row(i)))?;
        }
        Ok(())
    }
}

/// The anti-diagonal permutation matrix obtained by reversing the rows of the identity.
pub fn reversal_permutation(field: FieldSpec, n: usize) -> FMatrix {
    let mut m = FMatrix::zeros(field, n, n);
    for i in 0..n {
        m.set(i, n - 1 - i, FieldElement::ONE);
    }
    m
}

/// Generator of an `n x n` Toeplitz matrix: the shared diagonal `t`, the
/// upper tail `a_1..a_{n-1}` and the lower tail `b_1..b_{n-1}`.
///
/// Entry `(i, j)` of the expansion is `t` on the diagonal, `a_{j-i}` above it
/// and `b_{i-j}` below it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ToeplitzGen {
    field: FieldSpec,
    t: FieldElement,
    a: Vec<FieldElement>,
    b: Vec<FieldElement>,
}

impl ToeplitzGen {
    pub fn new(
        field: FieldSpec,
        t: FieldElement,
        a: Vec<FieldElement>,
        b: Vec<FieldElement>,
    ) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch {
                expected: a.len(),
                got: b.len(),
            });
        }
        if let Some(bad) = std::iter::once(&t)
            .chain(&a)
            .chain(&b)
            .find(|x| !field.contains(**x))
        {
            return Err(Error::InvalidElement {
                value: bad.0 as u32,
                q: field.q(),
            });
        }
        Ok(ToeplitzGen { field, t, a, b })
    }

    /// Convenience constructor from raw encodings.
    pub fn from_values(field: FieldSpec, t: u32, a: &[u32], b: &[u32]) -> Result<Self> {
        let t = field.element(t)?;
        let a = FVector::from_values(field, a)?.entries;
        let b = FVector::from_values(field, b)?.entries;
        ToeplitzGen::new(field, t, a, b)
    }

    /// Rebuilds a generator from its flat form `(t, a_1..a_{n-1}, b_1..b_{n-1})`.
    pub fn from_flat(field: FieldSpec, flat: &[FieldElement]) -> Result<Self> {
        if flat.is_empty() || flat.len().is_multiple_of(2) {
            return Err(Error::InvalidArgument(format!(
                "flat generator must have odd length 2n-1, got {}",
                flat.len()
            )));
        }
        let n = flat.len().div_ceil(2);
        ToeplitzGen::new(field, flat[0], flat[1..n].to_vec(), flat[n..].to_vec())
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Block size `n`.
    #[inline]
    pub fn n(&self) -> usize {
        self.a.len() + 1
    }

    #[inline]
    pub fn t(&self) -> FieldElement {
        self.t
    }

    /// Upper tail `a_1..a_{n-1}`.
    #[inline]
    pub fn a(&self) -> &[FieldElement] {
        &self.a
    }

    /// Lower tail `b_1..b_{n-1}`.
    #[inline]
    pub fn b(&self) -> &[FieldElement] {
        &self.b
    }

    /// Upper generator vector `(t, a_1, .., a_{n-1})`, i.e. the first row.
    pub fn upper_vector(&self) -> FVector {
        FVector {
            field: self.field,
            entries: std::iter::once(self.t)
                .chain(self.a.iter().copied())
                .collect(),
        }
    }

    /// Lower generator vector `(t, b_1, .., b_{n-1})`, i.e. the first column.
    pub fn lower_vector(&self) -> FVector {
        FVector {
            field: self.field,
            entries: std::iter::once(self.t)
                .chain(self.b.iter().copied())
                .collect(),
        }
    }

    /// Flat serialization order `(t, a_1..a_{n-1}, b_1..b_{n-1})`.
    pub fn flat(&self) -> Vec<FieldElement> {
        let mut v = Vec::with_capacity(2 * self.n() - 1);
        v.push(self.t);
        v.extend_from_slice(&self.a);
        v.extend_from_slice(&self.b);
        v
    }

    /// Entry `(i, j)` of the expanded matrix.
    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> FieldElement {
        use std::cmp::Ordering::*;
        match j.cmp(&i) {
            Equal => self.t,
            Greater => self.a[j - i - 1],
            Less => self.b[i - j - 1],
        }
    }

    /// Expands to the dense `n x n` Toeplitz matrix.
    pub fn matrix(&self) -> FMatrix {
        let n = self.n();
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(self.entry(i, j));
            }
        }
        FMatrix {
            field: self.field,
            rows: n,
            cols: n,
            data,
        }
    }

    /// Generator of the transpose: `(t, b, a)`.
    pub fn swapped(&self) -> ToeplitzGen {
        ToeplitzGen {
            field: self.field,
            t: self.t,
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    /// Generator of `c * A`.
    pub fn scaled(&self, c: FieldElement) -> ToeplitzGen {
        let f = self.field;
        ToeplitzGen {
            field: f,
            t: f.mul(c, self.t),
            a: self.a.iter().map(|&x| f.mul(c, x)).collect(),
            b: self.b.iter().map(|&x| f.mul(c, x)).collect(),
        }
    }

    /// `b_i = a_{n-i}` for all `i`.
    pub fn is_circulant(&self) -> bool {
        let n = self.n();
        (1..n).all(|i| self.b[i - 1] == self.a[n - i - 1])
    }

    /// `b_i = -a_{n-i}` for all `i`.
    pub fn is_negacirculant(&self) -> bool {
        let n = self.n();
        (1..n).all(|i| self.b[i - 1] == self.field.neg(self.a[n - i - 1]))
    }

    /// Text form `q=<q> n=<n> t=<elt> a=<e1,..> b=<e1,..>`.
    pub fn to_text(&self) -> String {
        format!(
            "q={} n={} t={} a={} b={}",
            self.field.q(),
            self.n(),
            self.field.format(self.t),
            join_elements(self.field, &self.a),
            join_elements(self.field, &self.b)
        )
    }
}

impl fmt::Display for ToeplitzGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for ToeplitzGen {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut q = None;
        let mut n = None;
        let mut t = None;
        let mut a = None;
        let mut b = None;
        for tok in s.split_whitespace() {
            let (key, value) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {tok:?}")))?;
            let slot = match key {
                "q" => &mut q,
                "n" => &mut n,
                "t" => &mut t,
                "a" => &mut a,
                "b" => &mut b,
                _ => return Err(Error::Parse(format!("unknown key {key:?}"))),
            };
            if slot.replace(value).is_some() {
                return Err(Error::Parse(format!("duplicate key {key:?}")));
            }
        }
        let missing = |k: &str| Error::Parse(format!("missing key {k:?}"));
        let q: u32 = q
            .ok_or_else(|| missing("q"))?
            .parse()
            .map_err(|_| Error::Parse("q is not an integer".into()))?;
        let field = FieldSpec::new(q)?;
        let t = field.parse(t.ok_or_else(|| missing("t"))?)?;
        let a = FVector::parse(field, a.unwrap_or(""))?.entries;
        let b = FVector::parse(field, b.unwrap_or(""))?.entries;
        let gen = ToeplitzGen::new(field, t, a, b)?;
        if let Some(n) = n {
            let n: usize = n
                .parse()
                .map_err(|_| Error::Parse("n is not an integer".into()))?;
            if n != gen.n() {
                return Err(Error::Parse(format!(
                    "n={n} disagrees with tail length {}",
                    gen.n() - 1
                )));
            }
        }
        Ok(gen)
    }
}

impl Serialize for ToeplitzGen {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

impl<'de> Deserialize<'de> for ToeplitzGen {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

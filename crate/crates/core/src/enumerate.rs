//! Message enumeration kernels for systematic rate-1/2 style codes `{(m, mB)}`.
//!
//! The hot loops of minimum-distance computation and the generator search live
//! here. A codeword `(m, mB)` has weight `wt(m) + wt(mB)`, so enumerating
//! messages tier by tier in increasing `wt(m)` lets every search stop as soon
//! as the tier weight alone reaches the best codeword weight found so far.

use crate::algebra::FMatrix;
use crate::error::{Error, Result};
use crate::galois::{FieldElement, FieldSpec};

/// Row storage for the block `B` with the accumulator arithmetic it needs.
pub(crate) trait Rows {
    type Acc: Clone;

    /// Number of message symbols (rows of `B`).
    fn k(&self) -> usize;
    fn q(&self) -> usize;
    fn zero(&self) -> Self::Acc;
    /// `out = acc + coeff * B[row]`.
    fn add_into(&self, acc: &Self::Acc, row: usize, coeff: u8, out: &mut Self::Acc);
    fn weight(&self, acc: &Self::Acc) -> usize;
}

/// `F_2` rows packed into bitmasks (block width at most 64).
#[derive(Clone, Debug)]
pub(crate) struct BinaryRows {
    rows: Vec<u64>,
}

impl BinaryRows {
    pub fn new(k: usize) -> Self {
        BinaryRows { rows: vec![0; k] }
    }

    pub fn from_matrix(m: &FMatrix) -> Self {
        debug_assert!(m.cols() <= 64);
        let rows = (0..m.rows())
            .map(|i| {
                m.row(i)
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (j, x)| acc | ((x.0 as u64) << j))
            })
            .collect();
        BinaryRows { rows }
    }

    /// Reloads the rows with the Toeplitz matrix of a flat generator `(t, a, b)`.
    pub fn load_toeplitz(&mut self, flat: &[u8]) {
        let n = self.rows.len();
        for (i, row) in self.rows.iter_mut().enumerate() {
            let mut mask = 0u64;
            for j in 0..n {
                if toeplitz_entry(flat, n, i, j) != 0 {
                    mask |= 1 << j;
                }
            }
            *row = mask;
        }
    }
}

impl Rows for BinaryRows {
    type Acc = u64;

    #[inline]
    fn k(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    fn q(&self) -> usize {
        2
    }

    #[inline]
    fn zero(&self) -> u64 {
        0
    }

    #[inline]
    fn add_into(&self, acc: &u64, row: usize, _coeff: u8, out: &mut u64) {
        *out = *acc ^ self.rows[row];
    }

    #[inline]
    fn weight(&self, acc: &u64) -> usize {
        acc.count_ones() as usize
    }
}

/// Rows over any supported field, with every scalar multiple precomputed.
#[derive(Clone, Debug)]
pub(crate) struct GeneralRows {
    field: FieldSpec,
    q: usize,
    k: usize,
    width: usize,
    add: Vec<u8>,
    // scaled[(row * q + c) * width + j] = c * B[row][j]
    scaled: Vec<u8>,
}

impl GeneralRows {
    pub fn new(field: FieldSpec, k: usize, width: usize) -> Self {
        let q = field.q() as usize;
        let mut add = vec![0u8; q * q];
        for x in field.elements() {
            for y in field.elements() {
                add[x.0 as usize * q + y.0 as usize] = field.add(x, y).0;
            }
        }
        GeneralRows {
            field,
            q,
            k,
            width,
            add,
            scaled: vec![0; k * q * width],
        }
    }

    pub fn from_matrix(m: &FMatrix) -> Self {
        let mut rows = GeneralRows::new(m.field(), m.rows(), m.cols());
        for i in 0..m.rows() {
            let row: Vec<u8> = m.row(i).iter().map(|x| x.0).collect();
            rows.set_row(i, &row);
        }
        rows
    }

    fn set_row(&mut self, i: usize, row: &[u8]) {
        let (q, w, f) = (self.q, self.width, self.field);
        for c in 0..q {
            let base = (i * q + c) * w;
            for (j, &x) in row.iter().enumerate() {
                self.scaled[base + j] = f.mul(FieldElement(c as u8), FieldElement(x)).0;
            }
        }
    }

    pub fn load_toeplitz(&mut self, flat: &[u8]) {
        let n = self.k;
        let mut row = vec![0u8; n];
        for i in 0..n {
            for (j, r) in row.iter_mut().enumerate() {
                *r = toeplitz_entry(flat, n, i, j);
            }
            self.set_row(i, &row);
        }
    }
}

impl Rows for GeneralRows {
    type Acc = Vec<u8>;

    #[inline]
    fn k(&self) -> usize {
        self.k
    }

    #[inline]
    fn q(&self) -> usize {
        self.q
    }

    fn zero(&self) -> Vec<u8> {
        vec![0; self.width]
    }

    #[inline]
    fn add_into(&self, acc: &Vec<u8>, row: usize, coeff: u8, out: &mut Vec<u8>) {
        let base = (row * self.q + coeff as usize) * self.width;
        let src = &self.scaled[base..base + self.width];
        for ((o, &x), &y) in out.iter_mut().zip(acc.iter()).zip(src) {
            *o = self.add[x as usize * self.q + y as usize];
        }
    }

    #[inline]
    fn weight(&self, acc: &Vec<u8>) -> usize {
        acc.iter().filter(|&&x| x != 0).count()
    }
}

#[inline]
pub(crate) fn toeplitz_entry(flat: &[u8], n: usize, i: usize, j: usize) -> u8 {
    use std::cmp::Ordering::*;
    match j.cmp(&i) {
        Equal => flat[0],
        Greater => flat[j - i],
        Less => flat[n - 1 + i - j],
    }
}

/// Either kernel, chosen by field and width.
#[derive(Clone, Debug)]
pub(crate) enum AnyRows {
    Binary(BinaryRows),
    General(GeneralRows),
}

impl AnyRows {
    pub fn from_matrix(m: &FMatrix) -> Self {
        if m.field().q() == 2 && m.cols() <= 64 {
            AnyRows::Binary(BinaryRows::from_matrix(m))
        } else {
            AnyRows::General(GeneralRows::from_matrix(m))
        }
    }

    /// A reusable kernel for `n x n` Toeplitz blocks.
    pub fn for_toeplitz(field: FieldSpec, n: usize) -> Self {
        if field.q() == 2 && n <= 64 {
            AnyRows::Binary(BinaryRows::new(n))
        } else {
            AnyRows::General(GeneralRows::new(field, n, n))
        }
    }

    pub fn load_toeplitz(&mut self, flat: &[u8]) {
        match self {
            AnyRows::Binary(r) => r.load_toeplitz(flat),
            AnyRows::General(r) => r.load_toeplitz(flat),
        }
    }

    pub fn min_weight_exact(&self, budget: u128) -> Result<(usize, Vec<u8>)> {
        match self {
            AnyRows::Binary(r) => min_weight_exact(r, budget),
            AnyRows::General(r) => min_weight_exact(r, budget),
        }
    }

    pub fn min_weight_cutoff(&self, cutoff: usize) -> Option<usize> {
        match self {
            AnyRows::Binary(r) => min_weight_cutoff(r, cutoff),
            AnyRows::General(r) => min_weight_cutoff(r, cutoff),
        }
    }

    pub fn weight_counts(&self, width: usize) -> Vec<u64> {
        match self {
            AnyRows::Binary(r) => weight_counts(r, width),
            AnyRows::General(r) => weight_counts(r, width),
        }
    }
}

/// Number of messages of weight exactly `w`: `C(k, w) (q-1)^w`.
pub(crate) fn tier_size(k: usize, q: usize, w: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..w {
        c = c * (k - i) as u128 / (i + 1) as u128;
    }
    c.saturating_mul((q as u128 - 1).saturating_pow(w as u32))
}

struct TierWalk<'a, R: Rows> {
    rows: &'a R,
    stack: Vec<R::Acc>,
    pos: Vec<usize>,
    val: Vec<u8>,
}

impl<'a, R: Rows> TierWalk<'a, R> {
    fn new(rows: &'a R) -> Self {
        let k = rows.k();
        TierWalk {
            rows,
            stack: vec![rows.zero(); k + 1],
            pos: Vec::with_capacity(k),
            val: Vec::with_capacity(k),
        }
    }

    /// Visits every message of weight `w`; `f` gets `(positions, values, codeword weight)`
    /// and returns `false` to stop. Returns `false` if stopped early.
    fn walk<F>(&mut self, w: usize, f: &mut F) -> bool
    where
        F: FnMut(&[usize], &[u8], usize) -> bool,
    {
        if w == 0 || w > self.rows.k() {
            return true;
        }
        self.rec(0, 0, w, f)
    }

    fn rec<F>(&mut self, depth: usize, start: usize, w: usize, f: &mut F) -> bool
    where
        F: FnMut(&[usize], &[u8], usize) -> bool,
    {
        let k = self.rows.k();
        let q = self.rows.q();
        for i in start..=(k - (w - depth)) {
            self.pos.push(i);
            for c in 1..q as u8 {
                let (lo, hi) = self.stack.split_at_mut(depth + 1);
                self.rows.add_into(&lo[depth], i, c, &mut hi[0]);
                self.val.push(c);
                let go = if depth + 1 == w {
                    let cw = w + self.rows.weight(&self.stack[w]);
                    f(&self.pos, &self.val, cw)
                } else {
                    self.rec(depth + 1, i + 1, w, f)
                };
                self.val.pop();
                if !go {
                    self.pos.pop();
                    return false;
                }
            }
            self.pos.pop();
        }
        true
    }
}

fn dense(k: usize, pos: &[usize], val: &[u8]) -> Vec<u8> {
    let mut m = vec![0u8; k];
    for (&p, &v) in pos.iter().zip(val) {
        m[p] = v;
    }
    m
}

/// Exact minimum nonzero codeword weight with the lexicographically smallest message achieving it.
pub(crate) fn min_weight_exact<R: Rows>(rows: &R, budget: u128) -> Result<(usize, Vec<u8>)> {
    let k = rows.k();
    let mut best = usize::MAX;
    let mut witness: Vec<u8> = Vec::new();
    let mut spent: u128 = 0;
    let mut walk = TierWalk::new(rows);
    // Tier w can only reach weight >= w, so tiers beyond the current best cannot matter.
    for w in 1..=k {
        if w > best {
            break;
        }
        spent = spent.saturating_add(tier_size(k, rows.q(), w));
        if spent > budget {
            return Err(Error::BudgetExceeded {
                needed: spent,
                budget,
                partial_bound: (best != usize::MAX).then_some(best),
            });
        }
        walk.walk(w, &mut |pos, val, cw| {
            if cw < best {
                best = cw;
                witness = dense(k, pos, val);
            } else if cw == best {
                let m = dense(k, pos, val);
                if m < witness {
                    witness = m;
                }
            }
            true
        });
    }
    Ok((best, witness))
}

/// Minimum weight if it is at least `cutoff`; `None` as soon as a lighter codeword shows up.
pub(crate) fn min_weight_cutoff<R: Rows>(rows: &R, cutoff: usize) -> Option<usize> {
    let k = rows.k();
    let mut best = usize::MAX;
    let mut walk = TierWalk::new(rows);
    for w in 1..=k {
        if w >= best {
            break;
        }
        let finished = walk.walk(w, &mut |_, _, cw| {
            if cw < cutoff {
                return false;
            }
            best = best.min(cw);
            true
        });
        if !finished {
            return None;
        }
    }
    Some(best)
}

/// Full weight distribution `A_0..A_{k+width}` by enumerating all `q^k` messages.
pub(crate) fn weight_counts<R: Rows>(rows: &R, width: usize) -> Vec<u64> {
    fn rec<R: Rows>(rows: &R, i: usize, mw: usize, stack: &mut [R::Acc], counts: &mut [u64]) {
        if i == rows.k() {
            counts[mw + rows.weight(&stack[i])] += 1;
            return;
        }
        {
            let (lo, hi) = stack.split_at_mut(i + 1);
            hi[0] = lo[i].clone();
        }
        rec(rows, i + 1, mw, stack, counts);
        for c in 1..rows.q() as u8 {
            {
                let (lo, hi) = stack.split_at_mut(i + 1);
                rows.add_into(&lo[i], i, c, &mut hi[0]);
            }
            rec(rows, i + 1, mw + 1, stack, counts);
        }
    }
    let mut counts = vec![0u64; rows.k() + width + 1];
    let mut stack = vec![rows.zero(); rows.k() + 1];
    rec(rows, 0, 0, &mut stack, &mut counts);
    counts
}

//! Double Toeplitz codes and their per-code analysis.
//!
//! A double Toeplitz (DT) code of block size `n` is the row space of
//! `G = (I | A)` with `A` an `n x n` Toeplitz matrix. Its dual is generated by
//! `H = (-A^T | I)`. Most analysis here works for any systematic generator
//! `(I | B)`, so the general case lives in [`SystematicCode`] and [`DTCode`]
//! adds the Toeplitz-specific predicates.

use serde::{Deserialize, Serialize};

use crate::algebra::{reversal_permutation, FMatrix, FVector, ToeplitzGen};
use crate::enumerate::AnyRows;
use crate::error::{Error, Result};
use crate::galois::{FieldElement, FieldSpec};
use crate::stream::SeedStream;

/// Default cap on enumerated messages.
pub const DEFAULT_BUDGET: u128 = 1 << 28;

/// How [`SystematicCode::min_distance`] should work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceMode {
    /// Provably exact, by message-weight tiers.
    Exact,
    /// Upper bound from `trials` random nonzero messages.
    Sampled { trials: u64, seed: u64 },
}

/// Result of a minimum distance computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinDistance {
    pub d: usize,
    /// Lexicographically smallest message reaching `d` among those examined.
    pub witness: FVector,
    /// `false` when `d` is only an upper bound.
    pub exact: bool,
}

/// Counts `A_0..A_N` of codewords by Hamming weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub q: u32,
    pub length: usize,
    pub counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn new(q: u32, counts: Vec<u64>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::InconsistentDistribution("no counts".into()));
        }
        Ok(WeightDistribution {
            q,
            length: counts.len() - 1,
            counts,
        })
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    /// Smallest positive weight that occurs, if any.
    pub fn min_distance(&self) -> Option<usize> {
        self.counts
            .iter()
            .skip(1)
            .position(|&c| c > 0)
            .map(|i| i + 1)
    }

    /// Weight distribution of the dual of a `k`-dimensional code with this distribution.
    pub fn macwilliams_dual(&self, k: usize) -> Result<WeightDistribution> {
        macwilliams_dual_distribution(self, self.q, k)
    }
}

fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut c: i128 = 1;
    for i in 0..k {
        c = c * (n - i) as i128 / (i + 1) as i128;
    }
    c
}

/// Krawtchouk polynomial `K_j(i)` for length `len` over an alphabet of size `q`.
fn krawtchouk(len: usize, q: u32, j: usize, i: usize) -> Result<i128> {
    let overflow = || Error::Overflow("Krawtchouk polynomial");
    let mut sum: i128 = 0;
    for s in 0..=j {
        let pow = (q as i128 - 1)
            .checked_pow((j - s) as u32)
            .ok_or_else(overflow)?;
        let term = pow
            .checked_mul(binomial(i, s))
            .and_then(|t| t.checked_mul(binomial(len - i, j - s)))
            .ok_or_else(overflow)?;
        sum = if s % 2 == 0 {
            sum.checked_add(term)
        } else {
            sum.checked_sub(term)
        }
        .ok_or_else(overflow)?;
    }
    Ok(sum)
}

/// MacWilliams transform: `B_j = q^{-k} sum_i A_i K_j(i)`.
pub fn macwilliams_dual_distribution(
    wd: &WeightDistribution,
    q: u32,
    k: usize,
) -> Result<WeightDistribution> {
    let size = (q as u128)
        .checked_pow(k as u32)
        .ok_or(Error::Overflow("code size"))?;
    if wd.total() != size {
        return Err(Error::InconsistentDistribution(format!(
            "counts sum to {} but a {k}-dimensional code over F_{q} has {size} words",
            wd.total()
        )));
    }
    if wd.counts.first() != Some(&1) {
        return Err(Error::InconsistentDistribution("A_0 must be 1".into()));
    }
    let len = wd.length;
    let size = size as i128;
    let mut out = Vec::with_capacity(len + 1);
    for j in 0..=len {
        let mut acc: i128 = 0;
        for (i, &a) in wd.counts.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let term = krawtchouk(len, q, j, i)?
                .checked_mul(a as i128)
                .ok_or(Error::Overflow("MacWilliams transform"))?;
            acc = acc
                .checked_add(term)
                .ok_or(Error::Overflow("MacWilliams transform"))?;
        }
        if acc < 0 || acc % size != 0 {
            return Err(Error::InconsistentDistribution(format!(
                "transform gives non-integral or negative B_{j} = {acc}/{size}"
            )));
        }
        let b = u64::try_from(acc / size).map_err(|_| Error::Overflow("dual count"))?;
        out.push(b);
    }
    WeightDistribution::new(q, out)
}

/// The code generated by `(I | B)` for a `k x r` block `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystematicCode {
    block: FMatrix,
}

impl SystematicCode {
    pub fn new(block: FMatrix) -> Self {
        SystematicCode { block }
    }

    pub fn field(&self) -> FieldSpec {
        self.block.field()
    }

    pub fn block(&self) -> &FMatrix {
        &self.block
    }

    /// Dimension `k`.
    pub fn dimension(&self) -> usize {
        self.block.rows()
    }

    /// Length `N = k + r`.
    pub fn length(&self) -> usize {
        self.block.rows() + self.block.cols()
    }

    /// `G = (I | B)`.
    pub fn generator_matrix(&self) -> FMatrix {
        FMatrix::identity(self.field(), self.dimension())
            .hconcat(&self.block)
            .expect("identity has k rows")
    }

    /// `H = (-B^T | I)`.
    pub fn parity_check_matrix(&self) -> FMatrix {
        self.block
            .transpose()
            .negate()
            .hconcat(&FMatrix::identity(self.field(), self.block.cols()))
            .expect("transpose has r rows")
    }

    /// The dual, up to the column permutation swapping the two blocks: `(I | -B^T)`.
    pub fn dual_permuted(&self) -> SystematicCode {
        SystematicCode::new(self.block.transpose().negate())
    }

    /// `m G = (m, m B)`.
    pub fn encode(&self, m: &FVector) -> Result<FVector> {
        if m.len() != self.dimension() {
            return Err(Error::LengthMismatch {
                expected: self.dimension(),
                got: m.len(),
            });
        }
        m.concat(&m.mul_matrix(&self.block)?)
    }

    fn message_count(&self) -> u128 {
        (self.field().q() as u128).saturating_pow(self.dimension() as u32)
    }

    /// Exact weight distribution by enumerating all `q^k` messages.
    pub fn weight_distribution(&self, budget: u128) -> Result<WeightDistribution> {
        let needed = self.message_count();
        if needed > budget {
            return Err(Error::BudgetExceeded {
                needed,
                budget,
                partial_bound: None,
            });
        }
        let rows = AnyRows::from_matrix(&self.block);
        WeightDistribution::new(self.field().q(), rows.weight_counts(self.block.cols()))
    }

    /// Weight distribution of the code generated by `H`, enumerated directly.
    pub fn dual_weight_distribution(&self, budget: u128) -> Result<WeightDistribution> {
        self.dual_permuted().weight_distribution(budget)
    }

    /// Formally self-dual: same weight distribution as the directly enumerated dual.
    pub fn is_fsd(&self, budget: u128) -> Result<bool> {
        Ok(self.weight_distribution(budget)? == self.dual_weight_distribution(budget)?)
    }

    pub fn min_distance(&self, mode: DistanceMode, budget: u128) -> Result<MinDistance> {
        let field = self.field();
        match mode {
            DistanceMode::Exact => {
                let rows = AnyRows::from_matrix(&self.block);
                let (d, witness) = rows.min_weight_exact(budget)?;
                Ok(MinDistance {
                    d,
                    witness: FVector::new(field, witness.into_iter().map(FieldElement).collect())?,
                    exact: true,
                })
            }
            DistanceMode::Sampled { trials, seed } => self.sampled_distance(trials, seed),
        }
    }

    fn sampled_distance(&self, trials: u64, seed: u64) -> Result<MinDistance> {
        if trials == 0 {
            return Err(Error::InvalidArgument(
                "sampled mode needs at least one trial".into(),
            ));
        }
        let field = self.field();
        let k = self.dimension();
        let stream = SeedStream::new(seed);
        let mut best: Option<(usize, FVector)> = None;
        for trial in 0..trials {
            let mut lane = stream.lane(trial);
            let m = loop {
                let entries: Vec<FieldElement> = (0..k)
                    .map(|_| FieldElement(lane.below(field.q() as u64) as u8))
                    .collect();
                if entries.iter().any(|x| !x.is_zero()) {
                    break FVector::new(field, entries)?;
                }
            };
            let w = self.encode(&m)?.weight();
            let better = match &best {
                None => true,
                Some((bw, bm)) => w < *bw || (w == *bw && m.entries() < bm.entries()),
            };
            if better {
                best = Some((w, m));
            }
        }
        let (d, witness) = best.expect("at least one trial");
        Ok(MinDistance {
            d,
            witness,
            exact: false,
        })
    }
}

/// Outcome of checking a self-dual DT code against the circulant/negacirculant dichotomy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Structure {
    NotSelfDual,
    Circulant,
    Negacirculant,
    Both,
}

impl Structure {
    pub fn as_str(self) -> &'static str {
        match self {
            Structure::NotSelfDual => "not_self_dual",
            Structure::Circulant => "circulant",
            Structure::Negacirculant => "negacirculant",
            Structure::Both => "both",
        }
    }
}

/// A double Toeplitz code `<(I | A)>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DTCode {
    gen: ToeplitzGen,
    code: SystematicCode,
}

impl DTCode {
    pub fn new(gen: ToeplitzGen) -> Self {
        let code = SystematicCode::new(gen.matrix());
        DTCode { gen, code }
    }

    pub fn gen(&self) -> &ToeplitzGen {
        &self.gen
    }

    pub fn field(&self) -> FieldSpec {
        self.gen.field()
    }

    /// Block size `n` (also the dimension).
    pub fn n(&self) -> usize {
        self.gen.n()
    }

    /// Length `2n`.
    pub fn length(&self) -> usize {
        2 * self.gen.n()
    }

    /// The Toeplitz block `A`.
    pub fn block(&self) -> &FMatrix {
        self.code.block()
    }

    pub fn systematic(&self) -> &SystematicCode {
        &self.code
    }

    pub fn generator_matrix(&self) -> FMatrix {
        self.code.generator_matrix()
    }

    pub fn parity_check_matrix(&self) -> FMatrix {
        self.code.parity_check_matrix()
    }

    pub fn encode(&self, m: &FVector) -> Result<FVector> {
        self.code.encode(m)
    }

    pub fn min_distance(&self, mode: DistanceMode, budget: u128) -> Result<MinDistance> {
        self.code.min_distance(mode, budget)
    }

    pub fn weight_distribution(&self, budget: u128) -> Result<WeightDistribution> {
        self.code.weight_distribution(budget)
    }

    pub fn dual_weight_distribution(&self, budget: u128) -> Result<WeightDistribution> {
        self.code.dual_weight_distribution(budget)
    }

    pub fn is_fsd(&self, budget: u128) -> Result<bool> {
        self.code.is_fsd(budget)
    }

    /// `A A^T = -I`, equivalently `G G^T = 0`.
    pub fn is_self_dual(&self) -> bool {
        let a = self.block();
        let prod = a.mul(&a.transpose()).expect("square block");
        prod == FMatrix::identity(self.field(), self.n()).negate()
    }

    /// The reversal permutation `Q` together with the check `A Q = Q A^T`.
    pub fn isoduality_witness(&self) -> (FMatrix, bool) {
        let a = self.block();
        let q = reversal_permutation(self.field(), self.n());
        let lhs = a.mul(&q).expect("square");
        let rhs = q.mul(&a.transpose()).expect("square");
        (q, lhs == rhs)
    }

    /// Which of circulant/negacirculant a self-dual code is.
    ///
    /// A self-dual code that is neither is reported as [`Error::InvariantViolation`].
    pub fn classify_self_dual_structure(&self) -> Result<Structure> {
        if !self.is_self_dual() {
            return Ok(Structure::NotSelfDual);
        }
        match (self.gen.is_circulant(), self.gen.is_negacirculant()) {
            (true, true) => Ok(Structure::Both),
            (true, false) => Ok(Structure::Circulant),
            (false, true) => Ok(Structure::Negacirculant),
            (false, false) => Err(Error::InvariantViolation(format!(
                "self-dual DT code is neither circulant nor negacirculant: {}",
                self.gen
            ))),
        }
    }

    /// Every codeword has even weight. Binary codes only.
    pub fn is_even(&self) -> Result<bool> {
        if self.field().q() != 2 {
            return Err(Error::NotBinary(self.field().q()));
        }
        // Parity is linear, so checking the rows of G is enough; row i has weight 1 + wt(A_i).
        let a = self.block();
        Ok((0..self.n()).all(|i| a.row(i).iter().filter(|x| !x.is_zero()).count() % 2 == 1))
    }

    /// Runs the full per-code analysis. The weight distribution and formal
    /// self-duality are left out (`None`) when `q^n` exceeds `budget`.
    pub fn analyze(&self, mode: DistanceMode, budget: u128) -> Result<AnalysisReport> {
        let dist = self.min_distance(mode, budget)?;
        let (wd, fsd) = match self.weight_distribution(budget) {
            Ok(wd) => {
                let dual = self.dual_weight_distribution(budget)?;
                let fsd = wd == dual;
                (Some(wd.counts), Some(fsd))
            }
            Err(Error::BudgetExceeded { .. }) => (None, None),
            Err(e) => return Err(e),
        };
        let even = match self.is_even() {
            Ok(e) => Some(e),
            Err(Error::NotBinary(_)) => None,
            Err(e) => return Err(e),
        };
        Ok(AnalysisReport {
            q: self.field().q(),
            n: self.n(),
            length: self.length(),
            k: self.n(),
            gen: self.gen.clone(),
            d: dist.d,
            d_exact: dist.exact,
            weight_distribution: wd,
            fsd,
            self_dual: self.is_self_dual(),
            structure: self.classify_self_dual_structure()?,
            even,
        })
    }
}

/// The machine-readable per-code analysis. Field names and order are stable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub q: u32,
    pub n: usize,
    #[serde(rename = "N")]
    pub length: usize,
    pub k: usize,
    pub gen: ToeplitzGen,
    pub d: usize,
    pub d_exact: bool,
    pub weight_distribution: Option<Vec<u64>>,
    pub fsd: Option<bool>,
    pub self_dual: bool,
    pub structure: Structure,
    pub even: Option<bool>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(q: u32) -> FieldSpec {
        FieldSpec::new(q).unwrap()
    }

    fn code(q: u32, t: u32, a: &[u32], b: &[u32]) -> DTCode {
        DTCode::new(ToeplitzGen::from_values(f(q), t, a, b).unwrap())
    }

    fn example1() -> DTCode {
        code(4, 2, &[1], &[1])
    }

    /// Naive oracle: every message, encoded through plain matrix arithmetic.
    fn naive_distribution(c: &SystematicCode) -> Vec<u64> {
        naive_rowspace(&c.generator_matrix())
    }

    fn naive_rowspace(g: &FMatrix) -> Vec<u64> {
        let field = g.field();
        let k = g.rows();
        let q = field.q();
        let mut counts = vec![0u64; g.cols() + 1];
        for idx in 0..q.pow(k as u32) {
            let mut x = idx;
            let m: Vec<u32> = (0..k)
                .map(|_| {
                    let d = x % q;
                    x /= q;
                    d
                })
                .collect();
            let m = FVector::from_values(field, &m).unwrap();
            counts[m.mul_matrix(g).unwrap().weight()] += 1;
        }
        counts
    }

    #[test]
    fn matrices_are_dual() {
        let c = code(5, 3, &[1, 0, 4], &[2, 2, 0]);
        let g = c.generator_matrix();
        let h = c.parity_check_matrix();
        assert_eq!(g.rows(), 4);
        assert_eq!(g.cols(), 8);
        let prod = g.mul(&h.transpose()).unwrap();
        assert_eq!(prod, FMatrix::zeros(f(5), 4, 4));
    }

    #[test]
    fn encode_examples() {
        let c = example1();
        let m = FVector::from_values(f(4), &[1, 0]).unwrap();
        assert_eq!(c.encode(&m).unwrap().to_text(), "1,0,w,1");
        assert!(c.encode(&FVector::zeros(f(4), 2)).unwrap().is_zero());
        let ident = code(2, 1, &[0], &[0]);
        let m = FVector::from_values(f(2), &[1, 1]).unwrap();
        assert_eq!(ident.encode(&m).unwrap().to_text(), "1,1,1,1");
        assert!(matches!(
            c.encode(&FVector::zeros(f(4), 3)),
            Err(Error::LengthMismatch {
                expected: 2,
                got: 3
            })
        ));
    }

    #[test]
    fn min_distance_examples() {
        let d = example1()
            .min_distance(DistanceMode::Exact, DEFAULT_BUDGET)
            .unwrap();
        assert_eq!(d.d, 3);
        assert!(d.exact);
        assert_eq!(example1().encode(&d.witness).unwrap().weight(), 3);

        for q in [2, 3, 4, 5, 7] {
            for n in 1..5 {
                let ident = code(q, 1, &vec![0; n - 1], &vec![0; n - 1]);
                let d = ident
                    .min_distance(DistanceMode::Exact, DEFAULT_BUDGET)
                    .unwrap();
                assert_eq!(d.d, 2);
                // lexicographically smallest nonzero message is (0,..,0,1)
                let mut expect = vec![0; n];
                expect[n - 1] = 1;
                assert_eq!(d.witness, FVector::from_values(f(q), &expect).unwrap());
            }
        }
    }

    #[test]
    fn binary_n4_against_naive() {
        let c = code(2, 1, &[1, 0, 1], &[0, 1, 1]);
        let naive = naive_distribution(c.systematic());
        let oracle_d = naive.iter().skip(1).position(|&x| x > 0).unwrap() + 1;
        // frozen from the naive enumeration of all 16 messages (rows 1 and 4 of A coincide)
        assert_eq!(oracle_d, 2);
        assert_eq!(naive, [1, 0, 1, 3, 5, 4, 1, 1, 0]);
        assert_eq!(
            c.min_distance(DistanceMode::Exact, DEFAULT_BUDGET)
                .unwrap()
                .d,
            oracle_d
        );
        assert_eq!(c.weight_distribution(DEFAULT_BUDGET).unwrap().counts, naive);
    }

    #[test]
    fn weight_distribution_examples() {
        let ident = code(2, 1, &[0], &[0]);
        assert_eq!(
            ident.weight_distribution(DEFAULT_BUDGET).unwrap().counts,
            [1, 0, 2, 0, 1]
        );
        assert_eq!(
            example1()
                .weight_distribution(DEFAULT_BUDGET)
                .unwrap()
                .counts,
            [1, 0, 0, 12, 3]
        );
        let err = example1().weight_distribution(15).unwrap_err();
        assert!(matches!(
            err,
            Error::BudgetExceeded {
                needed: 16,
                budget: 15,
                ..
            }
        ));
    }

    #[test]
    fn macwilliams_examples() {
        let wd = WeightDistribution::new(2, vec![1, 0, 2, 0, 1]).unwrap();
        assert_eq!(wd.macwilliams_dual(2).unwrap().counts, [1, 0, 2, 0, 1]);
        let full = WeightDistribution::new(2, vec![1, 2, 1]).unwrap();
        assert_eq!(full.macwilliams_dual(2).unwrap().counts, [1, 0, 0]);
        let ex1 = example1().weight_distribution(DEFAULT_BUDGET).unwrap();
        let direct_dual = naive_rowspace(&example1().parity_check_matrix());
        assert_eq!(direct_dual, [1, 0, 0, 12, 3]);
        assert_eq!(ex1.macwilliams_dual(2).unwrap().counts, direct_dual);

        let bad = WeightDistribution::new(2, vec![1, 0, 2, 0, 2]).unwrap();
        assert!(matches!(
            bad.macwilliams_dual(2),
            Err(Error::InconsistentDistribution(_))
        ));
        let bad = WeightDistribution::new(2, vec![0, 1, 2, 1]).unwrap();
        assert!(matches!(
            bad.macwilliams_dual(2),
            Err(Error::InconsistentDistribution(_))
        ));
    }

    #[test]
    fn fsd_examples() {
        for q in [2u32] {
            for n in 1..=4usize {
                let total = q.pow(2 * n as u32 - 1);
                for idx in 0..total {
                    let mut x = idx;
                    let flat: Vec<FieldElement> = (0..2 * n - 1)
                        .map(|_| {
                            let d = x % q;
                            x /= q;
                            FieldElement(d as u8)
                        })
                        .collect();
                    let c = DTCode::new(ToeplitzGen::from_flat(f(q), &flat).unwrap());
                    assert!(c.is_fsd(DEFAULT_BUDGET).unwrap(), "{}", c.gen());
                }
            }
        }
        assert!(example1().is_fsd(DEFAULT_BUDGET).unwrap());

        // Control (I | B) with B = [[1,1],[0,1]], decided by enumerating both sides.
        let b = FMatrix::from_rows(f(2), &[vec![1, 1], vec![0, 1]]).unwrap();
        let ctrl = SystematicCode::new(b.clone());
        let lhs = naive_distribution(&ctrl);
        let rhs = naive_distribution(&SystematicCode::new(b.transpose().negate()));
        assert_eq!(lhs, [1, 0, 1, 2, 0]);
        assert_eq!(rhs, [1, 0, 1, 2, 0]);
        assert!(ctrl.is_fsd(DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn self_duality_examples() {
        let scalar = code(5, 2, &[0, 0], &[0, 0]);
        assert!(scalar.is_self_dual());
        assert_eq!(
            scalar.classify_self_dual_structure().unwrap(),
            Structure::Both
        );
        let ident = code(2, 1, &[0], &[0]);
        assert!(ident.is_self_dual());
        assert_eq!(
            ident.classify_self_dual_structure().unwrap(),
            Structure::Both
        );
        // [[w,1],[1,w]] [[w,1],[1,w]]^T = [[w^2+1, 0],[0, w^2+1]] = w I
        assert!(!example1().is_self_dual());
        assert_eq!(
            example1().classify_self_dual_structure().unwrap(),
            Structure::NotSelfDual
        );
        // 2 * cyclic shift over F_5: b_1 = a_1 but -a_1 = 3 != 2
        let shift = code(5, 0, &[2], &[2]);
        assert!(shift.is_self_dual());
        assert_eq!(
            shift.classify_self_dual_structure().unwrap(),
            Structure::Circulant
        );
    }

    #[test]
    fn isoduality_examples() {
        let (q, ok) = example1().isoduality_witness();
        assert!(ok);
        assert_eq!(
            q,
            FMatrix::from_rows(f(4), &[vec![0, 1], vec![1, 0]]).unwrap()
        );
        let (q, ok) = code(3, 2, &[], &[]).isoduality_witness();
        assert!(ok);
        assert_eq!(q, FMatrix::identity(f(3), 1));
        let (_, ok) = code(7, 3, &[1, 2, 3, 4, 5], &[6, 0, 1, 5, 2]).isoduality_witness();
        assert!(ok);
    }

    #[test]
    fn evenness_examples() {
        assert!(code(2, 1, &[1, 1], &[1, 1]).is_even().unwrap());
        assert!(!code(2, 1, &[0], &[1]).is_even().unwrap());
        assert!(matches!(
            code(3, 1, &[0], &[1]).is_even(),
            Err(Error::NotBinary(3))
        ));
    }

    #[test]
    fn sampled_distance_is_reproducible_upper_bound() {
        let c = code(3, 1, &[2, 0, 1, 1], &[0, 1, 2, 2]);
        let exact = c.min_distance(DistanceMode::Exact, DEFAULT_BUDGET).unwrap();
        let mode = DistanceMode::Sampled {
            trials: 50,
            seed: 9,
        };
        let s1 = c.min_distance(mode, DEFAULT_BUDGET).unwrap();
        let s2 = c.min_distance(mode, DEFAULT_BUDGET).unwrap();
        assert_eq!(s1, s2);
        assert!(!s1.exact);
        assert!(s1.d >= exact.d);
        assert_eq!(c.encode(&s1.witness).unwrap().weight(), s1.d);
        assert!(c
            .min_distance(DistanceMode::Sampled { trials: 0, seed: 0 }, DEFAULT_BUDGET)
            .is_err());
    }

    #[test]
    fn analysis_report_shape() {
        let report = example1()
            .analyze(DistanceMode::Exact, DEFAULT_BUDGET)
            .unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(
            json,
            r#"{"q":4,"n":2,"N":4,"k":2,"gen":"q=4 n=2 t=w a=1 b=1","d":3,"d_exact":true,"weight_distribution":[1,0,0,12,3],"fsd":true,"self_dual":false,"structure":"not_self_dual","even":null}"#
        );
        let back: AnalysisReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);

        let small = example1().analyze(DistanceMode::Exact, 10);
        assert!(matches!(small, Err(Error::BudgetExceeded { .. })));
    }
}

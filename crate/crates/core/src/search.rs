//! Exhaustive and seeded random search over Toeplitz generators.
//!
//! Generators are identified with their flat tuple `(t, a_1..a_{n-1},
//! b_1..b_{n-1})` read as a base-`q` number with `t` most significant, so the
//! numeric order of the index is the lexicographic order of the tuple. Every
//! search walks indices in increasing order, in fixed-size chunks; the running
//! state after each chunk is what a checkpoint stores.
//!
//! Inside the loop a candidate is abandoned as soon as it shows a codeword
//! lighter than the best distance seen so far. A candidate whose distance is
//! at least the final optimum is therefore always evaluated exactly, which
//! makes the optimum, the witness list and the witness count independent of
//! chunking, sharding and thread count.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{FVector, ToeplitzGen};
use crate::enumerate::AnyRows;
use crate::error::{Error, Result};
use crate::galois::{FieldElement, FieldSpec};
use crate::stream::SeedStream;

/// At most this many witnesses are kept per report (the lexicographically smallest).
pub const WITNESS_CAP: usize = 16;

/// Default exhaustive budget, in estimated candidate-messages.
///
/// With `scalar_and_swap` this admits `q = 2` up to length 20, `q = 3` up
/// to 12, `q = 4` up to 10 and `q = 5, 7` up to 8.
pub const EXHAUSTIVE_BUDGET: u128 = 600_000_000;

/// Indices per checkpointed chunk.
pub const DEFAULT_CHUNK: u64 = 1 << 16;

/// Brute-force cap for [`count_containing`].
pub const CONTAINMENT_BUDGET: u128 = 1 << 24;

/// CSV header matching [`SearchReport::csv_row`].
pub const CSV_HEADER: &str = "q,2n,best_d,strategy,codes_examined,seed";

/// Symmetry reduction applied to the generator space.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reduction {
    /// Every tuple.
    #[default]
    None,
    /// One tuple per orbit of `A -> cA`: the first nonzero coordinate is 1.
    ScalarNormalized,
    /// Additionally `a <= b` lexicographically, folding `A -> A^T`.
    ScalarAndSwap,
}

impl Reduction {
    pub fn as_str(self) -> &'static str {
        match self {
            Reduction::None => "none",
            Reduction::ScalarNormalized => "scalar_normalized",
            Reduction::ScalarAndSwap => "scalar_and_swap",
        }
    }
}

impl fmt::Display for Reduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Reduction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Reduction::None),
            "scalar_normalized" | "scalar-normalized" => Ok(Reduction::ScalarNormalized),
            "scalar_and_swap" | "scalar-and-swap" => Ok(Reduction::ScalarAndSwap),
            _ => Err(Error::Parse(format!("unknown reduction {s:?}"))),
        }
    }
}

/// Member `index` of a partition into `total` residue classes of the index space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Shard {
    pub index: u64,
    pub total: u64,
}

impl Shard {
    pub const WHOLE: Shard = Shard { index: 0, total: 1 };

    pub fn new(index: u64, total: u64) -> Result<Self> {
        if total == 0 || index >= total {
            return Err(Error::InvalidArgument(format!("bad shard {index}/{total}")));
        }
        Ok(Shard { index, total })
    }

    #[inline]
    pub fn contains(&self, idx: u64) -> bool {
        idx % self.total == self.index
    }
}

impl Default for Shard {
    fn default() -> Self {
        Shard::WHOLE
    }
}

impl fmt::Display for Shard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.index, self.total)
    }
}

impl FromStr for Shard {
    type Err = Error;

    /// `index/total`, e.g. `2/8`.
    fn from_str(s: &str) -> Result<Self> {
        let (i, t) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("shard must look like i/total, got {s:?}")))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad shard {s:?}")))
        };
        Shard::new(parse(i)?, parse(t)?)
    }
}

fn scalar_normalized(flat: &[u8]) -> bool {
    flat.iter().find(|&&x| x != 0).is_none_or(|&x| x == 1)
}

fn swap_ordered(flat: &[u8]) -> bool {
    let n = flat.len().div_ceil(2);
    flat[1..n] <= flat[n..]
}

/// The set of generators a search visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchSpace {
    field: FieldSpec,
    n: usize,
    reduction: Reduction,
    shard: Shard,
}

impl SearchSpace {
    pub fn new(field: FieldSpec, n: usize, reduction: Reduction, shard: Shard) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("block size must be positive".into()));
        }
        Ok(SearchSpace {
            field,
            n,
            reduction,
            shard,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn reduction(&self) -> Reduction {
        self.reduction
    }

    pub fn shard(&self) -> Shard {
        self.shard
    }

    /// `q^(2n-1)`, the number of indices, when it fits in 64 bits.
    pub fn index_count(&self) -> Result<u64> {
        (self.field.q() as u64)
            .checked_pow(2 * self.n as u32 - 1)
            .ok_or(Error::Overflow("generator index space"))
    }

    /// Whether a flat tuple survives the reduction.
    pub fn admits(&self, flat: &[u8]) -> bool {
        match self.reduction {
            Reduction::None => true,
            Reduction::ScalarNormalized => scalar_normalized(flat),
            Reduction::ScalarAndSwap => scalar_normalized(flat) && swap_ordered(flat),
        }
    }

    /// Writes the tuple with index `idx` into `out` (length `2n - 1`).
    pub fn decode(&self, mut idx: u64, out: &mut [u8]) {
        let q = self.field.q() as u64;
        for slot in out.iter_mut().rev() {
            *slot = (idx % q) as u8;
            idx /= q;
        }
    }

    /// Index of a flat tuple.
    pub fn encode(&self, flat: &[u8]) -> u64 {
        let q = self.field.q() as u64;
        flat.iter().fold(0, |acc, &x| acc * q + x as u64)
    }

    /// Estimated number of admitted tuples (exact for `none`, before sharding).
    pub fn estimated_size(&self) -> u128 {
        let q = self.field.q() as u128;
        let full = q.saturating_pow(2 * self.n as u32 - 1);
        let normalized = (full - 1) / (q - 1) + 1;
        match self.reduction {
            Reduction::None => full,
            Reduction::ScalarNormalized => normalized,
            Reduction::ScalarAndSwap => normalized.div_ceil(2),
        }
    }

    /// Budget estimate: admitted tuples times `q^n` messages each, spread over the shards.
    pub fn estimated_cost(&self) -> u128 {
        let msgs = (self.field.q() as u128).saturating_pow(self.n as u32);
        self.estimated_size().saturating_mul(msgs) / self.shard.total as u128
    }

    /// All admitted generators of this shard in lexicographic order.
    pub fn iter(&self) -> Result<impl Iterator<Item = ToeplitzGen> + '_> {
        let count = self.index_count()?;
        let mut flat = vec![0u8; 2 * self.n - 1];
        Ok((0..count).filter_map(move |idx| {
            self.decode(idx, &mut flat);
            (self.shard.contains(idx) && self.admits(&flat)).then(|| flat_to_gen(self.field, &flat))
        }))
    }

    /// Exact number of admitted generators of this shard, by walking the space.
    pub fn len(&self) -> Result<u64> {
        Ok(self.iter()?.count() as u64)
    }

    pub fn is_empty(&self) -> Result<bool> {
        Ok(self.len()? == 0)
    }
}

fn flat_to_gen(field: FieldSpec, flat: &[u8]) -> ToeplitzGen {
    let els: Vec<FieldElement> = flat.iter().map(|&x| FieldElement(x)).collect();
    ToeplitzGen::from_flat(field, &els).expect("valid flat tuple")
}

fn gen_to_flat(gen: &ToeplitzGen) -> Vec<u8> {
    gen.flat().iter().map(|x| x.0).collect()
}

/// Odometer step in base `q`; returns false on wrap-around.
#[inline]
fn increment(flat: &mut [u8], q: u8) -> bool {
    for slot in flat.iter_mut().rev() {
        *slot += 1;
        if *slot < q {
            return true;
        }
        *slot = 0;
    }
    false
}

/// Running result of a search.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Tally {
    best_d: usize,
    witness_count: u64,
    /// Sorted, deduplicated, at most [`WITNESS_CAP`].
    witnesses: Vec<Vec<u8>>,
    codes_examined: u64,
}

impl Tally {
    fn insert_witness(&mut self, flat: &[u8]) {
        match self.witnesses.binary_search_by(|w| w.as_slice().cmp(flat)) {
            Ok(_) => {}
            Err(pos) if pos < WITNESS_CAP => {
                self.witnesses.insert(pos, flat.to_vec());
                self.witnesses.truncate(WITNESS_CAP);
            }
            Err(_) => {}
        }
    }

    /// Records a candidate whose exact distance is `d`.
    fn record(&mut self, flat: &[u8], d: usize) {
        if d > self.best_d {
            self.best_d = d;
            self.witness_count = 0;
            self.witnesses.clear();
        }
        if d == self.best_d {
            self.witness_count += 1;
            self.insert_witness(flat);
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        let examined = self.codes_examined + other.codes_examined;
        if other.best_d > self.best_d {
            self = other;
        } else if other.best_d == self.best_d {
            self.witness_count += other.witness_count;
            for w in &other.witnesses {
                self.insert_witness(w);
            }
        }
        self.codes_examined = examined;
        self
    }
}

/// How the search chose its candidates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Strategy {
    Exhaustive { reduction: Reduction },
    Random { trials: u64, seed: u64 },
}

impl Strategy {
    pub fn name(&self) -> &'static str {
        match self {
            Strategy::Exhaustive { .. } => "exhaustive",
            Strategy::Random { .. } => "random",
        }
    }
}

/// Resumable position of a search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cursor {
    /// Next index (exhaustive) or trial (random) to examine.
    pub position: u64,
    /// One past the last index or trial.
    pub end: u64,
    pub complete: bool,
}

/// Outcome of a search. Serialized field order is fixed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub q: u32,
    pub n: usize,
    pub length: usize,
    pub strategy: Strategy,
    pub shard: Shard,
    /// Best exact minimum distance among examined codes; 0 if none was examined.
    pub best_d: usize,
    /// Examined codes (trials, for random search) reaching `best_d`.
    pub witness_count: u64,
    /// Lexicographically smallest distinct generators reaching `best_d`.
    pub witnesses: Vec<ToeplitzGen>,
    pub codes_examined: u64,
    pub checkpoint: Cursor,
    /// Wall-clock seconds. Kept out of report files so reruns stay byte-identical.
    #[serde(skip)]
    pub elapsed: f64,
}

impl SearchReport {
    /// Summary row `q,2n,best_d,strategy,codes_examined,seed` (seed empty for exhaustive runs).
    pub fn csv_row(&self) -> String {
        let seed = match self.strategy {
            Strategy::Random { seed, .. } => seed.to_string(),
            Strategy::Exhaustive { .. } => String::new(),
        };
        format!(
            "{},{},{},{},{},{}",
            self.q,
            self.length,
            self.best_d,
            self.strategy.name(),
            self.codes_examined,
            seed
        )
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// On-disk state of an interrupted search.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub q: u32,
    pub n: usize,
    pub strategy: Strategy,
    pub shard: Shard,
    pub cursor: u64,
    pub best_d: usize,
    pub witness_count: u64,
    pub witnesses: Vec<ToeplitzGen>,
    pub codes_examined: u64,
}

impl Checkpoint {
    pub fn load(path: &Path) -> Result<Self> {
        Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
    }

    /// Writes through a temporary file so an interrupted write never leaves a torn checkpoint.
    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, serde_json::to_string_pretty(self)? + "\n")?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    fn tally(&self) -> Tally {
        Tally {
            best_d: self.best_d,
            witness_count: self.witness_count,
            witnesses: self.witnesses.iter().map(gen_to_flat).collect(),
            codes_examined: self.codes_examined,
        }
    }
}

/// Knobs shared by both search drivers.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Worker threads; results do not depend on it.
    pub jobs: usize,
    pub chunk: u64,
    /// Exhaustive budget in estimated candidate-messages.
    pub budget: u128,
    /// Resume from and save progress to this file.
    pub checkpoint: Option<PathBuf>,
    /// Stop (with a checkpoint) after this many chunks in this run.
    pub halt_after_chunks: Option<u64>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            jobs: 1,
            chunk: DEFAULT_CHUNK,
            budget: EXHAUSTIVE_BUDGET,
            checkpoint: None,
            halt_after_chunks: None,
        }
    }
}

/// Splits `[lo, hi)` into `parts` contiguous pieces.
fn split_range(lo: u64, hi: u64, parts: u64) -> Vec<(u64, u64)> {
    let len = hi - lo;
    let parts = parts.clamp(1, len.max(1));
    (0..parts)
        .map(|i| (lo + len * i / parts, lo + len * (i + 1) / parts))
        .filter(|(a, b)| a < b)
        .collect()
}

fn exhaustive_range(space: &SearchSpace, lo: u64, hi: u64, cutoff: usize) -> Tally {
    let mut tally = Tally::default();
    let mut kernel = AnyRows::for_toeplitz(space.field, space.n);
    let mut flat = vec![0u8; 2 * space.n - 1];
    let q = space.field.q() as u8;
    space.decode(lo, &mut flat);
    for idx in lo..hi {
        if space.shard.contains(idx) && space.admits(&flat) {
            tally.codes_examined += 1;
            kernel.load_toeplitz(&flat);
            if let Some(d) = kernel.min_weight_cutoff(cutoff.max(tally.best_d)) {
                tally.record(&flat, d);
            }
        }
        increment(&mut flat, q);
    }
    tally
}

/// Draws the flat tuple of random trial `trial`.
pub fn random_tuple(field: FieldSpec, n: usize, stream: &SeedStream, trial: u64) -> Vec<u8> {
    let mut lane = stream.lane(trial);
    (0..2 * n - 1)
        .map(|_| lane.below(field.q() as u64) as u8)
        .collect()
}

/// The generator sampled by random trial `trial`.
pub fn random_generator(field: FieldSpec, n: usize, seed: u64, trial: u64) -> ToeplitzGen {
    flat_to_gen(
        field,
        &random_tuple(field, n, &SeedStream::new(seed), trial),
    )
}

fn random_range(
    field: FieldSpec,
    n: usize,
    seed: u64,
    shard: Shard,
    lo: u64,
    hi: u64,
    cutoff: usize,
) -> Tally {
    let stream = SeedStream::new(seed);
    let mut tally = Tally::default();
    let mut kernel = AnyRows::for_toeplitz(field, n);
    for trial in lo..hi {
        if !shard.contains(trial) {
            continue;
        }
        let flat = random_tuple(field, n, &stream, trial);
        tally.codes_examined += 1;
        kernel.load_toeplitz(&flat);
        if let Some(d) = kernel.min_weight_cutoff(cutoff.max(tally.best_d)) {
            tally.record(&flat, d);
        }
    }
    tally
}

struct Driver<'a> {
    field: FieldSpec,
    n: usize,
    strategy: Strategy,
    shard: Shard,
    end: u64,
    opts: &'a SearchOptions,
}

impl Driver<'_> {
    fn run<F>(&self, eval: F) -> Result<SearchReport>
    where
        F: Fn(u64, u64, usize) -> Tally + Sync,
    {
        let start = Instant::now();
        let (mut cursor, mut tally) = match &self.opts.checkpoint {
            Some(path) if path.exists() => {
                let cp = Checkpoint::load(path)?;
                self.check_matches(&cp)?;
                (cp.cursor, cp.tally())
            }
            _ => (0, Tally::default()),
        };
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.opts.jobs.max(1))
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
        let chunk = self.opts.chunk.max(1);
        let mut chunks_done = 0u64;
        while cursor < self.end {
            if self
                .opts
                .halt_after_chunks
                .is_some_and(|h| chunks_done >= h)
            {
                break;
            }
            let hi = cursor.saturating_add(chunk).min(self.end);
            let cutoff = tally.best_d;
            let pieces = split_range(cursor, hi, 4 * self.opts.jobs.max(1) as u64);
            let parts: Vec<Tally> = pool.install(|| {
                pieces
                    .par_iter()
                    .map(|&(a, b)| eval(a, b, cutoff))
                    .collect()
            });
            tally = parts.into_iter().fold(tally, Tally::merge);
            cursor = hi;
            chunks_done += 1;
            if let Some(path) = &self.opts.checkpoint {
                self.checkpoint(cursor, &tally).save(path)?;
            }
        }
        Ok(SearchReport {
            q: self.field.q(),
            n: self.n,
            length: 2 * self.n,
            strategy: self.strategy,
            shard: self.shard,
            best_d: tally.best_d,
            witness_count: tally.witness_count,
            witnesses: tally
                .witnesses
                .iter()
                .map(|w| flat_to_gen(self.field, w))
                .collect(),
            codes_examined: tally.codes_examined,
            checkpoint: Cursor {
                position: cursor,
                end: self.end,
                complete: cursor >= self.end,
            },
            elapsed: start.elapsed().as_secs_f64(),
        })
    }

    fn checkpoint(&self, cursor: u64, tally: &Tally) -> Checkpoint {
        Checkpoint {
            q: self.field.q(),
            n: self.n,
            strategy: self.strategy,
            shard: self.shard,
            cursor,
            best_d: tally.best_d,
            witness_count: tally.witness_count,
            witnesses: tally
                .witnesses
                .iter()
                .map(|w| flat_to_gen(self.field, w))
                .collect(),
            codes_examined: tally.codes_examined,
        }
    }

    fn check_matches(&self, cp: &Checkpoint) -> Result<()> {
        let ours = (self.field.q(), self.n, self.strategy, self.shard);
        let theirs = (cp.q, cp.n, cp.strategy, cp.shard);
        if ours != theirs {
            return Err(Error::CheckpointMismatch(format!(
                "expected {ours:?}, found {theirs:?}"
            )));
        }
        if cp.cursor > self.end {
            return Err(Error::CheckpointMismatch(format!(
                "cursor {} beyond end {}",
                cp.cursor, self.end
            )));
        }
        Ok(())
    }
}

/// Exhaustive search of one space with explicit options.
pub fn run_exhaustive(space: &SearchSpace, opts: &SearchOptions) -> Result<SearchReport> {
    let end = space.index_count()?;
    let cost = space.estimated_cost();
    if cost > opts.budget {
        return Err(Error::BudgetExceeded {
            needed: cost,
            budget: opts.budget,
            partial_bound: None,
        });
    }
    let driver = Driver {
        field: space.field,
        n: space.n,
        strategy: Strategy::Exhaustive {
            reduction: space.reduction,
        },
        shard: space.shard,
        end,
        opts,
    };
    driver.run(|lo, hi, cutoff| exhaustive_range(space, lo, hi, cutoff))
}

/// Exact optimum over all DT codes of length `2n` over `field`, single-threaded.
pub fn exhaustive_search(
    field: FieldSpec,
    n: usize,
    reduction: Reduction,
    budget: u128,
) -> Result<SearchReport> {
    let space = SearchSpace::new(field, n, reduction, Shard::WHOLE)?;
    run_exhaustive(
        &space,
        &SearchOptions {
            budget,
            ..SearchOptions::default()
        },
    )
}

/// Seeded random search with explicit options.
pub fn run_random(
    field: FieldSpec,
    n: usize,
    trials: u64,
    seed: u64,
    shard: Shard,
    opts: &SearchOptions,
) -> Result<SearchReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("block size must be positive".into()));
    }
    if trials == 0 {
        return Err(Error::InvalidArgument(
            "random search needs at least one trial".into(),
        ));
    }
    let driver = Driver {
        field,
        n,
        strategy: Strategy::Random { trials, seed },
        shard,
        end: trials,
        opts,
    };
    driver.run(|lo, hi, cutoff| random_range(field, n, seed, shard, lo, hi, cutoff))
}

/// Lower bound on the optimum from `trials` uniformly sampled generators.
pub fn random_search(field: FieldSpec, n: usize, trials: u64, seed: u64) -> Result<SearchReport> {
    run_random(
        field,
        n,
        trials,
        seed,
        Shard::WHOLE,
        &SearchOptions::default(),
    )
}

/// Combines the reports of all shards of one search into the unsharded report.
pub fn merge_reports(reports: &[SearchReport]) -> Result<SearchReport> {
    let first = reports
        .first()
        .ok_or_else(|| Error::InvalidArgument("nothing to merge".into()))?;
    let total = first.shard.total;
    let mut seen = vec![false; total as usize];
    for r in reports {
        if (r.q, r.n, r.strategy, r.shard.total) != (first.q, first.n, first.strategy, total) {
            return Err(Error::InvalidArgument(
                "reports come from different searches".into(),
            ));
        }
        if !r.checkpoint.complete {
            return Err(Error::InvalidArgument(format!(
                "shard {} is incomplete",
                r.shard
            )));
        }
        let slot = &mut seen[r.shard.index as usize];
        if *slot {
            return Err(Error::InvalidArgument(format!(
                "shard {} given twice",
                r.shard
            )));
        }
        *slot = true;
    }
    if let Some(missing) = seen.iter().position(|s| !s) {
        return Err(Error::InvalidArgument(format!(
            "shard {missing}/{total} missing"
        )));
    }
    let tally = reports
        .iter()
        .map(|r| Tally {
            best_d: r.best_d,
            witness_count: r.witness_count,
            witnesses: r.witnesses.iter().map(gen_to_flat).collect(),
            codes_examined: r.codes_examined,
        })
        .fold(Tally::default(), Tally::merge);
    let field = FieldSpec::new(first.q)?;
    Ok(SearchReport {
        shard: Shard::WHOLE,
        best_d: tally.best_d,
        witness_count: tally.witness_count,
        witnesses: tally
            .witnesses
            .iter()
            .map(|w| flat_to_gen(field, w))
            .collect(),
        codes_examined: tally.codes_examined,
        checkpoint: Cursor {
            position: first.checkpoint.end,
            end: first.checkpoint.end,
            complete: true,
        },
        elapsed: reports.iter().map(|r| r.elapsed).sum(),
        ..first.clone()
    })
}

/// Number of generators whose code contains `(u, v)`, i.e. with `u A = v`, by brute force.
pub fn count_containing(field: FieldSpec, n: usize, u: &FVector, v: &FVector) -> Result<u64> {
    for (x, name) in [(u, "u"), (v, "v")] {
        if x.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: x.len(),
            });
        }
        if x.field() != field {
            return Err(Error::FieldMismatch(field.q(), x.field().q()));
        }
        let _ = name;
    }
    if u.is_zero() {
        return Err(Error::InvalidArgument("u must be nonzero".into()));
    }
    let space = SearchSpace::new(field, n, Reduction::None, Shard::WHOLE)?;
    let total = space.index_count()?;
    if total as u128 > CONTAINMENT_BUDGET {
        return Err(Error::BudgetExceeded {
            needed: total as u128,
            budget: CONTAINMENT_BUDGET,
            partial_bound: None,
        });
    }
    let mut count = 0;
    for gen in space.iter()? {
        if u.mul_matrix(&gen.matrix())? == *v {
            count += 1;
        }
    }
    Ok(count)
}

/// Number of distinct codes (as codeword sets) among all generators, by brute force.
pub fn distinct_code_count(field: FieldSpec, n: usize) -> Result<u64> {
    let space = SearchSpace::new(field, n, Reduction::None, Shard::WHOLE)?;
    let words = (field.q() as u128).pow(n as u32);
    if space.index_count()? as u128 * words > CONTAINMENT_BUDGET {
        return Err(Error::BudgetExceeded {
            needed: space.index_count()? as u128 * words,
            budget: CONTAINMENT_BUDGET,
            partial_bound: None,
        });
    }
    let mut codes = std::collections::BTreeSet::new();
    for gen in space.iter()? {
        let code = crate::code::DTCode::new(gen);
        let g = code.generator_matrix();
        let mut set = std::collections::BTreeSet::new();
        let mut m = vec![0u8; n];
        loop {
            let msg = FVector::new(field, m.iter().map(|&x| FieldElement(x)).collect())?;
            let cw: Vec<u8> = msg.mul_matrix(&g)?.entries().iter().map(|x| x.0).collect();
            set.insert(cw);
            if !increment(&mut m, field.q() as u8) {
                break;
            }
        }
        codes.insert(set);
    }
    Ok(codes.len() as u64)
}

/// Block sizes `n` with `4 <= 2n <= max_len` whose exhaustive search fits the budget.
pub fn feasible_block_sizes(
    field: FieldSpec,
    max_len: usize,
    reduction: Reduction,
    budget: u128,
) -> Vec<usize> {
    (2..=max_len / 2)
        .take_while(|&n| {
            SearchSpace::new(field, n, reduction, Shard::WHOLE)
                .map(|s| s.estimated_cost() <= budget)
                .unwrap_or(false)
        })
        .collect()
}

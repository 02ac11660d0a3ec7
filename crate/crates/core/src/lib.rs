//! Double Toeplitz codes over small finite fields.
//!
//! A double Toeplitz (DT) code of length `2n` over `F_q` is generated by
//! `(I | A)` with `A` an `n x n` Toeplitz matrix. This crate builds such
//! codes, analyzes them (minimum distance, weight distribution, duality,
//! evenness), provides the known algebraic constructions, searches the
//! generator space exhaustively or at random, and evaluates the entropy and
//! counting bounds that govern their asymptotic behaviour.
//!
//! ```
//! use dtcode::{DTCode, DistanceMode, ToeplitzGen};
//!
//! let gen: ToeplitzGen = "q=4 n=2 t=w a=1 b=1".parse().unwrap();
//! let code = DTCode::new(gen);
//! let d = code.min_distance(DistanceMode::Exact, dtcode::code::DEFAULT_BUDGET).unwrap();
//! assert_eq!(d.d, 3);
//! ```

pub mod algebra;
pub mod bounds;
pub mod code;
pub mod constructions;
pub mod error;
pub mod galois;
pub mod search;
pub mod stream;

mod enumerate;

pub use algebra::{reversal_permutation, FMatrix, FVector, ToeplitzGen};
pub use code::{AnalysisReport, DTCode, DistanceMode, MinDistance, Structure, WeightDistribution};
pub use error::{Error, Result};
pub use galois::{ArithOp, FieldElement, FieldSpec};
pub use search::{Reduction, SearchReport, SearchSpace, Shard};

//! André permutations of both kinds, their statistics and bijections, the twin
//! Seidel matrices, Seidel triangle sequences, and exact truncated power series
//! for checking the generating-function identities.

pub mod bijections;
pub mod golden;
pub mod perm;
pub mod report;
pub mod seidel;
pub mod series;
pub mod stats;
pub mod suites;

pub use bijections::{Bijection, Direction, MapError};
pub use perm::{
    complement, enumerate, generate, is_alternating, is_andre, letter_type, parse_permutation,
    reduce, unreduce, x_factorization, Family, Kind, LetterType, Method, Perm, PermError,
    XFactorization, BRUTE_FORCE_CUTOFF,
};
pub use report::{Check, SuiteReport};
pub use seidel::{
    CountMatrix, EntringerTable, MatrixKind, Pair, Scheme, SeidelError, SeidelTriangle, Split,
};
pub use series::{IdentityId, SeriesError, TruncatedSeries};
pub use stats::{evaluate_stat, CanonicalFactorization, Extremum, Stat, StatError};

//! Shared workloads for the criterion benches.

use andre_core::{Family, Perm};

/// Every André I permutation of size `n`, the usual bench input.
pub fn andre1(n: usize) -> Vec<Perm> {
    andre_core::enumerate(Family::Andre1, n)
}

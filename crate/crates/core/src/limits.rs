//! Size caps for the exhaustive algorithms.
//!
//! Everything in this crate materializes its objects, so every enumeration
//! is guarded by one of these limits and fails with
//! [`Error::CapExceeded`](crate::Error::CapExceeded) instead of running away.

use crate::error::{Error, Result};

/// Largest ring handled (element codes are `u32`, tables are `|R|` long).
pub const RING_SIZE: u64 = 1 << 16;
/// Largest ambient space `|R|^n` that is ever enumerated.
pub const AMBIENT_SPACE: u64 = 1 << 20;
/// Work budget for pairwise support validation, `|R|^(2n+1)`.
pub const VALIDATION_WORK: u64 = 1 << 28;
/// Largest code whose submodules are enumerated.
pub const SUBMODULE_CODE: u64 = 4096;
/// Largest explicit lattice.
pub const LATTICE_SIZE: u64 = 4096;
/// Largest `q^n` for subspace lattices.
pub const SUBSPACE_AMBIENT: u64 = 256;

pub(crate) fn check(what: &'static str, size: u128, cap: u64) -> Result<()> {
    if size > cap as u128 {
        Err(Error::CapExceeded {
            what,
            size,
            cap: cap as u128,
        })
    } else {
        Ok(())
    }
}

/// `base^exp` saturating at `u128::MAX`.
pub(crate) fn pow_sat(base: u64, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}

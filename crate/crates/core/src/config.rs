//! Enumeration guards and execution strategy.
//!
//! Every exhaustive sweep in the crate checks one of these bounds before it
//! starts, so a caller that hands in a large graph gets an error instead of a
//! sweep that never finishes.

use crate::error::{Error, Result};

/// Enumeration bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Largest `d` for operations that sweep all of `S_d`.
    pub max_d: usize,
    /// Largest `d!` any single sweep may visit.
    pub max_perms: u64,
    /// Largest `n^d` for exhaustive coloring enumeration.
    pub max_colorings: u64,
    /// Largest edge count for the `2^E` orientation sweep.
    pub max_orientation_edges: usize,
    /// Largest `d` for building coloring complexes.
    pub max_complex_d: usize,
    /// Largest `d` for face-ring monomial enumeration.
    pub max_monomial_d: usize,
    /// Largest degree for face-ring monomial enumeration.
    pub max_monomial_n: usize,
    /// Largest combined vertex count of two complexes in an isomorphism search.
    pub max_iso_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_d: 10,
            max_perms: 3_628_800,
            max_colorings: 100_000_000,
            max_orientation_edges: 25,
            max_complex_d: 8,
            max_monomial_d: 8,
            max_monomial_n: 8,
            max_iso_vertices: 128,
        }
    }
}

impl Limits {
    pub(crate) fn check_perms(&self, d: usize) -> Result<()> {
        if d > self.max_d {
            return Err(Error::BoundExceeded {
                what: "vertex count for S_d enumeration",
                limit: self.max_d as u128,
                actual: d as u128,
            });
        }
        let perms = factorial_u128(d);
        if perms > self.max_perms as u128 {
            return Err(Error::BoundExceeded {
                what: "permutation count",
                limit: self.max_perms as u128,
                actual: perms,
            });
        }
        Ok(())
    }

    pub(crate) fn check_colorings(&self, n: u64, d: usize) -> Result<u64> {
        let mut total: u128 = 1;
        for _ in 0..d {
            total = total.saturating_mul(n as u128);
            if total > self.max_colorings as u128 {
                return Err(Error::BoundExceeded {
                    what: "coloring count n^d",
                    limit: self.max_colorings as u128,
                    actual: (n as u128).saturating_pow(d as u32),
                });
            }
        }
        Ok(total as u64)
    }

    pub(crate) fn check_complex(&self, d: usize) -> Result<()> {
        if d < 3 {
            return Err(Error::TooFewVertices(d));
        }
        if d > self.max_complex_d {
            return Err(Error::BoundExceeded {
                what: "vertex count for complex construction",
                limit: self.max_complex_d as u128,
                actual: d as u128,
            });
        }
        Ok(())
    }

    pub(crate) fn check_monomials(&self, d: usize, n: usize) -> Result<()> {
        if d > self.max_monomial_d {
            return Err(Error::BoundExceeded {
                what: "vertex count for monomial enumeration",
                limit: self.max_monomial_d as u128,
                actual: d as u128,
            });
        }
        if n > self.max_monomial_n {
            return Err(Error::BoundExceeded {
                what: "monomial degree",
                limit: self.max_monomial_n as u128,
                actual: n as u128,
            });
        }
        Ok(())
    }
}

pub(crate) fn factorial_u128(d: usize) -> u128 {
    (1..=d as u128).fold(1u128, |acc, k| acc.saturating_mul(k))
}

/// How data-parallel sweeps are executed.
///
/// `Parallel` uses the rayon pool when the `parallel` feature is enabled and
/// silently degrades to `Sequential` otherwise. Results never depend on the
/// choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Bounds plus execution strategy, threaded through the `*_with` entry points.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Config {
    pub limits: Limits,
    pub exec: Execution,
}

impl Config {
    pub fn sequential() -> Self {
        Config {
            limits: Limits::default(),
            exec: Execution::Sequential,
        }
    }
}

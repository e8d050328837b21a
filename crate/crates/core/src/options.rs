//! Knobs shared by the randomized and budgeted routines.

use crate::arith::factor::DEFAULT_MAX_DEGREE;

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Seed for every pseudo-random choice.
    pub seed: u64,
    /// Degree budget for polynomial factorization over Q.
    pub max_degree: usize,
    /// Cross-check radical criteria against full decomposition matrices.
    pub verify: bool,
    /// Random elements tried per module split before giving up.
    pub chop_budget: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: DEFAULT_SEED,
            max_degree: DEFAULT_MAX_DEGREE,
            verify: false,
            chop_budget: 400,
        }
    }
}

impl Options {
    pub fn with_seed(seed: u64) -> Options {
        Options {
            seed,
            ..Options::default()
        }
    }
}

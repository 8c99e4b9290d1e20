//! Gaussian conditional-independence and conditional-invariance testing on
//! sufficient statistics, together with population oracles that answer the
//! same queries from a graph by d-separation.
//!
//! Learners consume the two traits [`CiTest`] and [`InvarianceTest`]; the
//! finite-sample implementations are [`GaussCi`] and [`GaussInvariance`], and
//! the oracle implementations are [`PopulationCi`] and
//! [`PopulationInvariance`].

mod cache;
mod ci;
mod invariance;
mod oracle;
mod suffstat;

pub use cache::{CachedCi, CachedInvariance};
pub use ci::{ci_test, CiOutcome, GaussCi};
pub use invariance::{invariance_test, GaussInvariance, InvarianceOutcome};
pub use oracle::{InvarianceOverride, PopulationCi, PopulationInvariance};
pub use suffstat::{regression_stats, RegressionStats, SuffStat};

/// Errors from statistical routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum StatError {
    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },
    #[error("data contains non-finite entries")]
    NonFinite,
    #[error("conditioning covariance is singular even after ridge")]
    Singular,
    #[error("significance level must lie in (0, 1), got {0}")]
    InvalidAlpha(f64),
    #[error("variable {var} out of range for dimension {dim}")]
    VarOutOfRange { var: usize, dim: usize },
    #[error("invalid variable roles: {0}")]
    BadArguments(String),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}

/// Configuration shared by the Gaussian tests.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestConfig {
    /// Significance level in (0, 1).
    pub alpha: f64,
    /// Relative ridge added to near-singular conditioning blocks, scaled by
    /// the mean diagonal of the block.
    pub ridge: f64,
}

impl TestConfig {
    pub fn new(alpha: f64) -> Result<Self, StatError> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(StatError::InvalidAlpha(alpha));
        }
        Ok(TestConfig { alpha, ridge: 1e-8 })
    }
}

impl Default for TestConfig {
    fn default() -> Self {
        TestConfig {
            alpha: 1e-5,
            ridge: 1e-8,
        }
    }
}

/// A conditional-independence query interface: is `i ⊥ j | c`?
pub trait CiTest {
    fn independent(&self, i: usize, j: usize, c: &[usize]) -> bool;
}

/// A conditional-invariance query interface: does the conditional of `i`
/// given `c` in setting `k` equal its observational counterpart?
pub trait InvarianceTest {
    fn num_settings(&self) -> usize;
    fn invariant(&self, k: usize, i: usize, c: &[usize]) -> bool;
}

impl<T: CiTest + ?Sized> CiTest for &T {
    fn independent(&self, i: usize, j: usize, c: &[usize]) -> bool {
        (**self).independent(i, j, c)
    }
}

impl<T: InvarianceTest + ?Sized> InvarianceTest for &T {
    fn num_settings(&self) -> usize {
        (**self).num_settings()
    }
    fn invariant(&self, k: usize, i: usize, c: &[usize]) -> bool {
        (**self).invariant(k, i, c)
    }
}

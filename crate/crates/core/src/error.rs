use thiserror::Error;

/// Instance shapes the counting theory does not cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnsupportedCase {
    /// p = 2; the convergence region of the p-adic logarithm differs.
    EvenPrime,
    /// p divides k but k is not p itself.
    PDividesK,
    /// k = p with n > 1.
    KEqualsPHigherN,
    /// p | k, so the lifting derivative vanishes mod p.
    SingularLift,
}

impl UnsupportedCase {
    pub fn reason(self) -> &'static str {
        match self {
            UnsupportedCase::EvenPrime => {
                "p = 2 is not covered: the 2-adic logarithm converges on a smaller disk"
            }
            UnsupportedCase::PDividesK => "p | k with k != p is an open problem",
            UnsupportedCase::KEqualsPHigherN => "k = p with n > 1 is an open problem",
            UnsupportedCase::SingularLift => {
                "p | k leaves no unit derivative to lift with; k = p is counted level by level"
            }
        }
    }
}

impl std::fmt::Display for UnsupportedCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.reason())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported case: {0}")]
    Unsupported(UnsupportedCase),

    /// Hensel's hypothesis (unit derivative at the seed) fails.
    #[error("lifting hypothesis violated: {0}")]
    Hypothesis(String),

    /// A computed result failed its own verification. Always a bug.
    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("window of {window} candidates exceeds ceiling {ceiling}")]
    ResourceLimit { window: u128, ceiling: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

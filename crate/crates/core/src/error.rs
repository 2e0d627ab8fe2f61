use thiserror::Error;

use crate::kempe::KempeClassReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-contract input.
    #[error("invalid input: {0}")]
    Input(String),

    /// A search exceeded its configured cap. `reached` is the count at the
    /// moment the search was abandoned.
    #[error("{what} exceeded cap of {cap} (reached {reached})")]
    Resource {
        what: &'static str,
        cap: usize,
        reached: usize,
    },

    /// Kempe-class partitioning ran out of budget; the report holds whatever
    /// was computed and has `cap_hit` set.
    #[error("kempe class enumeration exceeded cap of {cap}")]
    PartialClasses {
        cap: usize,
        partial: Box<KempeClassReport>,
    },

    #[error("certificate rejected: {0}")]
    CertificateRejected(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    /// True for the cap/budget family of errors.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. } | Error::PartialClasses { .. })
    }
}

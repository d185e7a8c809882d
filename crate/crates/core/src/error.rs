use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("resource limit: {what} requires {requested}, cap is {cap}")]
    ResourceLimit {
        what: &'static str,
        requested: u128,
        cap: u128,
    },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn limit(
        what: &'static str,
        requested: impl Into<u128>,
        cap: impl Into<u128>,
    ) -> Self {
        Error::ResourceLimit {
            what,
            requested: requested.into(),
            cap: cap.into(),
        }
    }

    /// Short machine-readable kind, used in CLI error lines.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidParameter(_) => "invalid-parameter",
            Error::ResourceLimit { .. } => "resource-limit",
            Error::Json(_) => "json",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

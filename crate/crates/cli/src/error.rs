use crate::formats::ParseError;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const INVALID_ARGUMENT: i32 = 2;
    pub const PARSE: i32 = 3;
    pub const CAPACITY: i32 = 4;
    pub const VERIFICATION: i32 = 5;
    pub const IO: i32 = 6;
}

#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] betti_cone_core::Error),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("malformed document: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl AppError {
    pub fn exit_code(&self) -> i32 {
        use betti_cone_core::Error as E;
        match self {
            AppError::Parse(_) | AppError::Format(_) => exit::PARSE,
            AppError::InvalidArgument(_) => exit::INVALID_ARGUMENT,
            AppError::Capacity(_) => exit::CAPACITY,
            AppError::Verification(_) => exit::VERIFICATION,
            AppError::Io(_) => exit::IO,
            AppError::Core(e) => match e {
                E::InvalidArgument(_) | E::Undefined(_) => exit::INVALID_ARGUMENT,
                E::Capacity { .. } | E::Overflow(_) => exit::CAPACITY,
                E::Verification(_) => exit::VERIFICATION,
            },
        }
    }
}

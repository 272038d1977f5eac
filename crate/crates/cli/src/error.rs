use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] monideal::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    /// 2 bad input, 3 size cap exceeded, 4 zero or unit ideal, 5 internal bug.
    pub fn exit_code(&self) -> i32 {
        use monideal::Error as E;
        match self {
            CliError::Parse { .. } | CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Core(e) => match e {
                E::TooLarge { .. } | E::TooManyFacets { .. } => 3,
                E::ZeroIdeal | E::UnitIdeal => 4,
                E::NoVariables
                | E::BadLabel(_)
                | E::BadSpec(_)
                | E::BadGraph(_)
                | E::NotPrime(_)
                | E::EmptyGraph => 2,
                _ => 5,
            },
            CliError::Invariant(_) => 5,
        }
    }
}

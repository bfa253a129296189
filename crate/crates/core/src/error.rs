use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("cannot parse {kind} from {input:?}")]
    Parse { kind: &'static str, input: String },

    #[error("state is not normalized: sum of squared magnitudes is {0}")]
    NotNormalized(String),

    #[error("measurement is indeterminate: {0}")]
    Indeterminate(String),

    #[error("family parameter must be a nonzero rational")]
    ZeroParameter,
}

impl Error {
    pub(crate) fn parse(kind: &'static str, input: &str) -> Self {
        Error::Parse {
            kind,
            input: input.to_owned(),
        }
    }
}

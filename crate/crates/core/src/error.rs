use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("{what} exceeds bound: {value} > {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },
    #[error("malformed weight expression `{0}`")]
    MalformedWeight(String),
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
    #[error("invalid orbit parameters: {0}")]
    InvalidOrbits(String),
    #[error("incompatible input: {0}")]
    Incompatible(String),
    #[error("non-integral multiplicity {0}")]
    NonIntegral(String),
    #[error("routes disagree: involution {involution}, character {character}")]
    RouteMismatch { involution: String, character: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_bound(what: &'static str, value: usize, bound: usize) -> Result<()> {
    if value > bound {
        Err(Error::BoundExceeded { what, value, bound })
    } else {
        Ok(())
    }
}

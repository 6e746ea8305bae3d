use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("route {route} is not defined for n = {n}")]
    RouteUndefined { route: String, n: usize },

    #[error("unknown identity id {0:?}")]
    UnknownIdentity(String),

    #[error("identity {id}: bound for parameter {param} is {got}, below its minimum {min}")]
    BoundsBelowMinimum {
        id: String,
        param: String,
        min: usize,
        got: usize,
    },

    #[error("invalid configuration: {0}")]
    Config(String),
}

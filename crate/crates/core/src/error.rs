use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group element: {0}")]
    InvalidElement(String),
    #[error("{value} is not a unit modulo {modulus}")]
    NotAUnit { value: i64, modulus: u32 },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("group elements have not been materialized")]
    NeedsClosure,
    #[error("not a subgroup of the ambient group")]
    NotASubgroup,
    #[error("group is not transitive")]
    NotTransitive,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid connection set: {0}")]
    InvalidConnectionSet(String),
    #[error("invalid bi-Cayley triple: {0}")]
    InvalidTriple(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("independent routes disagree: {0}")]
    EngineDisagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;

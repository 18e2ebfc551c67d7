// SPDX-License-Identifier: MIT
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid block: {0}")]
    InvalidBlock(String),
    #[error("profile keys differ, cannot merge")]
    KeyMismatch,
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("component mismatch: {0} vs {1}")]
    ComponentMismatch(u32, u32),
    #[error("charge {charge} not allowed on {what}")]
    BadCharge { charge: char, what: String },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("syntax error at column {col}: {msg}")]
    Syntax { col: usize, msg: String },
    #[error("type error: {0}")]
    Type(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;

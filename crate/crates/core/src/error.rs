use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("unknown generator family `{0}`")]
    UnknownFamily(String),
    #[error("tensor arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("leg {0} has mismatched algebra kinds")]
    LegKindMismatch(usize),
    #[error("index {index} exceeds the configured bound {bound}")]
    IndexOutOfRange { index: u32, bound: u32 },
    #[error("element is not invertible: {0}")]
    NotInvertible(String),
    #[error("jet truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("truncation order {order} is too small, need at least {needed}")]
    InsufficientOrder { order: usize, needed: usize },
    #[error("jet does not fix the origin")]
    NotOriginFixing,
    #[error("parameter parity does not match generator {0}")]
    ParityMismatch(String),
}

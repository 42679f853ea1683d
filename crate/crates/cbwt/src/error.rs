use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("position {pos} out of range 1..={max}")]
    Range { pos: usize, max: usize },
    #[error("value {value} exceeds alphabet bound {bound}")]
    Alphabet { value: u32, bound: u32 },
    #[error("occurrence {occurrence} of symbol {symbol} not found")]
    NotFound { symbol: u32, occurrence: usize },
    #[error("{0}")]
    Argument(&'static str),
    #[error("collection of {n} symbols exceeds the oracle limit of {limit}")]
    OracleLimit { n: usize, limit: usize },
    #[error("malformed index file at line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("index is missing anchors or samples for locate")]
    ConstructionOrder,
    #[error("locate walk exceeded {0} steps")]
    WalkLimit(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

use std::fmt;

use thiserror::Error;

/// A falsifying witness for one of the asserted theorems.
///
/// Carries enough context to reproduce the failure by hand: which claim
/// failed, on which group and subgroup, and the computed evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub claim: String,
    pub group: String,
    pub subgroup: Vec<usize>,
    pub details: Vec<(String, String)>,
}

impl Witness {
    pub fn new(claim: impl Into<String>, group: impl Into<String>) -> Self {
        Witness {
            claim: claim.into(),
            group: group.into(),
            subgroup: Vec::new(),
            details: Vec::new(),
        }
    }

    pub fn subgroup(mut self, elements: &[usize]) -> Self {
        self.subgroup = elements.to_vec();
        self
    }

    pub fn detail(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.details.push((key.into(), value.to_string()));
        self
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} failed for {}", self.claim, self.group)?;
        if !self.subgroup.is_empty() {
            write!(f, " (subgroup of order {})", self.subgroup.len())?;
        }
        for (k, v) in &self.details {
            write!(f, "; {k} = {v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("group order {order} exceeds the configured bound {bound}")]
    BoundExceeded { order: usize, bound: usize },
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),
    #[error("expected a nontrivial proper normal subgroup")]
    NotProperNormal,
    #[error("no prime q = 1 mod {exponent} with q > {lower} found below the search limit")]
    NoSuitablePrime { exponent: u64, lower: u64 },
    #[error("eigenspace splitting failed: {0}")]
    SplitFailure(String),
    #[error("class function sum is not an integral multiple of the group order")]
    NonIntegral,
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(Box<Witness>),
    #[error("invalid semidirect action: {0}")]
    InvalidAction(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("operation requires odd characteristic, got p = 2")]
    EvenCharacteristic,
    #[error("operation requires a group of odd order, got {0}")]
    EvenOrder(usize),
    #[error("invalid linear action: {0}")]
    InvalidMatrix(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn violation(witness: Witness) -> Self {
        Error::TheoremViolation(Box::new(witness))
    }

    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub fn is_theorem_violation(&self) -> bool {
        matches!(self, Error::TheoremViolation(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

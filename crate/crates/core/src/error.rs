use thiserror::Error;

use crate::MAX_ORDER;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {element} is out of range for a groupoid of order {order}")]
    IndexOutOfRange { element: usize, order: usize },

    #[error("invalid groupoid: {0}")]
    Input(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("order {order} exceeds the supported bound {bound} (hard cap {MAX_ORDER})")]
    Size { order: usize, bound: usize },

    #[error("subset is not closed: {left}·{right} = {product} lies outside it")]
    Closure {
        left: usize,
        right: usize,
        product: usize,
    },

    #[error("{candidate} is not a strongly regular witness for {element}")]
    InvalidWitness { element: usize, candidate: usize },

    #[error("not a completely inverse AG**-groupoid: {0}")]
    NotCompletelyInverse(String),

    #[error("not a semilattice of abelian groups: {0}")]
    NotSemilatticeOfAbelianGroups(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("THEOREM-VIOLATION: {0}")]
    TheoremViolation(String),
}

impl Error {
    pub fn is_theorem_violation(&self) -> bool {
        matches!(self, Error::TheoremViolation(_))
    }

    /// Input errors mean "could not check"; everything else is a verdict
    /// about a well-formed groupoid.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::IndexOutOfRange { .. }
                | Error::Input(_)
                | Error::Parse { .. }
                | Error::Size { .. }
                | Error::InvalidPermutation(_)
        )
    }
}

use alloc::string::String;

use crate::expr::ExprError;
use crate::scalar::ScalarError;
use crate::weights::WeightError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Expr(#[from] ExprError),
    /// An argument lies outside the subspace an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("relation contains h but no numeric hbar was supplied")]
    HbarUnbound,
    #[error("operation needs a nonzero element")]
    ZeroElement,
    #[error("relation already contains h")]
    AlreadyDeformed,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

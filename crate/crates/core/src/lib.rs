//! Exact computer algebra for Toeplitz quantization with symbols in the
//! quantum group SU_q(2), acting on the Manin quantum plane.
//!
//! Scalars are Laurent polynomials in a formal `q` (with rational
//! coefficients and an optional formal `h = ℏ^(1/2)`), so every identity is
//! checked symbolically rather than at sampled values of `q`.

#![no_std]
#![allow(clippy::len_without_is_empty, clippy::should_implement_trait)]

extern crate alloc;

pub mod algebra;
pub mod ccr;
pub mod error;
pub mod expr;
pub mod plane;
pub mod pre_hilbert;
pub mod quantization;
pub mod scalar;
pub mod weights;

pub use num_rational::BigRational;

pub use algebra::{normal_order, AlgebraElement, Generator, NormalMonomial, Word};
pub use ccr::{FreeElement, FreeGenerator, FreeWord, GeneratorKind, Substitution};
pub use error::{Error, Result};
pub use expr::{ExprError, ExprErrorKind};
pub use plane::{PElement, PMonomial};
pub use pre_hilbert::{AxiomAudit, AxiomSample, InnerProductSpace};
pub use quantization::{Basis, OperatorMatrix, Quantizer, ToeplitzOperator, Window};
pub use scalar::{Exponent, Scalar, ScalarError, Value};
pub use weights::{WeightFunction, WeightTable};

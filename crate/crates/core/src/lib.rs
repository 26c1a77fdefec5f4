//! Exact decision procedure for ultimate positivity of simple linear
//! recurrence sequences over the rationals.
//!
//! ```
//! use upos::{decide_ultimate_positivity, Budgets, LrsRep, Outcome};
//!
//! let fib = LrsRep::from_ints(&[1, 1], &[0, 1]).unwrap();
//! let v = decide_ultimate_positivity(&fib, &Budgets::default()).unwrap();
//! assert_eq!(v.outcome, Outcome::UltimatelyPositive);
//! ```

pub mod algebraic;
pub mod decider;
pub mod degeneracy;
pub mod error;
pub mod harness;
pub mod kernel;
pub mod lattice;
pub mod lrs;
pub mod numfield;
pub mod relations;
pub mod torus;

pub use algebraic::AlgebraicNumber;
pub use decider::{decide_ultimate_positivity, Budgets, Outcome, Reason, Verdict};
pub use error::{Error, Result};
pub use kernel::{Rational, UniPoly};
pub use lrs::LrsRep;

#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    pub mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/recurrences.md")]
    pub mod recurrences {}
    #[doc = include_str!("../../../book/src/degeneracy.md")]
    pub mod degeneracy {}
    #[doc = include_str!("../../../book/src/relations.md")]
    pub mod relations {}
    #[doc = include_str!("../../../book/src/torus.md")]
    pub mod torus {}
    #[doc = include_str!("../../../book/src/deciding.md")]
    pub mod deciding {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    pub mod command_line {}
}

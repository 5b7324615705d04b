//! Exact computations with one-sided shifts of finite type and their
//! unital subshift algebras.
//!
//! A [`Shift`] is compiled from an alphabet and a list of forbidden words.
//! On top of it the crate provides the Boolean algebra of clopen sets
//! ([`ClopenSet`]), the partial action of the free group on the shift
//! ([`action`]), exact arithmetic in the algebra realized as a partial skew
//! group ring ([`AlgebraElement`]), identity checkers ([`identities`]), and
//! decision procedures for condition (L), cofinality and simplicity
//! ([`simplicity`]).
//!
//! ```
//! use subshift::{AlgebraElement, Ring, Shift, ShiftSpec, Symbol};
//!
//! let gm = Shift::build(ShiftSpec::from_strs(&["0", "1"], &["11"])?);
//! let s1 = AlgebraElement::gen_s(&gm, Ring::Rationals, Symbol(1))?;
//! // s_1* s_1 is the projection onto the follower set of 1, which is Z(0).
//! assert_eq!(s1.star().mul(&s1)?.to_expr(), "p(Z(0))");
//! # Ok::<(), subshift::Error>(())
//! ```

pub mod action;
pub mod algebra;
pub mod clopen;
pub mod error;
pub mod group;
pub mod identities;
pub mod lcfun;
pub mod point;
pub mod ring;
pub mod shift;
pub mod simplicity;
pub mod syntax;
pub mod word;

pub use algebra::AlgebraElement;
pub use clopen::ClopenSet;
pub use error::{Error, Result};
pub use group::{FreeGroupElement, Letter, SimpleFactorization};
pub use lcfun::LcFunction;
pub use point::EvPeriodicPoint;
pub use ring::{Ring, Scalar};
pub use shift::{Shift, ShiftSpec};
pub use simplicity::{FollowerClass, Verdict, Witness};
pub use word::{Alphabet, Symbol, Word};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/shifts.md")]
    mod shifts {}
    #[doc = include_str!("../../../book/src/clopen.md")]
    mod clopen {}
    #[doc = include_str!("../../../book/src/action.md")]
    mod action {}
    #[doc = include_str!("../../../book/src/algebra.md")]
    mod algebra {}
    #[doc = include_str!("../../../book/src/simplicity.md")]
    mod simplicity {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

//! Exact Stanley depth of monomial ideals and of quotients `J/I` of monomial
//! ideals.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised bottom-up:
//!
//! - [`monomial`] and [`ideal`]: exponent vectors and monomial ideals given by
//!   their minimal generators, with intersection, sums, colons, radicals,
//!   minimal primes and the power-contraction map `y_i -> x_i^a`.
//! - [`poset`]: the characteristic poset of `J/I` inside a box `g` and the
//!   search for interval partitions whose tops have at least `k` saturated
//!   coordinates. [`poset::sdepth_exact`] is the main entry point.
//! - [`stanley`]: Stanley decompositions as values, their verification, and
//!   the transfer of a decomposition of `J/I` to one of `sqrt(J)/sqrt(I)`.
//! - [`bounds`]: closed-form upper and lower bounds for the Stanley depth of
//!   an intersection of two primary ideals, collected into a
//!   [`bounds::BoundReport`].
//!
//! ```
//! use stanley_core::{ideal::MonomialIdeal, poset::sdepth_exact, Sdepth, QuotientModule};
//!
//! let p = MonomialIdeal::from_exponents(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]).unwrap();
//! let q = MonomialIdeal::from_exponents(4, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]).unwrap();
//! let m = QuotientModule::ideal(p.intersect(&q).unwrap());
//! assert_eq!(sdepth_exact(&m), Sdepth::Finite(3));
//! ```

#![no_std]
#![warn(missing_debug_implementations, unused_qualifications)]

extern crate alloc;

pub mod bounds;
mod error;
pub mod ideal;
pub mod monomial;
pub mod poset;
mod quotient;
mod sdepth;
pub mod stanley;

pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
pub use quotient::QuotientModule;
pub use sdepth::Sdepth;

//! Points of represented second-countable T0 spaces, their neighborhood-filter
//! name streams, and explicit enumeration-operator translations between the
//! encodings, together with two finite-injury construction simulators.
//!
//! The computational substrate is the [`op`] module: name streams are
//! pull-based enumerations over a pause/emit wire alphabet, and enumeration
//! operators are monotone continuous set maps given by axiom tables. Each
//! supported space lives in [`spaces`] as a finitary point description that
//! yields both a name stream and a total membership oracle, so every
//! translation in [`reductions`] can be checked at finite stage against
//! brute-force truth.

pub mod coding;
pub mod op;
pub mod ordinals;
pub mod priority;
pub mod reductions;
pub mod setspec;
pub mod spaces;
pub mod stream;
pub mod witnesses;

pub use coding::{decode_pair, encode_pair, Atom};
pub use setspec::SetSpec;
pub use stream::{NameStream, Symbol};

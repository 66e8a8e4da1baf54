//! Higher multiplier ideals of monomial-type hypersurface germs, computed from
//! the microlocal V-filtration, together with the invariants and
//! log-resolution bookkeeping built on top of them.

pub mod constructors;
pub mod error;
pub mod invariants;
pub mod monomial;
pub mod rat;
pub mod registry;
pub mod resolution;
pub mod spectrum;

pub use error::{Error, Result};
pub use monomial::{Count, ExpVec, MonIdeal};
pub use rat::Rat;
pub use spectrum::{HmIdeal, Jump, VSpectrum};

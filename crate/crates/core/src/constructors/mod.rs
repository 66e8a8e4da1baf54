//! Spectra and ideals built from closed formulas for specific divisor classes.

mod diagonal;
mod fermat;
mod normal_crossing;
mod thom_sebastiani;

pub use diagonal::{spectrum_diagonal, spectrum_one_var};
pub use fermat::spectrum_ordinary_fermat;
pub use normal_crossing::{nc_ideal, power_scale_check, qdivisor_ideal};
pub use thom_sebastiani::spectrum_thom_sebastiani;

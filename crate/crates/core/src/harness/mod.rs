//! Everything around the decider: JSON formats, the brute-force falsifier and
//! the hard-instance generator.

pub mod falsify;
pub mod generator;
pub mod io;

pub use falsify::falsify;
pub use generator::{gaussian_units, reduce_pos_to_lrs, GaussianPrimeUnit, PolyInstance};
pub use io::{lrs_from_json, lrs_to_json, verdict_to_json, VerdictJson};

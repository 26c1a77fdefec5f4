//! Exact substrate: rationals, univariate polynomials, Sturm sequences,
//! resultants, cyclotomic polynomials, interval enclosures, root isolation
//! and factorization over the integers.

pub mod cyclotomic;
pub mod factor;
pub mod interval;
pub mod poly;
pub mod rational;
pub mod resultant;
pub mod roots;
pub mod sturm;

pub use cyclotomic::{cyclotomic, euler_phi, phi_inverse};
pub use poly::UniPoly;
pub use rational::{parse_rational, rat, ratio, Rational};
pub use resultant::{resultant, resultant_bivariate, BiPoly};
pub use roots::{isolate_roots, mignotte_gap, RootBox};
pub use sturm::{count_real_roots, sturm_count};

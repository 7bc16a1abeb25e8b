//! Exact monomial expansion of circulant determinants.
//!
//! The coefficient of `x_{a_0} .. x_{a_{N-1}}` in `det CIRC[x_0, .., x_{N-1}]` is computed
//! from a closed form over multiset partitions, checked against brute-force oracles, and
//! organised into orbits of the affine group acting on subscripts.

pub mod cli;
pub mod coeff;
pub mod error;
pub mod exactmath;
pub mod expansion;
pub mod index;
pub mod oracles;
pub mod partitions;
pub mod symmetry;

pub use error::{Error, Result};
pub use index::{IndexSet, MultiplicityVector};

//! Exact generation, transformation and verification of number triangles
//! defined by the two-term triangular recurrence
//!
//! ```text
//! <n+1, k> = (α n + β k + γ) <n, k> + (α' n + β' (k-1) + γ') <n, k-1>
//! ```
//!
//! with apex `<0, 0> = 1`. Everything is computed over exact rationals.

pub mod algebra;
pub mod characteristics;
pub mod derivation;
pub mod error;
pub mod families;
pub mod gkp;
pub mod oracles;
pub mod report;
pub mod sample;
pub mod suites;
pub mod transforms;

pub use algebra::{rat, ratio, PolyT, Rat, RatFuncT, Series};
pub use error::{Error, Result};
pub use gkp::{triangle_from_recurrence, GkpParams, Tableau, Triangle};
pub use report::Report;

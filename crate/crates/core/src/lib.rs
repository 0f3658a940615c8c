//! Right and left commutation semigroups of the finite metacyclic groups
//! `G(m, n, k)` with trivial centre, computed through mu-maps and containers
//! and cross-checked against brute-force closures.

pub mod container;
pub mod error;
pub mod group;
pub mod mumap;
pub mod oracle;
pub mod sigma;
pub mod survey;
pub mod zmod;

pub use container::Container;
pub use error::{Error, Result};
pub use group::{GroupElement, Presentation};
pub use mumap::{lambda_of, rho_of, MuMap, Side};
pub use sigma::{analyze, analyze_side, enumerate_elements, BaseSet, SigmaAnalysis};
pub use zmod::Modulus;

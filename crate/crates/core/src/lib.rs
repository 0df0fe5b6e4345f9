//! Lucas analogues of binomial and Catalan numbers, with the domino
//! tiling models that show their coefficients are nonnegative.

pub mod analysis;
pub mod coxcat;
pub mod exec;
pub mod involution;
pub mod lucas;
pub mod polyring;
pub mod shapes;

pub use exec::Exec;
pub use polyring::{CoeffSeq, Poly1, Poly2, PolyError};

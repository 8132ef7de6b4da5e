pub mod abelian;
pub mod calculus;
pub mod engine;
pub mod frontend;
pub mod manifold;
pub mod tables;
pub mod truth;

pub use truth::Truth;

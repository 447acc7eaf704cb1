//! Mac Lane and Hochschild cohomology of finite rings with finite bimodule
//! coefficients, and the obstruction theory of Ann-functors between reduced
//! Ann-categories built on top of it.

pub mod algebra;
pub mod annfunctor;
pub mod cli;
pub mod cochain;
pub mod hochschild;
pub mod linalg;
pub mod maclane;

//! Exact linear algebra over finite abelian groups: Smith normal form,
//! Howell bases modulo N, kernels, images, quotients and linear solving.

mod group;
mod howell;
mod matrix;

pub use group::{
    homology, order_u128, quotient, AbelianGroupPresentation, CyclicProduct, LinalgError,
    LinearMap, Quotient, Subgroup,
};
pub use howell::{ext_gcd, gcd, lcm, unit_normalizer, HowellForm};
pub use matrix::{residue, smith_normal_form, IntMatrix, SmithDecomposition};

/// `solve_mod(A, b)`: some `x` with `A(x) = b`, or `None` when `b ∉ im A`.
pub fn solve_mod(map: &LinearMap, b: &[i64]) -> Option<Vec<i64>> {
    map.solve(b)
}

//! Reads the symmetry component σ off a pair (ξ, η).
use ringcoh::algebra::{FiniteBimodule, FiniteRing};
use ringcoh::annfunctor::{build_sigma_from_structure, StructurePair};
use ringcoh::cochain::Table;

fn main() {
    let m = FiniteBimodule::regular(&FiniteRing::cyclic(2));
    let xi = Table::from_fn(3, 2, |a| a[0] * a[1] * a[2]);
    let eta = Table::from_fn(2, 2, |a| a[0] * a[1]);
    let sigma = build_sigma_from_structure(&StructurePair { xi, eta }, &m);
    for (i, v) in sigma.values().iter().enumerate() {
        println!(
            "sigma({}, {}, {}, {}) = {v}",
            i >> 3,
            (i >> 2) & 1,
            (i >> 1) & 1,
            i & 1
        );
    }
}

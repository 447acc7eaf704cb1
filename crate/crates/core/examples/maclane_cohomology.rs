//! Mac Lane cohomology groups of small rings with coefficients in a bimodule.
use ringcoh::algebra::{FiniteBimodule, FiniteRing};
use ringcoh::maclane::{first_cocycles, second_cohomology, third_cohomology, Z3Convention};

fn main() {
    for name in ["Z2", "Z3", "Z4", "Z2xZ2"] {
        let m = FiniteBimodule::regular(&FiniteRing::preset(name).unwrap());
        let z1 = first_cocycles(&m);
        let h2 = second_cohomology(&m).unwrap();
        println!(
            "{name}: Z1 = {}, H2 = {} (|Z2| = {}, |B2| = {})",
            z1.presentation, h2.presentation, h2.cocycles_order, h2.coboundaries_order
        );
    }
    let m = FiniteBimodule::regular(&FiniteRing::cyclic(2));
    for normalize_lambda_rho in [false, true] {
        let h3 = third_cohomology(
            &m,
            Z3Convention {
                normalize_lambda_rho,
            },
        )
        .unwrap();
        println!(
            "Z2, H3 with lambda/rho normalized = {normalize_lambda_rho}: {}",
            h3.presentation
        );
    }
}

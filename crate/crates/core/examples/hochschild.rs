//! Hochschild cohomology of multilinear cochains and its map into Mac Lane cohomology.
use ringcoh::algebra::{FiniteBimodule, FiniteRing};
use ringcoh::hochschild::{
    all_multilinear, embed_to_maclane, hoch_cohomology_group, is_hoch_cocycle,
};
use ringcoh::maclane::{coboundary_witness, is_z3};

fn main() {
    for n in [2, 3, 4] {
        let m = FiniteBimodule::regular(&FiniteRing::cyclic(n));
        let groups: Vec<String> = (1..=3)
            .map(|d| {
                hoch_cohomology_group(&m, d)
                    .unwrap()
                    .presentation
                    .to_string()
            })
            .collect();
        println!("Z{n}: H1, H2, H3 = {}", groups.join(", "));
    }
    let m = FiniteBimodule::regular(&FiniteRing::cyclic(2));
    for f in all_multilinear(&m, 3)
        .iter()
        .filter(|f| is_hoch_cocycle(f, &m))
    {
        let h = embed_to_maclane(f).unwrap();
        println!(
            "alpha = {:?}: Mac Lane cocycle {}, Mac Lane coboundary {}",
            f.table().values(),
            is_z3(&h, &m).passed(),
            coboundary_witness(&h, &m).is_some()
        );
    }
}

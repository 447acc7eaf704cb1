//! Builds rings from presets and tables, then bimodules over them.
use ringcoh::algebra::{EquivariantMap, FiniteBimodule, FiniteRing, RingHom};

fn main() {
    let z4 = FiniteRing::cyclic(4);
    let z2xz2 = FiniteRing::preset("Z2xZ2").unwrap();
    println!("Z4 additive structure: {:?}", z4.additive_structure().0);
    println!(
        "Z2xZ2 additive structure: {:?}",
        z2xz2.additive_structure().0
    );

    // F2[e]/(e^2) as an explicit table: elements 0, 1, e, 1+e
    let add = vec![
        vec![0, 1, 2, 3],
        vec![1, 0, 3, 2],
        vec![2, 3, 0, 1],
        vec![3, 2, 1, 0],
    ];
    let mul = vec![
        vec![0, 0, 0, 0],
        vec![0, 1, 2, 3],
        vec![0, 2, 0, 2],
        vec![0, 3, 2, 1],
    ];
    let dual = FiniteRing::new(4, &add, &mul, 0, 1).unwrap();
    println!("F2[e]/(e^2) has {} elements", dual.order());

    let regular = FiniteBimodule::regular(&z4);
    let p = RingHom::reduction(4, 2).unwrap();
    let pulled = FiniteBimodule::regular(&FiniteRing::cyclic(2))
        .pullback(&p)
        .unwrap();
    println!(
        "regular Z4 module: invariant factors {:?}",
        regular.invariant_factors()
    );
    println!("Z2 pulled back to Z4: 3 * 1 = {}", pulled.left(3, 1));

    let q = EquivariantMap::identity(&regular);
    println!("identity map table: {:?}", q.table());
}

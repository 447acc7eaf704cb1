//! Congruence classes of Ann-functors and their automorphism groups.
use ringcoh::algebra::{EquivariantMap, FiniteBimodule, FiniteRing, RingHom};
use ringcoh::annfunctor::{
    aut_group, classify_exhaustive, classify_functors, is_congruent, ReducedAnnCategory,
};

fn main() {
    for n in [2, 3] {
        let m = FiniteBimodule::regular(&FiniteRing::cyclic(n));
        let cat = ReducedAnnCategory::trivial(m.clone());
        let p = RingHom::identity(m.ring());
        let q = EquivariantMap::identity(&m);
        let c = classify_functors(&p, &q, &cat, &cat).unwrap();
        let brute = classify_exhaustive(&p, &q, &cat, &cat).unwrap();
        println!("Z{n}: classes form {}, {} by search", c.group, brute.len());
        let (f, g) = (
            &c.representatives[0],
            &c.representatives[c.representatives.len() - 1],
        );
        println!(
            "  first and last congruent: {}",
            is_congruent(f, g, &cat, &cat).unwrap().is_some()
        );
        println!("  |Aut| = {}", aut_group(f, &cat, &cat).unwrap().order());
    }
}

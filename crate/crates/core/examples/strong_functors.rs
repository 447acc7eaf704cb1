//! Strong Ann-functors of type (p, 0), governed by Hochschild cohomology.
use ringcoh::algebra::{FiniteBimodule, FiniteRing, RingHom};
use ringcoh::annfunctor::{strong_aut, strong_classify, strong_functor_exists, ReducedAnnCategory};

fn main() {
    let z4 = FiniteRing::cyclic(4);
    let source = ReducedAnnCategory::trivial(FiniteBimodule::zero_module(&z4));
    let target = ReducedAnnCategory::trivial(FiniteBimodule::regular(&FiniteRing::cyclic(2)));
    let p = RingHom::reduction(4, 2).unwrap();
    let report = strong_functor_exists(&p, &source, &target).unwrap();
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    let classes = strong_classify(&p, &source, &target).unwrap();
    println!(
        "{} classes, group {}",
        classes.representatives.len(),
        classes.group
    );
    println!("|Aut| = {}", strong_aut(&p, &target).unwrap().order());
}

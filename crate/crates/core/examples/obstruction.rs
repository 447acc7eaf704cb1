//! Existence of an Ann-functor: the obstruction class and an explicit solution.
use ringcoh::algebra::{EquivariantMap, FiniteBimodule, FiniteRing, RingHom};
use ringcoh::annfunctor::{
    functor_exists, is_functor, obstruction, obstruction_vanishes, ReducedAnnCategory,
};
use ringcoh::maclane::{third_cohomology, Z3Convention};

fn main() {
    let m = FiniteBimodule::regular(&FiniteRing::cyclic(2));
    let p = RingHom::identity(m.ring());
    let q = EquivariantMap::identity(&m);
    let source = ReducedAnnCategory::trivial(m.clone());
    let h3 = third_cohomology(&m, Z3Convention::default()).unwrap();
    for coords in h3.classes() {
        let target = ReducedAnnCategory::new(m.clone(), h3.element(&coords)).unwrap();
        let k = obstruction(&p, &q, &source, &target).unwrap();
        let vanishes = obstruction_vanishes(&p, &q, &source, &target).unwrap();
        print!(
            "target class {coords:?}: obstruction zero = {}, class zero = {vanishes}",
            k.is_zero()
        );
        match functor_exists(&p, &q, &source, &target).unwrap() {
            Some(f) => println!(
                ", functor verified = {}",
                is_functor(&f, &source, &target).unwrap().passed()
            ),
            None => println!(", no functor"),
        }
    }
}

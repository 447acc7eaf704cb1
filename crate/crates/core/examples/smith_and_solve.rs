//! Smith normal form over ℤ and linear systems over finite abelian groups.
use ringcoh::linalg::{
    smith_normal_form, solve_mod, CyclicProduct, IntMatrix, LinearMap, Subgroup,
};

fn main() {
    let a = IntMatrix::from_rows(3, &[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let snf = smith_normal_form(&a);
    println!("diagonal: {:?}", snf.diagonal());
    println!("U·A·V == D: {}", snf.u.mul(&a).mul(&snf.v) == snf.d);

    // x ↦ (2x, x) from ℤ/4 into ℤ/4 ⊕ ℤ/2
    let map = LinearMap::from_columns(
        CyclicProduct::new(vec![4]),
        CyclicProduct::new(vec![4, 2]),
        &[vec![2, 1]],
    )
    .unwrap();
    println!("solve (2, 1): {:?}", solve_mod(&map, &[2, 1]));
    println!("solve (1, 0): {:?}", solve_mod(&map, &[1, 0]));
    println!("kernel order: {}", map.kernel().order());

    let ambient = CyclicProduct::new(vec![12]);
    let sub = Subgroup::generated_by(&ambient, [vec![8]]);
    println!("<8> in Z/12 is {}", sub.structure());
}

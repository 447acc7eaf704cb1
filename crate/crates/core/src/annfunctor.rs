//! Reduced Ann-categories `(R, M, h)` and the functors between them.
//!
//! A functor of type `(p, q)` from `(R, M, h)` to `(R′, M′, h′)` is given by
//! its associated functions `(μ, ν): R² → M′`, where `M′` is an `R`-bimodule
//! through `p`. It is a genuine Ann-functor iff
//!
//! ```text
//! σ′* − σ_* = μ(x,y) + μ(z,t) − μ(x+z,y+t) − μ(x,z) − μ(y,t) + μ(x+y,z+t)
//! α′* − α_* = x·ν(y,z) − ν(xy,z) + ν(x,yz) − ν(x,y)·z
//! λ′* − λ_* = ν(x,y+z) − ν(x,y) − ν(x,z) + x·μ(y,z) − μ(xy,xz)
//! ρ′* − ρ_* = ν(x,z) + ν(y,z) − ν(x+y,z) + μ(xz,yz) − μ(x,y)·z
//! ```
//!
//! i.e. the obstruction `k = p*h′ − q_*h` equals `d2(−μ, ν)`. The pair
//! `c = (−μ, ν)` is called the cocycle coordinates of the structure; an
//! Ann-morphism `u: F → G` exists iff `c_G = c_F − d1(u)`.

use std::collections::HashSet;

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, Elem, EquivariantMap, FiniteBimodule, FiniteRing, RingHom};
use crate::cochain::{
    linear_map_from_forms, tuples, Access, Arith, CheckReport, Cochain1, Cochain2, Cochain3,
    CochainTables, Layout, LinForm, Symbolic, Table,
};
use crate::hochschild::{
    hoch_coboundary_witness, hoch_cohomology_group, multilinearity_violation, HochCochain,
    HochError,
};
use crate::linalg::AbelianGroupPresentation;
use crate::maclane::{
    all_cochains1, all_cochains2, coboundary_entry, coboundary_witness, d1, d1_map, d2_unchecked,
    first_cocycles, is_z3_with, layout2, layout3_full, second_cohomology, CohomologyGroup,
    MacLaneError, Z3Convention, MU,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnnError {
    #[error("carrier mismatch: {0}")]
    Carrier(String),
    #[error("structures have different types (p, q)")]
    MismatchedType,
    #[error("h is not a 3-cocycle; failed relations {0:?}")]
    NotACocycle(Vec<String>),
    #[error("exhaustive search over {0} structures exceeds the size gate")]
    TooLarge(BigUint),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    MacLane(#[from] MacLaneError),
    #[error(transparent)]
    Hochschild(#[from] HochError),
}

/// `(R, M, h)` with `h` a 3-cocycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedAnnCategory {
    module: FiniteBimodule,
    h: Cochain3,
}

impl ReducedAnnCategory {
    pub fn new(module: FiniteBimodule, h: Cochain3) -> Result<Self, AnnError> {
        Self::with_convention(module, h, Z3Convention::default())
    }

    pub fn with_convention(
        module: FiniteBimodule,
        h: Cochain3,
        convention: Z3Convention,
    ) -> Result<Self, AnnError> {
        let n = module.ring().order();
        if h.tables().iter().any(|t| t.ring_order() != n) {
            return Err(AnnError::Carrier(format!(
                "h is not shaped over a ring of order {n}"
            )));
        }
        let report = is_z3_with(&h, &module, convention);
        if !report.passed() {
            return Err(AnnError::NotACocycle(
                report
                    .failed_relations()
                    .into_iter()
                    .map(String::from)
                    .collect(),
            ));
        }
        Ok(ReducedAnnCategory { module, h })
    }

    /// `(R, M, 0)`.
    pub fn trivial(module: FiniteBimodule) -> Self {
        let n = module.ring().order();
        ReducedAnnCategory {
            module,
            h: Cochain3::zero(n),
        }
    }

    pub fn ring(&self) -> &FiniteRing {
        self.module.ring()
    }

    pub fn module(&self) -> &FiniteBimodule {
        &self.module
    }

    pub fn h(&self) -> &Cochain3 {
        &self.h
    }
}

/// A morphism `(x, a)`: the automorphism `a` of the object `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Morphism {
    pub object: Elem,
    pub loop_: Elem,
}

impl Morphism {
    pub fn new(object: Elem, loop_: Elem) -> Self {
        Morphism { object, loop_ }
    }

    /// `(x, a)·(x, b) = (x, a + b)`; `None` across different objects.
    pub fn compose(&self, other: &Morphism, m: &FiniteBimodule) -> Option<Morphism> {
        (self.object == other.object)
            .then(|| Morphism::new(self.object, m.add(self.loop_, other.loop_)))
    }

    /// `(x, a) ⊕ (y, b) = (x + y, a + b)`.
    pub fn oplus(&self, other: &Morphism, m: &FiniteBimodule) -> Morphism {
        Morphism::new(
            m.ring().add(self.object, other.object),
            m.add(self.loop_, other.loop_),
        )
    }

    /// `(x, a) ⊗ (y, b) = (xy, a·y + x·b)`.
    pub fn otimes(&self, other: &Morphism, m: &FiniteBimodule) -> Morphism {
        let (x, a, y, b) = (self.object, self.loop_, other.object, other.loop_);
        Morphism::new(m.ring().mul(x, y), m.add(m.right(a, y), m.left(x, b)))
    }
}

/// The data `(ξ, η)` of an Ann-category structure from which `σ` is derived.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructurePair {
    pub xi: Table,
    pub eta: Table,
}

/// `σ(x,y,z,t) = ξ(x+y,z,t) − ξ(x,y,z) + η(y,z) + ξ(x,z,y) − ξ(x+z,y,t)`.
pub fn build_sigma_from_structure(s: &StructurePair, m: &FiniteBimodule) -> Table {
    let r = m.ring();
    Table::from_fn(4, r.order(), |a| {
        let [x, y, z, t] = [a[0], a[1], a[2], a[3]];
        m.sum([
            (1, s.xi.get(&[r.add(x, y), z, t])),
            (-1, s.xi.get(&[x, y, z])),
            (1, s.eta.get(&[y, z])),
            (1, s.xi.get(&[x, z, y])),
            (-1, s.xi.get(&[r.add(x, z), y, t])),
        ])
    })
}

/// A functor of type `(p, q)` with associated functions `g = (μ, ν)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnFunctorStructure {
    pub p: RingHom,
    pub q: EquivariantMap,
    pub g: Cochain2,
}

impl AnnFunctorStructure {
    /// `(−μ, ν)` in the target module.
    pub fn cocycle_coordinates(&self) -> Cochain2 {
        self.g.negate_mu(self.q.target())
    }
}

fn check_type(
    p: &RingHom,
    q: &EquivariantMap,
    source: &ReducedAnnCategory,
    target: &ReducedAnnCategory,
) -> Result<FiniteBimodule, AnnError> {
    if p.source() != source.ring() || p.target() != target.ring() {
        return Err(AnnError::Carrier(
            "p does not map the source ring to the target ring".into(),
        ));
    }
    if q.source() != source.module() || q.target() != target.module() {
        return Err(AnnError::Carrier(
            "q does not map the source module to the target module".into(),
        ));
    }
    if q.hom() != p {
        return Err(AnnError::Carrier(
            "q is equivariant over a different ring homomorphism".into(),
        ));
    }
    induced_module(p, target)
}

/// `M′` as an `R`-bimodule through `p`.
pub fn induced_module(
    p: &RingHom,
    target: &ReducedAnnCategory,
) -> Result<FiniteBimodule, AnnError> {
    Ok(target.module().pullback(p)?)
}

/// `k = p*h′ − q_*h`, valued in `M′`.
pub fn obstruction(
    p: &RingHom,
    q: &EquivariantMap,
    source: &ReducedAnnCategory,
    target: &ReducedAnnCategory,
) -> Result<Cochain3, AnnError> {
    let m = check_type(p, q, source, target)?;
    Ok(target.h().pullback(p).sub(&source.h().pushforward(q), &m))
}

/// Report names of the four functor equations, by the component they constrain.
pub const EQUATIONS: [&str; 4] = [
    "sigma-equation",
    "alpha-equation",
    "lambda-equation",
    "rho-equation",
];

fn compare(k: &Cochain3, g: &Cochain2, m: &FiniteBimodule) -> CheckReport {
    let mut report = CheckReport::default();
    if let Some((component, args)) = g.normalization_violation(m.ring().zero()) {
        report.push(&format!("{component}-normalization"), args);
    }
    let rhs = d2_unchecked(&g.negate_mu(m), m);
    for ((lhs, rhs), name) in k.tables().iter().zip(rhs.tables()).zip(EQUATIONS) {
        if let Some(w) = tuples(lhs.arity(), lhs.ring_order()).find(|a| lhs.get(a) != rhs.get(a)) {
            report.push(name, w);
        }
    }
    report
}

/// Evaluates the four functor equations pointwise; passes iff `F` is an Ann-functor.
pub fn is_functor(
    f: &AnnFunctorStructure,
    source: &ReducedAnnCategory,
    target: &ReducedAnnCategory,
) -> Result<CheckReport, AnnError> {
    let m = check_type(&f.p, &f.q, source, target)?;
    let k = obstruction(&f.p, &f.q, source, target)?;
    Ok(compare(&k, &f.g, &m))
}

// (μ, ν) read with μ negated, so the coboundary formulas give the functor equations.
struct NegatedMu<'a> {
    layout: &'a Layout,
    sym: &'a Symbolic,
}

impl Access<LinForm> for NegatedMu<'_> {
    fn get(&self, component: usize, args: &[Elem]) -> LinForm {
        let f = self.layout.get(component, args);
        if component == MU {
            self.sym.neg(&f)
        } else {
            f
        }
    }
}

/// Solves the functor equations for `(μ, ν)`; `None` iff no Ann-functor of type `(p, q)` exists.
pub fn functor_exists(
    p: &RingHom,
    q: &EquivariantMap,
    source: &ReducedAnnCategory,
    target: &ReducedAnnCategory,
) -> Result<Option<AnnFunctorStructure>, AnnError> {
    let m = check_type(p, q, source, target)?;
    let k = obstruction(p, q, source, target)?;
    let r = m.ring();
    let sym = Symbolic::new(&m);
    let unknowns = layout2(&m);
    let equations = layout3_full(&m);
    let g = NegatedMu {
        layout: &unknowns,
        sym: &sym,
    };
    let forms: Vec<LinForm> = equations
        .entries()
        .iter()
        .map(|(c, a)| coboundary_entry(&sym, r, &g, *c, a))
        .collect();
    let map = linear_map_from_forms(&unknowns, &m, forms);
    let b = equations
        .encode(&k.tables(), &m)
        .expect("full layout pins nothing");
    Ok(map.solve(&b).map(|x| AnnFunctorStructure {
        p: p.clone(),
        q: q.clone(),
        g: Cochain2::from_table_vec(unknowns.decode(&x, &m)),
    }))
}

/// Whether the obstruction is a coboundary; agrees with [`functor_exists`].
pub fn obstruction_vanishes(
    p: &RingHom,
    q: &EquivariantMap,
    source: &ReducedAnnCategory,
    target: &ReducedAnnCategory,
) -> Result<bool, AnnError> {
    let m = check_type(p, q, source, target)?;
    let k = obstruction(p, q, source, target)?;
    Ok(coboundary_witness(&k, &m).is_some())
}

/// Some Ann-morphism `u: F → G`, i.e. `c_G = c_F − d1(u)`.
pub fn is_congruent(
    f: &AnnFunctorStructure,
    g: &AnnFunctorStructure,
    source: &ReducedAnnCategory,
    target: &ReducedAnnCategory,
) -> Result<Option<Cochain1>, AnnError> {
    if f.p != g.p || f.q != g.q {
        return Err(AnnError::MismatchedType);
    }
    let m = check_type(&f.p, &f.q, source, target)?;
    let diff = f.cocycle_coordinates().sub(&g.cocycle_coordinates(), &m);
    let Ok(b) = layout2(&m).encode(&diff.table_refs(), &m) else {
        return Ok(None);
    };
    let layout = crate::maclane::layout1(&m);
    Ok(d1_map(&m)
        .solve(&b)
        .map(|x| Cochain1::from_table_vec(layout.decode(&x, &m))))
}

/// Congruence-class representatives together with the group indexing them.
#[derive(Debug, Clone)]
pub struct Classification {
    pub group: AbelianGroupPresentation,
    pub representatives: Vec<AnnFunctorStructure>,
}

/// One structure per congruence class, indexed by `H²_MaL(R, M′)`; empty when none exists.
pub fn classify_functors(
    p: &RingHom,
    q: &EquivariantMap,
    source: &ReducedAnnCategory,
    target: &ReducedAnnCategory,
) -> Result<Classification, AnnError> {
    let m = check_type(p, q, source, target)?;
    let h2 = second_cohomology(&m)?;
    let Some(base) = functor_exists(p, q, source, target)? else {
        return Ok(Classification {
            group: h2.presentation,
            representatives: Vec::new(),
        });
    };
    let c0 = base.cocycle_coordinates();
    let representatives = h2
        .classes()
        .iter()
        .map(|coords| AnnFunctorStructure {
            p: p.clone(),
            q: q.clone(),
            g: c0.add(&h2.element(coords), &m).negate_mu(&m),
        })
        .collect();
    Ok(Classification {
        group: h2.presentation,
        representatives,
    })
}

/// Largest number of 2-cochains the exhaustive mode will enumerate.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 16;

/// Every Ann-functor of type `(p, q)`, grouped into congruence classes by
/// testing differences against the enumerated coboundaries. Gated to `|R|·|M′| ≤ 16` and at most
/// [`EXHAUSTIVE_LIMIT`] candidate structures.
pub fn classify_exhaustive(
    p: &RingHom,
    q: &EquivariantMap,
    source: &ReducedAnnCategory,
    target: &ReducedAnnCategory,
) -> Result<Vec<Vec<AnnFunctorStructure>>, AnnError> {
    let m = check_type(p, q, source, target)?;
    let count = layout2(&m).group().order();
    if m.ring().order() * m.size() > 16 || count > BigUint::from(EXHAUSTIVE_LIMIT) {
        return Err(AnnError::TooLarge(count));
    }
    let k = obstruction(p, q, source, target)?;
    // B² by enumeration, so congruence is a set lookup on cocycle coordinates
    let coboundaries: HashSet<Cochain2> = all_cochains1(&m)
        .iter()
        .map(|u| d1(u, &m).expect("normalized"))
        .collect();
    let mut classes: Vec<(Cochain2, Vec<AnnFunctorStructure>)> = Vec::new();
    for g in all_cochains2(&m) {
        if !compare(&k, &g, &m).passed() {
            continue;
        }
        let c = g.negate_mu(&m);
        let f = AnnFunctorStructure {
            p: p.clone(),
            q: q.clone(),
            g,
        };
        match classes
            .iter_mut()
            .find(|(rep, _)| coboundaries.contains(&rep.sub(&c, &m)))
        {
            Some((_, class)) => class.push(f),
            None => classes.push((c, vec![f])),
        }
    }
    Ok(classes.into_iter().map(|(_, class)| class).collect())
}

/// `Aut(F) ≅ Z¹_MaL(R, M′)`; only the type of `F` enters.
pub fn aut_group(
    f: &AnnFunctorStructure,
    source: &ReducedAnnCategory,
    target: &ReducedAnnCategory,
) -> Result<CohomologyGroup<Cochain1>, AnnError> {
    let m = check_type(&f.p, &f.q, source, target)?;
    Ok(first_cocycles(&m))
}

/// Verdicts for the existence of a strong Ann-functor of type `(p, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrongReport {
    pub sigma_star_zero: bool,
    pub lambda_star_zero: bool,
    pub rho_star_zero: bool,
    pub alpha_multilinear: bool,
    /// `α′*` is a Hochschild coboundary.
    pub hochschild_class_zero: bool,
    /// `h′*` is a Mac Lane coboundary.
    pub maclane_class_zero: bool,
    pub exists: bool,
    /// The bi-additive `ν` of a strong functor, when one exists.
    #[serde(skip)]
    pub witness: Option<HochCochain>,
}

fn zero_map(
    p: &RingHom,
    source: &ReducedAnnCategory,
    target: &ReducedAnnCategory,
) -> Result<EquivariantMap, AnnError> {
    Ok(EquivariantMap::zero(
        p.clone(),
        source.module().clone(),
        target.module().clone(),
    )?)
}

/// Decides whether `(p, 0)` carries a strong Ann-functor `(F, id, ν)`.
pub fn strong_functor_exists(
    p: &RingHom,
    source: &ReducedAnnCategory,
    target: &ReducedAnnCategory,
) -> Result<StrongReport, AnnError> {
    let q = zero_map(p, source, target)?;
    let m = check_type(p, &q, source, target)?;
    let k = target.h().pullback(p);
    let sigma_star_zero = k.sigma.is_zero();
    let lambda_star_zero = k.lambda.is_zero();
    let rho_star_zero = k.rho.is_zero();
    let alpha_multilinear = multilinearity_violation(&k.alpha, &m).is_none();
    let witness = if alpha_multilinear {
        let alpha = HochCochain::new(k.alpha.clone(), &m)?;
        hoch_coboundary_witness(&alpha, &m)
    } else {
        None
    };
    let hochschild_class_zero = witness.is_some();
    let maclane_class_zero = coboundary_witness(&k, &m).is_some();
    let exists = sigma_star_zero && lambda_star_zero && rho_star_zero && hochschild_class_zero;
    Ok(StrongReport {
        sigma_star_zero,
        lambda_star_zero,
        rho_star_zero,
        alpha_multilinear,
        hochschild_class_zero,
        maclane_class_zero,
        exists,
        witness: if exists { witness } else { None },
    })
}

/// The strong structure `(p, 0, μ = 0, ν)`.
pub fn strong_structure(
    p: &RingHom,
    nu: &HochCochain,
    source: &ReducedAnnCategory,
    target: &ReducedAnnCategory,
) -> Result<AnnFunctorStructure, AnnError> {
    let q = zero_map(p, source, target)?;
    let n = source.ring().order();
    Ok(AnnFunctorStructure {
        p: p.clone(),
        q,
        g: Cochain2 {
            mu: Table::zeros(2, n),
            nu: nu.table().clone(),
        },
    })
}

/// Strong functor equations: the functor equations with `μ = 0`, `q = 0` and `ν` bi-additive.
pub fn is_strong_functor(
    f: &AnnFunctorStructure,
    source: &ReducedAnnCategory,
    target: &ReducedAnnCategory,
) -> Result<CheckReport, AnnError> {
    let m = check_type(&f.p, &f.q, source, target)?;
    let k = obstruction(&f.p, &f.q, source, target)?;
    let mut report = compare(&k, &f.g, &m);
    if let Some(a) = (0..source.module().size()).find(|&a| f.q.apply(a) != 0) {
        report.push("q-zero", vec![a]);
    }
    if let Some(w) = tuples(2, m.ring().order()).find(|a| f.g.mu.get(a) != 0) {
        report.push("mu-zero", w);
    }
    if let Some((_, w)) = multilinearity_violation(&f.g.nu, &m) {
        report.push("nu-biadditive", w);
    }
    Ok(report)
}

/// Strong structures, one per class of `H²_Hochs(R, M′)`; empty when none exists.
pub fn strong_classify(
    p: &RingHom,
    source: &ReducedAnnCategory,
    target: &ReducedAnnCategory,
) -> Result<Classification, AnnError> {
    let q = zero_map(p, source, target)?;
    let m = check_type(p, &q, source, target)?;
    let h2 = hoch_cohomology_group(&m, 2)?;
    let report = strong_functor_exists(p, source, target)?;
    let Some(nu0) = report.witness else {
        return Ok(Classification {
            group: h2.presentation,
            representatives: Vec::new(),
        });
    };
    let mut representatives = Vec::new();
    for coords in h2.classes() {
        let z = h2.element(&coords);
        let nu = nu0.table().zip_with(z.table(), |a, b| m.add(a, b));
        representatives.push(strong_structure(
            p,
            &HochCochain::new(nu, &m)?,
            source,
            target,
        )?);
    }
    Ok(Classification {
        group: h2.presentation,
        representatives,
    })
}

/// `Aut(F) ≅ Z¹_Hochs(R, M′)` for strong functors of type `(p, 0)`.
pub fn strong_aut(
    p: &RingHom,
    target: &ReducedAnnCategory,
) -> Result<CohomologyGroup<HochCochain>, AnnError> {
    let m = induced_module(p, target)?;
    Ok(hoch_cohomology_group(&m, 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maclane::{d2, third_cohomology};

    fn regular(n: usize) -> FiniteBimodule {
        FiniteBimodule::regular(&FiniteRing::cyclic(n))
    }

    fn identity_setup(n: usize) -> (RingHom, EquivariantMap, ReducedAnnCategory) {
        let m = regular(n);
        let p = RingHom::identity(m.ring());
        let q = EquivariantMap::identity(&m);
        (p, q, ReducedAnnCategory::trivial(m))
    }

    #[test]
    fn sigma_from_structure() {
        let m = regular(4);
        let zero = StructurePair {
            xi: Table::zeros(3, 4),
            eta: Table::zeros(2, 4),
        };
        assert!(build_sigma_from_structure(&zero, &m).is_zero());
        let eta = Table::from_fn(2, 4, |a| (a[0] * 3 + a[1]) % 4);
        let s = build_sigma_from_structure(
            &StructurePair {
                xi: Table::zeros(3, 4),
                eta: eta.clone(),
            },
            &m,
        );
        for t in tuples(4, 4) {
            assert_eq!(s.get(&t), eta.get(&[t[1], t[2]]));
        }
    }

    #[test]
    fn morphism_algebra() {
        let m = regular(4);
        let a = Morphism::new(2, 1);
        let b = Morphism::new(3, 3);
        assert_eq!(
            a.compose(&Morphism::new(2, 2), &m),
            Some(Morphism::new(2, 3))
        );
        assert_eq!(a.compose(&b, &m), None);
        assert_eq!(a.oplus(&b, &m), Morphism::new(1, 0));
        assert_eq!(a.otimes(&b, &m), Morphism::new(2, (3 + 2 * 3) % 4));
        // interchange law: ⊗ is additive in the pair of loops
        for (a2, c) in [
            (Morphism::new(2, 3), Morphism::new(3, 2)),
            (Morphism::new(2, 0), Morphism::new(3, 1)),
        ] {
            let lhs = a
                .compose(&a2, &m)
                .unwrap()
                .otimes(&b.compose(&c, &m).unwrap(), &m);
            let rhs = a.otimes(&b, &m).compose(&a2.otimes(&c, &m), &m).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn identity_functor_passes() {
        let (p, q, cat) = identity_setup(3);
        assert!(obstruction(&p, &q, &cat, &cat).unwrap().is_zero());
        let f = functor_exists(&p, &q, &cat, &cat).unwrap().unwrap();
        assert!(f.g.is_zero());
        assert!(is_functor(&f, &cat, &cat).unwrap().passed());
    }

    #[test]
    fn exists_matches_obstruction_and_exhaustion_over_z2() {
        let m = regular(2);
        let (p, q, source) = identity_setup(2);
        let h3 = third_cohomology(&m, Z3Convention::default()).unwrap();
        let mut targets: Vec<Cochain3> = all_cochains2(&m)
            .iter()
            .map(|g| d2(g, &m).unwrap())
            .collect();
        for coords in h3.classes() {
            let z = h3.element(&coords);
            targets.extend(
                all_cochains2(&m)
                    .iter()
                    .map(|g| z.add(&d2(g, &m).unwrap(), &m)),
            );
        }
        for h in targets {
            let target = ReducedAnnCategory::new(m.clone(), h).unwrap();
            let solved = functor_exists(&p, &q, &source, &target).unwrap();
            let brute = all_cochains2(&m).into_iter().any(|g| {
                is_functor(
                    &AnnFunctorStructure {
                        p: p.clone(),
                        q: q.clone(),
                        g,
                    },
                    &source,
                    &target,
                )
                .unwrap()
                .passed()
            });
            assert_eq!(solved.is_some(), brute);
            assert_eq!(
                solved.is_some(),
                obstruction_vanishes(&p, &q, &source, &target).unwrap()
            );
            if let Some(f) = solved {
                assert!(is_functor(&f, &source, &target).unwrap().passed());
            }
        }
    }

    #[test]
    fn perturbing_mu_breaks_the_equations() {
        let (p, q, cat) = identity_setup(3);
        let mut f = functor_exists(&p, &q, &cat, &cat).unwrap().unwrap();
        f.g.mu.set(&[1, 2], 1);
        let report = is_functor(&f, &cat, &cat).unwrap();
        assert!(!report.passed());
        assert!(report.failed_relations().iter().any(|r| [
            "sigma-equation",
            "lambda-equation",
            "rho-equation"
        ]
        .contains(r)));
    }

    #[test]
    fn congruence_round_trip() {
        let (p, q, cat) = identity_setup(3);
        let m = cat.module().clone();
        let f = functor_exists(&p, &q, &cat, &cat).unwrap().unwrap();
        assert!(is_congruent(&f, &f, &cat, &cat).unwrap().unwrap().is_zero());
        for u0 in all_cochains1(&m) {
            let c = f.cocycle_coordinates().sub(&d1(&u0, &m).unwrap(), &m);
            let g = AnnFunctorStructure {
                p: p.clone(),
                q: q.clone(),
                g: c.negate_mu(&m),
            };
            assert!(is_functor(&g, &cat, &cat).unwrap().passed());
            let u = is_congruent(&f, &g, &cat, &cat).unwrap().unwrap();
            let check = f.cocycle_coordinates().sub(&d1(&u, &m).unwrap(), &m);
            assert_eq!(check, g.cocycle_coordinates());
        }
    }

    #[test]
    fn classification_over_z2_and_z3() {
        for n in [2, 3] {
            let (p, q, cat) = identity_setup(n);
            let c = classify_functors(&p, &q, &cat, &cat).unwrap();
            let h2 = second_cohomology(cat.module()).unwrap();
            assert_eq!(BigUint::from(c.representatives.len()), h2.order());
            for f in &c.representatives {
                assert!(is_functor(f, &cat, &cat).unwrap().passed());
            }
            let classes = classify_exhaustive(&p, &q, &cat, &cat).unwrap();
            assert_eq!(classes.len(), c.representatives.len());
            for class in &classes {
                let hits = c
                    .representatives
                    .iter()
                    .filter(|r| is_congruent(r, &class[0], &cat, &cat).unwrap().is_some())
                    .count();
                assert_eq!(hits, 1);
            }
        }
        let (p, q, cat) = identity_setup(2);
        assert_eq!(
            classify_functors(&p, &q, &cat, &cat)
                .unwrap()
                .representatives
                .len(),
            2
        );
    }

    #[test]
    fn no_functor_gives_empty_classification() {
        let m = regular(2);
        let (p, q, source) = identity_setup(2);
        let h3 = third_cohomology(&m, Z3Convention::default()).unwrap();
        let target = ReducedAnnCategory::new(m, h3.representatives[0].clone()).unwrap();
        assert!(functor_exists(&p, &q, &source, &target).unwrap().is_none());
        assert!(classify_functors(&p, &q, &source, &target)
            .unwrap()
            .representatives
            .is_empty());
    }

    #[test]
    fn automorphisms_depend_only_on_type() {
        let (p, q, cat) = identity_setup(3);
        let reps = classify_functors(&p, &q, &cat, &cat)
            .unwrap()
            .representatives;
        let a = aut_group(&reps[0], &cat, &cat).unwrap();
        let b = aut_group(reps.last().unwrap(), &cat, &cat).unwrap();
        assert_eq!(a.presentation, b.presentation);
        let (_, _, z2) = identity_setup(2);
        let f2 = functor_exists(
            &RingHom::identity(z2.ring()),
            &EquivariantMap::identity(z2.module()),
            &z2,
            &z2,
        )
        .unwrap()
        .unwrap();
        assert!(aut_group(&f2, &z2, &z2).unwrap().is_trivial());
    }

    #[test]
    fn strong_functors() {
        let (p, _, cat) = identity_setup(2);
        let report = strong_functor_exists(&p, &cat, &cat).unwrap();
        assert!(report.exists);
        assert!(report.witness.as_ref().unwrap().is_zero());
        let c = strong_classify(&p, &cat, &cat).unwrap();
        assert_eq!(c.representatives.len(), 1);
        for f in &c.representatives {
            assert!(is_strong_functor(f, &cat, &cat).unwrap().passed());
        }
        assert!(strong_aut(&p, &cat).unwrap().is_trivial());
    }

    #[test]
    fn strong_round_trip_over_z3() {
        let m = regular(3);
        let p = RingHom::identity(m.ring());
        let source = ReducedAnnCategory::trivial(m.clone());
        for nu0 in crate::hochschild::all_multilinear(&m, 2) {
            let alpha = crate::hochschild::hoch_d(&nu0, &m).unwrap();
            let h = crate::hochschild::embed_to_maclane(&alpha).unwrap();
            let target = ReducedAnnCategory::new(m.clone(), h).unwrap();
            let report = strong_functor_exists(&p, &source, &target).unwrap();
            assert!(report.exists && report.maclane_class_zero);
            let nu = report.witness.unwrap();
            assert_eq!(crate::hochschild::hoch_d(&nu, &m).unwrap(), alpha);
            let f = strong_structure(&p, &nu, &source, &target).unwrap();
            assert!(is_strong_functor(&f, &source, &target).unwrap().passed());
        }
    }

    #[test]
    fn nonzero_sigma_blocks_strong_functors() {
        let m = regular(4);
        let p = RingHom::identity(m.ring());
        let mut g = Cochain2::zero(4);
        g.mu.set(&[1, 1], 1);
        let h = d2(&g, &m).unwrap();
        assert!(!h.sigma.is_zero());
        let target = ReducedAnnCategory::new(m.clone(), h).unwrap();
        let report = strong_functor_exists(&p, &ReducedAnnCategory::trivial(m), &target).unwrap();
        assert!(!report.sigma_star_zero && !report.exists);
        assert!(report.maclane_class_zero);
    }
}

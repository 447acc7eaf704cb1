//! The normalized Mac Lane cochain complex of a finite ring in degrees 1–3.
//!
//! A 3-cochain `(σ, α, λ, ρ)` is a cocycle when it satisfies the relations
//! M1–M10 below. The coboundary of a 2-cochain `(μ, ν)` is
//!
//! ```text
//! σ(x,y,z,t) = −μ(x,y) − μ(z,t) + μ(x+z,y+t) + μ(x,z) + μ(y,t) − μ(x+y,z+t)
//! α(x,y,z)   = x·ν(y,z) − ν(xy,z) + ν(x,yz) − ν(x,y)·z
//! λ(x,y,z)   = −ν(x,y) − ν(x,z) + ν(x,y+z) − x·μ(y,z) + μ(xy,xz)
//! ρ(x,y,z)   = ν(x,z) + ν(y,z) − ν(x+y,z) − μ(xz,yz) + μ(x,y)·z
//! ```
//!
//! and the coboundary of a 1-cochain `u` is
//! `μ(x,y) = u(x+y) − u(x) − u(y)`, `ν(x,y) = x·u(y) + u(x)·y − u(xy)`.
//!
//! M8 is used with the middle group `− σ(a,b,x,y) − σ(c,d,z,t) + σ(a+c,b+d,x+z,y+t)`;
//! with that sign, and the λ/ρ coboundary signs above, every coboundary
//! satisfies M1–M10 (see the tests and the acceptance suite).

use std::marker::PhantomData;

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Elem, EquivariantMap, FiniteBimodule, FiniteRing, RingHom};
use crate::cochain::{
    linear_map_from_forms, tuples, Access, Arith, CheckReport, Cochain1, Cochain2, Cochain3,
    CochainTables, Layout, LinForm, Symbolic, Table,
};
use crate::linalg::{
    quotient, AbelianGroupPresentation, LinalgError, LinearMap, Quotient, Subgroup,
};

pub const SIGMA: usize = 0;
pub const ALPHA: usize = 1;
pub const LAMBDA: usize = 2;
pub const RHO: usize = 3;
pub const MU: usize = 0;
pub const NU: usize = 1;
const U: usize = 0;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MacLaneError {
    #[error("cochain is not normalized: {component}{args:?} is nonzero")]
    NotNormalized {
        component: &'static str,
        args: Vec<Elem>,
    },
    #[error("cochain tables do not match a ring of order {0}")]
    Shape(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Which 3-cochains count as cocycles.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Z3Convention {
    /// Also require `λ` and `ρ` to vanish whenever an argument is zero.
    pub normalize_lambda_rho: bool,
}

/// The eight equational relations; M9 and M10 are vanishing conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    M1,
    M2,
    M3,
    M4,
    M5,
    M6,
    M7,
    M8,
}

impl Relation {
    pub const ALL: [Relation; 8] = [
        Relation::M1,
        Relation::M2,
        Relation::M3,
        Relation::M4,
        Relation::M5,
        Relation::M6,
        Relation::M7,
        Relation::M8,
    ];

    /// Number of ring arguments; M6/M7 take `(x,a,b,c,d)`, M8 takes `(a,b,c,d,x,y,z,t)`.
    pub fn arity(self) -> usize {
        match self {
            Relation::M6 | Relation::M7 => 5,
            Relation::M8 => 8,
            _ => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Relation::M1 => "M1",
            Relation::M2 => "M2",
            Relation::M3 => "M3",
            Relation::M4 => "M4",
            Relation::M5 => "M5",
            Relation::M6 => "M6",
            Relation::M7 => "M7",
            Relation::M8 => "M8",
        }
    }
}

/// Left-hand side of a relation at `args`; the relation holds there iff this is zero.
pub fn relation_value<A: Arith, H: Access<A::V>>(
    m: &A,
    r: &FiniteRing,
    h: &H,
    rel: Relation,
    args: &[Elem],
) -> A::V {
    let add = |x, y| r.add(x, y);
    let mul = |x, y| r.mul(x, y);
    let s = |a, b, c, d| h.get(SIGMA, &[a, b, c, d]);
    let al = |x, y, z| h.get(ALPHA, &[x, y, z]);
    let la = |x, y, z| h.get(LAMBDA, &[x, y, z]);
    let rh = |x, y, z| h.get(RHO, &[x, y, z]);
    match rel {
        Relation::M1 => {
            let [x, y, z, t] = [args[0], args[1], args[2], args[3]];
            m.sum([
                (1, m.left(x, &al(y, z, t))),
                (-1, al(mul(x, y), z, t)),
                (1, al(x, mul(y, z), t)),
                (-1, al(x, y, mul(z, t))),
                (1, m.right(&al(x, y, z), t)),
            ])
        }
        Relation::M2 => {
            let [x, y, z, t] = [args[0], args[1], args[2], args[3]];
            m.sum([
                (1, al(x, z, t)),
                (1, al(y, z, t)),
                (-1, al(add(x, y), z, t)),
                (1, rh(mul(x, z), mul(y, z), t)),
                (-1, rh(x, y, mul(z, t))),
                (1, m.right(&rh(x, y, z), t)),
            ])
        }
        Relation::M3 => {
            let [x, y, z, t] = [args[0], args[1], args[2], args[3]];
            m.sum([
                (-1, al(x, y, t)),
                (-1, al(x, z, t)),
                (1, al(x, add(y, z), t)),
                (1, m.left(x, &rh(y, z, t))),
                (-1, rh(mul(x, y), mul(x, z), t)),
                (-1, la(x, mul(y, t), mul(z, t))),
                (1, m.right(&la(x, y, z), t)),
            ])
        }
        Relation::M4 => {
            let [x, y, z, t] = [args[0], args[1], args[2], args[3]];
            m.sum([
                (1, al(x, y, z)),
                (1, al(x, y, t)),
                (-1, al(x, y, add(z, t))),
                (1, m.left(x, &la(y, z, t))),
                (-1, la(mul(x, y), z, t)),
                (1, la(x, mul(y, z), mul(y, t))),
            ])
        }
        Relation::M5 => {
            let [x, y, z, t] = [args[0], args[1], args[2], args[3]];
            m.sum([
                (1, la(x, z, t)),
                (1, la(y, z, t)),
                (-1, la(add(x, y), z, t)),
                (1, rh(x, y, z)),
                (1, rh(x, y, t)),
                (-1, rh(x, y, add(z, t))),
                (1, s(mul(x, z), mul(x, t), mul(y, z), mul(y, t))),
            ])
        }
        Relation::M6 => {
            let [x, a, b, c, d] = [args[0], args[1], args[2], args[3], args[4]];
            m.sum([
                (1, la(x, a, b)),
                (1, la(x, c, d)),
                (-1, la(x, add(a, c), add(b, d))),
                (-1, la(x, a, c)),
                (-1, la(x, b, d)),
                (1, la(x, add(a, b), add(c, d))),
                (-1, m.left(x, &s(a, b, c, d))),
                (1, s(mul(x, a), mul(x, b), mul(x, c), mul(x, d))),
            ])
        }
        Relation::M7 => {
            let [x, a, b, c, d] = [args[0], args[1], args[2], args[3], args[4]];
            m.sum([
                (1, rh(a, b, x)),
                (1, rh(c, d, x)),
                (-1, rh(add(a, c), add(b, d), x)),
                (-1, rh(a, c, x)),
                (-1, rh(b, d, x)),
                (1, rh(add(a, b), add(c, d), x)),
                (-1, s(mul(a, x), mul(b, x), mul(c, x), mul(d, x))),
                (1, m.right(&s(a, b, c, d), x)),
            ])
        }
        Relation::M8 => {
            let [a, b, c, d, x, y, z, t] = [
                args[0], args[1], args[2], args[3], args[4], args[5], args[6], args[7],
            ];
            m.sum([
                (1, s(a, b, c, d)),
                (1, s(x, y, z, t)),
                (-1, s(add(a, x), add(b, y), add(c, z), add(d, t))),
                (-1, s(a, b, x, y)),
                (-1, s(c, d, z, t)),
                (1, s(add(a, c), add(b, d), add(x, z), add(y, t))),
                (1, s(a, c, x, z)),
                (1, s(b, d, y, t)),
                (-1, s(add(a, b), add(c, d), add(x, y), add(z, t))),
            ])
        }
    }
}

/// Entries of σ pinned to zero by M10.
pub fn sigma_pinned(t: &[Elem], zero: Elem) -> bool {
    let z = |i: usize| t[i] == zero;
    (z(0) && z(1)) || (z(2) && z(3)) || (z(0) && z(2)) || (z(1) && z(3)) || (z(1) && z(2))
}

/// One component of `d2(g)` at `args`, for `g = (μ, ν)` given through `g`.
pub fn coboundary_entry<A: Arith, G: Access<A::V>>(
    m: &A,
    r: &FiniteRing,
    g: &G,
    component: usize,
    args: &[Elem],
) -> A::V {
    let add = |x, y| r.add(x, y);
    let mul = |x, y| r.mul(x, y);
    let mu = |x, y| g.get(MU, &[x, y]);
    let nu = |x, y| g.get(NU, &[x, y]);
    match component {
        SIGMA => {
            let [x, y, z, t] = [args[0], args[1], args[2], args[3]];
            m.sum([
                (-1, mu(x, y)),
                (-1, mu(z, t)),
                (1, mu(add(x, z), add(y, t))),
                (1, mu(x, z)),
                (1, mu(y, t)),
                (-1, mu(add(x, y), add(z, t))),
            ])
        }
        ALPHA => {
            let [x, y, z] = [args[0], args[1], args[2]];
            m.sum([
                (1, m.left(x, &nu(y, z))),
                (-1, nu(mul(x, y), z)),
                (1, nu(x, mul(y, z))),
                (-1, m.right(&nu(x, y), z)),
            ])
        }
        LAMBDA => {
            let [x, y, z] = [args[0], args[1], args[2]];
            m.sum([
                (-1, nu(x, y)),
                (-1, nu(x, z)),
                (1, nu(x, add(y, z))),
                (-1, m.left(x, &mu(y, z))),
                (1, mu(mul(x, y), mul(x, z))),
            ])
        }
        RHO => {
            let [x, y, z] = [args[0], args[1], args[2]];
            m.sum([
                (1, nu(x, z)),
                (1, nu(y, z)),
                (-1, nu(add(x, y), z)),
                (-1, mu(mul(x, z), mul(y, z))),
                (1, m.right(&mu(x, y), z)),
            ])
        }
        _ => panic!("a 3-cochain has four components"),
    }
}

/// One component of `d1(u)` at `(x, y)`.
pub fn degree1_entry<A: Arith, C: Access<A::V>>(
    m: &A,
    r: &FiniteRing,
    u: &C,
    component: usize,
    x: Elem,
    y: Elem,
) -> A::V {
    let u = |a| u.get(U, &[a]);
    match component {
        MU => m.sum([(1, u(r.add(x, y))), (-1, u(x)), (-1, u(y))]),
        NU => m.sum([
            (1, m.left(x, &u(y))),
            (1, m.right(&u(x), y)),
            (-1, u(r.mul(x, y))),
        ]),
        _ => panic!("a 2-cochain has two components"),
    }
}

fn check_shape(tables: &[&Table], n: usize) -> Result<(), MacLaneError> {
    if tables.iter().all(|t| t.ring_order() == n) {
        Ok(())
    } else {
        Err(MacLaneError::Shape(n))
    }
}

/// `d1(u) = (μ_u, ν_u)`.
pub fn d1(u: &Cochain1, m: &FiniteBimodule) -> Result<Cochain2, MacLaneError> {
    let r = m.ring();
    check_shape(&[&u.u], r.order())?;
    if let Some(args) = u.u.normalization_violation(r.zero()) {
        return Err(MacLaneError::NotNormalized {
            component: "u",
            args,
        });
    }
    let access = u.tables();
    let table = |c| {
        Table::from_fn(2, r.order(), |a| {
            degree1_entry(m, r, &access, c, a[0], a[1])
        })
    };
    Ok(Cochain2 {
        mu: table(MU),
        nu: table(NU),
    })
}

/// `d2(μ, ν) = (σ, α, λ, ρ)`.
pub fn d2(g: &Cochain2, m: &FiniteBimodule) -> Result<Cochain3, MacLaneError> {
    let r = m.ring();
    check_shape(&g.tables(), r.order())?;
    if let Some((component, args)) = g.normalization_violation(r.zero()) {
        return Err(MacLaneError::NotNormalized { component, args });
    }
    Ok(d2_unchecked(g, m))
}

pub(crate) fn d2_unchecked(g: &Cochain2, m: &FiniteBimodule) -> Cochain3 {
    let r = m.ring();
    let access = g.tables();
    let table =
        |c, arity| Table::from_fn(arity, r.order(), |a| coboundary_entry(m, r, &access, c, a));
    Cochain3 {
        sigma: table(SIGMA, 4),
        alpha: table(ALPHA, 3),
        lambda: table(LAMBDA, 3),
        rho: table(RHO, 3),
    }
}

/// `true` iff `g` is normalized and `d2(g)` vanishes.
pub fn is_z2(g: &Cochain2, m: &FiniteBimodule) -> bool {
    d2(g, m).map(|h| h.is_zero()).unwrap_or(false)
}

/// Relation check with the default convention.
pub fn is_z3(h: &Cochain3, m: &FiniteBimodule) -> CheckReport {
    is_z3_with(h, m, Z3Convention::default())
}

/// Evaluates every relation on every argument tuple; the report lists each
/// failing relation once, with the first failing tuple in row-major order.
pub fn is_z3_with(h: &Cochain3, m: &FiniteBimodule, convention: Z3Convention) -> CheckReport {
    let r = m.ring();
    let n = r.order();
    assert!(
        h.tables().iter().all(|t| t.ring_order() == n),
        "cochain is not shaped over this ring"
    );
    let access = h.tables();
    let mut report = CheckReport::default();
    for rel in Relation::ALL {
        let failure = if rel == Relation::M8 {
            first_m8_failure(&h.sigma, m)
        } else {
            tuples(rel.arity(), n).find(|args| relation_value(m, r, &access, rel, args) != 0)
        };
        if let Some(w) = failure {
            report.push(rel.name(), w);
        }
    }
    let zero = r.zero();
    if let Some(w) = tuples(3, n).find(|t| t.contains(&zero) && h.alpha.get(t) != 0) {
        report.push("M9", w);
    }
    if let Some(w) = tuples(4, n).find(|t| sigma_pinned(t, zero) && h.sigma.get(t) != 0) {
        report.push("M10", w);
    }
    if convention.normalize_lambda_rho {
        if let Some(w) = h.lambda.normalization_violation(zero) {
            report.push("lambda-normalization", w);
        }
        if let Some(w) = h.rho.normalization_violation(zero) {
            report.push("rho-normalization", w);
        }
    }
    report
}

// M8 involves σ alone and no actions, so it can be checked one invariant-factor
// coordinate at a time on plain integers.
fn first_m8_failure(sigma: &Table, m: &FiniteBimodule) -> Option<Vec<Elem>> {
    let r = m.ring();
    let n = r.order();
    let factors = m.invariant_factors();
    let coords: Vec<Vec<u64>> = (0..m.size()).map(|a| m.coords(a)).collect();
    let planes: Vec<Vec<i64>> = (0..factors.len())
        .map(|c| {
            sigma
                .values()
                .iter()
                .map(|&v| coords[v][c] as i64)
                .collect()
        })
        .collect();
    let add: Vec<usize> = (0..n * n).map(|i| r.add(i / n, i % n)).collect();
    let plus = |a: usize, b: usize| add[a * n + b];
    let idx = |a: usize, b: usize, c: usize, d: usize| ((a * n + b) * n + c) * n + d;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let abcd = idx(a, b, c, d);
                    for x in 0..n {
                        let (ax, ac) = (plus(a, x), plus(a, c));
                        for y in 0..n {
                            let (by, bd) = (plus(b, y), plus(b, d));
                            let abxy = idx(a, b, x, y);
                            for z in 0..n {
                                let (cz, xz) = (plus(c, z), plus(x, z));
                                let acxz = idx(a, c, x, z);
                                for t in 0..n {
                                    let dt = plus(d, t);
                                    let idx_xyzt = idx(x, y, z, t);
                                    let shifted = idx(ax, by, cz, dt);
                                    let cdzt = idx(c, d, z, t);
                                    let mixed = idx(ac, bd, xz, plus(y, t));
                                    let bdyt = idx(b, d, y, t);
                                    let rows = idx(plus(a, b), plus(c, d), plus(x, y), plus(z, t));
                                    for (p, &f) in planes.iter().zip(factors) {
                                        let v =
                                            p[abcd] + p[idx_xyzt] - p[shifted] - p[abxy] - p[cdzt]
                                                + p[mixed]
                                                + p[acxz]
                                                + p[bdyt]
                                                - p[rows];
                                        if v.rem_euclid(f as i64) != 0 {
                                            return Some(vec![a, b, c, d, x, y, z, t]);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// Precomposition of every component with `p`; values stay in the target module.
pub fn pullback(p: &RingHom, h: &Cochain3) -> Cochain3 {
    h.pullback(p)
}

/// Postcomposition of every component with `q`.
pub fn pushforward(q: &EquivariantMap, h: &Cochain3) -> Cochain3 {
    h.pushforward(q)
}

/// Coordinates of normalized 1-cochains.
pub fn layout1(m: &FiniteBimodule) -> Layout {
    Layout::normalized(m.ring(), m, &[1])
}

/// Coordinates of normalized 2-cochains `(μ, ν)`.
pub fn layout2(m: &FiniteBimodule) -> Layout {
    Layout::normalized(m.ring(), m, &[2, 2])
}

/// Coordinates of 3-cochains satisfying M9, M10 (and the λ/ρ normalization if requested).
pub fn layout3(m: &FiniteBimodule, convention: Z3Convention) -> Layout {
    let zero = m.ring().zero();
    let sigma = move |t: &[Elem]| !sigma_pinned(t, zero);
    let normalized = move |t: &[Elem]| !t.contains(&zero);
    let any = |_: &[Elem]| true;
    let side: &dyn Fn(&[Elem]) -> bool = if convention.normalize_lambda_rho {
        &normalized
    } else {
        &any
    };
    Layout::new(
        m.ring(),
        m,
        &[(4, &sigma), (3, &normalized), (3, side), (3, side)],
    )
}

/// Coordinates of arbitrary 3-cochains.
pub fn layout3_full(m: &FiniteBimodule) -> Layout {
    Layout::full(m.ring(), m, &[4, 3, 3, 3])
}

/// `d1` as a linear map between normalized cochain groups.
pub fn d1_map(m: &FiniteBimodule) -> LinearMap {
    let r = m.ring();
    let sym = Symbolic::new(m);
    let source = layout1(m);
    let target = layout2(m);
    let forms: Vec<LinForm> = target
        .entries()
        .iter()
        .map(|(c, a)| degree1_entry(&sym, r, &source, *c, a[0], a[1]))
        .collect();
    linear_map_from_forms(&source, m, forms)
}

/// `d2` as a linear map from normalized 2-cochains into the given 3-cochain layout.
pub fn d2_map(m: &FiniteBimodule, target: &Layout) -> LinearMap {
    let r = m.ring();
    let sym = Symbolic::new(m);
    let source = layout2(m);
    let forms: Vec<LinForm> = target
        .entries()
        .iter()
        .map(|(c, a)| coboundary_entry(&sym, r, &source, *c, a))
        .collect();
    linear_map_from_forms(&source, m, forms)
}

/// The relations M1–M8 as a linear map on [`layout3`]; its kernel is Z³.
pub fn relations_map(m: &FiniteBimodule, convention: Z3Convention) -> LinearMap {
    let r = m.ring();
    let sym = Symbolic::new(m);
    let source = layout3(m, convention);
    let mut forms = Vec::new();
    for rel in Relation::ALL {
        for args in tuples(rel.arity(), r.order()) {
            let f = relation_value(&sym, r, &source, rel, &args);
            if !f.0.is_empty() {
                forms.push(f);
            }
        }
    }
    linear_map_from_forms(&source, m, forms)
}

/// A cohomology group `Z/B` with one representative cocycle per invariant factor.
#[derive(Debug, Clone)]
pub struct CohomologyGroup<C> {
    pub presentation: AbelianGroupPresentation,
    pub representatives: Vec<C>,
    /// Order of the cocycle group Z.
    pub cocycles_order: BigUint,
    /// Order of the coboundary group B.
    pub coboundaries_order: BigUint,
    quotient: Quotient,
    layout: Layout,
    module: FiniteBimodule,
    _kind: PhantomData<C>,
}

impl<C: CochainTables> CohomologyGroup<C> {
    pub(crate) fn new(
        module: &FiniteBimodule,
        layout: Layout,
        cocycles: &Subgroup,
        coboundaries: &Subgroup,
    ) -> Result<Self, LinalgError> {
        let quotient = quotient(cocycles, coboundaries)?;
        let representatives = quotient
            .representatives
            .iter()
            .map(|v| C::from_table_vec(layout.decode(v, module)))
            .collect();
        Ok(CohomologyGroup {
            presentation: quotient.presentation.clone(),
            representatives,
            cocycles_order: cocycles.order(),
            coboundaries_order: coboundaries.order(),
            quotient,
            layout,
            module: module.clone(),
            _kind: PhantomData,
        })
    }

    pub fn order(&self) -> BigUint {
        self.presentation.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.presentation.is_trivial()
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    /// Class coordinates of a cochain, or `None` if it is not a cocycle of this complex.
    pub fn class_of(&self, c: &C) -> Option<Vec<u64>> {
        let v = self.layout.encode(&c.table_refs(), &self.module).ok()?;
        self.quotient.class_of(&v).ok()
    }

    /// The cocycle `Σ coords[i] · representatives[i]`.
    pub fn element(&self, coords: &[u64]) -> C {
        C::from_table_vec(
            self.layout
                .decode(&self.quotient.element(coords), &self.module),
        )
    }

    /// Coordinates of every class, in lexicographic order.
    pub fn classes(&self) -> Vec<Vec<u64>> {
        self.quotient.all_classes()
    }
}

/// Z¹: normalized 1-cochains with `d1(u) = 0` (additive derivations).
pub fn first_cocycles(m: &FiniteBimodule) -> CohomologyGroup<Cochain1> {
    let d = d1_map(m);
    CohomologyGroup::new(m, layout1(m), &d.kernel(), &Subgroup::zero(d.domain()))
        .expect("zero subgroup")
}

/// H² = ker d2 / im d1.
pub fn second_cohomology(m: &FiniteBimodule) -> Result<CohomologyGroup<Cochain2>, MacLaneError> {
    let z = d2_map(m, &layout3(m, Z3Convention::default())).kernel();
    let b = d1_map(m).image();
    Ok(CohomologyGroup::new(m, layout2(m), &z, &b)?)
}

/// H³ = ker(M1–M10) / im d2.
pub fn third_cohomology(
    m: &FiniteBimodule,
    convention: Z3Convention,
) -> Result<CohomologyGroup<Cochain3>, MacLaneError> {
    let layout = layout3(m, convention);
    let z = relations_map(m, convention).kernel();
    let b = d2_map(m, &layout).image();
    Ok(CohomologyGroup::new(m, layout, &z, &b)?)
}

/// Some `g` with `d2(g) = h`, or `None` when `h` is not a coboundary.
pub fn coboundary_witness(h: &Cochain3, m: &FiniteBimodule) -> Option<Cochain2> {
    let layout = layout3_full(m);
    let target = layout
        .encode(&h.tables(), m)
        .expect("full layout pins nothing");
    let map = d2_map(m, &layout);
    let x = map.solve(&target)?;
    let g = Cochain2::from_table_vec(layout2(m).decode(&x, m));
    debug_assert_eq!(&d2_unchecked(&g, m), h);
    Some(g)
}

/// Every normalized 2-cochain, in coordinate order. Exponential; for tiny carriers.
pub fn all_cochains2(m: &FiniteBimodule) -> Vec<Cochain2> {
    let layout = layout2(m);
    layout
        .group()
        .elements()
        .map(|v| Cochain2::from_table_vec(layout.decode(&v, m)))
        .collect()
}

/// Every normalized 1-cochain, in coordinate order.
pub fn all_cochains1(m: &FiniteBimodule) -> Vec<Cochain1> {
    let layout = layout1(m);
    layout
        .group()
        .elements()
        .map(|v| Cochain1::from_table_vec(layout.decode(&v, m)))
        .collect()
}

/// A uniformly random normalized 2-cochain drawn from `next(bound)`.
pub fn random_cochain2(m: &FiniteBimodule, mut next: impl FnMut(u64) -> u64) -> Cochain2 {
    let layout = layout2(m);
    let v: Vec<i64> = layout
        .group()
        .moduli()
        .iter()
        .map(|&d| next(d) as i64)
        .collect();
    Cochain2::from_table_vec(layout.decode(&v, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FiniteRing;

    fn regular(n: usize) -> FiniteBimodule {
        FiniteBimodule::regular(&FiniteRing::cyclic(n))
    }

    fn reduction_module() -> FiniteBimodule {
        regular(2)
            .pullback(&RingHom::reduction(4, 2).unwrap())
            .unwrap()
    }

    fn g_with(
        n: usize,
        mu: &[((usize, usize), usize)],
        nu: &[((usize, usize), usize)],
    ) -> Cochain2 {
        let mut g = Cochain2::zero(n);
        for &((x, y), v) in mu {
            g.mu.set(&[x, y], v);
        }
        for &((x, y), v) in nu {
            g.nu.set(&[x, y], v);
        }
        g
    }

    #[test]
    fn zero_cochain_is_a_cocycle() {
        for n in 2..=4 {
            assert!(is_z3(&Cochain3::zero(n), &regular(n)).passed());
        }
    }

    #[test]
    fn alpha_at_zero_fails_m9() {
        let m = regular(2);
        let mut h = Cochain3::zero(2);
        h.alpha.set(&[0, 1, 1], 1);
        let report = is_z3(&h, &m);
        let m9 = report.failures.iter().find(|f| f.relation == "M9").unwrap();
        assert_eq!(m9.witness, vec![0, 1, 1]);
    }

    #[test]
    fn sigma_pinned_entries_fail_m10() {
        let m = regular(3);
        let mut h = Cochain3::zero(3);
        h.sigma.set(&[1, 0, 0, 2], 1);
        let report = is_z3(&h, &m);
        assert!(report.failed_relations().contains(&"M10"));
    }

    #[test]
    fn d2_examples_over_z2() {
        let m = regular(2);
        assert!(d2(&g_with(2, &[((1, 1), 1)], &[]), &m).unwrap().is_zero());
        assert!(d2(&g_with(2, &[], &[((1, 1), 1)]), &m).unwrap().is_zero());
        assert!(d2(&Cochain2::zero(2), &m).unwrap().is_zero());
    }

    #[test]
    fn d2_rejects_unnormalized_input() {
        let m = regular(2);
        let err = d2(&g_with(2, &[((0, 1), 1)], &[]), &m).unwrap_err();
        assert_eq!(
            err,
            MacLaneError::NotNormalized {
                component: "mu",
                args: vec![0, 1]
            }
        );
    }

    #[test]
    fn d1_examples() {
        let m = regular(2);
        let g = d1(&Cochain1::from_values(vec![0, 1]), &m).unwrap();
        assert!(g.mu.is_zero());
        assert_eq!(g.nu.get(&[1, 1]), 1);

        let m4 = regular(4);
        let g = d1(&Cochain1::from_values(vec![0, 1, 0, 1]), &m4).unwrap();
        assert_eq!(g.mu.get(&[1, 1]), 2);
        assert_eq!(g.nu.get(&[1, 1]), 1);
        assert!(d1(&Cochain1::zero(4), &m4).unwrap().is_zero());
    }

    #[test]
    fn complex_identity_is_exhaustive_on_small_instances() {
        for m in [regular(2), regular(3), reduction_module()] {
            for u in all_cochains1(&m) {
                let g = d1(&u, &m).unwrap();
                assert!(d2(&g, &m).unwrap().is_zero(), "d2 d1 u != 0 for {u:?}");
                assert!(is_z2(&g, &m));
            }
        }
    }

    #[test]
    fn coboundaries_are_cocycles_over_z2_and_z3() {
        for m in [regular(2), regular(3)] {
            for g in all_cochains2(&m) {
                let h = d2(&g, &m).unwrap();
                assert!(is_z3(&h, &m).passed());
            }
        }
    }

    #[test]
    fn linear_maps_agree_with_pointwise_formulas() {
        let m = regular(3);
        let l2 = layout2(&m);
        let l3 = layout3_full(&m);
        let map = d2_map(&m, &l3);
        let mut seed = 7u64;
        for _ in 0..20 {
            let g = random_cochain2(&m, |b| {
                seed = seed
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                (seed >> 33) % b
            });
            let x = l2.encode(&g.table_refs(), &m).unwrap();
            let h = Cochain3::from_table_vec(l3.decode(&map.apply(&x), &m));
            assert_eq!(h, d2(&g, &m).unwrap());
        }
    }

    #[test]
    fn h2_of_z2_has_order_two() {
        let h = second_cohomology(&regular(2)).unwrap();
        assert_eq!(h.presentation.torsion, vec![2]);
        assert_eq!(h.cocycles_order, BigUint::from(4u32));
        assert_eq!(h.coboundaries_order, BigUint::from(2u32));
        for rep in &h.representatives {
            assert!(is_z2(rep, &regular(2)));
        }
    }

    #[test]
    fn z1_of_z2_is_trivial() {
        assert!(first_cocycles(&regular(2)).is_trivial());
    }

    #[test]
    fn h3_under_both_conventions() {
        let m = regular(2);
        let plain = third_cohomology(&m, Z3Convention::default()).unwrap();
        assert_eq!(plain.presentation.torsion, vec![2]);
        assert_eq!(plain.cocycles_order, BigUint::from(2u32));
        let normalized = third_cohomology(
            &m,
            Z3Convention {
                normalize_lambda_rho: true,
            },
        )
        .unwrap();
        assert!(normalized.is_trivial());
        for rep in &plain.representatives {
            assert!(is_z3(rep, &m).passed());
            assert!(coboundary_witness(rep, &m).is_none());
        }
        let m3 = regular(3);
        assert!(third_cohomology(
            &m3,
            Z3Convention {
                normalize_lambda_rho: true
            }
        )
        .unwrap()
        .is_trivial());
    }

    #[test]
    fn coboundary_witness_round_trip_over_z6() {
        let m = regular(6);
        assert_eq!(
            coboundary_witness(&Cochain3::zero(6), &m),
            Some(Cochain2::zero(6))
        );
        let mut seed = 11u64;
        for _ in 0..3 {
            let g0 = random_cochain2(&m, |b| {
                seed = seed
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                (seed >> 33) % b
            });
            let h = d2(&g0, &m).unwrap();
            let g = coboundary_witness(&h, &m).expect("coboundary has a witness");
            assert_eq!(d2(&g, &m).unwrap(), h);
        }
    }

    #[test]
    fn pullback_along_reduction_preserves_cocycles() {
        let target = regular(2);
        let p = RingHom::reduction(4, 2).unwrap();
        let source_module = target.pullback(&p).unwrap();
        let h3 = third_cohomology(&target, Z3Convention::default()).unwrap();
        for rep in &h3.representatives {
            let pulled = pullback(&p, rep);
            assert!(is_z3(&pulled, &source_module).passed());
        }
        let id = RingHom::identity(target.ring());
        let h = &h3.representatives[0];
        assert_eq!(&pullback(&id, h), h);
        let zero = EquivariantMap::zero(id, target.clone(), target.clone()).unwrap();
        assert!(pushforward(&zero, h).is_zero());
    }

    #[test]
    fn cohomology_is_invariant_under_relabeling() {
        let r = FiniteRing::cyclic(3);
        let m = FiniteBimodule::regular(&r);
        let perm = [2, 0, 1];
        let relabeled = m.relabeled_ring(&perm).unwrap();
        let a = second_cohomology(&m).unwrap();
        let b = second_cohomology(&relabeled).unwrap();
        assert_eq!(a.presentation, b.presentation);
        assert_eq!(
            first_cocycles(&m).presentation,
            first_cocycles(&relabeled).presentation
        );
        let c = third_cohomology(&m, Z3Convention::default()).unwrap();
        let d = third_cohomology(&relabeled, Z3Convention::default()).unwrap();
        assert_eq!(c.presentation, d.presentation);
    }
}

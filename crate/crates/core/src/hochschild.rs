//! Hochschild cochains of a finite ring over ℤ in degrees 1–3.
//!
//! Cochains are multilinear tables `Rⁿ → M`. The differentials are
//! `(δu)(x,y) = x·u(y) − u(xy) + u(x)·y` and
//! `(δν)(x,y,z) = x·ν(y,z) − ν(xy,z) + ν(x,yz) − ν(x,y)·z`; a 3-cochain is a
//! cocycle when it satisfies M1. The complex starts in degree 1, so the first
//! cohomology is the group of additive derivations.

use num_bigint::BigUint;
use thiserror::Error;

use crate::algebra::{Elem, FiniteBimodule, FiniteRing};
use crate::cochain::{
    linear_map_from_forms, tuples, Access, Arith, Cochain3, CochainTables, Layout, LinForm,
    Symbolic, Table,
};
use crate::linalg::{CyclicProduct, LinearMap, Subgroup};
use crate::maclane::{
    coboundary_entry, degree1_entry, relation_value, CohomologyGroup, Relation, ALPHA, NU,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HochError {
    /// `args` is `(…, x, y, …)` with `x, y` at `position`, `position + 1`:
    /// the value at `x + y` differs from the sum of the values at `x` and `y`.
    #[error("cochain is not additive in argument {position}: witness {args:?}")]
    NotMultilinear { position: usize, args: Vec<Elem> },
    #[error("degree {0} is outside the supported range")]
    Degree(usize),
    #[error("table is shaped over a ring of order {found}, expected {expected}")]
    Shape { expected: usize, found: usize },
}

/// A multilinear cochain of degree 1, 2 or 3.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HochCochain {
    table: Table,
}

impl HochCochain {
    pub fn new(table: Table, m: &FiniteBimodule) -> Result<Self, HochError> {
        let degree = table.arity();
        if !(1..=3).contains(&degree) {
            return Err(HochError::Degree(degree));
        }
        let n = m.ring().order();
        if table.ring_order() != n {
            return Err(HochError::Shape {
                expected: n,
                found: table.ring_order(),
            });
        }
        if let Some((position, args)) = multilinearity_violation(&table, m) {
            return Err(HochError::NotMultilinear { position, args });
        }
        Ok(HochCochain { table })
    }

    pub fn zero(degree: usize, n: usize) -> Self {
        assert!((1..=3).contains(&degree));
        HochCochain {
            table: Table::zeros(degree, n),
        }
    }

    pub fn degree(&self) -> usize {
        self.table.arity()
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn into_table(self) -> Table {
        self.table
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_zero()
    }
}

impl CochainTables for HochCochain {
    fn table_refs(&self) -> Vec<&Table> {
        vec![&self.table]
    }

    fn from_table_vec(mut t: Vec<Table>) -> Self {
        HochCochain { table: t.remove(0) }
    }
}

/// First argument position and tuple where additivity fails.
pub fn multilinearity_violation(t: &Table, m: &FiniteBimodule) -> Option<(usize, Vec<Elem>)> {
    let r = m.ring();
    let k = t.arity();
    for position in 0..k {
        for args in tuples(k + 1, r.order()) {
            let at = |v: Elem| {
                let mut a = args[..position].to_vec();
                a.push(v);
                a.extend_from_slice(&args[position + 2..]);
                t.get(&a)
            };
            let (x, y) = (args[position], args[position + 1]);
            if at(r.add(x, y)) != m.add(at(x), at(y)) {
                return Some((position, args));
            }
        }
    }
    None
}

// Presents a single table as one component of a Mac Lane cochain.
struct As<'a, T> {
    inner: &'a T,
    component: usize,
}

impl<V: Default, T: Access<V>> Access<V> for As<'_, T> {
    fn get(&self, component: usize, args: &[Elem]) -> V {
        if component == self.component {
            self.inner.get(0, args)
        } else {
            V::default()
        }
    }
}

fn differential_entry<A, T>(m: &A, r: &FiniteRing, f: &T, degree: usize, args: &[Elem]) -> A::V
where
    A: Arith,
    A::V: Default,
    T: Access<A::V>,
{
    match degree {
        1 => degree1_entry(
            m,
            r,
            &As {
                inner: f,
                component: 0,
            },
            NU,
            args[0],
            args[1],
        ),
        2 => coboundary_entry(
            m,
            r,
            &As {
                inner: f,
                component: NU,
            },
            ALPHA,
            args,
        ),
        _ => panic!("the differential is defined on degrees 1 and 2"),
    }
}

/// The Hochschild differential on degrees 1 and 2.
pub fn hoch_d(f: &HochCochain, m: &FiniteBimodule) -> Result<HochCochain, HochError> {
    let degree = f.degree();
    if degree > 2 {
        return Err(HochError::Degree(degree));
    }
    let r = m.ring();
    let access = vec![&f.table];
    let table = Table::from_fn(degree + 1, r.order(), |a| {
        differential_entry(m, r, &access, degree, a)
    });
    debug_assert!(multilinearity_violation(&table, m).is_none());
    Ok(HochCochain { table })
}

/// `true` iff `f` is a Hochschild cocycle (M1 in degree 3).
pub fn is_hoch_cocycle(f: &HochCochain, m: &FiniteBimodule) -> bool {
    let r = m.ring();
    match f.degree() {
        3 => {
            let access = vec![&f.table];
            let h = As {
                inner: &access,
                component: ALPHA,
            };
            tuples(4, r.order()).all(|a| relation_value(m, r, &h, Relation::M1, &a) == 0)
        }
        _ => hoch_d(f, m).map(|g| g.is_zero()).unwrap_or(false),
    }
}

/// `(σ, α, λ, ρ) = (0, f, 0, 0)`.
pub fn embed_to_maclane(f: &HochCochain) -> Result<Cochain3, HochError> {
    if f.degree() != 3 {
        return Err(HochError::Degree(f.degree()));
    }
    let mut h = Cochain3::zero(f.table.ring_order());
    h.alpha = f.table.clone();
    Ok(h)
}

fn layout(m: &FiniteBimodule, degree: usize) -> Layout {
    Layout::normalized(m.ring(), m, &[degree])
}

// Additivity defects in every argument; the kernel is the multilinear cochains.
fn defect_forms(m: &FiniteBimodule, source: &Layout, degree: usize) -> Vec<LinForm> {
    let r = m.ring();
    let sym = Symbolic::new(m);
    let mut forms = Vec::new();
    for position in 0..degree {
        for args in tuples(degree + 1, r.order()) {
            let at = |v: Elem| {
                let mut a = args[..position].to_vec();
                a.push(v);
                a.extend_from_slice(&args[position + 2..]);
                source.get(0, &a)
            };
            let (x, y) = (args[position], args[position + 1]);
            let f = sym.sum([(1, at(r.add(x, y))), (-1, at(x)), (-1, at(y))]);
            if !f.0.is_empty() {
                forms.push(f);
            }
        }
    }
    forms
}

fn cocycle_forms(m: &FiniteBimodule, source: &Layout, degree: usize) -> Vec<LinForm> {
    let r = m.ring();
    let sym = Symbolic::new(m);
    match degree {
        3 => {
            let h = As {
                inner: source,
                component: ALPHA,
            };
            tuples(4, r.order())
                .map(|a| relation_value(&sym, r, &h, Relation::M1, &a))
                .collect()
        }
        // the differential of a normalized cochain is normalized
        _ => layout(m, degree + 1)
            .entries()
            .iter()
            .map(|(_, a)| differential_entry(&sym, r, source, degree, a))
            .collect(),
    }
}

/// Multilinear cochains of the given degree, as a subgroup of normalized tables.
pub fn multilinear_cochains(m: &FiniteBimodule, degree: usize) -> Subgroup {
    let source = layout(m, degree);
    linear_map_from_forms(&source, m, defect_forms(m, &source, degree)).kernel()
}

/// The differential from degree `degree` restricted to multilinear cochains,
/// as a map out of the free coordinates on the generators of that subgroup.
fn restricted_differential(m: &FiniteBimodule, degree: usize) -> (Subgroup, LinearMap) {
    let source = layout(m, degree);
    let target = layout(m, degree + 1);
    let d = linear_map_from_forms(&source, m, cocycle_forms(m, &source, degree));
    let multilinear = multilinear_cochains(m, degree);
    let gens = multilinear.generators();
    let exponent = source.group().exponent().max(1);
    let columns: Vec<Vec<i64>> = gens.iter().map(|g| d.apply(g)).collect();
    let map = LinearMap::from_columns(
        CyclicProduct::new(vec![exponent; gens.len()]),
        target.group(),
        &columns,
    )
    .expect("generator images are killed by the exponent");
    (multilinear, map)
}

/// `H^degree_Hochs(R, M)` for degree 1, 2 or 3.
pub fn hoch_cohomology_group(
    m: &FiniteBimodule,
    degree: usize,
) -> Result<CohomologyGroup<HochCochain>, HochError> {
    if !(1..=3).contains(&degree) {
        return Err(HochError::Degree(degree));
    }
    let source = layout(m, degree);
    let mut forms = defect_forms(m, &source, degree);
    forms.extend(cocycle_forms(m, &source, degree));
    let cocycles = linear_map_from_forms(&source, m, forms).kernel();
    let coboundaries = if degree == 1 {
        Subgroup::zero(&source.group())
    } else {
        restricted_differential(m, degree - 1).1.image()
    };
    Ok(CohomologyGroup::new(m, source, &cocycles, &coboundaries)
        .expect("coboundaries are cocycles"))
}

/// Some multilinear `g` of degree `f.degree() − 1` with `δg = f`, or `None`.
pub fn hoch_coboundary_witness(f: &HochCochain, m: &FiniteBimodule) -> Option<HochCochain> {
    let degree = f.degree();
    if degree < 2 {
        return if f.is_zero() { Some(f.clone()) } else { None };
    }
    let target = layout(m, degree).encode(&[&f.table], m).ok()?;
    let (multilinear, map) = restricted_differential(m, degree - 1);
    let coefficients = map.solve(&target)?;
    let ambient = multilinear.ambient();
    let mut v = ambient.zero();
    for (c, g) in coefficients.iter().zip(multilinear.generators()) {
        v = ambient.add(&v, &ambient.scale(*c, &g));
    }
    let g = HochCochain::from_table_vec(layout(m, degree - 1).decode(&v, m));
    debug_assert_eq!(hoch_d(&g, m).ok().as_ref(), Some(f));
    Some(g)
}

/// Every multilinear cochain of the given degree. Exponential; for tiny carriers.
pub fn all_multilinear(m: &FiniteBimodule, degree: usize) -> Vec<HochCochain> {
    let source = layout(m, degree);
    multilinear_cochains(m, degree)
        .elements()
        .into_iter()
        .map(|v| HochCochain::from_table_vec(source.decode(&v, m)))
        .collect()
}

/// Order of `Z^degree_Hochs`, convenient for bookkeeping checks.
pub fn hoch_cocycles_order(m: &FiniteBimodule, degree: usize) -> Result<BigUint, HochError> {
    Ok(hoch_cohomology_group(m, degree)?.cocycles_order)
}

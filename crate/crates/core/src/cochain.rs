//! Cochain tables, their coordinate layouts, and the arithmetic abstraction
//! that lets one formula serve both as a pointwise evaluator and as the
//! builder of an integer linear system.

use serde::Serialize;

use crate::algebra::{Elem, EquivariantMap, FiniteBimodule, FiniteRing, RingHom};
use crate::linalg::{CyclicProduct, LinearMap};

/// A function `R^arity → M` stored densely in row-major argument order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Table {
    arity: usize,
    n: usize,
    values: Vec<Elem>,
}

impl Table {
    pub fn zeros(arity: usize, n: usize) -> Self {
        Table {
            arity,
            n,
            values: vec![0; n.pow(arity as u32)],
        }
    }

    pub fn from_fn(arity: usize, n: usize, mut f: impl FnMut(&[Elem]) -> Elem) -> Self {
        let values = tuples(arity, n).map(|t| f(&t)).collect();
        Table { arity, n, values }
    }

    pub fn from_values(arity: usize, n: usize, values: Vec<Elem>) -> Option<Self> {
        (values.len() == n.pow(arity as u32)).then_some(Table { arity, n, values })
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of ring elements the arguments range over.
    #[inline]
    pub fn ring_order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn index(&self, args: &[Elem]) -> usize {
        debug_assert_eq!(args.len(), self.arity);
        args.iter().fold(0, |acc, &a| acc * self.n + a)
    }

    #[inline]
    pub fn get(&self, args: &[Elem]) -> Elem {
        self.values[self.index(args)]
    }

    pub fn set(&mut self, args: &[Elem], v: Elem) {
        let i = self.index(args);
        self.values[i] = v;
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn map(&self, f: impl Fn(Elem) -> Elem) -> Table {
        Table {
            arity: self.arity,
            n: self.n,
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn zip_with(&self, other: &Table, f: impl Fn(Elem, Elem) -> Elem) -> Table {
        assert_eq!(
            (self.arity, self.n),
            (other.arity, other.n),
            "table shapes differ"
        );
        Table {
            arity: self.arity,
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// First argument tuple that has a zero argument but a nonzero value.
    pub fn normalization_violation(&self, ring_zero: Elem) -> Option<Vec<Elem>> {
        tuples(self.arity, self.n).find(|t| t.contains(&ring_zero) && self.get(t) != 0)
    }

    /// Precomposition with a ring map on every argument.
    pub fn precompose(&self, p: &RingHom) -> Table {
        Table::from_fn(self.arity, p.source().order(), |t| {
            let mapped: Vec<Elem> = t.iter().map(|&x| p.apply(x)).collect();
            self.get(&mapped)
        })
    }
}

/// All argument tuples in row-major order (last argument fastest).
pub fn tuples(arity: usize, n: usize) -> impl Iterator<Item = Vec<Elem>> {
    let total = n.pow(arity as u32);
    (0..total).map(move |mut idx| {
        let mut t = vec![0; arity];
        for slot in t.iter_mut().rev() {
            *slot = idx % n;
            idx /= n;
        }
        t
    })
}

/// A normalized 1-cochain `u: R → M`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cochain1 {
    pub u: Table,
}

/// A 2-cochain `(μ, ν)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cochain2 {
    pub mu: Table,
    pub nu: Table,
}

/// A 3-cochain `(σ, α, λ, ρ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cochain3 {
    pub sigma: Table,
    pub alpha: Table,
    pub lambda: Table,
    pub rho: Table,
}

impl Cochain1 {
    pub fn zero(n: usize) -> Self {
        Cochain1 {
            u: Table::zeros(1, n),
        }
    }

    pub fn from_values(values: Vec<Elem>) -> Self {
        let n = values.len();
        Cochain1 {
            u: Table::from_values(1, n, values).expect("one value per element"),
        }
    }

    pub fn tables(&self) -> [&Table; 1] {
        [&self.u]
    }

    pub fn add(&self, other: &Self, m: &FiniteBimodule) -> Self {
        Cochain1 {
            u: self.u.zip_with(&other.u, |a, b| m.add(a, b)),
        }
    }

    pub fn neg(&self, m: &FiniteBimodule) -> Self {
        Cochain1 {
            u: self.u.map(|a| m.neg(a)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero()
    }
}

impl Cochain2 {
    pub fn zero(n: usize) -> Self {
        Cochain2 {
            mu: Table::zeros(2, n),
            nu: Table::zeros(2, n),
        }
    }

    pub fn tables(&self) -> [&Table; 2] {
        [&self.mu, &self.nu]
    }

    pub fn add(&self, other: &Self, m: &FiniteBimodule) -> Self {
        Cochain2 {
            mu: self.mu.zip_with(&other.mu, |a, b| m.add(a, b)),
            nu: self.nu.zip_with(&other.nu, |a, b| m.add(a, b)),
        }
    }

    pub fn sub(&self, other: &Self, m: &FiniteBimodule) -> Self {
        self.add(&other.neg(m), m)
    }

    pub fn neg(&self, m: &FiniteBimodule) -> Self {
        Cochain2 {
            mu: self.mu.map(|a| m.neg(a)),
            nu: self.nu.map(|a| m.neg(a)),
        }
    }

    /// `(μ, ν) ↦ (−μ, ν)`, the change between associated functions and cocycle coordinates.
    pub fn negate_mu(&self, m: &FiniteBimodule) -> Self {
        Cochain2 {
            mu: self.mu.map(|a| m.neg(a)),
            nu: self.nu.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mu.is_zero() && self.nu.is_zero()
    }

    /// First `(component, args)` with a zero argument and nonzero value.
    pub fn normalization_violation(&self, ring_zero: Elem) -> Option<(&'static str, Vec<Elem>)> {
        if let Some(t) = self.mu.normalization_violation(ring_zero) {
            return Some(("mu", t));
        }
        self.nu
            .normalization_violation(ring_zero)
            .map(|t| ("nu", t))
    }
}

impl Cochain3 {
    pub fn zero(n: usize) -> Self {
        Cochain3 {
            sigma: Table::zeros(4, n),
            alpha: Table::zeros(3, n),
            lambda: Table::zeros(3, n),
            rho: Table::zeros(3, n),
        }
    }

    pub fn tables(&self) -> [&Table; 4] {
        [&self.sigma, &self.alpha, &self.lambda, &self.rho]
    }

    fn from_tables(mut t: Vec<Table>) -> Self {
        let rho = t.pop().unwrap();
        let lambda = t.pop().unwrap();
        let alpha = t.pop().unwrap();
        let sigma = t.pop().unwrap();
        Cochain3 {
            sigma,
            alpha,
            lambda,
            rho,
        }
    }

    pub fn map(&self, f: impl Fn(Elem) -> Elem) -> Self {
        Cochain3::from_tables(self.tables().iter().map(|t| t.map(&f)).collect())
    }

    pub fn add(&self, other: &Self, m: &FiniteBimodule) -> Self {
        Cochain3::from_tables(
            self.tables()
                .iter()
                .zip(other.tables())
                .map(|(a, b)| a.zip_with(b, |x, y| m.add(x, y)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self, m: &FiniteBimodule) -> Self {
        Cochain3::from_tables(
            self.tables()
                .iter()
                .zip(other.tables())
                .map(|(a, b)| a.zip_with(b, |x, y| m.sub(x, y)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.tables().iter().all(|t| t.is_zero())
    }

    pub fn ring_order(&self) -> usize {
        self.alpha.ring_order()
    }

    /// Componentwise precomposition with `p` (values unchanged).
    pub fn pullback(&self, p: &RingHom) -> Self {
        Cochain3::from_tables(self.tables().iter().map(|t| t.precompose(p)).collect())
    }

    /// Componentwise postcomposition with `q`.
    pub fn pushforward(&self, q: &EquivariantMap) -> Self {
        self.map(|a| q.apply(a))
    }
}

/// Uniform access to the component tables of a cochain.
pub trait CochainTables: Sized {
    fn table_refs(&self) -> Vec<&Table>;
    fn from_table_vec(tables: Vec<Table>) -> Self;
}

impl CochainTables for Cochain1 {
    fn table_refs(&self) -> Vec<&Table> {
        vec![&self.u]
    }
    fn from_table_vec(mut t: Vec<Table>) -> Self {
        Cochain1 { u: t.remove(0) }
    }
}

impl CochainTables for Cochain2 {
    fn table_refs(&self) -> Vec<&Table> {
        vec![&self.mu, &self.nu]
    }
    fn from_table_vec(mut t: Vec<Table>) -> Self {
        let nu = t.pop().unwrap();
        let mu = t.pop().unwrap();
        Cochain2 { mu, nu }
    }
}

impl CochainTables for Cochain3 {
    fn table_refs(&self) -> Vec<&Table> {
        self.tables().to_vec()
    }
    fn from_table_vec(t: Vec<Table>) -> Self {
        Cochain3::from_tables(t)
    }
}

impl Access<Elem> for Vec<&Table> {
    #[inline]
    fn get(&self, component: usize, args: &[Elem]) -> Elem {
        self[component].get(args)
    }
}

/// Additive arithmetic with two-sided ring actions on some value type.
pub trait Arith {
    type V: Clone;
    fn zero(&self) -> Self::V;
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn neg(&self, a: &Self::V) -> Self::V;
    /// `x·a`
    fn left(&self, x: Elem, a: &Self::V) -> Self::V;
    /// `a·x`
    fn right(&self, a: &Self::V, x: Elem) -> Self::V;

    fn sub(&self, a: &Self::V, b: &Self::V) -> Self::V {
        self.add(a, &self.neg(b))
    }

    /// Signed sum of terms.
    fn sum<I: IntoIterator<Item = (i8, Self::V)>>(&self, terms: I) -> Self::V {
        terms.into_iter().fold(self.zero(), |acc, (s, v)| match s {
            1 => self.add(&acc, &v),
            -1 => self.sub(&acc, &v),
            _ => unreachable!("signs are ±1"),
        })
    }
}

impl Arith for FiniteBimodule {
    type V = Elem;

    #[inline]
    fn zero(&self) -> Elem {
        0
    }

    #[inline]
    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        FiniteBimodule::add(self, *a, *b)
    }

    #[inline]
    fn neg(&self, a: &Elem) -> Elem {
        FiniteBimodule::neg(self, *a)
    }

    #[inline]
    fn left(&self, x: Elem, a: &Elem) -> Elem {
        FiniteBimodule::left(self, x, *a)
    }

    #[inline]
    fn right(&self, a: &Elem, x: Elem) -> Elem {
        FiniteBimodule::right(self, *a, x)
    }
}

/// Read access to cochain components by component index and arguments.
pub trait Access<V> {
    fn get(&self, component: usize, args: &[Elem]) -> V;
}

impl<const K: usize> Access<Elem> for [&Table; K] {
    #[inline]
    fn get(&self, component: usize, args: &[Elem]) -> Elem {
        self[component].get(args)
    }
}

/// A formal integer combination of coordinates: entries `(input, output, coefficient)`
/// meaning output coordinate `output` receives `coefficient · x[input]`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LinForm(pub Vec<(usize, usize, i64)>);

/// Symbolic arithmetic over a bimodule: values are [`LinForm`]s and the ring
/// acts through the integer matrices of the action on coordinates.
pub struct Symbolic {
    dim: usize,
    // [x][out][in]
    left: Vec<Vec<Vec<i64>>>,
    right: Vec<Vec<Vec<i64>>>,
}

impl Symbolic {
    pub fn new(module: &FiniteBimodule) -> Self {
        let dim = module.invariant_factors().len();
        let gens = module.generators();
        let matrices = |act: &dyn Fn(Elem, Elem) -> Elem| -> Vec<Vec<Vec<i64>>> {
            module
                .ring()
                .elements()
                .map(|x| {
                    let images: Vec<Vec<u64>> =
                        gens.iter().map(|&g| module.coords(act(x, g))).collect();
                    (0..dim)
                        .map(|o| (0..dim).map(|i| images[i][o] as i64).collect())
                        .collect()
                })
                .collect()
        };
        let left = matrices(&|x, a| module.left(x, a));
        let right = matrices(&|x, a| module.right(a, x));
        Symbolic { dim, left, right }
    }

    fn act(&self, mats: &[Vec<i64>], a: &LinForm) -> LinForm {
        let mut out = Vec::with_capacity(a.0.len() * self.dim);
        for &(input, c, coef) in &a.0 {
            for (o, row) in mats.iter().enumerate() {
                if row[c] != 0 {
                    out.push((input, o, coef * row[c]));
                }
            }
        }
        LinForm(out)
    }
}

impl Arith for Symbolic {
    type V = LinForm;

    fn zero(&self) -> LinForm {
        LinForm::default()
    }

    fn add(&self, a: &LinForm, b: &LinForm) -> LinForm {
        let mut v = a.0.clone();
        v.extend_from_slice(&b.0);
        LinForm(v)
    }

    fn neg(&self, a: &LinForm) -> LinForm {
        LinForm(a.0.iter().map(|&(i, o, c)| (i, o, -c)).collect())
    }

    fn left(&self, x: Elem, a: &LinForm) -> LinForm {
        self.act(&self.left[x], a)
    }

    fn right(&self, a: &LinForm, x: Elem) -> LinForm {
        self.act(&self.right[x], a)
    }
}

/// Selects the free argument tuples of one component.
pub type EntryFilter<'a> = &'a dyn Fn(&[Elem]) -> bool;

/// Which argument tuples of each component are free coordinates; all other
/// entries are pinned to zero.
#[derive(Debug, Clone)]
pub struct Layout {
    n: usize,
    factors: Vec<u64>,
    arities: Vec<usize>,
    // per component: slot of each argument tuple
    slots: Vec<Vec<Option<usize>>>,
    entries: Vec<(usize, Vec<Elem>)>,
}

impl Layout {
    pub fn new(
        ring: &FiniteRing,
        module: &FiniteBimodule,
        components: &[(usize, EntryFilter)],
    ) -> Self {
        let n = ring.order();
        let mut slots = Vec::new();
        let mut entries = Vec::new();
        for (c, &(arity, free)) in components.iter().enumerate() {
            let mut s = Vec::with_capacity(n.pow(arity as u32));
            for t in tuples(arity, n) {
                if free(&t) {
                    s.push(Some(entries.len()));
                    entries.push((c, t));
                } else {
                    s.push(None);
                }
            }
            slots.push(s);
        }
        Layout {
            n,
            factors: module.invariant_factors().to_vec(),
            arities: components.iter().map(|c| c.0).collect(),
            slots,
            entries,
        }
    }

    /// Components vanishing whenever an argument is zero.
    pub fn normalized(ring: &FiniteRing, module: &FiniteBimodule, arities: &[usize]) -> Self {
        let z = ring.zero();
        let free = move |t: &[Elem]| !t.contains(&z);
        let comps: Vec<(usize, EntryFilter)> =
            arities.iter().map(|&a| (a, &free as EntryFilter)).collect();
        Self::new(ring, module, &comps)
    }

    /// Components with every entry free.
    pub fn full(ring: &FiniteRing, module: &FiniteBimodule, arities: &[usize]) -> Self {
        let free = |_: &[Elem]| true;
        let comps: Vec<(usize, EntryFilter)> =
            arities.iter().map(|&a| (a, &free as EntryFilter)).collect();
        Self::new(ring, module, &comps)
    }

    pub fn group(&self) -> CyclicProduct {
        CyclicProduct::repeat(&self.factors, self.entries.len())
    }

    /// Free entries as `(component, args)`.
    pub fn entries(&self) -> &[(usize, Vec<Elem>)] {
        &self.entries
    }

    fn slot(&self, component: usize, args: &[Elem]) -> Option<usize> {
        let idx = args.iter().fold(0, |acc, &a| acc * self.n + a);
        self.slots[component][idx]
    }

    /// Coordinates of the given tables, or the first pinned entry that is nonzero.
    pub fn encode(
        &self,
        tables: &[&Table],
        module: &FiniteBimodule,
    ) -> Result<Vec<i64>, (usize, Vec<Elem>)> {
        for (c, t) in tables.iter().enumerate() {
            for args in tuples(self.arities[c], self.n) {
                if self.slot(c, &args).is_none() && t.get(&args) != 0 {
                    return Err((c, args));
                }
            }
        }
        Ok(self
            .entries
            .iter()
            .flat_map(|(c, args)| {
                module
                    .coords(tables[*c].get(args))
                    .into_iter()
                    .map(|x| x as i64)
            })
            .collect())
    }

    pub fn decode(&self, v: &[i64], module: &FiniteBimodule) -> Vec<Table> {
        let k = self.factors.len();
        let mut tables: Vec<Table> = self
            .arities
            .iter()
            .map(|&a| Table::zeros(a, self.n))
            .collect();
        for (s, (c, args)) in self.entries.iter().enumerate() {
            let value = module.elem_from_coords(v[s * k..(s + 1) * k].iter().copied());
            tables[*c].set(args, value);
        }
        tables
    }
}

/// Symbolic access: each free entry reads as its own coordinates.
impl Access<LinForm> for Layout {
    fn get(&self, component: usize, args: &[Elem]) -> LinForm {
        match self.slot(component, args) {
            None => LinForm::default(),
            Some(s) => {
                let k = self.factors.len();
                LinForm((0..k).map(|c| (s * k + c, c, 1)).collect())
            }
        }
    }
}

/// Assembles the linear map whose output coordinates are the given forms,
/// each form producing one copy of the module's coordinates.
pub fn linear_map_from_forms(
    domain: &Layout,
    module: &FiniteBimodule,
    forms: impl IntoIterator<Item = LinForm>,
) -> LinearMap {
    let factors = module.invariant_factors();
    let k = factors.len();
    let dom = domain.group();
    let mut columns: Vec<Vec<(usize, i64)>> = vec![Vec::new(); dom.dim()];
    let mut count = 0;
    for form in forms {
        for (input, o, coef) in form.0 {
            columns[input].push((count * k + o, coef));
        }
        count += 1;
    }
    let codomain = CyclicProduct::repeat(factors, count);
    LinearMap::from_sparse_columns(dom, codomain, columns)
        .expect("forms built from module actions are well defined")
}

/// Serializable `(relation, witness)` pair of a failed identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub relation: String,
    pub witness: Vec<Elem>,
}

/// Outcome of checking a family of identities: one entry per failed identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CheckReport {
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed_relations(&self) -> Vec<&str> {
        self.failures.iter().map(|f| f.relation.as_str()).collect()
    }

    pub(crate) fn push(&mut self, relation: &str, witness: Vec<Elem>) {
        self.failures.push(Failure {
            relation: relation.to_string(),
            witness,
        });
    }
}

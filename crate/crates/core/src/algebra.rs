//! Finite rings, finite bimodules and the maps between them, all stored as
//! validated lookup tables.
//!
//! Ring elements are the indices `0..n`. Bimodule elements are indices into
//! the mixed-radix enumeration of their invariant-factor coordinates (last
//! coordinate fastest), so index `0` is always the zero of the module.

use thiserror::Error;

use crate::linalg::{residue, smith_normal_form, IntMatrix};

/// Index of a ring or bimodule element.
pub type Elem = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("malformed table: {0}")]
    BadTable(String),
    #[error("addition is not an abelian group: {law} fails at {witness:?}")]
    NotAGroup {
        law: &'static str,
        witness: Vec<Elem>,
    },
    #[error("multiplication is not associative at {witness:?}")]
    NotAssociative { witness: Vec<Elem> },
    #[error("{law} distributive law fails at {witness:?}")]
    NotDistributive {
        law: &'static str,
        witness: Vec<Elem>,
    },
    #[error("element {unit} is not a two-sided unit (fails at {witness})")]
    BadUnit { unit: Elem, witness: Elem },
    #[error("invariant factors {0:?} must be >= 2 and form a divisibility chain")]
    BadInvariantFactors(Vec<u64>),
    #[error("{what} is not additive ({law}) at {witness:?}")]
    NotAdditive {
        what: &'static str,
        law: &'static str,
        witness: Vec<Elem>,
    },
    #[error("action is not associative ({law}) at {witness:?}")]
    NotAssociativeAction {
        law: &'static str,
        witness: Vec<Elem>,
    },
    #[error("the unit does not act trivially from the {side} on element {element}")]
    UnitActsNontrivially { side: &'static str, element: Elem },
    #[error("ring map is not multiplicative at {witness:?}")]
    NotMultiplicative { witness: Vec<Elem> },
    #[error("ring map sends 1 to {image}, not to 1")]
    NotUnital { image: Elem },
    #[error("map is not equivariant for the {side} action at (x={x}, a={a})")]
    NotEquivariant {
        side: &'static str,
        x: Elem,
        a: Elem,
    },
    #[error("carrier mismatch: {0}")]
    Mismatch(String),
}

/// A finite ring with identity on the elements `0..order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteRing {
    order: usize,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    zero: Elem,
    one: Elem,
}

fn flatten_square(name: &str, n: usize, table: &[Vec<Elem>]) -> Result<Vec<Elem>, AlgebraError> {
    if table.len() != n || table.iter().any(|row| row.len() != n) {
        return Err(AlgebraError::BadTable(format!(
            "{name} table must be {n}x{n}"
        )));
    }
    let flat: Vec<Elem> = table.iter().flatten().copied().collect();
    if let Some(bad) = flat.iter().find(|&&v| v >= n) {
        return Err(AlgebraError::BadTable(format!(
            "{name} table entry {bad} out of range"
        )));
    }
    Ok(flat)
}

impl FiniteRing {
    /// Builds a ring from its tables and checks every ring axiom by exhaustive scan.
    pub fn new(
        order: usize,
        add: &[Vec<Elem>],
        mul: &[Vec<Elem>],
        zero: Elem,
        one: Elem,
    ) -> Result<Self, AlgebraError> {
        if order == 0 {
            return Err(AlgebraError::BadTable(
                "a ring needs at least one element".into(),
            ));
        }
        if zero >= order || one >= order {
            return Err(AlgebraError::BadTable("zero/one out of range".into()));
        }
        let add = flatten_square("add", order, add)?;
        let mul = flatten_square("mul", order, mul)?;
        let neg = (0..order)
            .map(|x| {
                (0..order)
                    .find(|&y| add[x * order + y] == zero)
                    .ok_or(AlgebraError::NotAGroup {
                        law: "inverse",
                        witness: vec![x],
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let ring = FiniteRing {
            order,
            add,
            mul,
            neg,
            zero,
            one,
        };
        ring.validate()?;
        Ok(ring)
    }

    fn from_fns(
        order: usize,
        add: impl Fn(Elem, Elem) -> Elem,
        mul: impl Fn(Elem, Elem) -> Elem,
        zero: Elem,
        one: Elem,
    ) -> Self {
        let add_t: Vec<Vec<Elem>> = (0..order)
            .map(|x| (0..order).map(|y| add(x, y)).collect())
            .collect();
        let mul_t: Vec<Vec<Elem>> = (0..order)
            .map(|x| (0..order).map(|y| mul(x, y)).collect())
            .collect();
        Self::new(order, &add_t, &mul_t, zero, one).expect("built-in ring tables are valid")
    }

    /// The ring ℤ/n with element `i` the residue `i`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "Z/0 is not finite");
        Self::from_fns(n, |x, y| (x + y) % n, |x, y| (x * y) % n, 0, 1 % n)
    }

    /// The product ring; element `(i, j)` has index `i * other.order() + j`.
    pub fn product(&self, other: &FiniteRing) -> Self {
        let m = other.order;
        Self::from_fns(
            self.order * m,
            |a, b| self.add(a / m, b / m) * m + other.add(a % m, b % m),
            |a, b| self.mul(a / m, b / m) * m + other.mul(a % m, b % m),
            self.zero * m + other.zero,
            self.one * m + other.one,
        )
    }

    /// Named rings: `Z<n>` (e.g. `Z2`, `Z6`) and products such as `Z2xZ2`.
    pub fn preset(name: &str) -> Option<Self> {
        let mut factors = name.split('x').map(|part| {
            part.strip_prefix('Z')
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|&n| (2..=64).contains(&n))
                .map(FiniteRing::cyclic)
        });
        let first = factors.next()??;
        factors.try_fold(first, |acc, r| r.map(|r| acc.product(&r)))
    }

    /// Re-runs the exhaustive axiom scan.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        let n = self.order;
        for x in 0..n {
            if self.add(self.zero, x) != x || self.add(x, self.zero) != x {
                return Err(AlgebraError::NotAGroup {
                    law: "identity",
                    witness: vec![x],
                });
            }
            for y in 0..n {
                if self.add(x, y) != self.add(y, x) {
                    return Err(AlgebraError::NotAGroup {
                        law: "commutativity",
                        witness: vec![x, y],
                    });
                }
            }
        }
        for (x, y, z) in triples(n) {
            if self.add(self.add(x, y), z) != self.add(x, self.add(y, z)) {
                return Err(AlgebraError::NotAGroup {
                    law: "associativity",
                    witness: vec![x, y, z],
                });
            }
        }
        for (x, y, z) in triples(n) {
            if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                return Err(AlgebraError::NotAssociative {
                    witness: vec![x, y, z],
                });
            }
        }
        for x in 0..n {
            if self.mul(self.one, x) != x || self.mul(x, self.one) != x {
                return Err(AlgebraError::BadUnit {
                    unit: self.one,
                    witness: x,
                });
            }
        }
        for (x, y, z) in triples(n) {
            if self.mul(x, self.add(y, z)) != self.add(self.mul(x, y), self.mul(x, z)) {
                return Err(AlgebraError::NotDistributive {
                    law: "left",
                    witness: vec![x, y, z],
                });
            }
            if self.mul(self.add(x, y), z) != self.add(self.mul(x, z), self.mul(y, z)) {
                return Err(AlgebraError::NotDistributive {
                    law: "right",
                    witness: vec![x, y, z],
                });
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        self.zero
    }

    #[inline]
    pub fn one(&self) -> Elem {
        self.one
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.add[x * self.order + y]
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mul[x * self.order + y]
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        self.neg[x]
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.order).filter(move |&x| x != self.zero)
    }

    pub fn add_table(&self) -> Vec<Vec<Elem>> {
        self.add.chunks(self.order).map(<[Elem]>::to_vec).collect()
    }

    pub fn mul_table(&self) -> Vec<Vec<Elem>> {
        self.mul.chunks(self.order).map(<[Elem]>::to_vec).collect()
    }

    /// The same ring with element `x` renamed to `perm[x]`.
    pub fn relabeled(&self, perm: &[Elem]) -> Result<Self, AlgebraError> {
        let inv = invert_permutation(perm, self.order)?;
        let add: Vec<Vec<Elem>> = (0..self.order)
            .map(|a| {
                (0..self.order)
                    .map(|b| perm[self.add(inv[a], inv[b])])
                    .collect()
            })
            .collect();
        let mul: Vec<Vec<Elem>> = (0..self.order)
            .map(|a| {
                (0..self.order)
                    .map(|b| perm[self.mul(inv[a], inv[b])])
                    .collect()
            })
            .collect();
        Self::new(self.order, &add, &mul, perm[self.zero], perm[self.one])
    }

    /// Invariant factors of the additive group together with the
    /// coordinates of every element in that decomposition.
    pub fn additive_structure(&self) -> (Vec<u64>, Vec<Vec<u64>>) {
        let n = self.order;
        // When 1 generates (R, +) the coordinate of k·1 is k.
        let mut multiples = vec![self.zero];
        while multiples.len() < n {
            let next = self.add(*multiples.last().unwrap(), self.one);
            if next == self.zero {
                break;
            }
            multiples.push(next);
        }
        if multiples.len() == n {
            if n == 1 {
                return (vec![], vec![vec![]]);
            }
            let mut coords = vec![Vec::new(); n];
            for (k, &x) in multiples.iter().enumerate() {
                coords[x] = vec![k as u64];
            }
            return (vec![n as u64], coords);
        }
        // Otherwise present (R, +) by generators e_x and relations
        // e_x + e_y - e_{x+y}, then read coordinates off the Smith form.
        let pairs: Vec<(Elem, Elem)> = (0..n).flat_map(|x| (x..n).map(move |y| (x, y))).collect();
        let mut rel = IntMatrix::zeros(n, pairs.len());
        for (j, &(x, y)) in pairs.iter().enumerate() {
            rel.add_i64(x, j, 1);
            rel.add_i64(y, j, 1);
            rel.add_i64(self.add(x, y), j, -1);
        }
        let snf = smith_normal_form(&rel);
        let diag = snf.diagonal();
        let kept: Vec<(usize, u64)> = (0..n)
            .filter_map(|i| {
                let d = diag
                    .get(i)
                    .map(|d| u64::try_from(d).expect("finite group"))
                    .unwrap_or(0);
                assert!(d != 0, "finite additive group has full-rank relations");
                (d != 1).then_some((i, d))
            })
            .collect();
        let factors: Vec<u64> = kept.iter().map(|&(_, d)| d).collect();
        let coords = (0..n)
            .map(|x| {
                kept.iter()
                    .map(|&(i, d)| residue(snf.u.get(i, x), d))
                    .collect()
            })
            .collect();
        (factors, coords)
    }
}

fn triples(n: usize) -> impl Iterator<Item = (Elem, Elem, Elem)> {
    (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
}

fn invert_permutation(perm: &[Elem], n: usize) -> Result<Vec<Elem>, AlgebraError> {
    let mut inv = vec![usize::MAX; n];
    if perm.len() != n {
        return Err(AlgebraError::BadTable(
            "relabeling must have one entry per element".into(),
        ));
    }
    for (x, &y) in perm.iter().enumerate() {
        if y >= n || inv[y] != usize::MAX {
            return Err(AlgebraError::BadTable(
                "relabeling is not a permutation".into(),
            ));
        }
        inv[y] = x;
    }
    Ok(inv)
}

fn check_factors(factors: &[u64]) -> Result<(), AlgebraError> {
    let ok = factors.iter().all(|&d| d >= 2) && factors.windows(2).all(|w| w[1] % w[0] == 0);
    if ok {
        Ok(())
    } else {
        Err(AlgebraError::BadInvariantFactors(factors.to_vec()))
    }
}

/// A finite R-bimodule `M ≅ ℤ/d₁ × … × ℤ/d_k` with left and right action tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteBimodule {
    ring: FiniteRing,
    factors: Vec<u64>,
    strides: Vec<usize>,
    size: usize,
    add: Vec<Elem>,
    neg: Vec<Elem>,
    // both indexed by x * size + a
    left: Vec<Elem>,
    right: Vec<Elem>,
}

impl FiniteBimodule {
    fn skeleton(ring: FiniteRing, factors: Vec<u64>) -> Result<Self, AlgebraError> {
        check_factors(&factors)?;
        let size: usize = factors.iter().map(|&d| d as usize).product();
        let mut strides = vec![1; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1] as usize;
        }
        let mut m = FiniteBimodule {
            ring,
            factors,
            strides,
            size,
            add: Vec::new(),
            neg: Vec::new(),
            left: Vec::new(),
            right: Vec::new(),
        };
        let coords: Vec<Vec<u64>> = (0..size).map(|a| m.coords(a)).collect();
        m.add = (0..size * size)
            .map(|ab| {
                let (a, b) = (ab / size, ab % size);
                m.elem_from_coords(
                    coords[a]
                        .iter()
                        .zip(&coords[b])
                        .map(|(x, y)| (x + y) as i64),
                )
            })
            .collect();
        m.neg = (0..size)
            .map(|a| m.elem_from_coords(coords[a].iter().map(|&c| -(c as i64))))
            .collect();
        Ok(m)
    }

    /// Builds a bimodule from action tables `left[x][a] = x·a`, `right[x][a] = a·x`
    /// and scans every bimodule identity.
    pub fn new(
        ring: FiniteRing,
        invariant_factors: Vec<u64>,
        left: &[Vec<Elem>],
        right: &[Vec<Elem>],
    ) -> Result<Self, AlgebraError> {
        let mut m = Self::skeleton(ring, invariant_factors)?;
        let (n, size) = (m.ring.order(), m.size);
        for (name, table) in [("left action", left), ("right action", right)] {
            if table.len() != n || table.iter().any(|row| row.len() != size) {
                return Err(AlgebraError::BadTable(format!(
                    "{name} table must be {n}x{size}"
                )));
            }
            if table.iter().flatten().any(|&v| v >= size) {
                return Err(AlgebraError::BadTable(format!(
                    "{name} table entry out of range"
                )));
            }
        }
        m.left = left.iter().flatten().copied().collect();
        m.right = right.iter().flatten().copied().collect();
        m.validate()?;
        Ok(m)
    }

    fn from_fns(
        ring: FiniteRing,
        factors: Vec<u64>,
        left: impl Fn(&FiniteBimodule, Elem, Elem) -> Elem,
        right: impl Fn(&FiniteBimodule, Elem, Elem) -> Elem,
    ) -> Result<Self, AlgebraError> {
        let skel = Self::skeleton(ring.clone(), factors.clone())?;
        let n = ring.order();
        let l: Vec<Vec<Elem>> = (0..n)
            .map(|x| (0..skel.size).map(|a| left(&skel, x, a)).collect())
            .collect();
        let r: Vec<Vec<Elem>> = (0..n)
            .map(|x| (0..skel.size).map(|a| right(&skel, x, a)).collect())
            .collect();
        Self::new(ring, factors, &l, &r)
    }

    /// R acting on its own additive group by multiplication.
    pub fn regular(ring: &FiniteRing) -> Self {
        let (factors, coords) = ring.additive_structure();
        let skel =
            Self::skeleton(ring.clone(), factors.clone()).expect("invariant factors from SNF");
        let to_m: Vec<Elem> = coords
            .iter()
            .map(|c| skel.elem_from_coords(c.iter().map(|&v| v as i64)))
            .collect();
        let mut to_r = vec![0; skel.size];
        for (x, &a) in to_m.iter().enumerate() {
            to_r[a] = x;
        }
        Self::from_fns(
            ring.clone(),
            factors,
            |_, x, a| to_m[ring.mul(x, to_r[a])],
            |_, x, a| to_m[ring.mul(to_r[a], x)],
        )
        .expect("regular bimodule is valid")
    }

    /// The map sending a ring element to the matching element of [`FiniteBimodule::regular`].
    pub fn regular_embedding(ring: &FiniteRing) -> Vec<Elem> {
        let (factors, coords) = ring.additive_structure();
        let skel = Self::skeleton(ring.clone(), factors).expect("invariant factors from SNF");
        coords
            .iter()
            .map(|c| skel.elem_from_coords(c.iter().map(|&v| v as i64)))
            .collect()
    }

    /// The zero bimodule.
    pub fn zero_module(ring: &FiniteRing) -> Self {
        Self::from_fns(ring.clone(), vec![], |_, _, _| 0, |_, _, _| 0)
            .expect("zero module is valid")
    }

    /// This module (over `p.target()`) regarded as a module over `p.source()`
    /// through `x·a = p(x)a`, `a·x = a p(x)`.
    pub fn pullback(&self, p: &RingHom) -> Result<Self, AlgebraError> {
        if p.target() != &self.ring {
            return Err(AlgebraError::Mismatch(
                "module is not over the target of the ring map".into(),
            ));
        }
        let source = p.source().clone();
        Self::from_fns(
            source,
            self.factors.clone(),
            |_, x, a| self.left(p.apply(x), a),
            |_, x, a| self.right(a, p.apply(x)),
        )
    }

    /// The same module over the relabeled ring `ring.relabeled(perm)`.
    pub fn relabeled_ring(&self, perm: &[Elem]) -> Result<Self, AlgebraError> {
        let ring = self.ring.relabeled(perm)?;
        let inv = invert_permutation(perm, self.ring.order())?;
        Self::from_fns(
            ring,
            self.factors.clone(),
            |_, x, a| self.left(inv[x], a),
            |_, x, a| self.right(a, inv[x]),
        )
    }

    pub fn validate(&self) -> Result<(), AlgebraError> {
        let r = &self.ring;
        let n = r.order();
        let s = self.size;
        for x in 0..n {
            for a in 0..s {
                for b in 0..s {
                    if self.left(x, self.add(a, b)) != self.add(self.left(x, a), self.left(x, b)) {
                        return Err(AlgebraError::NotAdditive {
                            what: "left action",
                            law: "x(a+b)=xa+xb",
                            witness: vec![x, a, b],
                        });
                    }
                    if self.right(self.add(a, b), x) != self.add(self.right(a, x), self.right(b, x))
                    {
                        return Err(AlgebraError::NotAdditive {
                            what: "right action",
                            law: "(a+b)x=ax+bx",
                            witness: vec![x, a, b],
                        });
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for a in 0..s {
                    let xy = r.add(x, y);
                    if self.left(xy, a) != self.add(self.left(x, a), self.left(y, a)) {
                        return Err(AlgebraError::NotAdditive {
                            what: "left action",
                            law: "(x+y)a=xa+ya",
                            witness: vec![x, y, a],
                        });
                    }
                    if self.right(a, xy) != self.add(self.right(a, x), self.right(a, y)) {
                        return Err(AlgebraError::NotAdditive {
                            what: "right action",
                            law: "a(x+y)=ax+ay",
                            witness: vec![x, y, a],
                        });
                    }
                    let p = r.mul(x, y);
                    if self.left(p, a) != self.left(x, self.left(y, a)) {
                        return Err(AlgebraError::NotAssociativeAction {
                            law: "(xy)a=x(ya)",
                            witness: vec![x, y, a],
                        });
                    }
                    if self.right(a, p) != self.right(self.right(a, x), y) {
                        return Err(AlgebraError::NotAssociativeAction {
                            law: "a(xy)=(ax)y",
                            witness: vec![x, y, a],
                        });
                    }
                    if self.right(self.left(x, a), y) != self.left(x, self.right(a, y)) {
                        return Err(AlgebraError::NotAssociativeAction {
                            law: "(xa)y=x(ay)",
                            witness: vec![x, y, a],
                        });
                    }
                }
            }
        }
        for a in 0..s {
            if self.left(r.one(), a) != a {
                return Err(AlgebraError::UnitActsNontrivially {
                    side: "left",
                    element: a,
                });
            }
            if self.right(a, r.one()) != a {
                return Err(AlgebraError::UnitActsNontrivially {
                    side: "right",
                    element: a,
                });
            }
        }
        Ok(())
    }

    #[inline]
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.factors
    }

    /// Number of elements.
    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        0
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.size + b]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg[b])
    }

    /// `x·a`
    #[inline]
    pub fn left(&self, x: Elem, a: Elem) -> Elem {
        self.left[x * self.size + a]
    }

    /// `a·x`
    #[inline]
    pub fn right(&self, a: Elem, x: Elem) -> Elem {
        self.right[x * self.size + a]
    }

    /// Integer multiple `k·a`.
    pub fn scale(&self, k: i64, a: Elem) -> Elem {
        self.elem_from_coords(self.coords(a).iter().map(|&c| k * c as i64))
    }

    pub fn coords(&self, a: Elem) -> Vec<u64> {
        self.factors
            .iter()
            .zip(&self.strides)
            .map(|(&d, &s)| ((a / s) as u64) % d)
            .collect()
    }

    /// Element with the given (unreduced) coordinates.
    pub fn elem_from_coords(&self, coords: impl IntoIterator<Item = i64>) -> Elem {
        let mut idx = 0;
        let mut count = 0;
        for ((c, &d), &s) in coords.into_iter().zip(&self.factors).zip(&self.strides) {
            idx += (c.rem_euclid(d as i64) as usize) * s;
            count += 1;
        }
        debug_assert_eq!(count, self.factors.len());
        idx
    }

    /// The elements with a single coordinate equal to 1.
    pub fn generators(&self) -> Vec<Elem> {
        self.strides.clone()
    }

    pub fn left_table(&self) -> Vec<Vec<Elem>> {
        self.left.chunks(self.size).map(<[Elem]>::to_vec).collect()
    }

    pub fn right_table(&self) -> Vec<Vec<Elem>> {
        self.right.chunks(self.size).map(<[Elem]>::to_vec).collect()
    }
}

/// A unital ring homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingHom {
    source: FiniteRing,
    target: FiniteRing,
    table: Vec<Elem>,
}

impl RingHom {
    pub fn new(
        source: FiniteRing,
        target: FiniteRing,
        table: Vec<Elem>,
    ) -> Result<Self, AlgebraError> {
        if table.len() != source.order() || table.iter().any(|&v| v >= target.order()) {
            return Err(AlgebraError::BadTable(
                "ring map table has the wrong shape".into(),
            ));
        }
        let p = RingHom {
            source,
            target,
            table,
        };
        for x in p.source.elements() {
            for y in p.source.elements() {
                if p.apply(p.source.add(x, y)) != p.target.add(p.apply(x), p.apply(y)) {
                    return Err(AlgebraError::NotAdditive {
                        what: "ring map",
                        law: "p(x+y)=p(x)+p(y)",
                        witness: vec![x, y],
                    });
                }
                if p.apply(p.source.mul(x, y)) != p.target.mul(p.apply(x), p.apply(y)) {
                    return Err(AlgebraError::NotMultiplicative {
                        witness: vec![x, y],
                    });
                }
            }
        }
        let image = p.apply(p.source.one());
        if image != p.target.one() {
            return Err(AlgebraError::NotUnital { image });
        }
        Ok(p)
    }

    pub fn identity(ring: &FiniteRing) -> Self {
        RingHom {
            source: ring.clone(),
            target: ring.clone(),
            table: ring.elements().collect(),
        }
    }

    /// Reduction ℤ/n → ℤ/k for k dividing n.
    pub fn reduction(n: usize, k: usize) -> Result<Self, AlgebraError> {
        if k == 0 || !n.is_multiple_of(k) {
            return Err(AlgebraError::Mismatch(format!(
                "Z/{n} does not reduce onto Z/{k}"
            )));
        }
        Self::new(
            FiniteRing::cyclic(n),
            FiniteRing::cyclic(k),
            (0..n).map(|x| x % k).collect(),
        )
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.table[x]
    }

    pub fn source(&self) -> &FiniteRing {
        &self.source
    }

    pub fn target(&self) -> &FiniteRing {
        &self.target
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    /// `other ∘ self`
    pub fn then(&self, other: &RingHom) -> Result<RingHom, AlgebraError> {
        if self.target != other.source {
            return Err(AlgebraError::Mismatch(
                "ring maps are not composable".into(),
            ));
        }
        RingHom::new(
            self.source.clone(),
            other.target.clone(),
            self.table.iter().map(|&x| other.apply(x)).collect(),
        )
    }
}

/// An additive map `q: M → M'` with `q(xa) = p(x)q(a)` and `q(ax) = q(a)p(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantMap {
    hom: RingHom,
    source: FiniteBimodule,
    target: FiniteBimodule,
    table: Vec<Elem>,
}

impl EquivariantMap {
    pub fn new(
        hom: RingHom,
        source: FiniteBimodule,
        target: FiniteBimodule,
        table: Vec<Elem>,
    ) -> Result<Self, AlgebraError> {
        if source.ring() != hom.source() || target.ring() != hom.target() {
            return Err(AlgebraError::Mismatch(
                "modules are not over the rings of the ring map".into(),
            ));
        }
        if table.len() != source.size() || table.iter().any(|&v| v >= target.size()) {
            return Err(AlgebraError::BadTable(
                "module map table has the wrong shape".into(),
            ));
        }
        let q = EquivariantMap {
            hom,
            source,
            target,
            table,
        };
        let (m, m2, p) = (&q.source, &q.target, &q.hom);
        for a in 0..m.size() {
            for b in 0..m.size() {
                if q.apply(m.add(a, b)) != m2.add(q.apply(a), q.apply(b)) {
                    return Err(AlgebraError::NotAdditive {
                        what: "module map",
                        law: "q(a+b)=q(a)+q(b)",
                        witness: vec![a, b],
                    });
                }
            }
        }
        for x in p.source().elements() {
            for a in 0..m.size() {
                if q.apply(m.left(x, a)) != m2.left(p.apply(x), q.apply(a)) {
                    return Err(AlgebraError::NotEquivariant { side: "left", x, a });
                }
                if q.apply(m.right(a, x)) != m2.right(q.apply(a), p.apply(x)) {
                    return Err(AlgebraError::NotEquivariant {
                        side: "right",
                        x,
                        a,
                    });
                }
            }
        }
        Ok(q)
    }

    pub fn identity(module: &FiniteBimodule) -> Self {
        EquivariantMap {
            hom: RingHom::identity(module.ring()),
            source: module.clone(),
            target: module.clone(),
            table: (0..module.size()).collect(),
        }
    }

    pub fn zero(
        hom: RingHom,
        source: FiniteBimodule,
        target: FiniteBimodule,
    ) -> Result<Self, AlgebraError> {
        let table = vec![target.zero(); source.size()];
        Self::new(hom, source, target, table)
    }

    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.table[a]
    }

    pub fn hom(&self) -> &RingHom {
        &self.hom
    }

    pub fn source(&self) -> &FiniteBimodule {
        &self.source
    }

    pub fn target(&self) -> &FiniteBimodule {
        &self.target
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    /// `other ∘ self`, over the composite ring map.
    pub fn then(&self, other: &EquivariantMap) -> Result<EquivariantMap, AlgebraError> {
        if self.target != other.source {
            return Err(AlgebraError::Mismatch(
                "module maps are not composable".into(),
            ));
        }
        EquivariantMap::new(
            self.hom.then(&other.hom)?,
            self.source.clone(),
            other.target.clone(),
            self.table.iter().map(|&a| other.apply(a)).collect(),
        )
    }
}

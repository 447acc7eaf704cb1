use std::collections::HashSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use super::howell::{gcd, lcm, HowellForm};
use super::matrix::{residue, smith_normal_form, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("subgroup generator {0:?} is not contained in the ambient group")]
    SubgroupNotContained(Vec<i64>),
    #[error("element {0:?} is not in the group being quotiented")]
    NotInGroup(Vec<i64>),
    #[error("map is not well defined: generator {generator} of order {order} does not map into the kernel of multiplication by its order (row {row})")]
    NotWellDefined {
        generator: usize,
        order: u64,
        row: usize,
    },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// `ℤ/m₁ ⊕ … ⊕ ℤ/m_k` in fixed coordinates. Elements are vectors of residues.
/// The moduli need not form a divisibility chain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicProduct {
    moduli: Vec<u64>,
}

impl CyclicProduct {
    pub fn new(moduli: Vec<u64>) -> Self {
        assert!(moduli.iter().all(|&m| m >= 1), "moduli must be positive");
        CyclicProduct { moduli }
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn dim(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> BigUint {
        self.moduli.iter().map(|&m| BigUint::from(m)).product()
    }

    /// Least common multiple of the moduli (1 for the trivial group).
    pub fn exponent(&self) -> u64 {
        self.moduli.iter().fold(1i64, |acc, &m| lcm(acc, m as i64)) as u64
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.dim()]
    }

    pub fn reduce(&self, v: &mut [i64]) {
        for (x, &m) in v.iter_mut().zip(&self.moduli) {
            *x = x.rem_euclid(m as i64);
        }
    }

    pub fn reduced(&self, v: &[i64]) -> Vec<i64> {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        self.reduced(&a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>())
    }

    pub fn sub(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        self.reduced(&a.iter().zip(b).map(|(x, y)| x - y).collect::<Vec<_>>())
    }

    pub fn scale(&self, k: i64, a: &[i64]) -> Vec<i64> {
        self.reduced(&a.iter().map(|x| k * x).collect::<Vec<_>>())
    }

    pub fn unit(&self, i: usize) -> Vec<i64> {
        let mut e = self.zero();
        e[i] = 1 % self.moduli[i] as i64;
        e
    }

    /// Every element in lexicographic order (last coordinate fastest).
    pub fn elements(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        let total: usize = self.moduli.iter().map(|&m| m as usize).product();
        (0..total).map(move |mut idx| {
            let mut v = vec![0; self.dim()];
            for i in (0..self.dim()).rev() {
                let m = self.moduli[i] as usize;
                v[i] = (idx % m) as i64;
                idx /= m;
            }
            v
        })
    }

    /// `ℤ/m` repeated `copies` times with pattern `moduli`.
    pub fn repeat(moduli: &[u64], copies: usize) -> Self {
        CyclicProduct::new(
            moduli
                .iter()
                .copied()
                .cycle()
                .take(moduli.len() * copies)
                .collect(),
        )
    }
}

/// A finite abelian group in invariant-factor form `ℤ^rank ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianGroupPresentation {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroupPresentation {
    pub fn finite(torsion: Vec<u64>) -> Self {
        debug_assert!(torsion.iter().all(|&d| d >= 2));
        debug_assert!(torsion.windows(2).all(|w| w[1] % w[0] == 0));
        AbelianGroupPresentation { rank: 0, torsion }
    }

    pub fn trivial() -> Self {
        Self::finite(vec![])
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion part (the whole group when `rank == 0`).
    pub fn order(&self) -> BigUint {
        self.torsion.iter().map(|&d| BigUint::from(d)).product()
    }
}

impl fmt::Display for AbelianGroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = (0..self.rank).map(|_| "Z".to_string()).collect();
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// A subgroup of a [`CyclicProduct`], stored as the lattice of its integer
/// lifts (which contains every `mᵢ·eᵢ`) via an upper-triangular basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    ambient: CyclicProduct,
    modulus: i64,
    basis: Vec<Vec<i64>>,
}

impl Subgroup {
    pub fn generated_by<I, V>(ambient: &CyclicProduct, generators: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[i64]>,
    {
        let modulus = ambient.exponent() as i64;
        let mut h = HowellForm::new(modulus, ambient.dim());
        for i in 0..ambient.dim() {
            let mut e = vec![0; ambient.dim()];
            e[i] = ambient.moduli[i] as i64;
            h.insert(&e);
        }
        let mut seen = HashSet::new();
        for g in generators {
            let g = g.as_ref();
            assert_eq!(g.len(), ambient.dim(), "generator has the wrong length");
            let g = ambient.reduced(g);
            if g.iter().any(|&x| x != 0) && seen.insert(g.clone()) && !h.contains(&g) {
                h.insert(&g);
            }
        }
        Subgroup {
            ambient: ambient.clone(),
            modulus,
            basis: h.lattice_basis(),
        }
    }

    pub fn zero(ambient: &CyclicProduct) -> Self {
        Self::generated_by(ambient, std::iter::empty::<Vec<i64>>())
    }

    pub fn whole(ambient: &CyclicProduct) -> Self {
        Self::generated_by(ambient, (0..ambient.dim()).map(|i| ambient.unit(i)))
    }

    pub fn ambient(&self) -> &CyclicProduct {
        &self.ambient
    }

    pub fn order(&self) -> BigUint {
        let det: BigUint = self
            .basis
            .iter()
            .enumerate()
            .map(|(c, r)| BigUint::from(r[c] as u64))
            .product();
        self.ambient.order() / det
    }

    /// Integer coefficients `w` with `v = w·basis` exactly, for an integer lift `v`.
    fn coefficients(&self, v: &[i64]) -> Option<Vec<BigInt>> {
        let mut rest: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        let mut w = Vec::with_capacity(self.basis.len());
        for (c, row) in self.basis.iter().enumerate() {
            let g = BigInt::from(row[c]);
            if !(&rest[c] % &g).is_zero() {
                return None;
            }
            let f = &rest[c] / &g;
            if !f.is_zero() {
                for (j, &x) in row.iter().enumerate().skip(c) {
                    if x != 0 {
                        rest[j] -= &f * x;
                    }
                }
            }
            w.push(f);
        }
        Some(w)
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.coefficients(v).is_some()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|r| other.contains(r))
    }

    /// Generators reduced into the ambient group, zeros dropped.
    pub fn generators(&self) -> Vec<Vec<i64>> {
        self.basis
            .iter()
            .map(|r| self.ambient.reduced(r))
            .filter(|r| r.iter().any(|&x| x != 0))
            .collect()
    }

    /// Every element; only sensible for small subgroups.
    pub fn elements(&self) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = vec![self.ambient.zero()];
        let mut seen: HashSet<Vec<i64>> = out.iter().cloned().collect();
        let gens = self.generators();
        let mut i = 0;
        while i < out.len() {
            let cur = out[i].clone();
            for g in &gens {
                let next = self.ambient.add(&cur, g);
                if seen.insert(next.clone()) {
                    out.push(next);
                }
            }
            i += 1;
        }
        out.sort();
        out
    }

    /// Invariant factors of the subgroup itself.
    pub fn structure(&self) -> AbelianGroupPresentation {
        quotient(self, &Subgroup::zero(&self.ambient))
            .expect("zero subgroup is contained")
            .presentation
    }
}

/// `L/S` for subgroups `S ⊆ L` of the same ambient group, with class coordinates.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub presentation: AbelianGroupPresentation,
    pub representatives: Vec<Vec<i64>>,
    numerator: Subgroup,
    // column j of `v`, restricted to the nontrivial factors, gives coordinate j
    v: IntMatrix,
    factor_columns: Vec<usize>,
}

impl Quotient {
    pub fn order(&self) -> BigUint {
        self.presentation.order()
    }

    pub fn numerator(&self) -> &Subgroup {
        &self.numerator
    }

    /// Coordinates of the class of `x` (an element of the numerator).
    pub fn class_of(&self, x: &[i64]) -> Result<Vec<u64>, LinalgError> {
        let w = self
            .numerator
            .coefficients(x)
            .ok_or_else(|| LinalgError::NotInGroup(x.to_vec()))?;
        Ok(self
            .factor_columns
            .iter()
            .zip(&self.presentation.torsion)
            .map(|(&j, &d)| {
                let s: BigInt = w
                    .iter()
                    .enumerate()
                    .map(|(i, wi)| wi * self.v.get(i, j))
                    .sum();
                residue(&s, d)
            })
            .collect())
    }

    /// The element `Σ cᵢ·repᵢ` of the ambient group.
    pub fn element(&self, coords: &[u64]) -> Vec<i64> {
        let amb = self.numerator.ambient();
        let mut acc = amb.zero();
        for (c, rep) in coords.iter().zip(&self.representatives) {
            acc = amb.add(&acc, &amb.scale(*c as i64, rep));
        }
        acc
    }

    /// Every coordinate vector, in lexicographic order.
    pub fn all_classes(&self) -> Vec<Vec<u64>> {
        let moduli = CyclicProduct::new(self.presentation.torsion.clone());
        moduli
            .elements()
            .map(|v| v.into_iter().map(|x| x as u64).collect())
            .collect()
    }
}

/// The quotient `numerator / denominator`.
pub fn quotient(numerator: &Subgroup, denominator: &Subgroup) -> Result<Quotient, LinalgError> {
    if numerator.ambient != denominator.ambient {
        return Err(LinalgError::DimensionMismatch(
            "subgroups live in different groups".into(),
        ));
    }
    let k = numerator.ambient.dim();
    let n = numerator.modulus;
    // Coordinates of the denominator's basis in the numerator's basis. The
    // numerator lattice times N lies in the denominator, so these rows only
    // matter modulo N.
    let mut h = HowellForm::new(n, k);
    for row in &denominator.basis {
        let w = numerator
            .coefficients(row)
            .ok_or_else(|| LinalgError::SubgroupNotContained(numerator.ambient.reduced(row)))?;
        let w: Vec<i64> = w.iter().map(|x| residue(x, n as u64) as i64).collect();
        h.insert(&w);
    }
    let y = IntMatrix::from_rows(k, &h.lattice_basis());
    let snf = smith_normal_form(&y);
    let diag = snf.diagonal();
    let mut torsion = Vec::new();
    let mut factor_columns = Vec::new();
    for (j, d) in diag.iter().enumerate() {
        let d = d.to_u64().expect("invariant factor fits in u64");
        assert!(d >= 1, "quotient of finite lattices is finite");
        if d > 1 {
            torsion.push(d);
            factor_columns.push(j);
        }
    }
    // Row j of V⁻¹ expresses the j-th quotient generator in numerator coordinates.
    let representatives = factor_columns
        .iter()
        .map(|&j| {
            let mut x = vec![BigInt::zero(); k];
            for (i, row) in numerator.basis.iter().enumerate() {
                let c = snf.v_inv.get(j, i);
                if !c.is_zero() {
                    for (t, &b) in row.iter().enumerate() {
                        x[t] += c * b;
                    }
                }
            }
            x.iter()
                .zip(numerator.ambient.moduli())
                .map(|(v, &m)| residue(v, m) as i64)
                .collect()
        })
        .collect();
    Ok(Quotient {
        presentation: AbelianGroupPresentation::finite(torsion),
        representatives,
        numerator: numerator.clone(),
        v: snf.v,
        factor_columns,
    })
}

/// A homomorphism between [`CyclicProduct`]s, stored as sparse rows: row `j`
/// lists `(i, a_ji)` so that coordinate `j` of the image is `Σ a_ji x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    domain: CyclicProduct,
    codomain: CyclicProduct,
    rows: Vec<Vec<(usize, i64)>>,
}

impl LinearMap {
    /// Builds the map from the images of the domain's unit vectors, checking
    /// that each column is killed by its generator's order.
    pub fn from_columns(
        domain: CyclicProduct,
        codomain: CyclicProduct,
        columns: &[Vec<i64>],
    ) -> Result<Self, LinalgError> {
        if columns.iter().any(|c| c.len() != codomain.dim()) {
            return Err(LinalgError::DimensionMismatch(
                "column shapes do not match the groups".into(),
            ));
        }
        let sparse: Vec<Vec<(usize, i64)>> = columns
            .iter()
            .map(|c| {
                c.iter()
                    .enumerate()
                    .filter(|(_, &a)| a != 0)
                    .map(|(j, &a)| (j, a))
                    .collect()
            })
            .collect();
        Self::from_sparse_columns(domain, codomain, sparse)
    }

    /// Like [`LinearMap::from_columns`] with columns given as `(row, coefficient)`
    /// lists; repeated rows are summed.
    pub fn from_sparse_columns(
        domain: CyclicProduct,
        codomain: CyclicProduct,
        columns: Vec<Vec<(usize, i64)>>,
    ) -> Result<Self, LinalgError> {
        if columns.len() != domain.dim()
            || columns.iter().flatten().any(|&(j, _)| j >= codomain.dim())
        {
            return Err(LinalgError::DimensionMismatch(
                "column shapes do not match the groups".into(),
            ));
        }
        let mut rows = vec![Vec::new(); codomain.dim()];
        for (i, mut col) in columns.into_iter().enumerate() {
            col.sort_unstable_by_key(|&(j, _)| j);
            let order = domain.moduli[i];
            let mut t = 0;
            while t < col.len() {
                let j = col[t].0;
                let mut a = 0i64;
                while t < col.len() && col[t].0 == j {
                    a += col[t].1;
                    t += 1;
                }
                let b = codomain.moduli[j] as i64;
                let a = a.rem_euclid(b);
                if a == 0 {
                    continue;
                }
                if (a * order as i64) % b != 0 {
                    return Err(LinalgError::NotWellDefined {
                        generator: i,
                        order,
                        row: j,
                    });
                }
                rows[j].push((i, a));
            }
        }
        Ok(LinearMap {
            domain,
            codomain,
            rows,
        })
    }

    /// Builds the map by evaluating an additive function on unit vectors.
    pub fn from_fn(
        domain: CyclicProduct,
        codomain: CyclicProduct,
        f: impl Fn(&[i64]) -> Vec<i64>,
    ) -> Result<Self, LinalgError> {
        let columns: Vec<Vec<i64>> = (0..domain.dim()).map(|i| f(&domain.unit(i))).collect();
        Self::from_columns(domain, codomain, &columns)
    }

    pub fn domain(&self) -> &CyclicProduct {
        &self.domain
    }

    pub fn codomain(&self) -> &CyclicProduct {
        &self.codomain
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.domain.dim(), "argument has the wrong length");
        let out: Vec<i64> = self
            .rows
            .iter()
            .zip(self.codomain.moduli())
            .map(|(row, &m)| {
                let m = m as i64;
                row.iter()
                    .fold(0i64, |acc, &(i, a)| (acc + a * x[i]).rem_euclid(m))
            })
            .collect();
        out
    }

    /// Dense integer matrix (codomain rows × domain columns).
    pub fn matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.codomain.dim(), self.domain.dim());
        for (j, row) in self.rows.iter().enumerate() {
            for &(i, a) in row {
                m.add_i64(j, i, a);
            }
        }
        m
    }

    fn modulus(&self) -> i64 {
        lcm(
            self.domain.exponent() as i64,
            self.codomain.exponent() as i64,
        )
    }

    /// The constraint rows `(N/m_j)·row_j` (plus an optional right-hand side
    /// column), deduplicated and compressed modulo `N`.
    fn compressed_rows(&self, rhs: Option<&[i64]>) -> HowellForm {
        let n = self.modulus();
        let k = self.domain.dim();
        let width = k + usize::from(rhs.is_some());
        let mut h = HowellForm::new(n, width);
        let mut seen = HashSet::new();
        for (j, row) in self.rows.iter().enumerate() {
            let scale = n / self.codomain.moduli[j] as i64;
            let b = rhs.map_or(0, |r| r[j]);
            if row.is_empty() && b == 0 {
                continue;
            }
            let mut dense = vec![0i64; width];
            for &(i, a) in row {
                dense[i] = (dense[i] + scale * a).rem_euclid(n);
            }
            if rhs.is_some() {
                dense[k] = (-scale * b).rem_euclid(n);
            }
            if dense.iter().any(|&x| x != 0) && seen.insert(dense.clone()) {
                h.insert(&dense);
            }
        }
        h
    }

    pub fn kernel(&self) -> Subgroup {
        let n = self.modulus();
        let k = self.domain.dim();
        let h = self.compressed_rows(None);
        let rows: Vec<Vec<i64>> = h.rows().cloned().collect();
        if rows.is_empty() {
            return Subgroup::whole(&self.domain);
        }
        // x ∈ ker ⟺ B·x ≡ 0 (mod N) ⟺ D·(V⁻¹x) ≡ 0; so x = V·y with
        // y_i a multiple of N / gcd(D_ii, N).
        let snf = smith_normal_form(&IntMatrix::from_rows(k, &rows));
        let diag = snf.diagonal();
        let gens = (0..k).map(|i| {
            let d = diag.get(i).map_or(0, |d| residue(d, n as u64) as i64);
            let e = n / gcd(d, n);
            (0..k)
                .map(|t| (residue(snf.v.get(t, i), n as u64) as i64 * e).rem_euclid(n))
                .collect::<Vec<_>>()
        });
        Subgroup::generated_by(&self.domain, gens.collect::<Vec<_>>())
    }

    pub fn image(&self) -> Subgroup {
        let columns = (0..self.domain.dim()).map(|i| self.apply(&self.domain.unit(i)));
        Subgroup::generated_by(&self.codomain, columns.collect::<Vec<_>>())
    }

    /// Some `x` with `self.apply(x) == b`, or `None` when `b` is not in the image.
    #[allow(clippy::needless_range_loop)]
    pub fn solve(&self, b: &[i64]) -> Option<Vec<i64>> {
        assert_eq!(
            b.len(),
            self.codomain.dim(),
            "right-hand side has the wrong length"
        );
        let b = self.codomain.reduced(b);
        if b.iter().all(|&x| x == 0) {
            return Some(self.domain.zero());
        }
        let n = self.modulus();
        let k = self.domain.dim();
        let h = self.compressed_rows(Some(&b));
        // Each row [c | -β] encodes c·x ≡ β (mod N).
        let rows: Vec<Vec<i64>> = h.rows().cloned().collect();
        let coeffs: Vec<Vec<i64>> = rows.iter().map(|r| r[..k].to_vec()).collect();
        let beta: Vec<i64> = rows.iter().map(|r| (-r[k]).rem_euclid(n)).collect();
        let snf = smith_normal_form(&IntMatrix::from_rows(k, &coeffs));
        let diag = snf.diagonal();
        let mut y = vec![0i64; k];
        for i in 0..rows.len() {
            let ub: BigInt = (0..rows.len()).map(|t| snf.u.get(i, t) * beta[t]).sum();
            let ub = residue(&ub, n as u64) as i64;
            let d = diag.get(i).map_or(0, |d| residue(d, n as u64) as i64);
            let g = gcd(d, n);
            if ub % g != 0 {
                return None;
            }
            if i < k && d != 0 {
                let m = n / g;
                let (_, s, _) = super::howell::ext_gcd(d / g, m);
                y[i] = ((ub / g) * s).rem_euclid(m);
            }
        }
        let x: Vec<i64> = (0..k)
            .map(|t| {
                let s: BigInt = (0..k).map(|i| snf.v.get(t, i) * y[i]).sum();
                residue(&s, self.domain.moduli[t]) as i64
            })
            .collect();
        debug_assert_eq!(self.apply(&x), b);
        (self.apply(&x) == b).then_some(x)
    }
}

/// `ker(outgoing) / im(incoming)` for composable maps `incoming`, `outgoing`.
pub fn homology(incoming: &LinearMap, outgoing: &LinearMap) -> Result<Quotient, LinalgError> {
    if incoming.codomain != outgoing.domain {
        return Err(LinalgError::DimensionMismatch(
            "maps are not composable".into(),
        ));
    }
    quotient(&outgoing.kernel(), &incoming.image())
}

/// Number of elements as `u128` when it fits; handy for reports.
pub fn order_u128(order: &BigUint) -> Option<u128> {
    order.to_u128()
}

impl Subgroup {
    /// `true` when the subgroup is the whole ambient group.
    pub fn is_whole(&self) -> bool {
        self.order() == self.ambient.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order().is_one()
    }
}

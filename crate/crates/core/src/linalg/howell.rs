//! Echelon bases of submodules of `(ℤ/N)^k`.
//!
//! Rows are kept with distinct leading columns, each leading entry a divisor
//! of `N`. Whenever a leading entry `g` is created or shrunk the row times
//! `N/g` is inserted as well, which makes the basis a Howell basis: every
//! span element vanishing on the first `c` columns is a combination of the
//! rows leading at `c` or later. That property lets the rows, padded with
//! `N·e_c` on empty columns, serve as a lattice basis of the preimage of the
//! span in `ℤ^k`.

/// `(g, s, t)` with `g = gcd(a, b) >= 0` and `s·a + t·b = g`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    ext_gcd(a, b).0
}

pub fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        (a / gcd(a, b) * b).abs()
    }
}

/// A unit `u` modulo `n` with `u·a ≡ gcd(a, n) (mod n)`.
pub fn unit_normalizer(a: i64, n: i64) -> i64 {
    let a = a.rem_euclid(n);
    let g = gcd(a, n);
    if g == n {
        return 1;
    }
    let m = n / g;
    let (_, s, _) = ext_gcd(a / g, m);
    let base = s.rem_euclid(m);
    // lift the inverse modulo n/g to a unit modulo n
    (0..g)
        .map(|k| base + k * m)
        .find(|&u| gcd(u, n) == 1)
        .expect("a unit lift always exists")
}

#[derive(Clone, Debug)]
pub struct HowellForm {
    modulus: i64,
    dim: usize,
    pivots: Vec<Option<Vec<i64>>>,
}

impl HowellForm {
    pub fn new(modulus: i64, dim: usize) -> Self {
        assert!(modulus >= 1);
        HowellForm {
            modulus,
            dim,
            pivots: vec![None; dim],
        }
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Adds `v` (any integer vector, read modulo N) to the spanning set.
    pub fn insert(&mut self, v: &[i64]) {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let n = self.modulus;
        let mut work = vec![v.iter().map(|x| x.rem_euclid(n)).collect::<Vec<_>>()];
        while let Some(mut v) = work.pop() {
            let mut c = 0;
            loop {
                while c < self.dim && v[c] == 0 {
                    c += 1;
                }
                if c == self.dim {
                    break;
                }
                let a = v[c];
                match &self.pivots[c] {
                    None => {
                        let u = unit_normalizer(a, n);
                        scale_mod(&mut v, u, n);
                        let g = v[c];
                        let mut sat = v.clone();
                        scale_mod(&mut sat, n / g, n);
                        self.pivots[c] = Some(v);
                        work.push(sat);
                        break;
                    }
                    Some(p) => {
                        let g1 = p[c];
                        if a % g1 == 0 {
                            axpy_mod(&mut v, -(a / g1), p, n);
                            continue;
                        }
                        let (g, s, t) = ext_gcd(g1, a);
                        let mut q: Vec<i64> = p
                            .iter()
                            .zip(&v)
                            .map(|(&pi, &vi)| (s * pi + t * vi).rem_euclid(n))
                            .collect();
                        q[c] = g;
                        let r: Vec<i64> = p
                            .iter()
                            .zip(&v)
                            .map(|(&pi, &vi)| ((a / g) * pi - (g1 / g) * vi).rem_euclid(n))
                            .collect();
                        let mut sat = q.clone();
                        scale_mod(&mut sat, n / g, n);
                        self.pivots[c] = Some(q);
                        work.push(r);
                        work.push(sat);
                        break;
                    }
                }
            }
        }
    }

    /// Rows of the basis, ordered by leading column.
    pub fn rows(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.pivots.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.rows().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Leading entries `g_c` (with `N` on empty columns).
    pub fn leading_entries(&self) -> Vec<i64> {
        self.pivots
            .iter()
            .enumerate()
            .map(|(c, p)| p.as_ref().map_or(self.modulus, |r| r[c]))
            .collect()
    }

    /// An upper-triangular basis of the lattice `{x ∈ ℤ^k : x mod N ∈ span}`.
    pub fn lattice_basis(&self) -> Vec<Vec<i64>> {
        (0..self.dim)
            .map(|c| match &self.pivots[c] {
                Some(row) => row.clone(),
                None => {
                    let mut e = vec![0; self.dim];
                    e[c] = self.modulus;
                    e
                }
            })
            .collect()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        let n = self.modulus;
        let mut v: Vec<i64> = v.iter().map(|x| x.rem_euclid(n)).collect();
        for c in 0..self.dim {
            if v[c] == 0 {
                continue;
            }
            match &self.pivots[c] {
                Some(p) if v[c] % p[c] == 0 => {
                    let f = v[c] / p[c];
                    axpy_mod(&mut v, -f, p, n);
                }
                _ => return false,
            }
        }
        true
    }
}

fn scale_mod(v: &mut [i64], k: i64, n: i64) {
    for x in v.iter_mut() {
        *x = (*x * k).rem_euclid(n);
    }
}

fn axpy_mod(v: &mut [i64], k: i64, p: &[i64], n: i64) {
    for (x, &y) in v.iter_mut().zip(p) {
        if y != 0 {
            *x = (*x + k * y).rem_euclid(n);
        }
    }
}

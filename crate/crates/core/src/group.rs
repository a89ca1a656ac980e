//! The translation group `Z_{n₁} × … × Z_{n_d}` with elements identified by
//! their linear index `Σ gᵢ·Π_{j<i} nⱼ`, plus the subgroup enumerations used
//! by the Burnside/Möbius counting machinery.

use crate::numtheory::factorize;
use std::collections::{BTreeMap, BTreeSet};

/// A finite abelian group given as a product of cyclic factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Group {
    dims: Vec<usize>,
    order: usize,
}

/// A subgroup, stored as the sorted list of its element indices.
pub type Subgroup = Vec<usize>;

impl Group {
    pub fn new(dims: &[usize]) -> Self {
        Group {
            dims: dims.to_vec(),
            order: dims.iter().product(),
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coordinates of the element with the given index.
    pub fn coords(&self, mut i: usize) -> Vec<usize> {
        self.dims
            .iter()
            .map(|&n| {
                let c = i % n;
                i /= n;
                c
            })
            .collect()
    }

    /// Linear index of a coordinate vector (coordinates are reduced modulo the dims).
    pub fn index(&self, coords: &[usize]) -> usize {
        let mut r = 0;
        let mut m = 1;
        for (&c, &n) in coords.iter().zip(&self.dims) {
            r += (c % n) * m;
            m *= n;
        }
        r
    }

    pub fn add(&self, mut a: usize, mut b: usize) -> usize {
        let mut r = 0;
        let mut m = 1;
        for &n in &self.dims {
            r += ((a % n + b % n) % n) * m;
            a /= n;
            b /= n;
            m *= n;
        }
        r
    }

    pub fn neg(&self, mut a: usize) -> usize {
        let mut r = 0;
        let mut m = 1;
        for &n in &self.dims {
            r += ((n - a % n) % n) * m;
            a /= n;
            m *= n;
        }
        r
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `k·a` in additive notation.
    pub fn mul(&self, k: usize, mut a: usize) -> usize {
        let mut r = 0;
        let mut m = 1;
        for &n in &self.dims {
            r += ((a % n) * (k % n) % n) * m;
            a /= n;
            m *= n;
        }
        r
    }

    /// Order of an element.
    pub fn element_order(&self, a: usize) -> usize {
        self.coords(a)
            .iter()
            .zip(&self.dims)
            .map(|(&c, &n)| n / num_integer::gcd(c, n))
            .fold(1, num_integer::lcm)
    }

    /// The subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Subgroup {
        let mut seen = BTreeSet::new();
        seen.insert(0usize);
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.add(x, g);
                if seen.insert(y) {
                    frontier.push(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// The subgroup `P_f` generated by `fᵢ·eᵢ`; words fixed by it are exactly
    /// the tilings of words of size `f`.
    pub fn axis_subgroup(&self, f: &[usize]) -> Subgroup {
        let gens: Vec<usize> = (0..self.dims.len())
            .map(|i| {
                let mut c = vec![0; self.dims.len()];
                c[i] = f[i] % self.dims[i];
                self.index(&c)
            })
            .collect();
        self.closure(&gens)
    }

    /// Every cyclic subgroup together with its number of generators.
    pub fn cyclic_subgroups(&self) -> Vec<(Subgroup, usize)> {
        let mut map: BTreeMap<Subgroup, usize> = BTreeMap::new();
        for g in 0..self.order {
            *map.entry(self.closure(&[g])).or_insert(0) += 1;
        }
        map.into_iter().collect()
    }

    /// Every subgroup of the group.
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        let mut seen: BTreeSet<Subgroup> = BTreeSet::new();
        let trivial = vec![0usize];
        seen.insert(trivial.clone());
        let mut frontier = vec![trivial];
        while let Some(k) = frontier.pop() {
            for g in 0..self.order {
                if k.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = k.clone();
                gens.push(g);
                let k2 = self.closure(&gens);
                if seen.insert(k2.clone()) {
                    frontier.push(k2);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Every elementary abelian subgroup `K` (a product of elementary abelian
    /// p-groups) with the Möbius value `μ(0, K)` of the subgroup lattice.
    /// All other subgroups have `μ(0, K) = 0`.
    pub fn elementary_abelian_subgroups(&self) -> Vec<(Subgroup, i64)> {
        let primes: Vec<usize> = factorize(self.order).into_iter().map(|(p, _)| p).collect();
        let mut combos: Vec<(Subgroup, i64)> = vec![(vec![0], 1)];
        for p in primes {
            let omega: Vec<usize> = (0..self.order).filter(|&g| self.mul(p, g) == 0).collect();
            let mut seen: BTreeSet<Subgroup> = BTreeSet::new();
            seen.insert(vec![0]);
            let mut frontier = vec![vec![0usize]];
            while let Some(k) = frontier.pop() {
                for &a in &omega {
                    if k.binary_search(&a).is_ok() {
                        continue;
                    }
                    let mut gens = k.clone();
                    gens.push(a);
                    let k2 = self.closure(&gens);
                    if seen.insert(k2.clone()) {
                        frontier.push(k2);
                    }
                }
            }
            let mut next = Vec::new();
            for (base, mu) in &combos {
                for k in &seen {
                    let mut r = 0u32;
                    let mut s = k.len();
                    while s > 1 {
                        s /= p;
                        r += 1;
                    }
                    let sign = if r % 2 == 0 { 1 } else { -1 };
                    let mu_p = sign * (p as i64).pow(r * r.saturating_sub(1) / 2);
                    let mut gens = base.clone();
                    gens.extend_from_slice(k);
                    next.push((self.closure(&gens), mu * mu_p));
                }
            }
            combos = next;
        }
        combos
    }
}

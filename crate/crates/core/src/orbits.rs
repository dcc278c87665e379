//! Matrix groups acting on `GF(p)^n`: closure, orbits on nonzero vectors,
//! and the orbit-length checks.

use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::arith;
use crate::error::{Error, Result, Witness};

pub const DEFAULT_MAX_GROUP_ORDER: usize = 1_000_000;
pub const DEFAULT_MAX_SPACE: usize = 1 << 20;

/// Row-major `n x n` matrix over `GF(p)`.
pub type Matrix = Vec<Vec<u64>>;

type Flat = Vec<u32>;

/// A matrix group on `GF(p)^n`, given by generators. Vectors are encoded as
/// integers whose base-`p` digits are the coordinates, first coordinate
/// least significant.
#[derive(Debug)]
pub struct LinearAction {
    p: u64,
    n: usize,
    gens: Vec<Flat>,
    max_order: usize,
    elements: OnceLock<std::result::Result<Vec<Flat>, usize>>,
    orbits: OnceLock<Vec<usize>>,
}

fn flat_mul(a: &[u32], b: &[u32], n: usize, p: u64) -> Flat {
    let mut c = vec![0u32; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k] as u64;
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                c[i * n + j] = ((c[i * n + j] as u64 + aik * b[k * n + j] as u64) % p) as u32;
            }
        }
    }
    c
}

fn det_mod(m: &[u32], n: usize, p: u64) -> u64 {
    let mut a: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| m[i * n + j] as u64).collect()).collect();
    let mut det = 1u64;
    for c in 0..n {
        let Some(r) = (c..n).find(|&r| a[r][c] != 0) else {
            return 0;
        };
        if r != c {
            a.swap(r, c);
            det = (p - det) % p;
        }
        det = det * a[c][c] % p;
        let inv = arith::mod_inv(a[c][c], p);
        for r in c + 1..n {
            let f = a[r][c] * inv % p;
            for k in c..n {
                a[r][k] = (a[r][k] + p - f * a[c][k] % p) % p;
            }
        }
    }
    det
}

impl LinearAction {
    pub fn new(p: u64, n: usize, gens: &[Matrix]) -> Result<LinearAction> {
        Self::with_bounds(p, n, gens, DEFAULT_MAX_GROUP_ORDER, DEFAULT_MAX_SPACE)
    }

    pub fn with_bounds(
        p: u64,
        n: usize,
        gens: &[Matrix],
        max_order: usize,
        max_space: usize,
    ) -> Result<LinearAction> {
        if !arith::is_prime(p) {
            return Err(Error::InvalidMatrix(format!("{p} is not prime")));
        }
        if n == 0 {
            return Err(Error::InvalidMatrix("dimension must be positive".into()));
        }
        let space = (p as u128).pow(n as u32);
        if space > max_space as u128 {
            return Err(Error::BoundExceeded {
                order: usize::try_from(space).unwrap_or(usize::MAX),
                bound: max_space,
            });
        }
        let mut flat = Vec::with_capacity(gens.len());
        for (i, m) in gens.iter().enumerate() {
            if m.len() != n || m.iter().any(|r| r.len() != n) {
                return Err(Error::InvalidMatrix(format!("generator {i} is not {n} x {n}")));
            }
            if m.iter().flatten().any(|&x| x >= p) {
                return Err(Error::InvalidMatrix(format!("generator {i} has entries outside 0..{p}")));
            }
            let f: Flat = m.iter().flatten().map(|&x| x as u32).collect();
            if det_mod(&f, n, p) == 0 {
                return Err(Error::InvalidMatrix(format!("generator {i} is singular")));
            }
            flat.push(f);
        }
        Ok(LinearAction {
            p,
            n,
            gens: flat,
            max_order,
            elements: OnceLock::new(),
            orbits: OnceLock::new(),
        })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn space_size(&self) -> usize {
        (self.p as usize).pow(self.n as u32)
    }

    fn identity(&self) -> Flat {
        let n = self.n;
        (0..n * n).map(|k| (k / n == k % n) as u32).collect()
    }

    fn elements(&self) -> Result<&[Flat]> {
        let r = self.elements.get_or_init(|| {
            let id = self.identity();
            let mut seen: HashSet<Flat> = HashSet::from([id.clone()]);
            let mut all = vec![id.clone()];
            let mut queue = VecDeque::from([id]);
            while let Some(x) = queue.pop_front() {
                for g in &self.gens {
                    let y = flat_mul(&x, g, self.n, self.p);
                    if seen.insert(y.clone()) {
                        if all.len() >= self.max_order {
                            return Err(all.len() + 1);
                        }
                        all.push(y.clone());
                        queue.push_back(y);
                    }
                }
            }
            all.sort();
            Ok(all)
        });
        r.as_deref().map_err(|&order| Error::BoundExceeded {
            order,
            bound: self.max_order,
        })
    }

    pub fn group_order(&self) -> Result<usize> {
        Ok(self.elements()?.len())
    }

    /// All group elements as matrices, sorted.
    pub fn matrices(&self) -> Result<Vec<Matrix>> {
        let n = self.n;
        Ok(self
            .elements()?
            .iter()
            .map(|f| (0..n).map(|i| f[i * n..(i + 1) * n].iter().map(|&x| x as u64).collect()).collect())
            .collect())
    }

    pub fn decode(&self, mut x: usize) -> Vec<u64> {
        let p = self.p as usize;
        (0..self.n)
            .map(|_| {
                let d = x % p;
                x /= p;
                d as u64
            })
            .collect()
    }

    pub fn encode(&self, v: &[u64]) -> usize {
        v.iter().rev().fold(0usize, |acc, &d| acc * self.p as usize + d as usize)
    }

    fn apply(&self, m: &[u32], x: usize) -> usize {
        let v = self.decode(x);
        let n = self.n;
        let w: Vec<u64> = (0..n)
            .map(|i| (0..n).map(|j| m[i * n + j] as u64 * v[j]).sum::<u64>() % self.p)
            .collect();
        self.encode(&w)
    }

    /// Orbit id of every vector; ids are numbered by least member.
    fn orbit_ids(&self) -> &[usize] {
        self.orbits.get_or_init(|| {
            let size = self.space_size();
            let perms: Vec<Vec<usize>> = self
                .gens
                .iter()
                .map(|g| (0..size).map(|x| self.apply(g, x)).collect())
                .collect();
            let mut id = vec![usize::MAX; size];
            let mut next = 0;
            for start in 0..size {
                if id[start] != usize::MAX {
                    continue;
                }
                id[start] = next;
                let mut stack = vec![start];
                while let Some(x) = stack.pop() {
                    for perm in &perms {
                        let y = perm[x];
                        if id[y] == usize::MAX {
                            id[y] = next;
                            stack.push(y);
                        }
                    }
                }
                next += 1;
            }
            id
        })
    }

    /// Orbits on nonzero vectors, each sorted, ordered by least member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let ids = self.orbit_ids();
        let count = ids.iter().max().map_or(0, |m| m + 1);
        let mut out = vec![Vec::new(); count];
        for (x, &i) in ids.iter().enumerate() {
            out[i].push(x);
        }
        out.remove(0);
        out
    }

    /// Orbit sizes on nonzero vectors, sorted.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.orbits().iter().map(|o| o.len()).collect();
        s.sort_unstable();
        s
    }

    pub fn is_transitive_nonzero(&self) -> bool {
        self.orbits().len() == 1
    }

    pub fn regular_orbit_count(&self) -> Result<usize> {
        let order = self.group_order()?;
        Ok(self.orbits().iter().filter(|o| o.len() == order).count())
    }

    /// For odd `p`, each orbit `O` has `-O` as an orbit of the same size.
    pub fn negation_pairing(&self) -> Result<bool> {
        if self.p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        let ids = self.orbit_ids();
        let orbits = self.orbits();
        let neg = |x: usize| -> usize {
            let v: Vec<u64> = self.decode(x).iter().map(|&d| (self.p - d) % self.p).collect();
            self.encode(&v)
        };
        Ok(orbits.iter().all(|o| {
            let target = ids[neg(o[0])];
            o.iter().all(|&x| ids[neg(x)] == target)
                && ids.iter().filter(|&&i| i == target).count() == o.len()
        }))
    }

    /// No proper nonzero invariant subspace: the orbit of every nonzero
    /// vector spans `V`.
    pub fn is_irreducible(&self) -> bool {
        self.orbits().iter().all(|o| self.span_dim(o) == self.n)
    }

    fn span_dim(&self, vectors: &[usize]) -> usize {
        let p = self.p;
        let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
        for &x in vectors {
            let mut v = self.decode(x);
            for (piv, b) in &basis {
                let f = v[*piv];
                if f != 0 {
                    for (vi, &bi) in v.iter_mut().zip(b) {
                        *vi = (*vi + p - f * bi % p) % p;
                    }
                }
            }
            if let Some(piv) = v.iter().position(|&d| d != 0) {
                let inv = arith::mod_inv(v[piv], p);
                for d in v.iter_mut() {
                    *d = *d * inv % p;
                }
                basis.push((piv, v));
                if basis.len() == self.n {
                    break;
                }
            }
        }
        basis.len()
    }

    fn require_odd_odd(&self) -> Result<usize> {
        if self.p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        let order = self.group_order()?;
        if order % 2 == 0 {
            return Err(Error::EvenOrder(order));
        }
        Ok(order)
    }

    /// An odd-order group on `GF(p)^n`, `p` odd, has two orbits of equal
    /// length on nonzero vectors.
    pub fn dade_duplicate_check(&self) -> Result<bool> {
        let order = self.require_odd_odd()?;
        let sizes = self.orbit_sizes();
        let dup = sizes.windows(2).any(|w| w[0] == w[1]);
        if !dup {
            return Err(Error::violation(
                Witness::new("odd-order action has two orbits of equal length on V*", self.describe())
                    .detail("group_order", order)
                    .detail("orbit_sizes", format!("{sizes:?}")),
            ));
        }
        Ok(true)
    }

    /// If an irreducible action has pairwise distinct orbit sizes on
    /// nonzero vectors, it is transitive on them.
    pub fn distinct_sizes_scan(&self) -> Result<DistinctSizesReport> {
        let sizes = self.orbit_sizes();
        let distinct = sizes.windows(2).all(|w| w[0] != w[1]);
        let irreducible = self.is_irreducible();
        let transitive = sizes.len() == 1;
        let hypothesis = distinct && irreducible;
        if hypothesis && !transitive {
            return Err(Error::violation(
                Witness::new("distinct orbit sizes imply transitivity on V*", self.describe())
                    .detail("orbit_sizes", format!("{sizes:?}")),
            ));
        }
        if transitive {
            let order = self.group_order()?;
            if order % (self.space_size() - 1) != 0 {
                return Err(Error::ContractViolation(format!(
                    "transitive group of order {order} on {} nonzero vectors",
                    self.space_size() - 1
                )));
            }
        }
        Ok(DistinctSizesReport {
            orbit_sizes: sizes,
            irreducible,
            hypothesis,
            transitive,
        })
    }

    pub fn describe(&self) -> String {
        format!("<{} generators> on GF({})^{}", self.gens.len(), self.p, self.n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinctSizesReport {
    pub orbit_sizes: Vec<usize>,
    pub irreducible: bool,
    /// Irreducible with pairwise distinct orbit sizes.
    pub hypothesis: bool,
    pub transitive: bool,
}

/// All invertible `n x n` matrices over `GF(p)`.
pub fn general_linear(p: u64, n: usize) -> Vec<Matrix> {
    let entries = n * n;
    let total = (p as usize).pow(entries as u32);
    (0..total)
        .filter_map(|mut code| {
            let f: Flat = (0..entries)
                .map(|_| {
                    let d = code % p as usize;
                    code /= p as usize;
                    d as u32
                })
                .collect();
            (det_mod(&f, n, p) != 0)
                .then(|| (0..n).map(|i| f[i * n..(i + 1) * n].iter().map(|&x| x as u64).collect()).collect())
        })
        .collect()
}

/// Subgroups of `GL(n, p)` generated by one or two elements, deduplicated
/// by element set, as generator lists.
pub fn small_subgroups(p: u64, n: usize) -> Result<Vec<Vec<Matrix>>> {
    let gl = general_linear(p, n);
    let mut seen: HashSet<Vec<Flat>> = HashSet::new();
    let mut out = Vec::new();
    let mut consider = |gens: Vec<Matrix>| -> Result<()> {
        let a = LinearAction::new(p, n, &gens)?;
        let key = a.elements()?.to_vec();
        if seen.insert(key) {
            out.push(gens);
        }
        Ok(())
    };
    consider(Vec::new())?;
    for a in &gl {
        consider(vec![a.clone()])?;
    }
    for (i, a) in gl.iter().enumerate() {
        for b in &gl[i + 1..] {
            consider(vec![a.clone(), b.clone()])?;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DadeScan {
    pub p: u64,
    pub n: usize,
    pub subgroups: usize,
    pub odd_subgroups: usize,
    pub confirmed: usize,
    pub negation_pairs: usize,
}

/// Runs the Dade and negation checks over every odd-order subgroup of
/// `GL(n, p)` found by [`small_subgroups`].
pub fn dade_scan(p: u64, n: usize) -> Result<DadeScan> {
    let subs = small_subgroups(p, n)?;
    let results = subs
        .par_iter()
        .map(|gens| -> Result<Option<(bool, bool)>> {
            let a = LinearAction::new(p, n, gens)?;
            if a.group_order()? % 2 == 0 {
                return Ok(None);
            }
            Ok(Some((a.dade_duplicate_check()?, a.negation_pairing()?)))
        })
        .collect::<Result<Vec<_>>>()?;
    let odd: Vec<(bool, bool)> = results.into_iter().flatten().collect();
    Ok(DadeScan {
        p,
        n,
        subgroups: subs.len(),
        odd_subgroups: odd.len(),
        confirmed: odd.iter().filter(|r| r.0).count(),
        negation_pairs: odd.iter().filter(|r| r.1).count(),
    })
}

//! Finite groups given by an explicit multiplication table.
//!
//! Elements are dense ids `0..n` with the identity fixed at `0`. Every
//! higher structure (subgroups, classes, quotients) refers to ids only.

mod classes;
mod lattice;
mod structure;
mod subgroup;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};

pub use classes::ConjugacyClasses;
pub use structure::{ChiefSeries, IteratedSeries, Radicals};
pub use subgroup::{QuotientMap, Subgroup};

/// Default order bound for subgroup-lattice operations.
pub const DEFAULT_LATTICE_BOUND: usize = 2000;

/// Orders up to this bound get exhaustive associativity checks.
const EXHAUSTIVE_ASSOCIATIVITY: usize = 256;

pub struct Group {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    elt_order: Vec<u32>,
    label: String,
    classes: OnceLock<ConjugacyClasses>,
    normals: OnceLock<Vec<Subgroup>>,
}

impl Clone for Group {
    fn clone(&self) -> Self {
        Group {
            order: self.order,
            mul: self.mul.clone(),
            inv: self.inv.clone(),
            elt_order: self.elt_order.clone(),
            label: self.label.clone(),
            classes: self.classes.clone(),
            normals: self.normals.clone(),
        }
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}

impl Eq for Group {}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish()
    }
}

impl Group {
    /// Builds a group from a full Cayley table and checks every group axiom.
    pub fn from_table(label: impl Into<String>, table: &[Vec<usize>]) -> Result<Group> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::InvalidGroup(format!("entry {x} out of range in row {i}")));
                }
                flat.push(x as u32);
            }
        }
        let g = Group::from_flat(label.into(), n, flat)?;
        g.validate()?;
        Ok(g)
    }

    /// Builds a group from a flat row-major table without the associativity
    /// scan. Used by constructions whose output is a group by design.
    pub(crate) fn from_flat(label: String, n: usize, mul: Vec<u32>) -> Result<Group> {
        if mul.len() != n * n {
            return Err(Error::InvalidGroup("table is not square".into()));
        }
        for g in 0..n {
            if mul[g] as usize != g || mul[g * n] as usize != g {
                return Err(Error::InvalidGroup(format!(
                    "element 0 is not the identity (fails at {g})"
                )));
            }
        }
        let mut inv = vec![u32::MAX; n];
        for g in 0..n {
            let row = &mul[g * n..(g + 1) * n];
            match row.iter().position(|&x| x == 0) {
                Some(h) => inv[g] = h as u32,
                None => return Err(Error::InvalidGroup(format!("element {g} has no inverse"))),
            }
        }
        for g in 0..n {
            if mul[inv[g] as usize * n + g] != 0 {
                return Err(Error::InvalidGroup(format!("inverse of {g} is not two-sided")));
            }
        }
        let mut elt_order = vec![0u32; n];
        for g in 0..n {
            let mut x = g;
            let mut k = 1;
            while x != 0 {
                x = mul[x * n + g] as usize;
                k += 1;
                if k > n + 1 {
                    return Err(Error::InvalidGroup(format!("element {g} has no finite order")));
                }
            }
            elt_order[g] = k as u32;
        }
        Ok(Group {
            order: n,
            mul,
            inv,
            elt_order,
            label,
            classes: OnceLock::new(),
            normals: OnceLock::new(),
        })
    }

    /// Checks the Latin-square property and associativity.
    ///
    /// Associativity is checked on every triple up to order 256 and on
    /// `10 n^2` seeded random triples above that.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        let mut seen = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                let x = self.mul(a, b);
                if seen[x] == a {
                    return Err(Error::InvalidGroup(format!("row {a} repeats entry {x}")));
                }
                seen[x] = a;
            }
        }
        for x in seen.iter_mut() {
            *x = usize::MAX;
        }
        for b in 0..n {
            for a in 0..n {
                let x = self.mul(a, b);
                if seen[x] == b {
                    return Err(Error::InvalidGroup(format!("column {b} repeats entry {x}")));
                }
                seen[x] = b;
            }
        }
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                Err(Error::InvalidGroup(format!(
                    "associativity fails for ({a}, {b}, {c})"
                )))
            } else {
                Ok(())
            }
        };
        if n <= EXHAUSTIVE_ASSOCIATIVITY {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return check(a, b, c);
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x5eed_cafe);
            for _ in 0..10 * n * n {
                let a = rng.random_range(0..n);
                let b = rng.random_range(0..n);
                let c = rng.random_range(0..n);
                check(a, b, c)?;
            }
        }
        Ok(())
    }

    /// Materializes the group generated by permutations of `0..degree`.
    ///
    /// Products compose left to right: `(ab)(x) = b(a(x))`. Elements get ids
    /// in breadth-first discovery order from the identity.
    pub fn from_permutation_generators(
        label: impl Into<String>,
        degree: usize,
        gens: &[Vec<usize>],
        bound: usize,
    ) -> Result<Group> {
        for g in gens {
            if !is_permutation(g, degree) {
                return Err(Error::InvalidGroup(format!(
                    "generator {g:?} is not a permutation of degree {degree}"
                )));
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut elems = vec![identity.clone()];
        index.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let next = compose(&elems[i], g);
                if !index.contains_key(&next) {
                    if elems.len() >= bound {
                        return Err(Error::BoundExceeded {
                            order: elems.len() + 1,
                            bound,
                        });
                    }
                    index.insert(next.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(next);
                }
            }
        }
        Group::from_permutation_elements(label.into(), &elems, &index)
    }

    /// Materializes an explicit list of permutations closed under composition.
    /// The first entry must be the identity.
    pub fn from_permutation_list(label: impl Into<String>, perms: &[Vec<usize>]) -> Result<Group> {
        let index: HashMap<Vec<usize>, usize> =
            perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        if index.len() != perms.len() {
            return Err(Error::InvalidGroup("repeated permutation".into()));
        }
        Group::from_permutation_elements(label.into(), perms, &index)
    }

    fn from_permutation_elements(
        label: String,
        elems: &[Vec<usize>],
        index: &HashMap<Vec<usize>, usize>,
    ) -> Result<Group> {
        let n = elems.len();
        let mut mul = Vec::with_capacity(n * n);
        for a in elems {
            for b in elems {
                let c = compose(a, b);
                match index.get(&c) {
                    Some(&k) => mul.push(k as u32),
                    None => return Err(Error::InvalidGroup("permutation list is not closed".into())),
                }
            }
        }
        Group::from_flat(label, n, mul)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    #[inline]
    pub fn elt_order(&self, a: usize) -> usize {
        self.elt_order[a] as usize
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// `g x g^-1`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let k = k % self.elt_order(a);
        let mut x = 0;
        for _ in 0..k {
            x = self.mul(x, a);
        }
        x
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.elt_order
            .iter()
            .fold(1u64, |acc, &o| crate::arith::lcm(acc, o as u64))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Number of elements of each order, as sorted `(order, count)` pairs.
    pub fn order_profile(&self) -> Vec<(usize, usize)> {
        let mut counts: std::collections::BTreeMap<usize, usize> = Default::default();
        for &o in &self.elt_order {
            *counts.entry(o as usize).or_default() += 1;
        }
        counts.into_iter().collect()
    }

    /// The subgroup generated by `gens`.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Subgroup {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut elems = vec![0usize];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &s in gens {
                let y = self.mul(x, s);
                if !member[y] {
                    member[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        Subgroup::from_sorted_unchecked(self, collect_members(&member))
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted_normal(self, vec![0])
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted_normal(self, (0..self.order).collect())
    }
}

pub(crate) fn collect_members(member: &[bool]) -> Vec<usize> {
    member
        .iter()
        .enumerate()
        .filter_map(|(i, &m)| m.then_some(i))
        .collect()
}

fn is_permutation(p: &[usize], degree: usize) -> bool {
    if p.len() != degree {
        return false;
    }
    let mut seen = vec![false; degree];
    for &x in p {
        if x >= degree || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// Left-to-right composition: apply `a`, then `b`.
pub(crate) fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().map(|&x| b[x]).collect()
}

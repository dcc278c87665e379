use std::collections::HashSet;

use super::{collect_members, Group, Subgroup, DEFAULT_LATTICE_BOUND};
use crate::error::{Error, Result};

impl Group {
    /// All normal subgroups, sorted by order then elements.
    pub fn normal_subgroups(&self) -> Result<&[Subgroup]> {
        self.normal_subgroups_bounded(DEFAULT_LATTICE_BOUND)
    }

    pub fn normal_subgroups_bounded(&self, bound: usize) -> Result<&[Subgroup]> {
        if self.order() > bound {
            return Err(Error::BoundExceeded {
                order: self.order(),
                bound,
            });
        }
        Ok(self.normals.get_or_init(|| self.compute_normal_subgroups()))
    }

    /// Every normal subgroup is the join of the normal closures of the
    /// classes it contains, so closing `{1}` under joins with class
    /// closures reaches the whole lattice.
    fn compute_normal_subgroups(&self) -> Vec<Subgroup> {
        let cl = self.conjugacy_classes();
        let mut closures: Vec<Subgroup> = Vec::new();
        let mut seen_closure = HashSet::new();
        for i in 1..cl.len() {
            let s = self.generated_subgroup(cl.class(i));
            let s = Subgroup::from_sorted_normal(self, s.elements().to_vec());
            if seen_closure.insert(s.clone()) {
                closures.push(s);
            }
        }
        let trivial = self.trivial_subgroup();
        let mut found: HashSet<Subgroup> = HashSet::from([trivial.clone()]);
        let mut all = vec![trivial];
        let mut i = 0;
        while i < all.len() {
            let a = all[i].clone();
            for k in &closures {
                if k.is_subset_of(&a) {
                    continue;
                }
                let j = self.normal_product(&a, k);
                if !found.contains(&j) {
                    found.insert(j.clone());
                    all.push(j);
                }
            }
            i += 1;
        }
        all.sort();
        all
    }

    fn normal_product(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut member = vec![false; self.order()];
        for &x in a.elements() {
            for &y in b.elements() {
                member[self.mul(x, y)] = true;
            }
        }
        Subgroup::from_sorted_normal(self, collect_members(&member))
    }

    /// Nontrivial normal subgroups containing no smaller nontrivial one.
    pub fn minimal_normal_subgroups(&self) -> Result<Vec<Subgroup>> {
        let normals = self.normal_subgroups()?;
        let nontrivial: Vec<&Subgroup> = normals.iter().filter(|s| !s.is_trivial()).collect();
        Ok(nontrivial
            .iter()
            .filter(|s| {
                !nontrivial
                    .iter()
                    .any(|t| t.order() < s.order() && t.is_subset_of(s))
            })
            .map(|s| (*s).clone())
            .collect())
    }

    pub fn is_minimal_normal(&self, n: &Subgroup) -> Result<bool> {
        Ok(self.minimal_normal_subgroups()?.iter().any(|m| m == n))
    }

    /// Looks up a subgroup in the normal lattice (so the cached copy with
    /// the normal flag is returned).
    pub fn find_normal(&self, elements: &[usize]) -> Result<Option<Subgroup>> {
        Ok(self
            .normal_subgroups()?
            .iter()
            .find(|s| s.elements() == elements)
            .cloned())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> Group {
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Group::from_table(format!("C{n}"), &table).unwrap()
    }

    fn orders(v: &[Subgroup]) -> Vec<usize> {
        v.iter().map(|s| s.order()).collect()
    }

    /// Oracle: enumerate every union of classes containing the identity
    /// and keep the multiplicatively closed ones.
    fn brute_force_normals(g: &Group) -> Vec<Subgroup> {
        let cl = g.conjugacy_classes();
        let k = cl.len();
        assert!(k <= 16);
        let mut out = Vec::new();
        for mask in 0u32..(1 << (k - 1)) {
            let mut member = vec![false; g.order()];
            member[0] = true;
            for c in 1..k {
                if mask >> (c - 1) & 1 == 1 {
                    for &x in cl.class(c) {
                        member[x] = true;
                    }
                }
            }
            let elems = collect_members(&member);
            if elems.iter().all(|&a| elems.iter().all(|&b| member[g.mul(a, b)])) {
                out.push(Subgroup::from_sorted_normal(g, elems));
            }
        }
        out.sort();
        out
    }

    #[test]
    fn prime_cyclic() {
        let g = cyclic(7);
        assert_eq!(orders(g.normal_subgroups().unwrap()), vec![1, 7]);
    }

    #[test]
    fn matches_class_union_oracle() {
        let s3 = Group::from_permutation_generators("S3", 3, &[vec![1, 0, 2], vec![1, 2, 0]], 100)
            .unwrap();
        let s4 = Group::from_permutation_generators(
            "S4",
            4,
            &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]],
            100,
        )
        .unwrap();
        for g in [s3, s4, cyclic(12)] {
            assert_eq!(g.normal_subgroups().unwrap(), brute_force_normals(&g).as_slice());
        }
    }

    #[test]
    fn minimal_normals() {
        let a4 = Group::from_permutation_generators(
            "A4",
            4,
            &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]],
            100,
        )
        .unwrap();
        assert_eq!(a4.order(), 12);
        assert_eq!(orders(&a4.minimal_normal_subgroups().unwrap()), vec![4]);
        let v4 = Group::from_table(
            "V4",
            &[vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]],
        )
        .unwrap();
        assert_eq!(orders(&v4.minimal_normal_subgroups().unwrap()), vec![2, 2, 2]);
    }

    #[test]
    fn bound_is_enforced() {
        let g = cyclic(30);
        assert!(matches!(
            g.normal_subgroups_bounded(20),
            Err(Error::BoundExceeded { order: 30, bound: 20 })
        ));
    }
}

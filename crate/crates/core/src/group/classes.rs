use super::{collect_members, Group, Subgroup};

/// Partition of a group into conjugacy classes.
///
/// Classes are ordered by their least element, so class `0` is `{0}`, and
/// each class lists its members in increasing order. The representative of
/// a class is its least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClasses {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl ConjugacyClasses {
    fn compute(g: &Group) -> Self {
        let n = g.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut member = vec![false; n];
            for h in 0..n {
                member[g.conj(h, x)] = true;
            }
            let class = collect_members(&member);
            for &y in &class {
                class_of[y] = c;
            }
            classes.push(class);
        }
        ConjugacyClasses { classes, class_of }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[usize] {
        &self.classes[i]
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn rep(&self, i: usize) -> usize {
        self.classes[i][0]
    }

    pub fn reps(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn size(&self, i: usize) -> usize {
        self.classes[i].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.len()).collect()
    }

    /// Class containing the inverses of class `i`.
    pub fn inverse_class(&self, g: &Group, i: usize) -> usize {
        self.class_of[g.inv(self.rep(i))]
    }

    /// Class of `rep(i)^k`.
    pub fn power_class(&self, g: &Group, i: usize, k: usize) -> usize {
        self.class_of[g.pow(self.rep(i), k)]
    }
}

impl Group {
    /// Conjugacy classes, computed once and cached.
    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| ConjugacyClasses::compute(self))
    }

    pub fn centralizer(&self, x: usize) -> Subgroup {
        let elems: Vec<usize> = (0..self.order())
            .filter(|&h| self.mul(h, x) == self.mul(x, h))
            .collect();
        Subgroup::from_sorted_unchecked(self, elems)
    }

    pub fn centralizer_order(&self, x: usize) -> usize {
        let cl = self.conjugacy_classes();
        self.order() / cl.size(cl.class_of(x))
    }

    pub fn center(&self) -> Subgroup {
        let cl = self.conjugacy_classes();
        let elems: Vec<usize> = (0..self.order())
            .filter(|&x| cl.size(cl.class_of(x)) == 1)
            .collect();
        Subgroup::from_sorted_normal(self, elems)
    }

    /// Subgroup generated by all commutators.
    pub fn derived_subgroup(&self) -> Subgroup {
        let n = self.order();
        let mut member = vec![false; n];
        for a in 0..n {
            for b in 0..n {
                member[self.commutator(a, b)] = true;
            }
        }
        let gens = collect_members(&member);
        let s = self.generated_subgroup(&gens);
        Subgroup::from_sorted_normal(self, s.elements().to_vec())
    }

    /// Centralizer in `self` of a subgroup.
    pub fn centralizer_of(&self, s: &Subgroup) -> Subgroup {
        let elems: Vec<usize> = (0..self.order())
            .filter(|&h| s.elements().iter().all(|&x| self.mul(h, x) == self.mul(x, h)))
            .collect();
        Subgroup::from_sorted_unchecked(self, elems)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Group {
        Group::from_permutation_generators("S3", 3, &[vec![1, 0, 2], vec![1, 2, 0]], 100).unwrap()
    }

    fn q8() -> Group {
        // Q8 as a regular permutation group on its own elements is awkward;
        // use the 8-point representation generated by i and j.
        let i = vec![1, 2, 3, 0, 7, 4, 5, 6];
        let j = vec![4, 5, 6, 7, 2, 3, 0, 1];
        Group::from_permutation_generators("Q8", 8, &[i, j], 100).unwrap()
    }

    fn sorted_sizes(g: &Group) -> Vec<usize> {
        let mut s = g.conjugacy_classes().sizes();
        s.sort();
        s
    }

    #[test]
    fn class_sizes_brute_force() {
        assert_eq!(sorted_sizes(&s3()), vec![1, 2, 3]);
        let q = q8();
        assert_eq!(q.order(), 8);
        assert_eq!(sorted_sizes(&q), vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn class_equation_and_centralizers() {
        for g in [s3(), q8()] {
            let cl = g.conjugacy_classes();
            assert_eq!(cl.class(0), &[0]);
            assert_eq!(cl.sizes().iter().sum::<usize>(), g.order());
            for x in g.elements() {
                let c = g.centralizer(x);
                assert_eq!(c.order() * cl.size(cl.class_of(x)), g.order());
                assert_eq!(c.order(), g.centralizer_order(x));
            }
            assert_eq!(g.centralizer(0).order(), g.order());
        }
    }

    #[test]
    fn transposition_and_order_four_centralizers() {
        let g = s3();
        let t = g.elements().find(|&x| g.elt_order(x) == 2).unwrap();
        assert_eq!(g.centralizer(t), g.generated_subgroup(&[t]));
        let q = q8();
        let x = q.elements().find(|&x| q.elt_order(x) == 4).unwrap();
        assert_eq!(q.centralizer(x), q.generated_subgroup(&[x]));
    }

    #[test]
    fn center_and_derived() {
        assert_eq!(q8().center().order(), 2);
        assert_eq!(s3().derived_subgroup().order(), 3);
        assert_eq!(s3().center().order(), 1);
        assert_eq!(q8().derived_subgroup().order(), 2);
    }
}

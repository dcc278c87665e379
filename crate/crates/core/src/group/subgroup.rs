use std::hash::{Hash, Hasher};

use super::{collect_members, Group};
use crate::error::{Error, Result};

/// A subgroup of some parent group, stored as a sorted id list plus a
/// membership bitset. The parent is not referenced; callers pass it.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elements: Vec<usize>,
    mask: Vec<u64>,
    is_normal: bool,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mask.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by size, then lexicographically by elements.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.elements
            .len()
            .cmp(&other.elements.len())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

pub(crate) fn mask_of(parent_order: usize, elements: &[usize]) -> Vec<u64> {
    let mut mask = vec![0u64; parent_order.div_ceil(64)];
    for &x in elements {
        mask[x / 64] |= 1 << (x % 64);
    }
    mask
}

impl Subgroup {
    /// Checks that `elements` is a subgroup of `g`.
    pub fn new(g: &Group, elements: &[usize]) -> Result<Subgroup> {
        let mut member = vec![false; g.order()];
        for &x in elements {
            if x >= g.order() {
                return Err(Error::InvalidSubgroup(format!("element {x} out of range")));
            }
            member[x] = true;
        }
        if !member[0] {
            return Err(Error::InvalidSubgroup("does not contain the identity".into()));
        }
        let elems = collect_members(&member);
        for &a in &elems {
            if !member[g.inv(a)] {
                return Err(Error::InvalidSubgroup(format!("not closed under inverse at {a}")));
            }
            for &b in &elems {
                if !member[g.mul(a, b)] {
                    return Err(Error::InvalidSubgroup(format!(
                        "not closed under product at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(Subgroup::from_sorted_unchecked(g, elems))
    }

    /// Sorted, closed element list; normality is computed here.
    pub(crate) fn from_sorted_unchecked(g: &Group, elements: Vec<usize>) -> Subgroup {
        let mask = mask_of(g.order(), &elements);
        let mut s = Subgroup {
            elements,
            mask,
            is_normal: false,
        };
        s.is_normal = s
            .elements
            .iter()
            .all(|&h| (0..g.order()).all(|x| s.contains(g.conj(x, h))));
        s
    }

    /// Sorted, closed element list already known to be normal.
    pub(crate) fn from_sorted_normal(g: &Group, elements: Vec<usize>) -> Subgroup {
        let mask = mask_of(g.order(), &elements);
        Subgroup {
            elements,
            mask,
            is_normal: true,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn is_normal(&self) -> bool {
        self.is_normal
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        let w = x / 64;
        w < self.mask.len() && (self.mask[w] >> (x % 64)) & 1 == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.mask.len() == other.mask.len()
            && self.mask.iter().zip(&other.mask).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, g: &Group, other: &Subgroup) -> Subgroup {
        let elems: Vec<usize> = self
            .elements
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        if self.is_normal && other.is_normal {
            Subgroup::from_sorted_normal(g, elems)
        } else {
            Subgroup::from_sorted_unchecked(g, elems)
        }
    }

    /// The subgroup generated by two subgroups.
    pub fn join(&self, g: &Group, other: &Subgroup) -> Subgroup {
        if self.is_normal || other.is_normal {
            let mut member = vec![false; g.order()];
            for &a in &self.elements {
                for &b in &other.elements {
                    member[g.mul(a, b)] = true;
                }
            }
            let elems = collect_members(&member);
            if self.is_normal && other.is_normal {
                return Subgroup::from_sorted_normal(g, elems);
            }
            return Subgroup::from_sorted_unchecked(g, elems);
        }
        let gens: Vec<usize> = self
            .elements
            .iter()
            .chain(other.elements.iter())
            .copied()
            .collect();
        g.generated_subgroup(&gens)
    }

    /// Position of `x` in the sorted element list: its id in the
    /// materialized group.
    pub fn local_id(&self, x: usize) -> Option<usize> {
        if !self.contains(x) {
            return None;
        }
        self.elements.binary_search(&x).ok()
    }

    /// Materializes the subgroup as a standalone group whose element `i`
    /// is `self.elements()[i]` in the parent.
    pub fn materialize(&self, g: &Group, label: impl Into<String>) -> Group {
        let m = self.elements.len();
        let mut lookup = vec![u32::MAX; g.order()];
        for (i, &x) in self.elements.iter().enumerate() {
            lookup[x] = i as u32;
        }
        let mut mul = Vec::with_capacity(m * m);
        for &a in &self.elements {
            for &b in &self.elements {
                mul.push(lookup[g.mul(a, b)]);
            }
        }
        Group::from_flat(label.into(), m, mul).expect("closed subgroup materializes to a group")
    }

    /// Re-expresses `self` (a subgroup of the parent) inside the
    /// materialization of `sup`.
    pub fn relative_to(&self, sup: &Subgroup, sup_group: &Group) -> Result<Subgroup> {
        if !self.is_subset_of(sup) {
            return Err(Error::InvalidSubgroup("not contained in the overgroup".into()));
        }
        let local: Vec<usize> = self
            .elements
            .iter()
            .map(|&x| sup.local_id(x).expect("subset"))
            .collect();
        Ok(Subgroup::from_sorted_unchecked(sup_group, local))
    }

    /// Maps a subgroup of the materialization of `self` back to parent ids.
    pub fn lift_local(&self, g: &Group, local: &Subgroup) -> Subgroup {
        let elems: Vec<usize> = local.elements.iter().map(|&i| self.elements[i]).collect();
        Subgroup::from_sorted_unchecked(g, elems)
    }
}

/// The natural projection `G -> G/N`.
///
/// Cosets are numbered by their least element id, so the identity coset is
/// `0` and the numbering is increasing in the coset minima.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    kernel: Subgroup,
    image: Group,
    projection: Vec<usize>,
    coset_reps: Vec<usize>,
}

impl QuotientMap {
    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn image(&self) -> &Group {
        &self.image
    }

    pub fn project(&self, g: usize) -> usize {
        self.projection[g]
    }

    pub fn projection(&self) -> &[usize] {
        &self.projection
    }

    /// Least element of each coset, indexed by image id.
    pub fn coset_reps(&self) -> &[usize] {
        &self.coset_reps
    }

    /// Full preimage of a subgroup of the image.
    pub fn preimage(&self, source: &Group, sub: &Subgroup) -> Subgroup {
        let elems: Vec<usize> = (0..source.order())
            .filter(|&g| sub.contains(self.projection[g]))
            .collect();
        Subgroup::from_sorted_unchecked(source, elems)
    }

    /// Image of a subgroup of the source.
    pub fn image_of(&self, sub: &Subgroup) -> Subgroup {
        let mut member = vec![false; self.image.order()];
        for &x in sub.elements() {
            member[self.projection[x]] = true;
        }
        Subgroup::from_sorted_unchecked(&self.image, collect_members(&member))
    }
}

impl Group {
    pub fn quotient(&self, n: &Subgroup) -> Result<QuotientMap> {
        if !n.is_normal() {
            return Err(Error::NotNormal);
        }
        let size = self.order();
        let mut projection = vec![usize::MAX; size];
        let mut reps = Vec::new();
        for g in 0..size {
            if projection[g] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(g);
            for &k in n.elements() {
                projection[self.mul(g, k)] = c;
            }
        }
        let m = reps.len();
        let mut mul = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                mul.push(projection[self.mul(a, b)] as u32);
            }
        }
        let image = Group::from_flat(format!("{}/N{}", self.label(), n.order()), m, mul)?;
        Ok(QuotientMap {
            kernel: n.clone(),
            image,
            projection,
            coset_reps: reps,
        })
    }
}

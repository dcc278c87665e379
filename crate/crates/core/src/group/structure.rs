use std::collections::HashSet;

use super::{Group, QuotientMap, Subgroup};
use crate::arith;
use crate::error::{Error, Result};

/// `O_p`, `O_p'`, `O^p'` and the Fitting subgroup for one prime.
#[derive(Clone, Debug)]
pub struct Radicals {
    pub p: u64,
    pub o_p: Subgroup,
    pub o_p_prime: Subgroup,
    pub o_upper_p_prime: Subgroup,
    pub fitting: Subgroup,
}

/// `O_p <= O_{p,p'} <= O_{p,p',p}`.
#[derive(Clone, Debug)]
pub struct IteratedSeries {
    pub o_p: Subgroup,
    pub o_p_pprime: Subgroup,
    pub o_p_pprime_p: Subgroup,
}

/// A chief series `1 = N_0 < N_1 < ... < N_r = G` with its factors
/// `N_{i+1}/N_i`, each minimal normal in `G/N_i`.
#[derive(Clone, Debug)]
pub struct ChiefSeries {
    pub terms: Vec<Subgroup>,
    pub factors: Vec<QuotientMap>,
}

impl ChiefSeries {
    pub fn factor_orders(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.image().order()).collect()
    }
}

fn require_prime(p: u64) -> Result<()> {
    if arith::is_prime(p) {
        Ok(())
    } else {
        Err(Error::ContractViolation(format!("{p} is not prime")))
    }
}

impl Group {
    fn largest_normal_where(&self, pred: impl Fn(usize) -> bool) -> Result<Subgroup> {
        Ok(self
            .normal_subgroups()?
            .iter()
            .filter(|s| pred(s.order()))
            .max_by_key(|s| s.order())
            .cloned()
            .expect("trivial subgroup always qualifies"))
    }

    /// Largest normal p-subgroup.
    pub fn o_p(&self, p: u64) -> Result<Subgroup> {
        require_prime(p)?;
        self.largest_normal_where(|m| arith::is_power_of(m as u64, p))
    }

    /// Largest normal subgroup of order prime to `p`.
    pub fn o_p_prime(&self, p: u64) -> Result<Subgroup> {
        require_prime(p)?;
        self.largest_normal_where(|m| !(m as u64).is_multiple_of(p))
    }

    /// Subgroup generated by the elements of `p`-power order.
    pub fn o_upper_p_prime(&self, p: u64) -> Result<Subgroup> {
        require_prime(p)?;
        let gens: Vec<usize> = self
            .elements()
            .filter(|&x| arith::is_power_of(self.elt_order(x) as u64, p))
            .collect();
        let s = self.generated_subgroup(&gens);
        Ok(Subgroup::from_sorted_normal(self, s.elements().to_vec()))
    }

    /// Product of the `O_q` over the primes dividing the order.
    pub fn fitting_subgroup(&self) -> Result<Subgroup> {
        let mut f = self.trivial_subgroup();
        for q in arith::prime_divisors(self.order() as u64) {
            f = f.join(self, &self.o_p(q)?);
        }
        Ok(f)
    }

    pub fn radicals(&self, p: u64) -> Result<Radicals> {
        Ok(Radicals {
            p,
            o_p: self.o_p(p)?,
            o_p_prime: self.o_p_prime(p)?,
            o_upper_p_prime: self.o_upper_p_prime(p)?,
            fitting: self.fitting_subgroup()?,
        })
    }

    pub fn iterated_series(&self, p: u64) -> Result<IteratedSeries> {
        let o_p = self.o_p(p)?;
        let q1 = self.quotient(&o_p)?;
        let o_p_pprime = q1.preimage(self, &q1.image().o_p_prime(p)?);
        let q2 = self.quotient(&o_p_pprime)?;
        let o_p_pprime_p = q2.preimage(self, &q2.image().o_p(p)?);
        Ok(IteratedSeries {
            o_p,
            o_p_pprime,
            o_p_pprime_p,
        })
    }

    pub fn chief_series(&self) -> Result<ChiefSeries> {
        let normals = self.normal_subgroups()?;
        let mut terms = vec![self.trivial_subgroup()];
        let mut factors = Vec::new();
        while terms.last().unwrap().order() < self.order() {
            let current = terms.last().unwrap();
            // The sorted lattice lists a smallest proper overgroup first.
            let next = normals
                .iter()
                .find(|s| s.order() > current.order() && current.is_subset_of(s))
                .expect("G itself is an overgroup")
                .clone();
            let host = next.materialize(self, format!("{}[{}]", self.label(), next.order()));
            let below = current.relative_to(&next, &host)?;
            factors.push(host.quotient(&below)?);
            terms.push(next);
        }
        Ok(ChiefSeries { terms, factors })
    }

    pub fn is_solvable(&self) -> Result<bool> {
        Ok(self.chief_series()?.factors.iter().all(|f| {
            let q = f.image();
            q.is_abelian() && arith::prime_power(q.order() as u64).is_some()
        }))
    }

    /// Direct product of its Sylow subgroups.
    pub fn is_nilpotent(&self) -> Result<bool> {
        let n = self.order() as u64;
        for p in arith::prime_divisors(n) {
            if self.o_p(p)?.order() as u64 != arith::p_part(n, p) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every chief factor of one computed chief series has prime order.
    pub fn is_supersolvable(&self) -> Result<bool> {
        Ok(self
            .chief_series()?
            .factors
            .iter()
            .all(|f| f.image().is_abelian() && arith::is_prime(f.image().order() as u64)))
    }

    pub fn is_elementary_abelian(&self) -> bool {
        match arith::prime_power(self.order() as u64) {
            Some((p, _)) => {
                self.is_abelian() && self.elements().skip(1).all(|x| self.elt_order(x) as u64 == p)
            }
            None => self.order() == 1,
        }
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements().any(|x| self.elt_order(x) == self.order())
    }

    /// Elementary divisors (prime powers, sorted) of an abelian group.
    pub fn abelian_invariants(&self) -> Option<Vec<u64>> {
        if !self.is_abelian() {
            return None;
        }
        let mut out = Vec::new();
        for (p, _) in arith::factorize(self.order() as u64) {
            // ranks[k] = log_p |{x : x^(p^k) = 1}|
            let mut ranks = vec![0u32];
            let mut pk = 1u64;
            loop {
                pk *= p;
                let count = self
                    .elements()
                    .filter(|&x| pk.is_multiple_of(self.elt_order(x) as u64))
                    .count() as u64;
                let mut r = 0;
                let mut c = count;
                while c > 1 {
                    c /= p;
                    r += 1;
                }
                ranks.push(r);
                if count as usize == self.elements().filter(|&x| arith::is_power_of(self.elt_order(x) as u64, p)).count() {
                    break;
                }
            }
            // at_least[k] = number of cyclic factors of order >= p^k
            let at_least: Vec<u32> = (1..ranks.len()).map(|k| ranks[k] - ranks[k - 1]).collect();
            for k in 0..at_least.len() {
                let exactly = at_least[k] - at_least.get(k + 1).copied().unwrap_or(0);
                for _ in 0..exactly {
                    out.push(p.pow(k as u32 + 1));
                }
            }
        }
        out.sort();
        Some(out)
    }

    /// Frobenius test for a candidate kernel `n`: every nonidentity element
    /// of `n` has its centralizer inside `n`, and no element outside `n`
    /// centralizes a nonidentity element of `n`. Returns a complement when
    /// both hold.
    pub fn frobenius_complement(&self, n: &Subgroup) -> Option<Subgroup> {
        if !n.is_normal() || n.is_trivial() || n.order() == self.order() {
            return None;
        }
        let cl = self.conjugacy_classes();
        let centralizers_inside = (1..cl.len())
            .filter(|&c| n.contains(cl.rep(c)))
            .all(|c| self.centralizer(cl.rep(c)).is_subset_of(n));
        let fixed_point_free = self
            .elements()
            .filter(|&g| !n.contains(g))
            .all(|g| n.elements()[1..].iter().all(|&x| self.mul(g, x) != self.mul(x, g)));
        if !(centralizers_inside && fixed_point_free) {
            return None;
        }
        self.find_complement(n, Some(3))
            .or_else(|| self.find_complement(n, None))
    }

    pub fn is_frobenius_with_kernel(&self, n: &Subgroup) -> bool {
        self.frobenius_complement(n).is_some()
    }

    /// Depth-first search over subgroups generated by elements outside `n`
    /// for one of order `|G:N|` meeting `n` trivially.
    fn find_complement(&self, n: &Subgroup, max_gens: Option<usize>) -> Option<Subgroup> {
        let target = self.order() / n.order();
        let mut visited = HashSet::new();
        self.complement_step(n, target, &[], &self.trivial_subgroup(), max_gens, &mut visited)
    }

    fn complement_step(
        &self,
        n: &Subgroup,
        target: usize,
        gens: &[usize],
        current: &Subgroup,
        max_gens: Option<usize>,
        visited: &mut HashSet<Subgroup>,
    ) -> Option<Subgroup> {
        if max_gens.is_some_and(|m| gens.len() >= m) {
            return None;
        }
        for g in self.elements() {
            if n.contains(g) || current.contains(g) || !target.is_multiple_of(self.elt_order(g)) {
                continue;
            }
            let mut next_gens = gens.to_vec();
            next_gens.push(g);
            let h = self.generated_subgroup(&next_gens);
            if !target.is_multiple_of(h.order()) || h.elements().iter().skip(1).any(|&x| n.contains(x)) {
                continue;
            }
            if !visited.insert(h.clone()) {
                continue;
            }
            if h.order() == target {
                return Some(h);
            }
            if let Some(found) = self.complement_step(n, target, &next_gens, &h, max_gens, visited) {
                return Some(found);
            }
        }
        None
    }

    /// Every nonidentity element of order prime to `p` centralizes no
    /// nonidentity element of `n`.
    pub fn pprime_elements_fpf(&self, n: &Subgroup, p: u64) -> bool {
        self.elements()
            .skip(1)
            .filter(|&g| !(self.elt_order(g) as u64).is_multiple_of(p))
            .all(|g| n.elements()[1..].iter().all(|&x| self.mul(g, x) != self.mul(x, g)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm_group(label: &str, degree: usize, gens: &[Vec<usize>]) -> Group {
        Group::from_permutation_generators(label, degree, gens, 1000).unwrap()
    }

    fn s3() -> Group {
        perm_group("S3", 3, &[vec![1, 0, 2], vec![1, 2, 0]])
    }

    fn s4() -> Group {
        perm_group("S4", 4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]])
    }

    fn a4() -> Group {
        perm_group("A4", 4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
    }

    fn cyclic(n: usize) -> Group {
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Group::from_table(format!("C{n}"), &table).unwrap()
    }

    fn q8() -> Group {
        let i = vec![1, 2, 3, 0, 7, 4, 5, 6];
        let j = vec![4, 5, 6, 7, 2, 3, 0, 1];
        perm_group("Q8", 8, &[i, j])
    }

    #[test]
    fn radicals_of_c6() {
        let g = cyclic(6);
        let r = g.radicals(2).unwrap();
        assert_eq!(r.o_p.order(), 2);
        assert_eq!(r.o_p_prime.order(), 3);
        assert_eq!(r.o_upper_p_prime.order(), 2);
        assert_eq!(r.fitting.order(), 6);
    }

    #[test]
    fn radicals_of_q8_and_s3() {
        let r = q8().radicals(2).unwrap();
        assert_eq!((r.o_p.order(), r.o_p_prime.order()), (8, 1));
        let r = s3().radicals(3).unwrap();
        assert_eq!(r.o_p.order(), 3);
        assert_eq!(r.o_p_prime.order(), 1);
        assert_eq!(r.o_upper_p_prime.order(), 3);
    }

    #[test]
    fn iterated_series_examples() {
        let s = s4().iterated_series(2).unwrap();
        assert_eq!(
            (s.o_p.order(), s.o_p_pprime.order(), s.o_p_pprime_p.order()),
            (4, 12, 24)
        );
        let s = cyclic(6).iterated_series(3).unwrap();
        assert_eq!(
            (s.o_p.order(), s.o_p_pprime.order(), s.o_p_pprime_p.order()),
            (3, 6, 6)
        );
        let s = q8().iterated_series(2).unwrap();
        assert_eq!(
            (s.o_p.order(), s.o_p_pprime.order(), s.o_p_pprime_p.order()),
            (8, 8, 8)
        );
    }

    #[test]
    fn solvability_classes() {
        let g = s3();
        assert!(g.is_solvable().unwrap());
        assert!(!g.is_nilpotent().unwrap());
        assert!(g.is_supersolvable().unwrap());
        let g = a4();
        assert!(g.is_solvable().unwrap());
        assert!(!g.is_supersolvable().unwrap());
        assert_eq!(g.chief_series().unwrap().factor_orders(), vec![4, 3]);
        assert!(q8().is_nilpotent().unwrap());
        let a5 = perm_group("A5", 5, &[vec![1, 2, 0, 3, 4], vec![1, 2, 3, 4, 0]]);
        assert_eq!(a5.order(), 60);
        assert!(!a5.is_solvable().unwrap());
    }

    #[test]
    fn frobenius_examples() {
        let g = s3();
        let a3 = g.derived_subgroup();
        assert_eq!(g.frobenius_complement(&a3).unwrap().order(), 2);
        let g = a4();
        let v4 = g.derived_subgroup();
        assert_eq!(v4.order(), 4);
        assert_eq!(g.frobenius_complement(&v4).unwrap().order(), 3);
        let g = q8();
        assert!(!g.is_frobenius_with_kernel(&g.center()));
    }

    #[test]
    fn pprime_fixed_point_free() {
        let g = a4();
        assert!(g.pprime_elements_fpf(&g.derived_subgroup(), 2));
        let g = s4();
        let v4 = g.o_p(2).unwrap();
        assert!(g.pprime_elements_fpf(&v4, 2));
        let g = cyclic(6);
        let c3 = g.o_p(3).unwrap();
        assert!(!g.pprime_elements_fpf(&c3, 3));
    }

    #[test]
    fn abelian_invariants() {
        assert_eq!(cyclic(12).abelian_invariants(), Some(vec![3, 4]));
        let v4 = Group::from_table(
            "V4",
            &[vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]],
        )
        .unwrap();
        assert_eq!(v4.abelian_invariants(), Some(vec![2, 2]));
        assert_eq!(s3().abelian_invariants(), None);
        assert_eq!(cyclic(1).abelian_invariants(), Some(vec![]));
    }
}

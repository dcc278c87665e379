//! Characters above a character of a normal subgroup: conjugation action,
//! stabilizers, Clifford correspondence data, extensions and the checks
//! for the supersolvable and odd-order cases of Higgs' conjecture.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::arith;
use crate::chartable::{Character, CharacterTable};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result, Witness};
use crate::group::{Group, Subgroup};

/// A group together with a normal subgroup, both tables, the restriction
/// multiplicities and the conjugation action of `G` on `Irr(N)`.
#[derive(Debug)]
pub struct CliffordPair<'a> {
    table: &'a CharacterTable,
    normal: Subgroup,
    sub_table: CharacterTable,
    /// `restriction[chi][theta]`.
    restriction: Vec<Vec<u64>>,
    coset_of: Vec<usize>,
    /// `action[coset][theta]` is the index of `theta^g` for `g` in the coset.
    action: Vec<Vec<usize>>,
    quotient_class: OnceLock<Result<QuotientClass>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuotientClass {
    Supersolvable,
    Odd,
    Other,
}

impl fmt::Display for QuotientClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuotientClass::Supersolvable => "supersolvable",
            QuotientClass::Odd => "odd",
            QuotientClass::Other => "other",
        })
    }
}

/// Outcome of the Higgs-case check for one `theta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HiggsReport {
    pub theta: usize,
    pub invariant: bool,
    pub distinct_degrees: bool,
    pub count_above: usize,
    /// `Some(e)` when `theta` is fully ramified at its stabilizer.
    pub fully_ramified: Option<u64>,
    pub quotient_class: QuotientClass,
    /// Degrees of the characters above `theta`.
    pub degrees: Vec<u64>,
}

/// Extensions of every character of `N` to an intermediate subgroup `M`.
#[derive(Debug)]
pub struct AllExtensions {
    pub m_table: CharacterTable,
    /// `rows[theta]` lists the rows of `m_table` restricting to `theta`.
    pub rows: Vec<Vec<usize>>,
}

/// Extensions of a character of `N` to an intermediate subgroup `M`.
#[derive(Debug)]
pub struct Extensions {
    pub m_table: CharacterTable,
    /// Row indices of `m_table` restricting to `theta`.
    pub rows: Vec<usize>,
}

impl<'a> CliffordPair<'a> {
    pub fn new(table: &'a CharacterTable, normal: &Subgroup) -> Result<Self> {
        let sub = normal.materialize(table.group(), format!("{}|N{}", table.group().label(), normal.order()));
        let sub_table = CharacterTable::compute(&sub)?;
        Self::with_sub_table(table, normal, sub_table)
    }

    /// Uses a precomputed table of `normal` materialized.
    pub fn with_sub_table(
        table: &'a CharacterTable,
        normal: &Subgroup,
        sub_table: CharacterTable,
    ) -> Result<Self> {
        let g = table.group();
        if !normal.is_normal() {
            return Err(Error::NotNormal);
        }
        if sub_table.group().order() != normal.order() {
            return Err(Error::InvalidSubgroup("table does not match the subgroup".into()));
        }
        let restriction = table
            .rows()
            .iter()
            .map(|chi| table.restrict(chi, normal, &sub_table))
            .collect::<Result<Vec<_>>>()?;
        let quotient = g.quotient(normal)?;
        let coset_of = quotient.projection().to_vec();
        let index: HashMap<&[Cyclotomic], usize> = sub_table
            .rows()
            .iter()
            .enumerate()
            .map(|(i, r)| (r.values(), i))
            .collect();
        let ncl = sub_table.group().conjugacy_classes();
        let reps: Vec<usize> = ncl.reps().iter().map(|&r| normal.elements()[r]).collect();
        let mut action = Vec::with_capacity(quotient.coset_reps().len());
        for &h in quotient.coset_reps() {
            // theta^h(x) = theta(h x h^-1)
            let moved: Vec<usize> = reps
                .iter()
                .map(|&x| ncl.class_of(normal.local_id(g.conj(h, x)).expect("normal")))
                .collect();
            let perm = sub_table
                .rows()
                .iter()
                .map(|theta| {
                    let vals: Vec<Cyclotomic> = moved.iter().map(|&c| theta.value(c).clone()).collect();
                    index.get(vals.as_slice()).copied().ok_or_else(|| {
                        Error::ContractViolation("conjugate of a row is not a row".into())
                    })
                })
                .collect::<Result<Vec<usize>>>()?;
            action.push(perm);
        }
        Ok(CliffordPair {
            table,
            normal: normal.clone(),
            sub_table,
            restriction,
            coset_of,
            action,
            quotient_class: OnceLock::new(),
        })
    }

    pub fn group(&self) -> &Group {
        self.table.group()
    }

    pub fn table(&self) -> &CharacterTable {
        self.table
    }

    pub fn normal(&self) -> &Subgroup {
        &self.normal
    }

    pub fn sub_table(&self) -> &CharacterTable {
        &self.sub_table
    }

    pub fn theta(&self, i: usize) -> &Character {
        self.sub_table.row(i)
    }

    /// Multiplicities of `Irr(N)` in the restriction of row `chi` of `G`.
    pub fn restriction(&self, chi: usize) -> &[u64] {
        &self.restriction[chi]
    }

    pub fn index(&self) -> usize {
        self.group().order() / self.normal.order()
    }

    /// Index of `theta^g`.
    pub fn conjugate(&self, theta: usize, g: usize) -> usize {
        self.action[self.coset_of[g]][theta]
    }

    /// Values of `theta^g` on the classes of `N`.
    pub fn conjugate_character(&self, theta: usize, g: usize) -> &Character {
        self.sub_table.row(self.conjugate(theta, g))
    }

    /// The `G`-orbit of `theta`, sorted.
    pub fn orbit(&self, theta: usize) -> Vec<usize> {
        let mut o: Vec<usize> = self.action.iter().map(|p| p[theta]).collect();
        o.sort_unstable();
        o.dedup();
        o
    }

    pub fn is_invariant(&self, theta: usize) -> bool {
        self.action.iter().all(|p| p[theta] == theta)
    }

    /// The inertia group `G(theta)`.
    pub fn stabilizer(&self, theta: usize) -> Subgroup {
        let g = self.group();
        let elems: Vec<usize> = (0..g.order())
            .filter(|&x| self.action[self.coset_of[x]][theta] == theta)
            .collect();
        Subgroup::new(g, &elems).expect("stabilizer is a subgroup")
    }

    /// Rows of `G` above `theta`, each with the common multiplicity `e` of
    /// the orbit members in its restriction.
    pub fn above(&self, theta: usize) -> Result<Vec<(usize, u64)>> {
        let orbit = self.orbit(theta);
        let mut out = Vec::new();
        for (chi, res) in self.restriction.iter().enumerate() {
            let e = res[theta];
            if e == 0 {
                continue;
            }
            let homogeneous = res
                .iter()
                .enumerate()
                .all(|(t, &m)| if orbit.binary_search(&t).is_ok() { m == e } else { m == 0 });
            if !homogeneous {
                return Err(Error::ContractViolation(format!(
                    "{}: restriction of row {chi} to N is not homogeneous over one orbit",
                    self.group().label()
                )));
            }
            out.push((chi, e));
        }
        Ok(out)
    }

    /// `Some(e)` when exactly one character of `G(theta)` lies above
    /// `theta`, of degree `e theta(1)` with `e^2 = |G(theta) : N|`.
    pub fn fully_ramified(&self, theta: usize) -> Result<Option<u64>> {
        let stab = self.stabilizer(theta);
        if stab.order() == self.group().order() {
            return self.fully_ramified_invariant(theta);
        }
        if stab.order() == self.normal.order() {
            return Ok(Some(1));
        }
        // Induction from the stabilizer is a bijection onto the characters
        // above theta, so a single one above theta is necessary.
        if arith::exact_sqrt((stab.order() / self.normal.order()) as u64).is_none() || self.above(theta)?.len() != 1 {
            return Ok(None);
        }
        let g = self.group();
        let t = stab.materialize(g, format!("{}(theta)", g.label()));
        let t_table = CharacterTable::compute(&t)?;
        let n_local = self.normal.relative_to(&stab, &t)?;
        let n_local = t.find_normal(n_local.elements())?.ok_or(Error::NotNormal)?;
        let inner = CliffordPair::with_sub_table(&t_table, &n_local, self.sub_table.clone())?;
        inner.fully_ramified_invariant(theta)
    }

    fn fully_ramified_invariant(&self, theta: usize) -> Result<Option<u64>> {
        let above = self.above(theta)?;
        let idx = self.index() as u64;
        Ok(match above.as_slice() {
            [(_, e)] if e * e == idx => Some(*e),
            _ => None,
        })
    }

    /// Rows of `M` restricting to `theta`, for `N <= M <= G`.
    pub fn extensions(&self, theta: usize, m: &Subgroup) -> Result<Extensions> {
        let all = self.all_extensions(m)?;
        Ok(Extensions {
            rows: all.rows[theta].clone(),
            m_table: all.m_table,
        })
    }

    /// Extensions to `M` of every character of `N`, from a single table of
    /// `M`.
    pub fn all_extensions(&self, m: &Subgroup) -> Result<AllExtensions> {
        let g = self.group();
        if !self.normal.is_subset_of(m) {
            return Err(Error::InvalidSubgroup("N is not contained in M".into()));
        }
        let mg = m.materialize(g, format!("{}|M{}", g.label(), m.order()));
        let m_table = CharacterTable::compute(&mg)?;
        let n_local = self.normal.relative_to(m, &mg)?;
        let n_local = mg.find_normal(n_local.elements())?.ok_or(Error::NotNormal)?;
        let inner = CliffordPair::with_sub_table(&m_table, &n_local, self.sub_table.clone())?;
        let mut rows = vec![Vec::new(); self.sub_table.len()];
        for phi in 0..m_table.len() {
            let r = inner.restriction(phi);
            if r.iter().sum::<u64>() == 1 {
                let theta = r.iter().position(|&x| x == 1).expect("one constituent");
                rows[theta].push(phi);
            }
        }
        let abelian_section = mg.quotient(&n_local)?.image().is_abelian();
        for (theta, found) in rows.iter().enumerate() {
            if abelian_section
                && self.theta(theta).degree() == 1
                && inner.is_invariant(theta)
                && !found.is_empty()
                && found.len() != inner.index()
            {
                return Err(Error::ContractViolation(format!(
                    "{}: {} extensions of a linear character across an abelian section of order {}",
                    g.label(),
                    found.len(),
                    inner.index()
                )));
            }
        }
        drop(inner);
        Ok(AllExtensions { m_table, rows })
    }

    /// Supersolvable is tested before odd order.
    pub fn quotient_class(&self) -> Result<QuotientClass> {
        let r = self.quotient_class.get_or_init(|| {
            let q = self.group().quotient(&self.normal)?;
            let image = q.image();
            Ok(if image.is_supersolvable()? {
                QuotientClass::Supersolvable
            } else if image.order() % 2 == 1 {
                QuotientClass::Odd
            } else {
                QuotientClass::Other
            })
        });
        match r {
            Ok(c) => Ok(*c),
            Err(e) => Err(Error::ContractViolation(e.to_string())),
        }
    }

    /// Computes the report and asserts the proved cases: an invariant
    /// `theta` with pairwise distinct degrees above it and a supersolvable
    /// or odd-order quotient has exactly one character above it, and that
    /// character is fully ramified.
    pub fn higgs(&self, theta: usize) -> Result<HiggsReport> {
        let above = self.above(theta)?;
        let degrees: Vec<u64> = above.iter().map(|&(c, _)| self.table.row(c).degree()).collect();
        let mut sorted = degrees.clone();
        sorted.sort_unstable();
        let distinct_degrees = sorted.windows(2).all(|w| w[0] != w[1]);
        let invariant = self.is_invariant(theta);
        let quotient_class = self.quotient_class()?;
        let fully_ramified = if invariant {
            self.fully_ramified_invariant(theta)?
        } else {
            self.fully_ramified(theta)?
        };
        let report = HiggsReport {
            theta,
            invariant,
            distinct_degrees,
            count_above: above.len(),
            fully_ramified,
            quotient_class,
            degrees,
        };
        if invariant
            && distinct_degrees
            && quotient_class != QuotientClass::Other
            && (report.count_above != 1 || report.fully_ramified.is_none())
        {
            return Err(Error::violation(
                Witness::new("single fully ramified character above an invariant theta", self.group().label())
                    .subgroup(self.normal.elements())
                    .detail("theta", theta)
                    .detail("quotient_class", quotient_class)
                    .detail("degrees_above", format!("{:?}", report.degrees))
                    .detail("index", self.index()),
            ));
        }
        Ok(report)
    }

    /// Degree bookkeeping for a character fully ramified at its stabilizer:
    /// the unique character above `theta` has degree
    /// `|G : G(theta)| e theta(1)`.
    pub fn check_degree_formula(&self, theta: usize) -> Result<bool> {
        let Some(e) = self.fully_ramified(theta)? else {
            return Ok(false);
        };
        let above = self.above(theta)?;
        let stab = self.stabilizer(theta).order() as u64;
        let expected = self.group().order() as u64 / stab * e * self.theta(theta).degree();
        if above.len() != 1 || self.table.row(above[0].0).degree() != expected {
            return Err(Error::violation(
                Witness::new("degree formula above a fully ramified theta", self.group().label())
                    .subgroup(self.normal.elements())
                    .detail("theta", theta)
                    .detail("expected_degree", expected)
                    .detail("characters_above", above.len()),
            ));
        }
        Ok(true)
    }
}

/// Whether every elementary divisor of an abelian group occurs an even
/// number of times, i.e. the group has the shape `A x A`.
pub fn is_square_abelian(g: &Group) -> Option<bool> {
    let inv = g.abelian_invariants()?;
    let mut counts: HashMap<u64, usize> = HashMap::new();
    for d in inv {
        *counts.entry(d).or_default() += 1;
    }
    Some(counts.values().all(|c| c % 2 == 0))
}

/// `C_G(M/N) = {g : [g, m] in N for all m in M}`.
pub fn centralizer_of_section(g: &Group, m: &Subgroup, n: &Subgroup) -> Subgroup {
    let elems: Vec<usize> = (0..g.order())
        .filter(|&x| m.elements().iter().all(|&y| n.contains(g.commutator(x, y))))
        .collect();
    Subgroup::new(g, &elems).expect("centralizer of a normal section")
}

/// Outcome of the extension-transitivity check for `N < M` normal in `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtensionAction {
    NotExtendible,
    InvariantExtension,
    Transitive,
    Intransitive,
}

/// For an invariant `theta` of `N` that extends to `M`, either some
/// extension is `G`-invariant or `C_G(M/N)` permutes the extensions
/// transitively.
pub fn extension_action(pair_n: &CliffordPair, pair_m: &CliffordPair, theta: usize) -> Result<ExtensionAction> {
    let ext = pair_n.extensions(theta, pair_m.normal())?;
    Ok(classify_extensions(pair_n, pair_m, &ext.rows))
}

/// [`extension_action`] for every `theta`, `None` where `theta` is not
/// invariant.
pub fn extension_actions(pair_n: &CliffordPair, pair_m: &CliffordPair) -> Result<Vec<Option<ExtensionAction>>> {
    let all = pair_n.all_extensions(pair_m.normal())?;
    Ok(all
        .rows
        .iter()
        .enumerate()
        .map(|(theta, rows)| {
            pair_n
                .is_invariant(theta)
                .then(|| classify_extensions(pair_n, pair_m, rows))
        })
        .collect())
}

fn classify_extensions(pair_n: &CliffordPair, pair_m: &CliffordPair, rows: &[usize]) -> ExtensionAction {
    if rows.is_empty() {
        return ExtensionAction::NotExtendible;
    }
    if rows.iter().any(|&phi| pair_m.is_invariant(phi)) {
        return ExtensionAction::InvariantExtension;
    }
    let c = centralizer_of_section(pair_n.group(), pair_m.normal(), pair_n.normal());
    let mut orbit: Vec<usize> = c.elements().iter().map(|&x| pair_m.conjugate(rows[0], x)).collect();
    orbit.sort_unstable();
    orbit.dedup();
    if orbit == rows {
        ExtensionAction::Transitive
    } else {
        ExtensionAction::Intransitive
    }
}

/// Number of linear characters of `G/N`, i.e. `|G : G'N|`.
pub fn linear_count_of_quotient(g: &Group, n: &Subgroup) -> usize {
    let d = g.derived_subgroup().join(g, n);
    g.order() / d.order()
}

/// `|G:N|` as the `e^2` that full ramification requires, if it is a square.
pub fn ramification_index(g: &Group, n: &Subgroup) -> Option<u64> {
    arith::exact_sqrt((g.order() / n.order()) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;

    fn tbl(g: &Group) -> CharacterTable {
        CharacterTable::compute(g).unwrap()
    }

    fn nontrivial(pair: &CliffordPair) -> Vec<usize> {
        (1..pair.sub_table().len()).collect()
    }

    #[test]
    fn quaternion_centre() {
        let g = generalized_quaternion(8).unwrap();
        let t = tbl(&g);
        let pair = CliffordPair::new(&t, &g.center()).unwrap();
        let theta = 1;
        for x in g.elements() {
            assert_eq!(pair.conjugate(theta, x), theta);
        }
        assert_eq!(pair.stabilizer(theta).order(), 8);
        let above = pair.above(theta).unwrap();
        assert_eq!(above.len(), 1);
        assert_eq!(t.row(above[0].0).degree(), 2);
        assert_eq!(above[0].1, 2);
        assert_eq!(pair.fully_ramified(theta).unwrap(), Some(2));
        let r = pair.higgs(theta).unwrap();
        assert!(r.invariant && r.distinct_degrees);
        assert_eq!(r.count_above, 1);
        assert_eq!(r.quotient_class, QuotientClass::Supersolvable);
        assert_eq!(pair.extensions(theta, &g.whole()).unwrap().rows.len(), 0);
        assert!(pair.check_degree_formula(theta).unwrap());
    }

    #[test]
    fn symmetric_three() {
        let g = sym(3).unwrap();
        let t = tbl(&g);
        let a3 = g.derived_subgroup();
        let pair = CliffordPair::new(&t, &a3).unwrap();
        let tr = g.elements().find(|&x| g.elt_order(x) == 2).unwrap();
        assert_eq!(pair.conjugate(1, tr), 2);
        assert_eq!(pair.conjugate(2, tr), 1);
        assert_eq!(pair.stabilizer(1), a3);
        let above = pair.above(1).unwrap();
        assert_eq!(above.len(), 1);
        assert_eq!((t.row(above[0].0).degree(), above[0].1), (2, 1));
        // trivial theta: inflated characters of G/N
        let triv: Vec<usize> = pair.above(0).unwrap().iter().map(|x| x.0).collect();
        assert_eq!(triv, vec![0, 1]);
        assert!(!pair.higgs(1).unwrap().invariant);
        assert_eq!(pair.fully_ramified(1).unwrap(), Some(1));
        assert!(pair.check_degree_formula(1).unwrap());
    }

    #[test]
    fn alternating_four() {
        let g = alt(4).unwrap();
        let t = tbl(&g);
        let v4 = g.minimal_normal_subgroups().unwrap()[0].clone();
        let pair = CliffordPair::new(&t, &v4).unwrap();
        for theta in nontrivial(&pair) {
            assert_eq!(pair.stabilizer(theta), v4);
            assert_eq!(pair.orbit(theta).len(), 3);
        }
    }

    #[test]
    fn cyclic_four_over_two() {
        let g = cyclic(4);
        let t = tbl(&g);
        let n = g.generated_subgroup(&[2]);
        let pair = CliffordPair::new(&t, &n).unwrap();
        assert_eq!(pair.fully_ramified(1).unwrap(), None);
        let r = pair.higgs(1).unwrap();
        assert!(r.invariant && !r.distinct_degrees);
        assert_eq!(r.count_above, 2);
        assert_eq!(pair.extensions(1, &g.whole()).unwrap().rows.len(), 2);
        assert_eq!(pair.extensions(0, &g.whole()).unwrap().rows.len(), 2);
    }

    #[test]
    fn extraspecial_32() {
        let g = extraspecial_2(2, true).unwrap();
        let t = tbl(&g);
        let pair = CliffordPair::new(&t, &g.center()).unwrap();
        let r = pair.higgs(1).unwrap();
        assert_eq!(r.count_above, 1);
        assert_eq!(r.fully_ramified, Some(4));
        let q = g.quotient(&g.center()).unwrap();
        assert_eq!(is_square_abelian(q.image()), Some(true));
    }

    #[test]
    fn trivial_theta_of_whole_group() {
        let g = sym(3).unwrap();
        let t = tbl(&g);
        let pair = CliffordPair::new(&t, &g.whole()).unwrap();
        assert_eq!(pair.fully_ramified(0).unwrap(), Some(1));
    }

    #[test]
    fn square_abelian_shapes() {
        assert_eq!(is_square_abelian(&abelian(&[2, 2])), Some(true));
        assert_eq!(is_square_abelian(&abelian(&[2, 4])), Some(false));
        assert_eq!(is_square_abelian(&abelian(&[3, 3, 4, 4])), Some(true));
        assert_eq!(is_square_abelian(&sym(3).unwrap()), None);
    }
}

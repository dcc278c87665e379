//! Distinct-degree pairs, Camina pairs, and the structural classifiers for
//! solvable groups with property (D) over a minimal normal subgroup.

use std::fmt;

use crate::arith;
use crate::chartable::CharacterTable;
use crate::error::{Error, Result, Witness};
use crate::group::{Group, Subgroup};

/// Rows whose kernel does not contain `n`.
pub fn irr_over(table: &CharacterTable, n: &Subgroup) -> Vec<usize> {
    let g = table.group();
    let cl = g.conjugacy_classes();
    let n_classes: Vec<usize> = (0..cl.len()).filter(|&c| n.contains(cl.rep(c))).collect();
    (0..table.len())
        .filter(|&i| n_classes.iter().any(|&c| !table.row(i).is_kernel_class(c)))
        .collect()
}

fn degrees_over(table: &CharacterTable, n: &Subgroup) -> Vec<u64> {
    irr_over(table, n).into_iter().map(|i| table.row(i).degree()).collect()
}

fn all_distinct(v: &[u64]) -> bool {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

pub fn has_property_d(table: &CharacterTable, n: &Subgroup) -> bool {
    all_distinct(&degrees_over(table, n))
}

fn require_proper_normal(g: &Group, n: &Subgroup) -> Result<()> {
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    if n.is_trivial() || n.order() == g.order() {
        return Err(Error::NotProperNormal);
    }
    Ok(())
}

/// `|C_G(x)| = |C_{G/N}(xN)|` for every `x` outside `n`.
pub fn is_camina_centralizer(g: &Group, n: &Subgroup) -> Result<bool> {
    require_proper_normal(g, n)?;
    let q = g.quotient(n)?;
    let image = q.image();
    let qcl = image.conjugacy_classes();
    let cl = g.conjugacy_classes();
    Ok((0..cl.len()).filter(|&c| !n.contains(cl.rep(c))).all(|c| {
        let x = cl.rep(c);
        g.centralizer_order(x) == image.order() / qcl.size(qcl.class_of(q.project(x)))
    }))
}

/// Every character in `Irr(G|N)` vanishes off `n`.
pub fn is_camina_vanishing(table: &CharacterTable, n: &Subgroup) -> Result<bool> {
    let g = table.group();
    require_proper_normal(g, n)?;
    let cl = g.conjugacy_classes();
    let outside: Vec<usize> = (0..cl.len()).filter(|&c| !n.contains(cl.rep(c))).collect();
    Ok(irr_over(table, n)
        .into_iter()
        .all(|i| outside.iter().all(|&c| table.row(i).value(c).is_zero())))
}

/// Both Camina checkers; a disagreement is an internal error.
pub fn is_camina_pair(table: &CharacterTable, n: &Subgroup) -> Result<bool> {
    let a = is_camina_centralizer(table.group(), n)?;
    let b = is_camina_vanishing(table, n)?;
    if a != b {
        return Err(Error::ContractViolation(format!(
            "{}: Camina checkers disagree on N of order {} (centralizer {a}, vanishing {b})",
            table.group().label(),
            n.order()
        )));
    }
    Ok(a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairType {
    NotApplicable,
    NotD,
    Type1,
    Type2,
    Type3,
}

impl fmt::Display for PairType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairType::NotApplicable => "not-applicable",
            PairType::NotD => "not-d",
            PairType::Type1 => "type1",
            PairType::Type2 => "type2",
            PairType::Type3 => "type3",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KuischCase {
    I,
    II,
    III,
}

impl fmt::Display for KuischCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KuischCase::I => "i",
            KuischCase::II => "ii",
            KuischCase::III => "iii",
        })
    }
}

pub type Evidence = Vec<(String, String)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairReport {
    pub group: String,
    pub order: usize,
    pub normal: Vec<usize>,
    /// `(p, n)` when `|N| = p^n`.
    pub prime_power: Option<(u64, u32)>,
    pub degrees_over: Vec<u64>,
    pub property_d: bool,
    /// `None` when `N` is trivial or all of `G`.
    pub camina_centralizer: Option<bool>,
    pub camina_vanishing: Option<bool>,
    pub minimal_normal: bool,
    pub unique_minimal_normal: bool,
    pub o_p_prime_trivial: Option<bool>,
    pub pprime_fpf: Option<bool>,
    pub kind: PairType,
    pub kuisch_case: Option<KuischCase>,
    pub evidence: Evidence,
}

impl PairReport {
    pub fn normal_order(&self) -> usize {
        self.normal.len()
    }
}

struct Checker<'a> {
    g: &'a Group,
    n: &'a Subgroup,
    claim_prefix: &'static str,
}

impl Checker<'_> {
    fn require(&self, ok: bool, claim: &str, details: &[(&str, String)]) -> Result<()> {
        if ok {
            return Ok(());
        }
        let mut w = Witness::new(format!("{}: {claim}", self.claim_prefix), self.g.label())
            .subgroup(self.n.elements());
        for (k, v) in details {
            w = w.detail(*k, v);
        }
        Err(Error::violation(w))
    }
}

fn faithful_degrees(table: &CharacterTable) -> Vec<u64> {
    table
        .rows()
        .iter()
        .filter(|r| table.is_faithful(r))
        .map(|r| r.degree())
        .collect()
}

/// Classifies `(G, N)` and verifies every conclusion of the structure
/// theorem for solvable groups with property (D) over a minimal normal
/// subgroup. A failed conclusion is returned as a theorem violation.
pub fn classify_theorem_a(table: &CharacterTable, n: &Subgroup) -> Result<PairReport> {
    let g = table.group();
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let degrees = degrees_over(table, n);
    let property_d = all_distinct(&degrees);
    let proper = !n.is_trivial() && n.order() < g.order();
    let camina = if proper { Some(is_camina_pair(table, n)?) } else { None };
    let minimal_normal = g.is_minimal_normal(n)?;
    let minimals = g.minimal_normal_subgroups()?;
    let unique_minimal_normal = minimal_normal && minimals.len() == 1;
    let prime_power = arith::prime_power(n.order() as u64);
    let p = prime_power.map(|(p, _)| p);
    let o_p_prime_trivial = p.map(|p| g.o_p_prime(p).map(|s| s.is_trivial())).transpose()?;
    let pprime_fpf = p.map(|p| g.pprime_elements_fpf(n, p));
    let mut report = PairReport {
        group: g.label().to_string(),
        order: g.order(),
        normal: n.elements().to_vec(),
        prime_power,
        degrees_over: degrees.clone(),
        property_d,
        camina_centralizer: camina,
        camina_vanishing: camina,
        minimal_normal,
        unique_minimal_normal,
        o_p_prime_trivial,
        pprime_fpf,
        kind: PairType::NotApplicable,
        kuisch_case: None,
        evidence: vec![("degrees_over".into(), format!("{degrees:?}"))],
    };
    if g.is_abelian() || !g.is_solvable()? || !minimal_normal {
        return Ok(report);
    }
    if !property_d {
        report.kind = PairType::NotD;
        return Ok(report);
    }
    let (p, k) = prime_power.expect("minimal normal subgroups of solvable groups are p-groups");
    let pn = p.pow(k);
    let chk = Checker {
        g,
        n,
        claim_prefix: "property (D) over a minimal normal subgroup",
    };
    chk.require(camina == Some(true), "(G, N) is a Camina pair", &[])?;
    chk.require(
        unique_minimal_normal,
        "N is the unique minimal normal subgroup",
        &[("minimal_normal_count", minimals.len().to_string())],
    )?;
    chk.require(o_p_prime_trivial == Some(true), "O_p'(G) = 1", &[])?;
    chk.require(pprime_fpf == Some(true), "p'-elements act fixed-point-freely on N", &[])?;

    let faithful = faithful_degrees(table);
    let index = (g.order() / n.order()) as u64;
    if g.is_nilpotent()? {
        report.kind = PairType::Type1;
        let order_ok = arith::prime_power(g.order() as u64).is_some_and(|(q, e)| q == 2 && e % 2 == 1);
        let m = arith::prime_power(g.order() as u64).map_or(0, |(_, e)| (e - 1) / 2);
        let z = g.center();
        chk.require(order_ok, "type 1: |G| = 2^(2m+1)", &[("order", g.order().to_string())])?;
        chk.require(
            z == *n && n.order() == 2,
            "type 1: N = Z(G) has order 2",
            &[("center_order", z.order().to_string())],
        )?;
        chk.require(
            faithful == vec![1u64 << m],
            "type 1: unique faithful character of degree 2^m",
            &[("faithful_degrees", format!("{faithful:?}"))],
        )?;
        report.evidence.push(("m".into(), m.to_string()));
        report.evidence.push(("faithful_degree".into(), (1u64 << m).to_string()));
    } else if let Some(h) = g.frobenius_complement(n) {
        report.kind = PairType::Type2;
        let cl = g.conjugacy_classes();
        let c = cl.class_of(n.elements()[1]);
        let transitive = cl.size(c) == n.order() - 1;
        chk.require(
            h.order() as u64 == pn - 1,
            "type 2: complement of order p^n - 1",
            &[("complement_order", h.order().to_string())],
        )?;
        chk.require(transitive, "type 2: G is transitive on N#", &[])?;
        chk.require(
            faithful == vec![pn - 1],
            "type 2: unique faithful character of degree p^n - 1",
            &[("faithful_degrees", format!("{faithful:?}"))],
        )?;
        report.evidence.push(("complement_order".into(), h.order().to_string()));
        report.evidence.push(("faithful_degree".into(), (pn - 1).to_string()));
    } else {
        report.kind = PairType::Type3;
        chk.require(
            g.center().is_trivial(),
            "type 3: Z(G) = 1",
            &[("center_order", g.center().order().to_string())],
        )?;
    }
    let kuisch = kuisch_case(table, n)?;
    report.kuisch_case = kuisch.case;
    report.evidence.extend(kuisch.evidence);
    if report.kind == PairType::Type3 {
        let j = g.o_upper_p_prime(p)?;
        let sylow = j.order() as u64 == arith::p_part(g.order() as u64, p);
        if sylow {
            let root = arith::exact_sqrt(j.order() as u64 / pn);
            let expected = root.map(|r| (pn - 1) * r);
            chk.require(
                expected.is_some() && degrees == vec![expected.unwrap()],
                "type 3 with J Sylow: a single character of degree (p^n - 1)(|P|/p^n)^(1/2)",
                &[
                    ("degrees_over", format!("{degrees:?}")),
                    ("sylow_order", j.order().to_string()),
                ],
            )?;
        }
    }
    report.evidence.push(("index".into(), index.to_string()));
    Ok(report)
}

/// Outcome of [`kuisch_case`]; `case` is `None` when the preconditions
/// (Camina pair, `N` a `p`-group, `G` solvable) do not hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KuischOutcome {
    pub case: Option<KuischCase>,
    pub evidence: Evidence,
}

/// Kuisch's trichotomy for a Camina pair `(G, N)` with `N` a `p`-group.
pub fn kuisch_case(table: &CharacterTable, n: &Subgroup) -> Result<KuischOutcome> {
    let g = table.group();
    let none = KuischOutcome {
        case: None,
        evidence: Vec::new(),
    };
    let Some((p, _)) = arith::prime_power(n.order() as u64) else {
        return Ok(none);
    };
    if n.is_trivial() || n.order() == g.order() || !n.is_normal() {
        return Ok(none);
    }
    if !g.is_solvable()? || !is_camina_pair(table, n)? {
        return Ok(none);
    }
    let chk = Checker {
        g,
        n,
        claim_prefix: "Camina pair with N a p-group",
    };
    chk.require(g.o_p_prime(p)?.is_trivial(), "O_p'(G) = 1", &[])?;
    let j = g.o_upper_p_prime(p)?;
    let jg = j.materialize(g, format!("O^p'({})", g.label()));
    let n_in_j = jg
        .find_normal(n.relative_to(&j, &jg)?.elements())?
        .ok_or(Error::NotNormal)?;
    let j_table = CharacterTable::compute(&jg)?;
    // With J = N the Camina condition on J \ N is vacuous.
    let j_camina = n_in_j.order() == jg.order() || is_camina_pair(&j_table, &n_in_j)?;
    chk.require(j_camina, "(J, N) is a Camina pair for J = O^p'(G)", &[("j_order", j.order().to_string())])?;

    let mut evidence: Evidence = vec![("j_order".into(), j.order().to_string())];
    if j.order() as u64 == arith::p_part(g.order() as u64, p) {
        evidence.push(("j_sylow".into(), "true".into()));
        return Ok(KuischOutcome {
            case: Some(KuischCase::I),
            evidence,
        });
    }
    let series = jg.iterated_series(p)?;
    let (o, k, kp) = (&series.o_p, &series.o_p_pprime, &series.o_p_pprime_p);
    let o_matches = j.lift_local(g, o) == g.o_p(p)?;
    let top_is_j = kp.order() == jg.order();
    let o_k = {
        let kg = k.materialize(&jg, "K");
        let o_in_k = kg.find_normal(o.relative_to(k, &kg)?.elements())?.ok_or(Error::NotNormal)?;
        kg.quotient(&o_in_k)?.image().clone()
    };
    let j_k = jg.quotient(&jg.find_normal(k.elements())?.ok_or(Error::NotNormal)?)?;
    let top = j_k.image();
    evidence.push(("o_p_j".into(), o.order().to_string()));
    evidence.push(("o_p_pprime_j".into(), k.order().to_string()));

    // (ii)
    let top_abelian_p = top.is_abelian() && arith::is_power_of(top.order() as u64, p);
    let fpf = jg.elements().filter(|&x| !k.contains(x)).all(|x| {
        k.elements()
            .iter()
            .filter(|&&y| !o.contains(y))
            .all(|&y| !o.contains(jg.commutator(x, y)))
    });
    if o_matches && top_is_j && o_k.is_cyclic() && o_k.order() % 2 == 1 && top_abelian_p && fpf {
        return Ok(KuischOutcome {
            case: Some(KuischCase::II),
            evidence,
        });
    }
    // (iii)
    if p == 3 && o_matches && top_is_j && top.is_abelian() && is_q8_times_odd_cyclic(&o_k)? {
        let mut member = vec![false; jg.order()];
        for x in jg.elements() {
            for &y in k.elements() {
                member[jg.commutator(x, y)] = true;
            }
        }
        let gens: Vec<usize> = (0..jg.order()).filter(|&x| member[x]).collect();
        let comm = jg.generated_subgroup(&gens).join(&jg, o);
        if comm == *k {
            return Ok(KuischOutcome {
                case: Some(KuischCase::III),
                evidence,
            });
        }
    }
    Err(Error::violation(
        Witness::new("Camina pair with N a p-group matches a Kuisch case", g.label())
            .subgroup(n.elements())
            .detail("j_order", j.order())
            .detail("o_p_j", o.order())
            .detail("o_p_pprime_j", k.order())
            .detail("o_p_pprime_p_j", kp.order()),
    ))
}

/// `X = Q8 x C_m` with `m` odd.
fn is_q8_times_odd_cyclic(x: &Group) -> Result<bool> {
    let n = x.order();
    if !n.is_multiple_of(8) || (n / 8).is_multiple_of(2) {
        return Ok(false);
    }
    let two = x.o_p(2)?;
    if two.order() != 8 {
        return Ok(false);
    }
    let q = two.materialize(x, "S");
    let involutions = q.elements().filter(|&y| q.elt_order(y) == 2).count();
    if q.is_abelian() || involutions != 1 {
        return Ok(false);
    }
    let odd = x.o_p_prime(2)?;
    Ok(odd.order() == n / 8 && odd.materialize(x, "C").is_cyclic())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BchBucket {
    Extraspecial2,
    FrobeniusCyclic,
    FrobeniusQuaternion72,
}

impl fmt::Display for BchBucket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BchBucket::Extraspecial2 => "extraspecial-2",
            BchBucket::FrobeniusCyclic => "frobenius-cyclic",
            BchBucket::FrobeniusQuaternion72 => "frobenius-quaternion-72",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BchReport {
    pub nonlinear_degrees: Vec<u64>,
    pub distinct: bool,
    pub bucket: Option<BchBucket>,
}

/// Which of the three shapes `G` has, decided from structure alone.
pub fn bch_shape(g: &Group) -> Result<Option<BchBucket>> {
    if g.is_abelian() {
        return Ok(None);
    }
    let z = g.center();
    if arith::prime_power(g.order() as u64).is_some_and(|(p, _)| p == 2)
        && z.order() == 2
        && g.derived_subgroup() == z
        && g.quotient(&z)?.image().is_elementary_abelian()
    {
        return Ok(Some(BchBucket::Extraspecial2));
    }
    let f = g.fitting_subgroup()?;
    if let Some(h) = g.frobenius_complement(&f) {
        let hg = h.materialize(g, "H");
        if f.materialize(g, "F").is_elementary_abelian() && h.order() == f.order() - 1 {
            if hg.is_cyclic() {
                return Ok(Some(BchBucket::FrobeniusCyclic));
            }
            let involutions = hg.elements().filter(|&x| hg.elt_order(x) == 2).count();
            if g.order() == 72 && hg.order() == 8 && involutions == 1 {
                return Ok(Some(BchBucket::FrobeniusQuaternion72));
            }
        }
    }
    Ok(None)
}

/// Decides whether the nonlinear degrees are pairwise distinct and, if so,
/// asserts that `G` has one of the three admissible shapes.
pub fn bch_scan(table: &CharacterTable) -> Result<BchReport> {
    let g = table.group();
    if g.is_abelian() {
        return Err(Error::ContractViolation(format!("{} is abelian", g.label())));
    }
    let nonlinear: Vec<u64> = table.degrees().into_iter().filter(|&d| d > 1).collect();
    let distinct = all_distinct(&nonlinear);
    let bucket = if distinct { bch_shape(g)? } else { None };
    if distinct && bucket.is_none() {
        return Err(Error::violation(
            Witness::new("distinct nonlinear degrees imply a BCH shape", g.label())
                .detail("nonlinear_degrees", format!("{nonlinear:?}")),
        ));
    }
    Ok(BchReport {
        nonlinear_degrees: nonlinear,
        distinct,
        bucket,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;

    fn tbl(g: &Group) -> CharacterTable {
        CharacterTable::compute(g).unwrap()
    }

    #[test]
    fn irr_over_examples() {
        let s3 = sym(3).unwrap();
        let t = tbl(&s3);
        let a3 = s3.derived_subgroup();
        let over = irr_over(&t, &a3);
        assert_eq!(over.len(), 1);
        assert_eq!(t.row(over[0]).degree(), 2);
        let q8 = generalized_quaternion(8).unwrap();
        let t = tbl(&q8);
        assert_eq!(degrees_over(&t, &q8.center()), vec![2]);
        let v = abelian(&[2, 2]);
        let t = tbl(&v);
        assert_eq!(irr_over(&t, &v.generated_subgroup(&[1])).len(), 2);
    }

    #[test]
    fn property_d_examples() {
        let q8 = generalized_quaternion(8).unwrap();
        assert!(has_property_d(&tbl(&q8), &q8.center()));
        let v = abelian(&[2, 2]);
        assert!(!has_property_d(&tbl(&v), &v.generated_subgroup(&[1])));
        let a4 = alt(4).unwrap();
        let v4 = a4.minimal_normal_subgroups().unwrap()[0].clone();
        let t = tbl(&a4);
        assert!(has_property_d(&t, &v4));
        assert_eq!(degrees_over(&t, &v4), vec![3]);
    }

    #[test]
    fn camina_examples() {
        let s3 = sym(3).unwrap();
        assert!(is_camina_pair(&tbl(&s3), &s3.derived_subgroup()).unwrap());
        let c4 = cyclic(4);
        let c2 = c4.generated_subgroup(&[2]);
        assert!(!is_camina_centralizer(&c4, &c2).unwrap());
        assert!(!is_camina_vanishing(&tbl(&c4), &c2).unwrap());
        let q8 = generalized_quaternion(8).unwrap();
        assert!(is_camina_pair(&tbl(&q8), &q8.center()).unwrap());
        assert!(matches!(
            is_camina_centralizer(&q8, &q8.trivial_subgroup()),
            Err(Error::NotProperNormal)
        ));
        assert!(matches!(
            is_camina_centralizer(&q8, &q8.whole()),
            Err(Error::NotProperNormal)
        ));
    }

    #[test]
    fn classify_examples() {
        let q8 = generalized_quaternion(8).unwrap();
        let r = classify_theorem_a(&tbl(&q8), &q8.center()).unwrap();
        assert_eq!(r.kind, PairType::Type1);
        assert_eq!(r.kuisch_case, Some(KuischCase::I));
        assert!(r.evidence.contains(&("faithful_degree".into(), "2".into())));

        let e32 = extraspecial_2(2, false).unwrap();
        let r = classify_theorem_a(&tbl(&e32), &e32.center()).unwrap();
        assert_eq!(r.kind, PairType::Type1);
        assert!(r.evidence.contains(&("m".into(), "2".into())));

        let f20 = agl1(5).unwrap();
        let n = leading_subgroup(&f20, 5).unwrap();
        let r = classify_theorem_a(&tbl(&f20), &n).unwrap();
        assert_eq!(r.kind, PairType::Type2);
        assert!(r.evidence.contains(&("complement_order".into(), "4".into())));
        assert!(r.evidence.contains(&("faithful_degree".into(), "4".into())));

        let c6 = direct_product(&cyclic(2), &cyclic(3));
        let c3 = c6.generated_subgroup(&[2]);
        let r = classify_theorem_a(&tbl(&c6), &c3).unwrap();
        assert_eq!(r.kind, PairType::NotApplicable);

        // A nonabelian group with (D) failing over a minimal normal subgroup.
        let d12 = dihedral(6);
        let t = tbl(&d12);
        let c3 = d12.generated_subgroup(&[2]);
        let r = classify_theorem_a(&t, &d12.find_normal(c3.elements()).unwrap().unwrap()).unwrap();
        assert_eq!(r.kind, PairType::NotD);
    }

    #[test]
    fn type_three_witness() {
        let g = heisenberg_by_units(3).unwrap();
        let t = tbl(&g);
        let mins = g.minimal_normal_subgroups().unwrap();
        assert_eq!(mins.len(), 1);
        let r = classify_theorem_a(&t, &mins[0]).unwrap();
        assert_eq!(r.kind, PairType::Type3);
        assert_eq!(r.kuisch_case, Some(KuischCase::I));
        assert_eq!(r.degrees_over, vec![6]);
    }

    #[test]
    fn kuisch_examples() {
        let s3 = sym(3).unwrap();
        let k = kuisch_case(&tbl(&s3), &s3.derived_subgroup()).unwrap();
        assert_eq!(k.case, Some(KuischCase::I));
        let f20 = agl1(5).unwrap();
        let n = leading_subgroup(&f20, 5).unwrap();
        assert_eq!(kuisch_case(&tbl(&f20), &n).unwrap().case, Some(KuischCase::I));
        let c4 = cyclic(4);
        assert_eq!(kuisch_case(&tbl(&c4), &c4.generated_subgroup(&[2])).unwrap().case, None);
    }

    #[test]
    fn bch_examples() {
        let d8 = dihedral(4);
        let r = bch_scan(&tbl(&d8)).unwrap();
        assert!(r.distinct);
        assert_eq!(r.bucket, Some(BchBucket::Extraspecial2));
        let r = bch_scan(&tbl(&sym(3).unwrap())).unwrap();
        assert_eq!(r.bucket, Some(BchBucket::FrobeniusCyclic));
        let f72 = frobenius72_quaternion();
        let t = tbl(&f72);
        let r = bch_scan(&t).unwrap();
        assert_eq!(r.bucket, Some(BchBucket::FrobeniusQuaternion72));
        assert_eq!(r.nonlinear_degrees, vec![2, 8]);
        let r = bch_scan(&tbl(&sym(4).unwrap())).unwrap();
        assert!(!r.distinct);
        assert_eq!(bch_shape(&sym(4).unwrap()).unwrap(), None);
    }
}

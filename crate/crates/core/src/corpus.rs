//! The shipped verification corpus and the per-group check suite.
//!
//! Every entry is evaluated independently (in parallel); results are
//! collected in file order so reports are byte-for-byte reproducible.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::chartable::CharacterTable;
use crate::clifford::{self, CliffordPair, ExtensionAction, QuotientClass};
use crate::construct;
use crate::error::{Error, Result, Witness};
use crate::group::{Group, Subgroup};
use crate::property_d::{self, PairType};
use crate::report::{join, Report};

pub const SHIPPED: &str = include_str!("../corpus/shipped.txt");

/// Above this many proper nontrivial normal subgroups, the Clifford-theory
/// checks run over a distinguished subset only.
pub const TRIPLE_NORMAL_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub expected: Vec<(String, String)>,
}

impl CorpusEntry {
    pub fn build(&self) -> Result<Group> {
        construct::by_name(&self.name)
    }
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (name, rest) = line.split_once('|').unwrap_or((line, ""));
        let expected = rest
            .split_whitespace()
            .map(|tok| {
                tok.split_once('=')
                    .map(|(k, v)| (k.to_string(), v.to_string()))
                    .ok_or_else(|| Error::parse(i + 1, format!("expected key=value, got {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(CorpusEntry {
            name: name.trim().to_string(),
            expected,
        });
    }
    Ok(out)
}

pub fn shipped() -> Vec<CorpusEntry> {
    parse_corpus(SHIPPED).expect("shipped corpus parses")
}

/// Counters for one group. Every field is deterministic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EntryOutcome {
    pub name: String,
    pub order: usize,
    pub classes: usize,
    pub degrees: Vec<u64>,
    pub table_verified: bool,
    pub normal_subgroups: usize,
    pub pairs: usize,
    pub camina_pairs: usize,
    pub camina_agree: usize,
    pub camina_disagree: usize,
    pub property_d_pairs: usize,
    pub theorem_a: Vec<PairType>,
    pub theorem_a_applicable: bool,
    pub bch: String,
    pub converse_checked: usize,
    pub triples_capped: bool,
    pub triples: usize,
    pub invariant_triples: usize,
    pub higgs_cases: usize,
    pub isaacs_two: usize,
    pub wolf_checked: usize,
    pub extension_checked: usize,
    pub extension_transitive: usize,
    pub monotone_chains: usize,
    pub violations: Vec<String>,
    pub errors: Vec<String>,
    pub mismatches: Vec<String>,
}

impl EntryOutcome {
    fn record(&mut self, r: Result<()>) {
        match r {
            Ok(()) => {}
            Err(Error::TheoremViolation(w)) => self.violations.push(w.to_string()),
            Err(e) => self.errors.push(e.to_string()),
        }
    }

    pub fn type3_witnesses(&self) -> usize {
        self.theorem_a.iter().filter(|&&t| t == PairType::Type3).count()
    }

    fn theorem_a_verdict(&self) -> String {
        if !self.theorem_a_applicable {
            "n/a".into()
        } else {
            join(&self.theorem_a, ",")
        }
    }

    pub fn report(&self) -> Report {
        let mut r = Report::new();
        r.kv("entry", &self.name)
            .kv("order", self.order)
            .kv("classes", self.classes)
            .list("degrees", &self.degrees)
            .kv("table-verified", self.table_verified)
            .kv("normal-subgroups", self.normal_subgroups)
            .kv("pairs", self.pairs)
            .kv("camina-pairs", self.camina_pairs)
            .kv("camina-agree", self.camina_agree)
            .kv("property-d-pairs", self.property_d_pairs)
            .kv("monotone-chains", self.monotone_chains)
            .kv("theorem-a", self.theorem_a_verdict())
            .kv("bch", &self.bch)
            .kv("converse-checked", self.converse_checked)
            .kv("triples-capped", self.triples_capped)
            .kv("triples", self.triples)
            .kv("invariant-triples", self.invariant_triples)
            .kv("higgs-cases", self.higgs_cases)
            .kv("isaacs-two", self.isaacs_two)
            .kv("wolf-checked", self.wolf_checked)
            .kv("extension-checked", self.extension_checked)
            .kv("extension-transitive", self.extension_transitive);
        for v in &self.violations {
            r.kv("violation", v);
        }
        for e in &self.errors {
            r.kv("error", e);
        }
        for m in &self.mismatches {
            r.kv("mismatch", m);
        }
        r
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CorpusReport {
    pub entries: Vec<EntryOutcome>,
}

impl CorpusReport {
    fn sum(&self, f: impl Fn(&EntryOutcome) -> usize) -> usize {
        self.entries.iter().map(f).sum()
    }

    pub fn theorem_violations(&self) -> usize {
        self.sum(|e| e.violations.len())
    }

    pub fn errors(&self) -> usize {
        self.sum(|e| e.errors.len())
    }

    pub fn mismatches(&self) -> usize {
        self.sum(|e| e.mismatches.len())
    }

    pub fn type3_witnesses(&self) -> usize {
        self.sum(EntryOutcome::type3_witnesses)
    }

    pub fn camina_disagreements(&self) -> usize {
        self.sum(|e| e.camina_disagree)
    }

    pub fn summary(&self) -> Report {
        let count = |t: PairType| self.sum(|e| e.theorem_a.iter().filter(|&&k| k == t).count());
        let mut r = Report::new();
        r.kv("groups", self.entries.len())
            .kv("tables-verified", self.entries.iter().filter(|e| e.table_verified).count())
            .kv("pairs", self.sum(|e| e.pairs))
            .kv("camina-agree", self.sum(|e| e.camina_agree))
            .kv("camina-disagree", self.camina_disagreements())
            .kv("property-d-pairs", self.sum(|e| e.property_d_pairs))
            .kv("monotone-chains", self.sum(|e| e.monotone_chains))
            .kv("theorem-a-not-d", count(PairType::NotD))
            .kv("theorem-a-type1", count(PairType::Type1))
            .kv("theorem-a-type2", count(PairType::Type2))
            .kv("theorem-a-type3", count(PairType::Type3))
            .kv("bch-distinct", self.entries.iter().filter(|e| e.bch_distinct()).count())
            .kv("converse-checked", self.sum(|e| e.converse_checked))
            .kv("triples", self.sum(|e| e.triples))
            .kv("invariant-triples", self.sum(|e| e.invariant_triples))
            .kv("higgs-cases", self.sum(|e| e.higgs_cases))
            .kv("isaacs-two", self.sum(|e| e.isaacs_two))
            .kv("wolf-checked", self.sum(|e| e.wolf_checked))
            .kv("extension-checked", self.sum(|e| e.extension_checked))
            .kv("type3_witnesses", self.type3_witnesses())
            .kv("theorem_violations", self.theorem_violations())
            .kv("errors", self.errors())
            .kv("expected-mismatches", self.mismatches());
        r
    }

    pub fn render(&self) -> String {
        let mut r = Report::new();
        r.kv("command", "corpus");
        for e in &self.entries {
            r.blank().extend(&e.report());
        }
        r.blank().extend(&self.summary());
        r.to_string()
    }
}

impl EntryOutcome {
    pub fn bch_distinct(&self) -> bool {
        !matches!(self.bch.as_str(), "none" | "abelian" | "error")
    }
}

/// Runs the suite over every entry whose name contains `filter`.
pub fn run(entries: &[CorpusEntry], filter: Option<&str>) -> CorpusReport {
    let selected: Vec<&CorpusEntry> = entries
        .iter()
        .filter(|e| filter.is_none_or(|f| e.name.contains(f)))
        .collect();
    CorpusReport {
        entries: selected.par_iter().map(|e| evaluate(e)).collect(),
    }
}

pub fn evaluate(entry: &CorpusEntry) -> EntryOutcome {
    let mut out = EntryOutcome {
        name: entry.name.clone(),
        bch: "error".into(),
        ..Default::default()
    };
    let g = match entry.build() {
        Ok(g) => g,
        Err(e) => {
            out.errors.push(e.to_string());
            return out;
        }
    };
    let r = check_group(&g, &entry.name, &mut out);
    out.record(r);
    compare_expected(entry, &mut out);
    out
}

fn compare_expected(entry: &CorpusEntry, out: &mut EntryOutcome) {
    for (k, want) in &entry.expected {
        let got = match k.as_str() {
            "order" => out.order.to_string(),
            "classes" => out.classes.to_string(),
            "degrees" => join(&out.degrees, ","),
            "bch" => out.bch.clone(),
            "theorem-a" => out.theorem_a_verdict(),
            _ => {
                out.mismatches.push(format!("unknown expectation key {k}"));
                continue;
            }
        };
        if &got != want {
            out.mismatches.push(format!("{k}: expected {want}, got {got}"));
        }
    }
}

fn check_group(g: &Group, name: &str, out: &mut EntryOutcome) -> Result<()> {
    out.order = g.order();
    out.classes = g.conjugacy_classes().len();
    let table = CharacterTable::compute(g)?;
    let mut degrees = table.degrees();
    degrees.sort_unstable();
    out.degrees = degrees;
    table.verify()?;
    out.table_verified = true;

    let normals = g.normal_subgroups()?;
    out.normal_subgroups = normals.len();
    let proper: Vec<&Subgroup> = normals
        .iter()
        .filter(|n| !n.is_trivial() && n.order() < g.order())
        .collect();

    let r = check_pairs(&table, normals, &proper, out);
    out.record(r);
    let r = check_theorem_a(&table, out);
    out.record(r);
    let r = check_bch(&table, out);
    out.record(r);
    let r = check_converse(&table, name, out);
    out.record(r);
    let r = check_triples(&table, normals, &proper, out);
    out.record(r);
    Ok(())
}

fn check_pairs(
    table: &CharacterTable,
    normals: &[Subgroup],
    proper: &[&Subgroup],
    out: &mut EntryOutcome,
) -> Result<()> {
    let g = table.group();
    out.pairs = proper.len();
    for n in proper {
        let a = property_d::is_camina_centralizer(g, n)?;
        let b = property_d::is_camina_vanishing(table, n)?;
        if a == b {
            out.camina_agree += 1;
        } else {
            out.camina_disagree += 1;
            out.errors.push(format!(
                "Camina methods disagree on a normal subgroup of order {}: centralizer {a}, vanishing {b}",
                n.order()
            ));
        }
        out.camina_pairs += a as usize;
    }
    let has_d: Vec<bool> = normals.iter().map(|n| property_d::has_property_d(table, n)).collect();
    out.property_d_pairs = proper
        .iter()
        .filter(|n| property_d::has_property_d(table, n))
        .count();
    for (j, m) in normals.iter().enumerate() {
        if !has_d[j] {
            continue;
        }
        for (i, n) in normals.iter().enumerate() {
            if i == j || !n.is_subset_of(m) {
                continue;
            }
            out.monotone_chains += 1;
            if !has_d[i] {
                return Err(Error::violation(
                    Witness::new("property (D) passes to smaller normal subgroups", g.label())
                        .subgroup(n.elements())
                        .detail("larger_order", m.order()),
                ));
            }
        }
    }
    Ok(())
}

fn check_theorem_a(table: &CharacterTable, out: &mut EntryOutcome) -> Result<()> {
    let g = table.group();
    if g.is_abelian() || !g.is_solvable()? {
        return Ok(());
    }
    out.theorem_a_applicable = true;
    for n in g.minimal_normal_subgroups()? {
        let report = property_d::classify_theorem_a(table, &n)?;
        out.theorem_a.push(report.kind);
    }
    Ok(())
}

fn check_bch(table: &CharacterTable, out: &mut EntryOutcome) -> Result<()> {
    let g = table.group();
    if g.is_abelian() {
        out.bch = "abelian".into();
        return Ok(());
    }
    let scan = property_d::bch_scan(table)?;
    let shape = property_d::bch_shape(g)?;
    out.bch = scan.bucket.map_or_else(|| "none".to_string(), |b| b.to_string());
    if shape.is_some() && !scan.distinct {
        return Err(Error::violation(
            Witness::new("BCH shapes have distinct nonlinear degrees", g.label())
                .detail("nonlinear_degrees", format!("{:?}", scan.nonlinear_degrees)),
        ));
    }
    Ok(())
}

/// The converse constructions: extraspecial 2-groups over their center and
/// affine groups over their translation kernel have property (D) with a
/// single faithful character of the predicted degree.
fn check_converse(table: &CharacterTable, name: &str, out: &mut EntryOutcome) -> Result<()> {
    let g = table.group();
    let head = name.split('(').next().unwrap_or_default();
    let (n, degree) = match head {
        "extraspecial" => (g.center(), arith_sqrt_degree(g.order() / 2)),
        "agl1" if g.order() > 2 => {
            let q = (1..).find(|q| q * (q - 1) == g.order()).expect("affine order");
            (construct::leading_subgroup(g, q)?, (q - 1) as u64)
        }
        _ => return Ok(()),
    };
    out.converse_checked += 1;
    let faithful: Vec<u64> = table
        .rows()
        .iter()
        .filter(|r| table.is_faithful(r))
        .map(|r| r.degree())
        .collect();
    let ok = property_d::has_property_d(table, &n) && faithful == [degree];
    if !ok {
        return Err(Error::violation(
            Witness::new("converse construction has property (D) with one faithful character", g.label())
                .subgroup(n.elements())
                .detail("faithful_degrees", format!("{faithful:?}"))
                .detail("predicted", degree),
        ));
    }
    Ok(())
}

fn arith_sqrt_degree(x: usize) -> u64 {
    crate::arith::exact_sqrt(x as u64).expect("square index")
}

/// The normal subgroups used for Clifford-theory triples.
fn triple_normals(g: &Group, proper: &[&Subgroup]) -> Result<(Vec<Subgroup>, bool)> {
    if proper.len() <= TRIPLE_NORMAL_CAP {
        return Ok((proper.iter().map(|&n| n.clone()).collect(), false));
    }
    let mut chosen: Vec<Subgroup> = g.minimal_normal_subgroups()?;
    chosen.push(g.center());
    chosen.push(g.derived_subgroup());
    if g.is_solvable()? {
        chosen.push(g.fitting_subgroup()?);
        chosen.extend(g.chief_series()?.terms);
    }
    let mut keyed: BTreeMap<Vec<usize>, Subgroup> = BTreeMap::new();
    for s in chosen {
        if let Some(n) = proper.iter().find(|n| n.elements() == s.elements()) {
            keyed.insert(n.elements().to_vec(), (*n).clone());
        }
    }
    let mut list: Vec<Subgroup> = keyed.into_values().collect();
    list.sort();
    Ok((list, true))
}

fn is_chief_factor(normals: &[Subgroup], n: &Subgroup, m: &Subgroup) -> bool {
    n.order() < m.order()
        && n.is_subset_of(m)
        && !normals
            .iter()
            .any(|k| k.order() > n.order() && k.order() < m.order() && n.is_subset_of(k) && k.is_subset_of(m))
}

/// `M/N` is an elementary abelian `p`-group.
fn is_p_section(g: &Group, n: &Subgroup, m: &Subgroup) -> bool {
    let index = (m.order() / n.order()) as u64;
    let Some((p, _)) = crate::arith::prime_power(index) else {
        return false;
    };
    m.elements().iter().all(|&x| {
        n.contains(g.pow(x, p as usize))
            && m.elements().iter().all(|&y| n.contains(g.commutator(x, y)))
    })
}

fn check_triples(
    table: &CharacterTable,
    normals: &[Subgroup],
    proper: &[&Subgroup],
    out: &mut EntryOutcome,
) -> Result<()> {
    let g = table.group();
    let (chosen, capped) = triple_normals(g, proper)?;
    out.triples_capped = capped;
    let pairs = chosen
        .iter()
        .map(|n| CliffordPair::new(table, n))
        .collect::<Result<Vec<_>>>()?;
    for pair in &pairs {
        let n = pair.normal();
        let quotient_abelian = g.derived_subgroup().is_subset_of(n);
        let square = if quotient_abelian {
            clifford::is_square_abelian(g.quotient(n)?.image())
        } else {
            None
        };
        for theta in 0..pair.sub_table().len() {
            out.triples += 1;
            let h = pair.higgs(theta)?;
            if !h.invariant {
                continue;
            }
            out.invariant_triples += 1;
            if h.distinct_degrees && h.quotient_class != QuotientClass::Other {
                out.higgs_cases += 1;
                let e = h.fully_ramified.unwrap_or(0);
                if e * e != pair.index() as u64 {
                    return Err(Error::violation(
                        Witness::new("ramification index squared equals |G:N|", g.label())
                            .subgroup(n.elements())
                            .detail("theta", theta)
                            .detail("e", e),
                    ));
                }
            }
            if h.count_above == 2 {
                out.isaacs_two += 1;
                if h.degrees[0] != h.degrees[1] {
                    return Err(Error::violation(
                        Witness::new("two characters above an invariant theta have equal degree", g.label())
                            .subgroup(n.elements())
                            .detail("theta", theta)
                            .detail("degrees", format!("{:?}", h.degrees)),
                    ));
                }
            }
            if h.fully_ramified.is_some() && quotient_abelian {
                out.wolf_checked += 1;
                if square != Some(true) {
                    return Err(Error::violation(
                        Witness::new("fully ramified over an abelian quotient of shape A x A", g.label())
                            .subgroup(n.elements())
                            .detail("theta", theta),
                    ));
                }
            }
        }
    }
    for (i, pn) in pairs.iter().enumerate() {
        for (j, pm) in pairs.iter().enumerate() {
            let (n, m) = (pn.normal(), pm.normal());
            if i == j || !is_chief_factor(normals, n, m) || !is_p_section(g, n, m) {
                continue;
            }
            for (theta, action) in clifford::extension_actions(pn, pm)?.into_iter().enumerate() {
                match action {
                    None | Some(ExtensionAction::NotExtendible) => {}
                    Some(ExtensionAction::InvariantExtension) => out.extension_checked += 1,
                    Some(ExtensionAction::Transitive) => {
                        out.extension_checked += 1;
                        out.extension_transitive += 1;
                    }
                    Some(ExtensionAction::Intransitive) => {
                        return Err(Error::violation(
                            Witness::new(
                                "an invariant extension exists or C_G(M/N) is transitive on the extensions",
                                g.label(),
                            )
                            .subgroup(n.elements())
                            .detail("m_order", m.order())
                            .detail("theta", theta),
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use camina::chartable::CharacterTable;
use camina::construct;
use camina::corpus::{self, CorpusReport};
use camina::group::Group;
use camina::orbits::{self, LinearAction};
use camina::property_d::{self, BchBucket, PairType};
use camina::Result;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn corpus_groups() -> Vec<(String, Group)> {
    corpus::shipped()
        .into_iter()
        .map(|e| {
            let g = e.build().expect("corpus entry builds");
            (e.name, g)
        })
        .collect()
}

fn tables(groups: &[(String, Group)]) -> Result<Vec<CharacterTable>> {
    groups.iter().map(|(_, g)| CharacterTable::compute(g)).collect()
}

fn criterion_1(groups: &[(String, Group)]) -> Result<Outcome> {
    let start = Instant::now();
    let mut checked = 0;
    for (name, g) in groups {
        if g.order() > 512 {
            return Ok(outcome(false, format!("{name} exceeds the table bound")));
        }
        let t = CharacterTable::compute(g)?;
        if let Err(e) = t.verify() {
            return Ok(outcome(false, format!("{name}: {e}")));
        }
        checked += 1;
    }
    let secs = start.elapsed().as_secs_f64();
    Ok(outcome(
        secs < 60.0,
        format!("{checked} tables, both orthogonality relations exact, {secs:.1}s"),
    ))
}

fn criterion_2(report: &CorpusReport) -> Outcome {
    let pairs: usize = report.entries.iter().map(|e| e.pairs).sum();
    let disagree = report.camina_disagreements();
    outcome(
        disagree == 0 && pairs >= 300,
        format!("{pairs} pairs, {disagree} disagreements"),
    )
}

fn criterion_3(groups: &[(String, Group)], tables: &[CharacterTable]) -> Result<Outcome> {
    let mut counts = [0usize; 3];
    for ((name, g), t) in groups.iter().zip(tables) {
        if g.is_abelian() || !g.is_solvable()? {
            continue;
        }
        for n in g.minimal_normal_subgroups()? {
            let r = match property_d::classify_theorem_a(t, &n) {
                Ok(r) => r,
                Err(e) => return Ok(outcome(false, format!("{name}: {e}"))),
            };
            if !r.property_d {
                continue;
            }
            let ok = r.camina_centralizer == Some(true)
                && r.unique_minimal_normal
                && r.o_p_prime_trivial == Some(true)
                && r.pprime_fpf == Some(true);
            match r.kind {
                PairType::Type1 if ok => counts[0] += 1,
                PairType::Type2 if ok => counts[1] += 1,
                PairType::Type3 if ok => counts[2] += 1,
                k => return Ok(outcome(false, format!("{name}: property (D) pair classified {k}"))),
            }
        }
    }
    Ok(outcome(
        counts.iter().sum::<usize>() > 0,
        format!("type1 {}, type2 {}, type3 {}, no violations", counts[0], counts[1], counts[2]),
    ))
}

fn faithful_degrees(t: &CharacterTable) -> Vec<u64> {
    t.rows().iter().filter(|r| t.is_faithful(r)).map(|r| r.degree()).collect()
}

fn criterion_4() -> Result<Outcome> {
    let mut checked = 0;
    for m in 1..=3 {
        for plus in [true, false] {
            let g = construct::extraspecial_2(m, plus)?;
            let t = CharacterTable::compute(&g)?;
            if !property_d::has_property_d(&t, &g.center()) || faithful_degrees(&t) != [1 << m] {
                return Ok(outcome(false, format!("{} fails", g.label())));
            }
            checked += 1;
        }
    }
    for q in [3, 4, 5, 7, 8, 9, 11, 13, 16] {
        let g = construct::agl1(q)?;
        let t = CharacterTable::compute(&g)?;
        let kernel = construct::leading_subgroup(&g, q)?;
        if !property_d::has_property_d(&t, &kernel) || faithful_degrees(&t) != [q as u64 - 1] {
            return Ok(outcome(false, format!("{} fails", g.label())));
        }
        checked += 1;
    }
    Ok(outcome(true, format!("{checked} constructions, one faithful character each")))
}

fn expected_bucket(name: &str) -> Option<BchBucket> {
    match name.split('(').next()? {
        "extraspecial" => Some(BchBucket::Extraspecial2),
        "agl1" => Some(BchBucket::FrobeniusCyclic),
        "frobenius72" => Some(BchBucket::FrobeniusQuaternion72),
        _ => None,
    }
}

fn criterion_5(groups: &[(String, Group)], tables: &[CharacterTable]) -> Result<Outcome> {
    let mut distinct = 0;
    for ((name, g), t) in groups.iter().zip(tables) {
        if g.is_abelian() {
            continue;
        }
        let scan = match property_d::bch_scan(t) {
            Ok(s) => s,
            Err(e) => return Ok(outcome(false, format!("{name}: {e}"))),
        };
        let shape = property_d::bch_shape(g)?;
        if scan.distinct != shape.is_some() || scan.bucket != shape {
            return Ok(outcome(false, format!("{name}: distinct {} but shape {shape:?}", scan.distinct)));
        }
        if let Some(want) = expected_bucket(name) {
            if scan.bucket != Some(want) {
                return Ok(outcome(false, format!("{name}: bucket {:?}, expected {want}", scan.bucket)));
            }
        }
        distinct += scan.distinct as usize;
    }
    Ok(outcome(true, format!("{distinct} groups with distinct nonlinear degrees, all in their bucket")))
}

fn violations_matching(report: &CorpusReport, needles: &[&str]) -> Vec<String> {
    report
        .entries
        .iter()
        .flat_map(|e| e.violations.iter().chain(&e.errors))
        .filter(|v| needles.iter().any(|n| v.contains(n)))
        .cloned()
        .collect()
}

fn criterion_6(report: &CorpusReport) -> Outcome {
    let bad = violations_matching(report, &["invariant theta", "ramification index", "two characters above"]);
    let higgs: usize = report.entries.iter().map(|e| e.higgs_cases).sum();
    let two: usize = report.entries.iter().map(|e| e.isaacs_two).sum();
    outcome(
        bad.is_empty() && report.errors() == 0 && higgs > 0 && two > 0,
        format!("{higgs} Higgs cases, {two} two-character triples, {} violations", bad.len()),
    )
}

fn criterion_7(report: &CorpusReport) -> Outcome {
    let bad = violations_matching(report, &["A x A"]);
    let checked: usize = report.entries.iter().map(|e| e.wolf_checked).sum();
    outcome(
        bad.is_empty() && checked > 0,
        format!("{checked} fully ramified triples over abelian quotients, {} violations", bad.len()),
    )
}

fn criterion_8() -> Result<Outcome> {
    let start = Instant::now();
    let mut odd = 0;
    let mut negation = 0;
    let cases: Vec<(u64, usize)> = [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31]
        .iter()
        .map(|&p| (p, 1))
        .chain([(3, 2)])
        .collect();
    for (p, n) in cases {
        let scan = match orbits::dade_scan(p, n) {
            Ok(s) => s,
            Err(e) => return Ok(outcome(false, format!("GL({n},{p}): {e}"))),
        };
        if scan.confirmed != scan.odd_subgroups {
            return Ok(outcome(false, format!("GL({n},{p}): Dade fails")));
        }
        odd += scan.odd_subgroups;
        for gens in orbits::small_subgroups(p, n)? {
            if !LinearAction::new(p, n, &gens)?.negation_pairing()? {
                return Ok(outcome(false, format!("negation pairing fails over GF({p})^{n}")));
            }
            negation += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    Ok(outcome(
        secs < 30.0,
        format!("{odd} odd-order subgroups with a repeated orbit length, {negation} actions paired, {secs:.1}s"),
    ))
}

fn criterion_9(first: &CorpusReport) -> Outcome {
    let a = first.render();
    let b = corpus::run(&corpus::shipped(), None).render();
    outcome(a == b, format!("{} bytes, identical = {}", a.len(), a == b))
}

fn main() -> ExitCode {
    let groups = corpus_groups();
    let tables = tables(&groups).expect("corpus tables");
    let report = corpus::run(&corpus::shipped(), None);
    let results: Vec<(u32, Result<Outcome>)> = vec![
        (1, criterion_1(&groups)),
        (2, Ok(criterion_2(&report))),
        (3, criterion_3(&groups, &tables)),
        (4, criterion_4()),
        (5, criterion_5(&groups, &tables)),
        (6, Ok(criterion_6(&report))),
        (7, Ok(criterion_7(&report))),
        (8, criterion_8()),
        (9, Ok(criterion_9(&report))),
    ];
    let mut failed = 0;
    for (i, r) in results {
        let o = r.unwrap_or_else(|e| outcome(false, format!("error: {e}")));
        failed += !o.pass as usize;
        println!("criterion {i}: {} ({})", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!(
        "corpus: type3_witnesses = {}, theorem_violations = {}",
        report.type3_witnesses(),
        report.theorem_violations()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Line-oriented `key = value` reports.

use std::fmt::{self, Display};

use crate::chartable::CharacterTable;
use crate::clifford::HiggsReport;
use crate::property_d::PairReport;

pub const REPORT_VERSION: u32 = 1;

/// An ordered list of lines; `None` keys are blank separators.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    lines: Vec<Option<(String, String)>>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn kv(&mut self, key: impl Into<String>, value: impl Display) -> &mut Self {
        self.lines.push(Some((key.into(), value.to_string())));
        self
    }

    pub fn list<T: Display>(&mut self, key: impl Into<String>, values: &[T]) -> &mut Self {
        self.kv(key, join(values, ","))
    }

    pub fn blank(&mut self) -> &mut Self {
        self.lines.push(None);
        self
    }

    pub fn extend(&mut self, other: &Report) -> &mut Self {
        self.lines.extend(other.lines.iter().cloned());
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.lines
            .iter()
            .flatten()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

impl Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "report-version = {REPORT_VERSION}")?;
        for line in &self.lines {
            match line {
                Some((k, v)) => writeln!(f, "{k} = {v}")?,
                None => writeln!(f)?,
            }
        }
        Ok(())
    }
}

pub fn join<T: Display>(values: &[T], sep: &str) -> String {
    values.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn opt<T: Display>(x: Option<T>) -> String {
    x.map_or_else(|| "n/a".to_string(), |v| v.to_string())
}

/// Table text: a `classes:` header, then one `deg=... values=...` line per
/// row with values separated by `, `.
pub fn format_table(table: &CharacterTable) -> String {
    let cl = table.group().conjugacy_classes();
    let mut s = format!(
        "report-version = {REPORT_VERSION}\nclasses: {} sizes: {}\n",
        join(&cl.reps(), " "),
        join(&cl.sizes(), " ")
    );
    for row in table.rows() {
        s.push_str(&format!("deg={} values={}\n", row.degree(), join(row.values(), ", ")));
    }
    s
}

pub fn pair_report(r: &PairReport) -> Report {
    let mut out = Report::new();
    out.kv("group", &r.group)
        .kv("order", r.order)
        .kv("normal-order", r.normal_order())
        .list("normal", &r.normal)
        .kv("prime-power", opt(r.prime_power.map(|(p, n)| format!("{p}^{n}"))))
        .list("degrees-over", &r.degrees_over)
        .kv("property-d", r.property_d)
        .kv("camina-centralizer", opt(r.camina_centralizer))
        .kv("camina-vanishing", opt(r.camina_vanishing))
        .kv("minimal-normal", r.minimal_normal)
        .kv("unique-minimal-normal", r.unique_minimal_normal)
        .kv("o-p-prime-trivial", opt(r.o_p_prime_trivial))
        .kv("pprime-fixed-point-free", opt(r.pprime_fpf))
        .kv("type", r.kind)
        .kv("kuisch-case", opt(r.kuisch_case));
    for (k, v) in &r.evidence {
        out.kv(format!("evidence.{k}"), v);
    }
    out
}

pub fn higgs_report(r: &HiggsReport, theta_degree: u64) -> Report {
    let mut out = Report::new();
    out.kv("theta", r.theta)
        .kv("theta-degree", theta_degree)
        .kv("invariant", r.invariant)
        .kv("count-above", r.count_above)
        .list("degrees-above", &r.degrees)
        .kv("distinct-degrees", r.distinct_degrees)
        .kv("fully-ramified", r.fully_ramified.is_some())
        .kv("ramification-e", opt(r.fully_ramified))
        .kv("quotient-class", r.quotient_class);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn rendering() {
        let mut r = Report::new();
        r.kv("a", 1).blank().list("b", &[1, 2]);
        assert_eq!(r.to_string(), "report-version = 1\na = 1\n\nb = 1,2\n");
        assert_eq!(r.get("b"), Some("1,2"));
    }

    #[test]
    fn table_text() {
        let t = CharacterTable::compute(&construct::cyclic(3)).unwrap();
        let s = format_table(&t);
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[0], "report-version = 1");
        assert!(lines[1].starts_with("classes: 0 "));
        assert_eq!(lines[2], "deg=1 values=1, 1, 1");
        assert_eq!(lines.len(), 5);
    }
}

//! Group files: `cayley <n>` followed by the table rows, or `perm <degree>`
//! followed by one generator per line in 1-based cycle notation.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::{Group, DEFAULT_LATTICE_BOUND};
use crate::orbits::Matrix;

/// Parses a group file. Blank lines and lines starting with `#` are
/// skipped; line numbers in errors count every physical line.
pub fn parse_group(text: &str, label: &str) -> Result<Group> {
    parse_group_bounded(text, label, DEFAULT_LATTICE_BOUND)
}

pub fn parse_group_bounded(text: &str, label: &str, bound: usize) -> Result<Group> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "empty group file"))?;
    let mut words = header.split_whitespace();
    let kind = words.next().unwrap_or_default();
    let size: usize = match (words.next().map(str::parse), words.next()) {
        (Some(Ok(n)), None) => n,
        _ => return Err(Error::parse(hline, format!("expected `cayley <n>` or `perm <degree>`, got {header:?}"))),
    };
    match kind {
        "cayley" => parse_cayley(lines, size, hline, label, bound),
        "perm" => parse_perm(lines, size, label, bound),
        _ => Err(Error::parse(hline, format!("unknown format {kind:?}"))),
    }
}

fn parse_cayley<'a>(
    lines: impl Iterator<Item = (usize, &'a str)>,
    n: usize,
    hline: usize,
    label: &str,
    bound: usize,
) -> Result<Group> {
    if n == 0 {
        return Err(Error::parse(hline, "table size must be positive"));
    }
    if n > bound {
        return Err(Error::BoundExceeded { order: n, bound });
    }
    let mut rows = Vec::with_capacity(n);
    let mut last = hline;
    for (line, text) in lines {
        if rows.len() == n {
            return Err(Error::parse(line, format!("more than {n} table rows")));
        }
        let row = text
            .split_whitespace()
            .map(|w| match w.parse::<usize>() {
                Ok(x) if x < n => Ok(x),
                _ => Err(Error::parse(line, format!("{w:?} is not an element id below {n}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(Error::parse(line, format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
        last = line;
    }
    if rows.len() != n {
        return Err(Error::parse(last + 1, format!("expected {n} table rows, found {}", rows.len())));
    }
    Group::from_table(label, &rows)
}

fn parse_cycles(text: &str, degree: usize, line: usize) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (0..degree).collect();
    let mut seen = vec![false; degree];
    let mut rest = text.trim();
    while !rest.is_empty() {
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| Error::parse(line, format!("malformed cycle notation {text:?}")))?;
        let points = inner
            .0
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|w| !w.is_empty())
            .map(|w| match w.parse::<usize>() {
                Ok(x) if (1..=degree).contains(&x) => Ok(x - 1),
                _ => Err(Error::parse(line, format!("{w:?} is not a point in 1..={degree}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        for (i, &x) in points.iter().enumerate() {
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::parse(line, format!("point {} repeated", x + 1)));
            }
            perm[x] = points[(i + 1) % points.len()];
        }
        rest = inner.1.trim_start();
    }
    Ok(perm)
}

fn parse_perm<'a>(
    lines: impl Iterator<Item = (usize, &'a str)>,
    degree: usize,
    label: &str,
    bound: usize,
) -> Result<Group> {
    let gens = lines
        .map(|(line, text)| parse_cycles(text, degree, line))
        .collect::<Result<Vec<_>>>()?;
    Group::from_permutation_generators(label, degree, &gens, bound)
}

/// Parses a generator file for a linear action: one `n x n` matrix per
/// line, entries row-major and whitespace-separated.
pub fn parse_matrices(text: &str, n: usize) -> Result<Vec<Matrix>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let entries = line
            .split_whitespace()
            .map(|w| w.parse::<u64>().map_err(|_| Error::parse(i + 1, format!("{w:?} is not an integer"))))
            .collect::<Result<Vec<_>>>()?;
        if entries.len() != n * n {
            return Err(Error::parse(
                i + 1,
                format!("expected {} entries, found {}", n * n, entries.len()),
            ));
        }
        out.push(entries.chunks(n).map(<[u64]>::to_vec).collect());
    }
    Ok(out)
}

/// Renders the Cayley format.
pub fn format_cayley(g: &Group) -> String {
    let mut s = format!("cayley {}\n", g.order());
    for a in g.elements() {
        let row: Vec<String> = g.elements().map(|b| g.mul(a, b).to_string()).collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    s
}

/// Loads a group file, labelling the group by the file stem.
pub fn load_group(path: impl AsRef<Path>) -> Result<Group> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    let label = path.file_stem().and_then(|s| s.to_str()).unwrap_or("G");
    parse_group(&text, label)
}

pub fn save_group(g: &Group, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, format_cayley(g))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn cayley_round_trip() {
        let g = construct::cyclic(7);
        let h = parse_group(&format_cayley(&g), "C7").unwrap();
        assert_eq!(g, h);
        let d = construct::dihedral(4);
        assert_eq!(parse_group(&format_cayley(&d), "D8").unwrap(), d);
    }

    #[test]
    fn perm_closure() {
        let g = parse_group("perm 3\n(1 2 3)\n", "C3").unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.is_cyclic());
        let s4 = parse_group("# S4\nperm 4\n(1 2 3 4)\n(1 2)\n", "S4").unwrap();
        assert_eq!(s4.order(), 24);
        let triv = parse_group("perm 2\n()\n", "1").unwrap();
        assert_eq!(triv.order(), 1);
    }

    #[test]
    fn matrices() {
        let m = parse_matrices("# Q8\n0 2 1 0\n\n1 1 1 2\n", 2).unwrap();
        assert_eq!(m, vec![vec![vec![0, 2], vec![1, 0]], vec![vec![1, 1], vec![1, 2]]]);
        assert!(matches!(parse_matrices("1 0\n0 1 1\n", 1), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_matrices("1\nx\n", 1), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn parse_errors_carry_lines() {
        let line = |text: &str| match parse_group(text, "x") {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(line("cayly 2\n0 1\n1 0\n"), 1);
        assert_eq!(line("cayley\n"), 1);
        assert_eq!(line("cayley 2\n0 1\n1\n"), 3);
        assert_eq!(line("cayley 2\n0 1\n1 5\n"), 3);
        assert_eq!(line("cayley 2\n0 1\n"), 3);
        assert_eq!(line("perm 3\n(1 2 3)\n(1 4)\n"), 3);
        assert_eq!(line("perm 3\n(1 2 1)\n"), 2);
        assert_eq!(line(""), 1);
        assert!(matches!(
            parse_group("cayley 2\n0 1\n0 1\n", "x"),
            Err(Error::InvalidGroup(_))
        ));
        assert!(matches!(
            parse_group_bounded("perm 5\n(1 2 3 4 5)\n(1 2)\n", "S5", 100),
            Err(Error::BoundExceeded { .. })
        ));
    }
}

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use camina::chartable::CharacterTable;
use camina::clifford::CliffordPair;
use camina::corpus;
use camina::orbits::{self, LinearAction};
use camina::property_d;
use camina::report::{self, Report};
use camina::{construct, io, Error, Group, Result, Subgroup};

/// Exact character tables and distinct-degree checks for small groups.
///
/// A GROUP argument is a Cayley or permutation file, or a constructor name
/// such as `agl1(8)` or `extraspecial(2,-)`.
#[derive(Parser)]
#[command(name = "camina", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural summary of a group.
    Info { group: String },
    /// Character table.
    Table { group: String },
    /// Clifford data for every character of a normal subgroup.
    Analyze {
        #[arg(long = "pair")]
        group: String,
        /// Comma-separated element ids, or `auto-minimal`.
        #[arg(long)]
        normal: String,
    },
    /// Distinct-degree classification of (G, N).
    Classify {
        #[arg(required = true)]
        groups: Vec<String>,
        #[command(flatten)]
        normal: NormalChoice,
    },
    /// Runs the verification corpus.
    Corpus {
        /// Only entries whose name contains this string.
        #[arg(long)]
        filter: Option<String>,
        /// Corpus file to use instead of the shipped one.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Orbits of a matrix group on a vector space over GF(p).
    Orbits {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        dim: usize,
        /// One matrix per line, row-major.
        #[arg(long, required_unless_present = "scan")]
        gens: Option<PathBuf>,
        /// Scan every odd-order subgroup of GL(dim, prime) instead.
        #[arg(long)]
        scan: bool,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct NormalChoice {
    /// Comma-separated element ids of N.
    #[arg(long)]
    normal: Option<String>,
    /// Every minimal normal subgroup (the default).
    #[arg(long)]
    auto_minimal: bool,
}

fn load(spec: &str) -> Result<Group> {
    if Path::new(spec).exists() {
        io::load_group(spec)
    } else {
        construct::by_name(spec).map_err(|_| Error::InvalidGroup(format!("no group file or constructor named {spec:?}")))
    }
}

fn normals(g: &Group, spec: Option<&str>) -> Result<Vec<Subgroup>> {
    match spec {
        None | Some("auto-minimal") => g.minimal_normal_subgroups(),
        Some(ids) => {
            let elems = ids
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|w| !w.is_empty())
                .map(|w| w.parse::<usize>().map_err(|_| Error::InvalidSubgroup(format!("{w:?} is not an id"))))
                .collect::<Result<Vec<_>>>()?;
            let s = Subgroup::new(g, &elems)?;
            Ok(vec![g.find_normal(s.elements())?.ok_or(Error::NotNormal)?])
        }
    }
}

fn opt<T: ToString>(r: Result<T>) -> String {
    r.map_or_else(|_| "n/a".to_string(), |v| v.to_string())
}

fn info(g: &Group) -> Result<Report> {
    let cl = g.conjugacy_classes();
    let mut r = Report::new();
    r.kv("command", "info")
        .kv("group", g.label())
        .kv("order", g.order())
        .kv("exponent", g.exponent())
        .kv("abelian", g.is_abelian())
        .kv("nilpotent", opt(g.is_nilpotent()))
        .kv("supersolvable", opt(g.is_supersolvable()))
        .kv("solvable", opt(g.is_solvable()))
        .kv("classes", cl.len())
        .list("class-reps", &cl.reps())
        .list("class-sizes", &cl.sizes())
        .list(
            "order-profile",
            &g.order_profile().iter().map(|(o, c)| format!("{o}:{c}")).collect::<Vec<_>>(),
        )
        .kv("center-order", g.center().order())
        .kv("derived-order", g.derived_subgroup().order());
    let normals = g.normal_subgroups()?;
    let minimal: Vec<usize> = g.minimal_normal_subgroups()?.iter().map(Subgroup::order).collect();
    r.kv("normal-subgroups", normals.len()).list("minimal-normal-orders", &minimal);
    if g.is_solvable()? {
        r.list("chief-factors", &g.chief_series()?.factor_orders());
    }
    Ok(r)
}

fn analyze(g: &Group, spec: &str) -> Result<String> {
    let table = CharacterTable::compute(g)?;
    let mut r = Report::new();
    r.kv("command", "analyze").kv("group", g.label()).kv("order", g.order());
    for n in normals(g, Some(spec))? {
        let pair = CliffordPair::new(&table, &n)?;
        r.blank()
            .list("normal", n.elements())
            .kv("normal-order", n.order())
            .kv("index", pair.index())
            .kv("quotient-class", pair.quotient_class()?);
        for theta in 0..pair.sub_table().len() {
            let h = pair.higgs(theta)?;
            r.blank()
                .extend(&report::higgs_report(&h, pair.theta(theta).degree()))
                .kv("orbit-size", pair.orbit(theta).len())
                .kv("stabilizer-order", pair.stabilizer(theta).order());
        }
    }
    Ok(r.to_string())
}

fn classify(specs: &[String], normal: &NormalChoice) -> Result<String> {
    let mut r = Report::new();
    r.kv("command", "classify");
    for spec in specs {
        let g = load(spec)?;
        let table = CharacterTable::compute(&g)?;
        let chosen = if normal.auto_minimal { None } else { normal.normal.as_deref() };
        for n in normals(&g, chosen)? {
            let pr = property_d::classify_theorem_a(&table, &n)?;
            r.blank().extend(&report::pair_report(&pr));
        }
    }
    Ok(r.to_string())
}

fn orbit_report(p: u64, n: usize, gens: &Path) -> Result<String> {
    let text = std::fs::read_to_string(gens)?;
    let a = LinearAction::new(p, n, &io::parse_matrices(&text, n)?)?;
    let sizes = a.orbit_sizes();
    let order = a.group_order()?;
    let mut r = Report::new();
    r.kv("command", "orbits")
        .kv("prime", p)
        .kv("dim", n)
        .kv("group-order", order)
        .kv("orbits", sizes.len())
        .list("orbit-sizes", &sizes)
        .kv("transitive", a.is_transitive_nonzero())
        .kv("regular-orbits", a.regular_orbit_count()?)
        .kv("irreducible", a.is_irreducible());
    let guarded = |res: Result<bool>| -> Result<String> {
        match res {
            Ok(b) => Ok(b.to_string()),
            Err(Error::EvenCharacteristic | Error::EvenOrder(_)) => Ok("n/a".into()),
            Err(e) => Err(e),
        }
    };
    r.kv("negation-pairing", guarded(a.negation_pairing())?)
        .kv("dade-duplicate", guarded(a.dade_duplicate_check())?);
    let scan = a.distinct_sizes_scan()?;
    r.kv("distinct-sizes-hypothesis", scan.hypothesis)
        .kv("distinct-sizes-transitive", scan.transitive);
    Ok(r.to_string())
}

fn orbit_scan(p: u64, n: usize) -> Result<String> {
    let s = orbits::dade_scan(p, n)?;
    let mut r = Report::new();
    r.kv("command", "orbits-scan")
        .kv("prime", s.p)
        .kv("dim", s.n)
        .kv("subgroups", s.subgroups)
        .kv("odd-subgroups", s.odd_subgroups)
        .kv("dade-confirmed", s.confirmed)
        .kv("negation-pairing", s.negation_pairs);
    Ok(r.to_string())
}

fn run(cli: Cli) -> Result<ExitCode> {
    let text = match cli.command {
        Command::Info { group } => info(&load(&group)?)?.to_string(),
        Command::Table { group } => report::format_table(&CharacterTable::compute(&load(&group)?)?),
        Command::Analyze { group, normal } => analyze(&load(&group)?, &normal)?,
        Command::Classify { groups, normal } => classify(&groups, &normal)?,
        Command::Corpus { filter, file } => {
            let entries = match file {
                Some(path) => corpus::parse_corpus(&std::fs::read_to_string(path)?)?,
                None => corpus::shipped(),
            };
            let report = corpus::run(&entries, filter.as_deref());
            print!("{}", report.render());
            return Ok(if report.theorem_violations() > 0 {
                ExitCode::from(2)
            } else if report.errors() + report.mismatches() > 0 {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            });
        }
        Command::Orbits { prime, dim, gens, scan } => match (scan, gens) {
            (true, _) => orbit_scan(prime, dim)?,
            (false, Some(path)) => orbit_report(prime, dim, &path)?,
            (false, None) => unreachable!("clap requires --gens without --scan"),
        },
    };
    print!("{text}");
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_theorem_violation() { 2 } else { 1 })
        }
    }
}

//! `dvdb`: evaluate vertex-degree-based invariants of digraphs and check their
//! extremal bounds by exhaustive search.
//!
//! Exit codes: 0 success, 1 a verified statement is inconsistent, 2 malformed
//! input, 3 input outside an operation's domain.

mod report;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::builder::RangedU64ValueParser;
use clap::{Parser, Subcommand};
use digraph_vdb::oracle::{closed_form_count, MAX_ENUMERATION_ORDER};
use digraph_vdb::{
    catalog_for, check_hypothesis, corollary_catalog, doubled_integer_index, index_arc_sum,
    mask_hex, minimal_n, verify_all, BoundStatement, Condition, DegreeSpectrum, Digraph, Error,
    Extremum, FamilyId, FamilyKind, PhiSpec, SearchOptions, TheoremCase,
};
use serde_json::{json, Value};

use report::{num, opt, Format, Report};

#[derive(Parser, Debug)]
#[command(
    name = "dvdb",
    version,
    about = "Vertex-degree-based invariants of digraphs"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Threads for exhaustive search [default: available parallelism].
    #[arg(long, global = true, value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
    workers: Option<usize>,

    /// Print progress and timings to stderr.
    #[arg(
        long,
        short,
        global = true,
        env = "DVDB_VERBOSE",
        action = clap::ArgAction::SetTrue,
        value_parser = clap::builder::BoolishValueParser::new()
    )]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an index on an edge-list digraph.
    Index {
        /// Edge-list file, or `-` for stdin.
        #[arg(long)]
        input: PathBuf,
        /// Index name, e.g. `harmonic` or `randic:-1`.
        #[arg(long, allow_hyphen_values = true)]
        index: PhiSpec,
        /// Number of vertices, if larger than the largest id + 1.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Print the degree spectrum of an edge-list digraph.
    Spectrum {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Build a named digraph family.
    Construct {
        #[arg(long)]
        family: FamilyKind,
        #[arg(long)]
        n: usize,
        /// Also report this index via the family's closed form.
        #[arg(long, allow_hyphen_values = true)]
        index: Option<PhiSpec>,
    },
    /// List the corollary bounds at an order.
    Bounds {
        #[arg(long)]
        n: usize,
        /// Only statements about this index.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "alpha")]
        index: Option<PhiSpec>,
        /// Exponent for the general Randić and sum-connectivity statements.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<f64>,
    },
    /// Check theorem hypotheses, or find the least order at which they hold.
    Hypothesis {
        #[arg(long, allow_hyphen_values = true)]
        index: PhiSpec,
        /// Theorem variant (`1i`, `2ii`, ...) or `all`.
        #[arg(long, default_value = "all")]
        theorem: Theorems,
        /// Check this order only.
        #[arg(long)]
        n: Option<usize>,
        /// Largest order scanned.
        #[arg(long, default_value_t = 100)]
        n_max: usize,
    },
    /// Confirm the corollary bounds for an index by exhaustive search.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        index: PhiSpec,
        /// Only the lower (`min`) or upper (`max`) bounds.
        #[arg(long)]
        direction: Option<Extremum>,
        /// Permit n = 6 (about 2^30 candidate digraphs).
        #[arg(long)]
        allow_n6: bool,
    },
}

#[derive(Clone, Debug)]
struct Theorems(Vec<TheoremCase>);

impl FromStr for Theorems {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "all" {
            return Ok(Theorems(TheoremCase::ALL.to_vec()));
        }
        s.split(',')
            .map(|t| t.trim().parse())
            .collect::<Result<_, _>>()
            .map(Theorems)
    }
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Domain(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Domain(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

struct Ctx {
    opts: SearchOptions,
    verbose: bool,
}

impl Ctx {
    fn log(&self, msg: impl FnOnce() -> String) {
        if self.verbose {
            eprintln!("dvdb: {}", msg());
        }
    }
}

fn read_digraph(path: &Path, n: Option<usize>) -> Result<Digraph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    };
    Digraph::parse_edge_list(&text, n).map_err(|e| match e {
        e if e.is_input_error() => Failure::Input(format!("{}: {e}", path.display())),
        e => e.into(),
    })
}

fn labels(conditions: &std::collections::BTreeSet<Condition>) -> Vec<&'static str> {
    conditions.iter().map(|c| c.label()).collect()
}

fn joined_or_none(items: &[&str]) -> String {
    if items.is_empty() {
        "none".into()
    } else {
        items.join(" ")
    }
}

fn exact_json(doubled: Option<u128>) -> Value {
    match doubled {
        None => Value::Null,
        Some(d) => u64::try_from(d).map_or_else(|_| Value::String(d.to_string()), Value::from),
    }
}

fn cmd_index(input: &Path, spec: PhiSpec, n: Option<usize>) -> Result<Report, Failure> {
    let d = read_digraph(input, n)?;
    let value = index_arc_sum(&d, &spec)?;
    let conditions = labels(&DegreeSpectrum::of(&d)?.conditions());
    let doubled = doubled_integer_index(&d, &spec);
    let mut text = format!("{spec} = {}\n", num(value));
    if let Some(x) = doubled {
        text.push_str(&format!("exact 2I = {x}\n"));
    }
    text.push_str(&format!(
        "n = {}, arcs = {}\nconditions: {}\n",
        d.order(),
        d.arc_count(),
        joined_or_none(&conditions)
    ));
    Ok(Report {
        json: json!({
            "index": spec.to_string(),
            "n": d.order(),
            "arcs": d.arc_count(),
            "value": value,
            "doubled_exact": exact_json(doubled),
            "conditions": conditions,
        }),
        header: vec!["index", "n", "arcs", "value", "doubled_exact", "conditions"],
        rows: vec![vec![
            spec.to_string(),
            d.order().to_string(),
            d.arc_count().to_string(),
            num(value),
            opt(doubled),
            conditions.join(" "),
        ]],
        text,
    })
}

fn cmd_spectrum(input: &Path, n: Option<usize>) -> Result<Report, Failure> {
    let d = read_digraph(input, n)?;
    let s = DegreeSpectrum::of(&d)?;
    let conditions = labels(&s.conditions());
    let pairs = |it: &mut dyn Iterator<Item = ((usize, usize), u64)>| -> Vec<Value> {
        it.map(|((i, j), c)| json!({"i": i, "j": j, "count": c}))
            .collect()
    };
    let mut rows = Vec::new();
    let mut text = format!("n = {}, arcs = {}\n", s.order(), s.arc_count());
    text.push_str("arc types (out-degree of tail, in-degree of head):\n");
    for ((i, j), c) in s.a_entries() {
        rows.push(vec![
            "a".into(),
            i.to_string(),
            j.to_string(),
            c.to_string(),
        ]);
        text.push_str(&format!("  a({i},{j}) = {c}\n"));
    }
    text.push_str("unordered pair counts:\n");
    for ((i, j), c) in s.p_entries() {
        rows.push(vec![
            "p".into(),
            i.to_string(),
            j.to_string(),
            c.to_string(),
        ]);
        text.push_str(&format!("  p({i},{j}) = {c}\n"));
    }
    text.push_str("degree roles per value:\n");
    for (i, c) in s.role_entries() {
        rows.push(vec![
            "role".into(),
            i.to_string(),
            String::new(),
            c.to_string(),
        ]);
        text.push_str(&format!("  n({i}) = {c}\n"));
    }
    text.push_str(&format!(
        "identities hold: {}\nconditions: {}\n",
        s.identities_hold(),
        joined_or_none(&conditions)
    ));
    Ok(Report {
        json: json!({
            "n": s.order(),
            "arcs": s.arc_count(),
            "a": pairs(&mut s.a_entries()),
            "p": pairs(&mut s.p_entries()),
            "roles": s.role_entries().map(|(i, c)| json!({"i": i, "count": c})).collect::<Vec<_>>(),
            "identities_hold": s.identities_hold(),
            "conditions": conditions,
        }),
        header: vec!["table", "i", "j", "count"],
        rows,
        text,
    })
}

fn cmd_construct(kind: FamilyKind, n: usize, spec: Option<PhiSpec>) -> Result<Report, Failure> {
    let id = FamilyId::new(kind, n)?;
    let d = id.construct();
    let arcs: Vec<(usize, usize)> = d.arcs().collect();
    let conditions = labels(&DegreeSpectrum::of(&d)?.conditions());
    let value = spec.map(|s| id.index(&s));
    let mut text = format!("# {kind}\n{}", d.to_edge_list());
    if let (Some(s), Some(v)) = (spec, value) {
        text.push_str(&format!("# {s} = {}\n", num(v)));
    }
    Ok(Report {
        json: json!({
            "family": kind.name(),
            "n": n,
            "arcs": arcs,
            "mask": d.mask().map(mask_hex),
            "conditions": conditions,
            "index": spec.map(|s| s.to_string()),
            "value": value,
        }),
        header: vec!["u", "v"],
        rows: arcs
            .iter()
            .map(|(u, v)| vec![u.to_string(), v.to_string()])
            .collect(),
        text,
    })
}

const STATEMENT_HEADER: [&str; 11] = [
    "id",
    "index",
    "n",
    "direction",
    "bound",
    "equality_class",
    "hypothesis",
    "conditional",
    "minimal_n",
    "claimed_tight",
    "applicability",
];

fn statement_row(s: &BoundStatement) -> Vec<String> {
    vec![
        s.id.to_string(),
        s.spec.to_string(),
        s.n.to_string(),
        format!("{:?}", s.direction).to_lowercase(),
        num(s.bound_value),
        s.equality_class.label().to_string(),
        s.hypothesis.to_string(),
        s.conditional.to_string(),
        opt(s.minimal_n),
        s.claimed_tight.to_string(),
        s.applicability.clone(),
    ]
}

fn direction_word(s: &BoundStatement) -> &'static str {
    match s.direction {
        digraph_vdb::Side::Lower => ">=",
        digraph_vdb::Side::Upper => "<=",
    }
}

fn cmd_bounds(n: usize, spec: Option<PhiSpec>, alpha: Option<f64>) -> Result<Report, Failure> {
    if n < 2 {
        return Err(Error::TooFewVertices(n).into());
    }
    let statements = match spec {
        Some(s) => catalog_for(n, &s),
        None => corollary_catalog(n, alpha),
    };
    let mut text = String::new();
    for s in &statements {
        text.push_str(&format!(
            "{} {} {} {} [{}; equality: {}; {}]\n",
            s.id,
            s.spec,
            direction_word(s),
            num(s.bound_value),
            s.hypothesis,
            s.equality_class.label(),
            s.applicability
        ));
    }
    if statements.is_empty() {
        text.push_str("no statements at this order\n");
    }
    Ok(Report {
        json: json!({ "n": n, "statements": statements }),
        header: STATEMENT_HEADER.to_vec(),
        rows: statements.iter().map(statement_row).collect(),
        text,
    })
}

fn cmd_hypothesis(
    spec: PhiSpec,
    cases: &[TheoremCase],
    n: Option<usize>,
    n_max: usize,
) -> Result<Report, Failure> {
    if let Some(n) = n {
        if n < 2 {
            return Err(Error::TooFewVertices(n).into());
        }
        let reports: Vec<_> = cases
            .iter()
            .map(|&c| check_hypothesis(c, n, &spec))
            .collect();
        let mut text = String::new();
        for r in &reports {
            text.push_str(&format!(
                "{} {spec} n={n}: {}",
                r.theorem,
                if r.holds { "holds" } else { "fails" }
            ));
            if !r.violations.is_empty() {
                text.push_str(&format!(" ({} violating pairs", r.violations.len()));
                let v = &r.violations[0];
                text.push_str(&format!(
                    ", first ({},{}): phi {} vs {})",
                    v.i,
                    v.j,
                    num(v.phi),
                    num(v.threshold)
                ));
            }
            if r.diagonal_ok == Some(false) {
                text.push_str(" diagonal condition fails");
            }
            text.push('\n');
        }
        return Ok(Report {
            json: json!({ "index": spec.to_string(), "n": n, "reports": reports }),
            header: vec![
                "theorem",
                "index",
                "n",
                "holds",
                "violations",
                "diagonal_ok",
            ],
            rows: reports
                .iter()
                .map(|r| {
                    vec![
                        r.theorem.to_string(),
                        spec.to_string(),
                        n.to_string(),
                        r.holds.to_string(),
                        r.violations.len().to_string(),
                        opt(r.diagonal_ok),
                    ]
                })
                .collect(),
            text,
        });
    }

    let mut text = String::new();
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    for &case in cases {
        let found = minimal_n(case, &spec, n_max);
        let reason = match found {
            Some(_) => None,
            None if n_max < 3 => Some("no order scanned"),
            None => {
                let r = check_hypothesis(case, n_max, &spec);
                Some(if r.diagonal_ok == Some(false) {
                    "diagonal condition fails"
                } else {
                    "threshold inequalities fail"
                })
            }
        };
        match (found, reason) {
            (Some(m), _) => text.push_str(&format!("{case} {spec}: minimal n = {m}\n")),
            (None, Some(why)) => text.push_str(&format!(
                "{case} {spec}: not applicable for n <= {n_max} ({why})\n"
            )),
            (None, None) => unreachable!(),
        }
        entries.push(json!({
            "theorem": case.to_string(),
            "minimal_n": found,
            "reason": reason,
        }));
        rows.push(vec![
            case.to_string(),
            spec.to_string(),
            n_max.to_string(),
            opt(found),
            reason.unwrap_or("").to_string(),
        ]);
    }
    Ok(Report {
        json: json!({ "index": spec.to_string(), "n_max": n_max, "results": entries }),
        header: vec!["theorem", "index", "n_max", "minimal_n", "reason"],
        rows,
        text,
    })
}

fn cmd_verify(
    ctx: &Ctx,
    n: usize,
    spec: PhiSpec,
    direction: Option<Extremum>,
    allow_n6: bool,
) -> Result<(Report, bool), Failure> {
    if n == MAX_ENUMERATION_ORDER && !allow_n6 {
        return Err(Failure::Input(format!(
            "n = {n} enumerates {} digraphs; pass --allow-n6 to run it",
            closed_form_count(n)
        )));
    }
    if n < 2 {
        return Err(Error::TooFewVertices(n).into());
    }
    let statements: Vec<_> = catalog_for(n, &spec)
        .into_iter()
        .filter(|s| direction.is_none_or(|d| s.direction.extremum() == d))
        .collect();
    let start = Instant::now();
    let outcomes = verify_all(n, &statements, &ctx.opts)?;
    ctx.log(|| {
        format!(
            "verified {} statements for {spec} at n={n} with {} workers in {:.2?}",
            outcomes.len(),
            ctx.opts.workers,
            start.elapsed()
        )
    });
    let consistent = outcomes.iter().all(|o| o.is_consistent());

    let mut text = String::new();
    let mut rows = Vec::new();
    for o in &outcomes {
        let s = &o.statement;
        text.push_str(&format!(
            "{} {spec} {} {} at n={n}: observed {} ",
            s.id,
            direction_word(s),
            num(s.bound_value),
            num(o.observed_extremal)
        ));
        let mut notes = vec![format!(
            "{} hypothesis {}",
            s.hypothesis,
            if o.hypothesis_holds { "holds" } else { "fails" }
        )];
        notes.push(
            if o.bound_respected {
                "respected"
            } else {
                "violated"
            }
            .into(),
        );
        if o.tight {
            notes.push(format!("tight, {} attainers", o.attaining_count));
        } else {
            notes.push("not attained".into());
        }
        notes.push(format!(
            "equality class {} {}",
            s.equality_class.label(),
            if o.equality_set_matches {
                "matches"
            } else {
                "differs"
            }
        ));
        if !o.is_consistent() {
            notes.push("INCONSISTENT".into());
        }
        text.push_str(&format!("({})\n", notes.join("; ")));
        if !o.counterexamples.is_empty() {
            let shown: Vec<String> = o
                .counterexamples
                .iter()
                .take(8)
                .map(|&m| mask_hex(m))
                .collect();
            let more = o.counterexamples.len().saturating_sub(shown.len());
            text.push_str(&format!("  counterexamples: {}", shown.join(" ")));
            if more > 0 {
                text.push_str(&format!(" (+{more} more)"));
            }
            text.push('\n');
        }
        rows.push(vec![
            s.id.to_string(),
            spec.to_string(),
            n.to_string(),
            format!("{:?}", s.direction).to_lowercase(),
            num(s.bound_value),
            num(o.observed_extremal),
            o.hypothesis_holds.to_string(),
            o.bound_respected.to_string(),
            o.tight.to_string(),
            o.equality_set_matches.to_string(),
            o.attaining_count.to_string(),
            o.is_consistent().to_string(),
            o.counterexamples
                .iter()
                .map(|&m| mask_hex(m))
                .collect::<Vec<_>>()
                .join(" "),
        ]);
    }
    if outcomes.is_empty() {
        text.push_str(&format!("no statements about {spec} at n={n}\n"));
    }
    text.push_str(if consistent {
        "consistent\n"
    } else {
        "inconsistent\n"
    });
    let report = Report {
        json: json!({
            "n": n,
            "index": spec.to_string(),
            "enumerated_count": closed_form_count(n),
            "consistent": consistent,
            "outcomes": outcomes,
        }),
        header: vec![
            "id",
            "index",
            "n",
            "direction",
            "bound",
            "observed",
            "hypothesis_holds",
            "bound_respected",
            "tight",
            "equality_set_matches",
            "attaining_count",
            "consistent",
            "counterexamples",
        ],
        rows,
        text,
    };
    Ok((report, consistent))
}

fn run(cli: Cli) -> Result<(Report, bool), Failure> {
    let ctx = Ctx {
        opts: cli
            .workers
            .map_or_else(SearchOptions::default, SearchOptions::with_workers),
        verbose: cli.verbose,
    };
    let ok = |r: Report| Ok((r, true));
    match cli.command {
        Command::Index { input, index, n } => ok(cmd_index(&input, index, n)?),
        Command::Spectrum { input, n } => ok(cmd_spectrum(&input, n)?),
        Command::Construct { family, n, index } => ok(cmd_construct(family, n, index)?),
        Command::Bounds { n, index, alpha } => ok(cmd_bounds(n, index, alpha)?),
        Command::Hypothesis {
            index,
            theorem,
            n,
            n_max,
        } => ok(cmd_hypothesis(index, &theorem.0, n, n_max)?),
        Command::Verify {
            n,
            index,
            direction,
            allow_n6,
        } => cmd_verify(&ctx, n, index, direction, allow_n6),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok((report, consistent)) => {
            let mut out = io::stdout().lock();
            if let Err(e) = report.emit(format, &mut out).and_then(|_| out.flush()) {
                if e.kind() != io::ErrorKind::BrokenPipe {
                    eprintln!("dvdb: {e}");
                    return ExitCode::from(2);
                }
            }
            if consistent {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            let (Failure::Input(msg) | Failure::Domain(msg)) = &f;
            eprintln!("dvdb: {msg}");
            ExitCode::from(f.code())
        }
    }
}

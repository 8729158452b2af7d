//! Command-line front end. [`run`] parses arguments, runs one command and
//! returns the process exit code: 0 verified, 1 mismatch, 2 usage error.

use std::fmt::Display;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::algebra::{CountingPolynomial, ExactRational};
use crate::identities::{
    exp_formula_check, first_order_identity, graph_hands_brute_force,
    hands_via_first_order_identity, verify, Deck, IdentityError, BRUTE_FORCE_GRAPH_CAP,
};
use crate::samples::{potentials, DEFAULT_SEED};
use crate::simplex::{
    check_thm1, check_thm2, check_thm3, conjecture_scan, dominance, enumerator, CellRelation,
    DominanceCheck, OrderSimplexSpec, ScanConfig, SimplexError, Sparseness,
};
use crate::spectral::{
    family_residue_rows, from_first_order_potential, residues_by_composition,
    residues_second_order, Family, Potential,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Polynomials above this degree are shown as a digest in tables.
const TABLE_DEGREE_CAP: usize = 64;
/// Largest vertex count accepted for whole-graph enumeration.
const GRAPH_ENUMERATION_LIMIT: usize = 7;

#[derive(Parser, Debug)]
#[command(
    name = "compsum",
    version,
    about = "Exact composition sums, spectral residues and order-simplex subset counts"
)]
struct Cli {
    /// Output format (scan defaults to csv, everything else to table).
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check an identity as an exact polynomial or series equality.
    Verify(VerifyArgs),
    /// Residues of a recurrence built from a potential.
    Residues(ResiduesArgs),
    /// Subset enumerators on order simplices.
    #[command(subcommand)]
    Simplex(SimplexCommand),
    /// Coordinate-dominance scan over a grid of simplices.
    Scan(ScanArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum IdentityName {
    Id1,
    Id2,
    Id3,
    FirstOrder,
    ExpFormula,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum DeckName {
    ConnectedGraphs,
    Ones,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    identity: IdentityName,
    /// `n`, or the truncation order for first-order and exp-formula.
    #[arg(long)]
    n: usize,
    /// Seed of the random potentials for first-order.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Number of random potentials for first-order.
    #[arg(long, default_value_t = 5)]
    count: usize,
    #[arg(long, value_enum, default_value_t = DeckName::ConnectedGraphs)]
    deck: DeckName,
    /// Enumerate all labelled graphs up to this many vertices.
    #[arg(long, default_value_t = BRUTE_FORCE_GRAPH_CAP)]
    brute_max: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Model {
    First,
    Second,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Id1,
    Id2,
    Id3,
}

#[derive(Args, Debug)]
struct ResiduesArgs {
    /// Comma-separated potential coefficients `U_1,U_2,…` (integers or p/q).
    #[arg(long, conflicts_with = "family", required_unless_present = "family")]
    u: Option<String>,
    /// A solvable family, compared against its closed form.
    #[arg(long, value_enum)]
    family: Option<FamilyName>,
    /// Number of residues; defaults to the length of `--u`.
    #[arg(long)]
    order: Option<usize>,
    #[arg(long, value_enum, default_value_t = Model::Second)]
    model: Model,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum PredicateName {
    Distinct,
    Sparse,
    TwoSparse,
}

impl From<PredicateName> for Sparseness {
    fn from(p: PredicateName) -> Self {
        match p {
            PredicateName::Distinct => Sparseness::Distinct,
            PredicateName::Sparse => Sparseness::Sparse,
            PredicateName::TwoSparse => Sparseness::TwoSparse,
        }
    }
}

#[derive(Args, Debug)]
struct SimplexArgs {
    #[arg(long = "N", default_value_t = 3)]
    len: usize,
    #[arg(long = "n")]
    bound: usize,
    /// One-based coordinate.
    #[arg(long, default_value_t = 1)]
    d: usize,
    #[arg(long, value_enum, default_value_t = PredicateName::Distinct)]
    predicate: PredicateName,
}

#[derive(Args, Debug)]
struct BoundArg {
    #[arg(long = "n")]
    bound: usize,
}

#[derive(Subcommand, Debug)]
enum SimplexCommand {
    /// Enumerator of subsets whose d-th coordinates satisfy the predicate.
    Count(SimplexArgs),
    /// Coordinate d+1 against coordinate d, degree by degree.
    Compare(SimplexArgs),
    /// Distinct y against distinct x on S^3(n).
    Thm1(BoundArg),
    /// Sparse y equals 2-sparse x, and dominates sparse x, on S^3(n).
    Thm2(BoundArg),
    /// Sparse x_3 against 2-sparse x_1 on S^5(n).
    Thm3(BoundArg),
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long = "N-max")]
    len_max: usize,
    #[arg(long = "n-max")]
    bound_max: usize,
    #[arg(long, value_enum, default_value_t = PredicateName::Distinct)]
    predicate: PredicateName,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    parallelism: usize,
    /// Also scan coordinates with 2d >= N, flagged in an extra column.
    #[arg(long)]
    include_outside: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(e: impl Display) -> Failure {
    Failure::Usage(e.to_string())
}

impl From<IdentityError> for Failure {
    fn from(e: IdentityError) -> Self {
        usage(e)
    }
}

impl From<SimplexError> for Failure {
    fn from(e: SimplexError) -> Self {
        usage(e)
    }
}

#[derive(Clone, Debug)]
enum Cell {
    Int(usize),
    Text(String),
    Bool(bool),
    Rational(ExactRational),
    Poly(CountingPolynomial),
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<ExactRational> for Cell {
    fn from(v: ExactRational) -> Self {
        Cell::Rational(v)
    }
}

impl From<CountingPolynomial> for Cell {
    fn from(v: CountingPolynomial) -> Self {
        Cell::Poly(v)
    }
}

fn coefficient_digest(p: &CountingPolynomial) -> String {
    let canonical = p
        .coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",");
    hex::encode(&Sha256::digest(canonical.as_bytes())[..8])
}

impl Cell {
    fn table(&self) -> String {
        match self {
            Cell::Poly(p) if p.degree().is_some_and(|d| d > TABLE_DEGREE_CAP) => format!(
                "<degree {}, digest {}>",
                p.degree().unwrap_or(0),
                coefficient_digest(p)
            ),
            _ => self.csv(),
        }
    }

    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Rational(r) => r.to_string(),
            Cell::Poly(p) => p.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Text(s) => json!(s),
            Cell::Bool(b) => json!(b),
            Cell::Rational(r) => json!(r.to_string()),
            Cell::Poly(p) => json!({
                "var": p.var().to_string(),
                "coefficients": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            }),
        }
    }
}

/// One command's result: a titled table plus the verdict.
struct Report {
    title: String,
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
    ok: bool,
}

impl Report {
    fn new(title: impl Into<String>, columns: Vec<&'static str>) -> Self {
        Report {
            title: title.into(),
            columns,
            rows: Vec::new(),
            ok: true,
        }
    }

    fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn write(&self, format: OutputFormat, out: &mut impl Write) -> io::Result<()> {
        match format {
            OutputFormat::Table => self.write_table(out),
            OutputFormat::Csv => self.write_csv(out),
            OutputFormat::Json => {
                let doc = json!({
                    "report": self.title,
                    "ok": self.ok,
                    "columns": self.columns,
                    "rows": self.rows
                        .iter()
                        .map(|r| r.iter().map(Cell::json).collect::<Vec<_>>())
                        .collect::<Vec<_>>(),
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)
            }
        }
    }

    fn write_table(&self, out: &mut impl Write) -> io::Result<()> {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(Cell::table).collect())
            .collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|i| {
                cells
                    .iter()
                    .map(|r| r[i].chars().count())
                    .chain([self.columns[i].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        writeln!(out, "{}", self.title)?;
        let line = |fields: Vec<&str>| {
            fields
                .iter()
                .zip(&widths)
                .map(|(f, w)| format!("{f:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        writeln!(out, "{}", line(self.columns.clone()))?;
        for r in &cells {
            writeln!(out, "{}", line(r.iter().map(String::as_str).collect()))?;
        }
        writeln!(out, "{}", if self.ok { "OK" } else { "MISMATCH" })
    }

    fn write_csv(&self, out: &mut impl Write) -> io::Result<()> {
        writeln!(out, "{}", self.columns.join(","))?;
        for r in &self.rows {
            let fields: Vec<String> = r.iter().map(|c| csv_field(&c.csv())).collect();
            writeln!(out, "{}", fields.join(","))?;
        }
        Ok(())
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Runs the command line `args` (including the program name), writing the
/// report to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let default_format = match cli.command {
        Command::Scan(_) => OutputFormat::Csv,
        _ => OutputFormat::Table,
    };
    let format = cli.format.unwrap_or(default_format);
    let result = match &cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Residues(a) => cmd_residues(a),
        Command::Simplex(c) => cmd_simplex(c),
        Command::Scan(a) => cmd_scan(a),
    };
    let outcome = result.and_then(|report| {
        report.write(format, out)?;
        Ok(report.ok)
    });
    match outcome {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_MISMATCH,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_MISMATCH
        }
    }
}

fn family_of(name: IdentityName) -> Option<Family> {
    match name {
        IdentityName::Id1 => Some(Family::Id1),
        IdentityName::Id2 => Some(Family::Id2),
        IdentityName::Id3 => Some(Family::Id3),
        _ => None,
    }
}

fn cmd_verify(a: &VerifyArgs) -> Result<Report, Failure> {
    if a.n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    if let Some(family) = family_of(a.identity) {
        let r = verify(family, a.n)?;
        let mut report = Report::new(
            format!("identity {}", r.name),
            vec!["n", "left", "right", "equal"],
        );
        report.ok = r.equal;
        report.push(vec![
            r.n.into(),
            r.left.into(),
            r.right.into(),
            r.equal.into(),
        ]);
        return Ok(report);
    }
    match a.identity {
        IdentityName::FirstOrder => verify_first_order(a),
        _ => verify_exp_formula(a),
    }
}

fn verify_first_order(a: &VerifyArgs) -> Result<Report, Failure> {
    let mut report = Report::new(
        format!("first-order identity to order {}, seed {}", a.n, a.seed),
        vec!["potential", "U", "equal", "first_mismatch"],
    );
    for (i, u) in potentials(a.seed, a.count, a.n).iter().enumerate() {
        let r = first_order_identity(u, a.n)?;
        report.ok &= r.equal;
        let coeffs = u
            .coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        let mismatch = r
            .first_mismatch
            .map_or_else(|| "-".to_string(), |k| k.to_string());
        report.push(vec![
            (i + 1).into(),
            coeffs.into(),
            r.equal.into(),
            mismatch.into(),
        ]);
    }
    Ok(report)
}

fn verify_exp_formula(a: &VerifyArgs) -> Result<Report, Failure> {
    if a.brute_max > GRAPH_ENUMERATION_LIMIT {
        return Err(usage(format!(
            "--brute-max is limited to {GRAPH_ENUMERATION_LIMIT}"
        )));
    }
    let deck = match a.deck {
        DeckName::ConnectedGraphs => Deck::connected_graphs(a.n),
        DeckName::Ones => Deck::constant(a.n, 1),
    };
    let mut report = Report::new(
        format!(
            "exponential formula, {} deck",
            match a.deck {
                DeckName::ConnectedGraphs => "connected-graphs",
                DeckName::Ones => "ones",
            }
        ),
        vec![
            "n",
            "compositions",
            "series",
            "first_order",
            "brute_force",
            "agree",
        ],
    );
    for r in exp_formula_check(&deck, a.n)? {
        let via_first_order = hands_via_first_order_identity(&deck, r.n)?;
        let mut agree = r.equal && via_first_order == r.right;
        let brute = if a.deck == DeckName::ConnectedGraphs && r.n <= a.brute_max {
            let counts = graph_hands_brute_force(r.n, a.brute_max)?;
            agree &= counts
                .iter()
                .enumerate()
                .all(|(l, c)| r.left.coeff(l + 1) == ExactRational::from_integer(c.clone()));
            counts
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        } else {
            "-".to_string()
        };
        report.ok &= agree;
        report.push(vec![
            r.n.into(),
            r.left.into(),
            r.right.into(),
            via_first_order.into(),
            brute.into(),
            agree.into(),
        ]);
    }
    Ok(report)
}

fn parse_potential(text: &str) -> Result<Vec<ExactRational>, Failure> {
    if text.trim().is_empty() {
        return Err(usage("--u needs at least one coefficient"));
    }
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<ExactRational>()
                .map_err(|_| usage(format!("cannot parse '{}' as a rational", s.trim())))
        })
        .collect()
}

fn cmd_residues(a: &ResiduesArgs) -> Result<Report, Failure> {
    if let Some(name) = a.family {
        let family = match name {
            FamilyName::Id1 => Family::Id1,
            FamilyName::Id2 => Family::Id2,
            FamilyName::Id3 => Family::Id3,
        };
        let order = a.order.unwrap_or(6);
        if order == 0 {
            return Err(usage("--order must be at least 1"));
        }
        let mut report = Report::new(
            format!("residues of family {}", family.name()),
            vec!["n", "residue", "closed_form", "match"],
        );
        for row in family_residue_rows(family, order) {
            report.ok &= row.matches;
            report.push(vec![
                row.n.into(),
                row.residue.into(),
                row.closed_form.into(),
                row.matches.into(),
            ]);
        }
        return Ok(report);
    }
    let coeffs = parse_potential(a.u.as_deref().unwrap_or_default())?;
    let order = a.order.unwrap_or(coeffs.len());
    if order == 0 {
        return Err(usage("--order must be at least 1"));
    }
    let u = Potential::new(coeffs).resized(order);
    let rho = match a.model {
        Model::Second => residues_second_order(&u, order),
        Model::First => {
            residues_by_composition(&from_first_order_potential(&u), order).map_err(usage)?
        }
    };
    let mut report = Report::new(
        format!(
            "residues, {} order model",
            match a.model {
                Model::First => "first",
                Model::Second => "second",
            }
        ),
        vec!["n", "rho"],
    );
    for (i, r) in rho.as_slice().iter().enumerate() {
        report.push(vec![(i + 1).into(), r.clone().into()]);
    }
    Ok(report)
}

fn relation_name(r: CellRelation) -> &'static str {
    match r {
        CellRelation::Greater => ">",
        CellRelation::Equal => "=",
        CellRelation::Less => "<",
        CellRelation::BothZero => "0=0",
    }
}

fn dominance_report(title: String, check: &DominanceCheck) -> Report {
    let mut report = Report::new(
        title,
        vec!["l", "larger", "smaller", "relation", "in_range", "ok"],
    );
    report.ok = check.holds;
    for c in &check.cells {
        report.push(vec![
            c.l.into(),
            c.larger.clone().into(),
            c.smaller.clone().into(),
            relation_name(c.relation).into(),
            c.in_range.into(),
            c.ok.into(),
        ]);
    }
    report
}

fn cmd_simplex(c: &SimplexCommand) -> Result<Report, Failure> {
    match c {
        SimplexCommand::Count(a) => {
            let spec = OrderSimplexSpec::new(a.len, a.bound)?;
            let predicate = Sparseness::from(a.predicate);
            let e = enumerator(&spec, a.d, predicate)?;
            let mut report = Report::new(
                format!(
                    "{} enumerator of S^{}({}), coordinate {}",
                    predicate.name(),
                    a.len,
                    a.bound,
                    a.d
                ),
                vec!["N", "n", "d", "predicate", "enumerator"],
            );
            report.push(vec![
                a.len.into(),
                a.bound.into(),
                a.d.into(),
                predicate.name().into(),
                e.into(),
            ]);
            Ok(report)
        }
        SimplexCommand::Compare(a) => {
            let spec = OrderSimplexSpec::new(a.len, a.bound)?;
            let predicate = Sparseness::from(a.predicate);
            let upper = enumerator(&spec, a.d + 1, predicate)?;
            let lower = enumerator(&spec, a.d, predicate)?;
            let hi = upper.degree().unwrap_or(0).max(lower.degree().unwrap_or(0));
            let mut report = dominance_report(
                format!(
                    "{} enumerators of S^{}({}): coordinate {} against {}",
                    predicate.name(),
                    a.len,
                    a.bound,
                    a.d + 1,
                    a.d
                ),
                &dominance(upper, lower, 2, hi),
            );
            report.ok = true;
            Ok(report)
        }
        SimplexCommand::Thm1(b) => Ok(dominance_report(
            format!("S^3({}): distinct y against distinct x", b.bound),
            &check_thm1(b.bound)?,
        )),
        SimplexCommand::Thm2(b) => {
            let v = check_thm2(b.bound)?;
            let mut report = dominance_report(
                format!(
                    "S^3({}): sparse y against sparse x; sparse y = 2-sparse x: {}",
                    b.bound, v.equal
                ),
                &v.dominance,
            );
            report.ok = v.holds();
            Ok(report)
        }
        SimplexCommand::Thm3(b) => Ok(dominance_report(
            format!("S^5({}): sparse x_3 against 2-sparse x_1", b.bound),
            &check_thm3(b.bound)?,
        )),
    }
}

fn cmd_scan(a: &ScanArgs) -> Result<Report, Failure> {
    let config = ScanConfig {
        len_max: a.len_max,
        bound_max: a.bound_max,
        predicate: a.predicate.into(),
        parallelism: a.parallelism,
        include_outside: a.include_outside,
    };
    let rows = conjecture_scan(&config)?;
    let mut columns = vec!["N", "d", "n", "L", "coefficients-digest"];
    if a.include_outside {
        columns.push("outside");
    }
    let mut report = Report::new(
        format!(
            "{} scan, N <= {}, n <= {}",
            config.predicate.name(),
            a.len_max,
            a.bound_max
        ),
        columns,
    );
    for r in rows {
        let mut row: Vec<Cell> = vec![
            r.len.into(),
            r.d.into(),
            r.bound.into(),
            r.prefix.into(),
            r.digest().into(),
        ];
        if a.include_outside {
            row.push(r.outside.into());
        }
        report.push(row);
    }
    Ok(report)
}

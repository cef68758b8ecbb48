//! The `padic-solve` command line: argument parsing, record formatting and
//! the subcommand drivers. `run` never exits the process, so tests can
//! drive it with in-memory writers.

use std::ffi::OsString;
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::counting::{count_solutions, enumerate, is_wieferich_base, ProblemInstance};
use crate::error::Error;
use crate::oracle::{brute_force_partitioned, DEFAULT_SCAN_CEILING};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

pub const CEILING_ENV: &str = "PADIC_SOLVE_CEILING";
/// Cap on the number of instances a range product may expand to.
pub const MAX_INSTANCES: u64 = 100_000;

/// A single value `7` or an inclusive range `1..6` (also `1..=6`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntRange {
    pub lo: u64,
    pub hi: u64,
}

impl IntRange {
    pub fn single(v: u64) -> Self {
        Self { lo: v, hi: v }
    }

    pub fn is_single(&self) -> bool {
        self.lo == self.hi
    }

    /// Number of values covered; a range is never empty.
    pub fn count(&self) -> u64 {
        self.hi - self.lo + 1
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<u64> {
        self.lo..=self.hi
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("'{t}' is not a nonnegative integer"))
        };
        match s.split_once("..") {
            None => parse(s).map(Self::single),
            Some((lo, hi)) => {
                let (lo, hi) = (parse(lo)?, parse(hi.strip_prefix('=').unwrap_or(hi))?);
                if lo > hi {
                    return Err(format!("empty range {s}"));
                }
                Ok(Self { lo, hi })
            }
        }
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_single() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Formula,
    Lift,
    Oracle,
}

impl Method {
    fn as_str(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Lift => "lift",
            Method::Oracle => "oracle",
        }
    }
}

/// One result line. Fields serialize in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub g: u64,
    pub n: u64,
    pub k: u64,
    pub p: u64,
    pub e: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    pub method: Method,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solutions: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wieferich: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exploratory: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unsupported_reason: Option<String>,
}

impl OutputRecord {
    fn blank(g: u64, n: u64, k: u64, p: u64, e: u32, method: Method) -> Self {
        Self {
            g,
            n,
            k,
            p,
            e,
            m: None,
            method,
            count: None,
            solutions: None,
            wieferich: None,
            agreement: None,
            exploratory: None,
            unsupported_reason: None,
        }
    }

    fn for_instance(inst: &ProblemInstance, method: Method) -> Self {
        Self {
            m: Some(inst.m()),
            ..Self::blank(inst.g(), inst.n(), inst.k(), inst.p(), inst.e(), method)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WieferichRecord {
    pub p: u64,
    pub g: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wieferich: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unsupported_reason: Option<String>,
}

const CSV_HEADER: &str =
    "g,n,k,p,e,m,method,count,wieferich,agreement,exploratory,unsupported_reason,solutions";

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

fn join(xs: &[u64], sep: &str) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(sep)
}

fn csv_line(r: &OutputRecord) -> String {
    let reason = opt(&r.unsupported_reason).replace(',', ";");
    let sols = r
        .solutions
        .as_deref()
        .map(|s| join(s, " "))
        .unwrap_or_default();
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{}",
        r.g,
        r.n,
        r.k,
        r.p,
        r.e,
        opt(&r.m),
        r.method.as_str(),
        opt(&r.count),
        opt(&r.wieferich),
        opt(&r.agreement),
        opt(&r.exploratory),
        reason,
        sols
    )
}

fn text_line(r: &OutputRecord) -> String {
    let mut s = format!("g={} n={} k={} p={} e={}", r.g, r.n, r.k, r.p, r.e);
    if let Some(m) = r.m {
        s += &format!(" m={m}");
    }
    s += &format!(" method={}", r.method.as_str());
    if let Some(c) = r.count {
        s += &format!(" count={c}");
    }
    if let Some(w) = r.wieferich {
        s += &format!(" wieferich={w}");
    }
    if let Some(a) = r.agreement {
        s += &format!(" agreement={a}");
    }
    if r.exploratory == Some(true) {
        s += " exploratory";
    }
    if let Some(reason) = &r.unsupported_reason {
        s += &format!(" unsupported: {reason}");
    }
    if let Some(sols) = &r.solutions {
        s += &format!(" solutions=[{}]", join(sols, ", "));
    }
    s
}

struct RecordWriter<'a> {
    out: &'a mut dyn Write,
    format: Format,
    wrote_header: bool,
}

impl<'a> RecordWriter<'a> {
    fn new(out: &'a mut dyn Write, format: Format) -> Self {
        Self {
            out,
            format,
            wrote_header: false,
        }
    }

    fn write(&mut self, r: &OutputRecord) -> io::Result<()> {
        match self.format {
            Format::Json => writeln!(self.out, "{}", serde_json::to_string(r)?),
            Format::Text => writeln!(self.out, "{}", text_line(r)),
            Format::Csv => {
                if !self.wrote_header {
                    writeln!(self.out, "{CSV_HEADER}")?;
                    self.wrote_header = true;
                }
                writeln!(self.out, "{}", csv_line(r))
            }
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "padic-solve",
    version,
    about = "Count and enumerate solutions of g^(x^n) = x^k (mod p^e)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form solution counts over a grid of instances.
    Count(CountArgs),
    /// List all solutions in [0, m*p^e) by lifting.
    Enumerate(EnumerateArgs),
    /// List all solutions by exhaustive scan.
    Oracle(OracleArgs),
    /// Reproduce one of the reference tables (1: p = 7, 2: p = k = 11).
    Table(TableArgs),
    /// Test g^(p-1) = 1 (mod p^2) over a range of bases.
    Wieferich(WieferichArgs),
}

#[derive(Debug, Args)]
pub struct InstanceArgs {
    #[arg(long)]
    pub p: IntRange,
    #[arg(long, default_value = "1")]
    pub e: IntRange,
    #[arg(long)]
    pub g: IntRange,
    #[arg(long, default_value = "1")]
    pub n: IntRange,
    #[arg(long)]
    pub k: IntRange,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Largest window m*p^e the exhaustive scan may visit.
    #[arg(long)]
    pub ceiling: Option<u64>,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    /// Also scan exhaustively and report agreement.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    /// Also run the exhaustive scan and compare solution sets.
    #[arg(long)]
    pub check: bool,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    /// Also run the lifting enumeration and compare solution sets.
    #[arg(long)]
    pub check: bool,
    /// Allow instances outside the supported counting cases.
    #[arg(long)]
    pub exploratory: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
    pub table: u8,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Check every cell against enumeration and the exhaustive scan.
    #[arg(long)]
    pub verify: bool,
    /// Exponent n (table 1).
    #[arg(long, default_value_t = 1)]
    pub n: u64,
    /// Precision e (table 1).
    #[arg(long, default_value_t = 1)]
    pub e: u32,
    /// Largest precision column (table 2).
    #[arg(long, default_value_t = 4)]
    pub e_max: u32,
    #[arg(long)]
    pub ceiling: Option<u64>,
}

#[derive(Debug, Args)]
pub struct WieferichArgs {
    #[arg(long)]
    pub p: u64,
    /// Bases to test; defaults to 1..p-1.
    #[arg(long)]
    pub g: Option<IntRange>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

/// Flag first, then `PADIC_SOLVE_CEILING`, then the default.
pub fn resolve_ceiling(flag: Option<u64>, env: Option<&str>) -> Result<u64, String> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match env {
        Some(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{CEILING_ENV}='{v}' is not an integer")),
        None => Ok(DEFAULT_SCAN_CEILING),
    }
}

/// Failure of a subcommand, carrying its exit code.
struct Exit {
    code: i32,
    message: String,
}

impl Exit {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<io::Error> for Exit {
    fn from(e: io::Error) -> Self {
        Self {
            code: EXIT_IO,
            message: e.to_string(),
        }
    }
}

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceLimit { .. } => EXIT_RESOURCE,
            Error::Consistency(_) => EXIT_MISMATCH,
            Error::Unsupported(_) | Error::Domain(_) | Error::Hypothesis(_) => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<i32, Exit>;

fn ceiling_from(flag: Option<u64>) -> Result<u64, Exit> {
    let env = std::env::var(CEILING_ENV).ok();
    resolve_ceiling(flag, env.as_deref()).map_err(Exit::usage)
}

fn scan_parts() -> u64 {
    4 * rayon::current_num_threads() as u64
}

fn single_instance(a: &InstanceArgs) -> Result<ProblemInstance, Exit> {
    for (name, r) in [("p", a.p), ("e", a.e), ("g", a.g), ("n", a.n), ("k", a.k)] {
        if !r.is_single() {
            return Err(Exit::usage(format!(
                "--{name} takes a single value here, got {r}"
            )));
        }
    }
    let e = u32::try_from(a.e.lo).map_err(|_| Exit::usage("e out of range"))?;
    Ok(ProblemInstance::new(a.g.lo, a.n.lo, a.k.lo, a.p.lo, e)?)
}

fn cmd_count(args: &CountArgs, out: &mut dyn Write) -> CmdResult {
    let a = &args.instance;
    let ceiling = ceiling_from(a.ceiling)?;
    let total = [a.p, a.e, a.g, a.n, a.k]
        .iter()
        .try_fold(1u64, |acc, r| acc.checked_mul(r.count()))
        .unwrap_or(u64::MAX);
    if total > MAX_INSTANCES {
        return Err(Exit::usage(format!(
            "{total} instances requested; the limit is {MAX_INSTANCES}"
        )));
    }
    let mut writer = RecordWriter::new(out, a.format);
    let mut mismatch = false;
    for p in a.p.iter() {
        for e in a.e.iter() {
            let e = u32::try_from(e).map_err(|_| Exit::usage("e out of range"))?;
            for g in a.g.iter() {
                for n in a.n.iter() {
                    for k in a.k.iter() {
                        let record = count_record(g, n, k, p, e, args.verify, ceiling)?;
                        mismatch |= record.agreement == Some(false);
                        writer.write(&record)?;
                    }
                }
            }
        }
    }
    Ok(if mismatch { EXIT_MISMATCH } else { EXIT_OK })
}

fn count_record(
    g: u64,
    n: u64,
    k: u64,
    p: u64,
    e: u32,
    verify: bool,
    ceiling: u64,
) -> Result<OutputRecord, Exit> {
    let inst = match ProblemInstance::new(g, n, k, p, e) {
        Ok(i) => i,
        Err(Error::ResourceLimit { .. }) if !verify => {
            let mut r = OutputRecord::blank(g, n, k, p, e, Method::Formula);
            r.unsupported_reason = Some("window m*p^e exceeds 2^62".into());
            return Ok(r);
        }
        Err(err @ Error::Domain(_)) => {
            let mut r = OutputRecord::blank(g, n, k, p, e, Method::Formula);
            r.unsupported_reason = Some(err.to_string());
            return Ok(r);
        }
        Err(err) => return Err(err.into()),
    };
    let mut record = OutputRecord::for_instance(&inst, Method::Formula);
    match count_solutions(&inst) {
        Ok(report) => {
            record.count = Some(report.total);
            record.wieferich = report.wieferich;
            if verify {
                let scan = brute_force_partitioned(&inst, ceiling, scan_parts())?;
                record.agreement = Some(scan.solutions.len() as u64 == report.total);
            }
        }
        Err(Error::Unsupported(case)) => record.unsupported_reason = Some(case.reason().into()),
        Err(err) => return Err(err.into()),
    }
    Ok(record)
}

fn cmd_enumerate(args: &EnumerateArgs, out: &mut dyn Write) -> CmdResult {
    let a = &args.instance;
    let ceiling = ceiling_from(a.ceiling)?;
    let inst = single_instance(a)?;
    if let Err(case) = inst.case() {
        return Err(Exit::usage(format!(
            "{case}; run `oracle --exploratory` to scan it instead"
        )));
    }
    let set = enumerate(&inst)?;
    let mut record = OutputRecord::for_instance(&inst, Method::Lift);
    record.count = Some(set.len() as u64);
    record.wieferich = count_solutions(&inst)?.wieferich;
    if args.check {
        let scan = brute_force_partitioned(&inst, ceiling, scan_parts())?;
        record.agreement = Some(scan.solutions == set.solutions);
    }
    let mismatch = record.agreement == Some(false);
    record.solutions = Some(set.solutions);
    RecordWriter::new(out, a.format).write(&record)?;
    Ok(if mismatch { EXIT_MISMATCH } else { EXIT_OK })
}

fn cmd_oracle(args: &OracleArgs, out: &mut dyn Write) -> CmdResult {
    let a = &args.instance;
    let ceiling = ceiling_from(a.ceiling)?;
    let inst = single_instance(a)?;
    let supported = inst.case().is_ok();
    if !supported && !args.exploratory {
        let case = inst.case().unwrap_err();
        return Err(Exit::usage(format!(
            "{case}; pass --exploratory to scan anyway"
        )));
    }
    let scan = brute_force_partitioned(&inst, ceiling, scan_parts())?;
    let mut record = OutputRecord::for_instance(&inst, Method::Oracle);
    record.count = Some(scan.solutions.len() as u64);
    if !supported {
        record.exploratory = Some(true);
        record.unsupported_reason = inst.case().err().map(|c| c.reason().to_string());
    }
    if args.check && supported {
        let set = enumerate(&inst)?;
        record.agreement = Some(set.solutions == scan.solutions);
    }
    let mismatch = record.agreement == Some(false);
    record.solutions = Some(scan.solutions);
    RecordWriter::new(out, a.format).write(&record)?;
    Ok(if mismatch { EXIT_MISMATCH } else { EXIT_OK })
}

/// One grid cell with optional cross-checks.
struct Cell {
    record: OutputRecord,
    enumerated: Option<u64>,
    scanned: Option<u64>,
}

fn table_cell(
    g: u64,
    n: u64,
    k: u64,
    p: u64,
    e: u32,
    verify: bool,
    ceiling: u64,
) -> Result<Cell, Exit> {
    let inst = ProblemInstance::new(g, n, k, p, e)?;
    let report = count_solutions(&inst)?;
    let mut record = OutputRecord::for_instance(&inst, Method::Formula);
    record.count = Some(report.total);
    record.wieferich = report.wieferich;
    let (mut enumerated, mut scanned) = (None, None);
    if verify {
        let listed = enumerate(&inst)?;
        let scan = brute_force_partitioned(&inst, ceiling, scan_parts())?;
        record.agreement =
            Some(listed.len() as u64 == report.total && listed.solutions == scan.solutions);
        enumerated = Some(listed.len() as u64);
        scanned = Some(scan.solutions.len() as u64);
    }
    Ok(Cell {
        record,
        enumerated,
        scanned,
    })
}

fn cmd_table(args: &TableArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let ceiling = ceiling_from(args.ceiling)?;
    // columns are (n, k, e) triples
    type Layout = (u64, Vec<u64>, &'static str, Vec<(u64, u64, u32)>);
    let (p, rows, label, columns): Layout = match args.table {
        1 => {
            if args.n == 0 || args.e == 0 {
                return Err(Exit::usage("n and e must be positive"));
            }
            (
                7,
                (1..=6).collect(),
                "k",
                (1..=4).map(|k| (args.n, k, args.e)).collect(),
            )
        }
        _ => {
            if args.e_max == 0 {
                return Err(Exit::usage("--e-max must be positive"));
            }
            (
                11,
                (1..=10).collect(),
                "e",
                (1..=args.e_max).map(|e| (1, 11, e)).collect(),
            )
        }
    };
    let mut grid = Vec::with_capacity(rows.len());
    for &g in &rows {
        let mut cells = Vec::with_capacity(columns.len());
        for &(n, k, e) in &columns {
            let cell = table_cell(g, n, k, p, e, args.verify, ceiling)?;
            if cell.record.agreement == Some(false) {
                let col = if args.table == 1 { k } else { e as u64 };
                writeln!(
                    err,
                    "table {} cell g={g} {label}={col}: formula {}, enumeration {}, oracle {}",
                    args.table,
                    opt(&cell.record.count),
                    opt(&cell.enumerated),
                    opt(&cell.scanned)
                )?;
                return Ok(EXIT_MISMATCH);
            }
            cells.push(cell);
        }
        grid.push((g, cells));
    }

    match args.format {
        Format::Json => {
            let mut w = RecordWriter::new(out, Format::Json);
            for (_, cells) in &grid {
                for c in cells {
                    w.write(&c.record)?;
                }
            }
        }
        Format::Csv => {
            let heads: Vec<String> = columns
                .iter()
                .map(|&(_, k, e)| match args.table {
                    1 => format!("k={k}"),
                    _ => format!("e={e}"),
                })
                .collect();
            writeln!(out, "g,m,{}", heads.join(","))?;
            for (g, cells) in &grid {
                let counts: Vec<String> = cells.iter().map(|c| opt(&c.record.count)).collect();
                writeln!(out, "{g},{},{}", opt(&cells[0].record.m), counts.join(","))?;
            }
        }
        Format::Text => {
            let caption = match args.table {
                1 => format!(
                    "g^(x^{}) = x^k (mod 7^{}), 0 <= x < m*7^{}",
                    args.n, args.e, args.e
                ),
                _ => "g^x = x^11 (mod 11^e), 0 <= x < m*11^e".to_string(),
            };
            writeln!(out, "{caption}")?;
            write!(out, "{:>4} {:>4} |", "g", "m")?;
            for &(_, k, e) in &columns {
                let head = if args.table == 1 {
                    format!("k={k}")
                } else {
                    format!("e={e}")
                };
                write!(out, " {head:>6}")?;
            }
            writeln!(out)?;
            for (g, cells) in &grid {
                write!(out, "{g:>4} {:>4} |", opt(&cells[0].record.m))?;
                for c in cells {
                    write!(out, " {:>6}", opt(&c.record.count))?;
                }
                writeln!(out)?;
            }
            if args.verify {
                writeln!(
                    out,
                    "verified: formula, enumeration and exhaustive scan agree on every cell"
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_wieferich(args: &WieferichArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let p = args.p;
    if p == 2 || !crate::modmath::is_prime(p) {
        return Err(Exit::usage(format!("--p must be an odd prime, got {p}")));
    }
    let range = args.g.unwrap_or(IntRange { lo: 1, hi: p - 1 });
    if range.count() > MAX_INSTANCES {
        return Err(Exit::usage(format!(
            "at most {MAX_INSTANCES} bases per run"
        )));
    }
    let mut bases = Vec::new();
    let mut csv_header = false;
    for g in range.iter() {
        let record = match is_wieferich_base(g, p) {
            Ok(w) => {
                if w {
                    bases.push(g);
                }
                WieferichRecord {
                    p,
                    g,
                    wieferich: Some(w),
                    unsupported_reason: None,
                }
            }
            Err(e) => WieferichRecord {
                p,
                g,
                wieferich: None,
                unsupported_reason: Some(e.to_string()),
            },
        };
        match args.format {
            Format::Json => writeln!(
                out,
                "{}",
                serde_json::to_string(&record).map_err(io::Error::from)?
            )?,
            Format::Csv => {
                if !csv_header {
                    writeln!(out, "p,g,wieferich")?;
                    csv_header = true;
                }
                writeln!(out, "{p},{g},{}", opt(&record.wieferich))?;
            }
            Format::Text => match record.wieferich {
                Some(w) => writeln!(out, "p={p} g={g} wieferich={w}")?,
                None => writeln!(out, "p={p} g={g} skipped: divisible by p")?,
            },
        }
    }
    let summary = format!(
        "{} Wieferich base(s) modulo {p} in {range}: [{}]",
        bases.len(),
        join(&bases, ", ")
    );
    if args.format == Format::Text {
        writeln!(out, "{summary}")?;
    } else {
        writeln!(err, "{summary}")?;
    }
    Ok(EXIT_OK)
}

/// Runs the CLI on `argv` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Count(a) => cmd_count(a, out),
        Command::Enumerate(a) => cmd_enumerate(a, out),
        Command::Oracle(a) => cmd_oracle(a, out),
        Command::Table(a) => cmd_table(a, out, err),
        Command::Wieferich(a) => cmd_wieferich(a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(exit) => {
            let _ = writeln!(err, "padic-solve: {}", exit.message);
            exit.code
        }
    }
}

//! Command-line frontend for `ascseq`.
//!
//! Exit codes: 0 success, 1 verification failure or internal error,
//! 2 usage error (bad flags, unparsable input, cap exceeded).

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use ascseq::dyck::DyckPath;
use ascseq::seqcore::{descent_statistics, zero_statistics, DEFAULT_ENUM_CAP};
use ascseq::series::{expand_f_closed, expand_g};
use ascseq::verify::{self, CheckReport, Status, VerifyConfig};
use ascseq::{
    phi, phi_inverse, psi, psi_inverse, tau, tau_inverse, Constraint, CountTable, Enumerator,
    Error, Family, IntSequence, SetPartition, TauMode, TruncSeries,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;

pub const CAP_ENV: &str = "ASCSEQ_ENUM_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "ascseq", version, about = "Ascent, repetition and descent sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the members of a family in lexicographic order.
    Enumerate(EnumerateArgs),
    /// Apply phi, psi or tau (or an inverse) to one input or to stdin lines.
    Map(MapArgs),
    /// Count members of a family for a range of lengths.
    Count(CountArgs),
    /// Expand a generating function.
    Series(SeriesArgs),
    /// Run registered cross-checks.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Lines,
    Json,
    Bfile,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Ascent,
    Repetition,
    Descent,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Ascent => Family::Ascent,
            FamilyArg::Repetition => Family::Repetition,
            FamilyArg::Descent => Family::Descent,
        }
    }
}

#[derive(Args, Debug, Clone, Copy)]
struct ConstraintArgs {
    /// Keep only 021-avoiding sequences.
    #[arg(long)]
    avoid_021: bool,
    /// Drop sequences with two consecutive zeros.
    #[arg(long)]
    no_double_zero: bool,
    /// Drop sequences with a zero run of length exactly 1.
    #[arg(long)]
    no_isolated_zero: bool,
}

impl From<ConstraintArgs> for Constraint {
    fn from(c: ConstraintArgs) -> Constraint {
        Constraint {
            avoid_021: c.avoid_021,
            forbid_double_zero: c.no_double_zero,
            forbid_isolated_zero: c.no_isolated_zero,
        }
    }
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    length: usize,
    #[command(flatten)]
    constraint: ConstraintArgs,
    #[arg(long, value_enum, default_value = "lines")]
    format: Format,
    /// Enumerate in parallel; output order is unchanged.
    #[arg(long)]
    parallel: bool,
    /// Largest length allowed for exhaustive enumeration.
    #[arg(long, env = CAP_ENV, default_value_t = DEFAULT_ENUM_CAP)]
    cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Bijection {
    Phi,
    Psi,
    Tau,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Recursive,
    Algorithmic,
}

#[derive(Args, Debug)]
struct MapArgs {
    #[arg(long, value_enum)]
    bijection: Bijection,
    #[arg(long)]
    inverse: bool,
    /// Input text; without it, each line of stdin is mapped.
    #[arg(long)]
    input: Option<String>,
    /// Construction used by tau.
    #[arg(long, value_enum, default_value = "recursive")]
    mode: ModeArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Statistic {
    Descents,
    ZeroRuns,
    Zeros,
}

#[derive(Args, Debug)]
struct CountArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[command(flatten)]
    constraint: ConstraintArgs,
    #[arg(long, default_value_t = 0)]
    min_n: usize,
    #[arg(long)]
    max_n: usize,
    /// Refine each count by a statistic.
    #[arg(long, value_enum)]
    by: Option<Statistic>,
    #[arg(long, value_enum, default_value = "lines")]
    format: Format,
    #[arg(long, env = CAP_ENV, default_value_t = DEFAULT_ENUM_CAP)]
    cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GfArg {
    #[value(name = "F")]
    F,
    #[value(name = "G")]
    G,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[arg(long, value_enum)]
    gf: GfArg,
    #[arg(long)]
    order: u32,
    /// Substitutions such as `y=1,z=0,w=1`.
    #[arg(long)]
    set: Option<String>,
    #[arg(long, value_enum, default_value = "lines")]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Run every registered check.
    #[arg(long, conflicts_with = "check")]
    all: bool,
    /// Run the named check; may be repeated.
    #[arg(long)]
    check: Vec<String>,
    /// Depth for every selected check.
    #[arg(long)]
    max_n: Option<u32>,
    /// Per-check depth as `name=N`; may be repeated.
    #[arg(long)]
    depth: Vec<String>,
    #[arg(long, value_enum, default_value = "lines")]
    format: Format,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Internal(_) => EXIT_FAILURE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_FAILURE,
            message: e.to_string(),
        }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    let result = match cli.command {
        Command::Enumerate(a) => cmd_enumerate(&a, out),
        Command::Map(a) => cmd_map(&a, input, out),
        Command::Count(a) => cmd_count(&a, out),
        Command::Series(a) => cmd_series(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Bare digits when every entry is a single digit, commas otherwise.
pub fn render_sequence(seq: &IntSequence) -> String {
    if !seq.is_empty() && seq.max_entry() <= 9 {
        seq.to_compact()
    } else {
        seq.to_string()
    }
}

fn render_listing(seqs: &[IntSequence]) -> Vec<String> {
    let compact = seqs.iter().all(|s| s.max_entry() <= 9);
    seqs.iter()
        .map(|s| {
            if compact && !s.is_empty() {
                s.to_compact()
            } else {
                s.to_string()
            }
        })
        .collect()
}

fn constraint_json(c: Constraint) -> serde_json::Value {
    json!({
        "avoid_021": c.avoid_021,
        "no_double_zero": c.forbid_double_zero,
        "no_isolated_zero": c.forbid_isolated_zero,
    })
}

fn cmd_enumerate(a: &EnumerateArgs, out: &mut dyn Write) -> CmdResult {
    if a.format == Format::Bfile {
        return Err(Failure::usage(
            "enumerate lists sequences; --format bfile is only for integer sequences (use count)",
        ));
    }
    let family = Family::from(a.family);
    let constraint = Constraint::from(a.constraint);
    let enumerator = Enumerator::with_cap(a.cap);
    let seqs = if a.parallel {
        enumerator.enumerate_parallel(family, a.length, constraint)?
    } else {
        enumerator.enumerate(family, a.length, constraint)?
    };
    match a.format {
        Format::Json => {
            let doc = json!({
                "family": family.name(),
                "length": a.length,
                "constraint": constraint_json(constraint),
                "count": seqs.len(),
                "sequences": seqs.iter().map(|s| s.entries()).collect::<Vec<_>>(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
        }
        _ => {
            for line in render_listing(&seqs) {
                writeln!(out, "{line}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn map_one(a: &MapArgs, text: &str) -> std::result::Result<String, Error> {
    let mode = match a.mode {
        ModeArg::Recursive => TauMode::Recursive,
        ModeArg::Algorithmic => TauMode::Algorithmic,
    };
    Ok(match (a.bijection, a.inverse) {
        (Bijection::Phi, false) => phi(&text.parse()?)?.to_string(),
        (Bijection::Phi, true) => render_sequence(&phi_inverse(&text.parse::<SetPartition>()?)?),
        (Bijection::Psi, false) => psi(&text.parse()?)?.to_string(),
        (Bijection::Psi, true) => render_sequence(&psi_inverse(&text.parse::<DyckPath>()?)?),
        (Bijection::Tau, false) => tau(&text.parse()?, mode)?.to_string(),
        (Bijection::Tau, true) => render_sequence(&tau_inverse(&text.parse::<DyckPath>()?)?),
    })
}

fn cmd_map(a: &MapArgs, input: &mut dyn BufRead, out: &mut dyn Write) -> CmdResult {
    if let Some(text) = &a.input {
        writeln!(out, "{}", map_one(a, text.trim())?)?;
        return Ok(EXIT_OK);
    }
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        let mapped = map_one(a, text).map_err(|e| Failure {
            message: format!("line {}: {e}", i + 1),
            ..Failure::from(e)
        })?;
        writeln!(out, "{mapped}")?;
    }
    Ok(EXIT_OK)
}

fn statistic_name(stat: Statistic) -> String {
    stat.to_possible_value().expect("not skipped").get_name().to_string()
}

fn statistic_of(stat: Statistic, seq: &[u32]) -> u32 {
    (match stat {
        Statistic::Descents => descent_statistics(seq).descent_count,
        Statistic::ZeroRuns => zero_statistics(seq).run_lengths.len(),
        Statistic::Zeros => zero_statistics(seq).total_zeros,
    }) as u32
}

fn cmd_count(a: &CountArgs, out: &mut dyn Write) -> CmdResult {
    if a.min_n > a.max_n {
        return Err(Failure::usage(format!(
            "--min-n {} exceeds --max-n {}",
            a.min_n, a.max_n
        )));
    }
    if a.format == Format::Bfile && a.by.is_some() {
        return Err(Failure::usage("--format bfile needs a single count per n; drop --by"));
    }
    let family = Family::from(a.family);
    let constraint = Constraint::from(a.constraint);
    let enumerator = Enumerator::with_cap(a.cap);
    let label = match a.by {
        None => format!("{family}"),
        Some(stat) => format!("{family} by {}", statistic_name(stat)),
    };
    let mut table = CountTable::new(label);
    for n in a.min_n..=a.max_n {
        match a.by {
            None => {
                let c = enumerator.count(family, n, constraint)?;
                table.insert(n as u32, BigUint::from(c));
            }
            Some(stat) => {
                let mut row: BTreeMap<u32, u64> = (0..=n as u32).map(|k| (k, 0)).collect();
                enumerator.visit(family, n, constraint, |s| {
                    *row.entry(statistic_of(stat, s)).or_default() += 1;
                })?;
                for (k, c) in row {
                    table.insert2(n as u32, k, BigUint::from(c));
                }
            }
        }
    }
    match a.format {
        Format::Json => {
            let doc = json!({
                "family": family.name(),
                "constraint": constraint_json(constraint),
                "statistic": a.by.map(statistic_name),
                "table": table,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
        }
        Format::Bfile => {
            for (n, v) in table.series() {
                writeln!(out, "{n} {v}")?;
            }
        }
        Format::Lines => match a.by {
            None => {
                let values: Vec<String> =
                    table.series().into_iter().map(|(_, v)| v.to_string()).collect();
                writeln!(out, "{}", values.join(","))?;
            }
            Some(_) => {
                for n in a.min_n..=a.max_n {
                    let row: Vec<String> = table
                        .row(n as u32)
                        .into_iter()
                        .map(|(_, v)| v.to_string())
                        .collect();
                    writeln!(out, "{n}: {}", row.join(","))?;
                }
            }
        },
    }
    Ok(EXIT_OK)
}

/// Parses `y=1,z=0` into substitutions for `(y, z, w)`.
fn parse_assignments(text: &str, allowed: &[char]) -> std::result::Result<[Option<i64>; 3], Failure> {
    let mut values = [None; 3];
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (var, value) = part
            .split_once('=')
            .ok_or_else(|| Failure::usage(format!("expected var=value, got {part:?}")))?;
        let var = var.trim();
        let slot = match var {
            "y" => 0,
            "z" => 1,
            "w" => 2,
            _ => return Err(Failure::usage(format!("unknown variable {var:?}"))),
        };
        if !allowed.contains(&var.chars().next().unwrap()) {
            return Err(Failure::usage(format!("variable {var} does not occur in this series")));
        }
        let value: i64 = value
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("{var} must be set to an integer, got {value:?}")))?;
        values[slot] = Some(value);
    }
    Ok(values)
}

fn cmd_series(a: &SeriesArgs, out: &mut dyn Write) -> CmdResult {
    let (name, allowed): (&str, &[char]) = match a.gf {
        GfArg::F => ("F", &['y', 'z', 'w']),
        GfArg::G => ("G", &['y']),
    };
    let values = match &a.set {
        Some(text) => parse_assignments(text, allowed)?,
        None => [None; 3],
    };
    let series: TruncSeries = match a.gf {
        GfArg::F => expand_f_closed(a.order)?,
        GfArg::G => expand_g(a.order, true)?,
    }
    .specialize(values);
    match a.format {
        Format::Lines => write!(out, "{series}")?,
        Format::Json => {
            let set: BTreeMap<&str, i64> = ["y", "z", "w"]
                .into_iter()
                .zip(values)
                .filter_map(|(k, v)| v.map(|v| (k, v)))
                .collect();
            let mut doc = series.to_json();
            doc["gf"] = json!(name);
            doc["set"] = json!(set);
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
        }
        Format::Bfile => {
            let coefficients = series.integer_x_coefficients().ok_or_else(|| {
                Failure::usage("--format bfile needs a series in x alone; set the other variables")
            })?;
            for (n, c) in coefficients.iter().enumerate() {
                writeln!(out, "{n} {c}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn parse_depth(text: &str) -> std::result::Result<(String, u32), Failure> {
    let (name, n) = text
        .split_once('=')
        .ok_or_else(|| Failure::usage(format!("expected name=N, got {text:?}")))?;
    let n = n
        .trim()
        .parse()
        .map_err(|_| Failure::usage(format!("depth for {name} must be a nonnegative integer")))?;
    Ok((name.trim().to_string(), n))
}

fn status_word(status: Status) -> &'static str {
    match status {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Skipped => "skipped",
        Status::NotApplicable => "n/a",
    }
}

fn write_report_lines(reports: &[CheckReport], out: &mut dyn Write) -> std::io::Result<()> {
    let width = reports.iter().map(|r| r.check_name.len()).max().unwrap_or(0);
    for r in reports {
        writeln!(
            out,
            "{}  {:width$}  n<={:<3} {} pass, {} fail, {} skipped, {} n/a  ({} ms)",
            if r.passed { "PASS" } else { "FAIL" },
            r.check_name,
            r.max_n,
            r.count(Status::Pass),
            r.count(Status::Fail),
            r.count(Status::Skipped),
            r.count(Status::NotApplicable),
            r.elapsed_ms,
        )?;
        for o in r.outcomes.iter().filter(|o| o.status == Status::Fail) {
            writeln!(
                out,
                "      n={} {}: expected {} got {}",
                o.n,
                status_word(o.status),
                o.expected,
                o.actual
            )?;
        }
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    writeln!(out, "{passed}/{} checks passed", reports.len())
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    if a.format == Format::Bfile {
        return Err(Failure::usage("verify reports support --format lines or json"));
    }
    if !a.all && a.check.is_empty() {
        return Err(Failure::usage("give --all or at least one --check NAME"));
    }
    let names: Vec<String> = if a.all {
        verify::check_names().into_iter().map(String::from).collect()
    } else {
        a.check.clone()
    };
    let mut depths = BTreeMap::new();
    if let Some(n) = a.max_n {
        for name in &names {
            depths.insert(name.clone(), n);
        }
    }
    for d in &a.depth {
        let (name, n) = parse_depth(d)?;
        depths.insert(name, n);
    }
    let config = VerifyConfig {
        filter: if a.all { None } else { Some(names) },
        depths,
    };
    let reports = verify::run_all(&config)?;
    match a.format {
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(&reports).expect("json"))?;
        }
        _ => write_report_lines(&reports, out)?,
    }
    Ok(if reports.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("ascseq").chain(args.iter().copied());
        let code = run(argv, &mut input, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn enumerate_listing() {
        let (code, out, _) = run_args(&["enumerate", "--family", "repetition", "--length", "3"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "000\n001\n002\n010\n011\n");
        let (_, out, _) = run_args(
            &["enumerate", "--family", "ascent", "--avoid-021", "--no-double-zero", "--length", "3"],
            "",
        );
        assert_eq!(out, "010\n011\n012\n");
    }

    #[test]
    fn enumerate_errors() {
        let (code, _, err) = run_args(&["enumerate", "--family", "ascent", "--length", "20"], "");
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("cap"), "{err}");
        let (code, _, _) = run_args(
            &["enumerate", "--family", "ascent", "--length", "3", "--format", "bfile"],
            "",
        );
        assert_eq!(code, EXIT_USAGE);
        let (code, _, _) = run_args(&["enumerate", "--family", "nosuch", "--length", "3"], "");
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn map_examples() {
        let cases: &[(&[&str], &str)] = &[
            (&["--bijection", "phi", "--input", "0,0,2,1"], "1/234"),
            (&["--bijection", "tau", "--input", "0,1,0,1,1"], "UUDDUDUUDD"),
            (&["--bijection", "psi", "--inverse", "--input", "UD"], "0"),
            (&["--bijection", "phi", "--inverse", "--input", "14/23"], "0020"),
            (
                &["--bijection", "tau", "--mode", "algorithmic", "--input", "010113"],
                "UUUDDUDUUDDD",
            ),
        ];
        for (args, want) in cases {
            let mut argv = vec!["map"];
            argv.extend_from_slice(args);
            let (code, out, err) = run_args(&argv, "");
            assert_eq!(code, 0, "{err}");
            assert_eq!(out.trim(), *want);
        }
    }

    #[test]
    fn map_batch() {
        let (code, out, _) = run_args(&["map", "--bijection", "psi"], "0\n00\n\n01\n");
        assert_eq!(code, 0);
        assert_eq!(out, "UD\nUDUD\nUUDD\n");
        let (code, _, err) = run_args(&["map", "--bijection", "psi"], "0\n0021\n");
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("line 2"), "{err}");
    }

    #[test]
    fn count_formats() {
        let (_, out, _) = run_args(
            &["count", "--family", "repetition", "--max-n", "4", "--format", "bfile"],
            "",
        );
        assert_eq!(out, "0 1\n1 1\n2 2\n3 5\n4 15\n");
        let (_, out, _) = run_args(&["count", "--family", "descent", "--avoid-021", "--max-n", "6"], "");
        assert_eq!(out.trim(), "1,1,2,4,9,22,57");
        let (_, out, _) = run_args(
            &["count", "--family", "ascent", "--avoid-021", "--by", "zeros", "--max-n", "3"],
            "",
        );
        assert_eq!(out, "0: 1\n1: 0,1\n2: 0,1,1\n3: 0,2,2,1\n");
        let (code, _, _) = run_args(
            &["count", "--family", "ascent", "--by", "zeros", "--max-n", "3", "--format", "bfile"],
            "",
        );
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn series_outputs() {
        let (_, out, _) = run_args(
            &["series", "--gf", "F", "--order", "5", "--set", "y=1,z=1,w=1", "--format", "bfile"],
            "",
        );
        assert_eq!(out, "0 1\n1 1\n2 2\n3 5\n4 14\n5 42\n");
        let (_, out, _) = run_args(
            &["series", "--gf", "F", "--order", "5", "--set", "y=1,z=0,w=1", "--format", "bfile"],
            "",
        );
        assert_eq!(out, "0 1\n1 0\n2 1\n3 2\n4 4\n5 9\n");
        let (_, out, _) = run_args(
            &["series", "--gf", "G", "--order", "6", "--set", "y=1", "--format", "bfile"],
            "",
        );
        assert_eq!(out, "0 1\n1 1\n2 2\n3 4\n4 9\n5 22\n6 57\n");
        let (code, _, _) = run_args(&["series", "--gf", "F", "--order", "3", "--format", "bfile"], "");
        assert_eq!(code, EXIT_USAGE);
        let (code, _, _) = run_args(&["series", "--gf", "G", "--order", "3", "--set", "z=1"], "");
        assert_eq!(code, EXIT_USAGE);
        let (code, out, _) = run_args(&["series", "--gf", "F", "--order", "1"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "1 * x^0 y^0 z^0 w^0\n1 * x^1 y^1 z^1 w^0\n");
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out, _) = run_args(&["verify", "--check", "lemma2_ascent_top", "--max-n", "5"], "");
        assert_eq!(code, 0);
        assert!(out.contains("1/1 checks passed"));
        let (code, _, _) = run_args(&["verify", "--check", "nosuch"], "");
        assert_eq!(code, EXIT_USAGE);
        let (code, _, _) = run_args(&["verify"], "");
        assert_eq!(code, EXIT_USAGE);
    }
}

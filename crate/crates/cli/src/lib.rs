//! `finsym` front end. Everything runs in-process through [`run`], which
//! writes to the supplied streams and returns the exit code.

mod input;

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use finsym_core::character::{character, character_oracle};
use finsym_core::identity::{check_identity, identity_cases, IdentityName};
use finsym_core::involution::{
    for_each_signed, involution_count, weighted_involution_sum, InvolutionFilter, Signature, SignedFamily, Weight,
};
use finsym_core::multiplicity::{
    crosscheck_routes, multiplicity, so_multiplicity, unipotent_multiplicity, MultiPartition, SymmetricSpaceCase,
    SymmetricSpaceKind, DEFAULT_BASIC_BOUND,
};
use finsym_core::orbit::{FrobeniusOrbit, OrbitTable, OrbitTag, Twist};
use finsym_core::partition::partitions_of;
use finsym_core::tableau::enumerate_tableaux;
use finsym_core::{Error, Partition};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

pub use input::MultiPartitionInput;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Version of the JSON output schemas.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "finsym", version, about = "Exact multiplicities for finite symmetric spaces")]
struct Cli {
    /// Report wall time; without this flag output carries no timing.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Plain,
    Plus,
    Star,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FixedBy {
    Phi,
    Psi,
    Phipsi,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the symmetric-group identities exhaustively up to a size.
    Verify {
        /// Identity key, or `all`.
        #[arg(long, default_value = "all")]
        identity: String,
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        /// Emit the full report as JSON instead of one line per identity.
        #[arg(long)]
        json: bool,
    },
    /// One irreducible character value of the symmetric group.
    Char {
        #[arg(long)]
        rho: Partition,
        #[arg(long)]
        nu: Partition,
        /// Use the power-sum/Kostka oracle instead of Murnaghan–Nakayama.
        #[arg(long)]
        oracle: bool,
    },
    /// Count and weigh the involutions of the centralizer of a permutation of cycle type ν.
    Involutions {
        #[arg(long)]
        nu: Partition,
        #[arg(long, value_enum, default_value = "plain")]
        family: Family,
        #[arg(long, default_value = "none")]
        filter: InvolutionFilter,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        weight: Weight,
        /// Restrict the plus family to one signature class `p⁺ - p⁻`.
        #[arg(long, allow_hyphen_values = true)]
        signature: Option<i64>,
    },
    /// Count signed tableaux of shape μ.
    Tableaux {
        #[arg(long)]
        mu: Partition,
        #[arg(long, allow_hyphen_values = true)]
        signature: Option<i64>,
        #[arg(long, value_enum)]
        fixed_by: Option<FixedBy>,
    },
    /// The Frobenius orbit table for a field of q elements.
    Orbits {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value = "split")]
        twist: Twist,
        #[arg(long, default_value_t = 1)]
        max_level: usize,
    },
    /// Multiplicity of one irreducible character, read from a JSON document.
    Mult {
        #[arg(long)]
        case: Option<String>,
        #[arg(long)]
        input: PathBuf,
        /// Sum over both orthogonal branches for the special orthogonal subgroup,
        /// with ζ the odd level-one class given here.
        #[arg(long)]
        so_zeta: Option<u64>,
    },
    /// Closed-form values on every unipotent character of one rank.
    UnipotentTable {
        #[arg(long)]
        case: SymmetricSpaceKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        n_plus: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        epsilon: Option<i32>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Evaluate basic characters by both routes and compare.
    Crosscheck {
        /// Case key, or `all` for a sweep.
        #[arg(long, default_value = "all")]
        case: String,
        /// A single multipartition document; without it, sweep up to `--max-size`.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
    },
}

/// Batch output shared by the sweeping subcommands.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: Vec<String>,
    pub results: Vec<Value>,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

impl RunReport {
    fn new(command: &[String]) -> Self {
        RunReport {
            schema: SCHEMA_VERSION,
            command: command.to_vec(),
            results: Vec::new(),
            failures: Vec::new(),
            wall_time_ms: None,
        }
    }

    fn exit_code(&self) -> i32 {
        if self.failures.is_empty() {
            EXIT_OK
        } else {
            EXIT_FAILURE
        }
    }
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonIntegral(_) | Error::RouteMismatch { .. } => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<i32, Failure>;

fn big(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(small) => json!(small),
        Err(_) => json!(v.to_string()),
    }
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn json(&mut self, v: &impl Serialize) {
        let text = serde_json::to_string_pretty(v).expect("output values serialize");
        let _ = writeln!(self.out, "{text}");
    }

    fn progress(&mut self, msg: &str) {
        let _ = writeln!(self.err, "{msg}");
    }
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let start = Instant::now();
    let timing = cli.timing;
    let mut io = Io { out, err };
    let echo = args.get(1..).unwrap_or_default().to_vec();
    let result = dispatch(cli.command, &echo, timing.then_some(start), &mut io);
    if timing {
        io.progress(&format!("wall time: {} ms", start.elapsed().as_millis()));
    }
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            io.progress(&format!("error: {msg}"));
            EXIT_USAGE
        }
        Err(Failure::Check(msg)) => {
            io.progress(&format!("verification failure: {msg}"));
            EXIT_FAILURE
        }
    }
}

fn dispatch(command: Command, echo: &[String], start: Option<Instant>, io: &mut Io) -> Outcome {
    match command {
        Command::Verify {
            identity,
            max_size,
            json,
        } => verify(&identity, max_size, json, echo, start, io),
        Command::Char { rho, nu, oracle } => {
            let v = if oracle { character_oracle(&rho, &nu)? } else { character(&rho, &nu)? };
            io.json(&big(&v));
            Ok(EXIT_OK)
        }
        Command::Involutions {
            nu,
            family,
            filter,
            weight,
            signature,
        } => {
            let (count, sum) = involutions(&nu, family, filter, &weight, signature)?;
            io.json(&json!({ "count": count, "weighted_sum": big(&sum) }));
            Ok(EXIT_OK)
        }
        Command::Tableaux { mu, signature, fixed_by } => {
            let all = enumerate_tableaux(&mu, signature.map(Signature))?;
            let mut v = json!({ "count": all.len() });
            if let Some(by) = fixed_by {
                let fixed = all
                    .iter()
                    .filter(|t| {
                        let image = match by {
                            FixedBy::Phi => t.phi(),
                            FixedBy::Psi => t.psi(),
                            FixedBy::Phipsi => t.phi().psi(),
                        };
                        image == **t
                    })
                    .count();
                v["fixed"] = json!(fixed);
            }
            io.json(&v);
            Ok(EXIT_OK)
        }
        Command::Orbits { q, twist, max_level } => {
            io.json(&OrbitTable::concrete(q, twist, max_level)?);
            Ok(EXIT_OK)
        }
        Command::Mult { case, input, so_zeta } => {
            let resolved = read_input(&input)?.resolve(case.as_deref())?;
            let v = match so_zeta {
                Some(k) => so_multiplicity(&resolved.case, &resolved.table, &resolved.rho, k)?,
                None => multiplicity(&resolved.case, &resolved.table, &resolved.rho)?,
            };
            io.json(&json!({ "case": resolved.case, "multiplicity": big(&v) }));
            Ok(EXIT_OK)
        }
        Command::UnipotentTable {
            case,
            n,
            n_plus,
            epsilon,
            format,
        } => unipotent_table(case, n, n_plus, epsilon, format, io),
        Command::Crosscheck { case, input, max_size } => match input {
            Some(path) => {
                let key = (case != "all").then_some(case.as_str());
                let resolved = read_input(&path)?.resolve(key)?;
                let c = crosscheck_routes(&resolved.case, &resolved.table, &resolved.rho)?;
                io.json(&c);
                Ok(if c.agree { EXIT_OK } else { EXIT_FAILURE })
            }
            None => crosscheck_sweep(&case, max_size, echo, start, io),
        },
    }
}

fn read_input(path: &PathBuf) -> Result<MultiPartitionInput, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn involutions(
    nu: &Partition,
    family: Family,
    filter: InvolutionFilter,
    weight: &Weight,
    signature: Option<i64>,
) -> Result<(u64, BigInt), Failure> {
    let signed = match family {
        Family::Plain if signature.is_some() => {
            return Err(Failure::Usage("--signature applies to the plus and star families".into()))
        }
        Family::Plain => {
            return Ok((involution_count(nu, filter)?, weighted_involution_sum(nu, filter, weight)?));
        }
        Family::Plus => SignedFamily::Plus,
        Family::Star => SignedFamily::Star,
    };
    let mut count = 0u64;
    let mut sum = BigInt::from(0);
    for_each_signed(nu, signed, signature.map(Signature), |_, stats| {
        if filter.admits(stats) {
            count += 1;
            sum += weight.eval(stats);
        }
    })?;
    Ok((count, sum))
}

fn verify(name: &str, max_size: usize, json: bool, echo: &[String], start: Option<Instant>, io: &mut Io) -> Outcome {
    let names: Vec<IdentityName> = if name == "all" {
        IdentityName::ALL.to_vec()
    } else {
        vec![name.parse()?]
    };
    let mut report = RunReport::new(echo);
    for name in names {
        io.progress(&format!("checking {name}"));
        let mut checked = 0usize;
        let mut failed = 0usize;
        match identity_cases(name, max_size) {
            Ok(cases) => {
                for case in cases {
                    checked += 1;
                    let sig = case.signature.map(|s| format!(" {s}")).unwrap_or_default();
                    match check_identity(&case) {
                        Ok(o) if o.equal => {}
                        Ok(o) => {
                            failed += 1;
                            report.failures.push(format!("{name} {}{sig}: {} != {}", case.nu, o.lhs, o.rhs));
                        }
                        Err(e) => {
                            failed += 1;
                            report.failures.push(format!("{name} {}{sig}: {e}", case.nu));
                        }
                    }
                }
            }
            Err(e) => {
                failed += 1;
                report.failures.push(format!("{name}: {e}"));
            }
        }
        report.results.push(json!({ "identity": name.key(), "cases": checked, "failed": failed }));
    }
    report.wall_time_ms = start.map(|s| s.elapsed().as_millis());
    if json {
        io.json(&report);
    } else {
        for r in &report.results {
            let status = if r["failed"] == 0 { "ok" } else { "FAILED" };
            let _ = writeln!(io.out, "{:<16} {:>6} cases  {status}", r["identity"].as_str().unwrap_or(""), r["cases"]);
        }
        for f in &report.failures {
            let _ = writeln!(io.out, "  {f}");
        }
    }
    Ok(report.exit_code())
}

fn variants(kind: SymmetricSpaceKind, n: usize, n_plus: Option<usize>, epsilon: Option<i32>) -> Vec<SymmetricSpaceCase> {
    SymmetricSpaceCase::all_for_size(n)
        .into_iter()
        .filter(|c| c.kind() == kind)
        .filter(|c| n_plus.map_or(true, |a| c.signature().0 == a))
        .filter(|c| epsilon.map_or(true, |e| c.epsilon() == e))
        .collect()
}

fn unipotent_table(
    kind: SymmetricSpaceKind,
    n: usize,
    n_plus: Option<usize>,
    epsilon: Option<i32>,
    format: Format,
    io: &mut Io,
) -> Outcome {
    if n_plus.is_some() && !kind.takes_signature() {
        return Err(Failure::Usage(format!("{kind} takes no signature")));
    }
    if epsilon.is_some() && !kind.takes_epsilon() {
        return Err(Failure::Usage(format!("{kind} takes no ε")));
    }
    let cases = variants(kind, n, n_plus, epsilon);
    if cases.is_empty() {
        // surfaces the precise reason, e.g. the parity of n
        SymmetricSpaceCase::new(kind, n, n_plus.map(|a| (a, n.saturating_sub(a))), epsilon)?;
        return Err(Failure::Usage(format!("no {kind} case at n = {n}")));
    }
    let mut rows = Vec::new();
    for case in &cases {
        for rho in partitions_of(n)? {
            let v = unipotent_multiplicity(case, &rho)?;
            rows.push((case, rho, v));
        }
    }
    match format {
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(case, rho, v)| {
                    let mut row = json!({ "rho": rho, "multiplicity": big(v) });
                    if kind.takes_signature() {
                        row["n_plus"] = json!(case.signature().0);
                        row["n_minus"] = json!(case.signature().1);
                    }
                    if kind.takes_epsilon() {
                        row["epsilon"] = json!(case.epsilon());
                    }
                    row
                })
                .collect();
            io.json(&json!({ "schema": SCHEMA_VERSION, "case": kind.key(), "n": n, "rows": rows }));
        }
        Format::Csv => {
            let mut header = vec!["rho"];
            if kind.takes_signature() {
                header.extend(["n_plus", "n_minus"]);
            }
            if kind.takes_epsilon() {
                header.push("epsilon");
            }
            header.push("multiplicity");
            let _ = writeln!(io.out, "{}", header.join(","));
            for (case, rho, v) in rows {
                let mut fields = vec![format!("\"{rho}\"")];
                if kind.takes_signature() {
                    fields.push(case.signature().0.to_string());
                    fields.push(case.signature().1.to_string());
                }
                if kind.takes_epsilon() {
                    fields.push(case.epsilon().to_string());
                }
                fields.push(v.to_string());
                let _ = writeln!(io.out, "{}", fields.join(","));
            }
        }
    }
    Ok(EXIT_OK)
}

/// 1, -1 and one dual pair: enough for both two-orbit supports.
fn sweep_table(twist: Twist) -> OrbitTable {
    let orbit = |id, tag, d| FrobeniusOrbit {
        id,
        tag,
        m: 1,
        d,
        representative: None,
    };
    let orbits = vec![
        orbit(0, OrbitTag::One, 1),
        orbit(1, OrbitTag::MinusOne, -1),
        orbit(2, OrbitTag::DualPair { partner: 3 }, 1),
        orbit(3, OrbitTag::DualPair { partner: 2 }, 1),
    ];
    OrbitTable::from_orbits(twist, orbits).expect("sweep table is valid")
}

fn on_support(table: &OrbitTable, ids: &[usize], n: usize) -> Vec<MultiPartition> {
    if n == 0 {
        let empty = MultiPartition::new(table, BTreeMap::new()).expect("empty multipartition");
        return if ids.len() == 1 { vec![empty] } else { Vec::new() };
    }
    let mut out = Vec::new();
    let mut stack: Vec<BTreeMap<usize, Partition>> = vec![BTreeMap::new()];
    for (pos, &id) in ids.iter().enumerate() {
        let last = pos + 1 == ids.len();
        let mut next = Vec::new();
        for cur in stack {
            let used: usize = cur.values().map(Partition::size).sum();
            let sizes: Vec<usize> = if last { vec![n - used] } else { (1..n - used).collect() };
            for k in sizes {
                for p in partitions_of(k).expect("small sizes") {
                    let mut m = cur.clone();
                    m.insert(id, p);
                    next.push(m);
                }
            }
        }
        stack = next;
    }
    for m in stack {
        if m.values().all(|p| !p.is_empty()) {
            out.push(MultiPartition::new(table, m).expect("ids are in the table"));
        }
    }
    out
}

fn crosscheck_sweep(case: &str, max_size: usize, echo: &[String], start: Option<Instant>, io: &mut Io) -> Outcome {
    if max_size > DEFAULT_BASIC_BOUND {
        return Err(Failure::Usage(format!("--max-size {max_size} exceeds {DEFAULT_BASIC_BOUND}")));
    }
    let kinds: Vec<SymmetricSpaceKind> = if case == "all" {
        SymmetricSpaceKind::ALL.to_vec()
    } else {
        vec![case.parse()?]
    };
    let supports: [&[usize]; 3] = [&[0], &[0, 1], &[2, 3]];
    let mut report = RunReport::new(echo);
    for kind in kinds {
        io.progress(&format!("crosschecking {kind}"));
        let table = sweep_table(kind.twist());
        let mut checked = 0usize;
        let mut failed = 0usize;
        for n in 0..=max_size {
            for c in variants(kind, n, None, None) {
                for ids in supports {
                    for nu in on_support(&table, ids, n) {
                        checked += 1;
                        match crosscheck_routes(&c, &table, &nu) {
                            Ok(r) if r.agree => {}
                            Ok(r) => {
                                failed += 1;
                                report.failures.push(format!(
                                    "{c} {:?}: involution {} character {}",
                                    nu.assignments(),
                                    r.involution,
                                    r.character
                                ));
                            }
                            Err(e) => {
                                failed += 1;
                                report.failures.push(format!("{c} {:?}: {e}", nu.assignments()));
                            }
                        }
                    }
                }
            }
        }
        report.results.push(json!({ "case": kind.key(), "checked": checked, "failed": failed }));
    }
    report.wall_time_ms = start.map(|s| s.elapsed().as_millis());
    io.json(&report);
    Ok(report.exit_code())
}

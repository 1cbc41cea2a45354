//! Commands behind the `colorful` binary. Each command renders its full
//! output into a `String` before anything is printed, so an error never
//! leaves a partial table on stdout.

use std::fmt::Write as _;
use std::str::FromStr;

use anyhow::{bail, ensure, Context, Result};
use colorful_necklaces::number_theory::{divisors, euler_phi, moebius, signed_phi_divisor_sum};
use colorful_necklaces::reference::{BRACELETS, NECKLACES};
use colorful_necklaces::{
    apply, bracelet_count, fixed_points, necklace_count, Count, GroupElement, GroupKind, Oracle,
    S3Perm, SequenceKind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Plain,
    Csv,
    Markdown,
    Bfile,
}

impl FromStr for OutputFormat {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "plain" => OutputFormat::Plain,
            "csv" => OutputFormat::Csv,
            "markdown" => OutputFormat::Markdown,
            "bfile" => OutputFormat::Bfile,
            other => bail!("unknown format `{other}` (expected plain, csv, markdown or bfile)"),
        })
    }
}

/// Resolves a kind name from the command line. Bare classical names take
/// their color count from `colors`; other kinds ignore it.
pub fn parse_kind(name: &str, colors: Option<u64>) -> Result<SequenceKind> {
    let kind = if name.contains(':') {
        name.parse()?
    } else if name.starts_with("classical-") {
        SequenceKind::parse_with_colors(name, colors)?
    } else {
        SequenceKind::parse_with_colors(name, None)?
    };
    Ok(kind)
}

pub struct CountRequest {
    pub kind: String,
    pub n: u64,
    pub exact_colors: bool,
    pub exact_period: bool,
    pub colors: Option<u64>,
}

pub fn cmd_count(req: &CountRequest) -> Result<String> {
    ensure!(req.n >= 1, "--n must be at least 1");
    let kind = req.kind.as_str();
    if req.colors.is_some() && !kind.starts_with("classical-") {
        bail!("--colors applies only to classical-necklace and classical-bracelet");
    }
    let kind = parse_kind(kind, req.colors)?.with_modifiers(req.exact_colors, req.exact_period)?;
    Ok(format!("{}\n", kind.value(req.n)?))
}

pub fn cmd_table(
    kinds: &[SequenceKind],
    from: u64,
    to: u64,
    format: OutputFormat,
) -> Result<String> {
    ensure!(from >= 1, "--from must be at least 1");
    ensure!(from <= to, "--from ({from}) must not exceed --to ({to})");
    ensure!(!kinds.is_empty(), "at least one kind is required");
    if format == OutputFormat::Bfile {
        ensure!(
            kinds.len() == 1,
            "bfile output takes exactly one kind, got {}",
            kinds.len()
        );
    }

    let mut rows = Vec::with_capacity((to - from + 1) as usize);
    for n in from..=to {
        let values = kinds
            .iter()
            .map(|k| k.value(n).with_context(|| format!("{k} at n = {n}")))
            .collect::<Result<Vec<Count>>>()?;
        rows.push((n, values));
    }

    let names: Vec<String> = kinds.iter().map(|k| k.name()).collect();
    let join = |values: &[Count], sep: &str| {
        values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(sep)
    };
    let mut out = String::new();
    match format {
        OutputFormat::Plain => {
            for (_, values) in &rows {
                writeln!(out, "{}", join(values, " "))?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "n,{}", names.join(","))?;
            for (n, values) in &rows {
                writeln!(out, "{n},{}", join(values, ","))?;
            }
        }
        OutputFormat::Markdown => {
            writeln!(out, "| n | {} |", names.join(" | "))?;
            writeln!(out, "|---|{}", "---|".repeat(names.len()))?;
            for (n, values) in &rows {
                writeln!(out, "| {n} | {} |", join(values, " | "))?;
            }
        }
        OutputFormat::Bfile => {
            for (n, values) in &rows {
                writeln!(out, "{n} {}", values[0])?;
            }
        }
    }
    Ok(out)
}

/// Parses b-file text back into `(n, value)` pairs.
pub fn parse_bfile(text: &str) -> Result<Vec<(u64, Count)>> {
    text.lines()
        .enumerate()
        .map(|(i, line)| {
            let (n, value) = line
                .split_once(' ')
                .with_context(|| format!("line {}: expected `n value`", i + 1))?;
            Ok((n.parse()?, value.parse()?))
        })
        .collect()
}

pub const DEFAULT_ORBIT_MAX_N: u64 = 14;
pub const DEFAULT_FIXED_MAX_N: u64 = 12;

/// Outcome of [`cmd_verify`]: the report text and whether every check passed.
pub struct VerifyReport {
    pub text: String,
    pub passed: bool,
}

struct Report {
    text: String,
    passed: bool,
}

impl Report {
    fn record(&mut self, name: &str, outcome: std::result::Result<(), String>) {
        match outcome {
            Ok(()) => {
                let _ = writeln!(self.text, "PASS {name}");
            }
            Err(witness) => {
                let _ = writeln!(self.text, "FAIL {name}: {witness}");
                self.passed = false;
            }
        }
    }
}

pub fn cmd_verify(max_n: u64, fixed_max_n: u64, oracle: Oracle) -> Result<VerifyReport> {
    ensure!(max_n >= 1, "--max-n must be at least 1");
    ensure!(
        max_n <= oracle.cap(),
        "--max-n {max_n} exceeds the enumeration cap {}",
        oracle.cap()
    );
    ensure!(
        fixed_max_n <= oracle.cap(),
        "--fixed-max-n {fixed_max_n} exceeds the enumeration cap {}",
        oracle.cap()
    );

    let mut report = Report {
        text: String::new(),
        passed: true,
    };
    report.record(
        "number theory identities (n <= 500)",
        number_theory_checks(),
    );
    report.record(
        "published table K(1..40)",
        table_check(&NECKLACES, necklace_count),
    );
    report.record(
        "published table K'(1..40)",
        table_check(&BRACELETS, bracelet_count),
    );
    for kind in [GroupKind::Rotations, GroupKind::Dihedral] {
        let name = format!("{} orbit counts (n <= {max_n})", kind_label(kind));
        report.record(&name, orbit_check(&oracle, kind, max_n));
    }
    let fixed_limit = max_n.min(fixed_max_n);
    report.record(
        &format!("per-element fixed points (n <= {fixed_limit})"),
        fixed_point_check(&oracle, fixed_limit),
    );
    Ok(VerifyReport {
        text: report.text,
        passed: report.passed,
    })
}

fn kind_label(kind: GroupKind) -> &'static str {
    match kind {
        GroupKind::Rotations => "necklace",
        GroupKind::Dihedral => "bracelet",
    }
}

fn number_theory_checks() -> std::result::Result<(), String> {
    let err = |e: colorful_necklaces::Error| e.to_string();
    for n in 1..=500u64 {
        let ds = divisors(n).map_err(err)?;
        let mut phi_sum = 0;
        let mut mu_sum = 0i64;
        for &d in &ds {
            phi_sum += euler_phi(d).map_err(err)?;
            mu_sum += i64::from(moebius(d).map_err(err)?);
        }
        if phi_sum != n {
            return Err(format!("n = {n}: sum of phi(d) is {phi_sum}"));
        }
        if mu_sum != i64::from(n == 1) {
            return Err(format!("n = {n}: sum of mu(d) is {mu_sum}"));
        }
        let signed = signed_phi_divisor_sum(n).map_err(err)?;
        let expected = if n % 2 == 0 { 0 } else { -(n as i64) };
        if signed != expected.into() {
            return Err(format!("n = {n}: signed totient sum is {signed}"));
        }
    }
    Ok(())
}

fn table_check(
    table: &[u64],
    f: fn(u64) -> colorful_necklaces::Result<Count>,
) -> std::result::Result<(), String> {
    for (i, &expected) in table.iter().enumerate() {
        let n = i as u64 + 1;
        let got = f(n).map_err(|e| e.to_string())?;
        if got != expected {
            return Err(format!("n = {n}: computed {got}, published {expected}"));
        }
    }
    Ok(())
}

fn orbit_check(oracle: &Oracle, kind: GroupKind, max_n: u64) -> std::result::Result<(), String> {
    for n in 1..=max_n {
        let closed = match kind {
            GroupKind::Rotations => necklace_count(n),
            GroupKind::Dihedral => bracelet_count(n),
        }
        .map_err(|e| e.to_string())?;
        let scanned = oracle.orbit_count(n, kind).map_err(|e| e.to_string())?;
        if closed != scanned {
            return Err(format!("n = {n}: closed form {closed}, oracle {scanned}"));
        }
    }
    Ok(())
}

fn fixed_point_check(oracle: &Oracle, max_n: u64) -> std::result::Result<(), String> {
    for n in 1..=max_n {
        let words = oracle.enumerate_colorful(n).map_err(|e| e.to_string())?;
        for g in GroupKind::Dihedral.elements(n).map_err(|e| e.to_string())? {
            let mut scanned = 0u64;
            for w in &words {
                if apply(&g, w).map_err(|e| e.to_string())? == *w {
                    scanned += 1;
                }
            }
            let closed = fixed_points(&g).map_err(|e| e.to_string())?;
            if closed != scanned {
                return Err(format!(
                    "n = {n}, g = {g}: closed form {closed}, oracle {scanned}"
                ));
            }
        }
    }
    Ok(())
}

/// Closed-form fixed-point count, plus the oracle scan when `n` is within the cap.
pub struct FixedReport {
    pub closed: Count,
    pub scanned: Option<Count>,
}

impl FixedReport {
    pub fn line(&self) -> String {
        match &self.scanned {
            Some(scan) => {
                let verdict = if *scan == self.closed {
                    "EQUAL"
                } else {
                    "DIFFER"
                };
                format!("{} {} {verdict}\n", self.closed, scan)
            }
            None => format!("{}\n", self.closed),
        }
    }
}

pub fn cmd_fixed(n: u64, sigma: &str, eps: u8, shift: i64, oracle: Oracle) -> Result<FixedReport> {
    ensure!(n >= 1, "--n must be at least 1");
    ensure!(eps <= 1, "--eps must be 0 or 1, got {eps}");
    let sigma: S3Perm = sigma.parse()?;
    let g = GroupElement::new(n, sigma, eps == 1, shift)?;
    let closed = fixed_points(&g)?;
    let scanned = if n <= oracle.cap() {
        Some(oracle.fixed_point_scan(&g)?)
    } else {
        None
    };
    Ok(FixedReport { closed, scanned })
}

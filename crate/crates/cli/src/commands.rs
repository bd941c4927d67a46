use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use cyclolc::analysis::{reproduce_examples, reproduce_table, ExampleCheck, Table, TableCheck};
use cyclolc::{analyze, generate, sweep, Error, LcReport, SequenceParams, Variant, Verdict};

use crate::{GenArgs, LcArgs, ParamArgs, VerifyArgs};

/// Exit statuses.
pub const OK: u8 = 0;
pub const USAGE: u8 = 2;
pub const INCONSISTENT: u8 = 3;

fn fail(status: u8, msg: impl std::fmt::Display) -> u8 {
    eprintln!("cyclolc: {msg}");
    status
}

fn status_for(err: &Error) -> u8 {
    match err {
        Error::MethodDisagreement { .. } => INCONSISTENT,
        _ => USAGE,
    }
}

fn open_output(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn variant(modified: bool) -> Variant {
    if modified {
        Variant::Modified
    } else {
        Variant::Standard
    }
}

fn build_params(
    p: u64,
    m: u32,
    f: Option<u64>,
    e: Option<u64>,
    b: i64,
    g: Option<u64>,
) -> cyclolc::Result<SequenceParams> {
    match (f, e) {
        (Some(f), None) => SequenceParams::new(p, m, f, b, g),
        (None, Some(e)) => SequenceParams::with_e(p, m, e, b, g),
        _ => Err(Error::AmbiguousDecomposition),
    }
}

fn params_from(args: &ParamArgs) -> cyclolc::Result<SequenceParams> {
    build_params(args.p, args.m, args.f, args.e, args.b, args.g)
}

pub fn gen(args: GenArgs) -> u8 {
    let params = match params_from(&args.params) {
        Ok(p) => p,
        Err(e) => return fail(USAGE, e),
    };
    let seq = generate(&params, variant(args.params.modified));
    let result = open_output(args.out.as_deref()).and_then(|mut out| {
        if args.binary {
            out.write_all(&seq.to_packed())?;
        } else {
            writeln!(out, "{}", seq.to_ascii())?;
        }
        out.flush()
    });
    match result {
        Ok(()) => OK,
        Err(e) => fail(USAGE, e),
    }
}

pub fn lc(args: LcArgs) -> u8 {
    let params = match params_from(&args.params) {
        Ok(p) => p,
        Err(e) => return fail(USAGE, e),
    };
    let report = match analyze(&params, variant(args.params.modified), args.field_check) {
        Ok(r) => r,
        Err(e) => return fail(status_for(&e), e),
    };
    let result = open_output(args.out.as_deref()).and_then(|mut out| {
        if args.json {
            writeln!(out, "{}", report.to_json())?;
        } else {
            write!(out, "{}", report.to_text())?;
        }
        out.flush()
    });
    if let Err(e) = result {
        return fail(USAGE, e);
    }
    if report.verdict == Verdict::Violation {
        return fail(
            INCONSISTENT,
            "measured linear complexity violates the theorem prediction",
        );
    }
    OK
}

fn grid(args: &VerifyArgs) -> cyclolc::Result<Vec<SequenceParams>> {
    let decompositions: Vec<(Option<u64>, Option<u64>)> = match (args.f.is_empty(), args.e.is_empty()) {
        (false, true) => args.f.iter().map(|&f| (Some(f), None)).collect(),
        (true, false) => args.e.iter().map(|&e| (None, Some(e))).collect(),
        _ => return Err(Error::AmbiguousDecomposition),
    };
    let ms: &[u32] = if args.m.is_empty() { &[1] } else { &args.m };
    let mut out = Vec::new();
    for &p in &args.p {
        for &m in ms {
            for &(f, e) in &decompositions {
                let base = build_params(p, m, f, e, args.b, args.g)?;
                if args.all_b {
                    let d = base.d(m) as i64;
                    out.extend((0..d).map(|b| base.with_b(b)));
                } else {
                    out.push(base);
                }
                if out.len() > args.cap {
                    return Ok(out);
                }
            }
        }
    }
    Ok(out)
}

#[derive(Default)]
struct Tally {
    theorem: usize,
    conjecture: usize,
    range_only: usize,
    violations: usize,
    conjecture_mismatches: usize,
}

impl Tally {
    fn add(&mut self, r: &LcReport) {
        match r.verdict {
            Verdict::MatchesTheorem => self.theorem += 1,
            Verdict::MatchesConjecture => self.conjecture += 1,
            Verdict::WithinRangeOnly => self.range_only += 1,
            Verdict::Violation => self.violations += 1,
        }
        self.conjecture_mismatches += usize::from(r.conjecture_mismatch);
    }

    fn line(&self) -> String {
        format!(
            "{} analyses: {} MATCHES_CONJECTURE, {} MATCHES_THEOREM, {} WITHIN_RANGE_ONLY, {} VIOLATION; {} conjecture mismatches",
            self.theorem + self.conjecture + self.range_only + self.violations,
            self.conjecture,
            self.theorem,
            self.range_only,
            self.violations,
            self.conjecture_mismatches
        )
    }
}

fn table_json(check: &TableCheck) -> String {
    let mut doc = serde_json::to_value(check.report.record()).expect("serializable");
    let obj = doc.as_object_mut().expect("record is an object");
    obj.insert("table".into(), check.table.label().into());
    obj.insert("expected".into(), check.row.lc.into());
    obj.insert("pass".into(), check.passed().into());
    doc.to_string()
}

fn example_json(check: &ExampleCheck) -> String {
    serde_json::json!({
        "name": check.record.name,
        "variant": check.record.variant,
        "lc_bm": check.lc_bm,
        "lc_gcd": check.lc_gcd,
        "expected": check.record.lc,
        "bits_match": check.bits_match(),
        "first_divergence": check.first_divergence,
        "pass": check.passed(),
    })
    .to_string()
}

pub fn verify(args: VerifyArgs) -> u8 {
    if args.p.is_empty() && !args.paper_tables && !args.paper_examples {
        return fail(USAGE, "nothing to verify: give --p, --paper-tables or --paper-examples");
    }
    let grid = if args.p.is_empty() {
        Vec::new()
    } else {
        match grid(&args) {
            Ok(g) if g.len() > args.cap => {
                return fail(USAGE, format!("grid exceeds the cap of {} analyses", args.cap))
            }
            Ok(g) => g,
            Err(e) => return fail(USAGE, e),
        }
    };

    let mut out = match open_output(args.out.as_deref()) {
        Ok(o) => o,
        Err(e) => return fail(USAGE, e),
    };
    let mut failed = false;
    let mut lines: Vec<String> = Vec::new();
    let mut summary: Vec<String> = Vec::new();

    if args.paper_examples {
        let checks = match reproduce_examples() {
            Ok(c) => c,
            Err(e) => return fail(status_for(&e), e),
        };
        let passed = checks.iter().filter(|c| c.passed()).count();
        failed |= passed != checks.len();
        for c in &checks {
            lines.push(if args.json { example_json(c) } else { c.summary() });
        }
        summary.push(format!("examples: {passed}/{} pass", checks.len()));
    }

    if args.paper_tables {
        for table in [Table::One, Table::Two] {
            let checks = match reproduce_table(table) {
                Ok(c) => c,
                Err(e) => return fail(status_for(&e), e),
            };
            let passed = checks.iter().filter(|c| c.passed()).count();
            failed |= passed != checks.len();
            for c in &checks {
                lines.push(if args.json { table_json(c) } else { c.summary() });
            }
            summary.push(format!("{}: {passed}/{} pass", table.label(), checks.len()));
        }
    }

    if !grid.is_empty() {
        let reports = match sweep(&grid, variant(args.modified), args.field_check) {
            Ok(r) => r,
            Err(e) => return fail(status_for(&e), e),
        };
        let mut tally = Tally::default();
        for r in &reports {
            tally.add(r);
            lines.push(if args.json { r.to_json() } else { r.summary_line() });
        }
        failed |= tally.violations > 0;
        summary.push(tally.line());
    }

    let written = (|| -> io::Result<()> {
        for line in &lines {
            writeln!(out, "{line}")?;
        }
        if !args.json {
            for s in &summary {
                writeln!(out, "{s}")?;
            }
        }
        out.flush()
    })();
    if let Err(e) = written {
        return fail(USAGE, e);
    }
    if args.json {
        for s in &summary {
            eprintln!("{s}");
        }
    }
    if failed {
        INCONSISTENT
    } else {
        OK
    }
}

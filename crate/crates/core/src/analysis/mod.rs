//! Ties measurement to theory: predicted linear complexity per parameter
//! case, the measured value by both methods, and an optional root-of-unity
//! cross-check.

mod reproduce;

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::cyclotomy::Variant;
use crate::error::{Error, Result};
use crate::f2poly::{berlekamp_massey, lc_via_gcd};
use crate::galois::{FieldCtx, RootEvaluator};
use crate::numtheory::{classify_case, CaseClass, Residue, SequenceParams};
use crate::sequence::generate;

pub use reproduce::{reproduce_examples, reproduce_table, ExampleCheck, Table, TableCheck};

/// What the theorems (and the conjectured closed forms) say about LC.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prediction {
    Exact(usize),
    Range {
        lo: usize,
        hi: usize,
        conjectured: usize,
    },
    /// `2^e = +-1 (mod p^2)`: neither theorem applies.
    Uncovered,
}

impl Prediction {
    pub fn bounds(&self) -> Option<(usize, usize)> {
        match *self {
            Prediction::Exact(v) => Some((v, v)),
            Prediction::Range { lo, hi, .. } => Some((lo, hi)),
            Prediction::Uncovered => None,
        }
    }

    pub fn conjectured(&self) -> Option<usize> {
        match *self {
            Prediction::Range { conjectured, .. } => Some(conjectured),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    MatchesTheorem,
    MatchesConjecture,
    /// No theorem applies; only the trivial or root-count bounds were checked.
    WithinRangeOnly,
    Violation,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::MatchesTheorem => "MATCHES_THEOREM",
            Verdict::MatchesConjecture => "MATCHES_CONJECTURE",
            Verdict::WithinRangeOnly => "WITHIN_RANGE_ONLY",
            Verdict::Violation => "VIOLATION",
        }
    }
}

pub fn predict(params: &SequenceParams, variant: Variant, case: &CaseClass) -> Prediction {
    let n = params.period();
    let p1 = params.p() as usize - 1;
    let range = |conjectured| Prediction::Range {
        lo: n - 2 * p1,
        hi: n - p1,
        conjectured,
    };
    use Residue::*;
    match (variant, case.e_residue_mod_p, case.e_residue_mod_p2) {
        (Variant::Standard, Neither, _) => Prediction::Exact(n),
        (Variant::Standard, PlusOne, p2) if p2 != PlusOne => Prediction::Exact(n),
        (Variant::Standard, MinusOne, p2) if p2 != MinusOne => range(n - p1),
        (Variant::Modified, r, _) if r != PlusOne => Prediction::Exact(n),
        (Variant::Modified, PlusOne, p2) if p2 != PlusOne => range(n - p1 - params.e() as usize),
        _ => Prediction::Uncovered,
    }
}

/// Measured against predicted linear complexity for one parameter set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcReport {
    pub params: SequenceParams,
    pub variant: Variant,
    pub case: CaseClass,
    pub lc_bm: usize,
    pub lc_gcd: usize,
    pub prediction: Prediction,
    /// `|{a : s(beta^a) = 0}|` when the field check ran.
    pub zero_count: Option<usize>,
    pub verdict: Verdict,
    /// Inside the proven range but not equal to the conjectured value.
    pub conjecture_mismatch: bool,
    pub notes: Vec<String>,
}

/// Key/value form of a report with stable field names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRecord {
    pub p: u64,
    pub m: u32,
    pub f: u64,
    pub e: u64,
    pub b: u64,
    pub g: u64,
    pub variant: Variant,
    pub n: u64,
    pub h: u64,
    pub case_p: Residue,
    pub case_p2: Residue,
    pub lc_bm: usize,
    pub lc_gcd: usize,
    pub zero_count: Option<usize>,
    pub predicted_lo: Option<usize>,
    pub predicted_hi: Option<usize>,
    pub conjectured: Option<usize>,
    pub verdict: Verdict,
}

impl LcReport {
    pub fn lc(&self) -> usize {
        self.lc_gcd
    }

    pub fn record(&self) -> ReportRecord {
        let bounds = self.prediction.bounds();
        ReportRecord {
            p: self.params.p(),
            m: self.params.m(),
            f: self.params.f(),
            e: self.params.e(),
            b: self.params.b(),
            g: self.params.g(),
            variant: self.variant,
            n: self.case.n,
            h: self.case.h,
            case_p: self.case.e_residue_mod_p,
            case_p2: self.case.e_residue_mod_p2,
            lc_bm: self.lc_bm,
            lc_gcd: self.lc_gcd,
            zero_count: self.zero_count,
            predicted_lo: bounds.map(|b| b.0),
            predicted_hi: bounds.map(|b| b.1),
            conjectured: self.prediction.conjectured(),
            verdict: self.verdict,
        }
    }

    /// One-line JSON document.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.record()).expect("record is serializable")
    }

    /// Compact single-line form for grid listings.
    pub fn summary_line(&self) -> String {
        let ps = &self.params;
        let predicted = match self.prediction {
            Prediction::Exact(v) => format!("{v}"),
            Prediction::Range { lo, hi, conjectured } => format!("[{lo},{hi}] conj={conjectured}"),
            Prediction::Uncovered => "none".to_string(),
        };
        let mut line = format!(
            "p={} m={} f={} b={} g={} {} lc={} predicted={predicted} {}",
            ps.p(),
            ps.m(),
            ps.f(),
            ps.b(),
            ps.g(),
            self.variant,
            self.lc_gcd,
            self.verdict.as_str()
        );
        if let Some(z) = self.zero_count {
            let _ = write!(line, " Z={z}");
        }
        if self.conjecture_mismatch {
            line.push_str(" conjecture-mismatch");
        }
        line
    }

    pub fn to_text(&self) -> String {
        let ps = &self.params;
        let c = &self.case;
        let n = ps.period();
        let mut out = String::new();
        let _ = writeln!(
            out,
            "p={} m={} f={} e={} b={} g={} variant={}",
            ps.p(),
            ps.m(),
            ps.f(),
            ps.e(),
            ps.b(),
            ps.g(),
            self.variant
        );
        let _ = writeln!(
            out,
            "case: 2^e mod p {}, mod p^2 {}; tau={} n={} h={} wieferich={}",
            c.e_residue_mod_p.as_str(),
            c.e_residue_mod_p2.as_str(),
            c.tau,
            c.n,
            c.h,
            c.wieferich
        );
        let _ = writeln!(
            out,
            "lc: {} (berlekamp-massey), {} (gcd), period {n}",
            self.lc_bm, self.lc_gcd
        );
        let _ = match self.prediction {
            Prediction::Exact(v) => writeln!(out, "predicted: exactly {v}"),
            Prediction::Range { lo, hi, conjectured } => {
                writeln!(out, "predicted: {lo} <= lc <= {hi}, conjectured {conjectured}")
            }
            Prediction::Uncovered => writeln!(out, "predicted: none (case not covered)"),
        };
        if let Some(z) = self.zero_count {
            let _ = writeln!(
                out,
                "zero count: {z}; bracket {} <= {} <= {}",
                n.saturating_sub(2 * z),
                self.lc_gcd,
                n - z
            );
        }
        if self.conjecture_mismatch {
            let _ = writeln!(out, "conjecture-mismatch");
        }
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        let _ = writeln!(out, "verdict: {}", self.verdict.as_str());
        out
    }
}

/// Generates the sequence, measures LC both ways, and compares against
/// the prediction. With `with_field_check` the zero count of `s(beta^a)`
/// is also computed and the bracket `N - 2Z <= LC <= N - Z` enforced;
/// fields above degree 64 skip this with a note.
pub fn analyze(params: &SequenceParams, variant: Variant, with_field_check: bool) -> Result<LcReport> {
    let case = classify_case(params);
    let seq = generate(params, variant);
    let lc_bm = berlekamp_massey(&seq).lc;
    let lc_gcd = lc_via_gcd(&seq).lc;
    if lc_bm != lc_gcd {
        return Err(Error::MethodDisagreement { bm: lc_bm, gcd: lc_gcd });
    }
    let lc = lc_gcd;
    let n = params.period();
    let prediction = predict(params, variant, &case);
    let mut notes = Vec::new();

    let mut zero_count = None;
    let mut bracket_ok = true;
    if with_field_check {
        match FieldCtx::for_params(params) {
            Ok(ctx) => {
                let z = RootEvaluator::new(ctx, params)?.eval_support_at_roots(&seq)?.zero_count;
                bracket_ok = n.saturating_sub(2 * z) <= lc && lc <= n - z;
                if !bracket_ok {
                    notes.push(format!("root-count bracket violated with Z = {z}"));
                }
                zero_count = Some(z);
            }
            Err(Error::FieldTooLarge(deg)) => {
                notes.push(format!("field check skipped: extension degree {deg} exceeds 64"));
            }
            Err(e) => return Err(e),
        }
    }

    let within = prediction.bounds().map_or(true, |(lo, hi)| lo <= lc && lc <= hi);
    let conjecture_mismatch = within && prediction.conjectured().is_some_and(|c| c != lc);
    let verdict = if !bracket_ok || !within {
        Verdict::Violation
    } else {
        match prediction {
            Prediction::Uncovered => Verdict::WithinRangeOnly,
            Prediction::Range { conjectured, .. } if conjectured == lc => Verdict::MatchesConjecture,
            _ => Verdict::MatchesTheorem,
        }
    };
    if case.wieferich {
        notes.push("p is a Wieferich prime".into());
    }

    Ok(LcReport {
        params: *params,
        variant,
        case,
        lc_bm,
        lc_gcd,
        prediction,
        zero_count,
        verdict,
        conjecture_mismatch,
        notes,
    })
}

/// Runs [`analyze`] over many parameter sets in parallel, preserving order.
pub fn sweep(grid: &[SequenceParams], variant: Variant, with_field_check: bool) -> Result<Vec<LcReport>> {
    grid.par_iter()
        .map(|ps| analyze(ps, variant, with_field_check))
        .collect()
}

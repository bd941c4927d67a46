use rayon::prelude::*;

use super::{analyze, LcReport};
use crate::cyclotomy::Variant;
use crate::error::Result;
use crate::f2poly::{berlekamp_massey, lc_via_gcd};
use crate::numtheory::SequenceParams;
use crate::reference::{ExampleRecord, TableRow, EXAMPLES, TABLE_1, TABLE_2};
use crate::sequence::generate;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table {
    /// Standard sequences with `2^e = -1 (mod p)`.
    One,
    /// Modified sequences with `2^e = 1 (mod p)`.
    Two,
}

impl Table {
    pub fn rows(&self) -> &'static [TableRow] {
        match self {
            Table::One => &TABLE_1,
            Table::Two => &TABLE_2,
        }
    }

    pub fn variant(&self) -> Variant {
        match self {
            Table::One => Variant::Standard,
            Table::Two => Variant::Modified,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Table::One => "TABLE1",
            Table::Two => "TABLE2",
        }
    }
}

/// One `(g, b)` combination of a table row.
#[derive(Debug, Clone)]
pub struct TableCheck {
    pub table: Table,
    pub row: TableRow,
    pub g: u64,
    pub b: i64,
    pub report: LcReport,
}

impl TableCheck {
    pub fn passed(&self) -> bool {
        self.report.lc_bm == self.row.lc && self.report.lc_gcd == self.row.lc
    }

    pub fn summary(&self) -> String {
        let r = &self.row;
        format!(
            "{} p={} m={} e={} g={} b={} expected={} lc={} {}",
            self.table.label(),
            r.p,
            r.m,
            r.e,
            self.g,
            self.b,
            r.lc,
            self.report.lc(),
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// Analyzes every `(g, b)` combination of every row. Rows whose `f` is not
/// a power of two, or whose `g` is not a valid root, surface as errors.
pub fn reproduce_table(table: Table) -> Result<Vec<TableCheck>> {
    let mut jobs = Vec::new();
    for row in table.rows() {
        for &g in row.g {
            for &b in row.b {
                jobs.push((*row, g, b));
            }
        }
    }
    jobs.into_par_iter()
        .map(|(row, g, b)| {
            let params = SequenceParams::with_e(row.p, row.m, row.e, b, Some(g))?;
            let report = analyze(&params, table.variant(), false)?;
            Ok(TableCheck {
                table,
                row,
                g,
                b,
                report,
            })
        })
        .collect()
}

/// A regenerated example listing compared byte for byte.
#[derive(Debug, Clone)]
pub struct ExampleCheck {
    pub record: ExampleRecord,
    pub generated: String,
    pub first_divergence: Option<usize>,
    pub lc_bm: usize,
    pub lc_gcd: usize,
}

impl ExampleCheck {
    pub fn bits_match(&self) -> bool {
        self.first_divergence.is_none()
    }

    pub fn lc_matches(&self) -> bool {
        self.lc_bm == self.record.lc && self.lc_gcd == self.record.lc
    }

    pub fn passed(&self) -> bool {
        self.bits_match() && self.lc_matches()
    }

    pub fn summary(&self) -> String {
        let bits = match self.first_divergence {
            None => "bits exact".to_string(),
            Some(i) => {
                let at = |s: &str| s.as_bytes().get(i).map_or('-', |&c| c as char);
                format!(
                    "bits diverge at index {i} (listed {}, generated {})",
                    at(self.record.bits),
                    at(&self.generated)
                )
            }
        };
        format!(
            "{}: {bits}; lc={} expected={} {}",
            self.record.name,
            self.lc_gcd,
            self.record.lc,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

fn first_divergence(a: &str, b: &str) -> Option<usize> {
    a.bytes()
        .zip(b.bytes())
        .position(|(x, y)| x != y)
        .or((a.len() != b.len()).then(|| a.len().min(b.len())))
}

/// Regenerates every listed example sequence and its linear complexity.
pub fn reproduce_examples() -> Result<Vec<ExampleCheck>> {
    EXAMPLES
        .iter()
        .map(|rec| {
            let params = SequenceParams::new(rec.p, rec.m, rec.f, rec.b, Some(rec.g))?;
            let seq = generate(&params, rec.variant);
            let generated = seq.to_ascii();
            Ok(ExampleCheck {
                record: *rec,
                first_divergence: first_divergence(rec.bits, &generated),
                generated,
                lc_bm: berlekamp_massey(&seq).lc,
                lc_gcd: lc_via_gcd(&seq).lc,
            })
        })
        .collect()
}

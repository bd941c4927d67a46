//! Fixed inputs shared by the benchmarks.

use cyclolc::{generate, BinarySequence, SequenceParams, Variant};

/// `(p, m, f)` triples spanning periods from 98 to 4394.
pub const SIZES: [(u64, u32, u64); 4] = [(7, 2, 2), (5, 3, 2), (17, 2, 4), (13, 3, 2)];

pub fn params(p: u64, m: u32, f: u64) -> SequenceParams {
    SequenceParams::new(p, m, f, 0, None).expect("benchmark parameters are valid")
}

pub fn sequence(p: u64, m: u32, f: u64) -> BinarySequence {
    generate(&params(p, m, f), Variant::Standard)
}

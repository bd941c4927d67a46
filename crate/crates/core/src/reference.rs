//! Published reference data: the worked example sequences and the two
//! tables of linear complexities. Listings are `s_0` first.

use crate::cyclotomy::Variant;

#[derive(Debug, Clone, Copy)]
pub struct ExampleRecord {
    pub name: &'static str,
    pub p: u64,
    pub m: u32,
    pub f: u64,
    pub b: i64,
    pub g: u64,
    pub variant: Variant,
    pub bits: &'static str,
    pub lc: usize,
}

const fn example(
    name: &'static str,
    (p, m, f): (u64, u32, u64),
    variant: Variant,
    bits: &'static str,
    lc: usize,
) -> ExampleRecord {
    ExampleRecord {
        name,
        p,
        m,
        f,
        b: 0,
        g: 3,
        variant,
        bits,
        lc,
    }
}

use Variant::{Modified, Standard};

pub const EXAMPLES: [ExampleRecord; 8] = [
    example(
        "example-1-standard",
        (7, 2, 2),
        Standard,
        concat!(
            "1111011101100111001000000111111010001101010101010",
            "0101010101010011101000000111111011000110010001000",
        ),
        98,
    ),
    example(
        "example-1-modified",
        (7, 2, 2),
        Modified,
        concat!(
            "1101110111001101100010101101010000100111111111111",
            "0000000000000110111101010010101110010011000100010",
        ),
        89,
    ),
    example(
        "example-2i-standard",
        (5, 2, 2),
        Standard,
        "11111110011010000011000100010001100000101100111111",
        46,
    ),
    example(
        "example-2i-modified",
        (5, 2, 2),
        Modified,
        "11010100110000101101101110111011000010000110010101",
        50,
    ),
    example(
        "example-2ii-standard",
        (5, 2, 4),
        Standard,
        "11111110111110011010001010010111010011000001000000",
        50,
    ),
    example(
        "example-2ii-modified",
        (5, 2, 4),
        Modified,
        "11010100010100110000100000111101111001101011101010",
        50,
    ),
    example(
        "example-3-standard",
        (31, 1, 2),
        Standard,
        "11101101111000101011100001001000110110111100010101110000100100",
        62,
    ),
    example(
        "example-3-modified",
        (31, 1, 2),
        Modified,
        "11000111010010000001001011100010011100010110111111011010001110",
        17,
    ),
];

/// One table row; every listed `g` is combined with every listed `b`.
#[derive(Debug, Clone, Copy)]
pub struct TableRow {
    pub p: u64,
    pub m: u32,
    pub e: u64,
    pub g: &'static [u64],
    pub b: &'static [i64],
    pub lc: usize,
}

const fn row((p, m, e): (u64, u32, u64), g: &'static [u64], b: &'static [i64], lc: usize) -> TableRow {
    TableRow { p, m, e, g, b, lc }
}

/// Standard sequence, `2^e = -1 (mod p)` but not modulo `p^2`.
pub const TABLE_1: [TableRow; 12] = [
    row((5, 2, 2), &[3], &[0, 1, 3], 46),
    row((5, 3, 2), &[3], &[0, 1, 3], 246),
    row((5, 4, 2), &[3], &[0, 1, 3], 1246),
    row((11, 2, 5), &[7], &[2, 19], 232),
    row((13, 2, 6), &[7], &[6, 11], 326),
    row((13, 2, 6), &[11], &[5, 12], 326),
    row((13, 3, 6), &[7, 11], &[5, 12], 4382),
    row((17, 1, 4), &[3, 5], &[0, 3], 18),
    row((17, 2, 4), &[3], &[0, 2], 562),
    row((17, 2, 4), &[5], &[0, 7], 562),
    row((19, 2, 9), &[3], &[1, 6], 704),
    row((19, 2, 9), &[13], &[3, 22], 704),
];

/// Modified sequence, `2^e = 1 (mod p)` but not modulo `p^2`.
pub const TABLE_2: [TableRow; 7] = [
    row((7, 2, 3), &[3, 5], &[0, 3], 89),
    row((7, 3, 3), &[3, 5], &[0, 1], 677),
    row((17, 1, 8), &[3], &[0, 3], 10),
    row((17, 2, 8), &[5], &[0, 3], 554),
    row((23, 2, 11), &[5, 7], &[1, 5], 1025),
    row((31, 1, 15), &[3, 11], &[1, 6], 17),
    row((31, 2, 15), &[3, 11], &[2, 5], 1877),
];

//! One period of the standard or modified sequence, with its text and
//! packed binary export formats.

use std::fmt;

use crate::cyclotomy::{build_support, Variant};
use crate::error::{Error, Result};
use crate::f2poly::F2Poly;
use crate::numtheory::SequenceParams;

/// One period `s_0 .. s_{N-1}` of a binary sequence, bit-packed
/// little-endian (bit `i % 64` of word `i / 64` is `s_i`).
#[derive(Clone, PartialEq, Eq)]
pub struct BinarySequence {
    words: Vec<u64>,
    len: usize,
    origin: Option<(SequenceParams, Variant)>,
}

/// `s_i = 1` iff `i` lies in the variant's support set.
pub fn generate(params: &SequenceParams, variant: Variant) -> BinarySequence {
    let support = build_support(params, variant);
    let mut seq = BinarySequence::from_bits(support.ones_bitmap());
    seq.origin = Some((*params, variant));
    seq
}

/// Number of ones in one period.
pub fn weight(seq: &BinarySequence) -> usize {
    seq.weight()
}

impl BinarySequence {
    pub fn from_bits(bits: &[bool]) -> Self {
        let mut words = vec![0u64; bits.len().div_ceil(64)];
        for (i, _) in bits.iter().enumerate().filter(|(_, &b)| b) {
            words[i / 64] |= 1 << (i % 64);
        }
        Self {
            words,
            len: bits.len(),
            origin: None,
        }
    }

    /// Parses an ASCII string of `0`/`1`, `s_0` first. Surrounding whitespace
    /// (such as the trailing newline of the export format) is ignored.
    pub fn from_ascii(text: &str) -> Result<Self> {
        let bits = text
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::MalformedSequence(format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        Ok(Self::from_bits(&bits))
    }

    /// Decodes the packed format written by [`BinarySequence::to_packed`].
    pub fn from_packed(data: &[u8]) -> Result<Self> {
        let (header, body) = data
            .split_first_chunk::<8>()
            .ok_or_else(|| Error::MalformedSequence("missing length header".into()))?;
        let len = u64::from_le_bytes(*header) as usize;
        if body.len() != len.div_ceil(8) {
            return Err(Error::MalformedSequence(format!(
                "{} payload bytes for period {len}",
                body.len()
            )));
        }
        let bits: Vec<bool> = (0..len).map(|i| (body[i / 8] >> (i % 8)) & 1 == 1).collect();
        Ok(Self::from_bits(&bits))
    }

    pub fn period(&self) -> usize {
        self.len
    }

    pub fn bit(&self, i: usize) -> bool {
        assert!(i < self.len, "index {i} outside period {}", self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(|i| self.bit(i))
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Parameters and variant when produced by [`generate`].
    pub fn origin(&self) -> Option<(SequenceParams, Variant)> {
        self.origin
    }

    /// `c^N(x) = sum s_i x^i`.
    pub fn support_polynomial(&self) -> F2Poly {
        F2Poly::from_words(self.words.clone())
    }

    pub fn to_ascii(&self) -> String {
        self.bits().map(|b| if b { '1' } else { '0' }).collect()
    }

    /// 8-byte little-endian period, then the bits packed LSB-first.
    pub fn to_packed(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8 + self.len.div_ceil(8));
        out.extend_from_slice(&(self.len as u64).to_le_bytes());
        out.extend(
            self.words
                .iter()
                .flat_map(|w| w.to_le_bytes())
                .take(self.len.div_ceil(8)),
        );
        out
    }
}

impl fmt::Display for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

impl fmt::Debug for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BinarySequence")
            .field("period", &self.len)
            .field("origin", &self.origin)
            .field("bits", &self.to_ascii())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::EXAMPLES;
    use proptest::prelude::*;

    fn example(name: &str) -> &'static str {
        EXAMPLES.iter().find(|e| e.name == name).unwrap().bits
    }

    #[test]
    fn generates_listed_sequences() {
        let p7 = SequenceParams::new(7, 2, 2, 0, Some(3)).unwrap();
        let s = generate(&p7, Variant::Standard);
        assert_eq!(s.period(), 98);
        assert!(s.to_ascii().starts_with("11110111011001110010000001"));
        assert_eq!(s.to_ascii(), example("example-1-standard"));

        let p5 = SequenceParams::new(5, 2, 2, 0, Some(3)).unwrap();
        assert_eq!(
            generate(&p5, Variant::Standard).to_ascii(),
            "11111110011010000011000100010001100000101100111111"
        );

        let p31 = SequenceParams::with_e(31, 1, 15, 0, Some(3)).unwrap();
        assert_eq!(
            generate(&p31, Variant::Modified).to_ascii(),
            example("example-3-modified")
        );
    }

    #[test]
    fn weights() {
        let listed = BinarySequence::from_ascii(example("example-1-standard")).unwrap();
        assert_eq!(weight(&listed), 49);
        let listed = BinarySequence::from_ascii(example("example-2i-standard")).unwrap();
        assert_eq!(weight(&listed), 25);
        assert_eq!(weight(&BinarySequence::from_bits(&[false; 50])), 0);
    }

    #[test]
    fn support_polynomial_terms() {
        let p7 = SequenceParams::new(7, 2, 2, 0, Some(3)).unwrap();
        let poly = generate(&p7, Variant::Standard).support_polynomial();
        assert!(poly.coeff(0));
        assert!(poly.degree().unwrap() < 98);

        let listed = example("example-2i-standard");
        let p5 = SequenceParams::new(5, 2, 2, 0, Some(3)).unwrap();
        let poly = generate(&p5, Variant::Standard).support_polynomial();
        assert_eq!(poly.coeff(49), listed.as_bytes()[49] == b'1');
        for (i, c) in listed.bytes().enumerate() {
            assert_eq!(poly.coeff(i), c == b'1');
        }
    }

    #[test]
    fn ascii_parsing() {
        assert_eq!(BinarySequence::from_ascii("0110\n").unwrap().to_ascii(), "0110");
        assert!(matches!(
            BinarySequence::from_ascii("01a0"),
            Err(Error::MalformedSequence(_))
        ));
    }

    #[test]
    fn packed_layout() {
        let s = BinarySequence::from_ascii("1000000001").unwrap();
        assert_eq!(s.to_packed(), vec![10, 0, 0, 0, 0, 0, 0, 0, 0b0000_0001, 0b0000_0010]);
        assert!(BinarySequence::from_packed(&[1, 0, 0]).is_err());
        assert!(BinarySequence::from_packed(&[10, 0, 0, 0, 0, 0, 0, 0, 1]).is_err());
    }

    fn grid() -> impl Strategy<Value = (SequenceParams, Variant)> {
        let cases = vec![(3u64, 2u64), (5, 2), (5, 4), (7, 2), (11, 2), (13, 4), (17, 4), (17, 8)];
        (prop::sample::select(cases), 1u32..=2, -500i64..500, prop::bool::ANY).prop_map(|((p, f), m, b, modified)| {
            let v = if modified { Variant::Modified } else { Variant::Standard };
            (SequenceParams::new(p, m, f, b, None).unwrap(), v)
        })
    }

    proptest! {
        #[test]
        fn balanced_with_fixed_endpoints((ps, v) in grid()) {
            let s = generate(&ps, v);
            prop_assert_eq!(s.period(), ps.period());
            prop_assert_eq!(s.weight() as u64, ps.pm());
            prop_assert!(s.bit(0));
            prop_assert!(!s.bit(ps.pm() as usize));
            prop_assert!(s.support_polynomial().eval_at_one());
            prop_assert_eq!(generate(&ps, v), s);
        }

        #[test]
        fn shift_by_d_m_is_identity((ps, v) in grid(), k in -3i64..3) {
            let shifted = SequenceParams::new(
                ps.p(), ps.m(), ps.f(), ps.b() as i64 + k * ps.d(ps.m()) as i64, Some(ps.g()),
            ).unwrap();
            prop_assert_eq!(generate(&shifted, v).to_ascii(), generate(&ps, v).to_ascii());
        }

        #[test]
        fn packed_round_trip(bits in prop::collection::vec(any::<bool>(), 0..300)) {
            let s = BinarySequence::from_bits(&bits);
            let back = BinarySequence::from_packed(&s.to_packed()).unwrap();
            prop_assert_eq!(back.to_ascii(), s.to_ascii());
            prop_assert_eq!(BinarySequence::from_ascii(&s.to_ascii()).unwrap(), s);
        }
    }
}

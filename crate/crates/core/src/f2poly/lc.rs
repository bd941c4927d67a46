use serde::Serialize;

use super::{xor_shifted, F2Poly, WORD};
use crate::sequence::BinarySequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LcMethod {
    BerlekampMassey,
    Gcd,
}

/// Linear complexity of one period, with the by-products of the method
/// that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcResult {
    pub lc: usize,
    pub method: LcMethod,
    /// `m(x) = (x^N - 1) / gcd(x^N - 1, c(x))`. Berlekamp-Massey over two
    /// periods ends on the same polynomial as its connection polynomial.
    pub minimal_poly: Option<F2Poly>,
    /// `deg gcd(x^N - 1, c(x))`; gcd route only.
    pub gcd_degree: Option<usize>,
}

/// `LC = N - deg gcd(x^N - 1, c^N(x))`.
///
/// The zero sequence has `gcd = x^N - 1`, hence LC 0 and `m(x) = 1`.
pub fn lc_via_gcd(seq: &BinarySequence) -> LcResult {
    let n = seq.period();
    let modulus = F2Poly::x_pow_minus_one(n);
    let c = seq.support_polynomial();
    let g = modulus.gcd(&c).expect("x^N - 1 is nonzero");
    let (minimal, rem) = modulus.div_rem(&g).expect("gcd is nonzero");
    debug_assert!(rem.is_zero());
    let gcd_degree = g.degree().expect("gcd is nonzero");
    LcResult {
        lc: n - gcd_degree,
        method: LcMethod::Gcd,
        minimal_poly: Some(minimal),
        gcd_degree: Some(gcd_degree),
    }
}

/// Linear complexity by Berlekamp-Massey over two concatenated periods,
/// which suffices for any LC up to `N`.
pub fn berlekamp_massey(seq: &BinarySequence) -> LcResult {
    let n = seq.period();
    let stream: Vec<bool> = (0..2 * n).map(|i| seq.bit(i % n)).collect();
    let (lc, conn) = shortest_lfsr(&stream);
    LcResult {
        lc,
        method: LcMethod::BerlekampMassey,
        minimal_poly: Some(conn),
        gcd_degree: None,
    }
}

/// Berlekamp-Massey on a finite stream. Returns the LFSR length `L` and
/// the connection polynomial `C(x) = 1 + c_1 x + ... + c_L x^L`, so that
/// `s_k = c_1 s_{k-1} + ... + c_L s_{k-L}` for `L <= k < len`.
///
/// Bit-packed: the discrepancy is a masked popcount over the stream read
/// backwards.
pub fn shortest_lfsr(stream: &[bool]) -> (usize, F2Poly) {
    let total = stream.len();
    let words = total / WORD + 3;

    // rev[k] = s[total - 1 - k]; the zero padding stands for s_{<0}.
    let mut rev = vec![0u64; words];
    for (k, &bit) in stream.iter().rev().enumerate() {
        if bit {
            rev[k / WORD] |= 1 << (k % WORD);
        }
    }

    let mut conn = vec![0u64; words];
    let mut prev = vec![0u64; words];
    conn[0] = 1;
    prev[0] = 1;
    let mut len = 0usize;
    let mut prev_len = 0usize;
    let mut last_change = 0usize; // index of the step that produced `prev`
    let mut have_prev = false;

    for step in 0..total {
        let offset = total - 1 - step;
        let mut acc = 0u64;
        for (w, &cw) in conn[..=len / WORD].iter().enumerate() {
            acc ^= cw & load64(&rev, offset + w * WORD);
        }
        if acc.count_ones() % 2 == 0 {
            continue;
        }
        let shift = if have_prev { step - last_change } else { step + 1 };
        let snapshot = (2 * len <= step).then(|| conn.clone());
        let src_words = (prev_len / WORD + 1).min(words);
        xor_shifted_capped(&mut conn, &prev[..src_words], shift);
        if let Some(old) = snapshot {
            prev_len = len;
            len = step + 1 - len;
            prev = old;
            last_change = step;
            have_prev = true;
        }
    }

    let poly = F2Poly::from_words(conn);
    debug_assert!(poly.degree().is_some_and(|d| d <= len));
    (len, poly)
}

/// 64 bits of `words` starting at bit `pos`; the caller pads `words` by
/// at least one word past the last read.
#[inline]
fn load64(words: &[u64], pos: usize) -> u64 {
    let w = pos / WORD;
    let b = pos % WORD;
    let lo = words.get(w).copied().unwrap_or(0);
    if b == 0 {
        lo
    } else {
        let hi = words.get(w + 1).copied().unwrap_or(0);
        (lo >> b) | (hi << (WORD - b))
    }
}

/// `dst ^= src << shift` without growing `dst`; bits past its end are
/// zero by construction of the Berlekamp-Massey iteration.
fn xor_shifted_capped(dst: &mut [u64], src: &[u64], shift: usize) {
    let mut tmp = Vec::with_capacity(dst.len() + 2);
    tmp.extend_from_slice(dst);
    xor_shifted(&mut tmp, src, shift);
    debug_assert!(tmp[dst.len()..].iter().all(|&w| w == 0));
    let n = dst.len();
    dst.copy_from_slice(&tmp[..n]);
}

/// Runs the recurrence with connection polynomial `conn` from `seed`
/// (whose length must be at least `deg conn`) out to `len` bits.
pub fn lfsr_extend(conn: &F2Poly, seed: &[bool], len: usize) -> Vec<bool> {
    let taps: Vec<usize> = conn.exponents().filter(|&k| k > 0).collect();
    let order = conn.degree().unwrap_or(0);
    assert!(seed.len() >= order, "seed shorter than the register");
    let mut out: Vec<bool> = seed.iter().copied().take(len).collect();
    while out.len() < len {
        let k = out.len();
        let next = taps.iter().fold(false, |acc, &t| acc ^ out[k - t]);
        out.push(next);
    }
    out
}

//! Dense bit-packed polynomials over GF(2) and the two routes to linear
//! complexity: Berlekamp-Massey synthesis and `N - deg gcd(x^N - 1, c(x))`.

mod lc;

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use crate::error::{Error, Result};

pub use lc::{berlekamp_massey, lc_via_gcd, lfsr_extend, shortest_lfsr, LcMethod, LcResult};

const WORD: usize = 64;

/// A polynomial over GF(2); bit `i` of the packed words is the coefficient
/// of `x^i`.
///
/// The representation is canonical: the last word is never zero, and the
/// zero polynomial has no words. Derived equality is therefore polynomial
/// equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct F2Poly {
    words: Vec<u64>,
}

impl F2Poly {
    pub fn zero() -> Self {
        Self { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn x() -> Self {
        Self::monomial(1)
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut words = vec![0u64; k / WORD + 1];
        words[k / WORD] = 1 << (k % WORD);
        Self { words }
    }

    /// `x^n + 1`, which over GF(2) equals `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut poly = Self::monomial(n);
        poly.words[0] ^= 1;
        poly.normalize();
        poly
    }

    /// Sum of `x^k` over the given exponents; repeated exponents cancel.
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exponents: I) -> Self {
        let mut words = Vec::new();
        for k in exponents {
            if words.len() <= k / WORD {
                words.resize(k / WORD + 1, 0);
            }
            words[k / WORD] ^= 1 << (k % WORD);
        }
        Self::from_words(words)
    }

    /// Coefficients in ascending order of degree.
    pub fn from_coefficients<I: IntoIterator<Item = bool>>(coeffs: I) -> Self {
        Self::from_exponents(coeffs.into_iter().enumerate().filter_map(|(i, c)| c.then_some(i)))
    }

    /// Packed little-endian coefficient words; trailing zero words are
    /// stripped.
    pub fn from_words(words: Vec<u64>) -> Self {
        let mut poly = Self { words };
        poly.normalize();
        poly
    }

    /// Interprets bit `i` of `bits` as the coefficient of `x^i`.
    pub fn from_u128(bits: u128) -> Self {
        Self::from_words(vec![bits as u64, (bits >> 64) as u64])
    }

    /// Inverse of [`F2Poly::from_u128`]; `None` when the degree exceeds 127.
    pub fn to_u128(&self) -> Option<u128> {
        match self.words.as_slice() {
            [] => Some(0),
            [lo] => Some(*lo as u128),
            [lo, hi] => Some(*lo as u128 | (*hi as u128) << 64),
            _ => None,
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some((self.words.len() - 1) * WORD + (WORD - 1 - top.leading_zeros() as usize))
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words.get(i / WORD).is_some_and(|w| (w >> (i % WORD)) & 1 == 1)
    }

    /// Number of nonzero terms.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Exponents of the nonzero terms, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + b)
            })
        })
    }

    /// Evaluation at `x = 1`, i.e. the parity of the weight.
    pub fn eval_at_one(&self) -> bool {
        self.weight() % 2 == 1
    }

    /// `self * x^k`.
    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut words = vec![0u64; self.words.len() + k / WORD + 1];
        xor_shifted(&mut words, &self.words, k);
        Self::from_words(words)
    }

    /// Quotient and remainder of Euclidean division by `divisor`.
    pub fn div_rem(&self, divisor: &F2Poly) -> Result<(F2Poly, F2Poly)> {
        let ddeg = divisor.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.words.clone();
        let mut quot = Vec::new();
        let mut top = rem.len();
        while let Some(rdeg) = top_degree(&rem, &mut top) {
            if rdeg < ddeg {
                break;
            }
            let shift = rdeg - ddeg;
            if quot.is_empty() {
                quot = vec![0u64; shift / WORD + 1];
            }
            quot[shift / WORD] |= 1 << (shift % WORD);
            xor_shifted(&mut rem, &divisor.words, shift);
        }
        Ok((Self::from_words(quot), Self::from_words(rem)))
    }

    /// Remainder modulo `divisor`.
    pub fn rem(&self, divisor: &F2Poly) -> Result<F2Poly> {
        let ddeg = divisor.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.words.clone();
        let mut top = rem.len();
        while let Some(rdeg) = top_degree(&rem, &mut top) {
            if rdeg < ddeg {
                break;
            }
            xor_shifted(&mut rem, &divisor.words, rdeg - ddeg);
        }
        Ok(Self::from_words(rem))
    }

    /// Greatest common divisor by Euclid's algorithm. Over GF(2) every
    /// nonzero polynomial is monic, so the result is canonical.
    pub fn gcd(&self, other: &F2Poly) -> Result<F2Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = std::mem::replace(&mut b, r);
        }
        Ok(a)
    }

    /// `self^2`, computed by spreading bits (the Frobenius map).
    pub fn square(&self) -> Self {
        let mut words = vec![0u64; self.words.len() * 2];
        for (i, &w) in self.words.iter().enumerate() {
            words[2 * i] = spread(w as u32);
            words[2 * i + 1] = spread((w >> 32) as u32);
        }
        Self::from_words(words)
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

/// Interleaves zeros between the bits of `x`.
fn spread(x: u32) -> u64 {
    let mut v = x as u64;
    v = (v | (v << 16)) & 0x0000_FFFF_0000_FFFF;
    v = (v | (v << 8)) & 0x00FF_00FF_00FF_00FF;
    v = (v | (v << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    v = (v | (v << 2)) & 0x3333_3333_3333_3333;
    v = (v | (v << 1)) & 0x5555_5555_5555_5555;
    v
}

/// Degree of the packed polynomial in `words[..*top]`, lowering `top` past
/// zero words as it goes.
fn top_degree(words: &[u64], top: &mut usize) -> Option<usize> {
    while *top > 0 && words[*top - 1] == 0 {
        *top -= 1;
    }
    if *top == 0 {
        return None;
    }
    let w = words[*top - 1];
    Some((*top - 1) * WORD + (WORD - 1 - w.leading_zeros() as usize))
}

/// `dst ^= src << shift`, growing `dst` as needed.
pub(crate) fn xor_shifted(dst: &mut Vec<u64>, src: &[u64], shift: usize) {
    let ws = shift / WORD;
    let bs = shift % WORD;
    let need = src.len() + ws + usize::from(bs != 0);
    if dst.len() < need {
        dst.resize(need, 0);
    }
    if bs == 0 {
        for (d, s) in dst[ws..].iter_mut().zip(src) {
            *d ^= s;
        }
    } else {
        for (i, &s) in src.iter().enumerate() {
            dst[ws + i] ^= s << bs;
            dst[ws + i + 1] ^= s >> (WORD - bs);
        }
    }
}

impl Add for &F2Poly {
    type Output = F2Poly;

    fn add(self, rhs: &F2Poly) -> F2Poly {
        let (long, short) = if self.words.len() >= rhs.words.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut words = long.words.clone();
        for (d, s) in words.iter_mut().zip(&short.words) {
            *d ^= s;
        }
        F2Poly::from_words(words)
    }
}

impl AddAssign<&F2Poly> for F2Poly {
    fn add_assign(&mut self, rhs: &F2Poly) {
        xor_shifted(&mut self.words, &rhs.words, 0);
        self.normalize();
    }
}

impl Mul for &F2Poly {
    type Output = F2Poly;

    /// Schoolbook multiplication with word-level shifts.
    fn mul(self, rhs: &F2Poly) -> F2Poly {
        if self.is_zero() || rhs.is_zero() {
            return F2Poly::zero();
        }
        let (sparse, dense) = if self.weight() <= rhs.weight() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut words = vec![0u64; self.words.len() + rhs.words.len() + 1];
        for k in sparse.exponents() {
            xor_shifted(&mut words, &dense.words, k);
        }
        F2Poly::from_words(words)
    }
}

impl fmt::Display for F2Poly {
    /// Nonzero terms in descending order, e.g. `x^98 + x^3 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut exps: Vec<usize> = self.exponents().collect();
        exps.reverse();
        for (i, k) in exps.into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match k {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Poly({self})")
    }
}

//! Modular arithmetic over small moduli: primality, orders, primitive roots
//! and discrete logarithms, plus the validated parameter set that every
//! other module consumes.
//!
//! All arithmetic is on `u64` with `u128` intermediates, which is ample for
//! periods up to `2^32`.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest accepted `p^m`; keeps `N = 2p^m` within 32 bits.
pub const MAX_PRIME_POWER: u64 = 1 << 31;

/// Group orders below this are searched exhaustively by [`discrete_log`].
const EXHAUSTIVE_LOG_LIMIT: u64 = 100_000;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[inline]
pub fn mul_mod(a: u64, b: u64, modulus: u64) -> u64 {
    ((a as u128 * b as u128) % modulus as u128) as u64
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut acc = 1u64;
    let mut sq = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, sq, modulus);
        }
        sq = mul_mod(sq, sq, modulus);
        exp >>= 1;
    }
    acc
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors in ascending order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n).into_iter().fold(n, |acc, q| acc / q * (q - 1))
}

/// Least `k >= 1` with `a^k = 1 (mod modulus)`.
pub fn multiplicative_order(a: u64, modulus: u64) -> Result<u64> {
    if modulus < 2 || gcd(a % modulus, modulus) != 1 {
        return Err(Error::NotAUnit { a, modulus });
    }
    let phi = euler_phi(modulus);
    let mut order = phi;
    for q in prime_factors(phi) {
        while order % q == 0 && pow_mod(a, order / q, modulus) == 1 {
            order /= q;
        }
    }
    Ok(order)
}

/// `g` generates the unit group of `modulus`, assumed cyclic.
fn generates_units(g: u64, modulus: u64) -> bool {
    if gcd(g % modulus, modulus) != 1 {
        return false;
    }
    let phi = euler_phi(modulus);
    prime_factors(phi)
        .into_iter()
        .all(|q| pow_mod(g, phi / q, modulus) != 1)
}

/// True iff `g` is odd and a primitive root modulo `p` and, when `m >= 2`,
/// modulo `p^2`. By the lifting lemma such a `g` is then a primitive root
/// modulo `p^j` and `2p^j` for every `j <= m`.
pub fn validate_primitive_root(g: u64, p: u64, m: u32) -> bool {
    if g < 2 || g % 2 == 0 || p < 3 || !is_prime(p) || m == 0 {
        return false;
    }
    generates_units(g, p) && (m == 1 || generates_units(g, p * p))
}

/// Smallest odd `g >= 3` accepted by [`validate_primitive_root`].
pub fn find_common_odd_primitive_root(p: u64, m: u32) -> Result<u64> {
    if p < 3 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if m == 0 {
        return Err(Error::ZeroExponent);
    }
    let mut g = 3u64;
    loop {
        if validate_primitive_root(g, p, m) {
            return Ok(g);
        }
        g += 2;
    }
}

/// Exponent `k` in `[0, ord(g))` with `g^k = x (mod modulus)`.
///
/// Exhaustive below a group order of 10^5, baby-step/giant-step above.
pub fn discrete_log(g: u64, x: u64, modulus: u64) -> Result<u64> {
    if modulus < 2 || gcd(x % modulus, modulus) != 1 {
        return Err(Error::NotAUnit { a: x, modulus });
    }
    let order = multiplicative_order(g, modulus)?;
    let target = x % modulus;
    let missing = Error::NoDiscreteLog { g, x, modulus };

    if order < EXHAUSTIVE_LOG_LIMIT {
        let mut acc = 1 % modulus;
        for k in 0..order {
            if acc == target {
                return Ok(k);
            }
            acc = mul_mod(acc, g, modulus);
        }
        return Err(missing);
    }

    let step = (order as f64).sqrt().ceil() as u64;
    let mut baby = HashMap::with_capacity(step as usize);
    let mut acc = 1 % modulus;
    for j in 0..step {
        baby.entry(acc).or_insert(j);
        acc = mul_mod(acc, g, modulus);
    }
    // g^{-step} = g^{order - step}
    let giant = pow_mod(g, order - step % order, modulus);
    let mut gamma = target;
    for i in 0..=step {
        if let Some(&j) = baby.get(&gamma) {
            return Ok((i * step + j) % order);
        }
        gamma = mul_mod(gamma, giant, modulus);
    }
    Err(missing)
}

/// A validated parameter tuple `(p, m, f, e, b, g)` for sequences of period
/// `2p^m`, with `p - 1 = e f`, `f` a power of two and `g` an odd common
/// primitive root. The shift `b` is stored reduced modulo `d_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SequenceParams {
    p: u64,
    m: u32,
    f: u64,
    e: u64,
    b: u64,
    g: u64,
}

impl SequenceParams {
    /// Builds parameters from `f`. When `g` is `None` the smallest valid
    /// odd primitive root is used.
    pub fn new(p: u64, m: u32, f: u64, b: i64, g: Option<u64>) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroExponent);
        }
        if f < 2 || !f.is_power_of_two() {
            return Err(Error::FNotPowerOfTwo(f));
        }
        if (p - 1) % f != 0 {
            return Err(Error::FDoesNotDivide { f, p_minus_one: p - 1 });
        }
        let pm = p
            .checked_pow(m)
            .filter(|&v| v <= MAX_PRIME_POWER)
            .ok_or(Error::PeriodTooLarge { p, m })?;
        let g = match g {
            Some(g) if validate_primitive_root(g, p, m) => g,
            Some(g) => return Err(Error::NotPrimitiveRoot { g, p, m }),
            None => find_common_odd_primitive_root(p, m)?,
        };
        let d_m = pm / p * f;
        Ok(Self {
            p,
            m,
            f,
            e: (p - 1) / f,
            b: b.rem_euclid(d_m as i64) as u64,
            g,
        })
    }

    /// Builds parameters from `e`, deriving `f = (p - 1) / e`.
    pub fn with_e(p: u64, m: u32, e: u64, b: i64, g: Option<u64>) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if e == 0 || (p - 1) % e != 0 {
            return Err(Error::EDoesNotDivide { e, p_minus_one: p - 1 });
        }
        Self::new(p, m, (p - 1) / e, b, g)
    }

    /// Same parameters with a different shift.
    pub fn with_b(&self, b: i64) -> Self {
        Self {
            b: b.rem_euclid(self.d(self.m) as i64) as u64,
            ..*self
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn f(&self) -> u64 {
        self.f
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    /// The shift, reduced into `[0, d_m)`.
    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn g(&self) -> u64 {
        self.g
    }

    /// `p^j`.
    pub fn p_pow(&self, j: u32) -> u64 {
        self.p.pow(j)
    }

    /// `p^m`.
    pub fn pm(&self) -> u64 {
        self.p_pow(self.m)
    }

    /// The period `N = 2p^m`.
    pub fn period(&self) -> usize {
        2 * self.pm() as usize
    }

    /// `d_j = p^{j-1} f`, the number of classes at level `j`.
    pub fn d(&self, j: u32) -> u64 {
        debug_assert!(j >= 1);
        self.p_pow(j - 1) * self.f
    }

    /// `delta_j = d_j / 2`.
    pub fn delta(&self, j: u32) -> u64 {
        self.d(j) / 2
    }
}

/// Where `2^e` lands relative to `+-1` modulo some prime power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Residue {
    PlusOne,
    MinusOne,
    Neither,
}

impl Residue {
    fn of(value: u64, modulus: u64) -> Self {
        if value == 1 % modulus {
            Residue::PlusOne
        } else if value == modulus - 1 {
            Residue::MinusOne
        } else {
            Residue::Neither
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Residue::PlusOne => "PLUS_ONE",
            Residue::MinusOne => "MINUS_ONE",
            Residue::Neither => "NEITHER",
        }
    }
}

/// Number-theoretic facts about 2 that select the applicable theorem case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CaseClass {
    /// Order of 2 modulo `p`.
    pub tau: u64,
    pub e_residue_mod_p: Residue,
    pub e_residue_mod_p2: Residue,
    /// `2^{p-1} = 1 (mod p^2)`.
    pub wieferich: bool,
    /// Index with `2` in `D_h^{(p^m)}`, reduced modulo `d_m`.
    pub h: u64,
    /// Order of 2 modulo `p^m`; the degree of the field holding a
    /// primitive `p^m`-th root of unity.
    pub n: u64,
}

impl CaseClass {
    /// Class index of 2 at level `j`, i.e. `h mod d_j`.
    pub fn class_of_two(&self, params: &SequenceParams, j: u32) -> u64 {
        self.h % params.d(j)
    }
}

pub fn classify_case(params: &SequenceParams) -> CaseClass {
    let p = params.p();
    let p2 = p * p;
    let pm = params.pm();
    let e = params.e();
    let dlog = discrete_log(params.g(), 2, pm).expect("g is a primitive root and 2 is a unit");
    CaseClass {
        tau: multiplicative_order(2, p).expect("2 is a unit mod an odd prime"),
        e_residue_mod_p: Residue::of(pow_mod(2, e, p), p),
        e_residue_mod_p2: Residue::of(pow_mod(2, e, p2), p2),
        wieferich: pow_mod(2, p - 1, p2) == 1,
        h: dlog % params.d(params.m()),
        n: multiplicative_order(2, pm).expect("2 is a unit mod an odd prime power"),
    }
}

//! Arithmetic in GF(2^n), `n <= 64`, where `n` is the order of 2 modulo
//! `p^m`, and evaluation of the support polynomials at the `p^m`-th roots
//! of unity.
//!
//! Everything here is a cross-check on the linear complexity computed in
//! [`crate::f2poly`]: the zero count `Z` of `s(beta^a)` brackets the LC as
//! `N - 2Z <= LC <= N - Z`, and the class sums obey a set of closed-form
//! identities that [`RootEvaluator`] checks exhaustively.

use std::ops::{Add, AddAssign};

use crate::cyclotomy::{build_class, ModulusKind, Scaling, Variant};
use crate::error::{Error, Result};
use crate::f2poly::F2Poly;
use crate::numtheory::{discrete_log, multiplicative_order, prime_factors, CaseClass, SequenceParams};
use crate::sequence::BinarySequence;

/// Largest supported extension degree.
pub const MAX_DEGREE: u64 = 64;

/// Rabin's test: `x^{2^n} = x (mod f)` and `gcd(x^{2^{n/q}} - x, f) = 1`
/// for every prime `q | n`.
pub fn is_irreducible(f: &F2Poly) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    let x = F2Poly::x().rem(f).expect("f is nonzero");
    let maximal: Vec<usize> = prime_factors(n as u64).into_iter().map(|q| n / q as usize).collect();
    let mut frob = x.clone();
    for k in 1..=n {
        frob = frob.square().rem(f).expect("f is nonzero");
        if maximal.contains(&k) {
            let diff = &frob + &x;
            if !f.gcd(&diff).expect("f is nonzero").is_one() {
                return false;
            }
        }
    }
    frob == x
}

/// Irreducible polynomials of degree `n` with nonzero constant term, in
/// increasing order of their coefficient strings read as integers.
pub fn irreducibles(n: u32) -> impl Iterator<Item = F2Poly> {
    assert!((1..=127).contains(&n), "degree {n} unsupported");
    let top = 1u128 << n;
    (0..top >> 1)
        .map(move |low| F2Poly::from_u128(top | (low << 1) | 1))
        .filter(is_irreducible)
}

/// The smallest irreducible polynomial of degree `n` with nonzero constant
/// term (`x + 1` for `n = 1`).
pub fn find_irreducible(n: u32) -> F2Poly {
    irreducibles(n).next().expect("irreducibles exist in every degree")
}

/// An element of GF(2^n) as packed coefficients of degree `< n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FieldElement(u64);

impl FieldElement {
    pub const ZERO: Self = Self(0);
    pub const ONE: Self = Self(1);

    pub fn bits(&self) -> u64 {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == 0
    }

    /// The prime-field element `c mod 2`.
    pub fn scalar(c: u64) -> Self {
        Self(c & 1)
    }
}

// Characteristic 2: addition is XOR.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for FieldElement {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: Self) {
        self.0 ^= rhs.0;
    }
}

/// GF(2^n) presented as `GF(2)[x] / (modulus)`, sized to contain a
/// primitive `p^m`-th root of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldCtx {
    n: u32,
    modulus: F2Poly,
    full: u128,
    p: u64,
    m: u32,
}

impl FieldCtx {
    /// Field of degree `ord_{p^m}(2)` over the smallest irreducible.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        let n = Self::degree_for(p, m)?;
        Self::build(p, m, n, find_irreducible(n))
    }

    pub fn for_params(params: &SequenceParams) -> Result<Self> {
        Self::new(params.p(), params.m())
    }

    /// Same field degree over a caller-chosen irreducible modulus.
    pub fn with_modulus(p: u64, m: u32, modulus: F2Poly) -> Result<Self> {
        let n = Self::degree_for(p, m)?;
        let deg = modulus.degree().unwrap_or(0);
        if deg != n as usize || !is_irreducible(&modulus) {
            return Err(Error::NotIrreducible(deg));
        }
        Self::build(p, m, n, modulus)
    }

    /// `ord_{p^m}(2)`, refusing anything above [`MAX_DEGREE`].
    pub fn degree_for(p: u64, m: u32) -> Result<u32> {
        let pm = p.checked_pow(m).ok_or(Error::PeriodTooLarge { p, m })?;
        let n = multiplicative_order(2, pm)?;
        if n > MAX_DEGREE {
            return Err(Error::FieldTooLarge(n));
        }
        Ok(n as u32)
    }

    fn build(p: u64, m: u32, n: u32, modulus: F2Poly) -> Result<Self> {
        let full = modulus.to_u128().expect("degree at most 64");
        Ok(Self { n, modulus, full, p, m })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> &F2Poly {
        &self.modulus
    }

    /// `p^m`, the order of the roots of unity this field is built for.
    pub fn root_order(&self) -> u64 {
        self.p.pow(self.m)
    }

    /// Reduces a polynomial into the field.
    pub fn element(&self, poly: &F2Poly) -> FieldElement {
        let r = poly.rem(&self.modulus).expect("modulus is nonzero");
        FieldElement(r.to_u128().expect("degree below n") as u64)
    }

    fn reduce(&self, mut r: u128) -> FieldElement {
        let n = self.n;
        while r >> n != 0 {
            let top = 127 - r.leading_zeros();
            r ^= self.full << (top - n);
        }
        FieldElement(r as u64)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let wide = a.0 as u128;
        let mut rest = b.0;
        let mut acc = 0u128;
        while rest != 0 {
            let k = rest.trailing_zeros();
            acc ^= wide << k;
            rest &= rest - 1;
        }
        self.reduce(acc)
    }

    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn pow(&self, a: FieldElement, mut exp: u64) -> FieldElement {
        let mut acc = FieldElement::ONE;
        let mut sq = a;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.square(sq);
            exp >>= 1;
        }
        acc
    }

    /// `a^2 = a`.
    pub fn in_f2(&self, a: FieldElement) -> bool {
        self.square(a) == a
    }

    /// `a^4 = a`.
    pub fn in_f4(&self, a: FieldElement) -> bool {
        self.square(self.square(a)) == a
    }
}

/// First `c^{(2^n - 1) / p^m}` of order exactly `p^m`, scanning
/// `c = x, x + 1, x^2, x^2 + 1, ...`.
pub fn find_root_of_unity(ctx: &FieldCtx) -> FieldElement {
    let pm = ctx.root_order();
    let group = ((1u128 << ctx.n) - 1) as u64;
    debug_assert_eq!(group % pm, 0);
    let cofactor = group / pm;
    let sub = pm / ctx.p;
    (2u64..)
        .map(|c| ctx.pow(FieldElement(c), cofactor))
        .find(|&beta| ctx.pow(beta, sub) != FieldElement::ONE)
        .expect("a primitive root of unity exists")
}

/// `s(beta^a)` for every `a` in `Z_{p^m}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootEvaluation {
    pub values: Vec<FieldElement>,
    /// `|{a : s(beta^a) = 0}|`.
    pub zero_count: usize,
}

/// Outcome of an exhaustive identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl IdentityCheck {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A subfield-membership statement about the sums `A_{l,v}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MembershipClause {
    /// `2 in D_0^{(p^l)}` gives `A_{l,v}` in GF(2).
    TrivialClassInF2,
    /// `2 not in D_0^{(p)}` gives `A_{l,v}` outside GF(2).
    NontrivialClassNotInF2,
    /// `2 in D_0^{(p)}`, not in `D_0^{(p^2)}`: `A_{1,v}` in GF(2), `A_{l,v}` outside GF(4).
    PlusOneAtFirstLevelOnly,
    /// `2 in D_{delta_1}^{(p)}`, not in `D_{delta_2}^{(p^2)}`: `A_{1,v}` in
    /// GF(4) minus GF(2), `A_{l,v}` outside GF(4).
    MinusOneAtFirstLevelOnly,
    /// `delta_1` does not divide `h`: `A_{l,v}` outside GF(4).
    HalfOrderNotDividing,
}

/// Membership of `A_{l,v}` for every level `l` and shift `v`, with the
/// clauses that apply to `l` asserted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipReport {
    pub rows: Vec<MembershipRow>,
    /// `(level, clause, held for every v)`.
    pub clauses: Vec<(u32, MembershipClause, bool)>,
    /// Levels where no clause applies (Wieferich-type residues).
    pub observations: Vec<String>,
}

impl MembershipReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MembershipRow {
    pub level: u32,
    pub v: u64,
    pub in_f2: bool,
    pub in_f4: bool,
}

/// Evaluates class sums `Hbar_v^{(p^j)}(beta^a)` and the support
/// polynomials at powers of a fixed primitive `p^m`-th root `beta`.
#[derive(Debug, Clone)]
pub struct RootEvaluator {
    ctx: FieldCtx,
    params: SequenceParams,
    beta: FieldElement,
    /// `powers[k] = beta^k` for `k < p^m`.
    powers: Vec<FieldElement>,
    /// `[j - 1][i]`: `p^{m-j} D_i^{(p^j)}`, `2 p^{m-j} D_i^{(p^j)}`, `p^{m-j} D_i^{(2p^j)}`.
    lifted: Vec<Vec<Vec<u64>>>,
    doubled: Vec<Vec<Vec<u64>>>,
    odd: Vec<Vec<Vec<u64>>>,
}

impl RootEvaluator {
    pub fn new(ctx: FieldCtx, params: &SequenceParams) -> Result<Self> {
        let pm = params.pm();
        if ctx.p != params.p() || ctx.m != params.m() {
            return Err(Error::PeriodMismatch {
                got: params.period(),
                expected: 2 * ctx.root_order() as usize,
            });
        }
        let beta = find_root_of_unity(&ctx);
        let mut powers = Vec::with_capacity(pm as usize);
        let mut acc = FieldElement::ONE;
        for _ in 0..pm {
            powers.push(acc);
            acc = ctx.mul(acc, beta);
        }
        debug_assert_eq!(acc, FieldElement::ONE);

        let table = |kind, scaling| -> Vec<Vec<Vec<u64>>> {
            (1..=params.m())
                .map(|j| {
                    (0..params.d(j) as i64)
                        .map(|i| {
                            build_class(params, j, i, kind, scaling)
                                .expect("level in range")
                                .elements
                        })
                        .collect()
                })
                .collect()
        };
        Ok(Self {
            lifted: table(ModulusKind::PPower, Scaling::Lifted),
            doubled: table(ModulusKind::PPower, Scaling::Doubled),
            odd: table(ModulusKind::TwoPPower, Scaling::Lifted),
            ctx,
            params: *params,
            beta,
            powers,
        })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn beta(&self) -> FieldElement {
        self.beta
    }

    /// `beta^{a t}` summed over `t` in the given residues.
    fn sum_over(&self, residues: &[u64], a: u64) -> FieldElement {
        let pm = self.params.pm();
        residues.iter().fold(FieldElement::ZERO, |acc, &t| {
            acc + self.powers[((a as u128 * t as u128) % pm as u128) as usize]
        })
    }

    /// Sum over classes `i + v`, `0 <= i < delta_j`, of one class table.
    fn half_sum(&self, table: &[Vec<Vec<u64>>], v: i64, j: u32, a: u64) -> FieldElement {
        let d = self.params.d(j) as i64;
        let classes = &table[j as usize - 1];
        (0..self.params.delta(j) as i64).fold(FieldElement::ZERO, |acc, i| {
            acc + self.sum_over(&classes[(i + v).rem_euclid(d) as usize], a)
        })
    }

    /// `Hbar_v^{(p^j)}(beta^a)`, the sum of `beta^{a t}` over
    /// `t in U_{i < delta_j} p^{m-j} D_{i+v}^{(p^j)}`.
    pub fn hbar_eval(&self, v: i64, j: u32, a: u64) -> FieldElement {
        self.half_sum(&self.lifted, v, j, a)
    }

    /// `H_v^{(p^j)}(beta^a)`, summed over the doubled classes directly.
    pub fn h_doubled_eval(&self, v: i64, j: u32, a: u64) -> FieldElement {
        self.half_sum(&self.doubled, v, j, a)
    }

    /// `H_v^{(2p^j)}(beta^a)`, summed over the odd classes directly.
    pub fn h_odd_eval(&self, v: i64, j: u32, a: u64) -> FieldElement {
        self.half_sum(&self.odd, v, j, a)
    }

    /// `A_{l,v} = sum_{s=1}^{l} Hbar_v^{(p^s)}(beta)`.
    pub fn a_sum(&self, l: u32, v: i64) -> FieldElement {
        (1..=l).fold(FieldElement::ZERO, |acc, s| acc + self.hbar_eval(v, s, 1))
    }

    /// `s(beta^a)` for all `a in Z_{p^m}`; exponents are bucketed by their
    /// residue modulo `p^m` before evaluation.
    pub fn eval_support_at_roots(&self, seq: &BinarySequence) -> Result<RootEvaluation> {
        let pm = self.params.pm() as usize;
        if seq.period() != 2 * pm {
            return Err(Error::PeriodMismatch {
                got: seq.period(),
                expected: 2 * pm,
            });
        }
        let mut parity = vec![false; pm];
        for (t, bit) in seq.bits().enumerate() {
            if bit {
                parity[t % pm] ^= true;
            }
        }
        let support: Vec<u64> = (0..pm as u64).filter(|&r| parity[r as usize]).collect();
        let values: Vec<FieldElement> = (0..pm as u64).map(|a| self.sum_over(&support, a)).collect();
        let zero_count = values.iter().filter(|v| v.is_zero()).count();
        Ok(RootEvaluation { values, zero_count })
    }

    /// Splits `a != 0` as `p^l u` and returns `(l, k)` with `u` in
    /// `D_k^{(p^{m-l})}`.
    pub fn locate(&self, a: u64) -> (u32, u64) {
        let p = self.params.p();
        let (mut l, mut u) = (0u32, a);
        while u % p == 0 {
            u /= p;
            l += 1;
        }
        let level = self.params.m() - l;
        let modulus = self.params.p_pow(level);
        let k = discrete_log(self.params.g(), u % modulus, modulus).expect("u is a unit");
        (l, k % self.params.d(level))
    }

    /// `Hbar_v^{(p)}(beta) + Hbar_{v+delta_1}^{(p)}(beta) = 1`, and the
    /// analogous sum is 0 at levels `j >= 2`; also the unit sums
    /// `sum_{t in p^{m-j} Z_{p^j}^*} beta^t` directly.
    pub fn check_half_sum_lemma(&self) -> IdentityCheck {
        let mut check = IdentityCheck::new("half-class sums");
        let p = self.params.p();
        let m = self.params.m();
        for j in 1..=m {
            let expected = FieldElement::scalar(u64::from(j == 1));
            let delta = self.params.delta(j) as i64;
            for v in 0..self.params.d(j) as i64 {
                let got = self.hbar_eval(v, j, 1) + self.hbar_eval(v + delta, j, 1);
                check.record(got == expected, || format!("j={j} v={v}: {got:?}"));
            }
            let scale = self.params.p_pow(m - j);
            let units: Vec<u64> = (1..self.params.p_pow(j))
                .filter(|t| t % p != 0)
                .map(|t| t * scale)
                .collect();
            let got = self.sum_over(&units, 1);
            check.record(got == expected, || format!("unit sum at j={j}: {got:?}"));
        }
        check
    }

    /// The three cases for `Hbar_v^{(p^j)}(beta^a)` with `a = p^l u`,
    /// `u in D_k^{(p^{m-l})}`, over every `a != 0`, level and shift.
    pub fn check_valuation_cases(&self) -> IdentityCheck {
        let mut check = IdentityCheck::new("valuation cases");
        let p = self.params.p();
        let m = self.params.m();
        for a in 1..self.params.pm() {
            let (l, k) = self.locate(a);
            for v in 0..self.params.d(m) as i64 {
                let vk = v + k as i64;
                for j in 1..=m {
                    let expected = if j <= l {
                        FieldElement::scalar(p.pow(j - 1) * (p - 1) / 2)
                    } else if j == l + 1 {
                        FieldElement::scalar((p.pow(l) - 1) / 2) + self.hbar_eval(vk, 1, 1)
                    } else {
                        self.hbar_eval(vk, j - l, 1)
                    };
                    let got = self.hbar_eval(v, j, a);
                    check.record(got == expected, || {
                        format!("a={a} v={v} j={j}: {got:?} != {expected:?}")
                    });
                }
            }
        }
        check
    }

    /// `H_v^{(p^j)}(beta^a) = Hbar_v^{(p^j)}(beta^a)^2` and
    /// `H_v^{(2p^j)}(beta^a) = Hbar_v^{(p^j)}(beta^a)`.
    pub fn check_frobenius(&self) -> IdentityCheck {
        let mut check = IdentityCheck::new("frobenius relations");
        for a in 0..self.params.pm() {
            for j in 1..=self.params.m() {
                for v in 0..self.params.d(j) as i64 {
                    let hbar = self.hbar_eval(v, j, a);
                    let sq = self.ctx.square(hbar);
                    let doubled = self.h_doubled_eval(v, j, a);
                    let odd = self.h_odd_eval(v, j, a);
                    check.record(doubled == sq, || format!("doubled a={a} j={j} v={v}"));
                    check.record(odd == hbar, || format!("odd a={a} j={j} v={v}"));
                }
            }
        }
        check
    }

    /// `A_{l,v} + A_{l,v+delta_l} = 1`.
    pub fn check_a_sum_complement(&self) -> IdentityCheck {
        let mut check = IdentityCheck::new("A-sum complements");
        for l in 1..=self.params.m() {
            let delta = self.params.delta(l) as i64;
            for v in 0..self.params.d(l) as i64 {
                let got = self.a_sum(l, v) + self.a_sum(l, v + delta);
                check.record(got == FieldElement::ONE, || format!("l={l} v={v}: {got:?}"));
            }
        }
        check
    }

    /// Compares direct evaluations of `s(beta^a)` against
    /// `1 + S + S^2` (standard) or `S + S^2` (modified), where
    /// `S = sum_{s=1}^{m-l} Hbar_{b+k}^{(p^s)}(beta)`.
    pub fn check_closed_form(&self, variant: Variant, direct: &RootEvaluation) -> IdentityCheck {
        let mut check = IdentityCheck::new(match variant {
            Variant::Standard => "closed form of s(beta^a)",
            Variant::Modified => "closed form of s~(beta^a)",
        });
        check.record(direct.values[0] == FieldElement::ONE, || {
            "value at a = 0 is not 1".into()
        });
        let b = self.params.b() as i64;
        for a in 1..self.params.pm() {
            let (l, k) = self.locate(a);
            let sum =
                (1..=self.params.m() - l).fold(FieldElement::ZERO, |acc, s| acc + self.hbar_eval(b + k as i64, s, 1));
            let mut expected = sum + self.ctx.square(sum);
            if variant == Variant::Standard {
                expected += FieldElement::ONE;
            }
            let got = direct.values[a as usize];
            check.record(got == expected, || format!("a={a}: {got:?} != {expected:?}"));
        }
        check
    }

    /// Subfield membership of `A_{l,v}` for every level and every
    /// `v in [0, d_l)`, asserting each clause that applies to the
    /// residue class `h` of 2.
    pub fn subfield_membership_check(&self, case: &CaseClass) -> MembershipReport {
        let ps = &self.params;
        let h = case.h;
        let h1 = h % ps.d(1);
        let delta1 = ps.delta(1);
        let first: Vec<FieldElement> = (0..ps.d(1) as i64).map(|v| self.a_sum(1, v)).collect();
        let in_f2 = |x| self.ctx.in_f2(x);
        let in_f4 = |x| self.ctx.in_f4(x);

        let mut report = MembershipReport {
            rows: Vec::new(),
            clauses: Vec::new(),
            observations: Vec::new(),
        };
        for l in 1..=ps.m() {
            let values: Vec<FieldElement> = (0..ps.d(l) as i64).map(|v| self.a_sum(l, v)).collect();
            for (v, &x) in values.iter().enumerate() {
                report.rows.push(MembershipRow {
                    level: l,
                    v: v as u64,
                    in_f2: in_f2(x),
                    in_f4: in_f4(x),
                });
            }
            let all = |pred: &dyn Fn(FieldElement) -> bool| values.iter().all(|&x| pred(x));
            let first_all = |pred: &dyn Fn(FieldElement) -> bool| first.iter().all(|&x| pred(x));
            let mut applied = Vec::new();

            if h % ps.d(l) == 0 {
                applied.push((MembershipClause::TrivialClassInF2, all(&in_f2)));
            }
            if h1 != 0 {
                applied.push((MembershipClause::NontrivialClassNotInF2, all(&|x| !in_f2(x))));
            }
            if l >= 2 && h1 == 0 && h % ps.d(2) != 0 {
                let ok = first_all(&in_f2) && all(&|x| !in_f4(x));
                applied.push((MembershipClause::PlusOneAtFirstLevelOnly, ok));
            }
            if l >= 2 && h1 == delta1 && h % ps.d(2) != ps.delta(2) {
                let ok = first_all(&|x| in_f4(x) && !in_f2(x)) && all(&|x| !in_f4(x));
                applied.push((MembershipClause::MinusOneAtFirstLevelOnly, ok));
            }
            if h % delta1 != 0 {
                applied.push((MembershipClause::HalfOrderNotDividing, all(&|x| !in_f4(x))));
            }

            let settles_f4 = applied
                .iter()
                .any(|(c, _)| *c != MembershipClause::NontrivialClassNotInF2);
            if l >= 2 && !settles_f4 {
                let f2 = values.iter().filter(|&&x| in_f2(x)).count();
                let f4 = values.iter().filter(|&&x| in_f4(x)).count();
                report.observations.push(format!(
                    "level {l}: no GF(4) clause applies (h = {h}, wieferich = {}); {f2} of {} values in GF(2), {f4} in GF(4)",
                    case.wieferich,
                    values.len()
                ));
            }
            report.clauses.extend(applied.into_iter().map(|(c, ok)| (l, c, ok)));
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::classify_case;
    use crate::sequence::generate;

    fn evaluator(p: u64, m: u32, f: u64) -> RootEvaluator {
        let params = SequenceParams::new(p, m, f, 0, None).unwrap();
        RootEvaluator::new(FieldCtx::for_params(&params).unwrap(), &params).unwrap()
    }

    #[test]
    fn smallest_irreducibles() {
        assert_eq!(find_irreducible(1), F2Poly::from_exponents([1, 0]));
        assert_eq!(find_irreducible(2), F2Poly::from_exponents([2, 1, 0]));
        assert_eq!(find_irreducible(3), F2Poly::from_exponents([3, 1, 0]));
        assert_eq!(find_irreducible(4), F2Poly::from_exponents([4, 1, 0]));
        assert_eq!(find_irreducible(8), F2Poly::from_exponents([8, 4, 3, 1, 0]));
        let second: Vec<F2Poly> = irreducibles(3).collect();
        assert_eq!(
            second,
            vec![F2Poly::from_exponents([3, 1, 0]), F2Poly::from_exponents([3, 2, 0])]
        );
        assert_eq!(find_irreducible(64).degree(), Some(64));
    }

    #[test]
    fn rabin_rejects_products_of_coprime_degrees() {
        // (x + 1)(x^2 + x + 1)(x^3 + x + 1) has degree 6 and passes the
        // weaker test x^{2^{6/q}} != x for q = 2, 3.
        let f = &(&F2Poly::from_exponents([1, 0]) * &F2Poly::from_exponents([2, 1, 0]))
            * &F2Poly::from_exponents([3, 1, 0]);
        assert_eq!(f.degree(), Some(6));
        assert!(!is_irreducible(&f));
        let irreducible_sextics = irreducibles(6).count();
        assert_eq!(irreducible_sextics, 9);
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        // (1/n) sum_{d | n} mu(d) 2^{n/d}, minus the polynomial x in degree 1.
        for (n, count) in [
            (1u32, 1usize),
            (2, 1),
            (3, 2),
            (4, 3),
            (5, 6),
            (7, 18),
            (8, 30),
            (10, 99),
        ] {
            assert_eq!(irreducibles(n).count(), count, "degree {n}");
        }
    }

    #[test]
    fn field_too_large_is_refused() {
        assert_eq!(FieldCtx::new(13, 2), Err(Error::FieldTooLarge(156)));
        assert_eq!(FieldCtx::degree_for(5, 2), Ok(20));
        assert_eq!(FieldCtx::degree_for(7, 2), Ok(21));
        assert_eq!(FieldCtx::degree_for(31, 1), Ok(5));
    }

    #[test]
    fn with_modulus_validates() {
        let sq = &F2Poly::from_exponents([2, 1, 0]) * &F2Poly::from_exponents([2, 1, 0]);
        assert_eq!(FieldCtx::with_modulus(5, 1, sq), Err(Error::NotIrreducible(4)));
        assert!(FieldCtx::with_modulus(5, 1, F2Poly::from_exponents([4, 3, 0])).is_ok());
    }

    #[test]
    fn field_arithmetic_laws() {
        let ctx = FieldCtx::new(5, 2).unwrap();
        let a = ctx.element(&F2Poly::from_exponents([19, 7, 2]));
        let b = ctx.element(&F2Poly::from_exponents([13, 1]));
        assert_eq!(ctx.square(a + b), ctx.square(a) + ctx.square(b));
        assert_eq!(ctx.pow(a, (1 << 20) - 1), FieldElement::ONE);
        assert_eq!(ctx.mul(a, b), ctx.mul(b, a));
        assert!(ctx.in_f2(FieldElement::ONE) && ctx.in_f2(FieldElement::ZERO));
        // x^{(2^20 - 1) / 3} generates GF(4).
        let w = ctx.pow(ctx.element(&F2Poly::x()), ((1 << 20) - 1) / 3);
        assert!(ctx.in_f4(w) && !ctx.in_f2(w));
        assert_eq!(ctx.square(w) + w, FieldElement::ONE);
    }

    #[test]
    fn roots_of_unity() {
        for (p, m) in [(5u64, 1u32), (5, 2), (7, 2), (31, 1), (3, 3)] {
            let ctx = FieldCtx::new(p, m).unwrap();
            let beta = find_root_of_unity(&ctx);
            let pm = p.pow(m);
            assert_eq!(ctx.pow(beta, pm), FieldElement::ONE);
            assert_ne!(ctx.pow(beta, pm / p), FieldElement::ONE);
            for l in 1..m {
                let beta_l = ctx.pow(beta, p.pow(m - l));
                assert_eq!(ctx.pow(beta_l, p.pow(l)), FieldElement::ONE);
                assert_ne!(ctx.pow(beta_l, p.pow(l - 1)), FieldElement::ONE);
            }
        }
    }

    #[test]
    fn zero_counts_for_examples() {
        let ev = evaluator(5, 2, 2);
        let params = SequenceParams::new(5, 2, 2, 0, Some(3)).unwrap();
        let z = ev.eval_support_at_roots(&generate(&params, Variant::Standard)).unwrap();
        assert_eq!(z.values[0], FieldElement::ONE);
        assert_eq!(z.zero_count, 4);

        let ev = evaluator(7, 2, 2);
        let params = SequenceParams::new(7, 2, 2, 0, Some(3)).unwrap();
        let z = ev.eval_support_at_roots(&generate(&params, Variant::Standard)).unwrap();
        assert_eq!(z.zero_count, 0);
        let other = BinarySequence::from_bits(&[true; 10]);
        assert!(matches!(
            ev.eval_support_at_roots(&other),
            Err(Error::PeriodMismatch { .. })
        ));
    }

    #[test]
    fn scalar_case_values() {
        // a = p u with j = 1 <= l = 1: value (p - 1) / 2 mod 2.
        let ev = evaluator(7, 2, 2);
        assert_eq!(ev.hbar_eval(0, 1, 7), FieldElement::scalar(3));
        let ev = evaluator(5, 2, 2);
        assert_eq!(ev.hbar_eval(1, 1, 10), FieldElement::scalar(2));
    }

    #[test]
    fn identities_hold_for_examples() {
        for (p, m, f) in [(7u64, 2u32, 2u64), (5, 2, 2), (5, 2, 4), (31, 1, 2), (3, 2, 2)] {
            let ev = evaluator(p, m, f);
            for check in [
                ev.check_half_sum_lemma(),
                ev.check_valuation_cases(),
                ev.check_frobenius(),
                ev.check_a_sum_complement(),
            ] {
                assert!(check.passed(), "{p} {m} {f} {}: {:?}", check.name, check.failures);
                assert!(check.checked > 0);
            }
        }
    }

    #[test]
    fn a_sum_subfields() {
        let ev = evaluator(7, 2, 2);
        for v in 0..2 {
            let a = ev.a_sum(1, v);
            assert_eq!(ev.ctx().square(a), a);
        }
        let ev = evaluator(5, 2, 2);
        for v in 0..2 {
            let a = ev.a_sum(1, v);
            assert_eq!(ev.ctx().square(a), a + FieldElement::ONE);
        }
    }

    #[test]
    fn membership_clauses_for_examples() {
        let cases = [
            (7u64, 2u32, 2u64, MembershipClause::PlusOneAtFirstLevelOnly),
            (5, 2, 2, MembershipClause::MinusOneAtFirstLevelOnly),
            (5, 1, 4, MembershipClause::HalfOrderNotDividing),
        ];
        for (p, m, f, clause) in cases {
            let params = SequenceParams::new(p, m, f, 0, Some(3)).unwrap();
            let ev = evaluator(p, m, f);
            let report = ev.subfield_membership_check(&classify_case(&params));
            assert!(report.passed(), "{report:?}");
            assert!(report.clauses.iter().any(|&(l, c, ok)| l == m && c == clause && ok));
        }
        let ev = evaluator(7, 2, 2);
        let params = SequenceParams::new(7, 2, 2, 0, Some(3)).unwrap();
        let report = ev.subfield_membership_check(&classify_case(&params));
        assert!(report.rows.iter().filter(|r| r.level == 1).all(|r| r.in_f2));
        assert!(report.rows.iter().filter(|r| r.level == 2).all(|r| !r.in_f4));
    }
}

//! Generalized cyclotomic classes `D_i^{(s)}` for `s = p^j, 2p^j`, their
//! embeddings into `Z_{p^m}` and `Z_{2p^m}`, and the support sets of the
//! two sequence families.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::{pow_mod, SequenceParams};

/// Which modulus a class lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModulusKind {
    /// `s = p^j`
    PPower,
    /// `s = 2p^j`
    TwoPPower,
}

/// Multiplier applied to a class before reducing into the ambient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scaling {
    /// The class itself, inside `Z_s`.
    Unit,
    /// `p^{m-j} D`, inside `Z_{p^m}` (for `s = p^j`) or `Z_{2p^m}` (for `s = 2p^j`).
    Lifted,
    /// `2 p^{m-j} D^{(p^j)}`, inside `Z_{2p^m}`.
    Doubled,
}

/// One generalized cyclotomic class, possibly scaled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicClass {
    pub level: u32,
    /// Class index reduced modulo `d_j`.
    pub index: u64,
    pub kind: ModulusKind,
    pub multiplier: u64,
    /// `multiplier * s`.
    pub ambient: u64,
    /// Ascending residues modulo `ambient`; exactly `e` of them.
    pub elements: Vec<u64>,
}

/// `{ a * g^{i + d_j t} mod (a s) : 0 <= t < e }`.
pub fn build_class(
    params: &SequenceParams,
    j: u32,
    i: i64,
    kind: ModulusKind,
    scaling: Scaling,
) -> Result<CyclotomicClass> {
    let m = params.m();
    if j == 0 || j > m {
        return Err(Error::LevelOutOfRange { j, m });
    }
    let d = params.d(j);
    let index = i.rem_euclid(d as i64) as u64;
    let pj = params.p_pow(j);
    let s = match kind {
        ModulusKind::PPower => pj,
        ModulusKind::TwoPPower => 2 * pj,
    };
    let lift = params.p_pow(m - j);
    let multiplier = match (scaling, kind) {
        (Scaling::Unit, _) => 1,
        (Scaling::Lifted, _) => lift,
        (Scaling::Doubled, ModulusKind::PPower) => 2 * lift,
        (Scaling::Doubled, ModulusKind::TwoPPower) => return Err(Error::UnsupportedScaling),
    };
    let g = params.g();
    let step = pow_mod(g, d, s);
    let mut x = pow_mod(g, index, s);
    let mut elements = Vec::with_capacity(params.e() as usize);
    for _ in 0..params.e() {
        elements.push(x * multiplier);
        x = (x as u128 * step as u128 % s as u128) as u64;
    }
    elements.sort_unstable();
    Ok(CyclotomicClass {
        level: j,
        index,
        kind,
        multiplier,
        ambient: multiplier * s,
        elements,
    })
}

/// Standard sequence `s` or modified sequence `s~`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Variant {
    Standard,
    Modified,
}

impl Variant {
    pub fn as_str(&self) -> &'static str {
        match self {
            Variant::Standard => "STANDARD",
            Variant::Modified => "MODIFIED",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The sets `C_1` / `C_0` (or their modified counterparts) as dense
/// membership bitmaps over `Z_{2p^m}`. Both bitmaps are built directly from
/// their defining unions, so the partition property is checkable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSet {
    pub variant: Variant,
    ones: Vec<bool>,
    zeros: Vec<bool>,
}

impl SupportSet {
    pub fn period(&self) -> usize {
        self.ones.len()
    }

    pub fn is_one(&self, residue: usize) -> bool {
        self.ones[residue]
    }

    pub fn is_zero(&self, residue: usize) -> bool {
        self.zeros[residue]
    }

    pub fn ones_bitmap(&self) -> &[bool] {
        &self.ones
    }

    pub fn ones_count(&self) -> usize {
        self.ones.iter().filter(|&&b| b).count()
    }

    pub fn zeros_count(&self) -> usize {
        self.zeros.iter().filter(|&&b| b).count()
    }

    /// True iff the two sets are disjoint and cover `Z_{2p^m}`.
    pub fn is_partition(&self) -> bool {
        self.ones.iter().zip(&self.zeros).all(|(&a, &b)| a != b)
    }
}

pub fn build_support(params: &SequenceParams, variant: Variant) -> SupportSet {
    let n = params.period();
    let mut ones = vec![false; n];
    let mut zeros = vec![false; n];
    ones[0] = true;
    zeros[params.pm() as usize] = true;

    let b = params.b() as i64;
    for j in 1..=params.m() {
        let d = params.d(j) as i64;
        let delta = params.delta(j) as i64;
        for i in 0..d {
            let low = i < delta;
            let doubled = build_class(params, j, i + b, ModulusKind::PPower, Scaling::Doubled).expect("level in range");
            let odd = build_class(params, j, i + b, ModulusKind::TwoPPower, Scaling::Lifted).expect("level in range");
            // Standard: both kinds follow the low/high split of i.
            // Modified: the doubled classes take the opposite half.
            let doubled_is_one = match variant {
                Variant::Standard => low,
                Variant::Modified => !low,
            };
            let target = if doubled_is_one { &mut ones } else { &mut zeros };
            for &x in &doubled.elements {
                target[x as usize] = true;
            }
            let target = if low { &mut ones } else { &mut zeros };
            for &x in &odd.elements {
                target[x as usize] = true;
            }
        }
    }
    SupportSet { variant, ones, zeros }
}

/// A failed tiling found by [`verify_partitions`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionDefect {
    /// `residue` is covered more than once.
    Collision { ring: String, residue: u64 },
    /// `residue` is not covered.
    Gap { ring: String, residue: u64 },
}

impl fmt::Display for PartitionDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionDefect::Collision { ring, residue } => {
                write!(f, "{residue} is covered twice in {ring}")
            }
            PartitionDefect::Gap { ring, residue } => write!(f, "{residue} is not covered in {ring}"),
        }
    }
}

struct Cover {
    ring: String,
    counts: Vec<u8>,
    expected: Vec<bool>,
}

impl Cover {
    fn new(ring: String, size: u64, expected: impl Fn(u64) -> bool) -> Self {
        Self {
            ring,
            counts: vec![0; size as usize],
            expected: (0..size).map(expected).collect(),
        }
    }

    fn add(&mut self, residues: &[u64]) -> std::result::Result<(), PartitionDefect> {
        for &r in residues {
            let c = &mut self.counts[r as usize];
            if *c > 0 || !self.expected[r as usize] {
                return Err(PartitionDefect::Collision {
                    ring: self.ring.clone(),
                    residue: r,
                });
            }
            *c += 1;
        }
        Ok(())
    }

    fn finish(self) -> std::result::Result<(), PartitionDefect> {
        match (0..self.counts.len()).find(|&r| self.expected[r] && self.counts[r] == 0) {
            Some(r) => Err(PartitionDefect::Gap {
                ring: self.ring,
                residue: r as u64,
            }),
            None => Ok(()),
        }
    }
}

/// Checks that the classes tile `Z_{p^j}^*` for every level, that the
/// lifted classes plus `{0}` tile `Z_{p^m}`, and that the doubled and lifted
/// classes plus `{0, p^m}` tile `Z_{2p^m}`.
pub fn verify_partitions(params: &SequenceParams) -> std::result::Result<(), PartitionDefect> {
    let m = params.m();
    let p = params.p();
    let pm = params.pm();
    let class = |j, i, kind, scaling| build_class(params, j, i as i64, kind, scaling).expect("level in range");

    for j in 1..=m {
        let pj = params.p_pow(j);
        let mut units = Cover::new(format!("Z_{pj}^*"), pj, |r| r % p != 0);
        for i in 0..params.d(j) {
            units.add(&class(j, i, ModulusKind::PPower, Scaling::Unit).elements)?;
        }
        units.finish()?;
    }

    let mut ring = Cover::new(format!("Z_{pm}"), pm, |_| true);
    ring.add(&[0])?;
    for j in 1..=m {
        for i in 0..params.d(j) {
            ring.add(&class(j, i, ModulusKind::PPower, Scaling::Lifted).elements)?;
        }
    }
    ring.finish()?;

    let mut ring = Cover::new(format!("Z_{}", 2 * pm), 2 * pm, |_| true);
    ring.add(&[0, pm])?;
    for j in 1..=m {
        for i in 0..params.d(j) {
            ring.add(&class(j, i, ModulusKind::PPower, Scaling::Doubled).elements)?;
            ring.add(&class(j, i, ModulusKind::TwoPPower, Scaling::Lifted).elements)?;
        }
    }
    ring.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn params(p: u64, m: u32, f: u64, b: i64) -> SequenceParams {
        SequenceParams::new(p, m, f, b, Some(3)).unwrap()
    }

    #[test]
    fn small_classes() {
        let ps = params(5, 1, 2, 0);
        let c0 = build_class(&ps, 1, 0, ModulusKind::PPower, Scaling::Unit).unwrap();
        assert_eq!(c0.elements, vec![1, 4]);
        let c1 = build_class(&ps, 1, 1, ModulusKind::PPower, Scaling::Unit).unwrap();
        assert_eq!(c1.elements, vec![2, 3]);
        let odd = build_class(&ps, 1, 1, ModulusKind::TwoPPower, Scaling::Unit).unwrap();
        // 3^1 = 3, 3^3 = 27 = 7 (mod 10)
        assert_eq!(odd.elements, vec![3, 7]);
        let doubled = build_class(&ps, 1, 0, ModulusKind::PPower, Scaling::Doubled).unwrap();
        assert_eq!(doubled.elements, vec![2, 8]);
        assert_eq!(doubled.ambient, 10);
    }

    #[test]
    fn invalid_class_requests() {
        let ps = params(5, 2, 2, 0);
        assert_eq!(
            build_class(&ps, 3, 0, ModulusKind::PPower, Scaling::Unit),
            Err(Error::LevelOutOfRange { j: 3, m: 2 })
        );
        assert_eq!(
            build_class(&ps, 0, 0, ModulusKind::PPower, Scaling::Unit),
            Err(Error::LevelOutOfRange { j: 0, m: 2 })
        );
        assert_eq!(
            build_class(&ps, 1, 0, ModulusKind::TwoPPower, Scaling::Doubled),
            Err(Error::UnsupportedScaling)
        );
    }

    #[test]
    fn partitions_hold_for_examples() {
        assert_eq!(verify_partitions(&params(7, 2, 2, 0)), Ok(()));
        assert_eq!(verify_partitions(&params(5, 1, 2, 0)), Ok(()));
        assert_eq!(verify_partitions(&params(5, 2, 4, 0)), Ok(()));
    }

    #[test]
    fn partition_sizes_for_p5_m1() {
        // {0} + e * d_1 doubled + e * d_1 odd + {p^m} = 1 + 4 + 4 + 1
        let ps = params(5, 1, 2, 0);
        let total: usize = (0..2)
            .flat_map(|i| {
                [
                    build_class(&ps, 1, i, ModulusKind::PPower, Scaling::Doubled).unwrap(),
                    build_class(&ps, 1, i, ModulusKind::TwoPPower, Scaling::Lifted).unwrap(),
                ]
            })
            .map(|c| c.elements.len())
            .sum();
        assert_eq!(total + 2, 10);
    }

    #[test]
    fn cover_reports_defects() {
        let mut c = Cover::new("Z_4".into(), 4, |_| true);
        c.add(&[0, 1]).unwrap();
        assert_eq!(
            c.add(&[1]),
            Err(PartitionDefect::Collision {
                ring: "Z_4".into(),
                residue: 1
            })
        );
        let mut c = Cover::new("Z_4".into(), 4, |_| true);
        c.add(&[0, 1, 3]).unwrap();
        assert_eq!(
            c.finish(),
            Err(PartitionDefect::Gap {
                ring: "Z_4".into(),
                residue: 2
            })
        );
    }

    #[test]
    fn support_counts() {
        let s = build_support(&params(5, 2, 2, 0), Variant::Standard);
        assert_eq!(s.ones_count(), 25);
        assert_eq!(s.zeros_count(), 25);
        assert!(s.is_one(0));
        assert!(s.is_zero(25));
        assert!(s.is_partition());
    }

    #[test]
    fn modified_swaps_only_even_residues() {
        let ps = params(7, 2, 2, 0);
        let std = build_support(&ps, Variant::Standard);
        let modi = build_support(&ps, Variant::Modified);
        for r in 1..ps.period() {
            if r == ps.pm() as usize {
                continue;
            }
            if r % 2 == 1 {
                assert_eq!(std.is_one(r), modi.is_one(r), "odd residue {r}");
            } else {
                assert_ne!(std.is_one(r), modi.is_one(r), "even residue {r}");
            }
        }
    }

    fn grid() -> impl Strategy<Value = SequenceParams> {
        let cases = vec![(3u64, 2u64), (5, 2), (5, 4), (7, 2), (11, 2), (13, 4), (17, 4), (17, 8)];
        (prop::sample::select(cases), 1u32..=2, -500i64..500)
            .prop_map(|((p, f), m, b)| SequenceParams::new(p, m, f, b, None).unwrap())
    }

    proptest! {
        #[test]
        fn partitions_always_hold(ps in grid()) {
            prop_assert_eq!(verify_partitions(&ps), Ok(()));
        }

        #[test]
        fn supports_are_balanced_partitions(ps in grid()) {
            for v in [Variant::Standard, Variant::Modified] {
                let s = build_support(&ps, v);
                prop_assert!(s.is_partition());
                prop_assert_eq!(s.ones_count() as u64, ps.pm());
                prop_assert_eq!(s.zeros_count() as u64, ps.pm());
                prop_assert!(s.is_one(0));
                prop_assert!(s.is_zero(ps.pm() as usize));
            }
        }

        #[test]
        fn support_is_periodic_in_b(ps in grid()) {
            let shifted = ps.with_b(ps.b() as i64 + ps.d(ps.m()) as i64);
            prop_assert_eq!(shifted, ps);
            // Bypass the stored reduction: classes with index i and i + d_j agree.
            for j in 1..=ps.m() {
                let d = ps.d(j) as i64;
                for i in 0..d {
                    for kind in [ModulusKind::PPower, ModulusKind::TwoPPower] {
                        let a = build_class(&ps, j, i, kind, Scaling::Lifted).unwrap();
                        let b = build_class(&ps, j, i + d, kind, Scaling::Lifted).unwrap();
                        prop_assert_eq!(a, b);
                    }
                }
            }
        }

        #[test]
        fn classes_are_disjoint_and_sized(ps in grid()) {
            for j in 1..=ps.m() {
                let pj = ps.p_pow(j);
                for kind in [ModulusKind::PPower, ModulusKind::TwoPPower] {
                    let mut seen = std::collections::HashSet::new();
                    for i in 0..ps.d(j) as i64 {
                        let c = build_class(&ps, j, i, kind, Scaling::Unit).unwrap();
                        prop_assert_eq!(c.elements.len() as u64, ps.e());
                        for &x in &c.elements {
                            prop_assert!(seen.insert(x), "class overlap at {}", x);
                        }
                        // Scaling is injective.
                        let lifted = build_class(&ps, j, i, kind, Scaling::Lifted).unwrap();
                        let mut distinct = lifted.elements.clone();
                        distinct.dedup();
                        prop_assert_eq!(distinct.len(), c.elements.len());
                        prop_assert!(lifted.elements.iter().all(|&x| x < 2 * ps.pm()));
                    }
                    let modulus = if kind == ModulusKind::PPower { pj } else { 2 * pj };
                    let units = (1..modulus).filter(|&x| crate::numtheory::gcd(x, modulus) == 1).count();
                    prop_assert_eq!(seen.len(), units);
                }
            }
        }
    }
}

//! Characters of polynomial GL(3) (equivalently SL(3)) representations,
//! with exact integer multiplicities.
//!
//! A character is a finitely supported multiplicity map on monomial weights
//! in three variables.  Schur characters are generated from Gelfand-Tsetlin
//! patterns; symmetric and exterior powers go through Adams operations and
//! the Newton recurrence with rational scratch that must cancel to integers;
//! decomposition into the Schur basis is greedy leading-term elimination.
//!
//! Virtual characters (negative multiplicities) are legal inputs to
//! [`Character::decompose`] and arise from kernel/cokernel bookkeeping, but
//! symmetric and exterior powers reject them.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// A monomial weight: exponents of the three variables.
///
/// Ordered by total degree first, then lexicographically; for an
/// S3-symmetric character the maximal weight in this order is dominant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Weight(pub [u32; 3]);

impl Weight {
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.0[0] >= self.0[1] && self.0[1] >= self.0[2]
    }

    fn plus(&self, other: &Weight) -> Weight {
        Weight([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    fn scaled(&self, k: u32) -> Weight {
        Weight([self.0[0] * k, self.0[1] * k, self.0[2] * k])
    }

    fn permutations(&self) -> [Weight; 6] {
        let [a, b, c] = self.0;
        [
            Weight([a, b, c]),
            Weight([a, c, b]),
            Weight([b, a, c]),
            Weight([b, c, a]),
            Weight([c, a, b]),
            Weight([c, b, a]),
        ]
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree(), self.0).cmp(&(other.degree(), other.0))
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A partition with at most three parts, indexing a Schur character.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition([u32; 3]);

impl Partition {
    pub fn new(l1: i64, l2: i64, l3: i64) -> Result<Self> {
        if l3 < 0 || l2 < l3 || l1 < l2 || l1 > u32::MAX as i64 {
            return Err(Error::InvalidPartition(l1, l2, l3));
        }
        Ok(Partition([l1 as u32, l2 as u32, l3 as u32]))
    }

    /// A single row `(n, 0, 0)`, i.e. the n-th symmetric power of the
    /// standard representation.
    pub fn row(n: u32) -> Self {
        Partition([n, 0, 0])
    }

    pub fn parts(&self) -> [u32; 3] {
        self.0
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// The SL(3)-normalized view `(l1 - l3, l2 - l3)`.
    pub fn sl3_normalized(&self) -> (u32, u32) {
        (self.0[0] - self.0[2], self.0[1] - self.0[2])
    }

    /// Weyl dimension formula:
    /// `(l1 - l2 + 1)(l2 - l3 + 1)(l1 - l3 + 2) / 2`.
    pub fn weyl_dim(&self) -> BigInt {
        let [l1, l2, l3] = self.0.map(|p| p as u64);
        BigInt::from((l1 - l2 + 1) * (l2 - l3 + 1) * (l1 - l3 + 2) / 2)
    }

    /// The Schur character, generated from Gelfand-Tsetlin patterns.
    ///
    /// A pattern consists of `a, b` with `l1 >= a >= l2 >= b >= l3` and
    /// `c` with `a >= c >= b`; it contributes the weight
    /// `(c, a + b - c, |lambda| - a - b)`.
    pub fn schur_char(&self) -> Character {
        let [l1, l2, l3] = self.0;
        let total = l1 + l2 + l3;
        let mut terms: BTreeMap<Weight, BigInt> = BTreeMap::new();
        for a in l2..=l1 {
            for b in l3..=l2 {
                for c in b..=a {
                    let w = Weight([c, a + b - c, total - a - b]);
                    *terms.entry(w).or_insert_with(BigInt::zero) += 1;
                }
            }
        }
        Character { terms }
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

/// A finitely supported integer multiplicity map on weights.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Character {
    terms: BTreeMap<Weight, BigInt>,
}

impl Character {
    pub fn zero() -> Self {
        Character::default()
    }

    /// The trivial character (one-dimensional, weight `(0,0,0)`).
    pub fn trivial() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Weight([0, 0, 0]), BigInt::one());
        Character { terms }
    }

    /// The standard three-dimensional representation.
    pub fn standard() -> Self {
        Partition::row(1).schur_char()
    }

    /// Build from explicit terms; zero multiplicities are dropped.
    pub fn from_terms(items: impl IntoIterator<Item = (Weight, BigInt)>) -> Self {
        let mut ch = Character::zero();
        for (w, m) in items {
            ch.add_term(w, &m);
        }
        ch
    }

    fn add_term(&mut self, w: Weight, delta: &BigInt) {
        if delta.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_insert_with(BigInt::zero);
        *entry += delta;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.terms.iter()
    }

    pub fn multiplicity(&self, w: &Weight) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all multiplicities.
    pub fn dim(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// True when every multiplicity is nonnegative.
    pub fn is_genuine(&self) -> bool {
        self.terms.values().all(|m| !m.is_negative())
    }

    /// The common total degree of all weights, if there is one.
    /// `None` for the zero character and for mixed-degree sums.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut it = self.terms.keys().map(Weight::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Error unless the multiplicity map is invariant under permuting the
    /// three exponents.
    pub fn check_s3_symmetric(&self) -> Result<()> {
        for (w, m) in &self.terms {
            for p in w.permutations() {
                if &self.multiplicity(&p) != m {
                    return Err(Error::AsymmetricCharacter(w.0[0], w.0[1], w.0[2]));
                }
            }
        }
        Ok(())
    }

    fn ensure_genuine(&self) -> Result<()> {
        for (w, m) in &self.terms {
            if m.is_negative() {
                return Err(Error::VirtualCharacter {
                    w0: w.0[0],
                    w1: w.0[1],
                    w2: w.0[2],
                    mult: m.clone(),
                });
            }
        }
        Ok(())
    }

    pub fn scale(&self, k: &BigInt) -> Character {
        if k.is_zero() {
            return Character::zero();
        }
        Character {
            terms: self.terms.iter().map(|(w, m)| (*w, m * k)).collect(),
        }
    }

    /// Weight-multiset convolution: the character of the tensor product.
    pub fn tensor(&self, other: &Character) -> Character {
        let mut out = Character::zero();
        for (w1, m1) in &self.terms {
            for (w2, m2) in &other.terms {
                out.add_term(w1.plus(w2), &(m1 * m2));
            }
        }
        out
    }

    /// Adams operation `psi^k`: every exponent scaled by `k`.
    pub fn adams(&self, k: u32) -> Character {
        Character {
            terms: self.terms.iter().map(|(w, m)| (w.scaled(k), m.clone())).collect(),
        }
    }

    /// Character of the n-th symmetric power, via the Newton recurrence
    /// `n*h_n = sum_{i=1..n} psi^i(x) * h_{n-i}`.
    ///
    /// Negative `n` yields the zero character (the convention used by the
    /// section-dimension formulas).  Rational scratch must cancel: a
    /// non-integral result aborts.
    pub fn sym_power(&self, n: i64) -> Result<Character> {
        self.newton_power(n, false)
    }

    /// Character of the n-th exterior power; `Lambda^0` is trivial.
    pub fn ext_power(&self, n: i64) -> Result<Character> {
        self.newton_power(n, true)
    }

    fn newton_power(&self, n: i64, alternating: bool) -> Result<Character> {
        if n < 0 {
            return Ok(Character::zero());
        }
        self.ensure_genuine()?;
        let n = n as usize;
        let psi: Vec<Character> = (1..=n).map(|i| self.adams(i as u32)).collect();
        let mut layers: Vec<RationalTerms> = vec![RationalTerms::trivial()];
        for m in 1..=n {
            let mut acc = RationalTerms::default();
            for i in 1..=m {
                let sign = if alternating && i % 2 == 0 { -1 } else { 1 };
                acc.add_product(&psi[i - 1], &layers[m - i], sign);
            }
            acc.divide(m as u64);
            layers.push(acc);
        }
        Ok(layers.pop().expect("n >= 0").into_integral())
    }

    /// Greedy decomposition into the Schur basis.
    ///
    /// Repeatedly takes the (degree, lex)-maximal weight with nonzero
    /// multiplicity `m` (dominant for symmetric input, asserted), emits
    /// coefficient `m` at that partition and subtracts `m` times its Schur
    /// character.  Exact: recomposition reproduces the input.
    pub fn decompose(&self) -> Result<SchurDecomposition> {
        self.check_s3_symmetric()?;
        let mut rest = self.clone();
        let mut parts: BTreeMap<Partition, BigInt> = BTreeMap::new();
        while let Some((&w, m)) = rest.terms.last_key_value() {
            assert!(
                w.is_dominant(),
                "internal invariant violated: leading weight {:?} is not dominant",
                w.0
            );
            let m = m.clone();
            let p = Partition(w.0);
            let neg = -&m;
            for (sw, sm) in p.schur_char().terms {
                rest.add_term(sw, &(&sm * &neg));
            }
            parts.insert(p, m);
        }
        Ok(SchurDecomposition { parts })
    }
}

impl std::ops::Add for &Character {
    type Output = Character;
    fn add(self, rhs: &Character) -> Character {
        let mut out = self.clone();
        for (w, m) in &rhs.terms {
            out.add_term(*w, m);
        }
        out
    }
}

impl std::ops::Sub for &Character {
    type Output = Character;
    fn sub(self, rhs: &Character) -> Character {
        let mut out = self.clone();
        for (w, m) in &rhs.terms {
            out.add_term(*w, &-m);
        }
        out
    }
}

/// Rational-coefficient scratch for the Newton recurrence.
#[derive(Default)]
struct RationalTerms {
    terms: BTreeMap<Weight, BigRational>,
}

impl RationalTerms {
    fn trivial() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Weight([0, 0, 0]), BigRational::one());
        RationalTerms { terms }
    }

    fn add_product(&mut self, a: &Character, b: &RationalTerms, sign: i64) {
        let sign = BigRational::from_integer(sign.into());
        for (w1, m1) in &a.terms {
            let m1 = BigRational::from_integer(m1.clone()) * &sign;
            for (w2, m2) in &b.terms {
                let entry = self
                    .terms
                    .entry(w1.plus(w2))
                    .or_insert_with(BigRational::zero);
                *entry += &m1 * m2;
                if entry.is_zero() {
                    self.terms.remove(&w1.plus(w2));
                }
            }
        }
    }

    fn divide(&mut self, k: u64) {
        let k = BigRational::from_integer(k.into());
        for v in self.terms.values_mut() {
            *v /= &k;
        }
    }

    fn into_integral(self) -> Character {
        let mut out = Character::zero();
        for (w, m) in self.terms {
            assert!(
                m.is_integer(),
                "internal invariant violated: non-integral multiplicity {} at weight {:?}",
                m,
                w.0
            );
            out.add_term(w, &m.to_integer());
        }
        out
    }
}

/// A signed integer combination of partition labels.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchurDecomposition {
    parts: BTreeMap<Partition, BigInt>,
}

impl SchurDecomposition {
    pub fn from_parts(items: impl IntoIterator<Item = (Partition, BigInt)>) -> Self {
        let mut parts = BTreeMap::new();
        for (p, c) in items {
            if !c.is_zero() {
                let entry: &mut BigInt = parts.entry(p).or_insert_with(BigInt::zero);
                *entry += c;
                if entry.is_zero() {
                    parts.remove(&p);
                }
            }
        }
        SchurDecomposition { parts }
    }

    /// The decomposition of a single Schur character.
    pub fn single(p: Partition, coeff: impl Into<BigInt>) -> Self {
        SchurDecomposition::from_parts([(p, coeff.into())])
    }

    pub fn parts(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.parts.iter()
    }

    pub fn coefficient(&self, p: &Partition) -> BigInt {
        self.parts.get(p).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// True when some coefficient is negative (a virtual character).
    pub fn is_virtual(&self) -> bool {
        self.parts.values().any(|c| c.is_negative())
    }

    /// Total dimension: coefficient-weighted sum of Weyl dimensions.
    pub fn dim(&self) -> BigInt {
        self.parts.iter().map(|(p, c)| c * p.weyl_dim()).sum()
    }

    /// Coefficient-weighted sum of Schur characters.
    pub fn recompose(&self) -> Character {
        let mut out = Character::zero();
        for (p, c) in &self.parts {
            for (w, m) in p.schur_char().terms {
                out.add_term(w, &(&m * c));
            }
        }
        out
    }
}

impl std::ops::Sub for &SchurDecomposition {
    type Output = SchurDecomposition;
    fn sub(self, rhs: &SchurDecomposition) -> SchurDecomposition {
        SchurDecomposition::from_parts(
            self.parts
                .iter()
                .map(|(p, c)| (*p, c.clone()))
                .chain(rhs.parts.iter().map(|(p, c)| (*p, -c))),
        )
    }
}

impl std::fmt::Display for SchurDecomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in self.parts.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "S{p}")?;
            } else {
                write!(f, "{c}*S{p}")?;
            }
        }
        Ok(())
    }
}

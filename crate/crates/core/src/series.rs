//! Poincare series `P(t) = Q(t)/(1-t)^(D+1)` of determinant line bundles.
//!
//! `Q` is an integer polynomial of degree exactly `D+1-3*delta`, palindromic
//! because Serre duality pairs the section counts at `k` and `-k-3*delta`.
//! Coefficients of the expansion count sections of tensor powers; the
//! reconstruction solves for `Q` from the value `Q(1)` (the top
//! self-intersection number) and a handful of section counts, as an exact
//! rational linear system.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::binom::{binomial, factorial};
use crate::{Error, Result};

/// Dense integer polynomial in one variable; trailing zeros trimmed,
/// degree of the zero polynomial is -1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Q(1): the sum of the coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Whether `Q_k = Q_(length-k)` for all `0 <= k <= length`
    /// (coefficients beyond the stated length must vanish).
    pub fn is_palindromic(&self, length: usize) -> bool {
        if self.degree() > length as i64 {
            return false;
        }
        (0..=length).all(|k| self.coefficient(k) == self.coefficient(length - k))
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, c) if c.is_one() => write!(f, "t")?,
                (1, c) => write!(f, "{c}*t")?,
                (k, c) if c.is_one() => write!(f, "t^{k}")?,
                (k, c) => write!(f, "{c}*t^{k}")?,
            }
        }
        Ok(())
    }
}

/// The pair `(Q, D)` denoting `Q(t)/(1-t)^(D+1)`, with the symmetry
/// exponent `delta` recorded so the palindrome length is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincareSeries {
    numerator: IntPolynomial,
    dim: u32,
    delta: u32,
}

impl PoincareSeries {
    /// Validated constructor: requires `delta >= 1`, a nonnegative
    /// numerator length `D+1-3*delta`, degree exactly that length, and the
    /// palindrome symmetry.
    pub fn new(numerator: IntPolynomial, dim: u32, delta: u32) -> Result<Self> {
        if delta == 0 {
            return Err(Error::NonPositiveDelta(0));
        }
        let length = dim as i64 + 1 - 3 * delta as i64;
        if length < 0 {
            return Err(Error::NegativeNumeratorDegree(length));
        }
        if numerator.degree() != length {
            return Err(Error::NumeratorDegreeMismatch {
                got: numerator.degree(),
                want: length,
            });
        }
        if !numerator.is_palindromic(length as usize) {
            return Err(Error::NotPalindromic(length as usize));
        }
        Ok(PoincareSeries {
            numerator,
            dim,
            delta,
        })
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    /// Numerator length `D+1-3*delta` (= its degree).
    pub fn numerator_length(&self) -> usize {
        (self.dim as i64 + 1 - 3 * self.delta as i64) as usize
    }

    /// k-th coefficient of the expansion:
    /// `sum_j Q_j * C(k-j+D, D)` over `0 <= j <= min(k, deg Q)`.
    pub fn coefficient(&self, k: u64) -> BigInt {
        expansion_coefficient(&self.numerator, self.dim, k)
    }

    /// The degree-D polynomial in k that agrees with [`Self::coefficient`]
    /// for all k >= 0, returned as coefficients of powers of k.
    ///
    /// Its leading coefficient is `Q(1)/D!`.
    pub fn hilbert_polynomial(&self) -> Vec<BigRational> {
        let d = self.dim as i64;
        let mut acc = vec![BigRational::zero(); self.dim as usize + 1];
        let dfact = BigRational::from_integer(factorial(self.dim as u64));
        for (j, q) in self.numerator.coefficients().iter().enumerate() {
            // C(k-j+D, D) = prod_{i=1..D} (k + (i-j)) / D!
            let mut poly = vec![BigRational::one()];
            for i in 1..=d {
                let shift = BigRational::from_integer(BigInt::from(i - j as i64));
                let mut next = vec![BigRational::zero(); poly.len() + 1];
                for (t, c) in poly.iter().enumerate() {
                    next[t + 1] += c;
                    next[t] += c * &shift;
                }
                poly = next;
            }
            let weight = BigRational::from_integer(q.clone()) / &dfact;
            for (t, c) in poly.iter().enumerate() {
                acc[t] += c * &weight;
            }
        }
        acc
    }
}

/// k-th coefficient of the expansion of `q(t)/(1-t)^(dim+1)`.
pub fn expansion_coefficient(q: &IntPolynomial, dim: u32, k: u64) -> BigInt {
    let d = dim as u64;
    let mut acc = BigInt::zero();
    for (j, c) in q.coefficients().iter().enumerate() {
        let j = j as u64;
        if j > k {
            break;
        }
        let n = (k - j).checked_add(d).expect("k + D overflows u64");
        acc += c * binomial(n, d);
    }
    acc
}

/// Recover the numerator coefficients `Q_0..Q_(len-1)` from the leading
/// coefficients of the expansion, by the alternating finite difference
/// `Q_k = sum_i (-1)^i C(D+1, i) h(k-i)` with `h(j) = 0` for `j < 0`.
///
/// This is the multiplication by `(1-t)^(D+1)`, truncated to the window
/// covered by the input.
pub fn numerator_from_coefficients(h: &[BigInt], dim: u32) -> Vec<BigInt> {
    let m = dim as usize + 1;
    (0..h.len())
        .map(|k| {
            let mut acc = BigInt::zero();
            for i in 0..=k.min(m) {
                let term = binomial(m as u64, i as u64) * &h[k - i];
                if i % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        })
        .collect()
}

/// Reconstruct the unique palindromic numerator of degree exactly
/// `D+1-3*delta` with `Q(1) = q_at_1` whose expansion matches every sample
/// `(k, h0)`.
///
/// Solved as an exact rational linear system over the independent
/// coefficients `Q_0..Q_(floor(L/2))`; overdetermined systems must be
/// consistent and the solution must be integral.
pub fn reconstruct(
    dim: u32,
    delta: u32,
    q_at_1: &BigInt,
    samples: &[(u64, BigInt)],
) -> Result<PoincareSeries> {
    if delta == 0 {
        return Err(Error::NonPositiveDelta(0));
    }
    let length = dim as i64 + 1 - 3 * delta as i64;
    if length < 0 {
        return Err(Error::NegativeNumeratorDegree(length));
    }
    let length = length as usize;
    for (i, (k, _)) in samples.iter().enumerate() {
        if samples[..i].iter().any(|(k2, _)| k2 == k) {
            return Err(Error::DuplicateSample(*k));
        }
    }

    let unknowns = length / 2 + 1;
    let d = dim as u64;
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(samples.len() + 1);

    // Q(1) = q_at_1: each independent coefficient appears twice except a
    // middle one when the length is even.
    let mut q1_row = vec![BigRational::from_integer(2.into()); unknowns + 1];
    if length.is_multiple_of(2) {
        q1_row[unknowns - 1] = BigRational::one();
    }
    q1_row[unknowns] = BigRational::from_integer(q_at_1.clone());
    rows.push(q1_row);

    for (k, h0) in samples {
        let mut row = vec![BigRational::zero(); unknowns + 1];
        for (j, entry) in row.iter_mut().enumerate().take(unknowns) {
            let mut c = BigInt::zero();
            if *k >= j as u64 {
                c += binomial(k - j as u64 + d, d);
            }
            let mirror = (length - j) as u64;
            if length - j != j && *k >= mirror {
                c += binomial(k - mirror + d, d);
            }
            *entry = BigRational::from_integer(c);
        }
        row[unknowns] = BigRational::from_integer(h0.clone());
        rows.push(row);
    }

    let solution = solve_exact(rows, unknowns)?;

    let mut coeffs = vec![BigInt::zero(); length + 1];
    for (j, v) in solution.iter().enumerate() {
        if !v.is_integer() {
            return Err(Error::InconsistentConstraints(format!(
                "coefficient Q_{j} = {v} is not an integer"
            )));
        }
        coeffs[j] = v.to_integer();
        coeffs[length - j] = v.to_integer();
    }
    if coeffs[length].is_zero() {
        return Err(Error::InconsistentConstraints(format!(
            "leading coefficient vanishes, so the numerator degree drops below {length}"
        )));
    }
    PoincareSeries::new(IntPolynomial::new(coeffs), dim, delta)
}

/// Gauss-Jordan elimination over the rationals on an augmented system.
/// Rows have `ncols + 1` entries.
fn solve_exact(mut rows: Vec<Vec<BigRational>>, ncols: usize) -> Result<Vec<BigRational>> {
    let nrows = rows.len();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut next_pivot_row = 0;
    for col in 0..ncols {
        let Some(r) = (next_pivot_row..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_pivot_row, r);
        let pivot = rows[next_pivot_row][col].clone();
        for entry in rows[next_pivot_row].iter_mut() {
            *entry /= &pivot;
        }
        let pivot_row = rows[next_pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next_pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (entry, pv) in row.iter_mut().zip(&pivot_row).skip(col) {
                *entry -= pv * &factor;
            }
        }
        pivot_of_col[col] = Some(next_pivot_row);
        next_pivot_row += 1;
    }
    for row in rows.iter().skip(next_pivot_row) {
        if !row[ncols].is_zero() {
            return Err(Error::InconsistentConstraints(
                "a constraint contradicts the others".into(),
            ));
        }
    }
    let missing = pivot_of_col.iter().filter(|p| p.is_none()).count();
    if missing > 0 {
        return Err(Error::InsufficientData { missing });
    }
    Ok(pivot_of_col
        .into_iter()
        .map(|p| rows[p.expect("checked above")][ncols].clone())
        .collect())
}

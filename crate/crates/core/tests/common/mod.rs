//! Independent oracles shared by the integration suites.
//!
//! Everything here recomputes expected values by direct enumeration or
//! closed forms, never by calling the code path under test.
#![allow(dead_code)] // each test binary uses its own subset

use num_bigint::BigInt;
use num_traits::Zero;
use sdual_core::rep3::{Character, Partition, SchurDecomposition, Weight};

/// Brute-force symmetric power: enumerate unordered n-multisets of basis
/// vectors (weights expanded with multiplicity) and sum their exponents.
pub fn brute_sym_power(x: &Character, n: usize) -> Character {
    let basis = expand_basis(x);
    let mut out: Vec<(Weight, BigInt)> = Vec::new();
    let mut pick = vec![0usize; n];
    enumerate_multisets(&basis, 0, n, &mut pick, 0, &mut out, false);
    Character::from_terms(out)
}

/// Brute-force exterior power: strictly increasing index tuples.
pub fn brute_ext_power(x: &Character, n: usize) -> Character {
    let basis = expand_basis(x);
    let mut out: Vec<(Weight, BigInt)> = Vec::new();
    let mut pick = vec![0usize; n];
    enumerate_multisets(&basis, 0, n, &mut pick, 0, &mut out, true);
    Character::from_terms(out)
}

fn expand_basis(x: &Character) -> Vec<Weight> {
    let mut basis = Vec::new();
    for (w, m) in x.terms() {
        let m = u64::try_from(m.clone()).expect("oracle needs a genuine character");
        for _ in 0..m {
            basis.push(*w);
        }
    }
    basis
}

fn enumerate_multisets(
    basis: &[Weight],
    from: usize,
    remaining: usize,
    pick: &mut [usize],
    depth: usize,
    out: &mut Vec<(Weight, BigInt)>,
    strict: bool,
) {
    if remaining == 0 {
        let mut w = Weight([0, 0, 0]);
        for &i in &pick[..depth] {
            w = Weight([
                w.0[0] + basis[i].0[0],
                w.0[1] + basis[i].0[1],
                w.0[2] + basis[i].0[2],
            ]);
        }
        out.push((w, BigInt::from(1)));
        return;
    }
    for i in from..basis.len() {
        pick[depth] = i;
        let next = if strict { i + 1 } else { i };
        enumerate_multisets(basis, next, remaining - 1, pick, depth + 1, out, strict);
    }
}

/// Semistandard-tableaux enumeration of a Schur character on 3 letters:
/// rows weakly increase, columns strictly increase.
pub fn ssyt_schur_char(p: Partition) -> Character {
    let [l1, l2, l3] = p.parts().map(|v| v as usize);
    let mut rows: [Vec<u8>; 3] = [vec![0; l1], vec![0; l2], vec![0; l3]];
    let mut out: Vec<(Weight, BigInt)> = Vec::new();
    fill(&mut rows, [l1, l2, l3], 0, 0, &mut out);
    Character::from_terms(out)
}

fn fill(
    rows: &mut [Vec<u8>; 3],
    shape: [usize; 3],
    row: usize,
    col: usize,
    out: &mut Vec<(Weight, BigInt)>,
) {
    if row == 3 {
        let mut content = [0u32; 3];
        for r in rows.iter() {
            for &e in r {
                content[e as usize - 1] += 1;
            }
        }
        out.push((Weight(content), BigInt::from(1)));
        return;
    }
    if col == shape[row] {
        fill(rows, shape, row + 1, 0, out);
        return;
    }
    for entry in 1..=3u8 {
        if col > 0 && rows[row][col - 1] > entry {
            continue;
        }
        if row > 0 && rows[row - 1][col] >= entry {
            continue;
        }
        rows[row][col] = entry;
        fill(rows, shape, row, col + 1, out);
    }
}

/// Pieri rule for two single-row characters on 3 letters:
/// `S^a (x) S^b = sum of S^(a+b-j, j)` over `0 <= j <= min(a, b)`.
pub fn pieri_row_product(a: u32, b: u32) -> SchurDecomposition {
    SchurDecomposition::from_parts((0..=a.min(b)).map(|j| {
        (
            Partition::new((a + b - j) as i64, j as i64, 0).expect("valid"),
            BigInt::from(1),
        )
    }))
}

/// Closed form of the Euler pairing obtained by expanding the basis
/// product symbolically: `<(r,c1,x),(r',c1',x')> = r*x' + r'*x - r*r' +
/// c1*c1'`.
pub fn euler_pair_closed_form(
    r: &BigInt,
    c1: &BigInt,
    chi: &BigInt,
    r2: &BigInt,
    c12: &BigInt,
    chi2: &BigInt,
) -> BigInt {
    r * chi2 + r2 * chi - r * r2 + c1 * c12
}

/// All partitions with at most 3 rows and |lambda| <= bound.
pub fn partitions_up_to(bound: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    for l1 in 0..=bound as i64 {
        for l2 in 0..=l1 {
            for l3 in 0..=l2 {
                if (l1 + l2 + l3) as u64 <= bound {
                    out.push(Partition::new(l1, l2, l3).expect("valid"));
                }
            }
        }
    }
    out
}

/// A small family of genuine characters of dimension at most 6, used to
/// drive the plethysm oracle.
pub fn small_characters() -> Vec<(&'static str, Character)> {
    let e = Character::standard();
    let lambda2 = Partition::new(1, 1, 0).expect("valid").schur_char();
    let s2 = Partition::new(2, 0, 0).expect("valid").schur_char();
    let s22 = Partition::new(2, 2, 0).expect("valid").schur_char();
    let det = Partition::new(1, 1, 1).expect("valid").schur_char();
    vec![
        ("0", Character::zero()),
        ("1", Character::trivial()),
        ("det", det.clone()),
        ("E", e.clone()),
        ("L2E", lambda2.clone()),
        ("S2E", s2.clone()),
        ("S22E", s22),
        ("E+1", &e + &Character::trivial()),
        ("E+L2E", &e + &lambda2),
        ("2E", &e + &e),
        ("E+det+1", &(&e + &det) + &Character::trivial()),
    ]
}

/// Truncated product of a coefficient stream with `(1-t)^(D+1)`.
pub fn truncated_product_with_unit_pole(h: &[BigInt], dim: u32) -> Vec<BigInt> {
    let m = dim as usize + 1;
    // coefficients of (1-t)^m
    let mut pole = vec![BigInt::zero(); m + 1];
    let mut c = BigInt::from(1);
    for (i, slot) in pole.iter_mut().enumerate() {
        *slot = if i % 2 == 0 { c.clone() } else { -c.clone() };
        c = c * (m - i) / (i + 1);
    }
    (0..h.len())
        .map(|k| {
            (0..=k.min(m))
                .map(|i| &pole[i] * &h[k - i])
                .sum::<BigInt>()
        })
        .collect()
}

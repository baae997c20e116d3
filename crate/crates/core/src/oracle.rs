//! Desk-scale verification of the determinantal codimension formula by
//! exhaustive matrix enumeration over small prime fields, cross-checked
//! against the Gaussian-binomial counting polynomial.
//!
//! The count of `g x f` matrices of rank exactly `k` over `F_q` is
//! `[f choose k]_q * prod_{i=0}^{k-1} (q^g - q^i)`, a polynomial in `q` of
//! degree `gf - (f-k)(g-k)`. The exponent drop against the full degree `gf`
//! is exactly the codimension of the rank stratum.

use crate::error::{Error, Result};
use num::bigint::BigInt;

const SUPPORTED_PRIMES: [u32; 4] = [2, 3, 5, 7];
const MAX_ENTRIES: u32 = 12;
/// Hard cap on the number of matrices a single enumeration may visit.
const ENUMERATION_BUDGET: u128 = 100_000_000;

/// Exact counts of `rows x cols` matrices over `F_p` by rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankCounts {
    pub p: u32,
    pub rows: u32,
    pub cols: u32,
    /// `counts[k]` = number of matrices of rank exactly `k`, `k = 0..=min`.
    pub counts: Vec<u64>,
}

/// Brute-force census of all `p^(rows*cols)` matrices.
pub fn count_by_rank(p: u32, rows: u32, cols: u32) -> Result<RankCounts> {
    if !SUPPORTED_PRIMES.contains(&p) {
        return Err(Error::OutOfRange(format!(
            "field size {p} is not a supported prime (2, 3, 5, 7)"
        )));
    }
    if rows < 1 || cols < 1 {
        return Err(Error::OutOfRange("matrix shape must be at least 1x1".into()));
    }
    let entries = rows * cols;
    if entries > MAX_ENTRIES {
        return Err(Error::OutOfRange(format!(
            "matrix has {entries} entries; the enumeration bound is {MAX_ENTRIES}"
        )));
    }
    if (p as u128).pow(entries) > ENUMERATION_BUDGET {
        return Err(Error::EnumerationBudget { p, rows, cols });
    }

    let mut counts = vec![0u64; rows.min(cols) as usize + 1];
    let mut matrix = vec![0u32; entries as usize];
    loop {
        counts[rank_mod_p(&matrix, rows as usize, cols as usize, p)] += 1;
        // base-p odometer over the entries
        let mut pos = 0;
        loop {
            if pos == matrix.len() {
                let total: u64 = counts.iter().sum();
                debug_assert_eq!(total as u128, (p as u128).pow(entries));
                return Ok(RankCounts { p, rows, cols, counts });
            }
            matrix[pos] += 1;
            if matrix[pos] < p {
                break;
            }
            matrix[pos] = 0;
            pos += 1;
        }
    }
}

fn rank_mod_p(entries: &[u32], rows: usize, cols: usize, p: u32) -> usize {
    let mut m: Vec<u32> = entries.to_vec();
    let at = |r: usize, c: usize| r * cols + c;
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(pivot) = (row..rows).find(|r| m[at(*r, col)] % p != 0) else {
            continue;
        };
        for c in 0..cols {
            m.swap(at(row, c), at(pivot, c));
        }
        let inv = mod_pow(m[at(row, col)], p - 2, p);
        for r in (row + 1)..rows {
            let factor = (m[at(r, col)] * inv) % p;
            if factor == 0 {
                continue;
            }
            for c in col..cols {
                let sub = (factor * m[at(row, c)]) % p;
                m[at(r, c)] = (m[at(r, c)] + p - sub) % p;
            }
        }
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

fn mod_pow(base: u32, exp: u32, modulus: u32) -> u32 {
    let mut result = 1u64;
    let mut base = (base % modulus) as u64;
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % modulus as u64;
        }
        base = base * base % modulus as u64;
        exp >>= 1;
    }
    result as u32
}

/// Dense integer polynomial in the field-size variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountPolynomial(Vec<i128>);

impl CountPolynomial {
    fn constant(value: i128) -> Self {
        Self(vec![value])
    }

    /// `coefficient * q^power`
    fn monomial(coefficient: i128, power: usize) -> Self {
        let mut coeffs = vec![0; power + 1];
        coeffs[power] = coefficient;
        Self(coeffs)
    }

    fn add(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        let mut coeffs = vec![0i128; len];
        for (i, c) in self.0.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            coeffs[i] += c;
        }
        Self(coeffs)
    }

    fn mul(&self, other: &Self) -> Self {
        let mut coeffs = vec![0i128; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self(coeffs)
    }

    pub fn degree(&self) -> Option<i64> {
        self.0
            .iter()
            .rposition(|c| *c != 0)
            .map(|pos| pos as i64)
    }

    pub fn eval(&self, q: u64) -> BigInt {
        let q = BigInt::from(q);
        let mut value = BigInt::from(0);
        for c in self.0.iter().rev() {
            value = value * &q + BigInt::from(*c);
        }
        value
    }
}

/// Gaussian binomial `[m choose k]_q` via the q-Pascal recurrence
/// `[m k] = [m-1 k-1] + q^k [m-1 k]`.
fn gaussian_binomial(m: u32, k: u32) -> CountPolynomial {
    if k > m {
        return CountPolynomial::constant(0);
    }
    let k = k.min(m - k);
    let mut row = vec![CountPolynomial::constant(1)];
    for mm in 1..=m {
        let upto = k.min(mm);
        let mut next = Vec::with_capacity(upto as usize + 1);
        next.push(CountPolynomial::constant(1));
        for kk in 1..=upto {
            let left = &row[kk as usize - 1];
            let value = if kk == mm {
                left.clone()
            } else {
                left.add(&CountPolynomial::monomial(1, kk as usize).mul(&row[kk as usize]))
            };
            next.push(value);
        }
        row = next;
    }
    row[k as usize].clone()
}

/// The counting polynomial for rank-`k` matrices of shape `rows x cols`:
/// `[cols choose k]_q * prod_{i=0}^{k-1} (q^rows - q^i)`.
pub fn rank_count_polynomial(rows: u32, cols: u32, k: u32) -> Result<CountPolynomial> {
    if rows < 1 || cols < 1 {
        return Err(Error::OutOfRange("matrix shape must be at least 1x1".into()));
    }
    if k > rows.min(cols) {
        return Err(Error::OutOfRange(format!(
            "rank {k} exceeds min(rows, cols) = {}",
            rows.min(cols)
        )));
    }
    let mut poly = gaussian_binomial(cols, k);
    for i in 0..k {
        let factor = CountPolynomial::monomial(1, rows as usize)
            .add(&CountPolynomial::monomial(-1, i as usize));
        poly = poly.mul(&factor);
    }
    Ok(poly)
}

/// Closed-form count of rank-`k` matrices over a field with `q` elements.
pub fn qanalog_count(q: u64, rows: u32, cols: u32, k: u32) -> Result<BigInt> {
    if q < 2 {
        return Err(Error::OutOfRange("field size must be at least 2".into()));
    }
    Ok(rank_count_polynomial(rows, cols, k)?.eval(q))
}

/// Checks the codimension claim for the rank-at-most-`k` stratum: the
/// degree of the cumulative counting polynomial must drop below the full
/// degree `rows*cols` by exactly `(rows-k)(cols-k)`, and the brute-force
/// censuses over F_2, F_3, F_5 must agree with the polynomial exactly.
pub fn verify_codim(rows: u32, cols: u32, k: u32) -> Result<bool> {
    if k > rows.min(cols) {
        return Err(Error::OutOfRange(format!(
            "rank {k} exceeds min(rows, cols) = {}",
            rows.min(cols)
        )));
    }
    let mut cumulative = CountPolynomial::constant(0);
    for j in 0..=k {
        cumulative = cumulative.add(&rank_count_polynomial(rows, cols, j)?);
    }
    let expected =
        (rows as i64) * (cols as i64) - (rows as i64 - k as i64) * (cols as i64 - k as i64);
    if cumulative.degree() != Some(expected) {
        return Ok(false);
    }

    for p in [2u32, 3, 5] {
        let census = count_by_rank(p, rows, cols)?;
        for (rank, count) in census.counts.iter().enumerate() {
            let predicted = qanalog_count(p as u64, rows, cols, rank as u32)?;
            if BigInt::from(*count) != predicted {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_2x2_over_f2() {
        let census = count_by_rank(2, 2, 2).unwrap();
        assert_eq!(census.counts, vec![1, 9, 6]);
    }

    #[test]
    fn zero_matrix_is_the_only_rank_zero_point() {
        for p in [2, 3, 5] {
            let census = count_by_rank(p, 2, 3).unwrap();
            assert_eq!(census.counts[0], 1);
            let total: u64 = census.counts.iter().sum();
            assert_eq!(total as u128, (p as u128).pow(6));
        }
    }

    #[test]
    fn row_vectors() {
        let census = count_by_rank(2, 1, 2).unwrap();
        assert_eq!(census.counts, vec![1, 3]);
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(
            count_by_rank(7, 3, 4),
            Err(Error::EnumerationBudget { p: 7, rows: 3, cols: 4 })
        );
        assert!(count_by_rank(2, 4, 4).is_err());
        assert!(count_by_rank(4, 2, 2).is_err());
    }

    #[test]
    fn qanalog_matches_brute_force() {
        assert_eq!(qanalog_count(2, 2, 2, 2).unwrap(), BigInt::from(6));
        assert_eq!(qanalog_count(5, 3, 3, 0).unwrap(), BigInt::from(1));

        let census = count_by_rank(3, 2, 3).unwrap();
        assert_eq!(
            qanalog_count(3, 2, 3, 1).unwrap(),
            BigInt::from(census.counts[1])
        );
    }

    #[test]
    fn singular_2x2_polynomial() {
        // rank <= 1 count is q^3 + q^2 - q, of degree 3 = 4 - 1
        let cumulative = rank_count_polynomial(2, 2, 0)
            .unwrap()
            .add(&rank_count_polynomial(2, 2, 1).unwrap());
        assert_eq!(cumulative.degree(), Some(3));
        assert_eq!(cumulative.eval(2), BigInt::from(10));
    }

    #[test]
    fn codim_verification() {
        assert!(verify_codim(2, 2, 1).unwrap());
        assert!(verify_codim(1, 2, 0).unwrap());
        assert!(verify_codim(3, 3, 2).unwrap());
    }
}

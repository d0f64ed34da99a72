//! Integer-sequence calculus for h-vectors: Macaulay's i-binomial
//! expansions, the growth bound `n^<i>`, and the classification predicates
//! (O-sequence, symmetric, unimodal, differentiable, SI).
//!
//! Binomial coefficients are exact. The greedy expansion search runs in
//! checked `u128` arithmetic and falls back to [`BigUint`] on overflow, so
//! nothing here ever rounds or wraps.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("an h-vector needs at least one entry")]
    Empty,
    #[error("h_0 must be 1, found {0}")]
    LeadingEntry(u64),
    #[error("h-vector entries must be positive; h_{index} = 0")]
    NonPositive { index: usize },
    #[error("binomial expansion needs n >= 1 and i >= 1 (got n = {n}, i = {i})")]
    InvalidExpansion { n: u64, i: u64 },
    #[error("value does not fit in 64 bits")]
    Overflow,
    #[error("malformed vector literal: {0}")]
    Parse(String),
}

/// The h-vector `(1, h_1, ..., h_e)` of a standard graded artinian algebra.
///
/// Every entry is strictly positive and `h_0 = 1`; the socle degree is the
/// last index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct HVector {
    entries: Vec<u64>,
}

impl HVector {
    pub fn new(entries: Vec<u64>) -> Result<Self, SeqError> {
        match entries.first() {
            None => return Err(SeqError::Empty),
            Some(&h0) if h0 != 1 => return Err(SeqError::LeadingEntry(h0)),
            _ => {}
        }
        if let Some(index) = entries.iter().position(|&h| h == 0) {
            return Err(SeqError::NonPositive { index });
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<u64> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always false: an h-vector has at least `h_0`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: usize) -> Option<u64> {
        self.entries.get(i).copied()
    }

    pub fn socle_degree(&self) -> usize {
        self.entries.len() - 1
    }

    /// `h_1`, or `None` for the one-entry vector `(1)`.
    pub fn codimension(&self) -> Option<u64> {
        self.get(1)
    }

    /// The prefix `(h_0, ..., h_k)`; `k` is clamped to the socle degree.
    pub fn truncate(&self, k: usize) -> HVector {
        let end = (k + 1).min(self.entries.len());
        HVector {
            entries: self.entries[..end].to_vec(),
        }
    }

    pub fn first_difference(&self) -> Vec<i128> {
        first_difference(&self.entries)
    }
}

impl TryFrom<Vec<u64>> for HVector {
    type Error = SeqError;

    fn try_from(entries: Vec<u64>) -> Result<Self, SeqError> {
        HVector::new(entries)
    }
}

impl From<HVector> for Vec<u64> {
    fn from(h: HVector) -> Self {
        h.entries
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, h) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{h}")?;
        }
        write!(f, ")")
    }
}

/// Parses `1,10,14,20` (brackets and whitespace tolerated).
impl std::str::FromStr for HVector {
    type Err = SeqError;

    fn from_str(s: &str) -> Result<Self, SeqError> {
        let trimmed = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        if trimmed.trim().is_empty() {
            return Err(SeqError::Parse(format!("{s:?} has no entries")));
        }
        let entries = trimmed
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u64>()
                    .map_err(|_| SeqError::Parse(format!("{tok:?} is not a nonnegative integer")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        HVector::new(entries)
    }
}

/// Exact binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

/// `C(n, k)` if it fits in a `u64`.
pub fn binomial_u64(n: u64, k: u64) -> Option<u64> {
    binomial_capped(n, k)
}

// Checked u128 fast path; each partial product C(n, j+1) is an integer so the
// division is exact. Overflow routes through BigUint.
fn binomial_capped(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        match acc.checked_mul(u128::from(n - j)) {
            Some(p) => acc = p / u128::from(j + 1),
            None => return binomial(n, k).to_u64(),
        }
        if acc > u128::from(u64::MAX) {
            // C(n, j) is increasing in j for j <= n/2.
            return None;
        }
    }
    acc.to_u64()
}

/// The Macaulay i-binomial expansion
/// `n = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j)` with
/// `n_i > n_{i-1} > ... > n_j >= j >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialExpansion {
    index: u64,
    /// `(n_k, k)` pairs with `k` strictly descending from `index`.
    terms: Vec<(u64, u64)>,
}

impl BinomialExpansion {
    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn terms(&self) -> &[(u64, u64)] {
        &self.terms
    }

    /// Sum of the terms; equals the expanded integer.
    pub fn value(&self) -> BigUint {
        self.terms.iter().map(|&(top, k)| binomial(top, k)).sum()
    }

    /// `n^<i>`: every term shifted by one, top and bottom.
    pub fn shifted(&self) -> BigUint {
        self.terms
            .iter()
            .map(|&(top, k)| binomial(top + 1, k + 1))
            .sum()
    }
}

impl fmt::Display for BinomialExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, (top, k)) in self.terms.iter().enumerate() {
            if pos > 0 {
                write!(f, " + ")?;
            }
            write!(f, "C({top},{k})")?;
        }
        Ok(())
    }
}

pub fn binomial_expansion(n: u64, i: u64) -> Result<BinomialExpansion, SeqError> {
    if n == 0 || i == 0 {
        return Err(SeqError::InvalidExpansion { n, i });
    }
    let mut rest = n;
    let mut terms = Vec::new();
    let mut k = i;
    while rest > 0 && k >= 1 {
        // Largest top with C(top, k) <= rest. C(k, k) = 1 <= rest, and
        // C(top, k) >= top - k + 1 bounds the search from above.
        let (mut lo, mut hi) = (k, rest.saturating_add(k - 1));
        while lo < hi {
            let mid = lo + (hi - lo).div_ceil(2);
            match binomial_capped(mid, k) {
                Some(c) if c <= rest => lo = mid,
                _ => hi = mid - 1,
            }
        }
        let c = binomial_capped(lo, k).expect("bounded by rest");
        terms.push((lo, k));
        rest -= c;
        k -= 1;
    }
    debug_assert_eq!(rest, 0);
    Ok(BinomialExpansion { index: i, terms })
}

/// Macaulay's bound `n^<i>`: the largest possible value of `h_{i+1}` given
/// `h_i = n`.
pub fn macaulay_bound(n: u64, i: u64) -> Result<BigUint, SeqError> {
    Ok(binomial_expansion(n, i)?.shifted())
}

/// A step `h_degree -> h_{degree+1}` that exceeds Macaulay's bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthViolation {
    pub degree: usize,
    pub value: u64,
    pub next: u64,
    pub bound: String,
}

impl fmt::Display for GrowthViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "step {}->{}: {} -> {} exceeds bound {}",
            self.degree,
            self.degree + 1,
            self.value,
            self.next,
            self.bound
        )
    }
}

/// First degree `i >= 1` where `seq[i+1] > seq[i]^<i>`. The step 0 -> 1 is
/// unconstrained. Entries must be positive.
pub fn first_growth_violation(seq: &[u64]) -> Option<GrowthViolation> {
    seq.windows(2)
        .enumerate()
        .skip(1)
        .find_map(|(degree, pair)| {
            let bound = macaulay_bound(pair[0], degree as u64).expect("positive entries");
            (BigUint::from(pair[1]) > bound).then(|| GrowthViolation {
                degree,
                value: pair[0],
                next: pair[1],
                bound: bound.to_string(),
            })
        })
}

pub fn is_o_sequence(h: &HVector) -> bool {
    first_growth_violation(h.entries()).is_none()
}

/// `(a_0, a_1 - a_0, ..., a_e - a_{e-1})`.
pub fn first_difference(seq: &[u64]) -> Vec<i128> {
    let mut out = Vec::with_capacity(seq.len());
    let mut prev = 0i128;
    for &x in seq {
        let x = i128::from(x);
        out.push(x - prev);
        prev = x;
    }
    out
}

/// Why a first difference fails to be an h-vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum DifferenceViolation {
    /// `h_degree < h_{degree-1}`.
    Negative {
        degree: usize,
        value: i64,
    },
    /// A zero at `zero_degree` followed by a positive entry at `degree`.
    InternalZero {
        zero_degree: usize,
        degree: usize,
    },
    Growth(GrowthViolation),
}

impl fmt::Display for DifferenceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Negative { degree, value } => {
                write!(f, "difference is negative ({value}) in degree {degree}")
            }
            Self::InternalZero {
                zero_degree,
                degree,
            } => write!(
                f,
                "difference vanishes in degree {zero_degree} but is positive in degree {degree}"
            ),
            Self::Growth(g) => write!(f, "difference {g}"),
        }
    }
}

/// Checks that the first difference is an h-vector: nonnegative, zeros only
/// in a trailing block, and the positive prefix obeys Macaulay's bound.
pub fn differentiability_violation(h: &HVector) -> Option<DifferenceViolation> {
    let diff = h.first_difference();
    if let Some(degree) = diff.iter().position(|&x| x < 0) {
        return Some(DifferenceViolation::Negative {
            degree,
            value: diff[degree] as i64,
        });
    }
    let positive_len = diff.iter().position(|&x| x == 0).unwrap_or(diff.len());
    if let Some(offset) = diff[positive_len..].iter().position(|&x| x > 0) {
        return Some(DifferenceViolation::InternalZero {
            zero_degree: positive_len,
            degree: positive_len + offset,
        });
    }
    let prefix: Vec<u64> = diff[..positive_len].iter().map(|&x| x as u64).collect();
    first_growth_violation(&prefix).map(DifferenceViolation::Growth)
}

pub fn is_differentiable(h: &HVector) -> bool {
    differentiability_violation(h).is_none()
}

/// First index `i <= e/2` with `h_i != h_{e-i}`.
pub fn symmetry_violation(h: &HVector) -> Option<usize> {
    let e = h.socle_degree();
    (0..=e / 2).find(|&i| h.entries[i] != h.entries[e - i])
}

pub fn is_symmetric(h: &HVector) -> bool {
    symmetry_violation(h).is_none()
}

/// First degree `k` with `h_k > h_{k-1}` after an earlier strict decrease.
pub fn unimodality_violation(h: &HVector) -> Option<usize> {
    let mut decreased = false;
    for (k, pair) in h.entries.windows(2).enumerate() {
        if pair[1] < pair[0] {
            decreased = true;
        } else if pair[1] > pair[0] && decreased {
            return Some(k + 1);
        }
    }
    None
}

pub fn is_unimodal(h: &HVector) -> bool {
    unimodality_violation(h).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum SiViolation {
    NotSymmetric { index: usize },
    FirstHalf(DifferenceViolation),
}

impl fmt::Display for SiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotSymmetric { index } => write!(f, "not symmetric at index {index}"),
            Self::FirstHalf(v) => write!(f, "first half: {v}"),
        }
    }
}

pub fn si_violation(h: &HVector) -> Option<SiViolation> {
    if let Some(index) = symmetry_violation(h) {
        return Some(SiViolation::NotSymmetric { index });
    }
    let half = h.truncate(h.socle_degree() / 2);
    differentiability_violation(&half).map(SiViolation::FirstHalf)
}

/// Symmetric, with differentiable first half `(h_0, ..., h_{floor(e/2)})`.
pub fn is_si_sequence(h: &HVector) -> bool {
    si_violation(h).is_none()
}

//! Numerical h-vector constructions: Stanley's trivial extension,
//! Iarrobino's compressed level vectors, the codimension lift, and the two
//! explicit families of unimodal Gorenstein h-vectors that fail the SI
//! property.

use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::seqcore::{binomial, binomial_u64, HVector, SeqError};

/// Smallest `d` accepted by the codimension-five family.
pub const MIN_THM_R_D: u64 = 10;
/// Smallest socle degree carrying a unimodal non-SI Gorenstein h-vector.
pub const MIN_THM_E_SOCLE_DEGREE: u64 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("trivial extension needs socle degree >= 1")]
    SocleDegreeZero,
    #[error("compressed level vector needs r >= 1 and e >= 1 (got r = {r}, e = {e})")]
    InvalidCompressParams { r: u64, e: u64 },
    #[error("h' has socle degree {got}, larger than the form degree {e}")]
    BaseTooLong { got: usize, e: u64 },
    #[error("codimension lift needs a symmetric vector of socle degree >= 2")]
    NotLiftable,
    /// Every Gorenstein h-vector of socle degree <= 5 that is unimodal is SI,
    /// so the family is empty there. This is a typed mathematical outcome,
    /// not a bad argument.
    #[error("no unimodal non-SI Gorenstein h-vector exists in socle degree {socle_degree} (need e >= 6)")]
    Nonexistent { socle_degree: u64 },
    #[error("the codimension-five family needs d >= 10 (got d = {0})")]
    DTooSmall(u64),
    #[error("requested codimension {requested} is below the family's base codimension {base}")]
    CodimensionTooSmall { requested: u64, base: u64 },
    #[error(transparent)]
    Seq(#[from] SeqError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub const BOTH: [Parity; 2] = [Parity::Odd, Parity::Even];
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

impl FromStr for Parity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "odd" => Ok(Parity::Odd),
            "even" => Ok(Parity::Even),
            other => Err(format!("parity must be odd or even, got {other:?}")),
        }
    }
}

/// Which explicit family a result belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    /// Socle degree `e >= 6`, codimension `e + 4`.
    ThmE,
    /// Codimension 5, socle degree `2d + 1`.
    ThmROdd,
    /// Codimension 5, socle degree `2d`.
    ThmREven,
}

impl FamilyKind {
    pub fn thm_r(parity: Parity) -> Self {
        match parity {
            Parity::Odd => FamilyKind::ThmROdd,
            Parity::Even => FamilyKind::ThmREven,
        }
    }

    pub fn parity(self) -> Option<Parity> {
        match self {
            FamilyKind::ThmE => None,
            FamilyKind::ThmROdd => Some(Parity::Odd),
            FamilyKind::ThmREven => Some(Parity::Even),
        }
    }

    /// Name of the family parameter (`e` or `d`).
    pub fn parameter_name(self) -> &'static str {
        match self {
            FamilyKind::ThmE => "e",
            _ => "d",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::ThmE => "thm_e",
            FamilyKind::ThmROdd => "thm_r_odd",
            FamilyKind::ThmREven => "thm_r_even",
        })
    }
}

/// A level h-vector together with its Gorenstein trivial extension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyResult {
    pub kind: FamilyKind,
    /// `e` for [`FamilyKind::ThmE`], `d` otherwise.
    pub parameter: u64,
    pub level_hvector: HVector,
    pub gorenstein_hvector: HVector,
    /// Difference step `(i, i+1)` of the Gorenstein first half where
    /// Macaulay's bound is first exceeded.
    pub predicted_violation: (usize, usize),
}

impl FamilyResult {
    pub fn codimension(&self) -> u64 {
        self.gorenstein_hvector.codimension().unwrap_or(0)
    }

    pub fn socle_degree(&self) -> usize {
        self.gorenstein_hvector.socle_degree()
    }
}

fn binom(n: u64, k: u64) -> Result<u64, ConstructError> {
    binomial_u64(n, k).ok_or(ConstructError::Seq(SeqError::Overflow))
}

fn checked_add(a: u64, b: u64) -> Result<u64, ConstructError> {
    a.checked_add(b)
        .ok_or(ConstructError::Seq(SeqError::Overflow))
}

/// Stanley's trivial extension: from a level vector of socle degree `e - 1`
/// produce `(1, H_1, ..., H_{e-1}, 1)` with `H_i = h_i + h_{e-i}`.
///
/// Levelness of the input is assumed, not checked.
pub fn trivial_extension(h: &HVector) -> Result<HVector, ConstructError> {
    let entries = h.entries();
    let e = entries.len();
    if e < 2 {
        return Err(ConstructError::SocleDegreeZero);
    }
    let mut out = Vec::with_capacity(e + 1);
    out.push(1);
    for i in 1..e {
        out.push(checked_add(entries[i], entries[e - i])?);
    }
    out.push(1);
    Ok(HVector::new(out)?)
}

/// Iarrobino's bound for adding a general form of degree `e` in `r`
/// variables to an inverse system with h-vector `base`:
/// `h_i = min{C(r-1+i, i), h'_i + C(r-1+e-i, e-i)}`.
///
/// `base` may be `None` (the zero module); entries past its end count as 0.
pub fn compress_level(base: Option<&HVector>, r: u64, e: u64) -> Result<HVector, ConstructError> {
    if r == 0 || e == 0 {
        return Err(ConstructError::InvalidCompressParams { r, e });
    }
    if let Some(b) = base {
        if b.socle_degree() as u64 > e {
            return Err(ConstructError::BaseTooLong {
                got: b.socle_degree(),
                e,
            });
        }
    }
    let mut out = Vec::with_capacity(e as usize + 1);
    for i in 0..=e {
        let ambient = binomial(r - 1 + i, i);
        let prior = base.and_then(|b| b.get(i as usize)).unwrap_or(0);
        let added = binomial(r - 1 + e - i, e - i) + prior;
        let value = ambient.min(added);
        out.push(value.to_u64().ok_or(SeqError::Overflow)?);
    }
    Ok(HVector::new(out)?)
}

/// Adds `a` to every interior entry of a symmetric vector, i.e. the h-vector
/// of `<F + y_{r+1}^e + ... >` after `a` new variables.
pub fn lift_codimension(h: &HVector, a: u64) -> Result<HVector, ConstructError> {
    let e = h.socle_degree();
    if e < 2 || !crate::seqcore::is_symmetric(h) {
        return Err(ConstructError::NotLiftable);
    }
    let mut out = h.entries().to_vec();
    for x in &mut out[1..e] {
        *x = checked_add(*x, a)?;
    }
    Ok(HVector::new(out)?)
}

/// The truncation `(1, 2, ..., e)` of `k[x, y]` after degree `e - 1`.
pub fn two_variable_truncation(e: u64) -> HVector {
    HVector::new((1..=e).collect()).expect("positive entries")
}

/// The family in socle degree `e >= 6`: a general ternary form of degree
/// `e - 1` added to the truncation of `k[x, y]`, followed by a trivial
/// extension. Returns [`ConstructError::Nonexistent`] for `e <= 5`.
pub fn construct_thm_e(e: u64) -> Result<FamilyResult, ConstructError> {
    if e < MIN_THM_E_SOCLE_DEGREE {
        return Err(ConstructError::Nonexistent { socle_degree: e });
    }
    let base = two_variable_truncation(e);
    let level = compress_level(Some(&base), 3, e - 1)?;
    let gorenstein = trivial_extension(&level)?;
    Ok(FamilyResult {
        kind: FamilyKind::ThmE,
        parameter: e,
        level_hvector: level,
        gorenstein_hvector: gorenstein,
        predicted_violation: (2, 3),
    })
}

/// The level vector of the codimension-five family.
///
/// Odd parity has socle degree `2d`; even parity has socle degree `2d - 1`.
/// Both grow like `k[x, y, z]` up to degree `d`, then by one per degree for
/// three (odd) or two (even) steps, then fall as `min{top, 2 C(j+2, 2)}`
/// where `j` counts degrees down from the socle.
pub fn construct_thm_r_level(d: u64, parity: Parity) -> Result<HVector, ConstructError> {
    if d < MIN_THM_R_D {
        return Err(ConstructError::DTooSmall(d));
    }
    let plateau_steps = match parity {
        Parity::Odd => 3,
        Parity::Even => 2,
    };
    let socle = match parity {
        Parity::Odd => 2 * d,
        Parity::Even => 2 * d - 1,
    };
    let peak = binom(d + 2, 2)?;
    let top = checked_add(peak, plateau_steps)?;
    let mut out = Vec::with_capacity(socle as usize + 1);
    for i in 0..=d {
        out.push(binom(i + 2, 2)?);
    }
    for step in 1..=plateau_steps {
        out.push(peak + step);
    }
    for i in (d + plateau_steps + 1)..=socle {
        let j = socle - i;
        let tail = binom(j + 2, 2)?.checked_mul(2).ok_or(SeqError::Overflow)?;
        out.push(top.min(tail));
    }
    Ok(HVector::new(out)?)
}

pub fn construct_thm_r_gorenstein(d: u64, parity: Parity) -> Result<FamilyResult, ConstructError> {
    let level = construct_thm_r_level(d, parity)?;
    let gorenstein = trivial_extension(&level)?;
    let d = d as usize;
    Ok(FamilyResult {
        kind: FamilyKind::thm_r(parity),
        parameter: d as u64,
        level_hvector: level,
        gorenstein_hvector: gorenstein,
        predicted_violation: (d - 1, d),
    })
}

/// Dispatch on kind: `param` is `e` for [`FamilyKind::ThmE`], `d` otherwise.
pub fn construct_family(kind: FamilyKind, param: u64) -> Result<FamilyResult, ConstructError> {
    match kind {
        FamilyKind::ThmE => construct_thm_e(param),
        FamilyKind::ThmROdd => construct_thm_r_gorenstein(param, Parity::Odd),
        FamilyKind::ThmREven => construct_thm_r_gorenstein(param, Parity::Even),
    }
}

/// Unimodal non-SI Gorenstein h-vector of socle degree `e >= 6` in any
/// codimension `r >= e + 4`.
pub fn thm_e_in_codimension(e: u64, r: u64) -> Result<HVector, ConstructError> {
    let family = construct_thm_e(e)?;
    lift_to(&family, r)
}

/// Unimodal non-SI Gorenstein h-vector of codimension `r >= 5` and socle
/// degree `2d + 1` (odd) or `2d` (even).
pub fn thm_r_in_codimension(d: u64, parity: Parity, r: u64) -> Result<HVector, ConstructError> {
    let family = construct_thm_r_gorenstein(d, parity)?;
    lift_to(&family, r)
}

fn lift_to(family: &FamilyResult, r: u64) -> Result<HVector, ConstructError> {
    let base = family.codimension();
    if r < base {
        return Err(ConstructError::CodimensionTooSmall { requested: r, base });
    }
    lift_codimension(&family.gorenstein_hvector, r - base)
}

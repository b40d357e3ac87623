//! The model's index set: eigenvalues F(n) = ωn₁ + n₂², the four-neighbor
//! potential, the critical set S of small-denominator indices, and the
//! gap-condition diagnostics for E(k) = k².

use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::params::ModelParams;
use crate::{Error, Result};

/// A point n = (n₁, n₂) ∈ ℤ² labeling the K-eigenvector with eigenvalue
/// F(n) = ωn₁ + n₂².
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticeIndex {
    pub n1: i64,
    pub n2: i64,
}

impl LatticeIndex {
    pub const ZERO: LatticeIndex = LatticeIndex { n1: 0, n2: 0 };

    pub fn new(n1: i64, n2: i64) -> Self {
        LatticeIndex { n1, n2 }
    }

    pub fn is_zero(&self) -> bool {
        self.n1 == 0 && self.n2 == 0
    }

    /// Membership in the sublattice 𝕃 = ℤ(1,1) + ℤ(1,−1) reachable from 0̄.
    pub fn on_sublattice(&self) -> bool {
        (self.n1 + self.n2) % 2 == 0
    }

    /// Point reflection through `center`, s ↦ 2·center − s.
    pub fn reflect_through(&self, center: LatticeIndex) -> LatticeIndex {
        LatticeIndex::new(2 * center.n1 - self.n1, 2 * center.n2 - self.n2)
    }
}

impl Add for LatticeIndex {
    type Output = LatticeIndex;
    fn add(self, rhs: LatticeIndex) -> LatticeIndex {
        LatticeIndex::new(self.n1 + rhs.n1, self.n2 + rhs.n2)
    }
}

impl Sub for LatticeIndex {
    type Output = LatticeIndex;
    fn sub(self, rhs: LatticeIndex) -> LatticeIndex {
        LatticeIndex::new(self.n1 - rhs.n1, self.n2 - rhs.n2)
    }
}

impl std::fmt::Display for LatticeIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.n1, self.n2)
    }
}

/// The four generator steps ±(1,1), ±(1,−1), in the fixed enumeration order
/// used everywhere: (1,1) < (1,−1) < (−1,1) < (−1,−1).
pub const STEPS: [LatticeIndex; 4] = [
    LatticeIndex { n1: 1, n2: 1 },
    LatticeIndex { n1: 1, n2: -1 },
    LatticeIndex { n1: -1, n2: 1 },
    LatticeIndex { n1: -1, n2: -1 },
];

/// Quasi-energy F(n) = ω·n₁ + n₂². The squares are formed in exact integer
/// arithmetic; ω enters only in the final multiplication.
pub fn eigenvalue(n: LatticeIndex, params: &ModelParams) -> f64 {
    params.omega * n.n1 as f64 + (n.n2 * n.n2) as f64
}

/// Matrix element V(m, n) ∈ {0, 1}: one exactly when m − n is a generator
/// step. In particular V(n, n) = 0, so PVP = 0 holds automatically.
pub fn potential_element(m: LatticeIndex, n: LatticeIndex) -> u8 {
    let d = m - n;
    u8::from(STEPS.contains(&d))
}

/// The critical set S: for each n₂ ≥ 1 the unique n₁ ≤ 0 with
/// F(n) ∈ ]−ω/2, ω/2] \ {0}, scanned up to `n2_cutoff`.
///
/// Stored with the per-row first coordinates so that the locality function
/// d(n) and L(n) = min{|n₂|, d(n)} can be answered without rescanning. Rows
/// extend to negative n₂ by the degeneracy F(n₁, n₂) = F(n₁, −n₂).
#[derive(Debug, Clone)]
pub struct CriticalSet {
    /// n1[k - 1] is the critical first coordinate for n₂ = k, 1 ≤ k ≤ cutoff.
    n1_by_row: Vec<i64>,
    omega: f64,
    cutoff: u32,
}

/// Find the unique n₁ with ωn₁ + n₂² ∈ ]−ω/2, ω/2], if the value is nonzero.
///
/// The interval has width exactly ω, so at most one integer qualifies; it is
/// one of the two integers nearest to −n₂²/ω. The half-open bracket is
/// strict at −ω/2 and inclusive at ω/2.
fn critical_n1(omega: f64, n2: i64) -> Result<i64> {
    let target = -((n2 * n2) as f64) / omega;
    for cand in [target.floor() as i64, target.ceil() as i64] {
        let f = omega * cand as f64 + (n2 * n2) as f64;
        if -omega / 2.0 < f && f <= omega / 2.0 {
            if f == 0.0 {
                return Err(Error::DegenerateFrequency { n1: cand, n2 });
            }
            return Ok(cand);
        }
    }
    // Floating rounding ties at +-omega/2 can in principle leave both
    // candidates outside the half-open bracket; widen by one either side.
    for cand in [target.floor() as i64 - 1, target.ceil() as i64 + 1] {
        let f = omega * cand as f64 + (n2 * n2) as f64;
        if -omega / 2.0 < f && f <= omega / 2.0 {
            if f == 0.0 {
                return Err(Error::DegenerateFrequency { n1: cand, n2 });
            }
            return Ok(cand);
        }
    }
    Err(Error::DegenerateFrequency { n1: target.round() as i64, n2 })
}

impl CriticalSet {
    pub fn build(params: &ModelParams) -> Result<CriticalSet> {
        let omega = params.omega;
        let mut n1_by_row = Vec::with_capacity(params.n2_cutoff as usize);
        for n2 in 1..=params.n2_cutoff as i64 {
            n1_by_row.push(critical_n1(omega, n2)?);
        }
        Ok(CriticalSet { n1_by_row, omega, cutoff: params.n2_cutoff })
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    /// Critical first coordinate for row |n₂| = k, if within cutoff.
    pub fn n1_of_row(&self, k: u32) -> Option<i64> {
        if k >= 1 && k <= self.cutoff {
            Some(self.n1_by_row[(k - 1) as usize])
        } else {
            None
        }
    }

    /// Membership test, extended to negative n₂ by the F(n₁,±n₂) degeneracy.
    pub fn contains(&self, n: LatticeIndex) -> bool {
        let k = n.n2.unsigned_abs() as u32;
        self.n1_of_row(k) == Some(n.n1)
    }

    /// The members with n₂ = 1..=cutoff, sorted by n₂.
    pub fn members(&self) -> Vec<LatticeIndex> {
        self.n1_by_row
            .iter()
            .enumerate()
            .map(|(i, &n1)| LatticeIndex::new(n1, i as i64 + 1))
            .collect()
    }

    /// d(n): distance of n₁ to the critical first coordinates of the
    /// adjacent rows |n₂| ± 1. Requires n ∈ S and the row above within
    /// cutoff.
    pub fn row_gap(&self, n: LatticeIndex) -> Result<u64> {
        let k = n.n2.unsigned_abs() as u32;
        if !self.contains(n) {
            return Err(Error::PreconditionViolated(format!("{n} is not in the critical set")));
        }
        let above = self
            .n1_of_row(k + 1)
            .ok_or_else(|| Error::CutoffTooSmall(format!("row {} needed for d({n})", k + 1)))?;
        let mut d = (above - n.n1).unsigned_abs();
        if k >= 2 {
            // row k - 1 exists inside the set; row 0 has no critical index
            let below = self.n1_of_row(k - 1).expect("row below within cutoff");
            d = d.min((below - n.n1).unsigned_abs());
        }
        Ok(d)
    }

    /// L(n) = min{|n₂|, d(n)}.
    pub fn locality(&self, n: LatticeIndex) -> Result<u64> {
        Ok(self.row_gap(n)?.min(n.n2.unsigned_abs()))
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }
}

/// (d(n), L(n)) for n ∈ S, per the locality function on the critical set.
pub fn locality_gap(n: LatticeIndex, set: &CriticalSet) -> Result<(u64, u64)> {
    Ok((set.row_gap(n)?, set.locality(n)?))
}

/// min over 0 ≤ k ≤ k_max of (E(k+1) − E(k)) / (k+1)^α for E(k) = k².
///
/// For α = 1 the ratio (2k+1)/(k+1) is increasing, so the infimum C_E = 1 is
/// attained at k = 0.
pub fn gap_constant(alpha: f64, k_max: u32) -> f64 {
    (0..=k_max)
        .map(|k| {
            let k = k as f64;
            (2.0 * k + 1.0) / (k + 1.0).powf(alpha)
        })
        .fold(f64::INFINITY, f64::min)
}

/// Exhaustive check of |E(j) − E(k)| ≥ (C_E/(α+1))|j−k|·max{j,k}^α over
/// 0 ≤ j, k ≤ limit.
pub fn gap_spread_holds(c_e: f64, alpha: f64, limit: u32) -> bool {
    for j in 0..=limit as i64 {
        for k in 0..=limit as i64 {
            let lhs = (j * j - k * k).unsigned_abs() as f64;
            let m = j.max(k) as f64;
            let rhs = c_e / (alpha + 1.0) * (j - k).unsigned_abs() as f64 * m.powf(alpha);
            if lhs < rhs - 1e-12 {
                return false;
            }
        }
    }
    true
}

//! Involutions in the centralizer `Z^ν` of the standard permutation `w_ν`.
//!
//! `w_ν` rotates each cycle `j` of length `ν_j`: `(j, i) ↦ (j, i+1)`. An
//! involution commuting with it is recorded at cycle level as a pairing `w̄`
//! of equal-length cycles plus a shift per cycle, so that
//! `w(j, i) = (w̄(j), i + shift_j)`.

mod brute;
mod signed;
mod weight;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{check_bound, Error, Result};
use crate::partition::Partition;

pub use brute::{brute_force_involutions, brute_force_signed, permutation_stats, BRUTE_FORCE_BOUND};
pub use signed::{
    for_each_signed, signed_count, weighted_signed_sum, Signature, SignedFamily, SignedInvolution,
};
pub use weight::{Statistic, Weight};

/// Largest `|ν|` accepted by the structured enumerators.
pub const DEFAULT_INVOLUTION_BOUND: usize = 14;

/// Cycle statistics of an involution; the suffix records the residue of the cycle length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct InvolutionStats {
    pub l1: usize,
    pub l2: usize,
    pub l3: usize,
    pub l1_even: usize,
    pub l1_odd: usize,
    pub l2_zero_mod_4: usize,
    pub l2_two_mod_4: usize,
    pub l3_even: usize,
    pub l3_odd: usize,
}

/// Which class a cycle of `w_ν` falls into under an involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleClass {
    /// fixed pointwise
    Fixed,
    /// mapped to itself by a half turn
    HalfTurn,
    /// swapped with another cycle
    Paired,
}

impl InvolutionStats {
    pub(crate) fn add(&mut self, class: CycleClass, len: usize) {
        match class {
            CycleClass::Fixed => {
                self.l1 += 1;
                if len % 2 == 0 {
                    self.l1_even += 1;
                } else {
                    self.l1_odd += 1;
                }
            }
            CycleClass::HalfTurn => {
                self.l2 += 1;
                if len % 4 == 0 {
                    self.l2_zero_mod_4 += 1;
                } else {
                    self.l2_two_mod_4 += 1;
                }
            }
            CycleClass::Paired => {
                self.l3 += 1;
                if len % 2 == 0 {
                    self.l3_even += 1;
                } else {
                    self.l3_odd += 1;
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CentralizerInvolution {
    lengths: Vec<usize>,
    pairing: Vec<usize>,
    shifts: Vec<usize>,
}

impl CentralizerInvolution {
    /// Validates the pairing and shifts against `ν`.
    pub fn new(nu: &Partition, pairing: Vec<usize>, shifts: Vec<usize>) -> Result<Self> {
        let lengths = nu.parts().to_vec();
        let l = lengths.len();
        let bad = |why: &str| Err(Error::Incompatible(format!("not an involution in Z^ν: {why}")));
        if pairing.len() != l || shifts.len() != l {
            return bad("wrong number of cycles");
        }
        for j in 0..l {
            let k = pairing[j];
            if k >= l || pairing[k] != j || lengths[k] != lengths[j] {
                return bad("pairing");
            }
            if shifts[j] >= lengths[j] || (shifts[j] + shifts[k]) % lengths[j] != 0 {
                return bad("shifts");
            }
        }
        Ok(CentralizerInvolution { lengths, pairing, shifts })
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    pub fn shifts(&self) -> &[usize] {
        &self.shifts
    }

    pub fn class_of(&self, j: usize) -> CycleClass {
        if self.pairing[j] != j {
            CycleClass::Paired
        } else if self.shifts[j] == 0 {
            CycleClass::Fixed
        } else {
            CycleClass::HalfTurn
        }
    }

    pub fn cycle_length(&self, j: usize) -> usize {
        self.lengths[j]
    }

    pub fn stats(&self) -> InvolutionStats {
        let mut s = InvolutionStats::default();
        for j in 0..self.lengths.len() {
            s.add(self.class_of(j), self.lengths[j]);
        }
        s
    }

    /// Indices of the pointwise fixed cycles, in increasing order.
    pub fn fixed_cycles(&self) -> Vec<usize> {
        (0..self.lengths.len())
            .filter(|&j| self.class_of(j) == CycleClass::Fixed)
            .collect()
    }

    /// The involution as a permutation of `Ω(ν)`, cycle `j` occupying a
    /// contiguous block of points in order.
    pub fn to_permutation(&self) -> Vec<usize> {
        let starts = block_starts(&self.lengths);
        let mut perm = vec![0; self.lengths.iter().sum()];
        for (j, &len) in self.lengths.iter().enumerate() {
            let k = self.pairing[j];
            for i in 0..len {
                perm[starts[j] + i] = starts[k] + (i + self.shifts[j]) % len;
            }
        }
        perm
    }
}

pub(crate) fn block_starts(lengths: &[usize]) -> Vec<usize> {
    lengths
        .iter()
        .scan(0, |acc, &l| {
            let s = *acc;
            *acc += l;
            Some(s)
        })
        .collect()
}

/// Constraints on `ℓ` statistics used throughout the identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InvolutionFilter {
    #[default]
    None,
    /// `ℓ¹ = 0`
    FixedPointFree,
    /// `ℓ¹₁ = 0`
    NoOddFixed,
    /// `ℓ¹₀ = ℓ²₀ = 0`
    NoEvenFixedOrHalfTurn,
    /// `ℓ¹ = ℓ² = 0`
    NoFixedOrHalfTurn,
}

impl InvolutionFilter {
    pub fn admits(self, s: &InvolutionStats) -> bool {
        match self {
            InvolutionFilter::None => true,
            InvolutionFilter::FixedPointFree => s.l1 == 0,
            InvolutionFilter::NoOddFixed => s.l1_odd == 0,
            InvolutionFilter::NoEvenFixedOrHalfTurn => s.l1_even == 0 && s.l2 == 0,
            InvolutionFilter::NoFixedOrHalfTurn => s.l1 == 0 && s.l2 == 0,
        }
    }

    pub fn key(self) -> &'static str {
        match self {
            InvolutionFilter::None => "none",
            InvolutionFilter::FixedPointFree => "l1=0",
            InvolutionFilter::NoOddFixed => "l1_1=0",
            InvolutionFilter::NoEvenFixedOrHalfTurn => "l1_0=l2_0=0",
            InvolutionFilter::NoFixedOrHalfTurn => "l1=l2=0",
        }
    }
}

impl fmt::Display for InvolutionFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for InvolutionFilter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "none" => InvolutionFilter::None,
            "ff" | "l1=0" => InvolutionFilter::FixedPointFree,
            "l1_1=0" => InvolutionFilter::NoOddFixed,
            // ℓ²₁ is always 0, so ℓ²₀ = 0 is the same as ℓ² = 0
            "l1_0=l2_0=0" | "l1_0=l2=0" => InvolutionFilter::NoEvenFixedOrHalfTurn,
            "l1=l2=0" => InvolutionFilter::NoFixedOrHalfTurn,
            _ => {
                return Err(Error::Unknown {
                    kind: "filter",
                    name: s.to_string(),
                })
            }
        })
    }
}

/// Calls `f` once per element of `Z^ν_inv` passing `filter`.
pub fn for_each_involution<F>(nu: &Partition, filter: InvolutionFilter, mut f: F) -> Result<()>
where
    F: FnMut(&CentralizerInvolution, &InvolutionStats),
{
    for_each_involution_bounded(nu, filter, DEFAULT_INVOLUTION_BOUND, &mut f)
}

pub fn for_each_involution_bounded<F>(
    nu: &Partition,
    filter: InvolutionFilter,
    bound: usize,
    f: &mut F,
) -> Result<()>
where
    F: FnMut(&CentralizerInvolution, &InvolutionStats),
{
    check_bound("involution size", nu.size(), bound)?;
    let l = nu.len();
    let mut w = CentralizerInvolution {
        lengths: nu.parts().to_vec(),
        pairing: vec![usize::MAX; l],
        shifts: vec![0; l],
    };
    let mut visit = |w: &CentralizerInvolution| {
        let s = w.stats();
        if filter.admits(&s) {
            f(w, &s);
        }
    };
    build(&mut w, 0, &mut visit);
    Ok(())
}

fn build<F: FnMut(&CentralizerInvolution)>(w: &mut CentralizerInvolution, j: usize, f: &mut F) {
    let l = w.lengths.len();
    if j == l {
        f(w);
        return;
    }
    if w.pairing[j] != usize::MAX {
        build(w, j + 1, f);
        return;
    }
    let len = w.lengths[j];
    w.pairing[j] = j;
    w.shifts[j] = 0;
    build(w, j + 1, f);
    if len % 2 == 0 {
        w.shifts[j] = len / 2;
        build(w, j + 1, f);
    }
    // parts are sorted, so equal lengths are contiguous
    for k in j + 1..l {
        if w.lengths[k] != len {
            break;
        }
        if w.pairing[k] != usize::MAX {
            continue;
        }
        w.pairing[j] = k;
        w.pairing[k] = j;
        for s in 0..len {
            w.shifts[j] = s;
            w.shifts[k] = (len - s) % len;
            build(w, j + 1, f);
        }
        w.pairing[k] = usize::MAX;
        w.shifts[k] = 0;
    }
    w.pairing[j] = usize::MAX;
    w.shifts[j] = 0;
}

pub fn enumerate_involutions(nu: &Partition, filter: InvolutionFilter) -> Result<Vec<CentralizerInvolution>> {
    let mut out = Vec::new();
    for_each_involution(nu, filter, |w, _| out.push(w.clone()))?;
    Ok(out)
}

pub fn involution_count(nu: &Partition, filter: InvolutionFilter) -> Result<u64> {
    let mut n = 0;
    for_each_involution(nu, filter, |_, _| n += 1)?;
    Ok(n)
}

/// `Σ weight(w)` over the filtered elements of `Z^ν_inv`.
pub fn weighted_involution_sum(nu: &Partition, filter: InvolutionFilter, weight: &Weight) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for_each_involution(nu, filter, |_, s| total += weight.eval(s))?;
    Ok(total)
}

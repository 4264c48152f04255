//! Involutions carrying a sign on their fixed points.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::{for_each_involution, CentralizerInvolution, InvolutionFilter, InvolutionStats, Weight};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// `Plus`: `ε∘w_ν = ε`, one sign per fixed cycle. `Star`: `ε∘w_ν = -ε`,
/// legal only on even fixed cycles, each carrying one of two alternating patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignedFamily {
    Plus,
    Star,
}

impl FromStr for SignedFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" => Ok(SignedFamily::Plus),
            "star" => Ok(SignedFamily::Star),
            _ => Err(Error::Unknown {
                kind: "family",
                name: s.to_string(),
            }),
        }
    }
}

/// A signature `(p⁺, p⁻)` modulo `(1, 1)`, stored as `p⁺ - p⁻`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "(usize, usize)")]
pub struct Signature(pub i64);

impl Signature {
    pub fn new(plus: usize, minus: usize) -> Self {
        Signature(plus as i64 - minus as i64)
    }

    pub fn difference(self) -> i64 {
        self.0
    }

    /// Representative with smaller component 0.
    pub fn canonical(self) -> (usize, usize) {
        if self.0 >= 0 {
            (self.0 as usize, 0)
        } else {
            (0, (-self.0) as usize)
        }
    }
}

impl From<Signature> for (usize, usize) {
    fn from(s: Signature) -> Self {
        s.canonical()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, m) = self.canonical();
        write!(f, "({p},{m})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedInvolution {
    pub base: CentralizerInvolution,
    pub family: SignedFamily,
    /// One bit per pointwise fixed cycle, in cycle order. For `Plus`, `true`
    /// is the sign `+` on the whole cycle; for `Star`, `true` puts `+` on the
    /// cycle's first point.
    pub bits: Vec<bool>,
}

impl SignedInvolution {
    pub fn signature(&self) -> Signature {
        match self.family {
            SignedFamily::Star => Signature(0),
            SignedFamily::Plus => Signature(
                self.base
                    .fixed_cycles()
                    .iter()
                    .zip(&self.bits)
                    .map(|(&j, &plus)| {
                        let len = self.base.cycle_length(j) as i64;
                        if plus {
                            len
                        } else {
                            -len
                        }
                    })
                    .sum(),
            ),
        }
    }
}

/// Calls `f` on each signed involution of the family, restricted to one
/// signature class when given.
pub fn for_each_signed<F>(nu: &Partition, family: SignedFamily, signature: Option<Signature>, mut f: F) -> Result<()>
where
    F: FnMut(&SignedInvolution, &InvolutionStats),
{
    let filter = match family {
        SignedFamily::Plus => InvolutionFilter::None,
        SignedFamily::Star => InvolutionFilter::NoOddFixed,
    };
    for_each_involution(nu, filter, |w, s| {
        let fixed = s.l1;
        for mask in 0u64..(1u64 << fixed) {
            let bits = (0..fixed).map(|b| mask >> b & 1 == 0).collect();
            let signed = SignedInvolution {
                base: w.clone(),
                family,
                bits,
            };
            if signature.map_or(true, |sig| signed.signature() == sig) {
                f(&signed, s);
            }
        }
    })
}

pub fn signed_count(nu: &Partition, family: SignedFamily, signature: Option<Signature>) -> Result<u64> {
    let mut n = 0;
    for_each_signed(nu, family, signature, |_, _| n += 1)?;
    Ok(n)
}

/// `Σ weight(w)` over signed involutions, the weight reading only the underlying involution.
pub fn weighted_signed_sum(
    nu: &Partition,
    family: SignedFamily,
    signature: Option<Signature>,
    weight: &Weight,
) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for_each_signed(nu, family, signature, |_, s| total += weight.eval(s))?;
    Ok(total)
}

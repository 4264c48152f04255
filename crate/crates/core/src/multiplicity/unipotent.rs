use num_bigint::BigInt;
use num_integer::Integer;

use super::{SymmetricSpaceCase, SymmetricSpaceKind};
use crate::error::{Error, Result};
use crate::involution::Signature;
use crate::partition::Partition;
use crate::tableau::strip_chain_sum;

/// Closed forms for unipotent `χ^ρ`, with no orbit table involved.
pub fn unipotent_multiplicity(case: &SymmetricSpaceCase, rho: &Partition) -> Result<BigInt> {
    use SymmetricSpaceKind::*;
    if rho.size() != case.n() {
        return Err(Error::SizeMismatch {
            left: rho.size(),
            right: case.n(),
        });
    }
    let rt = rho.transpose();
    let d = case.signature_difference();
    let halve = |x: u64| -> Result<BigInt> {
        if x % 2 == 0 {
            Ok((x / 2).into())
        } else {
            Err(Error::NonIntegral(format!("{x}/2 for {case} at {rho}")))
        }
    };
    // ⌈x/2⌉ for ε = +, ⌊x/2⌋ for ε = -
    let round = |x: u64| -> BigInt {
        let (q, r) = x.div_rem(&2);
        (q + if case.epsilon() > 0 { r } else { 0 }).into()
    };
    Ok(match case.kind() {
        GlSp | USp | GlGlQ2 => u8::from(rho.is_even()).into(),
        GlGlGl => strip_chain_sum(&rt, Signature(d)).into(),
        UUU => psi_fixed_by_signature(&rt, d).into(),
        UUQ4 if rt.even_multiplicities_of_parity(1) => rt.multiplicity_product(Some(0)).into(),
        UUQ4 => 0.into(),
        GlO => halve(rho.multiplicity_product(None))?,
        GlOEps if rt.is_even() => round(rho.multiplicity_product(None)),
        GlOEps => halve(rho.multiplicity_product(None))?,
        UO if rho.even_multiplicities_of_parity(0) => halve(rho.multiplicity_product(Some(1)))?,
        UO => 0.into(),
        UOEps if rt.is_even() => round(rho.multiplicity_product(Some(0))),
        UOEps if rho.even_multiplicities_of_parity(1) => halve(rho.multiplicity_product(Some(0)))?,
        UOEps => 0.into(),
    })
}

/// `|T_{(p⁺,p⁻)}(μ)^ψ|` with `p⁺ - p⁻ = d`: each even row length needs an even
/// number of rows split evenly between the terminal signs, and each odd row
/// length of multiplicity `m` with `p` rows ending `+` shifts the signature by
/// `2p - m`.
fn psi_fixed_by_signature(mu: &Partition, d: i64) -> u64 {
    let mut ways = std::collections::BTreeMap::from([(0i64, 1u64)]);
    for (&len, &m) in &mu.multiplicities() {
        if len % 2 == 0 {
            if m % 2 == 1 {
                return 0;
            }
            continue;
        }
        let mut next = std::collections::BTreeMap::new();
        for (&s, &w) in &ways {
            for p in 0..=m as i64 {
                *next.entry(s + 2 * p - m as i64).or_insert(0) += w;
            }
        }
        ways = next;
    }
    ways.get(&d).copied().unwrap_or(0)
}

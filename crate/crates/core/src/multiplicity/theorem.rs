use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{MultiPartition, SymmetricSpaceCase, SymmetricSpaceKind};
use crate::error::{Error, Result};
use crate::involution::Signature;
use crate::orbit::{zeta_twist, OrbitTable, OrbitTag};
use crate::partition::Partition;
use crate::tableau::{fixed_counts, tableau_count};

/// `⟨χ^ρ̲, Ind_K^G(1)⟩`.
pub fn multiplicity(case: &SymmetricSpaceCase, table: &OrbitTable, rho: &MultiPartition) -> Result<BigInt> {
    case.check(table, rho)?;
    to_integer(theorem_value(case, table, rho)?, || format!("{case} at {rho:?}"))
}

/// The same multiplicity for `K = SO_n`: the `O_n` value at `ρ̲` plus that at
/// `ζ.ρ̲`, where `ζ` is the level-one class `k_zeta` (odd).
pub fn so_multiplicity(
    case: &SymmetricSpaceCase,
    table: &OrbitTable,
    rho: &MultiPartition,
    k_zeta: u64,
) -> Result<BigInt> {
    if !case.kind().is_orthogonal() {
        return Err(Error::Incompatible(format!("{} has no special orthogonal variant", case.kind())));
    }
    let twisted = zeta_twist(table, rho, k_zeta)?;
    Ok(multiplicity(case, table, rho)? + multiplicity(case, table, &twisted)?)
}

pub(crate) fn to_integer(v: BigRational, what: impl FnOnce() -> String) -> Result<BigInt> {
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(Error::NonIntegral(format!("{v} for {}", what())))
    }
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// `ρ_ξ = ρ_{ξ^∨}` across every dual pair.
fn dual_condition(table: &OrbitTable, rho: &MultiPartition) -> bool {
    let empty = Partition::empty();
    table.orbits.iter().all(|o| match o.tag {
        OrbitTag::DualPair { partner } => rho.get(o.id).unwrap_or(&empty) == rho.get(partner).unwrap_or(&empty),
        _ => true,
    })
}

fn tagged(table: &OrbitTable, rho: &MultiPartition, tag: OrbitTag) -> Partition {
    table
        .find(tag)
        .and_then(|o| rho.get(o.id))
        .cloned()
        .unwrap_or_default()
}

fn theorem_value(case: &SymmetricSpaceCase, table: &OrbitTable, rho: &MultiPartition) -> Result<BigRational> {
    use SymmetricSpaceKind::*;
    let rho1 = tagged(table, rho, OrbitTag::One);
    let rho1t = rho1.transpose();
    let inner_ok = || dual_condition(table, rho) && tagged(table, rho, OrbitTag::MinusOne).transpose().is_even();
    let all_transposes_even = || rho.assignments().values().all(|p| p.transpose().is_even());
    let d = case.signature_difference();
    Ok(match case.kind() {
        GlSp | USp => int(u8::from(rho.assignments().values().all(Partition::is_even))),
        GlGlGl if inner_ok() => int(tableau_count(&rho1t, Some(Signature(d)))?),
        GlGlQ2 if inner_ok() && rho1.is_even() => int(1),
        UUU if inner_ok() => int(fixed_counts(&rho1t)?.psi_by_signature.get(&d).copied().unwrap_or(0)),
        UUQ4 if inner_ok() && rho1t.even_multiplicities_of_parity(1) => int(rho1t.multiplicity_product(Some(0))),
        GlGlGl | GlGlQ2 | UUU | UUQ4 => BigRational::zero(),
        GlO | GlOEps => {
            let mut product = Some(BigInt::one());
            for o in &table.orbits {
                let p = rho.get(o.id).cloned().unwrap_or_default();
                if o.d == 1 {
                    product = product.map(|x| x * p.multiplicity_product(None));
                } else if !p.transpose().is_even() {
                    product = None;
                }
            }
            let mut v = product.map_or_else(BigRational::zero, |x| half() * int(x));
            if case.kind() == GlOEps && all_transposes_even() {
                v += half() * int(case.epsilon());
            }
            v
        }
        UO | UOEps => {
            let swapped = case.kind() == UOEps;
            let mut product = Some(BigInt::one());
            for o in &table.orbits {
                let p = rho.get(o.id).cloned().unwrap_or_default();
                let factor = orthogonal_unitary_factor(o.d, o.m, &p, swapped);
                product = product.zip(factor).map(|(x, f)| x * f);
            }
            let mut v = product.map_or_else(BigRational::zero, |x| half() * int(x));
            if swapped && all_transposes_even() {
                v += half() * int(case.epsilon());
            }
            v
        }
    })
}

/// Per-orbit factor of the `U_n/O_n` decision table, or `None` when the
/// orbit's zero condition fails. `swapped` exchanges the two odd-`m̃` rows,
/// as in the `O_n^ε` case.
fn orthogonal_unitary_factor(d: i32, m: usize, p: &Partition, swapped: bool) -> Option<u64> {
    let m_odd = m % 2 == 1;
    match (d == 1, m_odd) {
        (true, false) => Some(p.multiplicity_product(None)),
        (false, false) => p.transpose().is_even().then_some(1),
        (d_plus, true) => {
            // (d̃ = 1, m̃ odd): 2 | m_{2i}, product over odd parts
            let even_parts_paired = d_plus != swapped;
            let (cond, factor) = if even_parts_paired { (0, 1) } else { (1, 0) };
            p.even_multiplicities_of_parity(cond)
                .then(|| p.multiplicity_product(Some(factor)))
        }
    }
}

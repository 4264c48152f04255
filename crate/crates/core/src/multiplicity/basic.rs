//! `⟨B_ν̲, Ind_K^G(1)⟩` for the basic characters: once from the reduced
//! involution sums, once by expanding `B_ν̲` in irreducible characters.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::theorem::{multiplicity, to_integer};
use super::{sign, MultiPartition, SymmetricSpaceCase, SymmetricSpaceKind, DEFAULT_BASIC_BOUND};
use crate::character::character;
use crate::error::{check_bound, Error, Result};
use crate::involution::{
    involution_count, weighted_involution_sum, weighted_signed_sum, InvolutionFilter, Signature, SignedFamily,
    Statistic, Weight,
};
use crate::orbit::{FrobeniusOrbit, OrbitTable, OrbitTag, Twist};
use crate::partition::{partitions_of, Partition};

/// Most orbits a basic character may be supported on.
pub const MAX_BASIC_SUPPORT: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Involution,
    Character,
}

impl FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "involution" => Ok(Route::Involution),
            "character" => Ok(Route::Character),
            _ => Err(Error::Unknown {
                kind: "route",
                name: s.to_string(),
            }),
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Involution => "involution",
            Route::Character => "character",
        })
    }
}

pub fn basic_character_multiplicity(
    case: &SymmetricSpaceCase,
    table: &OrbitTable,
    nu: &MultiPartition,
    route: Route,
) -> Result<BigInt> {
    case.check(table, nu)?;
    check_bound("basic character rank", nu.n(), DEFAULT_BASIC_BOUND)?;
    check_bound("basic character support", nu.assignments().len(), MAX_BASIC_SUPPORT)?;
    match route {
        Route::Involution => to_integer(involution_route(case, table, nu)?, || format!("{case} at {nu:?}")),
        Route::Character => character_route(case, table, nu),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RouteComparison {
    #[serde(serialize_with = "crate::serialize_bigint")]
    pub involution: BigInt,
    #[serde(serialize_with = "crate::serialize_bigint")]
    pub character: BigInt,
    pub agree: bool,
}

impl RouteComparison {
    pub fn into_result(self) -> Result<BigInt> {
        if self.agree {
            Ok(self.involution)
        } else {
            Err(Error::RouteMismatch {
                involution: self.involution.to_string(),
                character: self.character.to_string(),
            })
        }
    }
}

pub fn crosscheck_routes(case: &SymmetricSpaceCase, table: &OrbitTable, nu: &MultiPartition) -> Result<RouteComparison> {
    let involution = basic_character_multiplicity(case, table, nu, Route::Involution)?;
    let character = basic_character_multiplicity(case, table, nu, Route::Character)?;
    let agree = involution == character;
    Ok(RouteComparison {
        involution,
        character,
        agree,
    })
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

fn ff(nu: &Partition) -> Result<BigInt> {
    Ok(involution_count(nu, InvolutionFilter::FixedPointFree)?.into())
}

/// `ε_ν |Z^ν_{ff-inv}|`
fn signed_ff(nu: &Partition) -> Result<BigInt> {
    Ok(ff(nu)? * nu.epsilon())
}

fn no_odd_fixed_if(cond: bool) -> InvolutionFilter {
    if cond {
        InvolutionFilter::NoOddFixed
    } else {
        InvolutionFilter::None
    }
}

fn involution_route(case: &SymmetricSpaceCase, table: &OrbitTable, nu: &MultiPartition) -> Result<BigRational> {
    use SymmetricSpaceKind::*;
    let part = |o: &FrobeniusOrbit| nu.get(o.id).cloned().unwrap_or_default();
    let support: Vec<(&FrobeniusOrbit, Partition)> = table
        .orbits
        .iter()
        .filter(|o| nu.get(o.id).is_some())
        .map(|o| (o, part(o)))
        .collect();
    let product = |f: &dyn Fn(&FrobeniusOrbit, &Partition) -> Result<BigInt>| -> Result<BigInt> {
        let mut acc = BigInt::one();
        for (o, p) in &support {
            acc *= f(o, p)?;
        }
        Ok(acc)
    };
    let n = case.n();
    let unitary = case.twist() == Twist::Nonsplit;
    Ok(match case.kind() {
        GlSp | USp => int(product(&|_, p| ff(p))?),
        GlGlGl | GlGlQ2 | UUU | UUQ4 => {
            let nu1 = table.find(OrbitTag::One).map(part).unwrap_or_default();
            let weight = if unitary {
                Weight::sign(&[Statistic::L2ZeroMod4, Statistic::HalfL3Odd])
            } else {
                Weight::sign(&[Statistic::L2])
            };
            let first = match case.kind() {
                GlGlGl | UUU => weighted_signed_sum(&nu1, SignedFamily::Plus, Some(Signature(case.signature_difference())), &weight)?,
                _ => weighted_signed_sum(&nu1, SignedFamily::Star, None, &weight)?,
            };
            let mut acc = first;
            // the `δ z` factor sits on the lower id of each dual pair
            for o in &table.orbits {
                if let OrbitTag::DualPair { partner } = o.tag {
                    if partner < o.id {
                        continue;
                    }
                    let (a, b) = (part(o), nu.get(partner).cloned().unwrap_or_default());
                    if a != b {
                        return Ok(BigRational::zero());
                    }
                    acc *= a.z() * sign(unitary && o.m % 2 == 1 && a.size() % 2 == 1);
                }
            }
            let rest = product(&|o, p| {
                Ok(match o.tag {
                    OrbitTag::One | OrbitTag::DualPair { .. } => BigInt::one(),
                    OrbitTag::MinusOne if unitary && p.size() % 2 == 1 => BigInt::zero(),
                    OrbitTag::MinusOne if unitary => signed_ff(p)? * sign(p.size() / 2 % 2 == 1),
                    OrbitTag::MinusOne => signed_ff(p)?,
                    OrbitTag::SelfDual => {
                        let count = BigInt::from(involution_count(p, InvolutionFilter::NoEvenFixedOrHalfTurn)?);
                        let signed = !unitary || o.m % 4 == 0;
                        count * sign(signed && p.size() % 2 == 1)
                    }
                })
            })?;
            int(acc * rest)
        }
        GlO | GlOEps => {
            let main = product(&|o, p| {
                weighted_involution_sum(p, no_odd_fixed_if(o.d == -1), &Weight::one().with_base(-2))
            })?;
            if case.kind() == GlO {
                -half() * int(main)
            } else {
                half() * int(main) + half() * int(case.epsilon()) * int(product(&|_, p| signed_ff(p))?)
            }
        }
        UO | UOEps => {
            let eps_case = case.kind() == UOEps;
            let odd_weight = Weight::sign(&[Statistic::L1Even, Statistic::L2TwoMod4, Statistic::HalfL3Odd]).with_base(2);
            let main = product(&|o, p| {
                if o.m % 2 == 1 {
                    // U/O: d̃ = -1 forbids odd fixed cycles; O^ε reverses the sign of d̃
                    let restricted = if eps_case { o.d == 1 } else { o.d == -1 };
                    weighted_involution_sum(p, no_odd_fixed_if(restricted), &odd_weight)
                } else {
                    weighted_involution_sum(p, no_odd_fixed_if(o.d == -1), &Weight::one().with_base(-2))
                }
            })?;
            // ⌊n/2⌋ for n odd, n/2 for n even
            let lead = (n / 2) % 2 == 1;
            let mut v = half() * int(main * sign(lead));
            if eps_case {
                let second = product(&|o, p| {
                    if o.m % 2 == 0 {
                        signed_ff(p)
                    } else if p.size() % 2 == 1 {
                        Ok(BigInt::zero())
                    } else {
                        Ok(signed_ff(p)? * sign(p.size() / 2 % 2 == 1))
                    }
                })?;
                v += half() * int(case.epsilon()) * int(second);
            }
            v
        }
    })
}

fn character_route(case: &SymmetricSpaceCase, table: &OrbitTable, nu: &MultiPartition) -> Result<BigInt> {
    let n = case.n();
    // orbit id, orbit size, and every (ρ_ξ, χ^{ρ_ξ}_{ν_ξ}) with χ ≠ 0
    let mut factors: Vec<(usize, usize, Vec<(Partition, BigInt)>)> = Vec::new();
    for (&id, p) in nu.assignments() {
        let m = table.orbit(id)?.m;
        let mut options = Vec::new();
        for rho in partitions_of(p.size())? {
            let chi = character(&rho, p)?;
            if !chi.is_zero() {
                options.push((rho, chi));
            }
        }
        factors.push((id, m, options));
    }
    let mut total = BigInt::zero();
    let mut choice = vec![0usize; factors.len()];
    loop {
        let mut chi = BigInt::one();
        let mut exponent = match case.twist() {
            Twist::Split => n + nu.assignments().values().map(Partition::size).sum::<usize>(),
            Twist::Nonsplit => n.div_ceil(2),
        };
        let mut assignment = BTreeMap::new();
        for ((id, m, options), &c) in factors.iter().zip(&choice) {
            let (rho, value) = &options[c];
            chi *= value;
            if case.twist() == Twist::Nonsplit {
                exponent += m * rho.transpose().n_stat() + rho.size();
            }
            assignment.insert(*id, rho.clone());
        }
        let rho = MultiPartition::new(table, assignment)?;
        let mult = multiplicity(case, table, &rho)?;
        if !mult.is_zero() {
            total += chi * mult * sign(exponent % 2 == 1);
        }
        // odometer over the per-orbit choices
        let mut k = 0;
        loop {
            if k == factors.len() {
                return Ok(total);
            }
            choice[k] += 1;
            if choice[k] < factors[k].2.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_examples() {
        let table = OrbitTable::concrete(3, Twist::Split, 1).unwrap();
        let case = SymmetricSpaceCase::new(SymmetricSpaceKind::GlSp, 2, None, None).unwrap();
        let nu = MultiPartition::unipotent(&table, p(&[1, 1])).unwrap();
        let c = crosscheck_routes(&case, &table, &nu).unwrap();
        assert_eq!((c.involution, c.character), (1.into(), 1.into()));

        let case = SymmetricSpaceCase::new(SymmetricSpaceKind::GlO, 1, None, None).unwrap();
        let nu = MultiPartition::unipotent(&table, p(&[1])).unwrap();
        let c = crosscheck_routes(&case, &table, &nu).unwrap();
        assert_eq!((c.involution, c.character), (1.into(), 1.into()));
    }

    #[test]
    fn unequal_dual_pair_vanishes() {
        let table = OrbitTable::concrete(5, Twist::Split, 1).unwrap();
        let case = SymmetricSpaceCase::new(SymmetricSpaceKind::GlGlGl, 3, Some((2, 1)), None).unwrap();
        let nu = MultiPartition::new(&table, BTreeMap::from([(1, p(&[2])), (3, p(&[1]))])).unwrap();
        let c = crosscheck_routes(&case, &table, &nu).unwrap();
        assert_eq!((c.involution, c.character), (0.into(), 0.into()));
    }
}

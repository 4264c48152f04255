//! The symmetric-group identities behind the multiplicity formulas. Each
//! left side is an involution sum, each right side a character sum.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::character::{weighted_character_sum, CharFilter};
use crate::error::{Error, Result};
use crate::involution::{
    involution_count, weighted_involution_sum, weighted_signed_sum, InvolutionFilter, Signature, SignedFamily,
    Statistic, Weight,
};
use crate::partition::{partitions_of, Partition};
use crate::tableau::{fixed_counts, tableau_count};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityName {
    FfInv,
    Macdonald,
    GlnGlnGln,
    GlnGlnStar,
    OtherGlnOn,
    UnUnUn,
    UnUn,
    GlnOn,
    GlnSon,
    UnOn,
    UnSon,
}

impl IdentityName {
    pub const ALL: [IdentityName; 11] = [
        IdentityName::FfInv,
        IdentityName::Macdonald,
        IdentityName::GlnGlnGln,
        IdentityName::GlnGlnStar,
        IdentityName::OtherGlnOn,
        IdentityName::UnUnUn,
        IdentityName::UnUn,
        IdentityName::GlnOn,
        IdentityName::GlnSon,
        IdentityName::UnOn,
        IdentityName::UnSon,
    ];

    pub fn key(self) -> &'static str {
        match self {
            IdentityName::FfInv => "ff-inv",
            IdentityName::Macdonald => "macdonald-I8E11",
            IdentityName::GlnGlnGln => "glnglngln",
            IdentityName::GlnGlnStar => "glngln-star",
            IdentityName::OtherGlnOn => "other-gln-on",
            IdentityName::UnUnUn => "ununun",
            IdentityName::UnUn => "unun",
            IdentityName::GlnOn => "gln-on",
            IdentityName::GlnSon => "gln-son",
            IdentityName::UnOn => "un-on",
            IdentityName::UnSon => "un-son",
        }
    }

    /// Identities stated per signature class.
    pub fn takes_signature(self) -> bool {
        matches!(self, IdentityName::GlnGlnGln | IdentityName::UnUnUn)
    }

    /// Identities whose left side runs over signed involutions.
    pub fn is_signed(self) -> bool {
        matches!(
            self,
            IdentityName::GlnGlnGln | IdentityName::GlnGlnStar | IdentityName::UnUnUn | IdentityName::UnUn
        )
    }
}

impl fmt::Display for IdentityName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for IdentityName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IdentityName::ALL
            .into_iter()
            .find(|n| n.key() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "identity",
                name: s.to_string(),
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCase {
    pub name: IdentityName,
    pub nu: Partition,
    pub signature: Option<Signature>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityOutcome {
    #[serde(serialize_with = "crate::serialize_bigint")]
    pub lhs: BigInt,
    #[serde(serialize_with = "crate::serialize_bigint")]
    pub rhs: BigInt,
    pub equal: bool,
}

fn sign(even: bool) -> BigInt {
    if even {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn unitary_weight() -> Weight {
    Weight::sign(&[Statistic::L2ZeroMod4, Statistic::HalfL3Odd])
}

pub fn identity_lhs(case: &IdentityCase) -> Result<BigInt> {
    use IdentityName::*;
    let nu = &case.nu;
    let sig = signature_of(case)?;
    let sign_l2 = Weight::sign(&[Statistic::L2]);
    Ok(match case.name {
        FfInv => involution_count(nu, InvolutionFilter::FixedPointFree)?.into(),
        Macdonald => weighted_involution_sum(nu, InvolutionFilter::None, &sign_l2)?,
        GlnGlnGln => weighted_signed_sum(nu, SignedFamily::Plus, sig, &sign_l2)?,
        GlnGlnStar => weighted_signed_sum(nu, SignedFamily::Star, None, &sign_l2)?,
        OtherGlnOn => involution_count(nu, InvolutionFilter::NoEvenFixedOrHalfTurn)?.into(),
        UnUnUn => weighted_signed_sum(nu, SignedFamily::Plus, sig, &unitary_weight())?,
        UnUn => weighted_signed_sum(nu, SignedFamily::Star, None, &unitary_weight())?,
        GlnOn => weighted_involution_sum(nu, InvolutionFilter::None, &Weight::one().with_base(-2))?,
        GlnSon => weighted_involution_sum(nu, InvolutionFilter::NoOddFixed, &Weight::one().with_base(-2))?,
        UnOn => weighted_involution_sum(
            nu,
            InvolutionFilter::None,
            &Weight::sign(&[Statistic::L1Even, Statistic::L2TwoMod4, Statistic::HalfL3Odd]).with_base(2),
        )?,
        UnSon => weighted_involution_sum(
            nu,
            InvolutionFilter::NoOddFixed,
            &Weight::sign(&[Statistic::L1, Statistic::L2TwoMod4, Statistic::HalfL3Odd]).with_base(2),
        )?,
    })
}

pub fn identity_rhs(case: &IdentityCase) -> Result<BigInt> {
    use IdentityName::*;
    let nu = &case.nu;
    let sig = signature_of(case)?;
    let one = |_: &Partition| BigInt::one();
    Ok(match case.name {
        FfInv | GlnGlnStar => weighted_character_sum(nu, CharFilter::Even, one)?,
        Macdonald | OtherGlnOn => weighted_character_sum(nu, CharFilter::All, one)?,
        GlnGlnGln => {
            let sig = sig.expect("checked by signature_of");
            weighted_character_sum(nu, CharFilter::All, |rho| {
                tableau_count(&rho.transpose(), Some(sig)).map(BigInt::from).unwrap_or_default()
            })?
        }
        UnUnUn => {
            let d = sig.expect("checked by signature_of").difference();
            weighted_character_sum(nu, CharFilter::All, |rho| {
                let fixed = fixed_counts(&rho.transpose()).map(|c| c.psi_by_signature.get(&d).copied().unwrap_or(0));
                sign(rho.n_stat() % 2 == 0) * BigInt::from(fixed.unwrap_or(0))
            })?
        }
        UnUn => weighted_character_sum(nu, CharFilter::All, |rho| {
            let t = rho.transpose();
            if t.even_multiplicities_of_parity(1) {
                sign(rho.n_stat() % 2 == 0) * BigInt::from(t.multiplicity_product(Some(0)))
            } else {
                BigInt::zero()
            }
        })?,
        GlnOn => {
            sign(nu.size() % 2 == 0)
                * weighted_character_sum(nu, CharFilter::All, |rho| BigInt::from(rho.multiplicity_product(None)))?
        }
        GlnSon => weighted_character_sum(nu, CharFilter::TransposeEven, one)?,
        UnOn => weighted_character_sum(nu, CharFilter::EvenMultiplicityOfEvenParts, |rho| {
            sign(rho.transpose().n_stat() % 2 == 0) * BigInt::from(rho.multiplicity_product(Some(1)))
        })?,
        UnSon => weighted_character_sum(nu, CharFilter::EvenMultiplicityOfOddParts, |rho| {
            sign(rho.transpose().n_stat() % 2 == 0) * BigInt::from(rho.multiplicity_product(Some(0)))
        })?,
    })
}

fn signature_of(case: &IdentityCase) -> Result<Option<Signature>> {
    match (case.name.takes_signature(), case.signature) {
        (true, None) => Err(Error::Incompatible(format!("identity {} needs a signature class", case.name))),
        (false, Some(_)) => Err(Error::Incompatible(format!("identity {} takes no signature", case.name))),
        (_, s) => Ok(s),
    }
}

pub fn check_identity(case: &IdentityCase) -> Result<IdentityOutcome> {
    let lhs = identity_lhs(case)?;
    let rhs = identity_rhs(case)?;
    let equal = lhs == rhs;
    Ok(IdentityOutcome { lhs, rhs, equal })
}

/// Every case of `name` with `|ν| ≤ max_size`; signature classes run over
/// `|p⁺ - p⁻| ≤ |ν|`.
pub fn identity_cases(name: IdentityName, max_size: usize) -> Result<Vec<IdentityCase>> {
    let mut out = Vec::new();
    for k in 0..=max_size {
        for nu in partitions_of(k)? {
            if name.takes_signature() {
                for d in -(k as i64)..=(k as i64) {
                    out.push(IdentityCase {
                        name,
                        nu: nu.clone(),
                        signature: Some(Signature(d)),
                    });
                }
            } else {
                out.push(IdentityCase {
                    name,
                    nu: nu.clone(),
                    signature: None,
                });
            }
        }
    }
    Ok(out)
}

/// The two multiplicative families with explicit values on rectangles `(a^b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormFamily {
    /// `ε_ν Σ_{ℓ¹₁=0} (-2)^{ℓ¹} = |Z^ν_ff|`
    FfInvSigned,
    /// `#{ℓ¹₀ = ℓ²₀ = 0} = Σ (-1)^{ℓ²}`
    OtherGlnOn,
}

impl ClosedFormFamily {
    pub const ALL: [ClosedFormFamily; 2] = [ClosedFormFamily::FfInvSigned, ClosedFormFamily::OtherGlnOn];

    pub fn key(self) -> &'static str {
        match self {
            ClosedFormFamily::FfInvSigned => "ff-inv-signed",
            ClosedFormFamily::OtherGlnOn => "other-gln-on",
        }
    }
}

impl FromStr for ClosedFormFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ClosedFormFamily::ALL
            .into_iter()
            .find(|f| f.key() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "family",
                name: s.to_string(),
            })
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn binomial(n: usize, k: usize) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Perfect matchings with a free shift in `Z/a` per matched pair, the
/// remaining cycles fixed.
fn matchings_with_shifts(a: usize, b: usize) -> BigInt {
    (0..=b / 2)
        .map(|r| {
            binomial(b, 2 * r) * BigInt::from(a).pow(r as u32) * factorial(2 * r)
                / (BigInt::from(2).pow(r as u32) * factorial(r))
        })
        .sum()
}

fn perfect_matchings_with_shifts(a: usize, b: usize) -> BigInt {
    if b % 2 == 1 {
        return BigInt::zero();
    }
    let h = b / 2;
    BigInt::from(a).pow(h as u32) * factorial(b) / (BigInt::from(2).pow(h as u32) * factorial(h))
}

/// Value on the rectangle `(a^b)`.
pub fn rectangle_closed_form(a: usize, b: usize, family: ClosedFormFamily) -> BigInt {
    // the second family is the first with the parity of a exchanged
    let a_even = match family {
        ClosedFormFamily::FfInvSigned => a % 2 == 0,
        ClosedFormFamily::OtherGlnOn => a % 2 == 1,
    };
    if a_even {
        matchings_with_shifts(a, b)
    } else {
        perfect_matchings_with_shifts(a, b)
    }
}

/// Product of [`rectangle_closed_form`] over the distinct part sizes of `ν`.
pub fn multiplicative_closed_form(nu: &Partition, family: ClosedFormFamily) -> BigInt {
    nu.multiplicities()
        .into_iter()
        .map(|(a, b)| rectangle_closed_form(a, b, family))
        .product()
}

/// Both enumerated sides of the family at `ν`.
pub fn closed_form_enumerations(nu: &Partition, family: ClosedFormFamily) -> Result<[BigInt; 2]> {
    Ok(match family {
        ClosedFormFamily::FfInvSigned => [
            BigInt::from(nu.epsilon())
                * weighted_involution_sum(nu, InvolutionFilter::NoOddFixed, &Weight::one().with_base(-2))?,
            involution_count(nu, InvolutionFilter::FixedPointFree)?.into(),
        ],
        ClosedFormFamily::OtherGlnOn => [
            involution_count(nu, InvolutionFilter::NoEvenFixedOrHalfTurn)?.into(),
            weighted_involution_sum(nu, InvolutionFilter::None, &Weight::sign(&[Statistic::L2]))?,
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn check(name: IdentityName, nu: &[usize], sig: Option<Signature>) -> (i64, i64) {
        let o = check_identity(&IdentityCase {
            name,
            nu: p(nu),
            signature: sig,
        })
        .unwrap();
        (i64::try_from(&o.lhs).unwrap(), i64::try_from(&o.rhs).unwrap())
    }

    #[test]
    fn examples() {
        assert_eq!(check(IdentityName::FfInv, &[1, 1], None), (1, 1));
        assert_eq!(check(IdentityName::FfInv, &[3], None), (0, 0));
        assert_eq!(check(IdentityName::GlnOn, &[1], None), (-2, -2));
        assert_eq!(check(IdentityName::GlnGlnGln, &[1, 1], Some(Signature::new(2, 0))), (1, 1));
    }

    #[test]
    fn keys_round_trip() {
        for n in IdentityName::ALL {
            assert_eq!(n.key().parse::<IdentityName>().unwrap(), n);
        }
        assert!("nope".parse::<IdentityName>().is_err());
    }

    #[test]
    fn signature_required() {
        let case = IdentityCase {
            name: IdentityName::UnUnUn,
            nu: p(&[1]),
            signature: None,
        };
        assert!(check_identity(&case).is_err());
    }

    #[test]
    fn rectangle_examples() {
        let f = ClosedFormFamily::FfInvSigned;
        assert_eq!(multiplicative_closed_form(&p(&[3, 3]), f), 3.into());
        assert_eq!(multiplicative_closed_form(&p(&[2]), f), 1.into());
        assert_eq!(multiplicative_closed_form(&p(&[3]), f), 0.into());
    }
}

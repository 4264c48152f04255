//! Symmetric-group characters by the Murnaghan–Nakayama rule.

mod oracle;

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{check_bound, Error, Result};
use crate::partition::{partitions_of, Partition};

pub use oracle::{character_oracle, kostka_number, ORACLE_BOUND};

/// Largest `|ν|` accepted by the character sums.
pub const DEFAULT_CHARACTER_SUM_BOUND: usize = 24;

thread_local! {
    static MEMO: RefCell<HashMap<(Vec<usize>, Vec<usize>), BigInt>> = RefCell::new(HashMap::new());
}

/// `χ^ρ_ν`, the value of the irreducible character `χ^ρ` on cycle type `ν`.
/// `χ^{(n)}` is the trivial character.
pub fn character(rho: &Partition, nu: &Partition) -> Result<BigInt> {
    if rho.size() != nu.size() {
        return Err(Error::SizeMismatch {
            left: rho.size(),
            right: nu.size(),
        });
    }
    Ok(mn(rho.parts(), nu.parts()))
}

fn mn(shape: &[usize], cycles: &[usize]) -> BigInt {
    let Some((&k, rest)) = cycles.split_first() else {
        return BigInt::one();
    };
    if rest.is_empty() {
        // a single cycle: only hooks contribute
        return hook_value(shape, k);
    }
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(v) = MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return v;
    }
    let mut total = BigInt::zero();
    for (smaller, sign) in rim_hook_removals(shape, k) {
        let v = mn(&smaller, rest);
        if sign > 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    MEMO.with(|m| m.borrow_mut().insert(key, total.clone()));
    total
}

fn hook_value(shape: &[usize], k: usize) -> BigInt {
    // χ^λ on an n-cycle is (-1)^{leg} for hooks (a, 1^leg) and 0 otherwise
    let n: usize = shape.iter().sum();
    debug_assert_eq!(n, k);
    if shape.iter().skip(1).all(|&p| p == 1) {
        let leg = shape.len() - 1;
        if leg % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    } else {
        BigInt::zero()
    }
}

/// Shapes obtained by removing a rim hook of length `k`, with the sign `(-1)^{leg length}`.
pub(crate) fn rim_hook_removals(shape: &[usize], k: usize) -> Vec<(Vec<usize>, i32)> {
    let len = shape.len();
    let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let between = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (len - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        out.push((parts, if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// Which `ρ ⊢ |ν|` enter a character sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharFilter {
    All,
    /// `ρ` even.
    Even,
    /// `ρ'` even.
    TransposeEven,
    /// `2 | m_{2i}(ρ)` for all `i`.
    EvenMultiplicityOfEvenParts,
    /// `2 | m_{2i+1}(ρ)` for all `i`.
    EvenMultiplicityOfOddParts,
}

impl CharFilter {
    pub fn admits(self, rho: &Partition) -> bool {
        match self {
            CharFilter::All => true,
            CharFilter::Even => rho.is_even(),
            CharFilter::TransposeEven => rho.transpose().is_even(),
            CharFilter::EvenMultiplicityOfEvenParts => rho.even_multiplicities_of_parity(0),
            CharFilter::EvenMultiplicityOfOddParts => rho.even_multiplicities_of_parity(1),
        }
    }
}

/// `Σ_{ρ ⊢ |ν|, filter(ρ)} weight(ρ) χ^ρ_ν`.
pub fn weighted_character_sum<W>(nu: &Partition, filter: CharFilter, weight: W) -> Result<BigInt>
where
    W: Fn(&Partition) -> BigInt,
{
    check_bound("character sum size", nu.size(), DEFAULT_CHARACTER_SUM_BOUND)?;
    let mut total = BigInt::zero();
    for rho in partitions_of(nu.size())?.filter(|r| filter.admits(r)) {
        let w = weight(&rho);
        if !w.is_zero() {
            total += w * character(&rho, nu)?;
        }
    }
    Ok(total)
}

/// `Σ_{ρ even} χ^ρ_ν`.
pub fn even_character_sum(nu: &Partition) -> Result<BigInt> {
    weighted_character_sum(nu, CharFilter::Even, |_| BigInt::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn chi(r: &[usize], n: &[usize]) -> BigInt {
        character(&p(r), &p(n)).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(chi(&[2], &[1, 1]), 1.into());
        assert_eq!(chi(&[1, 1], &[2]), (-1).into());
        assert_eq!(chi(&[2, 1], &[1, 1, 1]), 2.into());
        assert_eq!(chi(&[2, 1], &[3]), (-1).into());
        assert_eq!(chi(&[], &[]), 1.into());
        assert!(character(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn sums() {
        let one = |_: &Partition| BigInt::one();
        assert_eq!(even_character_sum(&p(&[1, 1])).unwrap(), 1.into());
        assert_eq!(even_character_sum(&p(&[3])).unwrap(), 0.into());
        assert_eq!(weighted_character_sum(&p(&[1, 1]), CharFilter::All, one).unwrap(), 2.into());
    }

    #[test]
    fn degree_of_staircase() {
        // hook length formula for (3,2,1): 6!/(5·3·3·1·1·1) = 16
        assert_eq!(chi(&[3, 2, 1], &[1; 6]), 16.into());
    }
}

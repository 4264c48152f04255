//! Direct search over permutations of `Ω(ν)`, used as an oracle for the
//! structured enumeration.

use super::{block_starts, CycleClass, InvolutionStats, SignedFamily};
use crate::error::{check_bound, Result};
use crate::partition::Partition;

pub const BRUTE_FORCE_BOUND: usize = 8;

fn rotation(nu: &Partition) -> Vec<usize> {
    let starts = block_starts(nu.parts());
    let mut w = Vec::with_capacity(nu.size());
    for (j, &len) in nu.parts().iter().enumerate() {
        for i in 0..len {
            w.push(starts[j] + (i + 1) % len);
        }
    }
    w
}

/// All `w` with `w² = 1` and `w w_ν = w_ν w`, as permutations of `0..|ν|`.
pub fn brute_force_involutions(nu: &Partition) -> Result<Vec<Vec<usize>>> {
    check_bound("brute force size", nu.size(), BRUTE_FORCE_BOUND)?;
    let n = nu.size();
    let rot = rotation(nu);
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    all_involutions(&mut perm, &mut |w| {
        if (0..n).all(|x| w[rot[x]] == rot[w[x]]) {
            out.push(w.to_vec());
        }
    });
    Ok(out)
}

fn all_involutions<F: FnMut(&[usize])>(perm: &mut [usize], f: &mut F) {
    let Some(x) = perm.iter().position(|&p| p == usize::MAX) else {
        f(perm);
        return;
    };
    perm[x] = x;
    all_involutions(perm, f);
    for y in x + 1..perm.len() {
        if perm[y] == usize::MAX {
            perm[x] = y;
            perm[y] = x;
            all_involutions(perm, f);
            perm[y] = usize::MAX;
        }
    }
    perm[x] = usize::MAX;
}

/// Cycle statistics read off a raw permutation, or `None` if it is not an
/// involution commuting with `w_ν`.
pub fn permutation_stats(nu: &Partition, perm: &[usize]) -> Option<InvolutionStats> {
    let n = nu.size();
    if perm.len() != n || (0..n).any(|x| perm[x] >= n || perm[perm[x]] != x) {
        return None;
    }
    let rot = rotation(nu);
    if (0..n).any(|x| perm[rot[x]] != rot[perm[x]]) {
        return None;
    }
    let starts = block_starts(nu.parts());
    let cycle_of = |x: usize| starts.iter().rposition(|&s| s <= x).unwrap();
    let mut s = InvolutionStats::default();
    for (j, &len) in nu.parts().iter().enumerate() {
        let image = perm[starts[j]];
        let class = if cycle_of(image) != j {
            CycleClass::Paired
        } else if image == starts[j] {
            CycleClass::Fixed
        } else {
            CycleClass::HalfTurn
        };
        s.add(class, len);
    }
    Some(s)
}

/// Every pair `(w, ε)` with `ε` a sign on the fixed points of `w` satisfying
/// `ε∘w_ν = ε` (plus) or `ε∘w_ν = -ε` (star), returned as the permutation and
/// `p⁺ - p⁻`.
pub fn brute_force_signed(nu: &Partition, family: SignedFamily) -> Result<Vec<(Vec<usize>, i64)>> {
    let rot = rotation(nu);
    let mut out = Vec::new();
    for w in brute_force_involutions(nu)? {
        let fixed: Vec<usize> = (0..w.len()).filter(|&x| w[x] == x).collect();
        for mask in 0u32..(1 << fixed.len()) {
            let mut eps = vec![0i64; w.len()];
            for (b, &x) in fixed.iter().enumerate() {
                eps[x] = if mask >> b & 1 == 1 { -1 } else { 1 };
            }
            let ok = fixed.iter().all(|&x| match family {
                SignedFamily::Plus => eps[rot[x]] == eps[x],
                SignedFamily::Star => eps[rot[x]] == -eps[x],
            });
            if ok {
                out.push((w.clone(), eps.iter().sum()));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(brute_force_involutions(&p(&[1])).unwrap().len(), 1);
        // Z^{(2,1)} = Z/2, so only the identity and w_ν
        assert_eq!(brute_force_involutions(&p(&[2, 1])).unwrap().len(), 2);
        assert_eq!(brute_force_involutions(&p(&[1, 1, 1])).unwrap().len(), 4);
        assert!(brute_force_involutions(&p(&[9])).is_err());
    }

    #[test]
    fn signed_examples() {
        assert_eq!(brute_force_signed(&p(&[1]), SignedFamily::Plus).unwrap().len(), 2);
        assert_eq!(brute_force_signed(&p(&[2]), SignedFamily::Star).unwrap().len(), 3);
        let both_plus = brute_force_signed(&p(&[1, 1]), SignedFamily::Plus)
            .unwrap()
            .into_iter()
            .filter(|(_, d)| *d == 2)
            .count();
        assert_eq!(both_plus, 1);
    }
}

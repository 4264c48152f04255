//! Independent character computation through symmetric functions: expand `p_ν`
//! in monomials and strip off Schur functions with the Kostka matrix.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{check_bound, Error, Result};
use crate::partition::{partitions_of, Partition};

pub const ORACLE_BOUND: usize = 8;

type Poly = HashMap<Vec<u8>, BigInt>;

fn power_sum_product(nu: &Partition, vars: usize) -> Poly {
    let mut poly: Poly = HashMap::new();
    poly.insert(vec![0; vars], BigInt::one());
    for &k in nu.parts() {
        let mut next: Poly = HashMap::new();
        for (mono, c) in &poly {
            for i in 0..vars {
                let mut m = mono.clone();
                m[i] += k as u8;
                *next.entry(m).or_insert_with(BigInt::zero) += c;
            }
        }
        poly = next;
    }
    poly
}

/// Number of semistandard tableaux of shape `shape` and content `content`.
pub fn kostka_number(shape: &Partition, content: &Partition) -> u64 {
    if shape.size() != content.size() {
        return 0;
    }
    let rows = shape.parts();
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&r| vec![0; r]).collect();
    let mut left = content.parts().to_vec();
    fill(rows, &mut grid, &mut left, 0, 0)
}

fn fill(rows: &[usize], grid: &mut [Vec<usize>], left: &mut [usize], r: usize, c: usize) -> u64 {
    if r == rows.len() {
        return 1;
    }
    let (nr, nc) = if c + 1 == rows[r] { (r + 1, 0) } else { (r, c + 1) };
    let lo = if c > 0 { grid[r][c - 1] } else { 1 };
    let lo = if r > 0 { lo.max(grid[r - 1][c] + 1) } else { lo };
    let mut count = 0;
    for v in lo..=left.len() {
        if left[v - 1] == 0 {
            continue;
        }
        left[v - 1] -= 1;
        grid[r][c] = v;
        count += fill(rows, grid, left, nr, nc);
        left[v - 1] += 1;
    }
    grid[r][c] = 0;
    count
}

/// `χ^ρ_ν` via the Schur expansion of `p_ν`, for `|ν| ≤ ORACLE_BOUND`.
pub fn character_oracle(rho: &Partition, nu: &Partition) -> Result<BigInt> {
    if rho.size() != nu.size() {
        return Err(Error::SizeMismatch {
            left: rho.size(),
            right: nu.size(),
        });
    }
    let n = nu.size();
    check_bound("oracle size", n, ORACLE_BOUND)?;
    let vars = n.max(1);
    let poly = power_sum_product(nu, vars);
    // reverse lexicographic order refines dominance, so the Kostka matrix is
    // unitriangular in this order
    let shapes: Vec<Partition> = partitions_of(n)?.collect();
    let mut chi: Vec<BigInt> = Vec::with_capacity(shapes.len());
    for (t, lambda) in shapes.iter().enumerate() {
        let mut mono = vec![0u8; vars];
        for (i, &p) in lambda.parts().iter().enumerate() {
            mono[i] = p as u8;
        }
        let mut value = poly.get(&mono).cloned().unwrap_or_else(BigInt::zero);
        for (s, mu) in shapes[..t].iter().enumerate() {
            let k = kostka_number(mu, lambda);
            if k != 0 {
                value -= &chi[s] * BigInt::from(k);
            }
        }
        debug_assert_eq!(kostka_number(lambda, lambda), 1);
        chi.push(value);
    }
    let idx = shapes.iter().position(|s| s == rho).expect("ρ is a partition of n");
    Ok(chi.swap_remove(idx))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(character_oracle(&p(&[2]), &p(&[2])).unwrap(), 1.into());
        assert_eq!(character_oracle(&p(&[1, 1]), &p(&[1, 1])).unwrap(), 1.into());
        assert_eq!(character_oracle(&p(&[3]), &p(&[2, 1])).unwrap(), 1.into());
        assert_eq!(character_oracle(&p(&[2, 1]), &p(&[3])).unwrap(), (-1).into());
        assert!(character_oracle(&p(&[9]), &p(&[9])).is_err());
    }

    #[test]
    fn kostka_small() {
        assert_eq!(kostka_number(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(kostka_number(&p(&[3, 2]), &p(&[2, 2, 1])), 2);
        assert_eq!(kostka_number(&p(&[2, 2]), &p(&[3, 1])), 0);
    }
}

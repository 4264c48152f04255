//! Signed tableaux: Young diagrams whose boxes carry signs alternating along
//! each row, rows of equal length being interchangeable.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{check_bound, Error, Result};
use crate::involution::Signature;
use crate::partition::Partition;

/// Largest `|μ|` accepted by the tableau enumerators.
pub const DEFAULT_TABLEAU_BOUND: usize = 30;

/// The rows of one length: `count` of them, `plus` ending in `+`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RowGroup {
    pub length: usize,
    pub count: usize,
    pub plus: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignedTableau {
    /// By decreasing length.
    groups: Vec<RowGroup>,
}

impl SignedTableau {
    pub fn groups(&self) -> &[RowGroup] {
        &self.groups
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(
            self.groups
                .iter()
                .flat_map(|g| std::iter::repeat(g.length).take(g.count))
                .collect(),
        )
    }

    /// Counted on odd rows: each contributes one more box of its terminal sign.
    pub fn signature(&self) -> Signature {
        let (mut plus, mut minus) = (0, 0);
        for g in self.groups.iter().filter(|g| g.length % 2 == 1) {
            plus += g.plus;
            minus += g.count - g.plus;
        }
        Signature::new(plus, minus)
    }

    fn map_groups(&self, flip: impl Fn(usize) -> bool) -> SignedTableau {
        SignedTableau {
            groups: self
                .groups
                .iter()
                .map(|g| RowGroup {
                    plus: if flip(g.length) { g.count - g.plus } else { g.plus },
                    ..*g
                })
                .collect(),
        }
    }

    /// Change every sign.
    pub fn phi(&self) -> SignedTableau {
        self.map_groups(|_| true)
    }

    /// Reverse every row; only even rows change their terminal sign.
    pub fn psi(&self) -> SignedTableau {
        self.map_groups(|len| len % 2 == 0)
    }

    /// Explicit rows of `±1`, longest first, rows ending `+` above rows ending
    /// `-` of the same length.
    pub fn rows(&self) -> Vec<Vec<i8>> {
        let mut out = Vec::new();
        for g in &self.groups {
            for r in 0..g.count {
                let last: i8 = if r < g.plus { 1 } else { -1 };
                out.push(
                    (0..g.length)
                        .map(|c| if (g.length - 1 - c) % 2 == 0 { last } else { -last })
                        .collect(),
                );
            }
        }
        out
    }

    /// Inverse of [`SignedTableau::rows`], accepting the rows in any order.
    pub fn from_rows(rows: &[Vec<i8>]) -> Result<SignedTableau> {
        let mut by_len: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for row in rows {
            let alternating = row.windows(2).all(|w| w[0] == -w[1]);
            if row.is_empty() || !alternating || row.iter().any(|&s| s != 1 && s != -1) {
                return Err(Error::Incompatible(format!("not an alternating row: {row:?}")));
            }
            let e = by_len.entry(row.len()).or_insert((0, 0));
            e.0 += 1;
            if row[row.len() - 1] == 1 {
                e.1 += 1;
            }
        }
        Ok(SignedTableau {
            groups: by_len
                .into_iter()
                .rev()
                .map(|(length, (count, plus))| RowGroup { length, count, plus })
                .collect(),
        })
    }
}

/// `T_±(μ)`, or `T_{(p⁺,p⁻)}(μ)` when a signature is given.
pub fn enumerate_tableaux(mu: &Partition, signature: Option<Signature>) -> Result<Vec<SignedTableau>> {
    check_bound("tableau size", mu.size(), DEFAULT_TABLEAU_BOUND)?;
    let mut groups: Vec<RowGroup> = mu
        .multiplicities()
        .into_iter()
        .rev()
        .map(|(length, count)| RowGroup { length, count, plus: 0 })
        .collect();
    let mut out = Vec::new();
    loop {
        let t = SignedTableau { groups: groups.clone() };
        if signature.map_or(true, |s| t.signature() == s) {
            out.push(t);
        }
        // odometer over the plus counts
        let Some(g) = groups.iter().rposition(|g| g.plus < g.count) else {
            break;
        };
        groups[g].plus += 1;
        for h in &mut groups[g + 1..] {
            h.plus = 0;
        }
    }
    Ok(out)
}

pub fn tableau_count(mu: &Partition, signature: Option<Signature>) -> Result<u64> {
    Ok(enumerate_tableaux(mu, signature)?.len() as u64)
}

/// Fixed-point counts of `φ`, `ψ` and `φψ`, by enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedCounts {
    pub phi: u64,
    pub psi: u64,
    pub phi_psi: u64,
    /// `|T_{(p⁺,p⁻)}(μ)^ψ|` keyed by `p⁺ - p⁻`, classes with no tableaux omitted.
    pub psi_by_signature: BTreeMap<i64, u64>,
}

pub fn fixed_counts(mu: &Partition) -> Result<FixedCounts> {
    let mut c = FixedCounts {
        phi: 0,
        psi: 0,
        phi_psi: 0,
        psi_by_signature: BTreeMap::new(),
    };
    for t in enumerate_tableaux(mu, None)? {
        if t.phi() == t {
            c.phi += 1;
        }
        if t.psi() == t {
            c.psi += 1;
            *c.psi_by_signature.entry(t.signature().difference()).or_insert(0) += 1;
        }
        if t.phi().psi() == t {
            c.phi_psi += 1;
        }
    }
    Ok(c)
}

/// `|T^φ|`, `|T^ψ|`, `|T^{φψ}|` from their product formulas.
pub fn closed_form_fixed_counts(mu: &Partition) -> (u64, u64, u64) {
    let phi = u64::from(mu.even_multiplicities_of_parity(0) && mu.even_multiplicities_of_parity(1));
    let psi = if mu.even_multiplicities_of_parity(0) {
        mu.multiplicity_product(Some(1))
    } else {
        0
    };
    let phi_psi = if mu.even_multiplicities_of_parity(1) {
        mu.multiplicity_product(Some(0))
    } else {
        0
    };
    (phi, psi, phi_psi)
}

/// Partitions `λ ⊆ μ` with `μ/λ` a vertical strip of size `k`.
fn remove_vertical_strip(mu: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(mu: &[usize], row: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if row == mu.len() {
            if k == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if mu.len() - row < k {
            return;
        }
        let above = if row == 0 { usize::MAX } else { cur[row - 1] };
        for take in [0, 1] {
            if take > k || take > mu[row] {
                continue;
            }
            let len = mu[row] - take;
            if len > above {
                continue;
            }
            cur.push(len);
            go(mu, row + 1, k - take, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(mu, 0, k, &mut Vec::new(), &mut out);
    out
}

/// Ways to remove a vertical `b`-strip and then a vertical `a`-strip from `μ`
/// so that every remaining row has even length.
pub fn vertical_strip_count(mu: &Partition, a: usize, b: usize) -> u64 {
    let mut n = 0;
    for lambda in remove_vertical_strip(mu.parts(), b) {
        for kappa in remove_vertical_strip(&lambda, a) {
            if kappa.iter().all(|r| r % 2 == 0) {
                n += 1;
            }
        }
    }
    n
}

/// `Σ_r b(p⁺-r, p⁻-r, μ)` over the representatives `(p⁺-r, p⁻-r)` of a
/// signature class with both entries nonnegative and total at most `|μ|`.
pub fn strip_chain_sum(mu: &Partition, signature: Signature) -> u64 {
    let (p, m) = signature.canonical();
    let size = mu.size() as i64;
    let lo = (p as i64 + m as i64 - size).div_euclid(2) + (p as i64 + m as i64 - size).rem_euclid(2);
    let hi = p.min(m) as i64;
    (lo..=hi)
        .map(|r| vertical_strip_count(mu, (p as i64 - r) as usize, (m as i64 - r) as usize))
        .sum()
}

/// `max` over rows `R` of (odd rows ending `-` at or below `R`) minus (odd rows
/// ending `+` at or below `R`); 0 for the empty tableau.
pub fn m_statistic(t: &SignedTableau) -> i64 {
    let rows = t.rows();
    let mut best: Option<i64> = None;
    let mut running = 0i64;
    for row in rows.iter().rev() {
        if row.len() % 2 == 1 {
            running += if row[row.len() - 1] < 0 { 1 } else { -1 };
        }
        best = Some(best.map_or(running, |b| b.max(running)));
    }
    best.unwrap_or(0)
}

fn alternating_sum(mu: &Partition, odd_only: bool) -> Result<i64> {
    let mut total = 0;
    for t in enumerate_tableaux(mu, Some(Signature(0)))? {
        let minus_rows: usize = t
            .groups()
            .iter()
            .filter(|g| !odd_only || g.length % 2 == 1)
            .map(|g| g.count - g.plus)
            .sum();
        let e = minus_rows as i64 - m_statistic(&t);
        total += if e.rem_euclid(2) == 0 { 1 } else { -1 };
    }
    Ok(total)
}

/// `Σ_{T ∈ T_{(0,0)}(μ)} (-1)^{#(odd rows ending -) - m(T)}`.
pub fn star_sign_sum(mu: &Partition) -> Result<i64> {
    alternating_sum(mu, true)
}

/// Same sum with all rows ending `-` counted in the exponent.
pub fn star_sign_sum_all_rows(mu: &Partition) -> Result<i64> {
    alternating_sum(mu, false)
}

/// `Π(m_{2i}(μ)+1)` if every odd part has even multiplicity, else 0.
pub fn star_sign_closed_form(mu: &Partition) -> i64 {
    if mu.even_multiplicities_of_parity(1) {
        mu.multiplicity_product(Some(0)) as i64
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(tableau_count(&p(&[2, 1]), None).unwrap(), 4);
        assert_eq!(tableau_count(&p(&[1]), Some(Signature::new(1, 0))).unwrap(), 1);
        assert_eq!(tableau_count(&p(&[2, 2]), Some(Signature(0))).unwrap(), 3);
        assert_eq!(tableau_count(&Partition::empty(), None).unwrap(), 1);
    }

    #[test]
    fn fixed_examples() {
        assert_eq!(fixed_counts(&p(&[1, 1])).unwrap().phi, 1);
        assert_eq!(fixed_counts(&p(&[2, 1])).unwrap().psi, 0);
        assert_eq!(fixed_counts(&p(&[2, 2])).unwrap().phi_psi, 3);
    }

    #[test]
    fn rows_round_trip() {
        for t in enumerate_tableaux(&p(&[3, 3, 2, 1]), None).unwrap() {
            let mut rows = t.rows();
            rows.reverse();
            assert_eq!(SignedTableau::from_rows(&rows).unwrap(), t);
        }
        assert!(SignedTableau::from_rows(&[vec![1, 1]]).is_err());
    }

    #[test]
    fn strip_examples() {
        assert_eq!(vertical_strip_count(&p(&[2, 2]), 0, 0), 1);
        assert_eq!(vertical_strip_count(&p(&[1]), 1, 0), 1);
        for d in -3..=3 {
            let mu = p(&[2, 1]);
            assert_eq!(strip_chain_sum(&mu, Signature(d)), tableau_count(&mu, Some(Signature(d))).unwrap());
        }
    }

    #[test]
    fn star_examples() {
        assert_eq!(star_sign_sum(&p(&[2, 2])).unwrap(), 3);
        assert_eq!(star_sign_sum(&p(&[1])).unwrap(), 0);
        // the closed form gives 1 here: m₁ = 2 is even and there are no even parts
        assert_eq!(star_sign_sum(&p(&[1, 1])).unwrap(), 1);
        assert_eq!(star_sign_sum(&Partition::empty()).unwrap(), 1);
    }
}

//! Frobenius orbits on the character group `L`, with the invariants the
//! multiplicity formulas read: size `m`, sign `d`, and duality `ξ ↦ ξ^∨`.
//!
//! Concretely, the elements of `L` fixed by the `e`-th power of the Frobenius
//! are `Z/N_e` with `N_e = |b^e - 1|`, where `b = q` (split) or `b = -q`
//! (nonsplit), acting by multiplication by `b`. Level `e` embeds in level
//! `e'` by `k ↦ k N_{e'}/N_e`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiplicity::MultiPartition;

/// Largest `N_e` the concrete enumerator will scan at one level.
pub const MAX_LEVEL_MODULUS: u64 = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Twist {
    Split,
    Nonsplit,
}

impl FromStr for Twist {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "split" => Ok(Twist::Split),
            "nonsplit" => Ok(Twist::Nonsplit),
            _ => Err(Error::Unknown {
                kind: "twist",
                name: s.to_string(),
            }),
        }
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Twist::Split => "split",
            Twist::Nonsplit => "nonsplit",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "tag")]
pub enum OrbitTag {
    One,
    MinusOne,
    SelfDual,
    DualPair { partner: usize },
}

/// Canonical representative: the smallest `k` of the orbit at its own level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConcreteRep {
    pub level: usize,
    pub k: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusOrbit {
    pub id: usize,
    #[serde(flatten)]
    pub tag: OrbitTag,
    pub m: usize,
    pub d: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representative: Option<ConcreteRep>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitTable {
    pub twist: Twist,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    pub orbits: Vec<FrobeniusOrbit>,
    #[serde(skip)]
    index: HashMap<usize, usize>,
    #[serde(skip)]
    by_rep: HashMap<(usize, u64), usize>,
}

impl OrbitTable {
    /// A table of declared orbits, checked for the structural invariants.
    pub fn from_orbits(twist: Twist, orbits: Vec<FrobeniusOrbit>) -> Result<Self> {
        let bad = |why: String| Err(Error::InvalidOrbits(why));
        let mut index = HashMap::new();
        for (pos, o) in orbits.iter().enumerate() {
            if index.insert(o.id, pos).is_some() {
                return bad(format!("duplicate orbit id {}", o.id));
            }
        }
        let mut ones = 0;
        let mut minus_ones = 0;
        for o in &orbits {
            if o.m == 0 || (o.d != 1 && o.d != -1) {
                return bad(format!("orbit {}: m must be positive and d = ±1", o.id));
            }
            match o.tag {
                OrbitTag::One => {
                    ones += 1;
                    if o.m != 1 || o.d != 1 {
                        return bad("the orbit of 1 has m = 1 and d = +1".into());
                    }
                }
                OrbitTag::MinusOne => {
                    minus_ones += 1;
                    if o.m != 1 {
                        return bad("the orbit of -1 has m = 1".into());
                    }
                }
                OrbitTag::SelfDual => {
                    // ξ^{-1} = b^j ξ with ξ ≠ ±1 forces m even, and then ξ is a square
                    if o.m % 2 != 0 || o.d != 1 {
                        return bad(format!("self-dual orbit {} needs even m and d = +1", o.id));
                    }
                }
                OrbitTag::DualPair { partner } => {
                    let Some(&p) = index.get(&partner) else {
                        return bad(format!("orbit {} has unknown partner {partner}", o.id));
                    };
                    let other = &orbits[p];
                    let mutual = matches!(other.tag, OrbitTag::DualPair { partner: back } if back == o.id);
                    if partner == o.id || !mutual || other.m != o.m || other.d != o.d {
                        return bad(format!("orbits {} and {partner} are not a dual pair", o.id));
                    }
                }
            }
        }
        if ones > 1 || minus_ones > 1 {
            return bad("at most one orbit each of 1 and -1".into());
        }
        let by_rep = orbits
            .iter()
            .enumerate()
            .filter_map(|(pos, o)| o.representative.map(|r| ((r.level, r.k), pos)))
            .collect();
        Ok(OrbitTable {
            twist,
            q: None,
            orbits,
            index,
            by_rep,
        })
    }

    /// All orbits of size at most `max_level` for the field of `q` elements.
    pub fn concrete(q: u64, twist: Twist, max_level: usize) -> Result<Self> {
        if q < 3 || q % 2 == 0 || !is_prime_power(q) || q > 97 {
            return Err(Error::InvalidOrbits(format!("q = {q} must be an odd prime power ≤ 97")));
        }
        if max_level == 0 || max_level > 6 {
            return Err(Error::InvalidOrbits(format!("max level {max_level} must be in 1..=6")));
        }
        let biggest = level_modulus(q, twist, max_level);
        if biggest > MAX_LEVEL_MODULUS {
            return Err(Error::InvalidOrbits(format!(
                "level modulus {biggest} exceeds the scan limit {MAX_LEVEL_MODULUS}"
            )));
        }
        let mut orbits = Vec::new();
        let mut reps: HashMap<(usize, u64), usize> = HashMap::new();
        for level in 1..=max_level {
            let n = level_modulus(q, twist, level);
            let b = multiplier(q, twist, n);
            let mut seen = vec![false; n as usize];
            for k in 0..n {
                if seen[k as usize] {
                    continue;
                }
                let mut size = 0;
                let mut x = k;
                loop {
                    seen[x as usize] = true;
                    size += 1;
                    x = mul_mod(x, b, n);
                    if x == k {
                        break;
                    }
                }
                if size == level {
                    reps.insert((level, k), orbits.len());
                    orbits.push((level, k));
                }
            }
        }
        let mut table = Vec::with_capacity(orbits.len());
        for (id, &(level, k)) in orbits.iter().enumerate() {
            let n = level_modulus(q, twist, level);
            let b = multiplier(q, twist, n);
            let dual = reps[&(level, orbit_min((n - k) % n, b, n))];
            let tag = if level == 1 && k == 0 {
                OrbitTag::One
            } else if level == 1 && k == n / 2 {
                OrbitTag::MinusOne
            } else if dual == id {
                OrbitTag::SelfDual
            } else {
                OrbitTag::DualPair { partner: dual }
            };
            table.push(FrobeniusOrbit {
                id,
                tag,
                m: level,
                d: if k % 2 == 0 { 1 } else { -1 },
                representative: Some(ConcreteRep { level, k }),
            });
        }
        let mut t = OrbitTable::from_orbits(twist, table)?;
        t.q = Some(q);
        Ok(t)
    }

    pub fn get(&self, id: usize) -> Option<&FrobeniusOrbit> {
        self.index.get(&id).map(|&p| &self.orbits[p])
    }

    pub fn orbit(&self, id: usize) -> Result<&FrobeniusOrbit> {
        self.get(id)
            .ok_or_else(|| Error::InvalidOrbits(format!("no orbit with id {id}")))
    }

    pub fn find(&self, tag: OrbitTag) -> Option<&FrobeniusOrbit> {
        self.orbits.iter().find(|o| o.tag == tag)
    }

    /// Orbit met by the twist `ξ ↦ ζξ`, `ζ` the level-one class `k_ζ`.
    pub fn zeta_image(&self, id: usize, k_zeta: u64) -> Result<usize> {
        let q = self
            .q
            .ok_or_else(|| Error::Incompatible("the ζ-twist needs a concrete orbit table".into()))?;
        if k_zeta % 2 == 0 {
            return Err(Error::Incompatible("ζ must be an odd class at level one".into()));
        }
        let o = self.orbit(id)?;
        let rep = o.representative.expect("concrete tables carry representatives");
        let n = level_modulus(q, self.twist, rep.level);
        let n1 = level_modulus(q, self.twist, 1);
        let shift = mul_mod(k_zeta % n1, n / n1, n);
        let moved = (rep.k + shift) % n;
        let key = (rep.level, orbit_min(moved, multiplier(q, self.twist, n), n));
        Ok(self.orbits[self.by_rep[&key]].id)
    }
}

/// `N_e = |b^e - 1|` for `b = q` or `-q`.
pub fn level_modulus(q: u64, twist: Twist, e: usize) -> u64 {
    let qe = q.pow(e as u32);
    match twist {
        Twist::Split => qe - 1,
        Twist::Nonsplit if e % 2 == 0 => qe - 1,
        Twist::Nonsplit => qe + 1,
    }
}

fn multiplier(q: u64, twist: Twist, n: u64) -> u64 {
    match twist {
        Twist::Split => q % n,
        Twist::Nonsplit => (n - q % n) % n,
    }
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn orbit_min(k: u64, b: u64, n: u64) -> u64 {
    let mut best = k;
    let mut x = mul_mod(k, b, n);
    while x != k {
        best = best.min(x);
        x = mul_mod(x, b, n);
    }
    best
}

fn is_prime_power(q: u64) -> bool {
    let p = (2..=q).find(|d| q % d == 0).unwrap_or(q);
    let mut r = q;
    while r % p == 0 {
        r /= p;
    }
    r == 1
}

/// `ρ̲ ↦ ζ.ρ̲`: moves each orbit's partition to the orbit of `ζξ`.
pub fn zeta_twist(table: &OrbitTable, rho: &MultiPartition, k_zeta: u64) -> Result<MultiPartition> {
    let mut out = BTreeMap::new();
    for (&id, p) in rho.assignments() {
        out.insert(table.zeta_image(id, k_zeta)?, p.clone());
    }
    MultiPartition::new(table, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tags(t: &OrbitTable) -> Vec<(OrbitTag, usize, i32, u64)> {
        t.orbits
            .iter()
            .map(|o| (o.tag, o.m, o.d, o.representative.unwrap().k))
            .collect()
    }

    #[test]
    fn q3_level_one() {
        let t = OrbitTable::concrete(3, Twist::Split, 1).unwrap();
        assert_eq!(tags(&t), vec![(OrbitTag::One, 1, 1, 0), (OrbitTag::MinusOne, 1, -1, 1)]);
    }

    #[test]
    fn q5_level_one() {
        let t = OrbitTable::concrete(5, Twist::Split, 1).unwrap();
        assert_eq!(
            tags(&t),
            vec![
                (OrbitTag::One, 1, 1, 0),
                (OrbitTag::DualPair { partner: 3 }, 1, -1, 1),
                (OrbitTag::MinusOne, 1, 1, 2),
                (OrbitTag::DualPair { partner: 1 }, 1, -1, 3),
            ]
        );
    }

    #[test]
    fn q3_level_two() {
        let t = OrbitTable::concrete(3, Twist::Split, 2).unwrap();
        let level2: Vec<_> = tags(&t).into_iter().filter(|x| x.1 == 2).collect();
        // {1,3} and {5,7} are dual; {2,6} is self-dual
        assert_eq!(
            level2,
            vec![
                (OrbitTag::DualPair { partner: 4 }, 2, -1, 1),
                (OrbitTag::SelfDual, 2, 1, 2),
                (OrbitTag::DualPair { partner: 2 }, 2, -1, 5),
            ]
        );
    }

    #[test]
    fn minus_one_sign() {
        for q in [3u64, 5, 7, 9, 11, 13] {
            let split = OrbitTable::concrete(q, Twist::Split, 1).unwrap();
            let d = split.find(OrbitTag::MinusOne).unwrap().d;
            assert_eq!(d == 1, q % 4 == 1, "q = {q}");
            let non = OrbitTable::concrete(q, Twist::Nonsplit, 1).unwrap();
            let d = non.find(OrbitTag::MinusOne).unwrap().d;
            assert_eq!(d == 1, q % 4 == 3, "q = {q}");
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(OrbitTable::concrete(4, Twist::Split, 1).is_err());
        assert!(OrbitTable::concrete(15, Twist::Split, 1).is_err());
        assert!(OrbitTable::concrete(3, Twist::Split, 7).is_err());
        assert!(OrbitTable::concrete(97, Twist::Split, 6).is_err());
        let bad_pair = vec![FrobeniusOrbit {
            id: 0,
            tag: OrbitTag::DualPair { partner: 0 },
            m: 1,
            d: 1,
            representative: None,
        }];
        assert!(OrbitTable::from_orbits(Twist::Split, bad_pair).is_err());
    }

    #[test]
    fn zeta_swaps_one_and_minus_one_for_q3() {
        let t = OrbitTable::concrete(3, Twist::Split, 1).unwrap();
        assert_eq!(t.zeta_image(0, 1).unwrap(), 1);
        assert_eq!(t.zeta_image(1, 1).unwrap(), 0);
        assert!(t.zeta_image(0, 2).is_err());
    }
}

//! Orbit tables and multipartitions shared by the multiplicity tests and the
//! acceptance runner.
#![allow(dead_code)]

use std::collections::BTreeMap;

use finsym_core::multiplicity::MultiPartition;
use finsym_core::orbit::{FrobeniusOrbit, OrbitTable, OrbitTag, Twist};
use finsym_core::partition::partitions_of;
use finsym_core::Partition;
use rand::seq::SliceRandom;
use rand::Rng;

fn orbit(id: usize, tag: OrbitTag, m: usize, d: i32) -> FrobeniusOrbit {
    FrobeniusOrbit {
        id,
        tag,
        m,
        d,
        representative: None,
    }
}

/// One orbit of every kind the theorems distinguish: 1, -1 with sign
/// `minus_one_d`, self-dual orbits of size 2 and 4, and dual pairs of sizes
/// 1 to 3.
pub fn reference_table(twist: Twist, minus_one_d: i32) -> OrbitTable {
    let orbits = vec![
        orbit(0, OrbitTag::One, 1, 1),
        orbit(1, OrbitTag::MinusOne, 1, minus_one_d),
        orbit(2, OrbitTag::SelfDual, 2, 1),
        orbit(3, OrbitTag::SelfDual, 4, 1),
        orbit(4, OrbitTag::DualPair { partner: 5 }, 1, 1),
        orbit(5, OrbitTag::DualPair { partner: 4 }, 1, 1),
        orbit(6, OrbitTag::DualPair { partner: 7 }, 1, -1),
        orbit(7, OrbitTag::DualPair { partner: 6 }, 1, -1),
        orbit(8, OrbitTag::DualPair { partner: 9 }, 2, 1),
        orbit(9, OrbitTag::DualPair { partner: 8 }, 2, 1),
        orbit(10, OrbitTag::DualPair { partner: 11 }, 2, -1),
        orbit(11, OrbitTag::DualPair { partner: 10 }, 2, -1),
        orbit(12, OrbitTag::DualPair { partner: 13 }, 3, -1),
        orbit(13, OrbitTag::DualPair { partner: 12 }, 3, -1),
    ];
    OrbitTable::from_orbits(twist, orbits).expect("reference table is valid")
}

/// A random table respecting the structural constraints on tags, sizes and signs.
pub fn random_table<R: Rng>(rng: &mut R, twist: Twist) -> OrbitTable {
    let mut orbits = Vec::new();
    let mut id = 0;
    let mut push = |orbits: &mut Vec<FrobeniusOrbit>, tag, m, d| {
        orbits.push(orbit(id, tag, m, d));
        id += 1;
    };
    if rng.gen_bool(0.8) {
        push(&mut orbits, OrbitTag::One, 1, 1);
    }
    if rng.gen_bool(0.7) {
        let d = if rng.gen_bool(0.5) { 1 } else { -1 };
        push(&mut orbits, OrbitTag::MinusOne, 1, d);
    }
    for _ in 0..rng.gen_range(0..3) {
        let m = 2 * rng.gen_range(1..=3);
        push(&mut orbits, OrbitTag::SelfDual, m, 1);
    }
    for _ in 0..rng.gen_range(0..4) {
        let m = rng.gen_range(1..=4);
        let d = if rng.gen_bool(0.5) { 1 } else { -1 };
        let a = orbits.len();
        push(&mut orbits, OrbitTag::DualPair { partner: a + 1 }, m, d);
        push(&mut orbits, OrbitTag::DualPair { partner: a }, m, d);
    }
    OrbitTable::from_orbits(twist, orbits).expect("random table is valid")
}

fn random_partition<R: Rng>(rng: &mut R, k: usize) -> Partition {
    let all: Vec<_> = partitions_of(k).unwrap().collect();
    all.choose(rng).unwrap().clone()
}

/// A random multipartition of rank exactly `n`, or `None` if the orbit sizes
/// cannot reach `n` in a few attempts.
pub fn random_multipartition<R: Rng>(rng: &mut R, table: &OrbitTable, n: usize) -> Option<MultiPartition> {
    for _ in 0..20 {
        let mut order: Vec<&FrobeniusOrbit> = table.orbits.iter().collect();
        order.shuffle(rng);
        let mut left = n;
        let mut sizes = BTreeMap::new();
        for o in &order {
            if left == 0 {
                break;
            }
            let k = rng.gen_range(0..=left / o.m);
            if k > 0 {
                sizes.insert(o.id, k);
                left -= k * o.m;
            }
        }
        if left == 0 {
            let assignments = sizes
                .into_iter()
                .map(|(id, k)| (id, random_partition(rng, k)))
                .collect();
            return Some(MultiPartition::new(table, assignments).unwrap());
        }
    }
    None
}

/// Every multipartition of rank `n` supported on the given orbits.
pub fn multipartitions_on(table: &OrbitTable, ids: &[usize], n: usize) -> Vec<MultiPartition> {
    fn go(table: &OrbitTable, ids: &[usize], left: usize, cur: &mut BTreeMap<usize, Partition>, out: &mut Vec<MultiPartition>) {
        let Some((&id, rest)) = ids.split_first() else {
            if left == 0 {
                out.push(MultiPartition::new(table, cur.clone()).unwrap());
            }
            return;
        };
        let m = table.orbit(id).unwrap().m;
        for k in 0..=left / m {
            for p in partitions_of(k).unwrap() {
                cur.insert(id, p);
                go(table, rest, left - k * m, cur, out);
            }
        }
        cur.remove(&id);
    }
    let mut out = Vec::new();
    go(table, ids, n, &mut BTreeMap::new(), &mut out);
    out
}

/// Multipartitions of rank `n` on at most two orbits.
pub fn multipartitions_small(table: &OrbitTable, ids: &[usize], n: usize) -> Vec<MultiPartition> {
    let mut out = Vec::new();
    for (i, &a) in ids.iter().enumerate() {
        out.extend(multipartitions_on(table, &[a], n));
        for &b in &ids[i + 1..] {
            out.extend(
                multipartitions_on(table, &[a, b], n)
                    .into_iter()
                    .filter(|r| r.assignments().len() == 2),
            );
        }
    }
    out
}

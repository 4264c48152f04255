use std::collections::BTreeSet;

use finsym_core::involution::{
    brute_force_involutions, brute_force_signed, enumerate_involutions, involution_count, permutation_stats,
    signed_count, weighted_involution_sum, weighted_signed_sum, InvolutionFilter, Signature, SignedFamily, Statistic,
    Weight,
};
use finsym_core::partition::{partitions_of, Partition};
use num_bigint::BigInt;
use proptest::prelude::*;

const FILTERS: [InvolutionFilter; 5] = [
    InvolutionFilter::None,
    InvolutionFilter::FixedPointFree,
    InvolutionFilter::NoOddFixed,
    InvolutionFilter::NoEvenFixedOrHalfTurn,
    InvolutionFilter::NoFixedOrHalfTurn,
];

#[test]
fn structured_matches_brute_force() {
    for n in 0..=7 {
        for nu in partitions_of(n).unwrap() {
            let structured = enumerate_involutions(&nu, InvolutionFilter::None).unwrap();
            let brute = brute_force_involutions(&nu).unwrap();
            let mut a: Vec<_> = structured.iter().map(|w| w.stats()).collect();
            let mut b: Vec<_> = brute.iter().map(|w| permutation_stats(&nu, w).unwrap()).collect();
            a.sort();
            b.sort();
            assert_eq!(a, b, "{nu}");
            let perms: BTreeSet<Vec<usize>> = structured.iter().map(|w| w.to_permutation()).collect();
            assert_eq!(perms, brute.into_iter().collect::<BTreeSet<_>>(), "{nu}");
        }
    }
}

#[test]
fn filters_partition_the_enumeration() {
    for n in 0..=8 {
        for nu in partitions_of(n).unwrap() {
            let all = enumerate_involutions(&nu, InvolutionFilter::None).unwrap();
            for f in FILTERS {
                let kept = all.iter().filter(|w| f.admits(&w.stats())).count() as u64;
                assert_eq!(involution_count(&nu, f).unwrap(), kept, "{nu} {}", f.key());
            }
        }
    }
}

#[test]
fn refined_statistics_coarsen() {
    for n in 0..=9 {
        for nu in partitions_of(n).unwrap() {
            for w in enumerate_involutions(&nu, InvolutionFilter::None).unwrap() {
                let s = w.stats();
                assert_eq!(s.l1, s.l1_even + s.l1_odd);
                assert_eq!(s.l2, s.l2_zero_mod_4 + s.l2_two_mod_4);
                assert_eq!(s.l3, s.l3_even + s.l3_odd);
                assert_eq!(s.l3_odd % 2, 0);
                assert_eq!(s.l1 + s.l2 + s.l3, nu.len(), "{nu}");
            }
        }
    }
}

#[test]
fn plus_family_counts_two_per_fixed_cycle() {
    for n in 0..=8 {
        for nu in partitions_of(n).unwrap() {
            let brute = brute_force_signed(&nu, SignedFamily::Plus).unwrap().len();
            let sum = weighted_involution_sum(&nu, InvolutionFilter::None, &Weight::one().with_base(2)).unwrap();
            assert_eq!(BigInt::from(brute), sum, "{nu}");
            assert_eq!(signed_count(&nu, SignedFamily::Plus, None).unwrap(), brute as u64);
        }
    }
}

#[test]
fn star_family_matches_brute_force() {
    for n in 0..=8 {
        for nu in partitions_of(n).unwrap() {
            let brute = brute_force_signed(&nu, SignedFamily::Star).unwrap().len() as u64;
            assert_eq!(signed_count(&nu, SignedFamily::Star, None).unwrap(), brute, "{nu}");
        }
    }
}

#[test]
fn signature_classes_sum_to_total() {
    for n in 0..=7 {
        for nu in partitions_of(n).unwrap() {
            let total = signed_count(&nu, SignedFamily::Plus, None).unwrap();
            let by_class: u64 = (-(n as i64)..=n as i64)
                .map(|d| signed_count(&nu, SignedFamily::Plus, Some(Signature(d))).unwrap())
                .sum();
            assert_eq!(by_class, total, "{nu}");
        }
    }
}

#[test]
fn sign_weights_match_direct_sums() {
    let nu = Partition::new(vec![2, 2]).unwrap();
    let v = weighted_involution_sum(&nu, InvolutionFilter::None, &Weight::sign(&[Statistic::L2])).unwrap();
    let direct: i64 = enumerate_involutions(&nu, InvolutionFilter::None)
        .unwrap()
        .iter()
        .map(|w| if w.stats().l2 % 2 == 0 { 1 } else { -1 })
        .sum();
    assert_eq!(v, BigInt::from(direct));
    let star = weighted_signed_sum(&nu, SignedFamily::Star, None, &Weight::one()).unwrap();
    assert_eq!(star, BigInt::from(signed_count(&nu, SignedFamily::Star, None).unwrap()));
}

proptest! {
    #[test]
    fn weights_factor_over_statistics(n in 0usize..=9, pick in any::<prop::sample::Index>(), base in -3i64..=3) {
        let all: Vec<Partition> = partitions_of(n).unwrap().collect();
        let nu = pick.get(&all);
        let w = Weight::sign(&[Statistic::L2ZeroMod4, Statistic::HalfL3Odd]).with_base(base);
        let direct: BigInt = enumerate_involutions(nu, InvolutionFilter::None)
            .unwrap()
            .iter()
            .map(|x| w.eval(&x.stats()))
            .sum();
        prop_assert_eq!(weighted_involution_sum(nu, InvolutionFilter::None, &w).unwrap(), direct);
    }
}

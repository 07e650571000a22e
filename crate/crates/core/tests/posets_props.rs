mod common;

use common::partition_subposet;
use cremona::posets::{mobius_sum_check, product_mobius_check, FinitePoset, PartitionPoset, PosetKind};
use proptest::prelude::*;

fn factorial(n: i64) -> i64 {
    (1..=n).product()
}

proptest! {
    #[test]
    fn mobius_sums_vanish_on_bounded_subposets(n in 2u32..=5, mask in prop::collection::vec(any::<bool>(), 52)) {
        let p = partition_subposet(n, &mask);
        prop_assert_eq!(mobius_sum_check(&p).unwrap(), 0);
    }

    #[test]
    fn mobius_inversion_round_trips(n in 2u32..=4, mask in prop::collection::vec(any::<bool>(), 15), f in prop::collection::vec(-50i64..50, 15)) {
        let p = partition_subposet(n, &mask);
        let f = &f[..p.len()];
        prop_assert_eq!(p.mobius_inversion(&p.zeta_sum(f)), f.to_vec());
        prop_assert_eq!(p.zeta_sum(&p.mobius_inversion(f)), f.to_vec());
    }

    #[test]
    fn mobius_of_products(a in 1usize..=4, b in 1usize..=4) {
        let p = FinitePoset::chain(a).unwrap();
        let q = FinitePoset::chain(b).unwrap();
        prop_assert!(product_mobius_check(&p, &q).unwrap());
    }
}

#[test]
fn full_lattice_mobius_values() {
    for n in 1..=6u32 {
        let p = PartitionPoset::full(n).unwrap();
        for pi in p.elements() {
            let k = pi.num_blocks() as i64;
            let expect = if k % 2 == 1 { 1 } else { -1 } * factorial(k - 1);
            assert_eq!(p.mobius_to_top(pi).unwrap(), expect, "{pi}");
        }
    }
}

#[test]
fn interval_mobius_values() {
    for n in 1..=6u32 {
        let p = PartitionPoset::interval(n).unwrap();
        assert_eq!(p.len(), 1 << (n - 1));
        for pi in p.elements() {
            let k = pi.num_blocks() as i32;
            assert_eq!(p.mobius_to_top(pi).unwrap(), (-1i64).pow((k - 1) as u32));
        }
    }
}

#[test]
fn named_posets_have_vanishing_sums() {
    for kind in PosetKind::ALL {
        for n in 2..=5 {
            let p = kind.build(n).unwrap();
            assert_eq!(mobius_sum_check(p.poset()).unwrap(), 0, "{} {n}", kind.name());
        }
    }
}

#[test]
fn product_of_partition_lattices() {
    let p = PartitionPoset::full(3).unwrap();
    let q = PartitionPoset::interval(3).unwrap();
    assert!(product_mobius_check(p.poset(), q.poset()).unwrap());
    assert!(product_mobius_check(p.poset(), p.poset()).unwrap());
}

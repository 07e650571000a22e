use cremona::cumulants::{l_cumulant_map, linearization_check, multi_linearization_check, multi_segre_cumulant_map};
use cremona::maps::CremonaPair;
use cremona::polycore::{parse_polynomial, Polynomial, Ring};
use cremona::posets::PosetKind;
use cremona::varieties::matrix::{minors, PolyMatrix};
use cremona::varieties::{
    catalog_entry, membership_check, rnc, rnc_literal_map, secant_parametrization, segre, tangential_parametrization, tpn,
};

fn poly(ring: &Ring, s: &str) -> Polynomial {
    parse_polynomial(ring, s).unwrap()
}

#[test]
fn every_catalog_entry_is_linearized() {
    let ring = Ring::new();
    let names = [
        "segre:1,1", "segre:1,2", "segre:2,2", "segre:2,3", "segre-multi:1,1,1", "segre-multi:1,2", "veronese2:2",
        "veronese2:3", "rnc:3", "rnc:6", "rnc:9", "grass2:4", "grass2:5", "grass2:6", "g36", "tp:1", "tp:2", "tp:3",
    ];
    for name in names {
        let e = catalog_entry(&ring, name).unwrap();
        let pair = e.linearize().unwrap();
        assert!(pair.verified, "{name}");
        assert!(pair.degree_law_holds(), "{name}: ({}, {}) Φ of degree {}", pair.delta, pair.delta_prime, pair.fundamental_degree());
        let image = pair.forward.apply_to_parametrization(&e.param).unwrap();
        for &v in &e.linear_image {
            assert!(image.coordinate(v).unwrap().is_zero(), "{name}: {} ≠ 0", ring.name(v));
        }
        for eq in &e.equations {
            let affine = eq.specialize(e.param.space().chart, &cremona::polycore::q(1));
            assert!(membership_check(&e.param, &affine).unwrap(), "{name}: {eq}");
        }
    }
}

#[test]
fn serialized_pairs_round_trip() {
    let ring = Ring::new();
    for name in ["segre:2,2", "rnc:5", "tp:2"] {
        let pair = catalog_entry(&ring, name).unwrap().linearize().unwrap();
        let json = serde_json::to_string(&pair.to_json()).unwrap();
        let back = CremonaPair::from_json(&ring, &serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back.forward, pair.forward);
        assert_eq!(back.inverse, pair.inverse);
        assert_eq!(back.fundamental_factor, pair.fundamental_factor);
    }
}

fn y_block(ring: &Ring, m: u32, n: u32) -> PolyMatrix {
    (1..=m).map(|i| (1..=n).map(|j| poly(ring, &format!("y_{i}{j}"))).collect()).collect()
}

#[test]
fn segre_secants_become_determinantal() {
    let ring = Ring::new();
    for (m, n, k) in [(2, 2, 1), (3, 3, 1), (3, 3, 2)] {
        let e = segre(&ring, m, n).unwrap();
        let pair = e.linearize().unwrap();
        let sec = pair.forward.apply_to_parametrization(&secant_parametrization(&e.param, k).unwrap()).unwrap();
        let eqs = minors(&ring, &y_block(&ring, m, n), k + 1).unwrap();
        assert!(!eqs.is_empty());
        for eq in &eqs {
            assert!(membership_check(&sec, eq).unwrap(), "({m}, {n}, {k}): {eq}");
        }
        // one order lower does not hold: the secant fills more than that
        if k >= 1 {
            let lower = minors(&ring, &y_block(&ring, m, n), k).unwrap();
            assert!(!lower.iter().all(|eq| membership_check(&sec, eq).unwrap()));
        }
    }
}

#[test]
fn tangent_varieties() {
    let ring = Ring::new();
    let e = catalog_entry(&ring, "grass2:6").unwrap();
    let pair = e.linearize().unwrap();
    let tan = pair.forward.apply_to_parametrization(&tangential_parametrization(&e.param).unwrap()).unwrap();
    assert!(membership_check(&tan, &poly(&ring, "y_23*y_45 - y_24*y_35 + y_25*y_34")).unwrap());

    let e = tpn(&ring, 2).unwrap();
    let pair = e.linearize().unwrap();
    let tan = pair.forward.apply_to_parametrization(&tangential_parametrization(&e.param).unwrap()).unwrap();
    assert!(membership_check(&tan, &poly(&ring, "y_12*y_21 - y_10*y_20")).unwrap());
}

#[test]
fn cumulant_maps_round_trip() {
    let ring = Ring::new();
    for n in 1..=4 {
        for kind in PosetKind::ALL {
            let pair = l_cumulant_map(&ring, &kind.build(n).unwrap()).unwrap();
            assert!(pair.verified, "{} {n}", kind.name());
            assert!(pair.forward.then(&pair.inverse).unwrap().is_identity());
            assert!(pair.inverse.then(&pair.forward).unwrap().is_identity());
            assert!(linearization_check(&ring, &pair).unwrap(), "{} {n}", kind.name());
        }
    }
    for shape in [vec![1, 2], vec![2, 2], vec![1, 1, 2]] {
        let pair = multi_segre_cumulant_map(&ring, &shape).unwrap();
        assert!(pair.verified);
        assert!(multi_linearization_check(&ring, &pair, &shape).unwrap(), "{shape:?}");
    }
}

#[test]
fn literal_rnc_map_linearizes_but_loses_the_cone() {
    let ring = Ring::new();
    let e = rnc(&ring, 6).unwrap();
    let pair = rnc_literal_map(&ring, 6).unwrap();
    let image = pair.forward.apply_to_parametrization(&e.param).unwrap();
    assert!(image.coords()[1..].iter().all(|f| f.is_zero()));
    // on the secant line through ν(a), ν(b): y_6 = s(1-s)(a^3-b^3)^2, which is
    // not c·(a+b)^4 for any c depending on s and a-b only
    let sec = pair.forward.apply_to_parametrization(&secant_parametrization(&e.param, 1).unwrap()).unwrap();
    let y = |i: u32| sec.coordinate(ring.var(&format!("y_{i}")).unwrap()).unwrap().clone();
    assert_eq!(&y(2) * &y(4), &y(3) * &y(3));
    assert_ne!(&y(4) * &y(6), &y(5) * &y(5));
}

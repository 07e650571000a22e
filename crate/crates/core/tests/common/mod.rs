//! Strategies and properties shared by the integration tests and the
//! acceptance runner.
#![allow(dead_code)]

use std::collections::HashMap;

use cremona::polycore::{parse_polynomial, q, Monomial, Polynomial, RationalFunction, Ring, VarId};
use cremona::posets::{all_partitions, full_set, FinitePoset, Partition};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

/// Terms `(coefficient, exponents of x, y, z)`, not necessarily canonical.
pub type Spec = Vec<(i64, [u32; 3])>;

pub fn spec(max_terms: usize, max_exp: u32) -> impl Strategy<Value = Spec> {
    prop::collection::vec((-9i64..=9, [0..=max_exp, 0..=max_exp, 0..=max_exp]), 0..=max_terms)
}

pub fn xyz() -> (Ring, [VarId; 3]) {
    let ring = Ring::new();
    let v = [ring.var("x").unwrap(), ring.var("y").unwrap(), ring.var("z").unwrap()];
    (ring, v)
}

pub fn build(ring: &Ring, vars: &[VarId; 3], spec: &Spec) -> Polynomial {
    Polynomial::from_terms(
        ring,
        spec.iter()
            .map(|(c, e)| (Monomial::from_pairs(vars.iter().copied().zip(e.iter().copied())), q(*c))),
    )
}

pub fn ring_axioms(a: &Spec, b: &Spec, c: &Spec) -> Result<(), TestCaseError> {
    let (ring, v) = xyz();
    let (a, b, c) = (build(&ring, &v, a), build(&ring, &v, b), build(&ring, &v, c));
    let zero = Polynomial::zero(&ring);
    let one = Polynomial::one(&ring);
    prop_assert_eq!(&a + &b, &b + &a);
    prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    prop_assert_eq!(&a * &b, &b * &a);
    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    prop_assert_eq!(&a + &zero, a.clone());
    prop_assert_eq!(&a * &one, a.clone());
    let a2 = a.clone();
    prop_assert!((&a - &a2).is_zero());
    prop_assert_eq!(&a + &(-&a), zero);
    Ok(())
}

pub fn canonical_idempotent(s: &Spec) -> Result<(), TestCaseError> {
    let (ring, v) = xyz();
    let p = build(&ring, &v, s);
    prop_assert_eq!(Polynomial::from_terms(&ring, p.terms().to_vec()), p.clone());
    let text = p.to_string();
    let reparsed = parse_polynomial(&ring, &text).unwrap();
    prop_assert_eq!(&reparsed, &p);
    prop_assert_eq!(reparsed.to_string(), text);
    // order and duplication of the input terms do not matter
    let mut doubled = s.clone();
    doubled.extend(s.iter().rev().cloned());
    prop_assert_eq!(build(&ring, &v, &doubled), &p + &p);
    prop_assert!(p.terms().windows(2).all(|w| w[0].0.grlex_cmp(&w[1].0).is_gt()));
    prop_assert!(p.terms().iter().all(|(_, c)| *c != q(0)));
    Ok(())
}

pub fn leibniz(a: &Spec, b: &Spec, var: usize) -> Result<(), TestCaseError> {
    let (ring, v) = xyz();
    let (a, b) = (build(&ring, &v, a), build(&ring, &v, b));
    let d = |p: &Polynomial| p.partial_derivative(v[var]);
    prop_assert_eq!(d(&(&a * &b)), &(&d(&a) * &b) + &(&a * &d(&b)));
    prop_assert_eq!(d(&(&a + &b)), &d(&a) + &d(&b));
    Ok(())
}

/// `(p ∘ σ) ∘ τ = p ∘ (σ ∘ τ)` for substitutions of all three variables.
pub fn substitution_composition(p: &Spec, sigma: &[Spec; 3], tau: &[Spec; 3]) -> Result<(), TestCaseError> {
    let (ring, v) = xyz();
    let p = build(&ring, &v, p);
    let bind = |specs: &[Spec; 3]| -> HashMap<VarId, Polynomial> {
        v.iter().zip(specs).map(|(&x, s)| (x, build(&ring, &v, s))).collect()
    };
    let (s, t) = (bind(sigma), bind(tau));
    let composite: HashMap<VarId, Polynomial> = s.iter().map(|(&x, f)| (x, f.substitute_polys(&t).unwrap())).collect();
    let lhs = p.substitute_polys(&s).unwrap().substitute_polys(&t).unwrap();
    let rhs = p.substitute_polys(&composite).unwrap();
    prop_assert_eq!(&lhs, &rhs);
    // the rational-function path agrees with the polynomial one
    let rs: HashMap<VarId, RationalFunction> = s.iter().map(|(&x, f)| (x, f.clone().into())).collect();
    let via_rational = RationalFunction::from_poly(p.clone()).substitute(&rs).unwrap();
    prop_assert_eq!(via_rational.as_polynomial().unwrap(), &p.substitute_polys(&s).unwrap());
    Ok(())
}

/// Random bounded subposet of `Π([n])`: the chosen partitions plus `0̂` and
/// `1̂`.
pub fn partition_subposet(n: u32, mask: &[bool]) -> FinitePoset<Partition> {
    let ground = full_set(n);
    let all = all_partitions(ground).unwrap();
    let keep: Vec<Partition> = all
        .iter()
        .zip(mask.iter().cycle())
        .filter(|(p, &m)| m || p.num_blocks() == 1 || p.num_blocks() == n as usize)
        .map(|(p, _)| p.clone())
        .collect();
    FinitePoset::new(keep, |a, b| a.refines(b)).unwrap()
}

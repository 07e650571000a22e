use super::{check_n, l_cumulant_forward, CumulantError, SubsetCoordinates};
use crate::maps::{verify_cremona, CremonaPair, RationalMap};
use crate::polycore::{q, Polynomial, RationalFunction, Ring, VarId};
use crate::posets::{subset_elements, PartitionPoset};
use crate::varieties::Parametrization;

/// Image of the secant variety of `Σ_n` under the two-step cumulant change
/// of coordinates, with the maps used.
#[derive(Clone, Debug)]
pub struct SecantCumulants {
    /// One-cluster step `x ↦ y`.
    pub psi1: CremonaPair,
    /// Interval-partition step `y ↦ z` on centred coordinates.
    pub psi2: CremonaPair,
    /// Affine secant parametrization in the `x` coordinates.
    pub secant: Parametrization,
    /// Its image in the `z` coordinates.
    pub image: Parametrization,
    pub a: Vec<VarId>,
    pub b: Vec<VarId>,
    pub s: VarId,
    /// Whether every `|I| ≥ 2` coordinate matches [`secant_closed_form`].
    pub identity_holds: bool,
}

/// `y_I = ∑_{A⊆I} (−1)^{|I∖A|} x_A ∏_{i∈I∖A} x_i` for `|I| ≥ 2` and
/// `y_i = x_i`.
pub fn psi1_explicit(ring: &Ring, x: &SubsetCoordinates, y: &SubsetCoordinates) -> Result<RationalMap, CumulantError> {
    let mut coords = Vec::new();
    for &set in x.order() {
        if set.count_ones() < 2 {
            coords.push(RationalFunction::from_poly(x.poly(set)));
            continue;
        }
        let mut f = Polynomial::zero(ring);
        // subsets A of `set`
        let mut a = set;
        loop {
            let rest = set & !a;
            let sign = if rest.count_ones() % 2 == 0 { 1 } else { -1 };
            let term = subset_elements(rest).fold(x.poly(a), |acc, i| &acc * &x.poly(1 << (i - 1)));
            f = &f + &term.scale(&q(sign));
            if a == 0 {
                break;
            }
            a = (a - 1) & set;
        }
        coords.push(RationalFunction::from_poly(f));
    }
    Ok(RationalMap::new(ring, x.space(), y.space(), coords)?)
}

/// Interval-partition cumulants of centred moments: singleton blocks stand
/// for the vanishing first central moments, so
/// `z_I = ∑_{π∈𝓘(I), no singleton blocks} (−1)^{|π|−1} ∏_{B∈π} y_B` for
/// `|I| ≥ 2`, while `z_i = y_i` keeps the means as coordinates.
pub fn centred_interval_cumulants(ring: &Ring, y: &SubsetCoordinates, z: &SubsetCoordinates) -> Result<RationalMap, CumulantError> {
    let interval = PartitionPoset::interval(y.n())?;
    let mut coords = Vec::new();
    for &set in y.order() {
        if set.count_ones() < 2 {
            coords.push(RationalFunction::from_poly(y.poly(set)));
            continue;
        }
        let restricted = interval.restrict(set)?;
        let mut f = Polynomial::zero(ring);
        for pi in restricted.elements() {
            if pi.blocks().iter().any(|b| b.count_ones() == 1) {
                continue;
            }
            let mu = restricted.mobius_to_top(pi)?;
            let prod = pi.blocks().iter().fold(Polynomial::one(ring), |acc, &b| &acc * &y.poly(b));
            f = &f + &prod.scale(&q(mu));
        }
        coords.push(RationalFunction::from_poly(f));
    }
    Ok(RationalMap::new(ring, y.space(), z.space(), coords)?)
}

/// `s(1−s)(1−2s)^{|I|−2} ∏_{i∈I} (b_i − a_i)`.
pub fn secant_closed_form(ring: &Ring, set: u32, a: &[VarId], b: &[VarId], s: VarId) -> Result<Polynomial, CumulantError> {
    let s = Polynomial::var(ring, s);
    let one = Polynomial::one(ring);
    let two_s = s.scale(&q(2));
    let mut p = s.try_mul(&(&one - &s))?.try_mul(&(&one - &two_s).try_pow(set.count_ones().saturating_sub(2))?)?;
    for i in subset_elements(set) {
        let i = i as usize - 1;
        p = p.try_mul(&(&Polynomial::var(ring, b[i]) - &Polynomial::var(ring, a[i])))?;
    }
    Ok(p)
}

/// Pushes `x_I = (1−s)∏_{i∈I} a_i + s∏_{i∈I} b_i` through the one-cluster
/// cumulant map (central moments) and then the interval-partition cumulants
/// of [`centred_interval_cumulants`], and compares the result with the
/// closed form.
pub fn secant_cumulant_pipeline(ring: &Ring, n: u32) -> Result<SecantCumulants, CumulantError> {
    check_n(n)?;
    if n < 2 {
        return Err(CumulantError::OutOfRange(n));
    }
    let x = SubsetCoordinates::new(ring, n, "x")?;
    let y = SubsetCoordinates::new(ring, n, "y")?;
    let z = SubsetCoordinates::new(ring, n, "z")?;

    let f1 = psi1_explicit(ring, &x, &y)?;
    if n <= 4 {
        let via_poset = l_cumulant_forward(ring, &PartitionPoset::one_cluster(n)?, &x, &y)?;
        if via_poset != f1 {
            return Err(CumulantError::CrossCheck(
                "explicit one-cluster map differs from the poset construction".into(),
            ));
        }
    }
    let psi1 = verify_cremona(&f1, &f1.invert_triangular()?)?;
    let f2 = centred_interval_cumulants(ring, &y, &z)?;
    let psi2 = verify_cremona(&f2, &f2.invert_triangular()?)?;

    let a = (1..=n).map(|i| ring.var(&format!("a_{i}"))).collect::<Result<Vec<_>, _>>()?;
    let b = (1..=n).map(|i| ring.var(&format!("b_{i}"))).collect::<Result<Vec<_>, _>>()?;
    let s = ring.var("s_1")?;
    let sp = Polynomial::var(ring, s);
    let one = Polynomial::one(ring);
    let coords = x
        .order()
        .iter()
        .map(|&set| {
            let pa = subset_elements(set).fold(one.clone(), |acc, i| &acc * &Polynomial::var(ring, a[i as usize - 1]));
            let pb = subset_elements(set).fold(one.clone(), |acc, i| &acc * &Polynomial::var(ring, b[i as usize - 1]));
            RationalFunction::from_poly(&(&(&one - &sp) * &pa) + &(&sp * &pb))
        })
        .collect();
    let mut params = a.clone();
    params.extend(&b);
    params.push(s);
    let secant = Parametrization::new(ring, params, x.space(), coords)?;
    let image = psi2
        .forward
        .apply_to_parametrization(&psi1.forward.apply_to_parametrization(&secant)?)?;

    let mut identity_holds = true;
    for (&set, f) in x.order().iter().zip(image.coords()) {
        if set.count_ones() < 2 {
            continue;
        }
        let closed = RationalFunction::from_poly(secant_closed_form(ring, set, &a, &b, s)?);
        if !f.try_sub(&closed)?.is_zero() {
            identity_holds = false;
        }
    }
    Ok(SecantCumulants {
        psi1,
        psi2,
        secant,
        image,
        a,
        b,
        s,
        identity_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse_polynomial;

    #[test]
    fn pipeline_matches_the_closed_form() {
        let ring = Ring::new();
        for n in 2..=4 {
            let out = secant_cumulant_pipeline(&ring, n).unwrap();
            assert!(out.identity_holds, "n = {n}");
            assert!(out.psi1.verified && out.psi2.verified);
        }
    }

    #[test]
    fn three_factor_coordinate() {
        let ring = Ring::new();
        let out = secant_cumulant_pipeline(&ring, 3).unwrap();
        let z123 = out.image.coordinate(ring.var("z_{1,2,3}").unwrap()).unwrap();
        let expected = parse_polynomial(&ring, "s_1*(1 - s_1)*(1 - 2*s_1)*(b_1 - a_1)*(b_2 - a_2)*(b_3 - a_3)").unwrap();
        assert_eq!(z123.as_polynomial().unwrap(), &expected);
        // singletons pass through unchanged
        let z1 = out.image.coordinate(ring.var("z_{1}").unwrap()).unwrap();
        assert_eq!(z1, out.secant.coordinate(ring.var("x_{1}").unwrap()).unwrap());
    }

    #[test]
    fn centred_map_is_the_interval_map_with_vanishing_first_moments() {
        let ring = Ring::new();
        let y = SubsetCoordinates::new(&ring, 4, "y").unwrap();
        let z = SubsetCoordinates::new(&ring, 4, "z").unwrap();
        let centred = centred_interval_cumulants(&ring, &y, &z).unwrap();
        let literal = l_cumulant_forward(&ring, &PartitionPoset::interval(4).unwrap(), &y, &z).unwrap();
        let zero_means: std::collections::HashMap<VarId, RationalFunction> =
            (0..4).map(|i| (y.var(1 << i), RationalFunction::zero(&ring))).collect();
        for ((&set, c), l) in y.order().iter().zip(centred.coords()).zip(literal.coords()) {
            if set.count_ones() >= 2 {
                assert_eq!(c, &l.substitute(&zero_means).unwrap());
            }
        }
    }

    #[test]
    fn literal_interval_step_misses_the_closed_form() {
        // with the means left in, z_{1,2} picks up an extra −x_1x_2
        let ring = Ring::new();
        let out = secant_cumulant_pipeline(&ring, 2).unwrap();
        let y = SubsetCoordinates::new(&ring, 2, "y").unwrap();
        let z = SubsetCoordinates::new(&ring, 2, "z").unwrap();
        let literal = l_cumulant_forward(&ring, &PartitionPoset::interval(2).unwrap(), &y, &z).unwrap();
        let image = literal
            .apply_to_parametrization(&out.psi1.forward.apply_to_parametrization(&out.secant).unwrap())
            .unwrap();
        let closed = secant_closed_form(&ring, 0b11, &out.a, &out.b, out.s).unwrap();
        assert_ne!(image.coords()[2].as_polynomial().unwrap(), &closed);
    }

    #[test]
    fn singleton_terms_of_the_raw_sum_cancel() {
        // the raw sum over A ⊆ {i} is x_i − x_i = 0, which is why singletons
        // are kept as they are
        let ring = Ring::new();
        let x = SubsetCoordinates::new(&ring, 2, "x").unwrap();
        let y = SubsetCoordinates::new(&ring, 2, "y").unwrap();
        let f = psi1_explicit(&ring, &x, &y).unwrap();
        let expected = parse_polynomial(&ring, "x_{1,2} - x_{1}*x_{2}").unwrap();
        assert_eq!(f.coords()[2].as_polynomial().unwrap(), &expected);
        assert_eq!(f.coords()[0].as_polynomial().unwrap(), &x.poly(1));
    }
}

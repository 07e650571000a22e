use std::collections::HashMap;
use std::fmt;

use super::{MapError, RationalMap, Space};
use crate::polycore::{gcd, lcm, Polynomial, RationalFunction, Ring, VarId};

/// Map of projective spaces given by homogeneous polynomials of a common
/// degree; `coords[0]` is the target chart coordinate.
#[derive(Clone, PartialEq)]
pub struct HomogeneousMap {
    ring: Ring,
    source: Space,
    target: Space,
    coords: Vec<Polynomial>,
    degree: u32,
}

impl HomogeneousMap {
    pub fn new(ring: &Ring, source: Space, target: Space, coords: Vec<Polynomial>) -> Result<Self, MapError> {
        if coords.len() != target.dim() + 1 {
            return Err(MapError::SpaceMismatch(format!(
                "{} coordinate polynomials for {} homogeneous target coordinates",
                coords.len(),
                target.dim() + 1
            )));
        }
        let all = source.all();
        let mut degree = None;
        for (t, p) in target.all().iter().zip(&coords) {
            if let Some(stray) = p.vars().into_iter().find(|v| !all.contains(v)) {
                return Err(MapError::SpaceMismatch(format!(
                    "coordinate {} involves {}, which is not a source coordinate",
                    ring.name(*t),
                    ring.name(stray)
                )));
            }
            if p.is_zero() {
                continue;
            }
            if !p.is_homogeneous() {
                return Err(MapError::Degree(format!("coordinate {} is not homogeneous", ring.name(*t))));
            }
            match degree {
                None => degree = Some(p.total_degree()),
                Some(d) if d != p.total_degree() => {
                    return Err(MapError::Degree(format!(
                        "coordinate {} has degree {}, expected {d}",
                        ring.name(*t),
                        p.total_degree()
                    )))
                }
                _ => {}
            }
        }
        let degree = degree.ok_or_else(|| MapError::Degree("all coordinates vanish".into()))?;
        Ok(HomogeneousMap {
            ring: ring.clone(),
            source,
            target,
            coords,
            degree,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn source(&self) -> &Space {
        &self.source
    }

    pub fn target(&self) -> &Space {
        &self.target
    }

    pub fn coords(&self) -> &[Polynomial] {
        &self.coords
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Generators of the indeterminacy scheme: the coordinate polynomials.
    pub fn indeterminacy_generators(&self) -> &[Polynomial] {
        &self.coords
    }

    /// Restriction to the chart `source.chart = 1`, divided by the chart
    /// coordinate of the target.
    pub fn dehomogenize(&self) -> Result<RationalMap, MapError> {
        let one = crate::polycore::q(1);
        let den = self.coords[0].specialize(self.source.chart, &one);
        let coords = self.coords[1..]
            .iter()
            .map(|p| RationalFunction::new(p.specialize(self.source.chart, &one), den.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        RationalMap::new(&self.ring, self.source.clone(), self.target.clone(), coords)
    }

    /// Substitution sending each homogeneous target coordinate to its
    /// polynomial.
    pub fn bindings(&self) -> HashMap<VarId, Polynomial> {
        self.target.all().into_iter().zip(self.coords.iter().cloned()).collect()
    }

    /// `g ∘ f` without removing common factors.
    pub fn then(&self, g: &HomogeneousMap) -> Result<HomogeneousMap, MapError> {
        if self.target != g.source {
            return Err(MapError::SpaceMismatch(
                "the first map's target is not the second map's source".into(),
            ));
        }
        let b = self.bindings();
        let coords = g
            .coords
            .iter()
            .map(|p| p.substitute_polys(&b))
            .collect::<Result<Vec<_>, _>>()?;
        HomogeneousMap::new(&self.ring, self.source.clone(), g.target.clone(), coords)
    }

    /// Common factor of all coordinates.
    pub fn common_factor(&self) -> Result<Polynomial, MapError> {
        let mut g = Polynomial::zero(&self.ring);
        for p in &self.coords {
            g = gcd(&g, p)?;
            if g.is_one() {
                break;
            }
        }
        Ok(g)
    }

    /// Whether both maps agree as maps of projective spaces.
    pub fn projectively_equal(&self, other: &HomogeneousMap) -> Result<bool, MapError> {
        if self.source != other.source || self.target != other.target {
            return Ok(false);
        }
        proportional(&self.coords, &other.coords)
    }

    /// Whether `self` is the identity up to a common factor.
    pub fn is_projective_identity(&self) -> Result<bool, MapError> {
        if self.source.dim() != self.target.dim() {
            return Ok(false);
        }
        let vars: Vec<Polynomial> = self.source.all().into_iter().map(|v| Polynomial::var(&self.ring, v)).collect();
        proportional(&self.coords, &vars)
    }
}

fn proportional(a: &[Polynomial], b: &[Polynomial]) -> Result<bool, MapError> {
    let Some(k) = a.iter().position(|p| !p.is_zero()) else {
        return Ok(b.iter().all(|p| p.is_zero()));
    };
    if b[k].is_zero() {
        return Ok(false);
    }
    for i in 0..a.len() {
        if a[i].try_mul(&b[k])? != a[k].try_mul(&b[i])? {
            return Ok(false);
        }
    }
    Ok(true)
}

impl RationalMap {
    /// Clears denominators with their lcm and pads with powers of the
    /// source chart coordinate to a common degree. The resulting
    /// coordinates have no common factor.
    pub fn homogenize(&self) -> Result<HomogeneousMap, MapError> {
        let ring = self.ring();
        let mut den = Polynomial::one(ring);
        for c in self.coords() {
            if !c.den().is_one() && den != *c.den() {
                den = lcm(&den, c.den())?;
            }
        }
        let mut affine = vec![den.clone()];
        for c in self.coords() {
            let factor = den.div_exact(c.den())?.expect("lcm is a multiple");
            affine.push(c.num().try_mul(&factor)?);
        }
        let delta = affine.iter().map(|p| p.total_degree()).max().unwrap_or(0).max(1);
        let chart = self.source().chart;
        let coords = affine
            .iter()
            .map(|p| p.homogenize(chart, delta))
            .collect::<Result<Vec<_>, _>>()?;
        HomogeneousMap::new(ring, self.source().clone(), self.target().clone(), coords)
    }
}

/// A Cremona transformation together with its inverse and the data of the
/// identity `G_i(F) = Φ·x_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct CremonaPair {
    pub forward: RationalMap,
    pub inverse: RationalMap,
    pub delta: u32,
    pub delta_prime: u32,
    pub fundamental_factor: Polynomial,
    pub verified: bool,
}

impl CremonaPair {
    /// The pair with the roles of the maps exchanged.
    pub fn swapped(&self) -> CremonaPair {
        CremonaPair {
            forward: self.inverse.clone(),
            inverse: self.forward.clone(),
            delta: self.delta_prime,
            delta_prime: self.delta,
            fundamental_factor: self.fundamental_factor.clone(),
            verified: false,
        }
    }

    /// Degree of the fundamental factor.
    pub fn fundamental_degree(&self) -> u32 {
        self.fundamental_factor.total_degree()
    }

    /// Whether `deg Φ = δ·δ′ − 1`.
    pub fn degree_law_holds(&self) -> bool {
        self.fundamental_degree() + 1 == self.delta * self.delta_prime
    }
}

/// Homogenizes both maps and checks `G_i(F_0, …, F_r) = Φ·x_i` for every
/// homogeneous coordinate.
pub fn verify_cremona(f: &RationalMap, g: &RationalMap) -> Result<CremonaPair, MapError> {
    if f.target() != g.source() || g.target() != f.source() {
        return Err(MapError::SpaceMismatch("the maps are not between the same two spaces".into()));
    }
    let hf = f.homogenize()?;
    let hg = g.homogenize()?;
    let phi = verify_cremona_homogeneous(&hf, &hg)?;
    Ok(CremonaPair {
        forward: f.clone(),
        inverse: g.clone(),
        delta: hf.degree(),
        delta_prime: hg.degree(),
        fundamental_factor: phi,
        verified: true,
    })
}

/// Returns `Φ` with `G_i(F) = Φ·x_i`; fails on the first coordinate where
/// the identity breaks or if either map has a common factor.
pub fn verify_cremona_homogeneous(f: &HomogeneousMap, g: &HomogeneousMap) -> Result<Polynomial, MapError> {
    if f.target() != g.source() || g.target() != f.source() {
        return Err(MapError::SpaceMismatch("the maps are not between the same two spaces".into()));
    }
    for m in [f, g] {
        let common = m.common_factor()?;
        if !common.is_constant() {
            return Err(MapError::NotCoprime(common.to_string()));
        }
    }
    let ring = f.ring();
    let composite = f.then(g)?;
    let xs = f.source().all();
    let x0 = Polynomial::var(ring, xs[0]);
    let phi = composite.coords[0]
        .div_exact(&x0)?
        .ok_or_else(|| MapError::VerificationFailed(ring.name(xs[0])))?;
    for (p, &x) in composite.coords.iter().zip(&xs).skip(1) {
        if *p != phi.try_mul(&Polynomial::var(ring, x))? {
            return Err(MapError::VerificationFailed(ring.name(x)));
        }
    }
    Ok(phi)
}

impl fmt::Debug for HomogeneousMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomogeneousMap [{self}]")
    }
}

impl fmt::Display for HomogeneousMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.coords.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{parse_polynomial, parse_rational};

    fn rmap(ring: &Ring, src: &Space, tgt: &Space, coords: &[&str]) -> RationalMap {
        let coords = coords.iter().map(|s| parse_rational(ring, s).unwrap()).collect();
        RationalMap::new(ring, src.clone(), tgt.clone(), coords).unwrap()
    }

    #[test]
    fn identity_has_trivial_fundamental_factor() {
        let ring = Ring::new();
        let x = Space::named(&ring, "x_0", &["x_1", "x_2"]).unwrap();
        let y = Space::named(&ring, "y_0", &["y_1", "y_2"]).unwrap();
        let f = RationalMap::identity(&ring, x.clone(), y.clone()).unwrap();
        let g = RationalMap::identity(&ring, y, x).unwrap();
        let pair = verify_cremona(&f, &g).unwrap();
        assert_eq!((pair.delta, pair.delta_prime), (1, 1));
        assert!(pair.fundamental_factor.is_one());
    }

    #[test]
    fn quadratic_triangular_pair() {
        let ring = Ring::new();
        let x = Space::named(&ring, "x_0", &["x_1", "x_2"]).unwrap();
        let y = Space::named(&ring, "y_0", &["y_1", "y_2"]).unwrap();
        let f = rmap(&ring, &x, &y, &["x_1", "x_2 - x_1^2"]);
        let g = rmap(&ring, &y, &x, &["y_1", "y_2 + y_1^2"]);
        let pair = verify_cremona(&f, &g).unwrap();
        assert_eq!(pair.fundamental_factor, parse_polynomial(&ring, "x_0^3").unwrap());
        assert!(pair.degree_law_holds());
        let wrong = rmap(&ring, &y, &x, &["y_1", "y_2 - y_1^2"]);
        assert!(matches!(verify_cremona(&f, &wrong), Err(MapError::VerificationFailed(c)) if c == "x_2"));
    }

    #[test]
    fn standard_quadratic_involution() {
        // [x0:x1:x2] -> [x1 x2 : x0 x2 : x0 x1], in the chart x0 = 1.
        let ring = Ring::new();
        let x = Space::named(&ring, "x_0", &["x_1", "x_2"]).unwrap();
        let y = Space::named(&ring, "y_0", &["y_1", "y_2"]).unwrap();
        let f = rmap(&ring, &x, &y, &["1/x_1", "1/x_2"]);
        let g = rmap(&ring, &y, &x, &["1/y_1", "1/y_2"]);
        let h = f.homogenize().unwrap();
        assert_eq!(h.degree(), 2);
        assert_eq!(h.coords()[0], parse_polynomial(&ring, "x_1*x_2").unwrap());
        let pair = verify_cremona(&f, &g).unwrap();
        assert_eq!(pair.fundamental_factor, parse_polynomial(&ring, "x_0*x_1*x_2").unwrap());
        assert_eq!(h.dehomogenize().unwrap(), f);
    }
}

//! Rational maps between affine charts of projective spaces, and Cremona
//! transformations.

mod homogeneous;
mod monoid;
mod serial;
mod triangular;

pub use homogeneous::{verify_cremona, verify_cremona_homogeneous, CremonaPair, HomogeneousMap};
pub use monoid::{double_projection, monoidal_extension, stereographic_projection, Monoid};
pub use serial::{CremonaPairJson, RationalMapJson};
pub use triangular::{generalized_triangular, maps_to_linear_subspace, triangular_from_parametrization};

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::polycore::{PolyError, RationalFunction, Ring, VarId};
use crate::varieties::Parametrization;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("space mismatch: {0}")]
    SpaceMismatch(String),
    #[error("parametrization is not in normal form: {0}; reorder the coordinates so the parameters come first")]
    NotNormalForm(String),
    #[error("coordinate {coord} is not triangular: {reason}")]
    NotTriangular { coord: String, reason: String },
    #[error("multiplier for coordinate {0} is identically zero")]
    ZeroMultiplier(String),
    #[error("composition is not the identity at coordinate {0}")]
    VerificationFailed(String),
    #[error("degree mismatch: {0}")]
    Degree(String),
    #[error("coordinate polynomials share the factor {0}")]
    NotCoprime(String),
    #[error("denominator {0} vanishes identically on the variety (it lies in the fundamental locus)")]
    FundamentalLocus(String),
    #[error("malformed serialized map: {0}")]
    Format(String),
}

/// Homogeneous coordinates `[chart, coords...]`; maps are written in the
/// affine chart `chart = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Space {
    pub chart: VarId,
    pub coords: Vec<VarId>,
}

impl Space {
    pub fn new(chart: VarId, coords: Vec<VarId>) -> Self {
        Space { chart, coords }
    }

    /// Declares `chart` and `coords` by name.
    pub fn named<S: AsRef<str>>(ring: &Ring, chart: &str, coords: &[S]) -> Result<Self, PolyError> {
        Ok(Space {
            chart: ring.var(chart)?,
            coords: ring.vars(coords)?,
        })
    }

    /// All homogeneous coordinates, chart first.
    pub fn all(&self) -> Vec<VarId> {
        std::iter::once(self.chart).chain(self.coords.iter().copied()).collect()
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn position(&self, v: VarId) -> Option<usize> {
        self.coords.iter().position(|&c| c == v)
    }
}

/// Rational map in affine charts: target coordinate `target.coords[i]` is
/// `coords[i]`, a rational function of the source coordinates.
#[derive(Clone, PartialEq)]
pub struct RationalMap {
    ring: Ring,
    source: Space,
    target: Space,
    coords: Vec<RationalFunction>,
}

impl RationalMap {
    pub fn new(ring: &Ring, source: Space, target: Space, coords: Vec<RationalFunction>) -> Result<Self, MapError> {
        if coords.len() != target.coords.len() {
            return Err(MapError::SpaceMismatch(format!(
                "{} coordinate functions for {} target variables",
                coords.len(),
                target.coords.len()
            )));
        }
        for (t, f) in target.coords.iter().zip(&coords) {
            if let Some(stray) = f.vars().into_iter().find(|v| source.position(*v).is_none()) {
                return Err(MapError::SpaceMismatch(format!(
                    "coordinate {} involves {}, which is not a source coordinate",
                    ring.name(*t),
                    ring.name(stray)
                )));
            }
        }
        Ok(RationalMap {
            ring: ring.clone(),
            source,
            target,
            coords,
        })
    }

    pub fn identity(ring: &Ring, source: Space, target: Space) -> Result<Self, MapError> {
        if source.dim() != target.dim() {
            return Err(MapError::SpaceMismatch("identity between spaces of different dimension".into()));
        }
        let coords = source.coords.iter().map(|&v| RationalFunction::var(ring, v)).collect();
        RationalMap::new(ring, source, target, coords)
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

    pub fn coords(&self) -> &[RationalFunction] {
        &self.coords
    }

    pub fn coordinate(&self, v: VarId) -> Option<&RationalFunction> {
        self.target.position(v).map(|i| &self.coords[i])
    }

    /// Substitution sending each target coordinate to its function.
    pub fn bindings(&self) -> HashMap<VarId, RationalFunction> {
        self.target.coords.iter().copied().zip(self.coords.iter().cloned()).collect()
    }

    /// `g ∘ f` where `f = self`: first `self`, then `g`.
    pub fn then(&self, g: &RationalMap) -> Result<RationalMap, MapError> {
        compose(g, self)
    }

    /// Whether every coordinate is the matching source variable.
    pub fn is_identity(&self) -> bool {
        self.source.dim() == self.target.dim()
            && self
                .coords
                .iter()
                .zip(&self.source.coords)
                .all(|(f, &v)| f.as_polynomial().and_then(|p| p.as_var()) == Some(v))
    }

    /// The first coordinate that differs from the identity.
    pub fn first_non_identity(&self) -> Option<VarId> {
        self.coords
            .iter()
            .zip(&self.source.coords)
            .zip(&self.target.coords)
            .find(|((f, &v), _)| f.as_polynomial().and_then(|p| p.as_var()) != Some(v))
            .map(|(_, &t)| t)
    }

    pub fn is_polynomial(&self) -> bool {
        self.coords.iter().all(|f| f.is_polynomial())
    }

    /// Same map with the target coordinates renamed.
    pub fn with_target(&self, target: Space) -> Result<RationalMap, MapError> {
        RationalMap::new(&self.ring, self.source.clone(), target, self.coords.clone())
    }

    /// Chart-form image of a parametrization of a subvariety of the source.
    pub fn apply_to_parametrization(&self, param: &Parametrization) -> Result<Parametrization, MapError> {
        apply_to_parametrization(self, param)
    }

    /// Evaluates the map at a point given by source coordinates.
    pub fn evaluate(&self, point: &[crate::polycore::Coeff]) -> Result<Vec<crate::polycore::Coeff>, MapError> {
        let p: HashMap<VarId, crate::polycore::Coeff> =
            self.source.coords.iter().copied().zip(point.iter().cloned()).collect();
        Ok(self.coords.iter().map(|f| f.evaluate(&p)).collect::<Result<Vec<_>, _>>()?)
    }
}

/// `g ∘ f`: substitutes the coordinates of `f` into `g`.
pub fn compose(g: &RationalMap, f: &RationalMap) -> Result<RationalMap, MapError> {
    if f.target != g.source {
        return Err(MapError::SpaceMismatch(
            "the first map's target is not the second map's source".into(),
        ));
    }
    let b = f.bindings();
    let coords = g.coords.iter().map(|c| c.substitute(&b)).collect::<Result<Vec<_>, _>>()?;
    RationalMap::new(&f.ring, f.source.clone(), g.target.clone(), coords)
}

pub fn apply_to_parametrization(m: &RationalMap, param: &Parametrization) -> Result<Parametrization, MapError> {
    if m.source.coords != param.space().coords {
        return Err(MapError::SpaceMismatch(
            "map source coordinates differ from the parametrization's coordinates".into(),
        ));
    }
    let b = param.bindings();
    let mut coords = Vec::with_capacity(m.coords.len());
    for c in &m.coords {
        let value = c.substitute(&b).map_err(|e| match e {
            PolyError::DivisionByZero(_) => MapError::FundamentalLocus(c.den().to_string()),
            other => other.into(),
        })?;
        coords.push(value);
    }
    Parametrization::new(&m.ring, param.params().to_vec(), m.target.clone(), coords)
}

impl fmt::Debug for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalMap {{ {self} }}")
    }
}

impl fmt::Display for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (t, c)) in self.target.coords.iter().zip(&self.coords).enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{} = {}", self.ring.name(*t), c)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse_rational;

    #[test]
    fn identity_is_neutral_for_composition() {
        let ring = Ring::new();
        let x = Space::named(&ring, "x_0", &["x_1", "x_2"]).unwrap();
        let y = Space::named(&ring, "y_0", &["y_1", "y_2"]).unwrap();
        let f = RationalMap::new(
            &ring,
            x.clone(),
            y.clone(),
            vec![parse_rational(&ring, "x_1").unwrap(), parse_rational(&ring, "x_2 - x_1^2").unwrap()],
        )
        .unwrap();
        let id = RationalMap::identity(&ring, y.clone(), y.clone()).unwrap();
        assert_eq!(compose(&id, &f).unwrap(), f);
        assert!(id.is_identity());
        assert!(!f.is_identity());
        assert!(compose(&f, &f).is_err());
    }

    #[test]
    fn coordinates_must_use_source_variables() {
        let ring = Ring::new();
        let x = Space::named(&ring, "x_0", &["x_1"]).unwrap();
        let y = Space::named(&ring, "y_0", &["y_1"]).unwrap();
        let bad = RationalMap::new(&ring, x, y, vec![parse_rational(&ring, "y_1").unwrap()]);
        assert!(matches!(bad, Err(MapError::SpaceMismatch(_))));
    }
}

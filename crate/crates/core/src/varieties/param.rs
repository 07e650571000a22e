use std::collections::HashMap;

use crate::maps::{MapError, Space};
use crate::polycore::{PolyError, Polynomial, RationalFunction, Ring, VarId};

/// Affine parametrization of a variety in the chart `space.chart = 1`:
/// coordinate `space.coords[i]` equals `coords[i]`, a rational function of
/// the parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct Parametrization {
    ring: Ring,
    params: Vec<VarId>,
    space: Space,
    coords: Vec<RationalFunction>,
    normal_form: bool,
}

impl Parametrization {
    pub fn new(ring: &Ring, params: Vec<VarId>, space: Space, coords: Vec<RationalFunction>) -> Result<Self, MapError> {
        if coords.len() != space.coords.len() {
            return Err(MapError::SpaceMismatch(format!(
                "{} coordinate functions for {} coordinates",
                coords.len(),
                space.coords.len()
            )));
        }
        for (v, f) in space.coords.iter().zip(&coords) {
            if let Some(stray) = f.vars().into_iter().find(|x| !params.contains(x)) {
                return Err(MapError::SpaceMismatch(format!(
                    "coordinate {} involves {}, which is not a parameter",
                    ring.name(*v),
                    ring.name(stray)
                )));
            }
        }
        let normal_form = params.len() <= coords.len()
            && params
                .iter()
                .zip(&coords)
                .all(|(&t, f)| f.as_polynomial().and_then(|p| p.as_var()) == Some(t));
        Ok(Parametrization {
            ring: ring.clone(),
            params,
            space,
            coords,
            normal_form,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn params(&self) -> &[VarId] {
        &self.params
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn coords(&self) -> &[RationalFunction] {
        &self.coords
    }

    /// Whether the first `n` coordinates are the `n` parameters themselves.
    pub fn is_normal_form(&self) -> bool {
        self.normal_form
    }

    pub fn num_params(&self) -> usize {
        self.params.len()
    }

    pub fn coordinate(&self, v: VarId) -> Option<&RationalFunction> {
        self.space.coords.iter().position(|&c| c == v).map(|i| &self.coords[i])
    }

    /// Substitution map sending each coordinate to its function and the
    /// chart variable to 1.
    pub fn bindings(&self) -> HashMap<VarId, RationalFunction> {
        let mut b: HashMap<VarId, RationalFunction> =
            self.space.coords.iter().copied().zip(self.coords.iter().cloned()).collect();
        b.insert(self.space.chart, RationalFunction::one(&self.ring));
        b
    }

    /// Restriction of a polynomial in the ambient coordinates to the
    /// variety.
    pub fn pull_back(&self, eq: &Polynomial) -> Result<RationalFunction, PolyError> {
        eq.substitute(&self.bindings())
    }

    /// Same parametrization with the parameters renamed.
    pub fn rename_params(&self, renaming: &HashMap<VarId, VarId>) -> Result<Self, MapError> {
        let b: HashMap<VarId, RationalFunction> = renaming
            .iter()
            .map(|(&a, &b)| (a, RationalFunction::var(&self.ring, b)))
            .collect();
        let coords = self.coords.iter().map(|f| f.substitute(&b)).collect::<Result<Vec<_>, _>>()?;
        let params = self.params.iter().map(|p| *renaming.get(p).unwrap_or(p)).collect();
        Parametrization::new(&self.ring, params, self.space.clone(), coords)
    }

    /// Replaces the parameters by rational functions of new parameters.
    pub fn reparametrize(&self, params: Vec<VarId>, subs: &HashMap<VarId, RationalFunction>) -> Result<Self, MapError> {
        let coords = self.coords.iter().map(|f| f.substitute(subs)).collect::<Result<Vec<_>, _>>()?;
        Parametrization::new(&self.ring, params, self.space.clone(), coords)
    }
}

use std::collections::HashMap;

use super::{verify_cremona, CremonaPair, MapError, RationalMap, Space};
use crate::polycore::{PolyError, RationalFunction, Ring, VarId};
use crate::varieties::Parametrization;

impl Space {
    /// Copy with every coordinate name's prefix `from` replaced by `to`.
    pub fn renamed(&self, ring: &Ring, from: &str, to: &str) -> Result<Space, PolyError> {
        let rename = |v: VarId| -> Result<VarId, PolyError> {
            let name = ring.name(v);
            let new = match name.strip_prefix(from) {
                Some(rest) => format!("{to}{rest}"),
                None => format!("{to}{name}"),
            };
            ring.var(&new)
        };
        Ok(Space {
            chart: rename(self.chart)?,
            coords: self.coords.iter().map(|&v| rename(v)).collect::<Result<_, _>>()?,
        })
    }
}

impl RationalMap {
    /// Coordinate `i` involves only source coordinates `0..=i` and is of
    /// degree exactly 1 in coordinate `i`, with a coefficient free of it.
    pub fn is_triangular(&self) -> bool {
        (0..self.coords().len()).all(|i| self.triangular_parts(i).is_ok())
    }

    /// `(a, b)` with coordinate `i` equal to `a·x_i + b`.
    fn triangular_parts(&self, i: usize) -> Result<(RationalFunction, RationalFunction), MapError> {
        let ring = self.ring();
        let coord_name = ring.name(self.target().coords[i]);
        let not_triangular = |reason: String| MapError::NotTriangular {
            coord: coord_name.clone(),
            reason,
        };
        if self.source().dim() != self.target().dim() {
            return Err(not_triangular("source and target dimensions differ".into()));
        }
        let c = &self.coords()[i];
        let xi = self.source().coords[i];
        for v in c.vars() {
            let j = self.source().position(v).expect("source variable");
            if j > i {
                return Err(not_triangular(format!("involves the later variable {}", ring.name(v))));
            }
        }
        if c.den().involves(xi) {
            return Err(not_triangular(format!("denominator involves {}", ring.name(xi))));
        }
        let parts = c.num().coefficients_in(xi);
        if parts.len() != 2 {
            return Err(not_triangular(format!(
                "has degree {} in {}, expected 1",
                parts.len() - 1,
                ring.name(xi)
            )));
        }
        let a = RationalFunction::new(parts[1].clone(), c.den().clone())?;
        let b = RationalFunction::new(parts[0].clone(), c.den().clone())?;
        Ok((a, b))
    }

    /// Inverse of a triangular map by forward substitution.
    pub fn invert_triangular(&self) -> Result<RationalMap, MapError> {
        let ring = self.ring();
        let mut solved: HashMap<VarId, RationalFunction> = HashMap::new();
        let mut coords = Vec::with_capacity(self.coords().len());
        for i in 0..self.coords().len() {
            let (a, b) = self.triangular_parts(i)?;
            let a = a.substitute(&solved)?;
            let b = b.substitute(&solved)?;
            let y = RationalFunction::var(ring, self.target().coords[i]);
            let x = y.try_sub(&b)?.try_div(&a)?;
            solved.insert(self.source().coords[i], x.clone());
            coords.push(x);
        }
        RationalMap::new(ring, self.target().clone(), self.source().clone(), coords)
    }
}

/// Coordinate functions of a normal-form parametrization rewritten in the
/// given variables (the first `n` of them stand for the parameters).
fn graph_functions(param: &Parametrization, vars: &[VarId]) -> Result<Vec<RationalFunction>, MapError> {
    let ring = param.ring();
    let b: HashMap<VarId, RationalFunction> = param
        .params()
        .iter()
        .zip(vars)
        .map(|(&t, &x)| (t, RationalFunction::var(ring, x)))
        .collect();
    Ok(param.coords().iter().map(|f| f.substitute(&b)).collect::<Result<Vec<_>, _>>()?)
}

fn require_normal_form(param: &Parametrization, target: &Space) -> Result<(), MapError> {
    if !param.is_normal_form() {
        return Err(MapError::NotNormalForm(
            "the first coordinates must equal the parameters".into(),
        ));
    }
    if target.dim() != param.space().dim() {
        return Err(MapError::SpaceMismatch("target dimension differs from the ambient space".into()));
    }
    Ok(())
}

/// The Cremona map `x_j ↦ x_j − f_j(x_1, …, x_n)` that sends the
/// parametrized variety to the coordinate subspace `{x_{n+1} = … = x_r = 0}`.
pub fn triangular_from_parametrization(param: &Parametrization, target: &Space) -> Result<CremonaPair, MapError> {
    require_normal_form(param, target)?;
    let ring = param.ring();
    let n = param.num_params();
    let source = param.space();
    let fx = graph_functions(param, &source.coords)?;
    let fy = graph_functions(param, &target.coords)?;
    let mut forward = Vec::new();
    let mut inverse = Vec::new();
    for j in 0..source.dim() {
        let x = RationalFunction::var(ring, source.coords[j]);
        let y = RationalFunction::var(ring, target.coords[j]);
        if j < n {
            forward.push(x);
            inverse.push(y);
        } else {
            forward.push(x.try_sub(&fx[j])?);
            inverse.push(y.try_add(&fy[j])?);
        }
    }
    let f = RationalMap::new(ring, source.clone(), target.clone(), forward)?;
    let g = RationalMap::new(ring, target.clone(), source.clone(), inverse)?;
    verify_cremona(&f, &g)
}

/// Variant with `φ_i = h_i·(x_i − f_i) + g_i` for the non-parameter
/// coordinates, where `h_i`, `g_i` depend only on earlier coordinates.
pub fn generalized_triangular(
    param: &Parametrization,
    target: &Space,
    h: &[RationalFunction],
    g: &[RationalFunction],
) -> Result<CremonaPair, MapError> {
    require_normal_form(param, target)?;
    let ring = param.ring();
    let n = param.num_params();
    let source = param.space();
    let r = source.dim();
    if h.len() != r - n || g.len() != r - n {
        return Err(MapError::SpaceMismatch(format!(
            "expected {} multipliers and shifts, got {} and {}",
            r - n,
            h.len(),
            g.len()
        )));
    }
    let fx = graph_functions(param, &source.coords)?;
    let mut forward = Vec::new();
    for j in 0..r {
        let x = RationalFunction::var(ring, source.coords[j]);
        if j < n {
            forward.push(x);
            continue;
        }
        let (hj, gj) = (&h[j - n], &g[j - n]);
        let name = ring.name(target.coords[j]);
        if hj.is_zero() {
            return Err(MapError::ZeroMultiplier(name));
        }
        for v in hj.vars().into_iter().chain(gj.vars()) {
            match source.position(v) {
                Some(k) if k < j => {}
                _ => {
                    return Err(MapError::NotTriangular {
                        coord: name,
                        reason: format!("multiplier or shift involves {}", ring.name(v)),
                    })
                }
            }
        }
        forward.push(hj.try_mul(&x.try_sub(&fx[j])?)?.try_add(gj)?);
    }
    let f = RationalMap::new(ring, source.clone(), target.clone(), forward)?;
    let inv = f.invert_triangular()?;
    verify_cremona(&f, &inv)
}

/// Whether the generalized triangular map with shifts `g` sends the
/// variety into the coordinate subspace, i.e. every `g_i` vanishes on it.
pub fn maps_to_linear_subspace(param: &Parametrization, g: &[RationalFunction]) -> Result<bool, MapError> {
    let b = param.bindings();
    for gi in g {
        if !gi.substitute(&b)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

use std::collections::{BTreeSet, HashMap};

use super::{CatalogEntry, Parametrization, VarietyError};
use crate::polycore::{exact_generic_rank, jacobian, Polynomial, RankConfig, RationalFunction, VarId};

/// `t_10` → `t3_10`: the block index goes before the first underscore.
fn block_name(name: &str, block: usize) -> String {
    match name.split_once('_') {
        Some((head, tail)) => format!("{head}{block}_{tail}"),
        None => format!("{name}{block}"),
    }
}

/// `t_10` → `s_10`: direction parameter paired with a point parameter.
fn direction_name(name: &str) -> String {
    match name.split_once('_') {
        Some((_, tail)) => format!("s_{tail}"),
        None => format!("s_{name}"),
    }
}

/// `∑_{j=0}^k s_j f(t⁽ʲ⁾)` with `s₀ = 1 − s₁ − ⋯ − s_k`. Parameters are the
/// blocks `t⁽⁰⁾, …, t⁽ᵏ⁾` followed by `s_1, …, s_k`; `k = 0` returns the
/// parametrization itself.
pub fn secant_parametrization(param: &Parametrization, k: usize) -> Result<Parametrization, VarietyError> {
    if !param.is_normal_form() {
        return Err(VarietyError::NotNormalForm);
    }
    if k == 0 {
        return Ok(param.clone());
    }
    let ring = param.ring();
    let mut params = Vec::new();
    let mut blocks = Vec::new();
    for j in 0..=k {
        let renaming = param
            .params()
            .iter()
            .map(|&t| Ok((t, ring.var(&block_name(&ring.name(t), j))?)))
            .collect::<Result<HashMap<VarId, VarId>, VarietyError>>()?;
        params.extend(param.params().iter().map(|t| renaming[t]));
        blocks.push(param.rename_params(&renaming)?);
    }
    let s = (1..=k).map(|j| ring.var(&format!("s_{j}"))).collect::<Result<Vec<_>, _>>()?;
    params.extend(&s);
    let mut s0 = RationalFunction::one(ring);
    for &sj in &s {
        s0 = s0.try_sub(&RationalFunction::var(ring, sj))?;
    }
    let weights: Vec<RationalFunction> = std::iter::once(s0).chain(s.iter().map(|&v| RationalFunction::var(ring, v))).collect();
    let mut coords = Vec::with_capacity(param.coords().len());
    for i in 0..param.coords().len() {
        let mut f = RationalFunction::zero(ring);
        for (w, block) in weights.iter().zip(&blocks) {
            f = f.try_add(&w.try_mul(&block.coords()[i])?)?;
        }
        coords.push(f);
    }
    Ok(Parametrization::new(ring, params, param.space().clone(), coords)?)
}

/// `f(t) + ∑_j s_j ∂f/∂t_j(t)`: parameters `t` followed by the direction
/// parameters `s` (named `s_…` after the corresponding `t`).
pub fn tangential_parametrization(param: &Parametrization) -> Result<Parametrization, VarietyError> {
    let ring = param.ring();
    let s = param
        .params()
        .iter()
        .map(|&t| ring.var(&direction_name(&ring.name(t))))
        .collect::<Result<Vec<_>, _>>()?;
    let mut coords = Vec::with_capacity(param.coords().len());
    for f in param.coords() {
        let mut g = f.clone();
        for (&t, &sj) in param.params().iter().zip(&s) {
            let d = f.partial_derivative(t)?;
            if !d.is_zero() {
                g = g.try_add(&RationalFunction::var(ring, sj).try_mul(&d)?)?;
            }
        }
        coords.push(g);
    }
    let mut params = param.params().to_vec();
    params.extend(s);
    Ok(Parametrization::new(ring, params, param.space().clone(), coords)?)
}

/// Whether `eq` vanishes identically on the parametrized variety.
pub fn membership_check(param: &Parametrization, eq: &Polynomial) -> Result<bool, VarietyError> {
    Ok(param.pull_back(eq)?.is_zero())
}

/// Dimension count behind [`secant_defect`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SecantDefect {
    pub k: usize,
    /// `min{r, n(k+1) + k}`.
    pub expected: usize,
    /// Generic rank of the Jacobian of the secant parametrization.
    pub dimension: usize,
    pub defect: usize,
}

/// Generic dimension of the image of a parametrization.
pub fn image_dimension(param: &Parametrization, config: &RankConfig) -> Result<usize, VarietyError> {
    let jac = jacobian(param.coords(), param.params())?;
    Ok(exact_generic_rank(&jac, config)?)
}

/// `min{r, n(k+1)+k} − dim Sec_k(X)`, with the dimension estimated as a
/// generic Jacobian rank.
pub fn secant_defect(entry: &CatalogEntry, k: usize, config: &RankConfig) -> Result<SecantDefect, VarietyError> {
    if k == 0 {
        return Err(VarietyError::OutOfRange("secant order must be at least 1".into()));
    }
    let sec = secant_parametrization(&entry.param, k)?;
    let dimension = image_dimension(&sec, config)?;
    let (r, n) = (entry.ambient_dim(), entry.dim());
    let expected = r.min(n * (k + 1) + k);
    Ok(SecantDefect {
        k,
        expected,
        dimension,
        defect: expected.saturating_sub(dimension),
    })
}

/// Whether the parametrized variety is a cone with vertex the coordinate
/// subspace spanned by `vertex_vars`: the parameters `T` that occur in no
/// other coordinate must move the vertex coordinates freely, i.e. their
/// Jacobian with respect to `T` has full rank `|vertex_vars|`.
pub fn cone_structure_check(param: &Parametrization, vertex_vars: &[VarId]) -> Result<bool, VarietyError> {
    cone_structure_check_with(param, vertex_vars, &RankConfig::default())
}

pub fn cone_structure_check_with(param: &Parametrization, vertex_vars: &[VarId], config: &RankConfig) -> Result<bool, VarietyError> {
    if vertex_vars.is_empty() {
        return Ok(true);
    }
    let space = param.space();
    let mut vertex = Vec::new();
    let mut used: BTreeSet<VarId> = BTreeSet::new();
    for (&v, f) in space.coords.iter().zip(param.coords()) {
        if vertex_vars.contains(&v) {
            vertex.push(f.clone());
        } else {
            used.extend(f.vars());
        }
    }
    if vertex.len() != vertex_vars.len() {
        return Err(VarietyError::OutOfRange("vertex variables must be coordinates of the parametrization".into()));
    }
    let free: Vec<VarId> = param.params().iter().copied().filter(|t| !used.contains(t)).collect();
    if free.len() < vertex.len() {
        return Ok(false);
    }
    let jac = jacobian(&vertex, &free)?;
    Ok(exact_generic_rank(&jac, config)? == vertex.len())
}

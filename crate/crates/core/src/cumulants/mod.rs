//! Cumulant Cremona transformations on `ℙ^{2ⁿ−1}` and their relatives.

mod coords;
mod secant;

use thiserror::Error;

use crate::maps::{verify_cremona, CremonaPair, MapError, RationalMap};
use crate::polycore::{q, PolyError, Polynomial, RationalFunction, Ring};
use crate::posets::{all_partitions, subset_elements, PartitionPoset, PosetError, Subset};
use crate::varieties::Parametrization;

pub use coords::{subset_name, tuple_name, MultiIndexCoordinates, SubsetCoordinates};
pub use secant::{centred_interval_cumulants, psi1_explicit, secant_cumulant_pipeline, secant_closed_form, SecantCumulants};

/// Largest `n` for maps on `ℙ^{2ⁿ−1}`.
pub const MAX_CUMULANT_N: u32 = 8;
/// Largest number of coordinates of a multi-Segre cumulant map.
pub const MAX_MULTI_COORDS: usize = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CumulantError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("n = {0} is outside 1..={MAX_CUMULANT_N}")]
    OutOfRange(u32),
    #[error("invalid shape: {0}")]
    Shape(String),
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
}

fn check_n(n: u32) -> Result<(), CumulantError> {
    if n == 0 || n > MAX_CUMULANT_N {
        return Err(CumulantError::OutOfRange(n));
    }
    Ok(())
}

/// `∏_{B∈π} v_B`, with the chart variable standing for `1`.
fn block_product<F>(ring: &Ring, blocks: &[Subset], mut var: F) -> Polynomial
where
    F: FnMut(Subset) -> Polynomial,
{
    blocks.iter().fold(Polynomial::one(ring), |acc, &b| &acc * &var(b))
}

fn factorial(k: usize) -> i64 {
    (1..=k as i64).product()
}

fn cumulant_sign(blocks: usize) -> i64 {
    let s = if blocks % 2 == 1 { 1 } else { -1 };
    s * factorial(blocks - 1)
}

/// The binary cumulant change of coordinates `x ↦ y` on `ℙ^{2ⁿ−1}` with
/// its inverse `x_I = ∑_{π∈Π(I)} ∏_{B∈π} y_B`.
pub fn binary_cumulant_map(ring: &Ring, n: u32) -> Result<CremonaPair, CumulantError> {
    check_n(n)?;
    let x = SubsetCoordinates::new(ring, n, "x")?;
    let y = SubsetCoordinates::new(ring, n, "y")?;
    let mut forward = Vec::new();
    let mut inverse = Vec::new();
    for &set in x.order() {
        let mut f = Polynomial::zero(ring);
        let mut g = Polynomial::zero(ring);
        for pi in all_partitions(set)? {
            let c = q(cumulant_sign(pi.num_blocks()));
            f = &f + &block_product(ring, pi.blocks(), |b| x.poly(b)).scale(&c);
            g = &g + &block_product(ring, pi.blocks(), |b| y.poly(b));
        }
        forward.push(RationalFunction::from_poly(f));
        inverse.push(RationalFunction::from_poly(g));
    }
    let f = RationalMap::new(ring, x.space(), y.space(), forward)?;
    let g = RationalMap::new(ring, y.space(), x.space(), inverse)?;
    Ok(verify_cremona(&f, &g)?)
}

/// Forward map `y_I = ∑_{π∈𝓛(I)} μ(π, 1̂) ∏_{B∈π} x_B` in the chart
/// `x_∅ = 1`.
pub fn l_cumulant_forward(
    ring: &Ring,
    poset: &PartitionPoset,
    x: &SubsetCoordinates,
    y: &SubsetCoordinates,
) -> Result<RationalMap, CumulantError> {
    if poset.ground() != crate::posets::full_set(x.n()) || x.n() != y.n() {
        return Err(CumulantError::Shape("poset ground set and coordinates disagree".into()));
    }
    let mut coords = Vec::new();
    for &set in x.order() {
        let restricted = poset.restrict(set)?;
        let mut f = Polynomial::zero(ring);
        for pi in restricted.elements() {
            let mu = restricted.mobius_to_top(pi)?;
            if mu != 0 {
                f = &f + &block_product(ring, pi.blocks(), |b| x.poly(b)).scale(&q(mu));
            }
        }
        coords.push(RationalFunction::from_poly(f));
    }
    Ok(RationalMap::new(ring, x.space(), y.space(), coords)?)
}

/// Inverse `x_I = ∑_{π∈𝓛(I)} y_π` with each `y_π`, `π < 1̂`, expanded as
/// `∑_{σ≤π} μ(σ, π) ∏_{B∈σ} x_B(y)` over strictly smaller blocks.
pub fn l_cumulant_inverse(
    ring: &Ring,
    poset: &PartitionPoset,
    x: &SubsetCoordinates,
    y: &SubsetCoordinates,
) -> Result<RationalMap, CumulantError> {
    let mut solved: Vec<Option<Polynomial>> = vec![None; 1 << x.n()];
    solved[0] = Some(Polynomial::one(ring));
    let mut coords = Vec::new();
    for &set in x.order() {
        let restricted = poset.restrict(set)?;
        let p = restricted.poset();
        let top = p.top().ok_or(PosetError::MissingBounds)?;
        let mut xi = y.poly(set);
        for pi in 0..p.len() {
            if pi == top {
                continue;
            }
            for sigma in 0..=pi {
                let mu = p.mobius(sigma, pi);
                if mu == 0 {
                    continue;
                }
                let prod = block_product(ring, p.element(sigma).blocks(), |b| {
                    solved[b as usize].clone().expect("smaller blocks come first")
                });
                xi = &xi + &prod.scale(&q(mu));
            }
        }
        solved[set as usize] = Some(xi.clone());
        coords.push(RationalFunction::from_poly(xi));
    }
    Ok(RationalMap::new(ring, y.space(), x.space(), coords)?)
}

/// The 𝓛-cumulant Cremona `x ↦ y` for a partition poset on `[n]`, verified.
pub fn l_cumulant_map(ring: &Ring, poset: &PartitionPoset) -> Result<CremonaPair, CumulantError> {
    let n = 32 - poset.ground().leading_zeros();
    check_n(n)?;
    let x = SubsetCoordinates::new(ring, n, "x")?;
    let y = SubsetCoordinates::new(ring, n, "y")?;
    l_cumulant_map_between(ring, poset, &x, &y)
}

/// As [`l_cumulant_map`] with explicit coordinate sets.
pub fn l_cumulant_map_between(
    ring: &Ring,
    poset: &PartitionPoset,
    x: &SubsetCoordinates,
    y: &SubsetCoordinates,
) -> Result<CremonaPair, CumulantError> {
    let f = l_cumulant_forward(ring, poset, x, y)?;
    let g = l_cumulant_inverse(ring, poset, x, y)?;
    Ok(verify_cremona(&f, &g)?)
}

/// Cumulants for `Seg(r₁, …, r_k)`:
/// `y_i = ∑_{π∈Π(S(i))} (−1)^{|π|−1}(|π|−1)! ∏_{B∈π} x_{i(B)}`.
pub fn multi_segre_cumulant_map(ring: &Ring, shape: &[u32]) -> Result<CremonaPair, CumulantError> {
    if shape.len() < 2 {
        return Err(CumulantError::Shape("need at least two factors".into()));
    }
    let x = MultiIndexCoordinates::new(ring, shape, "x")?;
    let y = MultiIndexCoordinates::new(ring, shape, "y")?;
    let mut coords = Vec::new();
    for tuple in x.order() {
        let support = MultiIndexCoordinates::support(tuple);
        let mut f = Polynomial::zero(ring);
        for pi in all_partitions(support)? {
            let c = q(cumulant_sign(pi.num_blocks()));
            let prod = block_product(ring, pi.blocks(), |b| x.poly(&MultiIndexCoordinates::truncate(tuple, b)));
            f = &f + &prod.scale(&c);
        }
        coords.push(RationalFunction::from_poly(f));
    }
    let f = RationalMap::new(ring, x.space(), y.space(), coords)?;
    let g = f.invert_triangular()?;
    Ok(verify_cremona(&f, &g)?)
}

/// Affine Segre embedding of `(ℙ¹)ⁿ`: `x_I = ∏_{i∈I} t_i`.
pub fn segre_parametrization(ring: &Ring, x: &SubsetCoordinates, param_prefix: &str) -> Result<Parametrization, CumulantError> {
    let params = (1..=x.n())
        .map(|i| ring.var(&format!("{param_prefix}_{i}")))
        .collect::<Result<Vec<_>, _>>()?;
    let coords = x
        .order()
        .iter()
        .map(|&set| {
            let p = subset_elements(set).fold(Polynomial::one(ring), |acc, i| {
                &acc * &Polynomial::var(ring, params[i as usize - 1])
            });
            RationalFunction::from_poly(p)
        })
        .collect();
    Ok(Parametrization::new(ring, params, x.space(), coords)?)
}

/// Affine Segre embedding of `ℙ^{r₁} × ⋯ × ℙ^{r_k}`:
/// `x_i = ∏_{j∈S(i)} t_{j,i_j}`.
pub fn multi_segre_parametrization(ring: &Ring, x: &MultiIndexCoordinates, param_prefix: &str) -> Result<Parametrization, CumulantError> {
    let mut params = Vec::new();
    let mut coords = Vec::new();
    for tuple in x.order() {
        let mut p = Polynomial::one(ring);
        for (j, &i) in tuple.iter().enumerate() {
            if i > 0 {
                let t = ring.var(&format!("{param_prefix}_{}{}", j + 1, i))?;
                p = &p * &Polynomial::var(ring, t);
            }
        }
        if MultiIndexCoordinates::support(tuple).count_ones() == 1 {
            params.push(p.as_var().expect("single parameter"));
        }
        coords.push(RationalFunction::from_poly(p));
    }
    Ok(Parametrization::new(ring, params, x.space(), coords)?)
}

/// Substitutes the Segre embedding of `(ℙ¹)ⁿ` into the forward map and
/// checks that every coordinate with `|I| ≥ 2` vanishes.
pub fn linearization_check(ring: &Ring, map: &CremonaPair) -> Result<bool, CumulantError> {
    let dim = map.forward.source().dim() + 1;
    if !dim.is_power_of_two() {
        return Err(CumulantError::Shape(format!("{dim} coordinates is not a power of two")));
    }
    let n = dim.trailing_zeros();
    check_n(n)?;
    let src = map.forward.source();
    let x = SubsetCoordinates::from_space(ring, n, src)?;
    let param = segre_parametrization(ring, &x, "t")?;
    let image = map.forward.apply_to_parametrization(&param)?;
    Ok(x.order().iter().zip(image.coords()).all(|(&set, f)| set.count_ones() < 2 || f.is_zero()))
}

/// Same check for a multi-Segre cumulant map: coordinates with support of
/// size at least two vanish on `Seg(r₁, …, r_k)`.
pub fn multi_linearization_check(ring: &Ring, map: &CremonaPair, shape: &[u32]) -> Result<bool, CumulantError> {
    let x = MultiIndexCoordinates::new(ring, shape, "x")?;
    if x.space() != *map.forward.source() {
        return Err(CumulantError::Shape("map source is not the multi-index space of this shape".into()));
    }
    let param = multi_segre_parametrization(ring, &x, "t")?;
    let image = map.forward.apply_to_parametrization(&param)?;
    Ok(x.order()
        .iter()
        .zip(image.coords())
        .all(|(t, f)| MultiIndexCoordinates::support(t).count_ones() < 2 || f.is_zero()))
}

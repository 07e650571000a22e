use std::collections::HashMap;

use super::matrix::{delete_row_col, determinant, PolyMatrix};
use super::{Parametrization, VarietyError};
use crate::maps::{verify_cremona, CremonaPair, RationalMap, Space};
use crate::polycore::{q, Monomial, Polynomial, RationalFunction, Ring, VarId};

fn names(prefix: &str) -> Vec<String> {
    let mut out = Vec::new();
    for i in 1..=3 {
        for j in 1..=3 {
            out.push(format!("{prefix}_{i}{j}"));
        }
    }
    out
}

fn space(ring: &Ring, a: &str, b: &str) -> Result<Space, VarietyError> {
    let mut coords = names(a);
    coords.extend(names(b));
    coords.push(format!("{b}_0"));
    Ok(Space::named(ring, &format!("{a}_0"), &coords)?)
}

/// `[x₀, X, Y, y₀]`: chart `x_0`, then `x_11..x_33`, `y_11..y_33`, `y_0`.
pub fn g36_source(ring: &Ring) -> Result<Space, VarietyError> {
    space(ring, "x", "y")
}

/// `[z₀, Z, W, w₀]`, laid out like [`g36_source`].
pub fn g36_target(ring: &Ring) -> Result<Space, VarietyError> {
    space(ring, "z", "w")
}

/// 3×3 matrix of the variables `{prefix}_ij`.
pub fn var_matrix(ring: &Ring, prefix: &str) -> Result<PolyMatrix, VarietyError> {
    (1..=3)
        .map(|i| (1..=3).map(|j| Ok(Polynomial::var(ring, ring.var(&format!("{prefix}_{i}{j}"))?))).collect())
        .collect()
}

/// `M_ij`: the minor of `m` deleting row `i` and column `j` (0-based).
fn minor(ring: &Ring, m: &PolyMatrix, i: usize, j: usize) -> Result<Polynomial, VarietyError> {
    Ok(determinant(ring, &delete_row_col(m, i, j))?)
}

/// `(I₃ | A) ↦ (1, A, ∧²A, det A)`, with `∧²A` the matrix of 2×2 minors
/// `A_ij` (row `i`, column `j` deleted).
pub fn g36_parametrization(ring: &Ring) -> Result<Parametrization, VarietyError> {
    let a = var_matrix(ring, "a")?;
    let params: Vec<VarId> = a.iter().flatten().map(|p| p.as_var().expect("variable")).collect();
    let mut coords: Vec<RationalFunction> = a.iter().flatten().cloned().map(RationalFunction::from_poly).collect();
    for i in 0..3 {
        for j in 0..3 {
            coords.push(RationalFunction::from_poly(minor(ring, &a, i, j)?));
        }
    }
    coords.push(RationalFunction::from_poly(determinant(ring, &a)?));
    Ok(Parametrization::new(ring, params, g36_source(ring)?, coords)?)
}

/// `∑_i (−1)^{i+1} m_{1i} n_{1i}`: first-row expansion with the entries
/// of `m` against `n`.
fn first_row_pairing(ring: &Ring, m: &PolyMatrix, n: &[Polynomial]) -> Result<Polynomial, VarietyError> {
    let mut s = Polynomial::zero(ring);
    for i in 0..3 {
        let t = m[0][i].try_mul(&n[i])?;
        s = if i % 2 == 0 { s.try_add(&t)? } else { s.try_sub(&t)? };
    }
    Ok(s)
}

/// The quadro-cubic and cubo-cubic Cremona maps of `ℙ¹⁹` sending `G(3,6)`
/// to `{W = 0, w₀ = 0}`, in that order.
pub fn g36_maps(ring: &Ring) -> Result<(CremonaPair, CremonaPair), VarietyError> {
    let src = g36_source(ring)?;
    let tgt = g36_target(ring)?;
    let x = var_matrix(ring, "x")?;
    let y = var_matrix(ring, "y")?;
    let z = var_matrix(ring, "z")?;
    let w = var_matrix(ring, "w")?;
    let y0 = Polynomial::var(ring, ring.var("y_0")?);
    let w0 = Polynomial::var(ring, ring.var("w_0")?);

    // shared part: Z = X, W = Y − ∧²X and its inverse Y = W + ∧²Z
    let mut fwd: Vec<Polynomial> = x.iter().flatten().cloned().collect();
    let mut inv: Vec<Polynomial> = z.iter().flatten().cloned().collect();
    let mut y_of_w = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            fwd.push(y[i][j].try_sub(&minor(ring, &x, i, j)?)?);
            let yij = w[i][j].try_add(&minor(ring, &z, i, j)?)?;
            inv.push(yij.clone());
            y_of_w.push(yij);
        }
    }
    let (fwd_c, inv_c) = (fwd.clone(), inv.clone());

    // quadro-cubic: w₀ = y₀ − ∑(−1)^{i+1} x_{1i} y_{1i}
    fwd.push(y0.try_sub(&first_row_pairing(ring, &x, &y[0])?)?);
    inv.push(w0.try_add(&first_row_pairing(ring, &z, &y_of_w[..3])?)?);
    // cubo-cubic: w₀ = y₀ − det X
    let mut fwd_c = fwd_c;
    let mut inv_c = inv_c;
    fwd_c.push(y0.try_sub(&determinant(ring, &x)?)?);
    inv_c.push(w0.try_add(&determinant(ring, &z)?)?);

    let pair = |f: Vec<Polynomial>, g: Vec<Polynomial>| -> Result<CremonaPair, VarietyError> {
        let f = RationalMap::new(ring, src.clone(), tgt.clone(), f.into_iter().map(RationalFunction::from_poly).collect())?;
        let g = RationalMap::new(ring, tgt.clone(), src.clone(), g.into_iter().map(RationalFunction::from_poly).collect())?;
        Ok(verify_cremona(&f, &g)?)
    };
    Ok((pair(fwd, inv)?, pair(fwd_c, inv_c)?))
}

/// `(x₀y₀ − tr(XY))² + 4x₀ det Y + 4y₀ det X − 4∑_{i,j} det(X_ij) det(Y_ji)`
/// on `[x₀, X, Y, y₀]`, written with `y`, `x` as given; `X_ij` deletes row
/// `i` and column `j`.
fn quartic_of(ring: &Ring, x0: &Polynomial, x: &PolyMatrix, y: &PolyMatrix, y0: &Polynomial) -> Result<Polynomial, VarietyError> {
    let mut tr = Polynomial::zero(ring);
    for i in 0..3 {
        for j in 0..3 {
            tr = tr.try_add(&x[i][j].try_mul(&y[j][i])?)?;
        }
    }
    let lead = x0.try_mul(y0)?.try_sub(&tr)?.try_pow(2)?;
    let dets = x0
        .try_mul(&determinant(ring, y)?)?
        .try_add(&y0.try_mul(&determinant(ring, x)?)?)?
        .scale(&q(4));
    let mut cross = Polynomial::zero(ring);
    for i in 0..3 {
        for j in 0..3 {
            cross = cross.try_add(&minor(ring, x, i, j)?.try_mul(&minor(ring, y, j, i)?)?)?;
        }
    }
    Ok(lead.try_add(&dets)?.try_sub(&cross.scale(&q(4)))?)
}

/// The quartic `P` exactly as displayed, with `Y` read as the matrix of
/// unsigned minors used by the parametrization.
pub fn g36_quartic(ring: &Ring) -> Result<Polynomial, VarietyError> {
    let x0 = Polynomial::var(ring, ring.var("x_0")?);
    let y0 = Polynomial::var(ring, ring.var("y_0")?);
    quartic_of(ring, &x0, &var_matrix(ring, "x")?, &var_matrix(ring, "y")?, &y0)
}

/// `P` with `Y` replaced by `σ(Y)_ij = (−1)^{i+j} Y_ji`, the adjugate-style
/// reading under which it vanishes on the tangential variety of the
/// parametrization above.
pub fn g36_quartic_signed(ring: &Ring) -> Result<Polynomial, VarietyError> {
    let x0 = Polynomial::var(ring, ring.var("x_0")?);
    let y0 = Polynomial::var(ring, ring.var("y_0")?);
    let y = var_matrix(ring, "y")?;
    let sy: PolyMatrix = (0..3)
        .map(|i| (0..3).map(|j| if (i + j) % 2 == 0 { y[j][i].clone() } else { -&y[j][i] }).collect())
        .collect();
    quartic_of(ring, &x0, &var_matrix(ring, "x")?, &sy, &y0)
}

/// A transformed quartic with its summary data.
#[derive(Clone, Debug)]
pub struct SexticImage {
    pub polynomial: Polynomial,
    pub degree: u32,
    pub terms: usize,
    /// The two largest terms under graded lex.
    pub leading_grlex: Polynomial,
    /// The two largest terms under graded reverse lex.
    pub leading_grevlex: Polynomial,
}

/// The two largest terms of `p` under `cmp`.
pub fn leading_terms(
    p: &Polynomial,
    count: usize,
    cmp: impl Fn(&Monomial, &Monomial) -> std::cmp::Ordering,
) -> Polynomial {
    Polynomial::from_terms(p.ring(), p.sorted_terms_by(cmp).into_iter().take(count))
}

/// Pulls `quartic` back along `inverse` (chart `x₀ = 1`) and clears
/// denominators.
pub fn transform_quartic(ring: &Ring, quartic: &Polynomial, inverse: &RationalMap) -> Result<SexticImage, VarietyError> {
    let mut b: HashMap<VarId, RationalFunction> = inverse.bindings();
    b.insert(inverse.target().chart, RationalFunction::one(ring));
    let (num, _) = quartic.substitute(&b)?.into_parts();
    Ok(SexticImage {
        degree: num.total_degree(),
        terms: num.num_terms(),
        leading_grlex: leading_terms(&num, 2, Monomial::grlex_cmp),
        leading_grevlex: leading_terms(&num, 2, Monomial::grevlex_cmp),
        polynomial: num,
    })
}

/// Images of the quartic under the inverses of the quadro-cubic and the
/// cubo-cubic map, in that order.
pub fn g36_tangential_images(ring: &Ring) -> Result<(SexticImage, SexticImage), VarietyError> {
    let (quadro, cubo) = g36_maps(ring)?;
    let p = g36_quartic(ring)?;
    Ok((
        transform_quartic(ring, &p, &quadro.inverse)?,
        transform_quartic(ring, &p, &cubo.inverse)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse_polynomial;
    use crate::varieties::tangential_parametrization;

    #[test]
    fn both_maps_verify_with_the_expected_degrees() {
        let ring = Ring::new();
        let (quadro, cubo) = g36_maps(&ring).unwrap();
        assert!(quadro.verified && cubo.verified);
        assert_eq!((quadro.delta, quadro.delta_prime), (2, 3));
        assert_eq!((cubo.delta, cubo.delta_prime), (3, 3));
        assert!(quadro.degree_law_holds() && cubo.degree_law_holds());
        assert!(cubo.forward.then(&cubo.inverse).unwrap().is_identity());
    }

    #[test]
    fn grassmannian_maps_to_w_zero() {
        let ring = Ring::new();
        let param = g36_parametrization(&ring).unwrap();
        let (quadro, cubo) = g36_maps(&ring).unwrap();
        for pair in [quadro, cubo] {
            let image = pair.forward.apply_to_parametrization(&param).unwrap();
            let coords = image.coords();
            assert!(coords[9..].iter().all(|f| f.is_zero()));
            assert!(coords[..9].iter().all(|f| !f.is_zero()));
        }
    }

    #[test]
    fn signed_quartic_vanishes_on_the_tangential_variety() {
        let ring = Ring::new();
        let tan = tangential_parametrization(&g36_parametrization(&ring).unwrap()).unwrap();
        let signed = g36_quartic_signed(&ring).unwrap();
        assert!(tan.pull_back(&signed).unwrap().is_zero());
        // the unsigned reading does not
        assert!(!tan.pull_back(&g36_quartic(&ring).unwrap()).unwrap().is_zero());
        // nor even on the Grassmannian, which the signed one contains
        let param = g36_parametrization(&ring).unwrap();
        assert!(!param.pull_back(&g36_quartic(&ring).unwrap()).unwrap().is_zero());
        assert!(param.pull_back(&signed).unwrap().is_zero());
    }

    #[test]
    fn sextic_images() {
        let ring = Ring::new();
        // fix the variable order before anything else is declared
        g36_target(&ring).unwrap();
        let (quadro, cubo) = g36_tangential_images(&ring).unwrap();
        let lead = parse_polynomial(&ring, "z_13^4*z_22^2 - 2*z_12*z_13^3*z_22*z_23").unwrap();
        for img in [&quadro, &cubo] {
            assert_eq!(img.degree, 6);
            assert!((400..=800).contains(&img.terms), "{}", img.terms);
            assert_eq!(img.leading_grevlex, lead);
        }
        assert_eq!((quadro.terms, cubo.terms), (448, 435));
    }
}

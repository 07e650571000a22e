use super::{HomogeneousMap, MapError, Space};
use crate::polycore::{gcd, Polynomial, Ring, VarId};

/// Hypersurface `f_{d−1}·x_r + f_d = 0` of degree `d` with vertex
/// `[0, …, 0, 1]`, where `f_{d−1}`, `f_d` only involve `x_0, …, x_{r−1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Monoid {
    ring: Ring,
    vars: Vec<VarId>,
    f_dm1: Polynomial,
    f_d: Polynomial,
    degree: u32,
    irreducible: bool,
}

fn check_form(ring: &Ring, p: &Polynomial, degree: u32, allowed: &[VarId], what: &str) -> Result<(), MapError> {
    if !p.is_zero() && (!p.is_homogeneous() || p.total_degree() != degree) {
        return Err(MapError::Degree(format!("{what} must be homogeneous of degree {degree}, got {p}")));
    }
    if let Some(v) = p.vars().into_iter().find(|v| !allowed.contains(v)) {
        return Err(MapError::SpaceMismatch(format!("{what} involves {}", ring.name(v))));
    }
    Ok(())
}

impl Monoid {
    /// `vars` are all homogeneous coordinates; the last one is the vertex
    /// direction.
    pub fn new(ring: &Ring, vars: Vec<VarId>, f_dm1: Polynomial, f_d: Polynomial) -> Result<Self, MapError> {
        if vars.len() < 2 {
            return Err(MapError::SpaceMismatch("a monoid needs at least two coordinates".into()));
        }
        if f_dm1.is_zero() {
            return Err(MapError::Degree("f_{d-1} must be nonzero".into()));
        }
        let d = f_dm1.total_degree() + 1;
        let base = &vars[..vars.len() - 1];
        check_form(ring, &f_dm1, d - 1, base, "f_{d-1}")?;
        check_form(ring, &f_d, d, base, "f_d")?;
        let irreducible = gcd(&f_dm1, &f_d)?.is_constant();
        Ok(Monoid {
            ring: ring.clone(),
            vars,
            f_dm1,
            f_d,
            degree: d,
            irreducible,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn vars(&self) -> &[VarId] {
        &self.vars
    }

    pub fn vertex_var(&self) -> VarId {
        *self.vars.last().unwrap()
    }

    pub fn f_dm1(&self) -> &Polynomial {
        &self.f_dm1
    }

    pub fn f_d(&self) -> &Polynomial {
        &self.f_d
    }

    /// Whether `f_{d−1}` and `f_d` are coprime.
    pub fn is_irreducible(&self) -> bool {
        self.irreducible
    }

    pub fn equation(&self) -> Polynomial {
        &self.f_dm1 * &Polynomial::var(&self.ring, self.vertex_var()) + &self.f_d
    }

    fn ambient(&self) -> Space {
        Space::new(self.vars[0], self.vars[1..].to_vec())
    }

    fn hyperplane(&self) -> Space {
        Space::new(self.vars[0], self.vars[1..self.vars.len() - 1].to_vec())
    }
}

/// Projection from the vertex onto `{x_r = 0}` and its inverse
/// `[f_{d−1}x_0, …, f_{d−1}x_{r−1}, −f_d]`.
pub fn stereographic_projection(monoid: &Monoid) -> Result<(HomogeneousMap, HomogeneousMap), MapError> {
    let ring = &monoid.ring;
    let base = &monoid.vars[..monoid.vars.len() - 1];
    let pi = HomogeneousMap::new(
        ring,
        monoid.ambient(),
        monoid.hyperplane(),
        base.iter().map(|&v| Polynomial::var(ring, v)).collect(),
    )?;
    let mut coords: Vec<Polynomial> = base
        .iter()
        .map(|&v| &monoid.f_dm1 * &Polynomial::var(ring, v))
        .collect();
    coords.push(-&monoid.f_d);
    let pi_inv = HomogeneousMap::new(ring, monoid.hyperplane(), monoid.ambient(), coords)?;
    Ok((pi, pi_inv))
}

/// Extends `ω: ℙ^r ⇢ ℙ^r` to `Ω = [h·F_0, …, h·F_r, f]` on `ℙ^{r+1}` and
/// checks `π∘Ω = ω∘π` for the projection `π` from the vertex.
pub fn monoidal_extension(
    omega: &HomogeneousMap,
    h: &Polynomial,
    monoid: &Monoid,
    new_target_var: VarId,
) -> Result<HomogeneousMap, MapError> {
    let ring = omega.ring();
    let src = omega.source().all();
    if monoid.vars.len() != src.len() + 1 || monoid.vars[..src.len()] != src[..] {
        return Err(MapError::SpaceMismatch(
            "monoid coordinates must be the map's source coordinates plus one".into(),
        ));
    }
    let d = monoid.degree;
    let delta = omega.degree();
    if d < delta {
        return Err(MapError::Degree(format!("monoid degree {d} is below the map degree {delta}")));
    }
    if h.is_zero() {
        return Err(MapError::Degree("h must be nonzero".into()));
    }
    check_form(ring, h, d - delta, &src, "h")?;

    let mut coords: Vec<Polynomial> = omega.coords().iter().map(|f| h * f).collect();
    coords.push(monoid.equation());
    let source = monoid.ambient();
    let mut target_coords = omega.target().coords.clone();
    target_coords.push(new_target_var);
    let target = Space::new(omega.target().chart, target_coords);
    let big = HomogeneousMap::new(ring, source.clone(), target, coords)?;

    let projected = HomogeneousMap::new(ring, source.clone(), omega.target().clone(), big.coords()[..src.len()].to_vec())?;
    let lifted = HomogeneousMap::new(ring, source, omega.target().clone(), omega.coords().to_vec())?;
    if !projected.projectively_equal(&lifted)? {
        return Err(MapError::VerificationFailed("projection identity".into()));
    }
    Ok(big)
}

/// The map `π_{p₂} ∘ π_{p₁}⁻¹` between the hyperplanes `{x_r = 0}` and
/// `{x_{r−1} = 0}` for the hypersurface
/// `f_d + x_{r−1}g_{d−1} + x_r h_{d−1} + x_r x_{r−1} f_{d−2} = 0`
/// with vertices at the last two coordinate points, together with the
/// map in the other direction.
pub fn double_projection(
    ring: &Ring,
    vars: &[VarId],
    f_d: &Polynomial,
    g_dm1: &Polynomial,
    h_dm1: &Polynomial,
    f_dm2: &Polynomial,
) -> Result<(HomogeneousMap, HomogeneousMap), MapError> {
    let r = vars.len() - 1;
    if r < 2 {
        return Err(MapError::SpaceMismatch("need at least three coordinates".into()));
    }
    let d = f_d.total_degree().max(g_dm1.total_degree() + 1).max(h_dm1.total_degree() + 1).max(f_dm2.total_degree() + 2);
    if d < 2 {
        return Err(MapError::Degree("the hypersurface must have degree at least 2".into()));
    }
    let base = &vars[..r - 1];
    check_form(ring, f_d, d, base, "f_d")?;
    check_form(ring, g_dm1, d - 1, base, "g_{d-1}")?;
    check_form(ring, h_dm1, d - 1, base, "h_{d-1}")?;
    check_form(ring, f_dm2, d - 2, base, "f_{d-2}")?;

    let build = |keep: VarId, lose: VarId, mult: &Polynomial, other: &Polynomial| {
        let xk = Polynomial::var(ring, keep);
        let factor = f_dm2 * &xk + mult;
        let mut coords: Vec<Polynomial> = base.iter().map(|&v| &factor * &Polynomial::var(ring, v)).collect();
        coords.push(-f_d - &xk * other);
        let mut src = base[1..].to_vec();
        src.push(keep);
        let mut tgt = base[1..].to_vec();
        tgt.push(lose);
        HomogeneousMap::new(ring, Space::new(vars[0], src), Space::new(vars[0], tgt), coords)
    };
    let forward = build(vars[r - 1], vars[r], h_dm1, g_dm1)?;
    let backward = build(vars[r], vars[r - 1], g_dm1, h_dm1)?;
    Ok((forward, backward))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::{verify_cremona_homogeneous, RationalMap};
    use crate::polycore::parse_polynomial;

    fn p(ring: &Ring, s: &str) -> Polynomial {
        parse_polynomial(ring, s).unwrap()
    }

    #[test]
    fn conic_projection() {
        let ring = Ring::new();
        let x = ring.vars(&["x_0", "x_1", "x_2"]).unwrap();
        let conic = Monoid::new(&ring, x.clone(), p(&ring, "x_0"), p(&ring, "-x_1^2")).unwrap();
        assert!(conic.is_irreducible());
        assert_eq!(conic.equation(), p(&ring, "x_0*x_2 - x_1^2"));
        let (pi, pi_inv) = stereographic_projection(&conic).unwrap();
        assert_eq!(pi_inv.coords(), &[p(&ring, "x_0^2"), p(&ring, "x_0*x_1"), p(&ring, "x_1^2")]);
        let on_conic = conic.equation().substitute_polys(&pi_inv.bindings()).unwrap();
        assert!(on_conic.is_zero());
        assert!(pi_inv.then(&pi).unwrap().is_projective_identity().unwrap());
    }

    #[test]
    fn extension_of_the_identity() {
        let ring = Ring::new();
        let x = ring.vars(&["x_0", "x_1", "x_2"]).unwrap();
        let y = ring.vars(&["y_0", "y_1", "y_2"]).unwrap();
        let omega = RationalMap::identity(
            &ring,
            Space::new(x[0], vec![x[1]]),
            Space::new(y[0], vec![y[1]]),
        )
        .unwrap()
        .homogenize()
        .unwrap();
        let monoid = Monoid::new(&ring, x.clone(), p(&ring, "x_0"), p(&ring, "x_1^2")).unwrap();
        let big = monoidal_extension(&omega, &p(&ring, "x_0"), &monoid, y[2]).unwrap();
        assert_eq!(big.coords()[2], p(&ring, "x_0*x_2 + x_1^2"));
        let chart = big.dehomogenize().unwrap();
        assert!(chart.is_triangular());
        let inv = chart.invert_triangular().unwrap();
        assert!(chart.then(&inv).unwrap().is_identity());

        // h constant and d = δ keeps ω's coordinates.
        let linear = Monoid::new(&ring, x.clone(), p(&ring, "1"), p(&ring, "x_1")).unwrap();
        let big = monoidal_extension(&omega, &p(&ring, "1"), &linear, y[2]).unwrap();
        assert_eq!(&big.coords()[..2], omega.coords());
        assert!(monoidal_extension(&omega, &p(&ring, "x_1^2"), &monoid, y[2]).is_err());
    }

    #[test]
    fn quadric_double_projection_is_birational() {
        let ring = Ring::new();
        let x = ring.vars(&["x_0", "x_1", "x_2", "x_3"]).unwrap();
        let zero = Polynomial::zero(&ring);
        let (f, g) = double_projection(&ring, &x, &p(&ring, "-x_0^2"), &zero, &zero, &p(&ring, "1")).unwrap();
        assert_eq!(f.coords(), &[p(&ring, "x_0*x_2"), p(&ring, "x_1*x_2"), p(&ring, "x_0^2")]);
        let phi = verify_cremona_homogeneous(&f, &g).unwrap();
        assert_eq!(phi.total_degree(), 3);
    }
}

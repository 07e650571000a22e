use super::matrix::{pfaffian, PolyMatrix};
use super::{grass2, VarietyError};
use crate::maps::{verify_cremona, CremonaPair, RationalMap, Space};
use crate::polycore::{Polynomial, RationalFunction, Ring};

/// Pfaffian of the antisymmetric `n×n` matrix `({prefix}_ij)`.
pub fn grass_pfaffian(ring: &Ring, prefix: &str, n: usize) -> Result<Polynomial, VarietyError> {
    let mut m: PolyMatrix = vec![vec![Polynomial::zero(ring); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let v = Polynomial::var(ring, ring.var(&format!("{prefix}_{i}{j}"))?);
            m[j][i] = -&v;
            m[i][j] = v;
        }
    }
    Ok(pfaffian(ring, &m)?)
}

/// `x_{0i} ↦ 1/x_{0i}`, `x_ij ↦ x_ij/(x_{0i}x_{0j})` on the chart
/// `x_01 = 1`, written on the given space of `G(2, n)` coordinates.
fn ghprs_coords(ring: &Ring, space: &Space) -> Result<Vec<RationalFunction>, VarietyError> {
    let mut out = Vec::new();
    for &v in &space.coords {
        let name = ring.name(v);
        let (prefix, digits) = name.split_once('_').expect("indexed coordinate");
        let idx: Vec<u32> = digits.chars().map(|c| c.to_digit(10).expect("digit")).collect();
        let x0 = |i: u32| -> Result<RationalFunction, VarietyError> {
            if i == 1 {
                Ok(RationalFunction::one(ring))
            } else {
                Ok(RationalFunction::var(ring, ring.var(&format!("{prefix}_0{i}"))?))
            }
        };
        let f = if idx[0] == 0 {
            x0(idx[1])?.inverse()?
        } else {
            RationalFunction::var(ring, v).try_div(&x0(idx[0])?.try_mul(&x0(idx[1])?)?)?
        };
        out.push(f);
    }
    Ok(out)
}

/// The involutive Cremona map of the chart of `G(2, n)` that sends the
/// Grassmannian into the linear space of [`ghprs_relations`].
pub fn ghprs_map(ring: &Ring, n: u32) -> Result<CremonaPair, VarietyError> {
    let entry = grass2(ring, n)?;
    let src = entry.param.space().clone();
    let tgt = entry.target.clone();
    let f = RationalMap::new(ring, src.clone(), tgt.clone(), ghprs_coords(ring, &src)?)?;
    let g = RationalMap::new(ring, tgt.clone(), src, ghprs_coords(ring, &tgt)?)?;
    Ok(verify_cremona(&f, &g)?)
}

/// `y_ij − y_ik + y_jk` for `1 ≤ i < j < k ≤ n−1`.
pub fn ghprs_relations(ring: &Ring, prefix: &str, n: u32) -> Result<Vec<Polynomial>, VarietyError> {
    let p = |i: u32, j: u32| -> Result<Polynomial, VarietyError> {
        Ok(Polynomial::var(ring, ring.var(&format!("{prefix}_{i}{j}"))?))
    };
    let mut out = Vec::new();
    for i in 1..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push(p(i, j)?.try_sub(&p(i, k)?)?.try_add(&p(j, k)?)?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse_polynomial;
    use crate::varieties::membership_check;

    #[test]
    fn pfaffian_of_g26() {
        let ring = Ring::new();
        let pf = grass_pfaffian(&ring, "x", 6).unwrap();
        assert_eq!(pf.num_terms(), 15);
        let expected = parse_polynomial(
            &ring,
            "x_01*(x_23*x_45 - x_24*x_35 + x_25*x_34) - x_02*(x_13*x_45 - x_14*x_35 + x_15*x_34) \
             + x_03*(x_12*x_45 - x_14*x_25 + x_15*x_24) - x_04*(x_12*x_35 - x_13*x_25 + x_15*x_23) \
             + x_05*(x_12*x_34 - x_13*x_24 + x_14*x_23)",
        )
        .unwrap();
        assert_eq!(pf, expected);
    }

    #[test]
    fn ghprs_is_an_involution_linearizing_the_grassmannian() {
        let ring = Ring::new();
        for n in [4, 5, 6] {
            let pair = ghprs_map(&ring, n).unwrap();
            assert!(pair.verified);
            let e = grass2(&ring, n).unwrap();
            let image = pair.forward.apply_to_parametrization(&e.param).unwrap();
            for rel in ghprs_relations(&ring, "y", n).unwrap() {
                assert!(membership_check(&image, &rel).unwrap());
            }
            // same formula both ways
            let renamed = pair.inverse.coords().iter().map(|f| f.to_string().replace('y', "x"));
            let fwd: Vec<String> = pair.forward.coords().iter().map(|f| f.to_string()).collect();
            assert_eq!(renamed.collect::<Vec<_>>(), fwd);
        }
    }
}

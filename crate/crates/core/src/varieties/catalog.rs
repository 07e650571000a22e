use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::matrix::{minors, PolyMatrix};
use super::g36 as g36_mod;
use super::{Parametrization, VarietyError};
use crate::cumulants::{multi_segre_parametrization, MultiIndexCoordinates};
use crate::maps::{generalized_triangular, triangular_from_parametrization, CremonaPair, Space};
use crate::polycore::{q, solve_unique, Coeff, Polynomial, RationalFunction, Ring, VarId};

pub const MAX_SEGRE: u32 = 4;
pub const MAX_VERONESE: u32 = 6;
pub const MAX_RNC: u32 = 12;
pub const MAX_GRASS: u32 = 8;
pub const MAX_TP: u32 = 4;

/// The families of the catalog with their size parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `ℙᵐ × ℙⁿ ⊂ ℙ^{(m+1)(n+1)−1}`.
    Segre(u32, u32),
    /// `ℙ^{r₁} × ⋯ × ℙ^{r_k}`.
    SegreMulti(Vec<u32>),
    /// Second Veronese embedding of `ℙⁿ`.
    Veronese2(u32),
    /// Rational normal curve of degree `n`.
    Rnc(u32),
    /// `G(2, n)` in its Plücker embedding.
    Grass2(u32),
    /// `G(3, 6) ⊂ ℙ¹⁹`.
    G36,
    /// Rank-one traceless `(n+1)×(n+1)` matrices.
    Tp(u32),
}

impl Family {
    /// One representative of each family, as listed by `catalog`.
    pub fn examples() -> Vec<Family> {
        vec![
            Family::Segre(2, 2),
            Family::SegreMulti(vec![1, 1, 1]),
            Family::Veronese2(2),
            Family::Rnc(6),
            Family::Grass2(6),
            Family::G36,
            Family::Tp(2),
        ]
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Family::Segre(..) => "segre",
            Family::SegreMulti(_) => "segre-multi",
            Family::Veronese2(_) => "veronese2",
            Family::Rnc(_) => "rnc",
            Family::Grass2(_) => "grass2",
            Family::G36 => "g36",
            Family::Tp(_) => "tp",
        }
    }

    pub fn build(&self, ring: &Ring) -> Result<CatalogEntry, VarietyError> {
        match self {
            Family::Segre(m, n) => segre(ring, *m, *n),
            Family::SegreMulti(shape) => segre_multi(ring, shape),
            Family::Veronese2(n) => veronese2(ring, *n),
            Family::Rnc(n) => rnc(ring, *n),
            Family::Grass2(n) => grass2(ring, *n),
            Family::G36 => g36(ring),
            Family::Tp(n) => tpn(ring, *n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Segre(m, n) => write!(f, "segre:{m},{n}"),
            Family::SegreMulti(shape) => {
                let s: Vec<String> = shape.iter().map(|r| r.to_string()).collect();
                write!(f, "segre-multi:{}", s.join(","))
            }
            Family::Veronese2(n) => write!(f, "veronese2:{n}"),
            Family::Rnc(n) => write!(f, "rnc:{n}"),
            Family::Grass2(n) => write!(f, "grass2:{n}"),
            Family::G36 => write!(f, "g36"),
            Family::Tp(n) => write!(f, "tp:{n}"),
        }
    }
}

impl FromStr for Family {
    type Err = VarietyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || VarietyError::UnknownEntry(s.to_string());
        let s = s.trim();
        if s == "g36" {
            return Ok(Family::G36);
        }
        let (kind, args) = s.split_once(':').ok_or_else(unknown)?;
        let nums: Vec<u32> = args
            .split(',')
            .map(|a| a.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| unknown())?;
        let one = |nums: &[u32]| if nums.len() == 1 { Ok(nums[0]) } else { Err(unknown()) };
        match kind {
            "segre" if nums.len() == 2 => Ok(Family::Segre(nums[0], nums[1])),
            "segre-multi" => Ok(Family::SegreMulti(nums)),
            "veronese2" => Ok(Family::Veronese2(one(&nums)?)),
            "rnc" => Ok(Family::Rnc(one(&nums)?)),
            "grass2" => Ok(Family::Grass2(one(&nums)?)),
            "tp" => Ok(Family::Tp(one(&nums)?)),
            _ => Err(unknown()),
        }
    }
}

/// A parametrized variety with the implicit equations known for it and the
/// coordinate subspace its linearizing Cremona map sends it to.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub family: Family,
    pub name: String,
    pub param: Parametrization,
    /// Homogeneous in the ambient coordinates including the chart.
    pub equations: Vec<Polynomial>,
    /// What the equations are, for reports.
    pub equation_kind: &'static str,
    /// Coordinate system of the linearized side.
    pub target: Space,
    /// Target coordinates that vanish on the image.
    pub linear_image: Vec<VarId>,
}

impl CatalogEntry {
    fn new(
        family: Family,
        param: Parametrization,
        equations: Vec<Polynomial>,
        equation_kind: &'static str,
        target: Space,
    ) -> Self {
        let linear_image = target.coords[param.num_params()..].to_vec();
        CatalogEntry {
            name: family.to_string(),
            family,
            param,
            equations,
            equation_kind,
            target,
            linear_image,
        }
    }

    /// `r` for a variety in `ℙʳ`.
    pub fn ambient_dim(&self) -> usize {
        self.param.space().dim()
    }

    pub fn dim(&self) -> usize {
        self.param.num_params()
    }

    /// The Cremona map of the family that sends the variety onto
    /// [`linear_image`](Self::linear_image)`= 0`.
    pub fn linearize(&self) -> Result<CremonaPair, VarietyError> {
        let ring = self.param.ring();
        match &self.family {
            Family::Rnc(n) => {
                let x = &self.param.space().coords;
                let xv = |i: usize| RationalFunction::var(ring, x[i - 1]);
                let mut desired = Vec::new();
                for i in 2..=*n as usize {
                    let mut y = xv(i);
                    for (u, k) in rnc_cone_coefficients(i)?.into_iter().enumerate() {
                        let u = u + 1;
                        y = y.try_sub(&RationalFunction::constant(ring, k).try_mul(&xv(u).try_mul(&xv(i - u))?)?)?;
                    }
                    desired.push(y);
                }
                let h = vec![RationalFunction::one(ring); desired.len()];
                self.generalized(&h, &desired)
            }
            Family::Tp(n) => {
                let n = *n as usize;
                let x = |i: usize, j: usize| RationalFunction::var(ring, ring.lookup(&format!("x_{i}{j}")).expect("tp coordinate"));
                let one = RationalFunction::one(ring);
                let mut h = Vec::new();
                let mut desired = Vec::new();
                for i in 1..=n {
                    h.push(-&x(0, i));
                    let prod = x(i, 0).try_mul(&x(0, i))?;
                    desired.push(if i < n {
                        x(i, i).try_sub(&prod)?
                    } else {
                        let trace = (1..n).try_fold(one.clone(), |acc, k| acc.try_add(&x(k, k)))?;
                        -&trace.try_add(&prod)?
                    });
                }
                for (i, j) in tp_off_diagonal(n) {
                    h.push(one.clone());
                    desired.push(x(i, j).try_sub(&x(i, 0).try_mul(&x(0, j))?)?);
                }
                self.generalized(&h, &desired)
            }
            Family::G36 => Ok(g36_mod::g36_maps(ring)?.0),
            _ => Ok(triangular_from_parametrization(&self.param, &self.target)?),
        }
    }

    /// Generalized triangular map whose non-parameter coordinates are
    /// `desired`, with `h` the coefficient of the coordinate itself.
    fn generalized(&self, h: &[RationalFunction], desired: &[RationalFunction]) -> Result<CremonaPair, VarietyError> {
        let ring = self.param.ring();
        let src = self.param.space();
        let n = self.param.num_params();
        let to_x: HashMap<VarId, RationalFunction> = self
            .param
            .params()
            .iter()
            .zip(&src.coords)
            .map(|(&t, &x)| (t, RationalFunction::var(ring, x)))
            .collect();
        let mut g = Vec::new();
        for (k, (hk, dk)) in h.iter().zip(desired).enumerate() {
            let j = n + k;
            let f = self.param.coords()[j].substitute(&to_x)?;
            let base = hk.try_mul(&RationalFunction::var(ring, src.coords[j]).try_sub(&f)?)?;
            g.push(dk.try_sub(&base)?);
        }
        Ok(generalized_triangular(&self.param, &self.target, h, &g)?)
    }
}

/// Coefficients `k_u`, `1 ≤ u ≤ i/2`, of the unique quadratic
/// `y_i = x_i − ∑ k_u x_u x_{i−u}` which on the secant variety of the
/// rational normal curve equals `c·(a+b)^{i−2}`, where the secant point is
/// `(1−s)ν(a) + sν(b)` and `c = s(1−s)(a−b)²`. The `y_i` then lie on the
/// cone over a rational normal curve of degree `n − 2`.
fn rnc_cone_coefficients(i: usize) -> Result<Vec<Coeff>, VarietyError> {
    let m = i / 2;
    let mut rows = Vec::new();
    for j in 0..m + 6 {
        let a = q(j as i64 + 2);
        let b = q(-2 * j as i64 - 1);
        let s = Coeff::new(1.into(), (j as i64 + 3).into());
        let x = |k: usize| (q(1) - &s) * pow(&a, k) + &s * pow(&b, k);
        let c = &s * (q(1) - &s) * pow(&(&a - &b), 2);
        let mut row: Vec<Coeff> = (1..=m).map(|u| x(u) * x(i - u)).collect();
        row.push(x(i) - c * pow(&(&a + &b), i - 2));
        rows.push(row);
    }
    solve_unique(rows, m).ok_or_else(|| VarietyError::OutOfRange(format!("no quadratic cone coordinate y_{i}")))
}

fn pow(x: &Coeff, k: usize) -> Coeff {
    (0..k).fold(q(1), |acc, _| acc * x)
}

/// The triangular map `y_i = x_i − x_1x_{i−1}` (`i` odd),
/// `y_i = x_i − x_{i/2}²` (`i` even) on the chart of the rational normal
/// curve. It agrees with [`CatalogEntry::linearize`] for `n ≤ 4`; from
/// `n = 5` on it still linearizes the curve, but it no longer sends the
/// secant variety onto a cone.
pub fn rnc_literal_map(ring: &Ring, n: u32) -> Result<CremonaPair, VarietyError> {
    let e = rnc(ring, n)?;
    let x = &e.param.space().coords;
    let xv = |i: usize| RationalFunction::var(ring, x[i - 1]);
    let mut desired = Vec::new();
    for i in 2..=n as usize {
        let prev = if i % 2 == 1 { xv(i - 1).try_mul(&xv(1))? } else { xv(i / 2).try_pow(2)? };
        desired.push(xv(i).try_sub(&prev)?);
    }
    let h = vec![RationalFunction::one(ring); desired.len()];
    e.generalized(&h, &desired)
}

/// Builds the entry by name, e.g. `"segre:2,2"` or `"g36"`.
pub fn catalog_entry(ring: &Ring, name: &str) -> Result<CatalogEntry, VarietyError> {
    name.parse::<Family>()?.build(ring)
}

fn poly(ring: &Ring, name: &str) -> Result<Polynomial, VarietyError> {
    Ok(Polynomial::var(ring, ring.var(name)?))
}

fn param_name(coord: &str) -> String {
    match coord.strip_prefix('x') {
        Some(rest) => format!("t{rest}"),
        None => format!("t_{coord}"),
    }
}

fn check(what: &str, value: u32, lo: u32, hi: u32) -> Result<(), VarietyError> {
    if value < lo || value > hi {
        return Err(VarietyError::OutOfRange(format!("{what} must lie in {lo}..={hi}, got {value}")));
    }
    Ok(())
}

/// Assembles a normal-form parametrization from coordinate names; the
/// first `n` coordinates are the parameters and `rest` gives the others.
fn assemble(
    ring: &Ring,
    chart: &str,
    param_coords: &[String],
    rest: Vec<(String, RationalFunction)>,
) -> Result<(Parametrization, Vec<VarId>), VarietyError> {
    let params = param_coords
        .iter()
        .map(|c| ring.var(&param_name(c)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut names: Vec<String> = param_coords.to_vec();
    let mut coords: Vec<RationalFunction> = params.iter().map(|&t| RationalFunction::var(ring, t)).collect();
    for (name, f) in rest {
        names.push(name);
        coords.push(f);
    }
    let space = Space::named(ring, chart, &names)?;
    Ok((Parametrization::new(ring, params.clone(), space, coords)?, params))
}

fn default_target(ring: &Ring, param: &Parametrization) -> Result<Space, VarietyError> {
    Ok(param.space().renamed(ring, "x", "y")?)
}

/// Segre `ℙᵐ × ℙⁿ` in the chart `x₀₀ = 1` with parameters `x_{i0}`,
/// `x_{0j}`; cut out by the 2×2 minors of `(x_ij)`.
pub fn segre(ring: &Ring, m: u32, n: u32) -> Result<CatalogEntry, VarietyError> {
    check("m", m, 1, MAX_SEGRE)?;
    check("n", n, 1, MAX_SEGRE)?;
    let mut pnames: Vec<String> = (1..=m).map(|i| format!("x_{i}0")).collect();
    pnames.extend((1..=n).map(|j| format!("x_0{j}")));
    let t = |name: String| RationalFunction::var(ring, ring.lookup(&param_name(&name)).expect("parameter"));
    // parameters must exist before the products are formed
    for p in &pnames {
        ring.var(&param_name(p))?;
    }
    let mut rest = Vec::new();
    for i in 1..=m {
        for j in 1..=n {
            rest.push((format!("x_{i}{j}"), t(format!("x_{i}0")).try_mul(&t(format!("x_0{j}")))?));
        }
    }
    let (param, _) = assemble(ring, "x_00", &pnames, rest)?;
    let matrix: PolyMatrix = (0..=m)
        .map(|i| (0..=n).map(|j| poly(ring, &format!("x_{i}{j}"))).collect())
        .collect::<Result<_, _>>()?;
    let equations = minors(ring, &matrix, 2)?;
    let target = default_target(ring, &param)?;
    Ok(CatalogEntry::new(Family::Segre(m, n), param, equations, "2x2 minors", target))
}

/// Multi-Segre embedding in multi-index coordinates `x_{i₁…i_k}`.
pub fn segre_multi(ring: &Ring, shape: &[u32]) -> Result<CatalogEntry, VarietyError> {
    if shape.len() < 2 {
        return Err(VarietyError::OutOfRange("segre-multi needs at least two factors".into()));
    }
    let coords = MultiIndexCoordinates::new(ring, shape, "x")?;
    let param = multi_segre_parametrization(ring, &coords, "t")?;
    let target = default_target(ring, &param)?;
    Ok(CatalogEntry::new(Family::SegreMulti(shape.to_vec()), param, Vec::new(), "none", target))
}

/// `v₂(ℙⁿ)` with coordinates `x_ij`, `0 ≤ i ≤ j ≤ n`, parameters `x_{0i}`.
pub fn veronese2(ring: &Ring, n: u32) -> Result<CatalogEntry, VarietyError> {
    check("n", n, 1, MAX_VERONESE)?;
    let pnames: Vec<String> = (1..=n).map(|i| format!("x_0{i}")).collect();
    let ts = pnames.iter().map(|p| ring.var(&param_name(p))).collect::<Result<Vec<_>, _>>()?;
    let mut rest = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            let f = RationalFunction::var(ring, ts[i as usize - 1]).try_mul(&RationalFunction::var(ring, ts[j as usize - 1]))?;
            rest.push((format!("x_{i}{j}"), f));
        }
    }
    let (param, _) = assemble(ring, "x_00", &pnames, rest)?;
    let matrix: PolyMatrix = (0..=n)
        .map(|i| (0..=n).map(|j| poly(ring, &format!("x_{}{}", i.min(j), i.max(j)))).collect())
        .collect::<Result<_, _>>()?;
    let equations = minors(ring, &matrix, 2)?;
    let target = default_target(ring, &param)?;
    Ok(CatalogEntry::new(Family::Veronese2(n), param, equations, "2x2 minors", target))
}

/// Hankel matrix with `rows` rows over the coordinates `x₀, …, x_n`.
pub fn catalecticant(ring: &Ring, prefix: &str, n: u32, rows: u32) -> Result<PolyMatrix, VarietyError> {
    let cols = n + 2 - rows;
    (0..rows)
        .map(|i| (0..cols).map(|j| poly(ring, &format!("{prefix}_{}", i + j))).collect())
        .collect()
}

/// Rational normal curve `[1, t, …, tⁿ]` in the chart `x₀ = 1`.
pub fn rnc(ring: &Ring, n: u32) -> Result<CatalogEntry, VarietyError> {
    check("n", n, 1, MAX_RNC)?;
    let t = ring.var("t_1")?;
    let rest = (2..=n)
        .map(|i| Ok((format!("x_{i}"), RationalFunction::var(ring, t).try_pow(i)?)))
        .collect::<Result<Vec<_>, VarietyError>>()?;
    let (param, _) = assemble(ring, "x_0", &["x_1".to_string()], rest)?;
    let equations = minors(ring, &catalecticant(ring, "x", n, 2)?, 2)?;
    let target = default_target(ring, &param)?;
    Ok(CatalogEntry::new(Family::Rnc(n), param, equations, "catalecticant 2x2 minors", target))
}

/// `x_ij x_kl − x_ik x_jl + x_il x_jk` for `i < j < k < l`.
pub fn plucker_relations(ring: &Ring, prefix: &str, n: u32) -> Result<Vec<Polynomial>, VarietyError> {
    let p = |i: u32, j: u32| poly(ring, &format!("{prefix}_{i}{j}"));
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let rel = p(i, j)?
                        .try_mul(&p(k, l)?)?
                        .try_sub(&p(i, k)?.try_mul(&p(j, l)?)?)?
                        .try_add(&p(i, l)?.try_mul(&p(j, k)?)?)?;
                    out.push(rel);
                }
            }
        }
    }
    Ok(out)
}

/// `G(2, n)` in the chart `x₀₁ = 1`: `x_ij = x_{0i}x_{1j} − x_{0j}x_{1i}`.
pub fn grass2(ring: &Ring, n: u32) -> Result<CatalogEntry, VarietyError> {
    check("n", n, 3, MAX_GRASS)?;
    let mut pnames: Vec<String> = (2..n).map(|j| format!("x_0{j}")).collect();
    pnames.extend((2..n).map(|j| format!("x_1{j}")));
    for p in &pnames {
        ring.var(&param_name(p))?;
    }
    let t = |i: u32, j: u32| RationalFunction::var(ring, ring.lookup(&format!("t_{i}{j}")).expect("parameter"));
    let mut rest = Vec::new();
    for i in 2..n {
        for j in i + 1..n {
            let f = t(0, i).try_mul(&t(1, j))?.try_sub(&t(0, j).try_mul(&t(1, i))?)?;
            rest.push((format!("x_{i}{j}"), f));
        }
    }
    let (param, _) = assemble(ring, "x_01", &pnames, rest)?;
    let equations = plucker_relations(ring, "x", n)?;
    let target = default_target(ring, &param)?;
    Ok(CatalogEntry::new(Family::Grass2(n), param, equations, "Plucker relations", target))
}

/// `G(3, 6)`: the row space of `(I₃ | A)` in coordinates `[x₀, X, Y, y₀]`.
pub fn g36(ring: &Ring) -> Result<CatalogEntry, VarietyError> {
    let param = g36_mod::g36_parametrization(ring)?;
    let target = g36_mod::g36_target(ring)?;
    Ok(CatalogEntry::new(Family::G36, param, Vec::new(), "none", target))
}

fn tp_off_diagonal(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push((i, j));
            }
        }
    }
    out
}

/// Traceless rank-one `(n+1)×(n+1)` matrices in the chart `x₀₀ = 1`, with
/// `x_nn` eliminated by the trace condition. Parameters are `x_{0i}` and
/// `x_ii` for `i < n`.
pub fn tpn(ring: &Ring, n: u32) -> Result<CatalogEntry, VarietyError> {
    check("n", n, 1, MAX_TP)?;
    let n = n as usize;
    let mut pnames: Vec<String> = (1..=n).map(|i| format!("x_0{i}")).collect();
    pnames.extend((1..n).map(|i| format!("x_{i}{i}")));
    for p in &pnames {
        ring.var(&param_name(p))?;
    }
    let t = |i: usize, j: usize| RationalFunction::var(ring, ring.lookup(&format!("t_{i}{j}")).expect("parameter"));
    let one = RationalFunction::one(ring);
    let mut col = Vec::new();
    for i in 1..=n {
        let f = if i < n {
            t(i, i).try_div(&t(0, i))?
        } else {
            let trace = (1..n).try_fold(one.clone(), |acc, k| acc.try_add(&t(k, k)))?;
            (-&trace).try_div(&t(0, n))?
        };
        col.push(f);
    }
    let mut rest: Vec<(String, RationalFunction)> =
        col.iter().enumerate().map(|(k, f)| (format!("x_{}0", k + 1), f.clone())).collect();
    for (i, j) in tp_off_diagonal(n) {
        rest.push((format!("x_{i}{j}"), col[i - 1].try_mul(&t(0, j))?));
    }
    let (param, _) = assemble(ring, "x_00", &pnames, rest)?;

    let matrix = tp_matrix(ring, "x", n as u32)?;
    let equations = minors(ring, &matrix, 2)?;
    let target = default_target(ring, &param)?;
    Ok(CatalogEntry::new(Family::Tp(n as u32), param, equations, "2x2 minors, trace zero", target))
}

/// The traceless matrix of [`tpn`] with its last diagonal entry written as
/// minus the sum of the others.
pub fn tp_matrix(ring: &Ring, prefix: &str, n: u32) -> Result<PolyMatrix, VarietyError> {
    let n = n as usize;
    let mut trace = Polynomial::zero(ring);
    for k in 0..n {
        trace = trace.try_add(&poly(ring, &format!("{prefix}_{k}{k}"))?)?;
    }
    (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| if i == n && j == n { Ok(trace.scale(&q(-1))) } else { poly(ring, &format!("{prefix}_{i}{j}")) })
                .collect()
        })
        .collect()
}

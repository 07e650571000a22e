//! Worked examples: each one runs a whole pipeline and checks the identity
//! it is meant to exhibit.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::cumulants::{binary_cumulant_map, secant_cumulant_pipeline, segre_parametrization, SubsetCoordinates};
use crate::maps::{triangular_from_parametrization, CremonaPair, Space};
use crate::polycore::{parse_polynomial, Coeff, PolyError, Polynomial, RankConfig, RationalFunction, Ring, VarId};
use crate::varieties::matrix::{determinant, hyperdeterminant, minors, PolyMatrix};
use crate::varieties::{
    catalecticant, cone_structure_check_with, g36_maps, g36_tangential_images, grass2, grass_pfaffian, membership_check,
    rnc, secant_parametrization, segre, tangential_parametrization, tp_matrix, tpn, veronese2, Parametrization,
    VarietyError,
};

/// Names of the worked examples.
pub const EXAMPLES: [&str; 9] = [
    "ex-seg",
    "ex-tp",
    "ex-ver",
    "ex-grass",
    "ex-rnc",
    "ex-3segre",
    "ex-3segre-cumulant",
    "ex-secant-toric",
    "ex-g36-quartic",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Example {
    Seg,
    Tp,
    Ver,
    Grass,
    Rnc,
    ThreeSegre,
    ThreeSegreCumulant,
    SecantToric,
    G36Quartic,
}

impl Example {
    pub const ALL: [Example; 9] = [
        Example::Seg,
        Example::Tp,
        Example::Ver,
        Example::Grass,
        Example::Rnc,
        Example::ThreeSegre,
        Example::ThreeSegreCumulant,
        Example::SecantToric,
        Example::G36Quartic,
    ];

    pub fn name(self) -> &'static str {
        EXAMPLES[Self::ALL.iter().position(|&e| e == self).expect("listed")]
    }
}

impl fmt::Display for Example {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Example {
    type Err = VarietyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        EXAMPLES
            .iter()
            .position(|&n| n == s)
            .map(|i| Self::ALL[i])
            .ok_or_else(|| VarietyError::UnknownExample {
                name: s.to_string(),
                known: EXAMPLES.join(", "),
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of one example: every check performed plus the polynomials
/// worth showing.
#[derive(Clone, Debug, Default)]
pub struct ExampleReport {
    pub name: String,
    pub checks: Vec<Check>,
    pub artifacts: Vec<(String, String)>,
}

impl ExampleReport {
    fn new(name: &str) -> Self {
        ExampleReport {
            name: name.to_string(),
            ..Default::default()
        }
    }

    fn check(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            label: label.into(),
            passed,
            detail: detail.into(),
        });
    }

    fn artifact(&mut self, label: impl Into<String>, value: impl ToString) {
        self.artifacts.push((label.into(), value.to_string()));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Debug)]
pub struct ExampleOptions {
    /// Number of factors for `ex-secant-toric`.
    pub n: u32,
    pub rank: RankConfig,
}

impl Default for ExampleOptions {
    fn default() -> Self {
        ExampleOptions {
            n: 4,
            rank: RankConfig::default(),
        }
    }
}

/// Pulls a homogeneous equation in the source coordinates back along the
/// homogenized inverse, restricts to the target chart and removes monomial
/// factors, which are units off the coordinate hyperplanes.
pub fn transform_equation(pair: &CremonaPair, eq: &Polynomial) -> Result<Polynomial, VarietyError> {
    let inv = pair.inverse.homogenize()?;
    let p = eq
        .substitute_polys(&inv.bindings())?
        .specialize(pair.inverse.source().chart, &Coeff::from_integer(1.into()));
    let content = p.monomial_content();
    Ok(p.div_monomial(&content).expect("content divides"))
}

/// Whether `a = c·b` for a nonzero constant `c`.
pub fn is_unit_multiple(a: &Polynomial, b: &Polynomial) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    let c: Coeff = a.leading_coefficient() / b.leading_coefficient();
    *a == b.scale(&c)
}

fn poly(ring: &Ring, s: &str) -> Result<Polynomial, VarietyError> {
    Ok(parse_polynomial(ring, s)?)
}

fn vars(ring: &Ring, names: &[&str]) -> Result<Vec<VarId>, PolyError> {
    ring.vars(names)
}

/// `t1 ↦ t0 + u` for every block-1 parameter of a first secant.
fn shift_second_point(ring: &Ring, sec: &Parametrization, k_params: usize) -> Result<Parametrization, VarietyError> {
    let p = sec.params();
    let mut subs = HashMap::new();
    let mut params = p[..k_params].to_vec();
    for i in 0..k_params {
        let u = ring.var(&format!("u_{}", i + 1))?;
        subs.insert(p[k_params + i], RationalFunction::var(ring, p[i]).try_add(&RationalFunction::var(ring, u))?);
        params.push(u);
    }
    params.extend(&p[2 * k_params..]);
    Ok(sec.reparametrize(params, &subs)?)
}

pub fn run_example(ring: &Ring, example: Example, opts: &ExampleOptions) -> Result<ExampleReport, VarietyError> {
    let mut r = ExampleReport::new(example.name());
    match example {
        Example::Seg => {
            let e = segre(ring, 2, 2)?;
            let pair = e.linearize()?;
            r.check("Cremona pair verifies", pair.verified, format!("({}, {})", pair.delta, pair.delta_prime));
            let matrix: PolyMatrix = (0..3)
                .map(|i| (0..3).map(|j| poly(ring, &format!("x_{i}{j}"))).collect())
                .collect::<Result<_, _>>()?;
            let det = determinant(ring, &matrix)?;
            let image = transform_equation(&pair, &det)?;
            let binomial = poly(ring, "y_11*y_22 - y_12*y_21")?;
            r.artifact("det(x)", &det);
            r.artifact("transformed", &image);
            r.check("det(x) becomes y_11*y_22 - y_12*y_21", is_unit_multiple(&image, &binomial), image.to_string());
            let sec = pair.forward.apply_to_parametrization(&secant_parametrization(&e.param, 1)?)?;
            r.check("transformed secant satisfies the binomial", membership_check(&sec, &binomial)?, "");
        }
        Example::Tp => {
            let e = tpn(ring, 2)?;
            let pair = e.linearize()?;
            r.check("Cremona pair verifies", pair.verified, format!("({}, {})", pair.delta, pair.delta_prime));
            let det = determinant(ring, &tp_matrix(ring, "x", 2)?)?;
            let image = transform_equation(&pair, &det)?;
            let target = poly(ring, "y_12*y_21 - y_10*y_20")?;
            r.artifact("det(x)", &det);
            r.artifact("transformed", &image);
            r.check("det(x) becomes y_12*y_21 - y_10*y_20", is_unit_multiple(&image, &target), image.to_string());
            let tan = pair.forward.apply_to_parametrization(&tangential_parametrization(&e.param)?)?;
            r.check("transformed tangent variety satisfies it", membership_check(&tan, &target)?, "");
            let sec = pair.forward.apply_to_parametrization(&secant_parametrization(&e.param, 1)?)?;
            r.check("transformed secant variety satisfies it", membership_check(&sec, &target)?, "");
        }
        Example::Ver => {
            let e = veronese2(ring, 2)?;
            let pair = e.linearize()?;
            r.check("Cremona pair verifies", pair.verified, "");
            let sec = pair.forward.apply_to_parametrization(&secant_parametrization(&e.param, 1)?)?;
            let sec = shift_second_point(ring, &sec, e.dim())?;
            let conic = poly(ring, "y_11*y_22 - y_12^2")?;
            r.check("secant satisfies y_11*y_22 - y_12^2", membership_check(&sec, &conic)?, "");
            let vertex = vars(ring, &["y_01", "y_02"])?;
            r.check(
                "secant is a cone with vertex {y_11 = y_12 = y_22 = 0}",
                cone_structure_check_with(&sec, &vertex, &opts.rank)?,
                "",
            );
            for (v, f) in sec.space().coords.iter().zip(sec.coords()).skip(2) {
                r.artifact(ring.name(*v), f);
            }
            let tan = pair.forward.apply_to_parametrization(&tangential_parametrization(&e.param)?)?;
            let quad = tan.coords()[2..].iter().all(|f| f.vars().iter().all(|v| ring.name(*v).starts_with("s_")));
            r.check("tangent coordinates are -f(s)", quad, "");
        }
        Example::Grass => {
            let e = grass2(ring, 6)?;
            let pair = e.linearize()?;
            r.check("Cremona pair verifies", pair.verified, "");
            let pf = grass_pfaffian(ring, "x", 6)?;
            let image = transform_equation(&pair, &pf)?;
            let quadric = poly(ring, "y_23*y_45 - y_24*y_35 + y_25*y_34")?;
            r.artifact("Pfaffian", &pf);
            r.artifact("transformed", &image);
            r.check("Pfaffian becomes y_23*y_45 - y_24*y_35 + y_25*y_34", is_unit_multiple(&image, &quadric), image.to_string());
            let tan = pair.forward.apply_to_parametrization(&tangential_parametrization(&e.param)?)?;
            r.check("transformed tangent variety satisfies the quadric", membership_check(&tan, &quadric)?, "");
            let vertex: Vec<VarId> = e.target.coords[..e.dim()].to_vec();
            r.check(
                "tangent variety is a cone over G(2,4)",
                cone_structure_check_with(&tan, &vertex, &opts.rank)?,
                "",
            );
        }
        Example::Rnc => {
            let e = rnc(ring, 6)?;
            let pair = e.linearize()?;
            r.check("Cremona pair verifies", pair.verified, format!("({}, {})", pair.delta, pair.delta_prime));
            let sec = pair.forward.apply_to_parametrization(&secant_parametrization(&e.param, 1)?)?;
            // V_4 on y_2, …, y_6
            let shifted: PolyMatrix = catalecticant(ring, "y", 6, 2)?.into_iter().map(|row| row[2..].to_vec()).collect();
            let eqs = minors(ring, &shifted, 2)?;
            let mut all = true;
            for eq in &eqs {
                all &= membership_check(&sec, eq)?;
            }
            r.artifact("catalecticant minors", eqs.len());
            r.check("secant satisfies the V_4 catalecticant minors in y_2..y_6", all, "");
        }
        Example::ThreeSegre => {
            let (param, target) = sigma3(ring)?;
            let pair = triangular_from_parametrization(&param, &target)?;
            r.check("Cremona pair verifies", pair.verified, "");
            let tan = tangential_parametrization(&param)?;
            let hyper = sigma3_hyperdeterminant(ring, "x")?;
            r.check("hyperdeterminant vanishes on the tangent variety", membership_check(&tan, &hyper)?, "");
            let image = pair.forward.apply_to_parametrization(&tan)?;
            let quartic = poly(
                ring,
                "y_3^2*y_4^2 + y_2^2*y_5^2 + y_1^2*y_6^2 + 2*(y_1*y_2*y_5*y_6 + y_1*y_3*y_4*y_6 + y_2*y_3*y_4*y_5) \
                 + 4*y_4*y_5*y_6 - 2*y_7*(y_1*y_6 + y_3*y_4 + y_2*y_5) + y_7^2",
            )?;
            r.artifact("quartic", &quartic);
            r.check("transformed tangent variety satisfies the quartic", membership_check(&image, &quartic)?, "");
            let transformed = transform_equation(&pair, &hyper)?;
            r.check("hyperdeterminant transforms to the quartic", is_unit_multiple(&transformed, &quartic), transformed.to_string());
        }
        Example::ThreeSegreCumulant => {
            let pair = binary_cumulant_map(ring, 3)?;
            r.check("Cremona pair verifies", pair.verified, "");
            let x = SubsetCoordinates::from_space(ring, 3, pair.forward.source())?;
            let tan = tangential_parametrization(&segre_parametrization(ring, &x, "t")?)?;
            let image = pair.forward.apply_to_parametrization(&tan)?;
            let eq = poly(ring, "y_{1,2,3}^2 + 4*y_{1,2}*y_{1,3}*y_{2,3}")?;
            r.artifact("equation", &eq);
            r.check("transformed tangent variety satisfies y_123^2 + 4 y_12 y_13 y_23", membership_check(&image, &eq)?, "");
        }
        Example::SecantToric => {
            let out = secant_cumulant_pipeline(ring, opts.n)?;
            r.check("one-cluster step verifies", out.psi1.verified, "");
            r.check("interval step verifies", out.psi2.verified, "");
            r.check(
                format!("z_I = s(1-s)(1-2s)^(|I|-2) prod(b_i - a_i) for n = {}", opts.n),
                out.identity_holds,
                "",
            );
            if let Some(last) = out.image.coords().last() {
                r.artifact("z_[n]", last);
            }
        }
        Example::G36Quartic => {
            let (quadro, cubo) = g36_maps(ring)?;
            r.check("quadro-cubic pair verifies", quadro.verified && (quadro.delta, quadro.delta_prime) == (2, 3), "");
            r.check("cubo-cubic pair verifies", cubo.verified && (cubo.delta, cubo.delta_prime) == (3, 3), "");
            let g = crate::varieties::g36(ring)?;
            for (label, pair) in [("quadro-cubic", &quadro), ("cubo-cubic", &cubo)] {
                let image = pair.forward.apply_to_parametrization(&g.param)?;
                let zero = g.linear_image.iter().all(|&v| image.coordinate(v).is_some_and(|f| f.is_zero()));
                r.check(format!("{label} sends G(3,6) to W = w_0 = 0"), zero, "");
            }
            let (a, b) = g36_tangential_images(ring)?;
            let lead = poly(ring, "z_13^4*z_22^2 - 2*z_12*z_13^3*z_22*z_23")?;
            for (label, img) in [("quadro-cubic", &a), ("cubo-cubic", &b)] {
                r.artifact(format!("{label} image"), format!("degree {}, {} terms", img.degree, img.terms));
                r.artifact(format!("{label} leading (grevlex)"), &img.leading_grevlex);
                r.artifact(format!("{label} leading (grlex)"), &img.leading_grlex);
                r.check(format!("{label} image has degree 6"), img.degree == 6, img.degree.to_string());
                r.check(
                    format!("{label} image leads with z_13^4*z_22^2 - 2*z_12*z_13^3*z_22*z_23"),
                    img.leading_grevlex == lead,
                    img.leading_grevlex.to_string(),
                );
                r.check(format!("{label} image has 400..=800 terms"), (400..=800).contains(&img.terms), img.terms.to_string());
            }
        }
    }
    Ok(r)
}

/// `Σ₃ = (ℙ¹)³` with coordinates `x_0, …, x_7`: `x_1, x_2, x_3` are the
/// parameters and `x_4, x_5, x_6, x_7` stand for `{1,2}, {1,3}, {2,3},
/// {1,2,3}`. Returns the parametrization and the `y` target space.
pub fn sigma3(ring: &Ring) -> Result<(Parametrization, Space), VarietyError> {
    let t = vars(ring, &["t_1", "t_2", "t_3"])?;
    let tv = |i: usize| RationalFunction::var(ring, t[i]);
    let products = [vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2]];
    let mut coords: Vec<RationalFunction> = (0..3).map(tv).collect();
    for p in &products {
        coords.push(p.iter().try_fold(RationalFunction::one(ring), |acc, &i| acc.try_mul(&tv(i)))?);
    }
    let names: Vec<String> = (1..=7).map(|i| format!("x_{i}")).collect();
    let space = Space::named(ring, "x_0", &names)?;
    let target = space.renamed(ring, "x", "y")?;
    Ok((Parametrization::new(ring, t, space, coords)?, target))
}

/// Hyperdeterminant in the coordinates of [`sigma3`].
pub fn sigma3_hyperdeterminant(ring: &Ring, prefix: &str) -> Result<Polynomial, VarietyError> {
    // x_0 ↔ 000, x_1 ↔ 100, x_2 ↔ 010, x_3 ↔ 001, x_4 ↔ 110, x_5 ↔ 101,
    // x_6 ↔ 011, x_7 ↔ 111
    let idx = |i: usize, j: usize, k: usize| match (i, j, k) {
        (0, 0, 0) => 0,
        (1, 0, 0) => 1,
        (0, 1, 0) => 2,
        (0, 0, 1) => 3,
        (1, 1, 0) => 4,
        (1, 0, 1) => 5,
        (0, 1, 1) => 6,
        _ => 7,
    };
    let v = |i, j, k| Polynomial::var(ring, ring.var(&format!("{prefix}_{}", idx(i, j, k))).expect("valid name"));
    let a: [[[Polynomial; 2]; 2]; 2] =
        std::array::from_fn(|i| std::array::from_fn(|j| std::array::from_fn(|k| v(i, j, k))));
    Ok(hyperdeterminant(ring, &a)?)
}

pub fn run_all(ring: &Ring, opts: &ExampleOptions) -> Result<Vec<ExampleReport>, VarietyError> {
    Example::ALL.iter().map(|&e| run_example(ring, e, opts)).collect()
}

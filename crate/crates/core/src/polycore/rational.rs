use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{One, Zero};

use super::polynomial::PowerCache;
use super::{gcd, Coeff, Monomial, PolyError, Polynomial, Ring, TermAccumulator, VarId};

/// Quotient of polynomials in lowest terms: `gcd(num, den) = 1` and the
/// leading coefficient of `den` is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, PolyError> {
        num.check_ring(&den)?;
        if den.is_zero() {
            return Err(PolyError::DivisionByZero(format!("denominator of ({num})/(0)")));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::from_poly(Polynomial::zero(num.ring()));
        }
        if den.is_constant() {
            let inv = den.leading_coefficient().recip();
            return Self::from_poly(num.scale(&inv));
        }
        let g = gcd(&num, &den).expect("same ring");
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).unwrap().expect("gcd divides numerator"),
                den.div_exact(&g).unwrap().expect("gcd divides denominator"),
            )
        };
        Self::normalized(num, den)
    }

    /// Coprime parts; only the leading coefficient is fixed up.
    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        let lc = den.leading_coefficient();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        let den = Polynomial::one(p.ring());
        RationalFunction { num: p, den }
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::from_poly(Polynomial::zero(ring))
    }

    pub fn one(ring: &Ring) -> Self {
        Self::from_poly(Polynomial::one(ring))
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        Self::from_poly(Polynomial::constant(ring, c))
    }

    pub fn var(ring: &Ring, v: VarId) -> Self {
        Self::from_poly(Polynomial::var(ring, v))
    }

    pub fn ring(&self) -> &Ring {
        self.num.ring()
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn into_parts(self) -> (Polynomial, Polynomial) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn vars(&self) -> std::collections::BTreeSet<VarId> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v
    }

    pub fn involves(&self, v: VarId) -> bool {
        self.num.involves(v) || self.den.involves(v)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.num.check_ring(&other.num)?;
        if self.den == other.den {
            let num = self.num.try_add(&other.num)?;
            if self.den.is_one() {
                return Ok(Self::from_poly(num));
            }
            return Ok(Self::reduce(num, self.den.clone()));
        }
        if self.den.is_one() && !other.den.is_one() {
            // p + a/b = (p b + a)/b stays reduced.
            let num = self.num.try_mul(&other.den)?.try_add(&other.num)?;
            return Ok(Self::normalized(num, other.den.clone()));
        }
        if other.den.is_one() {
            return other.try_add(self);
        }
        let g = gcd(&self.den, &other.den)?;
        let b_g = self.den.div_exact(&g)?.unwrap();
        let d_g = other.den.div_exact(&g)?.unwrap();
        let num = self.num.try_mul(&d_g)?.try_add(&other.num.try_mul(&b_g)?)?;
        let den = b_g.try_mul(&other.den)?;
        Ok(Self::reduce(num, den))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.num.check_ring(&other.num)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ring()));
        }
        if self.den.is_one() && other.den.is_one() {
            return Ok(Self::from_poly(self.num.try_mul(&other.num)?));
        }
        // Cross-cancel so the product needs no further gcd.
        let (a, d) = cancel(&self.num, &other.den)?;
        let (c, b) = cancel(&other.num, &self.den)?;
        Ok(Self::normalized(a.try_mul(&c)?, b.try_mul(&d)?))
    }

    pub fn inverse(&self) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Err(PolyError::DivisionByZero("reciprocal of the zero function".into()));
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, PolyError> {
        if other.is_zero() {
            return Err(PolyError::DivisionByZero(format!("divisor ({other}) is zero")));
        }
        self.try_mul(&other.inverse()?)
    }

    pub fn try_pow(&self, e: u32) -> Result<Self, PolyError> {
        Ok(RationalFunction {
            num: self.num.try_pow(e)?,
            den: self.den.try_pow(e)?,
        })
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Quotient rule.
    pub fn partial_derivative(&self, v: VarId) -> Result<Self, PolyError> {
        if self.den.is_one() {
            return Ok(Self::from_poly(self.num.partial_derivative(v)));
        }
        let dn = self.num.partial_derivative(v);
        let dd = self.den.partial_derivative(v);
        let num = dn.try_mul(&self.den)?.try_sub(&self.num.try_mul(&dd)?)?;
        let den = self.den.try_mul(&self.den)?;
        Ok(Self::reduce(num, den))
    }

    pub fn evaluate(&self, point: &HashMap<VarId, Coeff>) -> Result<Coeff, PolyError> {
        let d = self.den.evaluate(point)?;
        if d.is_zero() {
            return Err(PolyError::DivisionByZero(format!("denominator {} vanishes at the point", self.den)));
        }
        Ok(self.num.evaluate(point)? / d)
    }

    /// Simultaneous substitution; unbound variables are carried through.
    pub fn substitute(&self, bindings: &HashMap<VarId, RationalFunction>) -> Result<Self, PolyError> {
        let num = substitute_poly(&self.num, bindings)?;
        if self.den.is_one() {
            return Ok(num);
        }
        let den = substitute_poly(&self.den, bindings)?;
        if den.is_zero() {
            return Err(PolyError::DivisionByZero(format!(
                "denominator {} vanishes after substitution",
                self.den
            )));
        }
        num.try_div(&den)
    }
}

/// Removes the common factor of `a` and `b`.
fn cancel(a: &Polynomial, b: &Polynomial) -> Result<(Polynomial, Polynomial), PolyError> {
    if b.is_constant() || a.is_constant() {
        return Ok((a.clone(), b.clone()));
    }
    let g = gcd(a, b)?;
    if g.is_one() {
        return Ok((a.clone(), b.clone()));
    }
    Ok((a.div_exact(&g)?.unwrap(), b.div_exact(&g)?.unwrap()))
}

/// Substitutes rational functions into a polynomial by clearing each bound
/// variable's denominator to its full degree in `p`, so only one final
/// reduction is needed.
pub fn substitute_poly(p: &Polynomial, bindings: &HashMap<VarId, RationalFunction>) -> Result<RationalFunction, PolyError> {
    let ring = p.ring();
    let relevant: HashMap<VarId, &RationalFunction> = bindings
        .iter()
        .filter(|(v, _)| p.involves(**v))
        .map(|(v, f)| (*v, f))
        .collect();
    for f in relevant.values() {
        p.check_ring(&f.num)?;
    }
    if relevant.values().all(|f| f.is_polynomial()) {
        let polys: HashMap<VarId, Polynomial> = relevant.iter().map(|(v, f)| (*v, f.num.clone())).collect();
        return Ok(RationalFunction::from_poly(p.substitute_polys(&polys)?));
    }
    let nums: HashMap<VarId, Polynomial> = relevant.iter().map(|(v, f)| (*v, f.num.clone())).collect();
    let dens: HashMap<VarId, Polynomial> = relevant.iter().map(|(v, f)| (*v, f.den.clone())).collect();
    let degs: HashMap<VarId, u32> = relevant.keys().map(|&v| (v, p.degree_in(v))).collect();
    let mut num_pows = PowerCache::new(&nums);
    let mut den_pows = PowerCache::new(&dens);
    let mut acc = TermAccumulator::default();
    for (m, c) in p.terms() {
        let mut kept = Monomial::one();
        let mut product = Polynomial::constant(ring, c.clone());
        for (v, e) in m.iter() {
            if relevant.contains_key(&v) {
                product = product.try_mul(num_pows.get(v, e)?)?;
            } else {
                kept = kept.mul(&Monomial::var_pow(v, e));
            }
        }
        for (&v, &d) in &degs {
            let missing = d - m.exponent(v);
            if missing > 0 {
                product = product.try_mul(den_pows.get(v, missing)?)?;
            }
        }
        for (pm, pc) in product.terms() {
            acc.add(pm.mul(&kept), pc.clone());
        }
    }
    let num = acc.into_polynomial(ring);
    let mut den = Polynomial::one(ring);
    for (&v, &d) in &degs {
        den = den.try_mul(den_pows.get(v, d)?)?;
    }
    Ok(RationalFunction::reduce(num, den))
}

impl Polynomial {
    /// Substitution of rational functions; see [`substitute_poly`].
    pub fn substitute(&self, bindings: &HashMap<VarId, RationalFunction>) -> Result<RationalFunction, PolyError> {
        substitute_poly(self, bindings)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::super::{parse_polynomial, q};
    use super::*;

    fn setup() -> (Ring, VarId, VarId) {
        let ring = Ring::new();
        let x = ring.var("x").unwrap();
        let t = ring.var("t").unwrap();
        (ring, x, t)
    }

    #[test]
    fn reduction_removes_common_factors() {
        let (ring, _, _) = setup();
        let num = parse_polynomial(&ring, "x^2 - t^2").unwrap();
        let den = parse_polynomial(&ring, "2*x + 2*t").unwrap();
        let f = RationalFunction::new(num, den).unwrap();
        assert_eq!(f.num(), &parse_polynomial(&ring, "1/2*x - 1/2*t").unwrap());
        assert!(f.is_polynomial());
        let z = Polynomial::zero(&ring);
        assert!(matches!(
            RationalFunction::new(Polynomial::one(&ring), z),
            Err(PolyError::DivisionByZero(_))
        ));
    }

    #[test]
    fn substitution_examples() {
        let (ring, x, t) = setup();
        let t_poly = Polynomial::var(&ring, t);
        let sq = parse_polynomial(&ring, "x^2").unwrap();
        let b = HashMap::from([(x, RationalFunction::from_poly(&t_poly + &Polynomial::one(&ring)))]);
        let r = substitute_poly(&sq, &b).unwrap();
        assert_eq!(r.num(), &parse_polynomial(&ring, "t^2 + 2*t + 1").unwrap());

        let inv_t = RationalFunction::new(Polynomial::one(&ring), t_poly.clone()).unwrap();
        let r = substitute_poly(&Polynomial::var(&ring, x), &HashMap::from([(x, inv_t.clone())])).unwrap();
        assert_eq!(r, inv_t);
        assert!(r.num().is_one() && r.den() == &t_poly);
    }

    #[test]
    fn vanishing_denominator_is_named() {
        let (ring, x, t) = setup();
        let f = RationalFunction::new(Polynomial::one(&ring), parse_polynomial(&ring, "x - t").unwrap()).unwrap();
        let b = HashMap::from([(x, RationalFunction::var(&ring, t))]);
        match f.substitute(&b) {
            Err(PolyError::DivisionByZero(msg)) => assert!(msg.contains("x - t"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn quotient_rule() {
        let (ring, _, t) = setup();
        let f = RationalFunction::new(Polynomial::one(&ring), Polynomial::var(&ring, t)).unwrap();
        let d = f.partial_derivative(t).unwrap();
        assert_eq!(d.num(), &Polynomial::from_int(&ring, -1));
        assert_eq!(d.den(), &parse_polynomial(&ring, "t^2").unwrap());
    }

    #[test]
    fn field_operations() {
        let (ring, x, t) = setup();
        let a = RationalFunction::new(Polynomial::var(&ring, x), Polynomial::var(&ring, t)).unwrap();
        let b = RationalFunction::new(Polynomial::var(&ring, t), Polynomial::var(&ring, x)).unwrap();
        assert_eq!(&a * &b, RationalFunction::one(&ring));
        let s = &a + &b;
        assert_eq!(s.num(), &parse_polynomial(&ring, "x^2 + t^2").unwrap());
        assert_eq!(s.den(), &parse_polynomial(&ring, "x*t").unwrap());
        assert!((&s - &s).is_zero());
        let half = RationalFunction::constant(&ring, q(1) / q(2));
        assert_eq!(&(&half + &half), &RationalFunction::one(&ring));
    }
}

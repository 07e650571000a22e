use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigRational, One, Zero};

use super::{Monomial, PolyError, Ring, VarId};

pub type Coeff = BigRational;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted by decreasing graded lexicographic order with no
/// repeated monomials and no zero coefficients, so structural equality is
/// mathematical equality.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Coeff::one())
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        Self::monomial(ring, Monomial::one(), c)
    }

    pub fn from_int(ring: &Ring, c: i64) -> Self {
        Self::constant(ring, Coeff::from_integer(c.into()))
    }

    pub fn var(ring: &Ring, v: VarId) -> Self {
        Self::monomial(ring, Monomial::var(v), Coeff::one())
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Coeff) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Canonicalizes an arbitrary list of terms.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut acc = TermAccumulator::default();
        for (m, c) in terms {
            acc.add(m, c);
        }
        acc.into_polynomial(ring)
    }

    /// Terms already sorted, merged and nonzero.
    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0.grlex_cmp(&w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Coeff> {
        match self.terms.as_slice() {
            [] => Some(Coeff::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// The single variable this polynomial is equal to, if any.
    pub fn as_var(&self) -> Option<VarId> {
        match self.terms.as_slice() {
            [(m, c)] if c.is_one() && m.degree() == 1 => m.vars().next(),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    pub fn leading_coefficient(&self) -> Coeff {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(Coeff::zero)
    }

    /// Total degree; the zero polynomial has degree 0.
    pub fn total_degree(&self) -> u32 {
        // Sorted by grlex, so the first term has maximal degree.
        self.terms.first().map(|t| t.0.degree()).unwrap_or(0)
    }

    pub fn degree_in(&self, v: VarId) -> u32 {
        self.terms.iter().map(|t| t.0.exponent(v)).max().unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        self.terms.iter().flat_map(|t| t.0.vars()).collect()
    }

    pub fn involves(&self, v: VarId) -> bool {
        self.terms.iter().any(|t| t.0.exponent(v) > 0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let d = self.total_degree();
        self.terms.iter().all(|t| t.0.degree() == d)
    }

    pub(crate) fn check_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    fn check_degree(&self, degree: u32) -> Result<(), PolyError> {
        let limit = self.ring.limits().max_degree;
        if degree > limit {
            Err(PolyError::DegreeLimit { degree, limit })
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &Coeff| if negate { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.grlex_cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), sign(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| (t.0.clone(), sign(&t.1))));
        Polynomial::from_sorted_terms(&self.ring, out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        self.check_degree(self.total_degree() + other.total_degree())?;
        Ok(self.mul_unchecked(other))
    }

    /// Product without the degree guard, for internal intermediates.
    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let mut acc = TermAccumulator::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                acc.add(ma.mul(mb), ca * cb);
            }
        }
        acc.into_polynomial(&self.ring)
    }

    /// Multiplication by a single term keeps the order.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(tm, tc)| (tm.mul(m), tc * c)).collect();
        Polynomial::from_sorted_terms(&self.ring, terms)
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(&Monomial::one(), c)
    }

    pub fn try_pow(&self, e: u32) -> Result<Polynomial, PolyError> {
        if e == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        self.check_degree(self.total_degree().saturating_mul(e))?;
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return Ok(Polynomial::monomial(&self.ring, m.pow(e), num::pow(c.clone(), e as usize)));
        }
        let mut base = self.clone();
        let mut result = Polynomial::one(&self.ring);
        let mut e = e;
        loop {
            if e & 1 == 1 {
                result = result.try_mul(&base)?;
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.try_mul(&base)?;
        }
        Ok(result)
    }

    pub fn partial_derivative(&self, v: VarId) -> Polynomial {
        let mut acc = TermAccumulator::default();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            if e > 0 {
                acc.add(rest.mul(&Monomial::var_pow(v, e - 1)), c * Coeff::from_integer(e.into()));
            }
        }
        acc.into_polynomial(&self.ring)
    }

    /// Homogeneous pieces in ascending degree; the zero polynomial has none.
    pub fn homogeneous_components(&self) -> Vec<(u32, Polynomial)> {
        let mut by_degree: Vec<(u32, Vec<(Monomial, Coeff)>)> = Vec::new();
        // Terms come in decreasing degree, so each degree is a contiguous run.
        for (m, c) in &self.terms {
            let d = m.degree();
            match by_degree.last_mut() {
                Some((dd, run)) if *dd == d => run.push((m.clone(), c.clone())),
                _ => by_degree.push((d, vec![(m.clone(), c.clone())])),
            }
        }
        by_degree
            .into_iter()
            .rev()
            .map(|(d, run)| (d, Polynomial::from_sorted_terms(&self.ring, run)))
            .collect()
    }

    /// Multiplies each term by a power of `v` so that every term has degree
    /// `degree`.
    pub fn homogenize(&self, v: VarId, degree: u32) -> Result<Polynomial, PolyError> {
        if self.total_degree() > degree {
            return Err(PolyError::NotHomogeneous(format!(
                "cannot homogenize a degree {} polynomial to degree {degree}",
                self.total_degree()
            )));
        }
        if self.involves(v) {
            return Err(PolyError::NotHomogeneous(format!(
                "homogenizing variable {} already occurs",
                self.ring.name(v)
            )));
        }
        Ok(Polynomial::from_terms(
            &self.ring,
            self.terms
                .iter()
                .map(|(m, c)| (m.mul(&Monomial::var_pow(v, degree - m.degree())), c.clone())),
        ))
    }

    /// Partial evaluation at `v = value`.
    pub fn specialize(&self, v: VarId, value: &Coeff) -> Polynomial {
        Polynomial::from_terms(
            &self.ring,
            self.terms.iter().map(|(m, c)| {
                let (e, rest) = m.split_off(v);
                (rest, c * num::pow(value.clone(), e as usize))
            }),
        )
    }

    /// Full evaluation; every variable must be bound.
    pub fn evaluate(&self, point: &HashMap<VarId, Coeff>) -> Result<Coeff, PolyError> {
        let mut total = Coeff::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.iter() {
                let x = point
                    .get(&v)
                    .ok_or_else(|| PolyError::UnboundVariable(self.ring.name(v)))?;
                t *= num::pow(x.clone(), e as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// Simultaneous substitution of polynomials for variables. Unbound
    /// variables are kept.
    pub fn substitute_polys(&self, bindings: &HashMap<VarId, Polynomial>) -> Result<Polynomial, PolyError> {
        for p in bindings.values() {
            self.check_ring(p)?;
        }
        let mut powers = PowerCache::new(bindings);
        let mut acc = TermAccumulator::default();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut product = Polynomial::constant(&self.ring, c.clone());
            for (v, e) in m.iter() {
                if bindings.contains_key(&v) {
                    let pw = powers.get(v, e)?;
                    product = product.try_mul(pw)?;
                    if product.is_zero() {
                        break;
                    }
                } else {
                    kept = kept.mul(&Monomial::var_pow(v, e));
                }
            }
            self.check_degree(product.total_degree() + kept.degree())?;
            for (pm, pc) in product.terms {
                acc.add(pm.mul(&kept), pc);
            }
        }
        Ok(acc.into_polynomial(&self.ring))
    }

    /// View as a univariate polynomial in `v`: entry `k` is the coefficient
    /// of `v^k`.
    pub fn coefficients_in(&self, v: VarId) -> Vec<Polynomial> {
        let d = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            buckets[e as usize].push((rest, c.clone()));
        }
        // Removing the same power of v from every term of a bucket keeps the
        // bucket sorted.
        buckets
            .into_iter()
            .map(|b| Polynomial::from_sorted_terms(&self.ring, b))
            .collect()
    }

    /// Inverse of [`Polynomial::coefficients_in`].
    pub fn from_coefficients_in(ring: &Ring, v: VarId, coeffs: &[Polynomial]) -> Polynomial {
        Polynomial::from_terms(
            ring,
            coeffs.iter().enumerate().flat_map(|(k, p)| {
                let vk = Monomial::var_pow(v, k as u32);
                p.terms.iter().map(move |(m, c)| (m.mul(&vk), c.clone()))
            }),
        )
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Monomial::one();
        };
        it.fold(first.clone(), |g, (m, _)| g.gcd(m))
    }

    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        let terms: Option<Vec<_>> = self
            .terms
            .iter()
            .map(|(tm, c)| tm.div(m).map(|q| (q, c.clone())))
            .collect();
        terms.map(|t| Polynomial::from_sorted_terms(&self.ring, t))
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Option<Polynomial>, PolyError> {
        self.check_ring(divisor)?;
        let Some((lm, lc)) = divisor.leading_term().cloned() else {
            return Err(PolyError::DivisionByZero("exact division by the zero polynomial".into()));
        };
        if divisor.terms.len() == 1 {
            let inv = lc.recip();
            return Ok(self.div_monomial(&lm).map(|q| q.scale(&inv)));
        }
        let mut rem = self.clone();
        let mut quotient = TermAccumulator::default();
        while let Some((rm, rc)) = rem.leading_term().cloned() {
            let Some(qm) = rm.div(&lm) else {
                return Ok(None);
            };
            let qc = &rc / &lc;
            rem = rem.merge(&divisor.mul_term(&qm, &qc), true);
            quotient.add(qm, qc);
        }
        Ok(Some(quotient.into_polynomial(&self.ring)))
    }

    /// Symmetric bilinear form of a quadratic form: `Φ(u, v)` with
    /// `2Φ(u, v) = q(u + v) − q(u) − q(v)`, where `vars[i]` is replaced by
    /// `u[i]` and `v[i]`.
    pub fn polar_form(&self, vars: &[VarId], u: &[VarId], v: &[VarId]) -> Result<Polynomial, PolyError> {
        if !self.is_zero() && (self.total_degree() != 2 || !self.is_homogeneous()) {
            return Err(PolyError::NotHomogeneous(format!(
                "polar form needs a homogeneous quadratic, got {self}"
            )));
        }
        if vars.len() != u.len() || vars.len() != v.len() {
            return Err(PolyError::NotHomogeneous("variable blocks differ in length".into()));
        }
        if let Some(&stray) = self.vars().iter().find(|x| !vars.contains(x)) {
            return Err(PolyError::NotHomogeneous(format!(
                "{} is not among the form's variables",
                self.ring.name(stray)
            )));
        }
        let ring = &self.ring;
        let block = |b: &[VarId]| -> HashMap<VarId, Polynomial> {
            vars.iter().zip(b).map(|(&x, &y)| (x, Polynomial::var(ring, y))).collect()
        };
        let sum: HashMap<VarId, Polynomial> = vars
            .iter()
            .zip(u.iter().zip(v))
            .map(|(&x, (&a, &b))| (x, Polynomial::var(ring, a) + Polynomial::var(ring, b)))
            .collect();
        let quv = self.substitute_polys(&sum)?;
        let qu = self.substitute_polys(&block(u))?;
        let qv = self.substitute_polys(&block(v))?;
        Ok((quv - qu - qv).scale(&(Coeff::one() / Coeff::from_integer(2.into()))))
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            Some((_, c)) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    /// The polynomial's terms as `(coefficient, monomial)` strings in
    /// decreasing order for the given comparison.
    pub fn sorted_terms_by(&self, cmp: impl Fn(&Monomial, &Monomial) -> Ordering) -> Vec<(Monomial, Coeff)> {
        let mut t = self.terms.clone();
        t.sort_by(|a, b| cmp(&b.0, &a.0));
        t
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Hash-based accumulator for sums of many terms.
#[derive(Default)]
pub struct TermAccumulator {
    map: HashMap<Monomial, Coeff>,
}

impl TermAccumulator {
    pub fn with_capacity(n: usize) -> Self {
        TermAccumulator {
            map: HashMap::with_capacity(n),
        }
    }

    pub fn add(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.map.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_polynomial(&mut self, p: &Polynomial) {
        for (m, c) in &p.terms {
            self.add(m.clone(), c.clone());
        }
    }

    pub fn into_polynomial(self, ring: &Ring) -> Polynomial {
        let mut terms: Vec<_> = self.map.into_iter().collect();
        terms.sort_by(|a, b| b.0.grlex_cmp(&a.0));
        Polynomial::from_sorted_terms(ring, terms)
    }
}

/// Memoized powers of the bound polynomials of a substitution.
pub(crate) struct PowerCache<'a> {
    bindings: &'a HashMap<VarId, Polynomial>,
    cache: HashMap<VarId, Vec<Polynomial>>,
}

impl<'a> PowerCache<'a> {
    pub(crate) fn new(bindings: &'a HashMap<VarId, Polynomial>) -> Self {
        PowerCache {
            bindings,
            cache: HashMap::new(),
        }
    }

    pub(crate) fn get(&mut self, v: VarId, e: u32) -> Result<&Polynomial, PolyError> {
        let base = &self.bindings[&v];
        let powers = self
            .cache
            .entry(v)
            .or_insert_with(|| vec![Polynomial::one(base.ring()), base.clone()]);
        while powers.len() <= e as usize {
            let next = powers.last().unwrap().try_mul(base)?;
            powers.push(next);
        }
        Ok(&powers[e as usize])
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

// The operator forms panic on ring mismatch or on exceeding the degree
// limit; library code uses the `try_*` methods.
forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial::from_sorted_terms(&self.ring, terms)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

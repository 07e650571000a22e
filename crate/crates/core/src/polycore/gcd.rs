//! Multivariate gcd over ℚ: monomial content, then a recursive primitive
//! pseudo-remainder sequence in one main variable at a time.

use super::{Monomial, PolyError, Polynomial, VarId};

/// Greatest common divisor, normalized to leading coefficient 1. The gcd of
/// two zero polynomials is zero.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial, PolyError> {
    a.check_ring(b)?;
    Ok(gcd_rec(a, b).monic())
}

/// Least common multiple, normalized to leading coefficient 1.
pub fn lcm(a: &Polynomial, b: &Polynomial) -> Result<Polynomial, PolyError> {
    a.check_ring(b)?;
    if a.is_zero() || b.is_zero() {
        return Ok(Polynomial::zero(a.ring()));
    }
    let g = gcd_rec(a, b);
    let q = a
        .div_exact(&g)?
        .expect("gcd divides its argument");
    Ok(q.mul_unchecked(b).monic())
}

fn gcd_rec(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let ring = a.ring();
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(ring);
    }
    let (ma, mb) = (a.monomial_content(), b.monomial_content());
    let mono = ma.gcd(&mb);
    let a = strip(a, &ma);
    let b = strip(b, &mb);
    let rest = poly_gcd_no_monomial_content(&a, &b);
    rest.mul_term(&mono, &num::One::one())
}

fn strip(p: &Polynomial, m: &Monomial) -> Polynomial {
    if m.is_one() {
        p.monic()
    } else {
        p.div_monomial(m).expect("monomial content divides").monic()
    }
}

/// Both inputs have trivial monomial content.
fn poly_gcd_no_monomial_content(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let ring = a.ring();
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(ring);
    }
    if a == b {
        return a.monic();
    }
    // Cheap divisibility test catches the frequent case of one argument
    // dividing the other.
    let (small, large) = if a.num_terms() <= b.num_terms() { (a, b) } else { (b, a) };
    if small.total_degree() <= large.total_degree() {
        if let Ok(Some(_)) = large.div_exact(small) {
            return small.monic();
        }
    }

    let va = a.vars();
    let vb = b.vars();
    // A variable present in only one argument cannot occur in the gcd, so
    // the gcd divides every coefficient with respect to that variable.
    if let Some(&v) = va.difference(&vb).next() {
        return gcd_with_coefficients(b, a, v);
    }
    if let Some(&v) = vb.difference(&va).next() {
        return gcd_with_coefficients(a, b, v);
    }
    if va.is_empty() {
        return Polynomial::one(ring);
    }
    let v = choose_main_variable(a, b, &va);

    let (ca, pa) = content_and_primitive(a, v);
    let (cb, pb) = content_and_primitive(b, v);
    let c = gcd_rec(&ca, &cb);
    let p = primitive_prs(pa, pb, v);
    c.mul_unchecked(&p).monic()
}

fn gcd_with_coefficients(other: &Polynomial, p: &Polynomial, v: VarId) -> Polynomial {
    let mut g = other.clone();
    for c in p.coefficients_in(v) {
        if c.is_zero() {
            continue;
        }
        g = gcd_rec(&g, &c);
        if g.is_constant() {
            return Polynomial::one(p.ring());
        }
    }
    g.monic()
}

/// Prefers the variable of smallest positive degree: shorter remainder
/// sequences and cheaper contents.
fn choose_main_variable(a: &Polynomial, b: &Polynomial, vars: &std::collections::BTreeSet<VarId>) -> VarId {
    *vars
        .iter()
        .min_by_key(|&&v| (a.degree_in(v).min(b.degree_in(v)), a.degree_in(v) + b.degree_in(v)))
        .unwrap()
}

/// Content with respect to `v` (gcd of the coefficients) and the primitive
/// part.
fn content_and_primitive(p: &Polynomial, v: VarId) -> (Polynomial, Polynomial) {
    let coeffs = p.coefficients_in(v);
    let mut content: Option<Polynomial> = None;
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        content = Some(match content {
            None => c.monic(),
            Some(g) => gcd_rec(&g, c),
        });
        if content.as_ref().unwrap().is_constant() {
            break;
        }
    }
    let content = content.unwrap_or_else(|| Polynomial::one(p.ring()));
    if content.is_constant() {
        return (Polynomial::one(p.ring()), p.monic());
    }
    let prim = p.div_exact(&content).unwrap().expect("content divides");
    (content, prim.monic())
}

fn primitive_part(p: &Polynomial, v: VarId) -> Polynomial {
    content_and_primitive(p, v).1
}

fn primitive_prs(a: Polynomial, b: Polynomial, v: VarId) -> Polynomial {
    let (mut r0, mut r1) = if a.degree_in(v) >= b.degree_in(v) { (a, b) } else { (b, a) };
    loop {
        if r1.is_zero() {
            return r0.monic();
        }
        if r1.degree_in(v) == 0 {
            // A nonzero primitive polynomial free of v: the gcd is trivial.
            return Polynomial::one(r0.ring());
        }
        let r = pseudo_remainder(&r0, &r1, v);
        r0 = r1;
        r1 = if r.is_zero() { r } else { primitive_part(&r, v) };
    }
}

/// Pseudo-remainder of `a` by `b` as polynomials in `v`.
fn pseudo_remainder(a: &Polynomial, b: &Polynomial, v: VarId) -> Polynomial {
    let ring = a.ring();
    let db = b.degree_in(v);
    let lb = b.coefficients_in(v).pop().unwrap();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = r.coefficients_in(v).pop().unwrap();
        let shift = Polynomial::monomial(ring, Monomial::var_pow(v, dr - db), num::One::one());
        let next = r.mul_unchecked(&lb) - lr.mul_unchecked(&shift).mul_unchecked(b);
        r = next.monic();
    }
    r
}

#[cfg(test)]
mod tests {
    use super::super::{parse_polynomial, Ring};
    use super::*;

    fn p(ring: &Ring, s: &str) -> Polynomial {
        parse_polynomial(ring, s).unwrap()
    }

    #[test]
    fn gcd_of_products() {
        let ring = Ring::new();
        for v in ["x", "y", "z"] {
            ring.var(v).unwrap();
        }
        let a = p(&ring, "x + y - 1");
        let b = p(&ring, "x*z + y^2");
        let c = p(&ring, "z^2 - 3*x");
        let g = gcd(&(&a * &b), &(&a * &c)).unwrap();
        assert_eq!(g, a.monic());
        let g = gcd(&(&a * &(&b * &b)), &(&(&b * &c) * &a)).unwrap();
        assert_eq!(g, (&a * &b).monic());
        assert!(gcd(&b, &c).unwrap().is_one());
    }

    #[test]
    fn gcd_with_monomial_parts() {
        let ring = Ring::new();
        for v in ["x", "y"] {
            ring.var(v).unwrap();
        }
        let g = gcd(&p(&ring, "x^3*y + x^2*y^2"), &p(&ring, "x^2*y^3")).unwrap();
        assert_eq!(g, p(&ring, "x^2*y"));
        let g = gcd(&p(&ring, "2*x^2 - 2*y^2"), &p(&ring, "4*x + 4*y")).unwrap();
        assert_eq!(g, p(&ring, "x + y"));
    }

    #[test]
    fn lcm_divides_back() {
        let ring = Ring::new();
        for v in ["x", "y"] {
            ring.var(v).unwrap();
        }
        let a = p(&ring, "x^2 - y^2");
        let b = p(&ring, "x*y + y^2");
        let l = lcm(&a, &b).unwrap();
        assert!(l.div_exact(&a).unwrap().is_some());
        assert!(l.div_exact(&b).unwrap().is_some());
        assert_eq!(l.total_degree(), 3);
    }
}

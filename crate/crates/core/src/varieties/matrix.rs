use crate::polycore::{PolyError, Polynomial, Ring};

/// Square or rectangular matrix of polynomials, stored by rows.
pub type PolyMatrix = Vec<Vec<Polynomial>>;

/// Determinant by cofactor expansion along the first row. Meant for the
/// small matrices that occur in the catalog.
pub fn determinant(ring: &Ring, m: &[Vec<Polynomial>]) -> Result<Polynomial, PolyError> {
    let n = m.len();
    match n {
        0 => return Ok(Polynomial::one(ring)),
        1 => return Ok(m[0][0].clone()),
        2 => return m[0][0].try_mul(&m[1][1])?.try_sub(&m[0][1].try_mul(&m[1][0])?),
        _ => {}
    }
    let mut det = Polynomial::zero(ring);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: PolyMatrix = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = m[0][j].try_mul(&determinant(ring, &minor)?)?;
        det = if j % 2 == 0 { det.try_add(&term)? } else { det.try_sub(&term)? };
    }
    Ok(det)
}

/// Submatrix on the given rows and columns.
pub fn submatrix(m: &[Vec<Polynomial>], rows: &[usize], cols: &[usize]) -> PolyMatrix {
    rows.iter().map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect()).collect()
}

/// Matrix with row `i` and column `j` removed.
pub fn delete_row_col(m: &[Vec<Polynomial>], i: usize, j: usize) -> PolyMatrix {
    let rows: Vec<usize> = (0..m.len()).filter(|&r| r != i).collect();
    let cols: Vec<usize> = (0..m[0].len()).filter(|&c| c != j).collect();
    submatrix(m, &rows, &cols)
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every `k×k` minor, skipping the ones that vanish identically and
/// repeats up to sign.
pub fn minors(ring: &Ring, m: &[Vec<Polynomial>], k: usize) -> Result<Vec<Polynomial>, PolyError> {
    let (r, c) = (m.len(), m.first().map_or(0, |row| row.len()));
    let mut out: Vec<Polynomial> = Vec::new();
    for rows in combinations(r, k) {
        for cols in combinations(c, k) {
            let d = determinant(ring, &submatrix(m, &rows, &cols))?;
            if d.is_zero() || out.iter().any(|e| *e == d || *e == -&d) {
                continue;
            }
            out.push(d);
        }
    }
    Ok(out)
}

/// Pfaffian of an antisymmetric matrix of even size, expanded along the
/// first row: `Pf(A) = ∑_{j≥1} (−1)^{j+1} a_{0j} Pf(A_{0̂ĵ})`.
pub fn pfaffian(ring: &Ring, m: &[Vec<Polynomial>]) -> Result<Polynomial, PolyError> {
    let n = m.len();
    if n == 0 {
        return Ok(Polynomial::one(ring));
    }
    if n % 2 == 1 {
        return Ok(Polynomial::zero(ring));
    }
    let mut pf = Polynomial::zero(ring);
    for j in 1..n {
        if m[0][j].is_zero() {
            continue;
        }
        let keep: Vec<usize> = (1..n).filter(|&c| c != j).collect();
        let term = m[0][j].try_mul(&pfaffian(ring, &submatrix(m, &keep, &keep))?)?;
        pf = if j % 2 == 1 { pf.try_add(&term)? } else { pf.try_sub(&term)? };
    }
    Ok(pf)
}

/// Cayley's hyperdeterminant of the `2×2×2` tensor `a[i][j][k]`.
pub fn hyperdeterminant(ring: &Ring, a: &[[[Polynomial; 2]; 2]; 2]) -> Result<Polynomial, PolyError> {
    let e = |i: usize, j: usize, k: usize| &a[i][j][k];
    let prod = |fs: &[&Polynomial]| -> Result<Polynomial, PolyError> {
        fs.iter().try_fold(Polynomial::one(ring), |acc, f| acc.try_mul(f))
    };
    // antipodal pairs {v, 7 − v}
    let pairs = [
        (e(0, 0, 0), e(1, 1, 1)),
        (e(0, 0, 1), e(1, 1, 0)),
        (e(0, 1, 0), e(1, 0, 1)),
        (e(1, 0, 0), e(0, 1, 1)),
    ];
    let mut h = Polynomial::zero(ring);
    for (p, q) in &pairs {
        h = h.try_add(&prod(&[p, p, q, q])?)?;
    }
    for i in 0..4 {
        for j in i + 1..4 {
            let t = prod(&[pairs[i].0, pairs[i].1, pairs[j].0, pairs[j].1])?;
            h = h.try_sub(&t.scale(&crate::polycore::q(2)))?;
        }
    }
    let t1 = prod(&[e(0, 0, 0), e(0, 1, 1), e(1, 0, 1), e(1, 1, 0)])?;
    let t2 = prod(&[e(1, 1, 1), e(1, 0, 0), e(0, 1, 0), e(0, 0, 1)])?;
    h.try_add(&t1.try_add(&t2)?.scale(&crate::polycore::q(4)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse_polynomial;

    fn mat(ring: &Ring, rows: &[&[&str]]) -> PolyMatrix {
        rows.iter()
            .map(|r| r.iter().map(|s| parse_polynomial(ring, s).unwrap()).collect())
            .collect()
    }

    #[test]
    fn small_determinants() {
        let ring = Ring::new();
        let m = mat(&ring, &[&["a", "b"], &["c", "d"]]);
        assert_eq!(determinant(&ring, &m).unwrap(), parse_polynomial(&ring, "a*d - b*c").unwrap());
        let m = mat(&ring, &[&["2", "0", "1"], &["1", "3", "2"], &["1", "1", "1"]]);
        assert_eq!(determinant(&ring, &m).unwrap(), Polynomial::from_int(&ring, 0));
        let m = mat(&ring, &[&["1", "2", "3"], &["0", "1", "4"], &["5", "6", "0"]]);
        assert_eq!(determinant(&ring, &m).unwrap(), Polynomial::from_int(&ring, 1));
    }

    #[test]
    fn minors_of_a_rank_one_matrix_vanish() {
        let ring = Ring::new();
        let m = mat(&ring, &[&["a", "b", "c"], &["2*a", "2*b", "2*c"]]);
        assert!(minors(&ring, &m, 2).unwrap().is_empty());
        let m = mat(&ring, &[&["a", "b", "c"], &["d", "e", "f"]]);
        assert_eq!(minors(&ring, &m, 2).unwrap().len(), 3);
        assert_eq!(combinations(4, 2).len(), 6);
    }

    #[test]
    fn pfaffian_squares_to_the_determinant() {
        let ring = Ring::new();
        let names = ["a", "b", "c", "d", "e", "f"];
        let mut m = vec![vec![Polynomial::zero(&ring); 4]; 4];
        let mut k = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                let v = Polynomial::var(&ring, ring.var(names[k]).unwrap());
                m[j][i] = -&v;
                m[i][j] = v;
                k += 1;
            }
        }
        let pf = pfaffian(&ring, &m).unwrap();
        assert_eq!(pf, parse_polynomial(&ring, "a*f - b*e + c*d").unwrap());
        assert_eq!(pf.try_mul(&pf).unwrap(), determinant(&ring, &m).unwrap());
    }

    #[test]
    fn hyperdeterminant_of_a_decomposable_tensor_vanishes() {
        let ring = Ring::new();
        let v = |s: &str| parse_polynomial(&ring, s).unwrap();
        let (a, b, c) = ([v("1"), v("p")], [v("1"), v("q")], [v("1"), v("r")]);
        let t: [[[Polynomial; 2]; 2]; 2] = std::array::from_fn(|i| {
            std::array::from_fn(|j| std::array::from_fn(|k| a[i].try_mul(&b[j]).unwrap().try_mul(&c[k]).unwrap()))
        });
        assert!(hyperdeterminant(&ring, &t).unwrap().is_zero());
        // e_000 + e_111 has hyperdeterminant 1
        let z = Polynomial::zero(&ring);
        let mut t: [[[Polynomial; 2]; 2]; 2] = std::array::from_fn(|_| std::array::from_fn(|_| [z.clone(), z.clone()]));
        t[0][0][0] = v("1");
        t[1][1][1] = v("1");
        assert_eq!(hyperdeterminant(&ring, &t).unwrap(), v("1"));
    }
}

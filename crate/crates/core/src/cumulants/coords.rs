use std::collections::HashMap;

use super::{CumulantError, MAX_CUMULANT_N, MAX_MULTI_COORDS};
use crate::maps::Space;
use crate::polycore::{Polynomial, Ring, VarId};
use crate::posets::{subset_elements, Subset};

/// `x_{}` for the empty set, `x_{1,3}` for `{1, 3}`.
pub fn subset_name(prefix: &str, set: Subset) -> String {
    let elems: Vec<String> = subset_elements(set).map(|e| e.to_string()).collect();
    format!("{prefix}_{{{}}}", elems.join(","))
}

/// `x_102` for the tuple `(1, 0, 2)`.
pub fn tuple_name(prefix: &str, tuple: &[u32]) -> String {
    let digits: String = tuple.iter().map(|d| d.to_string()).collect();
    format!("{prefix}_{digits}")
}

/// One variable per subset of `[n]`, ordered by size and then by bitmask so
/// that cumulant maps are visibly triangular.
#[derive(Clone, Debug, PartialEq)]
pub struct SubsetCoordinates {
    ring: Ring,
    n: u32,
    vars: Vec<VarId>,
    order: Vec<Subset>,
}

fn subset_order(n: u32) -> Vec<Subset> {
    let mut order: Vec<Subset> = (1..(1u32 << n)).collect();
    order.sort_by_key(|&s| (s.count_ones(), s));
    order
}

impl SubsetCoordinates {
    pub fn new(ring: &Ring, n: u32, prefix: &str) -> Result<Self, CumulantError> {
        if n == 0 || n > MAX_CUMULANT_N {
            return Err(CumulantError::OutOfRange(n));
        }
        let vars = (0..(1u32 << n))
            .map(|s| ring.var(&subset_name(prefix, s)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SubsetCoordinates {
            ring: ring.clone(),
            n,
            vars,
            order: subset_order(n),
        })
    }

    /// Reads the subset labels off a space laid out like [`space`](Self::space).
    pub fn from_space(ring: &Ring, n: u32, space: &Space) -> Result<Self, CumulantError> {
        let order = subset_order(n);
        if space.coords.len() != order.len() {
            return Err(CumulantError::Shape("space has the wrong number of coordinates".into()));
        }
        let mut vars = vec![space.chart; 1 << n];
        for (&s, &v) in order.iter().zip(&space.coords) {
            vars[s as usize] = v;
        }
        Ok(SubsetCoordinates {
            ring: ring.clone(),
            n,
            vars,
            order,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Nonempty subsets in coordinate order.
    pub fn order(&self) -> &[Subset] {
        &self.order
    }

    pub fn var(&self, set: Subset) -> VarId {
        self.vars[set as usize]
    }

    /// The coordinate as a polynomial in the chart `x_∅ = 1`.
    pub fn poly(&self, set: Subset) -> Polynomial {
        if set == 0 {
            Polynomial::one(&self.ring)
        } else {
            Polynomial::var(&self.ring, self.var(set))
        }
    }

    pub fn space(&self) -> Space {
        Space::new(self.vars[0], self.order.iter().map(|&s| self.vars[s as usize]).collect())
    }
}

/// One variable per tuple in `∏ {0, …, r_j}`, ordered by support size and
/// then lexicographically.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiIndexCoordinates {
    ring: Ring,
    shape: Vec<u32>,
    chart: VarId,
    order: Vec<Vec<u32>>,
    vars: HashMap<Vec<u32>, VarId>,
}

impl MultiIndexCoordinates {
    pub fn new(ring: &Ring, shape: &[u32], prefix: &str) -> Result<Self, CumulantError> {
        if shape.iter().any(|&r| r == 0 || r > 9) {
            return Err(CumulantError::Shape(format!("entries of {shape:?} must lie in 1..=9")));
        }
        let total = shape.iter().try_fold(1usize, |acc, &r| acc.checked_mul(r as usize + 1));
        if shape.len() > MAX_CUMULANT_N as usize || total.is_none_or(|t| t > MAX_MULTI_COORDS) {
            return Err(CumulantError::Shape(format!("shape {shape:?} exceeds the size cap")));
        }
        let mut tuples: Vec<Vec<u32>> = vec![vec![]];
        for &r in shape {
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    (0..=r).map(move |i| {
                        let mut t = t.clone();
                        t.push(i);
                        t
                    })
                })
                .collect();
        }
        tuples.sort_by(|a, b| Self::support(a).count_ones().cmp(&Self::support(b).count_ones()).then_with(|| a.cmp(b)));
        let mut vars = HashMap::new();
        for t in &tuples {
            vars.insert(t.clone(), ring.var(&tuple_name(prefix, t))?);
        }
        let zero = tuples.remove(0);
        Ok(MultiIndexCoordinates {
            ring: ring.clone(),
            shape: shape.to_vec(),
            chart: vars[&zero],
            order: tuples,
            vars,
        })
    }

    pub fn shape(&self) -> &[u32] {
        &self.shape
    }

    /// `S(i)`: positions (1-based) of the nonzero entries.
    pub fn support(tuple: &[u32]) -> Subset {
        tuple
            .iter()
            .enumerate()
            .filter(|(_, &i)| i != 0)
            .fold(0, |acc, (j, _)| acc | (1 << j))
    }

    /// `i(B)`: agrees with `i` on `B` and is zero elsewhere.
    pub fn truncate(tuple: &[u32], block: Subset) -> Vec<u32> {
        tuple
            .iter()
            .enumerate()
            .map(|(j, &i)| if block & (1 << j) != 0 { i } else { 0 })
            .collect()
    }

    /// Nonzero tuples in coordinate order.
    pub fn order(&self) -> &[Vec<u32>] {
        &self.order
    }

    pub fn var(&self, tuple: &[u32]) -> VarId {
        self.vars[tuple]
    }

    pub fn poly(&self, tuple: &[u32]) -> Polynomial {
        if tuple.iter().all(|&i| i == 0) {
            Polynomial::one(&self.ring)
        } else {
            Polynomial::var(&self.ring, self.var(tuple))
        }
    }

    pub fn space(&self) -> Space {
        Space::new(self.chart, self.order.iter().map(|t| self.vars[t]).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_and_order() {
        let ring = Ring::new();
        assert_eq!(subset_name("x", 0), "x_{}");
        assert_eq!(subset_name("y", 0b101), "y_{1,3}");
        assert_eq!(tuple_name("x", &[1, 0, 2]), "x_102");
        let c = SubsetCoordinates::new(&ring, 3, "x").unwrap();
        let names: Vec<String> = c.space().coords.iter().map(|&v| ring.name(v)).collect();
        assert_eq!(
            names,
            ["x_{1}", "x_{2}", "x_{3}", "x_{1,2}", "x_{1,3}", "x_{2,3}", "x_{1,2,3}"]
        );
        assert_eq!(ring.name(c.space().chart), "x_{}");
        let back = SubsetCoordinates::from_space(&ring, 3, &c.space()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn multi_index_layout() {
        let ring = Ring::new();
        let m = MultiIndexCoordinates::new(&ring, &[2, 1], "x").unwrap();
        let names: Vec<String> = m.space().coords.iter().map(|&v| ring.name(v)).collect();
        assert_eq!(names, ["x_01", "x_10", "x_20", "x_11", "x_21"]);
        assert_eq!(MultiIndexCoordinates::support(&[2, 0, 1]), 0b101);
        assert_eq!(MultiIndexCoordinates::truncate(&[2, 3, 1], 0b101), vec![2, 0, 1]);
        assert!(MultiIndexCoordinates::new(&ring, &[0, 1], "x").is_err());
    }
}

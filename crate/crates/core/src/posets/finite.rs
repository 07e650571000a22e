use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use super::{PosetError, MAX_POSET_SIZE};

/// Explicit finite poset with its whole Möbius function precomputed.
///
/// Elements are stored in a linear extension of the order, so `x ≤ y`
/// implies `index(x) ≤ index(y)`.
#[derive(Clone, Debug)]
pub struct FinitePoset<T> {
    elements: Vec<T>,
    index: HashMap<T, usize>,
    /// `up[x]` is a bitset of `{y : x ≤ y}`.
    up: Vec<Vec<u64>>,
    mobius: Vec<Vec<i64>>,
}

fn words(n: usize) -> usize {
    n.div_ceil(64)
}

fn bit(set: &[u64], i: usize) -> bool {
    set[i / 64] & (1 << (i % 64)) != 0
}

impl<T: Clone + Eq + Hash + Debug> FinitePoset<T> {
    /// Builds the poset and checks that `leq` is a partial order.
    pub fn new(elements: Vec<T>, leq: impl Fn(&T, &T) -> bool) -> Result<Self, PosetError> {
        let n = elements.len();
        if n > MAX_POSET_SIZE {
            return Err(PosetError::TooManyElements(n));
        }
        let mut index = HashMap::with_capacity(n);
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(PosetError::NotAPartialOrder(format!("duplicate element {e:?}")));
            }
        }
        let w = words(n);
        let mut up = vec![vec![0u64; w]; n];
        for i in 0..n {
            for j in 0..n {
                if leq(&elements[i], &elements[j]) {
                    up[i][j / 64] |= 1 << (j % 64);
                }
            }
        }
        for i in 0..n {
            if !bit(&up[i], i) {
                return Err(PosetError::NotAPartialOrder(format!("{:?} ≰ itself", elements[i])));
            }
            for j in 0..n {
                if i == j || !bit(&up[i], j) {
                    continue;
                }
                if bit(&up[j], i) {
                    return Err(PosetError::NotAPartialOrder(format!(
                        "{:?} and {:?} are mutually comparable",
                        elements[i], elements[j]
                    )));
                }
                // transitivity: up(j) ⊆ up(i)
                if up[j].iter().zip(&up[i]).any(|(a, b)| a & !b != 0) {
                    return Err(PosetError::NotAPartialOrder("relation is not transitive".into()));
                }
            }
        }

        // Reorder along a linear extension: fewer elements above come later.
        let mut order: Vec<usize> = (0..n).collect();
        let height: Vec<u32> = up.iter().map(|s| s.iter().map(|x| x.count_ones()).sum()).collect();
        order.sort_by(|&a, &b| height[b].cmp(&height[a]).then(a.cmp(&b)));
        let elements: Vec<T> = order.iter().map(|&i| elements[i].clone()).collect();
        let index: HashMap<T, usize> = elements.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        let mut sorted_up = vec![vec![0u64; w]; n];
        for (new_i, &old_i) in order.iter().enumerate() {
            for (new_j, &old_j) in order.iter().enumerate() {
                if bit(&up[old_i], old_j) {
                    sorted_up[new_i][new_j / 64] |= 1 << (new_j % 64);
                }
            }
        }
        let up = sorted_up;

        let mut mobius = vec![vec![0i64; n]; n];
        for x in 0..n {
            mobius[x][x] = 1;
            for y in x + 1..n {
                if !bit(&up[x], y) {
                    continue;
                }
                let mut s = 0i64;
                for z in x..y {
                    if mobius[x][z] != 0 && bit(&up[z], y) {
                        s += mobius[x][z];
                    }
                }
                mobius[x][y] = -s;
            }
        }
        Ok(FinitePoset {
            elements,
            index,
            up,
            mobius,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        bit(&self.up[x], y)
    }

    pub fn mobius(&self, x: usize, y: usize) -> i64 {
        self.mobius[x][y]
    }

    pub fn mobius_of(&self, x: &T, y: &T) -> Result<i64, PosetError> {
        let i = self.index_of(x).ok_or_else(|| PosetError::NotMember(format!("{x:?}")))?;
        let j = self.index_of(y).ok_or_else(|| PosetError::NotMember(format!("{y:?}")))?;
        Ok(self.mobius(i, j))
    }

    /// Unique minimal element, if any.
    pub fn bottom(&self) -> Option<usize> {
        (!self.is_empty() && (0..self.len()).all(|y| self.leq(0, y))).then_some(0)
    }

    /// Unique maximal element, if any.
    pub fn top(&self) -> Option<usize> {
        let last = self.len().checked_sub(1)?;
        (0..self.len()).all(|x| self.leq(x, last)).then_some(last)
    }

    /// The same elements with the order reversed.
    pub fn dual(&self) -> FinitePoset<T> {
        let up = self.up.clone();
        let idx = self.index.clone();
        FinitePoset::new(self.elements.clone(), move |a, b| bit(&up[idx[b]], idx[a])).expect("dual of a poset")
    }

    /// Coordinatewise-ordered product; element `(p, q)` sits at index
    /// `i·|Q| + j` when `p`, `q` are at indices `i`, `j`.
    pub fn product<U: Clone + Eq + Hash + Debug>(&self, other: &FinitePoset<U>) -> Result<FinitePoset<(T, U)>, PosetError> {
        let n = self.len() * other.len();
        if n > MAX_POSET_SIZE {
            return Err(PosetError::TooManyElements(n));
        }
        let mut elements = Vec::with_capacity(n);
        for p in &self.elements {
            for q in &other.elements {
                elements.push((p.clone(), q.clone()));
            }
        }
        let prod = FinitePoset::new(elements, |(p1, q1), (p2, q2)| {
            self.leq(self.index[p1], self.index[p2]) && other.leq(other.index[q1], other.index[q2])
        })?;
        // Restore the row-major layout promised above.
        let reordered: Vec<(T, U)> = self
            .elements
            .iter()
            .flat_map(|p| other.elements.iter().map(move |q| (p.clone(), q.clone())))
            .collect();
        Ok(prod.relabel(reordered))
    }

    /// Same poset with elements listed in the given order.
    fn relabel(&self, order: Vec<T>) -> FinitePoset<T> {
        let perm: Vec<usize> = order.iter().map(|e| self.index[e]).collect();
        let n = perm.len();
        let mut up = vec![vec![0u64; words(n)]; n];
        let mut mobius = vec![vec![0i64; n]; n];
        for (i, &pi) in perm.iter().enumerate() {
            for (j, &pj) in perm.iter().enumerate() {
                if self.leq(pi, pj) {
                    up[i][j / 64] |= 1 << (j % 64);
                }
                mobius[i][j] = self.mobius[pi][pj];
            }
        }
        let index = order.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        FinitePoset {
            elements: order,
            index,
            up,
            mobius,
        }
    }

    /// `g(x) = ∑_{y ≤ x} f(y)`.
    pub fn zeta_sum(&self, f: &[i64]) -> Vec<i64> {
        (0..self.len())
            .map(|x| (0..=x).filter(|&y| self.leq(y, x)).map(|y| f[y]).sum())
            .collect()
    }

    /// `f(x) = ∑_{y ≤ x} g(y) μ(y, x)`, inverting [`zeta_sum`](Self::zeta_sum).
    pub fn mobius_inversion(&self, g: &[i64]) -> Vec<i64> {
        (0..self.len())
            .map(|x| (0..=x).filter(|&y| self.leq(y, x)).map(|y| g[y] * self.mobius(y, x)).sum())
            .collect()
    }

    /// Induced subposet on the given element indices.
    pub fn induced(&self, keep: &[usize]) -> Result<FinitePoset<T>, PosetError> {
        let elements = keep.iter().map(|&i| self.elements[i].clone()).collect();
        FinitePoset::new(elements, |a, b| self.leq(self.index[a], self.index[b]))
    }
}

impl FinitePoset<usize> {
    /// `0 < 1 < … < k−1`.
    pub fn chain(k: usize) -> Result<Self, PosetError> {
        FinitePoset::new((0..k).collect(), |a, b| a <= b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_mobius() {
        let c = FinitePoset::chain(4).unwrap();
        assert_eq!(c.mobius(0, 0), 1);
        assert_eq!(c.mobius(0, 1), -1);
        assert_eq!(c.mobius(0, 2), 0);
        assert_eq!(c.bottom(), Some(0));
        assert_eq!(c.top(), Some(3));
    }

    #[test]
    fn boolean_lattice_and_divisors() {
        let b3 = FinitePoset::new((0u32..8).collect(), |a, b| a & !b == 0).unwrap();
        let bot = b3.index_of(&0).unwrap();
        for x in 0u32..8 {
            let i = b3.index_of(&x).unwrap();
            let sign = if x.count_ones() % 2 == 0 { 1 } else { -1 };
            assert_eq!(b3.mobius(bot, i), sign);
        }
        let divisors: Vec<u32> = (1..=12).filter(|d| 12 % d == 0).collect();
        let div = FinitePoset::new(divisors, |a, b| b % a == 0).unwrap();
        assert_eq!(div.mobius_of(&1, &12).unwrap(), 0);
        assert_eq!(div.mobius_of(&1, &6).unwrap(), 1);
        assert_eq!(div.mobius_of(&2, &4).unwrap(), -1);
    }

    #[test]
    fn rejects_non_orders() {
        assert!(FinitePoset::new(vec![1, 2], |_, _| true).is_err());
        assert!(FinitePoset::new(vec![1, 2], |a, b| a < b).is_err());
        let r = FinitePoset::new(vec![0, 1, 2], |a, b| a == b || (*a, *b) == (0, 1) || (*a, *b) == (1, 2));
        assert!(matches!(r, Err(PosetError::NotAPartialOrder(_))));
    }

    #[test]
    fn inversion_and_duality() {
        let b3 = FinitePoset::new((0u32..8).collect(), |a, b| a & !b == 0).unwrap();
        let f: Vec<i64> = (0..8).map(|i| i * i - 3).collect();
        assert_eq!(b3.mobius_inversion(&b3.zeta_sum(&f)), f);
        let d = b3.dual();
        for x in 0u32..8 {
            for y in 0u32..8 {
                assert_eq!(d.mobius_of(&x, &y).unwrap(), b3.mobius_of(&y, &x).unwrap());
            }
        }
    }

    #[test]
    fn product_layout() {
        let c2 = FinitePoset::chain(2).unwrap();
        let c3 = FinitePoset::chain(3).unwrap();
        let p = c2.product(&c3).unwrap();
        assert_eq!(p.element(4), &(1, 1));
        assert_eq!(p.mobius(0, 4), 1);
    }
}

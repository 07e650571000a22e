//! Finite posets, set partitions and Möbius functions.

mod finite;
mod partition;

use thiserror::Error;

pub use finite::FinitePoset;
pub use partition::{all_partitions, full_set, subset_elements, subset_from_elements, Partition, Subset};

/// Largest ground set `[n]`.
pub const MAX_GROUND: u32 = 20;
/// Largest ground set whose partitions are enumerated outright.
pub const MAX_ENUMERATED_GROUND: usize = 10;
/// Largest explicitly stored poset.
pub const MAX_POSET_SIZE: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("empty ground set")]
    EmptyGround,
    #[error("ground set of size {0} exceeds the cap")]
    GroundTooLarge(u32),
    #[error("poset with {0} elements exceeds the cap of {MAX_POSET_SIZE}")]
    TooManyElements(usize),
    #[error("not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("{0} is not an element of the poset")]
    NotMember(String),
    #[error("the poset lacks a unique minimum or maximum")]
    MissingBounds,
    #[error("the poset needs at least two elements")]
    TooSmall,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown poset kind `{0}` (expected full, interval, one-cluster or minmax)")]
    UnknownKind(String),
}

/// Subposet of the partition lattice `Π(I)` under refinement, containing
/// the singletons partition and the one-block partition.
#[derive(Clone, Debug)]
pub struct PartitionPoset {
    ground: Subset,
    poset: FinitePoset<Partition>,
}

/// Named families of partition posets on `[n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PosetKind {
    Full,
    Interval,
    OneCluster,
    MinMax,
}

impl PosetKind {
    pub const ALL: [PosetKind; 4] = [PosetKind::Full, PosetKind::Interval, PosetKind::OneCluster, PosetKind::MinMax];

    pub fn name(self) -> &'static str {
        match self {
            PosetKind::Full => "full",
            PosetKind::Interval => "interval",
            PosetKind::OneCluster => "one-cluster",
            PosetKind::MinMax => "minmax",
        }
    }

    pub fn build(self, n: u32) -> Result<PartitionPoset, PosetError> {
        match self {
            PosetKind::Full => PartitionPoset::full(n),
            PosetKind::Interval => PartitionPoset::interval(n),
            PosetKind::OneCluster => PartitionPoset::one_cluster(n),
            PosetKind::MinMax => PartitionPoset::min_max(n),
        }
    }
}

impl std::str::FromStr for PosetKind {
    type Err = PosetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PosetKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| PosetError::UnknownKind(s.to_string()))
    }
}

fn check_n(n: u32) -> Result<Subset, PosetError> {
    if n < 1 {
        return Err(PosetError::EmptyGround);
    }
    if n > MAX_GROUND {
        return Err(PosetError::GroundTooLarge(n));
    }
    Ok(full_set(n))
}

impl PartitionPoset {
    /// Poset on the given partitions of `ground`, ordered by refinement.
    pub fn new(ground: Subset, elements: Vec<Partition>) -> Result<Self, PosetError> {
        if ground == 0 {
            return Err(PosetError::EmptyGround);
        }
        if let Some(p) = elements.iter().find(|p| p.ground() != ground) {
            return Err(PosetError::InvalidPartition(format!("{p} is not a partition of the ground set")));
        }
        let mut elements = elements;
        elements.sort_by(|a, b| b.num_blocks().cmp(&a.num_blocks()).then_with(|| a.cmp(b)));
        elements.dedup();
        for bound in [Partition::singletons(ground), Partition::one_block(ground)] {
            if !elements.contains(&bound) {
                return Err(PosetError::MissingBounds);
            }
        }
        let poset = FinitePoset::new(elements, |a, b| a.refines(b))?;
        Ok(PartitionPoset { ground, poset })
    }

    /// The whole partition lattice `Π([n])`.
    pub fn full(n: u32) -> Result<Self, PosetError> {
        let ground = check_n(n)?;
        PartitionPoset::new(ground, all_partitions(ground)?)
    }

    /// Partitions of `[n]` into runs of consecutive integers.
    pub fn interval(n: u32) -> Result<Self, PosetError> {
        let ground = check_n(n)?;
        let mut elements = Vec::new();
        for cuts in 0u32..(1 << (n - 1)) {
            let mut blocks = Vec::new();
            let mut current = 0;
            for i in 1..=n {
                current |= 1 << (i - 1);
                if i == n || cuts & (1 << (i - 1)) != 0 {
                    blocks.push(current);
                    current = 0;
                }
            }
            elements.push(Partition::new(blocks)?);
        }
        PartitionPoset::new(ground, elements)
    }

    /// Partitions of `[n]` with at most one block of size greater than one.
    pub fn one_cluster(n: u32) -> Result<Self, PosetError> {
        let ground = check_n(n)?;
        if n > 10 {
            return Err(PosetError::TooManyElements((1usize << n) - n as usize));
        }
        let mut elements = vec![Partition::singletons(ground)];
        for cluster in 1..=ground {
            if cluster.count_ones() < 2 {
                continue;
            }
            let mut blocks = vec![cluster];
            blocks.extend(subset_elements(ground & !cluster).map(|e| 1 << (e - 1)));
            elements.push(Partition::new(blocks)?);
        }
        PartitionPoset::new(ground, elements)
    }

    /// Just `0̂` and `1̂`.
    pub fn min_max(n: u32) -> Result<Self, PosetError> {
        let ground = check_n(n)?;
        PartitionPoset::new(ground, vec![Partition::singletons(ground), Partition::one_block(ground)])
    }

    /// `{π|_I : π ∈ self}`, a subposet of `Π(I)`.
    pub fn restrict(&self, subset: Subset) -> Result<PartitionPoset, PosetError> {
        if subset & self.ground == 0 {
            return Err(PosetError::EmptyGround);
        }
        let subset = subset & self.ground;
        if subset == self.ground {
            return Ok(self.clone());
        }
        let elements = self
            .poset
            .elements()
            .iter()
            .map(|p| p.restrict(subset))
            .collect::<Result<Vec<_>, _>>()?;
        PartitionPoset::new(subset, elements)
    }

    pub fn ground(&self) -> Subset {
        self.ground
    }

    pub fn poset(&self) -> &FinitePoset<Partition> {
        &self.poset
    }

    pub fn elements(&self) -> &[Partition] {
        self.poset.elements()
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.poset.index_of(p).is_some()
    }

    pub fn bottom(&self) -> Partition {
        Partition::singletons(self.ground)
    }

    pub fn top(&self) -> Partition {
        Partition::one_block(self.ground)
    }

    pub fn mobius(&self, x: &Partition, y: &Partition) -> Result<i64, PosetError> {
        self.poset.mobius_of(x, y)
    }

    /// `μ(π, 1̂)`.
    pub fn mobius_to_top(&self, x: &Partition) -> Result<i64, PosetError> {
        self.poset.mobius_of(x, &self.top())
    }
}

/// `∑_x μ(x, 1̂)`, which vanishes for every bounded poset with at least two
/// elements.
pub fn mobius_sum_check<T>(poset: &FinitePoset<T>) -> Result<i64, PosetError>
where
    T: Clone + Eq + std::hash::Hash + std::fmt::Debug,
{
    if poset.len() < 2 {
        return Err(PosetError::TooSmall);
    }
    let (Some(_), Some(top)) = (poset.bottom(), poset.top()) else {
        return Err(PosetError::MissingBounds);
    };
    Ok((0..poset.len()).map(|x| poset.mobius(x, top)).sum())
}

/// Exhaustively compares the Möbius function of `P × Q` with the product of
/// the factors' Möbius functions.
pub fn product_mobius_check<T, U>(p: &FinitePoset<T>, q: &FinitePoset<U>) -> Result<bool, PosetError>
where
    T: Clone + Eq + std::hash::Hash + std::fmt::Debug,
    U: Clone + Eq + std::hash::Hash + std::fmt::Debug,
{
    let prod = p.product(q)?;
    for a in 0..prod.len() {
        for b in 0..prod.len() {
            let (p1, q1) = (a / q.len(), a % q.len());
            let (p2, q2) = (b / q.len(), b % q.len());
            if prod.mobius(a, b) != p.mobius(p1, p2) * q.mobius(q1, q2) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn names(p: &PartitionPoset) -> Vec<String> {
        let mut v: Vec<String> = p.elements().iter().map(|e| e.to_string()).collect();
        v.sort();
        v
    }

    #[test]
    fn named_posets() {
        assert_eq!(names(&PartitionPoset::interval(3).unwrap()), ["123", "12|3", "1|23", "1|2|3"]);
        assert_eq!(
            names(&PartitionPoset::one_cluster(3).unwrap()),
            ["123", "12|3", "13|2", "1|23", "1|2|3"]
        );
        assert_eq!(PartitionPoset::min_max(1).unwrap().len(), 1);
        assert_eq!(PartitionPoset::min_max(4).unwrap().len(), 2);
        assert_eq!(PartitionPoset::interval(5).unwrap().len(), 16);
        assert_eq!(PartitionPoset::one_cluster(4).unwrap().len(), 12);
        assert!(matches!(PartitionPoset::full(0), Err(PosetError::EmptyGround)));
        assert!(matches!(PartitionPoset::interval(21), Err(PosetError::GroundTooLarge(21))));
        assert_eq!("one-cluster".parse::<PosetKind>().unwrap(), PosetKind::OneCluster);
        assert!("chain".parse::<PosetKind>().is_err());
    }

    #[test]
    fn mobius_values() {
        let full = PartitionPoset::full(3).unwrap();
        assert_eq!(full.mobius(&full.bottom(), &full.top()).unwrap(), 2);
        assert_eq!(full.mobius(&part("12|3"), &part("12|3")).unwrap(), 1);
        assert_eq!(full.mobius(&part("12|3"), &part("13|2")).unwrap(), 0);
        assert!(full.mobius(&part("12|3"), &part("12|34")).is_err());
        // (−1)^{|π|−1}(|π|−1)! on the full lattice
        let full4 = PartitionPoset::full(4).unwrap();
        for p in full4.elements() {
            let k = p.num_blocks() as i64;
            let fact: i64 = (1..k).product();
            let sign = if k % 2 == 1 { 1 } else { -1 };
            assert_eq!(full4.mobius_to_top(p).unwrap(), sign * fact, "{p}");
        }
        let interval = PartitionPoset::interval(4).unwrap();
        for p in interval.elements() {
            let sign = if p.num_blocks() % 2 == 1 { 1 } else { -1 };
            assert_eq!(interval.mobius_to_top(p).unwrap(), sign);
        }
    }

    #[test]
    fn mobius_sums_vanish() {
        assert_eq!(mobius_sum_check(PartitionPoset::full(3).unwrap().poset()).unwrap(), 0);
        assert_eq!(mobius_sum_check(PartitionPoset::interval(4).unwrap().poset()).unwrap(), 0);
        assert_eq!(mobius_sum_check(PartitionPoset::min_max(2).unwrap().poset()).unwrap(), 0);
        assert!(matches!(
            mobius_sum_check(PartitionPoset::full(1).unwrap().poset()),
            Err(PosetError::TooSmall)
        ));
    }

    #[test]
    fn restriction() {
        let full = PartitionPoset::full(3).unwrap();
        let r = full.restrict(subset_from_elements([1, 2])).unwrap();
        assert_eq!(names(&r), ["12", "1|2"]);
        let r = PartitionPoset::interval(3).unwrap().restrict(subset_from_elements([1, 3])).unwrap();
        assert_eq!(names(&r), ["13", "1|3"]);
        assert_eq!(names(&full.restrict(full_set(3)).unwrap()), names(&full));
        assert!(full.restrict(0).is_err());
        let single = full.restrict(subset_from_elements([2])).unwrap();
        assert_eq!(single.len(), 1);
    }

    #[test]
    fn products() {
        let c2 = FinitePoset::chain(2).unwrap();
        assert!(product_mobius_check(&c2, &c2).unwrap());
        let p2 = PartitionPoset::full(2).unwrap();
        let i3 = PartitionPoset::interval(3).unwrap();
        assert!(product_mobius_check(p2.poset(), i3.poset()).unwrap());
        let p3 = PartitionPoset::full(3).unwrap();
        assert!(product_mobius_check(p3.poset(), p3.poset()).unwrap());
    }

    #[test]
    fn missing_bounds_rejected() {
        let g = full_set(3);
        assert!(matches!(
            PartitionPoset::new(g, vec![Partition::singletons(g)]),
            Err(PosetError::MissingBounds)
        ));
    }
}

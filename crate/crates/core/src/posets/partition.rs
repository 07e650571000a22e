use std::fmt;
use std::str::FromStr;

use super::{PosetError, MAX_GROUND};

/// Bit `i − 1` stands for the element `i`.
pub type Subset = u32;

pub fn subset_elements(s: Subset) -> impl Iterator<Item = u32> {
    (0..32).filter(move |b| s & (1 << b) != 0).map(|b| b + 1)
}

pub fn subset_from_elements(elems: impl IntoIterator<Item = u32>) -> Subset {
    elems.into_iter().fold(0, |acc, e| acc | (1 << (e - 1)))
}

/// `{1, …, n}` as a subset.
pub fn full_set(n: u32) -> Subset {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Set partition of a finite ground set; blocks are kept sorted by their
/// smallest element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    ground: Subset,
    blocks: Vec<Subset>,
}

fn min_elem(s: Subset) -> u32 {
    s.trailing_zeros()
}

impl Partition {
    pub fn new(blocks: Vec<Subset>) -> Result<Self, PosetError> {
        let mut ground = 0;
        for &b in &blocks {
            if b == 0 {
                return Err(PosetError::InvalidPartition("empty block".into()));
            }
            if ground & b != 0 {
                return Err(PosetError::InvalidPartition("blocks overlap".into()));
            }
            ground |= b;
        }
        if ground == 0 {
            return Err(PosetError::EmptyGround);
        }
        if 32 - ground.leading_zeros() > MAX_GROUND {
            return Err(PosetError::GroundTooLarge(32 - ground.leading_zeros()));
        }
        let mut blocks = blocks;
        blocks.sort_by_key(|&b| min_elem(b));
        Ok(Partition { ground, blocks })
    }

    /// All singletons of `ground`: the minimum of the refinement order.
    pub fn singletons(ground: Subset) -> Self {
        Partition {
            ground,
            blocks: (0..32).filter(|b| ground & (1 << b) != 0).map(|b| 1 << b).collect(),
        }
    }

    /// The one-block partition: the maximum of the refinement order.
    pub fn one_block(ground: Subset) -> Self {
        Partition {
            ground,
            blocks: vec![ground],
        }
    }

    pub fn ground(&self) -> Subset {
        self.ground
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Whether every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.ground == other.ground
            && self
                .blocks
                .iter()
                .all(|&b| other.blocks.iter().any(|&c| b & !c == 0))
    }

    /// `{B ∩ I : B ∩ I ≠ ∅}`.
    pub fn restrict(&self, subset: Subset) -> Result<Partition, PosetError> {
        if self.ground & subset == 0 {
            return Err(PosetError::EmptyGround);
        }
        let mut blocks: Vec<Subset> = self.blocks.iter().map(|b| b & subset).filter(|&b| b != 0).collect();
        blocks.sort_by_key(|&b| min_elem(b));
        Ok(Partition {
            ground: self.ground & subset,
            blocks,
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = subset_elements(self.ground).any(|e| e > 9);
        for (k, &b) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str("|")?;
            }
            let elems: Vec<String> = subset_elements(b).map(|e| e.to_string()).collect();
            f.write_str(&elems.join(if wide { "," } else { "" }))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = PosetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PosetError::Parse(format!("`{s}` is not a partition"));
        let mut blocks = Vec::new();
        for part in s.trim().split('|') {
            let elems: Vec<u32> = if part.contains(',') {
                part.split(',')
                    .map(|e| e.trim().parse::<u32>().map_err(|_| bad()))
                    .collect::<Result<_, _>>()?
            } else {
                part.trim().chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect::<Result<_, _>>()?
            };
            if elems.iter().any(|&e| e == 0 || e > MAX_GROUND) {
                return Err(bad());
            }
            let b = subset_from_elements(elems.iter().copied());
            if b.count_ones() as usize != elems.len() {
                return Err(bad());
            }
            blocks.push(b);
        }
        Partition::new(blocks)
    }
}

/// Every set partition of `ground`.
pub fn all_partitions(ground: Subset) -> Result<Vec<Partition>, PosetError> {
    if ground == 0 {
        return Err(PosetError::EmptyGround);
    }
    let elems: Vec<u32> = (0..32).filter(|b| ground & (1 << b) != 0).collect();
    if elems.len() > super::MAX_ENUMERATED_GROUND {
        return Err(PosetError::GroundTooLarge(elems.len() as u32));
    }
    let mut out = Vec::new();
    let mut blocks: Vec<Subset> = Vec::new();
    fn rec(elems: &[u32], blocks: &mut Vec<Subset>, out: &mut Vec<Partition>) {
        let Some((&e, rest)) = elems.split_first() else {
            let ground = blocks.iter().fold(0, |a, b| a | b);
            out.push(Partition {
                ground,
                blocks: blocks.clone(),
            });
            return;
        };
        for i in 0..blocks.len() {
            blocks[i] |= 1 << e;
            rec(rest, blocks, out);
            blocks[i] &= !(1 << e);
        }
        blocks.push(1 << e);
        rec(rest, blocks, out);
        blocks.pop();
    }
    rec(&elems, &mut blocks, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form() {
        let p: Partition = "1|23".parse().unwrap();
        assert_eq!(p.num_blocks(), 2);
        assert_eq!(p.to_string(), "1|23");
        let q: Partition = "1,10|2".parse().unwrap();
        assert_eq!(q.to_string(), "1,10|2");
        let r: Partition = "32|1".parse().unwrap();
        assert_eq!(r.to_string(), "1|23");
        assert!("1|12".parse::<Partition>().is_err());
        assert!("1|x".parse::<Partition>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        let three = all_partitions(full_set(3)).unwrap();
        let mut names: Vec<String> = three.iter().map(|p| p.to_string()).collect();
        names.sort();
        assert_eq!(names, ["123", "12|3", "13|2", "1|23", "1|2|3"]);
        assert_eq!(all_partitions(subset_from_elements([7])).unwrap().len(), 1);
        // Bell numbers
        for (n, bell) in [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203)] {
            assert_eq!(all_partitions(full_set(n)).unwrap().len(), bell);
        }
        assert!(matches!(all_partitions(0), Err(PosetError::EmptyGround)));
    }

    #[test]
    fn refinement_and_restriction() {
        let a: Partition = "1|2|3".parse().unwrap();
        let b: Partition = "12|3".parse().unwrap();
        assert!(a.refines(&b));
        assert!(!b.refines(&a));
        assert!(b.refines(&b));
        let r = b.restrict(subset_from_elements([1, 3])).unwrap();
        assert_eq!(r.to_string(), "1|3");
        let c: Partition = "13|2".parse().unwrap();
        assert_eq!(c.restrict(subset_from_elements([2, 3])).unwrap(), "2|3".parse().unwrap());
    }
}

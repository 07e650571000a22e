use std::collections::{BTreeSet, HashMap};

use num::{BigInt, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Coeff, PolyError, RationalFunction, VarId};

/// Matrix of partial derivatives: entry `(i, j)` is `∂fs[i]/∂vars[j]`.
pub fn jacobian(fs: &[RationalFunction], vars: &[VarId]) -> Result<Vec<Vec<RationalFunction>>, PolyError> {
    fs.iter()
        .map(|f| vars.iter().map(|&v| f.partial_derivative(v)).collect())
        .collect()
}

/// Rank of a rational matrix by Gaussian elimination over ℚ.
pub fn rank_of_matrix(mut rows: Vec<Vec<Coeff>>) -> usize {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] * &inv;
            for c in col..ncols {
                let delta = &factor * &rows[rank][c];
                rows[r][c] -= delta;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// The unique solution of `A x = b` over ℚ, given the rows of `[A | b]`.
/// `None` if the system is inconsistent or underdetermined.
pub fn solve_unique(mut rows: Vec<Vec<Coeff>>, nvars: usize) -> Option<Vec<Coeff>> {
    let mut rank = 0;
    for col in 0..nvars {
        let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        for c in col..=nvars {
            rows[rank][c] *= &inv;
        }
        for r in 0..rows.len() {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in col..=nvars {
                let delta = &factor * &rows[rank][c];
                rows[r][c] -= delta;
            }
        }
        rank += 1;
    }
    if rows[rank..].iter().any(|r| !r[nvars].is_zero()) {
        return None;
    }
    Some(rows[..nvars].iter().map(|r| r[nvars].clone()).collect())
}

/// Exact rank of `m` evaluated at `point`.
pub fn rank_at_point(m: &[Vec<RationalFunction>], point: &HashMap<VarId, Coeff>) -> Result<usize, PolyError> {
    let rows = m
        .iter()
        .map(|row| row.iter().map(|f| f.evaluate(point)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(rank_of_matrix(rows))
}

/// Sampling parameters for [`exact_generic_rank`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankConfig {
    /// Number of successful evaluations whose maximum is reported.
    pub samples: usize,
    /// Coordinates are drawn uniformly from `[-bound, bound]`.
    pub bound: i64,
    pub seed: u64,
    /// Total evaluation attempts allowed, counting ones that hit a pole.
    pub max_attempts: usize,
}

impl Default for RankConfig {
    fn default() -> Self {
        RankConfig {
            samples: 5,
            bound: 10_000,
            seed: 0,
            max_attempts: 100,
        }
    }
}

impl RankConfig {
    pub fn with_seed(seed: u64) -> Self {
        RankConfig {
            seed,
            ..Self::default()
        }
    }
}

/// Maximum rank over random integer points. This is a certified lower bound
/// on the generic rank and equals it with high probability.
pub fn exact_generic_rank(m: &[Vec<RationalFunction>], config: &RankConfig) -> Result<usize, PolyError> {
    let vars: BTreeSet<VarId> = m.iter().flatten().flat_map(|f| f.vars()).collect();
    let max_possible = m.len().min(m.first().map(|r| r.len()).unwrap_or(0));
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut best = 0;
    let mut done = 0;
    let mut attempts = 0;
    while done < config.samples {
        if attempts == config.max_attempts {
            return Err(PolyError::RankSampling { attempts });
        }
        attempts += 1;
        let point: HashMap<VarId, Coeff> = vars
            .iter()
            .map(|&v| (v, Coeff::from_integer(BigInt::from(rng.gen_range(-config.bound..=config.bound)))))
            .collect();
        match rank_at_point(m, &point) {
            Ok(r) => {
                best = best.max(r);
                done += 1;
                if best == max_possible {
                    break;
                }
            }
            Err(PolyError::DivisionByZero(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::super::{parse_rational, q, Ring};
    use super::*;

    fn rf(ring: &Ring, s: &str) -> RationalFunction {
        parse_rational(ring, s).unwrap()
    }

    #[test]
    fn jacobian_examples() {
        let ring = Ring::new();
        let t1 = ring.var("t_1").unwrap();
        let t2 = ring.var("t_2").unwrap();
        let j = jacobian(&[rf(&ring, "t_1*t_2")], &[t1, t2]).unwrap();
        assert_eq!(j, vec![vec![rf(&ring, "t_2"), rf(&ring, "t_1")]]);
        let t = ring.var("t").unwrap();
        assert_eq!(jacobian(&[rf(&ring, "t")], &[t]).unwrap(), vec![vec![rf(&ring, "1")]]);
        assert_eq!(jacobian(&[rf(&ring, "1/t")], &[t]).unwrap(), vec![vec![rf(&ring, "-1/t^2")]]);
    }

    #[test]
    fn unique_solutions() {
        // x + y = 3, x - y = 1, 2x = 4
        let rows = vec![vec![q(1), q(1), q(3)], vec![q(1), q(-1), q(1)], vec![q(2), q(0), q(4)]];
        assert_eq!(solve_unique(rows, 2), Some(vec![q(2), q(1)]));
        assert_eq!(solve_unique(vec![vec![q(1), q(1), q(3)]], 2), None);
        assert_eq!(solve_unique(vec![vec![q(1), q(1)], vec![q(1), q(2)]], 1), None);
    }

    #[test]
    fn rank_examples() {
        let ring = Ring::new();
        let t = ring.var("t").unwrap();
        let m = vec![vec![rf(&ring, "t"), rf(&ring, "0")], vec![rf(&ring, "0"), rf(&ring, "t")]];
        assert_eq!(rank_at_point(&m, &HashMap::from([(t, q(1))])).unwrap(), 2);
        assert_eq!(rank_at_point(&m, &HashMap::from([(t, q(0))])).unwrap(), 0);
        let m = vec![vec![rf(&ring, "t"), rf(&ring, "t")], vec![rf(&ring, "2*t"), rf(&ring, "2*t")]];
        assert_eq!(exact_generic_rank(&m, &RankConfig::default()).unwrap(), 1);
    }

    #[test]
    fn sampling_gives_up_on_poles_everywhere() {
        let ring = Ring::new();
        let m = vec![vec![rf(&ring, "1/x")]];
        let config = RankConfig {
            bound: 0,
            max_attempts: 7,
            ..RankConfig::default()
        };
        assert_eq!(exact_generic_rank(&m, &config), Err(PolyError::RankSampling { attempts: 7 }));
    }
}

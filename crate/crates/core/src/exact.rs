//! Exact integer linear algebra: Hermite normal form for lattice
//! membership / canonical coset representatives, and fraction-free
//! (Bareiss) rank computation.
//!
//! Everything here is generic over a signed integer scalar so the same
//! kernel runs on machine integers for the small character-lattice work
//! and on arbitrary-precision integers for the cohomology rank oracle.
//! See the crate root for the concrete aliases in use.

use num_integer::Integer;
use num_traits::Signed;

/// Scalar bound for the exact kernels: any signed integer type
/// (`i64`, `i128`, `num_bigint::BigInt`, ...).
pub trait ExactInt: Integer + Signed + Clone + std::fmt::Debug {}
impl<T: Integer + Signed + Clone + std::fmt::Debug> ExactInt for T {}

/// Row-style Hermite normal form of an integer lattice given by
/// generating rows. Pivots are positive, entries below a pivot are
/// zero, entries above are reduced into `[0, pivot)`, so the form is
/// unique and coset reduction against it is canonical.
#[derive(Debug, Clone)]
pub struct Hnf<I> {
    rows: Vec<Vec<I>>,
    pivots: Vec<usize>,
    cols: usize,
}

impl<I: ExactInt> Hnf<I> {
    /// Computes the HNF of the lattice spanned by `generators`
    /// (rows, all of the same length).
    pub fn new(generators: Vec<Vec<I>>, cols: usize) -> Self {
        let mut rows: Vec<Vec<I>> = generators
            .into_iter()
            .inspect(|r| assert_eq!(r.len(), cols))
            .collect();
        let mut pivots = Vec::new();
        let mut frontier = 0;
        for col in 0..cols {
            loop {
                // Pull the row with the smallest nonzero entry in this
                // column up to the frontier, then reduce the others.
                let best = (frontier..rows.len())
                    .filter(|&i| !rows[i][col].is_zero())
                    .min_by_key(|&i| rows[i][col].abs());
                let Some(best) = best else { break };
                rows.swap(frontier, best);
                let mut clean = true;
                for i in frontier + 1..rows.len() {
                    if rows[i][col].is_zero() {
                        continue;
                    }
                    let q = rows[i][col].div_floor(&rows[frontier][col]);
                    row_submul(&mut rows, i, frontier, &q);
                    if !rows[i][col].is_zero() {
                        clean = false;
                    }
                }
                if clean {
                    break;
                }
            }
            if frontier < rows.len() && !rows[frontier][col].is_zero() {
                if rows[frontier][col].is_negative() {
                    for x in rows[frontier].iter_mut() {
                        *x = -x.clone();
                    }
                }
                for i in 0..frontier {
                    let q = rows[i][col].div_floor(&rows[frontier][col]);
                    row_submul(&mut rows, i, frontier, &q);
                }
                pivots.push(col);
                frontier += 1;
            }
        }
        rows.truncate(frontier);
        Hnf { rows, pivots, cols }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Reduces `v` to the canonical representative of its coset modulo
    /// the lattice: each pivot coordinate lands in `[0, pivot)`.
    /// Idempotent by construction.
    pub fn reduce(&self, v: &[I]) -> Vec<I> {
        assert_eq!(v.len(), self.cols);
        let mut v = v.to_vec();
        for (ri, &col) in self.pivots.iter().enumerate() {
            let q = v[col].div_floor(&self.rows[ri][col]);
            if q.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                v[j] = v[j].clone() - q.clone() * self.rows[ri][j].clone();
            }
        }
        v
    }

    /// Lattice membership test.
    pub fn contains(&self, v: &[I]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }
}

fn row_submul<I: ExactInt>(rows: &mut [Vec<I>], target: usize, source: usize, q: &I) {
    if q.is_zero() {
        return;
    }
    for j in 0..rows[target].len() {
        let s = rows[source][j].clone();
        rows[target][j] = rows[target][j].clone() - q.clone() * s;
    }
}

/// Rank of an integer matrix by fraction-free Gaussian elimination
/// (Bareiss). All intermediate values stay integral; with a big-integer
/// scalar this is exact for any input.
pub fn rank<I: ExactInt>(mut m: Vec<Vec<I>>) -> usize {
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut prev = I::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        for i in rank + 1..nrows {
            for j in col + 1..ncols {
                // Exact by the Bareiss identity: prev divides the
                // two-by-two cross term.
                let num = m[rank][col].clone() * m[i][j].clone()
                    - m[i][col].clone() * m[rank][j].clone();
                m[i][j] = num / prev.clone();
            }
            m[i][col] = I::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// A reduced fraction in `[0, 1)`, used for exact root-of-unity phases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase {
    num: i64,
    den: i64,
}

impl Phase {
    /// `num/den` taken modulo 1, reduced to lowest terms. `den` must be positive.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den > 0, "phase denominator must be positive");
        let num = num.rem_euclid(den);
        let g = num.gcd(&den);
        Phase {
            num: num / g,
            den: den / g,
        }
    }

    pub fn zero() -> Self {
        Phase { num: 0, den: 1 }
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }
}

impl std::fmt::Display for Phase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.num == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn hnf_i64(rows: Vec<Vec<i64>>, cols: usize) -> Hnf<i64> {
        Hnf::new(rows, cols)
    }

    #[test]
    fn hnf_of_simple_lattice() {
        // rows (-1, 1, -1) and (-1, -1, 1): index 2 stays free
        let h = hnf_i64(vec![vec![-1, 1, -1], vec![-1, -1, 1]], 3);
        assert_eq!(h.rank(), 2);
        assert!(h.contains(&[-1, 1, -1]));
        assert!(h.contains(&[-2, 0, 0]));
        assert!(!h.contains(&[0, 1, 0]));
    }

    #[test]
    fn reduce_is_idempotent() {
        let h = hnf_i64(vec![vec![2, -1, -1], vec![-1, 2, -1]], 3);
        for v in [[5, -3, 11], [0, 0, 0], [-7, 2, 1]] {
            let r1 = h.reduce(&v);
            let r2 = h.reduce(&r1);
            assert_eq!(r1, r2);
        }
    }

    #[test]
    fn reduce_separates_cosets() {
        let h = hnf_i64(vec![vec![-1, 2, 0, 0], vec![-1, 0, 2, 0], vec![-1, 0, 0, 2]], 4);
        // v and v + generator reduce identically
        let v = vec![3, -1, 4, 1];
        let shifted = vec![2, 1, 4, 1];
        assert_eq!(h.reduce(&v), h.reduce(&shifted));
    }

    #[test]
    fn bareiss_rank_examples() {
        assert_eq!(rank::<i64>(vec![]), 0);
        assert_eq!(rank(vec![vec![0i64, 0], vec![0, 0]]), 0);
        assert_eq!(rank(vec![vec![1i64, 2], vec![2, 4]]), 1);
        assert_eq!(rank(vec![vec![2i64, 0, 1], vec![0, 3, 1], vec![2, 3, 2]]), 2);
        assert_eq!(
            rank(vec![
                vec![BigInt::from(3), BigInt::from(1)],
                vec![BigInt::from(1), BigInt::from(2)],
            ]),
            2
        );
    }

    #[test]
    fn phase_normalizes_mod_one() {
        assert_eq!(Phase::new(7, 3), Phase::new(1, 3));
        assert_eq!(Phase::new(-1, 4), Phase::new(3, 4));
        assert_eq!(Phase::new(4, 2), Phase::zero());
        assert_eq!(Phase::new(2, 6), Phase::new(1, 3));
        assert!(Phase::new(0, 5).is_zero());
    }
}

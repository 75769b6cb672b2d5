//! Rational simplicial homology.

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::linalg::{SparseColumn, SparseMatrix};
use crate::scalar::ExactScalar;

/// Boundary matrices of a complex. `boundaries[d]` maps d-chains to (d-1)-chains; its rows and
/// columns follow the canonical order of the (d-1)- and d-simplices. `boundaries[0]` has no rows.
#[derive(Clone, Debug)]
pub struct ChainComplex<T> {
    pub basis_sizes: Vec<usize>,
    pub boundaries: Vec<SparseMatrix<T>>,
}

impl<T: ExactScalar> ChainComplex<T> {
    /// Boundary maps with the sign `(-1)^i` on the face omitting the i-th (sorted) vertex.
    pub fn new(k: &SimplicialComplex) -> Self {
        let top = k.dim().map_or(0, |d| d + 1);
        let basis_sizes: Vec<usize> = (0..top).map(|d| k.count_of_dim(d)).collect();
        let mut boundaries = Vec::with_capacity(top);
        for d in 0..top {
            if d == 0 {
                boundaries.push(SparseMatrix::new(0, vec![Vec::new(); basis_sizes[0]]));
                continue;
            }
            let row_offset = k.dim_range(d - 1).start;
            let columns = k
                .simplices_of_dim(d)
                .iter()
                .map(|s| {
                    let mut col: SparseColumn<T> = s
                        .facets()
                        .iter()
                        .enumerate()
                        .map(|(i, f)| (k.id_of(f).expect("face-closed") - row_offset, T::from_sign(i % 2 == 1)))
                        .collect();
                    col.sort_unstable_by_key(|(r, _)| *r);
                    col
                })
                .collect();
            boundaries.push(SparseMatrix::new(basis_sizes[d - 1], columns));
        }
        ChainComplex { basis_sizes, boundaries }
    }

    /// Check that every composite of consecutive boundary maps vanishes.
    pub fn boundary_squares_to_zero(&self) -> bool {
        self.boundaries.windows(2).all(|w| w[0].product_is_zero(&w[1]))
    }
}

pub fn chain_complex(k: &SimplicialComplex) -> ChainComplex<crate::Rational> {
    ChainComplex::new(k)
}

/// Betti numbers over the rationals, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiVector {
    pub b: Vec<usize>,
    pub total: usize,
}

impl BettiVector {
    pub fn from_numbers(mut b: Vec<usize>) -> Self {
        while b.last() == Some(&0) {
            b.pop();
        }
        let total = b.iter().sum();
        BettiVector { b, total }
    }

    /// `b_d`, zero past the stored range.
    pub fn get(&self, d: usize) -> usize {
        self.b.get(d).copied().unwrap_or(0)
    }

    pub fn alternating_sum(&self) -> i64 {
        self.b.iter().enumerate().map(|(d, &x)| if d % 2 == 0 { x as i64 } else { -(x as i64) }).sum()
    }

    /// Betti vector of a product space over a field.
    pub fn kunneth(&self, other: &BettiVector) -> BettiVector {
        if self.b.is_empty() || other.b.is_empty() {
            return BettiVector::from_numbers(Vec::new());
        }
        let mut out = vec![0; self.b.len() + other.b.len() - 1];
        for (i, x) in self.b.iter().enumerate() {
            for (j, y) in other.b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        BettiVector::from_numbers(out)
    }

    /// Componentwise sum (Betti vector of a disjoint union).
    pub fn sum(&self, other: &BettiVector) -> BettiVector {
        let n = self.b.len().max(other.b.len());
        BettiVector::from_numbers((0..n).map(|d| self.get(d) + other.get(d)).collect())
    }
}

/// `betti` in a report-friendly shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReport {
    pub betti: Vec<usize>,
    pub total: usize,
    pub euler: i64,
}

impl BettiReport {
    pub fn new(k: &SimplicialComplex, b: &BettiVector) -> Self {
        BettiReport { betti: b.b.clone(), total: b.total, euler: k.euler_characteristic() }
    }
}

fn boundary_ranks(k: &SimplicialComplex, threads: usize) -> Vec<usize> {
    let chains: ChainComplex<i64> = ChainComplex::new(k);
    if threads <= 1 || chains.boundaries.len() < 2 {
        return chains.boundaries.iter().map(SparseMatrix::rank).collect();
    }
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut ranks = vec![0; chains.boundaries.len()];
    let results = std::sync::Mutex::new(&mut ranks);
    std::thread::scope(|scope| {
        for _ in 0..threads.min(chains.boundaries.len()) {
            scope.spawn(|| loop {
                let d = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                let Some(m) = chains.boundaries.get(d) else { break };
                let r = m.rank();
                results.lock().expect("rank worker panicked")[d] = r;
            });
        }
    });
    ranks
}

/// Rational Betti numbers: `b_d = dim C_d - rank ∂_d - rank ∂_{d+1}`.
pub fn betti(k: &SimplicialComplex) -> BettiVector {
    betti_with_threads(k, 1)
}

/// [`betti`] with the boundary ranks of different dimensions computed on up to `threads`
/// threads. The result does not depend on the thread count.
pub fn betti_with_threads(k: &SimplicialComplex, threads: usize) -> BettiVector {
    let ranks = boundary_ranks(k, threads);
    let top = ranks.len();
    let b = (0..top)
        .map(|d| {
            let next = if d + 1 < top { ranks[d + 1] } else { 0 };
            k.count_of_dim(d) - ranks[d] - next
        })
        .collect();
    BettiVector::from_numbers(b)
}

/// Betti numbers `b_0..=b_max` only, ignoring cells above dimension `max + 1`.
pub fn betti_up_to(k: &SimplicialComplex, max: usize) -> Vec<usize> {
    let truncated = k.skeleton(max + 1);
    let b = betti(&truncated);
    (0..=max).map(|d| b.get(d)).collect()
}

pub fn euler_characteristic(k: &SimplicialComplex) -> i64 {
    k.euler_characteristic()
}

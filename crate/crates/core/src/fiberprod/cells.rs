//! Fiber powers as regular cell complexes.
//!
//! The open cells of `W_p` are the tuples `(ρ_0..ρ_p)` of domain simplices with one common
//! image `τ = f(ρ_i)`; the closed cell is the convex polytope of tuples of points with equal
//! image, of dimension `Σ dim ρ_i - p dim τ`. Faces are the cells below componentwise.
//! Incidence numbers of a regular complex are determined up to orientation by `∂∂ = 0`, and
//! are propagated across the facets of each cell through shared ridges.

use std::collections::HashMap;

use crate::complex::{Simplex, SimplicialMap};
use crate::error::{Error, Result};
use crate::homology::BettiVector;
use crate::linalg::{SparseColumn, SparseMatrix};

/// Cellular chain complex of a fiber power, truncated at a dimension bound.
#[derive(Clone, Debug)]
pub struct FiberCells {
    pub p: usize,
    /// Cells by dimension, each a tuple of domain simplex ids.
    pub cells: Vec<Vec<Vec<usize>>>,
    /// `boundaries[d]` maps d-cells to (d-1)-cells, entries ±1.
    pub boundaries: Vec<SparseMatrix<i64>>,
    pub max_dim: Option<usize>,
}

impl FiberCells {
    pub fn cell_count(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    /// Betti numbers; with a dimension bound `d` only `b_0..b_{d-1}` are kept.
    pub fn betti(&self) -> BettiVector {
        let ranks: Vec<usize> = self.boundaries.iter().map(SparseMatrix::rank).collect();
        let top = self.cells.len();
        let keep = self.max_dim.map_or(top, |d| d.min(top));
        let b = (0..keep)
            .map(|d| {
                let next = if d + 1 < top { ranks[d + 1] } else { 0 };
                self.cells[d].len() - ranks[d] - next
            })
            .collect();
        BettiVector::from_numbers(b)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells.iter().enumerate().map(|(d, c)| if d % 2 == 0 { c.len() as i64 } else { -(c.len() as i64) }).sum()
    }
}

/// Cells of the `(p+1)`-fold fiber power up to dimension `max_dim` (all cells if `None`).
pub fn fiber_power_cells(f: &SimplicialMap, p: usize, max_dim: Option<usize>, cap: usize) -> Result<FiberCells> {
    let k = f.domain();
    let l = f.codomain();
    let mut over: Vec<Vec<usize>> = vec![Vec::new(); l.len()];
    for id in 0..k.len() {
        over[f.image_id(id)].push(id);
    }

    let mut cells: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut count = 0usize;
    for (tau, members) in over.iter().enumerate() {
        if members.is_empty() {
            continue;
        }
        let tau_dim = l.simplex(tau).dim();
        let mut tuple = Vec::with_capacity(p + 1);
        enumerate(k, members, p + 1, tau_dim * p, max_dim, &mut tuple, &mut cells, &mut count, cap)?;
    }
    for level in &mut cells {
        level.sort();
    }
    let index: Vec<HashMap<&[usize], usize>> =
        cells.iter().map(|level| level.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect()).collect();

    let mut boundaries = Vec::with_capacity(cells.len());
    boundaries.push(SparseMatrix::new(0, vec![Vec::new(); cells.first().map_or(0, Vec::len)]));
    for d in 1..cells.len() {
        let mut columns = Vec::with_capacity(cells[d].len());
        for cell in &cells[d] {
            let facets: Vec<usize> = facets(f, cell)
                .iter()
                .map(|t| *index[d - 1].get(t.as_slice()).expect("facet is a cell"))
                .collect();
            let signs = if d == 1 {
                assert_eq!(facets.len(), 2, "a 1-cell has two endpoints");
                vec![1, -1]
            } else {
                orient(&facets, &boundaries[d - 1])?
            };
            let mut col: SparseColumn<i64> = facets.into_iter().zip(signs).collect();
            col.sort_unstable_by_key(|(r, _)| *r);
            columns.push(col);
        }
        boundaries.push(SparseMatrix::new(cells[d - 1].len(), columns));
    }
    Ok(FiberCells { p, cells, boundaries, max_dim })
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    k: &crate::complex::SimplicialComplex,
    members: &[usize],
    len: usize,
    offset: usize,
    max_dim: Option<usize>,
    tuple: &mut Vec<usize>,
    cells: &mut Vec<Vec<Vec<usize>>>,
    count: &mut usize,
    cap: usize,
) -> Result<()> {
    let dim_sum: usize = tuple.iter().map(|&s| k.simplex(s).dim()).sum();
    if tuple.len() == len {
        let d = dim_sum - offset;
        if max_dim.is_some_and(|m| d > m) {
            return Ok(());
        }
        *count += 1;
        if *count > cap {
            return Err(Error::BudgetExceeded { cap });
        }
        if cells.len() <= d {
            cells.resize(d + 1, Vec::new());
        }
        cells[d].push(tuple.clone());
        return Ok(());
    }
    for &m in members {
        // every remaining coordinate contributes at least dim τ
        let tau_dim = offset / (len - 1).max(1);
        let least = dim_sum + k.simplex(m).dim() + (len - tuple.len() - 1) * tau_dim;
        if len > 1 && max_dim.is_some_and(|md| least > offset + md) {
            continue;
        }
        tuple.push(m);
        enumerate(k, members, len, offset, max_dim, tuple, cells, count, cap)?;
        tuple.pop();
    }
    Ok(())
}

// Codimension-one faces: drop a vertex from one coordinate keeping the image, or pass to a
// facet of τ when every coordinate loses exactly one vertex.
fn facets(f: &SimplicialMap, cell: &[usize]) -> Vec<Vec<usize>> {
    let k = f.domain();
    let images = f.vertex_images();
    let tau = f.image_of(cell[0]).clone();
    let mut out = Vec::new();
    for (i, &s) in cell.iter().enumerate() {
        let sigma = k.simplex(s);
        for v in sigma.vertices() {
            if sigma.vertices().iter().filter(|&&u| images[u] == images[*v]).count() > 1 {
                let face = Simplex::new(sigma.vertices().iter().copied().filter(|u| u != v));
                let mut t = cell.to_vec();
                t[i] = k.id_of(&face).expect("face-closed");
                out.push(t);
            }
        }
    }
    if tau.len() > 1 {
        for &u in tau.vertices() {
            let mut t = Vec::with_capacity(cell.len());
            for &s in cell {
                let sigma = k.simplex(s);
                if sigma.vertices().iter().filter(|&&v| images[v] == u).count() != 1 {
                    break;
                }
                let face = Simplex::new(sigma.vertices().iter().copied().filter(|&v| images[v] != u));
                t.push(k.id_of(&face).expect("face-closed"));
            }
            if t.len() == cell.len() {
                out.push(t);
            }
        }
    }
    out
}

// Signs on the facets of a cell making its boundary a cycle. Each ridge lies in exactly two
// facets, so the sign of one facet fixes its neighbours.
fn orient(facets: &[usize], lower: &SparseMatrix<i64>) -> Result<Vec<i64>> {
    let mut by_ridge: HashMap<usize, Vec<(usize, i64)>> = HashMap::new();
    for (j, &fct) in facets.iter().enumerate() {
        for (r, a) in &lower.columns[fct] {
            by_ridge.entry(*r).or_default().push((j, *a));
        }
    }
    let mut signs = vec![0i64; facets.len()];
    signs[0] = 1;
    let mut stack = vec![0usize];
    while let Some(j) = stack.pop() {
        for (r, a) in &lower.columns[facets[j]] {
            for &(other, b) in &by_ridge[r] {
                if other == j {
                    continue;
                }
                let want = -signs[j] * a * b;
                if signs[other] == 0 {
                    signs[other] = want;
                    stack.push(other);
                } else if signs[other] != want {
                    return Err(Error::InvalidParams("fiber power cell is not a regular polytope".into()));
                }
            }
        }
    }
    debug_assert!(signs.iter().all(|&s| s != 0));
    Ok(signs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{check_simplicial, validate_complex, SimplicialComplex};
    use crate::fixtures::{boundary_simplex, constant_circle, torus_complex};
    use crate::homology::betti;

    fn check(f: &SimplicialMap, p: usize) -> FiberCells {
        let c = fiber_power_cells(f, p, None, usize::MAX).unwrap();
        for w in c.boundaries.windows(2) {
            assert!(w[0].product_is_zero(&w[1]));
        }
        c
    }

    #[test]
    fn identity_power_is_the_domain() {
        let f = SimplicialMap::identity(torus_complex());
        for p in 0..3 {
            let c = check(&f, p);
            assert_eq!(c.betti().b, vec![1, 2, 1]);
        }
    }

    #[test]
    fn constant_circle_powers_are_tori() {
        let f = constant_circle();
        assert_eq!(check(&f, 1).betti().b, vec![1, 2, 1]);
        assert_eq!(check(&f, 2).betti().b, vec![1, 3, 3, 1]);
    }

    #[test]
    fn fold_of_an_edge() {
        let edge: SimplicialComplex = validate_complex(2, vec![vec![0, 1]], true).unwrap();
        let path = validate_complex(3, vec![vec![0, 1], vec![1, 2]], true).unwrap();
        let f = check_simplicial(path, edge, vec![0, 1, 0]).unwrap();
        // pairs of points over the same height: four segments glued into a contractible X
        let c = check(&f, 1);
        assert_eq!(c.betti().b, vec![1]);
        assert_eq!(c.euler_characteristic(), 1);
    }

    #[test]
    fn truncation_keeps_low_betti_numbers() {
        let f = SimplicialMap::constant(boundary_simplex(3));
        let full = check(&f, 1);
        assert_eq!(full.betti().b, vec![1, 0, 2, 0, 1]);
        let low = fiber_power_cells(&f, 1, Some(2), usize::MAX).unwrap();
        assert_eq!((low.betti().get(0), low.betti().get(1)), (1, 0));
        assert_eq!(betti(f.domain()).kunneth(&betti(f.domain())), full.betti());
    }
}

//! Fiber powers of simplicial maps and the descent inequality.
//!
//! The `(p+1)`-fold fiber product `W_p = {(x_0..x_p) : f(x_0) = ... = f(x_p)}` is covered by the
//! closed convex cells `P(σ_0..σ_p) = {x ∈ σ_0 × ... × σ_p : f(x_i) equal}` over tuples of
//! maximal simplices. Because `f` is affine on each simplex and simplicial, such a cell is
//! nonempty iff the image simplices `f(σ_i)` share a point, i.e. their vertex sets intersect;
//! a family of cells meets iff the componentwise intersections `ρ_i` are nonempty and the
//! `f(ρ_i)` share a vertex. All intersections are convex, so the nerve of the cover is
//! homotopy equivalent to `W_p`.
//!
//! The number of nerve simplices grows very fast with `p` and with the overlap of the cover.
//! Two knobs keep it in check: [`CoverMode::MaximalCells`] replaces the tuple cover by the
//! maximal cells of the polyhedral structure of `W_p` (every tuple cell equals one of them or
//! lies inside one), and `max_dim` builds only the skeleton needed for the requested Betti
//! numbers. The cell cap turns runaway enumeration into [`Error::BudgetExceeded`].
//!
//! The same polyhedral structure also gives a much smaller chain complex directly
//! ([`fiber_power_cells`]); the descent check uses it by default and the nerve on request.

mod cells;

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::complex::{Simplex, SimplicialComplex, SimplicialMap};
use crate::error::{Error, Result};
use crate::homology::{betti, BettiVector};
use crate::reeb::reeb_space;
use crate::DEFAULT_CELL_CAP;

pub use cells::{fiber_power_cells, FiberCells};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverMode {
    /// One cover element per tuple of maximal simplices with intersecting images.
    MaximalTuples,
    /// Deduplicated tuple cells, keeping only the maximal ones.
    MaximalCells,
}

#[derive(Clone, Debug)]
pub struct NerveOptions {
    pub mode: CoverMode,
    pub cell_cap: usize,
    /// Build nerve simplices up to this dimension only.
    pub max_dim: Option<usize>,
}

impl Default for NerveOptions {
    fn default() -> Self {
        NerveOptions { mode: CoverMode::MaximalTuples, cell_cap: DEFAULT_CELL_CAP, max_dim: None }
    }
}

/// Nerve of a closed convex cover of a fiber power.
#[derive(Clone, Debug)]
pub struct NerveComplex {
    pub p: usize,
    /// Cover elements as `(p+1)`-tuples of domain simplex ids.
    pub cover_index: Vec<Vec<usize>>,
    pub nerve: SimplicialComplex,
    /// Dimension bound used when building the nerve, if any.
    pub skeleton: Option<usize>,
}

impl NerveComplex {
    /// Betti numbers of the fiber power. With a truncated skeleton of dimension `d` only
    /// `b_0..b_{d-1}` are meaningful and the rest are dropped.
    pub fn betti(&self) -> BettiVector {
        let b = betti(&self.nerve);
        match self.skeleton {
            Some(d) => BettiVector::from_numbers((0..d).map(|i| b.get(i)).collect()),
            None => b,
        }
    }
}

/// Nerve of the cover of the `(p+1)`-fold fiber power by maximal-simplex tuples.
pub fn fiber_power_nerve(f: &SimplicialMap, p: usize) -> Result<NerveComplex> {
    fiber_power_nerve_with(f, p, &NerveOptions::default())
}

fn intersect(a: &Simplex, b: &Simplex) -> Option<Simplex> {
    a.intersection(b)
}

fn tuple_cover(f: &SimplicialMap, p: usize) -> Vec<(Vec<usize>, Simplex)> {
    let k = f.domain();
    let maximal = k.maximal_simplices();
    let mut out = Vec::new();
    let mut tuple = Vec::with_capacity(p + 1);
    fn rec(
        f: &SimplicialMap,
        maximal: &[usize],
        p: usize,
        common: Option<Simplex>,
        tuple: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, Simplex)>,
    ) {
        if tuple.len() == p + 1 {
            out.push((tuple.clone(), common.expect("nonempty tuple")));
            return;
        }
        for &m in maximal {
            let image = f.image_of(m);
            let next = match &common {
                None => Some(image.clone()),
                Some(c) => intersect(c, image),
            };
            if next.is_some() {
                tuple.push(m);
                rec(f, maximal, p, next, tuple, out);
                tuple.pop();
            }
        }
    }
    if !maximal.is_empty() {
        rec(f, &maximal, p, None, &mut tuple, &mut out);
    }
    out
}

// The cell of a tuple, described by the faces of the σ_i spanned by vertices mapping into the
// common image. Shrinking the faces can shrink the common image, so repeat until stable.
fn cell_key(f: &SimplicialMap, tuple: &[usize], common: &Simplex) -> Vec<usize> {
    let k = f.domain();
    let images = f.vertex_images();
    let mut faces: Vec<Simplex> = tuple.iter().map(|&s| k.simplex(s).clone()).collect();
    let mut common = common.clone();
    loop {
        faces = faces
            .iter()
            .map(|s| Simplex::new(s.vertices().iter().copied().filter(|&v| common.contains(images[v]))))
            .collect();
        let next = faces
            .iter()
            .map(|s| f.apply(s))
            .reduce(|a, b| a.intersection(&b).expect("cell is nonempty"))
            .expect("nonempty tuple");
        if next == common {
            break;
        }
        common = next;
    }
    faces.iter().map(|s| k.id_of(s).expect("face-closed")).collect()
}

fn maximal_cells(f: &SimplicialMap, tuples: Vec<(Vec<usize>, Simplex)>) -> Vec<Vec<usize>> {
    let k = f.domain();
    let keys: BTreeSet<Vec<usize>> = tuples.iter().map(|(t, c)| cell_key(f, t, c)).collect();
    let keys: Vec<Vec<usize>> = keys.into_iter().collect();
    let size = |key: &[usize]| key.iter().map(|&s| k.simplex(s).len()).sum::<usize>();
    let sizes: Vec<usize> = keys.iter().map(|key| size(key)).collect();
    // bucket by the first coordinate's vertices to find candidate supersets
    let mut by_vertex: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, key) in keys.iter().enumerate() {
        for &v in k.simplex(key[0]).vertices() {
            by_vertex.entry(v).or_default().push(i);
        }
    }
    keys.iter()
        .enumerate()
        .filter(|(i, key)| {
            let v = k.simplex(key[0]).vertices()[0];
            !by_vertex[&v].iter().any(|&j| {
                j != *i
                    && sizes[j] > sizes[*i]
                    && key.iter().zip(&keys[j]).all(|(&a, &b)| k.simplex(a).is_face_of(k.simplex(b)))
            })
        })
        .map(|(_, key)| key.clone())
        .collect()
}

/// [`fiber_power_nerve`] with an explicit cover mode, cell cap, and dimension bound.
pub fn fiber_power_nerve_with(f: &SimplicialMap, p: usize, opts: &NerveOptions) -> Result<NerveComplex> {
    let tuples = tuple_cover(f, p);
    let cover: Vec<Vec<usize>> = match opts.mode {
        CoverMode::MaximalTuples => tuples.into_iter().map(|(t, _)| t).collect(),
        CoverMode::MaximalCells => maximal_cells(f, tuples),
    };
    if cover.len() > opts.cell_cap {
        return Err(Error::BudgetExceeded { cap: opts.cell_cap });
    }
    let k = f.domain();
    let cells: Vec<Vec<Simplex>> =
        cover.iter().map(|t| t.iter().map(|&s| k.simplex(s).clone()).collect()).collect();

    // candidate neighbours share a vertex in the first coordinate
    let mut by_vertex: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, c) in cells.iter().enumerate() {
        for &v in c[0].vertices() {
            by_vertex.entry(v).or_default().push(i);
        }
    }
    let mut neighbours: Vec<Vec<usize>> = vec![Vec::new(); cells.len()];
    for (i, c) in cells.iter().enumerate() {
        let mut cand: Vec<usize> =
            c[0].vertices().iter().flat_map(|v| by_vertex[v].iter().copied()).filter(|&j| j > i).collect();
        cand.sort_unstable();
        cand.dedup();
        for j in cand {
            if meet(f, c, &cells[j]).is_some() {
                neighbours[i].push(j);
            }
        }
    }

    let max_len = opts.max_dim.map_or(usize::MAX, |d| d + 1);
    let mut simplices: Vec<Simplex> = Vec::new();
    let mut budget = Budget { count: 0, cap: opts.cell_cap };
    for i in 0..cells.len() {
        budget.take()?;
        simplices.push(Simplex::from_sorted_unchecked(vec![i]));
        if max_len > 1 {
            let mut members = vec![i];
            extend(f, &cells, &neighbours, &mut members, &cells[i], &neighbours[i], max_len, &mut simplices, &mut budget)?;
        }
    }
    let nerve = SimplicialComplex::closure(cells.len(), simplices);
    Ok(NerveComplex { p, cover_index: cover, nerve, skeleton: opts.max_dim })
}

struct Budget {
    count: usize,
    cap: usize,
}

impl Budget {
    fn take(&mut self) -> Result<()> {
        self.count += 1;
        if self.count > self.cap {
            return Err(Error::BudgetExceeded { cap: self.cap });
        }
        Ok(())
    }
}

// Componentwise intersection of two cell families, if the result still has a point.
fn meet(f: &SimplicialMap, a: &[Simplex], b: &[Simplex]) -> Option<Vec<Simplex>> {
    let mut rho = Vec::with_capacity(a.len());
    let mut common: Option<Simplex> = None;
    for (x, y) in a.iter().zip(b) {
        let r = x.intersection(y)?;
        let image = f.apply(&r);
        common = Some(match common {
            None => image,
            Some(c) => c.intersection(&image)?,
        });
        rho.push(r);
    }
    Some(rho)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    f: &SimplicialMap,
    cells: &[Vec<Simplex>],
    neighbours: &[Vec<usize>],
    members: &mut Vec<usize>,
    rho: &[Simplex],
    candidates: &[usize],
    max_len: usize,
    out: &mut Vec<Simplex>,
    budget: &mut Budget,
) -> Result<()> {
    for (ci, &j) in candidates.iter().enumerate() {
        let Some(next_rho) = meet(f, rho, &cells[j]) else { continue };
        budget.take()?;
        members.push(j);
        out.push(Simplex::from_sorted_unchecked(members.clone()));
        if members.len() < max_len {
            let rest: Vec<usize> = candidates[ci + 1..]
                .iter()
                .copied()
                .filter(|x| neighbours[j].binary_search(x).is_ok())
                .collect();
            if !rest.is_empty() {
                extend(f, cells, neighbours, members, &next_rho, &rest, max_len, out, budget)?;
            }
        }
        members.pop();
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DescentTarget {
    /// `F = f`, bounding the image subcomplex of the codomain.
    Image,
    /// `F` = the quotient map onto the Reeb realization.
    Reeb,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentRow {
    pub p: usize,
    pub betti_target: usize,
    /// `b_{p-j}` of the `(j+1)`-fold fiber power, for `j = 0..=p`.
    pub betti_powers: Vec<usize>,
    pub bound: usize,
    pub inequality_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentReport {
    pub target: DescentTarget,
    pub p_max: usize,
    pub method: FiberMethod,
    pub rows: Vec<DescentRow>,
    /// Number of nerve simplices or cells built for each fiber power.
    pub sizes: Vec<usize>,
    pub holds: bool,
}

/// How fiber powers are turned into Betti numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FiberMethod {
    /// Nerve of the convex cover ([`fiber_power_nerve_with`]).
    Nerve,
    /// Cellular chains of the polyhedral structure ([`fiber_power_cells`]); far smaller.
    #[default]
    Cells,
}

/// Betti numbers `b_0..=b_max` of the `(p+1)`-fold fiber power.
pub fn fiber_power_betti(
    f: &SimplicialMap,
    p: usize,
    max: usize,
    method: FiberMethod,
    opts: &NerveOptions,
) -> Result<(BettiVector, usize)> {
    match method {
        FiberMethod::Nerve => {
            let o = NerveOptions { max_dim: Some(max + 1), ..opts.clone() };
            let nerve = fiber_power_nerve_with(f, p, &o)?;
            Ok((nerve.betti(), nerve.nerve.len()))
        }
        FiberMethod::Cells => {
            let cells = fiber_power_cells(f, p, Some(max + 1), opts.cell_cap)?;
            Ok((cells.betti(), cells.cell_count()))
        }
    }
}

/// Check `b_p(F(X)) <= sum_{i+j=p} b_i(W_j)` for `p = 0..=p_max`.
///
/// `opts.max_dim` is ignored; each fiber power is built to the skeleton its Betti numbers need.
pub fn descent_check(
    f: &SimplicialMap,
    target: DescentTarget,
    p_max: usize,
    method: FiberMethod,
    opts: &NerveOptions,
) -> Result<DescentReport> {
    let (map, target_betti) = match target {
        DescentTarget::Image => {
            let (image, _) = f.image_complex();
            (f.clone(), betti(&image))
        }
        DescentTarget::Reeb => {
            let r = reeb_space(f)?;
            let b = betti(r.realization());
            (r.quotient_map().clone(), b)
        }
    };

    let mut power_betti: Vec<BettiVector> = Vec::new();
    let mut sizes = Vec::new();
    for j in 0..=p_max {
        let (b, size) = fiber_power_betti(&map, j, p_max - j, method, opts)?;
        sizes.push(size);
        power_betti.push(b);
    }

    let rows: Vec<DescentRow> = (0..=p_max)
        .map(|p| {
            let betti_powers: Vec<usize> = (0..=p).map(|j| power_betti[j].get(p - j)).collect();
            let bound = betti_powers.iter().sum();
            let betti_target = target_betti.get(p);
            DescentRow { p, betti_target, betti_powers, bound, inequality_holds: betti_target <= bound }
        })
        .collect();
    let holds = rows.iter().all(|r| r.inequality_holds);
    Ok(DescentReport { target, p_max, method, rows, sizes, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{check_simplicial, validate_complex};

    fn edge() -> SimplicialComplex {
        validate_complex(2, vec![vec![0, 1]], true).unwrap()
    }

    #[test]
    fn identity_edge_diagonal_is_a_point() {
        let n = fiber_power_nerve(&SimplicialMap::identity(edge()), 1).unwrap();
        assert_eq!(n.cover_index, vec![vec![2, 2]]);
        assert_eq!(n.betti().b, vec![1]);
    }

    #[test]
    fn separated_points() {
        let two = validate_complex(2, vec![], false).unwrap();
        let f = SimplicialMap::identity(two);
        let n = fiber_power_nerve(&f, 1).unwrap();
        assert_eq!(n.cover_index, vec![vec![0, 0], vec![1, 1]]);
        assert_eq!(n.betti().b, vec![2]);
    }

    #[test]
    fn collapsed_points() {
        let two = validate_complex(2, vec![], false).unwrap();
        let f = SimplicialMap::constant(two);
        let n = fiber_power_nerve(&f, 1).unwrap();
        assert_eq!(n.cover_index.len(), 4);
        assert_eq!(n.betti().b, vec![4]);
    }

    #[test]
    fn cover_modes_agree_on_a_fold() {
        let path = validate_complex(3, vec![vec![0, 1], vec![1, 2]], true).unwrap();
        let f = check_simplicial(path, edge(), vec![0, 1, 0]).unwrap();
        for p in 0..3 {
            let a = fiber_power_nerve(&f, p).unwrap();
            let b = fiber_power_nerve_with(&f, p, &NerveOptions { mode: CoverMode::MaximalCells, ..Default::default() }).unwrap();
            assert_eq!(a.betti(), b.betti(), "p = {p}");
            assert!(b.cover_index.len() <= a.cover_index.len());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let circle = validate_complex(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]], true).unwrap();
        let f = SimplicialMap::constant(circle);
        let opts = NerveOptions { cell_cap: 10, ..Default::default() };
        assert_eq!(fiber_power_nerve_with(&f, 1, &opts).unwrap_err(), Error::BudgetExceeded { cap: 10 });
    }

    #[test]
    fn constant_circle_descent() {
        let circle = validate_complex(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]], true).unwrap();
        let f = SimplicialMap::constant(circle);
        for method in [FiberMethod::Nerve, FiberMethod::Cells] {
            let rep = descent_check(&f, DescentTarget::Image, 1, method, &NerveOptions::default()).unwrap();
            assert!(rep.holds);
            assert_eq!(rep.rows[0].betti_powers, vec![1]);
            assert_eq!(rep.rows[1].betti_powers, vec![1, 1]);
            assert_eq!(rep.rows[1].bound, 2);
        }
    }
}

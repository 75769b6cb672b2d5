//! Independent reference implementations used as test oracles. They favour obviousness over
//! speed and share no code with the library beyond the basic complex and map types.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};
use reebforge::{Simplex, SimplicialComplex, SimplicialMap};

/// Rank by dense Gaussian elimination over the rationals.
pub fn dense_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let factor = &m[r][c] / &pivot;
                for j in c..cols {
                    let delta = &factor * &m[rank][j];
                    m[r][j] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Simplices of `k` grouped by dimension, as sorted vertex lists.
fn by_dim(k: &SimplicialComplex) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = Vec::new();
    for s in k.simplices() {
        let d = s.dim();
        if out.len() <= d {
            out.resize(d + 1, Vec::new());
        }
        out[d].push(s.vertices().to_vec());
    }
    out
}

/// Betti numbers from dense boundary matrices, trailing zeros trimmed.
pub fn dense_betti(k: &SimplicialComplex) -> Vec<usize> {
    let cells = by_dim(k);
    let mut ranks = vec![0; cells.len() + 1];
    for d in 1..cells.len() {
        let index: HashMap<&Vec<usize>, usize> = cells[d - 1].iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut m = vec![vec![BigRational::zero(); cells[d].len()]; cells[d - 1].len()];
        for (j, s) in cells[d].iter().enumerate() {
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                let sign = if i % 2 == 0 { BigRational::one() } else { -BigRational::one() };
                m[index[&face]][j] = sign;
            }
        }
        ranks[d] = dense_rank(m);
    }
    let mut b: Vec<usize> = (0..cells.len()).map(|d| cells[d].len() - ranks[d] - ranks[d + 1]).collect();
    while b.last() == Some(&0) {
        b.pop();
    }
    b
}

/// All chains of a finite poset given by a strict "less than" predicate, as simplices on
/// element indices.
pub fn chains(n: usize, less: impl Fn(usize, usize) -> bool) -> Vec<Simplex> {
    // sort elements so that smaller elements come first; chains are increasing index lists
    let mut order: Vec<usize> = (0..n).collect();
    let height = |x: usize| (0..n).filter(|&y| less(y, x)).count();
    order.sort_by_key(|&x| height(x));
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = order.iter().map(|&x| vec![x]).collect();
    while let Some(chain) = stack.pop() {
        let top = *chain.last().unwrap();
        for &y in &order {
            if less(top, y) {
                let mut next = chain.clone();
                next.push(y);
                stack.push(next);
            }
        }
        out.push(Simplex::new(chain));
    }
    out
}

/// The `(p+1)`-fold fiber power, triangulated as the order complex of the face poset of its
/// cells: tuples of simplices with one common image, ordered componentwise.
pub fn brute_fiber_power(f: &SimplicialMap, p: usize) -> SimplicialComplex {
    let k = f.domain();
    let mut by_image: BTreeMap<Simplex, Vec<&Simplex>> = BTreeMap::new();
    for s in k.simplices() {
        by_image.entry(f.apply(s)).or_default().push(s);
    }
    let mut cells: Vec<Vec<&Simplex>> = Vec::new();
    for members in by_image.values() {
        let mut tuples: Vec<Vec<&Simplex>> = vec![Vec::new()];
        for _ in 0..=p {
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    members.iter().map(move |m| {
                        let mut t = t.clone();
                        t.push(*m);
                        t
                    })
                })
                .collect();
        }
        cells.extend(tuples);
    }
    let less = |a: usize, b: usize| {
        a != b && cells[a].iter().zip(&cells[b]).all(|(x, y)| x.is_face_of(y))
    };
    SimplicialComplex::closure(cells.len(), chains(cells.len(), less))
}

/// Components of the full subcomplex on `f^{-1}(v)`, as sorted vertex lists, by breadth-first
/// search over edges.
pub fn fiber_vertex_components(f: &SimplicialMap, v: usize) -> Vec<Vec<usize>> {
    let k = f.domain();
    let images = f.vertex_images();
    let inside: BTreeSet<usize> = (0..k.vertex_count()).filter(|&u| images[u] == v).collect();
    let mut adjacent: HashMap<usize, Vec<usize>> = HashMap::new();
    for s in k.simplices_of_dim(1) {
        let (a, b) = (s.vertices()[0], s.vertices()[1]);
        if inside.contains(&a) && inside.contains(&b) {
            adjacent.entry(a).or_default().push(b);
            adjacent.entry(b).or_default().push(a);
        }
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in &inside {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut queue = vec![start];
        while let Some(x) = queue.pop() {
            for &y in adjacent.get(&x).into_iter().flatten() {
                if seen.insert(y) {
                    comp.push(y);
                    queue.push(y);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// A copy of `k` with vertices renamed by `perm` (vertex `v` becomes `perm[v]`).
pub fn relabel(k: &SimplicialComplex, perm: &[usize]) -> SimplicialComplex {
    SimplicialComplex::closure(
        k.vertex_count(),
        k.simplices().iter().map(|s| Simplex::new(s.vertices().iter().map(|&v| perm[v]))),
    )
}

/// Random-ish complexes for property tests: a connected or disconnected 2-complex on up to
/// `n` vertices described by edge and triangle choices.
pub fn complex_from_choices(n: usize, edges: &[(usize, usize)], triangles: &[(usize, usize, usize)]) -> SimplicialComplex {
    let mut simplices = Vec::new();
    for &(a, b) in edges {
        let (a, b) = (a % n, b % n);
        if a != b {
            simplices.push(Simplex::new([a, b]));
        }
    }
    for &(a, b, c) in triangles {
        let (a, b, c) = (a % n, b % n, c % n);
        if a != b && b != c && a != c {
            simplices.push(Simplex::new([a, b, c]));
        }
    }
    SimplicialComplex::closure(n, simplices)
}

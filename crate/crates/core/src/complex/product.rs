//! Staircase triangulation of products and products of simplicial maps.
//!
//! Given total orders on the vertices of `K1` and `K2`, the product `|K1| x |K2|` is
//! triangulated by the chains of the product order `(a, b) <= (a', b')` iff `a <= a'` and
//! `b <= b'` whose projections are simplices of the factors. Product vertex `(a, b)` gets id
//! `a * |V(K2)| + b`.

use std::sync::Arc;

use super::{Simplex, SimplicialComplex, SimplicialMap};
use crate::error::{Error, Result};

/// A total order on vertices, stored as the rank of each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrder(Vec<usize>);

impl VertexOrder {
    pub fn identity(n: usize) -> Self {
        VertexOrder((0..n).collect())
    }

    /// Order from ranks; must be a permutation of `0..n`.
    pub fn from_ranks(ranks: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; ranks.len()];
        for &r in &ranks {
            if r >= ranks.len() || seen[r] {
                return Err(Error::InvalidOrder { expected: ranks.len(), found: ranks.len() });
            }
            seen[r] = true;
        }
        Ok(VertexOrder(ranks))
    }

    /// Order listing the vertices sorted by `key`, ties broken by vertex id.
    pub fn sorted_by_key<K: Ord>(n: usize, key: impl Fn(usize) -> K) -> Self {
        let mut vs: Vec<usize> = (0..n).collect();
        vs.sort_by(|&a, &b| key(a).cmp(&key(b)).then(a.cmp(&b)));
        let mut ranks = vec![0; n];
        for (r, v) in vs.into_iter().enumerate() {
            ranks[v] = r;
        }
        VertexOrder(ranks)
    }

    pub fn rank(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn sort_simplex(&self, s: &Simplex) -> Vec<usize> {
        let mut v = s.vertices().to_vec();
        v.sort_by_key(|&x| self.0[x]);
        v
    }
}

/// A product complex with the lexicographic order it inherits from its factors.
#[derive(Clone, Debug)]
pub struct ProductComplex {
    pub complex: SimplicialComplex,
    pub order: VertexOrder,
    pub second_factor_vertices: usize,
}

impl ProductComplex {
    pub fn pair(&self, v: usize) -> (usize, usize) {
        (v / self.second_factor_vertices, v % self.second_factor_vertices)
    }
}

/// Staircase triangulation of `k1 x k2` for the given vertex orders.
pub fn staircase_product(
    k1: &SimplicialComplex,
    o1: &VertexOrder,
    k2: &SimplicialComplex,
    o2: &VertexOrder,
) -> Result<ProductComplex> {
    for (k, o) in [(k1, o1), (k2, o2)] {
        if o.len() != k.vertex_count() {
            return Err(Error::InvalidOrder { expected: k.vertex_count(), found: o.len() });
        }
    }
    let n2 = k2.vertex_count();
    let max1 = k1.maximal_simplices();
    let max2 = k2.maximal_simplices();
    let mut cells = Vec::new();
    for &a in &max1 {
        let sa = o1.sort_simplex(k1.simplex(a));
        for &b in &max2 {
            let sb = o2.sort_simplex(k2.simplex(b));
            lattice_paths(&sa, &sb, n2, &mut cells);
        }
    }
    let complex = SimplicialComplex::closure(k1.vertex_count() * n2, cells);
    let ranks = (0..k1.vertex_count() * n2)
        .map(|v| o1.rank(v / n2.max(1)) * n2 + o2.rank(v % n2.max(1)))
        .collect();
    Ok(ProductComplex { complex, order: VertexOrder(ranks), second_factor_vertices: n2 })
}

// All monotone staircase paths from (a[0], b[0]) to (a[p], b[q]).
fn lattice_paths(a: &[usize], b: &[usize], n2: usize, out: &mut Vec<Simplex>) {
    fn walk(
        a: &[usize],
        b: &[usize],
        i: usize,
        j: usize,
        n2: usize,
        path: &mut Vec<usize>,
        out: &mut Vec<Simplex>,
    ) {
        path.push(a[i] * n2 + b[j]);
        if i + 1 == a.len() && j + 1 == b.len() {
            out.push(Simplex::new(path.iter().copied()));
        }
        if i + 1 < a.len() {
            walk(a, b, i + 1, j, n2, path, out);
        }
        if j + 1 < b.len() {
            walk(a, b, i, j + 1, n2, path, out);
        }
        path.pop();
    }
    walk(a, b, 0, 0, n2, &mut Vec::new(), out);
}

/// Vertex orders making `f` monotone: the codomain keeps its id order and domain vertices are
/// sorted by image, then by id.
pub fn monotone_orders(f: &SimplicialMap) -> (VertexOrder, VertexOrder) {
    let images = f.vertex_images();
    (
        VertexOrder::sorted_by_key(f.domain().vertex_count(), |v| images[v]),
        VertexOrder::identity(f.codomain().vertex_count()),
    )
}

fn check_monotone(f: &SimplicialMap, dom: &VertexOrder, cod: &VertexOrder) -> Result<()> {
    let images = f.vertex_images();
    for s in f.domain().simplices() {
        let sorted = dom.sort_simplex(s);
        if sorted.windows(2).any(|w| cod.rank(images[w[0]]) > cod.rank(images[w[1]])) {
            return Err(Error::NonMonotoneMap(s.clone()));
        }
    }
    Ok(())
}

/// Product of two simplicial maps on staircase products, using caller-supplied orders.
/// Fails with `NonMonotoneMap` if either map decreases along a simplex.
pub fn product_map_with_orders(
    f1: &SimplicialMap,
    dom1: &VertexOrder,
    cod1: &VertexOrder,
    f2: &SimplicialMap,
    dom2: &VertexOrder,
    cod2: &VertexOrder,
) -> Result<(SimplicialMap, ProductComplex, ProductComplex)> {
    check_monotone(f1, dom1, cod1)?;
    check_monotone(f2, dom2, cod2)?;
    let domain = staircase_product(f1.domain(), dom1, f2.domain(), dom2)?;
    let codomain = staircase_product(f1.codomain(), cod1, f2.codomain(), cod2)?;
    let n2 = f2.codomain().vertex_count();
    let (i1, i2) = (f1.vertex_images(), f2.vertex_images());
    let images = (0..domain.complex.vertex_count())
        .map(|v| {
            let (a, b) = domain.pair(v);
            i1[a] * n2 + i2[b]
        })
        .collect();
    let map = SimplicialMap::new(
        Arc::new(domain.complex.clone()),
        Arc::new(codomain.complex.clone()),
        images,
    )?;
    Ok((map, domain, codomain))
}

/// Product of two simplicial maps, reordering the domains so both maps are monotone.
pub fn product_map(f1: &SimplicialMap, f2: &SimplicialMap) -> Result<SimplicialMap> {
    let (d1, c1) = monotone_orders(f1);
    let (d2, c2) = monotone_orders(f2);
    product_map_with_orders(f1, &d1, &c1, f2, &d2, &c2).map(|(m, _, _)| m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::validate_complex;

    fn simplex(n: usize) -> SimplicialComplex {
        validate_complex(n, vec![(0..n).collect()], true).unwrap()
    }

    fn binomial(n: u64, k: u64) -> u64 {
        (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
    }

    #[test]
    fn square_from_two_edges() {
        let e = simplex(2);
        let o = VertexOrder::identity(2);
        let p = staircase_product(&e, &o, &e, &o).unwrap();
        assert_eq!(p.complex.count_of_dim(0), 4);
        assert_eq!(p.complex.count_of_dim(1), 5);
        assert_eq!(p.complex.count_of_dim(2), 2);
        p.complex.revalidate().unwrap();
    }

    #[test]
    fn prism_counts_follow_lattice_paths() {
        for (d1, d2) in [(1usize, 1usize), (2, 2), (1, 3), (2, 3)] {
            let (a, b) = (simplex(d1 + 1), simplex(d2 + 1));
            let p = staircase_product(
                &a,
                &VertexOrder::identity(d1 + 1),
                &b,
                &VertexOrder::identity(d2 + 1),
            )
            .unwrap();
            let top = p.complex.count_of_dim(d1 + d2) as u64;
            assert_eq!(top, binomial((d1 + d2) as u64, d1 as u64), "{d1} x {d2}");
            assert_eq!(p.complex.euler_characteristic(), 1);
        }
    }

    #[test]
    fn identity_product_is_simplicial() {
        let e = simplex(2);
        let id = SimplicialMap::identity(e);
        let prod = product_map(&id, &id).unwrap();
        assert_eq!(prod.domain().count_of_dim(2), 2);
        assert_eq!(prod.codomain().count_of_dim(2), 2);
    }

    #[test]
    fn non_monotone_orders_are_rejected() {
        let e = simplex(2);
        let id = SimplicialMap::identity(e);
        let rev = VertexOrder::from_ranks(vec![1, 0]).unwrap();
        let ident = VertexOrder::identity(2);
        let err = product_map_with_orders(&id, &rev, &ident, &id, &ident, &ident).unwrap_err();
        assert!(matches!(err, Error::NonMonotoneMap(_)));
    }

    #[test]
    fn reordering_rescues_a_decreasing_map() {
        // edge mapped with 0 -> 1, 1 -> 0 is decreasing in id order
        let e = Arc::new(simplex(2));
        let swap = SimplicialMap::new(e.clone(), e, vec![1, 0]).unwrap();
        let prod = product_map(&swap, &swap).unwrap();
        assert_eq!(prod.domain().count_of_dim(2), 2);
    }

    #[test]
    fn invalid_rank_arrays() {
        assert!(VertexOrder::from_ranks(vec![0, 0]).is_err());
        assert!(VertexOrder::from_ranks(vec![2, 0]).is_err());
    }
}

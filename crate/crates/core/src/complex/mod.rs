//! Finite abstract simplicial complexes and the constructions built on them.

mod components;
mod map;
mod poset;
mod product;
mod subdivision;

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use components::{connected_components, split_components, UnionFind};
pub(crate) use components::{group_by_labels, vertex_components};
pub use map::{check_simplicial, SimplicialMap};
pub use poset::Poset;
pub use product::{
    monotone_orders, product_map, product_map_with_orders, staircase_product, ProductComplex,
    VertexOrder,
};
pub use subdivision::{barycentric_subdivision, Subdivision};

/// A simplex stored as its strictly increasing list of vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    /// Build a simplex from vertex ids in any order. Panics on an empty or repeated list;
    /// use [`Simplex::try_new`] for untrusted input.
    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Self {
        Self::try_new(vertices).expect("invalid simplex")
    }

    pub fn try_new(vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        if v.is_empty() {
            return Err(Error::EmptySimplex);
        }
        v.sort_unstable();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedVertex(w[0]));
        }
        Ok(Simplex(v))
    }

    /// Sorted, deduplicated vertex set; used for images of simplices under vertex maps.
    pub fn from_unsorted_with_repeats(vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        assert!(!v.is_empty(), "empty simplex");
        Simplex(v)
    }

    pub(crate) fn from_sorted_unchecked(v: Vec<usize>) -> Self {
        debug_assert!(!v.is_empty() && v.windows(2).all(|w| w[0] < w[1]));
        Simplex(v)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().all(|v| other.contains(*v))
    }

    /// Codimension-one faces, the i-th omitting the i-th vertex.
    pub fn facets(&self) -> Vec<Simplex> {
        if self.0.len() == 1 {
            return Vec::new();
        }
        (0..self.0.len())
            .map(|i| {
                let mut v = self.0.clone();
                v.remove(i);
                Simplex(v)
            })
            .collect()
    }

    /// All nonempty proper faces.
    pub fn proper_faces(&self) -> Vec<Simplex> {
        let n = self.0.len();
        assert!(n < usize::BITS as usize, "simplex too large");
        let full = (1usize << n) - 1;
        (1..full)
            .map(|mask| {
                Simplex(
                    (0..n)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| self.0[i])
                        .collect(),
                )
            })
            .collect()
    }

    /// Common face, if any.
    pub fn intersection(&self, other: &Simplex) -> Option<Simplex> {
        let v: Vec<usize> = self.0.iter().copied().filter(|x| other.contains(*x)).collect();
        (!v.is_empty()).then_some(Simplex(v))
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A finite abstract simplicial complex on vertices `0..vertex_count`.
///
/// Every vertex id is a 0-simplex. Simplices are kept in canonical order (by dimension, then
/// lexicographically), so the position of a simplex is a stable id used throughout the crate.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    vertex_count: usize,
    simplices: Vec<Simplex>,
    dim_offsets: Vec<usize>,
    index: HashMap<Simplex, usize>,
    coordinates: Option<Vec<Vec<BigRational>>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count
            && self.simplices == other.simplices
            && self.coordinates == other.coordinates
    }
}

impl Eq for SimplicialComplex {}

/// Unvalidated complex data as read from a file or assembled by hand.
#[derive(Clone, Debug, Default)]
pub struct RawComplex {
    pub vertex_count: usize,
    pub simplices: Vec<Vec<usize>>,
    pub coordinates: Option<Vec<Vec<BigRational>>>,
    /// Add missing faces instead of rejecting the input.
    pub close_faces: bool,
}

impl RawComplex {
    pub fn new(vertex_count: usize, simplices: Vec<Vec<usize>>) -> Self {
        RawComplex { vertex_count, simplices, ..Default::default() }
    }

    pub fn close_faces(mut self, close: bool) -> Self {
        self.close_faces = close;
        self
    }

    pub fn with_coordinates(mut self, coordinates: Vec<Vec<BigRational>>) -> Self {
        self.coordinates = Some(coordinates);
        self
    }

    /// Check the data and build a complex. Vertex singletons are implied by the vertex count.
    pub fn validate(self) -> Result<SimplicialComplex> {
        let mut seen = HashSet::with_capacity(self.simplices.len());
        let mut listed = Vec::with_capacity(self.simplices.len());
        for raw in self.simplices {
            let s = Simplex::try_new(raw)?;
            if let Some(&v) = s.vertices().iter().find(|&&v| v >= self.vertex_count) {
                return Err(Error::VertexOutOfRange { vertex: v, count: self.vertex_count });
            }
            if !seen.insert(s.clone()) {
                return Err(Error::DuplicateSimplex(s));
            }
            listed.push(s);
        }
        if !self.close_faces {
            // Closure under codimension-one faces implies closure under all faces.
            for s in &listed {
                if s.len() < 2 {
                    continue;
                }
                for face in s.facets() {
                    if face.len() > 1 && !seen.contains(&face) {
                        return Err(Error::MissingFace { simplex: s.clone(), face });
                    }
                }
            }
        }
        let complex = SimplicialComplex::closure(self.vertex_count, listed);
        match self.coordinates {
            Some(c) => complex.with_coordinates(c),
            None => Ok(complex),
        }
    }
}

/// Build and validate a complex from a vertex count and simplex list.
pub fn validate_complex(
    vertex_count: usize,
    simplices: Vec<Vec<usize>>,
    close_faces: bool,
) -> Result<SimplicialComplex> {
    RawComplex::new(vertex_count, simplices).close_faces(close_faces).validate()
}

impl SimplicialComplex {
    /// The complex generated by the given simplices and all their faces. Vertices outside
    /// `0..vertex_count` are a programming error here; untrusted data goes through
    /// [`RawComplex::validate`].
    pub fn closure(vertex_count: usize, simplices: impl IntoIterator<Item = Simplex>) -> Self {
        let mut all: HashSet<Simplex> = (0..vertex_count).map(|v| Simplex(vec![v])).collect();
        let mut stack: Vec<Simplex> = Vec::new();
        for s in simplices {
            assert!(
                s.vertices().iter().all(|&v| v < vertex_count),
                "simplex {s} out of range"
            );
            if all.insert(s.clone()) {
                stack.push(s);
            }
        }
        while let Some(s) = stack.pop() {
            for f in s.facets() {
                if !all.contains(&f) {
                    all.insert(f.clone());
                    stack.push(f);
                }
            }
        }
        Self::from_face_closed(vertex_count, all.into_iter().collect())
    }

    fn from_face_closed(vertex_count: usize, mut simplices: Vec<Simplex>) -> Self {
        simplices.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let top = simplices.last().map_or(0, |s| s.len());
        let mut dim_offsets = vec![0; top + 1];
        for s in &simplices {
            dim_offsets[s.len()] += 1;
        }
        for d in 1..dim_offsets.len() {
            dim_offsets[d] += dim_offsets[d - 1];
        }
        let index = simplices.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        SimplicialComplex { vertex_count, simplices, dim_offsets, index, coordinates: None }
    }

    pub fn empty() -> Self {
        Self::from_face_closed(0, Vec::new())
    }

    /// Attach vertex coordinates; all points must share one ambient dimension.
    pub fn with_coordinates(mut self, coordinates: Vec<Vec<BigRational>>) -> Result<Self> {
        if coordinates.len() != self.vertex_count {
            return Err(Error::CoordinateCount {
                expected: self.vertex_count,
                found: coordinates.len(),
            });
        }
        if let Some(first) = coordinates.first() {
            let n = first.len();
            if let Some((vertex, p)) = coordinates.iter().enumerate().find(|(_, p)| p.len() != n) {
                return Err(Error::AmbientDimension { vertex, expected: n, found: p.len() });
            }
        }
        self.coordinates = Some(coordinates);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Dimension of the complex, `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.last().map(Simplex::dim)
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn simplex(&self, id: usize) -> &Simplex {
        &self.simplices[id]
    }

    /// Canonical position of a simplex.
    pub fn id_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index.contains_key(s)
    }

    /// Range of canonical ids holding the `d`-simplices.
    pub fn dim_range(&self, d: usize) -> std::ops::Range<usize> {
        if d + 1 >= self.dim_offsets.len() {
            return self.simplices.len()..self.simplices.len();
        }
        self.dim_offsets[d]..self.dim_offsets[d + 1]
    }

    pub fn simplices_of_dim(&self, d: usize) -> &[Simplex] {
        &self.simplices[self.dim_range(d)]
    }

    pub fn count_of_dim(&self, d: usize) -> usize {
        self.dim_range(d).len()
    }

    pub fn coordinates(&self) -> Option<&[Vec<BigRational>]> {
        self.coordinates.as_deref()
    }

    pub fn ambient_dim(&self) -> Option<usize> {
        self.coordinates.as_ref().map(|c| c.first().map_or(0, Vec::len))
    }

    /// Simplices that are not a proper face of any other simplex, in canonical order.
    pub fn maximal_simplices(&self) -> Vec<usize> {
        let mut covered = vec![false; self.simplices.len()];
        for s in &self.simplices {
            for f in s.facets() {
                covered[self.index[&f]] = true;
            }
        }
        (0..self.simplices.len()).filter(|&i| !covered[i]).collect()
    }

    /// Sub-complex of simplices of dimension at most `d`.
    pub fn skeleton(&self, d: usize) -> SimplicialComplex {
        let end = self.dim_range(d).end;
        Self::from_face_closed(self.vertex_count, self.simplices[..end].to_vec())
    }

    pub fn euler_characteristic(&self) -> i64 {
        (0..self.dim_offsets.len().saturating_sub(1))
            .map(|d| {
                let n = self.count_of_dim(d) as i64;
                if d % 2 == 0 {
                    n
                } else {
                    -n
                }
            })
            .sum()
    }

    /// Subcomplex spanned by the given simplices, renumbered onto its own vertices. Returns the
    /// complex and, for each new vertex, the original vertex id (increasing).
    pub fn subcomplex(
        &self,
        generators: impl IntoIterator<Item = Simplex>,
    ) -> (SimplicialComplex, Vec<usize>) {
        let generators: Vec<Simplex> = generators.into_iter().collect();
        let mut used: Vec<usize> =
            generators.iter().flat_map(|s| s.vertices().iter().copied()).collect();
        used.sort_unstable();
        used.dedup();
        let mut local = vec![usize::MAX; self.vertex_count];
        for (i, &v) in used.iter().enumerate() {
            local[v] = i;
        }
        let renamed = generators.into_iter().map(|s| {
            assert!(self.contains(&s), "{s} is not in the complex");
            Simplex::from_sorted_unchecked(s.vertices().iter().map(|&v| local[v]).collect())
        });
        (Self::closure(used.len(), renamed), used)
    }

    /// Full subcomplex on a vertex subset, renumbered to `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> SimplicialComplex {
        let mut local = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let kept = self.simplices.iter().filter_map(|s| {
            let mapped: Option<Vec<usize>> = s
                .vertices()
                .iter()
                .map(|&v| (local[v] != usize::MAX).then_some(local[v]))
                .collect();
            mapped.map(|m| Simplex::new(m))
        });
        Self::from_face_closed(vertices.len(), kept.collect())
    }

    /// Check all invariants again; used after constructions.
    pub fn revalidate(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for (i, s) in self.simplices.iter().enumerate() {
            if self.index.get(s) != Some(&i) || !seen.insert(s) {
                return Err(Error::DuplicateSimplex(s.clone()));
            }
            if let Some(&v) = s.vertices().iter().find(|&&v| v >= self.vertex_count) {
                return Err(Error::VertexOutOfRange { vertex: v, count: self.vertex_count });
            }
            for face in s.facets() {
                if !self.contains(&face) {
                    return Err(Error::MissingFace { simplex: s.clone(), face });
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn full_triangle() -> Vec<Vec<usize>> {
        vec![vec![0], vec![1], vec![2], vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2]]
    }

    #[test]
    fn accepts_complete_triangle() {
        let k = validate_complex(3, full_triangle(), false).unwrap();
        assert_eq!(k.len(), 7);
        assert_eq!(k.dim(), Some(2));
        assert_eq!(k.euler_characteristic(), 1);
    }

    #[test]
    fn missing_faces_are_rejected_unless_closing() {
        let err = validate_complex(3, vec![vec![0, 1, 2]], false).unwrap_err();
        assert!(matches!(err, Error::MissingFace { .. }));
        let k = validate_complex(3, vec![vec![0, 1, 2]], true).unwrap();
        assert_eq!(k.len(), 7);
    }

    #[test]
    fn out_of_range_and_duplicates() {
        assert_eq!(
            validate_complex(2, vec![vec![0, 5]], true).unwrap_err(),
            Error::VertexOutOfRange { vertex: 5, count: 2 }
        );
        assert!(matches!(
            validate_complex(2, vec![vec![0, 1], vec![1, 0]], true).unwrap_err(),
            Error::DuplicateSimplex(_)
        ));
        assert_eq!(validate_complex(2, vec![vec![1, 1]], true).unwrap_err(), Error::RepeatedVertex(1));
    }

    #[test]
    fn coordinates_must_agree_in_dimension() {
        let one = BigRational::from_integer(1.into());
        let raw = RawComplex::new(2, vec![vec![0, 1]])
            .with_coordinates(vec![vec![one.clone(), one.clone()], vec![one.clone()]]);
        assert!(matches!(raw.validate().unwrap_err(), Error::AmbientDimension { vertex: 1, .. }));
    }

    #[test]
    fn canonical_order_and_ranges() {
        let k = validate_complex(3, vec![vec![0, 1, 2]], true).unwrap();
        assert_eq!(k.dim_range(0), 0..3);
        assert_eq!(k.dim_range(1), 3..6);
        assert_eq!(k.dim_range(2), 6..7);
        assert_eq!(k.dim_range(5), 7..7);
        assert_eq!(k.maximal_simplices(), vec![6]);
        k.revalidate().unwrap();
    }

    #[test]
    fn empty_complex() {
        let k = validate_complex(0, vec![], false).unwrap();
        assert!(k.is_empty());
        assert_eq!(k.dim(), None);
        assert_eq!(k.euler_characteristic(), 0);
    }

    #[test]
    fn induced_subcomplex() {
        let k = validate_complex(4, vec![vec![0, 1, 2], vec![2, 3]], true).unwrap();
        let sub = k.induced(&[0, 2, 3]);
        assert_eq!(sub.vertex_count(), 3);
        assert!(sub.contains(&Simplex::new([0, 1])));
        assert!(sub.contains(&Simplex::new([1, 2])));
        assert!(!sub.contains(&Simplex::new([0, 2])));
    }
}

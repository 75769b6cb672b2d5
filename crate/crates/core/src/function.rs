//! Piecewise-linear functions given by vertex values, and their slicing into a simplicial map
//! onto a subdivided segment.

use std::collections::HashMap;
use std::sync::Arc;

use crate::complex::{Simplex, SimplicialComplex, SimplicialMap};
use crate::error::{Error, Result};

/// A PL function on a complex: one value per vertex, extended affinely over simplices.
#[derive(Clone, Debug)]
pub struct PlFunction<V> {
    complex: Arc<SimplicialComplex>,
    values: Vec<V>,
}

impl<V: Ord + Clone> PlFunction<V> {
    pub fn new(complex: impl Into<Arc<SimplicialComplex>>, values: Vec<V>) -> Result<Self> {
        let complex = complex.into();
        if values.len() != complex.vertex_count() {
            return Err(Error::ValueCountMismatch {
                expected: complex.vertex_count(),
                found: values.len(),
            });
        }
        Ok(PlFunction { complex, values })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn complex_arc(&self) -> &Arc<SimplicialComplex> {
        &self.complex
    }

    pub fn values(&self) -> &[V] {
        &self.values
    }

    pub fn value(&self, v: usize) -> &V {
        &self.values[v]
    }

    /// Distinct vertex values in increasing order, and the rank of each vertex's value.
    pub fn levels(&self) -> (Vec<V>, Vec<usize>) {
        let mut levels = self.values.clone();
        levels.sort();
        levels.dedup();
        let ranks = self
            .values
            .iter()
            .map(|v| levels.binary_search(v).expect("value is a level"))
            .collect();
        (levels, ranks)
    }

    /// Slice the 2-skeleton along every level through a vertex so that the function becomes a
    /// simplicial map onto the segment complex whose vertices are the sorted levels.
    pub fn level_subdivision(&self) -> LevelSubdivision<V> {
        slice(self)
    }
}

/// Result of [`PlFunction::level_subdivision`].
#[derive(Clone, Debug)]
pub struct LevelSubdivision<V> {
    /// The function on the sliced complex; original vertices keep their ids.
    pub function: PlFunction<V>,
    /// The same function as a simplicial map onto the segment.
    pub map: SimplicialMap,
    pub levels: Vec<V>,
}

/// Path complex `0 - 1 - ... - (n-1)`.
pub fn segment_complex(n: usize) -> SimplicialComplex {
    SimplicialComplex::closure(n, (1..n).map(|i| Simplex::new([i - 1, i])))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Point {
    Vertex(usize),
    // interior point of edge (a, b), a < b, at the given level
    Crossing(usize, usize, usize),
}

struct Slicer<'a> {
    ranks: &'a [usize],
    ids: HashMap<Point, usize>,
    level_of: Vec<usize>,
}

impl Slicer<'_> {
    fn id(&mut self, p: Point) -> usize {
        if let Point::Vertex(v) = p {
            return v;
        }
        let next = self.level_of.len();
        let level_of = &mut self.level_of;
        *self.ids.entry(p).or_insert_with(|| {
            if let Point::Crossing(_, _, l) = p {
                level_of.push(l);
            }
            next
        })
    }

    // point at `level` on the edge from u to w (either direction)
    fn on_edge(&self, u: usize, w: usize, level: usize) -> Point {
        if self.ranks[u] == level {
            Point::Vertex(u)
        } else if self.ranks[w] == level {
            Point::Vertex(w)
        } else {
            Point::Crossing(u.min(w), u.max(w), level)
        }
    }
}

fn slice<V: Ord + Clone>(f: &PlFunction<V>) -> LevelSubdivision<V> {
    let k = f.complex();
    let (levels, ranks) = f.levels();
    let mut slicer = Slicer { ranks: &ranks, ids: HashMap::new(), level_of: ranks.clone() };
    let mut cells: Vec<Vec<usize>> = Vec::new();

    for s in k.simplices_of_dim(1) {
        let (u, w) = (s.vertices()[0], s.vertices()[1]);
        let (lo, hi) = (ranks[u].min(ranks[w]), ranks[u].max(ranks[w]));
        if lo == hi {
            cells.push(vec![u, w]);
            continue;
        }
        let pts: Vec<usize> = (lo..=hi).map(|l| {
            let p = slicer.on_edge(u, w, l);
            slicer.id(p)
        }).collect();
        cells.extend(pts.windows(2).map(|p| p.to_vec()));
    }

    for s in k.simplices_of_dim(2) {
        let mut v = s.vertices().to_vec();
        v.sort_by_key(|&x| (ranks[x], x));
        let (a, b, c) = (v[0], v[1], v[2]);
        let (ra, rb, rc) = (ranks[a], ranks[b], ranks[c]);
        if ra == rc {
            cells.push(vec![a, b, c]);
            continue;
        }
        // long side a-c, short side a-b-c
        let long = |sl: &Slicer, l: usize| sl.on_edge(a, c, l);
        let short = |sl: &Slicer, l: usize| {
            if l == rb {
                Point::Vertex(b)
            } else if l < rb {
                sl.on_edge(a, b, l)
            } else {
                sl.on_edge(b, c, l)
            }
        };
        for l in ra..rc {
            let quad = [long(&slicer, l), long(&slicer, l + 1), short(&slicer, l + 1), short(&slicer, l)];
            let mut ring: Vec<usize> = Vec::with_capacity(4);
            for p in quad {
                let id = slicer.id(p);
                if !ring.contains(&id) {
                    ring.push(id);
                }
            }
            match ring.len() {
                4 => {
                    cells.push(vec![ring[0], ring[1], ring[2]]);
                    cells.push(vec![ring[0], ring[2], ring[3]]);
                }
                3 => cells.push(ring),
                _ => unreachable!("slab between distinct levels has at least three corners"),
            }
        }
    }

    let vertex_count = slicer.level_of.len();
    let complex = Arc::new(SimplicialComplex::closure(vertex_count, cells.into_iter().map(Simplex::new)));
    let values: Vec<V> = slicer.level_of.iter().map(|&l| levels[l].clone()).collect();
    let segment = Arc::new(segment_complex(levels.len()));
    let map = SimplicialMap::new(complex.clone(), segment, slicer.level_of.clone())
        .expect("sliced simplices span at most two consecutive levels");
    LevelSubdivision { function: PlFunction { complex, values }, map, levels }
}

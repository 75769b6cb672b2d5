use std::collections::HashMap;

use super::SimplicialComplex;

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merge the classes of `a` and `b`; returns false if they were already merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    /// Class label per element, labels numbered by first occurrence.
    pub fn labels(&mut self) -> (Vec<usize>, usize) {
        let mut root_label = HashMap::new();
        let mut labels = Vec::with_capacity(self.parent.len());
        for x in 0..self.parent.len() {
            let r = self.find(x);
            let next = root_label.len();
            labels.push(*root_label.entry(r).or_insert(next));
        }
        (labels, root_label.len())
    }
}

/// Partition a set of simplices (canonical ids of `k`) into the classes of the equivalence
/// generated by "one is a face of the other, both in the set".
///
/// Classes are sorted internally and listed by their smallest id.
pub fn connected_components(k: &SimplicialComplex, subset: &[usize]) -> Vec<Vec<usize>> {
    let position: HashMap<usize, usize> =
        subset.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut uf = UnionFind::new(subset.len());
    for (i, &s) in subset.iter().enumerate() {
        let simplex = k.simplex(s);
        if simplex.len() == 1 {
            continue;
        }
        for face in simplex.proper_faces() {
            if let Some(&j) = k.id_of(&face).and_then(|f| position.get(&f)) {
                uf.union(i, j);
            }
        }
    }
    group_by_labels(subset, &mut uf)
}

pub(crate) fn group_by_labels(subset: &[usize], uf: &mut UnionFind) -> Vec<Vec<usize>> {
    let (labels, count) = uf.labels();
    let mut classes = vec![Vec::new(); count];
    for (i, &s) in subset.iter().enumerate() {
        classes[labels[i]].push(s);
    }
    for c in &mut classes {
        c.sort_unstable();
    }
    classes.sort_unstable_by_key(|c| c[0]);
    classes
}

/// Connected components of a complex, each renumbered as a complex of its own together with
/// the original ids of its vertices.
pub fn split_components(k: &SimplicialComplex) -> Vec<(SimplicialComplex, Vec<usize>)> {
    let mut uf = UnionFind::new(k.vertex_count());
    for e in k.simplices_of_dim(1) {
        uf.union(e.vertices()[0], e.vertices()[1]);
    }
    let (labels, count) = uf.labels();
    let mut groups = vec![Vec::new(); count];
    for v in 0..k.vertex_count() {
        groups[labels[v]].push(v);
    }
    groups
        .into_iter()
        .map(|vs| {
            let sub = k.induced(&vs);
            (sub, vs)
        })
        .collect()
}

/// Components of the full subcomplex on a vertex subset, as sorted vertex lists.
pub(crate) fn vertex_components(k: &SimplicialComplex, vertices: &[usize]) -> Vec<Vec<usize>> {
    let position: HashMap<usize, usize> =
        vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut uf = UnionFind::new(vertices.len());
    for e in k.simplices_of_dim(1) {
        if let (Some(&a), Some(&b)) = (position.get(&e.vertices()[0]), position.get(&e.vertices()[1])) {
            uf.union(a, b);
        }
    }
    group_by_labels(vertices, &mut uf)
}

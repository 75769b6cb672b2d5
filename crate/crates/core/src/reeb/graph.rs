//! Sweep construction of the Reeb graph of a PL function.
//!
//! For a level `c`, the level set `g^-1(c)` meets a simplex in a nonempty convex set exactly
//! when `c` lies in the simplex's value range, and two such slices touch only through a common
//! face whose range also contains `c`. Level-set components are therefore the classes of the
//! face relation restricted to the simplices whose range contains `c`. Components at vertex
//! values become nodes; components strictly between consecutive values become arcs.

use std::collections::HashMap;
use std::fmt::Write;

use serde::Serialize;

use crate::complex::{connected_components, group_by_labels, Simplex, SimplicialComplex, UnionFind};
use crate::error::Result;
use crate::function::PlFunction;
use crate::homology::BettiVector;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReebNode<V> {
    pub value: V,
    /// Index of `value` among the sorted distinct vertex values.
    pub level: usize,
    /// Index of the fiber component within its level.
    pub component: usize,
    /// Not exactly one arc below and one above.
    pub critical: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReebEdge {
    pub lower: usize,
    pub upper: usize,
}

/// Reeb graph as a multigraph, with the map from domain vertices to nodes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReebGraph<V> {
    pub nodes: Vec<ReebNode<V>>,
    pub edges: Vec<ReebEdge>,
    pub vertex_nodes: Vec<usize>,
}

/// Exact Reeb graph of `g`. Only simplices of dimension at most two are consulted.
pub fn reeb_graph<V: Ord + Clone>(g: &PlFunction<V>) -> Result<ReebGraph<V>> {
    let k = g.complex();
    let (levels, ranks) = g.levels();
    let top = k.dim_range(2).end;
    let span: Vec<(usize, usize)> = (0..top)
        .map(|i| {
            let vs = k.simplex(i).vertices();
            let lo = vs.iter().map(|&v| ranks[v]).min().expect("nonempty");
            let hi = vs.iter().map(|&v| ranks[v]).max().expect("nonempty");
            (lo, hi)
        })
        .collect();

    let mut by_low: Vec<Vec<usize>> = vec![Vec::new(); levels.len()];
    for (i, &(lo, _)) in span.iter().enumerate() {
        by_low[lo].push(i);
    }

    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    let mut vertex_nodes = vec![usize::MAX; k.vertex_count()];
    let mut pending_arcs: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut active: Vec<usize> = Vec::new();

    for (l, value) in levels.iter().enumerate() {
        active.extend(by_low[l].iter().copied());
        active.retain(|&i| span[i].1 >= l);
        active.sort_unstable();

        // vertex level l
        let first_node = nodes.len();
        let classes = connected_components(k, &active);
        let mut level_node = HashMap::with_capacity(active.len());
        for (c, class) in classes.iter().enumerate() {
            for &s in class {
                level_node.insert(s, first_node + c);
            }
            nodes.push(ReebNode { value: value.clone(), level: l, component: c, critical: true });
        }
        for (lower, members) in pending_arcs.drain(..) {
            edges.push(ReebEdge { lower, upper: level_node[&members[0]] });
        }
        for v in k.dim_range(0) {
            if ranks[v] == l {
                vertex_nodes[v] = level_node[&v];
            }
        }

        // open interval (l, l+1)
        if l + 1 < levels.len() {
            let crossing: Vec<usize> = active.iter().copied().filter(|&i| span[i].1 > l).collect();
            for class in connected_components(k, &crossing) {
                pending_arcs.push((level_node[&class[0]], class));
            }
        }
    }

    let mut down = vec![0usize; nodes.len()];
    let mut up = vec![0usize; nodes.len()];
    for e in &edges {
        up[e.lower] += 1;
        down[e.upper] += 1;
    }
    for (i, n) in nodes.iter_mut().enumerate() {
        n.critical = !(down[i] == 1 && up[i] == 1);
    }
    Ok(ReebGraph { nodes, edges, vertex_nodes })
}

impl<V> ReebGraph<V> {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Betti numbers of the graph: components and independent cycles.
    pub fn betti(&self) -> BettiVector {
        let mut uf = UnionFind::new(self.nodes.len());
        for e in &self.edges {
            uf.union(e.lower, e.upper);
        }
        let ids: Vec<usize> = (0..self.nodes.len()).collect();
        let b0 = group_by_labels(&ids, &mut uf).len();
        let b1 = self.edges.len() + b0 - self.nodes.len();
        BettiVector::from_numbers(vec![b0, b1])
    }

    /// Simplicial realization: nodes keep their ids, each arc gets a midpoint vertex.
    pub fn to_complex(&self) -> SimplicialComplex {
        let n = self.nodes.len();
        let cells = self.edges.iter().enumerate().flat_map(|(i, e)| {
            [
                Simplex::new([e.lower, n + i]),
                Simplex::new([e.upper, n + i]),
            ]
        });
        SimplicialComplex::closure(n + self.edges.len(), cells.collect::<Vec<_>>())
    }

    /// Graphviz rendering with stable node ids `n0, n1, ...`.
    pub fn to_dot(&self, label: impl Fn(&V) -> String) -> String {
        let mut out = String::from("graph reeb {\n");
        for (i, n) in self.nodes.iter().enumerate() {
            writeln!(out, "  n{i} [label=\"value={}\"];", label(&n.value)).expect("string write");
        }
        for e in &self.edges {
            writeln!(out, "  n{} -- n{};", e.lower, e.upper).expect("string write");
        }
        out.push_str("}\n");
        out
    }
}

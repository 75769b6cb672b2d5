use super::poset::enumerate_chains;
use super::{Simplex, SimplicialComplex};

/// Barycentric subdivision together with its carrier map.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    /// For each vertex of the subdivision, the canonical id of the simplex of the original
    /// complex whose barycenter it is. Vertex `i` of the subdivision carries simplex `i`.
    pub carrier: Vec<usize>,
}

/// Vertices of sd(K) are the simplices of K (same numbering); simplices are chains of faces.
pub fn barycentric_subdivision(k: &SimplicialComplex) -> Subdivision {
    let proper: Vec<Vec<usize>> = k
        .simplices()
        .iter()
        .map(|s| {
            let mut ids: Vec<usize> =
                s.proper_faces().iter().map(|f| k.id_of(f).expect("face-closed")).collect();
            ids.sort_unstable();
            ids
        })
        .collect();
    let chains: Vec<Simplex> = enumerate_chains(k.len(), |x| &proper[x], usize::MAX);
    Subdivision { complex: SimplicialComplex::closure(k.len(), chains), carrier: (0..k.len()).collect() }
}

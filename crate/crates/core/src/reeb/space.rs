//! Reeb space of a simplicial map `f: K -> L`.
//!
//! For a point `y` in the open simplex `τ` of `L`, the fiber `f^-1(y)` meets the open simplex
//! `σ` of `K` iff `f(σ) = τ`, and meets the closed simplex `σ` iff `τ ⊆ f(σ)`; each such
//! slice is convex. Fiber components over `τ` are therefore the classes of the face relation on
//! `S_τ = {σ : τ ⊆ f(σ)}`, independent of the chosen `y`. The Reeb space is the regular cell
//! complex with one cell `(τ, c)` per such class, each carried homeomorphically onto `τ`; its
//! face poset orders `(τ', c') < (τ, c)` when `τ' ⊂ τ` and `c ⊆ c'`. The order complex of that
//! poset is its barycentric subdivision, and the quotient map sends the barycenter of `σ` to
//! the cell `(f(σ), class of σ)`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::complex::{
    barycentric_subdivision, connected_components, vertex_components, Poset, Simplex,
    SimplicialComplex, SimplicialMap,
};
use crate::error::{Error, Result};

/// One fiber component over one codomain simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    /// Canonical id of the codomain simplex.
    pub tau: usize,
    /// Index of the component among the components over `tau`.
    pub component: usize,
    /// Domain simplices in the component, sorted.
    pub members: Vec<usize>,
}

/// Serializable strata table entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumRow {
    pub tau: Simplex,
    pub component: usize,
}

#[derive(Debug)]
pub struct ReebComplex {
    map: SimplicialMap,
    strata: Vec<Stratum>,
    poset: Poset,
    realization: Arc<SimplicialComplex>,
    simplex_stratum: Vec<usize>,
    quotient: OnceLock<SimplicialMap>,
}

/// `S_τ` for every codomain simplex, as sorted lists of domain simplex ids.
fn simplices_over(f: &SimplicialMap) -> Vec<Vec<usize>> {
    let k = f.domain();
    let l = f.codomain();
    let mut over = vec![Vec::new(); l.len()];
    for i in 0..k.len() {
        let image = f.image_of(i);
        over[f.image_id(i)].push(i);
        for face in image.proper_faces() {
            over[l.id_of(&face).expect("codomain is face-closed")].push(i);
        }
    }
    over
}

/// Construct the Reeb space of `f`.
pub fn reeb_space(f: &SimplicialMap) -> Result<ReebComplex> {
    let k = f.domain();
    let l = f.codomain();
    let over = simplices_over(f);

    let mut strata: Vec<Stratum> = Vec::new();
    // per codomain simplex: domain simplex id -> stratum id
    let mut lookup: Vec<HashMap<usize, usize>> = vec![HashMap::new(); l.len()];
    for (tau, members) in over.iter().enumerate() {
        if members.is_empty() {
            continue;
        }
        for (c, class) in connected_components(k, members).into_iter().enumerate() {
            let id = strata.len();
            for &s in &class {
                lookup[tau].insert(s, id);
            }
            strata.push(Stratum { tau, component: c, members: class });
        }
    }

    let mut pairs = Vec::new();
    for (id, st) in strata.iter().enumerate() {
        let probe = st.members[0];
        for face in l.simplex(st.tau).facets() {
            let face_id = l.id_of(&face).expect("codomain is face-closed");
            pairs.push((lookup[face_id][&probe], id));
        }
    }
    let poset = Poset::from_relations(strata.len(), pairs)?;
    let realization = Arc::new(poset.order_complex());
    let simplex_stratum = (0..k.len()).map(|i| lookup[f.image_id(i)][&i]).collect();

    Ok(ReebComplex { map: f.clone(), strata, poset, realization, simplex_stratum, quotient: OnceLock::new() })
}

/// Components of `S_τ` for a codomain simplex `τ`.
pub fn fiber_components_at(f: &SimplicialMap, tau: &Simplex) -> Result<Vec<Vec<usize>>> {
    if !f.codomain().contains(tau) {
        return Err(Error::UnknownSimplex(tau.clone()));
    }
    let members: Vec<usize> = (0..f.domain().len()).filter(|&i| tau.is_face_of(f.image_of(i))).collect();
    Ok(connected_components(f.domain(), &members))
}

impl ReebComplex {
    pub fn map(&self) -> &SimplicialMap {
        &self.map
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    /// Order complex of the stratum poset; vertex `i` is stratum `i`.
    pub fn realization(&self) -> &SimplicialComplex {
        &self.realization
    }

    /// Codomain simplex (canonical id) under a stratum.
    pub fn codomain_projection(&self, stratum: usize) -> usize {
        self.strata[stratum].tau
    }

    /// Stratum hit by the barycenter of domain simplex `id`.
    pub fn stratum_of_simplex(&self, id: usize) -> usize {
        self.simplex_stratum[id]
    }

    /// The quotient map `sd(K) -> realization`, built on first use.
    pub fn quotient_map(&self) -> &SimplicialMap {
        self.quotient.get_or_init(|| {
            let sd = barycentric_subdivision(self.map.domain());
            SimplicialMap::new(Arc::new(sd.complex), self.realization.clone(), self.simplex_stratum.clone())
                .expect("chains of faces map to chains of strata")
        })
    }

    pub fn strata_table(&self) -> Vec<StratumRow> {
        self.strata
            .iter()
            .map(|s| StratumRow { tau: self.map.codomain().simplex(s.tau).clone(), component: s.component })
            .collect()
    }

    /// For each codomain vertex `w`, the strata over `w` must match the components of the full
    /// subcomplex of `K` on `f^-1(w)`. Returns the offending codomain vertices.
    pub fn vertex_strata_mismatches(&self) -> Vec<usize> {
        let k = self.map.domain();
        let l = self.map.codomain();
        let images = self.map.vertex_images();
        let mut bad = Vec::new();
        for w in 0..l.vertex_count() {
            let pre: Vec<usize> = (0..k.vertex_count()).filter(|&v| images[v] == w).collect();
            let expected = vertex_components(k, &pre);
            let tau = l.id_of(&Simplex::new([w])).expect("vertex simplex");
            let mut got: Vec<Vec<usize>> = self
                .strata
                .iter()
                .filter(|s| s.tau == tau)
                .map(|s| s.members.iter().copied().filter(|&m| k.simplex(m).len() == 1 && images[m] == w).collect())
                .collect();
            got.sort();
            let mut expected_ids: Vec<Vec<usize>> = expected
                .into_iter()
                .map(|c| c.into_iter().map(|v| k.id_of(&Simplex::new([v])).expect("vertex")).collect())
                .collect();
            expected_ids.sort();
            if got != expected_ids {
                bad.push(w);
            }
        }
        bad
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{check_simplicial, validate_complex};
    use crate::homology::betti;

    fn d1_onto_circle() -> SimplicialMap {
        let path = validate_complex(4, vec![vec![0, 1], vec![1, 2], vec![2, 3]], true).unwrap();
        let circle = validate_complex(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]], true).unwrap();
        check_simplicial(path, circle, vec![0, 1, 2, 0]).unwrap()
    }

    #[test]
    fn identity_reeb_space_is_the_domain() {
        let k = validate_complex(4, vec![vec![0, 1, 2], vec![2, 3]], true).unwrap();
        let r = reeb_space(&SimplicialMap::identity(k.clone())).unwrap();
        assert_eq!(r.strata().len(), k.len());
        assert_eq!(betti(r.realization()), betti(&k));
    }

    #[test]
    fn interval_onto_circle_stays_an_interval() {
        let f = d1_onto_circle();
        let r = reeb_space(&f).unwrap();
        assert_eq!(betti(r.realization()).b, vec![1]);
        assert!(r.vertex_strata_mismatches().is_empty());
    }

    #[test]
    fn fiber_components_over_vertex_and_edge() {
        let f = d1_onto_circle();
        assert_eq!(fiber_components_at(&f, &Simplex::new([0])).unwrap().len(), 2);
        assert_eq!(fiber_components_at(&f, &Simplex::new([0, 1])).unwrap().len(), 1);
        assert!(matches!(
            fiber_components_at(&f, &Simplex::new([0, 1, 2])).unwrap_err(),
            Error::UnknownSimplex(_)
        ));
    }

    #[test]
    fn constant_map_components() {
        let k = validate_complex(5, vec![vec![0, 1], vec![2, 3, 4]], true).unwrap();
        let f = SimplicialMap::constant(k);
        assert_eq!(fiber_components_at(&f, &Simplex::new([0])).unwrap().len(), 2);
        let r = reeb_space(&f).unwrap();
        assert_eq!(r.strata().len(), 2);
        assert_eq!(betti(r.realization()).b, vec![2]);
    }

    #[test]
    fn quotient_map_is_vertex_surjective() {
        let r = reeb_space(&d1_onto_circle()).unwrap();
        let q = r.quotient_map();
        assert!(q.is_vertex_surjective());
        assert_eq!(q.domain().vertex_count(), 7);
    }
}

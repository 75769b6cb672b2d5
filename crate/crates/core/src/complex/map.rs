use std::sync::Arc;

use super::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// A vertex map between complexes carrying every simplex onto a simplex.
///
/// Domain and codomain are shared behind `Arc`, so maps and the structures derived from them
/// clone cheaply.
#[derive(Clone, Debug)]
pub struct SimplicialMap {
    domain: Arc<SimplicialComplex>,
    codomain: Arc<SimplicialComplex>,
    images: Vec<usize>,
    // canonical codomain id of f(σ) for each domain simplex σ
    simplex_images: Vec<usize>,
}

/// Accept `images` as a map `k -> l` iff every simplex image is a simplex of `l`.
pub fn check_simplicial(
    k: impl Into<Arc<SimplicialComplex>>,
    l: impl Into<Arc<SimplicialComplex>>,
    images: Vec<usize>,
) -> Result<SimplicialMap> {
    SimplicialMap::new(k.into(), l.into(), images)
}

impl SimplicialMap {
    pub fn new(
        domain: Arc<SimplicialComplex>,
        codomain: Arc<SimplicialComplex>,
        images: Vec<usize>,
    ) -> Result<Self> {
        if images.len() != domain.vertex_count() {
            return Err(Error::ImageCountMismatch {
                expected: domain.vertex_count(),
                found: images.len(),
            });
        }
        if let Some(&v) = images.iter().find(|&&v| v >= codomain.vertex_count()) {
            return Err(Error::VertexOutOfRange { vertex: v, count: codomain.vertex_count() });
        }
        let mut simplex_images = Vec::with_capacity(domain.len());
        for s in domain.simplices() {
            let image = Simplex::from_unsorted_with_repeats(s.vertices().iter().map(|&v| images[v]));
            match codomain.id_of(&image) {
                Some(id) => simplex_images.push(id),
                None => return Err(Error::NotSimplicial(s.clone())),
            }
        }
        Ok(SimplicialMap { domain, codomain, images, simplex_images })
    }

    /// Identity map of a complex.
    pub fn identity(k: impl Into<Arc<SimplicialComplex>>) -> Self {
        let k = k.into();
        let images = (0..k.vertex_count()).collect();
        SimplicialMap::new(k.clone(), k, images).expect("identity is simplicial")
    }

    /// Constant map onto a one-vertex complex.
    pub fn constant(k: impl Into<Arc<SimplicialComplex>>) -> Self {
        let k = k.into();
        let point = Arc::new(SimplicialComplex::closure(1, []));
        let images = vec![0; k.vertex_count()];
        SimplicialMap::new(k, point, images).expect("constant map is simplicial")
    }

    pub fn domain(&self) -> &SimplicialComplex {
        &self.domain
    }

    pub fn codomain(&self) -> &SimplicialComplex {
        &self.codomain
    }

    pub fn domain_arc(&self) -> &Arc<SimplicialComplex> {
        &self.domain
    }

    pub fn codomain_arc(&self) -> &Arc<SimplicialComplex> {
        &self.codomain
    }

    pub fn vertex_images(&self) -> &[usize] {
        &self.images
    }

    /// Canonical codomain id of the image of domain simplex `id`.
    pub fn image_id(&self, id: usize) -> usize {
        self.simplex_images[id]
    }

    pub fn image_of(&self, id: usize) -> &Simplex {
        self.codomain.simplex(self.simplex_images[id])
    }

    /// Apply the vertex map to an arbitrary vertex set of the domain.
    pub fn apply(&self, s: &Simplex) -> Simplex {
        Simplex::from_unsorted_with_repeats(s.vertices().iter().map(|&v| self.images[v]))
    }

    /// Restriction to a renumbered sub-complex whose vertex `i` is domain vertex `vertices[i]`.
    pub fn restrict(&self, sub: SimplicialComplex, vertices: &[usize]) -> Result<SimplicialMap> {
        let images = vertices.iter().map(|&v| self.images[v]).collect();
        SimplicialMap::new(Arc::new(sub), self.codomain.clone(), images)
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &SimplicialMap) -> Result<SimplicialMap> {
        let images = self.images.iter().map(|&v| next.images[v]).collect();
        SimplicialMap::new(self.domain.clone(), next.codomain.clone(), images)
    }

    /// Sub-complex of the codomain made of image simplices, renumbered, with original ids.
    pub fn image_complex(&self) -> (SimplicialComplex, Vec<usize>) {
        let mut ids: Vec<usize> = self.simplex_images.clone();
        ids.sort_unstable();
        ids.dedup();
        self.codomain.subcomplex(ids.into_iter().map(|i| self.codomain.simplex(i).clone()))
    }

    pub fn is_vertex_surjective(&self) -> bool {
        let mut hit = vec![false; self.codomain.vertex_count()];
        for &v in &self.images {
            hit[v] = true;
        }
        hit.into_iter().all(|h| h)
    }
}

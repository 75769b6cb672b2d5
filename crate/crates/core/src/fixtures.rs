//! Deterministic example maps and seeded random instances.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{barycentric_subdivision, product_map, Simplex, SimplicialComplex, SimplicialMap};
use crate::error::{Error, Result};
use crate::function::PlFunction;

/// Boundary of the standard `n`-simplex, on vertices `0..=n`.
pub fn boundary_simplex(n: usize) -> SimplicialComplex {
    let full = Simplex::new(0..=n);
    SimplicialComplex::closure(n + 1, full.facets())
}

/// The full simplex on vertices `0..n`.
pub fn full_simplex(n: usize) -> SimplicialComplex {
    SimplicialComplex::closure(n, [Simplex::new(0..n)])
}

/// Seven-vertex torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn torus_complex() -> SimplicialComplex {
    let triangles = (0..7).flat_map(|i| {
        [Simplex::new([i, (i + 1) % 7, (i + 3) % 7]), Simplex::new([i, (i + 2) % 7, (i + 3) % 7])]
    });
    SimplicialComplex::closure(7, triangles)
}

/// Height function on [`torus_complex`] and its simplicial form onto a subdivided segment.
pub fn torus_height() -> (PlFunction<i64>, SimplicialMap) {
    let f = PlFunction::new(torus_complex(), (0..7).collect()).expect("seven values");
    let map = f.level_subdivision().map;
    (f, map)
}

/// A disk mapped onto a sphere of the same dimension, collapsing the boundary to a point.
///
/// `n = 1`: the path `v0 v1 v2 v3` onto the triangle boundary with images `0, 1, 2, 0`.
/// `n = 2`: the barycentric subdivision of the tetrahedron boundary minus the open star of the
/// barycenter of vertex `0`, mapped back to the tetrahedron boundary by sending the barycenter
/// of `σ` to `0` when `0 ∈ σ` and to `min σ` otherwise. The hexagonal boundary goes to `0`.
pub fn disk_collapse(n: usize) -> Result<SimplicialMap> {
    match n {
        1 => {
            let path = SimplicialComplex::closure(4, (1..4).map(|i| Simplex::new([i - 1, i])));
            SimplicialMap::new(Arc::new(path), Arc::new(boundary_simplex(2)), vec![0, 1, 2, 0])
        }
        2 => {
            let sphere = boundary_simplex(3);
            let sd = barycentric_subdivision(&sphere);
            let w = sphere.id_of(&Simplex::new([0])).expect("vertex");
            let kept: Vec<usize> = (0..sd.complex.vertex_count()).filter(|&v| v != w).collect();
            let disk = sd.complex.induced(&kept);
            let images = kept
                .iter()
                .map(|&v| {
                    let sigma = sphere.simplex(sd.carrier[v]);
                    if sigma.contains(0) {
                        0
                    } else {
                        sigma.vertices()[0]
                    }
                })
                .collect();
            SimplicialMap::new(Arc::new(disk), Arc::new(sphere), images)
        }
        _ => Err(Error::UnsupportedDimension(n)),
    }
}

/// `k`-fold staircase product `f × ... × f`.
pub fn product_power(f: &SimplicialMap, k: usize) -> Result<SimplicialMap> {
    if k == 0 {
        return Err(Error::InvalidParams("k must be positive".into()));
    }
    let mut out = f.clone();
    for _ in 1..k {
        out = product_map(&out, f)?;
    }
    Ok(out)
}

/// Constant map from the three-edge circle to a point.
pub fn constant_circle() -> SimplicialMap {
    SimplicialMap::constant(boundary_simplex(2))
}

/// Connected random complex of dimension at most 2 with `3..=max(3, budget)` vertices.
pub fn random_complex(rng: &mut impl Rng, budget: usize) -> SimplicialComplex {
    let n = rng.gen_range(3..=budget.max(3));
    let mut simplices = Vec::new();
    for v in 1..n {
        simplices.push(Simplex::new([rng.gen_range(0..v), v]));
    }
    for _ in 0..rng.gen_range(0..=n) {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b {
            simplices.push(Simplex::new([a, b]));
        }
    }
    for _ in 0..rng.gen_range(0..=n) {
        let t: Vec<usize> = rand::seq::index::sample(rng, n, 3).into_vec();
        simplices.push(Simplex::new(t));
    }
    simplices.sort();
    simplices.dedup();
    SimplicialComplex::closure(n, simplices)
}

fn random_codomain(rng: &mut impl Rng) -> SimplicialComplex {
    match rng.gen_range(0..4) {
        0 => full_simplex(3),
        1 => boundary_simplex(2),
        2 => SimplicialComplex::closure(3, [Simplex::new([0, 1]), Simplex::new([1, 2])]),
        _ => boundary_simplex(3),
    }
}

// Assign images vertex by vertex, checking each simplex once its largest vertex is placed.
fn greedy_images(rng: &mut impl Rng, k: &SimplicialComplex, l: &SimplicialComplex) -> Option<Vec<usize>> {
    let mut by_top: Vec<Vec<&Simplex>> = vec![Vec::new(); k.vertex_count()];
    for s in k.simplices().iter().filter(|s| s.len() > 1) {
        by_top[*s.vertices().last().unwrap()].push(s);
    }
    let mut images = Vec::with_capacity(k.vertex_count());
    let mut candidates: Vec<usize> = (0..l.vertex_count()).collect();
    for v in 0..k.vertex_count() {
        candidates.shuffle(rng);
        images.push(0);
        let ok = candidates.iter().any(|&c| {
            images[v] = c;
            by_top[v].iter().all(|s| {
                l.contains(&Simplex::from_unsorted_with_repeats(s.vertices().iter().map(|&u| images[u])))
            })
        });
        if !ok {
            return None;
        }
    }
    Some(images)
}

/// Reproducible random simplicial map from a connected 2-complex onto a small codomain.
pub fn random_map(seed: u64, budget: usize) -> SimplicialMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = Arc::new(random_complex(&mut rng, budget));
    for _ in 0..20 {
        let l = random_codomain(&mut rng);
        if let Some(images) = greedy_images(&mut rng, &k, &l) {
            return SimplicialMap::new(k, Arc::new(l), images).expect("checked simplicial");
        }
    }
    // every vertex map into a full simplex is simplicial
    let images = (0..k.vertex_count()).map(|_| rng.gen_range(0..3)).collect();
    SimplicialMap::new(k, Arc::new(full_simplex(3)), images).expect("full simplex codomain")
}

/// Reproducible PL function with distinct values `0..n` on a random connected 2-complex.
pub fn random_function(seed: u64, budget: usize) -> PlFunction<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = random_complex(&mut rng, budget);
    let mut values: Vec<i64> = (0..k.vertex_count() as i64).collect();
    values.shuffle(&mut rng);
    PlFunction::new(k, values).expect("one value per vertex")
}

/// A named fixture with integer parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureSpec {
    pub name: String,
    pub params: BTreeMap<String, i64>,
}

/// Output of a fixture generator.
#[derive(Clone, Debug)]
pub enum Fixture {
    Map(SimplicialMap),
    Function { function: PlFunction<i64>, map: SimplicialMap },
}

impl Fixture {
    /// The simplicial map form of the fixture.
    pub fn map(&self) -> &SimplicialMap {
        match self {
            Fixture::Map(m) => m,
            Fixture::Function { map, .. } => map,
        }
    }
}

pub struct FixtureInfo {
    pub name: &'static str,
    /// Parameter names with their defaults.
    pub params: &'static [(&'static str, i64)],
    pub summary: &'static str,
}

pub const FIXTURES: &[FixtureInfo] = &[
    FixtureInfo { name: "disk_collapse", params: &[("n", 2)], summary: "n-disk onto n-sphere collapsing the boundary (n = 1, 2)" },
    FixtureInfo { name: "product_power", params: &[("n", 2), ("k", 2)], summary: "k-fold product of disk_collapse(n)" },
    FixtureInfo { name: "torus_height", params: &[], summary: "height function on a seven-vertex torus" },
    FixtureInfo { name: "constant_circle", params: &[], summary: "constant map from a three-edge circle" },
    FixtureInfo { name: "random_map", params: &[("seed", 0), ("budget", 8)], summary: "random map from a connected 2-complex" },
    FixtureInfo { name: "random_function", params: &[("seed", 0), ("budget", 8)], summary: "random PL function with distinct values" },
];

impl FixtureSpec {
    pub fn new(name: impl Into<String>) -> Self {
        FixtureSpec { name: name.into(), params: BTreeMap::new() }
    }

    pub fn with(mut self, key: &str, value: i64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    fn info(&self) -> Result<&'static FixtureInfo> {
        FIXTURES.iter().find(|f| f.name == self.name).ok_or_else(|| Error::UnknownFixture(self.name.clone()))
    }

    fn param(&self, info: &FixtureInfo, key: &str, min: i64, max: i64) -> Result<i64> {
        let default = info.params.iter().find(|(k, _)| *k == key).map(|(_, v)| *v).expect("documented parameter");
        let v = self.params.get(key).copied().unwrap_or(default);
        if !(min..=max).contains(&v) {
            return Err(Error::InvalidParams(format!("{key} = {v} is outside {min}..={max}")));
        }
        Ok(v)
    }

    pub fn build(&self) -> Result<Fixture> {
        let info = self.info()?;
        if let Some(key) = self.params.keys().find(|k| !info.params.iter().any(|(p, _)| p == k)) {
            return Err(Error::InvalidParams(format!("{} takes no parameter `{key}`", self.name)));
        }
        Ok(match info.name {
            "disk_collapse" => {
                let n = self.param(info, "n", 0, i64::MAX)?;
                Fixture::Map(disk_collapse(n as usize)?)
            }
            "product_power" => {
                let n = self.param(info, "n", 0, i64::MAX)?;
                let k = self.param(info, "k", 1, 4)?;
                Fixture::Map(product_power(&disk_collapse(n as usize)?, k as usize)?)
            }
            "torus_height" => {
                let (function, map) = torus_height();
                Fixture::Function { function, map }
            }
            "constant_circle" => Fixture::Map(constant_circle()),
            "random_map" => {
                let seed = self.param(info, "seed", 0, i64::MAX)?;
                let budget = self.param(info, "budget", 3, 64)?;
                Fixture::Map(random_map(seed as u64, budget as usize))
            }
            "random_function" => {
                let seed = self.param(info, "seed", 0, i64::MAX)?;
                let budget = self.param(info, "budget", 3, 64)?;
                let function = random_function(seed as u64, budget as usize);
                let map = function.level_subdivision().map;
                Fixture::Function { function, map }
            }
            _ => unreachable!("listed fixture"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::betti;

    #[test]
    fn torus_is_a_torus() {
        let t = torus_complex();
        assert_eq!((t.count_of_dim(0), t.count_of_dim(1), t.count_of_dim(2)), (7, 21, 14));
        assert_eq!(betti(&t).b, vec![1, 2, 1]);
    }

    #[test]
    fn disk_collapse_shapes() {
        let f = disk_collapse(2).unwrap();
        let k = f.domain();
        assert_eq!((k.count_of_dim(0), k.count_of_dim(1), k.count_of_dim(2)), (13, 30, 18));
        assert_eq!(k.euler_characteristic(), 1);
        assert_eq!(disk_collapse(1).unwrap().domain().len(), 7);
        assert_eq!(disk_collapse(3).unwrap_err(), Error::UnsupportedDimension(3));
    }

    #[test]
    fn random_maps_are_deterministic_and_connected() {
        for seed in 0..20 {
            let a = random_map(seed, 8);
            let b = random_map(seed, 8);
            assert_eq!(a.domain(), b.domain());
            assert_eq!(a.vertex_images(), b.vertex_images());
            assert_eq!(betti(a.domain()).get(0), 1);
        }
    }

    #[test]
    fn specs_check_parameters() {
        assert!(matches!(FixtureSpec::new("nope").build(), Err(Error::UnknownFixture(_))));
        assert!(matches!(FixtureSpec::new("torus_height").with("k", 2).build(), Err(Error::InvalidParams(_))));
        assert!(matches!(FixtureSpec::new("disk_collapse").with("n", 5).build(), Err(Error::UnsupportedDimension(5))));
        let f = FixtureSpec::new("product_power").with("k", 1).build().unwrap();
        assert_eq!(f.map().domain().vertex_count(), 13);
    }
}

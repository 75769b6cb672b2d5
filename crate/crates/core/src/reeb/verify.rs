use serde::Serialize;

use super::space::reeb_space;
use crate::complex::{split_components, SimplicialMap};
use crate::error::Result;
use crate::homology::betti;

/// Outcome of [`verify_quotient`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    /// Projection of the quotient agrees with `f` on every barycenter.
    pub commutes: bool,
    /// Every simplex of the realization has exactly one fiber component under the quotient.
    pub fibers_connected: bool,
    pub vertex_surjective: bool,
    /// Strata over codomain vertices match the full-subcomplex components.
    pub vertex_strata_match: bool,
    pub failures: Vec<String>,
    pub passed: bool,
}

/// Check that the quotient map factors `f` through the realization with connected fibers.
pub fn verify_quotient(f: &SimplicialMap) -> Result<QuotientReport> {
    let r = reeb_space(f)?;
    let mut failures = Vec::new();

    let k = f.domain();
    let mut commutes = true;
    for i in 0..k.len() {
        if r.codomain_projection(r.stratum_of_simplex(i)) != f.image_id(i) {
            commutes = false;
            failures.push(format!("barycenter of {} projects off f", k.simplex(i)));
        }
    }

    let q = r.quotient_map();
    let vertex_surjective = q.is_vertex_surjective();
    if !vertex_surjective {
        failures.push("quotient map misses a stratum".to_string());
    }

    let second = reeb_space(q)?;
    let mut per_simplex = vec![0usize; r.realization().len()];
    for s in second.strata() {
        per_simplex[s.tau] += 1;
    }
    let mut fibers_connected = true;
    for (rho, &n) in per_simplex.iter().enumerate() {
        if n != 1 {
            fibers_connected = false;
            failures.push(format!("{} fiber components over realization simplex {}", n, r.realization().simplex(rho)));
        }
    }

    let bad = r.vertex_strata_mismatches();
    let vertex_strata_match = bad.is_empty();
    for w in bad {
        failures.push(format!("strata over codomain vertex {w} do not match full-subcomplex components"));
    }

    let passed = failures.is_empty();
    Ok(QuotientReport { commutes, fibers_connected, vertex_surjective, vertex_strata_match, failures, passed })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentB1 {
    pub b1_domain: usize,
    pub b1_reeb: usize,
    pub holds: bool,
}

/// Outcome of [`b1_inequality_check`], one row per connected component of the domain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct B1Report {
    pub components: Vec<ComponentB1>,
    pub holds: bool,
}

/// `b1(Reeb(f)) <= b1(X)` on each connected component of the domain.
pub fn b1_inequality_check(f: &SimplicialMap) -> Result<B1Report> {
    let mut components = Vec::new();
    for (sub, vertices) in split_components(f.domain()) {
        let b1_domain = betti(&sub).get(1);
        let restricted = f.restrict(sub, &vertices)?;
        let b1_reeb = betti(reeb_space(&restricted)?.realization()).get(1);
        components.push(ComponentB1 { b1_domain, b1_reeb, holds: b1_reeb <= b1_domain });
    }
    let holds = components.iter().all(|c| c.holds);
    Ok(B1Report { components, holds })
}

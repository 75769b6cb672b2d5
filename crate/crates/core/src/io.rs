//! JSON file formats for complexes, maps, and PL functions, plus report documents.
//!
//! Complex document:
//!
//! ```json
//! {"vertex_count": 4, "ambient_dim": 2, "vertices": [["0", "1/2"], ...],
//!  "simplices": [[0, 1, 2], [1, 3]], "close_faces": true}
//! ```
//!
//! Every field except `simplices` is optional. Vertices `0..vertex_count` are always present
//! as 0-simplices; `vertex_count` defaults to the number of coordinate rows, or else to one
//! more than the largest vertex mentioned. Without `close_faces` every face of a listed simplex
//! must be listed too (vertex singletons excepted). Coordinates and function values are exact
//! rationals written as `"p/q"` or integer strings.
//!
//! A map document has `domain` and `codomain` (each a complex document or a path relative to
//! the map file) and `vertex_images`. A function document has `complex` (document or path)
//! and `values`. Unknown fields and trailing content are rejected.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::complex::{RawComplex, SimplicialComplex, SimplicialMap};
use crate::error::{Error, Result};
use crate::homology::BettiVector;
use crate::reeb::{ReebComplex, ReebGraph, StratumRow};
use crate::scalar::{format_rational, parse_rational};
use crate::{Rational, RationalFunction};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vec<String>>>,
    pub simplices: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub close_faces: bool,
}

/// Either a path (relative to the referring file) or an inline document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComplexRef {
    Path(String),
    Inline(ComplexDoc),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    pub domain: Value,
    pub codomain: Value,
    pub vertex_images: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionDoc {
    pub complex: Value,
    pub values: Vec<String>,
}

fn parse_error(source: &str, e: serde_json::Error) -> Error {
    Error::Parse(format!("{source}: {e}"))
}

fn from_str<T: for<'de> Deserialize<'de>>(source: &str, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| parse_error(source, e))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn parse_rationals(source: &str, what: &str, items: &[String]) -> Result<Vec<Rational>> {
    items
        .iter()
        .map(|s| parse_rational(s).ok_or_else(|| Error::Parse(format!("{source}: invalid rational {what} `{s}`"))))
        .collect()
}

impl ComplexDoc {
    pub fn to_complex(&self, source: &str) -> Result<SimplicialComplex> {
        let coordinates = match &self.vertices {
            Some(rows) => {
                let parsed = rows
                    .iter()
                    .map(|row| parse_rationals(source, "coordinate", row))
                    .collect::<Result<Vec<_>>>()?;
                if let Some(dim) = self.ambient_dim {
                    if let Some((vertex, row)) = parsed.iter().enumerate().find(|(_, r)| r.len() != dim) {
                        return Err(Error::AmbientDimension { vertex, expected: dim, found: row.len() });
                    }
                }
                Some(parsed)
            }
            None => None,
        };
        let vertex_count = self.vertex_count.unwrap_or_else(|| match &coordinates {
            Some(c) => c.len(),
            None => self.simplices.iter().flatten().max().map_or(0, |&v| v + 1),
        });
        let mut raw = RawComplex::new(vertex_count, self.simplices.clone()).close_faces(self.close_faces);
        if let Some(c) = coordinates {
            raw = raw.with_coordinates(c);
        }
        raw.validate()
    }

    /// Document listing maximal simplices only, with `close_faces` set.
    pub fn from_complex(k: &SimplicialComplex) -> Self {
        let simplices = k
            .maximal_simplices()
            .into_iter()
            .map(|id| k.simplex(id).vertices().to_vec())
            .filter(|s| s.len() > 1)
            .collect();
        let vertices = k.coordinates().map(|c| c.iter().map(|row| row.iter().map(format_rational).collect()).collect());
        ComplexDoc {
            vertex_count: Some(k.vertex_count()),
            ambient_dim: k.ambient_dim(),
            vertices,
            simplices,
            close_faces: true,
        }
    }
}

pub fn parse_complex(source: &str, text: &str) -> Result<SimplicialComplex> {
    from_str::<ComplexDoc>(source, text)?.to_complex(source)
}

pub fn load_complex(path: &Path) -> Result<SimplicialComplex> {
    parse_complex(&path.display().to_string(), &read(path)?)
}

fn resolve_complex(source: &str, base: &Path, value: &Value) -> Result<SimplicialComplex> {
    match value {
        Value::String(rel) => load_complex(&base.join(rel)),
        other => {
            let doc: ComplexDoc = serde_json::from_value(other.clone()).map_err(|e| parse_error(source, e))?;
            doc.to_complex(source)
        }
    }
}

/// Parse a map document; relative paths resolve against `base`.
pub fn parse_map(source: &str, text: &str, base: &Path) -> Result<SimplicialMap> {
    let doc: MapDoc = from_str(source, text)?;
    let domain = resolve_complex(source, base, &doc.domain)?;
    let codomain = resolve_complex(source, base, &doc.codomain)?;
    SimplicialMap::new(Arc::new(domain), Arc::new(codomain), doc.vertex_images)
}

fn parent(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

pub fn load_map(path: &Path) -> Result<SimplicialMap> {
    parse_map(&path.display().to_string(), &read(path)?, &parent(path))
}

pub fn parse_function(source: &str, text: &str, base: &Path) -> Result<RationalFunction> {
    let doc: FunctionDoc = from_str(source, text)?;
    let complex = resolve_complex(source, base, &doc.complex)?;
    let values = parse_rationals(source, "value", &doc.values)?;
    RationalFunction::new(complex, values)
}

pub fn load_function(path: &Path) -> Result<RationalFunction> {
    parse_function(&path.display().to_string(), &read(path)?, &parent(path))
}

/// A map or function file, told apart by its fields.
#[derive(Clone, Debug)]
pub enum Input {
    Map(SimplicialMap),
    Function(RationalFunction),
}

pub fn load_input(path: &Path) -> Result<Input> {
    let source = path.display().to_string();
    let text = read(path)?;
    let value: Value = from_str(&source, &text)?;
    let base = parent(path);
    match &value {
        Value::Object(fields) if fields.contains_key("values") => {
            parse_function(&source, &text, &base).map(Input::Function)
        }
        Value::Object(fields) if fields.contains_key("vertex_images") => {
            parse_map(&source, &text, &base).map(Input::Map)
        }
        _ => Err(Error::Parse(format!("{source}: expected a map (`vertex_images`) or function (`values`) document"))),
    }
}

pub fn map_doc(f: &SimplicialMap, domain: Value, codomain: Value) -> MapDoc {
    MapDoc { domain, codomain, vertex_images: f.vertex_images().to_vec() }
}

/// Inline map document.
pub fn map_doc_inline(f: &SimplicialMap) -> MapDoc {
    let inline = |k: &SimplicialComplex| serde_json::to_value(ComplexDoc::from_complex(k)).expect("serializable");
    map_doc(f, inline(f.domain()), inline(f.codomain()))
}

pub fn function_doc<V: ToString + Ord + Clone>(f: &crate::PlFunction<V>, complex: Value) -> FunctionDoc {
    FunctionDoc { complex, values: f.values().iter().map(ToString::to_string).collect() }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphNodeRow {
    pub id: usize,
    pub value: String,
    pub critical: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReebGraphReport {
    pub betti: Vec<usize>,
    pub total: usize,
    pub nodes: Vec<GraphNodeRow>,
    pub edges: Vec<[usize; 2]>,
}

impl ReebGraphReport {
    pub fn new<V>(g: &ReebGraph<V>, label: impl Fn(&V) -> String) -> Self {
        let b: BettiVector = g.betti();
        ReebGraphReport {
            betti: b.b,
            total: b.total,
            nodes: g
                .nodes
                .iter()
                .enumerate()
                .map(|(id, n)| GraphNodeRow { id, value: label(&n.value), critical: n.critical })
                .collect(),
            edges: g.edges.iter().map(|e| [e.lower, e.upper]).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReebSpaceReport {
    pub betti: Vec<usize>,
    pub total: usize,
    pub euler: i64,
    pub strata: Vec<StratumRow>,
    pub realization: ComplexDoc,
}

impl ReebSpaceReport {
    pub fn new(r: &ReebComplex, b: &BettiVector) -> Self {
        ReebSpaceReport {
            betti: b.b.clone(),
            total: b.total,
            euler: r.realization().euler_characteristic(),
            strata: r.strata_table(),
            realization: ComplexDoc::from_complex(r.realization()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_round_trip() {
        let text = r#"{"simplices": [[0,1],[1,2],[0,2]]}"#;
        let k = parse_complex("t", text).unwrap();
        assert_eq!(k.len(), 6);
        let doc = ComplexDoc::from_complex(&k);
        let again = doc.to_complex("doc").unwrap();
        assert_eq!(k, again);
    }

    #[test]
    fn missing_faces_and_garbage() {
        assert!(matches!(parse_complex("t", r#"{"simplices": [[0,1,2]]}"#), Err(Error::MissingFace { .. })));
        assert!(parse_complex("t", r#"{"simplices": [[0,1,2]], "close_faces": true}"#).is_ok());
        let e = parse_complex("t", "{\"simplices\": []}\nxyz").unwrap_err();
        assert!(matches!(&e, Error::Parse(m) if m.contains("line 2")), "{e}");
        assert!(matches!(parse_complex("t", r#"{"simplices": [], "extra": 1}"#), Err(Error::Parse(_))));
    }

    #[test]
    fn coordinates() {
        let text = r#"{"ambient_dim": 1, "vertices": [["0"], ["1/2"]], "simplices": [[0,1]]}"#;
        let k = parse_complex("t", text).unwrap();
        assert_eq!(k.vertex_count(), 2);
        assert_eq!(ComplexDoc::from_complex(&k).vertices.unwrap()[1], vec!["1/2".to_string()]);
        let bad = r#"{"ambient_dim": 2, "vertices": [["0"], ["1"]], "simplices": []}"#;
        assert!(matches!(parse_complex("t", bad), Err(Error::AmbientDimension { vertex: 0, .. })));
        let bad = r#"{"vertices": [["zero"]], "simplices": []}"#;
        assert!(matches!(parse_complex("t", bad), Err(Error::Parse(_))));
    }

    #[test]
    fn inline_map_and_function() {
        let text = r#"{"domain": {"simplices": [[0,1],[1,2]]}, "codomain": {"simplices": [[0,1]]},
                       "vertex_images": [0, 1, 0]}"#;
        let f = parse_map("t", text, Path::new(".")).unwrap();
        assert_eq!(f.vertex_images(), &[0, 1, 0]);
        let again = serde_json::to_string(&map_doc_inline(&f)).unwrap();
        assert_eq!(parse_map("t", &again, Path::new(".")).unwrap().vertex_images(), f.vertex_images());

        let text = r#"{"complex": {"simplices": [[0,1]]}, "values": ["0", "-3/2"]}"#;
        let g = parse_function("t", text, Path::new(".")).unwrap();
        assert_eq!(g.values()[1], Rational::new((-3).into(), 2.into()));
        let text = r#"{"complex": {"simplices": [[0,1]]}, "values": ["0"]}"#;
        assert!(matches!(parse_function("t", text, Path::new(".")), Err(Error::ValueCountMismatch { .. })));
    }
}

//! JSON diagram documents.
//!
//! ```json
//! {
//!   "format_version": "1",
//!   "surface": {"genus": 1, "boundary": 0},
//!   "families": {
//!     "alpha": [[1,0]],
//!     "beta": [[0,1]],
//!     "gamma": [[1,1]]
//!   },
//!   "metadata": {"name": "CP2", "description": "..."}
//! }
//! ```
//!
//! Each curve is a coordinate tuple in the basis `(a₁,b₁,…,a_g,b_g,d₁,…,d_{b−1})`.
//! The surface is closed iff `boundary` is 0, and that decides whether the
//! document holds a closed or a relative diagram. Parsing checks structure
//! only; homological validation is separate.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::diagram::{Diagram, Family};
use crate::error::Error;
use crate::surface::{H1Class, SurfaceModel};

pub const FORMAT_VERSION: &str = "1";

/// Largest accepted absolute value of a coordinate.
pub const MAGNITUDE_CAP: i64 = 1_000_000;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub name: Option<String>,
    pub description: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramDocument {
    pub format_version: String,
    pub diagram: Diagram,
    pub metadata: Option<Metadata>,
}

impl DiagramDocument {
    pub fn new(diagram: impl Into<Diagram>) -> Self {
        Self {
            format_version: FORMAT_VERSION.to_string(),
            diagram: diagram.into(),
            metadata: None,
        }
    }

    pub fn with_metadata(mut self, name: &str, description: &str) -> Self {
        self.metadata = Some(Metadata {
            name: Some(name.to_string()),
            description: Some(description.to_string()),
        });
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedDocument {
    pub document: DiagramDocument,
    /// Unknown fields, which are ignored.
    pub warnings: Vec<String>,
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>, Error> {
    v.as_object()
        .ok_or_else(|| schema(format!("{what} must be an object")))
}

fn warn_unknown(map: &Map<String, Value>, known: &[&str], path: &str, warnings: &mut Vec<String>) {
    for key in map.keys() {
        if !known.contains(&key.as_str()) {
            warnings.push(format!("unknown field {path}{key:?} ignored"));
        }
    }
}

fn count(map: &Map<String, Value>, key: &str) -> Result<usize, Error> {
    let v = map
        .get(key)
        .ok_or_else(|| schema(format!("surface.{key} is missing")))?;
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| {
            schema(format!(
                "surface.{key} must be a non-negative integer, got {v}"
            ))
        })
}

fn curves(map: &Map<String, Value>, fam: Family, dim: usize) -> Result<Vec<H1Class>, Error> {
    let v = map
        .get(fam.name())
        .ok_or_else(|| schema(format!("families.{fam} is missing")))?;
    let list = v
        .as_array()
        .ok_or_else(|| schema(format!("families.{fam} must be an array of curves")))?;
    list.iter()
        .enumerate()
        .map(|(i, curve)| {
            let at = format!("family {fam}, curve {}", i + 1);
            let coords = curve
                .as_array()
                .ok_or_else(|| schema(format!("{at}: expected an array of integers")))?;
            if coords.len() != dim {
                return Err(schema(format!("{at}: expected length {dim}")));
            }
            coords
                .iter()
                .map(|x| {
                    let n = x
                        .as_i64()
                        .ok_or_else(|| schema(format!("{at}: {x} is not an integer")))?;
                    if n.abs() > MAGNITUDE_CAP {
                        return Err(schema(format!(
                            "{at}: entry {n} exceeds magnitude cap {MAGNITUDE_CAP}"
                        )));
                    }
                    Ok(n)
                })
                .collect::<Result<Vec<_>, _>>()
                .map(H1Class)
        })
        .collect()
}

fn optional_string(map: &Map<String, Value>, key: &str) -> Result<Option<String>, Error> {
    match map.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(Value::String(s)) => Ok(Some(s.clone())),
        Some(other) => Err(schema(format!(
            "metadata.{key} must be a string, got {other}"
        ))),
    }
}

/// Parses a document. Closed iff the surface has no boundary.
pub fn parse_diagram(text: &str) -> Result<ParsedDocument, Error> {
    let root: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut warnings = Vec::new();
    let top = object(&root, "document")?;
    warn_unknown(
        top,
        &["format_version", "surface", "families", "metadata"],
        "",
        &mut warnings,
    );

    let version = top
        .get("format_version")
        .and_then(Value::as_str)
        .ok_or_else(|| schema("format_version must be a string"))?;
    if version != FORMAT_VERSION {
        return Err(schema(format!(
            "unsupported format_version {version:?}, expected {FORMAT_VERSION:?}"
        )));
    }

    let surface = object(top.get("surface").unwrap_or(&Value::Null), "surface")?;
    warn_unknown(surface, &["genus", "boundary"], "surface.", &mut warnings);
    let s = SurfaceModel::new(count(surface, "genus")?, count(surface, "boundary")?);

    let families = object(top.get("families").unwrap_or(&Value::Null), "families")?;
    warn_unknown(
        families,
        &["alpha", "beta", "gamma"],
        "families.",
        &mut warnings,
    );
    let [alpha, beta, gamma] = Family::ALL.map(|f| curves(families, f, s.dim()));
    let diagram = Diagram::new(s, alpha?, beta?, gamma?)?;

    let metadata = match top.get("metadata") {
        None | Some(Value::Null) => None,
        Some(v) => {
            let m = object(v, "metadata")?;
            warn_unknown(m, &["name", "description"], "metadata.", &mut warnings);
            Some(Metadata {
                name: optional_string(m, "name")?,
                description: optional_string(m, "description")?,
            })
        }
    };

    Ok(ParsedDocument {
        document: DiagramDocument {
            format_version: version.to_string(),
            diagram,
            metadata,
        },
        warnings,
    })
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn curve_list(classes: &[H1Class]) -> String {
    let curves: Vec<String> = classes
        .iter()
        .map(|c| {
            let coords: Vec<String> = c.0.iter().map(i64::to_string).collect();
            format!("[{}]", coords.join(","))
        })
        .collect();
    format!("[{}]", curves.join(","))
}

/// Canonical text: fixed key order, one family per line, trailing newline.
pub fn serialize_diagram(doc: &DiagramDocument) -> String {
    let d = &doc.diagram;
    let s = d.surface();
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!(
        "  \"format_version\": {},\n",
        json_string(&doc.format_version)
    ));
    out.push_str(&format!(
        "  \"surface\": {{\"genus\": {}, \"boundary\": {}}},\n",
        s.genus, s.boundary
    ));
    out.push_str("  \"families\": {\n");
    let lines: Vec<String> = Family::ALL
        .iter()
        .map(|&f| format!("    \"{f}\": {}", curve_list(d.family(f))))
        .collect();
    out.push_str(&lines.join(",\n"));
    out.push_str("\n  }");
    if let Some(m) = &doc.metadata {
        let mut fields = Vec::new();
        if let Some(name) = &m.name {
            fields.push(format!("\"name\": {}", json_string(name)));
        }
        if let Some(desc) = &m.description {
            fields.push(format!("\"description\": {}", json_string(desc)));
        }
        out.push_str(&format!(",\n  \"metadata\": {{{}}}", fields.join(", ")));
    }
    out.push_str("\n}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::standard_closed_diagram;

    #[test]
    fn closed_dispatch_and_minimal_document() {
        let doc = DiagramDocument::new(standard_closed_diagram(0, 0).unwrap());
        let text = serialize_diagram(&doc);
        assert_eq!(
            text,
            "{\n  \"format_version\": \"1\",\n  \"surface\": {\"genus\": 0, \"boundary\": 0},\n  \"families\": {\n    \"alpha\": [],\n    \"beta\": [],\n    \"gamma\": []\n  }\n}\n"
        );
        let parsed = parse_diagram(&text).unwrap();
        assert!(matches!(parsed.document.diagram, Diagram::Closed(_)));
        assert_eq!(parsed.document, doc);
        assert!(parsed.warnings.is_empty());
    }

    #[test]
    fn wrong_tuple_length_names_family_and_curve() {
        let text = r#"{"format_version":"1","surface":{"genus":2,"boundary":2},
            "families":{"alpha":[[1,0,0,0,0],[0,0,1,0,0]],"beta":[[0,1,0,0,0],[0,0,0,1,0]],
            "gamma":[[1,0,0,1,0],[0,1,1,0]]}}"#;
        let err = parse_diagram(text).unwrap_err();
        assert_eq!(
            err.to_string(),
            "schema error: family gamma, curve 2: expected length 5"
        );
    }

    #[test]
    fn syntax_error_has_position() {
        let err = parse_diagram("{\n  \"format_version\": \"1\",\n  oops\n}").unwrap_err();
        match err {
            Error::Parse { line, column, .. } => assert_eq!((line, column), (3, 3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_fields_warn() {
        let text = r#"{"format_version":"1","surface":{"genus":0,"boundary":1,"colour":"red"},
            "families":{"alpha":[],"beta":[],"gamma":[]},"author":"x"}"#;
        let parsed = parse_diagram(text).unwrap();
        assert!(matches!(parsed.document.diagram, Diagram::Relative(_)));
        assert_eq!(parsed.warnings.len(), 2);
        assert!(parsed.warnings.iter().any(|w| w.contains("\"author\"")));
    }

    #[test]
    fn magnitude_cap_and_types() {
        let text = r#"{"format_version":"1","surface":{"genus":1,"boundary":0},
            "families":{"alpha":[[1,0]],"beta":[[0,1]],"gamma":[[2000000,1]]}}"#;
        assert!(parse_diagram(text)
            .unwrap_err()
            .to_string()
            .contains("magnitude cap"));
        let text = r#"{"format_version":"2","surface":{"genus":1,"boundary":0},
            "families":{"alpha":[],"beta":[],"gamma":[]}}"#;
        assert!(parse_diagram(text)
            .unwrap_err()
            .to_string()
            .contains("format_version"));
        let text = r#"{"format_version":"1","surface":{"genus":-1,"boundary":0},
            "families":{"alpha":[],"beta":[],"gamma":[]}}"#;
        assert!(parse_diagram(text)
            .unwrap_err()
            .to_string()
            .contains("surface.genus"));
        let text = r#"{"format_version":"1","surface":{"genus":1,"boundary":0},
            "families":{"alpha":[],"beta":[]}}"#;
        assert!(parse_diagram(text)
            .unwrap_err()
            .to_string()
            .contains("families.gamma is missing"));
    }

    #[test]
    fn metadata_is_preserved() {
        let doc = DiagramDocument::new(standard_closed_diagram(1, 0).unwrap())
            .with_metadata("cp2", "a \"quoted\" description");
        let parsed = parse_diagram(&serialize_diagram(&doc)).unwrap();
        assert_eq!(parsed.document, doc);
    }
}

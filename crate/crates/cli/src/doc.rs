//! JSON structure documents.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use pomlab_core::directoid::{DirectoidError, DirectoidSpec};
use pomlab_core::dm::DMCompletion;
use pomlab_core::effect::{EffectAlgebraSpec, EffectError};
use pomlab_core::poset::{PosetError, PosetSpec, Relation};
use pomlab_core::{B6Witness, BoundedInvolutivePoset, EffectAlgebra, Element, InvolutiveDirectoid};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("a poset document needs exactly one of \"hasse\" and \"le\"")]
    Relation,
    #[error("invalid poset: {0}")]
    Poset(#[from] PosetError),
    #[error("invalid directoid: {0}")]
    Directoid(#[from] DirectoidError),
    #[error("invalid effect algebra: {0}")]
    Effect(#[from] EffectError),
    #[error("expected {expected} labels, got {got}")]
    Labels { expected: usize, got: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Document {
    Poset(PosetDoc),
    Directoid(DirectoidDoc),
    EffectAlgebra(EffectAlgebraDoc),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PosetDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hasse: Option<Vec<(Element, Element)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub le: Option<Vec<Vec<bool>>>,
    pub inv: Vec<Element>,
    pub bottom: Element,
    pub top: Element,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// Present on completion exports: the index of `L(x)` for each source
    /// element `x`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embedding: Option<Vec<Element>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DirectoidDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
    pub size: usize,
    pub meet: Vec<Vec<Element>>,
    pub inv: Vec<Element>,
    pub zero: Element,
    pub one: Element,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EffectAlgebraDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
    pub size: usize,
    pub oplus: Vec<Vec<Option<Element>>>,
    pub zero: Element,
    pub one: Element,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// A validated structure read from a document.
#[derive(Clone, Debug)]
pub enum Structure {
    Poset(BoundedInvolutivePoset),
    Directoid(InvolutiveDirectoid),
    EffectAlgebra(LabeledEffectAlgebra),
}

/// Effect algebras carry no labels of their own.
#[derive(Clone, Debug, PartialEq)]
pub struct LabeledEffectAlgebra {
    pub algebra: EffectAlgebra,
    pub labels: Option<Vec<String>>,
}

impl LabeledEffectAlgebra {
    pub fn label(&self, x: Element) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Poset(_) => "poset",
            Structure::Directoid(_) => "directoid",
            Structure::EffectAlgebra(_) => "effect_algebra",
        }
    }

    pub fn label(&self, x: Element) -> String {
        match self {
            Structure::Poset(p) => p.label(x),
            Structure::Directoid(d) => d.label(x),
            Structure::EffectAlgebra(a) => a.label(x),
        }
    }

    pub fn to_document(&self) -> Document {
        match self {
            Structure::Poset(p) => Document::Poset(poset_doc(p)),
            Structure::Directoid(d) => Document::Directoid(directoid_doc(d)),
            Structure::EffectAlgebra(a) => Document::EffectAlgebra(effect_algebra_doc(a)),
        }
    }
}

fn check_labels(labels: &Option<Vec<String>>, size: usize) -> Result<(), FormatError> {
    match labels {
        Some(l) if l.len() != size => Err(FormatError::Labels {
            expected: size,
            got: l.len(),
        }),
        _ => Ok(()),
    }
}

impl Document {
    pub fn into_structure(self) -> Result<Structure, FormatError> {
        match self {
            Document::Poset(d) => {
                let relation = match (d.hasse, d.le) {
                    (Some(h), None) => Relation::Hasse(h),
                    (None, Some(le)) => Relation::Le(le),
                    _ => return Err(FormatError::Relation),
                };
                let p = BoundedInvolutivePoset::validate(PosetSpec {
                    size: d.size,
                    relation,
                    inv: d.inv,
                    bottom: d.bottom,
                    top: d.top,
                    labels: d.labels,
                })?;
                Ok(Structure::Poset(p))
            }
            Document::Directoid(d) => {
                check_labels(&d.labels, d.size)?;
                let mut dir = InvolutiveDirectoid::validate(DirectoidSpec {
                    size: d.size,
                    meet: d.meet,
                    inv: d.inv,
                    zero: d.zero,
                    one: d.one,
                })?;
                if let Some(l) = d.labels {
                    dir = dir.with_labels(l);
                }
                Ok(Structure::Directoid(dir))
            }
            Document::EffectAlgebra(d) => {
                check_labels(&d.labels, d.size)?;
                let algebra = EffectAlgebra::validate(EffectAlgebraSpec {
                    size: d.size,
                    oplus: d.oplus,
                    zero: d.zero,
                    one: d.one,
                })?;
                Ok(Structure::EffectAlgebra(LabeledEffectAlgebra {
                    algebra,
                    labels: d.labels,
                }))
            }
        }
    }
}

pub fn poset_doc(p: &BoundedInvolutivePoset) -> PosetDoc {
    PosetDoc {
        comment: None,
        size: p.size(),
        hasse: Some(p.hasse()),
        le: None,
        inv: p.involution().to_vec(),
        bottom: p.bottom(),
        top: p.top(),
        labels: p.labels().map(<[String]>::to_vec),
        embedding: None,
    }
}

pub fn directoid_doc(d: &InvolutiveDirectoid) -> DirectoidDoc {
    DirectoidDoc {
        comment: None,
        size: d.size(),
        meet: d.meet_rows(),
        inv: d.involution().to_vec(),
        zero: d.zero(),
        one: d.one(),
        labels: d.labels().map(<[String]>::to_vec),
    }
}

pub fn effect_algebra_doc(a: &LabeledEffectAlgebra) -> EffectAlgebraDoc {
    let spec = a.algebra.to_spec();
    EffectAlgebraDoc {
        comment: None,
        size: spec.size,
        oplus: spec.oplus,
        zero: spec.zero,
        one: spec.one,
        labels: a.labels.clone(),
    }
}

/// The completion as a poset document with its embedding.
pub fn completion_doc(c: &DMCompletion) -> PosetDoc {
    PosetDoc {
        embedding: Some(c.embedding().to_vec()),
        ..poset_doc(c.lattice())
    }
}

pub fn b6_witness_json(w: &B6Witness) -> serde_json::Value {
    let roles: serde_json::Map<String, serde_json::Value> = pomlab_core::forbidden::Role::ALL
        .iter()
        .map(|&r| (r.name().to_string(), w.get(r).into()))
        .collect();
    serde_json::json!({ "roles": roles })
}

pub fn parse_document(text: &str) -> Result<Structure, FormatError> {
    serde_json::from_str::<Document>(text)?.into_structure()
}

pub fn read_document(path: &Path) -> Result<Structure, FormatError> {
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_document(&text)
}

pub fn to_json(doc: &Document) -> String {
    serde_json::to_string(doc).expect("documents serialize")
}

/// One top-level key per line, values compact.
pub fn to_json_pretty(doc: &Document) -> String {
    let value = serde_json::to_value(doc).expect("documents serialize");
    let object = value.as_object().expect("documents are objects");
    let fields: Vec<String> = object
        .iter()
        .map(|(k, v)| format!("  {}: {}", serde_json::Value::from(k.as_str()), v))
        .collect();
    format!("{{\n{}\n}}", fields.join(",\n"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use pomlab_core::fixtures;

    #[test]
    fn poset_round_trip() {
        let p = fixtures::fig3();
        let s = Structure::Poset(p.clone());
        let back = parse_document(&to_json(&s.to_document())).unwrap();
        match back {
            Structure::Poset(q) => {
                assert!(q.same_structure(&p));
                assert_eq!(q.labels(), p.labels());
            }
            _ => panic!("kind changed"),
        }
    }

    #[test]
    fn le_matrix_accepted() {
        let text = r#"{"kind":"poset","size":2,"le":[[true,true],[false,true]],"inv":[1,0],"bottom":0,"top":1}"#;
        assert!(matches!(parse_document(text), Ok(Structure::Poset(_))));
    }

    #[test]
    fn relation_must_be_unique() {
        let both = r#"{"kind":"poset","size":2,"hasse":[[0,1]],"le":[[true,true],[false,true]],"inv":[1,0],"bottom":0,"top":1}"#;
        let neither = r#"{"kind":"poset","size":2,"inv":[1,0],"bottom":0,"top":1}"#;
        assert!(matches!(parse_document(both), Err(FormatError::Relation)));
        assert!(matches!(
            parse_document(neither),
            Err(FormatError::Relation)
        ));
    }

    #[test]
    fn directoid_and_effect_algebra_round_trip() {
        let d = fixtures::fig5_directoid();
        let doc = Structure::Directoid(d.clone()).to_document();
        match parse_document(&to_json(&doc)).unwrap() {
            Structure::Directoid(e) => assert!(e.same_tables(&d)),
            _ => panic!("kind changed"),
        }
        let a = LabeledEffectAlgebra {
            algebra: fixtures::boolean_effect_algebra(),
            labels: None,
        };
        let text = to_json(&Structure::EffectAlgebra(a.clone()).to_document());
        assert!(text.contains(r#""kind":"effect_algebra""#));
        assert!(text.contains("null"));
        match parse_document(&text).unwrap() {
            Structure::EffectAlgebra(b) => assert_eq!(b, a),
            _ => panic!("kind changed"),
        }
    }

    #[test]
    fn witness_json_shape() {
        let p = fixtures::b6();
        let w = pomlab_core::find_b6_witness(&p).unwrap();
        let v = b6_witness_json(&w);
        let keys: Vec<&String> = v["roles"].as_object().unwrap().keys().collect();
        assert_eq!(keys, ["0", "a", "b", "b'", "a'", "1"]);
    }

    #[test]
    fn bad_documents() {
        assert!(matches!(parse_document("{"), Err(FormatError::Json(_))));
        assert!(matches!(
            parse_document(r#"{"kind":"lattice","size":1}"#),
            Err(FormatError::Json(_))
        ));
        let not_antitone = r#"{"kind":"poset","size":3,"hasse":[[0,1],[1,2]],"inv":[2,1,0],"bottom":0,"top":2,"labels":["0","m"]}"#;
        assert!(matches!(
            parse_document(not_antitone),
            Err(FormatError::Poset(_))
        ));
    }
}

//! JSON file formats. Readers accept any order; writers emit canonical order
//! (sorted labels, sorted relations, compact output).

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::alpha::AlphaTable;
use crate::error::{input, Result};
use crate::gammoid::{strict_gammoid, Digraph};
use crate::matroid::{Backend, Matroid};
use crate::setsystem::SetSystem;
use crate::subset::{Ground, Subset};
use crate::synthesis::Presentation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetSystemFile {
    pub elements: Vec<String>,
    pub relations: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchored: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DigraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
    pub sinks: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MatroidFile {
    Bases {
        elements: Vec<String>,
        bases: Vec<Vec<String>>,
    },
    SetSystem {
        elements: Vec<String>,
        relations: Vec<Vec<String>>,
    },
    Digraph {
        vertices: Vec<String>,
        edges: Vec<(String, String)>,
        sinks: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaRow {
    pub subset: Vec<String>,
    pub alpha: i32,
}

pub fn read_text(path: impl AsRef<Path>) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string(value)?)
}

fn subsets_of(ground: &Ground, lists: &[Vec<String>]) -> Result<Vec<Subset>> {
    lists.iter().map(|l| ground.subset(l)).collect()
}

impl SetSystemFile {
    pub fn from_system(sys: &SetSystem) -> Self {
        let g = sys.ground();
        SetSystemFile {
            elements: g.labels(sys.full()),
            relations: sys.relations().iter().map(|&r| g.labels(r)).collect(),
            anchored: None,
        }
    }

    pub fn to_system(&self) -> Result<SetSystem> {
        let ground = Ground::new(self.elements.iter().cloned())?;
        let rels = subsets_of(&ground, &self.relations)?;
        SetSystem::from_parts(ground, rels)
    }
}

pub fn parse_set_system(text: &str) -> Result<SetSystem> {
    serde_json::from_str::<SetSystemFile>(text)?.to_system()
}

pub fn set_system_json(sys: &SetSystem) -> Result<String> {
    to_json(&SetSystemFile::from_system(sys))
}

pub fn presentation_file(p: &Presentation) -> SetSystemFile {
    let mut f = SetSystemFile::from_system(&p.system);
    f.anchored = p.anchored.map(|a| p.system.ground().labels(a));
    f
}

impl DigraphFile {
    pub fn from_digraph(g: &Digraph) -> Self {
        let gr = g.ground();
        let label = |i: usize| gr.element(i).label().to_string();
        DigraphFile {
            vertices: gr.labels(gr.full()),
            edges: g.edges().iter().map(|&(u, v)| (label(u), label(v))).collect(),
            sinks: gr.labels(g.sinks()),
        }
    }

    pub fn to_digraph(&self) -> Result<Digraph> {
        Digraph::new(
            self.vertices.iter().cloned(),
            self.edges.iter().map(|(u, v)| (u.as_str(), v.as_str())),
            self.sinks.iter().map(String::as_str),
        )
    }
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    serde_json::from_str::<DigraphFile>(text)?.to_digraph()
}

impl MatroidFile {
    /// Basis-list form of any matroid.
    pub fn from_matroid(m: &Matroid) -> Self {
        let g = m.ground();
        MatroidFile::Bases {
            elements: g.labels(m.full()),
            bases: m.bases().into_iter().map(|b| g.labels(b)).collect(),
        }
    }

    pub fn to_matroid(&self) -> Result<Matroid> {
        match self {
            MatroidFile::Bases { elements, bases } => {
                let ground = Ground::new(elements.iter().cloned())?;
                let bs = subsets_of(&ground, bases)?;
                Matroid::from_bases(ground, &bs)
            }
            MatroidFile::SetSystem { elements, relations } => {
                let sys = SetSystemFile {
                    elements: elements.clone(),
                    relations: relations.clone(),
                    anchored: None,
                }
                .to_system()?;
                if !sys.is_in_class_c() {
                    return input("set system has negative predimension somewhere");
                }
                sys.induced_matroid()
            }
            MatroidFile::Digraph {
                vertices,
                edges,
                sinks,
            } => {
                let g = DigraphFile {
                    vertices: vertices.clone(),
                    edges: edges.clone(),
                    sinks: sinks.clone(),
                }
                .to_digraph()?;
                strict_gammoid(&g)
            }
        }
    }
}

/// Reads a matroid file; a bare set-system or digraph object without a
/// `kind` field is accepted too.
pub fn parse_matroid(text: &str) -> Result<Matroid> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("kind").is_some() {
        return serde_json::from_value::<MatroidFile>(value)?.to_matroid();
    }
    if value.get("relations").is_some() {
        let sys = serde_json::from_value::<SetSystemFile>(value)?.to_system()?;
        if !sys.is_in_class_c() {
            return input("set system has negative predimension somewhere");
        }
        return sys.induced_matroid();
    }
    if value.get("vertices").is_some() {
        return strict_gammoid(&serde_json::from_value::<DigraphFile>(value)?.to_digraph()?);
    }
    input("matroid file needs a \"kind\" field")
}

pub fn matroid_json(m: &Matroid) -> Result<String> {
    to_json(&MatroidFile::from_matroid(m))
}

/// α on every union of flats, in ascending mask order.
pub fn alpha_rows(m: &Matroid, table: &AlphaTable) -> Vec<AlphaRow> {
    table
        .unions()
        .map(|(x, a)| AlphaRow {
            subset: m.ground().labels(x),
            alpha: a,
        })
        .collect()
}

/// Backend name used in reports.
pub fn backend_name(b: Backend) -> &'static str {
    match b {
        Backend::BasisList => "bases",
        Backend::SetSystem => "setsystem",
        Backend::Digraph => "digraph",
        Backend::Transversal => "transversal",
        Backend::Minor => "minor",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_system_round_trip_is_canonical() {
        let text = r#"{"elements":["c","a","b"],"relations":[["c","b","a"]]}"#;
        let sys = parse_set_system(text).unwrap();
        assert_eq!(
            set_system_json(&sys).unwrap(),
            r#"{"elements":["a","b","c"],"relations":[["a","b","c"]]}"#
        );
        assert!(parse_set_system(r#"{"elements":["a"],"relations":[["a"],["a"]]}"#).is_err());
        assert!(parse_set_system(r#"{"elements":["a"],"relations":[["b"]]}"#).is_err());
        assert!(parse_set_system(r#"{"elements":["a"],"relations":[[]]}"#).is_err());
        assert!(parse_set_system(r#"{"elements":["a"]"#).is_err());
    }

    #[test]
    fn matroid_kinds() {
        let bases = r#"{"kind":"bases","elements":["a","b","c"],"bases":[["a","b"],["a","c"],["b","c"]]}"#;
        let sys = r#"{"kind":"setsystem","elements":["a","b","c"],"relations":[["a","b","c"]]}"#;
        let dig =
            r#"{"kind":"digraph","vertices":["a","b","c"],"edges":[["a","b"],["a","c"]],"sinks":["b","c"]}"#;
        let m = parse_matroid(bases).unwrap();
        assert_eq!(parse_matroid(sys).unwrap(), m);
        assert_eq!(parse_matroid(dig).unwrap(), m);
        assert_eq!(parse_matroid(&matroid_json(&m).unwrap()).unwrap(), m);
        assert!(parse_matroid(r#"{"kind":"bases","elements":["a","b"],"bases":[["a"],["a","b"]]}"#).is_err());
    }

    #[test]
    fn digraph_round_trip() {
        let text = r#"{"vertices":["b","a","c"],"edges":[["a","c"],["a","b"]],"sinks":["c","b"]}"#;
        let g = parse_digraph(text).unwrap();
        assert_eq!(
            to_json(&DigraphFile::from_digraph(&g)).unwrap(),
            r#"{"vertices":["a","b","c"],"edges":[["a","b"],["a","c"]],"sinks":["b","c"]}"#
        );
    }
}

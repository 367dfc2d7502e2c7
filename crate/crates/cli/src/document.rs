//! The JSON interchange document: a field, a table of spaces, named maps
//! with row-major entry grids, and free-form metadata.

use std::collections::BTreeMap;

use pentagon_core::tensor::{FieldSpec, LegMap, Matrix, Space};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{CliError, CliResult};

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum RawField {
    Rational,
    Prime { p: u64 },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMap {
    codomain: Vec<String>,
    domain: Vec<String>,
    matrix: Vec<Vec<String>>,
}

// Fields in alphabetical order so that emitted keys are sorted.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    field: RawField,
    #[serde(default)]
    maps: BTreeMap<String, RawMap>,
    #[serde(default)]
    meta: Map<String, Value>,
    #[serde(default)]
    spaces: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub field: FieldSpec,
    pub spaces: BTreeMap<String, usize>,
    pub maps: BTreeMap<String, LegMap>,
    pub meta: Map<String, Value>,
}

impl Document {
    pub fn new(field: FieldSpec) -> Self {
        Document {
            field,
            spaces: BTreeMap::new(),
            maps: BTreeMap::new(),
            meta: Map::new(),
        }
    }

    fn declare(&mut self, s: &Space) -> CliResult<()> {
        match self.spaces.get(s.label()) {
            Some(&d) if d != s.dim() => Err(CliError::Document(format!(
                "space {} declared with dimension {d} and {}",
                s.label(),
                s.dim()
            ))),
            _ => {
                self.spaces.insert(s.label().to_string(), s.dim());
                Ok(())
            }
        }
    }

    pub fn insert(&mut self, name: &str, map: &LegMap) -> CliResult<()> {
        if map.field() != self.field {
            return Err(CliError::Document(format!(
                "map {name} is over {}, document over {}",
                map.field(),
                self.field
            )));
        }
        for s in map.domain().iter().chain(map.codomain()) {
            self.declare(s)?;
        }
        self.maps.insert(name.to_string(), map.clone());
        Ok(())
    }

    pub fn with(mut self, name: &str, map: &LegMap) -> CliResult<Self> {
        self.insert(name, map)?;
        Ok(self)
    }

    pub fn get(&self, name: &str) -> CliResult<&LegMap> {
        self.maps
            .get(name)
            .ok_or_else(|| CliError::Document(format!("missing map {name:?}")))
    }

    pub fn get_opt(&self, name: &str) -> Option<&LegMap> {
        self.maps.get(name)
    }

    /// Copies the maps of `other` into `self`.
    pub fn merge(&mut self, other: &Document) -> CliResult<()> {
        if other.field != self.field {
            return Err(CliError::Document(format!(
                "documents over {} and {}",
                self.field, other.field
            )));
        }
        for (k, v) in &other.maps {
            self.insert(k, v)?;
        }
        for (k, &d) in &other.spaces {
            self.declare(&Space::new(k.clone(), d)?)?;
        }
        Ok(())
    }

    pub fn parse(text: &str) -> CliResult<Self> {
        let raw: RawDocument = serde_json::from_str(text)?;
        let field = match raw.field {
            RawField::Rational => FieldSpec::Rational,
            RawField::Prime { p } => FieldSpec::prime(p)?,
        };
        let mut spaces = BTreeMap::new();
        for (label, &dim) in &raw.spaces {
            spaces.insert(label.clone(), Space::new(label.clone(), dim)?);
        }
        let lookup = |labels: &[String], name: &str| {
            labels
                .iter()
                .map(|l| {
                    spaces
                        .get(l)
                        .cloned()
                        .ok_or_else(|| CliError::Document(format!("map {name} uses undeclared space {l:?}")))
                })
                .collect::<CliResult<Vec<Space>>>()
        };
        let mut maps = BTreeMap::new();
        for (name, m) in raw.maps {
            let domain = lookup(&m.domain, &name)?;
            let codomain = lookup(&m.codomain, &name)?;
            let rows: usize = codomain.iter().map(Space::dim).product();
            let cols: usize = domain.iter().map(Space::dim).product();
            if m.matrix.len() != rows || m.matrix.iter().any(|r| r.len() != cols) {
                return Err(CliError::Document(format!(
                    "map {name} must be a {rows}x{cols} grid"
                )));
            }
            let data = m
                .matrix
                .iter()
                .flatten()
                .map(|e| field.parse_scalar(e))
                .collect::<pentagon_core::Result<Vec<_>>>()?;
            let matrix = Matrix::new(field, rows, cols, data)?;
            maps.insert(name, LegMap::new(domain, codomain, matrix)?);
        }
        Ok(Document {
            field,
            spaces: raw.spaces,
            maps,
            meta: raw.meta,
        })
    }

    pub fn emit(&self) -> String {
        let raw = RawDocument {
            field: match self.field {
                FieldSpec::Rational => RawField::Rational,
                FieldSpec::Prime(p) => RawField::Prime { p },
            },
            maps: self
                .maps
                .iter()
                .map(|(name, m)| {
                    let labels = |s: &[Space]| s.iter().map(|x| x.label().to_string()).collect();
                    let mat = m.matrix();
                    let grid = (0..mat.rows())
                        .map(|i| mat.row(i).iter().map(ToString::to_string).collect())
                        .collect();
                    (
                        name.clone(),
                        RawMap {
                            codomain: labels(m.codomain()),
                            domain: labels(m.domain()),
                            matrix: grid,
                        },
                    )
                })
                .collect(),
            meta: self.meta.clone(),
            spaces: self.spaces.clone(),
        };
        let mut s = serde_json::to_string_pretty(&raw).expect("document serializes");
        s.push('\n');
        s
    }

    /// The same document as a JSON value, for embedding in reports.
    pub fn to_value(&self) -> Value {
        serde_json::from_str(&self.emit()).expect("emitted document is valid JSON")
    }
}

//! JSON document holding named spaces, families, operators and specs.

use std::collections::BTreeMap;

use krein_frames::construction::{NormSpec, SpectrumSpec};
use krein_frames::linalg::c64;
use krein_frames::{ComplexMatrix, PontryaginSpace, VectorFamily};
use serde::{Deserialize, Serialize};

use crate::InputError;

pub const VERSION: &str = "1";

/// A complex number as `[re, im]`.
pub type Entry = [f64; 2];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub version: String,
    #[serde(default)]
    pub spaces: BTreeMap<String, SpaceRecord>,
    #[serde(default)]
    pub families: BTreeMap<String, FamilyRecord>,
    #[serde(default)]
    pub operators: BTreeMap<String, OperatorRecord>,
    #[serde(default)]
    pub specs: BTreeMap<String, SpecRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceRecord {
    pub signature: Vec<i8>,
}

/// Vectors listed one per entry, each as a list of coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyRecord {
    pub space: String,
    pub vectors: Vec<Vec<Entry>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorRecord {
    pub space: String,
    pub rows: Vec<Vec<Entry>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpecKind {
    Spectrum,
    Norms,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecRecord {
    pub kind: SpecKind,
    pub values: Vec<f64>,
}

impl Document {
    pub fn new() -> Self {
        Self {
            version: VERSION.to_string(),
            spaces: BTreeMap::new(),
            families: BTreeMap::new(),
            operators: BTreeMap::new(),
            specs: BTreeMap::new(),
        }
    }

    /// Parses and checks a document. Errors name the JSON path at fault.
    pub fn parse(text: &str) -> Result<Self, InputError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let doc: Document = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            InputError::new(format!("{path}: {}", e.into_inner()))
        })?;
        doc.check()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// Every reference resolves and every shape matches its space.
    pub fn check(&self) -> Result<(), InputError> {
        if self.version != VERSION {
            return Err(InputError::new(format!(
                "version: expected \"{VERSION}\", found \"{}\"",
                self.version
            )));
        }
        for (name, record) in &self.spaces {
            PontryaginSpace::new(record.signature.clone())
                .map_err(|e| InputError::new(format!("spaces.{name}.signature: {e}")))?;
        }
        for (name, record) in &self.families {
            let dim = self.space_dim(&record.space, &format!("families.{name}.space"))?;
            for (i, v) in record.vectors.iter().enumerate() {
                if v.len() != dim {
                    return Err(InputError::new(format!(
                        "families.{name}.vectors[{i}]: expected {dim} coordinates, found {}",
                        v.len()
                    )));
                }
                check_entries(v, &format!("families.{name}.vectors[{i}]"))?;
            }
        }
        for (name, record) in &self.operators {
            let dim = self.space_dim(&record.space, &format!("operators.{name}.space"))?;
            if record.rows.len() != dim {
                return Err(InputError::new(format!(
                    "operators.{name}.rows: expected {dim} rows, found {}",
                    record.rows.len()
                )));
            }
            for (i, row) in record.rows.iter().enumerate() {
                if row.len() != dim {
                    return Err(InputError::new(format!(
                        "operators.{name}.rows[{i}]: expected {dim} entries, found {}",
                        row.len()
                    )));
                }
                check_entries(row, &format!("operators.{name}.rows[{i}]"))?;
            }
        }
        for (name, record) in &self.specs {
            if record.values.iter().any(|v| !v.is_finite()) {
                return Err(InputError::new(format!(
                    "specs.{name}.values: non-finite value"
                )));
            }
        }
        Ok(())
    }

    fn space_dim(&self, name: &str, path: &str) -> Result<usize, InputError> {
        self.spaces
            .get(name)
            .map(|s| s.signature.len())
            .ok_or_else(|| InputError::new(format!("{path}: unknown space \"{name}\"")))
    }

    pub fn space(&self, name: &str) -> Result<PontryaginSpace, InputError> {
        let record = self
            .spaces
            .get(name)
            .ok_or_else(|| InputError::new(format!("unknown space \"{name}\"")))?;
        PontryaginSpace::new(record.signature.clone())
            .map_err(|e| InputError::new(format!("spaces.{name}: {e}")))
    }

    pub fn family(&self, name: &str) -> Result<VectorFamily, InputError> {
        let record = self
            .families
            .get(name)
            .ok_or_else(|| InputError::new(format!("unknown family \"{name}\"")))?;
        let space = self.space(&record.space)?;
        let dim = space.dim();
        let k = record.vectors.len();
        let synthesis = ComplexMatrix::from_fn(dim, k, |r, c| {
            let [re, im] = record.vectors[c][r];
            c64(re, im)
        });
        VectorFamily::new(space, synthesis)
            .map_err(|e| InputError::new(format!("families.{name}: {e}")))
    }

    pub fn operator(&self, name: &str) -> Result<(PontryaginSpace, ComplexMatrix), InputError> {
        let record = self
            .operators
            .get(name)
            .ok_or_else(|| InputError::new(format!("unknown operator \"{name}\"")))?;
        let space = self.space(&record.space)?;
        Ok((space, matrix_from_rows(&record.rows)))
    }

    fn spec(&self, name: &str, kind: SpecKind) -> Result<&SpecRecord, InputError> {
        let record = self
            .specs
            .get(name)
            .ok_or_else(|| InputError::new(format!("unknown spec \"{name}\"")))?;
        if record.kind != kind {
            return Err(InputError::new(format!(
                "specs.{name}.kind: expected {kind:?}, found {:?}",
                record.kind
            )));
        }
        Ok(record)
    }

    pub fn norms(&self, name: &str) -> Result<NormSpec, InputError> {
        let record = self.spec(name, SpecKind::Norms)?;
        NormSpec::new(record.values.clone())
            .map_err(|e| InputError::new(format!("specs.{name}: {e}")))
    }

    pub fn spectrum(&self, name: &str) -> Result<SpectrumSpec, InputError> {
        let record = self.spec(name, SpecKind::Spectrum)?;
        SpectrumSpec::new(record.values.clone())
            .map_err(|e| InputError::new(format!("specs.{name}: {e}")))
    }

    /// Stores `family` under `name`, declaring its space as `space_name` if
    /// that name is free. An existing space must carry the same signature.
    pub fn insert_family(
        &mut self,
        name: &str,
        space_name: &str,
        family: &VectorFamily,
    ) -> Result<(), InputError> {
        let signature = family.space().signature().to_vec();
        match self.spaces.get(space_name) {
            Some(existing) if existing.signature != signature => {
                return Err(InputError::new(format!(
                    "space \"{space_name}\" already exists with another signature"
                )))
            }
            Some(_) => {}
            None => {
                self.spaces
                    .insert(space_name.to_string(), SpaceRecord { signature });
            }
        }
        self.families.insert(
            name.to_string(),
            FamilyRecord {
                space: space_name.to_string(),
                vectors: family_vectors(family),
            },
        );
        Ok(())
    }
}

impl Default for Document {
    fn default() -> Self {
        Self::new()
    }
}

fn check_entries(entries: &[Entry], path: &str) -> Result<(), InputError> {
    if entries.iter().flatten().any(|x| !x.is_finite()) {
        return Err(InputError::new(format!("{path}: non-finite entry")));
    }
    Ok(())
}

pub fn matrix_from_rows(rows: &[Vec<Entry>]) -> ComplexMatrix {
    let cols = rows.first().map_or(0, Vec::len);
    ComplexMatrix::from_fn(rows.len(), cols, |r, c| {
        let [re, im] = rows[r][c];
        c64(re, im)
    })
}

pub fn matrix_rows(m: &ComplexMatrix) -> Vec<Vec<Entry>> {
    m.row_iter()
        .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
        .collect()
}

pub fn family_vectors(f: &VectorFamily) -> Vec<Vec<Entry>> {
    f.synthesis()
        .column_iter()
        .map(|col| col.iter().map(|z| [z.re, z.im]).collect())
        .collect()
}

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{
    classify, possibility_to_consonant, EmptySetPolicy, FocalSet, Frame, MassFunction, ScKind, SoftClustering,
};

pub const SCHEMA_VERSION: u32 = 1;

/// On-disk form of a soft clustering.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClusteringFile {
    pub schema_version: u32,
    pub kind: ScKind,
    pub frame: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub objects: Vec<ObjectEntry>,
}

/// One object's entry. The shape decides how it is read: a label, a set
/// of labels, a membership (or possibility) vector, or a focal map.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ObjectEntry {
    Label(String),
    Set(Vec<String>),
    Vector(Vec<f64>),
    Focal(Vec<FocalEntry>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FocalEntry {
    pub set: Vec<String>,
    pub mass: f64,
}

impl ClusteringFile {
    /// Describe `m` in the most specific syntax its kind allows.
    pub fn from_clustering(m: &SoftClustering) -> Self {
        let kind = classify(m);
        let frame = m.frame();
        let objects = m
            .masses()
            .iter()
            .map(|mx| match kind {
                ScKind::Hard => ObjectEntry::Label(frame.label(mx.focal()[0].0.single().expect("hard")).to_string()),
                ScKind::Rough => ObjectEntry::Set(frame.labels_of(mx.focal()[0].0)),
                ScKind::Fuzzy => ObjectEntry::Vector((0..frame.k()).map(|w| mx.mass(FocalSet::singleton(w))).collect()),
                ScKind::Possibilistic | ScKind::GeneralEvidential => ObjectEntry::Focal(
                    mx.focal()
                        .iter()
                        .map(|&(set, mass)| FocalEntry {
                            set: frame.labels_of(set),
                            mass,
                        })
                        .collect(),
                ),
            })
            .collect();
        ClusteringFile {
            schema_version: SCHEMA_VERSION,
            kind,
            frame: frame.labels().to_vec(),
            name: None,
            objects,
        }
    }

    /// Build and validate the clustering. Structural problems are schema
    /// errors; violated mass constraints are validation errors.
    pub fn to_clustering(&self, policy: EmptySetPolicy) -> Result<SoftClustering> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Schema(format!(
                "unsupported schema_version {}, expected {SCHEMA_VERSION}",
                self.schema_version
            )));
        }
        let frame = Frame::new(self.frame.iter().cloned()).map_err(|e| Error::Schema(e.to_string()))?;
        let k = frame.k();
        let masses = self
            .objects
            .iter()
            .enumerate()
            .map(|(x, entry)| self.object_mass(&frame, entry, policy).map_err(|e| e.with_object(x)))
            .collect::<Result<Vec<_>>>()
            .map_err(validation)?;
        let m = SoftClustering::new(frame, masses).map_err(validation)?;
        let found = classify(&m);
        if !found.satisfies(self.kind) {
            return Err(Error::Validation(Box::new(Error::Schema(format!(
                "declared kind {} but the masses are {found}",
                self.kind
            )))));
        }
        debug_assert_eq!(m.k(), k);
        Ok(m)
    }

    fn object_mass(&self, frame: &Frame, entry: &ObjectEntry, policy: EmptySetPolicy) -> Result<MassFunction> {
        match entry {
            ObjectEntry::Label(l) => Ok(MassFunction::categorical(FocalSet::singleton(label(frame, l)?))),
            ObjectEntry::Set(labels) => {
                let set = set_of(frame, labels)?;
                if set.is_empty() {
                    return Err(Error::EmptyFocalSet { object: None, mass: 1.0 });
                }
                Ok(MassFunction::categorical(set))
            }
            ObjectEntry::Vector(v) => {
                if v.len() != frame.k() {
                    return Err(Error::Schema(format!("vector of {} values for {} clusters", v.len(), frame.k())));
                }
                match self.kind {
                    ScKind::Possibilistic => possibility_to_consonant(v, false),
                    ScKind::Fuzzy | ScKind::Hard => MassFunction::from_membership(v),
                    other => Err(Error::Schema(format!("vector entries are not allowed for kind {other}"))),
                }
            }
            ObjectEntry::Focal(entries) => {
                let entries = entries
                    .iter()
                    .map(|e| Ok((set_of(frame, &e.set)?, e.mass)))
                    .collect::<Result<Vec<_>>>()?;
                MassFunction::new(&entries, frame.k(), policy)
            }
        }
    }
}

fn label(frame: &Frame, l: &str) -> Result<usize> {
    frame.index_of(l).map_err(|_| Error::Schema(format!("label `{l}` is not in the frame")))
}

fn set_of(frame: &Frame, labels: &[String]) -> Result<FocalSet> {
    labels.iter().try_fold(FocalSet::EMPTY, |s, l| Ok(s.with(label(frame, l)?)))
}

fn validation(e: Error) -> Error {
    match e {
        Error::Schema(_) | Error::Validation(_) => e,
        other => Error::Validation(Box::new(other)),
    }
}

/// Parse a clustering from JSON text.
pub fn parse_clustering(text: &str, policy: EmptySetPolicy) -> Result<SoftClustering> {
    let file: ClusteringFile = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    file.to_clustering(policy)
}

pub fn read_clustering(path: impl AsRef<Path>) -> Result<SoftClustering> {
    read_clustering_with(path, EmptySetPolicy::default())
}

pub fn read_clustering_with(path: impl AsRef<Path>, policy: EmptySetPolicy) -> Result<SoftClustering> {
    parse_clustering(&fs::read_to_string(path)?, policy)
}

pub fn clustering_to_json(m: &SoftClustering) -> String {
    serde_json::to_string_pretty(&ClusteringFile::from_clustering(m)).expect("clustering files always serialize")
}

pub fn write_clustering(m: &SoftClustering, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, clustering_to_json(m) + "\n")?;
    Ok(())
}

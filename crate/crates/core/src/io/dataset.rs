use std::io::Read;
use std::path::Path;

use crate::clusterers::Dataset;
use crate::error::{Error, Result};
use crate::model::{Frame, HardClustering};

const IRIS_CSV: &str = include_str!("../../data/iris.csv");

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DatasetOptions {
    /// Column holding ground-truth labels; every other column is a feature.
    pub label_col: Option<String>,
}

impl DatasetOptions {
    pub fn with_labels(col: impl Into<String>) -> Self {
        DatasetOptions {
            label_col: Some(col.into()),
        }
    }
}

pub fn load_dataset(path: impl AsRef<Path>, options: &DatasetOptions) -> Result<Dataset> {
    parse_dataset(std::fs::File::open(path)?, options)
}

/// Read a headed CSV. Rows are numbered from 1 after the header.
pub fn parse_dataset<R: Read>(reader: R, options: &DatasetOptions) -> Result<Dataset> {
    let mut csv = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let header: Vec<String> = csv.headers()?.iter().map(str::to_string).collect();
    let label_idx = match &options.label_col {
        Some(name) => Some(header.iter().position(|h| h == name).ok_or_else(|| Error::Parse {
            row: 0,
            column: name.clone(),
            message: "label column not found in header".into(),
        })?),
        None => None,
    };
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    for (i, record) in csv.records().enumerate() {
        let row = i + 1;
        let record = record.map_err(|e| Error::Parse {
            row,
            column: String::new(),
            message: e.to_string(),
        })?;
        let mut features = Vec::with_capacity(header.len());
        for (j, cell) in record.iter().enumerate() {
            if Some(j) == label_idx {
                labels.push(cell.to_string());
                continue;
            }
            features.push(cell.parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(|| {
                Error::NonNumericFeature {
                    row,
                    column: header[j].clone(),
                    value: cell.to_string(),
                }
            })?);
        }
        rows.push(features);
    }
    let names = header
        .iter()
        .enumerate()
        .filter(|&(j, _)| Some(j) != label_idx)
        .map(|(_, h)| h.clone())
        .collect();
    let data = Dataset::new(rows)?.with_feature_names(names)?;
    if label_idx.is_none() {
        return Ok(data);
    }
    let mut classes: Vec<&str> = Vec::new();
    for l in &labels {
        if !classes.contains(&l.as_str()) {
            classes.push(l);
        }
    }
    let frame = Frame::new(classes.iter().copied())?;
    let truth = HardClustering::from_labels(frame, &labels)?;
    data.with_labels(truth)
}

/// The bundled Iris data: 150 flowers, four features, species as labels.
pub fn iris() -> Dataset {
    parse_dataset(IRIS_CSV.as_bytes(), &DatasetOptions::with_labels("species")).expect("bundled data parses")
}

//! The serialized output of every subcommand.

use std::collections::BTreeMap;

use bircones_core::linalg::format_rational;
use bircones_core::report::ClassificationReport;
use bircones_core::RationalVector;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Subject {
    Tl,
    Conics,
    To,
    Gkz,
    Dims,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema_version: String,
    pub n: Option<usize>,
    pub subject: Subject,
    pub payload: Payload,
}

impl OutputDocument {
    pub fn new(n: Option<usize>, subject: Subject, payload: Payload) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            n,
            subject,
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
        self.payload.write_csv(&mut w).expect("writing to memory");
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8")
    }
}

/// A list of coordinate vectors, each entry a rational string.
pub type Rows = Vec<Vec<String>>;

pub fn coords(v: &RationalVector) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

/// Converts rays to strings after sorting them lexicographically.
pub fn sorted_rows(rays: &[RationalVector]) -> Rows {
    let mut rays = rays.to_vec();
    rays.sort();
    rays.iter().map(coords).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeData {
    pub name: String,
    /// `divisor` or `curve`.
    pub space: String,
    pub basis: Vec<String>,
    pub rays: Rows,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lineality: Rows,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedClass {
    pub name: String,
    pub basis: Vec<String>,
    pub coords: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub subject: String,
    pub is_fano: bool,
    pub is_weak_fano: bool,
    pub nef_ray_count: Option<usize>,
    pub eff_ray_count: Option<usize>,
    pub cox_generator_count: Option<usize>,
    pub aut_dimension: Option<u64>,
    pub fano_index: Option<u64>,
    pub aut_group: Option<String>,
    pub provenance: String,
    pub basis: Vec<String>,
    pub anticanonical: Option<Vec<String>>,
}

impl Classification {
    pub fn new(r: &ClassificationReport, basis: Vec<String>, anticanonical: Option<&RationalVector>) -> Self {
        Self {
            subject: r.subject.clone(),
            is_fano: r.is_fano,
            is_weak_fano: r.is_weak_fano,
            nef_ray_count: r.nef_ray_count,
            eff_ray_count: r.eff_ray_count,
            cox_generator_count: r.cox_generator_count,
            aut_dimension: r.aut_dimension,
            fano_index: r.fano_index,
            aut_group: r.aut_group.clone(),
            provenance: r.provenance.as_str().to_string(),
            basis,
            anticanonical: anticanonical.map(coords),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Cones {
        cones: Vec<ConeData>,
    },
    Classes {
        classes: Vec<NamedClass>,
        checks: BTreeMap<String, bool>,
    },
    Classification(Classification),
    Cox {
        basis: Vec<String>,
        generator_count: usize,
        color_multiplicities: Vec<u64>,
        /// Degrees of the generators, one column per row.
        columns: Rows,
        column_labels: Vec<String>,
    },
    Chambers {
        basis: Vec<String>,
        vectors: Rows,
        walls: usize,
        chambers: usize,
        secondary_chambers: usize,
    },
    Table {
        basis: Vec<String>,
        rows: Rows,
    },
}

type CsvWriter = csv::Writer<Vec<u8>>;

fn write_block(w: &mut CsvWriter, first: &str, basis: &[String], rows: &[(String, Vec<String>)]) -> csv::Result<()> {
    w.write_record(std::iter::once(first).chain(basis.iter().map(String::as_str)))?;
    for (label, row) in rows {
        w.write_record(std::iter::once(label.as_str()).chain(row.iter().map(String::as_str)))?;
    }
    Ok(())
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

impl Payload {
    fn write_csv(&self, w: &mut CsvWriter) -> csv::Result<()> {
        match self {
            Payload::Cones { cones } => {
                for c in cones {
                    let mut rows: Vec<(String, Vec<String>)> =
                        c.rays.iter().map(|r| (c.name.clone(), r.clone())).collect();
                    rows.extend(c.lineality.iter().map(|r| (format!("{}:lineality", c.name), r.clone())));
                    write_block(w, "cone", &c.basis, &rows)?;
                }
            }
            Payload::Classes { classes, checks } => {
                for c in classes {
                    write_block(w, "class", &c.basis, &[(c.name.clone(), c.coords.clone())])?;
                }
                w.write_record(["check", "passed"])?;
                for (k, v) in checks {
                    w.write_record([k.as_str(), &v.to_string()])?;
                }
            }
            Payload::Classification(c) => {
                w.write_record(["field", "value"])?;
                let fields = [
                    ("subject", c.subject.clone()),
                    ("is_fano", c.is_fano.to_string()),
                    ("is_weak_fano", c.is_weak_fano.to_string()),
                    ("nef_ray_count", opt(&c.nef_ray_count)),
                    ("eff_ray_count", opt(&c.eff_ray_count)),
                    ("cox_generator_count", opt(&c.cox_generator_count)),
                    ("aut_dimension", opt(&c.aut_dimension)),
                    ("fano_index", opt(&c.fano_index)),
                    ("aut_group", opt(&c.aut_group)),
                    ("provenance", c.provenance.clone()),
                ];
                for (k, v) in fields {
                    w.write_record([k, v.as_str()])?;
                }
                if let Some(k) = &c.anticanonical {
                    write_block(w, "class", &c.basis, &[("-K".to_string(), k.clone())])?;
                }
            }
            Payload::Cox {
                basis,
                columns,
                column_labels,
                ..
            } => {
                let rows: Vec<(String, Vec<String>)> =
                    column_labels.iter().cloned().zip(columns.iter().cloned()).collect();
                write_block(w, "generator", basis, &rows)?;
            }
            Payload::Chambers {
                basis,
                vectors,
                walls,
                chambers,
                secondary_chambers,
            } => {
                w.write_record(["field", "value"])?;
                w.write_record(["walls", &walls.to_string()])?;
                w.write_record(["chambers", &chambers.to_string()])?;
                w.write_record(["secondary_chambers", &secondary_chambers.to_string()])?;
                let rows: Vec<(String, Vec<String>)> =
                    vectors.iter().map(|v| ("vector".to_string(), v.clone())).collect();
                write_block(w, "kind", basis, &rows)?;
            }
            Payload::Table { basis, rows } => {
                w.write_record(basis)?;
                for r in rows {
                    w.write_record(r)?;
                }
            }
        }
        Ok(())
    }
}

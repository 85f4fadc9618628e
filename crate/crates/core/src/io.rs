//! File formats.
//!
//! **Set-valued CSV.** The header names the attributes. Each data row has
//! one cell per attribute holding one or more atom names separated by `|`.
//! An optional `count` column (any letter case) gives the number of objects
//! in the row and defaults to 1; rows with count 0 are skipped. Two or more
//! attributes produce the product of their frames, header order first.
//!
//! ```text
//! quality,shop,count
//! H,B,20
//! H|S,B|G,14
//! ```
//!
//! **Mass JSON.**
//!
//! ```json
//! { "frame": ["a", "b"], "mass": [ { "set": ["a"], "m": "1/3" },
//!                                  { "set": ["a", "b"], "m": 0.6666666666666666 } ] }
//! ```
//!
//! Exact masses are written as `"p/q"` strings; floating masses as JSON
//! numbers. On input a string or a JSON integer is exact and a JSON number
//! with a fraction or exponent is floating.

use std::collections::BTreeMap;
use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::belief::MassFunction;
use crate::error::InputError;
use crate::frame::{AtomSet, Frame};
use crate::population::Population;
use crate::scalar::Scalar;

/// Name of the optional weight column.
pub const COUNT_COLUMN: &str = "count";

/// Separator between atoms inside one CSV cell.
pub const SET_SEPARATOR: char = '|';

/// Declared frame for each attribute name.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FrameDecls {
    frames: BTreeMap<String, Frame>,
}

impl FrameDecls {
    pub fn new() -> FrameDecls {
        FrameDecls::default()
    }

    pub fn insert(&mut self, attribute: &str, frame: Frame) {
        self.frames.insert(attribute.to_string(), frame);
    }

    pub fn get(&self, attribute: &str) -> Option<&Frame> {
        self.frames.get(attribute)
    }

    /// Parses `name=atom,atom,...`.
    pub fn parse_inline(&mut self, decl: &str, max_atoms: usize) -> Result<(), InputError> {
        let (name, atoms) = decl
            .split_once('=')
            .ok_or_else(|| InputError::BadFrameDecl(decl.to_string()))?;
        let atoms: Vec<&str> = atoms.split(',').map(str::trim).collect();
        if name.trim().is_empty() || atoms.iter().any(|a| a.is_empty()) {
            return Err(InputError::BadFrameDecl(decl.to_string()));
        }
        self.insert(name.trim(), Frame::with_limit(&atoms, max_atoms)?);
        Ok(())
    }

    /// Reads `{ "attribute": ["atom", ...], ... }`.
    pub fn from_json(text: &str, max_atoms: usize) -> Result<FrameDecls, InputError> {
        let raw: BTreeMap<String, Vec<String>> = serde_json::from_str(text)?;
        let mut out = FrameDecls::new();
        for (name, atoms) in raw {
            out.insert(&name, Frame::with_limit(&atoms, max_atoms)?);
        }
        Ok(out)
    }
}

/// Reads a set-valued CSV into a population.
pub fn read_population_csv<R: Read>(
    reader: R,
    decls: &FrameDecls,
    max_atoms: usize,
) -> Result<Population, InputError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let headers = rdr
        .headers()
        .map_err(|e| csv_error(&e, 1))?
        .clone();
    let mut count_col = None;
    let mut attributes: Vec<(usize, String, Frame)> = Vec::new();
    for (i, h) in headers.iter().enumerate() {
        if h.eq_ignore_ascii_case(COUNT_COLUMN) {
            count_col = Some(i);
        } else {
            let frame = decls
                .get(h)
                .ok_or_else(|| InputError::MissingFrame(h.to_string()))?;
            attributes.push((i, h.to_string(), frame.clone()));
        }
    }
    if attributes.is_empty() {
        return Err(InputError::NoAttributes);
    }
    let joint = if attributes.len() == 1 {
        attributes[0].2.clone()
    } else {
        let factors: Vec<Frame> = attributes.iter().map(|(_, _, f)| f.clone()).collect();
        Frame::product_of(&factors, max_atoms)?
    };

    let mut entries: Vec<(AtomSet, u64)> = Vec::new();
    for row in rdr.records() {
        let row = row.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            csv_error(&e, line)
        })?;
        let line = row.position().map_or(0, |p| p.line());
        if row.iter().all(str::is_empty) {
            continue;
        }
        let weight = match count_col {
            None => 1,
            Some(c) => {
                let raw = row.get(c).unwrap_or("");
                raw.parse::<u64>().map_err(|_| InputError::BadCount {
                    line,
                    value: raw.to_string(),
                })?
            }
        };
        let mut value = joint.full_set();
        for (k, (col, name, frame)) in attributes.iter().enumerate() {
            let cell = row.get(*col).unwrap_or("");
            let mut set = AtomSet::EMPTY;
            for token in cell.split(SET_SEPARATOR).map(str::trim) {
                if token.is_empty() {
                    return Err(InputError::EmptyCell {
                        line,
                        column: name.clone(),
                    });
                }
                let i = frame.index_of(token).ok_or_else(|| InputError::UnknownAtom {
                    line,
                    column: name.clone(),
                    token: token.to_string(),
                })?;
                set = set.with(i);
            }
            value = if attributes.len() == 1 {
                set
            } else {
                value.intersect(joint.extend_set(k, set)?)
            };
        }
        entries.push((value, weight));
    }
    if entries.iter().all(|(_, w)| *w == 0) {
        return Err(InputError::EmptyData);
    }
    Population::new(&joint, entries).map_err(|e| match e {
        crate::error::PopulationError::Frame(f) => InputError::Frame(f),
        _ => InputError::EmptyData,
    })
}

fn csv_error(e: &csv::Error, line: u64) -> InputError {
    InputError::Csv {
        line,
        message: e.to_string(),
    }
}

/// A mass value as it appears in JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonScalar {
    Text(String),
    Number(serde_json::Number),
}

impl JsonScalar {
    pub fn to_scalar(&self) -> Result<Scalar, InputError> {
        match self {
            JsonScalar::Text(s) => Ok(s.parse()?),
            JsonScalar::Number(n) => {
                if n.is_i64() || n.is_u64() {
                    Ok(n.to_string().parse()?)
                } else {
                    Ok(Scalar::float(n.as_f64().ok_or_else(|| {
                        InputError::Json(format!("unrepresentable number {n}"))
                    })?))
                }
            }
        }
    }

    pub fn from_scalar(v: &Scalar) -> JsonScalar {
        match v {
            Scalar::Exact(_) => JsonScalar::Text(v.to_exact_string()),
            Scalar::Float(x) => JsonScalar::Number(
                serde_json::Number::from_f64(*x).expect("masses are finite"),
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MassEntryJson {
    pub set: Vec<String>,
    pub m: JsonScalar,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MassJson {
    pub frame: Vec<String>,
    pub mass: Vec<MassEntryJson>,
}

impl MassJson {
    pub fn from_mass(m: &MassFunction) -> MassJson {
        MassJson {
            frame: m.frame().atoms().to_vec(),
            mass: m
                .focal()
                .map(|(s, v)| MassEntryJson {
                    set: m.frame().decode(s).into_iter().map(String::from).collect(),
                    m: JsonScalar::from_scalar(v),
                })
                .collect(),
        }
    }

    pub fn to_mass(&self, max_atoms: usize) -> Result<MassFunction, InputError> {
        let frame = Frame::with_limit(&self.frame, max_atoms)?;
        self.to_mass_on(&frame)
    }

    /// Reads the masses onto an existing frame with the same atom list.
    pub fn to_mass_on(&self, frame: &Frame) -> Result<MassFunction, InputError> {
        if frame.atoms() != self.frame.as_slice() {
            return Err(crate::error::FrameError::FrameMismatch.into());
        }
        let mut entries = Vec::with_capacity(self.mass.len());
        for e in &self.mass {
            entries.push((frame.encode_set(&e.set)?, e.m.to_scalar()?));
        }
        Ok(MassFunction::new(frame, entries)?)
    }
}

pub fn mass_to_json_string(m: &MassFunction) -> String {
    serde_json::to_string_pretty(&MassJson::from_mass(m)).expect("mass JSON serializes")
}

pub fn mass_from_json_str(text: &str, max_atoms: usize) -> Result<MassFunction, InputError> {
    let parsed: MassJson = serde_json::from_str(text)?;
    parsed.to_mass(max_atoms)
}

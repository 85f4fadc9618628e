//! Worked examples with known answers.
//!
//! Each case lives in a JSON file under `cases/` that holds its inputs and
//! the expected value of every quantity it checks. Running a case recomputes
//! those quantities with the library and compares them: exactly when both
//! sides are rationals, within a tolerance (default `1e-9`) otherwise.

pub mod rough_set;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::belief::{combine_dempster, condition_embed, MassFunction};
use crate::error::CaseError;
use crate::frame::{AtomSet, Frame, DEFAULT_MAX_ATOMS};
use crate::io::{JsonScalar, MassEntryJson};
use crate::population::{
    apply_labeling, check_measurement_axioms, freq_bel, freq_mass, freq_pl, measurement_table,
    LabelingSpec, Population,
};
use crate::scalar::{Arithmetic, Scalar};

use rough_set::{rs_combined_conditional, rs_expert_masses, rs_gap, RoughSetParams};

/// Tolerance used when an expected entry does not set one.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

const CASES: [(&str, &str); 7] = [
    ("shampoo_base", include_str!("../../cases/shampoo_base.json")),
    (
        "shampoo_measurements",
        include_str!("../../cases/shampoo_measurements.json"),
    ),
    ("shampoo_relabel", include_str!("../../cases/shampoo_relabel.json")),
    (
        "material_implication",
        include_str!("../../cases/material_implication.json"),
    ),
    ("killer", include_str!("../../cases/killer.json")),
    ("two_experts", include_str!("../../cases/two_experts.json")),
    ("rough_set", include_str!("../../cases/rough_set.json")),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Compare {
    /// Equal, exactly or within the tolerance.
    #[default]
    Eq,
    /// Strictly greater than the expected value.
    Gt,
}

/// One expected quantity. The subset it refers to is given either by atom
/// names of the case frame (`set`) or per attribute of a product frame
/// (`cell`); attributes left out of a cell are unconstrained.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Expected {
    pub quantity: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cell: Option<BTreeMap<String, Vec<String>>>,
    pub value: JsonScalar,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(default)]
    pub compare: Compare,
    /// Value as originally printed, when it differs from `value`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub printed: Option<String>,
    #[serde(default)]
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseFile {
    pub name: String,
    pub version: u32,
    pub description: String,
    pub inputs: serde_json::Value,
    pub expected: Vec<Expected>,
    #[serde(default)]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuantityCheck {
    /// Quantity name with its subset, e.g. `m{(H,B)}`.
    pub label: String,
    pub expected: Scalar,
    pub computed: Scalar,
    pub compare: Compare,
    pub tolerance: Option<f64>,
    pub passed: bool,
    pub printed: Option<String>,
    pub note: String,
}

impl fmt::Display for QuantityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "ok  " } else { "FAIL" };
        let op = match self.compare {
            Compare::Eq => "=",
            Compare::Gt => ">",
        };
        write!(
            f,
            "{status} {}: computed {} (expected {op} {})",
            self.label, self.computed, self.expected
        )?;
        if let Some(p) = &self.printed {
            write!(f, " [printed {p}]")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CaseReport {
    pub name: String,
    pub description: String,
    pub checks: Vec<QuantityCheck>,
    /// Extra findings that are reported but not asserted.
    pub diagnostics: Vec<String>,
    pub notes: Vec<String>,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &QuantityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for CaseReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ok = self.checks.iter().filter(|c| c.passed).count();
        writeln!(
            f,
            "case {}: {}/{} checks passed",
            self.name,
            ok,
            self.checks.len()
        )?;
        writeln!(f, "  {}", self.description)?;
        for c in &self.checks {
            writeln!(f, "  {c}")?;
        }
        for d in &self.diagnostics {
            writeln!(f, "  diagnostic: {d}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

pub fn case_names() -> Vec<&'static str> {
    CASES.iter().map(|(n, _)| *n).collect()
}

pub fn load_case(name: &str) -> Result<CaseFile, CaseError> {
    let text = CASES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| CaseError::UnknownCase {
            name: name.to_string(),
            available: case_names().into_iter().map(String::from).collect(),
        })?;
    Ok(serde_json::from_str(text)?)
}

pub fn run_case(name: &str) -> Result<CaseReport, CaseError> {
    let case = load_case(name)?;
    let mut diagnostics = Vec::new();
    let quantities: Box<dyn Quantities> = match name {
        "shampoo_base" | "shampoo_measurements" => Box::new(Shampoo::new(&case)?),
        "shampoo_relabel" => Box::new(ShampooRelabel::new(&case)?),
        "material_implication" => Box::new(Material::new(&case)?),
        "killer" => Box::new(Killer::new(&case, &mut diagnostics)?),
        "two_experts" => Box::new(TwoExperts::new(&case)?),
        "rough_set" => Box::new(RoughSet::new(&case)?),
        _ => unreachable!("every registered case has a runner"),
    };
    let mut checks = Vec::with_capacity(case.expected.len());
    for e in &case.expected {
        let computed = quantities.compute(&case, e)?;
        checks.push(check(e, computed)?);
    }
    Ok(CaseReport {
        name: case.name,
        description: case.description,
        checks,
        diagnostics,
        notes: case.notes,
    })
}

pub fn run_all() -> Result<Vec<CaseReport>, CaseError> {
    case_names().into_iter().map(run_case).collect()
}

fn check(e: &Expected, computed: Scalar) -> Result<QuantityCheck, CaseError> {
    let expected = e.value.to_scalar()?;
    let passed = match e.compare {
        Compare::Gt => computed > expected,
        Compare::Eq => match (&expected, &computed, e.tolerance) {
            (Scalar::Exact(a), Scalar::Exact(b), None) => a == b,
            _ => computed.approx_eq(&expected, e.tolerance.unwrap_or(DEFAULT_TOLERANCE)),
        },
    };
    Ok(QuantityCheck {
        label: label_of(e),
        expected,
        computed,
        compare: e.compare,
        tolerance: e.tolerance,
        passed,
        printed: e.printed.clone(),
        note: e.note.clone(),
    })
}

fn label_of(e: &Expected) -> String {
    if let Some(set) = &e.set {
        format!("{}{{{}}}", e.quantity, set.join(","))
    } else if let Some(cell) = &e.cell {
        let parts: Vec<String> = cell
            .iter()
            .map(|(k, v)| format!("{k}={}", v.join("|")))
            .collect();
        format!("{}[{}]", e.quantity, parts.join(", "))
    } else {
        e.quantity.clone()
    }
}

fn data_error(case: &CaseFile, message: impl Into<String>) -> CaseError {
    CaseError::Data {
        case: case.name.clone(),
        message: message.into(),
    }
}

fn unknown_quantity(case: &CaseFile, e: &Expected) -> CaseError {
    CaseError::UnknownQuantity {
        case: case.name.clone(),
        quantity: e.quantity.clone(),
    }
}

fn parse_inputs<T: for<'de> Deserialize<'de>>(case: &CaseFile) -> Result<T, CaseError> {
    serde_json::from_value(case.inputs.clone())
        .map_err(|err| data_error(case, format!("inputs: {err}")))
}

fn scalar(case: &CaseFile, v: &JsonScalar) -> Result<Scalar, CaseError> {
    v.to_scalar()
        .map_err(|err| data_error(case, format!("bad number: {err}")))
}

fn mass_from_entries(frame: &Frame, entries: &[MassEntryJson]) -> Result<MassFunction, CaseError> {
    let mut out = Vec::with_capacity(entries.len());
    for e in entries {
        out.push((frame.encode_set(&e.set)?, e.m.to_scalar()?));
    }
    Ok(MassFunction::new(frame, out)?)
}

/// Computes the quantities named in a case.
trait Quantities {
    fn compute(&self, case: &CaseFile, e: &Expected) -> Result<Scalar, CaseError>;
}

/// A product frame of named attributes.
struct Attributes {
    names: Vec<String>,
    joint: Frame,
}

impl Attributes {
    fn new(
        case: &CaseFile,
        frames: &BTreeMap<String, Vec<String>>,
        names: &[String],
    ) -> Result<Attributes, CaseError> {
        let mut factors = Vec::with_capacity(names.len());
        for n in names {
            let atoms = frames
                .get(n)
                .ok_or_else(|| data_error(case, format!("no frame for attribute {n:?}")))?;
            factors.push(Frame::new(atoms)?);
        }
        let joint = Frame::product_of(&factors, DEFAULT_MAX_ATOMS)?;
        Ok(Attributes {
            names: names.to_vec(),
            joint,
        })
    }

    fn factor_index(&self, case: &CaseFile, attribute: &str) -> Result<usize, CaseError> {
        self.names
            .iter()
            .position(|n| n == attribute)
            .ok_or_else(|| data_error(case, format!("unknown attribute {attribute:?}")))
    }

    fn factor(&self, index: usize) -> &Frame {
        &self.joint.factors().expect("joint frames are products")[index]
    }

    /// Intersection of the cylindrical extensions of each attribute's set.
    fn cell(
        &self,
        case: &CaseFile,
        cell: &BTreeMap<String, Vec<String>>,
    ) -> Result<AtomSet, CaseError> {
        let mut set = self.joint.full_set();
        for (attr, atoms) in cell {
            let i = self.factor_index(case, attr)?;
            let part = self.factor(i).encode(atoms)?;
            set = set.intersect(self.joint.cylindrical_extension(i, &part)?.set());
        }
        Ok(set)
    }

    /// Whether `value` projects exactly onto the sets named in `cell`.
    fn projects_to(
        &self,
        case: &CaseFile,
        value: AtomSet,
        cell: &BTreeMap<String, Vec<String>>,
    ) -> Result<bool, CaseError> {
        for (attr, atoms) in cell {
            let i = self.factor_index(case, attr)?;
            let target = self.factor(i).encode_set(atoms)?;
            let value = self.joint.subset(value)?;
            if self.joint.project_subset(i, &value)?.set() != target {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The subset an expected entry refers to.
    fn target(&self, case: &CaseFile, e: &Expected) -> Result<AtomSet, CaseError> {
        match (&e.set, &e.cell) {
            (Some(set), None) => Ok(self.joint.encode_set(set)?),
            (None, Some(cell)) => self.cell(case, cell),
            _ => Err(data_error(
                case,
                format!("{} needs exactly one of set or cell", e.quantity),
            )),
        }
    }

    fn population(
        &self,
        case: &CaseFile,
        cells: &[BTreeMap<String, serde_json::Value>],
    ) -> Result<Population, CaseError> {
        let mut entries = Vec::with_capacity(cells.len());
        for c in cells {
            let mut spec = BTreeMap::new();
            let mut count = None;
            for (k, v) in c {
                if k == "count" {
                    count = v.as_u64();
                } else {
                    let atoms: Vec<String> = serde_json::from_value(v.clone())
                        .map_err(|err| data_error(case, format!("cell {k}: {err}")))?;
                    spec.insert(k.clone(), atoms);
                }
            }
            let count = count.ok_or_else(|| data_error(case, "cell without a count"))?;
            if spec.len() != self.names.len() {
                return Err(data_error(case, "cell does not name every attribute"));
            }
            entries.push((self.cell(case, &spec)?, count));
        }
        Ok(Population::new(&self.joint, entries)?)
    }
}

fn expected_set<'a>(case: &CaseFile, e: &'a Expected) -> Result<&'a [String], CaseError> {
    e.set
        .as_deref()
        .ok_or_else(|| data_error(case, format!("{} needs a set", e.quantity)))
}

#[derive(Deserialize)]
struct TableInputs {
    frames: BTreeMap<String, Vec<String>>,
    attributes: Vec<String>,
    cells: Vec<BTreeMap<String, serde_json::Value>>,
}

struct Shampoo {
    attrs: Attributes,
    population: Population,
    mass: MassFunction,
}

impl Shampoo {
    fn new(case: &CaseFile) -> Result<Shampoo, CaseError> {
        let inputs: TableInputs = parse_inputs(case)?;
        let attrs = Attributes::new(case, &inputs.frames, &inputs.attributes)?;
        let population = attrs.population(case, &inputs.cells)?;
        let mass = freq_mass(&population);
        Ok(Shampoo {
            attrs,
            population,
            mass,
        })
    }
}

impl Quantities for Shampoo {
    fn compute(&self, case: &CaseFile, e: &Expected) -> Result<Scalar, CaseError> {
        let joint = &self.attrs.joint;
        match e.quantity.as_str() {
            "m" => Ok(self.mass.mass_of(self.attrs.target(case, e)?)),
            "bel" => {
                let a = joint.subset(self.attrs.target(case, e)?)?;
                Ok(freq_bel(&self.population, &a)?)
            }
            "pl" => {
                let a = joint.subset(self.attrs.target(case, e)?)?;
                Ok(freq_pl(&self.population, &a)?)
            }
            "axiom_violations" => {
                let mut violations = 0u64;
                for r in self.population.records() {
                    let table = measurement_table(r)?;
                    violations += check_measurement_axioms(joint, &table)?.len() as u64;
                }
                Ok(Scalar::count_ratio(violations, 1))
            }
            _ => Err(unknown_quantity(case, e)),
        }
    }
}

#[derive(Deserialize)]
struct LabelRule {
    value: BTreeMap<String, Vec<String>>,
    label: Option<BTreeMap<String, Vec<String>>>,
}

#[derive(Deserialize)]
struct RelabelInputs {
    #[serde(flatten)]
    table: TableInputs,
    labeling: Vec<LabelRule>,
}

struct ShampooRelabel {
    attrs: Attributes,
    labeled: Population,
}

impl ShampooRelabel {
    fn new(case: &CaseFile) -> Result<ShampooRelabel, CaseError> {
        let inputs: RelabelInputs = parse_inputs(case)?;
        let attrs = Attributes::new(case, &inputs.table.frames, &inputs.table.attributes)?;
        let population = attrs.population(case, &inputs.table.cells)?;
        let joint = attrs.joint.clone();
        let mut spec = LabelingSpec::identity(&joint);
        for rule in &inputs.labeling {
            let value = joint.subset(attrs.cell(case, &rule.value)?)?;
            let label = match &rule.label {
                Some(l) => joint.subset(attrs.cell(case, l)?)?,
                None => joint.empty(),
            };
            spec = spec.with_rule(&value, &label)?;
        }
        let labeled = apply_labeling(&population, &spec)?;
        Ok(ShampooRelabel { attrs, labeled })
    }
}

impl Quantities for ShampooRelabel {
    fn compute(&self, case: &CaseFile, e: &Expected) -> Result<Scalar, CaseError> {
        match e.quantity.as_str() {
            "count" => Ok(Scalar::count_ratio(
                self.labeled.weight_of(self.attrs.target(case, e)?),
                1,
            )),
            "column_total" => {
                let cell = e
                    .cell
                    .as_ref()
                    .ok_or_else(|| data_error(case, "column_total needs a cell"))?;
                let mut total = 0u64;
                for r in self.labeled.records() {
                    if self.attrs.projects_to(case, r.value().set(), cell)? {
                        total += r.weight();
                    }
                }
                Ok(Scalar::count_ratio(total, 1))
            }
            "total" => Ok(Scalar::count_ratio(self.labeled.total_weight(), 1)),
            "m" => Ok(freq_mass(&self.labeled).mass_of(self.attrs.target(case, e)?)),
            _ => Err(unknown_quantity(case, e)),
        }
    }
}

#[derive(Deserialize)]
struct MaterialInputs {
    frames: BTreeMap<String, Vec<String>>,
    attributes: Vec<String>,
    m1: Vec<MassEntryJson>,
    #[serde(rename = "m2_on_P")]
    m2_on_p: Vec<MassEntryJson>,
}

struct Material {
    joint: Frame,
    combined: MassFunction,
    conflict: Scalar,
}

impl Material {
    fn new(case: &CaseFile) -> Result<Material, CaseError> {
        let inputs: MaterialInputs = parse_inputs(case)?;
        let attrs = Attributes::new(case, &inputs.frames, &inputs.attributes)?;
        let joint = attrs.joint.clone();
        let m1 = mass_from_entries(&joint, &inputs.m1)?;
        let m2 = mass_from_entries(attrs.factor(0), &inputs.m2_on_p)?.extend_to(&joint, 0)?;
        let report = combine_dempster(&m1, &m2)?;
        Ok(Material {
            joint,
            combined: report.result,
            conflict: report.conflict_mass,
        })
    }
}

impl Quantities for Material {
    fn compute(&self, case: &CaseFile, e: &Expected) -> Result<Scalar, CaseError> {
        match e.quantity.as_str() {
            "m" => Ok(self
                .combined
                .mass_of(self.joint.encode_set(expected_set(case, e)?)?)),
            "conflict" => Ok(self.conflict.clone()),
            _ => Err(unknown_quantity(case, e)),
        }
    }
}

/// Mass of a choice made independently by `agents` agents, each picking the
/// first atom of a two-atom frame with probability `p`: the outcome is
/// certain only when all agree.
pub fn selection_mass(frame: &Frame, p: &Scalar, agents: u32) -> Result<MassFunction, CaseError> {
    if frame.len() != 2 {
        return Err(CaseError::Data {
            case: "selection".into(),
            message: format!("selection needs a two-atom frame, got {}", frame.len()),
        });
    }
    let one = Scalar::one(p.mode());
    let q = &one - p;
    let pow = |x: &Scalar| (0..agents).fold(one.clone(), |acc, _| &acc * x);
    let all_first = pow(p);
    let all_second = pow(&q);
    let split = &(&one - &all_first) - &all_second;
    Ok(MassFunction::new(
        frame,
        [
            (AtomSet::singleton(0), all_first),
            (AtomSet::singleton(1), all_second),
            (frame.full_set(), split),
        ],
    )?)
}

#[derive(Deserialize)]
struct KillerInputs {
    weapons: Vec<String>,
    outcomes: Vec<String>,
    p_gun: JsonScalar,
    killers: u32,
    p_rescue_given_gun: JsonScalar,
    physicians: u32,
    stored_m12: Vec<MassEntryJson>,
}

struct Killer {
    joint: Frame,
    weapon: MassFunction,
    outcome_given_gun: MassFunction,
    with_stored: (MassFunction, Scalar),
    with_embedded: MassFunction,
}

impl Killer {
    fn new(case: &CaseFile, diagnostics: &mut Vec<String>) -> Result<Killer, CaseError> {
        let inputs: KillerInputs = parse_inputs(case)?;
        let weapons = Frame::new(&inputs.weapons)?;
        let outcomes = Frame::new(&inputs.outcomes)?;
        let joint = weapons.product(&outcomes)?;
        let weapon = selection_mass(&weapons, &scalar(case, &inputs.p_gun)?, inputs.killers)?;
        let outcome_given_gun = selection_mass(
            &outcomes,
            &scalar(case, &inputs.p_rescue_given_gun)?,
            inputs.physicians,
        )?;
        let weapon_joint = weapon.extend_to(&joint, 0)?;

        let stored = mass_from_entries(&joint, &inputs.stored_m12)?;
        let report = combine_dempster(&weapon_joint, &stored)?;
        let with_stored = (report.result, report.conflict_mass);

        // Given the knife the victim always dies; the alternative reading
        // (always rescued) is computed only to compare with the stored sets.
        let rescue = AtomSet::singleton(0);
        let let_die = AtomSet::singleton(1);
        let readings = [("knife -> let die", let_die), ("knife -> rescue", rescue)];
        let mut embedded = Vec::with_capacity(2);
        for (_, knife_outcome) in readings {
            embedded.push(embed_killer(
                &joint,
                &outcome_given_gun,
                knife_outcome,
            )?);
        }
        for ((reading, _), m12) in readings.iter().zip(&embedded) {
            let mut matches = Vec::new();
            let mut misses = Vec::new();
            for (set, v) in stored.focal() {
                let label = format!("{}={}", joint.format_set(set), v);
                if m12.mass_of(set) == *v {
                    matches.push(label);
                } else {
                    misses.push(label);
                }
            }
            diagnostics.push(format!(
                "stored m12 vs embedding with {reading}: matches [{}], differs [{}]",
                matches.join("; "),
                misses.join("; ")
            ));
        }
        diagnostics.push(format!("embedded m12 (knife -> let die): {}", embedded[0]));

        let with_embedded = combine_dempster(&weapon_joint, &embedded[0])?.result;
        Ok(Killer {
            joint,
            weapon,
            outcome_given_gun,
            with_stored,
            with_embedded,
        })
    }
}

/// Physician behaviour embedded in the joint weapon × outcome frame and
/// combined across the two weapons.
fn embed_killer(
    joint: &Frame,
    outcome_given_gun: &MassFunction,
    knife_outcome: AtomSet,
) -> Result<MassFunction, CaseError> {
    let weapons = &joint.factors().expect("product frame")[0];
    let gun = joint.cylindrical_extension(0, &weapons.subset(AtomSet::singleton(0))?)?;
    let knife = joint.cylindrical_extension(0, &weapons.subset(AtomSet::singleton(1))?)?;
    let lift = |b: &crate::frame::SubsetRef, m: &MassFunction| -> Result<MassFunction, CaseError> {
        let on_joint = m.extend_to(joint, 1)?;
        let entries: Vec<(AtomSet, Scalar)> = on_joint
            .focal()
            .map(|(a, v)| (a.intersect(b.set()), v.clone()))
            .collect();
        let conditional = MassFunction::new(joint, entries)?;
        Ok(condition_embed(b, &conditional)?)
    };
    let outcomes = &joint.factors().expect("product frame")[1];
    let knife_mass = MassFunction::new(
        outcomes,
        [(knife_outcome, Scalar::one(outcome_given_gun.mode()))],
    )?;
    let by_gun = lift(&gun, outcome_given_gun)?;
    let by_knife = lift(&knife, &knife_mass)?;
    Ok(combine_dempster(&by_gun, &by_knife)?.result)
}

impl Quantities for Killer {
    fn compute(&self, case: &CaseFile, e: &Expected) -> Result<Scalar, CaseError> {
        match e.quantity.as_str() {
            "bel_weapon" => {
                let f = self.weapon.frame();
                Ok(self.weapon.bel_set(f.encode_set(expected_set(case, e)?)?))
            }
            "bel_outcome_given_gun" => {
                let f = self.outcome_given_gun.frame();
                Ok(self
                    .outcome_given_gun
                    .bel_set(f.encode_set(expected_set(case, e)?)?))
            }
            "m_with_stored" => Ok(self
                .with_stored
                .0
                .mass_of(self.joint.encode_set(expected_set(case, e)?)?)),
            "conflict_with_stored" => Ok(self.with_stored.1.clone()),
            "m_with_embedded" => Ok(self
                .with_embedded
                .mass_of(self.joint.encode_set(expected_set(case, e)?)?)),
            _ => Err(unknown_quantity(case, e)),
        }
    }
}

#[derive(Deserialize)]
struct TwoExpertInputs {
    frame: Vec<String>,
    expert: Vec<MassEntryJson>,
}

struct TwoExperts {
    frame: Frame,
    combined: MassFunction,
    conflict: Scalar,
}

impl TwoExperts {
    fn new(case: &CaseFile) -> Result<TwoExperts, CaseError> {
        let inputs: TwoExpertInputs = parse_inputs(case)?;
        let frame = Frame::new(&inputs.frame)?;
        let expert = mass_from_entries(&frame, &inputs.expert)?;
        let report = combine_dempster(&expert, &expert)?;
        Ok(TwoExperts {
            frame,
            combined: report.result,
            conflict: report.conflict_mass,
        })
    }
}

impl Quantities for TwoExperts {
    fn compute(&self, case: &CaseFile, e: &Expected) -> Result<Scalar, CaseError> {
        match e.quantity.as_str() {
            "m" => Ok(self
                .combined
                .mass_of(self.frame.encode_set(expected_set(case, e)?)?)),
            "unnormalized" => {
                let set = self.frame.encode_set(expected_set(case, e)?)?;
                let keep = &Scalar::one(self.conflict.mode()) - &self.conflict;
                Ok(&self.combined.mass_of(set) * &keep)
            }
            "conflict" => Ok(self.conflict.clone()),
            _ => Err(unknown_quantity(case, e)),
        }
    }
}

#[derive(Deserialize)]
struct RoughSetFree {
    p1: JsonScalar,
    e1: JsonScalar,
    e2: JsonScalar,
    f1: JsonScalar,
    f2: JsonScalar,
}

#[derive(Deserialize)]
struct RoughSetInputs {
    params: RoughSetFree,
}

struct RoughSet {
    params: RoughSetParams,
    m1: MassFunction,
    m12: MassFunction,
}

impl RoughSet {
    fn new(case: &CaseFile) -> Result<RoughSet, CaseError> {
        let inputs: RoughSetInputs = parse_inputs(case)?;
        let p = &inputs.params;
        let params = RoughSetParams::from_free(
            scalar(case, &p.p1)?,
            scalar(case, &p.e1)?,
            scalar(case, &p.e2)?,
            scalar(case, &p.f1)?,
            scalar(case, &p.f2)?,
        )?;
        let (m1, _) = rs_expert_masses(&params)?;
        let m12 = rs_combined_conditional(&params)?;
        Ok(RoughSet { params, m1, m12 })
    }
}

impl Quantities for RoughSet {
    fn compute(&self, case: &CaseFile, e: &Expected) -> Result<Scalar, CaseError> {
        let frame = self.m1.frame();
        match e.quantity.as_str() {
            "m1" => Ok(self.m1.mass_of(frame.encode_set(expected_set(case, e)?)?)),
            "m12" => Ok(self.m12.mass_of(frame.encode_set(expected_set(case, e)?)?)),
            "gap" => Ok(Scalar::float(rs_gap(&self.params)?)),
            "gap_vacuous" => {
                let zero = Scalar::zero(Arithmetic::Exact);
                let vacuous = RoughSetParams::from_free(
                    self.params.p1.clone(),
                    zero.clone(),
                    zero.clone(),
                    zero.clone(),
                    zero,
                )?;
                let gap = rs_gap(&vacuous)?;
                Ok(if gap == 0.0 {
                    Scalar::zero(Arithmetic::Exact)
                } else {
                    Scalar::float(gap)
                })
            }
            _ => Err(unknown_quantity(case, e)),
        }
    }
}

//! Scenario files: a JSON description of a ring, a module, named ideals
//! and a task list. Schema version 1.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use socle_core::error::EngineError;
use socle_core::invariants::InvariantOptions;
use socle_core::localmodel::{IdealHandle, PresentedModule, PresentedRing};
use socle_core::poly::FreeVector;
use socle_core::scalar::{FieldSpec, DEFAULT_PRIME};

use crate::minors::minors_2x;
use crate::parser::{parse_polynomial, ParseError};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Scenario {
    pub schema: u32,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub field: FieldChoice,
    pub variables: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<String>,
    /// Optional 2-row matrix whose 2x2 minors are appended to the
    /// relations.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation_minors: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub module: ModuleSpec,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub ideals: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub options: ScenarioOptions,
    pub tasks: Vec<TaskSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum FieldChoice {
    Name(String),
    Prime { prime: u64 },
}

impl FieldChoice {
    pub fn to_field(&self) -> Result<FieldSpec, ScenarioError> {
        match self {
            FieldChoice::Name(s) => match s.to_ascii_lowercase().as_str() {
                "rational" | "q" => Ok(FieldSpec::Rational),
                "fp" | "prime" => Ok(FieldSpec::Prime(DEFAULT_PRIME)),
                other => Err(ScenarioError::Invalid(format!(
                    "unknown field name `{other}` (use \"rational\" or {{\"prime\": p}})"
                ))),
            },
            FieldChoice::Prime { prime } => {
                if *prime < 2 {
                    return Err(ScenarioError::Invalid("prime must be at least 2".into()));
                }
                Ok(FieldSpec::Prime(*prime))
            }
        }
    }

    pub fn from_field(field: FieldSpec) -> FieldChoice {
        match field {
            FieldSpec::Rational => FieldChoice::Name("rational".to_string()),
            FieldSpec::Prime(p) => FieldChoice::Prime { prime: p },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum ModuleSpec {
    /// Free module of the given rank.
    Free { free: usize },
    /// An ideal viewed as a module; the presentation is computed from its
    /// syzygies.
    Ideal { ideal: Vec<String> },
    /// Explicit cokernel presentation: columns of polynomial strings.
    Cokernel { rank: usize, columns: Vec<Vec<String>> },
}

impl Default for ModuleSpec {
    fn default() -> Self {
        ModuleSpec::Free { free: 1 }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
pub struct ScenarioOptions {
    #[serde(default = "default_n_max")]
    pub n_max: u32,
    #[serde(default = "default_window")]
    pub window: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation_margin: Option<u32>,
}

fn default_n_max() -> u32 {
    6
}

fn default_window() -> usize {
    3
}

impl Default for ScenarioOptions {
    fn default() -> Self {
        ScenarioOptions {
            n_max: default_n_max(),
            window: default_window(),
            truncation_margin: None,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(rename_all = "snake_case")]
pub enum TaskSpec {
    IrTable {
        ideal: String,
    },
    HsTable {
        ideal: String,
    },
    Fit {
        ideal: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        assert_dimension: Option<usize>,
    },
    TheoremCheck {
        ideal: String,
        n: u32,
    },
    CorollaryCheck {
        ideal: String,
        /// Optional externally stated value for the idealization type; a
        /// mismatch is flagged in the report notes, never asserted.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        reference_type: Option<u64>,
    },
    IrExactnessCheck {
        ideal: String,
    },
    ReductionCheck {
        smaller: String,
        larger: String,
    },
    LemmaCheck {
        seed: u64,
        cases: u32,
    },
}

impl TaskSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            TaskSpec::IrTable { .. } => "ir_table",
            TaskSpec::HsTable { .. } => "hs_table",
            TaskSpec::Fit { .. } => "fit",
            TaskSpec::TheoremCheck { .. } => "theorem_check",
            TaskSpec::CorollaryCheck { .. } => "corollary_check",
            TaskSpec::IrExactnessCheck { .. } => "ir_exactness_check",
            TaskSpec::ReductionCheck { .. } => "reduction_check",
            TaskSpec::LemmaCheck { .. } => "lemma_check",
        }
    }

    fn ideal_names(&self) -> Vec<&str> {
        match self {
            TaskSpec::IrTable { ideal }
            | TaskSpec::HsTable { ideal }
            | TaskSpec::Fit { ideal, .. }
            | TaskSpec::TheoremCheck { ideal, .. }
            | TaskSpec::CorollaryCheck { ideal, .. }
            | TaskSpec::IrExactnessCheck { ideal } => vec![ideal],
            TaskSpec::ReductionCheck { smaller, larger } => vec![smaller, larger],
            TaskSpec::LemmaCheck { .. } => vec![],
        }
    }
}

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("unsupported schema version {0} (expected {SCHEMA_VERSION})")]
    Schema(u32),
    #[error("invalid scenario: {0}")]
    Invalid(String),
    #[error("in {context}: {source}")]
    Parse {
        context: String,
        source: ParseError,
    },
    #[error("unknown ideal name `{0}`")]
    UnknownIdeal(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("bad scenario JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// A scenario with everything parsed and bound to engine objects.
pub struct ResolvedScenario {
    pub scenario: Scenario,
    pub field: FieldSpec,
    pub ring: Arc<PresentedRing>,
    pub module: PresentedModule,
    pub ideals: BTreeMap<String, IdealHandle>,
    pub options: InvariantOptions,
}

pub fn parse_scenario(json: &str) -> Result<Scenario, ScenarioError> {
    Ok(serde_json::from_str(json)?)
}

pub fn resolve(
    scenario: &Scenario,
    field_override: Option<FieldSpec>,
    n_max_override: Option<u32>,
) -> Result<ResolvedScenario, ScenarioError> {
    if scenario.schema != SCHEMA_VERSION {
        return Err(ScenarioError::Schema(scenario.schema));
    }
    let field = match field_override {
        Some(f) => f,
        None => scenario.field.to_field()?,
    };
    let vars = &scenario.variables;
    for (i, v) in vars.iter().enumerate() {
        if v.is_empty() || vars[..i].contains(v) {
            return Err(ScenarioError::Invalid(format!(
                "variable names must be unique and nonempty (offender: `{v}`)"
            )));
        }
    }

    let mut relations = Vec::new();
    for (i, src) in scenario.relations.iter().enumerate() {
        let p = parse_polynomial(src, vars, field).map_err(|source| ScenarioError::Parse {
            context: format!("relations[{i}]"),
            source,
        })?;
        relations.push(p);
    }
    if let Some(rows) = &scenario.relation_minors {
        if rows.len() != 2 {
            return Err(ScenarioError::Invalid(
                "relation_minors needs exactly two rows".into(),
            ));
        }
        if rows[0].len() != rows[1].len() || rows[0].len() < 2 {
            return Err(ScenarioError::Invalid(
                "relation_minors rows must have equal length at least two".into(),
            ));
        }
        let parse_row = |row: &[String], which: &str| {
            row.iter()
                .enumerate()
                .map(|(i, src)| {
                    parse_polynomial(src, vars, field).map_err(|source| ScenarioError::Parse {
                        context: format!("relation_minors.{which}[{i}]"),
                        source,
                    })
                })
                .collect::<Result<Vec<_>, _>>()
        };
        let top = parse_row(&rows[0], "top")?;
        let bottom = parse_row(&rows[1], "bottom")?;
        relations.extend(minors_2x(&top, &bottom));
    }
    let ring = PresentedRing::new(field, vars.clone(), relations)?;

    let module = match &scenario.module {
        ModuleSpec::Free { free } => {
            if *free == 0 {
                return Err(ScenarioError::Invalid("free rank must be positive".into()));
            }
            ring.free_module(*free)
        }
        ModuleSpec::Ideal { ideal } => {
            let gens = ideal
                .iter()
                .enumerate()
                .map(|(i, src)| {
                    parse_polynomial(src, vars, field).map_err(|source| ScenarioError::Parse {
                        context: format!("module.ideal[{i}]"),
                        source,
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            ring.module_from_ideal(&gens)?
        }
        ModuleSpec::Cokernel { rank, columns } => {
            if *rank == 0 {
                return Err(ScenarioError::Invalid("cokernel rank must be positive".into()));
            }
            let mut cols = Vec::new();
            for (ci, col) in columns.iter().enumerate() {
                if col.len() != *rank {
                    return Err(ScenarioError::Invalid(format!(
                        "cokernel column {ci} has {} entries, expected {rank}",
                        col.len()
                    )));
                }
                let entries = col
                    .iter()
                    .enumerate()
                    .map(|(i, src)| {
                        parse_polynomial(src, vars, field).map_err(|source| {
                            ScenarioError::Parse {
                                context: format!("module.columns[{ci}][{i}]"),
                                source,
                            }
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                cols.push(FreeVector::new(entries));
            }
            ring.module_from_columns(*rank, cols)
        }
    };
    if !ring.module_is_nonzero(&module)? {
        return Err(ScenarioError::Invalid(
            "the module is zero after its presentation".into(),
        ));
    }

    let mut ideals = BTreeMap::new();
    for (name, gens) in &scenario.ideals {
        let parsed = gens
            .iter()
            .enumerate()
            .map(|(i, src)| {
                parse_polynomial(src, vars, field).map_err(|source| ScenarioError::Parse {
                    context: format!("ideals.{name}[{i}]"),
                    source,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        ideals.insert(name.clone(), ring.ideal(&parsed)?);
    }

    for task in &scenario.tasks {
        for name in task.ideal_names() {
            if !ideals.contains_key(name) {
                return Err(ScenarioError::UnknownIdeal(name.to_string()));
            }
        }
    }

    let options = InvariantOptions {
        n_max: n_max_override.unwrap_or(scenario.options.n_max),
        window: scenario.options.window,
        truncation_margin: scenario.options.truncation_margin,
        assert_dimension: None,
    };

    Ok(ResolvedScenario {
        scenario: scenario.clone(),
        field,
        ring,
        module,
        ideals,
        options,
    })
}

//! JSON input schemas for the command-line interface. Field names are
//! normative: `backend`, `basis`, `structure`, `variables`, `level`,
//! `levels` for rings; `ring`, `side`, `group.free_rank`, `group.torsion`,
//! `actions` for modules; `domain`, `codomain`, `matrix` for ring maps.

use crate::module::{Module, Side};
use crate::ring::{FiniteRankRing, IndRing, MonomialLevelRing, RingHom};
use crate::{FgAbelianGroup, Int, IntMatrix};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "backend", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingSchema {
    FiniteRank {
        basis: Vec<String>,
        structure: Vec<Vec<Vec<i64>>>,
    },
    Monomial {
        variables: usize,
        level: u32,
    },
    Ind {
        variables: usize,
        levels: Vec<u32>,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSchema {
    pub free_rank: usize,
    #[serde(default)]
    pub torsion: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSchema {
    pub ring: RingSchema,
    pub side: String,
    pub group: GroupSchema,
    pub actions: Vec<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomSchema {
    pub domain: RingSchema,
    pub codomain: RingSchema,
    pub matrix: Vec<Vec<i64>>,
}

/// Any of the accepted input payloads, distinguished by their fields.
#[derive(Clone, Debug)]
pub enum Input {
    Ring(RingSchema),
    Module(ModuleSchema),
    Hom(HomSchema),
}

#[derive(Debug)]
pub struct SchemaError {
    pub message: String,
}

impl std::fmt::Display for SchemaError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for SchemaError {}

fn err<T>(message: impl Into<String>) -> Result<T, SchemaError> {
    Err(SchemaError {
        message: message.into(),
    })
}

/// Parse a JSON document into one of the payload kinds, keyed off its
/// distinguishing fields.
pub fn parse_input(text: &str) -> Result<Input, SchemaError> {
    let value: serde_json::Value = match serde_json::from_str(text) {
        Ok(v) => v,
        Err(e) => return err(format!("invalid JSON at line {}: {}", e.line(), e)),
    };
    let Some(obj) = value.as_object() else {
        return err("the top-level value must be an object");
    };
    if obj.contains_key("side") {
        match serde_json::from_value::<ModuleSchema>(value.clone()) {
            Ok(m) => Ok(Input::Module(m)),
            Err(e) => err(format!("module schema violation: {e}")),
        }
    } else if obj.contains_key("domain") {
        match serde_json::from_value::<HomSchema>(value.clone()) {
            Ok(h) => Ok(Input::Hom(h)),
            Err(e) => err(format!("ring-map schema violation: {e}")),
        }
    } else if obj.contains_key("backend") {
        match serde_json::from_value::<RingSchema>(value.clone()) {
            Ok(r) => Ok(Input::Ring(r)),
            Err(e) => err(format!("ring schema violation: {e}")),
        }
    } else {
        err("object has none of the distinguishing fields: backend, side, domain")
    }
}

/// Materialized ring of any backend.
pub enum AnyRing {
    FiniteRank(FiniteRankRing),
    Monomial(MonomialLevelRing),
    Ind(IndRing),
}

pub fn build_ring(schema: &RingSchema) -> Result<AnyRing, SchemaError> {
    match schema {
        RingSchema::FiniteRank { basis, structure } => {
            let s: Vec<Vec<Vec<Int>>> = structure
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|v| v.iter().map(|&x| Int::from(x)).collect())
                        .collect()
                })
                .collect();
            match FiniteRankRing::new(basis.clone(), s) {
                Ok(r) => Ok(AnyRing::FiniteRank(r)),
                Err(e) => err(format!("structure field: {e}")),
            }
        }
        RingSchema::Monomial { variables, level } => {
            if *level == 0 {
                return err("level field: must be at least 1");
            }
            Ok(AnyRing::Monomial(MonomialLevelRing::new(
                *variables, *level,
            )))
        }
        RingSchema::Ind { variables, levels } => {
            if levels.is_empty() {
                return err("levels field: must be nonempty");
            }
            match IndRing::new(*variables, levels.clone()) {
                Ok(i) => Ok(AnyRing::Ind(i)),
                Err(e) => err(format!("levels field: {e}")),
            }
        }
    }
}

fn build_matrix(
    rows: &[Vec<i64>],
    expect: (usize, usize),
    what: &str,
) -> Result<IntMatrix, SchemaError> {
    if rows.len() != expect.0 || rows.iter().any(|r| r.len() != expect.1) {
        return err(format!(
            "{what}: expected a {}x{} matrix",
            expect.0, expect.1
        ));
    }
    Ok(IntMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| Int::from(x)).collect())
            .collect(),
    ))
}

pub fn build_module(schema: &ModuleSchema) -> Result<Module, SchemaError> {
    let AnyRing::FiniteRank(ring) = build_ring(&schema.ring)? else {
        return err("ring field: module files require the finite_rank backend");
    };
    let side = match schema.side.as_str() {
        "left" => Side::Left,
        "right" => Side::Right,
        other => return err(format!("side field: expected left or right, got {other}")),
    };
    let mut torsion: Vec<Int> = schema.group.torsion.iter().map(|&d| Int::from(d)).collect();
    torsion.sort();
    for d in &torsion {
        if *d < Int::from(2) {
            return err("group.torsion field: orders must be at least 2");
        }
    }
    for w in torsion.windows(2) {
        if !(w[1].clone() % w[0].clone()).is_zero() {
            return err("group.torsion field: orders must form a divisibility chain");
        }
    }
    let group = FgAbelianGroup::with_orders(schema.group.free_rank, torsion);
    let m = group.num_gens();
    if schema.actions.len() != ring.rank() {
        return err(format!(
            "actions field: expected {} matrices, got {}",
            ring.rank(),
            schema.actions.len()
        ));
    }
    let mut matrices = Vec::new();
    for (i, a) in schema.actions.iter().enumerate() {
        matrices.push(build_matrix(a, (m, m), &format!("actions[{i}]"))?);
    }
    Module::from_action_matrices(ring, side, group, matrices).map_err(|e| SchemaError {
        message: format!("actions field: {e}"),
    })
}

pub fn build_hom(schema: &HomSchema) -> Result<RingHom, SchemaError> {
    let AnyRing::FiniteRank(domain) = build_ring(&schema.domain)? else {
        return err("domain field: ring maps require the finite_rank backend");
    };
    let AnyRing::FiniteRank(codomain) = build_ring(&schema.codomain)? else {
        return err("codomain field: ring maps require the finite_rank backend");
    };
    let matrix = build_matrix(&schema.matrix, (codomain.rank(), domain.rank()), "matrix")?;
    RingHom::new(domain, codomain, matrix).map_err(|e| SchemaError {
        message: format!("matrix field: {e}"),
    })
}

use num_traits::Zero;

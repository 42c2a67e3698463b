//! Universal dimension catalog: formulas, eigenvalues, decomposition tables
//! and the identities among them.

pub mod catalog;
pub mod exceptional;
pub mod formula;
pub mod label;
pub mod tables;

pub use catalog::{c2, casimir_eigenvalue, eig4, Catalog, Expr, Provenance};
pub use formula::{EvalError, Factored};
pub use label::{Base, Label, Prime, X3Kind};
pub use tables::{module_table, DecompositionTable, Module};

use crate::rational::{ser_q, Q};
use crate::vparams::{AlgebraId, Exceptional, FamilyLine, VogelPoint};
use num_traits::Zero;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct SumIdentityReport {
    pub module: Module,
    #[serde(serialize_with = "ser_q")]
    pub lhs: Q,
    #[serde(serialize_with = "ser_q")]
    pub rhs: Q,
    #[serde(serialize_with = "ser_q")]
    pub discrepancy: Q,
    pub holds: bool,
}

/// Σ mult·dim(label) against the closed-form total at a point.
pub fn check_sum_identity(cat: &Catalog, module: Module, pt: &VogelPoint) -> Result<SumIdentityReport, EvalError> {
    let tab = module_table(module, cat.provenance());
    let mut lhs = Q::zero();
    for (l, m) in &tab.entries {
        lhs += cat.dim(l, pt)? * Q::from_integer((*m).into());
    }
    let d = cat.dim_g().eval_point(pt)?;
    let rhs = tables::eval_total(module, &d);
    let discrepancy = &lhs - &rhs;
    Ok(SumIdentityReport { module, holds: discrepancy.is_zero(), lhs, rhs, discrepancy })
}

/// The diff term at a point.
pub fn diff(cat: &Catalog, pt: &VogelPoint) -> Result<Q, EvalError> {
    cat.diff().eval_point(pt)
}

/// diff at an algebra, through its family line where the point is singular.
pub fn diff_at_algebra(cat: &Catalog, alg: &AlgebraId) -> Result<(Q, bool), EvalError> {
    let pt = crate::vparams::algebra_point(alg).map_err(|e| EvalError::Context(e.to_string()))?;
    match cat.diff().eval_point(&pt) {
        Ok(v) => Ok((v, false)),
        Err(EvalError::Pole { .. } | EvalError::Indeterminate { .. }) => {
            let (line, n) = alg.line();
            let f = cat.diff().eval_line(&line)?;
            f.eval(&n).map(|v| (v, true)).ok_or_else(|| EvalError::UndefinedOnLine(format!("diff at {alg}")))
        }
        Err(e) => Err(e),
    }
}

/// Point or line for the composite ℤ₃/𝕂₃/𝕃₃ dimensions.
pub enum Where<'a> {
    Point(&'a VogelPoint),
    Line(&'a FamilyLine, &'a Q),
}

/// dim ℤ₃ (symmetric or window context), dim 𝕂₃ or dim 𝕃₃.
pub fn derived_dims(cat: &Catalog, kind: X3Kind, at: Where<'_>) -> Result<Q, EvalError> {
    if kind == X3Kind::X3 {
        return Err(EvalError::Context("X3 is not a derived label".into()));
    }
    let label = Label::plain(Base::X3(kind));
    match at {
        Where::Point(pt) => {
            if let Err(e) = cat.ratio().eval_point(pt) {
                return Err(EvalError::RatioUndefined(e.to_string()));
            }
            cat.dim(&label, pt)
        }
        Where::Line(line, n) => cat.dim_on_line(&label, line, n),
    }
}

/// Relations ex1–ex6 at an exceptional point.
pub fn exceptional_relations(
    cat: &Catalog,
    pt: &VogelPoint,
) -> Result<Vec<exceptional::RelationCheck>, EvalError> {
    let e = Exceptional::ALL
        .into_iter()
        .find(|e| e.table_point() == *pt)
        .ok_or_else(|| EvalError::Context("relations only asserted on exceptional points".into()))?;
    exceptional::check_relations(cat, e)
}

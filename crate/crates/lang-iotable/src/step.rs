//! First-match step: scan rows top to bottom; the first whose guard holds
//! fires, its effects evaluated against the pre-step valuation. No match
//! fires nothing. Exactly zero or one row fires per step.

use crate::ast::IoTable;
use kernel::Span;

pub trait RowEval<E> {
    type Value;
    type Fault;
    fn eval_guard(&self, guard: &E) -> Result<bool, Self::Fault>;
    fn eval(&self, expr: &E) -> Result<Self::Value, Self::Fault>;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEffect<V> {
    pub target: String,
    pub value: V,
    pub span: Span,
}

pub struct RowStepError<F> {
    pub fault: F,
    pub span: Span,
}

pub fn step_iotable<E, H: RowEval<E>>(
    table: &IoTable<E>,
    host: &H,
) -> Result<Vec<TableEffect<H::Value>>, RowStepError<H::Fault>> {
    for row in &table.rows {
        let fires = host
            .eval_guard(&row.guard)
            .map_err(|fault| RowStepError { fault, span: row.span.clone() })?;
        if !fires {
            continue;
        }
        let mut effects = Vec::new();
        for effect in &row.effects {
            let value = host
                .eval(&effect.value)
                .map_err(|fault| RowStepError { fault, span: effect.span.clone() })?;
            effects.push(TableEffect {
                target: effect.target.value.clone(),
                value,
                span: effect.span.clone(),
            });
        }
        return Ok(effects);
    }
    Ok(Vec::new())
}

//! Deterministic operational step: scan the transitions out of the
//! current state in declaration order; the first whose guard is absent or
//! true fires. All right-hand sides evaluate against the pre-step
//! valuation (the host is immutable during a step), which gives
//! simultaneous-assignment semantics. No match is a stutter step.

use crate::ast::Automaton;
use kernel::Span;

/// Evaluation services for one step. The host closes over the pre-step
/// valuation; faults (division by zero, absent values) are host-typed and
/// pass through untouched.
pub trait StepHost<E> {
    type Value;
    type Fault;
    fn eval_guard(&self, guard: &E) -> Result<bool, Self::Fault>;
    fn eval(&self, expr: &E) -> Result<Self::Value, Self::Fault>;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepEffect<V> {
    pub target: String,
    pub value: V,
    pub span: Span,
}

#[derive(Debug)]
pub struct StepOutcome<V> {
    pub next_state: String,
    pub effects: Vec<StepEffect<V>>,
    /// Index of the fired transition; `None` for a stutter step.
    pub fired: Option<usize>,
}

/// A fault during guard or action evaluation, located at the transition
/// that was firing.
pub struct StepError<F> {
    pub fault: F,
    pub span: Span,
}

pub fn step_automaton<E, H: StepHost<E>>(
    a: &Automaton<E>,
    current: &str,
    host: &H,
) -> Result<StepOutcome<H::Value>, StepError<H::Fault>> {
    for (index, t) in a.transitions.iter().enumerate() {
        if t.source.value != current {
            continue;
        }
        let fires = match &t.guard {
            None => true,
            Some(g) => host
                .eval_guard(g)
                .map_err(|fault| StepError { fault, span: t.span.clone() })?,
        };
        if !fires {
            continue;
        }
        let mut effects = Vec::new();
        for action in &t.actions {
            let value = host
                .eval(&action.value)
                .map_err(|fault| StepError { fault, span: action.span.clone() })?;
            effects.push(StepEffect {
                target: action.target.value.clone(),
                value,
                span: action.span.clone(),
            });
        }
        return Ok(StepOutcome { next_state: t.target.value.clone(), effects, fired: Some(index) });
    }
    Ok(StepOutcome { next_state: current.to_string(), effects: Vec::new(), fired: None })
}

/// Evaluate the initial clause's outputs (against whatever valuation the
/// host closes over, typically just the variable initials).
pub fn initial_effects<E, H: StepHost<E>>(
    a: &Automaton<E>,
    host: &H,
) -> Result<Vec<StepEffect<H::Value>>, StepError<H::Fault>> {
    let Some(init) = a.initial() else { return Ok(Vec::new()) };
    let mut effects = Vec::new();
    for action in &init.outputs {
        let value = host
            .eval(&action.value)
            .map_err(|fault| StepError { fault, span: action.span.clone() })?;
        effects.push(StepEffect {
            target: action.target.value.clone(),
            value,
            span: action.span.clone(),
        });
    }
    Ok(effects)
}

//! Runtime face of the family: stepping a component's behavior over a
//! valuation. The valuation closes over the host, so every right-hand
//! side sees the pre-step state.

use crate::elements::{BehaviorBody, BehaviorDecl};
use kernel::Span;
use lang_expr::{eval_expr, EvalFault, Expr, Valuation, Value};

/// Evaluation host over one immutable valuation.
pub struct ValuationHost<'a> {
    pub valuation: &'a Valuation,
}

impl lang_automaton::StepHost<Expr> for ValuationHost<'_> {
    type Value = Value;
    type Fault = EvalFault;
    fn eval_guard(&self, guard: &Expr) -> Result<bool, EvalFault> {
        let v = eval_expr(guard, self.valuation)?;
        Ok(v.as_bool().expect("guard of a checked behavior is boolean"))
    }
    fn eval(&self, expr: &Expr) -> Result<Value, EvalFault> {
        eval_expr(expr, self.valuation)
    }
}

impl lang_iotable::RowEval<Expr> for ValuationHost<'_> {
    type Value = Value;
    type Fault = EvalFault;
    fn eval_guard(&self, guard: &Expr) -> Result<bool, EvalFault> {
        let v = eval_expr(guard, self.valuation)?;
        Ok(v.as_bool().expect("guard of a checked behavior is boolean"))
    }
    fn eval(&self, expr: &Expr) -> Result<Value, EvalFault> {
        eval_expr(expr, self.valuation)
    }
}

/// One step's result: the next automaton state (None for tables) and the
/// effects to commit, in declaration order.
pub struct BehaviorStep {
    pub next_state: Option<String>,
    pub effects: Vec<(String, Value, Span)>,
}

/// A fault and where it happened.
pub type BehaviorFault = (EvalFault, Span);

pub fn step_behavior(
    behavior: &BehaviorDecl,
    current_state: Option<&str>,
    valuation: &Valuation,
) -> Result<BehaviorStep, BehaviorFault> {
    let host = ValuationHost { valuation };
    match &behavior.body {
        BehaviorBody::Automaton(a) => {
            let state = current_state.expect("automaton instances track a state");
            let out = lang_automaton::step_automaton(a, state, &host)
                .map_err(|e| (e.fault, e.span))?;
            Ok(BehaviorStep {
                next_state: Some(out.next_state),
                effects: out.effects.into_iter().map(|e| (e.target, e.value, e.span)).collect(),
            })
        }
        BehaviorBody::Table(t) => {
            let effects =
                lang_iotable::step_iotable(t, &host).map_err(|e| (e.fault, e.span))?;
            Ok(BehaviorStep {
                next_state: None,
                effects: effects.into_iter().map(|e| (e.target, e.value, e.span)).collect(),
            })
        }
    }
}

/// The automaton's initial state name, if the behavior is an automaton.
pub fn initial_state(behavior: &BehaviorDecl) -> Option<String> {
    match &behavior.body {
        BehaviorBody::Automaton(a) => a.initial().map(|i| i.state.value.clone()),
        BehaviorBody::Table(_) => None,
    }
}

/// Effects of the automaton's initial clause, evaluated against the given
/// valuation (typically the freshly initialized variables).
pub fn initial_effects(
    behavior: &BehaviorDecl,
    valuation: &Valuation,
) -> Result<Vec<(String, Value, Span)>, BehaviorFault> {
    let host = ValuationHost { valuation };
    match &behavior.body {
        BehaviorBody::Automaton(a) => {
            let effects =
                lang_automaton::initial_effects(a, &host).map_err(|e| (e.fault, e.span))?;
            Ok(effects.into_iter().map(|e| (e.target, e.value, e.span)).collect())
        }
        BehaviorBody::Table(_) => Ok(Vec::new()),
    }
}

/// Evaluate a variable's initial expression. Initials are evaluated once
/// at instantiation against an empty valuation; referencing a port or
/// another variable there is a runtime fault surfaced by the simulator.
pub fn eval_initial(initial: &Expr) -> Result<Value, BehaviorFault> {
    eval_expr(initial, &Valuation::new()).map_err(|f| {
        let span = f.span().clone();
        (f, span)
    })
}

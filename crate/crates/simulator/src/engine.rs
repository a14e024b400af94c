//! The tick engine and full runs.

use crate::error::SimError;
use crate::instance::{fault_to_error, Instance, InstanceKind, InstanceTree};
use crate::scenario::Scenario;
use crate::trace::Trace;
use family_maa::expr::{Valuation, Value};
use std::collections::BTreeMap;

/// All mutable runtime state of one simulation.
pub struct SystemState {
    /// Absolute port path -> current value; `None` is ABSENT (never
    /// written). Ports hold their value until rewritten.
    ports: BTreeMap<String, Option<Value>>,
    /// Absolute variable path ("root.timer.remaining") -> value.
    variables: BTreeMap<String, Value>,
    /// Instance path -> current automaton state.
    automaton_states: BTreeMap<String, String>,
}

impl SystemState {
    /// Fresh state: every port ABSENT, variables at their initials, then
    /// each automaton's initial outputs committed (so initial outputs are
    /// visible from tick 0 onward).
    pub fn new(tree: &InstanceTree<'_>) -> Result<Self, SimError> {
        let mut state = SystemState {
            ports: BTreeMap::new(),
            variables: BTreeMap::new(),
            automaton_states: BTreeMap::new(),
        };
        let mut init_error = None;
        tree.root.each(&mut |instance| {
            for p in instance.in_ports.iter().chain(&instance.out_ports) {
                state.ports.insert(format!("{}.{}", instance.path, p.name), None);
            }
            if let InstanceKind::Atomic { behavior, variables, initial_state } = &instance.kind {
                let mut local = Valuation::new();
                for (name, value) in variables {
                    state
                        .variables
                        .insert(format!("{}.{name}", instance.path), value.clone());
                    local.insert(name.clone(), value.clone());
                }
                if let Some(s) = initial_state {
                    state.automaton_states.insert(instance.path.clone(), s.clone());
                }
                // Initial outputs evaluate against the fresh variables.
                match family_maa::initial_effects(behavior, &local) {
                    Ok(effects) => {
                        for (target, value, _) in effects {
                            apply_effect(&mut state, instance, &target, value);
                        }
                    }
                    Err((fault, span)) => {
                        if init_error.is_none() {
                            init_error = Some(fault_to_error(fault, span));
                        }
                    }
                }
            }
        });
        match init_error {
            Some(e) => Err(e),
            None => Ok(state),
        }
    }

    pub fn port(&self, path: &str) -> Option<&Value> {
        self.ports.get(path).and_then(|v| v.as_ref())
    }

    pub fn variable(&self, path: &str) -> Option<&Value> {
        self.variables.get(path)
    }

    pub fn automaton_state(&self, instance_path: &str) -> Option<&str> {
        self.automaton_states.get(instance_path).map(String::as_str)
    }
}

fn apply_effect(state: &mut SystemState, instance: &Instance<'_>, target: &str, value: Value) {
    if instance.out_ports.iter().any(|p| p.name == target) {
        state.ports.insert(format!("{}.{target}", instance.path), Some(value));
    } else {
        state.variables.insert(format!("{}.{target}", instance.path), value);
    }
}

/// One synchronous tick.
///
/// `env` assigns a value to every input port of the main component (the
/// scenario loader guarantees this). `compute_order` optionally permutes
/// the COMPUTE order of atomic instances; the result never depends on it.
pub fn tick(
    tree: &InstanceTree<'_>,
    state: &mut SystemState,
    env: &BTreeMap<String, Value>,
    compute_order: Option<&[usize]>,
) -> Result<(), SimError> {
    // PROPAGATE: environment first, then a simultaneous copy over all
    // connectors from a snapshot of the pre-tick values.
    for (name, value) in env {
        state.ports.insert(format!("root.{name}"), Some(value.clone()));
    }
    let snapshot = state.ports.clone();
    for (source, target) in tree.connectors() {
        let value = snapshot.get(&source).cloned().flatten();
        state.ports.insert(target, value);
    }

    // COMPUTE: every atomic instance reads its inputs and variables and
    // buffers its effects; nothing is visible to the others yet.
    let paths = tree.atomic_paths();
    let order: Vec<usize> = match compute_order {
        Some(o) => o.to_vec(),
        None => (0..paths.len()).collect(),
    };
    let mut buffered: Vec<(&Instance, Vec<(String, Value)>, Option<String>)> = Vec::new();
    for index in order {
        let instance = tree.instance(&paths[index]).expect("atomic path");
        let InstanceKind::Atomic { behavior, .. } = &instance.kind else { unreachable!() };
        let mut valuation = Valuation::new();
        for p in &instance.in_ports {
            if let Some(v) = state.port(&format!("{}.{}", instance.path, p.name)) {
                valuation.insert(p.name.clone(), v.clone());
            }
        }
        for (path, value) in state.variables.range(format!("{}.", instance.path)..) {
            let Some(name) = path.strip_prefix(&format!("{}.", instance.path)) else { break };
            // Only direct variables: nested instance paths contain a dot.
            if !name.contains('.') {
                valuation.insert(name.to_string(), value.clone());
            }
        }
        let current = state.automaton_state(&instance.path).map(str::to_string);
        let step = family_maa::step_behavior(behavior, current.as_deref(), &valuation)
            .map_err(|(fault, span)| fault_to_error(fault, span))?;
        buffered.push((
            instance,
            step.effects.into_iter().map(|(t, v, _)| (t, v)).collect(),
            step.next_state,
        ));
    }

    // COMMIT: apply every buffered effect at once. Instances only write
    // their own ports and variables, so order cannot matter.
    for (instance, effects, next_state) in buffered {
        for (target, value) in effects {
            apply_effect(state, instance, &target, value);
        }
        if let Some(s) = next_state {
            state.automaton_states.insert(instance.path.clone(), s);
        }
    }
    Ok(())
}

pub struct RunOutcome {
    pub trace: Trace,
    pub error: Option<SimError>,
}

/// Run `ticks` ticks of the scenario and record the trace. A simulation
/// error aborts the run; the partial trace is kept with an error marker
/// row appended.
pub fn run(
    tree: &InstanceTree<'_>,
    scenario: &Scenario,
    ticks: usize,
    compute_order: Option<&[usize]>,
) -> RunOutcome {
    let mut trace = Trace::for_tree(tree);
    let mut state = match SystemState::new(tree) {
        Ok(s) => s,
        Err(e) => {
            trace.mark_error(&e);
            return RunOutcome { trace, error: Some(e) };
        }
    };
    for index in 0..ticks {
        let Some(env) = scenario.row(index) else {
            let e = SimError::new(
                crate::codes::SIM0002,
                format!(
                    "scenario has {} rows but {ticks} ticks were requested (pass --repeat-last to extend it)",
                    scenario.rows.len()
                ),
            );
            trace.mark_error(&e);
            return RunOutcome { trace, error: Some(e) };
        };
        if let Err(e) = tick(tree, &mut state, &env, compute_order) {
            trace.mark_error(&e);
            return RunOutcome { trace, error: Some(e) };
        }
        trace.record(index, tree, &state, &env);
    }
    RunOutcome { trace, error: None }
}

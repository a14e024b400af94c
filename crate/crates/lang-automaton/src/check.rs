//! Context conditions. Everything that needs meaning for the embedded
//! expressions — their types, whether a name is assignable — is asked of
//! the host through [`BehaviorContext`]; this module owns only the
//! state-machine shape rules.

use crate::ast::{Assignment, Automaton};
use crate::codes;
use kernel::Diagnostic;
use std::collections::BTreeSet;

/// How the host classifies an assignment target in the component scope.
pub enum TargetInfo {
    /// An output port or a variable; carries its type name.
    Assignable(String),
    /// Exists but may not be written (an input port).
    NotAssignable,
    Unresolved,
    /// Writable, but its type is unknown because of an error the host has
    /// already reported; the assignment is skipped silently.
    Indeterminate,
}

/// Host services for checking behaviors with embedded expressions. Type
/// names are plain strings in the host's vocabulary; `boolean_type` names
/// the guard type.
pub trait BehaviorContext<E> {
    /// Typecheck an embedded expression. `None` means it failed and the
    /// expression language's diagnostics were pushed into `sink`.
    fn typecheck(&self, expr: &E, sink: &mut Vec<Diagnostic>) -> Option<String>;
    fn assign_target(&self, name: &str) -> TargetInfo;
    fn is_literally_true(&self, expr: &E) -> bool;
    fn boolean_type(&self) -> String {
        "boolean".to_string()
    }
}

pub fn check_automaton<E>(a: &Automaton<E>, host: &dyn BehaviorContext<E>) -> Vec<Diagnostic> {
    let mut diags = Vec::new();

    // AUT0001: unique state names.
    let mut declared = BTreeSet::new();
    for s in &a.states {
        if !declared.insert(s.value.as_str()) {
            diags.push(Diagnostic::error(
                codes::AUT0001,
                s.span.clone(),
                format!("state `{}` is declared more than once", s.value),
            ));
        }
    }

    // AUT0003: exactly one initial clause.
    if a.initials.len() != 1 {
        diags.push(Diagnostic::error(
            codes::AUT0003,
            a.initials.get(1).map(|i| i.span.clone()).unwrap_or_else(|| a.span.clone()),
            format!("expected exactly one `initial` clause, found {}", a.initials.len()),
        ));
    }

    // AUT0002: initial states must be declared.
    for init in &a.initials {
        if !declared.contains(init.state.value.as_str()) {
            diags.push(Diagnostic::error(
                codes::AUT0002,
                init.state.span.clone(),
                format!("initial state `{}` is not declared", init.state.value),
            ));
        }
        check_assignments(&init.outputs, host, &mut diags);
    }

    for t in &a.transitions {
        // AUT0004: endpoints must be declared states.
        for end in [&t.source, &t.target] {
            if !declared.contains(end.value.as_str()) {
                diags.push(Diagnostic::error(
                    codes::AUT0004,
                    end.span.clone(),
                    format!("state `{}` is not declared", end.value),
                ));
            }
        }
        // AUT0005: guards must be boolean.
        if let Some(guard) = &t.guard {
            if let Some(ty) = host.typecheck(guard, &mut diags) {
                if ty != host.boolean_type() {
                    diags.push(Diagnostic::error(
                        codes::AUT0005,
                        t.span.clone(),
                        format!("guard must be boolean, found {ty}"),
                    ));
                }
            }
        }
        check_assignments(&t.actions, host, &mut diags);
    }

    // AUT0008: statically detectable overlap — two transitions out of one
    // state whose guards are both absent or both literally true.
    let mut trivially_guarded: BTreeSet<&str> = BTreeSet::new();
    for t in &a.transitions {
        let trivial = match &t.guard {
            None => true,
            Some(g) => host.is_literally_true(g),
        };
        if !trivial {
            continue;
        }
        if !trivially_guarded.insert(t.source.value.as_str()) {
            diags.push(Diagnostic::warning(
                codes::AUT0008,
                t.span.clone(),
                format!(
                    "transition out of `{}` can never fire: an earlier transition from this state always matches",
                    t.source.value
                ),
            ));
        }
    }

    diags
}

fn check_assignments<E>(
    assignments: &[Assignment<E>],
    host: &dyn BehaviorContext<E>,
    diags: &mut Vec<Diagnostic>,
) {
    for a in assignments {
        match host.assign_target(&a.target.value) {
            TargetInfo::Assignable(target_ty) => {
                if let Some(value_ty) = host.typecheck(&a.value, diags) {
                    if value_ty != target_ty {
                        diags.push(Diagnostic::error(
                            codes::AUT0007,
                            a.span.clone(),
                            format!(
                                "`{}` has type {target_ty}, but the assigned value has type {value_ty}",
                                a.target.value
                            ),
                        ));
                    }
                }
            }
            TargetInfo::NotAssignable => diags.push(Diagnostic::error(
                codes::AUT0006,
                a.target.span.clone(),
                format!("`{}` is not assignable; targets must be output ports or variables", a.target.value),
            )),
            TargetInfo::Unresolved => diags.push(Diagnostic::error(
                codes::AUT0006,
                a.target.span.clone(),
                format!("assignment target `{}` does not resolve to an output port or variable", a.target.value),
            )),
            TargetInfo::Indeterminate => {}
        }
    }
}

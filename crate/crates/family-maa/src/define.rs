//! DEFINE workflow for `.maa` units: the architecture symbols, plus
//! internal variable entries and an automaton scope with internal state
//! entries. The exported surface of a component stays exactly its ports.

use crate::codes;
use crate::elements::{behaviors_of, variables_of, BehaviorBody};
use crate::register::{STATE, VARIABLE};
use kernel::{Diagnostic, ModelUnit, Origin, ScopeId, SymbolEntry, Visibility};
use lang_arc::ComponentType;

pub fn define_maa_symbols(unit: &mut ModelUnit) -> Vec<Diagnostic> {
    let (mut diags, body) = lang_arc::define_component_symbols(unit);
    let Some(body) = body else { return diags };
    let unit_name = unit.qualified_name.clone();
    let origin = |span: &kernel::Span| Origin { unit: unit_name.clone(), span: span.clone() };

    struct PlannedVar {
        entry: SymbolEntry,
        span: kernel::Span,
        name: String,
    }
    let mut planned_vars = Vec::new();
    let mut planned_states: Vec<SymbolEntry> = Vec::new();
    {
        let Some(component) = unit.ast_as::<ComponentType>() else { return diags };
        for v in variables_of(component) {
            planned_vars.push(PlannedVar {
                entry: SymbolEntry::new(&v.name.value, VARIABLE, Visibility::Internal, origin(&v.name.span))
                    .with_attr("type", v.type_name.value.clone()),
                span: v.name.span.clone(),
                name: v.name.value.clone(),
            });
        }
        for b in behaviors_of(component) {
            if let BehaviorBody::Automaton(a) = &b.body {
                for s in &a.states {
                    planned_states.push(SymbolEntry::new(
                        &s.value,
                        STATE,
                        Visibility::Internal,
                        origin(&s.span),
                    ));
                }
            }
        }
    }

    for v in planned_vars {
        if unit.scopes.insert(body, v.entry).is_err() {
            diags.push(Diagnostic::error(
                codes::MAA0102,
                v.span,
                format!("variable `{}` is declared more than once", v.name),
            ));
        }
    }
    if !planned_states.is_empty() {
        let behavior_scope = unit.scopes.new_scope(body, None);
        for s in planned_states {
            // Duplicate states are reported as AUT0001 during CHECK.
            let _ = unit.scopes.insert(behavior_scope, s);
        }
    }
    diags
}

/// The scope expressions resolve from: the automaton scope when one
/// exists, else the component body scope.
pub fn expression_scope(unit: &ModelUnit) -> Option<ScopeId> {
    let body = component_body_scope(unit)?;
    let nested = unit.scopes.iter().find(|(_, s)| s.parent == Some(body)).map(|(id, _)| id);
    Some(nested.unwrap_or(body))
}

pub fn component_body_scope(unit: &ModelUnit) -> Option<ScopeId> {
    let component = unit.ast_as::<ComponentType>()?;
    let entry = unit.scopes.lookup(
        kernel::ROOT_SCOPE,
        &component.name.value,
        lang_arc::COMPONENT,
    )?;
    unit.scopes.scope_owned_by(entry.id())
}

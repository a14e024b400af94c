//! DEFINE workflow: one exported component entry per definition; its body
//! scope holds exported port entries (the interface) and internal
//! subcomponent entries (the structure other models must not see).
//!
//! Entry payload contract:
//!   Port:         "direction" = "in" | "out",  "type" = type name
//!   Subcomponent: "type" = referenced component type name

use crate::ast::ComponentType;
use crate::codes;
use kernel::{Diagnostic, EntryKind, ModelUnit, Origin, ScopeId, SymbolEntry, Visibility, ROOT_SCOPE};

pub const COMPONENT: EntryKind = EntryKind("Component");
pub const PORT: EntryKind = EntryKind("Port");
pub const SUBCOMPONENT: EntryKind = EntryKind("Subcomponent");
/// The kind port type references resolve to; populated only through
/// adaptation from type-defining languages.
pub const ARCD_TYPE: EntryKind = EntryKind("ArcdType");

pub fn define_arc_symbols(unit: &mut ModelUnit) -> Vec<Diagnostic> {
    let (diags, _) = define_component_symbols(unit);
    diags
}

/// Shared with inheriting languages, which add their own entries to the
/// returned component body scope.
pub fn define_component_symbols(unit: &mut ModelUnit) -> (Vec<Diagnostic>, Option<ScopeId>) {
    let mut diags = Vec::new();
    let Some(component) = unit.ast_as::<ComponentType>() else {
        return (diags, None);
    };
    let unit_name = unit.qualified_name.clone();
    let origin = |span: &kernel::Span| Origin { unit: unit_name.clone(), span: span.clone() };
    let comp_name = component.name.value.clone();
    let comp_span = component.name.span.clone();

    let comp_entry = SymbolEntry::new(&comp_name, COMPONENT, Visibility::Exported, origin(&comp_span));
    let mut ports = Vec::new();
    for p in &component.ports {
        ports.push((
            SymbolEntry::new(&p.name.value, PORT, Visibility::Exported, origin(&p.name.span))
                .with_attr("direction", p.direction.keyword())
                .with_attr("type", p.type_name.value.clone()),
            p.name.span.clone(),
            p.name.value.clone(),
        ));
    }
    let mut subs = Vec::new();
    for s in &component.subcomponents {
        subs.push((
            SymbolEntry::new(&s.name.value, SUBCOMPONENT, Visibility::Internal, origin(&s.name.span))
                .with_attr("type", s.component_type.value.clone()),
            s.name.span.clone(),
            s.name.value.clone(),
        ));
    }

    let owner = match unit.scopes.insert(ROOT_SCOPE, comp_entry) {
        Ok(e) => e,
        Err(_) => {
            diags.push(Diagnostic::error(
                codes::ARC0001,
                comp_span,
                format!("component `{}` is defined more than once", comp_name),
            ));
            return (diags, None);
        }
    };
    let body = unit.scopes.new_scope(ROOT_SCOPE, Some(owner));
    for (entry, span, name) in ports {
        if unit.scopes.insert(body, entry).is_err() {
            diags.push(Diagnostic::error(
                codes::ARC0001,
                span,
                format!("duplicate port name `{name}`"),
            ));
        }
    }
    for (entry, span, name) in subs {
        if unit.scopes.insert(body, entry).is_err() {
            diags.push(Diagnostic::error(
                codes::ARC0002,
                span,
                format!("duplicate subcomponent name `{name}`"),
            ));
        }
    }
    (diags, Some(body))
}

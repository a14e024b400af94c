//! CHECK workflow: port types resolve, subcomponent types resolve, and
//! connectors are well-formed under the direction rules.
//!
//! Connector endpoint *type compatibility* is deliberately not checked
//! here: port types are opaque resolvable names to this module, and types
//! may originate in aggregated languages this module knows nothing about.
//! A family-level check owns that rule.

use crate::ast::{is_primitive, ComponentType, Connector, Direction, Endpoint};
use crate::codes;
use crate::symbols::{ARCD_TYPE, COMPONENT, PORT};
use kernel::{Diagnostic, ModelUnit, Resolution, SymbolEntry, Workbench, ROOT_SCOPE};
use std::collections::BTreeSet;
use std::sync::Arc;

/// A resolved port or variable type: either a built-in primitive or a
/// type entry (usually adapted from another language). Entry identity is
/// the type identity; primitives compare by name.
#[derive(Debug, Clone)]
pub enum TypeRef {
    Primitive(String),
    Entry(Arc<SymbolEntry>),
}

impl PartialEq for TypeRef {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (TypeRef::Primitive(a), TypeRef::Primitive(b)) => a == b,
            (TypeRef::Entry(a), TypeRef::Entry(b)) => a.id() == b.id(),
            _ => false,
        }
    }
}

impl TypeRef {
    /// Fully qualified display name ("int", "demo.Types.MotorCmd").
    pub fn qualified_name(&self) -> String {
        match self {
            TypeRef::Primitive(p) => p.clone(),
            TypeRef::Entry(e) => {
                let def = e.definition();
                format!("{}.{}", def.origin.unit, def.name)
            }
        }
    }
}

/// Resolve a type name as seen from `unit`. Primitives never touch the
/// symbol table.
pub fn resolve_type(type_name: &str, unit: &str, ctx: &Workbench) -> Result<TypeRef, Resolution> {
    if is_primitive(type_name) {
        return Ok(TypeRef::Primitive(type_name.to_string()));
    }
    match ctx.resolve(type_name, ARCD_TYPE, unit, ROOT_SCOPE) {
        Resolution::Found(e) => Ok(TypeRef::Entry(e)),
        other => Err(other),
    }
}

/// What a connector endpoint denotes after resolution.
pub struct EndpointInfo {
    /// None for a port of the enclosing component.
    pub subcomponent: Option<String>,
    pub direction: Direction,
    pub type_name: String,
    /// Unit the port is defined in; its scope is where the type resolves.
    pub defining_unit: String,
}

pub enum EndpointFault {
    /// Port or subcomponent does not exist (-> ARC0005 at the caller).
    Dangling,
    /// The subcomponent's type did not resolve; already reported as
    /// ARC0004, so the endpoint produces no further diagnostics.
    TypeUnresolved,
}

pub fn endpoint_info(
    component: &ComponentType,
    endpoint: &Endpoint,
    unit: &ModelUnit,
    ctx: &Workbench,
) -> Result<EndpointInfo, EndpointFault> {
    match &endpoint.subcomponent {
        None => {
            let port = component.port(&endpoint.port).ok_or(EndpointFault::Dangling)?;
            Ok(EndpointInfo {
                subcomponent: None,
                direction: port.direction,
                type_name: port.type_name.value.clone(),
                defining_unit: unit.qualified_name.clone(),
            })
        }
        Some(sub_name) => {
            let sub = component.subcomponent(sub_name).ok_or(EndpointFault::Dangling)?;
            let comp_entry = match ctx.resolve(
                &sub.component_type.value,
                COMPONENT,
                &unit.qualified_name,
                ROOT_SCOPE,
            ) {
                Resolution::Found(e) => e,
                _ => return Err(EndpointFault::TypeUnresolved),
            };
            let port_entry =
                match ctx.resolve_member(&comp_entry, &endpoint.port, PORT, &unit.qualified_name) {
                    Resolution::Found(e) => e,
                    _ => return Err(EndpointFault::Dangling),
                };
            let direction = match port_entry.attr("direction") {
                Some("in") => Direction::In,
                _ => Direction::Out,
            };
            Ok(EndpointInfo {
                subcomponent: Some(sub_name.clone()),
                direction,
                type_name: port_entry.attr("type").unwrap_or_default().to_string(),
                defining_unit: comp_entry.definition().origin.unit.clone(),
            })
        }
    }
}

/// Is the endpoint a legal data *source*: an input of the enclosing
/// component or an output of a subcomponent?
pub fn valid_source(info: &EndpointInfo) -> bool {
    match info.subcomponent {
        None => info.direction == Direction::In,
        Some(_) => info.direction == Direction::Out,
    }
}

/// Is the endpoint a legal data *target*: an output of the enclosing
/// component or an input of a subcomponent?
pub fn valid_target(info: &EndpointInfo) -> bool {
    match info.subcomponent {
        None => info.direction == Direction::Out,
        Some(_) => info.direction == Direction::In,
    }
}

pub fn check_arc(unit: &ModelUnit, ctx: &Workbench) -> Vec<Diagnostic> {
    let mut diags = Vec::new();
    let Some(component) = unit.ast_as::<ComponentType>() else {
        return diags;
    };

    // ARC0003: port types must resolve (possibly via adaptation).
    for port in &component.ports {
        if resolve_type(&port.type_name.value, &unit.qualified_name, ctx).is_err() {
            diags.push(Diagnostic::error(
                codes::ARC0003,
                port.type_name.span.clone(),
                format!("port type `{}` does not resolve to a type", port.type_name.value),
            ));
        }
    }

    // ARC0004: subcomponent types must resolve to exported components.
    for sub in &component.subcomponents {
        let hit = ctx.resolve(&sub.component_type.value, COMPONENT, &unit.qualified_name, ROOT_SCOPE);
        if !matches!(hit, Resolution::Found(_)) {
            diags.push(Diagnostic::error(
                codes::ARC0004,
                sub.component_type.span.clone(),
                format!("subcomponent type `{}` does not resolve to a component", sub.component_type.value),
            ));
        }
    }

    // ARC0005/ARC0006: endpoints exist and respect the direction rules.
    for conn in &component.connectors {
        check_connector(component, conn, unit, ctx, &mut diags);
    }

    // ARC0007: at most one incoming connector per target endpoint.
    let mut seen_targets = BTreeSet::new();
    for conn in &component.connectors {
        let key = conn.target.to_string();
        if !seen_targets.insert(key.clone()) {
            diags.push(Diagnostic::error(
                codes::ARC0007,
                conn.span.clone(),
                format!("`{key}` already has an incoming connector"),
            ));
        }
    }

    // ARC0008: no instantiation cycles through component types.
    if let Some(cycle) = find_cycle(unit, ctx) {
        diags.push(Diagnostic::error(
            codes::ARC0008,
            component.name.span.clone(),
            format!("component instantiation cycle: {}", cycle.join(" -> ")),
        ));
    }

    // ARC0009: warn about unconnected subcomponent inputs.
    let connected: BTreeSet<String> =
        component.connectors.iter().map(|c| c.target.to_string()).collect();
    for sub in &component.subcomponents {
        let Resolution::Found(comp_entry) =
            ctx.resolve(&sub.component_type.value, COMPONENT, &unit.qualified_name, ROOT_SCOPE)
        else {
            continue;
        };
        let def = comp_entry.definition();
        let Some(sub_unit) = ctx.unit(&def.origin.unit) else { continue };
        let Some(sub_ast) = sub_unit.ast_as::<ComponentType>() else { continue };
        for port in sub_ast.ports.iter().filter(|p| p.direction == Direction::In) {
            let endpoint = format!("{}.{}", sub.name.value, port.name.value);
            if !connected.contains(&endpoint) {
                diags.push(Diagnostic::warning(
                    codes::ARC0009,
                    sub.name.span.clone(),
                    format!("input `{endpoint}` is not connected"),
                ));
            }
        }
    }

    diags
}

fn check_connector(
    component: &ComponentType,
    conn: &Connector,
    unit: &ModelUnit,
    ctx: &Workbench,
    diags: &mut Vec<Diagnostic>,
) {
    let source = endpoint_info(component, &conn.source, unit, ctx);
    let target = endpoint_info(component, &conn.target, unit, ctx);
    let mut dangling = false;
    for (res, ep) in [(&source, &conn.source), (&target, &conn.target)] {
        if matches!(res, Err(EndpointFault::Dangling)) {
            diags.push(Diagnostic::error(
                codes::ARC0005,
                ep.span.clone(),
                format!("connector endpoint `{ep}` does not exist"),
            ));
            dangling = true;
        }
    }
    if dangling {
        return;
    }
    let (Ok(source), Ok(target)) = (source, target) else {
        return; // subcomponent type unresolved, reported as ARC0004
    };
    if !valid_source(&source) || !valid_target(&target) {
        diags.push(Diagnostic::error(
            codes::ARC0006,
            conn.span.clone(),
            format!(
                "connector `{} -> {}` violates the direction rules: sources are inputs of the component or outputs of subcomponents, targets the reverse",
                conn.source, conn.target
            ),
        ));
    }
}

/// Depth-first search for a cycle through subcomponent type references
/// that passes through this unit's component.
fn find_cycle(unit: &ModelUnit, ctx: &Workbench) -> Option<Vec<String>> {
    let start = &unit.qualified_name;
    let mut stack = vec![(start.clone(), vec![start.clone()])];
    while let Some((current, path)) = stack.pop() {
        let Some(u) = ctx.unit(&current) else { continue };
        let Some(ast) = u.ast_as::<ComponentType>() else { continue };
        for sub in &ast.subcomponents {
            let Resolution::Found(e) =
                ctx.resolve(&sub.component_type.value, COMPONENT, &current, ROOT_SCOPE)
            else {
                continue;
            };
            let next = e.definition().origin.unit.clone();
            if next == *start {
                let mut cycle = path;
                cycle.push(next);
                return Some(cycle);
            }
            if !path.contains(&next) {
                let mut p = path.clone();
                p.push(next.clone());
                stack.push((next, p));
            }
        }
    }
    None
}

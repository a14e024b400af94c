//! Component instantiation: expand the subcomponent tree of the main
//! component into concrete instances with absolute port paths.

use crate::codes;
use crate::error::SimError;
use family_maa::expr::{EvalFault, Value};
use family_maa::{arc, BehaviorDecl};
use kernel::{Span, Workbench};

/// A port's runtime type, as needed for scenario parsing and validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValueType {
    Bool,
    Int,
    Str,
    /// Enum with its simple type name and constants.
    Enum { type_name: String, constants: Vec<String> },
    /// Resolvable but not representable in scenarios (e.g. classes,
    /// doubles); values of this type can only flow between components.
    Opaque(String),
}

#[derive(Debug, Clone)]
pub struct PortDesc {
    pub name: String,
    pub value_type: ValueType,
}

pub struct Instance<'a> {
    /// Dotted instance path; the main instance is `root`.
    pub path: String,
    /// Qualified name of the component type's unit.
    pub type_name: String,
    pub in_ports: Vec<PortDesc>,
    pub out_ports: Vec<PortDesc>,
    pub kind: InstanceKind<'a>,
}

pub enum InstanceKind<'a> {
    Atomic {
        behavior: &'a BehaviorDecl,
        /// Variables with their evaluated initial values.
        variables: Vec<(String, Value)>,
        /// Starting state for automaton behaviors.
        initial_state: Option<String>,
    },
    Decomposed {
        children: Vec<Instance<'a>>,
        /// Connectors as absolute (source path, target path) port pairs.
        connectors: Vec<(String, String)>,
    },
}

pub struct InstanceTree<'a> {
    pub root: Instance<'a>,
}

impl<'a> Instance<'a> {
    pub fn each<'s>(&'s self, f: &mut dyn FnMut(&'s Instance<'a>)) {
        f(self);
        if let InstanceKind::Decomposed { children, .. } = &self.kind {
            for c in children {
                c.each(f);
            }
        }
    }
}

impl<'a> InstanceTree<'a> {
    /// Paths of atomic instances, in deterministic (path) order.
    pub fn atomic_paths(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.root.each(&mut |i| {
            if matches!(i.kind, InstanceKind::Atomic { .. }) {
                out.push(i.path.clone());
            }
        });
        out.sort();
        out
    }

    pub fn instance(&self, path: &str) -> Option<&Instance<'a>> {
        let mut found = None;
        self.root.each(&mut |i| {
            if i.path == path {
                found = Some(i);
            }
        });
        found
    }

    /// All connectors in the tree as absolute port-path pairs.
    pub fn connectors(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        self.root.each(&mut |i| {
            if let InstanceKind::Decomposed { connectors, .. } = &i.kind {
                out.extend(connectors.iter().cloned());
            }
        });
        out.sort();
        out
    }
}

/// Instantiate `main` recursively. Requires a model registry that passed
/// CHECK with zero errors; atomic instances without behavior are the one
/// condition only simulation can detect (SIM0001).
pub fn instantiate<'a>(ctx: &'a Workbench, main: &str) -> Result<InstanceTree<'a>, SimError> {
    let root = build(ctx, main, "root")?;
    Ok(InstanceTree { root })
}

fn build<'a>(ctx: &'a Workbench, type_name: &str, path: &str) -> Result<Instance<'a>, SimError> {
    let view = family_maa::component_view(ctx, type_name).ok_or_else(|| {
        SimError::new(codes::SIM0001, format!("`{type_name}` is not a component"))
    })?;
    let mut in_ports = Vec::new();
    let mut out_ports = Vec::new();
    for p in &view.component.ports {
        let desc = PortDesc {
            name: p.name.value.clone(),
            value_type: port_value_type(ctx, type_name, &p.type_name.value),
        };
        match p.direction {
            arc::Direction::In => in_ports.push(desc),
            arc::Direction::Out => out_ports.push(desc),
        }
    }

    if view.is_decomposed() {
        let mut children = Vec::new();
        for sub in &view.component.subcomponents {
            let sub_type = family_maa::subcomponent_type_unit(ctx, type_name, &sub.component_type.value)
                .ok_or_else(|| {
                    SimError::new(
                        codes::SIM0001,
                        format!("subcomponent type `{}` does not resolve", sub.component_type.value),
                    )
                })?;
            children.push(build(ctx, &sub_type, &format!("{path}.{}", sub.name.value))?);
        }
        let connectors = view
            .component
            .connectors
            .iter()
            .map(|c| (endpoint_path(path, &c.source), endpoint_path(path, &c.target)))
            .collect();
        return Ok(Instance {
            path: path.to_string(),
            type_name: type_name.to_string(),
            in_ports,
            out_ports,
            kind: InstanceKind::Decomposed { children, connectors },
        });
    }

    let Some(behavior) = view.behavior else {
        return Err(SimError::at(
            codes::SIM0001,
            view.component.name.span.clone(),
            format!("atomic instance `{path}` of `{type_name}` has no behavior to execute"),
        ));
    };
    let mut variables = Vec::new();
    for v in &view.variables {
        let value = family_maa::eval_initial(&v.initial)
            .map_err(|(fault, span)| fault_to_error(fault, span))?;
        variables.push((v.name.value.clone(), value));
    }
    Ok(Instance {
        path: path.to_string(),
        type_name: type_name.to_string(),
        in_ports,
        out_ports,
        kind: InstanceKind::Atomic {
            behavior,
            variables,
            initial_state: family_maa::initial_state(behavior),
        },
    })
}

fn endpoint_path(instance_path: &str, e: &arc::Endpoint) -> String {
    match &e.subcomponent {
        Some(sub) => format!("{instance_path}.{sub}.{}", e.port),
        None => format!("{instance_path}.{}", e.port),
    }
}

fn port_value_type(ctx: &Workbench, unit: &str, declared: &str) -> ValueType {
    match declared {
        "boolean" => ValueType::Bool,
        "int" => ValueType::Int,
        "String" => ValueType::Str,
        _ => match family_maa::resolved_type(ctx, unit, declared) {
            Some(t) => match family_maa::enum_constants(&t) {
                Some(constants) => {
                    ValueType::Enum { type_name: declared.to_string(), constants }
                }
                None => ValueType::Opaque(declared.to_string()),
            },
            None => ValueType::Opaque(declared.to_string()),
        },
    }
}

pub(crate) fn fault_to_error(fault: EvalFault, span: Span) -> SimError {
    match fault {
        EvalFault::DivisionByZero { span: at } => {
            SimError::at(codes::SIM0005, at, "division by zero")
        }
        EvalFault::MissingName { name, span: at } => SimError::at(
            codes::SIM0004,
            at,
            format!("`{name}` has no value here (absent input or unwritten port)"),
        ),
        EvalFault::FieldAccess { span: at } => {
            let _ = span;
            SimError::at(codes::SIM0004, at, "field access has no runtime value")
        }
    }
}

//! Read-side views over checked models, the API simulators and emitters
//! consume. Downstream tools depend on this family, never on the
//! individual language modules.

use crate::elements::{behaviors_of, variables_of, BehaviorBody, BehaviorDecl, VariableDecl};
use kernel::Workbench;
use lang_arc::{ComponentType, TypeRef};

pub struct ComponentView<'a> {
    pub qualified_name: String,
    pub component: &'a ComponentType,
    pub variables: Vec<&'a VariableDecl>,
    pub behavior: Option<&'a BehaviorDecl>,
}

impl<'a> ComponentView<'a> {
    pub fn is_decomposed(&self) -> bool {
        self.component.is_decomposed()
    }

    pub fn automaton(&self) -> Option<&'a lang_automaton::Automaton<lang_expr::Expr>> {
        match self.behavior.map(|b| &b.body) {
            Some(BehaviorBody::Automaton(a)) => Some(a),
            _ => None,
        }
    }

    pub fn table(&self) -> Option<&'a lang_iotable::IoTable<lang_expr::Expr>> {
        match self.behavior.map(|b| &b.body) {
            Some(BehaviorBody::Table(t)) => Some(t),
            _ => None,
        }
    }
}

/// View of the component defined by the unit with this qualified name
/// (every architecture artifact defines exactly one component, named like
/// the unit).
pub fn component_view<'a>(ctx: &'a Workbench, qualified_name: &str) -> Option<ComponentView<'a>> {
    let unit = ctx.unit(qualified_name)?;
    let component = unit.ast_as::<ComponentType>()?;
    Some(ComponentView {
        qualified_name: unit.qualified_name.clone(),
        component,
        variables: variables_of(component),
        behavior: behaviors_of(component).into_iter().next(),
    })
}

/// Qualified names of all units whose artifact is a component.
pub fn component_names(ctx: &Workbench) -> Vec<String> {
    ctx.units()
        .filter(|u| u.ast.as_ref().is_some_and(|a| a.as_any().is::<ComponentType>()))
        .map(|u| u.qualified_name.clone())
        .collect()
}

/// Resolve the component type a subcomponent instance refers to, as its
/// defining unit's qualified name.
pub fn subcomponent_type_unit(
    ctx: &Workbench,
    from_unit: &str,
    type_name: &str,
) -> Option<String> {
    match ctx.resolve(type_name, lang_arc::COMPONENT, from_unit, kernel::ROOT_SCOPE) {
        kernel::Resolution::Found(e) => Some(e.definition().origin.unit.clone()),
        _ => None,
    }
}

/// Resolve a port or variable's declared type as seen from its unit.
pub fn resolved_type(ctx: &Workbench, unit: &str, type_name: &str) -> Option<TypeRef> {
    lang_arc::resolve_type(type_name, unit, ctx).ok()
}

/// The constants of an enum type, when the type is an (adapted) enum.
pub fn enum_constants(type_ref: &TypeRef) -> Option<Vec<String>> {
    match type_ref {
        TypeRef::Primitive(_) => None,
        TypeRef::Entry(e) => {
            if e.attr("type-kind") != Some("enum") {
                return None;
            }
            Some(
                e.attr("constants")
                    .unwrap_or_default()
                    .split(',')
                    .filter(|c| !c.is_empty())
                    .map(str::to_string)
                    .collect(),
            )
        }
    }
}

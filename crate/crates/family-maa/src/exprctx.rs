//! The family's implementation of the expression language's host
//! contract: names resolve through the framework with the `ExprName`
//! kind (ports and variables arrive by adaptation), qualified constants
//! with the type language's constant kind, and field information comes
//! from type entry payloads.

use crate::register::EXPR_NAME;
use kernel::{Resolution, ScopeId, Workbench};
use lang_arc::TypeRef;
use lang_cd::{CD_ENUM_CONSTANT, CD_TYPE};
use lang_expr::{ConstantLookup, ExprContext, ExprType, FieldLookup, NameLookup};
use std::cell::Cell;

/// Maps a declared type name (as written on a port or variable) to the
/// expression type vocabulary, qualifying named types by their defining
/// unit for sound nominal comparison.
pub fn declared_type_to_expr_type(
    type_name: &str,
    unit: &str,
    ctx: &Workbench,
) -> Option<ExprType> {
    match type_name {
        "int" => Some(ExprType::Int),
        "boolean" => Some(ExprType::Bool),
        "String" => Some(ExprType::Str),
        "double" => Some(ExprType::Named("double".to_string())),
        _ => match lang_arc::resolve_type(type_name, unit, ctx) {
            Ok(t) => Some(ExprType::Named(t.qualified_name())),
            Err(_) => None,
        },
    }
}

pub fn type_ref_to_expr_type(t: &TypeRef) -> ExprType {
    match t {
        TypeRef::Primitive(p) => match p.as_str() {
            "int" => ExprType::Int,
            "boolean" => ExprType::Bool,
            "String" => ExprType::Str,
            other => ExprType::Named(other.to_string()),
        },
        TypeRef::Entry(_) => ExprType::Named(t.qualified_name()),
    }
}

/// Expression host bound to one scope of one unit.
pub struct ScopeExprContext<'a> {
    pub ctx: &'a Workbench,
    pub unit: &'a str,
    pub scope: ScopeId,
    /// Set when a referenced name exists but its declared type did not
    /// resolve. That failure is already reported (ARC0003/MAA0103), so
    /// expression diagnostics for this expression are suppressed.
    poisoned: Cell<bool>,
}

impl<'a> ScopeExprContext<'a> {
    pub fn new(ctx: &'a Workbench, unit: &'a str, scope: ScopeId) -> Self {
        ScopeExprContext { ctx, unit, scope, poisoned: Cell::new(false) }
    }

    pub fn take_poisoned(&self) -> bool {
        self.poisoned.replace(false)
    }
}

impl ExprContext for ScopeExprContext<'_> {
    fn name_type(&self, name: &str) -> NameLookup {
        match self.ctx.resolve(name, EXPR_NAME, self.unit, self.scope) {
            Resolution::Found(entry) => {
                let declared = entry.attr("type").unwrap_or_default();
                match declared_type_to_expr_type(declared, self.unit, self.ctx) {
                    Some(t) => NameLookup::Type(t),
                    None => {
                        self.poisoned.set(true);
                        NameLookup::Type(ExprType::Named(format!("<unresolved {declared}>")))
                    }
                }
            }
            Resolution::NotFound => NameLookup::NotFound,
            Resolution::Ambiguous(_) => NameLookup::Ambiguous,
        }
    }

    fn constant_type(&self, enum_name: &str, constant: &str) -> ConstantLookup {
        let qualified = format!("{enum_name}.{constant}");
        match self.ctx.resolve(&qualified, CD_ENUM_CONSTANT, self.unit, self.scope) {
            Resolution::Found(entry) => {
                let def = entry.definition();
                ConstantLookup::Found(ExprType::Named(format!("{}.{enum_name}", def.origin.unit)))
            }
            Resolution::NotFound => ConstantLookup::NotFound,
            Resolution::Ambiguous(_) => ConstantLookup::Ambiguous,
        }
    }

    fn field_type(&self, type_name: &str, field: &str) -> FieldLookup {
        // `type_name` is a qualified name produced above: unit.TypeName.
        let Some((unit_name, simple)) = type_name.rsplit_once('.') else {
            return FieldLookup::NotAClass;
        };
        let Some(unit) = self.ctx.unit(unit_name) else {
            return FieldLookup::NotAClass;
        };
        let Some(entry) = unit.scopes.lookup(kernel::ROOT_SCOPE, simple, CD_TYPE) else {
            return FieldLookup::NotAClass;
        };
        if entry.attr("type-kind") != Some("class") {
            return FieldLookup::NotAClass;
        }
        let fields = entry.attr("fields").unwrap_or_default();
        for pair in fields.split(',').filter(|p| !p.is_empty()) {
            let Some((name, ty)) = pair.split_once(':') else { continue };
            if name == field {
                // Field types resolve in the scope of the defining diagram.
                return match declared_type_to_expr_type(ty, unit_name, self.ctx) {
                    Some(t) => FieldLookup::Field(t),
                    None => FieldLookup::UnknownField,
                };
            }
        }
        FieldLookup::UnknownField
    }
}

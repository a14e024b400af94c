//! DEFINE workflow: type entries for classes and enums, constant entries
//! per enum constant, field entries inside each class's scope.
//!
//! Entry payload contract (read by aggregating languages through entries,
//! never through this crate):
//!   CDType:         "type-kind" = "class" | "enum"
//!                   "fields"    = "name:Type,..."   (classes)
//!                   "constants" = "A,B,..."          (enums)
//!   CDEnumConstant: "enum" = enum type name
//!   CDField:        "type" = field type name

use crate::ast::{CdElement, CdModel};
use crate::codes;
use kernel::{Diagnostic, EntryKind, ModelUnit, Origin, SymbolEntry, Visibility, ROOT_SCOPE};

pub const CD_TYPE: EntryKind = EntryKind("CDType");
pub const CD_ENUM_CONSTANT: EntryKind = EntryKind("CDEnumConstant");
pub const CD_FIELD: EntryKind = EntryKind("CDField");

pub fn define_cd_symbols(unit: &mut ModelUnit) -> Vec<Diagnostic> {
    let mut diags = Vec::new();
    let Some(model) = unit.ast_as::<CdModel>() else {
        return diags;
    };
    let unit_name = unit.qualified_name.clone();
    let origin = |span: &kernel::Span| Origin { unit: unit_name.clone(), span: span.clone() };

    // Collect the entries first; the AST borrow must end before scopes
    // are extended.
    enum Planned {
        Type { entry: SymbolEntry, members: Vec<SymbolEntry>, span: kernel::Span },
        Constant(SymbolEntry),
    }
    let mut planned = Vec::new();
    for el in &model.elements {
        match el {
            CdElement::Class(c) => {
                let fields: Vec<String> =
                    c.fields.iter().map(|f| format!("{}:{}", f.name.value, f.type_name.value)).collect();
                let entry = SymbolEntry::new(&c.name.value, CD_TYPE, Visibility::Exported, origin(&c.name.span))
                    .with_attr("type-kind", "class")
                    .with_attr("fields", fields.join(","));
                let mut members = Vec::new();
                for f in &c.fields {
                    members.push(
                        SymbolEntry::new(&f.name.value, CD_FIELD, Visibility::Internal, origin(&f.name.span))
                            .with_attr("type", f.type_name.value.clone()),
                    );
                }
                planned.push(Planned::Type { entry, members, span: c.name.span.clone() });
            }
            CdElement::Enum(e) => {
                let consts: Vec<&str> = e.constants.iter().map(|c| c.value.as_str()).collect();
                let entry = SymbolEntry::new(&e.name.value, CD_TYPE, Visibility::Exported, origin(&e.name.span))
                    .with_attr("type-kind", "enum")
                    .with_attr("constants", consts.join(","));
                planned.push(Planned::Type { entry, members: Vec::new(), span: e.name.span.clone() });
                for c in &e.constants {
                    planned.push(Planned::Constant(
                        SymbolEntry::new(
                            format!("{}.{}", e.name.value, c.value),
                            CD_ENUM_CONSTANT,
                            Visibility::Exported,
                            origin(&c.span),
                        )
                        .with_attr("enum", e.name.value.clone()),
                    ));
                }
            }
        }
    }

    for p in planned {
        match p {
            Planned::Type { entry, members, span } => {
                let name = entry.name.clone();
                match unit.scopes.insert(ROOT_SCOPE, entry) {
                    Ok(owner) => {
                        if !members.is_empty() {
                            let body = unit.scopes.new_scope(ROOT_SCOPE, Some(owner));
                            for m in members {
                                // Duplicate fields are reported as CD0003
                                // during CHECK; keep the first definition.
                                let _ = unit.scopes.insert(body, m);
                            }
                        }
                    }
                    Err(_) => diags.push(Diagnostic::error(
                        codes::CD0001,
                        span,
                        format!("`{name}` is defined more than once in this diagram"),
                    )),
                }
            }
            Planned::Constant(entry) => {
                // Its enum already reported CD0001/CD0004 when duplicated.
                let _ = unit.scopes.insert(ROOT_SCOPE, entry);
            }
        }
    }
    diags
}

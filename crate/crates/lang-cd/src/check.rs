//! CHECK workflow: field types must be known, field and constant names
//! unique.

use crate::ast::{is_primitive, CdElement, CdModel};
use crate::codes;
use crate::symbols::CD_TYPE;
use kernel::{Diagnostic, ModelUnit, Resolution, Workbench, ROOT_SCOPE};
use std::collections::BTreeSet;

pub fn check_cd(unit: &ModelUnit, ctx: &Workbench) -> Vec<Diagnostic> {
    let mut diags = Vec::new();
    let Some(model) = unit.ast_as::<CdModel>() else {
        return diags;
    };
    for el in &model.elements {
        match el {
            CdElement::Class(c) => {
                let mut seen = BTreeSet::new();
                for f in &c.fields {
                    if !seen.insert(f.name.value.as_str()) {
                        diags.push(Diagnostic::error(
                            codes::CD0003,
                            f.name.span.clone(),
                            format!("duplicate field `{}` in class `{}`", f.name.value, c.name.value),
                        ));
                    }
                    let ty = &f.type_name.value;
                    if !is_primitive(ty) {
                        let hit = ctx.resolve(ty, CD_TYPE, &unit.qualified_name, ROOT_SCOPE);
                        if !matches!(hit, Resolution::Found(_)) {
                            diags.push(Diagnostic::error(
                                codes::CD0002,
                                f.type_name.span.clone(),
                                format!("unknown field type `{ty}`"),
                            ));
                        }
                    }
                }
            }
            CdElement::Enum(e) => {
                let mut seen = BTreeSet::new();
                for c in &e.constants {
                    if !seen.insert(c.value.as_str()) {
                        diags.push(Diagnostic::error(
                            codes::CD0004,
                            c.span.clone(),
                            format!("duplicate constant `{}` in enum `{}`", c.value, e.name.value),
                        ));
                    }
                }
            }
        }
    }
    diags
}

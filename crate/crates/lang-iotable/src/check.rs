//! Context conditions over rows; expression meaning comes from the host.

use crate::ast::IoTable;
use crate::codes;
use kernel::Diagnostic;
use std::collections::BTreeSet;

pub enum RowTargetInfo {
    Assignable(String),
    NotAssignable,
    Unresolved,
    /// Writable, but its type is unknown because of an error the host has
    /// already reported; the effect is skipped silently.
    Indeterminate,
}

pub trait RowContext<E> {
    fn typecheck(&self, expr: &E, sink: &mut Vec<Diagnostic>) -> Option<String>;
    fn assign_target(&self, name: &str) -> RowTargetInfo;
    fn is_literally_true(&self, expr: &E) -> bool;
    fn boolean_type(&self) -> String {
        "boolean".to_string()
    }
}

pub fn check_iotable<E>(table: &IoTable<E>, host: &dyn RowContext<E>) -> Vec<Diagnostic> {
    let mut diags = Vec::new();

    // TBL0001: a table must have at least one row.
    if table.rows.is_empty() {
        diags.push(Diagnostic::error(
            codes::TBL0001,
            table.span.clone(),
            "a table needs at least one row",
        ));
        return diags;
    }

    for row in &table.rows {
        // TBL0002: guards must be boolean.
        if let Some(ty) = host.typecheck(&row.guard, &mut diags) {
            if ty != host.boolean_type() {
                diags.push(Diagnostic::error(
                    codes::TBL0002,
                    row.span.clone(),
                    format!("row guard must be boolean, found {ty}"),
                ));
            }
        }
        // TBL0005: one effect per target per row.
        let mut written = BTreeSet::new();
        for effect in &row.effects {
            if !written.insert(effect.target.value.as_str()) {
                diags.push(Diagnostic::error(
                    codes::TBL0005,
                    effect.span.clone(),
                    format!("`{}` is written twice in this row", effect.target.value),
                ));
                continue;
            }
            match host.assign_target(&effect.target.value) {
                RowTargetInfo::Assignable(target_ty) => {
                    if let Some(value_ty) = host.typecheck(&effect.value, &mut diags) {
                        if value_ty != target_ty {
                            diags.push(Diagnostic::error(
                                codes::TBL0004,
                                effect.span.clone(),
                                format!(
                                    "`{}` has type {target_ty}, but the effect value has type {value_ty}",
                                    effect.target.value
                                ),
                            ));
                        }
                    }
                }
                RowTargetInfo::NotAssignable => diags.push(Diagnostic::error(
                    codes::TBL0003,
                    effect.target.span.clone(),
                    format!("`{}` is not assignable; effects must write output ports or variables", effect.target.value),
                )),
                RowTargetInfo::Unresolved => diags.push(Diagnostic::error(
                    codes::TBL0003,
                    effect.target.span.clone(),
                    format!("effect target `{}` does not resolve to an output port or variable", effect.target.value),
                )),
                RowTargetInfo::Indeterminate => {}
            }
        }
    }

    // TBL0006: without a literally-true final guard the table may be
    // incomplete; semantic completeness checking is out of scope.
    let last = table.rows.last().unwrap();
    if !host.is_literally_true(&last.guard) {
        diags.push(Diagnostic::warning(
            codes::TBL0006,
            last.span.clone(),
            "final row guard is not literally `true`; the table may not cover every input",
        ));
    }

    diags
}

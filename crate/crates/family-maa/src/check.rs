//! CHECK workflow for `.maa` units: the architecture conditions, the
//! family's own cross-language conditions, and the embedded behavior
//! checks run against this family's scopes.

use crate::codes;
use crate::define::{component_body_scope, expression_scope};
use crate::elements::{behaviors_of, variables_of, BehaviorBody, VariableDecl};
use crate::exprctx::{declared_type_to_expr_type, ScopeExprContext};
use kernel::{Diagnostic, ModelUnit, ScopeId, Workbench};
use lang_arc::{endpoint_info, resolve_type, ComponentType, Direction};
use lang_automaton::{check_automaton, BehaviorContext, TargetInfo};
use lang_expr::{typecheck_expr, Expr};
use lang_iotable::{check_iotable, RowContext, RowTargetInfo};

pub fn check_maa(unit: &ModelUnit, ctx: &Workbench) -> Vec<Diagnostic> {
    let mut diags = lang_arc::check_arc(unit, ctx);
    let Some(component) = unit.ast_as::<ComponentType>() else {
        return diags;
    };
    let variables = variables_of(component);
    let behaviors = behaviors_of(component);

    // MAA0105: at most one behavior element per component.
    for extra in behaviors.iter().skip(1) {
        diags.push(Diagnostic::error(
            codes::MAA0105,
            extra.span.clone(),
            "a component may carry at most one behavior element",
        ));
    }

    // MAA0107: behavior belongs to atomic components only.
    if component.is_decomposed() {
        for b in &behaviors {
            diags.push(Diagnostic::error(
                codes::MAA0107,
                b.span.clone(),
                "a decomposed component gets its behavior from its subcomponents and may not declare its own",
            ));
        }
    }

    // MAA0108: an atomic component with ports but no behavior does
    // nothing; almost certainly an oversight.
    if !component.is_decomposed() && !component.ports.is_empty() && behaviors.is_empty() {
        diags.push(Diagnostic::warning(
            codes::MAA0108,
            component.name.span.clone(),
            format!("atomic component `{}` has ports but no behavior", component.name.value),
        ));
    }

    // MAA0106: a name shared by a port and a variable is ambiguous in
    // every expression position; reject it at the declaration.
    for v in &variables {
        if component.port(&v.name.value).is_some() {
            diags.push(Diagnostic::error(
                codes::MAA0106,
                v.name.span.clone(),
                format!(
                    "`{}` names both a port and a variable; expression names must be unambiguous",
                    v.name.value
                ),
            ));
        }
    }

    let Some(body) = component_body_scope(unit) else {
        return diags;
    };

    // MAA0103/MAA0104: variable types resolve and initials match.
    for v in &variables {
        check_variable(v, unit, body, ctx, &mut diags);
    }

    // MAA0101: connector endpoints must carry the identical type. Skipped
    // when an endpoint or its type already failed to resolve.
    for conn in &component.connectors {
        let (Ok(source), Ok(target)) = (
            endpoint_info(component, &conn.source, unit, ctx),
            endpoint_info(component, &conn.target, unit, ctx),
        ) else {
            continue;
        };
        let (Ok(st), Ok(tt)) = (
            resolve_type(&source.type_name, &source.defining_unit, ctx),
            resolve_type(&target.type_name, &target.defining_unit, ctx),
        ) else {
            continue;
        };
        if st != tt {
            diags.push(Diagnostic::error(
                codes::MAA0101,
                conn.span.clone(),
                format!(
                    "connector `{} -> {}` connects a {} source to a {} target",
                    conn.source,
                    conn.target,
                    st.qualified_name(),
                    tt.qualified_name()
                ),
            ));
        }
    }

    // Embedded behavior checks with this component's scope as host scope.
    if let Some(behavior) = behaviors.first() {
        let scope = expression_scope(unit).unwrap_or(body);
        let host = FamilyBehaviorHost { ctx, unit, component, variables: &variables, scope };
        match &behavior.body {
            BehaviorBody::Automaton(a) => diags.extend(check_automaton(a, &host)),
            BehaviorBody::Table(t) => diags.extend(check_iotable(t, &host)),
        }
    }

    diags
}

fn check_variable(
    v: &VariableDecl,
    unit: &ModelUnit,
    body: ScopeId,
    ctx: &Workbench,
    diags: &mut Vec<Diagnostic>,
) {
    let Some(expected) = declared_type_to_expr_type(&v.type_name.value, &unit.qualified_name, ctx)
    else {
        diags.push(Diagnostic::error(
            codes::MAA0103,
            v.type_name.span.clone(),
            format!("variable type `{}` does not resolve to a type", v.type_name.value),
        ));
        return;
    };
    let ectx = ScopeExprContext::new(ctx, &unit.qualified_name, body);
    match typecheck_expr(&v.initial, &ectx) {
        Err(errs) => {
            if !ectx.take_poisoned() {
                diags.extend(errs);
            }
        }
        Ok(actual) => {
            if !ectx.take_poisoned() && actual != expected {
                diags.push(Diagnostic::error(
                    codes::MAA0104,
                    v.span.clone(),
                    format!(
                        "variable `{}` has type {expected}, but its initial value has type {actual}",
                        v.name.value
                    ),
                ));
            }
        }
    }
}

/// Host services for the embedded behavior checks: expression types via
/// the kernel's `ExprName` resolution, assignment targets classified over
/// this component's ports and variables.
struct FamilyBehaviorHost<'a> {
    ctx: &'a Workbench,
    unit: &'a ModelUnit,
    component: &'a ComponentType,
    variables: &'a [&'a VariableDecl],
    scope: ScopeId,
}

impl FamilyBehaviorHost<'_> {
    fn typecheck_embedded(&self, expr: &Expr, sink: &mut Vec<Diagnostic>) -> Option<String> {
        let ectx = ScopeExprContext::new(self.ctx, &self.unit.qualified_name, self.scope);
        match typecheck_expr(expr, &ectx) {
            Ok(t) => {
                if ectx.take_poisoned() {
                    None
                } else {
                    Some(t.to_string())
                }
            }
            Err(errs) => {
                if !ectx.take_poisoned() {
                    sink.extend(errs);
                }
                None
            }
        }
    }

    fn classify_target(&self, name: &str) -> TargetInfo {
        if let Some(port) = self.component.port(name) {
            if port.direction == Direction::In {
                return TargetInfo::NotAssignable;
            }
            return match declared_type_to_expr_type(
                &port.type_name.value,
                &self.unit.qualified_name,
                self.ctx,
            ) {
                Some(t) => TargetInfo::Assignable(t.to_string()),
                // The unresolved port type is already an ARC0003.
                None => TargetInfo::Indeterminate,
            };
        }
        if let Some(v) = self.variables.iter().find(|v| v.name.value == name) {
            return match declared_type_to_expr_type(
                &v.type_name.value,
                &self.unit.qualified_name,
                self.ctx,
            ) {
                Some(t) => TargetInfo::Assignable(t.to_string()),
                None => TargetInfo::Indeterminate,
            };
        }
        TargetInfo::Unresolved
    }
}

impl BehaviorContext<Expr> for FamilyBehaviorHost<'_> {
    fn typecheck(&self, expr: &Expr, sink: &mut Vec<Diagnostic>) -> Option<String> {
        self.typecheck_embedded(expr, sink)
    }
    fn assign_target(&self, name: &str) -> TargetInfo {
        self.classify_target(name)
    }
    fn is_literally_true(&self, expr: &Expr) -> bool {
        expr.is_literally_true()
    }
}

impl RowContext<Expr> for FamilyBehaviorHost<'_> {
    fn typecheck(&self, expr: &Expr, sink: &mut Vec<Diagnostic>) -> Option<String> {
        self.typecheck_embedded(expr, sink)
    }
    fn assign_target(&self, name: &str) -> RowTargetInfo {
        match self.classify_target(name) {
            TargetInfo::Assignable(t) => RowTargetInfo::Assignable(t),
            TargetInfo::NotAssignable => RowTargetInfo::NotAssignable,
            TargetInfo::Unresolved => RowTargetInfo::Unresolved,
            TargetInfo::Indeterminate => RowTargetInfo::Indeterminate,
        }
    }
    fn is_literally_true(&self, expr: &Expr) -> bool {
        expr.is_literally_true()
    }
}

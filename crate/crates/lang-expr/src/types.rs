//! Expression typechecking.
//!
//! The expression language owns the typing rules but not the names: what a
//! name, enum constant, or field means is answered by the host through
//! [`ExprContext`]. Hosts back it however they like — the bundled family
//! resolves names through the framework with the `ExprName` entry kind.

use crate::ast::{BinaryOp, Expr, ExprKind, UnaryOp};
use kernel::{Diagnostic, Span};
use std::fmt;

pub mod codes {
    /// Name (or qualified constant) does not resolve.
    pub const EXP0001: &str = "EXP0001";
    /// Operand type mismatch.
    pub const EXP0002: &str = "EXP0002";
    /// Field access on a class type that has no such field.
    pub const EXP0003: &str = "EXP0003";
    /// Name resolution was ambiguous.
    pub const EXP0004: &str = "EXP0004";
    /// Expression syntax error.
    pub const EXP0005: &str = "EXP0005";
}

/// Static expression types. Primitives compare structurally; named types
/// (classes and enums, identified by their defining unit's qualified name
/// plus the type name) compare nominally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprType {
    Int,
    Bool,
    Str,
    Named(String),
}

impl fmt::Display for ExprType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprType::Int => write!(f, "int"),
            ExprType::Bool => write!(f, "boolean"),
            ExprType::Str => write!(f, "String"),
            ExprType::Named(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Debug, Clone)]
pub enum NameLookup {
    Type(ExprType),
    NotFound,
    Ambiguous,
}

#[derive(Debug, Clone)]
pub enum ConstantLookup {
    /// Found; carries the nominal type of the constant's enum.
    Found(ExprType),
    NotFound,
    Ambiguous,
}

#[derive(Debug, Clone)]
pub enum FieldLookup {
    Field(ExprType),
    UnknownField,
    NotAClass,
}

/// The host side of the embedding: name, constant, and field information
/// for the scope an expression appears in.
pub trait ExprContext {
    fn name_type(&self, name: &str) -> NameLookup;
    fn constant_type(&self, enum_name: &str, constant: &str) -> ConstantLookup;
    fn field_type(&self, type_name: &str, field: &str) -> FieldLookup;
}

pub fn typecheck_expr(e: &Expr, ctx: &dyn ExprContext) -> Result<ExprType, Vec<Diagnostic>> {
    let mut diags = Vec::new();
    let ty = check(e, ctx, &mut diags);
    match ty {
        Some(t) if diags.is_empty() => Ok(t),
        _ => Err(diags),
    }
}

fn err(diags: &mut Vec<Diagnostic>, code: &'static str, span: &Span, msg: String) -> Option<ExprType> {
    diags.push(Diagnostic::error(code, span.clone(), msg));
    None
}

fn check(e: &Expr, ctx: &dyn ExprContext, diags: &mut Vec<Diagnostic>) -> Option<ExprType> {
    match &e.kind {
        ExprKind::Int(_) => Some(ExprType::Int),
        ExprKind::Bool(_) => Some(ExprType::Bool),
        ExprKind::Str(_) => Some(ExprType::Str),
        ExprKind::Name(n) => match ctx.name_type(n) {
            NameLookup::Type(t) => Some(t),
            NameLookup::NotFound => {
                err(diags, codes::EXP0001, &e.span, format!("unknown name `{n}`"))
            }
            NameLookup::Ambiguous => {
                err(diags, codes::EXP0004, &e.span, format!("name `{n}` is ambiguous here"))
            }
        },
        ExprKind::Dotted { head, member } => {
            // Qualified enum constants win; otherwise this is a one-hop
            // field access on a named value.
            match ctx.constant_type(head, member) {
                ConstantLookup::Found(t) => return Some(t),
                ConstantLookup::Ambiguous => {
                    return err(
                        diags,
                        codes::EXP0004,
                        &e.span,
                        format!("enum constant `{head}.{member}` is ambiguous here"),
                    )
                }
                ConstantLookup::NotFound => {}
            }
            match ctx.name_type(head) {
                NameLookup::Type(ExprType::Named(class)) => field_of(ctx, &class, member, &e.span, diags),
                NameLookup::Type(t) => err(
                    diags,
                    codes::EXP0002,
                    &e.span,
                    format!("`{head}` has type {t}, which has no fields"),
                ),
                NameLookup::Ambiguous => {
                    err(diags, codes::EXP0004, &e.span, format!("name `{head}` is ambiguous here"))
                }
                NameLookup::NotFound => err(
                    diags,
                    codes::EXP0001,
                    &e.span,
                    format!("`{head}.{member}` is neither a known enum constant nor a field of a known name"),
                ),
            }
        }
        ExprKind::Field { base, field } => {
            let base_ty = check(base, ctx, diags)?;
            match base_ty {
                ExprType::Named(class) => field_of(ctx, &class, field, &e.span, diags),
                t => err(diags, codes::EXP0002, &e.span, format!("type {t} has no fields")),
            }
        }
        ExprKind::Unary { op, operand } => {
            let t = check(operand, ctx, diags)?;
            match op {
                UnaryOp::Not if t == ExprType::Bool => Some(ExprType::Bool),
                UnaryOp::Neg if t == ExprType::Int => Some(ExprType::Int),
                UnaryOp::Not => err(diags, codes::EXP0002, &e.span, format!("`!` needs a boolean operand, found {t}")),
                UnaryOp::Neg => err(diags, codes::EXP0002, &e.span, format!("`-` needs an int operand, found {t}")),
            }
        }
        ExprKind::Binary { op, lhs, rhs } => {
            let lt = check(lhs, ctx, diags);
            let rt = check(rhs, ctx, diags);
            let (lt, rt) = (lt?, rt?);
            use BinaryOp::*;
            match op {
                Add | Sub | Mul | Div | Rem => {
                    if lt == ExprType::Int && rt == ExprType::Int {
                        Some(ExprType::Int)
                    } else {
                        err(diags, codes::EXP0002, &e.span, format!("`{}` needs int operands, found {lt} and {rt}", op.symbol()))
                    }
                }
                Lt | Le | Gt | Ge => {
                    if lt == ExprType::Int && rt == ExprType::Int {
                        Some(ExprType::Bool)
                    } else {
                        err(diags, codes::EXP0002, &e.span, format!("`{}` needs int operands, found {lt} and {rt}", op.symbol()))
                    }
                }
                Eq | Ne => {
                    if lt == rt {
                        Some(ExprType::Bool)
                    } else {
                        err(diags, codes::EXP0002, &e.span, format!("`{}` needs operands of the same type, found {lt} and {rt}", op.symbol()))
                    }
                }
                And | Or | Implies => {
                    if lt == ExprType::Bool && rt == ExprType::Bool {
                        Some(ExprType::Bool)
                    } else {
                        err(diags, codes::EXP0002, &e.span, format!("`{}` needs boolean operands, found {lt} and {rt}", op.symbol()))
                    }
                }
            }
        }
    }
}

fn field_of(
    ctx: &dyn ExprContext,
    class: &str,
    field: &str,
    span: &Span,
    diags: &mut Vec<Diagnostic>,
) -> Option<ExprType> {
    match ctx.field_type(class, field) {
        FieldLookup::Field(t) => Some(t),
        FieldLookup::UnknownField => err(
            diags,
            codes::EXP0003,
            span,
            format!("type `{class}` has no field `{field}`"),
        ),
        FieldLookup::NotAClass => err(
            diags,
            codes::EXP0002,
            span,
            format!("type `{class}` is not a class; it has no fields"),
        ),
    }
}

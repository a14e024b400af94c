//! Strict evaluation over a valuation, except `&&`, `||`, and `implies`,
//! which short-circuit. Integer division truncates toward zero; division or
//! remainder by zero is a reported fault, never undefined behavior.

use crate::ast::{BinaryOp, Expr, ExprKind, UnaryOp};
use kernel::Span;
use std::collections::BTreeMap;
use std::fmt;

/// Runtime values. Enum values compare by (type name, constant).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(i64),
    Bool(bool),
    Str(String),
    Enum { type_name: String, constant: String },
}

impl Value {
    pub fn enumeration(type_name: impl Into<String>, constant: impl Into<String>) -> Self {
        Value::Enum { type_name: type_name.into(), constant: constant.into() }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Value::Bool(b) => Some(*b),
            _ => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Str(s) => write!(f, "\"{s}\""),
            Value::Enum { type_name, constant } => write!(f, "{type_name}.{constant}"),
        }
    }
}

/// Runtime bindings for every name an expression may reference.
pub type Valuation = BTreeMap<String, Value>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalFault {
    DivisionByZero { span: Span },
    /// The valuation has no binding for a referenced name. The embedding
    /// host decides whether that is an absent input or an internal bug.
    MissingName { name: String, span: Span },
    /// Field access cannot be evaluated: no runtime value has fields.
    FieldAccess { span: Span },
}

impl fmt::Display for EvalFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalFault::DivisionByZero { .. } => write!(f, "division by zero"),
            EvalFault::MissingName { name, .. } => write!(f, "no value for `{name}`"),
            EvalFault::FieldAccess { .. } => write!(f, "field access has no runtime meaning"),
        }
    }
}

impl EvalFault {
    pub fn span(&self) -> &Span {
        match self {
            EvalFault::DivisionByZero { span }
            | EvalFault::MissingName { span, .. }
            | EvalFault::FieldAccess { span } => span,
        }
    }
}

pub fn eval_expr(e: &Expr, v: &Valuation) -> Result<Value, EvalFault> {
    match &e.kind {
        ExprKind::Int(value) => Ok(Value::Int(*value)),
        ExprKind::Bool(b) => Ok(Value::Bool(*b)),
        ExprKind::Str(s) => Ok(Value::Str(s.clone())),
        ExprKind::Name(n) => v
            .get(n)
            .cloned()
            .ok_or_else(|| EvalFault::MissingName { name: n.clone(), span: e.span.clone() }),
        // Typechecking resolved dotted names with enum constants taking
        // precedence, so the runtime reading is always the enum value.
        ExprKind::Dotted { head, member } => Ok(Value::enumeration(head.clone(), member.clone())),
        ExprKind::Field { .. } => Err(EvalFault::FieldAccess { span: e.span.clone() }),
        ExprKind::Unary { op, operand } => {
            let val = eval_expr(operand, v)?;
            match (op, val) {
                (UnaryOp::Not, Value::Bool(b)) => Ok(Value::Bool(!b)),
                (UnaryOp::Neg, Value::Int(i)) => Ok(Value::Int(i.wrapping_neg())),
                _ => unreachable!("evaluation of a typechecked expression"),
            }
        }
        ExprKind::Binary { op, lhs, rhs } => eval_binary(e, *op, lhs, rhs, v),
    }
}

fn eval_binary(
    e: &Expr,
    op: BinaryOp,
    lhs: &Expr,
    rhs: &Expr,
    v: &Valuation,
) -> Result<Value, EvalFault> {
    use BinaryOp::*;
    match op {
        And | Or | Implies => {
            let l = as_bool(eval_expr(lhs, v)?);
            let out = match op {
                And => {
                    if !l {
                        false
                    } else {
                        as_bool(eval_expr(rhs, v)?)
                    }
                }
                Or => {
                    if l {
                        true
                    } else {
                        as_bool(eval_expr(rhs, v)?)
                    }
                }
                Implies => {
                    if !l {
                        true
                    } else {
                        as_bool(eval_expr(rhs, v)?)
                    }
                }
                _ => unreachable!(),
            };
            Ok(Value::Bool(out))
        }
        _ => {
            let l = eval_expr(lhs, v)?;
            let r = eval_expr(rhs, v)?;
            match op {
                Eq => Ok(Value::Bool(l == r)),
                Ne => Ok(Value::Bool(l != r)),
                Lt => Ok(Value::Bool(as_int(l) < as_int(r))),
                Le => Ok(Value::Bool(as_int(l) <= as_int(r))),
                Gt => Ok(Value::Bool(as_int(l) > as_int(r))),
                Ge => Ok(Value::Bool(as_int(l) >= as_int(r))),
                Add => Ok(Value::Int(as_int(l).wrapping_add(as_int(r)))),
                Sub => Ok(Value::Int(as_int(l).wrapping_sub(as_int(r)))),
                Mul => Ok(Value::Int(as_int(l).wrapping_mul(as_int(r)))),
                Div | Rem => {
                    let (a, b) = (as_int(l), as_int(r));
                    if b == 0 {
                        return Err(EvalFault::DivisionByZero { span: e.span.clone() });
                    }
                    // i64::MIN / -1 overflows; wrap like the other ops.
                    let out = if op == Div { a.wrapping_div(b) } else { a.wrapping_rem(b) };
                    Ok(Value::Int(out))
                }
                And | Or | Implies => unreachable!("handled above"),
            }
        }
    }
}

fn as_bool(v: Value) -> bool {
    v.as_bool().expect("evaluation of a typechecked expression")
}

fn as_int(v: Value) -> i64 {
    match v {
        Value::Int(i) => i,
        _ => panic!("evaluation of a typechecked expression"),
    }
}

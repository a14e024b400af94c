//! Expression sublanguage for guards, table rows, and assignment
//! right-hand sides.
//!
//! The language is deliberately small: literals, names, qualified enum
//! constants, one field hop, boolean connectives including `implies`,
//! integer arithmetic, and comparisons. It has no notion of components,
//! ports, or class diagrams — hosts supply name and type information
//! through [`ExprContext`] when they embed it.

pub mod ast;
pub mod eval;
pub mod parse;
pub mod print;
pub mod testing;
pub mod types;

pub use ast::{BinaryOp, Expr, ExprKind, UnaryOp, LANGUAGE_ID};
pub use eval::{eval_expr, EvalFault, Valuation, Value};
pub use parse::{parse_expr, parse_expr_str};
pub use print::print_expr;
pub use types::{
    codes, typecheck_expr, ConstantLookup, ExprContext, ExprType, FieldLookup, NameLookup,
};

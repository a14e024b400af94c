//! Expression printing. `parse(print(e))` is structurally `e`, which the
//! round-trip property test pins down.

use crate::ast::{BinaryOp, Expr, ExprKind, UnaryOp};

fn precedence(op: BinaryOp) -> u8 {
    match op {
        BinaryOp::Implies => 1,
        BinaryOp::Or => 2,
        BinaryOp::And => 3,
        BinaryOp::Eq | BinaryOp::Ne => 4,
        BinaryOp::Lt | BinaryOp::Le | BinaryOp::Gt | BinaryOp::Ge => 5,
        BinaryOp::Add | BinaryOp::Sub => 6,
        BinaryOp::Mul | BinaryOp::Div | BinaryOp::Rem => 7,
    }
}

pub fn print_expr(e: &Expr) -> String {
    print_prec(e, 0)
}

fn print_prec(e: &Expr, min: u8) -> String {
    match &e.kind {
        ExprKind::Int(v) => v.to_string(),
        ExprKind::Bool(b) => b.to_string(),
        ExprKind::Str(s) => format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\"")),
        ExprKind::Name(n) => n.clone(),
        ExprKind::Dotted { head, member } => format!("{head}.{member}"),
        ExprKind::Field { base, field } => format!("({}).{field}", print_prec(base, 0)),
        ExprKind::Unary { op, operand } => {
            let sym = match op {
                UnaryOp::Not => "!",
                UnaryOp::Neg => "-",
            };
            format!("{sym}{}", print_prec(operand, 8))
        }
        ExprKind::Binary { op, lhs, rhs } => {
            let p = precedence(*op);
            // Left-associative operators need the right operand one level
            // tighter; `implies` is the mirror case.
            let (lmin, rmin) = if *op == BinaryOp::Implies { (p + 1, p) } else { (p, p + 1) };
            let s = format!("{} {} {}", print_prec(lhs, lmin), op.symbol(), print_prec(rhs, rmin));
            if p < min {
                format!("({s})")
            } else {
                s
            }
        }
    }
}

//! Expression trees. Every node carries its source span.

use kernel::visitor::AstNode;
use kernel::Span;

pub const LANGUAGE_ID: &str = "expr";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnaryOp {
    Not,
    Neg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryOp {
    Or,
    And,
    Implies,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    Add,
    Sub,
    Mul,
    Div,
    Rem,
}

impl BinaryOp {
    pub fn symbol(&self) -> &'static str {
        match self {
            BinaryOp::Or => "||",
            BinaryOp::And => "&&",
            BinaryOp::Implies => "implies",
            BinaryOp::Eq => "==",
            BinaryOp::Ne => "!=",
            BinaryOp::Lt => "<",
            BinaryOp::Le => "<=",
            BinaryOp::Gt => ">",
            BinaryOp::Ge => ">=",
            BinaryOp::Add => "+",
            BinaryOp::Sub => "-",
            BinaryOp::Mul => "*",
            BinaryOp::Div => "/",
            BinaryOp::Rem => "%",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    Int(i64),
    Bool(bool),
    Str(String),
    /// A plain name reference, resolved by the host.
    Name(String),
    /// `Head.member`: either a qualified enum constant or a single-hop
    /// field access on a named value. Which one is decided during
    /// typechecking (enum constants win), never by the parser.
    Dotted { head: String, member: String },
    /// Field access on a non-name base, e.g. `(p).x`.
    Field { base: Box<Expr>, field: String },
    Unary { op: UnaryOp, operand: Box<Expr> },
    Binary { op: BinaryOp, lhs: Box<Expr>, rhs: Box<Expr> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl Expr {
    pub fn new(kind: ExprKind, span: Span) -> Self {
        Expr { kind, span }
    }

    pub fn is_literally_true(&self) -> bool {
        matches!(self.kind, ExprKind::Bool(true))
    }
}

impl AstNode for Expr {
    fn language_id(&self) -> &'static str {
        LANGUAGE_ID
    }
    fn as_any(&self) -> &dyn std::any::Any {
        self
    }
    fn for_each_child(&self, f: &mut dyn FnMut(&dyn AstNode)) {
        match &self.kind {
            ExprKind::Field { base, .. } => f(base.as_ref()),
            ExprKind::Unary { operand, .. } => f(operand.as_ref()),
            ExprKind::Binary { lhs, rhs, .. } => {
                f(lhs.as_ref());
                f(rhs.as_ref());
            }
            _ => {}
        }
    }
}

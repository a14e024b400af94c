//! Table ASTs, generic over the embedded expression language `E`.

use kernel::visitor::AstNode;
use kernel::{Span, Spanned};

pub const LANGUAGE_ID: &str = "iotable";

#[derive(Debug)]
pub struct IoTable<E> {
    pub rows: Vec<Row<E>>,
    pub span: Span,
}

#[derive(Debug)]
pub struct Row<E> {
    pub guard: E,
    pub effects: Vec<RowEffect<E>>,
    pub span: Span,
}

#[derive(Debug)]
pub struct RowEffect<E> {
    pub target: Spanned<String>,
    pub value: E,
    pub span: Span,
}

impl<E: AstNode> AstNode for IoTable<E> {
    fn language_id(&self) -> &'static str {
        LANGUAGE_ID
    }
    fn as_any(&self) -> &dyn std::any::Any {
        self
    }
    fn for_each_child(&self, f: &mut dyn FnMut(&dyn AstNode)) {
        for r in &self.rows {
            f(r);
        }
    }
}

impl<E: AstNode> AstNode for Row<E> {
    fn language_id(&self) -> &'static str {
        LANGUAGE_ID
    }
    fn as_any(&self) -> &dyn std::any::Any {
        self
    }
    fn for_each_child(&self, f: &mut dyn FnMut(&dyn AstNode)) {
        f(&self.guard);
        for e in &self.effects {
            f(&e.value);
        }
    }
}

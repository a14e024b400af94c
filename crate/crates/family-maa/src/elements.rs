//! The elements this family adds to the architecture language: variable
//! declarations (new body element) and the behavior element holding an
//! embedded automaton or table. Both sit in the host component's opaque
//! extension list; only this module ever looks inside.

use kernel::visitor::AstNode;
use kernel::{Span, Spanned};
use lang_arc::ComponentType;
use lang_automaton::Automaton;
use lang_expr::Expr;
use lang_iotable::IoTable;

/// Language id of the family's own AST nodes.
pub const LANGUAGE_ID: &str = "maa";

#[derive(Debug)]
pub struct VariableDecl {
    pub type_name: Spanned<String>,
    pub name: Spanned<String>,
    pub initial: Expr,
    pub span: Span,
}

#[derive(Debug)]
pub enum BehaviorBody {
    Automaton(Automaton<Expr>),
    Table(IoTable<Expr>),
}

#[derive(Debug)]
pub struct BehaviorDecl {
    pub body: BehaviorBody,
    pub span: Span,
}

impl AstNode for VariableDecl {
    fn language_id(&self) -> &'static str {
        LANGUAGE_ID
    }
    fn as_any(&self) -> &dyn std::any::Any {
        self
    }
    fn for_each_child(&self, f: &mut dyn FnMut(&dyn AstNode)) {
        f(&self.initial);
    }
}

impl AstNode for BehaviorDecl {
    fn language_id(&self) -> &'static str {
        LANGUAGE_ID
    }
    fn as_any(&self) -> &dyn std::any::Any {
        self
    }
    fn for_each_child(&self, f: &mut dyn FnMut(&dyn AstNode)) {
        match &self.body {
            BehaviorBody::Automaton(a) => f(a),
            BehaviorBody::Table(t) => f(t),
        }
    }
}

/// Variable declarations of a parsed component, in source order.
pub fn variables_of(component: &ComponentType) -> Vec<&VariableDecl> {
    component
        .extensions
        .iter()
        .filter_map(|e| e.as_any().downcast_ref::<VariableDecl>())
        .collect()
}

/// Behavior elements of a parsed component (at most one is legal).
pub fn behaviors_of(component: &ComponentType) -> Vec<&BehaviorDecl> {
    component
        .extensions
        .iter()
        .filter_map(|e| e.as_any().downcast_ref::<BehaviorDecl>())
        .collect()
}

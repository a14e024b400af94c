//! Automaton ASTs, generic over the embedded expression language `E`.
//! Guards and assignment right-hand sides are opaque subtrees parsed by a
//! host-supplied slot parser; this module never interprets them itself.

use kernel::visitor::AstNode;
use kernel::{Span, Spanned};

pub const LANGUAGE_ID: &str = "automaton";

#[derive(Debug)]
pub struct Automaton<E> {
    pub states: Vec<Spanned<String>>,
    /// All parsed `initial` clauses; exactly one is legal (AUT0003).
    pub initials: Vec<InitialClause<E>>,
    pub transitions: Vec<Transition<E>>,
    pub span: Span,
}

#[derive(Debug)]
pub struct InitialClause<E> {
    pub state: Spanned<String>,
    pub outputs: Vec<Assignment<E>>,
    pub span: Span,
}

#[derive(Debug)]
pub struct Transition<E> {
    pub source: Spanned<String>,
    pub target: Spanned<String>,
    pub guard: Option<E>,
    pub actions: Vec<Assignment<E>>,
    pub span: Span,
}

#[derive(Debug)]
pub struct Assignment<E> {
    pub target: Spanned<String>,
    pub value: E,
    pub span: Span,
}

impl<E> Automaton<E> {
    pub fn initial(&self) -> Option<&InitialClause<E>> {
        self.initials.first()
    }
}

impl<E: AstNode> AstNode for Automaton<E> {
    fn language_id(&self) -> &'static str {
        LANGUAGE_ID
    }
    fn as_any(&self) -> &dyn std::any::Any {
        self
    }
    fn for_each_child(&self, f: &mut dyn FnMut(&dyn AstNode)) {
        for i in &self.initials {
            for a in &i.outputs {
                f(a);
            }
        }
        for t in &self.transitions {
            f(t);
        }
    }
}

impl<E: AstNode> AstNode for Transition<E> {
    fn language_id(&self) -> &'static str {
        LANGUAGE_ID
    }
    fn as_any(&self) -> &dyn std::any::Any {
        self
    }
    fn for_each_child(&self, f: &mut dyn FnMut(&dyn AstNode)) {
        if let Some(g) = &self.guard {
            f(g);
        }
        for a in &self.actions {
            f(a);
        }
    }
}

impl<E: AstNode> AstNode for Assignment<E> {
    fn language_id(&self) -> &'static str {
        LANGUAGE_ID
    }
    fn as_any(&self) -> &dyn std::any::Any {
        self
    }
    fn for_each_child(&self, f: &mut dyn FnMut(&dyn AstNode)) {
        f(&self.value);
    }
}

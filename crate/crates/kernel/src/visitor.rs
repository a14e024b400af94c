//! Heterogeneous AST traversal.
//!
//! Every language implements [`AstNode`] for its tree types and tags them
//! with its language id. A [`CompositeVisitor`] is assembled from one
//! visitor part per language and dispatches each node to the part for the
//! node's language, switching parts at embedding boundaries. Traversal is
//! depth-first in source child order.

use std::any::Any;
use std::collections::BTreeMap;
use std::fmt;

pub trait AstNode: Any + Send + Sync + fmt::Debug {
    /// Id of the language module that defines this node type.
    fn language_id(&self) -> &'static str;
    fn as_any(&self) -> &dyn Any;
    /// Children in source order.
    fn for_each_child(&self, f: &mut dyn FnMut(&dyn AstNode));
}

/// Total node count of a tree, the oracle for visitor coverage checks.
pub fn ast_size(root: &dyn AstNode) -> usize {
    let mut n = 1;
    root.for_each_child(&mut |c| n += ast_size(c));
    n
}

/// One per-language handler in a composite traversal. `S` is the shared
/// state the traversal builds (an emitter buffer, a counter, ...).
pub trait VisitorPart<S> {
    fn enter(&mut self, node: &dyn AstNode, state: &mut S);
    fn exit(&mut self, _node: &dyn AstNode, _state: &mut S) {}
}

/// A part that ignores every node; bind it as the default to traverse
/// across languages a visitor does not care about.
pub struct SkipPart;

impl<S> VisitorPart<S> for SkipPart {
    fn enter(&mut self, _node: &dyn AstNode, _state: &mut S) {}
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnhandledLanguage {
    pub language_id: String,
}

impl fmt::Display for UnhandledLanguage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no visitor part registered for language `{}`", self.language_id)
    }
}

impl std::error::Error for UnhandledLanguage {}

pub struct CompositeVisitor<'p, S> {
    parts: BTreeMap<&'static str, Box<dyn VisitorPart<S> + 'p>>,
    default_part: Option<Box<dyn VisitorPart<S> + 'p>>,
    visited: usize,
}

impl<'p, S> CompositeVisitor<'p, S> {
    pub fn new() -> Self {
        CompositeVisitor { parts: BTreeMap::new(), default_part: None, visited: 0 }
    }

    pub fn with_part(mut self, language_id: &'static str, part: impl VisitorPart<S> + 'p) -> Self {
        self.parts.insert(language_id, Box::new(part));
        self
    }

    pub fn with_default(mut self, part: impl VisitorPart<S> + 'p) -> Self {
        self.default_part = Some(Box::new(part));
        self
    }

    /// Nodes visited across all `walk` calls so far.
    pub fn visited(&self) -> usize {
        self.visited
    }

    pub fn walk(&mut self, node: &dyn AstNode, state: &mut S) -> Result<(), UnhandledLanguage> {
        self.visited += 1;
        let lang = node.language_id();
        // Dispatch enter/exit to the part for this node's language.
        if self.parts.contains_key(lang) {
            self.parts.get_mut(lang).unwrap().enter(node, state);
        } else if let Some(d) = self.default_part.as_mut() {
            d.enter(node, state);
        } else {
            return Err(UnhandledLanguage { language_id: lang.to_string() });
        }
        let mut err = None;
        node.for_each_child(&mut |c| {
            if err.is_none() {
                if let Err(e) = self.walk(c, state) {
                    err = Some(e);
                }
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        if self.parts.contains_key(lang) {
            self.parts.get_mut(lang).unwrap().exit(node, state);
        } else if let Some(d) = self.default_part.as_mut() {
            d.exit(node, state);
        }
        Ok(())
    }
}

impl<'p, S> Default for CompositeVisitor<'p, S> {
    fn default() -> Self {
        Self::new()
    }
}

//! Model units: one parsed artifact with its AST and scope tree.

use crate::scope::ScopeTree;
use crate::visitor::AstNode;
use std::path::PathBuf;

pub struct ModelUnit {
    pub language_id: String,
    /// Dotted package path plus declared artifact name; unique per registry.
    pub qualified_name: String,
    pub path: PathBuf,
    /// Absent when parsing failed beyond recovery.
    pub ast: Option<Box<dyn AstNode>>,
    pub scopes: ScopeTree,
}

impl ModelUnit {
    pub fn new(
        language_id: impl Into<String>,
        qualified_name: impl Into<String>,
        path: PathBuf,
        ast: Option<Box<dyn AstNode>>,
    ) -> Self {
        ModelUnit {
            language_id: language_id.into(),
            qualified_name: qualified_name.into(),
            path,
            ast,
            scopes: ScopeTree::new(),
        }
    }

    /// Downcast the AST root to a concrete language type.
    pub fn ast_as<T: 'static>(&self) -> Option<&T> {
        self.ast.as_ref().and_then(|a| a.as_any().downcast_ref::<T>())
    }

    /// The package part of the qualified name ("" for top-level units).
    pub fn package(&self) -> &str {
        self.qualified_name.rsplit_once('.').map(|(p, _)| p).unwrap_or("")
    }
}

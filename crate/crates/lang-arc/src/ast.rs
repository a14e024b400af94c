//! Architecture ASTs plus the extension points other languages hook into.
//!
//! Extension elements are opaque here: this module parses and stores them
//! but never inspects them. A sublanguage that extends the component body
//! registers an element parser (inheritance); a behavior language binds
//! itself at the behavior slot (embedding). Pure `.arc` files use an empty
//! extension point, which makes behavior keywords plain syntax errors.

use kernel::lex::Cursor;
use kernel::visitor::AstNode;
use kernel::{Diagnostic, Span, Spanned};
use std::collections::BTreeMap;

pub const LANGUAGE_ID: &str = "arc";

/// Built-in port/variable type names; anything else must resolve to a
/// type entry, possibly via adaptation from another language.
pub const PRIMITIVES: [&str; 4] = ["int", "boolean", "double", "String"];

pub fn is_primitive(name: &str) -> bool {
    PRIMITIVES.contains(&name)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    In,
    Out,
}

impl Direction {
    pub fn keyword(&self) -> &'static str {
        match self {
            Direction::In => "in",
            Direction::Out => "out",
        }
    }
}

#[derive(Debug)]
pub struct ComponentType {
    pub name: Spanned<String>,
    pub ports: Vec<Port>,
    pub subcomponents: Vec<Subcomponent>,
    pub connectors: Vec<Connector>,
    /// Elements contributed by extending/embedded languages; opaque.
    pub extensions: Vec<Box<dyn AstNode>>,
    pub span: Span,
}

impl ComponentType {
    pub fn is_decomposed(&self) -> bool {
        !self.subcomponents.is_empty()
    }

    pub fn port(&self, name: &str) -> Option<&Port> {
        self.ports.iter().find(|p| p.name.value == name)
    }

    pub fn subcomponent(&self, name: &str) -> Option<&Subcomponent> {
        self.subcomponents.iter().find(|s| s.name.value == name)
    }
}

#[derive(Debug)]
pub struct Port {
    pub direction: Direction,
    pub type_name: Spanned<String>,
    pub name: Spanned<String>,
}

#[derive(Debug)]
pub struct Subcomponent {
    /// Possibly qualified name of the component type.
    pub component_type: Spanned<String>,
    pub name: Spanned<String>,
}

/// `name` for a port of the enclosing component, `sub.port` for a
/// subcomponent port.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Endpoint {
    pub subcomponent: Option<String>,
    pub port: String,
    pub span: Span,
}

impl std::fmt::Display for Endpoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.subcomponent {
            Some(s) => write!(f, "{s}.{}", self.port),
            None => write!(f, "{}", self.port),
        }
    }
}

#[derive(Debug)]
pub struct Connector {
    pub source: Endpoint,
    pub target: Endpoint,
    pub span: Span,
}

impl AstNode for ComponentType {
    fn language_id(&self) -> &'static str {
        LANGUAGE_ID
    }
    fn as_any(&self) -> &dyn std::any::Any {
        self
    }
    fn for_each_child(&self, f: &mut dyn FnMut(&dyn AstNode)) {
        for p in &self.ports {
            f(p);
        }
        for s in &self.subcomponents {
            f(s);
        }
        for c in &self.connectors {
            f(c);
        }
        for e in &self.extensions {
            f(e.as_ref());
        }
    }
}

macro_rules! leaf_node {
    ($ty:ty) => {
        impl AstNode for $ty {
            fn language_id(&self) -> &'static str {
                LANGUAGE_ID
            }
            fn as_any(&self) -> &dyn std::any::Any {
                self
            }
            fn for_each_child(&self, _f: &mut dyn FnMut(&dyn AstNode)) {}
        }
    };
}

leaf_node!(Port);
leaf_node!(Subcomponent);
leaf_node!(Connector);

/// Parses one extension element, starting at its keyword. Returns the
/// element or diagnostics the failed parse already produced.
pub type ElementParser =
    Box<dyn Fn(&mut Cursor) -> Result<Box<dyn AstNode>, Vec<Diagnostic>> + Send + Sync>;

/// The two hooks this language exposes:
/// body-element sub-parsers (inheritance: new kinds of elements) and the
/// behavior slot (embedding: a behavior language bound by keyword).
#[derive(Default)]
pub struct ExtensionPoint {
    pub element_parsers: BTreeMap<&'static str, ElementParser>,
    pub behavior_parsers: BTreeMap<&'static str, ElementParser>,
}

impl ExtensionPoint {
    /// No extensions: pure architecture, behavior slot unbound.
    pub fn none() -> Self {
        Self::default()
    }

    pub fn keyword(&self, kw: &str) -> Option<&ElementParser> {
        self.element_parsers.get(kw).or_else(|| self.behavior_parsers.get(kw))
    }
}

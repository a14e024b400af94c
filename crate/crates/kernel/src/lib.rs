//! Language-independent workbench framework.
//!
//! Everything here is agnostic of any concrete modeling language: symbol
//! entries and nested scopes, a resolution algorithm that applies entry
//! adapters automatically, a model registry with phased workflow execution,
//! a shared lexical layer, and composite visitors over heterogeneous ASTs.
//! Language modules depend on this crate and on nothing else; integrating
//! several languages is the job of a separate family module.

pub mod adapter;
pub mod diag;
pub mod entry;
pub mod lex;
pub mod loader;
pub mod registry;
pub mod scope;
pub mod span;
pub mod unit;
pub mod visitor;
pub mod workflow;

pub use adapter::AdapterRegistration;
pub use diag::{has_errors, sort_diagnostics, Diagnostic, Severity};
pub use entry::{EntryId, EntryKind, Origin, SymbolEntry, Visibility};
pub use loader::load_models;
pub use registry::{ConfigError, LanguageDescriptor, ParsedArtifact, Resolution, Workbench};
pub use scope::{DuplicateEntry, ScopeId, ScopeTree, ROOT_SCOPE};
pub use span::{LineCol, Span, Spanned};
pub use unit::ModelUnit;
pub use visitor::{ast_size, AstNode, CompositeVisitor, SkipPart, VisitorPart};
pub use workflow::{Phase, Workflow};

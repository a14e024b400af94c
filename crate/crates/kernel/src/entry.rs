//! Symbol entries: named descriptions of model elements, the unit of
//! cross-language linking.

use crate::span::Span;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

/// The kind of a symbol entry (e.g. "Component", "Port", "CDType").
/// Kind ids are opaque to the kernel; language modules define their own.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EntryKind(pub &'static str);

impl EntryKind {
    pub fn id(&self) -> &'static str {
        self.0
    }
}

impl fmt::Display for EntryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// EXPORTED entries are resolvable from other model units; INTERNAL
/// entries are visible only within their own unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Visibility {
    Exported,
    Internal,
}

/// Identity of an entry, stable for the lifetime of a registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EntryId(u64);

static NEXT_ENTRY_ID: AtomicU64 = AtomicU64::new(1);

fn fresh_entry_id() -> EntryId {
    EntryId(NEXT_ENTRY_ID.fetch_add(1, Ordering::Relaxed))
}

/// Where an entry was defined: owning model unit plus source range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Origin {
    pub unit: String,
    pub span: Span,
}

/// A description of a model element. Payload attributes are an opaque,
/// language-defined string map; the kernel never interprets them.
#[derive(Debug)]
pub struct SymbolEntry {
    id: EntryId,
    pub name: String,
    pub kind: EntryKind,
    pub visibility: Visibility,
    pub origin: Origin,
    pub payload: BTreeMap<String, String>,
    /// Set iff this entry was produced by an adapter; chains never exceed
    /// length one because adapters only apply to scope-defined entries.
    pub adapted_from: Option<Arc<SymbolEntry>>,
}

impl SymbolEntry {
    pub fn new(
        name: impl Into<String>,
        kind: EntryKind,
        visibility: Visibility,
        origin: Origin,
    ) -> Self {
        SymbolEntry {
            id: fresh_entry_id(),
            name: name.into(),
            kind,
            visibility,
            origin,
            payload: BTreeMap::new(),
            adapted_from: None,
        }
    }

    pub fn with_attr(mut self, key: &str, value: impl Into<String>) -> Self {
        self.payload.insert(key.to_string(), value.into());
        self
    }

    pub fn id(&self) -> EntryId {
        self.id
    }

    pub fn attr(&self, key: &str) -> Option<&str> {
        self.payload.get(key).map(String::as_str)
    }

    pub fn is_exported(&self) -> bool {
        self.visibility == Visibility::Exported
    }

    /// The scope-defined entry behind this one: itself, unless adapted.
    pub fn definition(self: &Arc<Self>) -> Arc<SymbolEntry> {
        match &self.adapted_from {
            Some(src) => src.clone(),
            None => self.clone(),
        }
    }
}

//! Nested namespaces. Each model unit owns one scope tree, stored as an
//! arena indexed by `ScopeId`; `ScopeId(0)` is always the root.

use crate::entry::{EntryId, EntryKind, SymbolEntry};
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScopeId(pub u32);

pub const ROOT_SCOPE: ScopeId = ScopeId(0);

#[derive(Debug, Default)]
pub struct ScopeData {
    pub parent: Option<ScopeId>,
    /// The entry this scope belongs to (e.g. a component's body scope).
    pub owner: Option<Arc<SymbolEntry>>,
    /// Definition order is preserved; (name, kind) pairs are unique.
    entries: Vec<Arc<SymbolEntry>>,
    /// Qualified names of explicitly imported model units. Empty means
    /// "all loaded units" (the bundled grammars have no import syntax).
    pub imports: Vec<String>,
}

impl ScopeData {
    pub fn entries(&self) -> &[Arc<SymbolEntry>] {
        &self.entries
    }
}

/// Returned when an insert would violate (name, kind) uniqueness; the
/// caller maps it to its language's duplicate-definition code.
#[derive(Debug, Clone)]
pub struct DuplicateEntry {
    pub existing: Arc<SymbolEntry>,
}

#[derive(Debug)]
pub struct ScopeTree {
    scopes: Vec<ScopeData>,
}

impl Default for ScopeTree {
    fn default() -> Self {
        Self::new()
    }
}

impl ScopeTree {
    pub fn new() -> Self {
        ScopeTree { scopes: vec![ScopeData::default()] }
    }

    pub fn scope(&self, id: ScopeId) -> &ScopeData {
        &self.scopes[id.0 as usize]
    }

    pub fn scope_mut(&mut self, id: ScopeId) -> &mut ScopeData {
        &mut self.scopes[id.0 as usize]
    }

    pub fn new_scope(&mut self, parent: ScopeId, owner: Option<Arc<SymbolEntry>>) -> ScopeId {
        let id = ScopeId(self.scopes.len() as u32);
        self.scopes.push(ScopeData { parent: Some(parent), owner, ..ScopeData::default() });
        id
    }

    pub fn insert(
        &mut self,
        scope: ScopeId,
        entry: SymbolEntry,
    ) -> Result<Arc<SymbolEntry>, DuplicateEntry> {
        if let Some(existing) = self
            .scope(scope)
            .entries
            .iter()
            .find(|e| e.name == entry.name && e.kind == entry.kind)
        {
            return Err(DuplicateEntry { existing: existing.clone() });
        }
        let entry = Arc::new(entry);
        self.scopes[scope.0 as usize].entries.push(entry.clone());
        Ok(entry)
    }

    /// All entries named `name` in one scope, any kind, definition order.
    pub fn named(&self, scope: ScopeId, name: &str) -> Vec<Arc<SymbolEntry>> {
        self.scope(scope).entries.iter().filter(|e| e.name == name).cloned().collect()
    }

    pub fn lookup(&self, scope: ScopeId, name: &str, kind: EntryKind) -> Option<Arc<SymbolEntry>> {
        self.scope(scope).entries.iter().find(|e| e.name == name && e.kind == kind).cloned()
    }

    /// The scope owned by the given entry, if any.
    pub fn scope_owned_by(&self, id: EntryId) -> Option<ScopeId> {
        self.scopes
            .iter()
            .position(|s| s.owner.as_ref().is_some_and(|o| o.id() == id))
            .map(|i| ScopeId(i as u32))
    }

    pub fn ancestors_inclusive(&self, from: ScopeId) -> Vec<ScopeId> {
        let mut out = vec![from];
        let mut cur = from;
        while let Some(p) = self.scope(cur).parent {
            out.push(p);
            cur = p;
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (ScopeId, &ScopeData)> {
        self.scopes.iter().enumerate().map(|(i, s)| (ScopeId(i as u32), s))
    }
}

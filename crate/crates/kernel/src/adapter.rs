//! Entry adapters: translations that make an entry of one language conform
//! to the entry interface another language expects. Registered per
//! (from, to) kind pair and applied automatically during resolution.

use crate::entry::{EntryKind, SymbolEntry};
use std::sync::Arc;

pub type AdaptFn = Box<dyn Fn(&Arc<SymbolEntry>) -> SymbolEntry + Send + Sync>;

pub struct AdapterRegistration {
    pub from_kind: EntryKind,
    pub to_kind: EntryKind,
    /// Total on entries of `from_kind`. The kernel re-stamps the result:
    /// kind is forced to `to_kind` and `adapted_from` to the source, so a
    /// registration cannot produce chained or mislabeled adaptations.
    pub adapt: AdaptFn,
}

impl AdapterRegistration {
    pub fn new(
        from_kind: EntryKind,
        to_kind: EntryKind,
        adapt: impl Fn(&Arc<SymbolEntry>) -> SymbolEntry + Send + Sync + 'static,
    ) -> Self {
        AdapterRegistration { from_kind, to_kind, adapt: Box::new(adapt) }
    }
}

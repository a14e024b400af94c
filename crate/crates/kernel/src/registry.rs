//! The workbench: registered languages, adapters, loaded model units, and
//! the resolution algorithm with automatic adapter application.

use crate::adapter::AdapterRegistration;
use crate::diag::{has_errors, Diagnostic};
use crate::entry::{EntryId, EntryKind, SymbolEntry};
use crate::scope::{ScopeId, ROOT_SCOPE};
use crate::unit::ModelUnit;
use crate::visitor::AstNode;
use crate::workflow::{Phase, Workflow, WorkflowFn, PHASES};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;
use std::sync::{Arc, Mutex};

/// Result of parsing one artifact. The declared artifact name feeds the
/// unit's qualified name; a partial AST may accompany recovery diagnostics.
pub struct ParsedArtifact {
    pub artifact_name: Option<String>,
    pub ast: Option<Box<dyn AstNode>>,
    pub diagnostics: Vec<Diagnostic>,
}

pub type ParseFn = Box<dyn Fn(&str, &Path) -> ParsedArtifact + Send + Sync>;

pub struct LanguageDescriptor {
    pub language_id: String,
    /// Without the leading dot, e.g. "maa".
    pub file_extension: String,
    pub parse: ParseFn,
    pub workflows: Vec<Workflow>,
}

/// Errors in tool configuration; these abort before any model is loaded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "configuration error: {}", self.0)
    }
}

impl std::error::Error for ConfigError {}

/// Outcome of a resolution attempt. `Ambiguous` carries the candidate
/// definitions (pre-adaptation) for the caller's diagnostic message.
#[derive(Debug, Clone)]
pub enum Resolution {
    Found(Arc<SymbolEntry>),
    NotFound,
    Ambiguous(Vec<Arc<SymbolEntry>>),
}

impl Resolution {
    pub fn found(&self) -> Option<&Arc<SymbolEntry>> {
        match self {
            Resolution::Found(e) => Some(e),
            _ => None,
        }
    }
}

#[derive(Default)]
pub struct Workbench {
    languages: BTreeMap<String, LanguageDescriptor>,
    extensions: BTreeMap<String, String>,
    adapters: BTreeMap<(EntryKind, EntryKind), AdapterRegistration>,
    units: BTreeMap<String, ModelUnit>,
    /// Memoized adaptations keyed by (source entry, target kind) so that
    /// repeated resolves return the identical adapted entry.
    adapted: Mutex<HashMap<(EntryId, EntryKind), Arc<SymbolEntry>>>,
}

impl Workbench {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn register_language(&mut self, descriptor: LanguageDescriptor) -> Result<(), ConfigError> {
        if self.languages.contains_key(&descriptor.language_id) {
            return Err(ConfigError(format!("language `{}` registered twice", descriptor.language_id)));
        }
        if let Some(existing) = self.extensions.get(&descriptor.file_extension) {
            return Err(ConfigError(format!(
                "file extension `.{}` already registered by language `{existing}`",
                descriptor.file_extension
            )));
        }
        self.extensions.insert(descriptor.file_extension.clone(), descriptor.language_id.clone());
        self.languages.insert(descriptor.language_id.clone(), descriptor);
        Ok(())
    }

    pub fn register_adapter(&mut self, reg: AdapterRegistration) -> Result<(), ConfigError> {
        let key = (reg.from_kind, reg.to_kind);
        if self.adapters.contains_key(&key) {
            return Err(ConfigError(format!(
                "adapter {} -> {} registered twice",
                reg.from_kind, reg.to_kind
            )));
        }
        self.adapters.insert(key, reg);
        Ok(())
    }

    pub fn language(&self, id: &str) -> Option<&LanguageDescriptor> {
        self.languages.get(id)
    }

    pub fn language_for_extension(&self, ext: &str) -> Option<&LanguageDescriptor> {
        self.extensions.get(ext).and_then(|id| self.languages.get(id))
    }

    pub fn add_unit(&mut self, unit: ModelUnit) -> Result<(), ConfigError> {
        if self.units.contains_key(&unit.qualified_name) {
            return Err(ConfigError(format!("model `{}` already loaded", unit.qualified_name)));
        }
        self.units.insert(unit.qualified_name.clone(), unit);
        Ok(())
    }

    pub fn unit(&self, qualified_name: &str) -> Option<&ModelUnit> {
        self.units.get(qualified_name)
    }

    /// Units in qualified-name order (the deterministic execution order).
    pub fn units(&self) -> impl Iterator<Item = &ModelUnit> {
        self.units.values()
    }

    pub fn unit_names(&self) -> Vec<String> {
        self.units.keys().cloned().collect()
    }

    // ------------------------------------------------------------------
    // Resolution
    // ------------------------------------------------------------------

    /// Resolve `name` to an entry of kind `expected`, starting from a scope
    /// of unit `from_unit`. Search order:
    ///
    /// 1. the scope and its ancestors, innermost first;
    /// 2. imported units' root scopes (all other units when the scope
    ///    declares no imports), exported entries only;
    /// 3. the global registry, reading `name` as `<unit>.<entry>`.
    ///
    /// At each stage a direct kind match wins over adaptation; a single
    /// adaptable candidate is adapted (memoized); several candidates are
    /// ambiguous. Adapters never chain: candidates are scope-defined
    /// entries, which are themselves never adapted.
    pub fn resolve(
        &self,
        name: &str,
        expected: EntryKind,
        from_unit: &str,
        from_scope: ScopeId,
    ) -> Resolution {
        let Some(unit) = self.units.get(from_unit) else {
            return Resolution::NotFound;
        };

        // Stage 1: enclosing scopes, innermost first. Same unit, so
        // internal entries are visible.
        for sid in unit.scopes.ancestors_inclusive(from_scope) {
            let candidates = unit.scopes.named(sid, name);
            match self.select(&candidates, expected, false) {
                StageHit::Miss => {}
                StageHit::Direct(e) => return Resolution::Found(e),
                StageHit::Adaptable(e) => return Resolution::Found(self.adapt(&e, expected)),
                StageHit::Ambiguous(v) => return Resolution::Ambiguous(v),
            }
        }

        // Stage 2: imported units' root scopes, exported entries only.
        let explicit = &unit.scopes.scope(ROOT_SCOPE).imports;
        let imported: Vec<&ModelUnit> = if explicit.is_empty() {
            self.units.values().filter(|u| u.qualified_name != from_unit).collect()
        } else {
            explicit.iter().filter_map(|q| self.units.get(q)).collect()
        };
        let mut candidates = Vec::new();
        for u in &imported {
            candidates.extend(u.scopes.named(ROOT_SCOPE, name).into_iter().filter(|e| e.is_exported()));
        }
        match self.select(&candidates, expected, true) {
            StageHit::Miss => {}
            StageHit::Direct(e) => return Resolution::Found(e),
            StageHit::Adaptable(e) => return Resolution::Found(self.adapt(&e, expected)),
            StageHit::Ambiguous(v) => return Resolution::Ambiguous(v),
        }

        // Stage 3: qualified lookup. The name either denotes a unit's own
        // artifact entry (`demo.Bot` -> entry `Bot` in unit `demo.Bot`) or
        // splits into `<unit qualified name>.<entry name>`, where the
        // entry name may itself contain dots. Longest unit prefix wins.
        let mut splits: Vec<(&str, &str)> = Vec::new();
        if let Some((_, last)) = name.rsplit_once('.') {
            splits.push((name, last));
        }
        for (i, _) in name.match_indices('.').collect::<Vec<_>>().into_iter().rev() {
            splits.push((&name[..i], &name[i + 1..]));
        }
        for (unit_name, entry_name) in splits {
            let Some(u) = self.units.get(unit_name) else { continue };
            let candidates: Vec<_> = u
                .scopes
                .named(ROOT_SCOPE, entry_name)
                .into_iter()
                .filter(|e| e.is_exported() || u.qualified_name == from_unit)
                .collect();
            match self.select(&candidates, expected, true) {
                StageHit::Miss => {}
                StageHit::Direct(e) => return Resolution::Found(e),
                StageHit::Adaptable(e) => return Resolution::Found(self.adapt(&e, expected)),
                StageHit::Ambiguous(v) => return Resolution::Ambiguous(v),
            }
        }

        Resolution::NotFound
    }

    /// Resolve a member inside the scope owned by `owner` (for adapted
    /// entries, the scope of the original definition). Cross-unit access
    /// reaches exported members only.
    pub fn resolve_member(
        &self,
        owner: &Arc<SymbolEntry>,
        name: &str,
        expected: EntryKind,
        from_unit: &str,
    ) -> Resolution {
        let def = owner.definition();
        let Some(unit) = self.units.get(&def.origin.unit) else {
            return Resolution::NotFound;
        };
        let Some(sid) = unit.scopes.scope_owned_by(def.id()) else {
            return Resolution::NotFound;
        };
        let cross_unit = unit.qualified_name != from_unit;
        let candidates: Vec<_> = unit
            .scopes
            .named(sid, name)
            .into_iter()
            .filter(|e| !cross_unit || e.is_exported())
            .collect();
        match self.select(&candidates, expected, cross_unit) {
            StageHit::Miss => Resolution::NotFound,
            StageHit::Direct(e) => Resolution::Found(e),
            StageHit::Adaptable(e) => Resolution::Found(self.adapt(&e, expected)),
            StageHit::Ambiguous(v) => Resolution::Ambiguous(v),
        }
    }

    fn select(
        &self,
        candidates: &[Arc<SymbolEntry>],
        expected: EntryKind,
        _cross_unit: bool,
    ) -> StageHit {
        let direct: Vec<_> = candidates.iter().filter(|e| e.kind == expected).cloned().collect();
        match direct.len() {
            1 => return StageHit::Direct(direct.into_iter().next().unwrap()),
            n if n > 1 => return StageHit::Ambiguous(direct),
            _ => {}
        }
        let adaptable: Vec<_> = candidates
            .iter()
            .filter(|e| self.adapters.contains_key(&(e.kind, expected)))
            .cloned()
            .collect();
        match adaptable.len() {
            0 => StageHit::Miss,
            1 => StageHit::Adaptable(adaptable.into_iter().next().unwrap()),
            _ => StageHit::Ambiguous(adaptable),
        }
    }

    /// Apply the registered adapter, memoized per (entry, target kind).
    fn adapt(&self, source: &Arc<SymbolEntry>, to: EntryKind) -> Arc<SymbolEntry> {
        let key = (source.id(), to);
        let mut cache = self.adapted.lock().expect("adaptation cache poisoned");
        if let Some(hit) = cache.get(&key) {
            return hit.clone();
        }
        let reg = self
            .adapters
            .get(&(source.kind, to))
            .expect("adapt called without a registered adapter");
        let mut adapted = (reg.adapt)(source);
        debug_assert_eq!(adapted.kind, to, "adapter produced wrong entry kind");
        adapted.kind = to;
        adapted.adapted_from = Some(source.clone());
        let adapted = Arc::new(adapted);
        cache.insert(key, adapted.clone());
        adapted
    }

    // ------------------------------------------------------------------
    // Phase execution
    // ------------------------------------------------------------------

    /// Run one phase over every unit: units in qualified-name order, each
    /// unit's workflows for the phase in registration order.
    pub fn run_phase(&mut self, phase: Phase) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        let names = self.unit_names();
        match phase {
            Phase::Define => {
                // Split borrow: workflows live in `languages`, the unit
                // being defined lives in `units`.
                let Workbench { languages, units, .. } = self;
                for name in names {
                    let Some(unit) = units.get_mut(&name) else { continue };
                    let Some(lang) = languages.get(&unit.language_id) else { continue };
                    for wf in lang.workflows.iter().filter(|w| w.phase == phase) {
                        if let WorkflowFn::Define(f) = &wf.run {
                            out.extend(f(unit));
                        }
                    }
                }
            }
            _ => {
                for name in names {
                    let Some(unit) = self.units.get(&name) else { continue };
                    let Some(lang) = self.languages.get(&unit.language_id) else { continue };
                    for wf in lang.workflows.iter().filter(|w| w.phase == phase) {
                        if let WorkflowFn::Analyze(f) = &wf.run {
                            out.extend(f(unit, self));
                        }
                    }
                }
            }
        }
        out
    }

    /// Run DEFINE -> RESOLVE -> CHECK -> GENERATE, where a phase only runs
    /// if no phase before it (including loading, via `prior`) produced an
    /// error. Warnings never block.
    pub fn run_pipeline(&mut self, prior: Vec<Diagnostic>) -> Vec<Diagnostic> {
        let mut all = prior;
        for phase in PHASES {
            if has_errors(&all) {
                break;
            }
            let out = self.run_phase(phase);
            all.extend(out);
        }
        all
    }
}

enum StageHit {
    Miss,
    Direct(Arc<SymbolEntry>),
    Adaptable(Arc<SymbolEntry>),
    Ambiguous(Vec<Arc<SymbolEntry>>),
}

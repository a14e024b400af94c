//! Framework tests against synthetic languages and kinds. Nothing in here
//! knows any real modeling language; that is the point.

use kernel::lex::Cursor;
use kernel::registry::{LanguageDescriptor, ParsedArtifact, Resolution};
use kernel::visitor::{ast_size, AstNode, CompositeVisitor, SkipPart, VisitorPart};
use kernel::{
    AdapterRegistration, Diagnostic, EntryKind, ModelUnit, Origin, Phase, Severity, Span,
    SymbolEntry, Visibility, Workbench, Workflow, ROOT_SCOPE,
};
use std::path::PathBuf;
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::{Arc, Mutex};

const TYPE_DEF: EntryKind = EntryKind("TypeDef");
const TYPE_REF: EntryKind = EntryKind("TypeRef");
const VALUE: EntryKind = EntryKind("Value");

fn origin(unit: &str) -> Origin {
    Origin { unit: unit.to_string(), span: Span::point(format!("{unit}.toy"), 1, 1) }
}

fn entry(unit: &str, name: &str, kind: EntryKind, vis: Visibility) -> SymbolEntry {
    SymbolEntry::new(name, kind, vis, origin(unit))
}

fn unit(qualified: &str) -> ModelUnit {
    ModelUnit::new("toy", qualified, PathBuf::from(format!("{qualified}.toy")), None)
}

fn def_to_ref_adapter() -> AdapterRegistration {
    AdapterRegistration::new(TYPE_DEF, TYPE_REF, |src| {
        SymbolEntry::new(src.name.clone(), TYPE_REF, src.visibility, src.origin.clone())
    })
}

// ---------------------------------------------------------------------
// Registration

#[test]
fn duplicate_extension_is_a_configuration_error() {
    let mut wb = Workbench::new();
    wb.register_language(toy_language("toy", "toy")).unwrap();
    let err = wb.register_language(toy_language("toy2", "toy")).unwrap_err();
    assert!(err.to_string().contains(".toy"));
}

#[test]
fn duplicate_language_id_is_a_configuration_error() {
    let mut wb = Workbench::new();
    wb.register_language(toy_language("toy", "toy")).unwrap();
    assert!(wb.register_language(toy_language("toy", "other")).is_err());
}

#[test]
fn duplicate_adapter_pair_is_a_configuration_error() {
    let mut wb = Workbench::new();
    wb.register_adapter(def_to_ref_adapter()).unwrap();
    assert!(wb.register_adapter(def_to_ref_adapter()).is_err());
}

// ---------------------------------------------------------------------
// Resolution with automatic adaptation

fn two_unit_bench() -> Workbench {
    // lib exports TypeDef `Color` and keeps TypeDef `Hidden` internal;
    // app has a local scope to resolve from.
    let mut wb = Workbench::new();
    let mut lib = unit("pkg.lib");
    lib.scopes.insert(ROOT_SCOPE, entry("pkg.lib", "Color", TYPE_DEF, Visibility::Exported)).unwrap();
    lib.scopes.insert(ROOT_SCOPE, entry("pkg.lib", "Hidden", TYPE_DEF, Visibility::Internal)).unwrap();
    wb.add_unit(lib).unwrap();
    wb.add_unit(unit("pkg.app")).unwrap();
    wb
}

#[test]
fn resolve_applies_registered_adapter_and_memoizes() {
    let mut wb = two_unit_bench();
    wb.register_adapter(def_to_ref_adapter()).unwrap();

    let first = match wb.resolve("Color", TYPE_REF, "pkg.app", ROOT_SCOPE) {
        Resolution::Found(e) => e,
        other => panic!("expected adapted entry, got {other:?}"),
    };
    assert_eq!(first.kind, TYPE_REF);
    let source = first.adapted_from.as_ref().expect("adapted entry records its source");
    assert_eq!(source.kind, TYPE_DEF);
    assert_eq!(source.origin.unit, "pkg.lib");

    // Idempotence: the identical entry object on every call.
    let second = wb.resolve("Color", TYPE_REF, "pkg.app", ROOT_SCOPE);
    assert!(Arc::ptr_eq(&first, second.found().unwrap()));

    // Non-chaining: candidates are scope-defined entries, never adapted.
    assert!(first.adapted_from.as_ref().unwrap().adapted_from.is_none());
}

#[test]
fn resolve_without_adapter_is_not_found() {
    let wb = two_unit_bench();
    assert!(matches!(wb.resolve("Color", TYPE_REF, "pkg.app", ROOT_SCOPE), Resolution::NotFound));
}

#[test]
fn unknown_name_is_not_found() {
    let mut wb = two_unit_bench();
    wb.register_adapter(def_to_ref_adapter()).unwrap();
    assert!(matches!(wb.resolve("NoSuchType", TYPE_REF, "pkg.app", ROOT_SCOPE), Resolution::NotFound));
}

#[test]
fn internal_entries_are_invisible_across_units() {
    let mut wb = two_unit_bench();
    wb.register_adapter(def_to_ref_adapter()).unwrap();
    assert!(matches!(wb.resolve("Hidden", TYPE_REF, "pkg.app", ROOT_SCOPE), Resolution::NotFound));
    // ... but visible within their own unit.
    assert!(wb.resolve("Hidden", TYPE_REF, "pkg.lib", ROOT_SCOPE).found().is_some());
}

#[test]
fn two_adaptable_candidates_in_one_scope_are_ambiguous() {
    // A port-like and a variable-like entry share a name; both kinds adapt
    // to the same expected kind.
    const PORT: EntryKind = EntryKind("PortLike");
    const VAR: EntryKind = EntryKind("VarLike");
    let mut wb = Workbench::new();
    wb.register_adapter(AdapterRegistration::new(PORT, VALUE, |s| {
        SymbolEntry::new(s.name.clone(), VALUE, s.visibility, s.origin.clone())
    }))
    .unwrap();
    wb.register_adapter(AdapterRegistration::new(VAR, VALUE, |s| {
        SymbolEntry::new(s.name.clone(), VALUE, s.visibility, s.origin.clone())
    }))
    .unwrap();
    let mut u = unit("m");
    u.scopes.insert(ROOT_SCOPE, entry("m", "x", PORT, Visibility::Internal)).unwrap();
    u.scopes.insert(ROOT_SCOPE, entry("m", "x", VAR, Visibility::Internal)).unwrap();
    wb.add_unit(u).unwrap();

    match wb.resolve("x", VALUE, "m", ROOT_SCOPE) {
        Resolution::Ambiguous(cands) => assert_eq!(cands.len(), 2),
        other => panic!("expected ambiguity, got {other:?}"),
    }
}

#[test]
fn direct_kind_match_beats_adaptation_in_the_same_scope() {
    let mut wb = Workbench::new();
    wb.register_adapter(def_to_ref_adapter()).unwrap();
    let mut u = unit("m");
    u.scopes.insert(ROOT_SCOPE, entry("m", "T", TYPE_DEF, Visibility::Internal)).unwrap();
    u.scopes.insert(ROOT_SCOPE, entry("m", "T", TYPE_REF, Visibility::Internal)).unwrap();
    wb.add_unit(u).unwrap();

    let hit = wb.resolve("T", TYPE_REF, "m", ROOT_SCOPE);
    let e = hit.found().unwrap();
    assert_eq!(e.kind, TYPE_REF);
    assert!(e.adapted_from.is_none(), "direct match must not be adapted");
}

#[test]
fn inner_scope_beats_outer_scope_regardless_of_adaptation() {
    let mut wb = Workbench::new();
    wb.register_adapter(def_to_ref_adapter()).unwrap();
    let mut u = unit("m");
    // Outer scope: direct TypeRef. Inner scope: adaptable TypeDef.
    u.scopes.insert(ROOT_SCOPE, entry("m", "T", TYPE_REF, Visibility::Internal)).unwrap();
    let inner = u.scopes.new_scope(ROOT_SCOPE, None);
    u.scopes.insert(inner, entry("m", "T", TYPE_DEF, Visibility::Internal)).unwrap();
    wb.add_unit(u).unwrap();

    let hit = wb.resolve("T", TYPE_REF, "m", inner);
    let e = hit.found().unwrap();
    assert!(e.adapted_from.is_some(), "inner adaptable candidate shadows the outer direct match");
}

#[test]
fn qualified_names_resolve_through_the_global_registry() {
    let mut wb = two_unit_bench();
    wb.register_adapter(def_to_ref_adapter()).unwrap();
    let hit = wb.resolve("pkg.lib.Color", TYPE_REF, "pkg.app", ROOT_SCOPE);
    assert!(hit.found().is_some());
}

#[test]
fn member_resolution_respects_visibility() {
    let mut wb = Workbench::new();
    let mut lib = unit("lib");
    let owner = lib
        .scopes
        .insert(ROOT_SCOPE, entry("lib", "Box", TYPE_DEF, Visibility::Exported))
        .unwrap();
    let body = lib.scopes.new_scope(ROOT_SCOPE, Some(owner.clone()));
    lib.scopes.insert(body, entry("lib", "top", VALUE, Visibility::Exported)).unwrap();
    lib.scopes.insert(body, entry("lib", "secret", VALUE, Visibility::Internal)).unwrap();
    wb.add_unit(lib).unwrap();
    wb.add_unit(unit("app")).unwrap();

    assert!(wb.resolve_member(&owner, "top", VALUE, "app").found().is_some());
    assert!(matches!(wb.resolve_member(&owner, "secret", VALUE, "app"), Resolution::NotFound));
    // Same unit sees internals.
    assert!(wb.resolve_member(&owner, "secret", VALUE, "lib").found().is_some());
}

// ---------------------------------------------------------------------
// Loading

fn toy_language(id: &str, ext: &str) -> LanguageDescriptor {
    LanguageDescriptor {
        language_id: id.to_string(),
        file_extension: ext.to_string(),
        parse: Box::new(|source, _path| ParsedArtifact {
            artifact_name: source.split_whitespace().next().map(str::to_string),
            ast: None,
            diagnostics: Vec::new(),
        }),
        workflows: Vec::new(),
    }
}

static DIR_SEQ: AtomicU32 = AtomicU32::new(0);

fn scratch_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "kernel-test-{tag}-{}-{}",
        std::process::id(),
        DIR_SEQ.fetch_add(1, Ordering::Relaxed)
    ));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn loading_an_empty_directory_yields_nothing() {
    let mut wb = Workbench::new();
    wb.register_language(toy_language("toy", "toy")).unwrap();
    let dir = scratch_dir("empty");
    let diags = kernel::load_models(&mut wb, &[dir]);
    assert!(diags.is_empty());
    assert_eq!(wb.units().count(), 0);
}

#[test]
fn unregistered_extension_is_skipped_with_a_warning() {
    let mut wb = Workbench::new();
    wb.register_language(toy_language("toy", "toy")).unwrap();
    let dir = scratch_dir("skip");
    std::fs::write(dir.join("notes.xyz"), "whatever").unwrap();
    let diags = kernel::load_models(&mut wb, &[dir]);
    assert_eq!(diags.len(), 1);
    assert_eq!(diags[0].code, "KRN0001");
    assert_eq!(diags[0].severity, Severity::Warning);
    assert_eq!(wb.units().count(), 0);
}

#[test]
fn qualified_name_clash_across_roots_keeps_the_first_root() {
    let mut wb = Workbench::new();
    wb.register_language(toy_language("toy", "toy")).unwrap();
    let first = scratch_dir("first");
    let second = scratch_dir("second");
    std::fs::create_dir_all(first.join("demo")).unwrap();
    std::fs::create_dir_all(second.join("demo")).unwrap();
    std::fs::write(first.join("demo/Types.toy"), "Types from-first").unwrap();
    std::fs::write(second.join("demo/Types.toy"), "Types from-second").unwrap();

    let diags = kernel::load_models(&mut wb, &[first.clone(), second]);
    assert_eq!(diags.len(), 1);
    assert_eq!(diags[0].code, "KRN0003");
    let unit = wb.unit("demo.Types").expect("first unit retained");
    assert!(unit.path.starts_with(&first));
}

#[test]
fn packages_derive_from_directory_structure() {
    let mut wb = Workbench::new();
    wb.register_language(toy_language("toy", "toy")).unwrap();
    let dir = scratch_dir("pkg");
    std::fs::create_dir_all(dir.join("a/b")).unwrap();
    std::fs::write(dir.join("a/b/Thing.toy"), "Thing").unwrap();
    kernel::load_models(&mut wb, &[dir]);
    assert!(wb.unit("a.b.Thing").is_some());
}

// ---------------------------------------------------------------------
// Phase execution

#[test]
fn workflows_run_in_registration_order_within_qualified_name_order() {
    let log: Arc<Mutex<Vec<String>>> = Arc::new(Mutex::new(Vec::new()));
    let mk = |tag: &'static str, log: Arc<Mutex<Vec<String>>>| {
        Workflow::define(tag, move |unit: &mut ModelUnit| {
            log.lock().unwrap().push(format!("{tag}:{}", unit.qualified_name));
            Vec::new()
        })
    };
    let mut lang = toy_language("toy", "toy");
    lang.workflows.push(mk("first", log.clone()));
    lang.workflows.push(mk("second", log.clone()));
    let mut wb = Workbench::new();
    wb.register_language(lang).unwrap();
    wb.add_unit(unit("zeta")).unwrap();
    wb.add_unit(unit("alpha")).unwrap();

    wb.run_phase(Phase::Define);
    let got = log.lock().unwrap().clone();
    assert_eq!(got, vec!["first:alpha", "second:alpha", "first:zeta", "second:zeta"]);
}

#[test]
fn pipeline_stops_at_the_first_phase_with_errors() {
    let ran_check = Arc::new(Mutex::new(false));
    let flag = ran_check.clone();
    let mut lang = toy_language("toy", "toy");
    lang.workflows.push(Workflow::define("boom", |unit: &mut ModelUnit| {
        vec![Diagnostic::error("KRN0002", Span::file_level(unit.qualified_name.as_str()), "boom")]
    }));
    lang.workflows.push(Workflow::analyze("check", Phase::Check, move |_, _| {
        *flag.lock().unwrap() = true;
        Vec::new()
    }));
    let mut wb = Workbench::new();
    wb.register_language(lang).unwrap();
    wb.add_unit(unit("m")).unwrap();

    let diags = wb.run_pipeline(Vec::new());
    assert_eq!(diags.len(), 1);
    assert!(!*ran_check.lock().unwrap(), "CHECK must not run after DEFINE errors");
}

#[test]
fn pipeline_skips_everything_when_loading_failed() {
    let ran_define = Arc::new(Mutex::new(false));
    let flag = ran_define.clone();
    let mut lang = toy_language("toy", "toy");
    lang.workflows.push(Workflow::define("define", move |_unit: &mut ModelUnit| {
        *flag.lock().unwrap() = true;
        Vec::new()
    }));
    let mut wb = Workbench::new();
    wb.register_language(lang).unwrap();
    wb.add_unit(unit("m")).unwrap();

    let parse_error = vec![Diagnostic::error("KRN0002", Span::point("m.toy", 1, 1), "unreadable")];
    let diags = wb.run_pipeline(parse_error);
    assert_eq!(diags.len(), 1, "only the prior diagnostics are reported");
    assert!(!*ran_define.lock().unwrap());
}

#[test]
fn a_phase_with_no_workflows_is_a_no_op() {
    let mut wb = Workbench::new();
    wb.register_language(toy_language("toy", "toy")).unwrap();
    wb.add_unit(unit("m")).unwrap();
    assert!(wb.run_phase(Phase::Generate).is_empty());
}

// ---------------------------------------------------------------------
// Composite visitors

#[derive(Debug)]
struct HostNode {
    children: Vec<Box<dyn AstNode>>,
}

#[derive(Debug)]
struct GuestNode;

impl AstNode for HostNode {
    fn language_id(&self) -> &'static str {
        "host"
    }
    fn as_any(&self) -> &dyn std::any::Any {
        self
    }
    fn for_each_child(&self, f: &mut dyn FnMut(&dyn AstNode)) {
        for c in &self.children {
            f(c.as_ref());
        }
    }
}

impl AstNode for GuestNode {
    fn language_id(&self) -> &'static str {
        "guest"
    }
    fn as_any(&self) -> &dyn std::any::Any {
        self
    }
    fn for_each_child(&self, _f: &mut dyn FnMut(&dyn AstNode)) {}
}

struct Recorder(&'static str);

impl VisitorPart<Vec<String>> for Recorder {
    fn enter(&mut self, node: &dyn AstNode, state: &mut Vec<String>) {
        state.push(format!("{}@{}", self.0, node.language_id()));
    }
}

fn embedded_tree() -> HostNode {
    HostNode {
        children: vec![
            Box::new(GuestNode),
            Box::new(HostNode { children: vec![Box::new(GuestNode)] }),
        ],
    }
}

#[test]
fn composite_visitor_switches_parts_at_language_boundaries() {
    let tree = embedded_tree();
    let mut visitor: CompositeVisitor<Vec<String>> = CompositeVisitor::new()
        .with_part("host", Recorder("H"))
        .with_part("guest", Recorder("G"));
    let mut log = Vec::new();
    visitor.walk(&tree, &mut log).unwrap();
    assert_eq!(log, vec!["H@host", "G@guest", "H@host", "G@guest"]);
    assert_eq!(visitor.visited(), ast_size(&tree));
}

#[test]
fn default_part_handles_unmapped_languages() {
    let tree = embedded_tree();
    let mut visitor: CompositeVisitor<Vec<String>> =
        CompositeVisitor::new().with_part("host", Recorder("H")).with_default(SkipPart);
    let mut log = Vec::new();
    visitor.walk(&tree, &mut log).unwrap();
    assert_eq!(log, vec!["H@host", "H@host"], "guest nodes skipped, traversal continues");
    assert_eq!(visitor.visited(), 4, "skipped nodes still count as visited");
}

#[test]
fn missing_part_without_default_names_the_language() {
    let tree = embedded_tree();
    let mut visitor: CompositeVisitor<Vec<String>> =
        CompositeVisitor::new().with_part("host", Recorder("H"));
    let err = visitor.walk(&tree, &mut Vec::new()).unwrap_err();
    assert_eq!(err.language_id, "guest");
}

#[test]
fn single_language_composite_equals_the_part_alone() {
    let tree = HostNode { children: vec![Box::new(HostNode { children: vec![] })] };
    let mut composite: CompositeVisitor<Vec<String>> =
        CompositeVisitor::new().with_part("host", Recorder("H"));
    let mut a = Vec::new();
    composite.walk(&tree, &mut a).unwrap();

    let mut alone = Recorder("H");
    let mut b = Vec::new();
    fn walk_direct(n: &dyn AstNode, p: &mut Recorder, out: &mut Vec<String>) {
        p.enter(n, out);
        n.for_each_child(&mut |c| walk_direct(c, p, out));
    }
    walk_direct(&tree, &mut alone, &mut b);
    assert_eq!(a, b);
}

// ---------------------------------------------------------------------
// Lexing

#[test]
fn lexer_handles_comments_strings_and_compound_punctuation() {
    let mut cur = Cursor::from_source(
        "t",
        "// line\n/* block */ connect a.b -> c; x <= \"he\\\"y\" 42",
    )
    .unwrap();
    let mut kinds = Vec::new();
    while let Some(t) = cur.next() {
        kinds.push(t.to_string());
    }
    assert_eq!(kinds, vec!["connect", "a", ".", "b", "->", "c", ";", "x", "<=", "\"he\"y\"", "42"]);
}

#[test]
fn diagnostics_sort_by_file_line_column_code() {
    let mut diags = vec![
        Diagnostic::error("ZZ0001", Span::point("b", 1, 1), "later file"),
        Diagnostic::error("AA0002", Span::point("a", 2, 1), "later line"),
        Diagnostic::error("AA0001", Span::point("a", 2, 1), "same spot, smaller code"),
        Diagnostic::error("AA0003", Span::point("a", 1, 9), "earlier line"),
    ];
    kernel::sort_diagnostics(&mut diags);
    let codes: Vec<_> = diags.iter().map(|d| d.code).collect();
    assert_eq!(codes, vec!["AA0003", "AA0001", "AA0002", "ZZ0001"]);
}

#[test]
fn explicit_imports_restrict_stage_two() {
    let mut wb = Workbench::new();
    wb.register_adapter(def_to_ref_adapter()).unwrap();
    let mut lib_a = unit("liba");
    lib_a.scopes.insert(ROOT_SCOPE, entry("liba", "T", TYPE_DEF, Visibility::Exported)).unwrap();
    let mut lib_b = unit("libb");
    lib_b.scopes.insert(ROOT_SCOPE, entry("libb", "T", TYPE_DEF, Visibility::Exported)).unwrap();
    wb.add_unit(lib_a).unwrap();
    wb.add_unit(lib_b).unwrap();

    // Importing everything makes the two candidates ambiguous...
    wb.add_unit(unit("open")).unwrap();
    assert!(matches!(wb.resolve("T", TYPE_REF, "open", ROOT_SCOPE), Resolution::Ambiguous(_)));

    // ...while an explicit import list narrows resolution to one unit.
    let mut narrow = unit("narrow");
    narrow.scopes.scope_mut(ROOT_SCOPE).imports.push("liba".to_string());
    wb.add_unit(narrow).unwrap();
    let hit = wb.resolve("T", TYPE_REF, "narrow", ROOT_SCOPE);
    let e = hit.found().expect("explicit import resolves uniquely");
    assert_eq!(e.adapted_from.as_ref().unwrap().origin.unit, "liba");
}

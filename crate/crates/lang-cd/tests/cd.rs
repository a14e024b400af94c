//! Parsing, symbol definition, and context conditions for class diagrams.
//! Only the kernel is present; no other language module exists here.

use kernel::registry::{LanguageDescriptor, ParsedArtifact};
use kernel::{ModelUnit, Phase, Severity, Workbench, Workflow, ROOT_SCOPE};
use lang_cd::{
    check_cd, define_cd_symbols, parse_cd, CdElement, CdModel, CD_ENUM_CONSTANT, CD_TYPE,
};
use proptest::prelude::*;
use std::path::PathBuf;

fn unit_from(source: &str) -> (ModelUnit, Vec<kernel::Diagnostic>) {
    let parsed = parse_cd("Test.cd", source);
    let name = parsed.model.as_ref().map(|m| m.name.value.clone()).unwrap_or_default();
    let ast: Option<Box<dyn kernel::AstNode>> = match parsed.model {
        Some(m) => Some(Box::new(m)),
        None => None,
    };
    (ModelUnit::new("cd", name, PathBuf::from("Test.cd"), ast), parsed.diagnostics)
}

fn checked(source: &str) -> Vec<kernel::Diagnostic> {
    let (mut unit, mut diags) = unit_from(source);
    diags.extend(define_cd_symbols(&mut unit));
    let mut wb = Workbench::new();
    let qname = unit.qualified_name.clone();
    wb.add_unit(unit).unwrap();
    diags.extend(check_cd(wb.unit(&qname).unwrap(), &wb));
    diags
}

// ---------------------------------------------------------------------
// Parsing

#[test]
fn enum_with_four_constants() {
    let parsed = parse_cd(
        "Types.cd",
        "classdiagram Types { enum MotorCmd { FORWARD, BACKWARD, TURN_LEFT, STOP; } }",
    );
    assert!(parsed.diagnostics.is_empty());
    let model = parsed.model.unwrap();
    assert_eq!(model.elements.len(), 1);
    match &model.elements[0] {
        CdElement::Enum(e) => {
            assert_eq!(e.name.value, "MotorCmd");
            let names: Vec<&str> = e.constants.iter().map(|c| c.value.as_str()).collect();
            assert_eq!(names, vec!["FORWARD", "BACKWARD", "TURN_LEFT", "STOP"]);
        }
        _ => panic!("expected an enum"),
    }
}

#[test]
fn empty_diagram_is_fine() {
    let parsed = parse_cd("T.cd", "classdiagram T { }");
    assert!(parsed.diagnostics.is_empty());
    assert!(parsed.model.unwrap().elements.is_empty());
}

#[test]
fn unknown_field_type_parses_clean_and_fails_check() {
    let source = "classdiagram T { class A { B b; } }";
    let parsed = parse_cd("T.cd", source);
    assert!(parsed.diagnostics.is_empty(), "CD0002 is a CHECK condition, not a parse error");
    let diags = checked(source);
    assert_eq!(diags.len(), 1);
    assert_eq!(diags[0].code, "CD0002");
}

#[test]
fn parse_recovers_at_element_granularity() {
    let parsed = parse_cd(
        "T.cd",
        "classdiagram T { class Broken { int ; } enum Ok { A; } }",
    );
    assert_eq!(parsed.diagnostics.len(), 1);
    assert_eq!(parsed.diagnostics[0].code, "CD0005");
    let model = parsed.model.unwrap();
    assert_eq!(model.elements.len(), 1, "the enum after the broken class still parses");
}

#[test]
fn comments_are_ignored() {
    let parsed = parse_cd(
        "T.cd",
        "// heading\nclassdiagram T { /* body */ enum E { A; } }",
    );
    assert!(parsed.diagnostics.is_empty());
    assert_eq!(parsed.model.unwrap().elements.len(), 1);
}

// ---------------------------------------------------------------------
// Symbols

#[test]
fn symbols_per_definition() {
    let (mut unit, _) = unit_from(
        "classdiagram Types { enum MotorCmd { FORWARD, BACKWARD, TURN_LEFT, STOP; } }",
    );
    define_cd_symbols(&mut unit);
    let root = unit.scopes.scope(ROOT_SCOPE);
    let types: Vec<_> = root.entries().iter().filter(|e| e.kind == CD_TYPE).collect();
    let constants: Vec<_> = root.entries().iter().filter(|e| e.kind == CD_ENUM_CONSTANT).collect();
    assert_eq!(types.len(), 1);
    assert_eq!(types[0].attr("type-kind"), Some("enum"));
    assert_eq!(constants.len(), 4);
    assert_eq!(constants[0].name, "MotorCmd.FORWARD");
    assert_eq!(constants[0].attr("enum"), Some("MotorCmd"));
}

#[test]
fn symbol_count_equals_definition_count() {
    let (mut unit, _) = unit_from(
        "classdiagram T { class A { int x; } class B { } enum E { ON, OFF; } }",
    );
    define_cd_symbols(&mut unit);
    let model = unit.ast_as::<CdModel>().unwrap();
    let defs = model.elements.len();
    let types =
        unit.scopes.scope(ROOT_SCOPE).entries().iter().filter(|e| e.kind == CD_TYPE).count();
    assert_eq!(types, defs);
}

#[test]
fn class_fields_become_internal_entries_with_primitive_types() {
    let (mut unit, _) = unit_from("classdiagram T { class A { int x; } }");
    define_cd_symbols(&mut unit);
    let class_entry = unit.scopes.lookup(ROOT_SCOPE, "A", CD_TYPE).unwrap();
    let body = unit.scopes.scope_owned_by(class_entry.id()).unwrap();
    let fields = unit.scopes.scope(body).entries();
    assert_eq!(fields.len(), 1);
    assert_eq!(fields[0].attr("type"), Some("int"));
    assert!(!fields[0].is_exported());
}

#[test]
fn duplicate_classes_are_cd0001() {
    let diags = checked("classdiagram T { class A { } class A { } }");
    assert_eq!(diags.len(), 1);
    assert_eq!(diags[0].code, "CD0001");
    assert_eq!(diags[0].severity, Severity::Error);
}

// ---------------------------------------------------------------------
// Checks

#[test]
fn clean_model_checks_clean() {
    assert!(checked("classdiagram T { enum E { A, B; } class C { int x; E e; } }").is_empty());
}

#[test]
fn field_typed_by_sibling_class_is_fine() {
    assert!(checked("classdiagram T { class A { B b; } class B { } }").is_empty());
}

#[test]
fn duplicate_field_is_cd0003() {
    let diags = checked("classdiagram T { class A { int x; boolean x; } }");
    assert_eq!(diags.len(), 1);
    assert_eq!(diags[0].code, "CD0003");
}

#[test]
fn duplicate_enum_constant_is_cd0004() {
    let diags = checked("classdiagram T { enum E { A, A; } }");
    assert_eq!(diags.len(), 1);
    assert_eq!(diags[0].code, "CD0004");
}

// ---------------------------------------------------------------------
// Workflow registration against the bare kernel

fn cd_language() -> LanguageDescriptor {
    LanguageDescriptor {
        language_id: "cd".into(),
        file_extension: "cd".into(),
        parse: Box::new(|source, path| {
            let parsed = parse_cd(&path.display().to_string(), source);
            ParsedArtifact {
                artifact_name: parsed.model.as_ref().map(|m| m.name.value.clone()),
                ast: parsed.model.map(|m| Box::new(m) as Box<dyn kernel::AstNode>),
                diagnostics: parsed.diagnostics,
            }
        }),
        workflows: vec![
            Workflow::define("cd symbols", define_cd_symbols),
            Workflow::analyze("cd checks", Phase::Check, check_cd),
        ],
    }
}

#[test]
fn the_language_runs_standalone_on_the_kernel() {
    let dir = std::env::temp_dir().join(format!("cd-standalone-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("Types.cd"), "classdiagram Types { enum E { A, B; } }").unwrap();

    let mut wb = Workbench::new();
    wb.register_language(cd_language()).unwrap();
    let load = kernel::load_models(&mut wb, &[dir]);
    let diags = wb.run_pipeline(load);
    assert!(diags.is_empty(), "unexpected diagnostics: {diags:?}");
    assert!(wb.unit("Types").is_some());
}

// ---------------------------------------------------------------------
// Round-trip property

fn ident() -> impl Strategy<Value = String> {
    "[A-Z][a-zA-Z0-9]{0,6}"
}

fn lower_ident() -> impl Strategy<Value = String> {
    "[a-z][a-zA-Z0-9]{0,6}"
}

proptest! {
    #[test]
    fn unparse_parse_fixpoint(
        name in ident(),
        class_names in proptest::collection::btree_set(ident(), 0..4),
        enum_name in ident(),
        field_names in proptest::collection::btree_set(lower_ident(), 0..4),
    ) {
        let fields: Vec<String> =
            field_names.iter().map(|f| format!("int {f};")).collect();
        let classes: Vec<String> = class_names
            .iter()
            .filter(|c| **c != enum_name)
            .map(|c| format!("class {c} {{ {} }}", fields.join(" ")))
            .collect();
        let source = format!(
            "classdiagram {name} {{ {} enum {enum_name} {{ ON, OFF; }} }}",
            classes.join(" ")
        );
        let first = parse_cd("gen.cd", &source);
        prop_assert!(first.diagnostics.is_empty());
        let model = first.model.unwrap();
        let normalized = model.unparse();
        let second = parse_cd("gen.cd", &normalized);
        prop_assert!(second.diagnostics.is_empty());
        // The normalized form is a fixpoint.
        prop_assert_eq!(second.model.unwrap().unparse(), normalized);
    }
}

#[test]
fn double_is_a_legal_field_type() {
    assert!(checked("classdiagram T { class A { double ratio; } }").is_empty());
}

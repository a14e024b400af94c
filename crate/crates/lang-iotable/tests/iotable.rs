//! Table tests with a stand-in expression language, mirroring the
//! automaton suite: the table must not care what its guards are.

use kernel::lex::{Cursor, ParseFailure, TokenKind};
use kernel::{Diagnostic, Severity};
use lang_iotable::{
    check_iotable, parse_iotable, step_iotable, IoTable, RowContext, RowEval, RowTargetInfo,
};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq)]
enum MiniExpr {
    True,
    False,
    Var(String),
    Num(i64),
}

impl kernel::AstNode for MiniExpr {
    fn language_id(&self) -> &'static str {
        "mini"
    }
    fn as_any(&self) -> &dyn std::any::Any {
        self
    }
    fn for_each_child(&self, _f: &mut dyn FnMut(&dyn kernel::AstNode)) {}
}

fn parse_mini(cur: &mut Cursor) -> Result<MiniExpr, Vec<Diagnostic>> {
    parse_mini_inner(cur).map_err(|f| vec![Diagnostic::error("MIN0001", f.span, f.message)])
}

fn parse_mini_inner(cur: &mut Cursor) -> Result<MiniExpr, ParseFailure> {
    let tok = cur.next().ok_or_else(|| ParseFailure {
        span: kernel::Span::point("Test", 1, 1),
        message: "expected a mini expression".into(),
    })?;
    match tok.kind {
        TokenKind::Int => Ok(MiniExpr::Num(tok.text.parse().unwrap())),
        TokenKind::Ident if tok.text == "true" => Ok(MiniExpr::True),
        TokenKind::Ident if tok.text == "false" => Ok(MiniExpr::False),
        TokenKind::Ident => Ok(MiniExpr::Var(tok.text)),
        _ => Err(ParseFailure {
            span: tok.span.clone(),
            message: format!("bad mini expression `{tok}`"),
        }),
    }
}

fn parse(source: &str) -> Result<IoTable<MiniExpr>, Vec<Diagnostic>> {
    let mut cur = Cursor::from_source("Test", source).unwrap();
    parse_iotable(&mut cur, &parse_mini)
}

struct MiniHost {
    names: BTreeMap<String, (String, bool)>,
}

impl MiniHost {
    fn new(names: &[(&str, &str, bool)]) -> Self {
        MiniHost {
            names: names.iter().map(|(n, t, w)| (n.to_string(), (t.to_string(), *w))).collect(),
        }
    }
}

impl RowContext<MiniExpr> for MiniHost {
    fn typecheck(&self, expr: &MiniExpr, sink: &mut Vec<Diagnostic>) -> Option<String> {
        match expr {
            MiniExpr::True | MiniExpr::False => Some("boolean".into()),
            MiniExpr::Num(_) => Some("int".into()),
            MiniExpr::Var(v) => match self.names.get(v) {
                Some((t, _)) => Some(t.clone()),
                None => {
                    sink.push(Diagnostic::error(
                        "EXP0001",
                        kernel::Span::point("Test", 1, 1),
                        format!("unknown name `{v}`"),
                    ));
                    None
                }
            },
        }
    }
    fn assign_target(&self, name: &str) -> RowTargetInfo {
        match self.names.get(name) {
            Some((t, true)) => RowTargetInfo::Assignable(t.clone()),
            Some((_, false)) => RowTargetInfo::NotAssignable,
            None => RowTargetInfo::Unresolved,
        }
    }
    fn is_literally_true(&self, expr: &MiniExpr) -> bool {
        *expr == MiniExpr::True
    }
}

fn host() -> MiniHost {
    MiniHost::new(&[("go", "boolean", false), ("alarm", "boolean", true), ("n", "int", true)])
}

fn codes_of(diags: &[Diagnostic]) -> Vec<&str> {
    diags.iter().map(|d| d.code).collect()
}

// ---------------------------------------------------------------------
// Parsing

#[test]
fn rows_parse_in_order() {
    let t = parse("{ row [ go ] / { alarm = true }; row [ true ] / { alarm = false }; }").unwrap();
    assert_eq!(t.rows.len(), 2);
    assert_eq!(t.rows[0].effects.len(), 1);
}

#[test]
fn single_row_with_empty_effects() {
    let t = parse("{ row [ true ] / { }; }").unwrap();
    assert_eq!(t.rows.len(), 1);
    assert!(t.rows[0].effects.is_empty());
}

#[test]
fn empty_table_parses_and_fails_check() {
    let t = parse("{ }").unwrap();
    assert!(t.rows.is_empty());
    assert_eq!(codes_of(&check_iotable(&t, &host())), vec!["TBL0001"]);
}

#[test]
fn broken_rows_recover_to_the_next_row() {
    let errs = parse("{ row [ true / { }; row [ true ] / { }; }");
    // The first row is broken (missing `]`); parsing reports it.
    assert!(errs.is_err());
    let diags = errs.unwrap_err();
    assert!(diags.iter().all(|d| d.code == "TBL0007"));
}

// ---------------------------------------------------------------------
// Checks

#[test]
fn clean_table() {
    let t = parse("{ row [ go ] / { alarm = true, n = 3 }; row [ true ] / { alarm = false }; }")
        .unwrap();
    assert!(check_iotable(&t, &host()).is_empty());
}

#[test]
fn non_boolean_guard_is_tbl0002() {
    let t = parse("{ row [ 41 ] / { }; row [ true ] / { }; }").unwrap();
    assert_eq!(codes_of(&check_iotable(&t, &host())), vec!["TBL0002"]);
}

#[test]
fn unwritable_target_is_tbl0003() {
    let t = parse("{ row [ true ] / { go = true }; }").unwrap();
    assert_eq!(codes_of(&check_iotable(&t, &host())), vec!["TBL0003"]);
}

#[test]
fn effect_type_mismatch_is_tbl0004() {
    let t = parse("{ row [ true ] / { alarm = 1 }; }").unwrap();
    assert_eq!(codes_of(&check_iotable(&t, &host())), vec!["TBL0004"]);
}

#[test]
fn double_write_in_one_row_is_tbl0005() {
    let t = parse("{ row [ true ] / { alarm = true, alarm = false }; }").unwrap();
    assert_eq!(codes_of(&check_iotable(&t, &host())), vec!["TBL0005"]);
}

#[test]
fn non_literal_final_guard_warns_tbl0006() {
    let t = parse("{ row [ go ] / { }; }").unwrap();
    let diags = check_iotable(&t, &host());
    assert_eq!(codes_of(&diags), vec!["TBL0006"]);
    assert_eq!(diags[0].severity, Severity::Warning);
}

// ---------------------------------------------------------------------
// Stepping

struct MiniEval {
    values: BTreeMap<String, i64>,
}

impl RowEval<MiniExpr> for MiniEval {
    type Value = i64;
    type Fault = String;
    fn eval_guard(&self, guard: &MiniExpr) -> Result<bool, String> {
        match guard {
            MiniExpr::True => Ok(true),
            MiniExpr::False => Ok(false),
            MiniExpr::Var(v) => {
                self.values.get(v).map(|x| *x != 0).ok_or_else(|| format!("missing {v}"))
            }
            MiniExpr::Num(_) => Err("int guard".into()),
        }
    }
    fn eval(&self, expr: &MiniExpr) -> Result<i64, String> {
        match expr {
            MiniExpr::Num(n) => Ok(*n),
            MiniExpr::True => Ok(1),
            MiniExpr::False => Ok(0),
            MiniExpr::Var(v) => self.values.get(v).copied().ok_or_else(|| format!("missing {v}")),
        }
    }
}

fn eval_host(pairs: &[(&str, i64)]) -> MiniEval {
    MiniEval { values: pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect() }
}

#[test]
fn first_matching_row_fires_exclusively() {
    let t = parse(
        "{ row [ a ] / { n = 1 }; row [ b ] / { n = 2 }; row [ true ] / { n = 3 }; }",
    )
    .unwrap();
    // Both a and b hold: only the first row fires.
    let effects = step_iotable(&t, &eval_host(&[("a", 1), ("b", 1)])).ok().unwrap();
    assert_eq!(effects.len(), 1);
    assert_eq!((effects[0].target.as_str(), effects[0].value), ("n", 1));
    // Neither holds: the default row fires.
    let effects = step_iotable(&t, &eval_host(&[("a", 0), ("b", 0)])).ok().unwrap();
    assert_eq!((effects[0].target.as_str(), effects[0].value), ("n", 3));
}

#[test]
fn all_false_guards_stutter() {
    let t = parse("{ row [ false ] / { n = 1 }; row [ false ] / { n = 2 }; }").unwrap();
    let effects = step_iotable(&t, &eval_host(&[])).ok().unwrap();
    assert!(effects.is_empty());
}

#[test]
fn effects_see_the_pre_step_valuation() {
    let t = parse("{ row [ true ] / { n = m, m = n }; }").unwrap();
    let effects = step_iotable(
        &t,
        &eval_host(&[("n", 7), ("m", 9)]),
    )
    .ok()
    .unwrap();
    let got: Vec<(String, i64)> = effects.iter().map(|e| (e.target.clone(), e.value)).collect();
    assert_eq!(got, vec![("n".to_string(), 9), ("m".to_string(), 7)]);
}

#[test]
fn guard_fault_carries_the_row_span() {
    let t = parse("{ row [ mystery ] / { }; }").unwrap();
    let err = match step_iotable(&t, &eval_host(&[])) {
        Err(e) => e,
        Ok(_) => panic!("expected a fault"),
    };
    assert_eq!(err.fault, "missing mystery");
}

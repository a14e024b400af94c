//! Automaton tests with a deliberately tiny stand-in expression language:
//! the automaton must work with any embedded language, so these tests use
//! one that is obviously not the real one.

use kernel::lex::{Cursor, ParseFailure};
use kernel::{Diagnostic, Severity};
use lang_automaton::{
    check_automaton, parse_automaton, step_automaton, Automaton, BehaviorContext, StepHost,
    TargetInfo,
};
use std::collections::BTreeMap;

/// Minimal embedded expression language: literals, variables, and `v == k`
/// comparisons over integers.
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
    let tok = cur
        .next()
        .ok_or_else(|| ParseFailure { span: Cursor::new("x", vec![]).here(), message: "eof".into() })?;
    match tok.kind {
        kernel::lex::TokenKind::Int => Ok(MiniExpr::Num(tok.text.parse().unwrap())),
        kernel::lex::TokenKind::Ident if tok.text == "true" => Ok(MiniExpr::True),
        kernel::lex::TokenKind::Ident if tok.text == "false" => Ok(MiniExpr::False),
        kernel::lex::TokenKind::Ident => Ok(MiniExpr::Var(tok.text)),
        _ => Err(ParseFailure { span: tok.span.clone(), message: format!("bad mini expression `{tok}`") }),
    }
}

fn parse(source: &str) -> Result<Automaton<MiniExpr>, Vec<Diagnostic>> {
    let mut cur = Cursor::from_source("Test", source).unwrap();
    parse_automaton(&mut cur, &parse_mini)
}

// ---------------------------------------------------------------------
// Parsing

#[test]
fn minimal_automaton() {
    let a = parse("{ state A; initial A; }").unwrap();
    assert_eq!(a.states.len(), 1);
    assert_eq!(a.initials.len(), 1);
    assert!(a.transitions.is_empty());
}

#[test]
fn guards_and_actions_are_both_optional() {
    let a = parse(
        "{ state A, B; initial A / { x = true }; \
           A -> B [ true ] / { x = false }; \
           B -> A [ false ]; \
           A -> A; }",
    )
    .unwrap();
    assert_eq!(a.states.len(), 2);
    assert_eq!(a.transitions.len(), 3);
    assert!(a.transitions[0].guard.is_some() && !a.transitions[0].actions.is_empty());
    assert!(a.transitions[1].guard.is_some() && a.transitions[1].actions.is_empty());
    assert!(a.transitions[2].guard.is_none() && a.transitions[2].actions.is_empty());
    assert_eq!(a.initials[0].outputs.len(), 1);
}

#[test]
fn syntax_errors_carry_the_automaton_code() {
    let errs = parse("{ state ; }").unwrap_err();
    assert!(errs.iter().all(|d| d.code == "AUT0009"));
}

// ---------------------------------------------------------------------
// Checks

struct MiniHost {
    /// name -> (type, assignable)
    names: BTreeMap<String, (String, bool)>,
}

impl MiniHost {
    fn new(names: &[(&str, &str, bool)]) -> Self {
        MiniHost {
            names: names
                .iter()
                .map(|(n, t, w)| (n.to_string(), (t.to_string(), *w)))
                .collect(),
        }
    }
}

impl BehaviorContext<MiniExpr> for MiniHost {
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
    fn assign_target(&self, name: &str) -> TargetInfo {
        match self.names.get(name) {
            Some((t, true)) => TargetInfo::Assignable(t.clone()),
            Some((_, false)) => TargetInfo::NotAssignable,
            None => TargetInfo::Unresolved,
        }
    }
    fn is_literally_true(&self, expr: &MiniExpr) -> bool {
        *expr == MiniExpr::True
    }
}

fn host() -> MiniHost {
    MiniHost::new(&[
        ("bumper", "boolean", false),
        ("motor", "boolean", true),
        ("count", "int", true),
    ])
}

fn codes_of(diags: &[Diagnostic]) -> Vec<&str> {
    diags.iter().map(|d| d.code).collect()
}

#[test]
fn clean_automaton_checks_clean() {
    let a = parse("{ state A, B; initial A / { motor = false }; A -> B [ bumper ] / { motor = true, count = 3 }; B -> A; }")
        .unwrap();
    let diags = check_automaton(&a, &host());
    assert!(diags.is_empty(), "{diags:?}");
}

#[test]
fn duplicate_state_is_aut0001() {
    let a = parse("{ state A, A; initial A; }").unwrap();
    assert_eq!(codes_of(&check_automaton(&a, &host())), vec!["AUT0001"]);
}

#[test]
fn undeclared_initial_is_aut0002() {
    let a = parse("{ state A; initial B; }").unwrap();
    assert_eq!(codes_of(&check_automaton(&a, &host())), vec!["AUT0002"]);
}

#[test]
fn initial_clause_count_is_aut0003() {
    let zero = parse("{ state A; }").unwrap();
    assert_eq!(codes_of(&check_automaton(&zero, &host())), vec!["AUT0003"]);
    let two = parse("{ state A; initial A; initial A; }").unwrap();
    assert_eq!(codes_of(&check_automaton(&two, &host())), vec!["AUT0003"]);
}

#[test]
fn undeclared_transition_state_is_aut0004() {
    let a = parse("{ state A; initial A; A -> B; }").unwrap();
    assert_eq!(codes_of(&check_automaton(&a, &host())), vec!["AUT0004"]);
}

#[test]
fn non_boolean_guard_is_aut0005() {
    let a = parse("{ state A; initial A; A -> A [ 42 ]; }").unwrap();
    assert_eq!(codes_of(&check_automaton(&a, &host())), vec!["AUT0005"]);
}

#[test]
fn assigning_an_input_is_aut0006() {
    let a = parse("{ state A; initial A; A -> A / { bumper = true }; }").unwrap();
    assert_eq!(codes_of(&check_automaton(&a, &host())), vec!["AUT0006"]);
}

#[test]
fn type_mismatch_in_assignment_is_aut0007() {
    let a = parse("{ state A; initial A; A -> A / { count = true }; }").unwrap();
    assert_eq!(codes_of(&check_automaton(&a, &host())), vec!["AUT0007"]);
}

#[test]
fn overlapping_trivial_guards_warn_aut0008() {
    let a = parse("{ state A; initial A; A -> A; A -> A [ true ]; }").unwrap();
    let diags = check_automaton(&a, &host());
    assert_eq!(codes_of(&diags), vec!["AUT0008"]);
    assert_eq!(diags[0].severity, Severity::Warning);
}

// ---------------------------------------------------------------------
// Stepping

/// Evaluates mini expressions over an integer/boolean valuation.
struct MiniEval {
    values: BTreeMap<String, i64>,
}

impl StepHost<MiniExpr> for MiniEval {
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
fn first_matching_transition_fires() {
    let a = parse("{ state A, B, C; initial A; A -> B [ go ]; A -> C; }").unwrap();
    let out = step_automaton(&a, "A", &eval_host(&[("go", 1)])).ok().unwrap();
    assert_eq!(out.next_state, "B");
    assert_eq!(out.fired, Some(0));
    // With the guard false, the unguarded later transition fires instead.
    let out = step_automaton(&a, "A", &eval_host(&[("go", 0)])).ok().unwrap();
    assert_eq!(out.next_state, "C");
    assert_eq!(out.fired, Some(1));
}

#[test]
fn no_match_is_a_stutter() {
    let a = parse("{ state A, B; initial A; A -> B [ go ]; }").unwrap();
    let out = step_automaton(&a, "A", &eval_host(&[("go", 0)])).ok().unwrap();
    assert_eq!(out.next_state, "A");
    assert!(out.effects.is_empty());
    assert_eq!(out.fired, None);
}

#[test]
fn an_automaton_without_transitions_always_stutters() {
    let a = parse("{ state A; initial A; }").unwrap();
    let out = step_automaton(&a, "A", &eval_host(&[])).ok().unwrap();
    assert_eq!((out.next_state.as_str(), out.fired), ("A", None));
}

#[test]
fn assignments_are_simultaneous() {
    // x = y, y = x swaps: both right-hand sides see the pre-step values.
    let a = parse("{ state A; initial A; A -> A / { x = y, y = x }; }").unwrap();
    let out = step_automaton(&a, "A", &eval_host(&[("x", 1), ("y", 2)])).ok().unwrap();
    let got: Vec<(String, i64)> =
        out.effects.iter().map(|e| (e.target.clone(), e.value)).collect();
    assert_eq!(got, vec![("x".to_string(), 2), ("y".to_string(), 1)]);
}

#[test]
fn guard_fault_reports_the_transition() {
    let a = parse("{ state A; initial A; A -> A [ missing ]; }").unwrap();
    let err = match step_automaton(&a, "A", &eval_host(&[])) {
        Err(e) => e,
        Ok(_) => panic!("expected a fault"),
    };
    assert_eq!(err.fault, "missing missing");
}

#[test]
fn declaration_order_decides_overlaps() {
    // Negative control: permuting two overlapping transitions changes the
    // outcome.
    let ab = parse("{ state A, B, C; initial A; A -> B; A -> C; }").unwrap();
    let ac = parse("{ state A, B, C; initial A; A -> C; A -> B; }").unwrap();
    let host = eval_host(&[]);
    assert_eq!(step_automaton(&ab, "A", &host).ok().unwrap().next_state, "B");
    assert_eq!(step_automaton(&ac, "A", &host).ok().unwrap().next_state, "C");
}

#[test]
fn disjoint_guards_are_permutation_invariant() {
    // Guards `mode == k` are mutually exclusive, so declaration order must
    // not matter. Checked over every rotation for a family of valuations.
    let orders = [
        "{ state A, B, C, D; initial A; A -> B [ m0 ]; A -> C [ m1 ]; A -> D [ m2 ]; }",
        "{ state A, B, C, D; initial A; A -> C [ m1 ]; A -> D [ m2 ]; A -> B [ m0 ]; }",
        "{ state A, B, C, D; initial A; A -> D [ m2 ]; A -> B [ m0 ]; A -> C [ m1 ]; }",
    ];
    let automata: Vec<_> = orders.iter().map(|s| parse(s).unwrap()).collect();
    for selected in 0..3 {
        let vals: Vec<(&str, i64)> = (0..3)
            .map(|i| (["m0", "m1", "m2"][i], (i == selected) as i64))
            .collect();
        let host = eval_host(&vals);
        let mut outcomes = Vec::new();
        for a in &automata {
            outcomes.push(step_automaton(a, "A", &host).ok().unwrap().next_state);
        }
        assert!(outcomes.windows(2).all(|w| w[0] == w[1]), "{outcomes:?}");
    }
}

//! Parser for the automaton body. The leading `automaton` keyword has
//! already been consumed by the host when this runs; the expression slot
//! must be bound or the host would not have dispatched here.
//!
//! Grammar:
//!   `{ state A, B; initial A (/ { a = e, ... })? ;
//!      (A -> B ( [ e ] )? ( / { a = e, ... } )? ;)* }`

use crate::ast::{Assignment, Automaton, InitialClause, Transition};
use crate::codes;
use kernel::lex::{Cursor, ParseFailure};
use kernel::{Diagnostic, Spanned};

/// The embedded expression parser bound at the guard/assignment slots.
/// Failures come back as the expression language's own diagnostics.
pub type ExprSlot<'a, E> = &'a dyn Fn(&mut Cursor) -> Result<E, Vec<Diagnostic>>;

/// An element parse either fails in automaton syntax or inside an
/// embedded expression (which already produced its diagnostics).
enum ElemError {
    Own(ParseFailure),
    Slot(Vec<Diagnostic>),
}

impl From<ParseFailure> for ElemError {
    fn from(f: ParseFailure) -> Self {
        ElemError::Own(f)
    }
}

pub fn parse_automaton<E>(
    cur: &mut Cursor,
    expr_slot: ExprSlot<'_, E>,
) -> Result<Automaton<E>, Vec<Diagnostic>> {
    let open = cur
        .expect_punct("{")
        .map_err(|f| vec![Diagnostic::error(codes::AUT0009, f.span, f.message)])?;
    let mut automaton = Automaton {
        states: Vec::new(),
        initials: Vec::new(),
        transitions: Vec::new(),
        span: open.span.clone(),
    };
    let mut diags = Vec::new();
    loop {
        if cur.at_punct("}") {
            break;
        }
        if cur.at_end() {
            diags.push(Diagnostic::error(
                codes::AUT0009,
                cur.here(),
                "expected `}` to close the automaton",
            ));
            break;
        }
        let element_start = cur.pos();
        let result: Result<(), ElemError> = if cur.at_ident("state") {
            parse_states(cur, &mut automaton).map_err(ElemError::from)
        } else if cur.at_ident("initial") {
            parse_initial(cur, expr_slot, &mut automaton)
        } else {
            parse_transition(cur, expr_slot, &mut automaton)
        };
        match result {
            Ok(()) => {}
            Err(ElemError::Own(f)) => {
                diags.push(Diagnostic::error(codes::AUT0009, f.span, f.message));
                cur.recover_element(element_start, &["state", "initial"]);
                cur.eat_punct(";");
            }
            Err(ElemError::Slot(slot_diags)) => {
                diags.extend(slot_diags);
                cur.recover_element(element_start, &["state", "initial"]);
                cur.eat_punct(";");
            }
        }
    }
    let close = cur.here();
    cur.eat_punct("}");
    automaton.span = open.span.to(&close);
    if diags.is_empty() {
        Ok(automaton)
    } else {
        Err(diags)
    }
}

fn parse_states<E>(cur: &mut Cursor, automaton: &mut Automaton<E>) -> Result<(), ParseFailure> {
    cur.expect_keyword("state")?;
    loop {
        let name = cur.expect_ident()?;
        automaton.states.push(Spanned::new(name.text, name.span));
        if cur.eat_punct(",") {
            continue;
        }
        break;
    }
    cur.expect_punct(";")?;
    Ok(())
}

fn parse_initial<E>(
    cur: &mut Cursor,
    expr_slot: ExprSlot<'_, E>,
    automaton: &mut Automaton<E>,
) -> Result<(), ElemError> {
    let kw = cur.expect_keyword("initial")?;
    let state = cur.expect_ident()?;
    let mut outputs = Vec::new();
    if cur.at_punct("/") {
        cur.next();
        parse_assignments(cur, expr_slot, &mut outputs)?;
    }
    let semi = cur.expect_punct(";")?;
    automaton.initials.push(InitialClause {
        state: Spanned::new(state.text, state.span),
        outputs,
        span: kw.span.to(&semi.span),
    });
    Ok(())
}

fn parse_transition<E>(
    cur: &mut Cursor,
    expr_slot: ExprSlot<'_, E>,
    automaton: &mut Automaton<E>,
) -> Result<(), ElemError> {
    let source = cur.expect_ident()?;
    cur.expect_punct("->")?;
    let target = cur.expect_ident()?;
    let mut guard = None;
    if cur.at_punct("[") {
        cur.next();
        guard = Some(expr_slot(cur).map_err(ElemError::Slot)?);
        cur.expect_punct("]")?;
    }
    let mut actions = Vec::new();
    if cur.at_punct("/") {
        cur.next();
        parse_assignments(cur, expr_slot, &mut actions)?;
    }
    let semi = cur.expect_punct(";")?;
    automaton.transitions.push(Transition {
        source: Spanned::new(source.text, source.span.clone()),
        target: Spanned::new(target.text, target.span),
        guard,
        actions,
        span: source.span.to(&semi.span),
    });
    Ok(())
}

/// `{ name = expr (, name = expr)* }` with an empty list allowed.
fn parse_assignments<E>(
    cur: &mut Cursor,
    expr_slot: ExprSlot<'_, E>,
    out: &mut Vec<Assignment<E>>,
) -> Result<(), ElemError> {
    cur.expect_punct("{")?;
    if cur.eat_punct("}") {
        return Ok(());
    }
    loop {
        let target = cur.expect_ident()?;
        let eq = cur.expect_punct("=")?;
        let value = expr_slot(cur).map_err(ElemError::Slot)?;
        out.push(Assignment {
            target: Spanned::new(target.text, target.span.clone()),
            value,
            span: target.span.to(&eq.span),
        });
        if cur.eat_punct(",") {
            continue;
        }
        break;
    }
    cur.expect_punct("}")?;
    Ok(())
}

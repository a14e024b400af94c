//! Parser for the table body: `{ ( row [ expr ] / { effects } ; )* }`.
//! The `iotable` keyword was consumed by the host. An empty table parses;
//! TBL0001 is a check condition, not a syntax error.

use crate::ast::{IoTable, Row, RowEffect};
use crate::codes;
use kernel::lex::{Cursor, ParseFailure};
use kernel::{Diagnostic, Spanned};

/// Failures come back as the expression language's own diagnostics.
pub type ExprSlot<'a, E> = &'a dyn Fn(&mut Cursor) -> Result<E, Vec<Diagnostic>>;

enum RowError {
    Own(ParseFailure),
    Slot(Vec<Diagnostic>),
}

impl From<ParseFailure> for RowError {
    fn from(f: ParseFailure) -> Self {
        RowError::Own(f)
    }
}

pub fn parse_iotable<E>(
    cur: &mut Cursor,
    expr_slot: ExprSlot<'_, E>,
) -> Result<IoTable<E>, Vec<Diagnostic>> {
    let open = cur
        .expect_punct("{")
        .map_err(|f| vec![Diagnostic::error(codes::TBL0007, f.span, f.message)])?;
    let mut rows = Vec::new();
    let mut diags = Vec::new();
    loop {
        if cur.at_punct("}") {
            break;
        }
        if cur.at_end() {
            diags.push(Diagnostic::error(
                codes::TBL0007,
                cur.here(),
                "expected `}` to close the table",
            ));
            break;
        }
        let row_start = cur.pos();
        match parse_row(cur, expr_slot) {
            Ok(row) => rows.push(row),
            Err(RowError::Own(f)) => {
                diags.push(Diagnostic::error(codes::TBL0007, f.span, f.message));
                cur.recover_element(row_start, &["row"]);
                cur.eat_punct(";");
            }
            Err(RowError::Slot(slot_diags)) => {
                diags.extend(slot_diags);
                cur.recover_element(row_start, &["row"]);
                cur.eat_punct(";");
            }
        }
    }
    let close = cur.here();
    cur.eat_punct("}");
    if diags.is_empty() {
        Ok(IoTable { rows, span: open.span.to(&close) })
    } else {
        Err(diags)
    }
}

fn parse_row<E>(cur: &mut Cursor, expr_slot: ExprSlot<'_, E>) -> Result<Row<E>, RowError> {
    let kw = cur.expect_keyword("row")?;
    cur.expect_punct("[")?;
    let guard = expr_slot(cur).map_err(RowError::Slot)?;
    cur.expect_punct("]")?;
    cur.expect_punct("/")?;
    cur.expect_punct("{")?;
    let mut effects = Vec::new();
    if !cur.at_punct("}") {
        loop {
            let target = cur.expect_ident()?;
            let eq = cur.expect_punct("=")?;
            let value = expr_slot(cur).map_err(RowError::Slot)?;
            effects.push(RowEffect {
                target: Spanned::new(target.text, target.span.clone()),
                value,
                span: target.span.to(&eq.span),
            });
            if cur.eat_punct(",") {
                continue;
            }
            break;
        }
    }
    cur.expect_punct("}")?;
    let semi = cur.expect_punct(";")?;
    Ok(Row { guard, effects, span: kw.span.to(&semi.span) })
}

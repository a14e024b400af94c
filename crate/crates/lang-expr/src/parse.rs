//! Recursive-descent expression parser over the shared token cursor.
//!
//! Precedence, loosest to tightest: implies, ||, &&, equality, relational,
//! additive, multiplicative, unary. All binary operators associate to the
//! left except `implies`, which associates to the right.

use crate::ast::{BinaryOp, Expr, ExprKind, UnaryOp};
use kernel::lex::{Cursor, ParseFailure, TokenKind};

pub fn parse_expr(cur: &mut Cursor) -> Result<Expr, ParseFailure> {
    parse_implies(cur)
}

/// Parse a full source string as one expression (no trailing tokens).
pub fn parse_expr_str(file: &str, source: &str) -> Result<Expr, ParseFailure> {
    let mut cur = Cursor::from_source(file, source)
        .map_err(|e| ParseFailure { span: e.span, message: e.message })?;
    let expr = parse_expr(&mut cur)?;
    if let Some(t) = cur.peek() {
        return Err(ParseFailure {
            span: t.span.clone(),
            message: format!("unexpected `{t}` after expression"),
        });
    }
    Ok(expr)
}

fn parse_implies(cur: &mut Cursor) -> Result<Expr, ParseFailure> {
    let lhs = parse_or(cur)?;
    if cur.at_ident("implies") {
        cur.next();
        // Right-associative.
        let rhs = parse_implies(cur)?;
        let span = lhs.span.to(&rhs.span);
        return Ok(Expr::new(
            ExprKind::Binary { op: BinaryOp::Implies, lhs: Box::new(lhs), rhs: Box::new(rhs) },
            span,
        ));
    }
    Ok(lhs)
}

fn binary_level(
    cur: &mut Cursor,
    next: fn(&mut Cursor) -> Result<Expr, ParseFailure>,
    ops: &[(&str, BinaryOp)],
) -> Result<Expr, ParseFailure> {
    let mut lhs = next(cur)?;
    'scan: loop {
        for (sym, op) in ops {
            if cur.at_punct(sym) {
                cur.next();
                let rhs = next(cur)?;
                let span = lhs.span.to(&rhs.span);
                lhs = Expr::new(
                    ExprKind::Binary { op: *op, lhs: Box::new(lhs), rhs: Box::new(rhs) },
                    span,
                );
                continue 'scan;
            }
        }
        return Ok(lhs);
    }
}

fn parse_or(cur: &mut Cursor) -> Result<Expr, ParseFailure> {
    binary_level(cur, parse_and, &[("||", BinaryOp::Or)])
}

fn parse_and(cur: &mut Cursor) -> Result<Expr, ParseFailure> {
    binary_level(cur, parse_equality, &[("&&", BinaryOp::And)])
}

fn parse_equality(cur: &mut Cursor) -> Result<Expr, ParseFailure> {
    binary_level(cur, parse_relational, &[("==", BinaryOp::Eq), ("!=", BinaryOp::Ne)])
}

fn parse_relational(cur: &mut Cursor) -> Result<Expr, ParseFailure> {
    binary_level(
        cur,
        parse_additive,
        &[("<=", BinaryOp::Le), (">=", BinaryOp::Ge), ("<", BinaryOp::Lt), (">", BinaryOp::Gt)],
    )
}

fn parse_additive(cur: &mut Cursor) -> Result<Expr, ParseFailure> {
    binary_level(cur, parse_multiplicative, &[("+", BinaryOp::Add), ("-", BinaryOp::Sub)])
}

fn parse_multiplicative(cur: &mut Cursor) -> Result<Expr, ParseFailure> {
    binary_level(
        cur,
        parse_unary,
        &[("*", BinaryOp::Mul), ("/", BinaryOp::Div), ("%", BinaryOp::Rem)],
    )
}

fn parse_unary(cur: &mut Cursor) -> Result<Expr, ParseFailure> {
    if cur.at_punct("!") || cur.at_punct("-") {
        let tok = cur.next().unwrap();
        let op = if tok.is_punct("!") { UnaryOp::Not } else { UnaryOp::Neg };
        let operand = parse_unary(cur)?;
        let span = tok.span.to(&operand.span);
        // Fold negated integer literals so `-5` is one node and printing
        // round-trips structurally.
        if op == UnaryOp::Neg {
            if let ExprKind::Int(v) = operand.kind {
                return Ok(Expr::new(ExprKind::Int(-v), span));
            }
        }
        return Ok(Expr::new(ExprKind::Unary { op, operand: Box::new(operand) }, span));
    }
    parse_primary(cur)
}

fn parse_primary(cur: &mut Cursor) -> Result<Expr, ParseFailure> {
    let Some(tok) = cur.peek().cloned() else {
        return Err(ParseFailure { span: cur.here(), message: "expected an expression".into() });
    };
    match tok.kind {
        TokenKind::Int => {
            cur.next();
            let value: i64 = tok.text.parse().map_err(|_| ParseFailure {
                span: tok.span.clone(),
                message: format!("integer literal `{}` out of range", tok.text),
            })?;
            Ok(Expr::new(ExprKind::Int(value), tok.span))
        }
        TokenKind::Str => {
            cur.next();
            Ok(Expr::new(ExprKind::Str(tok.text), tok.span))
        }
        TokenKind::Ident => {
            cur.next();
            if tok.text == "true" || tok.text == "false" {
                return Ok(Expr::new(ExprKind::Bool(tok.text == "true"), tok.span));
            }
            if cur.at_punct(".") {
                cur.next();
                let member = cur.expect_ident()?;
                if cur.at_punct(".") {
                    return Err(ParseFailure {
                        span: cur.here(),
                        message: "navigation beyond one member is not supported".into(),
                    });
                }
                let span = tok.span.to(&member.span);
                return Ok(Expr::new(
                    ExprKind::Dotted { head: tok.text, member: member.text },
                    span,
                ));
            }
            Ok(Expr::new(ExprKind::Name(tok.text), tok.span))
        }
        TokenKind::Punct("(") => {
            cur.next();
            let inner = parse_expr(cur)?;
            let close = cur.expect_punct(")")?;
            if cur.at_punct(".") {
                cur.next();
                let field = cur.expect_ident()?;
                let span = tok.span.to(&field.span);
                return Ok(Expr::new(
                    ExprKind::Field { base: Box::new(inner), field: field.text },
                    span,
                ));
            }
            // Keep the inner node, widening the span to the parentheses.
            Ok(Expr::new(inner.kind, tok.span.to(&close.span)))
        }
        _ => Err(ParseFailure {
            span: tok.span.clone(),
            message: format!("expected an expression, found `{tok}`"),
        }),
    }
}

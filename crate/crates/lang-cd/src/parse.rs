//! Parser for `.cd` artifacts with recovery at top-level element
//! granularity: a malformed class or enum is skipped up to the next
//! element and the rest of the diagram still parses.

use crate::ast::{CdClass, CdElement, CdEnum, CdField, CdModel};
use crate::codes;
use kernel::lex::{Cursor, ParseFailure};
use kernel::{Diagnostic, Spanned};

pub struct CdParse {
    pub model: Option<CdModel>,
    pub diagnostics: Vec<Diagnostic>,
}

pub fn parse_cd(file: &str, source: &str) -> CdParse {
    let mut cur = match Cursor::from_source(file, source) {
        Ok(c) => c,
        Err(e) => {
            return CdParse {
                model: None,
                diagnostics: vec![Diagnostic::error(codes::CD0005, e.span, e.message)],
            }
        }
    };
    let mut diagnostics = Vec::new();
    let model = parse_model(&mut cur, &mut diagnostics);
    if model.is_some() {
        if let Some(t) = cur.peek() {
            diagnostics.push(Diagnostic::error(
                codes::CD0005,
                t.span.clone(),
                format!("unexpected `{t}` after the class diagram"),
            ));
        }
    }
    CdParse { model, diagnostics }
}

fn syntax(diags: &mut Vec<Diagnostic>, f: ParseFailure) {
    diags.push(Diagnostic::error(codes::CD0005, f.span, f.message));
}

fn parse_model(cur: &mut Cursor, diags: &mut Vec<Diagnostic>) -> Option<CdModel> {
    let start = cur.here();
    if let Err(f) = cur.expect_keyword("classdiagram") {
        syntax(diags, f);
        return None;
    }
    let name = match cur.expect_ident() {
        Ok(t) => Spanned::new(t.text, t.span),
        Err(f) => {
            syntax(diags, f);
            return None;
        }
    };
    if let Err(f) = cur.expect_punct("{") {
        syntax(diags, f);
        return None;
    }
    let mut elements = Vec::new();
    loop {
        if cur.at_punct("}") {
            break;
        }
        if cur.at_end() {
            syntax(
                diags,
                ParseFailure { span: cur.here(), message: "expected `}` to close the class diagram".into() },
            );
            break;
        }
        let element_start = cur.pos();
        if cur.at_ident("class") {
            match parse_class(cur) {
                Ok(c) => elements.push(CdElement::Class(c)),
                Err(f) => {
                    syntax(diags, f);
                    cur.recover_element(element_start, &["class", "enum"]);
                }
            }
        } else if cur.at_ident("enum") {
            match parse_enum(cur) {
                Ok(e) => elements.push(CdElement::Enum(e)),
                Err(f) => {
                    syntax(diags, f);
                    cur.recover_element(element_start, &["class", "enum"]);
                }
            }
        } else {
            let t = cur.peek().unwrap();
            syntax(
                diags,
                ParseFailure {
                    span: t.span.clone(),
                    message: format!("expected `class` or `enum`, found `{t}`"),
                },
            );
            cur.next();
            cur.recover_element(element_start, &["class", "enum"]);
        }
    }
    let end = cur.here();
    cur.eat_punct("}");
    Some(CdModel { name, elements, span: start.to(&end) })
}

fn parse_class(cur: &mut Cursor) -> Result<CdClass, ParseFailure> {
    let kw = cur.expect_keyword("class")?;
    let name_tok = cur.expect_ident()?;
    let name = Spanned::new(name_tok.text, name_tok.span);
    cur.expect_punct("{")?;
    let mut fields = Vec::new();
    while !cur.at_punct("}") {
        let ty = cur.expect_ident()?;
        let field = cur.expect_ident()?;
        cur.expect_punct(";")?;
        fields.push(CdField {
            type_name: Spanned::new(ty.text, ty.span),
            name: Spanned::new(field.text, field.span),
        });
    }
    let close = cur.expect_punct("}")?;
    Ok(CdClass { name, fields, span: kw.span.to(&close.span) })
}

fn parse_enum(cur: &mut Cursor) -> Result<CdEnum, ParseFailure> {
    let kw = cur.expect_keyword("enum")?;
    let name_tok = cur.expect_ident()?;
    let name = Spanned::new(name_tok.text, name_tok.span);
    cur.expect_punct("{")?;
    let mut constants = Vec::new();
    loop {
        let c = cur.expect_ident()?;
        constants.push(Spanned::new(c.text, c.span));
        if cur.eat_punct(",") {
            continue;
        }
        break;
    }
    cur.expect_punct(";")?;
    let close = cur.expect_punct("}")?;
    Ok(CdEnum { name, constants, span: kw.span.to(&close.span) })
}

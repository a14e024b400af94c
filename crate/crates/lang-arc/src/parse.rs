//! Parser for component definitions with recovery at element granularity.

use crate::ast::{
    ComponentType, Connector, Direction, Endpoint, ExtensionPoint, Port, Subcomponent,
};
use crate::codes;
use kernel::lex::{Cursor, ParseFailure};
use kernel::{Diagnostic, Spanned};

pub struct ArcParse {
    pub component: Option<ComponentType>,
    pub diagnostics: Vec<Diagnostic>,
}

pub fn parse_arc(file: &str, source: &str, extensions: &ExtensionPoint) -> ArcParse {
    let mut cur = match Cursor::from_source(file, source) {
        Ok(c) => c,
        Err(e) => {
            return ArcParse {
                component: None,
                diagnostics: vec![Diagnostic::error(codes::ARC0010, e.span, e.message)],
            }
        }
    };
    let mut diagnostics = Vec::new();
    let component = parse_component(&mut cur, extensions, &mut diagnostics);
    if component.is_some() {
        if let Some(t) = cur.peek() {
            diagnostics.push(Diagnostic::error(
                codes::ARC0010,
                t.span.clone(),
                format!("unexpected `{t}` after the component definition"),
            ));
        }
    }
    ArcParse { component, diagnostics }
}

fn syntax(diags: &mut Vec<Diagnostic>, f: ParseFailure) {
    diags.push(Diagnostic::error(codes::ARC0010, f.span, f.message));
}

const ELEMENT_KEYWORDS: [&str; 3] = ["port", "component", "connect"];

fn parse_component(
    cur: &mut Cursor,
    extensions: &ExtensionPoint,
    diags: &mut Vec<Diagnostic>,
) -> Option<ComponentType> {
    let start = cur.here();
    if let Err(f) = cur.expect_keyword("component") {
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
    let mut component = ComponentType {
        name,
        ports: Vec::new(),
        subcomponents: Vec::new(),
        connectors: Vec::new(),
        extensions: Vec::new(),
        span: start.clone(),
    };
    // A body is optional: `component X;` or just `component X` is atomic
    // with no ports.
    if !cur.at_punct("{") {
        cur.eat_punct(";");
        component.span = start.to(&cur.here());
        return Some(component);
    }
    cur.next();

    // Every extension keyword is recoverable like a built-in element.
    let ext_keywords: Vec<&str> = extensions
        .element_parsers
        .keys()
        .chain(extensions.behavior_parsers.keys())
        .copied()
        .collect();
    let mut recovery_keywords: Vec<&str> = ELEMENT_KEYWORDS.to_vec();
    recovery_keywords.extend(&ext_keywords);

    loop {
        if cur.at_punct("}") {
            break;
        }
        if cur.at_end() {
            syntax(
                diags,
                ParseFailure { span: cur.here(), message: "expected `}` to close the component".into() },
            );
            break;
        }
        let element_start = cur.pos();
        let keyword = cur.peek().map(|t| t.text.clone()).unwrap_or_default();
        let outcome: Result<(), ParseFailure> = if cur.at_ident("port") {
            parse_ports(cur, &mut component)
        } else if cur.at_ident("component") {
            parse_subcomponent(cur, &mut component)
        } else if cur.at_ident("connect") {
            parse_connector(cur, &mut component)
        } else if let Some(parser) = extensions.keyword(&keyword) {
            match parser(cur) {
                Ok(el) => {
                    component.extensions.push(el);
                    Ok(())
                }
                Err(errs) => {
                    diags.extend(errs);
                    cur.recover_element(element_start, &recovery_keywords);
                    continue;
                }
            }
        } else {
            let t = cur.peek().unwrap();
            let msg = format!("expected a component element, found `{t}`");
            let f = ParseFailure { span: t.span.clone(), message: msg };
            cur.next();
            Err(f)
        };
        if let Err(f) = outcome {
            syntax(diags, f);
            cur.recover_element(element_start, &recovery_keywords);
        }
    }
    let end = cur.here();
    cur.eat_punct("}");
    component.span = start.to(&end);
    Some(component)
}

/// `port in int a, out boolean b;` — one keyword, comma-grouped decls.
fn parse_ports(cur: &mut Cursor, component: &mut ComponentType) -> Result<(), ParseFailure> {
    cur.expect_keyword("port")?;
    loop {
        let direction = if cur.eat_ident("in") {
            Direction::In
        } else if cur.eat_ident("out") {
            Direction::Out
        } else {
            let span = cur.here();
            return Err(ParseFailure { span, message: "expected `in` or `out`".into() });
        };
        let type_name = qualified_name(cur)?;
        let name = cur.expect_ident()?;
        component.ports.push(Port {
            direction,
            type_name,
            name: Spanned::new(name.text, name.span),
        });
        if cur.eat_punct(",") {
            continue;
        }
        break;
    }
    cur.expect_punct(";")?;
    Ok(())
}

fn parse_subcomponent(cur: &mut Cursor, component: &mut ComponentType) -> Result<(), ParseFailure> {
    cur.expect_keyword("component")?;
    let component_type = qualified_name(cur)?;
    let name = cur.expect_ident()?;
    cur.expect_punct(";")?;
    component.subcomponents.push(Subcomponent {
        component_type,
        name: Spanned::new(name.text, name.span),
    });
    Ok(())
}

fn parse_connector(cur: &mut Cursor, component: &mut ComponentType) -> Result<(), ParseFailure> {
    let kw = cur.expect_keyword("connect")?;
    let source = parse_endpoint(cur)?;
    cur.expect_punct("->")?;
    let target = parse_endpoint(cur)?;
    let semi = cur.expect_punct(";")?;
    component.connectors.push(Connector { source, target, span: kw.span.to(&semi.span) });
    Ok(())
}

fn parse_endpoint(cur: &mut Cursor) -> Result<Endpoint, ParseFailure> {
    let first = cur.expect_ident()?;
    if cur.eat_punct(".") {
        let port = cur.expect_ident()?;
        let span = first.span.to(&port.span);
        return Ok(Endpoint { subcomponent: Some(first.text), port: port.text, span });
    }
    Ok(Endpoint { subcomponent: None, port: first.text.clone(), span: first.span })
}

/// `Name` or `pkg.Name` (dots between identifiers).
fn qualified_name(cur: &mut Cursor) -> Result<Spanned<String>, ParseFailure> {
    let first = cur.expect_ident()?;
    let mut text = first.text;
    let mut span = first.span.clone();
    while cur.at_punct(".") {
        cur.next();
        let next = cur.expect_ident()?;
        text.push('.');
        text.push_str(&next.text);
        span = span.to(&next.span);
    }
    Ok(Spanned::new(text, span))
}

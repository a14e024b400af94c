//! Family wiring: the three language descriptors and the adapters that
//! link their symbol tables.
//!
//! - `.cd` and `.arc` register unchanged (aggregation: separate ASTs).
//! - `.maa` is the architecture parser *extended* with a `variable`
//!   element (inheritance) and with `automaton`/`iotable` bound at the
//!   behavior slot plus expressions at the guard/assignment slots
//!   (embedding) — one AST with foreign subtrees at the leaves.
//! - Adapters: CDType -> ArcdType, Port -> ExprName, Variable -> ExprName.

use crate::check::check_maa;
use crate::codes;
use crate::define::define_maa_symbols;
use crate::elements::{BehaviorBody, BehaviorDecl, VariableDecl};
use kernel::lex::{Cursor, ParseFailure};
use kernel::registry::{LanguageDescriptor, ParsedArtifact};
use kernel::visitor::AstNode;
use kernel::{
    AdapterRegistration, ConfigError, Diagnostic, EntryKind, Phase, Spanned, SymbolEntry,
    Workbench, Workflow,
};
use lang_arc::{ExtensionPoint, ARCD_TYPE, PORT};
use lang_cd::CD_TYPE;
use std::path::Path;

/// Kind of variable entries (declared by this family, not by the
/// architecture language).
pub const VARIABLE: EntryKind = EntryKind("Variable");
/// Kind expression-name resolution expects; only ever produced by
/// adaptation from ports and variables.
pub const EXPR_NAME: EntryKind = EntryKind("ExprName");
/// Kind of automaton state entries.
pub const STATE: EntryKind = EntryKind("State");

pub fn register_family(wb: &mut Workbench) -> Result<(), ConfigError> {
    wb.register_language(cd_language())?;
    wb.register_language(arc_language())?;
    wb.register_language(maa_language())?;

    wb.register_adapter(AdapterRegistration::new(CD_TYPE, ARCD_TYPE, |src| {
        let mut adapted =
            SymbolEntry::new(src.name.clone(), ARCD_TYPE, src.visibility, src.origin.clone());
        // Carry the type structure through so architecture-side consumers
        // can see enum constants and fields without knowing their source.
        for key in ["type-kind", "constants", "fields"] {
            if let Some(v) = src.attr(key) {
                adapted = adapted.with_attr(key, v);
            }
        }
        adapted
    }))?;
    wb.register_adapter(AdapterRegistration::new(PORT, EXPR_NAME, |src| {
        SymbolEntry::new(src.name.clone(), EXPR_NAME, src.visibility, src.origin.clone())
            .with_attr("type", src.attr("type").unwrap_or_default())
    }))?;
    wb.register_adapter(AdapterRegistration::new(VARIABLE, EXPR_NAME, |src| {
        SymbolEntry::new(src.name.clone(), EXPR_NAME, src.visibility, src.origin.clone())
            .with_attr("type", src.attr("type").unwrap_or_default())
    }))?;
    Ok(())
}

pub fn cd_language() -> LanguageDescriptor {
    LanguageDescriptor {
        language_id: "cd".into(),
        file_extension: "cd".into(),
        parse: Box::new(|source, path: &Path| {
            let parsed = lang_cd::parse_cd(&path.display().to_string(), source);
            ParsedArtifact {
                artifact_name: parsed.model.as_ref().map(|m| m.name.value.clone()),
                ast: parsed.model.map(|m| Box::new(m) as Box<dyn AstNode>),
                diagnostics: parsed.diagnostics,
            }
        }),
        workflows: vec![
            Workflow::define("cd symbols", lang_cd::define_cd_symbols),
            Workflow::analyze("cd checks", Phase::Check, lang_cd::check_cd),
        ],
    }
}

pub fn arc_language() -> LanguageDescriptor {
    LanguageDescriptor {
        language_id: "arc".into(),
        file_extension: "arc".into(),
        parse: Box::new(|source, path: &Path| {
            let parsed =
                lang_arc::parse_arc(&path.display().to_string(), source, &ExtensionPoint::none());
            ParsedArtifact {
                artifact_name: parsed.component.as_ref().map(|c| c.name.value.clone()),
                ast: parsed.component.map(|c| Box::new(c) as Box<dyn AstNode>),
                diagnostics: parsed.diagnostics,
            }
        }),
        workflows: vec![
            Workflow::define("arc symbols", lang_arc::define_arc_symbols),
            Workflow::analyze("arc checks", Phase::Check, lang_arc::check_arc),
        ],
    }
}

pub fn maa_language() -> LanguageDescriptor {
    LanguageDescriptor {
        language_id: "maa".into(),
        file_extension: "maa".into(),
        parse: Box::new(|source, path: &Path| {
            let ext = extension_point();
            let parsed = lang_arc::parse_arc(&path.display().to_string(), source, &ext);
            ParsedArtifact {
                artifact_name: parsed.component.as_ref().map(|c| c.name.value.clone()),
                ast: parsed.component.map(|c| Box::new(c) as Box<dyn AstNode>),
                diagnostics: parsed.diagnostics,
            }
        }),
        workflows: vec![
            Workflow::define("maa symbols", define_maa_symbols),
            Workflow::analyze("maa checks", Phase::Check, check_maa),
        ],
    }
}

/// The grammar hooks the family plugs into the architecture parser.
pub fn extension_point() -> ExtensionPoint {
    let mut ext = ExtensionPoint::none();
    ext.element_parsers.insert("variable", Box::new(parse_variable_element));
    ext.behavior_parsers.insert("automaton", Box::new(parse_automaton_element));
    ext.behavior_parsers.insert("iotable", Box::new(parse_iotable_element));
    ext
}

/// The expression parser bound at guard and assignment slots.
fn expr_slot(cur: &mut Cursor) -> Result<lang_expr::Expr, ParseFailure> {
    lang_expr::parse_expr(cur)
}

fn expr_syntax(f: ParseFailure) -> Vec<Diagnostic> {
    vec![Diagnostic::error(lang_expr::codes::EXP0005, f.span, f.message)]
}

/// `variable <Type> <name> = <expr> ;`
fn parse_variable_element(cur: &mut Cursor) -> Result<Box<dyn AstNode>, Vec<Diagnostic>> {
    let mut inner = || -> Result<VariableDecl, ParseFailure> {
        let kw = cur.expect_keyword("variable")?;
        let ty = cur.expect_ident()?;
        let name = cur.expect_ident()?;
        cur.expect_punct("=")?;
        let initial = expr_slot(cur)?;
        let semi = cur.expect_punct(";")?;
        Ok(VariableDecl {
            type_name: Spanned::new(ty.text, ty.span),
            name: Spanned::new(name.text, name.span),
            initial,
            span: kw.span.to(&semi.span),
        })
    };
    match inner() {
        Ok(v) => Ok(Box::new(v)),
        Err(f) => Err(vec![Diagnostic::error(codes::MAA0109, f.span, f.message)]),
    }
}

fn parse_automaton_element(cur: &mut Cursor) -> Result<Box<dyn AstNode>, Vec<Diagnostic>> {
    let kw = cur.expect_keyword("automaton").map_err(expr_syntax)?;
    let automaton = lang_automaton::parse_automaton(cur, &|c| expr_slot(c).map_err(expr_syntax))?;
    let span = kw.span.to(&automaton.span);
    Ok(Box::new(BehaviorDecl { body: BehaviorBody::Automaton(automaton), span }))
}

fn parse_iotable_element(cur: &mut Cursor) -> Result<Box<dyn AstNode>, Vec<Diagnostic>> {
    let kw = cur.expect_keyword("iotable").map_err(expr_syntax)?;
    let table = lang_iotable::parse_iotable(cur, &|c| expr_slot(c).map_err(expr_syntax))?;
    let span = kw.span.to(&table.span);
    Ok(Box::new(BehaviorDecl { body: BehaviorBody::Table(table), span }))
}

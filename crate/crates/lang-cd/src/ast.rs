//! Class-diagram ASTs and their normalized textual form.

use kernel::visitor::AstNode;
use kernel::{Span, Spanned};

pub const LANGUAGE_ID: &str = "cd";

/// Type names usable without a defining diagram.
pub const PRIMITIVES: [&str; 4] = ["int", "boolean", "double", "String"];

pub fn is_primitive(name: &str) -> bool {
    PRIMITIVES.contains(&name)
}

#[derive(Debug)]
pub struct CdModel {
    pub name: Spanned<String>,
    pub elements: Vec<CdElement>,
    pub span: Span,
}

#[derive(Debug)]
pub enum CdElement {
    Class(CdClass),
    Enum(CdEnum),
}

#[derive(Debug)]
pub struct CdClass {
    pub name: Spanned<String>,
    pub fields: Vec<CdField>,
    pub span: Span,
}

#[derive(Debug)]
pub struct CdField {
    pub type_name: Spanned<String>,
    pub name: Spanned<String>,
}

#[derive(Debug)]
pub struct CdEnum {
    pub name: Spanned<String>,
    pub constants: Vec<Spanned<String>>,
    pub span: Span,
}

impl CdModel {
    /// Normalized source form; `parse(unparse(m))` equals `m` up to spans.
    pub fn unparse(&self) -> String {
        let mut out = format!("classdiagram {} {{\n", self.name.value);
        for el in &self.elements {
            match el {
                CdElement::Class(c) => {
                    out.push_str(&format!("  class {} {{\n", c.name.value));
                    for f in &c.fields {
                        out.push_str(&format!("    {} {};\n", f.type_name.value, f.name.value));
                    }
                    out.push_str("  }\n");
                }
                CdElement::Enum(e) => {
                    let consts: Vec<&str> =
                        e.constants.iter().map(|c| c.value.as_str()).collect();
                    out.push_str(&format!("  enum {} {{ {}; }}\n", e.name.value, consts.join(", ")));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

impl AstNode for CdModel {
    fn language_id(&self) -> &'static str {
        LANGUAGE_ID
    }
    fn as_any(&self) -> &dyn std::any::Any {
        self
    }
    fn for_each_child(&self, f: &mut dyn FnMut(&dyn AstNode)) {
        for el in &self.elements {
            match el {
                CdElement::Class(c) => f(c),
                CdElement::Enum(e) => f(e),
            }
        }
    }
}

impl AstNode for CdClass {
    fn language_id(&self) -> &'static str {
        LANGUAGE_ID
    }
    fn as_any(&self) -> &dyn std::any::Any {
        self
    }
    fn for_each_child(&self, _f: &mut dyn FnMut(&dyn AstNode)) {}
}

impl AstNode for CdEnum {
    fn language_id(&self) -> &'static str {
        LANGUAGE_ID
    }
    fn as_any(&self) -> &dyn std::any::Any {
        self
    }
    fn for_each_child(&self, _f: &mut dyn FnMut(&dyn AstNode)) {}
}

//! Machine-readable IR: every loaded unit contributes to one JSON
//! document. Class-diagram types land in `types`; each component carries
//! its ports, variables, subcomponents, connectors, and its behavior
//! inlined (embedded subtrees serialize under their host). Adapted type
//! references serialize as qualified names, never as copied definitions.
//!
//! The emitter is a composite visitor: one part per language, each
//! handling its own node types, with traversal crossing language
//! boundaries at the embedding points. Named lists are sorted (connectors
//! by source then target) so output is byte-deterministic; transitions
//! and rows keep declaration order because order is their semantics.

use family_maa::arc::{ComponentType, TypeRef};
use family_maa::automaton::{Assignment, Automaton};
use family_maa::cd::{CdClass, CdEnum, CdModel};
use family_maa::expr::{Expr, ExprKind};
use family_maa::iotable::IoTable;
use family_maa::{BehaviorDecl, VariableDecl};
use kernel::visitor::{AstNode, CompositeVisitor, VisitorPart};
use kernel::Workbench;
use serde_json::{json, Map, Value};

pub const IR_VERSION: &str = "1";

pub struct IrDocument {
    /// Pretty-printed JSON text, newline-terminated.
    pub text: String,
    /// AST nodes the composite visitor visited while emitting.
    pub nodes_visited: usize,
}

pub struct IrError(pub String);

struct Builder<'a> {
    ctx: &'a Workbench,
    current_unit: String,
    types: Vec<(String, Value)>,
    components: Vec<(String, Value)>,
}

impl Builder<'_> {
    /// Qualified name of a declared type as seen from `unit`; primitives
    /// stay bare, everything else resolves to its defining unit.
    fn type_name(&self, unit: &str, declared: &str) -> String {
        match family_maa::arc::resolve_type(declared, unit, self.ctx) {
            Ok(TypeRef::Primitive(p)) => p,
            Ok(t @ TypeRef::Entry(_)) => t.qualified_name(),
            Err(_) => declared.to_string(),
        }
    }

    fn expr(&self, e: &Expr) -> Value {
        match &e.kind {
            ExprKind::Int(v) => json!(["int", v]),
            ExprKind::Bool(b) => json!(["bool", b]),
            ExprKind::Str(s) => json!(["str", s]),
            ExprKind::Name(n) => json!(["name", n]),
            ExprKind::Dotted { head, member } => {
                // Enum constants win, as in typechecking; otherwise this
                // is a single-hop field access on a named value.
                let qualified = format!("{head}.{member}");
                match self.ctx.resolve(
                    &qualified,
                    family_maa::cd::CD_ENUM_CONSTANT,
                    &self.current_unit,
                    kernel::ROOT_SCOPE,
                ) {
                    kernel::Resolution::Found(entry) => {
                        let def = entry.definition();
                        json!(["enum", format!("{}.{head}", def.origin.unit), member])
                    }
                    _ => json!(["field", ["name", head], member]),
                }
            }
            ExprKind::Field { base, field } => json!(["field", self.expr(base), field]),
            ExprKind::Unary { op, operand } => {
                let sym = match op {
                    family_maa::expr::UnaryOp::Not => "!",
                    family_maa::expr::UnaryOp::Neg => "-",
                };
                json!([sym, self.expr(operand)])
            }
            ExprKind::Binary { op, lhs, rhs } => {
                json!([op.symbol(), self.expr(lhs), self.expr(rhs)])
            }
        }
    }

    fn assignments(&self, list: &[Assignment<Expr>]) -> Value {
        Value::Array(
            list.iter().map(|a| json!([a.target.value, self.expr(&a.value)])).collect(),
        )
    }
}

fn obj(pairs: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in pairs {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}

// --------------------------------------------------------------------
// Visitor parts, one per language.

struct CdPart;

impl VisitorPart<Builder<'_>> for CdPart {
    fn enter(&mut self, node: &dyn AstNode, b: &mut Builder) {
        if let Some(class) = node.as_any().downcast_ref::<CdClass>() {
            let name = format!("{}.{}", b.current_unit, class.name.value);
            let members: Vec<Value> = class
                .fields
                .iter()
                .map(|f| {
                    obj(vec![
                        ("name", json!(f.name.value)),
                        ("type", json!(b.type_name(&b.current_unit, &f.type_name.value))),
                    ])
                })
                .collect();
            b.types.push((
                name.clone(),
                obj(vec![
                    ("name", json!(name)),
                    ("kind", json!("class")),
                    ("members", Value::Array(members)),
                ]),
            ));
        } else if let Some(e) = node.as_any().downcast_ref::<CdEnum>() {
            let name = format!("{}.{}", b.current_unit, e.name.value);
            let members: Vec<Value> =
                e.constants.iter().map(|c| json!(c.value)).collect();
            b.types.push((
                name.clone(),
                obj(vec![
                    ("name", json!(name)),
                    ("kind", json!("enum")),
                    ("members", Value::Array(members)),
                ]),
            ));
        }
        let _ = node.as_any().downcast_ref::<CdModel>();
    }
}

struct ArcPart;

impl VisitorPart<Builder<'_>> for ArcPart {
    fn enter(&mut self, node: &dyn AstNode, b: &mut Builder) {
        let Some(component) = node.as_any().downcast_ref::<ComponentType>() else {
            return; // ports/subcomponents/connectors serialize with their component
        };
        let unit = b.current_unit.clone();
        let mut ports: Vec<(String, Value)> = component
            .ports
            .iter()
            .map(|p| {
                (
                    p.name.value.clone(),
                    obj(vec![
                        ("name", json!(p.name.value)),
                        ("direction", json!(p.direction.keyword())),
                        ("type", json!(b.type_name(&unit, &p.type_name.value))),
                    ]),
                )
            })
            .collect();
        ports.sort_by(|a, c| a.0.cmp(&c.0));
        let mut subs: Vec<(String, Value)> = component
            .subcomponents
            .iter()
            .map(|s| {
                let resolved =
                    family_maa::subcomponent_type_unit(b.ctx, &unit, &s.component_type.value)
                        .unwrap_or_else(|| s.component_type.value.clone());
                (
                    s.name.value.clone(),
                    obj(vec![("name", json!(s.name.value)), ("type", json!(resolved))]),
                )
            })
            .collect();
        subs.sort_by(|a, c| a.0.cmp(&c.0));
        let mut conns: Vec<(String, String)> = component
            .connectors
            .iter()
            .map(|c| (c.source.to_string(), c.target.to_string()))
            .collect();
        conns.sort();
        let connectors: Vec<Value> = conns
            .into_iter()
            .map(|(s, t)| obj(vec![("source", json!(s)), ("target", json!(t))]))
            .collect();

        b.components.push((
            unit.clone(),
            obj(vec![
                ("name", json!(unit)),
                ("ports", Value::Array(ports.into_iter().map(|(_, v)| v).collect())),
                ("variables", Value::Array(Vec::new())),
                ("subcomponents", Value::Array(subs.into_iter().map(|(_, v)| v).collect())),
                ("connectors", Value::Array(connectors)),
                ("behavior", Value::Null),
            ]),
        ));
    }
}

struct MaaPart;

impl VisitorPart<Builder<'_>> for MaaPart {
    fn enter(&mut self, node: &dyn AstNode, b: &mut Builder) {
        if let Some(v) = node.as_any().downcast_ref::<VariableDecl>() {
            let unit = b.current_unit.clone();
            let entry = obj(vec![
                ("name", json!(v.name.value)),
                ("type", json!(b.type_name(&unit, &v.type_name.value))),
                ("initial", b.expr(&v.initial)),
            ]);
            if let Some((_, Value::Object(component))) = b.components.last_mut() {
                if let Some(Value::Array(vars)) = component.get_mut("variables") {
                    vars.push(entry);
                    vars.sort_by(|a, c| {
                        a.get("name").unwrap().as_str().cmp(&c.get("name").unwrap().as_str())
                    });
                }
            }
        }
        let _ = node.as_any().downcast_ref::<BehaviorDecl>();
    }
}

struct AutomatonPart;

impl VisitorPart<Builder<'_>> for AutomatonPart {
    fn enter(&mut self, node: &dyn AstNode, b: &mut Builder) {
        let Some(a) = node.as_any().downcast_ref::<Automaton<Expr>>() else {
            return; // transitions/assignments serialize with the automaton
        };
        let states: Vec<Value> = a.states.iter().map(|s| json!(s.value)).collect();
        let initial = a.initial().map(|i| {
            obj(vec![("state", json!(i.state.value)), ("outputs", b.assignments(&i.outputs))])
        });
        let transitions: Vec<Value> = a
            .transitions
            .iter()
            .map(|t| {
                obj(vec![
                    ("source", json!(t.source.value)),
                    ("target", json!(t.target.value)),
                    ("guard", t.guard.as_ref().map(|g| b.expr(g)).unwrap_or(Value::Null)),
                    ("actions", b.assignments(&t.actions)),
                ])
            })
            .collect();
        let behavior = obj(vec![
            ("kind", json!("automaton")),
            ("states", Value::Array(states)),
            ("initial", initial.unwrap_or(Value::Null)),
            ("transitions", Value::Array(transitions)),
        ]);
        set_behavior(b, behavior);
    }
}

struct TablePart;

impl VisitorPart<Builder<'_>> for TablePart {
    fn enter(&mut self, node: &dyn AstNode, b: &mut Builder) {
        let Some(t) = node.as_any().downcast_ref::<IoTable<Expr>>() else {
            return; // rows serialize with the table
        };
        let rows: Vec<Value> = t
            .rows
            .iter()
            .map(|row| {
                let effects: Vec<Value> = row
                    .effects
                    .iter()
                    .map(|e| json!([e.target.value, b.expr(&e.value)]))
                    .collect();
                obj(vec![("guard", b.expr(&row.guard)), ("effects", Value::Array(effects))])
            })
            .collect();
        let behavior = obj(vec![("kind", json!("iotable")), ("rows", Value::Array(rows))]);
        set_behavior(b, behavior);
    }
}

fn set_behavior(b: &mut Builder, behavior: Value) {
    if let Some((_, Value::Object(component))) = b.components.last_mut() {
        component.insert("behavior".to_string(), behavior);
    }
}

/// Expressions are serialized by their hosts; the part exists so the
/// traversal covers expression nodes like any other language's.
struct ExprPart;

impl VisitorPart<Builder<'_>> for ExprPart {
    fn enter(&mut self, _node: &dyn AstNode, _b: &mut Builder) {}
}

// --------------------------------------------------------------------

pub fn emit_ir(ctx: &Workbench) -> Result<IrDocument, IrError> {
    let mut visitor: CompositeVisitor<Builder> = CompositeVisitor::new()
        .with_part("cd", CdPart)
        .with_part("arc", ArcPart)
        .with_part("maa", MaaPart)
        .with_part("automaton", AutomatonPart)
        .with_part("iotable", TablePart)
        .with_part("expr", ExprPart);
    let mut builder =
        Builder { ctx, current_unit: String::new(), types: Vec::new(), components: Vec::new() };
    for unit in ctx.units() {
        let Some(ast) = unit.ast.as_ref() else { continue };
        builder.current_unit = unit.qualified_name.clone();
        visitor.walk(ast.as_ref(), &mut builder).map_err(|e| IrError(e.to_string()))?;
    }

    builder.types.sort_by(|a, c| a.0.cmp(&c.0));
    builder.components.sort_by(|a, c| a.0.cmp(&c.0));
    let doc = obj(vec![
        ("version", json!(IR_VERSION)),
        ("types", Value::Array(builder.types.into_iter().map(|(_, v)| v).collect())),
        (
            "components",
            Value::Array(builder.components.into_iter().map(|(_, v)| v).collect()),
        ),
    ]);
    let mut text = serde_json::to_string_pretty(&doc).map_err(|e| IrError(e.to_string()))?;
    text.push('\n');
    Ok(IrDocument { text, nodes_visited: visitor.visited() })
}

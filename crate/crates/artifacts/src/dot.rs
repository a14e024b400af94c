//! Architecture diagrams in the Graphviz DOT subset: one cluster per
//! decomposed component, one node per atomic instance labeled
//! `name: Type`, one edge per connector labeled with its port pair.
//! Behavior subtrees are skipped by the composite visitor's default part,
//! so the diagram is architecture-only. Output is byte-deterministic.

use kernel::visitor::{AstNode, CompositeVisitor, SkipPart, VisitorPart};
use kernel::Workbench;
use family_maa::arc::{ComponentType, Connector, Port, Subcomponent};

pub struct DotError(pub String);

/// Architecture facts one component contributes to the diagram,
/// collected by the visitor parts.
#[derive(Default)]
struct ArchFacts {
    subcomponents: Vec<(String, String)>,
    connectors: Vec<(String, String)>,
}

/// Visitor part for architecture nodes; everything else is skipped.
struct ArchPart;

impl VisitorPart<ArchFacts> for ArchPart {
    fn enter(&mut self, node: &dyn AstNode, facts: &mut ArchFacts) {
        if let Some(sub) = node.as_any().downcast_ref::<Subcomponent>() {
            facts.subcomponents.push((sub.name.value.clone(), sub.component_type.value.clone()));
        } else if let Some(conn) = node.as_any().downcast_ref::<Connector>() {
            facts.connectors.push((conn.source.to_string(), conn.target.to_string()));
        }
        let _ = node.as_any().downcast_ref::<Port>();
        let _ = node.as_any().downcast_ref::<ComponentType>();
    }
}

fn collect_facts(ast: &dyn AstNode) -> Result<ArchFacts, DotError> {
    // The diagram only needs the architecture parts; behavior subtrees
    // (any language) fall through to the skip part.
    let mut visitor: CompositeVisitor<ArchFacts> =
        CompositeVisitor::new().with_part("arc", ArchPart).with_default(SkipPart);
    let mut facts = ArchFacts::default();
    visitor.walk(ast, &mut facts).map_err(|e| DotError(e.to_string()))?;
    Ok(facts)
}

/// Emit the instance ports that appear as connector endpoints of the
/// enclosing cluster, so every connector has two drawable ends.
pub fn emit_dot(ctx: &Workbench, main: &str) -> Result<String, DotError> {
    let view = family_maa::component_view(ctx, main)
        .ok_or_else(|| DotError(format!("`{main}` is not a component")))?;
    let mut out = String::new();
    out.push_str("digraph architecture {\n");
    out.push_str("  rankdir=LR;\n");
    out.push_str("  node [shape=box];\n");
    emit_instance(ctx, main, "root", &view, &mut out, 1)?;
    out.push_str("}\n");
    Ok(out)
}

fn emit_instance(
    ctx: &Workbench,
    type_name: &str,
    path: &str,
    view: &family_maa::ComponentView<'_>,
    out: &mut String,
    depth: usize,
) -> Result<(), DotError> {
    let indent = "  ".repeat(depth);
    let simple = type_name.rsplit('.').next().unwrap_or(type_name);
    if !view.is_decomposed() {
        out.push_str(&format!(
            "{indent}\"{path}\" [label=\"{}: {simple}\"];\n",
            instance_label(path)
        ));
        return Ok(());
    }
    let facts = collect_facts(view.component as &dyn AstNode)?;
    out.push_str(&format!("{indent}subgraph \"cluster_{path}\" {{\n"));
    out.push_str(&format!("{indent}  label=\"{}: {simple}\";\n", instance_label(path)));

    // Anchor points for the enclosing component's ports that connectors
    // touch, so edges can attach to the cluster boundary.
    let mut own_ports: Vec<&str> = facts
        .connectors
        .iter()
        .flat_map(|(s, t)| [s.as_str(), t.as_str()])
        .filter(|e| !e.contains('.'))
        .collect();
    own_ports.sort();
    own_ports.dedup();
    for port in own_ports {
        out.push_str(&format!(
            "{indent}  \"{path}.{port}\" [shape=point, xlabel=\"{port}\"];\n"
        ));
    }

    for (sub_name, sub_type) in &facts.subcomponents {
        let sub_unit = family_maa::subcomponent_type_unit(ctx, type_name, sub_type)
            .ok_or_else(|| DotError(format!("subcomponent type `{sub_type}` does not resolve")))?;
        let sub_view = family_maa::component_view(ctx, &sub_unit)
            .ok_or_else(|| DotError(format!("`{sub_unit}` is not a component")))?;
        emit_instance(ctx, &sub_unit, &format!("{path}.{sub_name}"), &sub_view, out, depth + 1)?;
    }

    for (source, target) in &facts.connectors {
        let (tail, tail_port) = edge_end(path, source);
        let (head, head_port) = edge_end(path, target);
        out.push_str(&format!(
            "{indent}  \"{tail}\" -> \"{head}\" [label=\"{tail_port} -> {head_port}\"];\n"
        ));
    }
    out.push_str(&format!("{indent}}}\n"));
    Ok(())
}

/// A connector endpoint maps to a node: `sub.port` attaches to the
/// subcomponent instance node, a bare port to its cluster anchor point.
fn edge_end(path: &str, endpoint: &str) -> (String, String) {
    match endpoint.split_once('.') {
        Some((sub, port)) => (format!("{path}.{sub}"), port.to_string()),
        None => (format!("{path}.{endpoint}"), endpoint.to_string()),
    }
}

fn instance_label(path: &str) -> &str {
    path.rsplit('.').next().unwrap_or(path)
}

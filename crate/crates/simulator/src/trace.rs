//! Trace recording and CSV rendering. Columns: `tick`, each main input
//! port (declaration order), each main output port (declaration order),
//! then one `<instance path>.state` column per automaton instance (path
//! order). Output is byte-deterministic.

use crate::engine::SystemState;
use crate::error::SimError;
use crate::instance::{InstanceKind, InstanceTree};
use family_maa::expr::Value;
use std::collections::BTreeMap;

pub struct Trace {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    main_ins: Vec<String>,
    main_outs: Vec<String>,
    state_instances: Vec<String>,
    error_marker: Option<String>,
}

impl Trace {
    pub fn for_tree(tree: &InstanceTree<'_>) -> Self {
        let main_ins: Vec<String> = tree.root.in_ports.iter().map(|p| p.name.clone()).collect();
        let main_outs: Vec<String> = tree.root.out_ports.iter().map(|p| p.name.clone()).collect();
        let mut state_instances = Vec::new();
        tree.root.each(&mut |i| {
            if let InstanceKind::Atomic { initial_state: Some(_), .. } = &i.kind {
                state_instances.push(i.path.clone());
            }
        });
        state_instances.sort();
        let mut header = vec!["tick".to_string()];
        header.extend(main_ins.iter().cloned());
        header.extend(main_outs.iter().cloned());
        header.extend(state_instances.iter().map(|p| format!("{p}.state")));
        Trace { header, rows: Vec::new(), main_ins, main_outs, state_instances, error_marker: None }
    }

    pub fn record(
        &mut self,
        tick: usize,
        _tree: &InstanceTree<'_>,
        state: &SystemState,
        env: &BTreeMap<String, Value>,
    ) {
        let mut row = vec![tick.to_string()];
        for name in &self.main_ins {
            row.push(env.get(name).map(render).unwrap_or_default());
        }
        for name in &self.main_outs {
            row.push(state.port(&format!("root.{name}")).map(render).unwrap_or_default());
        }
        for path in &self.state_instances {
            row.push(state.automaton_state(path).unwrap_or_default().to_string());
        }
        self.rows.push(row);
    }

    pub fn mark_error(&mut self, error: &SimError) {
        self.error_marker = Some(format!("ERROR {error}"));
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        if let Some(marker) = &self.error_marker {
            out.push_str(marker);
            out.push('\n');
        }
        out
    }
}

/// CSV form of a value: `true|false`, decimal integers, `Enum.CONST`,
/// quoted strings.
fn render(v: &Value) -> String {
    match v {
        Value::Int(i) => i.to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Str(s) => format!("\"{s}\""),
        Value::Enum { type_name, constant } => format!("{type_name}.{constant}"),
    }
}

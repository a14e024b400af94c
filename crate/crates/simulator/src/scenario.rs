//! Scenario files: CSV with a header naming exactly the main component's
//! input ports and one row of values per tick.

use crate::codes;
use crate::error::SimError;
use crate::instance::{InstanceTree, PortDesc, ValueType};
use family_maa::expr::Value;
use std::collections::BTreeMap;

#[derive(Debug)]
pub struct Scenario {
    pub header: Vec<String>,
    pub rows: Vec<BTreeMap<String, Value>>,
    /// When set, the final row repeats for ticks past the end.
    pub repeat_last: bool,
}

impl Scenario {
    pub fn row(&self, tick: usize) -> Option<BTreeMap<String, Value>> {
        if tick < self.rows.len() {
            return Some(self.rows[tick].clone());
        }
        if self.repeat_last {
            return self.rows.last().cloned();
        }
        None
    }
}

pub fn load_scenario(
    path: &std::path::Path,
    tree: &InstanceTree<'_>,
    repeat_last: bool,
) -> Result<Scenario, SimError> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        SimError::new(codes::SIM0002, format!("cannot read scenario `{}`: {e}", path.display()))
    })?;
    parse_scenario(&text, tree, repeat_last)
}

pub fn parse_scenario(
    text: &str,
    tree: &InstanceTree<'_>,
    repeat_last: bool,
) -> Result<Scenario, SimError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let Some(header_line) = lines.next() else {
        return Err(SimError::new(codes::SIM0002, "scenario is empty; expected a header row"));
    };
    let header: Vec<String> = split_csv(header_line).into_iter().collect();

    // The header must name exactly the main inputs (any order).
    let mut expected: Vec<&str> = tree.root.in_ports.iter().map(|p| p.name.as_str()).collect();
    let mut got: Vec<&str> = header.iter().map(String::as_str).collect();
    expected.sort();
    got.sort();
    if expected != got {
        return Err(SimError::new(
            codes::SIM0002,
            format!(
                "scenario header [{}] does not match the main component's input ports [{}]",
                header.join(", "),
                expected.join(", ")
            ),
        ));
    }

    let port_of = |name: &str| -> &PortDesc {
        tree.root.in_ports.iter().find(|p| p.name == name).expect("validated above")
    };

    let mut rows = Vec::new();
    for (lineno, line) in lines.enumerate() {
        let cells = split_csv(line);
        if cells.len() != header.len() {
            return Err(SimError::new(
                codes::SIM0003,
                format!(
                    "scenario row {} has {} values for {} ports",
                    lineno + 2,
                    cells.len(),
                    header.len()
                ),
            ));
        }
        let mut row = BTreeMap::new();
        for (name, cell) in header.iter().zip(cells) {
            let port = port_of(name);
            let value = parse_value(&cell, &port.value_type).ok_or_else(|| {
                SimError::new(
                    codes::SIM0003,
                    format!(
                        "scenario row {}: `{cell}` is not a {} value for port `{name}`",
                        lineno + 2,
                        type_label(&port.value_type)
                    ),
                )
            })?;
            row.insert(name.clone(), value);
        }
        rows.push(row);
    }
    Ok(Scenario { header, rows, repeat_last })
}

fn type_label(t: &ValueType) -> String {
    match t {
        ValueType::Bool => "boolean".into(),
        ValueType::Int => "int".into(),
        ValueType::Str => "String".into(),
        ValueType::Enum { type_name, .. } => type_name.clone(),
        ValueType::Opaque(name) => name.clone(),
    }
}

fn parse_value(cell: &str, t: &ValueType) -> Option<Value> {
    let cell = cell.trim();
    match t {
        ValueType::Bool => match cell {
            "true" => Some(Value::Bool(true)),
            "false" => Some(Value::Bool(false)),
            _ => None,
        },
        ValueType::Int => cell.parse::<i64>().ok().map(Value::Int),
        ValueType::Str => {
            let inner = cell.strip_prefix('"')?.strip_suffix('"')?;
            Some(Value::Str(inner.to_string()))
        }
        ValueType::Enum { type_name, constants } => {
            let (ty, constant) = cell.split_once('.')?;
            if ty != type_name || !constants.iter().any(|c| c == constant) {
                return None;
            }
            Some(Value::enumeration(ty, constant))
        }
        ValueType::Opaque(_) => None,
    }
}

/// Minimal CSV splitting: commas separate cells; a cell may be a
/// double-quoted string (commas inside quotes are kept).
fn split_csv(line: &str) -> Vec<String> {
    let mut cells = Vec::new();
    let mut current = String::new();
    let mut in_quotes = false;
    for c in line.chars() {
        match c {
            '"' => {
                in_quotes = !in_quotes;
                current.push(c);
            }
            ',' if !in_quotes => {
                cells.push(current.trim().to_string());
                current = String::new();
            }
            _ => current.push(c),
        }
    }
    cells.push(current.trim().to_string());
    cells
}

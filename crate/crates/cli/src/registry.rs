//! The error-code registry: every diagnostic code the tool can emit, with
//! its class and a one-line description. Listed under `--help`, and the
//! test suites cross-reference it against the negative-model corpus.

/// (code, class, description). Class is "error", "warning", or
/// "simulation" (simulation errors end the run with exit code 3).
pub const ERROR_REGISTRY: &[(&str, &str, &str)] = &[
    // Framework
    ("KRN0001", "warning", "file skipped: no language registered for its extension"),
    ("KRN0002", "error", "model file cannot be read"),
    ("KRN0003", "error", "qualified model name defined under more than one modelpath root"),
    // Class diagrams
    ("CD0001", "error", "duplicate class/enum name in one diagram"),
    ("CD0002", "error", "unknown field type"),
    ("CD0003", "error", "duplicate field name in one class"),
    ("CD0004", "error", "duplicate constant in one enum"),
    ("CD0005", "error", "class-diagram syntax error"),
    // Architecture
    ("ARC0001", "error", "duplicate port (or component) name"),
    ("ARC0002", "error", "duplicate subcomponent name"),
    ("ARC0003", "error", "port type does not resolve"),
    ("ARC0004", "error", "subcomponent type does not resolve"),
    ("ARC0005", "error", "connector endpoint does not exist"),
    ("ARC0006", "error", "connector violates the direction rules"),
    ("ARC0007", "error", "more than one connector writes the same target"),
    ("ARC0008", "error", "component instantiation cycle"),
    ("ARC0009", "warning", "subcomponent input is not connected"),
    ("ARC0010", "error", "architecture syntax error"),
    // Automata
    ("AUT0001", "error", "duplicate state name"),
    ("AUT0002", "error", "initial state is not declared"),
    ("AUT0003", "error", "not exactly one initial clause"),
    ("AUT0004", "error", "transition endpoint state is not declared"),
    ("AUT0005", "error", "guard is not boolean"),
    ("AUT0006", "error", "assignment target is not an output port or variable"),
    ("AUT0007", "error", "assignment value type does not match the target"),
    ("AUT0008", "warning", "statically overlapping transitions out of one state"),
    ("AUT0009", "error", "automaton syntax error"),
    // Tables
    ("TBL0001", "error", "table has no rows"),
    ("TBL0002", "error", "row guard is not boolean"),
    ("TBL0003", "error", "effect target is not an output port or variable"),
    ("TBL0004", "error", "effect value type does not match the target"),
    ("TBL0005", "error", "two effects in one row write the same target"),
    ("TBL0006", "warning", "final row guard is not literally `true`"),
    ("TBL0007", "error", "table syntax error"),
    // Expressions
    ("EXP0001", "error", "name or qualified constant does not resolve"),
    ("EXP0002", "error", "operand type mismatch"),
    ("EXP0003", "error", "unknown field"),
    ("EXP0004", "error", "name resolution is ambiguous"),
    ("EXP0005", "error", "expression syntax error"),
    // Family
    ("MAA0101", "error", "connector endpoint types differ"),
    ("MAA0102", "error", "duplicate variable name"),
    ("MAA0103", "error", "variable type does not resolve"),
    ("MAA0104", "error", "variable initial value has the wrong type"),
    ("MAA0105", "error", "more than one behavior element"),
    ("MAA0106", "error", "a name is ambiguous in expressions (port vs. variable)"),
    ("MAA0107", "error", "behavior element in a decomposed component"),
    ("MAA0108", "warning", "atomic component with ports but no behavior"),
    ("MAA0109", "error", "variable declaration syntax error"),
    // Simulation
    ("SIM0001", "simulation", "atomic instance without a behavior"),
    ("SIM0002", "simulation", "scenario does not match the main component's inputs"),
    ("SIM0003", "simulation", "scenario value does not parse as the port's type"),
    ("SIM0004", "simulation", "a guard or effect read an absent value"),
    ("SIM0005", "simulation", "division by zero during simulation"),
];

pub fn registry_help() -> String {
    let mut out = String::from("Error codes:\n");
    for (code, class, description) in ERROR_REGISTRY {
        out.push_str(&format!("  {code}  {class:<10} {description}\n"));
    }
    out
}

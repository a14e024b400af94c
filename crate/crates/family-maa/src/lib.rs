//! The composed modeling-language family.
//!
//! This is the only module that names more than one language. It wires
//! three integration mechanisms over black-box language modules:
//!
//! - **aggregation**: class diagrams stay separate artifacts with separate
//!   ASTs, linked purely through symbol references;
//! - **inheritance**: `.maa` components extend the architecture grammar
//!   with `variable` declarations and behavior elements;
//! - **embedding**: automata and tables plug into the behavior slot, and
//!   expressions into their guard/assignment slots, producing one AST with
//!   foreign subtrees.
//!
//! Cross-language linking runs through entry adapters registered here:
//! class-diagram types conform to architecture type references, and ports
//! and variables conform to the expression language's name lookups.
//!
//! The language crates are re-exported so downstream tools (simulator,
//! emitters, CLI) depend on the family alone.

pub mod check;
pub mod define;
pub mod elements;
pub mod exprctx;
pub mod register;
pub mod runtime;
pub mod view;

pub use check::check_maa;
pub use define::{component_body_scope, define_maa_symbols, expression_scope};
pub use elements::{behaviors_of, variables_of, BehaviorBody, BehaviorDecl, VariableDecl};
pub use exprctx::{declared_type_to_expr_type, type_ref_to_expr_type, ScopeExprContext};
pub use register::{
    arc_language, cd_language, extension_point, maa_language, register_family, EXPR_NAME, STATE,
    VARIABLE,
};
pub use runtime::{
    eval_initial, initial_effects, initial_state, step_behavior, BehaviorFault, BehaviorStep,
    ValuationHost,
};
pub use view::{
    component_names, component_view, enum_constants, resolved_type, subcomponent_type_unit,
    ComponentView,
};

// The languages of the family, for consumers that work with composed
// models without depending on each language module separately.
pub use lang_arc as arc;
pub use lang_automaton as automaton;
pub use lang_cd as cd;
pub use lang_expr as expr;
pub use lang_iotable as iotable;

pub mod codes {
    /// Connector endpoint types differ.
    pub const MAA0101: &str = "MAA0101";
    /// Duplicate variable name.
    pub const MAA0102: &str = "MAA0102";
    /// Variable type does not resolve.
    pub const MAA0103: &str = "MAA0103";
    /// Variable initial value has the wrong type.
    pub const MAA0104: &str = "MAA0104";
    /// More than one behavior element.
    pub const MAA0105: &str = "MAA0105";
    /// A name is ambiguous in expression positions (port vs. variable).
    pub const MAA0106: &str = "MAA0106";
    /// Behavior element in a decomposed component.
    pub const MAA0107: &str = "MAA0107";
    /// Atomic component with ports but no behavior (warning).
    pub const MAA0108: &str = "MAA0108";
    /// Family-level syntax error (variable declarations).
    pub const MAA0109: &str = "MAA0109";
}

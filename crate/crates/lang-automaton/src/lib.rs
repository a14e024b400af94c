//! State/transition behavior sublanguage for atomic components.
//!
//! The automaton owns states, an initial clause with initial outputs, and
//! ordered transitions. Guards and assignment values belong to whatever
//! expression language the host binds at the slot; they stay opaque here,
//! which is what lets this module be embedded without knowing its hosts.

pub mod ast;
pub mod check;
pub mod parse;
pub mod step;

pub use ast::{Assignment, Automaton, InitialClause, Transition, LANGUAGE_ID};
pub use check::{check_automaton, BehaviorContext, TargetInfo};
pub use parse::{parse_automaton, ExprSlot};
pub use step::{initial_effects, step_automaton, StepEffect, StepError, StepHost, StepOutcome};

pub mod codes {
    /// Duplicate state name.
    pub const AUT0001: &str = "AUT0001";
    /// Initial state is not declared.
    pub const AUT0002: &str = "AUT0002";
    /// Not exactly one `initial` clause.
    pub const AUT0003: &str = "AUT0003";
    /// Transition endpoint state is not declared.
    pub const AUT0004: &str = "AUT0004";
    /// Guard is not boolean.
    pub const AUT0005: &str = "AUT0005";
    /// Assignment target is not an output port or variable.
    pub const AUT0006: &str = "AUT0006";
    /// Assignment value type does not match the target type.
    pub const AUT0007: &str = "AUT0007";
    /// Statically overlapping transitions out of one state (warning).
    pub const AUT0008: &str = "AUT0008";
    /// Automaton syntax error.
    pub const AUT0009: &str = "AUT0009";
}

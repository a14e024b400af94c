//! Tabular behavior sublanguage.
//!
//! An I/O table is an ordered list of `row [guard] / { effects }` lines:
//! each step, the first row whose guard holds fires its effects against
//! the pre-step valuation. Tables own no state; stateful behavior uses
//! host-declared variables, so a table is a pure notation swap for a
//! single-state automaton. Guards and effect values are opaque embedded
//! expressions.

pub mod ast;
pub mod check;
pub mod parse;
pub mod step;

pub use ast::{IoTable, Row, RowEffect, LANGUAGE_ID};
pub use check::{check_iotable, RowContext, RowTargetInfo};
pub use parse::parse_iotable;
pub use step::{step_iotable, RowEval, RowStepError, TableEffect};

pub mod codes {
    /// Table has no rows.
    pub const TBL0001: &str = "TBL0001";
    /// Row guard is not boolean.
    pub const TBL0002: &str = "TBL0002";
    /// Effect target is not an output port or variable.
    pub const TBL0003: &str = "TBL0003";
    /// Effect value type does not match the target type.
    pub const TBL0004: &str = "TBL0004";
    /// Two effects in one row write the same target.
    pub const TBL0005: &str = "TBL0005";
    /// Final row guard is not literally `true` (warning).
    pub const TBL0006: &str = "TBL0006";
    /// Table syntax error.
    pub const TBL0007: &str = "TBL0007";
}

//! Class-diagram sublanguage: nominal types for the rest of the family.
//!
//! Deliberately small — named classes with typed fields and enumerations
//! with constants. No associations, no inheritance, no methods: aggregating
//! languages only need nominal types, enum constants, and typed fields.

pub mod ast;
pub mod check;
pub mod parse;
pub mod symbols;

pub use ast::{is_primitive, CdClass, CdElement, CdEnum, CdField, CdModel, LANGUAGE_ID, PRIMITIVES};
pub use check::check_cd;
pub use parse::{parse_cd, CdParse};
pub use symbols::{define_cd_symbols, CD_ENUM_CONSTANT, CD_FIELD, CD_TYPE};

pub mod codes {
    /// Duplicate top-level definition (class/enum name reused).
    pub const CD0001: &str = "CD0001";
    /// Field type is neither a primitive nor a known diagram type.
    pub const CD0002: &str = "CD0002";
    /// Duplicate field name within one class.
    pub const CD0003: &str = "CD0003";
    /// Duplicate constant within one enum.
    pub const CD0004: &str = "CD0004";
    /// Class-diagram syntax error.
    pub const CD0005: &str = "CD0005";
}

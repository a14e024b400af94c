//! Component & connector architecture sublanguage.
//!
//! Components declare typed, directed ports; decomposed components wire
//! subcomponent instances with unidirectional connectors. The grammar
//! leaves two hooks open: body-element sub-parsers for languages that
//! extend it, and a behavior slot for languages embedded into atomic
//! components. This module never sees what is parsed at those hooks.

pub mod ast;
pub mod check;
pub mod parse;
pub mod symbols;

pub use ast::{
    is_primitive, ComponentType, Connector, Direction, ElementParser, Endpoint, ExtensionPoint,
    Port, Subcomponent, LANGUAGE_ID, PRIMITIVES,
};
pub use check::{
    check_arc, endpoint_info, resolve_type, valid_source, valid_target, EndpointFault,
    EndpointInfo, TypeRef,
};
pub use parse::{parse_arc, ArcParse};
pub use symbols::{
    define_arc_symbols, define_component_symbols, ARCD_TYPE, COMPONENT, PORT, SUBCOMPONENT,
};

pub mod codes {
    /// Duplicate port (or component) name.
    pub const ARC0001: &str = "ARC0001";
    /// Duplicate subcomponent name.
    pub const ARC0002: &str = "ARC0002";
    /// Port type does not resolve.
    pub const ARC0003: &str = "ARC0003";
    /// Subcomponent type does not resolve.
    pub const ARC0004: &str = "ARC0004";
    /// Connector endpoint does not exist.
    pub const ARC0005: &str = "ARC0005";
    /// Connector violates the direction rules.
    pub const ARC0006: &str = "ARC0006";
    /// More than one connector writes the same target.
    pub const ARC0007: &str = "ARC0007";
    /// Component instantiation cycle.
    pub const ARC0008: &str = "ARC0008";
    /// Unconnected subcomponent input (warning).
    pub const ARC0009: &str = "ARC0009";
    /// Architecture syntax error.
    pub const ARC0010: &str = "ARC0010";
}

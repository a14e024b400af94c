//! Generation back-ends over checked, composed models.
//!
//! Both emitters are composite visitors over the heterogeneous ASTs:
//! the DOT emitter only binds an architecture part (behavior subtrees
//! fall to a skip default), the IR emitter binds one part per language.

pub mod dot;
pub mod ir;

pub use dot::{emit_dot, DotError};
pub use ir::{emit_ir, IrDocument, IrError, IR_VERSION};

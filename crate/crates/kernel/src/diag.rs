//! Diagnostics: the currency of every check phase.
//!
//! Codes are stable strings of the shape `[A-Z]{2,3}[0-9]{4}` and each
//! operation documents the codes it can emit.

use crate::span::Span;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Severity {
    Error,
    Warning,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Severity::Error => write!(f, "ERROR"),
            Severity::Warning => write!(f, "WARNING"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub code: &'static str,
    pub span: Span,
    pub message: String,
}

impl Diagnostic {
    pub fn error(code: &'static str, span: Span, message: impl Into<String>) -> Self {
        Diagnostic { severity: Severity::Error, code, span, message: message.into() }
    }

    pub fn warning(code: &'static str, span: Span, message: impl Into<String>) -> Self {
        Diagnostic { severity: Severity::Warning, code, span, message: message.into() }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.severity, self.code, self.span, self.message)
    }
}

pub fn has_errors(diags: &[Diagnostic]) -> bool {
    diags.iter().any(|d| d.severity == Severity::Error)
}

/// Stable output order: (file, line, column, code).
pub fn sort_diagnostics(diags: &mut [Diagnostic]) {
    diags.sort_by(|a, b| {
        (a.span.file.as_ref(), a.span.start, a.code, a.severity)
            .cmp(&(b.span.file.as_ref(), b.span.start, b.code, b.severity))
    });
}

/// Kernel-level diagnostic codes.
pub mod codes {
    /// File with an unregistered extension skipped during load (warning).
    pub const KRN0001: &str = "KRN0001";
    /// Model file could not be read.
    pub const KRN0002: &str = "KRN0002";
    /// Qualified model name defined under more than one modelpath root.
    pub const KRN0003: &str = "KRN0003";
}

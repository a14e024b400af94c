//! Simulation errors, formatted like check diagnostics.

use kernel::{Diagnostic, Span};
use std::fmt;

#[derive(Debug, Clone)]
pub struct SimError {
    pub code: &'static str,
    pub span: Option<Span>,
    pub message: String,
}

impl SimError {
    pub fn new(code: &'static str, message: impl Into<String>) -> Self {
        SimError { code, span: None, message: message.into() }
    }

    pub fn at(code: &'static str, span: Span, message: impl Into<String>) -> Self {
        SimError { code, span: Some(span), message: message.into() }
    }

    pub fn to_diagnostic(&self) -> Diagnostic {
        let span = self.span.clone().unwrap_or_else(|| Span::file_level("<simulation>"));
        Diagnostic::error(self.code, span, self.message.clone())
    }
}

impl fmt::Display for SimError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.span {
            Some(span) => write!(f, "{} {} {}", self.code, span, self.message),
            None => write!(f, "{} {}", self.code, self.message),
        }
    }
}

impl std::error::Error for SimError {}

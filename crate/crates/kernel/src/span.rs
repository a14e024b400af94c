//! Source positions for diagnostics. Lines and columns are 1-based.

use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LineCol {
    pub line: u32,
    pub col: u32,
}

impl LineCol {
    pub fn new(line: u32, col: u32) -> Self {
        LineCol { line, col }
    }
}

/// A contiguous source range within one file.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Span {
    pub file: Arc<str>,
    pub start: LineCol,
    pub end: LineCol,
}

impl Span {
    pub fn new(file: impl Into<Arc<str>>, start: LineCol, end: LineCol) -> Self {
        Span { file: file.into(), start, end }
    }

    pub fn point(file: impl Into<Arc<str>>, line: u32, col: u32) -> Self {
        let p = LineCol::new(line, col);
        Span { file: file.into(), start: p, end: p }
    }

    /// Whole-file span, used for diagnostics that have no precise location.
    pub fn file_level(file: impl Into<Arc<str>>) -> Self {
        Span::point(file, 1, 1)
    }

    /// Smallest span covering both `self` and `other` (same file assumed).
    pub fn to(&self, other: &Span) -> Span {
        Span {
            file: self.file.clone(),
            start: self.start.min(other.start),
            end: self.end.max(other.end),
        }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.file, self.start.line, self.start.col)
    }
}

/// A value paired with the source range it was parsed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spanned<T> {
    pub value: T,
    pub span: Span,
}

impl<T> Spanned<T> {
    pub fn new(value: T, span: Span) -> Self {
        Spanned { value, span }
    }
}

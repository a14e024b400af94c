//! Shared lexical layer for all bundled modeling languages.
//!
//! Every language in the family has the same lexical structure — identifiers,
//! integer and string literals, punctuation, `//` and `/* */` comments — so
//! the framework provides one lexer and a cursor with the recovery helpers
//! recursive-descent parsers need. Keywords are not lexed; parsers match
//! identifier text contextually, which keeps the token set language-neutral.

use crate::span::{LineCol, Span};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Int,
    Str,
    Punct(&'static str),
}

#[derive(Debug, Clone)]
pub struct Token {
    pub kind: TokenKind,
    /// Identifier text, digit text, or decoded string contents.
    pub text: String,
    pub span: Span,
}

impl Token {
    pub fn is_ident(&self, text: &str) -> bool {
        self.kind == TokenKind::Ident && self.text == text
    }

    pub fn is_punct(&self, p: &str) -> bool {
        matches!(self.kind, TokenKind::Punct(q) if q == p)
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            TokenKind::Ident | TokenKind::Int => write!(f, "{}", self.text),
            TokenKind::Str => write!(f, "\"{}\"", self.text),
            TokenKind::Punct(p) => write!(f, "{}", p),
        }
    }
}

/// Multi-character punctuation first so `->` wins over `-`.
const PUNCT: &[&str] = &[
    "->", "==", "!=", "<=", ">=", "&&", "||", "{", "}", "(", ")", "[", "]", ";", ",", ".", "=",
    "<", ">", "+", "-", "*", "/", "%", "!",
];

#[derive(Debug, Clone)]
pub struct LexError {
    pub span: Span,
    pub message: String,
}

pub fn lex(file: &str, source: &str) -> Result<Vec<Token>, LexError> {
    let file: Arc<str> = Arc::from(file);
    let mut tokens = Vec::new();
    let chars: Vec<char> = source.chars().collect();
    let mut i = 0;
    let mut line = 1u32;
    let mut col = 1u32;

    let advance = |c: char, line: &mut u32, col: &mut u32| {
        if c == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
    };

    'outer: while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            advance(c, &mut line, &mut col);
            i += 1;
            continue;
        }
        // Line comment.
        if c == '/' && chars.get(i + 1) == Some(&'/') {
            while i < chars.len() && chars[i] != '\n' {
                advance(chars[i], &mut line, &mut col);
                i += 1;
            }
            continue;
        }
        // Block comment (non-nesting).
        if c == '/' && chars.get(i + 1) == Some(&'*') {
            let open = LineCol::new(line, col);
            advance(chars[i], &mut line, &mut col);
            advance(chars[i + 1], &mut line, &mut col);
            i += 2;
            while i < chars.len() {
                if chars[i] == '*' && chars.get(i + 1) == Some(&'/') {
                    advance(chars[i], &mut line, &mut col);
                    advance(chars[i + 1], &mut line, &mut col);
                    i += 2;
                    continue 'outer;
                }
                advance(chars[i], &mut line, &mut col);
                i += 1;
            }
            return Err(LexError {
                span: Span::new(file.clone(), open, open),
                message: "unterminated block comment".into(),
            });
        }
        let start = LineCol::new(line, col);
        if c.is_ascii_alphabetic() || c == '_' {
            let mut text = String::new();
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                text.push(chars[i]);
                advance(chars[i], &mut line, &mut col);
                i += 1;
            }
            let end = LineCol::new(line, col.saturating_sub(1));
            tokens.push(Token {
                kind: TokenKind::Ident,
                text,
                span: Span::new(file.clone(), start, end),
            });
            continue;
        }
        if c.is_ascii_digit() {
            let mut text = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                text.push(chars[i]);
                advance(chars[i], &mut line, &mut col);
                i += 1;
            }
            let end = LineCol::new(line, col.saturating_sub(1));
            tokens.push(Token {
                kind: TokenKind::Int,
                text,
                span: Span::new(file.clone(), start, end),
            });
            continue;
        }
        if c == '"' {
            advance(c, &mut line, &mut col);
            i += 1;
            let mut text = String::new();
            loop {
                if i >= chars.len() || chars[i] == '\n' {
                    return Err(LexError {
                        span: Span::new(file.clone(), start, start),
                        message: "unterminated string literal".into(),
                    });
                }
                let d = chars[i];
                if d == '"' {
                    advance(d, &mut line, &mut col);
                    i += 1;
                    break;
                }
                if d == '\\' {
                    let esc = chars.get(i + 1).copied();
                    match esc {
                        Some('"') => text.push('"'),
                        Some('\\') => text.push('\\'),
                        Some('n') => text.push('\n'),
                        _ => {
                            return Err(LexError {
                                span: Span::new(file.clone(), LineCol::new(line, col), LineCol::new(line, col)),
                                message: "unknown escape sequence".into(),
                            })
                        }
                    }
                    advance(d, &mut line, &mut col);
                    advance(esc.unwrap(), &mut line, &mut col);
                    i += 2;
                    continue;
                }
                text.push(d);
                advance(d, &mut line, &mut col);
                i += 1;
            }
            let end = LineCol::new(line, col.saturating_sub(1));
            tokens.push(Token {
                kind: TokenKind::Str,
                text,
                span: Span::new(file.clone(), start, end),
            });
            continue;
        }
        // Punctuation, longest match first.
        let rest: String = chars[i..chars.len().min(i + 2)].iter().collect();
        if let Some(p) = PUNCT.iter().find(|p| rest.starts_with(**p)) {
            for c in p.chars() {
                advance(c, &mut line, &mut col);
            }
            i += p.len();
            let end = LineCol::new(line, col.saturating_sub(1));
            tokens.push(Token {
                kind: TokenKind::Punct(p),
                text: p.to_string(),
                span: Span::new(file.clone(), start, end),
            });
            continue;
        }
        return Err(LexError {
            span: Span::new(file.clone(), start, start),
            message: format!("unexpected character `{c}`"),
        });
    }
    Ok(tokens)
}

/// A peekable token cursor with the helpers parsers share.
pub struct Cursor {
    file: Arc<str>,
    tokens: Vec<Token>,
    pos: usize,
    eof: LineCol,
}

impl Cursor {
    pub fn new(file: &str, tokens: Vec<Token>) -> Self {
        let eof = tokens.last().map(|t| t.span.end).unwrap_or(LineCol::new(1, 1));
        Cursor { file: Arc::from(file), tokens, pos: 0, eof }
    }

    pub fn from_source(file: &str, source: &str) -> Result<Self, LexError> {
        Ok(Cursor::new(file, lex(file, source)?))
    }

    pub fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    pub fn peek_at(&self, n: usize) -> Option<&Token> {
        self.tokens.get(self.pos + n)
    }

    pub fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    /// Span of the upcoming token, or a point at end of input.
    pub fn here(&self) -> Span {
        self.peek()
            .map(|t| t.span.clone())
            .unwrap_or_else(|| Span::new(self.file.clone(), self.eof, self.eof))
    }

    pub fn at_punct(&self, p: &str) -> bool {
        self.peek().is_some_and(|t| t.is_punct(p))
    }

    pub fn at_ident(&self, text: &str) -> bool {
        self.peek().is_some_and(|t| t.is_ident(text))
    }

    pub fn eat_punct(&mut self, p: &str) -> bool {
        if self.at_punct(p) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn eat_ident(&mut self, text: &str) -> bool {
        if self.at_ident(text) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect_punct(&mut self, p: &'static str) -> Result<Token, ParseFailure> {
        match self.peek() {
            Some(t) if t.is_punct(p) => Ok(self.next().unwrap()),
            Some(t) => Err(ParseFailure {
                span: t.span.clone(),
                message: format!("expected `{p}`, found `{t}`"),
            }),
            None => Err(ParseFailure { span: self.here(), message: format!("expected `{p}`, found end of input") }),
        }
    }

    pub fn expect_ident(&mut self) -> Result<Token, ParseFailure> {
        match self.peek() {
            Some(t) if t.kind == TokenKind::Ident => Ok(self.next().unwrap()),
            Some(t) => Err(ParseFailure {
                span: t.span.clone(),
                message: format!("expected an identifier, found `{t}`"),
            }),
            None => {
                Err(ParseFailure { span: self.here(), message: "expected an identifier, found end of input".into() })
            }
        }
    }

    pub fn expect_keyword(&mut self, kw: &str) -> Result<Token, ParseFailure> {
        match self.peek() {
            Some(t) if t.is_ident(kw) => Ok(self.next().unwrap()),
            Some(t) => Err(ParseFailure {
                span: t.span.clone(),
                message: format!("expected `{kw}`, found `{t}`"),
            }),
            None => Err(ParseFailure { span: self.here(), message: format!("expected `{kw}`, found end of input") }),
        }
    }

    /// Current token index, for recovery bookkeeping.
    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn token_at(&self, i: usize) -> Option<&Token> {
        self.tokens.get(i)
    }

    /// Error recovery after a failed element parse that began at token
    /// index `element_start`: first close any `{` the element opened, then
    /// skip forward until one of `keywords`, a host-level `}`, or the end
    /// of input is at the cursor.
    pub fn recover_element(&mut self, element_start: usize, keywords: &[&str]) {
        let mut depth = 0isize;
        for i in element_start..self.pos {
            match self.tokens.get(i) {
                Some(t) if t.is_punct("{") => depth += 1,
                Some(t) if t.is_punct("}") => depth -= 1,
                _ => {}
            }
        }
        while depth > 0 {
            let Some(t) = self.next() else { return };
            if t.is_punct("{") {
                depth += 1;
            } else if t.is_punct("}") {
                depth -= 1;
            }
        }
        loop {
            match self.peek() {
                None => return,
                Some(t) if t.is_punct("}") => return,
                Some(t) if t.kind == TokenKind::Ident && keywords.contains(&t.text.as_str()) => {
                    return
                }
                Some(t) if t.is_punct("{") => {
                    self.next();
                    self.skip_to_punct(&["}"]);
                    self.eat_punct("}");
                }
                _ => {
                    self.next();
                }
            }
        }
    }

    /// Skip tokens until one of `stops` (punctuation) is at the cursor,
    /// consuming balanced `{ }` groups whole. Used for error recovery.
    /// Returns true if a stop token was found.
    pub fn skip_to_punct(&mut self, stops: &[&str]) -> bool {
        let mut depth = 0usize;
        while let Some(t) = self.peek() {
            if depth == 0 && stops.iter().any(|s| t.is_punct(s)) {
                return true;
            }
            if t.is_punct("{") {
                depth += 1;
            } else if t.is_punct("}") {
                if depth == 0 {
                    return stops.iter().any(|s| *s == "}");
                }
                depth -= 1;
            }
            self.pos += 1;
        }
        false
    }
}

/// A local parse failure; language parsers convert these into diagnostics
/// under their own syntax-error codes.
#[derive(Debug, Clone)]
pub struct ParseFailure {
    pub span: Span,
    pub message: String,
}

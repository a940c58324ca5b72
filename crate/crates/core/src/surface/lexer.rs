//! Tokenizer shared by the term, theory and bundle file parsers.

use super::ParseError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    LParen,
    RParen,
    Comma,
    Lambda,
    Dot,
    Colon,
    ColonEq,
    Turnstile,  // |-
    FatArrow,   // =>
    SquigArrow, // ~>
    RewriteArrow, // ~~>
    EqEq,       // ==
    Equals,     // =
    Slash,      // /
    Star,       // *
    Underscore,
    Eof,
}

#[derive(Debug, Clone)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    pub line: usize,
    pub col: usize,
}

pub struct Lexer {
    tokens: Vec<Token>,
    pos: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '$'
}

fn is_ident_cont(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\'' || c == '$'
}

impl Lexer {
    pub fn new(text: &str) -> Lexer {
        let mut tokens: Vec<Token> = Vec::new();
        let mut line = 1usize;
        let mut col = 1usize;
        let mut chars = text.chars().peekable();
        macro_rules! push {
            ($kind:expr, $text:expr, $l:expr, $c:expr) => {
                tokens.push(Token { kind: $kind, text: $text, line: $l, col: $c })
            };
        }
        while let Some(&c) = chars.peek() {
            let (l, co) = (line, col);
            match c {
                '\n' => {
                    chars.next();
                    line += 1;
                    col = 1;
                }
                c if c.is_whitespace() => {
                    chars.next();
                    col += 1;
                }
                '-' => {
                    // `--` starts a comment; otherwise the dash continues
                    // the preceding identifier (`Id-`, `at-beta`).
                    chars.next();
                    col += 1;
                    if chars.peek() == Some(&'-') {
                        while let Some(&c2) = chars.peek() {
                            if c2 == '\n' {
                                break;
                            }
                            chars.next();
                            col += 1;
                        }
                    } else {
                        let mut s = String::from("-");
                        while let Some(&c2) = chars.peek() {
                            if is_ident_cont(c2) || c2 == '-' {
                                s.push(c2);
                                chars.next();
                                col += 1;
                            } else {
                                break;
                            }
                        }
                        match tokens.last_mut() {
                            Some(tok) if tok.kind == TokenKind::Ident => tok.text.push_str(&s),
                            _ => push!(TokenKind::Ident, s, l, co),
                        }
                    }
                }
                '(' => {
                    chars.next();
                    col += 1;
                    push!(TokenKind::LParen, "(".into(), l, co);
                }
                ')' => {
                    chars.next();
                    col += 1;
                    push!(TokenKind::RParen, ")".into(), l, co);
                }
                ',' => {
                    chars.next();
                    col += 1;
                    push!(TokenKind::Comma, ",".into(), l, co);
                }
                '\\' => {
                    chars.next();
                    col += 1;
                    push!(TokenKind::Lambda, "\\".into(), l, co);
                }
                '.' => {
                    chars.next();
                    col += 1;
                    push!(TokenKind::Dot, ".".into(), l, co);
                }
                '*' => {
                    chars.next();
                    col += 1;
                    push!(TokenKind::Star, "*".into(), l, co);
                }
                '/' => {
                    chars.next();
                    col += 1;
                    push!(TokenKind::Slash, "/".into(), l, co);
                }
                ':' => {
                    chars.next();
                    col += 1;
                    if chars.peek() == Some(&'=') {
                        chars.next();
                        col += 1;
                        push!(TokenKind::ColonEq, ":=".into(), l, co);
                    } else {
                        push!(TokenKind::Colon, ":".into(), l, co);
                    }
                }
                '|' => {
                    chars.next();
                    col += 1;
                    if chars.peek() == Some(&'-') {
                        chars.next();
                        col += 1;
                        push!(TokenKind::Turnstile, "|-".into(), l, co);
                    } else {
                        push!(TokenKind::Ident, "|".into(), l, co);
                    }
                }
                '=' => {
                    chars.next();
                    col += 1;
                    match chars.peek() {
                        Some(&'>') => {
                            chars.next();
                            col += 1;
                            push!(TokenKind::FatArrow, "=>".into(), l, co);
                        }
                        Some(&'=') => {
                            chars.next();
                            col += 1;
                            push!(TokenKind::EqEq, "==".into(), l, co);
                        }
                        _ => push!(TokenKind::Equals, "=".into(), l, co),
                    }
                }
                '~' => {
                    chars.next();
                    col += 1;
                    if chars.peek() == Some(&'~') {
                        chars.next();
                        col += 1;
                        if chars.peek() == Some(&'>') {
                            chars.next();
                            col += 1;
                            push!(TokenKind::RewriteArrow, "~~>".into(), l, co);
                        } else {
                            push!(TokenKind::Ident, "~~".into(), l, co);
                        }
                    } else if chars.peek() == Some(&'>') {
                        chars.next();
                        col += 1;
                        push!(TokenKind::SquigArrow, "~>".into(), l, co);
                    } else {
                        push!(TokenKind::Ident, "~".into(), l, co);
                    }
                }
                c if is_ident_start(c) => {
                    let mut s = String::new();
                    while let Some(&c2) = chars.peek() {
                        if is_ident_cont(c2) {
                            s.push(c2);
                            chars.next();
                            col += 1;
                        } else {
                            break;
                        }
                    }
                    if s == "_" {
                        push!(TokenKind::Underscore, s, l, co);
                    } else {
                        push!(TokenKind::Ident, s, l, co);
                    }
                }
                other => {
                    push!(TokenKind::Ident, other.to_string(), l, co);
                    chars.next();
                    col += 1;
                }
            }
        }
        tokens.push(Token {
            kind: TokenKind::Eof,
            text: String::new(),
            line,
            col,
        });
        Lexer { tokens, pos: 0 }
    }

    pub fn peek(&self) -> Token {
        self.tokens[self.pos.min(self.tokens.len() - 1)].clone()
    }

    pub fn peek_kind(&self) -> TokenKind {
        self.peek().kind
    }

    pub fn peek2_kind(&self) -> TokenKind {
        self.tokens[(self.pos + 1).min(self.tokens.len() - 1)].kind
    }

    pub fn bump(&mut self) -> Token {
        let t = self.peek();
        if self.pos < self.tokens.len() - 1 {
            self.pos += 1;
        }
        t
    }

    pub fn expect(&mut self, kind: TokenKind) -> Result<Token, ParseError> {
        let t = self.peek();
        if t.kind == kind {
            Ok(self.bump())
        } else {
            Err(ParseError::at(
                &t,
                format!("expected {:?}, found `{}`", kind, t.text),
            ))
        }
    }

    pub fn expect_ident(&mut self) -> Result<String, ParseError> {
        Ok(self.expect(TokenKind::Ident)?.text)
    }

    /// Expect a specific keyword identifier.
    pub fn expect_kw(&mut self, kw: &str) -> Result<(), ParseError> {
        let t = self.peek();
        if t.kind == TokenKind::Ident && t.text == kw {
            self.bump();
            Ok(())
        } else {
            Err(ParseError::at(&t, format!("expected `{}`", kw)))
        }
    }

    pub fn at_kw(&self, kw: &str) -> bool {
        let t = self.peek();
        t.kind == TokenKind::Ident && t.text == kw
    }

    pub fn expect_eof(&mut self) -> Result<(), ParseError> {
        let t = self.peek();
        if t.kind == TokenKind::Eof {
            Ok(())
        } else {
            Err(ParseError::at(&t, format!("unexpected `{}`", t.text)))
        }
    }

    pub fn is_eof(&self) -> bool {
        self.peek_kind() == TokenKind::Eof
    }

    pub fn clone_state(&self) -> usize {
        self.pos
    }

    pub fn restore(&mut self, state: usize) {
        self.pos = state;
    }

    /// Scan ahead from the current position for a token satisfying
    /// `target` at parenthesis depth zero, stopping at a depth-zero token
    /// satisfying `stop` or at end of input.
    pub fn scan_depth_zero(
        &self,
        target: impl Fn(TokenKind) -> bool,
        stop: impl Fn(TokenKind) -> bool,
    ) -> bool {
        let mut depth = 0i32;
        for t in &self.tokens[self.pos..] {
            match t.kind {
                TokenKind::LParen => depth += 1,
                TokenKind::RParen => {
                    if depth == 0 {
                        return false;
                    }
                    depth -= 1;
                }
                TokenKind::Eof => return false,
                k => {
                    if depth == 0 {
                        if target(k) {
                            return true;
                        }
                        if stop(k) {
                            return false;
                        }
                    }
                }
            }
        }
        false
    }
}

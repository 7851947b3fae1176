//! Tokenizer shared by the presentation DSL and the algebra element literals.
//!
//! Identifiers are maximal alphanumeric runs. Inside words the parser splits
//! a run into generator names (one ASCII letter plus optional digits), so
//! juxtaposed words like `abc^2` read as `a`, `b`, `c^2` without spaces.

use super::PresentationError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Int(i64),
    Caret,
    Minus,
    Plus,
    Star,
    Eq,
    Comma,
    Colon,
    Semi,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::Eof => "end of input".to_string(),
            other => format!("`{}`", other.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::Caret => "^",
            Tok::Minus => "-",
            Tok::Plus => "+",
            Tok::Star => "*",
            Tok::Eq => "=",
            Tok::Comma => ",",
            Tok::Colon => ":",
            Tok::Semi => ";",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            _ => "?",
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Spanned {
    pub tok: Tok,
    pub offset: usize,
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Spanned>, PresentationError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let tok = if c.is_ascii_alphabetic() {
            i += 1;
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            Tok::Ident(text[start..i].to_string())
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let value = text[start..i]
                .parse::<i64>()
                .map_err(|_| PresentationError::syntax(start, "integer literal out of range"))?;
            Tok::Int(value)
        } else {
            i += 1;
            match c {
                b'^' => Tok::Caret,
                b'-' => Tok::Minus,
                b'+' => Tok::Plus,
                b'*' => Tok::Star,
                b'=' => Tok::Eq,
                b',' => Tok::Comma,
                b':' => Tok::Colon,
                b';' => Tok::Semi,
                b'(' => Tok::LParen,
                b')' => Tok::RParen,
                b'[' => Tok::LBracket,
                b']' => Tok::RBracket,
                b'{' => Tok::LBrace,
                b'}' => Tok::RBrace,
                _ => {
                    let ch = text[start..].chars().next().unwrap_or('?');
                    return Err(PresentationError::syntax(
                        start,
                        format!("unexpected character {ch:?}"),
                    ));
                }
            }
        };
        out.push(Spanned { tok, offset: start });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        offset: text.len(),
    });
    Ok(out)
}

/// Cursor over a token stream.
pub(crate) struct Cursor {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Cursor {
    pub(crate) fn new(text: &str) -> Result<Self, PresentationError> {
        Ok(Cursor {
            toks: tokenize(text)?,
            pos: 0,
        })
    }

    pub(crate) fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    pub(crate) fn offset(&self) -> usize {
        self.toks[self.pos].offset
    }

    pub(crate) fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    /// If the current token is an identifier run holding several generator
    /// names, splits off the first name and leaves the rest as the next token.
    pub(crate) fn split_ident(&mut self) {
        let Spanned { tok, offset } = &self.toks[self.pos];
        let Tok::Ident(run) = tok else { return };
        let first = first_segment_len(run);
        if first < run.len() {
            let offset = *offset;
            let rest = Spanned {
                tok: Tok::Ident(run[first..].to_string()),
                offset: offset + first,
            };
            let head = Spanned {
                tok: Tok::Ident(run[..first].to_string()),
                offset,
            };
            self.toks[self.pos] = head;
            self.toks.insert(self.pos + 1, rest);
        }
    }

    pub(crate) fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, tok: &Tok) -> Result<(), PresentationError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("expected `{}`", tok.symbol())))
        }
    }

    pub(crate) fn unexpected(&self, what: &str) -> PresentationError {
        PresentationError::syntax(
            self.offset(),
            format!("{what}, found {}", self.peek().describe()),
        )
    }
}

/// Length of the leading generator name in an identifier run: one letter
/// followed by any digits.
pub(crate) fn first_segment_len(run: &str) -> usize {
    let bytes = run.as_bytes();
    let mut i = 1;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    i
}

/// Whether `name` is a valid generator name.
pub(crate) fn is_generator_name(name: &str) -> bool {
    let bytes = name.as_bytes();
    !bytes.is_empty()
        && bytes[0].is_ascii_alphabetic()
        && bytes[1..].iter().all(u8::is_ascii_digit)
}

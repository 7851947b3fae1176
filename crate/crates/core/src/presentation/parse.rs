//! Recursive-descent parser for the presentation DSL.
//!
//! ```text
//! presentation := "gens" ":" name ("," name)* ";" "rels" ":" [relation ("," relation)*] [";"]
//! relation     := word ("=" word)*
//! word         := factor (["*"] factor)*
//! factor       := atom ("^" (["-"] int | atom))*
//! atom         := name | "1" | "(" word ")" | "[" word "," word ("," word)* "]"
//! ```
//!
//! `x^3` is a power and `x^y` a conjugation `y^-1 x y`. Commutators with more
//! than two entries are left-normed: `[a,b,c] = [[a,b],c]`.

use std::collections::HashMap;

use super::lexer::{is_generator_name, Cursor, Tok};
use super::{GenId, Presentation, PresentationError, Word};

/// Parses words over a fixed list of generator names.
pub(crate) struct WordParser<'n> {
    names: HashMap<&'n str, GenId>,
}

impl<'n> WordParser<'n> {
    pub(crate) fn new<S: AsRef<str>>(names: &'n [S]) -> Self {
        WordParser {
            names: names
                .iter()
                .enumerate()
                .map(|(i, n)| (n.as_ref(), i))
                .collect(),
        }
    }

    pub(crate) fn starts_factor(cur: &Cursor) -> bool {
        matches!(
            cur.peek(),
            Tok::Ident(_) | Tok::Int(1) | Tok::LParen | Tok::LBracket
        )
    }

    pub(crate) fn word(&self, cur: &mut Cursor) -> Result<Word, PresentationError> {
        if !Self::starts_factor(cur) {
            return Err(cur.unexpected("expected a word"));
        }
        let mut w = self.factor(cur)?;
        loop {
            if cur.peek() == &Tok::Star {
                cur.bump();
                w = w.mul(&self.factor(cur)?);
            } else if Self::starts_factor(cur) {
                w = w.mul(&self.factor(cur)?);
            } else {
                return Ok(w);
            }
        }
    }

    pub(crate) fn factor(&self, cur: &mut Cursor) -> Result<Word, PresentationError> {
        let mut base = self.atom(cur)?;
        while cur.peek() == &Tok::Caret {
            cur.bump();
            base = match cur.peek().clone() {
                Tok::Minus => {
                    cur.bump();
                    let n = int_literal(cur)?;
                    base.pow(-n)
                }
                Tok::Int(_) => {
                    let n = int_literal(cur)?;
                    base.pow(n)
                }
                _ => {
                    let by = self.atom(cur)?;
                    Word::conjugate(&base, &by)
                }
            };
        }
        Ok(base)
    }

    pub(crate) fn atom(&self, cur: &mut Cursor) -> Result<Word, PresentationError> {
        cur.split_ident();
        match cur.peek().clone() {
            Tok::Ident(name) => {
                let offset = cur.offset();
                cur.bump();
                self.generator(&name, offset).map(Word::generator)
            }
            Tok::Int(1) => {
                cur.bump();
                Ok(Word::identity())
            }
            Tok::LParen => {
                cur.bump();
                let w = self.word(cur)?;
                cur.expect(&Tok::RParen)?;
                Ok(w)
            }
            Tok::LBracket => {
                cur.bump();
                let mut acc = self.word(cur)?;
                cur.expect(&Tok::Comma)?;
                let second = self.word(cur)?;
                acc = Word::commutator(&acc, &second);
                while cur.eat(&Tok::Comma) {
                    let next = self.word(cur)?;
                    acc = Word::commutator(&acc, &next);
                }
                cur.expect(&Tok::RBracket)?;
                Ok(acc)
            }
            _ => Err(cur.unexpected("expected a generator, `1`, `(` or `[`")),
        }
    }

    pub(crate) fn generator(&self, name: &str, offset: usize) -> Result<GenId, PresentationError> {
        self.names
            .get(name)
            .copied()
            .ok_or_else(|| PresentationError::UnknownGenerator {
                name: name.to_string(),
                offset,
            })
    }
}

pub(crate) fn int_literal(cur: &mut Cursor) -> Result<i64, PresentationError> {
    match cur.peek() {
        Tok::Int(n) => {
            let n = *n;
            cur.bump();
            Ok(n)
        }
        _ => Err(cur.unexpected("expected an integer")),
    }
}

fn keyword(cur: &mut Cursor, kw: &str) -> Result<(), PresentationError> {
    match cur.peek() {
        Tok::Ident(s) if s == kw => {
            cur.bump();
            Ok(())
        }
        _ => Err(cur.unexpected(&format!("expected `{kw}`"))),
    }
}

/// Parses the `gens: ...; rels: ...` DSL into a presentation with freely
/// reduced relators. A relation `x = y = z` contributes `x y^-1` and `y z^-1`
/// in source order; a bare word `w` contributes `w`.
pub fn parse_presentation(text: &str) -> Result<Presentation, PresentationError> {
    let mut cur = Cursor::new(text)?;
    keyword(&mut cur, "gens")?;
    cur.expect(&Tok::Colon)?;
    let mut names: Vec<String> = Vec::new();
    loop {
        let offset = cur.offset();
        match cur.bump().tok {
            Tok::Ident(name) => {
                if !is_generator_name(&name) {
                    return Err(PresentationError::InvalidGeneratorName { name, offset });
                }
                if names.contains(&name) {
                    return Err(PresentationError::DuplicateGenerator { name, offset });
                }
                names.push(name);
            }
            other => {
                return Err(PresentationError::syntax(
                    offset,
                    format!("expected a generator name, found {}", other.describe()),
                ))
            }
        }
        if !cur.eat(&Tok::Comma) {
            break;
        }
    }
    cur.expect(&Tok::Semi)?;
    keyword(&mut cur, "rels")?;
    cur.expect(&Tok::Colon)?;

    let parser = WordParser::new(&names);
    let mut relators = Vec::new();
    if WordParser::starts_factor(&cur) {
        loop {
            let mut prev = parser.word(&mut cur)?;
            let mut chained = false;
            while cur.eat(&Tok::Eq) {
                let next = parser.word(&mut cur)?;
                relators.push(prev.mul(&next.inverse()));
                prev = next;
                chained = true;
            }
            if !chained {
                relators.push(prev);
            }
            if !cur.eat(&Tok::Comma) {
                break;
            }
        }
    }
    cur.eat(&Tok::Semi);
    if cur.peek() != &Tok::Eof {
        return Err(cur.unexpected("expected `,` or end of input"));
    }
    Ok(Presentation::new(names, relators))
}

/// Parses a single word over the given generator names.
pub fn parse_word<S: AsRef<str>>(text: &str, names: &[S]) -> Result<Word, PresentationError> {
    let mut cur = Cursor::new(text)?;
    let w = WordParser::new(names).word(&mut cur)?;
    if cur.peek() != &Tok::Eof {
        return Err(cur.unexpected("expected end of word"));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &[(GenId, i64)]) -> Word {
        Word::from_syllables(s.iter().copied())
    }

    #[test]
    fn quaternion_relators() {
        let p = parse_presentation("gens: a,b; rels: a^4=1, a^2=b^2=[a,b]").unwrap();
        assert_eq!(p.generator_names(), &["a", "b"]);
        let expected = vec![
            w(&[(0, 4)]),
            w(&[(0, 2), (1, -2)]),
            // b^2 [a,b]^-1 = b^2 b^-1 a^-1 b a = b a^-1 b a
            w(&[(1, 1), (0, -1), (1, 1), (0, 1)]),
        ];
        assert_eq!(p.relators(), expected.as_slice());
    }

    #[test]
    fn trivial_group() {
        let p = parse_presentation("gens: a; rels: a^1=1").unwrap();
        assert_eq!(p.relators(), &[Word::generator(0)]);
    }

    #[test]
    fn conjugation_with_word_exponent() {
        // Hand expansion of a^b = a^(1+2^(n-1)) for n = 3.
        let p = parse_presentation("gens: a,b; rels: a^8=1, b^4=1, a^b=a^5").unwrap();
        assert_eq!(
            p.relators(),
            &[
                w(&[(0, 8)]),
                w(&[(1, 4)]),
                w(&[(1, -1), (0, 1), (1, 1), (0, -5)])
            ]
        );
    }

    #[test]
    fn inverse_binds_tighter_than_juxtaposition() {
        let names = ["a", "b"];
        assert_eq!(
            parse_word("ab^-1", &names).unwrap(),
            w(&[(0, 1), (1, -1)])
        );
        assert_eq!(
            parse_word("(ab)^-1", &names).unwrap(),
            w(&[(1, -1), (0, -1)])
        );
        assert_eq!(
            parse_word("a^(ab)", &names).unwrap(),
            w(&[(1, -1), (0, 1), (1, 1)])
        );
        assert_eq!(
            parse_word("[a,b,a]", &names).unwrap(),
            Word::commutator(
                &Word::commutator(&Word::generator(0), &Word::generator(1)),
                &Word::generator(0)
            )
        );
    }

    #[test]
    fn unknown_generator_has_offset() {
        let err = parse_presentation("gens: a,b; rels: a^2 = c").unwrap_err();
        assert_eq!(
            err,
            PresentationError::UnknownGenerator {
                name: "c".into(),
                offset: 23
            }
        );
    }

    #[test]
    fn syntax_error_offsets() {
        let err = parse_presentation("gens: a; rels: a^ = 1").unwrap_err();
        assert!(matches!(err, PresentationError::Syntax { offset: 18, .. }), "{err:?}");
        let err = parse_presentation("gens: a rels: a").unwrap_err();
        assert!(matches!(err, PresentationError::Syntax { offset: 8, .. }), "{err:?}");
    }

    #[test]
    fn free_group_is_flagged() {
        let p = parse_presentation("gens: a, b; rels:").unwrap();
        assert!(p.is_free());
    }

    #[test]
    fn rejects_bad_generator_names() {
        assert!(matches!(
            parse_presentation("gens: ab; rels: ab"),
            Err(PresentationError::InvalidGeneratorName { .. })
        ));
        assert!(matches!(
            parse_presentation("gens: a, a; rels: a"),
            Err(PresentationError::DuplicateGenerator { .. })
        ));
    }
}

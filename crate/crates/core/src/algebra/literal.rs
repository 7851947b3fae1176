//! Element literals such as `1 + a + b*c^2`, `1+b(1+c^2)` or `{w}a + {w+1}`.
//!
//! A literal is a sum of products. Factors are generators with integer
//! powers, `1`, `0`, group commutators `[x,y]`, parenthesized sums, and
//! GF(4) scalars in braces (`{w}`, `{w+1}`). Juxtaposition and `*` both
//! multiply; `-` is the same as `+` in characteristic 2. Negative powers
//! are allowed on units.

use super::{AlgebraElement, AlgebraError, Gf4, GroupAlgebra};
use crate::presentation::lexer::{Cursor, Tok};
use crate::presentation::parse::{int_literal, WordParser};

impl GroupAlgebra<'_> {
    pub fn parse(&self, text: &str) -> Result<AlgebraElement, AlgebraError> {
        let names = self.group().generator_names();
        let words = WordParser::new(names);
        let mut cur = Cursor::new(text)?;
        let parser = LiteralParser { alg: self, words };
        let x = parser.sum(&mut cur)?;
        if cur.peek() != &Tok::Eof {
            return Err(cur.unexpected("expected `+` or end of literal").into());
        }
        Ok(x)
    }

    /// Prints `x` as a literal that [`GroupAlgebra::parse`] reads back.
    pub fn format(&self, x: &AlgebraElement) -> String {
        let g = self.group();
        let terms: Vec<String> = x
            .support()
            .into_iter()
            .map(|e| {
                let c = x.coeff(e);
                let name = g.name(e);
                match (c == Gf4::ONE, e == g.identity()) {
                    (true, _) => name.to_string(),
                    (false, true) => format!("{{{c}}}"),
                    (false, false) => format!("{{{c}}}*{name}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

struct LiteralParser<'a, 'g, 'n> {
    alg: &'a GroupAlgebra<'g>,
    words: WordParser<'n>,
}

impl LiteralParser<'_, '_, '_> {
    fn sum(&self, cur: &mut Cursor) -> Result<AlgebraElement, AlgebraError> {
        while matches!(cur.peek(), Tok::Plus | Tok::Minus) {
            cur.bump();
        }
        let mut acc = self.product(cur)?;
        while matches!(cur.peek(), Tok::Plus | Tok::Minus) {
            cur.bump();
            acc = &acc + &self.product(cur)?;
        }
        Ok(acc)
    }

    fn starts_factor(cur: &Cursor) -> bool {
        matches!(
            cur.peek(),
            Tok::Ident(_) | Tok::Int(0) | Tok::Int(1) | Tok::LParen | Tok::LBracket | Tok::LBrace
        )
    }

    fn product(&self, cur: &mut Cursor) -> Result<AlgebraElement, AlgebraError> {
        if !Self::starts_factor(cur) {
            return Err(cur.unexpected("expected a term").into());
        }
        let mut acc = self.factor(cur)?;
        loop {
            if !cur.eat(&Tok::Star) && !Self::starts_factor(cur) {
                return Ok(acc);
            }
            acc = self.alg.mul(&acc, &self.factor(cur)?)?;
        }
    }

    fn factor(&self, cur: &mut Cursor) -> Result<AlgebraElement, AlgebraError> {
        let mut base = self.primary(cur)?;
        while cur.eat(&Tok::Caret) {
            let negative = cur.eat(&Tok::Minus);
            let k = int_literal(cur)?;
            base = self.alg.pow(&base, if negative { -k } else { k })?;
        }
        Ok(base)
    }

    fn primary(&self, cur: &mut Cursor) -> Result<AlgebraElement, AlgebraError> {
        let g = self.alg.group();
        match cur.peek().clone() {
            Tok::Ident(_) => {
                cur.split_ident();
                let Tok::Ident(name) = cur.peek().clone() else {
                    unreachable!("split_ident keeps an identifier in place")
                };
                let offset = cur.offset();
                cur.bump();
                let id = self.words.generator(&name, offset)?;
                Ok(self.alg.basis_element(g.generators()[id]))
            }
            Tok::Int(0) => {
                cur.bump();
                Ok(self.alg.zero())
            }
            Tok::Int(1) => {
                cur.bump();
                Ok(self.alg.one())
            }
            Tok::LParen => {
                cur.bump();
                let x = self.sum(cur)?;
                cur.expect(&Tok::RParen)?;
                Ok(x)
            }
            Tok::LBracket => {
                let w = self.words.atom(cur)?;
                Ok(self.alg.basis_element(g.evaluate(&w)))
            }
            Tok::LBrace => {
                let offset = cur.offset();
                cur.bump();
                let c = scalar(cur)?;
                cur.expect(&Tok::RBrace)?;
                if !self.alg.field().contains(c) {
                    return Err(AlgebraError::CoefficientOutsideField(format!(
                        "{c} at byte {offset} is not in {}",
                        self.alg.field()
                    )));
                }
                self.alg.from_terms(&[(c, g.identity())])
            }
            _ => Err(cur.unexpected("expected a generator, `0`, `1`, `(`, `[` or `{`").into()),
        }
    }
}

/// `w`, `1`, `0` joined by `+`.
fn scalar(cur: &mut Cursor) -> Result<Gf4, AlgebraError> {
    let mut c = Gf4::ZERO;
    loop {
        match cur.peek().clone() {
            Tok::Ident(s) if s == "w" => c = c.add(Gf4::W),
            Tok::Int(1) => c = c.add(Gf4::ONE),
            Tok::Int(0) => {}
            _ => return Err(cur.unexpected("expected `w`, `1` or `0`").into()),
        }
        cur.bump();
        if !cur.eat(&Tok::Plus) {
            return Ok(c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::group::{direct_product, FiniteGroup};
    use crate::presentation::Builtin;

    fn build(b: Builtin) -> FiniteGroup {
        FiniteGroup::from_presentation(&b.presentation().unwrap()).unwrap()
    }

    #[test]
    fn juxtaposed_words() {
        let g = build(Builtin::Q8xQ8);
        let alg = GroupAlgebra::new(&g, Field::Gf2);
        let x = alg.parse("1+a+bc^2+c+abc+a^2d+abd+acd+bcd").unwrap();
        assert_eq!(x.support().len(), 9);
        assert_eq!(alg.augmentation(&x), Gf4::ONE);
        let y = alg.parse("1+b(1+c^2)").unwrap();
        let y2 = alg.parse("1 + b + b*c^2").unwrap();
        assert_eq!(y, y2);
        assert_eq!(alg.parse("a*b - a b").unwrap(), alg.zero());
    }

    #[test]
    fn inverses_and_commutators() {
        let g = build(Builtin::Q8);
        let alg = GroupAlgebra::new(&g, Field::Gf2);
        let (a, b) = (g.generators()[0], g.generators()[1]);
        assert_eq!(alg.parse("b^-1").unwrap(), alg.basis_element(g.inv(b)));
        assert_eq!(alg.parse("[a,b]").unwrap(), alg.basis_element(g.commutator(a, b)));
        let u = alg.parse("1+a+b").unwrap();
        let ui = alg.parse("(1+a+b)^-1").unwrap();
        assert_eq!(alg.mul(&u, &ui).unwrap(), alg.one());
        assert!(matches!(alg.parse("(a+b)^-1"), Err(AlgebraError::NotNormalized)));
    }

    #[test]
    fn scalars() {
        let g = build(Builtin::Cyclic(4));
        let alg = GroupAlgebra::new(&g, Field::Gf4);
        let x = alg.parse("{w}c + {w+1} + c^2").unwrap();
        assert_eq!(x.coeff(0), Gf4::W2);
        assert_eq!(x.coeff(1), Gf4::W);
        assert_eq!(alg.parse("{w}{w}").unwrap(), alg.parse("{w+1}").unwrap());
        let gf2 = GroupAlgebra::new(&g, Field::Gf2);
        assert!(matches!(gf2.parse("{w}c"), Err(AlgebraError::CoefficientOutsideField(_))));
        assert_eq!(gf2.parse("{1}c").unwrap(), gf2.parse("c").unwrap());
    }

    #[test]
    fn format_round_trip() {
        let g = direct_product(&build(Builtin::Q8), &build(Builtin::Cyclic(2))).unwrap();
        for field in [Field::Gf2, Field::Gf4] {
            let alg = GroupAlgebra::new(&g, field);
            let x = if field == Field::Gf4 {
                alg.parse("{w}+a^3 c + {w+1}b a").unwrap()
            } else {
                alg.parse("1+a^3 c + b a").unwrap()
            };
            let text = alg.format(&x);
            assert_eq!(alg.parse(&text).unwrap(), x, "{text}");
            assert_eq!(alg.format(&alg.zero()), "0");
        }
    }

    #[test]
    fn errors_carry_offsets() {
        let g = build(Builtin::Q8);
        let alg = GroupAlgebra::new(&g, Field::Gf2);
        assert!(matches!(alg.parse("1 + z"), Err(AlgebraError::Syntax(_))));
        assert!(alg.parse("1 +").is_err());
        assert!(alg.parse("a)").is_err());
        assert!(alg.parse("2a").is_err());
    }
}

use std::fmt;
use std::str::FromStr;

use super::{parse_presentation, Presentation, PresentationError};

/// Parameterized presentations of the group families used throughout the
/// crate. Exponents such as `1 + 2^(n-1)` are resolved here, so the DSL text
/// handed to the parser only ever contains concrete integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Builtin {
    /// Cyclic group of the given order (a power of two).
    Cyclic(u32),
    /// `S(n,m) = <a,b | a^(2^n) = b^(2^m) = 1, a^b = a^(1+2^(n-1))>`, `n, m >= 2`.
    S(u32, u32),
    /// `S(n,1)`, the modular group of order `2^(n+1)`, `n >= 2`.
    ModularS(u32),
    /// Dihedral group of order `2^k`, `k >= 3`.
    DihedralPow(u32),
    /// Generalized quaternion group of order `2^k`, `k >= 3`.
    GenQuaternion(u32),
    Q8,
    /// Three-generator group of order 32.
    H32,
    /// Four-generator Suzuki 2-group of order 64 on `x, y, u, v`.
    H245,
    /// The same group on generators `a, b, d, f`, the form the explicit
    /// witness units are written in.
    H245b,
    /// `C_(2^n) ⋊ Q8` with `[a,d] = d^(2^(n-1))`, `[b,d] = 1`, `n >= 2`.
    TheoremIII(u32),
    /// `S(2,2)` written as `<a,b | a^4 = b^4 = 1, a^2 = [b,a]>`.
    S22,
    /// Central product of `S(2,2)` and `Q8` on generators `a, b, d, f`.
    S22oQ8,
    /// `Q8 × Q8` on generators `a, b` (first factor) and `c, d` (second).
    Q8xQ8,
}

fn pow2(k: u32) -> u64 {
    1u64 << k
}

impl Builtin {
    fn family(&self) -> &'static str {
        match self {
            Builtin::Cyclic(_) => "Cyclic",
            Builtin::S(..) => "S",
            Builtin::ModularS(_) => "ModularS",
            Builtin::DihedralPow(_) => "DihedralPow",
            Builtin::GenQuaternion(_) => "GenQuaternion",
            Builtin::Q8 => "Q8",
            Builtin::H32 => "H32",
            Builtin::H245 => "H245",
            Builtin::H245b => "H245b",
            Builtin::TheoremIII(_) => "TheoremIII",
            Builtin::S22 => "S22",
            Builtin::S22oQ8 => "S22oQ8",
            Builtin::Q8xQ8 => "Q8xQ8",
        }
    }

    fn out_of_range(&self, message: &str) -> PresentationError {
        PresentationError::ParameterOutOfRange {
            family: self.family().to_string(),
            message: message.to_string(),
        }
    }

    /// Checks parameter ranges; exponents are capped so group orders stay
    /// at or below 4096.
    pub fn validate(&self) -> Result<(), PresentationError> {
        let ok = match *self {
            Builtin::Cyclic(n) => n >= 1 && n.is_power_of_two() && n <= 4096,
            Builtin::S(n, m) => n >= 2 && m >= 2 && n + m <= 12,
            Builtin::ModularS(n) => (2..=11).contains(&n),
            Builtin::DihedralPow(k) | Builtin::GenQuaternion(k) => (3..=12).contains(&k),
            Builtin::TheoremIII(n) => (2..=9).contains(&n),
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(self.out_of_range(match self {
                Builtin::Cyclic(_) => "order must be a power of two in 1..=4096",
                Builtin::S(..) => "need n, m >= 2 and n + m <= 12",
                Builtin::ModularS(_) => "need 2 <= n <= 11",
                Builtin::TheoremIII(_) => "need 2 <= n <= 9",
                _ => "need 3 <= k <= 12",
            }))
        }
    }

    /// Order of the group the presentation defines.
    pub fn expected_order(&self) -> usize {
        let order = match *self {
            Builtin::Cyclic(n) => n as u64,
            Builtin::S(n, m) => pow2(n + m),
            Builtin::ModularS(n) => pow2(n + 1),
            Builtin::DihedralPow(k) | Builtin::GenQuaternion(k) => pow2(k),
            Builtin::Q8 => 8,
            Builtin::H32 => 32,
            Builtin::H245 | Builtin::H245b | Builtin::S22oQ8 | Builtin::Q8xQ8 => 64,
            Builtin::TheoremIII(n) => pow2(n + 3),
            Builtin::S22 => 16,
        };
        order as usize
    }

    /// DSL text of the presentation.
    pub fn text(&self) -> Result<String, PresentationError> {
        self.validate()?;
        Ok(match *self {
            Builtin::Cyclic(n) => format!("gens: c; rels: c^{n}"),
            Builtin::S(n, m) => format!(
                "gens: a,b; rels: a^{}=b^{}=1, a^b=a^{}",
                pow2(n),
                pow2(m),
                1 + pow2(n - 1)
            ),
            Builtin::ModularS(n) => format!(
                "gens: a,b; rels: a^{}=b^2=1, a^b=a^{}",
                pow2(n),
                1 + pow2(n - 1)
            ),
            Builtin::DihedralPow(k) => {
                format!("gens: a,b; rels: a^{}=b^2=1, a^b=a^-1", pow2(k - 1))
            }
            Builtin::GenQuaternion(k) => format!(
                "gens: a,b; rels: a^{}=1, b^2=a^{}, a^b=a^-1",
                pow2(k - 1),
                pow2(k - 2)
            ),
            Builtin::Q8 => "gens: a,b; rels: a^4=1, a^2=b^2=[a,b]".to_string(),
            Builtin::H32 => {
                "gens: x,y,u; rels: x^4=y^4=1, x^2=[y,x], y^2=u^2=[u,x], x^2y^2=[u,y]".to_string()
            }
            Builtin::H245 => "gens: x,y,u,v; rels: x^4=y^4=[v,u]=1, x^2=v^2=[y,x]=[v,y], \
                              y^2=u^2=[u,x], x^2y^2=[u,y]=[v,x]"
                .to_string(),
            Builtin::H245b => "gens: a,b,d,f; rels: a^4=b^4=1, f^2=d^2=a^2, [a,b]=1, \
                               [a,d]=[b,f]=[d,f]=b^2, [b,d]=a^2, [a,f]=a^2b^2"
                .to_string(),
            Builtin::TheoremIII(n) => format!(
                "gens: a,b,d; rels: a^4=1, a^2=b^2=[a,b], d^{}=1, [a,d]=d^{}, [b,d]=1",
                pow2(n),
                pow2(n - 1)
            ),
            Builtin::S22 => "gens: a,b; rels: a^4=b^4=1, a^2=[b,a]".to_string(),
            Builtin::S22oQ8 => "gens: a,b,d,f; rels: a^4=d^4=1, b^2=a^2=[a,b], \
                                f^2=d^2=[d,f], [a,d]=[b,d]=[b,f]=1, [a,f]=a^2"
                .to_string(),
            Builtin::Q8xQ8 => "gens: a,b,c,d; rels: a^4=1, a^2=b^2=[a,b], c^4=1, \
                               c^2=d^2=[c,d], [a,c]=[a,d]=[b,c]=[b,d]=1"
                .to_string(),
        })
    }

    pub fn presentation(&self) -> Result<Presentation, PresentationError> {
        let text = self.text()?;
        Ok(parse_presentation(&text).expect("builtin presentation text parses"))
    }

    /// Builds from a family name and parameter list, e.g. `("S", [2, 3])`.
    pub fn from_parts(name: &str, params: &[u32]) -> Result<Builtin, PresentationError> {
        let bad = |msg: &str| PresentationError::ParameterOutOfRange {
            family: name.to_string(),
            message: msg.to_string(),
        };
        let one = |p: &[u32]| match p {
            [x] => Ok(*x),
            _ => Err(bad("expected one parameter")),
        };
        let none = |p: &[u32], b: Builtin| {
            if p.is_empty() {
                Ok(b)
            } else {
                Err(bad("takes no parameters"))
            }
        };
        let b = match name {
            "Cyclic" | "C" => Builtin::Cyclic(one(params)?),
            "S" => match params {
                [n, m] => Builtin::S(*n, *m),
                _ => return Err(bad("expected two parameters n, m")),
            },
            "ModularS" => match params {
                [n] | [n, 1] => Builtin::ModularS(*n),
                _ => return Err(bad("expected parameters n or n, 1")),
            },
            "DihedralPow" | "D" => Builtin::DihedralPow(one(params)?),
            "GenQuaternion" | "Q" => Builtin::GenQuaternion(one(params)?),
            "TheoremIII" => Builtin::TheoremIII(one(params)?),
            "Q8" => none(params, Builtin::Q8)?,
            "H32" => none(params, Builtin::H32)?,
            "H245" => none(params, Builtin::H245)?,
            "H245b" => none(params, Builtin::H245b)?,
            "S22" => none(params, Builtin::S22)?,
            "S22oQ8" => none(params, Builtin::S22oQ8)?,
            "Q8xQ8" => none(params, Builtin::Q8xQ8)?,
            _ => return Err(PresentationError::UnknownBuiltin(name.to_string())),
        };
        b.validate()?;
        Ok(b)
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Builtin::Cyclic(n) => write!(f, "Cyclic[{n}]"),
            Builtin::S(n, m) => write!(f, "S[{n},{m}]"),
            Builtin::ModularS(n) => write!(f, "ModularS[{n},1]"),
            Builtin::DihedralPow(k) => write!(f, "DihedralPow[{k}]"),
            Builtin::GenQuaternion(k) => write!(f, "GenQuaternion[{k}]"),
            Builtin::TheoremIII(n) => write!(f, "TheoremIII[{n}]"),
            other => f.write_str(other.family()),
        }
    }
}

/// Accepts `NAME`, `NAME[p, q]` or `NAME(p, q)`.
impl FromStr for Builtin {
    type Err = PresentationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (name, params) = match s.find(['[', '(']) {
            None => (s, Vec::new()),
            Some(open) => {
                let close = if s.as_bytes()[open] == b'[' { ']' } else { ')' };
                let inner = s[open + 1..]
                    .strip_suffix(close)
                    .ok_or_else(|| PresentationError::syntax(s.len(), format!("expected `{close}`")))?;
                let params = inner
                    .split(',')
                    .map(|p| {
                        p.trim().parse::<u32>().map_err(|_| {
                            PresentationError::syntax(open + 1, format!("bad parameter `{}`", p.trim()))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                (&s[..open], params)
            }
        };
        Builtin::from_parts(name.trim(), &params)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Word;

    #[test]
    fn s22_is_metacyclic_presentation() {
        let p = Builtin::S(2, 2).presentation().unwrap();
        assert_eq!(p.to_string(), "gens: a, b; rels: a^4*b^-4, b^4, b^-1*a*b*a^-3");
    }

    #[test]
    fn generalized_quaternion_16() {
        let p = Builtin::GenQuaternion(4).presentation().unwrap();
        assert_eq!(p.relators()[0], Word::power_of(0, 8));
        assert_eq!(
            p.relators()[1],
            Word::from_syllables([(1, 2), (0, -4)])
        );
        assert_eq!(p.to_string(), "gens: a, b; rels: a^8, b^2*a^-4, b^-1*a*b*a");
    }

    #[test]
    fn h245_relations_chain() {
        let p = Builtin::H245.presentation().unwrap();
        assert_eq!(p.generator_names(), &["x", "y", "u", "v"]);
        // x^4, y^4, [v,u] from the first chain, then three from x^2=v^2=[y,x]=[v,y],
        // two from y^2=u^2=[u,x], two from x^2y^2=[u,y]=[v,x].
        assert_eq!(p.relators().len(), 10);
    }

    #[test]
    fn parses_names_and_ranges() {
        assert_eq!("S[2,3]".parse::<Builtin>().unwrap(), Builtin::S(2, 3));
        assert_eq!("S(3, 2)".parse::<Builtin>().unwrap(), Builtin::S(3, 2));
        assert_eq!("ModularS[3,1]".parse::<Builtin>().unwrap(), Builtin::ModularS(3));
        assert_eq!("Q8".parse::<Builtin>().unwrap(), Builtin::Q8);
        assert!(matches!(
            "S[1,2]".parse::<Builtin>(),
            Err(PresentationError::ParameterOutOfRange { .. })
        ));
        assert!(matches!(
            "Cyclic[6]".parse::<Builtin>(),
            Err(PresentationError::ParameterOutOfRange { .. })
        ));
        assert!(matches!(
            "Nope".parse::<Builtin>(),
            Err(PresentationError::UnknownBuiltin(_))
        ));
        for b in [Builtin::S(2, 3), Builtin::TheoremIII(3), Builtin::H245b, Builtin::ModularS(3)] {
            assert_eq!(b.to_string().parse::<Builtin>().unwrap(), b);
        }
    }
}

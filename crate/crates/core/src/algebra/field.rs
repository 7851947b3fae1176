use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Coefficient field: GF(2) or GF(4) = GF(2)[w]/(w^2 + w + 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Gf2,
    Gf4,
}

impl Field {
    /// Degree over GF(2), which is also the number of bit planes.
    pub fn degree(self) -> usize {
        match self {
            Field::Gf2 => 1,
            Field::Gf4 => 2,
        }
    }

    pub fn size(self) -> usize {
        1 << self.degree()
    }

    pub fn elements(self) -> impl Iterator<Item = Gf4> {
        (0..self.size() as u8).map(Gf4)
    }

    pub fn contains(self, c: Gf4) -> bool {
        (c.0 as usize) < self.size()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::Gf2 => "gf2",
            Field::Gf4 => "gf4",
        })
    }
}

impl FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "gf2" | "2" => Ok(Field::Gf2),
            "gf4" | "4" => Ok(Field::Gf4),
            _ => Err(format!("unknown field `{s}` (expected gf2 or gf4)")),
        }
    }
}

/// Element of GF(4): bit 0 is the coefficient of 1, bit 1 that of `w`.
/// GF(2) is the subfield {0, 1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf4(pub u8);

const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const W: Gf4 = Gf4(2);
    pub const W2: Gf4 = Gf4(3);

    pub fn add(self, other: Gf4) -> Gf4 {
        Gf4(self.0 ^ other.0)
    }

    pub fn mul(self, other: Gf4) -> Gf4 {
        Gf4(MUL[self.0 as usize][other.0 as usize])
    }

    pub fn inv(self) -> Option<Gf4> {
        (1..4).map(Gf4).find(|&y| self.mul(y) == Gf4::ONE)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn bit(self, plane: usize) -> bool {
        self.0 >> plane & 1 == 1
    }

    pub fn from_bits(b0: bool, b1: bool) -> Gf4 {
        Gf4(b0 as u8 | (b1 as u8) << 1)
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "0",
            1 => "1",
            2 => "w",
            _ => "w+1",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all() -> Vec<Gf4> {
        Field::Gf4.elements().collect()
    }

    #[test]
    fn field_axioms() {
        for a in all() {
            assert_eq!(a.add(a), Gf4::ZERO);
            assert_eq!(a.add(Gf4::ZERO), a);
            assert_eq!(a.mul(Gf4::ONE), a);
            if !a.is_zero() {
                assert_eq!(a.mul(a.inv().unwrap()), Gf4::ONE);
            }
            for b in all() {
                assert_eq!(a.add(b), b.add(a));
                assert_eq!(a.mul(b), b.mul(a));
                for c in all() {
                    assert_eq!(a.mul(b).mul(c), a.mul(b.mul(c)));
                    assert_eq!(a.mul(b.add(c)), a.mul(b).add(a.mul(c)));
                }
            }
        }
    }

    #[test]
    fn w_is_a_root_of_x2_x_1() {
        let w = Gf4::W;
        assert_eq!(w.mul(w).add(w).add(Gf4::ONE), Gf4::ZERO);
        assert_eq!(w.mul(w), Gf4::W2);
    }

    #[test]
    fn gf2_is_closed_subfield() {
        for a in Field::Gf2.elements() {
            for b in Field::Gf2.elements() {
                assert!(Field::Gf2.contains(a.add(b)));
                assert!(Field::Gf2.contains(a.mul(b)));
            }
        }
        assert!(!Field::Gf2.contains(Gf4::W));
    }

    #[test]
    fn parse_names() {
        assert_eq!("GF4".parse::<Field>().unwrap(), Field::Gf4);
        assert_eq!("gf2".parse::<Field>().unwrap(), Field::Gf2);
        assert!("gf8".parse::<Field>().is_err());
    }
}

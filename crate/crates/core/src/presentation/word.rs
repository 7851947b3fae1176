use std::fmt::Write as _;

/// Index of a generator within a presentation or group.
pub type GenId = usize;

/// A freely reduced word in the generators, stored as syllables
/// `(generator, nonzero exponent)` with no two adjacent syllables sharing a
/// generator.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    syllables: Vec<(GenId, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(g: GenId) -> Self {
        Word {
            syllables: vec![(g, 1)],
        }
    }

    pub fn power_of(g: GenId, exp: i64) -> Self {
        Word::from_syllables([(g, exp)])
    }

    /// Builds a word from arbitrary syllables, freely reducing the result.
    pub fn from_syllables<I: IntoIterator<Item = (GenId, i64)>>(syllables: I) -> Self {
        let mut out: Vec<(GenId, i64)> = Vec::new();
        for (g, e) in syllables {
            push_syllable(&mut out, g, e);
        }
        Word { syllables: out }
    }

    pub fn syllables(&self) -> &[(GenId, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, counting `a^3` as three.
    pub fn len(&self) -> usize {
        self.syllables.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Re-runs free reduction. Words are always stored reduced, so this is a
    /// no-op clone; it exists for callers that want to state the intent.
    pub fn reduce(&self) -> Word {
        Word::from_syllables(self.syllables.iter().copied())
    }

    /// Expands to single letters `(generator, +1 | -1)`.
    pub fn letters(&self) -> impl Iterator<Item = (GenId, i64)> + '_ {
        self.syllables
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
    }

    pub fn inverse(&self) -> Word {
        Word {
            syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut out = self.syllables.clone();
        for &(g, e) in &other.syllables {
            push_syllable(&mut out, g, e);
        }
        Word { syllables: out }
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `[a,b] = a^-1 b^-1 a b`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.inverse().mul(&b.inverse()).mul(a).mul(b)
    }

    /// `a^b = b^-1 a b`.
    pub fn conjugate(a: &Word, b: &Word) -> Word {
        b.inverse().mul(a).mul(b)
    }

    pub fn max_generator(&self) -> Option<GenId> {
        self.syllables.iter().map(|&(g, _)| g).max()
    }

    /// Renders the word with `*` between syllables, e.g. `a^2*b^-1`; the
    /// identity renders as `1`.
    pub fn display<S: AsRef<str>>(&self, names: &[S]) -> String {
        if self.syllables.is_empty() {
            return "1".to_string();
        }
        let mut s = String::new();
        for (i, &(g, e)) in self.syllables.iter().enumerate() {
            if i > 0 {
                s.push('*');
            }
            s.push_str(names[g].as_ref());
            if e != 1 {
                let _ = write!(s, "^{e}");
            }
        }
        s
    }
}

fn push_syllable(out: &mut Vec<(GenId, i64)>, g: GenId, e: i64) {
    if e == 0 {
        return;
    }
    match out.last_mut() {
        Some((last, le)) if *last == g => {
            *le += e;
            if *le == 0 {
                out.pop();
            }
        }
        _ => out.push((g, e)),
    }
}

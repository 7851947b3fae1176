//! Finitely presented groups: the textual DSL, its pretty-printer, and the
//! parameterized built-in presentations.

mod builtin;
pub(crate) mod lexer;
pub(crate) mod parse;
mod word;

use std::fmt;

use thiserror::Error;

pub use builtin::Builtin;
pub use parse::{parse_presentation, parse_word};
pub use word::{GenId, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown generator `{name}` at byte {offset}")]
    UnknownGenerator { name: String, offset: usize },
    #[error("duplicate generator `{name}` at byte {offset}")]
    DuplicateGenerator { name: String, offset: usize },
    #[error("`{name}` at byte {offset} is not a generator name (one letter followed by digits)")]
    InvalidGeneratorName { name: String, offset: usize },
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error("parameters out of range for {family}: {message}")]
    ParameterOutOfRange { family: String, message: String },
}

impl PresentationError {
    pub(crate) fn syntax(offset: usize, message: impl Into<String>) -> Self {
        PresentationError::Syntax {
            offset,
            message: message.into(),
        }
    }
}

/// Generators plus relators; each relation `x = y` is stored as `x y^-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// # Panics
    /// If a relator mentions a generator index outside `generators`.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Self {
        for r in &relators {
            if let Some(g) = r.max_generator() {
                assert!(g < generators.len(), "relator uses generator {g}");
            }
        }
        Presentation {
            generators,
            relators,
        }
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// A presentation without relators defines a free group, which coset
    /// enumeration refuses.
    pub fn is_free(&self) -> bool {
        self.relators.is_empty()
    }
}

/// Canonical form in the same grammar `parse_presentation` accepts; every
/// relator is printed as a single word.
impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens: {}; rels:", self.generators.join(", "))?;
        for (i, r) in self.relators.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{}", r.display(&self.generators))?;
        }
        Ok(())
    }
}

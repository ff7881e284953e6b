//! Finite group presentations: generators, relator words and free notes.

use std::fmt;

use serde::Serialize;

/// A generator raised to a non-zero power.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Syllable {
    pub generator: String,
    pub exponent: i64,
}

/// A freely reduced word in the generators.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Word(Vec<Syllable>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    /// Appends `generator^exponent`, merging with the last syllable and
    /// cancelling where possible.
    pub fn push(&mut self, generator: &str, exponent: i64) {
        if exponent == 0 {
            return;
        }
        if let Some(last) = self.0.last_mut() {
            if last.generator == generator {
                last.exponent += exponent;
                if last.exponent == 0 {
                    self.0.pop();
                }
                return;
            }
        }
        self.0.push(Syllable {
            generator: generator.to_string(),
            exponent,
        });
    }

    pub fn with(mut self, generator: &str, exponent: i64) -> Self {
        self.push(generator, exponent);
        self
    }

    /// Appends the commutator `x y x^-1 y^-1`.
    pub fn commutator(self, x: &str, y: &str) -> Self {
        self.with(x, 1).with(y, 1).with(x, -1).with(y, -1)
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn uses(&self, generator: &str) -> bool {
        self.0.iter().any(|s| s.generator == generator)
    }

    /// The word with every occurrence of `generator` removed, freely reduced.
    pub fn without(&self, generator: &str) -> Word {
        let mut out = Word::new();
        for s in self.0.iter().filter(|s| s.generator != generator) {
            out.push(&s.generator, s.exponent);
        }
        out
    }

    /// Exponent sum of `generator` in the word.
    pub fn exponent_sum(&self, generator: &str) -> i64 {
        self.0
            .iter()
            .filter(|s| s.generator == generator)
            .map(|s| s.exponent)
            .sum()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if s.exponent == 1 {
                write!(f, "{}", s.generator)?;
            } else {
                write!(f, "{}^{}", s.generator, s.exponent)?;
            }
        }
        Ok(())
    }
}

/// `<generators | relators>` plus free-text annotations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
    pub annotations: Vec<String>,
}

impl Presentation {
    /// Every generator used in a relator is declared.
    pub fn is_well_formed(&self) -> bool {
        self.relators.iter().all(|w| {
            w.syllables()
                .iter()
                .all(|s| self.generators.contains(&s.generator))
        })
    }

    /// Quotient by `generator`: drop it from the generator list, delete its
    /// letters from every relator and discard relators that become trivial.
    /// Annotations mentioning the generator are dropped too.
    pub fn kill_generator(&self, generator: &str) -> Presentation {
        Presentation {
            generators: self
                .generators
                .iter()
                .filter(|g| *g != generator)
                .cloned()
                .collect(),
            relators: self
                .relators
                .iter()
                .map(|w| w.without(generator))
                .filter(|w| !w.is_empty())
                .collect(),
            annotations: Vec::new(),
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | ", self.generators.join(", "))?;
        let rels: Vec<String> = self.relators.iter().map(|w| w.to_string()).collect();
        write!(f, "{} >", rels.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn push_merges_and_cancels() {
        let w = Word::new().with("a", 2).with("a", -2).with("b", 1);
        assert_eq!(w.to_string(), "b");
        let w = Word::new().commutator("a", "a");
        assert!(w.is_empty());
    }

    #[test]
    fn without_reduces_freely() {
        let w = Word::new().with("x", 1).with("h", 3).with("x", -1);
        assert!(w.without("h").is_empty());
        assert_eq!(w.exponent_sum("h"), 3);
    }
}

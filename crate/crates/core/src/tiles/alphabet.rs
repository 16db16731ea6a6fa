use std::collections::HashMap;
use std::fmt;

use crate::error::{usage, Result};

/// Index of a state in its [`Alphabet`].
pub type State = u16;

/// The ordered set of states. Order is fixed at construction and drives all
/// tie-breaking.
#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet {
    tokens: Vec<String>,
    index: HashMap<String, State>,
}

impl Alphabet {
    pub fn new<I, S>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let tokens: Vec<String> = tokens.into_iter().map(Into::into).collect();
        if tokens.is_empty() {
            return usage("alphabet must not be empty");
        }
        if tokens.len() > State::MAX as usize {
            return usage("alphabet too large");
        }
        let mut index = HashMap::with_capacity(tokens.len());
        for (i, t) in tokens.iter().enumerate() {
            if t.is_empty() || t.chars().any(char::is_whitespace) {
                return usage(format!("invalid state token {t:?}"));
            }
            if index.insert(t.clone(), i as State).is_some() {
                return usage(format!("duplicate state token {t:?}"));
            }
        }
        Ok(Alphabet { tokens, index })
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn state(&self, token: &str) -> Option<State> {
        self.index.get(token).copied()
    }

    pub fn token(&self, s: State) -> &str {
        &self.tokens[s as usize]
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn states(&self) -> impl Iterator<Item = State> {
        0..self.tokens.len() as State
    }

    pub fn contains(&self, s: State) -> bool {
        (s as usize) < self.tokens.len()
    }

    /// Whether every token is a single character, so rows can be printed
    /// without separators.
    pub fn is_compact(&self) -> bool {
        self.tokens.iter().all(|t| t.chars().count() == 1)
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.tokens).finish()
    }
}

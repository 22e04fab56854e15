//! Generator letters, operator symbols and operator weights.

use std::collections::HashSet;
use std::fmt;

use crate::linear::Coefficient;

/// A generator letter, identified by its position in the signature's letter list.
///
/// The derived ordering is the well order on `X` used by the monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

/// An operator symbol, identified by its position in the signature's operator list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Operator(pub u32);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SignatureError {
    #[error("the operator set must not be empty")]
    NoOperators,
    #[error("symbol `{0}` is declared more than once")]
    DuplicateSymbol(String),
    #[error("symbol `{0}` is not a valid name (expected [A-Za-z][A-Za-z0-9]*)")]
    InvalidName(String),
    #[error("letter index {0} is outside the signature")]
    UnknownLetter(u32),
    #[error("operator index {0} is outside the signature")]
    UnknownOperator(u32),
}

/// The alphabet `X`, the ordered operator set `Ω` and the weights `λ_ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    letters: Vec<String>,
    operators: Vec<String>,
    weights: Vec<Coefficient>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric())
}

impl Signature {
    /// Builds a signature; list order fixes the orders on `X` and `Ω`.
    pub fn new<L, S>(letters: L, operators: Vec<(S, Coefficient)>) -> Result<Self, SignatureError>
    where
        L: IntoIterator,
        L::Item: Into<String>,
        S: Into<String>,
    {
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        let (operators, weights): (Vec<String>, Vec<Coefficient>) = operators
            .into_iter()
            .map(|(name, w)| (name.into(), w))
            .unzip();
        if operators.is_empty() {
            return Err(SignatureError::NoOperators);
        }
        let mut seen = HashSet::new();
        for name in letters.iter().chain(operators.iter()) {
            if !valid_name(name) {
                return Err(SignatureError::InvalidName(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(SignatureError::DuplicateSymbol(name.clone()));
            }
        }
        Ok(Signature {
            letters,
            operators,
            weights,
        })
    }

    /// Letters `x, y, z, …` and operators `a, b, c, …` with the given weights.
    pub fn standard(num_letters: usize, weights: &[Coefficient]) -> Result<Self, SignatureError> {
        let letters = (0..num_letters).map(|i| indexed_name("xyzuvwst", "x", i));
        let operators = weights
            .iter()
            .enumerate()
            .map(|(i, w)| (indexed_name("abcdefgh", "op", i), w.clone()))
            .collect();
        Signature::new(letters, operators)
    }

    /// The default corpus signature: `X = {x}`, `Ω = {a, b}`, `λ_a = 1`, `λ_b = -1`.
    pub fn default_corpus() -> Self {
        Signature::standard(
            1,
            &[
                Coefficient::from_integer(1.into()),
                Coefficient::from_integer((-1).into()),
            ],
        )
        .expect("built-in signature is valid")
    }

    pub fn num_letters(&self) -> usize {
        self.letters.len()
    }

    pub fn num_operators(&self) -> usize {
        self.operators.len()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.letters.len() as u32).map(Letter)
    }

    pub fn operators(&self) -> impl Iterator<Item = Operator> + '_ {
        (0..self.operators.len() as u32).map(Operator)
    }

    pub fn letter_name(&self, letter: Letter) -> &str {
        &self.letters[letter.0 as usize]
    }

    pub fn operator_name(&self, op: Operator) -> &str {
        &self.operators[op.0 as usize]
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.letters
            .iter()
            .position(|l| l == name)
            .map(|i| Letter(i as u32))
    }

    pub fn operator(&self, name: &str) -> Option<Operator> {
        self.operators
            .iter()
            .position(|o| o == name)
            .map(|i| Operator(i as u32))
    }

    pub fn weight(&self, op: Operator) -> &Coefficient {
        &self.weights[op.0 as usize]
    }

    pub fn weights(&self) -> &[Coefficient] {
        &self.weights
    }

    /// True when every operator carries the same weight.
    pub fn constant_weight(&self) -> Option<&Coefficient> {
        let first = &self.weights[0];
        self.weights.iter().all(|w| w == first).then_some(first)
    }

    /// A copy with every weight replaced by `weight`.
    pub fn with_constant_weight(&self, weight: Coefficient) -> Self {
        Signature {
            letters: self.letters.clone(),
            operators: self.operators.clone(),
            weights: vec![weight; self.operators.len()],
        }
    }

    /// Restricts to the first `letters` letters and `operators` operators.
    pub fn truncated(&self, letters: usize, operators: usize) -> Result<Self, SignatureError> {
        let ops = operators.min(self.operators.len());
        if ops == 0 {
            return Err(SignatureError::NoOperators);
        }
        Ok(Signature {
            letters: self.letters[..letters.min(self.letters.len())].to_vec(),
            operators: self.operators[..ops].to_vec(),
            weights: self.weights[..ops].to_vec(),
        })
    }

    pub fn check_letter(&self, letter: Letter) -> Result<(), SignatureError> {
        if (letter.0 as usize) < self.letters.len() {
            Ok(())
        } else {
            Err(SignatureError::UnknownLetter(letter.0))
        }
    }

    pub fn check_operator(&self, op: Operator) -> Result<(), SignatureError> {
        if (op.0 as usize) < self.operators.len() {
            Ok(())
        } else {
            Err(SignatureError::UnknownOperator(op.0))
        }
    }
}

fn indexed_name(pool: &str, fallback: &str, i: usize) -> String {
    pool.chars()
        .nth(i)
        .map(String::from)
        .unwrap_or_else(|| format!("{fallback}{i}"))
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X = {{{}}}, Ω = {{", self.letters.join(", "))?;
        for (i, (name, w)) in self.operators.iter().zip(&self.weights).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{name}: {w}")?;
        }
        f.write_str("}")
    }
}

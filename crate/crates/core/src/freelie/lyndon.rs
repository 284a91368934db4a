use std::cmp::Ordering;
use std::fmt;

use super::LieError;

/// An ordered set of generator names. Letter `i` compares below letter `j`
/// exactly when `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<String>,
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    pub fn new<I, S>(letters: I) -> Result<Self, LieError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        if letters.is_empty() {
            return Err(LieError::EmptyAlphabet);
        }
        if letters.len() > usize::from(u8::MAX) {
            return Err(LieError::AlphabetTooLarge(letters.len()));
        }
        for (i, name) in letters.iter().enumerate() {
            if !is_identifier(name) {
                return Err(LieError::InvalidLetter(name.clone()));
            }
            if letters[..i].contains(name) {
                return Err(LieError::DuplicateLetter(name.clone()));
            }
        }
        Ok(Self { letters })
    }

    /// One letter per character, e.g. `"xyz"`.
    pub fn from_chars(s: &str) -> Result<Self, LieError> {
        Self::new(s.chars().map(String::from))
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn name(&self, letter: u8) -> &str {
        &self.letters[usize::from(letter)]
    }

    pub fn index_of(&self, name: &str) -> Option<u8> {
        self.letters
            .iter()
            .position(|l| l == name)
            .map(|i| i as u8)
    }
}

/// A word over an alphabet, stored as letter indices.
///
/// Ordered by weight first and then lexicographically, which is the order
/// basis elements are listed and printed in. Use [`LyndonWord::lex_cmp`]
/// for the plain lexicographic order used by the rewriting rules.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LyndonWord(Vec<u8>);

impl LyndonWord {
    /// Wraps `letters` after checking the Lyndon property.
    pub fn new(letters: Vec<u8>) -> Option<Self> {
        is_lyndon(&letters).then_some(Self(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.len()
    }

    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }

    /// Standard factorization `w = uv` where `v` is the longest proper
    /// suffix of `w` that is itself Lyndon. `None` for single letters.
    pub fn standard_factorization(&self) -> Option<(LyndonWord, LyndonWord)> {
        (1..self.0.len())
            .find(|&i| is_lyndon(&self.0[i..]))
            .map(|i| (Self(self.0[..i].to_vec()), Self(self.0[i..].to_vec())))
    }

    /// Plain spelling, e.g. `xxy`.
    pub fn spell(&self, alphabet: &Alphabet) -> String {
        self.0.iter().map(|&l| alphabet.name(l)).collect()
    }

    /// Canonical bracketing, e.g. `[x,[x,y]]` for `xxy`.
    pub fn bracketing(&self, alphabet: &Alphabet) -> String {
        match self.standard_factorization() {
            None => alphabet.name(self.0[0]).to_string(),
            Some((u, v)) => format!("[{},{}]", u.bracketing(alphabet), v.bracketing(alphabet)),
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        struct Shown<'a>(&'a LyndonWord, &'a Alphabet);
        impl fmt::Display for Shown<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.bracketing(self.1))
            }
        }
        Shown(self, alphabet)
    }
}

impl Ord for LyndonWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for LyndonWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A nonempty word is Lyndon iff it is strictly smaller than each of its
/// proper rotations.
pub fn is_lyndon(w: &[u8]) -> bool {
    if w.is_empty() {
        return false;
    }
    let n = w.len();
    (1..n).all(|r| {
        let rotated = w[r..].iter().chain(&w[..r]);
        w.iter().cmp(rotated) == Ordering::Less
    })
}

/// All Lyndon words of weight `1..=max_weight`, ordered by weight and then
/// lexicographically.
pub fn lyndon_words(alphabet: &Alphabet, max_weight: usize) -> Vec<LyndonWord> {
    let k = alphabet.len() as u8;
    let mut out = Vec::new();
    if max_weight == 0 || k == 0 {
        return out;
    }
    // Duval's successor enumeration: visits every Lyndon word of length
    // <= max_weight in lexicographic order.
    let mut w: Vec<u8> = vec![0];
    loop {
        out.push(LyndonWord(w.clone()));
        let m = w.len();
        while w.len() < max_weight {
            let c = w[w.len() - m];
            w.push(c);
        }
        while let Some(&last) = w.last() {
            if last == k - 1 {
                w.pop();
            } else {
                break;
            }
        }
        match w.last_mut() {
            None => break,
            Some(last) => *last += 1,
        }
    }
    out.sort();
    out
}

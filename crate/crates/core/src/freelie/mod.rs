//! Free Lie algebras over the rationals, truncated at a weight cap.
//!
//! A [`FreeLieContext`] fixes an alphabet and a cap; its basis is the set of
//! Lyndon words of weight `<= cap`, each standing for its standard
//! bracketing. [`LieElement`]s are finite rational combinations of those
//! basis words and every operation drops terms of weight `> cap`, so a
//! context models the quotient `L(V) / L^{>cap}(V)`.

mod lyndon;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::assoc::AssocSeries;
use crate::expr::{self, ExprError};
use crate::rational::{push_term, Rational};

pub use lyndon::{is_lyndon, lyndon_words, Alphabet, LyndonWord};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LieError {
    #[error("alphabet must contain at least one letter")]
    EmptyAlphabet,
    #[error("alphabet has {0} letters; at most 255 are supported")]
    AlphabetTooLarge(usize),
    #[error("'{0}' is not a valid generator name")]
    InvalidLetter(String),
    #[error("generator '{0}' listed twice")]
    DuplicateLetter(String),
    #[error("weight cap must be at least 1")]
    ZeroCap,
    #[error("elements belong to different contexts ({left} vs {right})")]
    ContextMismatch { left: String, right: String },
    #[error("cannot raise the weight cap from {current} to {requested}")]
    CapIncrease { current: usize, requested: usize },
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("associative series is not a Lie element: residue at word '{0}'")]
    NonLieResidue(String),
}

type Structure = Arc<[(usize, Rational)]>;

struct ContextInner {
    alphabet: Alphabet,
    cap: usize,
    basis: Vec<LyndonWord>,
    index: HashMap<Vec<u8>, usize>,
    /// Standard factorization of each basis word, as basis indices.
    factors: Vec<Option<(usize, usize)>>,
    /// Memo of normalized brackets of basis pairs. Entries are inserted
    /// fully built and never change.
    brackets: RwLock<HashMap<(usize, usize), Structure>>,
}

/// Alphabet plus weight cap. Cheap to clone; clones share the basis and the
/// bracket memo.
#[derive(Clone)]
pub struct FreeLieContext {
    inner: Arc<ContextInner>,
}

impl fmt::Debug for FreeLieContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeLieContext({})", self.describe())
    }
}

impl PartialEq for FreeLieContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.cap == other.inner.cap && self.inner.alphabet == other.inner.alphabet)
    }
}

impl Eq for FreeLieContext {}

impl FreeLieContext {
    pub fn new(alphabet: Alphabet, cap: usize) -> Result<Self, LieError> {
        if cap == 0 {
            return Err(LieError::ZeroCap);
        }
        let basis = lyndon_words(&alphabet, cap);
        let index: HashMap<Vec<u8>, usize> = basis
            .iter()
            .enumerate()
            .map(|(i, w)| (w.letters().to_vec(), i))
            .collect();
        let factors = basis
            .iter()
            .map(|w| {
                w.standard_factorization()
                    .map(|(u, v)| (index[u.letters()], index[v.letters()]))
            })
            .collect();
        Ok(Self {
            inner: Arc::new(ContextInner {
                alphabet,
                cap,
                basis,
                index,
                factors,
                brackets: RwLock::new(HashMap::new()),
            }),
        })
    }

    /// Shorthand for single-character letters, e.g. `from_letters("xy", 4)`.
    pub fn from_letters(letters: &str, cap: usize) -> Result<Self, LieError> {
        Self::new(Alphabet::from_chars(letters)?, cap)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.inner.alphabet
    }

    pub fn cap(&self) -> usize {
        self.inner.cap
    }

    /// Lyndon basis, ordered by weight then lexicographically.
    pub fn basis(&self) -> &[LyndonWord] {
        &self.inner.basis
    }

    pub fn basis_index(&self, word: &LyndonWord) -> Option<usize> {
        self.inner.index.get(word.letters()).copied()
    }

    pub(crate) fn basis_index_of_letters(&self, letters: &[u8]) -> Option<usize> {
        self.inner.index.get(letters).copied()
    }

    /// Standard factorization of basis word `i` as a pair of basis indices.
    pub(crate) fn factors(&self, i: usize) -> Option<(usize, usize)> {
        self.inner.factors[i]
    }

    fn weight(&self, i: usize) -> usize {
        self.inner.basis[i].weight()
    }

    fn describe(&self) -> String {
        format!("{{{}}} cap {}", self.inner.alphabet.letters().join(","), self.inner.cap)
    }

    pub fn zero(&self) -> LieElement {
        LieElement {
            ctx: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn generator(&self, name: &str) -> Result<LieElement, LieError> {
        let letter = self
            .inner
            .alphabet
            .index_of(name)
            .ok_or_else(|| LieError::UnknownGenerator(name.to_string()))?;
        Ok(self.basis_element_at(self.inner.index[&vec![letter]]))
    }

    /// The basis element for a Lyndon word; zero if its weight exceeds the cap.
    pub fn basis_element(&self, word: &LyndonWord) -> LieElement {
        match self.basis_index(word) {
            Some(i) => self.basis_element_at(i),
            None => self.zero(),
        }
    }

    pub(crate) fn basis_element_at(&self, i: usize) -> LieElement {
        self.collect_terms([(i, Rational::one())])
    }

    pub(crate) fn collect_terms(&self, terms: impl IntoIterator<Item = (usize, Rational)>) -> LieElement {
        let mut acc = BTreeMap::new();
        for (i, c) in terms {
            accumulate(&mut acc, i, c);
        }
        LieElement {
            ctx: self.clone(),
            terms: acc,
        }
    }

    /// Builds an element from `(word, coefficient)` pairs. Words above the
    /// cap are dropped.
    pub fn element<I>(&self, terms: I) -> LieElement
    where
        I: IntoIterator<Item = (LyndonWord, Rational)>,
    {
        self.collect_terms(
            terms
                .into_iter()
                .filter_map(|(w, c)| self.basis_index(&w).map(|i| (i, c))),
        )
    }

    /// Parses an expression in the Lie expression language.
    pub fn parse(&self, text: &str) -> Result<LieElement, ExprError> {
        expr::parse_in(text, &crate::algebra::FreeNilpotent::from_context(self.clone()))
    }

    /// `[P_i, P_j]` written in the Lyndon basis.
    ///
    /// For `u < v` (lexicographically), `uv` is again Lyndon with standard
    /// factorization `(u, v)` when `u` is a letter or the right factor of `u`
    /// is `>= v`. Otherwise `u = (u1, u2)` and
    /// `[[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]]`.
    pub(crate) fn basis_bracket(&self, i: usize, j: usize) -> Structure {
        if i == j || self.weight(i) + self.weight(j) > self.cap() {
            return Arc::from(Vec::new());
        }
        if let Some(hit) = self.inner.brackets.read().expect("bracket memo poisoned").get(&(i, j)) {
            return hit.clone();
        }
        let basis = &self.inner.basis;
        let result: Structure = if basis[i].lex_cmp(&basis[j]).is_gt() {
            self.basis_bracket(j, i)
                .iter()
                .map(|(k, c)| (*k, -c))
                .collect::<Vec<_>>()
                .into()
        } else {
            match self.inner.factors[i] {
                Some((u1, u2)) if basis[u2].lex_cmp(&basis[j]).is_lt() => {
                    let mut acc = BTreeMap::new();
                    for (k, c) in self.basis_bracket(u2, j).iter() {
                        for (m, d) in self.basis_bracket(u1, *k).iter() {
                            accumulate(&mut acc, *m, c * d);
                        }
                    }
                    for (k, c) in self.basis_bracket(u1, j).iter() {
                        for (m, d) in self.basis_bracket(u2, *k).iter() {
                            accumulate(&mut acc, *m, -(c * d));
                        }
                    }
                    acc.into_iter().collect::<Vec<_>>().into()
                }
                _ => {
                    let mut word = basis[i].letters().to_vec();
                    word.extend_from_slice(basis[j].letters());
                    let k = self
                        .basis_index_of_letters(&word)
                        .expect("concatenation of Lyndon words u < v is Lyndon");
                    vec![(k, Rational::one())].into()
                }
            }
        };
        self.inner
            .brackets
            .write()
            .expect("bracket memo poisoned")
            .entry((i, j))
            .or_insert(result)
            .clone()
    }

    /// Expansion of basis word `i` as a noncommutative polynomial,
    /// `P_uv = P_u P_v - P_v P_u`.
    pub(crate) fn basis_polynomial(&self, i: usize, memo: &mut HashMap<usize, AssocSeries>) -> AssocSeries {
        if let Some(p) = memo.get(&i) {
            return p.clone();
        }
        let p = match self.inner.factors[i] {
            None => AssocSeries::monomial(self.cap(), self.inner.basis[i].letters().to_vec(), Rational::one()),
            Some((u, v)) => {
                let pu = self.basis_polynomial(u, memo);
                let pv = self.basis_polynomial(v, memo);
                pu.commutator(&pv).expect("same cap")
            }
        };
        memo.insert(i, p.clone());
        p
    }

    /// Writes a Lie polynomial given in the free associative algebra in the
    /// Lyndon basis.
    ///
    /// Repeatedly takes the shortlex-smallest word still present; for a Lie
    /// polynomial it is a Lyndon word `w` and `P_w = w + (larger words)`, so
    /// subtracting `c * P_w` strictly removes it. Anything else is a non-Lie
    /// residue.
    pub fn from_associative(&self, series: &AssocSeries) -> Result<LieElement, LieError> {
        let mut rest = series.clone();
        let mut memo = HashMap::new();
        let mut out = BTreeMap::new();
        loop {
            let (word, coeff) = match rest.terms().next() {
                None => break,
                Some((w, c)) => (w.to_vec(), c.clone()),
            };
            let i = match self.basis_index_of_letters(&word) {
                Some(i) if word.len() <= self.cap() => i,
                _ => {
                    let spelled = if word.is_empty() {
                        "<empty word>".to_string()
                    } else {
                        word.iter().map(|&l| self.inner.alphabet.name(l)).collect()
                    };
                    return Err(LieError::NonLieResidue(spelled));
                }
            };
            let p = self.basis_polynomial(i, &mut memo);
            rest = rest.sub(&p.scale(&coeff)).expect("same cap");
            accumulate(&mut out, i, coeff);
        }
        Ok(LieElement {
            ctx: self.clone(),
            terms: out,
        })
    }
}

fn accumulate(acc: &mut BTreeMap<usize, Rational>, i: usize, c: Rational) {
    if c.is_zero() {
        return;
    }
    let entry = acc.entry(i).or_insert_with(Rational::zero);
    *entry += c;
    if entry.is_zero() {
        acc.remove(&i);
    }
}

/// A rational combination of Lyndon basis words in one context.
#[derive(Clone)]
pub struct LieElement {
    ctx: FreeLieContext,
    terms: BTreeMap<usize, Rational>,
}

impl PartialEq for LieElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.terms == other.terms
    }
}

impl Eq for LieElement {}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} ({})", self.ctx.describe())
    }
}

/// Canonical form: terms by weight then lexicographically, `c*` omitted for
/// unit coefficients, `0` for the zero element.
impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let alphabet = self.ctx.alphabet();
        let mut out = String::new();
        for (n, (i, c)) in self.terms.iter().enumerate() {
            push_term(&mut out, n == 0, c, &self.ctx.inner.basis[*i].bracketing(alphabet));
        }
        f.write_str(&out)
    }
}

impl LieElement {
    pub fn context(&self) -> &FreeLieContext {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&LyndonWord, &Rational)> {
        self.terms.iter().map(|(i, c)| (&self.ctx.inner.basis[*i], c))
    }

    pub(crate) fn indexed_terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.terms.iter().map(|(i, c)| (*i, c))
    }

    pub fn coefficient(&self, word: &LyndonWord) -> Rational {
        self.ctx
            .basis_index(word)
            .and_then(|i| self.terms.get(&i).cloned())
            .unwrap_or_else(Rational::zero)
    }

    /// Component of weight exactly `w`.
    pub fn homogeneous_part(&self, w: usize) -> LieElement {
        self.ctx.collect_terms(
            self.indexed_terms()
                .filter(|(i, _)| self.ctx.weight(*i) == w)
                .map(|(i, c)| (i, c.clone())),
        )
    }

    fn check(&self, other: &Self) -> Result<(), LieError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(LieError::ContextMismatch {
                left: self.ctx.describe(),
                right: other.ctx.describe(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<LieElement, LieError> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &Self) -> Result<LieElement, LieError> {
        self.check(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub(crate) fn add_unchecked(&self, other: &Self) -> LieElement {
        let mut terms = self.terms.clone();
        for (i, c) in &other.terms {
            accumulate(&mut terms, *i, c.clone());
        }
        LieElement {
            ctx: self.ctx.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &Rational) -> LieElement {
        if c.is_zero() {
            return self.ctx.zero();
        }
        LieElement {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> LieElement {
        self.scale(&-Rational::one())
    }

    /// Lie bracket, normalized to the Lyndon basis and truncated at the cap.
    pub fn bracket(&self, other: &Self) -> Result<LieElement, LieError> {
        self.check(other)?;
        Ok(self.bracket_unchecked(other))
    }

    pub(crate) fn bracket_unchecked(&self, other: &Self) -> LieElement {
        let ctx = &self.ctx;
        let cap = ctx.cap();
        let mut acc = BTreeMap::new();
        for (i, a) in &self.terms {
            let wi = ctx.weight(*i);
            for (j, b) in &other.terms {
                if wi + ctx.weight(*j) > cap {
                    // other's terms are sorted by weight
                    break;
                }
                let ab = a * b;
                for (k, s) in ctx.basis_bracket(*i, *j).iter() {
                    accumulate(&mut acc, *k, &ab * s);
                }
            }
        }
        LieElement {
            ctx: ctx.clone(),
            terms: acc,
        }
    }

    /// Image under the quotient map to a smaller cap.
    pub fn truncate(&self, new_cap: usize) -> Result<LieElement, LieError> {
        if new_cap > self.ctx.cap() {
            return Err(LieError::CapIncrease {
                current: self.ctx.cap(),
                requested: new_cap,
            });
        }
        if new_cap == self.ctx.cap() {
            return Ok(self.clone());
        }
        let target = FreeLieContext::new(self.ctx.alphabet().clone(), new_cap)?;
        self.truncate_into(&target)
    }

    /// Image under the quotient map into an existing context with the same
    /// alphabet and a cap no larger than this one.
    pub fn truncate_into(&self, target: &FreeLieContext) -> Result<LieElement, LieError> {
        if target.alphabet() != self.ctx.alphabet() {
            return Err(LieError::ContextMismatch {
                left: self.ctx.describe(),
                right: target.describe(),
            });
        }
        if target.cap() > self.ctx.cap() {
            return Err(LieError::CapIncrease {
                current: self.ctx.cap(),
                requested: target.cap(),
            });
        }
        Ok(target.element(self.terms().map(|(w, c)| (w.clone(), c.clone()))))
    }

    /// Image in the free associative algebra (as a truncated series).
    pub fn to_associative(&self) -> AssocSeries {
        let mut memo = HashMap::new();
        let mut out = AssocSeries::zero(self.ctx.cap());
        for (i, c) in &self.terms {
            out = out
                .add(&self.ctx.basis_polynomial(*i, &mut memo).scale(c))
                .expect("same cap");
        }
        out
    }
}

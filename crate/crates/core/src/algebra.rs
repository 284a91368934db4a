//! Degree-0 nilpotent Lie algebras behind one interface.
//!
//! The group law, the bar construction and the realization only ever talk
//! to a [`LieAlgebra`]; the free truncated algebra, abelian algebras and
//! algebras given by structure constants all plug in the same way.

use std::fmt::Debug;

use num_traits::{One, Zero};
use rand::Rng;

use crate::freelie::{FreeLieContext, LieElement};
use crate::rational::{push_term, Rational};
use crate::sample::sample_coefficient;

/// A Lie algebra over the rationals in which every bracket of `cap + 1`
/// elements vanishes.
pub trait LieAlgebra {
    type Element: Clone + PartialEq + Debug;

    /// Nilpotency bound: all `(cap + 1)`-fold nested brackets are zero.
    fn cap(&self) -> usize;
    fn zero(&self) -> Self::Element;
    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn scale(&self, c: &Rational, a: &Self::Element) -> Self::Element;
    fn bracket(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    /// Named generator, used by the expression language.
    fn generator(&self, name: &str) -> Option<Self::Element>;
    fn generator_names(&self) -> Vec<String>;

    /// Canonical text form; parses back to the same element.
    fn format(&self, a: &Self::Element) -> String;

    /// Random element with coefficients drawn from
    /// `{-2, -1, -1/2, 0, 1/2, 1, 2}` on every basis vector.
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Element;

    /// Short human-readable description, e.g. `free:xy:4`.
    fn describe(&self) -> String;

    fn neg(&self, a: &Self::Element) -> Self::Element {
        self.scale(&-Rational::one(), a)
    }

    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Element) -> bool {
        *a == self.zero()
    }
}

/// The free Lie algebra on an alphabet modulo brackets of weight `> cap`.
#[derive(Clone, Debug)]
pub struct FreeNilpotent {
    ctx: FreeLieContext,
}

impl FreeNilpotent {
    pub fn new(letters: &str, cap: usize) -> Result<Self, crate::freelie::LieError> {
        FreeLieContext::from_letters(letters, cap).map(Self::from_context)
    }

    pub fn from_context(ctx: FreeLieContext) -> Self {
        Self { ctx }
    }

    pub fn context(&self) -> &FreeLieContext {
        &self.ctx
    }
}

impl LieAlgebra for FreeNilpotent {
    type Element = LieElement;

    fn cap(&self) -> usize {
        self.ctx.cap()
    }

    fn zero(&self) -> LieElement {
        self.ctx.zero()
    }

    fn add(&self, a: &LieElement, b: &LieElement) -> LieElement {
        a.add(b).expect("element outside this algebra's context")
    }

    fn scale(&self, c: &Rational, a: &LieElement) -> LieElement {
        a.scale(c)
    }

    fn bracket(&self, a: &LieElement, b: &LieElement) -> LieElement {
        a.bracket(b).expect("element outside this algebra's context")
    }

    fn generator(&self, name: &str) -> Option<LieElement> {
        self.ctx.generator(name).ok()
    }

    fn generator_names(&self) -> Vec<String> {
        self.ctx.alphabet().letters().to_vec()
    }

    fn format(&self, a: &LieElement) -> String {
        a.to_string()
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> LieElement {
        self.ctx
            .collect_terms((0..self.ctx.basis().len()).map(|i| (i, sample_coefficient(rng))))
    }

    fn describe(&self) -> String {
        let letters = self.ctx.alphabet().letters();
        let joined = if letters.iter().all(|l| l.len() == 1) {
            letters.concat()
        } else {
            letters.join(",")
        };
        format!("free:{}:{}", joined, self.ctx.cap())
    }
}

/// Coordinates with respect to a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coords(pub Vec<Rational>);

impl Coords {
    pub fn zero(dim: usize) -> Self {
        Self(vec![Rational::zero(); dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self(self.0.iter().map(|a| a * c).collect())
    }

    pub(crate) fn format_with(&self, names: &[String]) -> String {
        let mut out = String::new();
        for (i, c) in self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let first = out.is_empty();
            push_term(&mut out, first, c, &names[i]);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

pub(crate) fn sample_coords<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Coords {
    Coords((0..dim).map(|_| sample_coefficient(rng)).collect())
}

/// `Q^dim` with the zero bracket; its BCH group is vector addition.
#[derive(Clone, Debug)]
pub struct Abelian {
    names: Vec<String>,
}

impl Abelian {
    /// Basis vectors are named `e1 ..= e{dim}`.
    pub fn new(dim: usize) -> Self {
        Self {
            names: (1..=dim).map(|i| format!("e{i}")).collect(),
        }
    }

    /// Abelian algebra on the given basis names.
    pub fn with_names(names: Vec<String>) -> Self {
        Self { names }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }
}

impl LieAlgebra for Abelian {
    type Element = Coords;

    fn cap(&self) -> usize {
        1
    }

    fn zero(&self) -> Coords {
        Coords::zero(self.dim())
    }

    fn add(&self, a: &Coords, b: &Coords) -> Coords {
        a.add(b)
    }

    fn scale(&self, c: &Rational, a: &Coords) -> Coords {
        a.scale(c)
    }

    fn bracket(&self, _a: &Coords, _b: &Coords) -> Coords {
        self.zero()
    }

    fn generator(&self, name: &str) -> Option<Coords> {
        let i = self.names.iter().position(|n| n == name)?;
        Some(Coords::unit(self.dim(), i))
    }

    fn generator_names(&self) -> Vec<String> {
        self.names.clone()
    }

    fn format(&self, a: &Coords) -> String {
        a.format_with(&self.names)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Coords {
        sample_coords(self.dim(), rng)
    }

    fn describe(&self) -> String {
        format!("abelian:{}", self.dim())
    }
}

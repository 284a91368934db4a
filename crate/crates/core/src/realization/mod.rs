//! The realization of a degree-0 Lie algebra `L` as a simplicial set.
//!
//! An `n`-simplex is a morphism from the free model of the `n`-simplex to
//! `L`. Such a morphism kills every generator except the edges `a_{rs}`,
//! and the edge values are forced by `f(a_{rs}) = f(a_{0r})^{-1} * f(a_{0s})`,
//! so it is stored as the tuple `(f(a_{01}), ..., f(a_{0n}))`
//! ([`HomSimplex`]). [`Realization`] supplies faces and degeneracies on those
//! tuples, both through the cofaces/codegeneracies of the generators and in
//! closed form, and [`psi`](Realization::psi) maps them onto the bar
//! construction of `exp L`.

mod generator;
mod iso;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::LieAlgebra;
use crate::bch::ExpGroup;
use crate::simplicial::{describe_tuple, BarSimplex, Group, IndexError, SimplicialSet};

pub use generator::{
    check_cosimplicial_identities, codegeneracy, coface, CosimplicialFamily, CosimplicialReport,
    CosimplicialViolation, GeneratorImage, GeneratorSymbol,
};
pub use iso::{verify_iso, Corruption, IsoCheck, IsoConfig, IsoFailure, IsoReport};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RealizationError {
    #[error("invalid generator a_{indices:?}@{ambient}: indices must be nonempty, strictly increasing and at most the ambient dimension")]
    InvalidGenerator { indices: Vec<usize>, ambient: usize },
    #[error("cannot parse generator '{0}' (expected e.g. 'a_{{0 2}}@3')")]
    GeneratorSyntax(String),
    #[error("{operator} index {index} out of range in dimension {dim}")]
    IndexOutOfRange {
        operator: &'static str,
        index: usize,
        dim: usize,
    },
    #[error("no generator a_{{{r} {s}}} in dimension {dim}")]
    NoSuchEdge { r: usize, s: usize, dim: usize },
}

impl From<IndexError> for RealizationError {
    fn from(e: IndexError) -> Self {
        RealizationError::IndexOutOfRange {
            operator: e.operator,
            index: e.index,
            dim: e.dim,
        }
    }
}

/// `(x_1, ..., x_n)` with `x_r = f(a_{0r})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomSimplex<E> {
    pub entries: Vec<E>,
}

impl<E> HomSimplex<E> {
    pub fn new(entries: Vec<E>) -> Self {
        Self { entries }
    }

    pub fn dimension(&self) -> usize {
        self.entries.len()
    }
}

/// Triangle `(r, s, t)` where the composite
/// `f(a_{rs}) * f(a_{st}) * f(a_{rt})^{-1}` is not the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CocycleViolation {
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CocycleReport {
    pub checked: usize,
    pub violations: Vec<CocycleViolation>,
}

impl CocycleReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `Hom(L_•, L)` in tuple form, for a nilpotent Lie algebra `L`.
pub struct Realization<'a, A: LieAlgebra> {
    group: ExpGroup<'a, A>,
}

impl<'a, A: LieAlgebra> Realization<'a, A> {
    pub fn new(alg: &'a A) -> Self {
        Self {
            group: ExpGroup::new(alg),
        }
    }

    pub fn algebra(&self) -> &'a A {
        self.group.algebra()
    }

    pub fn group(&self) -> &ExpGroup<'a, A> {
        &self.group
    }

    fn mul(&self, a: &A::Element, b: &A::Element) -> A::Element {
        self.group.product(a, b)
    }

    fn inv(&self, a: &A::Element) -> A::Element {
        self.group.inverse(a)
    }

    /// `x_r` with the convention `x_0 = 0`.
    fn vertex_value(&self, h: &HomSimplex<A::Element>, r: usize) -> A::Element {
        if r == 0 {
            self.group.identity()
        } else {
            h.entries[r - 1].clone()
        }
    }

    /// `f(a_{rs}) = x_r^{-1} * x_s`.
    pub fn extend_hom(
        &self,
        h: &HomSimplex<A::Element>,
        r: usize,
        s: usize,
    ) -> Result<A::Element, RealizationError> {
        let n = h.dimension();
        if r >= s || s > n {
            return Err(RealizationError::NoSuchEdge { r, s, dim: n });
        }
        if r == 0 {
            return Ok(h.entries[s - 1].clone());
        }
        Ok(self.mul(&self.inv(&self.vertex_value(h, r)), &self.vertex_value(h, s)))
    }

    /// Value of the morphism on a generator (or on zero). Only edges carry
    /// nonzero values.
    pub fn evaluate(
        &self,
        h: &HomSimplex<A::Element>,
        g: &GeneratorImage,
    ) -> Result<A::Element, RealizationError> {
        match g {
            GeneratorImage::Symbol(sym) if sym.indices().len() == 2 => {
                if sym.ambient() != h.dimension() {
                    return Err(RealizationError::IndexOutOfRange {
                        operator: "evaluate",
                        index: sym.ambient(),
                        dim: h.dimension(),
                    });
                }
                self.extend_hom(h, sym.indices()[0], sym.indices()[1])
            }
            _ => Ok(self.group.identity()),
        }
    }

    fn check_face(&self, i: usize, h: &HomSimplex<A::Element>) -> Result<usize, RealizationError> {
        let n = h.dimension();
        if n == 0 || i > n {
            return Err(RealizationError::IndexOutOfRange {
                operator: "face",
                index: i,
                dim: n,
            });
        }
        Ok(n)
    }

    fn check_degeneracy(&self, i: usize, h: &HomSimplex<A::Element>) -> Result<usize, RealizationError> {
        let n = h.dimension();
        if i > n {
            return Err(RealizationError::IndexOutOfRange {
                operator: "degeneracy",
                index: i,
                dim: n,
            });
        }
        Ok(n)
    }

    /// `d_i f = f ∘ δ^i`, evaluated generator by generator.
    pub fn induced_face_bruteforce(
        &self,
        i: usize,
        h: &HomSimplex<A::Element>,
    ) -> Result<HomSimplex<A::Element>, RealizationError> {
        let n = self.check_face(i, h)?;
        let entries = (1..n)
            .map(|r| {
                let edge = GeneratorSymbol::pair(0, r, n - 1)?;
                self.evaluate(h, &GeneratorImage::Symbol(coface(i, &edge)?))
            })
            .collect::<Result<_, _>>()?;
        Ok(HomSimplex { entries })
    }

    /// `d_0(x) = (x_1^{-1} * x_2, ..., x_1^{-1} * x_n)`; for `i > 0`, `d_i`
    /// deletes `x_i`.
    pub fn induced_face_closed(
        &self,
        i: usize,
        h: &HomSimplex<A::Element>,
    ) -> Result<HomSimplex<A::Element>, RealizationError> {
        self.check_face(i, h)?;
        let x = &h.entries;
        let entries = if i == 0 {
            let first_inv = self.inv(&x[0]);
            x[1..].iter().map(|xr| self.mul(&first_inv, xr)).collect()
        } else {
            let mut e = x.clone();
            e.remove(i - 1);
            e
        };
        Ok(HomSimplex { entries })
    }

    /// `s_i f = f ∘ σ^i`, evaluated generator by generator; generators sent
    /// to zero contribute the identity.
    pub fn induced_degeneracy_bruteforce(
        &self,
        i: usize,
        h: &HomSimplex<A::Element>,
    ) -> Result<HomSimplex<A::Element>, RealizationError> {
        let n = self.check_degeneracy(i, h)?;
        let entries = (1..=n + 1)
            .map(|r| {
                let edge = GeneratorSymbol::pair(0, r, n + 1)?;
                self.evaluate(h, &codegeneracy(i, &edge)?)
            })
            .collect::<Result<_, _>>()?;
        Ok(HomSimplex { entries })
    }

    /// `s_0(x) = (0, x_1, ..., x_n)`; for `i > 0`, `s_i` repeats `x_i`.
    pub fn induced_degeneracy(
        &self,
        i: usize,
        h: &HomSimplex<A::Element>,
    ) -> Result<HomSimplex<A::Element>, RealizationError> {
        self.check_degeneracy(i, h)?;
        let mut entries = h.entries.clone();
        if i == 0 {
            entries.insert(0, self.group.identity());
        } else {
            entries.insert(i, h.entries[i - 1].clone());
        }
        Ok(HomSimplex { entries })
    }

    /// Checks `f(a_{rs}) * f(a_{st}) * f(a_{rt})^{-1} = 0` for every
    /// `0 <= r < s < t <= n`, with edge values from [`Self::extend_hom`].
    pub fn triangle_cocycle_check(&self, h: &HomSimplex<A::Element>) -> CocycleReport {
        self.triangle_cocycle_check_with(h, |r, s| {
            self.extend_hom(h, r, s).expect("r < s <= n")
        })
    }

    /// Same check for an arbitrary assignment of edge values.
    pub fn triangle_cocycle_check_with(
        &self,
        h: &HomSimplex<A::Element>,
        edge: impl Fn(usize, usize) -> A::Element,
    ) -> CocycleReport {
        let n = h.dimension();
        let alg = self.algebra();
        let mut report = CocycleReport {
            checked: 0,
            violations: Vec::new(),
        };
        for t in 2..=n {
            for s in 1..t {
                for r in 0..s {
                    report.checked += 1;
                    let composite = self.mul(&self.mul(&edge(r, s), &edge(s, t)), &self.inv(&edge(r, t)));
                    if !alg.is_zero(&composite) {
                        report.violations.push(CocycleViolation {
                            r,
                            s,
                            t,
                            residual: alg.format(&composite),
                        });
                    }
                }
            }
        }
        report
    }

    /// `Ψ(x) = [x_1 | x_1^{-1} x_2 | ... | x_{n-1}^{-1} x_n]`.
    pub fn psi(&self, h: &HomSimplex<A::Element>) -> BarSimplex<A::Element> {
        let x = &h.entries;
        let entries = (0..x.len())
            .map(|j| {
                if j == 0 {
                    x[0].clone()
                } else {
                    self.mul(&self.inv(&x[j - 1]), &x[j])
                }
            })
            .collect();
        BarSimplex { entries }
    }

    /// Inverse of [`Self::psi`]: `x_j = g_1 * ... * g_j`.
    pub fn psi_inverse(&self, b: &BarSimplex<A::Element>) -> HomSimplex<A::Element> {
        let mut entries: Vec<A::Element> = Vec::with_capacity(b.entries.len());
        for g in &b.entries {
            let next = match entries.last() {
                None => g.clone(),
                Some(prev) => self.mul(prev, g),
            };
            entries.push(next);
        }
        HomSimplex { entries }
    }
}

/// Faces and degeneracies in closed form.
impl<A: LieAlgebra> SimplicialSet for Realization<'_, A> {
    type Simplex = HomSimplex<A::Element>;

    fn dimension(&self, s: &Self::Simplex) -> usize {
        s.dimension()
    }

    fn face(&self, i: usize, s: &Self::Simplex) -> Result<Self::Simplex, IndexError> {
        self.induced_face_closed(i, s).map_err(|_| IndexError {
            operator: "face",
            index: i,
            dim: s.dimension(),
        })
    }

    fn degeneracy(&self, i: usize, s: &Self::Simplex) -> Result<Self::Simplex, IndexError> {
        self.induced_degeneracy(i, s).map_err(|_| IndexError {
            operator: "degeneracy",
            index: i,
            dim: s.dimension(),
        })
    }

    fn describe(&self, s: &Self::Simplex) -> String {
        let alg = self.algebra();
        describe_tuple(&s.entries, |x| alg.format(x), "(", ", ", ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Abelian, Coords, FreeNilpotent};
    use crate::rational::int;
    use crate::sample::seeded_rng;

    fn free_pair(cap: usize) -> (FreeNilpotent, HomSimplex<crate::freelie::LieElement>) {
        let alg = FreeNilpotent::new("xy", cap).unwrap();
        let h = HomSimplex::new(vec![alg.generator("x").unwrap(), alg.generator("y").unwrap()]);
        (alg, h)
    }

    #[test]
    fn extend_hom_examples() {
        let (alg, h) = free_pair(2);
        let real = Realization::new(&alg);
        assert_eq!(real.extend_hom(&h, 0, 2).unwrap(), h.entries[1]);
        let e12 = real.extend_hom(&h, 1, 2).unwrap();
        assert_eq!(alg.format(&e12), "-1*x + y - 1/2*[x,y]");
        assert!(matches!(
            real.extend_hom(&h, 2, 1),
            Err(RealizationError::NoSuchEdge { .. })
        ));
        assert!(real.extend_hom(&h, 1, 3).is_err());

        let ab = Abelian::new(2);
        let real = Realization::new(&ab);
        let mut rng = seeded_rng(2);
        let h = HomSimplex::new((0..3).map(|_| ab.sample(&mut rng)).collect());
        assert_eq!(
            real.extend_hom(&h, 1, 3).unwrap(),
            ab.sub(&h.entries[2], &h.entries[0])
        );
    }

    #[test]
    fn faces_of_a_two_simplex() {
        let (alg, h) = free_pair(3);
        let real = Realization::new(&alg);
        let x1_inv_x2 = real.extend_hom(&h, 1, 2).unwrap();
        for (i, expected) in [
            (0, vec![x1_inv_x2]),
            (1, vec![h.entries[1].clone()]),
            (2, vec![h.entries[0].clone()]),
        ] {
            assert_eq!(real.induced_face_bruteforce(i, &h).unwrap().entries, expected);
            assert_eq!(real.induced_face_closed(i, &h).unwrap().entries, expected);
        }
        assert!(real.induced_face_closed(3, &h).is_err());
        assert!(real.induced_face_bruteforce(0, &HomSimplex::new(vec![])).is_err());
    }

    #[test]
    fn closed_face_deletes_entry() {
        let ab = Abelian::new(1);
        let real = Realization::new(&ab);
        let h = HomSimplex::new((1..=3).map(|k| Coords(vec![int(k)])).collect());
        let d2 = real.induced_face_closed(2, &h).unwrap();
        assert_eq!(d2.entries, vec![Coords(vec![int(1)]), Coords(vec![int(3)])]);
        let d0 = real.induced_face_closed(0, &h).unwrap();
        assert_eq!(d0.entries, vec![Coords(vec![int(1)]), Coords(vec![int(2)])]);
    }

    #[test]
    fn degeneracy_examples() {
        let (alg, h) = free_pair(3);
        let real = Realization::new(&alg);
        let one = HomSimplex::new(vec![h.entries[0].clone()]);
        assert_eq!(
            real.induced_degeneracy(0, &one).unwrap().entries,
            vec![alg.zero(), h.entries[0].clone()]
        );
        let s1 = real.induced_degeneracy(1, &h).unwrap();
        assert_eq!(
            s1.entries,
            vec![h.entries[0].clone(), h.entries[0].clone(), h.entries[1].clone()]
        );
        for i in 0..=2 {
            assert_eq!(
                real.induced_degeneracy(i, &h).unwrap(),
                real.induced_degeneracy_bruteforce(i, &h).unwrap()
            );
        }
        assert!(real.induced_degeneracy(3, &h).is_err());
    }

    #[test]
    fn psi_small_cases() {
        let ab = Abelian::new(2);
        let real = Realization::new(&ab);
        assert_eq!(real.psi(&HomSimplex::new(vec![])).entries, Vec::<Coords>::new());
        let mut rng = seeded_rng(4);
        let (x1, x2) = (ab.sample(&mut rng), ab.sample(&mut rng));
        assert_eq!(real.psi(&HomSimplex::new(vec![x1.clone()])).entries, vec![x1.clone()]);
        let b = real.psi(&HomSimplex::new(vec![x1.clone(), x2.clone()]));
        assert_eq!(b.entries, vec![x1.clone(), ab.sub(&x2, &x1)]);
        let back = real.psi_inverse(&BarSimplex::new(vec![x1.clone(), x2.clone()]));
        assert_eq!(back.entries, vec![x1.clone(), ab.add(&x1, &x2)]);
        assert_eq!(real.psi_inverse(&BarSimplex::new(vec![x2.clone()])).entries, vec![x2]);
    }

    #[test]
    fn cocycle_and_negative_control() {
        let alg = FreeNilpotent::new("xy", 4).unwrap();
        let real = Realization::new(&alg);
        let mut rng = seeded_rng(9);
        let h = HomSimplex::new((0..3).map(|_| alg.sample(&mut rng)).collect());
        let report = real.triangle_cocycle_check(&h);
        assert_eq!(report.checked, 4);
        assert!(report.passed());
        let corrupted = real.triangle_cocycle_check_with(&h, |r, s| {
            if (r, s) == (1, 2) {
                h.entries[1].clone()
            } else {
                real.extend_hom(&h, r, s).unwrap()
            }
        });
        assert!(!corrupted.passed());
        assert!(corrupted.violations.iter().all(|v| (v.r, v.s, v.t) != (0, 2, 3)));
    }
}

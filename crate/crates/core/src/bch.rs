//! The Baker–Campbell–Hausdorff group law.
//!
//! `x * y = log(exp(x) exp(y))` is computed once, universally, in the free
//! Lie algebra on `{x, y}` truncated at a cap ([`universal_bch`]). The
//! product on any nilpotent [`LieAlgebra`] is then the evaluation of that
//! universal element at `x -> a`, `y -> b`.
//!
//! The universal element is obtained by integrating
//! `d/dt log(e^x e^{ty}) = B(-ad_Z)(y)`, where `B(u) = u / (e^u - 1)`,
//! with Picard iteration in the free Lie algebra. [`assoc_oracle`] computes
//! the same element independently through truncated associative series.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::LieAlgebra;
use crate::assoc::SeriesError;
use crate::freelie::{FreeLieContext, LieElement, LieError, LyndonWord};
use crate::rational::{bernoulli_numbers, factorial, Rational};
use crate::simplicial::Group;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BchError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// `log(exp(x) exp(y))` in the Lyndon basis over `{x, y}`, up to weight `cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalBchTable {
    element: LieElement,
}

impl UniversalBchTable {
    /// Derives the table at `cap` (no caching; see [`universal_bch`]).
    pub fn compute(cap: usize) -> Self {
        let ctx = FreeLieContext::from_letters("xy", cap.max(1)).expect("valid alphabet");
        let x = ctx.generator("x").expect("x");
        let y = ctx.generator("y").expect("y");
        // Coefficients of the t-expansion Z(t) = sum_n Z_n t^n, Z_0 = x.
        // Z_n has y-degree n, so n <= cap.
        let cap = ctx.cap();
        let bernoulli: Vec<Rational> = bernoulli_numbers(cap)
            .iter()
            .enumerate()
            .map(|(k, b)| {
                let signed = if k % 2 == 1 { -b } else { b.clone() };
                signed / factorial(k)
            })
            .collect();
        let mut z: Vec<LieElement> = vec![x.clone()];
        for _ in 0..cap {
            // R(t) = sum_k (-1)^k B_k / k! ad_Z^k(y), kept to t-degree cap - 1.
            let mut rhs: Vec<LieElement> = vec![ctx.zero(); cap];
            let mut power: Vec<LieElement> = vec![y.clone()];
            for (k, coeff) in bernoulli.iter().enumerate().take(cap) {
                if k > 0 {
                    power = poly_bracket(&z, &power, cap);
                }
                if power.iter().all(LieElement::is_zero) {
                    break;
                }
                for (n, p) in power.iter().enumerate() {
                    rhs[n] = rhs[n].add_unchecked(&p.scale(coeff));
                }
            }
            let mut next = vec![x.clone()];
            for (n, r) in rhs.into_iter().enumerate() {
                next.push(r.scale(&(Rational::from_integer((n as i64 + 1).into())).recip()));
            }
            z = next;
        }
        let element = z.iter().fold(ctx.zero(), |acc, zn| acc.add_unchecked(zn));
        Self { element }
    }

    pub fn cap(&self) -> usize {
        self.element.context().cap()
    }

    /// The BCH element in the free context on `{x, y}`.
    pub fn element(&self) -> &LieElement {
        &self.element
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (&LyndonWord, &Rational)> {
        self.element.terms()
    }

    /// Substitutes `x -> a`, `y -> b`, bracketing each Lyndon word through
    /// its standard factorization with `alg`'s bracket.
    pub fn evaluate<A: LieAlgebra>(&self, alg: &A, a: &A::Element, b: &A::Element) -> A::Element {
        let ctx = self.element.context();
        let mut values: HashMap<usize, A::Element> = HashMap::new();
        let mut out = alg.zero();
        for (i, c) in self.element.indexed_terms() {
            let v = word_value(ctx, i, alg, a, b, &mut values);
            out = alg.add(&out, &alg.scale(c, &v));
        }
        out
    }
}

fn word_value<A: LieAlgebra>(
    ctx: &FreeLieContext,
    i: usize,
    alg: &A,
    a: &A::Element,
    b: &A::Element,
    memo: &mut HashMap<usize, A::Element>,
) -> A::Element {
    if let Some(v) = memo.get(&i) {
        return v.clone();
    }
    let v = match ctx.factors(i) {
        None => {
            if ctx.basis()[i].letters()[0] == 0 {
                a.clone()
            } else {
                b.clone()
            }
        }
        Some((u, w)) => {
            let left = word_value(ctx, u, alg, a, b, memo);
            if alg.is_zero(&left) {
                alg.zero()
            } else {
                let right = word_value(ctx, w, alg, a, b, memo);
                alg.bracket(&left, &right)
            }
        }
    };
    memo.insert(i, v.clone());
    v
}

/// Bracket of two t-polynomials with Lie coefficients, dropping t-degrees
/// `>= len`.
fn poly_bracket(p: &[LieElement], q: &[LieElement], len: usize) -> Vec<LieElement> {
    let zero = p[0].context().zero();
    let mut out = vec![zero; len];
    for (i, pi) in p.iter().enumerate() {
        for (j, qj) in q.iter().enumerate() {
            if i + j < len && !pi.is_zero() && !qj.is_zero() {
                out[i + j] = out[i + j].add_unchecked(&pi.bracket_unchecked(qj));
            }
        }
    }
    while out.len() > 1 && out.last().is_some_and(LieElement::is_zero) {
        out.pop();
    }
    out
}

fn table_cache() -> &'static RwLock<BTreeMap<usize, Arc<UniversalBchTable>>> {
    static CACHE: OnceLock<RwLock<BTreeMap<usize, Arc<UniversalBchTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(BTreeMap::new()))
}

/// The universal table at `cap`, computed on first use and shared after.
///
/// Tables are inserted only once fully built, so readers never see a
/// partial table.
pub fn universal_bch(cap: usize) -> Arc<UniversalBchTable> {
    let cap = cap.max(1);
    if let Some(t) = table_cache().read().expect("bch cache poisoned").get(&cap) {
        return t.clone();
    }
    let table = Arc::new(UniversalBchTable::compute(cap));
    table_cache()
        .write()
        .expect("bch cache poisoned")
        .entry(cap)
        .or_insert(table)
        .clone()
}

/// `log(exp(a) exp(b))` through truncated associative series, re-expressed
/// in the Lyndon basis.
///
/// # Panics
///
/// If the associative result is not a Lie polynomial. That can only happen
/// through a bug in the series or rewriting code.
pub fn assoc_oracle(a: &LieElement, b: &LieElement) -> Result<LieElement, BchError> {
    if a.context() != b.context() {
        a.add(b)?;
    }
    let ctx = a.context();
    let product = a.to_associative().exp()?.mul(&b.to_associative().exp()?)?;
    let log = product.log()?;
    match ctx.from_associative(&log) {
        Ok(e) => Ok(e),
        Err(err @ LieError::NonLieResidue(_)) => {
            panic!("BCH oracle produced a non-Lie series: {err}")
        }
        Err(err) => Err(err.into()),
    }
}

/// The BCH product `a * b` in `alg`.
pub fn bch_product<A: LieAlgebra>(alg: &A, a: &A::Element, b: &A::Element) -> A::Element {
    universal_bch(alg.cap()).evaluate(alg, a, b)
}

/// Group inverse in `exp L`, which is `-a`.
pub fn bch_inverse<A: LieAlgebra>(alg: &A, a: &A::Element) -> A::Element {
    alg.neg(a)
}

/// `sum_{k=0}^{cap} B_k / k! ad_x^k(y)`, i.e. `(ad_x / (e^{ad_x} - 1))(y)`.
pub fn bernoulli_operator<A: LieAlgebra>(alg: &A, x: &A::Element, y: &A::Element) -> A::Element {
    let coeffs: Vec<Rational> = bernoulli_numbers(alg.cap())
        .iter()
        .enumerate()
        .map(|(k, b)| b / factorial(k))
        .collect();
    ad_series(alg, &coeffs, x, y)
}

/// `sum_{k>=0} ad_x^k(y) / (k+1)!`, i.e. `((e^{ad_x} - 1) / ad_x)(y)`; the
/// inverse of [`bernoulli_operator`].
pub fn exp_difference_operator<A: LieAlgebra>(alg: &A, x: &A::Element, y: &A::Element) -> A::Element {
    let coeffs: Vec<Rational> = (0..=alg.cap())
        .map(|k| factorial(k + 1).recip())
        .collect();
    ad_series(alg, &coeffs, x, y)
}

fn ad_series<A: LieAlgebra>(alg: &A, coeffs: &[Rational], x: &A::Element, y: &A::Element) -> A::Element {
    let mut out = alg.zero();
    let mut power = y.clone();
    for (k, c) in coeffs.iter().enumerate() {
        if k > 0 {
            power = alg.bracket(x, &power);
        }
        if alg.is_zero(&power) {
            break;
        }
        if !c.is_zero() {
            out = alg.add(&out, &alg.scale(c, &power));
        }
    }
    out
}

/// `exp L`: the elements of a nilpotent Lie algebra under the BCH product.
pub struct ExpGroup<'a, A: LieAlgebra> {
    alg: &'a A,
    table: Arc<UniversalBchTable>,
}

impl<'a, A: LieAlgebra> ExpGroup<'a, A> {
    pub fn new(alg: &'a A) -> Self {
        Self {
            alg,
            table: universal_bch(alg.cap()),
        }
    }

    pub fn algebra(&self) -> &'a A {
        self.alg
    }
}

impl<A: LieAlgebra> Clone for ExpGroup<'_, A> {
    fn clone(&self) -> Self {
        Self {
            alg: self.alg,
            table: self.table.clone(),
        }
    }
}

impl<A: LieAlgebra> Group for ExpGroup<'_, A> {
    type Element = A::Element;

    fn identity(&self) -> A::Element {
        self.alg.zero()
    }

    fn product(&self, a: &A::Element, b: &A::Element) -> A::Element {
        self.table.evaluate(self.alg, a, b)
    }

    fn inverse(&self, a: &A::Element) -> A::Element {
        bch_inverse(self.alg, a)
    }

    fn format(&self, a: &A::Element) -> String {
        self.alg.format(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Abelian, FreeNilpotent};
    use crate::rational::ratio;
    use crate::sample::seeded_rng;

    fn xy(cap: usize) -> FreeNilpotent {
        FreeNilpotent::new("xy", cap).unwrap()
    }

    fn show(alg: &FreeNilpotent, e: &LieElement) -> String {
        alg.format(e)
    }

    #[test]
    fn table_cap_one_is_sum() {
        assert_eq!(universal_bch(1).element().to_string(), "x + y");
    }

    #[test]
    fn table_cap_two() {
        assert_eq!(universal_bch(2).element().to_string(), "x + y + 1/2*[x,y]");
    }

    #[test]
    fn table_cap_three_matches_oracle() {
        // Oracle value: x + y + 1/2[x,y] + 1/12[x,[x,y]] - 1/12[[x,y],y]...
        // written in this basis [[x,y],y] = -[y,[x,y]], giving +1/12 on xyy.
        let alg = xy(3);
        let x = alg.generator("x").unwrap();
        let y = alg.generator("y").unwrap();
        let oracle = assoc_oracle(&x, &y).unwrap();
        assert_eq!(
            show(&alg, &oracle),
            "x + y + 1/2*[x,y] + 1/12*[x,[x,y]] + 1/12*[[x,y],y]"
        );
        assert_eq!(universal_bch(3).element(), &oracle);
    }

    #[test]
    fn oracle_degenerate_cases() {
        let alg = xy(4);
        let x = alg.generator("x").unwrap();
        assert_eq!(assoc_oracle(&x, &alg.zero()).unwrap(), x);
        let one = xy(1);
        let (a, b) = (one.generator("x").unwrap(), one.generator("y").unwrap());
        assert_eq!(assoc_oracle(&a, &b).unwrap(), one.add(&a, &b));
    }

    #[test]
    fn oracle_rejects_mixed_contexts() {
        let x4 = xy(4).generator("x").unwrap();
        let y3 = xy(3).generator("y").unwrap();
        assert!(matches!(
            assoc_oracle(&x4, &y3),
            Err(BchError::Lie(LieError::ContextMismatch { .. }))
        ));
    }

    #[test]
    fn product_in_small_algebras() {
        let ab = Abelian::new(2);
        let mut rng = seeded_rng(3);
        let (u, v) = (ab.sample(&mut rng), ab.sample(&mut rng));
        assert_eq!(bch_product(&ab, &u, &v), ab.add(&u, &v));

        let alg = xy(2);
        let x = alg.generator("x").unwrap();
        let y = alg.generator("y").unwrap();
        assert_eq!(show(&alg, &bch_product(&alg, &x, &y)), "x + y + 1/2*[x,y]");
        assert_eq!(bch_product(&alg, &x, &alg.zero()), x);
        assert_eq!(bch_product(&alg, &alg.zero(), &y), y);
    }

    #[test]
    fn inverse_cancels() {
        let alg = xy(5);
        let mut rng = seeded_rng(11);
        assert_eq!(bch_inverse(&alg, &alg.zero()), alg.zero());
        for _ in 0..5 {
            let a = alg.sample(&mut rng);
            let inv = bch_inverse(&alg, &a);
            assert!(alg.is_zero(&bch_product(&alg, &a, &inv)));
            assert!(alg.is_zero(&bch_product(&alg, &inv, &a)));
        }
        let ab = Abelian::new(2);
        let u = ab.sample(&mut rng);
        let v = ab.sample(&mut rng);
        assert_eq!(bch_product(&ab, &u, &bch_inverse(&ab, &v)), ab.sub(&u, &v));
    }

    #[test]
    fn bernoulli_operator_cap_three() {
        let alg = xy(3);
        let x = alg.generator("x").unwrap();
        let y = alg.generator("y").unwrap();
        let out = bernoulli_operator(&alg, &x, &y);
        let expected = alg
            .context()
            .parse("y - 1/2*[x,y] + 1/12*[x,[x,y]]")
            .unwrap();
        assert_eq!(out, expected);
        assert_eq!(exp_difference_operator(&alg, &x, &out), y);
    }

    #[test]
    fn bernoulli_operator_degenerate() {
        let alg = xy(4);
        let y = alg.generator("y").unwrap();
        assert_eq!(bernoulli_operator(&alg, &alg.zero(), &y), y);
        let ab = Abelian::new(2);
        let mut rng = seeded_rng(5);
        let (u, v) = (ab.sample(&mut rng), ab.sample(&mut rng));
        assert_eq!(bernoulli_operator(&ab, &u, &v), v);
    }

    #[test]
    fn table_is_cached_per_cap() {
        let a = universal_bch(4);
        let b = universal_bch(4);
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(a.cap(), 4);
    }

    #[test]
    fn weight_one_part_is_x_plus_y() {
        let t = universal_bch(5);
        assert_eq!(t.element().homogeneous_part(1).to_string(), "x + y");
        assert_eq!(
            t.element().homogeneous_part(2).coefficient(&LyndonWord::new(vec![0, 1]).unwrap()),
            ratio(1, 2)
        );
    }
}

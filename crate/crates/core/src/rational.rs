//! Exact rationals.
//!
//! Everything in this crate computes over `BigRational`, which is always kept
//! in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

/// Builds `numer / denom` from machine integers.
///
/// Panics if `denom` is zero.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Appends `c*label` (or `label` when `c == 1`) to a canonical linear
/// combination being printed, choosing the joining sign.
pub(crate) fn push_term(out: &mut String, first: bool, c: &Rational, label: &str) {
    if first {
        if !c.is_one() {
            out.push_str(&format_rational(c));
            out.push('*');
        }
    } else {
        out.push_str(if c.is_negative() { " - " } else { " + " });
        let magnitude = c.abs();
        if !magnitude.is_one() {
            out.push_str(&format_rational(&magnitude));
            out.push('*');
        }
    }
    out.push_str(label);
}

/// Bernoulli numbers `B_0 ..= B_n` with the convention `B_1 = -1/2`, i.e.
/// the coefficients of `t / (e^t - 1) = sum B_k t^k / k!`.
///
/// Uses the recurrence `sum_{j=0}^{m} C(m+1, j) B_j = 0` for `m >= 1`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::one());
    for m in 1..=n {
        let mut acc = Rational::zero();
        let mut binom = BigInt::one(); // C(m+1, j), starting at j = 0
        for (j, bj) in b.iter().enumerate() {
            acc += Rational::from_integer(binom.clone()) * bj;
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        // binom is now C(m+1, m) = m+1
        b.push(-acc / Rational::from_integer(binom));
    }
    b
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rational {
    let mut f = BigInt::one();
    for k in 2..=n {
        f *= BigInt::from(k);
    }
    Rational::from_integer(f)
}

#![allow(dead_code)]

use lierealize::rational::{ratio, Rational};
use lierealize::StructureConstants;
use num_traits::{One, Zero};

pub fn heisenberg() -> StructureConstants {
    StructureConstants::load(
        concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/heisenberg.sc"),
        2,
    )
    .expect("heisenberg fixture loads")
}

fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Number of Lyndon words of length `n` over `k` letters.
pub fn witt(k: u64, n: u64) -> u64 {
    let sum: i64 = (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| mobius(d) * (k.pow((n / d) as u32) as i64))
        .sum();
    (sum / n as i64) as u64
}

/// Coefficients of t/(e^t - 1) by power-series division, i.e. B_k/k!.
pub fn bernoulli_over_factorial(n: usize) -> Vec<Rational> {
    // (e^t - 1)/t = sum t^k/(k+1)!
    let mut denom = Vec::with_capacity(n + 1);
    let mut fact = Rational::one();
    for k in 0..=n {
        fact *= ratio(k as i64 + 1, 1);
        denom.push(Rational::one() / fact.clone());
    }
    let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = if k == 0 { Rational::one() } else { Rational::zero() };
        for j in 0..k {
            acc -= &out[j] * &denom[k - j];
        }
        out.push(acc / &denom[0]);
    }
    out
}

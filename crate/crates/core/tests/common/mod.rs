//! Independent oracles shared by the integration tests. Nothing here calls the series
//! engine; values come from textbook recurrences and closed sums.

#![allow(dead_code)]

use degen_appell::rational::{self, int};
use degen_appell::{MultiPoly, Rational};

/// Classical Bernoulli numbers from `Σ_{k=0}^{m} C(m+1,k) B_k = 0`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b = vec![int(1)];
    for m in 1..=n {
        let mut acc = int(0);
        for (k, bk) in b.iter().enumerate() {
            acc += Rational::from_integer(rational::binomial(m + 1, k)) * bk;
        }
        b.push(-acc / int(m as i64 + 1));
    }
    b
}

/// Values `E_n(0)` of the Euler polynomials, from `E_n(1) + E_n(0) = 2δ_{n0}` and the
/// Appell shift `E_n(1) = Σ_k C(n,k) E_k(0)`.
pub fn euler_at_zero(n: usize) -> Vec<Rational> {
    let mut e = vec![int(1)];
    for m in 1..=n {
        let mut acc = int(0);
        for (k, ek) in e.iter().enumerate() {
            acc += Rational::from_integer(rational::binomial(m, k)) * ek;
        }
        e.push(-acc / int(2));
    }
    e
}

/// Genocchi numbers `G_n = 2(1 − 2^n) B_n`.
pub fn genocchi_numbers(n: usize) -> Vec<Rational> {
    bernoulli_numbers(n)
        .into_iter()
        .enumerate()
        .map(|(k, b)| int(2) * (int(1) - rational::pow(&int(2), k as i64).unwrap()) * b)
        .collect()
}

pub fn appell_numbers(family: &str, n: usize) -> Vec<Rational> {
    match family {
        "identity" => (0..=n).map(|k| if k == 0 { int(1) } else { int(0) }).collect(),
        "bernoulli" => bernoulli_numbers(n),
        "euler" => euler_at_zero(n),
        "genocchi" => genocchi_numbers(n),
        other => panic!("no oracle for {other}"),
    }
}

/// `Σ_k C(n,k) a_k l1^{n−k}` in one variable, no λ.
pub fn classical_appell(numbers: &[Rational], n: usize) -> MultiPoly {
    (0..=n).fold(MultiPoly::zero(1), |acc, k| {
        let c = Rational::from_integer(rational::binomial(n, k)) * &numbers[k];
        &acc + &MultiPoly::term(1, c, 0, &[(n - k) as u32])
    })
}

fn fact(n: usize) -> Rational {
    Rational::from_integer(rational::factorial(n))
}

/// `n! Σ l1^a l2^b l3^c / (a! b! c!)` over `a + 2b + 3c = n`, restricted to `r` variables.
pub fn classical_hermite(r: usize, n: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(r);
    for c in 0..=n / 3 {
        if c > 0 && r < 3 {
            break;
        }
        for b in 0..=(n - 3 * c) / 2 {
            if b > 0 && r < 2 {
                break;
            }
            let a = n - 3 * c - 2 * b;
            let coeff = fact(n) / (fact(a) * fact(b) * fact(c));
            let mut exps = vec![a as u32, b as u32, c as u32];
            exps.truncate(r);
            out = &out + &MultiPoly::term(r, coeff, 0, &exps);
        }
    }
    out
}

/// `ln 2 = Σ_{k≥1} 1/(k 2^k)`, truncated after `terms` terms (error below `2^-terms`).
pub fn ln2(terms: usize) -> Rational {
    (1..=terms)
        .map(|k| Rational::new(1.into(), num::BigInt::from(k) << k))
        .fold(int(0), |acc, t| acc + t)
}

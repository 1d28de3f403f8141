//! Multichain generating functions: the tuple recurrence for `ζ^m` and the
//! closed forms of its two-letter solutions.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Polynomial, RationalFn, TypeVector};
use crate::words::Grading;
use crate::{Error, Result};

fn seeds(n: usize, grading: Grading) -> Vec<RationalFn> {
    (1..=n)
        .map(|k| match grading {
            Grading::Norm => RationalFn::x_pow(k),
            Grading::Length => RationalFn::x_pow(1),
        })
        .collect()
}

fn step(prev: &[RationalFn]) -> Vec<RationalFn> {
    let n = prev.len();
    // tails[k] = A_k + … + A_n, heads[k] = A_1 + … + A_{k-1} (0-based k).
    let mut tails = alloc::vec![RationalFn::zero(); n + 1];
    for k in (0..n).rev() {
        tails[k] = tails[k + 1].add(&prev[k]);
    }
    let mut head = RationalFn::zero();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let den = RationalFn::one().sub(&head);
        out.push(tails[k].div(&den).expect("1 - A_1 - … is nonzero at 0"));
        head = head.add(&prev[k]);
    }
    out
}

/// All tuples `(A_1, …, A_n)` for `0..=m`, seeded by the grading.
pub fn f_iterates(n: usize, grading: Grading, m: usize) -> Vec<Vec<RationalFn>> {
    let mut all = Vec::with_capacity(m + 1);
    all.push(seeds(n, grading));
    for _ in 0..m {
        let next = step(all.last().expect("nonempty"));
        all.push(next);
    }
    all
}

/// `(A_1, …, A_n)` after `m` applications of
/// `A_k ↦ (A_k + ⋯ + A_n) / (1 - A_1 - ⋯ - A_{k-1})`.
pub fn f_iterate(n: usize, grading: Grading, m: usize) -> Vec<RationalFn> {
    f_iterates(n, grading, m).pop().expect("nonempty")
}

/// `Σ_w ζ^m(u,w) g(w)` over `[n]*`:
/// `∏_{i<m} 1/(1 - Σ_k A_k^{(i)}) · ∏_k (A_k^{(m)})^{l_k}`.
pub fn zeta_power_genfun(
    t: &TypeVector,
    n: usize,
    m: usize,
    grading: Grading,
) -> Result<RationalFn> {
    if n == 0 || t.size() != n {
        return Err(Error::InvalidArgument(format!(
            "type vector of length {} used with n = {n}",
            t.size()
        )));
    }
    let iterates = f_iterates(n, grading, m);
    let mut f = RationalFn::one();
    for tuple in &iterates[..m] {
        let sum = tuple.iter().fold(RationalFn::zero(), |acc, a| acc.add(a));
        f = f.div(&RationalFn::one().sub(&sum))?;
    }
    for (a, &l) in iterates[m].iter().zip(t.counts()) {
        f = f.mul(&a.pow(u32::try_from(l).expect("exponent fits in u32")));
    }
    Ok(f)
}

/// `C(n, k)` with `C(n, 0) = 1` for every `n` and `0` whenever `k < 0` or
/// `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    if k < 0 || k > n {
        return BigInt::zero();
    }
    binomial_extended(n, k)
}

/// `n(n-1)⋯(n-k+1)/k!` for `k ≥ 0`, any integer `n`; `0` for `k < 0`.
pub fn binomial_extended(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= BigInt::from(n - j);
        acc /= BigInt::from(j + 1);
    }
    acc
}

fn sign(e: i64) -> BigInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn floor_half(a: i64) -> i64 {
    a.div_euclid(2)
}

fn ceil_half(a: i64) -> i64 {
    -(-a).div_euclid(2)
}

/// `ā_m(x) = Σ_i (-1)^{⌊i/2⌋} C(⌊(m+i)/2⌋, i) x^i`.
pub fn abar_norm(m: usize) -> Polynomial {
    let m = m as i64;
    Polynomial::new(
        (0..=m + 1)
            .map(|i| sign(floor_half(i)) * binomial(floor_half(m + i), i))
            .collect(),
    )
}

/// `d_m(x) = Σ_i (-1)^{⌈i/2⌉} C(⌊(m+i-1)/2⌋, i) x^i`.
pub fn d_norm(m: usize) -> Polynomial {
    let m = m as i64;
    Polynomial::new(
        (0..=m + 1)
            .map(|i| sign(ceil_half(i)) * binomial(floor_half(m + i - 1), i))
            .collect(),
    )
}

/// `a_m = x ā_m / d_m`, `b_m = x² / (d_m d_{m+1})`.
pub fn closed_am_bm_norm(m: usize) -> (RationalFn, RationalFn) {
    let d = d_norm(m);
    let a = RationalFn::new(&Polynomial::x_pow(1) * &abar_norm(m), d.clone()).expect("d_m(0) = 1");
    let b = RationalFn::new(Polynomial::x_pow(2), &d * &d_norm(m + 1)).expect("d_m(0) = 1");
    (a, b)
}

fn exact_quotient(num: BigInt, den: i64) -> BigInt {
    let (q, r) = num.div_rem(&BigInt::from(den));
    debug_assert!(r.is_zero(), "inexact coefficient quotient");
    q
}

fn alpha(m: i64, i: i64) -> BigInt {
    if m % 2 == 0 {
        let c = binomial(m / 2 + i, m / 2 - i);
        exact_quotient(BigInt::from(m + 1) * (BigInt::one() << i) * c, 2 * i + 1)
    } else {
        (BigInt::one() << (i + 1)) * binomial((m + 1) / 2 + i, (m - 1) / 2 - i)
    }
}

fn delta(m: i64, i: i64) -> BigInt {
    if m % 2 == 0 {
        let c = binomial(m / 2 + i, m / 2 - i);
        exact_quotient(BigInt::from(m) * (BigInt::one() << i) * c, m + 2 * i)
    } else {
        (BigInt::one() << i) * binomial((m - 1) / 2 + i, (m - 1) / 2 - i)
    }
}

/// `ā_m(t) = Σ_i (-1)^i α_{m,i} t^i`.
pub fn abar_len(m: usize) -> Polynomial {
    let m = m as i64;
    Polynomial::new((0..=m).map(|i| sign(i) * alpha(m, i)).collect())
}

/// `d_m(t) = Σ_i (-1)^i δ_{m,i} t^i`, with `d_0 = 1` in place of `0/0`.
pub fn d_len(m: usize) -> Polynomial {
    if m == 0 {
        return Polynomial::one();
    }
    let m = m as i64;
    Polynomial::new((0..=m).map(|i| sign(i) * delta(m, i)).collect())
}

/// `a_m = t ā_m / d_m`, `b_m = t / (d_m d_{m+1})`.
pub fn closed_am_bm_len(m: usize) -> (RationalFn, RationalFn) {
    let d = d_len(m);
    let a = RationalFn::new(&Polynomial::x_pow(1) * &abar_len(m), d.clone()).expect("d_m(0) = 1");
    let b = RationalFn::new(Polynomial::x_pow(1), &d * &d_len(m + 1)).expect("d_m(0) = 1");
    (a, b)
}

/// Both sides of the coefficient identity behind `a_m = a_{m-1} + b_{m-1}`:
///
/// `Σ_i (-1)^{⌊i/2⌋+⌈(k-i)/2⌉} C(⌊(m+i)/2⌋, i) C(⌊(m+k-i-2)/2⌋, k-i)` and
/// `Σ_i (-1)^{⌊i/2⌋+⌈(k-i)/2⌉} C(⌊(m+i-1)/2⌋, i) C(⌊(m+k-i-1)/2⌋, k-i)`.
///
/// Binomials are the polynomial ones, [`binomial_extended`]: at `m = 0` the
/// upper index `⌊(k-i-2)/2⌋` goes negative, and only the polynomial
/// extension turns the `k = 1` case into `lhs = rhs + 1`.
pub fn verify_sum_identity(m: usize, k: usize) -> (BigInt, BigInt) {
    let (m, k) = (m as i64, k as i64);
    let mut lhs = BigInt::zero();
    let mut rhs = BigInt::zero();
    for i in 0..=k {
        let s = sign(floor_half(i) + ceil_half(k - i));
        lhs += &s
            * binomial_extended(floor_half(m + i), i)
            * binomial_extended(floor_half(m + k - i - 2), k - i);
        rhs += &s
            * binomial_extended(floor_half(m + i - 1), i)
            * binomial_extended(floor_half(m + k - i - 1), k - i);
    }
    (lhs, rhs)
}

//! Chebyshev polynomials of the first kind and the `Λ` conjecture: over the
//! poset with `a, b < c`, `μ(a^i, c^j)` should be the coefficient of
//! `x^{j-i}` in `T_{i+j}(x)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::genfun::Polynomial;
use crate::incidence::IntervalCache;
use crate::poset::{make_lambda, Poset};
use crate::words::Word;
use crate::{Error, Result};

/// `T_n` from `T_0 = 1`, `T_1 = x`, `T_n = 2x T_{n-1} - T_{n-2}`.
pub fn chebyshev_t(n: usize) -> Polynomial {
    let two_x = Polynomial::from_i64(&[0, 2]);
    let (mut prev, mut cur) = (Polynomial::one(), Polynomial::x_pow(1));
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = core::mem::replace(&mut cur, next);
    }
    cur
}

/// One cell of the conjecture table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaCheck {
    pub i: usize,
    pub j: usize,
    pub mu: BigInt,
    pub coeff: BigInt,
    pub agree: bool,
}

impl LambdaCheck {
    /// `μ/coeff/OK` or `μ/coeff/MISMATCH`.
    pub fn cell(&self) -> alloc::string::String {
        let verdict = if self.agree { "OK" } else { "MISMATCH" };
        format!("{}/{}/{}", self.mu, self.coeff, verdict)
    }
}

fn power(poset: &Poset, name: &str, k: usize) -> Word {
    let a = poset.elem(name).expect("element of Λ");
    Word::new(vec![a; k])
}

fn check_with(cache: &mut IntervalCache<'_>, i: usize, j: usize) -> Result<LambdaCheck> {
    if i > j {
        return Err(Error::InvalidArgument(format!(
            "need i <= j, got i={i}, j={j}"
        )));
    }
    let poset = cache.poset();
    let mu = cache.mobius(&power(poset, "a", i), &power(poset, "c", j));
    let coeff = chebyshev_t(i + j).coeff(j - i);
    let agree = mu == coeff;
    Ok(LambdaCheck {
        i,
        j,
        mu,
        coeff,
        agree,
    })
}

/// Brute-force `μ(a^i, c^j)` over `Λ*` against `[x^{j-i}] T_{i+j}`.
pub fn check_lambda_conjecture(i: usize, j: usize) -> Result<LambdaCheck> {
    let lambda = make_lambda();
    check_with(&mut IntervalCache::new(&lambda), i, j)
}

/// Every cell with `0 ≤ i ≤ j ≤ max`, row by row, sharing one cache.
pub fn lambda_table(max: usize) -> Vec<LambdaCheck> {
    let lambda = make_lambda();
    let mut cache = IntervalCache::new(&lambda);
    let mut out = Vec::new();
    for i in 0..=max {
        for j in i..=max {
            out.push(check_with(&mut cache, i, j).expect("i <= j"));
        }
    }
    out
}

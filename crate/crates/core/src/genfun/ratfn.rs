use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::Polynomial;
use crate::{Error, Result};

/// A quotient of integer polynomials in lowest terms.
///
/// Canonical form: numerator and denominator are coprime over `ℚ`, their
/// combined coefficient content is 1, and the lowest-order nonzero
/// coefficient of the denominator is positive. Structural equality is
/// therefore equality of functions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFn {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFn {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let mut c = num.content().gcd(&den.content());
        if den.trailing().is_some_and(Signed::is_negative) {
            c = -c;
        }
        Ok(RationalFn {
            num: num.div_scalar_exact(&c),
            den: den.div_scalar_exact(&c),
        })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Self::new(p, Polynomial::one()).expect("unit denominator")
    }

    pub fn zero() -> Self {
        RationalFn {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn x_pow(k: usize) -> Self {
        Self::from_poly(Polynomial::x_pow(k))
    }

    /// `1 / p`.
    pub fn recip_poly(p: Polynomial) -> Result<Self> {
        Self::new(Polynomial::one(), p)
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::new(num, &self.den * &other.den).expect("product of nonzero denominators")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den)
            .expect("product of nonzero denominators")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn pow(&self, e: u32) -> Self {
        // Powers of coprime polynomials stay coprime.
        RationalFn {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).expect("nonzero denominator")
    }

    /// The first `degree + 1` power series coefficients at 0.
    pub fn taylor(&self, degree: usize) -> Result<Vec<BigInt>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::NotExpandable);
        }
        let mut out: Vec<BigInt> = Vec::with_capacity(degree + 1);
        for k in 0..=degree {
            let mut acc = self.num.coeff(k);
            for j in 1..=k.min(self.den.coeffs().len().saturating_sub(1)) {
                acc -= &self.den.coeffs()[j] * &out[k - j];
            }
            let (q, r) = acc.div_rem(&d0);
            if !r.is_zero() {
                return Err(Error::NotExpandable);
            }
            out.push(q);
        }
        Ok(out)
    }

    pub fn display(&self, var: char) -> RatDisplay<'_> {
        RatDisplay { f: self, var }
    }
}

/// `(num) / (den)` in ascending powers; a bare polynomial when `den = 1`.
pub struct RatDisplay<'a> {
    f: &'a RationalFn,
    var: char,
}

impl fmt::Display for RatDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.f.den.degree() == Some(0) && self.f.den.coeff(0).is_one() {
            write!(f, "{}", self.f.num.display(self.var))
        } else {
            write!(
                f,
                "({}) / ({})",
                self.f.num.display(self.var),
                self.f.den.display(self.var)
            )
        }
    }
}

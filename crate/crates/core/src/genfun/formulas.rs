//! Closed-form zeta and Möbius generating functions by norm and by length.

use alloc::format;

use num_bigint::BigInt;

use super::{Polynomial, RationalFn, TypeVector};
use crate::poset::Poset;
use crate::{Error, Result};

fn poly(c: &[i64]) -> Polynomial {
    Polynomial::from_i64(c)
}

fn ratio(num: Polynomial, den: Polynomial) -> RationalFn {
    RationalFn::new(num, den).expect("denominators here are nonzero at 0")
}

fn exp(e: usize) -> u32 {
    u32::try_from(e).expect("exponent fits in u32")
}

fn check_size(t: &TypeVector, n: usize) -> Result<()> {
    if n == 0 || t.size() != n {
        return Err(Error::InvalidArgument(format!(
            "type vector of length {} used with n = {n}",
            t.size()
        )));
    }
    Ok(())
}

/// `1 - 2x + x^k`.
fn one_minus_2x_plus(k: usize) -> Polynomial {
    &poly(&[1, -2]) + &Polynomial::x_pow(k)
}

/// `1 - x^k`.
fn one_minus_x_pow(k: usize) -> Polynomial {
    &Polynomial::one() - &Polynomial::x_pow(k)
}

/// `Σ_{w ≥ u} x^{|w|}` in `[n]*`:
/// `(1-x)/(1-2x+x^{n+1}) ∏_k ((x^k - x^{n+1})/(1-2x+x^k))^{l_k}`.
pub fn z_norm(t: &TypeVector, n: usize) -> Result<RationalFn> {
    check_size(t, n)?;
    let mut f = ratio(poly(&[1, -1]), one_minus_2x_plus(n + 1));
    for k in 1..=n {
        let factor = ratio(
            &Polynomial::x_pow(k) - &Polynomial::x_pow(n + 1),
            one_minus_2x_plus(k),
        );
        f = f.mul(&factor.pow(exp(t.get(k))));
    }
    Ok(f)
}

/// `Σ_w μ(u,w) x^{|w|}` in `[n]*`:
/// `x^{|u|}(1-x)^{2ℓ(u)+1} / (1-x)^{l_1+l_n} ∏_{k=2}^n (1-x^k)^{-(l_{k-1}+l_k)}`.
pub fn m_norm(t: &TypeVector, n: usize) -> Result<RationalFn> {
    check_size(t, n)?;
    let num = &Polynomial::x_pow(t.norm()) * &poly(&[1, -1]).pow(exp(2 * t.length() + 1));
    let mut den = poly(&[1, -1]).pow(exp(t.get(1) + t.get(n)));
    for k in 2..=n {
        den = &den * &one_minus_x_pow(k).pow(exp(t.get(k - 1) + t.get(k)));
    }
    Ok(ratio(num, den))
}

/// `Σ_{w ≥ u} t^{ℓ(w)}` in `[n]*`:
/// `1/(1-nt) ∏_k ((n-k+1)t / (1-(k-1)t))^{l_k}`.
pub fn z_len(t: &TypeVector, n: usize) -> Result<RationalFn> {
    check_size(t, n)?;
    let mut f = ratio(Polynomial::one(), poly(&[1, -(n as i64)]));
    for k in 1..=n {
        let factor = ratio(poly(&[0, (n - k + 1) as i64]), poly(&[1, -(k as i64 - 1)]));
        f = f.mul(&factor.pow(exp(t.get(k))));
    }
    Ok(f)
}

/// `Σ_w μ(u,w) t^{ℓ(w)}` in `[n]*`.
///
/// Under `k ↦ t` the builder `m(k)` vanishes for `k < n` but `m(n) = t`
/// (the `(n+1)⁺` term is empty in `[n]`), so the result is `(1-t) t^{ℓ(u)}`
/// when every letter of `u` is `n`, and `0` otherwise.
pub fn m_len(t: &TypeVector, n: usize) -> Result<RationalFn> {
    check_size(t, n)?;
    if (1..n).any(|k| t.get(k) > 0) {
        return Ok(RationalFn::zero());
    }
    Ok(RationalFn::from_poly(
        &poly(&[1, -1]) * &Polynomial::x_pow(t.length()),
    ))
}

/// Norm generating function of `ζ(u, ·)` over all compositions:
/// `(1-x)/(1-2x) ∏_k (x^k/(1-2x+x^k))^{l_k}`.
pub fn z_p_norm(t: &TypeVector) -> RationalFn {
    let mut f = ratio(poly(&[1, -1]), poly(&[1, -2]));
    for k in 1..=t.size() {
        let factor = ratio(Polynomial::x_pow(k), one_minus_2x_plus(k));
        f = f.mul(&factor.pow(exp(t.get(k))));
    }
    f
}

/// Norm generating function of `μ(u, ·)` over all compositions:
/// `x^{|u|}(1-x)^{2ℓ(u)+1}/(1-x)^{l_1} ∏_{k≥2} (1-x^k)^{-(l_{k-1}+l_k)}`.
pub fn m_p_norm(t: &TypeVector) -> RationalFn {
    let num = &Polynomial::x_pow(t.norm()) * &poly(&[1, -1]).pow(exp(2 * t.length() + 1));
    let mut den = poly(&[1, -1]).pow(exp(t.get(1)));
    for k in 2..=t.size() + 1 {
        den = &den * &one_minus_x_pow(k).pow(exp(t.get(k - 1) + t.get(k)));
    }
    ratio(num, den)
}

fn const_t(c: usize) -> Polynomial {
    poly(&[0, c as i64])
}

/// `1 - c·t`.
fn one_minus_ct(c: usize) -> Polynomial {
    poly(&[1, -(c as i64)])
}

/// `z(a; t) = |I_a| t / (1 - |J_a| t)`.
fn z_letter_len(poset: &Poset, a: crate::Elem) -> RationalFn {
    ratio(
        const_t(poset.upper_ideal(a).len()),
        one_minus_ct(poset.upper_ideal_complement(a).len()),
    )
}

/// `G_P(t) = (1-t)/(1+(|O_P|-1)t)`, the length image of `(ε + Σ_{o∈O_P} o⁺)⁻¹`.
fn gap_len(poset: &Poset) -> RationalFn {
    let roots = poset.minimal_elements().len() as i64;
    ratio(poly(&[1, -1]), poly(&[1, roots - 1]))
}

/// `m(a; t)` from `m(a) = (a⁺ - Σ_{c∈C_a} c⁺) G_P` with `c⁺ ↦ t/(1-t)`.
fn m_letter_len(poset: &Poset, a: crate::Elem) -> RationalFn {
    let plus = ratio(const_t(1), poly(&[1, -1]));
    let covers = plus.scale(&BigInt::from(poset.covers_of(a).len()));
    plus.sub(&covers).mul(&gap_len(poset))
}

fn check_poset_size(poset: &Poset, t: &TypeVector) -> Result<()> {
    check_size(t, poset.len())
}

/// `Σ_{w ≥ u} t^{ℓ(w)}` in `P*`: `1/(1-|P|t) ∏_a z(a;t)^{l_a}`.
pub fn z_len_general(poset: &Poset, t: &TypeVector) -> Result<RationalFn> {
    check_poset_size(poset, t)?;
    let mut f = ratio(Polynomial::one(), one_minus_ct(poset.len()));
    for a in poset.elements() {
        f = f.mul(&z_letter_len(poset, a).pow(exp(t.counts()[a.index()])));
    }
    Ok(f)
}

/// `Σ_w μ(u,w) t^{ℓ(w)}` in `P*` for a rooted forest:
/// `G_P(t) ∏_a m(a;t)^{l_a}`.
pub fn m_len_general(poset: &Poset, t: &TypeVector) -> Result<RationalFn> {
    if !poset.is_rooted_forest() {
        return Err(Error::NotRootedForest);
    }
    check_poset_size(poset, t)?;
    let mut f = gap_len(poset);
    for a in poset.elements() {
        f = f.mul(&m_letter_len(poset, a).pow(exp(t.counts()[a.index()])));
    }
    Ok(f)
}

/// The product form of [`m_len_general`]:
/// `(1-t) t^{ℓ(u)} ∏_a (1-|C_a|)^{l_a} / (1+(|O_P|-1)t)^{ℓ(u)+1}`.
/// It vanishes as soon as `u` has a letter with exactly one cover.
pub fn m_len_general_closed(poset: &Poset, t: &TypeVector) -> Result<RationalFn> {
    if !poset.is_rooted_forest() {
        return Err(Error::NotRootedForest);
    }
    check_poset_size(poset, t)?;
    let roots = poset.minimal_elements().len() as i64;
    let mut num = &poly(&[1, -1]) * &Polynomial::x_pow(t.length());
    for a in poset.elements() {
        let covers = poset.covers_of(a).len() as i64;
        num = num.scale(&BigInt::from(1 - covers).pow(exp(t.counts()[a.index()])));
    }
    Ok(ratio(num, poly(&[1, roots - 1]).pow(exp(t.length() + 1))))
}

/// `1/(1-|P|t) ∏_a |I_a|t/(1-|J_a|t)` read literally, with no `l_a`
/// exponents; it does not depend on `u`.
pub fn z_len_general_as_printed(poset: &Poset) -> RationalFn {
    let mut f = ratio(Polynomial::one(), one_minus_ct(poset.len()));
    for a in poset.elements() {
        f = f.mul(&z_letter_len(poset, a));
    }
    f
}

/// `t^{|P|}(1-|O|t)^{|P-O|+1}/(1-t)^{|P|} ∏_{a∈O}(1-t-|C_a|(1-|O|t))
/// ∏_{b∉O}(1-|C_b|)` read literally; it does not depend on `u`.
pub fn m_len_general_as_printed(poset: &Poset) -> RationalFn {
    let p = poset.len();
    let minimal = poset.minimal_elements().len() as i64;
    let mut num = &Polynomial::x_pow(p) * &poly(&[1, -minimal]).pow(exp(p - minimal as usize + 1));
    for a in poset.elements() {
        let covers = poset.covers_of(a).len() as i64;
        let factor = if poset.is_minimal(a) {
            poly(&[1 - covers, covers * minimal - 1])
        } else {
            poly(&[1 - covers])
        };
        num = &num * &factor;
    }
    ratio(num, poly(&[1, -1]).pow(exp(p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{make_antichain, make_chain};
    use alloc::vec;

    fn tv(c: &[usize]) -> TypeVector {
        TypeVector::new(c.to_vec())
    }

    fn r(n: &[i64], d: &[i64]) -> RationalFn {
        ratio(poly(n), poly(d))
    }

    #[test]
    fn z_norm_single_letter_alphabet() {
        assert_eq!(z_norm(&tv(&[0]), 1).unwrap(), r(&[1], &[1, -1]));
    }

    #[test]
    fn m_norm_of_one_over_two_letters() {
        assert_eq!(m_norm(&tv(&[1, 0]), 2).unwrap(), r(&[0, 1, -1], &[1, 1]));
    }

    #[test]
    fn m_len_cases() {
        for n in 1..4 {
            assert_eq!(
                m_len(&TypeVector::new(vec![0; n]), n).unwrap(),
                r(&[1, -1], &[1])
            );
        }
        assert!(m_len(&tv(&[1, 0, 0]), 3).unwrap().is_zero());
        assert!(m_len(&tv(&[0, 2, 1]), 3).unwrap().is_zero());
        assert_eq!(m_len(&tv(&[0, 0, 2]), 3).unwrap(), r(&[0, 0, 1, -1], &[1]));
    }

    #[test]
    fn size_mismatch_rejected() {
        assert!(z_norm(&tv(&[1, 0]), 3).is_err());
        assert!(z_len(&tv(&[]), 0).is_err());
    }

    #[test]
    fn rank_generating_function() {
        assert_eq!(z_p_norm(&tv(&[])), r(&[1, -1], &[1, -2]));
    }

    #[test]
    fn general_length_functions_specialize() {
        for n in 1..=3 {
            let p = make_chain(n).unwrap();
            for counts in [vec![0; n], vec![1; n]] {
                let t = TypeVector::new(counts);
                assert_eq!(z_len_general(&p, &t).unwrap(), z_len(&t, n).unwrap());
            }
        }
        let q = make_antichain(3).unwrap();
        assert_eq!(
            z_len_general(&q, &tv(&[0, 0, 0])).unwrap(),
            r(&[1], &[1, -3])
        );
    }

    #[test]
    fn closed_m_form_matches_first_principles() {
        let forest = Poset::from_named_covers(
            &["1", "2", "3", "4", "5"],
            &[("1", "2"), ("1", "3"), ("4", "5")],
        )
        .unwrap();
        for counts in [
            [0, 0, 0, 0, 0],
            [1, 0, 0, 0, 0],
            [0, 1, 1, 0, 0],
            [2, 0, 1, 1, 1],
        ] {
            let t = tv(&counts);
            assert_eq!(
                m_len_general(&forest, &t).unwrap(),
                m_len_general_closed(&forest, &t).unwrap()
            );
        }
    }

    #[test]
    fn single_upper_cover_kills_length_function() {
        let p = make_chain(3).unwrap();
        assert!(m_len_general(&p, &tv(&[0, 1, 0])).unwrap().is_zero());
        let forest =
            Poset::from_named_covers(&["r", "s", "s1"], &[("r", "s"), ("s", "s1")]).unwrap();
        assert!(m_len_general(&forest, &tv(&[0, 1, 0])).unwrap().is_zero());
        let two =
            Poset::from_named_covers(&["1", "2", "3", "4"], &[("1", "2"), ("3", "4")]).unwrap();
        assert!(m_len_general(&two, &tv(&[1, 0, 0, 0])).unwrap().is_zero());
    }

    #[test]
    fn subword_order_length_function() {
        let q = make_antichain(2).unwrap();
        assert_eq!(
            m_len_general(&q, &tv(&[0, 0])).unwrap(),
            r(&[1, -1], &[1, 1])
        );
        assert_eq!(
            m_len_general(&q, &tv(&[1, 1])).unwrap(),
            r(&[0, 0, 1, -1], &[1, 3, 3, 1])
        );
    }
}

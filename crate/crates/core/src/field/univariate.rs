//! Dense univariate polynomials over a field, coefficients low to high.
//!
//! Used as the payload of rational-function and simple-extension elements.
//! All results are trimmed: no trailing zero coefficients.

use super::display::{format_sum, power, sum_shape};
use super::{Field, FieldError, Shape};

pub fn trim<F: Field>(field: &F, mut a: Vec<F::Element>) -> Vec<F::Element> {
    while a.last().is_some_and(|c| field.is_zero(c)) {
        a.pop();
    }
    a
}

pub fn degree<F: Field>(a: &[F::Element]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn add<F: Field>(field: &F, a: &[F::Element], b: &[F::Element]) -> Vec<F::Element> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => field.add(x, y),
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(field, out)
}

pub fn neg<F: Field>(field: &F, a: &[F::Element]) -> Vec<F::Element> {
    a.iter().map(|c| field.neg(c)).collect()
}

pub fn sub<F: Field>(field: &F, a: &[F::Element], b: &[F::Element]) -> Vec<F::Element> {
    add(field, a, &neg(field, b))
}

pub fn scale<F: Field>(field: &F, a: &[F::Element], c: &F::Element) -> Vec<F::Element> {
    if field.is_zero(c) {
        return Vec::new();
    }
    trim(field, a.iter().map(|x| field.mul(x, c)).collect())
}

pub fn mul<F: Field>(field: &F, a: &[F::Element], b: &[F::Element]) -> Vec<F::Element> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = field.add(&out[i + j], &field.mul(x, y));
        }
    }
    trim(field, out)
}

/// Euclidean division `a = q*b + r` with `deg r < deg b`.
pub fn div_rem<F: Field>(
    field: &F,
    a: &[F::Element],
    b: &[F::Element],
) -> Result<(Vec<F::Element>, Vec<F::Element>), FieldError> {
    let db = degree::<F>(b).ok_or(FieldError::ZeroInversion)?;
    let lead_inv = field.inv(&b[db])?;
    let mut r = a.to_vec();
    if r.len() <= db {
        return Ok((Vec::new(), r));
    }
    let mut q = vec![field.zero(); r.len() - db];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = field.mul(&r[r.len() - 1], &lead_inv);
        for (j, bj) in b.iter().enumerate() {
            r[k + j] = field.sub(&r[k + j], &field.mul(&c, bj));
        }
        q[k] = c;
        r.pop();
        r = trim(field, r);
    }
    Ok((trim(field, q), r))
}

/// Divides by the leading coefficient. Returns `(lc, monic)`.
pub fn make_monic<F: Field>(
    field: &F,
    a: &[F::Element],
) -> Result<(F::Element, Vec<F::Element>), FieldError> {
    match a.last() {
        None => Ok((field.zero(), Vec::new())),
        Some(lc) => {
            let inv = field.inv(lc)?;
            Ok((lc.clone(), a.iter().map(|c| field.mul(c, &inv)).collect()))
        }
    }
}

/// Monic greatest common divisor.
pub fn gcd<F: Field>(
    field: &F,
    a: &[F::Element],
    b: &[F::Element],
) -> Result<Vec<F::Element>, FieldError> {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        let (_, r) = div_rem(field, &x, &y)?;
        x = y;
        y = r;
    }
    Ok(make_monic(field, &x)?.1)
}

/// Inverse of `a` modulo `m`. Fails with `NonInvertible` when they share a factor.
pub fn inverse_mod<F: Field>(
    field: &F,
    a: &[F::Element],
    m: &[F::Element],
    name: &str,
) -> Result<Vec<F::Element>, FieldError> {
    if a.is_empty() {
        return Err(FieldError::ZeroInversion);
    }
    // invariant: s_i * a ≡ r_i (mod m)
    let (mut r0, mut r1) = (m.to_vec(), div_rem(field, a, m)?.1);
    let (mut s0, mut s1): (Vec<F::Element>, Vec<F::Element>) = (Vec::new(), vec![field.one()]);
    if r1.is_empty() {
        return Err(FieldError::NonInvertible(name.to_string()));
    }
    while !r1.is_empty() {
        let (q, r) = div_rem(field, &r0, &r1)?;
        let s = sub(field, &s0, &mul(field, &q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return Err(FieldError::NonInvertible(name.to_string()));
    }
    let c = field.inv(&r0[0])?;
    Ok(div_rem(field, &scale(field, &s0, &c), m)?.1)
}

pub fn derivative<F: Field>(field: &F, a: &[F::Element]) -> Vec<F::Element> {
    let out = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| field.mul(c, &field.from_i64(i as i64)))
        .collect();
    trim(field, out)
}

/// Horner evaluation at a point of the same field.
pub fn eval<F: Field>(field: &F, a: &[F::Element], x: &F::Element) -> F::Element {
    a.iter()
        .rev()
        .fold(field.zero(), |acc, c| field.add(&field.mul(&acc, x), c))
}

pub fn format<F: Field>(field: &F, a: &[F::Element], var: &str) -> String {
    format_sum(
        field,
        a.iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(i, c)| (c, power(var, i as u32))),
    )
}

pub fn shape<F: Field>(field: &F, a: &[F::Element]) -> Shape {
    let terms: Vec<(&F::Element, bool)> = a
        .iter()
        .enumerate()
        .filter(|(_, c)| !field.is_zero(c))
        .map(|(i, c)| (c, i == 0))
        .collect();
    sum_shape(field, &terms)
}

/// Leading coefficient sign, for printing.
pub fn is_negative<F: Field>(field: &F, a: &[F::Element]) -> bool {
    a.last().is_some_and(|c| field.is_negative(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&n| BigRational::from_integer(n.into())).collect()
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (s-1)(s+2) and (s-1)(s+3)
        let a = q(&[-2, 1, 1]);
        let b = q(&[-3, 2, 1]);
        assert_eq!(gcd(&Rationals, &a, &b).unwrap(), q(&[-1, 1]));
    }

    #[test]
    fn inverse_mod_irreducible() {
        let f = PrimeField::new(5).unwrap();
        let m = vec![2, 0, 1]; // s^2 + 2 is irreducible over F5
        let a = vec![3, 1];
        let inv = inverse_mod(&f, &a, &m, "s").unwrap();
        let prod = div_rem(&f, &mul(&f, &a, &inv), &m).unwrap().1;
        assert_eq!(prod, vec![1]);
    }

    #[test]
    fn inverse_mod_detects_shared_factor() {
        let f = PrimeField::new(5).unwrap();
        let m = vec![4, 0, 1]; // s^2 - 1
        assert!(matches!(
            inverse_mod(&f, &[1, 1], &m, "s"),
            Err(FieldError::NonInvertible(_))
        ));
    }

    #[test]
    fn formats_descending() {
        assert_eq!(format(&Rationals, &q(&[-1, 0, 3]), "s"), "3*s^2 - 1");
        assert_eq!(format(&Rationals, &q(&[0, -1]), "s"), "-s");
    }
}

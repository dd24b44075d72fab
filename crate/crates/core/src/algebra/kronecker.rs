//! Integer polynomial products and exact quotients by Kronecker substitution.
//!
//! A coefficient vector is packed into one big integer by evaluating at
//! `2^b`; the product (or exact quotient) of the packed integers is then
//! unpacked with balanced digits. `b` is always chosen so that no digit can
//! overflow, and quotients are re-multiplied before they are returned.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::Zero;

use super::ring::{long_division, schoolbook_mul};

/// Below this length schoolbook multiplication wins.
const THRESHOLD: usize = 12;

fn max_bits(cs: &[BigInt]) -> u64 {
    cs.iter().map(|c| c.bits()).max().unwrap_or(0)
}

fn log2_ceil(n: usize) -> u64 {
    (usize::BITS - n.saturating_sub(1).leading_zeros()) as u64
}

/// OR the little-endian words of `src` into `dst` starting at bit `offset`.
fn or_at(dst: &mut [u32], src: &[u32], offset: u64) {
    let word = (offset / 32) as usize;
    let shift = (offset % 32) as u32;
    for (i, &w) in src.iter().enumerate() {
        if shift == 0 {
            dst[word + i] |= w;
        } else {
            dst[word + i] |= w << shift;
            dst[word + i + 1] |= w >> (32 - shift);
        }
    }
}

fn pack(cs: &[BigInt], b: u64) -> BigInt {
    assert!(
        max_bits(cs) < b,
        "coefficients wider than the packing digit"
    );
    let words = ((cs.len() as u64 * b) / 32 + 2) as usize;
    let mut pos = vec![0u32; words];
    let mut neg = vec![0u32; words];
    let mut any_neg = false;
    for (i, c) in cs.iter().enumerate() {
        let (sign, mag) = c.to_u32_digits();
        match sign {
            Sign::NoSign => {}
            Sign::Plus => or_at(&mut pos, &mag, i as u64 * b),
            Sign::Minus => {
                any_neg = true;
                or_at(&mut neg, &mag, i as u64 * b);
            }
        }
    }
    let p = BigInt::from_biguint(Sign::Plus, BigUint::new(pos));
    if any_neg {
        p - BigInt::from_biguint(Sign::Plus, BigUint::new(neg))
    } else {
        p
    }
}

/// Bits `[lo, lo + len)` of a little-endian word vector.
fn extract(words: &[u32], lo: u64, len: u64) -> BigUint {
    let first = (lo / 32) as usize;
    if first >= words.len() {
        return BigUint::zero();
    }
    let last = ((lo + len).div_ceil(32) as usize).min(words.len());
    let shift = (lo % 32) as u32;
    let mut out: Vec<u32> = Vec::with_capacity(last - first + 1);
    for i in first..last {
        let lo_part = words[i] >> shift;
        let hi_part = if shift == 0 || i + 1 >= words.len() {
            0
        } else {
            words[i + 1] << (32 - shift)
        };
        out.push(lo_part | hi_part);
    }
    let mut v = BigUint::new(out);
    let extra = v.bits().saturating_sub(len);
    if extra > 0 {
        v &= (BigUint::from(1u8) << len) - 1u8;
    }
    v
}

/// Inverse of [`pack`] for `len` balanced digits of width `b`.
fn unpack(v: &BigInt, b: u64, len: usize) -> Option<Vec<BigInt>> {
    let (sign, mag) = v.to_u32_digits();
    let half = BigUint::from(1u8) << (b - 1);
    let full = BigUint::from(1u8) << b;
    let mut out = Vec::with_capacity(len);
    let mut carry = false;
    for i in 0..len {
        let mut chunk = extract(&mag, i as u64 * b, b);
        if carry {
            chunk += 1u8;
        }
        if chunk >= half {
            out.push(
                BigInt::from_biguint(Sign::Plus, chunk)
                    - BigInt::from_biguint(Sign::Plus, full.clone()),
            );
            carry = true;
        } else {
            out.push(BigInt::from_biguint(Sign::Plus, chunk));
            carry = false;
        }
    }
    // everything above the last digit must be exhausted
    let rest = extract(&mag, len as u64 * b, mag.len() as u64 * 32 + 1);
    let rest_ok = if carry {
        rest == BigUint::from(1u8)
    } else {
        rest.is_zero()
    };
    if !rest_ok {
        return None;
    }
    if sign == Sign::Minus {
        for c in out.iter_mut() {
            *c = -&*c;
        }
    }
    Some(out)
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) < THRESHOLD {
        return schoolbook_mul(a, b);
    }
    let bits = max_bits(a) + max_bits(b) + log2_ceil(a.len().min(b.len())) + 2;
    let prod = pack(a, bits) * pack(b, bits);
    unpack(&prod, bits, a.len() + b.len() - 1)
        .expect("kronecker digit width is sufficient for products")
}

pub(crate) fn exact_div(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    if den.is_empty() {
        return None;
    }
    if num.len() < den.len() || den.len() < THRESHOLD || num.len() - den.len() + 1 < THRESHOLD {
        return long_division(num, den);
    }
    let qlen = num.len() - den.len() + 1;
    // den can have larger coefficients than num; both must fit a digit
    let mut bits = max_bits(num).max(max_bits(den)) + log2_ceil(num.len()) + 3;
    for _ in 0..3 {
        let (q, r) = pack(num, bits).div_rem(&pack(den, bits));
        if !r.is_zero() {
            // the integer quotient of an exact polynomial quotient is exact
            return None;
        }
        if let Some(cand) = unpack(&q, bits, qlen) {
            if mul(&cand, den) == num {
                return Some(cand);
            }
        }
        bits *= 2;
    }
    long_division(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn pack_unpack_signed() {
        let cs = v(&[3, -7, 0, 12345, -1, 1]);
        let packed = pack(&cs, 20);
        assert_eq!(unpack(&packed, 20, cs.len()).unwrap(), cs);
        let neg: Vec<BigInt> = cs.iter().map(|c| -c).collect();
        assert_eq!(unpack(&pack(&neg, 20), 20, cs.len()).unwrap(), neg);
    }

    #[test]
    fn matches_schoolbook() {
        let a: Vec<BigInt> = (0..40)
            .map(|i| BigInt::from((i * 7919 % 201) as i64 - 100))
            .collect();
        let b: Vec<BigInt> = (0..33)
            .map(|i| BigInt::from((i * 104729 % 1999) as i64 - 999) * BigInt::from(1u64 << 40))
            .collect();
        assert_eq!(mul(&a, &b), schoolbook_mul(&a, &b));
        let prod = mul(&a, &b);
        assert_eq!(exact_div(&prod, &b).unwrap(), a);
        assert_eq!(exact_div(&prod, &a).unwrap(), b);
    }

    #[test]
    fn rejects_inexact() {
        let a: Vec<BigInt> = (0..30).map(|i| BigInt::from(i as i64 + 1)).collect();
        let b: Vec<BigInt> = (0..20).map(|i| BigInt::from(2 * i as i64 + 3)).collect();
        let mut prod = mul(&a, &b);
        prod[7] += 1;
        assert!(exact_div(&prod, &b).is_none());
    }

    #[test]
    fn divisor_wider_than_dividend() {
        // (1 + 2^80 t + ...) does not divide a small-coefficient numerator
        let num: Vec<BigInt> = (0..30).map(|i| BigInt::from(i % 3 - 1)).collect();
        let mut den: Vec<BigInt> = (0..14).map(|i| BigInt::from(i + 1)).collect();
        den[1] = BigInt::from(1) << 80;
        assert!(exact_div(&num, &den).is_none());
        let a: Vec<BigInt> = (0..15).map(|i| BigInt::from(i % 2)).collect();
        let prod = mul(&a, &den);
        assert_eq!(exact_div(&prod, &den).unwrap(), a);
    }

    proptest::proptest! {
        #[test]
        fn mul_agrees_with_schoolbook(
            a in proptest::collection::vec(-1_000_000_000_000i64..1_000_000_000_000, 12..40),
            b in proptest::collection::vec(-1_000i64..1_000, 12..40),
        ) {
            let (a, b) = (v(&a), v(&b));
            proptest::prop_assert_eq!(mul(&a, &b), schoolbook_mul(&a, &b));
        }
    }
}

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Commutative ring with exact division where it exists.
///
/// Methods take references so big coefficients are never moved around
/// implicitly. Polynomial products go through [`Ring::poly_mul`], which
/// coefficient types may override with something faster than schoolbook.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_bigint(v: &BigInt) -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    /// `Some(q)` with `q * divisor == self`, or `None` if no such `q` exists.
    fn exact_div(&self, divisor: &Self) -> Option<Self>;

    /// Multiplicative inverse, if `self` is a unit.
    fn unit_inverse(&self) -> Option<Self>;

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add_ref(other);
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        *self = self.sub_ref(other);
    }

    /// Product of two dense coefficient vectors (ascending degree).
    fn poly_mul(a: &[Self], b: &[Self]) -> Vec<Self> {
        schoolbook_mul(a, b)
    }

    /// Exact quotient of dense coefficient vectors, `None` if not exact.
    /// Inputs have nonzero constant and leading coefficients.
    fn poly_exact_div(num: &[Self], den: &[Self]) -> Option<Vec<Self>> {
        long_division(num, den)
    }

    /// Small matrices over rings that are not Euclidean are safer to expand
    /// by cofactors than to eliminate.
    fn prefers_cofactor_det() -> bool {
        false
    }
}

pub(crate) fn schoolbook_mul<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![R::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j].add_assign_ref(&x.mul_ref(y));
        }
    }
    out
}

pub(crate) fn long_division<R: Ring>(num: &[R], den: &[R]) -> Option<Vec<R>> {
    if den.is_empty() {
        return None;
    }
    if num.len() < den.len() {
        return if num.iter().all(Ring::is_zero) {
            Some(Vec::new())
        } else {
            None
        };
    }
    let lead = den.last().unwrap();
    let lead_inv = lead.unit_inverse();
    let mut rem: Vec<R> = num.to_vec();
    let qlen = num.len() - den.len() + 1;
    let mut quot = vec![R::zero(); qlen];
    for k in (0..qlen).rev() {
        let top = &rem[k + den.len() - 1];
        if top.is_zero() {
            continue;
        }
        let c = match &lead_inv {
            Some(inv) => top.mul_ref(inv),
            None => top.exact_div(lead)?,
        };
        for (j, d) in den.iter().enumerate() {
            if !d.is_zero() {
                rem[k + j].sub_assign_ref(&c.mul_ref(d));
            }
        }
        quot[k] = c;
    }
    if rem.iter().all(Ring::is_zero) {
        Some(quot)
    } else {
        None
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn from_bigint(v: &BigInt) -> Self {
        v.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if Zero::is_zero(divisor) {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        Zero::is_zero(&r).then_some(q)
    }
    fn unit_inverse(&self) -> Option<Self> {
        (self.abs() == <BigInt as One>::one()).then(|| self.clone())
    }
    fn poly_mul(a: &[Self], b: &[Self]) -> Vec<Self> {
        super::kronecker::mul(a, b)
    }
    fn poly_exact_div(num: &[Self], den: &[Self]) -> Option<Vec<Self>> {
        super::kronecker::exact_div(num, den)
    }
}

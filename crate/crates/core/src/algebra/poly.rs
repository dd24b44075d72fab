use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use super::ring::Ring;
use crate::error::{Error, Result};

/// Finitely supported map from exponents of `t` to coefficients.
///
/// `coeffs[i]` is the coefficient of `t^(min_deg + i)`. The first and last
/// stored coefficients are nonzero; zero is `min_deg == 0` with no coeffs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<R> {
    min_deg: i64,
    coeffs: Vec<R>,
}

/// Integer Laurent polynomial, the workhorse type.
pub type IntPoly = LaurentPoly<BigInt>;

impl<R: Ring> LaurentPoly<R> {
    pub fn zero() -> Self {
        LaurentPoly {
            min_deg: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: R, deg: i64) -> Self {
        Self::from_coeffs(deg, vec![c])
    }

    /// `t`
    pub fn t() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn from_coeffs(min_deg: i64, coeffs: Vec<R>) -> Self {
        let mut p = LaurentPoly { min_deg, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Ring::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.min_deg = 0;
            return;
        }
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_deg += lead_zeros as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> i64 {
        self.min_deg
    }

    /// Highest exponent; for zero this is `min_degree() - 1`.
    pub fn max_degree(&self) -> i64 {
        self.min_deg + self.coeffs.len() as i64 - 1
    }

    /// Width of the support, `max - min`; zero for monomials.
    pub fn span(&self) -> i64 {
        (self.coeffs.len() as i64 - 1).max(0)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, deg: i64) -> R {
        let i = deg - self.min_deg;
        if i < 0 || i >= self.coeffs.len() as i64 {
            R::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// `(exponent, coefficient)` for every nonzero term.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_deg + i as i64, c))
    }

    pub fn leading_coeff(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn trailing_coeff(&self) -> Option<&R> {
        self.coeffs.first()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, subtract: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if subtract { other.neg() } else { other.clone() };
        }
        let lo = self.min_deg.min(other.min_deg);
        let hi = self.max_degree().max(other.max_degree());
        let mut out = vec![R::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[(self.min_deg - lo) as usize + i] = c.clone();
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            let slot = &mut out[(other.min_deg - lo) as usize + i];
            if subtract {
                slot.sub_assign_ref(c);
            } else {
                slot.add_assign_ref(c);
            }
        }
        Self::from_coeffs(lo, out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(
            self.min_deg + other.min_deg,
            R::poly_mul(&self.coeffs, &other.coeffs),
        )
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            min_deg: self.min_deg,
            coeffs: self.coeffs.iter().map(Ring::neg_ref).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_coeffs(
            self.min_deg,
            self.coeffs.iter().map(|x| x.mul_ref(c)).collect(),
        )
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            min_deg: self.min_deg + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// The substitution `t -> -t`.
    pub fn negate_t(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if (self.min_deg + i as i64).rem_euclid(2) == 1 {
                    c.neg_ref()
                } else {
                    c.clone()
                }
            })
            .collect();
        LaurentPoly {
            min_deg: self.min_deg,
            coeffs,
        }
    }

    /// The substitution `t -> t^k` for `k >= 1`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k >= 1, "substitute_power needs a positive exponent");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); (self.span() * k + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k as usize] = c.clone();
        }
        Self::from_coeffs(self.min_deg * k, coeffs)
    }

    /// The substitution `t -> t^{-1}`.
    pub fn invert_t(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::from_coeffs(-self.max_degree(), coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = LaurentPoly::mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = LaurentPoly::mul(&base, &base);
            }
        }
        acc
    }

    /// Quotient `q` with `q * den == self`, as Laurent polynomials.
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidInput(
                "division by the zero polynomial".into(),
            ));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        match R::poly_exact_div(&self.coeffs, &den.coeffs) {
            Some(q) => Ok(Self::from_coeffs(self.min_deg - den.min_deg, q)),
            None => Err(Error::NonExactDivision {
                remainder: format!("{:?}", self.remainder_hint(den)),
            }),
        }
    }

    /// Remainder of long division where it can be formed; used for errors.
    fn remainder_hint(&self, den: &Self) -> Vec<R> {
        let mut rem = self.coeffs.clone();
        let Some(lead) = den.coeffs.last() else {
            return rem;
        };
        while rem.len() >= den.coeffs.len() {
            let top = rem.last().unwrap().clone();
            if top.is_zero() {
                rem.pop();
                continue;
            }
            let Some(c) = top.exact_div(lead) else { break };
            let off = rem.len() - den.coeffs.len();
            for (j, d) in den.coeffs.iter().enumerate() {
                rem[off + j].sub_assign_ref(&c.mul_ref(d));
            }
            rem.pop();
        }
        rem
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> LaurentPoly<S> {
        LaurentPoly::from_coeffs(self.min_deg, self.coeffs.iter().map(f).collect())
    }

    /// Even part `(p(t) + p(-t)) / 2`, taken termwise.
    pub fn even_part(&self) -> Self {
        self.parity_part(0)
    }

    /// Odd part `(p(t) - p(-t)) / 2`, taken termwise.
    pub fn odd_part(&self) -> Self {
        self.parity_part(1)
    }

    fn parity_part(&self, parity: i64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if (self.min_deg + i as i64).rem_euclid(2) == parity {
                    c.clone()
                } else {
                    R::zero()
                }
            })
            .collect();
        Self::from_coeffs(self.min_deg, coeffs)
    }

    /// Whether every exponent with nonzero coefficient is divisible by `m`.
    pub fn is_polynomial_in_power(&self, m: i64) -> bool {
        self.terms().all(|(d, _)| d.rem_euclid(m) == 0)
    }
}

impl IntPoly {
    pub fn from_i64s(min_deg: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(min_deg, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Canonical representative of the class `{ ±t^k · self }`: lowest
    /// exponent shifted to zero, lowest coefficient made positive.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let p = self.shift(-self.min_deg);
        if p.coeffs[0].is_negative() {
            p.neg()
        } else {
            p
        }
    }

    /// Equality up to multiplication by `±t^k`.
    pub fn unit_equiv(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    /// The pair `{p(t), p(-t)}` fixes a class; pick the normalized member
    /// whose coefficient list is lexicographically smaller.
    pub fn canonical_up_to_negation(&self) -> Self {
        let a = self.normalized();
        let b = self.negate_t().normalized();
        if b.coeffs < a.coeffs {
            b
        } else {
            a
        }
    }

    pub fn eval_i64(&self, t: i64) -> Option<BigInt> {
        if self.min_deg < 0 && t.abs() != 1 {
            return None;
        }
        let tb = BigInt::from(t);
        let mut acc = BigInt::from(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * &tb + c;
        }
        if self.min_deg >= 0 {
            Some(acc * tb.pow(self.min_deg as u32))
        } else {
            // t = ±1
            Some(if t == -1 && self.min_deg.rem_euclid(2) == 1 {
                -acc
            } else {
                acc
            })
        }
    }

    /// Content (gcd of coefficients), nonnegative.
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.coeffs.iter().fold(BigInt::from(0), |g, c| g.gcd(c))
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }
}

impl<R: Ring> Ring for LaurentPoly<R> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn from_i64(v: i64) -> Self {
        LaurentPoly::constant(R::from_i64(v))
    }
    fn from_bigint(v: &BigInt) -> Self {
        LaurentPoly::constant(R::from_bigint(v))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        LaurentPoly::exact_div(self, divisor).ok()
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let inv = self.coeffs[0].unit_inverse()?;
        Some(LaurentPoly::monomial(inv, -self.min_deg))
    }
    fn prefers_cofactor_det() -> bool {
        R::prefers_cofactor_det()
    }
}

macro_rules! forward_ops {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<R: Ring> $tr<&LaurentPoly<R>> for &LaurentPoly<R> {
            type Output = LaurentPoly<R>;
            fn $method(self, rhs: &LaurentPoly<R>) -> LaurentPoly<R> {
                LaurentPoly::$inner(self, rhs)
            }
        }
    };
}

forward_ops!(Add, add, add);
forward_ops!(Sub, sub, sub);
forward_ops!(Mul, mul, mul);

impl<R: Ring> Neg for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn neg(self) -> LaurentPoly<R> {
        LaurentPoly::neg(self)
    }
}

impl<R: Ring + fmt::Display> fmt::Display for LaurentPoly<R> {
    /// `c0 + c1*t + c2*t^2`, explicit signs, zero terms skipped.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.terms() {
            let s = c.to_string();
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
                _ if s.contains(['+', '-']) && !s.starts_with('(') => (false, format!("({s})")),
                _ => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = body == "1";
            match d {
                0 => write!(f, "{body}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{body}*t")?,
                _ if unit => write!(f, "t^{d}")?,
                _ => write!(f, "{body}*t^{d}")?,
            }
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly(t^{}: {:?})", self.min_deg, self.coeffs)
    }
}

/// Shorthand for integer polynomials in tests and tables:
/// `ipoly(&[1, -1, 1])` is `1 - t + t^2`.
pub fn ipoly(coeffs: &[i64]) -> IntPoly {
    IntPoly::from_i64s(0, coeffs)
}

/// Product of integer polynomials given as coefficient lists.
pub fn iproduct(factors: &[&[i64]]) -> IntPoly {
    factors
        .iter()
        .fold(IntPoly::one(), |acc, f| acc.mul(&ipoly(f)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares() {
        let p = ipoly(&[1, 1]).mul(&ipoly(&[1, -1]));
        assert_eq!(p, ipoly(&[1, 0, -1]));
    }

    #[test]
    fn negate_t_on_factor_pair() {
        assert_eq!(
            ipoly(&[1, 1, -1, 1, 1]).negate_t(),
            ipoly(&[1, -1, -1, -1, 1])
        );
        // Laurent exponents keep their parity
        let p = IntPoly::from_i64s(-1, &[2, 3]);
        assert_eq!(p.negate_t(), IntPoly::from_i64s(-1, &[-2, 3]));
    }

    #[test]
    fn add_zero_is_identity() {
        let p = IntPoly::from_i64s(-3, &[4, 0, -2, 7]);
        assert_eq!(p.add(&IntPoly::zero()), p);
        assert_eq!(IntPoly::zero().add(&p), p);
    }

    #[test]
    fn trimming() {
        let p = IntPoly::from_i64s(2, &[0, 0, 5, 0]);
        assert_eq!(p.min_degree(), 4);
        assert_eq!(p.coeffs().len(), 1);
        let z = IntPoly::from_i64s(7, &[0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.min_degree(), 0);
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(
            ipoly(&[1, 0, 0, 0, -1])
                .exact_div(&ipoly(&[1, 0, -1]))
                .unwrap(),
            ipoly(&[1, 0, 1])
        );
        let den = ipoly(&[1, -1]).mul(&ipoly(&[1, 1]));
        assert_eq!(
            ipoly(&[1, 0, 0, 0, 0, 0, -1]).exact_div(&den).unwrap(),
            ipoly(&[1, 0, 1, 0, 1])
        );
        let num = ipoly(&[1, -1, 1]).mul(&ipoly(&[1, 1]));
        assert_eq!(num.exact_div(&ipoly(&[1, 1])).unwrap(), ipoly(&[1, -1, 1]));
    }

    #[test]
    fn inexact_division_reports_remainder() {
        let err = ipoly(&[1, 0, 1]).exact_div(&ipoly(&[1, -1])).unwrap_err();
        assert!(matches!(err, Error::NonExactDivision { .. }));
        assert!(ipoly(&[3, 3]).exact_div(&ipoly(&[2])).is_err());
    }

    #[test]
    fn laurent_division() {
        let num = IntPoly::from_i64s(-2, &[1, 0, -1]);
        let q = num.exact_div(&IntPoly::from_i64s(-1, &[1, 1])).unwrap();
        assert_eq!(q, IntPoly::from_i64s(-1, &[1, -1]));
    }

    #[test]
    fn normalization() {
        let p = IntPoly::from_i64s(-3, &[-2, 1]);
        assert_eq!(p.normalized(), ipoly(&[2, -1]));
        assert!(p.unit_equiv(&IntPoly::from_i64s(5, &[2, -1])));
    }

    #[test]
    fn display_format() {
        assert_eq!(ipoly(&[1, -1, 1]).to_string(), "1 - t + t^2");
        assert_eq!(
            IntPoly::from_i64s(-1, &[-2, 0, 3]).to_string(),
            "-2*t^-1 + 3*t"
        );
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn power_substitution() {
        assert_eq!(ipoly(&[1, 1]).substitute_power(3), ipoly(&[1, 0, 0, 1]));
        assert!(ipoly(&[1, 0, 0, 1]).is_polynomial_in_power(3));
        assert_eq!(
            ipoly(&[1, 2, 3]).invert_t(),
            IntPoly::from_i64s(-2, &[3, 2, 1])
        );
    }
}

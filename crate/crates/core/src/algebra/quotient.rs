//! The rings `Z[z]/(m(z))` for monic integer `m`, holding `ω` and `v`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::IntPoly;
use super::ring::Ring;
use crate::error::{Error, Result};

/// A monic modulus together with the symbol used when printing residues.
#[derive(Debug, PartialEq, Eq)]
pub struct QuotientRing {
    /// `c_0, ..., c_{n-1}, 1`
    modulus: Vec<BigInt>,
    symbol: char,
}

impl QuotientRing {
    pub fn new(modulus: &IntPoly, symbol: char) -> Result<Arc<Self>> {
        if modulus.min_degree() != 0 || modulus.max_degree() < 1 {
            return Err(Error::InvalidInput(format!(
                "modulus {modulus} must be a polynomial of degree >= 1"
            )));
        }
        if !modulus.leading_coeff().is_some_and(One::is_one) {
            return Err(Error::NotMonic(modulus.to_string()));
        }
        Ok(Arc::new(QuotientRing {
            modulus: modulus.coeffs().to_vec(),
            symbol,
        }))
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> IntPoly {
        IntPoly::from_coeffs(0, self.modulus.clone())
    }

    pub fn symbol(&self) -> char {
        self.symbol
    }

    /// The class of `z`.
    pub fn generator(self: &Arc<Self>) -> QuotientElem {
        QuotientElem::from_residue(self, vec![BigInt::from(0), BigInt::from(1)])
    }

    pub fn elem(self: &Arc<Self>, coeffs: &[i64]) -> QuotientElem {
        QuotientElem::from_residue(self, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn reduce(&self, mut c: Vec<BigInt>) -> Vec<BigInt> {
        let n = self.degree();
        while c.len() > n {
            let top = c.pop().unwrap();
            if Zero::is_zero(&top) {
                continue;
            }
            let off = c.len() - n;
            for (j, m) in self.modulus[..n].iter().enumerate() {
                c[off + j] -= &top * m;
            }
        }
        trim(&mut c);
        c
    }
}

fn trim(c: &mut Vec<BigInt>) {
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
}

/// Residue class of a polynomial modulo the ring's modulus.
///
/// Elements built by [`Ring::from_i64`] carry no modulus; they are integer
/// constants and combine with any ring. Mixing two different moduli panics.
#[derive(Clone)]
pub struct QuotientElem {
    ring: Option<Arc<QuotientRing>>,
    /// reduced residue, trailing zeros trimmed
    coeffs: Vec<BigInt>,
}

impl QuotientElem {
    pub fn from_residue(ring: &Arc<QuotientRing>, coeffs: Vec<BigInt>) -> Self {
        QuotientElem {
            ring: Some(ring.clone()),
            coeffs: ring.reduce(coeffs),
        }
    }

    pub fn integer(c: BigInt) -> Self {
        let mut coeffs = vec![c];
        trim(&mut coeffs);
        QuotientElem { ring: None, coeffs }
    }

    pub fn ring(&self) -> Option<&Arc<QuotientRing>> {
        self.ring.as_ref()
    }

    /// Coefficients of the reduced residue in `1, z, z^2, ...`.
    pub fn residue(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn join(&self, other: &Self) -> Option<Arc<QuotientRing>> {
        match (&self.ring, &other.ring) {
            (Some(a), Some(b)) => {
                assert!(
                    Arc::ptr_eq(a, b) || a == b,
                    "quotient ring mismatch: {:?} vs {:?}",
                    a.modulus,
                    b.modulus
                );
                Some(a.clone())
            }
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        }
    }

    fn build(ring: Option<Arc<QuotientRing>>, coeffs: Vec<BigInt>) -> Self {
        match ring {
            Some(r) => {
                let coeffs = r.reduce(coeffs);
                QuotientElem {
                    ring: Some(r),
                    coeffs,
                }
            }
            None => {
                let mut coeffs = coeffs;
                trim(&mut coeffs);
                assert!(coeffs.len() <= 1, "non-constant residue without a modulus");
                QuotientElem { ring: None, coeffs }
            }
        }
    }

    /// Matrix of multiplication by `self` in the basis `1, z, ..., z^{n-1}`.
    pub fn multiplication_matrix(&self) -> Vec<Vec<BigInt>> {
        let ring = self
            .ring
            .as_ref()
            .expect("multiplication matrix needs a modulus");
        let n = ring.degree();
        let mut cols = Vec::with_capacity(n);
        let mut basis = vec![BigInt::from(1)];
        for _ in 0..n {
            let mut prod = super::ring::schoolbook_mul(&self.coeffs, &basis);
            prod = ring.reduce(prod);
            prod.resize(n, BigInt::from(0));
            cols.push(prod);
            basis.insert(0, BigInt::from(0));
        }
        (0..n)
            .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
            .collect()
    }

    /// Solve `x * self = rhs` over `Q`, returning `x` if it is integral.
    fn solve(&self, rhs: &Self) -> Option<Self> {
        let ring = self.join(rhs);
        let Some(ring) = ring else {
            let a = rhs.coeffs.first().cloned().unwrap_or_default();
            let b = self.coeffs.first()?;
            return <BigInt as Ring>::exact_div(&a, b).map(QuotientElem::integer);
        };
        let as_ring = QuotientElem {
            ring: Some(ring.clone()),
            coeffs: self.coeffs.clone(),
        };
        let m = as_ring.multiplication_matrix();
        let n = m.len();
        let mut a: Vec<Vec<BigRational>> = m
            .into_iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r: Vec<BigRational> =
                    row.into_iter().map(BigRational::from_integer).collect();
                r.push(BigRational::from_integer(
                    rhs.coeffs.get(i).cloned().unwrap_or_default(),
                ));
                r
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, piv);
            let p = a[col][col].clone();
            for x in a[col].iter_mut() {
                *x /= &p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in col..=n {
                        let delta = &f * &a[col][c];
                        a[r][c] -= delta;
                    }
                }
            }
        }
        let mut out = Vec::with_capacity(n);
        for row in &a {
            let v = &row[n];
            if !v.is_integer() {
                return None;
            }
            out.push(v.to_integer());
        }
        Some(QuotientElem::build(Some(ring), out))
    }
}

impl PartialEq for QuotientElem {
    fn eq(&self, other: &Self) -> bool {
        if let (Some(a), Some(b)) = (&self.ring, &other.ring) {
            if !(Arc::ptr_eq(a, b) || a == b) {
                return false;
            }
        }
        self.coeffs == other.coeffs
    }
}

impl Ring for QuotientElem {
    fn zero() -> Self {
        QuotientElem {
            ring: None,
            coeffs: Vec::new(),
        }
    }
    fn one() -> Self {
        QuotientElem::integer(BigInt::from(1))
    }
    fn from_i64(v: i64) -> Self {
        QuotientElem::integer(BigInt::from(v))
    }
    fn from_bigint(v: &BigInt) -> Self {
        QuotientElem::integer(v.clone())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        let ring = self.join(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = vec![BigInt::from(0); n];
        for (i, x) in self.coeffs.iter().enumerate() {
            c[i] += x;
        }
        for (i, x) in other.coeffs.iter().enumerate() {
            c[i] += x;
        }
        let mut out = QuotientElem { ring, coeffs: c };
        trim(&mut out.coeffs);
        out
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let ring = self.join(other);
        QuotientElem::build(
            ring,
            super::ring::schoolbook_mul(&self.coeffs, &other.coeffs),
        )
    }
    fn neg_ref(&self) -> Self {
        QuotientElem {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        divisor.solve(self)
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        self.solve(&Self::one())
    }
    fn poly_mul(a: &[Self], b: &[Self]) -> Vec<Self> {
        // accumulate unreduced residues, reduce once per t-coefficient
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let ring = a.iter().chain(b.iter()).find_map(|x| x.ring.clone());
        let width = a.iter().map(|x| x.coeffs.len()).max().unwrap_or(0)
            + b.iter().map(|x| x.coeffs.len()).max().unwrap_or(0);
        let mut acc = vec![vec![BigInt::from(0); width.max(1)]; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.coeffs.is_empty() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.coeffs.is_empty() {
                    continue;
                }
                let slot = &mut acc[i + j];
                for (u, cx) in x.coeffs.iter().enumerate() {
                    for (v, cy) in y.coeffs.iter().enumerate() {
                        slot[u + v] += cx * cy;
                    }
                }
            }
        }
        acc.into_iter()
            .map(|c| QuotientElem::build(ring.clone(), c))
            .collect()
    }
    fn prefers_cofactor_det() -> bool {
        true
    }
}

impl fmt::Debug for QuotientElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuotientElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.ring.as_ref().map_or('z', |r| r.symbol);
        let p = IntPoly::from_coeffs(0, self.coeffs.clone());
        let s = p.to_string().replace('t', &sym.to_string());
        write!(f, "{s}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::ipoly;

    fn theta2() -> Arc<QuotientRing> {
        QuotientRing::new(&ipoly(&[5, 5, 1]), 'w').unwrap()
    }

    #[test]
    fn reduces_modulo_theta() {
        let r = theta2();
        let w = r.generator();
        // w^2 = -5w - 5
        assert_eq!(w.mul_ref(&w), r.elem(&[-5, -5]));
    }

    #[test]
    fn constants_mix_with_residues() {
        let r = theta2();
        let w = r.generator();
        let four = QuotientElem::from_i64(4);
        assert_eq!(w.add_ref(&four), r.elem(&[4, 1]));
        assert_eq!(QuotientElem::from_i64(3), r.elem(&[3]));
    }

    #[test]
    fn four_plus_omega_is_a_unit() {
        let r = theta2();
        let u = r.elem(&[4, 1]);
        let inv = u.unit_inverse().expect("4 + w is a unit");
        assert!(u.mul_ref(&inv).is_one());
        assert!(r.elem(&[2]).unit_inverse().is_none());
    }

    #[test]
    fn exact_division_in_quotient() {
        let r = theta2();
        let a = r.elem(&[1, 2]);
        let b = r.elem(&[3, -1]);
        let prod = a.mul_ref(&b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert!(r.elem(&[1]).exact_div(&r.elem(&[2])).is_none());
    }

    #[test]
    fn rejects_non_monic_modulus() {
        assert!(matches!(
            QuotientRing::new(&ipoly(&[1, 2]), 'w'),
            Err(Error::NotMonic(_))
        ));
    }
}

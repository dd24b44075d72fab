//! Free-group words, integral group-ring sums and Fox derivatives.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{IntPoly, LaurentPoly, Ring, RingMatrix};
use crate::error::{Error, Result};
use crate::reps::MatrixRep;

/// A generator letter with exponent `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: char,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: char, inverse: bool) -> Self {
        Letter { gen, inverse }
    }

    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

/// A freely reduced word.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn generator(gen: char) -> Self {
        FreeWord {
            letters: vec![Letter::new(gen, false)],
        }
    }

    /// Reduces the given letters.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord { letters: out }
    }

    /// Lowercase letters are generators, uppercase their inverses:
    /// `xyXY` is `x y x^-1 y^-1`. Whitespace is ignored.
    pub fn parse(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for c in s.chars().filter(|c| !c.is_whitespace()) {
            if c == '1' && s.trim() == "1" {
                break;
            }
            if !c.is_ascii_alphabetic() {
                return Err(Error::Parse(format!(
                    "unexpected character {c:?} in word {s:?}"
                )));
            }
            letters.push(Letter::new(c.to_ascii_lowercase(), c.is_ascii_uppercase()));
        }
        Ok(Self::from_letters(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_letters(self.letters.iter().chain(&other.letters).copied())
    }

    pub fn inverse(&self) -> Self {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        (0..e.unsigned_abs()).fold(Self::identity(), |acc, _| acc.mul(&base))
    }

    /// Exponent sum, the image under `g -> t` for every generator `g`.
    pub fn abelianize(&self) -> i64 {
        self.letters.iter().map(|l| l.exponent()).sum()
    }

    pub fn generators(&self) -> Vec<char> {
        let mut g: Vec<char> = self.letters.iter().map(|l| l.gen).collect();
        g.sort_unstable();
        g.dedup();
        g
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for l in &self.letters {
            let c = if l.inverse {
                l.gen.to_ascii_uppercase()
            } else {
                l.gen
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord({self})")
    }
}

/// A finite integer combination of reduced words.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct GroupRingSum {
    terms: BTreeMap<FreeWord, BigInt>,
}

impl GroupRingSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(FreeWord::identity())
    }

    pub fn word(w: FreeWord) -> Self {
        Self::term(w, BigInt::from(1))
    }

    pub fn term(w: FreeWord, c: BigInt) -> Self {
        let mut s = Self::zero();
        s.add_term(w, c);
        s
    }

    pub fn add_term(&mut self, w: FreeWord, c: BigInt) {
        if Zero::is_zero(&c) {
            return;
        }
        let entry = self.terms.entry(w).or_insert_with(|| BigInt::from(0));
        *entry += c;
        if Zero::is_zero(entry) {
            self.terms.retain(|_, v| !Zero::is_zero(v));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &BigInt)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        GroupRingSum {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.mul(v), a * b);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero();
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a * c);
        }
        out
    }
}

impl fmt::Display for GroupRingSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c < &BigInt::from(0);
            let mag = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag == BigInt::from(1) {
                write!(f, "{w}")?;
            } else {
                write!(f, "{mag}*{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupRingSum({self})")
    }
}

/// `∂w/∂g` by the Fox rules, read left to right: each occurrence of `g`
/// contributes the prefix before it, each `g^-1` minus the prefix through it.
pub fn fox_derivative(w: &FreeWord, g: char) -> GroupRingSum {
    let mut out = GroupRingSum::zero();
    let mut prefix: Vec<Letter> = Vec::new();
    for &l in w.letters() {
        if l.gen == g && !l.inverse {
            out.add_term(
                FreeWord::from_letters(prefix.iter().copied()),
                BigInt::from(1),
            );
        }
        prefix.push(l);
        if l.gen == g && l.inverse {
            out.add_term(
                FreeWord::from_letters(prefix.iter().copied()),
                BigInt::from(-1),
            );
        }
    }
    out
}

/// Image under the abelianization `g -> t` for every generator.
pub fn psi_evaluate(s: &GroupRingSum) -> IntPoly {
    let mut acc = IntPoly::zero();
    for (w, c) in s.terms() {
        acc = acc.add(&IntPoly::monomial(c.clone(), w.abelianize()));
    }
    acc
}

/// `Σ c · ρ(w) · t^{deg w}` as a matrix of Laurent polynomials.
pub fn rep_evaluate<R: Ring>(
    s: &GroupRingSum,
    rep: &MatrixRep<R>,
) -> Result<RingMatrix<LaurentPoly<R>>> {
    let mut by_degree: BTreeMap<i64, RingMatrix<R>> = BTreeMap::new();
    for (w, c) in s.terms() {
        let img = rep.image(w)?;
        let deg = rep.degree(w)?;
        let scaled = img.scale(&R::from_bigint(c));
        by_degree
            .entry(deg)
            .and_modify(|m| *m = m.add(&scaled))
            .or_insert(scaled);
    }
    Ok(assemble(rep.dim(), &by_degree))
}

/// Matrix polynomial from its coefficient matrices.
pub fn assemble<R: Ring>(
    dim: usize,
    by_degree: &BTreeMap<i64, RingMatrix<R>>,
) -> RingMatrix<LaurentPoly<R>> {
    let Some((&lo, _)) = by_degree.iter().next() else {
        return RingMatrix::zeros(dim, dim);
    };
    let hi = *by_degree.keys().next_back().unwrap();
    let width = (hi - lo + 1) as usize;
    RingMatrix::from_fn(dim, dim, |i, j| {
        let mut cs = vec![R::zero(); width];
        for (&d, m) in by_degree {
            cs[(d - lo) as usize] = m.get(i, j).clone();
        }
        LaurentPoly::from_coeffs(lo, cs)
    })
}

/// Checks `Σ_g (∂w/∂g)(g - 1) = w - 1` in the integral group ring.
pub fn fundamental_identity_holds(w: &FreeWord, generators: &[char]) -> bool {
    let mut lhs = GroupRingSum::zero();
    for &g in generators {
        let gm1 = GroupRingSum::word(FreeWord::generator(g)).sub(&GroupRingSum::one());
        lhs = lhs.add(&fox_derivative(w, g).mul(&gm1));
    }
    lhs == GroupRingSum::word(w.clone()).sub(&GroupRingSum::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ipoly;

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(s).unwrap()
    }

    #[test]
    fn parsing_reduces() {
        assert_eq!(w("xyYx").to_string(), "xx");
        assert!(w("xX").is_identity());
        assert_eq!(w("xyXY").inverse(), w("yxYX"));
        assert!(FreeWord::parse("x2").is_err());
    }

    #[test]
    fn trefoil_derivative() {
        let r = w("xyxYXY");
        let d = fox_derivative(&r, 'x');
        let expect = GroupRingSum::one()
            .add(&GroupRingSum::word(w("xy")))
            .sub(&GroupRingSum::word(w("xyxYX")));
        assert_eq!(d, expect);
        assert_eq!(psi_evaluate(&d), ipoly(&[1, -1, 1]));
    }

    #[test]
    fn derivative_axioms() {
        assert_eq!(fox_derivative(&w("x"), 'x'), GroupRingSum::one());
        assert_eq!(
            fox_derivative(&w("X"), 'x'),
            GroupRingSum::term(w("X"), BigInt::from(-1))
        );
        assert!(fox_derivative(&w("yY"), 'x').is_zero());
    }

    #[test]
    fn abelianization() {
        assert_eq!(w("xyX").abelianize(), 1);
        assert_eq!(w("xy").pow(5).abelianize(), 10);
        assert_eq!(FreeWord::identity().abelianize(), 0);
    }

    #[test]
    fn psi_cancellation() {
        let s = GroupRingSum::term(w("x"), BigInt::from(3))
            .sub(&GroupRingSum::term(w("y"), BigInt::from(3)));
        assert!(psi_evaluate(&s).is_zero());
        assert!(psi_evaluate(&GroupRingSum::zero()).is_zero());
    }

    #[test]
    fn fundamental_identity_on_trefoil() {
        assert!(fundamental_identity_holds(&w("xyxYXY"), &['x', 'y']));
        assert!(fundamental_identity_holds(&w("XzyZYx"), &['x', 'y', 'z']));
    }
}

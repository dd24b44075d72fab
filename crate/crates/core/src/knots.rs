//! 2-bridge fractions, continued fractions, knot-group presentations and
//! Alexander polynomials.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::algebra::{IntPoly, RingMatrix};
use crate::error::{Error, Result};
use crate::fox::{fox_derivative, psi_evaluate, FreeWord, Letter};

/// `β/α` with `α` odd, `0 < β < α`, `gcd(α, β) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoBridgeFraction {
    alpha: u64,
    beta: u64,
}

impl TwoBridgeFraction {
    pub fn new(beta: u64, alpha: u64) -> Result<Self> {
        if alpha % 2 == 0 {
            return Err(Error::InvalidInput(format!(
                "{beta}/{alpha}: even denominator gives a link, not a knot"
            )));
        }
        if beta == 0 || beta >= alpha {
            return Err(Error::InvalidInput(format!(
                "{beta}/{alpha}: need 0 < beta < alpha"
            )));
        }
        if beta.gcd(&alpha) != 1 {
            return Err(Error::InvalidInput(format!(
                "{beta}/{alpha}: not in lowest terms"
            )));
        }
        Ok(TwoBridgeFraction { alpha, beta })
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    pub fn beta(&self) -> u64 {
        self.beta
    }

    /// Fractions naming the same knot or its mirror image:
    /// `β`, `β^-1`, `α - β`, `α - β^-1` (mod `α`).
    pub fn equivalents(&self) -> Vec<TwoBridgeFraction> {
        let a = self.alpha as i64;
        let inv = (self.beta as i64).extended_gcd(&a).x.mod_floor(&a) as u64;
        let mut out = Vec::new();
        for b in [self.beta, inv, self.alpha - self.beta, self.alpha - inv] {
            let f = TwoBridgeFraction {
                alpha: self.alpha,
                beta: b,
            };
            if !out.contains(&f) {
                out.push(f);
            }
        }
        out
    }
}

impl fmt::Display for TwoBridgeFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.beta, self.alpha)
    }
}

impl FromStr for TwoBridgeFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (b, a) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("expected beta/alpha, got {s:?}")))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<u64>()
                .map_err(|e| Error::Parse(format!("{x:?}: {e}")))
        };
        TwoBridgeFraction::new(parse(b)?, parse(a)?)
    }
}

/// A finite presentation with named generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<char>,
    relators: Vec<FreeWord>,
}

impl Presentation {
    pub fn new(generators: Vec<char>, relators: Vec<FreeWord>) -> Result<Self> {
        if generators.is_empty() || relators.len() + 1 != generators.len() {
            return Err(Error::InvalidInput(format!(
                "deficiency-one presentation needed: {} generators, {} relators",
                generators.len(),
                relators.len()
            )));
        }
        for r in &relators {
            if let Some(g) = r.generators().into_iter().find(|g| !generators.contains(g)) {
                return Err(Error::InvalidInput(format!(
                    "relator {r} uses unknown generator {g}"
                )));
            }
            if r.abelianize() != 0 {
                return Err(Error::InvalidInput(format!(
                    "relator {r} is not a Wirtinger relator"
                )));
            }
        }
        Ok(Presentation {
            generators,
            relators,
        })
    }

    pub fn generators(&self) -> &[char] {
        &self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    /// Named presets. Only `8_5` is built in.
    pub fn preset(name: &str) -> Result<Self> {
        match name {
            "8_5" | "8.5" => {
                let r1 = FreeWord::parse("XYzyxYXY x yxyXYZyx Y")?;
                let r2 = FreeWord::parse("yXYZX y xzyxY Z")?;
                Presentation::new(vec!['x', 'y', 'z'], vec![r1, r2])
            }
            _ => Err(Error::InvalidInput(format!("unknown preset knot {name:?}"))),
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(char::to_string).collect();
        let rels: Vec<String> = self.relators.iter().map(FreeWord::to_string).collect();
        write!(f, "<{} | {}>", gens.join(", "), rels.join(", "))
    }
}

/// `ε_i = (-1)^{⌊iβ/α⌋}` for `i = 1..α-1`, with `β` replaced by the odd
/// representative `β - α` when `β` is even.
pub fn epsilon_sequence(f: &TwoBridgeFraction) -> Vec<i8> {
    let shift = f.beta % 2 == 0;
    // ⌊i(β - α)/α⌋ = ⌊iβ/α⌋ - i
    (1..f.alpha)
        .map(|i| {
            if (i * f.beta / f.alpha + if shift { i } else { 0 }) % 2 == 0 {
                1
            } else {
                -1
            }
        })
        .collect()
}

/// `W = x^{ε1} y^{ε2} x^{ε3} ...`, so that `R = W x W^-1 y^-1`.
pub fn schubert_word(f: &TwoBridgeFraction) -> FreeWord {
    let eps = epsilon_sequence(f);
    FreeWord::from_letters(
        eps.iter()
            .enumerate()
            .map(|(i, &e)| Letter::new(if i % 2 == 0 { 'x' } else { 'y' }, e < 0)),
    )
}

/// `⟨x, y | W x W^-1 y^-1⟩`.
pub fn presentation(f: &TwoBridgeFraction) -> Presentation {
    let w = schubert_word(f);
    let r = w
        .mul(&FreeWord::generator('x'))
        .mul(&w.inverse())
        .mul(&FreeWord::generator('y').inverse());
    Presentation::new(vec!['x', 'y'], vec![r]).expect("Schubert relator is a Wirtinger relator")
}

/// Nonzero integer entries read as `1/(a1 + 1/(a2 + ... + 1/ak))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuedFraction(pub Vec<i64>);

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Exact value of a continued fraction.
pub fn cf_eval(c: &ContinuedFraction) -> Result<BigRational> {
    if c.0.is_empty() || c.0.contains(&0) {
        return Err(Error::InvalidInput(format!(
            "continued fraction {c} needs nonzero entries"
        )));
    }
    let mut tail = BigRational::zero();
    for &a in c.0.iter().rev() {
        let denom = BigRational::from_integer(BigInt::from(a)) + tail;
        if denom.is_zero() {
            return Err(Error::InvalidInput(format!(
                "continued fraction {c} divides by zero"
            )));
        }
        tail = denom.recip();
    }
    Ok(tail)
}

/// Search limits for [`hp_expansion`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HpBounds {
    pub max_k: i64,
    pub max_m: i64,
    pub max_len: usize,
}

impl Default for HpBounds {
    fn default() -> Self {
        HpBounds {
            max_k: 4,
            max_m: 8,
            max_len: 7,
        }
    }
}

/// A continued fraction `[p k1, 2 m1, p k2, ..., 2 m_l, p k_{l+1}]` equal to
/// `f`, or `None` if none exists within the bounds.
///
/// Every entry has absolute value at least 2, so every tail lies in
/// `[-1, 1]`; this pins each entry to at most three candidates.
pub fn hp_expansion(f: &TwoBridgeFraction, p: u64, bounds: &HpBounds) -> Option<ContinuedFraction> {
    let r = BigRational::new(BigInt::from(f.beta), BigInt::from(f.alpha));
    let mut entries = Vec::new();
    search(&r, p as i64, bounds, &mut entries).then_some(ContinuedFraction(entries))
}

/// [`hp_expansion`] over all fractions naming the same knot up to mirror image.
pub fn hp_expansion_any(
    f: &TwoBridgeFraction,
    p: u64,
    bounds: &HpBounds,
) -> Option<(TwoBridgeFraction, ContinuedFraction)> {
    f.equivalents()
        .into_iter()
        .find_map(|g| hp_expansion(&g, p, bounds).map(|c| (g, c)))
}

fn search(r: &BigRational, p: i64, bounds: &HpBounds, entries: &mut Vec<i64>) -> bool {
    let pos = entries.len();
    if pos >= bounds.max_len {
        return false;
    }
    let multiple_of_p = pos % 2 == 0;
    let inv = r.recip();
    let center = inv.floor().to_integer();
    let center: i64 = match i64::try_from(&center) {
        Ok(c) => c,
        Err(_) => return false,
    };
    for a in center - 1..=center + 2 {
        let ok = if multiple_of_p {
            a != 0 && a % p == 0 && (a / p).abs() <= bounds.max_k
        } else {
            a != 0 && a % 2 == 0 && (a / 2).abs() <= bounds.max_m
        };
        if !ok {
            continue;
        }
        let rest = &inv - BigRational::from_integer(BigInt::from(a));
        entries.push(a);
        if rest.is_zero() {
            if multiple_of_p {
                return true;
            }
        } else if rest.abs() <= BigRational::from_integer(BigInt::from(1))
            && search(&rest, p, bounds, entries)
        {
            return true;
        }
        entries.pop();
    }
    false
}

/// Alexander polynomial in canonical normalization. For `k` generators this
/// is the determinant of the abelianized Fox matrix with the first column
/// removed.
pub fn alexander(pres: &Presentation) -> Result<IntPoly> {
    let gens = pres.generators();
    if gens.len() == 2 {
        return Ok(psi_evaluate(&fox_derivative(&pres.relators()[0], gens[0])).normalized());
    }
    let m = RingMatrix::from_fn(pres.relators().len(), gens.len() - 1, |i, j| {
        psi_evaluate(&fox_derivative(&pres.relators()[i], gens[j + 1]))
    });
    let d = m.bareiss_det()?;
    if d.is_zero() {
        return Err(Error::InvalidInput(
            "degenerate presentation: Alexander minor vanishes".into(),
        ));
    }
    Ok(d.normalized())
}

/// The smallest odd prime factors of `n` (trial division).
pub fn odd_prime_factors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = n;
    while n % 2 == 0 && n > 0 {
        n /= 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 2;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_odd_prime(p: u64) -> bool {
    p >= 3 && odd_prime_factors(p) == vec![p]
}

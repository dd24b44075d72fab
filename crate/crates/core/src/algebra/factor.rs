//! Factorization of integer Laurent polynomials over the integers.
//!
//! Squarefree decomposition (Yun), factorization modulo a small prime
//! (distinct-degree, then Cantor-Zassenhaus), Hensel lifting along a
//! factor tree, and recombination by subset trial division.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::kronecker;
use super::poly::IntPoly;

/// `input = unit_sign * content * t^shift * prod factor^mult`.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub content: BigInt,
    pub shift: i64,
    /// Irreducible primitive factors in canonical normalization, with
    /// multiplicities, sorted by degree then coefficients.
    pub factors: Vec<(IntPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> IntPoly {
        let mut acc = IntPoly::monomial(self.content.clone(), self.shift);
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m as u32));
        }
        acc
    }

    /// Factors listed with repetition.
    pub fn flat(&self) -> Vec<IntPoly> {
        self.factors
            .iter()
            .flat_map(|(f, m)| std::iter::repeat_n(f.clone(), *m))
            .collect()
    }
}

type Dense = Vec<BigInt>;

fn trim(mut v: Dense) -> Dense {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
fn primitive(v: &[BigInt]) -> Dense {
    let c = content(v);
    if c.is_zero() {
        return Vec::new();
    }
    let sign = if v.last().unwrap().is_negative() {
        -c
    } else {
        c
    };
    v.iter().map(|x| x / &sign).collect()
}

fn derivative(v: &[BigInt]) -> Dense {
    trim(
        v.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect(),
    )
}

fn sub(a: &[BigInt], b: &[BigInt]) -> Dense {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
            .collect(),
    )
}

fn exact(num: &[BigInt], den: &[BigInt]) -> Dense {
    kronecker::exact_div(num, den).expect("division by a gcd is exact")
}

/// Pseudo-remainder of `a` by `b`.
fn prem(a: &[BigInt], b: &[BigInt]) -> Dense {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    while r.len() > db && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &lr * c;
        }
        r = trim(r);
    }
    r
}

/// Primitive gcd over Z[t], positive leading coefficient.
fn gcd(a: &[BigInt], b: &[BigInt]) -> Dense {
    let mut x = primitive(a);
    let mut y = primitive(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = primitive(&prem(&x, &y));
        x = y;
        y = r;
    }
    x
}

/// Yun's algorithm on a primitive polynomial with nonzero constant term.
fn squarefree(f: &[BigInt]) -> Vec<(Dense, usize)> {
    let mut out = Vec::new();
    let df = derivative(f);
    let a0 = gcd(f, &df);
    let mut b = exact(f, &a0);
    let mut d = sub(&exact(&df, &a0), &derivative(&b));
    let mut i = 1;
    while b.len() > 1 {
        let a = gcd(&b, &d);
        if a.len() > 1 {
            out.push((a.clone(), i));
        }
        let c = exact(&d, &a);
        b = exact(&b, &a);
        d = sub(&c, &derivative(&b));
        i += 1;
    }
    out
}

// ---- arithmetic in F_p[t] ----

type Fp = Vec<u64>;

fn fp_trim(mut v: Fp) -> Fp {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn fp_from(v: &[BigInt], p: u64) -> Fp {
    let pb = BigInt::from(p);
    fp_trim(
        v.iter()
            .map(|c| c.mod_floor(&pb).to_u64().unwrap())
            .collect(),
    )
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let e = BigInt::from(a).extended_gcd(&BigInt::from(p));
    e.x.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(out)
}

fn fp_sub(a: &[u64], b: &[u64], p: u64) -> Fp {
    let n = a.len().max(b.len());
    fp_trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

fn fp_divrem(a: &[u64], b: &[u64], p: u64) -> (Fp, Fp) {
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let inv = inv_mod(*b.last().unwrap(), p);
    let mut q = vec![0u64; r.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let c = r[k + b.len() - 1] * inv % p;
        q[k] = c;
        if c == 0 {
            continue;
        }
        for (j, &d) in b.iter().enumerate() {
            r[k + j] = (r[k + j] + p - c * d % p) % p;
        }
    }
    (fp_trim(q), fp_trim(r))
}

fn fp_rem(a: &[u64], b: &[u64], p: u64) -> Fp {
    fp_divrem(a, b, p).1
}

fn fp_monic(a: &[u64], p: u64) -> Fp {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let inv = inv_mod(l, p);
            a.iter().map(|&c| c * inv % p).collect()
        }
    }
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Fp {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let r = fp_rem(&x, &y, p);
        x = y;
        y = r;
    }
    fp_monic(&x, p)
}

/// `(s, t)` with `s a + t b = 1` for coprime `a`, `b`.
fn fp_bezout(a: &[u64], b: &[u64], p: u64) -> (Fp, Fp) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let s2 = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t2 = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    assert_eq!(r0.len(), 1, "bezout inputs must be coprime");
    let inv = inv_mod(r0[0], p);
    (
        s0.iter().map(|c| c * inv % p).collect(),
        t0.iter().map(|c| c * inv % p).collect(),
    )
}

fn fp_powmod(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> Fp {
    let mut result = vec![1u64];
    let b = fp_rem(base, m, p);
    for i in (0..e.bits()).rev() {
        result = fp_rem(&fp_mul(&result, &result, p), m, p);
        if e.bit(i) {
            result = fp_rem(&fp_mul(&result, &b, p), m, p);
        }
    }
    result
}

fn fp_derivative(a: &[u64], p: u64) -> Fp {
    fp_trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * (i as u64 % p) % p)
            .collect(),
    )
}

/// Distinct-degree factorization of a monic squarefree polynomial.
fn fp_ddf(f: &[u64], p: u64) -> Vec<(Fp, usize)> {
    let mut out = Vec::new();
    let mut f = f.to_vec();
    let x = vec![0u64, 1];
    let mut h = x.clone();
    let mut d = 1;
    while f.len() > 2 * d {
        h = fp_powmod(&h, &BigUint::from(p), &f, p);
        let g = fp_gcd(&f, &fp_sub(&h, &x, p), p);
        if g.len() > 1 {
            f = fp_divrem(&f, &g, p).0;
            h = fp_rem(&h, &f, p);
            out.push((g, d));
        }
        d += 1;
    }
    if f.len() > 1 {
        let deg = f.len() - 1;
        out.push((f, deg));
    }
    out
}

/// Equal-degree splitting (Cantor-Zassenhaus, odd p).
fn fp_edf(f: &[u64], d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<Fp> {
    let n = f.len() - 1;
    if n == d {
        return vec![f.to_vec()];
    }
    let e = (BigUint::from(p).pow(d as u32) - 1u8) / 2u8;
    loop {
        let a: Fp = fp_trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = fp_sub(&fp_powmod(&a, &e, f, p), &[1], p);
        let g = fp_gcd(f, &b, p);
        if g.len() > 1 && g.len() < f.len() {
            let rest = fp_monic(&fp_divrem(f, &g, p).0, p);
            let mut out = fp_edf(&g, d, p, rng);
            out.extend(fp_edf(&rest, d, p, rng));
            return out;
        }
    }
}

fn fp_factor(f: &[u64], p: u64, rng: &mut ChaCha8Rng) -> Vec<Fp> {
    let mut out = Vec::new();
    for (g, d) in fp_ddf(f, p) {
        out.extend(fp_edf(&g, d, p, rng));
    }
    out
}

// ---- Hensel lifting ----

fn sym_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn to_big(v: &[u64]) -> Dense {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

fn mod_poly(v: &[BigInt], m: &BigInt) -> Dense {
    trim(v.iter().map(|c| c.mod_floor(m)).collect())
}

fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Dense {
    mod_poly(&kronecker::mul(a, b), m)
}

/// Lift monic `g h ≡ target (mod p)` to `mod p^k`, all monic.
fn hensel_pair(target: &[BigInt], g: &[u64], h: &[u64], p: u64, k: u32) -> (Dense, Dense) {
    let pb = BigInt::from(p);
    let (_, t) = fp_bezout(g, h, p);
    let mut gg = to_big(g);
    let mut hh = to_big(h);
    let mut pj = pb.clone();
    for _ in 1..k {
        let next = &pj * &pb;
        let diff = sub(&mod_poly(target, &next), &mul_mod(&gg, &hh, &next));
        let e: Dense = diff.iter().map(|c| c.mod_floor(&next) / &pj).collect();
        let e = fp_from(&e, p);
        // sigma g + tau h = e with deg tau < deg g
        let tau = fp_rem(&fp_mul(&e, &t, p), g, p);
        let sigma = fp_divrem(&fp_sub(&e, &fp_mul(&tau, h, p), p), g, p).0;
        let add = |base: &Dense, delta: &[u64]| -> Dense {
            let d: Dense = delta.iter().map(|&c| BigInt::from(c) * &pj).collect();
            let n = base.len().max(d.len());
            mod_poly(
                &(0..n)
                    .map(|i| {
                        base.get(i).cloned().unwrap_or_default()
                            + d.get(i).cloned().unwrap_or_default()
                    })
                    .collect::<Dense>(),
                &next,
            )
        };
        gg = add(&gg, &tau);
        hh = add(&hh, &sigma);
        pj = next;
    }
    (gg, hh)
}

fn hensel_tree(target: &[BigInt], factors: &[Fp], p: u64, k: u32) -> Vec<Dense> {
    if factors.len() == 1 {
        return vec![target.to_vec()];
    }
    let mid = factors.len() / 2;
    let g = factors[..mid]
        .iter()
        .fold(vec![1u64], |acc, f| fp_mul(&acc, f, p));
    let h = factors[mid..]
        .iter()
        .fold(vec![1u64], |acc, f| fp_mul(&acc, f, p));
    let (gg, hh) = hensel_pair(target, &g, &h, p, k);
    let mut out = hensel_tree(&gg, &factors[..mid], p, k);
    out.extend(hensel_tree(&hh, &factors[mid..], p, k));
    out
}

const PRIMES: [u64; 24] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Factor a primitive squarefree polynomial with positive leading
/// coefficient and nonzero constant term.
fn factor_squarefree(f: &[BigInt], rng: &mut ChaCha8Rng) -> Vec<Dense> {
    let deg = f.len() - 1;
    if deg <= 1 {
        return vec![f.to_vec()];
    }
    let lc = f.last().unwrap().clone();
    let mut best: Option<(u64, Vec<Fp>)> = None;
    let mut tried = 0;
    for &p in PRIMES.iter() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = fp_monic(&fp_from(f, p), p);
        if fp_gcd(&fp, &fp_derivative(&fp, p), p).len() != 1 {
            continue;
        }
        let fs = fp_factor(&fp, p, rng);
        if fs.len() == 1 {
            return vec![f.to_vec()];
        }
        if best.as_ref().is_none_or(|(_, b)| fs.len() < b.len()) {
            best = Some((p, fs));
        }
        tried += 1;
        if tried == 5 {
            break;
        }
    }
    let (p, mut modular) = best.expect("some small prime keeps a squarefree polynomial squarefree");
    modular.sort();

    // coefficient bound for any factor times lc
    let norm_bound: BigInt = f.iter().map(|c| c.abs()).max().unwrap() * BigInt::from(deg + 1);
    let bound = (BigInt::one() << deg) * norm_bound * lc.abs() * 2;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= bound {
        pk *= &pb;
        k += 1;
    }
    let lc_inv = lc.modpow(&(&pk / &pb * (&pb - 1) - 1), &pk);
    let monic_target = mod_poly(&f.iter().map(|c| c * &lc_inv).collect::<Dense>(), &pk);
    let lifted = hensel_tree(&monic_target, &modular, p, k);

    recombine(f, lifted, &pk)
}

fn recombine(f: &[BigInt], mut lifted: Vec<Dense>, pk: &BigInt) -> Vec<Dense> {
    let mut out = Vec::new();
    let mut f = f.to_vec();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        let lc = f.last().unwrap().clone();
        let n = lifted.len();
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            let mut cand = vec![lc.clone()];
            for &i in &subset {
                cand = mul_mod(&cand, &lifted[i], pk);
            }
            let cand: Dense = trim(cand.iter().map(|c| sym_mod(c, pk)).collect());
            let cand = primitive(&cand);
            let const_ok = !cand[0].is_zero() && (&f[0] % &cand[0]).is_zero();
            if const_ok {
                if let Some(q) = kronecker::exact_div(&f, &cand) {
                    out.push(cand);
                    f = q;
                    let keep: Vec<Dense> = lifted
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| !subset.contains(i))
                        .map(|(_, g)| g.clone())
                        .collect();
                    lifted = keep;
                    continue 'outer;
                }
            }
            // next subset in lexicographic order
            let mut i = size;
            loop {
                if i == 0 {
                    size += 1;
                    continue 'outer;
                }
                i -= 1;
                if subset[i] < n - size + i {
                    subset[i] += 1;
                    for j in i + 1..size {
                        subset[j] = subset[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
    if f.len() > 1 {
        out.push(primitive(&f));
    }
    out
}

/// Complete factorization over the integers, deterministic for a given
/// input.
pub fn int_poly_factor(poly: &IntPoly) -> Factorization {
    assert!(!poly.is_zero(), "cannot factor the zero polynomial");
    let shift = poly.min_degree();
    let dense: Dense = poly.coeffs().to_vec();
    let c = content(&dense);
    let sign = if dense.last().unwrap().is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let prim = primitive(&dense);
    let mut rng = ChaCha8Rng::seed_from_u64(0x7a1e);
    let mut factors: Vec<(IntPoly, usize)> = Vec::new();
    if prim.len() > 1 {
        for (part, mult) in squarefree(&prim) {
            for g in factor_squarefree(&part, &mut rng) {
                factors.push((IntPoly::from_coeffs(0, g), mult));
            }
        }
    }
    // canonical normalization of each factor, fixing the content sign
    let mut unit = sign * c;
    for (g, m) in factors.iter_mut() {
        let norm = g.normalized();
        if norm != *g && *m % 2 == 1 {
            unit = -unit;
        }
        *g = norm;
    }
    factors.sort_by(|a, b| (a.0.max_degree(), a.0.coeffs()).cmp(&(b.0.max_degree(), b.0.coeffs())));
    // merge equal factors coming from different squarefree layers (cannot
    // happen for true Yun output, kept for robustness)
    let mut merged: Vec<(IntPoly, usize)> = Vec::new();
    for (g, m) in factors {
        match merged.last_mut() {
            Some((h, k)) if *h == g => *k += m,
            _ => merged.push((g, m)),
        }
    }
    let out = Factorization {
        content: unit,
        shift,
        factors: merged,
    };
    debug_assert_eq!(out.expand(), *poly);
    out
}

/// `true` iff the polynomial has no nontrivial factorization over Z (units
/// and monomials aside). Constants count as irreducible only if they are units.
pub fn is_irreducible(poly: &IntPoly) -> bool {
    let f = int_poly_factor(poly);
    f.content.abs().is_one() && f.factors.len() == 1 && f.factors[0].1 == 1
}

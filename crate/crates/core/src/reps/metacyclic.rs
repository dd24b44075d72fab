//! Binary dihedral, `N(q, p)` and `G(m, p | k)` representations, each given
//! as a base pair `(s, a)` with knot generators sent to `s a^j`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;

use super::dihedral::dihedral_pi;
use super::theta::check_prime;
use super::BasePair;
use crate::algebra::{
    companion_matrix, cyclotomic_poly, z_pow_minus_one, IntMatrix, QuotientElem, QuotientRing,
    Ring, RingMatrix,
};
use crate::error::{Error, Result};

/// `Z[v]/Φ_p` together with `s = [[0, 1], [-1, 0]]` and
/// `a = diag(v^{-1}, v)`, so that `s a = [[0, v], [-v^{-1}, 0]]`.
pub fn binary_dihedral_pair(p: u64) -> Result<(Arc<QuotientRing>, BasePair<QuotientElem>)> {
    check_prime(p)?;
    let ring = QuotientRing::new(&cyclotomic_poly(p as usize), 'v')?;
    let v = ring.generator();
    let v_inv = (1..p - 1).fold(v.clone(), |acc, _| acc.mul_ref(&v));
    let int = QuotientElem::from_i64;
    let s = RingMatrix::from_rows(vec![vec![int(0), int(1)], vec![int(-1), int(0)]]);
    let a = RingMatrix::from_rows(vec![vec![v_inv, int(0)], vec![int(0), v]]);
    Ok((ring, BasePair { s, a, p }))
}

/// `s = π(x) ⊗ C`, `a = π(x)π(y) ⊗ E`, where `C` is the `2q`-cycle
/// (transpose of the companion matrix of `t^{2q} - 1`).
pub fn nqp_pair(q: u64, p: u64) -> Result<BasePair<BigInt>> {
    check_prime(p)?;
    if q == 0 || q.gcd(&p) != 1 {
        return Err(Error::Precondition(format!(
            "N(q, p) needs q >= 1 and gcd(q, p) = 1, got q = {q}, p = {p}"
        )));
    }
    let (x, y) = dihedral_pi(p)?;
    let c = companion_matrix(&z_pow_minus_one(2 * q as usize))?.transpose();
    let s = x.kron(&c);
    let a = x.mul(&y).kron(&IntMatrix::identity(c.rows()));
    Ok(BasePair { s, a, p })
}

/// Multiplicative order of `k` modulo `p`, `None` when `p | k`.
pub fn multiplicative_order(k: i64, p: u64) -> Option<u64> {
    let p_i = p as i64;
    let k = k.rem_euclid(p_i);
    if k == 0 {
        return None;
    }
    let mut acc = k;
    let mut m = 1;
    while acc != 1 {
        acc = acc * k % p_i;
        m += 1;
    }
    Some(m)
}

/// Permutation matrix with a 1 at `(i, target(i))`; products compose left
/// to right.
fn perm_matrix(p: usize, target: impl Fn(usize) -> usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(p, p);
    for i in 0..p {
        m.set(i, target(i), BigInt::from(1));
    }
    m
}

/// `σ(a) = (1 2 ... p)` and `σ(s) = (k^{p-1} ... k² k)` acting on residues
/// mod `p`, with `s a s^{-1} = a^k`. Also returns `m`, the order of `k`.
pub fn kmeta_pair(p: u64, k: i64) -> Result<(BasePair<BigInt>, u64)> {
    check_prime(p)?;
    let m = multiplicative_order(k, p)
        .filter(|&m| m > 1)
        .ok_or_else(|| {
            Error::Precondition(format!("k = {k} must be a unit other than 1 mod {p}"))
        })?;
    let p_i = p as i64;
    let k_inv = (1..p_i)
        .find(|&u| (u * k).rem_euclid(p_i) == 1)
        .expect("k is a unit");
    let pu = p as usize;
    let s = perm_matrix(pu, |i| ((i as i64 * k_inv) % p_i) as usize);
    let a = perm_matrix(pu, |i| (i + 1) % pu);
    Ok((BasePair { s, a, p }, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::presentation;

    #[test]
    fn binary_dihedral_images() {
        let (ring, pair) = binary_dihedral_pair(3).unwrap();
        let v = ring.generator();
        let sa = pair.element(1);
        assert_eq!(sa.get(0, 1), &v);
        // v^{-1} = v² = -1 - v
        assert_eq!(sa.get(1, 0), &v.mul_ref(&v).neg_ref());
        let minus_one = RingMatrix::scalar(2, QuotientElem::from_i64(-1));
        assert_eq!(pair.s.mul(&pair.s), minus_one);
        assert_eq!(sa.mul(&sa), minus_one);
        assert!(pair.a.pow(3).is_identity());
        let pres = presentation(&"1/9".parse().unwrap());
        pair.assign(&pres, &[0, 1]).unwrap();
    }

    #[test]
    fn nqp_is_permutation() {
        let pair = nqp_pair(4, 3).unwrap();
        assert_eq!(pair.s.rows(), 24);
        for m in [&pair.s, &pair.element(1)] {
            for i in 0..24 {
                let row: BigInt = (0..24).map(|j| m.get(i, j).clone()).sum();
                let col: BigInt = (0..24).map(|j| m.get(j, i).clone()).sum();
                assert_eq!((row, col), (BigInt::from(1), BigInt::from(1)));
            }
        }
        assert!(pair.s.pow(8).is_identity());
        assert!(nqp_pair(3, 3).is_err());
        let pres = presentation(&"1/3".parse().unwrap());
        nqp_pair(1, 3).unwrap().assign(&pres, &[0, 1]).unwrap();
    }

    #[test]
    fn kmeta_trefoil_cycles() {
        let (pair, m) = kmeta_pair(7, -2).unwrap();
        assert_eq!(m, 6);
        // σ(s) = (1 3 2 6 4 5): 1 -> 3
        assert_eq!(pair.s.get(1, 3), &BigInt::from(1));
        // σ(sa) = (1 4 6 5 2 7): 1 -> 4, 5 -> 2, 7 = 0 -> 1
        let sa = pair.element(1);
        assert_eq!(sa.get(1, 4), &BigInt::from(1));
        assert_eq!(sa.get(5, 2), &BigInt::from(1));
        assert_eq!(sa.get(0, 1), &BigInt::from(1));
        let conj = pair.s.mul(&pair.a).mul(&pair.s.inverse().unwrap());
        assert_eq!(conj, pair.a.pow(5));
        let pres = presentation(&"1/3".parse().unwrap());
        pair.assign(&pres, &[0, 1]).unwrap();
    }

    #[test]
    fn kmeta_rejects_trivial_k() {
        assert!(kmeta_pair(7, 1).is_err());
        assert!(kmeta_pair(7, 14).is_err());
        assert_eq!(multiplicative_order(2, 7), Some(3));
    }
}

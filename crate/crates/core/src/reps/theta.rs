//! The minimal polynomial `θ_n` of `ω` and the entries of `(XY)^k`.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::algebra::{IntPoly, QuotientElem, QuotientRing, Ring, RingMatrix};
use crate::error::{Error, Result};
use crate::knots::is_odd_prime;

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut c = BigInt::from(1);
    for i in 0..k {
        c = c * (n - i) / (i + 1);
    }
    c
}

/// `θ_n(z) = Σ_k (C(n+k, 2k) + 2 C(n+k, 2k+1)) z^k`.
pub fn theta(n: usize) -> IntPoly {
    assert!(n >= 1, "θ_n needs n >= 1");
    let n = n as i64;
    IntPoly::from_coeffs(
        0,
        (0..=n)
            .map(|k| binomial(n + k, 2 * k) + binomial(n + k, 2 * k + 1) * 2)
            .collect(),
    )
}

/// `Z[ω] = Z[z]/(θ_n)`.
pub fn omega_ring(n: usize) -> Arc<QuotientRing> {
    QuotientRing::new(&theta(n), 'w').expect("θ_n is monic of degree n")
}

pub(crate) fn check_prime(p: u64) -> Result<usize> {
    if !is_odd_prime(p) {
        return Err(Error::Precondition(format!("{p} is not an odd prime")));
    }
    Ok(((p - 1) / 2) as usize)
}

type M2 = RingMatrix<QuotientElem>;

fn m2(a: QuotientElem, b: QuotientElem, c: QuotientElem, d: QuotientElem) -> M2 {
    RingMatrix::from_rows(vec![vec![a, b], vec![c, d]])
}

/// `(XY)^k = [[a_k, b_k], [c_k, d_k]]` for `k = 0..=p`.
#[derive(Clone, Debug)]
pub struct XYPowerTable {
    pub n: usize,
    pub ring: Arc<QuotientRing>,
    pub x: M2,
    pub y: M2,
    rows: Vec<[QuotientElem; 4]>,
}

impl XYPowerTable {
    pub fn new(p: u64) -> Result<Self> {
        let n = check_prime(p)?;
        let ring = omega_ring(n);
        let w = ring.generator();
        let int = |v: i64| QuotientElem::from_i64(v);
        let x = m2(int(-1), int(1), int(0), int(1));
        let y = m2(int(-1), int(0), w, int(1));
        let xy = x.mul(&y);
        let mut rows = Vec::with_capacity(2 * n + 2);
        let mut acc = M2::identity(2);
        for _ in 0..=2 * n + 1 {
            rows.push([
                acc.get(0, 0).clone(),
                acc.get(0, 1).clone(),
                acc.get(1, 0).clone(),
                acc.get(1, 1).clone(),
            ]);
            acc = acc.mul(&xy);
        }
        Ok(XYPowerTable {
            n,
            ring,
            x,
            y,
            rows,
        })
    }

    pub fn p(&self) -> usize {
        2 * self.n + 1
    }

    pub fn a(&self, k: usize) -> &QuotientElem {
        &self.rows[k % self.p()][0]
    }
    pub fn b(&self, k: usize) -> &QuotientElem {
        &self.rows[k % self.p()][1]
    }
    pub fn c(&self, k: usize) -> &QuotientElem {
        &self.rows[k % self.p()][2]
    }
    pub fn d(&self, k: usize) -> &QuotientElem {
        &self.rows[k % self.p()][3]
    }

    /// The stored row `k` before any periodic reduction.
    pub fn row(&self, k: usize) -> &[QuotientElem; 4] {
        &self.rows[k]
    }

    pub fn omega(&self) -> QuotientElem {
        self.ring.generator()
    }

    /// The recurrences and period identities satisfied by the table.
    pub fn verify(&self) -> Result<()> {
        let fail = |what: String| {
            Err(Error::VerificationFailure(format!(
                "p = {}: {what}",
                self.p()
            )))
        };
        let w = self.omega();
        let int = |v: i64| QuotientElem::from_i64(v);
        let p = self.p();
        let n = self.n;
        let r = |k: usize| &self.rows[k];
        if r(0) != &[int(1), int(0), int(0), int(1)] {
            return fail("(XY)^0 is not the identity".into());
        }
        if r(1) != &[w.add_ref(&int(1)), int(1), w.clone(), int(1)] {
            return fail("(XY)^1 entries".into());
        }
        if r(p) != r(0) {
            return fail("(XY)^p is not the identity".into());
        }
        for k in 2..=p {
            let (a, a1, a2) = (&r(k)[0], &r(k - 1)[0], &r(k - 2)[0]);
            if *a != w.add_ref(&int(2)).mul_ref(a1).sub_ref(a2) {
                return fail(format!("a_k recurrence at k = {k}"));
            }
            if w.mul_ref(&r(k)[1]) != w.add_ref(&int(1)).mul_ref(a1).sub_ref(a2) {
                return fail(format!("ω b_k recurrence at k = {k}"));
            }
        }
        let mut partial = int(0);
        for k in 1..=p {
            let [a, b, c, d] = r(k);
            let a1 = &r(k - 1)[0];
            let b1 = &r(k - 1)[1];
            partial = partial.add_ref(a1);
            let checks = [
                (w.mul_ref(b) == a.sub_ref(a1), "ω b_k = a_k - a_{k-1}"),
                (w.mul_ref(b) == *c, "ω b_k = c_k"),
                (*a == w.mul_ref(b).add_ref(d), "a_k = ω b_k + d_k"),
                (d == a1, "d_k = a_{k-1}"),
                (*b == b1.add_ref(a1), "b_k = b_{k-1} + a_{k-1}"),
                (c.add_ref(d) == *a, "c_k + d_k = a_k"),
                (partial == *b, "a_0 + ... + a_{k-1} = b_k"),
            ];
            if let Some((_, name)) = checks.iter().find(|(ok, _)| !ok) {
                return fail(format!("{name} at k = {k}"));
            }
        }
        for k in 0..=2 * n {
            if r(k)[0] != r(2 * n - k)[0] {
                return fail(format!("a_k = a_(2n-k) at k = {k}"));
            }
            if r(k)[1] != r(p - k)[1].neg_ref() {
                return fail(format!("b_k = -b_(p-k) at k = {k}"));
            }
        }
        let sum =
            |idx: usize, from: usize| (from..=2 * n).fold(int(0), |acc, k| acc.add_ref(&r(k)[idx]));
        if !sum(0, 0).is_zero() || !sum(1, 1).is_zero() || !sum(3, 0).is_zero() {
            return fail("period sums of a_k, b_k, d_k".into());
        }
        if !r(n)[0].add_ref(&r(n)[1].mul_ref(&int(2))).is_zero() {
            return fail("a_n + 2 b_n = 0".into());
        }
        // identities in the algebra generated by X and Y
        let xy = self.x.mul(&self.y);
        let yx = self.y.mul(&self.x);
        let x_plus_y = self.x.add(&self.y);
        for k in 1..=n {
            let lhs = xy.pow(k as u32).add(&yx.pow(k as u32));
            if lhs != M2::scalar(2, r(k - 1)[0].add_ref(&r(k)[0])) {
                return fail(format!("(XY)^k + (YX)^k at k = {k}"));
            }
        }
        for k in 1..n {
            let lhs = xy
                .pow(k as u32)
                .mul(&self.x)
                .add(&self.y.mul(&xy.pow(k as u32)));
            if lhs != x_plus_y.scale(&r(k)[0]) {
                return fail(format!("(XY)^k X + Y (XY)^k at k = {k}"));
            }
        }
        let top = xy.pow(n as u32).mul(&self.x);
        if top != self.y.mul(&xy.pow(n as u32)) || top != x_plus_y.scale(&r(n)[1].neg_ref()) {
            return fail("(XY)^n X = Y (XY)^n = -b_n (X + Y)".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ipoly;

    #[test]
    fn theta_examples() {
        assert_eq!(theta(1), ipoly(&[3, 1]));
        assert_eq!(theta(2), ipoly(&[5, 5, 1]));
        assert_eq!(theta(3), ipoly(&[7, 14, 7, 1]));
    }

    #[test]
    fn theta_is_eisenstein_at_p() {
        for n in [1usize, 2, 3, 5, 6, 8, 9, 11] {
            let p = BigInt::from(2 * n as i64 + 1);
            let t = theta(n);
            assert_eq!(t.coeff(0), p);
            assert!(t.coeffs()[..n].iter().all(|c| c % &p == BigInt::from(0)));
        }
    }

    #[test]
    fn table_rows() {
        let t = XYPowerTable::new(5).unwrap();
        let w = t.omega();
        assert_eq!(t.a(1), &w.add_ref(&QuotientElem::from_i64(1)));
        assert_eq!(t.b(1), &QuotientElem::from_i64(1));
        assert!(t
            .a(t.n)
            .add_ref(&t.b(t.n).mul_ref(&QuotientElem::from_i64(2)))
            .is_zero());
        assert_eq!(t.row(5), t.row(0));
        t.verify().unwrap();
    }

    #[test]
    fn rejects_composite() {
        assert!(XYPowerTable::new(9).is_err());
    }
}

//! The integer matrices `U_n` (conjugating `π₀` to `η`) and `V_n` (a
//! square root of `4E_n + C_n`), and the number sequences behind them.

use num_bigint::BigInt;
use num_traits::Signed;

use super::dihedral::{dihedral_pi0, dihedral_xi};
use super::theta::{binomial, theta};
use crate::algebra::{companion_matrix, IntMatrix, Ring};
use crate::error::{Error, Result};

/// `a_{j,k} = C(j+k-1, 2j-1)` for `1 <= j <= k`, zero for `k < j`.
pub fn table_a(j: i64, k: i64) -> BigInt {
    if k < j {
        BigInt::from(0)
    } else {
        binomial(j + k - 1, 2 * j - 1)
    }
}

/// `b_{j,k} = C(j+k-2, 2j-2)` for `1 <= j <= k`, zero for `k < j`.
pub fn table_b(j: i64, k: i64) -> BigInt {
    if k < j {
        BigInt::from(0)
    } else {
        binomial(j + k - 2, 2 * j - 2)
    }
}

/// `U_n = [[A, A*], [B, B*]]`.
pub fn u_matrix(n: usize) -> IntMatrix {
    let n_i = n as i64;
    IntMatrix::from_fn(2 * n, 2 * n, |r, c| {
        let (top, i) = (r < n, (r % n) as i64 + 1);
        let (left, j) = (c < n, (c % n) as i64 + 1);
        match (top, left) {
            (true, true) => table_a(i, n_i - j + 1),
            (true, false) => -table_a(i, j - 1),
            (false, true) => table_b(i, n_i - j + 1),
            (false, false) => table_b(i, j),
        }
    })
}

/// Checks `U_n π₀(g) = η(g) U_n` for both generators and `det U_n = ±1`.
pub fn verify_u_conjugacy(n: usize) -> Result<()> {
    let p = (2 * n + 1) as u64;
    let (x0, y0) = dihedral_pi0(p)?;
    let (ex, ey) = dihedral_xi(p)?.eta();
    let u = u_matrix(n);
    if u.mul(&x0) != ex.mul(&u) || u.mul(&y0) != ey.mul(&u) {
        return Err(Error::VerificationFailure(format!(
            "U_{n} does not conjugate π₀ to η"
        )));
    }
    let det = u.bareiss_det()?;
    if det.abs() != BigInt::from(1) {
        return Err(Error::VerificationFailure(format!(
            "det U_{n} = {det} is not a unit"
        )));
    }
    Ok(())
}

/// `b_k = (-1)^k C(2k+2, k+1) / (k+2)`: 1, -2, 5, -14, 42, ...
pub fn catalan_b(k: i64) -> BigInt {
    let c = binomial(2 * k + 2, k + 1) / BigInt::from(k + 2);
    if k % 2 == 0 {
        c
    } else {
        -c
    }
}

/// `a_k^{(n)} = c_{n-k}^{(n)}`, the coefficients of `f_n(x) = x^n θ_n(1/x)`,
/// with `a_0^{(0)} = 1`; zero outside `0 <= k <= n`.
pub fn f_coeff(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::from(0);
    }
    if n == 0 {
        return BigInt::from(1);
    }
    binomial(2 * n - k + 1, 2 * n - 2 * k + 1) + binomial(2 * n - k, 2 * n - 2 * k + 1)
}

/// `d_{k,l}^{(n)} = Σ_{i=0}^{k} a_i^{(n)} b_{k+l-i}`.
pub fn d_value(n: i64, k: i64, l: i64) -> BigInt {
    (0..=k).map(|i| f_coeff(n, i) * catalan_b(k + l - i)).sum()
}

/// `F(n, m) = Σ_{j=0}^{n} a_{n-j}^{(n)} b_{m+j}`.
pub fn f_value(n: i64, m: i64) -> BigInt {
    (0..=n).map(|j| f_coeff(n, n - j) * catalan_b(m + j)).sum()
}

/// `H_k^{(n)}`, which vanishes for `n >= 1`, `k >= 2`.
pub fn h_value(n: i64, k: i64) -> BigInt {
    let first: BigInt = (0..=k)
        .map(|j| f_coeff(n, j) * f_value(n - 1, n + k - 2 - j))
        .sum();
    let second: BigInt = (0..=k - 2)
        .map(|j| f_coeff(n - 1, j) * f_value(n, n + k - 3 - j))
        .sum();
    first - second
}

/// `V_n = [d_{n-j, k-1}^{(n)}]`.
pub fn v_matrix(n: usize) -> IntMatrix {
    let n_i = n as i64;
    let a: Vec<BigInt> = (0..=n_i).map(|k| f_coeff(n_i, k)).collect();
    let b: Vec<BigInt> = (0..=2 * n_i).map(catalan_b).collect();
    // d_{k,l} = Σ_{i<=k} a_i b_{k+l-i}, with k = n - 1 - r, l = c
    IntMatrix::from_fn(n, n, |r, c| {
        let k = n - 1 - r;
        (0..=k).map(|i| &a[i] * &b[k + c - i]).sum()
    })
}

/// Checks `V_n² = 4 E_n + C_n`.
pub fn verify_v_square(n: usize) -> Result<()> {
    let v = v_matrix(n);
    let c = companion_matrix(&theta(n))?;
    let rhs = IntMatrix::scalar(n, BigInt::from(4)).add(&c);
    if v.mul(&v) != rhs {
        return Err(Error::VerificationFailure(format!("V_{n}^2 != 4E + C_{n}")));
    }
    Ok(())
}

/// Precomputed appendix numbers for one `n`.
#[derive(Clone, Debug)]
pub struct AppendixTables {
    pub n: usize,
    /// `a_{j,k}` for `1 <= j <= n`, `0 <= k <= n`
    pub a: Vec<Vec<BigInt>>,
    pub b: Vec<Vec<BigInt>>,
    /// `a_k^{(n)}` for `0 <= k <= n`
    pub f_coeffs: Vec<BigInt>,
    /// `b_k` for `0 <= k <= 2n`
    pub catalan: Vec<BigInt>,
}

impl AppendixTables {
    pub fn new(n: usize) -> Self {
        let ni = n as i64;
        AppendixTables {
            n,
            a: (1..=ni)
                .map(|j| (0..=ni).map(|k| table_a(j, k)).collect())
                .collect(),
            b: (1..=ni)
                .map(|j| (0..=ni).map(|k| table_b(j, k)).collect())
                .collect(),
            f_coeffs: (0..=ni).map(|k| f_coeff(ni, k)).collect(),
            catalan: (0..=2 * ni).map(catalan_b).collect(),
        }
    }

    /// Diagonal and triangular shape of the `a_{j,k}`, `b_{j,k}` tables.
    pub fn is_well_formed(&self) -> bool {
        let one = BigInt::from(1);
        (0..self.n).all(|j| {
            self.a[j][j + 1] == one
                && self.b[j][j + 1] == one
                && (0..=j).all(|k| self.a[j][k].is_zero() && self.b[j][k].is_zero())
        })
    }
}

/// Alternating binomial identity
/// `Σ_i (-1)^i C(N-i, K-i) C(M, M-i) = C(N-M, K)` for `N >= M, K >= 0`.
pub fn binomial_identity_holds(big_n: i64, big_m: i64, big_k: i64) -> bool {
    let lhs: BigInt = (0..=big_m)
        .map(|i| {
            let term = binomial(big_n - i, big_k - i) * binomial(big_m, big_m - i);
            if i % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum();
    lhs == binomial(big_n - big_m, big_k)
}

/// Every appendix identity for one `n >= 1`, returning the first failure.
pub fn verify_lemmas(n: i64, max_k: i64) -> Result<()> {
    let fail = |what: String| Err(Error::VerificationFailure(what));
    if n >= 2 {
        for k in 0..=n {
            if f_coeff(n, k)
                != f_coeff(n - 1, k) + f_coeff(n - 1, k - 1) * 2 - f_coeff(n - 2, k - 2)
            {
                return fail(format!("a_k^(n) recursion fails at n = {n}, k = {k}"));
            }
            let conv: BigInt = (0..=k).map(|j| f_coeff(n, k - j) * catalan_b(j)).sum();
            if conv != f_coeff(n - 1, k) {
                return fail(format!(
                    "Σ a_(k-j)^(n) b_j = a_k^(n-1) fails at n = {n}, k = {k}"
                ));
            }
        }
        for m in 0..=n + 3 {
            if f_value(n, m) != f_value(n - 1, m + 1) + f_value(n - 1, m) * 2 - f_value(n - 2, m) {
                return fail(format!("F recursion fails at n = {n}, m = {m}"));
            }
        }
        for m in 0..=n - 2 {
            if !f_value(n, m).is_zero() {
                return fail(format!("F({n}, {m}) != 0"));
            }
        }
    }
    if f_value(n, n - 1) != BigInt::from(1) {
        return fail(format!("F({n}, {}) != 1", n - 1));
    }
    if f_value(n, n) != BigInt::from(-(2 * n - 1)) {
        return fail(format!("F({n}, {n}) != -(2n-1)"));
    }
    for k in 2..=max_k {
        if !h_value(n, k).is_zero() {
            return fail(format!("H_{k}^({n}) != 0"));
        }
    }
    Ok(())
}

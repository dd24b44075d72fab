//! The representations `π`, `π₀`, `ξ` and `η = ξ∘γ` of the dihedral group
//! `D_p = ⟨x, y | x² = y² = (xy)^p = 1⟩`.

use std::sync::Arc;

use num_bigint::BigInt;

use super::theta::{check_prime, omega_ring};
use super::BasePair;
use crate::algebra::{companion_matrix, IntMatrix, QuotientElem, QuotientRing, Ring, RingMatrix};
use crate::error::Result;

fn permutation(p: usize, target: impl Fn(usize) -> usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(p, p);
    for i in 0..p {
        m.set(i, target(i), BigInt::from(1));
    }
    m
}

/// The `p x p` permutation matrices `π(x)`, `π(y)`.
pub fn dihedral_pi(p: u64) -> Result<(IntMatrix, IntMatrix)> {
    check_prime(p)?;
    let p = p as usize;
    let x = permutation(p, |i| if i == 0 { 0 } else { p - i });
    let y = permutation(p, |i| match i {
        0 => 1,
        1 => 0,
        _ => p + 1 - i,
    });
    Ok((x, y))
}

/// The `2n x 2n` irreducible integer representation `π₀`.
pub fn dihedral_pi0(p: u64) -> Result<(IntMatrix, IntMatrix)> {
    let n = check_prime(p)?;
    let m = 2 * n;
    let x = permutation(m, |i| m - 1 - i);
    let mut y = IntMatrix::zeros(m, m);
    for i in 0..m {
        y.set(i, 0, BigInt::from(-1));
        if i > 0 {
            y.set(i, m - i, BigInt::from(1));
        }
    }
    Ok((x, y))
}

/// `X = [[-1, 1], [0, 1]]`, `Y = [[-1, 0], [ω, 1]]` over `Z[ω]`.
#[derive(Clone, Debug)]
pub struct DihedralXi {
    pub n: usize,
    pub ring: Arc<QuotientRing>,
    pub x: RingMatrix<QuotientElem>,
    pub y: RingMatrix<QuotientElem>,
}

impl DihedralXi {
    pub fn omega(&self) -> QuotientElem {
        self.ring.generator()
    }

    /// `s = X`, `a = XY`; the 2-bridge assignment is `x -> s`, `y -> s a`.
    pub fn base_pair(&self) -> BasePair<QuotientElem> {
        BasePair {
            s: self.x.clone(),
            a: self.x.mul(&self.y),
            p: (2 * self.n + 1) as u64,
        }
    }

    /// `C_n`, the companion matrix of `θ_n`.
    pub fn companion(&self) -> IntMatrix {
        companion_matrix(&self.ring.modulus()).expect("θ_n is monic")
    }

    /// `η(x) = γ(X)`, `η(y) = γ(Y)`: block matrices with `ω -> C_n`.
    pub fn eta(&self) -> (IntMatrix, IntMatrix) {
        let c = self.companion();
        let g = |m: &RingMatrix<QuotientElem>| -> IntMatrix {
            let blocks: Vec<Vec<IntMatrix>> = (0..2)
                .map(|i| {
                    (0..2)
                        .map(|j| crate::algebra::matrix::eval_at_matrix(m.get(i, j).residue(), &c))
                        .collect()
                })
                .collect();
            RingMatrix::from_blocks(&blocks)
        };
        (g(&self.x), g(&self.y))
    }
}

pub fn dihedral_xi(p: u64) -> Result<DihedralXi> {
    let n = check_prime(p)?;
    let ring = omega_ring(n);
    let int = QuotientElem::from_i64;
    let x = RingMatrix::from_rows(vec![vec![int(-1), int(1)], vec![int(0), int(1)]]);
    let y = RingMatrix::from_rows(vec![vec![int(-1), int(0)], vec![ring.generator(), int(1)]]);
    Ok(DihedralXi { n, ring, x, y })
}

/// `s = π(x)`, `a = π(x)π(y)` for integer dihedral images.
pub fn int_base_pair(x: &IntMatrix, y: &IntMatrix, p: u64) -> BasePair<BigInt> {
    BasePair {
        s: x.clone(),
        a: x.mul(y),
        p,
    }
}

/// `x² = y² = (xy)^p = 1`.
pub fn satisfies_dihedral_relations<R: Ring>(x: &RingMatrix<R>, y: &RingMatrix<R>, p: u64) -> bool {
    x.mul(x).is_identity() && y.mul(y).is_identity() && x.mul(y).pow(p as u32).is_identity()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int_matrix;

    #[test]
    fn pi0_at_three() {
        let (x, y) = dihedral_pi0(3).unwrap();
        assert_eq!(x, int_matrix(&[&[0, 1], &[1, 0]]));
        assert_eq!(y, int_matrix(&[&[-1, 0], &[-1, 1]]));
    }

    #[test]
    fn relations_hold() {
        for p in [3, 5, 7, 11, 13] {
            let (x, y) = dihedral_pi(p).unwrap();
            assert!(satisfies_dihedral_relations(&x, &y, p));
            let (x0, y0) = dihedral_pi0(p).unwrap();
            assert!(satisfies_dihedral_relations(&x0, &y0, p));
            let xi = dihedral_xi(p).unwrap();
            assert!(satisfies_dihedral_relations(&xi.x, &xi.y, p));
            let (ex, ey) = xi.eta();
            assert!(satisfies_dihedral_relations(&ex, &ey, p));
        }
    }

    #[test]
    fn xi_y_at_three() {
        let xi = dihedral_xi(3).unwrap();
        // ω = -3 in Z[z]/(z + 3)
        assert_eq!(xi.y.get(1, 0), &QuotientElem::from_i64(-3));
        assert!(dihedral_xi(15).is_err());
    }
}

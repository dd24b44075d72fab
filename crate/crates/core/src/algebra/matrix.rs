use std::fmt;

use num_bigint::BigInt;

use super::poly::{IntPoly, LaurentPoly};
use super::quotient::QuotientElem;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Dense row-major matrix over a commutative ring.
#[derive(Clone, PartialEq)]
pub struct RingMatrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

pub type IntMatrix = RingMatrix<BigInt>;
pub type PolyMatrix = RingMatrix<IntPoly>;

impl<R: Ring> RingMatrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RingMatrix {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, R::one())
    }

    pub fn scalar(n: usize, c: R) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RingMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RingMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut R {
        &mut self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn row_vecs(&self) -> Vec<Vec<R>> {
        self.data
            .chunks(self.cols.max(1))
            .map(<[R]>::to_vec)
            .collect()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> RingMatrix<S> {
        RingMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
        RingMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
        RingMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(Ring::neg_ref)
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.mul_ref(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j].add_assign_ref(&a.mul_ref(b));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows) && self.is_square()
    }

    /// Submatrix with one row and one column removed.
    pub fn minor(&self, row: usize, col: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != row) {
            for j in (0..self.cols).filter(|&j| j != col) {
                data.push(self.get(i, j).clone());
            }
        }
        RingMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            data,
        }
    }

    /// Laplace expansion along the first row. Exponential; meant for small
    /// matrices and as an independent check.
    pub fn cofactor_det(&self) -> R {
        assert!(self.is_square(), "determinant of a non-square matrix");
        match self.rows {
            0 => R::one(),
            1 => self.data[0].clone(),
            2 => self.data[0]
                .mul_ref(&self.data[3])
                .sub_ref(&self.data[1].mul_ref(&self.data[2])),
            n => {
                let mut acc = R::zero();
                for j in 0..n {
                    let a = self.get(0, j);
                    if a.is_zero() {
                        continue;
                    }
                    let term = a.mul_ref(&self.minor(0, j).cofactor_det());
                    if j % 2 == 0 {
                        acc.add_assign_ref(&term);
                    } else {
                        acc.sub_assign_ref(&term);
                    }
                }
                acc
            }
        }
    }

    /// Fraction-free Gaussian elimination. Every division is exact over an
    /// integral domain; a failed division is reported, never papered over.
    pub fn bareiss_det(&self) -> Result<R> {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n <= 3 {
            return Ok(self.cofactor_det());
        }
        let mut a: Vec<Vec<R>> = self.row_vecs();
        let mut sign_flip = false;
        let mut prev = R::one();
        for k in 0..n - 1 {
            let pivot_row = (k..n)
                .filter(|&r| !a[r][k].is_zero())
                .min_by_key(|&r| entry_weight(&a[r][k]));
            let Some(pr) = pivot_row else {
                return Ok(R::zero());
            };
            if pr != k {
                a.swap(pr, k);
                sign_flip = !sign_flip;
            }
            let (head, tail) = a.split_at_mut(k + 1);
            let pivot_row = &head[k];
            let pivot = &pivot_row[k];
            for row in tail.iter_mut() {
                let lead = row[k].clone();
                for j in k + 1..n {
                    let mut v = pivot.mul_ref(&row[j]);
                    if !lead.is_zero() && !pivot_row[j].is_zero() {
                        v.sub_assign_ref(&lead.mul_ref(&pivot_row[j]));
                    }
                    row[j] = if prev.is_one() || v.is_zero() {
                        v
                    } else {
                        v.exact_div(&prev).ok_or_else(|| Error::NonExactDivision {
                            remainder: "Bareiss step".into(),
                        })?
                    };
                }
                row[k] = R::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if sign_flip { det.neg_ref() } else { det })
    }

    /// Determinant by the strategy the coefficient ring prefers.
    pub fn det(&self) -> Result<R> {
        if R::prefers_cofactor_det() {
            if self.rows > 3 {
                return Err(Error::Unsupported(format!(
                    "{}x{} determinant over a quotient ring; substitute the companion matrix first",
                    self.rows, self.cols
                )));
            }
            return Ok(self.cofactor_det());
        }
        self.bareiss_det()
    }

    /// Adjugate (transposed cofactor matrix), by cofactor expansion.
    pub fn adjugate(&self) -> Self {
        let n = self.rows;
        if n == 1 {
            return Self::identity(1);
        }
        Self::from_fn(n, n, |i, j| {
            let c = self.minor(j, i).cofactor_det();
            if (i + j) % 2 == 0 {
                c
            } else {
                c.neg_ref()
            }
        })
    }

    /// Inverse by Gauss-Jordan elimination with unit pivots. Succeeds for
    /// the matrices used here (signed permutations, unimodular 2x2).
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.row_vecs();
        let mut inv = Self::identity(n).row_vecs();
        for col in 0..n {
            let (pr, pinv) = (col..n).find_map(|r| a[r][col].unit_inverse().map(|u| (r, u)))?;
            a.swap(col, pr);
            inv.swap(col, pr);
            for j in 0..n {
                a[col][j] = a[col][j].mul_ref(&pinv);
                inv[col][j] = inv[col][j].mul_ref(&pinv);
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    let d = f.mul_ref(&a[col][j]);
                    a[r][j].sub_assign_ref(&d);
                    let d = f.mul_ref(&inv[col][j]);
                    inv[r][j].sub_assign_ref(&d);
                }
            }
        }
        Some(Self::from_rows(inv))
    }

    /// Kronecker product `[a_ij * other]`.
    pub fn kron(&self, other: &Self) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            self.get(i / other.rows, j / other.cols)
                .mul_ref(other.get(i % other.rows, j % other.cols))
        })
    }

    /// Block matrix from a grid of equally sized blocks.
    pub fn from_blocks(blocks: &[Vec<Self>]) -> Self {
        let br = blocks[0][0].rows;
        let bc = blocks[0][0].cols;
        Self::from_fn(blocks.len() * br, blocks[0].len() * bc, |i, j| {
            blocks[i / br][j / bc].get(i % br, j % bc).clone()
        })
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }
}

/// Pivot preference for Bareiss: sparse, low-degree entries first.
fn entry_weight<R: Ring>(r: &R) -> usize {
    format!("{r:?}").len()
}

impl<R: Ring> RingMatrix<LaurentPoly<R>> {
    /// `self - t^0 * I` style helper: `M * t^k`.
    pub fn shift_t(&self, k: i64) -> Self {
        self.map(|p| p.shift(k))
    }

    /// Lift a constant matrix into polynomials, times `t^k`.
    pub fn from_constant(m: &RingMatrix<R>, k: i64) -> Self {
        m.map(|c| LaurentPoly::monomial(c.clone(), k))
    }

    pub fn negate_t(&self) -> Self {
        self.map(LaurentPoly::negate_t)
    }

    /// Coefficient matrix of `t^d`.
    pub fn coefficient(&self, d: i64) -> RingMatrix<R> {
        self.map(|p| p.coeff(d))
    }

    pub fn degree_range(&self) -> Option<(i64, i64)> {
        let nz: Vec<_> = self.data.iter().filter(|p| !p.is_zero()).collect();
        if nz.is_empty() {
            return None;
        }
        Some((
            nz.iter().map(|p| p.min_degree()).min().unwrap(),
            nz.iter().map(|p| p.max_degree()).max().unwrap(),
        ))
    }
}

impl<R: Ring + fmt::Display> fmt::Display for RingMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for RingMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.data.chunks(self.cols.max(1)))
            .finish()
    }
}

pub fn int_matrix(rows: &[&[i64]]) -> IntMatrix {
    RingMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect(),
    )
}

/// Column companion matrix: ones on the subdiagonal, last column holds the
/// negated low coefficients, so `p(C) = 0`.
pub fn companion_matrix(p: &IntPoly) -> Result<IntMatrix> {
    if p.min_degree() != 0 || p.max_degree() < 1 {
        return Err(Error::InvalidInput(format!(
            "companion matrix needs a polynomial of degree >= 1 with constant term: {p}"
        )));
    }
    if !p.leading_coeff().is_some_and(|c| c.is_one()) {
        return Err(Error::NotMonic(p.to_string()));
    }
    let d = p.max_degree() as usize;
    let mut m = IntMatrix::zeros(d, d);
    for i in 1..d {
        m.set(i, i - 1, BigInt::from(1));
    }
    for i in 0..d {
        m.set(i, d - 1, -p.coeff(i as i64));
    }
    Ok(m)
}

/// `r(C) = sum r_i C^i` for an integer polynomial `r`.
pub fn eval_at_matrix(r: &[BigInt], c: &IntMatrix) -> IntMatrix {
    let n = c.rows();
    let mut acc = IntMatrix::zeros(n, n);
    let mut power = IntMatrix::identity(n);
    for (i, coef) in r.iter().enumerate() {
        if i > 0 {
            power = power.mul(c);
        }
        if !coef.is_zero_big() {
            acc = acc.add(&power.scale(coef));
        }
    }
    acc
}

trait BigZero {
    fn is_zero_big(&self) -> bool;
}

impl BigZero for BigInt {
    fn is_zero_big(&self) -> bool {
        <BigInt as Ring>::is_zero(self)
    }
}

fn check_companion(elem: &QuotientElem, c: &IntMatrix) -> Result<()> {
    if let Some(ring) = elem.ring() {
        if ring.degree() != c.rows() || companion_matrix(&ring.modulus())? != *c {
            return Err(Error::RingMismatch(format!(
                "companion of degree {} does not match modulus {}",
                c.rows(),
                ring.modulus()
            )));
        }
    }
    Ok(())
}

/// Replace every quotient-ring coefficient `r(ω)` of `p` by the integer
/// matrix `r(C)`, giving an `n x n` matrix of integer polynomials.
pub fn gamma_substitute(p: &LaurentPoly<QuotientElem>, c: &IntMatrix) -> Result<PolyMatrix> {
    let n = c.rows();
    let mut out = PolyMatrix::zeros(n, n);
    let lo = p.min_degree();
    let width = (p.span() + 1) as usize;
    let mut buckets = vec![vec![vec![BigInt::from(0); width]; n]; n];
    for (d, coef) in p.terms() {
        check_companion(coef, c)?;
        let m = eval_at_matrix(coef.residue(), c);
        for (i, row) in buckets.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let v = m.get(i, j);
                if !v.is_zero_big() {
                    cell[(d - lo) as usize] += v;
                }
            }
        }
    }
    for (i, row) in buckets.into_iter().enumerate() {
        for (j, cell) in row.into_iter().enumerate() {
            out.set(i, j, IntPoly::from_coeffs(lo, cell));
        }
    }
    Ok(out)
}

/// Entrywise [`gamma_substitute`] of a matrix, giving the block matrix.
pub fn gamma_substitute_matrix(
    m: &RingMatrix<LaurentPoly<QuotientElem>>,
    c: &IntMatrix,
) -> Result<PolyMatrix> {
    let blocks: Vec<Vec<PolyMatrix>> = (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| gamma_substitute(m.get(i, j), c))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(RingMatrix::from_blocks(&blocks))
}

/// `prod P(ζ t)` over the roots `ζ` of the monic `m`, with multiplicity,
/// computed exactly as `det P(t C_m)`.
pub fn cyclic_product(p: &IntPoly, m: &IntPoly) -> Result<IntPoly> {
    let c = companion_matrix(m)?;
    let d = c.rows() as i64;
    if p.is_zero() {
        return Ok(IntPoly::zero());
    }
    let low = p.min_degree();
    let shifted = p.shift(-low);
    let mut tc = PolyMatrix::zeros(c.rows(), c.rows());
    let mut power = IntMatrix::identity(c.rows());
    for (k, coef) in shifted.coeffs().iter().enumerate() {
        if k > 0 {
            power = power.mul(&c);
        }
        if coef.is_zero_big() {
            continue;
        }
        let term = PolyMatrix::from_constant(&power.scale(coef), k as i64);
        tc = tc.add(&term);
    }
    // each root contributes t^low * ζ^low; the product of the ζ^low is ±m(0)^low
    let det = tc.bareiss_det()?;
    let roots_factor = if low == 0 {
        BigInt::from(1)
    } else {
        let c0 = m.coeff(0);
        let sign = if d % 2 == 0 {
            BigInt::from(1)
        } else {
            BigInt::from(-1)
        };
        let norm = &sign * &c0;
        if low > 0 {
            num_traits::pow(norm, low as usize)
        } else {
            let u = <BigInt as Ring>::unit_inverse(&norm)
                .ok_or_else(|| Error::Precondition("negative exponents need m(0) = ±1".into()))?;
            num_traits::pow(u, (-low) as usize)
        }
    };
    Ok(det.shift(low * d).scale(&roots_factor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::ipoly;
    use crate::algebra::quotient::QuotientRing;

    fn pm(rows: &[&[IntPoly]]) -> PolyMatrix {
        RingMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect())
    }

    #[test]
    fn companion_examples() {
        assert_eq!(
            companion_matrix(&ipoly(&[3, 1])).unwrap(),
            int_matrix(&[&[-3]])
        );
        let c = companion_matrix(&ipoly(&[5, 5, 1])).unwrap();
        assert_eq!(c, int_matrix(&[&[0, -5], &[1, -5]]));
        // oracle: p(C) = C^2 + 5C + 5I = 0
        let check = c
            .mul(&c)
            .add(&c.scale(&BigInt::from(5)))
            .add(&IntMatrix::scalar(2, BigInt::from(5)));
        assert_eq!(check, IntMatrix::zeros(2, 2));
        let j = companion_matrix(&ipoly(&[1, 0, 1])).unwrap();
        assert_eq!(j, int_matrix(&[&[0, -1], &[1, 0]]));
        assert_eq!(j.mul(&j), IntMatrix::scalar(2, BigInt::from(-1)));
        assert!(matches!(
            companion_matrix(&ipoly(&[1, 2])),
            Err(Error::NotMonic(_))
        ));
    }

    #[test]
    fn gamma_examples() {
        let r1 = QuotientRing::new(&ipoly(&[3, 1]), 'w').unwrap();
        let c1 = companion_matrix(&r1.modulus()).unwrap();
        let p = LaurentPoly::constant(r1.elem(&[4, 1]));
        assert_eq!(gamma_substitute(&p, &c1).unwrap(), pm(&[&[ipoly(&[1])]]));

        let r2 = QuotientRing::new(&ipoly(&[5, 5, 1]), 'w').unwrap();
        let c2 = companion_matrix(&r2.modulus()).unwrap();
        let one = LaurentPoly::constant(QuotientElem::from_i64(1));
        assert_eq!(
            gamma_substitute(&one, &c2).unwrap(),
            PolyMatrix::identity(2)
        );
        let wt = LaurentPoly::monomial(r2.generator(), 1);
        let expect = pm(&[
            &[IntPoly::zero(), IntPoly::from_i64s(1, &[-5])],
            &[IntPoly::from_i64s(1, &[1]), IntPoly::from_i64s(1, &[-5])],
        ]);
        assert_eq!(gamma_substitute(&wt, &c2).unwrap(), expect);
        // mismatched companion
        assert!(gamma_substitute(&wt, &c1).is_err());
    }

    #[test]
    fn determinant_examples() {
        let t = IntPoly::t();
        let m = pm(&[&[IntPoly::one(), t.clone()], &[t.clone(), IntPoly::one()]]);
        assert_eq!(m.bareiss_det().unwrap(), ipoly(&[1, 0, -1]));
        let pi0_x = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(pi0_x.bareiss_det().unwrap(), BigInt::from(-1));
        assert_eq!(
            int_matrix(&[&[1, 1], &[1, 1]]).bareiss_det().unwrap(),
            BigInt::from(0)
        );
    }

    #[test]
    fn bareiss_matches_cofactor_5x5() {
        let m = PolyMatrix::from_fn(5, 5, |i, j| {
            ipoly(&[
                (i * 3 + j) as i64 % 5 - 2,
                (i + 2 * j) as i64 % 3 - 1,
                ((i * j) % 4) as i64,
            ])
        });
        assert_eq!(m.bareiss_det().unwrap(), m.cofactor_det());
        let s = IntMatrix::from_fn(6, 6, |i, j| BigInt::from(((i * 7 + j * 5) % 11) as i64 - 5));
        assert_eq!(s.bareiss_det().unwrap(), s.cofactor_det());
    }

    /// `P(it) P(-it)` by arithmetic on Gaussian-integer coefficient pairs.
    fn gaussian_oracle(p: &IntPoly) -> IntPoly {
        let eval = |sign: i64| -> Vec<(i64, i64)> {
            // coefficient of t^k in P(sign * i * t) is c_k * (sign*i)^k
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| {
                    let c: i64 = c.try_into().unwrap();
                    let s = if k % 2 == 1 { sign } else { 1 };
                    match k % 4 {
                        0 => (c, 0),
                        1 => (0, s * c),
                        2 => (-c, 0),
                        _ => (0, -s * c),
                    }
                })
                .collect()
        };
        let (a, b) = (eval(1), eval(-1));
        let mut out = vec![(0i64, 0i64); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j].0 += x.0 * y.0 - x.1 * y.1;
                out[i + j].1 += x.0 * y.1 + x.1 * y.0;
            }
        }
        assert!(out.iter().all(|c| c.1 == 0), "imaginary part must cancel");
        IntPoly::from_i64s(0, &out.iter().map(|c| c.0).collect::<Vec<_>>())
    }

    #[test]
    fn cyclic_product_examples() {
        assert_eq!(
            cyclic_product(&ipoly(&[1, -1]), &ipoly(&[-1, 0, 1])).unwrap(),
            ipoly(&[1, 0, -1])
        );
        let p = ipoly(&[1, 1, 1]);
        assert_eq!(
            cyclic_product(&p, &ipoly(&[1, 0, 1])).unwrap(),
            gaussian_oracle(&p)
        );
        assert_eq!(gaussian_oracle(&p), ipoly(&[1, 0, -1, 0, 1]));
        assert_eq!(
            cyclic_product(&ipoly(&[7]), &ipoly(&[1, 1, 1])).unwrap(),
            ipoly(&[49])
        );
    }

    #[test]
    fn inverse_of_signed_permutation() {
        let m = int_matrix(&[&[0, -1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert_eq!(inv, m.transpose());
    }
}

use super::poly::IntPoly;

/// `z^m - 1` as an integer polynomial.
pub fn z_pow_minus_one(m: usize) -> IntPoly {
    let mut cs = vec![0i64; m + 1];
    cs[0] = -1;
    cs[m] = 1;
    IntPoly::from_i64s(0, &cs)
}

/// The m-th cyclotomic polynomial: `z^m - 1` divided by `Φ_d` for every
/// proper divisor `d` of `m`.
pub fn cyclotomic_poly(m: usize) -> IntPoly {
    assert!(m >= 1, "cyclotomic index must be positive");
    let mut p = z_pow_minus_one(m);
    for d in (1..m).filter(|d| m % d == 0) {
        p = p
            .exact_div(&cyclotomic_poly(d))
            .expect("cyclotomic factors divide z^m - 1");
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::ipoly;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_poly(1), ipoly(&[-1, 1]));
        assert_eq!(cyclotomic_poly(4), ipoly(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(10), ipoly(&[1, -1, 1, -1, 1]));
        assert_eq!(cyclotomic_poly(6), ipoly(&[1, -1, 1]));
    }

    #[test]
    fn product_over_divisors() {
        // oracle: z^12 - 1 = prod over d | 12 of Φ_d
        let mut acc = IntPoly::one();
        for d in [1, 2, 3, 4, 6, 12] {
            acc = acc.mul(&cyclotomic_poly(d));
        }
        assert_eq!(acc, z_pow_minus_one(12));
    }
}

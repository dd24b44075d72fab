//! Wada's twisted Alexander invariant and the total polynomials built from
//! it for dihedral, binary dihedral, metacyclic and K-metacyclic
//! representations.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::algebra::{
    companion_matrix, cyclic_product, cyclotomic_poly, gamma_substitute, gamma_substitute_matrix,
    z_pow_minus_one, IntMatrix, IntPoly, LaurentPoly, PolyMatrix, QuotientElem, Ring, RingMatrix,
};
use crate::error::{Error, Result};
use crate::fox::assemble;
use crate::knots::{alexander, presentation, Presentation, TwoBridgeFraction};
use crate::reps::dihedral::int_base_pair;
use crate::reps::{
    binary_dihedral_pair, dihedral_pi, dihedral_xi, kmeta_pair, nqp_pair, DihedralXi, MatrixRep,
};

/// The images `Φ*(∂R_i/∂g)` of the Fox derivatives, one map per relator.
/// Computed in a single left-to-right pass per relator.
pub fn fox_blocks<R: Ring>(
    pres: &Presentation,
    rep: &MatrixRep<R>,
) -> Result<Vec<BTreeMap<char, RingMatrix<LaurentPoly<R>>>>> {
    let dim = rep.dim();
    let mut out = Vec::with_capacity(pres.relators().len());
    for rel in pres.relators() {
        let mut buckets: BTreeMap<char, BTreeMap<i64, RingMatrix<R>>> = BTreeMap::new();
        let mut prefix = RingMatrix::<R>::identity(dim);
        let mut deg = 0i64;
        for l in rel.letters() {
            let step = rep.t_degree(l.gen)?;
            if l.inverse {
                prefix = prefix.mul(rep.generator_inverse(l.gen)?);
                deg -= step;
                add_at(buckets.entry(l.gen).or_default(), deg, prefix.neg());
            } else {
                add_at(buckets.entry(l.gen).or_default(), deg, prefix.clone());
                prefix = prefix.mul(rep.generator_image(l.gen)?);
                deg += step;
            }
        }
        let map = pres
            .generators()
            .iter()
            .map(|&g| {
                (
                    g,
                    buckets
                        .get(&g)
                        .map(|b| assemble(dim, b))
                        .unwrap_or_else(|| RingMatrix::zeros(dim, dim)),
                )
            })
            .collect();
        out.push(map);
    }
    Ok(out)
}

fn add_at<R: Ring>(b: &mut BTreeMap<i64, RingMatrix<R>>, deg: i64, m: RingMatrix<R>) {
    match b.get_mut(&deg) {
        Some(acc) => *acc = acc.add(&m),
        None => {
            b.insert(deg, m);
        }
    }
}

/// Determinant of a matrix over `R[t^±1]`: fraction-free elimination for
/// integer coefficients, cofactor expansion for small quotient-ring
/// matrices.
pub fn poly_det<R: Ring>(m: &RingMatrix<LaurentPoly<R>>) -> Result<LaurentPoly<R>> {
    if R::prefers_cofactor_det() {
        if m.rows() > 6 {
            return Err(Error::Unsupported(format!(
                "{}x{} determinant over a quotient ring",
                m.rows(),
                m.cols()
            )));
        }
        return Ok(m.cofactor_det());
    }
    m.bareiss_det()
}

/// `det(Φ*(g) - I)`.
pub fn denominator<R: Ring>(rep: &MatrixRep<R>, g: char) -> Result<LaurentPoly<R>> {
    let img = RingMatrix::from_constant(rep.generator_image(g)?, rep.t_degree(g)?);
    poly_det(&img.sub(&RingMatrix::identity(rep.dim())))
}

/// The pieces of one Wada quotient.
#[derive(Clone, Debug)]
pub struct WadaParts<R: Ring> {
    pub omitted: char,
    pub numerator: LaurentPoly<R>,
    pub denominator: LaurentPoly<R>,
    /// `numerator / denominator`, shifted to lowest degree 0
    pub quotient: LaurentPoly<R>,
}

/// Wada's quotient with the column of generator `omit` removed.
pub fn wada_omitting<R: Ring>(
    pres: &Presentation,
    rep: &MatrixRep<R>,
    omit: char,
) -> Result<WadaParts<R>> {
    let blocks = fox_blocks(pres, rep)?;
    wada_from_blocks(pres, rep, &blocks, omit)
}

fn wada_from_blocks<R: Ring>(
    pres: &Presentation,
    rep: &MatrixRep<R>,
    blocks: &[BTreeMap<char, RingMatrix<LaurentPoly<R>>>],
    omit: char,
) -> Result<WadaParts<R>> {
    let den = denominator(rep, omit)?;
    if den.is_zero() {
        return Err(Error::AllDenominatorsSingular);
    }
    let cols: Vec<char> = pres
        .generators()
        .iter()
        .copied()
        .filter(|&g| g != omit)
        .collect();
    let grid: Vec<Vec<RingMatrix<LaurentPoly<R>>>> = blocks
        .iter()
        .map(|row| cols.iter().map(|g| row[g].clone()).collect())
        .collect();
    let num = poly_det(&RingMatrix::from_blocks(&grid))?;
    let q = num.exact_div(&den)?;
    let quotient = if q.is_zero() {
        q
    } else {
        q.shift(-q.min_degree())
    };
    Ok(WadaParts {
        omitted: omit,
        numerator: num,
        denominator: den,
        quotient,
    })
}

/// Wada's invariant, omitting the first generator whose denominator is
/// nonzero.
pub fn wada<R: Ring>(pres: &Presentation, rep: &MatrixRep<R>) -> Result<WadaParts<R>> {
    let blocks = fox_blocks(pres, rep)?;
    for &g in pres.generators() {
        if !denominator(rep, g)?.is_zero() {
            return wada_from_blocks(pres, rep, &blocks, g);
        }
    }
    Err(Error::AllDenominatorsSingular)
}

/// The quotient for every admissible omitted generator.
pub fn wada_all<R: Ring>(pres: &Presentation, rep: &MatrixRep<R>) -> Result<Vec<WadaParts<R>>> {
    let blocks = fox_blocks(pres, rep)?;
    let mut out = Vec::new();
    for &g in pres.generators() {
        if !denominator(rep, g)?.is_zero() {
            out.push(wada_from_blocks(pres, rep, &blocks, g)?);
        }
    }
    Ok(out)
}

fn check_divides(f: &TwoBridgeFraction, p: u64) -> Result<()> {
    if f.alpha() % p != 0 {
        return Err(Error::Precondition(format!(
            "{p} does not divide {}",
            f.alpha()
        )));
    }
    Ok(())
}

fn two_bridge(f: &TwoBridgeFraction, p: u64) -> Result<Presentation> {
    check_divides(f, p)?;
    Ok(presentation(f))
}

/// Generator assignment `x -> s`, `y -> s a` for 2-bridge presentations.
pub const TWO_BRIDGE_ASSIGNMENT: [u64; 2] = [0, 1];

/// `Δ̃_{ξ∘ρ}(t | ω)` over `Z[ω][t]`, together with the representation.
pub fn dihedral_xi_wada(
    pres: &Presentation,
    p: u64,
    preferred: &[u64],
) -> Result<(
    DihedralXi,
    MatrixRep<QuotientElem>,
    LaurentPoly<QuotientElem>,
)> {
    let xi = dihedral_xi(p)?;
    let (_, rep) = xi.base_pair().search(pres, preferred)?;
    let w = wada(pres, &rep)?.quotient;
    Ok((xi, rep, w))
}

/// `det Δ̃(t | C)` for a quotient-ring valued invariant.
pub fn norm_by_companion(w: &LaurentPoly<QuotientElem>, c: &IntMatrix) -> Result<IntPoly> {
    Ok(gamma_substitute(w, c)?.bareiss_det()?.normalized())
}

/// `D(t) = Δ̃_{ρ₀}(t)`: the ξ-invariant with `ω` replaced by `C_n`.
pub fn dihedral_total_pres(pres: &Presentation, p: u64, preferred: &[u64]) -> Result<IntPoly> {
    let (xi, _, w) = dihedral_xi_wada(pres, p, preferred)?;
    norm_by_companion(&w, &xi.companion())
}

pub fn dihedral_total(f: &TwoBridgeFraction, p: u64) -> Result<IntPoly> {
    dihedral_total_pres(&two_bridge(f, p)?, p, &TWO_BRIDGE_ASSIGNMENT)
}

/// Invariant of the `2n`-dimensional integer representation `π₀`.
pub fn pi0_total_pres(pres: &Presentation, p: u64, preferred: &[u64]) -> Result<IntPoly> {
    let (x, y) = crate::reps::dihedral_pi0(p)?;
    let (_, rep) = int_base_pair(&x, &y, p).search(pres, preferred)?;
    Ok(wada(pres, &rep)?.quotient.normalized())
}

/// Invariant of the `p`-dimensional permutation representation `π`.
pub fn perm_dihedral_total_pres(pres: &Presentation, p: u64, preferred: &[u64]) -> Result<IntPoly> {
    let (x, y) = dihedral_pi(p)?;
    let (_, rep) = int_base_pair(&x, &y, p).search(pres, preferred)?;
    Ok(wada(pres, &rep)?.quotient.normalized())
}

pub fn perm_dihedral_total(f: &TwoBridgeFraction, p: u64) -> Result<IntPoly> {
    perm_dihedral_total_pres(&two_bridge(f, p)?, p, &TWO_BRIDGE_ASSIGNMENT)
}

/// Binary dihedral total, with `v` replaced by the companion matrix of
/// `Φ_p`. Raises `CrossCheckMismatch` unless it equals `D(it) D(-it)`.
pub fn binary_dihedral_total_pres(
    pres: &Presentation,
    p: u64,
    preferred: &[u64],
) -> Result<IntPoly> {
    let (ring, pair) = binary_dihedral_pair(p)?;
    let (_, rep) = pair.search(pres, preferred)?;
    let w = wada(pres, &rep)?.quotient;
    let total = norm_by_companion(&w, &companion_matrix(&ring.modulus())?)?;
    let d = dihedral_total_pres(pres, p, preferred)?;
    let expect = cyclic_product(&d, &cyclotomic_poly(4))?.normalized();
    if total != expect {
        return Err(Error::CrossCheckMismatch(format!(
            "binary dihedral total {total} differs from D(it)D(-it) = {expect}"
        )));
    }
    Ok(total)
}

pub fn binary_dihedral_total(f: &TwoBridgeFraction, p: u64) -> Result<IntPoly> {
    binary_dihedral_total_pres(&two_bridge(f, p)?, p, &TWO_BRIDGE_ASSIGNMENT)
}

fn check_coprime(q: u64, p: u64) -> Result<()> {
    if q == 0 || q.gcd(&p) != 1 {
        return Err(Error::Precondition(format!(
            "need q >= 1 and gcd(q, p) = 1, got q = {q}, p = {p}"
        )));
    }
    Ok(())
}

/// `Π D(ζ t)` over the primitive `2q`-th roots of unity.
pub fn metacyclic_total_from(d: &IntPoly, q: u64) -> Result<IntPoly> {
    Ok(cyclic_product(d, &cyclotomic_poly(2 * q as usize))?.normalized())
}

pub fn metacyclic_total(f: &TwoBridgeFraction, q: u64, p: u64) -> Result<IntPoly> {
    check_coprime(q, p)?;
    metacyclic_total_from(&dihedral_total(f, p)?, q)
}

/// The right-hand side of the product formula for the `2pq`-dimensional
/// invariant: `[Π Δ(ζ^k t) / (1 - t^{2q})] · Π D(ζ^k t)` over all `2q`-th
/// roots of unity.
pub fn nqp_product_formula(delta: &IntPoly, d: &IntPoly, q: u64) -> Result<IntPoly> {
    let m = z_pow_minus_one(2 * q as usize);
    // the factor 1 - t^{2q} comes out of the D-product, not the Δ-product
    let num = cyclic_product(delta, &m)?.mul(&cyclic_product(d, &m)?);
    let den = IntPoly::one().sub(&IntPoly::monomial(BigInt::from(1), 2 * q as i64));
    Ok(num.exact_div(&den)?.normalized())
}

/// The `N(q, p)` invariant computed directly, cross-checked against
/// [`nqp_product_formula`].
pub fn nqp_total_pres(pres: &Presentation, q: u64, p: u64, preferred: &[u64]) -> Result<IntPoly> {
    check_coprime(q, p)?;
    let (_, rep) = nqp_pair(q, p)?.search(pres, preferred)?;
    let direct = wada(pres, &rep)?.quotient.normalized();
    let formula = nqp_product_formula(
        &alexander(pres)?,
        &dihedral_total_pres(pres, p, preferred)?,
        q,
    )?;
    if direct != formula {
        return Err(Error::CrossCheckMismatch(format!(
            "direct N({q},{p}) invariant {direct} differs from product formula {formula}"
        )));
    }
    Ok(direct)
}

pub fn nqp_total(f: &TwoBridgeFraction, q: u64, p: u64) -> Result<IntPoly> {
    nqp_total_pres(&two_bridge(f, p)?, q, p, &TWO_BRIDGE_ASSIGNMENT)
}

/// Outcome of a K-metacyclic computation.
#[derive(Clone, Debug, PartialEq)]
pub struct KmetaReport {
    pub p: u64,
    pub k: i64,
    /// order of `k` mod `p`
    pub m: u64,
    pub assignment: Vec<u64>,
    pub total: IntPoly,
    /// `total · (1 - t) / Δ`, when that division is exact
    pub quotient: Option<IntPoly>,
    /// the quotient is a polynomial in `t^m`
    pub conjecture_a: bool,
}

pub fn kmeta_total(pres: &Presentation, p: u64, k: i64, preferred: &[u64]) -> Result<KmetaReport> {
    let delta = alexander(pres)?;
    let at_k = delta
        .eval_i64(k)
        .expect("Alexander polynomial has no negative powers");
    if !Zero::is_zero(&(at_k.clone() % BigInt::from(p))) {
        return Err(Error::Precondition(format!(
            "Δ({k}) = {at_k} is not divisible by {p}"
        )));
    }
    let (pair, m) = kmeta_pair(p, k)?;
    let (assignment, rep) = pair.search(pres, preferred)?;
    let total = wada(pres, &rep)?.quotient.normalized();
    let times = total.mul(&IntPoly::from_i64s(0, &[1, -1]));
    let quotient = times.exact_div(&delta).ok().map(|q| q.normalized());
    let conjecture_a = quotient
        .as_ref()
        .is_some_and(|q| q.is_polynomial_in_power(m as i64));
    Ok(KmetaReport {
        p,
        k,
        m,
        assignment,
        total,
        quotient,
        conjecture_a,
    })
}

/// Integer polynomial reduced mod `p`, coefficients in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPoly {
    pub p: u64,
    pub min_deg: i64,
    pub coeffs: Vec<u64>,
}

impl ModPoly {
    pub fn reduce(f: &IntPoly, p: u64) -> Self {
        let pb = BigInt::from(p);
        let mut coeffs: Vec<u64> = f
            .coeffs()
            .iter()
            .map(|c| u64::try_from(c.mod_floor(&pb)).expect("residue fits"))
            .collect();
        let mut min_deg = f.min_degree();
        let lead_zeros = coeffs.iter().take_while(|&&c| c == 0).count();
        coeffs.drain(..lead_zeros);
        min_deg += lead_zeros as i64;
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            min_deg = 0;
        }
        ModPoly { p, min_deg, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Representative of `{c t^k · self}`: lowest degree 0, lowest
    /// coefficient 1.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let p = self.p as i64;
        let inv = (self.coeffs[0] as i64).extended_gcd(&p).x.mod_floor(&p) as u64;
        ModPoly {
            p: self.p,
            min_deg: 0,
            coeffs: self.coeffs.iter().map(|&c| c * inv % self.p).collect(),
        }
    }

    pub fn unit_equiv(&self, other: &Self) -> bool {
        self.p == other.p && self.normalized() == other.normalized()
    }

    pub fn degree_span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

/// Congruence report: `lhs ≡ rhs (mod p)` up to units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModpReport {
    pub p: u64,
    pub holds: bool,
    pub lhs: ModPoly,
    pub rhs: ModPoly,
}

fn one_plus(sign: i64) -> IntPoly {
    IntPoly::from_i64s(0, &[1, sign])
}

/// `D ≡ {Δ(t)/(1+t)}^n {Δ(-t)/(1-t)}^n (mod p)`, compared after clearing
/// the denominators: `D (1+t)^n (1-t)^n` against `Δ(t)^n Δ(-t)^n`.
pub fn modp_congruence_from(delta: &IntPoly, d: &IntPoly, p: u64) -> ModpReport {
    let n = ((p - 1) / 2) as u32;
    let lhs = d.mul(&one_plus(1).pow(n)).mul(&one_plus(-1).pow(n));
    let rhs = delta.pow(n).mul(&delta.negate_t().pow(n));
    report(&lhs, &rhs, p)
}

fn report(lhs: &IntPoly, rhs: &IntPoly, p: u64) -> ModpReport {
    let (l, r) = (ModPoly::reduce(lhs, p), ModPoly::reduce(rhs, p));
    ModpReport {
        p,
        holds: !l.is_zero() && l.unit_equiv(&r),
        lhs: l.normalized(),
        rhs: r.normalized(),
    }
}

pub fn modp_congruence(f: &TwoBridgeFraction, p: u64) -> Result<ModpReport> {
    let delta = alexander(&presentation(f))?;
    if !Zero::is_zero(&(delta.eval_i64(-1).expect("polynomial") % BigInt::from(p))) {
        return Err(Error::Precondition(format!(
            "Δ(-1) is not divisible by {p}"
        )));
    }
    Ok(modp_congruence_from(&delta, &dihedral_total(f, p)?, p))
}

/// Metacyclic analogue: `Δ̃_ν ≡ {Π Δ(ζ^k t)}^p / (1 - t^{2q})^p (mod p)`.
pub fn modp_congruence_nqp(f: &TwoBridgeFraction, q: u64, p: u64) -> Result<ModpReport> {
    let delta = alexander(&presentation(f))?;
    let total = nqp_total(f, q, p)?;
    let den = IntPoly::one().sub(&IntPoly::monomial(BigInt::from(1), 2 * q as i64));
    let lhs = total.mul(&den.pow(p as u32));
    let rhs = cyclic_product(&delta, &z_pow_minus_one(2 * q as usize))?.pow(p as u32);
    Ok(report(&lhs, &rhs, p))
}

/// Shape of `γ(Φ*(∂R/∂x))` mod `p`, split into `n x n` blocks
/// `[[A, B], [C, D]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockStructure {
    pub lower_triangular: bool,
    pub c_strictly_lower: bool,
    /// every diagonal entry of `A` is `Δ(-t)` mod `p` up to units
    pub a_diagonal: bool,
    /// every diagonal entry of `D` is `Δ(t)` mod `p` up to units
    pub d_diagonal: bool,
}

impl BlockStructure {
    pub fn holds(&self) -> bool {
        self.lower_triangular && self.c_strictly_lower && self.a_diagonal && self.d_diagonal
    }
}

pub fn modp_block_structure(f: &TwoBridgeFraction, p: u64) -> Result<BlockStructure> {
    let pres = two_bridge(f, p)?;
    let delta = alexander(&pres)?;
    let xi = dihedral_xi(p)?;
    let (_, rep) = xi.base_pair().search(&pres, &TWO_BRIDGE_ASSIGNMENT)?;
    let blocks = fox_blocks(&pres, &rep)?;
    let big: PolyMatrix = gamma_substitute_matrix(&blocks[0][&'x'], &xi.companion())?;
    let n = xi.n;
    let zero = |i: usize, j: usize| ModPoly::reduce(big.get(i, j), p).is_zero();
    let mut lower = true;
    let mut c_strict = true;
    for i in 0..2 * n {
        for j in 0..2 * n {
            let (bi, bj) = (i % n, j % n);
            if bj > bi && !zero(i, j) {
                lower = false;
            }
            if i >= n && j < n && bi == bj && !zero(i, j) {
                c_strict = false;
            }
        }
    }
    let target_a = ModPoly::reduce(&delta.negate_t(), p);
    let target_d = ModPoly::reduce(&delta, p);
    let a_diagonal = (0..n).all(|i| ModPoly::reduce(big.get(i, i), p).unit_equiv(&target_a));
    let d_diagonal = (n..2 * n).all(|i| ModPoly::reduce(big.get(i, i), p).unit_equiv(&target_d));
    Ok(BlockStructure {
        lower_triangular: lower,
        c_strictly_lower: c_strict,
        a_diagonal,
        d_diagonal,
    })
}

/// Largest absolute coefficient, used by callers that cap output size.
pub fn height(f: &IntPoly) -> BigInt {
    f.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ipoly, iproduct};

    fn fr(s: &str) -> TwoBridgeFraction {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_rep_gives_alexander_over_one_minus_t() {
        // the quotient is the rational function Δ/(t - 1), so it is not exact
        let pres = presentation(&fr("5/27"));
        let rep = MatrixRep::new(vec![
            ('x', IntMatrix::identity(1)),
            ('y', IntMatrix::identity(1)),
        ])
        .unwrap();
        let blocks = fox_blocks(&pres, &rep).unwrap();
        let delta = alexander(&pres).unwrap();
        assert!(blocks[0][&'y'].get(0, 0).unit_equiv(&delta));
        assert_eq!(denominator(&rep, 'x').unwrap(), ipoly(&[-1, 1]));
        assert!(matches!(
            wada(&pres, &rep),
            Err(Error::NonExactDivision { .. })
        ));
    }

    #[test]
    fn trefoil_dihedral() {
        assert_eq!(dihedral_total(&fr("1/3"), 3).unwrap(), ipoly(&[1, 0, -1]));
        assert_eq!(
            perm_dihedral_total(&fr("1/3"), 3).unwrap(),
            iproduct(&[&[1, -1, 1], &[1, 1]])
        );
        assert!(dihedral_total(&fr("1/5"), 3).is_err());
    }

    #[test]
    fn xi_denominator() {
        let xi = dihedral_xi(5).unwrap();
        let rep = MatrixRep::new(vec![('x', xi.x.clone()), ('y', xi.y.clone())]).unwrap();
        let d = denominator(&rep, 'y').unwrap();
        let expect = ipoly(&[1, 0, -1]).map(|c| QuotientElem::from_bigint(c));
        assert_eq!(d, expect);
    }

    #[test]
    fn pi0_matches_gamma_route() {
        for (f, p) in [("1/5", 5), ("5/27", 3)] {
            let pres = presentation(&fr(f));
            assert_eq!(
                pi0_total_pres(&pres, p, &TWO_BRIDGE_ASSIGNMENT).unwrap(),
                dihedral_total(&fr(f), p).unwrap()
            );
        }
    }

    #[test]
    fn mod_poly_units() {
        let a = ModPoly::reduce(&IntPoly::from_i64s(2, &[2, 4]), 3);
        let b = ModPoly::reduce(&ipoly(&[1, 2]), 3);
        assert!(a.unit_equiv(&b));
    }
}

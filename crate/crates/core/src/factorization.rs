//! The factorization `D(t) = F(t) F(-t)` of the dihedral total polynomial,
//! built from split matrix polynomials and the matrix `V_n`, with an
//! integer-factorization fallback.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::algebra::{
    gamma_substitute, int_poly_factor, json::poly_to_json, IntPoly, LaurentPoly, PolyMatrix,
    QuotientElem, Ring, RingMatrix,
};
use crate::error::{Error, Result};
use crate::knots::{alexander, hp_expansion_any, presentation, HpBounds, TwoBridgeFraction};
use crate::reps::appendix::v_matrix;
use crate::reps::{dihedral_xi, DihedralXi, MatrixRep, XYPowerTable};
use crate::twisted::{
    dihedral_total, dihedral_xi_wada, fox_blocks, modp_congruence_from, ModPoly,
    TWO_BRIDGE_ASSIGNMENT,
};

type QPoly = LaurentPoly<QuotientElem>;
type QMatrix = RingMatrix<QPoly>;

/// A split matrix `[[G - 2H, H], [ωH, G + 2H]]` with `G` even and `H` odd.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitForm {
    pub g: QPoly,
    pub h: QPoly,
}

impl SplitForm {
    /// `[[G - 2H, H], [ωH, G + 2H]]`.
    pub fn matrix(&self, omega: &QuotientElem) -> QMatrix {
        let two_h = self.h.scale(&QuotientElem::from_i64(2));
        RingMatrix::from_rows(vec![
            vec![self.g.sub(&two_h), self.h.clone()],
            vec![self.h.scale(omega), self.g.add(&two_h)],
        ])
    }

    /// `G² - (4 + ω) H²`, the determinant of [`SplitForm::matrix`].
    pub fn det(&self, omega: &QuotientElem) -> QPoly {
        let four_plus = omega.add_ref(&QuotientElem::from_i64(4));
        self.g
            .mul(&self.g)
            .sub(&self.h.mul(&self.h).scale(&four_plus))
    }

    /// `det[γ(G) - V_n γ(H)]`.
    pub fn f_polynomial(&self, xi: &DihedralXi) -> Result<IntPoly> {
        let c = xi.companion();
        let v = v_matrix(xi.n);
        let gg = gamma_substitute(&self.g, &c)?;
        let hh = gamma_substitute(&self.h, &c)?;
        let vp = PolyMatrix::from_constant(&v, 0);
        if vp.mul(&gg) != gg.mul(&vp) || vp.mul(&hh) != hh.mul(&vp) {
            return Err(Error::CertificateFailure(
                "γ(G), γ(H) do not commute with V_n".into(),
            ));
        }
        Ok(gg.sub(&vp.mul(&hh)).bareiss_det()?.normalized())
    }
}

fn is_scalar(m: &RingMatrix<QuotientElem>) -> Option<QuotientElem> {
    let d = m.get(0, 0);
    (m.get(0, 1).is_zero() && m.get(1, 0).is_zero() && m.get(1, 1) == d).then(|| d.clone())
}

/// `β` with `m = β (X + Y) = β [[-2, 1], [ω, 2]]`.
fn x_plus_y_multiple(m: &RingMatrix<QuotientElem>, omega: &QuotientElem) -> Option<QuotientElem> {
    let b = m.get(0, 1).clone();
    let two = QuotientElem::from_i64(2);
    let ok = *m.get(0, 0) == b.mul_ref(&two).neg_ref()
        && *m.get(1, 1) == b.mul_ref(&two)
        && *m.get(1, 0) == b.mul_ref(omega);
    ok.then_some(b)
}

/// The split form of a 2x2 matrix polynomial: even coefficients scalar,
/// odd coefficients multiples of `X + Y`. `None` when not split.
pub fn split_check(m: &QMatrix, omega: &QuotientElem) -> Option<SplitForm> {
    assert!(
        m.rows() == 2 && m.cols() == 2,
        "split_check takes 2x2 matrices"
    );
    let Some((lo, hi)) = m.degree_range() else {
        return Some(SplitForm {
            g: QPoly::zero(),
            h: QPoly::zero(),
        });
    };
    let mut g = BTreeMap::new();
    let mut h = BTreeMap::new();
    for d in lo..=hi {
        let c = m.coefficient(d);
        if d.rem_euclid(2) == 0 {
            g.insert(d, is_scalar(&c)?);
        } else {
            h.insert(d, x_plus_y_multiple(&c, omega)?);
        }
    }
    let collect = |terms: BTreeMap<i64, QuotientElem>| {
        terms
            .into_iter()
            .fold(QPoly::zero(), |acc, (d, c)| acc.add(&QPoly::monomial(c, d)))
    };
    Some(SplitForm {
        g: collect(g),
        h: collect(h),
    })
}

/// `g(t) = Σ_{k<n} b_k (1 + t²) t^{2k-2} + b_n t^{2n-2}` and
/// `h(t) = Σ_{k<=n} b_k t^{2k-1}`, with `b_k` the upper-right entries of
/// `(XY)^k`. Checked against the ξ-invariant of `K(1/p)`.
pub fn torus_gh(p: u64) -> Result<SplitForm> {
    let table = XYPowerTable::new(p)?;
    let n = table.n;
    let mut g = QPoly::zero();
    let mut h = QPoly::zero();
    for k in 1..=n {
        let b = table.b(k).clone();
        let e = 2 * k as i64;
        h = h.add(&QPoly::monomial(b.clone(), e - 1));
        g = g.add(&QPoly::monomial(b.clone(), e - 2));
        if k < n {
            g = g.add(&QPoly::monomial(b, e));
        }
    }
    let form = SplitForm { g, h };
    let torus = TwoBridgeFraction::new(1, p)?;
    let (xi, _, w) = dihedral_xi_wada(&presentation(&torus), p, &TWO_BRIDGE_ASSIGNMENT)?;
    if !equal_up_to_sign_shift(&form.det(&xi.omega()), &w) {
        return Err(Error::VerificationFailure(format!(
            "g² - (4+ω)h² differs from the K(1/{p}) invariant"
        )));
    }
    Ok(form)
}

fn shifted(p: &QPoly) -> QPoly {
    if p.is_zero() {
        p.clone()
    } else {
        p.shift(-p.min_degree())
    }
}

fn equal_up_to_sign_shift(a: &QPoly, b: &QPoly) -> bool {
    let (a, b) = (shifted(a), shifted(b));
    a == b || a == b.neg()
}

/// `q(t) = det[γ(g) - V_n γ(h)]` for the torus part.
pub fn torus_q(p: u64) -> Result<IntPoly> {
    torus_gh(p)?.f_polynomial(&dihedral_xi(p)?)
}

fn x_fox<R: Ring>(
    pres: &crate::knots::Presentation,
    rep: &MatrixRep<R>,
) -> Result<RingMatrix<LaurentPoly<R>>> {
    Ok(fox_blocks(pres, rep)?
        .swap_remove(0)
        .remove(&'x')
        .expect("generator x"))
}

/// `N(t) = Φ*(∂R/∂x) · adj Φ*(∂R₀/∂x) / det Φ*(∂R₀/∂x)`, with `R₀` the
/// relator of `K(1/p)`. Exact whenever `R` is a product of conjugates of
/// `R₀^{±1}` in the free group.
pub fn fox_quotient(f: &TwoBridgeFraction, p: u64) -> Result<(DihedralXi, QMatrix)> {
    if f.alpha() % p != 0 {
        return Err(Error::Precondition(format!(
            "{p} does not divide {}",
            f.alpha()
        )));
    }
    let xi = dihedral_xi(p)?;
    let pair = xi.base_pair();
    let pres = presentation(f);
    let pres0 = presentation(&TwoBridgeFraction::new(1, p)?);
    let (_, rep) = pair.search(&pres, &TWO_BRIDGE_ASSIGNMENT)?;
    let rep0 = pair.assign(&pres0, &TWO_BRIDGE_ASSIGNMENT)?;
    let a = x_fox(&pres, &rep)?;
    let a0 = x_fox(&pres0, &rep0)?;
    let det0 = a0.cofactor_det();
    let prod = a.mul(&a0.adjugate());
    let mut entries = Vec::with_capacity(4);
    for e in prod.entries() {
        entries.push(e.exact_div(&det0)?);
    }
    let n = RingMatrix::from_fn(2, 2, |i, j| entries[2 * i + j].clone());
    Ok((xi, n))
}

/// Split form of `N(t)`, or of `ξ(y)^{-1} t^{-1} N(t)` when `N` itself is
/// not split. Which of the two is split depends on the knot.
pub fn extract_gh(f: &TwoBridgeFraction, p: u64) -> Result<(DihedralXi, SplitForm)> {
    let (xi, n) = fox_quotient(f, p)?;
    let omega = xi.omega();
    if let Some(s) = split_check(&n, &omega) {
        return Ok((xi, s));
    }
    // ξ(y) is an involution
    let s = RingMatrix::from_constant(&xi.y, -1).mul(&n);
    match split_check(&s, &omega) {
        Some(form) => Ok((xi, form)),
        None => Err(Error::NotSplit),
    }
}

fn q_series(xi: &DihedralXi, k: u32) -> QMatrix {
    let yx = xi.y.mul(&xi.x);
    (0..=k).fold(QMatrix::zeros(2, 2), |acc, j| {
        acc.add(&RingMatrix::from_constant(&yx.pow(j), 2 * j as i64))
    })
}

/// `y^{-1} t^{-1} {(1 - yt) Q_k(t) yt + extra} (1 - xt)` under ξ, with
/// `Q_k(t) = Σ_{j<=k} (yx)^j t^{2j}`.
pub fn q_element(xi: &DihedralXi, k: u32, extra: Option<(u32, i64)>) -> QMatrix {
    let c = |m: &RingMatrix<QuotientElem>, d: i64| RingMatrix::from_constant(m, d);
    let one = QMatrix::identity(2);
    let mut inner = one
        .sub(&c(&xi.y, 1))
        .mul(&q_series(xi, k))
        .mul(&c(&xi.y, 1));
    if let Some((e, d)) = extra {
        inner = inner.add(&c(&xi.y.mul(&xi.x).pow(e), d));
    }
    c(&xi.y, -1).mul(&inner).mul(&one.sub(&c(&xi.x, 1)))
}

/// The four elements shown split for `p = 2n + 1`. The fourth uses
/// `Q_{4n+1} = (1 + t^{2p}) Q_{2n}`; with `Q_{4n}` the element is not split.
pub fn torus_split_element(xi: &DihedralXi, case: u8) -> Result<QMatrix> {
    let n = xi.n as u32;
    Ok(match case {
        1 => q_element(xi, 2 * n, None),
        2 => q_element(xi, n, Some((n + 1, 2 * n as i64 + 2))),
        3 => q_element(xi, 3 * n + 1, Some((3 * n + 2, 6 * n as i64 + 4))),
        4 => q_element(xi, 4 * n + 1, None),
        _ => {
            return Err(Error::InvalidInput(format!(
                "no split element number {case}"
            )))
        }
    })
}

/// The certified factorization `D = F(t) F(-t)`, `F = q f`.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub d: IntPoly,
    pub q: IntPoly,
    pub f: IntPoly,
    pub big_f: IntPoly,
}

/// Canonical member of `{±t^k F(t), ±t^k F(-t)}`.
pub fn canonical_pair_member(f: &IntPoly) -> IntPoly {
    f.canonical_up_to_negation()
}

pub fn f_polynomial(f: &TwoBridgeFraction, p: u64) -> Result<Certificate> {
    let (xi, form) = extract_gh(f, p)?;
    let q = torus_q(p)?;
    let small_f = form.f_polynomial(&xi)?;
    let big_f = q.mul(&small_f).normalized();
    let d = dihedral_total(f, p)?;
    if big_f.mul(&big_f.negate_t()).normalized() != d {
        return Err(Error::CertificateFailure(format!(
            "F(t)F(-t) != D for {f}, p = {p}"
        )));
    }
    Ok(Certificate {
        d,
        q: canonical_pair_member(&q),
        f: canonical_pair_member(&small_f),
        big_f: canonical_pair_member(&big_f),
    })
}

/// Some `f` with `f(t) f(-t) = ±t^k D`, found by pairing irreducible
/// factors of `D` with their images under `t -> -t`.
pub fn factor_pairing(d: &IntPoly) -> Option<IntPoly> {
    factor_pairings(d, 1).into_iter().next()
}

/// Up to `limit` of the `f` with `f(t) f(-t) = ±t^k D`, one per choice of
/// side for each mirror pair of factors (the first pair's side is fixed,
/// since `f(-t)` is always another solution).
pub fn factor_pairings(d: &IntPoly, limit: usize) -> Vec<IntPoly> {
    if d.is_zero() {
        return Vec::new();
    }
    let fac = int_poly_factor(d);
    let Some(root) = exact_sqrt(&fac.content) else {
        return Vec::new();
    };
    let mut pool: Vec<(IntPoly, usize)> = fac.factors.clone();
    let mut fixed = IntPoly::constant(root);
    let mut pairs: Vec<(IntPoly, IntPoly)> = Vec::new();
    while let Some((g, e)) = pool.pop() {
        let mirror = g.negate_t().normalized();
        if mirror.unit_equiv(&g) {
            // g(-t) = ±g(t), so each side takes g^{e/2}
            if e % 2 != 0 {
                return Vec::new();
            }
            fixed = fixed.mul(&g.pow((e / 2) as u32));
            continue;
        }
        let Some(idx) = pool.iter().position(|(h, _)| h.unit_equiv(&mirror)) else {
            return Vec::new();
        };
        let (h, e2) = pool.remove(idx);
        if e2 != e {
            return Vec::new();
        }
        pairs.push((g.pow(e as u32), h.pow(e as u32)));
    }
    let free = pairs.len().saturating_sub(1).min(20);
    let mut out = Vec::new();
    for mask in 0u64..1 << free {
        if out.len() >= limit {
            break;
        }
        let f = pairs
            .iter()
            .enumerate()
            .fold(fixed.clone(), |acc, (i, (g, h))| {
                let flip = i > 0 && (mask >> (i - 1)) & 1 == 1;
                acc.mul(if flip { h } else { g })
            });
        if f.mul(&f.negate_t()).unit_equiv(d) {
            out.push(canonical_pair_member(&f));
        }
    }
    out
}

fn exact_sqrt(c: &BigInt) -> Option<BigInt> {
    let a = num_traits::Signed::abs(c);
    let r = a.sqrt();
    (&r * &r == a).then_some(r)
}

/// `(1+t)^n Δ_{K(1/p)}(t)^{n-1}`.
pub fn torus_q_prediction(p: u64) -> Result<IntPoly> {
    let n = ((p - 1) / 2) as u32;
    let delta = alexander(&presentation(&TwoBridgeFraction::new(1, p)?))?;
    Ok(one_plus_t().pow(n).mul(&delta.pow(n - 1)).normalized())
}

fn one_plus_t() -> IntPoly {
    IntPoly::from_i64s(0, &[1, 1])
}

/// `q(t) ≐ (1+t)^n Δ_{K(1/p)}^{n-1}`, allowing `q(-t)` in place of `q(t)`.
pub fn torus_q_formula_holds(p: u64) -> Result<bool> {
    let q = torus_q(p)?;
    let target = torus_q_prediction(p)?;
    Ok(q.unit_equiv(&target) || q.negate_t().unit_equiv(&target))
}

/// `F(t) (1+t)^n ≡ Δ(t)^n (mod p)` up to units, allowing `F(-t)` in place
/// of `F(t)`.
pub fn modp_f_congruence(delta: &IntPoly, big_f: &IntPoly, p: u64) -> bool {
    let n = ((p - 1) / 2) as u32;
    let target = ModPoly::reduce(&delta.pow(n), p);
    [big_f.clone(), big_f.negate_t()].iter().any(|g| {
        let lhs = ModPoly::reduce(&g.mul(&one_plus_t().pow(n)), p);
        !lhs.is_zero() && lhs.unit_equiv(&target)
    })
}

/// Maximum number of candidate `F` tried by [`conjecture_report`].
const MAX_CANDIDATES: usize = 1 << 12;

/// Outcome of every factorization check for one knot and prime.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjectureReport {
    pub fraction: TwoBridgeFraction,
    pub p: u64,
    pub d: IntPoly,
    /// the constructive route's certificate, when `N(t)` splits
    pub certificate: Option<Certificate>,
    /// `F` from the certificate, else from [`factor_pairings`]; one
    /// satisfying the mod `p` congruence when there is one
    pub big_f: Option<IntPoly>,
    pub modp_f_congruence: bool,
    /// `D (1+t)^n (1-t)^n ≡ Δ(t)^n Δ(-t)^n (mod p)`
    pub modp_total: bool,
    pub torus_q_formula_holds: Option<bool>,
    /// an H(p) continued fraction was found within the search bounds
    pub hp_member: bool,
}

impl ConjectureReport {
    pub fn factorization_exists(&self) -> bool {
        self.big_f.is_some()
    }

    pub fn split(&self) -> bool {
        self.certificate.is_some()
    }

    /// `{"D", "F", "q", "f", "split", "hp", "modp", "remark53"}`; `hp` is
    /// `"inconclusive"` when the bounded search found nothing.
    pub fn to_json(&self) -> serde_json::Value {
        let opt = |p: Option<&IntPoly>| p.map_or(serde_json::Value::Null, poly_to_json);
        serde_json::json!({
            "fraction": self.fraction.to_string(),
            "p": self.p,
            "D": poly_to_json(&self.d),
            "F": opt(self.big_f.as_ref()),
            "q": opt(self.certificate.as_ref().map(|c| &c.q)),
            "f": opt(self.certificate.as_ref().map(|c| &c.f)),
            "split": self.split(),
            "hp": if self.hp_member { "yes" } else { "inconclusive" },
            "modp": self.modp_f_congruence,
            "modp_total": self.modp_total,
            "remark53": self.torus_q_formula_holds,
        })
    }
}

pub fn conjecture_report(
    f: &TwoBridgeFraction,
    p: u64,
    bounds: &HpBounds,
) -> Result<ConjectureReport> {
    if f.alpha() % p != 0 {
        return Err(Error::Precondition(format!(
            "{p} does not divide {}",
            f.alpha()
        )));
    }
    let delta = alexander(&presentation(f))?;
    let d = dihedral_total(f, p)?;
    let certificate = match f_polynomial(f, p) {
        Ok(c) => Some(c),
        Err(Error::NotSplit | Error::NonExactDivision { .. }) => None,
        Err(e) => return Err(e),
    };
    // F is only determined up to swapping sides within mirror pairs
    let mut candidates = match &certificate {
        Some(c) => vec![c.q.mul(&c.f), c.q.mul(&c.f.negate_t())],
        None => factor_pairings(&d, MAX_CANDIDATES),
    };
    let matching = candidates
        .iter()
        .position(|bf| modp_f_congruence(&delta, bf, p));
    let big_f = match matching {
        Some(i) => Some(candidates.swap_remove(i)),
        None => candidates.into_iter().next(),
    };
    Ok(ConjectureReport {
        fraction: *f,
        p,
        modp_f_congruence: matching.is_some(),
        modp_total: modp_congruence_from(&delta, &d, p).holds,
        torus_q_formula_holds: Some(torus_q_formula_holds(p)?),
        hp_member: hp_expansion_any(f, p, bounds).is_some(),
        d,
        certificate,
        big_f,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ipoly;

    fn xi3() -> DihedralXi {
        dihedral_xi(3).unwrap()
    }

    #[test]
    fn split_examples() {
        let xi = xi3();
        let omega = xi.omega();
        let one = QMatrix::identity(2);
        let c = |m: &RingMatrix<QuotientElem>, d| RingMatrix::from_constant(m, d);
        let one_plus_t2 = one.add(&c(&RingMatrix::identity(2), 2));
        let s = split_check(&one_plus_t2, &omega).unwrap();
        assert_eq!(
            s.g,
            QPoly::from_coeffs(
                0,
                vec![
                    QuotientElem::from_i64(1),
                    QuotientElem::from_i64(0),
                    QuotientElem::from_i64(1)
                ]
            )
        );
        assert!(s.h.is_zero());
        let x_plus_y_t = c(&xi.x.add(&xi.y), 1);
        let s = split_check(&x_plus_y_t, &omega).unwrap();
        assert_eq!(s.h, QPoly::monomial(QuotientElem::from_i64(1), 1));
        assert_eq!(s.matrix(&omega), x_plus_y_t);
        assert!(split_check(&c(&xi.x, 1), &omega).is_none());
        assert!(split_check(&c(&xi.x, 0), &omega).is_none());
    }

    #[test]
    fn torus_parts() {
        for p in [3, 5, 7] {
            torus_gh(p).unwrap();
            assert!(torus_q_formula_holds(p).unwrap());
        }
        assert!(
            torus_q(3).unwrap().unit_equiv(&ipoly(&[1, 1]))
                || torus_q(3).unwrap().unit_equiv(&ipoly(&[1, -1]))
        );
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(
            factor_pairing(&ipoly(&[1, 0, -1])),
            Some(canonical_pair_member(&ipoly(&[1, 1])))
        );
        assert_eq!(factor_pairing(&ipoly(&[1, 1, 1])), None);
        // 4 - t²  = (2 - t)(2 + t)
        assert_eq!(
            factor_pairing(&ipoly(&[4, 0, -1])),
            Some(canonical_pair_member(&ipoly(&[2, 1])))
        );
        // 2(1 - t²) has non-square content
        assert_eq!(factor_pairing(&ipoly(&[2, 0, -2])), None);
    }

    #[test]
    fn torus_knot_n_is_identity() {
        let (xi, n) = fox_quotient(&TwoBridgeFraction::new(1, 5).unwrap(), 5).unwrap();
        assert_eq!(n, QMatrix::identity(2));
        let form = split_check(&n, &xi.omega()).unwrap();
        assert_eq!(form.g, QPoly::one());
        assert!(form.h.is_zero());
    }

    #[test]
    fn split_elements() {
        let xi = xi3();
        for case in 1..=4 {
            assert!(
                split_check(&torus_split_element(&xi, case).unwrap(), &xi.omega()).is_some(),
                "case {case}"
            );
        }
        assert!(torus_split_element(&xi, 5).is_err());
        assert!(split_check(&q_element(&xi, 4 * xi.n as u32, None), &xi.omega()).is_none());
        // case 4 is (1 + t^6) times case 1
        let one = QMatrix::identity(2);
        let factor = one.add(&RingMatrix::from_constant(&RingMatrix::identity(2), 6));
        assert_eq!(
            torus_split_element(&xi, 4).unwrap(),
            factor.mul(&torus_split_element(&xi, 1).unwrap())
        );
    }
}

//! Published example values, used by the golden tests, the acceptance
//! suite and `talex verify paper`.

use crate::algebra::{int_matrix, ipoly, IntMatrix, IntPoly};
use crate::knots::{alexander, presentation, Presentation, TwoBridgeFraction};
use num_bigint::BigInt;

fn fr(s: &str) -> TwoBridgeFraction {
    s.parse().expect("catalog fractions are valid")
}

/// `Σ c t^d` from `(d, c)` pairs.
pub fn sparse(terms: &[(i64, i64)]) -> IntPoly {
    terms.iter().fold(IntPoly::zero(), |acc, &(d, c)| {
        acc.add(&IntPoly::monomial(BigInt::from(c), d))
    })
}

pub fn prod(factors: &[(IntPoly, u32)]) -> IntPoly {
    factors
        .iter()
        .fold(IntPoly::one(), |acc, (f, e)| acc.mul(&f.pow(*e)))
        .normalized()
}

pub fn delta_1_5() -> IntPoly {
    ipoly(&[1, -1, 1, -1, 1])
}

pub fn both(f: &IntPoly) -> IntPoly {
    f.mul(&f.negate_t())
}

pub fn nqp_cases() -> Vec<(&'static str, u64, u64, IntPoly)> {
    let i_base = prod(&[
        (sparse(&[(0, 1), (8, -1)]), 1),
        (sparse(&[(0, 1), (8, 1), (16, 1)]), 1),
    ]);
    let ii_base = prod(&[
        (sparse(&[(0, 1), (10, -1)]), 1),
        (sparse(&[(0, 1), (10, 1), (20, 1)]), 1),
    ]);
    let iii_base = prod(&[
        (sparse(&[(0, 1), (6, -1)]), 3),
        (sparse(&[(0, 1), (6, 1), (12, 1), (18, 1), (24, 1)]), 3),
    ]);
    vec![
        ("1/3", 4, 3, i_base.clone()),
        (
            "1/9",
            4,
            3,
            i_base.mul(&sparse(&[(0, 1), (24, 1), (48, 1)]).pow(3)),
        ),
        (
            "5/27",
            4,
            3,
            i_base
                .mul(&sparse(&[(0, 16), (8, 31), (16, 16)]).pow(2))
                .mul(&sparse(&[(0, 1), (8, -79), (16, 129), (24, -79), (32, 1)]).pow(2)),
        ),
        ("1/3", 5, 3, ii_base.clone()),
        (
            "1/9",
            5,
            3,
            ii_base.mul(&sparse(&[(0, 1), (30, 1), (60, 1)]).pow(3)),
        ),
        (
            "5/27",
            5,
            3,
            ii_base
                .mul(&sparse(&[(0, 1), (10, -228), (20, -314), (30, -228), (40, 1)]).pow(2))
                .mul(&sparse(&[(0, 1024), (20, 1201), (40, 1024)])),
        ),
        ("1/5", 3, 5, iii_base.clone()),
        (
            "19/85",
            3,
            5,
            iii_base
                .mul(&sparse(&[
                    (0, 64),
                    (6, 64),
                    (12, 48),
                    (18, 12),
                    (24, 49),
                    (30, 12),
                    (36, 48),
                    (42, 64),
                    (48, 64),
                ]))
                .mul(
                    &sparse(&[
                        (0, 1),
                        (6, -1243),
                        (12, 3335),
                        (18, 1570),
                        (24, -2423),
                        (30, 6320),
                        (36, -992),
                        (42, -2181),
                        (48, 9451),
                        (54, -2181),
                        (60, -992),
                        (66, 6320),
                        (72, -2423),
                        (78, 1570),
                        (84, 3335),
                        (90, -1243),
                        (96, 1),
                    ])
                    .pow(2),
                ),
        ),
    ]
}

pub fn over_delta(pres: &Presentation, f: &IntPoly) -> IntPoly {
    let delta = alexander(pres).expect("catalog presentations are valid");
    delta
        .mul(f)
        .exact_div(&ipoly(&[1, -1]))
        .expect("Δ(1) = ±1")
        .normalized()
}

pub fn f_19_85() -> IntPoly {
    ipoly(&[1, -3, -2, 4, -1, 0, -4, -3, 7, -3, -4, 0, -1, 4, -2, -3, 1])
}

pub fn f_21_115() -> IntPoly {
    ipoly(&[
        4, 2, -3, -1, 0, -8, -3, 4, 0, 1, 9, 1, 0, 4, -3, -8, 0, -1, -3, 2, 4,
    ])
}

/// `(label, fraction, p, D)` for the dihedral examples.
pub fn dihedral_cases() -> Vec<(&'static str, &'static str, u64, IntPoly)> {
    let d15 = prod(&[(ipoly(&[1, 0, -1]), 2), (both(&delta_1_5()), 1)]);
    vec![
        ("1/3 p=3", "1/3", 3, ipoly(&[1, 0, -1])),
        (
            "1/9 p=3",
            "1/9",
            3,
            prod(&[
                (ipoly(&[1, 0, -1]), 1),
                (ipoly(&[1, 0, 0, -1, 0, 0, 1]), 1),
                (ipoly(&[1, 0, 0, 1, 0, 0, 1]), 1),
            ]),
        ),
        (
            "5/27 p=3",
            "5/27",
            3,
            prod(&[
                (ipoly(&[1, 0, -1]), 1),
                (ipoly(&[1, 1, -1, 1, 1]), 1),
                (ipoly(&[1, -1, -1, -1, 1]), 1),
            ]),
        ),
        ("1/5 p=5", "1/5", 5, d15.clone()),
        (
            "19/85 p=5",
            "19/85",
            5,
            d15.mul(&both(&f_19_85())).normalized(),
        ),
        (
            "21/115 p=5",
            "21/115",
            5,
            d15.mul(&both(&f_21_115())).normalized(),
        ),
    ]
}

/// `(label, fraction, p, total)` for the binary dihedral examples.
pub fn binary_dihedral_cases() -> Vec<(&'static str, &'static str, u64, IntPoly)> {
    let base = prod(&[
        (ipoly(&[1, 0, 1]), 4),
        (sparse(&[(0, 1), (2, -1), (4, 1), (6, -1), (8, 1)]), 2),
    ]);
    let f = sparse(&[
        (0, 1),
        (2, 13),
        (4, 26),
        (6, 20),
        (8, 13),
        (10, 22),
        (12, 40),
        (14, 33),
        (16, 25),
        (18, 33),
        (20, 40),
        (22, 22),
        (24, 13),
        (26, 20),
        (28, 26),
        (30, 13),
        (32, 1),
    ]);
    vec![
        (
            "1/9 p=3",
            "1/9",
            3,
            prod(&[
                (ipoly(&[1, 0, 1]), 2),
                (sparse(&[(0, 1), (6, -1), (12, 1)]), 2),
            ]),
        ),
        (
            "5/27 p=3",
            "5/27",
            3,
            prod(&[
                (ipoly(&[1, 0, 1]), 2),
                (sparse(&[(0, 1), (2, 3), (4, 1), (6, 3), (8, 1)]), 2),
            ]),
        ),
        ("1/5 p=5", "1/5", 5, base.clone()),
        ("19/85 p=5", "19/85", 5, base.mul(&f.pow(2)).normalized()),
    ]
}

pub struct KmetaCase {
    pub label: &'static str,
    pub pres: Presentation,
    pub p: u64,
    pub k: i64,
    pub preferred: Vec<u64>,
    /// `F` with total `= Δ F / (1 - t)`
    pub big_f: IntPoly,
    /// the power of `t` the quotient is a polynomial in
    pub period: i64,
}

/// K-metacyclic examples. `published_1_9` selects the printed value for
/// K(1/9), which contradicts the fibered degree bound; the default is the
/// computed value `(1-t^6)(1+t^6+t^12)^3`.
pub fn kmeta_cases(published_1_9: bool) -> Vec<KmetaCase> {
    let two = |s: &str| presentation(&fr(s));
    let one_minus_t6 = sparse(&[(0, 1), (6, -1)]);
    let f_1_9 = if published_1_9 {
        one_minus_t6.mul(&sparse(&[(0, 1), (6, -1), (12, 1)]))
    } else {
        prod(&[
            (one_minus_t6.clone(), 1),
            (sparse(&[(0, 1), (6, 1), (12, 1)]), 3),
        ])
    };
    let case = |label, pres: Presentation, p, k, big_f, period| {
        let preferred = if pres.generators().len() == 3 {
            vec![0, 1, 0]
        } else {
            vec![0, 1]
        };
        KmetaCase {
            label,
            pres,
            p,
            k,
            preferred,
            big_f,
            period,
        }
    };
    vec![
        case("1/3 p=7 k=-2", two("1/3"), 7, -2, one_minus_t6.clone(), 6),
        case("1/9 p=7 k=-2", two("1/9"), 7, -2, f_1_9, 6),
        case(
            "5/27 p=7 k=-2",
            two("5/27"),
            7,
            -2,
            one_minus_t6.mul(&sparse(&[(0, 1), (6, -7), (12, 9), (18, -7), (24, 1)])),
            6,
        ),
        case(
            "5/9 p=5 k=2",
            two("5/9"),
            5,
            2,
            sparse(&[(0, 1), (4, -1)]),
            4,
        ),
        case(
            "5/9 p=11 k=2",
            two("5/9"),
            11,
            2,
            sparse(&[(0, 1), (10, -1)]),
            10,
        ),
        case(
            "5/9 p=7 k=2",
            two("5/9"),
            7,
            2,
            sparse(&[(0, 1), (3, -1)]).pow(2),
            3,
        ),
        case(
            "8_5 p=7 k=-2",
            Presentation::preset("8_5").expect("8_5 is a preset"),
            7,
            -2,
            one_minus_t6.mul(&sparse(&[(0, 1), (6, -72), (12, -82), (18, -72), (24, 1)])),
            6,
        ),
    ]
}

/// The four non-K-metacyclic invariants of 8_5 as
/// `(label, p, assignment, expected, permutation)`: permutation entries are
/// `Δ f(t) f(-t) / (1 - t)` for the `p`-dimensional dihedral representation,
/// the others are binary dihedral totals.
pub fn knot_8_5_cases() -> Vec<(&'static str, u64, Vec<u64>, IntPoly, bool)> {
    let pres = Presentation::preset("8_5").expect("8_5 is a preset");
    let f1 = ipoly(&[1, 1]).mul(&ipoly(&[1, 1, -2, 1, 1]));
    let f2 = ipoly(&[1, 1])
        .pow(3)
        .mul(&ipoly(&[1, 2, 0, -7, -13, -13, -11, -13, -13, -7, 0, 2, 1]));
    let e3 = prod(&[
        (ipoly(&[1, 0, 1]), 2),
        (sparse(&[(0, 1), (2, 5), (4, 4), (6, 5), (8, 1)]), 2),
    ]);
    let e4 = prod(&[
        (ipoly(&[1, 0, 1]), 6),
        (
            sparse(&[
                (0, 1),
                (2, 4),
                (4, 2),
                (6, 19),
                (8, 13),
                (10, 37),
                (12, 17),
                (14, 37),
                (16, 13),
                (18, 19),
                (20, 2),
                (22, 4),
                (24, 1),
            ]),
            2,
        ),
    ]);
    vec![
        (
            "8_5 perm p=3",
            3,
            vec![0, 1, 0],
            over_delta(&pres, &both(&f1)),
            true,
        ),
        (
            "8_5 perm p=7",
            7,
            vec![0, 0, 1],
            over_delta(&pres, &both(&f2)),
            true,
        ),
        ("8_5 binary p=3", 3, vec![0, 1, 0], e3, false),
        ("8_5 binary p=7", 7, vec![0, 0, 1], e4, false),
    ]
}

/// `(fraction, p, F, f)` printed for the factorization `D = F(t) F(-t)`;
/// each entry gives `F` or the non-torus part `f` (or both).
pub fn factorization_cases() -> Vec<(&'static str, u64, Option<IntPoly>, Option<IntPoly>)> {
    let q5 = ipoly(&[1, 1]).pow(2).mul(&delta_1_5());
    vec![
        ("1/3", 3, Some(ipoly(&[1, 1])), None),
        (
            "1/9",
            3,
            Some(ipoly(&[1, 1]).mul(&ipoly(&[1, 0, 0, 1, 0, 0, 1]))),
            None,
        ),
        (
            "5/27",
            3,
            Some(ipoly(&[1, 1]).mul(&ipoly(&[1, 1, -1, 1, 1]))),
            None,
        ),
        ("1/5", 5, Some(q5), None),
        ("19/85", 5, None, Some(f_19_85())),
        ("21/115", 5, None, Some(f_21_115())),
    ]
}

/// The printed `U_4` and `U_5`.
pub fn printed_u(n: usize) -> Option<IntMatrix> {
    match n {
        4 => Some(int_matrix(&[
            &[4, 3, 2, 1, 0, -1, -2, -3],
            &[10, 4, 1, 0, 0, 0, -1, -4],
            &[6, 1, 0, 0, 0, 0, 0, -1],
            &[1, 0, 0, 0, 0, 0, 0, 0],
            &[1, 1, 1, 1, 1, 1, 1, 1],
            &[6, 3, 1, 0, 0, 1, 3, 6],
            &[5, 1, 0, 0, 0, 0, 1, 5],
            &[1, 0, 0, 0, 0, 0, 0, 1],
        ])),
        5 => Some(int_matrix(&[
            &[5, 4, 3, 2, 1, 0, -1, -2, -3, -4],
            &[20, 10, 4, 1, 0, 0, 0, -1, -4, -10],
            &[21, 6, 1, 0, 0, 0, 0, 0, -1, -6],
            &[8, 1, 0, 0, 0, 0, 0, 0, 0, -1],
            &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
            &[10, 6, 3, 1, 0, 0, 1, 3, 6, 10],
            &[15, 5, 1, 0, 0, 0, 0, 1, 5, 15],
            &[7, 1, 0, 0, 0, 0, 0, 0, 1, 7],
            &[1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        ])),
        _ => None,
    }
}

/// The printed `V_1` to `V_5`.
pub fn printed_v(n: usize) -> Option<IntMatrix> {
    let all: Vec<IntMatrix> = vec![
        int_matrix(&[&[1]]),
        int_matrix(&[&[3, -5], &[1, -2]]),
        int_matrix(&[&[5, -7, 14], &[5, -9, 21], &[1, -2, 5]]),
        int_matrix(&[
            &[7, -9, 18, -45],
            &[14, -23, 51, -132],
            &[7, -13, 31, -84],
            &[1, -2, 5, -14],
        ]),
        int_matrix(&[
            &[9, -11, 22, -55, 154],
            &[30, -46, 99, -253, 715],
            &[27, -47, 108, -286, 825],
            &[9, -17, 41, -112, 330],
            &[1, -2, 5, -14, 42],
        ]),
    ];
    n.checked_sub(1).and_then(|i| all.into_iter().nth(i))
}

//! Single computations behind the non-verify subcommands.

use num_integer::Integer;
use talex_core::factorization::conjecture_report;
use talex_core::knots::{alexander, hp_expansion_any, HpBounds, Presentation, TwoBridgeFraction};
use talex_core::twisted::{
    binary_dihedral_total, dihedral_total, kmeta_total, metacyclic_total, nqp_total,
    TWO_BRIDGE_ASSIGNMENT,
};
use talex_core::{Error, Result};

use crate::output::{Field, Record};
use crate::{KnotArg, MetacyclicRep};

const MAX_DEGREE_VAR: &str = "TALEX_MAX_DEGREE";

/// Refuses work whose output degree could exceed `TALEX_MAX_DEGREE`.
/// The bound used is `dim * relator length`, which dominates the degree of
/// every Wada quotient for a deficiency-one presentation.
fn guard(dim: u64, size: u64) -> Result<()> {
    let Ok(raw) = std::env::var(MAX_DEGREE_VAR) else {
        return Ok(());
    };
    let cap: u64 = raw
        .trim()
        .parse()
        .map_err(|_| Error::InvalidInput(format!("{MAX_DEGREE_VAR}={raw} is not a number")))?;
    let estimate = dim.saturating_mul(size);
    if estimate > cap {
        return Err(Error::Precondition(format!(
            "degree bound {estimate} exceeds {MAX_DEGREE_VAR}={cap}"
        )));
    }
    Ok(())
}

fn relator_size(pres: &Presentation) -> u64 {
    pres.relators()
        .iter()
        .map(|r| r.letters().len() as u64)
        .sum()
}

fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

fn knot_field(f: &TwoBridgeFraction) -> Field {
    Field::Text(f.to_string())
}

pub fn alexander_cmd(knot: &KnotArg) -> Result<Record> {
    let pres = knot.presentation()?;
    guard(1, relator_size(&pres))?;
    Ok(Record::default()
        .with("knot", Field::Text(knot.label()))
        .with("alexander", Field::Poly(alexander(&pres)?)))
}

pub fn dihedral(f: &TwoBridgeFraction, p: u64, factor: bool) -> Result<Record> {
    guard(p - 1, 2 * f.alpha())?;
    if !factor {
        return Ok(Record::default()
            .with("knot", knot_field(f))
            .with("p", Field::Int(p as i64))
            .with("D", Field::Poly(dihedral_total(f, p)?)));
    }
    let r = conjecture_report(f, p, &HpBounds::default())?;
    let cert = r.certificate.as_ref();
    Ok(Record::default()
        .with("knot", knot_field(f))
        .with("p", Field::Int(p as i64))
        .with("D", Field::Poly(r.d.clone()))
        .with("F", Field::MaybePoly(r.big_f.clone()))
        .with("q", Field::MaybePoly(cert.map(|c| c.q.clone())))
        .with("f", Field::MaybePoly(cert.map(|c| c.f.clone())))
        .with("split", Field::Bool(r.split()))
        .with(
            "hp",
            Field::Text(if r.hp_member { "yes" } else { "inconclusive" }.into()),
        )
        .with("modp", Field::Bool(r.modp_f_congruence))
        .with("modp_total", Field::Bool(r.modp_total))
        .with("remark53", Field::MaybeBool(r.torus_q_formula_holds)))
}

pub fn binary_dihedral(f: &TwoBridgeFraction, p: u64) -> Result<Record> {
    guard(2 * (p - 1), 2 * f.alpha())?;
    Ok(Record::default()
        .with("knot", knot_field(f))
        .with("p", Field::Int(p as i64))
        .with("total", Field::Poly(binary_dihedral_total(f, p)?)))
}

pub fn metacyclic(f: &TwoBridgeFraction, p: u64, q: u64, rep: MetacyclicRep) -> Result<Record> {
    let (dim, name) = match rep {
        MetacyclicRep::Irr => ((p - 1) * euler_phi(2 * q), "irr"),
        MetacyclicRep::Max => (2 * p * q, "max"),
    };
    guard(dim, 2 * f.alpha())?;
    let total = match rep {
        MetacyclicRep::Irr => metacyclic_total(f, q, p)?,
        MetacyclicRep::Max => nqp_total(f, q, p)?,
    };
    Ok(Record::default()
        .with("knot", knot_field(f))
        .with("p", Field::Int(p as i64))
        .with("q", Field::Int(q as i64))
        .with("rep", Field::Text(name.into()))
        .with("total", Field::Poly(total)))
}

pub fn kmeta(knot: &KnotArg, p: u64, k: i64) -> Result<Record> {
    let pres = knot.presentation()?;
    guard(p, relator_size(&pres))?;
    // x -> s, y -> s a, any further generator -> s
    let mut preferred = TWO_BRIDGE_ASSIGNMENT.to_vec();
    preferred.resize(pres.generators().len(), 0);
    let r = kmeta_total(&pres, p, k, &preferred)?;
    Ok(Record::default()
        .with("knot", Field::Text(knot.label()))
        .with("p", Field::Int(p as i64))
        .with("k", Field::Int(k))
        .with("m", Field::Int(r.m as i64))
        .with("total", Field::Poly(r.total))
        .with("quotient", Field::MaybePoly(r.quotient))
        .with("conjecture_a", Field::Bool(r.conjecture_a)))
}

pub fn hp_test(f: &TwoBridgeFraction, p: u64, max_len: usize) -> Result<Record> {
    if !f.alpha().is_multiple_of(p) {
        return Err(Error::Precondition(format!(
            "{p} does not divide {}",
            f.alpha()
        )));
    }
    let bounds = HpBounds {
        max_len,
        ..HpBounds::default()
    };
    let found = hp_expansion_any(f, p, &bounds);
    let (via, cf) = match &found {
        Some((g, c)) => (
            Field::Text(g.to_string()),
            Field::Raw(serde_json::json!(c.0)),
        ),
        None => (
            Field::Text("none".into()),
            Field::Raw(serde_json::Value::Null),
        ),
    };
    Ok(Record::default()
        .with("knot", knot_field(f))
        .with("p", Field::Int(p as i64))
        .with(
            "hp",
            Field::Text(
                if found.is_some() {
                    "yes"
                } else {
                    "inconclusive"
                }
                .into(),
            ),
        )
        .with("fraction", via)
        .with("continued_fraction", cf))
}

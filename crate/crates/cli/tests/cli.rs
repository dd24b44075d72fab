use std::process::{Command, Output};

use serde_json::Value;
use talex_core::algebra::ipoly;
use talex_core::algebra::json::{poly_from_json, poly_to_json};
use talex_core::catalog::{dihedral_cases, factorization_cases, sparse};
use talex_core::factorization::canonical_pair_member;

fn talex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_talex"))
        .args(args)
        .env_remove("TALEX_MAX_DEGREE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = talex(&all);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn alexander_text() {
    let o = talex(&["alexander", "1/3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("alexander: 1 - t + t^2"));
}

#[test]
fn metacyclic_max() {
    let v = json(&["metacyclic", "1/3", "-p", "3", "-q", "4", "--rep", "max"]);
    let expect = sparse(&[(0, 1), (8, -1)]).mul(&sparse(&[(0, 1), (8, 1), (16, 1)]));
    assert_eq!(poly_from_json(&v["total"]).unwrap(), expect);
}

#[test]
fn dihedral_factor_json() {
    let v = json(&["dihedral", "5/27", "-p", "3", "--factor"]);
    let d = dihedral_cases()
        .into_iter()
        .find(|c| c.1 == "5/27")
        .unwrap()
        .3;
    assert_eq!(poly_from_json(&v["D"]).unwrap(), d);
    let (_, _, printed_f, _) = factorization_cases()
        .into_iter()
        .find(|c| c.0 == "5/27")
        .unwrap();
    let got_small = poly_from_json(&v["f"]).unwrap();
    let q = poly_from_json(&v["q"]).unwrap();
    assert_eq!(q, ipoly(&[1, -1]));
    // F is reported as q f(t) or q f(-t), whichever satisfies the mod p congruence
    let got_f = poly_from_json(&v["F"]).unwrap();
    assert!(
        got_f == q.mul(&got_small).normalized()
            || got_f == q.mul(&got_small.negate_t()).normalized()
    );
    assert_eq!(
        canonical_pair_member(&q.mul(&got_small)),
        canonical_pair_member(&printed_f.unwrap())
    );
    assert_eq!(v["split"], true);
    assert_eq!(v["modp"], true);
    // F(t) F(-t) = D
    assert_eq!(got_f.mul(&got_f.negate_t()).normalized(), d);
}

#[test]
fn non_split_is_a_finding() {
    // the figure-eight knot has no split certificate for p = 5
    let v = json(&["dihedral", "2/5", "-p", "5", "--factor"]);
    assert_eq!(v["split"], false);
    assert!(v["f"].is_null());
}

#[test]
fn exit_codes() {
    assert_eq!(
        talex(&["dihedral", "1/5", "-p", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        talex(&["metacyclic", "1/3", "-p", "3", "-q", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        talex(&["kmeta", "1/3", "-p", "7", "-k", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(talex(&["alexander", "1/4"]).status.code(), Some(1));
    assert_eq!(talex(&["alexander"]).status.code(), Some(1));
    assert_eq!(talex(&["verify", "nonsense"]).status.code(), Some(1));
    assert_eq!(talex(&["--help"]).status.code(), Some(0));
}

#[test]
fn degree_guard() {
    let o = Command::new(env!("CARGO_BIN_EXE_talex"))
        .args(["dihedral", "19/85", "-p", "5"])
        .env("TALEX_MAX_DEGREE", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("TALEX_MAX_DEGREE"));
}

#[test]
fn json_round_trip() {
    for args in [
        vec!["dihedral", "19/85", "-p", "5"],
        vec!["binary-dihedral", "5/27", "-p", "3"],
        vec!["kmeta", "--preset", "8_5", "-p", "7", "-k", "-2"],
    ] {
        let v = json(&args);
        for (key, poly) in v.as_object().unwrap() {
            if poly.get("coeffs").is_none() {
                continue;
            }
            let p = poly_from_json(poly).unwrap();
            assert_eq!(&poly_to_json(&p.normalized()), poly, "{key}");
        }
    }
}

#[test]
fn verify_paper_passes() {
    let o = talex(&["verify", "paper"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let passed = out.lines().filter(|l| l.starts_with("PASS")).count();
    assert!(passed >= 30, "{out}");
    assert!(out.contains("REPORT kmeta 1/9"));
}

#[test]
fn jobs_do_not_change_results() {
    for suite in [
        vec![
            "verify", "census", "--seed", "7", "--max-n", "200", "--count", "12",
        ],
        vec!["verify", "appendix", "--max-n", "10"],
    ] {
        let runs: Vec<Value> = ["1", "4"]
            .iter()
            .map(|j| {
                let mut args = suite.clone();
                args.extend(["--jobs", j]);
                json(&args)
            })
            .collect();
        assert_eq!(runs[0], runs[1]);
        assert_eq!(runs[0]["failed"], 0);
    }
}

#[test]
fn census_is_seeded() {
    let a = json(&["verify", "census", "--seed", "3", "--count", "5"]);
    let b = json(&["verify", "census", "--seed", "3", "--count", "5"]);
    let c = json(&["verify", "census", "--seed", "4", "--count", "5"]);
    assert_eq!(a, b);
    assert_ne!(a["items"], c["items"]);
}

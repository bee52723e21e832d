use std::process::{Command, Output};

use serde_json::Value;
use torus_skein::laurent::GaussLaurent;
use torus_skein::{KMElement, LaurentPoly, QTElement, TorusKnotParam, TorusSkein};

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torus-skein"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> String {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = cli(&all);
    assert!(out.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim().to_string()
}

fn round_trips<T: serde::de::DeserializeOwned + serde::Serialize>(s: &str) -> T {
    let v: T = serde_json::from_str(s).unwrap();
    let again: Value = serde_json::to_value(&v).unwrap();
    assert_eq!(again, serde_json::from_str::<Value>(s).unwrap());
    v
}

#[test]
fn ts_mul_json() {
    let s = json(&["ts-mul", "1,0", "0,1"]);
    let prod: TorusSkein = round_trips(&s);
    let mut want = TorusSkein::basis(1, 1).scale(&LaurentPoly::t_pow(1));
    want.add_term(1, -1, LaurentPoly::t_pow(-1));
    assert_eq!(prod, want);

    let again = json(&["ts-mul", &s, "(-1,2)"]);
    let prod2: TorusSkein = round_trips(&again);
    assert_eq!(prod2, &want * &TorusSkein::basis(-1, 2));
}

#[test]
fn pi_json() {
    let s = json(&["pi", "--p", "2", "1,-7"]);
    let triples: Vec<(u32, u32, LaurentPoly)> = serde_json::from_str(&s).unwrap();
    let e = KMElement::from_triples(TorusKnotParam::new(2).unwrap(), triples).unwrap();
    assert_eq!(serde_json::to_string(&e).unwrap(), s);

    assert_eq!(json(&["pi", "--p", "3", "--peripheral"]), "[]");
    assert_eq!(json(&["pi", "--p", "-4", "--peripheral"]), "[]");
}

#[test]
fn aideal_json() {
    let s = json(&["aideal", "--p", "2"]);
    let v: Value = serde_json::from_str(&s).unwrap();
    let poly: QTElement = round_trips(&v["polynomial"].to_string());
    let a: QTElement = round_trips(&v["factored_parts"][0].to_string());
    let b: QTElement = round_trips(&v["factored_parts"][1].to_string());
    let _: TorusSkein = round_trips(&v["peripheral"].to_string());
    assert_eq!(&a * &b, poly);
    assert_eq!(v["p"], 2);
}

#[test]
fn kappa_json() {
    let s = json(&["kappa", "--p", "1", "--max-n", "5"]);
    let v: Vec<LaurentPoly> = round_trips(&s);
    assert_eq!(v.len(), 6);
    assert_eq!(v[1], LaurentPoly::from_terms([(18, 1), (10, -1), (6, -1), (2, -1)]));

    let j = json(&["kappa", "--p", "1", "--max-n", "3", "--jones"]);
    let g: Vec<GaussLaurent> = round_trips(&j);
    assert_eq!(g.len(), 4);
    assert_eq!(g[1], v[1].subst_it());
}

#[test]
fn negative_p_is_mirror() {
    let a: Vec<LaurentPoly> = serde_json::from_str(&json(&["kappa", "--p", "-2", "--max-n", "3"])).unwrap();
    let b: Vec<LaurentPoly> = serde_json::from_str(&json(&["kappa", "--p", "1", "--max-n", "3"])).unwrap();
    assert_eq!(a, b.iter().map(LaurentPoly::invert_t).collect::<Vec<_>>());
    let text = String::from_utf8(cli(&["kappa", "--p", "-3", "--max-n", "1"]).stdout).unwrap();
    assert!(text.contains("mirror image of p = 2"));
}

#[test]
fn oracle_json() {
    let s = json(&["oracle", "--p", "1", "--n", "2"]);
    let v: LaurentPoly = round_trips(&s);
    let k: Vec<LaurentPoly> = serde_json::from_str(&json(&["kappa", "--p", "1", "--max-n", "2"])).unwrap();
    assert_eq!(v, k[2]);

    let tri: LaurentPoly = round_trips(&json(&["oracle", "--braid", "1,1,1", "--strands", "2"]));
    let naive: LaurentPoly = round_trips(&json(&["oracle", "--braid", "1,1,1", "--strands", "2", "--naive"]));
    assert_eq!(tri, naive);
}

#[test]
fn text_output_names_conventions() {
    let out = cli(&["oracle", "--p", "1", "--n", "1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("framing 0") && text.contains("Negative"), "{text}");
    let out = cli(&["kappa", "--p", "2", "--max-n", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("kappa_2 = "));
}

#[test]
fn verify_exit_codes() {
    let ok = cli(&["verify", "lemma51", "--p-range", "1..5"]);
    assert_eq!(ok.status.code(), Some(0));
    let v: Value = serde_json::from_str(&json(&["verify", "prop52", "--p-range", "1..5"])).unwrap();
    assert_eq!(v[0]["suite"], "prop52");
    assert!(v[0]["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));

    // the torus skein algebra is not commutative, so this suite reports a failure
    let red = cli(&["verify", "product-to-sum", "--seed", "3"]);
    assert_eq!(red.status.code(), Some(1));
    let text = String::from_utf8(red.stdout).unwrap();
    assert!(text.contains("[FAIL] commutativity"));
    assert!(text.contains("[PASS] associativity"));

    let all = cli(&["verify", "all", "--p-range", "1..3"]);
    assert_eq!(all.status.code(), Some(1));
    let text = String::from_utf8(all.stdout).unwrap();
    assert_eq!(text.matches("[FAIL]").count(), 1, "{text}");
}

#[test]
fn usage_errors() {
    for args in [
        &["kappa", "--p", "0"][..],
        &["kappa", "--p", "-1"],
        &["kappa"],
        &["verify", "unknown-name"],
        &["verify", "all", "--p-range", "3..1"],
        &["oracle", "--braid", "1,0"],
        &["oracle", "--p", "1", "--n", "9"],
        &["pi", "--p", "1", "3,1"],
        &["frobnicate"],
        &["kappa", "--p", "1", "--format", "xml"],
    ] {
        let out = cli(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

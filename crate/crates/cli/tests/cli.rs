use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_constacode")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn dist(v: &Value) -> Vec<(u64, String)> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|p| (p[0].as_u64().unwrap(), p[1].as_str().unwrap().to_string()))
        .collect()
}

fn params(c: &Value) -> (u64, u64, Value) {
    (c["length"].as_u64().unwrap(), c["dimension"].as_u64().unwrap(), c["d"].clone())
}

#[test]
fn build_golden_instance() {
    let out = run(&["build", "--q", "4", "--n", "15", "--r", "3"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    let codes = &r["codes"];
    assert_eq!(params(&codes["C"]), (15, 6, 4.into()));
    assert_eq!(params(&codes["C_dual"]), (15, 9, 3.into()));
    assert_eq!(params(&codes["exp1"]), (15, 2, 12.into()));
    assert_eq!(params(&codes["exp2"]), (5, 2, 4.into()));
    let expect: Vec<(u64, String)> =
        [(0, "1"), (4, "45"), (8, "675"), (12, "3375")].iter().map(|&(w, c)| (w, c.to_string())).collect();
    assert_eq!(dist(&codes["C"]["weight_distribution"]), expect);
    assert_eq!(r["params"]["kappa"], 3);
    assert_eq!(r["params"]["ell"], 2);
    assert_eq!(r["params"]["e"], "1");
    assert_eq!(r["verification"]["thm4"]["direct_sum"], true);
    assert_eq!(r["verification"]["thm5"]["c_equals_w_pow_kappa"], true);
    assert_eq!(r["verification"]["thm6"]["dual_equals_exp2_dual_pow_kappa"], true);
}

#[test]
fn build_degenerate_and_negacyclic() {
    let out = run(&["build", "--q", "3", "--n", "1", "--r", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(params(&json(&out)["codes"]["C"]), (1, 1, 1.into()));

    let out = run(&["build", "--q", "3", "--n", "11", "--r", "2"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(params(&r["codes"]["C"]), (11, 5, 6.into()));
    assert_eq!(params(&r["codes"]["C_dual"]), (11, 6, 5.into()));
    assert_eq!(r["verification"]["bridge"]["monomial"], true);
}

#[test]
fn optimality_carries_justification() {
    let r = json(&run(&["build", "--q", "3", "--n", "13", "--r", "2", "--codes", "dual"]));
    let opt = &r["codes"]["C_dual"]["optimality"];
    assert_eq!(opt["distance_optimal"], true);
    assert!(opt["distance_proof"]["inequality"].as_str().unwrap().contains('>'));
    assert!(opt["distance_proof"]["bound"].as_str().unwrap().contains("sphere-packing"));
}

#[test]
fn lifted_route_over_budget() {
    let out = run(&["build", "--q", "7", "--n", "800", "--r", "6", "--codes", "c,exp2", "--budget", "100000"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["codes"]["C"]["route"], "lifted");
    assert_eq!(
        dist(&r["codes"]["C"]["weight_distribution"]),
        vec![(0, "1".into()), (343, "4800".into()), (686, "5760000".into())]
    );
    assert_eq!(r["params"]["L"], "1201");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&["verify", "thm5", "--q", "4", "--n", "15", "--r", "3"])), 0);
    assert_eq!(code(&run(&["verify", "thm9", "--q", "13", "--m", "4", "--e", "4", "--u", "1", "--r", "12"])), 0);
    // r does not divide q - 1
    let out = run(&["build", "--q", "4", "--n", "15", "--r", "2"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("does not divide"));
    assert_eq!(code(&run(&["build", "--q", "6", "--n", "5"])), 2);
    assert_eq!(code(&run(&["verify", "thm4"])), 2);
    // budget too small for the Exp2 enumeration
    assert_eq!(code(&run(&["verify", "thm5", "--q", "4", "--n", "15", "--r", "3", "--budget", "4"])), 3);
    assert_eq!(code(&run(&["verify", "sqrt", "--q", "3", "--n", "37", "--variant", "nega", "--budget", "1000"])), 3);
    // the literal permutation fails for r > 1
    let out = run(&["verify", "bridge", "--q", "3", "--n", "11", "--r", "2"]);
    assert_eq!(code(&out), 1);
    let r = json(&out);
    assert_eq!(r["monomial"], true);
    assert_eq!(r["permutation_i_times_r"], false);
    assert_eq!(r["counterexample"]["in_exp3"], false);
    assert_eq!(code(&run(&["verify", "bridge", "--q", "2", "--n", "7", "--r", "1"])), 0);
}

#[test]
fn thm9_hypothesis_check() {
    let args = ["verify", "thm9", "--q", "11", "--m", "2", "--e", "4", "--u", "3", "--r", "10"];
    assert_eq!(code(&run(&args)), 2);
    let mut relaxed = args.to_vec();
    relaxed.push("--relaxed");
    let out = run(&relaxed);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["u_divides_q_minus_1"], false);
    assert_eq!(r["n"], 9);
}

#[test]
fn deterministic_across_threads() {
    let a = run(&["build", "--q", "3", "--n", "26", "--r", "2", "--threads", "1"]);
    let b = run(&["build", "--q", "3", "--n", "26", "--r", "2", "--threads", "4"]);
    let c = run(&["build", "--q", "3", "--n", "26", "--r", "2"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn field_poly_is_echoed() {
    // x^4 + x + 1 is primitive over GF(2)
    let r = json(&run(&["build", "--q", "2", "--n", "15", "--field-poly", "1,1,0,0,1"]));
    assert_eq!(r["input"]["field_poly"], serde_json::json!([1, 1, 0, 0, 1]));
    assert_eq!(r["params"]["field_modulus"], serde_json::json!([1, 1, 0, 0, 1]));
    // x^4 + x^3 + x^2 + x + 1 is irreducible but not primitive
    assert_eq!(code(&run(&["build", "--q", "2", "--n", "15", "--field-poly", "1,1,1,1,1"])), 2);
}

#[test]
fn tables() {
    let out = run(&["table", "1", "--q", "3", "--max-n", "23", "--csv"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "n,d,d_dual,checks_pass\n11,6,5,true\n23,9,8,true\n");
    let out = run(&["table", "2", "--q", "4", "--max-n", "19", "--csv"]);
    let text = stdout(&out);
    for row in ["7,4,3", "11,6,5", "13,6,5", "19,8,7"] {
        assert!(text.contains(&format!("\n{row},true")), "{text}");
    }
    assert_eq!(stdout(&run(&["table", "1", "--q", "3", "--max-n", "10", "--csv"])), "n,d,d_dual,checks_pass\n");
    let out = run(&["table", "1", "--q", "3", "--max-n", "40", "--csv", "--budget", "1000000"]);
    assert!(stdout(&out).contains("37,≥8,≥7,true"));
    assert_eq!(code(&run(&["table", "1", "--q", "4", "--max-n", "20"])), 2);
    assert_eq!(code(&run(&["table", "3", "--q", "3", "--max-n", "20"])), 2);
}

#[test]
fn scans() {
    let list = |q: &str, v: &str, max: &str| {
        let r = json(&run(&["scan", "qr", "--q", q, "--variant", v, "--max-n", max]));
        r["rows"].as_array().unwrap().iter().map(|x| x["n"].as_u64().unwrap()).collect::<Vec<_>>()
    };
    assert_eq!(list("3", "nega", "75"), vec![11, 23, 37, 47, 59, 71]);
    assert_eq!(list("5", "nega", "41"), vec![11, 19, 29, 41]);
    assert_eq!(list("7", "nega", "47"), vec![31, 47]);
    assert!(list("3", "nega", "2").is_empty());
    assert_eq!(code(&run(&["scan", "qr", "--q", "6", "--variant", "nega", "--max-n", "10"])), 2);
    let out = run(&["scan", "thm9", "--q", "3", "--max-m", "4", "--max-n", "100", "--csv"]);
    assert!(stdout(&out).contains("4,4,1,2,10,4,"));
}

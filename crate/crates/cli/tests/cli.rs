use std::path::PathBuf;
use std::process::{Command, Output};

use assocgeo::exactla::PrimeField;
use assocgeo::modspace::parse_rows;
use assocgeo::{ModuleSpace, Subspace};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_assocgeo")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

const GF3_TUPLE: [&str; 10] = ["--x", "[1,1]", "--a", "[0,1]", "--y", "[1,1]", "--b", "[1,0]", "--z", "[1,2]"];

#[test]
fn gamma_unit_law_and_product() {
    let mut args = vec!["gamma", "--space", "GF(3)^2"];
    args.extend(GF3_TUPLE);
    let o = run(&args);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[1,2]");

    args[4] = "[1,2]";
    for route in ["extended", "operator", "brute"] {
        let mut a = args.clone();
        a.extend(["--route", route]);
        let o = run(&a);
        assert_eq!(o.status.code(), Some(0), "{route}");
        assert_eq!(stdout(&o), "[1,1]", "{route}");
    }
}

#[test]
fn affine_route_in_chart() {
    // a, b transversal to o⁺ = <e2>, x, y, z transversal to o⁻ = <e1>
    let o = run(&["gamma", "--space", "GF(3)^2", "--route", "affine", "--x", "[1,1]", "--a", "[1,0]", "--y", "[0,1]", "--b", "[1,2]", "--z", "[1,1]"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let e = run(&["gamma", "--space", "GF(3)^2", "--x", "[1,1]", "--a", "[1,0]", "--y", "[0,1]", "--b", "[1,2]", "--z", "[1,1]"]);
    assert_eq!(stdout(&o), stdout(&e));
}

#[test]
fn operator_route_outside_domain_exits_3() {
    let o = run(&["gamma", "--space", "GF(2)^2", "--route", "operator", "--x", "[1,0]", "--a", "[1,0]", "--y", "[1,0]", "--b", "[1,0]", "--z", "[1,0]"]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("x ⊤ a (fails)"), "{err}");
}

#[test]
fn parse_errors_exit_2() {
    let o = run(&["gamma", "--space", "GF(2)^2", "--x", "[1,0,1]", "--a", "[1,0]", "--y", "[1,0]", "--b", "[1,0]", "--z", "[1,0]"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["enumerate", "--space", "GF(4)^2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["enumerate"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn pi_examples() {
    let base = ["pi", "--space", "GF(3)^2", "--x", "[1,0]", "--a", "[0,1]"];
    let with = |r: &str, z: &str, route: &str| {
        let mut a = base.to_vec();
        a.extend(["--r", r, "--z", z, "--route", route]);
        stdout(&run(&a))
    };
    for route in ["extended", "operator", "brute"] {
        // slope 0 and slope 2 with r = 2 give slope 1
        assert_eq!(with("2", "[1,2]", route), "[1,1]");
        assert_eq!(with("1", "[1,0]", route), "[1,0]");
        assert_eq!(with("0", "[1,2]", route), "[1,0]");
    }
    assert_eq!(with("-1", "[1,2]", "extended"), "[1,1]");
}

#[test]
fn rational_space() {
    let o = run(&["gamma", "--space", "Q^2", "--x", "[1,1/2]", "--a", "[0,1]", "--y", "[1,1]", "--b", "[1,0]", "--z", "[1,2]"]);
    assert_eq!(stdout(&o), "[1,1]");
    let o = run(&["enumerate", "--space", "Q^2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumerate_and_components() {
    let o = run(&["enumerate", "--space", "GF(2)^4"]);
    assert_eq!(stdout(&o).lines().count(), 67);
    let o = run(&["components", "--space", "GF(2)^3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let mut sizes: Vec<usize> = v["components"].as_array().unwrap().iter().map(|c| c.as_array().unwrap().len()).collect();
    sizes.sort();
    assert_eq!(sizes, [1, 1, 7, 7]);
}

#[test]
fn space_file_with_generators() {
    // the swap of coordinates leaves only 0, the diagonal and everything
    let o = run(&["enumerate", "--space-file", &data("gf2_swap.json")]);
    assert_eq!(stdout(&o).lines().collect::<Vec<_>>(), ["[]", "[1,1]", "[1,0; 0,1]"]);
    let o = run(&["verify", "thm24", "--space-file", &data("gf2_swap.json"), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["space"], "GF(2)^2 (1 generators)");
}

#[test]
fn json_literals_round_trip() {
    let o = run(&["enumerate", "--space", "GF(3)^3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let f = PrimeField::new(3).unwrap();
    let space = ModuleSpace::vector_space(f.clone(), 3);
    let all = assocgeo::oracle::enumerate_subspaces(&space).unwrap();
    let lits = v["subspaces"].as_array().unwrap();
    assert_eq!(lits.len(), all.len());
    for (lit, s) in lits.iter().zip(&all) {
        let parsed = Subspace::span_of(&parse_rows(&f, 3, lit.as_str().unwrap()).unwrap());
        assert_eq!(&parsed, s);
    }
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "thm24", "--space", "GF(2)^2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("thm24"));
    let o = run(&["verify", "--suite", "thm99", "--space", "GF(2)^2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify", "--space", "GF(2)^2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify", "routes", "--space", "GF(2)^2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_all_gives_twenty_reports() {
    let o = run(&["verify", "--all", "--space", "GF(2)^2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 20);
    assert!(reports.iter().all(|r| r["checks"].as_array().is_some_and(|c| !c.is_empty())));
}

#[test]
fn pair_roundtrip_files() {
    for file in ["gf2_algebra.json", "gf3_operator.json"] {
        let o = run(&["pair-roundtrip", "--pair", &data(file)]);
        assert_eq!(o.status.code(), Some(0), "{file}: {}", stdout(&o));
        assert!(stdout(&o).starts_with("round trip: pass"));
    }
    let o = run(&["pair-roundtrip", "--pair", &data("gf2_algebra.json"), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["ideals"], 5);
    let o = run(&["pair-roundtrip", "--pair", "/nonexistent.json"]);
    assert_eq!(o.status.code(), Some(2));
}

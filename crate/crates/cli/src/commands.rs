use std::fs;
use std::path::Path;

use assocgeo::exactla::{Field, FieldSpec, FiniteField, PrimeField};
use assocgeo::gamma::{
    classify_domain, delta_operator, gamma_bruteforce, gamma_extended, gamma_operator_route, pi_bruteforce, pi_extended, AffineChart,
};
use assocgeo::modspace::transversal;
use assocgeo::oracle::{cross_route_check, enumerate_subspaces, Grassmannian, SuiteContext, SuiteReport, SUITE_IDS};
use assocgeo::pairs::{pair_roundtrip_check, PairDescription};
use assocgeo::{Error, ModuleSpace, Subspace};
use serde_json::json;

use crate::input::{parse_literal, AnySpace, CliError};
use crate::Route;

type Outcome = Result<bool, CliError>;

fn label<F: Field>(space: &ModuleSpace<F>) -> String {
    assocgeo::oracle::space_label(space)
}

fn print_value<F: Field>(space: &ModuleSpace<F>, command: &str, route: Route, value: &Subspace<F>, json: bool) {
    if json {
        let v = json!({ "command": command, "space": label(space), "route": route.name(), "result": value.to_literal() });
        println!("{v}");
    } else {
        println!("{}", value.to_literal());
    }
}

/// Names the transversality conditions that keep a tuple out of D(Γ).
fn domain_message<F: Field>(t: &[Subspace<F>; 5], universe: &[Subspace<F>]) -> String {
    let [x, a, y, b, z] = t;
    let show = |ok: bool| if ok { "holds" } else { "fails" };
    let flags = classify_domain(x, a, y, b, z, universe);
    debug_assert!(!flags.any());
    format!(
        "tuple outside D(Γ): D_L needs x ⊤ a ({}) and y ⊤ b ({}); D_R needs y ⊤ a ({}) and z ⊤ b ({}); \
         D_M needs x ⊤ a, z ⊤ b and a common complement of a and b",
        show(transversal(x, a)),
        show(transversal(y, b)),
        show(transversal(y, a)),
        show(transversal(z, b)),
    )
}

fn gamma_on<F: Field>(
    space: &ModuleSpace<F>,
    lits: [&String; 5],
    route: Route,
    json: bool,
    universe: impl FnOnce() -> Vec<Subspace<F>>,
    brute: impl FnOnce(&[Subspace<F>; 5]) -> Result<Subspace<F>, CliError>,
) -> Outcome {
    let names = ["x", "a", "y", "b", "z"];
    let mut parsed = Vec::with_capacity(5);
    for (n, l) in names.iter().zip(lits) {
        parsed.push(parse_literal(space, n, l)?);
    }
    let t: [Subspace<F>; 5] = parsed.try_into().expect("five literals");
    let [x, a, y, b, z] = &t;
    let value = match route {
        Route::Extended => gamma_extended(x, a, y, b, z),
        Route::Operator => {
            let universe = universe();
            match gamma_operator_route(x, a, y, b, z, &universe) {
                Err(Error::OutsideDomain) => return Err(CliError::domain(domain_message(&t, &universe))),
                other => other?,
            }
        }
        Route::Affine => {
            let chart = AffineChart::new(space.field(), a.dim(), space.dim() - a.dim());
            match chart.gamma_subspaces(x, a, y, b, z) {
                Ok(v) => v.subspace,
                Err(Error::OutsideDomain) => {
                    return Err(CliError::domain(format!(
                        "outside the affine chart: x, y, z must be transversal to o- = span of the first {} coordinates and a, b to o+",
                        a.dim()
                    )))
                }
                Err(e) => return Err(e.into()),
            }
        }
        Route::Brute => brute(&t)?,
    };
    print_value(space, "gamma", route, &value, json);
    Ok(true)
}

pub fn gamma(space: &AnySpace, lits: [&String; 5], route: Route, json: bool) -> Outcome {
    match space {
        AnySpace::Prime(s) => gamma_on(
            s,
            lits,
            route,
            json,
            // D_M needs the universe; spaces too large to list only use D_L and D_R
            || enumerate_subspaces(s).unwrap_or_default(),
            |[x, a, y, b, z]| Ok(gamma_bruteforce(x, a, y, b, z)?),
        ),
        AnySpace::Rational(s) => gamma_on(s, lits, route, json, Vec::new, |_| Err(CliError::usage("the brute route needs a finite field"))),
    }
}

fn pi_on<F: Field>(
    space: &ModuleSpace<F>,
    r: &str,
    lits: [&String; 3],
    route: Route,
    json: bool,
    brute: impl FnOnce(F::Elem, &[Subspace<F>; 3]) -> Result<Subspace<F>, CliError>,
) -> Outcome {
    let r = space.field().parse(r).ok_or_else(|| CliError::usage(format!("--r: bad scalar `{r}`")))?;
    let x = parse_literal(space, "x", lits[0])?;
    let a = parse_literal(space, "a", lits[1])?;
    let z = parse_literal(space, "z", lits[2])?;
    let value = match route {
        Route::Extended => pi_extended(r, &x, &a, &z),
        Route::Operator => {
            if !transversal(&x, &a) {
                return Err(CliError::domain("the operator route for Π_r needs x ⊤ a, which fails"));
            }
            delta_operator(r, &x, &a)?.apply(&z)
        }
        Route::Brute => brute(r, &[x, a, z])?,
        Route::Affine => return Err(CliError::usage("Π_r has no affine route; use extended, operator or brute")),
    };
    print_value(space, "pi", route, &value, json);
    Ok(true)
}

pub fn pi(space: &AnySpace, r: &str, lits: [&String; 3], route: Route, json: bool) -> Outcome {
    match space {
        AnySpace::Prime(s) => pi_on(s, r, lits, route, json, |r, [x, a, z]| Ok(pi_bruteforce(r, x, a, z)?)),
        AnySpace::Rational(s) => pi_on(s, r, lits, route, json, |_, _| Err(CliError::usage("the brute route needs a finite field"))),
    }
}

fn finite(space: &AnySpace) -> Result<&ModuleSpace<PrimeField>, CliError> {
    match space {
        AnySpace::Prime(s) => Ok(s),
        AnySpace::Rational(_) => Err(CliError::usage("this command needs a finite field")),
    }
}

fn print_report(r: &SuiteReport) {
    let status = if r.passed() { "pass" } else { "FAIL" };
    let mode = format!("{:?}", r.mode).to_lowercase();
    println!("{:<10} {:<16} {status}  {mode}, {} tuples, {} ms", r.suite, r.space, r.tuples_checked, r.wall_time_ms);
    for c in r.checks.iter().filter(|c| !c.passed()) {
        println!("  failed: {} ({} of {})", c.axiom, c.failure_count, c.tuples_checked);
        if let Some(f) = c.failures.first() {
            println!("    at {}: expected {}, got {}", f.tuple.join(" "), f.expected, f.actual);
        }
    }
    for n in &r.notes {
        println!("  note: {n}");
    }
}

pub fn verify(space: &AnySpace, suite: Option<&str>, budget: u64, seed: u64, json: bool) -> Outcome {
    let space = finite(space)?;
    if let Some(id) = suite {
        if id != "routes" && !SUITE_IDS.contains(&id) {
            return Err(Error::UnknownSuite(id.to_string()).into());
        }
    }
    let grass = Grassmannian::new(space.clone())?;
    let reports = match suite {
        Some("routes") => vec![cross_route_check(&grass, budget, seed)?],
        Some(id) => vec![SuiteContext::new(&grass).run(id, budget, seed)?],
        None => SuiteContext::new(&grass).run_all(budget, seed)?,
    };
    if json {
        let text = match reports.as_slice() {
            [one] if suite.is_some() => serde_json::to_string_pretty(one),
            all => serde_json::to_string_pretty(all),
        };
        println!("{}", text.expect("reports serialize"));
    } else {
        reports.iter().for_each(print_report);
    }
    Ok(reports.iter().all(SuiteReport::passed))
}

pub fn enumerate(space: &AnySpace, json: bool) -> Outcome {
    let space = finite(space)?;
    let all = enumerate_subspaces(space)?;
    if json {
        let lits: Vec<String> = all.iter().map(Subspace::to_literal).collect();
        println!("{}", json!({ "space": label(space), "count": all.len(), "subspaces": lits }));
    } else {
        for s in &all {
            println!("{}", s.to_literal());
        }
    }
    Ok(true)
}

pub fn components(space: &AnySpace, json: bool) -> Outcome {
    let space = finite(space)?;
    let all = enumerate_subspaces(space)?;
    let comps = space.connected_components(&all);
    let lits: Vec<Vec<String>> = comps.iter().map(|c| c.iter().map(|&i| all[i].to_literal()).collect()).collect();
    if json {
        println!("{}", json!({ "space": label(space), "components": lits }));
    } else {
        for (i, c) in lits.iter().enumerate() {
            println!("component {i} ({}): {}", c.len(), c.join(" | "));
        }
    }
    Ok(true)
}

fn roundtrip_on<F: FiniteField>(desc: &PairDescription, field: &F, budget: u64, seed: u64, json: bool) -> Outcome {
    let pair = desc.build(field)?;
    let rt = pair_roundtrip_check(&pair, budget, seed)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&rt).expect("round trip serializes"));
    } else {
        println!("round trip: {}, {} right ideals", if rt.holds { "pass" } else { "FAIL" }, rt.ideals);
        for (sign, map) in [("+", &rt.plus_map), ("-", &rt.minus_map)] {
            for (elem, coords) in map {
                println!("  A{sign}  {elem} -> {coords}");
            }
        }
        for c in rt.checks.iter().filter(|c| !c.passed()) {
            println!("  failed: {} ({} of {})", c.axiom, c.failure_count, c.tuples_checked);
        }
    }
    Ok(rt.holds)
}

pub fn pair_roundtrip(path: &Path, budget: u64, seed: u64, json: bool) -> Outcome {
    let text = fs::read_to_string(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    let desc = PairDescription::from_json(&text)?;
    match desc.field_spec()? {
        FieldSpec::Prime(p) => roundtrip_on(&desc, &PrimeField::new(p)?, budget, seed, json),
        FieldSpec::Rationals => Err(CliError::usage("round trips enumerate ideals and need a finite field")),
    }
}

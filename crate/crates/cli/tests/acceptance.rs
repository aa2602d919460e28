//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

use std::path::{Path, PathBuf};
use std::process::{Command as Process, ExitCode};
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use serde_json::Value;

use solvcohom::{run, Command, Instance, InstanceFile, Options};
use solvcohom_core::arith::{GaussianRational, Parity, PeriodSymbols};
use solvcohom_core::lattice::{select_de_rham, select_dolbeault, SelectionResult};
use solvcohom_core::lie::{alternating_sum, catalog, ce_complex, FiniteComplex, LieAlgebraData, RepresentationData};
use solvcohom_core::weights::{build_invariant_complex, infer_weights, InvariantComplex, Weight};

const SHIPPED: [&str; 6] = [
    "heisenberg3",
    "torus-complex-n3",
    "example-7-1-pi",
    "example-7-1-generic",
    "example-7-2-pi",
    "example-7-2-generic",
];

fn instances_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("instances")
}

fn instance_path(name: &str) -> PathBuf {
    instances_dir().join(format!("{name}.json"))
}

fn command_name(cmd: Command) -> &'static str {
    match cmd {
        Command::Validate => "validate",
        Command::Derham => "derham",
        Command::Dolbeault => "dolbeault",
        Command::Conditions => "conditions",
        Command::Oracle => "oracle",
        Command::Nilshadow => "nilshadow",
    }
}

/// Runs the installed binary and returns its JSON output and exit code.
fn run_binary(cmd: Command, name: &str) -> Result<(Value, i32, Duration), String> {
    let start = Instant::now();
    let out = Process::new(env!("CARGO_BIN_EXE_solvcohom"))
        .arg(command_name(cmd))
        .arg(instance_path(name))
        .args(["--json", "-"])
        .output()
        .map_err(|e| format!("cannot run solvcohom: {e}"))?;
    let elapsed = start.elapsed();
    let code = out.status.code().unwrap_or(-1);
    if out.stdout.is_empty() {
        return Err(format!(
            "{} {name}: no output, exit {code}: {}",
            command_name(cmd),
            String::from_utf8_lossy(&out.stderr).trim()
        ));
    }
    let json = serde_json::from_slice(&out.stdout).map_err(|e| format!("bad JSON from {}: {e}", command_name(cmd)))?;
    Ok((json, code, elapsed))
}

/// Compares every pointer listed in `<name>.expected.json` under `section`.
fn check_expected(name: &str, section: &str, actual: &Value) -> Result<(), String> {
    let path = instances_dir().join(format!("{name}.expected.json"));
    let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    let expected: Value = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let Some(table) = expected.get(section).and_then(Value::as_object) else {
        return Err(format!("{name}: no expected values for {section}"));
    };
    for (pointer, want) in table {
        match actual.pointer(pointer) {
            Some(got) if got == want => {}
            got => return Err(format!("{name} {section}{pointer}: expected {want}, got {got:?}")),
        }
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

type Check = Result<String, String>;

fn criterion_1() -> Check {
    let mut notes = Vec::new();
    for (name, h1, a1) in [("example-7-1-pi", 6, 12), ("example-7-1-generic", 2, 8)] {
        let (json, code, elapsed) = run_binary(Command::Derham, name)?;
        if code != 0 {
            return Err(format!("{name}: exit code {code}"));
        }
        check_expected(name, "derham", &json)?;
        if json["betti"][1] != h1 || json["dims"][0] != 2 || json["dims"][1] != a1 {
            return Err(format!("{name}: dims {} betti {}", json["dims"], json["betti"]));
        }
        if elapsed >= Duration::from_secs(5) {
            return Err(format!("{name}: took {elapsed:.2?}"));
        }
        notes.push(format!("{name} H^1={h1} A^1={a1} in {elapsed:.2?}"));
    }
    Ok(notes.join("; "))
}

fn with_trivial_coefficients(name: &str) -> Result<Instance, String> {
    let text = std::fs::read_to_string(instance_path(name)).map_err(|e| e.to_string())?;
    let mut file: InstanceFile = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    file.representation = serde_json::from_str(r#"{"trivial": true}"#).expect("literal block");
    file.compile().map_err(|e| e.to_string())
}

fn criterion_2() -> Check {
    let mut notes = Vec::new();
    for name in ["example-7-1-pi", "example-7-1-generic"] {
        let inst = with_trivial_coefficients(name)?;
        let out = run(Command::Derham, &inst, Options::default()).map_err(|e| e.to_string())?;
        let b1 = &out.json["betti"][1];
        if b1 != 2 {
            return Err(format!("{name} with trivial coefficients: b1 = {b1}"));
        }
        notes.push(format!("{name} b1=2"));
    }
    Ok(notes.join("; "))
}

fn criterion_3() -> Check {
    let (boxed, code, t_box) = run_binary(Command::Dolbeault, "example-7-2-pi")?;
    if code != 0 {
        return Err(format!("example-7-2-pi: exit code {code}"));
    }
    check_expected("example-7-2-pi", "dolbeault", &boxed)?;
    for p in 0..=3 {
        for q in 0..=3 {
            let want = binomial(3, p) * binomial(3, q);
            if boxed["hodge"][p][q] != want {
                return Err(format!("box h^({p},{q}) = {}, expected {want}", boxed["hodge"][p][q]));
            }
        }
    }
    let (star, code, t_star) = run_binary(Command::Dolbeault, "example-7-2-generic")?;
    if code != 0 {
        return Err(format!("example-7-2-generic: exit code {code}"));
    }
    check_expected("example-7-2-generic", "dolbeault", &star)?;
    if star["hodge"][0] != serde_json::json!([1, 1, 1, 1]) {
        return Err(format!("star h^(0,q) = {}", star["hodge"][0]));
    }
    if t_box.max(t_star) >= Duration::from_secs(5) {
        return Err(format!("took {:.2?} and {:.2?}", t_box, t_star));
    }
    Ok(format!("box h^(p,q)=C(3,p)C(3,q) in {t_box:.2?}; star h^(0,q)=(1,1,1,1) in {t_star:.2?}"))
}

fn criterion_4() -> Check {
    let inst = Instance::load(&instance_path("heisenberg3")).map_err(|e| e.to_string())?;
    let w = inst.resolved_weights().map_err(|e| e.to_string())?;
    let ic = build_invariant_complex(&inst.algebra, &inst.representation, &w).map_err(|e| e.to_string())?;
    let sel = select_de_rham(&ic, &inst.lattice, &inst.algebra).map_err(|e| e.to_string())?;
    let full = ce_complex(&inst.algebra, &inst.representation, &Weight::zero(0)).map_err(|e| e.to_string())?;
    if sel.dims() != full.dims() {
        return Err(format!("selected dims {:?}, full complex {:?}", sel.dims(), full.dims()));
    }
    let (derham, _, _) = run_binary(Command::Derham, "heisenberg3")?;
    check_expected("heisenberg3", "derham", &derham)?;
    let (flags, _, _) = run_binary(Command::Conditions, "heisenberg3")?;
    check_expected("heisenberg3", "conditions", &flags)?;
    Ok("full CE complex selected, Betti (1,2,2,1), all four flags true".into())
}

fn criterion_5() -> Check {
    let mut sectors = 0;
    for name in SHIPPED {
        let (json, code, _) = run_binary(Command::Oracle, name)?;
        check_expected(name, "oracle", &json)?;
        if code != 0 || json["all_equal"] != true {
            return Err(format!("{name}: oracle mismatch (exit {code})"));
        }
        sectors += json["sectors"].as_array().map_or(0, Vec::len);
    }
    Ok(format!("{} instances, {sectors} sectors, all equal", SHIPPED.len()))
}

fn closed_under_d(parent: &InvariantComplex, sel: &SelectionResult) -> bool {
    let c = parent.complex();
    (0..c.dims().len().saturating_sub(1)).all(|p| {
        let source = sel.selected.parent_index(p);
        let target = sel.selected.parent_index(p + 1);
        c.differential(p)
            .nonzeros()
            .all(|(r, col, _)| !source.contains(&col) || target.contains(&r))
    })
}

fn euler_matches(c: &FiniteComplex) -> Result<bool, String> {
    let betti = c.betti_numbers().map_err(|e| e.to_string())?;
    Ok(c.euler_characteristic() == alternating_sum(&betti))
}

fn criterion_6() -> Check {
    let catalog: Vec<LieAlgebraData> = vec![
        catalog::heisenberg3(),
        catalog::abelian(3, solvcohom_core::lie::GroundMode::Complex),
        catalog::complex_semidirect_real(),
        catalog::complex_semidirect_3(),
    ];
    let mut runner = TestRunner::new(Config { cases: 24, failure_persistence: None, ..Config::default() });
    let coords = prop::collection::vec((-3i64..=3, -3i64..=3), 2);
    let mut checked = 0;
    for g in &catalog {
        for rep in [RepresentationData::adjoint(g), RepresentationData::trivial(g, 2)] {
            let c = g.complement().len();
            runner
                .run(&coords, |xs| {
                    let mu = Weight::new(xs[..c].iter().map(|&(a, b)| GaussianRational::from_parts(a, b)).collect());
                    let cx = ce_complex(g, &rep, &mu).unwrap();
                    prop_assert!(cx.check_d_squared().is_ok());
                    prop_assert!(euler_matches(&cx).unwrap());
                    Ok(())
                })
                .map_err(|e| format!("{}-dimensional catalog algebra: {e}", g.dim()))?;
            checked += 1;

            let w = infer_weights(g, &rep).map_err(|e| e.to_string())?;
            let ic = build_invariant_complex(g, &rep, &w).map_err(|e| e.to_string())?;
            if ic.complex().check_d_squared().is_err() || !euler_matches(ic.complex())? {
                return Err(format!("invariant complex of a {}-dimensional algebra", g.dim()));
            }
        }
    }
    for name in SHIPPED {
        let inst = Instance::load(&instance_path(name)).map_err(|e| e.to_string())?;
        let w = inst.resolved_weights().map_err(|e| e.to_string())?;
        let ic = build_invariant_complex(&inst.algebra, &inst.representation, &w).map_err(|e| e.to_string())?;
        let sel = match inst.kind {
            solvcohom::Kind::Derham => select_de_rham(&ic, &inst.lattice, &inst.algebra),
            solvcohom::Kind::Dolbeault => select_dolbeault(&ic, &inst.lattice, &inst.algebra),
        }
        .map_err(|e| e.to_string())?;
        if sel.selected.complex().check_d_squared().is_err() || !euler_matches(sel.selected.complex())? {
            return Err(format!("{name}: selected complex"));
        }
        if !closed_under_d(&ic, &sel) {
            return Err(format!("{name}: selection not closed under d"));
        }
        if !sel.verdicts.iter().filter(|v| v.tag.is_zero()).all(|v| v.selected) {
            return Err(format!("{name}: a zero tag was dropped"));
        }
    }
    let mut symbols = PeriodSymbols::new();
    symbols.declare("a", Parity::Real).expect("fresh symbol");
    symbols.declare("t", Parity::Imaginary).expect("fresh symbol");
    let periods = prop::collection::vec(-4i64..=4, 8);
    runner
        .run(&periods, |c| {
            let text = format!(
                "{} + {}*i + {}*pi + {}*i*pi + {}*a + {}*i*a + {}*t + {}*i*t",
                c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7]
            );
            let v = symbols.parse(&text).unwrap();
            prop_assert_eq!(v.conj().conj(), v);
            Ok(())
        })
        .map_err(|e| format!("period conjugation: {e}"))?;
    Ok(format!("{checked} randomized CE families, {} shipped selections, conjugation involution", SHIPPED.len()))
}

fn criterion_7() -> Check {
    for name in ["example-7-1-pi", "example-7-2-pi"] {
        let inst = Instance::load(&instance_path(name)).map_err(|e| e.to_string())?;
        let (json, code, _) = run_binary(Command::Nilshadow, name)?;
        check_expected(name, "nilshadow", &json)?;
        if code != 0 || json["abelian"] != true || json["dim"] != inst.algebra.dim() || json["nilpotent"] != true {
            return Err(format!("{name}: {json}"));
        }
    }
    let (json, _, _) = run_binary(Command::Nilshadow, "heisenberg3")?;
    check_expected("heisenberg3", "nilshadow", &json)?;
    if json["unchanged"] != true {
        return Err("Heisenberg nilshadow differs from the input".into());
    }
    Ok("both semidirect examples abelian of ambient dimension; Heisenberg unchanged".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 7] = [
        ("real example: H^1 = 6 and 2, A^0 = 2, A^1 = 12 and 8", criterion_1),
        ("first Betti number 2 with trivial coefficients", criterion_2),
        ("complex example: box Hodge table, star h^(0,q)", criterion_3),
        ("Heisenberg: full complex, Betti (1,2,2,1), all flags", criterion_4),
        ("oracle equality on every shipped instance", criterion_5),
        ("structural properties", criterion_6),
        ("nilshadow", criterion_7),
    ];
    let mut failed = 0;
    for (k, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(note) => println!("criterion {} PASS  {title} ({note}) [{:.2?}]", k + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL  {title}: {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

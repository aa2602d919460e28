use serde_json::{json, Value};

use solvcohom_core::arith::{GaussianRational, Vector};
use solvcohom_core::lattice::{
    check_conditions, dolbeault_hodge_table, select_de_rham, select_dolbeault, ConditionReport, Flag,
    SelectionResult,
};
use solvcohom_core::lie::{alternating_sum, form_label, nilshadow, GroundMode, ValidationReport};
use solvcohom_core::oracle::verify_quasi_iso;
use solvcohom_core::weights::{build_invariant_complex, InvariantComplex, InvariantLabel, Weight, WeightAssignment};

use crate::error::CliError;
use crate::instance::{Instance, Kind, RepForm};
use crate::table::Table;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Validate,
    Derham,
    Dolbeault,
    Conditions,
    Oracle,
    Nilshadow,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub representatives: bool,
}

/// Result of a command: human text, machine document and exit code.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub human: String,
    pub json: Value,
    pub exit_code: u8,
}

impl Outcome {
    fn ok(human: String, json: Value) -> Self {
        Outcome { human, json, exit_code: 0 }
    }
}

pub fn run(cmd: Command, inst: &Instance, opts: Options) -> Result<Outcome, CliError> {
    match cmd {
        Command::Validate => Ok(validate(inst)),
        Command::Derham => derham(inst, opts),
        Command::Dolbeault => dolbeault(inst, opts),
        Command::Conditions => conditions(inst),
        Command::Oracle => oracle(inst),
        Command::Nilshadow => nilshadow_cmd(inst),
    }
}

struct Labeller {
    names: Vec<String>,
    rep: Vec<String>,
    show_rep: bool,
}

impl Labeller {
    fn new(inst: &Instance) -> Self {
        Labeller {
            names: inst.algebra.basis_names().to_vec(),
            rep: inst.rep_basis_names(),
            show_rep: inst.rep_form != RepForm::Trivial || inst.representation.dim() > 1,
        }
    }

    fn label(&self, l: &InvariantLabel) -> String {
        let form = form_label(&self.names, l.form);
        if self.show_rep {
            format!("{form}⊗{}", self.rep[l.k])
        } else {
            form
        }
    }

    fn combination(&self, labels: &[InvariantLabel], v: &Vector) -> String {
        let mut out = String::new();
        for (l, c) in labels.iter().zip(v) {
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            let (negative, mag) = split_sign(c);
            out.push_str(match (out.is_empty(), negative) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            });
            if mag != "1" {
                out.push_str(&mag);
                out.push('*');
            }
            out.push_str(&self.label(l));
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

fn split_sign(c: &GaussianRational) -> (bool, String) {
    use num_traits::{Signed, Zero};
    if c.im().is_zero() {
        (c.re().is_negative(), c.re().abs().to_string())
    } else if c.re().is_zero() {
        (c.im().is_negative(), GaussianRational::new(Zero::zero(), c.im().abs()).to_string())
    } else {
        (false, format!("({c})"))
    }
}

fn prepare(inst: &Instance) -> Result<(WeightAssignment, InvariantComplex), CliError> {
    let mut report = inst.algebra.validate();
    report.merge(inst.representation.validate(&inst.algebra));
    report.into_result()?;
    let weights = inst.resolved_weights()?;
    let ic = build_invariant_complex(&inst.algebra, &inst.representation, &weights)?;
    Ok((weights, ic))
}

fn validate(inst: &Instance) -> Outcome {
    let g = &inst.algebra;
    let section = |r: &ValidationReport| -> Vec<String> { r.violations.iter().map(ToString::to_string).collect() };
    let algebra = g.validate();
    let representation = inst.representation.validate(g);
    let weights: Vec<String> = if algebra.is_pass() && representation.is_pass() {
        match &inst.weights {
            Some(w) => section(&w.validate(g, &inst.representation)),
            None => match inst.resolved_weights() {
                Ok(_) => Vec::new(),
                Err(e) => vec![e.to_string()],
            },
        }
    } else {
        vec!["skipped: algebra or representation invalid".into()]
    };
    let lattice = inst.lattice.validate(g);
    let sections = [
        ("algebra", section(&algebra)),
        ("representation", section(&representation)),
        ("weights", weights),
        ("lattice", section(&lattice)),
    ];
    let pass = sections.iter().all(|(_, v)| v.is_empty());
    let mut human = String::new();
    for (name, v) in &sections {
        if v.is_empty() {
            human.push_str(&format!("{name:<15} pass\n"));
        } else {
            human.push_str(&format!("{name:<15} FAIL\n"));
            for line in v {
                human.push_str(&format!("  - {}\n", line.trim_start_matches("  - ")));
            }
        }
    }
    let mut doc = serde_json::Map::new();
    doc.insert("command".into(), json!("validate"));
    doc.insert("pass".into(), json!(pass));
    for (name, v) in sections {
        doc.insert(name.into(), json!(v));
    }
    Outcome { human, json: Value::Object(doc), exit_code: if pass { 0 } else { 1 } }
}

fn require(inst: &Instance, kind: Kind, ground: GroundMode, what: &str) -> Result<(), CliError> {
    if inst.kind != kind || inst.algebra.ground() != ground {
        return Err(CliError::Mode(format!(
            "{what} needs an instance of kind {} over a {ground} algebra; this one is {} over {}",
            kind.as_str(),
            inst.kind.as_str(),
            inst.algebra.ground()
        )));
    }
    Ok(())
}

fn tag_table(sel: &SelectionResult) -> Vec<Value> {
    sel.verdicts
        .iter()
        .map(|v| {
            json!({
                "tag": v.tag.to_string(),
                "selected": v.selected,
                "trivial_on_g": v.trivial_on_g,
                "trivial_on_lattice": v.trivial_on_lattice,
                "ratio_trivial": v.ratio_trivial,
                "unitary": v.unitary,
                "count": v.count,
            })
        })
        .collect()
}

struct Computed {
    dims: Vec<usize>,
    betti: Vec<usize>,
    representatives: Option<Vec<Vec<String>>>,
}

fn cohomology_of(sel: &SelectionResult, lab: &Labeller, opts: Options) -> Result<Computed, CliError> {
    let c = sel.selected.complex();
    let dims = c.dims().to_vec();
    if opts.representatives {
        let h = c.cohomology()?;
        let reps = h
            .representatives
            .iter()
            .enumerate()
            .map(|(p, vs)| vs.iter().map(|v| lab.combination(sel.selected.labels(p), v)).collect())
            .collect();
        Ok(Computed { dims, betti: h.betti, representatives: Some(reps) })
    } else {
        Ok(Computed { dims, betti: c.betti_numbers()?, representatives: None })
    }
}

fn degree_table(name: &str, c: &Computed) -> String {
    let mut t = Table::new(vec!["degree".into(), format!("dim {name}^p"), "dim H^p".into()]);
    for (p, (d, b)) in c.dims.iter().zip(&c.betti).enumerate() {
        t.row(vec![p.to_string(), d.to_string(), b.to_string()]);
    }
    t.render()
}

fn push_representatives(human: &mut String, c: &Computed) {
    if let Some(reps) = &c.representatives {
        human.push_str("\nrepresentatives\n");
        for (p, list) in reps.iter().enumerate() {
            for r in list {
                human.push_str(&format!("  H^{p}: {r}\n"));
            }
        }
    }
}

fn selected_tags(sel: &SelectionResult) -> Vec<String> {
    sel.verdicts.iter().filter(|v| v.selected).map(|v| v.tag.to_string()).collect()
}

fn derham(inst: &Instance, opts: Options) -> Result<Outcome, CliError> {
    require(inst, Kind::Derham, GroundMode::RealComplexified, "derham")?;
    let (_, ic) = prepare(inst)?;
    let sel = select_de_rham(&ic, &inst.lattice, &inst.algebra)?;
    let lab = Labeller::new(inst);
    let c = cohomology_of(&sel, &lab, opts)?;
    let mut human = String::from("de Rham complex A*_Γ\n");
    human.push_str(&degree_table("A", &c));
    human.push_str(&format!("\nselected weight tags: {}\n", selected_tags(&sel).join(" ")));
    push_representatives(&mut human, &c);
    let json = json!({
        "command": "derham",
        "dims": c.dims,
        "betti": c.betti,
        "euler_characteristic": alternating_sum(&c.betti),
        "selected_tags": selected_tags(&sel),
        "tags": tag_table(&sel),
        "representatives": c.representatives,
    });
    Ok(Outcome::ok(human, json))
}

fn dolbeault(inst: &Instance, opts: Options) -> Result<Outcome, CliError> {
    require(inst, Kind::Dolbeault, GroundMode::Complex, "dolbeault")?;
    let (_, ic) = prepare(inst)?;
    let sel = select_dolbeault(&ic, &inst.lattice, &inst.algebra)?;
    let lab = Labeller::new(inst);
    let c = cohomology_of(&sel, &lab, opts)?;
    let n = inst.algebra.dim();
    let hodge = dolbeault_hodge_table(
        &solvcohom_core::lie::CohomologyResult { betti: c.betti.clone(), representatives: Vec::new() },
        n,
    );
    let mut human = String::from("Dolbeault complex B*_Γ\n");
    human.push_str(&degree_table("B", &c));
    human.push_str("\nHodge numbers h^{p,q} (rows p, columns q)\n");
    let mut header = vec!["p\\q".to_string()];
    header.extend((0..c.betti.len()).map(|q| q.to_string()));
    let mut t = Table::new(header);
    for (p, row) in hodge.iter().enumerate() {
        let mut cells = vec![p.to_string()];
        cells.extend(row.iter().map(ToString::to_string));
        t.row(cells);
    }
    human.push_str(&t.render());
    human.push_str(&format!("\nselected weight tags: {}\n", selected_tags(&sel).join(" ")));
    push_representatives(&mut human, &c);
    let json = json!({
        "command": "dolbeault",
        "dims": c.dims,
        "betti": c.betti,
        "hodge": hodge,
        "selected_tags": selected_tags(&sel),
        "tags": tag_table(&sel),
        "representatives": c.representatives,
    });
    Ok(Outcome::ok(human, json))
}

fn conditions(inst: &Instance) -> Result<Outcome, CliError> {
    let (weights, ic) = prepare(inst)?;
    let r: ConditionReport = check_conditions(&ic, &inst.lattice, &inst.algebra, &weights)?;
    let lab = Labeller::new(inst);
    let describe = |list: &[(usize, InvariantLabel)]| -> Vec<Value> {
        list.iter()
            .map(|(p, l)| {
                let tag: Weight = weights.tag(&l.indices(), l.k);
                json!({"degree": p, "label": lab.label(l), "tag": tag.to_string()})
            })
            .collect()
    };
    let box_w: Vec<String> = r.box_witnesses.iter().map(|&i| inst.algebra.basis_names()[i].clone()).collect();
    let rows = [
        ("◇1", "diamond1", r.diamond1, describe(&r.diamond1_witnesses)),
        ("◇2", "diamond2", r.diamond2, describe(&r.diamond2_witnesses)),
        ("★", "star", r.star, describe(&r.star_witnesses)),
        ("□", "box", r.boxed, box_w.iter().map(|s| json!(s)).collect()),
    ];
    let mut t = Table::new(vec!["condition".into(), "holds".into(), "witnesses".into(), "first witness".into()]);
    for (sym, _, flag, w) in &rows {
        let first = w.first().map_or(String::new(), |v| match v {
            Value::String(s) => s.clone(),
            other => format!("{} (degree {}, tag {})", other["label"].as_str().unwrap_or(""), other["degree"], other["tag"].as_str().unwrap_or("")),
        });
        t.row(vec![sym.to_string(), flag.as_str().into(), w.len().to_string(), first]);
    }
    let mut doc = serde_json::Map::new();
    doc.insert("command".into(), json!("conditions"));
    for (_, key, flag, w) in rows {
        doc.insert(key.into(), json!({"holds": flag_json(flag), "witnesses": w}));
    }
    Ok(Outcome::ok(t.render(), Value::Object(doc)))
}

fn flag_json(f: Flag) -> Value {
    match f {
        Flag::True => json!(true),
        Flag::False => json!(false),
        Flag::Unknown => json!("unknown"),
    }
}

fn oracle(inst: &Instance) -> Result<Outcome, CliError> {
    let (weights, _) = prepare(inst)?;
    let r = verify_quasi_iso(&inst.algebra, &inst.representation, &weights)?;
    let mut t = Table::new(vec![
        "tag".into(),
        "block dims".into(),
        "block Betti".into(),
        "full Betti".into(),
        "equal".into(),
    ]);
    let list = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    for s in &r.sectors {
        t.row(vec![
            s.tag.to_string(),
            list(&s.block_dims),
            list(&s.block_betti),
            list(&s.full_betti),
            if s.equal { "yes".into() } else { "NO".into() },
        ]);
    }
    let all = r.all_equal();
    let mut human = t.render();
    human.push_str(&format!(
        "\n{} sector{}, {}\n",
        r.sectors.len(),
        if r.sectors.len() == 1 { "" } else { "s" },
        if all { "all equal" } else { "MISMATCH" }
    ));
    let json = json!({
        "command": "oracle",
        "all_equal": all,
        "sectors": r.sectors.iter().map(|s| json!({
            "tag": s.tag.to_string(),
            "block_dims": s.block_dims,
            "block_betti": s.block_betti,
            "full_betti": s.full_betti,
            "equal": s.equal,
        })).collect::<Vec<_>>(),
    });
    Ok(Outcome { human, json, exit_code: if all { 0 } else { 3 } })
}

fn nilshadow_cmd(inst: &Instance) -> Result<Outcome, CliError> {
    let g = &inst.algebra;
    g.validate().into_result()?;
    let weights = match &inst.weights {
        Some(w) => w.clone(),
        None => solvcohom_core::weights::infer_weights(g, &solvcohom_core::lie::RepresentationData::adjoint(g))?,
    };
    let u = nilshadow(g, &weights)?;
    let names = u.basis_names();
    let brackets: Vec<[String; 4]> = u
        .canonical_brackets()
        .iter()
        .map(|b| [names[b.left].clone(), names[b.right].clone(), names[b.out].clone(), b.coeff.to_string()])
        .collect();
    let all: Vec<usize> = (0..u.dim()).collect();
    let series = u.lower_central_series(&all);
    let unchanged = u.canonical_brackets() == g.canonical_brackets();
    let mut human = format!("nilshadow of dimension {}\n", u.dim());
    if brackets.is_empty() {
        human.push_str("all brackets vanish (abelian)\n");
    } else {
        let mut t = Table::new(vec!["bracket".into(), "term".into()]);
        for [l, r, o, c] in &brackets {
            let term = if c == "1" { o.clone() } else { format!("{c}*{o}") };
            t.row(vec![format!("[{l}, {r}]"), term]);
        }
        human.push_str(&t.render());
    }
    human.push_str(&format!(
        "lower central series dimensions: {}\nnilpotent: yes\n",
        series.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    ));
    if unchanged {
        human.push_str("identical to the input algebra\n");
    }
    let json = json!({
        "command": "nilshadow",
        "dim": u.dim(),
        "basis": names,
        "brackets": brackets,
        "abelian": u.is_abelian(),
        "lower_central_series": series,
        "nilpotent": true,
        "unchanged": unchanged,
    });
    Ok(Outcome::ok(human, json))
}

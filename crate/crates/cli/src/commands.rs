//! One function per subcommand. Each returns the JSON document, its text
//! rendering and whether every certificate passed.

use std::fmt::Write;
use std::path::{Path, PathBuf};

use altring_core::generators;
use altring_core::identities::{self, is_alternative, is_associative, is_flexible};
use altring_core::lie::{decompose, verify_theorem, Branch};
use altring_core::ring_file;
use altring_core::structure::{
    self, check_cell_centres, check_main_hypotheses, check_primeness, check_spade_club, idempotents, peirce_frame,
    verify_peirce_relations, Cell, IdempotentKind,
};
use altring_core::{AlgebraError, Result, Ring, ScalarDomain};
use serde_json::{json, Value};

use crate::render::{self, coords};
use crate::workspace::Workspace;

pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub pass: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    M2,
    Zorn,
    #[value(alias = "direct_sum")]
    DirectSum,
    Triangular2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum BranchArg {
    Dagger,
    Ddagger,
}

impl From<BranchArg> for Branch {
    fn from(b: BranchArg) -> Self {
        match b {
            BranchArg::Dagger => Branch::Dagger,
            BranchArg::Ddagger => Branch::DoubleDagger,
        }
    }
}

pub fn parse_field(text: &str) -> Result<ScalarDomain> {
    if text.eq_ignore_ascii_case("q") {
        return Ok(ScalarDomain::Rationals);
    }
    let p: u32 = text
        .parse()
        .map_err(|_| AlgebraError::InvalidField(format!("{text:?} is neither a prime nor Q")))?;
    ScalarDomain::prime_field(p)
}

pub fn gen(ws: &mut Workspace, kind: Kind, field: Option<&str>, rings: &[PathBuf]) -> Result<Ring> {
    if kind == Kind::DirectSum {
        let [a, b] = rings else {
            return Err(AlgebraError::Parse("direct_sum takes exactly two ring files".into()));
        };
        let (a, b) = (ws.load_ring(a)?, ws.load_ring(b)?);
        return generators::direct_sum(&a, &b);
    }
    if !rings.is_empty() {
        return Err(AlgebraError::Parse("only direct_sum takes ring files".into()));
    }
    let domain = parse_field(field.ok_or_else(|| AlgebraError::InvalidField("--field is required".into()))?)?;
    if let ScalarDomain::PrimeField(p) = domain {
        if p < 5 {
            eprintln!("warning: characteristic {p} < 5; the ring is not {p}-torsion-free, so 2- and 3-torsion-free results do not apply");
        }
    }
    match kind {
        Kind::M2 => generators::m2(domain),
        Kind::Zorn => generators::zorn(domain),
        Kind::Triangular2 => generators::triangular2(domain),
        Kind::DirectSum => unreachable!(),
    }
}

fn subspace_json(ring: &Ring, s: &altring_core::Subspace) -> Value {
    json!({ "dim": s.dim(), "basis": s.basis().iter().map(|v| ring.format_coords(v)).collect::<Vec<_>>() })
}

pub fn analyze(ws: &mut Workspace, path: &Path) -> Result<Outcome> {
    let ring = ws.load_ring(path)?;
    let budget = ws.config.scan.budget;
    let checks = vec![
        is_associative(&ring).into_report("associative", &ring),
        is_alternative(&ring).into_report("alternative", &ring),
        is_flexible(&ring).into_report("flexible", &ring),
    ];
    let centre = structure::center(&ring);
    let nucleus = structure::nucleus(&ring);
    let mut partial = false;
    let mut text = String::new();
    let _ = writeln!(text, "{} over {}, dimension {}", ring.name(), ring.domain(), ring.dim());
    let _ = writeln!(text, "unit: {}", coords(ring.unit_coords()));
    for r in &checks {
        let _ = writeln!(text, "{}: {}", r.condition, r.pass);
    }
    let torsion = json!({
        "2": identities::is_k_torsion_free(&ring, 2),
        "3": identities::is_k_torsion_free(&ring, 3),
    });
    let _ = writeln!(text, "2-torsion-free: {}, 3-torsion-free: {}", torsion["2"], torsion["3"]);
    let _ = writeln!(text, "centre dim {}, nucleus dim {}", centre.dim(), nucleus.dim());

    let census = match idempotents(&ring, budget) {
        Ok(found) => {
            let nontrivial = found.iter().filter(|e| e.kind == IdempotentKind::Nontrivial).count();
            let _ = writeln!(text, "idempotents: {} ({nontrivial} nontrivial)", found.len());
            json!({ "count": found.len(), "nontrivial": nontrivial })
        }
        Err(e) => {
            partial |= matches!(e, AlgebraError::BudgetExceeded { .. });
            let _ = writeln!(text, "idempotents: skipped ({e})");
            json!({ "skipped": e.to_string() })
        }
    };
    let primeness = match check_primeness(&ring, budget) {
        Ok(p) => {
            let _ = writeln!(text, "prime: {} (element criterion {})", p.prime, p.element_criterion);
            serde_json::to_value(&p).expect("report serializes")
        }
        Err(e) => {
            partial |= matches!(e, AlgebraError::BudgetExceeded { .. });
            let _ = writeln!(text, "prime: skipped ({e})");
            json!({ "skipped": e.to_string() })
        }
    };
    if partial {
        let _ = writeln!(text, "partial report: budget {budget} exceeded");
    }
    let json = json!({
        "ring": ring.name(),
        "domain": ring.domain().to_string(),
        "dim": ring.dim(),
        "basis": ring.basis_names(),
        "unit": ring.format_coords(ring.unit_coords()),
        "identities": checks,
        "torsion_free": torsion,
        "centre": subspace_json(&ring, &centre),
        "nucleus": subspace_json(&ring, &nucleus),
        "idempotents": census,
        "primeness": primeness,
        "budget": budget,
        "partial": partial,
    });
    Ok(Outcome { json, text, pass: true })
}

pub fn list_idempotents(ws: &mut Workspace, path: &Path) -> Result<Outcome> {
    let ring = ws.load_ring(path)?;
    let found = idempotents(&ring, ws.config.scan.budget)?;
    let mut text = String::new();
    let mut items = Vec::new();
    for e in &found {
        let kind = serde_json::to_value(e.kind).expect("kind serializes");
        let _ = writeln!(text, "{} {}", coords(e.element.coords()), kind.as_str().unwrap_or_default());
        items.push(json!({ "coords": e.element.coords(), "kind": kind }));
    }
    let _ = writeln!(text, "{} idempotents", found.len());
    Ok(Outcome { json: json!({ "ring": ring.name(), "count": found.len(), "idempotents": items }), text, pass: true })
}

pub fn peirce(ws: &mut Workspace, path: &Path, idempotent: &str) -> Result<Outcome> {
    let ring = ws.load_ring(path)?;
    let e1 = ws.element(&ring, idempotent)?;
    let frame = peirce_frame(&ring, &e1)?;
    let relations = verify_peirce_relations(&ring, &frame, ws.config.scan.budget)?;
    let mut text = String::new();
    let _ = writeln!(text, "e1 = {}, e2 = {}", coords(frame.e1()), coords(frame.e2()));
    for cell in Cell::ALL {
        let c = frame.component(cell);
        let basis: Vec<String> = c.basis().iter().map(|v| coords(v)).collect();
        let _ = writeln!(text, "{}: dim {} {}", cell.name(), c.dim(), basis.join(" "));
    }
    render::reports(&mut text, "relations", &relations);
    let pass = relations.iter().all(|r| r.pass);
    let json = json!({ "ring": ring.name(), "frame": frame, "relations": relations, "pass": pass });
    Ok(Outcome { json, text, pass })
}

pub fn check_conditions(ws: &mut Workspace, path: &Path, idempotent: &str) -> Result<Outcome> {
    let ring = ws.load_ring(path)?;
    let e1 = ws.element(&ring, idempotent)?;
    let frame = peirce_frame(&ring, &e1)?;
    let hypotheses = check_main_hypotheses(&ring, &frame, ws.config.scan.budget)?;
    let spade_club = check_spade_club(&ring, &frame)?;
    let cells = check_cell_centres(&ring, &frame)?;
    let mut text = String::new();
    render::reports(&mut text, "hypotheses", &hypotheses);
    render::reports(&mut text, "diagonal centralizers", &spade_club);
    let _ = writeln!(text, "cell centres:");
    for c in &cells {
        let _ = writeln!(
            text,
            "  {}: cell dim {}, centre dim {}, in cell + Z(R): {}, meets Z(R) in dim {}",
            c.cell.name(),
            c.cell_dim,
            c.centre_dim,
            c.contained_in_cell_plus_centre,
            c.meets_ring_centre_dim
        );
    }
    let pass = hypotheses.iter().chain(&spade_club).all(|r| r.pass);
    let json = json!({
        "ring": ring.name(),
        "idempotent": e1.coords(),
        "hypotheses": hypotheses,
        "diag_centralizers": spade_club,
        "cell_centres": cells,
        "pass": pass,
    });
    Ok(Outcome { json, text, pass })
}

pub struct MapArgs<'a> {
    pub source: &'a Path,
    pub target: &'a Path,
    pub map: &'a Path,
    pub idempotent: &'a str,
    pub branch: Option<BranchArg>,
}

fn load_map(ws: &mut Workspace, args: &MapArgs) -> Result<(altring_core::lie::MapTable, altring_core::Element)> {
    let source = ws.load_ring(args.source)?;
    ws.load_ring(args.target)?;
    let map = ws.load_map(args.map)?;
    if map.source().name() != source.name() {
        return Err(AlgebraError::Parse(format!(
            "map source is {:?}, --source is {:?}",
            map.source().name(),
            source.name()
        )));
    }
    let e1 = ws.element(&source, args.idempotent)?;
    Ok((map, e1))
}

fn decomposition_text(text: &mut String, d: &altring_core::lie::DecompositionResult) {
    let _ = writeln!(text, "branch: {}", d.branch.name());
    let _ = writeln!(text, "psi:");
    for row in d.psi.to_rows() {
        let _ = writeln!(text, "  {}", coords(&row));
    }
    let nonzero = d.tau.iter().filter(|&&t| t != 0).count();
    let _ = writeln!(text, "tau: nonzero on {nonzero} of {} elements", d.tau.len());
    render::reports(text, "certificates", &d.certificates);
    render::reports(text, "informational", &d.informational);
}

pub fn run_decompose(ws: &mut Workspace, args: &MapArgs) -> Result<Outcome> {
    let (map, e1) = load_map(ws, args)?;
    let d = decompose(&map, &e1, args.branch.map(Branch::from), &ws.config.scan)?;
    let mut text = String::new();
    decomposition_text(&mut text, &d);
    let pass = d.all_pass();
    let json = serde_json::to_value(&d).expect("decomposition serializes");
    Ok(Outcome { json, text, pass })
}

pub fn run_verify_theorem(ws: &mut Workspace, args: &MapArgs) -> Result<Outcome> {
    let (map, e1) = load_map(ws, args)?;
    let bundle = verify_theorem(&map, &e1, args.branch.map(Branch::from), &ws.config.scan)?;
    let mut text = String::new();
    let _ = writeln!(text, "{} -> {}, e1 = {}", bundle.source, bundle.target, coords(&bundle.idempotent));
    for stage in &bundle.stages {
        if stage.stage != "decomposition" {
            render::reports(&mut text, stage.stage, &stage.reports);
        }
    }
    if let Some(d) = &bundle.decomposition {
        decomposition_text(&mut text, d);
    }
    if let Some(f) = &bundle.failure {
        let _ = writeln!(text, "FAILED at {}: {}", f.stage, f.error);
        if let Some(w) = &f.witness {
            let parts: Vec<String> = w.iter().map(|v| format!("({})", v.join(","))).collect();
            let _ = writeln!(text, "  witness {}", parts.join(" "));
        }
    }
    let _ = writeln!(text, "{}", if bundle.pass { "theorem verified" } else { "theorem not verified" });
    let pass = bundle.pass;
    let json = serde_json::to_value(&bundle).expect("bundle serializes");
    Ok(Outcome { json, text, pass })
}

/// Exit status for an error: mathematical failures are 1, input and usage
/// problems are 2.
pub fn exit_code(e: &AlgebraError) -> u8 {
    match e {
        AlgebraError::NotBijective(_)
        | AlgebraError::NotIdempotentImage
        | AlgebraError::HypothesisFailed { .. }
        | AlgebraError::BranchUndetermined(_)
        | AlgebraError::AmbiguousCentralSplit(_)
        | AlgebraError::CertificationFailed { .. } => 1,
        _ => 2,
    }
}

/// JSON document for a mathematical failure.
pub fn failure_json(e: &AlgebraError) -> Value {
    let mut doc = json!({ "pass": false, "error": e.to_string() });
    match e {
        AlgebraError::HypothesisFailed { condition, witness } => {
            doc["condition"] = json!(condition);
            doc["witness"] = json!(witness);
        }
        AlgebraError::CertificationFailed { certificate, witness } => {
            doc["certificate"] = json!(certificate);
            doc["witness"] = json!(witness);
        }
        _ => {}
    }
    doc
}

pub fn ring_json(ring: &Ring) -> String {
    ring_file::ring_to_json(ring)
}

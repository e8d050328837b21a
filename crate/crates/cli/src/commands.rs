//! One function per subcommand; each returns a report and whether the
//! answer was negative.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use decompgen::algebra::{load_algebra, serialize_algebra, FiniteFreeAlgebra};
use decompgen::analysis::Analysis;
use decompgen::arith::PrimeSpec;
use decompgen::corpus::{self, CorpusEntry};
use decompgen::decomposition::{decomposition_matrix, dec_gen_membership, DecompositionMatrix, Membership, Triviality};
use decompgen::rep::SimpleSummary;
use decompgen::strata::{
    candidate_discriminant, dec_ex, radical_lattice, sample_primes, schur_discriminant_crosscheck, stratify as build_tree,
    ComponentStatus, Discriminant, Stratum, StratificationTree,
};
use decompgen::{Error, Options, Result};

use crate::report::{fields, table, Outcome, Report};
use crate::{Common, Input};

fn load(input: &str) -> Result<FiniteFreeAlgebra> {
    if let Some(id) = input.strip_prefix("corpus:") {
        return corpus::entry(id)?
            .map(|e| e.algebra)
            .ok_or_else(|| Error::Io(format!("no corpus entry named {id:?}")));
    }
    load_algebra(Path::new(input))
}

struct Context {
    analysis: Analysis,
    prime: PrimeSpec,
}

fn context(i: &Input) -> Result<Context> {
    let a = load(&i.input)?;
    let prime = PrimeSpec::parse(&i.common.prime, a.ring())?;
    Ok(Context {
        analysis: Analysis::new(a, &i.common.options()),
        prime,
    })
}

impl Context {
    fn name(&self) -> String {
        self.analysis.algebra().name().to_string()
    }
}

#[derive(Serialize)]
struct ValidateReport {
    algebra: String,
    ring: String,
    dim: usize,
    basis: Vec<String>,
    unit: Vec<String>,
    trace: Option<Vec<String>>,
}

pub fn validate(i: &Input) -> Result<Outcome> {
    let a = load(&i.input)?;
    let r = a.ring();
    let fmt = |v: &[decompgen::arith::Poly]| v.iter().map(|x| r.format_element(x)).collect::<Vec<_>>();
    let rep = ValidateReport {
        algebra: a.name().to_string(),
        ring: r.to_string(),
        dim: a.dim(),
        basis: a.basis_names().to_vec(),
        unit: fmt(a.unit()),
        trace: a.trace().map(fmt),
    };
    let text = fields(&[
        ("algebra", rep.algebra.clone()),
        ("ring", rep.ring.clone()),
        ("dim", rep.dim.to_string()),
        ("basis", rep.basis.join(" ")),
        ("unit", rep.unit.join(" ")),
        ("trace", rep.trace.as_ref().map_or("none".into(), |t| t.join(" "))),
        ("status", "valid".into()),
    ]);
    Ok(Outcome::positive(Report::new(&rep, text)))
}

#[derive(Serialize)]
struct Product {
    left: String,
    right: String,
    result: String,
    coefficient: String,
}

#[derive(Serialize)]
struct FiberReport {
    algebra: String,
    prime: String,
    field: String,
    dim: usize,
    unit: Vec<String>,
    constants: Vec<Product>,
}

pub fn fiber(i: &Input) -> Result<Outcome> {
    let c = context(i)?;
    let f = decompgen::algebra::specialize(c.analysis.algebra(), &c.prime)?;
    let names = c.analysis.algebra().basis_names();
    let k = f.field();
    let mut constants = Vec::new();
    for (x, row) in f.constants().iter().enumerate() {
        for (y, col) in row.iter().enumerate() {
            for (z, v) in col.iter().enumerate() {
                if !k.is_zero(v) {
                    constants.push(Product {
                        left: names[x].clone(),
                        right: names[y].clone(),
                        result: names[z].clone(),
                        coefficient: k.format(v),
                    });
                }
            }
        }
    }
    let rep = FiberReport {
        algebra: c.name(),
        prime: c.prime.to_string(),
        field: k.to_string(),
        dim: f.dim(),
        unit: f.unit().iter().map(|u| k.format(u)).collect(),
        constants,
    };
    let mut text = fields(&[
        ("algebra", rep.algebra.clone()),
        ("prime", rep.prime.clone()),
        ("field", rep.field.clone()),
        ("dim", rep.dim.to_string()),
        ("unit", rep.unit.join(" ")),
    ]);
    let rows: Vec<Vec<String>> = rep
        .constants
        .iter()
        .map(|p| vec![p.left.clone(), p.right.clone(), p.result.clone(), p.coefficient.clone()])
        .collect();
    text += &table(&["left", "right", "result", "coefficient"], &rows);
    Ok(Outcome::positive(Report::new(&rep, text)))
}

#[derive(Serialize)]
struct RadicalReport {
    algebra: String,
    prime: String,
    field: String,
    algebra_dim: usize,
    radical_dim: usize,
    nilpotency_index: Option<usize>,
    basis: Vec<Vec<String>>,
}

pub fn radical(i: &Input) -> Result<Outcome> {
    let c = context(i)?;
    let f = decompgen::algebra::specialize(c.analysis.algebra(), &c.prime)?;
    let j = decompgen::rep::radical(&f, c.analysis.options())?;
    let rep = RadicalReport {
        algebra: c.name(),
        prime: c.prime.to_string(),
        field: f.field().to_string(),
        algebra_dim: f.dim(),
        radical_dim: j.dim(),
        nilpotency_index: f.nilpotency_index(&j),
        basis: j.format_basis(),
    };
    let mut text = fields(&[
        ("algebra", rep.algebra.clone()),
        ("prime", rep.prime.clone()),
        ("field", rep.field.clone()),
        ("algebra dim", rep.algebra_dim.to_string()),
        ("radical dim", rep.radical_dim.to_string()),
        ("nilpotency index", rep.nilpotency_index.map_or("-".into(), |n| n.to_string())),
    ]);
    for v in &rep.basis {
        text += &format!("[{}]\n", v.join(", "));
    }
    Ok(Outcome::positive(Report::new(&rep, text)))
}

#[derive(Serialize)]
struct SimplesReport {
    algebra: String,
    prime: String,
    field: String,
    radical_dim: usize,
    split: bool,
    simples: Vec<SimpleSummary>,
}

fn simples_report(c: &Context) -> Result<SimplesReport> {
    let fa = c.analysis.fiber(&c.prime)?;
    let w = &fa.wedderburn;
    Ok(SimplesReport {
        algebra: c.name(),
        prime: c.prime.to_string(),
        field: w.field.to_string(),
        radical_dim: w.radical_dim(),
        split: w.is_split(),
        simples: w.summaries(if c.prime.is_generic() { "S" } else { "T" }),
    })
}

fn simples_table(rep: &SimplesReport) -> String {
    let mut text = fields(&[
        ("algebra", rep.algebra.clone()),
        ("prime", rep.prime.clone()),
        ("field", rep.field.clone()),
        ("radical dim", rep.radical_dim.to_string()),
        ("split", rep.split.to_string()),
    ]);
    let rows: Vec<Vec<String>> = rep
        .simples
        .iter()
        .map(|s| {
            vec![
                s.id.clone(),
                s.dim.to_string(),
                s.endomorphism_dim.to_string(),
                s.multiplicity.to_string(),
            ]
        })
        .collect();
    text += &table(&["simple", "dim", "end dim", "multiplicity"], &rows);
    text
}

pub fn simples(i: &Input) -> Result<Outcome> {
    let rep = simples_report(&context(i)?)?;
    let text = simples_table(&rep);
    Ok(Outcome::positive(Report::new(&rep, text)))
}

pub fn split_check(i: &Input) -> Result<Outcome> {
    let rep = simples_report(&context(i)?)?;
    let text = simples_table(&rep);
    let negative = !rep.split;
    Ok(Outcome {
        report: Report::new(&rep, text),
        negative,
    })
}

#[derive(Serialize)]
struct FingerprintEntry {
    simple: String,
    dim: usize,
    polynomials: Vec<String>,
}

#[derive(Serialize)]
struct FingerprintReport {
    algebra: String,
    prime: String,
    field: String,
    basis: Vec<String>,
    simples: Vec<FingerprintEntry>,
}

pub fn fingerprint(i: &Input) -> Result<Outcome> {
    let c = context(i)?;
    let fa = c.analysis.fiber(&c.prime)?;
    let prefix = if c.prime.is_generic() { "S" } else { "T" };
    let rep = FingerprintReport {
        algebra: c.name(),
        prime: c.prime.to_string(),
        field: fa.wedderburn.field.to_string(),
        basis: c.analysis.algebra().basis_names().to_vec(),
        simples: fa
            .wedderburn
            .simples
            .iter()
            .enumerate()
            .map(|(n, s)| FingerprintEntry {
                simple: format!("{prefix}{}", n + 1),
                dim: s.dim(),
                polynomials: s.fingerprint.format_polys(),
            })
            .collect(),
    };
    let mut text = fields(&[
        ("algebra", rep.algebra.clone()),
        ("prime", rep.prime.clone()),
        ("field", rep.field.clone()),
    ]);
    let mut headers = vec!["simple"];
    headers.extend(rep.basis.iter().map(String::as_str));
    let rows: Vec<Vec<String>> = rep
        .simples
        .iter()
        .map(|s| std::iter::once(s.simple.clone()).chain(s.polynomials.iter().cloned()).collect())
        .collect();
    text += &table(&headers, &rows);
    Ok(Outcome::positive(Report::new(&rep, text)))
}

#[derive(Serialize)]
struct DecmatReport {
    #[serde(flatten)]
    matrix: DecompositionMatrix,
    trivial: bool,
}

pub fn decmat(i: &Input) -> Result<Outcome> {
    let c = context(i)?;
    let matrix = decomposition_matrix(&c.analysis, &c.prime)?;
    let mut text = fields(&[("algebra", matrix.algebra.clone()), ("prime", matrix.prime.clone())]);
    text += &matrix.format_table();
    text += &fields(&[("trivial", matrix.is_trivial().to_string())]);
    let rep = DecmatReport {
        trivial: matrix.is_trivial(),
        matrix,
    };
    Ok(Outcome::positive(Report::new(&rep, text)))
}

fn membership_text(algebra: &str, m: &Membership) -> String {
    let status = match m.status {
        Triviality::Trivial => "Trivial",
        Triviality::NonTrivial => "NonTrivial",
    };
    let mut text = fields(&[
        ("algebra", algebra.to_string()),
        ("prime", m.prime.clone()),
        ("generic radical dim", m.radicals.generic_radical_dim.to_string()),
        ("fiber radical dim", m.radicals.fiber_radical_dim.to_string()),
        ("status", status.to_string()),
    ]);
    if let Some(d) = &m.matrix {
        text += &d.format_table();
    }
    text
}

pub fn trivial(i: &Input) -> Result<Outcome> {
    let c = context(i)?;
    let m = dec_gen_membership(&c.analysis, &c.prime)?;
    let text = membership_text(&c.name(), &m);
    Ok(Outcome {
        negative: m.status == Triviality::NonTrivial,
        report: Report::new(&m, text),
    })
}

pub fn schur(i: &Input) -> Result<Outcome> {
    let c = context(i)?;
    let x = schur_discriminant_crosscheck(&c.analysis)?;
    let rows: Vec<Vec<String>> = x
        .schur_elements
        .iter()
        .map(|s| vec![s.simple.clone(), s.dim.to_string(), s.value.clone()])
        .collect();
    let mut text = fields(&[("algebra", c.name())]);
    text += &table(&["simple", "dim", "schur element"], &rows);
    text += &fields(&[
        ("product", x.product.clone()),
        ("primes of product", format!("{{{}}}", x.schur_primes.join(", "))),
        ("excluded primes", format!("{{{}}}", x.excluded.join(", "))),
        ("agrees", x.agrees.to_string()),
    ]);
    Ok(Outcome {
        negative: !x.agrees,
        report: Report::new(&x, text),
    })
}

fn status_cells(s: &ComponentStatus) -> (String, String) {
    match s {
        ComponentStatus::Excluded {
            generic_radical_dim,
            fiber_radical_dim,
        } => ("Excluded".into(), format!("radical {generic_radical_dim} -> {fiber_radical_dim}")),
        ComponentStatus::RecoveredTrivial { radical_dim } => ("RecoveredTrivial".into(), format!("radical {radical_dim}")),
        ComponentStatus::Unknown { reason } => ("Unknown".into(), reason.clone()),
    }
}

fn discriminant_text(d: &Discriminant) -> String {
    let mut text = fields(&[("candidate", d.candidate.clone())]);
    let rows: Vec<Vec<String>> = d
        .components
        .iter()
        .map(|c| {
            let (s, e) = status_cells(&c.status);
            vec![c.prime.clone(), s, e]
        })
        .collect();
    text += &table(&["prime", "status", "evidence"], &rows);
    text
}

#[derive(Serialize)]
struct DiscriminantReport {
    algebra: String,
    #[serde(flatten)]
    discriminant: Discriminant,
    excluded: Vec<String>,
}

pub fn discriminant(i: &Input) -> Result<Outcome> {
    let c = context(i)?;
    let d = dec_ex(&c.analysis)?;
    let text = fields(&[("algebra", c.name()), ("ring", d.ring.clone())]) + &discriminant_text(&d);
    let rep = DiscriminantReport {
        algebra: c.name(),
        excluded: d.excluded_labels(),
        discriminant: d,
    };
    Ok(Outcome::positive(Report::new(&rep, text)))
}

#[derive(Serialize)]
struct StratifyReport {
    #[serde(flatten)]
    tree: StratificationTree,
    strata: Vec<Stratum>,
}

pub fn stratify(i: &Input) -> Result<Outcome> {
    let c = context(i)?;
    let tree = build_tree(&c.analysis);
    let strata = tree.strata();
    let mut text = fields(&[("algebra", tree.algebra.clone()), ("ring", tree.ring.clone())]);
    for n in &tree.nodes {
        text += &format!("\nnode {} over {}\n", n.generic_point, n.ring);
        match (&n.discriminant, &n.unresolved) {
            (_, Some(why)) => text += &format!("unresolved: {why}\n"),
            (Some(d), None) => text += &discriminant_text(d),
            (None, None) => {}
        }
    }
    text += "\n";
    let rows: Vec<Vec<String>> = strata
        .iter()
        .map(|s| {
            let note = if s.unresolved {
                "unresolved".to_string()
            } else if !s.unverified.is_empty() {
                format!("unverified {}", s.unverified.join(" "))
            } else {
                String::new()
            };
            vec![s.generic_point.clone(), s.description.clone(), note]
        })
        .collect();
    text += &table(&["generic point", "stratum", "note"], &rows);
    Ok(Outcome::positive(Report::new(&StratifyReport { tree, strata }, text)))
}

#[derive(Serialize)]
struct Written {
    id: String,
    path: String,
}

pub fn corpus_build(dir: &PathBuf) -> Result<Outcome> {
    std::fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    let mut written = Vec::new();
    for e in corpus::corpus()? {
        let path = dir.join(format!("{}.alg", e.id));
        std::fs::write(&path, serialize_algebra(&e.algebra)).map_err(|err| Error::Io(format!("{}: {err}", path.display())))?;
        written.push(Written {
            id: e.id,
            path: path.display().to_string(),
        });
    }
    let rows: Vec<Vec<String>> = written.iter().map(|w| vec![w.id.clone(), w.path.clone()]).collect();
    let text = table(&["id", "path"], &rows);
    Ok(Outcome::positive(Report::new(&written, text)))
}

#[derive(Serialize)]
struct AlgebraCheck {
    id: String,
    excluded: Vec<String>,
    expected_excluded: Option<Vec<String>>,
    checked: usize,
    disagreements: Vec<String>,
    skipped: Vec<String>,
    error: Option<String>,
}

impl AlgebraCheck {
    fn ok(&self) -> bool {
        self.error.is_none()
            && self.disagreements.is_empty()
            && self.expected_excluded.as_ref().is_none_or(|e| *e == self.excluded)
    }
}

struct Plan {
    check: AlgebraCheck,
    analysis: Analysis,
    /// Verification primes, each with whether it should be trivial.
    jobs: Vec<(PrimeSpec, bool)>,
}

fn plan_entry(e: &CorpusEntry, opts: &Options, samples: usize) -> Plan {
    let mut check = AlgebraCheck {
        id: e.id.clone(),
        excluded: Vec::new(),
        expected_excluded: e.expected_excluded().map(<[String]>::to_vec),
        checked: 0,
        disagreements: Vec::new(),
        skipped: Vec::new(),
        error: None,
    };
    let analysis = Analysis::new(e.algebra.clone(), &Options { verify: true, ..*opts });
    let mut jobs = Vec::new();
    let mut run = || -> Result<()> {
        if let Some(expect) = e.expected_split() {
            let split = analysis.generic()?.wedderburn.is_split();
            if split != expect {
                check.disagreements.push(format!("generic fiber split is {split}, expected {expect}"));
            }
        }
        let d = dec_ex(&analysis)?;
        check.excluded = d.excluded_labels();
        let g = candidate_discriminant(&analysis, &radical_lattice(&analysis)?)?.generator;
        jobs.extend(d.excluded().into_iter().map(|p| (p.clone(), false)));
        jobs.extend(sample_primes(e.algebra.ring(), Some(&g), samples, opts.seed).into_iter().map(|p| (p, true)));
        Ok(())
    };
    if let Err(err) = run() {
        check.error = Some(err.to_string());
    }
    Plan { check, analysis, jobs }
}

pub fn verify_all(common: &Common, samples: usize) -> Result<Outcome> {
    let opts = common.options();
    let entries: Vec<CorpusEntry> = corpus::corpus()?.into_iter().filter(|e| !e.stretch).collect();
    let mut plans: Vec<Plan> = entries.par_iter().map(|e| plan_entry(e, &opts, samples)).collect();
    let jobs: Vec<(usize, usize)> = plans
        .iter()
        .enumerate()
        .flat_map(|(i, p)| (0..p.jobs.len()).map(move |j| (i, j)))
        .collect();
    let results: Vec<Result<Membership>> = jobs
        .par_iter()
        .map(|&(i, j)| dec_gen_membership(&plans[i].analysis, &plans[i].jobs[j].0))
        .collect();
    for (&(i, j), result) in jobs.iter().zip(results) {
        let plan = &mut plans[i];
        let (p, expect_trivial) = &plan.jobs[j];
        match result {
            Ok(m) => {
                plan.check.checked += 1;
                if (m.status == Triviality::Trivial) != *expect_trivial {
                    plan.check.disagreements.push(format!("{p}: unexpected {:?}", m.status));
                }
            }
            Err(err @ Error::InvariantViolation(_)) => plan.check.disagreements.push(format!("{p}: {err}")),
            Err(err) => plan.check.skipped.push(format!("{p}: {err}")),
        }
    }
    let checks: Vec<AlgebraCheck> = plans.into_iter().map(|p| p.check).collect();
    let rows: Vec<Vec<String>> = checks
        .iter()
        .map(|c| {
            vec![
                c.id.clone(),
                format!("{{{}}}", c.excluded.join(", ")),
                c.checked.to_string(),
                c.skipped.len().to_string(),
                if c.ok() { "ok".into() } else { "FAIL".into() },
            ]
        })
        .collect();
    let mut text = table(&["algebra", "excluded", "checked", "skipped", "result"], &rows);
    for c in checks.iter().filter(|c| !c.ok()) {
        for d in &c.disagreements {
            text += &format!("{}: {d}\n", c.id);
        }
        if let Some(err) = &c.error {
            text += &format!("{}: {err}\n", c.id);
        }
    }
    let negative = checks.iter().any(|c| !c.ok());
    Ok(Outcome {
        report: Report::new(&checks, text),
        negative,
    })
}

use std::fmt;
use std::io::Write;

use anyhow::{bail, Result};
use matroid_kl::closedforms::{g_kh, p_kh, q_kh, z_kh};
use matroid_kl::lab::{
    gamma_positivity_sweep, relaxation_theorem_suite, sparse_paving_corpus,
    tableaux_identity_suite, verify_appendix, CheckRecord, CorpusEntry,
};
use matroid_kl::relaxation::{paving_profile, relax_step};
use matroid_kl::tableaux::{count, enumerate_fillings, TableauShape};
use matroid_kl::{
    beta, characteristic, free_subsets, relax_all, stressed_hyperplanes, tutte, IntPoly, KlCache,
    Matroid, Subset,
};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::{
    Command, ComputeArgs, RelaxArgs, ShapeKind, SweepArgs, TableauxAction, Target, VerifySuite,
};

/// Largest `--max-cells` accepted by the tableau suite.
const MAX_SUITE_CELLS: usize = 30;

#[derive(Debug)]
pub struct CapExceeded(pub String);

impl fmt::Display for CapExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CapExceeded {}

#[derive(Debug)]
pub struct ChecksFailed {
    pub failed: usize,
    pub total: usize,
}

impl fmt::Display for ChecksFailed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} of {} checks failed", self.failed, self.total)
    }
}

impl std::error::Error for ChecksFailed {}

pub fn exit_code(e: &anyhow::Error) -> u8 {
    for cause in e.chain() {
        if cause.is::<ChecksFailed>() {
            return 3;
        }
        if cause.is::<CapExceeded>() {
            return 2;
        }
        if let Some(
            matroid_kl::Error::GroundSetTooLarge { .. } | matroid_kl::Error::ShapeTooLarge { .. },
        ) = cause.downcast_ref::<matroid_kl::Error>()
        {
            return 2;
        }
    }
    1
}

pub fn run(cmd: Command) -> Result<()> {
    match cmd {
        Command::Compute(args) => compute(args),
        Command::Relax(args) => relax(args),
        Command::Verify { suite } => verify(suite),
        Command::Tableaux { action } => tableaux(action),
    }
}

fn cap(m: &Matroid, limit: usize, flag: &str) -> Result<()> {
    if m.n() > limit {
        return Err(CapExceeded(format!(
            "ground set of {} elements exceeds {flag} {limit}",
            m.n()
        ))
        .into());
    }
    Ok(())
}

fn big(x: &BigInt) -> Value {
    Value::Number(x.to_string().parse().expect("integers are JSON numbers"))
}

fn subsets_json(sets: &[Subset]) -> Value {
    Value::Array(sets.iter().map(|s| json!(s.to_vec())).collect())
}

fn subsets_text(sets: &[Subset]) -> String {
    if sets.is_empty() {
        return "none".into();
    }
    sets.iter()
        .map(Subset::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn compute(args: ComputeArgs) -> Result<()> {
    let m = args.source.load()?;
    let mut targets = args.targets.clone();
    targets.dedup();
    if targets.iter().any(|t| t.uses_recursion()) {
        cap(&m, args.caps.max_n, "--max-n")?;
    }
    cap(&m, args.caps.max_tutte_n, "--max-tutte-n")?;

    let cache = targets
        .iter()
        .any(|t| t.uses_recursion())
        .then(|| KlCache::new(&m));
    if let Some(c) = &cache {
        c.verify()?;
    }
    let kl = || cache.as_ref().expect("cache built for recursion targets");

    let mut out = Map::new();
    out.insert("source".into(), json!(args.source.label()));
    out.insert("n".into(), json!(m.n()));
    out.insert("rank".into(), json!(m.rank()));
    let mut text = vec![format!(
        "{}: n = {}, rank = {}",
        args.source.label(),
        m.n(),
        m.rank()
    )];
    for t in targets {
        let (value, shown): (Value, String) = match t {
            Target::Tutte => {
                let p = tutte(&m)?;
                (p.to_json(), p.to_string())
            }
            Target::Char => {
                let p = characteristic(&m)?;
                (p.to_json(), p.to_string())
            }
            Target::Beta => {
                let b = beta(&m)?;
                (big(&b), b.to_string())
            }
            Target::P => poly_out(&kl().p()),
            Target::Q => poly_out(&kl().q()),
            Target::Z => poly_out(&kl().z()),
            Target::Gamma => poly_out(&kl().gamma()?.as_poly()),
            Target::Stressed => {
                let s = stressed_hyperplanes(&m);
                (subsets_json(&s), subsets_text(&s))
            }
            Target::Free => {
                let s = free_subsets(&m);
                (subsets_json(&s), subsets_text(&s))
            }
            Target::Profile => {
                let prof = paving_profile(&m)?;
                let shown = prof
                    .lambda
                    .iter()
                    .map(|(h, c)| format!("{c} of size {h}"))
                    .collect::<Vec<_>>();
                let shown = if shown.is_empty() {
                    "uniform".to_string()
                } else {
                    shown.join(", ")
                };
                (serde_json::to_value(&prof)?, shown)
            }
        };
        text.push(format!("{}: {shown}", t.name()));
        out.insert(t.name().into(), value);
    }
    if args.json {
        println!("{}", Value::Object(out));
    } else {
        println!("{}", text.join("\n"));
    }
    Ok(())
}

fn poly_out(p: &IntPoly) -> (Value, String) {
    (p.to_json(), p.to_string())
}

fn deltas_json(k: usize, h: usize) -> Result<Value> {
    Ok(json!({
        "P": p_kh(k, h)?.to_json(),
        "Q": q_kh(k, h)?.to_json(),
        "Z": z_kh(k, h)?.to_json(),
        "gamma": g_kh(k, h)?.to_json(),
    }))
}

fn relax(args: RelaxArgs) -> Result<()> {
    let m = args.source.load()?;
    cap(&m, args.caps.max_tutte_n, "--max-tutte-n")?;
    let k = m.rank();
    let out = if args.all {
        let (relaxed, prof) = relax_all(&m)?;
        let mut deltas = Vec::new();
        for (&h, &c) in &prof.lambda {
            deltas.push(json!({ "h": h, "count": c, "deltas": deltas_json(k, h)? }));
        }
        json!({ "matroid": relaxed.to_json(), "profile": prof, "deltas": deltas })
    } else {
        let elems = args.hyperplane.unwrap_or_default();
        if let Some(&e) = elems.iter().find(|&&e| e >= m.n()) {
            return Err(matroid_kl::Error::ElementOutOfRange {
                element: e,
                n: m.n(),
            }
            .into());
        }
        let h_set = Subset::from_elements(elems);
        let (relaxed, step) = relax_step(&m, h_set)?;
        let deltas = if k >= 1 && step.h >= k {
            deltas_json(k, step.h)?
        } else {
            json!({ "P": [0], "Q": [0], "Z": [0], "gamma": [0] })
        };
        json!({
            "matroid": relaxed.to_json(),
            "hyperplane": h_set.to_vec(),
            "k": k,
            "h": step.h,
            "added_bases": step.added_bases.len(),
            "profile": paving_profile(&m).ok(),
            "deltas": deltas,
        })
    };
    println!("{out}");
    Ok(())
}

/// Stream records as JSON lines; any failure becomes exit code 3.
fn report(records: &[CheckRecord]) -> Result<()> {
    let mut out = std::io::stdout().lock();
    for r in records {
        if let Err(e) = writeln!(out, "{}", r.to_json_line()) {
            // a closed reader (e.g. `| head`) is not an error; stop writing
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                break;
            }
            return Err(e.into());
        }
    }
    let failed = records.iter().filter(|r| !r.passed()).count();
    eprintln!(
        "{} of {} checks passed",
        records.len() - failed,
        records.len()
    );
    if failed > 0 {
        return Err(ChecksFailed {
            failed,
            total: records.len(),
        }
        .into());
    }
    Ok(())
}

fn verify(suite: VerifySuite) -> Result<()> {
    match suite {
        VerifySuite::Appendix { n_max } => {
            if n_max < 3 {
                bail!("--n-max must be at least 3");
            }
            report(&verify_appendix(n_max))
        }
        VerifySuite::Relaxation { source, caps } => {
            let m = source.load()?;
            cap(&m, caps.max_n, "--max-n")?;
            report(&relaxation_theorem_suite(&m))
        }
        VerifySuite::GammaSweep(args) => sweep(args),
        VerifySuite::Tableaux { max_cells } => {
            if max_cells > MAX_SUITE_CELLS {
                return Err(CapExceeded(format!(
                    "--max-cells {max_cells} exceeds {MAX_SUITE_CELLS}"
                ))
                .into());
            }
            report(&tableaux_identity_suite(max_cells))
        }
    }
}

fn sweep(args: SweepArgs) -> Result<()> {
    let mut corpus = Vec::new();
    if args.sparse_paving {
        let n_max = args
            .source
            .n
            .ok_or_else(|| anyhow::anyhow!("--sparse-paving needs --n"))?;
        let samples = args.samples.unwrap_or(0);
        for s in sparse_paving_corpus(samples, n_max, args.seed)? {
            let label = format!("sparse paving k={} n={} lambda={}", s.k, s.n, s.lambda());
            corpus.push(CorpusEntry::seeded(label, s.matroid(), s.seed));
        }
    }
    if args.source.is_given() {
        corpus.push(CorpusEntry::new(args.source.label(), args.source.load()?));
    }
    if corpus.is_empty() {
        bail!("empty corpus: pass --sparse-paving with --n and --samples, or a matroid source");
    }
    for e in &corpus {
        cap(&e.matroid, args.caps.max_n, "--max-n")?;
    }
    let records: Vec<CheckRecord> = gamma_positivity_sweep(&corpus)
        .iter()
        .map(|e| e.to_record())
        .collect();
    report(&records)
}

fn tableaux(action: TableauxAction) -> Result<()> {
    let TableauxAction::Count {
        kind,
        a,
        i,
        b,
        barred,
        enumerate,
        json,
    } = action;
    let mut shape = match kind {
        ShapeKind::Syt => TableauShape::syt(a, i, b),
        ShapeKind::Skyt => TableauShape::skyt(a, i, b),
    };
    if barred {
        shape = shape.barred();
    }
    let n = count(&shape);
    if enumerate {
        let walked = enumerate_fillings(&shape)?.count();
        if BigInt::from(walked) != n {
            bail!("enumeration found {walked} fillings but the count is {n}");
        }
    }
    if json {
        println!(
            "{}",
            json!({ "shape": shape, "cells": shape.cell_count(), "count": big(&n) })
        );
    } else {
        println!("{n}");
    }
    Ok(())
}

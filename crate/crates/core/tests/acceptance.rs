//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Mutex;
use std::time::Instant;

use matroid_kl::closedforms::{
    domination_check, g_kh, p_kh, p_uniform, paving_gamma, paving_p, paving_q, paving_z, q_kh,
    q_uniform, thagomizer_gamma, thagomizer_p, z_kh, z_uniform,
};
use matroid_kl::lab::{
    gamma_positivity_sweep, relaxation_theorem_suite, sparse_paving_corpus,
    tableaux_identity_suite, verify_appendix, CheckRecord, CorpusEntry,
};
use matroid_kl::matroid::{
    complete_bipartite_2n, fan, figure_one, projective_geometry, thagomizer, uniform, v_matroid,
    wheel, whirl,
};
use matroid_kl::relaxation::paving_profile;
use matroid_kl::{
    gamma_contract, gamma_expand, relax, stressed_hyperplanes, IntPoly, KlCache, Matroid,
    PavingProfile,
};

const PAVING_SEED: u64 = 20_240_301;
const SWEEP_SEED: u64 = 7;

type Outcome = Result<String, String>;

/// Every P/Q/Z computed anywhere in the run, for the global coefficient checks.
#[derive(Default)]
struct Registry {
    seen: Mutex<Vec<Seen>>,
}

struct Seen {
    label: String,
    k: usize,
    p: Option<IntPoly>,
    q: Option<IntPoly>,
    z: IntPoly,
}

impl Registry {
    fn cache(&self, label: impl Into<String>, m: &Matroid) -> Result<KlCache, String> {
        let label = label.into();
        let c = KlCache::new(m);
        c.verify().map_err(|e| format!("{label}: {e}"))?;
        self.seen.lock().unwrap().push(Seen {
            label,
            k: m.rank(),
            p: Some(c.p()),
            q: Some(c.q()),
            z: c.z(),
        });
        Ok(c)
    }

    fn z_only(&self, label: String, k: usize, z: IntPoly) {
        self.seen.lock().unwrap().push(Seen {
            label,
            k,
            p: None,
            q: None,
            z,
        });
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_pass(records: &[CheckRecord]) -> Result<(), String> {
    match records.iter().find(|r| !r.passed()) {
        Some(r) => Err(r.to_json_line()),
        None => Ok(()),
    }
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

fn uniform_oracle(reg: &Registry) -> Outcome {
    let mut count = 0;
    for n in 1..=9 {
        for k in 1..=n {
            let c = reg.cache(format!("U({k},{n})"), &uniform(k, n).map_err(e)?)?;
            let want = (
                p_uniform(k, n).map_err(e)?,
                q_uniform(k, n).map_err(e)?,
                z_uniform(k, n).map_err(e)?,
            );
            ensure((c.p(), c.q(), c.z()) == want, || {
                format!("U({k},{n}): recursion disagrees with closed forms")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} uniform matroids"))
}

/// Relax every stressed hyperplane of size `h` and return the P/Q/Z deltas.
fn deltas(reg: &Registry, label: &str, m: &Matroid, h: usize) -> Result<Vec<[IntPoly; 3]>, String> {
    let before = reg.cache(label, m)?;
    let mut out = Vec::new();
    for hs in stressed_hyperplanes(m).into_iter().filter(|s| s.len() == h) {
        let after = reg.cache(
            format!("{label} relaxed at {hs}"),
            &relax(m, hs).map_err(e)?,
        )?;
        out.push([
            &after.p() - &before.p(),
            &after.q() - &before.q(),
            &after.z() - &before.z(),
        ]);
    }
    Ok(out)
}

fn delta_independence(reg: &Registry) -> Outcome {
    let want = [
        p_kh(3, 4).map_err(e)?,
        q_kh(3, 4).map_err(e)?,
        z_kh(3, 4).map_err(e)?,
    ];
    let mut measured = 0;
    for (label, m) in [
        ("V(3,4,6)", v_matroid(3, 4, 6).map_err(e)?),
        ("V(3,4,7)", v_matroid(3, 4, 7).map_err(e)?),
        ("figure one", figure_one()),
    ] {
        let ds = deltas(reg, label, &m, 4)?;
        ensure(!ds.is_empty(), || {
            format!("{label}: no stressed hyperplane of size 4")
        })?;
        for d in ds {
            ensure(d == want, || {
                format!("{label}: deltas {} {} {} differ", d[0], d[1], d[2])
            })?;
            measured += 1;
        }
    }
    Ok(format!(
        "{measured} relaxations, deltas P={} Q={} Z={}",
        want[0], want[1], want[2]
    ))
}

fn paving_corpus() -> Result<Vec<(String, Matroid, PavingProfile)>, String> {
    let mut out = vec![(
        "PG(2,2)".to_string(),
        projective_geometry(2, 2).map_err(e)?,
        PavingProfile::sparse(3, 7, 7).map_err(e)?,
    )];
    for s in sparse_paving_corpus(50, 10, PAVING_SEED).map_err(e)? {
        let prof = PavingProfile::sparse(s.k, s.n, s.lambda() as u64).map_err(e)?;
        out.push((
            format!("sparse paving k={} n={} seed={}", s.k, s.n, s.seed),
            s.matroid(),
            prof,
        ));
    }
    Ok(out)
}

fn paving_formulas(reg: &Registry) -> Outcome {
    let corpus = paving_corpus()?;
    for (label, m, prof) in &corpus {
        ensure(m.is_sparse_paving(), || {
            format!("{label} is not sparse paving")
        })?;
        let measured = paving_profile(m).map_err(e)?;
        ensure(measured == *prof, || {
            format!("{label}: measured profile {measured:?}")
        })?;
        let c = reg.cache(label.clone(), m)?;
        let closed = (
            paving_p(prof).map_err(e)?,
            paving_q(prof).map_err(e)?,
            paving_z(prof).map_err(e)?,
        );
        ensure((c.p(), c.q(), c.z()) == closed, || {
            format!("{label}: P/Q/Z differ from the paving formulas")
        })?;
        let g = c.gamma().map_err(e)?;
        ensure(g == paving_gamma(prof).map_err(e)?, || {
            format!("{label}: gamma differs")
        })?;
    }
    let lambdas: usize = corpus
        .iter()
        .map(|(_, _, p)| p.lambda.values().sum::<u64>() as usize)
        .sum();
    Ok(format!(
        "{} matroids, {lambdas} circuit-hyperplanes in total",
        corpus.len()
    ))
}

fn relaxation_corpus() -> Result<Vec<(String, Matroid)>, String> {
    let mut out = vec![("figure one".to_string(), figure_one())];
    for (k, h, n) in [
        (2, 3, 5),
        (2, 3, 6),
        (3, 4, 6),
        (3, 4, 7),
        (3, 5, 7),
        (4, 5, 7),
        (4, 6, 8),
    ] {
        out.push((format!("V({k},{h},{n})"), v_matroid(k, h, n).map_err(e)?));
    }
    out.push(("PG(2,2)".into(), projective_geometry(2, 2).map_err(e)?));
    out.push(("wheel(4)".into(), wheel(4).map_err(e)?));
    for s in sparse_paving_corpus(20, 9, PAVING_SEED).map_err(e)? {
        out.push((
            format!("sparse paving k={} n={} seed={}", s.k, s.n, s.seed),
            s.matroid(),
        ));
    }
    Ok(out)
}

const STRUCTURAL: [&str; 7] = [
    "stressed_hyperplanes_pairwise_intersection",
    "relaxation_rank_function",
    "relaxation_flats",
    "relaxation_tutte_delta",
    "relaxation_beta_delta",
    "relaxation_connected",
    "relaxation_characteristic_delta",
];

fn suite_over_corpus(names: &[&str]) -> Result<(usize, usize), String> {
    let (mut pairs, mut checks) = (0, 0);
    for (label, m) in relaxation_corpus()? {
        let recs: Vec<CheckRecord> = relaxation_theorem_suite(&m)
            .into_iter()
            .filter(|r| names.contains(&r.check.as_str()))
            .collect();
        all_pass(&recs).map_err(|w| format!("{label}: {w}"))?;
        pairs += stressed_hyperplanes(&m)
            .iter()
            .filter(|h| h.len() >= m.rank())
            .count();
        checks += recs.len();
    }
    ensure(pairs > 0, || "corpus has no relaxable pairs".into())?;
    Ok((pairs, checks))
}

fn structural_deltas() -> Outcome {
    let (pairs, checks) = suite_over_corpus(&STRUCTURAL)?;
    Ok(format!("{pairs} (M, H) pairs, {checks} checks"))
}

fn round_trip() -> Outcome {
    let (pairs, checks) = suite_over_corpus(&["relaxation_round_trip"])?;
    ensure(pairs == checks, || {
        format!("{pairs} pairs but {checks} round-trip checks")
    })?;
    Ok(format!("{pairs} (M, H) pairs"))
}

fn simplified_relaxation() -> Outcome {
    for (k, h, n) in [(2, 3, 5), (3, 4, 6), (3, 5, 7)] {
        let v = v_matroid(k, h, n).map_err(e)?;
        let hs: Vec<_> = stressed_hyperplanes(&v)
            .into_iter()
            .filter(|s| s.len() == h)
            .collect();
        ensure(hs.len() == 1, || {
            format!(
                "V({k},{h},{n}) has {} stressed hyperplanes of size {h}",
                hs.len()
            )
        })?;
        let simple = relax(&v, hs[0]).map_err(e)?.simplify();
        let target = uniform(k, h + 1).map_err(e)?;
        ensure(simple.flats().is_isomorphic(&target.flats()), || {
            format!("V({k},{h},{n}): lattice not isomorphic")
        })?;
    }
    Ok("3 instances".into())
}

fn coefficient_laws(reg: &Registry) -> Outcome {
    let seen = reg.seen.lock().unwrap();
    for s in seen.iter() {
        ensure(s.z.is_palindromic(s.k), || {
            format!("{}: Z = {} not palindromic", s.label, s.z)
        })?;
        ensure(s.z.is_unimodal(), || {
            format!("{}: Z = {} not unimodal", s.label, s.z)
        })?;
        for (name, poly) in [("P", s.p.as_ref()), ("Q", s.q.as_ref()), ("Z", Some(&s.z))] {
            if let Some(f) = poly {
                ensure(f.is_nonnegative(), || {
                    format!("{}: {name} = {f} has a negative coefficient", s.label)
                })?;
            }
        }
        let g = gamma_expand(&s.z, s.k).map_err(|x| format!("{}: {x}", s.label))?;
        ensure(gamma_contract(&g) == s.z, || {
            format!("{}: gamma round trip fails", s.label)
        })?;
    }
    ensure(seen.len() > 300, || {
        format!("only {} instances recorded", seen.len())
    })?;
    Ok(format!("{} computed instances", seen.len()))
}

fn gamma_sweeps(reg: &Registry) -> Outcome {
    let mut corpus: Vec<CorpusEntry> = sparse_paving_corpus(200, 12, SWEEP_SEED)
        .map_err(e)?
        .into_iter()
        .map(|s| {
            CorpusEntry::seeded(
                format!("sparse paving k={} n={}", s.k, s.n),
                s.matroid(),
                s.seed,
            )
        })
        .collect();
    for (r, q) in [(2, 2), (2, 3), (3, 2)] {
        corpus.push(CorpusEntry::new(
            format!("PG({r},{q})"),
            projective_geometry(r, q).map_err(e)?,
        ));
    }
    for n in 1..=5 {
        corpus.push(CorpusEntry::new(
            format!("thagomizer({n})"),
            thagomizer(n).map_err(e)?,
        ));
        corpus.push(CorpusEntry::new(
            format!("K(2,{n})"),
            complete_bipartite_2n(n).map_err(e)?,
        ));
        corpus.push(CorpusEntry::new(format!("fan({n})"), fan(n).map_err(e)?));
    }
    for n in 3..=5 {
        corpus.push(CorpusEntry::new(
            format!("wheel({n})"),
            wheel(n).map_err(e)?,
        ));
        corpus.push(CorpusEntry::new(
            format!("whirl({n})"),
            whirl(n).map_err(e)?,
        ));
    }
    let results = gamma_positivity_sweep(&corpus);
    for r in &results {
        if let Some(z) = &r.z {
            reg.z_only(r.label.clone(), r.k, z.clone());
        }
    }
    let failures: Vec<String> = results
        .iter()
        .filter(|r| !r.ok())
        .map(|r| r.to_record().to_json_line())
        .collect();
    ensure(failures.is_empty(), || {
        format!("{} failures, first {}", failures.len(), failures[0])
    })?;
    Ok(format!("{} matroids gamma-positive", results.len()))
}

fn thagomizer_identities(reg: &Registry) -> Outcome {
    for n in 1..=4 {
        let c = reg.cache(format!("thagomizer({n})"), &thagomizer(n).map_err(e)?)?;
        ensure(c.p() == thagomizer_p(n).map_err(e)?, || {
            format!("T_{n}: P = {}", c.p())
        })?;
        ensure(
            c.gamma().map_err(e)? == thagomizer_gamma(n).map_err(e)?,
            || format!("T_{n}: gamma differs"),
        )?;
        if n >= 2 {
            let k2n = reg.cache(format!("K(2,{n})"), &complete_bipartite_2n(n).map_err(e)?)?;
            ensure(c.z() == k2n.z(), || {
                format!("Z(T_{n}) = {} but Z(K_2,{n}) = {}", c.z(), k2n.z())
            })?;
        }
    }
    Ok("n = 1..4".into())
}

fn tableaux() -> Outcome {
    let recs = tableaux_identity_suite(16);
    all_pass(&recs)?;
    let instances: u64 = recs
        .iter()
        .map(|r| r.params["instances"].as_u64().unwrap_or(0))
        .sum();
    Ok(format!("{} checks, {instances} instances", recs.len()))
}

fn appendix() -> Outcome {
    let recs = verify_appendix(30);
    all_pass(&recs)?;
    Ok(format!("{} checks", recs.len()))
}

fn degree_laws(reg: &Registry) -> Outcome {
    for h in 1..=9 {
        for k in 1..=h {
            let degs = [
                p_kh(k, h).map_err(e)?.degree(),
                q_kh(k, h).map_err(e)?.degree(),
                z_kh(k, h).map_err(e)?.degree(),
                g_kh(k, h).map_err(e)?.degree(),
            ];
            let want = [(k - 1) / 2, (k - 1) / 2, k - 1, k / 2];
            ensure(degs == want, || {
                format!("(k,h)=({k},{h}): degrees {degs:?}, expected {want:?}")
            })?;
        }
    }
    let mut members = 0;
    let mut corpus: Vec<(String, Matroid)> = paving_corpus()?
        .into_iter()
        .map(|(l, m, _)| (l, m))
        .collect();
    corpus.extend(
        relaxation_corpus()?
            .into_iter()
            .filter(|(_, m)| m.is_paving()),
    );
    for (label, m) in corpus {
        let prof = paving_profile(&m).map_err(|x| format!("{label}: {x}"))?;
        ensure(domination_check(&prof), || {
            format!("{label}: closed forms not dominated")
        })?;
        let c = reg.cache(label.clone(), &m)?;
        let (k, n) = (m.rank(), m.n());
        let dominated = c.p().dominated_by(&p_uniform(k, n).map_err(e)?)
            && c.q().dominated_by(&q_uniform(k, n).map_err(e)?)
            && c.z().dominated_by(&z_uniform(k, n).map_err(e)?);
        ensure(dominated, || {
            format!("{label}: measured P/Q/Z exceed the uniform values")
        })?;
        members += 1;
    }
    Ok(format!(
        "45 (k,h) pairs, domination on {members} paving matroids"
    ))
}

fn run(
    results: &mut BTreeMap<usize, (String, Outcome, f64)>,
    id: usize,
    name: &str,
    f: impl FnOnce() -> Outcome,
) {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
        Err(format!("panicked: {}", msg.unwrap_or_default()))
    });
    results.insert(
        id,
        (name.to_string(), outcome, start.elapsed().as_secs_f64()),
    );
}

fn main() {
    let reg = Registry::default();
    let mut results = BTreeMap::new();
    run(&mut results, 1, "uniform oracle agreement", || {
        uniform_oracle(&reg)
    });
    run(&mut results, 2, "relaxation-delta independence", || {
        delta_independence(&reg)
    });
    run(&mut results, 3, "paving master formulas", || {
        paving_formulas(&reg)
    });
    run(&mut results, 4, "structural deltas", structural_deltas);
    run(&mut results, 5, "relax/unrelax round trip", round_trip);
    run(
        &mut results,
        6,
        "simplified relaxation is uniform",
        simplified_relaxation,
    );
    run(&mut results, 8, "gamma-positivity sweeps", || {
        gamma_sweeps(&reg)
    });
    run(&mut results, 9, "thagomizer identities", || {
        thagomizer_identities(&reg)
    });
    run(&mut results, 10, "tableaux suite", tableaux);
    run(&mut results, 11, "appendix suite", appendix);
    run(&mut results, 12, "degree laws and domination", || {
        degree_laws(&reg)
    });
    // last, so it sees every instance computed above
    run(
        &mut results,
        7,
        "palindromic, unimodal, non-negative, gamma round trip",
        || coefficient_laws(&reg),
    );

    let mut failed = BTreeSet::new();
    for (id, (name, outcome, secs)) in &results {
        match outcome {
            Ok(detail) => println!("PASS  criterion {id:>2}: {name} ({detail}) [{secs:.1}s]"),
            Err(why) => {
                println!("FAIL  criterion {id:>2}: {name}: {why} [{secs:.1}s]");
                failed.insert(*id);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        results.len() - failed.len(),
        results.len()
    );
    if !failed.is_empty() {
        std::process::exit(1);
    }
}

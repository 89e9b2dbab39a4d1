use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::CheckRecord;
use crate::invariants::KlCache;
use crate::matroid::{Matroid, MatroidJson};
use crate::poly::{GammaVector, IntPoly};

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub label: String,
    pub matroid: Matroid,
    pub seed: Option<u64>,
}

impl CorpusEntry {
    pub fn new(label: impl Into<String>, matroid: Matroid) -> CorpusEntry {
        CorpusEntry {
            label: label.into(),
            matroid,
            seed: None,
        }
    }

    pub fn seeded(label: impl Into<String>, matroid: Matroid, seed: u64) -> CorpusEntry {
        CorpusEntry {
            label: label.into(),
            matroid,
            seed: Some(seed),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepEntry {
    pub label: String,
    pub n: usize,
    pub k: usize,
    pub seed: Option<u64>,
    pub z: Option<IntPoly>,
    pub gamma: Option<GammaVector>,
    pub positive: bool,
    pub unimodal: bool,
    pub error: Option<String>,
    #[serde(skip)]
    matroid: MatroidJson,
}

impl SweepEntry {
    pub fn ok(&self) -> bool {
        self.error.is_none() && self.positive && self.unimodal
    }

    /// On failure the witness carries the matroid, seed, Z and gamma.
    pub fn to_record(&self) -> CheckRecord {
        let params = json!({ "label": self.label, "n": self.n, "k": self.k, "seed": self.seed });
        let witness = (!self.ok()).then(|| {
            json!({
                "matroid": &self.matroid,
                "seed": self.seed,
                "z": self.z.as_ref().map(IntPoly::to_json),
                "gamma": self.gamma.as_ref().map(|g| g.as_poly().to_json()),
                "error": self.error,
            })
        });
        let mut rec = CheckRecord::new("gamma_positivity", params, self.ok(), witness);
        if let Some(g) = &self.gamma {
            if let serde_json::Value::Object(map) = &mut rec.params {
                map.insert("gamma".into(), g.as_poly().to_json());
            }
        }
        rec
    }
}

fn run(entry: &CorpusEntry) -> SweepEntry {
    let m = &entry.matroid;
    let cache = KlCache::new(m);
    let mut out = SweepEntry {
        label: entry.label.clone(),
        n: m.n(),
        k: m.rank(),
        seed: entry.seed,
        z: None,
        gamma: None,
        positive: false,
        unimodal: false,
        error: None,
        matroid: MatroidJson::from(m),
    };
    if let Err(e) = cache.verify() {
        out.error = Some(e.to_string());
        return out;
    }
    let z = cache.z();
    out.unimodal = z.is_unimodal();
    match cache.gamma() {
        Ok(g) => {
            out.positive = g.is_gamma_positive();
            out.gamma = Some(g);
        }
        Err(e) => out.error = Some(e.to_string()),
    }
    out.z = Some(z);
    out
}

/// Z, gamma, gamma-positivity and Z-unimodality for every entry, in input order.
pub fn gamma_positivity_sweep(corpus: &[CorpusEntry]) -> Vec<SweepEntry> {
    corpus.par_iter().map(run).collect()
}

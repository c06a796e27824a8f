//! Runs the exact oracle against [`predict`] and reports agreement per
//! invariant.
//!
//! Hilbert series, dimension and multiplicity come from the initial ideal
//! whether or not it is squarefree. Depth and regularity are read off the
//! Betti table of a squarefree initial ideal, which has the same extremal
//! Betti numbers as `J` itself; if the initial ideal is not squarefree under
//! either lex order those two are skipped.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{
    ideals_equal, initial_ideal, intersect, normal_form, Ideal, Monomial, PolyRing, RingDescriptor,
    TermOrder,
};
use crate::error::Result;
use crate::formulas::{generalized_bei, predict, prime_component, Prediction};
use crate::graph::{
    complete_multipartite, cut_sets, konig_path, PartiteSpec, PathWitness, CUT_SET_MAX_VERTICES,
};
use crate::monomial::{
    betti_table, hilbert_series, krull_dimension, multiplicity, MonomialIdeal, HOCHSTER_MAX_VARS,
};
use crate::DEFAULT_PRIME;

/// Default cap on `mn` for the Gröbner stages.
pub const GROEBNER_MAX_VARS: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub prime: u32,
    pub order: TermOrder,
    pub groebner_max_vars: usize,
    pub hochster_max_vars: usize,
    pub cut_set_max_vertices: usize,
    /// Further primes for the Betti computation on the same initial ideal.
    pub extra_primes: Vec<u32>,
    /// Also compute depth and regularity under the other lex order.
    pub cross_check_order: bool,
    /// Predict `cd` for characteristic zero (an interval).
    pub char_zero: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            prime: DEFAULT_PRIME,
            order: TermOrder::LexRowMajor,
            groebner_max_vars: GROEBNER_MAX_VARS,
            hochster_max_vars: HOCHSTER_MAX_VARS,
            cut_set_max_vertices: CUT_SET_MAX_VERTICES,
            extra_primes: Vec::new(),
            cross_check_order: false,
            char_zero: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantRecord {
    pub name: String,
    pub predicted: Value,
    pub computed: Option<Value>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpecEcho {
    pub m: usize,
    pub parts: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InvariantReport {
    pub spec: SpecEcho,
    pub order: String,
    pub prime: u32,
    pub invariants: Vec<InvariantRecord>,
    /// `None` when the Gröbner stage did not run.
    pub squarefree: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub timing_ms: BTreeMap<String, f64>,
}

impl InvariantReport {
    pub fn record(&self, name: &str) -> Option<&InvariantRecord> {
        self.invariants.iter().find(|r| r.name == name)
    }

    pub fn status(&self, name: &str) -> Option<Status> {
        self.record(name).map(|r| r.status)
    }

    pub fn computed(&self, name: &str) -> Option<&Value> {
        self.record(name).and_then(|r| r.computed.as_ref())
    }

    pub fn has_mismatch(&self) -> bool {
        self.invariants.iter().any(|r| r.status == Status::Mismatch)
    }

    pub fn count(&self, status: Status) -> usize {
        self.invariants
            .iter()
            .filter(|r| r.status == status)
            .count()
    }

    /// The report as JSON with the timing map emptied.
    pub fn to_json_without_timing(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v["timingMs"] = json!({});
        v
    }

    fn compare(&mut self, name: &str, predicted: Value, computed: Value) {
        let status = if predicted == computed {
            Status::Match
        } else {
            Status::Mismatch
        };
        self.invariants.push(InvariantRecord {
            name: name.to_string(),
            predicted,
            computed: Some(computed),
            status,
            reason: None,
        });
    }

    fn skip(&mut self, name: &str, predicted: Value, reason: impl Into<String>) {
        self.invariants.push(InvariantRecord {
            name: name.to_string(),
            predicted,
            computed: None,
            status: Status::Skipped,
            reason: Some(reason.into()),
        });
    }
}

struct Timer(Instant);

impl Timer {
    fn start() -> Self {
        Timer(Instant::now())
    }

    fn stop(self, report: &mut InvariantReport, stage: &str) {
        let ms = self.0.elapsed().as_secs_f64() * 1000.0;
        *report.timing_ms.entry(stage.to_string()).or_default() += ms;
    }
}

/// Size of a largest pairwise coprime subset, by branch and bound.
pub fn max_coprime_subset(monomials: &[Monomial]) -> usize {
    let supports: Vec<u64> = monomials.iter().map(Monomial::support).collect();
    let mut order: Vec<usize> = (0..supports.len()).collect();
    // Fewest conflicts first finds good incumbents early.
    let conflicts = |i: usize| {
        supports
            .iter()
            .enumerate()
            .filter(|&(j, s)| j != i && s & supports[i] != 0)
            .count()
    };
    order.sort_by_key(|&i| (conflicts(i), i));
    let mut best = 0;
    search(&order, 0, &supports, &mut best);
    best
}

fn search(cands: &[usize], chosen: usize, supports: &[u64], best: &mut usize) {
    if chosen + cands.len() <= *best {
        return;
    }
    let Some((&v, rest)) = cands.split_first() else {
        *best = chosen;
        return;
    };
    let compatible: Vec<usize> = rest
        .iter()
        .copied()
        .filter(|&u| supports[u] & supports[v] == 0)
        .collect();
    search(&compatible, chosen + 1, supports, best);
    search(rest, chosen, supports, best);
}

/// Outcome of the König-type check for the classical `J_G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct KonigCheck {
    /// Height of `J_G` as the least height among its minimal primes.
    pub height: usize,
    pub path: PathWitness,
    pub path_valid: bool,
    /// Largest pairwise coprime subset of the relabelled leading terms.
    pub coprime_count: usize,
    pub initial_terms_coprime: bool,
}

/// Builds the path, validates it, relabels the vertices in path order and
/// checks that the lex-row-major leading terms `x_{1,v_i} x_{2,v_{i+1}}` of
/// the path binomials are pairwise coprime.
pub fn konig_check(spec: &PartiteSpec) -> Result<KonigCheck> {
    let n = spec.n();
    // Minimal primes of J_G: all minors (height n - 1) and A_k (height
    // 2(n - n_k)) for n_k ≥ 2.
    let height = spec
        .parts()
        .iter()
        .filter(|&&nk| nk >= 2)
        .map(|&nk| 2 * (n - nk))
        .fold(n - 1, usize::min);
    let path = konig_path(spec)?;
    let path_valid = path.is_valid_in(&complete_multipartite(spec));
    let len = path.length();
    let coprime_count = if len == 0 {
        0
    } else {
        let ring = RingDescriptor::new(2, len + 1, DEFAULT_PRIME)?;
        let pr = PolyRing::new(ring, TermOrder::LexRowMajor);
        let leads: Vec<Monomial> = (1..=len)
            .map(|q| pr.minor(1, 2, q, q + 1).leading_monomial().unwrap())
            .collect();
        max_coprime_subset(&leads)
    };
    Ok(KonigCheck {
        height,
        path,
        path_valid,
        coprime_count,
        initial_terms_coprime: coprime_count == len,
    })
}

fn other_lex(order: TermOrder) -> TermOrder {
    match order {
        TermOrder::LexColumnMajor => TermOrder::LexRowMajor,
        _ => TermOrder::LexColumnMajor,
    }
}

/// The full pipeline for one instance. Stages over their caps are skipped,
/// never aborted; predictions are always present.
pub fn verify(spec: &PartiteSpec, opts: &VerifyOptions) -> Result<InvariantReport> {
    let t = Timer::start();
    let pred = predict(spec, opts.char_zero);
    let mut report = InvariantReport {
        spec: SpecEcho {
            m: spec.m(),
            parts: spec.parts().to_vec(),
        },
        order: opts.order.name().to_string(),
        prime: opts.prime,
        invariants: Vec::new(),
        squarefree: None,
        notes: Vec::new(),
        timing_ms: BTreeMap::new(),
    };
    t.stop(&mut report, "predict");

    let graph = complete_multipartite(spec);
    let (m, n) = (spec.m(), spec.n());
    let nvars = m * n;

    let t = Timer::start();
    match cut_sets(&graph, opts.cut_set_max_vertices) {
        Ok(sets) => {
            let computed: Vec<Vec<usize>> = sets.into_iter().map(|c| c.vertices).collect();
            report.compare("cutSets", json!(pred.cut_sets), json!(computed));
        }
        Err(e) => report.skip("cutSets", json!(pred.cut_sets), e.to_string()),
    }
    t.stop(&mut report, "cutSets");

    let t = Timer::start();
    let konig = konig_check(spec)?;
    let target = crate::graph::konig_height(spec);
    report.compare("konigHeight", json!(target), json!(konig.height));
    report.compare(
        "konigPath",
        json!(target),
        if konig.path_valid {
            json!(konig.path.length())
        } else {
            Value::Null
        },
    );
    report.compare("konigCoprime", json!(target), json!(konig.coprime_count));
    if konig.path.construction == crate::graph::PathConstruction::GreedyLargestPart
        && !spec.all_ones()
    {
        report.notes.push(
            "traceable case: spanning path built greedily instead of by the (j, i)-ordered \
             interleaving, which can join two vertices of the same block when r = 2"
                .into(),
        );
    }
    t.stop(&mut report, "konig");

    report.skip(
        "cd",
        serde_json::to_value(&pred.cd).unwrap(),
        "cohomological dimension is predicted only",
    );
    if pred.mult_source == crate::formulas::MultiplicitySource::SeriesAtOne && spec.r() >= 3 {
        report
            .notes
            .push("multiplicity for r >= 3 is predicted as N(1) of the predicted series".into());
    }

    if nvars > opts.groebner_max_vars {
        let reason = format!(
            "mn = {nvars} exceeds the Gröbner cap {}",
            opts.groebner_max_vars
        );
        for name in [
            "hilbert",
            "dim",
            "mult",
            "height",
            "decomposition",
            "containment",
            "depth",
            "reg",
        ] {
            report.skip(name, predicted_value(&pred, name), reason.clone());
        }
        return Ok(report);
    }

    let t = Timer::start();
    let mut j = generalized_bei(m, &graph, opts.prime)?;
    let ring = *j.ring();
    let mut order = opts.order;
    let mut ini = initial_ideal(&ring, j.groebner_basis(order)?);
    if !ini.is_squarefree() {
        let alt = other_lex(order);
        let alt_ini = initial_ideal(&ring, j.groebner_basis(alt)?);
        report.notes.push(format!(
            "initial ideal under {order} is not squarefree; tried {alt}"
        ));
        if alt_ini.is_squarefree() {
            order = alt;
            ini = alt_ini;
            report.order = order.name().to_string();
        }
    }
    let squarefree = ini.is_squarefree();
    report.squarefree = Some(squarefree);
    t.stop(&mut report, "groebner");

    let t = Timer::start();
    let h = hilbert_series(&ini);
    let dim = krull_dimension(&h);
    report.compare("hilbert", json!(pred.hilbert), json!(h));
    report.compare("dim", json!(pred.dim), json!(dim));
    report.compare("mult", json!(pred.mult), json!(multiplicity(&h)?));
    report.compare("height", json!(pred.height), json!(nvars - dim));
    t.stop(&mut report, "hilbert");

    let t = Timer::start();
    let components: Vec<Ideal> = pred
        .cut_sets
        .iter()
        .map(|cut| prime_component(m, &graph, cut, opts.prime))
        .collect::<Result<_>>()?;
    let mut meet = components[0].clone();
    for c in &components[1..] {
        meet = intersect(&meet, c)?;
    }
    report.compare(
        "decomposition",
        json!(true),
        json!(ideals_equal(&j, &meet, TermOrder::LexRowMajor)?),
    );
    let pr = PolyRing::new(ring, TermOrder::LexRowMajor);
    let mut contained = true;
    for c in &components {
        let gb = c.reduced_basis(TermOrder::LexRowMajor)?;
        for g in j.generators() {
            if !normal_form(&pr, g, &gb)?.is_zero() {
                contained = false;
            }
        }
    }
    report.compare("containment", json!(true), json!(contained));
    t.stop(&mut report, "decomposition");

    let t = Timer::start();
    hochster_stage(&mut report, &pred, &ini, opts, "")?;
    if opts.cross_check_order {
        let alt = other_lex(order);
        let alt_ini = initial_ideal(&ring, j.groebner_basis(alt)?);
        let suffix = format!("[{alt}]");
        hochster_stage(&mut report, &pred, &alt_ini, opts, &suffix)?;
    }
    t.stop(&mut report, "betti");
    Ok(report)
}

fn hochster_stage(
    report: &mut InvariantReport,
    pred: &Prediction,
    ini: &MonomialIdeal,
    opts: &VerifyOptions,
    suffix: &str,
) -> Result<()> {
    let names = [format!("depth{suffix}"), format!("reg{suffix}")];
    let predicted = [json!(pred.depth), json!(pred.reg)];
    let reason = if !ini.is_squarefree() {
        Some("squarefree-check-failed".to_string())
    } else if ini.nvars() > opts.hochster_max_vars {
        Some(format!(
            "mn = {} exceeds the Hochster cap {}",
            ini.nvars(),
            opts.hochster_max_vars
        ))
    } else {
        None
    };
    if let Some(reason) = reason {
        for (name, p) in names.iter().zip(predicted) {
            report.skip(name, p, reason.clone());
        }
        return Ok(());
    }
    let table = betti_table(ini, opts.prime, opts.hochster_max_vars)?;
    report.compare(&names[0], predicted[0].clone(), json!(table.depth()));
    report.compare(&names[1], predicted[1].clone(), json!(table.reg()));
    for &p in &opts.extra_primes {
        let t = betti_table(ini, p, opts.hochster_max_vars)?;
        report.compare(
            &format!("depth{suffix}@{p}"),
            predicted[0].clone(),
            json!(t.depth()),
        );
        report.compare(
            &format!("reg{suffix}@{p}"),
            predicted[1].clone(),
            json!(t.reg()),
        );
    }
    Ok(())
}

fn predicted_value(pred: &Prediction, name: &str) -> Value {
    match name {
        "hilbert" => json!(pred.hilbert),
        "dim" => json!(pred.dim),
        "mult" => json!(pred.mult),
        "height" => json!(pred.height),
        "depth" => json!(pred.depth),
        "reg" => json!(pred.reg),
        _ => json!(true),
    }
}

/// All specs with `2 ≤ m ≤ max_m` and `2 ≤ n ≤ max_n`, every partition of
/// `n` into at least two parts, ordered by `m`, `n`, then parts.
pub fn enumerate_specs(max_m: usize, max_n: usize) -> Vec<PartiteSpec> {
    fn partitions(n: usize, min: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for p in min..=n {
            acc.push(p);
            partitions(n - p, p, acc, out);
            acc.pop();
        }
    }
    let mut specs = Vec::new();
    for m in 2..=max_m {
        for n in 2..=max_n {
            let mut parts = Vec::new();
            partitions(n, 1, &mut Vec::new(), &mut parts);
            parts.sort();
            for p in parts.into_iter().filter(|p| p.len() >= 2) {
                specs.push(PartiteSpec::new(m, p).expect("valid partition"));
            }
        }
    }
    specs
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    #[serde(rename = "match")]
    pub matched: usize,
    pub mismatch: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepResult {
    pub reports: Vec<InvariantReport>,
    pub summary: Summary,
}

/// Verifies every spec, in parallel; reports keep the input order.
pub fn sweep(specs: &[PartiteSpec], opts: &VerifyOptions) -> Result<SweepResult> {
    let reports: Vec<InvariantReport> = specs
        .par_iter()
        .map(|s| verify(s, opts))
        .collect::<Result<_>>()?;
    let mut summary = Summary::default();
    for r in &reports {
        summary.matched += r.count(Status::Match);
        summary.mismatch += r.count(Status::Mismatch);
        summary.skipped += r.count(Status::Skipped);
    }
    Ok(SweepResult { reports, summary })
}

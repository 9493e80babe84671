use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{Map, Value};

use qcongruence_core::algebra::BigRational;
use qcongruence_core::padic::{self, PadicError, PadicVerdict};
use qcongruence_core::qseries::QSeriesError;
use qcongruence_core::verify::{self, CongruenceVerdict, SpecializationSampler, TrialReport, VerifyError};

use crate::claims::{Claim, Range};
use crate::config::RunConfig;
use crate::report::{
    rational_string, Entry, EntryStatus, RejectionEntry, Summary, VerificationReport, Witness, TOOL,
};

/// Fixed evaluation points for the limit check.
pub const LHOPITAL_POINTS: [(i64, i64); 3] = [(2, 3), (5, 7), (-3, 4)];

/// The reading used for the ambiguous `(q,;q²)_k` in the n ≡ 3 (mod 4) claim.
pub const GUO_B_READING: &str = "(q;q^2)_k";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Instance {
    claim: Claim,
    index: u64,
    point: usize,
}

fn instances(cfg: &RunConfig) -> Vec<Instance> {
    let mut out = Vec::new();
    for claim in cfg.claim.expand() {
        let values = match claim.range() {
            Range::N => &cfg.n,
            Range::P => &cfg.p,
        };
        for &index in values {
            let points = if claim == Claim::Lhopital {
                LHOPITAL_POINTS.len()
            } else {
                1
            };
            out.extend((0..points).map(|point| Instance { claim, index, point }));
        }
    }
    out
}

/// Seed for one (claim, n) pair, so that adding or removing other
/// instances does not change its samples.
pub fn derive_seed(seed: u64, claim: &str, index: u64) -> u64 {
    // FNV-1a over the claim id and index, then a splitmix64 finalizer
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in claim.bytes().chain(index.to_le_bytes()) {
        h ^= byte as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    let mut z = h ^ seed;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Default)]
struct Outcome {
    entries: Vec<Entry>,
    rejections: Vec<RejectionEntry>,
}

fn instance_map(inst: &Instance, extra: &[(&str, &str)]) -> Map<String, Value> {
    let mut m = Map::new();
    let key = match inst.claim.range() {
        Range::N => "n",
        Range::P => "p",
    };
    m.insert(key.into(), Value::from(inst.index));
    if inst.claim == Claim::Lhopital {
        let (u, v) = LHOPITAL_POINTS[inst.point];
        m.insert("q0".into(), Value::from(rational_string(&BigRational::new(u.into(), v.into()))));
    }
    for (k, v) in extra {
        m.insert((*k).into(), Value::from(*v));
    }
    m
}

fn bare(claim: Claim, instance: Map<String, Value>, status: EntryStatus) -> Entry {
    Entry {
        claim: claim.id(),
        instance,
        trial: None,
        params: None,
        check: None,
        status,
        reason: None,
        witness: None,
        elapsed_ms: None,
    }
}

fn errored(claim: Claim, instance: Map<String, Value>, status: EntryStatus, reason: String) -> Outcome {
    let mut e = bare(claim, instance, status);
    e.reason = Some(reason);
    Outcome {
        entries: vec![e],
        rejections: Vec::new(),
    }
}

fn q_error_status(e: &VerifyError) -> EntryStatus {
    match e {
        VerifyError::QSeries(QSeriesError::WrongResidueClass { .. }) | VerifyError::DegenerateEvaluationPoint(_) => {
            EntryStatus::Skipped
        }
        _ => EntryStatus::Fail,
    }
}

fn p_error_status(e: &PadicError) -> EntryStatus {
    match e {
        PadicError::WrongResidueClass { .. } | PadicError::NotOddPrime { .. } | PadicError::PrimeTooSmall { .. } => {
            EntryStatus::Skipped
        }
        _ => EntryStatus::Fail,
    }
}

fn single(claim: Claim, instance: Map<String, Value>, r: Result<CongruenceVerdict, VerifyError>) -> Outcome {
    match r {
        Ok(v) => {
            let mut e = bare(claim, instance, v.status.into());
            e.witness = Some(Witness::congruence(&v));
            Outcome {
                entries: vec![e],
                rejections: Vec::new(),
            }
        }
        Err(e) => errored(claim, instance, q_error_status(&e), e.to_string()),
    }
}

fn params_map(params: &[(&'static str, BigRational)]) -> Map<String, Value> {
    params
        .iter()
        .map(|(k, v)| ((*k).to_string(), Value::from(rational_string(v))))
        .collect()
}

fn sampled(claim: Claim, instance: Map<String, Value>, r: Result<TrialReport, VerifyError>) -> Outcome {
    let report = match r {
        Ok(r) => r,
        Err(e) => return errored(claim, instance, q_error_status(&e), e.to_string()),
    };
    let entries = report
        .verdicts
        .iter()
        .map(|t| Entry {
            trial: Some(t.trial),
            params: Some(params_map(&t.params)),
            check: Some(t.check.clone()),
            witness: Some(Witness::congruence(&t.verdict)),
            ..bare(claim, instance.clone(), t.verdict.status.into())
        })
        .collect();
    let rejections = report
        .rejections
        .iter()
        .map(|r| RejectionEntry {
            claim: claim.id(),
            instance: instance.clone(),
            trial: r.trial,
            params: params_map(&r.params),
            reason: r.reason.clone(),
        })
        .collect();
    Outcome { entries, rejections }
}

fn padic_outcome(claim: Claim, inst: &Instance, r: Result<PadicVerdict, PadicError>) -> Outcome {
    let v = match r {
        Ok(v) => v,
        Err(e) => return errored(claim, instance_map(inst, &[]), p_error_status(&e), e.to_string()),
    };
    let extra: Vec<(&str, &str)> = v.branch.iter().map(|b| ("branch", *b)).collect();
    let instance = instance_map(inst, &extra);
    let entries = v
        .checks
        .iter()
        .map(|c| Entry {
            check: Some(c.label.clone()),
            witness: Some(Witness::residues(c)),
            ..bare(claim, instance.clone(), c.status.into())
        })
        .collect();
    Outcome {
        entries,
        rejections: Vec::new(),
    }
}

fn dispatch(inst: &Instance, cfg: &RunConfig) -> Outcome {
    let claim = inst.claim;
    let n = inst.index as usize;
    let p = inst.index;
    let mut sampler = SpecializationSampler::new(derive_seed(cfg.seed, claim.id(), inst.index));
    let t = cfg.trials;
    let plain = || instance_map(inst, &[]);
    match claim {
        Claim::Thm1 => single(claim, plain(), verify::verify_thm1(n)),
        Claim::GuoA => single(claim, plain(), verify::verify_guo_a(n)),
        Claim::GuoB => single(claim, instance_map(inst, &[("reading", GUO_B_READING)]), verify::verify_guo_b(n)),
        Claim::Thm2 => sampled(claim, plain(), verify::verify_thm2(n, t, &mut sampler)),
        Claim::WeiBb => sampled(claim, plain(), verify::verify_wei_bb(n, t, &mut sampler)),
        Claim::WeiCc => sampled(claim, plain(), verify::verify_wei_cc(n, t, &mut sampler)),
        Claim::Units => sampled(claim, plain(), verify::verify_unit_congruences(n, t, &mut sampler)),
        Claim::Factorizations => sampled(claim, plain(), verify::verify_factorizations(n, t, &mut sampler)),
        Claim::WeiDd => sampled(claim, plain(), verify::verify_wei_dd(n, t, &mut sampler)),
        Claim::WhippleA => sampled(claim, plain(), verify::verify_whipple_a(n, t, &mut sampler)),
        Claim::WhippleB => sampled(claim, plain(), verify::verify_whipple_b(n, t, &mut sampler)),
        Claim::Lhopital => {
            let (u, v) = LHOPITAL_POINTS[inst.point];
            let q0 = BigRational::new(u.into(), v.into());
            match verify::verify_lhopital(n, &q0) {
                Ok(v) => {
                    let mut e = bare(claim, plain(), v.status.into());
                    e.witness = Some(Witness::limit(&v));
                    Outcome {
                        entries: vec![e],
                        rejections: Vec::new(),
                    }
                }
                Err(e) => errored(claim, plain(), q_error_status(&e), e.to_string()),
            }
        }
        Claim::Hamme => padic_outcome(claim, inst, padic::verify_hamme(p)),
        Claim::Long => padic_outcome(claim, inst, padic::verify_long_ramakrishna(p)),
        Claim::WeiFull => padic_outcome(claim, inst, padic::verify_wei_full(p)),
        Claim::Corollary => padic_outcome(claim, inst, padic::verify_corollary(p)),
        Claim::Prop1 => padic_outcome(claim, inst, padic::verify_prop1(p)),
        Claim::WangPan => padic_outcome(claim, inst, padic::verify_wang_pan(p, cfg.guard)),
        Claim::Sun => padic_outcome(claim, inst, padic::verify_sun(p)),
        Claim::Reflection => padic_outcome(claim, inst, padic::verify_reflection_expansion(p, cfg.guard)),
        Claim::All => unreachable!("expanded before dispatch"),
    }
}

/// Runs every selected instance (concurrently) and assembles the report in
/// a fixed order: by claim id, then instance, then trial.
pub fn run(cfg: &RunConfig) -> VerificationReport {
    let work = instances(cfg);
    let outcomes: Vec<(Instance, Outcome)> = work
        .par_iter()
        .map(|inst| {
            let start = Instant::now();
            let mut out = dispatch(inst, cfg);
            if cfg.timings {
                let ms = start.elapsed().as_millis() as u64;
                for e in &mut out.entries {
                    e.elapsed_ms = Some(ms);
                }
            }
            (*inst, out)
        })
        .collect();

    let mut keyed: Vec<_> = outcomes.into_iter().collect();
    keyed.sort_by_key(|(inst, _)| (inst.claim.id(), inst.index, inst.point));
    let mut entries = Vec::new();
    let mut rejections = Vec::new();
    for (_, out) in keyed {
        entries.extend(out.entries);
        rejections.extend(out.rejections);
    }
    let summary = Summary::tally(&entries, &rejections);
    VerificationReport {
        tool: TOOL,
        version: env!("CARGO_PKG_VERSION"),
        config: cfg.clone(),
        entries,
        rejections,
        summary,
    }
}

/// Per-claim tallies followed by one line per failing entry.
pub fn human_summary(report: &VerificationReport) -> String {
    let mut per_claim: BTreeMap<&str, Summary> = BTreeMap::new();
    for e in &report.entries {
        let s = per_claim.entry(e.claim).or_default();
        s.entries += 1;
        match e.status {
            EntryStatus::Pass => s.pass += 1,
            EntryStatus::Fail => s.fail += 1,
            EntryStatus::Inapplicable => s.inapplicable += 1,
            EntryStatus::Skipped => s.skipped += 1,
        }
    }
    for r in &report.rejections {
        per_claim.entry(r.claim).or_default().rejected_samples += 1;
    }
    let mut out = String::new();
    for (claim, s) in &per_claim {
        let _ = writeln!(
            out,
            "{claim:<15} pass {:>4}  fail {:>3}  inapplicable {:>3}  skipped {:>3}  rejected {:>3}",
            s.pass, s.fail, s.inapplicable, s.skipped, s.rejected_samples
        );
    }
    for e in report.entries.iter().filter(|e| e.status == EntryStatus::Fail) {
        let instance = Value::Object(e.instance.clone());
        let _ = write!(out, "FAIL {} {}", e.claim, instance);
        if let Some(t) = e.trial {
            let _ = write!(out, " trial {t}");
        }
        if let Some(c) = &e.check {
            let _ = write!(out, " [{c}]");
        }
        if let Some(r) = &e.reason {
            let _ = write!(out, ": {r}");
        }
        out.push('\n');
    }
    let s = &report.summary;
    let _ = writeln!(
        out,
        "total: {} entries, {} pass, {} fail, {} inapplicable, {} skipped, {} rejected samples",
        s.entries, s.pass, s.fail, s.inapplicable, s.skipped, s.rejected_samples
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{Cli, Command};
    use clap::Parser;

    fn config(argv: &[&str]) -> RunConfig {
        match Cli::try_parse_from(argv).unwrap().command {
            Command::Verify(a) => RunConfig::from_args(&a).unwrap(),
            Command::ListClaims => unreachable!(),
        }
    }

    #[test]
    fn seeds_depend_on_claim_and_index() {
        let a = derive_seed(42, "thm2", 5);
        assert_eq!(a, derive_seed(42, "thm2", 5));
        assert_ne!(a, derive_seed(42, "thm2", 9));
        assert_ne!(a, derive_seed(42, "wei-bb", 5));
        assert_ne!(a, derive_seed(43, "thm2", 5));
    }

    #[test]
    fn single_pass() {
        let r = run(&config(&["qcongruence", "verify", "thm1", "--n", "1"]));
        assert_eq!(r.entries.len(), 1);
        assert_eq!(r.entries[0].status, EntryStatus::Pass);
        assert_eq!(r.summary.pass, 1);
    }

    #[test]
    fn wrong_class_is_skipped() {
        let r = run(&config(&["qcongruence", "verify", "guo-b", "--n", "5"]));
        assert_eq!(r.entries.len(), 1);
        assert_eq!(r.entries[0].status, EntryStatus::Skipped);
        assert_eq!(r.summary.fail, 0);
    }

    #[test]
    fn entries_sorted_and_tallied() {
        let r = run(&config(&["qcongruence", "verify", "all", "--n", "5,3", "--p", "13,5", "--trials", "2"]));
        let keys: Vec<_> = r.entries.iter().map(|e| e.claim).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(r.summary, Summary::tally(&r.entries, &r.rejections));
        assert_eq!(r.summary.fail, 0, "{}", human_summary(&r));
    }
}
